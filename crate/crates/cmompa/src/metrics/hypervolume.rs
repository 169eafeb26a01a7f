//! Exact hypervolume: sorted sweep for two objectives, slicing for three.

/// Lebesgue measure of the union of boxes [p, z] over all points p that
/// strictly improve on the reference `z` in every coordinate. Points with
/// any coordinate at or beyond `z` contribute nothing and are dropped.
pub fn hv(points: &[Vec<f64>], z: &[f64]) -> f64 {
    let contributing: Vec<&Vec<f64>> = points
        .iter()
        .filter(|p| p.iter().zip(z).all(|(a, b)| a < b))
        .collect();
    if contributing.is_empty() {
        return 0.0;
    }
    match z.len() {
        1 => {
            let best = contributing.iter().map(|p| p[0]).fold(f64::INFINITY, f64::min);
            z[0] - best
        }
        2 => hv2(&contributing, z),
        3 => hv3(&contributing, z),
        m => panic!("exact hypervolume implemented for m <= 3, got {m}"),
    }
}

fn hv2(points: &[&Vec<f64>], z: &[f64]) -> f64 {
    let mut sorted: Vec<&Vec<f64>> = points.to_vec();
    sorted.sort_by(|a, b| a[0].partial_cmp(&b[0]).unwrap());
    let mut area = 0.0;
    let mut ceiling = z[1];
    for p in sorted {
        if p[1] < ceiling {
            area += (z[0] - p[0]) * (ceiling - p[1]);
            ceiling = p[1];
        }
    }
    area
}

fn hv3(points: &[&Vec<f64>], z: &[f64]) -> f64 {
    // Sweep the third axis: between consecutive cut heights the cross
    // section is the 2-D hypervolume of everything at or below the slice.
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a][2].partial_cmp(&points[b][2]).unwrap());

    let mut volume = 0.0;
    let mut active: Vec<Vec<f64>> = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let level = points[order[i]][2];
        while i < order.len() && points[order[i]][2] == level {
            active.push(points[order[i]][..2].to_vec());
            i += 1;
        }
        let next_level = if i < order.len() { points[order[i]][2] } else { z[2] };
        let refs: Vec<&Vec<f64>> = active.iter().collect();
        volume += hv2(&refs, &z[..2]) * (next_level - level);
    }
    volume
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn unit_box_from_the_origin() {
        assert_abs_diff_eq!(hv(&[vec![0.0, 0.0]], &[1.0, 1.0]), 1.0);
    }

    #[test]
    fn quarter_box() {
        assert_abs_diff_eq!(hv(&[vec![0.5, 0.5]], &[1.0, 1.0]), 0.25);
    }

    #[test]
    fn two_points_inclusion_exclusion() {
        let points = vec![vec![0.0, 0.5], vec![0.5, 0.0]];
        assert_abs_diff_eq!(hv(&points, &[1.0, 1.0]), 0.75);
    }

    #[test]
    fn dominated_points_do_not_change_the_measure() {
        let mut points = vec![vec![0.0, 0.5], vec![0.5, 0.0]];
        let base = hv(&points, &[1.0, 1.0]);
        points.push(vec![0.6, 0.6]);
        assert_abs_diff_eq!(hv(&points, &[1.0, 1.0]), base);
    }

    #[test]
    fn points_outside_the_reference_contribute_nothing() {
        let points = vec![vec![1.5, 0.0], vec![0.0, 1.0]];
        assert_abs_diff_eq!(hv(&points, &[1.0, 1.0]), 0.0);
    }

    #[test]
    fn octant_box_in_three_dimensions() {
        assert_abs_diff_eq!(hv(&[vec![0.5, 0.5, 0.5]], &[1.0, 1.0, 1.0]), 0.125);
    }

    #[test]
    fn three_dimensional_union() {
        let z = [1.0, 1.0, 1.0];
        // The origin alone dominates the whole unit cube.
        let points = vec![vec![0.0, 0.0, 0.0], vec![0.5, 0.5, 0.5]];
        assert_abs_diff_eq!(hv(&points, &z), 1.0);
        // Inclusion-exclusion: [.5,1]x[0,1]x[0,1] = .5 plus
        // [0,1]x[.5,1]x[.5,1] = .25 minus the overlap [.5,1]^3 = .125.
        let points = vec![vec![0.5, 0.0, 0.0], vec![0.0, 0.5, 0.5]];
        assert_abs_diff_eq!(hv(&points, &z), 0.5 + 0.25 - 0.125);
    }
}
