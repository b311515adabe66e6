use meshkit::{
    make_graded, make_structured, make_trimesh_annulus_sector, make_trimesh_unit_square,
    RegionRule, TriMesh,
};
use proptest::prelude::*;

/// Brute-force orientation-and-index audit, independent of TriMesh::validate.
fn audit_trimesh(m: &TriMesh) {
    assert_eq!(m.region_id.len(), m.triangles.len());
    assert!(!m.boundary_nodes.is_empty());
    for &(x, y) in &m.nodes {
        assert!(x.is_finite() && y.is_finite());
    }
    for tri in &m.triangles {
        for &n in tri {
            assert!(n < m.nodes.len());
        }
        let (xa, ya) = m.nodes[tri[0]];
        let (xb, yb) = m.nodes[tri[1]];
        let (xc, yc) = m.nodes[tri[2]];
        let twice_area = (xb - xa) * (yc - ya) - (xc - xa) * (yb - ya);
        assert!(twice_area > 0.0, "flipped triangle {tri:?}");
    }
    for i in 0..m.nodes.len() {
        for j in (i + 1)..m.nodes.len() {
            let close = (m.nodes[i].0 - m.nodes[j].0).abs() <= 1e-12
                && (m.nodes[i].1 - m.nodes[j].1).abs() <= 1e-12;
            assert!(!close, "nodes {i} and {j} coincide");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graded_spacings_sum_and_ratio(
        n_stream in 2usize..64,
        half in 1usize..32,
        ratio in 1.0f64..3.0,
    ) {
        let n_cross = 2 * half;
        let g = make_graded(n_stream, n_cross, ratio).unwrap();

        let cross_sum: f64 = g.cross_spacings.iter().sum();
        prop_assert!((cross_sum - 1.0).abs() < 1e-12);
        let stream_sum: f64 = g.stream_spacings.iter().sum();
        prop_assert!((stream_sum - 1.0).abs() < 1e-12);

        // Mirror symmetry about the midline.
        for j in 0..half {
            prop_assert!((g.cross_spacings[j] - g.cross_spacings[n_cross - 1 - j]).abs() < 1e-12);
        }
        // Constant adjacent ratio on each half.
        for j in 0..half.saturating_sub(1) {
            let r = g.cross_spacings[j + 1] / g.cross_spacings[j];
            prop_assert!((r - ratio).abs() < 1e-9, "ratio {} at {}", r, j);
        }
        for &s in &g.cross_spacings {
            prop_assert!(s > 0.0 && s.is_finite());
        }
    }

    #[test]
    fn structured_centers_finite_and_bounded(nx in 2usize..100, ny in 2usize..100) {
        let g = make_structured(nx, ny).unwrap();
        for (x, y) in g.centers() {
            prop_assert!(x.is_finite() && y.is_finite());
            prop_assert!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0);
        }
    }
}

#[test]
fn generated_trimeshes_pass_independent_audit() {
    for (nr, na, rule) in [
        (2, 4, RegionRule::Uniform),
        (3, 6, RegionRule::AngularHalves),
        (8, 32, RegionRule::Rings(3)),
        (5, 12, RegionRule::Rings(2)),
    ] {
        let m = make_trimesh_annulus_sector(nr, na, 0.5, 1.0, rule).unwrap();
        audit_trimesh(&m);
        assert_eq!(m.n_triangles(), 2 * nr * na);
    }
    for n in [2, 5, 9] {
        let m = make_trimesh_unit_square(n).unwrap();
        audit_trimesh(&m);
        assert_eq!(m.n_triangles(), 2 * n * n);
    }
}

#[test]
fn ring_rule_produces_requested_band_count() {
    let m = make_trimesh_annulus_sector(6, 8, 0.5, 1.0, RegionRule::Rings(3)).unwrap();
    assert_eq!(m.regions(), vec![0, 1, 2]);
}
