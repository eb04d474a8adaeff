//! Property tests for principal polygons.

use omfactor::exactmath::{Rat, ValOrInf};
use omfactor::polygons::{lambda_component, lattice_index, polygon_add, polygon_index, principal_envelope, PrincipalPolygon};
use proptest::prelude::*;

/// A point cloud: some leading zero coefficients, then ordinates <= 30.
fn cloud() -> impl Strategy<Value = Vec<(i64, ValOrInf)>> {
    (0usize..4, prop::collection::vec(prop::option::weighted(0.8, 0i64..=30), 1..=27)).prop_map(|(lead, ys)| {
        let mut pts: Vec<(i64, ValOrInf)> = (0..lead).map(|i| (i as i64, ValOrInf::Inf)).collect();
        let mut ys = ys;
        ys[0] = Some(ys[0].unwrap_or(7));
        for (j, y) in ys.into_iter().enumerate() {
            pts.push(((lead + j) as i64, y.map_or(ValOrInf::Inf, ValOrInf::int)));
        }
        pts
    })
}

fn env(pts: &[(i64, ValOrInf)]) -> PrincipalPolygon {
    principal_envelope(pts).unwrap()
}

fn degree(n: &PrincipalPolygon) -> i64 {
    n.sides.iter().map(|s| s.degree()).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn index_formula_matches_lattice_count(pts in cloud()) {
        let n = env(&pts);
        prop_assert_eq!(polygon_index(&n), lattice_index(&n));
    }

    #[test]
    fn envelope_is_convex_and_below_points(pts in cloud()) {
        let n = env(&pts);
        for w in n.sides.windows(2) {
            prop_assert!(w[0].slope < w[1].slope);
        }
        let (x_end, y_end) = n.end();
        for (i, u) in &pts {
            if let Some(u) = u.finite() {
                prop_assert!(*i >= n.inf_len);
                if *i <= x_end {
                    prop_assert!(u >= n.ordinate_at(*i).unwrap());
                } else {
                    prop_assert!(u >= y_end);
                }
            }
        }
        let first_finite = pts.iter().position(|(_, u)| !u.is_inf()).unwrap() as i64;
        prop_assert_eq!(n.inf_len, first_finite);
    }

    #[test]
    fn sum_is_additive(a in cloud(), b in cloud()) {
        let (n, m) = (env(&a), env(&b));
        let s = polygon_add(&n, &m);
        prop_assert_eq!(s.length(), n.length() + m.length());
        prop_assert_eq!(s.finite_height(), n.finite_height() + m.finite_height());
        prop_assert_eq!(degree(&s), degree(&n) + degree(&m));
        prop_assert_eq!(s.inf_len, n.inf_len + m.inf_len);
    }

    #[test]
    fn lambda_components_add(a in cloud(), b in cloud(), h in 1i64..8, e in 1i64..8) {
        let (n, m) = (env(&a), env(&b));
        let s = polygon_add(&n, &m);
        let (cn, cm, cs) = (lambda_component(&n, h, e), lambda_component(&m, h, e), lambda_component(&s, h, e));
        prop_assert_eq!(cs.len, cn.len + cm.len);
        prop_assert_eq!(cs.start.0, cn.start.0 + cm.start.0);
        prop_assert_eq!(cs.start.1, cn.start.1 + cm.start.1);
    }
}

#[test]
fn sum_of_single_points() {
    let n = PrincipalPolygon::point(0, Rat::from_integer(3));
    let s = polygon_add(&n, &n);
    assert_eq!(s.start, (0, Rat::from_integer(6)));
    assert_eq!(polygon_index(&s), 0);
}
