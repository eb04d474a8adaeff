//! Property tests for finite field towers and factorization over them.

use num_bigint::BigUint;
use omfactor::gftower::{necklace_count, FieldTower, TowerElem, TowerPoly};
use proptest::prelude::*;

/// F_4 = F_2[y]/(y^2+y+1) and F_16 = F_4[y]/(y^2+y+z).
fn tower16() -> FieldTower {
    let t = FieldTower::new(2).unwrap().extend(TowerPoly::from_u64s(0, &[1, 1, 1])).unwrap();
    let psi = TowerPoly::new(1, vec![t.z(0), t.one(1), t.one(1)]);
    t.extend(psi).unwrap()
}

/// F_9 = F_3[y]/(y^2+1).
fn tower9() -> FieldTower {
    FieldTower::new(3).unwrap().extend(TowerPoly::from_u64s(0, &[1, 0, 1])).unwrap()
}

/// Element of F_k built from base-p digits.
fn elem(t: &FieldTower, k: usize, digits: &mut impl Iterator<Item = u64>) -> TowerElem {
    if k == 0 {
        return TowerElem::Prime(digits.next().unwrap_or(0) % t.p());
    }
    let cs = (0..t.f(k - 1)).map(|_| elem(t, k - 1, digits)).collect();
    TowerElem::Ext(TowerPoly::new(k - 1, cs))
}

fn poly_over(t: &FieldTower, k: usize, coeffs: &[Vec<u64>]) -> TowerPoly {
    TowerPoly::new(k, coeffs.iter().map(|d| elem(t, k, &mut d.iter().copied())).collect())
}

fn towers() -> Vec<(FieldTower, usize)> {
    vec![
        (FieldTower::new(2).unwrap(), 0),
        (FieldTower::new(5).unwrap(), 0),
        (tower9(), 1),
        (tower16(), 1),
        (tower16(), 2),
    ]
}

fn digits() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..5, 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn factor_remultiplies(which in 0usize..5, coeffs in prop::collection::vec(digits(), 1..=9)) {
        let (t, k) = towers().swap_remove(which);
        let g = poly_over(&t, k, &coeffs);
        prop_assume!(!g.is_zero());
        let (lc, facs) = t.factor(&g).unwrap();
        let mut prod = t.pconst(lc);
        let mut deg = 0;
        for (q, a) in &facs {
            prop_assert!(q.is_monic());
            deg += q.degree().unwrap() * a;
            prod = t.pmul(&prod, &t.ppow(q, *a));
        }
        prop_assert_eq!(Some(deg), g.degree());
        prop_assert_eq!(prod, g);
    }
}

proptest! {
    #[test]
    fn field_axioms(which in 0usize..5, a in digits(), b in digits(), c in digits()) {
        let (t, k) = towers().swap_remove(which);
        let (a, b, c) = (elem(&t, k, &mut a.into_iter()), elem(&t, k, &mut b.into_iter()), elem(&t, k, &mut c.into_iter()));
        prop_assert_eq!(t.mul(&t.mul(&a, &b), &c), t.mul(&a, &t.mul(&b, &c)));
        prop_assert_eq!(t.add(&t.add(&a, &b), &c), t.add(&a, &t.add(&b, &c)));
        prop_assert_eq!(t.mul(&a, &t.add(&b, &c)), t.add(&t.mul(&a, &b), &t.mul(&a, &c)));
        prop_assert_eq!(t.mul(&a, &b), t.mul(&b, &a));
        prop_assert_eq!(t.sub(&t.add(&a, &b), &b), a.clone());
        if !a.is_zero() {
            prop_assert_eq!(t.mul(&a, &t.inv(&a).unwrap()), t.one(k));
        } else {
            prop_assert!(t.inv(&a).is_err());
        }
    }
}

#[test]
fn necklace_counts_match_factorization() {
    let cases: Vec<(FieldTower, usize, usize)> = vec![
        (FieldTower::new(2).unwrap(), 0, 4),
        (FieldTower::new(3).unwrap(), 0, 4),
        (FieldTower::new(2).unwrap().extend(TowerPoly::from_u64s(0, &[1, 1, 1])).unwrap(), 1, 3),
    ];
    for (t, k, dmax) in cases {
        let q = t.order(k);
        for d in 1..=dmax {
            let qd: usize = num_traits::pow(q.clone(), d).try_into().unwrap();
            // x^{q^d} - x
            let mut cs = vec![t.zero(k); qd + 1];
            cs[qd] = t.one(k);
            cs[1] = t.neg(&t.one(k));
            let g = TowerPoly::new(k, cs);
            let (_, facs) = t.factor(&g).unwrap();
            assert!(facs.iter().all(|(_, a)| *a == 1));
            let count = facs.iter().filter(|(f, _)| f.degree() == Some(d)).count();
            assert_eq!(BigUint::from(count), necklace_count(&q, d), "q = {q}, d = {d}");
        }
    }
}
