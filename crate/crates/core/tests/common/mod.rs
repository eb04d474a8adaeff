//! Shared helpers for the integration tests: a pool of types of order 0..2
//! harvested from factorization trees, and seeded samplers.
#![allow(dead_code)]

use num_bigint::BigInt;
use omfactor::exactmath::{p_pow, IntPoly};
use omfactor::montes::{branch, root_types, Branch};
use omfactor::omtypes::OMType;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub struct Rng(ChaCha8Rng);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform in 0..n.
    pub fn below(&mut self, n: u64) -> u64 {
        self.0.next_u64() % n
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    pub fn poly(&mut self, deg: usize, bound: i64) -> IntPoly {
        IntPoly::new((0..=deg).map(|_| BigInt::from(self.range(-bound, bound))).collect())
    }

    pub fn monic(&mut self, deg: usize, bound: i64) -> IntPoly {
        let mut cs: Vec<BigInt> = (0..deg).map(|_| BigInt::from(self.range(-bound, bound))).collect();
        cs.push(BigInt::from(1));
        IntPoly::new(cs)
    }
}

pub fn ip(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

/// Seed polynomials whose trees contain types of orders 0, 1 and 2.
pub fn seeds() -> Vec<(IntPoly, u64)> {
    vec![
        (ip(&[4, 8, 4, 0, 1]), 2),
        (ip(&[4, 8, 8, 0, 1]), 2),
        (ip(&[28, 8, 4, 0, 1]), 2),
        (ip(&[12, 8, 4, 0, 1]), 2),
        (ip(&[10, 27, 3, 0, 3, 0, 1]), 3),
        (ip(&[1 + 9 * 3, 0, 3 + 9, 0, 1]), 3),
        (ip(&[4 + 25, 5, 4, 0, 1]), 5),
        (ip(&[3, 0, 1]), 5),
        (ip(&[1, 1, 1]), 2),
        (ip(&[8 + 16, 0, 0, 0, 1]), 2),
    ]
}

/// Every type met while factoring the seeds, orders 0..=2.
pub fn type_pool() -> Vec<OMType> {
    let mut out: Vec<OMType> = Vec::new();
    for (f, p) in seeds() {
        let mut frontier: Vec<OMType> = root_types(&f, p).unwrap().into_iter().map(|x| x.0).collect();
        let mut order = 1;
        while !frontier.is_empty() && order <= 3 {
            let mut next = Vec::new();
            for t in frontier {
                if !out.contains(&t) {
                    out.push(t.clone());
                }
                if t.levels().len() < 2 {
                    let step = branch(&f, &t, order, &mut |_| {}).unwrap();
                    for b in step.branches {
                        if let Branch::Child { ty, .. } = b {
                            next.push(ty);
                        }
                    }
                }
            }
            frontier = next;
            order += 1;
        }
    }
    out
}

/// A polynomial built from the key polynomials of `t`: a product of powers
/// of phi_1..phi_r and small random factors, plus p-adically small noise.
pub fn sample_for(t: &OMType, rng: &mut Rng) -> IntPoly {
    let r = t.r();
    let mut acc = IntPoly::one();
    for k in 1..=r {
        let a = rng.below(3) as u32;
        if a > 0 && t.m(k) * a as usize <= 8 {
            acc = &acc * &t.phi(k).pow(a);
        }
    }
    if rng.below(2) == 0 {
        let d = rng.below(2) as usize + 1;
        acc = &acc * &rng.monic(d, 9);
    }
    let deg = acc.degree().unwrap();
    let noise_v = rng.below(6);
    let noise = rng.poly(deg, 6).scale(&p_pow(t.p(), noise_v));
    let out = &acc + &noise;
    if out.is_zero() {
        acc
    } else {
        out
    }
}
