//! Finite-field towers F_0 = F_p, F_{i+1} = F_i[y]/(psi_i), and polynomial
//! factorization over any level of a tower.
//!
//! Elements are nested: an element of F_{k+1} is a polynomial over F_k of
//! degree below deg psi_k. The tower itself carries the moduli; elements and
//! polynomials are plain values that remember their level.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{OmError, Result};
use crate::exactmath::check_prime;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TowerElem {
    /// Element of F_p, always reduced into 0..p.
    Prime(u64),
    /// Element of F_{k+1}: a polynomial over F_k reduced mod psi_k.
    Ext(TowerPoly),
}

/// Polynomial over level `level`; trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TowerPoly {
    level: usize,
    coeffs: Vec<TowerElem>,
}

impl TowerElem {
    pub fn level(&self) -> usize {
        match self {
            TowerElem::Prime(_) => 0,
            TowerElem::Ext(p) => p.level + 1,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            TowerElem::Prime(a) => *a == 0,
            TowerElem::Ext(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            TowerElem::Prime(a) => *a == 1,
            TowerElem::Ext(p) => p.coeffs.len() == 1 && p.coeffs[0].is_one(),
        }
    }
}

impl fmt::Display for TowerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TowerElem::Prime(a) => write!(f, "{a}"),
            TowerElem::Ext(p) => {
                let var = format!("z{}", p.level);
                if p.coeffs.len() <= 1 && !p.is_zero() {
                    write!(f, "{}", p.coeffs[0])
                } else {
                    write!(f, "({})", p.render(&var))
                }
            }
        }
    }
}

impl TowerPoly {
    pub fn new(level: usize, mut coeffs: Vec<TowerElem>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.level() == level));
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        TowerPoly { level, coeffs }
    }

    pub fn zero(level: usize) -> Self {
        TowerPoly { level, coeffs: Vec::new() }
    }

    /// Polynomial over F_p from integer coefficients, assumed already reduced.
    pub fn from_u64s(level: usize, cs: &[u64]) -> Self {
        assert_eq!(level, 0, "from_u64s builds prime-field polynomials");
        TowerPoly::new(0, cs.iter().map(|&c| TowerElem::Prime(c)).collect())
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn coeffs(&self) -> &[TowerElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&TowerElem> {
        self.coeffs.get(i)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> Option<&TowerElem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|c| c.is_one())
    }

    /// True for the monomial y (constant term zero, degree one, monic).
    pub fn is_y(&self) -> bool {
        self.coeffs.len() == 2 && self.coeffs[0].is_zero() && self.coeffs[1].is_one()
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            terms.push(match (i, c.is_one()) {
                (0, _) => c.to_string(),
                (_, true) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        terms.join(" + ")
    }
}

impl fmt::Display for TowerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("y"))
    }
}

/// Field operation selector for [`FieldTower::tower_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Inv,
    Pow(i64),
}

/// The chain of residue fields. `psi[i]` is monic irreducible over F_i and
/// defines F_{i+1}; the top level is `psi.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldTower {
    p: u64,
    psi: Vec<TowerPoly>,
    /// `abs_deg[k]` = [F_k : F_p].
    abs_deg: Vec<usize>,
}

impl FieldTower {
    pub fn new(p: u64) -> Result<Self> {
        check_prime(p)?;
        Ok(FieldTower { p, psi: Vec::new(), abs_deg: vec![1] })
    }

    /// Returns the tower extended by `psi` over the current top level.
    /// Irreducibility is verified, never trusted.
    pub fn extend(&self, psi: TowerPoly) -> Result<FieldTower> {
        let top = self.top();
        if psi.level != top {
            return Err(OmError::LevelMismatch(psi.level, top));
        }
        let d = match psi.degree() {
            Some(d) if d >= 1 && psi.is_monic() => d,
            _ => return Err(OmError::BadKeyPolynomial),
        };
        if top >= 1 && psi.is_y() {
            return Err(OmError::Reducible(psi.to_string()));
        }
        let (_, facs) = self.factor(&psi)?;
        if facs.len() != 1 || facs[0].1 != 1 {
            return Err(OmError::Reducible(psi.to_string()));
        }
        let mut t = self.clone();
        t.abs_deg.push(self.abs_deg[top] * d);
        t.psi.push(psi);
        Ok(t)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Index of the top field F_top.
    pub fn top(&self) -> usize {
        self.psi.len()
    }

    pub fn psi(&self, i: usize) -> &TowerPoly {
        &self.psi[i]
    }

    /// f_i = deg psi_i.
    pub fn f(&self, i: usize) -> usize {
        self.psi[i].degree().unwrap()
    }

    /// [F_k : F_p].
    pub fn abs_degree(&self, k: usize) -> usize {
        self.abs_deg[k]
    }

    /// |F_k| as a big integer.
    pub fn order(&self, k: usize) -> BigUint {
        num_traits::pow(BigUint::from(self.p), self.abs_deg[k])
    }

    pub fn zero(&self, k: usize) -> TowerElem {
        if k == 0 {
            TowerElem::Prime(0)
        } else {
            TowerElem::Ext(TowerPoly::zero(k - 1))
        }
    }

    pub fn one(&self, k: usize) -> TowerElem {
        self.from_int(k, 1)
    }

    /// Image of an integer in F_k.
    pub fn from_int(&self, k: usize, c: i64) -> TowerElem {
        let r = c.rem_euclid(self.p as i64) as u64;
        self.embed(&TowerElem::Prime(r), k)
    }

    /// Lifts `a` into the larger field F_k.
    pub fn embed(&self, a: &TowerElem, k: usize) -> TowerElem {
        let mut cur = a.clone();
        for lvl in a.level()..k {
            cur = TowerElem::Ext(TowerPoly::new(lvl, vec![cur]));
        }
        cur
    }

    /// z_i, the class of y in F_{i+1} = F_i[y]/psi_i.
    pub fn z(&self, i: usize) -> TowerElem {
        let one = self.one(i);
        self.class_of(&TowerPoly::new(i, vec![self.zero(i), one]))
    }

    /// Class of a polynomial over F_i in F_{i+1}.
    pub fn class_of(&self, g: &TowerPoly) -> TowerElem {
        TowerElem::Ext(self.prem(g, &self.psi[g.level]))
    }

    /// Checked field arithmetic.
    pub fn tower_arith(&self, a: &TowerElem, b: &TowerElem, op: FieldOp) -> Result<TowerElem> {
        let (la, lb) = (a.level(), b.level());
        if la > self.top() {
            return Err(OmError::LevelOutOfRange(la));
        }
        if matches!(op, FieldOp::Add | FieldOp::Sub | FieldOp::Mul) && la != lb {
            return Err(OmError::LevelMismatch(la, lb));
        }
        Ok(match op {
            FieldOp::Add => self.add(a, b),
            FieldOp::Sub => self.sub(a, b),
            FieldOp::Mul => self.mul(a, b),
            FieldOp::Inv => self.inv(a)?,
            FieldOp::Pow(k) => self.pow(a, k)?,
        })
    }

    pub fn add(&self, a: &TowerElem, b: &TowerElem) -> TowerElem {
        match (a, b) {
            (TowerElem::Prime(x), TowerElem::Prime(y)) => TowerElem::Prime((x + y) % self.p),
            (TowerElem::Ext(x), TowerElem::Ext(y)) => TowerElem::Ext(self.padd(x, y)),
            _ => panic!("level mismatch in tower add"),
        }
    }

    pub fn neg(&self, a: &TowerElem) -> TowerElem {
        match a {
            TowerElem::Prime(x) => TowerElem::Prime((self.p - x) % self.p),
            TowerElem::Ext(x) => TowerElem::Ext(self.pneg(x)),
        }
    }

    pub fn sub(&self, a: &TowerElem, b: &TowerElem) -> TowerElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &TowerElem, b: &TowerElem) -> TowerElem {
        match (a, b) {
            (TowerElem::Prime(x), TowerElem::Prime(y)) => {
                TowerElem::Prime(((*x as u128 * *y as u128) % self.p as u128) as u64)
            }
            (TowerElem::Ext(x), TowerElem::Ext(y)) => {
                TowerElem::Ext(self.prem(&self.pmul(x, y), &self.psi[x.level]))
            }
            _ => panic!("level mismatch in tower mul"),
        }
    }

    pub fn inv(&self, a: &TowerElem) -> Result<TowerElem> {
        if a.is_zero() {
            return Err(OmError::DivisionByZero);
        }
        Ok(match a {
            TowerElem::Prime(x) => TowerElem::Prime(pow_mod(*x, self.p - 2, self.p)),
            TowerElem::Ext(x) => {
                let (g, s, _) = self.pxgcd(x, &self.psi[x.level]);
                // g is a nonzero constant because psi is irreducible and deg x < deg psi.
                let ginv = self.inv(&g.coeffs[0])?;
                TowerElem::Ext(self.prem(&self.pscale(&s, &ginv), &self.psi[x.level]))
            }
        })
    }

    /// a^k for any integer k; negative k requires a nonzero.
    pub fn pow(&self, a: &TowerElem, k: i64) -> Result<TowerElem> {
        let base = if k < 0 { self.inv(a)? } else { a.clone() };
        Ok(self.pow_u(&base, k.unsigned_abs()))
    }

    pub fn pow_u(&self, a: &TowerElem, mut k: u64) -> TowerElem {
        let mut acc = self.one(a.level());
        let mut b = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            k >>= 1;
            if k > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    /// Unique p-th root in F_k (Frobenius is bijective on a finite field).
    pub fn pth_root(&self, a: &TowerElem) -> TowerElem {
        let d = self.abs_deg[a.level()];
        let mut cur = a.clone();
        for _ in 1..d {
            cur = self.pow_u(&cur, self.p);
        }
        cur
    }

    // ---- polynomials over a level ----

    pub fn padd(&self, a: &TowerPoly, b: &TowerPoly) -> TowerPoly {
        debug_assert_eq!(a.level, b.level);
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = self.zero(a.level);
        TowerPoly::new(
            a.level,
            (0..n)
                .map(|i| {
                    self.add(a.coeffs.get(i).unwrap_or(&z), b.coeffs.get(i).unwrap_or(&z))
                })
                .collect(),
        )
    }

    pub fn pneg(&self, a: &TowerPoly) -> TowerPoly {
        TowerPoly::new(a.level, a.coeffs.iter().map(|c| self.neg(c)).collect())
    }

    pub fn psub(&self, a: &TowerPoly, b: &TowerPoly) -> TowerPoly {
        self.padd(a, &self.pneg(b))
    }

    pub fn pmul(&self, a: &TowerPoly, b: &TowerPoly) -> TowerPoly {
        debug_assert_eq!(a.level, b.level);
        if a.is_zero() || b.is_zero() {
            return TowerPoly::zero(a.level);
        }
        let mut v = vec![self.zero(a.level); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                v[i + j] = self.add(&v[i + j], &self.mul(x, y));
            }
        }
        TowerPoly::new(a.level, v)
    }

    pub fn pscale(&self, a: &TowerPoly, c: &TowerElem) -> TowerPoly {
        TowerPoly::new(a.level, a.coeffs.iter().map(|x| self.mul(x, c)).collect())
    }

    /// Constant polynomial.
    pub fn pconst(&self, c: TowerElem) -> TowerPoly {
        TowerPoly::new(c.level(), vec![c])
    }

    /// y^k c.
    pub fn pmonomial(&self, c: TowerElem, k: usize) -> TowerPoly {
        let lvl = c.level();
        let mut v = vec![self.zero(lvl); k];
        v.push(c);
        TowerPoly::new(lvl, v)
    }

    pub fn pone(&self, level: usize) -> TowerPoly {
        self.pconst(self.one(level))
    }

    /// The polynomial y over `level`.
    pub fn py(&self, level: usize) -> TowerPoly {
        self.pmonomial(self.one(level), 1)
    }

    pub fn pdivrem(&self, a: &TowerPoly, b: &TowerPoly) -> Result<(TowerPoly, TowerPoly)> {
        let db = b.degree().ok_or(OmError::DivisionByZero)?;
        let lc_inv = self.inv(b.lead().unwrap())?;
        let mut r = a.coeffs.clone();
        if r.len() <= db {
            return Ok((TowerPoly::zero(a.level), a.clone()));
        }
        let mut q = vec![self.zero(a.level); r.len() - db];
        for k in (0..q.len()).rev() {
            let c = self.mul(&r[k + db], &lc_inv);
            if c.is_zero() {
                continue;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[k + j] = self.sub(&r[k + j], &self.mul(&c, bc));
            }
            q[k] = c;
        }
        r.truncate(db);
        Ok((TowerPoly::new(a.level, q), TowerPoly::new(a.level, r)))
    }

    pub fn prem(&self, a: &TowerPoly, b: &TowerPoly) -> TowerPoly {
        self.pdivrem(a, b).expect("remainder by zero polynomial").1
    }

    pub fn pquo(&self, a: &TowerPoly, b: &TowerPoly) -> TowerPoly {
        self.pdivrem(a, b).expect("quotient by zero polynomial").0
    }

    pub fn pmonic(&self, a: &TowerPoly) -> TowerPoly {
        match a.lead() {
            None => a.clone(),
            Some(l) => self.pscale(a, &self.inv(l).unwrap()),
        }
    }

    /// Monic gcd; zero only if both inputs are zero.
    pub fn pgcd(&self, a: &TowerPoly, b: &TowerPoly) -> TowerPoly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.prem(&x, &y);
            x = y;
            y = r;
        }
        self.pmonic(&x)
    }

    /// Extended Euclid: (g, s, t) with s a + t b = g, g not normalized.
    pub fn pxgcd(&self, a: &TowerPoly, b: &TowerPoly) -> (TowerPoly, TowerPoly, TowerPoly) {
        let lvl = a.level;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.pone(lvl), TowerPoly::zero(lvl));
        let (mut t0, mut t1) = (TowerPoly::zero(lvl), self.pone(lvl));
        while !r1.is_zero() {
            let (q, r) = self.pdivrem(&r0, &r1).unwrap();
            r0 = std::mem::replace(&mut r1, r);
            let s = self.psub(&s0, &self.pmul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.psub(&t0, &self.pmul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        (r0, s0, t0)
    }

    pub fn pderiv(&self, a: &TowerPoly) -> TowerPoly {
        TowerPoly::new(
            a.level,
            a.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.mul(c, &self.from_int(a.level, (i as u64 % self.p) as i64)))
                .collect(),
        )
    }

    /// Horner evaluation of a polynomial over F_k at a point of F_j, j >= k.
    pub fn peval(&self, a: &TowerPoly, x: &TowerElem) -> TowerElem {
        let lvl = x.level();
        a.coeffs.iter().rev().fold(self.zero(lvl), |acc, c| {
            self.add(&self.mul(&acc, x), &self.embed(c, lvl))
        })
    }

    /// a^e mod m.
    pub fn ppowmod(&self, a: &TowerPoly, e: &BigUint, m: &TowerPoly) -> TowerPoly {
        let mut acc = self.prem(&self.pone(a.level), m);
        let base = self.prem(a, m);
        for i in (0..e.bits()).rev() {
            acc = self.prem(&self.pmul(&acc, &acc), m);
            if e.bit(i) {
                acc = self.prem(&self.pmul(&acc, &base), m);
            }
        }
        acc
    }

    pub fn ppow(&self, a: &TowerPoly, k: usize) -> TowerPoly {
        (0..k).fold(self.pone(a.level), |acc, _| self.pmul(&acc, a))
    }

    /// Largest k with psi^k | g.
    pub fn ord_factor(&self, g: &TowerPoly, psi: &TowerPoly) -> Result<usize> {
        if g.is_zero() {
            return Err(OmError::ZeroPolynomial);
        }
        if psi.degree().unwrap_or(0) == 0 {
            return Err(OmError::BadKeyPolynomial);
        }
        if g.level != psi.level {
            return Err(OmError::LevelMismatch(g.level, psi.level));
        }
        let mut k = 0;
        let mut cur = g.clone();
        loop {
            let (q, r) = self.pdivrem(&cur, psi)?;
            if !r.is_zero() {
                return Ok(k);
            }
            cur = q;
            k += 1;
        }
    }

    /// Complete factorization: leading coefficient and sorted monic
    /// irreducible factors with multiplicities.
    pub fn factor(&self, g: &TowerPoly) -> Result<(TowerElem, Vec<(TowerPoly, usize)>)> {
        let lc = g.lead().ok_or(OmError::ZeroPolynomial)?.clone();
        if g.level > self.top() {
            return Err(OmError::LevelOutOfRange(g.level));
        }
        let f = self.pmonic(g);
        let mut out = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for (sq, mult) in self.squarefree(&f) {
            for (part, d) in self.distinct_degree(&sq) {
                let mut pieces = Vec::new();
                self.equal_degree(&part, d, &mut rng, &mut pieces);
                out.extend(pieces.into_iter().map(|q| (q, mult)));
            }
        }
        out.sort_by(|a, b| (a.0.degree(), &a.0).cmp(&(b.0.degree(), &b.0)));
        Ok((lc, out))
    }

    fn squarefree(&self, f: &TowerPoly) -> Vec<(TowerPoly, usize)> {
        let mut res = Vec::new();
        if f.degree().unwrap_or(0) == 0 {
            return res;
        }
        let one = self.pone(f.level);
        let d = self.pderiv(f);
        let mut c = self.pgcd(f, &d);
        let mut w = self.pquo(f, &c);
        let mut i = 1;
        while w != one {
            let y = self.pgcd(&w, &c);
            let fac = self.pquo(&w, &y);
            if fac != one {
                res.push((fac, i));
            }
            w = y;
            c = self.pquo(&c, &w);
            i += 1;
        }
        if c != one {
            // c is a polynomial in y^p: take p-th roots coefficientwise.
            let p = self.p as usize;
            let root = TowerPoly::new(
                f.level,
                c.coeffs.iter().step_by(p).map(|a| self.pth_root(a)).collect(),
            );
            for (g, m) in self.squarefree(&root) {
                res.push((g, m * p));
            }
        }
        res
    }

    fn distinct_degree(&self, f: &TowerPoly) -> Vec<(TowerPoly, usize)> {
        let mut res = Vec::new();
        let q = self.order(f.level);
        let y = self.py(f.level);
        let mut rest = f.clone();
        let mut h = self.prem(&y, &rest);
        let mut i = 1;
        while rest.degree().unwrap() >= 2 * i {
            h = self.ppowmod(&h, &q, &rest);
            let g = self.pgcd(&rest, &self.psub(&h, &y));
            if g.degree() != Some(0) {
                rest = self.pquo(&rest, &g);
                h = self.prem(&h, &rest);
                res.push((g, i));
            }
            i += 1;
        }
        if rest.degree().unwrap() >= 1 {
            let d = rest.degree().unwrap();
            res.push((rest, d));
        }
        res
    }

    fn random_elem(&self, k: usize, rng: &mut ChaCha8Rng) -> TowerElem {
        if k == 0 {
            TowerElem::Prime(rng.next_u64() % self.p)
        } else {
            let f = self.f(k - 1);
            TowerElem::Ext(TowerPoly::new(
                k - 1,
                (0..f).map(|_| self.random_elem(k - 1, rng)).collect(),
            ))
        }
    }

    fn equal_degree(&self, f: &TowerPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<TowerPoly>) {
        let n = f.degree().unwrap();
        if n == d {
            out.push(f.clone());
            return;
        }
        let lvl = f.level;
        let qd = num_traits::pow(self.order(lvl), d);
        let one = self.pone(lvl);
        loop {
            let a = TowerPoly::new(lvl, (0..n).map(|_| self.random_elem(lvl, rng)).collect());
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let b = if self.p == 2 {
                // Absolute trace to F_2: sum of a^(2^i), i < [F_q^d : F_2].
                let steps = self.abs_deg[lvl] * d;
                let mut t = self.prem(&a, f);
                let mut acc = t.clone();
                for _ in 1..steps {
                    t = self.prem(&self.pmul(&t, &t), f);
                    acc = self.padd(&acc, &t);
                }
                acc
            } else {
                let e = (&qd - BigUint::one()) >> 1;
                self.psub(&self.ppowmod(&a, &e, f), &one)
            };
            let g = self.pgcd(f, &b);
            let dg = g.degree().unwrap_or(0);
            if dg > 0 && dg < n && !b.is_zero() {
                let h = self.pquo(f, &g);
                self.equal_degree(&g, d, rng, out);
                self.equal_degree(&h, d, rng, out);
                return;
            }
        }
    }
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * a as u128) % p as u128) as u64;
        }
        a = ((a as u128 * a as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

/// Number of monic irreducible polynomials of degree d over F_q.
pub fn necklace_count(q: &BigUint, d: usize) -> BigUint {
    let mut total = num_bigint::BigInt::zero();
    for k in 1..=d {
        if d.is_multiple_of(k) {
            let mu = mobius(d / k);
            if mu != 0 {
                total += num_bigint::BigInt::from(mu) * num_bigint::BigInt::from(num_traits::pow(q.clone(), k));
            }
        }
    }
    (total / num_bigint::BigInt::from(d)).to_biguint().unwrap()
}

fn mobius(mut n: usize) -> i32 {
    let mut m = 1;
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            n /= k;
            if n.is_multiple_of(k) {
                return 0;
            }
            m = -m;
        }
        k += 1;
    }
    if n > 1 {
        m = -m;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(cs: &[u64]) -> TowerPoly {
        TowerPoly::from_u64s(0, cs)
    }

    #[test]
    fn arith_examples() {
        let t = FieldTower::new(2).unwrap().extend(fp(&[1, 1])).unwrap();
        let z = t.z(0);
        assert!(t.pow(&z, -3).unwrap().is_one());
        let f5 = FieldTower::new(5).unwrap();
        assert_eq!(
            f5.tower_arith(&TowerElem::Prime(2), &TowerElem::Prime(0), FieldOp::Inv).unwrap(),
            TowerElem::Prime(3)
        );
        let f4 = FieldTower::new(2).unwrap().extend(fp(&[1, 1, 1])).unwrap();
        let z = f4.z(0);
        let zz = f4.mul(&z, &z);
        assert_eq!(zz, f4.add(&z, &f4.one(1)));
        assert_eq!(f4.inv(&f4.zero(1)), Err(OmError::DivisionByZero));
        assert_eq!(
            f4.tower_arith(&z, &TowerElem::Prime(1), FieldOp::Add),
            Err(OmError::LevelMismatch(1, 0))
        );
    }

    #[test]
    fn factor_examples() {
        let t = FieldTower::new(2).unwrap();
        assert_eq!(t.factor(&fp(&[1, 0, 1])).unwrap().1, vec![(fp(&[1, 1]), 2)]);
        assert_eq!(t.factor(&fp(&[1, 1, 1])).unwrap().1, vec![(fp(&[1, 1, 1]), 1)]);
        let t3 = FieldTower::new(3).unwrap();
        assert_eq!(
            t3.factor(&fp(&[0, 2, 0, 1])).unwrap().1,
            vec![(fp(&[0, 1]), 1), (fp(&[1, 1]), 1), (fp(&[2, 1]), 1)]
        );
        assert_eq!(t.factor(&TowerPoly::zero(0)), Err(OmError::ZeroPolynomial));
    }

    #[test]
    fn ord_factor_examples() {
        let t = FieldTower::new(2).unwrap();
        assert_eq!(t.ord_factor(&fp(&[1, 0, 1]), &fp(&[1, 1])).unwrap(), 2);
        assert_eq!(t.ord_factor(&fp(&[1, 1, 1]), &fp(&[1, 1])).unwrap(), 0);
        let t3 = FieldTower::new(3).unwrap();
        assert_eq!(t3.ord_factor(&fp(&[0, 0, 0, 0, 1]), &fp(&[0, 1])).unwrap(), 4);
    }

    #[test]
    fn extend_rejects_reducible_and_y() {
        let t = FieldTower::new(2).unwrap();
        assert!(matches!(t.extend(fp(&[1, 0, 1])), Err(OmError::Reducible(_))));
        let t1 = t.extend(fp(&[0, 1])).unwrap();
        let y = t1.py(1);
        assert!(matches!(t1.extend(y), Err(OmError::Reducible(_))));
    }

    #[test]
    fn factor_over_extension() {
        // y^2 + y + 1 splits over F_4 into two conjugate linear factors.
        let t = FieldTower::new(2).unwrap().extend(fp(&[1, 1, 1])).unwrap();
        let g = TowerPoly::new(1, vec![t.one(1), t.one(1), t.one(1)]);
        let (_, facs) = t.factor(&g).unwrap();
        assert_eq!(facs.len(), 2);
        assert!(facs.iter().all(|(q, m)| q.degree() == Some(1) && *m == 1));
    }
}
