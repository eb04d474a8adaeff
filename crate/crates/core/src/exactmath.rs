//! Exact integer and rational arithmetic: dense integer polynomials, p-adic
//! content valuations, phi-adic expansions and resultants.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{OmError, Result};
use crate::gftower::{TowerElem, TowerPoly};

/// Exact rational number used for slopes and polygon ordinates.
pub type Rat = Ratio<i64>;

/// A valuation: a finite rational or infinity. `Inf` sorts above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ValOrInf {
    Fin(Rat),
    Inf,
}

impl ValOrInf {
    pub fn int(v: i64) -> Self {
        ValOrInf::Fin(Rat::from_integer(v))
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, ValOrInf::Inf)
    }

    pub fn finite(&self) -> Option<Rat> {
        match self {
            ValOrInf::Fin(r) => Some(*r),
            ValOrInf::Inf => None,
        }
    }

    /// The value as an integer; `None` for infinity or a proper fraction.
    pub fn as_int(&self) -> Option<i64> {
        match self {
            ValOrInf::Fin(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }
}

impl Add for ValOrInf {
    type Output = ValOrInf;
    fn add(self, rhs: ValOrInf) -> ValOrInf {
        match (self, rhs) {
            (ValOrInf::Fin(a), ValOrInf::Fin(b)) => ValOrInf::Fin(a + b),
            _ => ValOrInf::Inf,
        }
    }
}

impl fmt::Display for ValOrInf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValOrInf::Fin(r) => write!(f, "{r}"),
            ValOrInf::Inf => write!(f, "inf"),
        }
    }
}

/// Dense univariate polynomial over Z. `coeffs[i]` is the coefficient of x^i;
/// trailing zeros are always trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        IntPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn x() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        IntPoly::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^i, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `c`; `c` must divide all of them.
    pub fn div_exact(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|a| {
                    debug_assert!((a % c).is_zero());
                    a / c
                })
                .collect(),
        )
    }

    /// Multiplies by x^k.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs: v }
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Division with remainder by a monic polynomial.
    pub fn divrem_monic(&self, d: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let dd = match d.degree() {
            Some(k) if d.is_monic() => k,
            _ => return Err(OmError::BadKeyPolynomial),
        };
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = std::mem::take(&mut r[k + dd]);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs[..dd].iter().enumerate() {
                r[k + j] -= &c * dc;
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((IntPoly::new(q), IntPoly::new(r)))
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo-remainder by zero");
        let lc = d.lead().unwrap().clone();
        let mut r = self.clone();
        let mut e = match self.degree() {
            Some(a) if a >= dd => a - dd + 1,
            _ => return self.clone(),
        };
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let t = IntPoly::monomial(r.lead().unwrap().clone(), rd - dd);
            r = &r.scale(&lc) - &(&t * d);
            e -= 1;
        }
        r.scale(&num_traits::pow(lc, e))
    }

    /// Renders in the CLI grammar, e.g. `x^2 - 2`.
    pub fn to_expr(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{a}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Deterministic Miller-Rabin, exact for every u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        r
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &BASES {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

pub fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(OmError::NotPrime(p))
    }
}

/// p-adic valuation of a nonzero integer; `None` for zero.
pub fn vp_int(n: &BigInt, p: u64) -> Option<i64> {
    if n.is_zero() {
        return None;
    }
    let pb = BigInt::from(p);
    let mut m = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            return Some(k);
        }
        m = q;
        k += 1;
    }
}

/// Minimum p-adic valuation over the coefficients of `poly`.
pub fn content_valuation(poly: &IntPoly, p: u64) -> Result<ValOrInf> {
    check_prime(p)?;
    Ok(content_val(poly, p))
}

pub(crate) fn content_val(poly: &IntPoly, p: u64) -> ValOrInf {
    poly.coeffs()
        .iter()
        .filter_map(|c| vp_int(c, p))
        .min()
        .map_or(ValOrInf::Inf, ValOrInf::int)
}

/// Unique expansion `poly = sum a_i phi^i` with `deg a_i < deg phi`.
pub fn phi_expansion(poly: &IntPoly, phi: &IntPoly) -> Result<Vec<IntPoly>> {
    if !phi.is_monic() || phi.degree() == Some(0) {
        return Err(OmError::BadKeyPolynomial);
    }
    if poly.is_zero() {
        return Err(OmError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    let mut cur = poly.clone();
    while !cur.is_zero() {
        let (q, r) = cur.divrem_monic(phi)?;
        out.push(r);
        cur = q;
    }
    Ok(out)
}

/// Reassembles `sum a_i phi^i`.
pub fn phi_assemble(parts: &[IntPoly], phi: &IntPoly) -> IntPoly {
    parts
        .iter()
        .rev()
        .fold(IntPoly::zero(), |acc, a| &(&acc * phi) + a)
}

/// Resultant over Z by the subresultant algorithm, with the Sylvester sign convention.
pub fn resultant(a: &IntPoly, b: &IntPoly) -> Result<BigInt> {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return Err(OmError::ZeroPolynomial);
    };
    if da == 0 {
        return Ok(num_traits::pow(a.coeff(0), db));
    }
    if db == 0 {
        return Ok(num_traits::pow(b.coeff(0), da));
    }
    let (mut a, mut b, mut sign) = if da < db {
        (b.clone(), a.clone(), if da * db % 2 == 1 { -1 } else { 1 })
    } else {
        (a.clone(), b.clone(), 1)
    };
    let ca = a.content();
    let cb = b.content();
    a = a.div_exact(&ca);
    b = b.div_exact(&cb);
    let t = num_traits::pow(ca, b.degree().unwrap()) * num_traits::pow(cb, a.degree().unwrap());
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (ad, bd) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = ad - bd;
        if ad % 2 == 1 && bd % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        a = b;
        b = r.div_exact(&(&g * num_traits::pow(h.clone(), delta)));
        g = a.lead().unwrap().clone();
        if delta > 0 {
            h = num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1);
        }
        if b.degree() == Some(0) {
            let ad = a.degree().unwrap();
            let lb = b.coeff(0);
            let hh = num_traits::pow(lb, ad) / num_traits::pow(h, ad - 1);
            return Ok(BigInt::from(sign) * t * hh);
        }
    }
}

/// Primitive gcd over Z[x], normalized to a positive leading coefficient.
pub fn gcd_primitive(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let prim = |p: &IntPoly| {
        let c = p.content();
        let mut q = p.div_exact(&c);
        if q.lead().is_some_and(|l| l.is_negative()) {
            q = -&q;
        }
        q
    };
    if a.is_zero() {
        return prim(b);
    }
    if b.is_zero() {
        return prim(a);
    }
    let (mut x, mut y) = if a.degree() >= b.degree() {
        (prim(a), prim(b))
    } else {
        (prim(b), prim(a))
    };
    while !y.is_zero() {
        let r = x.pseudo_rem(&y);
        x = y;
        y = if r.is_zero() { r } else { prim(&r) };
    }
    x
}

/// True when `f` has no repeated factor over Q.
pub fn is_squarefree(f: &IntPoly) -> bool {
    match f.degree() {
        None => false,
        Some(0) => true,
        Some(_) => gcd_primitive(f, &f.derivative()).degree() == Some(0),
    }
}

/// Squarefree part of a monic polynomial over Q, again monic.
pub fn squarefree_part(f: &IntPoly) -> Result<IntPoly> {
    if !f.is_monic() {
        return Err(OmError::NotMonic);
    }
    let g = gcd_primitive(f, &f.derivative());
    if g.degree() == Some(0) {
        return Ok(f.clone());
    }
    // g divides the monic f, so by Gauss its leading coefficient is 1.
    let (q, r) = f.divrem_monic(&g)?;
    if !r.is_zero() {
        return Err(OmError::Internal("gcd does not divide f".into()));
    }
    Ok(q)
}

/// Coefficientwise reduction into F_p.
pub fn reduce_mod_p(poly: &IntPoly, p: u64) -> Result<TowerPoly> {
    check_prime(p)?;
    Ok(reduce_poly(poly, p))
}

pub(crate) fn reduce_poly(poly: &IntPoly, p: u64) -> TowerPoly {
    TowerPoly::new(
        0,
        poly.coeffs()
            .iter()
            .map(|c| TowerElem::Prime(mod_u64(c, p)))
            .collect(),
    )
}

/// Least nonnegative residue of `c` mod `p`.
pub fn mod_u64(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

/// Exact power p^k as a big integer.
pub fn p_pow(p: u64, k: u64) -> BigInt {
    num_traits::pow(BigInt::from(p), k as usize)
}

/// Compares two rationals as `a/b` against `c/d` without overflow for small inputs.
pub fn cmp_frac(a: i64, b: i64, c: i64, d: i64) -> Ordering {
    ((a as i128) * (d as i128)).cmp(&((c as i128) * (b as i128)))
}
