//! Types of order r-1 and everything computed relative to one: the valuations
//! v_k, the pseudo-valuations omega_k, order-k Newton polygons, twisted residual
//! polynomials, representatives and the exponent vectors of Phi_i, gamma_i, pi_i.
//!
//! Orders are 1-based. A type with `levels.len() == r - 1` carries the
//! representative phi_r and supports every computation of order k <= r.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{ensure, OmError, Result};
use crate::exactmath::{content_val, p_pow, phi_expansion, reduce_poly, IntPoly, Rat, ValOrInf};
use crate::gftower::{FieldTower, TowerElem, TowerPoly};
use crate::polygons::{principal_envelope, PolySide, PrincipalPolygon, Slope};

static AXIOM_CHECKS: AtomicU64 = AtomicU64::new(0);
static SHAPE_CHECKS: AtomicU64 = AtomicU64::new(0);

/// Number of types whose closed formulas have been verified in this process.
pub fn axiom_checks() -> u64 {
    AXIOM_CHECKS.load(Ordering::Relaxed)
}

/// Number of order-r polygons whose length was checked against omega_r.
pub fn shape_checks() -> u64 {
    SHAPE_CHECKS.load(Ordering::Relaxed)
}

/// One level (phi_i; lambda_i = -h_i/e_i, psi_i) with cached invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeLevel {
    pub phi: IntPoly,
    pub h: i64,
    pub e: i64,
    /// psi_i over F_i.
    pub psi: TowerPoly,
    pub f: usize,
    pub m: usize,
    /// Bezout pair: ell*h - ell_prime*e = 1, 0 <= ell < e.
    pub ell: i64,
    pub ell_prime: i64,
    /// V_i = v_i(phi_i).
    pub v_phi: i64,
}

/// Type of order r-1 with its representative phi_r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OMType {
    p: u64,
    tower: FieldTower,
    levels: Vec<TypeLevel>,
    rep: IntPoly,
    /// v_r(phi_r).
    rep_v: i64,
}

/// Rational function p^{n_0} phi_1^{n_1} ... phi_r^{n_r} as its exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentVector(pub Vec<i64>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatFun {
    Phi,
    Gamma,
    Pi,
}

/// Output of an order-k polygon computation.
#[derive(Clone, Debug)]
pub struct OrderPolygon {
    pub polygon: PrincipalPolygon,
    pub expansion: Vec<IntPoly>,
    pub points: Vec<(i64, ValOrInf)>,
}

struct Residual {
    poly: TowerPoly,
    /// First abscissa of the lambda-component.
    s: i64,
}

fn bezout(h: i64, e: i64) -> (i64, i64) {
    // ell*h = 1 mod e with 0 <= ell < e, then ell' = (ell*h - 1)/e.
    let ell = if e == 1 {
        0
    } else {
        let g = h.extended_gcd(&e);
        g.x.rem_euclid(e)
    };
    (ell, (ell * h - 1) / e)
}

impl OMType {
    /// Type of order 0 given by psi_0 over F_p; its representative is the
    /// canonical lift of psi_0.
    pub fn order_zero(p: u64, psi0: TowerPoly) -> Result<OMType> {
        let tower = FieldTower::new(p)?.extend(psi0)?;
        let mut t = OMType { p, tower, levels: Vec::new(), rep: IntPoly::zero(), rep_v: 0 };
        t.rep = t.construct_representative()?;
        t.check_axioms()?;
        Ok(t)
    }

    /// Extends by (lambda_r = -h/e, psi_r) and builds phi_{r+1}.
    pub fn extend(&self, h: i64, e: i64, psi: TowerPoly) -> Result<OMType> {
        ensure!(h > 0 && e > 0 && h.gcd(&e) == 1, "slope -{h}/{e} not in lowest terms");
        let tower = self.tower.extend(psi.clone())?;
        let (ell, ell_prime) = bezout(h, e);
        let level = TypeLevel {
            phi: self.rep.clone(),
            h,
            e,
            f: psi.degree().unwrap(),
            psi,
            m: self.rep.degree().unwrap(),
            ell,
            ell_prime,
            v_phi: self.rep_v,
        };
        let mut levels = self.levels.clone();
        levels.push(level);
        let mut t = OMType { p: self.p, tower, levels, rep: IntPoly::zero(), rep_v: 0 };
        t.rep = t.construct_representative()?;
        let l = t.levels.last().unwrap();
        t.rep_v = l.e * l.f as i64 * (l.e * l.v_phi + l.h);
        t.check_representative()?;
        t.check_axioms()?;
        Ok(t)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn levels(&self) -> &[TypeLevel] {
        &self.levels
    }

    pub fn psi0(&self) -> &TowerPoly {
        self.tower.psi(0)
    }

    /// r: order of the representative; the type itself has order r-1.
    pub fn r(&self) -> usize {
        self.levels.len() + 1
    }

    pub fn representative(&self) -> &IntPoly {
        &self.rep
    }

    /// V_r = v_r(phi_r).
    pub fn rep_value(&self) -> i64 {
        self.rep_v
    }

    /// phi_k for 1 <= k <= r.
    pub fn phi(&self, k: usize) -> &IntPoly {
        if k == self.r() {
            &self.rep
        } else {
            &self.levels[k - 1].phi
        }
    }

    /// V_k = v_k(phi_k).
    pub fn big_v(&self, k: usize) -> i64 {
        if k == self.r() {
            self.rep_v
        } else {
            self.levels[k - 1].v_phi
        }
    }

    /// m_k = deg phi_k.
    pub fn m(&self, k: usize) -> usize {
        self.phi(k).degree().unwrap()
    }

    /// e_1 ... e_{k-1}.
    pub fn e_prod(&self, k: usize) -> i64 {
        self.levels[..k - 1].iter().map(|l| l.e).product()
    }

    /// f_0 ... f_{k-1}.
    pub fn f_prod(&self, k: usize) -> i64 {
        (0..k).map(|i| self.tower.f(i) as i64).product()
    }

    fn check_order(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.r() {
            Err(OmError::LevelOutOfRange(k))
        } else {
            Ok(())
        }
    }

    /// Expansion of `poly` in phi_k.
    pub fn expansion(&self, k: usize, poly: &IntPoly) -> Result<Vec<IntPoly>> {
        self.check_order(k)?;
        phi_expansion(poly, self.phi(k))
    }

    /// v_k(P) in the integer scale of order k.
    pub fn v_r(&self, poly: &IntPoly, k: usize) -> Result<ValOrInf> {
        self.check_order(k)?;
        if poly.is_zero() {
            return Err(OmError::ZeroPolynomial);
        }
        Ok(ValOrInf::int(self.v(k, poly)))
    }

    /// v_k of a nonzero polynomial.
    pub(crate) fn v(&self, k: usize, poly: &IntPoly) -> i64 {
        if k == 1 {
            return content_val(poly, self.p).as_int().expect("nonzero");
        }
        let l = &self.levels[k - 2];
        let step = l.e * l.v_phi + l.h;
        phi_expansion(poly, &l.phi)
            .expect("valid key polynomial")
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| l.e * self.v(k - 1, a) + i as i64 * step)
            .min()
            .unwrap()
    }

    /// Points (i, v_k(a_i) + i V_k) of the phi_k-expansion.
    fn points_of(&self, k: usize, exp: &[IntPoly]) -> Vec<(i64, ValOrInf)> {
        let vk = self.big_v(k);
        exp.iter()
            .enumerate()
            .map(|(i, a)| {
                let u = if a.is_zero() {
                    ValOrInf::Inf
                } else {
                    ValOrInf::int(self.v(k, a) + i as i64 * vk)
                };
                (i as i64, u)
            })
            .collect()
    }

    /// omega_k(P): multiplicity of psi_{k-1} in the residual polynomial of order k-1.
    pub fn omega_r(&self, poly: &IntPoly, k: usize) -> Result<usize> {
        self.check_order(k)?;
        if poly.is_zero() {
            return Err(OmError::ZeroPolynomial);
        }
        let red = if k == 1 {
            let v = self.v(1, poly);
            reduce_poly(&poly.div_exact(&p_pow(self.p, v as u64)), self.p)
        } else {
            let l = &self.levels[k - 2];
            self.residual(k - 1, poly, l.h, l.e).poly
        };
        self.tower.ord_factor(&red, self.tower.psi(k - 1))
    }

    /// N_k^-(P) with the expansion it was built from. Asserts l(N) = omega_k(P).
    pub fn newton_polygon_r(&self, poly: &IntPoly, k: usize) -> Result<OrderPolygon> {
        self.check_order(k)?;
        if poly.is_zero() {
            return Err(OmError::ZeroPolynomial);
        }
        let expansion = phi_expansion(poly, self.phi(k))?;
        let points = self.points_of(k, &expansion);
        let polygon = principal_envelope(&points)?;
        let omega = self.omega_r(poly, k)?;
        ensure!(
            polygon.length() == omega as i64,
            "shape: length {} of N_{k} differs from omega_{k} = {omega}",
            polygon.length()
        );
        let ord = expansion.iter().take_while(|a| a.is_zero()).count() as i64;
        ensure!(polygon.inf_len == ord, "shape: infinite side differs from ord_phi");
        SHAPE_CHECKS.fetch_add(1, Ordering::Relaxed);
        Ok(OrderPolygon { polygon, expansion, points })
    }

    /// Residual coefficient of order k for a nonzero coefficient `a` at
    /// abscissa i with ordinate u = v_k(a phi_k^i).
    fn residual_coeff(&self, k: usize, a: &IntPoly, u: i64) -> TowerElem {
        if k == 1 {
            let b = a.div_exact(&p_pow(self.p, u as u64));
            return self.tower.class_of(&reduce_poly(&b, self.p));
        }
        let l = &self.levels[k - 2];
        let res = self.residual(k - 1, a, l.h, l.e);
        let t = (res.s - l.ell * u).div_euclid(l.e);
        debug_assert_eq!((res.s - l.ell * u).rem_euclid(l.e), 0, "twist not integral");
        let zt = self.tower.pow(&self.tower.z(k - 1), t).expect("z is nonzero");
        self.tower.mul(&zt, &self.tower.class_of(&res.poly))
    }

    /// R_lambda(P) of order k for lambda = -h/e.
    fn residual(&self, k: usize, poly: &IntPoly, h: i64, e: i64) -> Residual {
        let exp = phi_expansion(poly, self.phi(k)).expect("valid key polynomial");
        let pts: Vec<(i64, i64)> = self
            .points_of(k, &exp)
            .into_iter()
            .filter_map(|(i, u)| u.as_int().map(|u| (i, u)))
            .collect();
        let best = pts.iter().map(|&(i, u)| e * u + h * i).min().unwrap();
        let on: Vec<(i64, i64)> = pts.into_iter().filter(|&(i, u)| e * u + h * i == best).collect();
        let s = on[0].0;
        let last = on.last().unwrap().0;
        let d = ((last - s) / e) as usize;
        let mut coeffs = vec![self.tower.zero(k); d + 1];
        for (i, u) in on {
            let j = ((i - s) / e) as usize;
            coeffs[j] = self.residual_coeff(k, &exp[i as usize], u);
        }
        Residual { poly: TowerPoly::new(k, coeffs), s }
    }

    /// R_lambda(P) of order k over F_k.
    pub fn residual_poly_r(&self, poly: &IntPoly, k: usize, lambda: Rat) -> Result<TowerPoly> {
        self.check_order(k)?;
        if poly.is_zero() {
            return Err(OmError::ZeroPolynomial);
        }
        let (h, e) = slope_he(lambda)?;
        let res = self.residual(k, poly, h, e);
        ensure!(!res.poly.coeffs()[0].is_zero(), "residual polynomial divisible by y");
        Ok(res.poly)
    }

    /// Residual polynomial of order k relative to an arbitrary side T on or
    /// below every point in its abscissa range.
    pub fn residual_poly_on_side(&self, poly: &IntPoly, k: usize, side: &PolySide) -> Result<TowerPoly> {
        self.check_order(k)?;
        if poly.is_zero() {
            return Err(OmError::ZeroPolynomial);
        }
        let Slope::Finite { h, e } = side.slope else {
            return Err(OmError::NotAboveSide);
        };
        let exp = phi_expansion(poly, self.phi(k))?;
        let pts = self.points_of(k, &exp);
        let (s0, y0) = side.start;
        let mut coeffs = vec![self.tower.zero(k); (side.len / e + 1) as usize];
        for (i, u) in pts {
            if i < s0 || i > s0 + side.len {
                continue;
            }
            let Some(u) = u.finite() else { continue };
            let line = y0 - Rat::new(h * (i - s0), e);
            if u < line {
                return Err(OmError::NotAboveSide);
            }
            if u == line && (i - s0) % e == 0 {
                let ui = u.to_integer();
                coeffs[((i - s0) / e) as usize] = self.residual_coeff(k, &exp[i as usize], ui);
            }
        }
        Ok(TowerPoly::new(k, coeffs))
    }

    /// t_{k-1}(a)_i = (s_{k-1}(a) - ell_{k-1} v_k(a phi_k^i)) / e_{k-1}, for k >= 2.
    pub fn twist_exponent(&self, a: &IntPoly, i: i64, k: usize) -> Result<i64> {
        self.check_order(k)?;
        if k < 2 {
            return Err(OmError::LevelOutOfRange(k));
        }
        if a.is_zero() {
            return Err(OmError::ZeroPolynomial);
        }
        let l = &self.levels[k - 2];
        let s = self.residual(k - 1, a, l.h, l.e).s;
        let u = self.v(k, a) + i * self.big_v(k);
        let num = s - l.ell * u;
        ensure!(num % l.e == 0, "twist exponent {num}/{} not integral", l.e);
        Ok(num / l.e)
    }

    /// Builds phi_r from the levels alone.
    pub fn construct_representative(&self) -> Result<IntPoly> {
        let r = self.r();
        if r == 1 {
            let psi0 = self.tower.psi(0);
            return Ok(IntPoly::new(
                psi0.coeffs()
                    .iter()
                    .map(|c| match c {
                        TowerElem::Prime(a) => BigInt::from(*a),
                        TowerElem::Ext(_) => unreachable!("psi_0 lives over F_p"),
                    })
                    .collect(),
            ));
        }
        let l = &self.levels[r - 2];
        let ef = l.e * l.f as i64;
        // Leading residual coefficient of phi_{r-1}^{ef} and the target line.
        let c = self.residual_coeff(r - 1, &IntPoly::one(), ef * l.v_phi);
        let cs: Vec<TowerElem> = (0..l.f)
            .map(|j| self.tower.mul(&c, &l.psi.coeffs()[j]))
            .collect();
        let target = ef * (l.e * l.v_phi + l.h);
        let tail = self.construct(r, target, &cs)?;
        Ok(&l.phi.pow(ef as u32) + &tail)
    }

    /// A polynomial of degree < m_k whose order-(k-1) polygon lies on the line
    /// e_{k-1} u + h_{k-1} i = target with residual coefficients `cs`.
    fn construct(&self, k: usize, target: i64, cs: &[TowerElem]) -> Result<IntPoly> {
        let l = &self.levels[k - 2];
        let s = (0..l.e)
            .find(|i| (target - i * l.h).rem_euclid(l.e) == 0)
            .ok_or_else(|| OmError::Internal("no lattice point on construction line".into()))?;
        let u = (target - s * l.h) / l.e;
        let mut acc = IntPoly::zero();
        for (j, c) in cs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let i = s + j as i64 * l.e;
            let uj = u - j as i64 * l.h;
            let a = if k == 2 {
                ensure!(uj >= 0, "negative exponent in construction");
                let TowerElem::Ext(cp) = c else { unreachable!() };
                let lift = IntPoly::new(
                    cp.coeffs()
                        .iter()
                        .map(|x| match x {
                            TowerElem::Prime(a) => BigInt::from(*a),
                            TowerElem::Ext(_) => unreachable!(),
                        })
                        .collect(),
                );
                lift.scale(&p_pow(self.p, uj as u64))
            } else {
                let vj = uj - i * l.v_phi;
                let lo = &self.levels[k - 3];
                let sj = (0..lo.e)
                    .find(|x| (vj - x * lo.h).rem_euclid(lo.e) == 0)
                    .ok_or_else(|| OmError::Internal("no lattice point".into()))?;
                let num = lo.ell * uj - sj;
                ensure!(num % lo.e == 0, "non-integral twist in construction");
                let zt = self.tower.pow(&self.tower.z(k - 2), num / lo.e)?;
                let TowerElem::Ext(phij) = self.tower.mul(&zt, c) else { unreachable!() };
                self.construct(k - 1, vj, phij.coeffs())?
            };
            acc = &acc + &(&a * &l.phi.pow(i as u32));
        }
        Ok(acc)
    }

    fn check_representative(&self) -> Result<()> {
        let r = self.r();
        let l = &self.levels[r - 2];
        ensure!(self.rep.is_monic(), "representative not monic");
        ensure!(
            self.m(r) == l.m * l.e as usize * l.f,
            "deg phi_{r} = {} but m_{r} = {}",
            self.m(r),
            l.m * l.e as usize * l.f
        );
        ensure!(self.omega_r(&self.rep, r)? == 1, "omega_{r}(phi_{r}) != 1");
        ensure!(self.v(r, &self.rep) == self.rep_v, "v_{r}(phi_{r}) != V_{r}");
        let res = self.residual(r - 1, &self.rep, l.h, l.e);
        ensure!(
            res.s == 0 && res.poly.degree() == Some(l.f) && self.tower.pmonic(&res.poly) == l.psi,
            "R_{}(phi_{r}) is not a multiple of psi_{}",
            r - 1,
            r - 1
        );
        Ok(())
    }

    /// Exponent vector (n_0, n_1, ..., n_r) of Phi_i, gamma_i or pi_i.
    pub fn ratfun_exponents(&self, kind: RatFun, i: usize) -> Result<ExponentVector> {
        let r = self.r();
        let max = match kind {
            RatFun::Phi | RatFun::Pi => r,
            RatFun::Gamma => r - 1,
        };
        if i == 0 && kind == RatFun::Pi {
            return Ok(ExponentVector(vec![0; r + 1]));
        }
        if i == 0 || i > max {
            return Err(OmError::LevelOutOfRange(i));
        }
        let mut pis = vec![vec![0i64; r + 1], {
            let mut v = vec![0; r + 1];
            v[0] = 1;
            v
        }];
        let mut phis = vec![vec![0i64; r + 1]];
        let lin = |a: &[i64], x: i64, b: &[i64], y: i64| -> Vec<i64> {
            a.iter().zip(b).map(|(p, q)| x * p + y * q).collect()
        };
        for j in 1..=i.min(r) {
            let mut unit = vec![0; r + 1];
            unit[j] = 1;
            let big_phi = if j == 1 {
                unit
            } else {
                let lp = &self.levels[j - 2];
                let exp = self.tower.f(j - 1) as i64 * (lp.e * lp.v_phi + lp.h);
                lin(&unit, 1, &pis[j - 1], -exp)
            };
            phis.push(big_phi);
            if j < r {
                let l = &self.levels[j - 1];
                pis.push(lin(&phis[j], l.ell, &pis[j], -l.ell_prime));
            }
        }
        Ok(ExponentVector(match kind {
            RatFun::Phi => phis[i].clone(),
            RatFun::Pi => pis[i].clone(),
            RatFun::Gamma => {
                let l = &self.levels[i - 1];
                lin(&phis[i], l.e, &pis[i], -l.h)
            }
        }))
    }

    /// v_r of a rational function given by exponents.
    pub fn v_of_exponents(&self, ev: &ExponentVector) -> i64 {
        let r = self.r();
        let mut total = ev.0[0] * self.e_prod(r);
        for k in 1..=r {
            if ev.0[k] != 0 {
                total += ev.0[k] * self.v(r, self.phi(k));
            }
        }
        total
    }

    /// Lower bound H/(e_1...e_{r-1}) for v(P(theta)) at roots attached to
    /// (this type, lambda_r), and whether it is attained.
    pub fn value_bound_at_root(
        &self,
        poly: &IntPoly,
        lambda: Rat,
        psi: Option<&TowerPoly>,
    ) -> Result<(Rat, bool)> {
        if poly.is_zero() {
            return Err(OmError::ZeroPolynomial);
        }
        let r = self.r();
        let (h, e) = slope_he(lambda)?;
        let exp = phi_expansion(poly, &self.rep)?;
        let best = self
            .points_of(r, &exp)
            .into_iter()
            .filter_map(|(i, u)| u.as_int().map(|u| e * u + h * i))
            .min()
            .unwrap();
        let bound = Rat::new(best, e * self.e_prod(r));
        let res = self.residual(r, poly, h, e);
        let exact = match psi {
            Some(q) => self.tower.ord_factor(&res.poly, q)? == 0,
            None => res.poly.degree() == Some(0),
        };
        Ok((bound, exact))
    }

    /// Always-on checks of the closed formulas for this type.
    fn check_axioms(&self) -> Result<()> {
        let r = self.r();
        let ep = self.e_prod(r);
        let pc = IntPoly::constant(BigInt::from(self.p));
        ensure!(self.v(r, &pc) == ep, "v_{r}(p) != e_1...e_(r-1)");
        ensure!(self.v(r, &IntPoly::one()) == 0, "v_{r}(1) != 0");
        for i in 1..r {
            let ev = |kind| self.ratfun_exponents(kind, i).map(|x| self.v_of_exponents(&x));
            let tail: i64 = self.levels[i..r - 1].iter().map(|l| l.e).product();
            let l = &self.levels[i - 1];
            ensure!(ev(RatFun::Phi)? == tail * l.h, "v_{r}(Phi_{i}) closed formula");
            let pi_next = self.v_of_exponents(&self.ratfun_exponents(RatFun::Pi, i + 1)?);
            ensure!(pi_next == self.pi_value(i + 1), "v_{r}(pi_{}) closed formula", i + 1);
            ensure!(ev(RatFun::Gamma)? == 0, "v_{r}(gamma_{i}) != 0");
            ensure!(self.v(r, &l.phi) == self.phi_value_formula(i), "v_{r}(phi_{i}) closed formula");
            ensure!(self.omega_r(&l.phi, r)? == 0, "omega_{r}(phi_{i}) != 0");
        }
        if r >= 2 {
            ensure!(self.rep_v == self.phi_value_formula(r), "v_{r}(phi_{r}) closed formula");
            ensure!(self.v_of_exponents(&self.ratfun_exponents(RatFun::Phi, r)?) == 0, "v_{r}(Phi_{r}) != 0");
            let prod = &self.rep * &self.levels[r - 2].phi;
            ensure!(
                self.v(r, &prod) == self.rep_v + self.v(r, &self.levels[r - 2].phi),
                "v_{r} not multiplicative"
            );
        }
        AXIOM_CHECKS.fetch_add(1, Ordering::Relaxed);
        Ok(())
    }

    /// v_r(pi_j) = e_j ... e_{r-1} for 1 <= j <= r.
    fn pi_value(&self, j: usize) -> i64 {
        self.levels[j - 1..self.r() - 1].iter().map(|l| l.e).product()
    }

    /// Closed formula for v_r(phi_i), 1 <= i <= r:
    /// e_1...e_{r-1} * sum_{j <= min(i, r-1)} e_j f_j ... e_{i-1} f_{i-1} h_j / (e_1...e_j).
    fn phi_value_formula(&self, i: usize) -> i64 {
        let r = self.r();
        let mut sum = Rat::zero();
        for j in 1..=i.min(r - 1) {
            let ef: i64 = self.levels[j - 1..i - 1].iter().map(|l| l.e * l.f as i64).product();
            sum += Rat::new(ef * self.levels[j - 1].h, self.e_prod(j + 1));
        }
        let v = sum * Rat::from_integer(self.e_prod(r));
        debug_assert!(v.is_integer());
        v.to_integer()
    }
}

fn slope_he(lambda: Rat) -> Result<(i64, i64)> {
    if !lambda.is_negative() {
        return Err(OmError::Internal(format!("slope {lambda} is not negative")));
    }
    Ok((-*lambda.numer(), *lambda.denom()))
}

/// Canonical lift of an element of F_1 = F_p[y]/psi_0 as an integer polynomial.
pub fn lift_prime_poly(g: &TowerPoly) -> IntPoly {
    IntPoly::new(
        g.coeffs()
            .iter()
            .map(|c| match c {
                TowerElem::Prime(a) => BigInt::from(*a),
                TowerElem::Ext(_) => panic!("not a prime-field polynomial"),
            })
            .collect(),
    )
}
