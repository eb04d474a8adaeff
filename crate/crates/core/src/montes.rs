//! The factorization driver. Builds the tree of types order by order, detects
//! complete types, accumulates ind_r(f) and reconciles the index ledger with the
//! local bases of the factors.

use num_traits::{Signed, Zero};

use crate::error::{ensure, OmError, Result};
use crate::exactmath::{check_prime, is_squarefree, reduce_mod_p, resultant, vp_int, IntPoly, Rat, ValOrInf};
use crate::gftower::{FieldTower, TowerPoly};
use crate::omtypes::OMType;
use crate::polygons::{polygon_index, PrincipalPolygon, Slope};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeStatus {
    Incomplete,
    Complete,
    /// The node's representative divides f exactly.
    ExactFactor,
}

/// One branch of the factorization tree.
#[derive(Clone, Debug)]
pub struct TypeNode {
    pub ty: OMType,
    pub status: NodeStatus,
    /// omega_{r+1}(f) for a type of order r.
    pub multiplicity: usize,
    /// Branch indices from the root; children of a node are numbered with the
    /// minus-infinity side first, then residual factors side by side.
    pub path: Vec<usize>,
    /// ind_t contributions of the ancestors, one per order.
    pub ind_path: Vec<i64>,
}

impl TypeNode {
    /// Order of the type (number of levels).
    pub fn order(&self) -> usize {
        self.ty.levels().len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelSummary {
    pub order: usize,
    pub phi: IntPoly,
    pub slope: Slope,
    pub psi: TowerPoly,
}

#[derive(Clone, Debug)]
pub struct FactorReport {
    pub degree: usize,
    pub e: i64,
    pub f_res: i64,
    /// The approximation is itself the factor.
    pub exact: bool,
    pub psi0: TowerPoly,
    pub levels: Vec<LevelSummary>,
    pub approx: IntPoly,
    /// v(approx(theta)) for a root theta of the factor.
    pub approx_quality: ValOrInf,
    /// Slope of the one-sided polygon of f with respect to `approx`.
    pub approx_slope: Slope,
    /// v_p of the index of Z_p[theta] in the local order spanned by the
    /// local basis.
    pub local_index: i64,
    pub ind_contributions: Vec<i64>,
    pub path: Vec<usize>,
    pub ty: OMType,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeEntry {
    pub path: Vec<usize>,
    pub order: usize,
    pub ind: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IndexLedger {
    /// ind_1(f), ind_2(f), ...
    pub per_order: Vec<i64>,
    pub total: i64,
    pub per_type: Vec<TypeEntry>,
    /// (i, j, Res(F_i, F_j)) for factors sharing psi_0.
    pub res_entries: Vec<(usize, usize, i64)>,
}

impl IndexLedger {
    fn add(&mut self, order: usize, path: &[usize], ind: i64) {
        if self.per_order.len() < order {
            self.per_order.resize(order, 0);
        }
        self.per_order[order - 1] += ind;
        self.total += ind;
        self.per_type.push(TypeEntry { path: path.to_vec(), order, ind });
    }
}

#[derive(Clone, Debug)]
pub struct Factorization {
    pub factors: Vec<FactorReport>,
    pub ledger: IndexLedger,
    /// Highest order at which a polygon of an incomplete node was computed.
    pub orders: usize,
}

/// Factors a monic separable f over Z_p.
pub fn montes_factor(f: &IntPoly, p: u64) -> Result<Factorization> {
    montes_factor_traced(f, p, &mut |_| {})
}

/// `montes_factor` reporting per-order polygons and residual polynomials.
pub fn montes_factor_traced(f: &IntPoly, p: u64, trace: &mut dyn FnMut(&str)) -> Result<Factorization> {
    check_prime(p)?;
    if f.is_zero() {
        return Err(OmError::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(OmError::NotMonic);
    }
    if !is_squarefree(f) {
        return Err(OmError::NotSeparable);
    }
    let mut ledger = IndexLedger::default();
    let mut done: Vec<TypeNode> = Vec::new();
    let mut frontier = Vec::new();

    if f.degree() == Some(0) {
        return Ok(Factorization { factors: Vec::new(), ledger, orders: 0 });
    }
    let roots = root_types(f, p)?;
    trace(&format!("order 0: f mod {p} has {} irreducible factors", roots.len()));
    for (i, (ty, a)) in roots.into_iter().enumerate() {
        trace(&format!("  psi_0 = {} with multiplicity {a}", ty.psi0().render("y")));
        let status = if a == 1 { NodeStatus::Complete } else { NodeStatus::Incomplete };
        let node = TypeNode { ty, status, multiplicity: a, path: vec![i], ind_path: Vec::new() };
        if a == 1 {
            done.push(node);
        } else {
            frontier.push(node);
        }
    }

    let mut order = 0;
    while !frontier.is_empty() {
        order += 1;
        ensure!(
            order <= ledger.total as usize + 1,
            "termination: order {order} exceeds sum of ind_r + 1 = {}",
            ledger.total + 1
        );
        let mut next = Vec::new();
        for node in frontier {
            trace(&format!("order {order}, path {:?}", node.path));
            let step = branch(f, &node.ty, order, trace)?;
            let ind = node.ty.f_prod(order) * polygon_index(&step.polygon);
            ledger.add(order, &node.path, ind);
            trace(&format!("  ind = {ind}"));
            let mut ind_path = node.ind_path.clone();
            ind_path.push(ind);
            for (i, b) in step.branches.into_iter().enumerate() {
                let (ty, status, multiplicity) = match b {
                    Branch::Exact => (node.ty.clone(), NodeStatus::ExactFactor, 1),
                    Branch::Child { ty, multiplicity: 1 } => (ty, NodeStatus::Complete, 1),
                    Branch::Child { ty, multiplicity } => (ty, NodeStatus::Incomplete, multiplicity),
                };
                let child = TypeNode { ty, status, multiplicity, path: extend_path(&node.path, i), ind_path: ind_path.clone() };
                if status == NodeStatus::Incomplete {
                    next.push(child);
                } else {
                    done.push(child);
                }
            }
        }
        frontier = next;
    }

    done.sort_by(|a, b| a.path.cmp(&b.path));
    let mut factors = Vec::with_capacity(done.len());
    for node in done {
        factors.push(report(f, node)?);
    }
    let deg_sum: usize = factors.iter().map(|r| r.degree).sum();
    ensure!(Some(deg_sum) == f.degree(), "factor degrees sum to {deg_sum}");

    let mut reconciled: i64 = factors.iter().map(|r| r.local_index).sum();
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            let r = pair_res(&factors[i], &factors[j]);
            if r > 0 {
                ledger.res_entries.push((i, j, r));
            }
            reconciled += r;
        }
    }
    ensure!(
        reconciled == ledger.total,
        "index ledger: local indices plus pairwise resultants give {reconciled}, driver gives {}",
        ledger.total
    );
    Ok(Factorization { factors, ledger, orders: order })
}

/// A child of a node: the exact factor phi_r from a minus-infinity side, or
/// the extension by (lambda, psi) for a residual factor psi.
#[derive(Clone, Debug)]
pub enum Branch {
    Exact,
    Child { ty: OMType, multiplicity: usize },
}

/// One node's polygon N_r^-(f) and its children in branch order.
#[derive(Clone, Debug)]
pub struct Step {
    pub polygon: PrincipalPolygon,
    pub residuals: Vec<(Slope, TowerPoly)>,
    pub branches: Vec<Branch>,
}

/// Computes N_r^-(f) for a type of order r-1 and branches on its sides.
pub fn branch(f: &IntPoly, ty: &OMType, order: usize, trace: &mut dyn FnMut(&str)) -> Result<Step> {
    let polygon = ty.newton_polygon_r(f, order)?.polygon;
    trace(&format!("  N_{order} = {polygon}"));
    let mut branches = Vec::new();
    let mut residuals = Vec::new();
    if polygon.inf_len > 0 {
        ensure!(polygon.inf_len == 1, "f not separable at phi_{order}");
        trace(&format!("  exact factor {}", ty.representative()));
        branches.push(Branch::Exact);
    }
    for side in &polygon.sides {
        let (h, e) = side.slope.he().unwrap();
        let res = ty.residual_poly_r(f, order, Rat::new(-h, e))?;
        ensure!(res.degree() == Some(side.degree() as usize), "residual degree differs from the side degree");
        let (_, facs) = ty.tower().factor(&res)?;
        trace(&format!("  slope {}: R = {}", side.slope, res.render("y")));
        residuals.push((side.slope, res));
        for (psi, a) in facs {
            trace(&format!("    psi = {} with multiplicity {a}", psi.render("y")));
            let child = ty.extend(h, e, psi)?;
            ensure!(
                child.omega_r(f, order + 1)? == a,
                "omega_{}(f) differs from the residual multiplicity",
                order + 1
            );
            branches.push(Branch::Child { ty: child, multiplicity: a });
        }
    }
    Ok(Step { polygon, residuals, branches })
}

/// Order-0 types of f, one per irreducible factor of f mod p, with multiplicities.
pub fn root_types(f: &IntPoly, p: u64) -> Result<Vec<(OMType, usize)>> {
    let base = FieldTower::new(p)?;
    let (_, fac0) = base.factor(&reduce_mod_p(f, p)?)?;
    fac0.into_iter()
        .map(|(psi0, a)| {
            let ty = OMType::order_zero(p, psi0)?;
            ensure!(ty.omega_r(f, 1)? == a, "omega_1(f) differs from the multiplicity mod p");
            Ok((ty, a))
        })
        .collect()
}

/// The type reached by following branch indices from the root.
pub fn type_at_path(f: &IntPoly, p: u64, path: &[usize]) -> Result<OMType> {
    let (&first, rest) = path.split_first().ok_or_else(|| OmError::Internal("empty type path".into()))?;
    let roots = root_types(f, p)?;
    let mut ty = roots
        .into_iter()
        .nth(first)
        .ok_or(OmError::LevelOutOfRange(first))?
        .0;
    for (k, &i) in rest.iter().enumerate() {
        let step = branch(f, &ty, k + 1, &mut |_| {})?;
        ty = match step.branches.into_iter().nth(i) {
            Some(Branch::Child { ty, .. }) => ty,
            Some(Branch::Exact) => return Err(OmError::BadKeyPolynomial),
            None => return Err(OmError::LevelOutOfRange(i)),
        };
    }
    Ok(ty)
}

fn extend_path(path: &[usize], i: usize) -> Vec<usize> {
    let mut p = path.to_vec();
    p.push(i);
    p
}

fn report(f: &IntPoly, node: TypeNode) -> Result<FactorReport> {
    let ty = &node.ty;
    let r = ty.levels().len();
    let e: i64 = ty.levels().iter().map(|l| l.e).product();
    let f_res = ty.f_prod(r + 1);
    let levels = ty
        .levels()
        .iter()
        .enumerate()
        .map(|(i, l)| LevelSummary { order: i + 1, phi: l.phi.clone(), slope: Slope::new(l.h, l.e), psi: l.psi.clone() })
        .collect();
    let approx = ty.representative().clone();
    let degree = approx.degree().unwrap();
    ensure!(degree as i64 == e * f_res, "degree {degree} != e*f = {}", e * f_res);
    let (exact, approx_slope, approx_quality) = if node.status == NodeStatus::ExactFactor {
        (true, Slope::NegInf, ValOrInf::Inf)
    } else {
        let np = ty.newton_polygon_r(f, r + 1)?;
        let poly = np.polygon;
        ensure!(poly.length() == 1, "complete type with omega != 1");
        if poly.inf_len == 1 {
            (true, Slope::NegInf, ValOrInf::Inf)
        } else {
            let (h, e1) = poly.sides[0].slope.he().unwrap();
            ensure!(e1 == 1, "one-sided length-1 polygon with non-integral slope");
            let q = Rat::new(ty.rep_value() + h, ty.e_prod(r + 1));
            (false, poly.sides[0].slope, ValOrInf::Fin(q))
        }
    };
    let local_index = local_index(ty)?;
    Ok(FactorReport {
        degree,
        e,
        f_res,
        exact,
        psi0: ty.psi0().clone(),
        levels,
        approx,
        approx_quality,
        approx_slope,
        local_index,
        ind_contributions: node.ind_path.clone(),
        path: node.path.clone(),
        ty: ty.clone(),
    })
}

/// nu_s = v(phi_s(theta)) for s = 1..r, with r the number of levels.
pub fn phi_values(ty: &OMType) -> Vec<Rat> {
    let lv = ty.levels();
    (1..=lv.len())
        .map(|s| {
            let mut sum = Rat::zero();
            for i in 1..=s {
                let ef: i64 = lv[i - 1..s - 1].iter().map(|l| l.e * l.f as i64).product();
                let e_upto: i64 = lv[..i].iter().map(|l| l.e).product();
                sum += Rat::new(ef * lv[i - 1].h, e_upto);
            }
            sum
        })
        .collect()
}

/// Exponents nu_j = sum_s j_s nu_s over the index set 0 <= j_s < e_s f_s
/// (s >= 1) with their floors. The j_0 coordinate only repeats each entry
/// f_0 times and is left out.
pub fn local_basis_exponents(node: &TypeNode) -> Result<Vec<(Vec<usize>, Rat, i64)>> {
    if node.status == NodeStatus::Incomplete {
        return Err(OmError::IncompleteType);
    }
    Ok(basis_exponents(&node.ty))
}

fn basis_exponents(ty: &OMType) -> Vec<(Vec<usize>, Rat, i64)> {
    let nus = phi_values(ty);
    let bounds: Vec<usize> = ty.levels().iter().map(|l| l.e as usize * l.f).collect();
    let mut out = Vec::new();
    let mut j = vec![0usize; bounds.len()];
    loop {
        let nu: Rat = j.iter().zip(&nus).map(|(&js, nu)| Rat::from_integer(js as i64) * nu).sum();
        out.push((j.clone(), nu, nu.floor().to_integer()));
        let mut k = 0;
        while k < j.len() {
            j[k] += 1;
            if j[k] < bounds[k] {
                break;
            }
            j[k] = 0;
            k += 1;
        }
        if k == j.len() {
            break;
        }
    }
    out
}

/// f_0 * sum of floor(nu_j).
fn local_index(ty: &OMType) -> Result<i64> {
    let n = ty.representative().degree().unwrap() as i64;
    let js = basis_exponents(ty);
    let f0 = ty.tower().f(0) as i64;
    ensure!(js.len() as i64 * f0 == n, "local basis has {} elements, degree {n}", js.len() as i64 * f0);
    Ok(f0 * js.iter().map(|x| x.2).sum::<i64>())
}

/// Length E and height H of the one-sided polygon of factor F at order s,
/// where F's type agrees with the other factor's up to level s-1.
fn side_at(fr: &FactorReport, s: usize) -> (i64, Option<i64>) {
    let lv = fr.ty.levels();
    if s <= lv.len() {
        let l = &lv[s - 1];
        let ee = fr.degree as i64 / fr.ty.m(s) as i64;
        (ee, Some(ee * l.h / l.e))
    } else {
        match fr.approx_slope {
            Slope::NegInf => (1, None),
            Slope::Finite { h, .. } => (1, Some(h)),
        }
    }
}

fn min_pair(e1: i64, h1: Option<i64>, e2: i64, h2: Option<i64>) -> Option<i64> {
    match (h1, h2) {
        (None, None) => None,
        (Some(a), None) => Some(e2 * a),
        (None, Some(b)) => Some(e1 * b),
        (Some(a), Some(b)) => Some((e1 * b).min(e2 * a)),
    }
}

/// v_p(Res(F, G)) from the type data of two distinct factors.
fn pair_res(a: &FactorReport, b: &FactorReport) -> i64 {
    if a.psi0 != b.psi0 {
        return 0;
    }
    let mut total = 0;
    let mut s = 1;
    loop {
        let (ea, ha) = side_at(a, s);
        let (eb, hb) = side_at(b, s);
        let fp = a.ty.f_prod(s.min(a.ty.r()));
        total += fp * min_pair(ea, ha, eb, hb).expect("distinct factors");
        let (la, lb) = (a.ty.levels(), b.ty.levels());
        if s > la.len() || s > lb.len() {
            break;
        }
        let (x, y) = (&la[s - 1], &lb[s - 1]);
        if (x.h, x.e, &x.psi) != (y.h, y.e, &y.psi) {
            break;
        }
        s += 1;
    }
    total
}

fn side_pairs(np: &PrincipalPolygon, nq: &PrincipalPolygon) -> Option<i64> {
    let sides = |n: &PrincipalPolygon| -> Vec<(i64, Option<i64>)> {
        let mut v = Vec::new();
        if n.inf_len > 0 {
            v.push((n.inf_len, None));
        }
        for s in &n.sides {
            v.push((s.len, Some(s.height().unwrap().to_integer())));
        }
        v
    };
    let mut total = 0;
    for (e1, h1) in sides(np) {
        for &(e2, h2) in &sides(nq) {
            total += min_pair(e1, h1, e2, h2)?;
        }
    }
    Some(total)
}

/// Res_t(P, Q) at the order r of the representative of t.
pub fn res_t(pp: &IntPoly, qq: &IntPoly, t: &OMType) -> Result<ValOrInf> {
    if !pp.is_monic() || !qq.is_monic() {
        return Err(OmError::NotMonic);
    }
    let r = t.r();
    let np = t.newton_polygon_r(pp, r)?.polygon;
    let nq = t.newton_polygon_r(qq, r)?.polygon;
    Ok(match side_pairs(&np, &nq) {
        Some(v) => ValOrInf::int(t.f_prod(r) * v),
        None => ValOrInf::Inf,
    })
}

/// Sum of Res_t over all types of order r-1 shared by P and Q, for r = 1, 2, ...
/// Recurses until the types of P and Q separate.
pub fn resultant_orders(pp: &IntPoly, qq: &IntPoly, p: u64) -> Result<Vec<i64>> {
    check_prime(p)?;
    if pp.is_zero() || qq.is_zero() {
        return Err(OmError::ZeroPolynomial);
    }
    if !pp.is_monic() || !qq.is_monic() {
        return Err(OmError::NotMonic);
    }
    if resultant(pp, qq)?.is_zero() {
        return Err(OmError::Reducible("P and Q share a factor".into()));
    }
    let base = FieldTower::new(p)?;
    let mut out: Vec<i64> = Vec::new();
    if pp.degree() == Some(0) || qq.degree() == Some(0) {
        return Ok(out);
    }
    let (_, fp) = base.factor(&reduce_mod_p(pp, p)?)?;
    let (_, fq) = base.factor(&reduce_mod_p(qq, p)?)?;
    let mut work: Vec<OMType> = Vec::new();
    for (psi, _) in &fp {
        if fq.iter().any(|(q, _)| q == psi) {
            work.push(OMType::order_zero(p, psi.clone())?);
        }
    }
    const MAX_ORDER: usize = 64;
    while let Some(t) = work.pop() {
        let r = t.r();
        ensure!(r <= MAX_ORDER, "resultant recursion exceeded order {MAX_ORDER}");
        let np = t.newton_polygon_r(pp, r)?.polygon;
        let nq = t.newton_polygon_r(qq, r)?.polygon;
        let v = side_pairs(&np, &nq).ok_or_else(|| OmError::Internal("shared exact factor".into()))?;
        if out.len() < r {
            out.resize(r, 0);
        }
        out[r - 1] += t.f_prod(r) * v;
        for sp in &np.sides {
            for sq in &nq.sides {
                if sp.slope != sq.slope {
                    continue;
                }
                let (h, e) = sp.slope.he().unwrap();
                let lambda = Rat::new(-h, e);
                let (_, rp) = t.tower().factor(&t.residual_poly_r(pp, r, lambda)?)?;
                let (_, rq) = t.tower().factor(&t.residual_poly_r(qq, r, lambda)?)?;
                for (psi, _) in &rp {
                    if rq.iter().any(|(q, _)| q == psi) {
                        work.push(t.extend(h, e, psi.clone())?);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// v_p(Res(P, Q)) from the exact integer resultant.
pub fn resultant_valuation(pp: &IntPoly, qq: &IntPoly, p: u64) -> Result<ValOrInf> {
    let r = resultant(pp, qq)?;
    Ok(match vp_int(&r.abs(), p) {
        Some(v) => ValOrInf::int(v),
        None => ValOrInf::Inf,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn golden_first_case() {
        let fz = montes_factor(&ip(&[4, 8, 4, 0, 1]), 2).unwrap();
        assert_eq!(fz.factors.len(), 1);
        let r = &fz.factors[0];
        assert_eq!((r.degree, r.e, r.f_res), (4, 4, 1));
        assert_eq!(fz.ledger.per_order, vec![2, 1]);
        assert_eq!(r.local_index, 3);
    }

    #[test]
    fn resultant_small() {
        let (pp, qq) = (ip(&[2, 1]), ip(&[6, 1]));
        assert_eq!(resultant_orders(&pp, &qq, 2).unwrap(), vec![1, 1]);
        let t0 = OMType::order_zero(2, TowerPoly::from_u64s(0, &[0, 1])).unwrap();
        assert_eq!(res_t(&pp, &qq, &t0).unwrap(), ValOrInf::int(1));
    }
}
