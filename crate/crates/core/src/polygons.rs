//! Principal polygons: lower convex envelopes restricted to sides of negative
//! slope, with an optional side of slope minus infinity.

use std::fmt;

use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{OmError, Result};
use crate::exactmath::{Rat, ValOrInf};

/// Slope of a side. Finite slopes are -h/e with h, e > 0 coprime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slope {
    NegInf,
    Finite { h: i64, e: i64 },
}

impl Slope {
    /// The slope -h/e reduced to lowest terms; h and e must be positive.
    pub fn new(h: i64, e: i64) -> Slope {
        assert!(h > 0 && e > 0, "slopes are negative");
        let g = h.gcd(&e);
        Slope::Finite { h: h / g, e: e / g }
    }

    /// Slope of the negative rational `r`.
    pub fn from_rat(r: Rat) -> Slope {
        assert!(r.is_negative(), "slopes are negative");
        Slope::new(-*r.numer(), *r.denom())
    }

    pub fn value(&self) -> Option<Rat> {
        match *self {
            Slope::NegInf => None,
            Slope::Finite { h, e } => Some(Rat::new(-h, e)),
        }
    }

    pub fn he(&self) -> Option<(i64, i64)> {
        match *self {
            Slope::NegInf => None,
            Slope::Finite { h, e } => Some((h, e)),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self.value(), other.value()) {
            (None, None) => std::cmp::Ordering::Equal,
            (None, Some(_)) => std::cmp::Ordering::Less,
            (Some(_), None) => std::cmp::Ordering::Greater,
            (Some(a), Some(b)) => a.cmp(&b),
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::NegInf => write!(f, "-inf"),
            Slope::Finite { h, e } => write!(f, "-{h}/{e}"),
        }
    }
}

/// A side, or a single vertex when `len == 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolySide {
    pub slope: Slope,
    /// Initial point; for a minus-infinity side, the finite end point.
    pub start: (i64, Rat),
    /// Length of the horizontal projection, E.
    pub len: i64,
}

impl PolySide {
    /// E(S) = l(S).
    pub fn length(&self) -> i64 {
        self.len
    }

    /// H(S), `None` for slope minus infinity.
    pub fn height(&self) -> Option<Rat> {
        self.slope
            .he()
            .map(|(h, e)| Rat::from_integer(self.len) * Rat::new(h, e))
    }

    /// d(S) = E/e; one by convention for slope minus infinity.
    pub fn degree(&self) -> i64 {
        match self.slope {
            Slope::NegInf => 1,
            Slope::Finite { e, .. } => self.len / e,
        }
    }

    pub fn end(&self) -> (i64, Rat) {
        match self.slope {
            Slope::NegInf => self.start,
            Slope::Finite { h, e } => (
                self.start.0 + self.len,
                self.start.1 - Rat::new(h * self.len, e),
            ),
        }
    }

    /// ind(S) = (EH - E - H + d)/2 for finite slopes, 0 otherwise.
    pub fn index(&self) -> i64 {
        match self.slope {
            Slope::NegInf => 0,
            Slope::Finite { .. } => {
                let hh = self.height().unwrap();
                assert!(hh.is_integer(), "index of a side with non-integral height");
                let (ee, hh, d) = (self.len, hh.to_integer(), self.degree());
                (ee * hh - ee - hh + d) / 2
            }
        }
    }
}

/// N = S_inf + S_1 + ... + S_g with strictly increasing finite slopes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrincipalPolygon {
    /// l_inf, length of the side of slope minus infinity (0 if absent).
    pub inf_len: i64,
    /// First vertex of the finite part.
    pub start: (i64, Rat),
    pub sides: Vec<PolySide>,
}

impl PrincipalPolygon {
    pub fn point(x: i64, y: Rat) -> Self {
        PrincipalPolygon { inf_len: 0, start: (x, y), sides: Vec::new() }
    }

    /// Builds a polygon from a start point and (slope, length) pairs in any order.
    pub fn from_sides(inf_len: i64, start: (i64, Rat), sides: &[(Slope, i64)]) -> Self {
        let mut sorted: Vec<(Slope, i64)> =
            sides.iter().copied().filter(|(s, l)| *l > 0 && *s != Slope::NegInf).collect();
        sorted.sort_by_key(|a| a.0);
        let mut merged: Vec<(Slope, i64)> = Vec::new();
        for (s, l) in sorted {
            match merged.last_mut() {
                Some(last) if last.0 == s => last.1 += l,
                _ => merged.push((s, l)),
            }
        }
        let mut out = Vec::new();
        let mut cur = start;
        for (slope, len) in merged {
            let side = PolySide { slope, start: cur, len };
            cur = side.end();
            out.push(side);
        }
        PrincipalPolygon { inf_len, start, sides: out }
    }

    /// Vertices of the finite part, from left to right.
    pub fn vertices(&self) -> Vec<(i64, Rat)> {
        let mut v = vec![self.start];
        v.extend(self.sides.iter().map(|s| s.end()));
        v
    }

    /// l(N), including the minus-infinity side.
    pub fn length(&self) -> i64 {
        self.inf_len + self.sides.iter().map(|s| s.len).sum::<i64>()
    }

    /// Total height of the finite part.
    pub fn finite_height(&self) -> Rat {
        self.sides.iter().map(|s| s.height().unwrap()).sum()
    }

    pub fn end(&self) -> (i64, Rat) {
        self.sides.last().map_or(self.start, |s| s.end())
    }

    /// The minus-infinity side as a [`PolySide`], if present.
    pub fn inf_side(&self) -> Option<PolySide> {
        (self.inf_len > 0).then_some(PolySide { slope: Slope::NegInf, start: self.start, len: self.inf_len })
    }

    /// All sides including the minus-infinity side first.
    pub fn all_sides(&self) -> Vec<PolySide> {
        self.inf_side().into_iter().chain(self.sides.iter().cloned()).collect()
    }

    /// Ordinate of N at integer abscissa `x` inside the finite part.
    pub fn ordinate_at(&self, x: i64) -> Option<Rat> {
        if x < self.start.0 || x > self.end().0 {
            return None;
        }
        if self.sides.is_empty() {
            return Some(self.start.1);
        }
        for s in &self.sides {
            let (x1, _) = s.end();
            if x <= x1 {
                let (h, e) = s.slope.he().unwrap();
                return Some(s.start.1 - Rat::new(h * (x - s.start.0), e));
            }
        }
        None
    }
}

impl fmt::Display for PrincipalPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inf_len > 0 {
            write!(f, "[-inf x{}] ", self.inf_len)?;
        }
        let pts: Vec<String> = self.vertices().iter().map(|(x, y)| format!("({x},{y})")).collect();
        write!(f, "{}", pts.join(" -> "))
    }
}

/// Lower convex envelope restricted to negative slopes. Points with infinite
/// ordinate before the first finite point become the minus-infinity side,
/// whose length is the first finite abscissa.
pub fn principal_envelope(points: &[(i64, ValOrInf)]) -> Result<PrincipalPolygon> {
    let mut fin: Vec<(i64, Rat)> = points
        .iter()
        .filter_map(|(x, v)| v.finite().map(|y| (*x, y)))
        .collect();
    if fin.is_empty() {
        return Err(OmError::NoFinitePoint);
    }
    fin.sort_by_key(|p| p.0);
    let x0 = fin[0].0;
    // Only points up to the first minimum ordinate matter for the principal part.
    let ymin = fin.iter().map(|p| p.1).min().unwrap();
    let cut = fin.iter().position(|p| p.1 == ymin).unwrap();
    fin.truncate(cut + 1);
    let mut hull: Vec<(i64, Rat)> = Vec::new();
    for pt in fin {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // Drop b unless it is strictly below segment a-pt.
            let lhs = (b.1 - a.1) * Rat::from_integer(pt.0 - a.0);
            let rhs = (pt.1 - a.1) * Rat::from_integer(b.0 - a.0);
            if lhs >= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut sides = Vec::new();
    for w in hull.windows(2) {
        let (a, b) = (w[0], w[1]);
        let dx = b.0 - a.0;
        let dy = a.1 - b.1;
        let s = dy / Rat::from_integer(dx);
        sides.push(PolySide {
            slope: Slope::new(*s.numer(), *s.denom()),
            start: a,
            len: dx,
        });
    }
    Ok(PrincipalPolygon { inf_len: x0.max(0), start: hull[0], sides })
}

/// Semigroup sum: sides joined by increasing slope from the summed start point.
pub fn polygon_add(n: &PrincipalPolygon, m: &PrincipalPolygon) -> PrincipalPolygon {
    let start = (n.start.0 + m.start.0, n.start.1 + m.start.1);
    let sides: Vec<(Slope, i64)> =
        n.sides.iter().chain(m.sides.iter()).map(|s| (s.slope, s.len)).collect();
    PrincipalPolygon::from_sides(n.inf_len + m.inf_len, start, &sides)
}

/// S_lambda(N): the side of slope `lambda`, or the vertex of first contact.
pub fn lambda_component(n: &PrincipalPolygon, h: i64, e: i64) -> PolySide {
    let slope = Slope::new(h, e);
    if let Some(s) = n.sides.iter().find(|s| s.slope == slope) {
        return s.clone();
    }
    // Vertex: the first vertex after all sides steeper than lambda.
    let mut v = n.start;
    for s in &n.sides {
        if s.slope < slope {
            v = s.end();
        }
    }
    PolySide { slope, start: v, len: 0 }
}

/// ind(N) by the closed formula, cross-checked against the lattice count.
pub fn polygon_index(n: &PrincipalPolygon) -> i64 {
    let mut ind: i64 = n.sides.iter().map(|s| s.index()).sum();
    for (i, si) in n.sides.iter().enumerate() {
        for sj in &n.sides[i + 1..] {
            ind += si.len * sj.height().unwrap().to_integer();
        }
    }
    let hfin = n.finite_height();
    ind += n.inf_len * hfin.to_integer();
    debug_assert_eq!(ind, lattice_index(n), "index formula disagrees with lattice count");
    ind
}

/// ind(N) by counting lattice points: sum of floor(y_i) over interior abscissas
/// of the finite part plus the rectangle under the minus-infinity side.
pub fn lattice_index(n: &PrincipalPolygon) -> i64 {
    let (x1, y1) = n.end();
    let mut total = 0;
    for x in n.start.0 + 1..x1 {
        let y = n.ordinate_at(x).unwrap() - y1;
        total += y.floor().to_integer();
    }
    let hfin = n.start.1 - y1;
    total + n.inf_len * hfin.floor().to_integer()
}

/// Serializable vertex list used by renderers.
#[derive(Serialize)]
pub struct PolygonView {
    pub inf_len: i64,
    pub vertices: Vec<(i64, String)>,
    pub slopes: Vec<String>,
}

impl From<&PrincipalPolygon> for PolygonView {
    fn from(n: &PrincipalPolygon) -> Self {
        PolygonView {
            inf_len: n.inf_len,
            vertices: n.vertices().iter().map(|(x, y)| (*x, y.to_string())).collect(),
            slopes: n.sides.iter().map(|s| s.slope.to_string()).collect(),
        }
    }
}
