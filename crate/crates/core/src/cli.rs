//! Command-line front end: polynomial parsing, the `om-factor` subcommands,
//! the JSON report and polygon rendering.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{OmError, Result};
use crate::exactmath::{squarefree_part, IntPoly, Rat, ValOrInf};
use crate::gftower::{TowerElem, TowerPoly};
use crate::montes::{
    branch, montes_factor_traced, resultant_orders, resultant_valuation, root_types, type_at_path, Factorization,
};
use crate::omtypes::OMType;
use crate::polygons::{polygon_index, PrincipalPolygon, Slope};

pub const SCHEMA_ID: &str = "om-factor/1";

const MAX_EXPONENT: u64 = 100_000;

/// Parses `expr := term (('+'|'-') term)*`, `term := factor ('*' factor)*`,
/// `factor := INT | 'x' ('^' UINT)? | '(' expr ')'`, with an optional leading
/// sign on each expr, or the dense list form `[c0, c1, ..., cn]`.
pub fn parse_poly(src: &str) -> Result<IntPoly> {
    let mut p = PolyParser { s: src.as_bytes(), pos: 0 };
    p.ws();
    if p.peek() == Some(b'[') {
        return p.list();
    }
    let v = p.expr()?;
    p.ws();
    if p.pos < p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

struct PolyParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl PolyParser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> OmError {
        OmError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn digits(&mut self) -> Result<&str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn list(&mut self) -> Result<IntPoly> {
        self.expect(b'[')?;
        let mut cs = Vec::new();
        loop {
            self.ws();
            if cs.is_empty() && self.peek() == Some(b']') {
                self.pos += 1;
                break;
            }
            let neg = match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                _ => false,
            };
            self.ws();
            let c: BigInt = self.digits()?.parse().unwrap();
            cs.push(if neg { -c } else { c });
            self.ws();
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.err("expected ',' or ']'")),
            }
        }
        self.ws();
        if self.pos < self.s.len() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(IntPoly::new(cs))
    }

    fn expr(&mut self) -> Result<IntPoly> {
        self.ws();
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let first = self.term()?;
        let mut acc = if neg { -&first } else { first };
        loop {
            self.ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<IntPoly> {
        let mut acc = self.factor()?;
        loop {
            self.ws();
            if self.peek() != Some(b'*') {
                return Ok(acc);
            }
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
    }

    fn factor(&mut self) -> Result<IntPoly> {
        self.ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(IntPoly::constant(self.digits()?.parse().unwrap())),
            Some(b'x') => {
                self.pos += 1;
                self.ws();
                if self.peek() != Some(b'^') {
                    return Ok(IntPoly::x());
                }
                self.pos += 1;
                self.ws();
                let at = self.pos;
                let k: u64 = self
                    .digits()?
                    .parse()
                    .map_err(|_| OmError::Parse { pos: at, msg: "exponent too large".into() })?;
                if k > MAX_EXPONENT {
                    return Err(OmError::Parse { pos: at, msg: "exponent too large".into() });
                }
                Ok(IntPoly::monomial(BigInt::one(), k as usize))
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_alphabetic() => Err(OmError::NotUnivariate(c as char)),
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "om-factor", version, about = "p-adic factorization of monic integer polynomials")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Input {
    /// Prime p.
    #[arg(short = 'p', long)]
    prime: u64,
    /// Monic polynomial in x, e.g. "x^4+4*x^2+8*x+4" or "[4,8,4,0,1]".
    #[arg(short = 'f', long = "poly")]
    poly: String,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Factor f over Z_p and report every irreducible factor.
    Factor {
        #[command(flatten)]
        input: Input,
        /// JSON report (schema om-factor/1).
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Plain-text report (the default).
        #[arg(long)]
        text: bool,
        /// Replace f by its squarefree part first.
        #[arg(long)]
        squarefree: bool,
        /// Dump per-order polygons and residual polynomials to stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Render N_r^-(f) for one type, or N_1 for every factor of f mod p.
    Polygon {
        #[command(flatten)]
        input: Input,
        /// Branch indices from the root, e.g. "0/1".
        #[arg(long = "type")]
        type_path: Option<String>,
        /// Write an SVG drawing to this path.
        #[arg(long, conflicts_with = "ascii")]
        svg: Option<String>,
        /// Print an ASCII drawing.
        #[arg(long)]
        ascii: bool,
    },
    /// Print ind(f) and its per-order breakdown.
    Index {
        #[command(flatten)]
        input: Input,
    },
    /// v_p(Res(P, Q)) with the per-order Res_r and the exact resultant.
    Resultant {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'g', long = "other")]
        other: String,
    },
}

/// Exit code with everything written to stdout and stderr.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum CliError {
    Om(OmError),
    Io(String),
}

impl From<OmError> for CliError {
    fn from(e: OmError) -> Self {
        CliError::Om(e)
    }
}

/// Runs the CLI on `argv` (program name first).
pub fn run<I, S>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CliOutput { code, stdout: text, stderr: String::new() }
            } else {
                CliOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut out = CliOutput::default();
    match dispatch(cli.cmd, &mut out) {
        Ok(()) => out,
        Err(CliError::Om(e)) => {
            out.code = if e.is_internal() { 2 } else { 1 };
            let _ = writeln!(out.stderr, "error: {e}");
            out
        }
        Err(CliError::Io(msg)) => {
            out.code = 1;
            let _ = writeln!(out.stderr, "error: {msg}");
            out
        }
    }
}

fn trace_from_env() -> bool {
    std::env::var("OM_FACTOR_TRACE").is_ok_and(|v| v == "1")
}

fn dispatch(cmd: Cmd, out: &mut CliOutput) -> std::result::Result<(), CliError> {
    match cmd {
        Cmd::Factor { input, json, text: _, squarefree, trace } => {
            let mut f = parse_poly(&input.poly)?;
            if squarefree {
                f = squarefree_part(&f)?;
            }
            let trace = trace || trace_from_env();
            let mut lines = String::new();
            let t0 = Instant::now();
            let fz = montes_factor_traced(&f, input.prime, &mut |s| {
                if trace {
                    lines.push_str(s);
                    lines.push('\n');
                }
            })?;
            let micros = t0.elapsed().as_micros();
            out.stderr.push_str(&lines);
            if json {
                let doc = report_json(&input.poly, &f, input.prime, &fz, micros);
                out.stdout = serde_json::to_string_pretty(&doc).unwrap() + "\n";
            } else {
                out.stdout = report_text(&f, input.prime, &fz);
            }
        }
        Cmd::Polygon { input, type_path, svg, ascii } => {
            let f = parse_poly(&input.poly)?;
            let views = polygon_views(&f, input.prime, type_path.as_deref())?;
            for (i, v) in views.iter().enumerate() {
                out.stdout.push_str(&v.describe());
                if ascii {
                    out.stdout.push_str(&v.ascii());
                }
                if let Some(path) = &svg {
                    let target = if views.len() == 1 { path.clone() } else { indexed_path(path, i) };
                    std::fs::write(&target, v.svg()).map_err(|e| CliError::Io(format!("{target}: {e}")))?;
                    let _ = writeln!(out.stdout, "svg written to {target}");
                }
            }
        }
        Cmd::Index { input } => {
            let f = parse_poly(&input.poly)?;
            let fz = montes_factor_traced(&f, input.prime, &mut |_| {})?;
            let _ = writeln!(out.stdout, "ind(f) = {}", fz.ledger.total);
            for (r, v) in fz.ledger.per_order.iter().enumerate() {
                let _ = writeln!(out.stdout, "ind_{} = {v}", r + 1);
            }
        }
        Cmd::Resultant { input, other } => {
            let pp = parse_poly(&input.poly)?;
            let qq = parse_poly(&other)?;
            if !pp.is_monic() || !qq.is_monic() {
                return Err(OmError::NotMonic.into());
            }
            let exact = crate::exactmath::resultant(&pp, &qq)?;
            let v = resultant_valuation(&pp, &qq, input.prime)?;
            match v {
                ValOrInf::Inf => {
                    let _ = writeln!(out.stdout, "v_{}(Res) = inf (common factor)", input.prime);
                    let _ = writeln!(out.stdout, "Res = 0");
                }
                ValOrInf::Fin(v) => {
                    let parts = resultant_orders(&pp, &qq, input.prime)?;
                    let sum: i64 = parts.iter().sum();
                    if Rat::from_integer(sum) != v {
                        return Err(OmError::Internal(format!("sum of Res_r = {sum} but v = {v}")).into());
                    }
                    let list: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
                    let _ = writeln!(out.stdout, "v_{}(Res) = {v}", input.prime);
                    let _ = writeln!(out.stdout, "Res_r = [{}]", list.join(", "));
                    let _ = writeln!(out.stdout, "Res = {exact}");
                }
            }
        }
    }
    Ok(())
}

fn indexed_path(path: &str, i: usize) -> String {
    match path.rsplit_once('.') {
        Some((stem, ext)) if !stem.is_empty() => format!("{stem}-{i}.{ext}"),
        _ => format!("{path}-{i}"),
    }
}

/// Tower element as a decimal string or nested coefficient arrays.
pub fn elem_json(a: &TowerElem) -> Value {
    match a {
        TowerElem::Prime(c) => Value::String(c.to_string()),
        TowerElem::Ext(g) => poly_json(g),
    }
}

pub fn poly_json(g: &TowerPoly) -> Value {
    Value::Array(g.coeffs().iter().map(elem_json).collect())
}

fn coeffs_json(f: &IntPoly) -> Value {
    Value::Array(f.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

fn val_string(v: &ValOrInf) -> String {
    match v {
        ValOrInf::Inf => "inf".into(),
        ValOrInf::Fin(q) if q.is_integer() => q.to_integer().to_string(),
        ValOrInf::Fin(q) => format!("{}/{}", q.numer(), q.denom()),
    }
}

fn ints_json(xs: &[i64]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

/// The om-factor/1 JSON document.
pub fn report_json(src: &str, f: &IntPoly, p: u64, fz: &Factorization, micros: u128) -> Value {
    let factors: Vec<Value> = fz
        .factors
        .iter()
        .map(|r| {
            let levels: Vec<Value> = r
                .levels
                .iter()
                .map(|l| {
                    json!({
                        "order": l.order.to_string(),
                        "phi": coeffs_json(&l.phi),
                        "slope": l.slope.to_string(),
                        "psi": poly_json(&l.psi),
                    })
                })
                .collect();
            json!({
                "degree": r.degree.to_string(),
                "e": r.e.to_string(),
                "f": r.f_res.to_string(),
                "exact": r.exact,
                "psi0": poly_json(&r.psi0),
                "levels": levels,
                "approx": coeffs_json(&r.approx),
                "approx_quality": val_string(&r.approx_quality),
                "local_index": r.local_index.to_string(),
                "ind_contributions": ints_json(&r.ind_contributions),
            })
        })
        .collect();
    json!({
        "schema": SCHEMA_ID,
        "input": { "poly": src, "coeffs": coeffs_json(f), "prime": p.to_string() },
        "prime": p.to_string(),
        "factors": factors,
        "ind_total": fz.ledger.total.to_string(),
        "ind": ints_json(&fz.ledger.per_order),
        "timings": { "factor_us": micros.to_string() },
    })
}

/// Plain-text report.
pub fn report_text(f: &IntPoly, p: u64, fz: &Factorization) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "f = {f}, p = {p}");
    let per: Vec<String> =
        fz.ledger.per_order.iter().enumerate().map(|(r, v)| format!("ind_{} = {v}", r + 1)).collect();
    let _ = writeln!(
        s,
        "{} factor(s), ind(f) = {}{}",
        fz.factors.len(),
        fz.ledger.total,
        if per.is_empty() { String::new() } else { format!(" ({})", per.join(", ")) }
    );
    for (i, r) in fz.factors.iter().enumerate() {
        let _ = writeln!(s, "factor {}: degree {}, e = {}, f = {}", i + 1, r.degree, r.e, r.f_res);
        let _ = writeln!(s, "  psi_0 = {}", r.psi0.render("y"));
        for l in &r.levels {
            let _ = writeln!(
                s,
                "  level {}: phi = {}, slope {}, psi = {}",
                l.order,
                l.phi,
                l.slope,
                l.psi.render("y")
            );
        }
        if r.exact {
            let _ = writeln!(s, "  exact factor: {}", r.approx);
        } else {
            let _ = writeln!(s, "  approximation: {}", r.approx);
            let _ = writeln!(s, "  v(approx(theta)) = {}", val_string(&r.approx_quality));
        }
        let _ = writeln!(s, "  local index {}", r.local_index);
    }
    s
}

/// A computed polygon N_r^-(f) ready for rendering.
#[derive(Clone, Debug)]
pub struct PolygonView {
    pub label: String,
    pub order: usize,
    pub polygon: PrincipalPolygon,
    /// Cloud of points (i, v_r(a_i) + i V_r); `None` for a_i = 0.
    pub points: Vec<(i64, Option<i64>)>,
    pub residuals: Vec<(Slope, TowerPoly)>,
    pub index: i64,
}

fn view_for(f: &IntPoly, ty: &OMType, label: String) -> Result<PolygonView> {
    let r = ty.r();
    let np = ty.newton_polygon_r(f, r)?;
    let step = branch(f, ty, r, &mut |_| {})?;
    let points = np.points.iter().map(|(i, u)| (*i, u.as_int())).collect();
    let index = ty.f_prod(r) * polygon_index(&np.polygon);
    Ok(PolygonView { label, order: r, polygon: np.polygon, points, residuals: step.residuals, index })
}

/// Views for the type at `type_path`, or N_1 for every factor of f mod p.
pub fn polygon_views(f: &IntPoly, p: u64, type_path: Option<&str>) -> Result<Vec<PolygonView>> {
    if !f.is_monic() {
        return Err(OmError::NotMonic);
    }
    match type_path {
        Some(path_str) => {
            let path = parse_type_path(path_str)?;
            let ty = type_at_path(f, p, &path)?;
            Ok(vec![view_for(f, &ty, path_str.to_string())?])
        }
        None => root_types(f, p)?
            .into_iter()
            .enumerate()
            .map(|(i, (ty, _))| view_for(f, &ty, i.to_string()))
            .collect(),
    }
}

/// Parses "i0/i1/..." into branch indices.
pub fn parse_type_path(path_str: &str) -> Result<Vec<usize>> {
    let mut pos = 0;
    let mut out = Vec::new();
    for part in path_str.split('/') {
        let v = part.trim().parse::<usize>().map_err(|_| OmError::Parse {
            pos,
            msg: format!("bad branch index {part:?}"),
        })?;
        out.push(v);
        pos += part.len() + 1;
    }
    Ok(out)
}

impl PolygonView {
    fn vertices(&self) -> Vec<(i64, i64)> {
        self.polygon.vertices().iter().map(|(x, y)| (*x, y.to_integer())).collect()
    }

    /// Text summary: vertices, sides with residual polynomials, index.
    pub fn describe(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "type {}: N_{}", self.label, self.order);
        let vs: Vec<String> = self.vertices().iter().map(|(x, y)| format!("({x},{y})")).collect();
        let _ = writeln!(s, "  vertices: {}", vs.join(" "));
        if self.polygon.inf_len > 0 {
            let _ = writeln!(s, "  side slope -inf, length {}", self.polygon.inf_len);
        }
        for (side, (_, res)) in self.polygon.sides.iter().zip(&self.residuals) {
            let _ = writeln!(
                s,
                "  side slope {}, length {}, R = {}",
                side.slope,
                side.len,
                res.render("y")
            );
        }
        let _ = writeln!(s, "  ind = {}", self.index);
        s
    }

    fn on_polygon(&self, x: i64, y: i64) -> bool {
        self.polygon.ordinate_at(x) == Some(Rat::from_integer(y)) && x >= self.polygon.inf_len
    }

    /// Lattice points on a side at which a residual coefficient is read.
    fn residual_marks(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for side in &self.polygon.sides {
            let (_, e) = side.slope.he().unwrap();
            let (s0, _) = side.start;
            for &(i, u) in &self.points {
                if let Some(u) = u {
                    if i >= s0 && i <= s0 + side.len && (i - s0) % e == 0 && self.on_polygon(i, u) {
                        out.push((i, u));
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    fn extent(&self) -> (i64, i64) {
        let xmax = self.points.len().saturating_sub(1) as i64;
        let ytop = self.vertices().iter().map(|v| v.1).max().unwrap_or(0);
        (xmax.max(self.polygon.end().0), ytop + 1)
    }

    /// ASCII drawing: `@` residual points, `o` other points, `+` polygon
    /// lattice points without a point, `|` under the minus-infinity side.
    pub fn ascii(&self) -> String {
        let (xmax, ymax) = self.extent();
        let marks = self.residual_marks();
        let mut s = String::new();
        for y in (0..=ymax).rev() {
            let _ = write!(s, "{y:>4} |");
            for x in 0..=xmax {
                let pt = self.points.iter().any(|&(i, u)| i == x && u == Some(y));
                let c = if marks.contains(&(x, y)) {
                    '@'
                } else if pt {
                    'o'
                } else if self.on_polygon(x, y) {
                    '+'
                } else if x < self.polygon.inf_len {
                    '|'
                } else {
                    '.'
                };
                let _ = write!(s, " {c}");
            }
            s.push('\n');
        }
        let _ = write!(s, "     +");
        for _ in 0..=xmax {
            s.push_str("--");
        }
        s.push('\n');
        let _ = write!(s, "      ");
        for x in 0..=xmax {
            let _ = write!(s, "{:<2}", x % 10);
        }
        s.push('\n');
        s
    }

    /// SVG 1.1 drawing with lattice gridlines.
    pub fn svg(&self) -> String {
        let (xmax, ymax) = self.extent();
        let unit = 40i64;
        let pad = 30i64;
        let w = (xmax + 1) * unit + 2 * pad;
        let h = (ymax + 1) * unit + 2 * pad;
        let px = |x: i64| pad + x * unit;
        let py = |y: i64| h - pad - y * unit;
        let mut s = String::new();
        let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
        );
        let _ = writeln!(s, "<title>type {}: N_{}</title>", self.label, self.order);
        let _ = writeln!(s, r##"<g stroke="#dddddd" stroke-width="1">"##);
        for x in 0..=xmax {
            let _ = writeln!(s, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, px(x), py(0), py(ymax));
        }
        for y in 0..=ymax {
            let _ = writeln!(s, r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#, py(y), px(0), px(xmax));
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(
            s,
            r##"<g stroke="#000000" stroke-width="1.5"><line x1="{0}" y1="{1}" x2="{2}" y2="{1}"/><line x1="{0}" y1="{1}" x2="{0}" y2="{3}"/></g>"##,
            px(0),
            py(0),
            px(xmax),
            py(ymax)
        );
        let vs = self.vertices();
        if self.polygon.inf_len > 0 {
            let x = px(self.polygon.inf_len);
            let _ = writeln!(
                s,
                r##"<line x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="#1f4e9c" stroke-width="2.5" stroke-dasharray="6,4"/>"##,
                py(vs[0].1),
                py(ymax)
            );
        }
        let path: Vec<String> = vs.iter().map(|&(x, y)| format!("{},{}", px(x), py(y))).collect();
        let _ = writeln!(
            s,
            r##"<polyline points="{}" fill="none" stroke="#1f4e9c" stroke-width="2.5"/>"##,
            path.join(" ")
        );
        for &(i, u) in &self.points {
            if let Some(u) = u {
                if u <= ymax {
                    let _ = writeln!(s, r##"<circle cx="{}" cy="{}" r="4" fill="#888888"/>"##, px(i), py(u));
                }
            }
        }
        for (i, u) in self.residual_marks() {
            let _ = writeln!(
                s,
                r##"<circle cx="{}" cy="{}" r="6" fill="#c0392b" stroke="#000000" stroke-width="1"/>"##,
                px(i),
                py(u)
            );
        }
        for x in 0..=xmax {
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" font-size="12" text-anchor="middle">{x}</text>"#,
                px(x),
                py(0) + 18
            );
        }
        for y in 0..=ymax {
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" font-size="12" text-anchor="end">{y}</text>"#,
                px(0) - 8,
                py(y) + 4
            );
        }
        let _ = writeln!(s, "</svg>");
        s
    }
}
