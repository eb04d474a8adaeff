//! Factors the four golden members of x^4 + a x^2 + b x + c over Z_2 and
//! prints the degree, ramification and residual degree of every factor.

use omfactor::exactmath::IntPoly;
use omfactor::montes::montes_factor;

fn main() -> omfactor::Result<()> {
    for (a, b, c) in [(4, 8, 4), (8, 8, 4), (4, 8, 28), (4, 8, 12)] {
        let f = IntPoly::from_i64s(&[c, b, a, 0, 1]);
        let fz = montes_factor(&f, 2)?;
        println!("f = {}   ind = {}   ind_r = {:?}", f.to_expr(), fz.ledger.total, fz.ledger.per_order);
        for r in &fz.factors {
            let tag = if r.exact { "  (exact)" } else { "" };
            println!("  deg {}  e {}  f {}  approx {}{tag}", r.degree, r.e, r.f_res, r.approx.to_expr());
        }
    }
    Ok(())
}
