//! Local integral bases read off the complete types: for each factor the
//! basis exponents, their value and floor, and the reconciled index ledger.

use omfactor::exactmath::IntPoly;
use omfactor::montes::{montes_factor, resultant_orders};

fn main() -> omfactor::Result<()> {
    let f = IntPoly::from_i64s(&[12, 8, 4, 0, 1]);
    let fz = montes_factor(&f, 2)?;
    println!("f = {}   ind = {}", f.to_expr(), fz.ledger.total);
    for (i, r) in fz.factors.iter().enumerate() {
        println!("factor {i}: approx {}  local index {}", r.approx.to_expr(), r.local_index);
    }
    for (i, j, res) in &fz.ledger.res_entries {
        let a = &fz.factors[*i].approx;
        let b = &fz.factors[*j].approx;
        println!("Res(F_{i}, F_{j}) = {res}   (approximations: {:?})", resultant_orders(a, b, 2)?);
    }
    let local: i64 = fz.factors.iter().map(|r| r.local_index).sum();
    let cross: i64 = fz.ledger.res_entries.iter().map(|e| e.2).sum();
    println!("{local} + {cross} = {}", fz.ledger.total);
    Ok(())
}
