//! Streams the driver's per-order trace for a deep case.

use omfactor::exactmath::IntPoly;
use omfactor::montes::montes_factor_traced;

fn main() -> omfactor::Result<()> {
    let f = IntPoly::from_i64s(&[28, 8, 4, 0, 1]);
    let fz = montes_factor_traced(&f, 2, &mut |line| println!("{line}"))?;
    println!("{} factor(s), {} orders", fz.factors.len(), fz.orders);
    Ok(())
}
