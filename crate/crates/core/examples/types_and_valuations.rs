//! Builds the order-1 type (x; -1/2, y+1) over 2 by hand and evaluates the
//! valuations v_1, v_2, omega_2 and the representative phi_2.

use omfactor::exactmath::IntPoly;
use omfactor::gftower::TowerPoly;
use omfactor::omtypes::OMType;

fn main() -> omfactor::Result<()> {
    let t0 = OMType::order_zero(2, TowerPoly::from_u64s(0, &[0, 1]))?;
    let tw = t0.tower();
    let t = t0.extend(1, 2, tw.padd(&tw.py(tw.top()), &tw.pone(tw.top())))?;
    println!("phi_1 = {}   phi_2 = {}   V_2 = {}", t.phi(1).to_expr(), t.representative().to_expr(), t.rep_value());

    let f = IntPoly::from_i64s(&[4, 8, 4, 0, 1]);
    for g in [IntPoly::x(), IntPoly::from_i64s(&[2, 0, 1]), IntPoly::from_i64s(&[0, 8]), f.clone()] {
        println!("{:>22}:  v_1 = {}  v_2 = {}", g.to_expr(), t.v_r(&g, 1)?, t.v_r(&g, 2)?);
    }
    println!("omega_2(f) = {}", t.omega_r(&f, 2)?);
    Ok(())
}
