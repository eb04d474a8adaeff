//! Residual polynomials over the finite-field tower: R_1 of the golden
//! case (4,8,28), then its factorization after extending the tower.

use omfactor::exactmath::IntPoly;
use omfactor::gftower::{FieldTower, TowerPoly};
use omfactor::montes::type_at_path;

fn main() -> omfactor::Result<()> {
    let f = IntPoly::from_i64s(&[28, 8, 4, 0, 1]);
    let t = type_at_path(&f, 2, &[0, 0, 0])?;
    let k = t.r();
    for lvl in t.levels() {
        println!("phi = {}  slope -{}/{}  psi = {}", lvl.phi.to_expr(), lvl.h, lvl.e, lvl.psi.render("y"));
    }
    let poly = t.newton_polygon_r(&f, k)?.polygon;
    for side in poly.sides {
        if let Some(lambda) = side.slope.value() {
            let r = t.residual_poly_r(&f, k, lambda)?;
            let (_, fac) = t.tower().factor(&r)?;
            let shown: Vec<String> = fac.iter().map(|(g, m)| format!("({})^{m}", g.render("y"))).collect();
            println!("R_{lambda}(f) = {}  =  {}", r.render("y"), shown.join(" "));
        }
    }

    // F_4 = F_2[y]/(y^2+y+1) and the splitting of x^4 - x there.
    let f2 = FieldTower::new(2)?;
    let f4 = f2.extend(TowerPoly::from_u64s(0, &[1, 1, 1]))?;
    let g = f4.psub(&f4.pmonomial(f4.one(1), 4), &f4.py(1));
    let (_, fac) = f4.factor(&g)?;
    println!("x^4 - x over F_4 has {} linear factors", fac.len());
    Ok(())
}
