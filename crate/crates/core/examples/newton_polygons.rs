//! Principal polygons of order 1 and 2 for x^4 + 4x^2 + 8x + 4 over 2, with
//! their sides, lattice index and the polygon sum of a product.

use omfactor::exactmath::IntPoly;
use omfactor::gftower::TowerPoly;
use omfactor::omtypes::OMType;
use omfactor::polygons::{polygon_add, polygon_index};

fn main() -> omfactor::Result<()> {
    let f = IntPoly::from_i64s(&[4, 8, 4, 0, 1]);
    let t0 = OMType::order_zero(2, TowerPoly::from_u64s(0, &[0, 1]))?;
    let n1 = t0.newton_polygon_r(&f, 1)?;
    println!("N_1(f) = {}   ind = {}", n1.polygon, polygon_index(&n1.polygon));

    let tw = t0.tower();
    let t1 = t0.extend(1, 2, tw.padd(&tw.py(tw.top()), &tw.pone(tw.top())))?;
    let n2 = t1.newton_polygon_r(&f, 2)?;
    println!("N_2(f) = {}   ind = {}", n2.polygon, polygon_index(&n2.polygon));
    for side in n2.polygon.all_sides() {
        println!("  side slope {} length {} degree {}", side.slope, side.length(), side.degree());
    }

    let g = IntPoly::from_i64s(&[2, 2, 1]);
    let h = IntPoly::from_i64s(&[6, 0, 1]);
    let sum = polygon_add(&t1.newton_polygon_r(&g, 2)?.polygon, &t1.newton_polygon_r(&h, 2)?.polygon);
    println!("N_2(g) + N_2(h) = {sum}");
    println!("N_2(g h)        = {}", t1.newton_polygon_r(&(&g * &h), 2)?.polygon);
    Ok(())
}
