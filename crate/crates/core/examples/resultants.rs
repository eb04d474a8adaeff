//! v_p(Res(P, Q)) computed order by order from the shared types, compared
//! against the exact integer resultant.

use num_traits::Signed;
use omfactor::exactmath::{resultant, vp_int, IntPoly};
use omfactor::montes::resultant_orders;

fn main() -> omfactor::Result<()> {
    let pairs = [
        (IntPoly::from_i64s(&[4, 8, 4, 0, 1]), IntPoly::from_i64s(&[2, 0, 1]), 2),
        (IntPoly::from_i64s(&[28, 8, 4, 0, 1]), IntPoly::from_i64s(&[12, 8, 4, 0, 1]), 2),
        (IntPoly::from_i64s(&[9, 6, 1]), IntPoly::from_i64s(&[3, 0, 1]), 3),
    ];
    for (pp, qq, p) in pairs {
        let parts = resultant_orders(&pp, &qq, p)?;
        let exact = resultant(&pp, &qq)?;
        println!(
            "p={p}  P={}  Q={}  Res_r = {parts:?}  sum {}  v_p(Res) = {:?}",
            pp.to_expr(),
            qq.to_expr(),
            parts.iter().sum::<i64>(),
            vp_int(&exact.abs(), p)
        );
    }
    Ok(())
}
