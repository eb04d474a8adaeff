//! Renders the polygons of every order along one branch as ASCII and writes
//! the SVG of the deepest one to the path given as first argument.

use omfactor::cli::polygon_views;
use omfactor::exactmath::IntPoly;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = IntPoly::from_i64s(&[28, 8, 4, 0, 1]);
    let views = polygon_views(&f, 2, Some("0/0"))?;
    for v in &views {
        println!("{}\n{}", v.describe(), v.ascii());
    }
    let path = std::env::args().nth(1).unwrap_or_else(|| "polygon.svg".into());
    std::fs::write(&path, views.last().unwrap().svg())?;
    println!("wrote {path}");
    Ok(())
}
