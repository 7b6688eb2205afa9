//! Two triangles in perspective from a point generate the full ten-point,
//! ten-line configuration; the three side crossings land on a common axis
//! over any field. Point labels are the two-subsets of {1..5}: the vertex is
//! 12, one triangle is 13,14,15, the other 23,24,25, and the axis carries
//! 34, 35, 45.

use desargues::desargues::{pair_label, perspective_config, triple_label};
use desargues::geometry::space_of_order;

fn main() -> desargues::Result<()> {
    let plane = space_of_order(5, 2)?;
    let p = |s: &str| plane.point_from_str(s);

    let vertex = p("1,0,0")?;
    let first = [p("0,1,0")?, p("0,0,1")?, p("1,1,1")?];
    // each second-triangle corner sits on the line from the vertex through
    // its mate, but the triangle is scaled to stay non-flat
    let second = [p("1,1,0")?, p("1,0,1")?, p("3,2,2")?];

    let config = perspective_config(
        &plane,
        &vertex,
        [&first[0], &first[1], &first[2]],
        [&second[0], &second[1], &second[2]],
    )?;

    println!("all ten points, by label:");
    for r in 0..10 {
        println!("  {}: ({})", pair_label(r), config.point(r));
    }
    // triple rank 9 is {3,4,5}: the axis
    println!("\naxis {} = {}", triple_label(9), config.blockline(9));
    println!("spatial: {}", config.spatial());
    println!("structure check: {:?}", config.check());
    Ok(())
}
