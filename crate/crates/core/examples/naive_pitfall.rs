//! A tempting way to count configurations through a fixed point — pick the
//! vertex's line triple, two points per line, and a pairing — overcounts
//! nothing and undercounts something: it misses the configurations in which
//! the fixed point is NOT the perspective vertex. The enumeration oracle
//! catches the error for every q >= 3.

use desargues::enumeration::{closed_form, planar_census, Quantity, ScaleLimits};
use desargues::geometry::space_of_order;

fn main() -> desargues::Result<()> {
    println!("q\tnaive formula\ttrue census\tverdict");
    for q in [3u64, 4, 5] {
        let naive = closed_form(Quantity::NaivePlanarThroughPoint, q)?;
        let census = planar_census(&space_of_order(q, 2)?, Some(0), &ScaleLimits::default())?;
        let verdict = if naive.to_string() == census.count.to_string() {
            "agree"
        } else {
            "DISAGREE"
        };
        println!("{q}\t{naive}\t{}\t{verdict}", census.count);
    }
    println!(
        "\nthe fixed point plays any of the 10 roles, not just the vertex;\n\
         the correct count is half the compressor count, e.g. {} at q = 3",
        closed_form(Quantity::ThetaPlanar, 3)? / 2u32
    );
    Ok(())
}
