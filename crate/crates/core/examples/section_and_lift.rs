//! Round trip between dimensions: a 5-compressor of PG(3,q) sections to a
//! planar configuration, and a planar configuration lifts back to exactly
//! two compressors once a vertex label and an apex line are fixed.

use desargues::compressor::{compressor_ids, FiveCompressor, SectionFrame};
use desargues::geometry::space_of_order;

fn main() -> desargues::Result<()> {
    let solid = space_of_order(3, 3)?;
    let p = |s: &str| solid.point_from_str(s);
    let comp = FiveCompressor::new(
        &solid,
        [p("0,0,0,1")?, p("1,0,0,1")?, p("0,1,0,1")?, p("0,0,1,1")?, p("1,1,1,1")?],
    )?;
    println!("compressor point ids: {:?}", compressor_ids(&comp));

    // section against the hyperplane at infinity
    let frame = SectionFrame::canonical(solid.clone())?;
    let config = frame.section(&comp)?;
    println!("section lives in PG({},{}), spatial: {}", config.space().n(), config.space().q(), config.spatial());
    let key = config.canonical_key();

    // lift back: same target plane, fresh host, default apex line through
    // the image of the vertex label 12
    let lifting = SectionFrame::lifting(solid.field().clone(), config.space().n())?;
    let (p1, p2) = lifting.default_apex(&config, 0)?;
    let (s1, s2) = lifting.lift(&config, 0, &p1, &p2)?;
    println!("lift 1 ids: {:?}", compressor_ids(&s1));
    println!("lift 2 ids: {:?}", compressor_ids(&s2));

    // both lifts section straight back to the configuration we started from
    for (name, lifted) in [("lift 1", &s1), ("lift 2", &s2)] {
        let back = lifting.section(lifted)?;
        println!("{name} re-sections to the same configuration: {}", back.canonical_key() == key);
    }
    Ok(())
}
