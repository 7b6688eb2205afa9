//! The label polarity pairs every point label with the block of the three
//! complementary symbols. Self-conjugate points lie on their own polar block
//! line, and exactly those block lines pick up a fourth configuration point —
//! always the pole itself.

use desargues::compressor::SectionFrame;
use desargues::desargues::{pair_label, polarity, triple_label};
use desargues::enumeration::{compressors_through, standard_affine_pair, ScaleLimits};
use desargues::geometry::space_of_order;

fn main() -> desargues::Result<()> {
    println!("polarity on the ten pair labels (label <-> complementary triple):");
    for r in 0..10 {
        println!("  {} <-> {}", pair_label(r), triple_label(polarity(r)));
    }

    // a concrete planar configuration over GF(3), where self-conjugate
    // points exist: section the first compressor through the standard pair
    let solid = space_of_order(3, 3)?;
    let chart = solid.default_affine_chart();
    let (p1, p2) = standard_affine_pair(&solid);
    let comps = compressors_through(&solid, &chart, &p1, &p2, &ScaleLimits::default())?;
    let frame = SectionFrame::canonical(solid.clone())?;
    let config = frame.section(&comps[0])?;

    let sc = config.self_conjugate_points();
    println!("\nself-conjugate points: {:?}", sc.iter().map(|&r| pair_label(r)).collect::<Vec<_>>());

    let structure = config.blockline_structure();
    println!("points on each block line (pole label in brackets):");
    for (t, subset) in structure.subsets.iter().enumerate() {
        let labels: Vec<String> = subset.iter().map(|&r| pair_label(r)).collect();
        let marker = if subset.len() == 4 { "  <- carries its pole" } else { "" };
        println!(
            "  {} [{}]: {}{}",
            triple_label(t),
            pair_label(polarity(t)),
            labels.join(" "),
            marker
        );
    }
    Ok(())
}
