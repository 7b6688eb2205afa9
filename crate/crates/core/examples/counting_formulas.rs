//! Evaluate all seven counting formulas exactly (arbitrary precision) for
//! every prime power up to a bound. The last column is the deliberately
//! wrong through-point count kept as a cautionary tale — see the
//! naive_pitfall example for the disagreement itself.

use desargues::enumeration::{closed_form, QUANTITIES};
use desargues::field::prime_power;

fn main() -> desargues::Result<()> {
    let header: Vec<&str> = QUANTITIES.iter().map(|q| q.tag()).collect();
    println!("q\t{}", header.join("\t"));
    for q in 2..=13u64 {
        if prime_power(q).is_none() {
            continue;
        }
        let row: Vec<String> = QUANTITIES
            .iter()
            .map(|&quantity| closed_form(quantity, q).map(|v| v.to_string()))
            .collect::<desargues::Result<_>>()?;
        println!("{q}\t{}", row.join("\t"));
    }
    Ok(())
}
