//! Build small finite fields, print their moduli, and spot-check arithmetic.
//!
//! Prime fields are plain modular arithmetic; prime-power fields are built
//! from an irreducible modulus — by default the lexicographically least one,
//! or any modulus you name.

use desargues::field::{prime_power, Field, FieldSpec};

fn main() -> desargues::Result<()> {
    for q in 2..=16u64 {
        let Some((p, k)) = prime_power(q) else { continue };
        let field = Field::of_order(q)?;
        println!("GF({q}) = GF({p}^{k})  modulus spec: {}", field.spec());
    }

    // arithmetic in GF(8): elements are indices 0..8, displayed as such
    let f8 = Field::of_order(8)?;
    let a = f8.element(3).unwrap();
    let b = f8.element(5).unwrap();
    println!("\nin GF(8): {a} + {b} = {}", f8.add(a, b));
    println!("in GF(8): {a} * {b} = {}", f8.mul(a, b));
    println!("in GF(8): {a}^-1   = {}", f8.inv(a)?);

    // the same order under a different (still irreducible) modulus is a
    // different table but an isomorphic field; both pass the axiom check
    let alt: FieldSpec = "3^2/1,1,2".parse()?;
    let f9 = Field::new(alt)?;
    println!("\nGF(9) with modulus {}: axioms {}", f9.spec(), match f9.check_axioms() {
        Ok(()) => "hold".to_string(),
        Err(why) => format!("FAIL: {why}"),
    });

    // non-prime-powers are rejected outright
    println!("GF(6)? {:?}", Field::of_order(6).err().map(|e| e.to_string()));
    Ok(())
}
