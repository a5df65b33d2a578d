//! Constacyclic codes from defining sets: splitting field, generator polynomial, shift
//! invariance, the subfield-subcode construction and the dual.

use constacyclic_grs::constacyclic::{dual_defining_set, ConstaCode};
use constacyclic_grs::gf::build_field;
use constacyclic_grs::zn::ZnSet;

fn main() -> constacyclic_grs::Result<()> {
    // x^8 - w^2 over F_7 splits over F_49
    let f7 = build_field(7, 1)?;
    let lambda = f7.primitive_power(2);
    let split = constacyclic_grs::constacyclic::splitting_data(&f7, 8, &lambda)?;
    println!(
        "x^8 - {lambda} splits over {} (d = {}), beta = {}, alpha = {}",
        split.big_field().id(),
        split.degree(),
        split.beta(),
        split.alpha()
    );
    let orbits: Vec<String> = split.frobenius_orbits().iter().map(|o| o.to_string()).collect();
    println!("Frobenius orbits on Z_8: {}", orbits.join(" "));

    let set = split.frobenius_orbits()[1].clone();
    let c = ConstaCode::from_split(&split, &set)?;
    println!("I = {set}: {c:?}");
    println!("g(x) = {:?}", c.generator_poly());
    println!("h(x) = {:?}", c.check_poly());
    println!("closed under the lambda-shift: {}", c.is_shift_invariant());
    println!("subfield subcode agrees: {}", &c.via_subfield_subcode()? == c.code());
    let d = c.dual_code()?;
    println!("dual: defining set {} = {}, equals C^perp: {}", dual_defining_set(&set), d.defining_set(), d.code() == &c.code().dual());

    // half of an orbit is not Galois-stable
    match ConstaCode::from_defining_set(&f7, 8, &lambda, &ZnSet::new(8, [1])) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("I = {{1}} rejected: {e}"),
    }
    Ok(())
}
