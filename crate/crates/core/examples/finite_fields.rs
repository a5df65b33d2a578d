//! Prime and extension fields: canonical modulus, primitive element, logs and embeddings.
//!
//! cargo run --example finite_fields

use constacyclic_grs::gf::{build_field, minimal_polynomial_over_prime, Embedding};

fn main() -> constacyclic_grs::Result<()> {
    for (p, m) in [(5, 1), (2, 3), (3, 2), (7, 2)] {
        let f = build_field(p, m)?;
        let w = f.primitive();
        println!(
            "{}: modulus {:?}, primitive {w} of order {}",
            f.id(),
            f.modulus(),
            w.order()?
        );
    }

    let f9 = build_field(3, 2)?;
    let a = f9.parse_elem("3^2:[1,2]")?;
    let b = f9.parse_elem("3^2:[2,1]")?;
    println!("in F_9: ({a}) * ({b}) = {}", a.mul(&b)?);
    println!("       ({a})^-1 = {}", a.inv()?);
    println!("       log_w({a}) = {:?}", f9.log(a.raw()));

    let f25 = build_field(5, 2)?;
    let f625 = build_field(5, 4)?;
    let emb = Embedding::new(&f25, &f625)?;
    let w = f25.primitive();
    println!(
        "F_25 -> F_625 sends {w} to {}, minimal polynomial {:?}",
        emb.embed(&w)?,
        minimal_polynomial_over_prime(&f25, w.raw())
    );
    let back = emb.preimage(&emb.embed(&w)?)?;
    println!("preimage recovers {}", back.expect("in the image"));
    Ok(())
}
