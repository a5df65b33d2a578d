//! The square of a constacyclic code: |I^c + I^c| against the rank of pairwise products.

use constacyclic_grs::constacyclic::{square_defining_set, splitting_data, ConstaCode};
use constacyclic_grs::gf::build_field;
use constacyclic_grs::zn::ZnSet;

fn main() -> constacyclic_grs::Result<()> {
    let f29 = build_field(29, 1)?;
    let split = splitting_data(&f29, 7, &f29.one())?;
    for members in [vec![0, 1, 2, 3], vec![0, 1, 2, 4], vec![1, 3, 5], vec![0, 2, 3, 5, 6]] {
        let set = ZnSet::new(7, members);
        let c = ConstaCode::from_split(&split, &set)?;
        let sq = c.code().square();
        let formula = square_defining_set(&set);
        let as_code = c.square_code()?;
        println!(
            "I = {set:<12} k = {}  dim C^2 = {} (rank)  {} (sumset)  square set {}  row spaces equal {}",
            c.dim(),
            sq.dim(),
            7 - formula.len(),
            formula,
            as_code.code() == &sq
        );
    }

    // lambda-constacyclic squares are lambda^2-constacyclic
    let f9 = build_field(3, 2)?;
    let lambda = f9.primitive_power(1);
    let split = splitting_data(&f9, 4, &lambda)?;
    let c = ConstaCode::from_split(&split, &split.frobenius_orbits()[0])?;
    let s = c.square_code()?;
    println!("over F_9, lambda = {}: square is {}-constacyclic, equal {}", c.lambda(), s.lambda(), s.code() == &c.code().square());
    Ok(())
}
