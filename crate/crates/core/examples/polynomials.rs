//! Polynomial arithmetic over F_q: division, gcd, irreducibility, roots in an extension.

use constacyclic_grs::gf::{build_field, Embedding};
use constacyclic_grs::poly::Poly;

fn main() -> constacyclic_grs::Result<()> {
    let f7 = build_field(7, 1)?;
    let x8 = Poly::x_n_minus(&f7.one(), 8);
    let d = Poly::from_raw(&f7, vec![1, 0, 1]);
    let (q, r) = x8.divmod(&d)?;
    println!("x^8 - 1 = ({q:?}) * ({d:?}) + ({r:?})");
    println!("gcd(x^8 - 1, x^4 - 1) = {:?}", x8.gcd(&Poly::x_n_minus(&f7.one(), 4))?);

    for coeffs in [vec![1, 0, 1], vec![3, 0, 1], vec![1, 1, 1]] {
        let g = Poly::from_raw(&f7, coeffs);
        println!("{g:?} irreducible over F_7: {}", g.is_irreducible()?);
    }

    // x^2 + 1 has no roots in F_7 but splits over F_49
    let f49 = build_field(7, 2)?;
    let emb = Embedding::new(&f7, &f49)?;
    let g = Poly::from_raw(&f7, vec![1, 0, 1]);
    let roots: Vec<String> = g.roots_in(&emb)?.iter().map(|r| r.to_string()).collect();
    println!("roots of x^2 + 1 in F_49: {roots:?}");
    Ok(())
}
