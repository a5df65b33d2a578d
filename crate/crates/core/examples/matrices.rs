//! Exact linear algebra over finite fields: RREF, rank, kernel, row-space comparison.

use constacyclic_grs::gf::build_field;
use constacyclic_grs::matrix::MatGF;

fn main() -> constacyclic_grs::Result<()> {
    let f5 = build_field(5, 1)?;
    let m = MatGF::from_rows(&f5, 4, &[vec![1, 2, 3, 4], vec![2, 4, 1, 3], vec![3, 1, 4, 2], vec![1, 1, 1, 1]]);
    println!("M =\n{m:?}");
    println!("rank {}", m.rank());
    println!("rref =\n{:?}", m.rref());
    let ker = m.kernel();
    println!("kernel basis =\n{ker:?}");
    println!("M * k^T = {:?}", m.mul_vec(ker.row(0)));

    // a Vandermonde matrix over F_9 has full rank
    let f9 = build_field(3, 2)?;
    let pts: Vec<u32> = (1..=5).collect();
    let rows: Vec<Vec<u32>> = (0..3).map(|i| pts.iter().map(|&x| f9.pow_unsigned(x, i)).collect()).collect();
    let v = MatGF::from_rows(&f9, 5, &rows);
    println!("3x5 Vandermonde over F_9 has rank {}", v.rank());
    println!("same row space as its RREF: {}", v.row_space_equal(&v.rref_basis())?);
    Ok(())
}
