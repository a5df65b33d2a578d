//! Generalized Reed-Solomon codes: construction, MDS check, minimum distance, squares.

use constacyclic_grs::codes::{grs, EvalPoint, MzVerdict};
use constacyclic_grs::gf::build_field;

fn main() -> constacyclic_grs::Result<()> {
    let f8 = build_field(2, 3)?;
    let mut points: Vec<EvalPoint> = f8.elements().map(EvalPoint::Finite).collect();
    points.push(EvalPoint::Infinity);
    let mults = vec![f8.one(); points.len()];

    for k in 1..=4 {
        let c = grs(&f8, &points, &mults, k)?;
        println!(
            "[{}, {k}] doubly extended RS over F_8: d = {}, MDS {}, dim C^2 = {}, square test {:?}",
            c.len(),
            c.min_distance()?,
            c.is_mds(),
            c.square().dim(),
            c.mz_criterion()
        );
    }

    let c = grs(&f8, &points[..7], &mults[..7], 3)?;
    let dual = c.dual();
    println!("dual of [7,3] RS has dimension {} and is MDS: {}", dual.dim(), dual.is_mds());
    assert_eq!(c.mz_criterion(), MzVerdict::Grs);
    println!("generator (RREF):\n{:?}", c.generator());
    Ok(())
}
