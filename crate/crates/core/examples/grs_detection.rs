//! Running the detector and printing its rule chain.

use constacyclic_grs::constacyclic::{ConstaSpec, ExplicitSpec};
use constacyclic_grs::detector::detect;

fn main() -> constacyclic_grs::Result<()> {
    let cases = [
        (29, 1, 7, vec![0, 1, 2, 3]),
        (29, 1, 7, vec![0, 1, 2, 4]),
        (2, 3, 7, vec![0, 1, 2, 4]),
        (5, 2, 6, vec![-1, 0, 1]),
        (3, 2, 8, vec![0, 1, 2]),
    ];
    for (p, e, n, set) in cases {
        let spec = ConstaSpec::Explicit(ExplicitSpec { p, e, n, lambda_exp: 0, defining_set: set });
        let code = spec.build()?;
        let r = detect(&code)?;
        println!("{code:?}");
        println!("  verdict {} (MDS witness {:?})", r.verdict, r.mds);
        for rule in &r.rules_fired {
            println!("  {rule}: {}", rule.citation());
        }
        println!("  report: {}", serde_json::to_string(&r).expect("serializable"));
    }
    Ok(())
}
