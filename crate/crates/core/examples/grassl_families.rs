//! The three families of length q + 1 over F_{q^2}.

use constacyclic_grs::constacyclic::{family_grassl, Family};
use constacyclic_grs::detector::detect;

fn main() -> constacyclic_grs::Result<()> {
    let members = [
        (Family::C1, 5, 1),
        (Family::C1, 7, 2),
        (Family::C1, 9, 3),
        (Family::C2, 5, 1),
        (Family::C2, 7, 1),
        (Family::C2, 8, 2),
        (Family::C3, 4, 0),
        (Family::C3, 8, 1),
    ];
    for (fam, q, s) in members {
        let c = family_grassl(fam, q, s)?;
        let r = detect(&c)?;
        println!(
            "{fam:?} q={q} s={s}: [{}, {}] over {}, I = {}, MDS {}, dim C^2 = {}, {} via {:?}",
            c.n(),
            c.dim(),
            c.q_field().id(),
            c.defining_set(),
            c.code().is_mds(),
            c.code().square().dim(),
            r.verdict,
            r.rules_fired
        );
    }
    Ok(())
}
