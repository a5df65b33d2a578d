//! Sumsets in Z_n: arithmetic progressions, the Cauchy-Davenport bound and Vosper's cases.

use constacyclic_grs::zn::{nonempty_subsets, VosperCase, ZnSet};

fn main() -> constacyclic_grs::Result<()> {
    let i = ZnSet::new(10, [8, 9, 0, 1, 2, 3]);
    let c = i.complement();
    println!("I = {i}, I^c = {c}, I^c + I^c = {}", c.sumset(&c)?);
    println!("I is an AP: {:?}", i.detect_ap(true)?);

    let j = ZnSet::new(7, [0, 1, 2, 4]);
    println!("{j} is an AP: {:?}", j.detect_ap(false)?);
    let d = ZnSet::new(8, [0, 2, 4]);
    println!("{d} in Z_8: any difference {:?}, invertible {:?}", d.detect_ap(false)?, d.detect_ap(true)?);

    let a = ZnSet::new(7, [0, 3]);
    let b = ZnSet::new(7, [0, 1, 4]);
    let cd = a.cauchy_davenport(&b)?;
    println!("|{a} + {b}| = {} >= {} (critical: {})", cd.actual, cd.bound, cd.critical);
    println!("Vosper case: {:?}", a.vosper_classify(&b)?);

    let mut tally = std::collections::BTreeMap::new();
    let sets: Vec<ZnSet> = nonempty_subsets(7).collect();
    for a in &sets {
        for b in &sets {
            let case = match a.vosper_classify(b)? {
                VosperCase::CommonDifferenceAp { .. } => "common-difference AP".to_string(),
                other => format!("{other:?}"),
            };
            *tally.entry(case).or_insert(0) += 1;
        }
    }
    println!("all {} pairs in Z_7 by first Vosper case: {tally:?}", sets.len() * sets.len());
    Ok(())
}
