//! Census over all Galois-stable defining sets of a prime length, as CSV.
//!
//! cargo run --release --example prime_length_sweep -- 7 29

use constacyclic_grs::detector::{sweep_prime, SweepOptions};
use constacyclic_grs::gf::{build_field, prime_power};

fn main() -> constacyclic_grs::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, q) = match args[..] {
        [n, q] => (n as usize, q),
        _ => (7, 8),
    };
    let (p, e) = prime_power(q).expect("q must be a prime power");
    let f = build_field(p, e)?;
    let census = sweep_prime(n, &f, None, &SweepOptions { full_k_range: true, workers: None })?;
    census.write_csv(std::io::stdout().lock())?;
    eprintln!(
        "n={n} q={q}: {} codes, {} MDS, {} GRS, {} AP, {} mismatches, {} unstable sets skipped",
        census.total, census.mds, census.grs, census.ap, census.mismatches, census.skipped
    );
    Ok(())
}
