//! Property suites that compare fast criteria against brute-force oracles.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::codes::{grs, EvalPoint, MzVerdict};
use crate::constacyclic::{
    family_grassl, frobenius_orbits, splitting_data, splitting_degree, ConstaCode, Family, SplittingData,
};
use crate::detector::{certify_mds, detect, sweep_prime, SweepOptions, Verdict};
use crate::error::Result;
use crate::gf::{build_field, gcd, prime_power, FieldCtx};
use crate::zn::{nonempty_subsets, ZnSet};

/// Outcome of one suite: how many checks ran and a reproducer for each failure.
#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: u64,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            ..SuiteReport::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }
}

/// Family members with their parameters, and the certified `[7,3]` codes.
pub fn examples() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("examples");
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
        rep.absorb(family_member(fam, q, s)?);
    }
    rep.absorb(certified_values()?);
    Ok(rep)
}

/// One family member: MDS by minor scan, stated dimension, and the detector verdict.
pub fn family_member(fam: Family, q: u64, s: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("family");
    let tag = format!("{fam:?} q={q} s={s}");
    let c = family_grassl(fam, q, s)?;
    let (n, k) = (c.n(), c.dim());
    rep.check(k == fam.expected_dim(q, s), || format!("{tag}: dimension {k}, expected {}", fam.expected_dim(q, s)));
    rep.check(c.code().is_mds(), || format!("{tag}: not MDS by minor scan"));
    rep.check(c.is_shift_invariant() && c.vanishes_on_roots(), || format!("{tag}: shift or root check failed"));
    let r = detect(&c)?;
    let square = c.code().square().dim();
    if 2 * k < n {
        rep.check(r.verdict == Verdict::Grs, || format!("{tag}: verdict {}", r.verdict));
        rep.check(square == 2 * k - 1 && r.dim_square == square, || {
            format!("{tag}: dim C^2 = {square}, sumset {}, expected {}", r.dim_square, 2 * k - 1)
        });
    } else if 2 * k == n {
        rep.check(r.verdict == Verdict::Indeterminate && r.ap_invertible.is_some(), || {
            format!("{tag}: k = n/2 gave {} with AP {:?}", r.verdict, r.ap_invertible)
        });
    } else {
        rep.check(r.verdict == Verdict::Grs, || format!("{tag}: verdict {}", r.verdict));
    }
    rep.notes.push(format!("{tag}: [{n},{k}] {} rules {:?} dim C^2 = {square}", r.verdict, r.rules_fired));
    Ok(rep)
}

/// `[7,3]` cyclic codes with `I = {0,1,2,3}` and `{0,1,2,4}` over `F_29`, and the latter
/// over `F_8`, each checked by minimum distance enumeration and direct square rank.
pub fn certified_values() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("certified");
    let f29 = build_field(29, 1)?;
    let f8 = build_field(2, 3)?;
    let cases: [(&Arc<FieldCtx>, [i64; 4], Verdict, usize); 3] = [
        (&f29, [0, 1, 2, 3], Verdict::Grs, 5),
        (&f29, [0, 1, 2, 4], Verdict::NotGrs, 6),
        (&f8, [0, 1, 2, 4], Verdict::NotMds, 6),
    ];
    for (field, set, verdict, square) in cases {
        let tag = format!("[7,3] over {} I = {:?}", field.id(), set);
        let c = ConstaCode::from_defining_set(field, 7, &field.one(), &ZnSet::new(7, set))?;
        let dist = c.code().min_distance()?;
        let mds = dist == 5;
        rep.check(mds == (verdict != Verdict::NotMds), || format!("{tag}: minimum distance {dist}"));
        rep.check(certify_mds(&c).0 == mds, || format!("{tag}: certify_mds disagrees with distance {dist}"));
        let sq = c.code().square().dim();
        rep.check(sq == square, || format!("{tag}: dim C^2 = {sq}, expected {square}"));
        let r = detect(&c)?;
        rep.check(r.verdict == verdict, || format!("{tag}: verdict {}, expected {verdict}", r.verdict));
        if mds {
            let mz = c.code().mz_criterion();
            let expect = if verdict == Verdict::Grs { MzVerdict::Grs } else { MzVerdict::NotGrs };
            rep.check(mz == expect, || format!("{tag}: rank-based criterion {mz:?}"));
        }
        rep.notes.push(format!("{tag}: d = {dist}, dim C^2 = {sq}, {}", r.verdict));
    }
    Ok(rep)
}

#[derive(Debug, Clone)]
pub struct SquareFormulaConfig {
    pub max_n: usize,
    /// Largest splitting field order `q^d`.
    pub max_field: u64,
    pub workers: Option<usize>,
}

impl Default for SquareFormulaConfig {
    fn default() -> Self {
        SquareFormulaConfig {
            max_n: 10,
            max_field: 1 << 12,
            workers: None,
        }
    }
}

/// `(q, n, s)` with `gcd(n, q) = 1`, `lambda = w^s` over the classes of
/// `F_q^* / (F_q^*)^n`, and splitting field order at most `max_field`.
pub fn constacyclic_configurations(max_n: usize, max_field: u64) -> Vec<(u64, usize, u64)> {
    let mut out = Vec::new();
    for q in 2..=max_field {
        if prime_power(q).is_none() {
            continue;
        }
        for n in 1..=max_n {
            if gcd(n as u64, q) != 1 {
                continue;
            }
            for s in 0..gcd(n as u64, q - 1) {
                match splitting_degree(q, n, s) {
                    Some(d) if (q as u128).pow(d) <= max_field as u128 => out.push((q, n, s)),
                    _ => {}
                }
            }
        }
    }
    out
}

fn stable_defining_sets(split: &SplittingData) -> Vec<ZnSet> {
    let n = split.n();
    let orbits = frobenius_orbits(n, split.q_field().order() as u64, split.frobenius_shift());
    (0u64..1 << orbits.len())
        .map(|mask| {
            let members = (0..orbits.len())
                .filter(|&i| mask >> i & 1 == 1)
                .flat_map(|i| orbits[i].members().to_vec())
                .map(|m| m as i64);
            ZnSet::new(n, members)
        })
        .collect()
}

/// Square formula and duality over every configuration: direct square rank against
/// `|I^c + I^c|`, square row space against the `lambda^2` code, dual against the
/// `lambda^{-1}` code with defining set `-I^c`, plus dimension, shift invariance and the
/// subfield subcode construction.
pub fn square_formula(cfg: &SquareFormulaConfig) -> Result<SuiteReport> {
    let run = || square_formula_inner(cfg);
    match cfg.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| crate::Error::Parse(e.to_string()))?
            .install(run),
        None => run(),
    }
}

fn square_formula_inner(cfg: &SquareFormulaConfig) -> Result<SuiteReport> {
    let configs = constacyclic_configurations(cfg.max_n, cfg.max_field);
    let fields: Mutex<HashMap<u64, Arc<FieldCtx>>> = Mutex::new(HashMap::new());
    let field_for = |q: u64| -> Result<Arc<FieldCtx>> {
        if let Some(f) = fields.lock().expect("lock").get(&q) {
            return Ok(Arc::clone(f));
        }
        let (p, e) = prime_power(q).expect("prime power");
        let f = build_field(p, e)?;
        fields.lock().expect("lock").insert(q, Arc::clone(&f));
        Ok(f)
    };
    let splits: Vec<SplittingData> = configs
        .par_iter()
        .map(|&(q, n, s)| {
            let f = field_for(q)?;
            splitting_data(&f, n, &f.primitive_power(s as i64))
        })
        .collect::<Result<_>>()?;
    let jobs: Vec<(&SplittingData, ZnSet)> = splits
        .iter()
        .flat_map(|sd| stable_defining_sets(sd).into_iter().map(move |i| (sd, i)))
        .collect();
    let parts: Vec<SuiteReport> = jobs
        .par_iter()
        .map(|(sd, set)| check_code(sd, set))
        .collect::<Result<_>>()?;
    let mut rep = SuiteReport::new("square-formula");
    for p in parts {
        rep.absorb(p);
    }
    rep.notes.push(format!(
        "{} configurations (q, n, lambda), {} codes, n <= {}, q^d <= {}",
        configs.len(),
        jobs.len(),
        cfg.max_n,
        cfg.max_field
    ));
    Ok(rep)
}

fn check_code(sd: &SplittingData, set: &ZnSet) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("code");
    let q = sd.q_field().order();
    let n = sd.n();
    let tag = || format!("n={n} q={q} lambda=w^{} I={set}", sd.lambda_exp());
    let c = ConstaCode::from_split(sd, set)?;
    rep.check(c.dim() == n - set.len(), || format!("{}: dim {}", tag(), c.dim()));
    rep.check(c.is_shift_invariant(), || format!("{}: not shift invariant", tag()));
    let sub = c.via_subfield_subcode()?;
    rep.check(&sub == c.code(), || format!("{}: subfield subcode differs", tag()));

    let dual = c.dual_code()?;
    rep.check(dual.code() == &c.code().dual(), || format!("{}: dual mismatch", tag()));

    if !set.is_full() {
        let comp = set.complement();
        let sumset = comp.sumset(&comp)?.len();
        let square = c.code().square();
        rep.check(square.dim() == sumset, || {
            format!("{}: dim C^2 = {} but |I^c + I^c| = {sumset}", tag(), square.dim())
        });
        let sq_code = c.square_code()?;
        rep.check(sq_code.code() == &square, || format!("{}: square row space differs", tag()));
    }
    Ok(rep)
}

/// Dual-code equality alone over the same configurations.
pub fn duality(cfg: &SquareFormulaConfig) -> Result<SuiteReport> {
    let configs = constacyclic_configurations(cfg.max_n, cfg.max_field);
    let mut rep = SuiteReport::new("duality");
    for (q, n, s) in configs {
        let (p, e) = prime_power(q).expect("prime power");
        let f = build_field(p, e)?;
        let sd = splitting_data(&f, n, &f.primitive_power(s as i64))?;
        for set in stable_defining_sets(&sd) {
            let c = ConstaCode::from_split(&sd, &set)?;
            let d = c.dual_code()?;
            rep.check(d.code() == &c.code().dual(), || format!("n={n} q={q} lambda=w^{s} I={set}: dual mismatch"));
        }
    }
    Ok(rep)
}

/// `|A + B| >= min(p, |A| + |B| - 1)` over all nonempty pairs in `Z_p`.
pub fn cauchy_davenport(primes: &[usize]) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("cauchy-davenport");
    for &p in primes {
        let sets: Vec<ZnSet> = nonempty_subsets(p).collect();
        let mut critical = 0u64;
        for a in &sets {
            for b in &sets {
                let cd = a.cauchy_davenport(b)?;
                critical += cd.critical as u64;
                rep.check(cd.actual >= cd.bound, || format!("p={p}: |{a} + {b}| = {} < {}", cd.actual, cd.bound));
            }
        }
        rep.notes.push(format!("p={p}: {} pairs, {critical} critical", sets.len() * sets.len()));
    }
    Ok(rep)
}

/// Critical pairs in `Z_p` are exactly those matching one of Vosper's four cases.
pub fn vosper(primes: &[usize]) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("vosper");
    for &p in primes {
        let sets: Vec<ZnSet> = nonempty_subsets(p).collect();
        for a in &sets {
            for b in &sets {
                let critical = a.cauchy_davenport(b)?.critical;
                let cases = a.vosper_cases(b)?;
                rep.check(critical == !cases.is_empty(), || {
                    format!("p={p}: A={a} B={b} critical={critical} cases={cases:?}")
                });
            }
        }
        rep.notes.push(format!("p={p}: {} pairs", sets.len() * sets.len()));
    }
    Ok(rep)
}

/// Prime-length census: MDS and GRS exactly when the defining set is an AP, and R2 always
/// confirmed by the square criterion.
pub fn prime_iff(n: usize, q_field: &Arc<FieldCtx>, lambda_exps: Option<&[u64]>, opts: &SweepOptions) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("prime-iff");
    let census = sweep_prime(n, q_field, lambda_exps, opts)?;
    let tag = format!("n={n} q={}", census.q);
    for row in &census.rows {
        let grs = row.verdict == Some(Verdict::Grs);
        rep.check(row.error.is_none() && (row.mds && grs) == row.ap, || {
            format!(
                "{tag} lambda=w^{} I={}: mds={} verdict={:?} ap={} {}",
                row.lambda_exp,
                row.defining_set,
                row.mds,
                row.verdict,
                row.ap,
                row.error.clone().unwrap_or_default()
            )
        });
        if let Some(ok) = row.r2_confirmed {
            rep.check(ok, || format!("{tag} lambda=w^{} I={}: R2 fired, square criterion disagrees", row.lambda_exp, row.defining_set));
        }
    }
    rep.notes.push(format!(
        "{tag}: {} codes, {} MDS, {} GRS, {} AP, {} mismatches, R2 fired {} times with {} disagreements, {} unstable sets skipped",
        census.total, census.mds, census.grs, census.ap, census.mismatches, census.r2_fired, census.r2_square_disagreements, census.skipped
    ));
    Ok(rep)
}

/// Random GRS codes: MDS, square dimension `2k - 1` when `2k + 1 <= n`, and a GRS dual.
pub fn random_grs(seed: u64, trials: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("grs");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fields = [(2, 3), (3, 2), (5, 1), (7, 1), (2, 4), (11, 1), (13, 1)];
    for _ in 0..trials {
        let (p, e) = fields[rng.gen_range(0..fields.len())];
        let f = build_field(p, e)?;
        let q = f.order() as usize;
        let n = rng.gen_range(2..=(q + 1).min(9));
        let k = rng.gen_range(1..n);
        let mut pool: Vec<EvalPoint> = f.elements().map(EvalPoint::Finite).collect();
        pool.push(EvalPoint::Infinity);
        pool.shuffle(&mut rng);
        let points = &pool[..n];
        let mults: Vec<_> = (0..n).map(|_| f.elem(rng.gen_range(1..q as u32))).collect();
        let c = grs(&f, points, &mults, k)?;
        let tag = format!("seed={seed} F_{q} n={n} k={k}");
        rep.check(c.dim() == k && c.is_mds(), || format!("{tag}: not an MDS [n,k] code"));
        if 2 * k < n {
            rep.check(c.mz_criterion() == MzVerdict::Grs, || format!("{tag}: square dim {}", c.square().dim()));
        }
        let d = c.dual();
        rep.check(d.is_mds() && (2 * (n - k) >= n || d.mz_criterion() == MzVerdict::Grs), || {
            format!("{tag}: dual fails the GRS checks")
        });
    }
    Ok(rep)
}
