//! Constacyclic codes `C = (g(x))` in `F_q[x]/(x^n - lambda)`, described by defining sets.
//!
//! The roots of `x^n - lambda` are `beta * alpha^i` for `i in Z_n`, where `alpha` has order
//! `n` in the splitting field `F_{q^d}`; the defining set `I` of a code lists the exponents
//! of the roots of its generator polynomial. Codes are materialized over `F_q` and can be
//! rebuilt as subfield subcodes, so both descriptions are available for cross-checks.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{build_field, gcd, prime_power, Embedding, FieldCtx, FieldElem, DEFAULT_FIELD_BOUND};
use crate::matrix::MatGF;
use crate::poly::Poly;
use crate::zn::ZnSet;

/// Splitting field of `x^n - lambda` over `F_q` with the chosen `beta` and `alpha`.
#[derive(Clone)]
pub struct SplittingData {
    n: usize,
    lambda: FieldElem,
    degree: u32,
    big: Arc<FieldCtx>,
    emb: Embedding,
    beta: FieldElem,
    alpha: FieldElem,
    /// `t` with `beta^{q-1} = alpha^t`, so Frobenius acts on exponents as `i -> q i + t`.
    frobenius_shift: usize,
}

impl fmt::Debug for SplittingData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SplittingData")
            .field("n", &self.n)
            .field("lambda", &self.lambda)
            .field("d", &self.degree)
            .field("beta", &self.beta)
            .field("alpha", &self.alpha)
            .finish()
    }
}

/// Smallest `d` with `n | q^d - 1` and `(q - 1) n | s (q^d - 1)`, i.e. `x^n - w^s` splits
/// over `F_{q^d}` (`w` a generator of `F_q^*`). `None` if `q^d` would overflow 128 bits.
pub fn splitting_degree(q: u64, n: usize, lambda_exp: u64) -> Option<u32> {
    let n = n as u128;
    let q = q as u128;
    let mut big = q;
    for d in 1u32.. {
        let m = big - 1;
        if m % n == 0 && (lambda_exp as u128 * m) % ((q - 1) * n) == 0 {
            return Some(d);
        }
        big = big.checked_mul(q)?;
    }
    None
}

/// Finds `F_{q^d}`, `alpha = W^{(q^d - 1)/n}` for the canonical primitive `W`, and the first
/// root `beta` of `x^n - lambda` in the enumeration of `F_{q^d}`.
pub fn splitting_data(q_field: &Arc<FieldCtx>, n: usize, lambda: &FieldElem) -> Result<SplittingData> {
    splitting_data_bounded(q_field, n, lambda, DEFAULT_FIELD_BOUND)
}

pub fn splitting_data_bounded(
    q_field: &Arc<FieldCtx>,
    n: usize,
    lambda: &FieldElem,
    bound: u64,
) -> Result<SplittingData> {
    if lambda.field() != q_field.id() {
        return Err(Error::FieldMismatch {
            left: lambda.field().to_string(),
            right: q_field.id().to_string(),
        });
    }
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    let q = q_field.order() as u64;
    if n == 0 || gcd(n as u64, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    let s = q_field.log(lambda.raw()).expect("nonzero") as u64;
    let p = q_field.characteristic();
    let e = q_field.degree();
    let too_large = |d: u32| Error::FieldTooLarge {
        p: p as u64,
        m: (e * d) as u64,
        bound,
    };
    let d = splitting_degree(q, n, s).ok_or_else(|| too_large(64))?;
    let big_order = (q as u128).pow(d);
    if big_order > bound as u128 {
        return Err(too_large(d));
    }
    let big = build_field_bounded_or_same(q_field, p, e * d)?;
    let emb = Embedding::new(q_field, &big)?;
    let lifted = emb.embed_raw(lambda.raw());
    let group = big.order() as u64 - 1;
    if big.pow_unsigned(lifted, group / n as u64) != 1 {
        return Err(Error::Inconsistent(format!(
            "lambda is not an n-th power in F_{{q^{d}}}"
        )));
    }
    let alpha = big.pow_unsigned(big.primitive_raw(), group / n as u64);
    let log = big.log(lifted).expect("nonzero") as u64;
    debug_assert_eq!(log % n as u64, 0);
    let beta0 = big.pow_unsigned(big.primitive_raw(), log / n as u64);
    let beta = (0..n as u64)
        .map(|j| big.mul(beta0, big.pow_unsigned(alpha, j)))
        .min()
        .expect("n >= 1");
    SplittingData::assemble(n, lambda.clone(), d, big.clone(), emb, big.elem(beta), big.elem(alpha))
}

fn build_field_bounded_or_same(q_field: &Arc<FieldCtx>, p: u32, m: u32) -> Result<Arc<FieldCtx>> {
    if m == q_field.degree() {
        Ok(Arc::clone(q_field))
    } else {
        crate::gf::build_field_bounded(p, m, u64::MAX)
    }
}

impl SplittingData {
    fn assemble(
        n: usize,
        lambda: FieldElem,
        degree: u32,
        big: Arc<FieldCtx>,
        emb: Embedding,
        beta: FieldElem,
        alpha: FieldElem,
    ) -> Result<SplittingData> {
        let lifted = emb.embed_raw(lambda.raw());
        if big.pow_unsigned(beta.raw(), n as u64) != lifted {
            return Err(Error::Inconsistent(format!("{beta} is not an n-th root of lambda")));
        }
        let order = alpha.order()?;
        if order != n as u64 {
            return Err(Error::WrongOrder {
                expected: n as u64,
                actual: order,
            });
        }
        let q = emb.source().order() as u64;
        let target = big.pow_unsigned(beta.raw(), q - 1);
        let frobenius_shift = (0..n)
            .find(|&t| big.pow_unsigned(alpha.raw(), t as u64) == target)
            .ok_or_else(|| Error::Inconsistent("beta^(q-1) is not a power of alpha".into()))?;
        Ok(SplittingData {
            n,
            lambda,
            degree,
            big,
            emb,
            beta,
            alpha,
            frobenius_shift,
        })
    }

    /// Same field and `alpha`, with a different root `beta` of `x^n - lambda`.
    pub fn with_beta(&self, beta: &FieldElem) -> Result<SplittingData> {
        self.rebased(&self.lambda, beta)
    }

    /// Same field and `alpha`, for another constant `lambda` with root `beta`. The degree
    /// is kept even if a smaller field would split `x^n - lambda`.
    pub fn rebased(&self, lambda: &FieldElem, beta: &FieldElem) -> Result<SplittingData> {
        if lambda.field() != self.q_field().id() || beta.field() != self.big.id() {
            return Err(Error::FieldMismatch {
                left: format!("{} / {}", lambda.field(), beta.field()),
                right: format!("{} / {}", self.q_field().id(), self.big.id()),
            });
        }
        if lambda.is_zero() {
            return Err(Error::ZeroLambda);
        }
        SplittingData::assemble(
            self.n,
            lambda.clone(),
            self.degree,
            Arc::clone(&self.big),
            self.emb.clone(),
            beta.clone(),
            self.alpha.clone(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q_field(&self) -> &Arc<FieldCtx> {
        self.emb.source()
    }

    pub fn lambda(&self) -> &FieldElem {
        &self.lambda
    }

    /// `lambda = w^t` for the canonical primitive `w` of `F_q`.
    pub fn lambda_exp(&self) -> u64 {
        self.q_field().log(self.lambda.raw()).expect("nonzero") as u64
    }

    /// Extension degree `d` of the splitting field over `F_q`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn big_field(&self) -> &Arc<FieldCtx> {
        &self.big
    }

    pub fn embedding(&self) -> &Embedding {
        &self.emb
    }

    pub fn beta(&self) -> &FieldElem {
        &self.beta
    }

    pub fn alpha(&self) -> &FieldElem {
        &self.alpha
    }

    pub fn frobenius_shift(&self) -> usize {
        self.frobenius_shift
    }

    /// `beta alpha^i` as a raw element of the splitting field.
    pub fn root(&self, i: usize) -> u32 {
        self.big
            .mul(self.beta.raw(), self.big.pow_unsigned(self.alpha.raw(), (i % self.n) as u64))
    }

    /// Orbits of `i -> q i + t` on `Z_n`; defining sets over `F_q` are unions of these.
    pub fn frobenius_orbits(&self) -> Vec<ZnSet> {
        frobenius_orbits(self.n, self.q_field().order() as u64, self.frobenius_shift)
    }

    pub fn is_galois_stable(&self, set: &ZnSet) -> bool {
        let q = self.q_field().order() as usize;
        set.members()
            .iter()
            .all(|&i| set.contains((q % self.n * i + self.frobenius_shift) % self.n))
    }
}

/// Orbits of the affine permutation `i -> q i + t` of `Z_n`, ordered by least element.
pub fn frobenius_orbits(n: usize, q: u64, t: usize) -> Vec<ZnSet> {
    let q = (q % n as u64) as usize;
    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut members = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            members.push(i as i64);
            i = (q * i + t) % n;
        }
        orbits.push(ZnSet::new(n, members));
    }
    orbits
}

/// Defining set of the dual code: `-(Z_n \ I)`.
pub fn dual_defining_set(set: &ZnSet) -> ZnSet {
    set.complement().neg()
}

/// Defining set `(I^c + I^c)^c` of the square code. For `I = Z_n` (the zero code) the
/// square is the zero code and `Z_n` is returned.
pub fn square_defining_set(set: &ZnSet) -> ZnSet {
    if set.is_full() {
        return set.clone();
    }
    let c = set.complement();
    c.sumset(&c).expect("complement is nonempty").complement()
}

/// A constacyclic code together with its defining data.
#[derive(Clone)]
pub struct ConstaCode {
    split: SplittingData,
    defining: ZnSet,
    generator: Poly,
    code: LinearCode,
}

impl fmt::Debug for ConstaCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}] constacyclic code over {}, lambda = {}, I = {}",
            self.n(),
            self.dim(),
            self.q_field().id(),
            self.split.lambda,
            self.defining
        )
    }
}

impl ConstaCode {
    /// Builds the code with defining set `set` for `x^n - lambda` over `q_field`.
    pub fn from_defining_set(q_field: &Arc<FieldCtx>, n: usize, lambda: &FieldElem, set: &ZnSet) -> Result<ConstaCode> {
        let split = splitting_data(q_field, n, lambda)?;
        ConstaCode::from_split(&split, set)
    }

    /// Builds `g(x) = prod_{i in I} (x - beta alpha^i)`, pulls it back to `F_q` and takes
    /// the rows `x^j g(x)`, `j < n - |I|`, as generator.
    pub fn from_split(split: &SplittingData, set: &ZnSet) -> Result<ConstaCode> {
        if set.modulus() != split.n {
            return Err(Error::ModulusMismatch(set.modulus(), split.n));
        }
        let big_g = Poly::from_root_exponents(&split.beta, &split.alpha, set)?;
        let generator = big_g
            .try_preimage(&split.emb)
            .map_err(|(degree, c)| Error::NotGaloisClosed {
                degree,
                coefficient: c.to_string(),
            })?;
        let n = split.n;
        let k = n - set.len();
        let ctx = split.q_field();
        let rows: Vec<Vec<u32>> = (0..k)
            .map(|j| {
                let mut row = vec![0u32; n];
                for (i, &c) in generator.coeffs().iter().enumerate() {
                    row[i + j] = c;
                }
                row
            })
            .collect();
        let code = LinearCode::from_generator(&MatGF::from_rows(ctx, n, &rows));
        Ok(ConstaCode {
            split: split.clone(),
            defining: set.clone(),
            generator,
            code,
        })
    }

    pub fn n(&self) -> usize {
        self.split.n
    }

    pub fn dim(&self) -> usize {
        self.code.dim()
    }

    pub fn q_field(&self) -> &Arc<FieldCtx> {
        self.split.q_field()
    }

    pub fn lambda(&self) -> &FieldElem {
        &self.split.lambda
    }

    pub fn split(&self) -> &SplittingData {
        &self.split
    }

    pub fn defining_set(&self) -> &ZnSet {
        &self.defining
    }

    pub fn generator_poly(&self) -> &Poly {
        &self.generator
    }

    /// `h(x) = (x^n - lambda) / g(x)`.
    pub fn check_poly(&self) -> Poly {
        let (h, r) = Poly::x_n_minus(self.lambda(), self.n())
            .divmod(&self.generator)
            .expect("g is nonzero");
        debug_assert!(r.is_zero());
        h
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    /// `G_I`: rows `(1, r, r^2, ..., r^{n-1})` for the roots `r = beta alpha^i`, `i in I`.
    pub fn root_matrix(&self) -> MatGF {
        let big = &self.split.big;
        let rows: Vec<Vec<u32>> = self
            .defining
            .members()
            .iter()
            .map(|&i| {
                let r = self.split.root(i);
                (0..self.n()).map(|j| big.pow_unsigned(r, j as u64)).collect()
            })
            .collect();
        MatGF::from_rows(big, self.n(), &rows)
    }

    /// `H_{-I^c}`: rows `(1, s, ..., s^{n-1})` for `s = beta^{-1} alpha^j`, `j in -I^c`;
    /// over the splitting field it generates the extension of this code.
    pub fn extended_generator(&self) -> MatGF {
        let big = &self.split.big;
        let beta_inv = big.inv(self.split.beta.raw()).expect("beta is nonzero");
        let rows: Vec<Vec<u32>> = dual_defining_set(&self.defining)
            .members()
            .iter()
            .map(|&j| {
                let s = big.mul(beta_inv, big.pow_unsigned(self.split.alpha.raw(), j as u64));
                (0..self.n()).map(|c| big.pow_unsigned(s, c as u64)).collect()
            })
            .collect();
        MatGF::from_rows(big, self.n(), &rows)
    }

    /// The code rebuilt as `{c in F_q^n : G_I c^T = 0}`.
    pub fn via_subfield_subcode(&self) -> Result<LinearCode> {
        if self.defining.is_empty() {
            return Ok(LinearCode::full(self.q_field(), self.n()));
        }
        LinearCode::subfield_kernel(&self.root_matrix(), &self.split.emb)
    }

    /// `(c_0, ..., c_{n-1}) -> (lambda c_{n-1}, c_0, ..., c_{n-2})`.
    pub fn constacyclic_shift(&self, word: &[u32]) -> Vec<u32> {
        let ctx = self.q_field();
        let n = word.len();
        let mut out = Vec::with_capacity(n);
        out.push(ctx.mul(self.lambda().raw(), word[n - 1]));
        out.extend_from_slice(&word[..n - 1]);
        out
    }

    /// Checks closure under the constacyclic shift on every basis row.
    pub fn is_shift_invariant(&self) -> bool {
        let g = self.code.generator();
        (0..g.rows()).all(|r| self.code.contains_word(&self.constacyclic_shift(g.row(r))))
    }

    /// Checks `c(beta alpha^l) = 0` for all `l in I` on every basis row.
    pub fn vanishes_on_roots(&self) -> bool {
        let g = self.code.generator();
        let big = &self.split.big;
        let emb = &self.split.emb;
        (0..g.rows()).all(|r| {
            let word: Vec<u32> = g.row(r).iter().map(|&c| emb.embed_raw(c)).collect();
            let c = Poly::from_raw(big, word);
            self.defining.members().iter().all(|&l| c.eval_raw(self.split.root(l)) == 0)
        })
    }

    /// The `lambda^{-1}`-constacyclic code with defining set `-I^c` relative to `beta^{-1}`,
    /// which should equal the dual of this code.
    pub fn dual_code(&self) -> Result<ConstaCode> {
        let lambda_inv = self.lambda().inv()?;
        let beta_inv = self.split.beta.inv()?;
        let split = self.split.rebased(&lambda_inv, &beta_inv)?;
        ConstaCode::from_split(&split, &dual_defining_set(&self.defining))
    }

    /// The `lambda^2`-constacyclic code with defining set `(I^c + I^c)^c` relative to
    /// `beta^2`, which should equal the Schur square of this code.
    pub fn square_code(&self) -> Result<ConstaCode> {
        let lambda2 = self.lambda().mul(self.lambda())?;
        let beta2 = self.split.beta.mul(&self.split.beta)?;
        let split = self.split.rebased(&lambda2, &beta2)?;
        ConstaCode::from_split(&split, &square_defining_set(&self.defining))
    }
}

/// The three code families of Grassl and Rötteler, all of length `q + 1` over `F_{q^2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `omega^{q+1}`-constacyclic, `I = {-s+1, ..., s}`, `q` odd, dimension `q - 2s + 1`.
    C1,
    /// Cyclic, `I = {-s, ..., s}`, dimension `q - 2s`.
    C2,
    /// Cyclic, `I = {q/2 - s, ..., q/2 + s + 1}`, `q` even, dimension `q - 2s - 1`.
    C3,
}

impl Family {
    /// Dimension the construction promises.
    pub fn expected_dim(self, q: u64, s: usize) -> usize {
        let (q, s) = (q as usize, s);
        match self {
            Family::C1 => q + 1 - 2 * s,
            Family::C2 => q - 2 * s,
            Family::C3 => q - 2 * s - 1,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s.trim().to_ascii_uppercase().as_str() {
            "C1" => Ok(Family::C1),
            "C2" => Ok(Family::C2),
            "C3" => Ok(Family::C3),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// Builds a member of a Grassl–Rötteler family. `C1` uses `beta = omega`, the canonical
/// primitive element of `F_{q^2}`.
pub fn family_grassl(which: Family, q: u64, s: usize) -> Result<ConstaCode> {
    let (p, e) = prime_power(q).ok_or_else(|| Error::InvalidFamily(format!("{q} is not a prime power")))?;
    let n = q as usize + 1;
    let field = build_field(p, 2 * e)?;
    let omega = field.primitive();
    let (set, lambda) = match which {
        Family::C1 => {
            if q % 2 == 0 {
                return Err(Error::InvalidFamily("C1 needs odd q".into()));
            }
            if s == 0 || 2 * s > q as usize - 1 {
                return Err(Error::InvalidFamily(format!("C1 needs 1 <= s <= (q-1)/2, got s = {s}")));
            }
            (ZnSet::interval(n, 1 - s as i64, 2 * s), omega.pow(q as i64 + 1)?)
        }
        Family::C2 => {
            if 2 * s + 1 > q as usize {
                return Err(Error::InvalidFamily(format!("C2 needs 0 <= s <= (q-1)/2, got s = {s}")));
            }
            (ZnSet::interval(n, -(s as i64), 2 * s + 1), field.one())
        }
        Family::C3 => {
            if q % 2 == 1 {
                return Err(Error::InvalidFamily("C3 needs even q".into()));
            }
            if 2 * s + 2 > q as usize {
                return Err(Error::InvalidFamily(format!("C3 needs 0 <= s <= (q-2)/2, got s = {s}")));
            }
            let start = (q / 2) as i64 - s as i64;
            (ZnSet::interval(n, start, 2 * s + 2), field.one())
        }
    };
    let mut split = splitting_data(&field, n, &lambda)?;
    if which == Family::C1 {
        split = split.with_beta(&omega)?;
    }
    ConstaCode::from_split(&split, &set)
}

/// Input description of a constacyclic code: explicit `{p, e, n, lambda_exp, defining_set}`
/// or a family member `{family, q, s}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ConstaSpec {
    Explicit(ExplicitSpec),
    Family(FamilySpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitSpec {
    pub p: u32,
    pub e: u32,
    pub n: usize,
    pub lambda_exp: i64,
    pub defining_set: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySpec {
    pub family: Family,
    pub q: u64,
    pub s: usize,
}

impl ConstaSpec {
    pub fn build(&self) -> Result<ConstaCode> {
        match self {
            ConstaSpec::Explicit(x) => {
                let field = build_field(x.p, x.e)?;
                if x.n == 0 {
                    return Err(Error::Parse("length must be positive".into()));
                }
                let lambda = field.primitive_power(x.lambda_exp);
                let set = ZnSet::new(x.n, x.defining_set.iter().copied());
                ConstaCode::from_defining_set(&field, x.n, &lambda, &set)
            }
            ConstaSpec::Family(f) => family_grassl(f.family, f.q, f.s),
        }
    }

    /// Same spec with the defining set reduced mod `n`, sorted and deduplicated.
    pub fn normalized(&self) -> ConstaSpec {
        match self {
            ConstaSpec::Explicit(x) if x.n > 0 => {
                let set = ZnSet::new(x.n, x.defining_set.iter().copied());
                ConstaSpec::Explicit(ExplicitSpec {
                    defining_set: set.members().iter().map(|&m| m as i64).collect(),
                    ..x.clone()
                })
            }
            other => other.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitting_degree_examples() {
        let f7 = build_field(7, 1).unwrap();
        let sd = splitting_data(&f7, 8, &f7.one()).unwrap();
        assert_eq!(sd.degree(), 2);
        assert_eq!(sd.alpha().order().unwrap(), 8);
        assert_eq!(splitting_degree(7, 8, 0), Some(2));

        let f5 = build_field(5, 1).unwrap();
        let sd = splitting_data(&f5, 1, &f5.elem(3)).unwrap();
        assert_eq!(sd.degree(), 1);
        assert!(sd.alpha().is_one());
        assert_eq!(sd.beta(), &f5.elem(3));

        assert_eq!(
            splitting_data(&f5, 10, &f5.one()).unwrap_err(),
            Error::NotCoprime { n: 10, q: 5 }
        );
        assert_eq!(splitting_data(&f5, 4, &f5.zero()).unwrap_err(), Error::ZeroLambda);
    }

    #[test]
    fn splitting_degree_is_minimal_and_abstract_formula_agrees() {
        for &(p, e) in &[(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2), (2, 3)] {
            let f = build_field(p, e).unwrap();
            let q = f.order() as u64;
            for n in 1..=10usize {
                if gcd(n as u64, q) != 1 {
                    continue;
                }
                for s in 0..q - 1 {
                    let Some(d) = splitting_degree(q, n, s) else { continue };
                    if q.pow(d) > 1 << 16 {
                        continue;
                    }
                    let sd = splitting_data(&f, n, &f.primitive_power(s as i64)).unwrap();
                    assert_eq!(sd.degree(), d);
                    let big = sd.big_field();
                    // n distinct roots, beta first among them
                    let roots: std::collections::BTreeSet<u32> = (0..n).map(|i| sd.root(i)).collect();
                    assert_eq!(roots.len(), n);
                    assert_eq!(*roots.iter().next().unwrap(), sd.beta().raw());
                    let lifted = sd.embedding().embed_raw(sd.lambda().raw());
                    for &r in &roots {
                        assert_eq!(big.pow_unsigned(r, n as u64), lifted);
                    }
                    // no smaller subfield F_{q^d'} (d' | d) holds all roots
                    for d2 in 1..d {
                        if d % d2 != 0 {
                            continue;
                        }
                        let sub = q.pow(d2);
                        assert!(roots.iter().any(|&r| big.pow_unsigned(r, sub) != r));
                    }
                }
            }
        }
    }

    #[test]
    fn family_c1_uses_omega() {
        let c = family_grassl(Family::C1, 9, 3).unwrap();
        assert_eq!(c.n(), 10);
        assert_eq!(c.dim(), 4);
        assert_eq!(c.defining_set(), &ZnSet::new(10, [8, 9, 0, 1, 2, 3]));
        let w = c.q_field().primitive();
        assert_eq!(c.split().beta(), &w);
        assert_eq!(c.split().alpha(), &w.pow(8).unwrap());
        assert_eq!(c.lambda(), &w.pow(10).unwrap());
        assert!(c.is_shift_invariant());
        assert!(c.vanishes_on_roots());
    }

    #[test]
    fn family_examples() {
        let c2 = family_grassl(Family::C2, 5, 1).unwrap();
        assert_eq!(c2.defining_set(), &ZnSet::new(6, [5, 0, 1]));
        assert_eq!(c2.dim(), 3);
        assert!(c2.code().is_mds());
        assert_eq!(c2.generator_poly().degree(), Some(3));
        let c3 = family_grassl(Family::C3, 8, 1).unwrap();
        assert_eq!(c3.defining_set(), &ZnSet::new(9, [3, 4, 5, 6]));
        assert_eq!(c3.dim(), 5);
        assert!(family_grassl(Family::C1, 8, 1).is_err());
        assert!(family_grassl(Family::C3, 9, 1).is_err());
        assert!(family_grassl(Family::C2, 6, 1).is_err());
        assert!(family_grassl(Family::C1, 5, 3).is_err());
    }

    #[test]
    fn degenerate_defining_sets() {
        let f5 = build_field(5, 1).unwrap();
        let full = ConstaCode::from_defining_set(&f5, 4, &f5.one(), &ZnSet::empty(4)).unwrap();
        assert_eq!(full.code(), &LinearCode::full(&f5, 4));
        assert_eq!(full.generator_poly(), &Poly::one(&f5));
        let zero = ConstaCode::from_defining_set(&f5, 4, &f5.one(), &ZnSet::full(4)).unwrap();
        assert_eq!(zero.dim(), 0);
        assert_eq!(zero.generator_poly(), &Poly::x_n_minus(&f5.one(), 4));
    }

    #[test]
    fn rejects_non_galois_closed_sets() {
        // x^7 - 1 over F_2: cyclotomic cosets {0}, {1,2,4}, {3,6,5}
        let f2 = build_field(2, 1).unwrap();
        let err = ConstaCode::from_defining_set(&f2, 7, &f2.one(), &ZnSet::new(7, [1, 2])).unwrap_err();
        assert!(matches!(err, Error::NotGaloisClosed { .. }));
        let ok = ConstaCode::from_defining_set(&f2, 7, &f2.one(), &ZnSet::new(7, [1, 2, 4])).unwrap();
        assert_eq!(ok.dim(), 4);
        let sd = ok.split();
        assert_eq!(sd.frobenius_orbits(), vec![
            ZnSet::new(7, [0]),
            ZnSet::new(7, [1, 2, 4]),
            ZnSet::new(7, [3, 5, 6]),
        ]);
    }

    #[test]
    fn defining_set_algebra() {
        assert_eq!(dual_defining_set(&ZnSet::new(6, [0, 1])), ZnSet::new(6, [1, 2, 3, 4]));
        assert_eq!(dual_defining_set(&ZnSet::full(6)), ZnSet::empty(6));
        let i = ZnSet::new(9, [2, 3, 7]);
        assert_eq!(dual_defining_set(&dual_defining_set(&i)), i);

        let sq = square_defining_set(&ZnSet::new(10, [8, 9, 0, 1, 2, 3]));
        assert_eq!(sq, ZnSet::new(10, [5, 6, 7]));
        assert_eq!(square_defining_set(&ZnSet::new(7, [0, 1, 2, 3])), ZnSet::new(7, [0, 6]));
        assert_eq!(square_defining_set(&ZnSet::new(7, [0, 1, 2, 4])), ZnSet::new(7, [0]));
        assert_eq!(square_defining_set(&ZnSet::full(5)), ZnSet::full(5));
    }

    #[test]
    fn subfield_subcode_agrees_with_generator_polynomial() {
        // x^8 - 1 over F_7 splits in F_49; Galois orbits of i -> 7i
        let f7 = build_field(7, 1).unwrap();
        let sd = splitting_data(&f7, 8, &f7.one()).unwrap();
        for orbit_mask in 0u32..1 << sd.frobenius_orbits().len() {
            let orbits = sd.frobenius_orbits();
            let members: Vec<i64> = orbits
                .iter()
                .enumerate()
                .filter(|(i, _)| orbit_mask >> i & 1 == 1)
                .flat_map(|(_, o)| o.members().iter().map(|&m| m as i64).collect::<Vec<_>>())
                .collect();
            let set = ZnSet::new(8, members);
            assert!(sd.is_galois_stable(&set));
            let c = ConstaCode::from_split(&sd, &set).unwrap();
            assert_eq!(c.dim(), 8 - set.len());
            assert_eq!(&c.via_subfield_subcode().unwrap(), c.code());
            assert!(c.is_shift_invariant());
            assert!(c.vanishes_on_roots());
            assert_eq!(c.dual_code().unwrap().code(), &c.code().dual());
        }
    }

    #[test]
    fn json_input_parsing() {
        let spec: ConstaSpec =
            serde_json::from_str(r#"{"p":29,"e":1,"n":7,"lambda_exp":0,"defining_set":[0,1,2,-3]}"#).unwrap();
        let c = spec.build().unwrap();
        assert_eq!(c.defining_set(), &ZnSet::new(7, [0, 1, 2, 4]));
        let fam: ConstaSpec = serde_json::from_str(r#"{"family":"C1","q":9,"s":3}"#).unwrap();
        assert_eq!(fam, ConstaSpec::Family(FamilySpec { family: Family::C1, q: 9, s: 3 }));
        assert!(serde_json::from_str::<ConstaSpec>(r#"{"family":"C1","q":9,"s":3,"extra":1}"#).is_err());
        if let ConstaSpec::Explicit(x) = spec.normalized() {
            assert_eq!(x.defining_set, vec![0, 1, 2, 4]);
        } else {
            panic!("explicit spec expected");
        }
    }
}
