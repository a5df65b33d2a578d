//! Linear codes over `F_q`: duals, Schur products, distance, the MDS test, generalized
//! Reed–Solomon codes and the square-dimension criterion for GRS codes.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{build_field, Embedding, FieldCtx, FieldDescriptor, FieldElem};
use crate::matrix::MatGF;

/// Default bound on the number of codewords `q^k` that [`LinearCode::min_distance`] visits.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1 << 20;

/// A linear code, stored as the reduced row-echelon basis of its generator.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    n: usize,
    basis: MatGF,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] code over {}", self.n, self.dim(), self.basis.ctx().id())
    }
}

impl LinearCode {
    /// The code spanned by the rows of `generator`.
    pub fn from_generator(generator: &MatGF) -> LinearCode {
        LinearCode {
            n: generator.cols(),
            basis: generator.rref_basis(),
        }
    }

    pub fn zero(ctx: &Arc<FieldCtx>, n: usize) -> LinearCode {
        LinearCode::from_generator(&MatGF::zeros(ctx, 0, n))
    }

    pub fn full(ctx: &Arc<FieldCtx>, n: usize) -> LinearCode {
        LinearCode::from_generator(&MatGF::identity(ctx, n))
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        self.basis.ctx()
    }

    /// Length `n`.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Dimension `k`.
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Canonical generator: the reduced row-echelon basis.
    pub fn generator(&self) -> &MatGF {
        &self.basis
    }

    pub fn contains_word(&self, word: &[u32]) -> bool {
        let w = MatGF::from_rows(self.ctx(), self.n, &[word.to_vec()]);
        self.basis.row_space_contains(&w).unwrap_or(false)
    }

    /// `other` is a subcode of `self`.
    pub fn contains_code(&self, other: &LinearCode) -> Result<bool> {
        self.compatible(other)?;
        self.basis.row_space_contains(&other.basis)
    }

    fn compatible(&self, other: &LinearCode) -> Result<()> {
        if self.n != other.n || self.ctx().id() != other.ctx().id() {
            return Err(Error::CodeMismatch);
        }
        Ok(())
    }

    /// `C^perp = {b : sum b_i c_i = 0 for all c in C}`.
    pub fn dual(&self) -> LinearCode {
        if self.dim() == 0 {
            return LinearCode::full(self.ctx(), self.n);
        }
        LinearCode::from_generator(&self.basis.kernel())
    }

    /// Span of the componentwise products of basis rows (enough by bilinearity).
    pub fn schur_product(&self, other: &LinearCode) -> Result<LinearCode> {
        self.compatible(other)?;
        let ctx = self.ctx();
        let symmetric = self == other;
        let mut rows = Vec::new();
        for i in 0..self.dim() {
            let start = if symmetric { i } else { 0 };
            for j in start..other.dim() {
                let row: Vec<u32> = self
                    .basis
                    .row(i)
                    .iter()
                    .zip(other.basis.row(j))
                    .map(|(&a, &b)| ctx.mul(a, b))
                    .collect();
                rows.push(row);
            }
        }
        Ok(LinearCode::from_generator(&MatGF::from_rows(ctx, self.n, &rows)))
    }

    /// `C^2 = C * C`, from the `k(k+1)/2` products of basis rows.
    pub fn square(&self) -> LinearCode {
        self.schur_product(self).expect("a code is compatible with itself")
    }

    /// Minimum Hamming weight over all nonzero codewords, by enumerating messages.
    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    pub fn min_distance_bounded(&self, bound: u64) -> Result<usize> {
        let k = self.dim();
        let q = self.ctx().order() as u64;
        let too_large = Error::EnumerationTooLarge { q, k, bound };
        if k == 0 {
            return Err(Error::EmptyCode(self.n));
        }
        let total = (q as u128).checked_pow(k as u32).ok_or(too_large.clone())?;
        if total > bound as u128 {
            return Err(too_large);
        }
        // split on the leading message symbol; each block walks the rest as an odometer
        let best = (0..q as u32)
            .into_par_iter()
            .map(|lead| self.min_weight_block(lead))
            .min()
            .unwrap_or(usize::MAX);
        Ok(best)
    }

    fn min_weight_block(&self, lead: u32) -> usize {
        let ctx = self.ctx();
        let k = self.dim();
        let q = ctx.order();
        let n = self.n;
        let mut word: Vec<u32> = self.basis.row(k - 1).iter().map(|&v| ctx.mul(v, lead)).collect();
        let mut msg = vec![0u32; k - 1];
        let mut best = usize::MAX;
        loop {
            if lead != 0 || msg.iter().any(|&m| m != 0) {
                best = best.min(word.iter().filter(|&&c| c != 0).count());
            }
            let mut pos = 0;
            loop {
                if pos == k - 1 {
                    return best;
                }
                let old = msg[pos];
                let new = if old + 1 == q { 0 } else { old + 1 };
                msg[pos] = new;
                let delta = ctx.sub(new, old);
                let row = self.basis.row(pos);
                for c in 0..n {
                    word[c] = ctx.add(word[c], ctx.mul(delta, row[c]));
                }
                if new != 0 {
                    break;
                }
                pos += 1;
            }
        }
    }

    /// A `k`-column subset of the generator with rank below `k`, if any. `None` means
    /// every `k` columns are independent, i.e. the code is MDS.
    pub fn mds_violation(&self) -> Option<Vec<usize>> {
        let k = self.dim();
        if k == 0 {
            return Some(vec![]);
        }
        let subsets = combinations(self.n, k);
        subsets
            .into_par_iter()
            .find_first(|cols| self.basis.select_columns(cols).rank() < k)
    }

    /// True iff `d = n - k + 1`, checked by column-subset ranks. The zero code is not MDS.
    pub fn is_mds(&self) -> bool {
        self.mds_violation().is_none()
    }

    /// Square-dimension test for MDS codes with `k <= (n - 1)/2`: GRS iff
    /// `dim C^2 = 2k - 1`. The MDS property is the caller's responsibility.
    pub fn mz_criterion(&self) -> MzVerdict {
        let k = self.dim();
        if k == 0 || 2 * k + 1 > self.n {
            return MzVerdict::Inapplicable;
        }
        if self.square().dim() == 2 * k - 1 {
            MzVerdict::Grs
        } else {
            MzVerdict::NotGrs
        }
    }

    /// `{c in F_q^n : check c^T = 0}` where `check` lives over an extension `F_{q^d}` and
    /// `emb` embeds `F_q` into it. Solved as a linear system over `Z_p` on the coordinates
    /// of `c` in the basis `1, x, ..., x^{e-1}` of `F_q`.
    pub fn subfield_kernel(check: &MatGF, emb: &Embedding) -> Result<LinearCode> {
        let small = emb.source();
        let big = emb.target();
        if check.ctx().id() != big.id() {
            return Err(Error::FieldMismatch {
                left: check.ctx().id().to_string(),
                right: big.id().to_string(),
            });
        }
        let n = check.cols();
        if emb.is_identity() {
            return Ok(LinearCode::from_generator(&check.kernel()));
        }
        let p = small.characteristic();
        let e = small.degree() as usize;
        let big_deg = big.degree() as usize;
        let prime = build_field(p, 1)?;
        let basis_images: Vec<u32> = (0..e).map(|l| emb.embed_raw(p.pow(l as u32))).collect();

        let mut system = MatGF::zeros(&prime, check.rows() * big_deg, n * e);
        for r in 0..check.rows() {
            for j in 0..n {
                for (l, &b) in basis_images.iter().enumerate() {
                    let digits = big.coeffs(big.mul(check.get(r, j), b));
                    for (t, &d) in digits.iter().enumerate() {
                        system.set(r * big_deg + t, j * e + l, d);
                    }
                }
            }
        }
        let sols = system.kernel();
        let rows: Vec<Vec<u32>> = (0..sols.rows())
            .map(|s| {
                let v = sols.row(s);
                (0..n).map(|j| small.pack(&v[j * e..(j + 1) * e])).collect()
            })
            .collect();
        Ok(LinearCode::from_generator(&MatGF::from_rows(small, n, &rows)))
    }

    pub fn descriptor(&self) -> CodeDescriptor {
        let ctx = self.ctx();
        CodeDescriptor {
            field: ctx.descriptor(),
            n: self.n,
            generator: self
                .basis
                .row_vecs()
                .iter()
                .map(|r| r.iter().map(|&c| ctx.format_raw(c)).collect())
                .collect(),
        }
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MzVerdict {
    Grs,
    NotGrs,
    Inapplicable,
}

/// Serialized code: `{field, n, generator}` with rows of element strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeDescriptor {
    pub field: FieldDescriptor,
    pub n: usize,
    pub generator: Vec<Vec<String>>,
}

impl CodeDescriptor {
    pub fn build(&self) -> Result<LinearCode> {
        let ctx = self.field.build()?;
        let mut rows = Vec::with_capacity(self.generator.len());
        for r in &self.generator {
            if r.len() != self.n {
                return Err(Error::ShapeMismatch(format!("row of length {} in a length-{} code", r.len(), self.n)));
            }
            rows.push(r.iter().map(|s| ctx.parse_elem(s).map(|e| e.raw())).collect::<Result<Vec<_>>>()?);
        }
        Ok(LinearCode::from_generator(&MatGF::from_rows(&ctx, self.n, &rows)))
    }
}

/// Evaluation point of a GRS code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalPoint {
    Finite(FieldElem),
    /// Picks out the coefficient of `x^{k-1}`.
    Infinity,
}

impl EvalPoint {
    fn token(&self) -> String {
        match self {
            EvalPoint::Finite(e) => e.to_string(),
            EvalPoint::Infinity => "inf".into(),
        }
    }
}

/// `GRS_{n,k} = {(v_1 f(a_1), ..., v_n f(a_n)) : deg f < k}`, generated by the monomials
/// `x^i`, `i < k`.
pub fn grs(ctx: &Arc<FieldCtx>, points: &[EvalPoint], mults: &[FieldElem], k: usize) -> Result<LinearCode> {
    let n = points.len();
    if mults.len() != n {
        return Err(Error::InvalidGrs(format!("{n} points but {} multipliers", mults.len())));
    }
    if k == 0 || k >= n {
        return Err(Error::InvalidGrs(format!("need 0 < k < n, got k = {k}, n = {n}")));
    }
    for (i, a) in points.iter().enumerate() {
        if let EvalPoint::Finite(e) = a {
            if e.field() != ctx.id() {
                return Err(Error::FieldMismatch {
                    left: e.field().to_string(),
                    right: ctx.id().to_string(),
                });
            }
        }
        if points[..i].contains(a) {
            return Err(Error::RepeatedPoint);
        }
    }
    for v in mults {
        if v.field() != ctx.id() {
            return Err(Error::FieldMismatch {
                left: v.field().to_string(),
                right: ctx.id().to_string(),
            });
        }
        if v.is_zero() {
            return Err(Error::ZeroMultiplier);
        }
    }
    let rows: Vec<Vec<u32>> = (0..k)
        .map(|i| {
            points
                .iter()
                .zip(mults)
                .map(|(a, v)| {
                    let m = match a {
                        EvalPoint::Finite(x) => ctx.pow_unsigned(x.raw(), i as u64),
                        EvalPoint::Infinity => u32::from(i == k - 1),
                    };
                    ctx.mul(v.raw(), m)
                })
                .collect()
        })
        .collect();
    Ok(LinearCode::from_generator(&MatGF::from_rows(ctx, n, &rows)))
}

/// Serialized GRS construction: `{field, points, multipliers, k}`, `"inf"` for infinity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrsSpec {
    pub field: FieldDescriptor,
    pub points: Vec<String>,
    pub multipliers: Vec<String>,
    pub k: usize,
}

impl GrsSpec {
    pub fn new(ctx: &FieldCtx, points: &[EvalPoint], mults: &[FieldElem], k: usize) -> GrsSpec {
        GrsSpec {
            field: ctx.descriptor(),
            points: points.iter().map(EvalPoint::token).collect(),
            multipliers: mults.iter().map(FieldElem::to_string).collect(),
            k,
        }
    }

    pub fn build(&self) -> Result<LinearCode> {
        let ctx = self.field.build()?;
        let points = self
            .points
            .iter()
            .map(|s| {
                if s.trim().eq_ignore_ascii_case("inf") {
                    Ok(EvalPoint::Infinity)
                } else {
                    ctx.parse_elem(s).map(EvalPoint::Finite)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let mults = self
            .multipliers
            .iter()
            .map(|s| ctx.parse_elem(s))
            .collect::<Result<Vec<_>>>()?;
        grs(&ctx, &points, &mults, self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(ctx: &Arc<FieldCtx>, n: usize, rows: &[Vec<u32>]) -> LinearCode {
        LinearCode::from_generator(&MatGF::from_rows(ctx, n, rows))
    }

    fn rs(ctx: &Arc<FieldCtx>, pts: &[u32], k: usize) -> LinearCode {
        let points: Vec<EvalPoint> = pts.iter().map(|&x| EvalPoint::Finite(ctx.elem(x))).collect();
        grs(ctx, &points, &vec![ctx.one(); pts.len()], k).unwrap()
    }

    #[test]
    fn dual_examples() {
        let f5 = build_field(5, 1).unwrap();
        assert_eq!(LinearCode::full(&f5, 4).dual().dim(), 0);
        let f2 = build_field(2, 1).unwrap();
        let rep = code(&f2, 5, &[vec![1; 5]]);
        let parity = rep.dual();
        assert_eq!(parity.dim(), 4);
        assert!(parity.contains_word(&[1, 1, 0, 0, 0]));
        assert!(!parity.contains_word(&[1, 0, 0, 0, 0]));
        let c = code(&f5, 5, &[vec![1, 2, 3, 4, 0], vec![0, 1, 1, 2, 3]]);
        assert_eq!(c.dual().dual(), c);
        assert_eq!(LinearCode::zero(&f5, 3).dual(), LinearCode::full(&f5, 3));
    }

    #[test]
    fn schur_product_examples() {
        let f5 = build_field(5, 1).unwrap();
        let c = code(&f5, 3, &[vec![1, 2, 3]]);
        let d = code(&f5, 3, &[vec![2, 2, 2]]);
        let cd = c.schur_product(&d).unwrap();
        assert_eq!(cd, code(&f5, 3, &[vec![2, 4, 1]]));
        assert_eq!(c.square().dim(), 1);
        let rs52 = rs(&f5, &[0, 1, 2, 3, 4], 2);
        assert_eq!(rs52.square().dim(), 3);
        assert_eq!(rs52.square(), rs(&f5, &[0, 1, 2, 3, 4], 3));
        let f7 = build_field(7, 1).unwrap();
        assert_eq!(c.schur_product(&LinearCode::full(&f7, 3)), Err(Error::CodeMismatch));
    }

    #[test]
    fn min_distance_examples() {
        let f2 = build_field(2, 1).unwrap();
        assert_eq!(code(&f2, 3, &[vec![1, 1, 1]]).min_distance().unwrap(), 3);
        let f5 = build_field(5, 1).unwrap();
        assert_eq!(rs(&f5, &[0, 1, 2, 3, 4], 2).min_distance().unwrap(), 4);
        assert!(matches!(
            LinearCode::full(&f5, 10).min_distance(),
            Err(Error::EnumerationTooLarge { .. })
        ));
        assert_eq!(LinearCode::zero(&f5, 3).min_distance(), Err(Error::EmptyCode(3)));
    }

    #[test]
    fn mds_examples() {
        let f5 = build_field(5, 1).unwrap();
        let bad = code(&f5, 4, &[vec![1, 0, 1, 0], vec![0, 1, 0, 1]]);
        assert!(!bad.is_mds());
        assert_eq!(bad.mds_violation(), Some(vec![0, 2]));
        assert_eq!(bad.min_distance().unwrap(), 2);
        assert!(rs(&f5, &[0, 1, 2, 3, 4], 3).is_mds());
        assert!(!LinearCode::zero(&f5, 3).is_mds());
    }

    #[test]
    fn grs_with_infinity() {
        let f5 = build_field(5, 1).unwrap();
        let pts = [EvalPoint::Finite(f5.elem(1)), EvalPoint::Finite(f5.elem(2)), EvalPoint::Infinity];
        let c = grs(&f5, &pts, &[f5.one(), f5.one(), f5.one()], 2).unwrap();
        assert_eq!(c, code(&f5, 3, &[vec![1, 1, 0], vec![1, 2, 1]]));
        assert!(c.is_mds());
        let k1 = grs(&f5, &pts, &[f5.elem(2), f5.elem(3), f5.elem(4)], 1).unwrap();
        assert_eq!(k1, code(&f5, 3, &[vec![2, 3, 4]]));
    }

    #[test]
    fn grs_errors() {
        let f5 = build_field(5, 1).unwrap();
        let one = f5.one();
        let p = |x: u32| EvalPoint::Finite(f5.elem(x));
        assert_eq!(grs(&f5, &[p(1), p(1), p(2)], &[one.clone(), one.clone(), one.clone()], 1), Err(Error::RepeatedPoint));
        assert_eq!(grs(&f5, &[p(1), p(3), p(2)], &[one.clone(), f5.zero(), one.clone()], 1), Err(Error::ZeroMultiplier));
        assert!(matches!(grs(&f5, &[p(1), p(2)], &[one.clone(), one.clone()], 2), Err(Error::InvalidGrs(_))));
    }

    #[test]
    fn mz_criterion_examples() {
        let f5 = build_field(5, 1).unwrap();
        assert_eq!(rs(&f5, &[0, 1, 2, 3, 4], 2).mz_criterion(), MzVerdict::Grs);
        let f7 = build_field(7, 1).unwrap();
        assert_eq!(rs(&f7, &[0, 1, 2, 3, 4, 5], 3).mz_criterion(), MzVerdict::Inapplicable);
    }

    #[test]
    fn grs_square_dimension_over_small_fields() {
        // forward direction of the square criterion, all small parameter tuples
        for &(p, m) in &[(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let ctx = build_field(p, m).unwrap();
            let q = ctx.order() as usize;
            for n in 3..=q + 1 {
                let mut points: Vec<EvalPoint> = (0..q.min(n) as u32).map(|x| EvalPoint::Finite(ctx.elem(x))).collect();
                if n == q + 1 {
                    points.push(EvalPoint::Infinity);
                }
                let mults: Vec<FieldElem> = (0..n).map(|j| ctx.elem(1 + (j as u32 * 3) % (q as u32 - 1).max(1))).collect();
                for k in 1..n {
                    let c = grs(&ctx, &points, &mults, k).unwrap();
                    assert_eq!(c.dim(), k);
                    if 2 * k < n {
                        assert_eq!(c.square().dim(), 2 * k - 1);
                        assert_eq!(c.mz_criterion(), MzVerdict::Grs);
                    }
                    let d = c.dual();
                    if 2 * d.dim() < n {
                        assert_eq!(d.mz_criterion(), MzVerdict::Grs, "dual of GRS is GRS");
                    }
                }
            }
        }
    }

    #[test]
    fn subfield_kernel_matches_trace_free_cases() {
        // the all-ones check row over F_4 restricted to F_2 is the even-weight code
        let f2 = build_field(2, 1).unwrap();
        let f4 = build_field(2, 2).unwrap();
        let emb = Embedding::new(&f2, &f4).unwrap();
        let check = MatGF::from_rows(&f4, 3, &[vec![1, 1, 1]]);
        let c = LinearCode::subfield_kernel(&check, &emb).unwrap();
        assert_eq!(c, code(&f2, 3, &[vec![1, 1, 0], vec![0, 1, 1]]));
        // a row (1, w, w^2) with w primitive in F_4: F_2-solutions satisfy c0 + c1 w + c2 w^2 = 0
        let w = f4.primitive_raw();
        let check = MatGF::from_rows(&f4, 3, &[vec![1, w, f4.mul(w, w)]]);
        let c = LinearCode::subfield_kernel(&check, &emb).unwrap();
        assert_eq!(c, code(&f2, 3, &[vec![1, 1, 1]]));
    }

    #[test]
    fn descriptors_round_trip() {
        let f9 = build_field(3, 2).unwrap();
        let c = code(&f9, 4, &[vec![1, 5, 0, 7], vec![0, 1, 2, 3]]);
        let d = c.descriptor();
        let json = serde_json::to_string(&d).unwrap();
        let back: CodeDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(back.build().unwrap(), c);

        let pts = vec![EvalPoint::Finite(f9.elem(0)), EvalPoint::Finite(f9.elem(4)), EvalPoint::Infinity];
        let mults = vec![f9.elem(1), f9.elem(2), f9.elem(8)];
        let spec = GrsSpec::new(&f9, &pts, &mults, 2);
        assert_eq!(spec.points[2], "inf");
        let json = serde_json::to_string(&spec).unwrap();
        let back: GrsSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back.build().unwrap(), grs(&f9, &pts, &mults, 2).unwrap());
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(7, 3).len(), 35);
        assert_eq!(combinations(4, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
