//! Dense univariate polynomials over a [`FieldCtx`].

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{prime_factors, Embedding, FieldCtx, FieldElem};
use crate::zn::ZnSet;

/// Polynomial with packed coefficients, low degree first, no trailing zeros.
#[derive(Clone)]
pub struct Poly {
    ctx: Arc<FieldCtx>,
    coeffs: Vec<u32>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.id() == other.ctx.id() && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coeffs.iter().map(|&c| self.ctx.format_raw(c)).collect();
        write!(f, "Poly[{}]", terms.join(", "))
    }
}

impl serde::Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for &c in &self.coeffs {
            seq.serialize_element(&self.ctx.format_raw(c))?;
        }
        seq.end()
    }
}

impl Poly {
    pub fn from_raw(ctx: &Arc<FieldCtx>, mut coeffs: Vec<u32>) -> Poly {
        assert!(coeffs.iter().all(|&c| c < ctx.order()), "coefficient outside the field");
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            ctx: Arc::clone(ctx),
            coeffs,
        }
    }

    pub fn from_elems(ctx: &Arc<FieldCtx>, coeffs: &[FieldElem]) -> Result<Poly> {
        let mut raw = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            if c.field() != ctx.id() {
                return Err(Error::FieldMismatch {
                    left: c.field().to_string(),
                    right: ctx.id().to_string(),
                });
            }
            raw.push(c.raw());
        }
        Ok(Poly::from_raw(ctx, raw))
    }

    /// Parses a list of field-element strings.
    pub fn parse(ctx: &Arc<FieldCtx>, coeffs: &[&str]) -> Result<Poly> {
        let elems = coeffs
            .iter()
            .map(|c| ctx.parse_elem(c))
            .collect::<Result<Vec<_>>>()?;
        Poly::from_elems(ctx, &elems)
    }

    pub fn zero(ctx: &Arc<FieldCtx>) -> Poly {
        Poly::from_raw(ctx, vec![])
    }

    pub fn one(ctx: &Arc<FieldCtx>) -> Poly {
        Poly::from_raw(ctx, vec![1])
    }

    /// The monomial `x^k`.
    pub fn monomial(ctx: &Arc<FieldCtx>, k: usize) -> Poly {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        Poly::from_raw(ctx, c)
    }

    /// `x^n - lambda`.
    pub fn x_n_minus(lambda: &FieldElem, n: usize) -> Poly {
        let ctx = lambda.ctx();
        let mut c = vec![0; n + 1];
        c[n] = 1;
        c[0] = ctx.add(c[0], ctx.neg(lambda.raw()));
        Poly::from_raw(ctx, c)
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeff_elems(&self) -> Vec<FieldElem> {
        self.coeffs.iter().map(|&c| self.ctx.elem(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if self.ctx.id() != other.ctx.id() {
            return Err(Error::FieldMismatch {
                left: self.ctx.id().to_string(),
                right: other.ctx.id().to_string(),
            });
        }
        Ok(())
    }

    fn assert_same_field(&self, other: &Poly) {
        if let Err(e) = self.same_field(other) {
            panic!("{e}");
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_same_field(other);
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len)
            .map(|i| self.ctx.add(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::from_raw(&self.ctx, c)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        let c = self.coeffs.iter().map(|&a| self.ctx.neg(a)).collect();
        Poly::from_raw(&self.ctx, c)
    }

    pub fn scale(&self, s: u32) -> Poly {
        let c = self.coeffs.iter().map(|&a| self.ctx.mul(a, s)).collect();
        Poly::from_raw(&self.ctx, c)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_same_field(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let mut c = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = self.ctx.add(c[i + j], self.ctx.mul(a, b));
            }
        }
        Poly::from_raw(&self.ctx, c)
    }

    /// Multiplies by `x - root` in place.
    fn mul_linear(&mut self, root: u32) {
        let neg_root = self.ctx.neg(root);
        let mut next = vec![0u32; self.coeffs.len() + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            next[i + 1] = self.ctx.add(next[i + 1], c);
            next[i] = self.ctx.add(next[i], self.ctx.mul(c, neg_root));
        }
        *self = Poly::from_raw(&self.ctx, next);
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(divisor)?;
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let lead_inv = self.ctx.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(&self.ctx), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = rem[top];
            if c == 0 {
                continue;
            }
            let factor = self.ctx.mul(c, lead_inv);
            quot[top - dd] = factor;
            for (j, &dj) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + j;
                rem[idx] = self.ctx.sub(rem[idx], self.ctx.mul(factor, dj));
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_raw(&self.ctx, quot), Poly::from_raw(&self.ctx, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.ctx.inv(self.leading()).unwrap())
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `self^e mod modulus`.
    pub fn powmod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.ctx).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus)?;
            }
            base = base.mul(&base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Horner evaluation at a raw element of the coefficient field.
    pub fn eval_raw(&self, z: u32) -> u32 {
        self.coeffs
            .iter()
            .rev()
            .fold(0u32, |acc, &c| self.ctx.add(self.ctx.mul(acc, z), c))
    }

    pub fn eval(&self, z: &FieldElem) -> Result<FieldElem> {
        if z.field() != self.ctx.id() {
            return Err(Error::FieldMismatch {
                left: z.field().to_string(),
                right: self.ctx.id().to_string(),
            });
        }
        Ok(self.ctx.elem(self.eval_raw(z.raw())))
    }

    /// Image of this polynomial under a coefficient embedding.
    pub fn embed(&self, emb: &Embedding) -> Result<Poly> {
        if emb.source().id() != self.ctx.id() {
            return Err(Error::FieldMismatch {
                left: self.ctx.id().to_string(),
                right: emb.source().id().to_string(),
            });
        }
        let c = self.coeffs.iter().map(|&a| emb.embed_raw(a)).collect();
        Ok(Poly::from_raw(emb.target(), c))
    }

    /// Pulls the coefficients back through `emb`. On failure returns the index and
    /// value of the first coefficient outside the embedded subfield.
    pub fn try_preimage(&self, emb: &Embedding) -> std::result::Result<Poly, (usize, FieldElem)> {
        assert_eq!(emb.target().id(), self.ctx.id(), "polynomial is not over the target field");
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, &c) in self.coeffs.iter().enumerate() {
            match emb.preimage_raw(c) {
                Some(r) => out.push(r),
                None => return Err((i, self.ctx.elem(c))),
            }
        }
        Ok(Poly::from_raw(emb.source(), out))
    }

    /// All elements `z` of `emb`'s target with `f(z) = 0`, in enumeration order, found by
    /// scanning the whole field.
    pub fn roots_in(&self, emb: &Embedding) -> Result<Vec<FieldElem>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let lifted = self.embed(emb)?;
        let big = emb.target();
        Ok((0..big.order())
            .filter(|&z| lifted.eval_raw(z) == 0)
            .map(|z| big.elem(z))
            .collect())
    }

    /// `prod_{i in set} (x - beta alpha^i)`, over the field of `alpha`.
    pub fn from_root_exponents(beta: &FieldElem, alpha: &FieldElem, set: &ZnSet) -> Result<Poly> {
        if beta.field() != alpha.field() {
            return Err(Error::FieldMismatch {
                left: beta.field().to_string(),
                right: alpha.field().to_string(),
            });
        }
        let n = set.modulus() as u64;
        let order = alpha.order()?;
        if order != n {
            return Err(Error::WrongOrder {
                expected: n,
                actual: order,
            });
        }
        let ctx = alpha.ctx();
        let mut g = Poly::one(ctx);
        for &i in set.members() {
            let root = ctx.mul(beta.raw(), ctx.pow_unsigned(alpha.raw(), i as u64));
            g.mul_linear(root);
        }
        Ok(g)
    }

    /// Rabin's test: `f` of degree `m` over `F_q` is irreducible iff `x^{q^m} = x mod f` and
    /// `gcd(x^{q^{m/r}} - x, f) = 1` for every prime `r | m`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let m = match self.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            Some(m) => m,
        };
        if m == 1 {
            return Ok(true);
        }
        let f = self.monic();
        let q = self.ctx.order() as u64;
        let x = Poly::monomial(&self.ctx, 1);
        // frob[i] = x^{q^i} mod f
        let mut frob = vec![x.rem(&f)?];
        for i in 1..=m {
            let next = frob[i - 1].powmod(q, &f)?;
            frob.push(next);
        }
        if frob[m] != x.rem(&f)? {
            return Ok(false);
        }
        for r in prime_factors(m as u64) {
            let h = frob[m / r as usize].sub(&x);
            if h.gcd(&f)?.degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_field;

    fn p(ctx: &Arc<FieldCtx>, c: &[u32]) -> Poly {
        Poly::from_raw(ctx, c.to_vec())
    }

    /// Monic polynomials of degree `d` over the field, in packed order.
    fn monics(ctx: &Arc<FieldCtx>, d: usize) -> Vec<Poly> {
        let q = ctx.order() as u64;
        (0..q.pow(d as u32))
            .map(|mut v| {
                let mut c = Vec::with_capacity(d + 1);
                for _ in 0..d {
                    c.push((v % q) as u32);
                    v /= q;
                }
                c.push(1);
                p(ctx, &c)
            })
            .collect()
    }

    fn irreducible_by_trial(f: &Poly) -> bool {
        let m = f.degree().unwrap();
        (1..=m / 2).all(|d| monics(f.ctx(), d).iter().all(|g| !f.rem(g).unwrap().is_zero()))
    }

    #[test]
    fn division_examples() {
        let f5 = build_field(5, 1).unwrap();
        let (q, r) = p(&f5, &[4, 0, 1]).divmod(&p(&f5, &[4, 1])).unwrap();
        assert_eq!(q, p(&f5, &[1, 1]));
        assert!(r.is_zero());
        let f = p(&f5, &[1, 2, 3]);
        let (q, r) = f.divmod(&Poly::one(&f5)).unwrap();
        assert_eq!((q, r.is_zero()), (f.clone(), true));
        assert_eq!(f.divmod(&Poly::zero(&f5)), Err(Error::ZeroDivisor));

        let f2 = build_field(2, 1).unwrap();
        let (q, r) = Poly::monomial(&f2, 3).divmod(&Poly::monomial(&f2, 2)).unwrap();
        assert_eq!(q, Poly::monomial(&f2, 1));
        assert!(r.is_zero());
    }

    #[test]
    fn roots_in_prime_fields() {
        let f5 = build_field(5, 1).unwrap();
        let id = Embedding::identity(&f5);
        let roots: Vec<u32> = p(&f5, &[1, 0, 1]).roots_in(&id).unwrap().iter().map(FieldElem::raw).collect();
        assert_eq!(roots, vec![2, 3]);
        let f3 = build_field(3, 1).unwrap();
        assert!(p(&f3, &[1, 0, 1]).roots_in(&Embedding::identity(&f3)).unwrap().is_empty());
        assert_eq!(Poly::zero(&f3).roots_in(&Embedding::identity(&f3)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn x_n_minus_lambda_splits_with_n_roots() {
        // x^8 - 1 over F_7 splits in F_49
        let f7 = build_field(7, 1).unwrap();
        let f49 = build_field(7, 2).unwrap();
        let emb = Embedding::new(&f7, &f49).unwrap();
        let f = Poly::x_n_minus(&f7.one(), 8);
        assert_eq!(f.roots_in(&emb).unwrap().len(), 8);
        assert_eq!(f.roots_in(&Embedding::identity(&f7)).unwrap().len(), 2);
        // x^3 - 2 over F_7: 2 is a cube? cubes mod 7 are {1, 6}; roots live in F_{7^3}
        let g = Poly::x_n_minus(&f7.elem(2), 3);
        assert!(g.roots_in(&Embedding::identity(&f7)).unwrap().is_empty());
    }

    #[test]
    fn irreducibility_examples() {
        let f3 = build_field(3, 1).unwrap();
        assert!(p(&f3, &[1, 0, 1]).is_irreducible().unwrap());
        let f5 = build_field(5, 1).unwrap();
        assert!(!p(&f5, &[4, 0, 1]).is_irreducible().unwrap());
        let f2 = build_field(2, 1).unwrap();
        assert!(p(&f2, &[1, 1, 0, 1]).is_irreducible().unwrap());
        assert_eq!(Poly::one(&f2).is_irreducible(), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn rabin_test_matches_trial_division() {
        for &(pr, m, max_deg) in &[(2, 1, 6), (3, 1, 4), (5, 1, 3), (2, 2, 3), (3, 2, 2)] {
            let ctx = build_field(pr, m).unwrap();
            for d in 1..=max_deg {
                for f in monics(&ctx, d) {
                    assert_eq!(f.is_irreducible().unwrap(), irreducible_by_trial(&f), "{f:?}");
                }
            }
        }
    }

    #[test]
    fn from_root_exponents_edges() {
        let f5 = build_field(5, 1).unwrap();
        let alpha = f5.primitive();
        let beta = f5.one();
        let empty = ZnSet::new(4, []);
        assert_eq!(Poly::from_root_exponents(&beta, &alpha, &empty).unwrap(), Poly::one(&f5));
        let full = ZnSet::full(4);
        assert_eq!(
            Poly::from_root_exponents(&beta, &alpha, &full).unwrap(),
            Poly::x_n_minus(&f5.one(), 4)
        );
        // alpha = 4 has order 2, not 4
        assert_eq!(
            Poly::from_root_exponents(&beta, &f5.elem(4), &full),
            Err(Error::WrongOrder { expected: 4, actual: 2 })
        );
    }

    #[test]
    fn example_cyclic_generator_over_f25() {
        // prod_{i=-1}^{1} (x - alpha^i) for alpha a primitive 6th root of unity in F_25
        let f25 = build_field(5, 2).unwrap();
        let w = f25.primitive();
        let alpha = w.pow(4).unwrap();
        assert_eq!(alpha.order().unwrap(), 6);
        let set = ZnSet::new(6, [-1, 0, 1]);
        let g = Poly::from_root_exponents(&f25.one(), &alpha, &set).unwrap();
        assert_eq!(g.degree(), Some(3));
        let (_, r) = Poly::x_n_minus(&f25.one(), 6).divmod(&g).unwrap();
        assert!(r.is_zero());
        // real coefficients: the root set is closed under z -> z^5 = z^{-1}
        let f5 = build_field(5, 1).unwrap();
        let emb = Embedding::new(&f5, &f25).unwrap();
        assert!(g.try_preimage(&emb).is_ok());
    }
}
