//! Finite fields `F_{p^m}` with a canonical, reproducible construction.
//!
//! Elements are stored as packed coefficient vectors: the residue
//! `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` is the integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`.
//! The fixed enumeration of a field used for every tie-break is the order of these
//! integers, so `0` comes first and `1` second.
//!
//! Bulk routines ([`crate::poly`], [`crate::matrix`]) work on raw `u32` values through a
//! shared [`FieldCtx`]; [`FieldElem`] is the checked, self-describing element type.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Default bound on `p^m` for constructed fields.
pub const DEFAULT_FIELD_BOUND: u64 = 1 << 20;

/// Fields up to this order get exp/log tables.
const TABLE_LIMIT: u64 = 1 << 16;

/// Identity of a field. Construction is canonical, so `(p, m)` determines the field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldId {
    pub p: u32,
    pub m: u32,
}

impl fmt::Display for FieldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.p, self.m)
    }
}

struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A concrete finite field `F_{p^m}`.
pub struct FieldCtx {
    p: u32,
    m: u32,
    order: u32,
    modulus: Vec<u32>,
    primitive: u32,
    /// Distinct prime factors of `order - 1`.
    group_factors: Vec<u64>,
    tables: Option<LogTables>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .field("primitive", &self.primitive)
            .finish()
    }
}

/// Builds `F_{p^m}` with the default size bound.
pub fn build_field(p: u32, m: u32) -> Result<Arc<FieldCtx>> {
    build_field_bounded(p, m, DEFAULT_FIELD_BOUND)
}

/// Builds the canonical `F_{p^m}`: the modulus is the first monic irreducible of degree
/// `m` in the packed enumeration and the primitive element is the first element of full
/// multiplicative order. For `m = 1` the modulus is `x` and the field is `Z_p`.
pub fn build_field_bounded(p: u32, m: u32, bound: u64) -> Result<Arc<FieldCtx>> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    let order = (p as u64)
        .checked_pow(m)
        .filter(|&q| q <= bound && q <= u32::MAX as u64)
        .ok_or(Error::FieldTooLarge {
            p: p as u64,
            m: m as u64,
            bound,
        })?;

    let modulus = if m == 1 {
        vec![0, 1]
    } else {
        first_irreducible(p, m)?
    };
    let mut ctx = FieldCtx {
        p,
        m,
        order: order as u32,
        modulus,
        primitive: 1,
        group_factors: prime_factors(order - 1),
        tables: None,
    };
    ctx.primitive = (1..ctx.order)
        .find(|&a| ctx.order_of_raw(a) == order - 1)
        .expect("the multiplicative group of a finite field is cyclic");
    if order <= TABLE_LIMIT {
        ctx.tables = Some(ctx.build_tables());
    }
    Ok(Arc::new(ctx))
}

fn first_irreducible(p: u32, m: u32) -> Result<Vec<u32>> {
    let prime = build_field_bounded(p, 1, u64::MAX)?;
    let count = (p as u64).pow(m);
    for packed in 0..count {
        // x divides anything with a zero constant term
        if packed % p as u64 == 0 {
            continue;
        }
        let mut coeffs = unpack(packed, p, m as usize);
        coeffs.push(1);
        let f = Poly::from_raw(&prime, coeffs.clone());
        if f.is_irreducible()? {
            return Ok(coeffs);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn unpack(mut v: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((v % p as u64) as u32);
        v /= p as u64;
    }
    out
}

impl FieldCtx {
    pub fn id(&self) -> FieldId {
        FieldId {
            p: self.p,
            m: self.m,
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Number of elements `p^m`.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Monic modulus, low degree first (length `m + 1`).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn primitive_raw(&self) -> u32 {
        self.primitive
    }

    pub fn primitive(self: &Arc<Self>) -> FieldElem {
        FieldElem::from_raw(self, self.primitive)
    }

    pub fn zero(self: &Arc<Self>) -> FieldElem {
        FieldElem::from_raw(self, 0)
    }

    pub fn one(self: &Arc<Self>) -> FieldElem {
        FieldElem::from_raw(self, 1)
    }

    /// Element with the given packed value; panics if out of range.
    pub fn elem(self: &Arc<Self>, raw: u32) -> FieldElem {
        assert!(raw < self.order, "{raw} is not an element of {}", self.id());
        FieldElem::from_raw(self, raw)
    }

    /// Element from its coefficient vector (low degree first, length at most `m`).
    pub fn elem_from_coeffs(self: &Arc<Self>, coeffs: &[u32]) -> Result<FieldElem> {
        if coeffs.len() > self.m as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::Parse(format!(
                "{coeffs:?} is not a coefficient vector of {}",
                self.id()
            )));
        }
        Ok(FieldElem::from_raw(self, self.pack(coeffs)))
    }

    /// `w^t` for the canonical primitive element `w`.
    pub fn primitive_power(self: &Arc<Self>, t: i64) -> FieldElem {
        FieldElem::from_raw(self, self.pow(self.primitive, t))
    }

    /// All elements in the fixed enumeration order.
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.order).map(move |r| FieldElem::from_raw(self, r))
    }

    pub fn coeffs(&self, a: u32) -> Vec<u32> {
        unpack(a as u64, self.p, self.m as usize)
    }

    pub fn pack(&self, coeffs: &[u32]) -> u32 {
        coeffs
            .iter()
            .rev()
            .fold(0u32, |acc, &c| acc * self.p + c)
    }

    /// True for elements of the prime subfield.
    pub fn is_prime_subfield(&self, a: u32) -> bool {
        a < self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.m == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            let s = a % self.p + b % self.p;
            let digit = if s >= self.p { s - self.p } else { s };
            out += digit * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        if self.m == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            let d = a % self.p;
            if d != 0 {
                out += (self.p - d) * place;
            }
            place *= self.p;
            a /= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            return t.exp[(t.log[a as usize] + t.log[b as usize]) as usize];
        }
        self.mul_schoolbook(a, b)
    }

    /// Multiplication straight from the modulus, without tables.
    pub fn mul_schoolbook(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let p = self.p as u64;
        let m = self.m as usize;
        let x = self.coeffs(a);
        let y = self.coeffs(b);
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi as u64 * yj as u64) % p;
            }
        }
        // x^m = -(modulus[0] + ... + modulus[m-1] x^{m-1})
        for top in (m..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (j, &mj) in self.modulus[..m].iter().enumerate() {
                let idx = top - m + j;
                prod[idx] = (prod[idx] + (p - c) * mj as u64) % p;
            }
        }
        let digits: Vec<u32> = prod[..m].iter().map(|&c| c as u32).collect();
        self.pack(&digits)
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if let Some(t) = &self.tables {
            let l = t.log[a as usize];
            return Some(t.exp[((self.order - 1 - l) % (self.order - 1)) as usize]);
        }
        Some(self.pow_unsigned(a, self.order as u64 - 2))
    }

    /// `a^e`; negative exponents go through the inverse. `0^e` is `0` for `e > 0`, `1` for
    /// `e = 0`, and panics for `e < 0`.
    pub fn pow(&self, a: u32, e: i64) -> u32 {
        if e >= 0 {
            self.pow_unsigned(a, e as u64)
        } else {
            let inv = self.inv(a).expect("negative power of zero");
            self.pow_unsigned(inv, e.unsigned_abs())
        }
    }

    pub fn pow_unsigned(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            let l = (t.log[a as usize] as u64 * (e % (self.order as u64 - 1))) % (self.order as u64 - 1);
            return t.exp[l as usize];
        }
        let mut base = a;
        let mut e = e;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_schoolbook(acc, base);
            }
            base = self.mul_schoolbook(base, base);
            e >>= 1;
        }
        acc
    }

    /// Discrete log base the canonical primitive element, for nonzero `a`.
    pub fn log(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if let Some(t) = &self.tables {
            return Some(t.log[a as usize]);
        }
        let mut acc = 1;
        for k in 0..self.order - 1 {
            if acc == a {
                return Some(k);
            }
            acc = self.mul_schoolbook(acc, self.primitive);
        }
        None
    }

    /// Least `t >= 1` with `a^t = 1`, by descent over the prime factors of `p^m - 1`.
    pub fn order_of_raw(&self, a: u32) -> u64 {
        assert!(a != 0, "zero has no multiplicative order");
        let mut t = self.order as u64 - 1;
        for &r in &self.group_factors {
            while t % r == 0 && self.pow_unsigned(a, t / r) == 1 {
                t /= r;
            }
        }
        t
    }

    fn build_tables(&self) -> LogTables {
        let n = self.order as usize - 1;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![0u32; self.order as usize];
        let mut acc = 1u32;
        for i in 0..n {
            exp[i] = acc;
            log[acc as usize] = i as u32;
            acc = self.mul_schoolbook(acc, self.primitive);
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        if n == 0 {
            exp[0] = 1;
        }
        LogTables { exp, log }
    }

    pub fn format_raw(&self, a: u32) -> String {
        let coeffs = self.coeffs(a);
        let body: Vec<String> = coeffs.iter().map(u32::to_string).collect();
        format!("{}^{}:[{}]", self.p, self.m, body.join(","))
    }

    /// Parses the `"p^m:[c0,c1,...]"` element format.
    pub fn parse_elem(self: &Arc<Self>, s: &str) -> Result<FieldElem> {
        let bad = || Error::Parse(format!("malformed field element {s:?}"));
        let (head, body) = s.trim().split_once(':').ok_or_else(bad)?;
        let (p, m) = head.split_once('^').ok_or_else(bad)?;
        let p: u32 = p.trim().parse().map_err(|_| bad())?;
        let m: u32 = m.trim().parse().map_err(|_| bad())?;
        if (FieldId { p, m }) != self.id() {
            return Err(Error::FieldMismatch {
                left: FieldId { p, m }.to_string(),
                right: self.id().to_string(),
            });
        }
        let body = body
            .trim()
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(bad)?;
        let coeffs = if body.trim().is_empty() {
            vec![]
        } else {
            body.split(',')
                .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        };
        self.elem_from_coeffs(&coeffs)
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p,
            m: self.m,
            modulus: self.modulus.clone(),
        }
    }
}

/// Serialized form of a field: `{p, m, modulus}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDescriptor {
    pub p: u32,
    pub m: u32,
    pub modulus: Vec<u32>,
}

impl FieldDescriptor {
    /// Rebuilds the field and checks that the recorded modulus is the canonical one.
    pub fn build(&self) -> Result<Arc<FieldCtx>> {
        let ctx = build_field(self.p, self.m)?;
        if ctx.modulus() != self.modulus.as_slice() {
            return Err(Error::Parse(format!(
                "modulus {:?} is not the canonical modulus {:?} of {}",
                self.modulus,
                ctx.modulus(),
                ctx.id()
            )));
        }
        Ok(ctx)
    }
}

/// An element of a specific field.
#[derive(Clone)]
pub struct FieldElem {
    ctx: Arc<FieldCtx>,
    raw: u32,
}

impl FieldElem {
    fn from_raw(ctx: &Arc<FieldCtx>, raw: u32) -> Self {
        FieldElem {
            ctx: Arc::clone(ctx),
            raw,
        }
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn field(&self) -> FieldId {
        self.ctx.id()
    }

    pub fn raw(&self) -> u32 {
        self.raw
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.ctx.coeffs(self.raw)
    }

    pub fn is_zero(&self) -> bool {
        self.raw == 0
    }

    pub fn is_one(&self) -> bool {
        self.raw == 1
    }

    fn check(&self, other: &FieldElem) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch {
                left: self.field().to_string(),
                right: other.field().to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        Ok(FieldElem::from_raw(&self.ctx, self.ctx.add(self.raw, other.raw)))
    }

    pub fn sub(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        Ok(FieldElem::from_raw(&self.ctx, self.ctx.sub(self.raw, other.raw)))
    }

    pub fn mul(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        Ok(FieldElem::from_raw(&self.ctx, self.ctx.mul(self.raw, other.raw)))
    }

    pub fn neg(&self) -> FieldElem {
        FieldElem::from_raw(&self.ctx, self.ctx.neg(self.raw))
    }

    pub fn inv(&self) -> Result<FieldElem> {
        let inv = self.ctx.inv(self.raw).ok_or(Error::ZeroInverse)?;
        Ok(FieldElem::from_raw(&self.ctx, inv))
    }

    pub fn pow(&self, e: i64) -> Result<FieldElem> {
        if e < 0 && self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(FieldElem::from_raw(&self.ctx, self.ctx.pow(self.raw, e)))
    }

    /// Multiplicative order.
    pub fn order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroOrder);
        }
        Ok(self.ctx.order_of_raw(self.raw))
    }
}

/// Least `t >= 1` with `a^t = 1`.
pub fn element_order(a: &FieldElem) -> Result<u64> {
    a.order()
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.field() == other.field() && self.raw == other.raw
    }
}

impl Eq for FieldElem {}

impl std::hash::Hash for FieldElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field().hash(state);
        self.raw.hash(state);
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ctx.format_raw(self.raw))
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for FieldElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Field embedding `F_{p^e} -> F_{p^{et}}`, fixed by the image of the canonical primitive
/// element of the source.
#[derive(Clone)]
pub struct Embedding {
    from: Arc<FieldCtx>,
    to: Arc<FieldCtx>,
    generator_image: u32,
    /// `None` for the identity map.
    forward: Option<Vec<u32>>,
    backward: Option<HashMap<u32, u32>>,
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Embedding({} -> {}, w -> {})",
            self.from.id(),
            self.to.id(),
            self.to.format_raw(self.generator_image)
        )
    }
}

impl Embedding {
    /// The identity embedding of a field into itself.
    pub fn identity(ctx: &Arc<FieldCtx>) -> Embedding {
        Embedding {
            from: Arc::clone(ctx),
            to: Arc::clone(ctx),
            generator_image: ctx.primitive_raw(),
            forward: None,
            backward: None,
        }
    }

    /// Embeds `from` into `to`, sending the canonical primitive of `from` to the first root
    /// (in `to`'s enumeration) of its minimal polynomial over `Z_p`. Equal fields get the
    /// identity map.
    pub fn new(from: &Arc<FieldCtx>, to: &Arc<FieldCtx>) -> Result<Embedding> {
        if from.id() == to.id() {
            return Ok(Embedding::identity(from));
        }
        if from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0 {
            return Err(Error::NoEmbedding {
                from: from.id().to_string(),
                to: to.id().to_string(),
            });
        }
        let minpoly = minimal_polynomial_over_prime(from, from.primitive_raw());
        // prime-subfield coefficients have the same packed value in every extension
        let image = (1..to.order())
            .find(|&z| {
                minpoly
                    .iter()
                    .rev()
                    .fold(0u32, |acc, &c| to.add(to.mul(acc, z), c))
                    == 0
            })
            .expect("minimal polynomial splits in an extension of its degree");

        let group = from.order() as usize - 1;
        let mut forward = vec![0u32; from.order() as usize];
        let mut backward = HashMap::with_capacity(from.order() as usize);
        backward.insert(0, 0);
        let (mut src, mut dst) = (1u32, 1u32);
        for _ in 0..group {
            forward[src as usize] = dst;
            backward.insert(dst, src);
            src = from.mul(src, from.primitive_raw());
            dst = to.mul(dst, image);
        }
        Ok(Embedding {
            from: Arc::clone(from),
            to: Arc::clone(to),
            generator_image: image,
            forward: Some(forward),
            backward: Some(backward),
        })
    }

    pub fn source(&self) -> &Arc<FieldCtx> {
        &self.from
    }

    pub fn target(&self) -> &Arc<FieldCtx> {
        &self.to
    }

    pub fn generator_image(&self) -> FieldElem {
        self.to.elem(self.generator_image)
    }

    pub fn is_identity(&self) -> bool {
        self.forward.is_none()
    }

    #[inline]
    pub fn embed_raw(&self, a: u32) -> u32 {
        match &self.forward {
            None => a,
            Some(f) => f[a as usize],
        }
    }

    /// Inverse image of `b`, if `b` lies in the embedded subfield.
    #[inline]
    pub fn preimage_raw(&self, b: u32) -> Option<u32> {
        match &self.backward {
            None => Some(b),
            Some(map) => map.get(&b).copied(),
        }
    }

    pub fn embed(&self, a: &FieldElem) -> Result<FieldElem> {
        if a.field() != self.from.id() {
            return Err(Error::FieldMismatch {
                left: a.field().to_string(),
                right: self.from.id().to_string(),
            });
        }
        Ok(self.to.elem(self.embed_raw(a.raw())))
    }

    pub fn preimage(&self, b: &FieldElem) -> Result<Option<FieldElem>> {
        if b.field() != self.to.id() {
            return Err(Error::FieldMismatch {
                left: b.field().to_string(),
                right: self.to.id().to_string(),
            });
        }
        Ok(self.preimage_raw(b.raw()).map(|r| self.from.elem(r)))
    }
}

/// Coefficients (low degree first, as prime-field values) of the minimal polynomial of `a`
/// over `Z_p`: the product over the Frobenius orbit of `a`.
pub fn minimal_polynomial_over_prime(ctx: &FieldCtx, a: u32) -> Vec<u32> {
    let mut orbit = vec![a];
    let mut z = ctx.pow_unsigned(a, ctx.characteristic() as u64);
    while z != a {
        orbit.push(z);
        z = ctx.pow_unsigned(z, ctx.characteristic() as u64);
    }
    let mut coeffs = vec![1u32];
    for root in orbit {
        let neg_root = ctx.neg(root);
        let mut next = vec![0u32; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] = ctx.add(next[i + 1], c);
            next[i] = ctx.add(next[i], ctx.mul(c, neg_root));
        }
        coeffs = next;
    }
    debug_assert!(coeffs.iter().all(|&c| ctx.is_prime_subfield(c)));
    coeffs
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits a prime power into `(p, e)`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    Some((p as u32, e))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_order(ctx: &FieldCtx, a: u32) -> u64 {
        let mut acc = a;
        let mut t = 1;
        while acc != 1 {
            acc = ctx.mul_schoolbook(acc, a);
            t += 1;
        }
        t
    }

    #[test]
    fn prime_field_primitive_elements() {
        let f5 = build_field(5, 1).unwrap();
        assert_eq!(f5.primitive_raw(), 2);
        assert_eq!(naive_order(&f5, 2), 4);
        assert_eq!(naive_order(&f5, 1), 1);
        let f2 = build_field(2, 1).unwrap();
        assert_eq!(f2.primitive_raw(), 1);
    }

    #[test]
    fn f8_modulus_is_first_irreducible_cubic() {
        // monic cubics over Z_2 in packed order; a cubic is irreducible iff it has no root
        let f8 = build_field(2, 3).unwrap();
        let first = (0u32..8)
            .map(|c| vec![c & 1, (c >> 1) & 1, (c >> 2) & 1, 1])
            .find(|f| {
                (0..2u32).all(|x| f.iter().rev().fold(0, |acc, &c| (acc * x + c) % 2) != 0)
            })
            .unwrap();
        assert_eq!(f8.modulus(), first.as_slice());
        assert_eq!(f8.modulus(), &[1, 1, 0, 1]);
        assert_eq!(f8.primitive().order().unwrap(), 7);
    }

    #[test]
    fn inverse_and_powers_in_f5() {
        let f5 = build_field(5, 1).unwrap();
        let two = f5.elem(2);
        assert_eq!(two.inv().unwrap(), f5.elem(3));
        assert_eq!(two.pow(-1).unwrap(), f5.elem(3));
        assert_eq!(two.mul(&f5.zero()).unwrap(), f5.zero());
        assert_eq!(f5.elem(4).order().unwrap(), 2);
        assert_eq!(two.order().unwrap(), 4);
        assert_eq!(f5.zero().inv(), Err(Error::ZeroInverse));
        assert_eq!(f5.zero().order(), Err(Error::ZeroOrder));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(build_field(6, 1).unwrap_err(), Error::NotPrime(6));
        assert_eq!(build_field(5, 0).unwrap_err(), Error::ZeroDegree);
        assert!(matches!(
            build_field(2, 21),
            Err(Error::FieldTooLarge { .. })
        ));
        assert!(build_field_bounded(2, 4, 8).is_err());
    }

    #[test]
    fn context_mismatch_is_rejected() {
        let f5 = build_field(5, 1).unwrap();
        let f7 = build_field(7, 1).unwrap();
        assert!(matches!(
            f5.one().add(&f7.one()),
            Err(Error::FieldMismatch { .. })
        ));
        // independently built copies of the same field are the same field
        let again = build_field(5, 1).unwrap();
        assert_eq!(f5.elem(3).mul(&again.elem(2)).unwrap(), f5.one());
    }

    #[test]
    fn exhaustive_axioms_small_fields() {
        for &(p, m) in &[(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (3, 3)] {
            let f = build_field(p, m).unwrap();
            let q = f.order();
            for a in 0..q {
                assert_eq!(f.pow_unsigned(a, q as u64), a, "Frobenius fixed point");
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul_schoolbook(a, b), "tables agree");
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(a, b), f.add(b, a));
                }
            }
            // sampled triples
            for a in (0..q).step_by(3) {
                for b in (0..q).step_by(2) {
                    for c in 0..q.min(9) {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    }
                }
            }
            assert_eq!(f.primitive().order().unwrap(), q as u64 - 1);
        }
    }

    #[test]
    fn large_field_without_tables() {
        let f = build_field(2, 17).unwrap();
        assert!(f.tables.is_none());
        let w = f.primitive();
        assert_eq!(w.order().unwrap(), (1 << 17) - 1);
        let a = f.elem(12345);
        assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), f.one());
    }

    #[test]
    fn element_string_format() {
        let f8 = build_field(2, 3).unwrap();
        let a = f8.elem(5);
        assert_eq!(a.to_string(), "2^3:[1,0,1]");
        assert_eq!(f8.parse_elem("2^3:[1,0,1]").unwrap(), a);
        assert_eq!(f8.parse_elem("2^3:[1]").unwrap(), f8.one());
        assert!(f8.parse_elem("2^2:[1,0]").is_err());
        assert!(f8.parse_elem("2^3:[2,0,0]").is_err());
        assert!(f8.parse_elem("garbage").is_err());
        let d = f8.descriptor();
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"p":2,"m":3,"modulus":[1,1,0,1]}"#
        );
        assert_eq!(d.build().unwrap().id(), f8.id());
    }

    #[test]
    fn embedding_f5_into_f25() {
        let f5 = build_field(5, 1).unwrap();
        let f25 = build_field(5, 2).unwrap();
        let e = Embedding::new(&f5, &f25).unwrap();
        assert_eq!(e.embed(&f5.one()).unwrap(), f25.one());
        assert_eq!(e.embed(&f5.zero()).unwrap(), f25.zero());
        let image = e.embed(&f5.primitive()).unwrap();
        assert_eq!(image.order().unwrap(), 4);
        assert!(e.embed(&f25.one()).is_err());
    }

    #[test]
    fn embeddings_are_homomorphisms() {
        for &(p, e, t) in &[(2, 1, 3), (2, 2, 2), (2, 2, 3), (3, 1, 2), (3, 2, 2), (5, 1, 2), (2, 3, 2), (7, 1, 2)] {
            let small = build_field(p, e).unwrap();
            let big = build_field(p, e * t).unwrap();
            let emb = Embedding::new(&small, &big).unwrap();
            let q = small.order();
            let w = emb.generator_image().raw();
            let minpoly = minimal_polynomial_over_prime(&small, small.primitive_raw());
            let eval = |z: u32| minpoly.iter().rev().fold(0u32, |acc, &c| big.add(big.mul(acc, z), c));
            assert_eq!(eval(w), 0);
            assert!((1..w).all(|z| eval(z) != 0), "first root in enumeration");
            let mut seen = std::collections::HashSet::new();
            for a in 0..q {
                assert!(seen.insert(emb.embed_raw(a)), "injective");
                assert_eq!(emb.preimage_raw(emb.embed_raw(a)), Some(a));
                for b in 0..q {
                    assert_eq!(emb.embed_raw(small.mul(a, b)), big.mul(emb.embed_raw(a), emb.embed_raw(b)));
                    assert_eq!(emb.embed_raw(small.add(a, b)), big.add(emb.embed_raw(a), emb.embed_raw(b)));
                }
            }
            assert_eq!(emb.embed_raw(1), 1);
        }
    }

    #[test]
    fn number_theory_helpers() {
        assert_eq!(prime_factors(48), vec![2, 3]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(12), None);
        assert_eq!(gcd(12, 18), 6);
        assert!(is_prime(29) && !is_prime(1) && !is_prime(49));
    }
}
