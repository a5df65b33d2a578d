//! Subsets of `Z_n`: sumsets, arithmetic progressions, Cauchy–Davenport and Vosper.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{gcd, is_prime};

/// A subset of `Z_n`, members sorted and distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawZnSet")]
pub struct ZnSet {
    n: usize,
    members: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawZnSet {
    n: usize,
    members: Vec<i64>,
}

impl TryFrom<RawZnSet> for ZnSet {
    type Error = Error;

    fn try_from(raw: RawZnSet) -> Result<ZnSet> {
        if raw.n == 0 {
            return Err(Error::Parse("Z_0 is not a valid group".into()));
        }
        Ok(ZnSet::new(raw.n, raw.members))
    }
}

impl fmt::Display for ZnSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.members.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", m.join(","))
    }
}

impl ZnSet {
    /// Builds a set from arbitrary integer representatives, reduced mod `n`.
    pub fn new(n: usize, members: impl IntoIterator<Item = i64>) -> ZnSet {
        assert!(n > 0, "Z_0 is not a valid group");
        let mut v: Vec<usize> = members
            .into_iter()
            .map(|m| m.rem_euclid(n as i64) as usize)
            .collect();
        v.sort_unstable();
        v.dedup();
        ZnSet { n, members: v }
    }

    pub fn from_mask(n: usize, mask: u64) -> ZnSet {
        let members = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        ZnSet { n, members }
    }

    pub fn mask(&self) -> u64 {
        assert!(self.n <= 64);
        self.members.iter().fold(0, |acc, &i| acc | 1 << i)
    }

    pub fn empty(n: usize) -> ZnSet {
        ZnSet::new(n, [])
    }

    pub fn full(n: usize) -> ZnSet {
        ZnSet {
            n,
            members: (0..n).collect(),
        }
    }

    /// `{start, start + 1, ..., start + len - 1}` mod `n`.
    pub fn interval(n: usize, start: i64, len: usize) -> ZnSet {
        ZnSet::new(n, (0..len as i64).map(|i| start + i))
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.n
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&(x % self.n)).is_ok()
    }

    pub fn complement(&self) -> ZnSet {
        let members = (0..self.n).filter(|&i| !self.contains(i)).collect();
        ZnSet { n: self.n, members }
    }

    pub fn neg(&self) -> ZnSet {
        ZnSet::new(self.n, self.members.iter().map(|&m| -(m as i64)))
    }

    /// `S + t`.
    pub fn translate(&self, t: i64) -> ZnSet {
        ZnSet::new(self.n, self.members.iter().map(|&m| m as i64 + t))
    }

    /// `{c * s : s in S}`.
    pub fn dilate(&self, c: i64) -> ZnSet {
        ZnSet::new(self.n, self.members.iter().map(|&m| m as i64 * c))
    }

    fn same_group(&self, other: &ZnSet) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ModulusMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// `A + B` by pairwise enumeration.
    pub fn sumset(&self, other: &ZnSet) -> Result<ZnSet> {
        self.same_group(other)?;
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut hit = vec![false; self.n];
        for &a in &self.members {
            for &b in &other.members {
                hit[(a + b) % self.n] = true;
            }
        }
        let members = (0..self.n).filter(|&i| hit[i]).collect();
        Ok(ZnSet { n: self.n, members })
    }

    /// Tests whether `self - offset = {0, g, 2g, ..., (|self|-1) g}`.
    pub fn is_ap_with(&self, difference: usize, offset: usize) -> bool {
        if self.is_empty() {
            return false;
        }
        let n = self.n;
        let mut seen = vec![false; n];
        let mut x = offset % n;
        for _ in 0..self.len() {
            if seen[x] || !self.contains(x) {
                return false;
            }
            seen[x] = true;
            x = (x + difference) % n;
        }
        true
    }

    /// First arithmetic-progression witness, scanning differences `1, 2, ..., n-1` (only
    /// units when `require_invertible`) and offsets in increasing order.
    pub fn detect_ap(&self, require_invertible: bool) -> Result<Option<ApWitness>> {
        if self.is_empty() {
            return Err(Error::EmptySet);
        }
        let n = self.n;
        if n == 1 {
            // Z_1 has no nonzero difference; the single element is a trivial progression
            return Ok(Some(ApWitness {
                difference: 1,
                offset: 0,
            }));
        }
        for g in 1..n {
            if require_invertible && gcd(g as u64, n as u64) != 1 {
                continue;
            }
            for &b in &self.members {
                if self.is_ap_with(g, b) {
                    return Ok(Some(ApWitness {
                        difference: g,
                        offset: b,
                    }));
                }
            }
        }
        Ok(None)
    }

    /// Checks `|A + B| >= min(p, |A| + |B| - 1)` in `Z_p`.
    pub fn cauchy_davenport(&self, other: &ZnSet) -> Result<CauchyDavenport> {
        self.same_group(other)?;
        if !is_prime(self.n as u64) {
            return Err(Error::CompositeModulus(self.n));
        }
        let actual = self.sumset(other)?.len();
        let bound = self.n.min(self.len() + other.len() - 1);
        Ok(CauchyDavenport {
            bound,
            actual,
            critical: actual == bound,
        })
    }

    /// Every case of Vosper's characterization that the pair satisfies, in the listed
    /// order, regardless of criticality.
    pub fn vosper_cases(&self, other: &ZnSet) -> Result<Vec<VosperCase>> {
        self.same_group(other)?;
        let p = self.n;
        if !is_prime(p as u64) {
            return Err(Error::CompositeModulus(p));
        }
        let sum = self.sumset(other)?;
        let total = self.len() + other.len();
        let mut cases = Vec::new();
        if total > p && sum.is_full() {
            cases.push(VosperCase::Overfull);
        }
        if total == p && sum.len() == p - 1 {
            cases.push(VosperCase::ComplementPair);
        }
        if self.len().min(other.len()) == 1 {
            cases.push(VosperCase::Singleton);
        }
        if let Some(g) = self.common_difference(other) {
            cases.push(VosperCase::CommonDifferenceAp { difference: g });
        }
        Ok(cases)
    }

    fn common_difference(&self, other: &ZnSet) -> Option<usize> {
        (1..self.n).find(|&g| {
            self.members.iter().any(|&b| self.is_ap_with(g, b))
                && other.members.iter().any(|&b| other.is_ap_with(g, b))
        })
    }

    /// Classifies a pair in `Z_p` by the first matching case of Vosper's theorem, or
    /// `NotCritical`.
    pub fn vosper_classify(&self, other: &ZnSet) -> Result<VosperCase> {
        let cd = self.cauchy_davenport(other)?;
        if !cd.critical {
            return Ok(VosperCase::NotCritical);
        }
        let cases = self.vosper_cases(other)?;
        cases.into_iter().next().ok_or_else(|| {
            Error::Inconsistent(format!(
                "critical pair {self} + {other} in Z_{} matches no Vosper case",
                self.n
            ))
        })
    }
}

/// `D - offset = {i * difference : 0 <= i < |D|}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ApWitness {
    pub difference: usize,
    pub offset: usize,
}

impl fmt::Display for ApWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "difference {} from {}", self.difference, self.offset)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CauchyDavenport {
    pub bound: usize,
    pub actual: usize,
    pub critical: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VosperCase {
    /// `|A| + |B| > p` and `A + B = Z_p`.
    Overfull,
    /// `|A| + |B| = p` and `|A + B| = p - 1`.
    ComplementPair,
    /// `min(|A|, |B|) = 1`.
    Singleton,
    /// Both sets are progressions with this difference.
    CommonDifferenceAp { difference: usize },
    NotCritical,
}

/// All nonempty subsets of `Z_n`, by bitmask.
pub fn nonempty_subsets(n: usize) -> impl Iterator<Item = ZnSet> {
    assert!(n < 64);
    (1u64..1 << n).map(move |mask| ZnSet::from_mask(n, mask))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, m: &[i64]) -> ZnSet {
        ZnSet::new(n, m.iter().copied())
    }

    #[test]
    fn sumset_examples() {
        assert_eq!(s(7, &[3, 5, 6]).sumset(&s(7, &[3, 5, 6])).unwrap(), s(7, &[1, 2, 3, 4, 5, 6]));
        let b = s(9, &[2, 4, 7]);
        assert_eq!(s(9, &[0]).sumset(&b).unwrap(), b);
        assert_eq!(
            s(10, &[4, 5, 6, 7]).sumset(&s(10, &[4, 5, 6, 7])).unwrap(),
            s(10, &[8, 9, 0, 1, 2, 3, 4])
        );
        assert_eq!(s(5, &[1]).sumset(&s(6, &[1])), Err(Error::ModulusMismatch(5, 6)));
        assert_eq!(s(5, &[1]).sumset(&ZnSet::empty(5)), Err(Error::EmptySet));
    }

    #[test]
    fn normalization_and_involutions() {
        let a = s(6, &[-1, 0, 1, 7]);
        assert_eq!(a.members(), &[0, 1, 5]);
        assert_eq!(a.complement().complement(), a);
        assert_eq!(a.neg().neg(), a);
        assert_eq!(a.neg().members(), &[0, 1, 5]);
        assert_eq!(ZnSet::interval(10, -2, 6), s(10, &[8, 9, 0, 1, 2, 3]));
    }

    #[test]
    fn detect_ap_examples() {
        assert_eq!(
            s(10, &[8, 9, 0, 1, 2, 3]).detect_ap(true).unwrap(),
            Some(ApWitness { difference: 1, offset: 8 })
        );
        assert_eq!(s(7, &[0, 1, 2, 4]).detect_ap(false).unwrap(), None);
        assert_eq!(s(7, &[0, 1, 2, 4]).detect_ap(true).unwrap(), None);
        assert_eq!(s(11, &[5]).detect_ap(true).unwrap(), Some(ApWitness { difference: 1, offset: 5 }));
        assert_eq!(ZnSet::full(6).detect_ap(true).unwrap(), Some(ApWitness { difference: 1, offset: 0 }));
        assert_eq!(ZnSet::empty(6).detect_ap(true), Err(Error::EmptySet));
        // {0, 2, 4} in Z_6 has only the non-invertible difference 2 (or 4)
        assert_eq!(s(6, &[0, 2, 4]).detect_ap(true).unwrap(), None);
        assert_eq!(s(6, &[0, 2, 4]).detect_ap(false).unwrap(), Some(ApWitness { difference: 2, offset: 0 }));
        // size n - 1 sets are progressions
        assert!(s(8, &[0, 1, 2, 3, 4, 5, 7]).detect_ap(true).unwrap().is_some());
    }

    #[test]
    fn detect_ap_agrees_with_brute_force() {
        for n in 1..=9usize {
            for mask in 1u64..1 << n {
                let d = ZnSet::from_mask(n, mask);
                let brute = (1..n.max(2)).any(|g| {
                    (0..n).any(|b| {
                        let prog = ZnSet::new(n, (0..d.len() as i64).map(|i| b as i64 + i * g as i64));
                        prog == d && (0..d.len()).map(|i| (b + i * g) % n).collect::<std::collections::HashSet<_>>().len() == d.len()
                    })
                });
                assert_eq!(d.detect_ap(false).unwrap().is_some(), brute || n == 1, "{d} in Z_{n}");
            }
        }
    }

    #[test]
    fn cauchy_davenport_examples() {
        let cd = s(7, &[0, 1, 2]).cauchy_davenport(&s(7, &[0, 1, 2])).unwrap();
        assert_eq!(cd, CauchyDavenport { bound: 5, actual: 5, critical: true });
        let cd = s(7, &[0, 2]).cauchy_davenport(&s(7, &[0, 1])).unwrap();
        assert_eq!(cd, CauchyDavenport { bound: 3, actual: 4, critical: false });
        let cd = ZnSet::full(5).cauchy_davenport(&ZnSet::full(5)).unwrap();
        assert_eq!(cd, CauchyDavenport { bound: 5, actual: 5, critical: true });
        assert_eq!(s(6, &[0]).cauchy_davenport(&s(6, &[1])), Err(Error::CompositeModulus(6)));
    }

    #[test]
    fn vosper_examples() {
        assert_eq!(
            s(7, &[0, 1, 2]).vosper_classify(&s(7, &[0, 1, 2])).unwrap(),
            VosperCase::CommonDifferenceAp { difference: 1 }
        );
        assert_eq!(s(7, &[0]).vosper_classify(&s(7, &[1, 3, 6])).unwrap(), VosperCase::Singleton);
        assert_eq!(ZnSet::full(5).vosper_classify(&ZnSet::full(5)).unwrap(), VosperCase::Overfull);
        assert_eq!(s(7, &[0, 2]).vosper_classify(&s(7, &[0, 1])).unwrap(), VosperCase::NotCritical);
        assert_eq!(s(9, &[0]).vosper_classify(&s(9, &[0])), Err(Error::CompositeModulus(9)));
        // |A| + |B| = p with |A + B| = p - 1: A = {0, 1, 3}, B = -A^c shifted
        let a = s(7, &[0, 1, 3]);
        let b = a.complement().neg().translate(-1);
        assert_eq!(a.sumset(&b).unwrap().len(), 6);
        assert!(a.vosper_cases(&b).unwrap().contains(&VosperCase::ComplementPair));
    }

    #[test]
    fn serde_format() {
        let a = s(10, &[8, 9, 0]);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"n":10,"members":[0,8,9]}"#);
        let back: ZnSet = serde_json::from_str(r#"{"n":10,"members":[-1,0,18]}"#).unwrap();
        assert_eq!(back, s(10, &[9, 0, 8]));
        assert!(serde_json::from_str::<ZnSet>(r#"{"n":10,"members":[],"x":1}"#).is_err());
    }
}
