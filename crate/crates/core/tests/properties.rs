use std::sync::Arc;

use proptest::prelude::*;

use constacyclic_grs::constacyclic::{dual_defining_set, frobenius_orbits, splitting_data, ConstaCode};
use constacyclic_grs::gf::{build_field, gcd, Embedding, FieldCtx};
use constacyclic_grs::poly::Poly;
use constacyclic_grs::zn::ZnSet;

const FIELDS: [(u32, u32); 8] = [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (7, 1), (13, 1)];

fn field(i: usize) -> Arc<FieldCtx> {
    let (p, e) = FIELDS[i % FIELDS.len()];
    build_field(p, e).unwrap()
}

fn raw_poly(f: &Arc<FieldCtx>, coeffs: &[u32]) -> Poly {
    Poly::from_raw(f, coeffs.iter().map(|c| c % f.order()).collect())
}

/// A Galois-stable defining set chosen by `mask` over the Frobenius orbits.
fn stable_set(sd: &constacyclic_grs::SplittingData, mask: u64) -> ZnSet {
    let orbits = frobenius_orbits(sd.n(), sd.q_field().order() as u64, sd.frobenius_shift());
    let members = (0..orbits.len())
        .filter(|&i| mask >> i & 1 == 1)
        .flat_map(|i| orbits[i].members().to_vec())
        .map(|m| m as i64);
    ZnSet::new(sd.n(), members)
}

proptest! {
    #[test]
    fn field_axioms(fi in 0usize..8, a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
        let f = field(fi);
        let (a, b, c) = (a % f.order(), b % f.order(), c % f.order());
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn divmod_round_trip(fi in 0usize..8, a in prop::collection::vec(0u32..1000, 0..12), b in prop::collection::vec(0u32..1000, 1..6)) {
        let f = field(fi);
        let a = raw_poly(&f, &a);
        let b = raw_poly(&f, &b);
        prop_assume!(!b.is_zero());
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(q.mul(&b).add(&r), a);
        if let Some(dr) = r.degree() {
            prop_assert!(dr < b.degree().unwrap());
        }
    }

    #[test]
    fn sumset_laws(n in 1usize..16, a in 1u64..u64::MAX, b in 1u64..u64::MAX, t in -20i64..20) {
        let a = ZnSet::from_mask(n, a & ((1 << n) - 1));
        let b = ZnSet::from_mask(n, b & ((1 << n) - 1));
        prop_assume!(!a.is_empty() && !b.is_empty());
        let ab = a.sumset(&b).unwrap();
        prop_assert_eq!(&ab, &b.sumset(&a).unwrap());
        prop_assert_eq!(a.translate(t).sumset(&b).unwrap(), ab.translate(t));
        prop_assert!(ab.len() >= a.len().max(b.len()));
        prop_assert_eq!(dual_defining_set(&dual_defining_set(&a)), a);
    }

    #[test]
    fn generator_divides_and_roots_match(fi in 0usize..8, n in 1usize..11, s in 0u64..64, mask in 0u64..1024) {
        let f = field(fi);
        let q = f.order() as u64;
        prop_assume!(gcd(n as u64, q) == 1);
        let lambda = f.primitive_power(s as i64);
        let sd = match splitting_data(&f, n, &lambda) {
            Ok(sd) if sd.big_field().order() <= 4096 => sd,
            _ => return Ok(()),
        };
        let set = stable_set(&sd, mask);
        let c = ConstaCode::from_split(&sd, &set).unwrap();
        let g = c.generator_poly();
        let h = c.check_poly();
        prop_assert_eq!(g.mul(&h), Poly::x_n_minus(&lambda, n));
        prop_assert!(g.is_monic());
        let roots: Vec<u32> = g.roots_in(sd.embedding()).unwrap().iter().map(|r| r.raw()).collect();
        let mut expected: Vec<u32> = set.members().iter().map(|&i| sd.root(i)).collect();
        expected.sort();
        prop_assert_eq!(roots, expected);
    }

    #[test]
    fn other_roots_translate_the_defining_set(fi in 0usize..8, n in 1usize..11, s in 0u64..64, mask in 0u64..1024, j in 0usize..10) {
        let f = field(fi);
        prop_assume!(gcd(n as u64, f.order() as u64) == 1);
        let sd = match splitting_data(&f, n, &f.primitive_power(s as i64)) {
            Ok(sd) if sd.big_field().order() <= 4096 => sd,
            _ => return Ok(()),
        };
        let set = stable_set(&sd, mask);
        let c = ConstaCode::from_split(&sd, &set).unwrap();
        let other = sd.with_beta(&sd.big_field().elem(sd.root(j))).unwrap();
        let shifted = ConstaCode::from_split(&other, &set.translate(-((j % n) as i64))).unwrap();
        prop_assert_eq!(c.code(), shifted.code());
    }

    #[test]
    fn dual_and_square_dimensions(fi in 0usize..8, n in 2usize..10, mask in 0u64..1024) {
        let f = field(fi);
        prop_assume!(gcd(n as u64, f.order() as u64) == 1);
        let sd = match splitting_data(&f, n, &f.one()) {
            Ok(sd) if sd.big_field().order() <= 4096 => sd,
            _ => return Ok(()),
        };
        let set = stable_set(&sd, mask);
        prop_assume!(!set.is_full());
        let c = ConstaCode::from_split(&sd, &set).unwrap();
        let comp = set.complement();
        prop_assert_eq!(c.code().square().dim(), comp.sumset(&comp).unwrap().len());
        prop_assert_eq!(c.code().dual().dual(), c.code().clone());
        prop_assert_eq!(c.dual_code().unwrap().dim(), set.len());
    }

    #[test]
    fn embedding_is_a_homomorphism(a in 0u32..625, b in 0u32..625) {
        let small = build_field(5, 2).unwrap();
        let big = build_field(5, 4).unwrap();
        let emb = Embedding::new(&small, &big).unwrap();
        let (a, b) = (a % 25, b % 25);
        prop_assert_eq!(emb.embed_raw(small.mul(a, b)), big.mul(emb.embed_raw(a), emb.embed_raw(b)));
        prop_assert_eq!(emb.embed_raw(small.add(a, b)), big.add(emb.embed_raw(a), emb.embed_raw(b)));
        prop_assert_eq!(emb.preimage_raw(emb.embed_raw(a)), Some(a));
    }
}
