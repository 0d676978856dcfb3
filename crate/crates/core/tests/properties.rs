//! Randomized properties of the core library, checked against
//! `galcong-testkit` where an independent answer exists.

use std::collections::BTreeMap;
use std::sync::Arc;

use galcong_core::algebra::fp::FpPoly;
use galcong_core::bounds::{make_bound, BoundKind, BoundParams};
use galcong_core::engine::{
    reduce_charpoly_mod_ell, reduce_charpoly_mod_lambda, LocalDescriptorU, LocalDescriptorV,
    RepDescriptor, SemistableFlag,
};
use galcong_core::modforms::{
    cusp_dimension, eigenforms, hecke_matrix, miller_basis, Eigenform, Nebentypus,
};
use galcong_core::weil::is_weil_integer_poly;
use galcong_core::{
    parse_descriptor, parse_eigenform, primes_above, serialize_descriptor, serialize_eigenform,
    CharPolyOverE, FieldElement, IntPoly, NumberField, TameCharacter,
};
use galcong_testkit as tk;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;

fn field(g: &[i64]) -> Arc<NumberField> {
    NumberField::new(IntPoly::from_i64s(g)).unwrap()
}

fn fields() -> Vec<Arc<NumberField>> {
    vec![
        NumberField::rationals(),
        field(&[1, 0, 1]),
        field(&[-2, 0, 1]),
    ]
}

fn elem(f: &Arc<NumberField>, coords: &[(i64, i64)]) -> FieldElement {
    let c = coords[..f.degree()]
        .iter()
        .map(|&(n, d)| BigRational::new(n.into(), d.into()))
        .collect();
    FieldElement::new(f, c).unwrap()
}

fn monic(f: &Arc<NumberField>, coeffs: &[[i64; 2]]) -> Vec<FieldElement> {
    let mut out: Vec<FieldElement> = coeffs
        .iter()
        .map(|c| elem(f, &[(c[0], 1), (c[1], 1)]))
        .collect();
    out.push(FieldElement::one(f));
    out
}

fn poly_mul(a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let f = a[0].field().clone();
    let mut out = vec![FieldElement::zero(&f); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y).unwrap()).unwrap();
        }
    }
    out
}

prop_compose! {
    fn descriptor()(
        fi in 0usize..3,
        n in 1usize..=3,
        coords in prop::collection::vec((-50i64..50, 1i64..4), 6),
        q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 9]),
        ell in prop::sample::select(vec![11u128, 13, 691, 16777259]),
        b in 0u64..30,
        e_u in 1u64..4,
        e_cap in 1u64..4,
        mut ht in prop::collection::vec(0u64..20, 0..=6),
        tame in prop::collection::vec((1u32..=2, 0u64..5000), 0..=3),
        flag in 0u8..4,
        ss_v in any::<bool>(),
    ) -> RepDescriptor {
        let f = fields().swap_remove(fi);
        ht.truncate(n * f.degree());
        let mut cs: Vec<FieldElement> = (0..n)
            .map(|i| elem(&f, &[coords[2 * i], coords[2 * i + 1]]))
            .collect();
        cs.push(FieldElement::one(&f));
        let at_v = LocalDescriptorV {
            q,
            charpoly: CharPolyOverE::new(&f, cs, q).unwrap(),
            semistable_at_v: ss_v,
        };
        let at_u = LocalDescriptorU {
            ell,
            e_u,
            e_cap,
            ht,
            tame_chars: tame.iter().map(|&(h, d)| TameCharacter::from_u64(ell, h, d).unwrap()).collect(),
            flag: match flag {
                0 => SemistableFlag::Crystalline,
                1 => SemistableFlag::Semistable,
                _ => SemistableFlag::AfterExtension(flag as u64),
            },
        };
        RepDescriptor::new(n, &f, b, at_v, at_u).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn descriptor_files_round_trip(d in descriptor()) {
        let text = serialize_descriptor(&d);
        let back = parse_descriptor(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(serialize_descriptor(&back), text);
    }

    #[test]
    fn eigenform_files_round_trip(
        gi in 0usize..2,
        k in 2u64..30,
        level in prop::sample::select(vec![1u64, 5, 11, 23]),
        values in prop::collection::vec((-500i64..500, -500i64..500, 1i64..5), 10),
    ) {
        let f = [NumberField::rationals(), field(&[1, 0, 1])][gi].clone();
        let ap: BTreeMap<u64, FieldElement> = tk::arith::primes_up_to(29)
            .into_iter()
            .zip(&values)
            .map(|(p, &(x, y, d))| {
                // only a_p at primes dividing the level may be non-integral
                let d = if level % p == 0 { d } else { 1 };
                (p, elem(&f, &[(x, d), (y, d)]))
            })
            .collect();
        let form = Eigenform::ingested(k, level, Nebentypus::trivial(&f, level), &f, ap).unwrap();
        let text = serialize_eigenform(&form);
        let back = parse_eigenform(&text).unwrap();
        prop_assert_eq!(&back, &form);
        prop_assert_eq!(serialize_eigenform(&back), text);
    }

    #[test]
    fn tame_digits_recompose(
        ell in prop::sample::select(tk::arith::primes_up_to(50)),
        h in 1u32..=4,
        seed in any::<u64>(),
        a in 1u64..40,
        b in 1u64..40,
    ) {
        let order = (ell as u128).pow(h) - 1;
        let d = seed as u128 % order;
        let chi = TameCharacter::new(ell as u128, h, BigUint::from(d)).unwrap();
        let digits = chi.digits();
        prop_assert_eq!(digits.len(), h as usize);
        prop_assert!(digits.iter().all(|&t| t < ell as u128));
        let back = digits.iter().rev().fold(0u128, |acc, &t| acc * ell as u128 + t);
        prop_assert_eq!(back, d);
        prop_assert_eq!(chi.restrict_ramified(1), chi.clone());
        prop_assert_eq!(chi.restrict_ramified(a).restrict_ramified(b), chi.restrict_ramified(a * b));
        let ti = chi.ti_multiset(a).unwrap();
        let want = BigRational::new(digits.iter().sum::<u128>().into(), a.into());
        prop_assert_eq!(ti.sigma(), want);
    }

    #[test]
    fn reduction_is_multiplicative(
        which in 0usize..3,
        p in prop::collection::vec([-30i64..30, -30i64..30], 1..=3),
        r in prop::collection::vec([-30i64..30, -30i64..30], 1..=2),
    ) {
        // Q(i) at an inert, a split and a ramified prime
        let f = field(&[1, 0, 1]);
        let ell = [3u128, 5, 2][which];
        let lambda = primes_above(&f, ell).unwrap().remove(0);
        let reduce = |c: Vec<FieldElement>| -> FpPoly {
            let cp = CharPolyOverE::new(&f, c, 7).unwrap();
            reduce_charpoly_mod_ell(&reduce_charpoly_mod_lambda(&cp, &lambda).unwrap(), &lambda)
        };
        let (pp, rr) = (monic(&f, &p), monic(&f, &r));
        let out_p = reduce(pp.clone());
        prop_assert_eq!(out_p.deg(), p.len() * lambda.local_degree());
        prop_assert_eq!(reduce(poly_mul(&pp, &rr)), out_p.mul(&reduce(rr)));
    }

    #[test]
    fn bound_floor_is_sharp(
        n in 1u64..5,
        b in 0u64..12,
        e in 1u64..4,
        q in 2u64..10,
        w in 0u64..12,
        ed in 1u64..5,
        f in 1u64..4,
    ) {
        let params = [
            (BoundKind::CTilde, BoundParams::ctilde(n, b, e, q)),
            (BoundKind::CMain, BoundParams::cmain(ed, f, n, b, e, q)),
            (BoundKind::C1, BoundParams::c1(ed, f, n, w, q)),
            (BoundKind::C1Tilde, BoundParams::c1tilde(n, w, q)),
        ];
        for (kind, p) in params {
            let bound = make_bound(kind, &p).unwrap();
            let floor = bound.threshold().floor();
            prop_assert!(!bound.exceeded_by(&floor));
            prop_assert!(bound.exceeded_by(&(floor + 1u32)));
        }
    }

    #[test]
    fn products_of_weil_quadratics(
        q in prop::sample::select(vec![2u64, 3, 4, 5, 7]),
        w in 0u32..6,
        s in -1000i64..1000,
        t in -1000i64..1000,
    ) {
        let qw = (q as i64).pow(w);
        // |a| ≤ 2·sqrt(q^w) keeps both roots on the circle
        let reach = (4 * qw).isqrt();
        let (a, c) = (s.rem_euclid(2 * reach + 1) - reach, t.rem_euclid(2 * reach + 1) - reach);
        let p1 = IntPoly::from_i64s(&[qw, -a, 1]);
        let p2 = IntPoly::from_i64s(&[qw, -c, 1]);
        let prod = IntPoly::new(
            (0..5)
                .map(|i| (0..=i).map(|j| p1.coeff(j) * p2.coeff(i - j)).sum::<BigInt>())
                .collect(),
        );
        prop_assert!(is_weil_integer_poly(&prod, q, w).unwrap());
        let off = IntPoly::from_i64s(&[qw + 1, -a, 1]);
        prop_assert!(!is_weil_integer_poly(&off, q, w).unwrap());
    }
}

#[test]
fn cusp_dimensions_match_the_formula() {
    for k in (0..=200).step_by(2) {
        assert_eq!(cusp_dimension(k), tk::cusp_dim(k), "k = {k}");
    }
    for k in [12u64, 24, 36] {
        assert_eq!(miller_basis(k, 40).unwrap().len(), tk::cusp_dim(k as i64));
    }
}

#[test]
fn hecke_operators_commute() {
    for k in [24u64, 36, 48] {
        let basis = miller_basis(k, 40).unwrap();
        let ts: Vec<_> = [2u64, 3, 5, 7]
            .iter()
            .map(|&p| hecke_matrix(k, p, &basis).unwrap())
            .collect();
        for a in &ts {
            for b in &ts {
                assert_eq!(a.mul(b), b.mul(a), "k = {k}");
            }
        }
    }
}

#[test]
fn eigenform_coefficients_are_multiplicative() {
    for k in [12u64, 24, 30] {
        for f in eigenforms(k, 60).unwrap() {
            let a = |n: usize| f.coeff(n).unwrap().clone();
            for m in 2..=7usize {
                for n in 2..=60 / m {
                    if num_integer::gcd(m, n) == 1 {
                        assert_eq!(a(m).mul(&a(n)).unwrap(), a(m * n), "k = {k}, a_{m} a_{n}");
                    }
                }
            }
            for p in [2u64, 3, 5, 7] {
                let pk = FieldElement::from_int(
                    &f.field,
                    num_traits::pow(BigInt::from(p), k as usize - 1),
                );
                let want = a(p as usize).mul(&a(p as usize)).unwrap().sub(&pk).unwrap();
                assert_eq!(a((p * p) as usize), want, "k = {k}, a_{}", p * p);
            }
        }
    }
}

#[test]
fn delta_matches_the_product_expansion() {
    let tau = tk::series::tau(60);
    let f = &eigenforms(12, 60).unwrap()[0];
    for (n, t) in tau.iter().enumerate().skip(1) {
        assert_eq!(
            f.coeff(n).unwrap().as_rational().unwrap(),
            BigRational::from_integer(t.clone())
        );
    }
}
