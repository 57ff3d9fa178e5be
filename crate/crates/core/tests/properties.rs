//! Algebraic invariants over seeded random inputs. Every comparison is exact.

use gproj::embedding::{is_scalar_by_contraction, lift_map, vector_inner};
use gproj::inverse::{conjugate, inverse, is_blade, is_versor};
use gproj::projection::{ftopo_residual, ProjectionKind, ProjectorSpec};
use gproj::random::Sampler;
use gproj::{rational, BasisBlade, Multivector, Signature};
use proptest::prelude::*;

const SIGNATURES: [(usize, usize, usize); 6] = [
    (3, 0, 0),
    (2, 1, 0),
    (1, 1, 0),
    (4, 0, 0),
    (1, 0, 1),
    (0, 2, 1),
];

fn sig_strategy() -> impl Strategy<Value = Signature> {
    (0..SIGNATURES.len()).prop_map(|i| {
        let (p, q, r) = SIGNATURES[i];
        Signature::new(p, q, r).unwrap()
    })
}

fn nondegenerate_sig() -> impl Strategy<Value = Signature> {
    (0..4usize).prop_map(|i| {
        let (p, q, r) = SIGNATURES[i];
        Signature::new(p, q, r).unwrap()
    })
}

fn half() -> gproj::Rational {
    rational(1, 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn associativity(sig in sig_strategy(), seed: u64) {
        let mut s = Sampler::new(seed);
        let (x, y, z) = (s.multivector(sig, 3), s.multivector(sig, 3), s.multivector(sig, 3));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn involution_laws(sig in sig_strategy(), seed: u64) {
        let mut s = Sampler::new(seed);
        let (x, y) = (s.multivector(sig, 3), s.multivector(sig, 3));
        prop_assert_eq!((&x * &y).grade_involution(), &x.grade_involution() * &y.grade_involution());
        prop_assert_eq!((&x * &y).reverse(), &y.reverse() * &x.reverse());
        prop_assert_eq!(x.grade_involution().grade_involution(), x.clone());
        prop_assert_eq!(x.reverse().reverse(), x);
    }

    #[test]
    fn contraction_by_vector(sig in sig_strategy(), seed: u64) {
        let mut s = Sampler::new(seed);
        let x = s.vector(sig);
        let y = s.multivector(sig, 3);
        let alt = (&(&x * &y) - &(&y.grade_involution() * &x)).scale(&half());
        prop_assert_eq!(x.left_contraction(&y).unwrap(), alt);
    }

    #[test]
    fn grade_parts_partition(sig in sig_strategy(), seed: u64) {
        let x = Sampler::new(seed).multivector(sig, 3);
        let sum = (0..=sig.dim()).fold(Multivector::zero(sig), |acc, k| &acc + &x.grade_part(k));
        prop_assert_eq!(sum, x);
    }

    #[test]
    fn outer_product_is_grade_sum_of_product(sig in sig_strategy(), seed: u64) {
        let mut s = Sampler::new(seed);
        let (x, y) = (s.multivector(sig, 2), s.multivector(sig, 2));
        let mut expected = Multivector::zero(sig);
        for j in 0..=sig.dim() {
            for k in 0..=sig.dim() - j {
                expected = &expected + &(&x.grade_part(j) * &y.grade_part(k)).grade_part(j + k);
            }
        }
        prop_assert_eq!(&x ^ &y, expected);
    }

    #[test]
    fn inverse_is_two_sided(sig in sig_strategy(), seed: u64) {
        let x = Sampler::new(seed).multivector(sig, 2);
        if let Ok(y) = inverse(&x) {
            prop_assert_eq!(&x * &y, Multivector::one(sig));
            prop_assert_eq!(&y * &x, Multivector::one(sig));
        }
    }

    #[test]
    fn versors_and_their_multiples_classify(sig in sig_strategy(), seed: u64) {
        let mut s = Sampler::new(seed);
        let v = s.versor(sig, 4).unwrap().product();
        prop_assert!(is_versor(&v));
        prop_assert!(is_versor(&v.scale(&s.nonzero_integer(5))));
    }

    #[test]
    fn versor_conjugation_is_orthogonal(sig in nondegenerate_sig(), seed: u64) {
        let mut s = Sampler::new(seed);
        let w = s.versor(sig, 4).unwrap().product().scale(&s.nonzero_integer(4));
        let x = s.vector(sig);
        let fx = conjugate(&w, &inverse(&w).unwrap(), &x);
        prop_assert!(fx.is_vector());
        prop_assert_eq!(&fx * &fx, &x * &x);
    }

    #[test]
    fn ftopo_holds_for_both_kinds(sig in sig_strategy(), seed: u64) {
        let mut s = Sampler::new(seed);
        let x = s.multivector(sig, 3);
        let a = ProjectorSpec::inverse_kind(s.invertible(sig, 2).unwrap()).unwrap();
        let b = ProjectorSpec::inverse_kind(s.invertible(sig, 2).unwrap()).unwrap();
        prop_assert!(ftopo_residual(&a, &b, &x).unwrap().is_zero());
        let a = ProjectorSpec::reverse_kind(s.multivector(sig, 2));
        let b = ProjectorSpec::reverse_kind(s.multivector(sig, 2));
        prop_assert!(ftopo_residual(&a, &b, &x).unwrap().is_zero());
    }

    #[test]
    fn blade_projection_is_contraction_times_inverse(sig in sig_strategy(), seed: u64) {
        let mut s = Sampler::new(seed);
        let grade = s.below(sig.p() + sig.q() + 1);
        let a = s.blade(sig, grade).unwrap();
        let x = s.vector(sig);
        let p = ProjectorSpec::inverse_kind(a.clone()).unwrap();
        let expected = &x.left_contraction(&a).unwrap() * &inverse(&a).unwrap();
        prop_assert_eq!(p.project(&x).unwrap(), expected);
    }

    #[test]
    fn projection_is_linear(sig in sig_strategy(), seed: u64) {
        let mut s = Sampler::new(seed);
        let spec = ProjectorSpec::reverse_kind(s.multivector(sig, 2));
        let (x, y) = (s.multivector(sig, 3), s.multivector(sig, 3));
        let (alpha, beta) = (s.integer(4), s.integer(4));
        let combo = &x.scale(&alpha) + &y.scale(&beta);
        let lhs = spec.project(&combo).unwrap();
        let rhs = &spec.project(&x).unwrap().scale(&alpha) + &spec.project(&y).unwrap().scale(&beta);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_kind_ignores_scale(sig in sig_strategy(), seed: u64) {
        let mut s = Sampler::new(seed);
        let a = s.invertible(sig, 2).unwrap();
        let lambda = s.nonzero_integer(5);
        let x = s.multivector(sig, 3);
        let p1 = ProjectorSpec::inverse_kind(a.clone()).unwrap();
        let p2 = ProjectorSpec::inverse_kind(a.scale(&lambda)).unwrap();
        prop_assert_eq!(p1.project(&x).unwrap(), p2.project(&x).unwrap());
    }

    #[test]
    fn kinds_agree_on_unit_versors(sig in nondegenerate_sig(), seed: u64) {
        prop_assume!(sig.p() > 0);
        let mut s = Sampler::new(seed);
        let r = s.versor(sig, 3).unwrap().product().scale(&s.nonzero_integer(3));
        let r_inv = inverse(&r).unwrap();
        let count = s.below(4);
        let a = (0..count).fold(Multivector::one(sig), |acc, _| {
            let e = Multivector::basis_vector(sig, s.below(sig.p()));
            &acc * &(&(&r * &e) * &r_inv)
        });
        prop_assert_eq!(&a.reverse() * &a, Multivector::one(sig));
        let x = s.multivector(sig, 3);
        let inv = ProjectorSpec::new(a.clone(), ProjectionKind::Inverse).unwrap();
        let rev = ProjectorSpec::new(a, ProjectionKind::Reverse).unwrap();
        prop_assert_eq!(inv.project(&x).unwrap(), rev.project(&x).unwrap());
    }

    #[test]
    fn versor_projections_keep_vectors(sig in sig_strategy(), seed: u64) {
        let mut s = Sampler::new(seed);
        let w = s.versor(sig, 4).unwrap().product();
        let p = ProjectorSpec::familiar(w).unwrap();
        prop_assert!(p.project(&s.vector(sig)).unwrap().is_vector());
    }

    #[test]
    fn lift_is_an_algebra_homomorphism(seed: u64, which in 0..3usize) {
        let sig = [(1, 0, 1), (0, 0, 2), (1, 1, 1)][which];
        let sig = Signature::new(sig.0, sig.1, sig.2).unwrap();
        let f = lift_map(sig);
        let mut s = Sampler::new(seed);
        let (x, y) = (s.multivector(sig, 3), s.multivector(sig, 3));
        let (fx, fy) = (f.apply(&x).unwrap(), f.apply(&y).unwrap());
        prop_assert_eq!(f.apply(&(&x ^ &y)).unwrap(), &fx ^ &fy);
        prop_assert_eq!(f.apply(&(&x * &y)).unwrap(), &fx * &fy);
        if !x.is_zero() {
            prop_assert!(!fx.is_zero());
        }
    }

    #[test]
    fn contraction_test_matches_inspection(sig in sig_strategy(), seed: u64) {
        let a = Sampler::new(seed).sparse_multivector(sig, 2);
        prop_assert_eq!(is_scalar_by_contraction(&a), a.is_scalar());
    }

    #[test]
    fn reverse_of_versor_times_multiple_is_scalar(sig in sig_strategy(), seed: u64) {
        let mut s = Sampler::new(seed);
        let b = s.versor(sig, 4).unwrap().product();
        let w = b.scale(&s.nonzero_integer(7));
        prop_assert!(is_scalar_by_contraction(&(&b.reverse() * &w)));
    }
}

#[test]
fn lift_preserves_the_metric() {
    for (p, q, r) in [(1, 0, 1), (0, 0, 2), (1, 0, 2), (2, 1, 1)] {
        let sig = Signature::new(p, q, r).unwrap();
        let f = lift_map(sig);
        for i in 0..sig.dim() {
            for j in 0..sig.dim() {
                let u = Multivector::basis_vector(sig, i);
                let v = Multivector::basis_vector(sig, j);
                assert_eq!(
                    vector_inner(&u, &v),
                    vector_inner(&f.vector_images()[i], &f.vector_images()[j])
                );
            }
        }
    }
}

#[test]
fn reverse_kind_is_scale_sensitive() {
    let sig = Signature::new(3, 0, 0).unwrap();
    let e1 = Multivector::basis_vector(sig, 0);
    let x = &e1 + &Multivector::basis_vector(sig, 1);
    let p1 = ProjectorSpec::reverse_kind(e1.clone());
    let p2 = ProjectorSpec::reverse_kind(e1.scale(&rational(2, 1)));
    assert_ne!(p1.project(&x).unwrap(), p2.project(&x).unwrap());
}

#[test]
fn nonversor_sends_a_vector_off_the_vectors() {
    let sig = Signature::new(4, 0, 0).unwrap();
    let w = &Multivector::scalar(sig, rational(2, 1))
        + &Multivector::blade(sig, BasisBlade(0b1111), rational(1, 1));
    let p = ProjectorSpec::inverse_kind(w.clone()).unwrap();
    let image = p.project(&Multivector::basis_vector(sig, 0)).unwrap();
    assert!(!image.grade_part(3).is_zero());
    assert!(!is_versor(&w));
    assert!(!is_blade(&w));
    let e1 = Multivector::basis_vector(sig, 0);
    let e234 = Multivector::blade(sig, BasisBlade(0b1110), rational(1, 1));
    let sandwich = conjugate(&w, &inverse(&w).unwrap(), &e1);
    assert_eq!(
        sandwich,
        &e1.scale(&rational(5, 3)) - &e234.scale(&rational(4, 3))
    );
    assert_eq!(
        image,
        &e234.scale(&rational(2, 3)) - &e1.scale(&rational(1, 3))
    );
}

#[test]
fn conjugation_by_a_nonversor_need_not_be_orthogonal() {
    let sig = Signature::new(3, 0, 0).unwrap();
    let e1 = Multivector::basis_vector(sig, 0);
    let w = &Multivector::scalar(sig, rational(2, 1)) + &e1;
    assert!(!is_versor(&w));
    let fx = conjugate(&w, &inverse(&w).unwrap(), &e1);
    // (5e1 - 4)/3 squares to (41 - 40e1)/9.
    assert_eq!(
        fx,
        (&e1.scale(&rational(5, 1)) - &Multivector::scalar(sig, rational(4, 1)))
            .scale(&rational(1, 3))
    );
    assert_ne!(&fx * &fx, &e1 * &e1);
    // The reflected form of the identity survives for every invertible W.
    assert_eq!(-(&fx * &fx.grade_involution()), &e1 * &e1);
}
