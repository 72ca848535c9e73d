//! Structural identities of the exterior algebras themselves.

use extensor_core::algebra::{binomial, AlgebraContext, BladeMask};
use extensor_core::exterior::{Multiform, Multivector};
use extensor_core::sample::{self, Rng};

use proptest::prelude::*;

fn ctx(n: usize) -> AlgebraContext {
    AlgebraContext::new(n).unwrap()
}

#[test]
fn wedge_is_associative_on_random_values() {
    let mut rng = Rng::new(11);
    for n in 1..=5 {
        let c = ctx(n);
        for _ in 0..20 {
            let a: Multivector = sample::random_element(&mut rng, c);
            let b: Multivector = sample::random_element(&mut rng, c);
            let d: Multivector = sample::random_element(&mut rng, c);
            let lhs = a.wedge(&b).unwrap().wedge(&d).unwrap();
            let rhs = a.wedge(&b.wedge(&d).unwrap()).unwrap();
            assert!(lhs.approx_eq(&rhs), "n={}", n);
        }
    }
}

#[test]
fn wedge_is_graded_commutative() {
    let mut rng = Rng::new(12);
    let c = ctx(5);
    for p in 0..=5usize {
        for q in 0..=5usize {
            let a: Multivector = sample::random_homogeneous(&mut rng, c, p);
            let b: Multivector = sample::random_homogeneous(&mut rng, c, q);
            let sign = if (p * q) % 2 == 0 { 1.0 } else { -1.0 };
            let lhs = a.wedge(&b).unwrap();
            let rhs = b.wedge(&a).unwrap().scale(sign);
            assert!(lhs.approx_eq(&rhs), "p={} q={}", p, q);
        }
    }
}

#[test]
fn wedge_distributes_over_addition() {
    let mut rng = Rng::new(13);
    let c = ctx(4);
    for _ in 0..30 {
        let a: Multiform = sample::random_element(&mut rng, c);
        let b: Multiform = sample::random_element(&mut rng, c);
        let d: Multiform = sample::random_element(&mut rng, c);
        let lhs = a.wedge(&b.add(&d).unwrap()).unwrap();
        let rhs = a.wedge(&b).unwrap().add(&a.wedge(&d).unwrap()).unwrap();
        assert!(lhs.approx_eq(&rhs));
    }
}

#[test]
fn reversion_is_an_involutive_antiautomorphism() {
    let mut rng = Rng::new(14);
    let c = ctx(5);
    for _ in 0..30 {
        let a: Multivector = sample::random_element(&mut rng, c);
        let b: Multivector = sample::random_element(&mut rng, c);
        assert!(a.reversion().reversion().approx_eq(&a));
        let lhs = a.wedge(&b).unwrap().reversion();
        let rhs = b.reversion().wedge(&a.reversion()).unwrap();
        assert!(lhs.approx_eq(&rhs));
    }
}

#[test]
fn grade_involution_is_an_involutive_automorphism() {
    let mut rng = Rng::new(15);
    let c = ctx(5);
    for _ in 0..30 {
        let a: Multivector = sample::random_element(&mut rng, c);
        let b: Multivector = sample::random_element(&mut rng, c);
        assert!(a.grade_involution().grade_involution().approx_eq(&a));
        let lhs = a.wedge(&b).unwrap().grade_involution();
        let rhs = a.grade_involution().wedge(&b.grade_involution()).unwrap();
        assert!(lhs.approx_eq(&rhs));
    }
}

#[test]
fn grade_decomposition_is_total_and_disjoint() {
    let mut rng = Rng::new(16);
    for n in 1..=6 {
        let c = ctx(n);
        let a: Multivector = sample::random_element(&mut rng, c);
        let mut sum = Multivector::zero(c);
        for k in 0..=n {
            sum = sum.add(&a.grade_part(k).unwrap()).unwrap();
        }
        assert!(sum.approx_eq(&a), "n={}", n);
        assert_eq!(c.blades().count(), (0..=n).map(|k| binomial(n, k)).sum());
    }
}

#[test]
fn square_of_odd_homogeneous_elements_vanishes_at_grade_one() {
    let mut rng = Rng::new(17);
    let c = ctx(5);
    for _ in 0..20 {
        let v: Multivector = sample::random_vector(&mut rng, c);
        assert!(v.wedge(&v).unwrap().is_zero());
    }
}

proptest! {
    #[test]
    fn prop_wedge_alternates_on_vectors(
        a in proptest::collection::vec(-5i32..=5, 4),
        b in proptest::collection::vec(-5i32..=5, 4),
    ) {
        let c = ctx(4);
        let mk = |coeffs: &[i32]| {
            Multivector::from_terms(
                c,
                coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| (BladeMask::from_indices(&[i]), x as f64)),
            )
        };
        let va = mk(&a);
        let vb = mk(&b);
        let ab = va.wedge(&vb).unwrap();
        let ba = vb.wedge(&va).unwrap();
        prop_assert!(ab.approx_eq(&ba.scale(-1.0)));
        prop_assert!(va.wedge(&va).unwrap().is_zero());
    }

    #[test]
    fn prop_scaling_commutes_with_wedge(s in -5i32..=5, seed in 0u64..1000) {
        let c = ctx(3);
        let mut rng = Rng::new(seed);
        let a: Multivector = extensor_core::sample::random_element(&mut rng, c);
        let b: Multivector = extensor_core::sample::random_element(&mut rng, c);
        let lhs = a.scale(s as f64).wedge(&b).unwrap();
        let rhs = a.wedge(&b).unwrap().scale(s as f64);
        prop_assert!(lhs.approx_eq(&rhs));
    }
}
