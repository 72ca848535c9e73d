//! Laws of extended and generalized operators on the full algebra.

use extensor_core::algebra::AlgebraContext;
use extensor_core::exterior::{Contra, Cov, Multiform, Multivector};
use extensor_core::operator::{
    extended_adjoint_commutes, generalized_adjoint_commutes, laws, LinearMap,
};
use extensor_core::sample::{self, Rng};

fn ctx(n: usize) -> AlgebraContext {
    AlgebraContext::new(n).unwrap()
}

#[test]
fn extended_operators_compose_multiplicatively() {
    let mut rng = Rng::new(31);
    let c = ctx(4);
    for _ in 0..15 {
        let a: LinearMap<Contra> = sample::random_map(&mut rng, c);
        let b: LinearMap<Contra> = sample::random_map(&mut rng, c);
        let x: Multivector = sample::random_element(&mut rng, c);
        let lhs = a.compose(&b).unwrap().extend().apply(&x).unwrap();
        let rhs = a.extend().apply(&b.extend().apply(&x).unwrap()).unwrap();
        assert!(lhs.approx_eq(&rhs));
    }
}

#[test]
fn generalization_is_additive_in_the_operator() {
    let mut rng = Rng::new(32);
    let c = ctx(4);
    for _ in 0..15 {
        let a: LinearMap<Contra> = sample::random_map(&mut rng, c);
        let b: LinearMap<Contra> = sample::random_map(&mut rng, c);
        let n = c.dim();
        let sum_entries: Vec<f64> = (0..n * n)
            .map(|i| a.entry(i / n, i % n) + b.entry(i / n, i % n))
            .collect();
        let s = LinearMap::<Contra>::from_row_major(c, &sum_entries).unwrap();
        let x: Multivector = sample::random_element(&mut rng, c);
        let lhs = s.generalize().apply(&x).unwrap();
        let rhs = a
            .generalize()
            .apply(&x)
            .unwrap()
            .add(&b.generalize().apply(&x).unwrap())
            .unwrap();
        assert!(lhs.approx_eq(&rhs));
    }
}

#[test]
fn duality_adjoint_commutes_with_both_lifts() {
    let mut rng = Rng::new(33);
    for n in 2..=4 {
        let c = ctx(n);
        for _ in 0..10 {
            let a: LinearMap<Contra> = sample::random_map(&mut rng, c);
            assert!(extended_adjoint_commutes(&a) < 1e-9, "n={}", n);
            assert!(generalized_adjoint_commutes(&a) < 1e-9, "n={}", n);
            let m: LinearMap<Cov> = sample::random_map(&mut rng, c);
            assert!(extended_adjoint_commutes(&m) < 1e-9, "n={}", n);
            assert!(generalized_adjoint_commutes(&m) < 1e-9, "n={}", n);
        }
    }
}

#[test]
fn extended_vector_operator_product_laws() {
    let mut rng = Rng::new(34);
    let c = ctx(3);
    for _ in 0..50 {
        let l: LinearMap<Contra> = sample::random_invertible_map(&mut rng, c);
        let phi: Multiform = sample::random_element(&mut rng, c);
        let x: Multivector = sample::random_element(&mut rng, c);
        let scale = 1.0 + phi.norm_inf().max(x.norm_inf());
        assert!(laws::epo12(&l, &phi, &x).unwrap() < 1e-6 * scale * scale);
        assert!(laws::epo13(&l, &phi, &x).unwrap() < 1e-6 * scale * scale);
        assert!(laws::epo14(&l, &phi, &x).unwrap() < 1e-6 * scale * scale);
    }
}

#[test]
fn extended_form_operator_product_laws() {
    let mut rng = Rng::new(35);
    let c = ctx(3);
    for _ in 0..50 {
        let m: LinearMap<Cov> = sample::random_invertible_map(&mut rng, c);
        let phi: Multiform = sample::random_element(&mut rng, c);
        let x: Multivector = sample::random_element(&mut rng, c);
        let scale = 1.0 + phi.norm_inf().max(x.norm_inf());
        assert!(laws::epo15(&m, &phi, &x).unwrap() < 1e-6 * scale * scale);
        assert!(laws::epo16(&m, &phi, &x).unwrap() < 1e-6 * scale * scale);
        assert!(laws::epo17(&m, &phi, &x).unwrap() < 1e-6 * scale * scale);
    }
}

#[test]
fn generalized_operator_leibniz_laws() {
    let mut rng = Rng::new(36);
    let c = ctx(3);
    for _ in 0..50 {
        let g: LinearMap<Contra> = sample::random_map(&mut rng, c);
        let m: LinearMap<Cov> = sample::random_map(&mut rng, c);
        let phi: Multiform = sample::random_element(&mut rng, c);
        let x: Multivector = sample::random_element(&mut rng, c);
        let tol = 1e-9 * (1.0 + phi.norm_inf() * x.norm_inf()) * 100.0;
        assert!(laws::gpo12(&g, &phi, &x).unwrap() < tol);
        assert!(laws::gpo13(&g, &phi, &x).unwrap() < tol);
        assert!(laws::gpo14(&g, &phi, &x).unwrap() < tol);
        assert!(laws::gpo15(&m, &phi, &x).unwrap() < tol);
        assert!(laws::gpo16(&m, &phi, &x).unwrap() < tol);
        assert!(laws::gpo17(&m, &phi, &x).unwrap() < tol);
    }
}

#[test]
fn generalized_leibniz_over_the_wedge() {
    let mut rng = Rng::new(37);
    for n in 2..=5 {
        let c = ctx(n);
        for _ in 0..10 {
            let g: LinearMap<Contra> = sample::random_map(&mut rng, c);
            let gen = g.generalize();
            let a: Multivector = sample::random_element(&mut rng, c);
            let b: Multivector = sample::random_element(&mut rng, c);
            let lhs = gen.apply(&a.wedge(&b).unwrap()).unwrap();
            let rhs = gen
                .apply(&a)
                .unwrap()
                .wedge(&b)
                .unwrap()
                .add(&a.wedge(&gen.apply(&b).unwrap()).unwrap())
                .unwrap();
            assert!(lhs.approx_eq(&rhs), "n={}", n);
        }
    }
}

#[test]
fn extended_is_an_outermorphism() {
    let mut rng = Rng::new(38);
    for n in 2..=5 {
        let c = ctx(n);
        for _ in 0..10 {
            let l: LinearMap<Contra> = sample::random_map(&mut rng, c);
            let lifted = l.extend();
            let a: Multivector = sample::random_element(&mut rng, c);
            let b: Multivector = sample::random_element(&mut rng, c);
            let lhs = lifted.apply(&a.wedge(&b).unwrap()).unwrap();
            let rhs = lifted
                .apply(&a)
                .unwrap()
                .wedge(&lifted.apply(&b).unwrap())
                .unwrap();
            assert!(lhs.approx_eq(&rhs), "n={}", n);
        }
    }
}

#[test]
fn pseudoscalar_image_carries_the_determinant() {
    let mut rng = Rng::new(39);
    for n in 1..=5 {
        let c = ctx(n);
        for _ in 0..10 {
            let l: LinearMap<Contra> = sample::random_map(&mut rng, c);
            let top = Multivector::basis_blade(c, c.pseudoscalar_mask());
            let img = l.extend().apply(&top).unwrap();
            let got = img.coeff(c.pseudoscalar_mask());
            assert!(
                (got - l.det()).abs() < 1e-6 * (1.0 + l.det().abs()),
                "n={} got={} det={}",
                n,
                got,
                l.det()
            );
        }
    }
}

#[test]
fn inverse_adjoint_equals_adjoint_inverse() {
    let mut rng = Rng::new(40);
    let c = ctx(4);
    for _ in 0..10 {
        let l: LinearMap<Contra> = sample::random_invertible_map(&mut rng, c);
        let a = l.inverse_adjoint().unwrap();
        let b = l.adjoint().inverse().unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert!((a.entry(i, j) - b.entry(i, j)).abs() < 1e-9);
            }
        }
    }
}
