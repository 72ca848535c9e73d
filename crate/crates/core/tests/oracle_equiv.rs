//! Equivalence of the sparse kernel with the brute-force tensor oracle,
//! plus frame independence of the dual-basis formulas.

use extensor_core::algebra::AlgebraContext;
use extensor_core::exterior::{Contra, Cov, Multiform, Multivector};
use extensor_core::operator::LinearMap;
use extensor_core::oracle::{
    oracle_extend, oracle_extend_form, oracle_extend_in_frame, oracle_generalize,
    oracle_generalize_form, oracle_generalize_in_frame, oracle_left_contract,
    oracle_left_contract_form, oracle_left_contract_in_frame, oracle_right_contract,
    oracle_right_contract_in_frame, oracle_right_contract_vec, oracle_scalar_product, Frame,
};
use extensor_core::products::{
    left_contract, left_contract_form, right_contract, right_contract_vec, scalar_product,
};
use extensor_core::sample::{self, Rng};

fn ctx(n: usize) -> AlgebraContext {
    AlgebraContext::new(n).unwrap()
}

/// Every basis-blade pair, all grades, n <= 4: kernel and oracle agree
/// exactly (integer arithmetic on both sides).
#[test]
fn all_blade_pairs_agree_up_to_dim_four() {
    for n in 1..=4 {
        let c = ctx(n);
        for a in c.blades() {
            for b in c.blades() {
                let phi = Multiform::basis_blade(c, a);
                let x = Multivector::basis_blade(c, b);
                assert_eq!(
                    scalar_product(&phi, &x).unwrap(),
                    oracle_scalar_product(&phi, &x).unwrap(),
                    "sp n={} a={:?} b={:?}",
                    n,
                    a,
                    b
                );
                assert_eq!(
                    left_contract(&phi, &x).unwrap(),
                    oracle_left_contract(&phi, &x).unwrap(),
                    "lc n={} a={:?} b={:?}",
                    n,
                    a,
                    b
                );
                let y = Multivector::basis_blade(c, a);
                let psi = Multiform::basis_blade(c, b);
                assert_eq!(
                    left_contract_form(&y, &psi).unwrap(),
                    oracle_left_contract_form(&y, &psi).unwrap(),
                    "lcf n={} a={:?} b={:?}",
                    n,
                    a,
                    b
                );
                assert_eq!(
                    right_contract(&phi, &x).unwrap(),
                    oracle_right_contract(&phi, &x).unwrap(),
                    "rc n={} a={:?} b={:?}",
                    n,
                    a,
                    b
                );
                assert_eq!(
                    right_contract_vec(&y, &psi).unwrap(),
                    oracle_right_contract_vec(&y, &psi).unwrap(),
                    "rcv n={} a={:?} b={:?}",
                    n,
                    a,
                    b
                );
            }
        }
    }
}

#[test]
fn random_sparse_inputs_agree_at_dim_five() {
    let mut rng = Rng::new(61);
    let c = ctx(5);
    for _ in 0..200 {
        let p = rng.below(6) as usize;
        let phi: Multiform = sample::random_homogeneous(&mut rng, c, p);
        let x: Multivector = sample::random_element(&mut rng, c);
        assert_eq!(
            scalar_product(&phi, &x).unwrap(),
            oracle_scalar_product(&phi, &x).unwrap()
        );
        assert!(left_contract(&phi, &x)
            .unwrap()
            .approx_eq(&oracle_left_contract(&phi, &x).unwrap()));
        assert!(right_contract(&phi, &x)
            .unwrap()
            .approx_eq(&oracle_right_contract(&phi, &x).unwrap()));
    }
}

#[test]
fn operator_lifts_agree_with_their_oracles() {
    let mut rng = Rng::new(62);
    for n in 1..=4 {
        let c = ctx(n);
        for _ in 0..20 {
            let l: LinearMap<Contra> = sample::random_map(&mut rng, c);
            let x: Multivector = sample::random_element(&mut rng, c);
            assert!(l
                .extend()
                .apply(&x)
                .unwrap()
                .approx_eq(&oracle_extend(&l, &x).unwrap()));
            assert!(l
                .generalize()
                .apply(&x)
                .unwrap()
                .approx_eq(&oracle_generalize(&l, &x).unwrap()));
            let m: LinearMap<Cov> = sample::random_map(&mut rng, c);
            let phi: Multiform = sample::random_element(&mut rng, c);
            assert!(m
                .extend()
                .apply(&phi)
                .unwrap()
                .approx_eq(&oracle_extend_form(&m, &phi).unwrap()));
            assert!(m
                .generalize()
                .apply(&phi)
                .unwrap()
                .approx_eq(&oracle_generalize_form(&m, &phi).unwrap()));
        }
    }
}

/// The dual-basis summation formulas give the same answers in arbitrary
/// invertible frames.
#[test]
fn oracle_results_are_frame_independent() {
    let mut rng = Rng::new(63);
    for n in 2..=4 {
        let c = ctx(n);
        for _ in 0..8 {
            let basis_change: LinearMap<Contra> = sample::random_invertible_map(&mut rng, c);
            let frame = Frame::from_map(&basis_change).unwrap();
            let phi: Multiform = sample::random_element(&mut rng, c);
            let x: Multivector = sample::random_element(&mut rng, c);
            let tol = 1e-8 * (1.0 + phi.norm_inf() * x.norm_inf()) * 100.0;

            let standard = oracle_left_contract(&phi, &x).unwrap();
            let framed = oracle_left_contract_in_frame(&phi, &x, &frame).unwrap();
            assert!(standard.max_diff(&framed) < tol, "n={}", n);

            let standard = oracle_right_contract(&phi, &x).unwrap();
            let framed = oracle_right_contract_in_frame(&phi, &x, &frame).unwrap();
            assert!(standard.max_diff(&framed) < tol, "n={}", n);

            let l: LinearMap<Contra> = sample::random_map(&mut rng, c);
            let standard = oracle_extend(&l, &x).unwrap();
            let framed = oracle_extend_in_frame(&l, &x, &frame).unwrap();
            assert!(standard.max_diff(&framed) < tol, "n={}", n);

            let standard = oracle_generalize(&l, &x).unwrap();
            let framed = oracle_generalize_in_frame(&l, &x, &frame).unwrap();
            assert!(standard.max_diff(&framed) < tol, "n={}", n);
        }
    }
}
