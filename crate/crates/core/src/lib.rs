//! Exterior-algebra kernel: multivectors and multiforms over a real space
//! `V` of dimension `n <= 12`, the duality scalar product and contractions,
//! multilinear extensors, and the extension and generalization lifts of
//! linear operators. A brute-force reference implementation lives in
//! [`oracle`] for cross-checking.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod display;
pub mod extensor;
pub mod exterior;
pub mod operator;
pub mod oracle;
pub mod products;
pub mod sample;

pub use algebra::{AlgebraContext, BladeMask, Error, GradeSet, Result, MAX_DIM};
pub use exterior::{Contra, Cov, Exterior, Kind, Multiform, Multivector, Variance};
pub use operator::{ExtendedOperator, GeneralizedOperator, LinearMap};
pub use products::{
    left_contract, left_contract_form, right_contract, right_contract_vec, scalar_product,
    scalar_product_vf,
};
