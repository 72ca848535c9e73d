//! Deterministic sampling helpers for tests and self-checks.
//!
//! Uses a hand-rolled splitmix64 generator so results are reproducible
//! across platforms and never pull float parsing or OS entropy into the
//! no_std core.

use crate::algebra::{AlgebraContext, BladeMask, GradeSet};
use crate::exterior::{Exterior, Variance};
use crate::operator::LinearMap;

/// splitmix64: tiny, full-period, good enough for test sampling.
#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Small signed integer coefficient in `-5..=5`, excluding values that
    /// would make every test value zero too often.
    pub fn coeff(&mut self) -> f64 {
        self.below(11) as f64 - 5.0
    }

    /// Nonzero small integer in `-5..=5`.
    pub fn nonzero_coeff(&mut self) -> f64 {
        loop {
            let c = self.coeff();
            if c != 0.0 {
                return c;
            }
        }
    }
}

/// Random element with integer coefficients on every basis blade.
pub fn random_element<K: Variance>(rng: &mut Rng, ctx: AlgebraContext) -> Exterior<K> {
    Exterior::from_terms(ctx, ctx.blades().map(|b| (b, rng.coeff())))
}

/// Random homogeneous grade-`k` element with integer coefficients.
pub fn random_homogeneous<K: Variance>(
    rng: &mut Rng,
    ctx: AlgebraContext,
    k: usize,
) -> Exterior<K> {
    Exterior::from_terms(ctx, ctx.blades_of_grade(k).map(|b| (b, rng.coeff())))
}

/// Random grade-1 element.
pub fn random_vector<K: Variance>(rng: &mut Rng, ctx: AlgebraContext) -> Exterior<K> {
    random_homogeneous(rng, ctx, 1)
}

/// Random operator with integer entries.
pub fn random_map<K: Variance>(rng: &mut Rng, ctx: AlgebraContext) -> LinearMap<K> {
    let n = ctx.dim();
    let entries: alloc::vec::Vec<f64> = (0..n * n).map(|_| rng.coeff()).collect();
    LinearMap::from_row_major(ctx, &entries).unwrap()
}

/// Random invertible operator (resamples until the determinant is clearly
/// away from zero).
pub fn random_invertible_map<K: Variance>(rng: &mut Rng, ctx: AlgebraContext) -> LinearMap<K> {
    loop {
        let m = random_map(rng, ctx);
        if m.det().abs() > 0.5 {
            return m;
        }
    }
}

/// Random nonempty grade set with members in `0..=n`.
pub fn random_grade_set(rng: &mut Rng, ctx: AlgebraContext) -> GradeSet {
    let n = ctx.dim();
    loop {
        let mut s = GradeSet::EMPTY;
        for k in 0..=n {
            if rng.below(3) == 0 {
                s.insert(k);
            }
        }
        if !s.is_empty() {
            return s;
        }
    }
}

/// Random basis blade mask for the context.
pub fn random_blade(rng: &mut Rng, ctx: AlgebraContext) -> BladeMask {
    BladeMask(rng.below(ctx.blade_count() as u64) as u16)
}
