//! Sparse exterior-algebra elements of both variances.
//!
//! `Multivector` and `Multiform` share one representation, a map from basis
//! blade masks to coefficients in the sorted wedge basis (no `1/k!` factor),
//! but carry a compile-time variance marker so they can never be mixed: the
//! duality products are the only bridges between the two algebras.

use alloc::collections::BTreeMap;
use core::fmt;
use core::marker::PhantomData;

use crate::algebra::{
    involution_sign, reversion_sign, wedge_sign, AlgebraContext, BladeMask, Error, GradeSet, Result,
};

/// Coefficients at or below this magnitude are dropped from the sparse map.
const DROP_EPS: f64 = 0.0;

/// Base absolute tolerance for approximate comparisons.
pub const TOL: f64 = 1e-9;

mod sealed {
    pub trait Sealed {}
}

/// Compile-time variance marker.
pub trait Variance: sealed::Sealed + 'static {
    /// Marker of the opposite variance.
    type Dual: Variance<Dual = Self>;
    /// Basis symbol used by the canonical text grammar.
    const SYMBOL: &'static str;
    /// Runtime tag for heterogeneous containers.
    const KIND: Kind;
}

/// Contravariant marker: elements of the exterior algebra of `V`.
#[derive(Debug)]
pub enum Contra {}
/// Covariant marker: elements of the exterior algebra of `V*`.
#[derive(Debug)]
pub enum Cov {}

impl sealed::Sealed for Contra {}
impl sealed::Sealed for Cov {}

impl Variance for Contra {
    type Dual = Cov;
    const SYMBOL: &'static str = "e";
    const KIND: Kind = Kind::Vector;
}

impl Variance for Cov {
    type Dual = Contra;
    const SYMBOL: &'static str = "w";
    const KIND: Kind = Kind::Form;
}

/// Runtime variance tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Vector,
    Form,
}

impl Kind {
    pub fn dual(self) -> Kind {
        match self {
            Kind::Vector => Kind::Form,
            Kind::Form => Kind::Vector,
        }
    }
}

/// A sparse element of the exterior algebra of `V` (`K = Contra`) or of `V*`
/// (`K = Cov`). Zero coefficients are never stored.
pub struct Exterior<K: Variance> {
    ctx: AlgebraContext,
    coeffs: BTreeMap<BladeMask, f64>,
    _variance: PhantomData<fn() -> K>,
}

impl<K: Variance> Clone for Exterior<K> {
    fn clone(&self) -> Self {
        Exterior {
            ctx: self.ctx,
            coeffs: self.coeffs.clone(),
            _variance: PhantomData,
        }
    }
}

/// An element of the exterior algebra of `V`.
pub type Multivector = Exterior<Contra>;
/// An element of the exterior algebra of `V*`.
pub type Multiform = Exterior<Cov>;

impl<K: Variance> Exterior<K> {
    pub fn zero(ctx: AlgebraContext) -> Self {
        Exterior {
            ctx,
            coeffs: BTreeMap::new(),
            _variance: PhantomData,
        }
    }

    pub fn scalar(ctx: AlgebraContext, value: f64) -> Self {
        let mut out = Self::zero(ctx);
        out.set(BladeMask::SCALAR, value);
        out
    }

    /// The basis blade with coefficient 1.
    pub fn basis_blade(ctx: AlgebraContext, mask: BladeMask) -> Self {
        let mut out = Self::zero(ctx);
        out.set(mask, 1.0);
        out
    }

    /// The `j`-th basis vector (or basis form), zero-based index.
    pub fn basis(ctx: AlgebraContext, j: usize) -> Self {
        Self::basis_blade(ctx, BladeMask::from_indices(&[j]))
    }

    pub fn from_terms<I: IntoIterator<Item = (BladeMask, f64)>>(
        ctx: AlgebraContext,
        terms: I,
    ) -> Self {
        let mut out = Self::zero(ctx);
        for (mask, c) in terms {
            out.add_term(mask, c);
        }
        out
    }

    #[inline]
    pub fn ctx(&self) -> AlgebraContext {
        self.ctx
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, mask: BladeMask) -> f64 {
        self.coeffs.get(&mask).copied().unwrap_or(0.0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (BladeMask, f64)> + '_ {
        self.coeffs.iter().map(|(&m, &c)| (m, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    fn set(&mut self, mask: BladeMask, value: f64) {
        if value.abs() <= DROP_EPS {
            self.coeffs.remove(&mask);
        } else {
            self.coeffs.insert(mask, value);
        }
    }

    pub(crate) fn add_term(&mut self, mask: BladeMask, value: f64) {
        let v = self.coeff(mask) + value;
        self.set(mask, v);
    }

    /// Grades present in the value; empty for zero.
    pub fn grades(&self) -> GradeSet {
        let mut set = GradeSet::EMPTY;
        for (mask, _) in self.terms() {
            set.insert(mask.grade());
        }
        set
    }

    pub fn check_ctx(&self, other: AlgebraContext) -> Result<()> {
        if self.ctx == other {
            Ok(())
        } else {
            Err(Error::CtxMismatch)
        }
    }

    /// The `k`-part operator.
    pub fn grade_part(&self, k: usize) -> Result<Self> {
        self.ctx.check_grade(k)?;
        Ok(Self::from_terms(
            self.ctx,
            self.terms().filter(|(m, _)| m.grade() == k),
        ))
    }

    /// Part operator for a sum of homogeneous subspaces.
    pub fn gradeset_part(&self, set: GradeSet) -> Self {
        Self::from_terms(
            self.ctx,
            self.terms().filter(|(m, _)| set.contains(m.grade())),
        )
    }

    /// Grade involution: sign `(-1)^k` on the grade-`k` part.
    pub fn grade_involution(&self) -> Self {
        Self::from_terms(
            self.ctx,
            self.terms()
                .map(|(m, c)| (m, c * involution_sign(m.grade()))),
        )
    }

    /// Reversion: sign `(-1)^{k(k-1)/2}` on the grade-`k` part.
    pub fn reversion(&self) -> Self {
        Self::from_terms(
            self.ctx,
            self.terms()
                .map(|(m, c)| (m, c * reversion_sign(m.grade()))),
        )
    }

    pub fn scale(&self, a: f64) -> Self {
        Self::from_terms(self.ctx, self.terms().map(|(m, c)| (m, c * a)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other.ctx)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1.0))
    }

    /// Exterior product. The variance marker makes mixed-variance wedges a
    /// compile-time type error.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other.ctx)?;
        let mut out = Self::zero(self.ctx);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let s = wedge_sign(a, b);
                if s != 0.0 {
                    out.add_term(a.union(b), s * ca * cb);
                }
            }
        }
        Ok(out)
    }

    /// Largest coefficient magnitude.
    pub fn norm_inf(&self) -> f64 {
        self.terms().fold(0.0, |acc, (_, c)| acc.max(c.abs()))
    }

    /// Largest coefficient difference, over the union of supports.
    pub fn max_diff(&self, other: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for (m, c) in self.terms() {
            d = d.max((c - other.coeff(m)).abs());
        }
        for (m, c) in other.terms() {
            d = d.max((c - self.coeff(m)).abs());
        }
        d
    }

    /// Equality within `max(TOL, TOL * max norm of the operands)`.
    pub fn approx_eq(&self, other: &Self) -> bool {
        if self.ctx != other.ctx {
            return false;
        }
        let tol = TOL * self.norm_inf().max(other.norm_inf()).max(1.0);
        self.max_diff(other) <= tol
    }

    /// Exact coefficient of the empty blade.
    pub fn scalar_part(&self) -> f64 {
        self.coeff(BladeMask::SCALAR)
    }
}

impl<K: Variance> PartialEq for Exterior<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.coeffs == other.coeffs
    }
}

impl<K: Variance> fmt::Debug for Exterior<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", K::SYMBOL, self)
    }
}
