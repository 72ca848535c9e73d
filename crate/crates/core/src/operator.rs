//! Linear operators on `V` and `V*`, their duality adjoints, and the
//! extension (outermorphism) and generalization (derivation) lifts to the
//! whole exterior algebra.

use alloc::vec::Vec;
use core::fmt;
use core::marker::PhantomData;

use crate::algebra::{AlgebraContext, BladeMask, Error, GradeSet, Result};
use crate::exterior::{Exterior, Variance};
use crate::products::det_in_place;

/// Singularity threshold for operator inversion.
pub const SINGULAR_EPS: f64 = 1e-9;

/// An `n x n` real operator on `V` (`K = Contra`) or on `V*` (`K = Cov`).
/// Column `j` holds the image of the `j`-th canonical basis element.
pub struct LinearMap<K: Variance> {
    ctx: AlgebraContext,
    /// Row-major entries; `entries[i * n + j]` is row `i`, column `j`.
    entries: Vec<f64>,
    _variance: PhantomData<fn() -> K>,
}

impl<K: Variance> Clone for LinearMap<K> {
    fn clone(&self) -> Self {
        LinearMap {
            ctx: self.ctx,
            entries: self.entries.clone(),
            _variance: PhantomData,
        }
    }
}

impl<K: Variance> PartialEq for LinearMap<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.entries == other.entries
    }
}

impl<K: Variance> fmt::Debug for LinearMap<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearMap{:?}", self.entries)
    }
}

impl<K: Variance> LinearMap<K> {
    /// Build from rows, each of length `n`.
    pub fn from_rows(ctx: AlgebraContext, rows: &[&[f64]]) -> Result<Self> {
        let n = ctx.dim();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::LengthMismatch);
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            entries.extend_from_slice(row);
        }
        Ok(LinearMap {
            ctx,
            entries,
            _variance: PhantomData,
        })
    }

    pub fn from_row_major(ctx: AlgebraContext, entries: &[f64]) -> Result<Self> {
        let n = ctx.dim();
        if entries.len() != n * n {
            return Err(Error::LengthMismatch);
        }
        Ok(LinearMap {
            ctx,
            entries: entries.to_vec(),
            _variance: PhantomData,
        })
    }

    pub fn identity(ctx: AlgebraContext) -> Self {
        let n = ctx.dim();
        let mut entries = alloc::vec![0.0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1.0;
        }
        LinearMap {
            ctx,
            entries,
            _variance: PhantomData,
        }
    }

    pub fn diagonal(ctx: AlgebraContext, diag: &[f64]) -> Result<Self> {
        let n = ctx.dim();
        if diag.len() != n {
            return Err(Error::LengthMismatch);
        }
        let mut m = Self::identity(ctx);
        for (i, &d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d;
        }
        Ok(m)
    }

    #[inline]
    pub fn ctx(&self) -> AlgebraContext {
        self.ctx
    }

    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.ctx.dim() + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.entries.chunks(self.ctx.dim())
    }

    /// Image of the `j`-th basis element, as a grade-1 value.
    pub fn basis_image(&self, j: usize) -> Exterior<K> {
        let n = self.ctx.dim();
        Exterior::from_terms(
            self.ctx,
            (0..n).map(|i| (BladeMask::from_indices(&[i]), self.entry(i, j))),
        )
    }

    /// Apply to a grade-1 element (the operator acts on `V`, not on the full
    /// algebra; use [`extend`] or [`generalize`] for that).
    pub fn apply_vector(&self, v: &Exterior<K>) -> Result<Exterior<K>> {
        v.check_ctx(self.ctx)?;
        if !v.is_zero() && v.grades() != GradeSet::singleton(1) {
            return Err(Error::NotAVector);
        }
        let mut out = Exterior::zero(self.ctx);
        for (mask, c) in v.terms() {
            let j = mask.indices().next().unwrap();
            out = out.add(&self.basis_image(j).scale(c))?;
        }
        Ok(out)
    }

    /// Duality adjoint: the unique operator on the dual side with
    /// `<l(v), w> = <v, l^adj(w)>`. Its matrix is the transpose.
    pub fn adjoint(&self) -> LinearMap<K::Dual> {
        let n = self.ctx.dim();
        let mut entries = alloc::vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = self.entry(j, i);
            }
        }
        LinearMap {
            ctx: self.ctx,
            entries,
            _variance: PhantomData,
        }
    }

    pub fn det(&self) -> f64 {
        let mut m = self.entries.clone();
        det_in_place(&mut m, self.ctx.dim())
    }

    pub fn is_invertible(&self) -> bool {
        self.det().abs() > SINGULAR_EPS
    }

    /// Inverse by partial-pivot elimination; errors on singular operators.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.ctx.dim();
        let mut a = self.entries.clone();
        let mut inv = Self::identity(self.ctx).entries;
        for col in 0..n {
            let mut pivot = col;
            for row in col + 1..n {
                if a[row * n + col].abs() > a[pivot * n + col].abs() {
                    pivot = row;
                }
            }
            if a[pivot * n + col].abs() <= SINGULAR_EPS {
                return Err(Error::SingularOperator);
            }
            if pivot != col {
                for k in 0..n {
                    a.swap(pivot * n + k, col * n + k);
                    inv.swap(pivot * n + k, col * n + k);
                }
            }
            let d = a[col * n + col];
            for k in 0..n {
                a[col * n + k] /= d;
                inv[col * n + k] /= d;
            }
            for row in 0..n {
                if row != col {
                    let factor = a[row * n + col];
                    if factor != 0.0 {
                        for k in 0..n {
                            a[row * n + k] -= factor * a[col * n + k];
                            inv[row * n + k] -= factor * inv[col * n + k];
                        }
                    }
                }
            }
        }
        if self.det().abs() <= SINGULAR_EPS {
            return Err(Error::SingularOperator);
        }
        Ok(LinearMap {
            ctx: self.ctx,
            entries: inv,
            _variance: PhantomData,
        })
    }

    /// Inverse of the adjoint (equal to the adjoint of the inverse).
    pub fn inverse_adjoint(&self) -> Result<LinearMap<K::Dual>> {
        Ok(self.inverse()?.adjoint())
    }

    /// Composition `self * other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.basis_image(0).check_ctx(other.ctx)?;
        let n = self.ctx.dim();
        let mut entries = alloc::vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0.0;
                for k in 0..n {
                    acc += self.entry(i, k) * other.entry(k, j);
                }
                entries[i * n + j] = acc;
            }
        }
        Ok(LinearMap {
            ctx: self.ctx,
            entries,
            _variance: PhantomData,
        })
    }

    /// The extended (outermorphism) lift of this operator.
    pub fn extend(&self) -> ExtendedOperator<K> {
        ExtendedOperator { map: self.clone() }
    }

    /// The generalized (derivation) lift of this operator.
    pub fn generalize(&self) -> GeneralizedOperator<K> {
        GeneralizedOperator { map: self.clone() }
    }
}

/// The grade-preserving multiplicative lift of a linear operator: fixes
/// scalars, agrees with the base operator on grade 1, and distributes over
/// the exterior product.
#[derive(Debug)]
pub struct ExtendedOperator<K: Variance> {
    map: LinearMap<K>,
}

// manual impl: a derive would wrongly require K: Clone on the marker
impl<K: Variance> Clone for ExtendedOperator<K> {
    fn clone(&self) -> Self {
        ExtendedOperator {
            map: self.map.clone(),
        }
    }
}

impl<K: Variance> ExtendedOperator<K> {
    pub fn base(&self) -> &LinearMap<K> {
        &self.map
    }

    fn blade_image(&self, mask: BladeMask) -> Exterior<K> {
        let mut acc = Exterior::scalar(self.map.ctx(), 1.0);
        for j in mask.indices() {
            acc = acc.wedge(&self.map.basis_image(j)).expect("same ctx");
        }
        acc
    }

    pub fn apply(&self, x: &Exterior<K>) -> Result<Exterior<K>> {
        x.check_ctx(self.map.ctx())?;
        let mut out = Exterior::zero(self.map.ctx());
        for (mask, c) in x.terms() {
            out = out.add(&self.blade_image(mask).scale(c))?;
        }
        Ok(out)
    }
}

/// The grade-preserving derivation lift of a linear operator: annihilates
/// scalars, agrees with the base operator on grade 1, and satisfies the
/// Leibniz rule over the exterior product.
#[derive(Debug)]
pub struct GeneralizedOperator<K: Variance> {
    map: LinearMap<K>,
}

// manual impl: a derive would wrongly require K: Clone on the marker
impl<K: Variance> Clone for GeneralizedOperator<K> {
    fn clone(&self) -> Self {
        GeneralizedOperator {
            map: self.map.clone(),
        }
    }
}

impl<K: Variance> GeneralizedOperator<K> {
    pub fn base(&self) -> &LinearMap<K> {
        &self.map
    }

    fn blade_image(&self, mask: BladeMask) -> Exterior<K> {
        // replace one factor at a time: sum_i b_1 ^ .. ^ g(b_i) ^ .. ^ b_k
        let ctx = self.map.ctx();
        let mut out = Exterior::zero(ctx);
        for i in mask.indices() {
            let single = BladeMask::from_indices(&[i]);
            let prefix_bits = BladeMask(mask.0 & (single.0 - 1));
            let suffix = mask.difference(single).difference(prefix_bits);
            let prefix = Exterior::<K>::basis_blade(ctx, prefix_bits);
            let suffix = Exterior::<K>::basis_blade(ctx, suffix);
            let term = prefix
                .wedge(&self.map.basis_image(i))
                .and_then(|t| t.wedge(&suffix))
                .expect("same ctx");
            out = out.add(&term).expect("same ctx");
        }
        out
    }

    pub fn apply(&self, x: &Exterior<K>) -> Result<Exterior<K>> {
        x.check_ctx(self.map.ctx())?;
        let mut out = Exterior::zero(self.map.ctx());
        for (mask, c) in x.terms() {
            out = out.add(&self.blade_image(mask).scale(c))?;
        }
        Ok(out)
    }
}

/// Free-function forms matching the operator calculus vocabulary.
pub fn extend<K: Variance>(map: &LinearMap<K>) -> ExtendedOperator<K> {
    map.extend()
}

pub fn apply_extended<K: Variance>(
    op: &ExtendedOperator<K>,
    x: &Exterior<K>,
) -> Result<Exterior<K>> {
    op.apply(x)
}

pub fn generalize<K: Variance>(map: &LinearMap<K>) -> GeneralizedOperator<K> {
    map.generalize()
}

pub fn apply_generalized<K: Variance>(
    op: &GeneralizedOperator<K>,
    x: &Exterior<K>,
) -> Result<Exterior<K>> {
    op.apply(x)
}

/// Duality adjoint of an algebra-level operator `f`, tabulated against the
/// basis blades: `f_adj(dual_b) = sum_a <dual_b, f(blade_a)> dual_a`.
fn algebra_adjoint_on_blade<K, F>(ctx: AlgebraContext, f: F, mask: BladeMask) -> Exterior<K::Dual>
where
    K: Variance,
    F: Fn(BladeMask) -> Exterior<K>,
{
    let mut out = Exterior::zero(ctx);
    for a in ctx.blades() {
        out.add_term(a, f(a).coeff(mask));
    }
    out
}

/// Max discrepancy, over all basis blades, between the duality adjoint of
/// the extended operator and the extended of the duality adjoint.
pub fn extended_adjoint_commutes<K: Variance>(map: &LinearMap<K>) -> f64 {
    let ctx = map.ctx();
    let lifted = map.extend();
    let adj_lifted = map.adjoint().extend();
    let mut worst: f64 = 0.0;
    for b in ctx.blades() {
        let via_adjoint: Exterior<K::Dual> = algebra_adjoint_on_blade::<K, _>(
            ctx,
            |m| lifted.apply(&Exterior::basis_blade(ctx, m)).unwrap(),
            b,
        );
        let direct = adj_lifted.apply(&Exterior::basis_blade(ctx, b)).unwrap();
        worst = worst.max(via_adjoint.max_diff(&direct));
    }
    worst
}

/// Same check for the generalized operator.
pub fn generalized_adjoint_commutes<K: Variance>(map: &LinearMap<K>) -> f64 {
    let ctx = map.ctx();
    let lifted = map.generalize();
    let adj_lifted = map.adjoint().generalize();
    let mut worst: f64 = 0.0;
    for b in ctx.blades() {
        let via_adjoint: Exterior<K::Dual> = algebra_adjoint_on_blade::<K, _>(
            ctx,
            |m| lifted.apply(&Exterior::basis_blade(ctx, m)).unwrap(),
            b,
        );
        let direct = adj_lifted.apply(&Exterior::basis_blade(ctx, b)).unwrap();
        worst = worst.max(via_adjoint.max_diff(&direct));
    }
    worst
}

/// Identity-check utilities for the product laws of extended and generalized
/// operators. Each function evaluates both sides on the given sample values
/// and returns the largest coefficient discrepancy.
pub mod laws {
    use super::*;
    use crate::exterior::{Contra, Cov, Multiform, Multivector};
    use crate::products::{
        left_contract, left_contract_form, right_contract, right_contract_vec, scalar_product,
    };

    /// Extended vector operator through the scalar product.
    pub fn epo12(l: &LinearMap<Contra>, phi: &Multiform, x: &Multivector) -> Result<f64> {
        let lhs = scalar_product(phi, x)?;
        let rhs = scalar_product(
            &l.inverse_adjoint()?.extend().apply(phi)?,
            &l.extend().apply(x)?,
        )?;
        Ok((lhs - rhs).abs())
    }

    /// Extended vector operator through the left contraction.
    pub fn epo13(l: &LinearMap<Contra>, phi: &Multiform, x: &Multivector) -> Result<f64> {
        let lhs = l.extend().apply(&left_contract(phi, x)?)?;
        let rhs = left_contract(
            &l.inverse_adjoint()?.extend().apply(phi)?,
            &l.extend().apply(x)?,
        )?;
        Ok(lhs.max_diff(&rhs))
    }

    /// Extended vector operator through the right contraction.
    pub fn epo14(l: &LinearMap<Contra>, phi: &Multiform, x: &Multivector) -> Result<f64> {
        let lhs = l.extend().apply(&right_contract_vec(x, phi)?)?;
        let rhs = right_contract_vec(
            &l.extend().apply(x)?,
            &l.inverse_adjoint()?.extend().apply(phi)?,
        )?;
        Ok(lhs.max_diff(&rhs))
    }

    /// Extended form operator through the scalar product.
    pub fn epo15(l: &LinearMap<Cov>, phi: &Multiform, x: &Multivector) -> Result<f64> {
        let lhs = scalar_product(phi, x)?;
        let rhs = scalar_product(
            &l.extend().apply(phi)?,
            &l.inverse_adjoint()?.extend().apply(x)?,
        )?;
        Ok((lhs - rhs).abs())
    }

    /// Extended form operator through the left contraction (form result).
    pub fn epo16(l: &LinearMap<Cov>, phi: &Multiform, x: &Multivector) -> Result<f64> {
        let lhs = l.extend().apply(&left_contract_form(x, phi)?)?;
        let rhs = left_contract_form(
            &l.inverse_adjoint()?.extend().apply(x)?,
            &l.extend().apply(phi)?,
        )?;
        Ok(lhs.max_diff(&rhs))
    }

    /// Extended form operator through the right contraction (form result).
    pub fn epo17(l: &LinearMap<Cov>, phi: &Multiform, x: &Multivector) -> Result<f64> {
        let lhs = l.extend().apply(&right_contract(phi, x)?)?;
        let rhs = right_contract(
            &l.extend().apply(phi)?,
            &l.inverse_adjoint()?.extend().apply(x)?,
        )?;
        Ok(lhs.max_diff(&rhs))
    }

    /// Generalized vector operator through the scalar product (Leibniz-like
    /// two-term law; the scalar itself is annihilated).
    pub fn gpo12(g: &LinearMap<Contra>, phi: &Multiform, x: &Multivector) -> Result<f64> {
        let lhs = 0.0; // generalized of a scalar
        let gadj = g.adjoint().generalize();
        let rhs = -scalar_product(&gadj.apply(phi)?, x)?
            + scalar_product(phi, &g.generalize().apply(x)?)?;
        Ok((lhs - rhs).abs())
    }

    /// Generalized vector operator through the left contraction.
    pub fn gpo13(g: &LinearMap<Contra>, phi: &Multiform, x: &Multivector) -> Result<f64> {
        let gen = g.generalize();
        let gadj = g.adjoint().generalize();
        let lhs = gen.apply(&left_contract(phi, x)?)?;
        let rhs = left_contract(&gadj.apply(phi)?, x)?
            .scale(-1.0)
            .add(&left_contract(phi, &gen.apply(x)?)?)?;
        Ok(lhs.max_diff(&rhs))
    }

    /// Generalized vector operator through the right contraction.
    pub fn gpo14(g: &LinearMap<Contra>, phi: &Multiform, x: &Multivector) -> Result<f64> {
        let gen = g.generalize();
        let gadj = g.adjoint().generalize();
        let lhs = gen.apply(&right_contract_vec(x, phi)?)?;
        let rhs = right_contract_vec(&gen.apply(x)?, phi)?
            .sub(&right_contract_vec(x, &gadj.apply(phi)?)?)?;
        Ok(lhs.max_diff(&rhs))
    }

    /// Generalized form operator through the scalar product.
    pub fn gpo15(g: &LinearMap<Cov>, phi: &Multiform, x: &Multivector) -> Result<f64> {
        let gadj = g.adjoint().generalize();
        let rhs =
            scalar_product(&g.generalize().apply(phi)?, x)? - scalar_product(phi, &gadj.apply(x)?)?;
        Ok(rhs.abs())
    }

    /// Generalized form operator through the left contraction (form result).
    pub fn gpo16(g: &LinearMap<Cov>, phi: &Multiform, x: &Multivector) -> Result<f64> {
        let gen = g.generalize();
        let gadj = g.adjoint().generalize();
        let lhs = gen.apply(&left_contract_form(x, phi)?)?;
        let rhs = left_contract_form(x, &gen.apply(phi)?)?
            .sub(&left_contract_form(&gadj.apply(x)?, phi)?)?;
        Ok(lhs.max_diff(&rhs))
    }

    /// Generalized form operator through the right contraction (form result).
    pub fn gpo17(g: &LinearMap<Cov>, phi: &Multiform, x: &Multivector) -> Result<f64> {
        let gen = g.generalize();
        let gadj = g.adjoint().generalize();
        let lhs = gen.apply(&right_contract(phi, x)?)?;
        let rhs =
            right_contract(&gen.apply(phi)?, x)?.sub(&right_contract(phi, &gadj.apply(x)?)?)?;
        Ok(lhs.max_diff(&rhs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::{Contra, Multivector};

    fn ctx() -> AlgebraContext {
        AlgebraContext::new(3).unwrap()
    }

    fn mask(idx: &[usize]) -> BladeMask {
        BladeMask::from_indices(idx)
    }

    #[test]
    fn extended_scales_top_blade_by_determinant() {
        let ctx = AlgebraContext::new(2).unwrap();
        let l = LinearMap::<Contra>::diagonal(ctx, &[2.0, 3.0]).unwrap();
        let top = Multivector::basis_blade(ctx, mask(&[0, 1]));
        let out = l.extend().apply(&top).unwrap();
        assert_eq!(out.coeff(mask(&[0, 1])), 6.0);
        assert_eq!(out.support_len(), 1);
        assert!((l.det() - 6.0).abs() < 1e-12);
    }

    #[test]
    fn extended_fixes_scalars() {
        let l = LinearMap::<Contra>::diagonal(ctx(), &[2.0, 3.0, 4.0]).unwrap();
        let alpha = Multivector::scalar(ctx(), 7.5);
        assert!(l.extend().apply(&alpha).unwrap().approx_eq(&alpha));
    }

    #[test]
    fn generalized_identity_scales_by_grade() {
        let g = LinearMap::<Contra>::identity(ctx()).generalize();
        for b in ctx().blades() {
            let x = Multivector::basis_blade(ctx(), b);
            let out = g.apply(&x).unwrap();
            assert!(out.approx_eq(&x.scale(b.grade() as f64)), "blade {:?}", b);
        }
    }

    #[test]
    fn generalized_annihilates_scalars() {
        let g = LinearMap::<Contra>::diagonal(ctx(), &[2.0, 3.0, 4.0])
            .unwrap()
            .generalize();
        let alpha = Multivector::scalar(ctx(), 5.0);
        assert!(g.apply(&alpha).unwrap().is_zero());
    }

    #[test]
    fn adjoint_is_transpose() {
        let ctx = AlgebraContext::new(2).unwrap();
        let l = LinearMap::<Contra>::from_rows(ctx, &[&[1.0, 2.0], &[3.0, 4.0]]).unwrap();
        let a = l.adjoint();
        assert_eq!(a.entry(0, 1), 3.0);
        assert_eq!(a.entry(1, 0), 2.0);
    }

    #[test]
    fn inverse_round_trips() {
        let l = LinearMap::<Contra>::from_rows(
            ctx(),
            &[&[2.0, 1.0, 0.0], &[0.0, 1.0, 3.0], &[1.0, 0.0, 1.0]],
        )
        .unwrap();
        let inv = l.inverse().unwrap();
        let id = l.compose(&inv).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((id.entry(i, j) - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn singular_operator_rejected() {
        let ctx = AlgebraContext::new(2).unwrap();
        let l = LinearMap::<Contra>::from_rows(ctx, &[&[1.0, 2.0], &[2.0, 4.0]]).unwrap();
        assert_eq!(l.inverse().unwrap_err(), Error::SingularOperator);
        assert!(!l.is_invertible());
    }

    #[test]
    fn apply_vector_rejects_higher_grades() {
        let l = LinearMap::<Contra>::identity(ctx());
        let x = Multivector::basis_blade(ctx(), mask(&[0, 1]));
        assert_eq!(l.apply_vector(&x).unwrap_err(), Error::NotAVector);
    }

    #[test]
    fn lifted_operators_commute_with_duality_adjoint() {
        let l = LinearMap::<Contra>::from_rows(
            ctx(),
            &[&[1.0, 2.0, 0.0], &[0.0, 1.0, -1.0], &[3.0, 0.0, 2.0]],
        )
        .unwrap();
        assert!(extended_adjoint_commutes(&l) < 1e-9);
        assert!(generalized_adjoint_commutes(&l) < 1e-9);
    }

    #[test]
    fn extended_is_multiplicative_on_blades() {
        let l = LinearMap::<Contra>::from_rows(
            ctx(),
            &[&[1.0, 2.0, 0.0], &[0.0, 1.0, -1.0], &[3.0, 0.0, 2.0]],
        )
        .unwrap();
        let lifted = l.extend();
        let a = Multivector::basis_blade(ctx(), mask(&[0]));
        let b = Multivector::basis_blade(ctx(), mask(&[1, 2]));
        let lhs = lifted.apply(&a.wedge(&b).unwrap()).unwrap();
        let rhs = lifted
            .apply(&a)
            .unwrap()
            .wedge(&lifted.apply(&b).unwrap())
            .unwrap();
        assert!(lhs.approx_eq(&rhs));
    }

    #[test]
    fn generalized_satisfies_leibniz_on_blades() {
        let g = LinearMap::<Contra>::from_rows(
            ctx(),
            &[&[1.0, 2.0, 0.0], &[0.0, 1.0, -1.0], &[3.0, 0.0, 2.0]],
        )
        .unwrap()
        .generalize();
        let a = Multivector::basis_blade(ctx(), mask(&[0]));
        let b = Multivector::basis_blade(ctx(), mask(&[1, 2]));
        let lhs = g.apply(&a.wedge(&b).unwrap()).unwrap();
        let rhs = g
            .apply(&a)
            .unwrap()
            .wedge(&b)
            .unwrap()
            .add(&a.wedge(&g.apply(&b).unwrap()).unwrap())
            .unwrap();
        assert!(lhs.approx_eq(&rhs));
    }
}
