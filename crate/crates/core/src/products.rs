//! Duality scalar product and the left/right contracted products.
//!
//! The scalar pairing of a multiform with a multivector is metric-free: in
//! the sorted-blade representation it is the coefficient-wise dot product,
//! and cross-grade pairs contribute zero. The contractions are computed by a
//! direct blade-combinatorial rule (subset complement, merge sign, reversion
//! sign); the literal dual-basis summation formulas live in the `oracle`
//! module and the equivalence of the two routes is enforced by tests.
//!
//! Convention note: the grade-equal case of both contractions carries a
//! reversion on the contractor (`<~F_p, X^p>`), which differs by a sign
//! pattern from conventions found elsewhere in the literature. No convention
//! switch is offered.

use crate::algebra::{merge_sign, reversion_sign, AlgebraContext, BladeMask, Error, Result};
use crate::exterior::{Exterior, Multiform, Multivector, Variance};

/// Duality scalar product `<F, X>`. Symmetric: `scalar_product_vf(X, F)`
/// returns the same value.
pub fn scalar_product(phi: &Multiform, x: &Multivector) -> Result<f64> {
    pairing(phi, x)
}

/// Symmetric entry point taking the multivector first.
pub fn scalar_product_vf(x: &Multivector, phi: &Multiform) -> Result<f64> {
    pairing(phi, x)
}

fn pairing<K: Variance>(a: &Exterior<K>, b: &Exterior<K::Dual>) -> Result<f64> {
    a.check_ctx(b.ctx())?;
    // iterate the smaller support
    let mut acc = 0.0;
    if a.support_len() <= b.support_len() {
        for (m, c) in a.terms() {
            acc += c * b.coeff(m);
        }
    } else {
        for (m, c) in b.terms() {
            acc += c * a.coeff(m);
        }
    }
    Ok(acc)
}

/// Determinant cross-check for the pairing of simple blades: returns
/// `det [ w^i(v_j) ]` for lists of 1-forms and vectors of equal length.
pub fn scalar_product_det_oracle(forms: &[Multiform], vectors: &[Multivector]) -> Result<f64> {
    if forms.is_empty() || forms.len() != vectors.len() {
        return Err(Error::LengthMismatch);
    }
    let ctx = forms[0].ctx();
    let p = forms.len();
    if p > ctx.dim() {
        return Err(Error::GradeOutOfRange(p));
    }
    let mut matrix = alloc::vec![0.0f64; p * p];
    for (i, w) in forms.iter().enumerate() {
        w.check_ctx(ctx)?;
        if !w.is_zero() && w.grades() != crate::algebra::GradeSet::singleton(1) {
            return Err(Error::NotAVector);
        }
        for (j, v) in vectors.iter().enumerate() {
            v.check_ctx(ctx)?;
            if !v.is_zero() && v.grades() != crate::algebra::GradeSet::singleton(1) {
                return Err(Error::NotAVector);
            }
            matrix[i * p + j] = pairing(w, v)?;
        }
    }
    Ok(det_cofactor(&matrix, p))
}

/// Determinant by cofactor expansion along the first row. Exponential in the
/// matrix size, but exact on integer entries, which Gaussian elimination is
/// not; only used by the oracle where the matrix is at most `dim` wide.
fn det_cofactor(m: &[f64], p: usize) -> f64 {
    if p == 0 {
        return 1.0;
    }
    if p == 1 {
        return m[0];
    }
    let mut det = 0.0;
    let mut minor = alloc::vec![0.0f64; (p - 1) * (p - 1)];
    for col in 0..p {
        if m[col] == 0.0 {
            continue;
        }
        for row in 1..p {
            let mut k = 0;
            for j in 0..p {
                if j != col {
                    minor[(row - 1) * (p - 1) + k] = m[row * p + j];
                    k += 1;
                }
            }
        }
        let sign = if col % 2 == 0 { 1.0 } else { -1.0 };
        det += sign * m[col] * det_cofactor(&minor, p - 1);
    }
    det
}

/// Determinant by Gaussian elimination with partial pivoting.
pub(crate) fn det_in_place(m: &mut [f64], p: usize) -> f64 {
    let mut det = 1.0;
    for col in 0..p {
        let mut pivot = col;
        for row in col + 1..p {
            if m[row * p + col].abs() > m[pivot * p + col].abs() {
                pivot = row;
            }
        }
        if m[pivot * p + col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for k in 0..p {
                m.swap(pivot * p + k, col * p + k);
            }
            det = -det;
        }
        let d = m[col * p + col];
        det *= d;
        for row in col + 1..p {
            let factor = m[row * p + col] / d;
            if factor != 0.0 {
                for k in col..p {
                    m[row * p + k] -= factor * m[col * p + k];
                }
            }
        }
    }
    det
}

/// Blade rule shared by the four contractions. For a contractor blade `A`
/// inside a blade `B`, the left contraction sends `B` to
/// `rev(|A|) * sign(A, B\A) * blade(B\A)`; the right contraction keeps the
/// complement on the contractor side instead.
fn contract_into<KOut: Variance>(
    ctx: AlgebraContext,
    contractor: impl Iterator<Item = (BladeMask, f64)>,
    target: &[(BladeMask, f64)],
    left: bool,
) -> Exterior<KOut> {
    let mut out = Exterior::<KOut>::zero(ctx);
    for (a, ca) in contractor {
        for &(b, cb) in target {
            if left {
                // <A, B| : requires A subset of B, result blade B \ A
                if b.contains(a) {
                    let rest = b.difference(a);
                    let s = reversion_sign(a.grade()) * merge_sign(a, rest);
                    out.add_term(rest, s * ca * cb);
                }
            } else {
                // |A, B> : requires B subset of A, result blade A \ B
                if a.contains(b) {
                    let rest = a.difference(b);
                    let s = reversion_sign(b.grade()) * merge_sign(rest, b);
                    out.add_term(rest, s * ca * cb);
                }
            }
        }
    }
    out
}

fn collect<K: Variance>(x: &Exterior<K>) -> alloc::vec::Vec<(BladeMask, f64)> {
    x.terms().collect()
}

/// Left contracted product `<F, X|` of a multiform with a multivector; the
/// result is a multivector.
pub fn left_contract(phi: &Multiform, x: &Multivector) -> Result<Multivector> {
    phi.check_ctx(x.ctx())?;
    Ok(contract_into(phi.ctx(), phi.terms(), &collect(x), true))
}

/// Left contracted product `<X, F|` of a multivector with a multiform; the
/// result is a multiform.
pub fn left_contract_form(x: &Multivector, phi: &Multiform) -> Result<Multiform> {
    x.check_ctx(phi.ctx())?;
    Ok(contract_into(x.ctx(), x.terms(), &collect(phi), true))
}

/// Right contracted product `|F, X>` of a multiform with a multivector; the
/// result is a multiform.
pub fn right_contract(phi: &Multiform, x: &Multivector) -> Result<Multiform> {
    phi.check_ctx(x.ctx())?;
    Ok(contract_into(phi.ctx(), phi.terms(), &collect(x), false))
}

/// Right contracted product `|X, F>` of a multivector with a multiform; the
/// result is a multivector.
pub fn right_contract_vec(x: &Multivector, phi: &Multiform) -> Result<Multivector> {
    x.check_ctx(phi.ctx())?;
    Ok(contract_into(x.ctx(), x.terms(), &collect(phi), false))
}
