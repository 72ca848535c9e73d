//! Brute-force reference implementation over full antisymmetric tensor
//! components.
//!
//! Everything here works on dense `n^p` component arrays and literal
//! dual-basis summation formulas, deriving every permutation sign from
//! scratch. It deliberately shares no blade combinatorics with the sparse
//! kernel, so the two can cross-check each other. Performance is a
//! non-goal; intended for `n <= 6`.

use alloc::vec::Vec;

use crate::algebra::{AlgebraContext, BladeMask, Error, Result};
use crate::exterior::{Contra, Cov, Exterior, Kind, Multiform, Multivector, Variance};
use crate::operator::LinearMap;

/// Sign of the permutation sorting `tuple`, or 0 if any index repeats.
/// Counted by explicit inversion enumeration.
fn tuple_sign(tuple: &[usize]) -> f64 {
    let mut inversions = 0usize;
    for i in 0..tuple.len() {
        for j in i + 1..tuple.len() {
            if tuple[i] == tuple[j] {
                return 0.0;
            }
            if tuple[i] > tuple[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// A homogeneous exterior value as a full grade-`p` component array,
/// indexed by arbitrary (not only sorted) index tuples.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorRep {
    ctx: AlgebraContext,
    grade: usize,
    kind: Kind,
    /// `n^p` components in row-major tuple order.
    data: Vec<f64>,
}

impl TensorRep {
    pub fn new(ctx: AlgebraContext, grade: usize, kind: Kind, data: Vec<f64>) -> Result<Self> {
        let n = ctx.dim();
        if data.len() != n.pow(grade as u32) {
            return Err(Error::LengthMismatch);
        }
        let t = TensorRep {
            ctx,
            grade,
            kind,
            data,
        };
        t.check_antisymmetry()?;
        Ok(t)
    }

    pub fn zero(ctx: AlgebraContext, grade: usize, kind: Kind) -> Self {
        let n = ctx.dim();
        TensorRep {
            ctx,
            grade,
            kind,
            data: alloc::vec![0.0; n.pow(grade as u32)],
        }
    }

    pub fn ctx(&self) -> AlgebraContext {
        self.ctx
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    fn index_of(&self, tuple: &[usize]) -> usize {
        let n = self.ctx.dim();
        tuple.iter().fold(0, |acc, &j| acc * n + j)
    }

    pub fn component(&self, tuple: &[usize]) -> f64 {
        self.data[self.index_of(tuple)]
    }

    fn set_component(&mut self, tuple: &[usize], value: f64) {
        let i = self.index_of(tuple);
        self.data[i] = value;
    }

    /// Every index tuple of length `grade`, each entry in `0..n`.
    fn tuples(n: usize, p: usize) -> Vec<Vec<usize>> {
        let mut out = alloc::vec![Vec::new()];
        for _ in 0..p {
            let mut next = Vec::with_capacity(out.len() * n);
            for t in &out {
                for j in 0..n {
                    let mut u = t.clone();
                    u.push(j);
                    next.push(u);
                }
            }
            out = next;
        }
        out
    }

    fn check_antisymmetry(&self) -> Result<()> {
        let n = self.ctx.dim();
        for tuple in Self::tuples(n, self.grade) {
            let c = self.component(&tuple);
            for a in 0..self.grade {
                for b in a + 1..self.grade {
                    let mut swapped = tuple.clone();
                    swapped.swap(a, b);
                    let want = if tuple[a] == tuple[b] { 0.0 } else { -c };
                    if (self.component(&swapped) - want).abs() > 1e-9 {
                        return Err(Error::NotHomogeneous);
                    }
                }
            }
        }
        Ok(())
    }

    /// Reversion: arguments in reversed order.
    pub fn reverse(&self) -> TensorRep {
        let n = self.ctx.dim();
        let mut out = TensorRep::zero(self.ctx, self.grade, self.kind);
        for tuple in Self::tuples(n, self.grade) {
            let mut rev = tuple.clone();
            rev.reverse();
            out.set_component(&tuple, self.component(&rev));
        }
        out
    }

    pub fn scale(&self, s: f64) -> TensorRep {
        TensorRep {
            ctx: self.ctx,
            grade: self.grade,
            kind: self.kind,
            data: self.data.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &TensorRep) -> Result<TensorRep> {
        if self.ctx != other.ctx || self.grade != other.grade || self.kind != other.kind {
            return Err(Error::CtxMismatch);
        }
        Ok(TensorRep {
            ctx: self.ctx,
            grade: self.grade,
            kind: self.kind,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Exterior product in the shuffle convention: sum over index shuffles,
    /// no factorial normalization, so integer components stay integers.
    pub fn wedge(&self, other: &TensorRep) -> Result<TensorRep> {
        if self.ctx != other.ctx || self.kind != other.kind {
            return Err(Error::CtxMismatch);
        }
        let n = self.ctx.dim();
        let (a, b) = (self.grade, other.grade);
        if a + b > n {
            return Ok(TensorRep::zero(self.ctx, 0, self.kind));
        }
        let mut out = TensorRep::zero(self.ctx, a + b, self.kind);
        let shuffles = position_subsets(a + b, a);
        // precompute the merge sign of each shuffle: inversions between the
        // chosen (left) and remaining (right) positions
        let signed: Vec<(Vec<usize>, Vec<usize>, f64)> = shuffles
            .iter()
            .map(|chosen| {
                let rest: Vec<usize> = (0..a + b).filter(|p| !chosen.contains(p)).collect();
                let mut swaps = 0usize;
                for &c in chosen {
                    swaps += rest.iter().filter(|&&r| r < c).count();
                }
                let sign = if swaps.is_multiple_of(2) { 1.0 } else { -1.0 };
                (chosen.clone(), rest, sign)
            })
            .collect();
        let mut tuple = alloc::vec![0usize; a + b];
        let mut left = alloc::vec![0usize; a];
        let mut right = alloc::vec![0usize; b];
        for flat in 0..out.data.len() {
            let mut rem = flat;
            for slot in (0..a + b).rev() {
                tuple[slot] = rem % n;
                rem /= n;
            }
            let mut acc = 0.0;
            for (chosen, rest, sign) in &signed {
                for (k, &p) in chosen.iter().enumerate() {
                    left[k] = tuple[p];
                }
                for (k, &p) in rest.iter().enumerate() {
                    right[k] = tuple[p];
                }
                acc += sign * self.component(&left) * other.component(&right);
            }
            out.data[flat] = acc;
        }
        Ok(out)
    }

    fn is_zero(&self) -> bool {
        self.data.iter().all(|&c| c == 0.0)
    }

    /// A coordinate basis 1-element: the `j`-th basis vector or form of the
    /// standard frame.
    pub fn basis_one(ctx: AlgebraContext, kind: Kind, j: usize) -> TensorRep {
        let mut t = TensorRep::zero(ctx, 1, kind);
        t.set_component(&[j], 1.0);
        t
    }
}

/// All `k`-element subsets of positions `0..m`, ascending.
fn position_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, m: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..m {
            current.push(i);
            rec(i + 1, m, k, current, out);
            current.pop();
        }
    }
    rec(0, m, k, &mut current, &mut out);
    out
}

/// Grade-`p` part of a sparse value as a tensor: each sorted blade is
/// spread over all permutations of its index tuple with permutation signs.
pub fn to_tensor<K: Variance>(x: &Exterior<K>, grade: usize) -> TensorRep {
    let ctx = x.ctx();
    let mut out = TensorRep::zero(ctx, grade, K::KIND);
    for tuple in TensorRep::tuples(ctx.dim(), grade) {
        let sign = tuple_sign(&tuple);
        if sign == 0.0 {
            continue;
        }
        let mask = BladeMask::from_indices(&tuple);
        let c = x.coeff(mask);
        if mask.grade() == grade && c != 0.0 {
            out.set_component(&tuple, sign * c);
        }
    }
    out
}

/// Back to the sparse representation: the coefficient of each sorted blade
/// is the component at its ascending index tuple.
pub fn from_tensor<K: Variance>(t: &TensorRep) -> Result<Exterior<K>> {
    if t.kind != K::KIND {
        return Err(Error::VarianceMismatch);
    }
    let ctx = t.ctx;
    let mut out = Exterior::zero(ctx);
    for tuple in sorted_tuples(ctx.dim(), t.grade) {
        out.add_term(BladeMask::from_indices(&tuple), t.component(&tuple));
    }
    Ok(out)
}

/// Strictly ascending index tuples, i.e. the sorted representatives.
fn sorted_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    position_subsets(n, k)
}

/// Literal scalar product of two homogeneous grade-`p` tensors: the full
/// `n^p` tuple loop with the `1/p!` factor.
fn tensor_pairing(phi: &TensorRep, x: &TensorRep) -> f64 {
    debug_assert_eq!(phi.grade, x.grade);
    if phi.grade == 0 {
        return phi.component(&[]) * x.component(&[]);
    }
    // the data arrays enumerate exactly the n^p tuples in the same order
    let acc: f64 = phi.data.iter().zip(&x.data).map(|(a, b)| a * b).sum();
    acc / factorial(phi.grade)
}

/// A dual pair of frames: `vectors[j]` and `forms[j]` with
/// `forms[i](vectors[j]) = delta_ij`. Used to check that the dual-basis
/// summation formulas do not depend on the frame choice.
#[derive(Debug, Clone)]
pub struct Frame {
    vectors: Vec<TensorRep>,
    forms: Vec<TensorRep>,
}

impl Frame {
    pub fn standard(ctx: AlgebraContext) -> Frame {
        let n = ctx.dim();
        Frame {
            vectors: (0..n)
                .map(|j| TensorRep::basis_one(ctx, Kind::Vector, j))
                .collect(),
            forms: (0..n)
                .map(|j| TensorRep::basis_one(ctx, Kind::Form, j))
                .collect(),
        }
    }

    /// Frame with vectors `m(e_j)` and the reciprocal forms given by the
    /// inverse adjoint of `m`.
    pub fn from_map(m: &LinearMap<Contra>) -> Result<Frame> {
        let ctx = m.ctx();
        let n = ctx.dim();
        let co = m.inverse_adjoint()?;
        let mut vectors = Vec::with_capacity(n);
        let mut forms = Vec::with_capacity(n);
        for j in 0..n {
            let mut v = TensorRep::zero(ctx, 1, Kind::Vector);
            let mut f = TensorRep::zero(ctx, 1, Kind::Form);
            for i in 0..n {
                v.set_component(&[i], m.entry(i, j));
                f.set_component(&[i], co.entry(i, j));
            }
            vectors.push(v);
            forms.push(f);
        }
        Ok(Frame { vectors, forms })
    }

    fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Wedge of the frame elements selected by `tuple`, on the given side.
    fn blade(&self, kind: Kind, tuple: &[usize]) -> TensorRep {
        let side = match kind {
            Kind::Vector => &self.vectors,
            Kind::Form => &self.forms,
        };
        let ctx = side[0].ctx;
        let mut acc = {
            let mut t = TensorRep::zero(ctx, 0, kind);
            t.set_component(&[], 1.0);
            t
        };
        for &j in tuple {
            acc = acc.wedge(&side[j]).unwrap();
        }
        acc
    }
}

/// Eq.-style duality scalar product: grade by grade, full tuple loops.
pub fn oracle_scalar_product(phi: &Multiform, x: &Multivector) -> Result<f64> {
    phi.check_ctx(x.ctx())?;
    let n = x.ctx().dim();
    let mut acc = 0.0;
    for p in 0..=n {
        acc += tensor_pairing(&to_tensor(phi, p), &to_tensor(x, p));
    }
    Ok(acc)
}

/// Shared worker for the four contraction oracles. Computes, per grade pair
/// `(p, q)` with `p <= q`, the sorted-tuple reduction of the dual-basis
/// sum: the summand is jointly symmetric in the tuple indices, so the sum
/// over all `(q-p)`-tuples is `(q-p)!` times the sum over ascending tuples
/// and the factorial cancels exactly.
fn contract_oracle<KS, KB>(
    small: &Exterior<KS>,
    big: &Exterior<KB>,
    frame: &Frame,
    reverse_small: bool,
) -> Result<Exterior<KB>>
where
    KS: Variance,
    KB: Variance,
{
    small.check_ctx(big.ctx())?;
    if KS::KIND == KB::KIND {
        return Err(Error::VarianceMismatch);
    }
    let ctx = big.ctx();
    let n = ctx.dim();
    let mut out = Exterior::<KB>::zero(ctx);
    for p in 0..=n {
        let mut s = to_tensor(small, p);
        if s.is_zero() {
            continue;
        }
        if reverse_small {
            s = s.reverse();
        }
        for q in p..=n {
            let b = to_tensor(big, q);
            if b.is_zero() {
                continue;
            }
            let k = q - p;
            let mut acc = TensorRep::zero(ctx, k, KB::KIND);
            for tuple in sorted_tuples(n, k) {
                // pairing partner blade built from the opposite-side frame
                let partner = s.wedge(&frame.blade(KS::KIND, &tuple))?;
                let c = tensor_pairing_any(&partner, &b);
                if c != 0.0 {
                    acc = acc.add(&frame.blade(KB::KIND, &tuple).scale(c))?;
                }
            }
            out = out.add(&from_tensor(&acc)?)?;
        }
    }
    Ok(out)
}

/// Pairing of two same-grade tensors regardless of which side is the form.
fn tensor_pairing_any(a: &TensorRep, b: &TensorRep) -> f64 {
    tensor_pairing(a, b)
}

/// Left contraction of a multiform with a multivector, by the literal
/// dual-basis formula (with the reversion on the contractor).
pub fn oracle_left_contract(phi: &Multiform, x: &Multivector) -> Result<Multivector> {
    oracle_left_contract_in_frame(phi, x, &Frame::standard(x.ctx()))
}

pub fn oracle_left_contract_in_frame(
    phi: &Multiform,
    x: &Multivector,
    frame: &Frame,
) -> Result<Multivector> {
    contract_oracle(phi, x, frame, true)
}

/// Left contraction of a multivector with a multiform.
pub fn oracle_left_contract_form(x: &Multivector, phi: &Multiform) -> Result<Multiform> {
    oracle_left_contract_form_in_frame(x, phi, &Frame::standard(x.ctx()))
}

pub fn oracle_left_contract_form_in_frame(
    x: &Multivector,
    phi: &Multiform,
    frame: &Frame,
) -> Result<Multiform> {
    contract_oracle(x, phi, frame, true)
}

/// Right contraction worker: the small side sits at the tail of the
/// pairing partner and carries the reversion.
fn right_contract_oracle<KS, KB>(
    big: &Exterior<KB>,
    small: &Exterior<KS>,
    frame: &Frame,
) -> Result<Exterior<KB>>
where
    KS: Variance,
    KB: Variance,
{
    small.check_ctx(big.ctx())?;
    if KS::KIND == KB::KIND {
        return Err(Error::VarianceMismatch);
    }
    let ctx = big.ctx();
    let n = ctx.dim();
    let mut out = Exterior::<KB>::zero(ctx);
    for q in 0..=n {
        let s = to_tensor(small, q);
        if s.is_zero() {
            continue;
        }
        let s = s.reverse();
        for p in q..=n {
            let b = to_tensor(big, p);
            if b.is_zero() {
                continue;
            }
            let k = p - q;
            let mut acc = TensorRep::zero(ctx, k, KB::KIND);
            for tuple in sorted_tuples(n, k) {
                let partner = frame.blade(KS::KIND, &tuple).wedge(&s)?;
                let c = tensor_pairing_any(&b, &partner);
                if c != 0.0 {
                    acc = acc.add(&frame.blade(KB::KIND, &tuple).scale(c))?;
                }
            }
            out = out.add(&from_tensor(&acc)?)?;
        }
    }
    Ok(out)
}

/// Right contraction of a multiform with a multivector (multiform result).
pub fn oracle_right_contract(phi: &Multiform, x: &Multivector) -> Result<Multiform> {
    oracle_right_contract_in_frame(phi, x, &Frame::standard(x.ctx()))
}

pub fn oracle_right_contract_in_frame(
    phi: &Multiform,
    x: &Multivector,
    frame: &Frame,
) -> Result<Multiform> {
    right_contract_oracle(phi, x, frame)
}

/// Right contraction of a multivector with a multiform (multivector result).
pub fn oracle_right_contract_vec(x: &Multivector, phi: &Multiform) -> Result<Multivector> {
    oracle_right_contract_vec_in_frame(x, phi, &Frame::standard(x.ctx()))
}

pub fn oracle_right_contract_vec_in_frame(
    x: &Multivector,
    phi: &Multiform,
    frame: &Frame,
) -> Result<Multivector> {
    right_contract_oracle(x, phi, frame)
}

/// Extension of a vector operator to the whole algebra by the literal
/// dual-basis formula: scalar part plus, for each grade, the sorted-tuple
/// reduction of the `1/k!` sum of paired coefficients times wedged images.
pub fn oracle_extend(l: &LinearMap<Contra>, x: &Multivector) -> Result<Multivector> {
    oracle_extend_in_frame(l, x, &Frame::standard(x.ctx()))
}

pub fn oracle_extend_in_frame(
    l: &LinearMap<Contra>,
    x: &Multivector,
    frame: &Frame,
) -> Result<Multivector> {
    x.check_ctx(l.ctx())?;
    let ctx = x.ctx();
    let n = ctx.dim();
    if frame.dim() != n {
        return Err(Error::LengthMismatch);
    }
    // images of the frame vectors under the base operator
    let images: Vec<TensorRep> = (0..n)
        .map(|j| apply_matrix_vec(l, &frame.vectors[j]))
        .collect();
    let mut out = Multivector::scalar(ctx, x.scalar_part());
    for k in 1..=n {
        let xk = to_tensor(x, k);
        if xk.is_zero() {
            continue;
        }
        let mut acc = TensorRep::zero(ctx, k, Kind::Vector);
        for tuple in sorted_tuples(n, k) {
            let c = tensor_pairing_any(&frame.blade(Kind::Form, &tuple), &xk);
            if c != 0.0 {
                let mut img = {
                    let mut t = TensorRep::zero(ctx, 0, Kind::Vector);
                    t.set_component(&[], 1.0);
                    t
                };
                for &j in &tuple {
                    img = img.wedge(&images[j])?;
                }
                acc = acc.add(&img.scale(c))?;
            }
        }
        out = out.add(&from_tensor(&acc)?)?;
    }
    Ok(out)
}

/// Mirror extension for an operator on `V*`.
pub fn oracle_extend_form(m: &LinearMap<Cov>, phi: &Multiform) -> Result<Multiform> {
    oracle_extend_form_in_frame(m, phi, &Frame::standard(phi.ctx()))
}

pub fn oracle_extend_form_in_frame(
    m: &LinearMap<Cov>,
    phi: &Multiform,
    frame: &Frame,
) -> Result<Multiform> {
    phi.check_ctx(m.ctx())?;
    let ctx = phi.ctx();
    let n = ctx.dim();
    let images: Vec<TensorRep> = (0..n)
        .map(|j| apply_matrix_form(m, &frame.forms[j]))
        .collect();
    let mut out = Multiform::scalar(ctx, phi.scalar_part());
    for k in 1..=n {
        let pk = to_tensor(phi, k);
        if pk.is_zero() {
            continue;
        }
        let mut acc = TensorRep::zero(ctx, k, Kind::Form);
        for tuple in sorted_tuples(n, k) {
            let c = tensor_pairing_any(&frame.blade(Kind::Vector, &tuple), &pk);
            if c != 0.0 {
                let mut img = {
                    let mut t = TensorRep::zero(ctx, 0, Kind::Form);
                    t.set_component(&[], 1.0);
                    t
                };
                for &j in &tuple {
                    img = img.wedge(&images[j])?;
                }
                acc = acc.add(&img.scale(c))?;
            }
        }
        out = out.add(&from_tensor(&acc)?)?;
    }
    Ok(out)
}

fn apply_matrix_vec(l: &LinearMap<Contra>, v: &TensorRep) -> TensorRep {
    let ctx = l.ctx();
    let n = ctx.dim();
    let mut out = TensorRep::zero(ctx, 1, Kind::Vector);
    for i in 0..n {
        let mut acc = 0.0;
        for j in 0..n {
            acc += l.entry(i, j) * v.component(&[j]);
        }
        out.set_component(&[i], acc);
    }
    out
}

fn apply_matrix_form(m: &LinearMap<Cov>, f: &TensorRep) -> TensorRep {
    let ctx = m.ctx();
    let n = ctx.dim();
    let mut out = TensorRep::zero(ctx, 1, Kind::Form);
    for i in 0..n {
        let mut acc = 0.0;
        for j in 0..n {
            acc += m.entry(i, j) * f.component(&[j]);
        }
        out.set_component(&[i], acc);
    }
    out
}

/// Generalization of a vector operator: the literal one-index sum of wedges
/// of operator images with left contractions by the reciprocal frame.
pub fn oracle_generalize(g: &LinearMap<Contra>, x: &Multivector) -> Result<Multivector> {
    oracle_generalize_in_frame(g, x, &Frame::standard(x.ctx()))
}

pub fn oracle_generalize_in_frame(
    g: &LinearMap<Contra>,
    x: &Multivector,
    frame: &Frame,
) -> Result<Multivector> {
    x.check_ctx(g.ctx())?;
    let ctx = x.ctx();
    let n = ctx.dim();
    let mut out = Multivector::zero(ctx);
    for j in 0..n {
        let form_j = from_tensor::<Cov>(&frame.forms[j])?;
        let contracted = oracle_left_contract_in_frame(&form_j, x, frame)?;
        let image = apply_matrix_vec(g, &frame.vectors[j]);
        // wedge the grade-1 image with each homogeneous part
        for k in 0..=n.saturating_sub(1) {
            let part = to_tensor(&contracted, k);
            if part.is_zero() {
                continue;
            }
            let term = image.wedge(&part)?;
            out = out.add(&from_tensor(&term)?)?;
        }
    }
    Ok(out)
}

/// Mirror generalization for an operator on `V*`.
pub fn oracle_generalize_form(m: &LinearMap<Cov>, phi: &Multiform) -> Result<Multiform> {
    oracle_generalize_form_in_frame(m, phi, &Frame::standard(phi.ctx()))
}

pub fn oracle_generalize_form_in_frame(
    m: &LinearMap<Cov>,
    phi: &Multiform,
    frame: &Frame,
) -> Result<Multiform> {
    phi.check_ctx(m.ctx())?;
    let ctx = phi.ctx();
    let n = ctx.dim();
    let mut out = Multiform::zero(ctx);
    for j in 0..n {
        let vec_j = from_tensor::<Contra>(&frame.vectors[j])?;
        let contracted = oracle_left_contract_form_in_frame(&vec_j, phi, frame)?;
        let image = apply_matrix_form(m, &frame.forms[j]);
        for k in 0..=n.saturating_sub(1) {
            let part = to_tensor(&contracted, k);
            if part.is_zero() {
                continue;
            }
            let term = image.wedge(&part)?;
            out = out.add(&from_tensor(&term)?)?;
        }
    }
    Ok(out)
}
