//! Multilinear extensors: maps with multivector and multiform slots, valued
//! in a graded subspace of either exterior algebra.
//!
//! Extensors are tabulated eagerly on the basis blades of their slot
//! subspaces, which makes equality decidable and gives the duality adjoint
//! and the lifted operator actions a direct finite formula.

use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{AlgebraContext, BladeMask, Error, GradeSet, Result};
use crate::exterior::{Kind, Multiform, Multivector};
use crate::operator::LinearMap;
use crate::products::{
    left_contract, left_contract_form, right_contract, right_contract_vec, scalar_product,
};

/// A runtime-variance exterior value, the output of an extensor.
#[derive(Clone, PartialEq)]
pub enum Value {
    Vector(Multivector),
    Form(Multiform),
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Vector(x) => write!(f, "Vector({})", x),
            Value::Form(x) => write!(f, "Form({})", x),
        }
    }
}

impl Value {
    pub fn kind(&self) -> Kind {
        match self {
            Value::Vector(_) => Kind::Vector,
            Value::Form(_) => Kind::Form,
        }
    }

    pub fn zero(ctx: AlgebraContext, kind: Kind) -> Value {
        match kind {
            Kind::Vector => Value::Vector(Multivector::zero(ctx)),
            Kind::Form => Value::Form(Multiform::zero(ctx)),
        }
    }

    pub fn ctx(&self) -> AlgebraContext {
        match self {
            Value::Vector(x) => x.ctx(),
            Value::Form(x) => x.ctx(),
        }
    }

    pub fn as_vector(&self) -> Result<&Multivector> {
        match self {
            Value::Vector(x) => Ok(x),
            Value::Form(_) => Err(Error::VarianceMismatch),
        }
    }

    pub fn as_form(&self) -> Result<&Multiform> {
        match self {
            Value::Form(x) => Ok(x),
            Value::Vector(_) => Err(Error::VarianceMismatch),
        }
    }

    pub fn scale(&self, s: f64) -> Value {
        match self {
            Value::Vector(x) => Value::Vector(x.scale(s)),
            Value::Form(x) => Value::Form(x.scale(s)),
        }
    }

    pub fn add(&self, other: &Value) -> Result<Value> {
        match (self, other) {
            (Value::Vector(a), Value::Vector(b)) => Ok(Value::Vector(a.add(b)?)),
            (Value::Form(a), Value::Form(b)) => Ok(Value::Form(a.add(b)?)),
            _ => Err(Error::VarianceMismatch),
        }
    }

    pub fn gradeset_part(&self, gs: GradeSet) -> Value {
        match self {
            Value::Vector(x) => Value::Vector(x.gradeset_part(gs)),
            Value::Form(x) => Value::Form(x.gradeset_part(gs)),
        }
    }

    pub fn max_diff(&self, other: &Value) -> f64 {
        match (self, other) {
            (Value::Vector(a), Value::Vector(b)) => a.max_diff(b),
            (Value::Form(a), Value::Form(b)) => a.max_diff(b),
            _ => f64::INFINITY,
        }
    }

    fn wedge(&self, other: &Value) -> Result<Value> {
        match (self, other) {
            (Value::Vector(a), Value::Vector(b)) => Ok(Value::Vector(a.wedge(b)?)),
            (Value::Form(a), Value::Form(b)) => Ok(Value::Form(a.wedge(b)?)),
            _ => Err(Error::VarianceMismatch),
        }
    }
}

/// Shape of an extensor: slot subspaces, output variance, output subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensorSignature {
    pub ctx: AlgebraContext,
    pub vector_slots: Vec<GradeSet>,
    pub form_slots: Vec<GradeSet>,
    pub output_kind: Kind,
    pub output_grades: GradeSet,
}

impl ExtensorSignature {
    pub fn new(
        ctx: AlgebraContext,
        vector_slots: Vec<GradeSet>,
        form_slots: Vec<GradeSet>,
        output_kind: Kind,
        output_grades: GradeSet,
    ) -> Result<Self> {
        for gs in vector_slots.iter().chain(form_slots.iter()) {
            gs.validate(&ctx)?;
        }
        output_grades.validate(&ctx)?;
        Ok(ExtensorSignature {
            ctx,
            vector_slots,
            form_slots,
            output_kind,
            output_grades,
        })
    }

    pub fn arity(&self) -> usize {
        self.vector_slots.len() + self.form_slots.len()
    }

    /// All slot grade sets in key order (vector slots first).
    pub fn slots(&self) -> impl Iterator<Item = &GradeSet> {
        self.vector_slots.iter().chain(self.form_slots.iter())
    }

    /// Number of table keys: the product of the slot subspace dimensions.
    pub fn table_len(&self) -> usize {
        self.slots().map(|gs| gs.subspace_dim(&self.ctx)).product()
    }

    /// Dimension of the extensor space: table keys times the output
    /// subspace dimension.
    pub fn space_dim(&self) -> usize {
        self.table_len() * self.output_grades.subspace_dim(&self.ctx)
    }

    fn slot_blades(&self, gs: GradeSet) -> Vec<BladeMask> {
        self.ctx
            .blades()
            .filter(|b| gs.contains(b.grade()))
            .collect()
    }

    /// Every table key, in lexicographic order over the per-slot blade lists.
    pub fn keys(&self) -> Vec<Vec<BladeMask>> {
        let slot_lists: Vec<Vec<BladeMask>> =
            self.slots().map(|&gs| self.slot_blades(gs)).collect();
        let mut keys = alloc::vec![Vec::new()];
        for list in &slot_lists {
            let mut next = Vec::with_capacity(keys.len() * list.len());
            for key in &keys {
                for &b in list {
                    let mut k = key.clone();
                    k.push(b);
                    next.push(k);
                }
            }
            keys = next;
        }
        keys
    }
}

/// A tabulated multilinear extensor.
#[derive(Debug, Clone, PartialEq)]
pub struct Extensor {
    sig: ExtensorSignature,
    /// One output value per key; rows align with `sig.keys()`.
    table: Vec<(Vec<BladeMask>, Value)>,
}

impl Extensor {
    /// Tabulate an extensor from a callback evaluated on every tuple of
    /// basis blades. Callback outputs are projected onto the declared
    /// output subspace.
    pub fn from_fn<F>(sig: ExtensorSignature, mut f: F) -> Result<Extensor>
    where
        F: FnMut(&[Multivector], &[Multiform]) -> Result<Value>,
    {
        let k = sig.vector_slots.len();
        let mut table = Vec::with_capacity(sig.table_len());
        for key in sig.keys() {
            let vecs: Vec<Multivector> = key[..k]
                .iter()
                .map(|&b| Multivector::basis_blade(sig.ctx, b))
                .collect();
            let forms: Vec<Multiform> = key[k..]
                .iter()
                .map(|&b| Multiform::basis_blade(sig.ctx, b))
                .collect();
            let out = f(&vecs, &forms)?;
            if out.kind() != sig.output_kind {
                return Err(Error::VarianceMismatch);
            }
            table.push((key, out.gradeset_part(sig.output_grades)));
        }
        Ok(Extensor { sig, table })
    }

    /// The zero extensor of a signature.
    pub fn zero(sig: ExtensorSignature) -> Extensor {
        let kind = sig.output_kind;
        let ctx = sig.ctx;
        Extensor::from_fn(sig, |_, _| Ok(Value::zero(ctx, kind))).unwrap()
    }

    /// A slotless extensor holding a fixed value.
    pub fn constant(ctx: AlgebraContext, value: Value) -> Result<Extensor> {
        let grades = match &value {
            Value::Vector(x) => x.grades(),
            Value::Form(x) => x.grades(),
        };
        let grades = if grades.is_empty() {
            GradeSet::singleton(0)
        } else {
            grades
        };
        let sig = ExtensorSignature::new(ctx, Vec::new(), Vec::new(), value.kind(), grades)?;
        Extensor::from_fn(sig, |_, _| Ok(value.clone()))
    }

    pub fn sig(&self) -> &ExtensorSignature {
        &self.sig
    }

    pub fn ctx(&self) -> AlgebraContext {
        self.sig.ctx
    }

    /// Table rows in key order.
    pub fn table(&self) -> impl Iterator<Item = (&[BladeMask], &Value)> {
        self.table.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// Multilinear evaluation. Arguments with support outside a slot's
    /// grade set are projected onto it first.
    pub fn eval(&self, vecs: &[Multivector], forms: &[Multiform]) -> Result<Value> {
        if vecs.len() != self.sig.vector_slots.len() || forms.len() != self.sig.form_slots.len() {
            return Err(Error::SignatureMismatch);
        }
        for x in vecs {
            x.check_ctx(self.sig.ctx)?;
        }
        for p in forms {
            p.check_ctx(self.sig.ctx)?;
        }
        let projected_vecs: Vec<Multivector> = vecs
            .iter()
            .zip(&self.sig.vector_slots)
            .map(|(x, &gs)| x.gradeset_part(gs))
            .collect();
        let projected_forms: Vec<Multiform> = forms
            .iter()
            .zip(&self.sig.form_slots)
            .map(|(p, &gs)| p.gradeset_part(gs))
            .collect();
        let k = projected_vecs.len();
        let mut out = Value::zero(self.sig.ctx, self.sig.output_kind);
        for (key, value) in &self.table {
            let mut c = 1.0;
            for (i, &b) in key.iter().enumerate() {
                c *= if i < k {
                    projected_vecs[i].coeff(b)
                } else {
                    projected_forms[i - k].coeff(b)
                };
                if c == 0.0 {
                    break;
                }
            }
            if c != 0.0 {
                out = out.add(&value.scale(c))?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: f64) -> Extensor {
        Extensor {
            sig: self.sig.clone(),
            table: self
                .table
                .iter()
                .map(|(k, v)| (k.clone(), v.scale(s)))
                .collect(),
        }
    }

    pub fn add(&self, other: &Extensor) -> Result<Extensor> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch);
        }
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|((k, a), (_, b))| Ok((k.clone(), a.add(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Extensor {
            sig: self.sig.clone(),
            table,
        })
    }

    pub fn sub(&self, other: &Extensor) -> Result<Extensor> {
        self.add(&other.scale(-1.0))
    }

    /// Largest coefficient discrepancy over all table entries. Infinite when
    /// the signatures differ.
    pub fn max_diff(&self, other: &Extensor) -> f64 {
        if self.sig != other.sig {
            return f64::INFINITY;
        }
        self.table
            .iter()
            .zip(&other.table)
            .map(|((_, a), (_, b))| a.max_diff(b))
            .fold(0.0f64, f64::max)
    }

    pub fn approx_eq(&self, other: &Extensor) -> bool {
        self.max_diff(other) < 1e-9
    }
}

/// Exterior product of two extensors with like output variance: slots are
/// concatenated (vector slots of both, then form slots of both) and outputs
/// are wedged pointwise.
pub fn ext_wedge(tau: &Extensor, sigma: &Extensor) -> Result<Extensor> {
    if tau.sig.output_kind != sigma.sig.output_kind {
        return Err(Error::VarianceMismatch);
    }
    if tau.sig.ctx != sigma.sig.ctx {
        return Err(Error::CtxMismatch);
    }
    let ctx = tau.sig.ctx;
    let n = ctx.dim();
    let mut out_grades = GradeSet::EMPTY;
    for a in tau.sig.output_grades.grades() {
        for b in sigma.sig.output_grades.grades() {
            if a + b <= n {
                out_grades.insert(a + b);
            }
        }
    }
    if out_grades.is_empty() {
        out_grades = GradeSet::singleton(0);
    }
    let mut vector_slots = tau.sig.vector_slots.clone();
    vector_slots.extend_from_slice(&sigma.sig.vector_slots);
    let mut form_slots = tau.sig.form_slots.clone();
    form_slots.extend_from_slice(&sigma.sig.form_slots);
    let sig = ExtensorSignature::new(
        ctx,
        vector_slots,
        form_slots,
        tau.sig.output_kind,
        out_grades,
    )?;
    let (tk, tl) = (tau.sig.vector_slots.len(), tau.sig.form_slots.len());
    Extensor::from_fn(sig, |vecs, forms| {
        let a = tau.eval(&vecs[..tk], &forms[..tl])?;
        let b = sigma.eval(&vecs[tk..], &forms[tl..])?;
        a.wedge(&b)
    })
}

/// Duality scalar product of a form-valued extensor with a vector-valued
/// one; the result is the scalar extensor on the concatenated slots.
pub fn ext_scalar(tau: &Extensor, sigma: &Extensor) -> Result<Extensor> {
    if tau.sig.output_kind != Kind::Form || sigma.sig.output_kind != Kind::Vector {
        return Err(Error::VarianceMismatch);
    }
    if tau.sig.ctx != sigma.sig.ctx {
        return Err(Error::CtxMismatch);
    }
    let ctx = tau.sig.ctx;
    let mut vector_slots = tau.sig.vector_slots.clone();
    vector_slots.extend_from_slice(&sigma.sig.vector_slots);
    let mut form_slots = tau.sig.form_slots.clone();
    form_slots.extend_from_slice(&sigma.sig.form_slots);
    let sig = ExtensorSignature::new(
        ctx,
        vector_slots,
        form_slots,
        Kind::Form,
        GradeSet::singleton(0),
    )?;
    let (tk, tl) = (tau.sig.vector_slots.len(), tau.sig.form_slots.len());
    Extensor::from_fn(sig, |vecs, forms| {
        let phi = tau.eval(&vecs[..tk], &forms[..tl])?;
        let x = sigma.eval(&vecs[tk..], &forms[tl..])?;
        let s = scalar_product(phi.as_form()?, x.as_vector()?)?;
        Ok(Value::Form(Multiform::scalar(ctx, s)))
    })
}

fn contraction_grades(contractor: GradeSet, target: GradeSet, n: usize) -> GradeSet {
    let mut out = GradeSet::EMPTY;
    for a in contractor.grades() {
        for b in target.grades() {
            if b >= a && b - a <= n {
                out.insert(b - a);
            }
        }
    }
    if out.is_empty() {
        out = GradeSet::singleton(0);
    }
    out
}

/// Left contracted product of extensors with opposite output variances.
/// Form-valued with vector-valued yields a vector-valued extensor; the
/// mirrored order yields a form-valued one.
pub fn ext_left_contract(tau: &Extensor, sigma: &Extensor) -> Result<Extensor> {
    if tau.sig.output_kind == sigma.sig.output_kind {
        return Err(Error::VarianceMismatch);
    }
    if tau.sig.ctx != sigma.sig.ctx {
        return Err(Error::CtxMismatch);
    }
    let ctx = tau.sig.ctx;
    let out_kind = sigma.sig.output_kind;
    let out_grades = contraction_grades(tau.sig.output_grades, sigma.sig.output_grades, ctx.dim());
    let mut vector_slots = tau.sig.vector_slots.clone();
    vector_slots.extend_from_slice(&sigma.sig.vector_slots);
    let mut form_slots = tau.sig.form_slots.clone();
    form_slots.extend_from_slice(&sigma.sig.form_slots);
    let sig = ExtensorSignature::new(ctx, vector_slots, form_slots, out_kind, out_grades)?;
    let (tk, tl) = (tau.sig.vector_slots.len(), tau.sig.form_slots.len());
    Extensor::from_fn(sig, |vecs, forms| {
        let a = tau.eval(&vecs[..tk], &forms[..tl])?;
        let b = sigma.eval(&vecs[tk..], &forms[tl..])?;
        match (&a, &b) {
            (Value::Form(phi), Value::Vector(x)) => Ok(Value::Vector(left_contract(phi, x)?)),
            (Value::Vector(x), Value::Form(phi)) => Ok(Value::Form(left_contract_form(x, phi)?)),
            _ => Err(Error::VarianceMismatch),
        }
    })
}

/// Right contracted product of extensors with opposite output variances.
pub fn ext_right_contract(tau: &Extensor, sigma: &Extensor) -> Result<Extensor> {
    if tau.sig.output_kind == sigma.sig.output_kind {
        return Err(Error::VarianceMismatch);
    }
    if tau.sig.ctx != sigma.sig.ctx {
        return Err(Error::CtxMismatch);
    }
    let ctx = tau.sig.ctx;
    let out_kind = tau.sig.output_kind;
    let out_grades = contraction_grades(sigma.sig.output_grades, tau.sig.output_grades, ctx.dim());
    let mut vector_slots = tau.sig.vector_slots.clone();
    vector_slots.extend_from_slice(&sigma.sig.vector_slots);
    let mut form_slots = tau.sig.form_slots.clone();
    form_slots.extend_from_slice(&sigma.sig.form_slots);
    let sig = ExtensorSignature::new(ctx, vector_slots, form_slots, out_kind, out_grades)?;
    let (tk, tl) = (tau.sig.vector_slots.len(), tau.sig.form_slots.len());
    Extensor::from_fn(sig, |vecs, forms| {
        let a = tau.eval(&vecs[..tk], &forms[..tl])?;
        let b = sigma.eval(&vecs[tk..], &forms[tl..])?;
        match (&a, &b) {
            (Value::Form(phi), Value::Vector(x)) => Ok(Value::Form(right_contract(phi, x)?)),
            (Value::Vector(x), Value::Form(phi)) => Ok(Value::Vector(right_contract_vec(x, phi)?)),
            _ => Err(Error::VarianceMismatch),
        }
    })
}

/// Duality adjoint of a one-variable extensor. The adjoint's slot is the
/// dual of the output subspace, its output the dual of the slot subspace,
/// and its value is the basis expansion of the pairing with the original
/// extensor's table.
pub fn ext_adjoint(tau: &Extensor) -> Result<Extensor> {
    if tau.sig.arity() != 1 {
        return Err(Error::UnsupportedArity);
    }
    let ctx = tau.sig.ctx;
    let slot_is_vector = tau.sig.vector_slots.len() == 1;
    let slot_gs = *tau.sig.slots().next().unwrap();
    let out_kind = tau.sig.output_kind;
    // slot of the adjoint pairs against the original output
    let adj_slot_kind = out_kind.dual();
    let adj_out_kind = if slot_is_vector {
        Kind::Form
    } else {
        Kind::Vector
    };
    let (adj_vec_slots, adj_form_slots) = match adj_slot_kind {
        Kind::Vector => (alloc::vec![tau.sig.output_grades], Vec::new()),
        Kind::Form => (Vec::new(), alloc::vec![tau.sig.output_grades]),
    };
    let sig = ExtensorSignature::new(ctx, adj_vec_slots, adj_form_slots, adj_out_kind, slot_gs)?;
    Extensor::from_fn(sig, |vecs, forms| {
        let mut out = Value::zero(ctx, adj_out_kind);
        for (key, value) in &tau.table {
            let b = key[0];
            let s = match (vecs.first(), forms.first()) {
                // adjoint argument is a multivector: original output is a form
                (Some(x), None) => scalar_product(value.as_form()?, x)?,
                // adjoint argument is a multiform: original output is a vector
                (None, Some(phi)) => scalar_product(phi, value.as_vector()?)?,
                _ => return Err(Error::SignatureMismatch),
            };
            if s != 0.0 {
                let dual = match adj_out_kind {
                    Kind::Vector => Value::Vector(Multivector::basis_blade(ctx, b)),
                    Kind::Form => Value::Form(Multiform::basis_blade(ctx, b)),
                };
                out = out.add(&dual.scale(s))?;
            }
        }
        Ok(out)
    })
}

fn is_scalar_output(sig: &ExtensorSignature) -> bool {
    sig.output_grades == GradeSet::singleton(0)
}

/// Action of the extended lift of an invertible operator on `V` on a
/// vector-valued (or scalar-valued) extensor: outputs pass through the
/// extension, vector arguments through the inverse extension, and form
/// arguments through the adjoint extension.
pub fn act_extended(l: &LinearMap<crate::exterior::Contra>, tau: &Extensor) -> Result<Extensor> {
    if tau.sig.output_kind != Kind::Vector && !is_scalar_output(&tau.sig) {
        return Err(Error::VarianceMismatch);
    }
    let out_lift = l.extend();
    let inv_lift = l.inverse()?.extend();
    let adj_lift = l.adjoint().extend();
    Extensor::from_fn(tau.sig.clone(), |vecs, forms| {
        let tv: Vec<Multivector> = vecs
            .iter()
            .map(|x| inv_lift.apply(x))
            .collect::<Result<_>>()?;
        let tf: Vec<Multiform> = forms
            .iter()
            .map(|p| adj_lift.apply(p))
            .collect::<Result<_>>()?;
        let out = tau.eval(&tv, &tf)?;
        match out {
            Value::Vector(x) => Ok(Value::Vector(out_lift.apply(&x)?)),
            // scalar-valued extensor: the extension fixes scalars
            Value::Form(x) => Ok(Value::Form(x)),
        }
    })
}

/// Action of the extended lift of an invertible operator on `V*` on a
/// form-valued (or scalar-valued) extensor; the argument transforms swap
/// relative to the vector case.
pub fn act_extended_form(m: &LinearMap<crate::exterior::Cov>, tau: &Extensor) -> Result<Extensor> {
    if tau.sig.output_kind != Kind::Form && !is_scalar_output(&tau.sig) {
        return Err(Error::VarianceMismatch);
    }
    let out_lift = m.extend();
    let inv_lift = m.inverse()?.extend();
    let adj_lift = m.adjoint().extend();
    let scalar_out = is_scalar_output(&tau.sig) && tau.sig.output_kind == Kind::Vector;
    Extensor::from_fn(tau.sig.clone(), |vecs, forms| {
        let tv: Vec<Multivector> = vecs
            .iter()
            .map(|x| adj_lift.apply(x))
            .collect::<Result<_>>()?;
        let tf: Vec<Multiform> = forms
            .iter()
            .map(|p| inv_lift.apply(p))
            .collect::<Result<_>>()?;
        let out = tau.eval(&tv, &tf)?;
        match out {
            Value::Form(x) if !scalar_out => Ok(Value::Form(out_lift.apply(&x)?)),
            other => Ok(other),
        }
    })
}

/// Action of the generalized lift of an operator on `V` on a vector-valued
/// (or scalar-valued) extensor: the derivation of the output minus the
/// derivations through each vector slot plus the adjoint derivations
/// through each form slot.
pub fn act_generalized(g: &LinearMap<crate::exterior::Contra>, tau: &Extensor) -> Result<Extensor> {
    if tau.sig.output_kind != Kind::Vector && !is_scalar_output(&tau.sig) {
        return Err(Error::VarianceMismatch);
    }
    let out_lift = g.generalize();
    let adj_lift = g.adjoint().generalize();
    Extensor::from_fn(tau.sig.clone(), |vecs, forms| {
        let direct = tau.eval(vecs, forms)?;
        let mut out = match &direct {
            Value::Vector(x) => Value::Vector(out_lift.apply(x)?),
            // generalization annihilates scalars
            Value::Form(_) => Value::zero(tau.sig.ctx, tau.sig.output_kind),
        };
        for i in 0..vecs.len() {
            let mut tv = vecs.to_vec();
            tv[i] = out_lift.apply(&vecs[i])?;
            out = out.add(&tau.eval(&tv, forms)?.scale(-1.0))?;
        }
        for j in 0..forms.len() {
            let mut tf = forms.to_vec();
            tf[j] = adj_lift.apply(&forms[j])?;
            out = out.add(&tau.eval(vecs, &tf)?)?;
        }
        Ok(out)
    })
}

/// Action of the generalized lift of an operator on `V*` on a form-valued
/// (or scalar-valued) extensor; slot signs swap relative to the vector case.
pub fn act_generalized_form(
    m: &LinearMap<crate::exterior::Cov>,
    tau: &Extensor,
) -> Result<Extensor> {
    if tau.sig.output_kind != Kind::Form && !is_scalar_output(&tau.sig) {
        return Err(Error::VarianceMismatch);
    }
    let out_lift = m.generalize();
    let adj_lift = m.adjoint().generalize();
    let scalar_out = is_scalar_output(&tau.sig);
    Extensor::from_fn(tau.sig.clone(), |vecs, forms| {
        let direct = tau.eval(vecs, forms)?;
        let mut out = match &direct {
            Value::Form(x) if !scalar_out => Value::Form(out_lift.apply(x)?),
            _ => Value::zero(tau.sig.ctx, tau.sig.output_kind),
        };
        for i in 0..vecs.len() {
            let mut tv = vecs.to_vec();
            tv[i] = adj_lift.apply(&vecs[i])?;
            out = out.add(&tau.eval(&tv, forms)?)?;
        }
        for j in 0..forms.len() {
            let mut tf = forms.to_vec();
            tf[j] = out_lift.apply(&forms[j])?;
            out = out.add(&tau.eval(vecs, &tf)?.scale(-1.0))?;
        }
        Ok(out)
    })
}
