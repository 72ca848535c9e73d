//! Evaluation of type-checked scripts. Every arm here mirrors a typing rule
//! in `types`, so kind mismatches are unreachable; the only runtime failures
//! are numeric ones such as inverting a singular operator.

use std::collections::HashMap;

use extensor_core::algebra::AlgebraContext;
use extensor_core::extensor::{ext_adjoint, Extensor, ExtensorSignature, Value};
use extensor_core::exterior::{Contra, Cov, Kind, Multiform, Multivector};
use extensor_core::operator::{ExtendedOperator, GeneralizedOperator, LinearMap};
use extensor_core::products::{
    left_contract, left_contract_form, right_contract, right_contract_vec, scalar_product,
    scalar_product_vf,
};
use extensor_core::{BladeMask, GradeSet};

use crate::ast::{BinOp, Expr, SlotSpec, TableEntry};
use crate::parser::Diag;

#[derive(Debug, Clone)]
pub enum Val {
    Scalar(f64),
    Vector(Multivector),
    Form(Multiform),
    MapV(LinearMap<Contra>),
    MapF(LinearMap<Cov>),
    ExtOpV(ExtendedOperator<Contra>),
    ExtOpF(ExtendedOperator<Cov>),
    GenOpV(GeneralizedOperator<Contra>),
    GenOpF(GeneralizedOperator<Cov>),
    Ext(Extensor),
}

impl Val {
    pub fn as_vector(&self, ctx: AlgebraContext) -> Multivector {
        match self {
            Val::Scalar(s) => Multivector::scalar(ctx, *s),
            Val::Vector(x) => x.clone(),
            _ => unreachable!("typechecker admits only scalars and multivectors here"),
        }
    }

    pub fn as_form(&self, ctx: AlgebraContext) -> Multiform {
        match self {
            Val::Scalar(s) => Multiform::scalar(ctx, *s),
            Val::Form(phi) => phi.clone(),
            _ => unreachable!("typechecker admits only scalars and multiforms here"),
        }
    }
}

pub struct Evaluator {
    pub ctx: AlgebraContext,
    pub env: HashMap<String, Val>,
}

fn rt(pos: crate::lexer::Pos, e: extensor_core::Error) -> Diag {
    Diag::new(format!("{e}"), pos)
}

impl Evaluator {
    pub fn new(ctx: AlgebraContext) -> Evaluator {
        Evaluator {
            ctx,
            env: HashMap::new(),
        }
    }

    pub fn eval(&mut self, e: &Expr) -> Result<Val, Diag> {
        let ctx = self.ctx;
        match e {
            Expr::Num(x, _) => Ok(Val::Scalar(*x)),
            Expr::Blade { form, index, .. } => Ok(if *form {
                Val::Form(Multiform::basis(ctx, *index))
            } else {
                Val::Vector(Multivector::basis(ctx, *index))
            }),
            Expr::Name(name, _) => Ok(self.env[name].clone()),
            Expr::Neg(inner, _) => Ok(match self.eval(inner)? {
                Val::Scalar(s) => Val::Scalar(-s),
                Val::Vector(x) => Val::Vector(x.scale(-1.0)),
                Val::Form(phi) => Val::Form(phi.scale(-1.0)),
                _ => unreachable!(),
            }),
            Expr::Bin { op, lhs, rhs, pos } => {
                let l = self.eval(lhs)?;
                let r = self.eval(rhs)?;
                self.bin(*op, l, r, *pos)
            }
            Expr::Grade { arg, k, pos } => Ok(match self.eval(arg)? {
                Val::Scalar(s) => Val::Scalar(if *k == 0 { s } else { 0.0 }),
                Val::Vector(x) => Val::Vector(x.grade_part(*k).map_err(|e| rt(*pos, e))?),
                Val::Form(phi) => Val::Form(phi.grade_part(*k).map_err(|e| rt(*pos, e))?),
                _ => unreachable!(),
            }),
            Expr::GradeSetPart { arg, grades, .. } => {
                let gs = GradeSet::from_grades(grades.iter().copied());
                Ok(match self.eval(arg)? {
                    Val::Scalar(s) => Val::Scalar(if gs.contains(0) { s } else { 0.0 }),
                    Val::Vector(x) => Val::Vector(x.gradeset_part(gs)),
                    Val::Form(phi) => Val::Form(phi.gradeset_part(gs)),
                    _ => unreachable!(),
                })
            }
            Expr::Matrix { rows, pos } => {
                let refs: Vec<&[f64]> = rows.iter().map(|r| r.as_slice()).collect();
                LinearMap::<Contra>::from_rows(ctx, &refs)
                    .map(Val::MapV)
                    .map_err(|e| rt(*pos, e))
            }
            Expr::Call { name, args, pos } => self.call(name, args, *pos),
            Expr::Apply { func, args, pos } => {
                let f = self.eval(func)?;
                self.apply(f, args, *pos)
            }
            Expr::ExtensorLit {
                slots,
                output,
                entries,
                pos,
            } => self.extensor_lit(slots, output, entries, *pos),
        }
    }

    fn bin(&self, op: BinOp, l: Val, r: Val, pos: crate::lexer::Pos) -> Result<Val, Diag> {
        let ctx = self.ctx;
        match op {
            BinOp::Add | BinOp::Sub => {
                let sub = op == BinOp::Sub;
                Ok(match (l, r) {
                    (Val::Scalar(a), Val::Scalar(b)) => {
                        Val::Scalar(if sub { a - b } else { a + b })
                    }
                    (
                        a @ (Val::Scalar(_) | Val::Vector(_)),
                        b @ (Val::Scalar(_) | Val::Vector(_)),
                    ) => {
                        let (a, b) = (a.as_vector(ctx), b.as_vector(ctx));
                        let b = if sub { b.scale(-1.0) } else { b };
                        Val::Vector(a.add(&b).map_err(|e| rt(pos, e))?)
                    }
                    (a, b) => {
                        let (a, b) = (a.as_form(ctx), b.as_form(ctx));
                        let b = if sub { b.scale(-1.0) } else { b };
                        Val::Form(a.add(&b).map_err(|e| rt(pos, e))?)
                    }
                })
            }
            BinOp::Mul => Ok(match (l, r) {
                (Val::Scalar(a), Val::Scalar(b)) => Val::Scalar(a * b),
                (Val::Scalar(s), Val::Vector(x)) | (Val::Vector(x), Val::Scalar(s)) => {
                    Val::Vector(x.scale(s))
                }
                (Val::Scalar(s), Val::Form(phi)) | (Val::Form(phi), Val::Scalar(s)) => {
                    Val::Form(phi.scale(s))
                }
                _ => unreachable!(),
            }),
            BinOp::Wedge => Ok(match (l, r) {
                (Val::Scalar(a), Val::Scalar(b)) => Val::Scalar(a * b),
                (Val::Scalar(s), Val::Vector(x)) | (Val::Vector(x), Val::Scalar(s)) => {
                    Val::Vector(x.scale(s))
                }
                (Val::Scalar(s), Val::Form(phi)) | (Val::Form(phi), Val::Scalar(s)) => {
                    Val::Form(phi.scale(s))
                }
                (Val::Vector(a), Val::Vector(b)) => {
                    Val::Vector(a.wedge(&b).map_err(|e| rt(pos, e))?)
                }
                (Val::Form(a), Val::Form(b)) => Val::Form(a.wedge(&b).map_err(|e| rt(pos, e))?),
                _ => unreachable!(),
            }),
        }
    }

    /// Split a contraction's operands into (form side, vector side),
    /// remembering which position the form occupied.
    fn form_vec(&mut self, a: &Expr, b: &Expr) -> Result<(Multiform, Multivector, bool), Diag> {
        let ctx = self.ctx;
        let l = self.eval(a)?;
        let r = self.eval(b)?;
        Ok(match (&l, &r) {
            (Val::Form(_), _) | (Val::Scalar(_), Val::Vector(_)) => {
                (l.as_form(ctx), r.as_vector(ctx), true)
            }
            _ => (r.as_form(ctx), l.as_vector(ctx), false),
        })
    }

    fn call(&mut self, name: &str, args: &[Expr], pos: crate::lexer::Pos) -> Result<Val, Diag> {
        match name {
            "sp" => {
                let (phi, x, form_first) = self.form_vec(&args[0], &args[1])?;
                let s = if form_first {
                    scalar_product(&phi, &x)
                } else {
                    scalar_product_vf(&x, &phi)
                };
                Ok(Val::Scalar(s.map_err(|e| rt(pos, e))?))
            }
            "lc" => {
                let (phi, x, form_first) = self.form_vec(&args[0], &args[1])?;
                Ok(if form_first {
                    Val::Vector(left_contract(&phi, &x).map_err(|e| rt(pos, e))?)
                } else {
                    Val::Form(left_contract_form(&x, &phi).map_err(|e| rt(pos, e))?)
                })
            }
            "rc" => {
                let (phi, x, form_first) = self.form_vec(&args[0], &args[1])?;
                Ok(if form_first {
                    Val::Form(right_contract(&phi, &x).map_err(|e| rt(pos, e))?)
                } else {
                    Val::Vector(right_contract_vec(&x, &phi).map_err(|e| rt(pos, e))?)
                })
            }
            "rev" => Ok(match self.eval(&args[0])? {
                Val::Scalar(s) => Val::Scalar(s),
                Val::Vector(x) => Val::Vector(x.reversion()),
                Val::Form(phi) => Val::Form(phi.reversion()),
                _ => unreachable!(),
            }),
            "ginv" => Ok(match self.eval(&args[0])? {
                Val::Scalar(s) => Val::Scalar(s),
                Val::Vector(x) => Val::Vector(x.grade_involution()),
                Val::Form(phi) => Val::Form(phi.grade_involution()),
                _ => unreachable!(),
            }),
            "adj" => Ok(match self.eval(&args[0])? {
                Val::MapV(m) => Val::MapF(m.adjoint()),
                Val::MapF(m) => Val::MapV(m.adjoint()),
                Val::Ext(t) => Val::Ext(ext_adjoint(&t).map_err(|e| rt(pos, e))?),
                _ => unreachable!(),
            }),
            "ext" => Ok(match self.eval(&args[0])? {
                Val::MapV(m) => Val::ExtOpV(m.extend()),
                Val::MapF(m) => Val::ExtOpF(m.extend()),
                _ => unreachable!(),
            }),
            "gen" => Ok(match self.eval(&args[0])? {
                Val::MapV(m) => Val::GenOpV(m.generalize()),
                Val::MapF(m) => Val::GenOpF(m.generalize()),
                _ => unreachable!(),
            }),
            "det" => Ok(match self.eval(&args[0])? {
                Val::MapV(m) => Val::Scalar(m.det()),
                Val::MapF(m) => Val::Scalar(m.det()),
                _ => unreachable!(),
            }),
            "inv" => Ok(match self.eval(&args[0])? {
                Val::MapV(m) => Val::MapV(m.inverse().map_err(|e| rt(pos, e))?),
                Val::MapF(m) => Val::MapF(m.inverse().map_err(|e| rt(pos, e))?),
                _ => unreachable!(),
            }),
            _ => unreachable!("typechecker rejects unknown functions"),
        }
    }

    fn apply(&mut self, f: Val, args: &[Expr], pos: crate::lexer::Pos) -> Result<Val, Diag> {
        let ctx = self.ctx;
        match f {
            Val::ExtOpV(op) => {
                let x = self.eval(&args[0])?.as_vector(ctx);
                Ok(Val::Vector(op.apply(&x).map_err(|e| rt(pos, e))?))
            }
            Val::GenOpV(op) => {
                let x = self.eval(&args[0])?.as_vector(ctx);
                Ok(Val::Vector(op.apply(&x).map_err(|e| rt(pos, e))?))
            }
            Val::ExtOpF(op) => {
                let phi = self.eval(&args[0])?.as_form(ctx);
                Ok(Val::Form(op.apply(&phi).map_err(|e| rt(pos, e))?))
            }
            Val::GenOpF(op) => {
                let phi = self.eval(&args[0])?.as_form(ctx);
                Ok(Val::Form(op.apply(&phi).map_err(|e| rt(pos, e))?))
            }
            Val::Ext(t) => {
                let nv = t.sig().vector_slots.len();
                let mut vecs = Vec::new();
                let mut forms = Vec::new();
                for (i, a) in args.iter().enumerate() {
                    let v = self.eval(a)?;
                    if i < nv {
                        vecs.push(v.as_vector(ctx));
                    } else {
                        forms.push(v.as_form(ctx));
                    }
                }
                match t.eval(&vecs, &forms).map_err(|e| rt(pos, e))? {
                    Value::Vector(x) => Ok(Val::Vector(x)),
                    Value::Form(phi) => Ok(Val::Form(phi)),
                }
            }
            _ => unreachable!("typechecker admits only applicable values"),
        }
    }

    fn extensor_lit(
        &mut self,
        slots: &[SlotSpec],
        output: &SlotSpec,
        entries: &[TableEntry],
        pos: crate::lexer::Pos,
    ) -> Result<Val, Diag> {
        let ctx = self.ctx;
        let to_gs = |spec: &SlotSpec| GradeSet::from_grades(spec.grades.iter().copied());
        let vector_slots: Vec<GradeSet> = slots.iter().filter(|s| !s.form).map(to_gs).collect();
        let form_slots: Vec<GradeSet> = slots.iter().filter(|s| s.form).map(to_gs).collect();
        let out_kind = if output.form {
            Kind::Form
        } else {
            Kind::Vector
        };
        let sig = ExtensorSignature::new(ctx, vector_slots, form_slots, out_kind, to_gs(output))
            .map_err(|e| rt(pos, e))?;
        let mut table: HashMap<Vec<BladeMask>, Value> = HashMap::new();
        for entry in entries {
            let key: Vec<BladeMask> = entry
                .key
                .iter()
                .map(|idx| BladeMask::from_indices(idx))
                .collect();
            let value = match self.eval(&entry.value)? {
                Val::Scalar(s) => match out_kind {
                    Kind::Vector => Value::Vector(Multivector::scalar(ctx, s)),
                    Kind::Form => Value::Form(Multiform::scalar(ctx, s)),
                },
                Val::Vector(x) => Value::Vector(x),
                Val::Form(phi) => Value::Form(phi),
                _ => unreachable!(),
            };
            if table.insert(key, value).is_some() {
                return Err(Diag::new("duplicate table key", entry.pos));
            }
        }
        let ext = Extensor::from_fn(sig, |vecs, forms| {
            let mut key = Vec::with_capacity(vecs.len() + forms.len());
            for x in vecs {
                key.push(x.terms().next().expect("basis blade argument").0);
            }
            for phi in forms {
                key.push(phi.terms().next().expect("basis blade argument").0);
            }
            Ok(table
                .get(&key)
                .cloned()
                .unwrap_or_else(|| Value::zero(ctx, out_kind)))
        })
        .map_err(|e| rt(pos, e))?;
        Ok(Val::Ext(ext))
    }
}
