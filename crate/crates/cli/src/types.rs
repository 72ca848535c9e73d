//! Static checking of scripts before evaluation: every expression gets one
//! of the value kinds below, with variance and arity errors reported with
//! positions. Evaluation never sees an ill-typed tree.

use std::collections::HashMap;

use crate::ast::{BinOp, Expr, Script, SlotSpec, Stmt};
use crate::parser::Diag;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ty {
    Scalar,
    Vector,
    Form,
    /// Operator on V (a matrix literal) or on V* (its `adj`).
    MapV,
    MapF,
    ExtOpV,
    ExtOpF,
    GenOpV,
    GenOpF,
    Ext(SigTy),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigTy {
    pub vslots: usize,
    pub fslots: usize,
    pub out_form: bool,
}

impl Ty {
    pub fn describe(&self) -> &'static str {
        match self {
            Ty::Scalar => "scalar",
            Ty::Vector => "multivector",
            Ty::Form => "multiform",
            Ty::MapV => "vector operator",
            Ty::MapF => "form operator",
            Ty::ExtOpV => "extended vector operator",
            Ty::ExtOpF => "extended form operator",
            Ty::GenOpV => "generalized vector operator",
            Ty::GenOpF => "generalized form operator",
            Ty::Ext(_) => "extensor",
        }
    }
}

pub struct Checker {
    pub dim: usize,
    pub env: HashMap<String, Ty>,
}

pub fn check_script(script: &Script) -> Result<(), Diag> {
    use crate::lexer::Pos;
    if script.dim < 1 || script.dim > extensor_core::MAX_DIM {
        return Err(Diag::new(
            format!(
                "dimension must be between 1 and {}, got {}",
                extensor_core::MAX_DIM,
                script.dim
            ),
            Pos { line: 1, col: 1 },
        ));
    }
    let mut ck = Checker {
        dim: script.dim,
        env: HashMap::new(),
    };
    for stmt in &script.stmts {
        match stmt {
            Stmt::Let { name, value, .. } => {
                let ty = ck.check(value)?;
                ck.env.insert(name.clone(), ty);
            }
            Stmt::Print { value, .. } => {
                ck.check(value)?;
            }
            Stmt::Assert { lhs, rhs, pos } => {
                let lt = ck.check(lhs)?;
                let rt = ck.check(rhs)?;
                comparable(&lt, &rt).ok_or_else(|| {
                    Diag::new(
                        format!("cannot compare {} with {}", lt.describe(), rt.describe()),
                        *pos,
                    )
                })?;
            }
        }
    }
    Ok(())
}

/// Kinds that `assert` may compare: scalars embed into either algebra.
fn comparable(a: &Ty, b: &Ty) -> Option<Ty> {
    match (a, b) {
        (Ty::Scalar, Ty::Scalar) => Some(Ty::Scalar),
        (Ty::Scalar, Ty::Vector) | (Ty::Vector, Ty::Scalar) | (Ty::Vector, Ty::Vector) => {
            Some(Ty::Vector)
        }
        (Ty::Scalar, Ty::Form) | (Ty::Form, Ty::Scalar) | (Ty::Form, Ty::Form) => Some(Ty::Form),
        _ => None,
    }
}

impl Checker {
    pub fn check(&mut self, e: &Expr) -> Result<Ty, Diag> {
        match e {
            Expr::Num(..) => Ok(Ty::Scalar),
            Expr::Blade { form, index, pos } => {
                if *index >= self.dim {
                    return Err(Diag::new(
                        format!(
                            "basis index {} exceeds the dimension {}",
                            index + 1,
                            self.dim
                        ),
                        *pos,
                    ));
                }
                Ok(if *form { Ty::Form } else { Ty::Vector })
            }
            Expr::Name(name, pos) => self
                .env
                .get(name)
                .cloned()
                .ok_or_else(|| Diag::new(format!("unknown name `{name}`"), *pos)),
            Expr::Neg(inner, pos) => {
                let t = self.check(inner)?;
                match t {
                    Ty::Scalar | Ty::Vector | Ty::Form => Ok(t),
                    other => Err(Diag::new(
                        format!("cannot negate a {}", other.describe()),
                        *pos,
                    )),
                }
            }
            Expr::Bin { op, lhs, rhs, pos } => {
                let lt = self.check(lhs)?;
                let rt = self.check(rhs)?;
                self.bin(*op, &lt, &rt, *pos)
            }
            Expr::Grade { arg, k, pos } => {
                if *k > self.dim {
                    return Err(Diag::new(
                        format!("grade {} exceeds the dimension {}", k, self.dim),
                        *pos,
                    ));
                }
                self.element_arg(arg, "grade")
            }
            Expr::GradeSetPart { arg, grades, pos } => {
                for &k in grades {
                    if k > self.dim {
                        return Err(Diag::new(
                            format!("grade {} exceeds the dimension {}", k, self.dim),
                            *pos,
                        ));
                    }
                }
                self.element_arg(arg, "gset")
            }
            Expr::Matrix { rows, pos } => {
                if rows.len() != self.dim || rows.iter().any(|r| r.len() != self.dim) {
                    return Err(Diag::new(
                        format!("matrix literal must be {}x{}", self.dim, self.dim),
                        *pos,
                    ));
                }
                Ok(Ty::MapV)
            }
            Expr::Call { name, args, pos } => self.call(name, args, *pos),
            Expr::Apply { func, args, pos } => {
                let ft = self.check(func)?;
                let ats: Vec<Ty> = args
                    .iter()
                    .map(|a| self.check(a))
                    .collect::<Result<_, _>>()?;
                self.apply(&ft, &ats, args, *pos)
            }
            Expr::ExtensorLit {
                slots,
                output,
                entries,
                pos,
            } => self.extensor_lit(slots, output, entries, *pos),
        }
    }

    /// Argument of grade/gset: an algebra element (scalars pass through).
    fn element_arg(&mut self, arg: &Expr, what: &str) -> Result<Ty, Diag> {
        let t = self.check(arg)?;
        match t {
            Ty::Scalar | Ty::Vector | Ty::Form => Ok(t),
            other => Err(Diag::new(
                format!(
                    "{what} expects a multivector or multiform, got {}",
                    other.describe()
                ),
                arg.pos(),
            )),
        }
    }

    fn bin(&self, op: BinOp, lt: &Ty, rt: &Ty, pos: crate::lexer::Pos) -> Result<Ty, Diag> {
        match op {
            BinOp::Add | BinOp::Sub => comparable(lt, rt).ok_or_else(|| {
                Diag::new(
                    format!("cannot add {} and {}", lt.describe(), rt.describe()),
                    pos,
                )
            }),
            BinOp::Mul => match (lt, rt) {
                (Ty::Scalar, t) | (t, Ty::Scalar)
                    if matches!(t, Ty::Scalar | Ty::Vector | Ty::Form) =>
                {
                    Ok(t.clone())
                }
                _ => Err(Diag::new(
                    format!(
                        "`*` needs a scalar factor, got {} and {}",
                        lt.describe(),
                        rt.describe()
                    ),
                    pos,
                )),
            },
            BinOp::Wedge => match (lt, rt) {
                (Ty::Scalar, t) | (t, Ty::Scalar)
                    if matches!(t, Ty::Scalar | Ty::Vector | Ty::Form) =>
                {
                    Ok(t.clone())
                }
                (Ty::Vector, Ty::Vector) => Ok(Ty::Vector),
                (Ty::Form, Ty::Form) => Ok(Ty::Form),
                (Ty::Vector, Ty::Form) | (Ty::Form, Ty::Vector) => Err(Diag::new(
                    "wedge requires like variance (both multivectors or both multiforms)",
                    pos,
                )),
                _ => Err(Diag::new(
                    format!("cannot wedge {} and {}", lt.describe(), rt.describe()),
                    pos,
                )),
            },
        }
    }

    /// Resolve the variances of a (form, vector) operand pair, letting a
    /// scalar take the side opposite to the other operand.
    fn opposite_pair(&self, lt: &Ty, rt: &Ty) -> Option<(bool, bool)> {
        // returns (lhs_is_form, rhs_is_form) with lhs_is_form != rhs_is_form
        match (lt, rt) {
            (Ty::Form, Ty::Vector) => Some((true, false)),
            (Ty::Vector, Ty::Form) => Some((false, true)),
            (Ty::Scalar, Ty::Vector) => Some((true, false)),
            (Ty::Scalar, Ty::Form) => Some((false, true)),
            (Ty::Vector, Ty::Scalar) => Some((false, true)),
            (Ty::Form, Ty::Scalar) => Some((true, false)),
            _ => None,
        }
    }

    fn call(&mut self, name: &str, args: &[Expr], pos: crate::lexer::Pos) -> Result<Ty, Diag> {
        let need = |n: usize| -> Result<(), Diag> {
            if args.len() == n {
                Ok(())
            } else {
                Err(Diag::new(
                    format!("`{name}` takes {n} argument(s), got {}", args.len()),
                    pos,
                ))
            }
        };
        match name {
            "sp" => {
                need(2)?;
                let lt = self.check(&args[0])?;
                let rt = self.check(&args[1])?;
                self.opposite_pair(&lt, &rt).ok_or_else(|| {
                    Diag::new(
                        format!(
                            "scalar product requires one multiform and one multivector, got {} and {}",
                            lt.describe(),
                            rt.describe()
                        ),
                        pos,
                    )
                })?;
                Ok(Ty::Scalar)
            }
            "lc" | "rc" => {
                need(2)?;
                let lt = self.check(&args[0])?;
                let rt = self.check(&args[1])?;
                let (lhs_form, _) = self.opposite_pair(&lt, &rt).ok_or_else(|| {
                    Diag::new(
                        format!(
                            "contraction requires opposite variance, got {} and {}",
                            lt.describe(),
                            rt.describe()
                        ),
                        pos,
                    )
                })?;
                // left contraction lands on the big (second) side's variance;
                // right contraction lands on the first side's variance
                let out_form = if name == "lc" { !lhs_form } else { lhs_form };
                Ok(if out_form { Ty::Form } else { Ty::Vector })
            }
            "rev" | "ginv" => {
                need(1)?;
                self.element_arg(&args[0], name)
            }
            "adj" => {
                need(1)?;
                let t = self.check(&args[0])?;
                match t {
                    Ty::MapV => Ok(Ty::MapF),
                    Ty::MapF => Ok(Ty::MapV),
                    Ty::Ext(sig) => {
                        if sig.vslots + sig.fslots != 1 {
                            return Err(Diag::new(
                                "adj of an extensor requires exactly one slot",
                                pos,
                            ));
                        }
                        let slot_is_form = sig.fslots == 1;
                        Ok(Ty::Ext(SigTy {
                            vslots: if sig.out_form { 1 } else { 0 },
                            fslots: if sig.out_form { 0 } else { 1 },
                            out_form: !slot_is_form,
                        }))
                    }
                    other => Err(Diag::new(
                        format!(
                            "adj expects an operator or a one-slot extensor, got {}",
                            other.describe()
                        ),
                        pos,
                    )),
                }
            }
            "ext" | "gen" => {
                need(1)?;
                let t = self.check(&args[0])?;
                match (name, t) {
                    ("ext", Ty::MapV) => Ok(Ty::ExtOpV),
                    ("ext", Ty::MapF) => Ok(Ty::ExtOpF),
                    ("gen", Ty::MapV) => Ok(Ty::GenOpV),
                    ("gen", Ty::MapF) => Ok(Ty::GenOpF),
                    (_, other) => Err(Diag::new(
                        format!("`{name}` expects an operator, got {}", other.describe()),
                        pos,
                    )),
                }
            }
            "det" => {
                need(1)?;
                let t = self.check(&args[0])?;
                match t {
                    Ty::MapV | Ty::MapF => Ok(Ty::Scalar),
                    other => Err(Diag::new(
                        format!("det expects an operator, got {}", other.describe()),
                        pos,
                    )),
                }
            }
            "inv" => {
                need(1)?;
                let t = self.check(&args[0])?;
                match t {
                    Ty::MapV | Ty::MapF => Ok(t),
                    other => Err(Diag::new(
                        format!("inv expects an operator, got {}", other.describe()),
                        pos,
                    )),
                }
            }
            other => Err(Diag::new(format!("unknown function `{other}`"), pos)),
        }
    }

    fn apply(
        &self,
        ft: &Ty,
        ats: &[Ty],
        args: &[Expr],
        pos: crate::lexer::Pos,
    ) -> Result<Ty, Diag> {
        let one = |what: &str| -> Result<(), Diag> {
            if ats.len() == 1 {
                Ok(())
            } else {
                Err(Diag::new(
                    format!("{what} takes one argument, got {}", ats.len()),
                    pos,
                ))
            }
        };
        match ft {
            Ty::ExtOpV | Ty::GenOpV => {
                one("a lifted vector operator")?;
                match &ats[0] {
                    Ty::Vector | Ty::Scalar => Ok(Ty::Vector),
                    Ty::Form => Err(Diag::new(
                        "vector operator applied to multiform",
                        args[0].pos(),
                    )),
                    other => Err(Diag::new(
                        format!("vector operator applied to {}", other.describe()),
                        args[0].pos(),
                    )),
                }
            }
            Ty::ExtOpF | Ty::GenOpF => {
                one("a lifted form operator")?;
                match &ats[0] {
                    Ty::Form | Ty::Scalar => Ok(Ty::Form),
                    Ty::Vector => Err(Diag::new(
                        "form operator applied to multivector",
                        args[0].pos(),
                    )),
                    other => Err(Diag::new(
                        format!("form operator applied to {}", other.describe()),
                        args[0].pos(),
                    )),
                }
            }
            Ty::Ext(sig) => {
                let arity = sig.vslots + sig.fslots;
                if ats.len() != arity {
                    return Err(Diag::new(
                        format!("extensor takes {arity} argument(s), got {}", ats.len()),
                        pos,
                    ));
                }
                for (i, at) in ats.iter().enumerate() {
                    let want_form = i >= sig.vslots;
                    let ok = matches!(at, Ty::Scalar)
                        || (*at == Ty::Form) == want_form && matches!(at, Ty::Vector | Ty::Form);
                    if !ok {
                        return Err(Diag::new(
                            format!(
                                "extensor slot {} expects a {}, got {}",
                                i + 1,
                                if want_form {
                                    "multiform"
                                } else {
                                    "multivector"
                                },
                                at.describe()
                            ),
                            args[i].pos(),
                        ));
                    }
                }
                Ok(if sig.out_form { Ty::Form } else { Ty::Vector })
            }
            other => Err(Diag::new(
                format!("a {} cannot be applied to arguments", other.describe()),
                pos,
            )),
        }
    }

    fn extensor_lit(
        &mut self,
        slots: &[SlotSpec],
        output: &SlotSpec,
        entries: &[crate::ast::TableEntry],
        pos: crate::lexer::Pos,
    ) -> Result<Ty, Diag> {
        for spec in slots.iter().chain(std::iter::once(output)) {
            if spec.grades.is_empty() {
                return Err(Diag::new("a grade set cannot be empty", pos));
            }
            for &k in &spec.grades {
                if k > self.dim {
                    return Err(Diag::new(
                        format!("grade {} exceeds the dimension {}", k, self.dim),
                        pos,
                    ));
                }
            }
        }
        let vslots = slots.iter().filter(|s| !s.form).count();
        let fslots = slots.len() - vslots;
        // key order in evaluation puts vector slots first; require the
        // declaration to be written that way so keys read in slot order
        if slots.windows(2).any(|w| w[0].form && !w[1].form) {
            return Err(Diag::new("declare all vector slots before form slots", pos));
        }
        for entry in entries {
            for (slot, key) in slots.iter().zip(&entry.key) {
                let grade = key.len();
                if !slot.grades.contains(&grade) {
                    return Err(Diag::new(
                        format!("table key blade has grade {grade}, outside the slot's grade set"),
                        entry.pos,
                    ));
                }
                if key.iter().any(|&i| i >= self.dim) {
                    return Err(Diag::new(
                        format!("basis index exceeds the dimension {}", self.dim),
                        entry.pos,
                    ));
                }
            }
            let vt = self.check(&entry.value)?;
            let ok = match vt {
                Ty::Scalar => true,
                Ty::Vector => !output.form,
                Ty::Form => output.form,
                _ => false,
            };
            if !ok {
                return Err(Diag::new(
                    format!(
                        "table value is a {}, but the output side is `{}`",
                        vt.describe(),
                        if output.form { "f" } else { "v" }
                    ),
                    entry.value.pos(),
                ));
            }
        }
        Ok(Ty::Ext(SigTy {
            vslots,
            fslots,
            out_form: output.form,
        }))
    }
}
