//! Abstract syntax for scripts and expressions.

use crate::lexer::Pos;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Wedge,
}

/// One slot or output declaration in an extensor literal: the side
/// (`v` or `f`) plus the admitted grades.
#[derive(Debug, Clone)]
pub struct SlotSpec {
    pub form: bool,
    pub grades: Vec<usize>,
}

/// One table row of an extensor literal: a basis-blade key per slot
/// (ascending index chains; `1` for the scalar blade) and the output value.
#[derive(Debug, Clone)]
pub struct TableEntry {
    pub key: Vec<Vec<usize>>,
    pub value: Expr,
    pub pos: Pos,
}

#[derive(Debug, Clone)]
pub enum Expr {
    Num(f64, Pos),
    /// Basis element: `e3` (vector) or `w3` (form); index is zero-based.
    Blade {
        form: bool,
        index: usize,
        pos: Pos,
    },
    Name(String, Pos),
    Neg(Box<Expr>, Pos),
    Bin {
        op: BinOp,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
        pos: Pos,
    },
    Call {
        name: String,
        args: Vec<Expr>,
        pos: Pos,
    },
    /// `grade(x, k)` with a literal grade.
    Grade {
        arg: Box<Expr>,
        k: usize,
        pos: Pos,
    },
    /// `gset(x, {k1, k2})` with literal grades.
    GradeSetPart {
        arg: Box<Expr>,
        grades: Vec<usize>,
        pos: Pos,
    },
    /// Row-major matrix literal `[[a,b],[c,d]]`: an operator on V.
    Matrix {
        rows: Vec<Vec<f64>>,
        pos: Pos,
    },
    /// Postfix application `f(x, ...)` of an operator or extensor value.
    Apply {
        func: Box<Expr>,
        args: Vec<Expr>,
        pos: Pos,
    },
    ExtensorLit {
        slots: Vec<SlotSpec>,
        output: SlotSpec,
        entries: Vec<TableEntry>,
        pos: Pos,
    },
}

impl Expr {
    pub fn pos(&self) -> Pos {
        match self {
            Expr::Num(_, p)
            | Expr::Blade { pos: p, .. }
            | Expr::Name(_, p)
            | Expr::Neg(_, p)
            | Expr::Bin { pos: p, .. }
            | Expr::Call { pos: p, .. }
            | Expr::Grade { pos: p, .. }
            | Expr::GradeSetPart { pos: p, .. }
            | Expr::Matrix { pos: p, .. }
            | Expr::Apply { pos: p, .. }
            | Expr::ExtensorLit { pos: p, .. } => *p,
        }
    }
}

#[derive(Debug, Clone)]
pub enum Stmt {
    Let { name: String, value: Expr, pos: Pos },
    Print { value: Expr, pos: Pos },
    Assert { lhs: Expr, rhs: Expr, pos: Pos },
}

#[derive(Debug, Clone)]
pub struct Script {
    pub dim: usize,
    pub stmts: Vec<Stmt>,
}
