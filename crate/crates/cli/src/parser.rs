//! Recursive-descent parser. Precedence: `^` binds tighter than `*`, which
//! binds tighter than `+`/`-`; `^` is left-associative. A number directly
//! followed by a basis element multiplies it, so rendered values such as
//! `2 e1^e2` parse back to themselves.

use crate::ast::{BinOp, Expr, Script, SlotSpec, Stmt, TableEntry};
use crate::lexer::{lex, Pos, Tok, Token};

#[derive(Debug, Clone)]
pub struct Diag {
    pub msg: String,
    pub pos: Pos,
}

impl Diag {
    pub fn new(msg: impl Into<String>, pos: Pos) -> Diag {
        Diag {
            msg: msg.into(),
            pos,
        }
    }
}

const BUILTINS: &[&str] = &[
    "sp", "lc", "rc", "grade", "gset", "rev", "ginv", "adj", "ext", "gen", "det", "inv",
];

struct Parser {
    toks: Vec<Token>,
    i: usize,
}

pub fn parse_script(src: &str) -> Result<Script, Diag> {
    let toks = lex(src).map_err(|e| Diag::new(e.msg, e.pos))?;
    let mut p = Parser { toks, i: 0 };
    p.skip_newlines();
    let pos = p.peek_pos();
    match p.next_ident() {
        Some(s) if s == "dim" => {}
        _ => return Err(Diag::new("script must start with `dim N`", pos)),
    }
    let dim = p.integer("dimension")?;
    p.end_of_stmt()?;
    let mut stmts = Vec::new();
    loop {
        p.skip_newlines();
        if p.at(&Tok::Eof) {
            break;
        }
        stmts.push(p.stmt()?);
        p.end_of_stmt()?;
    }
    Ok(Script { dim, stmts })
}

pub fn parse_expr(src: &str) -> Result<Expr, Diag> {
    let toks = lex(src).map_err(|e| Diag::new(e.msg, e.pos))?;
    let mut p = Parser { toks, i: 0 };
    p.skip_newlines();
    let e = p.expr()?;
    p.skip_newlines();
    if !p.at(&Tok::Eof) {
        return Err(Diag::new(
            format!("unexpected {} after expression", p.peek()),
            p.peek_pos(),
        ));
    }
    Ok(e)
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].tok
    }

    fn peek_pos(&self) -> Pos {
        self.toks[self.i].pos
    }

    fn peek2(&self) -> &Tok {
        let j = (self.i + 1).min(self.toks.len() - 1);
        &self.toks[j].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn at(&self, t: &Tok) -> bool {
        self.peek() == t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.at(t) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok) -> Result<Pos, Diag> {
        let pos = self.peek_pos();
        if self.eat(t) {
            Ok(pos)
        } else {
            Err(Diag::new(
                format!("expected {t}, found {}", self.peek()),
                pos,
            ))
        }
    }

    fn skip_newlines(&mut self) {
        while self.at(&Tok::Newline) {
            self.bump();
        }
    }

    fn end_of_stmt(&mut self) -> Result<(), Diag> {
        if self.at(&Tok::Eof) || self.eat(&Tok::Newline) || self.eat(&Tok::Semi) {
            Ok(())
        } else {
            Err(Diag::new(
                format!("expected end of statement, found {}", self.peek()),
                self.peek_pos(),
            ))
        }
    }

    fn next_ident(&mut self) -> Option<String> {
        if let Tok::Ident(s) = self.peek() {
            let s = s.clone();
            self.bump();
            Some(s)
        } else {
            None
        }
    }

    fn integer(&mut self, what: &str) -> Result<usize, Diag> {
        let pos = self.peek_pos();
        match self.peek() {
            Tok::Num(x) if x.fract() == 0.0 && *x >= 0.0 => {
                let v = *x as usize;
                self.bump();
                Ok(v)
            }
            other => Err(Diag::new(
                format!("expected {what} (a nonnegative integer), found {other}"),
                pos,
            )),
        }
    }

    fn stmt(&mut self) -> Result<Stmt, Diag> {
        let pos = self.peek_pos();
        let kw = self.next_ident().ok_or_else(|| {
            Diag::new(format!("expected a statement, found {}", self.peek()), pos)
        })?;
        match kw.as_str() {
            "dim" => Err(Diag::new(
                "duplicate `dim` (it must appear exactly once, first)",
                pos,
            )),
            "let" => {
                let name_pos = self.peek_pos();
                let name = self
                    .next_ident()
                    .ok_or_else(|| Diag::new("expected a name after `let`", name_pos))?;
                if is_blade_name(&name).is_some() || BUILTINS.contains(&name.as_str()) {
                    return Err(Diag::new(
                        format!("`{name}` is reserved and cannot be bound"),
                        name_pos,
                    ));
                }
                self.expect(&Tok::Assign)?;
                let value = self.expr()?;
                Ok(Stmt::Let { name, value, pos })
            }
            "print" => Ok(Stmt::Print {
                value: self.expr()?,
                pos,
            }),
            "assert" => {
                let lhs = self.expr()?;
                self.expect(&Tok::EqEq)?;
                let rhs = self.expr()?;
                Ok(Stmt::Assert { lhs, rhs, pos })
            }
            other => Err(Diag::new(
                format!("unknown statement `{other}` (expected let, print, or assert)"),
                pos,
            )),
        }
    }

    fn expr(&mut self) -> Result<Expr, Diag> {
        let mut lhs = self.mul_expr()?;
        loop {
            let pos = self.peek_pos();
            let op = if self.eat(&Tok::Plus) {
                BinOp::Add
            } else if self.eat(&Tok::Minus) {
                BinOp::Sub
            } else {
                break;
            };
            let rhs = self.mul_expr()?;
            lhs = Expr::Bin {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
                pos,
            };
        }
        Ok(lhs)
    }

    fn mul_expr(&mut self) -> Result<Expr, Diag> {
        let mut lhs = self.scaled_expr()?;
        loop {
            let pos = self.peek_pos();
            if !self.eat(&Tok::Star) {
                break;
            }
            let rhs = self.scaled_expr()?;
            lhs = Expr::Bin {
                op: BinOp::Mul,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
                pos,
            };
        }
        Ok(lhs)
    }

    /// A wedge chain, optionally preceded by a literal coefficient.
    fn scaled_expr(&mut self) -> Result<Expr, Diag> {
        if let (Tok::Num(x), Tok::Ident(name)) = (self.peek(), self.peek2()) {
            if is_blade_name(name).is_some() {
                let x = *x;
                let pos = self.peek_pos();
                self.bump();
                let chain = self.wedge_expr()?;
                return Ok(Expr::Bin {
                    op: BinOp::Mul,
                    lhs: Box::new(Expr::Num(x, pos)),
                    rhs: Box::new(chain),
                    pos,
                });
            }
        }
        self.wedge_expr()
    }

    fn wedge_expr(&mut self) -> Result<Expr, Diag> {
        let mut lhs = self.unary_expr()?;
        loop {
            let pos = self.peek_pos();
            if !self.eat(&Tok::Caret) {
                break;
            }
            let rhs = self.unary_expr()?;
            lhs = Expr::Bin {
                op: BinOp::Wedge,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
                pos,
            };
        }
        Ok(lhs)
    }

    fn unary_expr(&mut self) -> Result<Expr, Diag> {
        let pos = self.peek_pos();
        if self.eat(&Tok::Minus) {
            let inner = self.unary_expr()?;
            return Ok(Expr::Neg(Box::new(inner), pos));
        }
        self.postfix_expr()
    }

    fn postfix_expr(&mut self) -> Result<Expr, Diag> {
        let mut e = self.primary()?;
        while self.at(&Tok::LParen) {
            let pos = self.peek_pos();
            self.bump();
            let mut args = Vec::new();
            if !self.at(&Tok::RParen) {
                loop {
                    args.push(self.expr()?);
                    if !self.eat(&Tok::Comma) {
                        break;
                    }
                }
            }
            self.expect(&Tok::RParen)?;
            e = Expr::Apply {
                func: Box::new(e),
                args,
                pos,
            };
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr, Diag> {
        let pos = self.peek_pos();
        match self.peek().clone() {
            Tok::Num(x) => {
                self.bump();
                Ok(Expr::Num(x, pos))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(e)
            }
            Tok::LBracket => self.matrix(),
            Tok::Ident(name) => {
                self.bump();
                if name == "extensor" {
                    return self.extensor_lit(pos);
                }
                if let Some((form, index)) = is_blade_name(&name) {
                    return Ok(Expr::Blade { form, index, pos });
                }
                if BUILTINS.contains(&name.as_str()) {
                    return self.call(name, pos);
                }
                Ok(Expr::Name(name, pos))
            }
            other => Err(Diag::new(
                format!("expected an expression, found {other}"),
                pos,
            )),
        }
    }

    fn call(&mut self, name: String, pos: Pos) -> Result<Expr, Diag> {
        self.expect(&Tok::LParen)?;
        if name == "grade" {
            let arg = self.expr()?;
            self.expect(&Tok::Comma)?;
            let k = self.integer("grade")?;
            self.expect(&Tok::RParen)?;
            return Ok(Expr::Grade {
                arg: Box::new(arg),
                k,
                pos,
            });
        }
        if name == "gset" {
            let arg = self.expr()?;
            self.expect(&Tok::Comma)?;
            let grades = self.grade_braces()?;
            self.expect(&Tok::RParen)?;
            return Ok(Expr::GradeSetPart {
                arg: Box::new(arg),
                grades,
                pos,
            });
        }
        let mut args = Vec::new();
        if !self.at(&Tok::RParen) {
            loop {
                args.push(self.expr()?);
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(&Tok::RParen)?;
        Ok(Expr::Call { name, args, pos })
    }

    fn grade_braces(&mut self) -> Result<Vec<usize>, Diag> {
        self.expect(&Tok::LBrace)?;
        let mut grades = Vec::new();
        if !self.at(&Tok::RBrace) {
            loop {
                grades.push(self.integer("grade")?);
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(&Tok::RBrace)?;
        Ok(grades)
    }

    fn signed_number(&mut self) -> Result<f64, Diag> {
        let neg = self.eat(&Tok::Minus);
        let pos = self.peek_pos();
        match self.peek() {
            Tok::Num(x) => {
                let v = if neg { -*x } else { *x };
                self.bump();
                Ok(v)
            }
            other => Err(Diag::new(
                format!("expected a number in matrix literal, found {other}"),
                pos,
            )),
        }
    }

    fn matrix(&mut self) -> Result<Expr, Diag> {
        let pos = self.expect(&Tok::LBracket)?;
        let mut rows = Vec::new();
        loop {
            self.expect(&Tok::LBracket)?;
            let mut row = Vec::new();
            loop {
                row.push(self.signed_number()?);
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
            self.expect(&Tok::RBracket)?;
            rows.push(row);
            if !self.eat(&Tok::Comma) {
                break;
            }
        }
        self.expect(&Tok::RBracket)?;
        Ok(Expr::Matrix { rows, pos })
    }

    fn slot_spec(&mut self) -> Result<SlotSpec, Diag> {
        let pos = self.peek_pos();
        let side = self
            .next_ident()
            .ok_or_else(|| Diag::new("expected slot side `v` or `f`", pos))?;
        let form = match side.as_str() {
            "v" => false,
            "f" => true,
            other => {
                return Err(Diag::new(
                    format!("expected slot side `v` or `f`, found `{other}`"),
                    pos,
                ))
            }
        };
        let grades = self.grade_braces()?;
        Ok(SlotSpec { form, grades })
    }

    /// One key blade: `1` for the scalar blade or an ascending chain such
    /// as `e1^e3`. The basis prefix must match the slot's side.
    fn key_blade(&mut self, slot: &SlotSpec) -> Result<Vec<usize>, Diag> {
        let pos = self.peek_pos();
        if matches!(self.peek(), Tok::Num(x) if *x == 1.0) {
            self.bump();
            return Ok(Vec::new());
        }
        let mut indices = Vec::new();
        loop {
            let pos = self.peek_pos();
            let name = self
                .next_ident()
                .ok_or_else(|| Diag::new("expected a basis blade in table key", pos))?;
            let (form, index) = is_blade_name(&name)
                .ok_or_else(|| Diag::new(format!("`{name}` is not a basis element"), pos))?;
            if form != slot.form {
                return Err(Diag::new(
                    format!(
                        "table key basis `{name}` does not match the slot side (`{}`)",
                        if slot.form { "f" } else { "v" }
                    ),
                    pos,
                ));
            }
            indices.push(index);
            if !self.eat(&Tok::Caret) {
                break;
            }
        }
        if !indices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Diag::new(
                "table key blade indices must be strictly ascending",
                pos,
            ));
        }
        Ok(indices)
    }

    fn extensor_lit(&mut self, pos: Pos) -> Result<Expr, Diag> {
        self.expect(&Tok::LParen)?;
        let mut slots = vec![self.slot_spec()?];
        while self.eat(&Tok::Comma) {
            slots.push(self.slot_spec()?);
        }
        self.expect(&Tok::Arrow)?;
        let output = self.slot_spec()?;
        let mut entries = Vec::new();
        while self.eat(&Tok::Semi) {
            if self.at(&Tok::RParen) {
                break; // allow a trailing semicolon
            }
            let entry_pos = self.expect(&Tok::LBracket)?;
            let mut key = Vec::new();
            for (s, slot) in slots.iter().enumerate() {
                if s > 0 {
                    self.expect(&Tok::Comma)?;
                }
                key.push(self.key_blade(slot)?);
            }
            self.expect(&Tok::RBracket)?;
            self.expect(&Tok::Assign)?;
            let value = self.expr()?;
            entries.push(TableEntry {
                key,
                value,
                pos: entry_pos,
            });
        }
        self.expect(&Tok::RParen)?;
        Ok(Expr::ExtensorLit {
            slots,
            output,
            entries,
            pos,
        })
    }
}

/// `e3` / `w3` style basis names; returns (is_form, zero-based index).
pub fn is_blade_name(name: &str) -> Option<(bool, usize)> {
    let mut chars = name.chars();
    let head = chars.next()?;
    let form = match head {
        'e' => false,
        'w' => true,
        _ => return None,
    };
    let rest = chars.as_str();
    if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let idx: usize = rest.parse().ok()?;
    if idx == 0 {
        return None;
    }
    Some((form, idx - 1))
}
