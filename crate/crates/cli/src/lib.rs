//! Script language front end for the exterior-algebra kernel: parsing,
//! static checking, evaluation, and canonical rendering, shared between the
//! `kernel` binary and in-process tests.

pub mod ast;
pub mod eval;
pub mod lexer;
pub mod parser;
pub mod render;
pub mod types;

use extensor_core::algebra::AlgebraContext;

use ast::Stmt;
use eval::{Evaluator, Val};
pub use render::Format;

/// Absolute tolerance for `assert` comparisons.
pub const ASSERT_TOL: f64 = 1e-9;

/// Result of running a script or expression: collected `print` output, any
/// diagnostic text, and the process exit code (0 success, 1 failed assert,
/// 2 parse/type error, 3 runtime error).
#[derive(Debug, Clone)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn fail(stdout: String, stderr: String, code: i32) -> Outcome {
        Outcome {
            stdout,
            stderr,
            code,
        }
    }
}

pub fn run_script(src: &str, format: Format) -> Outcome {
    let script = match parser::parse_script(src) {
        Ok(s) => s,
        Err(d) => {
            return Outcome::fail(
                String::new(),
                format!("parse error at {}: {}\n", d.pos, d.msg),
                2,
            )
        }
    };
    if let Err(d) = types::check_script(&script) {
        return Outcome::fail(
            String::new(),
            format!("type error at {}: {}\n", d.pos, d.msg),
            2,
        );
    }
    let ctx = AlgebraContext::new(script.dim).expect("dimension was checked");
    let mut ev = Evaluator::new(ctx);
    let mut out = String::new();
    for stmt in &script.stmts {
        match stmt {
            Stmt::Let { name, value, .. } => match ev.eval(value) {
                Ok(v) => {
                    ev.env.insert(name.clone(), v);
                }
                Err(d) => {
                    return Outcome::fail(
                        out,
                        format!("runtime error at {}: {}\n", d.pos, d.msg),
                        3,
                    )
                }
            },
            Stmt::Print { value, .. } => match ev.eval(value) {
                Ok(v) => {
                    out.push_str(&render::show(&v, format));
                    out.push('\n');
                }
                Err(d) => {
                    return Outcome::fail(
                        out,
                        format!("runtime error at {}: {}\n", d.pos, d.msg),
                        3,
                    )
                }
            },
            Stmt::Assert { lhs, rhs, pos } => {
                let l = match ev.eval(lhs) {
                    Ok(v) => v,
                    Err(d) => {
                        return Outcome::fail(
                            out,
                            format!("runtime error at {}: {}\n", d.pos, d.msg),
                            3,
                        )
                    }
                };
                let r = match ev.eval(rhs) {
                    Ok(v) => v,
                    Err(d) => {
                        return Outcome::fail(
                            out,
                            format!("runtime error at {}: {}\n", d.pos, d.msg),
                            3,
                        )
                    }
                };
                if !assert_close(&l, &r, ctx) {
                    return Outcome::fail(
                        out,
                        format!(
                            "assertion failed at line {}: {} != {}\n",
                            pos.line,
                            render::text(&l),
                            render::text(&r)
                        ),
                        1,
                    );
                }
            }
        }
    }
    Outcome::ok(out)
}

pub fn run_expr(src: &str, dim: usize, format: Format) -> Outcome {
    let expr = match parser::parse_expr(src) {
        Ok(e) => e,
        Err(d) => {
            return Outcome::fail(
                String::new(),
                format!("parse error at {}: {}\n", d.pos, d.msg),
                2,
            )
        }
    };
    if !(1..=extensor_core::MAX_DIM).contains(&dim) {
        return Outcome::fail(
            String::new(),
            format!(
                "type error: dimension must be between 1 and {}, got {dim}\n",
                extensor_core::MAX_DIM
            ),
            2,
        );
    }
    let mut ck = types::Checker {
        dim,
        env: std::collections::HashMap::new(),
    };
    if let Err(d) = ck.check(&expr) {
        return Outcome::fail(
            String::new(),
            format!("type error at {}: {}\n", d.pos, d.msg),
            2,
        );
    }
    let ctx = AlgebraContext::new(dim).expect("dimension was checked");
    let mut ev = Evaluator::new(ctx);
    match ev.eval(&expr) {
        Ok(v) => Outcome::ok(format!("{}\n", render::show(&v, format))),
        Err(d) => Outcome::fail(
            String::new(),
            format!("runtime error at {}: {}\n", d.pos, d.msg),
            3,
        ),
    }
}

fn assert_close(l: &Val, r: &Val, ctx: AlgebraContext) -> bool {
    match (l, r) {
        (Val::Scalar(a), Val::Scalar(b)) => (a - b).abs() <= ASSERT_TOL,
        (Val::Form(_), _) | (_, Val::Form(_)) => {
            l.as_form(ctx).max_diff(&r.as_form(ctx)) <= ASSERT_TOL
        }
        _ => l.as_vector(ctx).max_diff(&r.as_vector(ctx)) <= ASSERT_TOL,
    }
}
