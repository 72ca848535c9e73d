//! Canonical text rendering.
//!
//! The grammar is bit-exact: terms sorted by (grade, mask), coefficients
//! printed with up to 12 significant digits, blades as `e1^e2^e5` (vector
//! side) or `w1^w2^w5` (form side). The matching parser lives in the CLI
//! crate.

use alloc::string::String;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::BladeMask;
use crate::exterior::{Exterior, Variance};

/// Round to at most 12 significant decimal digits, so derived float noise
/// does not leak into the canonical grammar.
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let mut scale = 1.0f64;
    let a = x.abs();
    // bring a*scale into [1e11, 1e12)
    while a * scale < 1e11 {
        scale *= 10.0;
    }
    while a * scale >= 1e12 {
        scale /= 10.0;
    }
    libm::round(x * scale) / scale
}

/// Coefficient text: shortest decimal form of the 12-digit rounding.
pub fn fmt_coeff(x: f64) -> String {
    let r = round_sig12(x);
    if r == 0.0 {
        // normalize -0
        return String::from("0");
    }
    r.to_string()
}

/// Blade text for one basis blade, e.g. `e1^e3`. The empty blade has no
/// symbol of its own; callers render its coefficient alone.
pub fn fmt_blade(symbol: &str, mask: BladeMask) -> String {
    let mut out = String::new();
    for (i, idx) in mask.indices().enumerate() {
        if i > 0 {
            out.push('^');
        }
        out.push_str(symbol);
        out.push_str(&itoa(idx + 1));
    }
    out
}

fn itoa(mut v: usize) -> String {
    if v == 0 {
        return String::from("0");
    }
    let mut digits = Vec::new();
    while v > 0 {
        digits.push(b'0' + (v % 10) as u8);
        v /= 10;
    }
    digits.reverse();
    String::from_utf8(digits).unwrap()
}

pub fn render<K: Variance>(value: &Exterior<K>) -> String {
    let mut terms: Vec<(usize, BladeMask, f64)> = value
        .terms()
        .map(|(m, c)| (m.grade(), m, round_sig12(c)))
        .filter(|&(_, _, c)| c != 0.0)
        .collect();
    terms.sort_by_key(|&(g, m, _)| (g, m));
    if terms.is_empty() {
        return String::from("0");
    }
    let mut out = String::new();
    for (i, &(grade, mask, coeff)) in terms.iter().enumerate() {
        let neg = coeff < 0.0;
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = coeff.abs();
        if grade == 0 {
            out.push_str(&fmt_coeff(mag));
        } else if mag == 1.0 {
            out.push_str(&fmt_blade(K::SYMBOL, mask));
        } else {
            out.push_str(&fmt_coeff(mag));
            out.push(' ');
            out.push_str(&fmt_blade(K::SYMBOL, mask));
        }
    }
    out
}

impl<K: Variance> fmt::Display for Exterior<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraContext;
    use crate::exterior::{Multiform, Multivector};

    fn ctx() -> AlgebraContext {
        AlgebraContext::new(5).unwrap()
    }

    #[test]
    fn renders_sorted_by_grade_then_mask() {
        let x = Multivector::from_terms(
            ctx(),
            [
                (BladeMask::from_indices(&[0, 1]), 2.0),
                (BladeMask::SCALAR, 1.0),
                (BladeMask::from_indices(&[2]), -1.0),
            ],
        );
        assert_eq!(render(&x), "1 - e3 + 2 e1^e2");
    }

    #[test]
    fn renders_forms_with_w() {
        let p = Multiform::basis_blade(ctx(), BladeMask::from_indices(&[0, 1, 4]));
        assert_eq!(render(&p), "w1^w2^w5");
        assert_eq!(render(&p.scale(-1.0)), "-w1^w2^w5");
        assert_eq!(render(&p.scale(0.5)), "0.5 w1^w2^w5");
    }

    #[test]
    fn zero_renders_as_zero() {
        assert_eq!(render(&Multivector::zero(ctx())), "0");
    }

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_coeff(1.0000000000001), "1");
        assert_eq!(fmt_coeff(2.5), "2.5");
        assert_eq!(fmt_coeff(-3.0), "-3");
        assert_eq!(fmt_coeff(1.0 / 3.0), "0.333333333333");
    }
}
