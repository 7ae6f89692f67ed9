//! Deterministic text form of scalars. Output reparses to an equal value.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::algebra::{Monomial, Polynomial, RationalFunction, VarContext};

fn write_monomial(out: &mut String, ctx: &VarContext, m: &Monomial) {
    let mut first = true;
    for i in m.support() {
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(ctx.name(i));
        let e = m.exp(i);
        if e > 1 {
            let _ = write!(out, "^{e}");
        }
    }
}

fn write_term(out: &mut String, ctx: &VarContext, m: &Monomial, c: &BigInt) {
    if m.is_one() {
        let _ = write!(out, "{c}");
        return;
    }
    if c.is_one() {
        // nothing
    } else if (-c).is_one() {
        out.push('-');
    } else {
        let _ = write!(out, "{c}*");
    }
    write_monomial(out, ctx, m);
}

pub(crate) fn poly_to_string(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let ctx = p.ctx();
    let mut out = String::new();
    for (i, (m, c)) in p.terms().iter().enumerate() {
        if i > 0 {
            if c.is_negative() {
                out.push('-');
                write_term(&mut out, ctx, m, &-c);
                continue;
            }
            out.push('+');
        }
        write_term(&mut out, ctx, m, c);
    }
    out
}

/// Polynomial text, parenthesised unless it is a single atom (an integer, or
/// one name with an optional power) so that it can stand after `/` or `^`.
pub fn paren_factor(p: &Polynomial) -> String {
    let s = poly_to_string(p);
    let atomic = match p.terms() {
        [(m, c)] if m.is_one() => !c.is_negative(),
        [(m, c)] => c.is_one() && m.support().count() == 1,
        _ => false,
    };
    if atomic {
        s
    } else {
        format!("({s})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&poly_to_string(self))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numer();
        if self.denom().is_one() {
            return f.write_str(&poly_to_string(num));
        }
        let top = if num.num_terms() > 1 {
            format!("({})", poly_to_string(num))
        } else {
            poly_to_string(num)
        };
        write!(f, "{top}/{}", paren_factor(self.denom()))
    }
}

/// Printed form of a rational function.
pub fn print_scalar(f: &RationalFunction) -> String {
    f.to_string()
}
