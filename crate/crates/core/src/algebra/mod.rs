//! Exact scalars: integer-coefficient polynomials and their quotients.

pub mod context;
pub mod gcd;
mod modgcd;
pub mod monomial;
pub mod poly;
pub mod ratfun;

pub use context::{Ctx, VarContext};
pub use gcd::{coprime_basis, gcd, lcm, squarefree_part};
pub use monomial::Monomial;
pub use poly::Polynomial;
pub use ratfun::RationalFunction;

use num_rational::BigRational;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RfOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: PolyOp) -> Result<Polynomial> {
    a.check_same_ctx(b)?;
    Ok(match op {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
    })
}

pub fn rf_arith(a: &RationalFunction, b: &RationalFunction, op: RfOp) -> Result<RationalFunction> {
    match op {
        RfOp::Add => a.checked_add(b),
        RfOp::Sub => a.checked_sub(b),
        RfOp::Mul => a.checked_mul(b),
        RfOp::Div => a.checked_div(b),
    }
}

/// Orders a name → value assignment along the context; every name must be present.
pub fn point_from_assignment<'a>(
    ctx: &Ctx,
    assignment: impl IntoIterator<Item = (&'a str, BigRational)>,
) -> Result<Vec<BigRational>> {
    let mut values: Vec<Option<BigRational>> = vec![None; ctx.len()];
    for (name, value) in assignment {
        let i = ctx
            .index_of(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))?;
        values[i] = Some(value);
    }
    values
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| Error::MissingAssignment(ctx.name(i).to_string())))
        .collect()
}

/// Evaluates at a named assignment.
pub fn rf_eval<'a>(
    f: &RationalFunction,
    point: impl IntoIterator<Item = (&'a str, BigRational)>,
) -> Result<BigRational> {
    let p = point_from_assignment(f.ctx(), point)?;
    f.eval(&p)
}
