use std::fmt;

use crate::algebra::context::check_ctx;
use crate::algebra::{Ctx, Polynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::fields::{FieldSystem, VectorField};

/// Transcendental building block inside the exponential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AtomKind {
    Rational,
    Log,
    Arctan,
}

impl AtomKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(AtomKind::Rational),
            "log" => Ok(AtomKind::Log),
            "arctan" => Ok(AtomKind::Arctan),
            other => Err(Error::Schema(format!(
                "unknown atom kind `{other}` (expected rational, log or arctan)"
            ))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            AtomKind::Rational => "rational",
            AtomKind::Log => "log",
            AtomKind::Arctan => "arctan",
        }
    }
}

impl fmt::Display for AtomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `base^exponent`; the exponent is free of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub base: RationalFunction,
    pub exponent: RationalFunction,
}

/// `coeff * atom(arg)`; the coefficient is free of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpAtom {
    pub coeff: RationalFunction,
    pub kind: AtomKind,
    pub arg: RationalFunction,
}

/// `Π base^exponent · exp(Σ coeff·atom(arg))`.
///
/// Along any rational field `X` the logarithmic derivative is rational:
/// `Σ e·X(b)/b + Σ c·D(atom)` with `D(g) = X(g)`, `D(log g) = X(g)/g` and
/// `D(arctan g) = X(g)/(1+g²)`. Exponents and coefficients may involve
/// parameters, in which case vanishing is required identically in them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarbouxExpr {
    ctx: Ctx,
    factors: Vec<Factor>,
    atoms: Vec<ExpAtom>,
}

impl DarbouxExpr {
    pub fn new(ctx: &Ctx, factors: Vec<Factor>, atoms: Vec<ExpAtom>) -> Result<Self> {
        for (i, f) in factors.iter().enumerate() {
            check_ctx(ctx, f.base.ctx())?;
            check_ctx(ctx, f.exponent.ctx())?;
            if f.base.is_zero() {
                return Err(Error::Darboux(format!("factor {} has a zero base", i + 1)));
            }
            if f.exponent.depends_on_variables() {
                return Err(Error::Darboux(format!(
                    "exponent `{}` of factor {} depends on a variable",
                    f.exponent,
                    i + 1
                )));
            }
        }
        for (i, a) in atoms.iter().enumerate() {
            check_ctx(ctx, a.coeff.ctx())?;
            check_ctx(ctx, a.arg.ctx())?;
            if a.coeff.depends_on_variables() {
                return Err(Error::Darboux(format!(
                    "coefficient `{}` of exp atom {} depends on a variable",
                    a.coeff,
                    i + 1
                )));
            }
            if a.kind == AtomKind::Log && a.arg.is_zero() {
                return Err(Error::Darboux(format!(
                    "log atom {} has a zero argument",
                    i + 1
                )));
            }
        }
        Ok(DarbouxExpr {
            ctx: ctx.clone(),
            factors,
            atoms,
        })
    }

    /// The constant `1`.
    pub fn one(ctx: &Ctx) -> Self {
        DarbouxExpr {
            ctx: ctx.clone(),
            factors: Vec::new(),
            atoms: Vec::new(),
        }
    }

    /// A polynomial as a single factor with exponent 1.
    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        let ctx = p.ctx().clone();
        Self::new(
            &ctx,
            vec![Factor {
                base: RationalFunction::from_poly(p.clone()),
                exponent: RationalFunction::one(&ctx),
            }],
            Vec::new(),
        )
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn atoms(&self) -> &[ExpAtom] {
        &self.atoms
    }

    /// `X(F)/F` as a rational function.
    pub fn log_derivative(&self, x: &VectorField) -> Result<RationalFunction> {
        check_ctx(&self.ctx, x.ctx())?;
        let mut acc = RationalFunction::zero(&self.ctx);
        for f in &self.factors {
            let xb = x.apply_unchecked(&f.base);
            if xb.is_zero() {
                continue;
            }
            acc = &acc + &(&f.exponent * &xb.checked_div(&f.base)?);
        }
        for a in &self.atoms {
            let xg = x.apply_unchecked(&a.arg);
            if xg.is_zero() {
                continue;
            }
            let d = match a.kind {
                AtomKind::Rational => xg,
                AtomKind::Log => xg.checked_div(&a.arg)?,
                AtomKind::Arctan => {
                    let one = RationalFunction::one(&self.ctx);
                    xg.checked_div(&(&one + &(&a.arg * &a.arg)))?
                }
            };
            acc = &acc + &(&a.coeff * &d);
        }
        Ok(acc)
    }
}

/// `X(F)/F` for each field of the system.
pub fn darboux_residuals(s: &FieldSystem, f: &DarbouxExpr) -> Result<Vec<RationalFunction>> {
    s.members().iter().map(|x| f.log_derivative(x)).collect()
}

/// Whether every field of `s` annihilates `f`, exactly.
pub fn verify_darboux(s: &FieldSystem, f: &DarbouxExpr) -> Result<bool> {
    Ok(darboux_residuals(s, f)?
        .iter()
        .all(RationalFunction::is_zero))
}
