//! Vector fields as first-order differential operators.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::context::check_ctx;
use crate::algebra::{Ctx, RationalFunction};
use crate::error::{Error, Result};
use crate::linalg;

/// `Σ coeffs[k] ∂/∂x_k` over the variables of a context.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VectorField {
    ctx: Ctx,
    coeffs: Vec<RationalFunction>,
}

impl VectorField {
    pub fn new(ctx: &Ctx, coeffs: Vec<RationalFunction>) -> Result<Self> {
        if coeffs.len() != ctx.num_vars() {
            return Err(Error::Arity {
                field: 0,
                expected: ctx.num_vars(),
                found: coeffs.len(),
            });
        }
        for c in &coeffs {
            check_ctx(ctx, c.ctx())?;
        }
        Ok(VectorField {
            ctx: ctx.clone(),
            coeffs,
        })
    }

    pub fn zero(ctx: &Ctx) -> Self {
        VectorField {
            ctx: ctx.clone(),
            coeffs: vec![RationalFunction::zero(ctx); ctx.num_vars()],
        }
    }

    /// `∂/∂x_index`.
    pub fn coordinate(ctx: &Ctx, index: usize) -> Self {
        let mut f = VectorField::zero(ctx);
        f.coeffs[index] = RationalFunction::one(ctx);
        f
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &RationalFunction {
        &self.coeffs[k]
    }

    pub fn into_coeffs(self) -> Vec<RationalFunction> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RationalFunction::is_zero)
    }

    /// `X(f) = Σ_k coeffs[k] ∂f/∂x_k`; parameters are constants.
    pub fn apply(&self, f: &RationalFunction) -> Result<RationalFunction> {
        check_ctx(&self.ctx, f.ctx())?;
        Ok(self.apply_unchecked(f))
    }

    pub(crate) fn apply_unchecked(&self, f: &RationalFunction) -> RationalFunction {
        let mut acc = RationalFunction::zero(&self.ctx);
        if f.constant_value().is_some() {
            return acc;
        }
        let num_support = f.numer().support();
        let den_support = f.denom().support();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() || !(num_support[k] || den_support[k]) {
                continue;
            }
            acc = &acc + &(c * &f.partial(k));
        }
        acc
    }

    /// `[X, Y]_j = X(Y_j) - Y(X_j)`.
    pub fn bracket(&self, other: &VectorField) -> Result<VectorField> {
        check_ctx(&self.ctx, &other.ctx)?;
        let coeffs = (0..self.coeffs.len())
            .map(|j| {
                let a = self.apply_unchecked(&other.coeffs[j]);
                let b = other.apply_unchecked(&self.coeffs[j]);
                &a - &b
            })
            .collect();
        Ok(VectorField {
            ctx: self.ctx.clone(),
            coeffs,
        })
    }

    /// Exact value of `[self, other]` at a point where no coefficient has a pole.
    pub fn bracket_at(
        &self,
        other: &VectorField,
        point: &[BigRational],
    ) -> Result<Vec<BigRational>> {
        check_ctx(&self.ctx, &other.ctx)?;
        let jx = self
            .coeffs
            .iter()
            .map(|c| c.jet(point))
            .collect::<Result<Vec<_>>>()?;
        let jy = other
            .coeffs
            .iter()
            .map(|c| c.jet(point))
            .collect::<Result<Vec<_>>>()?;
        Ok((0..self.coeffs.len())
            .map(|j| {
                let mut acc = BigRational::zero();
                for k in 0..self.coeffs.len() {
                    acc += &jx[k].0 * &jy[j].1[k] - &jy[k].0 * &jx[j].1[k];
                }
                acc
            })
            .collect())
    }

    pub fn scale(&self, f: &RationalFunction) -> Result<VectorField> {
        check_ctx(&self.ctx, f.ctx())?;
        Ok(VectorField {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| c * f).collect(),
        })
    }

    pub fn add(&self, other: &VectorField) -> Result<VectorField> {
        check_ctx(&self.ctx, &other.ctx)?;
        Ok(VectorField {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn eval(&self, point: &[BigRational]) -> Result<Vec<BigRational>> {
        self.coeffs.iter().map(|c| c.eval(point)).collect()
    }
}

impl fmt::Display for VectorField {
    /// Debug form `c1*d/dx + c2*d/dy`, zero coefficients omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let name = self.ctx.name(k);
            if c.is_one() {
                write!(f, "d/d{name}")?;
            } else {
                write!(f, "({c})*d/d{name}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VectorField({self})")
    }
}

/// Ordered family of fields over one context; order is the matrix row order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FieldSystem {
    ctx: Ctx,
    members: Vec<VectorField>,
}

impl FieldSystem {
    pub fn new(ctx: &Ctx, members: Vec<VectorField>) -> Result<Self> {
        for m in &members {
            check_ctx(ctx, m.ctx())?;
        }
        Ok(FieldSystem {
            ctx: ctx.clone(),
            members,
        })
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn members(&self) -> &[VectorField] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub(crate) fn matrix(&self) -> Vec<Vec<RationalFunction>> {
        self.members.iter().map(|m| m.coeffs.clone()).collect()
    }

    /// Rank of the coefficient matrix over the rational-function field.
    pub fn generic_rank(&self) -> usize {
        linalg::rank(self.matrix())
    }

    /// Rank of the coefficient matrix evaluated at a point (one value per name).
    pub fn rank_at_point(&self, point: &[BigRational]) -> Result<usize> {
        let rows = self
            .members
            .iter()
            .map(|m| m.eval(point))
            .collect::<Result<Vec<_>>>()?;
        Ok(linalg::rank(rows))
    }

    /// Every nonconstant denominator occurring in some coefficient.
    pub fn denominators(&self) -> Vec<crate::algebra::Polynomial> {
        self.members
            .iter()
            .flat_map(|m| m.coeffs.iter())
            .map(|c| c.denom().clone())
            .filter(|d| !d.is_constant())
            .collect()
    }
}

pub fn apply(x: &VectorField, f: &RationalFunction) -> Result<RationalFunction> {
    x.apply(f)
}

pub fn lie_bracket(x: &VectorField, y: &VectorField) -> Result<VectorField> {
    x.bracket(y)
}

pub fn generic_rank(s: &FieldSystem) -> usize {
    s.generic_rank()
}

pub fn rank_at_point(s: &FieldSystem, point: &[BigRational]) -> Result<usize> {
    s.rank_at_point(point)
}
