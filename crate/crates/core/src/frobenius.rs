//! Reduced row echelon form over the function field and commuting closure.
//!
//! Row-reducing a family over `ℚ(x)` gives fields of the form
//! `∂/∂x_p + Σ_{k non-pivot} b_k ∂/∂x_k`. The bracket of two such fields has zero
//! components on every pivot column, so it is either zero or independent of
//! the rows; for the basis of a Lie algebra the rows commute, and in general
//! appending nonzero brackets terminates within `n` steps.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{coprime_basis, Ctx, Polynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::fields::{FieldSystem, VectorField};
use crate::linalg;
use crate::sample::sample_points;

/// A family in reduced row echelon form with its pivot columns.
#[derive(Clone, PartialEq, Eq)]
pub struct EchelonSystem {
    ctx: Ctx,
    rows: Vec<VectorField>,
    pivots: Vec<usize>,
}

impl fmt::Debug for EchelonSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EchelonSystem")
            .field("pivots", &self.pivots)
            .field("rows", &self.rows)
            .finish()
    }
}

/// One iteration of [`commuting_closure`]: the echelon system before the
/// step and the pair of rows whose bracket was appended.
#[derive(Clone, Debug)]
pub struct ClosureStep {
    pub before: EchelonSystem,
    pub pair: (usize, usize),
}

impl ClosureStep {
    /// The appended bracket `[Y_i, Y_j]` of the rows before the step.
    pub fn bracket(&self) -> VectorField {
        let (i, j) = self.pair;
        self.before
            .bracket(i, j)
            .expect("recorded pair is in range")
    }
}

/// Result of [`commuting_closure`].
#[derive(Clone, Debug)]
pub struct Closure {
    pub system: EchelonSystem,
    /// Number of brackets appended.
    pub iterations: usize,
    pub steps: Vec<ClosureStep>,
}

/// Number of exact evaluations tried before a bracket is formed symbolically.
const PROBES: usize = 3;

impl EchelonSystem {
    fn from_echelon(ctx: &Ctx, e: linalg::Echelon<RationalFunction>) -> Self {
        let rows = e
            .rows
            .into_iter()
            .map(|r| VectorField::new(ctx, r).expect("row length matches context"))
            .collect();
        EchelonSystem {
            ctx: ctx.clone(),
            rows,
            pivots: e.pivots,
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn rows(&self) -> &[VectorField] {
        &self.rows
    }

    /// Pivot columns, 0-based and strictly increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn to_system(&self) -> FieldSystem {
        FieldSystem::new(&self.ctx, self.rows.clone()).expect("rows share the context")
    }

    /// Whether every pivot column is a unit vector in the coefficient matrix.
    pub fn is_reduced(&self) -> bool {
        self.pivots.windows(2).all(|w| w[0] < w[1])
            && self.rows.iter().enumerate().all(|(i, row)| {
                self.pivots.iter().enumerate().all(|(j, &p)| {
                    let c = row.coeff(p);
                    if i == j {
                        c.is_one()
                    } else {
                        c.is_zero()
                    }
                }) && self.pivots[i]
                    == (0..self.ctx.num_vars())
                        .find(|&k| !row.coeff(k).is_zero())
                        .unwrap_or(usize::MAX)
            })
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rows.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.rows.len(),
            });
        }
        Ok(())
    }

    /// `[rows[i], rows[j]]`.
    pub fn bracket(&self, i: usize, j: usize) -> Result<VectorField> {
        self.check_index(i)?;
        self.check_index(j)?;
        self.rows[i].bracket(&self.rows[j])
    }

    /// Whether `[rows[i], rows[j]] ≠ 0`. A nonzero bracket vanishes on every
    /// pivot column and therefore lies outside the row span.
    pub fn bracket_independence_check(&self, i: usize, j: usize) -> Result<bool> {
        Ok(!self.bracket(i, j)?.is_zero())
    }

    /// Points at which no row coefficient has a pole.
    fn probe_points(&self) -> Vec<Vec<BigRational>> {
        let mut dens: Vec<Polynomial> = self
            .rows
            .iter()
            .flat_map(|r| r.coeffs().iter())
            .map(|c| c.denom().clone())
            .filter(|d| !d.is_constant())
            .collect();
        dens.sort_by_key(ToString::to_string);
        dens.dedup();
        sample_points(&self.ctx, 0x5eed, PROBES, &dens)
    }

    /// First pair `i < j` in lexicographic order with a nonzero bracket.
    /// Exact values at probe points prove a bracket nonzero; brackets that
    /// vanish at every probe are decided symbolically.
    pub fn first_nonzero_pair(&self) -> Option<(usize, usize)> {
        let points = self.probe_points();
        for i in 0..self.rows.len() {
            for j in i + 1..self.rows.len() {
                let (a, b) = (&self.rows[i], &self.rows[j]);
                let seen = points.iter().any(|p| {
                    a.bracket_at(b, p)
                        .expect("probe points avoid poles")
                        .iter()
                        .any(|v| !v.is_zero())
                });
                if seen || !a.bracket(b).expect("shared context").is_zero() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// First nonzero bracket in lexicographic `(i, j)` order, `i < j`.
    pub fn first_nonzero_bracket(&self) -> Option<(usize, usize, VectorField)> {
        let (i, j) = self.first_nonzero_pair()?;
        Some((i, j, self.bracket(i, j).expect("pair in range")))
    }

    pub fn is_abelian(&self) -> bool {
        self.first_nonzero_pair().is_none()
    }

    /// The coordinate frame `∂/∂x_1, …, ∂/∂x_n`, the echelon form of every
    /// family of full rank.
    fn full_rank(ctx: &Ctx) -> Self {
        let n = ctx.num_vars();
        EchelonSystem {
            ctx: ctx.clone(),
            rows: (0..n).map(|k| VectorField::coordinate(ctx, k)).collect(),
            pivots: (0..n).collect(),
        }
    }

    /// Distinct squarefree, pairwise coprime factors of the entry denominators;
    /// the results hold where none of them vanishes.
    pub fn genericity_factors(&self) -> Vec<Polynomial> {
        let dens: Vec<Polynomial> = self
            .rows
            .iter()
            .flat_map(|r| r.coeffs().iter())
            .map(|c| c.denom().clone())
            .filter(|d| !d.is_constant())
            .collect();
        coprime_basis(&dens)
    }

    /// Product of [`Self::genericity_factors`]; `1` when there are none.
    pub fn genericity(&self) -> Polynomial {
        self.genericity_factors()
            .into_iter()
            .fold(Polynomial::one(&self.ctx), |acc, f| acc * f)
    }

    /// Adds a field to the row space, keeping the form reduced. Returns
    /// whether the rank grew.
    pub fn insert(&mut self, field: &VectorField) -> Result<bool> {
        crate::algebra::context::check_ctx(&self.ctx, field.ctx())?;
        let mut v: Vec<RationalFunction> = field.coeffs().to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (k, c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    v[k] = &v[k] - &(&f * c);
                }
            }
        }
        let Some(lead) = v.iter().position(|c| !c.is_zero()) else {
            return Ok(false);
        };
        let inv = v[lead].inv()?;
        for c in v.iter_mut() {
            if !c.is_zero() {
                *c = &*c * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            let f = row.coeff(lead).clone();
            if f.is_zero() {
                continue;
            }
            let coeffs = row
                .coeffs()
                .iter()
                .zip(&v)
                .map(|(a, b)| {
                    if b.is_zero() {
                        a.clone()
                    } else {
                        a - &(&f * b)
                    }
                })
                .collect();
            *row = VectorField::new(&self.ctx, coeffs)?;
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.rows.insert(at, VectorField::new(&self.ctx, v)?);
        self.pivots.insert(at, lead);
        Ok(true)
    }
}

/// Reduced row echelon form of the coefficient matrix over `ℚ(x)`.
pub fn rref(s: &FieldSystem) -> EchelonSystem {
    EchelonSystem::from_echelon(s.ctx(), linalg::rref(s.matrix()))
}

/// Repeatedly appends the first nonzero pairwise bracket and re-reduces until
/// the rows commute.
pub fn commuting_closure(s: &FieldSystem) -> Closure {
    let mut system = rref(s);
    let mut steps = Vec::new();
    let n = s.ctx().num_vars();
    while let Some(pair) = system.first_nonzero_pair() {
        let before = system.clone();
        if system.len() + 1 == n {
            // a nonzero bracket lies outside the span, so the rank becomes n
            system = EchelonSystem::full_rank(s.ctx());
        } else {
            let b = system.bracket(pair.0, pair.1).expect("pair in range");
            let grew = system.insert(&b).expect("bracket shares the context");
            assert!(
                grew,
                "a nonzero bracket of echelon rows is independent of them"
            );
        }
        steps.push(ClosureStep { before, pair });
        assert!(steps.len() <= n, "closure exceeded the number of variables");
    }
    Closure {
        system,
        iterations: steps.len(),
        steps,
    }
}

pub fn is_abelian(e: &EchelonSystem) -> bool {
    e.is_abelian()
}

pub fn bracket_independence_check(e: &EchelonSystem, i: usize, j: usize) -> Result<bool> {
    e.bracket_independence_check(i, j)
}
