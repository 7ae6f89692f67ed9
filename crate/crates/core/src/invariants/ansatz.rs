use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::gcd::gcd_full;
use crate::algebra::{Monomial, Polynomial, RationalFunction};
use crate::fields::FieldSystem;
use crate::linalg::{SparseEliminator, SparseRow};

use super::{functional_independence, same_span, span_contains};

/// Polynomial invariants up to a degree bound, as a deterministic ℚ-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantBasis {
    degree_bound: u32,
    basis: Vec<Polynomial>,
    independent_count: usize,
}

impl InvariantBasis {
    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    /// Primitive integer polynomials with positive leading coefficient, from
    /// the reduced echelon form of the solution space (columns in descending
    /// graded-lex order).
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Generic rank of the Jacobian of the basis.
    pub fn independent_count(&self) -> usize {
        self.independent_count
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        span_contains(&self.basis, p)
    }

    pub fn spans_same(&self, other: &InvariantBasis) -> bool {
        same_span(&self.basis, &other.basis)
    }
}

/// Monomials in the variables of degree `1..=d`, highest first.
fn ansatz_monomials(n: usize, len: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == n {
            if cur.iter().any(|&e| e > 0) {
                out.push(Monomial::from_exponents(cur));
            }
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, n, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut cur = vec![0u32; len];
    let mut out = Vec::new();
    rec(0, n, d, &mut cur, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Numerators `m_k` with `X = (1/L) Σ m_k ∂/∂x_k` over a common denominator.
fn cleared_coefficients(coeffs: &[RationalFunction]) -> Vec<Polynomial> {
    let ctx = coeffs[0].ctx();
    let mut l = Polynomial::one(ctx);
    for c in coeffs {
        let q = c.denom();
        if q.is_one() {
            continue;
        }
        let g = gcd_full(&l, q);
        l = &l * &q.exact_div(&g).expect("gcd divides");
    }
    coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                return Polynomial::zero(ctx);
            }
            let cof = l.exact_div(c.denom()).expect("common multiple");
            c.numer() * &cof
        })
        .collect()
}

fn to_primitive(ctx: &crate::algebra::Ctx, cols: &[Monomial], v: &[BigRational]) -> Polynomial {
    let mut den = BigInt::one();
    for x in v.iter().filter(|x| !x.is_zero()) {
        den = den.lcm(x.denom());
    }
    let den = BigRational::from_integer(den);
    let p = Polynomial::from_terms(
        ctx,
        cols.iter()
            .zip(v)
            .filter(|(_, x)| !x.is_zero())
            .map(|(m, x)| (m.clone(), (x * &den).to_integer())),
    );
    let p = p.primitive_part();
    if p.leading_coeff().is_negative() {
        -p
    } else {
        p
    }
}

/// Basis of `{F : deg F ≤ max_degree, F(0) = 0, X_i(F) = 0 ∀i}` with rational
/// coefficients. Every monomial coefficient of each numerator of `X_i(F)`,
/// parameters included, gives one linear equation.
pub fn polynomial_invariants(s: &FieldSystem, max_degree: u32) -> InvariantBasis {
    let ctx = s.ctx();
    let n = ctx.num_vars();
    let cols = ansatz_monomials(n, ctx.len(), max_degree);
    let mut equations: BTreeMap<(usize, Monomial), SparseRow> = BTreeMap::new();
    for (i, field) in s.members().iter().enumerate() {
        if field.is_zero() {
            continue;
        }
        let m = cleared_coefficients(field.coeffs());
        for (c, mu) in cols.iter().enumerate() {
            for (k, mk) in m.iter().enumerate() {
                let e = mu.exp(k);
                if e == 0 || mk.is_zero() {
                    continue;
                }
                let dmu = mu.with_exp(k, e - 1);
                for (nu, a) in mk.terms() {
                    let key = (i, nu.mul(&dmu));
                    let row = equations.entry(key).or_default();
                    let entry = row.entry(c).or_insert_with(BigRational::zero);
                    *entry += BigRational::from_integer(a * BigInt::from(e));
                }
            }
        }
    }
    let mut solver = SparseEliminator::new();
    for (_, mut row) in equations {
        row.retain(|_, v| !v.is_zero());
        if !row.is_empty() {
            solver.insert(row);
        }
    }
    let basis: Vec<Polynomial> = solver
        .nullspace(cols.len())
        .iter()
        .map(|v| to_primitive(ctx, &cols, v))
        .collect();
    for f in &basis {
        let rf = RationalFunction::from_poly(f.clone());
        for x in s.members() {
            assert!(
                x.apply_unchecked(&rf).is_zero(),
                "ansatz solution is not annihilated by {x}"
            );
        }
    }
    InvariantBasis {
        degree_bound: max_degree,
        independent_count: functional_independence(&basis),
        basis,
    }
}
