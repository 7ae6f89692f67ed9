//! Joint invariants: counting, polynomial search and exact verification.

mod ansatz;
mod darboux;

use std::collections::BTreeMap;

use num_rational::BigRational;

pub use ansatz::{polynomial_invariants, InvariantBasis};
pub use darboux::{darboux_residuals, verify_darboux, AtomKind, DarbouxExpr, ExpAtom, Factor};

use crate::algebra::{Monomial, Polynomial, RationalFunction};
use crate::fields::FieldSystem;
use crate::linalg::{self, SparseEliminator, SparseRow};

/// `|vars| - generic_rank(S)`: the number of functionally independent local
/// invariants on the generic stratum.
pub fn expected_invariant_count(s: &FieldSystem) -> usize {
    s.ctx().num_vars() - s.generic_rank()
}

/// Generic rank of the Jacobian `(∂F_i/∂x_j)`.
pub fn functional_independence(polys: &[Polynomial]) -> usize {
    let Some(first) = polys.first() else {
        return 0;
    };
    let n = first.ctx().num_vars();
    let rows = polys
        .iter()
        .map(|p| {
            (0..n)
                .map(|j| RationalFunction::from_poly(p.derivative(j)))
                .collect::<Vec<_>>()
        })
        .collect();
    linalg::rank(rows)
}

struct Columns(BTreeMap<Monomial, usize>);

impl Columns {
    fn new() -> Self {
        Columns(BTreeMap::new())
    }

    fn row(&mut self, p: &Polynomial) -> SparseRow {
        p.terms()
            .iter()
            .map(|(m, c)| {
                let next = self.0.len();
                let col = *self.0.entry(m.clone()).or_insert(next);
                (col, BigRational::from_integer(c.clone()))
            })
            .collect()
    }
}

fn eliminator(cols: &mut Columns, basis: &[Polynomial]) -> SparseEliminator {
    let mut e = SparseEliminator::new();
    let rows: Vec<SparseRow> = basis.iter().map(|p| cols.row(p)).collect();
    for r in rows {
        e.insert(r);
    }
    e
}

/// Whether `p` is a ℚ-linear combination of `basis`.
pub fn span_contains(basis: &[Polynomial], p: &Polynomial) -> bool {
    let mut cols = Columns::new();
    let e = eliminator(&mut cols, basis);
    e.contains(cols.row(p))
}

/// Whether two families span the same ℚ-vector space of polynomials.
pub fn same_span(a: &[Polynomial], b: &[Polynomial]) -> bool {
    let mut cols = Columns::new();
    let ea = eliminator(&mut cols, a);
    let eb = eliminator(&mut cols, b);
    ea.rank() == eb.rank() && b.iter().all(|p| ea.contains(cols.row(p)))
}
