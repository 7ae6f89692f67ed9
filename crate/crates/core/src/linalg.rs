//! Exact elimination over ℚ and over the rational-function field.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::RationalFunction;

/// Field element usable in Gauss–Jordan elimination.
pub trait Scalar: Clone {
    fn is_zero(&self) -> bool;
    /// Pivot preference; smaller is better.
    fn cost(&self) -> usize;
    /// `self - factor * other`.
    fn sub_mul(&self, factor: &Self, other: &Self) -> Self;
    fn quotient(&self, divisor: &Self) -> Self;
}

impl Scalar for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn cost(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }

    fn sub_mul(&self, factor: &Self, other: &Self) -> Self {
        self - factor * other
    }

    fn quotient(&self, divisor: &Self) -> Self {
        self / divisor
    }
}

impl Scalar for RationalFunction {
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }

    fn cost(&self) -> usize {
        RationalFunction::cost(self)
    }

    fn sub_mul(&self, factor: &Self, other: &Self) -> Self {
        if factor.is_one() {
            return self - other;
        }
        self - &(factor * other)
    }

    fn quotient(&self, divisor: &Self) -> Self {
        if divisor.is_one() {
            return self.clone();
        }
        self.checked_div(divisor).expect("pivot is nonzero")
    }
}

/// Reduced row echelon form: rows normalised to 1 on their pivot, pivot
/// columns cleared in every other row, zero rows removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon<T> {
    pub rows: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
}

fn is_zero_row<T: Scalar>(row: &[T]) -> bool {
    row.iter().all(Scalar::is_zero)
}

fn pick_pivot<T: Scalar>(rows: &[Vec<T>], col: usize) -> Option<usize> {
    rows.iter()
        .enumerate()
        .filter(|(_, r)| !r[col].is_zero())
        .min_by_key(|(i, r)| (r[col].cost(), *i))
        .map(|(i, _)| i)
}

fn eliminate<T: Scalar>(target: &mut [T], pivot_row: &[T], col: usize) {
    if target[col].is_zero() {
        return;
    }
    let factor = target[col].clone();
    for c in col..target.len() {
        if !pivot_row[c].is_zero() {
            target[c] = target[c].sub_mul(&factor, &pivot_row[c]);
        }
    }
}

/// Gauss–Jordan elimination. Within a column the candidate with the smallest
/// [`Scalar::cost`] is the pivot, ties going to the earliest row.
pub fn rref<T: Scalar>(rows: Vec<Vec<T>>) -> Echelon<T> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pending: Vec<Vec<T>> = rows.into_iter().filter(|r| !is_zero_row(r)).collect();
    let mut placed: Vec<Vec<T>> = Vec::new();
    let mut pivots = Vec::new();
    for col in 0..ncols {
        if pending.is_empty() {
            break;
        }
        let Some(i) = pick_pivot(&pending, col) else {
            continue;
        };
        let mut prow = pending.remove(i);
        let p = prow[col].clone();
        for v in &mut prow[col..] {
            if !v.is_zero() {
                *v = v.quotient(&p);
            }
        }
        for r in pending.iter_mut().chain(placed.iter_mut()) {
            eliminate(r, &prow, col);
        }
        pending.retain(|r| !is_zero_row(r));
        placed.push(prow);
        pivots.push(col);
    }
    Echelon {
        rows: placed,
        pivots,
    }
}

/// Rank by forward elimination only.
pub fn rank<T: Scalar>(rows: Vec<Vec<T>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pending: Vec<Vec<T>> = rows.into_iter().filter(|r| !is_zero_row(r)).collect();
    let mut rank = 0;
    for col in 0..ncols {
        if pending.is_empty() {
            break;
        }
        let Some(i) = pick_pivot(&pending, col) else {
            continue;
        };
        let mut prow = pending.remove(i);
        let p = prow[col].clone();
        for v in &mut prow[col..] {
            if !v.is_zero() {
                *v = v.quotient(&p);
            }
        }
        for r in pending.iter_mut() {
            eliminate(r, &prow, col);
        }
        pending.retain(|r| !is_zero_row(r));
        rank += 1;
    }
    rank
}

/// Sparse row over ℚ, column → nonzero entry.
pub type SparseRow = BTreeMap<usize, BigRational>;

/// Incremental Gauss–Jordan elimination on sparse rational rows.
///
/// The stored rows are always fully reduced: each has a unit entry on its
/// pivot and zeros on all other pivots.
#[derive(Clone, Debug, Default)]
pub struct SparseEliminator {
    rows: BTreeMap<usize, SparseRow>,
}

impl SparseEliminator {
    pub fn new() -> Self {
        SparseEliminator::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = (&usize, &SparseRow)> {
        self.rows.iter()
    }

    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let cols: Vec<usize> = row.keys().copied().collect();
        for c in cols {
            let Some(pivot_row) = self.rows.get(&c) else {
                continue;
            };
            let Some(factor) = row.get(&c).cloned() else {
                continue;
            };
            for (k, v) in pivot_row {
                let entry = row.entry(*k).or_insert_with(BigRational::zero);
                *entry -= &factor * v;
                if Zero::is_zero(entry) {
                    row.remove(k);
                }
            }
        }
        row
    }

    /// Adds a row; returns whether it was independent of the stored ones.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = self.reduce(row);
        let Some((&lead, lead_val)) = row.iter().next() else {
            return false;
        };
        let inv = BigRational::one() / lead_val;
        for v in row.values_mut() {
            *v *= &inv;
        }
        for other in self.rows.values_mut() {
            if let Some(factor) = other.get(&lead).cloned() {
                for (k, v) in &row {
                    let entry = other.entry(*k).or_insert_with(BigRational::zero);
                    *entry -= &factor * v;
                    if Zero::is_zero(entry) {
                        other.remove(k);
                    }
                }
            }
        }
        self.rows.insert(lead, row);
        true
    }

    /// Whether `row` lies in the span of the stored rows.
    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Basis of `{v : row · v = 0 for all stored rows}` over `ncols` columns,
    /// returned in reduced row echelon form.
    pub fn nullspace(&self, ncols: usize) -> Vec<Vec<BigRational>> {
        let mut basis = Vec::new();
        for free in (0..ncols).filter(|c| !self.rows.contains_key(c)) {
            let mut v = vec![BigRational::zero(); ncols];
            v[free] = BigRational::one();
            for (&p, row) in &self.rows {
                if let Some(x) = row.get(&free) {
                    v[p] = -x.clone();
                }
            }
            basis.push(v);
        }
        rref(basis).rows
    }
}

/// Whether `v` is a linear combination of `basis`.
pub fn in_span(basis: &[Vec<BigRational>], v: &[BigRational]) -> bool {
    let to_sparse = |r: &[BigRational]| -> SparseRow {
        r.iter()
            .enumerate()
            .filter(|(_, x)| !Zero::is_zero(*x))
            .map(|(i, x)| (i, x.clone()))
            .collect()
    };
    let mut e = SparseEliminator::new();
    for b in basis {
        e.insert(to_sparse(b));
    }
    e.contains(to_sparse(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect()
    }

    #[test]
    fn rref_of_singular_matrix() {
        let m = mat(&[&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]]);
        let e = rref(m.clone());
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(e.rows, mat(&[&[1, 0, -1], &[0, 1, -1]]));
        assert_eq!(rank(m), 2);
    }

    #[test]
    fn skips_empty_columns() {
        let m = mat(&[&[0, 2, 4], &[0, 1, 3]]);
        let e = rref(m);
        assert_eq!(e.pivots, vec![1, 2]);
        assert_eq!(rank(Vec::<Vec<BigRational>>::new()), 0);
    }

    #[test]
    fn sparse_nullspace() {
        let mut e = SparseEliminator::new();
        // x0 + x1 = 0, x2 - 2 x3 = 0
        e.insert([(0, q(1)), (1, q(1))].into_iter().collect());
        e.insert([(2, q(1)), (3, q(-2))].into_iter().collect());
        assert!(!e.insert([(0, q(2)), (1, q(2))].into_iter().collect()));
        let ns = e.nullspace(4);
        assert_eq!(ns[0], mat(&[&[1, -1, 0, 0]])[0]);
        assert_eq!(ns[1][3], BigRational::new(1.into(), 2.into()));
        assert!(in_span(&ns, &[q(3), q(-3), q(4), q(2)]));
        assert!(!in_span(&ns, &[q(1), q(1), q(0), q(0)]));
    }
}
