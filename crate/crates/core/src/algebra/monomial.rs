use std::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector over all names of a context (variables, then parameters).
///
/// Ordered graded-lexicographically: total degree first, then the exponent of
/// the earliest name decides.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(len: usize) -> Self {
        Monomial(SmallVec::from_elem(0, len))
    }

    pub fn var(len: usize, index: usize, exp: u32) -> Self {
        let mut m = Monomial::one(len);
        m.0[index] = exp;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, index: usize) -> u32 {
        self.0[index]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Degree restricted to the first `n` names.
    pub fn degree_in_first(&self, n: usize) -> u32 {
        self.0[..n].iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn with_exp(&self, index: usize, exp: u32) -> Monomial {
        let mut m = self.clone();
        m.0[index] = exp;
        m
    }

    pub(crate) fn set_exp(&mut self, index: usize, exp: u32) {
        self.0[index] = exp;
    }

    /// Indices with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex() {
        let xz = Monomial::from_exponents(&[1, 0, 1]);
        let y2 = Monomial::from_exponents(&[0, 2, 0]);
        let x = Monomial::from_exponents(&[1, 0, 0]);
        let z3 = Monomial::from_exponents(&[0, 0, 3]);
        assert!(xz > y2);
        assert!(y2 > x);
        assert!(z3 > xz);
        assert_eq!(xz.mul(&y2).exponents(), &[1, 2, 1]);
        assert_eq!(xz.div(&x), Some(Monomial::from_exponents(&[0, 0, 1])));
        assert_eq!(x.div(&xz), None);
    }
}
