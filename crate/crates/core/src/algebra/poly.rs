//! Sparse multivariate polynomials with integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::context::{check_ctx, same_ctx, Ctx};
use super::monomial::Monomial;
use crate::error::Result;

/// Polynomial over ℤ in the names of a [`Ctx`].
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients, so the first term is the leading term and the zero
/// polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    ctx: Ctx,
    terms: Vec<(Monomial, BigInt)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ctx(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

fn combine_sorted(mut raw: Vec<(Monomial, BigInt)>) -> Vec<(Monomial, BigInt)> {
    raw.sort_unstable_by(|a, b| b.0.cmp(&a.0));
    let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(raw.len());
    for (m, c) in raw {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => *lc += c,
            _ => {
                if let Some((_, lc)) = out.last() {
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if let Some((_, lc)) = out.last() {
        if lc.is_zero() {
            out.pop();
        }
    }
    out
}

impl Polynomial {
    pub fn zero(ctx: &Ctx) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Polynomial::constant(ctx, BigInt::one())
    }

    pub fn constant(ctx: &Ctx, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(Monomial::one(ctx.len()), c)]
        };
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// The indeterminate with the given index (variable or parameter).
    pub fn var(ctx: &Ctx, index: usize) -> Self {
        Polynomial::term(ctx, Monomial::var(ctx.len(), index, 1), BigInt::one())
    }

    pub fn term(ctx: &Ctx, m: Monomial, c: BigInt) -> Self {
        debug_assert_eq!(m.len(), ctx.len());
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms(ctx: &Ctx, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: combine_sorted(terms.into_iter().collect()),
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Constant value, if the polynomial is constant.
    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map_or(0, |(m, _)| m.degree())
    }

    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exp(index))
            .max()
            .unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.terms
            .first()
            .map_or_else(BigInt::zero, |(_, c)| c.clone())
    }

    /// Which names occur in the polynomial.
    pub fn support(&self) -> Vec<bool> {
        let mut used = vec![false; self.ctx.len()];
        for (m, _) in &self.terms {
            for i in m.support() {
                used[i] = true;
            }
        }
        used
    }

    /// True if some differentiable variable occurs.
    pub fn depends_on_variables(&self) -> bool {
        let n = self.ctx.num_vars();
        self.terms.iter().any(|(m, _)| m.degree_in_first(n) > 0)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc * c))
                .collect(),
        }
    }

    /// Divides every coefficient by `c`; `c` must divide all of them.
    pub fn div_int_exact(&self, c: &BigInt) -> Polynomial {
        if c.is_one() {
            return self.clone();
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| {
                    debug_assert!((k % c).is_zero());
                    (m.clone(), k / c)
                })
                .collect(),
        }
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content`, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        self.div_int_exact(&self.content())
    }

    /// Sign-normalised so that the leading coefficient is positive.
    pub fn normalized_sign(self) -> Polynomial {
        if self.leading_coeff().is_negative() {
            -self
        } else {
            self
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, index: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(index) > 0)
            .map(|(m, c)| {
                let e = m.exp(index);
                (m.with_exp(index, e - 1), c * BigInt::from(e))
            })
            .collect::<Vec<_>>();
        // lowering one exponent can reorder terms
        Polynomial::from_terms(&self.ctx, terms)
    }

    /// Coefficients as a polynomial in the name `index`, lowest degree first.
    /// Each coefficient has no occurrence of that name.
    pub fn coefficients_in(&self, index: usize) -> Vec<Polynomial> {
        let deg = self.degree_in(index) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exp(index) as usize;
            buckets[e].push((m.with_exp(index, 0), c.clone()));
        }
        buckets
            .into_iter()
            .map(|terms| Polynomial::from_terms(&self.ctx, terms))
            .collect()
    }

    /// Inverse of [`Polynomial::coefficients_in`].
    pub fn from_coefficients_in(ctx: &Ctx, index: usize, coeffs: &[Polynomial]) -> Polynomial {
        let mut terms = Vec::new();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, k) in &c.terms {
                let mut m = m.clone();
                m.set_exp(index, m.exp(index) + e as u32);
                terms.push((m, k.clone()));
            }
        }
        Polynomial::from_terms(ctx, terms)
    }

    /// Substitutes the integer `value` for the name `index`.
    pub(crate) fn eval_name_int(&self, index: usize, value: &BigInt) -> Polynomial {
        let deg = self.degree_in(index) as usize;
        let mut powers = Vec::with_capacity(deg + 1);
        powers.push(BigInt::one());
        for k in 0..deg {
            let next = &powers[k] * value;
            powers.push(next);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.with_exp(index, 0), c * &powers[m.exp(index) as usize]))
            .collect::<Vec<_>>();
        Polynomial::from_terms(&self.ctx, terms)
    }

    /// Largest absolute value of a coefficient.
    pub(crate) fn max_norm(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(_, c)| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(self.ctx.len()),
            Some((first, _)) => it.fold(first.clone(), |acc, (m, _)| acc.gcd(m)),
        }
    }

    pub fn div_monomial(&self, m: &Monomial) -> Polynomial {
        if m.is_one() {
            return self.clone();
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, c)| (tm.div(m).expect("monomial divides"), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / divisor` over ℤ, or `None` if it does not divide.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert!(!divisor.is_zero(), "exact division by zero polynomial");
        if self.is_zero() {
            return Some(self.clone());
        }
        if let Some(c) = divisor.constant_value() {
            if self.terms.iter().all(|(_, k)| (k % &c).is_zero()) {
                return Some(Polynomial {
                    ctx: self.ctx.clone(),
                    terms: self
                        .terms
                        .iter()
                        .map(|(m, k)| (m.clone(), k / &c))
                        .collect(),
                });
            }
            return None;
        }
        if divisor.terms.len() == 1 {
            let (dm, dc) = &divisor.terms[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, k) in &self.terms {
                let q = m.div(dm)?;
                let (qc, r) = k.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                terms.push((q, qc));
            }
            return Some(Polynomial {
                ctx: self.ctx.clone(),
                terms,
            });
        }
        if self.total_degree() < divisor.total_degree() {
            return None;
        }
        let (lm, lc) = &divisor.terms[0];
        let tail = &divisor.terms[1..];
        let mut rem: BTreeMap<Monomial, BigInt> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(lm)?;
            let (qc, r) = c.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (tm, tc) in tail {
                let key = tm.mul(&qm);
                let delta = tc * &qc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        Some(Polynomial {
            ctx: self.ctx.clone(),
            terms: quotient,
        })
    }

    /// Value at a point given as one rational per name of the context.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        debug_assert_eq!(point.len(), self.ctx.len());
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for i in m.support() {
                t *= num_traits::pow(point[i].clone(), m.exp(i) as usize);
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `images[i]` for the i-th name. Images share one context,
    /// which becomes the context of the result.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ctx.len());
        let target = images[0].ctx().clone();
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for i in m.support() {
                t = &t * &images[i].pow(m.exp(i));
            }
            acc = &acc + &t;
        }
        acc
    }

    pub(crate) fn check_same_ctx(&self, other: &Polynomial) -> Result<()> {
        check_ctx(&self.ctx, &other.ctx)
    }

    fn assert_ctx(&self, other: &Polynomial) {
        assert!(
            same_ctx(&self.ctx, &other.ctx),
            "polynomials from different contexts"
        );
    }
}

fn merge(a: &Polynomial, b: &Polynomial, negate_b: bool) -> Polynomial {
    a.assert_ctx(b);
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() && j < b.terms.len() {
        let (am, ac) = &a.terms[i];
        let (bm, bc) = &b.terms[j];
        match am.cmp(bm) {
            Ordering::Greater => {
                out.push((am.clone(), ac.clone()));
                i += 1;
            }
            Ordering::Less => {
                out.push((bm.clone(), if negate_b { -bc } else { bc.clone() }));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { ac - bc } else { ac + bc };
                if !c.is_zero() {
                    out.push((am.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    out.extend(
        b.terms[j..]
            .iter()
            .map(|(m, c)| (m.clone(), if negate_b { -c } else { c.clone() })),
    );
    Polynomial {
        ctx: a.ctx.clone(),
        terms: out,
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        merge(self, rhs, false)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        merge(self, rhs, true)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_ctx(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        if rhs.terms.len() == 1 {
            return self.mul_term(&rhs.terms[0].0, &rhs.terms[0].1);
        }
        if self.terms.len() == 1 {
            return rhs.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (am, ac) in &self.terms {
            for (bm, bc) in &rhs.terms {
                raw.push((am.mul(bm), ac * bc));
            }
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: combine_sorted(raw),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::context::VarContext;

    fn xyz() -> (Ctx, Polynomial, Polynomial, Polynomial) {
        let ctx = VarContext::with_variables(["x", "y", "z"]).unwrap();
        let x = Polynomial::var(&ctx, 0);
        let y = Polynomial::var(&ctx, 1);
        let z = Polynomial::var(&ctx, 2);
        (ctx, x, y, z)
    }

    #[test]
    fn difference_of_squares() {
        let (_, x, y, _) = xyz();
        let p = (&x + &y) * (&x - &y);
        assert_eq!(p, &x * &x - &y * &y);
        assert_eq!(p.total_degree(), 2);
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn cancellation_drops_terms() {
        let (ctx, x, _, _) = xyz();
        assert!((&x - &x).is_zero());
        assert_eq!(&x + &Polynomial::zero(&ctx), x);
    }

    #[test]
    fn exact_division() {
        let (_, x, y, z) = xyz();
        let a = &x * &z - &y * &y;
        let b = &x + &y + &z;
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        assert_eq!((&prod + &x).exact_div(&a), None);
        assert_eq!(
            prod.scale(&BigInt::from(6))
                .exact_div(&a.scale(&BigInt::from(4))),
            None
        );
    }

    #[test]
    fn derivative_and_coefficients() {
        let (ctx, x, y, z) = xyz();
        let p = &x * &x * &z + &y * &z + &z.pow(3);
        assert_eq!(
            p.derivative(2),
            &x * &x + &y + &z.pow(2).scale(&BigInt::from(3))
        );
        let coeffs = p.coefficients_in(2);
        assert_eq!(coeffs.len(), 4);
        assert_eq!(coeffs[1], &x * &x + &y);
        assert_eq!(Polynomial::from_coefficients_in(&ctx, 2, &coeffs), p);
    }

    #[test]
    fn eval_at_point() {
        let (_, x, y, z) = xyz();
        let p = &x * &x + &y * &y + &z * &z;
        let pt: Vec<BigRational> = [1, 2, 3]
            .iter()
            .map(|&v| BigRational::from_integer(v.into()))
            .collect();
        assert_eq!(p.eval(&pt), BigRational::from_integer(14.into()));
    }
}
