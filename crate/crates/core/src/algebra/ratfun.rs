use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::context::{check_ctx, Ctx};
use super::gcd::gcd_full;
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Quotient of two polynomials in canonical form.
///
/// Numerator and denominator are coprime over ℤ (no common polynomial factor
/// and no common integer content) and the denominator has a positive leading
/// coefficient, so equality of values is equality of representations. Zero is
/// `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl std::fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl RationalFunction {
    /// Canonical form of `num / den`.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        num.check_same_ctx(&den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero(num.ctx());
        }
        let g = gcd_full(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        Self::with_sign(num, den)
    }

    /// Trusted constructor: `num` and `den` are already coprime.
    fn with_sign(num: Polynomial, den: Polynomial) -> Self {
        if den.leading_coeff().is_negative() {
            RationalFunction {
                num: -num,
                den: -den,
            }
        } else {
            RationalFunction { num, den }
        }
    }

    pub fn zero(ctx: &Ctx) -> Self {
        RationalFunction {
            num: Polynomial::zero(ctx),
            den: Polynomial::one(ctx),
        }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::from_poly(Polynomial::one(ctx))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let den = Polynomial::one(p.ctx());
        RationalFunction { num: p, den }
    }

    pub fn from_int(ctx: &Ctx, v: impl Into<BigInt>) -> Self {
        Self::from_poly(Polynomial::constant(ctx, v))
    }

    pub fn from_rational(ctx: &Ctx, q: &BigRational) -> Self {
        Self::with_sign(
            Polynomial::constant(ctx, q.numer().clone()),
            Polynomial::constant(ctx, q.denom().clone()),
        )
    }

    pub fn var(ctx: &Ctx, index: usize) -> Self {
        Self::from_poly(Polynomial::var(ctx, index))
    }

    pub fn ctx(&self) -> &Ctx {
        self.num.ctx()
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn into_parts(self) -> (Polynomial, Polynomial) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Value as a rational number if free of all names.
    pub fn constant_value(&self) -> Option<BigRational> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(BigRational::new(n, d))
    }

    pub fn depends_on_variables(&self) -> bool {
        self.num.depends_on_variables() || self.den.depends_on_variables()
    }

    /// Size used for pivot selection: term counts plus total degrees.
    pub fn cost(&self) -> usize {
        self.num.num_terms()
            + self.den.num_terms()
            + (self.num.total_degree() + self.den.total_degree()) as usize
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::with_sign(self.den.clone(), self.num.clone()))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_ctx(self.ctx(), other.ctx())?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        check_ctx(self.ctx(), other.ctx())?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_ctx(self.ctx(), other.ctx())?;
        Ok(self * other)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        check_ctx(self.ctx(), other.ctx())?;
        Ok(self * &other.inv()?)
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self * &RationalFunction::from_int(self.ctx(), c.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        // coprime parts stay coprime under powers
        Self::with_sign(self.num.pow(e), self.den.pow(e))
    }

    /// Partial derivative with respect to the name `index`, which must be a variable.
    pub fn derivative_index(&self, index: usize) -> Result<Self> {
        if !self.ctx().is_variable(index) {
            return Err(Error::NotAVariable(self.ctx().name(index).to_string()));
        }
        Ok(self.partial(index))
    }

    /// Partial derivative with respect to a variable given by name.
    pub fn derivative(&self, name: &str) -> Result<Self> {
        let index = self.ctx().variable_index(name)?;
        Ok(self.partial(index))
    }

    /// Value and gradient over the variables at a point that is not a pole,
    /// computed without forming the derivatives as rational functions.
    pub(crate) fn jet(&self, point: &[BigRational]) -> Result<(BigRational, Vec<BigRational>)> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::Pole(crate::io::print::paren_factor(&self.den)));
        }
        let n = self.num.eval(point);
        let value = &n / &d;
        let d2 = &d * &d;
        let grad = (0..self.ctx().num_vars())
            .map(|k| {
                let dn = self.num.derivative(k).eval(point);
                if self.den.is_constant() {
                    return dn / &d;
                }
                let dd = self.den.derivative(k).eval(point);
                (dn * &d - &n * dd) / &d2
            })
            .collect();
        Ok((value, grad))
    }

    pub(crate) fn partial(&self, index: usize) -> Self {
        let dn = self.num.derivative(index);
        if self.den.is_constant() {
            return Self::reduce(dn, self.den.clone());
        }
        let dd = self.den.derivative(index);
        if dd.is_zero() {
            return Self::reduce(dn, self.den.clone());
        }
        // (n/d)' = (n'·(d/g) - n·(d'/g)) / (d·(d/g)) with g = gcd(d, d')
        let g = gcd_full(&self.den, &dd);
        let dg = self.den.exact_div(&g).expect("gcd divides");
        let ddg = dd.exact_div(&g).expect("gcd divides");
        let top = &dn * &dg - &self.num * &ddg;
        let den = &self.den * &dg;
        // nonconstant common factors of top and den divide d
        if gcd_full(&top, &self.den).is_constant() {
            let c = top.content().gcd(&den.content());
            return Self::with_sign(top.div_int_exact(&c), den.div_int_exact(&c));
        }
        Self::reduce(top, den)
    }

    /// Exact value at a point given as one rational per name of the context.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::Pole(crate::io::print::paren_factor(&self.den)));
        }
        Ok(self.num.eval(point) / d)
    }

    /// Substitutes polynomials for names; see [`Polynomial::substitute`].
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Self> {
        Self::new(self.num.substitute(images), self.den.substitute(images))
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        if rhs.den.is_one() {
            // gcd(a + c b, b) = gcd(a, b) = 1
            return RationalFunction::with_sign(
                &self.num + &(&rhs.num * &self.den),
                self.den.clone(),
            );
        }
        if self.den.is_one() {
            return RationalFunction::with_sign(
                &rhs.num + &(&self.num * &rhs.den),
                rhs.den.clone(),
            );
        }
        let g = gcd_full(&self.den, &rhs.den);
        if g.is_one() {
            let num = &self.num * &rhs.den + &rhs.num * &self.den;
            return RationalFunction::with_sign(num, &self.den * &rhs.den);
        }
        let b = self.den.exact_div(&g).expect("gcd divides");
        let d = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &self.num * &d + &rhs.num * &b;
        if num.is_zero() {
            return RationalFunction::zero(self.ctx());
        }
        // Henrici: any common factor of num and b·d·g divides g
        let h = gcd_full(&num, &g);
        let (num, g) = if h.is_one() {
            (num, g)
        } else {
            (
                num.exact_div(&h).expect("gcd divides"),
                g.exact_div(&h).expect("gcd divides"),
            )
        };
        RationalFunction::with_sign(num, b * d * g)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero(self.ctx());
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let g1 = gcd_full(&self.num, &rhs.den);
        let g2 = gcd_full(&rhs.num, &self.den);
        let div = |p: &Polynomial, g: &Polynomial| {
            if g.is_one() {
                p.clone()
            } else {
                p.exact_div(g).expect("gcd divides")
            }
        };
        let num = div(&self.num, &g1) * div(&rhs.num, &g2);
        let den = div(&self.den, &g2) * div(&rhs.den, &g1);
        RationalFunction::with_sign(num, den)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        RationalFunction::from_poly(p)
    }
}
