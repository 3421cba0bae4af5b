use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::{ExactDiv, Field, Ring};
use crate::scalars::CycloNum;

use super::MultiPoly;

/// Rational function `num / den` in lowest terms, with the denominator's
/// leading coefficient (graded-lex) equal to 1.
#[derive(Clone, PartialEq)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (
                    num.div_exact_poly(&g).expect("gcd divides numerator"),
                    den.div_exact_poly(&g).expect("gcd divides denominator"),
                )
            }
        };
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            return Ok(RatFunc {
                num: num.pruned(),
                den: den.pruned(),
            });
        }
        let inv = lc.inverse()?;
        Ok(RatFunc {
            num: num.scale(&inv).pruned(),
            den: den.scale(&inv).pruned(),
        })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn constant(c: CycloNum) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(MultiPoly::var(name))
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    /// The polynomial value, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&MultiPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(MultiPoly::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(MultiPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero den");
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero den")
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero den")
    }
    fn neg_ref(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn from_int(n: i64) -> Self {
        RatFunc::from_poly(MultiPoly::from_int(n))
    }
}

impl ExactDiv for RatFunc {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.checked_div(divisor).ok()
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        RatFunc::one().checked_div(self).ok()
    }
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &MultiPoly| {
            if p.num_terms() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

macro_rules! rf_binop {
    ($trait:ident, $method:ident, $impl:ident) => {
        impl $trait<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                Ring::$impl(self, rhs)
            }
        }
    };
}

rf_binop!(Add, add, add_ref);
rf_binop!(Sub, sub, sub_ref);
rf_binop!(Mul, mul, mul_ref);

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; see [`RatFunc::checked_div`].
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;

    fn rf(n: &str, d: &str) -> RatFunc {
        RatFunc::new(parse_poly(n).unwrap(), parse_poly(d).unwrap()).unwrap()
    }

    #[test]
    fn normalizes_to_lowest_terms() {
        let r = rf("x^2 - 1", "2*x + 2");
        assert_eq!(r.numer(), &parse_poly("x/2 - 1/2").unwrap());
        assert_eq!(r.denom(), &MultiPoly::one());
        assert_eq!(rf("a", "a*b"), rf("1", "b"));
        assert!(RatFunc::new(MultiPoly::one(), MultiPoly::zero()).is_err());
    }

    #[test]
    fn field_operations() {
        let a = rf("1", "x");
        let b = rf("1", "y");
        assert_eq!(&a + &b, rf("x + y", "x*y"));
        assert_eq!(&(&a * &b) / &a, b);
        assert!((&a - &a).is_zero());
        assert_eq!(a.inv().unwrap(), RatFunc::var("x"));
        assert_eq!(rf("a1", "a2").to_string(), "a1/a2");
    }
}
