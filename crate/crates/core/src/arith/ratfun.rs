use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::{Rational, TauPoly};
use crate::error::{Error, Result};

/// An element of `Q(t)`, kept in canonical form: numerator and denominator
/// coprime, denominator monic, zero represented as `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: TauPoly,
    den: TauPoly,
}

/// Binary operation selector for [`ratfun_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// A value of the extended rational line, used for `t -> infinity` limits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extended {
    Finite(Rational),
    PosInfinity,
    NegInfinity,
}

pub fn ratfun_arith(a: &RatFun, b: &RatFun, op: ArithOp) -> Result<RatFun> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun {
            num: TauPoly::zero(),
            den: TauPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(TauPoly::one())
    }

    pub fn t() -> Self {
        Self::from_poly(TauPoly::t())
    }

    pub fn from_poly(p: TauPoly) -> Self {
        RatFun {
            num: p,
            den: TauPoly::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(TauPoly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(TauPoly::from_int(c))
    }

    /// Builds `num/den` and reduces it to canonical form.
    pub fn new(num: TauPoly, den: TauPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: TauPoly, den: TauPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.leading();
        if lc.is_one() {
            RatFun { num, den }
        } else {
            let inv = lc.recip();
            RatFun {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn num(&self) -> &TauPoly {
        &self.num
    }

    pub fn den(&self) -> &TauPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value does not depend on `t`.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    /// Sum of numerator and denominator degrees; a cheap size measure.
    pub fn weight(&self) -> usize {
        self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lc = self.num.leading().recip();
        Ok(RatFun {
            num: self.den.scale(&lc),
            den: self.num.scale(&lc),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFun {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Exact value at `t = t0`.
    pub fn eval_at(&self, t0: &Rational) -> Result<Rational> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            return Err(Error::Pole(t0.to_string()));
        }
        Ok(self.num.eval(t0) / d)
    }

    /// Limit as `t -> +infinity`.
    pub fn limit_at_infinity(&self) -> Extended {
        let (Some(dn), Some(dd)) = (self.num.degree(), self.den.degree()) else {
            return Extended::Finite(Rational::zero());
        };
        let ratio = self.num.leading() / self.den.leading();
        match dn.cmp(&dd) {
            std::cmp::Ordering::Less => Extended::Finite(Rational::zero()),
            std::cmp::Ordering::Equal => Extended::Finite(ratio),
            std::cmp::Ordering::Greater if ratio.is_positive() => Extended::PosInfinity,
            std::cmp::Ordering::Greater => Extended::NegInfinity,
        }
    }

    /// Substitutes a rational function for `t`.
    pub fn compose(&self, inner: &RatFun) -> RatFun {
        let horner = |p: &TauPoly| {
            let mut acc = RatFun::zero();
            for c in p.coeffs().iter().rev() {
                acc = &(&acc * inner) + &RatFun::from_rational(c.clone());
            }
            acc
        };
        horner(&self.num)
            .checked_div(&horner(&self.den))
            .expect("composition produced a zero denominator")
    }
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<TauPoly> for RatFun {
    fn from(p: TauPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<Rational> for RatFun {
    fn from(c: Rational) -> Self {
        Self::from_rational(c)
    }
}

impl From<i64> for RatFun {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFun::from_poly(num);
            }
            return RatFun::reduce(num, self.den.clone());
        }
        if rhs.den.is_one() {
            return RatFun {
                num: &self.num + &(&rhs.num * &self.den),
                den: self.den.clone(),
            };
        }
        if self.den.is_one() {
            return RatFun {
                num: &rhs.num + &(&self.num * &rhs.den),
                den: rhs.den.clone(),
            };
        }
        let g = self.den.gcd(&rhs.den);
        let a_cof = self.den.exact_div(&g);
        let b_cof = rhs.den.exact_div(&g);
        let num = &(&self.num * &b_cof) + &(&rhs.num * &a_cof);
        let den = &self.den * &b_cof;
        RatFun::reduce(num, den)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel so the product is already reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1);
        let lc = den.leading();
        if lc.is_one() {
            RatFun { num, den }
        } else {
            let inv = lc.recip();
            RatFun {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render_ratfun(self))
    }
}

impl FromStr for RatFun {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::text::parse_ratfun(s)
    }
}

impl serde::Serialize for RatFun {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for RatFun {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RatFun {
        RatFun::new(TauPoly::from_ints(num), TauPoly::from_ints(den)).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn common_denominator_sum() {
        let a = rf(&[0, 1], &[1, 1]);
        let b = rf(&[1], &[1, 1]);
        assert_eq!(&a + &b, RatFun::one());
    }

    #[test]
    fn difference_of_squares() {
        let a = rf(&[-1, 1], &[1]);
        let b = rf(&[1, 1], &[1]);
        assert_eq!(&a * &b, rf(&[-1, 0, 1], &[1]));
    }

    #[test]
    fn reduction_cancels_gcd() {
        assert_eq!(rf(&[-1, 0, 1], &[1, 1]), rf(&[-1, 1], &[1]));
        // denominators are normalized to be monic
        let f = rf(&[2], &[4, 2]);
        assert!(f.den().leading().is_one());
        assert_eq!(f, rf(&[1], &[2, 1]));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(RatFun::one().checked_div(&RatFun::zero()), Err(Error::DivisionByZero));
        assert_eq!(
            ratfun_arith(&RatFun::one(), &RatFun::zero(), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
        assert!(RatFun::new(TauPoly::one(), TauPoly::zero()).is_err());
    }

    #[test]
    fn evaluation() {
        assert_eq!(rf(&[2, 2], &[2, 1]).eval_at(&q(1, 1)).unwrap(), q(4, 3));
        assert_eq!(rf(&[2, 4], &[1, 1]).eval_at(&q(1, 1)).unwrap(), q(3, 1));
        assert_eq!(rf(&[0, 1], &[1, 1]).eval_at(&q(0, 1)).unwrap(), q(0, 1));
        assert!(matches!(rf(&[1], &[-1, 1]).eval_at(&q(1, 1)), Err(Error::Pole(_))));
    }

    #[test]
    fn limits_at_infinity() {
        assert_eq!(rf(&[2, 2], &[2, 1]).limit_at_infinity(), Extended::Finite(q(2, 1)));
        assert_eq!(rf(&[1], &[1, 1]).limit_at_infinity(), Extended::Finite(q(0, 1)));
        assert_eq!(rf(&[1, 0, 1], &[1, 1]).limit_at_infinity(), Extended::PosInfinity);
        assert_eq!(rf(&[0, 0, -1], &[1, 1]).limit_at_infinity(), Extended::NegInfinity);
        assert_eq!(RatFun::zero().limit_at_infinity(), Extended::Finite(q(0, 1)));
    }

    #[test]
    fn inverse_round_trip() {
        let a = rf(&[3, 0, 5], &[7, 2]);
        let b = rf(&[-2, 1], &[1, 0, 1]);
        assert_eq!(&a.checked_div(&b).unwrap() * &b, a);
    }
}
