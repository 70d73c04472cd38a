use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::BiPoly;
use super::rat::Rat;
use crate::{Error, Result};

/// Quotient `num / den` of bivariate polynomials.
///
/// Normalization is deliberately shallow: common monomial factors are cancelled, the
/// denominator is made monic in graded-lex order, and an exactly dividing denominator is
/// absorbed. Equality is decided by cross-multiplication, never by structure.
#[derive(Clone, Debug)]
pub struct RatFn {
    num: BiPoly,
    den: BiPoly,
}

/// Laurent polynomial: exponent pairs may be negative.
pub type Laurent = BTreeMap<(i64, i64), Rat>;

impl RatFn {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: BiPoly, den: BiPoly) -> Self {
        if num.is_zero() {
            return Self::from_poly(BiPoly::zero());
        }
        let (ni, nj) = num.monomial_content();
        let (di, dj) = den.monomial_content();
        let (ci, cj) = (ni.min(di), nj.min(dj));
        let mut num = num.div_monomial(ci, cj);
        let mut den = den.div_monomial(ci, cj);
        let lc = den.leading_coeff().cloned().unwrap_or_else(Rat::one);
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        if !den.is_one_poly() {
            if let Some(q) = num.div_exact(&den) {
                return Self::from_poly(q);
            }
        }
        Self { num, den }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        Self {
            num: p,
            den: BiPoly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(BiPoly::constant(c))
    }

    /// `z1^i z2^j` with possibly negative exponents.
    pub fn laurent_monomial(i: i64, j: i64, c: Rat) -> Self {
        let (ni, di) = if i >= 0 {
            (i as u32, 0)
        } else {
            (0, (-i) as u32)
        };
        let (nj, dj) = if j >= 0 {
            (j as u32, 0)
        } else {
            (0, (-j) as u32)
        };
        Self::normalized(
            BiPoly::monomial(ni, nj, c),
            BiPoly::monomial(di, dj, Rat::one()),
        )
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFn) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// The polynomial this function equals, if any.
    pub fn to_poly(&self) -> Option<BiPoly> {
        if self.den.is_one_poly() {
            return Some(self.num.clone());
        }
        self.num.div_exact(&self.den)
    }

    /// Laurent expansion when the denominator is a single monomial.
    pub fn as_laurent(&self) -> Option<Laurent> {
        if self.den.num_terms() != 1 {
            return None;
        }
        let ((di, dj), dc) = self.den.leading_term()?;
        let mut out = Laurent::new();
        for (&(i, j), c) in self.num.terms() {
            out.insert((i as i64 - di as i64, j as i64 - dj as i64), c / dc);
        }
        Some(out)
    }

    pub fn eval(&self, z1: &Rat, z2: &Rat) -> Result<Rat> {
        let d = self.den.eval(z1, z2);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(z1, z2) / d)
    }
}

impl BiPoly {
    pub(crate) fn is_one_poly(&self) -> bool {
        self.num_terms() == 1 && self.coeff(0, 0).is_one()
    }
}

impl From<BiPoly> for RatFn {
    fn from(p: BiPoly) -> Self {
        RatFn::from_poly(p)
    }
}

impl PartialEq for RatFn {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Zero for RatFn {
    fn zero() -> Self {
        RatFn::from_poly(BiPoly::zero())
    }
    fn is_zero(&self) -> bool {
        RatFn::is_zero(self)
    }
}

impl One for RatFn {
    fn one() -> Self {
        RatFn::from_poly(BiPoly::one())
    }
}

impl<'a> Add<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn add(self, rhs: &'a RatFn) -> RatFn {
        if self.den == rhs.den {
            return RatFn::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFn::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &'a RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &'a RatFn) -> RatFn {
        RatFn::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFn {
            type Output = RatFn;
            fn $m(self, rhs: RatFn) -> RatFn {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
