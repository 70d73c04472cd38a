use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::rat::{rat_pow, Rat};
use crate::{Axis, Error, Result};

/// Exact polynomial in the chart coordinates `(z1, z2)`.
///
/// Keys are exponent pairs `(i, j)` for `z1^i z2^j`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

/// Graded-lex comparison with `z1 > z2`: total degree first, then the `z1` exponent.
pub fn grlex_cmp(a: &(u32, u32), b: &(u32, u32)) -> Ordering {
    (a.0 + a.1, a.0).cmp(&(b.0 + b.1, b.0))
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(i: u32, j: u32, c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn z1() -> Self {
        Self::monomial(1, 0, Rat::one())
    }

    pub fn z2() -> Self {
        Self::monomial(0, 1, Rat::one())
    }

    /// Coordinate function of the given axis.
    pub fn var(axis: Axis) -> Self {
        match axis {
            Axis::One => Self::z1(),
            Axis::Two => Self::z2(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rat)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Univariate polynomial `Σ coeffs[k] · var^k`.
    pub fn univariate(axis: Axis, coeffs: &[Rat]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, c)| {
            let k = k as u32;
            let key = match axis {
                Axis::One => (k, 0),
                Axis::Two => (0, k),
            };
            (key, c.clone())
        }))
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    /// Terms in canonical order: descending graded-lex, `z1 > z2`.
    pub fn sorted_terms(&self) -> Vec<((u32, u32), Rat)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, c)| (*k, c.clone())).collect();
        v.sort_by(|a, b| grlex_cmp(&b.0, &a.0));
        v
    }

    /// `(max i, max j)` over the stored terms; `None` for the zero polynomial.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        if self.is_zero() {
            return None;
        }
        let i = self.terms.keys().map(|k| k.0).max().unwrap_or(0);
        let j = self.terms.keys().map(|k| k.1).max().unwrap_or(0);
        Some((i, j))
    }

    pub fn degree_in(&self, axis: Axis) -> Option<u32> {
        self.bidegree().map(|(i, j)| match axis {
            Axis::One => i,
            Axis::Two => j,
        })
    }

    /// True when every term lies in the box `0 ≤ i ≤ a, 0 ≤ j ≤ b`. An empty box admits only zero.
    pub fn fits_box(&self, a: i64, b: i64) -> bool {
        self.terms
            .keys()
            .all(|&(i, j)| i as i64 <= a && j as i64 <= b)
    }

    pub fn leading_term(&self) -> Option<((u32, u32), &Rat)> {
        self.terms
            .iter()
            .max_by(|a, b| grlex_cmp(a.0, b.0))
            .map(|(k, c)| (*k, c))
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.leading_term().map(|(_, c)| c)
    }

    /// Only one variable (or none) occurs.
    pub fn is_univariate_in(&self, axis: Axis) -> bool {
        self.terms.keys().all(|&(i, j)| match axis {
            Axis::One => j == 0,
            Axis::Two => i == 0,
        })
    }

    /// Coefficient list (low to high) of a polynomial in one variable.
    pub fn univariate_coeffs(&self, axis: Axis) -> Result<Vec<Rat>> {
        if !self.is_univariate_in(axis) {
            return Err(Error::NotUnivariate);
        }
        let deg = self.degree_in(axis).unwrap_or(0) as usize;
        let mut out = vec![Rat::zero(); if self.is_zero() { 0 } else { deg + 1 }];
        for (&(i, j), c) in &self.terms {
            out[(i + j) as usize] = c.clone();
        }
        Ok(out)
    }

    pub fn eval(&self, z1: &Rat, z2: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * rat_pow(z1, i) * rat_pow(z2, j);
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, di: u32, dj: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), v)| ((i + di, j + dj), v.clone()))
                .collect(),
        }
    }

    /// Exchanges the roles of `z1` and `z2`.
    pub fn swap_vars(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), v)| ((j, i), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Largest monomial dividing every term, as `(i, j)`.
    pub fn monomial_content(&self) -> (u32, u32) {
        let i = self.terms.keys().map(|k| k.0).min().unwrap_or(0);
        let j = self.terms.keys().map(|k| k.1).min().unwrap_or(0);
        (i, j)
    }

    /// Divides by `z1^di z2^dj`; the caller guarantees exactness.
    pub(crate) fn div_monomial(&self, di: u32, dj: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), v)| ((i - di, j - dj), v.clone()))
                .collect(),
        }
    }

    /// `self / d` when the division is exact, `None` otherwise.
    pub fn div_exact(&self, d: &BiPoly) -> Option<BiPoly> {
        let ((di, dj), dc) = d.leading_term()?;
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some(((ri, rj), rc)) = rem.leading_term() {
            if ri < di || rj < dj {
                return None;
            }
            let t = BiPoly::monomial(ri - di, rj - dj, rc / &dc);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Evaluates at `z_axis = value`, leaving a polynomial in the other variable.
    pub fn eval_axis(&self, axis: Axis, value: &Rat) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            match axis {
                Axis::One => out.add_term(0, j, c * rat_pow(value, i)),
                Axis::Two => out.add_term(i, 0, c * rat_pow(value, j)),
            }
        }
        out
    }
}

/// Chart change on one axis: substitutes `z_k → 1/z_k` and multiplies by `z_k^bound_k`.
///
/// For a section of `O(a,b)` written in chart `V1` this yields its representative in the
/// chart at infinity on that axis. Applying it twice with the same bound is the identity.
pub fn chart_involution(p: &BiPoly, bound: (i64, i64), axis: Axis) -> Result<BiPoly> {
    let k = match axis {
        Axis::One => bound.0,
        Axis::Two => bound.1,
    };
    let mut out = BiPoly::zero();
    for (&(i, j), c) in &p.terms {
        let e = match axis {
            Axis::One => i,
            Axis::Two => j,
        } as i64;
        if e > k {
            return Err(Error::DegreeBoundViolation(format!(
                "exponent {e} exceeds bound {k} on axis {axis}"
            )));
        }
        let new = (k - e) as u32;
        match axis {
            Axis::One => out.add_term(new, j, c.clone()),
            Axis::Two => out.add_term(i, new, c.clone()),
        }
    }
    Ok(out)
}

impl Zero for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }
}

impl One for BiPoly {
    fn one() -> Self {
        BiPoly::one()
    }
}

impl From<Rat> for BiPoly {
    fn from(c: Rat) -> Self {
        BiPoly::constant(c)
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, c.clone());
        }
    }
}

impl SubAssign<&BiPoly> for BiPoly {
    fn sub_assign(&mut self, rhs: &BiPoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, -c);
        }
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: &'a BiPoly) -> BiPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, ((i, j), c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut parts = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                parts.push(mag.to_string());
            }
            for (name, e) in [("z1", i), ("z2", j)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
