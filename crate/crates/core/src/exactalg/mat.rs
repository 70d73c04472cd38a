use std::fmt;

use super::poly::BiPoly;
use super::rat::Rat;
use super::ratfn::RatFn;
use super::ring::Ring;
use crate::{Error, Result};

/// 2×2 matrix over a commutative ring, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<T> {
    pub m: [[T; 2]; 2],
}

/// Matrix of polynomials: a local trivialization of a section of `End E ⊗ L`.
pub type PolyMat2 = Mat2<BiPoly>;
/// Matrix of rational functions: transition data, inverses, conjugates.
pub type RatMat2 = Mat2<RatFn>;
/// Constant matrix.
pub type ConstMat2 = Mat2<Rat>;

impl<T: Ring> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Self {
            m: [[a, b], [c, d]],
        }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    pub fn identity() -> Self {
        Self::diag(T::one(), T::one())
    }

    pub fn diag(a: T, d: T) -> Self {
        Self::new(a, T::zero(), T::zero(), d)
    }

    /// Trace-free matrix `(a b; c −a)`.
    pub fn trace_free(a: T, b: T, c: T) -> Self {
        let d = -a.clone();
        Self::new(a, b, c, d)
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.m[r][c]
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(|x| x.is_zero())
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> Mat2<U> {
        Mat2 {
            m: [
                [f(&self.m[0][0]), f(&self.m[0][1])],
                [f(&self.m[1][0]), f(&self.m[1][1])],
            ],
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let e = |r: usize, c: usize| self.m[r][c].clone() + rhs.m[r][c].clone();
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let e = |r: usize, c: usize| self.m[r][c].clone() - rhs.m[r][c].clone();
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let e = |r: usize, c: usize| {
            self.m[r][0].clone() * rhs.m[0][c].clone() + self.m[r][1].clone() * rhs.m[1][c].clone()
        };
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|x| k.clone() * x.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn trace(&self) -> T {
        self.m[0][0].clone() + self.m[1][1].clone()
    }

    pub fn det(&self) -> T {
        self.m[0][0].clone() * self.m[1][1].clone() - self.m[0][1].clone() * self.m[1][0].clone()
    }

    pub fn adjugate(&self) -> Self {
        let [[a, b], [c, d]] = self.m.clone();
        Self::new(d, -b, -c, a)
    }

    /// `XY − YX`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }
}

impl PolyMat2 {
    pub fn to_rat(&self) -> RatMat2 {
        self.map(|p| RatFn::from_poly(p.clone()))
    }
}

impl RatMat2 {
    /// Polynomial matrix, if every entry is polynomial.
    pub fn to_poly(&self) -> Option<PolyMat2> {
        Some(PolyMat2::new(
            self.m[0][0].to_poly()?,
            self.m[0][1].to_poly()?,
            self.m[1][0].to_poly()?,
            self.m[1][1].to_poly()?,
        ))
    }

    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularAutomorphism);
        }
        let inv = det.recip()?;
        Ok(self.adjugate().scale(&inv))
    }

    /// `ΨXΨ⁻¹`.
    pub fn conjugate_by(&self, psi: &RatMat2) -> Result<Self> {
        Ok(psi.mul(self).mul(&psi.inverse()?))
    }
}

/// `XY − YX` for polynomial matrices.
pub fn commutator2(x: &PolyMat2, y: &PolyMat2) -> PolyMat2 {
    x.commutator(y)
}

/// `X₁₁X₂₂ − X₁₂X₂₁`.
pub fn det2(x: &PolyMat2) -> BiPoly {
    x.det()
}

/// `ΨΦΨ⁻¹` with rational-function entries. Trace and determinant are preserved.
pub fn conjugate2(phi: &PolyMat2, psi: &PolyMat2) -> Result<RatMat2> {
    phi.to_rat().conjugate_by(&psi.to_rat())
}

impl<T: fmt::Display> fmt::Display for Mat2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}
