use num_traits::{One, Zero};

use super::linalg::determinant;
use super::rat::Rat;

/// Dense univariate polynomial over ℚ, coefficients low to high, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Rat>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.0.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.0.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer((k as i64).into()))
                .collect(),
        )
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.0.len().max(rhs.0.len());
        let zero = Rat::zero();
        Self::new(
            (0..n)
                .map(|k| self.0.get(k).unwrap_or(&zero) + rhs.0.get(k).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = lc.recip();
                Self(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// Euclidean division; panics if `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut rem = self.0.clone();
        let mut quot = vec![Rat::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / &lc;
            for (i, c) in d.0.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Resultant of two univariate polynomials via the Sylvester determinant.
pub fn resultant(f: &UniPoly, g: &UniPoly) -> Rat {
    let (m, n) = match (f.degree(), g.degree()) {
        (Some(m), Some(n)) => (m, n),
        _ => return Rat::zero(),
    };
    if m == 0 && n == 0 {
        return Rat::one();
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    // coefficients high to low
    let fh: Vec<Rat> = f.coeffs().iter().rev().cloned().collect();
    let gh: Vec<Rat> = g.coeffs().iter().rev().cloned().collect();
    for shift in 0..n {
        let mut row = vec![Rat::zero(); size];
        row[shift..shift + m + 1].clone_from_slice(&fh);
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![Rat::zero(); size];
        row[shift..shift + n + 1].clone_from_slice(&gh);
        rows.push(row);
    }
    determinant(rows)
}

/// Discriminant up to a nonzero constant factor: `Res(f, f')`. Zero iff `f` has a repeated root.
pub fn discriminant_proxy(f: &UniPoly) -> Rat {
    resultant(f, &f.derivative())
}
