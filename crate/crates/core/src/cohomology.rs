//! Line bundles `O(a,b)` on P¹×P¹ and their cohomology.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::chern::ChernData;
use crate::Rat;

/// `O(a,b) = pr₁*O(a) ⊗ pr₂*O(b)`, divisor class `b·C₀ + a·F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LineBundle {
    pub a: i64,
    pub b: i64,
}

impl LineBundle {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub const fn trivial() -> Self {
        Self { a: 0, b: 0 }
    }

    pub fn tensor(self, other: LineBundle) -> Self {
        Self::new(self.a + other.a, self.b + other.b)
    }

    pub fn dual(self) -> Self {
        Self::new(-self.a, -self.b)
    }

    pub fn h_dims(self) -> HDims {
        h_dims(self.a, self.b)
    }

    pub fn slope(self) -> i64 {
        slope(self.a, self.b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HDims {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
}

/// `h⁰(P¹, O(n))`.
fn p1_h0(n: i64) -> u64 {
    (n + 1).max(0) as u64
}

/// `h¹(P¹, O(n))`.
fn p1_h1(n: i64) -> u64 {
    (-n - 1).max(0) as u64
}

/// Künneth: `h^k(O(a,b)) = Σ_{p+q=k} h^p(O(a)) h^q(O(b))`.
pub fn h_dims(a: i64, b: i64) -> HDims {
    HDims {
        h0: p1_h0(a) * p1_h0(b),
        h1: p1_h0(a) * p1_h1(b) + p1_h1(a) * p1_h0(b),
        h2: p1_h1(a) * p1_h1(b),
    }
}

/// Chart-`V1` monomials `z1^i z2^j` spanning `H⁰(O(a,b))`, ordered by `j` then `i`.
pub fn monomial_basis(a: i64, b: i64) -> Vec<(u32, u32)> {
    if a < 0 || b < 0 {
        return Vec::new();
    }
    (0..=b as u32)
        .flat_map(|j| (0..=a as u32).map(move |i| (i, j)))
        .collect()
}

/// `H`-slope with `H = C₀ + F`: `deg_H O(a,b) = a + b`.
pub fn slope(a: i64, b: i64) -> i64 {
    a + b
}

/// `μ(E) = (α + β)/2` for a rank-2 bundle with `c₁ = αC₀ + βF`.
pub fn slope_rank2(c: &ChernData) -> Rat {
    Ratio::new((c.alpha + c.beta).into(), 2.into())
}
