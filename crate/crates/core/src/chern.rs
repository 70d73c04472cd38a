//! Chern data, reduced classes and the existence decision procedures.

use serde::{Deserialize, Serialize};

use crate::cohomology::LineBundle;

/// `c₁ = α·C₀ + β·F`, `c₂ = γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChernData {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
}

impl ChernData {
    pub const fn new(alpha: i64, beta: i64, gamma: i64) -> Self {
        Self { alpha, beta, gamma }
    }

    /// Chern data of `E ⊗ L` for `L = O(x,y)`, whose class is `y·C₀ + x·F`.
    pub fn twist(self, l: LineBundle) -> Self {
        let (x, y) = (l.a, l.b);
        Self {
            alpha: self.alpha + 2 * y,
            beta: self.beta + 2 * x,
            // c₂(E⊗L) = c₂ + c₁·c₁(L) + c₁(L)², with C₀² = F² = 0, C₀·F = 1
            gamma: self.gamma
                + intersect((self.alpha, self.beta), (y, x))
                + intersect((y, x), (y, x)),
        }
    }
}

/// Intersection of `p·C₀ + q·F` with `r·C₀ + s·F`.
pub fn intersect((p, q): (i64, i64), (r, s): (i64, i64)) -> i64 {
    p * s + q * r
}

/// Splitting type `d` on the general fibre and push-forward degree `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericalInvariants {
    pub d: i64,
    pub r: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReducedTag {
    Zero,
    MinusF,
    MinusC0,
    MinusC0MinusF,
}

impl ReducedTag {
    /// `(α, β)` of the reduced first Chern class.
    pub fn class(self) -> (i64, i64) {
        match self {
            ReducedTag::Zero => (0, 0),
            ReducedTag::MinusF => (0, -1),
            ReducedTag::MinusC0 => (-1, 0),
            ReducedTag::MinusC0MinusF => (-1, -1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedClass {
    pub tag: ReducedTag,
    pub twist: LineBundle,
    pub gamma_prime: i64,
}

/// Twists `E` by the line bundle that brings `c₁` to one of `0, −F, −C₀, −C₀−F`.
pub fn reduce_class(c: ChernData) -> ReducedClass {
    let a_odd = c.alpha.rem_euclid(2) == 1;
    let b_odd = c.beta.rem_euclid(2) == 1;
    let tag = match (a_odd, b_odd) {
        (false, false) => ReducedTag::Zero,
        (false, true) => ReducedTag::MinusF,
        (true, false) => ReducedTag::MinusC0,
        (true, true) => ReducedTag::MinusC0MinusF,
    };
    let (ta, tb) = tag.class();
    // α + 2y = ta, β + 2x = tb
    let twist = LineBundle::new((tb - c.beta) / 2, (ta - c.alpha) / 2);
    let reduced = c.twist(twist);
    debug_assert_eq!((reduced.alpha, reduced.beta), (ta, tb));
    ReducedClass {
        tag,
        twist,
        gamma_prime: reduced.gamma,
    }
}

/// `ℓ(c₁, c₂, d, r) = γ − αr − βd + 2dr`.
pub fn ext_length(c: ChernData, inv: NumericalInvariants) -> i64 {
    c.gamma - c.alpha * inv.r - c.beta * inv.d + 2 * inv.d * inv.r
}

/// Non-emptiness of the moduli of stable bundles with the given invariants.
pub fn bundle_moduli_nonempty(c: ChernData, inv: NumericalInvariants) -> bool {
    let l = ext_length(c, inv);
    l >= 0 && (2 * inv.d > c.alpha || (2 * inv.d == c.alpha && c.beta - 2 * inv.r <= l))
}

/// Whether semistable co-Higgs pairs with Chern data `c` exist.
pub fn cohiggs_moduli_nonempty(c: ChernData) -> bool {
    let red = reduce_class(c);
    match red.tag {
        ReducedTag::MinusC0MinusF => red.gamma_prime >= 1,
        _ => red.gamma_prime >= 0,
    }
}

/// The closed-form odd/odd bound `2γ ≥ αβ − 2`, kept only for comparison.
pub fn printed_odd_odd_bound(c: ChernData) -> bool {
    2 * c.gamma >= c.alpha * c.beta - 2
}

/// True when both parities are odd and the printed closed form disagrees with the
/// reduction route (`γ' ≥ 1`, equivalently `2γ ≥ αβ + 1`).
pub fn odd_odd_discrepancy(c: ChernData) -> bool {
    let red = reduce_class(c);
    red.tag == ReducedTag::MinusC0MinusF && printed_odd_odd_bound(c) != (red.gamma_prime >= 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonemptyVerdict {
    pub nonempty: bool,
    pub reduced: ReducedClass,
    pub theorem48_case2_discrepancy: bool,
}

pub fn nonempty_verdict(c: ChernData) -> NonemptyVerdict {
    NonemptyVerdict {
        nonempty: cohiggs_moduli_nonempty(c),
        reduced: reduce_class(c),
        theorem48_case2_discrepancy: odd_odd_discrepancy(c),
    }
}

/// Region (for `c₁ = −F`) where every bundle is stable and carries only the zero Higgs field.
pub fn no_nontrivial_higgs_region(inv: NumericalInvariants, c2: i64) -> bool {
    let NumericalInvariants { d, r } = inv;
    (d > 1 && r <= -1 - d && c2 >= 3 - d * (1 + 2 * r)) || (d == 1 && r <= -2 && c2 >= -4 * r - 1)
}
