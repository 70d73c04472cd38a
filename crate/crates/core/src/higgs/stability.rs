use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{require_integrable, HiggsField};
use crate::exactalg::{rat::rat_sqrt, BiPoly, ConstMat2, PolyMat2, Rat, UniPoly};
use crate::{Axis, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Stability {
    Stable,
    StrictlySemistable,
    Unstable,
    Unsupported,
}

/// `q20·x² + q11·xy + q02·y²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryQuadratic {
    pub q20: Rat,
    pub q11: Rat,
    pub q02: Rat,
}

impl BinaryQuadratic {
    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        &self.q20 * x * x + &self.q11 * x * y + &self.q02 * y * y
    }

    pub fn is_zero(&self) -> bool {
        self.q20.is_zero() && self.q11.is_zero() && self.q02.is_zero()
    }

    /// `q(t, 1)` as a univariate polynomial in `t`.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::new(vec![self.q02.clone(), self.q11.clone(), self.q20.clone()])
    }
}

/// For `X = (a b; c −a)`, `v = (x, y)` is an eigenvector iff `q(v) = 0`, where
/// `q = c·x² − 2a·xy − b·y²` is the determinant of `(v | Xv)`.
pub fn eigen_quadratic(x: &ConstMat2) -> BinaryQuadratic {
    let (a, b, c) = (&x.m[0][0], &x.m[0][1], &x.m[1][0]);
    BinaryQuadratic {
        q20: c.clone(),
        q11: -(a * Rat::from_integer(2.into())),
        q02: -b.clone(),
    }
}

enum CommonRoots {
    AtInfinity,
    Affine(UniPoly),
    Vacuous,
}

fn common_roots(mats: &[ConstMat2]) -> CommonRoots {
    let qs: Vec<BinaryQuadratic> = mats
        .iter()
        .filter(|m| !m.is_zero())
        .map(eigen_quadratic)
        .collect();
    if qs.is_empty() {
        return CommonRoots::Vacuous;
    }
    if qs.iter().all(|q| q.q20.is_zero()) {
        return CommonRoots::AtInfinity;
    }
    let g = qs
        .iter()
        .fold(UniPoly::zero(), |g, q| g.gcd(&q.dehomogenize()));
    CommonRoots::Affine(g)
}

/// Whether the nonzero matrices share an eigenvector over the algebraic closure.
pub fn common_eigenvector_exists(mats: &[ConstMat2]) -> bool {
    match common_roots(mats) {
        CommonRoots::Vacuous | CommonRoots::AtInfinity => true,
        CommonRoots::Affine(g) => g.degree().is_some_and(|d| d > 0),
    }
}

/// A common eigenvector with rational coordinates.
///
/// `Ok(None)` means there is no common eigenvector at all; `IrrationalEigenvalues` means
/// every common eigenvector needs a quadratic extension.
pub fn common_rational_eigenvector(mats: &[ConstMat2]) -> Result<Option<(Rat, Rat)>> {
    match common_roots(mats) {
        CommonRoots::Vacuous | CommonRoots::AtInfinity => Ok(Some((Rat::one(), Rat::zero()))),
        CommonRoots::Affine(g) => match g.degree() {
            Some(1) => Ok(Some((-g.coeffs()[0].clone(), Rat::one()))),
            Some(2) => {
                // monic t² + s t + p
                let (p, s) = (&g.coeffs()[0], &g.coeffs()[1]);
                let disc = s * s - p * Rat::from_integer(4.into());
                match rat_sqrt(&disc) {
                    Some(r) => Ok(Some(((r - s) / Rat::from_integer(2.into()), Rat::one()))),
                    None => Err(Error::IrrationalEigenvalues),
                }
            }
            _ => Ok(None),
        },
    }
}

fn eigenvalue(x: &ConstMat2, (vx, vy): &(Rat, Rat)) -> Rat {
    let (a, b, c) = (&x.m[0][0], &x.m[0][1], &x.m[1][0]);
    if !vx.is_zero() {
        (a * vx + b * vy) / vx
    } else {
        (c * vx - a * vy) / vy
    }
}

/// Constant matrices `M_k` with `Φ_axis = Σ M_k z^k`.
fn coefficient_matrices(phi: &PolyMat2, axis: Axis) -> Vec<ConstMat2> {
    let deg = phi
        .m
        .iter()
        .flatten()
        .filter_map(|p| p.degree_in(axis))
        .max()
        .unwrap_or(0);
    (0..=deg)
        .map(|k| {
            let (i, j) = match axis {
                Axis::One => (k, 0),
                Axis::Two => (0, k),
            };
            phi.map(|p| p.coeff(i, j))
        })
        .collect()
}

fn slope_of(l: crate::cohomology::LineBundle) -> i64 {
    l.slope()
}

/// Stability of an integrable field on a decomposable bundle, for the classified cases.
pub fn stability_classify(f: &HiggsField) -> Result<Stability> {
    require_integrable(f)?;
    let (s1, s2) = (slope_of(f.bundle.l1), slope_of(f.bundle.l2));
    if s1 < s2 {
        return stability_classify(&f.swapped());
    }
    if s1 > s2 {
        // L1 is the only candidate destabilizer; it is invariant iff both C entries vanish.
        let invariant = f.phi1.m[1][0].is_zero() && f.phi2.m[1][0].is_zero();
        return Ok(if invariant {
            Stability::Unstable
        } else {
            Stability::Stable
        });
    }
    if f.bundle.l1 != f.bundle.l2 {
        return Ok(Stability::Unsupported);
    }
    if common_eigenvector_exists(&all_coefficients(f)) {
        Ok(Stability::StrictlySemistable)
    } else {
        Ok(Stability::Stable)
    }
}

fn all_coefficients(f: &HiggsField) -> Vec<ConstMat2> {
    let mut mats = coefficient_matrices(&f.phi1, Axis::One);
    mats.extend(coefficient_matrices(&f.phi2, Axis::Two));
    mats
}

/// Associated graded object `diag(λ1, −λ1), diag(λ2, −λ2)` of a strictly semistable field.
pub fn graded_object(f: &HiggsField) -> Result<HiggsField> {
    if stability_classify(f)? != Stability::StrictlySemistable {
        return Err(Error::NotStrictlySemistable);
    }
    let mats1 = coefficient_matrices(&f.phi1, Axis::One);
    let mats2 = coefficient_matrices(&f.phi2, Axis::Two);
    let all: Vec<ConstMat2> = mats1.iter().chain(&mats2).cloned().collect();
    let v = common_rational_eigenvector(&all)?.ok_or(Error::NotStrictlySemistable)?;
    let lam = |mats: &[ConstMat2], axis: Axis| {
        let coeffs: Vec<Rat> = mats.iter().map(|m| eigenvalue(m, &v)).collect();
        BiPoly::univariate(axis, &coeffs)
    };
    let (l1, l2) = (lam(&mats1, Axis::One), lam(&mats2, Axis::Two));
    Ok(HiggsField::new(
        f.bundle,
        PolyMat2::diag(l1.clone(), -l1),
        PolyMat2::diag(l2.clone(), -l2),
    ))
}

/// Canonical `(A1, A2)` of the graded object, up to the overall sign `±`.
///
/// The sign makes the grlex-leading coefficient of `A1 + A2` positive; when `A1 + A2 = 0`
/// the leading coefficient of `A1` is used instead.
pub fn s_equiv_rep(f: &HiggsField) -> Result<(BiPoly, BiPoly)> {
    let g = graded_object(f)?;
    let (a1, a2) = (g.phi1.m[0][0].clone(), g.phi2.m[0][0].clone());
    let sum = &a1 + &a2;
    let key = if sum.is_zero() { a1.clone() } else { sum };
    match key.leading_coeff() {
        Some(c) if c.is_negative() => Ok((-a1, -a2)),
        _ => Ok((a1, a2)),
    }
}
