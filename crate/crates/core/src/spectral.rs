//! Hitchin map and spectral-surface diagnostics.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::rat::{rat_sqrt, square_decompose};
use crate::exactalg::univariate::discriminant_proxy;
use crate::exactalg::{det2, BiPoly, Rat, UniPoly};
use crate::higgs::{require_integrable, require_valid, DecomposableBundle, HiggsField};
use crate::{Axis, Error, Result};

/// `(ρ1, ρ12, ρ2) ∈ H⁰(O(4,0) ⊕ O(2,2) ⊕ O(0,4))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralData {
    pub rho1: BiPoly,
    pub rho12: BiPoly,
    pub rho2: BiPoly,
}

impl SpectralData {
    pub fn new(rho1: BiPoly, rho12: BiPoly, rho2: BiPoly) -> Self {
        Self { rho1, rho12, rho2 }
    }

    pub fn check_slots(&self) -> Result<()> {
        for (name, p, (a, b)) in [
            ("rho1", &self.rho1, (4, 0)),
            ("rho12", &self.rho12, (2, 2)),
            ("rho2", &self.rho2, (0, 4)),
        ] {
            if !p.fits_box(a, b) {
                return Err(Error::SlotViolation(format!("{name} in O({a},{b})")));
            }
        }
        Ok(())
    }
}

/// Base point `(z1, z2)` and fibre coordinates `(η1, η2)` in `Tot(T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralPoint {
    pub z1: Rat,
    pub z2: Rat,
    pub eta1: Rat,
    pub eta2: Rat,
}

/// `(det Φ1, −2A1A2 − 2B1C2, det Φ2)`.
pub fn hitchin_map(f: &HiggsField) -> Result<SpectralData> {
    require_integrable(f)?;
    let (a1, b1) = (&f.phi1.m[0][0], &f.phi1.m[0][1]);
    let (a2, c2) = (&f.phi2.m[0][0], &f.phi2.m[1][0]);
    let two = BiPoly::constant(Rat::from_integer(2.into()));
    let rho12 = -(&two * &(&(a1 * a2) + &(b1 * c2)));
    Ok(SpectralData::new(det2(&f.phi1), rho12, det2(&f.phi2)))
}

/// `ρ12² = 4ρ1ρ2`.
pub fn rho_consistent(s: &SpectralData) -> bool {
    let four = BiPoly::constant(Rat::from_integer(4.into()));
    &s.rho12 * &s.rho12 == &four * &(&s.rho1 * &s.rho2)
}

/// `(η1² + ρ1(z), η2² + ρ2(z), 2η1η2 + ρ12(z))`.
pub fn spectral_residual(s: &SpectralData, p: &SpectralPoint) -> (Rat, Rat, Rat) {
    let (z1, z2) = (&p.z1, &p.z2);
    let two = Rat::from_integer(2.into());
    (
        &p.eta1 * &p.eta1 + s.rho1.eval(z1, z2),
        &p.eta2 * &p.eta2 + s.rho2.eval(z1, z2),
        two * &p.eta1 * &p.eta2 + s.rho12.eval(z1, z2),
    )
}

/// `coeff · √radicand` with `radicand` square-free (negative for imaginary values).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    pub coeff: Rat,
    pub radicand: BigInt,
}

impl Surd {
    /// A square root of `x`.
    pub fn sqrt_of(x: &Rat) -> Self {
        if x.is_zero() {
            return Surd {
                coeff: Rat::zero(),
                radicand: BigInt::one(),
            };
        }
        let (k, s) = square_decompose(&x.abs());
        Surd {
            coeff: k,
            radicand: if x.is_negative() { -s } else { s },
        }
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero() || self.radicand.is_one()
    }
}

/// Points of `S_ρ` over a base point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fibre {
    /// `η1² = −ρ1(z)`.
    pub eta1_sq: Rat,
    /// `η2² = −ρ2(z)`.
    pub eta2_sq: Rat,
    /// `η1η2 = −ρ12(z)/2`.
    pub eta1_eta2: Rat,
    pub eta1: Surd,
    pub eta2: Surd,
    pub ramified: bool,
    /// Explicit rational points `(η1, η2)`, empty when the fibre is irrational.
    pub points: Vec<(Rat, Rat)>,
}

pub fn fibre_over_point(f: &HiggsField, z1: &Rat, z2: &Rat) -> Result<Fibre> {
    let s = hitchin_map(f)?;
    Ok(fibre_of_data(&s, z1, z2))
}

/// Fibre of `S_ρ` over `(z1, z2)` for consistent data.
pub fn fibre_of_data(s: &SpectralData, z1: &Rat, z2: &Rat) -> Fibre {
    let e1 = -s.rho1.eval(z1, z2);
    let e2 = -s.rho2.eval(z1, z2);
    let prod = -s.rho12.eval(z1, z2) / Rat::from_integer(2.into());
    let ramified = e1.is_zero() || e2.is_zero();
    let mut points = Vec::new();
    match (rat_sqrt(&e1), rat_sqrt(&e2)) {
        (Some(r1), _) if !r1.is_zero() => {
            let partner = &prod / &r1;
            points.push((r1.clone(), partner.clone()));
            points.push((-r1, -partner));
        }
        (Some(_), Some(r2)) => {
            points.push((Rat::zero(), r2.clone()));
            if !r2.is_zero() {
                points.push((Rat::zero(), -r2));
            }
        }
        _ => {}
    }
    Fibre {
        eta1: Surd::sqrt_of(&e1),
        eta2: Surd::sqrt_of(&e2),
        eta1_sq: e1,
        eta2_sq: e2,
        eta1_eta2: prod,
        ramified,
        points,
    }
}

/// Whether a section of `O(4)` on the given factor has four distinct roots on P¹.
pub fn is_generic_quartic(rho: &BiPoly, axis: Axis) -> Result<bool> {
    let coeffs = rho.univariate_coeffs(axis)?;
    let f = UniPoly::new(coeffs);
    let deg = match f.degree() {
        None => return Ok(false),
        Some(d) if d > 4 => {
            return Err(Error::SlotViolation(format!("degree {d} exceeds 4")));
        }
        Some(d) => d,
    };
    // a degree deficit of k is a root of multiplicity k at infinity
    Ok(match 4 - deg {
        0 | 1 => !discriminant_proxy(&f).is_zero(),
        _ => false,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FibreClass {
    GenericNoDecomposable,
    ProductCaseAxis1,
    ProductCaseAxis2,
    NonGenericOther,
}

pub fn fibre_decomposability(s: &SpectralData) -> Result<FibreClass> {
    s.check_slots()?;
    if !rho_consistent(s) {
        return Err(Error::InconsistentRho);
    }
    let g1 = is_generic_quartic(&s.rho1, Axis::One)?;
    let g2 = is_generic_quartic(&s.rho2, Axis::Two)?;
    Ok(if s.rho12.is_zero() && s.rho2.is_zero() && g1 {
        FibreClass::ProductCaseAxis1
    } else if s.rho12.is_zero() && s.rho1.is_zero() && g2 {
        FibreClass::ProductCaseAxis2
    } else if g1 && g2 && !s.rho12.is_zero() {
        FibreClass::GenericNoDecomposable
    } else {
        FibreClass::NonGenericOther
    })
}

/// Verification direction of the product case: `Φ = Φ1` on `O(a,m) ⊕ O(b,m)`.
pub fn product_case_verify(a: i64, b: i64, m: i64, f: &HiggsField) -> Result<bool> {
    if f.bundle != DecomposableBundle::from_pairs((a, m), (b, m)) {
        return Err(Error::BundleMismatch);
    }
    require_valid(f)?;
    if !f.phi2.is_zero() {
        return Ok(false);
    }
    let s = hitchin_map(f)?;
    Ok(s.rho12.is_zero() && s.rho2.is_zero() && s.rho1 == det2(&f.phi1))
}
