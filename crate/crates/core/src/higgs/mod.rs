//! Higgs fields on decomposable rank-2 bundles `L1 ⊕ L2`.
//!
//! A field is stored as its two chart-`V1` components `Φ1 = (A1 B1; C1 −A1)` and
//! `Φ2 = (A2 B2; C2 −A2)`, the coefficients of `∂1` and `∂2`.

mod normal_form;
mod stability;

pub use normal_form::{
    normal_form_f0, normal_form_pm1, pullback_from_line, section_q, NormalFormF0, Pullback,
};
pub use stability::{
    common_eigenvector_exists, common_rational_eigenvector, eigen_quadratic, graded_object,
    s_equiv_rep, stability_classify, BinaryQuadratic, Stability,
};

use serde::{Deserialize, Serialize};

use crate::cohomology::LineBundle;
use crate::exactalg::{commutator2, BiPoly, PolyMat2};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DecomposableBundle {
    pub l1: LineBundle,
    pub l2: LineBundle,
}

impl DecomposableBundle {
    pub const fn new(l1: LineBundle, l2: LineBundle) -> Self {
        Self { l1, l2 }
    }

    pub const fn from_pairs((a1, b1): (i64, i64), (a2, b2): (i64, i64)) -> Self {
        Self::new(LineBundle::new(a1, b1), LineBundle::new(a2, b2))
    }

    pub fn swapped(self) -> Self {
        Self::new(self.l2, self.l1)
    }
}

/// Line bundles whose sections the six entries must be.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HiggsShape {
    pub a1: LineBundle,
    pub b1: LineBundle,
    pub c1: LineBundle,
    pub a2: LineBundle,
    pub b2: LineBundle,
    pub c2: LineBundle,
}

pub fn higgs_shape(b: DecomposableBundle) -> HiggsShape {
    let (da, db) = (b.l1.a - b.l2.a, b.l1.b - b.l2.b);
    HiggsShape {
        a1: LineBundle::new(2, 0),
        b1: LineBundle::new(da + 2, db),
        c1: LineBundle::new(2 - da, -db),
        a2: LineBundle::new(0, 2),
        b2: LineBundle::new(da, db + 2),
        c2: LineBundle::new(-da, 2 - db),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HiggsField {
    pub bundle: DecomposableBundle,
    pub phi1: PolyMat2,
    pub phi2: PolyMat2,
}

impl HiggsField {
    pub fn new(bundle: DecomposableBundle, phi1: PolyMat2, phi2: PolyMat2) -> Self {
        Self { bundle, phi1, phi2 }
    }

    pub fn zero(bundle: DecomposableBundle) -> Self {
        Self::new(bundle, PolyMat2::zero(), PolyMat2::zero())
    }

    /// Field with `Φ1 = (a1 b1; c1 −a1)` and `Φ2 = (a2 b2; c2 −a2)`.
    pub fn from_entries(
        bundle: DecomposableBundle,
        [a1, b1, c1]: [BiPoly; 3],
        [a2, b2, c2]: [BiPoly; 3],
    ) -> Self {
        Self::new(
            bundle,
            PolyMat2::trace_free(a1, b1, c1),
            PolyMat2::trace_free(a2, b2, c2),
        )
    }

    pub fn component(&self, k: u8) -> &PolyMat2 {
        if k == 1 {
            &self.phi1
        } else {
            &self.phi2
        }
    }

    pub fn is_zero(&self) -> bool {
        self.phi1.is_zero() && self.phi2.is_zero()
    }

    /// The same field written on `L2 ⊕ L1`.
    pub fn swapped(&self) -> Self {
        let flip = |m: &PolyMat2| {
            PolyMat2::new(
                m.m[1][1].clone(),
                m.m[1][0].clone(),
                m.m[0][1].clone(),
                m.m[0][0].clone(),
            )
        };
        Self::new(self.bundle.swapped(), flip(&self.phi1), flip(&self.phi2))
    }
}

/// Reason the field fails validation, or `None`.
pub fn field_defect(f: &HiggsField) -> Option<String> {
    let shape = higgs_shape(f.bundle);
    let slots = [
        (&f.phi1, [shape.a1, shape.b1, shape.c1], 1),
        (&f.phi2, [shape.a2, shape.b2, shape.c2], 2),
    ];
    for (m, [sa, sb, sc], k) in slots {
        if !(&m.m[0][0] + &m.m[1][1]).is_zero() {
            return Some(format!("phi{k} is not trace-free"));
        }
        for (name, p, s) in [
            ("A", &m.m[0][0], sa),
            ("B", &m.m[0][1], sb),
            ("C", &m.m[1][0], sc),
        ] {
            if !p.fits_box(s.a, s.b) {
                return Some(format!("{name}{k} does not fit slot O({},{})", s.a, s.b));
            }
        }
    }
    None
}

pub fn validate_field(f: &HiggsField) -> bool {
    field_defect(f).is_none()
}

pub(crate) fn require_valid(f: &HiggsField) -> Result<()> {
    match field_defect(f) {
        Some(d) => Err(Error::InvalidField(d)),
        None => Ok(()),
    }
}

pub(crate) fn require_integrable(f: &HiggsField) -> Result<()> {
    require_valid(f)?;
    if is_integrable(f) {
        Ok(())
    } else {
        Err(Error::NotIntegrable)
    }
}

/// `Φ − (tr Φ / 2)·Id` on each component.
pub fn trace_free_part(phi1: &PolyMat2, phi2: &PolyMat2) -> (PolyMat2, PolyMat2) {
    let tf = |m: &PolyMat2| {
        let half = (&m.m[0][0] - &m.m[1][1]).scale(&crate::exactalg::ratio(1, 2));
        PolyMat2::trace_free(half, m.m[0][1].clone(), m.m[1][0].clone())
    };
    (tf(phi1), tf(phi2))
}

/// Coefficient of `∂1 ∧ ∂2` in `Ψ ∧ Φ`: `[Ψ1, Φ2] − [Ψ2, Φ1]`.
pub fn wedge(psi: &HiggsField, phi: &HiggsField) -> Result<PolyMat2> {
    if psi.bundle != phi.bundle {
        return Err(Error::BundleMismatch);
    }
    Ok(commutator2(&psi.phi1, &phi.phi2).sub(&commutator2(&psi.phi2, &phi.phi1)))
}

/// `Φ ∧ Φ = 0`, i.e. `A1B2 = B1A2`, `C1A2 = A1C2`, `B1C2 = C1B2`.
pub fn is_integrable(f: &HiggsField) -> bool {
    let (a1, b1, c1) = (&f.phi1.m[0][0], &f.phi1.m[0][1], &f.phi1.m[1][0]);
    let (a2, b2, c2) = (&f.phi2.m[0][0], &f.phi2.m[0][1], &f.phi2.m[1][0]);
    a1 * b2 == b1 * a2 && c1 * a2 == a1 * c2 && b1 * c2 == c1 * b2
}
