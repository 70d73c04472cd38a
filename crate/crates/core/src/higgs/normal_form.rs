use num_traits::{One, Zero};

use super::{require_valid, DecomposableBundle, HiggsField};
use crate::exactalg::{conjugate2, BiPoly, PolyMat2, Rat, UniPoly};
use crate::{Axis, Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct NormalFormF0 {
    pub rep: HiggsField,
    /// `Ψ = (1 P; 0 Q)` with `rep.phi1 = Ψ Φ1 Ψ⁻¹`.
    pub psi: PolyMat2,
    /// Zero of `C1`.
    pub p: Rat,
}

fn conj_poly(phi: &PolyMat2, psi: &PolyMat2) -> Result<PolyMat2> {
    conjugate2(phi, psi)?
        .to_poly()
        .ok_or_else(|| Error::NotInNormalFormDomain("conjugate is not polynomial".into()))
}

/// Normal form on `O ⊕ O(−1,0)` with `Φ2 = 0`: diagonal `A1(p)`, subdiagonal `z1 − p`.
pub fn normal_form_f0(f: &HiggsField) -> Result<NormalFormF0> {
    if f.bundle != DecomposableBundle::from_pairs((0, 0), (-1, 0)) {
        return Err(Error::NotInNormalFormDomain(
            "bundle is not O+O(-1,0)".into(),
        ));
    }
    require_valid(f)?;
    if !f.phi2.is_zero() {
        return Err(Error::NotInNormalFormDomain("phi2 is nonzero".into()));
    }
    let (a1, c1) = (&f.phi1.m[0][0], &f.phi1.m[1][0]);
    let alpha = c1.coeff(1, 0);
    if alpha.is_zero() {
        return Err(Error::LeadingCoefficientZero);
    }
    let p = -c1.coeff(0, 0) / &alpha;
    let a_at_p = a1.eval(&p, &Rat::zero());
    let lin = BiPoly::z1() - BiPoly::constant(p.clone());
    let r = (a1 - &BiPoly::constant(a_at_p))
        .div_exact(&lin)
        .expect("z1 - p divides A1 - A1(p)");
    let inv_alpha = alpha.recip();
    let psi = PolyMat2::new(
        BiPoly::one(),
        r.scale(&-inv_alpha.clone()),
        BiPoly::zero(),
        BiPoly::constant(inv_alpha),
    );
    let rep = HiggsField::new(f.bundle, conj_poly(&f.phi1, &psi)?, PolyMat2::zero());
    debug_assert_eq!(rep.phi1.m[1][0], lin);
    Ok(NormalFormF0 { rep, psi, p })
}

/// Normal form `(0 A1² + B1C1; 1 0)` on `O(1,0) ⊕ O(−1,0)` with `Φ2 = 0`, `C1` a nonzero constant.
pub fn normal_form_pm1(f: &HiggsField) -> Result<HiggsField> {
    if f.bundle != DecomposableBundle::from_pairs((1, 0), (-1, 0)) {
        return Err(Error::NotInNormalFormDomain(
            "bundle is not O(1,0)+O(-1,0)".into(),
        ));
    }
    require_valid(f)?;
    if !f.phi2.is_zero() {
        return Err(Error::NotInNormalFormDomain("phi2 is nonzero".into()));
    }
    let c = f.phi1.m[1][0].coeff(0, 0);
    if c.is_zero() {
        return Err(Error::ZeroC1);
    }
    let scale = PolyMat2::diag(BiPoly::one(), BiPoly::constant(c.recip()));
    let scaled = conj_poly(&f.phi1, &scale)?;
    let unip = PolyMat2::new(
        BiPoly::one(),
        -scaled.m[0][0].clone(),
        BiPoly::zero(),
        BiPoly::one(),
    );
    let rep = conj_poly(&scaled, &unip)?;
    Ok(HiggsField::new(f.bundle, rep, PolyMat2::zero()))
}

/// `Q(ρ) = (0 −ρ; 1 0)` on `O(1,0) ⊕ O(−1,0)` (axis 1) or `O(0,1) ⊕ O(0,−1)` (axis 2).
pub fn section_q(rho: &BiPoly, axis: Axis) -> Result<HiggsField> {
    let (bound, bundle) = match axis {
        Axis::One => ((4, 0), DecomposableBundle::from_pairs((1, 0), (-1, 0))),
        Axis::Two => ((0, 4), DecomposableBundle::from_pairs((0, 1), (0, -1))),
    };
    if !rho.fits_box(bound.0, bound.1) {
        return Err(Error::SlotViolation(format!("O({},{})", bound.0, bound.1)));
    }
    let m = PolyMat2::new(BiPoly::zero(), -rho.clone(), BiPoly::one(), BiPoly::zero());
    Ok(match axis {
        Axis::One => HiggsField::new(bundle, m, PolyMat2::zero()),
        Axis::Two => HiggsField::new(bundle, PolyMat2::zero(), m),
    })
}

/// Pullback along `pr_axis` of a Higgs field `(A B; C −A)` on `O ⊕ O(−1)` over P¹.
#[derive(Clone, Debug, PartialEq)]
pub struct Pullback {
    pub field: HiggsField,
    /// `det Φ = −A² − BC`.
    pub rho: UniPoly,
    pub axis: Axis,
}

impl Pullback {
    /// Whether `(p, η)` lies on the spectral curve `η² + ρ(p) = 0`.
    pub fn on_spectral_curve(&self, p: &Rat, eta: &Rat) -> bool {
        (eta * eta + self.rho.eval(p)).is_zero()
    }
}

pub fn pullback_from_line(a: &UniPoly, b: &UniPoly, c: &UniPoly, axis: Axis) -> Result<Pullback> {
    for (name, p, d) in [("A", a, 2), ("B", b, 3), ("C", c, 1)] {
        if p.degree().is_some_and(|k| k > d) {
            return Err(Error::SlotViolation(format!("{name} has degree > {d}")));
        }
    }
    if c.is_zero() {
        return Err(Error::ZeroC);
    }
    let lift = |u: &UniPoly| BiPoly::univariate(axis, u.coeffs());
    let m = PolyMat2::trace_free(lift(a), lift(b), lift(c));
    let field = match axis {
        Axis::One => HiggsField::new(
            DecomposableBundle::from_pairs((0, 0), (-1, 0)),
            m,
            PolyMat2::zero(),
        ),
        Axis::Two => HiggsField::new(
            DecomposableBundle::from_pairs((0, 0), (0, -1)),
            PolyMat2::zero(),
            m,
        ),
    };
    let rho = a.mul(a).add(&b.mul(c)).scale(&-Rat::one());
    Ok(Pullback { field, rho, axis })
}
