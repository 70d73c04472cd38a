//! Extensions `0 → O(0,−1) → E → O(−1,1) → 0` (the family `c₁ = −F`, `c₂ = 1`).
//!
//! Charts: `V1 = (z1, z2)`, `V2 = (z1, 1/z2)`, `V3 = (1/z1, z2)`, `V4 = (1/z1, 1/z2)`.
//! Frames glue as `e¹ = g1k·eᵏ`, so a section of `End₀E ⊗ L` satisfies
//! `Φ¹ = t1k · g1k Φᵏ g1k⁻¹` where `t1k` is the transition function of `L`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::linalg::rank;
use crate::exactalg::{ratio, BiPoly, Laurent, PolyMat2, Rat, RatFn, RatMat2};
use crate::higgs::{is_integrable, require_valid, DecomposableBundle, HiggsField};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtParams {
    pub u: Rat,
    pub v: Rat,
}

impl ExtParams {
    pub fn new(u: Rat, v: Rat) -> Self {
        Self { u, v }
    }

    pub fn is_trivial(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// Extension class `u·z1 + v`.
    pub fn class_poly(&self) -> BiPoly {
        BiPoly::from_terms([((1, 0), self.u.clone()), ((0, 0), self.v.clone())])
    }

    /// Representative of `[u:v]` whose first nonzero coordinate is 1, and the factor `λ`
    /// with `(u, v) = λ·normalized`.
    pub fn normalized(&self) -> Result<(ExtParams, Rat)> {
        let lead = if !self.u.is_zero() {
            self.u.clone()
        } else if !self.v.is_zero() {
            self.v.clone()
        } else {
            return Err(Error::TrivialExtension);
        };
        let inv = lead.recip();
        Ok((ExtParams::new(&self.u * &inv, &self.v * &inv), lead))
    }

    fn require_nontrivial(&self) -> Result<()> {
        if self.is_trivial() {
            Err(Error::TrivialExtension)
        } else {
            Ok(())
        }
    }
}

/// Bundle `O(0,−1) ⊕ O(−1,1)`, the split extension.
pub const SPLIT_BUNDLE: DecomposableBundle = DecomposableBundle::from_pairs((0, -1), (-1, 1));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Twist {
    /// `O(2,0)`, carrying `Φ1`.
    T20,
    /// `O(0,2)`, carrying `Φ2`.
    T02,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chart {
    V2,
    V3,
    V4,
}

impl Chart {
    /// Whether `z1^i z2^j` is regular on the chart.
    fn admits(self, (i, j): (i64, i64)) -> bool {
        match self {
            Chart::V2 => i >= 0 && j <= 0,
            Chart::V3 => i <= 0 && j >= 0,
            Chart::V4 => i <= 0 && j <= 0,
        }
    }

    /// Exponent of the twist's transition function `t1k = z1^a z2^b` for `O(a,b)`.
    fn twist_exponent(self, twist: Twist) -> (i64, i64) {
        let (a, b) = match twist {
            Twist::T20 => (2, 0),
            Twist::T02 => (0, 2),
        };
        match self {
            Chart::V2 => (0, b),
            Chart::V3 => (a, 0),
            Chart::V4 => (a, b),
        }
    }
}

fn lmono(i: i64, j: i64) -> RatFn {
    RatFn::laurent_monomial(i, j, Rat::one())
}

/// `(g12, g13)`: `g12 = (z2⁻¹ uz1+v; 0 z2)`, `g13 = diag(1, z1⁻¹)`.
pub fn transition_matrices(e: &ExtParams) -> (RatMat2, RatMat2) {
    let g12 = RatMat2::new(
        lmono(0, -1),
        RatFn::from_poly(e.class_poly()),
        RatFn::zero(),
        lmono(0, 1),
    );
    let g13 = RatMat2::diag(RatFn::one(), lmono(-1, 0));
    (g12, g13)
}

/// `g14 = g12·g24` with `g24 = diag(1, z1⁻¹)`.
pub fn transition_v4(e: &ExtParams) -> RatMat2 {
    let (g12, _) = transition_matrices(e);
    g12.mul(&RatMat2::diag(RatFn::one(), lmono(-1, 0)))
}

fn g1k(e: &ExtParams, chart: Chart) -> RatMat2 {
    match chart {
        Chart::V2 => transition_matrices(e).0,
        Chart::V3 => transition_matrices(e).1,
        Chart::V4 => transition_v4(e),
    }
}

pub type Mat3 = [[RatFn; 3]; 3];

fn basis_matrix(k: usize) -> RatMat2 {
    let (o, z) = (RatFn::one(), RatFn::zero());
    match k {
        0 => RatMat2::new(o.clone(), z.clone(), z, -o),
        1 => RatMat2::new(z.clone(), o, z.clone(), z),
        _ => RatMat2::new(z.clone(), z.clone(), o, z),
    }
}

/// Matrix of `X ↦ hXh⁻¹` on trace-free `X = (A B; C −A)` in the basis `(A, B, C)`.
pub fn end0_matrix(h: &RatMat2) -> Result<Mat3> {
    let hinv = h.inverse()?;
    let cols: Vec<RatMat2> = (0..3).map(|k| h.mul(&basis_matrix(k)).mul(&hinv)).collect();
    Ok(std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            let y = &cols[c];
            match r {
                0 => y.m[0][0].clone(),
                1 => y.m[0][1].clone(),
                _ => y.m[1][0].clone(),
            }
        })
    }))
}

/// Transition matrix of `End₀E ⊗ twist` from chart `k` to chart 1: `t1k · Ad(g1k)`.
pub fn end0_transition(e: &ExtParams, chart: Chart, twist: Twist) -> Mat3 {
    let (a, b) = chart.twist_exponent(twist);
    let t = lmono(a, b);
    end0_matrix(&g1k(e, chart))
        .expect("transition matrices are unimodular")
        .map(|row| row.map(|x| &x * &t))
}

fn laurent_of(x: &RatFn) -> Laurent {
    x.as_laurent().expect("transition data is Laurent")
}

/// `Φᵏ = t1k⁻¹ · Ad(g1k⁻¹) Φ¹` as Laurent coefficient maps.
fn pullback_laurent(e: &ExtParams, chart: Chart, twist: Twist) -> [[Laurent; 3]; 3] {
    let (a, b) = chart.twist_exponent(twist);
    let tinv = lmono(-a, -b);
    let ginv = g1k(e, chart).inverse().expect("unimodular");
    let m = end0_matrix(&ginv).expect("unimodular");
    m.map(|row| row.map(|x| laurent_of(&(&x * &tinv))))
}

fn entries(phi: &PolyMat2) -> [&BiPoly; 3] {
    [&phi.m[0][0], &phi.m[0][1], &phi.m[1][0]]
}

fn chart_regular(e: &ExtParams, phi: &PolyMat2, twist: Twist, chart: Chart) -> bool {
    let m = pullback_laurent(e, chart, twist);
    let ents = entries(phi);
    for row in &m {
        let mut acc: Laurent = BTreeMap::new();
        for (t, p) in row.iter().zip(ents) {
            for (&(ti, tj), tc) in t {
                for (&(i, j), c) in p.terms() {
                    let key = (ti + i as i64, tj + j as i64);
                    *acc.entry(key).or_insert_with(Rat::zero) += tc * c;
                }
            }
        }
        if acc.iter().any(|(&k, c)| !c.is_zero() && !chart.admits(k)) {
            return false;
        }
    }
    true
}

/// Whether the trace-free chart-`V1` matrix `phi` extends to a global section of
/// `End₀E ⊗ O(twist)`, by regularity in `V2` and `V3`.
pub fn glue_check(e: &ExtParams, phi: &PolyMat2, twist: Twist) -> bool {
    (&phi.m[0][0] + &phi.m[1][1]).is_zero()
        && [Chart::V2, Chart::V3]
            .into_iter()
            .all(|c| chart_regular(e, phi, twist, c))
}

/// Regularity in the chart `V4`; implied by [`glue_check`].
pub fn glue_check_v4(e: &ExtParams, phi: &PolyMat2, twist: Twist) -> bool {
    chart_regular(e, phi, twist, Chart::V4)
}

/// Side of the coefficient box used by the linear solve.
const ANSATZ_BOX: u32 = 5;

/// `h⁰(End₀E ⊗ O(twist))` from the generic-coefficient ansatz and the regularity constraints.
pub fn section_space_dimension(e: &ExtParams, twist: Twist) -> usize {
    let n = ANSATZ_BOX;
    let monos: Vec<(u32, u32)> = (0..=n).flat_map(|i| (0..=n).map(move |j| (i, j))).collect();
    let ncols = 3 * monos.len();
    let mut rows: BTreeMap<(u8, usize, i64, i64), BTreeMap<usize, Rat>> = BTreeMap::new();
    for (tag, chart) in [(2u8, Chart::V2), (3u8, Chart::V3)] {
        let m = pullback_laurent(e, chart, twist);
        for (r, row) in m.iter().enumerate() {
            for (col, t) in row.iter().enumerate() {
                for (mi, &(i, j)) in monos.iter().enumerate() {
                    let unknown = col * monos.len() + mi;
                    for (&(ti, tj), tc) in t {
                        let key = (ti + i as i64, tj + j as i64);
                        if chart.admits(key) {
                            continue;
                        }
                        *rows
                            .entry((tag, r, key.0, key.1))
                            .or_default()
                            .entry(unknown)
                            .or_insert_with(Rat::zero) += tc;
                    }
                }
            }
        }
    }
    let dense: Vec<Vec<Rat>> = rows
        .into_values()
        .map(|sparse| {
            let mut row = vec![Rat::zero(); ncols];
            for (k, c) in sparse {
                row[k] = c;
            }
            row
        })
        .collect();
    ncols - rank(dense)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct End0TDims {
    pub dim20: usize,
    pub dim02: usize,
    pub total: usize,
}

/// `(h⁰(End₀E(2,0)), h⁰(End₀E(0,2)), h⁰(End₀E ⊗ T))` for a non-trivial extension.
pub fn end0t_dimension(e: &ExtParams) -> Result<End0TDims> {
    e.require_nontrivial()?;
    let dim20 = section_space_dimension(e, Twist::T20);
    let dim02 = section_space_dimension(e, Twist::T02);
    Ok(End0TDims {
        dim20,
        dim02,
        total: dim20 + dim02,
    })
}

/// Free coefficients of `C1 = c00 + c01 z2 + c02 z2² + c10 z1 + c11 z1z2 + c12 z1z2²`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Phi1Params {
    pub c00: Rat,
    pub c01: Rat,
    pub c02: Rat,
    pub c10: Rat,
    pub c11: Rat,
    pub c12: Rat,
}

impl Phi1Params {
    pub fn to_array(&self) -> [Rat; 6] {
        [
            self.c00.clone(),
            self.c01.clone(),
            self.c02.clone(),
            self.c10.clone(),
            self.c11.clone(),
            self.c12.clone(),
        ]
    }

    pub fn from_array([c00, c01, c02, c10, c11, c12]: [Rat; 6]) -> Self {
        Self {
            c00,
            c01,
            c02,
            c10,
            c11,
            c12,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.to_array().iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::from_array(self.to_array().map(|c| c * k))
    }
}

/// Free coefficients of `A2 = a00 + a01 z2 + a02 z2²` and of `B2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Phi2Params {
    pub a00: Rat,
    pub a01: Rat,
    pub a02: Rat,
    pub b00: Rat,
    pub b10: Rat,
}

impl Phi2Params {
    pub fn to_array(&self) -> [Rat; 5] {
        [
            self.a00.clone(),
            self.a01.clone(),
            self.a02.clone(),
            self.b00.clone(),
            self.b10.clone(),
        ]
    }

    pub fn from_array([a00, a01, a02, b00, b10]: [Rat; 5]) -> Self {
        Self {
            a00,
            a01,
            a02,
            b00,
            b10,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.to_array().iter().all(Zero::is_zero)
    }
}

/// `Φ1` in chart `V1`. With `p = uz1 + v` and `C1 = C10 + C11 z2 + C12 z2²`
/// (each `C1k` linear in `z1`): `A1 = ½·p·C11 + p·C12·z2`, `B1 = −p²·C12`.
pub fn build_phi1(e: &ExtParams, c: &Phi1Params) -> PolyMat2 {
    let p = e.class_poly();
    let lin = |k0: &Rat, k1: &Rat| BiPoly::from_terms([((0, 0), k0.clone()), ((1, 0), k1.clone())]);
    let c10 = lin(&c.c00, &c.c10);
    let c11 = lin(&c.c01, &c.c11);
    let c12 = lin(&c.c02, &c.c12);
    let z2 = BiPoly::z2();
    let c1 = &c10 + &(&c11 * &z2) + (&c12 * &z2.pow(2));
    let a1 = (&p * &c11).scale(&ratio(1, 2)) + (&(&p * &c12) * &z2);
    let b1 = -(&(&p * &p) * &c12);
    PolyMat2::trace_free(a1, b1, c1)
}

/// `Φ2 = (A2 B2; 0 −A2)` with `B2 = b00 + b10 z1 − 2(uz1+v)·a02·z2`.
pub fn build_phi2(e: &ExtParams, c: &Phi2Params) -> PolyMat2 {
    let a2 = BiPoly::from_terms([
        ((0, 0), c.a00.clone()),
        ((0, 1), c.a01.clone()),
        ((0, 2), c.a02.clone()),
    ]);
    let b2 = BiPoly::from_terms([((0, 0), c.b00.clone()), ((1, 0), c.b10.clone())])
        - (&e.class_poly() * &BiPoly::z2()).scale(&(&c.a02 * Rat::from_integer(2.into())));
    PolyMat2::trace_free(a2, b2, BiPoly::zero())
}

fn coefficient_vector(phi: &PolyMat2) -> Vec<Rat> {
    let n = ANSATZ_BOX;
    entries(phi)
        .iter()
        .flat_map(|p| (0..=n).flat_map(move |i| (0..=n).map(move |j| p.coeff(i, j))))
        .collect()
}

/// Dimensions spanned by the closed-form constructors on unit parameter vectors,
/// after checking each basis element glues.
pub fn closed_form_dimension(e: &ExtParams) -> Result<(usize, usize)> {
    e.require_nontrivial()?;
    let unit = |k: usize, n: usize| -> Vec<Rat> {
        (0..n)
            .map(|i| if i == k { Rat::one() } else { Rat::zero() })
            .collect()
    };
    let mut rows1 = Vec::new();
    for k in 0..6 {
        let arr: [Rat; 6] = unit(k, 6).try_into().expect("six entries");
        let phi = build_phi1(e, &Phi1Params::from_array(arr));
        if !glue_check(e, &phi, Twist::T20) {
            return Ok((0, 0));
        }
        rows1.push(coefficient_vector(&phi));
    }
    let mut rows2 = Vec::new();
    for k in 0..5 {
        let arr: [Rat; 5] = unit(k, 5).try_into().expect("five entries");
        let phi = build_phi2(e, &Phi2Params::from_array(arr));
        if !glue_check(e, &phi, Twist::T02) {
            return Ok((0, 0));
        }
        rows2.push(coefficient_vector(&phi));
    }
    Ok((rank(rows1), rank(rows2)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dichotomy {
    Phi1Only,
    Phi2Only,
    Zero,
    NotIntegrable,
}

/// Assembles `Φ = Φ1 + Φ2` and reports which component survives integrability.
pub fn dichotomy_check(e: &ExtParams, p1: &Phi1Params, p2: &Phi2Params) -> Result<Dichotomy> {
    e.require_nontrivial()?;
    let (phi1, phi2) = (build_phi1(e, p1), build_phi2(e, p2));
    if !phi1.commutator(&phi2).is_zero() {
        return Ok(Dichotomy::NotIntegrable);
    }
    Ok(match (phi1.is_zero(), phi2.is_zero()) {
        (true, true) => Dichotomy::Zero,
        (true, false) => Dichotomy::Phi2Only,
        (false, _) => {
            debug_assert!(phi2.is_zero());
            Dichotomy::Phi1Only
        }
    })
}

/// `[u1:v1] = [u2:v2]`.
pub fn weak_iso(e1: &ExtParams, e2: &ExtParams) -> Result<bool> {
    e1.require_nontrivial()?;
    e2.require_nontrivial()?;
    Ok(&e1.u * &e2.v == &e2.u * &e1.v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Stratum {
    S0,
    S1,
    S2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointParams {
    /// Split bundle with `Φ = (A2 z1−p; 0 −A2)`, `A2 = w0 + w1 z2 + w2 z2²`.
    Trivial {
        p: Rat,
        w: [Rat; 3],
    },
    Phi1(Phi1Params),
    Phi2(Phi2Params),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuliPoint {
    pub ext: ExtParams,
    pub stratum: Stratum,
    pub params: PointParams,
}

impl ModuliPoint {
    /// The co-Higgs field of the point, in chart `V1`.
    pub fn field(&self) -> (PolyMat2, PolyMat2) {
        match &self.params {
            PointParams::Trivial { p, w } => {
                let f = trivial_extension_field(p, w);
                (f.phi1, f.phi2)
            }
            PointParams::Phi1(c) => (build_phi1(&self.ext, c), PolyMat2::zero()),
            PointParams::Phi2(c) => (PolyMat2::zero(), build_phi2(&self.ext, c)),
        }
    }
}

/// Field `Φ1 = 0`, `Φ2 = (A2 z1−p; 0 −A2)` on `O(0,−1) ⊕ O(−1,1)`.
pub fn trivial_extension_field(p: &Rat, w: &[Rat; 3]) -> HiggsField {
    let a2 = BiPoly::from_terms([
        ((0, 0), w[0].clone()),
        ((0, 1), w[1].clone()),
        ((0, 2), w[2].clone()),
    ]);
    let b2 = BiPoly::z1() - BiPoly::constant(p.clone());
    HiggsField::from_entries(
        SPLIT_BUNDLE,
        [BiPoly::zero(), BiPoly::zero(), BiPoly::zero()],
        [a2, b2, BiPoly::zero()],
    )
}

/// Stratum of a point and its representative with `(u, v)` normalized under the ℂ* action.
///
/// The isomorphism `E_{λ(u,v)} ≅ E_{(u,v)}` is `diag(λ, 1)`; it fixes `A`, multiplies `B`
/// by `λ` and divides `C` by `λ`, so `Φ1` parameters scale by `λ` and `B2` by `1/λ`.
pub fn stratum_classify(m: &ModuliPoint) -> Result<ModuliPoint> {
    let expected = match (&m.params, m.ext.is_trivial()) {
        (PointParams::Trivial { .. }, true) => Stratum::S0,
        (PointParams::Phi1(_), false) => Stratum::S1,
        (PointParams::Phi2(_), false) => Stratum::S2,
        (PointParams::Trivial { .. }, false) => {
            return Err(Error::InconsistentPoint(
                "trivial-extension data on a non-split bundle".into(),
            ))
        }
        (_, true) => {
            return Err(Error::InconsistentPoint(
                "Higgs parameters on the split bundle".into(),
            ))
        }
    };
    if expected != m.stratum {
        return Err(Error::InconsistentPoint(format!(
            "declared {:?} but data belongs to {:?}",
            m.stratum, expected
        )));
    }
    if expected == Stratum::S0 {
        return Ok(m.clone());
    }
    let (ext, lambda) = m.ext.normalized()?;
    let params = match &m.params {
        PointParams::Phi1(c) => PointParams::Phi1(c.scale(&lambda)),
        PointParams::Phi2(c) => {
            let inv = lambda.recip();
            let mut c = c.clone();
            c.b00 = &c.b00 * &inv;
            c.b10 = &c.b10 * &inv;
            PointParams::Phi2(c)
        }
        PointParams::Trivial { .. } => unreachable!("handled above"),
    };
    Ok(ModuliPoint {
        ext,
        stratum: expected,
        params,
    })
}

/// Free parameters of each stratum before adding the projective extension class.
pub fn stratum_parameter_counts() -> [(Stratum, usize); 3] {
    [(Stratum::S0, 1 + 3), (Stratum::S1, 6), (Stratum::S2, 5)]
}

/// `max(dim X_{u,v}) + 1` for the projective class `[u:v]`.
pub fn moduli_dimension() -> usize {
    stratum_parameter_counts()[1..]
        .iter()
        .map(|&(_, n)| n)
        .max()
        .unwrap_or(0)
        + 1
}

/// Conjugates by `diag(1, b1)` so that `B2 = b0 + b1 z1` becomes `z1 − p`.
pub fn trivial_extension_normal_form(f: &HiggsField) -> Result<HiggsField> {
    if f.bundle != SPLIT_BUNDLE {
        return Err(Error::NotInNormalFormDomain(
            "bundle is not O(0,-1)+O(-1,1)".into(),
        ));
    }
    require_valid(f)?;
    if !f.phi1.is_zero() || !f.phi2.m[1][0].is_zero() {
        return Err(Error::NotInNormalFormDomain(
            "expected phi1 = 0 and upper-triangular phi2".into(),
        ));
    }
    let b1 = f.phi2.m[0][1].coeff(1, 0);
    if b1.is_zero() {
        return Err(Error::LeadingCoefficientZero);
    }
    let psi = PolyMat2::diag(BiPoly::one(), BiPoly::constant(b1));
    let phi2 = crate::exactalg::conjugate2(&f.phi2, &psi)?
        .to_poly()
        .expect("constant conjugation keeps polynomials");
    let out = HiggsField::new(f.bundle, PolyMat2::zero(), phi2);
    debug_assert!(is_integrable(&out));
    Ok(out)
}
