#![allow(dead_code)]

use cohiggs::exactalg::{linalg, rat, BiPoly, ConstMat2, PolyMat2, Rat};
use cohiggs::higgs::{higgs_shape, DecomposableBundle, HiggsField};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rat(r: &mut impl Rng, h: i64) -> Rat {
    let n = r.random_range(-h..=h);
    let d = r.random_range(1..=3);
    Rat::new(n.into(), d.into())
}

pub fn nonzero_rat(r: &mut impl Rng, h: i64) -> Rat {
    loop {
        let x = small_rat(r, h);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Random section in the box `0 ≤ i ≤ a, 0 ≤ j ≤ b`, each monomial present with probability `dens`.
pub fn poly_in_box(r: &mut impl Rng, a: i64, b: i64, dens: f64) -> BiPoly {
    let mut p = BiPoly::zero();
    if a < 0 || b < 0 {
        return p;
    }
    for i in 0..=a as u32 {
        for j in 0..=b as u32 {
            if r.random_bool(dens) {
                p.add_term(i, j, small_rat(r, 5));
            }
        }
    }
    p
}

pub fn oo() -> DecomposableBundle {
    DecomposableBundle::from_pairs((0, 0), (0, 0))
}

pub fn oo_m1() -> DecomposableBundle {
    DecomposableBundle::from_pairs((0, 0), (-1, 0))
}

pub fn pm1() -> DecomposableBundle {
    DecomposableBundle::from_pairs((1, 0), (-1, 0))
}

pub fn supported_bundles() -> [DecomposableBundle; 3] {
    [oo(), oo_m1(), pm1()]
}

pub fn random_component(r: &mut impl Rng, bundle: DecomposableBundle, k: u8) -> PolyMat2 {
    let s = higgs_shape(bundle);
    let (sa, sb, sc) = if k == 1 {
        (s.a1, s.b1, s.c1)
    } else {
        (s.a2, s.b2, s.c2)
    };
    PolyMat2::trace_free(
        poly_in_box(r, sa.a, sa.b, 0.5),
        poly_in_box(r, sb.a, sb.b, 0.5),
        poly_in_box(r, sc.a, sc.b, 0.5),
    )
}

/// Independent entries in every slot; integrable only by accident.
pub fn random_field(r: &mut impl Rng, bundle: DecomposableBundle) -> HiggsField {
    HiggsField::new(
        bundle,
        random_component(r, bundle, 1),
        random_component(r, bundle, 2),
    )
}

fn univariate(r: &mut impl Rng, axis_one: bool, deg: u32) -> BiPoly {
    let mut p = BiPoly::zero();
    for k in 0..=deg {
        if r.random_bool(0.7) {
            let (i, j) = if axis_one { (k, 0) } else { (0, k) };
            p.add_term(i, j, small_rat(r, 5));
        }
    }
    p
}

/// Integrable by construction: one component vanishes, or both are multiples of one
/// constant matrix fitting every slot.
pub fn random_integrable(r: &mut impl Rng, bundle: DecomposableBundle) -> HiggsField {
    match r.random_range(0..3) {
        0 => HiggsField::new(bundle, random_component(r, bundle, 1), PolyMat2::zero()),
        1 => HiggsField::new(bundle, PolyMat2::zero(), random_component(r, bundle, 2)),
        _ => {
            let s = higgs_shape(bundle);
            let allowed = |l: cohiggs::cohomology::LineBundle| l.a >= 0 && l.b >= 0;
            let a = small_rat(r, 5);
            let b = if allowed(s.b1) && allowed(s.b2) {
                small_rat(r, 5)
            } else {
                Rat::zero()
            };
            let c = if allowed(s.c1) && allowed(s.c2) {
                small_rat(r, 5)
            } else {
                Rat::zero()
            };
            let m = ConstMat2::trace_free(a, b, c).map(|x| BiPoly::constant(x.clone()));
            let f = univariate(r, true, 2);
            let g = univariate(r, false, 2);
            HiggsField::new(bundle, m.scale(&f), m.scale(&g))
        }
    }
}

pub fn const_mat(a: i64, b: i64, c: i64) -> ConstMat2 {
    ConstMat2::trace_free(rat(a), rat(b), rat(c))
}

/// Dimension of `{Φ2 in its slots : [Φ1, Φ2] = 0}`, by linear algebra on the coefficients.
pub fn commutant_dimension(bundle: DecomposableBundle, phi1: &PolyMat2) -> usize {
    let s = higgs_shape(bundle);
    let mut basis = Vec::new();
    for (slot, which) in [(s.a2, 0), (s.b2, 1), (s.c2, 2)] {
        for (i, j) in cohiggs::cohomology::monomial_basis(slot.a, slot.b) {
            let mono = BiPoly::monomial(i, j, Rat::one());
            let z = BiPoly::zero();
            basis.push(match which {
                0 => PolyMat2::trace_free(mono, z.clone(), z),
                1 => PolyMat2::trace_free(z.clone(), mono, z),
                _ => PolyMat2::trace_free(z.clone(), z, mono),
            });
        }
    }
    let images: Vec<PolyMat2> = basis.iter().map(|x| phi1.commutator(x)).collect();
    linear_kernel_dim(&images)
}

/// Kernel dimension of the linear map sending the k-th unknown to `images[k]`.
pub fn linear_kernel_dim(images: &[PolyMat2]) -> usize {
    let mut keys = std::collections::BTreeSet::new();
    for m in images {
        for (r, c) in [(0, 0), (0, 1), (1, 0)] {
            for (&k, _) in m.m[r][c].terms() {
                keys.insert((r, c, k));
            }
        }
    }
    let rows: Vec<Vec<Rat>> = keys
        .iter()
        .map(|&(r, c, (i, j))| images.iter().map(|m| m.m[r][c].coeff(i, j)).collect())
        .collect();
    images.len() - linalg::rank(rows)
}

/// `a + b√s` over ℚ with `s` square-free; `s = 1` folds into the rational part.
#[derive(Clone, Debug)]
pub struct Quad {
    pub a: Rat,
    pub b: Rat,
    pub s: BigInt,
}

impl Quad {
    pub fn new(a: Rat, b: Rat, s: &BigInt) -> Self {
        if s.is_one() {
            Quad {
                a: a + b,
                b: Rat::zero(),
                s: s.clone(),
            }
        } else {
            Quad { a, b, s: s.clone() }
        }
    }
    pub fn rat(a: Rat, s: &BigInt) -> Self {
        Quad::new(a, Rat::zero(), s)
    }
    pub fn add(&self, o: &Quad) -> Quad {
        Quad::new(&self.a + &o.a, &self.b + &o.b, &self.s)
    }
    pub fn mul(&self, o: &Quad) -> Quad {
        let s = Rat::from_integer(self.s.clone());
        Quad::new(
            &self.a * &o.a + &self.b * &o.b * s,
            &self.a * &o.b + &self.b * &o.a,
            &self.s,
        )
    }
    pub fn scale(&self, k: &Rat) -> Quad {
        Quad::new(&self.a * k, &self.b * k, &self.s)
    }
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

/// Square-free part of a nonzero integer by trial division, sign kept; returns `(k, s)`
/// with `n = k²·s`.
fn squarefree(n: &BigInt) -> (BigInt, BigInt) {
    let mut m = n.abs();
    let mut k = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        while (&m % (&p * &p)).is_zero() {
            m /= &p * &p;
            k *= &p;
        }
        p += 1;
    }
    (k, if n.is_negative() { -m } else { m })
}

/// Projective roots of `c x² − 2a xy − b y²` for the first nonzero matrix, substituted into
/// every matrix's quadratic over ℚ(√D).
pub fn brute_force_common_eigenvector(mats: &[ConstMat2]) -> bool {
    let nz: Vec<&ConstMat2> = mats.iter().filter(|m| !m.is_zero()).collect();
    let Some(first) = nz.first() else { return true };
    let (a, b, c) = (&first.m[0][0], &first.m[0][1], &first.m[1][0]);
    // D = a² + bc, written over a common denominator as k²·s / den²
    let disc = a * a + b * c;
    let den = disc.denom().clone();
    let (k, s) = if disc.is_zero() {
        (BigInt::zero(), BigInt::one())
    } else {
        squarefree(&(disc.numer() * &den))
    };
    let sqrt_d = Quad::new(Rat::zero(), Rat::new(k, den), &s);
    let mut roots: Vec<(Quad, Quad)> = Vec::new();
    let one = Quad::rat(Rat::one(), &s);
    let zero = Quad::rat(Rat::zero(), &s);
    if c.is_zero() {
        roots.push((one.clone(), zero.clone()));
        if !a.is_zero() {
            roots.push((
                Quad::rat(-b / (a * Rat::from_integer(2.into())), &s),
                one.clone(),
            ));
        }
    } else {
        for sign in [1, -1] {
            let t = Quad::rat(a.clone(), &s)
                .add(&sqrt_d.scale(&Rat::from_integer(sign.into())))
                .scale(&c.recip());
            roots.push((t, one.clone()));
        }
    }
    roots.iter().any(|(x, y)| {
        nz.iter().all(|m| {
            let (a, b, c) = (&m.m[0][0], &m.m[0][1], &m.m[1][0]);
            let xx = x.mul(x).scale(c);
            let xy = x.mul(y).scale(&(a * Rat::from_integer((-2).into())));
            let yy = y.mul(y).scale(&-b);
            xx.add(&xy).add(&yy).is_zero()
        })
    })
}

/// Families of trace-free integer matrices with entries in `[−h, h]`, biased toward sharing
/// an eigenvector.
pub fn random_family(r: &mut impl Rng, h: i64) -> Vec<ConstMat2> {
    let n = r.random_range(2..=6);
    let mode = r.random_range(0..4);
    let mut out = Vec::with_capacity(n);
    match mode {
        // independent
        0 => {
            for _ in 0..n {
                out.push(const_mat(
                    r.random_range(-h..=h),
                    r.random_range(-h..=h),
                    r.random_range(-h..=h),
                ));
            }
        }
        // shared rational eigenvector (p, q)
        1 => {
            let (p, q) = loop {
                let p: i64 = r.random_range(-3..=3);
                let q: i64 = r.random_range(-2..=2);
                if p != 0 || q != 0 {
                    break (p, q);
                }
            };
            while out.len() < n {
                let a = r.random_range(-h..=h);
                let c = r.random_range(-h..=h);
                // c p² − 2a p q − b q² = 0
                let b = if q == 0 {
                    if c != 0 {
                        continue;
                    }
                    r.random_range(-h..=h)
                } else {
                    let num = c * p * p - 2 * a * p * q;
                    if num % (q * q) != 0 {
                        continue;
                    }
                    num / (q * q)
                };
                if b.abs() <= h {
                    out.push(const_mat(a, b, c));
                }
            }
        }
        // multiples of one matrix, sometimes with irrational eigenvectors
        2 => {
            let base = (
                r.random_range(-3..=3),
                r.random_range(-3..=3),
                r.random_range(-3..=3),
            );
            for _ in 0..n {
                let k = r.random_range(-3..=3);
                out.push(const_mat(k * base.0, k * base.1, k * base.2));
            }
        }
        // upper triangular with an occasional perturbation
        _ => {
            for _ in 0..n {
                let c = if r.random_bool(0.2) {
                    r.random_range(-h..=h)
                } else {
                    0
                };
                out.push(const_mat(r.random_range(-h..=h), r.random_range(-h..=h), c));
            }
        }
    }
    out
}
