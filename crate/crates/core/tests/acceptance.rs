//! Acceptance run: one line per criterion, nonzero exit if any fails.

mod common;

use std::time::{Duration, Instant};

use cohiggs::chern::{nonempty_verdict, ChernData, ReducedTag};
use cohiggs::cohomology::{h_dims, LineBundle};
use cohiggs::exactalg::{det2, ratio, BiPoly, ConstMat2, PolyMat2, Rat};
use cohiggs::extension::{
    build_phi1, build_phi2, closed_form_dimension, dichotomy_check, end0t_dimension, glue_check,
    trivial_extension_field, trivial_extension_normal_form, Dichotomy, ExtParams, Phi1Params,
    Phi2Params, Twist, SPLIT_BUNDLE,
};
use cohiggs::higgs::{
    common_eigenvector_exists, is_integrable, normal_form_f0, normal_form_pm1, section_q,
    validate_field, HiggsField,
};
use cohiggs::spectral::{fibre_over_point, hitchin_map, spectral_residual, SpectralPoint};
use cohiggs::Axis;
use common::*;
use num_traits::{One, Zero};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn entries(m: &PolyMat2) -> (&BiPoly, &BiPoly, &BiPoly) {
    (&m.m[0][0], &m.m[0][1], &m.m[1][0])
}

fn two() -> BiPoly {
    BiPoly::constant(Rat::from_integer(2.into()))
}

// [X, Y] for trace-free X, Y written out entrywise
fn commutator_by_hand(x: &PolyMat2, y: &PolyMat2) -> PolyMat2 {
    let (a1, b1, c1) = entries(x);
    let (a2, b2, c2) = entries(y);
    let d = &(b1 * c2) - &(c1 * b2);
    let b = &two() * &(&(a1 * b2) - &(b1 * a2));
    let c = &two() * &(&(c1 * a2) - &(a1 * c2));
    PolyMat2::trace_free(d, b, c)
}

fn neg_det_by_hand(x: &PolyMat2) -> BiPoly {
    let (a, b, c) = entries(x);
    -(&(a * a) + &(b * c))
}

fn criterion_1() -> Outcome {
    let mut r = rng(1);
    let mut exts = vec![
        ExtParams::new(Rat::one(), Rat::zero()),
        ExtParams::new(Rat::zero(), Rat::one()),
        ExtParams::new(ratio(-3, 2), ratio(5, 7)),
    ];
    while exts.len() < 12 {
        let e = ExtParams::new(small_rat(&mut r, 6), small_rat(&mut r, 6));
        if !e.is_trivial() {
            exts.push(e);
        }
    }
    for e in &exts {
        let d = end0t_dimension(e).map_err(|x| x.to_string())?;
        check((d.dim20, d.dim02, d.total) == (6, 5, 11), || {
            format!("linear solve {e:?}: {d:?}")
        })?;
        let cf = closed_form_dimension(e).map_err(|x| x.to_string())?;
        check(cf == (6, 5), || format!("closed form {e:?}: {cf:?}"))?;
        for _ in 0..5 {
            let p1 = Phi1Params::from_array(std::array::from_fn(|_| small_rat(&mut r, 4)));
            let p2 = Phi2Params::from_array(std::array::from_fn(|_| small_rat(&mut r, 4)));
            check(glue_check(e, &build_phi1(e, &p1), Twist::T20), || {
                format!("phi1 glue {e:?}")
            })?;
            check(glue_check(e, &build_phi2(e, &p2), Twist::T02), || {
                format!("phi2 glue {e:?}")
            })?;
        }
    }
    Ok(format!(
        "{} extension classes give (6, 5, 11) on both paths",
        exts.len()
    ))
}

/// Twisting to a reduced class by explicit search, threshold on the result.
fn reduction_oracle(a: i64, b: i64, g: i64) -> (ReducedTag, i64, bool) {
    for x in -20..=20i64 {
        for y in -20..=20i64 {
            // O(x,y) has class y·C₀ + x·F
            let (a2, b2) = (a + 2 * y, b + 2 * x);
            if !(-1..=0).contains(&a2) || !(-1..=0).contains(&b2) {
                continue;
            }
            let gp = g + a * x + b * y + 2 * x * y;
            let tag = match (a2, b2) {
                (0, 0) => ReducedTag::Zero,
                (0, -1) => ReducedTag::MinusF,
                (-1, 0) => ReducedTag::MinusC0,
                _ => ReducedTag::MinusC0MinusF,
            };
            let ok = if tag == ReducedTag::MinusC0MinusF {
                gp >= 1
            } else {
                gp >= 0
            };
            return (tag, gp, ok);
        }
    }
    unreachable!("search box covers the grid")
}

fn criterion_2() -> Outcome {
    let mut flagged = 0;
    let mut n = 0;
    for a in -5..=5i64 {
        for b in -5..=5i64 {
            for g in -5..=10i64 {
                n += 1;
                let c = ChernData::new(a, b, g);
                let v = nonempty_verdict(c);
                let (tag, gp, ok) = reduction_oracle(a, b, g);
                check(
                    v.nonempty == ok && v.reduced.tag == tag && v.reduced.gamma_prime == gp,
                    || format!("{c:?}: {v:?} vs oracle ({tag:?}, {gp}, {ok})"),
                )?;
                for x in -3..=3i64 {
                    for y in -3..=3i64 {
                        let t = ChernData::new(a + 2 * y, b + 2 * x, g + a * x + b * y + 2 * x * y);
                        check(nonempty_verdict(t).nonempty == ok, || {
                            format!("{c:?} twisted by ({x},{y})")
                        })?;
                    }
                }
                let odd_odd = a.rem_euclid(2) == 1 && b.rem_euclid(2) == 1;
                if !odd_odd {
                    check(ok == (2 * g >= a * b), || {
                        format!("{c:?}: closed form 2γ ≥ αβ")
                    })?;
                }
                let disagree = odd_odd && (2 * g >= a * b - 2) != (gp >= 1);
                check(v.theorem48_case2_discrepancy == disagree, || {
                    format!("{c:?}: flag")
                })?;
                flagged += disagree as usize;
            }
        }
    }
    check(
        nonempty_verdict(ChernData::new(1, 1, 0)).theorem48_case2_discrepancy,
        || "flag silent on (1, 1, 0)".into(),
    )?;
    Ok(format!(
        "{n} tuples, {flagged} flagged odd/odd disagreements"
    ))
}

fn criterion_3() -> Outcome {
    let mut r = rng(3);
    let mut integrable = 0;
    for bundle in supported_bundles() {
        for k in 0..150 {
            let f = if k % 2 == 0 {
                random_field(&mut r, bundle)
            } else {
                random_integrable(&mut r, bundle)
            };
            check(validate_field(&f), || {
                format!("generator produced invalid field {f:?}")
            })?;
            let comm_zero = commutator_by_hand(&f.phi1, &f.phi2).is_zero();
            check(is_integrable(&f) == comm_zero, || {
                format!("integrability mismatch {f:?}")
            })?;
            match hitchin_map(&f) {
                Ok(s) => {
                    check(comm_zero, || {
                        "hitchin_map accepted a non-integrable field".into()
                    })?;
                    integrable += 1;
                    check(
                        s.rho1 == neg_det_by_hand(&f.phi1) && s.rho2 == neg_det_by_hand(&f.phi2),
                        || format!("ρ1/ρ2 mismatch {f:?}"),
                    )?;
                    let four = BiPoly::constant(Rat::from_integer(4.into()));
                    check(&s.rho12 * &s.rho12 == &four * &(&s.rho1 * &s.rho2), || {
                        format!("ρ12² ≠ 4ρ1ρ2 {f:?}")
                    })?;
                }
                Err(_) => check(!comm_zero, || {
                    "hitchin_map rejected an integrable field".into()
                })?,
            }
        }
    }
    Ok(format!(
        "450 fields over 3 bundles, {integrable} integrable"
    ))
}

fn criterion_4() -> Outcome {
    let mut r = rng(4);
    let bundle = oo_m1();
    let mut rigid = 0;
    while rigid < 120 {
        let f = random_integrable(&mut r, bundle);
        let g = random_field(&mut r, bundle);
        if !f.phi1.m[1][0].is_zero() {
            check(f.phi2.is_zero(), || {
                format!("integrable with C1 ≠ 0 and Φ2 ≠ 0: {f:?}")
            })?;
        }
        if g.phi1.m[1][0].is_zero() {
            continue;
        }
        // no nonzero Φ2 in its slots commutes with Φ1
        check(commutant_dimension(bundle, &g.phi1) == 0, || {
            format!("Φ1 with nonzero commutant {:?}", g.phi1)
        })?;
        rigid += 1;
    }
    let mut counts = [0usize; 4];
    for k in 0..150 {
        let e = loop {
            let e = ExtParams::new(small_rat(&mut r, 5), small_rat(&mut r, 5));
            if !e.is_trivial() {
                break e;
            }
        };
        let sparse = |r: &mut rand_chacha::ChaCha8Rng, on: bool| {
            if on && r.random_bool(0.5) {
                small_rat(r, 4)
            } else {
                Rat::zero()
            }
        };
        let (on1, on2) = (k % 3 != 1, k % 3 != 2);
        let p1 = Phi1Params::from_array(std::array::from_fn(|_| sparse(&mut r, on1)));
        let p2 = Phi2Params::from_array(std::array::from_fn(|_| sparse(&mut r, on2)));
        let (phi1, phi2) = (build_phi1(&e, &p1), build_phi2(&e, &p2));
        let d = dichotomy_check(&e, &p1, &p2).map_err(|x| x.to_string())?;
        let integrable = commutator_by_hand(&phi1, &phi2).is_zero();
        check(!(integrable && !phi1.is_zero() && !phi2.is_zero()), || {
            format!("both components survive {e:?}")
        })?;
        let expected = match (integrable, phi1.is_zero(), phi2.is_zero()) {
            (false, _, _) => Dichotomy::NotIntegrable,
            (true, true, true) => Dichotomy::Zero,
            (true, true, false) => Dichotomy::Phi2Only,
            (true, false, _) => Dichotomy::Phi1Only,
        };
        check(d == expected, || {
            format!("dichotomy {d:?}, expected {expected:?}")
        })?;
        counts[d as usize] += 1;
        if !phi1.is_zero() {
            // linear solve over the full Φ2 family
            let mut images = vec![];
            for j in 0..5 {
                let mut unit: [Rat; 5] = std::array::from_fn(|_| Rat::zero());
                unit[j] = Rat::one();
                images.push(phi1.commutator(&build_phi2(&e, &Phi2Params::from_array(unit))));
            }
            check(linear_kernel_dim(&images) == 0, || {
                format!("Φ2 commuting with Φ1 {e:?} {p1:?}")
            })?;
        }
    }
    Ok(format!(
        "{rigid} rigid draws; dichotomy counts {counts:?} over 150 draws"
    ))
}

fn criterion_5() -> Outcome {
    let mut r = rng(5);
    let z1 = BiPoly::z1();
    let mut f0 = 0;
    while f0 < 60 {
        let mut g = random_field(&mut r, oo_m1());
        g.phi2 = PolyMat2::zero();
        if g.phi1.m[1][0].coeff(1, 0).is_zero() {
            continue;
        }
        let nf = normal_form_f0(&g).map_err(|x| x.to_string())?;
        check(det2(&nf.rep.phi1) == det2(&g.phi1), || {
            format!("F0 det {g:?}")
        })?;
        check(
            nf.rep.phi1.m[1][0] == &z1 - &BiPoly::constant(nf.p.clone()),
            || "F0 subdiagonal".into(),
        )?;
        check(nf.rep.phi1.mul(&nf.psi) == nf.psi.mul(&g.phi1), || {
            "F0 conjugator".into()
        })?;
        let again = normal_form_f0(&nf.rep).map_err(|x| x.to_string())?;
        check(again.rep == nf.rep, || "F0 not idempotent".into())?;
        f0 += 1;
    }
    let mut pm = 0;
    while pm < 60 {
        let mut g = random_field(&mut r, pm1());
        g.phi2 = PolyMat2::zero();
        if g.phi1.m[1][0].is_zero() {
            continue;
        }
        let nf = normal_form_pm1(&g).map_err(|x| x.to_string())?;
        check(det2(&nf.phi1) == det2(&g.phi1), || format!("pm1 det {g:?}"))?;
        check(
            nf.phi1.m[0][0].is_zero() && nf.phi1.m[1][0].is_one(),
            || "pm1 shape".into(),
        )?;
        check(
            normal_form_pm1(&nf).map_err(|x| x.to_string())? == nf,
            || "pm1 not idempotent".into(),
        )?;
        pm += 1;
    }
    for _ in 0..60 {
        let p = small_rat(&mut r, 5);
        let w = std::array::from_fn(|_| small_rat(&mut r, 5));
        let scale = nonzero_rat(&mut r, 5);
        let mut g: HiggsField = trivial_extension_field(&p, &w);
        g.phi2.m[0][1] = g.phi2.m[0][1].scale(&scale);
        let nf = trivial_extension_normal_form(&g).map_err(|x| x.to_string())?;
        check(
            nf.bundle == SPLIT_BUNDLE && det2(&nf.phi2) == det2(&g.phi2),
            || "split det".into(),
        )?;
        check(nf == trivial_extension_field(&p, &w), || {
            format!("split normal form {g:?}")
        })?;
        check(
            trivial_extension_normal_form(&nf).map_err(|x| x.to_string())? == nf,
            || "split idempotent".into(),
        )?;
    }
    for k in 0..60 {
        let axis = if k % 2 == 0 { Axis::One } else { Axis::Two };
        let coeffs: Vec<Rat> = (0..5).map(|_| small_rat(&mut r, 9)).collect();
        let rho = BiPoly::univariate(axis, &coeffs);
        let q = section_q(&rho, axis).map_err(|x| x.to_string())?;
        check(validate_field(&q) && is_integrable(&q), || {
            "Q(ρ) not a co-Higgs field".into()
        })?;
        let m = if axis == Axis::One { &q.phi1 } else { &q.phi2 };
        check(det2(m) == rho, || format!("det Q(ρ) ≠ ρ for {rho:?}"))?;
    }
    Ok("F0 60, (1,0)+(-1,0) 60, split 60, section Q 60 quartics".into())
}

fn criterion_6() -> Outcome {
    let mut r = rng(6);
    let (mut yes, mut no) = (0, 0);
    for k in 0..400 {
        let mut fam = random_family(&mut r, 10);
        if k % 10 == 0 {
            fam.push(ConstMat2::zero());
        }
        if k % 37 == 0 {
            fam = vec![ConstMat2::zero(); 3];
        }
        let fast = common_eigenvector_exists(&fam);
        let slow = brute_force_common_eigenvector(&fam);
        check(fast == slow, || {
            format!("disagreement on {fam:?}: gcd {fast}, brute force {slow}")
        })?;
        if fast {
            yes += 1
        } else {
            no += 1
        }
    }
    Ok(format!(
        "400 families, {yes} with and {no} without a common eigenvector"
    ))
}

fn line_h(n: i64) -> (i64, i64) {
    ((n + 1).max(0), (-n - 1).max(0))
}

fn criterion_7() -> Outcome {
    for a in -6..=6i64 {
        for b in -6..=6i64 {
            let h = h_dims(a, b);
            let (h0, h1, h2) = (h.h0 as i64, h.h1 as i64, h.h2 as i64);
            let ((p0, p1), (q0, q1)) = (line_h(a), line_h(b));
            check(
                (h0, h1, h2) == (p0 * q0, p0 * q1 + p1 * q0, p1 * q1),
                || format!("Künneth ({a},{b})"),
            )?;
            check((h0 == 0) == (a < 0 || b < 0), || {
                format!("H⁰ vanishing ({a},{b})")
            })?;
            check(
                (h1 == 0) == ((a < 0 && b < 0) || (a >= -1 && b >= -1)),
                || format!("H¹ vanishing ({a},{b})"),
            )?;
            check((h2 == 0) == (a >= -1 || b >= -1), || {
                format!("H² vanishing ({a},{b})")
            })?;
            let d = h_dims(-2 - a, -2 - b);
            check((h.h0, h.h1, h.h2) == (d.h2, d.h1, d.h0), || {
                format!("Serre duality ({a},{b})")
            })?;
            check(h0 - h1 + h2 == (a + 1) * (b + 1), || format!("χ ({a},{b})"))?;
            check(LineBundle::new(a, b).h_dims() == h, || {
                "LineBundle::h_dims".into()
            })?;
        }
    }
    Ok("169 line bundles".into())
}

fn pairing_at(f: &HiggsField, z1: &Rat, z2: &Rat) -> Result<bool, String> {
    let fib = fibre_over_point(f, z1, z2).map_err(|x| x.to_string())?;
    let s = hitchin_map(f).map_err(|x| x.to_string())?;
    check(fib.points.len() == 2, || {
        format!("{} points over ({z1}, {z2})", fib.points.len())
    })?;
    let pt = |e1: &Rat, e2: &Rat| SpectralPoint {
        z1: z1.clone(),
        z2: z2.clone(),
        eta1: e1.clone(),
        eta2: e2.clone(),
    };
    for (e1, e2) in &fib.points {
        let res = spectral_residual(&s, &pt(e1, e2));
        check(
            res.0.is_zero() && res.1.is_zero() && res.2.is_zero(),
            || format!("residual {res:?}"),
        )?;
    }
    let rho12 = s.rho12.eval(z1, z2);
    if rho12.is_zero() {
        return Ok(false);
    }
    for (e1, e2) in &fib.points {
        let res = spectral_residual(&s, &pt(e1, &-e2));
        check(!res.2.is_zero(), || {
            format!("cross pairing satisfies all equations at ({z1}, {z2})")
        })?;
    }
    Ok(true)
}

fn criterion_8() -> Outcome {
    let diag = HiggsField::new(
        oo(),
        PolyMat2::diag(BiPoly::z1(), -BiPoly::z1()),
        PolyMat2::diag(BiPoly::z2(), -BiPoly::z2()),
    );
    let mut cross = 0;
    for (x, y) in [(1, 1), (2, -3), (-1, 5), (3, 0)] {
        cross += pairing_at(
            &diag,
            &Rat::from_integer(x.into()),
            &Rat::from_integer(y.into()),
        )? as usize;
    }
    let mut r = rng(8);
    let mut fields = 0;
    while fields < 30 {
        // simultaneously diagonal over ℚ, so every fibre discriminant is a square
        let pmat = ConstMat2::new(
            small_rat(&mut r, 3),
            small_rat(&mut r, 3),
            small_rat(&mut r, 3),
            small_rat(&mut r, 3),
        );
        if pmat.det().is_zero() {
            continue;
        }
        let p = pmat.map(|x| BiPoly::constant(x.clone()));
        let pinv = pmat
            .adjugate()
            .scale(&pmat.det().recip())
            .map(|x| BiPoly::constant(x.clone()));
        let f1 = poly_in_box(&mut r, 2, 0, 0.7);
        let f2 = poly_in_box(&mut r, 0, 2, 0.7);
        let conj = |f: BiPoly| p.mul(&PolyMat2::diag(f.clone(), -f)).mul(&pinv);
        let f = HiggsField::new(oo(), conj(f1), conj(f2));
        check(is_integrable(&f), || {
            "constructed field not integrable".into()
        })?;
        let mut tried = 0;
        while tried < 3 {
            let (z1, z2) = (small_rat(&mut r, 4), small_rat(&mut r, 4));
            let s = hitchin_map(&f).map_err(|x| x.to_string())?;
            if s.rho1.eval(&z1, &z2).is_zero() && s.rho2.eval(&z1, &z2).is_zero() {
                continue;
            }
            cross += pairing_at(&f, &z1, &z2)? as usize;
            tried += 1;
        }
        fields += 1;
    }
    Ok(format!(
        "diagonal example + {fields} random fields, {cross} base points with cross-pairing checked"
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 dimension counts", criterion_1, Duration::from_secs(5)),
        ("2 existence decision", criterion_2, Duration::from_secs(5)),
        (
            "3 integrability and Hitchin identities",
            criterion_3,
            Duration::from_secs(10),
        ),
        ("4 shape rigidity and dichotomy", criterion_4, Duration::MAX),
        ("5 normal forms", criterion_5, Duration::MAX),
        ("6 common eigenvector oracle", criterion_6, Duration::MAX),
        ("7 cohomology table", criterion_7, Duration::MAX),
        ("8 spectral pairing", criterion_8, Duration::MAX),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let t = Instant::now();
        let out = run();
        let dt = t.elapsed();
        let out = match out {
            Ok(s) if dt > budget => Err(format!("{s}; over time budget {budget:?}")),
            o => o,
        };
        match out {
            Ok(s) => println!("PASS  criterion {name}: {s} ({dt:.2?})"),
            Err(s) => {
                failed += 1;
                println!("FAIL  criterion {name}: {s} ({dt:.2?})");
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
