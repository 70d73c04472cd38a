use std::fs;

use cohiggs::chern::{
    bundle_moduli_nonempty, ext_length, no_nontrivial_higgs_region, nonempty_verdict, reduce_class,
    ChernData, NumericalInvariants,
};
use cohiggs::cohomology::h_dims;
use cohiggs::exactalg::{Rat, UniPoly};
use cohiggs::extension::{
    build_phi1, build_phi2, dichotomy_check, end0t_dimension, glue_check, stratum_classify,
    trivial_extension_normal_form, weak_iso, ExtParams, Phi1Params, Phi2Params, Twist,
    SPLIT_BUNDLE,
};
use cohiggs::higgs::{
    field_defect, graded_object, is_integrable, normal_form_f0, normal_form_pm1,
    pullback_from_line, s_equiv_rep, section_q, stability_classify, DecomposableBundle, HiggsField,
};
use cohiggs::json::*;
use cohiggs::spectral::{
    fibre_decomposability, fibre_of_data, hitchin_map, rho_consistent, spectral_residual, Fibre,
    SpectralData, SpectralPoint, Surd,
};
use cohiggs::Error;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::{parse_list, ChernArgs, Command, ExtCmd, HiggsCmd, ModuliCmd, SpectralCmd};

fn read_json(path: &str) -> CliResult<Value> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| CliError::Malformed(format!("{path}: {e}")))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

fn chern(c: ChernArgs) -> ChernData {
    ChernData::new(c.alpha, c.beta, c.gamma)
}

fn one(v: Value) -> CliResult<Vec<Value>> {
    Ok(vec![v])
}

pub fn run(cmd: Command) -> CliResult<Vec<Value>> {
    match cmd {
        Command::Cohomology { a, b } => one(to_value(&h_dims(a, b))),
        Command::Moduli(m) => moduli(m),
        Command::Reduce(c) => one(to_value(&reduce_class(chern(c)))),
        Command::Higgs(h) => higgs(h),
        Command::Ext(e) => ext(e),
        Command::Hitchin { field } => {
            let f = field_from_json(&read_json(&field)?)?;
            let s = hitchin_map(&f)?;
            let mut out = spectral_to_json(&s);
            out["consistent"] = json!(rho_consistent(&s));
            one(out)
        }
        Command::Spectral(s) => spectral(s),
    }
}

fn grid_entry(v: &Value) -> CliResult<ChernData> {
    let int = |x: Option<&Value>| {
        x.and_then(Value::as_i64)
            .ok_or_else(|| CliError::Malformed(format!("bad grid entry {v}")))
    };
    match v {
        Value::Array(a) if a.len() == 3 => Ok(ChernData::new(
            int(a.first())?,
            int(a.get(1))?,
            int(a.get(2))?,
        )),
        Value::Object(_) => Ok(ChernData::new(
            int(v.get("alpha"))?,
            int(v.get("beta"))?,
            int(v.get("gamma"))?,
        )),
        _ => Err(CliError::Malformed(format!("bad grid entry {v}"))),
    }
}

fn verdict_json(c: ChernData) -> Value {
    let mut out = to_value(&nonempty_verdict(c));
    out["input"] = to_value(&c);
    out
}

fn moduli(m: ModuliCmd) -> CliResult<Vec<Value>> {
    match m {
        ModuliCmd::Nonempty {
            chern: Some(c),
            batch: None,
        } => one(to_value(&nonempty_verdict(chern(c)))),
        ModuliCmd::Nonempty {
            batch: Some(path), ..
        } => {
            let grid = read_json(&path)?;
            let entries = grid
                .as_array()
                .ok_or_else(|| CliError::Malformed("batch file must hold a JSON array".into()))?;
            let tuples = entries
                .iter()
                .map(grid_entry)
                .collect::<CliResult<Vec<_>>>()?;
            log::info!("batch of {} tuples", tuples.len());
            // par_iter keeps input order on collect
            Ok(tuples.into_par_iter().map(verdict_json).collect())
        }
        ModuliCmd::Nonempty { .. } => Err(CliError::Malformed(
            "need --alpha/--beta/--gamma or --batch".into(),
        )),
        ModuliCmd::BundleNonempty { chern: c, d, r } => {
            let (c, inv) = (chern(c), NumericalInvariants { d, r });
            one(json!({"nonempty": bundle_moduli_nonempty(c, inv), "length": ext_length(c, inv)}))
        }
        ModuliCmd::NoHiggsRegion { d, r, c2 } => one(
            json!({"no_nontrivial_higgs": no_nontrivial_higgs_region(NumericalInvariants { d, r }, c2)}),
        ),
    }
}

fn read_field(path: &str) -> CliResult<HiggsField> {
    Ok(field_from_json(&read_json(path)?)?)
}

fn higgs(h: HiggsCmd) -> CliResult<Vec<Value>> {
    match h {
        HiggsCmd::Check { field } => {
            let f = read_field(&field)?;
            let defect = field_defect(&f);
            let integrable = defect.is_none() && is_integrable(&f);
            let stability = if integrable {
                Some(to_value(&stability_classify(&f)?))
            } else {
                None
            };
            one(json!({
                "valid": defect.is_none(),
                "defect": defect,
                "integrable": integrable,
                "stability": stability,
            }))
        }
        HiggsCmd::NormalForm { field } => {
            let f = read_field(&field)?;
            if f.bundle == DecomposableBundle::from_pairs((0, 0), (-1, 0)) {
                let nf = normal_form_f0(&f)?;
                one(json!({
                    "kind": "F0",
                    "field": field_to_json(&nf.rep),
                    "psi": polymat_to_json(&nf.psi),
                    "p": rat_to_json(&nf.p),
                }))
            } else if f.bundle == DecomposableBundle::from_pairs((1, 0), (-1, 0)) {
                one(json!({"kind": "PlusMinusOne", "field": field_to_json(&normal_form_pm1(&f)?)}))
            } else if f.bundle == SPLIT_BUNDLE {
                one(
                    json!({"kind": "TrivialExtension", "field": field_to_json(&trivial_extension_normal_form(&f)?)}),
                )
            } else {
                Err(Error::NotInNormalFormDomain("no normal form for this bundle".into()).into())
            }
        }
        HiggsCmd::Graded { field } => {
            let f = read_field(&field)?;
            let g = graded_object(&f)?;
            let (a1, a2) = s_equiv_rep(&f)?;
            one(json!({
                "graded": field_to_json(&g),
                "s_equiv_rep": [bipoly_to_json(&a1), bipoly_to_json(&a2)],
            }))
        }
        HiggsCmd::SectionQ { rho, axis } => {
            let rho = bipoly_from_json(&read_json(&rho)?)?;
            one(field_to_json(&section_q(&rho, axis)?))
        }
        HiggsCmd::Pullback { a, b, c, axis } => {
            let poly = |s: &str| parse_list(s).map(UniPoly::new);
            let pb = pullback_from_line(&poly(&a)?, &poly(&b)?, &poly(&c)?, axis)?;
            one(json!({
                "field": field_to_json(&pb.field),
                "rho": pb.rho.coeffs().iter().map(rat_to_json).collect::<Vec<_>>(),
                "axis": axis.index(),
            }))
        }
    }
}

fn ext(e: ExtCmd) -> CliResult<Vec<Value>> {
    match e {
        ExtCmd::Dims(x) => one(to_value(&end0t_dimension(&ExtParams::new(x.u, x.v))?)),
        ExtCmd::Build { ext, phi1, phi2 } => {
            let e = ExtParams::new(ext.u, ext.v);
            let p1 = match phi1 {
                Some(p) => phi1_params_from_json(&read_json(&p)?)?,
                None => Phi1Params::default(),
            };
            let p2 = match phi2 {
                Some(p) => phi2_params_from_json(&read_json(&p)?)?,
                None => Phi2Params::default(),
            };
            let (m1, m2) = (build_phi1(&e, &p1), build_phi2(&e, &p2));
            let mut out = json!({
                "ext": ext_to_json(&e),
                "phi1": polymat_to_json(&m1),
                "phi2": polymat_to_json(&m2),
                "glue": {
                    "phi1": glue_check(&e, &m1, Twist::T20),
                    "phi2": glue_check(&e, &m2, Twist::T02),
                },
            });
            if !e.is_trivial() {
                out["dichotomy"] = to_value(&dichotomy_check(&e, &p1, &p2)?);
            }
            one(out)
        }
        ExtCmd::Classify { point } => {
            let m = point_from_json(&read_json(&point)?)?;
            let n = stratum_classify(&m)?;
            one(json!({"stratum": to_value(&n.stratum), "representative": point_to_json(&n)}))
        }
        ExtCmd::WeakIso { u1, v1, u2, v2 } => one(
            json!({"weakly_isomorphic": weak_iso(&ExtParams::new(u1, v1), &ExtParams::new(u2, v2))?}),
        ),
    }
}

fn coords<const N: usize>(s: &str) -> CliResult<[Rat; N]> {
    parse_list(s)?.try_into().map_err(|_| {
        CliError::Malformed(format!("expected {N} comma-separated rationals, got {s:?}"))
    })
}

fn read_rho(path: &str) -> CliResult<SpectralData> {
    Ok(spectral_from_json(&read_json(path)?)?)
}

fn surd_json(s: &Surd) -> Value {
    json!({"coeff": rat_to_json(&s.coeff), "radicand": s.radicand.to_string()})
}

fn fibre_json(f: &Fibre) -> Value {
    json!({
        "eta1_sq": rat_to_json(&f.eta1_sq),
        "eta2_sq": rat_to_json(&f.eta2_sq),
        "eta1_eta2": rat_to_json(&f.eta1_eta2),
        "eta1": surd_json(&f.eta1),
        "eta2": surd_json(&f.eta2),
        "ramified": f.ramified,
        "points": f.points.iter().map(|(a, b)| json!([rat_to_json(a), rat_to_json(b)])).collect::<Vec<_>>(),
    })
}

fn spectral(s: SpectralCmd) -> CliResult<Vec<Value>> {
    match s {
        SpectralCmd::Residual { rho, point } => {
            let data = read_rho(&rho)?;
            let [z1, z2, eta1, eta2] = coords::<4>(&point)?;
            let r = spectral_residual(&data, &SpectralPoint { z1, z2, eta1, eta2 });
            let zero = r.0 == Rat::default() && r.1 == Rat::default() && r.2 == Rat::default();
            one(json!({
                "residual": [rat_to_json(&r.0), rat_to_json(&r.1), rat_to_json(&r.2)],
                "on_surface": zero,
            }))
        }
        SpectralCmd::Classify { rho } => {
            one(json!({"class": to_value(&fibre_decomposability(&read_rho(&rho)?)?)}))
        }
        SpectralCmd::Fibre { rho, field, at } => {
            let data = match (rho, field) {
                (Some(r), _) => {
                    let d = read_rho(&r)?;
                    if !rho_consistent(&d) {
                        return Err(Error::InconsistentRho.into());
                    }
                    d
                }
                (None, Some(f)) => hitchin_map(&read_field(&f)?)?,
                (None, None) => return Err(CliError::Malformed("need --rho or --field".into())),
            };
            let [z1, z2] = coords::<2>(&at)?;
            one(fibre_json(&fibre_of_data(&data, &z1, &z2)))
        }
    }
}
