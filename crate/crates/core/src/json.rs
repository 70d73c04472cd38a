//! JSON schemas shared by the CLI and the bindings.
//!
//! Rationals are written `{"num": n, "den": d}` (strings when they exceed `i64`) and read from
//! that form, a JSON integer, or a string such as `"3/2"`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::cohomology::LineBundle;
use crate::exactalg::{parse_rat, BiPoly, PolyMat2, Rat};
use crate::extension::{ExtParams, ModuliPoint, Phi1Params, Phi2Params, PointParams, Stratum};
use crate::higgs::{DecomposableBundle, HiggsField};
use crate::spectral::SpectralData;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("schema error: {0}")]
pub struct SchemaError(pub String);

type SResult<T> = std::result::Result<T, SchemaError>;

fn err<T>(msg: impl Into<String>) -> SResult<T> {
    Err(SchemaError(msg.into()))
}

fn int_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(k) => json!(k),
        None => json!(n.to_string()),
    }
}

fn int_from(v: &Value) -> SResult<BigInt> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(k) => Ok(k.into()),
            None => err(format!("not an integer: {n}")),
        },
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| SchemaError(format!("not an integer: {s}"))),
        _ => err(format!("expected integer, got {v}")),
    }
}

fn small_int(v: &Value) -> SResult<i64> {
    v.as_i64()
        .ok_or_else(|| SchemaError(format!("expected integer, got {v}")))
}

pub fn rat_to_json(r: &Rat) -> Value {
    json!({"num": int_value(r.numer()), "den": int_value(r.denom())})
}

fn num_den(num: &Value, den: &Value) -> SResult<Rat> {
    let (n, d) = (int_from(num)?, int_from(den)?);
    if d == BigInt::from(0) {
        return err("zero denominator");
    }
    Ok(Rat::new(n, d))
}

pub fn rat_from_json(v: &Value) -> SResult<Rat> {
    match v {
        Value::Number(_) => Ok(Rat::from_integer(int_from(v)?)),
        Value::String(s) => parse_rat(s).ok_or_else(|| SchemaError(format!("bad rational {s:?}"))),
        Value::Object(o) => {
            let (Some(n), Some(d)) = (o.get("num"), o.get("den")) else {
                return err("rational object needs num and den");
            };
            num_den(n, d)
        }
        _ => err(format!("expected rational, got {v}")),
    }
}

/// Monomials in descending graded-lex order.
pub fn bipoly_to_json(p: &BiPoly) -> Value {
    let monos: Vec<Value> = p
        .sorted_terms()
        .into_iter()
        .map(|((i, j), c)| {
            json!({"i": i, "j": j, "num": int_value(c.numer()), "den": int_value(c.denom())})
        })
        .collect();
    json!({ "monomials": monos })
}

pub fn bipoly_from_json(v: &Value) -> SResult<BiPoly> {
    let Some(monos) = v.get("monomials").and_then(Value::as_array) else {
        return err("polynomial needs a monomials array");
    };
    let mut p = BiPoly::zero();
    for m in monos {
        let exp = |k: &str| -> SResult<u32> {
            m.get(k)
                .and_then(Value::as_u64)
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| SchemaError(format!("monomial needs non-negative {k}")))
        };
        let c = match (m.get("num"), m.get("den")) {
            (Some(n), Some(d)) => num_den(n, d)?,
            (Some(n), None) => rat_from_json(n)?,
            _ => return err("monomial needs num"),
        };
        p.add_term(exp("i")?, exp("j")?, c);
    }
    Ok(p)
}

pub fn polymat_to_json(m: &PolyMat2) -> Value {
    json!({"m": [
        [bipoly_to_json(&m.m[0][0]), bipoly_to_json(&m.m[0][1])],
        [bipoly_to_json(&m.m[1][0]), bipoly_to_json(&m.m[1][1])],
    ]})
}

pub fn polymat_from_json(v: &Value) -> SResult<PolyMat2> {
    let rows = v
        .get("m")
        .and_then(Value::as_array)
        .filter(|r| r.len() == 2)
        .ok_or_else(|| SchemaError("matrix needs m with two rows".into()))?;
    let mut out = [
        [BiPoly::zero(), BiPoly::zero()],
        [BiPoly::zero(), BiPoly::zero()],
    ];
    for (r, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .filter(|x| x.len() == 2)
            .ok_or_else(|| SchemaError("matrix rows need two entries".into()))?;
        for (c, e) in row.iter().enumerate() {
            out[r][c] = bipoly_from_json(e)?;
        }
    }
    let [[a, b], [c, d]] = out;
    Ok(PolyMat2::new(a, b, c, d))
}

fn line_bundle_from(v: &Value) -> SResult<LineBundle> {
    match v.as_array().map(Vec::as_slice) {
        Some([a, b]) => Ok(LineBundle::new(small_int(a)?, small_int(b)?)),
        _ => err("line bundle must be [a, b]"),
    }
}

pub fn bundle_to_json(b: &DecomposableBundle) -> Value {
    json!({"L1": [b.l1.a, b.l1.b], "L2": [b.l2.a, b.l2.b]})
}

pub fn bundle_from_json(v: &Value) -> SResult<DecomposableBundle> {
    let l1 = v
        .get("L1")
        .ok_or_else(|| SchemaError("bundle needs L1".into()))?;
    let l2 = v
        .get("L2")
        .ok_or_else(|| SchemaError("bundle needs L2".into()))?;
    Ok(DecomposableBundle::new(
        line_bundle_from(l1)?,
        line_bundle_from(l2)?,
    ))
}

pub fn field_to_json(f: &HiggsField) -> Value {
    json!({
        "bundle": bundle_to_json(&f.bundle),
        "phi1": polymat_to_json(&f.phi1),
        "phi2": polymat_to_json(&f.phi2),
    })
}

pub fn field_from_json(v: &Value) -> SResult<HiggsField> {
    let get = |k: &str| {
        v.get(k)
            .ok_or_else(|| SchemaError(format!("field needs {k}")))
    };
    Ok(HiggsField::new(
        bundle_from_json(get("bundle")?)?,
        polymat_from_json(get("phi1")?)?,
        polymat_from_json(get("phi2")?)?,
    ))
}

pub fn spectral_to_json(s: &SpectralData) -> Value {
    json!({
        "rho1": bipoly_to_json(&s.rho1),
        "rho12": bipoly_to_json(&s.rho12),
        "rho2": bipoly_to_json(&s.rho2),
    })
}

pub fn spectral_from_json(v: &Value) -> SResult<SpectralData> {
    let get = |k: &str| {
        v.get(k)
            .ok_or_else(|| SchemaError(format!("spectral data needs {k}")))
            .and_then(bipoly_from_json)
    };
    Ok(SpectralData::new(get("rho1")?, get("rho12")?, get("rho2")?))
}

fn named_rats<const N: usize>(v: &Value, names: [&str; N]) -> SResult<[Rat; N]> {
    if !v.is_object() {
        return err("parameters must be an object");
    }
    let mut out: [Rat; N] = std::array::from_fn(|_| Rat::from_integer(0.into()));
    for (slot, name) in out.iter_mut().zip(names) {
        if let Some(x) = v.get(name) {
            *slot = rat_from_json(x)?;
        }
    }
    Ok(out)
}

fn named_json(names: &[&str], vals: &[Rat]) -> Value {
    let mut m = Map::new();
    for (n, x) in names.iter().zip(vals) {
        m.insert((*n).to_string(), rat_to_json(x));
    }
    Value::Object(m)
}

const PHI1_NAMES: [&str; 6] = ["c00", "c01", "c02", "c10", "c11", "c12"];
const PHI2_NAMES: [&str; 5] = ["a00", "a01", "a02", "b00", "b10"];

/// Missing coefficients default to zero.
pub fn phi1_params_from_json(v: &Value) -> SResult<Phi1Params> {
    Ok(Phi1Params::from_array(named_rats(v, PHI1_NAMES)?))
}

pub fn phi1_params_to_json(p: &Phi1Params) -> Value {
    named_json(&PHI1_NAMES, &p.to_array())
}

pub fn phi2_params_from_json(v: &Value) -> SResult<Phi2Params> {
    Ok(Phi2Params::from_array(named_rats(v, PHI2_NAMES)?))
}

pub fn phi2_params_to_json(p: &Phi2Params) -> Value {
    named_json(&PHI2_NAMES, &p.to_array())
}

pub fn ext_to_json(e: &ExtParams) -> Value {
    json!({"u": rat_to_json(&e.u), "v": rat_to_json(&e.v)})
}

pub fn ext_from_json(v: &Value) -> SResult<ExtParams> {
    let [u, w] = named_rats(v, ["u", "v"])?;
    Ok(ExtParams::new(u, w))
}

fn stratum_from(v: &Value) -> SResult<Stratum> {
    match v.as_str() {
        Some("S0") => Ok(Stratum::S0),
        Some("S1") => Ok(Stratum::S1),
        Some("S2") => Ok(Stratum::S2),
        _ => err(format!("unknown stratum {v}")),
    }
}

/// `{"ext": {...}, "stratum": "S1", "params": {"phi1": {...}}}`; `params` may instead hold
/// `"phi2"` or `"trivial": {"p": ..., "w": [w0, w1, w2]}`.
pub fn point_from_json(v: &Value) -> SResult<ModuliPoint> {
    let ext = ext_from_json(
        v.get("ext")
            .ok_or_else(|| SchemaError("point needs ext".into()))?,
    )?;
    let stratum = stratum_from(v.get("stratum").unwrap_or(&Value::Null))?;
    let params = v
        .get("params")
        .ok_or_else(|| SchemaError("point needs params".into()))?;
    let params = if let Some(p) = params.get("phi1") {
        PointParams::Phi1(phi1_params_from_json(p)?)
    } else if let Some(p) = params.get("phi2") {
        PointParams::Phi2(phi2_params_from_json(p)?)
    } else if let Some(t) = params.get("trivial") {
        let p = rat_from_json(
            t.get("p")
                .ok_or_else(|| SchemaError("trivial needs p".into()))?,
        )?;
        let w = match t.get("w").and_then(Value::as_array).map(Vec::as_slice) {
            Some([a, b, c]) => [rat_from_json(a)?, rat_from_json(b)?, rat_from_json(c)?],
            _ => return err("trivial needs w with three entries"),
        };
        PointParams::Trivial { p, w }
    } else {
        return err("params needs phi1, phi2 or trivial");
    };
    Ok(ModuliPoint {
        ext,
        stratum,
        params,
    })
}

pub fn point_to_json(m: &ModuliPoint) -> Value {
    let params = match &m.params {
        PointParams::Phi1(c) => json!({"phi1": phi1_params_to_json(c)}),
        PointParams::Phi2(c) => json!({"phi2": phi2_params_to_json(c)}),
        PointParams::Trivial { p, w } => json!({"trivial": {
            "p": rat_to_json(p),
            "w": w.iter().map(rat_to_json).collect::<Vec<_>>(),
        }}),
    };
    json!({
        "ext": ext_to_json(&m.ext),
        "stratum": serde_json::to_value(m.stratum).expect("unit enum"),
        "params": params,
    })
}
