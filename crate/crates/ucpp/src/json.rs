//! JSON forms of the core types.
//!
//! Polynomials are arrays of `{"exps": {var: doubled exponent}, "num", "den"}`
//! in the crate's graded term order; numbers are decimal strings so nothing
//! is lost on round trips.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Map, Value};
use thiserror::Error;

use ucpp_core::exactalg::{Monomial, Rat, Series, Var};
use ucpp_core::fock::{FockState, FockVector, SectorState};
use ucpp_core::genfun::IdentityReport;
use ucpp_core::phasemodel::{OccupationVector, PhaseVector};
use ucpp_core::{MPoly, Partition, PlanePartition, UcPlanePartition};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("malformed JSON: {0}")]
pub struct JsonError(pub String);

type Result<T> = std::result::Result<T, JsonError>;

fn bad<T>(msg: impl Into<String>) -> Result<T> {
    Err(JsonError(msg.into()))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| JsonError(format!("missing field {:?}", key)))
}

fn as_array(v: &Value) -> Result<&Vec<Value>> {
    v.as_array().ok_or_else(|| JsonError("expected an array".into()))
}

fn as_u32(v: &Value) -> Result<u32> {
    v.as_u64().and_then(|n| u32::try_from(n).ok()).ok_or_else(|| JsonError("expected a small non-negative integer".into()))
}

fn as_i32(v: &Value) -> Result<i32> {
    v.as_i64().and_then(|n| i32::try_from(n).ok()).ok_or_else(|| JsonError("expected a small integer".into()))
}

fn big(v: &Value) -> Result<BigInt> {
    let s = v.as_str().ok_or_else(|| JsonError("expected a decimal string".into()))?;
    BigInt::from_str(s).map_err(|_| JsonError(format!("not a decimal integer: {:?}", s)))
}

pub fn rat_to_json(r: &Rat) -> Value {
    json!({"num": r.numer().to_string(), "den": r.denom().to_string()})
}

pub fn rat_from_json(v: &Value) -> Result<Rat> {
    let num = big(field(v, "num")?)?;
    let den = big(field(v, "den")?)?;
    if den.is_zero() {
        return bad("zero denominator");
    }
    Ok(Rat::new(num, den))
}

pub fn monomial_to_json(m: &Monomial) -> Value {
    let exps: Map<String, Value> = m.exps().iter().map(|(v, e)| (v.to_string(), json!(e))).collect();
    Value::Object(exps)
}

pub fn monomial_from_json(v: &Value) -> Result<Monomial> {
    let obj = v.as_object().ok_or_else(|| JsonError("exps must be an object".into()))?;
    let mut pairs = Vec::with_capacity(obj.len());
    for (name, e) in obj {
        let var = Var::parse(name).ok_or_else(|| JsonError(format!("bad variable name {:?}", name)))?;
        pairs.push((var, as_i32(e)?));
    }
    Ok(Monomial::from_doubled(pairs))
}

pub fn mpoly_to_json(p: &MPoly) -> Value {
    let terms = p
        .terms()
        .map(|(m, c)| {
            let mut t = rat_to_json(c);
            t["exps"] = monomial_to_json(m);
            t
        })
        .collect();
    Value::Array(terms)
}

pub fn mpoly_from_json(v: &Value) -> Result<MPoly> {
    let mut out = MPoly::zero();
    for t in as_array(v)? {
        out.add_term(monomial_from_json(field(t, "exps")?)?, rat_from_json(t)?);
    }
    Ok(out)
}

pub fn series_to_json(s: &Series) -> Value {
    let caps: Map<String, Value> = s.caps().iter().map(|(v, c)| (v.to_string(), json!(c))).collect();
    json!({"bound": s.bound(), "caps": caps, "terms": mpoly_to_json(s.poly())})
}

pub fn series_from_json(v: &Value) -> Result<Series> {
    let bound = as_u32(field(v, "bound")?)?;
    let mut caps = Vec::new();
    if let Some(obj) = v.get("caps").and_then(Value::as_object) {
        for (name, c) in obj {
            let var = Var::parse(name).ok_or_else(|| JsonError(format!("bad variable name {:?}", name)))?;
            caps.push((var, as_u32(c)?));
        }
    }
    let poly = mpoly_from_json(field(v, "terms")?)?;
    Series::with_caps(poly, bound, caps).map_err(|e| JsonError(e.to_string()))
}

pub fn partition_to_json(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn partition_from_json(v: &Value) -> Result<Partition> {
    let parts = as_array(v)?.iter().map(as_u32).collect::<Result<Vec<_>>>()?;
    Partition::new(parts).map_err(|e| JsonError(e.to_string()))
}

pub fn plane_partition_to_json(p: &PlanePartition) -> Value {
    json!(p.rows())
}

pub fn plane_partition_from_json(v: &Value) -> Result<PlanePartition> {
    let rows = as_array(v)?
        .iter()
        .map(|r| as_array(r)?.iter().map(as_u32).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    PlanePartition::new(rows).map_err(|e| JsonError(e.to_string()))
}

pub fn uc_to_json(p: &UcPlanePartition) -> Value {
    json!({"first": plane_partition_to_json(&p.first), "second": plane_partition_to_json(&p.second)})
}

pub fn uc_from_json(v: &Value) -> Result<UcPlanePartition> {
    Ok(UcPlanePartition::new(
        plane_partition_from_json(field(v, "first")?)?,
        plane_partition_from_json(field(v, "second")?)?,
    ))
}

fn sector_to_json(s: &SectorState) -> Value {
    json!({"charge": s.charge, "partition": partition_to_json(&s.partition)})
}

fn sector_from_json(v: &Value) -> Result<SectorState> {
    Ok(SectorState::new(as_i32(field(v, "charge")?)?, partition_from_json(field(v, "partition")?)?))
}

pub fn fock_state_to_json(s: &FockState) -> Value {
    json!({"psi": sector_to_json(&s.psi), "phi": sector_to_json(&s.phi)})
}

pub fn fock_state_from_json(v: &Value) -> Result<FockState> {
    Ok(FockState { psi: sector_from_json(field(v, "psi")?)?, phi: sector_from_json(field(v, "phi")?)? })
}

/// `{"bound": doubled degree or null, "terms": [{"state", "coeff"}]}`.
pub fn fock_vector_to_json(f: &FockVector) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(s, c)| json!({"state": fock_state_to_json(s), "coeff": mpoly_to_json(c)}))
        .collect();
    json!({"bound": f.bound(), "terms": terms})
}

pub fn fock_vector_from_json(v: &Value) -> Result<FockVector> {
    let bound = match field(v, "bound")? {
        Value::Null => None,
        b => Some(as_i32(b)?),
    };
    let mut out = FockVector::zero(bound);
    for t in as_array(field(v, "terms")?)? {
        out.add_term(fock_state_from_json(field(t, "state")?)?, mpoly_from_json(field(t, "coeff")?)?);
    }
    Ok(out)
}

pub fn phase_vector_to_json(p: &PhaseVector) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(n, c)| json!({"n": n.occupations(), "coeff": mpoly_to_json(c)}))
        .collect();
    json!({"sites": p.sites(), "terms": terms})
}

pub fn phase_vector_from_json(v: &Value) -> Result<PhaseVector> {
    let sites = field(v, "sites")?.as_u64().ok_or_else(|| JsonError("sites must be an integer".into()))? as usize;
    let mut out = PhaseVector::zero(sites);
    for t in as_array(field(v, "terms")?)? {
        let n = as_array(field(t, "n")?)?.iter().map(as_u32).collect::<Result<Vec<_>>>()?;
        let n = OccupationVector::new(n).map_err(|e| JsonError(e.to_string()))?;
        out.add_term(n, mpoly_from_json(field(t, "coeff")?)?).map_err(|e| JsonError(e.to_string()))?;
    }
    Ok(out)
}

/// `{"name", "equal", "discrepancy": null | {"monomial", "lhs", "rhs", "context"}}`.
pub fn report_to_json(r: &IdentityReport) -> Value {
    let discrepancy = match &r.first_discrepancy {
        None => Value::Null,
        Some(d) => json!({
            "monomial": monomial_to_json(&d.monomial),
            "lhs": rat_to_json(&d.lhs),
            "rhs": rat_to_json(&d.rhs),
            "context": d.context,
        }),
    };
    json!({"name": r.name, "equal": r.equal, "discrepancy": discrepancy})
}
