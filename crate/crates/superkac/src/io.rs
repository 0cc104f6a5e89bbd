//! JSON input and output: algebras, weights, series, and report envelopes.
//!
//! Rationals are accepted as integers or `"num/den"` strings and always
//! emitted as strings; every report carries `"schema": "superkac/1"`.

use crate::algebra::{Algebra, Options};
use crate::cartan::{CartanSupermatrix, Parity};
use crate::error::{Error, Result};
use crate::rat::*;
use crate::series::{SuperCoeff, TruncatedSeries, Window};
use crate::weights::Weight;
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

pub const SCHEMA: &str = "superkac/1";

pub fn rat_from_value(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(q(i))
            } else {
                Err(Error::Input(format!(
                    "non-integer number {n}; use \"num/den\""
                )))
            }
        }
        Value::String(s) => parse_rat(s).ok_or_else(|| Error::Input(format!("bad rational {s:?}"))),
        other => Err(Error::Input(format!("expected a rational, got {other}"))),
    }
}

pub fn rat_to_value(x: &Rat) -> Value {
    Value::String(fmt_rat(x))
}

pub fn rat_vec_to_value(xs: &[Rat]) -> Value {
    Value::Array(xs.iter().map(rat_to_value).collect())
}

pub fn int_vec_to_value(xs: &[i64]) -> Value {
    Value::Array(xs.iter().map(|&x| Value::String(x.to_string())).collect())
}

pub fn rat_vec_from_value(v: &Value) -> Result<Vec<Rat>> {
    v.as_array()
        .ok_or_else(|| Error::Input("expected an array of rationals".into()))?
        .iter()
        .map(rat_from_value)
        .collect()
}

/// Parsed algebra description: the supermatrix plus optional construction
/// options.
#[derive(Debug, Clone)]
pub struct AlgebraInput {
    pub a: Vec<Vec<Rat>>,
    pub parity: Vec<Parity>,
    pub name: Option<String>,
    pub affine_node: Option<usize>,
    pub imaginary_mults: Option<Vec<(u32, u32)>>,
    pub base_bound: Option<usize>,
}

impl AlgebraInput {
    pub fn from_json(v: &Value) -> Result<AlgebraInput> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Input("algebra file must be a JSON object".into()))?;
        let a_val = obj
            .get("A")
            .ok_or_else(|| Error::Input("missing field \"A\"".into()))?;
        let a: Vec<Vec<Rat>> = a_val
            .as_array()
            .ok_or_else(|| Error::Input("\"A\" must be an array of rows".into()))?
            .iter()
            .map(rat_vec_from_value)
            .collect::<Result<_>>()?;
        let p_val = obj
            .get("p")
            .ok_or_else(|| Error::Input("missing field \"p\"".into()))?;
        let parity: Vec<Parity> = p_val
            .as_array()
            .ok_or_else(|| Error::Input("\"p\" must be an array of 0/1".into()))?
            .iter()
            .map(|x| match x.as_i64() {
                Some(0) => Ok(Parity::Even),
                Some(1) => Ok(Parity::Odd),
                _ => Err(Error::Input("parities must be 0 or 1".into())),
            })
            .collect::<Result<_>>()?;
        let name = obj.get("name").and_then(|v| v.as_str()).map(String::from);
        let affine_node = obj
            .get("affine_node")
            .and_then(|v| v.as_u64())
            .map(|v| v as usize);
        let imaginary_mults = match obj.get("imaginary_mults") {
            None => None,
            Some(Value::Array(rows)) => {
                let mut t = Vec::new();
                for r in rows {
                    let pair = r.as_array().filter(|a| a.len() == 2).ok_or_else(|| {
                        Error::Input("imaginary_mults entries are [even, odd]".into())
                    })?;
                    let e = pair[0].as_u64().unwrap_or(0) as u32;
                    let o = pair[1].as_u64().unwrap_or(0) as u32;
                    t.push((e, o));
                }
                Some(t)
            }
            Some(_) => return Err(Error::Input("imaginary_mults must be an array".into())),
        };
        let base_bound = obj
            .get("base_bound")
            .and_then(|v| v.as_u64())
            .map(|v| v as usize);
        Ok(AlgebraInput {
            a,
            parity,
            name,
            affine_node,
            imaginary_mults,
            base_bound,
        })
    }

    pub fn parse(text: &str) -> Result<AlgebraInput> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("bad JSON: {e}")))?;
        AlgebraInput::from_json(&v)
    }

    pub fn build(&self) -> Result<Algebra> {
        let sm = CartanSupermatrix::new(self.a.clone(), self.parity.clone())?;
        let mut opts = Options::default();
        if let Some(n) = self.affine_node {
            opts.affine_node = n;
        }
        if let Some(t) = &self.imaginary_mults {
            opts.imaginary_table = Some(t.clone());
        }
        if let Some(b) = self.base_bound {
            opts.base_bound = b;
        }
        let alg = Algebra::new(sm, opts)?;
        Ok(match &self.name {
            Some(n) => alg.named(n),
            None => alg,
        })
    }
}

pub fn algebra_to_json(alg: &Algebra) -> Value {
    let mut m = Map::new();
    m.insert(
        "A".into(),
        Value::Array(
            alg.supermatrix
                .a
                .iter()
                .map(|row| rat_vec_to_value(row))
                .collect(),
        ),
    );
    m.insert(
        "p".into(),
        Value::Array(
            alg.supermatrix
                .parity
                .iter()
                .map(|p| json!(matches!(p, Parity::Odd) as u8))
                .collect(),
        ),
    );
    if let Some(n) = &alg.name {
        m.insert("name".into(), json!(n));
    }
    if let Some(aff) = &alg.affine {
        m.insert("affine_node".into(), json!(aff.affine_node));
    }
    Value::Object(m)
}

pub fn weight_from_json(v: &Value) -> Result<Weight> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Input("weight file must be a JSON object".into()))?;
    let pairings = rat_vec_from_value(
        obj.get("pairings")
            .ok_or_else(|| Error::Input("missing field \"pairings\"".into()))?,
    )?;
    let mut w = Weight::new(pairings);
    if let Some(l) = obj.get("label").and_then(|v| v.as_str()) {
        w = w.labeled(l);
    }
    Ok(w)
}

pub fn weight_parse(text: &str) -> Result<Weight> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("bad JSON: {e}")))?;
    weight_from_json(&v)
}

pub fn weight_to_json(w: &Weight) -> Value {
    let mut m = Map::new();
    m.insert("pairings".into(), rat_vec_to_value(&w.pairings));
    if let Some(l) = &w.label {
        m.insert("label".into(), json!(l));
    }
    Value::Object(m)
}

pub fn series_to_json(s: &TruncatedSeries) -> Value {
    let d = match &s.window {
        Window::Exact => Value::String("exact".into()),
        Window::UpTo(d) => rat_to_value(d),
    };
    json!({
        "anchor": { "pairings": rat_vec_to_value(&s.anchor) },
        "D": d,
        "terms": s.terms.iter().map(|(off, c)| json!({
            "offset": rat_vec_to_value(off),
            "c0": c.c0,
            "c1": c.c1,
        })).collect::<Vec<_>>(),
    })
}

pub fn series_from_json(v: &Value) -> Result<TruncatedSeries> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Input("series must be a JSON object".into()))?;
    let anchor = obj
        .get("anchor")
        .and_then(|a| a.get("pairings"))
        .ok_or_else(|| Error::Input("missing anchor.pairings".into()))?;
    let anchor = rat_vec_from_value(anchor)?;
    let window = match obj.get("D") {
        None => Window::Exact,
        Some(Value::String(s)) if s == "exact" => Window::Exact,
        Some(v) => Window::UpTo(rat_from_value(v)?),
    };
    let mut terms = BTreeMap::new();
    for t in obj
        .get("terms")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::Input("missing terms".into()))?
    {
        let off = rat_vec_from_value(
            t.get("offset")
                .ok_or_else(|| Error::Input("term missing offset".into()))?,
        )?;
        let c0 = t.get("c0").and_then(|v| v.as_i64()).unwrap_or(0);
        let c1 = t.get("c1").and_then(|v| v.as_i64()).unwrap_or(0);
        let c = SuperCoeff { c0, c1 };
        if !c.is_zero() {
            terms.insert(off, c);
        }
    }
    Ok(TruncatedSeries {
        anchor,
        terms,
        window,
    })
}

/// Report envelope: payload plus schema and metadata.
pub fn report(payload: Value, meta: Value) -> Value {
    json!({
        "schema": SCHEMA,
        "meta": meta,
        "result": payload,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::zoo;

    #[test]
    fn algebra_round_trip() {
        let text = r#"{"A": [[2, -1], ["-2/1", 2]], "p": [0, 1], "name": "osp(1|4)"}"#;
        let input = AlgebraInput::parse(text).unwrap();
        let alg = input.build().unwrap();
        assert_eq!(alg.supermatrix.a[1][0], q(-2));
        assert_eq!(alg.supermatrix.parity[1], Parity::Odd);
        let back = algebra_to_json(&alg);
        let reparsed = AlgebraInput::from_json(&back).unwrap().build().unwrap();
        assert_eq!(reparsed.supermatrix, alg.supermatrix);
    }

    #[test]
    fn weight_round_trip() {
        let w = weight_parse(r#"{"pairings": ["1/3", 2], "label": "test"}"#).unwrap();
        assert_eq!(w.pairings, vec![qr(1, 3), q(2)]);
        let v = weight_to_json(&w);
        assert_eq!(weight_from_json(&v).unwrap().pairings, w.pairings);
    }

    #[test]
    fn series_round_trip() {
        let alg = zoo::sl2();
        let s = crate::characters::verma_character(&alg, &Weight::new(vec![qr(1, 2)]), 4, true)
            .unwrap();
        let v = series_to_json(&s);
        let back = series_from_json(&v).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn bad_inputs_are_rejected() {
        assert!(AlgebraInput::parse("{}").is_err());
        assert!(AlgebraInput::parse(r#"{"A": [[2]], "p": [2]}"#).is_err());
        assert!(rat_from_value(&json!(1.5)).is_err());
    }
}
