//! JSON forms for ring values.
//!
//! A polynomial is an array of term objects `{"c": "p/q", "m": {"x1": 2}}`
//! in descending monomial order; a rational function is
//! `{"num": [...], "den": [...]}`. Serialization round-trips bit-exactly.

use super::{scalar_from_str, scalar_to_string, Monomial, MultiPoly, RatFunc, VarId};
use crate::error::{Error, Result};
use serde_json::{json, Map, Value};

pub fn poly_to_json(p: &MultiPoly) -> Value {
    let mut terms = Vec::with_capacity(p.num_terms());
    for (m, c) in p.iter().rev() {
        let mut mono = Map::new();
        for (v, e) in m.iter() {
            mono.insert(v.name(), json!(e));
        }
        let mut term = Map::new();
        term.insert("c".into(), Value::String(scalar_to_string(c)));
        term.insert("m".into(), Value::Object(mono));
        terms.push(Value::Object(term));
    }
    Value::Array(terms)
}

pub fn poly_from_json(v: &Value) -> Result<MultiPoly> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("polynomial JSON must be an array".into()))?;
    let mut out = MultiPoly::zero();
    for t in arr {
        let obj = t
            .as_object()
            .ok_or_else(|| Error::Parse("term must be an object".into()))?;
        let c = obj
            .get("c")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("term missing string field \"c\"".into()))?;
        let c = scalar_from_str(c)?;
        let m = obj
            .get("m")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse("term missing object field \"m\"".into()))?;
        let mut pairs = Vec::new();
        for (name, e) in m {
            let e = e
                .as_u64()
                .filter(|&e| e > 0)
                .ok_or_else(|| Error::Parse("exponents must be positive integers".into()))?;
            pairs.push((VarId::from_name(name)?, e as u32));
        }
        out = &out + &MultiPoly::from_term(Monomial::from_pairs(&pairs), c);
    }
    Ok(out)
}

pub fn ratfunc_to_json(r: &RatFunc) -> Value {
    let mut obj = Map::new();
    obj.insert("num".into(), poly_to_json(r.num()));
    obj.insert("den".into(), poly_to_json(r.den()));
    Value::Object(obj)
}

pub fn ratfunc_from_json(v: &Value) -> Result<RatFunc> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("rational function JSON must be an object".into()))?;
    let num = poly_from_json(
        obj.get("num")
            .ok_or_else(|| Error::Parse("missing \"num\"".into()))?,
    )?;
    let den = poly_from_json(
        obj.get("den")
            .ok_or_else(|| Error::Parse("missing \"den\"".into()))?,
    )?;
    RatFunc::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_exact_roundtrip() {
        let r = RatFunc::parse("(3 x1 x2^2 - 1/2 y1)/(x2 (x1 + x2 + x3))").unwrap();
        let s1 = serde_json::to_string(&ratfunc_to_json(&r)).unwrap();
        let back = ratfunc_from_json(&serde_json::from_str(&s1).unwrap()).unwrap();
        assert_eq!(back, r);
        let s2 = serde_json::to_string(&ratfunc_to_json(&back)).unwrap();
        assert_eq!(s1, s2);
    }

    #[test]
    fn rejects_zero_exponents() {
        let v: Value = serde_json::from_str(r#"[{"c":"1","m":{"x1":0}}]"#).unwrap();
        assert!(poly_from_json(&v).is_err());
    }
}
