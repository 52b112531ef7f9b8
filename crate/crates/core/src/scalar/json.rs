//! JSON wire form of scalars:
//! `{"a":{"num":[[exp,"p/q"],…],"den":[[exp,"p/q"],…]},"b":{…}}`.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::field::{Scalar, ScalarSpec};
use super::laurent::{LaurentPoly, Rational};
use super::ratfunc::RatFunc;
use super::ScalarError;

/// Nonzero terms of a Laurent polynomial as `[exponent, "p/q"]`, ascending in exponent.
pub type LaurentWire = Vec<(i64, String)>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncWire {
    pub num: LaurentWire,
    pub den: LaurentWire,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarWire {
    pub a: RatFuncWire,
    pub b: RatFuncWire,
}

fn laurent_to_wire(p: &LaurentPoly) -> LaurentWire {
    p.terms().map(|(e, c)| (e, c.to_string())).collect()
}

fn laurent_from_wire(w: &LaurentWire) -> Result<LaurentPoly, ScalarError> {
    let terms = w
        .iter()
        .map(|(e, c)| {
            Rational::from_str(c)
                .map(|c| (*e, c))
                .map_err(|_| ScalarError::Json(format!("bad rational {c:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LaurentPoly::from_terms(terms))
}

impl RatFuncWire {
    pub fn from_ratfunc(r: &RatFunc) -> Self {
        RatFuncWire { num: laurent_to_wire(r.num()), den: laurent_to_wire(r.den()) }
    }

    pub fn to_ratfunc(&self) -> Result<RatFunc, ScalarError> {
        let num = laurent_from_wire(&self.num)?;
        let den = laurent_from_wire(&self.den)?;
        RatFunc::new(num, den).map_err(|_| ScalarError::Json("zero denominator".into()))
    }
}

impl Scalar {
    pub fn to_wire(&self) -> ScalarWire {
        ScalarWire {
            a: RatFuncWire::from_ratfunc(self.rational_part()),
            b: RatFuncWire::from_ratfunc(self.sqrt_part()),
        }
    }

    pub fn from_wire(w: &ScalarWire, spec: &ScalarSpec) -> Result<Scalar, ScalarError> {
        spec.from_parts(w.a.to_ratfunc()?, w.b.to_ratfunc()?)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_wire()).expect("scalar wire form serializes")
    }

    pub fn from_json(v: &serde_json::Value, spec: &ScalarSpec) -> Result<Scalar, ScalarError> {
        let w: ScalarWire =
            serde_json::from_value(v.clone()).map_err(|e| ScalarError::Json(e.to_string()))?;
        Self::from_wire(&w, spec)
    }
}
