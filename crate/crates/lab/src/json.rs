//! Canonical JSON encodings.
//!
//! Keys come out sorted because `serde_json::Map` is a `BTreeMap` without the
//! `preserve_order` feature. Floats are rounded to 12 significant digits
//! before they enter a `Value`, so printing, parsing and printing again is
//! byte-identical. Exact values never become floats: integers stay integers
//! (or decimal strings beyond `i64`), rationals are `"p/q"` strings and
//! polynomials are ascending coefficient arrays.

use coxeter_core::coxeter::{Eigenvalue, PhiEntry, SpectrumEntry};
use coxeter_core::matrix::Matrix;
use coxeter_core::{Diagram, IntPolynomial, Rational, RationalFunction};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value};

pub const SIGNIFICANT_DIGITS: usize = 12;

/// `x` rounded to 12 significant digits; non-finite values become strings.
pub fn float(x: f64) -> Value {
    if x.is_nan() {
        return Value::String("nan".into());
    }
    if x.is_infinite() {
        return Value::String(if x > 0.0 { "inf" } else { "-inf" }.into());
    }
    let rounded: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses");
    // -0.0 and 0.0 print differently; keep one.
    let rounded = if rounded == 0.0 { 0.0 } else { rounded };
    serde_json::Number::from_f64(rounded).map_or(Value::Null, Value::Number)
}

pub fn complex(z: Complex64) -> Value {
    json!({ "re": float(z.re), "im": float(z.im) })
}

/// A character value. Characters are sums of roots of unity bounded by the
/// degree, so they are rounded to 12 decimal places: that strips float noise
/// which would otherwise depend on the seed used to build the table.
pub fn character(z: Complex64) -> Value {
    let snap = |x: f64| float((x * 1e12).round() / 1e12);
    json!({ "re": snap(z.re), "im": snap(z.im) })
}

pub fn bigint(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

/// `"p/q"`, or `"p"` for integers.
pub fn rational(x: &Rational) -> Value {
    if x.denom().is_one() {
        Value::String(x.numer().to_string())
    } else {
        Value::String(format!("{}/{}", x.numer(), x.denom()))
    }
}

pub fn polynomial(p: &IntPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(bigint).collect())
}

pub fn rational_function(f: &RationalFunction) -> Value {
    json!({
        "numerator": polynomial(f.numerator()),
        "denominator": polynomial(f.denominator()),
    })
}

pub fn int_matrix(m: &Matrix<BigInt>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(bigint).collect()))
            .collect(),
    )
}

pub fn rational_matrix(m: &Matrix<Rational>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(rational).collect()))
            .collect(),
    )
}

pub fn diagram(d: &Diagram) -> Value {
    let vertices: Vec<Value> = d
        .labels()
        .iter()
        .enumerate()
        .map(|(id, label)| json!({ "id": id, "label": label }))
        .collect();
    let edges: Vec<Value> = d
        .edges()
        .iter()
        .map(|e| json!({ "i": e.i, "j": e.j, "dij": e.dij, "dji": e.dji }))
        .collect();
    json!({ "vertices": vertices, "edges": edges, "marked": d.marked() })
}

pub fn eigenvalue(e: &Eigenvalue) -> Value {
    match *e {
        Eigenvalue::RootOfUnity {
            numerator,
            denominator,
        } => json!({
            "root_of_unity": format!("{numerator}/{denominator}"),
            "value": complex(e.to_complex()),
        }),
        Eigenvalue::Numeric(z) => json!({ "value": complex(z) }),
    }
}

pub fn spectrum(s: &[SpectrumEntry]) -> Value {
    Value::Array(
        s.iter()
            .map(|e| {
                let mut v = eigenvalue(&e.value);
                v["multiplicity"] = Value::from(e.multiplicity);
                v
            })
            .collect(),
    )
}

pub fn phi_spectrum(s: &[PhiEntry]) -> Value {
    Value::Array(
        s.iter()
            .map(|e| {
                json!({
                    "phi": float(e.phi),
                    "exact": e.exact.as_ref().map(rational),
                    "multiplicity": e.multiplicity,
                })
            })
            .collect(),
    )
}

/// Pretty, canonical rendering used for `--json`.
pub fn to_canonical_string(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip() {
        for x in [1.0 / 3.0, 1.176_280_818_259_917_5, -2.5e-17, 0.0, -0.0, 1e300] {
            let v = float(x);
            let s = serde_json::to_string(&v).unwrap();
            let back: Value = serde_json::from_str(&s).unwrap();
            assert_eq!(serde_json::to_string(&back).unwrap(), s);
        }
        assert_eq!(float(1.0 / 3.0), json!(0.333333333333));
    }

    #[test]
    fn exact_values() {
        let r = Rational::new(BigInt::from(-3), BigInt::from(6));
        assert_eq!(rational(&r), json!("-1/2"));
        assert_eq!(rational(&Rational::from(BigInt::from(4))), json!("4"));
        assert_eq!(polynomial(&IntPolynomial::from_i64(&[-1, -1, -1, -1])), json!([-1, -1, -1, -1]));
        let big = BigInt::from(i64::MAX) * 4;
        assert_eq!(bigint(&big), json!(big.to_string()));
    }
}
