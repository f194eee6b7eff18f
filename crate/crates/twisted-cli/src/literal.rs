//! Text and JSON literals for ring values and algebra elements, and the matching
//! deterministic formatting.

use nalgebra::DMatrix;
use serde_json::{json, Value};

use twisted::ring::Laurent;
use twisted::{AlgebraElement, Field, GroupTable, RingDescriptor, RingValue, SchurFunction, C64};

use crate::CliError;

fn syntax<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

fn mismatch<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Domain(msg.into()))
}

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn fmt_real(x: f64) -> String {
    format!("{}", round12(x))
}

/// "a", "bi", "a+bi" or "a-bi".
pub fn fmt_complex(c: C64) -> String {
    let (re, im) = (round12(c.re), round12(c.im));
    let imag = |v: f64| match v {
        1.0 => "i".to_string(),
        -1.0 => "-i".to_string(),
        v => format!("{v}i"),
    };
    match (re == 0.0, im == 0.0) {
        (_, true) => format!("{re}"),
        (true, false) => imag(im),
        (false, false) if im > 0.0 => format!("{re}+{}", imag(im)),
        _ => format!("{re}{}", imag(im)),
    }
}

/// Parses "1", "-0.5", "i", "-2i", "0.6+0.8i", "1e-3-2i".
pub fn parse_complex(s: &str) -> Result<C64, CliError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let t = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(&t);
    let bad = || CliError::Usage(format!("bad number {s:?}"));
    let num = |x: &str| -> Result<f64, CliError> {
        match x {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            x => x.parse().map_err(|_| bad()),
        }
    };
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(C64::new(t.parse().map_err(|_| bad())?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok(C64::new(body[..k].parse().map_err(|_| bad())?, num(&body[k..])?)),
        None => Ok(C64::new(0.0, num(body)?)),
    }
}

fn scalar_json(v: &Value) -> Result<C64, CliError> {
    match v {
        Value::Number(n) => Ok(C64::new(n.as_f64().expect("finite"), 0.0)),
        Value::String(s) => parse_complex(s),
        other => syntax(format!("expected a number, got {other}")),
    }
}

fn var_index(name: &str, vars: usize) -> Result<usize, CliError> {
    let k = match &name[1..] {
        "" => 0,
        d => match d.parse::<usize>() {
            Ok(k) if k >= 1 => k - 1,
            _ => return syntax(format!("bad variable {name:?}")),
        },
    };
    if k >= vars {
        return mismatch(format!("variable {name} but only {vars} variables"));
    }
    Ok(k)
}

/// One term such as "z^2", "-z1*z2^-1", "(0.6+0.8i)*z", "3".
fn parse_monomial(s: &str, vars: usize) -> Result<(Vec<i32>, C64), CliError> {
    let mut c = C64::new(1.0, 0.0);
    let mut e = vec![0; vars];
    let s = s.trim();
    let s = match s.strip_prefix('-') {
        Some(rest) if rest.trim_start().starts_with('z') => {
            c = -c;
            rest
        }
        _ => s,
    };
    for f in s.split('*').map(str::trim) {
        if f.starts_with('z') {
            let (name, pow) = match f.split_once('^') {
                Some((n, p)) => (n, p.trim_start_matches('(').trim_end_matches(')').parse::<i32>().map_err(|_| CliError::Usage(format!("bad exponent in {f:?}")))?),
                None => (f, 1),
            };
            e[var_index(name, vars)?] += pow;
        } else {
            c *= parse_complex(f)?;
        }
    }
    Ok((e, c))
}

fn split_terms(s: &str) -> Vec<String> {
    // terms are separated by a '+' or '-' with whitespace on both sides
    let mut out = Vec::new();
    let mut cur = String::new();
    let tokens: Vec<&str> = s.split_whitespace().collect();
    let mut i = 0;
    while i < tokens.len() {
        match tokens[i] {
            "+" => {
                out.push(std::mem::take(&mut cur));
            }
            "-" => {
                out.push(std::mem::take(&mut cur));
                cur.push('-');
            }
            t => cur.push_str(t),
        }
        i += 1;
    }
    out.push(cur);
    out.into_iter().filter(|t| !t.is_empty()).collect()
}

fn parse_laurent(v: &Value, vars: usize, field: Field) -> Result<Laurent, CliError> {
    let terms: Vec<String> = match v {
        Value::Number(_) => vec![v.to_string()],
        Value::String(s) => split_terms(s),
        Value::Array(a) => a
            .iter()
            .map(|t| match t {
                Value::String(s) => Ok(s.clone()),
                Value::Number(n) => Ok(n.to_string()),
                other => syntax(format!("bad Laurent term {other}")),
            })
            .collect::<Result<_, _>>()?,
        other => return syntax(format!("bad Laurent polynomial {other}")),
    };
    let parsed = terms.iter().map(|t| parse_monomial(t, vars)).collect::<Result<Vec<_>, _>>()?;
    Laurent::from_terms(vars, field, parsed).map_err(|e| CliError::Domain(e.to_string()))
}

fn parse_quaternion(v: &Value) -> Result<[f64; 4], CliError> {
    match v {
        Value::Array(a) if a.len() == 4 => {
            let mut q = [0.0; 4];
            for (k, x) in a.iter().enumerate() {
                q[k] = x.as_f64().ok_or_else(|| CliError::Usage(format!("bad quaternion part {x}")))?;
            }
            Ok(q)
        }
        Value::Number(n) => Ok([n.as_f64().expect("finite"), 0.0, 0.0, 0.0]),
        Value::String(s) => {
            let (sign, unit) = match s.trim().strip_prefix('-') {
                Some(u) => (-1.0, u),
                None => (1.0, s.trim()),
            };
            let k = match unit {
                "1" => 0,
                "i" => 1,
                "j" => 2,
                "k" => 3,
                _ => return syntax(format!("bad quaternion {s:?}; use 4 numbers or ±1, ±i, ±j, ±k")),
            };
            let mut q = [0.0; 4];
            q[k] = sign;
            Ok(q)
        }
        other => syntax(format!("bad quaternion {other}")),
    }
}

/// Parses a value in the ring described by `d`.
pub fn parse_value(v: &Value, d: &RingDescriptor) -> Result<RingValue, CliError> {
    match d {
        RingDescriptor::ComplexScalar => Ok(RingValue::Complex(scalar_json(v)?)),
        RingDescriptor::RealScalar => {
            let c = scalar_json(v)?;
            if c.im != 0.0 {
                return mismatch(format!("{v} is not real"));
            }
            Ok(RingValue::Real(c.re))
        }
        RingDescriptor::Laurent { vars, field } => Ok(RingValue::Laurent(parse_laurent(v, *vars, *field)?)),
        RingDescriptor::Quaternion => Ok(RingValue::Quaternion(parse_quaternion(v)?)),
        RingDescriptor::Matrix { size, field } => {
            let rows = match v {
                Value::Array(r) => r,
                // a scalar stands for a multiple of the identity
                _ => {
                    let c = scalar_json(v)?;
                    return Ok(RingValue::Matrix(*field, DMatrix::identity(*size, *size).map(|x: C64| x * c)));
                }
            };
            if rows.len() != *size {
                return mismatch(format!("expected {size} rows, got {}", rows.len()));
            }
            let mut m = DMatrix::zeros(*size, *size);
            for (i, r) in rows.iter().enumerate() {
                let Value::Array(r) = r else {
                    return syntax(format!("matrix row {i} is not an array"));
                };
                if r.len() != *size {
                    return mismatch(format!("row {i} has {} entries, expected {size}", r.len()));
                }
                for (j, x) in r.iter().enumerate() {
                    m[(i, j)] = scalar_json(x)?;
                }
            }
            if *field == Field::Real && m.iter().any(|c: &C64| c.im != 0.0) {
                return mismatch("complex entry in a real matrix");
            }
            Ok(RingValue::Matrix(*field, m))
        }
        RingDescriptor::Product(parts) => {
            let Value::Array(a) = v else {
                return syntax(format!("product value must be an array of {} components", parts.len()));
            };
            if a.len() != parts.len() {
                return mismatch(format!("expected {} components, got {}", parts.len(), a.len()));
            }
            Ok(RingValue::Product(a.iter().zip(parts).map(|(x, d)| parse_value(x, d)).collect::<Result<_, _>>()?))
        }
    }
}

fn fmt_laurent(l: &Laurent) -> String {
    let mut terms = Vec::new();
    for (e, c) in l.terms() {
        let c = C64::new(round12(c.re), round12(c.im));
        if c == C64::new(0.0, 0.0) {
            continue;
        }
        let vars: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, k)| **k != 0)
            .map(|(i, k)| {
                let name = if l.vars() == 1 { "z".to_string() } else { format!("z{}", i + 1) };
                if *k == 1 {
                    name
                } else {
                    format!("{name}^{k}")
                }
            })
            .collect();
        let coef = fmt_complex(c);
        let coef = if c.re != 0.0 && c.im != 0.0 { format!("({coef})") } else { coef };
        terms.push(match (vars.is_empty(), coef.as_str()) {
            (true, _) => coef,
            (false, "1") => vars.join("*"),
            (false, "-1") => format!("-{}", vars.join("*")),
            (false, _) => format!("{coef}*{}", vars.join("*")),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// JSON form of a value; parses back with `parse_value`.
pub fn value_json(v: &RingValue) -> Value {
    match v {
        RingValue::Complex(c) => json!(fmt_complex(*c)),
        RingValue::Real(x) => json!(round12(*x)),
        RingValue::Laurent(l) => json!(fmt_laurent(l)),
        RingValue::Quaternion(q) => json!(q.map(round12)),
        RingValue::Matrix(_, m) => Value::Array(
            (0..m.nrows())
                .map(|i| Value::Array((0..m.ncols()).map(|j| json!(fmt_complex(m[(i, j)]))).collect()))
                .collect(),
        ),
        RingValue::Product(p) => Value::Array(p.iter().map(value_json).collect()),
    }
}

fn element_index(g: &GroupTable, key: &str) -> Result<usize, CliError> {
    if let Some(t) = g.index_of(key) {
        return Ok(t);
    }
    // cyclic labels double as indices; allow the bracketless form of subset labels
    let braced = format!("{{{key}}}");
    g.index_of(&braced).ok_or_else(|| CliError::Domain(format!("no group element labelled {key:?}")))
}

/// An element given as {label: value} (missing labels are zero) or as a full array of
/// coefficients in index order.
pub fn parse_element(v: &Value, f: &std::sync::Arc<SchurFunction>) -> Result<AlgebraElement, CliError> {
    let d = f.descriptor();
    let mut coeffs = vec![RingValue::zero(d); f.order()];
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                coeffs[element_index(f.group(), k)?] = parse_value(x, d)?;
            }
        }
        Value::Array(a) => {
            if a.len() != f.order() {
                return mismatch(format!("expected {} coefficients, got {}", f.order(), a.len()));
            }
            for (c, x) in coeffs.iter_mut().zip(a) {
                *c = parse_value(x, d)?;
            }
        }
        Value::String(s) => {
            // "V_t" shorthand for a generator
            let Some(label) = s.strip_prefix("V_") else {
                return syntax(format!("bad element {s:?}"));
            };
            coeffs[element_index(f.group(), label)?] = RingValue::unit(d);
        }
        other => return syntax(format!("bad element {other}")),
    }
    AlgebraElement::from_coeffs(f, coeffs).map_err(|e| CliError::Domain(e.to_string()))
}

/// Nonzero coefficients keyed by group label.
pub fn element_json(x: &AlgebraElement) -> Value {
    let g = x.cocycle().group();
    let mut m = serde_json::Map::new();
    for (t, c) in x.coeffs().iter().enumerate() {
        if !c.is_zero() {
            m.insert(g.label(t).to_string(), value_json(c));
        }
    }
    Value::Object(m)
}
