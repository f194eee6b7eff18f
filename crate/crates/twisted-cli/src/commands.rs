//! The subcommands. Each returns a JSON report and whether the run succeeded.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Value};

use twisted::clifford::{
    complexify_odd, extend_even_projection, extend_two_matrix, extend_two_matrix_twice, extend_two_quaternion, split_odd,
    CliffordSpec,
};
use twisted::cocycle::classify_cyclic;
use twisted::iso::{self, KleinParams, Morphism, MorphismReport, VerifyOptions};
use twisted::rewrite::TorusRewrite;
use twisted::{AlgebraElement, Lambda, RingValue, SchurFunction};

use crate::config::{CocycleSpec, RunConfig};
use crate::literal::{element_json, parse_element, value_json};
use crate::CliError;

#[derive(Clone, Debug)]
pub enum Command {
    Validate,
    Mul { x: Option<Value>, y: Option<Value> },
    Star { x: Option<Value> },
    Norm { x: Option<Value> },
    Classify,
    Iso,
    Clifford,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub ok: bool,
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn element(cfg: &RunConfig, f: &Arc<SchurFunction>, flag: &Option<Value>, name: &str) -> Result<AlgebraElement, CliError> {
    let v = flag
        .as_ref()
        .or_else(|| cfg.elements.get(name))
        .ok_or_else(|| CliError::Usage(format!("no element {name:?} on the command line or in the config")))?;
    parse_element(v, f)
}

pub fn run(cmd: &Command, cfg: &RunConfig) -> Result<Outcome, CliError> {
    match cmd {
        Command::Validate => validate(cfg),
        Command::Mul { x, y } => {
            let f = cfg.cocycle()?;
            let (x, y) = (element(cfg, &f, x, "x")?, element(cfg, &f, y, "y")?);
            let p = x.try_mul(&y)?;
            Ok(Outcome { report: json!({ "product": element_json(&p) }), ok: true })
        }
        Command::Star { x } => {
            let f = cfg.cocycle()?;
            let x = element(cfg, &f, x, "x")?;
            Ok(Outcome { report: json!({ "star": element_json(&x.star()) }), ok: true })
        }
        Command::Norm { x } => {
            let f = cfg.cocycle()?;
            let x = element(cfg, &f, x, "x")?;
            let mut report = json!({ "norm": x.norm(cfg.grid()) });
            if f.descriptor().is_laurent() {
                report["grid"] = json!(cfg.grid());
            }
            Ok(Outcome { report, ok: true })
        }
        Command::Classify => classify(cfg),
        Command::Iso => iso_cmd(cfg),
        Command::Clifford => clifford(cfg),
    }
}

fn validate(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let f = cfg.cocycle()?;
    let r = f.validate(cfg.tol());
    let mut report = to_json(&r);
    report["valid"] = json!(r.is_valid());
    report["order"] = json!(f.order());
    Ok(Outcome { report, ok: r.is_valid() })
}

fn classify(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let spec = cfg.classify.as_ref().ok_or_else(|| CliError::Usage("config has no classify section".into()))?;
    let d = cfg.descriptor()?;
    let params = spec
        .params
        .iter()
        .map(|p| p.iter().map(|v| cfg.value(v)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(n) = spec.n {
        if let Some((i, p)) = params.iter().enumerate().find(|(_, p)| p.len() + 1 != n) {
            return Err(CliError::Usage(format!("parameter vector {i} has {} entries; Z/{n} needs {}", p.len(), n.max(1) - 1)));
        }
    }
    let classes = classify_cyclic(&params, &d)?;
    let lambda = |l: &Lambda| Value::Array(l.values().iter().map(value_json).collect());
    let out: Vec<Value> = classes
        .iter()
        .map(|c| {
            json!({
                "representative": c.representative,
                "members": c.members.iter().map(|m| m.0).collect::<Vec<_>>(),
                "witnesses": c.members.iter().map(|(i, l)| (i.to_string(), lambda(l))).collect::<serde_json::Map<_, _>>(),
            })
        })
        .collect();
    Ok(Outcome { report: json!({ "count": classes.len(), "classes": out }), ok: true })
}

fn iso_param(cfg: &RunConfig, p: &BTreeMap<String, Value>, key: &str) -> Result<Option<RingValue>, CliError> {
    p.get(key).map(|v| cfg.value(v)).transpose()
}

fn required(cfg: &RunConfig, p: &BTreeMap<String, Value>, key: &str) -> Result<RingValue, CliError> {
    iso_param(cfg, p, key)?.ok_or_else(|| CliError::Usage(format!("missing parameter {key:?}")))
}

fn klein_params(cfg: &RunConfig) -> Result<KleinParams, CliError> {
    match &cfg.cocycle {
        Some(CocycleSpec::KleinTable { alpha, beta, gamma, eps }) => {
            Ok(KleinParams::new(cfg.value(alpha)?, cfg.value(beta)?, cfg.value(gamma)?, cfg.value(eps)?))
        }
        _ => Err(CliError::Usage("Klein constructors need a klein_table cocycle".into())),
    }
}

fn verify_options(cfg: &RunConfig, p: &BTreeMap<String, Value>) -> Result<VerifyOptions, CliError> {
    let window = match p.get("window") {
        None => None,
        Some(v) => Some(v.as_i64().ok_or_else(|| CliError::Usage("window must be an integer".into()))? as i32),
    };
    Ok(VerifyOptions { tol: cfg.tol(), window, ..VerifyOptions::default() })
}

fn morphism_outcome(m: &Morphism, opts: &VerifyOptions) -> Result<Outcome, CliError> {
    let r = m.verify(opts)?;
    let ok = r.is_isomorphism();
    let mut report = to_json(&r);
    report["isomorphism"] = json!(ok);
    Ok(Outcome { report, ok })
}

fn iso_cmd(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let p = cfg.iso.as_ref().ok_or_else(|| CliError::Usage("config has no iso section".into()))?;
    let name = p
        .get("constructor")
        .and_then(Value::as_str)
        .ok_or_else(|| CliError::Usage("iso.constructor must name a constructor".into()))?;
    let tol = cfg.tol();
    let opts = verify_options(cfg, p)?;
    let one = |cfg: &RunConfig| RingValue::unit(&cfg.descriptor().expect("checked on load"));
    let m = match name {
        "torus_rewrite" => {
            let degree = p.get("degree").map_or(Some(4), Value::as_i64).ok_or_else(|| CliError::Usage("degree must be an integer".into()))?;
            let r = TorusRewrite::new(&cfg.cocycle()?)?.verify(degree as i32)?;
            return Ok(Outcome { report: to_json(&r), ok: r.passed });
        }
        "identity" => iso::identity(&cfg.cocycle()?)?,
        "lambda" => {
            let f = cfg.cocycle()?;
            let vals = match p.get("lambda") {
                Some(Value::Array(a)) => a.iter().map(|v| cfg.value(v)).collect::<Result<Vec<_>, _>>()?,
                _ => return Err(CliError::Usage("lambda needs an array \"lambda\"".into())),
            };
            let l = Lambda::new(f.group().clone(), f.descriptor().clone(), vals, tol)?;
            iso::lambda_isomorphism(&f, &l)?
        }
        "z2_split" => match iso_param(cfg, p, "x")? {
            Some(x) => iso::z2_split(&cfg.cocycle()?, &x, tol)?,
            None => iso::z2_split_root(&cfg.cocycle()?, tol)?,
        },
        "z2_complexify" => iso::z2_complexify(&cfg.cocycle()?, tol)?,
        "klein_matrix" | "klein_split4" | "klein_complex_pair" | "klein_quaternion" => {
            let k = klein_params(cfg)?;
            let x = required(cfg, p, "x")?;
            let y = iso_param(cfg, p, "y")?.unwrap_or_else(|| one(cfg));
            let build = match name {
                "klein_matrix" => iso::klein_matrix,
                "klein_split4" => iso::klein_split4,
                "klein_complex_pair" => iso::klein_complex_pair,
                _ => iso::klein_quaternion,
            };
            build(&k, &x, &y, tol)?
        }
        "char_decompose" => iso::char_decompose_z2n(&cfg.cocycle()?, tol)?,
        "cyclic_decompose" => {
            let Some(CocycleSpec::FAlpha { alpha }) = &cfg.cocycle else {
                return Err(CliError::Usage("cyclic_decompose needs an f_alpha cocycle".into()));
            };
            let alpha = alpha.iter().map(|v| cfg.value(v)).collect::<Result<Vec<_>, _>>()?;
            let beta = required(cfg, p, "beta")?;
            iso::cyclic_decompose(&alpha, &beta, &cfg.descriptor()?, tol)?
        }
        "z2z4_decompose" => iso::z2z4_decompose(&cfg.cocycle()?, tol)?,
        other => return Err(CliError::Usage(format!("unknown constructor {other:?}"))),
    };
    morphism_outcome(&m, &opts)
}

fn report_json(r: &MorphismReport) -> Value {
    let mut v = to_json(r);
    v["isomorphism"] = json!(r.is_isomorphism());
    v
}

fn periodicity(spec: &CliffordSpec, cfg: &RunConfig, req: &BTreeMap<String, Value>) -> Result<Value, CliError> {
    let op = req
        .get("op")
        .and_then(Value::as_str)
        .ok_or_else(|| CliError::Usage("periodicity entries need an \"op\"".into()))?;
    let tol = cfg.tol();
    let opts = VerifyOptions { tol, ..VerifyOptions::default() };
    let values = |key: &str| -> Result<Vec<RingValue>, CliError> {
        match req.get(key) {
            Some(Value::Array(a)) => a.iter().map(|v| cfg.value(v)).collect(),
            _ => Err(CliError::Usage(format!("{op} needs an array {key:?}"))),
        }
    };
    let value = |key: &str| -> Result<RingValue, CliError> {
        cfg.value(req.get(key).ok_or_else(|| CliError::Usage(format!("{op} needs {key:?}")))?)
    };
    let ext_report = |m: &Morphism, size: usize| -> Result<Value, CliError> {
        let r = m.verify(&opts)?;
        Ok(json!({ "op": op, "ok": r.is_isomorphism(), "labels": size, "report": report_json(&r) }))
    };
    match op {
        "extend_two_matrix" => {
            let e = extend_two_matrix(spec, &value("alpha1")?, &value("alpha2")?, tol)?;
            ext_report(&e.morphism, e.spec.size())
        }
        "extend_two_matrix_twice" => {
            let a: [RingValue; 4] = values("alphas")?
                .try_into()
                .map_err(|_| CliError::Usage("extend_two_matrix_twice needs four alphas".into()))?;
            let e = extend_two_matrix_twice(spec, &a, tol)?;
            ext_report(&e.morphism, e.spec.size())
        }
        "extend_two_quaternion" => {
            let e = extend_two_quaternion(spec, &value("alpha1")?, &value("alpha2")?, tol)?;
            ext_report(&e.morphism, e.spec.size())
        }
        "complexify_odd" => {
            let e = complexify_odd(spec, tol)?;
            ext_report(&e.morphism, e.spec.size())
        }
        "split_odd" => {
            let s = split_odd(spec, tol)?;
            let r = s.morphism.verify(&opts)?;
            let residuals = to_json(&s.residuals);
            let worst = [s.residuals.isometry, s.residuals.projection, s.residuals.intertwining, s.residuals.central]
                .into_iter()
                .fold(0.0, f64::max);
            let ok = r.is_isomorphism() && worst <= tol;
            Ok(json!({ "op": op, "ok": ok, "labels": s.spec.size(), "report": report_json(&r), "residuals": residuals }))
        }
        "extend_even_projection" => {
            let e = extend_even_projection(spec, &values("alphas")?, tol)?;
            let r = e.morphism.verify(&opts)?;
            let ok = r.homomorphism && r.injective && (r.surjective || !e.surjectivity_expected);
            Ok(json!({
                "op": op,
                "ok": ok,
                "labels": e.spec.size(),
                "surjectivity_expected": e.surjectivity_expected,
                "report": report_json(&r),
            }))
        }
        other => Err(CliError::Usage(format!("unknown periodicity op {other:?}"))),
    }
}

fn clifford(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let spec = cfg.clifford_spec()?;
    let req = cfg.clifford.clone().unwrap_or(crate::config::CliffordRequest { table: true, periodicity: vec![] });
    let f = spec.cocycle();
    let n = spec.size();

    let mut squares: f64 = 0.0;
    let mut anti: f64 = 0.0;
    for i in 0..n {
        let vi = AlgebraElement::generator(&f, 1 << i);
        let rho = AlgebraElement::monomial(&f, 0, spec.rho()[i].clone())?;
        squares = squares.max(vi.mul(&vi).max_distance(&rho));
        for j in i + 1..n {
            let vj = AlgebraElement::generator(&f, 1 << j);
            anti = anti.max(vi.mul(&vj).add(&vj.mul(&vi)).max_abs());
        }
    }
    let mut subset_squares: f64 = 0.0;
    for a in 0..f.order() {
        let k = a.count_ones() as usize;
        let sign = if (k * k.saturating_sub(1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
        let v = AlgebraElement::generator(&f, a);
        let expect = AlgebraElement::monomial(&f, 0, spec.rho_product(a).scale_real(sign))?;
        subset_squares = subset_squares.max(v.mul(&v).max_distance(&expect));
    }
    let validation = f.validate(cfg.tol());
    let tol = cfg.tol();
    let relations_ok = validation.is_valid() && squares <= tol && anti <= tol && subset_squares <= tol;

    let mut reports = Vec::new();
    let mut ok = relations_ok;
    for r in &req.periodicity {
        let v = periodicity(&spec, cfg, r)?;
        ok &= v["ok"] == json!(true);
        reports.push(v);
    }

    let mut report = json!({
        "labels": spec.labels(),
        "rho": spec.rho().iter().map(value_json).collect::<Vec<_>>(),
        "relations": {
            "cocycle_valid": validation.is_valid(),
            "generator_squares": squares,
            "anticommutators": anti,
            "subset_squares": subset_squares,
            "ok": relations_ok,
        },
        "periodicity": reports,
        "ok": ok,
    });
    if req.table {
        let g = f.group();
        let table: serde_json::Map<String, Value> = (0..f.order())
            .map(|s| {
                let row = (0..f.order()).map(|t| value_json(f.get(s, t))).collect::<Vec<_>>();
                (g.label(s).to_string(), Value::Array(row))
            })
            .collect();
        report["cocycle"] = Value::Object(table);
    }
    Ok(Outcome { report, ok })
}
