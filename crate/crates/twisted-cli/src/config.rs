//! Run configuration: the group, coefficient ring, cocycle and per-command parameters.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::Value;

use twisted::clifford::CliffordSpec;
use twisted::cocycle::{coboundary, klein_group, klein_table, make_f_alpha};
use twisted::group::{direct_product, make_cyclic, make_subset_group};
use twisted::iso::{z2z4_group, z2z4_table};
use twisted::ring::{DEFAULT_GRID, DEFAULT_TOL};
use twisted::{Field, GroupTable, Lambda, RingDescriptor, RingValue, SchurFunction};

use crate::literal::parse_value;
use crate::CliError;

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic { n: usize },
    Product { factors: Vec<usize> },
    Subsets { labels: Vec<String> },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CocycleSpec {
    Trivial,
    /// Rows indexed by s, columns by t.
    Table { values: Vec<Vec<Value>> },
    FAlpha { alpha: Vec<Value> },
    KleinTable { alpha: Value, beta: Value, gamma: Value, eps: Value },
    Z2z4 { alpha: Value, beta: Value, gamma: Value, delta: Value },
    CliffordRho { rho: Vec<Value> },
    Coboundary { lambda: Vec<Value> },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifySpec {
    pub n: Option<usize>,
    pub params: Vec<Vec<Value>>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CliffordRequest {
    #[serde(default = "yes")]
    pub table: bool,
    #[serde(default)]
    pub periodicity: Vec<BTreeMap<String, Value>>,
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub group: Option<GroupSpec>,
    pub ring: Option<Value>,
    pub cocycle: Option<CocycleSpec>,
    #[serde(default)]
    pub elements: BTreeMap<String, Value>,
    pub tol: Option<f64>,
    pub grid: Option<usize>,
    pub classify: Option<ClassifySpec>,
    /// Constructor name under "constructor" plus its parameters.
    pub iso: Option<BTreeMap<String, Value>>,
    pub clifford: Option<CliffordRequest>,
}

impl RunConfig {
    pub fn from_str(s: &str) -> Result<Self, CliError> {
        let c: RunConfig = serde_json::from_str(s).map_err(|e| CliError::Usage(format!("config: {e}")))?;
        c.check()?;
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let s = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        Self::from_str(&s)
    }

    fn check(&self) -> Result<(), CliError> {
        if let Some(t) = self.tol {
            if !(t > 0.0) {
                return Err(CliError::Usage("tol must be positive".into()));
            }
        }
        if self.grid == Some(0) {
            return Err(CliError::Usage("grid must be positive".into()));
        }
        self.descriptor()?;
        Ok(())
    }

    pub fn tol(&self) -> f64 {
        self.tol.unwrap_or(DEFAULT_TOL)
    }

    pub fn grid(&self) -> usize {
        self.grid.unwrap_or(DEFAULT_GRID)
    }

    pub fn descriptor(&self) -> Result<RingDescriptor, CliError> {
        match &self.ring {
            None => Ok(RingDescriptor::ComplexScalar),
            Some(v) => parse_descriptor(v),
        }
    }

    pub fn group(&self) -> Result<Option<Arc<GroupTable>>, CliError> {
        let usage = |e: twisted::Error| CliError::Usage(format!("group: {e}"));
        let g = match &self.group {
            None => return Ok(None),
            Some(GroupSpec::Cyclic { n }) => make_cyclic(*n).map_err(usage)?,
            Some(GroupSpec::Product { factors }) => {
                let Some((first, rest)) = factors.split_first() else {
                    return Err(CliError::Usage("product group needs at least one factor".into()));
                };
                let mut g = make_cyclic(*first).map_err(usage)?;
                for n in rest {
                    g = direct_product(&g, &make_cyclic(*n).map_err(usage)?).map_err(usage)?;
                }
                g
            }
            Some(GroupSpec::Subsets { labels }) => make_subset_group(labels).map_err(usage)?.into_group(),
        };
        Ok(Some(Arc::new(g)))
    }

    fn need_group(&self) -> Result<Arc<GroupTable>, CliError> {
        self.group()?.ok_or_else(|| CliError::Usage("config has no group".into()))
    }

    /// Builds the cocycle, checking that a named constructor agrees with the declared group.
    pub fn cocycle(&self) -> Result<Arc<SchurFunction>, CliError> {
        let d = self.descriptor()?;
        let spec = self.cocycle.as_ref().ok_or_else(|| CliError::Usage("config has no cocycle".into()))?;
        let vals = |xs: &[Value]| xs.iter().map(|x| parse_value(x, &d)).collect::<Result<Vec<_>, _>>();
        let f = match spec {
            CocycleSpec::Trivial => SchurFunction::constant(self.need_group()?, d),
            CocycleSpec::Table { values } => {
                let g = self.need_group()?;
                let table = values.iter().map(|r| vals(r)).collect::<Result<Vec<_>, _>>()?;
                SchurFunction::from_table(g, d, table)?
            }
            CocycleSpec::FAlpha { alpha } => {
                let f = make_f_alpha(alpha.len() + 1, &vals(alpha)?, &d)?;
                self.expect_group(f.group())?;
                f
            }
            CocycleSpec::KleinTable { alpha, beta, gamma, eps } => {
                self.expect_group(&klein_group())?;
                let p = vals(&[alpha.clone(), beta.clone(), gamma.clone(), eps.clone()])?;
                klein_table(&p[0], &p[1], &p[2], &p[3])?
            }
            CocycleSpec::Z2z4 { alpha, beta, gamma, delta } => {
                self.expect_group(&z2z4_group())?;
                let p = vals(&[alpha.clone(), beta.clone(), gamma.clone(), delta.clone()])?;
                z2z4_table(&p[0], &p[1], &p[2], &p[3])?
            }
            CocycleSpec::CliffordRho { .. } => return Ok(self.clifford_spec()?.cocycle()),
            CocycleSpec::Coboundary { lambda } => {
                let g = self.need_group()?;
                coboundary(&Lambda::new(g, d.clone(), vals(lambda)?, self.tol())?)
            }
        };
        Ok(Arc::new(f))
    }

    fn expect_group(&self, g: &GroupTable) -> Result<(), CliError> {
        match self.group()? {
            Some(h) if *h != *g => Err(CliError::Usage(format!("the cocycle needs a group of order {} with the standard indexing", g.order()))),
            _ => Ok(()),
        }
    }

    pub fn clifford_spec(&self) -> Result<CliffordSpec, CliError> {
        let d = self.descriptor()?;
        let Some(CocycleSpec::CliffordRho { rho }) = &self.cocycle else {
            return Err(CliError::Usage("the clifford command needs a clifford_rho cocycle".into()));
        };
        let rho = rho.iter().map(|x| parse_value(x, &d)).collect::<Result<Vec<_>, _>>()?;
        let spec = match &self.group {
            None => CliffordSpec::numbered(rho, d, self.tol())?,
            Some(GroupSpec::Subsets { labels }) => CliffordSpec::new(labels, rho, d, self.tol())?,
            Some(_) => return Err(CliError::Usage("clifford_rho needs a subsets group".into())),
        };
        Ok(spec)
    }

    pub fn value(&self, v: &Value) -> Result<RingValue, CliError> {
        parse_value(v, &self.descriptor()?)
    }
}

/// "complex", "real", "quaternion", "laurent", "laurent:N", "laurent:N:real",
/// "matrix:K", "matrix:K:real", or an array of these for a product.
pub fn parse_descriptor(v: &Value) -> Result<RingDescriptor, CliError> {
    let bad = |s: &str| CliError::Usage(format!("unknown ring {s:?}"));
    match v {
        Value::Array(parts) => Ok(RingDescriptor::Product(parts.iter().map(parse_descriptor).collect::<Result<_, _>>()?)),
        Value::String(s) => {
            let parts: Vec<&str> = s.split(':').collect();
            let field = |p: Option<&&str>| match p {
                None | Some(&"complex") => Ok(Field::Complex),
                Some(&"real") => Ok(Field::Real),
                Some(_) => Err(bad(s)),
            };
            let size = |p: Option<&&str>| -> Result<usize, CliError> {
                p.map_or(Ok(1), |x| x.parse().map_err(|_| bad(s)))
            };
            let d = match parts[0] {
                "complex" if parts.len() == 1 => RingDescriptor::ComplexScalar,
                "real" if parts.len() == 1 => RingDescriptor::RealScalar,
                "quaternion" if parts.len() == 1 => RingDescriptor::Quaternion,
                "laurent" if parts.len() <= 3 => RingDescriptor::Laurent { vars: size(parts.get(1))?, field: field(parts.get(2))? },
                "matrix" if (2..=3).contains(&parts.len()) => RingDescriptor::Matrix { size: size(parts.get(1))?, field: field(parts.get(2))? },
                _ => return Err(bad(s)),
            };
            d.validate().map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(d)
        }
        other => Err(CliError::Usage(format!("ring must be a string or an array, got {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors() {
        let p = |s: &str| parse_descriptor(&Value::String(s.into())).unwrap();
        assert_eq!(p("laurent"), RingDescriptor::Laurent { vars: 1, field: Field::Complex });
        assert_eq!(p("matrix:2:real"), RingDescriptor::Matrix { size: 2, field: Field::Real });
        assert!(parse_descriptor(&Value::String("octonion".into())).is_err());
    }

    #[test]
    fn klein_group_checked() {
        let ok = r#"{"group": {"kind": "product", "factors": [2, 2]}, "ring": "real",
            "cocycle": {"kind": "klein_table", "alpha": 1, "beta": 1, "gamma": 1, "eps": -1}}"#;
        assert_eq!(RunConfig::from_str(ok).unwrap().cocycle().unwrap().order(), 4);
        let wrong = ok.replace("[2, 2]", "[4]");
        assert!(matches!(RunConfig::from_str(&wrong).unwrap().cocycle(), Err(CliError::Usage(_))));
    }

    #[test]
    fn rejects_unknown_fields_and_bad_tolerance() {
        assert!(RunConfig::from_str(r#"{"grup": {}}"#).is_err());
        assert!(RunConfig::from_str(r#"{"tol": -1}"#).is_err());
    }
}
