//! Schur functions (normalized 2-cocycles with central unitary values), coboundaries and
//! the classification helpers for cyclic groups.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{invalid, precondition, Error, Result};
use crate::group::{direct_product, make_cyclic, GroupTable};
use crate::ring::{Field, RingDescriptor, RingValue, C64, DEFAULT_TOL};

#[derive(Clone, Debug, PartialEq)]
pub struct SchurFunction {
    group: Arc<GroupTable>,
    descriptor: RingDescriptor,
    values: Vec<RingValue>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    WrongDescriptor { s: String, t: String },
    NotNormalized { residual: f64 },
    NotUnitary { s: String, t: String },
    NotCentral { s: String, t: String },
    UnitLaw { t: String, residual: f64 },
    InverseSymmetry { t: String, residual: f64 },
    Cocycle { r: String, s: String, t: String, residual: f64 },
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Number of cocycle-identity failures, including any past the listing cap.
    pub cocycle_failures: usize,
    pub triples_checked: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

const MAX_LISTED: usize = 1000;

fn same_group(a: &Arc<GroupTable>, b: &Arc<GroupTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl SchurFunction {
    /// Builds a table without checking the cocycle identity; see `validate`.
    pub fn from_fn(
        group: Arc<GroupTable>,
        descriptor: RingDescriptor,
        mut f: impl FnMut(usize, usize) -> RingValue,
    ) -> Result<Self> {
        descriptor.validate()?;
        let n = group.order();
        let mut values = Vec::with_capacity(n * n);
        for s in 0..n {
            for t in 0..n {
                let v = f(s, t);
                if !v.has_descriptor(&descriptor) {
                    return Err(Error::DescriptorMismatch(format!(
                        "entry ({}, {}) has descriptor {:?}, expected {:?}",
                        group.label(s),
                        group.label(t),
                        v.descriptor(),
                        descriptor
                    )));
                }
                values.push(v);
            }
        }
        Ok(SchurFunction {
            group,
            descriptor,
            values,
        })
    }

    pub fn from_table(group: Arc<GroupTable>, descriptor: RingDescriptor, table: Vec<Vec<RingValue>>) -> Result<Self> {
        let n = group.order();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return invalid(format!("cocycle table must be {n}x{n}"));
        }
        SchurFunction::from_fn(group, descriptor, |s, t| table[s][t].clone())
    }

    /// The trivial cocycle f = 1.
    pub fn constant(group: Arc<GroupTable>, descriptor: RingDescriptor) -> Self {
        let one = RingValue::unit(&descriptor);
        SchurFunction::from_fn(group, descriptor, |_, _| one.clone()).expect("unit has the right descriptor")
    }

    /// Builds and validates; a failing report becomes an error listing the first violation.
    pub fn validated(
        group: Arc<GroupTable>,
        descriptor: RingDescriptor,
        f: impl FnMut(usize, usize) -> RingValue,
        tol: f64,
    ) -> Result<Self> {
        let sf = SchurFunction::from_fn(group, descriptor, f)?;
        let report = sf.validate(tol);
        match report.violations.first() {
            None => Ok(sf),
            Some(v) => Err(Error::Relation(format!("not a Schur function: {v:?}"))),
        }
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    #[inline]
    pub fn get(&self, s: usize, t: usize) -> &RingValue {
        &self.values[s * self.group.order() + t]
    }

    /// Copy with one entry replaced (used to test that validation notices mutations).
    pub fn with_entry(&self, s: usize, t: usize, v: RingValue) -> Self {
        let mut c = self.clone();
        let n = self.group.order();
        c.values[s * n + t] = v;
        c
    }

    /// Exhaustive check of normalization, unitarity, centrality and the cocycle identity.
    pub fn validate(&self, tol: f64) -> ValidationReport {
        let g = &*self.group;
        let n = g.order();
        let l = |x: usize| g.label(x).to_string();
        let mut rep = ValidationReport::default();
        let one = RingValue::unit(&self.descriptor);
        let push = |rep: &mut ValidationReport, v: Violation| {
            if rep.violations.len() < MAX_LISTED {
                rep.violations.push(v);
            }
        };
        for s in 0..n {
            for t in 0..n {
                let v = self.get(s, t);
                if !v.has_descriptor(&self.descriptor) {
                    push(&mut rep, Violation::WrongDescriptor { s: l(s), t: l(t) });
                    return rep;
                }
                if !v.is_unitary(tol) {
                    push(&mut rep, Violation::NotUnitary { s: l(s), t: l(t) });
                }
                if !v.is_central(tol) {
                    push(&mut rep, Violation::NotCentral { s: l(s), t: l(t) });
                }
            }
        }
        let r11 = self.get(0, 0).dist(&one);
        if r11 > tol {
            push(&mut rep, Violation::NotNormalized { residual: r11 });
        }
        for t in 0..n {
            let r = self.get(t, 0).dist(&one).max(self.get(0, t).dist(&one));
            if r > tol {
                push(&mut rep, Violation::UnitLaw { t: l(t), residual: r });
            }
            let ti = g.inv(t);
            let r = self.get(t, ti).dist(self.get(ti, t));
            if r > tol {
                push(&mut rep, Violation::InverseSymmetry { t: l(t), residual: r });
            }
        }
        for r in 0..n {
            for s in 0..n {
                let rs = g.mul(r, s);
                let a = self.get(r, s);
                for t in 0..n {
                    let lhs = a.mul(self.get(rs, t));
                    let rhs = self.get(r, g.mul(s, t)).mul(self.get(s, t));
                    let res = lhs.dist(&rhs);
                    rep.triples_checked += 1;
                    if res > tol {
                        rep.cocycle_failures += 1;
                        push(
                            &mut rep,
                            Violation::Cocycle {
                                r: l(r),
                                s: l(s),
                                t: l(t),
                                residual: res,
                            },
                        );
                    }
                }
            }
        }
        rep
    }

    /// f(t, t^-1)*.
    pub fn tilde(&self, t: usize) -> RingValue {
        self.get(t, self.group.inv(t)).star()
    }

    /// (s, t) -> f(t^-1, s^-1).
    pub fn hat(&self) -> SchurFunction {
        let g = self.group.clone();
        SchurFunction {
            values: (0..g.order())
                .flat_map(|s| (0..g.order()).map(move |t| (s, t)))
                .map(|(s, t)| self.get(g.inv(t), g.inv(s)).clone())
                .collect(),
            group: self.group.clone(),
            descriptor: self.descriptor.clone(),
        }
    }

    fn check_compatible(&self, o: &SchurFunction) -> Result<()> {
        if !same_group(&self.group, &o.group) {
            return Err(Error::DescriptorMismatch("cocycles live on different groups".into()));
        }
        if self.descriptor != o.descriptor {
            return Err(Error::DescriptorMismatch(format!(
                "{:?} vs {:?}",
                self.descriptor, o.descriptor
            )));
        }
        Ok(())
    }

    /// Pointwise product.
    pub fn mul(&self, o: &SchurFunction) -> Result<SchurFunction> {
        self.check_compatible(o)?;
        Ok(SchurFunction {
            group: self.group.clone(),
            descriptor: self.descriptor.clone(),
            values: self.values.iter().zip(&o.values).map(|(a, b)| a.mul(b)).collect(),
        })
    }

    /// Pointwise adjoint, the inverse in the group of Schur functions.
    pub fn inverse(&self) -> SchurFunction {
        SchurFunction {
            group: self.group.clone(),
            descriptor: self.descriptor.clone(),
            values: self.values.iter().map(|a| a.star()).collect(),
        }
    }

    pub fn max_distance(&self, o: &SchurFunction) -> Result<f64> {
        self.check_compatible(o)?;
        Ok(self.values.iter().zip(&o.values).map(|(a, b)| a.dist(b)).fold(0.0, f64::max))
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        let n = self.order();
        (0..n).all(|s| (0..s).all(|t| self.get(s, t).dist(self.get(t, s)) <= tol))
    }

    /// Same table viewed as a cocycle with values in a (compatible) bigger ring.
    pub fn map_values(&self, descriptor: RingDescriptor, f: impl Fn(&RingValue) -> RingValue) -> Result<SchurFunction> {
        let n = self.order();
        SchurFunction::from_fn(self.group.clone(), descriptor, |s, t| f(&self.values[s * n + t]))
    }

    pub fn values(&self) -> &[RingValue] {
        &self.values
    }
}

/// A normalized unitary family λ: T → Un(E) with λ(1) = 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Lambda {
    group: Arc<GroupTable>,
    descriptor: RingDescriptor,
    values: Vec<RingValue>,
}

impl Lambda {
    pub fn new(group: Arc<GroupTable>, descriptor: RingDescriptor, values: Vec<RingValue>, tol: f64) -> Result<Self> {
        if values.len() != group.order() {
            return invalid("lambda needs one value per group element");
        }
        if values.iter().any(|v| !v.has_descriptor(&descriptor)) {
            return Err(Error::DescriptorMismatch("lambda value with wrong descriptor".into()));
        }
        if values[0].dist(&RingValue::unit(&descriptor)) > tol {
            return precondition("lambda(1) must be the unit");
        }
        if let Some(t) = values.iter().position(|v| !v.is_unitary(tol) || !v.is_central(tol)) {
            return precondition(format!("lambda({}) is not a central unitary", group.label(t)));
        }
        Ok(Lambda {
            group,
            descriptor,
            values,
        })
    }

    pub fn trivial(group: Arc<GroupTable>, descriptor: RingDescriptor) -> Self {
        let values = vec![RingValue::unit(&descriptor); group.order()];
        Lambda {
            group,
            descriptor,
            values,
        }
    }

    pub fn get(&self, t: usize) -> &RingValue {
        &self.values[t]
    }

    pub fn values(&self) -> &[RingValue] {
        &self.values
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    pub fn mul(&self, o: &Lambda) -> Result<Lambda> {
        if !same_group(&self.group, &o.group) || self.descriptor != o.descriptor {
            return Err(Error::DescriptorMismatch("lambda families do not match".into()));
        }
        Ok(Lambda {
            group: self.group.clone(),
            descriptor: self.descriptor.clone(),
            values: self.values.iter().zip(&o.values).map(|(a, b)| a.mul(b)).collect(),
        })
    }

    pub fn star(&self) -> Lambda {
        Lambda {
            values: self.values.iter().map(|a| a.star()).collect(),
            ..self.clone()
        }
    }

    /// t -> λ(t^-1).
    pub fn hat(&self) -> Lambda {
        Lambda {
            values: (0..self.group.order()).map(|t| self.values[self.group.inv(t)].clone()).collect(),
            ..self.clone()
        }
    }

    /// Same group and descriptor required.
    pub fn rebase(&self, group: Arc<GroupTable>) -> Result<Lambda> {
        if *group != *self.group {
            return invalid("different group");
        }
        Ok(Lambda { group, ..self.clone() })
    }
}

/// δλ(s, t) = λ(s) λ(t) λ(st)*.
pub fn coboundary(l: &Lambda) -> SchurFunction {
    let g = l.group.clone();
    SchurFunction::from_fn(g.clone(), l.descriptor.clone(), |s, t| {
        l.values[s].mul(&l.values[t]).mul(&l.values[g.mul(s, t)].star())
    })
    .expect("lambda values share the descriptor")
}

/// Closed-form value of f(t^m, t^n) from the values f(t^k, t), checked against the table.
pub fn cyclic_power_value(f: &SchurFunction, t: usize, m: i64, n: i64, tol: f64) -> Result<RingValue> {
    let g = f.group();
    // for m < 0 rewrite with t^-1
    let (t, m, n) = if m < 0 { (g.inv(t), -m, -n) } else { (t, m, n) };
    let d = f.descriptor();
    let mut acc = RingValue::unit(d);
    for j in 0..m {
        acc = acc.mul(f.get(g.power(t, n + j), t));
    }
    for k in 1..m {
        acc = acc.mul(&f.get(g.power(t, k), t).star());
    }
    let table = f.get(g.power(t, m), g.power(t, n));
    let r = acc.dist(table);
    if r > tol {
        return Err(Error::Relation(format!(
            "power formula disagrees with the table at t={}, m={m}, n={n} (residual {r:.3e})",
            g.label(t)
        )));
    }
    Ok(acc)
}

/// A cocycle on Z known only on the window |m|, |n| ≤ radius.
#[derive(Clone, Debug, PartialEq)]
pub struct ZWindow {
    radius: i64,
    descriptor: RingDescriptor,
    values: Vec<Option<RingValue>>,
}

impl ZWindow {
    pub fn from_fn(radius: usize, descriptor: RingDescriptor, mut f: impl FnMut(i64, i64) -> Option<RingValue>) -> Self {
        let r = radius as i64;
        let mut values = Vec::new();
        for m in -r..=r {
            for n in -r..=r {
                values.push(f(m, n));
            }
        }
        ZWindow {
            radius: r,
            descriptor,
            values,
        }
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn get(&self, m: i64, n: i64) -> Option<&RingValue> {
        let r = self.radius;
        if m.abs() > r || n.abs() > r {
            return None;
        }
        let w = 2 * r + 1;
        self.values[((m + r) * w + (n + r)) as usize].as_ref()
    }

    /// Largest difference over entries defined in both windows.
    pub fn max_distance(&self, o: &ZWindow) -> f64 {
        let r = self.radius.min(o.radius);
        let mut worst: f64 = 0.0;
        for m in -r..=r {
            for n in -r..=r {
                if let (Some(a), Some(b)) = (self.get(m, n), o.get(m, n)) {
                    worst = worst.max(a.dist(b));
                }
            }
        }
        worst
    }

    /// Number of entries defined in both windows.
    pub fn overlap(&self, o: &ZWindow) -> usize {
        let r = self.radius.min(o.radius);
        (-r..=r)
            .flat_map(|m| (-r..=r).map(move |n| (m, n)))
            .filter(|&(m, n)| self.get(m, n).is_some() && o.get(m, n).is_some())
            .count()
    }
}

/// λ on [-radius, radius].
#[derive(Clone, Debug, PartialEq)]
pub struct ZLambda {
    radius: i64,
    descriptor: RingDescriptor,
    values: Vec<RingValue>,
}

impl ZLambda {
    pub fn from_fn(radius: usize, descriptor: RingDescriptor, mut f: impl FnMut(i64) -> RingValue) -> Self {
        let r = radius as i64;
        ZLambda {
            radius: r,
            values: (-r..=r).map(&mut f).collect(),
            descriptor,
        }
    }

    pub fn get(&self, n: i64) -> &RingValue {
        &self.values[(n + self.radius) as usize]
    }

    /// δλ on the window, defined where m + n stays inside it.
    pub fn coboundary(&self) -> ZWindow {
        let r = self.radius;
        ZWindow::from_fn(r as usize, self.descriptor.clone(), |m, n| {
            ((m + n).abs() <= r).then(|| self.get(m).mul(self.get(n)).mul(&self.get(m + n).star()))
        })
    }
}

/// Recovers λ with δλ = f on a window: λ(n) = ∏_{j<n} f(j,1)* for n ≥ 1 and
/// λ(n) = ∏_{j=1}^{-n} f(-j,1) for n ≤ 0.
pub fn z_coboundary_witness(f: &ZWindow) -> Result<ZLambda> {
    let r = f.radius;
    if r < 2 {
        return invalid("window radius must be at least 2");
    }
    let d = f.descriptor.clone();
    let at = |m: i64| {
        f.get(m, 1)
            .cloned()
            .ok_or_else(|| Error::InvalidInput(format!("window lacks f({m},1)")))
    };
    let mut values = Vec::with_capacity((2 * r + 1) as usize);
    for n in -r..=r {
        let mut acc = RingValue::unit(&d);
        if n >= 1 {
            for j in 1..n {
                acc = acc.mul(&at(j)?.star());
            }
        } else {
            for j in 1..=-n {
                acc = acc.mul(&at(-j)?);
            }
        }
        values.push(acc);
    }
    Ok(ZLambda {
        radius: r,
        descriptor: d,
        values,
    })
}

fn check_parameters(params: &[RingValue], tol: f64) -> Result<RingDescriptor> {
    let d = params
        .first()
        .map(|p| p.descriptor())
        .ok_or_else(|| Error::InvalidInput("empty parameter list".into()))?;
    for (i, p) in params.iter().enumerate() {
        if p.descriptor() != d {
            return Err(Error::DescriptorMismatch(format!("parameter {} has a different descriptor", i + 1)));
        }
        if !p.is_unitary(tol) || !p.is_central(tol) {
            return precondition(format!("parameter {} is not a central unitary", i + 1));
        }
    }
    Ok(d)
}

/// The cocycle f_α on Z/n from α_1..α_{n-1} (α_n = 1):
/// f(p,q) = ∏_{j=p}^{p+q-1} α_j · ∏_{k=1}^{q-1} α_k*, with 0 read as n.
pub fn make_f_alpha(n: usize, alpha: &[RingValue], descriptor: &RingDescriptor) -> Result<SchurFunction> {
    if n == 0 {
        return invalid("cyclic group of order 0");
    }
    if alpha.len() != n - 1 {
        return invalid(format!("Z/{n} needs {} parameters, got {}", n - 1, alpha.len()));
    }
    if !alpha.is_empty() {
        let d = check_parameters(alpha, DEFAULT_TOL)?;
        if d != *descriptor {
            return Err(Error::DescriptorMismatch("parameters do not match the descriptor".into()));
        }
    }
    let one = RingValue::unit(descriptor);
    let a = |j: usize| -> &RingValue {
        let k = (j - 1) % n + 1;
        if k == n {
            &one
        } else {
            &alpha[k - 1]
        }
    };
    let g = Arc::new(make_cyclic(n)?);
    SchurFunction::from_fn(g, descriptor.clone(), |p, q| {
        let (p, q) = (if p == 0 { n } else { p }, if q == 0 { n } else { q });
        let mut acc = one.clone();
        for j in p..p + q {
            acc = acc.mul(a(j));
        }
        for k in 1..q {
            acc = acc.mul(&a(k).star());
        }
        acc
    })
}

/// λ with f_α = f_β · δλ, if the needed n-th root of ∏ α_j β_j* exists.
pub fn equivalent_cyclic(alpha: &[RingValue], beta: &[RingValue], descriptor: &RingDescriptor) -> Result<Option<Lambda>> {
    if alpha.len() != beta.len() {
        return invalid("parameter vectors differ in length");
    }
    let n = alpha.len() + 1;
    let g = Arc::new(make_cyclic(n)?);
    if alpha.is_empty() {
        return Ok(Some(Lambda::trivial(g, descriptor.clone())));
    }
    for p in [alpha, beta] {
        if check_parameters(p, DEFAULT_TOL)? != *descriptor {
            return Err(Error::DescriptorMismatch("parameters do not match the descriptor".into()));
        }
    }
    let mut u = RingValue::unit(descriptor);
    for (a, b) in alpha.iter().zip(beta) {
        u = u.mul(a).mul(&b.star());
    }
    let Some(gamma) = u.central_root(n as u32)? else {
        return Ok(None);
    };
    let mut values = vec![RingValue::unit(descriptor)];
    let mut corr = RingValue::unit(descriptor);
    for p in 1..n {
        if p >= 2 {
            corr = corr.mul(&alpha[p - 2].star()).mul(&beta[p - 2]);
        }
        values.push(gamma.pow(p as u32).mul(&corr));
    }
    Ok(Some(Lambda::new(g, descriptor.clone(), values, crate::ring::LAURENT_TOL)?))
}

/// Exponent of variable `var` in a unimodular Laurent monomial c·z^k.
pub fn winding(u: &RingValue, var: usize) -> Result<i32> {
    match u {
        RingValue::Laurent(l) => {
            if var >= l.vars() {
                return invalid(format!("variable {var} out of range"));
            }
            let (e, c) = l
                .as_monomial()
                .ok_or_else(|| Error::NotMonomial(format!("{} terms", l.terms().len())))?;
            if (c.norm() - 1.0).abs() > DEFAULT_TOL {
                return Err(Error::NotMonomial(format!("coefficient modulus {}", c.norm())));
            }
            Ok(e[var])
        }
        RingValue::Complex(_) | RingValue::Real(_) if u.is_unitary(DEFAULT_TOL) => Ok(0),
        _ => invalid("winding needs a Laurent monomial"),
    }
}

/// One δλ-class of f_α parameter vectors on Z/n.
#[derive(Clone, Debug)]
pub struct CyclicClass {
    pub representative: usize,
    /// (input index, λ with f_member = f_representative · δλ)
    pub members: Vec<(usize, Lambda)>,
}

/// Partitions parameter vectors into classes of cohomologous f_α.
pub fn classify_cyclic(params: &[Vec<RingValue>], descriptor: &RingDescriptor) -> Result<Vec<CyclicClass>> {
    match descriptor {
        RingDescriptor::ComplexScalar => {}
        RingDescriptor::Laurent { vars: 1, field: Field::Complex } => {}
        other => return invalid(format!("classification supports complex scalars and one-variable Laurent rings, not {other:?}")),
    }
    let mut classes: Vec<CyclicClass> = Vec::new();
    'outer: for (i, p) in params.iter().enumerate() {
        for c in classes.iter_mut() {
            if let Some(l) = equivalent_cyclic(p, &params[c.representative], descriptor)? {
                c.members.push((i, l));
                continue 'outer;
            }
        }
        let n = p.len() + 1;
        let g = Arc::new(make_cyclic(n)?);
        classes.push(CyclicClass {
            representative: i,
            members: vec![(i, Lambda::trivial(g, descriptor.clone()))],
        });
    }
    Ok(classes)
}

/// h((t1,s1),(t2,s2)) = f(t1,t2) ⊗ g(s1,s2) on the direct product.
pub fn tensor_cocycle(f: &SchurFunction, g: &SchurFunction) -> Result<SchurFunction> {
    let d = f.descriptor().tensor(g.descriptor())?;
    let grp = Arc::new(direct_product(f.group(), g.group())?);
    let m = g.order();
    let mut err = None;
    let h = SchurFunction::from_fn(grp, d.clone(), |a, b| {
        match f.get(a / m, b / m).tensor(g.get(a % m, b % m)) {
            Ok(v) => v,
            Err(e) => {
                err = Some(e);
                RingValue::unit(&d)
            }
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(h),
    }
}

/// [δ_ij f(s,t)]: the same cocycle with values in k×k matrices.
pub fn amplify(f: &SchurFunction, k: usize) -> Result<SchurFunction> {
    if k == 0 {
        return invalid("amplification size must be positive");
    }
    let field = f.descriptor().field();
    let id = RingValue::unit(&RingDescriptor::Matrix { size: k, field });
    let d = match f.descriptor() {
        RingDescriptor::ComplexScalar | RingDescriptor::RealScalar | RingDescriptor::Matrix { .. } => {
            f.descriptor().tensor(&id.descriptor())?
        }
        other => return invalid(format!("cannot amplify {other:?}")),
    };
    let n = f.order();
    let mut table = Vec::with_capacity(n);
    for s in 0..n {
        let mut row = Vec::with_capacity(n);
        for t in 0..n {
            row.push(f.get(s, t).tensor(&id)?);
        }
        table.push(row);
    }
    SchurFunction::from_table(f.group().clone(), d, table)
}

/// The Klein four-group Z/2 × Z/2 with a=(1,0), b=(0,1), c=(1,1).
pub fn klein_group() -> Arc<GroupTable> {
    let z2 = make_cyclic(2).expect("Z/2");
    Arc::new(direct_product(&z2, &z2).expect("Klein four"))
}

pub const KLEIN_A: usize = 2;
pub const KLEIN_B: usize = 1;
pub const KLEIN_C: usize = 3;

/// The four-parameter family on the Klein group:
///
/// ```text
///       a      b      c
///  a   βγ     γ      β
///  b   εγ     εαγ    α
///  c   εβ     εα     αβ
/// ```
pub fn klein_table(alpha: &RingValue, beta: &RingValue, gamma: &RingValue, eps: &RingValue) -> Result<SchurFunction> {
    let d = check_parameters(&[alpha.clone(), beta.clone(), gamma.clone(), eps.clone()], DEFAULT_TOL)?;
    let one = RingValue::unit(&d);
    if eps.mul(eps).dist(&one) > DEFAULT_TOL {
        return precondition("eps must square to 1");
    }
    let (a, b, c) = (KLEIN_A, KLEIN_B, KLEIN_C);
    SchurFunction::from_fn(klein_group(), d, |s, t| {
        if s == 0 || t == 0 {
            return one.clone();
        }
        let v = |s, t| -> RingValue {
            match (s, t) {
                (x, y) if x == a && y == a => beta.mul(gamma),
                (x, y) if x == a && y == b => gamma.clone(),
                (x, y) if x == a && y == c => beta.clone(),
                (x, y) if x == b && y == a => eps.mul(gamma),
                (x, y) if x == b && y == b => eps.mul(alpha).mul(gamma),
                (x, y) if x == b && y == c => alpha.clone(),
                (x, y) if x == c && y == a => eps.mul(beta),
                (x, y) if x == c && y == b => eps.mul(alpha),
                _ => alpha.mul(beta),
            }
        };
        v(s, t)
    })
}

/// Convenience: a complex scalar parameter.
pub fn cx(re: f64, im: f64) -> RingValue {
    RingValue::Complex(C64::new(re, im))
}
