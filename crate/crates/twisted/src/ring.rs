//! Coefficient *-algebras E: complex and real scalars, Laurent polynomials on a torus,
//! square matrices, quaternions and finite products of these.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{invalid, Error, Result};

pub type C64 = Complex64;

pub const DEFAULT_GRID: usize = 64;
pub const DEFAULT_TOL: f64 = 1e-9;
pub const LAURENT_TOL: f64 = 1e-6;

const I: C64 = C64::new(0.0, 1.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Real,
    Complex,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    ComplexScalar,
    RealScalar,
    Laurent { vars: usize, field: Field },
    Matrix { size: usize, field: Field },
    Quaternion,
    Product(Vec<RingDescriptor>),
}

impl RingDescriptor {
    pub fn validate(&self) -> Result<()> {
        match self {
            RingDescriptor::Laurent { vars, .. } if *vars == 0 => invalid("Laurent ring needs at least one variable"),
            RingDescriptor::Matrix { size, .. } if *size == 0 => invalid("matrix size must be positive"),
            RingDescriptor::Product(parts) => {
                if parts.is_empty() {
                    return invalid("empty product ring");
                }
                parts.iter().try_for_each(|p| p.validate())
            }
            _ => Ok(()),
        }
    }

    /// Complex only if every piece is a complex algebra.
    pub fn field(&self) -> Field {
        match self {
            RingDescriptor::ComplexScalar => Field::Complex,
            RingDescriptor::RealScalar | RingDescriptor::Quaternion => Field::Real,
            RingDescriptor::Laurent { field, .. } | RingDescriptor::Matrix { field, .. } => *field,
            RingDescriptor::Product(parts) => {
                if parts.iter().all(|p| p.field() == Field::Complex) {
                    Field::Complex
                } else {
                    Field::Real
                }
            }
        }
    }

    pub fn is_commutative(&self) -> bool {
        match self {
            RingDescriptor::Matrix { size, .. } => *size == 1,
            RingDescriptor::Quaternion => false,
            RingDescriptor::Product(parts) => parts.iter().all(|p| p.is_commutative()),
            _ => true,
        }
    }

    pub fn is_laurent(&self) -> bool {
        match self {
            RingDescriptor::Laurent { .. } => true,
            RingDescriptor::Product(parts) => parts.iter().any(|p| p.is_laurent()),
            _ => false,
        }
    }

    /// Number of torus variables needed to evaluate values of this ring.
    pub fn torus_vars(&self) -> usize {
        match self {
            RingDescriptor::Laurent { vars, .. } => *vars,
            RingDescriptor::Product(parts) => parts.iter().map(|p| p.torus_vars()).max().unwrap_or(0),
            _ => 0,
        }
    }

    /// Real dimension, with Laurent rings truncated to exponents in [-window, window].
    pub fn real_dim(&self, window: i32) -> usize {
        let w = |f: &Field| if *f == Field::Complex { 2 } else { 1 };
        match self {
            RingDescriptor::ComplexScalar => 2,
            RingDescriptor::RealScalar => 1,
            RingDescriptor::Laurent { vars, field } => (2 * window as usize + 1).pow(*vars as u32) * w(field),
            RingDescriptor::Matrix { size, field } => size * size * w(field),
            RingDescriptor::Quaternion => 4,
            RingDescriptor::Product(parts) => parts.iter().map(|p| p.real_dim(window)).sum(),
        }
    }

    /// Size of the complex block a value evaluates to.
    pub fn block_size(&self) -> usize {
        match self {
            RingDescriptor::Matrix { size, .. } => *size,
            RingDescriptor::Quaternion => 2,
            RingDescriptor::Product(parts) => parts.iter().map(|p| p.block_size()).sum(),
            _ => 1,
        }
    }

    pub fn tensor(&self, other: &RingDescriptor) -> Result<RingDescriptor> {
        use RingDescriptor::*;
        let join = |a: Field, b: Field| if a == Field::Complex || b == Field::Complex { Field::Complex } else { Field::Real };
        Ok(match (self, other) {
            (RealScalar, RealScalar) => RealScalar,
            (ComplexScalar | RealScalar, ComplexScalar | RealScalar) => ComplexScalar,
            (RealScalar, d) | (d, RealScalar) => d.clone(),
            (ComplexScalar, d) | (d, ComplexScalar) if d.field() == Field::Complex => d.clone(),
            (Matrix { size: a, field: f }, Matrix { size: b, field: g }) => Matrix {
                size: a * b,
                field: join(*f, *g),
            },
            (Laurent { vars: a, field: f }, Laurent { vars: b, field: g }) => Laurent {
                vars: a + b,
                field: join(*f, *g),
            },
            _ => {
                return Err(Error::DescriptorMismatch(format!(
                    "unsupported tensor product {self:?} with {other:?}"
                )))
            }
        })
    }
}

/// Laurent polynomial in `vars` torus variables; z* = z^-1 on the torus.
#[derive(Clone, Debug, PartialEq)]
pub struct Laurent {
    vars: usize,
    field: Field,
    terms: BTreeMap<Vec<i32>, C64>,
}

impl Laurent {
    pub fn zero(vars: usize, field: Field) -> Self {
        Laurent {
            vars,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(vars: usize, field: Field, exps: Vec<i32>, c: C64) -> Self {
        assert_eq!(exps.len(), vars, "exponent vector length");
        let mut l = Laurent::zero(vars, field);
        if c != C64::new(0.0, 0.0) {
            l.terms.insert(exps, check_field(field, c));
        }
        l
    }

    pub fn constant(vars: usize, field: Field, c: C64) -> Self {
        Laurent::monomial(vars, field, vec![0; vars], c)
    }

    /// The coordinate function z_k (0-based).
    pub fn variable(vars: usize, field: Field, k: usize) -> Self {
        let mut e = vec![0; vars];
        e[k] = 1;
        Laurent::monomial(vars, field, e, C64::new(1.0, 0.0))
    }

    pub fn from_terms(vars: usize, field: Field, terms: impl IntoIterator<Item = (Vec<i32>, C64)>) -> Result<Self> {
        let mut l = Laurent::zero(vars, field);
        for (e, c) in terms {
            if e.len() != vars {
                return invalid("exponent vector length does not match variable count");
            }
            if field == Field::Real && c.im != 0.0 {
                return invalid("real Laurent polynomial with complex coefficient");
            }
            *l.terms.entry(e).or_insert(C64::new(0.0, 0.0)) += c;
        }
        l.prune();
        Ok(l)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, C64> {
        &self.terms
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| *c != C64::new(0.0, 0.0));
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            *r.terms.entry(e.clone()).or_insert(C64::new(0.0, 0.0)) += c;
        }
        r.prune();
        r
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        let mut r = Laurent::zero(self.vars, self.field);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *r.terms.entry(e).or_insert(C64::new(0.0, 0.0)) += c1 * c2;
            }
        }
        r.prune();
        r
    }

    pub fn scale(&self, c: C64) -> Laurent {
        let c = check_field(self.field, c);
        let mut r = self.clone();
        for v in r.terms.values_mut() {
            *v *= c;
        }
        r.prune();
        r
    }

    pub fn star(&self) -> Laurent {
        let mut r = Laurent::zero(self.vars, self.field);
        for (e, c) in &self.terms {
            r.terms.insert(e.iter().map(|x| -x).collect(), c.conj());
        }
        r
    }

    pub fn eval(&self, point: &[C64]) -> C64 {
        self.terms
            .iter()
            .map(|(e, c)| e.iter().zip(point).fold(*c, |acc, (k, z)| acc * z.powi(*k)))
            .sum()
    }

    /// Single term c·z^k, if the polynomial is one.
    pub fn as_monomial(&self) -> Option<(&Vec<i32>, C64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (e, *c))
        } else {
            None
        }
    }

    pub fn max_degree(&self) -> i32 {
        self.terms.keys().flat_map(|e| e.iter().map(|x| x.abs())).max().unwrap_or(0)
    }

    /// p(z) -> p(z^2).
    pub fn substitute_square(&self) -> Laurent {
        let mut r = Laurent::zero(self.vars, self.field);
        for (e, c) in &self.terms {
            r.terms.insert(e.iter().map(|x| 2 * x).collect(), *c);
        }
        r
    }

    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

fn check_field(field: Field, c: C64) -> C64 {
    if field == Field::Real {
        assert!(c.im.abs() <= 1e-12, "complex scalar {c} applied to a real algebra");
        C64::new(c.re, 0.0)
    } else {
        c
    }
}

fn quat_mul(p: &[f64; 4], q: &[f64; 4]) -> [f64; 4] {
    [
        p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
        p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
        p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
        p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0],
    ]
}

/// Principal n-th root of a complex number.
pub fn complex_root(c: C64, n: u32) -> C64 {
    if c == C64::new(0.0, 0.0) {
        return c;
    }
    C64::from_polar(c.norm().powf(1.0 / n as f64), c.arg() / n as f64)
}

fn real_root(x: f64, n: u32) -> Option<f64> {
    if n % 2 == 1 {
        Some(x.signum() * x.abs().powf(1.0 / n as f64))
    } else if x >= 0.0 {
        Some(x.powf(1.0 / n as f64))
    } else {
        None
    }
}

fn field_root(field: Field, c: C64, n: u32) -> Option<C64> {
    match field {
        Field::Complex => Some(complex_root(c, n)),
        Field::Real => real_root(c.re, n).map(|r| C64::new(r, 0.0)),
    }
}

/// All exponent vectors in [-window, window]^vars, lexicographic.
pub fn window_exponents(vars: usize, window: i32) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for _ in 0..vars {
        let mut next = Vec::new();
        for e in &out {
            for k in -window..=window {
                let mut v = e.clone();
                v.push(k);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// An element of one of the coefficient rings.
#[derive(Clone, Debug, PartialEq)]
pub enum RingValue {
    Complex(C64),
    Real(f64),
    Laurent(Laurent),
    Matrix(Field, DMatrix<C64>),
    Quaternion([f64; 4]),
    Product(Vec<RingValue>),
}

impl RingValue {
    pub fn descriptor(&self) -> RingDescriptor {
        match self {
            RingValue::Complex(_) => RingDescriptor::ComplexScalar,
            RingValue::Real(_) => RingDescriptor::RealScalar,
            RingValue::Laurent(l) => RingDescriptor::Laurent {
                vars: l.vars,
                field: l.field,
            },
            RingValue::Matrix(f, m) => RingDescriptor::Matrix {
                size: m.nrows(),
                field: *f,
            },
            RingValue::Quaternion(_) => RingDescriptor::Quaternion,
            RingValue::Product(v) => RingDescriptor::Product(v.iter().map(|x| x.descriptor()).collect()),
        }
    }

    pub fn has_descriptor(&self, d: &RingDescriptor) -> bool {
        match (self, d) {
            (RingValue::Complex(_), RingDescriptor::ComplexScalar) | (RingValue::Real(_), RingDescriptor::RealScalar) => true,
            (RingValue::Quaternion(_), RingDescriptor::Quaternion) => true,
            (RingValue::Laurent(l), RingDescriptor::Laurent { vars, field }) => l.vars == *vars && l.field == *field,
            (RingValue::Matrix(f, m), RingDescriptor::Matrix { size, field }) => f == field && m.nrows() == *size,
            (RingValue::Product(v), RingDescriptor::Product(ds)) => {
                v.len() == ds.len() && v.iter().zip(ds).all(|(x, d)| x.has_descriptor(d))
            }
            _ => false,
        }
    }

    /// c·1 in the ring described by `d`.
    pub fn scalar(d: &RingDescriptor, c: C64) -> RingValue {
        match d {
            RingDescriptor::ComplexScalar => RingValue::Complex(c),
            RingDescriptor::RealScalar => RingValue::Real(check_field(Field::Real, c).re),
            RingDescriptor::Laurent { vars, field } => RingValue::Laurent(Laurent::constant(*vars, *field, c)),
            RingDescriptor::Matrix { size, field } => {
                RingValue::Matrix(*field, DMatrix::identity(*size, *size) * check_field(*field, c))
            }
            RingDescriptor::Quaternion => RingValue::Quaternion([check_field(Field::Real, c).re, 0.0, 0.0, 0.0]),
            RingDescriptor::Product(ds) => RingValue::Product(ds.iter().map(|d| RingValue::scalar(d, c)).collect()),
        }
    }

    pub fn zero(d: &RingDescriptor) -> RingValue {
        RingValue::scalar(d, C64::new(0.0, 0.0))
    }

    pub fn unit(d: &RingDescriptor) -> RingValue {
        RingValue::scalar(d, C64::new(1.0, 0.0))
    }

    pub fn real(d: &RingDescriptor, x: f64) -> RingValue {
        RingValue::scalar(d, C64::new(x, 0.0))
    }

    fn mismatch(&self, o: &RingValue) -> Error {
        Error::DescriptorMismatch(format!("{:?} vs {:?}", self.descriptor(), o.descriptor()))
    }

    fn zip(&self, o: &RingValue, op: &str) -> Result<()> {
        if self.descriptor() == o.descriptor() {
            Ok(())
        } else {
            let _ = op;
            Err(self.mismatch(o))
        }
    }

    pub fn try_add(&self, o: &RingValue) -> Result<RingValue> {
        self.zip(o, "add")?;
        Ok(self.add(o))
    }

    pub fn try_mul(&self, o: &RingValue) -> Result<RingValue> {
        self.zip(o, "mul")?;
        Ok(self.mul(o))
    }

    /// Sum; panics on descriptor mismatch (use `try_add` at API boundaries).
    pub fn add(&self, o: &RingValue) -> RingValue {
        match (self, o) {
            (RingValue::Complex(a), RingValue::Complex(b)) => RingValue::Complex(a + b),
            (RingValue::Real(a), RingValue::Real(b)) => RingValue::Real(a + b),
            (RingValue::Laurent(a), RingValue::Laurent(b)) if a.vars == b.vars => RingValue::Laurent(a.add(b)),
            (RingValue::Matrix(f, a), RingValue::Matrix(g, b)) if f == g && a.shape() == b.shape() => {
                RingValue::Matrix(*f, a + b)
            }
            (RingValue::Quaternion(a), RingValue::Quaternion(b)) => {
                RingValue::Quaternion([a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]])
            }
            (RingValue::Product(a), RingValue::Product(b)) if a.len() == b.len() => {
                RingValue::Product(a.iter().zip(b).map(|(x, y)| x.add(y)).collect())
            }
            _ => panic!("{}", self.mismatch(o)),
        }
    }

    pub fn neg(&self) -> RingValue {
        self.scale(C64::new(-1.0, 0.0))
    }

    pub fn sub(&self, o: &RingValue) -> RingValue {
        self.add(&o.neg())
    }

    /// Product; panics on descriptor mismatch (use `try_mul` at API boundaries).
    pub fn mul(&self, o: &RingValue) -> RingValue {
        match (self, o) {
            (RingValue::Complex(a), RingValue::Complex(b)) => RingValue::Complex(a * b),
            (RingValue::Real(a), RingValue::Real(b)) => RingValue::Real(a * b),
            (RingValue::Laurent(a), RingValue::Laurent(b)) if a.vars == b.vars => RingValue::Laurent(a.mul(b)),
            (RingValue::Matrix(f, a), RingValue::Matrix(g, b)) if f == g && a.shape() == b.shape() => {
                RingValue::Matrix(*f, a * b)
            }
            (RingValue::Quaternion(a), RingValue::Quaternion(b)) => RingValue::Quaternion(quat_mul(a, b)),
            (RingValue::Product(a), RingValue::Product(b)) if a.len() == b.len() => {
                RingValue::Product(a.iter().zip(b).map(|(x, y)| x.mul(y)).collect())
            }
            _ => panic!("{}", self.mismatch(o)),
        }
    }

    /// Multiplication by a number. Panics if `c` is not real and the ring is real.
    pub fn scale(&self, c: C64) -> RingValue {
        match self {
            RingValue::Complex(a) => RingValue::Complex(a * c),
            RingValue::Real(a) => RingValue::Real(a * check_field(Field::Real, c).re),
            RingValue::Laurent(l) => RingValue::Laurent(l.scale(c)),
            RingValue::Matrix(f, m) => RingValue::Matrix(*f, m * check_field(*f, c)),
            RingValue::Quaternion(q) => {
                let r = check_field(Field::Real, c).re;
                RingValue::Quaternion([q[0] * r, q[1] * r, q[2] * r, q[3] * r])
            }
            RingValue::Product(v) => RingValue::Product(v.iter().map(|x| x.scale(c)).collect()),
        }
    }

    pub fn scale_real(&self, x: f64) -> RingValue {
        self.scale(C64::new(x, 0.0))
    }

    pub fn star(&self) -> RingValue {
        match self {
            RingValue::Complex(a) => RingValue::Complex(a.conj()),
            RingValue::Real(a) => RingValue::Real(*a),
            RingValue::Laurent(l) => RingValue::Laurent(l.star()),
            RingValue::Matrix(f, m) => RingValue::Matrix(*f, m.adjoint()),
            RingValue::Quaternion(q) => RingValue::Quaternion([q[0], -q[1], -q[2], -q[3]]),
            RingValue::Product(v) => RingValue::Product(v.iter().map(|x| x.star()).collect()),
        }
    }

    /// a^k for k >= 0.
    pub fn pow(&self, k: u32) -> RingValue {
        let mut acc = RingValue::unit(&self.descriptor());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// a^k for unitary a and any integer k (negative powers use the adjoint).
    pub fn unitary_pow(&self, k: i64) -> RingValue {
        if k >= 0 {
            self.pow(k as u32)
        } else {
            self.star().pow((-k) as u32)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.max_abs() == 0.0
    }

    /// Largest absolute value of a stored coefficient. Exact for Laurent polynomials.
    pub fn max_abs(&self) -> f64 {
        match self {
            RingValue::Complex(a) => a.norm(),
            RingValue::Real(a) => a.abs(),
            RingValue::Laurent(l) => l.max_abs(),
            RingValue::Matrix(_, m) => m.iter().map(|c| c.norm()).fold(0.0, f64::max),
            RingValue::Quaternion(q) => q.iter().map(|x| x.abs()).fold(0.0, f64::max),
            RingValue::Product(v) => v.iter().map(|x| x.max_abs()).fold(0.0, f64::max),
        }
    }

    pub fn dist(&self, o: &RingValue) -> f64 {
        self.sub(o).max_abs()
    }

    /// Value at a torus point as a complex block (quaternions as 2x2 complex matrices).
    pub fn eval_block(&self, point: &[C64]) -> DMatrix<C64> {
        match self {
            RingValue::Complex(a) => DMatrix::from_element(1, 1, *a),
            RingValue::Real(a) => DMatrix::from_element(1, 1, C64::new(*a, 0.0)),
            RingValue::Laurent(l) => DMatrix::from_element(1, 1, l.eval(&point[..l.vars])),
            RingValue::Matrix(_, m) => m.clone(),
            RingValue::Quaternion(q) => DMatrix::from_row_slice(
                2,
                2,
                &[
                    C64::new(q[0], q[1]),
                    C64::new(q[2], q[3]),
                    C64::new(-q[2], q[3]),
                    C64::new(q[0], -q[1]),
                ],
            ),
            RingValue::Product(v) => {
                let blocks: Vec<DMatrix<C64>> = v.iter().map(|x| x.eval_block(point)).collect();
                let n: usize = blocks.iter().map(|b| b.nrows()).sum();
                let mut m = DMatrix::zeros(n, n);
                let mut off = 0;
                for b in blocks {
                    let k = b.nrows();
                    m.view_mut((off, off), (k, k)).copy_from(&b);
                    off += k;
                }
                m
            }
        }
    }

    /// C*-norm. Laurent values use the sup over a uniform grid^m torus sample.
    pub fn norm(&self, grid: usize) -> f64 {
        match self {
            RingValue::Complex(a) => a.norm(),
            RingValue::Real(a) => a.abs(),
            RingValue::Laurent(l) => torus_grid(l.vars, grid)
                .map(|p| l.eval(&p).norm())
                .fold(0.0, f64::max),
            RingValue::Matrix(_, m) => spectral_norm(m),
            RingValue::Quaternion(q) => q.iter().map(|x| x * x).sum::<f64>().sqrt(),
            RingValue::Product(v) => v.iter().map(|x| x.norm(grid)).fold(0.0, f64::max),
        }
    }

    /// ‖a a* − 1‖ ≤ tol and ‖a* a − 1‖ ≤ tol. Laurent values are checked on the default grid.
    pub fn is_unitary(&self, tol: f64) -> bool {
        let one = RingValue::unit(&self.descriptor());
        let left = self.mul(&self.star()).sub(&one);
        let right = self.star().mul(self).sub(&one);
        let n = |x: &RingValue| if x.is_zero() { 0.0 } else { x.norm(DEFAULT_GRID) };
        n(&left) <= tol && n(&right) <= tol
    }

    pub fn is_central(&self, tol: f64) -> bool {
        match self {
            RingValue::Complex(_) | RingValue::Real(_) | RingValue::Laurent(_) => true,
            RingValue::Matrix(_, m) => {
                let c = m[(0, 0)];
                let diff = m - DMatrix::identity(m.nrows(), m.ncols()) * c;
                spectral_norm(&diff) <= tol
            }
            RingValue::Quaternion(q) => (q[1] * q[1] + q[2] * q[2] + q[3] * q[3]).sqrt() <= tol,
            RingValue::Product(v) => v.iter().all(|x| x.is_central(tol)),
        }
    }

    /// The number c with self = c·1, when there is one.
    pub fn as_scalar(&self, tol: f64) -> Option<C64> {
        match self {
            RingValue::Complex(a) => Some(*a),
            RingValue::Real(a) => Some(C64::new(*a, 0.0)),
            RingValue::Laurent(l) => match l.terms.len() {
                0 => Some(C64::new(0.0, 0.0)),
                1 => l.terms.get(&vec![0; l.vars]).copied(),
                _ => None,
            },
            RingValue::Matrix(..) | RingValue::Quaternion(_) => {
                if self.is_central(tol) {
                    match self {
                        RingValue::Matrix(_, m) => Some(m[(0, 0)]),
                        RingValue::Quaternion(q) => Some(C64::new(q[0], 0.0)),
                        _ => unreachable!(),
                    }
                } else {
                    None
                }
            }
            RingValue::Product(v) => {
                let first = v.first()?.as_scalar(tol)?;
                if v.iter().all(|x| x.as_scalar(tol).map(|c| (c - first).norm() <= tol) == Some(true)) {
                    Some(first)
                } else {
                    None
                }
            }
        }
    }

    /// Some central unitary γ with γ^n = self, or None if there is none.
    /// Scalars use the principal branch; Laurent monomials halve exponents exactly.
    pub fn central_root(&self, n: u32) -> Result<Option<RingValue>> {
        if n == 0 {
            return invalid("root of order 0");
        }
        Ok(match self {
            RingValue::Complex(c) => Some(RingValue::Complex(complex_root(*c, n))),
            RingValue::Real(x) => real_root(*x, n).map(RingValue::Real),
            RingValue::Laurent(l) => {
                if l.terms.is_empty() {
                    return Some(Ok(Some(self.clone()))).unwrap();
                }
                let (e, c) = l
                    .as_monomial()
                    .ok_or_else(|| Error::NotMonomial(format!("{} terms", l.terms.len())))?;
                if e.iter().any(|k| k % n as i32 != 0) {
                    None
                } else {
                    field_root(l.field, c, n).map(|r| {
                        RingValue::Laurent(Laurent::monomial(l.vars, l.field, e.iter().map(|k| k / n as i32).collect(), r))
                    })
                }
            }
            RingValue::Matrix(f, m) => {
                if !self.is_central(DEFAULT_TOL) {
                    return Err(Error::Precondition("root of a non-central matrix".into()));
                }
                field_root(*f, m[(0, 0)], n).map(|r| RingValue::Matrix(*f, DMatrix::identity(m.nrows(), m.nrows()) * r))
            }
            RingValue::Quaternion(q) => {
                if !self.is_central(DEFAULT_TOL) {
                    return Err(Error::Precondition("root of a non-real quaternion".into()));
                }
                real_root(q[0], n).map(|r| RingValue::Quaternion([r, 0.0, 0.0, 0.0]))
            }
            RingValue::Product(v) => {
                let mut out = Vec::with_capacity(v.len());
                for x in v {
                    match x.central_root(n)? {
                        Some(r) => out.push(r),
                        None => return Ok(None),
                    }
                }
                Some(RingValue::Product(out))
            }
        })
    }

    pub fn tensor(&self, o: &RingValue) -> Result<RingValue> {
        let d = self.descriptor().tensor(&o.descriptor())?;
        Ok(match (self, o) {
            (RingValue::Real(a), RingValue::Real(b)) => RingValue::Real(a * b),
            (RingValue::Complex(_) | RingValue::Real(_), RingValue::Complex(_) | RingValue::Real(_)) => {
                RingValue::Complex(self.as_scalar(0.0).unwrap() * o.as_scalar(0.0).unwrap())
            }
            (RingValue::Complex(_) | RingValue::Real(_), x) => x.scale(self.as_scalar(0.0).unwrap()),
            (x, RingValue::Complex(_) | RingValue::Real(_)) => x.scale(o.as_scalar(0.0).unwrap()),
            (RingValue::Matrix(_, a), RingValue::Matrix(_, b)) => {
                let field = d.field();
                RingValue::Matrix(field, a.kronecker(b))
            }
            (RingValue::Laurent(a), RingValue::Laurent(b)) => {
                let field = d.field();
                let mut terms = Vec::new();
                for (e1, c1) in &a.terms {
                    for (e2, c2) in &b.terms {
                        let mut e = e1.clone();
                        e.extend_from_slice(e2);
                        terms.push((e, c1 * c2));
                    }
                }
                RingValue::Laurent(Laurent::from_terms(a.vars + b.vars, field, terms)?)
            }
            _ => return Err(self.mismatch(o)),
        })
    }

    /// Real → complex promotion of scalars, Laurent polynomials and matrices.
    pub fn promote_complex(&self) -> RingValue {
        match self {
            RingValue::Real(a) => RingValue::Complex(C64::new(*a, 0.0)),
            RingValue::Laurent(l) => RingValue::Laurent(Laurent {
                field: Field::Complex,
                ..l.clone()
            }),
            RingValue::Matrix(_, m) => RingValue::Matrix(Field::Complex, m.clone()),
            RingValue::Product(v) => RingValue::Product(v.iter().map(|x| x.promote_complex()).collect()),
            other => other.clone(),
        }
    }

    /// Scalar → k×k diagonal matrix.
    pub fn promote_matrix(&self, k: usize) -> Result<RingValue> {
        match self {
            RingValue::Complex(c) => Ok(RingValue::Matrix(Field::Complex, DMatrix::identity(k, k) * *c)),
            RingValue::Real(x) => Ok(RingValue::Matrix(Field::Real, DMatrix::identity(k, k) * C64::new(*x, 0.0))),
            _ => invalid("only scalars promote to matrices"),
        }
    }

    /// Real coordinates in a fixed basis; Laurent terms must lie in [-window, window]^m.
    pub fn real_coords(&self, window: i32) -> Result<Vec<f64>> {
        let mut out = Vec::new();
        self.push_coords(window, &mut out)?;
        Ok(out)
    }

    fn push_coords(&self, window: i32, out: &mut Vec<f64>) -> Result<()> {
        match self {
            RingValue::Complex(c) => out.extend([c.re, c.im]),
            RingValue::Real(x) => out.push(*x),
            RingValue::Laurent(l) => {
                if l.max_degree() > window {
                    return Err(Error::Unflattenable(format!(
                        "Laurent degree {} exceeds window {window}",
                        l.max_degree()
                    )));
                }
                for e in window_exponents(l.vars, window) {
                    let c = l.terms.get(&e).copied().unwrap_or_default();
                    out.push(c.re);
                    if l.field == Field::Complex {
                        out.push(c.im);
                    }
                }
            }
            RingValue::Matrix(f, m) => {
                for r in 0..m.nrows() {
                    for c in 0..m.ncols() {
                        out.push(m[(r, c)].re);
                        if *f == Field::Complex {
                            out.push(m[(r, c)].im);
                        }
                    }
                }
            }
            RingValue::Quaternion(q) => out.extend_from_slice(q),
            RingValue::Product(v) => {
                for x in v {
                    x.push_coords(window, out)?;
                }
            }
        }
        Ok(())
    }

    /// Inverse of `real_coords`.
    pub fn from_real_coords(d: &RingDescriptor, window: i32, coords: &[f64]) -> Result<RingValue> {
        let mut pos = 0;
        let v = Self::take_coords(d, window, coords, &mut pos)?;
        if pos != coords.len() {
            return invalid("coordinate vector too long");
        }
        Ok(v)
    }

    fn take_coords(d: &RingDescriptor, window: i32, c: &[f64], pos: &mut usize) -> Result<RingValue> {
        let need = d.real_dim(window);
        if *pos + need > c.len() {
            return invalid("coordinate vector too short");
        }
        let mut next = || {
            *pos += 1;
            c[*pos - 1]
        };
        Ok(match d {
            RingDescriptor::ComplexScalar => {
                let re = next();
                RingValue::Complex(C64::new(re, next()))
            }
            RingDescriptor::RealScalar => RingValue::Real(next()),
            RingDescriptor::Laurent { vars, field } => {
                let mut terms = Vec::new();
                for e in window_exponents(*vars, window) {
                    let re = next();
                    let im = if *field == Field::Complex { next() } else { 0.0 };
                    terms.push((e, C64::new(re, im)));
                }
                RingValue::Laurent(Laurent::from_terms(*vars, *field, terms)?)
            }
            RingDescriptor::Matrix { size, field } => {
                let mut m = DMatrix::zeros(*size, *size);
                for r in 0..*size {
                    for col in 0..*size {
                        let re = next();
                        let im = if *field == Field::Complex { next() } else { 0.0 };
                        m[(r, col)] = C64::new(re, im);
                    }
                }
                RingValue::Matrix(*field, m)
            }
            RingDescriptor::Quaternion => RingValue::Quaternion([next(), next(), next(), next()]),
            RingDescriptor::Product(ds) => {
                let mut parts = Vec::new();
                for sub in ds {
                    parts.push(Self::take_coords(sub, window, c, pos)?);
                }
                RingValue::Product(parts)
            }
        })
    }

    /// A real basis of the ring (Laurent rings truncated to the window).
    pub fn real_basis(d: &RingDescriptor, window: i32) -> Vec<RingValue> {
        let n = d.real_dim(window);
        (0..n)
            .map(|k| {
                let mut v = vec![0.0; n];
                v[k] = 1.0;
                RingValue::from_real_coords(d, window, &v).expect("basis coordinates")
            })
            .collect()
    }

    /// A small set generating the ring as an algebra over its centre's scalars; used to
    /// test that maps commute with the coefficient action.
    pub fn algebra_generators(d: &RingDescriptor) -> Vec<RingValue> {
        match d {
            RingDescriptor::ComplexScalar => vec![RingValue::Complex(I)],
            RingDescriptor::RealScalar => vec![],
            RingDescriptor::Laurent { vars, field } => (0..*vars)
                .map(|k| RingValue::Laurent(Laurent::variable(*vars, *field, k)))
                .collect(),
            RingDescriptor::Matrix { size, field } => {
                let mut out = Vec::new();
                for r in 0..*size {
                    for c in 0..*size {
                        let mut m = DMatrix::zeros(*size, *size);
                        m[(r, c)] = C64::new(1.0, 0.0);
                        out.push(RingValue::Matrix(*field, m));
                    }
                }
                out
            }
            RingDescriptor::Quaternion => vec![
                RingValue::Quaternion([0.0, 1.0, 0.0, 0.0]),
                RingValue::Quaternion([0.0, 0.0, 1.0, 0.0]),
            ],
            RingDescriptor::Product(ds) => {
                let mut out = Vec::new();
                for (i, sub) in ds.iter().enumerate() {
                    let embed = |x: RingValue| {
                        RingValue::Product(
                            ds.iter()
                                .enumerate()
                                .map(|(j, d)| if j == i { x.clone() } else { RingValue::zero(d) })
                                .collect(),
                        )
                    };
                    out.push(embed(RingValue::unit(sub)));
                    for g in RingValue::algebra_generators(sub) {
                        out.push(embed(g));
                    }
                }
                out
            }
        }
    }

    /// Largest |exponent| in a Laurent value (0 for other kinds).
    pub fn laurent_degree(&self) -> i32 {
        match self {
            RingValue::Laurent(l) => l.max_degree(),
            RingValue::Product(v) => v.iter().map(|x| x.laurent_degree()).max().unwrap_or(0),
            _ => 0,
        }
    }
}

/// Uniform grid^vars sample of the torus.
pub fn torus_grid(vars: usize, grid: usize) -> impl Iterator<Item = Vec<C64>> {
    let grid = grid.max(1);
    let total = grid.pow(vars as u32);
    (0..total).map(move |mut idx| {
        let mut p = Vec::with_capacity(vars);
        for _ in 0..vars {
            let k = idx % grid;
            idx /= grid;
            p.push(C64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / grid as f64));
        }
        p
    })
}

/// Largest singular value.
pub fn spectral_norm(m: &DMatrix<C64>) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.clone().singular_values().iter().cloned().fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> RingValue {
        RingValue::Complex(C64::new(re, im))
    }

    #[test]
    fn scalar_examples() {
        assert!((c(3.0, 4.0).norm(1) - 5.0).abs() < 1e-15);
        assert_eq!(c(1.0, 2.0).star(), c(1.0, -2.0));
        assert!(!RingValue::Real(2.0).is_unitary(1e-9));
        assert!(RingValue::unit(&RingDescriptor::RealScalar).is_unitary(1e-9));
    }

    #[test]
    fn laurent_examples() {
        let z = |k: i32| RingValue::Laurent(Laurent::monomial(1, Field::Complex, vec![k], C64::new(1.0, 0.0)));
        assert_eq!(z(1).mul(&z(2)), z(3));
        let one_plus_z = z(0).add(&z(1));
        assert!((one_plus_z.norm(64) - 2.0).abs() < 1e-2);
        let z1 = RingValue::Laurent(Laurent::variable(2, Field::Complex, 0));
        assert!(z1.is_unitary(1e-9));
        assert!(z1.is_central(1e-9));
        let p = RingValue::Laurent(Laurent::monomial(1, Field::Complex, vec![3], C64::new(0.0, 2.0)));
        assert_eq!(
            p.star(),
            RingValue::Laurent(Laurent::monomial(1, Field::Complex, vec![-3], C64::new(0.0, -2.0)))
        );
    }

    #[test]
    fn laurent_star_is_pointwise_conjugation() {
        let p = RingValue::Laurent(
            Laurent::from_terms(
                1,
                Field::Complex,
                vec![(vec![-1], C64::new(0.5, 1.0)), (vec![2], C64::new(-2.0, 0.25))],
            )
            .unwrap(),
        );
        for pt in torus_grid(1, 7) {
            let a = p.eval_block(&pt)[(0, 0)];
            let b = p.star().eval_block(&pt)[(0, 0)];
            assert!((a.conj() - b).norm() < 1e-12);
        }
    }

    #[test]
    fn matrix_and_quaternion() {
        let m = RingValue::Matrix(
            Field::Complex,
            DMatrix::from_row_slice(2, 2, &[C64::new(0.0, 0.0), C64::new(2.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)]),
        );
        assert!((m.norm(1) - 2.0).abs() < 1e-12);
        let d = RingValue::Matrix(
            Field::Complex,
            DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![C64::new(1.0, 0.0), C64::new(-1.0, 0.0)])),
        );
        assert!(!d.is_central(1e-9));
        let i = RingValue::Quaternion([0.0, 1.0, 0.0, 0.0]);
        let j = RingValue::Quaternion([0.0, 0.0, 1.0, 0.0]);
        assert_eq!(i.mul(&j), RingValue::Quaternion([0.0, 0.0, 0.0, 1.0]));
        assert_eq!(i.mul(&i), RingValue::Quaternion([-1.0, 0.0, 0.0, 0.0]));
        assert!(RingValue::Quaternion([3.0, 0.0, 0.0, 0.0]).is_central(1e-9));
        // the 2x2 complex image is multiplicative and norm preserving
        let p = RingValue::Quaternion([0.3, -1.0, 2.0, 0.5]);
        let q = RingValue::Quaternion([1.5, 0.2, -0.7, 1.1]);
        let lhs = p.mul(&q).eval_block(&[]);
        let rhs = p.eval_block(&[]) * q.eval_block(&[]);
        assert!((lhs - rhs).norm() < 1e-12);
        assert!((spectral_norm(&p.eval_block(&[])) - p.norm(1)).abs() < 1e-12);
    }

    #[test]
    fn roots() {
        let r = c(-1.0, 0.0).central_root(2).unwrap().unwrap();
        assert!(r.dist(&c(0.0, 1.0)) < 1e-15);
        assert_eq!(RingValue::Real(-1.0).central_root(2).unwrap(), None);
        let z = |k: i32| RingValue::Laurent(Laurent::monomial(1, Field::Complex, vec![k], C64::new(1.0, 0.0)));
        assert_eq!(z(2).central_root(2).unwrap(), Some(z(1)));
        assert_eq!(z(1).central_root(2).unwrap(), None);
        let two_terms = z(0).add(&z(1));
        assert!(matches!(two_terms.central_root(2), Err(Error::NotMonomial(_))));
    }

    #[test]
    fn coords_round_trip() {
        let ds = vec![
            RingDescriptor::ComplexScalar,
            RingDescriptor::Laurent { vars: 2, field: Field::Complex },
            RingDescriptor::Matrix { size: 2, field: Field::Real },
            RingDescriptor::Quaternion,
            RingDescriptor::Product(vec![RingDescriptor::RealScalar, RingDescriptor::ComplexScalar]),
        ];
        for d in ds {
            let basis = RingValue::real_basis(&d, 1);
            assert_eq!(basis.len(), d.real_dim(1));
            for (k, b) in basis.iter().enumerate() {
                let v = b.real_coords(1).unwrap();
                assert_eq!(v.iter().filter(|x| **x != 0.0).count(), 1);
                assert_eq!(v[k], 1.0);
            }
        }
    }

    #[test]
    fn tensors() {
        let a = RingValue::Laurent(Laurent::variable(1, Field::Complex, 0));
        let t = a.tensor(&a).unwrap();
        assert_eq!(t.descriptor(), RingDescriptor::Laurent { vars: 2, field: Field::Complex });
        assert_eq!(c(-1.0, 0.0).tensor(&c(-1.0, 0.0)).unwrap(), c(1.0, 0.0));
        assert!(RingValue::Quaternion([1.0, 0.0, 0.0, 0.0]).tensor(&a).is_err());
    }
}
