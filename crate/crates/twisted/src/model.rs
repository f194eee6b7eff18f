//! Target algebras for morphisms out of twisted group algebras: the coefficient ring
//! itself, twisted algebras, matrices, quaternion tensors, complexifications, direct sums
//! and corners P·A·P. All of them are modules over a common coefficient ring E.

use std::fmt;
use std::sync::Arc;

use crate::algebra::AlgebraElement;
use crate::cocycle::SchurFunction;
use crate::error::{invalid, Error, Result};
use crate::linalg::rank;
use crate::ring::{RingDescriptor, RingValue};

#[derive(Clone, Debug, PartialEq)]
pub enum AlgebraModel {
    Ring(RingDescriptor),
    Twisted(Arc<SchurFunction>),
    /// k×k matrices over the inner model.
    Matrix(usize, Box<AlgebraModel>),
    /// ℍ ⊗ A as 4-tuples a0 + i a1 + j a2 + k a3.
    Quaternion(Box<AlgebraModel>),
    /// A ⊕ iA as pairs (re, im).
    Complexified(Box<AlgebraModel>),
    DirectSum(Vec<AlgebraModel>),
    /// P·A·P for a projection P of A; its unit is P.
    Corner(Box<AlgebraModel>, Box<ModelElement>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum ModelElement {
    Ring(RingValue),
    Twisted(AlgebraElement),
    /// Row-major entries.
    Matrix(usize, Vec<ModelElement>),
    Quaternion(Vec<ModelElement>),
    Complexified(Box<ModelElement>, Box<ModelElement>),
    DirectSum(Vec<ModelElement>),
}

/// (sign, index) with e_p e_q = sign · e_index for the basis 1, i, j, k.
fn quat_rule(p: usize, q: usize) -> (f64, usize) {
    const T: [[(f64, usize); 4]; 4] = [
        [(1.0, 0), (1.0, 1), (1.0, 2), (1.0, 3)],
        [(1.0, 1), (-1.0, 0), (1.0, 3), (-1.0, 2)],
        [(1.0, 2), (-1.0, 3), (-1.0, 0), (1.0, 1)],
        [(1.0, 3), (1.0, 2), (-1.0, 1), (-1.0, 0)],
    ];
    T[p][q]
}

impl ModelElement {
    pub fn matrix(k: usize, entries: Vec<ModelElement>) -> Self {
        assert_eq!(entries.len(), k * k, "matrix needs k*k entries");
        ModelElement::Matrix(k, entries)
    }

    /// [[a, b], [c, d]].
    pub fn mat2(a: ModelElement, b: ModelElement, c: ModelElement, d: ModelElement) -> Self {
        ModelElement::Matrix(2, vec![a, b, c, d])
    }

    pub fn complexified(re: ModelElement, im: ModelElement) -> Self {
        ModelElement::Complexified(Box::new(re), Box::new(im))
    }

    fn zip(&self, o: &ModelElement, op: &dyn Fn(&ModelElement, &ModelElement) -> ModelElement) -> ModelElement {
        use ModelElement::*;
        match (self, o) {
            (Matrix(k, a), Matrix(l, b)) if k == l => Matrix(*k, a.iter().zip(b).map(|(x, y)| op(x, y)).collect()),
            (Quaternion(a), Quaternion(b)) => Quaternion(a.iter().zip(b).map(|(x, y)| op(x, y)).collect()),
            (Complexified(a, b), Complexified(c, d)) => ModelElement::complexified(op(a, c), op(b, d)),
            (DirectSum(a), DirectSum(b)) if a.len() == b.len() => {
                DirectSum(a.iter().zip(b).map(|(x, y)| op(x, y)).collect())
            }
            _ => panic!("model element shapes differ: {} vs {}", self.shape(), o.shape()),
        }
    }

    pub fn add(&self, o: &ModelElement) -> ModelElement {
        match (self, o) {
            (ModelElement::Ring(a), ModelElement::Ring(b)) => ModelElement::Ring(a.add(b)),
            (ModelElement::Twisted(a), ModelElement::Twisted(b)) => ModelElement::Twisted(a.add(b)),
            _ => self.zip(o, &|x, y| x.add(y)),
        }
    }

    pub fn sub(&self, o: &ModelElement) -> ModelElement {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> ModelElement {
        self.scale_real(-1.0)
    }

    pub fn scale_real(&self, x: f64) -> ModelElement {
        self.map_leaves(&|r| r.scale_real(x), &|a| a.scale_real(x))
    }

    fn map_leaves(
        &self,
        ring: &dyn Fn(&RingValue) -> RingValue,
        tw: &dyn Fn(&AlgebraElement) -> AlgebraElement,
    ) -> ModelElement {
        use ModelElement::*;
        match self {
            Ring(a) => Ring(ring(a)),
            Twisted(a) => Twisted(tw(a)),
            Matrix(k, v) => Matrix(*k, v.iter().map(|x| x.map_leaves(ring, tw)).collect()),
            Quaternion(v) => Quaternion(v.iter().map(|x| x.map_leaves(ring, tw)).collect()),
            Complexified(a, b) => ModelElement::complexified(a.map_leaves(ring, tw), b.map_leaves(ring, tw)),
            DirectSum(v) => DirectSum(v.iter().map(|x| x.map_leaves(ring, tw)).collect()),
        }
    }

    pub fn mul(&self, o: &ModelElement) -> ModelElement {
        use ModelElement::*;
        match (self, o) {
            (Ring(a), Ring(b)) => Ring(a.mul(b)),
            (Twisted(a), Twisted(b)) => Twisted(a.mul(b)),
            (Matrix(k, a), Matrix(l, b)) if k == l => {
                let k = *k;
                let mut out = Vec::with_capacity(k * k);
                for r in 0..k {
                    for c in 0..k {
                        let mut acc = a[r * k].mul(&b[c]);
                        for m in 1..k {
                            acc = acc.add(&a[r * k + m].mul(&b[m * k + c]));
                        }
                        out.push(acc);
                    }
                }
                Matrix(k, out)
            }
            (Quaternion(a), Quaternion(b)) => {
                let mut out: Vec<Option<ModelElement>> = vec![None, None, None, None];
                for p in 0..4 {
                    for q in 0..4 {
                        let (sign, r) = quat_rule(p, q);
                        let term = a[p].mul(&b[q]).scale_real(sign);
                        out[r] = Some(match out[r].take() {
                            None => term,
                            Some(acc) => acc.add(&term),
                        });
                    }
                }
                Quaternion(out.into_iter().map(|x| x.expect("filled")).collect())
            }
            (Complexified(a, b), Complexified(c, d)) => {
                ModelElement::complexified(a.mul(c).sub(&b.mul(d)), a.mul(d).add(&b.mul(c)))
            }
            (DirectSum(a), DirectSum(b)) if a.len() == b.len() => {
                DirectSum(a.iter().zip(b).map(|(x, y)| x.mul(y)).collect())
            }
            _ => panic!("model element shapes differ: {} vs {}", self.shape(), o.shape()),
        }
    }

    pub fn star(&self) -> ModelElement {
        use ModelElement::*;
        match self {
            Ring(a) => Ring(a.star()),
            Twisted(a) => Twisted(a.star()),
            Matrix(k, v) => {
                let k = *k;
                Matrix(k, (0..k * k).map(|i| v[(i % k) * k + i / k].star()).collect())
            }
            Quaternion(v) => Quaternion(
                v.iter()
                    .enumerate()
                    .map(|(p, x)| if p == 0 { x.star() } else { x.star().neg() })
                    .collect(),
            ),
            Complexified(a, b) => ModelElement::complexified(a.star(), b.star().neg()),
            DirectSum(v) => DirectSum(v.iter().map(|x| x.star()).collect()),
        }
    }

    /// Largest absolute value of a stored coefficient.
    pub fn max_abs(&self) -> f64 {
        use ModelElement::*;
        match self {
            Ring(a) => a.max_abs(),
            Twisted(a) => a.max_abs(),
            Matrix(_, v) | Quaternion(v) | DirectSum(v) => v.iter().map(|x| x.max_abs()).fold(0.0, f64::max),
            Complexified(a, b) => a.max_abs().max(b.max_abs()),
        }
    }

    pub fn dist(&self, o: &ModelElement) -> f64 {
        self.sub(o).max_abs()
    }

    pub fn laurent_degree(&self) -> i32 {
        use ModelElement::*;
        match self {
            Ring(a) => a.laurent_degree(),
            Twisted(a) => a.coeffs().iter().map(|c| c.laurent_degree()).max().unwrap_or(0),
            Matrix(_, v) | Quaternion(v) | DirectSum(v) => v.iter().map(|x| x.laurent_degree()).max().unwrap_or(0),
            Complexified(a, b) => a.laurent_degree().max(b.laurent_degree()),
        }
    }

    /// Real coordinates, concatenated leaf by leaf.
    pub fn coords(&self, window: i32) -> Result<Vec<f64>> {
        let mut out = Vec::new();
        self.push_coords(window, &mut out)?;
        Ok(out)
    }

    fn push_coords(&self, window: i32, out: &mut Vec<f64>) -> Result<()> {
        use ModelElement::*;
        match self {
            Ring(a) => out.extend(a.real_coords(window)?),
            Twisted(a) => {
                for c in a.coeffs() {
                    out.extend(c.real_coords(window)?);
                }
            }
            Matrix(_, v) | Quaternion(v) | DirectSum(v) => {
                for x in v {
                    x.push_coords(window, out)?;
                }
            }
            Complexified(a, b) => {
                a.push_coords(window, out)?;
                b.push_coords(window, out)?;
            }
        }
        Ok(())
    }

    /// Replaces every twisted-algebra leaf by the model element `f` assigns to it.
    pub fn map_twisted(&self, f: &dyn Fn(&AlgebraElement) -> Result<ModelElement>) -> Result<ModelElement> {
        use ModelElement::*;
        Ok(match self {
            Ring(a) => Ring(a.clone()),
            Twisted(a) => f(a)?,
            Matrix(k, v) => Matrix(*k, v.iter().map(|x| x.map_twisted(f)).collect::<Result<_>>()?),
            Quaternion(v) => Quaternion(v.iter().map(|x| x.map_twisted(f)).collect::<Result<_>>()?),
            Complexified(a, b) => ModelElement::complexified(a.map_twisted(f)?, b.map_twisted(f)?),
            DirectSum(v) => DirectSum(v.iter().map(|x| x.map_twisted(f)).collect::<Result<_>>()?),
        })
    }

    /// M_k(M_l(A)) → M_{kl}(A) with block index (i,p) ↦ i·l + p.
    pub fn flatten_matrix(&self) -> Result<ModelElement> {
        let ModelElement::Matrix(k, outer) = self else {
            return invalid("flatten needs a matrix of matrices");
        };
        let l = match outer.first() {
            Some(ModelElement::Matrix(l, _)) => *l,
            _ => return invalid("flatten needs a matrix of matrices"),
        };
        let n = k * l;
        let mut out = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let ModelElement::Matrix(l2, inner) = &outer[(r / l) * k + c / l] else {
                    return invalid("ragged block matrix");
                };
                if *l2 != l {
                    return invalid("ragged block matrix");
                }
                out.push(inner[(r % l) * l + c % l].clone());
            }
        }
        Ok(ModelElement::Matrix(n, out))
    }

    fn shape(&self) -> String {
        use ModelElement::*;
        match self {
            Ring(a) => format!("{:?}", a.descriptor()),
            Twisted(a) => format!("S(f) of order {}", a.cocycle().order()),
            Matrix(k, v) => format!("M{k}({})", v.first().map(|x| x.shape()).unwrap_or_default()),
            Quaternion(v) => format!("H({})", v[0].shape()),
            Complexified(a, _) => format!("C({})", a.shape()),
            DirectSum(v) => format!("sum[{}]", v.iter().map(|x| x.shape()).collect::<Vec<_>>().join(", ")),
        }
    }
}

impl AlgebraModel {
    pub fn twisted(f: &Arc<SchurFunction>) -> Self {
        AlgebraModel::Twisted(f.clone())
    }

    pub fn matrix(k: usize, inner: AlgebraModel) -> Self {
        AlgebraModel::Matrix(k, Box::new(inner))
    }

    pub fn quaternion(inner: AlgebraModel) -> Self {
        AlgebraModel::Quaternion(Box::new(inner))
    }

    pub fn complexified(inner: AlgebraModel) -> Self {
        AlgebraModel::Complexified(Box::new(inner))
    }

    pub fn corner(inner: AlgebraModel, p: ModelElement) -> Result<Self> {
        inner.check(&p)?;
        Ok(AlgebraModel::Corner(Box::new(inner), Box::new(p)))
    }

    /// The coefficient ring E the model is a module over.
    pub fn descriptor(&self) -> RingDescriptor {
        match self {
            AlgebraModel::Ring(d) => d.clone(),
            AlgebraModel::Twisted(f) => f.descriptor().clone(),
            AlgebraModel::Matrix(_, m)
            | AlgebraModel::Quaternion(m)
            | AlgebraModel::Complexified(m)
            | AlgebraModel::Corner(m, _) => m.descriptor(),
            AlgebraModel::DirectSum(v) => v[0].descriptor(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            AlgebraModel::Ring(d) => d.validate(),
            AlgebraModel::Twisted(_) => Ok(()),
            AlgebraModel::Matrix(k, m) => {
                if *k == 0 {
                    return invalid("matrix size must be positive");
                }
                m.validate()
            }
            AlgebraModel::Quaternion(m) | AlgebraModel::Complexified(m) => m.validate(),
            AlgebraModel::Corner(m, p) => {
                m.validate()?;
                m.check(p)
            }
            AlgebraModel::DirectSum(v) => {
                if v.is_empty() {
                    return invalid("empty direct sum");
                }
                let d = v[0].descriptor();
                for m in v {
                    m.validate()?;
                    if m.descriptor() != d {
                        return Err(Error::DescriptorMismatch("summands over different rings".into()));
                    }
                }
                Ok(())
            }
        }
    }

    /// Whether `x` has the shape of an element of this model (corners are not
    /// checked for P x P = x).
    pub fn check(&self, x: &ModelElement) -> Result<()> {
        let bad = || Err(Error::DescriptorMismatch(format!("element {} does not belong to {self}", x.shape())));
        match (self, x) {
            (AlgebraModel::Ring(d), ModelElement::Ring(v)) if v.has_descriptor(d) => Ok(()),
            (AlgebraModel::Twisted(f), ModelElement::Twisted(a)) if **a.cocycle() == **f => Ok(()),
            (AlgebraModel::Matrix(k, m), ModelElement::Matrix(l, v)) if k == l => v.iter().try_for_each(|e| m.check(e)),
            (AlgebraModel::Quaternion(m), ModelElement::Quaternion(v)) if v.len() == 4 => {
                v.iter().try_for_each(|e| m.check(e))
            }
            (AlgebraModel::Complexified(m), ModelElement::Complexified(a, b)) => {
                m.check(a)?;
                m.check(b)
            }
            (AlgebraModel::DirectSum(ms), ModelElement::DirectSum(v)) if ms.len() == v.len() => {
                ms.iter().zip(v).try_for_each(|(m, e)| m.check(e))
            }
            (AlgebraModel::Corner(m, _), e) => m.check(e),
            _ => bad(),
        }
    }

    /// x·1 for x in E.
    pub fn embed(&self, x: &RingValue) -> Result<ModelElement> {
        Ok(match self {
            AlgebraModel::Ring(d) => {
                if !x.has_descriptor(d) {
                    return Err(Error::DescriptorMismatch(format!("{:?} into {d:?}", x.descriptor())));
                }
                ModelElement::Ring(x.clone())
            }
            AlgebraModel::Twisted(f) => ModelElement::Twisted(AlgebraElement::monomial(f, 0, x.clone())?),
            AlgebraModel::Matrix(k, m) => {
                let zero = m.zero()?;
                let d = m.embed(x)?;
                ModelElement::Matrix(
                    *k,
                    (0..k * k).map(|i| if i / k == i % k { d.clone() } else { zero.clone() }).collect(),
                )
            }
            AlgebraModel::Quaternion(m) => {
                let zero = m.zero()?;
                ModelElement::Quaternion(vec![m.embed(x)?, zero.clone(), zero.clone(), zero])
            }
            AlgebraModel::Complexified(m) => ModelElement::complexified(m.embed(x)?, m.zero()?),
            AlgebraModel::DirectSum(v) => ModelElement::DirectSum(v.iter().map(|m| m.embed(x)).collect::<Result<_>>()?),
            AlgebraModel::Corner(m, p) => m.embed(x)?.mul(p),
        })
    }

    pub fn one(&self) -> Result<ModelElement> {
        self.embed(&RingValue::unit(&self.descriptor()))
    }

    pub fn zero(&self) -> Result<ModelElement> {
        Ok(match self {
            AlgebraModel::Corner(m, _) => m.zero()?,
            _ => self.embed(&RingValue::zero(&self.descriptor()))?,
        })
    }

    /// Real dimension of the coordinate space (Laurent coefficients on the window).
    pub fn coord_dim(&self, window: i32) -> usize {
        match self {
            AlgebraModel::Ring(d) => d.real_dim(window),
            AlgebraModel::Twisted(f) => f.order() * f.descriptor().real_dim(window),
            AlgebraModel::Matrix(k, m) => k * k * m.coord_dim(window),
            AlgebraModel::Quaternion(m) => 4 * m.coord_dim(window),
            AlgebraModel::Complexified(m) => 2 * m.coord_dim(window),
            AlgebraModel::DirectSum(v) => v.iter().map(|m| m.coord_dim(window)).sum(),
            AlgebraModel::Corner(m, _) => m.coord_dim(window),
        }
    }

    /// A real spanning set (a basis except for corners, where it is {P b P}).
    pub fn spanning_set(&self, window: i32) -> Result<Vec<ModelElement>> {
        Ok(match self {
            AlgebraModel::Ring(d) => RingValue::real_basis(d, window).into_iter().map(ModelElement::Ring).collect(),
            AlgebraModel::Twisted(f) => {
                let mut out = Vec::new();
                for t in 0..f.order() {
                    for b in RingValue::real_basis(f.descriptor(), window) {
                        out.push(ModelElement::Twisted(AlgebraElement::monomial(f, t, b)?));
                    }
                }
                out
            }
            AlgebraModel::Matrix(k, m) => {
                let zero = m.zero()?;
                let mut out = Vec::new();
                for pos in 0..k * k {
                    for b in m.spanning_set(window)? {
                        let mut v = vec![zero.clone(); k * k];
                        v[pos] = b;
                        out.push(ModelElement::Matrix(*k, v));
                    }
                }
                out
            }
            AlgebraModel::Quaternion(m) => {
                let zero = m.zero()?;
                let mut out = Vec::new();
                for pos in 0..4 {
                    for b in m.spanning_set(window)? {
                        let mut v = vec![zero.clone(); 4];
                        v[pos] = b;
                        out.push(ModelElement::Quaternion(v));
                    }
                }
                out
            }
            AlgebraModel::Complexified(m) => {
                let zero = m.zero()?;
                let basis = m.spanning_set(window)?;
                let mut out: Vec<ModelElement> = basis
                    .iter()
                    .map(|b| ModelElement::complexified(b.clone(), zero.clone()))
                    .collect();
                out.extend(basis.into_iter().map(|b| ModelElement::complexified(zero.clone(), b)));
                out
            }
            AlgebraModel::DirectSum(v) => {
                let zeros: Vec<ModelElement> = v.iter().map(|m| m.zero()).collect::<Result<_>>()?;
                let mut out = Vec::new();
                for (i, m) in v.iter().enumerate() {
                    for b in m.spanning_set(window)? {
                        let mut parts = zeros.clone();
                        parts[i] = b;
                        out.push(ModelElement::DirectSum(parts));
                    }
                }
                out
            }
            AlgebraModel::Corner(m, p) => m.spanning_set(window)?.iter().map(|b| p.mul(b).mul(p)).collect(),
        })
    }

    /// Real dimension; corners are measured by the rank of their spanning set.
    pub fn real_dim(&self, window: i32) -> Result<usize> {
        match self {
            AlgebraModel::Corner(..) => {
                let rows: Vec<Vec<f64>> = self
                    .spanning_set(window)?
                    .iter()
                    .map(|x| x.coords(window))
                    .collect::<Result<_>>()?;
                Ok(rank(&rows, 1e-9))
            }
            _ => Ok(self.coord_dim(window)),
        }
    }

    pub fn is_corner(&self) -> bool {
        matches!(self, AlgebraModel::Corner(..))
    }
}

impl fmt::Display for AlgebraModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraModel::Ring(d) => write!(f, "{}", ring_name(d)),
            AlgebraModel::Twisted(s) => write!(f, "S(f) on a group of order {}", s.order()),
            AlgebraModel::Matrix(k, m) => write!(f, "M{k}({m})"),
            AlgebraModel::Quaternion(m) => write!(f, "H (x) {m}"),
            AlgebraModel::Complexified(m) => write!(f, "complexified {m}"),
            AlgebraModel::DirectSum(v) => {
                let parts: Vec<String> = v.iter().map(|m| m.to_string()).collect();
                write!(f, "{}", parts.join(" + "))
            }
            AlgebraModel::Corner(m, _) => write!(f, "P ({m}) P"),
        }
    }
}

fn ring_name(d: &RingDescriptor) -> String {
    match d {
        RingDescriptor::ComplexScalar => "C".into(),
        RingDescriptor::RealScalar => "R".into(),
        RingDescriptor::Laurent { vars, .. } => format!("C(T^{vars})"),
        RingDescriptor::Matrix { size, .. } => format!("M{size}"),
        RingDescriptor::Quaternion => "H".into(),
        RingDescriptor::Product(ds) => ds.iter().map(ring_name).collect::<Vec<_>>().join(" x "),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: f64) -> ModelElement {
        ModelElement::Ring(RingValue::Real(x))
    }

    #[test]
    fn quaternion_units() {
        let m = AlgebraModel::quaternion(AlgebraModel::Ring(RingDescriptor::RealScalar));
        let unit = |p: usize| {
            let mut v = vec![r(0.0); 4];
            v[p] = r(1.0);
            ModelElement::Quaternion(v)
        };
        let (i, j, k) = (unit(1), unit(2), unit(3));
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
        assert_eq!(i.mul(&i), m.one().unwrap().neg());
        assert_eq!(i.star(), i.neg());
    }

    #[test]
    fn complexified_is_complex_numbers() {
        let i = ModelElement::complexified(r(0.0), r(1.0));
        let m = AlgebraModel::complexified(AlgebraModel::Ring(RingDescriptor::RealScalar));
        assert_eq!(i.mul(&i), m.one().unwrap().neg());
        assert_eq!(i.star(), i.neg());
        assert_eq!(m.real_dim(0).unwrap(), 2);
    }

    #[test]
    fn matrices_and_flattening() {
        let a = ModelElement::mat2(r(1.0), r(2.0), r(3.0), r(4.0));
        let b = ModelElement::mat2(r(0.0), r(1.0), r(1.0), r(0.0));
        assert_eq!(a.mul(&b), ModelElement::mat2(r(2.0), r(1.0), r(4.0), r(3.0)));
        assert_eq!(a.star(), ModelElement::mat2(r(1.0), r(3.0), r(2.0), r(4.0)));
        let z = ModelElement::mat2(r(0.0), r(0.0), r(0.0), r(0.0));
        let block = ModelElement::mat2(a.clone(), z.clone(), z.clone(), b.clone());
        let flat = block.flatten_matrix().unwrap();
        let ModelElement::Matrix(4, v) = &flat else { panic!() };
        assert_eq!(v[1], r(2.0));
        assert_eq!(v[2 * 4 + 3], r(1.0));
        assert_eq!(v[3 * 4 + 2], r(1.0));
        assert_eq!(v[2], r(0.0));
    }

    #[test]
    fn corner_dimension() {
        let m = AlgebraModel::matrix(2, AlgebraModel::Ring(RingDescriptor::ComplexScalar));
        let zero = ModelElement::Ring(RingValue::Complex(Default::default()));
        let one = ModelElement::Ring(RingValue::unit(&RingDescriptor::ComplexScalar));
        let e11 = ModelElement::mat2(one, zero.clone(), zero.clone(), zero);
        let c = AlgebraModel::corner(m, e11.clone()).unwrap();
        assert_eq!(c.real_dim(0).unwrap(), 2);
        assert_eq!(c.one().unwrap(), e11);
    }
}
