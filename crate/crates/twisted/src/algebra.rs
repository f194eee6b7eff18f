//! Elements of the twisted group algebra S(f) for a finite group: coefficient families
//! (X_t) with the twisted convolution product and involution.

use std::sync::Arc;

use nalgebra::DMatrix;

use crate::cocycle::SchurFunction;
use crate::error::{invalid, precondition, Error, Result};
use crate::ring::{spectral_norm, torus_grid, RingValue, C64};

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement {
    cocycle: Arc<SchurFunction>,
    coeffs: Vec<RingValue>,
}

fn same_cocycle(a: &Arc<SchurFunction>, b: &Arc<SchurFunction>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl AlgebraElement {
    pub fn zero(f: &Arc<SchurFunction>) -> Self {
        AlgebraElement {
            cocycle: f.clone(),
            coeffs: vec![RingValue::zero(f.descriptor()); f.order()],
        }
    }

    /// V_1.
    pub fn unit(f: &Arc<SchurFunction>) -> Self {
        AlgebraElement::generator(f, 0)
    }

    /// V_t: the family δ_{s,t}·1.
    pub fn generator(f: &Arc<SchurFunction>, t: usize) -> Self {
        let mut x = AlgebraElement::zero(f);
        x.coeffs[t] = RingValue::unit(f.descriptor());
        x
    }

    /// x·V_1 for central x.
    pub fn embed_scalar(f: &Arc<SchurFunction>, x: RingValue) -> Result<Self> {
        if !x.has_descriptor(f.descriptor()) {
            return Err(Error::DescriptorMismatch(format!("{:?}", x.descriptor())));
        }
        if !x.is_central(crate::ring::DEFAULT_TOL) {
            return precondition("embedded coefficient is not central");
        }
        let mut e = AlgebraElement::zero(f);
        e.coeffs[0] = x;
        Ok(e)
    }

    /// x·V_t, any x.
    pub fn monomial(f: &Arc<SchurFunction>, t: usize, x: RingValue) -> Result<Self> {
        if !x.has_descriptor(f.descriptor()) {
            return Err(Error::DescriptorMismatch(format!("{:?}", x.descriptor())));
        }
        let mut e = AlgebraElement::zero(f);
        e.coeffs[t] = x;
        Ok(e)
    }

    pub fn from_coeffs(f: &Arc<SchurFunction>, coeffs: Vec<RingValue>) -> Result<Self> {
        if coeffs.len() != f.order() {
            return invalid(format!("expected {} coefficients, got {}", f.order(), coeffs.len()));
        }
        if let Some(c) = coeffs.iter().find(|c| !c.has_descriptor(f.descriptor())) {
            return Err(Error::DescriptorMismatch(format!("coefficient {:?}", c.descriptor())));
        }
        Ok(AlgebraElement {
            cocycle: f.clone(),
            coeffs,
        })
    }

    pub fn cocycle(&self) -> &Arc<SchurFunction> {
        &self.cocycle
    }

    pub fn coeffs(&self) -> &[RingValue] {
        &self.coeffs
    }

    pub fn coeff(&self, t: usize) -> &RingValue {
        &self.coeffs[t]
    }

    fn check(&self, o: &AlgebraElement) -> Result<()> {
        if same_cocycle(&self.cocycle, &o.cocycle) {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch("elements of different twisted algebras".into()))
        }
    }

    /// (XY)_t = Σ_{su=t} f(s,u) X_s Y_u, iterating over the supports only.
    pub fn try_mul(&self, o: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(o)?;
        let f = &*self.cocycle;
        let g = f.group();
        let mut out = AlgebraElement::zero(&self.cocycle);
        let right: Vec<usize> = (0..o.coeffs.len()).filter(|&u| !o.coeffs[u].is_zero()).collect();
        for (s, xs) in self.coeffs.iter().enumerate() {
            if xs.is_zero() {
                continue;
            }
            for &u in &right {
                let t = g.mul(s, u);
                let term = f.get(s, u).mul(xs).mul(&o.coeffs[u]);
                out.coeffs[t] = out.coeffs[t].add(&term);
            }
        }
        Ok(out)
    }

    /// Panics if the elements live in different algebras.
    pub fn mul(&self, o: &AlgebraElement) -> AlgebraElement {
        self.try_mul(o).expect("multiplying elements of different algebras")
    }

    /// (X*)_t = tilde(t) (X_{t^-1})*.
    pub fn star(&self) -> AlgebraElement {
        let f = &*self.cocycle;
        let g = f.group();
        AlgebraElement {
            cocycle: self.cocycle.clone(),
            coeffs: (0..f.order())
                .map(|t| f.tilde(t).mul(&self.coeffs[g.inv(t)].star()))
                .collect(),
        }
    }

    pub fn try_add(&self, o: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(o)?;
        Ok(AlgebraElement {
            cocycle: self.cocycle.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn add(&self, o: &AlgebraElement) -> AlgebraElement {
        self.try_add(o).expect("adding elements of different algebras")
    }

    pub fn sub(&self, o: &AlgebraElement) -> AlgebraElement {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> AlgebraElement {
        self.scale(C64::new(-1.0, 0.0))
    }

    pub fn scale(&self, c: C64) -> AlgebraElement {
        AlgebraElement {
            cocycle: self.cocycle.clone(),
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn scale_real(&self, x: f64) -> AlgebraElement {
        self.scale(C64::new(x, 0.0))
    }

    /// x·X, i.e. (x X_t)_t.
    pub fn scale_ring(&self, x: &RingValue) -> AlgebraElement {
        AlgebraElement {
            cocycle: self.cocycle.clone(),
            coeffs: self.coeffs.iter().map(|a| x.mul(a)).collect(),
        }
    }

    /// X·x, i.e. (X_t x)_t.
    pub fn scale_ring_right(&self, x: &RingValue) -> AlgebraElement {
        AlgebraElement {
            cocycle: self.cocycle.clone(),
            coeffs: self.coeffs.iter().map(|a| a.mul(x)).collect(),
        }
    }

    /// Largest coefficient difference.
    pub fn max_distance(&self, o: &AlgebraElement) -> f64 {
        self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.dist(b)).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|a| a.max_abs()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|a| a.is_zero())
    }

    /// Entry (s,t) of the regular matrix: f(st^-1, t) X_{st^-1}.
    pub fn coefficient(&self, s: usize, t: usize) -> RingValue {
        let f = &*self.cocycle;
        let g = f.group();
        let r = g.mul(s, g.inv(t));
        f.get(r, t).mul(&self.coeffs[r])
    }

    pub fn regular_matrix(&self) -> RegularMatrix {
        let n = self.cocycle.order();
        RegularMatrix {
            size: n,
            entries: (0..n).flat_map(|s| (0..n).map(move |t| (s, t))).map(|(s, t)| self.coefficient(s, t)).collect(),
        }
    }

    /// C*-norm: largest singular value of the flattened regular matrix, maximized over a
    /// torus grid for Laurent coefficients.
    pub fn norm(&self, grid: usize) -> f64 {
        let m = self.regular_matrix();
        let vars = self.cocycle.descriptor().torus_vars();
        if vars == 0 {
            spectral_norm(&m.flatten(&[]))
        } else {
            torus_grid(vars, grid).map(|p| spectral_norm(&m.flatten(&p))).fold(0.0, f64::max)
        }
    }

    /// Σ_t X_t* X_t, checked against (X*X)_1.
    pub fn coefficient_positivity(&self, tol: f64) -> Result<RingValue> {
        let d = self.cocycle.descriptor();
        let sum = self
            .coeffs
            .iter()
            .fold(RingValue::zero(d), |acc, x| acc.add(&x.star().mul(x)));
        let direct = self.star().mul(self).coeffs[0].clone();
        let r = sum.dist(&direct);
        if r > tol {
            return Err(Error::Relation(format!("(X*X)_1 differs from the coefficient sum by {r:.3e}")));
        }
        Ok(direct)
    }

    /// X = X* = X².
    pub fn is_projection(&self, tol: f64) -> bool {
        self.max_distance(&self.star()) <= tol && self.max_distance(&self.mul(self)) <= tol
    }

    /// Exhaustive centre test: all X_t central in E and
    /// X_{s^-1 t s} = f(s, s^-1 t s)* f(t, s) X_t.
    pub fn center_check(&self, tol: f64) -> bool {
        let f = &*self.cocycle;
        let g = f.group();
        if !self.coeffs.iter().all(|x| x.is_central(tol)) {
            return false;
        }
        for s in 0..f.order() {
            for t in 0..f.order() {
                let c = g.mul(g.mul(g.inv(s), t), s);
                let rhs = f.get(s, c).star().mul(f.get(t, s)).mul(&self.coeffs[t]);
                if self.coeffs[c].dist(&rhs) > tol {
                    return false;
                }
            }
        }
        true
    }

    /// Commutes with every V_t and with x·V_1 for a generating set of E.
    pub fn commutes_with_all(&self, tol: f64) -> bool {
        let f = &self.cocycle;
        let gens = (0..f.order()).map(|t| AlgebraElement::generator(f, t)).chain(
            RingValue::algebra_generators(f.descriptor())
                .into_iter()
                .map(|x| AlgebraElement::monomial(f, 0, x).expect("generator descriptor")),
        );
        for v in gens {
            if self.mul(&v).max_distance(&v.mul(self)) > tol {
                return false;
            }
        }
        true
    }

    /// The unital trace X -> X_1.
    pub fn trace(&self) -> RingValue {
        self.coeffs[0].clone()
    }
}

/// The |T|×|T| matrix with entries f(st^-1, t) X_{st^-1}.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularMatrix {
    size: usize,
    entries: Vec<RingValue>,
}

impl RegularMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, s: usize, t: usize) -> &RingValue {
        &self.entries[s * self.size + t]
    }

    /// Complex block matrix obtained by evaluating every entry at a torus point.
    pub fn flatten(&self, point: &[C64]) -> DMatrix<C64> {
        let blocks: Vec<DMatrix<C64>> = self.entries.iter().map(|e| e.eval_block(point)).collect();
        let k = blocks.first().map(|b| b.nrows()).unwrap_or(0);
        let n = self.size;
        let mut m = DMatrix::zeros(n * k, n * k);
        for s in 0..n {
            for t in 0..n {
                m.view_mut((s * k, t * k), (k, k)).copy_from(&blocks[s * n + t]);
            }
        }
        m
    }

    pub fn mul(&self, o: &RegularMatrix) -> RegularMatrix {
        let n = self.size;
        let d = self.entries[0].descriptor();
        let mut entries = Vec::with_capacity(n * n);
        for s in 0..n {
            for t in 0..n {
                let mut acc = RingValue::zero(&d);
                for r in 0..n {
                    acc = acc.add(&self.entry(s, r).mul(o.entry(r, t)));
                }
                entries.push(acc);
            }
        }
        RegularMatrix { size: n, entries }
    }

    pub fn adjoint(&self) -> RegularMatrix {
        let n = self.size;
        RegularMatrix {
            size: n,
            entries: (0..n).flat_map(|s| (0..n).map(move |t| (s, t))).map(|(s, t)| self.entry(t, s).star()).collect(),
        }
    }

    pub fn max_distance(&self, o: &RegularMatrix) -> f64 {
        self.entries.iter().zip(&o.entries).map(|(a, b)| a.dist(b)).fold(0.0, f64::max)
    }

    /// Reads the element back from the first column (entry (s,1) is X_s).
    pub fn column_zero(&self) -> Vec<RingValue> {
        (0..self.size).map(|s| self.entry(s, 0).clone()).collect()
    }

    /// CSV with real and imaginary parts interleaved; entries must be scalars.
    pub fn to_csv(&self) -> Result<String> {
        let m = self.flatten(&[]);
        let mut out = String::new();
        for r in 0..m.nrows() {
            let row: Vec<String> = (0..m.ncols())
                .flat_map(|c| [m[(r, c)].re.to_string(), m[(r, c)].im.to_string()])
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        Ok(out)
    }
}

/// A finite subgroup H ≤ T with the restricted cocycle; moves elements supported in H
/// between S(f|H) and S(f).
#[derive(Clone, Debug)]
pub struct Restriction {
    parent: Arc<SchurFunction>,
    sub: Arc<SchurFunction>,
    embedding: Vec<usize>,
}

impl Restriction {
    pub fn new(f: &Arc<SchurFunction>, elements: &[usize]) -> Result<Self> {
        let (h, emb) = f.group().subgroup(elements)?;
        let sub = SchurFunction::from_fn(Arc::new(h), f.descriptor().clone(), |i, j| f.get(emb[i], emb[j]).clone())?;
        Ok(Restriction {
            parent: f.clone(),
            sub: Arc::new(sub),
            embedding: emb,
        })
    }

    pub fn cocycle(&self) -> &Arc<SchurFunction> {
        &self.sub
    }

    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    pub fn restrict(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        if !same_cocycle(x.cocycle(), &self.parent) {
            return Err(Error::DescriptorMismatch("element of another algebra".into()));
        }
        for (t, c) in x.coeffs().iter().enumerate() {
            if !c.is_zero() && !self.embedding.contains(&t) {
                return precondition(format!(
                    "nonzero coefficient at {} outside the subgroup",
                    self.parent.group().label(t)
                ));
            }
        }
        AlgebraElement::from_coeffs(&self.sub, self.embedding.iter().map(|&t| x.coeff(t).clone()).collect())
    }

    pub fn extend(&self, y: &AlgebraElement) -> AlgebraElement {
        let mut x = AlgebraElement::zero(&self.parent);
        for (i, &t) in self.embedding.iter().enumerate() {
            x.coeffs[t] = y.coeff(i).clone();
        }
        x
    }
}

/// ½(V_1 ± α V_t) without checking α² = tilde(t).
pub fn projection_pair_unchecked(f: &Arc<SchurFunction>, t: usize, alpha: &RingValue) -> Result<(AlgebraElement, AlgebraElement)> {
    if f.group().mul(t, t) != 0 {
        return precondition(format!("{} does not have order at most 2", f.group().label(t)));
    }
    let half = AlgebraElement::unit(f).scale_real(0.5);
    let at = AlgebraElement::monomial(f, t, alpha.scale_real(0.5))?;
    Ok((half.add(&at), half.sub(&at)))
}

/// ½(V_1 ± α V_t), a complementary pair of projections when α² = tilde(t).
pub fn projection_pair(f: &Arc<SchurFunction>, t: usize, alpha: &RingValue, tol: f64) -> Result<(AlgebraElement, AlgebraElement)> {
    if !alpha.is_unitary(tol) || !alpha.is_central(tol) {
        return precondition("alpha must be a central unitary");
    }
    let r = alpha.mul(alpha).dist(&f.tilde(t));
    if r > tol {
        return Err(Error::Relation(format!("alpha^2 differs from tilde({}) by {r:.3e}", f.group().label(t))));
    }
    projection_pair_unchecked(f, t, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::{cx, klein_table, make_f_alpha, KLEIN_A};
    use crate::group::make_cyclic;
    use crate::ring::RingDescriptor;

    fn trivial(n: usize) -> Arc<SchurFunction> {
        Arc::new(SchurFunction::constant(Arc::new(make_cyclic(n).unwrap()), RingDescriptor::ComplexScalar))
    }

    fn sign_z2(c: RingValue) -> Arc<SchurFunction> {
        Arc::new(make_f_alpha(2, &[c], &RingDescriptor::ComplexScalar).unwrap())
    }

    #[test]
    fn z2_product_formula() {
        let c = cx(0.0, 1.0);
        let f = sign_z2(c.clone());
        let x = AlgebraElement::from_coeffs(&f, vec![cx(1.0, 2.0), cx(-0.5, 0.3)]).unwrap();
        let y = AlgebraElement::from_coeffs(&f, vec![cx(0.2, 0.0), cx(1.5, -1.0)]).unwrap();
        let p = x.mul(&y);
        let expect = x.coeff(0).mul(y.coeff(0)).add(&c.mul(x.coeff(1)).mul(y.coeff(1)));
        assert!(p.coeff(0).dist(&expect) < 1e-14);
    }

    #[test]
    fn generators_multiply_by_the_cocycle() {
        let f = Arc::new(make_f_alpha(4, &[cx(0.6, 0.8), cx(0.0, 1.0), cx(-1.0, 0.0)], &RingDescriptor::ComplexScalar).unwrap());
        for s in 0..4 {
            for t in 0..4 {
                let lhs = AlgebraElement::generator(&f, s).mul(&AlgebraElement::generator(&f, t));
                let rhs = AlgebraElement::monomial(&f, (s + t) % 4, f.get(s, t).clone()).unwrap();
                assert!(lhs.max_distance(&rhs) < 1e-14);
            }
            let vs = AlgebraElement::generator(&f, s).star();
            let expect = AlgebraElement::monomial(&f, (4 - s) % 4, f.tilde(s)).unwrap();
            assert!(vs.max_distance(&expect) < 1e-14);
        }
    }

    #[test]
    fn all_ones_matrix() {
        let f = trivial(5);
        let x = AlgebraElement::from_coeffs(&f, vec![cx(1.0, 0.0); 5]).unwrap();
        let m = x.regular_matrix();
        assert!((0..5).all(|s| (0..5).all(|t| m.entry(s, t) == &cx(1.0, 0.0))));
        assert!((x.norm(1) - 5.0).abs() < 1e-12);
        assert!((AlgebraElement::generator(&f, 2).norm(1) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn coefficients_on_generators() {
        let f = Arc::new(make_f_alpha(3, &[cx(0.0, 1.0), cx(-1.0, 0.0)], &RingDescriptor::ComplexScalar).unwrap());
        let g = f.group();
        for r in 0..3 {
            let v = AlgebraElement::generator(&f, r);
            for s in 0..3 {
                for t in 0..3 {
                    let expect = if s == g.mul(r, t) { f.get(r, t).clone() } else { cx(0.0, 0.0) };
                    assert!(v.coefficient(s, t).dist(&expect) < 1e-15);
                }
                assert_eq!(v.coefficient(s, 0), *v.coeff(s));
            }
        }
    }

    #[test]
    fn positivity_and_trace() {
        let f = trivial(4);
        let x = AlgebraElement::from_coeffs(&f, vec![cx(2.0, 0.0), cx(0.0, 0.0), cx(0.0, 1.0), cx(0.0, 0.0)]).unwrap();
        assert!(x.coefficient_positivity(1e-12).unwrap().dist(&cx(5.0, 0.0)) < 1e-12);
        assert_eq!(AlgebraElement::unit(&f).trace(), cx(1.0, 0.0));
    }

    #[test]
    fn projections() {
        let f = trivial(2);
        let (p, q) = projection_pair(&f, 1, &cx(1.0, 0.0), 1e-12).unwrap();
        assert!(p.is_projection(1e-12) && q.is_projection(1e-12));
        assert!(p.mul(&q).is_zero());
        assert!(p.add(&q).max_distance(&AlgebraElement::unit(&f)) < 1e-15);
        assert!(projection_pair(&f, 1, &cx(0.0, 1.0), 1e-12).is_err());
        let (p, _) = projection_pair_unchecked(&f, 1, &cx(0.0, 1.0)).unwrap();
        assert!(!p.is_projection(1e-9));
        assert!(AlgebraElement::unit(&f).is_projection(1e-12));
    }

    #[test]
    fn klein_center() {
        let r = |x: f64| RingValue::Real(x);
        let f = Arc::new(klein_table(&r(1.0), &r(1.0), &r(1.0), &r(-1.0)).unwrap());
        let va = AlgebraElement::generator(&f, KLEIN_A);
        assert!(!va.center_check(1e-9));
        assert!(!va.commutes_with_all(1e-9));
        assert!(AlgebraElement::unit(&f).center_check(1e-9));
    }

    #[test]
    fn restriction_to_even_subgroup() {
        let f = Arc::new(make_f_alpha(4, &[cx(0.0, 1.0), cx(0.6, 0.8), cx(-1.0, 0.0)], &RingDescriptor::ComplexScalar).unwrap());
        let res = Restriction::new(&f, &[0, 2]).unwrap();
        let x = AlgebraElement::from_coeffs(&f, vec![cx(1.0, 1.0), cx(0.0, 0.0), cx(0.5, -2.0), cx(0.0, 0.0)]).unwrap();
        let y = AlgebraElement::from_coeffs(&f, vec![cx(-1.0, 0.0), cx(0.0, 0.0), cx(0.0, 3.0), cx(0.0, 0.0)]).unwrap();
        let prod = res.restrict(&x).unwrap().mul(&res.restrict(&y).unwrap());
        assert!(res.extend(&prod).max_distance(&x.mul(&y)) < 1e-13);
        assert!(res.restrict(&AlgebraElement::generator(&f, 1)).is_err());
    }
}
