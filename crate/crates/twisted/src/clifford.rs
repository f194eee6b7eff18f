//! Clifford-type cocycles f_ρ on the group of subsets of an ordered label set, and the
//! periodicity isomorphisms that adjoin one or two generators.
//!
//! Subsets are bitmasks (bit i is label i). Extensions append new labels after the old
//! ones, so the new generators are the largest in the order.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::AlgebraElement;
use crate::cocycle::SchurFunction;
use crate::error::{invalid, precondition, Error, Result};
use crate::group::{make_subset_group, GroupTable};
use crate::iso::Morphism;
use crate::linalg::RingMatrix;
use crate::model::{AlgebraModel, ModelElement};
use crate::ring::{Field, RingDescriptor, RingValue};

/// Largest label set accepted.
pub const MAX_LABELS: usize = 8;

/// Ordered labels S, a central unitary ρ(s) for each label and the coefficient ring.
#[derive(Clone, Debug)]
pub struct CliffordSpec {
    labels: Vec<String>,
    group: Arc<GroupTable>,
    rho: Vec<RingValue>,
    descriptor: RingDescriptor,
}

impl CliffordSpec {
    pub fn new<S: AsRef<str>>(labels: &[S], rho: Vec<RingValue>, descriptor: RingDescriptor, tol: f64) -> Result<Self> {
        if labels.len() > MAX_LABELS {
            return invalid(format!("at most {MAX_LABELS} labels"));
        }
        if labels.len() != rho.len() {
            return invalid(format!("{} labels but {} rho values", labels.len(), rho.len()));
        }
        descriptor.validate()?;
        let sg = make_subset_group(labels)?;
        for (l, r) in sg.base().iter().zip(&rho) {
            if !r.has_descriptor(&descriptor) {
                return Err(Error::DescriptorMismatch(format!("rho({l})")));
            }
            if !r.is_unitary(tol) || !r.is_central(tol) {
                return precondition(format!("rho({l}) must be a central unitary"));
            }
        }
        Ok(CliffordSpec {
            labels: sg.base().to_vec(),
            group: Arc::new(sg.into_group()),
            rho,
            descriptor,
        })
    }

    /// Labels "1", "2", ….
    pub fn numbered(rho: Vec<RingValue>, descriptor: RingDescriptor, tol: f64) -> Result<Self> {
        let labels: Vec<String> = (1..=rho.len()).map(|i| i.to_string()).collect();
        CliffordSpec::new(&labels, rho, descriptor, tol)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn rho(&self) -> &[RingValue] {
        &self.rho
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    pub fn field(&self) -> Field {
        self.descriptor.field()
    }

    /// Mask of the whole label set.
    pub fn full(&self) -> usize {
        (1 << self.size()) - 1
    }

    pub fn cocycle(&self) -> Arc<SchurFunction> {
        Arc::new(clifford_cocycle(self))
    }

    /// ∏_{s∈A} ρ(s).
    pub fn rho_product(&self, mask: usize) -> RingValue {
        (0..self.size())
            .filter(|i| mask >> i & 1 == 1)
            .fold(RingValue::unit(&self.descriptor), |acc, i| acc.mul(&self.rho[i]))
    }

    /// f_ρ(S,S)* = (−1)^{n(n−1)/2} ∏ρ* for the whole set S.
    pub fn tilde_full(&self) -> RingValue {
        let n = self.size();
        let sign = if (n * n.saturating_sub(1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
        self.rho_product(self.full()).star().scale_real(sign)
    }

    /// Appends labels with the given ρ values; labels continue the numbering.
    pub fn extend(&self, extra: &[RingValue], tol: f64) -> Result<CliffordSpec> {
        let mut labels = self.labels.clone();
        let mut next = self.size() + 1;
        for _ in extra {
            while labels.contains(&next.to_string()) {
                next += 1;
            }
            labels.push(next.to_string());
            next += 1;
        }
        let mut rho = self.rho.clone();
        rho.extend(extra.iter().cloned());
        CliffordSpec::new(&labels, rho, self.descriptor.clone(), tol)
    }
}

/// (−1)^τ with τ = Σ_{x∈a} #{y ∈ b : y < x}.
pub fn transposition_sign(a: usize, b: usize) -> i32 {
    let mut tau = 0u32;
    let mut rest = a;
    while rest != 0 {
        let x = rest.trailing_zeros();
        tau += (b & ((1usize << x) - 1)).count_ones();
        rest &= rest - 1;
    }
    if tau % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Reduces a word of anticommuting involutions by adjacent swaps, cancelling equal
/// neighbours. Returns the sign and the resulting subset.
pub fn reduce_word(word: &[usize]) -> (i32, usize) {
    let mut w = word.to_vec();
    let mut sign = 1;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < w.len() {
            if w[i] == w[i + 1] {
                w.drain(i..i + 2);
                changed = true;
            } else if w[i] > w[i + 1] {
                w.swap(i, i + 1);
                sign = -sign;
                changed = true;
                i += 1;
            } else {
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
    (sign, w.iter().fold(0, |m, x| m | 1 << x))
}

/// Bubble-sort oracle for the sign: the ascending words of a and b concatenated.
pub fn bubble_sort_sign(a: usize, b: usize) -> i32 {
    let bits = |m: usize| (0..usize::BITS as usize).filter(move |i| m >> i & 1 == 1);
    let word: Vec<usize> = bits(a).chain(bits(b)).collect();
    reduce_word(&word).0
}

/// f_ρ(A,B) = (−1)^τ ∏_{s∈A∩B} ρ(s).
pub fn clifford_cocycle(spec: &CliffordSpec) -> SchurFunction {
    SchurFunction::from_fn(spec.group.clone(), spec.descriptor.clone(), |a, b| {
        spec.rho_product(a & b).scale_real(transposition_sign(a, b) as f64)
    })
    .expect("descriptor checked on construction")
}

/// The morphism S(f_ρ) → target with V_s ↦ images[s] and V_A ↦ the ascending product.
/// Fails naming the labels when the images violate x_s x_t = −x_t x_s, x_s² = ρ(s),
/// x_s* = ρ(s)* x_s or commutation with coefficients.
pub fn universal_map(spec: &CliffordSpec, images: Vec<ModelElement>, target: AlgebraModel, tol: f64) -> Result<Morphism> {
    let n = spec.size();
    if images.len() != n {
        return invalid(format!("need {n} images, got {}", images.len()));
    }
    for x in &images {
        target.check(x)?;
    }
    let l = &spec.labels;
    for s in 0..n {
        let rho = target.embed(&spec.rho[s])?;
        let r = images[s].mul(&images[s]).dist(&rho);
        if r > tol {
            return Err(Error::Relation(format!("x_{}^2 != rho({}) (off by {r:.3e})", l[s], l[s])));
        }
        let r = images[s].star().dist(&target.embed(&spec.rho[s].star())?.mul(&images[s]));
        if r > tol {
            return Err(Error::Relation(format!("x_{}* != rho({})* x_{} (off by {r:.3e})", l[s], l[s], l[s])));
        }
        for c in RingValue::algebra_generators(&spec.descriptor) {
            let e = target.embed(&c)?;
            if e.mul(&images[s]).dist(&images[s].mul(&e)) > tol {
                return Err(Error::Relation(format!("x_{} does not commute with coefficients", l[s])));
            }
        }
        for t in s + 1..n {
            let r = images[s].mul(&images[t]).add(&images[t].mul(&images[s])).max_abs();
            if r > tol {
                return Err(Error::Relation(format!("x_{} x_{} != -x_{} x_{} (off by {r:.3e})", l[s], l[t], l[t], l[s])));
            }
        }
    }
    let one = target.one()?;
    let all = (0..1usize << n)
        .map(|mask| {
            (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .fold(one.clone(), |acc, i| acc.mul(&images[i]))
        })
        .collect();
    Morphism::new("universal", &spec.cocycle(), target, all)
}

/// One term ε_t X_t V_t of a projection family.
#[derive(Clone, Debug)]
pub struct FamilyTerm {
    pub t: usize,
    pub eps: f64,
    pub x: RingValue,
}

/// P = ½V_1 + Σ ε_t X_t V_t for pairwise commuting involutions t whose canonical unitaries
/// anticommute, X_t* = f(t,t) X_t and Σ X_t* X_t = ¼.
pub fn projection_family(f: &Arc<SchurFunction>, terms: &[FamilyTerm], tol: f64) -> Result<AlgebraElement> {
    if terms.is_empty() {
        return precondition("a projection family needs at least one element (sum |X_t|^2 = 1/4)");
    }
    let g = f.group();
    let d = f.descriptor();
    let mut total = RingValue::zero(d);
    for (k, term) in terms.iter().enumerate() {
        let t = term.t;
        let name = g.label(t);
        if t >= f.order() || t == g.identity() || g.mul(t, t) != g.identity() {
            return precondition(format!("{name} is not an element of order 2"));
        }
        if term.eps.abs() != 1.0 {
            return precondition(format!("eps for {name} must be +1 or -1"));
        }
        if !term.x.is_central(tol) {
            return precondition(format!("X_{name} must be central"));
        }
        if term.x.star().dist(&f.get(t, t).mul(&term.x)) > tol {
            return precondition(format!("X_{name}* != f({name},{name}) X_{name}"));
        }
        for other in &terms[..k] {
            let s = other.t;
            if g.mul(s, t) != g.mul(t, s) {
                return precondition(format!("{} and {name} do not commute", g.label(s)));
            }
            if f.get(s, t).add(f.get(t, s)).max_abs() > tol {
                return precondition(format!("V_{} and V_{name} do not anticommute", g.label(s)));
            }
            if s == t {
                return precondition(format!("{name} appears twice"));
            }
        }
        total = total.add(&term.x.star().mul(&term.x));
    }
    let r = total.dist(&RingValue::real(d, 0.25));
    if r > tol {
        return precondition(format!("sum |X_t|^2 != 1/4 (off by {r:.3e})"));
    }
    let mut p = AlgebraElement::unit(f).scale_real(0.5);
    for term in terms {
        p = p.add(&AlgebraElement::monomial(f, term.t, term.x.scale_real(term.eps))?);
    }
    Ok(p)
}

fn require_unitary(xs: &[RingValue], spec: &CliffordSpec, tol: f64) -> Result<()> {
    for (i, a) in xs.iter().enumerate() {
        if !a.has_descriptor(&spec.descriptor) {
            return Err(Error::DescriptorMismatch(format!("alpha_{}", i + 1)));
        }
        if !a.is_unitary(tol) || !a.is_central(tol) {
            return precondition(format!("alpha_{} must be a central unitary", i + 1));
        }
    }
    Ok(())
}

fn require_even(spec: &CliffordSpec) -> Result<()> {
    if spec.size() % 2 != 0 {
        return precondition(format!("needs an even number of labels, got {}", spec.size()));
    }
    Ok(())
}

fn require_real(spec: &CliffordSpec) -> Result<()> {
    if spec.field() != Field::Real {
        return precondition("needs a real coefficient algebra");
    }
    Ok(())
}

fn tw(f: &Arc<SchurFunction>, mask: usize, x: RingValue) -> ModelElement {
    ModelElement::Twisted(AlgebraElement::monomial(f, mask, x).expect("descriptor matches"))
}

/// A periodicity map together with the extended spec it starts from.
#[derive(Clone, Debug)]
pub struct Extension {
    pub spec: CliffordSpec,
    pub morphism: Morphism,
}

/// ρ′ = ρ ∪ {α₁², −α₂²}: S(ρ′) ≅ M_2(S(ρ)) with V_s ↦ diag(V_s, −V_s),
/// V_{n+1} ↦ α₁[[0,1],[1,0]], V_{n+2} ↦ α₂[[0,−1],[1,0]].
pub fn extend_two_matrix(spec: &CliffordSpec, a1: &RingValue, a2: &RingValue, tol: f64) -> Result<Extension> {
    require_unitary(&[a1.clone(), a2.clone()], spec, tol)?;
    let prime = spec.extend(&[a1.mul(a1), a2.mul(a2).neg()], tol)?;
    let f = spec.cocycle();
    let d = &spec.descriptor;
    let z = || tw(&f, 0, RingValue::zero(d));
    let mut images: Vec<ModelElement> = (0..spec.size())
        .map(|i| {
            let m = 1 << i;
            ModelElement::mat2(tw(&f, m, RingValue::unit(d)), z(), z(), tw(&f, m, RingValue::unit(d).neg()))
        })
        .collect();
    images.push(ModelElement::mat2(z(), tw(&f, 0, a1.clone()), tw(&f, 0, a1.clone()), z()));
    images.push(ModelElement::mat2(z(), tw(&f, 0, a2.neg()), tw(&f, 0, a2.clone()), z()));
    let target = AlgebraModel::matrix(2, AlgebraModel::twisted(&f));
    let mut morphism = universal_map(&prime, images, target, tol)?;
    morphism = rename(morphism, "extend_two_matrix")?;
    Ok(Extension { spec: prime, morphism })
}

fn rename(m: Morphism, name: &str) -> Result<Morphism> {
    Morphism::new(name, m.source(), m.target().clone(), m.images().to_vec())
}

/// ½(V_∅ ± α₁*α₂* V_{n+1,n+2}) in S(ρ′), which `extend_two_matrix` sends to e₁₁ and e₂₂.
pub fn matrix_unit_projections(ext: &Extension, a1: &RingValue, a2: &RingValue) -> Result<(AlgebraElement, AlgebraElement)> {
    let f = ext.morphism.source();
    let n = ext.spec.size();
    let pair = (1 << (n - 2)) | (1 << (n - 1));
    let half = AlgebraElement::unit(f).scale_real(0.5);
    let v = AlgebraElement::monomial(f, pair, a1.star().mul(&a2.star()).scale_real(0.5))?;
    Ok((half.add(&v), half.sub(&v)))
}

/// Applies `extend_two_matrix` twice with (α₁,α₂) then (α₃,α₄):
/// S(ρ″) → M_2(S(ρ′)) → M_2(M_2(S(ρ))) = M_4(S(ρ)).
pub fn extend_two_matrix_twice(spec: &CliffordSpec, alphas: &[RingValue; 4], tol: f64) -> Result<Extension> {
    let first = extend_two_matrix(spec, &alphas[0], &alphas[1], tol)?;
    let second = extend_two_matrix(&first.spec, &alphas[2], &alphas[3], tol)?;
    let morphism = rename(second.morphism.then(&first.morphism)?.flattened()?, "extend_two_matrix_twice")?;
    Ok(Extension {
        spec: second.spec,
        morphism,
    })
}

/// Real, |S| = 2n, ρ′(2n+l) = −α_l² f̃(S): S(ρ′) ≅ H ⊗ S(ρ) with V_s ↦ V_s ⊗ 1,
/// V_{2n+1} ↦ α₁ f̃(S) V_S ⊗ i, V_{2n+2} ↦ α₂ f̃(S) V_S ⊗ j.
pub fn extend_two_quaternion(spec: &CliffordSpec, a1: &RingValue, a2: &RingValue, tol: f64) -> Result<Extension> {
    require_real(spec)?;
    require_even(spec)?;
    require_unitary(&[a1.clone(), a2.clone()], spec, tol)?;
    let ts = spec.tilde_full();
    let prime = spec.extend(&[a1.mul(a1).mul(&ts).neg(), a2.mul(a2).mul(&ts).neg()], tol)?;
    let f = spec.cocycle();
    let d = &spec.descriptor;
    let quat = |pos: usize, mask: usize, x: RingValue| {
        let mut parts = vec![tw(&f, 0, RingValue::zero(d)); 4];
        parts[pos] = tw(&f, mask, x);
        ModelElement::Quaternion(parts)
    };
    let mut images: Vec<ModelElement> = (0..spec.size()).map(|i| quat(0, 1 << i, RingValue::unit(d))).collect();
    images.push(quat(1, spec.full(), a1.mul(&ts)));
    images.push(quat(2, spec.full(), a2.mul(&ts)));
    let target = AlgebraModel::quaternion(AlgebraModel::twisted(&f));
    let morphism = rename(universal_map(&prime, images, target, tol)?, "extend_two_quaternion")?;
    Ok(Extension { spec: prime, morphism })
}

/// Real, |S| = 2n, ρ′(2n+1) = −f̃(S): S(ρ′) is the complexification of S(ρ) via
/// V_s ↦ (V_s, 0), V_{2n+1} ↦ (0, −f̃(S) V_S).
pub fn complexify_odd(spec: &CliffordSpec, tol: f64) -> Result<Extension> {
    require_real(spec)?;
    require_even(spec)?;
    let ts = spec.tilde_full();
    let prime = spec.extend(&[ts.neg()], tol)?;
    let f = spec.cocycle();
    let d = &spec.descriptor;
    let zero = || tw(&f, 0, RingValue::zero(d));
    let mut images: Vec<ModelElement> = (0..spec.size())
        .map(|i| ModelElement::complexified(tw(&f, 1 << i, RingValue::unit(d)), zero()))
        .collect();
    images.push(ModelElement::complexified(zero(), tw(&f, spec.full(), ts.neg())));
    let target = AlgebraModel::complexified(AlgebraModel::twisted(&f));
    let morphism = rename(universal_map(&prime, images, target, tol)?, "complexify_odd")?;
    Ok(Extension { spec: prime, morphism })
}

/// Left-regular operator of x as a ring matrix.
pub fn regular_operator(x: &AlgebraElement) -> RingMatrix {
    let r = x.regular_matrix();
    RingMatrix::from_fn(x.cocycle().descriptor(), r.size(), r.size(), |s, t| r.entry(s, t).clone())
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitResiduals {
    /// max |θ±*θ± − 1|
    pub isometry: f64,
    /// max |θ±θ±* − P±|
    pub projection: f64,
    /// max over A ⊂ S of |θ± V_A θ±* − V_A P±|
    pub intertwining: f64,
    /// max |θ±* reg(V_B) θ± − reg(read-off)|
    pub regular: f64,
    /// distance of the adjoint of θ± from the displayed θ±* formula
    pub adjoint_formula: f64,
    /// max of |P+ + P− − 1|, |P+P−|, |V_{S′}P± ∓ P±|
    pub central: f64,
}

#[derive(Clone, Debug)]
pub struct SplitOdd {
    pub spec: CliffordSpec,
    pub p_plus: AlgebraElement,
    pub p_minus: AlgebraElement,
    pub theta_plus: RingMatrix,
    pub theta_minus: RingMatrix,
    pub morphism: Morphism,
    pub residuals: SplitResiduals,
}

/// |S| = 2n, ρ′(2n+1) = f̃(S), S′ = S ∪ {2n+1}: P± = ½(V_∅ ± V_{S′}) are central and
/// S(ρ′) ≅ S(ρ) ⊕ S(ρ) via Y ↦ (θ+* Y θ+, θ−* Y θ−).
pub fn split_odd(spec: &CliffordSpec, tol: f64) -> Result<SplitOdd> {
    require_even(spec)?;
    let prime = spec.extend(&[spec.tilde_full()], tol)?;
    let f = spec.cocycle();
    let fp = prime.cocycle();
    let d = spec.descriptor.clone();
    let full = spec.full();
    let top = 1usize << spec.size();
    let half = AlgebraElement::unit(&fp).scale_real(0.5);
    let vs = AlgebraElement::monomial(&fp, full | top, RingValue::real(&d, 0.5))?;
    let p_plus = half.add(&vs);
    let p_minus = half.sub(&vs);

    let r2 = std::f64::consts::FRAC_1_SQRT_2;
    let theta = |sign: f64| {
        let mut m = RingMatrix::zeros(&d, 2 * top, top);
        for a in 0..top {
            m.set(a, a, RingValue::real(&d, r2));
            m.set(a | top, full ^ a, f.get(full ^ a, full).scale_real(sign * r2));
        }
        m
    };
    let theta_star = |sign: f64| {
        let mut m = RingMatrix::zeros(&d, top, 2 * top);
        for a in 0..top {
            m.set(a, a, RingValue::real(&d, r2));
            m.set(a, (full ^ a) | top, f.get(a, full).star().scale_real(sign * r2));
        }
        m
    };
    let theta_plus = theta(1.0);
    let theta_minus = theta(-1.0);

    let vsp = AlgebraElement::generator(&fp, full | top);
    let one = AlgebraElement::unit(&fp);
    let mut res = SplitResiduals {
        isometry: 0.0,
        projection: 0.0,
        intertwining: 0.0,
        regular: 0.0,
        adjoint_formula: 0.0,
        central: p_plus.add(&p_minus).max_distance(&one).max(p_plus.mul(&p_minus).max_abs()),
    };
    let id = RingMatrix::identity(&d, top);
    let mut images = vec![Vec::new(); 2 * top];
    for (sign, th, p) in [(1.0, &theta_plus, &p_plus), (-1.0, &theta_minus, &p_minus)] {
        res.central = res.central.max(vsp.mul(p).max_distance(&p.scale_real(sign)));
        let ts = th.adjoint();
        res.adjoint_formula = res.adjoint_formula.max(ts.max_distance(&theta_star(sign)));
        res.isometry = res.isometry.max(ts.mul(th).max_distance(&id));
        res.projection = res.projection.max(th.mul(&ts).max_distance(&regular_operator(p)));
        for a in 0..top {
            let lhs = th.mul(&regular_operator(&AlgebraElement::generator(&f, a))).mul(&ts);
            let rhs = regular_operator(&AlgebraElement::generator(&fp, a).mul(p));
            res.intertwining = res.intertwining.max(lhs.max_distance(&rhs));
        }
        for (b, img) in images.iter_mut().enumerate() {
            let m = ts.mul(&regular_operator(&AlgebraElement::generator(&fp, b))).mul(th);
            let x = AlgebraElement::from_coeffs(&f, m.column(0))?;
            res.regular = res.regular.max(regular_operator(&x).max_distance(&m));
            img.push(ModelElement::Twisted(x));
        }
    }
    let images = images.into_iter().map(ModelElement::DirectSum).collect();
    let t = AlgebraModel::twisted(&f);
    let morphism = Morphism::new("split_odd", &fp, AlgebraModel::DirectSum(vec![t.clone(), t]), images)?;
    Ok(SplitOdd {
        spec: prime,
        p_plus,
        p_minus,
        theta_plus,
        theta_minus,
        morphism,
        residuals: res,
    })
}

#[derive(Clone, Debug)]
pub struct EvenProjection {
    pub spec: CliffordSpec,
    pub p: AlgebraElement,
    pub morphism: Morphism,
    /// Whether the construction guarantees surjectivity (m ≤ 2).
    pub surjectivity_expected: bool,
}

/// |S| = 2n, m = alphas.len() extra labels with ρ′(2n+i) = α_i² f̃(S), S_i = S ∪ {2n+i}:
/// P = ½V_∅ + (1/(2√m)) Σ α_i* V_{S_i} and the injective map V_A ↦ P V_A into P S(ρ′) P.
pub fn extend_even_projection(spec: &CliffordSpec, alphas: &[RingValue], tol: f64) -> Result<EvenProjection> {
    require_even(spec)?;
    if alphas.is_empty() {
        return precondition("needs at least one extra generator");
    }
    require_unitary(alphas, spec, tol)?;
    let ts = spec.tilde_full();
    let extra: Vec<RingValue> = alphas.iter().map(|a| a.mul(a).mul(&ts)).collect();
    let prime = spec.extend(&extra, tol)?;
    let fp = prime.cocycle();
    let m = alphas.len();
    let c = 1.0 / (2.0 * (m as f64).sqrt());
    let terms: Vec<FamilyTerm> = alphas
        .iter()
        .enumerate()
        .map(|(i, a)| FamilyTerm {
            t: spec.full() | 1 << (spec.size() + i),
            eps: 1.0,
            x: a.star().scale_real(c),
        })
        .collect();
    let p = projection_family(&fp, &terms, tol)?;
    let target = AlgebraModel::corner(AlgebraModel::twisted(&fp), ModelElement::Twisted(p.clone()))?;
    let images = (0..1usize << spec.size())
        .map(|a| ModelElement::Twisted(p.mul(&AlgebraElement::generator(&fp, a))))
        .collect();
    let morphism = Morphism::new("extend_even_projection", &spec.cocycle(), target, images)?;
    Ok(EvenProjection {
        spec: prime,
        p,
        morphism,
        surjectivity_expected: m <= 2,
    })
}

/// Largest coefficient |Y_{B ∪ {2n+1, 2n+2}}| over the corner spanning set {P V_A P}.
pub fn corner_bc_max(ext: &EvenProjection, base_size: usize) -> f64 {
    let f = ext.p.cocycle();
    let both = (1usize << base_size) | (1 << (base_size + 1));
    let mut worst: f64 = 0.0;
    for a in 0..f.order() {
        let y = ext.p.mul(&AlgebraElement::generator(f, a)).mul(&ext.p);
        for b in 0..1usize << base_size {
            worst = worst.max(y.coeff(b | both).max_abs());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_examples() {
        assert_eq!(transposition_sign(0, 0b11), 1);
        assert_eq!(transposition_sign(0b10, 0b01), -1);
        assert_eq!(transposition_sign(0b01, 0b10), 1);
        assert_eq!(reduce_word(&[1, 0, 1]), (-1, 0b01));
    }

    #[test]
    fn cocycle_small() {
        let d = RingDescriptor::ComplexScalar;
        let spec = CliffordSpec::numbered(vec![RingValue::unit(&d); 2], d, 1e-9).unwrap();
        let f = spec.cocycle();
        assert!(f.validate(1e-9).is_valid());
        assert_eq!(*f.get(1, 2), RingValue::unit(spec.descriptor()));
        assert_eq!(*f.get(2, 1), RingValue::unit(spec.descriptor()).neg());
    }
}
