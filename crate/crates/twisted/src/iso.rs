//! E-linear *-morphisms out of twisted group algebras, a verifier for them, and named
//! constructions of isomorphisms onto concrete algebras.

use std::f64::consts::PI;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::AlgebraElement;
use crate::cocycle::{coboundary, klein_table, make_f_alpha, Lambda, SchurFunction, KLEIN_A, KLEIN_B, KLEIN_C};
use crate::error::{invalid, precondition, Error, Result};
use crate::group::{direct_product, make_cyclic, GroupTable};
use crate::linalg::rank;
use crate::model::{AlgebraModel, ModelElement};
use crate::ring::{Field, RingDescriptor, RingValue, C64, DEFAULT_TOL};

/// A map S(f) → target given by the images of the canonical unitaries V_t and extended
/// E-linearly: φ(Σ X_t V_t) = Σ X_t φ(V_t).
#[derive(Clone, Debug)]
pub struct Morphism {
    name: String,
    source: Arc<SchurFunction>,
    target: AlgebraModel,
    images: Vec<ModelElement>,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub tol: f64,
    pub rank_tol: f64,
    /// Exponent window for Laurent coefficients; None picks 2·(max degree)+2.
    pub window: Option<i32>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            tol: DEFAULT_TOL,
            rank_tol: 1e-9,
            window: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MorphismReport {
    pub name: String,
    pub source: String,
    pub target: String,
    pub unit_residual: f64,
    pub mult_residual: f64,
    /// Labels (s, t) of the worst multiplicativity residual.
    pub worst_pair: Option<(String, String)>,
    pub star_residual: f64,
    pub linearity_residual: f64,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub window: Option<i32>,
    pub tol: f64,
    pub homomorphism: bool,
    pub injective: bool,
    pub surjective: bool,
}

impl MorphismReport {
    pub fn is_isomorphism(&self) -> bool {
        self.homomorphism && self.injective && self.surjective
    }
}

impl Morphism {
    pub fn new(name: impl Into<String>, source: &Arc<SchurFunction>, target: AlgebraModel, images: Vec<ModelElement>) -> Result<Self> {
        target.validate()?;
        if images.len() != source.order() {
            return invalid(format!("need {} generator images, got {}", source.order(), images.len()));
        }
        if target.descriptor() != *source.descriptor() {
            return Err(Error::DescriptorMismatch(format!(
                "source over {:?}, target over {:?}",
                source.descriptor(),
                target.descriptor()
            )));
        }
        for x in &images {
            target.check(x)?;
        }
        Ok(Morphism {
            name: name.into(),
            source: source.clone(),
            target,
            images,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Arc<SchurFunction> {
        &self.source
    }

    pub fn target(&self) -> &AlgebraModel {
        &self.target
    }

    pub fn images(&self) -> &[ModelElement] {
        &self.images
    }

    /// φ(V_t).
    pub fn image(&self, t: usize) -> &ModelElement {
        &self.images[t]
    }

    pub fn apply(&self, x: &AlgebraElement) -> Result<ModelElement> {
        if **x.cocycle() != *self.source {
            return Err(Error::DescriptorMismatch("element is not in the source algebra".into()));
        }
        let mut acc = self.target.zero()?;
        for (t, c) in x.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&self.target.embed(c)?.mul(&self.images[t]));
        }
        Ok(acc)
    }

    /// `outer ∘ self`, for a target built around S(g) where g is the source of `outer`.
    pub fn then(&self, outer: &Morphism) -> Result<Morphism> {
        let target = substitute(&self.target, &outer.source, &outer.target)?;
        let images = self
            .images
            .iter()
            .map(|x| x.map_twisted(&|a| outer.apply(a)))
            .collect::<Result<_>>()?;
        Morphism::new(format!("{} then {}", self.name, outer.name), &self.source, target, images)
    }

    /// Same map with a target M_k(M_l(A)) read as M_{kl}(A).
    pub fn flattened(&self) -> Result<Morphism> {
        let AlgebraModel::Matrix(k, inner) = &self.target else {
            return invalid("flattening needs a matrix target");
        };
        let AlgebraModel::Matrix(l, base) = &**inner else {
            return invalid("flattening needs a matrix-of-matrices target");
        };
        let target = AlgebraModel::matrix(k * l, (**base).clone());
        let images = self.images.iter().map(|x| x.flatten_matrix()).collect::<Result<_>>()?;
        Morphism::new(self.name.clone(), &self.source, target, images)
    }

    fn auto_window(&self) -> i32 {
        let d = self.source.descriptor();
        if !d.is_laurent() {
            return 0;
        }
        let fdeg = self.source.values().iter().map(|v| v.laurent_degree()).max().unwrap_or(0);
        let ideg = self.images.iter().map(|x| x.laurent_degree()).max().unwrap_or(0);
        2 * fdeg.max(ideg) + 2
    }

    /// Residuals of the *-homomorphism identities and rank-based bijectivity.
    pub fn verify(&self, opts: &VerifyOptions) -> Result<MorphismReport> {
        let f = &*self.source;
        let g = f.group();
        let n = f.order();
        let tgt = &self.target;

        let unit_residual = self.images[0].dist(&tgt.one()?);

        let embedded: Vec<ModelElement> = (0..n * n)
            .map(|k| tgt.embed(f.get(k / n, k % n)))
            .collect::<Result<_>>()?;
        let mut mult_residual = 0.0;
        let mut worst_pair = None;
        for s in 0..n {
            for t in 0..n {
                let lhs = self.images[s].mul(&self.images[t]);
                let rhs = embedded[s * n + t].mul(&self.images[g.mul(s, t)]);
                let r = lhs.dist(&rhs);
                if r > mult_residual {
                    mult_residual = r;
                    worst_pair = Some((g.label(s).to_string(), g.label(t).to_string()));
                }
            }
        }

        let mut star_residual: f64 = 0.0;
        for t in 0..n {
            let rhs = tgt.embed(&f.tilde(t))?.mul(&self.images[g.inv(t)]);
            star_residual = star_residual.max(self.images[t].star().dist(&rhs));
        }

        let mut linearity_residual: f64 = 0.0;
        for x in RingValue::algebra_generators(f.descriptor()) {
            let ex = tgt.embed(&x)?;
            for img in &self.images {
                linearity_residual = linearity_residual.max(ex.mul(img).dist(&img.mul(&ex)));
            }
        }

        let window = opts.window.unwrap_or_else(|| self.auto_window());
        let d = f.descriptor();
        let laurent = d.is_laurent();
        let image_of = |w: i32| -> Result<Vec<ModelElement>> {
            let mut out = Vec::new();
            for b in RingValue::real_basis(d, w) {
                let eb = tgt.embed(&b)?;
                for img in &self.images {
                    out.push(eb.mul(img));
                }
            }
            Ok(out)
        };
        let inj_vecs = image_of(window)?;
        let source_dim = n * d.real_dim(window);
        let target_dim = tgt.real_dim(window)?;

        let (rank_inj, surjective) = if !laurent && !tgt.is_corner() {
            let rows: Vec<Vec<f64>> = inj_vecs.iter().map(|x| x.coords(0)).collect::<Result<_>>()?;
            let r = rank(&rows, opts.rank_tol);
            (r, r == target_dim)
        } else {
            let extra = self.images.iter().map(|x| x.laurent_degree()).max().unwrap_or(0);
            let wide = if laurent { image_of(window + extra)? } else { inj_vecs.clone() };
            let span = tgt.spanning_set(window)?;
            let w = inj_vecs
                .iter()
                .chain(&wide)
                .chain(&span)
                .map(|x| x.laurent_degree())
                .max()
                .unwrap_or(0)
                .max(window);
            let coords = |v: &[ModelElement]| -> Result<Vec<Vec<f64>>> { v.iter().map(|x| x.coords(w)).collect() };
            let r = rank(&coords(&inj_vecs)?, opts.rank_tol);
            let wide_rows = coords(&wide)?;
            let r_wide = rank(&wide_rows, opts.rank_tol);
            let mut all = wide_rows;
            all.extend(coords(&span)?);
            let r_all = rank(&all, opts.rank_tol);
            (r, r_all == r_wide)
        };

        let homomorphism = unit_residual <= opts.tol
            && mult_residual <= opts.tol
            && star_residual <= opts.tol
            && linearity_residual <= opts.tol;
        Ok(MorphismReport {
            name: self.name.clone(),
            source: format!("S(f) on a group of order {n} over {}", AlgebraModel::Ring(d.clone())),
            target: tgt.to_string(),
            unit_residual,
            mult_residual,
            worst_pair,
            star_residual,
            linearity_residual,
            source_dim,
            target_dim,
            rank: rank_inj,
            window: if laurent { Some(window) } else { None },
            tol: opts.tol,
            homomorphism,
            injective: rank_inj == source_dim,
            surjective,
        })
    }
}

fn substitute(model: &AlgebraModel, f: &SchurFunction, by: &AlgebraModel) -> Result<AlgebraModel> {
    Ok(match model {
        AlgebraModel::Twisted(g) if **g == *f => by.clone(),
        AlgebraModel::Twisted(_) => return invalid("target contains a different twisted algebra"),
        AlgebraModel::Ring(d) => AlgebraModel::Ring(d.clone()),
        AlgebraModel::Matrix(k, m) => AlgebraModel::matrix(*k, substitute(m, f, by)?),
        AlgebraModel::Quaternion(m) => AlgebraModel::quaternion(substitute(m, f, by)?),
        AlgebraModel::Complexified(m) => AlgebraModel::complexified(substitute(m, f, by)?),
        AlgebraModel::DirectSum(v) => AlgebraModel::DirectSum(v.iter().map(|m| substitute(m, f, by)).collect::<Result<_>>()?),
        AlgebraModel::Corner(..) => return invalid("cannot compose through a corner"),
    })
}

fn ring(x: RingValue) -> ModelElement {
    ModelElement::Ring(x)
}

/// x central unitary with x^k ≈ target.
fn require_root(x: &RingValue, k: u32, target: &RingValue, what: &str, tol: f64) -> Result<()> {
    if !x.has_descriptor(&target.descriptor()) {
        return Err(Error::DescriptorMismatch(format!("{what}: {:?}", x.descriptor())));
    }
    if !x.is_central(tol) || !x.is_unitary(tol) {
        return precondition(format!("{what} must be a central unitary"));
    }
    let r = x.pow(k).dist(target);
    if r > tol {
        return precondition(format!("{what} fails its root hypothesis (residual {r:.3e})"));
    }
    Ok(())
}

pub fn identity(f: &Arc<SchurFunction>) -> Result<Morphism> {
    let images = (0..f.order())
        .map(|t| ModelElement::Twisted(AlgebraElement::generator(f, t)))
        .collect();
    Morphism::new("identity", f, AlgebraModel::twisted(f), images)
}

/// X ↦ (λ(t)* X_t) from S(f) onto S(f·δλ).
pub fn lambda_isomorphism(f: &Arc<SchurFunction>, lambda: &Lambda) -> Result<Morphism> {
    if lambda.group().order() != f.order() {
        return invalid("lambda lives on a different group");
    }
    let g = Arc::new(f.mul(&coboundary(lambda))?);
    let images = (0..f.order())
        .map(|t| Ok(ModelElement::Twisted(AlgebraElement::monomial(&g, t, lambda.get(t).star())?)))
        .collect::<Result<_>>()?;
    Morphism::new("lambda", f, AlgebraModel::twisted(&g), images)
}

fn require_z2(f: &SchurFunction) -> Result<()> {
    if f.order() != 2 {
        return invalid(format!("expected a cocycle on Z/2, group has order {}", f.order()));
    }
    Ok(())
}

/// X ↦ (X_0 + x X_1, X_0 − x X_1) onto E ⊕ E, for central unitary x with x² = f(1,1).
pub fn z2_split(f: &Arc<SchurFunction>, x: &RingValue, tol: f64) -> Result<Morphism> {
    require_z2(f)?;
    require_root(x, 2, f.get(1, 1), "x", tol)?;
    let d = f.descriptor().clone();
    let target = AlgebraModel::DirectSum(vec![AlgebraModel::Ring(d.clone()), AlgebraModel::Ring(d.clone())]);
    let images = vec![
        ModelElement::DirectSum(vec![ring(RingValue::unit(&d)), ring(RingValue::unit(&d))]),
        ModelElement::DirectSum(vec![ring(x.clone()), ring(x.neg())]),
    ];
    Morphism::new("z2_split", f, target, images)
}

/// z2_split with x a computed square root of f(1,1); fails when there is none.
pub fn z2_split_root(f: &Arc<SchurFunction>, tol: f64) -> Result<Morphism> {
    require_z2(f)?;
    match f.get(1, 1).central_root(2)? {
        Some(x) => z2_split(f, &x, tol),
        None => precondition("f(1,1) has no central unitary square root"),
    }
}

/// X ↦ X_0 + i X_1 in the complexification, for real E and f(1,1) = −1.
pub fn z2_complexify(f: &Arc<SchurFunction>, tol: f64) -> Result<Morphism> {
    require_z2(f)?;
    let d = f.descriptor().clone();
    if d.field() != Field::Real {
        return precondition("complexification needs a real coefficient algebra");
    }
    let r = f.get(1, 1).dist(&RingValue::real(&d, -1.0));
    if r > tol {
        return precondition(format!("f(1,1) must be -1 (off by {r:.3e})"));
    }
    let e = AlgebraModel::Ring(d.clone());
    let (one, zero) = (ring(RingValue::unit(&d)), ring(RingValue::zero(&d)));
    let images = vec![
        ModelElement::complexified(one.clone(), zero.clone()),
        ModelElement::complexified(zero, one),
    ];
    Morphism::new("z2_complexify", f, AlgebraModel::complexified(e), images)
}

/// Parameters (α, β, γ, ε) of the Klein-four family.
#[derive(Clone, Debug)]
pub struct KleinParams {
    pub alpha: RingValue,
    pub beta: RingValue,
    pub gamma: RingValue,
    pub eps: RingValue,
}

impl KleinParams {
    pub fn new(alpha: RingValue, beta: RingValue, gamma: RingValue, eps: RingValue) -> Self {
        KleinParams { alpha, beta, gamma, eps }
    }

    /// Real scalar parameters in any descriptor.
    pub fn signs(d: &RingDescriptor, a: f64, b: f64, c: f64, e: f64) -> Self {
        KleinParams::new(RingValue::real(d, a), RingValue::real(d, b), RingValue::real(d, c), RingValue::real(d, e))
    }

    pub fn cocycle(&self) -> Result<Arc<SchurFunction>> {
        Ok(Arc::new(klein_table(&self.alpha, &self.beta, &self.gamma, &self.eps)?))
    }

    fn descriptor(&self) -> RingDescriptor {
        self.alpha.descriptor()
    }

    fn eps_is(&self, sign: f64, tol: f64) -> bool {
        self.eps.dist(&RingValue::real(&self.descriptor(), sign)) <= tol
    }
}

fn klein_images(d: &RingDescriptor, one: ModelElement, a: ModelElement, b: ModelElement, c: ModelElement) -> Vec<ModelElement> {
    let _ = d;
    let mut v = vec![one.clone(), one.clone(), one.clone(), one];
    v[KLEIN_A] = a;
    v[KLEIN_B] = b;
    v[KLEIN_C] = c;
    v
}

/// ε = 1, x² = βγ, y² = αγ, z = xyγ*:
/// X ↦ (X_0 + λx X_a + μy X_b + λμz X_c) for (λ,μ) = (1,1), (1,−1), (−1,1), (−1,−1).
pub fn klein_split4(p: &KleinParams, x: &RingValue, y: &RingValue, tol: f64) -> Result<Morphism> {
    if !p.eps_is(1.0, tol) {
        return precondition("klein_split4 needs eps = 1");
    }
    require_root(x, 2, &p.beta.mul(&p.gamma), "x (x^2 = beta gamma)", tol)?;
    require_root(y, 2, &p.alpha.mul(&p.gamma), "y (y^2 = alpha gamma)", tol)?;
    let f = p.cocycle()?;
    let d = p.descriptor();
    let z = x.mul(y).mul(&p.gamma.star());
    let signs = [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)];
    let comp = |v: &RingValue, which: usize| {
        ModelElement::DirectSum(
            signs
                .iter()
                .map(|(l, m)| {
                    let s = match which {
                        0 => *l,
                        1 => *m,
                        _ => l * m,
                    };
                    ring(v.scale_real(s))
                })
                .collect(),
        )
    };
    let one = ModelElement::DirectSum(vec![ring(RingValue::unit(&d)); 4]);
    let images = klein_images(&d, one, comp(x, 0), comp(y, 1), comp(&z, 2));
    let target = AlgebraModel::DirectSum(vec![AlgebraModel::Ring(d); 4]);
    Morphism::new("klein_split4", &f, target, images)
}

/// Real E, ε = 1, x² = −βγ and y² = ±αγ, z = xyγ*; maps onto a pair of complexifications.
pub fn klein_complex_pair(p: &KleinParams, x: &RingValue, y: &RingValue, tol: f64) -> Result<Morphism> {
    let d = p.descriptor();
    if d.field() != Field::Real {
        return precondition("klein_complex_pair needs a real coefficient algebra");
    }
    if !p.eps_is(1.0, tol) {
        return precondition("klein_complex_pair needs eps = 1");
    }
    require_root(x, 2, &p.beta.mul(&p.gamma).neg(), "x (x^2 = -beta gamma)", tol)?;
    let ag = p.alpha.mul(&p.gamma);
    let plus = y.mul(y).dist(&ag) <= tol;
    if !plus {
        require_root(y, 2, &ag.neg(), "y (y^2 = alpha gamma or -alpha gamma)", tol)?;
    } else {
        require_root(y, 2, &ag, "y", tol)?;
    }
    let f = p.cocycle()?;
    let z = x.mul(y).mul(&p.gamma.star());
    let zero = ring(RingValue::zero(&d));
    let re = |v: &RingValue| ModelElement::complexified(ring(v.clone()), zero.clone());
    let im = |v: &RingValue| ModelElement::complexified(zero.clone(), ring(v.clone()));
    let pair = |a: ModelElement, b: ModelElement| ModelElement::DirectSum(vec![a, b]);
    let one = pair(re(&RingValue::unit(&d)), re(&RingValue::unit(&d)));
    let va = pair(im(x), im(x));
    let (vb, vc) = if plus {
        (pair(re(y), re(&y.neg())), pair(im(&z), im(&z.neg())))
    } else {
        (pair(im(y), im(&y.neg())), pair(re(&z.neg()), re(&z)))
    };
    let images = klein_images(&d, one, va, vb, vc);
    let c = AlgebraModel::complexified(AlgebraModel::Ring(d));
    Morphism::new("klein_complex_pair", &f, AlgebraModel::DirectSum(vec![c.clone(), c]), images)
}

/// Real E, ε = −1, x² = −βγ, y² = αγ, z = xyγ*: X ↦ X_0 + i x X_a + j y X_b + k z X_c.
pub fn klein_quaternion(p: &KleinParams, x: &RingValue, y: &RingValue, tol: f64) -> Result<Morphism> {
    let d = p.descriptor();
    if d.field() != Field::Real {
        return precondition("klein_quaternion needs a real coefficient algebra");
    }
    if !p.eps_is(-1.0, tol) {
        return precondition("klein_quaternion needs eps = -1");
    }
    require_root(x, 2, &p.beta.mul(&p.gamma).neg(), "x (x^2 = -beta gamma)", tol)?;
    require_root(y, 2, &p.alpha.mul(&p.gamma), "y (y^2 = alpha gamma)", tol)?;
    let f = p.cocycle()?;
    let z = x.mul(y).mul(&p.gamma.star());
    let zero = ring(RingValue::zero(&d));
    let slot = |pos: usize, v: &RingValue| {
        let mut parts = vec![zero.clone(); 4];
        parts[pos] = ring(v.clone());
        ModelElement::Quaternion(parts)
    };
    let images = klein_images(&d, slot(0, &RingValue::unit(&d)), slot(1, x), slot(2, y), slot(3, &z));
    Morphism::new("klein_quaternion", &f, AlgebraModel::quaternion(AlgebraModel::Ring(d)), images)
}

/// ε = −1, x² = βγ, y central unitary, z = γ*xy:
/// X ↦ [[X_0 + xX_a, α(yX_b + zX_c)], [−γy*X_b + βz*X_c, X_0 − xX_a]].
pub fn klein_matrix(p: &KleinParams, x: &RingValue, y: &RingValue, tol: f64) -> Result<Morphism> {
    if !p.eps_is(-1.0, tol) {
        return precondition("klein_matrix needs eps = -1");
    }
    require_root(x, 2, &p.beta.mul(&p.gamma), "x (x^2 = beta gamma)", tol)?;
    require_root(y, 1, y, "y", tol)?;
    let f = p.cocycle()?;
    let d = p.descriptor();
    let z = p.gamma.star().mul(x).mul(y);
    let zero = || ring(RingValue::zero(&d));
    let one = ModelElement::mat2(ring(RingValue::unit(&d)), zero(), zero(), ring(RingValue::unit(&d)));
    let va = ModelElement::mat2(ring(x.clone()), zero(), zero(), ring(x.neg()));
    let vb = ModelElement::mat2(zero(), ring(p.alpha.mul(y)), ring(p.gamma.mul(&y.star()).neg()), zero());
    let vc = ModelElement::mat2(zero(), ring(p.alpha.mul(&z)), ring(p.beta.mul(&z.star())), zero());
    let images = klein_images(&d, one, va, vb, vc);
    Morphism::new("klein_matrix", &f, AlgebraModel::matrix(2, AlgebraModel::Ring(d)), images)
}

/// Whether s·t = s xor t on indices, i.e. the group is (Z/2)^n with bit-vector indices.
fn is_bit_group(g: &GroupTable) -> Option<usize> {
    let n = g.order();
    if !n.is_power_of_two() {
        return None;
    }
    for s in 0..n {
        for t in 0..n {
            if g.mul(s, t) != s ^ t {
                return None;
            }
        }
    }
    Some(n.trailing_zeros() as usize)
}

fn pairing(s: usize, t: usize) -> f64 {
    if (s & t).count_ones() % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Trivial cocycle on (Z/2)^n: X ↦ (Σ_s ⟨t,s⟩ X_s)_t onto E^{2^n}.
pub fn char_decompose_z2n(f: &Arc<SchurFunction>, tol: f64) -> Result<Morphism> {
    if is_bit_group(f.group()).is_none() {
        return invalid("character decomposition needs (Z/2)^n with bit-vector indices");
    }
    let d = f.descriptor().clone();
    let one = RingValue::unit(&d);
    if let Some(v) = f.values().iter().find(|v| v.dist(&one) > tol) {
        return precondition(format!("cocycle is not constant (found {v:?})"));
    }
    let n = f.order();
    let images = (0..n)
        .map(|s| ModelElement::DirectSum((0..n).map(|t| ring(RingValue::real(&d, pairing(t, s)))).collect()))
        .collect();
    let target = AlgebraModel::DirectSum(vec![AlgebraModel::Ring(d); n]);
    Morphism::new("char_decompose_z2n", f, target, images)
}

/// X_r = 2^{-n} Σ_t ⟨r,t⟩ φ_t(X), the inverse of the character map.
pub fn char_inverse(f: &Arc<SchurFunction>, y: &ModelElement) -> Result<AlgebraElement> {
    let ModelElement::DirectSum(parts) = y else {
        return invalid("expected a direct-sum element");
    };
    let n = f.order();
    if parts.len() != n {
        return invalid("wrong number of components");
    }
    let vals: Vec<&RingValue> = parts
        .iter()
        .map(|p| match p {
            ModelElement::Ring(v) => Ok(v),
            _ => invalid("components must be ring values"),
        })
        .collect::<Result<_>>()?;
    let d = f.descriptor();
    let coeffs = (0..n)
        .map(|r| {
            (0..n)
                .fold(RingValue::zero(d), |acc, t| acc.add(&vals[t].scale_real(pairing(r, t))))
                .scale_real(1.0 / n as f64)
        })
        .collect();
    AlgebraElement::from_coeffs(f, coeffs)
}

/// f_α on Z/n over a complex E and β with βⁿ = ∏α_j:
/// X ↦ (w_k X)_{k=0..n-1}, w_k X = Σ_j β^j (∏_{l<j} α_l*) e^{2πijk/n} X_j.
pub fn cyclic_decompose(alpha: &[RingValue], beta: &RingValue, d: &RingDescriptor, tol: f64) -> Result<Morphism> {
    if d.field() != Field::Complex {
        return precondition("cyclic decomposition needs a complex coefficient algebra");
    }
    let n = alpha.len() + 1;
    let f = Arc::new(make_f_alpha(n, alpha, d)?);
    let prod = alpha.iter().fold(RingValue::unit(d), |acc, a| acc.mul(a));
    require_root(beta, n as u32, &prod, "beta (beta^n = prod alpha)", tol)?;
    let mut images = Vec::with_capacity(n);
    let mut coef = RingValue::unit(d);
    for j in 0..n {
        if j > 0 {
            coef = coef.mul(beta);
            if j >= 2 {
                coef = coef.mul(&alpha[j - 2].star());
            }
        }
        let comps = (0..n)
            .map(|k| {
                ring(coef.scale(root_of_unity(j * k, n)))
            })
            .collect();
        images.push(ModelElement::DirectSum(comps));
    }
    let target = AlgebraModel::DirectSum(vec![AlgebraModel::Ring(d.clone()); n]);
    Morphism::new("cyclic_decompose", &f, target, images)
}

/// e^{2πim/n}, exact at quarter turns.
fn root_of_unity(m: usize, n: usize) -> C64 {
    let m = m % n;
    if (4 * m) % n == 0 {
        return [C64::new(1.0, 0.0), C64::new(0.0, 1.0), C64::new(-1.0, 0.0), C64::new(0.0, -1.0)][4 * m / n];
    }
    C64::from_polar(1.0, 2.0 * PI * m as f64 / n as f64)
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorReport {
    pub pairs: usize,
    pub max_residual: f64,
    pub passed: bool,
}

/// Regular matrix of V^h_{(t,s)} against reg(V^f_t) ⊗ reg(V^g_s) for the product cocycle h.
pub fn tensor_structure_check(f: &Arc<SchurFunction>, g: &Arc<SchurFunction>, tol: f64) -> Result<TensorReport> {
    let h = Arc::new(crate::cocycle::tensor_cocycle(f, g)?);
    let (m, k) = (f.order(), g.order());
    let mut max_residual: f64 = 0.0;
    for t in 0..m {
        let a = AlgebraElement::generator(f, t).regular_matrix();
        for s in 0..k {
            let b = AlgebraElement::generator(g, s).regular_matrix();
            let c = AlgebraElement::generator(&h, t * k + s).regular_matrix();
            for r1 in 0..m * k {
                for c1 in 0..m * k {
                    let kron = a.entry(r1 / k, c1 / k).tensor(b.entry(r1 % k, c1 % k))?;
                    max_residual = max_residual.max(c.entry(r1, c1).dist(&kron));
                }
            }
        }
    }
    Ok(TensorReport {
        pairs: m * k,
        max_residual,
        passed: max_residual <= tol,
    })
}

/// reg(V^g_t) = reg(V^f_t) ⊗ 1_k for the amplified cocycle g = [δ_ij f].
pub fn amplification_check(f: &Arc<SchurFunction>, k: usize, tol: f64) -> Result<TensorReport> {
    let g = Arc::new(crate::cocycle::amplify(f, k)?);
    let id = RingValue::unit(&RingDescriptor::Matrix {
        size: k,
        field: f.descriptor().field(),
    });
    let n = f.order();
    let mut max_residual: f64 = 0.0;
    for t in 0..n {
        let a = AlgebraElement::generator(f, t).regular_matrix();
        let b = AlgebraElement::generator(&g, t).regular_matrix();
        for r in 0..n {
            for c in 0..n {
                max_residual = max_residual.max(b.entry(r, c).dist(&a.entry(r, c).tensor(&id)?));
            }
        }
    }
    Ok(TensorReport {
        pairs: n,
        max_residual,
        passed: max_residual <= tol,
    })
}

/// Z/2 × Z/4 indices: (a, b) ↦ 4a + b.
pub fn z2z4_group() -> Arc<GroupTable> {
    Arc::new(direct_product(&make_cyclic(2).expect("Z/2"), &make_cyclic(4).expect("Z/4")).expect("Z/2 x Z/4"))
}

/// The sign-graded table on Z/2 × Z/4: δ on the Z/2 part, f_(α,β,γ) on the Z/4 part and
/// an extra −1 when the Z/4 part of s and the Z/2 part of t are both nonzero. Built
/// without validation.
pub fn z2z4_table(alpha: &RingValue, beta: &RingValue, gamma: &RingValue, delta: &RingValue) -> Result<SchurFunction> {
    let d = alpha.descriptor();
    let f4 = make_f_alpha(4, &[alpha.clone(), beta.clone(), gamma.clone()], &d)?;
    let one = RingValue::unit(&d);
    SchurFunction::from_fn(z2z4_group(), d, |s, t| {
        let (s0, s1, t0, t1) = (s / 4, s % 4, t / 4, t % 4);
        let mut v = f4.get(s1, t1).clone();
        if s0 == 1 && t0 == 1 {
            v = v.mul(delta);
        }
        if s1 != 0 && t0 != 0 {
            v = v.neg();
        }
        let _ = &one;
        v
    })
}

/// The displayed decomposition of S(f) for the table with α=β=γ=−δ=1 onto E_{2,2} ⊕ E⁴:
/// the matrix block [[Z_0+Z_(1,2), Z_(1,0)−Z_(0,2)], [Z_(1,0)+Z_(0,2), Z_0−Z_(1,2)]] and
/// the functionals Z_0 + (−1)^j Z_(0,2) + i^j Z_(k,1) − i^j Z_(k,3).
pub fn z2z4_decompose(f: &Arc<SchurFunction>, tol: f64) -> Result<Morphism> {
    let d = f.descriptor().clone();
    if d.field() != Field::Complex {
        return precondition("the decomposition needs a complex coefficient algebra");
    }
    let one = RingValue::unit(&d);
    let expected = z2z4_table(&one, &one, &one, &one.neg())?;
    if f.order() != 8 || **f.group() != **expected.group() {
        return invalid("expected a table on Z/2 x Z/4");
    }
    let r = f.max_distance(&expected)?;
    if r > tol {
        return precondition(format!("table differs from the stated one by {r:.3e}"));
    }
    let b = 2;
    let m = |t: usize| -> [f64; 4] {
        match t {
            0 => [1.0, 0.0, 0.0, 1.0],
            6 => [1.0, 0.0, 0.0, -1.0],
            4 => [0.0, 1.0, 1.0, 0.0],
            2 => [0.0, -1.0, 1.0, 0.0],
            _ => [0.0; 4],
        }
    };
    let func = |t: usize, j: u32, k: usize| -> C64 {
        let ij = C64::new(0.0, 1.0).powu(j);
        if t == 0 {
            C64::new(1.0, 0.0)
        } else if t == b {
            C64::new(if j == 0 { 1.0 } else { -1.0 }, 0.0)
        } else if t == 4 * k + 1 {
            ij
        } else if t == 4 * k + 3 {
            -ij
        } else {
            C64::new(0.0, 0.0)
        }
    };
    let images = (0..8)
        .map(|t| {
            let mv = m(t);
            let block = ModelElement::matrix(2, mv.iter().map(|x| ring(RingValue::real(&d, *x))).collect());
            let mut parts = vec![block];
            for (j, k) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                parts.push(ring(RingValue::scalar(&d, func(t, j, k))));
            }
            ModelElement::DirectSum(parts)
        })
        .collect();
    let e = AlgebraModel::Ring(d.clone());
    let mut summands = vec![AlgebraModel::matrix(2, e.clone())];
    summands.extend(std::iter::repeat(e).take(4));
    Morphism::new("z2z4_decompose", f, AlgebraModel::DirectSum(summands), images)
}

#[derive(Clone, Debug, Serialize)]
pub struct CornerReport {
    /// Distance of X*X and XX* from ½(V_1 ± γV_c).
    pub formula_residual: f64,
    pub p_plus_projection: bool,
    pub p_minus_projection: bool,
    pub corner_dims: (usize, usize),
    pub expected_dim: usize,
    pub passed: bool,
}

/// With X = ½(β₁V_a + β₂V_b), P+ = X*X and P− = XX*: checks the projection formula and
/// measures the corners P± S(f) P± against dim E.
pub fn corner_report(f: &Arc<SchurFunction>, a: usize, b: usize, beta1: &RingValue, beta2: &RingValue, tol: f64) -> Result<CornerReport> {
    let g = f.group();
    let c = g.mul(a, b);
    let x = AlgebraElement::monomial(f, a, beta1.scale_real(0.5))?.add(&AlgebraElement::monomial(f, b, beta2.scale_real(0.5))?);
    let p_plus = x.star().mul(&x);
    let p_minus = x.mul(&x.star());
    let gamma = f.get(a, a).star().mul(&beta1.star()).mul(beta2);
    let half = AlgebraElement::unit(f).scale_real(0.5);
    let gv = AlgebraElement::monomial(f, c, gamma.scale_real(0.5))?;
    let formula_residual = p_plus.max_distance(&half.add(&gv)).max(p_minus.max_distance(&half.sub(&gv)));
    let dim = |p: &AlgebraElement| -> Result<usize> {
        AlgebraModel::corner(AlgebraModel::twisted(f), ModelElement::Twisted(p.clone()))?.real_dim(0)
    };
    let corner_dims = (dim(&p_plus)?, dim(&p_minus)?);
    let expected_dim = f.descriptor().real_dim(0);
    let p_plus_projection = p_plus.is_projection(tol);
    let p_minus_projection = p_minus.is_projection(tol);
    Ok(CornerReport {
        formula_residual,
        p_plus_projection,
        p_minus_projection,
        corner_dims,
        expected_dim,
        passed: formula_residual <= tol
            && p_plus_projection
            && p_minus_projection
            && corner_dims == (expected_dim, expected_dim),
    })
}

/// Corner report for the Z/2 × Z/4 table with a = (1,0), b = (0,2), β₁ = β₂ = 1.
pub fn z2z4_corner(f: &Arc<SchurFunction>, tol: f64) -> Result<CornerReport> {
    let one = RingValue::unit(f.descriptor());
    corner_report(f, 4, 2, &one, &one, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::cx;

    fn ok(m: &Morphism) -> MorphismReport {
        let r = m.verify(&VerifyOptions::default()).unwrap();
        assert!(r.is_isomorphism(), "{r:#?}");
        r
    }

    #[test]
    fn klein_matrix_e11() {
        let d = RingDescriptor::ComplexScalar;
        let p = KleinParams::signs(&d, 1.0, 1.0, 1.0, -1.0);
        let one = RingValue::unit(&d);
        let m = klein_matrix(&p, &one, &one, 1e-9).unwrap();
        ok(&m);
        let f = m.source().clone();
        let q = AlgebraElement::unit(&f).add(&AlgebraElement::generator(&f, KLEIN_A)).scale_real(0.5);
        let img = m.apply(&q).unwrap();
        let z = ring(RingValue::zero(&d));
        assert!(img.dist(&ModelElement::mat2(ring(one), z.clone(), z.clone(), z)) < 1e-12);
    }

    #[test]
    fn z2_examples() {
        let g = Arc::new(make_cyclic(2).unwrap());
        let d = RingDescriptor::ComplexScalar;
        let f = Arc::new(SchurFunction::from_fn(g.clone(), d.clone(), |s, t| if s == 1 && t == 1 { cx(-1.0, 0.0) } else { cx(1.0, 0.0) }).unwrap());
        ok(&z2_split(&f, &cx(0.0, 1.0), 1e-9).unwrap());
        assert!(z2_split(&f, &cx(1.0, 0.0), 1e-9).is_err());
        let fr = Arc::new(SchurFunction::from_fn(g, RingDescriptor::RealScalar, |s, t| RingValue::Real(if s == 1 && t == 1 { -1.0 } else { 1.0 })).unwrap());
        ok(&z2_complexify(&fr, 1e-9).unwrap());
    }

    #[test]
    fn broken_map_is_caught() {
        let f = Arc::new(SchurFunction::constant(Arc::new(make_cyclic(3).unwrap()), RingDescriptor::ComplexScalar));
        let d = RingDescriptor::ComplexScalar;
        let mut images = vec![ring(RingValue::zero(&d)); 3];
        images[0] = ring(RingValue::unit(&d));
        let m = Morphism::new("kill", &f, AlgebraModel::Ring(d), images).unwrap();
        let r = m.verify(&VerifyOptions::default()).unwrap();
        assert!(!r.homomorphism);
    }
}
