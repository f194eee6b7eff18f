//! Substitution isomorphisms over Laurent coefficients: S(f) for f(I,J) = λ_{I∩J} on
//! (Z/2)^n, λ_I = ∏_{i∈I} z_i, is the Laurent ring itself via X ↦ Σ_I λ_I(z) X_I(z²).
//! These maps are not E-linear (coefficients are rewritten z ↦ z²), so they are checked
//! symbolically here rather than through `iso::Morphism`.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::AlgebraElement;
use crate::cocycle::SchurFunction;
use crate::error::{invalid, precondition, Result};
use crate::group::make_subset_group;
use crate::ring::{window_exponents, Field, Laurent, RingDescriptor, RingValue, C64};

/// λ_I = ∏_{i∈I} z_i as a monomial.
fn lambda(n: usize, field: Field, mask: usize) -> Laurent {
    let e = (0..n).map(|i| (mask >> i & 1) as i32).collect();
    Laurent::monomial(n, field, e, C64::new(1.0, 0.0))
}

/// f(I,J) = λ_{I∩J} on the subsets of {1..n} over Laurent polynomials in n variables.
pub fn torus_cocycle(n: usize, field: Field) -> Result<SchurFunction> {
    if n == 0 {
        return invalid("need at least one variable");
    }
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let g = Arc::new(make_subset_group(&labels)?.into_group());
    let d = RingDescriptor::Laurent { vars: n, field };
    SchurFunction::from_fn(g, d, |s, t| RingValue::Laurent(lambda(n, field, s & t)))
}

#[derive(Clone, Debug)]
pub struct TorusRewrite {
    f: Arc<SchurFunction>,
    n: usize,
    field: Field,
}

#[derive(Clone, Debug, Serialize)]
pub struct RewriteReport {
    pub vars: usize,
    pub degree: i32,
    /// Exponent of the image monomial of each V_I.
    pub generator_images: Vec<(String, Vec<i32>)>,
    pub monomials: usize,
    pub mult_residual: f64,
    pub star_residual: f64,
    pub distinct_images: usize,
    pub target_monomials: usize,
    pub uncovered: usize,
    pub injective: bool,
    pub surjective: bool,
    pub passed: bool,
}

impl TorusRewrite {
    /// Accepts f exactly equal to `torus_cocycle(n)` on a group with bit-vector indices.
    pub fn new(f: &Arc<SchurFunction>) -> Result<Self> {
        let RingDescriptor::Laurent { vars: n, field } = *f.descriptor() else {
            return precondition("the rewrite needs Laurent coefficients");
        };
        if f.order() != 1 << n {
            return precondition(format!("group order {} is not 2^{n}", f.order()));
        }
        let g = f.group();
        for s in 0..f.order() {
            for t in 0..f.order() {
                if g.mul(s, t) != s ^ t {
                    return precondition("group is not (Z/2)^n with bit-vector indices");
                }
                if *f.get(s, t) != RingValue::Laurent(lambda(n, field, s & t)) {
                    return precondition(format!("f({}, {}) is not the product of z_i over the intersection", g.label(s), g.label(t)));
                }
            }
        }
        Ok(TorusRewrite { f: f.clone(), n, field })
    }

    pub fn cocycle(&self) -> &Arc<SchurFunction> {
        &self.f
    }

    /// Σ_I λ_I(z) X_I(z²).
    pub fn apply(&self, x: &AlgebraElement) -> Result<Laurent> {
        let mut acc = Laurent::zero(self.n, self.field);
        for (mask, c) in x.coeffs().iter().enumerate() {
            let RingValue::Laurent(p) = c else {
                return invalid("coefficient is not a Laurent polynomial");
            };
            acc = acc.add(&lambda(self.n, self.field, mask).mul(&p.substitute_square()));
        }
        Ok(acc)
    }

    /// z^a V_I for every |a|₁ ≤ degree and every I.
    fn basis(&self, degree: i32) -> Vec<AlgebraElement> {
        let mut out = Vec::new();
        for e in window_exponents(self.n, degree) {
            if e.iter().map(|x| x.abs()).sum::<i32>() > degree {
                continue;
            }
            for mask in 0..self.f.order() {
                let c = RingValue::Laurent(Laurent::monomial(self.n, self.field, e.clone(), C64::new(1.0, 0.0)));
                out.push(AlgebraElement::monomial(&self.f, mask, c).expect("descriptor matches"));
            }
        }
        out
    }

    /// Exact check on all basis monomials of total degree ≤ `degree`: products and
    /// adjoints are preserved, distinct monomials go to distinct monomials, and every
    /// target monomial of total degree ≤ `degree` is hit.
    pub fn verify(&self, degree: i32) -> Result<RewriteReport> {
        let basis = self.basis(degree);
        let images: Vec<Laurent> = basis.iter().map(|x| self.apply(x)).collect::<Result<_>>()?;

        let mut mult_residual: f64 = 0.0;
        for (x, ix) in basis.iter().zip(&images) {
            for (y, iy) in basis.iter().zip(&images) {
                let lhs = self.apply(&x.mul(y))?;
                let diff = lhs.add(&ix.mul(iy).scale(C64::new(-1.0, 0.0)));
                mult_residual = mult_residual.max(diff.max_abs());
            }
        }
        let mut star_residual: f64 = 0.0;
        for (x, ix) in basis.iter().zip(&images) {
            let diff = self.apply(&x.star())?.add(&ix.star().scale(C64::new(-1.0, 0.0)));
            star_residual = star_residual.max(diff.max_abs());
        }

        let mut seen = BTreeSet::new();
        let mut monomial_images = true;
        for im in &images {
            match im.as_monomial() {
                Some((e, c)) if c == C64::new(1.0, 0.0) => {
                    seen.insert(e.clone());
                }
                _ => monomial_images = false,
            }
        }
        let targets: Vec<Vec<i32>> = window_exponents(self.n, degree)
            .into_iter()
            .filter(|e| e.iter().map(|x| x.abs()).sum::<i32>() <= degree)
            .collect();
        let uncovered = targets.iter().filter(|e| !seen.contains(*e)).count();

        let g = self.f.group();
        let generator_images = (0..self.f.order())
            .map(|mask| {
                let e = (0..self.n).map(|i| (mask >> i & 1) as i32).collect();
                (g.label(mask).to_string(), e)
            })
            .collect();
        let injective = monomial_images && seen.len() == basis.len();
        let surjective = uncovered == 0;
        Ok(RewriteReport {
            vars: self.n,
            degree,
            generator_images,
            monomials: basis.len(),
            mult_residual,
            star_residual,
            distinct_images: seen.len(),
            target_monomials: targets.len(),
            uncovered,
            injective,
            surjective,
            passed: mult_residual == 0.0 && star_residual == 0.0 && injective && surjective,
        })
    }
}

/// X ↦ X_0(z²) + z X_1(z²) for f on Z/2 over one-variable Laurent polynomials with f(1,1) = z.
pub fn laurent_z2_rewrite(f: &Arc<SchurFunction>) -> Result<TorusRewrite> {
    match f.descriptor() {
        RingDescriptor::Laurent { vars: 1, .. } => TorusRewrite::new(f),
        _ => precondition("expected Z/2 over Laurent polynomials in one variable"),
    }
}

/// The same substitution for n variables.
pub fn z2n_torus_rewrite(f: &Arc<SchurFunction>) -> Result<TorusRewrite> {
    TorusRewrite::new(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_generator_goes_to_z() {
        let f = Arc::new(torus_cocycle(1, Field::Complex).unwrap());
        let r = laurent_z2_rewrite(&f).unwrap();
        let v = AlgebraElement::generator(&f, 1);
        assert_eq!(r.apply(&v).unwrap(), Laurent::variable(1, Field::Complex, 0));
        let rep = r.verify(4).unwrap();
        assert!(rep.passed, "{rep:?}");
        assert_eq!(rep.monomials, 18);
    }
}
