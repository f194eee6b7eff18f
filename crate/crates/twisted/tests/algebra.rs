use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use twisted::algebra::{projection_pair, Restriction};
use twisted::cocycle::{cx, klein_table, make_f_alpha, KLEIN_A, KLEIN_B, KLEIN_C};
use twisted::group::make_cyclic;
use twisted::ring::{Laurent, DEFAULT_GRID};
use twisted::{sample, AlgebraElement, Field, RingDescriptor, RingValue, SchurFunction, C64};

const TOL: f64 = 1e-9;

fn f_alpha(n: usize, alpha: &[RingValue], d: &RingDescriptor) -> Arc<SchurFunction> {
    Arc::new(make_f_alpha(n, alpha, d).unwrap())
}

#[test]
fn generator_relations() {
    let d = RingDescriptor::ComplexScalar;
    let f = f_alpha(4, &[cx(0.0, 1.0), cx(-1.0, 0.0), RingValue::Complex(C64::from_polar(1.0, 0.5))], &d);
    let g = f.group();
    for s in 0..4 {
        let vs = AlgebraElement::generator(&f, s);
        // V_s V_s* = V_s* V_s = 1
        assert!(vs.mul(&vs.star()).max_distance(&AlgebraElement::unit(&f)) < 1e-15);
        assert!(vs.star().mul(&vs).max_distance(&AlgebraElement::unit(&f)) < 1e-15);
        for t in 0..4 {
            let prod = vs.mul(&AlgebraElement::generator(&f, t));
            let expect = AlgebraElement::monomial(&f, g.mul(s, t), f.get(s, t).clone()).unwrap();
            assert_eq!(prod, expect);
        }
    }
}

#[test]
fn z2_product_formula() {
    let d = RingDescriptor::ComplexScalar;
    let u = cx(0.0, 1.0);
    let f = f_alpha(2, &[u.clone()], &d);
    let x = AlgebraElement::from_coeffs(&f, vec![cx(1.0, 2.0), cx(-1.0, 0.5)]).unwrap();
    let y = AlgebraElement::from_coeffs(&f, vec![cx(0.3, 0.0), cx(2.0, -1.0)]).unwrap();
    let (x0, x1, y0, y1) = (x.coeff(0), x.coeff(1), y.coeff(0), y.coeff(1));
    let p = x.mul(&y);
    assert!(p.coeff(0).dist(&x0.mul(y0).add(&u.mul(x1).mul(y1))) < 1e-15);
    assert!(p.coeff(1).dist(&x0.mul(y1).add(&x1.mul(y0))) < 1e-15);
    // (X*)_1 = ũ X_1*
    let s = x.star();
    assert!(s.coeff(1).dist(&u.star().mul(&x1.star())) < 1e-15);
}

#[test]
fn regular_matrix_is_a_star_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let d = RingDescriptor::Matrix { size: 2, field: Field::Complex };
    let f = Arc::new(
        make_f_alpha(3, &[sample::central_unitary(&mut rng, &d), sample::central_unitary(&mut rng, &d)], &d).unwrap(),
    );
    for _ in 0..5 {
        let x = sample::element(&mut rng, &f);
        let y = sample::element(&mut rng, &f);
        let (mx, my) = (x.regular_matrix(), y.regular_matrix());
        assert!(x.mul(&y).regular_matrix().max_distance(&mx.mul(&my)) < 1e-12);
        assert!(x.star().regular_matrix().max_distance(&mx.adjoint()) < 1e-12);
        let col = AlgebraElement::from_coeffs(&f, mx.column_zero()).unwrap();
        assert!(col.max_distance(&x) < 1e-14);
    }
}

#[test]
fn norm_examples() {
    let d = RingDescriptor::ComplexScalar;
    for n in 1..6 {
        let f = Arc::new(SchurFunction::constant(Arc::new(make_cyclic(n).unwrap()), d.clone()));
        let sum = (0..n).fold(AlgebraElement::zero(&f), |acc, t| acc.add(&AlgebraElement::generator(&f, t)));
        assert!((sum.norm(0) - n as f64).abs() < 1e-12);
        assert!((AlgebraElement::generator(&f, n - 1).norm(0) - 1.0).abs() < 1e-12);
    }
    // over Laurent coefficients the norm is a sup over the torus
    let l = RingDescriptor::Laurent { vars: 1, field: Field::Complex };
    let z = RingValue::Laurent(Laurent::variable(1, Field::Complex, 0));
    let f = f_alpha(2, &[z.clone()], &l);
    let x = AlgebraElement::from_coeffs(&f, vec![RingValue::unit(&l), z]).unwrap();
    let n = x.norm(DEFAULT_GRID);
    assert!(n > 1.0 && n <= 2.0 + 1e-9);
}

#[test]
fn positivity_and_trace() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for d in [RingDescriptor::ComplexScalar, RingDescriptor::Quaternion, RingDescriptor::Laurent { vars: 1, field: Field::Complex }] {
        let g = Arc::new(make_cyclic(4).unwrap());
        let l = sample::lambda(&mut rng, &g, &d);
        let f = Arc::new(twisted::cocycle::coboundary(&l));
        let x = sample::element(&mut rng, &f);
        let p = x.coefficient_positivity(1e-9).unwrap();
        assert!(p.dist(&p.star()) < 1e-12);
        assert_eq!(x.star().mul(&x).trace(), p);
        // τ(X*) = τ(X)*
        assert!(x.star().trace().dist(&x.trace().star()) < 1e-15);
    }
}

#[test]
fn restriction_round_trip() {
    let d = RingDescriptor::ComplexScalar;
    let f = f_alpha(6, &[cx(0.0, 1.0), cx(1.0, 0.0), cx(-1.0, 0.0), cx(0.0, -1.0), cx(1.0, 0.0)], &d);
    let r = Restriction::new(&f, &[0, 2, 4]).unwrap();
    assert_eq!(r.cocycle().order(), 3);
    assert!(r.cocycle().validate(TOL).is_valid());
    let x = AlgebraElement::from_coeffs(&f, vec![cx(1.0, 0.0), cx(0.0, 0.0), cx(2.0, 1.0), cx(0.0, 0.0), cx(-1.0, 0.0), cx(0.0, 0.0)]).unwrap();
    let y = r.restrict(&x).unwrap();
    assert_eq!(r.extend(&y), x);
    // restriction is multiplicative on the subalgebra
    assert_eq!(r.restrict(&x.mul(&x)).unwrap(), y.mul(&y));
    assert!(r.restrict(&AlgebraElement::generator(&f, 1)).is_err());
}

#[test]
fn projection_pairs() {
    let d = RingDescriptor::ComplexScalar;
    let f = f_alpha(2, &[cx(-1.0, 0.0)], &d);
    let (p, q) = projection_pair(&f, 1, &cx(0.0, 1.0), TOL).unwrap();
    assert!(p.is_projection(1e-15) && q.is_projection(1e-15));
    assert!(p.add(&q).max_distance(&AlgebraElement::unit(&f)) < 1e-15);
    assert!(p.mul(&q).max_abs() < 1e-15);
    assert!(projection_pair(&f, 1, &cx(1.0, 0.0), TOL).is_err());
    let g = f_alpha(3, &[cx(1.0, 0.0), cx(1.0, 0.0)], &d);
    assert!(projection_pair(&g, 1, &cx(1.0, 0.0), TOL).is_err());
}

#[test]
fn centres() {
    let d = RingDescriptor::ComplexScalar;
    let one = RingValue::unit(&d);
    // the quaternion-like Klein table has trivial centre
    let k = Arc::new(klein_table(&one, &one.neg(), &one, &one.neg()).unwrap());
    for t in [KLEIN_A, KLEIN_B, KLEIN_C] {
        let v = AlgebraElement::generator(&k, t);
        assert!(!v.center_check(TOL));
        assert!(!v.commutes_with_all(TOL));
    }
    assert!(AlgebraElement::unit(&k).center_check(TOL));
    // symmetric cocycle on an abelian group: commutative algebra
    let f = f_alpha(3, &[cx(0.0, 1.0), cx(-1.0, 0.0)], &d);
    for t in 0..3 {
        let v = AlgebraElement::generator(&f, t);
        assert!(v.center_check(TOL) && v.commutes_with_all(TOL));
    }
    // quaternion coefficients are not central
    let h = Arc::new(SchurFunction::constant(Arc::new(make_cyclic(2).unwrap()), RingDescriptor::Quaternion));
    let x = AlgebraElement::monomial(&h, 0, RingValue::Quaternion([0.0, 1.0, 0.0, 0.0])).unwrap();
    assert!(!x.center_check(TOL));
}

#[test]
fn mixing_algebras_fails() {
    let d = RingDescriptor::ComplexScalar;
    let f = f_alpha(2, &[cx(1.0, 0.0)], &d);
    let g = f_alpha(2, &[cx(-1.0, 0.0)], &d);
    assert!(AlgebraElement::unit(&f).try_mul(&AlgebraElement::unit(&g)).is_err());
    assert!(AlgebraElement::from_coeffs(&f, vec![cx(1.0, 0.0)]).is_err());
    assert!(AlgebraElement::from_coeffs(&f, vec![cx(1.0, 0.0), RingValue::Real(1.0)]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn star_algebra_axioms(n in 1usize..6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = RingDescriptor::ComplexScalar;
        let alpha: Vec<RingValue> = (1..n).map(|_| RingValue::Complex(sample::phase(&mut rng))).collect();
        let f = f_alpha(n, &alpha, &d);
        let (x, y, z) = (sample::element(&mut rng, &f), sample::element(&mut rng, &f), sample::element(&mut rng, &f));
        prop_assert!(x.mul(&y).mul(&z).max_distance(&x.mul(&y.mul(&z))) < 1e-12);
        prop_assert!(x.mul(&y).star().max_distance(&y.star().mul(&x.star())) < 1e-12);
        prop_assert!(x.star().star().max_distance(&x) < 1e-15);
        // C*-identity and submultiplicativity
        let nx = x.norm(0);
        prop_assert!((x.star().mul(&x).norm(0) - nx * nx).abs() < 1e-9 * (1.0 + nx * nx));
        prop_assert!(x.mul(&y).norm(0) <= nx * y.norm(0) + 1e-9);
    }
}
