use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use twisted::cocycle::*;
use twisted::group::{make_cyclic, z2_power};
use twisted::ring::Laurent;
use twisted::{sample, Field, RingDescriptor, RingValue, C64};

const TOL: f64 = 1e-9;

fn z(k: i32) -> RingValue {
    RingValue::Laurent(Laurent::monomial(1, Field::Complex, vec![k], C64::new(1.0, 0.0)))
}

#[test]
fn f_alpha_values() {
    let d = RingDescriptor::ComplexScalar;
    let (a1, a2) = (cx(0.0, 1.0), RingValue::Complex(C64::from_polar(1.0, 0.4)));
    let f = make_f_alpha(3, &[a1.clone(), a2.clone()], &d).unwrap();
    assert!(f.validate(TOL).is_valid());
    // f(2,2) = α1* α2
    assert!(f.get(2, 2).dist(&a1.star().mul(&a2)) < 1e-15);
    assert!(f.get(1, 1).dist(&a1) < 1e-15);
    assert!(f.get(1, 2).dist(&a1.mul(&a2).mul(&a1.star())) < 1e-15);
    assert!(make_f_alpha(3, &[a1], &d).is_err());
    assert!(make_f_alpha(2, &[cx(2.0, 0.0)], &d).is_err());
}

#[test]
fn validation_catches_broken_tables() {
    let d = RingDescriptor::ComplexScalar;
    let f = make_f_alpha(4, &[cx(0.0, 1.0), cx(1.0, 0.0), cx(-1.0, 0.0)], &d).unwrap();
    let r = f.validate(TOL);
    assert!(r.is_valid());
    assert_eq!(r.triples_checked, 64);

    let broken = f.with_entry(1, 2, cx(0.0, -1.0));
    let r = broken.validate(TOL);
    assert!(!r.is_valid());
    assert!(r.cocycle_failures > 0);

    let not_unitary = f.with_entry(1, 1, cx(2.0, 0.0));
    assert!(not_unitary.validate(TOL).violations.iter().any(|v| matches!(v, Violation::NotUnitary { .. })));

    let not_normal = f.with_entry(0, 0, cx(-1.0, 0.0));
    assert!(!not_normal.validate(TOL).is_valid());
}

#[test]
fn klein_tables_valid_for_all_signs() {
    let d = RingDescriptor::ComplexScalar;
    for a in [1.0, -1.0] {
        for b in [1.0, -1.0] {
            for c in [1.0, -1.0] {
                for e in [1.0, -1.0] {
                    let r = |x: f64| RingValue::real(&d, x);
                    let f = klein_table(&r(a), &r(b), &r(c), &r(e)).unwrap();
                    assert!(f.validate(TOL).is_valid());
                    assert_eq!(f.is_symmetric(TOL), e == 1.0);
                }
            }
        }
    }
}

#[test]
fn tilde_and_hat() {
    let d = RingDescriptor::ComplexScalar;
    let f = make_f_alpha(4, &[cx(0.0, 1.0), cx(-1.0, 0.0), RingValue::Complex(C64::from_polar(1.0, 1.1))], &d).unwrap();
    let g = f.group();
    for t in 0..4 {
        assert!(f.tilde(t).dist(&f.get(t, g.inv(t)).star()) < 1e-15);
    }
    // f̂ is again a cocycle, and f̂̂ = f
    let h = f.hat();
    assert!(h.validate(TOL).is_valid());
    assert!(h.hat().max_distance(&f).unwrap() < 1e-14);
}

#[test]
fn products_and_inverses() {
    let d = RingDescriptor::ComplexScalar;
    let f = make_f_alpha(3, &[cx(0.0, 1.0), cx(-1.0, 0.0)], &d).unwrap();
    let g = make_f_alpha(3, &[RingValue::Complex(C64::from_polar(1.0, 0.3)), cx(0.0, -1.0)], &d).unwrap();
    let fg = f.mul(&g).unwrap();
    assert!(fg.validate(TOL).is_valid());
    let one = SchurFunction::constant(f.group().clone(), d.clone());
    assert!(f.mul(&f.inverse()).unwrap().max_distance(&one).unwrap() < 1e-15);
    let other = make_f_alpha(2, &[cx(1.0, 0.0)], &d).unwrap();
    assert!(f.mul(&other).is_err());
}

#[test]
fn coboundary_is_a_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let d = RingDescriptor::Laurent { vars: 1, field: Field::Complex };
    let g = Arc::new(make_cyclic(5).unwrap());
    let l = sample::lambda(&mut rng, &g, &d);
    let m = sample::lambda(&mut rng, &g, &d);
    let lhs = coboundary(&l.mul(&m).unwrap());
    let rhs = coboundary(&l).mul(&coboundary(&m)).unwrap();
    assert!(lhs.max_distance(&rhs).unwrap() < 1e-12);
    assert!(coboundary(&l).validate(1e-6).is_valid());
    let triv = coboundary(&Lambda::trivial(g.clone(), d.clone()));
    assert!(triv.max_distance(&SchurFunction::constant(g, d)).unwrap() == 0.0);
}

#[test]
fn lambda_requires_unitary_values() {
    let d = RingDescriptor::ComplexScalar;
    let g = Arc::new(make_cyclic(2).unwrap());
    assert!(Lambda::new(g.clone(), d.clone(), vec![cx(1.0, 0.0), cx(2.0, 0.0)], TOL).is_err());
    assert!(Lambda::new(g, d, vec![cx(1.0, 0.0)], TOL).is_err());
}

#[test]
fn laurent_z_versus_z_squared() {
    let d = RingDescriptor::Laurent { vars: 1, field: Field::Complex };
    // z·(z²)* = z^-1 has odd winding, no square root
    assert!(equivalent_cyclic(&[z(1)], &[z(2)], &d).unwrap().is_none());
    let l = equivalent_cyclic(&[z(2)], &[RingValue::unit(&d)], &d).unwrap().unwrap();
    let fa = make_f_alpha(2, &[z(2)], &d).unwrap();
    let fb = make_f_alpha(2, &[RingValue::unit(&d)], &d).unwrap();
    let l = l.rebase(fb.group().clone()).unwrap();
    assert!(fa.max_distance(&fb.mul(&coboundary(&l)).unwrap()).unwrap() < 1e-12);
    assert_eq!(winding(&z(-3), 0).unwrap(), -3);
    assert_eq!(winding(&cx(0.0, 1.0), 0).unwrap(), 0);
    let two_terms = z(1).add(&z(2));
    assert!(winding(&two_terms, 0).is_err());
}

#[test]
fn cyclic_classes() {
    let d = RingDescriptor::ComplexScalar;
    // on Z/2 over C every f_α is trivial
    let params = vec![vec![cx(1.0, 0.0)], vec![cx(-1.0, 0.0)], vec![cx(0.0, 1.0)]];
    let classes = classify_cyclic(&params, &d).unwrap();
    assert_eq!(classes.len(), 1);
    let d = RingDescriptor::Laurent { vars: 1, field: Field::Complex };
    let params = vec![vec![z(0)], vec![z(1)], vec![z(2)], vec![z(3)], vec![z(-1)]];
    let classes = classify_cyclic(&params, &d).unwrap();
    // parity of the winding
    assert_eq!(classes.len(), 2);
    assert_eq!(classes[0].members.iter().map(|m| m.0).collect::<Vec<_>>(), vec![0, 2]);
    assert_eq!(classes[1].members.iter().map(|m| m.0).collect::<Vec<_>>(), vec![1, 3, 4]);
}

#[test]
fn tensor_and_amplify() {
    let d = RingDescriptor::ComplexScalar;
    let f = make_f_alpha(2, &[cx(-1.0, 0.0)], &d).unwrap();
    let g = make_f_alpha(3, &[cx(0.0, 1.0), cx(1.0, 0.0)], &d).unwrap();
    let h = tensor_cocycle(&f, &g).unwrap();
    assert_eq!(h.order(), 6);
    assert!(h.validate(TOL).is_valid());
    // index a·3 + b
    assert!(h.get(3 + 1, 3 + 1).dist(&f.get(1, 1).mul(g.get(1, 1))) < 1e-15);
    let a = amplify(&g, 3).unwrap();
    assert_eq!(*a.descriptor(), RingDescriptor::Matrix { size: 3, field: Field::Complex });
    assert!(a.validate(TOL).is_valid());
}

#[test]
fn z_window_witness_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let d = RingDescriptor::ComplexScalar;
    let values: Vec<RingValue> = (0..13).map(|_| RingValue::Complex(sample::phase(&mut rng))).collect();
    // λ(0) = 1 so δλ is normalized
    let l = ZLambda::from_fn(6, d.clone(), |n| if n == 0 { RingValue::unit(&d) } else { values[(n + 6) as usize].clone() });
    let f = l.coboundary();
    let w = z_coboundary_witness(&f).unwrap();
    let back = w.coboundary();
    assert!(back.overlap(&f) > 0);
    assert!(back.max_distance(&f) < 1e-12);
    let tiny = ZWindow::from_fn(1, d.clone(), |_, _| Some(RingValue::unit(&d)));
    assert!(z_coboundary_witness(&tiny).is_err());
}

#[test]
fn cyclic_powers() {
    let d = RingDescriptor::ComplexScalar;
    let f = make_f_alpha(5, &[cx(0.0, 1.0), cx(-1.0, 0.0), cx(0.0, -1.0), RingValue::Complex(C64::from_polar(1.0, 2.0))], &d).unwrap();
    for m in -4..=4 {
        for n in -4..=4 {
            cyclic_power_value(&f, 1, m, n, 1e-12).unwrap();
            cyclic_power_value(&f, 2, m, n, 1e-12).unwrap();
        }
    }
    let broken = f.with_entry(2, 3, cx(-1.0, 0.0));
    assert!((-4..=4).any(|m| (-4..=4).any(|n| cyclic_power_value(&broken, 1, m, n, 1e-12).is_err())));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_f_alpha_is_a_cocycle(n in 1usize..7, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = RingDescriptor::ComplexScalar;
        let alpha: Vec<RingValue> = (1..n).map(|_| RingValue::Complex(sample::phase(&mut rng))).collect();
        let f = make_f_alpha(n, &alpha, &d).unwrap();
        prop_assert!(f.validate(1e-12).is_valid());
        // f(1, t) ... f(t^k, t) determine the table
        for m in 0..n as i64 {
            prop_assert!(cyclic_power_value(&f, 1 % n, m, 1, 1e-12).is_ok());
        }
    }

    #[test]
    fn coboundaries_are_cocycles(n in 0usize..4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = RingDescriptor::Quaternion;
        let g = Arc::new(z2_power(n).unwrap());
        let l = sample::lambda(&mut rng, &g, &d);
        let f = coboundary(&l);
        prop_assert!(f.validate(1e-12).is_valid());
    }
}
