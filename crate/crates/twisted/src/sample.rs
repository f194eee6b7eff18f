//! Random values for randomized checks. Everything takes a caller-supplied RNG so runs
//! can be seeded.

use std::f64::consts::PI;
use std::sync::Arc;

use nalgebra::DMatrix;
use rand::Rng;

use crate::algebra::AlgebraElement;
use crate::cocycle::{Lambda, SchurFunction};
use crate::group::GroupTable;
use crate::ring::{Field, Laurent, RingDescriptor, RingValue, C64};

pub fn phase<R: Rng>(rng: &mut R) -> C64 {
    C64::from_polar(1.0, rng.gen_range(0.0..2.0 * PI))
}

fn coef<R: Rng>(rng: &mut R, field: Field) -> C64 {
    let re = rng.gen_range(-1.0..1.0);
    match field {
        Field::Real => C64::new(re, 0.0),
        Field::Complex => C64::new(re, rng.gen_range(-1.0..1.0)),
    }
}

/// Arbitrary value; Laurent values get up to three terms of degree at most `degree`.
pub fn value<R: Rng>(rng: &mut R, d: &RingDescriptor, degree: i32) -> RingValue {
    match d {
        RingDescriptor::ComplexScalar => RingValue::Complex(coef(rng, Field::Complex)),
        RingDescriptor::RealScalar => RingValue::Real(rng.gen_range(-1.0..1.0)),
        RingDescriptor::Laurent { vars, field } => {
            let terms: Vec<(Vec<i32>, C64)> = (0..rng.gen_range(1..=3))
                .map(|_| ((0..*vars).map(|_| rng.gen_range(-degree..=degree)).collect(), coef(rng, *field)))
                .collect();
            RingValue::Laurent(Laurent::from_terms(*vars, *field, terms).expect("well-formed terms"))
        }
        RingDescriptor::Matrix { size, field } => {
            RingValue::Matrix(*field, DMatrix::from_fn(*size, *size, |_, _| coef(rng, *field)))
        }
        RingDescriptor::Quaternion => RingValue::Quaternion([
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        ]),
        RingDescriptor::Product(ds) => RingValue::Product(ds.iter().map(|d| value(rng, d, degree)).collect()),
    }
}

/// Random central unitary: phases over C, signs over R, c·z^k for Laurent rings.
pub fn central_unitary<R: Rng>(rng: &mut R, d: &RingDescriptor) -> RingValue {
    let sign = |rng: &mut R| if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    match d {
        RingDescriptor::ComplexScalar => RingValue::Complex(phase(rng)),
        RingDescriptor::Laurent { vars, field } => {
            let c = match field {
                Field::Complex => phase(rng),
                Field::Real => C64::new(sign(rng), 0.0),
            };
            let e = (0..*vars).map(|_| rng.gen_range(-2..=2)).collect();
            RingValue::Laurent(Laurent::monomial(*vars, *field, e, c))
        }
        RingDescriptor::Matrix { field: Field::Complex, .. } => RingValue::scalar(d, phase(rng)),
        RingDescriptor::RealScalar | RingDescriptor::Quaternion | RingDescriptor::Matrix { .. } => {
            RingValue::real(d, sign(rng))
        }
        RingDescriptor::Product(ds) => RingValue::Product(ds.iter().map(|d| central_unitary(rng, d)).collect()),
    }
}

pub fn element<R: Rng>(rng: &mut R, f: &Arc<SchurFunction>) -> AlgebraElement {
    let coeffs = (0..f.order()).map(|_| value(rng, f.descriptor(), 2)).collect();
    AlgebraElement::from_coeffs(f, coeffs).expect("descriptor matches")
}

pub fn lambda<R: Rng>(rng: &mut R, group: &Arc<GroupTable>, d: &RingDescriptor) -> Lambda {
    let mut values = vec![RingValue::unit(d)];
    values.extend((1..group.order()).map(|_| central_unitary(rng, d)));
    Lambda::new(group.clone(), d.clone(), values, 1e-9).expect("random unitaries")
}
