//! Small dense helpers: numerical rank of real coordinate vectors and rectangular
//! matrices with entries in a coefficient ring.

use nalgebra::DMatrix;

use crate::error::{invalid, Result};
use crate::ring::{RingDescriptor, RingValue};

/// Rank of the span of `rows`. Singular values below `rel_tol · max(σ_max, 1)` count as zero.
pub fn rank(rows: &[Vec<f64>], rel_tol: f64) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let cols = first.len();
    if cols == 0 {
        return 0;
    }
    // the rank of M and of M^T agree; decompose whichever is thinner
    let m = if rows.len() >= cols {
        DMatrix::from_fn(cols, rows.len(), |c, r| rows[r][c])
    } else {
        DMatrix::from_fn(rows.len(), cols, |r, c| rows[r][c])
    };
    let sv = m.singular_values();
    let top = sv.iter().cloned().fold(0.0, f64::max);
    let cut = rel_tol * top.max(1.0);
    sv.iter().filter(|s| **s > cut).count()
}

/// Rows × cols matrix over a coefficient ring, acting on coefficient vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct RingMatrix {
    rows: usize,
    cols: usize,
    descriptor: RingDescriptor,
    entries: Vec<RingValue>,
}

impl RingMatrix {
    pub fn zeros(descriptor: &RingDescriptor, rows: usize, cols: usize) -> Self {
        RingMatrix {
            rows,
            cols,
            descriptor: descriptor.clone(),
            entries: vec![RingValue::zero(descriptor); rows * cols],
        }
    }

    pub fn identity(descriptor: &RingDescriptor, n: usize) -> Self {
        let mut m = RingMatrix::zeros(descriptor, n, n);
        for i in 0..n {
            m.set(i, i, RingValue::unit(descriptor));
        }
        m
    }

    pub fn from_fn(descriptor: &RingDescriptor, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RingValue) -> Self {
        let entries = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        RingMatrix {
            rows,
            cols,
            descriptor: descriptor.clone(),
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &RingValue {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RingValue) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn try_mul(&self, o: &RingMatrix) -> Result<RingMatrix> {
        if self.cols != o.rows {
            return invalid(format!("shape {}x{} times {}x{}", self.rows, self.cols, o.rows, o.cols));
        }
        let mut out = RingMatrix::zeros(&self.descriptor, self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = o.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * o.cols + c;
                    out.entries[idx] = out.entries[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, o: &RingMatrix) -> RingMatrix {
        self.try_mul(o).expect("matrix shapes agree")
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> RingMatrix {
        RingMatrix::from_fn(&self.descriptor, self.cols, self.rows, |r, c| self.get(c, r).star())
    }

    /// Largest entrywise coefficient distance; infinite for different shapes.
    pub fn max_distance(&self, o: &RingMatrix) -> f64 {
        if self.rows != o.rows || self.cols != o.cols {
            return f64::INFINITY;
        }
        self.entries
            .iter()
            .zip(&o.entries)
            .map(|(a, b)| a.dist(b))
            .fold(0.0, f64::max)
    }

    pub fn column(&self, c: usize) -> Vec<RingValue> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::cx;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[], 1e-9), 0);
        let rows = vec![vec![1.0, 2.0, 3.0], vec![2.0, 4.0, 6.0], vec![0.0, 1.0, 0.0]];
        assert_eq!(rank(&rows, 1e-9), 2);
        let wide = vec![vec![1.0, 0.0, 0.0, 0.0], vec![0.0, 0.0, 0.0, 1e-14]];
        assert_eq!(rank(&wide, 1e-9), 1);
    }

    #[test]
    fn ring_matrix_product_and_adjoint() {
        let d = RingDescriptor::ComplexScalar;
        let a = RingMatrix::from_fn(&d, 2, 3, |r, c| cx(r as f64, c as f64));
        let b = a.adjoint();
        assert_eq!(b.rows(), 3);
        let p = a.mul(&b);
        // (a a*) is self-adjoint
        assert!(p.max_distance(&p.adjoint()) < 1e-12);
        assert!(RingMatrix::identity(&d, 2).mul(&a).max_distance(&a) == 0.0);
    }
}
