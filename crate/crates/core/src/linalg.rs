//! Exact sparse elimination over the rationals.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::poly::{MPoly, Monomial};
use crate::rational::Q;

pub type SparseVec<K> = BTreeMap<K, Q>;

/// Incrementally built echelon basis. Each stored row remembers which combination
/// of the inserted vectors produced it, so coordinates can be recovered.
#[derive(Debug, Clone)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<(K, SparseVec<K>, Vec<Q>)>,
    inserted: usize,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: Vec::new(), inserted: 0 }
    }
}

fn axpy<K: Ord + Clone>(target: &mut SparseVec<K>, a: &Q, x: &SparseVec<K>) {
    for (k, v) in x {
        let entry = target.entry(k.clone()).or_default();
        *entry += a * v;
        if entry.is_zero() {
            target.remove(k);
        }
    }
}

fn axpy_dense(target: &mut Vec<Q>, a: &Q, x: &[Q]) {
    if target.len() < x.len() {
        target.resize(x.len(), Q::zero());
    }
    for (t, v) in target.iter_mut().zip(x) {
        if !v.is_zero() {
            *t += a * v;
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; returns the residual and the combination
    /// `c` of inserted vectors with `v - residual = sum c_i input_i`.
    pub fn reduce(&self, v: &SparseVec<K>) -> (SparseVec<K>, Vec<Q>) {
        let mut r = v.clone();
        let mut combo = vec![Q::zero(); self.inserted];
        for (pivot, row, row_combo) in &self.rows {
            if let Some(a) = r.get(pivot).cloned() {
                axpy(&mut r, &-&a, row);
                axpy_dense(&mut combo, &a, row_combo);
            }
        }
        (r, combo)
    }

    /// Inserts a vector; returns true if it was independent of the previous ones.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let (r, combo) = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.recip();
        let row: SparseVec<K> = r.into_iter().map(|(k, c)| (k, c * &inv)).collect();
        let mut row_combo: Vec<Q> = combo.iter().map(|c| -(c * &inv)).collect();
        row_combo.resize(self.inserted, Q::zero());
        row_combo[idx] = inv;
        self.rows.push((pivot, row, row_combo));
        true
    }

    /// Coordinates of `v` in the inserted vectors, if `v` lies in their span.
    /// Unique when every inserted vector was independent.
    pub fn coordinates(&self, v: &SparseVec<K>) -> Option<Vec<Q>> {
        let (r, mut combo) = self.reduce(v);
        combo.resize(self.inserted, Q::zero());
        r.is_empty().then_some(combo)
    }
}

pub fn poly_vector(p: &MPoly) -> SparseVec<Monomial> {
    p.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// Exact rank of a list of polynomials.
pub fn rank(polys: &[MPoly]) -> usize {
    let mut e = Echelon::new();
    for p in polys {
        e.insert(&poly_vector(p));
    }
    e.rank()
}

/// Dense rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Q::one();
        }
        m
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Q>]) -> Matrix {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|q| q.is_zero())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut m = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        m.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        m
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(&Q::int(-1)))
    }

    pub fn scale(&self, c: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_duplicates_is_one() {
        let p = MPoly::difference(3, 1, 0);
        assert_eq!(rank(&[p.clone(), p.clone(), p.scale(&Q::int(3))]), 1);
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[MPoly::zero(2)]), 0);
    }

    #[test]
    fn coordinates_recover_combination() {
        let a = MPoly::difference(3, 1, 0);
        let b = MPoly::difference(3, 2, 1);
        let c = MPoly::var(3, 0);
        let mut e = Echelon::new();
        for p in [&a, &b, &c] {
            assert!(e.insert(&poly_vector(p)));
        }
        let target = &(&a.scale(&Q::new(1, 2)) - &b.scale(&Q::int(3))) + &c;
        assert_eq!(e.coordinates(&poly_vector(&target)).unwrap(), vec![Q::new(1, 2), Q::int(-3), Q::one()]);
        assert!(e.coordinates(&poly_vector(&MPoly::var(3, 2).pow(2))).is_none());
    }

    #[test]
    fn coordinates_with_dependent_inputs() {
        let a = MPoly::var(2, 0);
        let mut e = Echelon::new();
        e.insert(&poly_vector(&a));
        assert!(!e.insert(&poly_vector(&a.scale(&Q::int(2)))));
        let b = MPoly::var(2, 1);
        e.insert(&poly_vector(&b));
        let coords = e.coordinates(&poly_vector(&(&a + &b))).unwrap();
        let rebuilt = &(&a.scale(&coords[0]) + &a.scale(&(&coords[1] * &Q::int(2)))) + &b.scale(&coords[2]);
        assert_eq!(rebuilt, &a + &b);
    }

    #[test]
    fn matrix_products() {
        let m = Matrix::from_columns(2, &[vec![Q::int(1), Q::int(0)], vec![Q::int(1), Q::int(1)]]);
        let sq = m.mul(&m);
        assert_eq!(sq.get(0, 1), &Q::int(2));
        assert!(m.sub(&m).is_zero());
        assert_eq!(Matrix::identity(2).mul(&m), m);
    }
}
