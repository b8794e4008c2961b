//! Dense exact linear algebra over a [`Scalar`] field.
//!
//! Everything is deterministic: subspaces are always represented by their
//! reduced row-echelon bases, so certificates and reports are reproducible
//! byte for byte.

use crate::scalar::{FieldDescriptor, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub field: FieldDescriptor,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: &FieldDescriptor, rows: usize, cols: usize) -> Self {
        Mat {
            field: field.clone(),
            rows,
            cols,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: &FieldDescriptor, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_rows(field: &FieldDescriptor, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat {
            field: field.clone(),
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero(&self.field);
                for j in 0..self.cols {
                    if !v[j].is_zero() && !self.get(i, j).is_zero() {
                        acc = acc.add(&self.get(i, j).mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows * self.cols {
            out.data[i] = self.data[i].add(&other.data[i]);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = v.mul(c);
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // Find a pivot row (first nonzero in column c at/below row r).
            let mut piv = None;
            for i in r..self.rows {
                if !self.get(i, c).is_zero() {
                    piv = Some(i);
                    break;
                }
            }
            let Some(p) = piv else { continue };
            self.swap_rows(r, p);
            let inv = self.get(r, c).inv().expect("pivot nonzero");
            for j in c..self.cols {
                let v = self.get(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..self.cols {
                    let v = self.get(i, j).sub(&self.get(r, j).mul(&f));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Canonical basis of the null space {x : Ax = 0}.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(&self.field); self.cols];
            v[free] = Scalar::one(&self.field);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = m.get(r, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of Ax = b, if any.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zeros(&self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![Scalar::zero(&self.field); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one(&self.field));
        }
        let pivots = aug.rref();
        if pivots.len() < n {
            return None;
        }
        let mut out = Mat::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(out)
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut t = Scalar::zero(&self.field);
        for i in 0..self.rows {
            t = t.add(self.get(i, i));
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Mat::identity(&self.field, self.rows)
    }
}

/// A linear subspace of K^n, canonically represented by its RREF basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub field: FieldDescriptor,
    pub ambient_dim: usize,
    /// Rows form the reduced row-echelon basis.
    pub basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn from_spanning(field: &FieldDescriptor, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        if vectors.is_empty() {
            return Subspace {
                field: field.clone(),
                ambient_dim,
                basis: vec![],
            };
        }
        let mut m = Mat::from_rows(field, vectors);
        let pivots = m.rref();
        let basis = (0..pivots.len()).map(|i| m.row(i)).collect();
        Subspace {
            field: field.clone(),
            ambient_dim,
            basis,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        // Reduce v against the RREF basis.
        let mut v = v.to_vec();
        for row in &self.basis {
            let pivot = row.iter().position(|c| !c.is_zero());
            let Some(p) = pivot else { continue };
            if !v[p].is_zero() {
                let f = v[p].clone();
                for j in 0..v.len() {
                    v[j] = v[j].sub(&row[j].mul(&f));
                }
            }
        }
        v.iter().all(|c| c.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.clone());
        Subspace::from_spanning(&self.field, self.ambient_dim, vs)
    }

    /// Intersection via the kernel of the stacked-coordinates map.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::from_spanning(&self.field, self.ambient_dim, vec![]);
        }
        // Solve a*B1 - b*B2 = 0 over coefficients (a, b).
        let k = self.dim() + other.dim();
        let mut m = Mat::zeros(&self.field, self.ambient_dim, k);
        for (j, v) in self.basis.iter().enumerate() {
            for i in 0..self.ambient_dim {
                m.set(i, j, v[i].clone());
            }
        }
        for (j, v) in other.basis.iter().enumerate() {
            for i in 0..self.ambient_dim {
                m.set(i, self.dim() + j, v[i].neg());
            }
        }
        let ker = m.kernel();
        let vectors = ker
            .into_iter()
            .map(|coef| {
                let mut v = vec![Scalar::zero(&self.field); self.ambient_dim];
                for (j, b) in self.basis.iter().enumerate() {
                    if coef[j].is_zero() {
                        continue;
                    }
                    for i in 0..self.ambient_dim {
                        v[i] = v[i].add(&b[i].mul(&coef[j]));
                    }
                }
                v
            })
            .collect();
        Subspace::from_spanning(&self.field, self.ambient_dim, vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::make_field;

    fn qi(field: &FieldDescriptor, v: i64) -> Scalar {
        Scalar::from_integer(field, v)
    }

    #[test]
    fn rref_and_kernel() {
        let f = make_field(0, 1).unwrap();
        let m = Mat::from_rows(
            &f,
            vec![
                vec![qi(&f, 1), qi(&f, 2), qi(&f, 3)],
                vec![qi(&f, 2), qi(&f, 4), qi(&f, 6)],
            ],
        );
        assert_eq!(m.rank(), 1);
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.apply(v).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn solve_and_inverse() {
        let f = make_field(0, 1).unwrap();
        let m = Mat::from_rows(
            &f,
            vec![vec![qi(&f, 2), qi(&f, 1)], vec![qi(&f, 1), qi(&f, 1)]],
        );
        let x = m.solve(&[qi(&f, 3), qi(&f, 2)]).unwrap();
        assert_eq!(x, vec![qi(&f, 1), qi(&f, 1)]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
    }

    #[test]
    fn subspace_ops() {
        let f = make_field(0, 1).unwrap();
        let a = Subspace::from_spanning(
            &f,
            3,
            vec![vec![qi(&f, 1), qi(&f, 0), qi(&f, 0)], vec![qi(&f, 0), qi(&f, 1), qi(&f, 0)]],
        );
        let b = Subspace::from_spanning(
            &f,
            3,
            vec![vec![qi(&f, 0), qi(&f, 1), qi(&f, 0)], vec![qi(&f, 0), qi(&f, 0), qi(&f, 1)]],
        );
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[qi(&f, 0), qi(&f, 5), qi(&f, 0)]));
        assert_eq!(a.sum(&b).dim(), 3);
    }

    #[test]
    fn kernel_over_finite_field() {
        let f = make_field(5, 1).unwrap();
        let m = Mat::from_rows(&f, vec![vec![qi(&f, 2), qi(&f, 1)]]);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        assert!(m.apply(&ker[0]).iter().all(|c| c.is_zero()));
    }
}
