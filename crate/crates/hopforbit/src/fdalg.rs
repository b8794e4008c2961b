//! Structure analysis of finite-dimensional associative algebras given by
//! structure constants: Jacobson radical, Wedderburn blocks, maximal ideals
//! of commutative algebras, and Frobenius certification.
//!
//! The radical is computed from the trace bilinear form (x, y) -> tr(L_x L_y),
//! valid in characteristic 0 or p > dim; for commutative algebras in small
//! characteristic the nilradical is computed instead from kernels of the
//! p-power maps, which needs no characteristic guard.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{Mat, Subspace};
use crate::polyring::{Ideal, PolyRing};
use crate::scalar::{FieldDescriptor, Scalar, ScalarJson};

#[derive(Debug, Clone, Error)]
pub enum FdalgError {
    #[error("trace-form radical invalid: characteristic {0} <= dimension {1} (noncommutative)")]
    SmallCharacteristic(u64, usize),
    #[error("block with center of degree {0} does not split over the coefficient field")]
    NonSplitBlock(usize),
    #[error("operation requires a commutative algebra")]
    NotCommutative,
    #[error(transparent)]
    Poly(#[from] crate::polyring::PolyError),
}

/// Finite-dimensional associative algebra by structure constants.
#[derive(Debug, Clone)]
pub struct FDAlgebra {
    field: FieldDescriptor,
    dim: usize,
    labels: Vec<String>,
    /// mult[i][j] = e_i * e_j as a sparse coordinate vector.
    mult: Vec<Vec<Vec<(usize, Scalar)>>>,
    unit: Vec<Scalar>,
    commutative: bool,
}

impl FDAlgebra {
    /// Construct and check associativity and the unit laws. Associativity is
    /// verified on all basis triples up to dimension 64 and on a
    /// deterministic stride sample above that.
    pub fn new(
        field: &FieldDescriptor,
        labels: Vec<String>,
        mult: Vec<Vec<Vec<(usize, Scalar)>>>,
        unit: Vec<Scalar>,
    ) -> FDAlgebra {
        let dim = labels.len();
        assert_eq!(mult.len(), dim);
        assert_eq!(unit.len(), dim);
        let mut alg = FDAlgebra {
            field: field.clone(),
            dim,
            labels,
            mult,
            unit,
            commutative: false,
        };
        for i in 0..dim {
            let e = alg.basis_vec(i);
            assert_eq!(alg.mul_vec(&alg.unit.clone(), &e), e, "unit fails on the left");
            assert_eq!(alg.mul_vec(&e, &alg.unit.clone()), e, "unit fails on the right");
        }
        let stride = if dim <= 64 { 1 } else { dim / 48 + 1 };
        let idxs: Vec<usize> = (0..dim).step_by(stride).collect();
        for &i in &idxs {
            for &j in &idxs {
                for &l in &idxs {
                    let ab_c = alg.mul_vec(&alg.mul_basis(i, j), &alg.basis_vec(l));
                    let a_bc = alg.mul_vec(&alg.basis_vec(i), &alg.mul_basis(j, l));
                    assert_eq!(ab_c, a_bc, "associativity fails at ({i},{j},{l})");
                }
            }
        }
        let mut comm = true;
        'outer: for i in 0..dim {
            for j in (i + 1)..dim {
                if alg.mul_basis(i, j) != alg.mul_basis(j, i) {
                    comm = false;
                    break 'outer;
                }
            }
        }
        alg.commutative = comm;
        alg
    }

    /// Finite-dimensional quotient of a commutative affine algebra, on its
    /// staircase monomial basis.
    pub fn from_affine_quotient(algebra: &crate::polyring::AffineAlgebra) -> FDAlgebra {
        let fd = algebra
            .finite_data()
            .expect("quotient must be finite dimensional");
        let field = algebra.ring().field();
        let dim = fd.dim();
        let labels: Vec<String> = fd.basis.iter().map(|m| format!("m{m:?}")).collect();
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let p = algebra.basis_poly(i).mul(&algebra.basis_poly(j));
                let coords = algebra.coords(&p);
                mult[i][j] = sparsify(&coords);
            }
        }
        let unit = algebra.coords(&algebra.ring().one());
        FDAlgebra::new(field, labels, mult, unit)
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(&self.field); self.dim];
        v[i] = Scalar::one(&self.field);
        v
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(&self.field); self.dim];
        for (k, c) in &self.mult[i][j] {
            v[*k] = v[*k].add(c);
        }
        v
    }

    pub fn mul_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(&self.field); self.dim];
        for i in 0..self.dim {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if b[j].is_zero() {
                    continue;
                }
                let c = a[i].mul(&b[j]);
                for (k, s) in &self.mult[i][j] {
                    v[*k] = v[*k].add(&s.mul(&c));
                }
            }
        }
        v
    }

    pub fn pow_vec(&self, a: &[Scalar], e: usize) -> Vec<Scalar> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul_vec(&acc, a);
        }
        acc
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_mult(&self, a: &[Scalar]) -> Mat {
        let mut m = Mat::zeros(&self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul_vec(a, &self.basis_vec(j));
            for i in 0..self.dim {
                m.set(i, j, col[i].clone());
            }
        }
        m
    }

    pub fn right_mult(&self, a: &[Scalar]) -> Mat {
        let mut m = Mat::zeros(&self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul_vec(&self.basis_vec(j), a);
            for i in 0..self.dim {
                m.set(i, j, col[i].clone());
            }
        }
        m
    }

    /// Jacobson radical as a subspace. Trace-form method in characteristic 0
    /// or p > dim; p-power kernels for commutative algebras in any
    /// characteristic; otherwise an error, mirroring the trace-form
    /// hypothesis.
    pub fn radical(&self) -> Result<Subspace, FdalgError> {
        let p = self.field.characteristic();
        if p == 0 || (p as usize) > self.dim {
            return Ok(self.radical_trace_form());
        }
        if self.commutative {
            return Ok(self.nilradical_commutative_char_p());
        }
        Err(FdalgError::SmallCharacteristic(p, self.dim))
    }

    fn radical_trace_form(&self) -> Subspace {
        let lmats: Vec<Mat> = (0..self.dim).map(|i| self.left_mult(&self.basis_vec(i))).collect();
        let mut gram = Mat::zeros(&self.field, self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                gram.set(i, j, lmats[i].mul(&lmats[j]).trace());
            }
        }
        let ker = gram.kernel();
        Subspace::from_spanning(&self.field, self.dim, ker)
    }

    /// Nilradical of a commutative algebra over F_q as the kernel of the
    /// p^m-power map, p^m >= dim. The map is p^m-semilinear; its kernel is
    /// obtained from a linear kernel by coordinatewise p^m-th roots.
    fn nilradical_commutative_char_p(&self) -> Subspace {
        let p = self.field.characteristic();
        let mut m = 0u32;
        let mut pm = 1usize;
        while pm < self.dim.max(2) {
            pm = pm.saturating_mul(p as usize);
            m += 1;
        }
        let mut mat = Mat::zeros(&self.field, self.dim, self.dim);
        for i in 0..self.dim {
            let col = self.pow_vec(&self.basis_vec(i), pm);
            for r in 0..self.dim {
                mat.set(r, i, col[r].clone());
            }
        }
        let ker = mat.kernel();
        let vectors = ker
            .into_iter()
            .map(|b| b.iter().map(|c| pth_root_iter(c, m)).collect())
            .collect();
        Subspace::from_spanning(&self.field, self.dim, vectors)
    }

    pub fn is_semisimple(&self) -> Result<bool, FdalgError> {
        Ok(self.radical()?.dim() == 0)
    }

    /// The semisimple quotient A/rad on the non-pivot coordinate complement,
    /// with the projection matrix A -> A/rad.
    pub fn semisimple_quotient(&self) -> Result<(FDAlgebra, Mat), FdalgError> {
        let rad = self.radical()?;
        Ok(self.quotient_by(&rad))
    }

    /// Quotient by a two-sided ideal subspace.
    pub fn quotient_by(&self, ideal: &Subspace) -> (FDAlgebra, Mat) {
        let pivots: Vec<usize> = ideal
            .basis
            .iter()
            .map(|row| row.iter().position(|c| !c.is_zero()).unwrap())
            .collect();
        let complement: Vec<usize> = (0..self.dim).filter(|i| !pivots.contains(i)).collect();
        let qdim = complement.len();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let mut v = v.to_vec();
            for (row, &p) in ideal.basis.iter().zip(&pivots) {
                if !v[p].is_zero() {
                    let f = v[p].clone();
                    for k in 0..self.dim {
                        v[k] = v[k].sub(&row[k].mul(&f));
                    }
                }
            }
            complement.iter().map(|&i| v[i].clone()).collect()
        };
        let mut proj = Mat::zeros(&self.field, qdim, self.dim);
        for j in 0..self.dim {
            let col = project(&self.basis_vec(j));
            for i in 0..qdim {
                proj.set(i, j, col[i].clone());
            }
        }
        let mut mult = vec![vec![Vec::new(); qdim]; qdim];
        for (qi, &i) in complement.iter().enumerate() {
            for (qj, &j) in complement.iter().enumerate() {
                mult[qi][qj] = sparsify(&project(&self.mul_basis(i, j)));
            }
        }
        let labels = complement.iter().map(|&i| self.labels[i].clone()).collect();
        let unit = project(&self.unit);
        (FDAlgebra::new(&self.field, labels, mult, unit), proj)
    }

    /// Center as a subspace: common kernel of the commutator maps.
    pub fn center(&self) -> Subspace {
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for i in 0..self.dim {
            let l = self.left_mult(&self.basis_vec(i));
            let r = self.right_mult(&self.basis_vec(i));
            let d = l.add(&r.scale(&Scalar::one(&self.field).neg()));
            for k in 0..self.dim {
                rows.push((0..self.dim).map(|j| d.get(k, j).clone()).collect());
            }
        }
        let m = Mat::from_rows(&self.field, rows);
        Subspace::from_spanning(&self.field, self.dim, m.kernel())
    }
}

fn sparsify(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

fn pth_root_iter(c: &Scalar, m: u32) -> Scalar {
    let field = c.field();
    let q = field.field_size().expect("finite field");
    let p = field.characteristic();
    let mut out = c.clone();
    for _ in 0..m {
        out = out.pow(q / p); // x -> x^{q/p} inverts Frobenius on F_q
    }
    out
}

/// One Wedderburn block of the semisimple quotient.
#[derive(Debug, Clone)]
pub struct Block {
    pub block_dim: usize,
    pub center_degree: usize,
    /// Some(d) for a split block isomorphic to d x d matrices; None when the
    /// block does not split over the coefficient field.
    pub simple_dim: Option<usize>,
    /// Primitive central idempotent, in quotient coordinates.
    pub idempotent: Vec<Scalar>,
}

/// Wedderburn data: the semisimple quotient, the projection onto it, and the
/// block decomposition through primitive central idempotents.
#[derive(Debug)]
pub struct WedderburnReport {
    pub quotient: FDAlgebra,
    pub to_quotient: Mat,
    pub blocks: Vec<Block>,
}

impl FDAlgebra {
    pub fn wedderburn(&self) -> Result<WedderburnReport, FdalgError> {
        let (q, proj) = self.semisimple_quotient()?;
        let blocks = wedderburn_blocks(&q)?;
        Ok(WedderburnReport {
            quotient: q,
            to_quotient: proj,
            blocks,
        })
    }

    /// Maximal ideals of a commutative algebra, as subspaces of the algebra,
    /// pulled back from the split blocks of the semisimple quotient.
    pub fn maximal_ideals_commutative(&self) -> Result<Vec<Subspace>, FdalgError> {
        if !self.commutative {
            return Err(FdalgError::NotCommutative);
        }
        let rad = self.radical()?;
        let (q, _) = self.quotient_by(&rad);
        let blocks = wedderburn_blocks(&q)?;
        for b in &blocks {
            if b.center_degree > 1 {
                return Err(FdalgError::NonSplitBlock(b.center_degree));
            }
        }
        let pivots: Vec<usize> = rad
            .basis
            .iter()
            .map(|row| row.iter().position(|c| !c.is_zero()).unwrap())
            .collect();
        let complement: Vec<usize> = (0..self.dim).filter(|i| !pivots.contains(i)).collect();
        let lift = |v: &[Scalar]| -> Vec<Scalar> {
            let mut out = vec![Scalar::zero(&self.field); self.dim];
            for (qi, &i) in complement.iter().enumerate() {
                out[i] = v[qi].clone();
            }
            out
        };
        let mut out = Vec::new();
        for (bi, _) in blocks.iter().enumerate() {
            let mut vectors: Vec<Vec<Scalar>> = rad.basis.clone();
            for (bj, other) in blocks.iter().enumerate() {
                if bi == bj {
                    continue;
                }
                let l = q.left_mult(&other.idempotent);
                for j in 0..q.dim() {
                    vectors.push(lift(&l.apply(&q.basis_vec(j))));
                }
            }
            out.push(Subspace::from_spanning(&self.field, self.dim, vectors));
        }
        Ok(out)
    }
}

/// Decompose the center of a semisimple algebra into field factors and read
/// off the blocks. Splitting is by eigenvalues of multiplication maps, with
/// an idempotent search (through the polynomial engine) on small atomic
/// pieces that eigenvalues alone cannot separate.
fn wedderburn_blocks(q: &FDAlgebra) -> Result<Vec<Block>, FdalgError> {
    if q.dim() == 0 {
        return Ok(vec![]);
    }
    let field = q.field().clone();
    let z = q.center();
    let mut factors: Vec<Subspace> = vec![z.clone()];
    for gen_idx in 0..z.dim() {
        let gen = z.basis[gen_idx].clone();
        let lg = q.left_mult(&gen);
        let mut next: Vec<Subspace> = Vec::new();
        for w in factors {
            if w.dim() <= 1 {
                next.push(w);
                continue;
            }
            next.extend(split_by_eigenvalues(q, &lg, &w)?);
        }
        factors = next;
    }
    // Eigenvalues cannot separate products of isomorphic field factors;
    // hunt idempotents on small atomic pieces.
    let mut refined: Vec<Subspace> = Vec::new();
    for w in factors {
        if (4..=6).contains(&w.dim()) {
            refined.extend(split_by_idempotents(q, &w)?);
        } else {
            refined.push(w);
        }
    }
    let factors = refined;

    let mut blocks = Vec::new();
    for w in &factors {
        let e = factor_identity(q, w);
        let le = q.left_mult(&e);
        let mut img: Vec<Vec<Scalar>> = Vec::new();
        for j in 0..q.dim() {
            img.push(le.apply(&q.basis_vec(j)));
        }
        let block = Subspace::from_spanning(&field, q.dim(), img);
        let block_dim = block.dim();
        let center_degree = w.dim();
        let simple_dim = if center_degree == 1 {
            (1..=block_dim).find(|d| d * d == block_dim)
        } else {
            None
        };
        blocks.push(Block {
            block_dim,
            center_degree,
            simple_dim,
            idempotent: e,
        });
    }
    blocks.sort_by_key(|b| (b.center_degree, b.block_dim));
    Ok(blocks)
}

/// Split a center subspace W along the eigenvalues (in the field) of left
/// multiplication by a central element.
fn split_by_eigenvalues(q: &FDAlgebra, lg: &Mat, w: &Subspace) -> Result<Vec<Subspace>, FdalgError> {
    let field = q.field().clone();
    let d = w.dim();
    let restricted = restrict(lg, w, &field);
    // Minimal polynomial of the restriction by linear dependence of powers.
    let mut pows: Vec<Mat> = vec![Mat::identity(&field, d)];
    let mut rows: Vec<Vec<Scalar>> = vec![flatten(&pows[0])];
    let min_poly: Vec<Scalar>;
    loop {
        let nxt = pows.last().unwrap().mul(&restricted);
        let flat = flatten(&nxt);
        let m = Mat::from_rows(&field, rows.clone()).transpose();
        if let Some(sol) = m.solve(&flat) {
            let mut mp: Vec<Scalar> = sol.iter().map(|c| c.neg()).collect();
            mp.push(Scalar::one(&field));
            min_poly = mp;
            break;
        }
        rows.push(flat.clone());
        pows.push(nxt);
    }
    let report = crate::solve::univariate_roots(&field, &min_poly)?;
    if report.roots.is_empty() {
        return Ok(vec![w.clone()]);
    }
    let mut pieces: Vec<Subspace> = Vec::new();
    for (root, _) in &report.roots {
        let shifted = restricted.add(&Mat::identity(&field, d).scale(&root.neg()));
        let mut power = shifted.clone();
        for _ in 1..d {
            power = power.mul(&shifted);
        }
        let ker = power.kernel();
        if ker.is_empty() {
            continue;
        }
        let vectors: Vec<Vec<Scalar>> = ker.iter().map(|c| unrestrict(c, w, &field, q.dim())).collect();
        pieces.push(Subspace::from_spanning(&field, q.dim(), vectors));
    }
    let covered: usize = pieces.iter().map(|p| p.dim()).sum();
    if covered < d {
        // Root-free part: kernel of the root-free cofactor of the minimal
        // polynomial evaluated at the restriction.
        let mut cof = min_poly.clone();
        for (root, mult) in &report.roots {
            for _ in 0..*mult {
                cof = deflate_poly(&cof, root);
            }
        }
        let mut acc = Mat::zeros(&field, d, d);
        let mut pw = Mat::identity(&field, d);
        for c in &cof {
            acc = acc.add(&pw.scale(c));
            pw = pw.mul(&restricted);
        }
        let mut power = acc.clone();
        for _ in 1..d {
            power = power.mul(&acc);
        }
        let ker = power.kernel();
        let vectors: Vec<Vec<Scalar>> = ker.iter().map(|c| unrestrict(c, w, &field, q.dim())).collect();
        let rest = Subspace::from_spanning(&field, q.dim(), vectors);
        if rest.dim() > 0 {
            pieces.push(rest);
        }
    }
    Ok(pieces)
}

fn deflate_poly(f: &[Scalar], r: &Scalar) -> Vec<Scalar> {
    let field = r.field();
    let n = f.len();
    let mut q = vec![Scalar::zero(field); n - 1];
    let mut carry = Scalar::zero(field);
    for i in (0..n).rev() {
        let v = f[i].add(&carry);
        if i > 0 {
            q[i - 1] = v.clone();
            carry = v.mul(r);
        }
    }
    q
}

/// Matrix of lg restricted to the subspace w, in w's basis coordinates.
fn restrict(lg: &Mat, w: &Subspace, field: &FieldDescriptor) -> Mat {
    let d = w.dim();
    let n = w.ambient_dim;
    let mut basis_mat = Mat::zeros(field, n, d);
    for (j, b) in w.basis.iter().enumerate() {
        for i in 0..n {
            basis_mat.set(i, j, b[i].clone());
        }
    }
    let mut out = Mat::zeros(field, d, d);
    for j in 0..d {
        let img = lg.apply(&w.basis[j]);
        let coords = basis_mat.solve(&img).expect("subspace not invariant");
        for i in 0..d {
            out.set(i, j, coords[i].clone());
        }
    }
    out
}

fn unrestrict(coords: &[Scalar], w: &Subspace, field: &FieldDescriptor, n: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(field); n];
    for (j, b) in w.basis.iter().enumerate() {
        if coords[j].is_zero() {
            continue;
        }
        for i in 0..n {
            v[i] = v[i].add(&b[i].mul(&coords[j]));
        }
    }
    v
}

fn flatten(m: &Mat) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(m.rows * m.cols);
    for i in 0..m.rows {
        out.extend(m.row(i));
    }
    out
}

/// Find all idempotents of the commutative subalgebra W by solving e^2 = e
/// with the polynomial engine, and split W along the primitive ones.
fn split_by_idempotents(q: &FDAlgebra, w: &Subspace) -> Result<Vec<Subspace>, FdalgError> {
    let field = q.field().clone();
    let d = w.dim();
    let names: Vec<String> = (0..d).map(|j| format!("c{j}")).collect();
    let specs: Vec<(&str, bool)> = names.iter().map(|n| (n.as_str(), false)).collect();
    let ring = PolyRing::new(&field, &specs);
    let mut basis_mat = Mat::zeros(&field, q.dim(), d);
    for (j, b) in w.basis.iter().enumerate() {
        for i in 0..q.dim() {
            basis_mat.set(i, j, b[i].clone());
        }
    }
    let mut products = vec![vec![vec![Scalar::zero(&field); d]; d]; d];
    for i in 0..d {
        for j in 0..d {
            let p = q.mul_vec(&w.basis[i], &w.basis[j]);
            let coords = basis_mat.solve(&p).expect("W not multiplicatively closed");
            products[i][j] = coords;
        }
    }
    let mut eqs = Vec::new();
    for k in 0..d {
        let mut poly = ring.zero();
        for i in 0..d {
            for j in 0..d {
                if products[i][j][k].is_zero() {
                    continue;
                }
                poly = poly.add(&ring.var(i).mul(&ring.var(j)).scale(&products[i][j][k]));
            }
        }
        poly = poly.sub(&ring.var(k));
        eqs.push(poly);
    }
    let ideal = Ideal::new(&ring, eqs);
    let sols = crate::solve::solve_zero_dim(&ideal).map_err(FdalgError::Poly)?;
    let idems: Vec<Vec<Scalar>> = sols
        .iter()
        .map(|c| unrestrict(c, w, &field, q.dim()))
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect();
    let mut primitive: Vec<Vec<Scalar>> = Vec::new();
    for e in &idems {
        let below = idems
            .iter()
            .any(|f| f != e && q.mul_vec(e, f) == *f && f.iter().any(|x| !x.is_zero()));
        if !below {
            primitive.push(e.clone());
        }
    }
    if primitive.len() <= 1 {
        return Ok(vec![w.clone()]);
    }
    let mut out = Vec::new();
    for e in primitive {
        let le = q.left_mult(&e);
        let vectors: Vec<Vec<Scalar>> = w.basis.iter().map(|b| le.apply(b)).collect();
        let piece = Subspace::from_spanning(&field, q.dim(), vectors);
        if piece.dim() > 0 {
            out.push(piece);
        }
    }
    Ok(out)
}

fn factor_identity(q: &FDAlgebra, w: &Subspace) -> Vec<Scalar> {
    let field = q.field().clone();
    let d = w.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for j in 0..d {
        for r in 0..q.dim() {
            let mut row = Vec::with_capacity(d);
            for i in 0..d {
                let p = q.mul_vec(&w.basis[i], &w.basis[j]);
                row.push(p[r].clone());
            }
            rows.push(row);
            rhs.push(w.basis[j][r].clone());
        }
    }
    let m = Mat::from_rows(&field, rows);
    let c = m.solve(&rhs).expect("factor identity exists");
    unrestrict(&c, w, &field, q.dim())
}

/// Result of the Frobenius test on a commutative algebra.
#[derive(Debug, Clone)]
pub struct FrobeniusReport {
    pub frobenius: bool,
    /// Functional lambda (coordinate row) with nondegenerate form lambda(ab).
    pub witness: Option<Vec<Scalar>>,
    /// A socle element witnessing a local factor with socle dimension >= 2.
    pub obstruction: Option<Vec<Scalar>>,
}

impl FDAlgebra {
    /// Socle = annihilator of the radical: {v : v * r = 0 for all r in rad}.
    pub fn socle(&self) -> Result<Subspace, FdalgError> {
        let rad = self.radical()?;
        if rad.dim() == 0 {
            return Ok(Subspace::from_spanning(
                &self.field,
                self.dim,
                (0..self.dim).map(|i| self.basis_vec(i)).collect(),
            ));
        }
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for r in &rad.basis {
            let m = self.right_mult(r); // v -> v * r
            for k in 0..self.dim {
                rows.push((0..self.dim).map(|j| m.get(k, j).clone()).collect());
            }
        }
        let m = Mat::from_rows(&self.field, rows);
        Ok(Subspace::from_spanning(&self.field, self.dim, m.kernel()))
    }

    /// Frobenius test: a commutative artinian algebra is Frobenius iff
    /// dim socle = dim A/rad. On success an explicit witness functional is
    /// built from lifted primitive idempotents and per-factor socle
    /// generators, then verified by a Gram-rank computation.
    pub fn is_frobenius_commutative(&self) -> Result<FrobeniusReport, FdalgError> {
        if !self.commutative {
            return Err(FdalgError::NotCommutative);
        }
        let rad = self.radical()?;
        let soc = self.socle()?;
        let ss_dim = self.dim - rad.dim();
        if soc.dim() != ss_dim {
            let obstruction = soc.basis.last().cloned();
            return Ok(FrobeniusReport {
                frobenius: false,
                witness: None,
                obstruction,
            });
        }
        let (q, _) = self.quotient_by(&rad);
        let blocks = wedderburn_blocks(&q)?;
        let pivots: Vec<usize> = rad
            .basis
            .iter()
            .map(|row| row.iter().position(|c| !c.is_zero()).unwrap())
            .collect();
        let complement: Vec<usize> = (0..self.dim).filter(|i| !pivots.contains(i)).collect();
        let mut lambda = vec![Scalar::zero(&self.field); self.dim];
        for b in &blocks {
            let mut e = vec![Scalar::zero(&self.field); self.dim];
            for (qi, &i) in complement.iter().enumerate() {
                e[i] = b.idempotent[qi].clone();
            }
            // Newton iteration x <- 3x^2 - 2x^3 squares the idempotency
            // defect in any characteristic.
            for _ in 0..(usize::BITS - self.dim.leading_zeros() + 2) {
                let x2 = self.mul_vec(&e, &e);
                if x2 == e {
                    break;
                }
                let x3 = self.mul_vec(&x2, &e);
                let three = Scalar::from_integer(&self.field, 3);
                let two = Scalar::from_integer(&self.field, 2);
                e = x2
                    .iter()
                    .zip(&x3)
                    .map(|(a, b)| a.mul(&three).sub(&b.mul(&two)))
                    .collect();
            }
            debug_assert_eq!(self.mul_vec(&e, &e), e, "idempotent lifting failed");
            let le = self.left_mult(&e);
            let soc_i = Subspace::from_spanning(
                &self.field,
                self.dim,
                soc.basis.iter().map(|v| le.apply(v)).collect(),
            );
            let w = soc_i.basis.first().expect("local socle nonzero");
            let lead = w.iter().position(|c| !c.is_zero()).unwrap();
            let scale = w[lead].inv().unwrap();
            for j in 0..self.dim {
                lambda[j] = lambda[j].add(&le.get(lead, j).mul(&scale));
            }
        }
        let mut gram = Mat::zeros(&self.field, self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = self.mul_basis(i, j);
                let mut v = Scalar::zero(&self.field);
                for k in 0..self.dim {
                    if !p[k].is_zero() {
                        v = v.add(&lambda[k].mul(&p[k]));
                    }
                }
                gram.set(i, j, v);
            }
        }
        assert_eq!(gram.rank(), self.dim, "Frobenius witness failed verification");
        Ok(FrobeniusReport {
            frobenius: true,
            witness: Some(lambda),
            obstruction: None,
        })
    }
}

// ------------------------------------------------------------------
// JSON structure-constant format:
// {"dim": n, "mult": [[[k, coeff], ...], ...], "unit": [...], "labels": [...]}
// ------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct FDAlgebraJson {
    pub dim: usize,
    pub mult: Vec<Vec<Vec<(usize, ScalarJson)>>>,
    pub unit: Vec<ScalarJson>,
    pub labels: Vec<String>,
}

impl FDAlgebra {
    pub fn to_json(&self) -> FDAlgebraJson {
        FDAlgebraJson {
            dim: self.dim,
            mult: self
                .mult
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|cell| cell.iter().map(|(k, c)| (*k, c.to_json())).collect())
                        .collect()
                })
                .collect(),
            unit: self.unit.iter().map(|c| c.to_json()).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn from_json(j: &FDAlgebraJson) -> Result<FDAlgebra, FdalgError> {
        let first = j.unit.first().expect("empty algebra");
        let field = crate::scalar::make_field(first.char, first.order)
            .map_err(crate::polyring::PolyError::Scalar)?;
        let mult = j
            .mult
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| {
                        cell.iter()
                            .map(|(k, c)| Ok((*k, Scalar::from_json(c)?)))
                            .collect::<Result<Vec<_>, crate::scalar::ScalarError>>()
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(crate::polyring::PolyError::Scalar)?;
        let unit = j
            .unit
            .iter()
            .map(Scalar::from_json)
            .collect::<Result<Vec<_>, _>>()
            .map_err(crate::polyring::PolyError::Scalar)?;
        Ok(FDAlgebra::new(&field, j.labels.clone(), mult, unit))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{AffineAlgebra, Ideal, PolyRing};
    use crate::scalar::make_field;

    fn truncated_poly_algebra(n: u64) -> FDAlgebra {
        let f = make_field(0, 1).unwrap();
        let r = PolyRing::new(&f, &[("v", false)]);
        let i = Ideal::new(&r, vec![r.var(0).pow(n)]);
        FDAlgebra::from_affine_quotient(&AffineAlgebra::new(&r, i))
    }

    fn group_algebra_c2(char_p: u64) -> FDAlgebra {
        let f = make_field(char_p, 1).unwrap();
        let one = Scalar::one(&f);
        let mult = vec![
            vec![vec![(0, one.clone())], vec![(1, one.clone())]],
            vec![vec![(1, one.clone())], vec![(0, one.clone())]],
        ];
        FDAlgebra::new(
            &f,
            vec!["1".into(), "g".into()],
            mult,
            vec![one.clone(), Scalar::zero(&f)],
        )
    }

    #[test]
    fn radical_of_truncated_polynomials() {
        let a = truncated_poly_algebra(4);
        let rad = a.radical().unwrap();
        assert_eq!(rad.dim(), 3);
        // Nilpotency: some power of the radical vanishes within dim steps.
        let mut prods = rad.basis.clone();
        for _ in 0..a.dim() {
            if prods.iter().all(|v| v.iter().all(|c| c.is_zero())) {
                return;
            }
            let mut next = Vec::new();
            for v in &prods {
                for w in &rad.basis {
                    next.push(a.mul_vec(v, w));
                }
            }
            prods = next;
        }
        assert!(prods.iter().all(|v| v.iter().all(|c| c.is_zero())));
    }

    #[test]
    fn maschke_for_c2() {
        let a = group_algebra_c2(0);
        assert!(a.is_semisimple().unwrap());
        let b = group_algebra_c2(2);
        let rad = b.radical().unwrap();
        assert_eq!(rad.dim(), 1);
        let f = b.field().clone();
        assert!(rad.contains(&[Scalar::one(&f), Scalar::one(&f)]));
    }

    #[test]
    fn radical_of_quotient_is_zero() {
        let a = truncated_poly_algebra(3);
        let (q, _) = a.semisimple_quotient().unwrap();
        assert_eq!(q.radical().unwrap().dim(), 0);
    }

    #[test]
    fn wedderburn_of_qc3_over_q_and_over_qzeta3() {
        let f = make_field(0, 1).unwrap();
        let r = PolyRing::new(&f, &[("g", false)]);
        let i = Ideal::new(&r, vec![r.var(0).pow(3).sub(&r.one())]);
        let a = FDAlgebra::from_affine_quotient(&AffineAlgebra::new(&r, i));
        let rep = a.wedderburn().unwrap();
        assert_eq!(rep.blocks.len(), 2);
        assert_eq!(rep.blocks[0].center_degree, 1);
        assert_eq!(rep.blocks[0].simple_dim, Some(1));
        assert_eq!(rep.blocks[1].center_degree, 2);
        assert_eq!(rep.blocks[1].simple_dim, None);

        let f3 = make_field(0, 3).unwrap();
        let r3 = PolyRing::new(&f3, &[("g", false)]);
        let i3 = Ideal::new(&r3, vec![r3.var(0).pow(3).sub(&r3.one())]);
        let a3 = FDAlgebra::from_affine_quotient(&AffineAlgebra::new(&r3, i3));
        let rep3 = a3.wedderburn().unwrap();
        assert_eq!(rep3.blocks.len(), 3);
        assert!(rep3.blocks.iter().all(|b| b.simple_dim == Some(1)));
    }

    #[test]
    fn block_dims_account_for_radical() {
        let a = truncated_poly_algebra(3);
        let rep = a.wedderburn().unwrap();
        let total: usize = rep.blocks.iter().map(|b| b.block_dim).sum();
        assert_eq!(total, a.dim() - a.radical().unwrap().dim());
    }

    #[test]
    fn maximal_ideals_examples() {
        let a = truncated_poly_algebra(3);
        let ms = a.maximal_ideals_commutative().unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].dim(), 2);

        let f = make_field(0, 1).unwrap();
        let r = PolyRing::new(&f, &[("u", false)]);
        let i = Ideal::new(&r, vec![r.var(0).pow(2).sub(&r.var(0))]);
        let b = FDAlgebra::from_affine_quotient(&AffineAlgebra::new(&r, i));
        assert_eq!(b.maximal_ideals_commutative().unwrap().len(), 2);

        let i2 = Ideal::new(&r, vec![r.var(0).pow(2).sub(&r.from_int(2))]);
        let c = FDAlgebra::from_affine_quotient(&AffineAlgebra::new(&r, i2));
        match c.maximal_ideals_commutative() {
            Err(FdalgError::NonSplitBlock(2)) => {}
            other => panic!("expected NonSplitBlock(2), got {other:?}"),
        }
    }

    #[test]
    fn frobenius_examples() {
        let a = truncated_poly_algebra(4);
        let rep = a.is_frobenius_commutative().unwrap();
        assert!(rep.frobenius);
        assert!(rep.witness.is_some());

        let f = make_field(0, 1).unwrap();
        let r = PolyRing::new(&f, &[("u", false), ("v", false)]);
        let sq = Ideal::new(
            &r,
            vec![r.var(0).pow(2), r.var(0).mul(&r.var(1)), r.var(1).pow(2)],
        );
        let b = FDAlgebra::from_affine_quotient(&AffineAlgebra::new(&r, sq));
        let rep_b = b.is_frobenius_commutative().unwrap();
        assert!(!rep_b.frobenius);
        assert!(rep_b.obstruction.is_some());

        let i = Ideal::new(&r, vec![r.var(0).pow(2).sub(&r.var(0)), r.var(1)]);
        let c = FDAlgebra::from_affine_quotient(&AffineAlgebra::new(&r, i));
        assert!(c.is_frobenius_commutative().unwrap().frobenius);
    }

    #[test]
    fn small_characteristic_guard_noncommutative() {
        let f = make_field(2, 1).unwrap();
        let one = Scalar::one(&f);
        let zero = Scalar::zero(&f);
        let idx = |i: usize, j: usize| i * 2 + j;
        let mut mult = vec![vec![Vec::new(); 4]; 4];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        if j == k {
                            mult[idx(i, j)][idx(k, l)] = vec![(idx(i, l), one.clone())];
                        }
                    }
                }
            }
        }
        let a = FDAlgebra::new(
            &f,
            vec!["e11".into(), "e12".into(), "e21".into(), "e22".into()],
            mult,
            vec![one.clone(), zero.clone(), zero.clone(), one.clone()],
        );
        match a.radical() {
            Err(FdalgError::SmallCharacteristic(2, 4)) => {}
            other => panic!("expected SmallCharacteristic, got {other:?}"),
        }
    }

    #[test]
    fn json_roundtrip() {
        let a = truncated_poly_algebra(2);
        let j = a.to_json();
        let b = FDAlgebra::from_json(&j).unwrap();
        assert_eq!(a.dim(), b.dim());
        assert_eq!(a.mul_basis(1, 1), b.mul_basis(1, 1));
    }
}
