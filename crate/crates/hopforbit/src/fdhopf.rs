//! Finite-dimensional Hopf algebras by structure constants: constructors
//! (group algebras, Taft algebras and their generalizations), exhaustive
//! axiom verification, integrals and (co)semisimplicity, grouplikes, duals
//! and co-opposites.
//!
//! Construction stores unverified data; verification is a separate,
//! exhaustively checked operation so that deliberately broken inputs remain
//! testable.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fdalg::{FDAlgebra, FDAlgebraJson};
use crate::linalg::Mat;
use crate::polyring::{Ideal, PolyRing};
use crate::scalar::{Scalar, ScalarJson};

#[derive(Debug, Clone, Error)]
pub enum FdhopfError {
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("parameter q does not have the required multiplicative order")]
    WrongOrder,
    #[error("Hopf axioms failed verification: {0}")]
    AxiomsNotVerified(String),
    #[error("grouplike with coordinates outside the field (residue degree {0})")]
    NonRationalGrouplike(usize),
    #[error(transparent)]
    Fdalg(#[from] crate::fdalg::FdalgError),
    #[error(transparent)]
    Poly(#[from] crate::polyring::PolyError),
}

/// Element of the tensor square, sparsely indexed by basis pairs.
pub type Tensor2 = BTreeMap<(usize, usize), Scalar>;

/// Outcome of Hopf-axiom verification: pass, or the first failing axiom with
/// witness basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HopfReport {
    Pass,
    Fail { axiom: String, witness: Vec<usize> },
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        matches!(self, HopfReport::Pass)
    }
}

/// Finite-dimensional Hopf algebra: an [`FDAlgebra`] plus comultiplication,
/// counit and antipode tensors.
#[derive(Debug, Clone)]
pub struct FDHopf {
    alg: FDAlgebra,
    /// comult[i] = Delta(e_i) as a list of (j, k, coeff) for e_j (x) e_k.
    comult: Vec<Vec<(usize, usize, Scalar)>>,
    counit: Vec<Scalar>,
    antipode: Mat,
    /// Length m of the coradical filtration T_0 ⊆ ... ⊆ T_m = T, when known
    /// (constructor-supplied metadata: 0 for group algebras, n-1 for Taft).
    pub coradical_filtration_length: Option<usize>,
    verification: Arc<OnceLock<HopfReport>>,
}

impl FDHopf {
    pub fn new(
        alg: FDAlgebra,
        comult: Vec<Vec<(usize, usize, Scalar)>>,
        counit: Vec<Scalar>,
        antipode: Mat,
    ) -> FDHopf {
        assert_eq!(comult.len(), alg.dim());
        assert_eq!(counit.len(), alg.dim());
        FDHopf {
            alg,
            comult,
            counit,
            antipode,
            coradical_filtration_length: None,
            verification: Arc::new(OnceLock::new()),
        }
    }

    pub fn algebra(&self) -> &FDAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn field(&self) -> &crate::scalar::FieldDescriptor {
        self.alg.field()
    }

    pub fn comult_basis(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comult[i]
    }

    pub fn comult_vec(&self, v: &[Scalar]) -> Tensor2 {
        let mut out = Tensor2::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, k, d) in &self.comult[i] {
                let e = out.entry((*j, *k)).or_insert_with(|| Scalar::zero(self.field()));
                *e = e.add(&d.mul(c));
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn counit_basis(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn counit_vec(&self, v: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero(self.field());
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&c.mul(&self.counit[i]));
            }
        }
        acc
    }

    pub fn antipode_matrix(&self) -> &Mat {
        &self.antipode
    }

    pub fn antipode_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.antipode.apply(v)
    }

    /// Multiplication in the tensor square.
    pub fn tensor_mul(&self, a: &Tensor2, b: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for ((i1, i2), c) in a {
            for ((j1, j2), d) in b {
                let left = self.alg.mul_basis(*i1, *j1);
                let right = self.alg.mul_basis(*i2, *j2);
                let cd = c.mul(d);
                for (k1, s1) in left.iter().enumerate() {
                    if s1.is_zero() {
                        continue;
                    }
                    for (k2, s2) in right.iter().enumerate() {
                        if s2.is_zero() {
                            continue;
                        }
                        let e = out
                            .entry((k1, k2))
                            .or_insert_with(|| Scalar::zero(self.field()));
                        *e = e.add(&cd.mul(s1).mul(s2));
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn tensor_of_vecs(&self, a: &[Scalar], b: &[Scalar]) -> Tensor2 {
        let mut out = Tensor2::new();
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, d) in b.iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                out.insert((i, j), c.mul(d));
            }
        }
        out
    }

    /// (Delta (x) id) Delta(e_i): the triple coproduct as (j,k,l) -> coeff.
    pub fn comult2_basis(&self, i: usize) -> BTreeMap<(usize, usize, usize), Scalar> {
        let mut out = BTreeMap::new();
        for (j, k, c) in &self.comult[i] {
            for (a, b, d) in &self.comult[*j] {
                let e = out
                    .entry((*a, *b, *k))
                    .or_insert_with(|| Scalar::zero(self.field()));
                *e = e.add(&c.mul(d));
            }
        }
        out.retain(|_, c: &mut Scalar| !c.is_zero());
        out
    }

    /// Exhaustive Hopf-axiom verification on all basis elements and pairs.
    pub fn verify_hopf_axioms(&self) -> HopfReport {
        self.verification
            .get_or_init(|| self.run_verification())
            .clone()
    }

    pub fn ensure_verified(&self) -> Result<(), FdhopfError> {
        match self.verify_hopf_axioms() {
            HopfReport::Pass => Ok(()),
            HopfReport::Fail { axiom, witness } => Err(FdhopfError::AxiomsNotVerified(format!(
                "{axiom} at basis indices {witness:?}"
            ))),
        }
    }

    fn run_verification(&self) -> HopfReport {
        let n = self.dim();
        let field = self.field();
        // Coassociativity.
        for i in 0..n {
            let lhs = self.comult2_basis(i);
            let mut rhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for (j, k, c) in &self.comult[i] {
                for (a, b, d) in &self.comult[*k] {
                    let e = rhs
                        .entry((*j, *a, *b))
                        .or_insert_with(|| Scalar::zero(field));
                    *e = e.add(&c.mul(d));
                }
            }
            rhs.retain(|_, c| !c.is_zero());
            if lhs != rhs {
                return HopfReport::Fail {
                    axiom: "coassociativity".into(),
                    witness: vec![i],
                };
            }
        }
        // Counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta.
        for i in 0..n {
            let mut left = vec![Scalar::zero(field); n];
            let mut right = vec![Scalar::zero(field); n];
            for (j, k, c) in &self.comult[i] {
                left[*k] = left[*k].add(&c.mul(&self.counit[*j]));
                right[*j] = right[*j].add(&c.mul(&self.counit[*k]));
            }
            let e = self.alg.basis_vec(i);
            if left != e || right != e {
                return HopfReport::Fail {
                    axiom: "counit law".into(),
                    witness: vec![i],
                };
            }
        }
        // Delta(1) = 1 (x) 1 and eps(1) = 1.
        let unit = self.alg.unit().to_vec();
        let unit_tensor = self.tensor_of_vecs(&unit, &unit);
        if self.comult_vec(&unit) != unit_tensor {
            return HopfReport::Fail {
                axiom: "comultiplication of the unit".into(),
                witness: vec![],
            };
        }
        if !self.counit_vec(&unit).is_one() {
            return HopfReport::Fail {
                axiom: "counit of the unit".into(),
                witness: vec![],
            };
        }
        // Delta and eps are algebra maps.
        for i in 0..n {
            for j in 0..n {
                let prod = self.alg.mul_basis(i, j);
                let lhs = self.comult_vec(&prod);
                let di: Tensor2 = self.comult[i]
                    .iter()
                    .map(|(a, b, c)| ((*a, *b), c.clone()))
                    .collect();
                let dj: Tensor2 = self.comult[j]
                    .iter()
                    .map(|(a, b, c)| ((*a, *b), c.clone()))
                    .collect();
                let rhs = self.tensor_mul(&di, &dj);
                if lhs != rhs {
                    return HopfReport::Fail {
                        axiom: "comultiplication is an algebra map".into(),
                        witness: vec![i, j],
                    };
                }
                let eps_prod = self.counit_vec(&prod);
                if eps_prod != self.counit[i].mul(&self.counit[j]) {
                    return HopfReport::Fail {
                        axiom: "counit is an algebra map".into(),
                        witness: vec![i, j],
                    };
                }
            }
        }
        // Antipode axiom: sum S(h_1) h_2 = eps(h) 1 = sum h_1 S(h_2).
        for i in 0..n {
            let mut left = vec![Scalar::zero(field); n];
            let mut right = vec![Scalar::zero(field); n];
            for (j, k, c) in &self.comult[i] {
                let sj = self.antipode_vec(&self.alg.basis_vec(*j));
                let sk = self.antipode_vec(&self.alg.basis_vec(*k));
                let l = self.alg.mul_vec(&sj, &self.alg.basis_vec(*k));
                let r = self.alg.mul_vec(&self.alg.basis_vec(*j), &sk);
                for t in 0..n {
                    left[t] = left[t].add(&l[t].mul(c));
                    right[t] = right[t].add(&r[t].mul(c));
                }
            }
            let expected: Vec<Scalar> = self
                .alg
                .unit()
                .iter()
                .map(|u| u.mul(&self.counit[i]))
                .collect();
            if left != expected || right != expected {
                return HopfReport::Fail {
                    axiom: "antipode axiom".into(),
                    witness: vec![i],
                };
            }
        }
        HopfReport::Pass
    }

    /// Is S^2 the identity map?
    pub fn is_involutory(&self) -> bool {
        self.antipode.mul(&self.antipode).is_identity()
    }

    /// The dual Hopf algebra: all five structure tensors transposed.
    pub fn dual(&self) -> FDHopf {
        let n = self.dim();
        let field = self.field().clone();
        // Dual multiplication from the comultiplication tensor.
        let mut mult = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for (j, k, c) in &self.comult[i] {
                mult[*j][*k].push((i, c.clone()));
            }
        }
        let unit = self.counit.clone();
        let labels: Vec<String> = self
            .alg
            .labels()
            .iter()
            .map(|l| format!("{l}^"))
            .collect();
        let alg = FDAlgebra::new(&field, labels, mult, unit);
        // Dual comultiplication from the multiplication tensor.
        let mut comult = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                let prod = self.alg.mul_basis(i, j);
                for (k, c) in prod.iter().enumerate() {
                    if !c.is_zero() {
                        comult[k].push((i, j, c.clone()));
                    }
                }
            }
        }
        let counit = self.alg.unit().to_vec();
        let antipode = self.antipode.transpose();
        FDHopf::new(alg, comult, counit, antipode)
    }

    /// The co-opposite Hopf algebra: comultiplication flipped, antipode
    /// inverted. Right module-algebra actions are encoded as left actions of
    /// the co-opposite.
    pub fn co_opposite(&self) -> FDHopf {
        let comult = self
            .comult
            .iter()
            .map(|terms| terms.iter().map(|(j, k, c)| (*k, *j, c.clone())).collect())
            .collect();
        let antipode = self
            .antipode
            .inverse()
            .expect("antipode of a finite-dimensional Hopf algebra is bijective");
        FDHopf::new(self.alg.clone(), comult, self.counit.clone(), antipode)
    }

    /// Left and right integrals, and the epsilon(integral) semisimplicity
    /// test on the algebra and its dual.
    pub fn integrals_and_semisimplicity(&self) -> Result<IntegralReport, FdhopfError> {
        self.ensure_verified()?;
        let left = self.one_sided_integral(true);
        let right = self.one_sided_integral(false);
        let is_semisimple = !self.counit_vec(&left).is_zero();
        let dual = self.dual();
        dual.ensure_verified()?;
        let dual_left = dual.one_sided_integral(true);
        let is_cosemisimple = !dual.counit_vec(&dual_left).is_zero();
        Ok(IntegralReport {
            left_integral: left,
            right_integral: right,
            is_semisimple,
            is_cosemisimple,
        })
    }

    /// Solution space of h t = eps(h) t (left) or t h = eps(h) t (right);
    /// one-dimensional for finite-dimensional Hopf algebras.
    fn one_sided_integral(&self, left: bool) -> Vec<Scalar> {
        let n = self.dim();
        let field = self.field();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for h in 0..n {
            let m = if left {
                self.alg.left_mult(&self.alg.basis_vec(h))
            } else {
                self.alg.right_mult(&self.alg.basis_vec(h))
            };
            for r in 0..n {
                let mut row = Vec::with_capacity(n);
                for c in 0..n {
                    let mut v = m.get(r, c).clone();
                    if r == c {
                        v = v.sub(&self.counit[h]);
                    }
                    row.push(v);
                }
                rows.push(row);
            }
        }
        let mat = Mat::from_rows(field, rows);
        let ker = mat.kernel();
        assert_eq!(ker.len(), 1, "integral space must be one-dimensional");
        ker.into_iter().next().unwrap()
    }

    /// All grouplike elements (Delta g = g (x) g, eps(g) = 1), found by
    /// solving the defining quadratic system with the Groebner engine.
    pub fn grouplikes(&self) -> Result<Vec<Vec<Scalar>>, FdhopfError> {
        self.ensure_verified()?;
        let n = self.dim();
        let field = self.field().clone();
        let names: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
        let specs: Vec<(&str, bool)> = names.iter().map(|s| (s.as_str(), false)).collect();
        let ring = PolyRing::new(&field, &specs);
        let mut eqs = Vec::new();
        // Delta(sum c_i e_i) = (sum c_j e_j) (x) (sum c_k e_k).
        let mut delta: BTreeMap<(usize, usize), crate::polyring::Poly> = BTreeMap::new();
        for i in 0..n {
            for (j, k, c) in &self.comult[i] {
                let term = ring.var(i).scale(c);
                delta
                    .entry((*j, *k))
                    .and_modify(|p| *p = p.add(&term))
                    .or_insert(term);
            }
        }
        for j in 0..n {
            for k in 0..n {
                let lhs = delta.get(&(j, k)).cloned().unwrap_or_else(|| ring.zero());
                let rhs = ring.var(j).mul(&ring.var(k));
                let eq = lhs.sub(&rhs);
                if !eq.is_zero() {
                    eqs.push(eq);
                }
            }
        }
        let mut eps = ring.zero();
        for i in 0..n {
            eps = eps.add(&ring.var(i).scale(&self.counit[i]));
        }
        eqs.push(eps.sub(&ring.one()));
        let ideal = Ideal::new(&ring, eqs);
        let sols = crate::solve::solve_zero_dim(&ideal).map_err(|e| match e {
            crate::polyring::PolyError::NonRationalPoint(d) => FdhopfError::NonRationalGrouplike(d),
            other => FdhopfError::Poly(other),
        })?;
        Ok(sols)
    }
}

#[derive(Debug, Clone)]
pub struct IntegralReport {
    pub left_integral: Vec<Scalar>,
    pub right_integral: Vec<Scalar>,
    pub is_semisimple: bool,
    pub is_cosemisimple: bool,
}

/// Hopf algebra of a finite group given by its multiplication table:
/// basis = group elements, Delta g = g (x) g, eps(g) = 1, S(g) = g^{-1}.
pub fn group_algebra(
    field: &crate::scalar::FieldDescriptor,
    table: &[Vec<usize>],
) -> Result<FDHopf, FdhopfError> {
    let n = table.len();
    for row in table {
        if row.len() != n || row.iter().any(|&x| x >= n) {
            return Err(FdhopfError::NotAGroup("malformed table".into()));
        }
    }
    // Identity element.
    let id = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| FdhopfError::NotAGroup("no identity".into()))?;
    // Associativity.
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(FdhopfError::NotAGroup(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
    }
    // Inverses.
    let mut inv = vec![None; n];
    for a in 0..n {
        for b in 0..n {
            if table[a][b] == id && table[b][a] == id {
                inv[a] = Some(b);
            }
        }
    }
    let inv: Vec<usize> = inv
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| FdhopfError::NotAGroup("missing inverse".into()))?;

    let one = Scalar::one(field);
    let mut mult = vec![vec![Vec::new(); n]; n];
    for a in 0..n {
        for b in 0..n {
            mult[a][b] = vec![(table[a][b], one.clone())];
        }
    }
    let mut unit = vec![Scalar::zero(field); n];
    unit[id] = one.clone();
    let labels: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
    let alg = FDAlgebra::new(field, labels, mult, unit);
    let comult = (0..n).map(|i| vec![(i, i, one.clone())]).collect();
    let counit = vec![one.clone(); n];
    let mut antipode = Mat::zeros(field, n, n);
    for a in 0..n {
        antipode.set(inv[a], a, one.clone());
    }
    let mut h = FDHopf::new(alg, comult, counit, antipode);
    h.coradical_filtration_length = Some(0);
    Ok(h)
}

/// The finite-dimensional Taft algebra T(n, q) = k<g, x : g^n = 1, x^n = 0,
/// x g = q g x> with g grouplike and x (1, g)-primitive; q must be a
/// primitive n-th root of unity.
pub fn taft_fd(n: usize, q: &Scalar) -> Result<FDHopf, FdhopfError> {
    taft_like(n, n, 1, q)
}

/// Generalized finite-dimensional Taft-type Hopf algebra on basis
/// {g^i x^j : 0 <= i < n, 0 <= j < np}, with x g = q g x and x
/// (1, g^t)-primitive; requires ord(q^t) = np so that x^np = 0 is a Hopf
/// relation.
pub fn taft_like(n: usize, np: usize, t: usize, q: &Scalar) -> Result<FDHopf, FdhopfError> {
    if n < 2 && np < 2 {
        return Err(FdhopfError::WrongOrder);
    }
    let field = q.field().clone();
    let qt = q.pow(t as u64);
    if qt.mult_order((np + 1) as u64) != Some(np as u64) {
        return Err(FdhopfError::WrongOrder);
    }
    let dim = n * np;
    let idx = |i: usize, j: usize| i * np + j;
    let one = Scalar::one(&field);

    // (g^i x^j)(g^k x^l) = q^{jk} g^{i+k} x^{j+l}, zero past x^np.
    let mut mult = vec![vec![Vec::new(); dim]; dim];
    for i in 0..n {
        for j in 0..np {
            for k in 0..n {
                for l in 0..np {
                    if j + l < np {
                        let c = q.pow((j * k) as u64);
                        mult[idx(i, j)][idx(k, l)] = vec![(idx((i + k) % n, j + l), c)];
                    }
                }
            }
        }
    }
    let mut unit = vec![Scalar::zero(&field); dim];
    unit[idx(0, 0)] = one.clone();
    let labels: Vec<String> = (0..n)
        .flat_map(|i| (0..np).map(move |j| format!("g^{i}x^{j}")))
        .collect();
    let alg = FDAlgebra::new(&field, labels, mult, unit);

    // Delta(g^i x^j) = (g (x) g)^i (x (x) 1 + g^t (x) x)^j, computed in the
    // tensor square.
    let mut comult: Vec<Vec<(usize, usize, Scalar)>> = Vec::with_capacity(dim);
    let delta_g: Tensor2 = [((idx(1, 0), idx(1, 0)), one.clone())].into_iter().collect();
    let delta_x: Tensor2 = [
        ((idx(0, 1), idx(0, 0)), one.clone()),
        ((idx(t % n, 0), idx(0, 1)), one.clone()),
    ]
    .into_iter()
    .collect();
    // Placeholder hopf to reuse tensor_mul (algebra only).
    let helper = FDHopf::new(
        alg.clone(),
        vec![Vec::new(); dim],
        vec![Scalar::zero(&field); dim],
        Mat::zeros(&field, dim, dim),
    );
    for i in 0..n {
        for j in 0..np {
            let mut acc: Tensor2 = [((idx(0, 0), idx(0, 0)), one.clone())].into_iter().collect();
            for _ in 0..i {
                acc = helper.tensor_mul(&acc, &delta_g);
            }
            for _ in 0..j {
                acc = helper.tensor_mul(&acc, &delta_x);
            }
            comult.push(acc.into_iter().map(|((a, b), c)| (a, b, c)).collect());
        }
    }
    let counit: Vec<Scalar> = (0..n)
        .flat_map(|_| {
            (0..np).map(|j| {
                if j == 0 {
                    Scalar::one(&field)
                } else {
                    Scalar::zero(&field)
                }
            })
        })
        .collect();
    // S(g) = g^{n-1}; S(x) = -g^{-t} x; S(g^i x^j) = S(x)^j S(g)^i.
    let sg = alg.basis_vec(idx(n - 1, 0));
    let sx = {
        let mut v = vec![Scalar::zero(&field); dim];
        v[idx((n - (t % n)) % n, 1)] = one.neg();
        v
    };
    let mut antipode = Mat::zeros(&field, dim, dim);
    for i in 0..n {
        for j in 0..np {
            let mut acc = alg.unit().to_vec();
            for _ in 0..j {
                acc = alg.mul_vec(&acc, &sx);
            }
            for _ in 0..i {
                acc = alg.mul_vec(&acc, &sg);
            }
            for (r, c) in acc.iter().enumerate() {
                antipode.set(r, idx(i, j), c.clone());
            }
        }
    }
    let mut h = FDHopf::new(alg, comult, counit, antipode);
    h.coradical_filtration_length = Some(np - 1);
    Ok(h)
}

/// Multiplication table of the cyclic group C_n.
pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// Multiplication table of the symmetric group S_3 (permutations of 0,1,2 in
/// lexicographic one-line order).
pub fn s3_table() -> Vec<Vec<usize>> {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
        // (p q)(x) = p(q(x))
        [p[q[0]], p[q[1]], p[q[2]]]
    };
    let index = |r: &[usize; 3]| perms.iter().position(|p| p == r).unwrap();
    perms
        .iter()
        .map(|p| perms.iter().map(|q| index(&compose(p, q))).collect())
        .collect()
}

/// Direct product of two group tables.
pub fn product_table(a: &[Vec<usize>], b: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let na = a.len();
    let nb = b.len();
    let idx = |i: usize, j: usize| i * nb + j;
    let mut out = vec![vec![0; na * nb]; na * nb];
    for i1 in 0..na {
        for j1 in 0..nb {
            for i2 in 0..na {
                for j2 in 0..nb {
                    out[idx(i1, j1)][idx(i2, j2)] = idx(a[i1][i2], b[j1][j2]);
                }
            }
        }
    }
    out
}

// ------------------------------------------------------------------
// JSON: the FDAlgebra format extended with comult/counit/antipode tensors.
// ------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct FDHopfJson {
    #[serde(flatten)]
    pub algebra: FDAlgebraJson,
    /// comult[i] = list of [j, k, coeff].
    pub comult: Vec<Vec<(usize, usize, ScalarJson)>>,
    pub counit: Vec<ScalarJson>,
    /// Antipode matrix, row-major.
    pub antipode: Vec<Vec<ScalarJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coradical_filtration_length: Option<usize>,
}

impl FDHopf {
    pub fn to_json(&self) -> FDHopfJson {
        let n = self.dim();
        FDHopfJson {
            algebra: self.alg.to_json(),
            comult: self
                .comult
                .iter()
                .map(|ts| ts.iter().map(|(j, k, c)| (*j, *k, c.to_json())).collect())
                .collect(),
            counit: self.counit.iter().map(|c| c.to_json()).collect(),
            antipode: (0..n)
                .map(|i| (0..n).map(|j| self.antipode.get(i, j).to_json()).collect())
                .collect(),
            coradical_filtration_length: self.coradical_filtration_length,
        }
    }

    pub fn from_json(j: &FDHopfJson) -> Result<FDHopf, FdhopfError> {
        let alg = FDAlgebra::from_json(&j.algebra)?;
        let field = alg.field().clone();
        let comult = j
            .comult
            .iter()
            .map(|ts| {
                ts.iter()
                    .map(|(a, b, c)| Ok((*a, *b, Scalar::from_json(c)?)))
                    .collect::<Result<Vec<_>, crate::scalar::ScalarError>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(crate::polyring::PolyError::Scalar)?;
        let counit = j
            .counit
            .iter()
            .map(Scalar::from_json)
            .collect::<Result<Vec<_>, _>>()
            .map_err(crate::polyring::PolyError::Scalar)?;
        let n = alg.dim();
        let mut antipode = Mat::zeros(&field, n, n);
        for (i, row) in j.antipode.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                antipode.set(
                    i,
                    k,
                    Scalar::from_json(c).map_err(crate::polyring::PolyError::Scalar)?,
                );
            }
        }
        let mut h = FDHopf::new(alg, comult, counit, antipode);
        h.coradical_filtration_length = j.coradical_filtration_length;
        Ok(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{make_field, primitive_root};

    #[test]
    fn group_algebra_c2_passes() {
        let f = make_field(0, 1).unwrap();
        let h = group_algebra(&f, &cyclic_group_table(2)).unwrap();
        assert!(h.verify_hopf_axioms().passed());
        let rep = h.integrals_and_semisimplicity().unwrap();
        assert!(rep.is_semisimple);
        // Both integrals are 1 + g up to scalar.
        let li = &rep.left_integral;
        assert_eq!(li[0], li[1]);
    }

    #[test]
    fn s3_group_algebra_passes() {
        let f = make_field(0, 1).unwrap();
        let h = group_algebra(&f, &s3_table()).unwrap();
        assert_eq!(h.dim(), 6);
        assert!(h.verify_hopf_axioms().passed());
        assert!(h.is_involutory());
    }

    #[test]
    fn broken_table_rejected() {
        let f = make_field(0, 1).unwrap();
        // Non-associative magma on 3 elements with an identity.
        let table = vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 1, 0]];
        match group_algebra(&f, &table) {
            Err(FdhopfError::NotAGroup(_)) => {}
            other => panic!("expected NotAGroup, got {other:?}"),
        }
    }

    #[test]
    fn sweedler_algebra() {
        let f = make_field(0, 1).unwrap();
        let q = Scalar::from_integer(&f, -1);
        let h = taft_fd(2, &q).unwrap();
        assert_eq!(h.dim(), 4);
        assert!(h.verify_hopf_axioms().passed());
        // S^2(x) = q x != x: not involutory.
        assert!(!h.is_involutory());
        let rep = h.integrals_and_semisimplicity().unwrap();
        assert!(!rep.is_semisimple);
        assert!(!rep.is_cosemisimple);
    }

    #[test]
    fn sweedler_with_corrupted_antipode_fails() {
        let f = make_field(0, 1).unwrap();
        let q = Scalar::from_integer(&f, -1);
        let h = taft_fd(2, &q).unwrap();
        let broken = FDHopf::new(
            h.algebra().clone(),
            (0..4).map(|i| h.comult_basis(i).to_vec()).collect(),
            (0..4).map(|i| h.counit_basis(i).clone()).collect(),
            Mat::identity(&f, 4),
        );
        match broken.verify_hopf_axioms() {
            HopfReport::Fail { axiom, .. } => assert!(axiom.contains("antipode")),
            HopfReport::Pass => panic!("corrupted antipode passed"),
        }
    }

    #[test]
    fn taft_wrong_order_rejected() {
        let f = make_field(0, 1).unwrap();
        let one = Scalar::one(&f);
        match taft_fd(2, &one) {
            Err(FdhopfError::WrongOrder) => {}
            other => panic!("expected WrongOrder, got {other:?}"),
        }
    }

    #[test]
    fn taft3_grouplikes() {
        let f = make_field(0, 3).unwrap();
        let q = primitive_root(&f, 3).unwrap();
        let h = taft_fd(3, &q).unwrap();
        assert_eq!(h.dim(), 9);
        assert!(h.verify_hopf_axioms().passed());
        let gls = h.grouplikes().unwrap();
        assert_eq!(gls.len(), 3); // 1, g, g^2
    }

    #[test]
    fn taft_integral() {
        // Integral of the Sweedler algebra: (1 + g) x, with eps = 0.
        let f = make_field(0, 1).unwrap();
        let q = Scalar::from_integer(&f, -1);
        let h = taft_fd(2, &q).unwrap();
        let rep = h.integrals_and_semisimplicity().unwrap();
        assert!(h.counit_vec(&rep.left_integral).is_zero());
    }

    #[test]
    fn dual_of_group_algebra() {
        let f = make_field(0, 3).unwrap();
        let h = group_algebra(&f, &cyclic_group_table(3)).unwrap();
        let d = h.dual();
        assert!(d.verify_hopf_axioms().passed());
        let rep = d.integrals_and_semisimplicity().unwrap();
        assert!(rep.is_semisimple);
        // Characters of C_3 are the grouplikes of the dual.
        let gls = d.grouplikes().unwrap();
        assert_eq!(gls.len(), 3);
    }

    #[test]
    fn double_dual_identity() {
        let f = make_field(0, 1).unwrap();
        let q = Scalar::from_integer(&f, -1);
        let h = taft_fd(2, &q).unwrap();
        let dd = h.dual().dual();
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                assert_eq!(h.algebra().mul_basis(i, j), dd.algebra().mul_basis(i, j));
            }
        }
    }

    #[test]
    fn dual_of_taft_checks() {
        let f = make_field(0, 3).unwrap();
        let q = primitive_root(&f, 3).unwrap();
        let h = taft_fd(3, &q).unwrap();
        let d = h.dual();
        assert!(d.verify_hopf_axioms().passed());
        assert_eq!(d.dim(), 9);
        let rep = d.integrals_and_semisimplicity().unwrap();
        assert!(!rep.is_semisimple);
        assert_eq!(d.grouplikes().unwrap().len(), 3);
    }

    #[test]
    fn maschke_modular() {
        let f = make_field(2, 1).unwrap();
        let h = group_algebra(&f, &cyclic_group_table(2)).unwrap();
        let rep = h.integrals_and_semisimplicity().unwrap();
        assert!(!rep.is_semisimple); // eps(1 + g) = 2 = 0 in F_2
    }

    #[test]
    fn grouplikes_of_group_algebra() {
        let f = make_field(0, 1).unwrap();
        let h = group_algebra(&f, &cyclic_group_table(2)).unwrap();
        let gls = h.grouplikes().unwrap();
        assert_eq!(gls.len(), 2);
        // Closed under multiplication and S, linearly independent.
        for g in &gls {
            let sg = h.antipode_vec(g);
            assert!(gls.contains(&sg));
        }
    }

    #[test]
    fn co_opposite_passes_axioms() {
        let f = make_field(0, 3).unwrap();
        let q = primitive_root(&f, 3).unwrap();
        let h = taft_fd(3, &q).unwrap();
        let cop = h.co_opposite();
        assert!(cop.verify_hopf_axioms().passed());
    }

    #[test]
    fn json_roundtrip() {
        let f = make_field(0, 1).unwrap();
        let q = Scalar::from_integer(&f, -1);
        let h = taft_fd(2, &q).unwrap();
        let j = serde_json::to_string(&h.to_json()).unwrap();
        let parsed: FDHopfJson = serde_json::from_str(&j).unwrap();
        let h2 = FDHopf::from_json(&parsed).unwrap();
        assert!(h2.verify_hopf_axioms().passed());
        assert_eq!(h2.coradical_filtration_length, Some(1));
    }
}
