//! Buchberger's algorithm, normal forms, and the ideal-theoretic toolkit
//! built on them: sums, products, intersection by elimination, membership,
//! finite-dimensional quotient bases, and Krull dimension.
//!
//! Monomial order is degree-reverse-lexicographic throughout, with a block
//! elimination order for intersections and a lexicographic order for the
//! triangular solver. Plain Buchberger with the sugar selection strategy;
//! bases are auto-reduced, monic, and cached publish-once per ideal.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::linalg::Mat;
use crate::polyring::{AffineAlgebra, Ideal, Poly, PolyRing};
use crate::scalar::{FieldDescriptor, Scalar};

pub(crate) type IMono = Vec<u32>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    DegRevLex,
    Lex,
    /// Block order eliminating the first `k` internal variables.
    Elim(usize),
}

fn total_deg(m: &[u32]) -> u64 {
    m.iter().map(|x| *x as u64).sum()
}

impl Order {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match self {
            Order::DegRevLex => degrevlex(a, b),
            Order::Lex => {
                for (x, y) in a.iter().zip(b) {
                    match x.cmp(y) {
                        Equal => continue,
                        o => return o,
                    }
                }
                Equal
            }
            Order::Elim(k) => match degrevlex(&a[..*k], &b[..*k]) {
                Equal => degrevlex(&a[*k..], &b[*k..]),
                o => o,
            },
        }
    }
}

fn degrevlex(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    use std::cmp::Ordering::*;
    match total_deg(a).cmp(&total_deg(b)) {
        Equal => {
            for j in (0..a.len()).rev() {
                match a[j].cmp(&b[j]) {
                    Equal => continue,
                    Less => return Greater,
                    Greater => return Less,
                }
            }
            Equal
        }
        o => o,
    }
}

fn mono_mul(a: &[u32], b: &[u32]) -> IMono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn mono_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn mono_div(a: &[u32], b: &[u32]) -> IMono {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn mono_lcm(a: &[u32], b: &[u32]) -> IMono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn mono_coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Internal polynomial: terms sorted strictly descending in the ambient
/// order, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IPoly {
    pub terms: Vec<(IMono, Scalar)>,
}

impl IPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &(IMono, Scalar) {
        &self.terms[0]
    }

    pub(crate) fn normalize(mut terms: Vec<(IMono, Scalar)>, order: Order) -> IPoly {
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        let mut out: Vec<(IMono, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = last.1.add(&c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        IPoly { terms: out }
    }

    fn monic(mut self) -> IPoly {
        if let Some((_, c)) = self.terms.first() {
            let inv = c.inv().expect("nonzero lead");
            if !inv.is_one() {
                for (_, k) in &mut self.terms {
                    *k = k.mul(&inv);
                }
            }
        }
        self
    }

    /// self - coeff * mono * other, re-normalized.
    fn sub_scaled(&self, coeff: &Scalar, mono: &[u32], other: &IPoly, order: Order) -> IPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            terms.push((mono_mul(mono, m), c.mul(coeff).neg()));
        }
        IPoly::normalize(terms, order)
    }

    fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| total_deg(m)).max().unwrap_or(0)
    }
}

/// Full normal form against a list of (monic) reducers.
pub(crate) fn normal_form(f: &IPoly, basis: &[IPoly], order: Order) -> IPoly {
    let mut work = f.clone();
    let mut result: Vec<(IMono, Scalar)> = Vec::new();
    'outer: while !work.is_zero() {
        let (lm, lc) = work.lead().clone();
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (gm, _) = g.lead();
            if mono_divides(gm, &lm) {
                let q = mono_div(&lm, gm);
                work = work.sub_scaled(&lc, &q, g, order);
                continue 'outer;
            }
        }
        result.push((lm, lc));
        work.terms.remove(0);
    }
    IPoly { terms: result }
}

fn s_poly(f: &IPoly, g: &IPoly, order: Order) -> IPoly {
    let (fm, fc) = f.lead();
    let (gm, gc) = g.lead();
    let l = mono_lcm(fm, gm);
    let a = IPoly {
        terms: f
            .terms
            .iter()
            .map(|(m, c)| (mono_mul(m, &mono_div(&l, fm)), c.mul(&fc.inv().unwrap())))
            .collect(),
    };
    let b_scale = gc.inv().unwrap();
    let mut terms = a.terms;
    for (m, c) in &g.terms {
        terms.push((mono_mul(m, &mono_div(&l, gm)), c.mul(&b_scale).neg()));
    }
    IPoly::normalize(terms, order)
}

/// Buchberger with the sugar selection strategy; returns the reduced basis,
/// monic, sorted ascending by lead monomial.
pub(crate) fn buchberger(gens: Vec<IPoly>, order: Order) -> Vec<IPoly> {
    let mut basis: Vec<IPoly> = gens
        .into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();
    let mut sugar: Vec<u64> = basis.iter().map(|g| g.total_degree()).collect();

    let mut pairs: Vec<(u64, IMono, usize, usize)> = Vec::new();
    let push_pairs = |pairs: &mut Vec<(u64, IMono, usize, usize)>,
                          basis: &[IPoly],
                          sugar: &[u64],
                          j: usize| {
        for i in 0..j {
            let (im, _) = basis[i].lead();
            let (jm, _) = basis[j].lead();
            let l = mono_lcm(im, jm);
            let s = (sugar[i] + total_deg(&mono_div(&l, im)))
                .max(sugar[j] + total_deg(&mono_div(&l, jm)));
            pairs.push((s, l, i, j));
        }
    };
    for j in 0..basis.len() {
        push_pairs(&mut pairs, &basis, &sugar, j);
    }

    while !pairs.is_empty() {
        // Sugar strategy: smallest sugar, ties broken by smallest lcm.
        let mut best = 0;
        for k in 1..pairs.len() {
            let (s, l, _, _) = &pairs[k];
            let (bs, bl, _, _) = &pairs[best];
            if s < bs || (s == bs && order.cmp(l, bl) == std::cmp::Ordering::Less) {
                best = k;
            }
        }
        let (pair_sugar, lcm, i, j) = pairs.swap_remove(best);
        let (im, _) = basis[i].lead();
        let (jm, _) = basis[j].lead();
        if mono_lcm(im, jm) != lcm {
            continue; // stale pair
        }
        if mono_coprime(im, jm) {
            continue; // product criterion
        }
        let s = s_poly(&basis[i], &basis[j], order);
        let h = normal_form(&s, &basis, order);
        if h.is_zero() {
            continue;
        }
        basis.push(h.monic());
        sugar.push(pair_sugar.max(basis.last().unwrap().total_degree()));
        let j = basis.len() - 1;
        push_pairs(&mut pairs, &basis, &sugar, j);
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (im, _) = basis[i].lead();
            let (jm, _) = basis[j].lead();
            if mono_divides(jm, im) && (jm != im || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<IPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    // Tail-reduce each element against the others.
    let mut reduced: Vec<IPoly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<IPoly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let r = normal_form(&minimal[i], &others, order);
        if !r.is_zero() {
            reduced.push(r.monic());
        }
    }
    reduced.sort_by(|a, b| order.cmp(&a.lead().0, &b.lead().0));
    reduced
}

/// A computed reduced Groebner basis together with its order.
#[derive(Debug)]
pub struct Gb {
    pub order: Order,
    pub polys: Vec<IPoly>,
    pub n_internal: usize,
}

impl Gb {
    pub fn nf(&self, f: &IPoly) -> IPoly {
        normal_form(f, &self.polys, self.order)
    }

    pub fn leads(&self) -> Vec<IMono> {
        self.polys.iter().map(|g| g.lead().0.clone()).collect()
    }
}

impl Ideal {
    fn internal_generators(&self) -> Vec<IPoly> {
        let order = Order::DegRevLex;
        let mut gens: Vec<IPoly> = self
            .generators()
            .iter()
            .map(|g| IPoly::normalize(g.to_internal(), order))
            .collect();
        for rel in self.ring().partner_relations() {
            gens.push(IPoly::normalize(rel, order));
        }
        gens
    }

    /// The cached reduced degrevlex Groebner basis (computed at most once;
    /// concurrent readers observe either absence or the completed basis).
    pub fn groebner(&self) -> Arc<Gb> {
        self.gb_cache
            .get_or_init(|| {
                Arc::new(Gb {
                    order: Order::DegRevLex,
                    polys: buchberger(self.internal_generators(), Order::DegRevLex),
                    n_internal: self.ring().n_internal(),
                })
            })
            .clone()
    }

    /// Groebner basis w.r.t. an explicit order (not cached).
    pub(crate) fn groebner_with(&self, order: Order) -> Gb {
        let gens = self
            .internal_generators()
            .into_iter()
            .map(|g| IPoly::normalize(g.terms, order))
            .collect();
        Gb {
            order,
            polys: buchberger(gens, order),
            n_internal: self.ring().n_internal(),
        }
    }

    /// Reduced basis as user-facing polynomials (partner relations omitted).
    pub fn reduced_basis(&self) -> Vec<Poly> {
        let gb = self.groebner();
        let partner_gb: Vec<IPoly> = self
            .ring()
            .partner_relations()
            .into_iter()
            .map(|r| IPoly::normalize(r, Order::DegRevLex))
            .collect();
        gb.polys
            .iter()
            .filter_map(|g| {
                let r = normal_form(g, &partner_gb, Order::DegRevLex);
                if r.is_zero() {
                    None
                } else {
                    Some(Poly::from_internal(self.ring(), &r.terms))
                }
            })
            .collect()
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        let gb = self.groebner();
        let nf = gb.nf(&IPoly::normalize(f.to_internal(), Order::DegRevLex));
        Poly::from_internal(self.ring(), &nf.terms)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    pub fn equals(&self, other: &Ideal) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.contains(&self.ring().one())
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        assert!(self.ring() == other.ring(), "ring mismatch");
        let mut gens = self.generators().to_vec();
        gens.extend(other.generators().iter().cloned());
        Ideal::new(self.ring(), gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        assert!(self.ring() == other.ring(), "ring mismatch");
        let mut gens = Vec::new();
        for f in self.generators() {
            for g in other.generators() {
                gens.push(f.mul(g));
            }
        }
        Ideal::new(self.ring(), gens)
    }

    pub fn power(&self, e: usize) -> Ideal {
        let mut acc = Ideal::new(self.ring(), vec![self.ring().one()]);
        for _ in 0..e {
            acc = acc.product(self);
        }
        acc
    }

    /// Intersection via elimination of a fresh variable t from
    /// t*I + (1-t)*J.
    pub fn intersection(&self, other: &Ideal) -> Ideal {
        assert!(self.ring() == other.ring(), "ring mismatch");
        let ring = self.ring();
        let n = ring.n_internal();
        let shift = |g: &IPoly, t_deg: u32| -> Vec<(IMono, Scalar)> {
            g.terms
                .iter()
                .map(|(m, c)| {
                    let mut e = Vec::with_capacity(n + 1);
                    e.push(t_deg);
                    e.extend_from_slice(m);
                    (e, c.clone())
                })
                .collect()
        };
        let order = Order::Elim(1);
        let mut gens: Vec<IPoly> = Vec::new();
        for g in self.internal_generators() {
            gens.push(IPoly::normalize(shift(&g, 1), order));
        }
        for g in other.internal_generators() {
            // (1 - t) * g
            let mut terms = shift(&g, 0);
            for (m, c) in shift(&g, 1) {
                terms.push((m, c.neg()));
            }
            gens.push(IPoly::normalize(terms, order));
        }
        let gb = buchberger(gens, order);
        let partner_gb: Vec<IPoly> = ring
            .partner_relations()
            .into_iter()
            .map(|r| IPoly::normalize(r, Order::DegRevLex))
            .collect();
        let mut out_gens = Vec::new();
        for g in gb {
            if g.terms.iter().any(|(m, _)| m[0] != 0) {
                continue;
            }
            let stripped: Vec<(IMono, Scalar)> = g
                .terms
                .iter()
                .map(|(m, c)| (m[1..].to_vec(), c.clone()))
                .collect();
            let r = normal_form(
                &IPoly::normalize(stripped, Order::DegRevLex),
                &partner_gb,
                Order::DegRevLex,
            );
            if !r.is_zero() {
                out_gens.push(Poly::from_internal(ring, &r.terms));
            }
        }
        Ideal::new(ring, out_gens)
    }
}

/// Monomial basis of a finite-dimensional quotient plus one multiplication
/// matrix per internal variable. The basis is the staircase complement of
/// the leading-term ideal, sorted ascending in degrevlex.
#[derive(Debug)]
pub struct FiniteData {
    pub basis: Vec<IMono>,
    pub index: BTreeMap<IMono, usize>,
    pub mult: Vec<Mat>,
}

impl FiniteData {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

impl AffineAlgebra {
    /// Quotient basis when finite ("infinite" is None), cached publish-once.
    pub fn finite_data(&self) -> Option<Arc<FiniteData>> {
        self.finite_cache
            .get_or_init(|| compute_finite_data(self).map(Arc::new))
            .clone()
    }

    pub fn dim(&self) -> Option<usize> {
        self.finite_data().map(|fd| fd.dim())
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        self.defining_ideal().normal_form(f)
    }

    /// Coordinates of f in the staircase basis (quotient must be finite).
    pub fn coords(&self, f: &Poly) -> Vec<Scalar> {
        let fd = self.finite_data().expect("finite quotient required");
        let gb = self.defining_ideal().groebner();
        let nf = gb.nf(&IPoly::normalize(f.to_internal(), Order::DegRevLex));
        let mut v = vec![Scalar::zero(self.ring().field()); fd.dim()];
        for (m, c) in nf.terms {
            let idx = *fd.index.get(&m).expect("normal-form monomial outside staircase");
            v[idx] = c;
        }
        v
    }

    /// The basis monomial of index i as a polynomial.
    pub fn basis_poly(&self, i: usize) -> Poly {
        let fd = self.finite_data().expect("finite quotient required");
        Poly::from_internal(
            self.ring(),
            &[(fd.basis[i].clone(), Scalar::one(self.ring().field()))],
        )
    }

    /// A polynomial with the given staircase coordinates.
    pub fn from_coords(&self, coords: &[Scalar]) -> Poly {
        let fd = self.finite_data().expect("finite quotient required");
        let terms: Vec<(IMono, Scalar)> = fd
            .basis
            .iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Poly::from_internal(self.ring(), &terms)
    }

    /// Krull dimension via maximal independent variable sets modulo the
    /// leading-term ideal.
    pub fn krull_dim(&self) -> usize {
        let gb = self.defining_ideal().groebner();
        let leads = gb.leads();
        if leads.iter().any(|m| total_deg(m) == 0) {
            return 0; // unit ideal
        }
        let n = self.ring().n_internal();
        let mut best = 0usize;
        for mask in 0u32..(1 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let independent = leads.iter().all(|m| {
                // Some variable of m outside the candidate set.
                m.iter()
                    .enumerate()
                    .any(|(i, e)| *e > 0 && mask & (1 << i) == 0)
            });
            if independent {
                best = size;
            }
        }
        best
    }
}

fn compute_finite_data(algebra: &AffineAlgebra) -> Option<FiniteData> {
    let gb = algebra.defining_ideal().groebner();
    let leads = gb.leads();
    if leads.iter().any(|m| total_deg(m) == 0) {
        // Unit ideal: zero-dimensional quotient of dimension 0.
        return Some(FiniteData {
            basis: vec![],
            index: BTreeMap::new(),
            mult: vec![],
        });
    }
    let n = algebra.ring().n_internal();
    // Finite iff every internal variable has a pure-power leading term.
    let mut bound = vec![None::<u32>; n];
    for m in &leads {
        let support: Vec<usize> = (0..n).filter(|i| m[*i] > 0).collect();
        if support.len() == 1 {
            let i = support[0];
            bound[i] = Some(bound[i].map_or(m[i], |b| b.min(m[i])));
        }
    }
    let bound: Option<Vec<u32>> = bound.into_iter().collect();
    let bound = bound?;

    // Enumerate the staircase.
    let mut basis: Vec<IMono> = Vec::new();
    let mut cur = vec![0u32; n];
    'enumerate: loop {
        if !leads.iter().any(|m| mono_divides(m, &cur)) {
            basis.push(cur.clone());
        }
        for i in 0..n {
            cur[i] += 1;
            if cur[i] < bound[i] {
                continue 'enumerate;
            }
            cur[i] = 0;
        }
        break;
    }
    basis.sort_by(|a, b| Order::DegRevLex.cmp(a, b));
    let index: BTreeMap<IMono, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();

    let field = algebra.ring().field();
    let dim = basis.len();
    let mut mult = Vec::with_capacity(n);
    for v in 0..n {
        let mut mat = Mat::zeros(field, dim, dim);
        for (j, m) in basis.iter().enumerate() {
            let mut shifted = m.clone();
            shifted[v] += 1;
            let nf = gb.nf(&IPoly {
                terms: vec![(shifted, Scalar::one(field))],
            });
            for (mm, c) in nf.terms {
                let i = *index.get(&mm).expect("normal form outside staircase");
                mat.set(i, j, c);
            }
        }
        mult.push(mat);
    }
    Some(FiniteData { basis, index, mult })
}

/// All monomials of the ring with total internal degree at most d, excluding
/// monomials where a Laurent variable meets its partner (those reduce).
/// Deterministic degrevlex-ascending order.
pub fn monomials_up_to_degree(ring: &PolyRing, d: u64) -> Vec<Poly> {
    let n = ring.n_internal();
    let mut out: Vec<IMono> = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(ring: &PolyRing, cur: &mut Vec<u32>, pos: usize, left: u64, out: &mut Vec<IMono>) {
        if pos == cur.len() {
            let mixed = (0..ring.n_vars()).any(|i| {
                ring.partner(i)
                    .map(|p| cur[i] > 0 && cur[p] > 0)
                    .unwrap_or(false)
            });
            if !mixed {
                out.push(cur.clone());
            }
            return;
        }
        for e in 0..=left {
            cur[pos] = e as u32;
            rec(ring, cur, pos + 1, left - e, out);
        }
        cur[pos] = 0;
    }
    rec(ring, &mut cur, 0, d, &mut out);
    out.sort_by(|a, b| Order::DegRevLex.cmp(a, b));
    out.into_iter()
        .map(|m| Poly::from_internal(ring, &[(m, Scalar::one(ring.field()))]))
        .collect()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{AffineAlgebra, Ideal, PolyRing};
    use crate::scalar::{make_field, Scalar};

    fn qring(vars: &[(&str, bool)]) -> PolyRing {
        let f = make_field(0, 1).unwrap();
        PolyRing::new(&f, vars)
    }

    #[test]
    fn gcd_of_univariates() {
        // <x^2 - 1, x^3 - 1> = <x - 1>
        let r = qring(&[("x", false)]);
        let x = r.var(0);
        let i = Ideal::new(
            &r,
            vec![x.pow(2).sub(&r.one()), x.pow(3).sub(&r.one())],
        );
        let basis = i.reduced_basis();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], x.sub(&r.one()));
    }

    #[test]
    fn zero_ideal() {
        let r = qring(&[("x", false)]);
        let i = Ideal::new(&r, vec![]);
        assert!(i.reduced_basis().is_empty());
        assert!(!i.is_unit_ideal());
    }

    #[test]
    fn linear_generators_already_reduced() {
        let r = qring(&[("u", false), ("v", false)]);
        let a = r.from_int(3);
        let i = Ideal::new(&r, vec![r.var(0).sub(&a), r.var(1)]);
        let basis = i.reduced_basis();
        assert_eq!(basis.len(), 2);
        assert!(i.contains(&r.var(0).sub(&r.from_int(3))));
        assert!(!i.contains(&r.var(0)));
    }

    #[test]
    fn intersection_of_comaximal() {
        // <u - 1> ∩ <u + 1> = <u^2 - 1>
        let r = qring(&[("u", false)]);
        let u = r.var(0);
        let i = Ideal::new(&r, vec![u.sub(&r.one())]);
        let j = Ideal::new(&r, vec![u.add(&r.one())]);
        let k = i.intersection(&j);
        let expected = Ideal::new(&r, vec![u.pow(2).sub(&r.one())]);
        assert!(k.equals(&expected));
    }

    #[test]
    fn unit_ideal_absorbs() {
        let r = qring(&[("u", false)]);
        let i = Ideal::new(&r, vec![r.var(0)]);
        let one = Ideal::new(&r, vec![r.one()]);
        assert!(i.sum(&one).is_unit_ideal());
    }

    #[test]
    fn membership_powers() {
        let r = qring(&[("u", false), ("v", false)]);
        let a = r.from_int(1);
        let v2 = r.var(1).pow(2);
        let i2 = Ideal::new(&r, vec![r.var(0).sub(&a), v2.clone()]);
        let i3 = Ideal::new(&r, vec![r.var(0).sub(&a), r.var(1).pow(3)]);
        assert!(i2.contains(&v2));
        assert!(!i3.contains(&v2));
    }

    #[test]
    fn quotient_basis_truncated() {
        // Q[u, v]/<u - 2, v^3>: dimension 3, basis {1, v, v^2}.
        let r = qring(&[("u", false), ("v", false)]);
        let i = Ideal::new(&r, vec![r.var(0).sub(&r.from_int(2)), r.var(1).pow(3)]);
        let alg = AffineAlgebra::new(&r, i);
        let fd = alg.finite_data().unwrap();
        assert_eq!(fd.dim(), 3);
        assert_eq!(fd.basis[0], vec![0, 0]);
        assert_eq!(fd.basis[1], vec![0, 1]);
        assert_eq!(fd.basis[2], vec![0, 2]);
    }

    #[test]
    fn quotient_infinite() {
        let r = qring(&[("u", false)]);
        let alg = AffineAlgebra::free(&r);
        assert!(alg.finite_data().is_none());
    }

    #[test]
    fn laurent_quotient() {
        // Q[x^{±1}]/<x^3 - 1>: dimension 3 (the partner is eliminated).
        let r = qring(&[("x", true)]);
        let i = Ideal::new(&r, vec![r.var(0).pow(3).sub(&r.one())]);
        let alg = AffineAlgebra::new(&r, i);
        assert_eq!(alg.dim(), Some(3));
    }

    #[test]
    fn krull_dims() {
        let r1 = qring(&[("x", true)]);
        assert_eq!(AffineAlgebra::free(&r1).krull_dim(), 1);

        let r2 = qring(&[("u", false), ("v", false)]);
        assert_eq!(AffineAlgebra::free(&r2).krull_dim(), 2);

        let i = Ideal::new(&r2, vec![r2.var(0).sub(&r2.one()), r2.var(1).pow(2)]);
        assert_eq!(AffineAlgebra::new(&r2, i).krull_dim(), 0);
    }

    #[test]
    fn generators_reduce_to_zero_against_basis() {
        let r = qring(&[("x", false), ("y", false)]);
        let g1 = r.var(0).pow(2).mul(&r.var(1)).sub(&r.one());
        let g2 = r.var(0).mul(&r.var(1).pow(2)).sub(&r.var(0));
        let i = Ideal::new(&r, vec![g1.clone(), g2.clone()]);
        assert!(i.contains(&g1));
        assert!(i.contains(&g2));
    }

    #[test]
    fn chinese_remainder_dimension_count() {
        // dim(A/(I ∩ J)) = dim(A/I) + dim(A/J) for comaximal zero-dim I, J.
        let r = qring(&[("u", false)]);
        let u = r.var(0);
        let i = Ideal::new(&r, vec![u.sub(&r.from_int(1)).mul(&u.sub(&r.from_int(2)))]);
        let j = Ideal::new(&r, vec![u.sub(&r.from_int(5))]);
        let meet = i.intersection(&j);
        let di = AffineAlgebra::new(&r, i).dim().unwrap();
        let dj = AffineAlgebra::new(&r, j).dim().unwrap();
        let dm = AffineAlgebra::new(&r, meet).dim().unwrap();
        assert_eq!(dm, di + dj);
    }

    #[test]
    fn normal_form_idempotent() {
        let r = qring(&[("x", false), ("y", false)]);
        let i = Ideal::new(&r, vec![r.var(0).pow(2).sub(&r.var(1))]);
        let f = r.var(0).pow(5).add(&r.var(1).pow(2).mul(&r.var(0)));
        let n1 = i.normal_form(&f);
        let n2 = i.normal_form(&n1);
        assert_eq!(n1, n2);
    }

    #[test]
    fn monomial_enumeration_skips_mixed() {
        let f = make_field(0, 1).unwrap();
        let r = PolyRing::new(&f, &[("x", true)]);
        let ms = monomials_up_to_degree(&r, 2);
        // 1, x, x^2, x^-1, x^-2 — but never x*x^.
        assert_eq!(ms.len(), 5);
        let _ = Scalar::one(&f);
    }
}
