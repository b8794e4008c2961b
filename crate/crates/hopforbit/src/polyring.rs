//! Multivariate polynomial arithmetic over [`Scalar`], with Laurent
//! (invertible) variables.
//!
//! A Laurent variable `x` is stored with integer exponents of either sign in
//! user-facing polynomials. For ideal-theoretic work every Laurent variable
//! contributes a hidden partner variable `x^` and the relation `x*x^ - 1` to
//! every ideal formed in the ring; the Groebner engine (see
//! [`crate::groebner`]) works over that internal presentation with
//! nonnegative exponents only.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groebner::{FiniteData, Gb};
use crate::scalar::{FieldDescriptor, Scalar, ScalarError, ScalarJson};

#[derive(Debug, Clone, Error)]
pub enum PolyError {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("maximal ideal with residue field of degree {0} over the coefficient field")]
    NonRationalPoint(usize),
    #[error("integer factorization bailed out while hunting rational roots")]
    SolveOverflow,
    #[error("quotient is not finite dimensional")]
    NotZeroDimensional,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug)]
pub struct RingInner {
    field: FieldDescriptor,
    vars: Vec<String>,
    laurent: Vec<bool>,
    /// partner[i] = internal index of the inverse variable for Laurent var i.
    partner: Vec<Option<usize>>,
    n_internal: usize,
}

/// A commutative polynomial ring, possibly with Laurent variables, over a
/// fixed coefficient field. Cheap to clone.
#[derive(Debug, Clone)]
pub struct PolyRing(Arc<RingInner>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field
                && self.0.vars == other.0.vars
                && self.0.laurent == other.0.laurent)
    }
}
impl Eq for PolyRing {}

impl PolyRing {
    pub fn new(field: &FieldDescriptor, vars: &[(&str, bool)]) -> Self {
        let names: Vec<String> = vars.iter().map(|(n, _)| n.to_string()).collect();
        let laurent: Vec<bool> = vars.iter().map(|(_, l)| *l).collect();
        let mut partner = vec![None; names.len()];
        let mut next = names.len();
        for (i, l) in laurent.iter().enumerate() {
            if *l {
                partner[i] = Some(next);
                next += 1;
            }
        }
        PolyRing(Arc::new(RingInner {
            field: field.clone(),
            vars: names,
            laurent,
            partner,
            n_internal: next,
        }))
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.0.field
    }

    pub fn n_vars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.vars
    }

    pub fn is_laurent(&self, i: usize) -> bool {
        self.0.laurent[i]
    }

    pub(crate) fn n_internal(&self) -> usize {
        self.0.n_internal
    }

    pub(crate) fn partner(&self, i: usize) -> Option<usize> {
        self.0.partner[i]
    }

    /// The relations x * x^ - 1 adjoined to every ideal of this ring.
    pub(crate) fn partner_relations(&self) -> Vec<Vec<(Vec<u32>, Scalar)>> {
        let mut out = Vec::new();
        for i in 0..self.n_vars() {
            if let Some(p) = self.0.partner[i] {
                let mut m = vec![0u32; self.n_internal()];
                m[i] = 1;
                m[p] = 1;
                out.push(vec![
                    (m, Scalar::one(self.field())),
                    (vec![0; self.n_internal()], Scalar::one(self.field()).neg()),
                ]);
            }
        }
        out
    }

    pub fn zero(&self) -> Poly {
        Poly {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(&self, c: Scalar) -> Poly {
        let mut p = self.zero();
        if !c.is_zero() {
            p.terms.insert(vec![0; self.n_vars()], c);
        }
        p
    }

    pub fn one(&self) -> Poly {
        self.constant(Scalar::one(self.field()))
    }

    pub fn from_int(&self, v: i64) -> Poly {
        self.constant(Scalar::from_integer(self.field(), v))
    }

    pub fn var(&self, i: usize) -> Poly {
        self.var_pow(i, 1)
    }

    pub fn var_pow(&self, i: usize, e: i64) -> Poly {
        assert!(e >= 0 || self.is_laurent(i), "negative power of a non-Laurent variable");
        let mut exps = vec![0i64; self.n_vars()];
        exps[i] = e;
        self.monomial(exps, Scalar::one(self.field()))
    }

    pub fn monomial(&self, exps: Vec<i64>, coeff: Scalar) -> Poly {
        assert_eq!(exps.len(), self.n_vars());
        for (i, e) in exps.iter().enumerate() {
            assert!(*e >= 0 || self.is_laurent(i), "negative exponent on non-Laurent variable");
        }
        let mut p = self.zero();
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }
}

/// Exact multivariate (Laurent) polynomial: a finite map exponent vector ->
/// nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    ring: PolyRing,
    terms: BTreeMap<Vec<i64>, Scalar>,
}

impl Poly {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Scalar)> {
        self.terms.iter()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|x| *x == 0))
    }

    pub fn constant_coeff(&self) -> Scalar {
        self.terms
            .get(&vec![0i64; self.ring.n_vars()])
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.ring.field()))
    }

    /// Total degree counted with absolute values of Laurent exponents.
    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|x| x.abs()).sum::<i64>())
            .max()
            .unwrap_or(0)
    }

    fn check(&self, other: &Poly) -> Result<(), PolyError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check(other).expect("ring mismatch");
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(|| Scalar::zero(self.ring.field()));
            *entry = entry.add(c);
        }
        terms.retain(|_, c| !c.is_zero());
        Poly {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k.mul(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check(other).expect("ring mismatch");
        let mut terms: BTreeMap<Vec<i64>, Scalar> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let c = c1.mul(c2);
                let entry = terms.entry(e).or_insert_with(|| Scalar::zero(self.ring.field()));
                *entry = entry.add(&c);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Poly {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, e: u64) -> Poly {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Inverse of a single-term unit (Laurent monomial); None otherwise.
    pub fn term_inverse(&self) -> Option<Poly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        for (i, x) in e.iter().enumerate() {
            if *x != 0 && !self.ring.is_laurent(i) {
                return None;
            }
        }
        let inv = c.inv().ok()?;
        Some(self.ring.monomial(e.iter().map(|x| -x).collect(), inv))
    }

    /// Algebra homomorphism determined by images of the variables. Images of
    /// Laurent variables must be invertible single-term units.
    pub fn map_vars(&self, target: &PolyRing, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.ring.n_vars());
        let mut out = target.zero();
        for (e, c) in &self.terms {
            let mut term = target.constant(c.clone());
            for (i, x) in e.iter().enumerate() {
                if *x == 0 {
                    continue;
                }
                let img = if *x > 0 {
                    images[i].pow(*x as u64)
                } else {
                    images[i]
                        .term_inverse()
                        .expect("negative power of a non-unit image")
                        .pow((-x) as u64)
                };
                term = term.mul(&img);
            }
            out = out.add(&term);
        }
        out
    }

    pub fn eval(&self, coords: &[Scalar]) -> Scalar {
        assert_eq!(coords.len(), self.ring.n_vars());
        let field = self.ring.field();
        let mut acc = Scalar::zero(field);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in e.iter().enumerate() {
                if *x != 0 {
                    t = t.mul(&coords[i].pow_i(*x).expect("zero coordinate on Laurent variable"));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Internal representation: nonnegative exponents over visible variables
    /// followed by Laurent partners.
    pub(crate) fn to_internal(&self) -> Vec<(Vec<u32>, Scalar)> {
        let n = self.ring.n_internal();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut m = vec![0u32; n];
                for (i, x) in e.iter().enumerate() {
                    if *x >= 0 {
                        m[i] = *x as u32;
                    } else {
                        m[self.ring.partner(i).expect("negative exponent")] = (-x) as u32;
                    }
                }
                (m, c.clone())
            })
            .collect()
    }

    /// Back-conversion; valid for internal monomials in which a Laurent
    /// variable and its partner are never simultaneously positive.
    pub(crate) fn from_internal(ring: &PolyRing, terms: &[(Vec<u32>, Scalar)]) -> Poly {
        let mut out = ring.zero();
        for (m, c) in terms {
            let mut e = vec![0i64; ring.n_vars()];
            for i in 0..ring.n_vars() {
                let pos = m[i] as i64;
                let neg = ring.partner(i).map(|p| m[p] as i64).unwrap_or(0);
                assert!(
                    pos == 0 || neg == 0,
                    "mixed Laurent monomial escaping the Groebner engine"
                );
                e[i] = pos - neg;
            }
            out = out.add(&ring.monomial(e, c.clone()));
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut factors = Vec::new();
                for (i, x) in e.iter().enumerate() {
                    match *x {
                        0 => {}
                        1 => factors.push(self.ring.var_names()[i].clone()),
                        _ => factors.push(format!("{}^{}", self.ring.var_names()[i], x)),
                    }
                }
                if factors.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", factors.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// An ideal in a [`PolyRing`], with a publish-once cached reduced Groebner
/// basis (degrevlex over the internal variables).
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: PolyRing,
    generators: Vec<Poly>,
    pub(crate) gb_cache: Arc<OnceLock<Arc<Gb>>>,
}

impl Ideal {
    pub fn new(ring: &PolyRing, generators: Vec<Poly>) -> Self {
        for g in &generators {
            assert!(*g.ring() == *ring, "generator from a foreign ring");
        }
        Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            gb_cache: Arc::new(OnceLock::new()),
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }
}

/// A commutative affine algebra presented as a polynomial quotient.
#[derive(Debug, Clone)]
pub struct AffineAlgebra {
    ring: PolyRing,
    ideal: Ideal,
    pub(crate) finite_cache: Arc<OnceLock<Option<Arc<FiniteData>>>>,
}

impl AffineAlgebra {
    pub fn new(ring: &PolyRing, ideal: Ideal) -> Self {
        assert!(*ideal.ring() == *ring);
        AffineAlgebra {
            ring: ring.clone(),
            ideal,
            finite_cache: Arc::new(OnceLock::new()),
        }
    }

    pub fn free(ring: &PolyRing) -> Self {
        Self::new(ring, Ideal::new(ring, vec![]))
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn defining_ideal(&self) -> &Ideal {
        &self.ideal
    }
}

/// A rational point of an affine algebra: one coordinate per visible
/// variable, every defining relation vanishing there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub coords: Vec<Scalar>,
}

impl Point {
    pub fn new(algebra: &AffineAlgebra, coords: Vec<Scalar>) -> Result<Self, PolyError> {
        let ring = algebra.ring();
        assert_eq!(coords.len(), ring.n_vars());
        for i in 0..ring.n_vars() {
            if ring.is_laurent(i) && coords[i].is_zero() {
                return Err(PolyError::Scalar(ScalarError::DivisionByZero));
            }
        }
        for g in algebra.defining_ideal().generators() {
            if !g.eval(&coords).is_zero() {
                return Err(PolyError::RingMismatch);
            }
        }
        Ok(Point { coords })
    }

    /// The maximal ideal <x_i - c_i> of this point, inside the ambient ring.
    pub fn maximal_ideal(&self, algebra: &AffineAlgebra) -> Ideal {
        let ring = algebra.ring();
        let mut gens: Vec<Poly> = (0..ring.n_vars())
            .map(|i| ring.var(i).sub(&ring.constant(self.coords[i].clone())))
            .collect();
        gens.extend(algebra.defining_ideal().generators().iter().cloned());
        Ideal::new(ring, gens)
    }
}

// ------------------------------------------------------------------
// JSON: polynomials as lists of {"exps": [...], "coeff": Scalar};
// ideals as generator lists; points as coordinate arrays.
// ------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<i64>,
    pub coeff: ScalarJson,
}

impl Poly {
    pub fn to_json(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(e, c)| TermJson {
                exps: e.clone(),
                coeff: c.to_json(),
            })
            .collect()
    }

    pub fn from_json(ring: &PolyRing, terms: &[TermJson]) -> Result<Poly, PolyError> {
        let mut p = ring.zero();
        for t in terms {
            let c = Scalar::from_json(&t.coeff)?;
            p = p.add(&ring.monomial(t.exps.clone(), c));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::make_field;

    #[test]
    fn laurent_arithmetic() {
        let f = make_field(0, 1).unwrap();
        let r = PolyRing::new(&f, &[("x", true)]);
        let x = r.var(0);
        let xinv = r.var_pow(0, -1);
        assert_eq!(x.mul(&xinv), r.one());
        let p = x.add(&xinv);
        assert_eq!(p.total_degree(), 1);
        assert_eq!(p.mul(&p).n_terms(), 3); // x^2 + 2 + x^-2
    }

    #[test]
    fn map_vars_homomorphism() {
        let f = make_field(0, 1).unwrap();
        let r = PolyRing::new(&f, &[("u", false), ("v", false)]);
        let s = PolyRing::new(&f, &[("t", false)]);
        let t = s.var(0);
        let p = r.var(0).mul(&r.var(1)).add(&r.one()); // uv + 1
        let q = p.map_vars(&s, &[t.clone(), t.clone()]); // t^2 + 1
        assert_eq!(q, t.mul(&t).add(&s.one()));
    }

    #[test]
    fn eval_with_negative_exponent() {
        let f = make_field(0, 1).unwrap();
        let r = PolyRing::new(&f, &[("x", true)]);
        let p = r.var_pow(0, -2);
        let two = Scalar::from_integer(&f, 2);
        assert_eq!(p.eval(&[two]), Scalar::from_rational(&f, 1, 4));
    }

    #[test]
    fn point_checks_relations() {
        let f = make_field(0, 1).unwrap();
        let r = PolyRing::new(&f, &[("u", false)]);
        let ideal = Ideal::new(&r, vec![r.var(0).mul(&r.var(0)).sub(&r.one())]);
        let a = AffineAlgebra::new(&r, ideal);
        assert!(Point::new(&a, vec![Scalar::from_integer(&f, 1)]).is_ok());
        assert!(Point::new(&a, vec![Scalar::from_integer(&f, 2)]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let f = make_field(0, 4).unwrap();
        let r = PolyRing::new(&f, &[("x", true), ("y", false)]);
        let i = crate::scalar::primitive_root(&f, 4).unwrap();
        let p = r
            .monomial(vec![-2, 1], i)
            .add(&r.from_int(3));
        let j = p.to_json();
        let q = Poly::from_json(&r, &j).unwrap();
        assert_eq!(p, q);
    }
}
