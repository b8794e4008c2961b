//! Exact arithmetic over prime fields and their cyclotomic extensions.
//!
//! A [`FieldDescriptor`] fixes the coefficient field for everything else in
//! the crate: the rationals or a prime field, extended by a primitive n-th
//! root of unity. Over the rationals the reduction polynomial is the n-th
//! cyclotomic polynomial; over a prime field it is one irreducible factor of
//! it, found by exhaustive search (all factors share the same degree, the
//! multiplicative order of p modulo n). A [`Scalar`] is a coefficient vector
//! reduced modulo that polynomial. No floating point anywhere.

use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("characteristic {0} is neither 0 nor prime")]
    NonPrimeCharacteristic(u64),
    #[error("characteristic {0} divides cyclotomic order {1}")]
    CharacteristicDividesOrder(u64, u64),
    #[error("scalars belong to different field descriptors")]
    DescriptorMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("no primitive root of order {0} in a field with cyclotomic order {1}")]
    OrderNotAvailable(u64, u64),
}

/// One element of the prime field: an exact rational in characteristic 0,
/// a residue in characteristic p.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimeElem {
    Q(BigRational),
    F(u64),
}

impl PrimeElem {
    pub fn is_zero(&self) -> bool {
        match self {
            PrimeElem::Q(r) => r.is_zero(),
            PrimeElem::F(v) => *v == 0,
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Multiplicative order of p modulo n; this is the degree of every
/// irreducible factor of the n-th cyclotomic polynomial over F_p.
fn mult_order(p: u64, n: u64) -> u64 {
    let mut k = 1u64;
    let mut acc = p % n;
    while acc != 1 {
        acc = (acc as u128 * p as u128 % n as u128) as u64;
        k += 1;
    }
    k
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// n-th cyclotomic polynomial with integer coefficients, constant term first.
fn cyclotomic_int(n: u64) -> Vec<BigInt> {
    if n == 1 {
        return vec![BigInt::from(-1), BigInt::from(1)];
    }
    // x^n - 1 divided by Phi_d for every proper divisor d.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::from(1);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi = cyclotomic_int(d);
        num = int_poly_exact_div(&num, &phi);
    }
    num
}

/// Exact division of integer polynomials (monic divisor), constant term first.
fn int_poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut quo = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quo[i - dd] = c.clone();
        for j in 0..=dd {
            let t = &den[j] * &c;
            rem[i - dd + j] -= t;
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quo
}

#[derive(Debug)]
pub struct FieldInner {
    characteristic: u64,
    cyclotomic_order: u64,
    /// Monic reduction polynomial, constant term first, length = degree + 1.
    reduction: Vec<PrimeElem>,
}

/// Descriptor of the coefficient field Q(zeta_n) or F_p(zeta_n).
///
/// Cheap to clone; two descriptors are interchangeable iff they agree on
/// characteristic and cyclotomic order (the reduction polynomial is then
/// determined).
#[derive(Debug, Clone)]
pub struct FieldDescriptor(Arc<FieldInner>);

impl PartialEq for FieldDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.0.characteristic == other.0.characteristic
            && self.0.cyclotomic_order == other.0.cyclotomic_order
    }
}
impl Eq for FieldDescriptor {}

impl FieldDescriptor {
    pub fn characteristic(&self) -> u64 {
        self.0.characteristic
    }

    pub fn cyclotomic_order(&self) -> u64 {
        self.0.cyclotomic_order
    }

    /// Degree of the extension over the prime field.
    pub fn degree(&self) -> usize {
        self.0.reduction.len() - 1
    }

    pub fn reduction_poly(&self) -> &[PrimeElem] {
        &self.0.reduction
    }

    /// Number of elements, for finite fields only.
    pub fn field_size(&self) -> Option<u64> {
        if self.0.characteristic == 0 {
            return None;
        }
        let mut s = 1u64;
        for _ in 0..self.degree() {
            s = s.checked_mul(self.0.characteristic)?;
        }
        Some(s)
    }

    fn pe_zero(&self) -> PrimeElem {
        if self.0.characteristic == 0 {
            PrimeElem::Q(BigRational::zero())
        } else {
            PrimeElem::F(0)
        }
    }

    fn pe_one(&self) -> PrimeElem {
        if self.0.characteristic == 0 {
            PrimeElem::Q(BigRational::one())
        } else {
            PrimeElem::F(1)
        }
    }

    fn pe_add(&self, a: &PrimeElem, b: &PrimeElem) -> PrimeElem {
        match (a, b) {
            (PrimeElem::Q(x), PrimeElem::Q(y)) => PrimeElem::Q(x + y),
            (PrimeElem::F(x), PrimeElem::F(y)) => {
                PrimeElem::F(((*x as u128 + *y as u128) % self.0.characteristic as u128) as u64)
            }
            _ => unreachable!("mixed prime elements"),
        }
    }

    fn pe_neg(&self, a: &PrimeElem) -> PrimeElem {
        match a {
            PrimeElem::Q(x) => PrimeElem::Q(-x),
            PrimeElem::F(x) => PrimeElem::F(if *x == 0 {
                0
            } else {
                self.0.characteristic - x
            }),
        }
    }

    fn pe_sub(&self, a: &PrimeElem, b: &PrimeElem) -> PrimeElem {
        self.pe_add(a, &self.pe_neg(b))
    }

    fn pe_mul(&self, a: &PrimeElem, b: &PrimeElem) -> PrimeElem {
        match (a, b) {
            (PrimeElem::Q(x), PrimeElem::Q(y)) => PrimeElem::Q(x * y),
            (PrimeElem::F(x), PrimeElem::F(y)) => {
                PrimeElem::F(((*x as u128 * *y as u128) % self.0.characteristic as u128) as u64)
            }
            _ => unreachable!("mixed prime elements"),
        }
    }

    fn pe_inv(&self, a: &PrimeElem) -> Result<PrimeElem, ScalarError> {
        match a {
            PrimeElem::Q(x) => {
                if x.is_zero() {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(PrimeElem::Q(x.recip()))
                }
            }
            PrimeElem::F(x) => {
                if *x == 0 {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(PrimeElem::F(mod_pow(*x, self.0.characteristic - 2, self.0.characteristic)))
                }
            }
        }
    }
}

/// Construct the field descriptor for Q(zeta_n) (characteristic 0) or
/// F_p(zeta_n) (characteristic p, gcd(p, n) = 1).
pub fn make_field(characteristic: u64, cyclotomic_order: u64) -> Result<FieldDescriptor, ScalarError> {
    if characteristic != 0 && !is_prime(characteristic) {
        return Err(ScalarError::NonPrimeCharacteristic(characteristic));
    }
    let n = cyclotomic_order.max(1);
    if characteristic != 0 && n % characteristic == 0 {
        return Err(ScalarError::CharacteristicDividesOrder(characteristic, n));
    }
    let phi = cyclotomic_int(n);
    let reduction = if characteristic == 0 {
        phi.iter()
            .map(|c| PrimeElem::Q(BigRational::from_integer(c.clone())))
            .collect()
    } else {
        let p = characteristic;
        let phi_p: Vec<u64> = phi
            .iter()
            .map(|c| {
                let m = c.mod_floor(&BigInt::from(p));
                let (_, digits) = m.to_u64_digits();
                *digits.first().unwrap_or(&0)
            })
            .collect();
        irreducible_factor_mod_p(&phi_p, p, mult_order(p, n))
            .into_iter()
            .map(PrimeElem::F)
            .collect()
    };
    Ok(FieldDescriptor(Arc::new(FieldInner {
        characteristic,
        cyclotomic_order: n,
        reduction,
    })))
}

trait ModFloorExt {
    fn mod_floor(&self, m: &BigInt) -> BigInt;
}
impl ModFloorExt for BigInt {
    fn mod_floor(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

/// First (in coefficient-count order) monic degree-d divisor of `poly` over
/// F_p. Every irreducible factor of Phi_n over F_p has degree exactly d, so
/// any monic degree-d divisor is irreducible.
fn irreducible_factor_mod_p(poly: &[u64], p: u64, d: u64) -> Vec<u64> {
    let d = d as usize;
    if poly.len() - 1 == d {
        // Already irreducible; make monic (it is: cyclotomics are monic).
        return poly.to_vec();
    }
    let total = (p as u128).pow(d as u32);
    for k in 0..total {
        let mut cand = vec![0u64; d + 1];
        cand[d] = 1;
        let mut kk = k;
        for c in cand.iter_mut().take(d) {
            *c = (kk % p as u128) as u64;
            kk /= p as u128;
        }
        if divides_mod_p(poly, &cand, p) {
            return cand;
        }
    }
    unreachable!("cyclotomic polynomial has a factor of the expected degree");
}

fn divides_mod_p(num: &[u64], den: &[u64], p: u64) -> bool {
    let mut rem: Vec<u64> = num.to_vec();
    let dd = den.len() - 1;
    for i in (dd..rem.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        for j in 0..=dd {
            let t = (den[j] as u128 * c as u128) % p as u128;
            rem[i - dd + j] = ((rem[i - dd + j] as u128 + p as u128 * p as u128 - t)
                % p as u128) as u64;
        }
    }
    rem.iter().all(|c| *c == 0)
}

/// Exact element of the descriptor's field, stored reduced modulo the
/// reduction polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar {
    field: FieldDescriptor,
    /// Length = extension degree; coefficient of zeta^i at index i.
    coeffs: Vec<PrimeElem>,
}

impl Scalar {
    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn coeffs(&self) -> &[PrimeElem] {
        &self.coeffs
    }

    pub fn zero(field: &FieldDescriptor) -> Self {
        Scalar {
            field: field.clone(),
            coeffs: vec![field.pe_zero(); field.degree()],
        }
    }

    pub fn one(field: &FieldDescriptor) -> Self {
        let mut s = Self::zero(field);
        s.coeffs[0] = field.pe_one();
        s
    }

    pub fn from_integer(field: &FieldDescriptor, v: i64) -> Self {
        let mut s = Self::zero(field);
        s.coeffs[0] = if field.characteristic() == 0 {
            PrimeElem::Q(BigRational::from_integer(BigInt::from(v)))
        } else {
            let p = field.characteristic() as i128;
            PrimeElem::F(((v as i128).rem_euclid(p)) as u64)
        };
        s
    }

    pub fn from_rational(field: &FieldDescriptor, num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        if field.characteristic() == 0 {
            let mut s = Self::zero(field);
            s.coeffs[0] = PrimeElem::Q(BigRational::new(BigInt::from(num), BigInt::from(den)));
            s
        } else {
            let n = Self::from_integer(field, num);
            let d = Self::from_integer(field, den);
            n.mul(&d.inv().expect("denominator divisible by characteristic"))
        }
    }

    /// Build from an unreduced coefficient vector (any length).
    pub fn from_coeffs(field: &FieldDescriptor, mut coeffs: Vec<PrimeElem>) -> Self {
        let deg = field.degree();
        // Reduce modulo the monic reduction polynomial.
        while coeffs.len() > deg {
            let c = coeffs.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let k = coeffs.len() - deg;
            for j in 0..deg {
                let t = field.pe_mul(&field.reduction_poly()[j], &c);
                coeffs[k - 1 + j] = field.pe_sub(&coeffs[k - 1 + j], &t);
            }
        }
        coeffs.resize(deg, field.pe_zero());
        Scalar {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(&self.field)
    }

    fn check(&self, other: &Scalar) -> Result<(), ScalarError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(ScalarError::DescriptorMismatch)
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check(other).expect("descriptor mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.field.pe_add(a, b))
            .collect();
        Scalar {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| self.field.pe_neg(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check(other).expect("descriptor mismatch");
        let deg = self.field.degree();
        let mut prod = vec![self.field.pe_zero(); 2 * deg.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = self.field.pe_mul(a, b);
                prod[i + j] = self.field.pe_add(&prod[i + j], &t);
            }
        }
        Scalar::from_coeffs(&self.field, prod)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// reduction polynomial.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let f = &self.field;
        if f.degree() == 1 {
            let c = f.pe_inv(&self.coeffs[0])?;
            return Ok(Scalar {
                field: f.clone(),
                coeffs: vec![c],
            });
        }
        // Extended Euclid: r0 = reduction, r1 = self; track s with r = s*self mod reduction.
        let mut r0: Vec<PrimeElem> = f.reduction_poly().to_vec();
        let mut r1: Vec<PrimeElem> = trim(self.coeffs.clone());
        let mut s0: Vec<PrimeElem> = vec![];
        let mut s1: Vec<PrimeElem> = vec![f.pe_one()];
        while !r1.is_empty() {
            let (q, r) = pv_divmod(f, &r0, &r1);
            let s = pv_sub(f, &s0, &pv_mul(f, &q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 = gcd (a nonzero constant since the reduction is irreducible).
        debug_assert_eq!(r0.len(), 1);
        let c = f.pe_inv(&r0[0])?;
        let coeffs = s0.iter().map(|x| f.pe_mul(x, &c)).collect();
        Ok(Scalar::from_coeffs(f, coeffs))
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut acc = Scalar::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn pow_i(&self, e: i64) -> Result<Scalar, ScalarError> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow((-e) as u64))
        }
    }

    /// Multiplicative order, for torsion elements only (caps at `cap`).
    pub fn mult_order(&self, cap: u64) -> Option<u64> {
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_one() {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }
}

fn trim(mut v: Vec<PrimeElem>) -> Vec<PrimeElem> {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn pv_sub(f: &FieldDescriptor, a: &[PrimeElem], b: &[PrimeElem]) -> Vec<PrimeElem> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(|| f.pe_zero());
        let y = b.get(i).cloned().unwrap_or_else(|| f.pe_zero());
        out.push(f.pe_sub(&x, &y));
    }
    trim(out)
}

fn pv_mul(f: &FieldDescriptor, a: &[PrimeElem], b: &[PrimeElem]) -> Vec<PrimeElem> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![f.pe_zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let t = f.pe_mul(x, y);
            out[i + j] = f.pe_add(&out[i + j], &t);
        }
    }
    trim(out)
}

fn pv_divmod(f: &FieldDescriptor, num: &[PrimeElem], den: &[PrimeElem]) -> (Vec<PrimeElem>, Vec<PrimeElem>) {
    let mut rem = trim(num.to_vec());
    let den = trim(den.to_vec());
    let dd = den.len() - 1;
    let lead_inv = f.pe_inv(den.last().unwrap()).expect("zero divisor");
    let mut quo = vec![f.pe_zero(); rem.len().saturating_sub(dd)];
    while rem.len() > dd {
        let c = f.pe_mul(rem.last().unwrap(), &lead_inv);
        let k = rem.len() - 1 - dd;
        quo[k] = c.clone();
        for j in 0..=dd {
            let t = f.pe_mul(&den[j], &c);
            rem[k + j] = f.pe_sub(&rem[k + j], &t);
        }
        rem = trim(rem);
    }
    (trim(quo), rem)
}

/// Root of unity of multiplicative order exactly m; m must divide the
/// cyclotomic order.
pub fn primitive_root(field: &FieldDescriptor, m: u64) -> Result<Scalar, ScalarError> {
    let n = field.cyclotomic_order();
    if m == 0 || n % m != 0 {
        return Err(ScalarError::OrderNotAvailable(m, n));
    }
    let zeta = if field.degree() == 1 {
        // zeta is the root of the linear reduction polynomial: x + c -> -c.
        let c = field.pe_neg(&field.reduction_poly()[0]);
        Scalar {
            field: field.clone(),
            coeffs: vec![c],
        }
    } else {
        let mut s = Scalar::zero(field);
        s.coeffs[1] = field.pe_one();
        s
    };
    let root = zeta.pow(n / m);
    debug_assert_eq!(root.mult_order(m), Some(m));
    Ok(root)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = match c {
                PrimeElem::Q(r) => r.to_string(),
                PrimeElem::F(v) => v.to_string(),
            };
            if i == 0 {
                parts.push(cs);
            } else if i == 1 {
                parts.push(format!("{cs}*z"));
            } else {
                parts.push(format!("{cs}*z^{i}"));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

// ------------------------------------------------------------------
// JSON encoding: {"char": p, "order": n, "coeffs": [["num","den"], ...]}
// with decimal-string big integers.
// ------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct ScalarJson {
    pub char: u64,
    pub order: u64,
    pub coeffs: Vec<[String; 2]>,
}

impl Scalar {
    pub fn to_json(&self) -> ScalarJson {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| match c {
                PrimeElem::Q(r) => [r.numer().to_string(), r.denom().to_string()],
                PrimeElem::F(v) => [v.to_string(), "1".to_string()],
            })
            .collect();
        ScalarJson {
            char: self.field.characteristic(),
            order: self.field.cyclotomic_order(),
            coeffs,
        }
    }

    pub fn from_json(j: &ScalarJson) -> Result<Scalar, ScalarError> {
        let field = make_field(j.char, j.order)?;
        let coeffs = j
            .coeffs
            .iter()
            .map(|[num, den]| {
                if j.char == 0 {
                    let n: BigInt = num.parse().map_err(|_| ScalarError::DivisionByZero)?;
                    let d: BigInt = den.parse().map_err(|_| ScalarError::DivisionByZero)?;
                    if d.is_zero() {
                        return Err(ScalarError::DivisionByZero);
                    }
                    Ok(PrimeElem::Q(BigRational::new(n, d)))
                } else {
                    let v: u64 = num.parse().map_err(|_| ScalarError::DivisionByZero)?;
                    Ok(PrimeElem::F(v % j.char))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Scalar::from_coeffs(&field, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_field_rationals() {
        let q = make_field(0, 1).unwrap();
        assert_eq!(q.degree(), 1);
        assert_eq!(q.characteristic(), 0);
    }

    #[test]
    fn make_field_gaussian() {
        // Phi_4 = x^2 + 1
        let f = make_field(0, 4).unwrap();
        assert_eq!(f.degree(), 2);
        let red: Vec<_> = f.reduction_poly().to_vec();
        assert_eq!(
            red,
            vec![
                PrimeElem::Q(BigRational::one()),
                PrimeElem::Q(BigRational::zero()),
                PrimeElem::Q(BigRational::one())
            ]
        );
    }

    #[test]
    fn make_field_f4() {
        // Phi_3 = x^2 + x + 1 is irreducible over F_2, so F_2(zeta_3) = F_4.
        let f = make_field(2, 3).unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.field_size(), Some(4));
    }

    #[test]
    fn make_field_errors() {
        assert_eq!(
            make_field(4, 1).unwrap_err(),
            ScalarError::NonPrimeCharacteristic(4)
        );
        assert_eq!(
            make_field(3, 6).unwrap_err(),
            ScalarError::CharacteristicDividesOrder(3, 6)
        );
    }

    #[test]
    fn gaussian_i_squared() {
        let f = make_field(0, 4).unwrap();
        let i = primitive_root(&f, 4).unwrap();
        assert_eq!(i.mul(&i), Scalar::from_integer(&f, -1));
    }

    #[test]
    fn inverse_in_q_zeta3() {
        // (1 + zeta_3)^{-1} = -zeta_3 since zeta^2 = -1 - zeta.
        let f = make_field(0, 3).unwrap();
        let z = primitive_root(&f, 3).unwrap();
        let a = Scalar::one(&f).add(&z);
        assert_eq!(a.inv().unwrap(), z.neg());
    }

    #[test]
    fn inverse_in_f5() {
        let f = make_field(5, 1).unwrap();
        let three = Scalar::from_integer(&f, 3);
        assert_eq!(three.inv().unwrap(), Scalar::from_integer(&f, 2));
    }

    #[test]
    fn primitive_roots_in_q_zeta6() {
        let f = make_field(0, 6).unwrap();
        let z6 = primitive_root(&f, 6).unwrap();
        assert!(z6.pow(6).is_one());
        for k in 1..6 {
            assert!(!z6.pow(k).is_one(), "zeta_6^{k} = 1");
        }
        let m1 = primitive_root(&f, 2).unwrap();
        assert_eq!(m1, Scalar::from_integer(&f, -1));
        assert_eq!(
            primitive_root(&f, 4).unwrap_err(),
            ScalarError::OrderNotAvailable(4, 6)
        );
    }

    #[test]
    fn f5_with_fourth_roots() {
        // Phi_4 factors over F_5; the descriptor keeps one linear factor.
        let f = make_field(5, 4).unwrap();
        assert_eq!(f.degree(), 1);
        let i = primitive_root(&f, 4).unwrap();
        assert_eq!(i.mult_order(8), Some(4));
    }

    #[test]
    fn json_roundtrip() {
        let f = make_field(0, 3).unwrap();
        let z = primitive_root(&f, 3).unwrap();
        let a = z.mul(&Scalar::from_rational(&f, 7, 3)).add(&Scalar::one(&f));
        let j = a.to_json();
        let b = Scalar::from_json(&j).unwrap();
        assert_eq!(a, b);
        let s = serde_json::to_string(&j).unwrap();
        assert!(s.contains("\"coeffs\""));
    }

    #[test]
    fn division_by_zero_reported() {
        let f = make_field(0, 1).unwrap();
        assert_eq!(Scalar::zero(&f).inv().unwrap_err(), ScalarError::DivisionByZero);
    }
}
