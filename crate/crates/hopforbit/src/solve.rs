//! Zero-dimensional solving: triangular decomposition through lex Groebner
//! bases and exact root extraction inside the coefficient field.
//!
//! Root finding never leaves the field: over a finite field the elements are
//! enumerated; over Q the rational root theorem is applied after integer
//! factorization; over a proper cyclotomic extension the root's rational
//! coordinates are solved for as a zero-dimensional system over Q, which
//! recurses into the same machinery. Maximal ideals whose residue field is a
//! proper extension are reported with their degree, never dropped.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::groebner::{buchberger, IPoly, Order};
use crate::polyring::{AffineAlgebra, Ideal, Point, Poly, PolyError, PolyRing};
use crate::scalar::{make_field, FieldDescriptor, PrimeElem, Scalar};

/// Outcome of root extraction: distinct roots with multiplicities, plus the
/// degree of the unresolved (root-free) cofactor.
#[derive(Debug, Clone)]
pub struct RootReport {
    pub roots: Vec<(Scalar, usize)>,
    pub unresolved_degree: usize,
}

fn trim_poly(mut f: Vec<Scalar>) -> Vec<Scalar> {
    while f.last().map(|c| c.is_zero()).unwrap_or(false) {
        f.pop();
    }
    f
}

fn eval_poly(f: &[Scalar], x: &Scalar) -> Scalar {
    let field = x.field();
    let mut acc = Scalar::zero(field);
    for c in f.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// Synthetic division by (x - r); remainder must vanish.
fn deflate(f: &[Scalar], r: &Scalar) -> Vec<Scalar> {
    let field = r.field();
    let n = f.len();
    let mut q = vec![Scalar::zero(field); n - 1];
    let mut carry = Scalar::zero(field);
    for i in (0..n).rev() {
        let v = f[i].add(&carry);
        if i == 0 {
            debug_assert!(v.is_zero(), "deflation by a non-root");
        } else {
            q[i - 1] = v.clone();
            carry = v.mul(r);
        }
    }
    q
}

/// All roots of the dense univariate polynomial (constant term first) that
/// lie in the coefficient field.
pub fn univariate_roots(field: &FieldDescriptor, coeffs: &[Scalar]) -> Result<RootReport, PolyError> {
    let f = trim_poly(coeffs.to_vec());
    assert!(!f.is_empty(), "zero polynomial has every root");
    if f.len() == 1 {
        return Ok(RootReport {
            roots: vec![],
            unresolved_degree: 0,
        });
    }
    let candidates: Vec<Scalar> = if field.characteristic() > 0 {
        enumerate_field(field)
    } else if field.degree() == 1 {
        rational_candidates(&f)?
    } else {
        cyclotomic_roots(field, &f)?
    };

    let mut work = f;
    let mut roots = Vec::new();
    for r in candidates {
        let mut mult = 0usize;
        while work.len() > 1 && eval_poly(&work, &r).is_zero() {
            work = deflate(&work, &r);
            mult += 1;
        }
        if mult > 0 {
            roots.push((r, mult));
        }
    }
    Ok(RootReport {
        roots,
        unresolved_degree: work.len() - 1,
    })
}

fn enumerate_field(field: &FieldDescriptor) -> Vec<Scalar> {
    let p = field.characteristic();
    let d = field.degree();
    let size = field.field_size().expect("finite field");
    assert!(size <= 1 << 20, "field too large to enumerate");
    let mut out = Vec::with_capacity(size as usize);
    for k in 0..size {
        let mut kk = k;
        let mut coeffs = Vec::with_capacity(d);
        for _ in 0..d {
            coeffs.push(PrimeElem::F(kk % p));
            kk /= p;
        }
        out.push(Scalar::from_coeffs(field, coeffs));
    }
    out
}

/// Trial-division factorization; after removing all prime factors up to the
/// bound, any cofactor at most bound^2 is prime. Larger cofactors abort.
fn factor_int(mut n: BigInt) -> Result<Vec<(BigInt, u32)>, PolyError> {
    const BOUND: u64 = 2_000_000;
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    if n.is_negative() {
        n = -n;
    }
    let push = |p: BigInt, out: &mut Vec<(BigInt, u32)>| {
        if let Some(last) = out.last_mut() {
            if last.0 == p {
                last.1 += 1;
                return;
            }
        }
        out.push((p, 1));
    };
    let mut d = BigInt::from(2);
    while &d * &d <= n && d <= BigInt::from(BOUND) {
        while (&n % &d).is_zero() {
            n /= &d;
            push(d.clone(), &mut out);
        }
        d += 1;
    }
    if !n.is_one() {
        if n <= BigInt::from(BOUND) * BigInt::from(BOUND) {
            push(n, &mut out);
        } else {
            return Err(PolyError::SolveOverflow);
        }
    }
    Ok(out)
}

fn divisors_of(factors: &[(BigInt, u32)]) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
        for d in &out {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..*e {
                acc = &acc * p;
                next.push(acc.clone());
            }
        }
        out = next;
    }
    out.sort();
    out.dedup();
    out
}

/// Candidate rational roots p/q with p | a_0, q | a_lead, both signs,
/// after clearing denominators and stripping powers of x.
fn rational_candidates(f: &[Scalar]) -> Result<Vec<Scalar>, PolyError> {
    let field = f[0].field().clone();
    let rat = |s: &Scalar| -> BigRational {
        match &s.coeffs()[0] {
            PrimeElem::Q(r) => r.clone(),
            PrimeElem::F(_) => unreachable!(),
        }
    };
    let mut den_lcm = BigInt::one();
    for c in f {
        let r = rat(c);
        let d = r.denom();
        let g = num::integer::gcd(den_lcm.clone(), d.clone());
        den_lcm = den_lcm / g * d;
    }
    let ints: Vec<BigInt> = f.iter().map(|c| (rat(c) * BigRational::from_integer(den_lcm.clone())).to_integer()).collect();
    let mut lo = 0usize;
    while ints[lo].is_zero() {
        lo += 1;
    }
    let mut candidates = vec![Scalar::zero(&field)];
    if lo == ints.len() - 1 {
        return Ok(candidates); // pure power of x
    }
    let const_divs = divisors_of(&factor_int(ints[lo].clone())?);
    let lead_divs = divisors_of(&factor_int(ints.last().unwrap().clone())?);
    for p in &const_divs {
        for q in &lead_divs {
            for sign in [1i64, -1] {
                let r = BigRational::new(p.clone() * BigInt::from(sign), q.clone());
                let s = Scalar::from_coeffs(&field, vec![PrimeElem::Q(r)]);
                if !candidates.contains(&s) {
                    candidates.push(s);
                }
            }
        }
    }
    Ok(candidates)
}

/// Roots inside a proper cyclotomic extension K = Q(zeta): write the unknown
/// root in coordinates over Q and solve the resulting zero-dimensional
/// system over Q.
fn cyclotomic_roots(field: &FieldDescriptor, f: &[Scalar]) -> Result<Vec<Scalar>, PolyError> {
    let d = field.degree();
    let qfield = make_field(0, 1).expect("rationals");
    let names: Vec<String> = (0..d).map(|j| format!("a{j}")).collect();
    let specs: Vec<(&str, bool)> = names.iter().map(|n| (n.as_str(), false)).collect();
    let rq = PolyRing::new(&qfield, &specs);

    let to_q = |pe: &PrimeElem| -> Scalar {
        match pe {
            PrimeElem::Q(r) => Scalar::from_coeffs(&qfield, vec![PrimeElem::Q(r.clone())]),
            PrimeElem::F(_) => unreachable!(),
        }
    };
    // Reduction polynomial of K as rational constants in rq.
    let red: Vec<Poly> = field
        .reduction_poly()
        .iter()
        .map(|c| rq.constant(to_q(c)))
        .collect();

    // Elements of K ⊗ Q[a_0..a_{d-1}] as coordinate vectors of rq-polynomials.
    let kq_mul = |a: &[Poly], b: &[Poly]| -> Vec<Poly> {
        let mut conv = vec![rq.zero(); 2 * d - 1];
        for i in 0..d {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if b[j].is_zero() {
                    continue;
                }
                conv[i + j] = conv[i + j].add(&a[i].mul(&b[j]));
            }
        }
        for i in (d..2 * d - 1).rev() {
            let c = conv[i].clone();
            if c.is_zero() {
                continue;
            }
            conv[i] = rq.zero();
            for j in 0..d {
                conv[i - d + j] = conv[i - d + j].sub(&c.mul(&red[j]));
            }
        }
        conv.truncate(d);
        conv
    };

    let generic: Vec<Poly> = (0..d).map(|j| rq.var(j)).collect();
    let scalar_coords = |s: &Scalar| -> Vec<Poly> {
        s.coeffs().iter().map(|pe| rq.constant(to_q(pe))).collect()
    };

    // Horner evaluation of f at the generic element.
    let mut acc = scalar_coords(f.last().unwrap());
    for c in f.iter().rev().skip(1) {
        acc = kq_mul(&acc, &generic);
        let cc = scalar_coords(c);
        for j in 0..d {
            acc[j] = acc[j].add(&cc[j]);
        }
    }

    let system = Ideal::new(&rq, acc);
    let sols = solve_zero_dim(&system)?;
    let mut roots = Vec::new();
    for sol in sols {
        let coeffs: Vec<PrimeElem> = sol
            .iter()
            .map(|s| s.coeffs()[0].clone())
            .collect();
        roots.push(Scalar::from_coeffs(field, coeffs));
    }
    Ok(roots)
}

/// All coordinate tuples (over the internal variables, visible first) at
/// which every generator vanishes; requires a finite-dimensional quotient.
pub fn solve_zero_dim(ideal: &Ideal) -> Result<Vec<Vec<Scalar>>, PolyError> {
    let ring = ideal.ring();
    let field = ring.field().clone();
    // Zero-dimensionality precheck through the staircase.
    let probe = AffineAlgebra::new(ring, ideal.clone());
    let Some(fd) = probe.finite_data() else {
        return Err(PolyError::NotZeroDimensional);
    };
    if fd.dim() == 0 {
        return Ok(vec![]);
    }
    let gb = ideal.groebner_with(Order::Lex);
    let n = ring.n_internal();
    let sols = solve_rec(&field, gb.polys, n)?;
    // Keep only the visible coordinates.
    Ok(sols
        .into_iter()
        .map(|mut s| {
            s.truncate(ring.n_vars());
            s
        })
        .collect())
}

/// Points of an algebra cut out by an ideal containing its defining ideal.
pub fn points_of(algebra: &AffineAlgebra, ideal: &Ideal) -> Result<Vec<Point>, PolyError> {
    let combined = ideal.sum(algebra.defining_ideal());
    let sols = solve_zero_dim(&combined)?;
    sols.into_iter()
        .map(|coords| Point::new(algebra, coords))
        .collect()
}

fn solve_rec(
    field: &FieldDescriptor,
    gens: Vec<IPoly>,
    nvars: usize,
) -> Result<Vec<Vec<Scalar>>, PolyError> {
    if nvars == 0 {
        let consistent = gens.iter().all(|g| g.is_zero());
        return Ok(if consistent { vec![vec![]] } else { vec![] });
    }
    let basis = buchberger(gens, Order::Lex);
    if basis.iter().any(|g| g.terms.iter().all(|(m, _)| m.iter().all(|e| *e == 0))) {
        return Ok(vec![]); // unit ideal, no solutions
    }
    // Reduced lex basis of a zero-dimensional ideal contains a univariate
    // polynomial in the last variable.
    let last = nvars - 1;
    let mut uni: Option<Vec<Scalar>> = None;
    for g in &basis {
        if g
            .terms
            .iter()
            .all(|(m, _)| m.iter().take(last).all(|e| *e == 0))
        {
            let deg = g.terms.iter().map(|(m, _)| m[last]).max().unwrap() as usize;
            let mut dense = vec![Scalar::zero(field); deg + 1];
            for (m, c) in &g.terms {
                dense[m[last] as usize] = c.clone();
            }
            match &uni {
                Some(u) if u.len() <= dense.len() => {}
                _ => uni = Some(dense),
            }
        }
    }
    let Some(uni) = uni else {
        return Err(PolyError::NotZeroDimensional);
    };
    let report = univariate_roots(field, &uni)?;
    if report.unresolved_degree > 0 {
        return Err(PolyError::NonRationalPoint(report.unresolved_degree));
    }
    let mut out = Vec::new();
    for (root, _) in report.roots {
        // Substitute the root for the last variable.
        let substituted: Vec<IPoly> = basis
            .iter()
            .map(|g| {
                let terms: Vec<(Vec<u32>, Scalar)> = g
                    .terms
                    .iter()
                    .map(|(m, c)| {
                        let e = m[last];
                        let mm = m[..last].to_vec();
                        (mm, c.mul(&root.pow(e as u64)))
                    })
                    .collect();
                IPoly::normalize(terms, Order::Lex)
            })
            .collect();
        for mut sol in solve_rec(field, substituted, last)? {
            sol.push(root.clone());
            out.push(sol);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::primitive_root;

    fn qring(vars: &[(&str, bool)]) -> PolyRing {
        let f = make_field(0, 1).unwrap();
        PolyRing::new(&f, vars)
    }

    #[test]
    fn split_quadratic() {
        let r = qring(&[("u", false)]);
        let u = r.var(0);
        let i = Ideal::new(&r, vec![u.pow(2).sub(&r.one())]);
        let mut sols = solve_zero_dim(&i).unwrap();
        sols.sort_by_key(|s| format!("{}", s[0].clone()));
        assert_eq!(sols.len(), 2);
    }

    #[test]
    fn nilpotent_single_point() {
        let r = qring(&[("u", false), ("v", false)]);
        let a = r.from_int(3);
        let i = Ideal::new(&r, vec![r.var(0).sub(&a), r.var(1).pow(4)]);
        let sols = solve_zero_dim(&i).unwrap();
        assert_eq!(sols.len(), 1);
        let f = make_field(0, 1).unwrap();
        assert_eq!(sols[0][0], Scalar::from_integer(&f, 3));
        assert!(sols[0][1].is_zero());
    }

    #[test]
    fn irrational_reported_with_degree() {
        let r = qring(&[("u", false)]);
        let i = Ideal::new(&r, vec![r.var(0).pow(2).sub(&r.from_int(2))]);
        match solve_zero_dim(&i) {
            Err(PolyError::NonRationalPoint(2)) => {}
            other => panic!("expected NonRationalPoint(2), got {other:?}"),
        }
    }

    #[test]
    fn cyclotomic_split() {
        // x^3 - 1 over Q(zeta_3) has three roots.
        let f = make_field(0, 3).unwrap();
        let r = PolyRing::new(&f, &[("x", true)]);
        let i = Ideal::new(&r, vec![r.var(0).pow(3).sub(&r.one())]);
        let sols = solve_zero_dim(&i).unwrap();
        assert_eq!(sols.len(), 3);
        let z = primitive_root(&f, 3).unwrap();
        let values: Vec<Scalar> = sols.iter().map(|s| s[0].clone()).collect();
        assert!(values.contains(&Scalar::one(&f)));
        assert!(values.contains(&z));
        assert!(values.contains(&z.pow(2)));
    }

    #[test]
    fn triangular_back_substitution() {
        // <u^2 - 1, v - u> has points (1,1), (-1,-1).
        let r = qring(&[("u", false), ("v", false)]);
        let u = r.var(0);
        let v = r.var(1);
        let i = Ideal::new(&r, vec![u.pow(2).sub(&r.one()), v.sub(&u)]);
        let sols = solve_zero_dim(&i).unwrap();
        assert_eq!(sols.len(), 2);
        for s in &sols {
            assert_eq!(s[0], s[1]);
        }
    }

    #[test]
    fn finite_field_roots() {
        let f = make_field(5, 1).unwrap();
        let r = PolyRing::new(&f, &[("x", false)]);
        // x^2 + 1 over F_5: roots 2, 3.
        let i = Ideal::new(&r, vec![r.var(0).pow(2).add(&r.one())]);
        let sols = solve_zero_dim(&i).unwrap();
        assert_eq!(sols.len(), 2);
    }

    #[test]
    fn rational_root_with_denominator() {
        let r = qring(&[("x", false)]);
        // 2x - 3 has root 3/2.
        let i = Ideal::new(&r, vec![r.var(0).scale(&Scalar::from_integer(r.field(), 2)).sub(&r.from_int(3))]);
        let sols = solve_zero_dim(&i).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0][0], Scalar::from_rational(r.field(), 3, 2));
    }

    #[test]
    fn roots_in_gaussian_field() {
        // x^2 + 1 over Q(i): roots ±i found through the coordinate system.
        let f = make_field(0, 4).unwrap();
        let i = primitive_root(&f, 4).unwrap();
        let coeffs = vec![Scalar::one(&f), Scalar::zero(&f), Scalar::one(&f)];
        let rep = univariate_roots(&f, &coeffs).unwrap();
        assert_eq!(rep.unresolved_degree, 0);
        let roots: Vec<Scalar> = rep.roots.iter().map(|(r, _)| r.clone()).collect();
        assert!(roots.contains(&i));
        assert!(roots.contains(&i.neg()));
    }
}
