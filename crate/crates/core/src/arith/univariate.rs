//! Integer and rational univariate polynomials: content, gcds, squarefree
//! decomposition, modular inverses and exact evaluation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::coeff::{int_bitsize, rat_bitsize};
use super::poly::Poly;
use crate::error::{Error, Result};

pub type UniPolyZ = Poly<BigInt>;
pub type UniPolyQ = Poly<BigRational>;
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn zpoly(coeffs: &[i64]) -> UniPolyZ {
    Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

pub fn qpoly(coeffs: &[i64]) -> UniPolyQ {
    Poly::new(coeffs.iter().map(|&c| int(c)).collect())
}

pub fn to_q(p: &UniPolyZ) -> UniPolyQ {
    p.map(|c| BigRational::from_integer(c.clone()))
}

/// Scalar `s > 0` (or `< 0` when `normalize_sign` and the leading coefficient
/// is negative) such that `s * coeffs` are coprime integers.
pub(crate) fn content_scale<'a>(
    coeffs: impl Iterator<Item = &'a BigRational>,
    lead: Option<&BigRational>,
    normalize_sign: bool,
) -> BigRational {
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = g.gcd(c.numer());
        l = l.lcm(c.denom());
    }
    if g.is_zero() {
        return BigRational::one();
    }
    let s = BigRational::new(l, g);
    match lead {
        Some(lc) if normalize_sign && lc.is_negative() => -s,
        _ => s,
    }
}

/// Primitive part of a rational polynomial: divide by the gcd of the
/// numerators, multiply by the lcm of the denominators, then flip the sign so
/// the leading coefficient is positive.
pub fn primitive_part_q(f: &UniPolyQ) -> Result<UniPolyZ> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("primitive_part"));
    }
    let s = content_scale(f.coeffs().iter(), f.lc(), true);
    Ok(f.map(|c| (c * &s).to_integer()))
}

/// Primitive part that only ever scales by a positive rational, so signs of
/// values are preserved.
pub fn primitive_part_keep_sign(f: &UniPolyQ) -> UniPolyZ {
    if f.is_zero() {
        return Poly::zero();
    }
    let s = content_scale(f.coeffs().iter(), None, false);
    f.map(|c| (c * &s).to_integer())
}

pub fn content_z(f: &UniPolyZ) -> BigInt {
    f.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Integer primitive part with positive leading coefficient. Zero maps to zero.
pub fn primitive_part_z(f: &UniPolyZ) -> UniPolyZ {
    let Some(lc) = f.lc() else {
        return Poly::zero();
    };
    let mut g = content_z(f);
    if lc.is_negative() {
        g = -g;
    }
    f.map(|c| c / &g)
}

const GCD_PRIMES: [u64; 3] = [
    2305843009213693951,
    4611686018427387847,
    9223372036854775783,
];

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn reduce_mod(f: &UniPolyZ, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap())
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Degree of `gcd(a, b)` over `Z/p`; both inputs nonzero.
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    while !b.is_empty() {
        let inv = powmod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() {
            let t = mulmod(*a.last().unwrap(), inv, p);
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                let s = mulmod(t, bc, p);
                a[shift + i] = (a[shift + i] + p - s) % p;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() - 1
}

/// True when some prime not dividing either leading coefficient gives a
/// constant gcd modulo `p`, which proves `f` and `g` coprime.
fn coprime_by_modular_test(f: &UniPolyZ, g: &UniPolyZ) -> bool {
    for p in GCD_PRIMES {
        let (a, b) = (reduce_mod(f, p), reduce_mod(g, p));
        if a.len() != f.coeffs().len() || b.len() != g.coeffs().len() {
            continue;
        }
        if gcd_degree_mod(a, b, p) == 0 {
            return true;
        }
    }
    false
}

/// Primitive gcd of two integer polynomials (primitive PRS). The result has
/// positive leading coefficient; `gcd(0, 0) = 0`.
pub fn gcd_primitive(f: &UniPolyZ, g: &UniPolyZ) -> UniPolyZ {
    if !f.is_zero() && !g.is_zero() && coprime_by_modular_test(f, g) {
        return Poly::constant(BigInt::one());
    }
    let mut a = primitive_part_z(f);
    let mut b = primitive_part_z(g);
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.prem(&b);
        a = b;
        b = primitive_part_z(&r);
    }
    a
}

/// Monic gcd over the rationals, computed on integer images.
pub fn gcd_q(f: &UniPolyQ, g: &UniPolyQ) -> UniPolyQ {
    let fz = primitive_part_keep_sign(f);
    let gz = primitive_part_keep_sign(g);
    to_q(&gcd_primitive(&fz, &gz)).monic()
}

/// `f / gcd(f, g)`.
pub fn gcdfree_part(f: &UniPolyQ, g: &UniPolyQ) -> Result<UniPolyQ> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("gcdfree_part"));
    }
    let h = gcd_q(f, g);
    Ok(f.div_rem(&h).0)
}

/// Monic squarefree part `f / gcd(f, f')`.
pub fn squarefree_part(f: &UniPolyQ) -> Result<UniPolyQ> {
    Ok(gcdfree_part(f, &f.derivative())?.monic())
}

/// Yun's algorithm. Factors are monic, squarefree and pairwise coprime, listed
/// by increasing multiplicity; `f = lc(f) * prod(factor^mult)`.
pub fn squarefree_decomposition(f: &UniPolyQ) -> Result<Vec<(UniPolyQ, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree_decomposition"));
    }
    let f = f.monic();
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let fp = f.derivative();
    let a0 = gcd_q(&f, &fp);
    let mut b = f.div_rem(&a0).0;
    let mut c = fp.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1u32;
    loop {
        let a = gcd_q(&b, &d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.div_rem(&a).0;
        if b.is_constant() {
            break;
        }
        c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}

/// `f = num / den` with `num` integral and `den > 0` the lcm of the denominators.
pub fn clear_denominators(f: &UniPolyQ) -> (UniPolyZ, BigInt) {
    let den = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let num = f.map(|c| (c * Rational::from_integer(den.clone())).to_integer());
    (num, den)
}

/// Remainder of `a` modulo `f` over the rationals, computed with integer
/// pseudo-division. Panics if `f` is zero.
pub fn rem_q(a: &UniPolyQ, f: &UniPolyQ) -> UniPolyQ {
    let df = f.degree().expect("remainder modulo the zero polynomial");
    let Some(da) = a.degree() else {
        return UniPolyQ::zero();
    };
    if da < df {
        return a.clone();
    }
    if df == 0 {
        return UniPolyQ::zero();
    }
    let (an, aden) = clear_denominators(a);
    let fz = primitive_part_z(&clear_denominators(f).0);
    let r = an.prem(&fz);
    let scale = num_traits::Pow::pow(fz.lc().unwrap(), (da - df + 1) as u32) * aden;
    let g = content_z(&r).gcd(&scale);
    if g.is_zero() {
        return UniPolyQ::zero();
    }
    let den = &scale / &g;
    r.map(|c| Rational::new(c / &g, den.clone()))
}

/// `(s, res)` with `s * g = res (mod f)`, `deg s < deg f` and `res` the
/// resultant of `g` and `f` up to sign; solved from the Sylvester system by
/// fraction-free elimination. `None` when `res = 0`.
fn bezout_z(g: &UniPolyZ, f: &UniPolyZ) -> Option<(UniPolyZ, BigInt)> {
    let n = f.deg();
    let m = g.degree()?;
    if m == 0 {
        return Some((UniPolyZ::one(), g.coeffs()[0].clone()));
    }
    let size = n + m;
    // columns: s_0..s_{n-1}, t_0..t_{m-1}; rows: coefficient of T^i; last column is the rhs
    let mut a = vec![vec![BigInt::zero(); size + 1]; size];
    for j in 0..n {
        for (i, c) in g.coeffs().iter().enumerate() {
            a[i + j][j] = c.clone();
        }
    }
    for j in 0..m {
        for (i, c) in f.coeffs().iter().enumerate() {
            a[i + j][n + j] = c.clone();
        }
    }
    a[0][size] = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size {
        let p = (k..size).find(|&i| !a[i][k].is_zero())?;
        a.swap(k, p);
        for i in k + 1..size {
            for j in k + 1..=size {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = prev;
    let mut y = vec![BigInt::zero(); size];
    for i in (0..size).rev() {
        let mut acc = &det * &a[i][size];
        for j in i + 1..size {
            acc -= &a[i][j] * &y[j];
        }
        y[i] = acc / &a[i][i];
    }
    y.truncate(n);
    Some((UniPolyZ::new(y), det))
}

/// Inverse of `g` modulo `f`: `h` with `g h = 1 (mod f)` and `deg h < deg f`.
pub fn mod_inverse(g: &UniPolyQ, f: &UniPolyQ) -> Result<UniPolyQ> {
    if f.deg() < 1 {
        return Err(Error::InvalidInput("mod_inverse needs deg f >= 1".into()));
    }
    let gr = rem_q(g, f);
    if gr.is_zero() {
        return Err(Error::NotInvertible);
    }
    let (gz, gden) = clear_denominators(&gr);
    let fz = clear_denominators(f).0;
    let (s, res) = bezout_z(&gz, &fz).ok_or(Error::NotInvertible)?;
    Ok(s.map(|c| Rational::new(c * &gden, res.clone())))
}

/// Exact value `f(a)`.
pub fn eval_at_rational(f: &UniPolyQ, a: &Rational) -> Rational {
    f.eval(a)
}

/// Exact value of an integer polynomial at a rational, via the homogenized
/// integer Horner scheme (one division at the end).
pub fn eval_z_at(f: &UniPolyZ, a: &Rational) -> Rational {
    let Some(n) = f.degree() else {
        return Rational::zero();
    };
    let (num, den) = (a.numer(), a.denom());
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    for c in f.coeffs().iter().rev() {
        acc = acc * num + c * &dpow;
        dpow *= den;
    }
    // acc = sum c_i num^i den^(n-i)
    BigRational::new(acc, num_traits::Pow::pow(den, n as u32))
}

/// Sign of `f(a)` without forming the reduced rational.
pub fn sign_z_at(f: &UniPolyZ, a: &Rational) -> i8 {
    let (num, den) = (a.numer(), a.denom());
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    for c in f.coeffs().iter().rev() {
        acc = acc * num + c * &dpow;
        dpow *= den;
    }
    sign_of_int(&acc)
}

pub fn sign_of_int(n: &BigInt) -> i8 {
    if n.is_zero() {
        0
    } else if n.is_positive() {
        1
    } else {
        -1
    }
}

pub fn sign_of_rat(q: &Rational) -> i8 {
    sign_of_int(q.numer())
}

pub fn bitsize_z(f: &UniPolyZ) -> u64 {
    f.coeffs().iter().map(int_bitsize).max().unwrap_or(0)
}

pub fn bitsize_q(f: &UniPolyQ) -> u64 {
    f.coeffs().iter().map(rat_bitsize).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prs_gcd_oracle(f: &UniPolyQ, g: &UniPolyQ) -> UniPolyQ {
        // plain Euclid over Q
        let (mut a, mut b) = (f.clone(), g.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    #[test]
    fn gcd_examples() {
        let f = qpoly(&[-2, 0, 1]);
        assert_eq!(gcd_q(&f, &qpoly(&[0, 2])), qpoly(&[1]));
        assert_eq!(prs_gcd_oracle(&f, &qpoly(&[0, 2])), qpoly(&[1]));
        assert_eq!(gcd_q(&qpoly(&[0, 0, 1]), &qpoly(&[0, 2])), qpoly(&[0, 1]));
        let g = qpoly(&[3, 0, 6]);
        assert_eq!(gcd_q(&g, &UniPolyQ::zero()), g.monic());
        assert!(gcd_q(&UniPolyQ::zero(), &UniPolyQ::zero()).is_zero());
    }

    #[test]
    fn modular_coprimality() {
        // common factor: the modular test must stay inconclusive
        let a = zpoly(&[-2, 1, 1]);
        let b = zpoly(&[-3, 2, 1]);
        assert!(!coprime_by_modular_test(&a, &b));
        assert_eq!(gcd_primitive(&a, &b), zpoly(&[-1, 1]));
        let big = BigInt::from(1u64 << 62) * BigInt::from(1u64 << 62) + 7;
        let c = Poly::new(vec![big, BigInt::from(3), BigInt::from(1)]);
        assert!(coprime_by_modular_test(&c, &a));
        assert_eq!(gcd_primitive(&c, &a), zpoly(&[1]));
    }

    #[test]
    fn gcdfree_examples() {
        assert_eq!(
            gcdfree_part(&qpoly(&[0, 0, -1, 1]), &qpoly(&[0, 0, 1]))
                .unwrap()
                .monic(),
            qpoly(&[-1, 1])
        );
        assert_eq!(
            gcdfree_part(&qpoly(&[-2, 0, 1]), &qpoly(&[0, 1])).unwrap(),
            qpoly(&[-2, 0, 1])
        );
        assert_eq!(
            gcdfree_part(&qpoly(&[0, 1]), &UniPolyQ::zero()).unwrap(),
            qpoly(&[1])
        );
        assert!(matches!(
            gcdfree_part(&UniPolyQ::zero(), &qpoly(&[1])),
            Err(Error::ZeroPolynomial(_))
        ));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(
            squarefree_decomposition(&qpoly(&[0, 0, 1])).unwrap(),
            vec![(qpoly(&[0, 1]), 2)]
        );
        assert_eq!(
            squarefree_decomposition(&qpoly(&[-2, 0, 1])).unwrap(),
            vec![(qpoly(&[-2, 0, 1]), 1)]
        );
        // T^2 (T - 1)
        assert_eq!(
            squarefree_decomposition(&qpoly(&[0, 0, -1, 1])).unwrap(),
            vec![(qpoly(&[-1, 1]), 1), (qpoly(&[0, 1]), 2)]
        );
        assert!(squarefree_decomposition(&UniPolyQ::zero()).is_err());
    }

    #[test]
    fn primitive_part_examples() {
        let f = UniPolyQ::new(vec![rat(9, 4), rat(3, 2)]);
        assert_eq!(primitive_part_q(&f).unwrap(), zpoly(&[3, 2]));
        assert_eq!(primitive_part_q(&qpoly(&[4, 2])).unwrap(), zpoly(&[2, 1]));
        assert_eq!(primitive_part_q(&qpoly(&[0, 1])).unwrap(), zpoly(&[0, 1]));
        assert_eq!(primitive_part_q(&qpoly(&[4, -2])).unwrap(), zpoly(&[-2, 1]));
        assert_eq!(primitive_part_keep_sign(&qpoly(&[4, -2])), zpoly(&[2, -1]));
        assert!(primitive_part_q(&UniPolyQ::zero()).is_err());
    }

    #[test]
    fn mod_inverse_examples() {
        let f = qpoly(&[-2, 0, 1]);
        let h = mod_inverse(&qpoly(&[0, 2]), &f).unwrap();
        assert_eq!(h, UniPolyQ::new(vec![int(0), rat(1, 4)]));
        assert_eq!(mod_inverse(&qpoly(&[1]), &f).unwrap(), qpoly(&[1]));
        assert!(matches!(
            mod_inverse(&qpoly(&[0, 1]), &qpoly(&[0, 0, 1])),
            Err(Error::NotInvertible)
        ));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval_at_rational(&qpoly(&[-2, 0, 1]), &rat(3, 2)), rat(1, 4));
        assert_eq!(eval_at_rational(&qpoly(&[5, 3, 1]), &int(0)), int(5));
        assert_eq!(eval_at_rational(&qpoly(&[0, -1, 0, 1]), &int(2)), int(6));
        assert_eq!(eval_z_at(&zpoly(&[-2, 0, 1]), &rat(3, 2)), rat(1, 4));
        assert_eq!(sign_z_at(&zpoly(&[-2, 0, 1]), &rat(-3, 2)), 1);
    }
}
