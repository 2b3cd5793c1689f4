use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::interval::Interval;
use crate::arith::{
    bitsize_z, primitive_part_q, sign_z_at, squarefree_part, to_q, Poly, Rational, UniPolyZ,
};
use crate::error::{Error, Result};

fn count_variations(coeffs: &[BigInt]) -> usize {
    let mut prev = 0i8;
    let mut n = 0;
    for c in coeffs {
        let s = if c.is_zero() {
            continue;
        } else if c.is_positive() {
            1
        } else {
            -1
        };
        if prev != 0 && s != prev {
            n += 1;
        }
        prev = s;
    }
    n
}

/// Descartes bound on the number of roots of `f` in the open interval
/// `(lo, hi)`: sign variations of `(1+x)^n f((lo + hi x)/(1 + x))`.
/// Exact when it is 0 or 1.
pub fn descartes_count(f: &UniPolyZ, lo: &Rational, hi: &Rational) -> usize {
    let Some(n) = f.degree() else {
        return 0;
    };
    let m = lo.denom().lcm(hi.denom());
    let l = (lo * Rational::from_integer(m.clone())).to_integer();
    let w = (hi * Rational::from_integer(m.clone())).to_integer() - &l;
    // h(x) = m^n f((l + w x)/m)
    let lin = Poly::new(vec![l, w]);
    let c = f.coeffs();
    let mut acc = Poly::constant(c[n].clone());
    let mut mpow = BigInt::one();
    for i in (0..n).rev() {
        mpow *= &m;
        acc = &(&acc * &lin) + &Poly::constant(&c[i] * &mpow);
    }
    // x^n h(1/x), then shift x -> x + 1
    let mut v: Vec<BigInt> = acc.coeffs().to_vec();
    v.resize(n + 1, BigInt::zero());
    v.reverse();
    for i in 0..n {
        for j in (i..n).rev() {
            let t = v[j + 1].clone();
            v[j] += t;
        }
    }
    count_variations(&v)
}

fn pp_squarefree(f: &UniPolyZ) -> Result<UniPolyZ> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("isolate_real_roots"));
    }
    primitive_part_q(&squarefree_part(&to_q(f))?)
}

fn cauchy_pow2(f: &UniPolyZ) -> Rational {
    let lc = f.lc().unwrap().abs();
    let max = f.coeffs().iter().map(|c| c.abs()).max().unwrap();
    let bound = BigInt::one() + max.div_ceil(&lc);
    let mut b = BigInt::one();
    while b < bound {
        b <<= 1;
    }
    Rational::from_integer(b)
}

/// Isolating intervals for the real roots of `f`, sorted. Open intervals
/// have dyadic endpoints where `f` is nonzero and of opposite signs; exact
/// rational roots hit during bisection come back as point intervals.
pub fn isolate_real_roots(f: &UniPolyZ) -> Result<Vec<Interval>> {
    let g = pp_squarefree(f)?;
    if g.deg() == 0 {
        return Ok(Vec::new());
    }
    let b = cauchy_pow2(&g);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        match descartes_count(&g, &lo, &hi) {
            0 => {}
            1 => {
                let mid = (&lo + &hi) / Rational::from_integer(2.into());
                if sign_z_at(&g, &mid) == 0 {
                    out.push(Interval::point(mid));
                } else {
                    out.push(Interval { lo, hi });
                }
            }
            _ => {
                let mid = (&lo + &hi) / Rational::from_integer(2.into());
                if sign_z_at(&g, &mid) == 0 {
                    out.push(Interval::point(mid.clone()));
                }
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    let mut out: Vec<Interval> = out
        .into_iter()
        .map(|iv| clear_zero_endpoints(&g, iv))
        .collect();
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// Shrink an open isolating interval until neither endpoint is a root.
fn clear_zero_endpoints(g: &UniPolyZ, mut iv: Interval) -> Interval {
    if iv.is_point() {
        return iv;
    }
    while sign_z_at(g, &iv.lo) == 0 || sign_z_at(g, &iv.hi) == 0 {
        let mid = iv.midpoint();
        if sign_z_at(g, &mid) == 0 {
            return Interval::point(mid);
        }
        if descartes_count(g, &iv.lo, &mid) == 1 {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    }
    iv
}

/// Bisect an isolating interval of `f` until its width is at most `target`.
pub fn refine_interval(f: &UniPolyZ, iv: &Interval, target: &Rational) -> Result<Interval> {
    if iv.is_point() {
        return if sign_z_at(f, &iv.lo) == 0 {
            Ok(iv.clone())
        } else {
            Err(Error::NotIsolating)
        };
    }
    let s_lo = sign_z_at(f, &iv.lo);
    let s_hi = sign_z_at(f, &iv.hi);
    if s_lo * s_hi >= 0 {
        return Err(Error::NotIsolating);
    }
    let mut iv = iv.clone();
    while iv.width() > *target {
        let mid = iv.midpoint();
        let s = sign_z_at(f, &mid);
        if s == 0 {
            return Ok(Interval::point(mid));
        }
        if s == s_lo {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    Ok(iv)
}

/// Lower bound on the distance between distinct roots of a degree-`d`
/// integer polynomial with coefficients of bitsize `tau`:
/// `1 / (2 d^(d/2+2) (d 2^tau + 1)^d)`, with `d^(d/2)` rounded up to an
/// integer for odd `d`.
pub fn separation_lower_bound(d: u32, tau: u32) -> Rational {
    let d_big = BigInt::from(d.max(1));
    let dd = num_traits::Pow::pow(&d_big, d);
    let root = dd.sqrt();
    let half = if &root * &root == dd { root } else { root + 1 };
    let base: BigInt = &d_big * (BigInt::one() << tau) + 1u32;
    let den = BigInt::from(2) * half * &d_big * &d_big * num_traits::Pow::pow(&base, d);
    Rational::new(BigInt::one(), den)
}

/// [`separation_lower_bound`] for a given polynomial.
pub fn root_separation_lower_bound(f: &UniPolyZ) -> Rational {
    separation_lower_bound(f.deg() as u32, bitsize_z(f) as u32)
}
