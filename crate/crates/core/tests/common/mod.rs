//! Oracles written independently of the library's algorithms.
#![allow(dead_code)]

use birur::arith::{BiPoly, Rational, UniPolyQ, UniPolyZ};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// Determinant by fraction-free Gaussian elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Coefficients low to high; `deg` may exceed the true degree (formal degree).
pub fn sylvester_matrix(a: &[BigInt], b: &[BigInt]) -> Vec<Vec<BigInt>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (k, c) in a.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (k, c) in b.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

pub fn sylvester_resultant(a: &UniPolyZ, b: &UniPolyZ) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    bareiss_det(sylvester_matrix(a.coeffs(), b.coeffs()))
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Lagrange interpolation through `(x_i, y_i)`, coefficients low to high.
pub fn lagrange(points: &[(Rational, Rational)]) -> Vec<Rational> {
    let n = points.len();
    let mut out = vec![Rational::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = vec![Rational::one()];
        let mut den = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * xj;
            }
            basis = next;
            den *= xi - xj;
        }
        for (k, c) in basis.iter().enumerate() {
            out[k] += c * yi / &den;
        }
    }
    while out.len() > 1 && out.last().unwrap().is_zero() {
        out.pop();
    }
    out
}

/// `Res_Y(P, Q)` as a polynomial in `X`, via Sylvester determinants at
/// integer nodes and interpolation.
pub fn resultant_in_x(p: &BiPoly, qq: &BiPoly) -> UniPolyQ {
    let dp = p.degree_y() as usize;
    let dq = qq.degree_y() as usize;
    let bound = (p.total_degree() * qq.total_degree()) as i64;
    let spec = |f: &BiPoly, deg: usize, x: &Rational| -> Vec<BigInt> {
        let mut c = vec![Rational::zero(); deg + 1];
        for (&(i, j), v) in f.terms() {
            c[j as usize] += Rational::from_integer(v.clone()) * num_traits::Pow::pow(x, i as i32);
        }
        c.into_iter().map(|r| r.to_integer()).collect()
    };
    let pts: Vec<(Rational, Rational)> = (0..=bound)
        .map(|k| {
            let x = q(k);
            let det = bareiss_det(sylvester_matrix(&spec(p, dp, &x), &spec(qq, dq, &x)));
            (x, Rational::from_integer(det))
        })
        .collect();
    UniPolyQ::new(lagrange(&pts))
}

pub fn eval_q(f: &[Rational], x: &Rational) -> Rational {
    f.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn rem_q(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1;
        let c = &r[k] / &lb;
        for i in 0..=db {
            let t = &c * &b[i];
            r[k - db + i] -= t;
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn derivative(f: &[Rational]) -> Vec<Rational> {
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * q(i as i64))
            .collect(),
    )
}

fn trim_z(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Pseudo-remainder `lc(b)^k a mod b` with `k = deg a - deg b + 1`.
fn prem_z(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, usize) {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut k = 0;
    while r.len() > db {
        let top = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &top * bc;
        }
        r.pop();
        k += 1;
        r = trim_z(r);
    }
    // account for the steps skipped when the top coefficient vanished early
    let total = a.len().saturating_sub(db);
    for _ in k..total {
        for c in r.iter_mut() {
            *c *= lb;
        }
    }
    (r, total)
}

fn positive_primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v
        .iter()
        .fold(BigInt::zero(), |g, c| num_integer::Integer::gcd(&g, c));
    if g.is_zero() {
        return v;
    }
    v.into_iter().map(|c| c / &g).collect()
}

/// Sign of an integer polynomial at `x`, via homogenised Horner.
fn sign_at(f: &[BigInt], x: &Rational) -> i8 {
    let (n, d) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    for c in f.iter().rev() {
        acc = acc * n + c * &dpow;
        dpow *= d;
    }
    // acc = d^(deg) f(x) times d^0 correction; d > 0 so the sign is preserved
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

fn to_integer_poly(f: &[Rational]) -> Vec<BigInt> {
    let den = f.iter().fold(BigInt::one(), |acc, c| {
        num_integer::Integer::lcm(&acc, c.denom())
    });
    positive_primitive(trim_z(
        f.iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect(),
    ))
}

/// Sturm-sequence real root isolation, on integer polynomials scaled only by
/// positive constants so that sign sequences are unchanged.
pub struct Sturm {
    seq: Vec<Vec<BigInt>>,
}

impl Sturm {
    /// `f` must be nonzero; repeated roots are handled by dividing out the gcd.
    pub fn new(f: &[Rational]) -> Sturm {
        let f = trim(f.to_vec());
        let fp = derivative(&f);
        let g = if fp.is_empty() {
            f.clone()
        } else {
            // squarefree part via an integer gcd
            let (mut a, mut b) = (to_integer_poly(&f), to_integer_poly(&fp));
            while !b.is_empty() {
                let (r, _) = prem_z(&a, &b);
                a = b;
                b = positive_primitive(r);
            }
            let ga: Vec<Rational> = a
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect();
            if ga.len() <= 1 {
                f.clone()
            } else {
                div_exact_q(&f, &ga)
            }
        };
        let g = to_integer_poly(&g);
        let gp = positive_primitive(trim_z(
            g.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        ));
        let mut seq = vec![g, gp];
        while seq.last().is_some_and(|s| !s.is_empty()) {
            let n = seq.len();
            let b = &seq[n - 1];
            let (r, k) = prem_z(&seq[n - 2], b);
            let flip = b.last().unwrap().is_negative() && k % 2 == 1;
            let r: Vec<BigInt> = if flip {
                r
            } else {
                r.into_iter().map(|c| -c).collect()
            };
            seq.push(positive_primitive(r));
        }
        seq.pop();
        Sturm { seq }
    }

    fn variations(&self, x: &Rational) -> usize {
        let s: Vec<i8> = self
            .seq
            .iter()
            .map(|f| sign_at(f, x))
            .filter(|&s| s != 0)
            .collect();
        s.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct roots in `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a) - self.variations(b)
    }

    pub fn is_root(&self, x: &Rational) -> bool {
        sign_at(&self.seq[0], x) == 0
    }

    /// Disjoint intervals `[lo, hi]` each holding one root, width at most `w`.
    pub fn isolate(&self, w: &Rational) -> Vec<(Rational, Rational)> {
        let f = &self.seq[0];
        if f.len() <= 1 {
            return Vec::new();
        }
        let lc = Rational::from_integer(f.last().unwrap().abs());
        let m = Rational::from_integer(f.iter().map(|c| c.abs()).max().unwrap());
        let b = q(1) + m / lc;
        let mut coarse = Vec::new();
        let mut stack = vec![(-b.clone(), b)];
        while let Some((lo, hi)) = stack.pop() {
            let n = self.count(&lo, &hi);
            if n == 0 {
                continue;
            }
            if n == 1 {
                coarse.push((lo, hi));
                continue;
            }
            let mid = (&lo + &hi) / q(2);
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        // bisect on sign changes of f alone; the root lies in (lo, hi]
        let mut out = Vec::new();
        for (mut lo, mut hi) in coarse {
            if sign_at(f, &hi) == 0 {
                out.push((hi.clone(), hi));
                continue;
            }
            let s_hi = sign_at(f, &hi);
            while &hi - &lo > *w {
                let mid = (&lo + &hi) / q(2);
                let s = sign_at(f, &mid);
                if s == 0 {
                    lo = mid.clone();
                    hi = mid;
                    break;
                }
                if s == s_hi {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            out.push((lo, hi));
        }
        out.sort();
        out
    }
}

fn div_exact_q(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut quo = vec![Rational::zero(); a.len() - db];
    for k in (0..quo.len()).rev() {
        let c = &r[k + db] / &b[db];
        for i in 0..=db {
            let t = &c * &b[i];
            r[k + i] -= t;
        }
        quo[k] = c;
    }
    quo
}

/// Closed rational interval used by the oracle's pruning.
#[derive(Clone, Debug)]
pub struct Iv(pub Rational, pub Rational);

impl Iv {
    fn pow(&self, n: u32) -> Iv {
        let p = |x: &Rational| num_traits::Pow::pow(x, n as i32);
        let (a, b) = (p(&self.0), p(&self.1));
        if n == 0 {
            Iv(Rational::one(), Rational::one())
        } else if n % 2 == 0 && self.0 <= Rational::zero() && self.1 >= Rational::zero() {
            Iv(Rational::zero(), a.max(b))
        } else {
            Iv(a.clone().min(b.clone()), a.max(b))
        }
    }

    fn mul(&self, o: &Iv) -> Iv {
        let c = [
            &self.0 * &o.0,
            &self.0 * &o.1,
            &self.1 * &o.0,
            &self.1 * &o.1,
        ];
        Iv(
            c.iter().min().unwrap().clone(),
            c.iter().max().unwrap().clone(),
        )
    }

    pub fn has_zero(&self) -> bool {
        self.0 <= Rational::zero() && self.1 >= Rational::zero()
    }

    pub fn overlaps(&self, lo: &Rational, hi: &Rational) -> bool {
        &self.0 <= hi && lo <= &self.1
    }
}

/// Enclosure of `f` over the box `x` times `y`.
pub fn box_eval(f: &BiPoly, x: &Iv, y: &Iv) -> Iv {
    let mut lo = Rational::zero();
    let mut hi = Rational::zero();
    for (&(i, j), c) in f.terms() {
        let m = x.pow(i).mul(&y.pow(j));
        let c = Rational::from_integer(c.clone());
        let (a, b) = (&c * &m.0, &c * &m.1);
        lo += a.clone().min(b.clone());
        hi += a.max(b);
    }
    Iv(lo, hi)
}

/// Real solutions of `P = Q = 0` as tiny boxes: project with resultants in
/// both directions, isolate with Sturm sequences, then discard grid cells
/// where `P` or `Q` is bounded away from zero.
pub fn grid_solutions(p: &BiPoly, qq: &BiPoly, width: &Rational) -> Option<Vec<(Iv, Iv)>> {
    let rx = resultant_in_x(p, qq);
    let ry = resultant_in_x(&p.swap_xy(), &qq.swap_xy());
    if rx.is_zero() || ry.is_zero() {
        return None;
    }
    let xs = Sturm::new(rx.coeffs()).isolate(width);
    let ys = Sturm::new(ry.coeffs()).isolate(width);
    let mut out = Vec::new();
    for (xl, xh) in &xs {
        for (yl, yh) in &ys {
            let bx = Iv(xl.clone(), xh.clone());
            let by = Iv(yl.clone(), yh.clone());
            if box_eval(p, &bx, &by).has_zero() && box_eval(qq, &bx, &by).has_zero() {
                out.push((bx, by));
            }
        }
    }
    Some(out)
}

pub fn random_upoly<R: Rng>(rng: &mut R, deg: usize, tau: u32) -> UniPolyZ {
    let b = (1i64 << tau) - 1;
    let mut c: Vec<BigInt> = (0..=deg).map(|_| rng.gen_range(-b..=b).into()).collect();
    if c[deg].is_zero() {
        c[deg] = BigInt::one();
    }
    UniPolyZ::new(c)
}

/// `V(SRemS(P, Q; a)) - V(SRemS(P, Q; b))` from a signed remainder sequence
/// computed here.
pub fn sturm_query(p: &UniPolyZ, q: &UniPolyZ, a: &Rational, b: &Rational) -> i64 {
    let mut seq = vec![to_rats(p), to_rats(q)];
    while seq.last().is_some_and(|s| !s.is_empty()) {
        let n = seq.len();
        let r: Vec<Rational> = rem_q(&seq[n - 2], &seq[n - 1])
            .into_iter()
            .map(|c| -c)
            .collect();
        seq.push(r);
    }
    seq.pop();
    let v = |x: &Rational| {
        let s: Vec<bool> = seq
            .iter()
            .map(|f| eval_q(f, x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        s.windows(2).filter(|w| w[0] != w[1]).count() as i64
    };
    v(a) - v(b)
}

fn to_rats(p: &UniPolyZ) -> Vec<Rational> {
    trim(
        p.coeffs()
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect(),
    )
}
