use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{eval_z_at, sign_of_int, sign_of_rat, to_q, Poly, Rational, UniPolyQ, UniPolyZ};
use crate::error::{Error, Result};

/// `(-1)^(m(m-1)/2)`
fn eps(m: usize) -> i64 {
    if (m * (m.saturating_sub(1)) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Transition between consecutive regular couples:
/// `(Sh_k, Sh_{k-1}) = N * (Sh_j, Sh_{j-1})`, where row `r` of `N` is
/// `num[r] / den[r]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Transition {
    pub num: [[UniPolyZ; 2]; 2],
    pub den: [BigInt; 2],
    /// `Sh_k` is a new element proportional to `Sh_{j-1}` (degree gap).
    pub defective: bool,
    /// `Sh_{k-1}` is nonzero and part of the sequence.
    pub has_next: bool,
    /// Index of the couple the transition starts from.
    pub j: usize,
    /// Degree of `Sh_{j-1}`.
    pub k: usize,
}

/// Homogenised value `q^d f(p/q)` for `d >= deg f`.
fn homog(f: &UniPolyZ, x: &Rational, d: usize, qpow: &mut QPow) -> BigInt {
    let Some(n) = f.degree() else {
        return BigInt::zero();
    };
    let p = x.numer();
    let c = f.coeffs();
    let mut acc = c[n].clone();
    for i in (0..n).rev() {
        acc = acc * p + &c[i] * qpow.get(n - i);
    }
    acc * qpow.get(d - n)
}

/// Cached powers of the denominator of the evaluation point.
struct QPow {
    pows: Vec<BigInt>,
}

impl QPow {
    fn new(q: &BigInt) -> Self {
        QPow {
            pows: vec![BigInt::one(), q.clone()],
        }
    }

    fn get(&mut self, e: usize) -> &BigInt {
        while self.pows.len() <= e {
            let next = self.pows.last().unwrap() * &self.pows[1];
            self.pows.push(next);
        }
        &self.pows[e]
    }
}

/// A value `q^deg v(x)`, exact integer.
#[derive(Clone)]
struct Hom {
    v: BigInt,
    deg: usize,
}

impl Transition {
    /// Row `r` applied to homogenised values; the result has degree `target`.
    fn eval_row_hom(
        &self,
        r: usize,
        a: &Hom,
        b: &Hom,
        x: &Rational,
        target: usize,
        qpow: &mut QPow,
    ) -> Hom {
        let mut terms = Vec::with_capacity(2);
        for (n, val) in [(&self.num[r][0], a), (&self.num[r][1], b)] {
            if let Some(dn) = n.degree() {
                terms.push((homog(n, x, dn, qpow) * &val.v, dn + val.deg));
            }
        }
        let e = terms.iter().map(|t| t.1).max().unwrap_or(0).max(target);
        let mut sum = BigInt::zero();
        for (v, d) in terms {
            sum += v * qpow.get(e - d);
        }
        // sum / den = q^e * row(x), an integer multiple of q^(e - target)
        let scale = &self.den[r] * qpow.get(e - target);
        Hom {
            v: sum / scale,
            deg: target,
        }
    }

    fn apply_row(&self, r: usize, a: &UniPolyZ, b: &UniPolyZ) -> UniPolyZ {
        let s = &(&self.num[r][0] * a) + &(&self.num[r][1] * b);
        s.div_exact_scalar(&self.den[r])
            .expect("transition rows produce integer polynomials")
    }
}

/// Sylvester-Habicht (signed subresultant) sequence.
#[derive(Clone, Debug)]
pub struct SylHSeq {
    /// Nonzero elements, starting with `P`, `Q`, in decreasing index.
    pub polys: Vec<UniPolyZ>,
    /// Subresultant index of each element of `polys`.
    pub indices: Vec<usize>,
    pub transitions: Vec<Transition>,
}

/// Sylvester-Habicht sequence of `P`, `Q` with `deg P > deg Q`, together with
/// its transition matrices.
pub fn sylvester_habicht(p: &UniPolyZ, q: &UniPolyZ) -> Result<SylHSeq> {
    let Some(dp) = p.degree() else {
        return Err(Error::ZeroPolynomial("sylvester_habicht"));
    };
    if dp == 0 || q.degree().is_some_and(|dq| dq >= dp) {
        return Err(Error::InvalidDegrees(
            "sylvester_habicht needs deg P > deg Q".into(),
        ));
    }
    let mut seq = SylHSeq {
        polys: vec![p.clone()],
        indices: vec![dp],
        transitions: Vec::new(),
    };
    if q.is_zero() {
        return Ok(seq);
    }
    seq.polys.push(q.clone());
    seq.indices.push(dp - 1);

    // current couple (A, B) = (Sh_j, Sh_{j-1}); s_a is the principal
    // coefficient of Sh_j (1 for Sh_p = P)
    let mut a = p.clone();
    let mut b = q.clone();
    let mut j = dp;
    let mut s_a = BigInt::one();
    loop {
        let k = b.deg();
        let t_b = b.lc().unwrap().clone();
        let defective = k + 1 < j;
        let (s_k, c) = if defective {
            let m = j - k;
            let num = num_traits::Pow::pow(&t_b, m as u32) * eps(m);
            let s_k = num
                .div_exact_ref(&num_traits::Pow::pow(&s_a, (m - 1) as u32))
                .expect("principal coefficients divide exactly");
            let c = &t_b * &s_k;
            (s_k, c)
        } else {
            (t_b.clone(), &t_b * &t_b)
        };
        let row0 = ([UniPolyZ::zero(), Poly::constant(s_k.clone())], t_b.clone());
        let sh_k = b
            .scale(&s_k)
            .div_exact_scalar(&t_b)
            .expect("Sh_k is integral");

        let (row1, next) = if k == 0 {
            (
                ([UniPolyZ::zero(), UniPolyZ::zero()], BigInt::one()),
                UniPolyZ::zero(),
            )
        } else {
            let e = (j - k + 1) as u32;
            let (qt, r) = a.pseudo_div(&b);
            let lce = num_traits::Pow::pow(&t_b, e);
            let den = &lce * &s_a * &s_a;
            let next = r
                .scale(&-&c)
                .div_exact_scalar(&den)
                .expect("Sylvester-Habicht division is exact");
            let row1 = ([Poly::constant(-&c * &lce), qt.scale(&c)], den);
            (row1, next)
        };
        // rows are left unreduced: contents of these coefficients are as
        // large as the coefficients, and the gcds dominate the build time
        let (n0, d0) = row0;
        let (n1, d1) = row1;
        let has_next = !next.is_zero();
        seq.transitions.push(Transition {
            num: [n0, n1],
            den: [d0, d1],
            defective,
            has_next,
            j,
            k,
        });
        if defective {
            seq.polys.push(sh_k.clone());
            seq.indices.push(k);
        }
        if !has_next {
            break;
        }
        seq.polys.push(next.clone());
        seq.indices.push(k - 1);
        a = sh_k;
        b = next;
        j = k;
        s_a = s_k;
    }
    Ok(seq)
}

trait DivExactRef {
    fn div_exact_ref(&self, d: &BigInt) -> Option<BigInt>;
}

impl DivExactRef for BigInt {
    fn div_exact_ref(&self, d: &BigInt) -> Option<BigInt> {
        crate::arith::ExactDiv::div_exact(self, d)
    }
}

impl SylHSeq {
    /// `Res(P, Q)`, with the Sylvester-determinant sign convention.
    pub fn resultant(&self) -> BigInt {
        match (self.indices.last(), self.polys.last()) {
            (Some(0), Some(sh0)) if self.polys.len() > 1 => {
                let p = self.indices[0];
                sh0.coeff(0) * eps(p)
            }
            _ => BigInt::zero(),
        }
    }

    /// The last nonzero element (a gcd of `P` and `Q` up to a constant).
    pub fn last(&self) -> &UniPolyZ {
        self.polys.last().unwrap()
    }

    fn eval_hom(&self, x: &Rational) -> Vec<Hom> {
        let mut qpow = QPow::new(x.denom());
        let p0 = &self.polys[0];
        let mut out = vec![Hom {
            v: homog(p0, x, p0.deg(), &mut qpow),
            deg: p0.deg(),
        }];
        if self.polys.len() == 1 {
            return out;
        }
        let p1 = &self.polys[1];
        let mut a = out[0].clone();
        let mut b = Hom {
            v: homog(p1, x, p1.deg(), &mut qpow),
            deg: p1.deg(),
        };
        out.push(b.clone());
        for t in &self.transitions {
            // b is stored with degree k already
            let sh_k = t.eval_row_hom(0, &a, &b, x, t.k, &mut qpow);
            if t.defective {
                out.push(sh_k.clone());
            }
            if !t.has_next {
                break;
            }
            let next = t.eval_row_hom(1, &a, &b, x, t.k - 1, &mut qpow);
            out.push(next.clone());
            a = sh_k;
            // lower to the true degree of the next element
            let idx = out.len() - 1;
            let d = self.polys[idx].deg();
            b = Hom {
                v: &next.v / qpow.get(next.deg - d),
                deg: d,
            };
        }
        out
    }

    /// Evaluate every element at `x` by folding the transition matrices.
    pub fn eval_via_transitions(&self, x: &Rational) -> Vec<Rational> {
        let mut qpow = QPow::new(x.denom());
        self.eval_hom(x)
            .into_iter()
            .map(|h| Rational::new(h.v, qpow.get(h.deg).clone()))
            .collect()
    }

    /// Evaluate every element at `x` directly.
    pub fn eval_direct(&self, x: &Rational) -> Vec<Rational> {
        self.polys.iter().map(|p| eval_z_at(p, x)).collect()
    }

    /// Rebuild the polynomial sequence from `P`, `Q` and the transitions.
    pub fn rebuild(&self) -> Vec<UniPolyZ> {
        let mut out = self.polys[..self.polys.len().min(2)].to_vec();
        if out.len() < 2 {
            return out;
        }
        let (mut a, mut b) = (out[0].clone(), out[1].clone());
        for t in &self.transitions {
            let sh_k = t.apply_row(0, &a, &b);
            if t.defective {
                out.push(sh_k.clone());
            }
            if !t.has_next {
                break;
            }
            let next = t.apply_row(1, &a, &b);
            out.push(next.clone());
            a = sh_k;
            b = next;
        }
        out
    }
}

fn signs(values: &[Rational]) -> Vec<i8> {
    values.iter().map(sign_of_rat).collect()
}

/// Sign variations with the Sylvester-Habicht rule for pairs of zeros:
/// `[+,0,0,-]` counts one, `[+,0,0,+]` counts two. Leading and trailing zeros
/// are dropped; single zeros are skipped.
pub fn sign_variation_w(signs: &[i8]) -> usize {
    let mut count = 0;
    let mut prev: Option<i8> = None;
    let mut zeros = 0usize;
    for &s in signs {
        if s == 0 {
            zeros += 1;
            continue;
        }
        if let Some(p) = prev {
            if zeros == 2 && p == s {
                count += 2;
            } else if p != s {
                count += 1;
            }
        }
        prev = Some(s);
        zeros = 0;
    }
    count
}

/// Ordinary sign variations (zeros ignored).
pub fn sign_variations(signs: &[i8]) -> usize {
    let nz: Vec<i8> = signs.iter().copied().filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

fn check_pre(p: &UniPolyZ, q: &UniPolyZ, a: &Rational, b: &Rational) -> Result<()> {
    let pa = eval_z_at(p, a);
    let pb = eval_z_at(p, b);
    let qa = eval_z_at(q, a);
    let qb = eval_z_at(q, b);
    if (pa * pb).is_zero() && (qa * qb).is_zero() {
        return Err(Error::InvalidInput(
            "eval_sylh_w needs P(a)P(b) != 0 or Q(a)Q(b) != 0".into(),
        ));
    }
    Ok(())
}

/// `W(SylH(P, Q; a)) - W(SylH(P, Q; b))`, evaluated through the transition
/// matrices.
pub fn eval_sylh_w(p: &UniPolyZ, q: &UniPolyZ, a: &Rational, b: &Rational) -> Result<i64> {
    let seq = sylvester_habicht(p, q)?;
    check_pre(p, q, a, b)?;
    Ok(seq.w_difference(a, b))
}

/// Batch form sharing one sequence across all `(a, b)` pairs.
pub fn eval_sylh_w_many(
    p: &UniPolyZ,
    q: &UniPolyZ,
    pairs: &[(Rational, Rational)],
) -> Result<Vec<i64>> {
    let seq = sylvester_habicht(p, q)?;
    pairs
        .iter()
        .map(|(a, b)| {
            check_pre(p, q, a, b)?;
            Ok(seq.w_difference(a, b))
        })
        .collect()
}

impl SylHSeq {
    pub fn w_at(&self, x: &Rational) -> usize {
        let s: Vec<i8> = self.eval_hom(x).iter().map(|h| sign_of_int(&h.v)).collect();
        sign_variation_w(&s)
    }

    pub fn w_difference(&self, a: &Rational, b: &Rational) -> i64 {
        self.w_at(a) as i64 - self.w_at(b) as i64
    }

    pub fn w_difference_direct(&self, a: &Rational, b: &Rational) -> i64 {
        let w = |x| sign_variation_w(&signs(&self.eval_direct(x))) as i64;
        w(a) - w(b)
    }
}

/// Signed remainder sequence `[P, Q, -rem(P, Q), ...]` over the rationals.
pub fn signed_remainder_sequence(p: &UniPolyQ, q: &UniPolyQ) -> Vec<UniPolyQ> {
    let mut out = vec![p.clone()];
    if q.is_zero() {
        return out;
    }
    out.push(q.clone());
    loop {
        let n = out.len();
        let r = -out[n - 2].rem(&out[n - 1]);
        if r.is_zero() {
            break;
        }
        out.push(r);
    }
    out
}

/// `V(SRemS(P, Q; a, b))` by direct evaluation; used as an oracle.
pub fn sremsv_difference(p: &UniPolyZ, q: &UniPolyZ, a: &Rational, b: &Rational) -> i64 {
    let seq = signed_remainder_sequence(&to_q(p), &to_q(q));
    let v = |x: &Rational| {
        let s: Vec<i8> = seq.iter().map(|f| sign_of_rat(&f.eval(x))).collect();
        sign_variations(&s) as i64
    };
    v(a) - v(b)
}
