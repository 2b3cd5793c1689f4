//! Signs of a third polynomial at the solutions, splitting and radicals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{
    clear_denominators, gcd_q, mod_inverse, primitive_part_keep_sign, primitive_part_q, rem_q,
    sign_z_at, to_q, BiPoly, Rational, UniPolyQ, UniPolyZ,
};
use crate::error::{Error, Result};
use crate::isolation::{descartes_count, isolate_real_roots, Interval};
use crate::rur::Rur;
use crate::subres::{sign_variations, sylvester_habicht, SylHSeq};

/// Which algorithm produced a [`SignReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SignMethod {
    Naive,
    Sylh,
}

/// Sign of `F` at every real solution, in the order of the real roots of `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignReport {
    pub signs: Vec<i8>,
    pub method: SignMethod,
}

/// `f_{F=0}` and `f_{F!=0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitResult {
    pub f_zero: UniPolyQ,
    pub f_nonzero: UniPolyQ,
}

fn even_ceil(n: u32) -> u32 {
    n + n % 2
}

fn build_ff_q(r: &Rur, f: &BiPoly) -> UniPolyQ {
    if f.is_zero() {
        return UniPolyQ::zero();
    }
    let coeffs = f.shear_at(&r.a);
    let delta = even_ceil(f.total_degree()) as usize;
    // integer images D fY, D f1; the sum is D^delta f_F
    let (fy, dy) = clear_denominators(&r.fy);
    let (f1, d1) = clear_denominators(&r.f1);
    let (ac, da) = coeffs.iter().map(clear_denominators).fold(
        (Vec::new(), BigInt::one()),
        |(mut v, l), (p, d)| {
            let l2 = l.lcm(&d);
            v.push((p, d));
            (v, l2)
        },
    );
    let den = dy.lcm(&d1);
    let fy = fy.scale(&(&den / &dy));
    let f1 = f1.scale(&(&den / &d1));
    let mut f1_pows = vec![UniPolyZ::one()];
    for i in 1..=delta {
        let next = &f1_pows[i - 1] * &f1;
        f1_pows.push(next);
    }
    let mut fy_pow = UniPolyZ::one();
    let mut acc = UniPolyZ::zero();
    for (i, (ai, di)) in ac.iter().enumerate() {
        if !ai.is_zero() {
            let ai = ai.scale(&(&da / di));
            acc = &acc + &(&(&ai * &fy_pow) * &f1_pows[delta - i]);
        }
        fy_pow = &fy_pow * &fy;
    }
    let scale = num_traits::Pow::pow(&den, delta as u32) * da;
    to_q(&acc).scale(&Rational::new(BigInt::one(), scale))
}

/// `f_F mod f_bar`, which agrees with `f_F` at every root of `f`.
pub fn ff_reduced(r: &Rur, f_bar: &UniPolyQ, f: &BiPoly) -> UniPolyQ {
    let ff = build_ff_q(r, f);
    if ff.is_zero() || f_bar.deg() == 0 {
        return ff;
    }
    rem_q(&ff, f_bar)
}

/// `pp(f_F)` with `f_F = sum_i a_i(T) fY^i f1^(delta - i)`, where
/// `F(T - aY, Y) = sum_i a_i(T) Y^i` and `delta` is the smallest even integer
/// at least `deg F`. The primitive part is taken with a positive factor, so
/// the sign of `f_F` at every root of `f` is the sign of `F` at the matching
/// solution. `F = 0` gives the zero polynomial.
pub fn build_ff(r: &Rur, f: &BiPoly) -> UniPolyZ {
    primitive_part_keep_sign(&build_ff_q(r, f))
}

struct Roots {
    f: UniPolyZ,
    f_bar: UniPolyQ,
    intervals: Vec<Interval>,
}

fn real_roots(r: &Rur) -> Result<Roots> {
    let f_bar = r.f_bar();
    if f_bar.deg() == 0 {
        return Ok(Roots {
            f: UniPolyZ::one(),
            f_bar,
            intervals: Vec::new(),
        });
    }
    let f = primitive_part_q(&f_bar)?;
    let intervals = isolate_real_roots(&f)?;
    Ok(Roots {
        f,
        f_bar,
        intervals,
    })
}

fn sign_of(v: &Rational) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Whether the root of `f` isolated by `iv` is a root of `g`, a divisor of `f`.
fn root_of_divisor(g: &UniPolyZ, iv: &Interval) -> bool {
    if g.deg() == 0 {
        return false;
    }
    if iv.is_point() {
        return sign_z_at(g, &iv.lo) == 0;
    }
    sign_z_at(g, &iv.lo) * sign_z_at(g, &iv.hi) < 0
}

fn naive_sign(roots: &Roots, h: &UniPolyZ, zero_part: &UniPolyZ, iv: &Interval) -> i8 {
    if h.is_zero() || root_of_divisor(zero_part, iv) {
        return 0;
    }
    if iv.is_point() {
        return sign_z_at(h, &iv.lo);
    }
    // h has no root at the isolated root; bisect until it has none in the interval
    let mut iv = iv.clone();
    let s_lo = sign_z_at(&roots.f, &iv.lo);
    loop {
        if descartes_count(h, &iv.lo, &iv.hi) == 0 {
            let m = iv.midpoint();
            let s = sign_z_at(h, &m);
            debug_assert!(s != 0);
            return s;
        }
        let m = iv.midpoint();
        let s = sign_z_at(&roots.f, &m);
        if s == 0 {
            return sign_z_at(h, &m);
        }
        if s == s_lo {
            iv.lo = m;
        } else {
            iv.hi = m;
        }
    }
}

struct NaiveCtx {
    roots: Roots,
    h: UniPolyZ,
    zero_part: UniPolyZ,
}

fn naive_ctx(r: &Rur, f: &BiPoly) -> Result<NaiveCtx> {
    let roots = real_roots(r)?;
    let ff = ff_reduced(r, &roots.f_bar, f);
    let (h, zero_part) = if ff.is_zero() || roots.f_bar.deg() == 0 {
        (primitive_part_keep_sign(&ff), UniPolyZ::zero())
    } else {
        let g = gcd_q(&roots.f_bar, &ff);
        (primitive_part_keep_sign(&ff), primitive_part_q(&g)?)
    };
    Ok(NaiveCtx {
        roots,
        h,
        zero_part,
    })
}

/// Sign of `F` at the `k`-th real solution, by refining the isolating
/// interval of the root of `f` until `f_F mod f_bar` has constant sign on it.
/// Zeros are detected exactly through `gcd(f_bar, f_F)`.
pub fn sign_at_naive(r: &Rur, f: &BiPoly, k: usize) -> Result<i8> {
    let ctx = naive_ctx(r, f)?;
    let iv = ctx
        .roots
        .intervals
        .get(k)
        .ok_or(Error::InvalidRootIndex(k))?;
    Ok(naive_sign(&ctx.roots, &ctx.h, &ctx.zero_part, iv))
}

/// [`sign_at_naive`] at every real solution.
pub fn sign_at_all_naive(r: &Rur, f: &BiPoly) -> Result<SignReport> {
    let ctx = naive_ctx(r, f)?;
    let signs = ctx
        .roots
        .intervals
        .iter()
        .map(|iv| naive_sign(&ctx.roots, &ctx.h, &ctx.zero_part, iv))
        .collect();
    Ok(SignReport {
        signs,
        method: SignMethod::Naive,
    })
}

fn linear_sign(g: &UniPolyZ, f: &UniPolyZ, iv: &Interval) -> i8 {
    // g = c1 T + c0 with c1 != 0, root r0 = -c0 / c1
    let c1 = g.coeff(1);
    let r0 = Rational::new(-g.coeff(0), c1.clone());
    let s1: i8 = if c1.is_positive() { 1 } else { -1 };
    let above = if iv.is_point() {
        return s1 * sign_of(&(&iv.lo - &r0));
    } else if r0 <= iv.lo {
        true
    } else if r0 >= iv.hi {
        false
    } else {
        let fr = sign_z_at(f, &r0);
        if fr == 0 {
            return 0;
        }
        fr == sign_z_at(f, &iv.lo)
    };
    if above {
        s1
    } else {
        -s1
    }
}

/// Shared data for the Sylvester-Habicht route.
struct SylhCtx {
    roots: Roots,
    g: UniPolyZ,
    fpg: UniPolyZ,
    seq: Option<SylHSeq>,
}

fn sylh_ctx(r: &Rur, f: &BiPoly) -> Result<SylhCtx> {
    let roots = real_roots(r)?;
    // unreduced: reducing modulo f_bar first makes the coefficients, and
    // hence the whole sequence, much larger
    let g = build_ff(r, f);
    let fpg = &roots.f.derivative() * &g;
    let seq = if g.deg() >= 2 && roots.f.deg() >= 1 {
        Some(sylvester_habicht(&fpg, &-&roots.f)?)
    } else {
        None
    };
    Ok(SylhCtx { roots, g, fpg, seq })
}

fn var_at(polys: &[&UniPolyZ], x: &Rational) -> i64 {
    let s: Vec<i8> = polys.iter().map(|p| sign_z_at(p, x)).collect();
    sign_variations(&s) as i64
}

fn sylh_sign(ctx: &SylhCtx, iv: &Interval) -> Result<i8> {
    let g = &ctx.g;
    if g.is_zero() {
        return Ok(0);
    }
    if g.deg() == 0 {
        return Ok(if g.coeff(0).is_positive() { 1 } else { -1 });
    }
    if iv.is_point() {
        return Ok(sign_z_at(g, &iv.lo));
    }
    if g.deg() == 1 {
        return Ok(linear_sign(g, &ctx.roots.f, iv));
    }
    let f = &ctx.roots.f;
    let (a, b) = (&iv.lo, &iv.hi);
    if sign_z_at(f, a) == 0 || sign_z_at(f, b) == 0 {
        return Err(Error::InvalidInput(
            "interval endpoint is a root of f".into(),
        ));
    }
    let neg_f = -f;
    let c = |x: &Rational| var_at(&[f, &ctx.fpg, &neg_f], x) - var_at(&[&ctx.fpg, &neg_f], x);
    let seq = ctx.seq.as_ref().expect("sequence built for deg g >= 2");
    let v = seq.w_difference(a, b) + c(a) - c(b);
    debug_assert!((-1..=1).contains(&v));
    Ok(v as i8)
}

/// Sign of `F` at the `k`-th real solution via a Sylvester-Habicht sequence
/// of `f' g` and `-f`, with `f = pp(f_bar)` and `g = pp(f_F)`.
pub fn sign_at(r: &Rur, f: &BiPoly, k: usize) -> Result<i8> {
    let ctx = sylh_ctx(r, f)?;
    let iv = ctx
        .roots
        .intervals
        .get(k)
        .ok_or(Error::InvalidRootIndex(k))?;
    sylh_sign(&ctx, iv)
}

/// Signs at all real solutions, sharing one Sylvester-Habicht sequence.
pub fn sign_at_all(r: &Rur, f: &BiPoly) -> Result<SignReport> {
    let ctx = sylh_ctx(r, f)?;
    let signs = ctx
        .roots
        .intervals
        .iter()
        .map(|iv| sylh_sign(&ctx, iv))
        .collect::<Result<_>>()?;
    Ok(SignReport {
        signs,
        method: SignMethod::Sylh,
    })
}

/// Split the squarefree part of `f` into the factor vanishing where `F` does
/// and its cofactor.
pub fn split_by_sign(r: &Rur, f: &BiPoly) -> SplitResult {
    let fb = r.f_bar();
    let ff = ff_reduced(r, &fb, f);
    let f_zero = gcd_q(&fb, &ff);
    let f_nonzero = fb.div_rem(&f_zero).0.monic();
    SplitResult { f_zero, f_nonzero }
}

/// RUR of the radical of `<P, Q, F>`, derived from the RUR of `<P, Q>`.
pub fn rur_of_radical(r: &Rur, _p: &BiPoly, _q: &BiPoly, f: &BiPoly) -> Result<Rur> {
    let split = split_by_sign(r, f);
    let fj = split.f_zero;
    if fj.deg() == 0 {
        return Err(Error::EmptyVariety);
    }
    let fjp = fj.derivative();
    let fj1 = fjp.div_rem(&gcd_q(&fj, &fjp)).0;
    let inv = mod_inverse(&r.f1, &fj)?;
    let lift = |p: &UniPolyQ| rem_q(&(&(&inv * p) * &fj1), &fj);
    Ok(Rur {
        a: r.a.clone(),
        fx: lift(&r.fx),
        fy: lift(&r.fy),
        f1: fj1,
        multiplicity_sum: fj.deg(),
        f: fj,
        d_input: r.d_input,
    })
}

/// Number of real roots of `f` (the length of every [`SignReport`]).
pub fn real_root_count(r: &Rur) -> Result<usize> {
    Ok(real_roots(r)?.intervals.len())
}
