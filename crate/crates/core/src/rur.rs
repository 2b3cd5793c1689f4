//! Rational univariate representations of bivariate systems.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{
    bitsize_q, clear_denominators, eval_z_at, gcd_q, primitive_part_q, rem_q, sign_z_at,
    squarefree_decomposition, squarefree_part, to_q, BiPoly, Rational, UniPolyQ, UniPolyZ,
};
use crate::error::{Error, Result};
use crate::isolation::isolate_real_roots;
use crate::subres::{resultant_rts, ResultantTs};

pub use crate::subres::leading_coefficients;

/// Global sign in front of the `fY` formula. The `S`-derivative of
/// `T - X - S Y` is `-Y`, which the closed form needs to account for.
pub const FY_SIGN: i64 = -1;

/// RUR of `<P, Q>` associated to the linear form `X + aY`:
/// solutions are `(fX(t)/f1(t), fY(t)/f1(t))` for the roots `t` of `f`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rur {
    pub a: Rational,
    pub f: UniPolyQ,
    pub f1: UniPolyQ,
    pub fx: UniPolyQ,
    pub fy: UniPolyQ,
    pub d_input: u32,
    pub multiplicity_sum: usize,
}

impl Rur {
    /// Squarefree part of `f`, monic.
    pub fn f_bar(&self) -> UniPolyQ {
        squarefree_part(&self.f).unwrap_or_else(|_| UniPolyQ::one())
    }

    /// Largest coefficient bitsize over `f, f1, fX, fY`.
    pub fn bitsize(&self) -> u64 {
        [&self.f, &self.f1, &self.fx, &self.fy]
            .into_iter()
            .map(bitsize_q)
            .max()
            .unwrap_or(0)
    }

    /// Check the structural invariants; returns the first violated one.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let fb = self.f_bar();
        let nb = fb.deg();
        if self.f.lc() != Some(&Rational::from_integer(1.into())) {
            return Err("f is not monic".into());
        }
        if self.d_input > 0 && self.f.deg() > (self.d_input * self.d_input) as usize {
            return Err("deg f exceeds d^2".into());
        }
        if self.multiplicity_sum != self.f.deg() {
            return Err("multiplicity_sum != deg f".into());
        }
        if nb == 0 {
            return Ok(());
        }
        if !gcd_q(&self.f, &self.f1).is_constant() {
            return Err("gcd(f, f1) != 1".into());
        }
        if self.f1.degree() != Some(nb - 1)
            || *self.f1.lc().unwrap() != Rational::from_integer(BigInt::from(self.f.deg()))
        {
            return Err("f1 degree or leading coefficient".into());
        }
        if self.fx.deg() >= nb && !self.fx.is_zero() || self.fy.deg() >= nb && !self.fy.is_zero() {
            return Err("deg fX or deg fY too large".into());
        }
        if !self.linear_relation_holds() {
            return Err("fX + a fY - T f1 != 0 mod f_bar".into());
        }
        Ok(())
    }

    fn linear_relation_holds(&self) -> bool {
        let fb = self.f_bar();
        let lhs = &(&self.fx + &self.fy.scale(&self.a)) - &(&UniPolyQ::x() * &self.f1);
        fb.deg() == 0 || rem_q(&lhs, &fb).is_zero()
    }
}

/// Candidate RUR for the linear form `X + aY`, from a precomputed `R(T, S)`.
pub fn rur_candidate_from(rts: &ResultantTs, a: &Rational, d_input: u32) -> Result<Rur> {
    if !rts.admissible(a) {
        return Err(Error::BadParameter(format!("L_P({a}) L_Q({a}) = 0")));
    }
    let lra = eval_z_at(&rts.l_r, a);
    if lra.is_zero() {
        return Err(Error::BadParameter(format!("L_R({a}) = 0")));
    }
    let ra = rts.at(a);
    if ra.is_zero() {
        return Err(Error::NotZeroDimensional);
    }
    let f = ra.scale(&lra.recip());
    debug_assert_eq!(f.lc(), Some(&Rational::from_integer(1.into())));
    let fp = f.derivative();
    let g = gcd_q(&f, &fp);
    let g = if g.is_zero() { UniPolyQ::one() } else { g };
    let f1 = fp.div_rem(&g).0;
    let f_bar = f.div_rem(&g).0;
    let lr_prime = eval_z_at(&rts.l_r.derivative(), a);
    let num = &rts.d_at(a) - &f.scale(&lr_prime);
    let fy = num
        .div_rem(&g)
        .0
        .scale(&(lra.recip() * Rational::from_integer(FY_SIGN.into())));
    let fx = &(&(&UniPolyQ::x() * &f1) - &f_bar.scale(&Rational::from_integer(f.deg().into())))
        - &fy.scale(a);
    let multiplicity_sum = f.deg();
    Ok(Rur {
        a: a.clone(),
        f,
        f1,
        fx,
        fy,
        d_input,
        multiplicity_sum,
    })
}

/// Candidate RUR of `<P, Q>` for the linear form `X + aY`.
pub fn rur_candidate(p: &BiPoly, q: &BiPoly, a: &Rational) -> Result<Rur> {
    let rts = resultant_rts(p, q)?;
    rur_candidate_from(&rts, a, p.total_degree().max(q.total_degree()))
}

/// How to search for a separating form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Scan every integer in `[0, 2d^4]`; exact.
    Deterministic,
    /// Sample `trials` candidates from the same range (Monte Carlo).
    Randomized { seed: u64, trials: u32 },
}

/// Outcome of a separating-form search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatingForm {
    pub a: u64,
    /// Number of distinct roots of `R(T, a)`.
    pub n: usize,
    /// Candidates whose `N(a)` was computed.
    pub evaluated: usize,
}

/// `N(a)`: number of distinct roots of `R(T, a)`, or `None` if `a` is not admissible.
pub fn distinct_values(rts: &ResultantTs, a: &Rational) -> Option<usize> {
    if !rts.admissible(a) {
        return None;
    }
    let ra = rts.at(a);
    squarefree_part(&ra).ok().map(|p| p.deg())
}

fn search_range(d: u32) -> u64 {
    2 * (d as u64).pow(4)
}

/// Search over `R(T, S)` already computed.
pub fn search_separating_form(
    rts: &ResultantTs,
    d: u32,
    mode: SearchMode,
) -> Result<SeparatingForm> {
    let hi = search_range(d);
    let ceiling = rts.degree_t();
    let mut best: Option<SeparatingForm> = None;
    let mut evaluated = 0;
    let mut consider = |a: u64, best: &mut Option<SeparatingForm>| -> bool {
        let Some(n) = distinct_values(rts, &Rational::from_integer(a.into())) else {
            return false;
        };
        evaluated += 1;
        let better = match best {
            None => true,
            Some(b) => n > b.n || (n == b.n && a < b.a),
        };
        if better {
            *best = Some(SeparatingForm { a, n, evaluated: 0 });
        }
        n == ceiling
    };
    match mode {
        SearchMode::Deterministic => {
            for a in 0..=hi {
                if consider(a, &mut best) {
                    break;
                }
            }
        }
        SearchMode::Randomized { seed, trials } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let a = rng.gen_range(0..=hi);
                consider(a, &mut best);
            }
        }
    }
    let mut best = best.ok_or(Error::NoSeparatingForm)?;
    best.evaluated = evaluated;
    Ok(best)
}

/// Smallest integer `a` in `[0, 2d^4]` maximizing the number of distinct
/// values of `X + aY` on the solutions.
pub fn find_separating_form(p: &BiPoly, q: &BiPoly, mode: SearchMode) -> Result<u64> {
    let rts = resultant_rts(p, q)?;
    let d = p.total_degree().max(q.total_degree());
    Ok(search_separating_form(&rts, d, mode)?.a)
}

/// Result of [`verify_rur`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub satisfies_p: bool,
    pub satisfies_q: bool,
    pub linear_relation: bool,
    /// `deg f_bar` equals the maximal number of distinct values; `None` when not checked.
    pub separation: Option<bool>,
}

impl Verification {
    /// Conditions (i) and (ii).
    pub fn consistent(&self) -> bool {
        self.satisfies_p && self.satisfies_q && self.linear_relation
    }

    /// All conditions, including the separation witness.
    pub fn is_valid(&self) -> bool {
        self.consistent() && self.separation == Some(true)
    }
}

/// `f1^m P(fX/f1, fY/f1) mod f_bar` with `m = deg P`.
pub fn substitute_mod(r: &Rur, p: &BiPoly, f_bar: &UniPolyQ) -> UniPolyQ {
    if f_bar.deg() == 0 {
        return UniPolyQ::zero();
    }
    let m = p.total_degree();
    // common denominator D; the sum below is D^m times the wanted value
    let parts = [&r.fx, &r.fy, &r.f1].map(clear_denominators);
    let den = parts.iter().fold(BigInt::one(), |acc, (_, d)| acc.lcm(d));
    let [px, py, p1] = parts.map(|(num, d)| {
        let num = num.scale(&(&den / d));
        let mut v = vec![UniPolyZ::one()];
        for i in 1..=m as usize {
            let next = &v[i - 1] * &num;
            v.push(next);
        }
        v
    });
    let mut acc = UniPolyZ::zero();
    for (&(i, j), c) in p.terms() {
        let term = &(&px[i as usize] * &py[j as usize]) * &p1[(m - i - j) as usize];
        acc = &acc + &term.scale(c);
    }
    let scaled = to_q(&acc).scale(&Rational::new(BigInt::one(), num_traits::Pow::pow(&den, m)));
    rem_q(&scaled, f_bar)
}

fn check_consistency(r: &Rur, p: &BiPoly, q: &BiPoly) -> Verification {
    let fb = r.f_bar();
    Verification {
        satisfies_p: substitute_mod(r, p, &fb).is_zero(),
        satisfies_q: substitute_mod(r, q, &fb).is_zero(),
        linear_relation: r.linear_relation_holds(),
        separation: None,
    }
}

/// Conditions (i) `P` and `Q` vanish under the map modulo `f_bar`, and (ii)
/// the linear relation; the separation witness is not computed.
pub fn verify_rur_consistency(r: &Rur, p: &BiPoly, q: &BiPoly) -> Verification {
    check_consistency(r, p, q)
}

/// Full a-posteriori check, including that `deg f_bar` reaches the maximal
/// number of distinct values of a linear form over the solutions.
pub fn verify_rur(r: &Rur, p: &BiPoly, q: &BiPoly) -> Verification {
    let mut v = check_consistency(r, p, q);
    let d = p.total_degree().max(q.total_degree());
    v.separation = resultant_rts(p, q)
        .and_then(|rts| search_separating_form(&rts, d, SearchMode::Deterministic))
        .ok()
        .map(|s| s.n == r.f_bar().deg());
    v
}

/// Multiplicity of each real root of `f`, indexed by the sorted real roots.
pub fn multiplicities(r: &Rur) -> Result<Vec<(usize, u32)>> {
    let fb = r.f_bar();
    if fb.deg() == 0 {
        return Ok(Vec::new());
    }
    let roots = isolate_real_roots(&primitive_part_q(&fb)?)?;
    let factors: Vec<(crate::arith::UniPolyZ, u32)> = squarefree_decomposition(&r.f)?
        .iter()
        .map(|(f, m)| Ok((primitive_part_q(f)?, *m)))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(roots.len());
    for (idx, iv) in roots.iter().enumerate() {
        let m = factors.iter().find_map(|(fac, m)| {
            let hit = if iv.is_point() {
                sign_z_at(fac, &iv.lo) == 0
            } else {
                sign_z_at(fac, &iv.lo) * sign_z_at(fac, &iv.hi) < 0
            };
            hit.then_some(*m)
        });
        out.push((
            idx,
            m.expect("every root of f_bar lies on one squarefree factor"),
        ));
    }
    Ok(out)
}

/// Solve: separating form, RUR and its verification in one call.
pub fn solve_rur(p: &BiPoly, q: &BiPoly, mode: SearchMode) -> Result<(Rur, SeparatingForm)> {
    let rts = resultant_rts(p, q)?;
    let d = p.total_degree().max(q.total_degree());
    let sep = search_separating_form(&rts, d, mode)?;
    let rur = rur_candidate_from(&rts, &Rational::from_integer(sep.a.into()), d)?;
    Ok((rur, sep))
}

/// Convenience: `a` as `u64` if it is a nonnegative integer.
pub fn parameter_as_u64(a: &Rational) -> Option<u64> {
    a.is_integer().then(|| a.to_integer().to_u64()).flatten()
}
