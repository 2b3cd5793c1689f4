use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{BiPoly, Rational, UniPolyQ};
use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInput(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    /// `max(|lo|, |hi|)`
    pub fn magnitude(&self) -> Rational {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Closed intervals sharing at least one point.
    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn scale(&self, c: &Rational) -> Interval {
        let a = c * &self.lo;
        let b = c * &self.hi;
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let c = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    /// Exact range of `x^n` over the interval.
    pub fn pow(&self, n: u32) -> Interval {
        if n == 0 {
            return Interval::point(Rational::one());
        }
        let p = |x: &Rational| num_traits::Pow::pow(x, n as i32);
        if n % 2 == 1 {
            return Interval {
                lo: p(&self.lo),
                hi: p(&self.hi),
            };
        }
        if self.contains_zero() {
            Interval {
                lo: Rational::zero(),
                hi: p(&self.magnitude()),
            }
        } else {
            let (a, b) = (p(&self.lo), p(&self.hi));
            Interval {
                lo: a.clone().min(b.clone()),
                hi: a.max(b),
            }
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

static EVAL_CALLS: AtomicU64 = AtomicU64::new(0);
static EVAL_VIOLATIONS: AtomicU64 = AtomicU64::new(0);

/// `(calls, width-bound violations)` of [`interval_eval`] in this process.
pub fn interval_eval_stats() -> (u64, u64) {
    (
        EVAL_CALLS.load(Ordering::Relaxed),
        EVAL_VIOLATIONS.load(Ordering::Relaxed),
    )
}

fn ceil_log2(x: &Rational) -> i64 {
    // smallest e with x <= 2^e, for x > 0
    let mut e: i64 = x.numer().bits() as i64 - x.denom().bits() as i64;
    let two = Rational::from_integer(BigInt::from(2));
    let pow = |e: i64| num_traits::Pow::pow(&two, e as i32);
    while *x > pow(e) {
        e += 1;
    }
    while *x <= pow(e - 1) {
        e -= 1;
    }
    e
}

/// The a-priori width bound `2^tau * w(J) * d^2 * 2^(d*sigma)` for evaluating
/// `f` over `J`, where `|c_i| <= 2^tau` and `|J| <= 2^sigma`, `sigma >= 0`.
pub fn footnote_width_bound(f: &UniPolyQ, j: &Interval) -> Rational {
    let Some(d) = f.degree() else {
        return Rational::zero();
    };
    let max_c = f.coeffs().iter().map(|c| c.abs()).max().unwrap();
    let tau = ceil_log2(&max_c).max(0);
    let mag = j.magnitude();
    let sigma = if mag.is_zero() {
        0
    } else {
        ceil_log2(&mag).max(0)
    };
    let two = Rational::from_integer(BigInt::from(2));
    let d = d as i64;
    num_traits::Pow::pow(&two, (tau + d * sigma) as i32)
        * j.width()
        * Rational::from_integer(BigInt::from(d * d))
}

/// Interval enclosure of `f(J)`, evaluated in power form with exact ranges of
/// the monomials.
pub fn interval_eval(f: &UniPolyQ, j: &Interval) -> Interval {
    let mut acc = Interval::point(Rational::zero());
    for (i, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&j.pow(i as u32).scale(c));
    }
    EVAL_CALLS.fetch_add(1, Ordering::Relaxed);
    let ok = acc.width() <= footnote_width_bound(f, j);
    if !ok {
        EVAL_VIOLATIONS.fetch_add(1, Ordering::Relaxed);
    }
    debug_assert!(ok, "interval_eval width bound violated");
    acc
}

/// Enclosure of `P(X, Y)` over a box, nesting univariate evaluations.
pub fn interval_eval_bivariate(p: &BiPoly, x: &Interval, y: &Interval) -> Interval {
    let rows = p.as_poly_in_y();
    let mut acc = Interval::point(Rational::zero());
    for (j, row) in rows.coeffs().iter().enumerate() {
        if row.is_zero() {
            continue;
        }
        let rq = crate::arith::to_q(row);
        let cx = interval_eval(&rq, x);
        acc = acc.add(&cx.mul(&y.pow(j as u32)));
    }
    acc
}
