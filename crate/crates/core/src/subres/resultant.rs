use num_bigint::BigInt;

use crate::arith::interp::{interpolate, ts_degree_s, ts_derivative_s, ts_eval_s, TsPoly};
use crate::arith::{BiPoly, Coeff, ExactDiv, Poly, Rational, TriPoly, UniPolyQ, UniPolyZ};
use crate::error::{Error, Result};

/// Resultant of two univariate polynomials over an integral domain, by the
/// subresultant PRS. The sign is that of the Sylvester determinant with the
/// rows of `a` first. Returns zero if either input is zero.
pub fn resultant<C: ExactDiv>(a: &Poly<C>, b: &Poly<C>) -> C {
    if a.is_zero() || b.is_zero() {
        return C::zero();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut negate = false;
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
        negate = a.deg() % 2 == 1 && b.deg() % 2 == 1;
    }
    let mut g = C::one();
    let mut h = C::one();
    while b.deg() > 0 {
        let delta = (a.deg() - b.deg()) as u32;
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            negate = !negate;
        }
        let r = a.prem(&b);
        if r.is_zero() {
            return C::zero();
        }
        let div = g.mul(&h.pow(delta));
        a = b;
        b = r
            .div_exact_scalar(&div)
            .expect("subresultant division is exact");
        g = a.lc().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant division is exact")
        };
    }
    let da = a.deg() as u32;
    let lb = b.lc().unwrap().clone();
    let out = if da == 0 {
        C::one()
    } else {
        lb.pow(da)
            .div_exact(&h.pow(da - 1))
            .expect("subresultant division is exact")
    };
    if negate {
        out.neg()
    } else {
        out
    }
}

/// `Res_Y(A, B)` for polynomials given as `Y`-polynomials with coefficients in `Z[T]`.
pub fn resultant_y(a: &Poly<UniPolyZ>, b: &Poly<UniPolyZ>) -> Result<UniPolyZ> {
    if a.deg() == 0 && b.deg() == 0 {
        return Err(Error::InvalidDegrees(
            "resultant_y needs a Y-dependent input".into(),
        ));
    }
    Ok(resultant(a, b))
}

/// Leading `Y`-coefficients `L_P(S)`, `L_Q(S)` of the sheared inputs.
pub fn leading_coefficients(p: &BiPoly, q: &BiPoly) -> (UniPolyZ, UniPolyZ) {
    (p.shear().lc_y(), q.shear().lc_y())
}

/// The trivariate resultant `R(T, S)` with its `S`-derivative and leading
/// `T`-coefficient `L_R(S)`.
#[derive(Clone, Debug)]
pub struct ResultantTs {
    pub r: TsPoly,
    pub dr: TsPoly,
    pub l_r: UniPolyZ,
    pub l_p: UniPolyZ,
    pub l_q: UniPolyZ,
}

impl ResultantTs {
    pub fn degree_t(&self) -> usize {
        self.r.deg()
    }

    pub fn degree_s(&self) -> usize {
        ts_degree_s(&self.r)
    }

    /// `R(T, a)`.
    pub fn at(&self, a: &Rational) -> UniPolyQ {
        ts_eval_s(&self.r, a)
    }

    /// `dR/dS(T, a)`.
    pub fn d_at(&self, a: &Rational) -> UniPolyQ {
        ts_eval_s(&self.dr, a)
    }

    /// Whether `L_P(a) L_Q(a) != 0`.
    pub fn admissible(&self, a: &Rational) -> bool {
        let z = |p: &UniPolyZ| crate::arith::sign_z_at(p, a) == 0;
        !z(&self.l_p) && !z(&self.l_q)
    }
}

fn node_sequence() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..).flat_map(|k| [k, -k]))
}

fn specialize_and_resultant(sp: &TriPoly, sq: &TriPoly, s: &BigInt) -> Result<UniPolyZ> {
    resultant_y(&sp.specialize_s(s), &sq.specialize_s(s))
}

/// `R(T, S) = Res_Y(P(T - SY, Y), Q(T - SY, Y))` by evaluation at integer
/// nodes avoiding the roots of `L_P L_Q`, followed by interpolation.
pub fn resultant_rts(p: &BiPoly, q: &BiPoly) -> Result<ResultantTs> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::NotZeroDimensional);
    }
    let sp = p.shear();
    let sq = q.shear();
    let l_p = sp.lc_y();
    let l_q = sq.lc_y();
    let d = p.total_degree().max(q.total_degree()) as usize;
    let needed = 2 * d * d + 1;
    let mut points = Vec::with_capacity(needed);
    for s in node_sequence() {
        if points.len() == needed {
            break;
        }
        let s = BigInt::from(s);
        if l_p.eval(&s).is_zero() || l_q.eval(&s).is_zero() {
            continue;
        }
        let v = specialize_and_resultant(&sp, &sq, &s)?;
        points.push((s, v));
    }
    let r = interpolate(&points)?;
    if r.is_zero() {
        return Err(Error::NotZeroDimensional);
    }
    let dr = ts_derivative_s(&r);
    let l_r = r.lc().unwrap().clone();
    Ok(ResultantTs {
        r,
        dr,
        l_r,
        l_p,
        l_q,
    })
}
