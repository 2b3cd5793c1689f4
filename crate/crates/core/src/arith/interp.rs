use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bipoly::BiPoly;
use super::poly::Poly;
use super::univariate::{UniPolyQ, UniPolyZ};
use crate::error::{Error, Result};

/// Polynomial in `(T, S)` stored by powers of `T`; entry `i` is the
/// coefficient of `T^i`, a polynomial in `S`.
pub type TsPoly = Poly<UniPolyZ>;

/// Integer Lagrange basis: `N_k = prod_{j != k} (S - s_j)` and weights
/// `w_k = N_k(s_k)`, so that `L_k = N_k / w_k`.
fn lagrange_basis(nodes: &[BigInt]) -> (Vec<UniPolyZ>, Vec<BigInt>) {
    nodes
        .iter()
        .enumerate()
        .map(|(k, xk)| {
            let mut num = UniPolyZ::one();
            let mut w = BigInt::one();
            for (j, xj) in nodes.iter().enumerate() {
                if j != k {
                    num = &num * &Poly::new(vec![-xj, BigInt::one()]);
                    w *= xk - xj;
                }
            }
            (num, w)
        })
        .unzip()
}

/// Interpolate polynomials in `T` given at integer nodes `S = s_k`. Returns
/// the unique polynomial of `S`-degree below the node count, scaled by the
/// lcm of its denominators (a no-op when the interpolant is integral).
pub fn interpolate(points: &[(BigInt, UniPolyZ)]) -> Result<TsPoly> {
    let mut seen = HashSet::new();
    for (n, _) in points {
        if !seen.insert(n) {
            return Err(Error::DuplicateNode(n.to_string()));
        }
    }
    if points.is_empty() {
        return Ok(TsPoly::zero());
    }
    let nodes: Vec<BigInt> = points.iter().map(|(n, _)| n.clone()).collect();
    let (basis, weights) = lagrange_basis(&nodes);
    let w = weights.iter().fold(BigInt::one(), |acc, x| acc.lcm(x));
    let cofactors: Vec<BigInt> = weights.iter().map(|x| &w / x).collect();
    let dt = points
        .iter()
        .map(|(_, v)| v.coeffs().len())
        .max()
        .unwrap_or(0);
    // row i times w, as an integer polynomial
    let mut rows: Vec<UniPolyZ> = Vec::with_capacity(dt);
    for i in 0..dt {
        let mut acc = vec![BigInt::zero(); nodes.len()];
        for (((_, v), l), m) in points.iter().zip(&basis).zip(&cofactors) {
            let c = v.coeff(i);
            if c.is_zero() {
                continue;
            }
            let f = c * m;
            for (a, b) in acc.iter_mut().zip(l.coeffs()) {
                *a += &f * b;
            }
        }
        rows.push(Poly::new(acc));
    }
    // scale by the lcm of the denominators of rows / w
    let mut lcm = BigInt::one();
    for r in &rows {
        for c in r.coeffs() {
            lcm = lcm.lcm(&(&w / c.gcd(&w)));
        }
    }
    Ok(Poly::new(
        rows.iter().map(|r| r.map(|c| c * &lcm / &w)).collect(),
    ))
}

/// Evaluate a [`TsPoly`] at `S = s`.
pub fn ts_eval_s(r: &TsPoly, s: &BigRational) -> UniPolyQ {
    Poly::new(
        r.coeffs()
            .iter()
            .map(|c| super::univariate::eval_z_at(c, s))
            .collect(),
    )
}

/// `dR/dS` of a [`TsPoly`].
pub fn ts_derivative_s(r: &TsPoly) -> TsPoly {
    Poly::new(r.coeffs().iter().map(|c| c.derivative()).collect())
}

/// Degree in `S`.
pub fn ts_degree_s(r: &TsPoly) -> usize {
    r.coeffs().iter().map(|c| c.deg()).max().unwrap_or(0)
}

/// Rename `T -> X`, `S -> Y`.
pub fn ts_to_bipoly(r: &TsPoly) -> BiPoly {
    BiPoly::from_terms(r.coeffs().iter().enumerate().flat_map(|(i, c)| {
        c.coeffs()
            .iter()
            .enumerate()
            .map(move |(j, v)| ((i as u32, j as u32), v.clone()))
    }))
}
