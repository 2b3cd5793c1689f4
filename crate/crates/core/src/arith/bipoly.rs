use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::coeff::int_bitsize;
use super::poly::Poly;
use super::univariate::{Rational, UniPolyQ, UniPolyZ};

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Sparse bivariate integer polynomial in `X`, `Y`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_terms([((0, 0), c.into())])
    }

    pub fn x() -> Self {
        Self::from_terms([((1, 0), BigInt::one())])
    }

    pub fn y() -> Self {
        Self::from_terms([((0, 1), BigInt::one())])
    }

    /// Build from `((exp_x, exp_y), coeff)` pairs; repeated monomials are summed.
    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), BigInt)>) -> Self {
        let mut p = BiPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_i64_terms(terms: &[((u32, u32), i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    fn add_term(&mut self, e: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, ex: u32, ey: u32) -> BigInt {
        self.terms.get(&(ex, ey)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == (0, 0))
    }

    /// Total degree; 0 for constants and for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|(a, b)| a + b).max().unwrap_or(0)
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|e| e.0).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.terms.keys().map(|e| e.1).max().unwrap_or(0)
    }

    /// Maximum coefficient bitsize.
    pub fn bitsize(&self) -> u64 {
        self.terms.values().map(int_bitsize).max().unwrap_or(0)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = BiPoly::constant(1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            acc += BigRational::from_integer(c.clone())
                * num_traits::Pow::pow(x, i as i32)
                * num_traits::Pow::pow(y, j as i32);
        }
        acc
    }

    /// `P(T - S*Y, Y)` expanded.
    pub fn shear(&self) -> TriPoly {
        let mut out = TriPoly::zero();
        for (&(i, j), c) in &self.terms {
            for k in 0..=i {
                let mut coeff = c * binomial(i, k);
                if k % 2 == 1 {
                    coeff = -coeff;
                }
                out.add_term((i - k, k, j + k), coeff);
            }
        }
        out
    }

    /// Coefficients `a_i(T)` of `P(T - a*Y, Y) = sum_i a_i(T) Y^i`.
    pub fn shear_at(&self, a: &Rational) -> Vec<UniPolyQ> {
        let deg = self.terms.keys().map(|&(i, j)| i + j).max().unwrap_or(0) as usize;
        let mut out = vec![vec![Rational::zero(); deg + 1]; deg + 1];
        let neg_a = -a;
        for (&(i, j), c) in &self.terms {
            for k in 0..=i {
                let coeff = BigRational::from_integer(c * binomial(i, k))
                    * num_traits::Pow::pow(&neg_a, k as i32);
                out[(j + k) as usize][(i - k) as usize] += coeff;
            }
        }
        let mut polys: Vec<UniPolyQ> = out.into_iter().map(Poly::new).collect();
        while polys.last().is_some_and(|p| p.is_zero()) {
            polys.pop();
        }
        polys
    }

    /// View as a polynomial in `Y` with coefficients in `Z[X]`.
    pub fn as_poly_in_y(&self) -> Poly<UniPolyZ> {
        let mut rows = vec![Vec::new(); self.degree_y() as usize + 1];
        for (&(i, j), c) in &self.terms {
            let row = &mut rows[j as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, BigInt::zero());
            }
            row[i as usize] = c.clone();
        }
        Poly::new(rows.into_iter().map(Poly::new).collect())
    }

    /// Exchange the roles of `X` and `Y`.
    pub fn swap_xy(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())))
    }

    /// Random dense polynomial of total degree `d` with coefficients of
    /// bitsize at most `tau`. Every monomial is present with probability
    /// `density`; the `X^d` and `Y^d` terms are always nonzero.
    pub fn random<R: Rng>(rng: &mut R, d: u32, tau: u32, density: f64) -> Self {
        let bound = (BigInt::one() << tau) - 1;
        let bound_i = i64::try_from(&bound).unwrap_or(i64::MAX);
        let sample = |rng: &mut R, nonzero: bool| loop {
            let v = rng.gen_range(-bound_i..=bound_i);
            if !nonzero || v != 0 {
                return BigInt::from(v);
            }
        };
        let mut p = BiPoly::zero();
        for i in 0..=d {
            for j in 0..=(d - i) {
                let forced = (i == d && j == 0) || (i == 0 && j == d);
                if forced || rng.gen_bool(density) {
                    let c = sample(rng, forced);
                    p.add_term((i, j), c);
                }
            }
        }
        p
    }
}

impl fmt::Display for BiPoly {
    /// Parser-compatible rendering, highest total degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        for (n, e) in keys.iter().enumerate() {
            let c = &self.terms[e];
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !abs.is_one() || *e == (0, 0) {
                factors.push(abs.to_string());
            }
            for (v, k) in [("X", e.0), ("Y", e.1)] {
                match k {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^{k}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                out.add_term((a + x, b + y), c * d);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

/// Sparse trivariate integer polynomial in `(T, S, Y)`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct TriPoly {
    terms: BTreeMap<(u32, u32, u32), BigInt>,
}

impl TriPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    fn add_term(&mut self, e: (u32, u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32, u32), BigInt)>) -> Self {
        let mut p = TriPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_t(&self) -> u32 {
        self.terms.keys().map(|e| e.0).max().unwrap_or(0)
    }

    pub fn degree_s(&self) -> u32 {
        self.terms.keys().map(|e| e.1).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.terms.keys().map(|e| e.2).max().unwrap_or(0)
    }

    pub fn bitsize(&self) -> u64 {
        self.terms.values().map(int_bitsize).max().unwrap_or(0)
    }

    /// Specialize `S = s`, giving a polynomial in `Y` with coefficients in `Z[T]`.
    pub fn specialize_s(&self, s: &BigInt) -> Poly<UniPolyZ> {
        let dy = self.degree_y() as usize;
        let dt = self.degree_t() as usize;
        let mut rows = vec![vec![BigInt::zero(); dt + 1]; dy + 1];
        for (&(et, es, ey), c) in &self.terms {
            rows[ey as usize][et as usize] += c * num_traits::Pow::pow(s, es);
        }
        Poly::new(rows.into_iter().map(Poly::new).collect())
    }

    /// `S = 0`, renaming `T` back to `X`.
    pub fn at_s_zero(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| e.1 == 0)
                .map(|(&(et, _, ey), c)| ((et, ey), c.clone())),
        )
    }

    /// Leading coefficient in `Y`, as a polynomial in `S`. Panics if it
    /// depends on `T` (never the case for sheared polynomials).
    pub fn lc_y(&self) -> UniPolyZ {
        let dy = self.degree_y();
        let mut coeffs = vec![BigInt::zero(); self.degree_s() as usize + 1];
        for (&(et, es, ey), c) in &self.terms {
            if ey == dy {
                assert_eq!(et, 0, "leading Y-coefficient depends on T");
                coeffs[es as usize] += c;
            }
        }
        Poly::new(coeffs)
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(t, s, y), c)| format!("({c})*T^{t}*S^{s}*Y^{y}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle() -> BiPoly {
        BiPoly::from_i64_terms(&[((2, 0), 1), ((0, 2), 1), ((0, 0), -1)])
    }

    #[test]
    fn shear_examples() {
        let x = BiPoly::x();
        let sx = x.shear();
        let expect = TriPoly::from_terms([((1, 0, 0), 1.into()), ((0, 1, 1), (-1).into())]);
        assert_eq!(sx, expect);
        let x2 = x.pow(2).shear();
        let expect = TriPoly::from_terms([
            ((2, 0, 0), 1.into()),
            ((1, 1, 1), (-2).into()),
            ((0, 2, 2), 1.into()),
        ]);
        assert_eq!(x2, expect);
        let c = circle().shear();
        let expect = TriPoly::from_terms([
            ((0, 2, 2), 1.into()),
            ((0, 0, 2), 1.into()),
            ((1, 1, 1), (-2).into()),
            ((2, 0, 0), 1.into()),
            ((0, 0, 0), (-1).into()),
        ]);
        assert_eq!(c, expect);
        assert_eq!(c.at_s_zero(), circle());
    }

    #[test]
    fn lc_y_examples() {
        assert_eq!(
            circle().shear().lc_y(),
            super::super::univariate::zpoly(&[1, 0, 1])
        );
        let line = &BiPoly::x() - &BiPoly::y();
        assert_eq!(
            line.shear().lc_y(),
            super::super::univariate::zpoly(&[-1, -1])
        );
    }

    #[test]
    fn display_roundtrip_shape() {
        assert_eq!(circle().to_string(), "X^2 + Y^2 - 1");
        let p = BiPoly::from_i64_terms(&[((1, 1), -3), ((0, 0), 5), ((1, 0), 1)]);
        assert_eq!(p.to_string(), "-3*X*Y + X + 5");
    }

    #[test]
    fn shear_at_matches_shear() {
        let p = circle();
        let a = Rational::from_integer(2.into());
        let coeffs = p.shear_at(&a);
        let spec = p.shear().specialize_s(&2.into());
        assert_eq!(coeffs.len(), spec.coeffs().len());
        for (c, s) in coeffs.iter().zip(spec.coeffs()) {
            assert_eq!(*c, super::super::univariate::to_q(s));
        }
    }
}
