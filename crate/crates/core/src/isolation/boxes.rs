use num_bigint::BigInt;
use num_traits::One;

use super::interval::{interval_eval, Interval};
use super::roots::{isolate_real_roots, refine_interval};
use crate::arith::{mod_inverse, primitive_part_q, rem_q, Rational, UniPolyQ, UniPolyZ};
use crate::error::Result;
use crate::rur::{multiplicities, Rur};

/// Box certified to contain exactly one real solution, together with the
/// isolating interval `t` of the corresponding root of `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingBox {
    pub t: Interval,
    pub x: Interval,
    pub y: Interval,
    pub root_index: usize,
    pub multiplicity: u32,
}

impl IsolatingBox {
    pub fn disjoint_from(&self, other: &IsolatingBox) -> bool {
        !self.x.overlaps(&other.x) || !self.y.overlaps(&other.y)
    }

    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        self.x.contains(x) && self.y.contains(y)
    }
}

/// Polynomial coordinate maps `gX = fX / f1`, `gY = fY / f1` modulo `f_bar`.
pub fn coordinate_maps(r: &Rur) -> Result<(UniPolyQ, UniPolyQ, UniPolyQ)> {
    let fb = r.f_bar();
    let inv = mod_inverse(&r.f1, &fb)?;
    let gx = rem_q(&(&r.fx * &inv), &fb);
    let gy = rem_q(&(&r.fy * &inv), &fb);
    Ok((fb, gx, gy))
}

fn two_pow_neg_two_pow(k: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << (1u64 << k))
}

/// Smallest `k` with `2^(-2^k)` below `w`.
fn initial_k(w: &Rational) -> u32 {
    let mut k = 0;
    while two_pow_neg_two_pow(k) >= *w {
        k += 1;
    }
    k
}

struct Cell {
    t: Interval,
    k: u32,
    x: Interval,
    y: Interval,
}

impl Cell {
    fn eval(t: Interval, gx: &UniPolyQ, gy: &UniPolyQ) -> Cell {
        let k = if t.is_point() {
            0
        } else {
            initial_k(&t.width())
        };
        let x = interval_eval(gx, &t);
        let y = interval_eval(gy, &t);
        Cell { t, k, x, y }
    }

    fn refine(&mut self, f: &UniPolyZ, gx: &UniPolyQ, gy: &UniPolyQ) -> Result<()> {
        if self.t.is_point() {
            return Ok(());
        }
        let target = two_pow_neg_two_pow(self.k);
        self.t = refine_interval(f, &self.t, &target)?;
        self.k += 1;
        self.x = interval_eval(gx, &self.t);
        self.y = interval_eval(gy, &self.t);
        Ok(())
    }

    fn disjoint(&self, other: &Cell) -> bool {
        !self.x.overlaps(&other.x) || !self.y.overlaps(&other.y)
    }

    fn max_width(&self) -> Rational {
        self.x.width().max(self.y.width())
    }
}

/// Isolating boxes for the real solutions described by `r`, sorted by root.
pub fn isolate_boxes(r: &Rur) -> Result<Vec<IsolatingBox>> {
    isolate_boxes_with(r, None)
}

/// Like [`isolate_boxes`], refining further until every box side is at most
/// `max_width` when given.
pub fn isolate_boxes_with(r: &Rur, max_width: Option<&Rational>) -> Result<Vec<IsolatingBox>> {
    let (fb, gx, gy) = coordinate_maps_or_trivial(r)?;
    if fb.deg() == 0 {
        return Ok(Vec::new());
    }
    let f = primitive_part_q(&fb)?;
    let roots = isolate_real_roots(&f)?;
    let mults = multiplicities(r)?;
    let mut cells: Vec<Cell> = roots.into_iter().map(|t| Cell::eval(t, &gx, &gy)).collect();
    loop {
        let n = cells.len();
        let mut bad = vec![false; n];
        for i in 0..n {
            for j in (i + 1)..n {
                if !cells[i].disjoint(&cells[j]) {
                    bad[i] = true;
                    bad[j] = true;
                }
            }
        }
        if !bad.iter().any(|&b| b) {
            break;
        }
        for (c, b) in cells.iter_mut().zip(bad) {
            if b {
                c.refine(&f, &gx, &gy)?;
            }
        }
    }
    if let Some(w) = max_width {
        for c in cells.iter_mut() {
            while !c.t.is_point() && c.max_width() > *w {
                c.refine(&f, &gx, &gy)?;
            }
        }
    }
    Ok(cells
        .into_iter()
        .zip(mults)
        .map(|(c, (root_index, multiplicity))| IsolatingBox {
            t: c.t,
            x: c.x,
            y: c.y,
            root_index,
            multiplicity,
        })
        .collect())
}

fn coordinate_maps_or_trivial(r: &Rur) -> Result<(UniPolyQ, UniPolyQ, UniPolyQ)> {
    let fb = r.f_bar();
    if fb.deg() == 0 {
        return Ok((fb, UniPolyQ::zero(), UniPolyQ::zero()));
    }
    coordinate_maps(r)
}
