//! Serialized document shapes. Field order here is the field order on the wire.

use serde::Serialize;

use crate::arith::{Rational, UniPolyQ};
use crate::error::Error;
use crate::isolation::{Interval, IsolatingBox};
use crate::query::SignMethod;
use crate::rur::{Rur, Verification};

pub const SCHEMA: &str = "birur/1";

pub fn rat_str(r: &Rational) -> String {
    r.to_string()
}

pub fn poly_strs(p: &UniPolyQ) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".into()];
    }
    p.coeffs().iter().map(rat_str).collect()
}

fn interval_strs(iv: &Interval) -> [String; 2] {
    [rat_str(&iv.lo), rat_str(&iv.hi)]
}

#[derive(Debug, Serialize)]
pub struct Document {
    pub schema: &'static str,
    pub command: String,
    pub input: InputDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Body>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorDoc>,
}

#[derive(Debug, Serialize)]
pub struct InputDoc {
    #[serde(rename = "P")]
    pub p: String,
    #[serde(rename = "Q")]
    pub q: String,
    #[serde(rename = "F")]
    pub f: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ErrorDoc {
    pub code: &'static str,
    pub message: String,
}

impl From<&Error> for ErrorDoc {
    fn from(e: &Error) -> Self {
        ErrorDoc {
            code: e.code(),
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Body {
    Solve(SolveBody),
    Rur(RurBody),
    Sign(SignBody),
    Split(SplitBody),
    Radical(RadicalBody),
}

#[derive(Debug, Serialize)]
pub struct SeparatingDoc {
    pub a: String,
    /// "search" or "override"
    pub source: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinct_values: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct RurDoc {
    pub a: String,
    pub f: Vec<String>,
    pub f1: Vec<String>,
    #[serde(rename = "fX")]
    pub fx: Vec<String>,
    #[serde(rename = "fY")]
    pub fy: Vec<String>,
    pub degree: usize,
    pub bitsize: u64,
}

impl From<&Rur> for RurDoc {
    fn from(r: &Rur) -> Self {
        RurDoc {
            a: rat_str(&r.a),
            f: poly_strs(&r.f),
            f1: poly_strs(&r.f1),
            fx: poly_strs(&r.fx),
            fy: poly_strs(&r.fy),
            degree: r.f.deg(),
            bitsize: r.bitsize(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerificationDoc {
    pub satisfies_p: bool,
    pub satisfies_q: bool,
    pub linear_relation: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separation: Option<bool>,
}

impl From<&Verification> for VerificationDoc {
    fn from(v: &Verification) -> Self {
        VerificationDoc {
            satisfies_p: v.satisfies_p,
            satisfies_q: v.satisfies_q,
            linear_relation: v.linear_relation,
            separation: v.separation,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BoxDoc {
    pub root_index: usize,
    pub multiplicity: u32,
    pub t: [String; 2],
    pub x: [String; 2],
    pub y: [String; 2],
}

impl From<&IsolatingBox> for BoxDoc {
    fn from(b: &IsolatingBox) -> Self {
        BoxDoc {
            root_index: b.root_index,
            multiplicity: b.multiplicity,
            t: interval_strs(&b.t),
            x: interval_strs(&b.x),
            y: interval_strs(&b.y),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SolveBody {
    pub separating_form: SeparatingDoc,
    pub rur: RurDoc,
    pub verification: VerificationDoc,
    pub real_solutions: usize,
    pub boxes: Vec<BoxDoc>,
    pub multiplicities: Vec<(usize, u32)>,
}

#[derive(Debug, Serialize)]
pub struct RurBody {
    pub separating_form: SeparatingDoc,
    pub rur: RurDoc,
    pub verification: VerificationDoc,
}

#[derive(Debug, Serialize)]
pub struct SignEntry {
    #[serde(rename = "F")]
    pub f: String,
    pub method: SignMethod,
    pub signs: Vec<i8>,
    pub naive_agrees: bool,
}

#[derive(Debug, Serialize)]
pub struct SignBody {
    pub separating_form: SeparatingDoc,
    pub real_solutions: usize,
    pub queries: Vec<SignEntry>,
}

#[derive(Debug, Serialize)]
pub struct SplitEntry {
    #[serde(rename = "F")]
    pub f: String,
    pub f_zero: Vec<String>,
    pub f_nonzero: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct SplitBody {
    pub separating_form: SeparatingDoc,
    pub f_bar: Vec<String>,
    pub queries: Vec<SplitEntry>,
}

#[derive(Debug, Serialize)]
pub struct RadicalBody {
    pub separating_form: SeparatingDoc,
    pub rur: RurDoc,
    pub verification: VerificationDoc,
    pub boxes: Vec<BoxDoc>,
}
