//! Resultants and Sylvester-Habicht sequences.

pub mod resultant;
pub mod sylh;

pub use resultant::{leading_coefficients, resultant, resultant_rts, resultant_y, ResultantTs};
pub use sylh::{
    eval_sylh_w, eval_sylh_w_many, sign_variation_w, sign_variations, signed_remainder_sequence,
    sylvester_habicht, SylHSeq, Transition,
};
