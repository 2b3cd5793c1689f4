//! Resultants and Sylvester-Habicht sequences of univariate polynomials.

use birur::arith::{to_q, zpoly};
use birur::subres::{resultant, signed_remainder_sequence, sylvester_habicht};

fn main() -> birur::Result<()> {
    let a = zpoly(&[-2, 0, 1]);
    let b = zpoly(&[0, 2]);
    println!("Res(T^2 - 2, 2T) = {}", resultant(&a, &b));

    let p = zpoly(&[3, -1, -3, 1]); // (T - 1)(T + 1)(T - 3)
    let q = p.derivative();
    let seq = sylvester_habicht(&p, &q)?;
    for (k, s) in seq.indices.iter().zip(&seq.polys) {
        println!("SylH_{k} = {s}");
    }
    println!("resultant via SylH: {}", seq.resultant());
    println!(
        "signed remainders: {}",
        signed_remainder_sequence(&to_q(&p), &to_q(&q)).len()
    );
    Ok(())
}
