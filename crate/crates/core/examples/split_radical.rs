//! Restrict a solution set to where a constraint vanishes.

use birur::cli::parse_polynomial;
use birur::isolation::isolate_boxes;
use birur::query::{rur_of_radical, split_by_sign};
use birur::rur::{solve_rur, verify_rur_consistency, SearchMode};

fn main() -> birur::Result<()> {
    let p = parse_polynomial("(X^2 - 1)*(X - 3)")?;
    let q = parse_polynomial("Y^2 - X - 1")?;
    let f = parse_polynomial("X - 1")?;
    let (rur, _) = solve_rur(&p, &q, SearchMode::Deterministic)?;
    println!("f_bar     = {}", rur.f_bar());

    let s = split_by_sign(&rur, &f);
    println!("F = 0 at  {}", s.f_zero);
    println!("F != 0 at {}", s.f_nonzero);

    let rad = rur_of_radical(&rur, &p, &q, &f)?;
    println!(
        "radical: f = {}, consistent = {}",
        rad.f,
        verify_rur_consistency(&rad, &p, &q).consistent()
    );
    for b in isolate_boxes(&rad)? {
        println!("  X in {}, Y in {}", b.x, b.y);
    }
    Ok(())
}
