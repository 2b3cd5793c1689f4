//! A tangency: the parabola Y = X^2 touches the line Y = 0 with multiplicity 2.

use birur::cli::parse_polynomial;
use birur::isolation::isolate_boxes;
use birur::rur::{solve_rur, SearchMode};

fn main() -> birur::Result<()> {
    for (p, q) in [
        ("Y - X^2", "Y"),
        ("Y^2 - X^3", "Y - X"),
        ("(X - 1)^2 + Y^2 - 1", "X"),
    ] {
        let p = parse_polynomial(p)?;
        let q = parse_polynomial(q)?;
        let (rur, _) = solve_rur(&p, &q, SearchMode::Deterministic)?;
        println!("{p} = {q} = 0: f = {}", rur.f);
        for b in isolate_boxes(&rur)? {
            println!(
                "  X in {}, Y in {}, multiplicity {}",
                b.x, b.y, b.multiplicity
            );
        }
    }
    Ok(())
}
