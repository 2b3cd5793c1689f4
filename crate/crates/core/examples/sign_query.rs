//! Sign of a third polynomial at each real solution, two ways.

use birur::cli::parse_polynomial;
use birur::query::{sign_at_all, sign_at_all_naive};
use birur::rur::{solve_rur, SearchMode};

fn main() -> birur::Result<()> {
    let p = parse_polynomial("X^2 + Y^2 - 4")?;
    let q = parse_polynomial("X*Y - 1")?;
    let (rur, _) = solve_rur(&p, &q, SearchMode::Deterministic)?;
    for f in ["X", "X - Y", "X^2 - 3", "X*Y - 1"] {
        let fp = parse_polynomial(f)?;
        let s = sign_at_all(&rur, &fp)?;
        let n = sign_at_all_naive(&rur, &fp)?;
        assert_eq!(s.signs, n.signs);
        println!("{f:>8}: {:?}", s.signs);
    }
    Ok(())
}
