//! Why X + Y does not separate the four points (+-1, +-1), and what does.

use birur::arith::{int, BiPoly};
use birur::rur::{find_separating_form, rur_candidate, verify_rur, SearchMode};

fn main() -> birur::Result<()> {
    let p = &BiPoly::x().pow(2) - &BiPoly::constant(1);
    let q = &BiPoly::y().pow(2) - &BiPoly::constant(1);

    let bad = rur_candidate(&p, &q, &int(1))?;
    let v = verify_rur(&bad, &p, &q);
    println!(
        "a = 1: f = {}, consistent = {}, separating = {:?}",
        bad.f,
        v.consistent(),
        v.separation
    );

    let a = find_separating_form(&p, &q, SearchMode::Deterministic)?;
    let good = rur_candidate(&p, &q, &int(a as i64))?;
    println!(
        "a = {a}: f = {}, valid = {}",
        good.f,
        verify_rur(&good, &p, &q).is_valid()
    );

    let r = find_separating_form(
        &p,
        &q,
        SearchMode::Randomized {
            seed: 7,
            trials: 16,
        },
    )?;
    println!("randomized search picked a = {r}");
    Ok(())
}
