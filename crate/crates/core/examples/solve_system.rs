//! Solve the circle/line intersection and print certified boxes.
//!
//! cargo run --example solve_system

use birur::cli::parse_polynomial;
use birur::isolation::isolate_boxes_with;
use birur::rur::{multiplicities, solve_rur, verify_rur, SearchMode};

fn main() -> birur::Result<()> {
    let p = parse_polynomial("X^2 + Y^2 - 1")?;
    let q = parse_polynomial("X - Y")?;
    let (rur, form) = solve_rur(&p, &q, SearchMode::Deterministic)?;
    println!(
        "separating form X + {}*Y ({} distinct values)",
        form.a, form.n
    );
    println!("f  = {}", rur.f);
    println!("f1 = {}", rur.f1);
    println!("fX = {}", rur.fx);
    println!("fY = {}", rur.fy);
    println!("valid: {}", verify_rur(&rur, &p, &q).is_valid());

    let w = "1/1000000".parse().unwrap();
    for b in isolate_boxes_with(&rur, Some(&w))? {
        println!("root {}: X in {}, Y in {}", b.root_index, b.x, b.y);
    }
    println!("multiplicities: {:?}", multiplicities(&rur)?);
    Ok(())
}
