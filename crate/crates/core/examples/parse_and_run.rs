//! Drive the command dispatcher directly and print JSON.

use birur::cli::{parse_system, render_json, run, Command, Options};

fn main() -> birur::Result<()> {
    let input = "X^2 + Y^2 - 1\nX - Y\nX + 1/2\n";
    // the third line is not a polynomial with integer coefficients
    if let Err(e) = parse_system(input, Options::default()) {
        println!("rejected: {e}");
    }
    let sys = parse_system("x^2 + y^2 - 1\nx - y\n2*x - 1\n", Options::default())?;
    for cmd in [Command::Rur, Command::Sign] {
        print!("{}", render_json(&run(cmd, &sys)));
    }
    Ok(())
}
