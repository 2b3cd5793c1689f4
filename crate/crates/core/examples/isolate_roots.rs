//! Real root isolation, refinement and interval evaluation.

use birur::arith::{rat, to_q, zpoly};
use birur::isolation::{
    interval_eval, isolate_real_roots, refine_interval, root_separation_lower_bound,
};

fn main() -> birur::Result<()> {
    // (2T - 1)(T^2 - 2)(T + 3)
    let f = &(&zpoly(&[-1, 2]) * &zpoly(&[-2, 0, 1])) * &zpoly(&[3, 1]);
    println!("f = {f}");
    println!("separation bound: {}", root_separation_lower_bound(&f));
    for iv in isolate_real_roots(&f)? {
        let fine = refine_interval(&f, &iv, &rat(1, 1 << 20))?;
        println!(
            "{iv} -> {fine}, f over it: {}",
            interval_eval(&to_q(&f), &fine)
        );
    }
    Ok(())
}
