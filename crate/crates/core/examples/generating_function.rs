// Solves the endpoint-state system exactly and prints A^(m)(x) in lowest
// terms together with its first coefficients.
//
//     cargo run --example generating_function -- 3

use std::error::Error;

use bounded_catalan::solver::generating_function;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run(3)
}

fn run(m: u32) -> Result<(), Box<dyn Error>> {
    for m in 1..=m {
        let gf = generating_function(m)?;
        let terms: Vec<String> = gf.series_integers(12)?.iter().map(ToString::to_string).collect();
        println!("A^({m})(x) = {gf}");
        println!("  deg num = {}, deg den = {}", gf.num().degree().unwrap_or(0), gf.den().degree().unwrap_or(0));
        println!("  {} ...", terms.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run(std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3))
}
