// Dominant pole, simplicity check and the constant kappa in
// a_n ~ kappa * alpha^n, compared against exact counts.
//
//     cargo run --example asymptotics -- 4

use std::error::Error;

use bounded_catalan::combinatorics::ln_biguint;
use bounded_catalan::growth::dominant_pole_asymptotics;
use bounded_catalan::solver::dp_counts;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run(4)
}

fn run(top: u32) -> Result<(), Box<dyn Error>> {
    for m in 2..=top {
        let p = dominant_pole_asymptotics(m, 1e-14)?;
        let alpha = 1.0 / p.rho.mid();
        print!("m = {m}: rho = {:.6}, alpha = {alpha:.6}", p.rho.mid());
        match p.kappa {
            Some(kappa) => {
                let a = dp_counts(m, 60)?.unrestricted();
                let ratio = (ln_biguint(&a[60]) - kappa.ln() - 60.0 * alpha.ln()).exp();
                println!(", kappa = {kappa:.6}, a_60 / (kappa alpha^60) = {ratio:.6}");
            }
            None => println!(", pole simplicity unknown"),
        }
        if let Some(next) = p.next_pole_modulus {
            println!("  next real positive pole at {next:.6}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run(std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4))
}
