// Counts a_n three ways (brute force, DP, series of A^(m)) and compares.
//
//     cargo run --example enumerate -- 3 10

use std::error::Error;

use bounded_catalan::cli::{oracle_sequence, series_sequence};
use bounded_catalan::combinatorics::DEFAULT_ORACLE_CAP;
use bounded_catalan::solver::dp_counts;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run(3, 10)
}

fn run(m: u32, n: usize) -> Result<(), Box<dyn Error>> {
    let dp = dp_counts(m, n)?.unrestricted();
    let series = series_sequence(m, n)?;
    println!("m = {m}");
    println!("{:>3} {:>12} {:>12} {:>12}", "n", "oracle", "dp", "series");
    let oracle = if n <= DEFAULT_ORACLE_CAP { Some(oracle_sequence(m, n, DEFAULT_ORACLE_CAP)?) } else { None };
    for i in 0..=n {
        let o = oracle.as_ref().map_or("-".to_string(), |o| o[i].to_string());
        println!("{i:>3} {o:>12} {:>12} {:>12}", dp[i], series[i]);
    }
    let agree = dp == series && oracle.as_ref().is_none_or(|o| o == &dp);
    println!("{}", if agree { "AGREE" } else { "DISAGREE" });
    if !agree {
        return Err("methods disagree".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    let mut args = std::env::args().skip(1).filter_map(|a| a.parse::<usize>().ok());
    let m = args.next().unwrap_or(3) as u32;
    let n = args.next().unwrap_or(10);
    run(m, n)
}
