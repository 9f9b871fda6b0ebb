// Reads the linear recurrence off the reduced denominator and replays it
// against the DP for 50 further terms.
//
//     cargo run --example recurrence -- 3

use std::error::Error;

use bounded_catalan::poly::rational_string;
use bounded_catalan::solver::{dp_counts, recurrence, recurrence_order_bound};
use num_bigint::BigInt;
use num_rational::BigRational;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run(3)
}

fn run(m: u32) -> Result<(), Box<dyn Error>> {
    let rec = recurrence(m)?;
    let coeffs: Vec<String> = rec.lag_coeffs.iter().map(rational_string).collect();
    println!("m = {m}: order {} (bound {}), valid from n = {}", rec.order, recurrence_order_bound(m), rec.valid_from);
    println!("coefficients c_1..c_{}: ({})", rec.order, coeffs.join(", "));

    let len = rec.valid_from + 50;
    let dp: Vec<BigInt> = dp_counts(m, len)?.unrestricted().into_iter().map(BigInt::from).collect();
    let replay = rec.extend(&dp[..rec.valid_from], dp.len());
    let want: Vec<BigRational> = dp.iter().cloned().map(BigRational::from_integer).collect();
    if replay != want {
        return Err("recurrence replay disagrees with the DP".into());
    }
    println!("replayed a_{}..a_{} exactly; a_{} = {}", rec.valid_from, len, len, dp[len]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run(std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3))
}
