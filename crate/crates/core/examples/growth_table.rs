// Component growth rates lambda_U, lambda_V, the growth constant alpha and
// the Catalan lower bound, one row per m, computed in parallel.
//
//     cargo run --release --example growth_table -- 2-10,20,50,100

use std::error::Error;

use bounded_catalan::cli::parse_m_list;
use bounded_catalan::growth::{growth_constants, GrowthReport, DEFAULT_TOL};
use rayon::prelude::*;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run("2-10,20")
}

fn run(list: &str) -> Result<(), Box<dyn Error>> {
    let ms = parse_m_list(list)?;
    let rows: Vec<GrowthReport> = ms.par_iter().map(|&m| growth_constants(m, DEFAULT_TOL)).collect::<Result<_, _>>()?;
    println!("{}", GrowthReport::CSV_HEADER);
    for r in &rows {
        println!("{}", r.csv_row());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run(&std::env::args().nth(1).unwrap_or_else(|| "2-10,20".into()))
}
