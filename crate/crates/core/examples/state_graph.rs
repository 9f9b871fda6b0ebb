// Builds the dependency graph, lists its cyclic components with their
// determinants and weighted periods, and writes Graphviz to stdout.
//
//     cargo run --example state_graph -- 2 > gamma2.dot

use std::error::Error;

use bounded_catalan::system::{build_system, component_matrix, output_accessible, to_dot};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run(2)
}

fn run(m: u32) -> Result<(), Box<dyn Error>> {
    let sys = build_system(m)?;
    eprintln!("m = {m}: {} states, {} edges, {} components", sys.states().len(), sys.edges().len(), sys.components().len());
    for c in sys.cyclic_components() {
        let members: Vec<String> = c.members.iter().map(|&s| sys.states()[s].to_string()).collect();
        eprintln!(
            "  {}: {} states, period {}, reaches output: {}",
            c.tag,
            c.len(),
            c.weighted_period.unwrap_or(0),
            output_accessible(&sys, c)
        );
        if c.len() <= 12 {
            eprintln!("    members {}", members.join(" "));
            eprintln!("    det(I - W) = {}", component_matrix(&sys, c).characteristic_determinant());
        }
    }
    print!("{}", to_dot(&sys));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run(std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2))
}
