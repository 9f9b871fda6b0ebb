// The exact polynomial layer on its own: gcd, reduction, Bareiss
// determinants and Sturm root isolation.
//
//     cargo run --example polynomial_toolkit

use std::error::Error;

use bounded_catalan::poly::{poly_gcd, real_roots_positive, rf_reduce, ExactPoly, PolyMatrix};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = &ExactPoly::from_integers(&[1, -1]) * &ExactPoly::from_integers(&[1, -1, 0, -1]);
    let b = &ExactPoly::from_integers(&[1, -1]) * &ExactPoly::from_integers(&[1, 1]);
    println!("gcd({a}, {b}) = {}", poly_gcd(&a, &b)?);
    println!("reduced: {}", rf_reduce(&b, &a)?);

    let x = ExactPoly::x();
    let x3 = x.pow(3);
    let w = PolyMatrix {
        rows: vec![vec![ExactPoly::zero(), x.clone()], vec![x3, x.clone()]],
    };
    let det = w.identity_minus().determinant();
    println!("det(I - W) = {det}");
    for r in real_roots_positive(&det, 0.0, 1.0, 1e-15) {
        println!("  root {:.15} (bracket width {:.1e})", r.midpoint(), r.width());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
