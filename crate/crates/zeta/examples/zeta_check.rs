//! Prints the quadrature check of the `ℝ^{p,q}` functional equation.
//!
//! `cargo run -p zeta --example zeta_check -- 2 1 -0.7`

use zeta::{numeric_zeta_check, GaussianTest, QuadratureOptions};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let p: usize = args.first().and_then(|a| a.parse().ok()).unwrap_or(2);
    let q: usize = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(1);
    let s: f64 = args.get(2).and_then(|a| a.parse().ok()).unwrap_or(-0.7);
    let g = GaussianTest::gaussian(p + q, 1.0).expect("valid Gaussian");
    match numeric_zeta_check(p, q, s, &g, &QuadratureOptions::default()) {
        Ok(r) => println!("{}", serde_json::to_string_pretty(&r).expect("serializable")),
        Err(e) => eprintln!("{}", e),
    }
}
