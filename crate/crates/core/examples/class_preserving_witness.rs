//! Builds the order-2187 group with a non-inner class-preserving
//! automorphism and verifies every claim about it.
//!
//! Usage: `cargo run --release --example class_preserving_witness [p]`
//! (`p = 3` builds all tables, `p = 5` checks the formulas only).

use blackburn::counterexample::verify_example;

fn main() {
    let p = std::env::args().nth(1).map(|a| a.parse().expect("p must be a number")).unwrap_or(3);
    match verify_example(p) {
        Ok(report) => {
            println!("{report}");
            if !report.passed() {
                std::process::exit(1);
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
