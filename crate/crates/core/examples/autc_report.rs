//! Enumerates class-preserving automorphisms and compares them with the
//! inner ones.
//!
//! Usage: `cargo run --release --example autc_report [catalog name | ga]`
//! where `ga` selects the order-2187 group carrying a non-inner one.

use std::time::Instant;

use blackburn::autos::{outc_trivial, AutcOptions};
use blackburn::catalog::{catalog_upto, resolve};
use blackburn::counterexample::{build_bundle, extend_to_ga};

fn main() -> Result<(), blackburn::Error> {
    let opts = AutcOptions::default();
    match std::env::args().nth(1).as_deref() {
        Some("ga") => {
            let mut b = build_bundle(3)?;
            extend_to_ga(&mut b)?;
            let ga = b.ga.expect("extended");
            let start = Instant::now();
            let rep = outc_trivial(&ga, &opts)?;
            println!(
                "GA: |Aut_c| = {}, |Inn| = {}, non-inner witness: {}, nodes {} ({:?})",
                rep.autc_order,
                rep.inn_order,
                rep.witness.is_some(),
                rep.nodes,
                start.elapsed()
            );
        }
        Some(name) => {
            let g = resolve(name)?;
            let rep = outc_trivial(&g, &opts)?;
            println!(
                "{name}: |Aut_c| = {}, |Inn| = {}, Out_c trivial: {}",
                rep.autc_order, rep.inn_order, rep.outc_trivial
            );
        }
        None => {
            for entry in catalog_upto(128)? {
                let start = Instant::now();
                let rep = outc_trivial(&entry.group, &opts)?;
                println!(
                    "{:<12} |Aut_c| = {:<6} |Inn| = {:<6} Out_c trivial: {:<5} nodes {:<8} {:?}",
                    entry.name,
                    rep.autc_order,
                    rep.inn_order,
                    rep.outc_trivial,
                    rep.nodes,
                    start.elapsed()
                );
            }
        }
    }
    Ok(())
}
