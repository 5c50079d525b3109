//! Checks the pointwise-power property on small abelian p-groups.
//!
//! Usage: `cargo run --example ispower_harness [max_order_2] [max_order_3]`

use blackburn::autos::ispower_harness;
use blackburn::catalog::abelian_p_groups;

fn main() -> Result<(), blackburn::Error> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("numeric order bound"));
    let max2 = args.next().unwrap_or(32);
    let max3 = args.next().unwrap_or(81);
    let mut groups = abelian_p_groups(2, max2)?;
    groups.extend(abelian_p_groups(3, max3)?);
    let report = ispower_harness(&groups, 0)?;
    for g in &report.groups {
        println!(
            "{:<14} |Aut|={:<9} p-elements={:<8} alpha reps={:<4} pairs={}",
            g.name, g.automorphisms, g.p_automorphisms, g.alpha_representatives, g.pairs
        );
    }
    println!("no counterexample among {} pairs", report.pairs());
    Ok(())
}
