//! Subgroup counts, normal subgroups and `R(G)` for catalog groups.
//!
//! Usage: `cargo run --release --example subgroup_lattice [max_order]`

use std::time::Instant;

use blackburn::catalog::catalog_upto;
use blackburn::classify::r_of;

fn main() -> Result<(), blackburn::Error> {
    let max = std::env::args().nth(1).map(|a| a.parse().expect("numeric order")).unwrap_or(128);
    for entry in catalog_upto(max)? {
        let g = &entry.group;
        let start = Instant::now();
        let subs = g.all_subgroups()?;
        let normal = subs.iter().filter(|h| g.is_normal(h)).count();
        let r = r_of(g)?;
        println!(
            "{:<12} order {:<4} subgroups {:<5} normal {:<5} R {:<10} {:?}",
            entry.name,
            g.order(),
            subs.len(),
            normal,
            r.subgroup().map_or("undefined".to_string(), |s| format!("order {}", s.order())),
            start.elapsed()
        );
    }
    Ok(())
}
