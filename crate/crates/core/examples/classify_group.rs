//! Classifies catalog groups: Dedekind, Q-group, R(G) and the Blackburn
//! verdict with its 2-group shape.
//!
//! Usage: `cargo run --release --example classify_group [name | expression ...]`

use blackburn::catalog::{catalog_upto, resolve};
use blackburn::classify::{blackburn_2group_form, is_blackburn, is_dedekind, is_q_group, r_of};
use blackburn::group::prime_power_base;
use blackburn::Group;

fn describe(name: &str, g: &Group) -> blackburn::Result<()> {
    let r = r_of(g)?;
    let blackburn = is_blackburn(g)?;
    let form = if blackburn && prime_power_base(g.order()) == Some(2) {
        blackburn_2group_form(g).map(|f| f.to_string()).unwrap_or_else(|e| format!("({e})"))
    } else {
        String::new()
    };
    println!(
        "{name:<14} |G|={:<4} dedekind={:<5} q_group={:<5} R={:<10} blackburn={blackburn:<5} {form}",
        g.order(),
        is_dedekind(g),
        is_q_group(g),
        match r.subgroup() {
            Some(s) => format!("{}({})", r.tag(), s.order()),
            None => r.tag().to_string(),
        },
    );
    Ok(())
}

fn main() -> blackburn::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        for entry in catalog_upto(64)? {
            describe(entry.name, &entry.group)?;
        }
    } else {
        for a in &args {
            describe(a, &resolve(a)?)?;
        }
    }
    Ok(())
}
