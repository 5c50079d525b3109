//! Walks every normal subgroup of a Blackburn group and reports which
//! structural alternative it falls under, then checks the q-elements for
//! each prime q other than the prime of R(G).
//!
//! Usage: `cargo run --release --example normal_structure [name]` (default `Q8xC4xC3`)

use blackburn::catalog::resolve;
use blackburn::classify::{blackburn_prime, normal_subgroups, verify_fnsgp, verify_qdifp};
use blackburn::group::prime_divisors;

fn main() -> blackburn::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "Q8xC4xC3".into());
    let g = resolve(&name)?;
    let Some(p) = blackburn_prime(&g)? else {
        println!("{name} is not a Blackburn group");
        return Ok(());
    };
    println!("{name}: order {}, R(G) is a {p}-group", g.order());
    for n in normal_subgroups(&g)? {
        let v = verify_fnsgp(&g, &n)?;
        let extra = v
            .case_c_data
            .map(|c| format!(" exponent_check={} centralizing_check={}", c.exponent_check, c.centralizing_check))
            .unwrap_or_default();
        println!(
            "  |N|={:<3} p-complement order {:<3} dedekind={} case {:?}{extra}",
            n.order(),
            v.p_complement.order(),
            v.dedekind_complement,
            v.case
        );
    }
    for q in prime_divisors(g.order()).into_iter().filter(|&q| q != p) {
        let rep = verify_qdifp(&g, q)?;
        println!("  q={q}: {} q-elements, holds={}", rep.t_q_size, rep.holds());
    }
    Ok(())
}
