//! Generates random coprime actions H on N and finds, for each, an element
//! of N whose stabilizer is exactly the kernel of the action.
//!
//! Usage: `cargo run --release --example hn_witness [count] [seed]`

use blackburn::autos::{find_hn_witness, hn_instances};

fn main() -> blackburn::Result<()> {
    let mut args = std::env::args().skip(1);
    let count = args.next().map_or(10, |a| a.parse().expect("count"));
    let seed = args.next().map_or(7, |a| a.parse().expect("seed"));
    for inst in hn_instances(count, seed)? {
        let w = find_hn_witness(&inst.n, &inst.h, &inst.action)?;
        let stab = inst.action.stabilizer(w);
        println!(
            "{:<40} witness {w:<4} |stabilizer| = {:<3} equals kernel: {}",
            inst.label,
            stab.len(),
            stab == inst.action.kernel()
        );
    }
    Ok(())
}
