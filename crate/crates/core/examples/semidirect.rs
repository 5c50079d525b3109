//! Builds C7 ⋊ Q8, with Q8 acting through inversion, and checks that its
//! class-preserving automorphisms are all inner.
//!
//! Usage: `cargo run --release --example semidirect`

use blackburn::autos::{outc_trivial, AutcOptions};
use blackburn::catalog::resolve;
use blackburn::products::semidirect_product;
use blackburn::{Action, GroupMap};

fn main() -> blackburn::Result<()> {
    let n = resolve("C7")?;
    let q = resolve("Q8")?;
    let invert = GroupMap::from_fn(n.order(), |x| n.inv(x));
    // both generators of Q8 invert C7, so their product centralizes it
    let gens: Vec<(usize, GroupMap)> = q.generators().into_iter().map(|s| (s, invert.clone())).collect();
    let action = Action::from_generators(&q, &n, &gens)?;
    let g = semidirect_product(&n, &q, &action)?;
    let rep = outc_trivial(&g, &AutcOptions::default())?;
    println!(
        "C7 ⋊ Q8 (both generators inverting): order {}, center order {}, |Aut_c| = {}, |Inn| = {}, Out_c trivial: {}",
        g.order(),
        g.center().order(),
        rep.autc_order,
        rep.inn_order,
        rep.outc_trivial
    );
    Ok(())
}
