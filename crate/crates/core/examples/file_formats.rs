//! Reads a group from a cayley or permgen file (or a catalog name), prints
//! its class sizes and writes it back out in cayley format.
//!
//! Usage: `cargo run --release --example file_formats [path | name]`

use blackburn::cli::{serialize_cayley, GroupSource};
use blackburn::Limits;

fn main() -> blackburn::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "S3".into());
    let source = GroupSource::from_arg(&arg)?;
    let g = source.load(&Limits::default())?;
    let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    println!("# {arg}: order {}, class sizes {sizes:?}", g.order());
    print!("{}", serialize_cayley(&g));
    Ok(())
}
