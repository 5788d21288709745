//! Rewrites `data/exceptional.txt` from exhaustive cutting.

use flipgraph::oracles::render_exceptional_table;

fn main() -> flipgraph::Result<()> {
    let table = render_exceptional_table()?;
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/exceptional.txt");
    std::fs::write(path, &table)?;
    print!("{table}");
    Ok(())
}
