//! Grade of the sampled basis against the number of distinct eigenvalues.
//!
//! `cargo run --release --example table1 -- [seed]`

use krylov_sampling::cli::{table1_rows, RunConfig};

fn main() -> krylov_sampling::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    let cfg = RunConfig {
        seed,
        ..RunConfig::default()
    };
    println!("seed {seed}");
    println!("{:<6} {:>3} {:>3} {:>9}", "H", "m", "d", "expected");
    for row in table1_rows(&cfg)? {
        let mark = if row.matches { "" } else { "  <-- mismatch" };
        println!("{:<6} {:>3} {:>3} {:>9}{mark}", row.name, row.m, row.d, row.expected);
    }
    Ok(())
}
