//! Exhaustive BP posets against the pattern algorithm on random permutations.

use coxeter_bp::bench::{bench_bp_poset, DEFAULT_SEED, NAIVE_LIMIT};

fn main() -> coxeter_bp::Result<()> {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let report = bench_bp_poset(n, 5, DEFAULT_SEED, NAIVE_LIMIT)?;
    print!("{report}");
    Ok(())
}
