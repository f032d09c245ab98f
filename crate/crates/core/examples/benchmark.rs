//! Times every rule on seeded random inputs.
//!
//! ```text
//! cargo run --release --example benchmark -- 3 10 2 200
//! ```

use dsm_fusion::cli::{run_bench, BenchConfig};

fn arg(i: usize, default: usize) -> usize {
    std::env::args()
        .nth(i)
        .and_then(|a| a.parse().ok())
        .unwrap_or(default)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = BenchConfig {
        atoms: arg(1, 3),
        focals: arg(2, 10),
        sources: arg(3, 2),
        trials: arg(4, 100),
        seed: 0,
    };
    print!("{}", run_bench(config)?.render_table());
    Ok(())
}
