//! Loads a JSON scenario and prints a comparison report.
//!
//! ```text
//! cargo run --example scenario_file -- crates/core/scenarios/three_sources.json
//! ```

use std::path::PathBuf;

use dsm_fusion::cli::run_compare;
use dsm_fusion::fusion::Rule;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| {
            PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios/hybrid_abc.json")
        });
    let rules = [
        Rule::Conjunctive,
        Rule::Urr,
        Rule::Murr,
        Rule::Purr,
        Rule::Dempster,
    ];
    let report = run_compare(&path, &rules)?;
    print!("{}", report.render_table());
    if let Some(e) = report.first_error() {
        println!("note: {e}");
    }
    Ok(())
}
