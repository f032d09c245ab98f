//! Lists every element of the hyper-power set for a small frame.
//!
//! ```text
//! cargo run --example hyper_power_set -- 3
//! ```

use dsm_fusion::lattice::{enumerate_hyper_power_set, Frame, ENUMERATION_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse())
        .transpose()?
        .unwrap_or(3);
    if n > ENUMERATION_CAP {
        return Err(format!("at most {ENUMERATION_CAP} atoms").into());
    }
    let frame = Frame::alphabetic(n)?;
    let all = enumerate_hyper_power_set(&frame)?;
    println!(
        "{} elements over {{{}}}",
        all.len(),
        frame.atoms().join(", ")
    );
    for x in &all {
        println!("  {x}");
    }
    Ok(())
}
