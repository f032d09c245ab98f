//! Walks the conflict ledger of a three-source combination and shows how
//! PURR splits each conflicting product among the propositions involved.

use dsm_fusion::bba::MassAssignment;
use dsm_fusion::fusion::{conjunctive, purr, purr_pairwise};
use dsm_fusion::lattice::{parse_expression, EmptinessMode, Frame, Model};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let frame = Frame::new(["A", "B", "C"])?;
    let p = |e: &str| parse_expression(e, &frame);
    let model = Model::new(
        frame.clone(),
        vec![p("A & B")?, p("A & C")?, p("B & C")?],
        EmptinessMode::Propagated,
    )?;
    let sources = [
        MassAssignment::new(&model, [(p("A")?, 0.6), (p("B | C")?, 0.4)])?,
        MassAssignment::new(&model, [(p("B")?, 0.7), (p("A | B | C")?, 0.3)])?,
        MassAssignment::new(&model, [(p("A")?, 0.5), (p("C")?, 0.5)])?,
    ];

    let consensus = conjunctive(&sources, &model)?;
    println!("k = {:.4}", consensus.total_conflict);
    for c in &consensus.conflicts {
        let members: Vec<String> = c.members.iter().map(ToString::to_string).collect();
        println!(
            "  ({}) -> {}  product {:.4}",
            members.join(", "),
            c.intersection,
            c.product_mass
        );
        let mut distinct = c.members.clone();
        distinct.sort();
        distinct.dedup();
        for x in distinct {
            let share = c.product_mass * c.occurrences(&x) as f64 / c.members.len() as f64;
            println!("      {x} receives {share:.4}");
        }
    }

    let fused = purr(&sources, &model)?;
    println!("PURR:");
    for (x, m) in fused.iter() {
        println!("  {x:<10} {m:.4}");
    }

    // with two sources the ledger route and the direct pair loop coincide
    let a = purr(&sources[..2], &model)?;
    let b = purr_pairwise(&sources[0], &sources[1], &model)?;
    let gap = a
        .iter()
        .map(|(x, m)| (m - b.mass(x)).abs())
        .fold(0.0, f64::max);
    println!("two-source routes differ by at most {gap:.1e}");
    Ok(())
}
