//! Combines the two sources of a hybrid model with every rule and prints
//! the resulting masses side by side.

use dsm_fusion::bba::MassAssignment;
use dsm_fusion::fusion::{conjunctive, redistribution_supports, Rule};
use dsm_fusion::lattice::{parse_expression, EmptinessMode, Frame, Model};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let frame = Frame::new(["A", "B", "C"])?;
    let p = |e: &str| parse_expression(e, &frame);
    let model = Model::new(
        frame.clone(),
        vec![p("A & C")?, p("C & (A | B)")?],
        EmptinessMode::Declared,
    )?;

    let m1 = MassAssignment::new(&model, [(p("A")?, 0.4), (p("B")?, 0.2), (p("A | B")?, 0.4)])?;
    let m2 = MassAssignment::new(&model, [(p("A")?, 0.2), (p("C")?, 0.3), (p("A | B")?, 0.5)])?;
    let sources = [m1, m2];

    let consensus = conjunctive(&sources, &model)?;
    let supports = redistribution_supports(&consensus);
    println!(
        "k = {:.2}  n = {}  n^c = {}",
        consensus.total_conflict, supports.urr_n, supports.murr_n
    );
    for (x, m) in consensus.conflict_by_intersection() {
        println!("  conflict on {x}: {m:.2}");
    }

    let rows: Vec<_> = consensus
        .to_assignment()
        .focal_set()
        .into_iter()
        .chain(supports.urr_support.iter().cloned())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();

    print!("{:<10}", "");
    for rule in Rule::ALL {
        print!("{:>12}", rule.as_str());
    }
    println!();
    let fused: Vec<_> = Rule::ALL
        .iter()
        .map(|r| r.combine(&sources, &model))
        .collect();
    for x in &rows {
        print!("{:<10}", x.to_string());
        for out in &fused {
            match out {
                Ok(m) => print!("{:>12.4}", m.mass(x)),
                Err(_) => print!("{:>12}", "-"),
            }
        }
        println!();
    }
    Ok(())
}
