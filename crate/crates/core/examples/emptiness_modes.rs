//! The same constraints read two ways: only the declared propositions are
//! empty, or everything below a declared proposition is empty too.

use dsm_fusion::bba::MassAssignment;
use dsm_fusion::fusion::{conjunctive, urr};
use dsm_fusion::lattice::{parse_expression, EmptinessMode, Frame, Model};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let frame = Frame::new(["A", "B", "C"])?;
    let p = |e: &str| parse_expression(e, &frame);
    let constraints = vec![p("A & C")?, p("C & (A | B)")?];

    for mode in [EmptinessMode::Declared, EmptinessMode::Propagated] {
        let model = Model::new(frame.clone(), constraints.clone(), mode)?;
        let sources = [
            MassAssignment::new(&model, [(p("A")?, 0.4), (p("B")?, 0.2), (p("A | B")?, 0.4)])?,
            MassAssignment::new(&model, [(p("A")?, 0.2), (p("C")?, 0.3), (p("A | B")?, 0.5)])?,
        ];
        let consensus = conjunctive(&sources, &model)?;
        println!("{mode}: B & C empty = {}", model.is_empty(&p("B & C")?)?);
        println!("  k = {:.2}", consensus.total_conflict);
        for (x, m) in urr(&sources, &model)?.iter() {
            println!("  {x:<8} {m:.4}");
        }
    }
    Ok(())
}
