//! A vacuous source leaves a single source unchanged under every rule, but
//! adding one to a joint combination can still move mass.

use dsm_fusion::bba::{random_bba, MassAssignment};
use dsm_fusion::fusion::Rule;
use dsm_fusion::lattice::{parse_expression, EmptinessMode, Frame, Model};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let frame = Frame::new(["A", "B", "C"])?;
    let p = |e: &str| parse_expression(e, &frame);
    let model = Model::new(
        frame.clone(),
        vec![p("A & C")?, p("C & (A | B)")?],
        EmptinessMode::Declared,
    )?;
    let vacuous = MassAssignment::vacuous(&frame);

    let m = random_bba(&model, 11, 5)?;
    println!("source:");
    for (x, v) in m.iter() {
        println!("  {x:<18} {v:.6}");
    }
    for rule in Rule::ALL {
        let out = rule.combine(&[&m, &vacuous], &model)?;
        let drift = m
            .iter()
            .map(|(x, v)| (v - out.mass(x)).abs())
            .fold(0.0, f64::max);
        println!("{rule:<12} max drift {drift:.1e}");
    }

    let m1 = MassAssignment::new(&model, [(p("A")?, 0.4), (p("B")?, 0.2), (p("A | B")?, 0.4)])?;
    let m2 = MassAssignment::new(&model, [(p("A")?, 0.2), (p("C")?, 0.3), (p("A | B")?, 0.5)])?;
    let two = Rule::Urr.combine(&[&m1, &m2], &model)?;
    let three = Rule::Urr.combine(&[&m1, &m2, &vacuous], &model)?;
    println!(
        "URR mass on A | B | C: {:.3} with two sources, {:.3} with a vacuous third",
        two.mass(&frame.ignorance()),
        three.mass(&frame.ignorance())
    );
    Ok(())
}
