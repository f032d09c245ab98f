//! Parses propositions, shows their canonical form and the lattice order.

use dsm_fusion::lattice::{parse_expression, Frame};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let frame = Frame::new(["A", "B", "C"])?;
    for text in [
        "B & A",
        "(A | B) & (A | C)",
        "A | A & B",
        "C&(B|A)",
        "A | B | C",
    ] {
        let x = parse_expression(text, &frame)?;
        println!("{text:<20} => {x}");
    }

    let ab = parse_expression("A & B", &frame)?;
    let a_or_c = parse_expression("A | C", &frame)?;
    println!("A & B <= A | C: {}", ab.leq(&a_or_c)?);
    println!("(A & B) | (A | C) = {}", ab.unite(&a_or_c)?);
    println!("(A & B) & (A | C) = {}", ab.intersect(&a_or_c)?);

    for bad in ["A &", "A | D", "(A | B"] {
        match parse_expression(bad, &frame) {
            Ok(x) => println!("{bad:<20} => {x}"),
            Err(e) => println!("{bad:<20} !! {e}"),
        }
    }
    Ok(())
}
