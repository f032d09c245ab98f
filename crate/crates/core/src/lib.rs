//! Combination of quantitative belief assignments over hyper-power sets.
//!
//! The crate covers:
//!
//! * [`lattice`]: canonical propositions (reduced monotone DNF over a frame),
//!   hybrid models with declared-empty constraints, the expression parser
//!   and enumeration of small hyper-power sets.
//! * [`bba`]: validated mass assignments, the vacuous assignment and a
//!   seeded generator.
//! * [`fusion`]: conjunctive consensus with its conflict ledger, the uniform
//!   (URR), core-uniform (MURR) and partially uniform (PURR) redistribution
//!   rules, plus Dempster and PCR5 for comparison.
//! * [`cli`]: JSON scenarios, comparison reports and the benchmark harness
//!   behind the `fuse` binary.
//!
//! ```
//! use dsm_fusion::bba::MassAssignment;
//! use dsm_fusion::fusion::urr;
//! use dsm_fusion::lattice::{parse_expression, EmptinessMode, Frame, Model};
//!
//! let frame = Frame::new(["A", "B", "C"]).unwrap();
//! let p = |e: &str| parse_expression(e, &frame).unwrap();
//! let model = Model::new(
//!     frame.clone(),
//!     vec![p("A & C"), p("C & (A | B)")],
//!     EmptinessMode::Declared,
//! )
//! .unwrap();
//! let m1 = MassAssignment::new(&model, [(p("A"), 0.4), (p("B"), 0.2), (p("A | B"), 0.4)]).unwrap();
//! let m2 = MassAssignment::new(&model, [(p("A"), 0.2), (p("C"), 0.3), (p("A | B"), 0.5)]).unwrap();
//!
//! let fused = urr(&[m1, m2], &model).unwrap();
//! assert!((fused.mass(&p("C")) - 0.06).abs() < 1e-12);
//! ```

pub mod bba;
pub mod cli;
pub mod fusion;
pub mod lattice;

pub use bba::{make_bba, random_bba, BbaError, MassAssignment};
pub use fusion::{conjunctive, ConjunctiveResult, FusionError, Rule};
pub use lattice::{parse_expression, EmptinessMode, Frame, LatticeError, Model, Proposition};
