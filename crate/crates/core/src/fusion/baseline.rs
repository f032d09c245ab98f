//! Reference rules from the wider belief-function literature, used for
//! comparison: Dempster's normalized rule and the two-source PCR5 rule.

use std::borrow::Borrow;

use crate::bba::MassAssignment;
use crate::lattice::Model;

use super::conjunctive::{conjunctive, ConjunctiveResult};
use super::FusionError;

/// Conflict level at or above which Dempster's rule is undefined.
pub const TOTAL_CONFLICT_EPS: f64 = 1e-12;

/// Dempster's rule on an existing conjunctive result: m(Z) = m_conj(Z) / (1 - k).
pub fn dempster_from(result: &ConjunctiveResult) -> Result<MassAssignment, FusionError> {
    let k = result.total_conflict;
    if k >= 1.0 - TOTAL_CONFLICT_EPS {
        return Err(FusionError::TotalConflict(k));
    }
    let scale = 1.0 - k;
    let masses = result
        .masses
        .iter()
        .map(|(p, &m)| (p.clone(), m / scale))
        .collect();
    Ok(MassAssignment::from_parts(result.frame.clone(), masses))
}

pub fn dempster<M: Borrow<MassAssignment>>(
    sources: &[M],
    model: &Model,
) -> Result<MassAssignment, FusionError> {
    dempster_from(&conjunctive(sources, model)?)
}

/// PCR5 on a two-source conjunctive result.
///
/// For each conflicting pair `(X, Y)` with `x = m1(X)` and `y = m2(Y)`, `X`
/// receives `x²y / (x + y)` and `Y` receives `y²x / (x + y)`.
pub fn pcr5_from(
    result: &ConjunctiveResult,
    first: &MassAssignment,
    second: &MassAssignment,
) -> Result<MassAssignment, FusionError> {
    if result.source_count != 2 {
        return Err(FusionError::Pcr5SourceCount(result.source_count));
    }
    let mut masses = result.masses.clone();
    for conflict in &result.conflicts {
        let (x_prop, y_prop) = (&conflict.members[0], &conflict.members[1]);
        let x = first.mass(x_prop);
        let y = second.mass(y_prop);
        let denom = x + y;
        *masses.entry(x_prop.clone()).or_insert(0.0) += x * x * y / denom;
        *masses.entry(y_prop.clone()).or_insert(0.0) += y * y * x / denom;
    }
    Ok(MassAssignment::from_parts(result.frame.clone(), masses))
}

pub fn pcr5(
    first: &MassAssignment,
    second: &MassAssignment,
    model: &Model,
) -> Result<MassAssignment, FusionError> {
    pcr5_from(&conjunctive(&[first, second], model)?, first, second)
}
