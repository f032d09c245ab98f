//! Uniform (URR, MURR) and partially uniform (PURR) conflict redistribution.

use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet};

use crate::bba::MassAssignment;
use crate::lattice::{Model, Proposition};

use super::conjunctive::{check_sources, conjunctive, ConjunctiveResult};
use super::FusionError;

/// The two candidate receiver sets for uniform redistribution.
#[derive(Debug, Clone, PartialEq)]
pub struct RedistributionSupports {
    /// Propositions focal in at least one source.
    pub urr_support: BTreeSet<Proposition>,
    pub urr_n: usize,
    /// Propositions with non-zero conjunctive mass.
    pub murr_support: BTreeSet<Proposition>,
    pub murr_n: usize,
}

pub fn redistribution_supports(result: &ConjunctiveResult) -> RedistributionSupports {
    RedistributionSupports {
        urr_n: result.source_focal_union.len(),
        urr_support: result.source_focal_union.clone(),
        murr_n: result.core.len(),
        murr_support: result.core.clone(),
    }
}

fn spread_evenly(
    result: &ConjunctiveResult,
    receivers: &BTreeSet<Proposition>,
) -> BTreeMap<Proposition, f64> {
    let mut masses = result.masses.clone();
    if result.total_conflict > 0.0 {
        let share = result.total_conflict / receivers.len() as f64;
        for z in receivers {
            *masses.entry(z.clone()).or_insert(0.0) += share;
        }
    }
    masses
}

/// URR on an existing conjunctive result.
pub fn urr_from(result: &ConjunctiveResult) -> MassAssignment {
    MassAssignment::from_parts(
        result.frame.clone(),
        spread_evenly(result, &result.source_focal_union),
    )
}

/// MURR on an existing conjunctive result.
pub fn murr_from(result: &ConjunctiveResult) -> Result<MassAssignment, FusionError> {
    if result.core.is_empty() {
        return Err(FusionError::DegenerateCore);
    }
    Ok(MassAssignment::from_parts(
        result.frame.clone(),
        spread_evenly(result, &result.core),
    ))
}

/// PURR on an existing conjunctive result.
///
/// Each conflict tuple's mass is split among its distinct members, a member
/// appearing `c` times out of `s` getting the fraction `c / s`.
pub fn purr_from(result: &ConjunctiveResult) -> MassAssignment {
    let mut masses = result.masses.clone();
    let s = result.source_count as f64;
    let mut counted: Vec<(&Proposition, usize)> = Vec::with_capacity(result.source_count);
    for conflict in &result.conflicts {
        counted.clear();
        for member in &conflict.members {
            match counted.iter_mut().find(|(p, _)| *p == member) {
                Some((_, c)) => *c += 1,
                None => counted.push((member, 1)),
            }
        }
        for &(member, count) in &counted {
            let share = conflict.product_mass * count as f64 / s;
            match masses.get_mut(member) {
                Some(slot) => *slot += share,
                None => {
                    masses.insert(member.clone(), share);
                }
            }
        }
    }
    MassAssignment::from_parts(result.frame.clone(), masses)
}

/// Uniform Redistribution Rule: the total conflict is shared equally among
/// every proposition focal in at least one source.
pub fn urr<M: Borrow<MassAssignment>>(
    sources: &[M],
    model: &Model,
) -> Result<MassAssignment, FusionError> {
    Ok(urr_from(&conjunctive(sources, model)?))
}

/// Core-based URR: the total conflict is shared equally among the
/// propositions that kept positive conjunctive mass.
///
/// Fails with [`FusionError::DegenerateCore`] when every tuple conflicts.
pub fn murr<M: Borrow<MassAssignment>>(
    sources: &[M],
    model: &Model,
) -> Result<MassAssignment, FusionError> {
    murr_from(&conjunctive(sources, model)?)
}

/// Partially Uniform Redistribution Rule over any number of sources.
pub fn purr<M: Borrow<MassAssignment>>(
    sources: &[M],
    model: &Model,
) -> Result<MassAssignment, FusionError> {
    Ok(purr_from(&conjunctive(sources, model)?))
}

/// Two-source PURR computed straight from the pair sums: for every
/// conflicting pair `(X1, X2)`, half the pair mass goes to `X1` and half to
/// `X2`.
///
/// Does not go through [`conjunctive`]; it exists as a second route to the
/// same numbers as [`purr`] at `s = 2`.
pub fn purr_pairwise(
    first: &MassAssignment,
    second: &MassAssignment,
    model: &Model,
) -> Result<MassAssignment, FusionError> {
    check_sources(&[first, second], model)?;
    let mut masses: BTreeMap<Proposition, f64> = BTreeMap::new();
    for (x1, m1) in first.iter() {
        for (x2, m2) in second.iter() {
            let meet = x1.meet(x2);
            let p = m1 * m2;
            if model.is_empty_unchecked(&meet) {
                *masses.entry(x1.clone()).or_insert(0.0) += p / 2.0;
                if x2 != x1 {
                    *masses.entry(x2.clone()).or_insert(0.0) += p / 2.0;
                }
            } else {
                *masses.entry(meet).or_insert(0.0) += p;
            }
        }
    }
    Ok(MassAssignment::from_parts(model.frame().clone(), masses))
}
