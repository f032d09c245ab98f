use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet};

use crate::bba::{BbaError, MassAssignment};
use crate::lattice::{Frame, Model, Proposition};

use super::FusionError;

/// One focal tuple whose intersection is empty under the model.
#[derive(Debug, Clone, PartialEq)]
pub struct ConflictTerm {
    /// `members[i]` is the focal element taken from source `i`.
    pub members: Vec<Proposition>,
    /// Product of the member masses, each from its own source.
    pub product_mass: f64,
    pub intersection: Proposition,
}

impl ConflictTerm {
    /// How many sources contributed `proposition` to this tuple.
    pub fn occurrences(&self, proposition: &Proposition) -> usize {
        self.members.iter().filter(|m| *m == proposition).count()
    }
}

/// Output of the conjunctive consensus together with its conflict ledger.
#[derive(Debug, Clone)]
pub struct ConjunctiveResult {
    pub(crate) frame: Frame,
    /// Mass landing on non-empty intersections.
    pub masses: BTreeMap<Proposition, f64>,
    /// Tuples with empty intersection, in enumeration order.
    pub conflicts: Vec<ConflictTerm>,
    /// Sum of `product_mass` over `conflicts`.
    pub total_conflict: f64,
    /// Propositions focal in at least one source.
    pub source_focal_union: BTreeSet<Proposition>,
    /// Propositions with positive conjunctive mass.
    pub core: BTreeSet<Proposition>,
    pub source_count: usize,
}

impl ConjunctiveResult {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn mass(&self, proposition: &Proposition) -> f64 {
        self.masses.get(proposition).copied().unwrap_or(0.0)
    }

    /// Conflicting mass per empty intersection, summed over tuples.
    pub fn conflict_by_intersection(&self) -> BTreeMap<Proposition, f64> {
        let mut out = BTreeMap::new();
        for c in &self.conflicts {
            *out.entry(c.intersection.clone()).or_insert(0.0) += c.product_mass;
        }
        out
    }

    pub fn to_assignment(&self) -> MassAssignment {
        MassAssignment::from_parts(self.frame.clone(), self.masses.clone())
    }
}

pub(crate) fn check_sources<M: Borrow<MassAssignment>>(
    sources: &[M],
    model: &Model,
) -> Result<(), FusionError> {
    if sources.len() < 2 {
        return Err(FusionError::TooFewSources(sources.len()));
    }
    for source in sources.iter().map(Borrow::borrow) {
        model.frame().check(source.frame())?;
        if let Some((p, _)) = source.iter().find(|(p, _)| model.is_empty_unchecked(p)) {
            return Err(BbaError::MassOnEmpty(p.to_string()).into());
        }
    }
    Ok(())
}

/// Combines `sources` with the conjunctive rule in a single pass over all
/// focal tuples `(X_1, ..., X_s)`.
///
/// Tuples whose intersection is empty under `model` are recorded as
/// [`ConflictTerm`]s instead of receiving mass.
pub fn conjunctive<M: Borrow<MassAssignment>>(
    sources: &[M],
    model: &Model,
) -> Result<ConjunctiveResult, FusionError> {
    check_sources(sources, model)?;
    let focals: Vec<Vec<(&Proposition, f64)>> = sources
        .iter()
        .map(|s| s.borrow().iter().collect())
        .collect();

    let mut masses: BTreeMap<Proposition, f64> = BTreeMap::new();
    let mut conflicts = Vec::new();
    let mut total_conflict = 0.0;

    let s = focals.len();
    let mut index = vec![0usize; s];
    // prefix[d] holds the meet and mass product of members 0..=d
    let mut prefix: Vec<(Proposition, f64)> = Vec::with_capacity(s);
    let (p0, m0) = focals[0][0];
    prefix.push((p0.clone(), m0));
    for d in 1..s {
        let (p, m) = focals[d][0];
        let next = (prefix[d - 1].0.meet(p), prefix[d - 1].1 * m);
        prefix.push(next);
    }

    loop {
        let (meet, product) = &prefix[s - 1];
        if model.is_empty_unchecked(meet) {
            total_conflict += product;
            conflicts.push(ConflictTerm {
                members: index
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| focals[i][j].0.clone())
                    .collect(),
                product_mass: *product,
                intersection: meet.clone(),
            });
        } else if let Some(slot) = masses.get_mut(meet) {
            *slot += product;
        } else {
            masses.insert(meet.clone(), *product);
        }

        // advance the odometer, last source fastest
        let mut d = s;
        loop {
            if d == 0 {
                let source_focal_union = focals.iter().flatten().map(|&(p, _)| p.clone()).collect();
                let core = masses
                    .iter()
                    .filter(|&(_, &m)| m > 0.0)
                    .map(|(p, _)| p.clone())
                    .collect();
                return Ok(ConjunctiveResult {
                    frame: model.frame().clone(),
                    masses,
                    conflicts,
                    total_conflict,
                    source_focal_union,
                    core,
                    source_count: s,
                });
            }
            d -= 1;
            index[d] += 1;
            if index[d] < focals[d].len() {
                break;
            }
            index[d] = 0;
        }
        for k in d..s {
            let (p, m) = focals[k][index[k]];
            prefix[k] = if k == 0 {
                (p.clone(), m)
            } else {
                (prefix[k - 1].0.meet(p), prefix[k - 1].1 * m)
            };
        }
    }
}
