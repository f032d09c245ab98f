//! Basic belief assignments.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::lattice::{enumerate_hyper_power_set, Frame, LatticeError, Model, Proposition};

/// Accepted deviation of an input assignment's total mass from 1.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BbaError {
    #[error("assignment has no entries")]
    NoEntries,
    #[error("proposition {0} appears more than once")]
    DuplicateProposition(String),
    #[error("mass assigned to empty proposition {0}")]
    MassOnEmpty(String),
    #[error("negative or non-finite mass {mass} on {proposition}")]
    NegativeMass { proposition: String, mass: f64 },
    #[error("masses sum to {0}, expected 1")]
    NotNormalized(f64),
    #[error("focal count {requested} outside 1..={available}")]
    FocalCountOutOfRange { requested: usize, available: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A mass function over non-empty propositions of one frame.
///
/// Entries are kept in canonical proposition order and only strictly positive
/// masses are stored.
#[derive(Debug, Clone, PartialEq)]
pub struct MassAssignment {
    frame: Frame,
    entries: BTreeMap<Proposition, f64>,
}

impl MassAssignment {
    /// Validates `entries` against `model`.
    pub fn new(
        model: &Model,
        entries: impl IntoIterator<Item = (Proposition, f64)>,
    ) -> Result<Self, BbaError> {
        let frame = model.frame();
        let mut map = BTreeMap::new();
        let mut seen = BTreeSet::new();
        let mut total = 0.0;
        for (proposition, mass) in entries {
            frame.check(proposition.frame())?;
            if !seen.insert(proposition.clone()) {
                return Err(BbaError::DuplicateProposition(proposition.to_string()));
            }
            if model.is_empty_unchecked(&proposition) {
                return Err(BbaError::MassOnEmpty(proposition.to_string()));
            }
            if !(mass >= 0.0 && mass.is_finite()) {
                return Err(BbaError::NegativeMass {
                    proposition: proposition.to_string(),
                    mass,
                });
            }
            total += mass;
            if mass > 0.0 {
                map.insert(proposition, mass);
            }
        }
        if seen.is_empty() {
            return Err(BbaError::NoEntries);
        }
        if (total - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(BbaError::NotNormalized(total));
        }
        Ok(Self {
            frame: frame.clone(),
            entries: map,
        })
    }

    /// Wraps combination output; callers guarantee keys are valid and masses non-negative.
    pub(crate) fn from_parts(frame: Frame, entries: BTreeMap<Proposition, f64>) -> Self {
        let entries = entries.into_iter().filter(|&(_, m)| m > 0.0).collect();
        Self { frame, entries }
    }

    /// The vacuous assignment: all mass on the union of every atom.
    pub fn vacuous(frame: &Frame) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(frame.ignorance(), 1.0);
        Self {
            frame: frame.clone(),
            entries,
        }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn mass(&self, proposition: &Proposition) -> f64 {
        self.entries.get(proposition).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Proposition, f64)> {
        self.entries.iter().map(|(p, &m)| (p, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.entries.values().sum()
    }

    /// Propositions carrying strictly positive mass.
    pub fn focal_set(&self) -> BTreeSet<Proposition> {
        self.entries.keys().cloned().collect()
    }

    pub fn into_entries(self) -> BTreeMap<Proposition, f64> {
        self.entries
    }
}

/// Free function form of [`MassAssignment::new`].
pub fn make_bba(
    frame: &Frame,
    model: &Model,
    entries: impl IntoIterator<Item = (Proposition, f64)>,
) -> Result<MassAssignment, BbaError> {
    frame.check(model.frame())?;
    MassAssignment::new(model, entries)
}

fn round12(x: f64) -> f64 {
    (x * 1e12).round() / 1e12
}

/// Seeded random assignment with `focal_count` distinct focal elements.
///
/// Focal elements are drawn uniformly without replacement from the
/// propositions that are non-empty under `model`; masses come from a flat
/// Dirichlet draw rounded to 12 decimals, with the last entry absorbing the
/// rounding residue.
pub fn random_bba(
    model: &Model,
    seed: u64,
    focal_count: usize,
) -> Result<MassAssignment, BbaError> {
    let candidates: Vec<Proposition> = enumerate_hyper_power_set(model.frame())?
        .into_iter()
        .filter(|p| !model.is_empty_unchecked(p))
        .collect();
    if focal_count == 0 || focal_count > candidates.len() {
        return Err(BbaError::FocalCountOutOfRange {
            requested: focal_count,
            available: candidates.len(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picks = index::sample(&mut rng, candidates.len(), focal_count).into_vec();
    picks.sort_unstable();
    let masses = loop {
        let draws: Vec<f64> = (0..focal_count)
            .map(|_| -(1.0 - rng.random::<f64>()).ln())
            .collect();
        let sum: f64 = draws.iter().sum();
        let mut masses: Vec<f64> = draws.iter().map(|d| round12(d / sum)).collect();
        let head: f64 = masses[..focal_count - 1].iter().sum();
        masses[focal_count - 1] = 1.0 - head;
        if masses.iter().all(|&m| m > 0.0) {
            break masses;
        }
    };
    let entries = picks
        .into_iter()
        .zip(masses)
        .map(|(i, m)| (candidates[i].clone(), m))
        .collect::<BTreeMap<_, _>>();
    Ok(MassAssignment {
        frame: model.frame().clone(),
        entries,
    })
}
