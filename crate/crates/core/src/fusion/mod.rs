//! Combination rules.
//!
//! Every rule starts from the same [`ConjunctiveResult`]: the conjunctive
//! consensus plus a ledger of the focal tuples whose intersection is empty
//! under the model. The rules differ only in where the conflicting mass `k`
//! goes:
//!
//! | rule | receivers of the conflict |
//! |------|---------------------------|
//! | [`urr`] | every proposition focal in some source, `k / n` each |
//! | [`murr`] | every proposition with positive conjunctive mass, `k / n^c` each |
//! | [`purr`] | the members of each conflicting tuple, weighted by occurrence |
//! | [`dempster`] | all conjunctive masses, proportionally |
//! | [`pcr5`] | the two members of each conflicting pair, proportionally to their masses |
//!
//! Multi-source combination is a single pass over `s`-tuples. The redistribution
//! rules are not associative, so chaining pairwise combinations gives different
//! numbers.

mod baseline;
mod conjunctive;
mod redistribute;

pub use baseline::{dempster, dempster_from, pcr5, pcr5_from, TOTAL_CONFLICT_EPS};
pub use conjunctive::{conjunctive, ConflictTerm, ConjunctiveResult};
pub use redistribute::{
    murr, murr_from, purr, purr_from, purr_pairwise, redistribution_supports, urr, urr_from,
    RedistributionSupports,
};

use std::borrow::Borrow;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bba::{BbaError, MassAssignment};
use crate::lattice::{LatticeError, Model};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FusionError {
    #[error("at least 2 sources are required, got {0}")]
    TooFewSources(usize),
    #[error("pcr5 combines exactly 2 sources, got {0}")]
    Pcr5SourceCount(usize),
    #[error("murr is undefined: the conjunctive core is empty (total conflict)")]
    DegenerateCore,
    #[error("dempster is undefined: total conflict k = {0}")]
    TotalConflict(f64),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Bba(#[from] BbaError),
}

impl FusionError {
    /// True when the inputs are valid but the rule has no defined output.
    pub fn is_domain_error(&self) -> bool {
        matches!(
            self,
            FusionError::DegenerateCore | FusionError::TotalConflict(_)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Conjunctive,
    Urr,
    Murr,
    Purr,
    Dempster,
    Pcr5,
}

impl Rule {
    pub const ALL: [Rule; 6] = [
        Rule::Conjunctive,
        Rule::Urr,
        Rule::Murr,
        Rule::Purr,
        Rule::Dempster,
        Rule::Pcr5,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Conjunctive => "conjunctive",
            Rule::Urr => "urr",
            Rule::Murr => "murr",
            Rule::Purr => "purr",
            Rule::Dempster => "dempster",
            Rule::Pcr5 => "pcr5",
        }
    }

    /// Combines with this rule. The conjunctive rule returns the unnormalized
    /// consensus (conflict mass excluded).
    pub fn combine<M: Borrow<MassAssignment>>(
        self,
        sources: &[M],
        model: &Model,
    ) -> Result<MassAssignment, FusionError> {
        if self == Rule::Pcr5 && sources.len() != 2 {
            return Err(FusionError::Pcr5SourceCount(sources.len()));
        }
        let result = conjunctive(sources, model)?;
        self.apply(&result, sources)
    }

    /// Applies the rule to an already computed conjunctive result of `sources`.
    pub fn apply<M: Borrow<MassAssignment>>(
        self,
        result: &ConjunctiveResult,
        sources: &[M],
    ) -> Result<MassAssignment, FusionError> {
        match self {
            Rule::Conjunctive => Ok(result.to_assignment()),
            Rule::Urr => Ok(urr_from(result)),
            Rule::Murr => murr_from(result),
            Rule::Purr => Ok(purr_from(result)),
            Rule::Dempster => dempster_from(result),
            Rule::Pcr5 => match sources {
                [first, second] => pcr5_from(result, first.borrow(), second.borrow()),
                _ => Err(FusionError::Pcr5SourceCount(sources.len())),
            },
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rule::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| {
                format!("unknown rule {s:?}, expected one of conjunctive, urr, murr, purr, dempster, pcr5")
            })
    }
}
