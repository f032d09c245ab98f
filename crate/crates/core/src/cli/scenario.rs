//! JSON scenario files.
//!
//! ```json
//! {
//!   "frame": ["A", "B", "C"],
//!   "constraints": ["A & C", "C & (A | B)"],
//!   "emptiness": "declared",
//!   "sources": [ {"A": 0.4, "B": 0.2, "A | B": 0.4},
//!                {"A": 0.2, "C": 0.3, "A | B": 0.5} ]
//! }
//! ```
//!
//! `emptiness` is optional and defaults to `"declared"`.

use std::fmt;
use std::path::Path;

use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

use crate::bba::{BbaError, MassAssignment};
use crate::lattice::{parse_expression, EmptinessMode, Frame, LatticeError, Model};

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid scenario JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("frame: {0}")]
    Frame(LatticeError),
    #[error("{location}constraint {index} ({text:?}): {source}")]
    Constraint {
        index: usize,
        text: String,
        location: Location,
        source: LatticeError,
    },
    #[error("{location}source {index}, key {key:?}: {source}")]
    SourceKey {
        index: usize,
        key: String,
        location: Location,
        source: LatticeError,
    },
    #[error("{location}source {index}: {source}")]
    Source {
        index: usize,
        location: Location,
        source: BbaError,
    },
    #[error("{0}model: {1}")]
    Model(Location, LatticeError),
    #[error("scenario needs at least 2 sources, found {0}")]
    TooFewSources(usize),
}

/// Best-effort position of a value inside the scenario text.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Location(Option<(usize, usize)>);

impl Location {
    fn find(text: &str, needle: &str, from: usize) -> (Self, usize) {
        match text.get(from..).and_then(|rest| rest.find(needle)) {
            Some(off) => {
                let at = from + off;
                let before = &text[..at];
                let line = before.matches('\n').count() + 1;
                let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
                (Location(Some((line, column))), at + needle.len())
            }
            None => (Location(None), from),
        }
    }

    pub fn line(&self) -> Option<usize> {
        self.0.map(|(l, _)| l)
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some((line, column)) => write!(f, "line {line}, column {column}: "),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Emptiness {
    Declared,
    Propagated,
}

impl From<Emptiness> for EmptinessMode {
    fn from(e: Emptiness) -> Self {
        match e {
            Emptiness::Declared => EmptinessMode::Declared,
            Emptiness::Propagated => EmptinessMode::Propagated,
        }
    }
}

impl From<EmptinessMode> for Emptiness {
    fn from(e: EmptinessMode) -> Self {
        match e {
            EmptinessMode::Declared => Emptiness::Declared,
            EmptinessMode::Propagated => Emptiness::Propagated,
        }
    }
}

/// One source object, keeping key order and repeated keys.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SourceEntries(pub Vec<(String, f64)>);

impl<'de> Deserialize<'de> for SourceEntries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct EntriesVisitor;

        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = SourceEntries;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an object mapping expressions to masses")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = map.next_entry::<String, f64>()? {
                    out.push((k, v));
                }
                Ok(SourceEntries(out))
            }
        }

        deserializer.deserialize_map(EntriesVisitor)
    }
}

impl Serialize for SourceEntries {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// The raw scenario document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub frame: Vec<String>,
    #[serde(default)]
    pub constraints: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    emptiness: Option<Emptiness>,
    pub sources: Vec<SourceEntries>,
}

/// A scenario turned into a model and validated sources.
#[derive(Debug, Clone)]
pub struct LoadedScenario {
    pub model: Model,
    pub sources: Vec<MassAssignment>,
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self, ScenarioError> {
        serde_json::from_str(text).map_err(|e| ScenarioError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn emptiness(&self) -> EmptinessMode {
        self.emptiness.map(Into::into).unwrap_or_default()
    }

    /// Builds the scenario document for an existing model and sources.
    pub fn from_parts(model: &Model, sources: &[MassAssignment]) -> Self {
        Scenario {
            frame: model.frame().atoms().to_vec(),
            constraints: model
                .declared_empty()
                .iter()
                .map(ToString::to_string)
                .collect(),
            emptiness: Some(model.mode().into()),
            sources: sources
                .iter()
                .map(|s| SourceEntries(s.iter().map(|(p, m)| (p.to_string(), m)).collect()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serializes")
    }

    /// Validates against the frame, optionally overriding the emptiness mode.
    ///
    /// `text` is the document this scenario was parsed from and is only used
    /// to attach line numbers to errors; pass `""` when there is none.
    pub fn load(
        &self,
        mode_override: Option<EmptinessMode>,
        text: &str,
    ) -> Result<LoadedScenario, ScenarioError> {
        let frame = Frame::new(self.frame.iter().cloned()).map_err(ScenarioError::Frame)?;
        let mode = mode_override.unwrap_or_else(|| self.emptiness());

        let constraints_at = text.find("\"constraints\"").unwrap_or(0);
        let mut cursor = constraints_at;
        let mut constraints = Vec::with_capacity(self.constraints.len());
        for (index, c) in self.constraints.iter().enumerate() {
            let (location, next) = Location::find(text, &json_string(c), cursor);
            cursor = next;
            let p = parse_expression(c, &frame).map_err(|source| ScenarioError::Constraint {
                index,
                text: c.clone(),
                location,
                source,
            })?;
            constraints.push(p);
        }
        let (model_at, _) = Location::find(text, "\"constraints\"", 0);
        let model = Model::new(frame.clone(), constraints, mode)
            .map_err(|e| ScenarioError::Model(model_at, e))?;

        if self.sources.len() < 2 {
            return Err(ScenarioError::TooFewSources(self.sources.len()));
        }
        let mut cursor = text.find("\"sources\"").unwrap_or(0);
        let mut sources = Vec::with_capacity(self.sources.len());
        for (index, entries) in self.sources.iter().enumerate() {
            let source_at = Location::find(text, "{", cursor).0;
            let mut parsed = Vec::with_capacity(entries.0.len());
            for (key, mass) in &entries.0 {
                let (location, next) = Location::find(text, &json_string(key), cursor);
                cursor = next;
                let p =
                    parse_expression(key, &frame).map_err(|source| ScenarioError::SourceKey {
                        index,
                        key: key.clone(),
                        location,
                        source,
                    })?;
                parsed.push((p, *mass));
            }
            let m =
                MassAssignment::new(&model, parsed).map_err(|source| ScenarioError::Source {
                    index,
                    location: source_at,
                    source,
                })?;
            sources.push(m);
        }
        Ok(LoadedScenario { model, sources })
    }
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

/// Reads and validates a scenario file.
pub fn load_scenario(
    path: &Path,
    mode_override: Option<EmptinessMode>,
) -> Result<LoadedScenario, ScenarioError> {
    let text = std::fs::read_to_string(path).map_err(|source| ScenarioError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Scenario::from_json(&text)?.load(mode_override, &text)
}
