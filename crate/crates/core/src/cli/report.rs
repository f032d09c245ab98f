use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde_json::{json, Map, Value};

use crate::bba::MassAssignment;
use crate::fusion::{conjunctive, redistribution_supports, FusionError, Rule};
use crate::lattice::{Model, Proposition};

use super::scenario::LoadedScenario;

/// One rule's output in a comparison.
#[derive(Debug, Clone)]
pub struct RuleColumn {
    pub rule: Rule,
    pub outcome: Result<MassAssignment, FusionError>,
    pub elapsed: Duration,
}

impl RuleColumn {
    pub fn total(&self) -> Option<f64> {
        self.outcome.as_ref().ok().map(MassAssignment::total)
    }
}

/// Side-by-side output of several rules on one scenario.
#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub model: Model,
    pub source_count: usize,
    pub total_conflict: f64,
    pub conflicts: Vec<(Proposition, f64)>,
    /// Number of propositions focal in some source.
    pub n: usize,
    /// Number of propositions with positive conjunctive mass.
    pub n_core: usize,
    pub columns: Vec<RuleColumn>,
}

impl ComparisonReport {
    /// Runs `rules` on a loaded scenario. Rule-domain failures end up in their column.
    pub fn build(scenario: &LoadedScenario, rules: &[Rule]) -> Result<Self, FusionError> {
        let LoadedScenario { model, sources } = scenario;
        let result = conjunctive(sources, model)?;
        let supports = redistribution_supports(&result);
        let columns = rules
            .iter()
            .map(|&rule| {
                let start = Instant::now();
                let outcome = rule.combine(sources, model);
                RuleColumn {
                    rule,
                    outcome,
                    elapsed: start.elapsed(),
                }
            })
            .collect::<Vec<_>>();
        if let Some(err) = columns
            .iter()
            .filter_map(|c| c.outcome.as_ref().err())
            .find(|e| !e.is_domain_error())
        {
            return Err(err.clone());
        }
        Ok(Self {
            model: model.clone(),
            source_count: sources.len(),
            total_conflict: result.total_conflict,
            conflicts: result.conflict_by_intersection().into_iter().collect(),
            n: supports.urr_n,
            n_core: supports.murr_n,
            columns,
        })
    }

    /// First rule-domain error, if any column failed.
    pub fn first_error(&self) -> Option<&FusionError> {
        self.columns.iter().find_map(|c| c.outcome.as_ref().err())
    }

    /// Union of focal propositions over all defined columns, in canonical order.
    pub fn rows(&self) -> Vec<Proposition> {
        let mut rows = BTreeSet::new();
        for c in &self.columns {
            if let Ok(m) = &c.outcome {
                rows.extend(m.iter().map(|(p, _)| p.clone()));
            }
        }
        rows.into_iter().collect()
    }

    pub fn render_table(&self) -> String {
        let rows = self.rows();
        let labels: Vec<String> = rows.iter().map(ToString::to_string).collect();
        let width = labels
            .iter()
            .map(String::len)
            .chain(["proposition".len(), "time (us)".len()])
            .max()
            .unwrap_or(0);
        let col = 12;

        let mut out = String::new();
        let _ = writeln!(
            out,
            "frame: {}   emptiness: {}   sources: {}",
            self.model.frame().atoms().join(" "),
            self.model.mode(),
            self.source_count
        );
        let _ = writeln!(
            out,
            "total conflict k = {:.6}   n = {}   n^c = {}",
            self.total_conflict, self.n, self.n_core
        );
        for (p, m) in &self.conflicts {
            let _ = writeln!(out, "  conflict on {p}: {m:.6}");
        }
        out.push('\n');

        let _ = write!(out, "{:<width$}", "proposition");
        for c in &self.columns {
            let _ = write!(out, "{:>col$}", c.rule.as_str());
        }
        out.push('\n');
        for (p, label) in rows.iter().zip(&labels) {
            let _ = write!(out, "{label:<width$}");
            for c in &self.columns {
                match &c.outcome {
                    Ok(m) => {
                        let _ = write!(out, "{:>col$.6}", m.mass(p));
                    }
                    Err(_) => {
                        let _ = write!(out, "{:>col$}", "-");
                    }
                }
            }
            out.push('\n');
        }
        let _ = write!(out, "{:<width$}", "total");
        for c in &self.columns {
            match c.total() {
                Some(t) => {
                    let _ = write!(out, "{t:>col$.6}");
                }
                None => {
                    let _ = write!(out, "{:>col$}", "undefined");
                }
            }
        }
        out.push('\n');
        let _ = write!(out, "{:<width$}", "time (us)");
        for c in &self.columns {
            let _ = write!(out, "{:>col$.1}", c.elapsed.as_secs_f64() * 1e6);
        }
        out.push('\n');
        for c in &self.columns {
            if let Err(e) = &c.outcome {
                let _ = writeln!(out, "{}: {e}", c.rule);
            }
        }
        out
    }

    /// Machine-readable form. Everything except the trailing `timing_ns`
    /// object is a deterministic function of the inputs.
    pub fn to_json_value(&self) -> Value {
        let mut rules = Map::new();
        for c in &self.columns {
            let entry = match &c.outcome {
                Ok(m) => {
                    let masses: Map<String, Value> =
                        m.iter().map(|(p, v)| (p.to_string(), json!(v))).collect();
                    json!({ "status": "ok", "total": m.total(), "masses": masses })
                }
                Err(e) => json!({ "status": "undefined", "error": e.to_string() }),
            };
            rules.insert(c.rule.as_str().to_owned(), entry);
        }
        let conflicts: Map<String, Value> = self
            .conflicts
            .iter()
            .map(|(p, m)| (p.to_string(), json!(m)))
            .collect();
        let timing: Map<String, Value> = self
            .columns
            .iter()
            .map(|c| {
                (
                    c.rule.as_str().to_owned(),
                    json!(c.elapsed.as_nanos() as u64),
                )
            })
            .collect();
        json!({
            "frame": self.model.frame().atoms(),
            "emptiness": self.model.mode().as_str(),
            "constraints": self.model.declared_empty().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "sources": self.source_count,
            "total_conflict": self.total_conflict,
            "conflicts": conflicts,
            "n": self.n,
            "n_core": self.n_core,
            "rules": rules,
            "timing_ns": timing,
        })
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("report serializes")
    }
}
