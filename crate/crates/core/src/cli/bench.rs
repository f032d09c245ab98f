//! Timing harness comparing the rules on random scenarios.
//!
//! Each trial draws fresh sources from a seeded stream, then times every
//! rule's full combination call on them (conjunctive pass included, scenario
//! generation and validation excluded). A trial's sample for a rule is the
//! fastest of [`REPEATS`] calls, which strips most scheduler noise from
//! sub-millisecond timings.

use std::fmt::Write as _;
use std::hint::black_box;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bba::{random_bba, BbaError, MassAssignment};
use crate::fusion::Rule;
use crate::lattice::{AtomSet, EmptinessMode, Frame, LatticeError, Model, ENUMERATION_CAP};

/// Timed calls per rule per trial; the minimum is kept.
pub const REPEATS: usize = 5;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BenchError {
    #[error("atoms must be in 1..={ENUMERATION_CAP}, got {0}")]
    Atoms(usize),
    #[error("sources must be 2 or 3, got {0}")]
    Sources(usize),
    #[error("trials must be at least 1")]
    Trials,
    #[error(transparent)]
    Bba(#[from] BbaError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchConfig {
    pub atoms: usize,
    pub focals: usize,
    pub sources: usize,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub rule: Rule,
    pub median: Duration,
    pub p90: Duration,
    /// Trials where the rule produced an output.
    pub samples: usize,
    /// Trials where the rule was undefined (degenerate core, total conflict).
    pub undefined: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchSummary {
    pub config: BenchConfig,
    /// Mean total conflict over the generated scenarios.
    pub mean_conflict: f64,
    pub rows: Vec<BenchRow>,
}

impl BenchSummary {
    pub fn row(&self, rule: Rule) -> Option<&BenchRow> {
        self.rows.iter().find(|r| r.rule == rule)
    }

    pub fn render_table(&self) -> String {
        let c = &self.config;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "atoms: {}   focals: {}   sources: {}   trials: {}   seed: {}   mean k: {:.4}",
            c.atoms, c.focals, c.sources, c.trials, c.seed, self.mean_conflict
        );
        let _ = writeln!(
            out,
            "{:<12}{:>14}{:>14}{:>10}{:>11}",
            "rule", "median (us)", "p90 (us)", "samples", "undefined"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<12}{:>14.3}{:>14.3}{:>10}{:>11}",
                r.rule.as_str(),
                r.median.as_secs_f64() * 1e6,
                r.p90.as_secs_f64() * 1e6,
                r.samples,
                r.undefined
            );
        }
        out
    }
}

/// The model used for generated scenarios: every pairwise atom intersection
/// declared empty, read in declared mode.
pub fn bench_model(atoms: usize) -> Result<Model, LatticeError> {
    let frame = Frame::alphabetic(atoms)?;
    let mut constraints = Vec::new();
    for i in 0..atoms {
        for j in i + 1..atoms {
            constraints.push(crate::lattice::canonicalize(
                &frame,
                [AtomSet::from_indices([i, j])],
            ));
        }
    }
    Model::new(frame, constraints, EmptinessMode::Declared)
}

/// Deterministic scenario stream: trial `t` of a config always yields the same sources.
pub fn bench_scenarios(
    config: &BenchConfig,
    model: &Model,
) -> Result<Vec<Vec<MassAssignment>>, BenchError> {
    let mut seeds = ChaCha8Rng::seed_from_u64(config.seed);
    (0..config.trials)
        .map(|_| {
            (0..config.sources)
                .map(|_| random_bba(model, seeds.random(), config.focals).map_err(Into::into))
                .collect()
        })
        .collect()
}

fn percentile(sorted: &[Duration], q: f64) -> Duration {
    if sorted.is_empty() {
        return Duration::ZERO;
    }
    // nearest rank
    let rank = ((q * sorted.len() as f64).ceil() as usize).clamp(1, sorted.len());
    sorted[rank - 1]
}

fn median(sorted: &[Duration]) -> Duration {
    match sorted.len() {
        0 => Duration::ZERO,
        n if n % 2 == 1 => sorted[n / 2],
        n => (sorted[n / 2 - 1] + sorted[n / 2]) / 2,
    }
}

pub fn run_bench(config: BenchConfig) -> Result<BenchSummary, BenchError> {
    if config.atoms == 0 || config.atoms > ENUMERATION_CAP {
        return Err(BenchError::Atoms(config.atoms));
    }
    if !(2..=3).contains(&config.sources) {
        return Err(BenchError::Sources(config.sources));
    }
    if config.trials == 0 {
        return Err(BenchError::Trials);
    }
    let model = bench_model(config.atoms)?;
    let scenarios = bench_scenarios(&config, &model)?;

    let rules: Vec<Rule> = Rule::ALL
        .into_iter()
        .filter(|&r| r != Rule::Pcr5 || config.sources == 2)
        .collect();
    let mut samples: Vec<Vec<Duration>> = vec![Vec::with_capacity(config.trials); rules.len()];
    let mut undefined = vec![0usize; rules.len()];
    let mut conflict_sum = 0.0;

    for sources in &scenarios {
        conflict_sum += crate::fusion::conjunctive(sources, &model)
            .map(|r| r.total_conflict)
            .unwrap_or(0.0);
        for (i, &rule) in rules.iter().enumerate() {
            let mut best = Duration::MAX;
            let mut defined = true;
            for _ in 0..REPEATS {
                let start = Instant::now();
                let out = rule.combine(black_box(sources.as_slice()), black_box(&model));
                let elapsed = start.elapsed();
                defined = out.is_ok();
                black_box(out).ok();
                best = best.min(elapsed);
            }
            if defined {
                samples[i].push(best);
            } else {
                undefined[i] += 1;
            }
        }
    }

    let rows = rules
        .into_iter()
        .zip(samples)
        .zip(undefined)
        .map(|((rule, mut times), undefined)| {
            times.sort_unstable();
            BenchRow {
                rule,
                median: median(&times),
                p90: percentile(&times, 0.9),
                samples: times.len(),
                undefined,
            }
        })
        .collect();

    Ok(BenchSummary {
        config,
        mean_conflict: conflict_sum / scenarios.len() as f64,
        rows,
    })
}
