//! Shared fixtures and independent oracles for the integration tests.
//!
//! The oracles never touch the DNF machinery: a proposition over `n ≤ 4`
//! atoms is turned into its truth table (one bit per assignment of the
//! atoms), intersection is bitwise AND, lattice order is implication, and
//! fusion is recomputed by materializing the full cartesian product of focal
//! elements.
#![allow(dead_code)]

use std::collections::BTreeMap;

use dsm_fusion::bba::{random_bba, MassAssignment};
use dsm_fusion::lattice::{
    enumerate_hyper_power_set, parse_expression, EmptinessMode, Frame, Model, Proposition,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Table = u32;

/// Truth table of `p`: bit `a` is set iff `p` holds when exactly the atoms in bitmask `a` are true.
pub fn truth_table(p: &Proposition) -> Table {
    let n = p.frame().len();
    assert!(n <= 5);
    let mut table = 0;
    for assignment in 0u64..(1 << n) {
        let holds = p
            .terms()
            .iter()
            .any(|t| t.indices().all(|i| assignment & (1 << i) != 0));
        if holds {
            table |= 1 << assignment;
        }
    }
    table
}

pub fn hybrid_frame() -> Frame {
    Frame::new(["A", "B", "C"]).unwrap()
}

/// Θ = {A, B, C} with A∩C and C∩(A∪B) declared empty.
pub fn hybrid_model(mode: EmptinessMode) -> Model {
    let f = hybrid_frame();
    let cs = ["A & C", "C & (A | B)"]
        .iter()
        .map(|e| parse_expression(e, &f).unwrap())
        .collect();
    Model::new(f, cs, mode).unwrap()
}

pub fn prop(model: &Model, e: &str) -> Proposition {
    parse_expression(e, model.frame()).unwrap()
}

pub fn bba(model: &Model, items: &[(&str, f64)]) -> MassAssignment {
    MassAssignment::new(model, items.iter().map(|&(e, m)| (prop(model, e), m))).unwrap()
}

/// The two sources of the hybrid example.
pub fn hybrid_sources(model: &Model) -> Vec<MassAssignment> {
    vec![
        bba(model, &[("A", 0.4), ("B", 0.2), ("A | B", 0.4)]),
        bba(model, &[("A", 0.2), ("C", 0.3), ("A | B", 0.5)]),
    ]
}

/// Seeded random model over `n` atoms: up to three constraints drawn from the
/// hyper-power set, in a random mode, rejected if they empty the ignorance.
pub fn random_model(rng: &mut ChaCha8Rng, n: usize) -> Model {
    let frame = Frame::alphabetic(n).unwrap();
    let all = enumerate_hyper_power_set(&frame).unwrap();
    loop {
        let mode = if rng.random_bool(0.5) {
            EmptinessMode::Declared
        } else {
            EmptinessMode::Propagated
        };
        let count = rng.random_range(0..=3usize);
        let constraints: Vec<Proposition> = (0..count)
            .map(|_| all[rng.random_range(1..all.len())].clone())
            .collect();
        if let Ok(model) = Model::new(frame.clone(), constraints, mode) {
            return model;
        }
    }
}

/// A random fusion problem: model plus `source_count` random sources.
pub fn random_problem(
    seed: u64,
    n: usize,
    source_count: usize,
    max_focals: usize,
) -> (Model, Vec<MassAssignment>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let model = random_model(&mut rng, n);
    let available = enumerate_hyper_power_set(model.frame())
        .unwrap()
        .iter()
        .filter(|p| !model.is_empty(p).unwrap())
        .count();
    let sources = (0..source_count)
        .map(|_| {
            let k = rng.random_range(1..=available.min(max_focals));
            random_bba(&model, rng.random(), k).unwrap()
        })
        .collect();
    (model, sources)
}

pub fn as_tables(m: &MassAssignment) -> BTreeMap<Table, f64> {
    m.iter().map(|(p, v)| (truth_table(p), v)).collect()
}

pub fn max_abs_diff(a: &BTreeMap<Table, f64>, b: &BTreeMap<Table, f64>) -> f64 {
    a.keys()
        .chain(b.keys())
        .map(|k| (a.get(k).unwrap_or(&0.0) - b.get(k).unwrap_or(&0.0)).abs())
        .fold(0.0, f64::max)
}

pub fn assignment_diff(a: &MassAssignment, b: &MassAssignment) -> f64 {
    max_abs_diff(&as_tables(a), &as_tables(b))
}

/// Brute-force fusion over truth tables.
pub struct Oracle {
    pub conjunctive: BTreeMap<Table, f64>,
    /// (member tables, product mass) for every conflicting tuple.
    pub conflicts: Vec<(Vec<Table>, f64)>,
    pub k: f64,
    pub source_focal_union: Vec<Table>,
    pub sources: usize,
}

impl Oracle {
    pub fn new(model: &Model, sources: &[MassAssignment]) -> Self {
        let declared: Vec<Table> = model.declared_empty().iter().map(truth_table).collect();
        let empty_union = declared.iter().fold(0, |acc, t| acc | t);
        let is_empty = |t: Table| match model.mode() {
            _ if t == 0 => true,
            EmptinessMode::Declared => declared.contains(&t),
            EmptinessMode::Propagated => t & !empty_union == 0,
        };
        let focal: Vec<Vec<(Table, f64)>> = sources
            .iter()
            .map(as_tables)
            .map(|m| m.into_iter().collect())
            .collect();

        // materialize every tuple up front
        let mut tuples: Vec<Vec<usize>> = vec![vec![]];
        for f in &focal {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    (0..f.len()).map(move |j| {
                        let mut next = t.clone();
                        next.push(j);
                        next
                    })
                })
                .collect();
        }

        let mut conjunctive = BTreeMap::new();
        let mut conflicts = Vec::new();
        for tuple in &tuples {
            let members: Vec<(Table, f64)> = tuple
                .iter()
                .enumerate()
                .map(|(i, &j)| focal[i][j])
                .collect();
            let meet = members.iter().fold(Table::MAX, |acc, &(t, _)| acc & t);
            let product: f64 = members.iter().map(|&(_, m)| m).product();
            if is_empty(meet) {
                conflicts.push((members.iter().map(|&(t, _)| t).collect(), product));
            } else {
                *conjunctive.entry(meet).or_insert(0.0) += product;
            }
        }
        let k = conflicts.iter().map(|(_, p)| p).sum();
        let mut source_focal_union: Vec<Table> = focal.iter().flatten().map(|&(t, _)| t).collect();
        source_focal_union.sort_unstable();
        source_focal_union.dedup();
        Oracle {
            conjunctive,
            conflicts,
            k,
            source_focal_union,
            sources: sources.len(),
        }
    }

    pub fn urr(&self) -> BTreeMap<Table, f64> {
        let mut out = self.conjunctive.clone();
        let n = self.source_focal_union.len() as f64;
        for &z in &self.source_focal_union {
            *out.entry(z).or_insert(0.0) += self.k / n;
        }
        out.retain(|_, v| *v > 0.0);
        out
    }

    pub fn murr(&self) -> Option<BTreeMap<Table, f64>> {
        let core: Vec<Table> = self
            .conjunctive
            .iter()
            .filter(|(_, &v)| v != 0.0)
            .map(|(&t, _)| t)
            .collect();
        if core.is_empty() {
            return None;
        }
        let mut out = self.conjunctive.clone();
        for z in &core {
            *out.get_mut(z).unwrap() += self.k / core.len() as f64;
        }
        Some(out)
    }

    /// Each distinct member A of a conflicting tuple gets Card_A · p / s.
    pub fn purr(&self) -> BTreeMap<Table, f64> {
        let mut out = self.conjunctive.clone();
        let s = self.sources as f64;
        for (members, p) in &self.conflicts {
            let mut distinct = members.clone();
            distinct.sort_unstable();
            distinct.dedup();
            for a in distinct {
                let card = members.iter().filter(|&&m| m == a).count() as f64;
                *out.entry(a).or_insert(0.0) += card * p / s;
            }
        }
        out.retain(|_, v| *v > 0.0);
        out
    }
}
