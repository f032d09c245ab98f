mod common;

use common::{
    as_tables, assignment_diff, hybrid_model, hybrid_sources, max_abs_diff, random_problem, Oracle,
};
use dsm_fusion::bba::{random_bba, MassAssignment};
use dsm_fusion::fusion::{
    conjunctive, murr, purr, purr_pairwise, redistribution_supports, urr, FusionError, Rule,
};
use dsm_fusion::lattice::{EmptinessMode, Frame, Model};

fn defined(rule: Rule, sources: &[MassAssignment], model: &Model) -> Option<MassAssignment> {
    match rule.combine(sources, model) {
        Ok(m) => Some(m),
        Err(e) if e.is_domain_error() => None,
        Err(FusionError::Pcr5SourceCount(_)) => None,
        Err(e) => panic!("{rule}: {e}"),
    }
}

#[test]
fn conservation_and_non_negativity() {
    let mut checked = 0;
    for seed in 0..600u64 {
        let n = 1 + (seed % 4) as usize;
        let s = 2 + (seed % 2) as usize;
        let (model, sources) = random_problem(seed, n, s, 5);
        let r = conjunctive(&sources, &model).unwrap();
        let conj_total: f64 = r.masses.values().sum();
        assert!(
            (conj_total + r.total_conflict - 1.0).abs() <= 1e-9,
            "seed {seed}"
        );
        for rule in Rule::ALL.into_iter().filter(|&r| r != Rule::Conjunctive) {
            if let Some(out) = defined(rule, &sources, &model) {
                assert!(
                    (out.total() - 1.0).abs() <= 1e-9,
                    "seed {seed} {rule}: {}",
                    out.total()
                );
                assert!(out.iter().all(|(_, m)| m >= 0.0), "seed {seed} {rule}");
                for (p, _) in out.iter() {
                    assert!(
                        !model.is_empty(p).unwrap(),
                        "seed {seed} {rule}: {p} is empty"
                    );
                }
            }
        }
        checked += 1;
    }
    assert!(checked >= 500);
}

#[test]
fn vacuous_source_is_neutral_pairwise() {
    for seed in 0..250u64 {
        let n = 1 + (seed % 4) as usize;
        let (model, sources) = random_problem(seed, n, 1, 6);
        let m = &sources[0];
        let v = MassAssignment::vacuous(model.frame());
        for rule in Rule::ALL {
            for pair in [[m.clone(), v.clone()], [v.clone(), m.clone()]] {
                let out = rule.combine(&pair, &model).unwrap();
                assert!(assignment_diff(&out, m) <= 1e-12, "seed {seed} {rule}");
                assert_eq!(out.len(), m.len());
            }
        }
    }
}

#[test]
fn vacuous_source_is_not_neutral_in_joint_combination() {
    // Adding a vacuous third source leaves the conjunctive consensus alone but
    // enlarges URR's receiver set by the ignorance and dilutes PURR weights.
    let model = hybrid_model(EmptinessMode::Declared);
    let mut three = hybrid_sources(&model);
    let two_urr = urr(&three, &model).unwrap();
    let two_purr = purr(&three, &model).unwrap();
    three.push(MassAssignment::vacuous(model.frame()));
    let joint = conjunctive(&three, &model).unwrap();
    assert!((joint.total_conflict - 0.24).abs() <= 1e-12);
    assert_eq!(redistribution_supports(&joint).urr_n, 5);
    let three_urr = urr(&three, &model).unwrap();
    assert!((three_urr.mass(&model.frame().ignorance()) - 0.048).abs() <= 1e-12);
    assert!(assignment_diff(&three_urr, &two_urr) > 1e-3);
    let three_purr = purr(&three, &model).unwrap();
    assert!((three_purr.mass(&model.frame().ignorance()) - 0.08).abs() <= 1e-12);
    assert!(assignment_diff(&three_purr, &two_purr) > 1e-3);
}

#[test]
fn conflict_free_inputs_leave_conjunctive_untouched() {
    let mut seen = 0;
    for seed in 0..400u64 {
        let (model, sources) = random_problem(seed, 1 + (seed % 3) as usize, 2, 4);
        let r = conjunctive(&sources, &model).unwrap();
        if r.total_conflict != 0.0 {
            continue;
        }
        seen += 1;
        let conj = r.to_assignment();
        for rule in Rule::ALL {
            assert_eq!(
                rule.combine(&sources, &model).unwrap(),
                conj,
                "seed {seed} {rule}"
            );
        }
    }
    assert!(seen > 20, "only {seen} conflict-free cases");
}

#[test]
fn uniform_rules_add_exactly_k_over_n() {
    for seed in 0..300u64 {
        let (model, sources) =
            random_problem(seed, 2 + (seed % 3) as usize, 2 + (seed % 2) as usize, 5);
        let r = conjunctive(&sources, &model).unwrap();
        let supports = redistribution_supports(&r);
        let out = urr(&sources, &model).unwrap();
        let share = r.total_conflict / supports.urr_n as f64;
        for p in r.masses.keys().chain(&supports.urr_support) {
            let expected = if supports.urr_support.contains(p) {
                share
            } else {
                0.0
            };
            assert!(
                (out.mass(p) - r.mass(p) - expected).abs() <= 1e-12,
                "seed {seed} urr {p}"
            );
        }
        if supports.murr_n > 0 {
            let out = murr(&sources, &model).unwrap();
            let share = r.total_conflict / supports.murr_n as f64;
            assert_eq!(out.len(), supports.murr_n);
            for p in &supports.murr_support {
                assert!(
                    (out.mass(p) - r.mass(p) - share).abs() <= 1e-12,
                    "seed {seed} murr {p}"
                );
            }
        }
    }
}

#[test]
fn purr_only_credits_conflict_members() {
    for seed in 0..300u64 {
        let (model, sources) =
            random_problem(seed, 2 + (seed % 3) as usize, 2 + (seed % 2) as usize, 5);
        let r = conjunctive(&sources, &model).unwrap();
        let out = purr(&sources, &model).unwrap();
        for (p, m) in out.iter() {
            if m > r.mass(p) + 1e-15 {
                assert!(
                    r.conflicts.iter().any(|c| c.members.contains(p)),
                    "seed {seed}: {p} gained without being in a conflict"
                );
            }
        }
        for c in &r.conflicts {
            assert!(c.product_mass > 0.0);
            assert!(model.is_empty(&c.intersection).unwrap());
            assert_eq!(c.members.len(), sources.len());
            let total: usize = c.members.iter().map(|m| c.occurrences(m)).sum::<usize>();
            assert!(total >= sources.len());
        }
    }
}

#[test]
fn two_source_purr_routes_agree() {
    for seed in 0..200u64 {
        let (model, sources) = random_problem(seed, 1 + (seed % 4) as usize, 2, 6);
        let via_ledger = purr(&sources, &model).unwrap();
        let pairwise = purr_pairwise(&sources[0], &sources[1], &model).unwrap();
        assert!(
            assignment_diff(&via_ledger, &pairwise) <= 1e-15,
            "seed {seed}"
        );
    }
}

#[test]
fn source_order_does_not_matter() {
    for seed in 0..200u64 {
        let s = 2 + (seed % 2) as usize;
        let (model, sources) = random_problem(seed, 1 + (seed % 4) as usize, s, 4);
        let mut reversed = sources.clone();
        reversed.reverse();
        let mut rotated = sources.clone();
        rotated.rotate_left(1);
        for rule in Rule::ALL {
            let base = defined(rule, &sources, &model);
            for other in [&reversed, &rotated] {
                let alt = defined(rule, other, &model);
                match (&base, &alt) {
                    (Some(a), Some(b)) => {
                        assert!(assignment_diff(a, b) <= 1e-12, "seed {seed} {rule}")
                    }
                    (None, None) => {}
                    _ => panic!("seed {seed} {rule}: definedness depends on order"),
                }
            }
        }
    }
}

#[test]
fn matches_brute_force_oracle_on_three_sources() {
    for seed in 0..150u64 {
        let n = 1 + (seed % 3) as usize;
        let (model, sources) = random_problem(1000 + seed, n, 3, 5);
        let oracle = Oracle::new(&model, &sources);
        let r = conjunctive(&sources, &model).unwrap();
        assert!((r.total_conflict - oracle.k).abs() <= 1e-12);
        assert!(max_abs_diff(&as_tables(&r.to_assignment()), &oracle.conjunctive) <= 1e-12);
        assert!(max_abs_diff(&as_tables(&urr(&sources, &model).unwrap()), &oracle.urr()) <= 1e-12);
        assert!(
            max_abs_diff(&as_tables(&purr(&sources, &model).unwrap()), &oracle.purr()) <= 1e-12
        );
        match (murr(&sources, &model), oracle.murr()) {
            (Ok(m), Some(o)) => assert!(max_abs_diff(&as_tables(&m), &o) <= 1e-12),
            (Err(FusionError::DegenerateCore), None) => {}
            (got, want) => panic!("seed {seed}: {got:?} vs {want:?}"),
        }
    }
}

#[test]
fn chaining_two_source_combinations_differs() {
    let f = Frame::new(["A", "B"]).unwrap();
    let ab = common::prop(&Model::free(f.clone()), "A & B");
    let model = Model::new(f, vec![ab], EmptinessMode::Declared).unwrap();
    let m1 = common::bba(&model, &[("A", 0.6), ("B", 0.4)]);
    let m2 = common::bba(&model, &[("A", 0.5), ("B", 0.5)]);
    let m3 = common::bba(&model, &[("A", 0.2), ("A | B", 0.8)]);
    let joint = urr(&[&m1, &m2, &m3], &model).unwrap();
    let chained = urr(&[urr(&[&m1, &m2], &model).unwrap(), m3.clone()], &model).unwrap();
    assert!(assignment_diff(&joint, &chained) > 1e-3);
}

#[test]
fn generator_outputs_validate() {
    let model = hybrid_model(EmptinessMode::Declared);
    for seed in 0..100 {
        let m = random_bba(&model, seed, 1 + (seed % 10) as usize).unwrap();
        assert!((m.total() - 1.0).abs() <= 1e-12);
        let again = MassAssignment::new(&model, m.iter().map(|(p, v)| (p.clone(), v))).unwrap();
        assert_eq!(again, m);
    }
    let m = random_bba(&hybrid_model(EmptinessMode::Declared), 42, 4).unwrap();
    assert!((m.total() - 1.0).abs() <= 1e-12);
}
