mod common;

use std::collections::BTreeSet;

use cadorder::heuristics::evaluate_orderings;
use cadorder::projection::reduce;
use cadorder::{
    brown_candidates, brown_triple, choose, choose_all, enumerate_orderings, full_projection, ndrr_value, project_once,
    sotd_value, Heuristic, PolySystem, DEFAULT_ENUMERATION_CAP,
};
use common::{permutations, renaming, small_system};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn projection_levels_use_only_leading_variables(seed in any::<u64>()) {
        let system = small_system(seed);
        let n = system.variables().len();
        for ordering in enumerate_orderings(system.variables(), DEFAULT_ENUMERATION_CAP).unwrap() {
            let ps = full_projection(&system, &ordering).unwrap();
            prop_assert_eq!(ps.num_levels(), n);
            let top = reduce(system.polynomials().iter().cloned());
            prop_assert_eq!(ps.level(n), top.as_slice());
            for (k, level) in ps.levels() {
                let allowed: BTreeSet<_> = ordering.variables()[..k].iter().cloned().collect();
                for p in level {
                    prop_assert!(p.variables().is_subset(&allowed), "{} at level {} of {}", p, k, ordering);
                    prop_assert!(!p.is_constant());
                    prop_assert_eq!(&p.canonicalize(), p);
                }
                let distinct: BTreeSet<_> = level.iter().collect();
                prop_assert_eq!(distinct.len(), level.len());
            }
        }
    }

    #[test]
    fn project_once_output_is_reduced(seed in any::<u64>()) {
        let system = small_system(seed);
        for v in system.variables() {
            let out = project_once(system.polynomials(), v).unwrap();
            prop_assert_eq!(reduce(out.clone()), out.clone());
            prop_assert!(out.iter().all(|p| !p.involves(v)));
        }
    }

    #[test]
    fn projection_is_renaming_equivariant(seed in any::<u64>(), which in 0usize..6) {
        let system = small_system(seed);
        let vars = system.variables().to_vec();
        let perms = permutations(vars.len());
        let sigma = renaming(&vars, &perms[which % perms.len()]);
        let renamed = system.rename(&sigma).unwrap();
        for ordering in enumerate_orderings(&vars, DEFAULT_ENUMERATION_CAP).unwrap() {
            let ps = full_projection(&system, &ordering).unwrap();
            let rs = full_projection(&renamed, &ordering.rename(&sigma)).unwrap();
            for (k, level) in ps.levels() {
                let mapped = reduce(level.iter().map(|p| p.rename(&sigma)));
                prop_assert_eq!(rs.level(k), mapped.as_slice());
            }
            prop_assert_eq!(sotd_value(&rs), sotd_value(&ps));
            prop_assert_eq!(ndrr_value(&rs), ndrr_value(&ps));
        }
    }

    #[test]
    fn chosen_ordering_is_equivariant_without_ties(seed in any::<u64>(), which in 0usize..6) {
        let system = small_system(seed);
        let vars = system.variables().to_vec();
        let perms = permutations(vars.len());
        let sigma = renaming(&vars, &perms[which % perms.len()]);
        let renamed = system.rename(&sigma).unwrap();
        let before = choose_all(&system, DEFAULT_ENUMERATION_CAP).unwrap();
        let after = choose_all(&renamed, DEFAULT_ENUMERATION_CAP).unwrap();
        for (b, a) in before.iter().zip(&after) {
            if b.heuristic != Heuristic::Brown {
                for (o, value) in &b.per_ordering {
                    prop_assert_eq!(a.per_ordering[&o.rename(&sigma)], *value);
                }
            }
            if b.candidates.len() == 1 {
                prop_assert_eq!(&a.chosen, &b.chosen.rename(&sigma));
            }
        }
    }

    #[test]
    fn brown_triples_ignore_scaling(seed in any::<u64>(), factors in prop::collection::vec(prop_oneof![-50i64..=-1, 1i64..=50], 2)) {
        let system = small_system(seed);
        let scaled: Vec<_> = system
            .polynomials()
            .iter()
            .zip(factors.iter().cycle())
            .map(|(p, k)| p.scale(&(*k).into()))
            .collect();
        let scaled = PolySystem::new(system.variables().to_vec(), scaled).unwrap();
        for v in system.variables() {
            prop_assert_eq!(brown_triple(&scaled, v).unwrap(), brown_triple(&system, v).unwrap());
        }
        prop_assert_eq!(brown_candidates(&scaled), brown_candidates(&system));
    }

    #[test]
    fn reports_ignore_input_order(seed in any::<u64>()) {
        let system = small_system(seed);
        let mut reversed = system.polynomials().to_vec();
        reversed.reverse();
        let reversed = PolySystem::new(system.variables().to_vec(), reversed).unwrap();
        prop_assert_eq!(
            choose_all(&reversed, DEFAULT_ENUMERATION_CAP).unwrap(),
            choose_all(&system, DEFAULT_ENUMERATION_CAP).unwrap()
        );
    }

    #[test]
    fn reports_are_consistent_and_deterministic(seed in any::<u64>()) {
        let system = small_system(seed);
        let vars = system.variables();
        let all = choose_all(&system, DEFAULT_ENUMERATION_CAP).unwrap();
        let metrics = evaluate_orderings(&system, DEFAULT_ENUMERATION_CAP).unwrap();
        for report in &all {
            prop_assert!(!report.candidates.is_empty());
            prop_assert!(report.candidates.contains(&report.chosen));
            prop_assert!(report.candidates.iter().all(|o| o.is_permutation_of(vars)));
            prop_assert_eq!(&report.chosen, report.candidates.iter().min().unwrap());
            if report.heuristic != Heuristic::Brown {
                let best = *report.per_ordering.values().min().unwrap();
                let argmin: Vec<_> = report.per_ordering.iter().filter(|(_, v)| **v == best).map(|(o, _)| o.clone()).collect();
                prop_assert_eq!(&report.candidates, &argmin);
                for m in &metrics {
                    let expected = if report.heuristic == Heuristic::Sotd { m.sotd } else { m.ndrr };
                    prop_assert_eq!(report.per_ordering[&m.ordering], expected);
                }
            }
        }
        let brown = choose(&system, Heuristic::Brown).unwrap();
        prop_assert_eq!(&brown, &all[0]);
        prop_assert_eq!(choose(&system, Heuristic::Brown).unwrap(), brown);
    }

    #[test]
    fn brown_triple_criteria_are_ordered(seed in any::<u64>()) {
        let system = small_system(seed);
        let mut vars = system.variables().to_vec();
        vars.push(common::var("unused"));
        let widened = PolySystem::new(vars.clone(), system.polynomials().to_vec()).unwrap();
        for v in &vars {
            let t = brown_triple(&widened, v).unwrap();
            if t.crit3 > 0 {
                prop_assert!(t.crit2 >= t.crit1);
            }
            let absent = t.crit1 == 0 && t.crit2 == 0 && t.crit3 == 0;
            prop_assert_eq!(absent, !system.polynomials().iter().any(|p| p.involves(v)));
        }
    }
}
