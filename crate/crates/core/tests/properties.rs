mod common;

use common::{any_graph, book, connected_graph, enumerate, labeled};
use irrstrength_core::bounds::{lower_bound_ms, lower_bound_s};
use irrstrength_core::labeling::{vertex_weights, verify_irregular};
use irrstrength_core::solver::{count_labelings, find_labeling, solve};
use irrstrength_core::{Graph, Mode, Outcome, SolverConfig, Strength};
use proptest::prelude::*;

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Irregular), Just(Mode::Modular)]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn weights_follow_vertex_relabeling(
        (g, f) in labeled(any_graph(9), 30),
        seed in any::<u64>(),
    ) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates driven by the seed
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm).unwrap();
        // carry each label along with its edge into h's canonical order
        let mut moved: Vec<((usize, usize), u32)> = g
            .edges()
            .iter()
            .zip(f.labels())
            .map(|(&(u, v), &l)| ((perm[u].min(perm[v]), perm[u].max(perm[v])), l))
            .collect();
        moved.sort();
        let fh = irrstrength_core::EdgeLabeling::new(moved.into_iter().map(|(_, l)| l).collect()).unwrap();
        let wg = vertex_weights(&g, &f).unwrap().weights;
        let wh = vertex_weights(&h, &fh).unwrap().weights;
        for v in 0..n {
            prop_assert_eq!(wg[v], wh[perm[v]]);
        }
    }

    #[test]
    fn edge_list_round_trip(g in any_graph(12)) {
        prop_assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn search_agrees_with_enumeration(g in connected_graph(6, 8), mode in mode(), k in 1u32..=3) {
        let plain = enumerate(&g, mode, k);
        let count = count_labelings(&g, mode, k).unwrap();
        prop_assert_eq!(count.valid, plain.valid);
        prop_assert_eq!(count.assignments, plain.visited);
        let first = find_labeling(&g, mode, k, 1).unwrap().map(|f| f.labels().to_vec());
        prop_assert_eq!(first, plain.first);
    }

    #[test]
    fn feasibility_is_monotone_in_k(g in connected_graph(6, 8), mode in mode(), k in 1u32..=3) {
        let here = count_labelings(&g, mode, k).unwrap().valid;
        let next = count_labelings(&g, mode, k + 1).unwrap().valid;
        prop_assert!(here <= next);
        if let Some(f) = find_labeling(&g, mode, k, 1).unwrap() {
            prop_assert!(f.k() <= k);
        }
    }

    #[test]
    fn solved_strengths_are_minimal_and_bounded(g in connected_graph(6, 8), mode in mode()) {
        let lb = lower_bound_s(&g).unwrap();
        let cfg = SolverConfig { k_max: lb + 2, ..SolverConfig::default() };
        let r = solve(&g, mode, &cfg).unwrap();
        match &r.outcome {
            Outcome::Finite { k, certificate, .. } => {
                prop_assert!(lb <= *k);
                if let Strength::Finite(ms_lb) = lower_bound_ms(&g).unwrap() {
                    prop_assert!(ms_lb <= *k);
                }
                prop_assert!(certificate.check().is_ok());
                prop_assert!(certificate.labeling().k() <= *k);
                prop_assert!(verify_irregular(&g, certificate.labeling()).unwrap().is_ok());
                if *k > 1 {
                    prop_assert_eq!(enumerate(&g, mode, k - 1).valid, 0);
                }
            }
            Outcome::Infinite(_) => prop_assert!(mode == Mode::Modular && g.order() % 4 == 2),
            Outcome::Unknown { .. } => {
                for k in lb..=lb + 2 {
                    prop_assert_eq!(enumerate(&g, mode, k).valid, 0);
                }
            }
        }
    }
}

#[test]
fn book_strengths_by_search() {
    let cfg = SolverConfig::default();
    let s: Vec<_> = (1..=6).map(|n| solve(&book(n), Mode::Irregular, &cfg).unwrap().strength().unwrap()).collect();
    assert_eq!(s, [3, 2, 2, 3, 3, 4].map(Strength::Finite));
    let ms: Vec<_> = [1, 2, 3, 4, 5, 6]
        .iter()
        .map(|&n| solve(&book(n), Mode::Modular, &cfg).unwrap().strength().unwrap())
        .collect();
    assert_eq!(
        ms,
        [Strength::Finite(3), Strength::Finite(2), Strength::Finite(2), Strength::Infinite, Strength::Finite(4), Strength::Finite(4)]
    );
}

#[test]
fn repeated_solves_are_identical() {
    let g = book(6);
    let cfg = SolverConfig { threads: 1, ..SolverConfig::default() };
    let first = solve(&g, Mode::Modular, &cfg).unwrap().to_json();
    for threads in 1..=6 {
        let r = solve(&g, Mode::Modular, &SolverConfig { threads, ..cfg }).unwrap();
        assert_eq!(r.to_json(), first, "threads = {threads}");
    }
}
