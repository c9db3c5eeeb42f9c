//! Test-only helpers: an enumeration oracle that never touches the solver, and
//! random graph generators.

#![allow(dead_code)]

use irrstrength_core::graph::{make_triangular_book, BookParams};
use irrstrength_core::labeling::verify;
use irrstrength_core::{EdgeLabeling, Graph, Mode};
use proptest::prelude::*;
use rand::Rng;

pub fn book(n: usize) -> Graph {
    make_triangular_book(BookParams::new(n).unwrap())
}

pub fn params(n: usize) -> BookParams {
    BookParams::new(n).unwrap()
}

/// Calls `visit` on every labeling in `{1..=k}^size`, in lexicographic order.
/// Returns the number of assignments visited.
pub fn for_each_labeling(size: usize, k: u32, mut visit: impl FnMut(&[u32])) -> u64 {
    let mut labels = vec![1u32; size];
    let mut visited = 0;
    loop {
        visit(&labels);
        visited += 1;
        let mut i = size;
        loop {
            if i == 0 {
                return visited;
            }
            i -= 1;
            if labels[i] < k {
                labels[i] += 1;
                break;
            }
            labels[i] = 1;
        }
    }
}

pub struct Enumeration {
    pub visited: u64,
    pub valid: u64,
    pub first: Option<Vec<u32>>,
}

/// Checks every labeling with the verifier of `mode`.
pub fn enumerate(g: &Graph, mode: Mode, k: u32) -> Enumeration {
    let mut valid = 0;
    let mut first = None;
    let visited = for_each_labeling(g.size(), k, |labels| {
        let f = EdgeLabeling::new(labels.to_vec()).unwrap();
        if verify(g, &f, mode).unwrap().is_ok() {
            valid += 1;
            first.get_or_insert_with(|| labels.to_vec());
        }
    });
    Enumeration { visited, valid, first }
}

/// Connected graph: a random tree plus each remaining pair with probability
/// `p`, stopping once `max_size` edges are placed.
pub fn random_connected<R: Rng>(rng: &mut R, order: usize, p: f64, max_size: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..order {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..order {
        for v in u + 1..order {
            if edges.len() < max_size && !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(order, edges).unwrap()
}

fn build(order: usize, parents: &[usize], extra: &[bool], max_size: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p % (i + 1), i + 1)).collect();
    let pairs = (0..order).flat_map(|u| (u + 1..order).map(move |v| (u, v)));
    for ((u, v), &on) in pairs.zip(extra) {
        if on && edges.len() < max_size && !edges.contains(&(u, v)) {
            edges.push((u, v));
        }
    }
    Graph::new(order, edges).unwrap()
}

/// Connected graphs of order `3..=max_order` with at most `max_size` edges.
pub fn connected_graph(max_order: usize, max_size: usize) -> impl Strategy<Value = Graph> {
    (3..=max_order).prop_flat_map(move |order| {
        (
            proptest::collection::vec(0usize..order, order - 1),
            proptest::collection::vec(prop::bool::weighted(0.3), order * (order - 1) / 2),
        )
            .prop_map(move |(parents, extra)| build(order, &parents, &extra, max_size))
    })
}

/// Arbitrary simple graphs, possibly disconnected, with isolated vertices.
pub fn any_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|order| {
        proptest::collection::vec(any::<bool>(), order * (order - 1) / 2).prop_map(move |bits| {
            let pairs = (0..order).flat_map(|u| (u + 1..order).map(move |v| (u, v)));
            Graph::new(order, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// A graph together with a labeling of its edges in `1..=max_label`.
pub fn labeled(graph: impl Strategy<Value = Graph>, max_label: u32) -> impl Strategy<Value = (Graph, EdgeLabeling)> {
    graph.prop_flat_map(move |g| {
        let m = g.size();
        (Just(g), proptest::collection::vec(1..=max_label, m))
            .prop_map(|(g, labels)| (g, EdgeLabeling::new(labels).unwrap()))
    })
}
