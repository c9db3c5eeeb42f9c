//! Simple undirected graphs with a canonical edge list.
//!
//! Vertices are `0..order`. Every edge is stored as `(u, v)` with `u < v`, and
//! the edge list is sorted lexicographically. Labelings are plain vectors
//! aligned with that list, so the canonical order is part of every file format.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest order accepted anywhere in the crate.
pub const MAX_ORDER: usize = 1_000_000;

pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph from arbitrary edge pairs. Pairs are normalised to
    /// `(min, max)` and sorted; loops, duplicates and out-of-range ids are
    /// rejected.
    pub fn new(order: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if u >= order || v >= order {
                return Err(Error::VertexOutOfRange(u, v, order));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Graph { order, edges: list })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// True when some component has at most two vertices: an isolated vertex
    /// or an edge whose endpoints both have degree one.
    pub fn has_small_component(&self) -> bool {
        let deg = self.degrees();
        deg.contains(&0) || self.edges.iter().any(|&(u, v)| deg[u] == 1 && deg[v] == 1)
    }

    /// Returns the same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        assert_eq!(perm.len(), self.order, "permutation length must equal the order");
        Graph::new(self.order, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Renders the edge-list text format: a header `order size`, then one
    /// `u v` line per canonical edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(16 + 12 * self.edges.len());
        let _ = writeln!(out, "{} {}", self.order, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses the edge-list text format. Edge lines may come in any order but
    /// each must satisfy `u < v`; blank lines are ignored.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header line"))?;
        let (order, size) = parse_pair(hline, header)?;
        if order > MAX_ORDER {
            return Err(parse_err(hline, format!("order {order} exceeds the limit of {MAX_ORDER}")));
        }
        let mut edges = Vec::with_capacity(size.min(4 * MAX_ORDER));
        for (line, text) in lines {
            let (u, v) = parse_pair(line, text)?;
            if u >= v {
                return Err(parse_err(line, format!("edge `{text}` must satisfy u < v")));
            }
            edges.push((u, v));
        }
        if edges.len() != size {
            return Err(parse_err(hline, format!("header declares {size} edges, found {}", edges.len())));
        }
        Graph::new(order, edges).map_err(|e| parse_err(hline, e.to_string()))
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| parse_err(line, "expected two integers"))?;
        tok.parse().map_err(|_| parse_err(line, format!("`{tok}` is not a non-negative integer")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(parse_err(line, "expected exactly two integers"));
    }
    Ok(pair)
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::from_edge_list(s)
    }
}

/// Number of pages of a triangular book graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BookParams(usize);

impl BookParams {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            Err(Error::NoPages)
        } else if n + 2 > MAX_ORDER {
            Err(Error::OrderTooLarge(n + 2))
        } else {
            Ok(BookParams(n))
        }
    }

    pub fn n(self) -> usize {
        self.0
    }
}

/// Spine vertex `a`.
pub const BOOK_A: usize = 0;
/// Spine vertex `b`.
pub const BOOK_B: usize = 1;

/// Vertex id of page apex `c_i`, `1 <= i <= n`.
pub fn book_page(i: usize) -> usize {
    i + 1
}

/// The triangular book with `n` pages: spine `ab` plus the apexes
/// `c_1..c_n`, each adjacent to both `a` and `b`.
///
/// Canonical edge order is `ab, ac_1..ac_n, bc_1..bc_n`.
pub fn make_triangular_book(params: BookParams) -> Graph {
    let n = params.n();
    let mut edges = Vec::with_capacity(2 * n + 1);
    edges.push((BOOK_A, BOOK_B));
    edges.extend((1..=n).map(|i| (BOOK_A, book_page(i))));
    edges.extend((1..=n).map(|i| (BOOK_B, book_page(i))));
    Graph { order: n + 2, edges }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Path on `size` vertices.
    Path,
    /// Cycle on `size` vertices.
    Cycle,
    /// Star with `size` leaves around centre 0.
    Star,
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "star" => Ok(Family::Star),
            other => Err(format!("unknown graph family `{other}`")),
        }
    }
}

pub fn make_family(kind: Family, size: usize) -> Result<Graph> {
    let too_small = |family, min| Error::FamilyTooSmall { family, min, got: size };
    match kind {
        Family::Path if size < 2 => Err(too_small("path", "at least 2 vertices")),
        Family::Cycle if size < 3 => Err(too_small("cycle", "at least 3 vertices")),
        Family::Star if size < 2 => Err(too_small("star", "at least 2 leaves")),
        Family::Path => Graph::new(size, (1..size).map(|v| (v - 1, v))),
        Family::Cycle => Graph::new(size, (1..size).map(|v| (v - 1, v)).chain([(0, size - 1)])),
        Family::Star => Graph::new(size + 1, (1..=size).map(|v| (0, v))),
    }
}

/// Number of vertices of each occurring degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeHistogram {
    pub counts: BTreeMap<usize, usize>,
    pub max_degree: usize,
}

pub fn degree_histogram(g: &Graph) -> DegreeHistogram {
    let mut counts = BTreeMap::new();
    for d in g.degrees() {
        *counts.entry(d).or_insert(0) += 1;
    }
    let max_degree = counts.keys().next_back().copied().unwrap_or(0);
    DegreeHistogram { counts, max_degree }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn book(n: usize) -> Graph {
        make_triangular_book(BookParams::new(n).unwrap())
    }

    #[test]
    fn book_sizes() {
        let b1 = book(1);
        assert_eq!((b1.order(), b1.size()), (3, 3));
        let b2 = book(2);
        assert_eq!((b2.order(), b2.size()), (4, 5));
        let b5 = book(5);
        assert_eq!((b5.order(), b5.size()), (7, 11));
    }

    #[test]
    fn book_edges_are_canonical() {
        for n in 1..40 {
            let g = book(n);
            let rebuilt = Graph::new(g.order(), g.edges().iter().copied()).unwrap();
            assert_eq!(rebuilt, g);
        }
    }

    #[test]
    fn zero_pages_rejected() {
        assert_eq!(BookParams::new(0), Err(Error::NoPages));
    }

    #[test]
    fn book_one_is_triangle() {
        assert_eq!(book(1), make_family(Family::Cycle, 3).unwrap());
    }

    #[test]
    fn families() {
        let p = make_family(Family::Path, 2).unwrap();
        assert_eq!(p.edges(), &[(0, 1)]);
        let s = make_family(Family::Star, 4).unwrap();
        assert_eq!((s.order(), s.size()), (5, 4));
        assert!(make_family(Family::Path, 1).is_err());
        assert!(make_family(Family::Cycle, 2).is_err());
        assert!(make_family(Family::Star, 1).is_err());
    }

    #[test]
    fn histograms() {
        let h = degree_histogram(&book(5));
        assert_eq!(h.counts, BTreeMap::from([(2, 5), (6, 2)]));
        assert_eq!(h.max_degree, 6);

        let h = degree_histogram(&make_family(Family::Cycle, 3).unwrap());
        assert_eq!(h.counts, BTreeMap::from([(2, 3)]));
        assert_eq!(h.max_degree, 2);

        let h = degree_histogram(&book(2));
        assert_eq!(h.counts, BTreeMap::from([(2, 2), (3, 2)]));
        assert_eq!(h.max_degree, 3);
    }

    #[test]
    fn book_degree_structure() {
        for n in 1..200 {
            let g = book(n);
            let deg = g.degrees();
            assert_eq!(deg.iter().filter(|&&d| d == 2).count(), if n == 1 { 3 } else { n });
            assert_eq!(deg[BOOK_A], n + 1);
            assert_eq!(deg[BOOK_B], n + 1);
            assert_eq!(deg.iter().sum::<usize>(), 2 * (2 * n + 1));
        }
    }

    #[test]
    fn invalid_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::new(3, [(0, 3)]), Err(Error::VertexOutOfRange(0, 3, 3)));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(0, []), Err(Error::EmptyGraph));
        assert_eq!(Graph::new(MAX_ORDER + 1, []), Err(Error::OrderTooLarge(MAX_ORDER + 1)));
    }

    #[test]
    fn small_components() {
        assert!(!book(3).has_small_component());
        assert!(make_family(Family::Path, 2).unwrap().has_small_component());
        assert!(!make_family(Family::Path, 3).unwrap().has_small_component());
        // triangle plus an isolated vertex
        assert!(Graph::new(4, [(0, 1), (0, 2), (1, 2)]).unwrap().has_small_component());
        // triangle plus a disjoint edge
        let g = Graph::new(5, [(0, 1), (0, 2), (1, 2), (3, 4)]).unwrap();
        assert!(g.has_small_component());
    }

    #[test]
    fn edge_list_text() {
        let g = book(2);
        let text = g.to_edge_list();
        assert_eq!(text, "4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n");
        assert_eq!(Graph::from_edge_list(&text).unwrap(), g);
        // unsorted lines are canonicalised
        assert_eq!(Graph::from_edge_list("3 3\n1 2\n0 2\n0 1\n").unwrap(), book(1));
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(Graph::from_edge_list(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Graph::from_edge_list("3 1\n2 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::from_edge_list("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::from_edge_list("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::from_edge_list("3 1\n0 1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::from_edge_list("2000000 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::from_edge_list("3 2\n0 1\n0 1\n"), Err(Error::Parse { .. })));
    }
}
