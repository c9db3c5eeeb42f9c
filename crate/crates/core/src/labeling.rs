//! Edge labelings, vertex weights and the two verifiers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest edge label accepted anywhere in the crate.
///
/// With `order <= MAX_ORDER` a weight is at most `(MAX_ORDER - 1) * MAX_LABEL`,
/// well inside `u64`.
pub const MAX_LABEL: u32 = 1_000_000;

/// Positive labels aligned with a graph's canonical edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    labels: Vec<u32>,
    k: u32,
}

impl EdgeLabeling {
    pub fn new(labels: Vec<u32>) -> Result<Self> {
        if let Some(i) = labels.iter().position(|&l| l == 0) {
            return Err(Error::ZeroLabel(i));
        }
        if let Some(&l) = labels.iter().find(|&&l| l > MAX_LABEL) {
            return Err(Error::LabelTooLarge(l.into()));
        }
        let k = labels.iter().copied().max().unwrap_or(0);
        Ok(EdgeLabeling { labels, k })
    }

    /// Every edge labelled 1.
    pub fn uniform(size: usize) -> Self {
        EdgeLabeling { labels: vec![1; size], k: u32::from(size > 0) }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Largest label used.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightProfile {
    pub weights: Vec<u64>,
    /// `weights[v] mod order`.
    pub residues: Vec<u64>,
}

impl WeightProfile {
    pub fn from_weights(weights: Vec<u64>) -> Self {
        let n = weights.len() as u64;
        let residues = weights.iter().map(|w| w % n).collect();
        WeightProfile { weights, residues }
    }

    /// True when the weights, as a set, are `m, m+1, ..., m+order-1`.
    pub fn is_consecutive(&self) -> bool {
        let mut sorted = self.weights.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[1] == w[0] + 1)
    }
}

pub fn vertex_weights(g: &Graph, f: &EdgeLabeling) -> Result<WeightProfile> {
    if f.len() != g.size() {
        return Err(Error::LengthMismatch { labels: f.len(), edges: g.size() });
    }
    let mut weights = vec![0u64; g.order()];
    for (&(u, v), &l) in g.edges().iter().zip(f.labels()) {
        weights[u] += u64::from(l);
        weights[v] += u64::from(l);
    }
    Ok(WeightProfile::from_weights(weights))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Distinct vertex weights.
    Irregular,
    /// Vertex weights form a complete residue system modulo the order.
    Modular,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Irregular => "irregular",
            Mode::Modular => "modular",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "irregular" | "s" => Ok(Mode::Irregular),
            "modular" | "ms" => Ok(Mode::Modular),
            other => Err(format!("unknown mode `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    DuplicateWeight { u: usize, v: usize, weight: u64 },
    ResidueCollision { u: usize, v: usize, residue: u64 },
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Verdict::Ok => f.write_str("ok"),
            Verdict::DuplicateWeight { u, v, weight } => {
                write!(f, "duplicate weight {weight} on vertices {u} and {v}")
            }
            Verdict::ResidueCollision { u, v, residue } => {
                write!(f, "residue collision {residue} on vertices {u} and {v}")
            }
        }
    }
}

/// First `(u, v)` with `u < v` and equal values, minimising `v`; `u` is the
/// earliest vertex holding that value.
///
/// Values up to `8 * len` go through a dense table; the rest are sorted.
fn first_collision(values: &[u64]) -> Option<(usize, usize, u64)> {
    const NONE: usize = usize::MAX;
    let cap = 8 * values.len() as u64;
    let dense_len = values.iter().copied().filter(|&x| x <= cap).max().map_or(0, |m| m as usize + 1);
    let mut seen = vec![NONE; dense_len];
    let mut sparse = Vec::new();
    let mut best: Option<(usize, usize, u64)> = None;
    for (v, &x) in values.iter().enumerate() {
        if x > cap {
            sparse.push((x, v));
            continue;
        }
        let slot = &mut seen[x as usize];
        if *slot == NONE {
            *slot = v;
        } else if best.is_none() {
            best = Some((*slot, v, x));
        }
    }
    // In each run of equal values the first two entries are the run's
    // earliest vertex and its earliest collider.
    sparse.sort_unstable();
    for i in 1..sparse.len() {
        let ((x, u), (y, v)) = (sparse[i - 1], sparse[i]);
        let run_start = i == 1 || sparse[i - 2].0 != x;
        if run_start && x == y && best.is_none_or(|b| v < b.1) {
            best = Some((u, v, x));
        }
    }
    best
}

pub fn verify_irregular(g: &Graph, f: &EdgeLabeling) -> Result<Verdict> {
    let profile = vertex_weights(g, f)?;
    Ok(irregular_verdict(&profile))
}

/// The residues are a bijection onto `Z_order` exactly when they are pairwise
/// distinct, since there are `order` of them.
pub fn verify_modular(g: &Graph, f: &EdgeLabeling) -> Result<Verdict> {
    let profile = vertex_weights(g, f)?;
    Ok(modular_verdict(&profile))
}

pub fn verify(g: &Graph, f: &EdgeLabeling, mode: Mode) -> Result<Verdict> {
    match mode {
        Mode::Irregular => verify_irregular(g, f),
        Mode::Modular => verify_modular(g, f),
    }
}

fn irregular_verdict(p: &WeightProfile) -> Verdict {
    match first_collision(&p.weights) {
        None => Verdict::Ok,
        Some((u, v, weight)) => Verdict::DuplicateWeight { u, v, weight },
    }
}

fn modular_verdict(p: &WeightProfile) -> Verdict {
    match first_collision(&p.residues) {
        None => Verdict::Ok,
        Some((u, v, residue)) => Verdict::ResidueCollision { u, v, residue },
    }
}

/// A graph, a labeling and its weights, as exchanged in JSON.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    graph: Graph,
    labeling: EdgeLabeling,
    profile: WeightProfile,
    mode: Mode,
}

/// Wire layout; field order is the JSON key order.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateDoc {
    order: usize,
    edges: Vec<[usize; 2]>,
    labels: Vec<u64>,
    weights: Vec<u64>,
    residues: Vec<u64>,
    k: u64,
    mode: Mode,
}

impl Certificate {
    pub fn new(graph: Graph, labeling: EdgeLabeling, mode: Mode) -> Result<Self> {
        let profile = vertex_weights(&graph, &labeling)?;
        Ok(Certificate { graph, labeling, profile, mode })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labeling(&self) -> &EdgeLabeling {
        &self.labeling
    }

    pub fn profile(&self) -> &WeightProfile {
        &self.profile
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Runs the verifier for the certificate's own mode.
    pub fn check(&self) -> Verdict {
        match self.mode {
            Mode::Irregular => irregular_verdict(&self.profile),
            Mode::Modular => modular_verdict(&self.profile),
        }
    }

    fn doc(&self) -> CertificateDoc {
        CertificateDoc {
            order: self.graph.order(),
            edges: self.graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
            labels: self.labeling.labels().iter().map(|&l| l.into()).collect(),
            weights: self.profile.weights.clone(),
            residues: self.profile.residues.clone(),
            k: self.labeling.k().into(),
            mode: self.mode,
        }
    }

    /// Compact single-line JSON, keys in the fixed wire order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serialisation cannot fail")
    }

    /// Parses and re-derives a certificate. The stored weights, residues and
    /// `k` must match what the graph and labels produce exactly; the edge list
    /// must already be canonical.
    pub fn from_json(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::Certificate(msg);
        let doc: CertificateDoc = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        let edges: Vec<_> = doc.edges.iter().map(|&[u, v]| (u, v)).collect();
        let graph = Graph::new(doc.order, edges.iter().copied()).map_err(|e| bad(e.to_string()))?;
        if graph.edges() != edges.as_slice() {
            return Err(bad("edges are not in canonical order".into()));
        }
        let labels = doc
            .labels
            .iter()
            .map(|&l| u32::try_from(l).ok().filter(|&l| l <= MAX_LABEL).ok_or(Error::LabelTooLarge(l)))
            .collect::<Result<Vec<_>>>()?;
        let labeling = EdgeLabeling::new(labels)?;
        let cert = Certificate::new(graph, labeling, doc.mode)?;
        if cert.profile.weights != doc.weights {
            return Err(bad("weights do not match the labeling".into()));
        }
        if cert.profile.residues != doc.residues {
            return Err(bad("residues do not match the weights".into()));
        }
        if u64::from(cert.labeling.k()) != doc.k {
            return Err(bad(format!("k = {} but the largest label is {}", doc.k, cert.labeling.k())));
        }
        Ok(cert)
    }
}

impl Serialize for Certificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.doc().serialize(s)
    }
}
