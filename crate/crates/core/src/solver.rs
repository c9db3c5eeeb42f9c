//! Exact irregularity strengths by exhaustive search.
//!
//! For each `k` from the degree lower bound upwards, a depth-first search
//! assigns labels `1..=k` to the edges in canonical order. A vertex is
//! finalised once all of its incident edges carry a label; its weight (or
//! residue) must then differ from every previously finalised vertex, otherwise
//! the branch is cut. The first complete assignment found is the
//! lexicographically smallest valid labeling, and since every smaller `k` was
//! exhausted, `k` is the strength.
//!
//! With several threads the label of the first edge is fanned out. Results are
//! reduced by first label, so the reported certificate does not depend on the
//! thread count.

use std::sync::atomic::{AtomicU32, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bounds::{lower_bound_s, modular_infinite, Strength};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::labeling::{Certificate, EdgeLabeling, Mode};

/// Upper limit on `k^size` for [`count_labelings`].
pub const ENUMERATION_GUARD: u64 = 1 << 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest `k` tried before giving up with [`Outcome::Unknown`].
    pub k_max: u32,
    pub threads: usize,
    /// Also count every valid labeling at the minimal `k`.
    pub count_solutions: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { k_max: 12, threads: 1, count_solutions: false }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.k_max == 0 {
            return Err(Error::Config("k_max must be at least 1"));
        }
        if self.threads == 0 {
            return Err(Error::Config("thread count must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InfiniteReason {
    /// Order is 2 mod 4; only possible in modular mode.
    OrderTwoModFour,
    /// Some component has at most two vertices; only reported in irregular mode.
    SmallComponent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Finite {
        k: u32,
        certificate: Certificate,
        /// Number of valid labelings with labels in `1..=k`, when requested.
        solutions: Option<u64>,
    },
    Infinite(InfiniteReason),
    /// Nothing found for any `k <= k_max`.
    Unknown { k_max: u32 },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Label assignments tried, summed over all levels.
    pub nodes: u64,
    /// `(k, nodes)` for each level searched.
    pub levels: Vec<(u32, u64)>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrengthResult {
    pub mode: Mode,
    pub outcome: Outcome,
    pub stats: SearchStats,
}

#[derive(Serialize)]
struct ResultDoc<'a> {
    mode: &'static str,
    outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k_max: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<InfiniteReason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    solutions: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<&'a Certificate>,
}

impl StrengthResult {
    /// `Some` for a determined strength, `None` when the search gave up.
    pub fn strength(&self) -> Option<Strength> {
        match self.outcome {
            Outcome::Finite { k, .. } => Some(Strength::Finite(k)),
            Outcome::Infinite(_) => Some(Strength::Infinite),
            Outcome::Unknown { .. } => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.outcome {
            Outcome::Finite { certificate, .. } => Some(certificate),
            _ => None,
        }
    }

    /// Single-line JSON; search statistics are not included.
    pub fn to_json(&self) -> String {
        let mut doc = ResultDoc {
            mode: match self.mode {
                Mode::Irregular => "s",
                Mode::Modular => "ms",
            },
            outcome: "",
            k: None,
            k_max: None,
            reason: None,
            solutions: None,
            certificate: None,
        };
        match &self.outcome {
            Outcome::Finite { k, certificate, solutions } => {
                doc.outcome = "finite";
                doc.k = Some(*k);
                doc.solutions = *solutions;
                doc.certificate = Some(certificate);
            }
            Outcome::Infinite(reason) => {
                doc.outcome = "infinite";
                doc.reason = Some(*reason);
            }
            Outcome::Unknown { k_max } => {
                doc.outcome = "unknown";
                doc.k_max = Some(*k_max);
            }
        }
        serde_json::to_string(&doc).expect("result serialisation cannot fail")
    }

    /// One-line summary of the search effort.
    pub fn stats_line(&self) -> String {
        let levels: Vec<String> = self.stats.levels.iter().map(|(k, n)| format!("{k}:{n}")).collect();
        format!(
            "nodes={} levels=[{}] elapsed_ms={:.3}",
            self.stats.nodes,
            levels.join(","),
            self.stats.elapsed.as_secs_f64() * 1e3
        )
    }
}

/// Exact strength of `g` in `mode`.
pub fn solve(g: &Graph, mode: Mode, cfg: &SolverConfig) -> Result<StrengthResult> {
    cfg.validate()?;
    if g.size() == 0 {
        return Err(Error::NoEdges);
    }
    let start = Instant::now();
    let mut stats = SearchStats::default();
    let finish = |outcome, mut stats: SearchStats| {
        stats.elapsed = start.elapsed();
        Ok(StrengthResult { mode, outcome, stats })
    };

    if mode == Mode::Modular && modular_infinite(g) {
        return finish(Outcome::Infinite(InfiniteReason::OrderTwoModFour), stats);
    }
    if g.has_small_component() {
        // ms is only ever declared infinite through the order criterion
        if mode == Mode::Modular {
            return Err(Error::SmallComponent);
        }
        return finish(Outcome::Infinite(InfiniteReason::SmallComponent), stats);
    }
    let lower = lower_bound_s(g)?;
    if cfg.k_max < lower {
        return Err(Error::KMaxBelowBound { k_max: cfg.k_max, lower });
    }

    for k in lower..=cfg.k_max {
        let (found, nodes) = if cfg.threads > 1 {
            first_parallel(g, mode, k, cfg.threads)
        } else {
            first_sequential(g, mode, k)
        };
        stats.nodes += nodes;
        stats.levels.push((k, nodes));
        if let Some(labels) = found {
            let labeling = EdgeLabeling::new(labels)?;
            let certificate = Certificate::new(g.clone(), labeling, mode)?;
            debug_assert!(certificate.check().is_ok());
            let solutions = if cfg.count_solutions {
                let mut search = Search::new(g, mode, k);
                let mut count = 0u64;
                search.run(0, &mut |_| {
                    count += 1;
                    Flow::Continue
                });
                stats.nodes += search.nodes;
                Some(count)
            } else {
                None
            };
            return finish(Outcome::Finite { k, certificate, solutions }, stats);
        }
    }
    finish(Outcome::Unknown { k_max: cfg.k_max }, stats)
}

/// Lexicographically first valid labeling with labels in `1..=k`, if any.
pub fn find_labeling(g: &Graph, mode: Mode, k: u32, threads: usize) -> Result<Option<EdgeLabeling>> {
    if k == 0 || threads == 0 {
        return Err(Error::Config("k and the thread count must be at least 1"));
    }
    let (found, _) = if threads > 1 {
        first_parallel(g, mode, k, threads)
    } else {
        first_sequential(g, mode, k)
    };
    found.map(EdgeLabeling::new).transpose()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LabelingCount {
    /// Valid labelings found.
    pub valid: u64,
    /// Size of the assignment space covered, `k^size`.
    pub assignments: u64,
}

/// Exact number of valid labelings with labels in `1..=k`.
///
/// Refuses instances whose assignment space exceeds [`ENUMERATION_GUARD`].
pub fn count_labelings(g: &Graph, mode: Mode, k: u32) -> Result<LabelingCount> {
    if k == 0 {
        return Err(Error::Config("k must be at least 1"));
    }
    let too_large = Error::SearchTooLarge { k, edges: g.size() };
    let exp = u32::try_from(g.size()).map_err(|_| too_large.clone())?;
    let assignments = u64::from(k).checked_pow(exp).filter(|&a| a <= ENUMERATION_GUARD).ok_or(too_large)?;
    let mut search = Search::new(g, mode, k);
    let mut valid = 0u64;
    search.run(0, &mut |_| {
        valid += 1;
        Flow::Continue
    });
    Ok(LabelingCount { valid, assignments })
}

fn first_sequential(g: &Graph, mode: Mode, k: u32) -> (Option<Vec<u32>>, u64) {
    let mut search = Search::new(g, mode, k);
    let mut found = None;
    search.run(0, &mut |labels| {
        found = Some(labels.to_vec());
        Flow::Stop
    });
    (found, search.nodes)
}

fn first_parallel(g: &Graph, mode: Mode, k: u32, threads: usize) -> (Option<Vec<u32>>, u64) {
    let next = AtomicU32::new(1);
    // Smallest first-edge label known to lead to a solution.
    let best = AtomicU32::new(u32::MAX);
    let nodes = AtomicU64::new(0);
    let found: Mutex<Vec<Option<Vec<u32>>>> = Mutex::new(vec![None; k as usize + 1]);
    let workers = threads.min(k as usize);

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let first = next.fetch_add(1, Ordering::Relaxed);
                if first > k || best.load(Ordering::Acquire) < first {
                    break;
                }
                let mut search = Search::new(g, mode, k);
                let mut hit = None;
                search.run_with_first(first, &|| best.load(Ordering::Acquire) < first, &mut |labels| {
                    hit = Some(labels.to_vec());
                    Flow::Stop
                });
                nodes.fetch_add(search.nodes, Ordering::Relaxed);
                if let Some(labels) = hit {
                    found.lock().expect("no worker panics while holding the lock")[first as usize] = Some(labels);
                    best.fetch_min(first, Ordering::AcqRel);
                }
            });
        }
    });

    let first = found.into_inner().expect("workers joined").into_iter().flatten().next();
    (first, nodes.into_inner())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Flow {
    Continue,
    Stop,
}

/// Incremental DFS state over one graph at one `k`.
struct Search<'g> {
    edges: &'g [Edge],
    k: u32,
    modulus: Option<u64>,
    /// Unlabelled incident edges per vertex.
    remaining: Vec<u32>,
    weights: Vec<u64>,
    /// Weights (or residues) already taken by finalised vertices.
    taken: Vec<bool>,
    labels: Vec<u32>,
    /// Isolated vertices already collide; nothing is valid.
    dead: bool,
    nodes: u64,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, mode: Mode, k: u32) -> Self {
        let degrees = g.degrees();
        let modulus = (mode == Mode::Modular).then_some(g.order() as u64);
        let slots = match modulus {
            Some(n) => n as usize,
            None => g.max_degree() * k as usize + 1,
        };
        let mut search = Search {
            edges: g.edges(),
            k,
            modulus,
            remaining: degrees.iter().map(|&d| d as u32).collect(),
            weights: vec![0; g.order()],
            taken: vec![false; slots],
            labels: vec![0; g.size()],
            dead: false,
            nodes: 0,
        };
        for v in (0..g.order()).filter(|&v| degrees[v] == 0) {
            if !search.finalize(v) {
                search.dead = true;
            }
        }
        search
    }

    fn slot(&self, v: usize) -> usize {
        match self.modulus {
            Some(n) => (self.weights[v] % n) as usize,
            None => self.weights[v] as usize,
        }
    }

    fn finalize(&mut self, v: usize) -> bool {
        let s = self.slot(v);
        !std::mem::replace(&mut self.taken[s], true)
    }

    fn unfinalize(&mut self, v: usize) {
        let s = self.slot(v);
        self.taken[s] = false;
    }

    fn add(&mut self, idx: usize, label: u32) {
        let (u, v) = self.edges[idx];
        self.weights[u] += u64::from(label);
        self.weights[v] += u64::from(label);
        self.remaining[u] -= 1;
        self.remaining[v] -= 1;
    }

    fn sub(&mut self, idx: usize, label: u32) {
        let (u, v) = self.edges[idx];
        self.weights[u] -= u64::from(label);
        self.weights[v] -= u64::from(label);
        self.remaining[u] += 1;
        self.remaining[v] += 1;
    }

    /// Labels edge `idx`; on a collision the state is left unchanged.
    fn apply(&mut self, idx: usize, label: u32) -> bool {
        let (u, v) = self.edges[idx];
        self.add(idx, label);
        let u_closed = self.remaining[u] == 0;
        if u_closed && !self.finalize(u) {
            self.sub(idx, label);
            return false;
        }
        if self.remaining[v] == 0 && !self.finalize(v) {
            if u_closed {
                self.unfinalize(u);
            }
            self.sub(idx, label);
            return false;
        }
        true
    }

    fn retract(&mut self, idx: usize) {
        let (u, v) = self.edges[idx];
        if self.remaining[v] == 0 {
            self.unfinalize(v);
        }
        if self.remaining[u] == 0 {
            self.unfinalize(u);
        }
        self.sub(idx, self.labels[idx]);
    }

    fn run(&mut self, floor: usize, on_solution: &mut dyn FnMut(&[u32]) -> Flow) {
        self.descend(floor, &|| false, on_solution);
    }

    /// Searches only the subtree where the first edge carries `first`.
    fn run_with_first(&mut self, first: u32, abort: &dyn Fn() -> bool, on_solution: &mut dyn FnMut(&[u32]) -> Flow) {
        if self.dead || self.edges.is_empty() {
            return;
        }
        self.nodes += 1;
        self.labels[0] = first;
        if self.apply(0, first) {
            self.descend(1, abort, on_solution);
        }
    }

    /// Iterative DFS over edges `floor..`; edges before `floor` stay fixed.
    fn descend(&mut self, floor: usize, abort: &dyn Fn() -> bool, on_solution: &mut dyn FnMut(&[u32]) -> Flow) {
        if self.dead {
            return;
        }
        let m = self.edges.len();
        if floor == m {
            on_solution(&self.labels);
            return;
        }
        let mut idx = floor;
        loop {
            if idx == m {
                if on_solution(&self.labels) == Flow::Stop {
                    return;
                }
                idx -= 1;
                self.retract(idx);
                continue;
            }
            if self.labels[idx] == self.k {
                self.labels[idx] = 0;
                if idx == floor {
                    return;
                }
                idx -= 1;
                self.retract(idx);
                continue;
            }
            self.labels[idx] += 1;
            self.nodes += 1;
            if self.nodes & 0xfff == 0 && abort() {
                return;
            }
            if self.apply(idx, self.labels[idx]) {
                idx += 1;
            }
        }
    }
}
