use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has no edges")]
    NoEdges,
    #[error("order {0} exceeds the limit of {limit}", limit = crate::graph::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("book graph needs at least one page (n >= 1)")]
    NoPages,
    #[error("{family} needs {min}, got {got}")]
    FamilyTooSmall {
        family: &'static str,
        min: &'static str,
        got: usize,
    },
    #[error("edge labels must be positive (edge {0} has label 0)")]
    ZeroLabel(usize),
    #[error("label {0} exceeds the limit of {limit}", limit = crate::labeling::MAX_LABEL)]
    LabelTooLarge(u64),
    #[error("labeling has {labels} labels but the graph has {edges} edges")]
    LengthMismatch { labels: usize, edges: usize },
    #[error("graph has a component of order at most 2")]
    SmallComponent,
    #[error("no modular labeling exists for n = {0} (n = 0 mod 4)")]
    InfiniteClass(usize),
    #[error("k_max = {k_max} is below the lower bound {lower}")]
    KMaxBelowBound { k_max: u32, lower: u32 },
    #[error("invalid solver configuration: {0}")]
    Config(&'static str),
    #[error("search space {k}^{edges} exceeds the enumeration guard of 2^40")]
    SearchTooLarge { k: u32, edges: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("certificate: {0}")]
    Certificate(String),
}
