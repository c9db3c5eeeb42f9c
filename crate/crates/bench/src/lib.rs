//! Shared fixtures for the benchmarks.

use irrstrength_core::graph::{make_triangular_book, BookParams};
use irrstrength_core::Graph;

pub fn book(n: usize) -> Graph {
    make_triangular_book(BookParams::new(n).expect("n >= 1"))
}

pub fn params(n: usize) -> BookParams {
    BookParams::new(n).expect("n >= 1")
}
