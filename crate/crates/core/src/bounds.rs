//! Lower bounds on both strengths and the order criterion for modular labelings.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{degree_histogram, Graph};

/// A strength value or bound that may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strength {
    Finite(u32),
    Infinite,
}

impl Strength {
    pub fn finite(self) -> Option<u32> {
        match self {
            Strength::Finite(k) => Some(k),
            Strength::Infinite => None,
        }
    }
}

impl fmt::Display for Strength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strength::Finite(k) => write!(f, "{k}"),
            Strength::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Strength {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Strength::Finite(k) => s.serialize_u32(*k),
            Strength::Infinite => s.serialize_str("inf"),
        }
    }
}

/// `max_i ceil((n_i + i - 1) / i)` over the degrees `i` that occur, where
/// `n_i` counts vertices of degree exactly `i`.
pub fn lower_bound_s(g: &Graph) -> Result<u32> {
    if g.has_small_component() {
        return Err(Error::SmallComponent);
    }
    let hist = degree_histogram(g);
    let bound = hist
        .counts
        .iter()
        .map(|(&i, &n_i)| (n_i + i - 1).div_ceil(i))
        .max()
        .unwrap_or(1);
    Ok(u32::try_from(bound).expect("bound is at most the order"))
}

/// No modular labeling exists when `order = 2 (mod 4)`: a full residue system
/// sums to `n(n-1)/2 = n/2 (mod n)`, an odd residue, while the weights sum to
/// twice the label total.
pub fn modular_infinite(g: &Graph) -> bool {
    g.order() % 4 == 2
}

/// A modular labeling is in particular irregular, so `s <= ms` and the degree
/// bound carries over.
pub fn lower_bound_ms(g: &Graph) -> Result<Strength> {
    let s = lower_bound_s(g)?;
    Ok(if modular_infinite(g) { Strength::Infinite } else { Strength::Finite(s) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    /// Degree-count bound on the irregularity strength.
    pub s_lower: u32,
    pub ms_lower: Strength,
    pub ms_infinite: bool,
}

pub fn bound_report(g: &Graph) -> Result<BoundReport> {
    Ok(BoundReport {
        s_lower: lower_bound_s(g)?,
        ms_lower: lower_bound_ms(g)?,
        ms_infinite: modular_infinite(g),
    })
}
