//! Closed-form labelings of triangular book graphs.
//!
//! Labels are laid out in the canonical edge order of
//! [`make_triangular_book`](crate::graph::make_triangular_book):
//! `ab, ac_1..ac_n, bc_1..bc_n`. Every construction except the one-page book
//! gives the apex `c_i` weight `i + 1`, so only the two spine weights vary
//! between residue classes.
//!
//! All divisions go through [`exact_div`], which panics on a remainder: a
//! remainder means the residue class was dispatched to the wrong formula.

use serde::Serialize;

use crate::bounds::Strength;
use crate::error::{Error, Result};
use crate::graph::BookParams;
use crate::labeling::{EdgeLabeling, WeightProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Theorem {
    /// Irregular labelings, strength `s`.
    Irregular,
    /// Modular irregular labelings, strength `ms`.
    Modular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseTag {
    N1,
    N2,
    N5,
    Mod8R1,
    Mod8R5,
    Mod4R2,
    Mod4R3,
    Infinite,
    GenericOdd,
    GenericEven,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BookCase {
    pub theorem: Theorem,
    pub tag: CaseTag,
}

pub fn book_case(theorem: Theorem, p: BookParams) -> BookCase {
    let n = p.n();
    let tag = match theorem {
        Theorem::Irregular => match n {
            1 => CaseTag::N1,
            2 => CaseTag::N2,
            _ if n % 2 == 1 => CaseTag::GenericOdd,
            _ => CaseTag::GenericEven,
        },
        Theorem::Modular => match n {
            1 => CaseTag::N1,
            5 => CaseTag::N5,
            _ if n.is_multiple_of(4) => CaseTag::Infinite,
            _ if n % 8 == 1 => CaseTag::Mod8R1,
            _ if n % 8 == 5 => CaseTag::Mod8R5,
            _ if n % 4 == 2 => CaseTag::Mod4R2,
            _ => CaseTag::Mod4R3,
        },
    };
    BookCase { theorem, tag }
}

fn exact_div(num: u64, den: u64) -> u64 {
    assert_eq!(num % den, 0, "{num} is not divisible by {den}");
    num / den
}

fn half_up(n: u64) -> u64 {
    (n + 1).div_ceil(2)
}

/// Irregularity strength of the `n`-page book.
pub fn theorem1_strength(p: BookParams) -> u32 {
    let n = p.n() as u64;
    let k = if n == 1 { 3 } else { half_up(n) };
    k as u32
}

/// Modular irregularity strength of the `n`-page book.
pub fn theorem2_strength(p: BookParams) -> Strength {
    match book_case(Theorem::Modular, p).tag {
        CaseTag::N1 => Strength::Finite(3),
        CaseTag::N5 => Strength::Finite(4),
        CaseTag::Infinite => Strength::Infinite,
        _ => Strength::Finite(half_up(p.n() as u64) as u32),
    }
}

/// Labels `ab, ac_*, bc_*` assembled into an [`EdgeLabeling`].
struct Pages {
    ab: u64,
    ac: Vec<u64>,
    bc: Vec<u64>,
}

impl Pages {
    fn new(n: usize, ab: u64) -> Self {
        Pages { ab, ac: Vec::with_capacity(n), bc: Vec::with_capacity(n) }
    }

    fn push(&mut self, ac: u64, bc: u64) {
        self.ac.push(ac);
        self.bc.push(bc);
    }

    fn into_labeling(self) -> EdgeLabeling {
        let labels = std::iter::once(self.ab)
            .chain(self.ac)
            .chain(self.bc)
            .map(|l| u32::try_from(l).expect("label fits in u32"))
            .collect();
        EdgeLabeling::new(labels).expect("constructed labels are positive")
    }
}

/// The `n = 1` labeling: weights 3, 4, 5 on `c_1`, `a`, `b`.
fn one_page() -> EdgeLabeling {
    EdgeLabeling::new(vec![3, 1, 2]).expect("static labels")
}

/// `ac_i = ceil(i/2)`, `bc_i = floor(i/2) + 1`.
pub fn theorem1_labeling(p: BookParams) -> EdgeLabeling {
    let n = p.n();
    if n == 1 {
        return one_page();
    }
    let mut pages = Pages::new(n, if n == 2 { 2 } else { 1 });
    for i in 1..=n as u64 {
        if i % 2 == 1 {
            pages.push(exact_div(i + 1, 2), exact_div(i + 1, 2));
        } else {
            pages.push(exact_div(i, 2), exact_div(i, 2) + 1);
        }
    }
    pages.into_labeling()
}

/// Returns `None` when `n = 0 (mod 4)`, where no modular labeling exists.
pub fn theorem2_labeling(p: BookParams) -> Option<EdgeLabeling> {
    let n = p.n() as u64;
    let labeling = match book_case(Theorem::Modular, p).tag {
        CaseTag::Infinite => return None,
        CaseTag::N1 => one_page(),
        CaseTag::N5 => EdgeLabeling::new(vec![1, 1, 1, 1, 2, 2, 1, 2, 3, 3, 4]).expect("static labels"),
        CaseTag::Mod8R1 => {
            let mid = exact_div(n + 1, 2);
            let mut pages = Pages::new(p.n(), 1);
            for i in 1..=n {
                if i < mid {
                    pages.push(1, i);
                } else if i == mid {
                    pages.push(exact_div(n - 1, 8) + 2, exact_div(3 * n - 3, 8));
                } else {
                    pages.push(exact_div(2 * i + 1 - n, 2), exact_div(n + 1, 2));
                }
            }
            pages.into_labeling()
        }
        CaseTag::Mod8R5 => {
            let mid = exact_div(n + 1, 2);
            let mut pages = Pages::new(p.n(), 1);
            for i in 1..=n {
                if i < mid {
                    pages.push(1, i);
                } else if i == mid {
                    pages.push(exact_div(n + 1, 2), 1);
                } else if i == mid + 1 {
                    pages.push(exact_div(n + 35, 8), exact_div(3 * n - 15, 8));
                } else {
                    // The b-side tail is (n+1)/2 so that w(c_i) = i + 1.
                    pages.push(exact_div(2 * i + 1 - n, 2), exact_div(n + 1, 2));
                }
            }
            pages.into_labeling()
        }
        tag @ (CaseTag::Mod4R2 | CaseTag::Mod4R3) => {
            let ab = if tag == CaseTag::Mod4R2 { exact_div(n + 6, 4) } else { 1 };
            let mut pages = Pages::new(p.n(), ab);
            for i in 1..=n {
                match i % 4 {
                    1 | 3 => pages.push(exact_div(i + 1, 2), exact_div(i + 1, 2)),
                    0 => pages.push(exact_div(i, 2) + 1, exact_div(i, 2)),
                    _ => pages.push(exact_div(i, 2), exact_div(i, 2) + 1),
                }
            }
            pages.into_labeling()
        }
        CaseTag::N2 | CaseTag::GenericOdd | CaseTag::GenericEven => {
            unreachable!("irregular-only case tag")
        }
    };
    Some(labeling)
}

/// Closed-form weights `(a, b, c_1..c_n)` of the construction for `theorem`.
///
/// Fails with [`Error::InfiniteClass`] for the modular construction when
/// `n = 0 (mod 4)`.
pub fn predicted_weights(theorem: Theorem, p: BookParams) -> Result<WeightProfile> {
    let n = p.n() as u64;
    let (a, b) = match book_case(theorem, p).tag {
        CaseTag::N1 => {
            return Ok(WeightProfile::from_weights(vec![4, 5, 3]));
        }
        CaseTag::N2 => (4, 5),
        CaseTag::GenericOdd => (exact_div(n * n + 2 * n + 5, 4), exact_div(n * n + 4 * n + 3, 4)),
        CaseTag::GenericEven => (exact_div(n * n + 2 * n + 4, 4), exact_div(n * n + 4 * n + 4, 4)),
        CaseTag::N5 => (8, 14),
        CaseTag::Mod8R1 => (exact_div((n + 7) * (n + 2), 8), exact_div(3 * (n - 1) * (n + 2), 8) + 1),
        CaseTag::Mod8R5 => (exact_div((n + 11) * (n + 2), 8), exact_div((3 * n - 7) * (n + 2), 8) + 1),
        CaseTag::Mod4R2 => {
            let a = exact_div((n + 2) * (n + 2), 4);
            (a, a + 1)
        }
        CaseTag::Mod4R3 => {
            let a = exact_div((n + 1) * (n + 2), 4);
            (a, a + 1)
        }
        CaseTag::Infinite => return Err(Error::InfiniteClass(p.n())),
    };
    let weights = [a, b].into_iter().chain((1..=n).map(|i| i + 1)).collect();
    Ok(WeightProfile::from_weights(weights))
}
