//! The matching map `Mat` and its inverse.
//!
//! `Mat` reads the valley sequence `K(p)` of a path and grows one block of a
//! perfect matching from every entry. Unbarred entries `v` grow from `v`
//! through the still unused integers in cyclically decreasing order.
//! Barred entries `ī` grow from `N + 1 − i` in cyclically increasing order.
//! The result is the path whose perfect matching is the block family. For
//! the Fuss slopes `(1, k)` every block has `k + 1` elements. For a general
//! slope a block keeps growing while the block family stays admissible.
//!
//! `Mat⁻¹` selects from every block of `pm(q)` the element maximising the
//! height `H` and reads the selection as a K-set.

mod kseq;

use ratdyck_matchings::{pm, MatchingError, PerfectMatching};
use ratdyck_paths::{enumerate_paths, DyckPath, PathError, Slope};
use thiserror::Error;

pub use kseq::{k_sequence, path_from_k_set, BarInt, BarSequence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatMapError {
    #[error("{0} is not the K-sequence of any path")]
    InvalidKSequence(String),
    #[error("no admissible block grows from {start} in {path}")]
    NoAdmissibleBlock { start: usize, path: String },
    #[error("entry {entry} starts at {start}, which an earlier block already used")]
    StartUsed { entry: String, start: usize },
    #[error("block family does not come from a path: {0}")]
    Matching(#[from] MatchingError),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("slope mismatch: context for {expected}, path of {found}")]
    SlopeMismatch { expected: Slope, found: Slope },
    #[error("cannot parse {0:?} as a barred integer")]
    Parse(String),
}

/// Orders the unused integers of `[1, N]` for the block grown from `entry`:
/// the start first, then cyclically decreasing (unbarred) or increasing
/// (barred) through the remaining set.
fn growth_order(entry: BarInt, total: usize, used: &[bool]) -> Vec<usize> {
    let start = entry.ground_position(total);
    let mut order = Vec::with_capacity(total);
    let mut c = start;
    for _ in 0..total {
        if !used[c] {
            order.push(c);
        }
        c = if entry.barred {
            c % total + 1
        } else if c == 1 {
            total
        } else {
            c - 1
        };
    }
    order
}

fn sorted(block: &[usize]) -> Vec<usize> {
    let mut b = block.to_vec();
    b.sort_unstable();
    b
}

/// Precomputed perfect matchings of every path of a slope, used to decide
/// admissibility when `Mat` grows blocks for a general slope.
#[derive(Clone, Debug)]
pub struct MatContext {
    slope: Slope,
    matchings: Vec<PerfectMatching>,
}

impl MatContext {
    pub fn new(slope: Slope) -> Self {
        let matchings = enumerate_paths(slope).iter().map(pm).collect();
        MatContext { slope, matchings }
    }

    pub fn slope(&self) -> Slope {
        self.slope
    }

    /// A block family is admissible when some path of the slope has a
    /// perfect matching containing all of `chosen` together with
    /// `candidate`.
    pub fn admissible(&self, chosen: &[Vec<usize>], candidate: &[usize]) -> bool {
        let candidate = sorted(candidate);
        self.matchings
            .iter()
            .any(|m| m.contains_block(&candidate) && chosen.iter().all(|b| m.contains_block(b)))
    }

    /// The blocks of `Mat(p)` in construction order, each listed in growth
    /// order, followed by the image path.
    pub fn mat_blocks(&self, p: &DyckPath) -> Result<(Vec<Vec<usize>>, DyckPath), MatMapError> {
        if p.slope() != self.slope {
            return Err(MatMapError::SlopeMismatch {
                expected: self.slope,
                found: p.slope(),
            });
        }
        let total = p.len();
        let min_size = self.slope.b() / self.slope.a() + 1;
        let mut used = vec![false; total + 1];
        let mut live: Vec<&PerfectMatching> = self.matchings.iter().collect();
        let mut blocks = Vec::new();
        for &entry in k_sequence(p).entries() {
            let start = entry.ground_position(total);
            if used[start] {
                return Err(MatMapError::StartUsed {
                    entry: entry.to_string(),
                    start,
                });
            }
            let order = growth_order(entry, total, &used);
            let fits = |size: usize, live: &[&PerfectMatching]| {
                let block = sorted(&order[..size]);
                live.iter().any(|m| m.contains_block(&block))
            };
            // Grow to the first admissible size, then keep growing while the
            // family stays admissible.
            let mut size = None;
            for s in min_size..=order.len() {
                if fits(s, &live) {
                    size = Some(s);
                } else if size.is_some() {
                    break;
                }
            }
            let size = size.ok_or_else(|| MatMapError::NoAdmissibleBlock {
                start,
                path: p.to_string(),
            })?;
            let block = order[..size].to_vec();
            let key = sorted(&block);
            live.retain(|m| m.contains_block(&key));
            for &x in &block {
                used[x] = true;
            }
            blocks.push(block);
        }
        let matching = PerfectMatching::new(total, blocks.clone())?;
        let image = ratdyck_matchings::pm_inverse(&matching, self.slope)?;
        Ok((blocks, image))
    }

    /// `Mat(p)`.
    pub fn mat(&self, p: &DyckPath) -> Result<DyckPath, MatMapError> {
        Ok(self.mat_blocks(p)?.1)
    }
}

/// The blocks of `Mat(p)` for a Fuss slope `(1, k)`, where every block has
/// exactly `k + 1` elements.
pub fn mat_blocks_fuss(p: &DyckPath) -> Result<(Vec<Vec<usize>>, DyckPath), MatMapError> {
    let slope = p.slope();
    assert!(slope.is_fuss(), "fixed block sizes need a slope (1, k)");
    let total = p.len();
    let size = slope.b() + 1;
    let mut used = vec![false; total + 1];
    let mut blocks = Vec::new();
    for &entry in k_sequence(p).entries() {
        let start = entry.ground_position(total);
        if used[start] {
            return Err(MatMapError::StartUsed {
                entry: entry.to_string(),
                start,
            });
        }
        let order = growth_order(entry, total, &used);
        if order.len() < size {
            return Err(MatMapError::NoAdmissibleBlock {
                start,
                path: p.to_string(),
            });
        }
        let block = order[..size].to_vec();
        for &x in &block {
            used[x] = true;
        }
        blocks.push(block);
    }
    let matching = PerfectMatching::new(total, blocks.clone())?;
    let image = ratdyck_matchings::pm_inverse(&matching, slope)?;
    Ok((blocks, image))
}

/// `Mat(p)`. Fuss slopes use fixed block sizes; other slopes build a
/// [`MatContext`] (reuse one directly when mapping many paths).
pub fn mat(p: &DyckPath) -> Result<DyckPath, MatMapError> {
    if p.slope().is_fuss() {
        Ok(mat_blocks_fuss(p)?.1)
    } else {
        MatContext::new(p.slope()).mat(p)
    }
}

/// Height used by `Mat⁻¹`: `H(v) = v` for unbarred entries and
/// `H(ī) = ⌈bi/a⌉` for barred ones.
pub fn height(entry: BarInt, slope: Slope) -> usize {
    if entry.barred {
        (slope.b() * entry.value).div_ceil(slope.a())
    } else {
        entry.value
    }
}

/// The K-set selected by `Mat⁻¹` from `pm(q)`, one entry per block in
/// block order. Elements above `bn` are read as barred `N + 1 − v`. Every
/// block contributes its element of largest height, and on equal heights
/// the barred entry wins.
pub fn mat_inverse_selection(q: &DyckPath) -> Vec<BarInt> {
    let slope = q.slope();
    let total = q.len();
    let bn = slope.rights();
    pm(q)
        .blocks()
        .iter()
        .map(|block| {
            block
                .iter()
                .map(|&v| {
                    if v > bn {
                        BarInt::bar(total + 1 - v)
                    } else {
                        BarInt::plain(v)
                    }
                })
                .max_by_key(|&e| (height(e, slope), e.barred))
                .expect("blocks are non-empty")
        })
        .collect()
}

/// `Mat⁻¹(q)`.
pub fn mat_inverse(q: &DyckPath) -> Result<DyckPath, MatMapError> {
    path_from_k_set(q.slope(), &mat_inverse_selection(q))
}
