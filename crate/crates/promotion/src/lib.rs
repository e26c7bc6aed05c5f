//! Toggles on `(a, b)`-tableaux and the four operators built from them:
//! promotion `∂`, dual promotion `∂*`, evacuation `ev` and dual evacuation
//! `ev*`.
//!
//! A path is identified with its two-row tableau, a linear extension of the
//! tableau poset. The toggle `t_i` exchanges the labels `i` and `i + 1` when
//! the result is still standard, which on step sequences means swapping the
//! letters at positions `i` and `i + 1` when the swapped word is still a
//! path. In every product of toggles the rightmost factor acts first, so
//! `∂ = t_{N−1} ⋯ t_1` applies `t_1` first.

use ratdyck_matchings::{dpm, pm};
use ratdyck_paths::{DyckPath, Slope};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PromotionError {
    #[error("toggle index {i} outside [1, {max}]")]
    ToggleOutOfRange { i: usize, max: usize },
}

/// A toggle index `i ∈ [1, N − 1]` for a given slope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ToggleIndex(usize);

impl ToggleIndex {
    pub fn new(i: usize, slope: Slope) -> Result<Self, PromotionError> {
        let max = slope.len() - 1;
        if i == 0 || i > max {
            return Err(PromotionError::ToggleOutOfRange { i, max });
        }
        Ok(ToggleIndex(i))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// Mutable up/right word used to run long toggle sequences without
/// rebuilding a path after every toggle.
struct Word {
    slope: Slope,
    up: Vec<bool>,
}

impl Word {
    fn new(p: &DyckPath) -> Self {
        Word {
            slope: p.slope(),
            up: p.up_indicator(),
        }
    }

    /// Applies `t_i` (1-based) in place.
    fn toggle(&mut self, i: usize) {
        let (l, r) = (self.up[i - 1], self.up[i]);
        if l == r {
            return;
        }
        if l {
            // Moving an up step later lowers the vertex after step i from
            // (x, y) to (x + 1, y − 1); keep the swap only if that stays above
            // the line.
            let y = self.up[..i].iter().filter(|&&u| u).count();
            let x = i - y;
            if y == 0 || !self.slope.above_line(x + 1, y - 1) {
                return;
            }
        }
        self.up.swap(i - 1, i);
    }

    fn into_path(self) -> DyckPath {
        let steps = (1..=self.up.len()).filter(|&i| self.up[i - 1]).collect();
        DyckPath::from_steps_unchecked(self.slope, steps)
    }
}

/// Applies `t_i`. Returns the path unchanged when the swap would leave the
/// set of paths or when positions `i` and `i + 1` carry the same letter.
pub fn toggle(p: &DyckPath, i: ToggleIndex) -> DyckPath {
    let mut w = Word::new(p);
    w.toggle(i.get());
    w.into_path()
}

/// Applies toggles in the order listed: `sequence[0]` acts first.
pub fn apply_toggles(p: &DyckPath, sequence: &[usize]) -> Result<DyckPath, PromotionError> {
    for &i in sequence {
        ToggleIndex::new(i, p.slope())?;
    }
    let mut w = Word::new(p);
    for &i in sequence {
        w.toggle(i);
    }
    Ok(w.into_path())
}

/// Promotion `∂ = t_{N−1} ⋯ t_2 t_1`: applies `t_1`, then `t_2`, up to
/// `t_{N−1}`.
pub fn promotion(p: &DyckPath) -> DyckPath {
    let mut w = Word::new(p);
    for i in 1..p.len() {
        w.toggle(i);
    }
    w.into_path()
}

/// Dual promotion `∂* = t_1 t_2 ⋯ t_{N−1}`: applies `t_{N−1}` first. It is
/// the inverse of [`promotion`].
pub fn dual_promotion(p: &DyckPath) -> DyckPath {
    let mut w = Word::new(p);
    for i in (1..p.len()).rev() {
        w.toggle(i);
    }
    w.into_path()
}

/// `∂^k` for any integer `k`; negative powers use `∂*`.
pub fn promotion_power(p: &DyckPath, k: i64) -> DyckPath {
    let mut q = p.clone();
    for _ in 0..k.unsigned_abs() {
        q = if k > 0 {
            promotion(&q)
        } else {
            dual_promotion(&q)
        };
    }
    q
}

/// Evacuation by toggles, `ev = t_1 (t_2 t_1) ⋯ (t_{N−1} ⋯ t_1)`: for
/// `j = N − 1` down to `1`, apply `t_1, …, t_j`.
pub fn evacuation(p: &DyckPath) -> DyckPath {
    let mut w = Word::new(p);
    for j in (1..p.len()).rev() {
        for i in 1..=j {
            w.toggle(i);
        }
    }
    w.into_path()
}

/// Dual evacuation by toggles: for `j = 1` up to `N − 1`, apply
/// `t_{N−1}, …, t_j`.
pub fn dual_evacuation(p: &DyckPath) -> DyckPath {
    let mut w = Word::new(p);
    let total = p.len();
    for j in 1..total {
        for i in (j..total).rev() {
            w.toggle(i);
        }
    }
    w.into_path()
}

/// Evacuation through the perfect matching: the up steps of `ev(p)` are
/// `N + 1 − max(S)` over the blocks `S` of `pm(p)`.
pub fn evacuation_fast(p: &DyckPath) -> DyckPath {
    let total = p.len();
    let mut steps: Vec<usize> = pm(p)
        .blocks()
        .iter()
        .map(|b| total + 1 - b[b.len() - 1])
        .collect();
    steps.sort_unstable();
    DyckPath::from_steps_unchecked(p.slope(), steps)
}

/// Dual evacuation through the dual matching: the up steps of `ev*(p)` are
/// the complement of `{N + 1 − min(S)}` over the blocks `S` of `dpm(p)`.
pub fn dual_evacuation_fast(p: &DyckPath) -> DyckPath {
    let total = p.len();
    let mut taken = vec![false; total + 1];
    for b in dpm(p).blocks() {
        taken[total + 1 - b[0]] = true;
    }
    let steps = (1..=total).filter(|&i| !taken[i]).collect();
    DyckPath::from_steps_unchecked(p.slope(), steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toggle_index_range() {
        let s = Slope::new(1, 1, 2).unwrap();
        assert!(ToggleIndex::new(0, s).is_err());
        assert!(ToggleIndex::new(3, s).is_ok());
        assert_eq!(
            ToggleIndex::new(4, s),
            Err(PromotionError::ToggleOutOfRange { i: 4, max: 3 })
        );
    }

    #[test]
    fn first_step_never_moves() {
        let s = Slope::new(1, 1, 2).unwrap();
        let p = DyckPath::new(s, vec![1, 3]).unwrap();
        assert_eq!(toggle(&p, ToggleIndex::new(1, s).unwrap()), p);
    }
}
