//! Perfect matchings attached to rational Dyck paths.
//!
//! [`pm`] sends a path to a non-crossing partition of `[1, (a + b)n]` by
//! firing a line of slope `a/b` from the foot of every up step. [`dpm`] is
//! its dual through the star operation. The bar involution, rotation and
//! the inverse map back to paths complete the toolkit.

mod matching;

use ratdyck_paths::{DyckPath, PathError, Slope};
use thiserror::Error;

pub use matching::{blocks_are_noncrossing, PerfectMatching};

/// Errors raised by matching construction and inversion.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("empty block")]
    EmptyBlock,
    #[error("element {value} lies outside [1, {ground}]")]
    OutOfRange { value: usize, ground: usize },
    #[error("element {0} appears in two blocks")]
    Repeated(usize),
    #[error("element {0} is not covered by any block")]
    Missing(usize),
    #[error("blocks cross")]
    Crossing,
    #[error("block minima do not form a valid path: {0}")]
    Path(#[from] PathError),
    #[error("matching {0} is not the perfect matching of any path of this slope")]
    NotAPathMatching(String),
    #[error("the slope-line construction left right steps {0:?} unassigned")]
    Incomplete(Vec<usize>),
    #[error("cannot parse {0:?} as a matching")]
    Parse(String),
}

/// The perfect matching of a path, or an error if the construction does not
/// cover every right step.
///
/// Up steps are processed from the last to the first. For the `m`-th up
/// step at position `u` starting from the vertex `(x0, y0)`, a line of slope
/// `a/b` is drawn from `(x0, y0)`. Its first meeting `(s, t)` with the path
/// after `u` gives the bound `⌊s⌋ + t`, and the block collects `u` with every
/// still unassigned right step in `[u + 1, ⌊s⌋ + t]`.
pub fn try_pm(p: &DyckPath) -> Result<PerfectMatching, MatchingError> {
    let slope = p.slope();
    let (a, b) = (slope.a() as i64, slope.b() as i64);
    let total = p.len();
    let vertices = p.vertices();
    let up = p.up_indicator();
    let mut unassigned: Vec<bool> = (1..=total).map(|i| !up[i - 1]).collect();
    let mut blocks = Vec::with_capacity(slope.ups());
    for &u in p.steps().iter().rev() {
        let (x0, y0) = vertices[u - 1];
        let bound = first_meeting_bound(a, b, &vertices[u..], x0, y0)
            .expect("the line from a vertex above y = ax/b meets the path by its endpoint");
        let mut block = vec![u];
        for r in u + 1..=bound.min(total) {
            if unassigned[r - 1] {
                unassigned[r - 1] = false;
                block.push(r);
            }
        }
        blocks.push(block);
    }
    let left: Vec<usize> = (1..=total).filter(|&i| unassigned[i - 1]).collect();
    if !left.is_empty() {
        return Err(MatchingError::Incomplete(left));
    }
    Ok(PerfectMatching::from_blocks_unchecked(total, blocks))
}

/// Scans the vertices after an up step for the first point where the path
/// meets the line of slope `a/b` through `(x0, y0)` and returns `⌊s⌋ + t`.
///
/// Meeting at a lattice point gives `s = x` exactly. Otherwise the path
/// crosses the line in the interior of a right step ending at `(x, y)`, so
/// `t = y` and `⌊s⌋ = x − 1`.
fn first_meeting_bound(
    a: i64,
    b: i64,
    after: &[(usize, usize)],
    x0: usize,
    y0: usize,
) -> Option<usize> {
    for &(x, y) in after {
        let side = b * (y as i64 - y0 as i64) - a * (x as i64 - x0 as i64);
        if side == 0 {
            return Some(x + y);
        }
        if side < 0 {
            return Some(x - 1 + y);
        }
    }
    None
}

/// The perfect matching of a path.
///
/// # Panics
///
/// Panics if the construction leaves a right step unassigned, which
/// [`try_pm`] reports as an error instead.
pub fn pm(p: &DyckPath) -> PerfectMatching {
    try_pm(p).unwrap_or_else(|e| panic!("pm({p}) failed: {e}"))
}

/// The dual matching: `bar(pm(star(p)))`, computed through the `(b, a)`-path.
pub fn dpm(p: &DyckPath) -> PerfectMatching {
    pm(&p.star()).bar()
}

/// Reads the up steps off the block minima without checking that the
/// matching is the one produced by [`pm`].
pub fn path_from_minima(m: &PerfectMatching, slope: Slope) -> Result<DyckPath, MatchingError> {
    Ok(DyckPath::new(slope, m.minima())?)
}

/// The path whose perfect matching is `m`: up steps sit at the block minima.
/// Fails unless `pm` of the result reproduces `m`.
pub fn pm_inverse(m: &PerfectMatching, slope: Slope) -> Result<DyckPath, MatchingError> {
    let p = path_from_minima(m, slope)?;
    if &pm(&p) != m {
        return Err(MatchingError::NotAPathMatching(m.to_string()));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noncrossing_detection() {
        assert!(blocks_are_noncrossing(4, &[vec![1, 4], vec![2, 3]]));
        assert!(!blocks_are_noncrossing(4, &[vec![1, 3], vec![2, 4]]));
        assert!(!blocks_are_noncrossing(
            6,
            &[vec![1, 4, 5], vec![2, 6], vec![3]]
        ));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            PerfectMatching::new(4, vec![vec![1, 3], vec![2, 4]]),
            Err(MatchingError::Crossing)
        );
        assert_eq!(
            PerfectMatching::new(3, vec![vec![1, 2]]),
            Err(MatchingError::Missing(3))
        );
        assert_eq!(
            PerfectMatching::new(2, vec![vec![1, 2], vec![2]]),
            Err(MatchingError::Repeated(2))
        );
    }

    #[test]
    fn parse_and_display() {
        let m = PerfectMatching::parse(10, "{1,4,10},{2,3},{5,6,9},{7,8}").unwrap();
        assert_eq!(m.to_string(), "{1,4,10},{2,3},{5,6,9},{7,8}");
        assert!(PerfectMatching::parse(4, "{1,3},{2").is_err());
    }
}
