use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{PathError, Slope};

/// A rational `(a, b)`-Dyck path stored as its step sequence.
///
/// `steps` lists the 1-based positions of the `an` up steps in increasing
/// order. Every other position in `[1, (a + b)n]` is a right step.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PathRecord", into = "PathRecord")]
pub struct DyckPath {
    slope: Slope,
    steps: Vec<usize>,
}

/// JSON shape of a path: `{"a":1,"b":2,"n":3,"steps":[1,3,5]}`.
#[derive(Clone, Serialize, Deserialize)]
struct PathRecord {
    a: usize,
    b: usize,
    n: usize,
    steps: Vec<usize>,
}

impl TryFrom<PathRecord> for DyckPath {
    type Error = PathError;

    fn try_from(r: PathRecord) -> Result<Self, PathError> {
        DyckPath::new(Slope::new(r.a, r.b, r.n)?, r.steps)
    }
}

impl From<DyckPath> for PathRecord {
    fn from(p: DyckPath) -> Self {
        PathRecord {
            a: p.slope.a(),
            b: p.slope.b(),
            n: p.slope.n(),
            steps: p.steps,
        }
    }
}

/// Checks the step-sequence description of a path: strictly increasing,
/// `an` entries in `[1, N]`, `u_1 = 1` and `u_j ≤ ⌊(j − 1)b/a⌋ + j`.
pub fn check_step_bounds(slope: Slope, steps: &[usize]) -> Result<(), PathError> {
    if steps.len() != slope.ups() {
        return Err(PathError::WrongLength {
            expected: slope.ups(),
            found: steps.len(),
        });
    }
    for (index, w) in steps.windows(2).enumerate() {
        if w[0] >= w[1] {
            return Err(PathError::NotIncreasing { index: index + 1 });
        }
    }
    for &value in steps {
        if value == 0 || value > slope.len() {
            return Err(PathError::OutOfRange {
                value,
                max: slope.len(),
            });
        }
    }
    if steps[0] != 1 {
        return Err(PathError::FirstStepNotUp);
    }
    for (j, &value) in steps.iter().enumerate() {
        let bound = slope.step_bound(j + 1);
        if value > bound {
            return Err(PathError::BoundViolation {
                index: j + 1,
                value,
                bound,
            });
        }
    }
    Ok(())
}

/// Walks the lattice path given by an up-step indicator and checks that every
/// vertex lies weakly above `y = ax/b` and that it ends at `(bn, an)`.
pub fn check_above_line(slope: Slope, is_up: &[bool]) -> Result<(), PathError> {
    if is_up.len() != slope.len() {
        return Err(PathError::WordLength {
            expected: slope.len(),
            found: is_up.len(),
        });
    }
    let (mut x, mut y) = (0usize, 0usize);
    for &up in is_up {
        if up {
            y += 1;
        } else {
            x += 1;
            if !slope.above_line(x, y) {
                return Err(PathError::BelowLine {
                    a: slope.a(),
                    b: slope.b(),
                    x,
                    y,
                });
            }
        }
    }
    if y != slope.ups() {
        return Err(PathError::WrongLength {
            expected: slope.ups(),
            found: y,
        });
    }
    Ok(())
}

fn indicator(len: usize, steps: &[usize]) -> Vec<bool> {
    let mut is_up = vec![false; len];
    for &s in steps {
        is_up[s - 1] = true;
    }
    is_up
}

impl DyckPath {
    /// Validates a step sequence both through the step bounds and
    /// geometrically against the line `y = ax/b`.
    pub fn new(slope: Slope, steps: Vec<usize>) -> Result<Self, PathError> {
        check_step_bounds(slope, &steps)?;
        check_above_line(slope, &indicator(slope.len(), &steps))?;
        Ok(DyckPath { slope, steps })
    }

    /// Builds a path without validation. Callers must guarantee validity.
    pub fn from_steps_unchecked(slope: Slope, steps: Vec<usize>) -> Self {
        debug_assert!(check_step_bounds(slope, &steps).is_ok(), "{steps:?}");
        DyckPath { slope, steps }
    }

    /// Parses a word over `{U, R}`.
    pub fn from_word(slope: Slope, word: &str) -> Result<Self, PathError> {
        let mut steps = Vec::new();
        let mut len = 0;
        for (i, c) in word.chars().filter(|c| !c.is_whitespace()).enumerate() {
            match c {
                'U' | 'u' => steps.push(i + 1),
                'R' | 'r' => {}
                other => return Err(PathError::BadLetter(other)),
            }
            len = i + 1;
        }
        if len != slope.len() {
            return Err(PathError::WordLength {
                expected: slope.len(),
                found: len,
            });
        }
        DyckPath::new(slope, steps)
    }

    /// Parses a path literal: comma-separated steps (`1,3,5`), a word over
    /// `U`/`R`, or, when `(a + b)n ≤ 9`, a digit string such as `147`.
    pub fn parse(slope: Slope, text: &str) -> Result<Self, PathError> {
        let text = text.trim();
        let bad = || PathError::Parse(text.to_string());
        if text.is_empty() {
            return Err(bad());
        }
        if text.chars().all(|c| matches!(c, 'U' | 'R' | 'u' | 'r')) {
            return DyckPath::from_word(slope, text);
        }
        let steps: Vec<usize> = if text.contains(',') {
            text.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else if slope.len() <= 9 && text.chars().all(|c| c.is_ascii_digit()) {
            text.chars().map(|c| c as usize - '0' as usize).collect()
        } else if slope.ups() == 1 {
            vec![text.parse::<usize>().map_err(|_| bad())?]
        } else {
            return Err(bad());
        };
        DyckPath::new(slope, steps)
    }

    /// The top path `U^{an} R^{bn}`.
    pub fn top(slope: Slope) -> Self {
        DyckPath {
            slope,
            steps: (1..=slope.ups()).collect(),
        }
    }

    /// The lowest path, whose up steps sit at their largest admissible
    /// positions.
    pub fn lowest(slope: Slope) -> Self {
        DyckPath {
            slope,
            steps: (1..=slope.ups()).map(|j| slope.step_bound(j)).collect(),
        }
    }

    pub fn slope(&self) -> Slope {
        self.slope
    }

    /// The step sequence `(u_1, …, u_{an})`.
    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<usize> {
        self.steps
    }

    /// Total number of steps `(a + b)n`.
    pub fn len(&self) -> usize {
        self.slope.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Per-position indicator: entry `i − 1` is true when step `i` is up.
    pub fn up_indicator(&self) -> Vec<bool> {
        indicator(self.len(), &self.steps)
    }

    /// True when position `pos` (1-based) is an up step.
    pub fn is_up(&self, pos: usize) -> bool {
        self.steps.binary_search(&pos).is_ok()
    }

    /// Positions of the right steps, increasing.
    pub fn right_steps(&self) -> Vec<usize> {
        let up = self.up_indicator();
        (1..=self.len()).filter(|&i| !up[i - 1]).collect()
    }

    /// The word over `{U, R}`.
    pub fn word(&self) -> String {
        self.up_indicator()
            .into_iter()
            .map(|u| if u { 'U' } else { 'R' })
            .collect()
    }

    /// Lattice points visited by the path; entry `i` is the point reached
    /// after `i` steps, so entry 0 is the origin.
    pub fn vertices(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let (mut x, mut y) = (0, 0);
        out.push((x, y));
        for up in self.up_indicator() {
            if up {
                y += 1;
            } else {
                x += 1;
            }
            out.push((x, y));
        }
        out
    }

    /// True when the path meets `y = ax/b` only at its two endpoints.
    pub fn is_prime(&self) -> bool {
        let v = self.vertices();
        v[1..v.len() - 1]
            .iter()
            .all(|&(x, y)| !self.slope.on_line(x, y))
    }

    /// Boxes between the path and the top path, one entry per row read from
    /// the top: `rows[i] = u_{an+1−i} − (an + 1 − i)`.
    pub fn young_rows(&self) -> Vec<usize> {
        let an = self.slope.ups();
        (1..=an)
            .map(|i| self.steps[an - i] - (an + 1 - i))
            .collect()
    }

    /// Inverse of [`DyckPath::young_rows`].
    pub fn from_young_rows(slope: Slope, rows: &[usize]) -> Result<Self, PathError> {
        let an = slope.ups();
        if rows.len() != an {
            return Err(PathError::RowsLength {
                expected: an,
                found: rows.len(),
            });
        }
        for (i, &len) in rows.iter().enumerate() {
            if i > 0 && rows[i - 1] < len {
                return Err(PathError::RowsNotDecreasing { index: i + 1 });
            }
            let max = slope.max_row(i + 1);
            if len > max {
                return Err(PathError::RowTooLong {
                    row: i + 1,
                    len,
                    max,
                });
            }
        }
        DyckPath::new(slope, Self::steps_from_rows(an, rows))
    }

    /// Builds a path from rows already known to fit the staircase region.
    pub fn from_young_rows_unchecked(slope: Slope, rows: &[usize]) -> Self {
        DyckPath::from_steps_unchecked(slope, Self::steps_from_rows(slope.ups(), rows))
    }

    fn steps_from_rows(an: usize, rows: &[usize]) -> Vec<usize> {
        (1..=an).map(|j| rows[an - j] + j).collect()
    }

    /// The star operation on paths: reverse the positions of the right
    /// steps, `i ↦ N + 1 − i`, and read them as the up steps of a
    /// `(b, a)`-path.
    pub fn star(&self) -> DyckPath {
        let total = self.len();
        let mut steps: Vec<usize> = self.right_steps().iter().map(|&i| total + 1 - i).collect();
        steps.sort_unstable();
        DyckPath::from_steps_unchecked(self.slope.dual(), steps)
    }

    /// Compact one-line notation: digits run together when every position
    /// is a single digit, comma-separated otherwise.
    pub fn compact(&self) -> String {
        if self.len() <= 9 {
            self.steps.iter().map(|s| s.to_string()).collect()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}
