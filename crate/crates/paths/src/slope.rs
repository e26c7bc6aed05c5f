use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::PathError;

/// A coprime slope `(a, b)` together with the path size `n`.
///
/// Paths of this slope run from `(0, 0)` to `(bn, an)` with `an` up steps and
/// `bn` right steps, so they have `N = (a + b)n` steps in total.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SlopeRecord")]
pub struct Slope {
    a: usize,
    b: usize,
    n: usize,
}

#[derive(Deserialize)]
struct SlopeRecord {
    a: usize,
    b: usize,
    n: usize,
}

impl TryFrom<SlopeRecord> for Slope {
    type Error = PathError;

    fn try_from(r: SlopeRecord) -> Result<Self, PathError> {
        Slope::new(r.a, r.b, r.n)
    }
}

impl Slope {
    /// Validates `a, b ≥ 1`, `gcd(a, b) = 1` and `n ≥ 1`.
    pub fn new(a: usize, b: usize, n: usize) -> Result<Self, PathError> {
        if a == 0 || b == 0 {
            return Err(PathError::ZeroParameter { a, b });
        }
        if n == 0 {
            return Err(PathError::ZeroSize);
        }
        if a.gcd(&b) != 1 {
            return Err(PathError::NotCoprime { a, b });
        }
        Ok(Slope { a, b, n })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of up steps, `an`.
    pub fn ups(&self) -> usize {
        self.a * self.n
    }

    /// Number of right steps, `bn`.
    pub fn rights(&self) -> usize {
        self.b * self.n
    }

    /// Total number of steps `N = (a + b)n`.
    pub fn len(&self) -> usize {
        (self.a + self.b) * self.n
    }

    /// A slope always describes at least one step.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The slope `(b, a)` of the same size, target of the star operation.
    pub fn dual(&self) -> Slope {
        Slope {
            a: self.b,
            b: self.a,
            n: self.n,
        }
    }

    /// The same `(a, b)` with a different size.
    pub fn with_n(&self, n: usize) -> Result<Slope, PathError> {
        Slope::new(self.a, self.b, n)
    }

    /// True for the Fuss slopes `(1, k)`.
    pub fn is_fuss(&self) -> bool {
        self.a == 1
    }

    /// Largest admissible position of the `j`-th up step (1-based):
    /// `⌊(j − 1)b/a⌋ + j`.
    pub fn step_bound(&self, j: usize) -> usize {
        (j - 1) * self.b / self.a + j
    }

    /// Number of boxes of row `i` (1-based from the top) of the staircase
    /// region between the lowest and the top path: `⌊(an − i)b/a⌋`.
    pub fn max_row(&self, i: usize) -> usize {
        (self.ups() - i) * self.b / self.a
    }

    /// True when the lattice point `(x, y)` lies weakly above `y = ax/b`.
    pub fn above_line(&self, x: usize, y: usize) -> bool {
        self.b * y >= self.a * x
    }

    /// True when `(x, y)` lies exactly on the line `y = ax/b`.
    pub fn on_line(&self, x: usize, y: usize) -> bool {
        self.b * y == self.a * x
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a,b)=({},{}), n={}", self.a, self.b, self.n)
    }
}
