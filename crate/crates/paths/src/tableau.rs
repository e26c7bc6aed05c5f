use crate::{DyckPath, PathError, Slope};

/// The two-row `(a, b)`-Young tableau of a path.
///
/// The first row holds the up-step positions and the second row the
/// right-step positions, both increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ABTableau {
    slope: Slope,
    first_row: Vec<usize>,
    second_row: Vec<usize>,
}

impl ABTableau {
    /// Validates that the rows partition `[1, (a + b)n]` and that converting
    /// back yields a valid path.
    pub fn new(
        slope: Slope,
        first_row: Vec<usize>,
        second_row: Vec<usize>,
    ) -> Result<Self, PathError> {
        let total = slope.len();
        let mut seen = vec![false; total + 1];
        for &v in first_row.iter().chain(&second_row) {
            if v == 0 || v > total || seen[v] {
                return Err(PathError::BadTableau(total));
            }
            seen[v] = true;
        }
        if first_row.len() + second_row.len() != total
            || second_row.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(PathError::BadTableau(total));
        }
        DyckPath::new(slope, first_row.clone())?;
        Ok(ABTableau {
            slope,
            first_row,
            second_row,
        })
    }

    pub fn slope(&self) -> Slope {
        self.slope
    }

    pub fn first_row(&self) -> &[usize] {
        &self.first_row
    }

    pub fn second_row(&self) -> &[usize] {
        &self.second_row
    }

    pub fn to_path(&self) -> DyckPath {
        DyckPath::from_steps_unchecked(self.slope, self.first_row.clone())
    }

    /// Relabels every entry `i ↦ N + 1 − i` and swaps the rows, giving a
    /// `(b, a)`-tableau. This is an involution.
    pub fn star(&self) -> ABTableau {
        let total = self.slope.len();
        let flip = |row: &[usize]| {
            let mut out: Vec<usize> = row.iter().map(|&i| total + 1 - i).collect();
            out.sort_unstable();
            out
        };
        ABTableau {
            slope: self.slope.dual(),
            first_row: flip(&self.second_row),
            second_row: flip(&self.first_row),
        }
    }
}

impl DyckPath {
    pub fn to_tableau(&self) -> ABTableau {
        ABTableau {
            slope: self.slope(),
            first_row: self.steps().to_vec(),
            second_row: self.right_steps(),
        }
    }

    pub fn from_tableau(t: &ABTableau) -> DyckPath {
        t.to_path()
    }
}
