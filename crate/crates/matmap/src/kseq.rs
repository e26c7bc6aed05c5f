use std::fmt;
use std::str::FromStr;

use ratdyck_paths::{DyckPath, Slope};

use crate::MatMapError;

/// An integer carrying a bar flag. Barred `ī` stands for a row index in
/// K-sequences and reads as `N + 1 − i` on the ground set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarInt {
    pub value: usize,
    pub barred: bool,
}

impl BarInt {
    pub fn plain(value: usize) -> Self {
        BarInt {
            value,
            barred: false,
        }
    }

    pub fn bar(value: usize) -> Self {
        BarInt {
            value,
            barred: true,
        }
    }

    /// Position on the ground set `[1, N]`: `v` itself, or `N + 1 − v`
    /// when barred.
    pub fn ground_position(self, total: usize) -> usize {
        if self.barred {
            total + 1 - self.value
        } else {
            self.value
        }
    }
}

impl fmt::Display for BarInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "~{}", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl FromStr for BarInt {
    type Err = MatMapError;

    fn from_str(s: &str) -> Result<Self, MatMapError> {
        let s = s.trim();
        let (barred, digits) = match s.strip_prefix('~') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let value = digits
            .parse::<usize>()
            .map_err(|_| MatMapError::Parse(s.to_string()))?;
        Ok(BarInt { value, barred })
    }
}

/// The K-sequence of a path: one entry per row, rows indexed from the top
/// among the up steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BarSequence {
    slope: Slope,
    entries: Vec<BarInt>,
}

impl BarSequence {
    pub fn slope(&self) -> Slope {
        self.slope
    }

    pub fn entries(&self) -> &[BarInt] {
        &self.entries
    }

    /// Parses the literal `3,5,~3`.
    pub fn parse(slope: Slope, text: &str) -> Result<Self, MatMapError> {
        let entries = text
            .split(',')
            .map(BarInt::from_str)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BarSequence { slope, entries })
    }
}

impl fmt::Display for BarSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// The K-sequence `K(p)`.
///
/// Row `i` from the top holds the up step `u = u_{an+1−i}`. If that up step
/// follows a right step, the row has a valley at abscissa `x` and
/// `k_i = bn − x + 1`. Otherwise `k_i = ī`.
pub fn k_sequence(p: &DyckPath) -> BarSequence {
    let slope = p.slope();
    let an = slope.ups();
    let steps = p.steps();
    let entries = (1..=an)
        .map(|i| {
            let u = steps[an - i];
            let up_steps_before = an - i;
            if u > 1 && !p.is_up(u - 1) {
                let x = u - 1 - up_steps_before;
                BarInt::plain(slope.rights() - x + 1)
            } else {
                BarInt::bar(i)
            }
        })
        .collect();
    BarSequence { slope, entries }
}

/// Rebuilds a path from an unordered K-set.
///
/// Barred entries name the rows without a valley. The unbarred entries,
/// sorted increasingly, fill the remaining rows from the top with valley
/// abscissa `bn − v + 1`. A row without a valley starts at the abscissa of
/// the row below it (0 for the bottom row). Fails unless the result is a
/// path whose K-sequence is exactly the given set.
pub fn path_from_k_set(slope: Slope, entries: &[BarInt]) -> Result<DyckPath, MatMapError> {
    let an = slope.ups();
    let bn = slope.rights();
    let invalid = || {
        let parts: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
        MatMapError::InvalidKSequence(parts.join(","))
    };
    if entries.len() != an {
        return Err(invalid());
    }
    let mut barred_row = vec![false; an + 1];
    for e in entries.iter().filter(|e| e.barred) {
        if e.value == 0 || e.value > an || barred_row[e.value] {
            return Err(invalid());
        }
        barred_row[e.value] = true;
    }
    let mut plain: Vec<usize> = entries
        .iter()
        .filter(|e| !e.barred)
        .map(|e| e.value)
        .collect();
    plain.sort_unstable();
    if plain.iter().any(|&v| v == 0 || v > bn) {
        return Err(invalid());
    }
    let mut valley_x = vec![None; an + 1];
    let free_rows = (1..=an).filter(|&i| !barred_row[i]);
    for (i, v) in free_rows.zip(plain.iter()) {
        valley_x[i] = Some(bn - v + 1);
    }
    let mut x = vec![0usize; an + 2];
    for i in (1..=an).rev() {
        x[i] = match valley_x[i] {
            Some(vx) => vx,
            None => x[i + 1],
        };
    }
    let steps: Vec<usize> = (1..=an).rev().map(|i| x[i] + (an + 1 - i)).collect();
    let p = DyckPath::new(slope, steps).map_err(|_| invalid())?;
    let mut want = entries.to_vec();
    want.sort_unstable();
    let mut got = k_sequence(&p).entries;
    got.sort_unstable();
    if want != got {
        return Err(invalid());
    }
    Ok(p)
}
