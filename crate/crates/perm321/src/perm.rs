use std::fmt;

use crate::PermError;

/// A 321-avoiding permutation of `[1, n]` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation321 {
    values: Vec<usize>,
}

/// Finds a decreasing subsequence of length three, as 1-based positions.
pub fn find_321(values: &[usize]) -> Option<(usize, usize, usize)> {
    let n = values.len();
    for j in 0..n {
        let before = (0..j).find(|&i| values[i] > values[j]);
        let after = (j + 1..n).find(|&k| values[k] < values[j]);
        if let (Some(i), Some(k)) = (before, after) {
            return Some((i + 1, j + 1, k + 1));
        }
    }
    None
}

impl Permutation321 {
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let n = values.len();
        if n == 0 {
            return Err(PermError::Empty);
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotAPermutation(values.clone()));
            }
            seen[v] = true;
        }
        if let Some((i, j, k)) = find_321(&values) {
            return Err(PermError::Contains321 { i, j, k });
        }
        Ok(Permutation321 { values })
    }

    /// Parses `2,4,1,5,3`, or the digit string `24153` when `n ≤ 9`.
    pub fn parse(text: &str) -> Result<Self, PermError> {
        let text = text.trim();
        let bad = || PermError::Parse(text.to_string());
        let values = if text.contains(',') {
            text.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?
        } else {
            text.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<Vec<_>, _>>()?
        };
        Permutation321::new(values)
    }

    pub fn identity(n: usize) -> Self {
        Permutation321 {
            values: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `w(i)` for `1 ≤ i ≤ n`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn inverse(&self) -> Permutation321 {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation321 { values: inv }
    }

    pub fn rothe_marks(&self) -> RotheMarks {
        RotheMarks {
            marks: self
                .values
                .iter()
                .enumerate()
                .map(|(i, &v)| (i + 1, v))
                .collect(),
        }
    }
}

impl fmt::Display for Permutation321 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        if self.len() <= 9 {
            f.write_str(&parts.concat())
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

/// Where a Rothe mark sits relative to the main diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MarkKind {
    Above,
    Diagonal,
    Below,
}

/// The marks `(i, w_i)` of a Rothe diagram. Columns run left to right and
/// rows bottom to top, so the diagonal is the set of cells `(i, i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotheMarks {
    marks: Vec<(usize, usize)>,
}

impl RotheMarks {
    pub fn n(&self) -> usize {
        self.marks.len()
    }

    pub fn marks(&self) -> &[(usize, usize)] {
        &self.marks
    }

    pub fn kind(column: usize, row: usize) -> MarkKind {
        match row.cmp(&column) {
            std::cmp::Ordering::Greater => MarkKind::Above,
            std::cmp::Ordering::Equal => MarkKind::Diagonal,
            std::cmp::Ordering::Less => MarkKind::Below,
        }
    }

    pub fn of_kind(&self, kind: MarkKind) -> Vec<(usize, usize)> {
        self.marks
            .iter()
            .copied()
            .filter(|&(c, r)| Self::kind(c, r) == kind)
            .collect()
    }
}

/// Visits every 321-avoiding permutation of `[1, n]` in lexicographic order.
///
/// A value `x` can be appended to a prefix unless it is smaller than some
/// entry that already has a larger entry before it.
pub fn for_each_perm321<F: FnMut(&[usize])>(n: usize, mut visit: F) {
    fn go<F: FnMut(&[usize])>(
        n: usize,
        prefix: &mut Vec<usize>,
        used: &mut [bool],
        max: usize,
        blocked_below: usize,
        visit: &mut F,
    ) {
        if prefix.len() == n {
            visit(prefix);
            return;
        }
        for x in blocked_below + 1..=n {
            if used[x] {
                continue;
            }
            used[x] = true;
            prefix.push(x);
            let (new_max, new_blocked) = if x > max {
                (x, blocked_below)
            } else {
                (max, x)
            };
            go(n, prefix, used, new_max, new_blocked, visit);
            prefix.pop();
            used[x] = false;
        }
    }
    let mut used = vec![false; n + 1];
    go(n, &mut Vec::with_capacity(n), &mut used, 0, 0, &mut visit);
}

pub fn perms321(n: usize) -> Vec<Permutation321> {
    let mut out = Vec::new();
    for_each_perm321(n, |w| {
        out.push(Permutation321 { values: w.to_vec() });
    });
    out
}
