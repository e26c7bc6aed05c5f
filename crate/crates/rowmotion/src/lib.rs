//! Rowmotion on the box poset of a rational Dyck path.
//!
//! The boxes between a path and the top path `U^{an} R^{bn}` form an order
//! filter of the staircase region lying between the lowest and the top
//! path. Rows are indexed `i = 1..an` from the top and columns `j ≥ 1` from
//! the left, so the filter of a path is given by its Young rows. Cells are
//! ranked along anti-diagonals by `rank(i, j) = R_max − (i − 1) − (j − 1)`
//! with `R_max = ⌊(an − 1)b/a⌋ − 1`.
//!
//! Rowmotion `δ` is the product of rank toggles from the top rank down to
//! the bottom rank. It is also computed structurally as the complement of
//! the down-set generated by the minimal boxes, which serves as an oracle.

use ratdyck_paths::{DyckPath, PathError, Slope};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RowmotionError {
    #[error("rank {rank} outside [{min}, {max}]")]
    RankOutOfRange { rank: i64, min: i64, max: i64 },
    #[error("cell ({row}, {col}) lies outside the region")]
    CellOutsideRegion { row: usize, col: usize },
    #[error("box set is not closed under moving up and left")]
    NotAFilter,
    #[error(transparent)]
    Path(#[from] PathError),
}

/// The staircase region of a slope together with its rank function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxRegion {
    slope: Slope,
    row_lengths: Vec<usize>,
    rmax: i64,
    rmin: i64,
}

impl BoxRegion {
    pub fn new(slope: Slope) -> Self {
        let an = slope.ups();
        let row_lengths: Vec<usize> = (1..=an).map(|i| slope.max_row(i)).collect();
        let rmax = ((an - 1) * slope.b() / slope.a()) as i64 - 1;
        let rank = |i: usize, j: usize| rmax - (i as i64 - 1) - (j as i64 - 1);
        // The lowest rank sits at the end of some row. For a ≥ 2 it can be
        // negative, since row ends need not lie on one anti-diagonal.
        let rmin = row_lengths
            .iter()
            .enumerate()
            .filter(|(_, &len)| len >= 1)
            .map(|(i, &len)| rank(i + 1, len))
            .min()
            .unwrap_or(0);
        BoxRegion {
            slope,
            row_lengths,
            rmax,
            rmin,
        }
    }

    pub fn slope(&self) -> Slope {
        self.slope
    }

    /// Number of boxes in each row, top row first.
    pub fn row_lengths(&self) -> &[usize] {
        &self.row_lengths
    }

    /// Length of row `i` (1-based from the top).
    pub fn row_len(&self, i: usize) -> usize {
        self.row_lengths[i - 1]
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && i <= self.row_lengths.len() && j >= 1 && j <= self.row_len(i)
    }

    /// `R_max − (i − 1) − (j − 1)`.
    pub fn rank(&self, i: usize, j: usize) -> i64 {
        self.rmax - (i as i64 - 1) - (j as i64 - 1)
    }

    /// Rank of the leftmost cell of the top row.
    pub fn rmax(&self) -> i64 {
        self.rmax
    }

    /// Smallest rank of a cell in the region (0 when the region is empty).
    pub fn rmin(&self) -> i64 {
        self.rmin
    }

    pub fn is_empty(&self) -> bool {
        self.row_lengths.iter().all(|&l| l == 0)
    }

    /// Cells `(i, j)` of rank `r`, top row first.
    pub fn cells_of_rank(&self, r: i64) -> Vec<(usize, usize)> {
        (1..=self.row_lengths.len())
            .filter_map(|i| {
                let j = self.rmax - r - (i as i64 - 1) + 1;
                (j >= 1 && j as usize <= self.row_len(i)).then_some((i, j as usize))
            })
            .collect()
    }

    /// Every cell of the region, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &len) in self.row_lengths.iter().enumerate() {
            out.extend((1..=len).map(|j| (i + 1, j)));
        }
        out
    }
}

/// An order filter of the box region: a set of boxes closed under moving up
/// and left, stored as its row lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderFilter {
    slope: Slope,
    rows: Vec<usize>,
}

impl OrderFilter {
    /// Builds a filter from an explicit cell set, rejecting cells outside
    /// the region and sets that are not up-left closed.
    pub fn from_cells(slope: Slope, cells: &[(usize, usize)]) -> Result<Self, RowmotionError> {
        let region = BoxRegion::new(slope);
        let an = slope.ups();
        let mut rows = vec![0usize; an];
        for &(i, j) in cells {
            if !region.contains(i, j) {
                return Err(RowmotionError::CellOutsideRegion { row: i, col: j });
            }
            rows[i - 1] = rows[i - 1].max(j);
        }
        let mut present = vec![Vec::new(); an];
        for &(i, j) in cells {
            present[i - 1].push(j);
        }
        for (i, cols) in present.iter_mut().enumerate() {
            cols.sort_unstable();
            cols.dedup();
            // Left closure within the row, then up closure between rows.
            if cols.len() != rows[i] || (i > 0 && rows[i - 1] < rows[i]) {
                return Err(RowmotionError::NotAFilter);
            }
        }
        Ok(OrderFilter { slope, rows })
    }

    pub fn slope(&self) -> Slope {
        self.slope
    }

    /// Row lengths, top row first.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && i <= self.rows.len() && j >= 1 && j <= self.rows[i - 1]
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &len) in self.rows.iter().enumerate() {
            out.extend((1..=len).map(|j| (i + 1, j)));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The filter of boxes between `p` and the top path.
pub fn filter_of_path(p: &DyckPath) -> OrderFilter {
    OrderFilter {
        slope: p.slope(),
        rows: p.young_rows(),
    }
}

/// The path whose filter is `f`.
pub fn path_of_filter(f: &OrderFilter) -> DyckPath {
    DyckPath::from_young_rows_unchecked(f.slope, &f.rows)
}

/// Toggles every cell of rank `r` in place: a cell is added when the result
/// is still a filter and removed under the same condition. Cells of equal
/// rank never cover each other, so the order within the rank is irrelevant.
fn toggle_rank_rows(region: &BoxRegion, rows: &mut [usize], r: i64) {
    let an = rows.len();
    for i in 1..=an {
        let j = region.rmax - r - (i as i64 - 1) + 1;
        if j < 1 || j as usize > region.row_len(i) {
            continue;
        }
        let j = j as usize;
        if rows[i - 1] == j - 1 && (i == 1 || rows[i - 2] >= j) {
            rows[i - 1] = j;
        } else if rows[i - 1] == j && (i == an || rows[i] < j) {
            rows[i - 1] = j - 1;
        }
    }
}

/// The rank toggle `𝐭_r` for `r ∈ [R_min, R_max]`.
pub fn rank_toggle(p: &DyckPath, r: i64) -> Result<DyckPath, RowmotionError> {
    let region = BoxRegion::new(p.slope());
    if r < region.rmin || r > region.rmax {
        return Err(RowmotionError::RankOutOfRange {
            rank: r,
            min: region.rmin,
            max: region.rmax,
        });
    }
    let mut rows = p.young_rows();
    toggle_rank_rows(&region, &mut rows, r);
    Ok(DyckPath::from_young_rows_unchecked(p.slope(), &rows))
}

/// Applies the rank toggles in the listed order.
fn run_ranks(p: &DyckPath, ranks: impl IntoIterator<Item = i64>) -> DyckPath {
    let region = BoxRegion::new(p.slope());
    let mut rows = p.young_rows();
    for r in ranks {
        toggle_rank_rows(&region, &mut rows, r);
    }
    DyckPath::from_young_rows_unchecked(p.slope(), &rows)
}

/// Rowmotion `δ = 𝐭_{R_min} ⋯ 𝐭_{R_max}`: toggles rank `R_max` first and
/// rank `R_min` last.
pub fn rowmotion(p: &DyckPath) -> DyckPath {
    let region = BoxRegion::new(p.slope());
    run_ranks(p, (region.rmin..=region.rmax).rev())
}

/// `δ⁻¹`: toggles rank `R_min` first and rank `R_max` last.
pub fn rowmotion_inverse(p: &DyckPath) -> DyckPath {
    let region = BoxRegion::new(p.slope());
    run_ranks(p, region.rmin..=region.rmax)
}

/// `δ^k` for any integer `k`.
pub fn rowmotion_power(p: &DyckPath, k: i64) -> DyckPath {
    let mut q = p.clone();
    for _ in 0..k.unsigned_abs() {
        q = if k > 0 {
            rowmotion(&q)
        } else {
            rowmotion_inverse(&q)
        };
    }
    q
}

/// Rowmotion computed structurally. The minimal boxes of the filter
/// generate a down-set (all boxes weakly below and right of one of them);
/// the image is the complement of that down-set in the region.
pub fn rowmotion_structural(p: &DyckPath) -> DyckPath {
    let slope = p.slope();
    let region = BoxRegion::new(slope);
    let rows = p.young_rows();
    let an = rows.len();
    let minimal: Vec<(usize, usize)> = (1..=an)
        .filter(|&i| rows[i - 1] >= 1 && (i == an || rows[i] < rows[i - 1]))
        .map(|i| (i, rows[i - 1]))
        .collect();
    let image: Vec<usize> = (1..=an)
        .map(|i| {
            let first_blocked = minimal
                .iter()
                .filter(|&&(mi, _)| mi <= i)
                .map(|&(_, mj)| mj)
                .min();
            match first_blocked {
                Some(col) => region.row_len(i).min(col - 1),
                None => region.row_len(i),
            }
        })
        .collect();
    DyckPath::from_young_rows_unchecked(slope, &image)
}

/// Rowvacuation `Rvac = (𝐭_r)(𝐭_{r−1} 𝐭_r) ⋯ (𝐭_0 ⋯ 𝐭_r)` with the bottom
/// rank extended to `R_min`: for `s = R_min` up to `R_max`, toggle ranks
/// `R_max` down to `s`.
pub fn rowvacuation(p: &DyckPath) -> DyckPath {
    let region = BoxRegion::new(p.slope());
    let (lo, hi) = (region.rmin, region.rmax);
    run_ranks(p, (lo..=hi).flat_map(move |s| (s..=hi).rev()))
}

/// Dual rowvacuation: for `s = R_max` down to `R_min`, toggle ranks `R_min`
/// up to `s`.
pub fn dual_rowvacuation(p: &DyckPath) -> DyckPath {
    let region = BoxRegion::new(p.slope());
    let (lo, hi) = (region.rmin, region.rmax);
    run_ranks(p, (lo..=hi).rev().flat_map(move |s| lo..=s))
}

/// `δ̂ = δ^{(r)} ⋯ δ^{(1)}`: the rowvacuation sweep without its first
/// group, i.e. for `s = R_min + 1` up to `R_max`, toggle ranks `R_max`
/// down to `s`.
pub fn rowmotion_hat(p: &DyckPath) -> DyckPath {
    let region = BoxRegion::new(p.slope());
    let (lo, hi) = (region.rmin, region.rmax);
    run_ranks(p, (lo + 1..=hi).flat_map(move |s| (s..=hi).rev()))
}
