//! Dyck tilings above `(1, k)`-paths and the inverse of the RSK path map.
//!
//! [`Tiling::maximal`] builds the maximal cover-inclusive tiling of the
//! region between a path and the top path. Removing its tiles one at a
//! time, lowest first, turns the path into the top path. Each removal
//! exchanges a right step `i` with an up step `j`, giving a transposition
//! `(i, j)`.
//!
//! For `k = 1` the transpositions act on the chord pairs of the path and
//! yield a 321-avoiding permutation ([`dt_map`]). For every `k` the tiles
//! met by the horizontal lines of the Hermite history give the vector `κ`,
//! and `R̂SK⁻¹` is the largest path below the rows `(n − i)k − κ_i`.
//!
//! ```
//! use ratdyck_paths::{DyckPath, Slope};
//! use ratdyck_tilings::rsk_hat_inverse;
//!
//! let s = Slope::new(1, 2, 3).unwrap();
//! let p = DyckPath::parse(s, "147").unwrap();
//! assert_eq!(rsk_hat_inverse(&p).unwrap().compact(), "126");
//! ```

mod tiling;

use ratdyck_matchings::pm;
use ratdyck_matmap::{mat, MatMapError};
use ratdyck_paths::{DyckPath, PathError, Slope};
use ratdyck_perm321::{PermError, Permutation321};
use ratdyck_promotion::promotion_power;
use thiserror::Error;

pub use tiling::{is_k_dyck_word, region_rows, Cell, DyckTile, Tiling};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("tilings need a slope (1, k), found {0}")]
    NotFuss(Slope),
    #[error("cells {0:?} do not form a Dyck tile")]
    NotATile(Vec<Cell>),
    #[error("no tile of {0} can be removed")]
    Stuck(String),
    #[error("transpositions leave {0} outside a block of its own")]
    BadBlocks(usize),
    #[error("row {row} would have negative length")]
    NegativeRow { row: usize },
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    MatMap(#[from] MatMapError),
}

/// The transposition attached to a removed tile: right step `i` becomes up
/// and up step `j` becomes right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Transposition {
    pub i: usize,
    pub j: usize,
}

/// Removes the tiles one at a time and records the transpositions.
///
/// A tile with first cell `(x0, y0)` and last cell `(x1, y1)` can be removed
/// when steps `x0 + y0 + 1` through `x1 + y1 + 2` of the current path read
/// `R`, the tile word, `U`, starting at the vertex `(x0, y0)`. Among the
/// removable tiles the lowest goes first, then the leftmost. The second
/// component lists tile indices in removal order.
pub fn tile_transpositions(t: &Tiling) -> Result<(Vec<Transposition>, Vec<usize>), TilingError> {
    let p = t.path();
    let total = p.len();
    let mut up = p.up_indicator();
    let mut left: Vec<usize> = (0..t.len()).collect();
    let mut out = Vec::with_capacity(t.len());
    let mut order = Vec::with_capacity(t.len());
    while !left.is_empty() {
        let mut best: Option<((usize, usize), usize, Transposition)> = None;
        for (pos, &idx) in left.iter().enumerate() {
            let tile = &t.tiles()[idx];
            let (x0, y0) = tile.first();
            let (x1, y1) = tile.last();
            let (i, j) = (x0 + y0 + 1, x1 + y1 + 2);
            if j > total {
                continue;
            }
            let wanted: String = std::iter::once('R')
                .chain(tile.word().chars())
                .chain(std::iter::once('U'))
                .collect();
            let current: String = (i..=j).map(|q| if up[q - 1] { 'U' } else { 'R' }).collect();
            let ups_before = up[..i - 1].iter().filter(|&&u| u).count();
            if current == wanted && ups_before == y0 {
                let key = (y0, x0);
                if best.is_none_or(|(k, _, _)| key < k) {
                    best = Some((key, pos, Transposition { i, j }));
                }
            }
        }
        let Some((_, pos, tr)) = best else {
            return Err(TilingError::Stuck(p.to_string()));
        };
        up[tr.i - 1] = true;
        up[tr.j - 1] = false;
        order.push(left.remove(pos));
        out.push(tr);
    }
    Ok((out, order))
}

/// The blocks of `pm(p)` after the transpositions act on their entries.
fn transposed_blocks(p: &DyckPath, trans: &[Transposition]) -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = pm(p).into_blocks();
    for tr in trans {
        for b in blocks.iter_mut() {
            for v in b.iter_mut() {
                if *v == tr.i {
                    *v = tr.j;
                } else if *v == tr.j {
                    *v = tr.i;
                }
            }
        }
    }
    blocks
}

/// The DT map from `(1,1)`-paths to 321-avoiding permutations.
///
/// The tile transpositions act on the chords of `p`. Every chord then joins
/// a value `lo ≤ n` to some `hi > n`, and `w_{2n+1−hi} = lo`.
pub fn dt_map(p: &DyckPath) -> Result<Permutation321, TilingError> {
    let s = p.slope();
    if s.a() != 1 || s.b() != 1 {
        return Err(TilingError::Perm(PermError::NotClassical(s)));
    }
    let n = s.n();
    let (trans, _) = tile_transpositions(&Tiling::maximal(p)?)?;
    let mut values = vec![0; n];
    for b in transposed_blocks(p, &trans) {
        let (lo, hi) = (b[0].min(b[1]), b[0].max(b[1]));
        if lo > n || hi <= n {
            return Err(TilingError::BadBlocks(lo));
        }
        values[2 * n - hi] = lo;
    }
    Ok(Permutation321::new(values)?)
}

/// `κ` through the Hermite history of the maximal tiling.
pub fn kappa(p: &DyckPath) -> Result<Vec<usize>, TilingError> {
    Ok(Tiling::maximal(p)?.hermite_history())
}

/// `κ` through the transpositions.
///
/// After the transpositions act on `pm(p)`, every `i ≤ n` lies in its own
/// block; let `S'_i` be that block without `i`. Then `κ_i` counts the
/// elements of `S'_1 ∪ … ∪ S'_{n−i}` below `min S'_{n+1−i}`.
pub fn kappa_by_transpositions(p: &DyckPath) -> Result<Vec<usize>, TilingError> {
    let n = p.slope().n();
    let (trans, _) = tile_transpositions(&Tiling::maximal(p)?)?;
    let blocks = transposed_blocks(p, &trans);
    let mut rest: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for i in 1..=n {
        let holding: Vec<&Vec<usize>> = blocks.iter().filter(|b| b.contains(&i)).collect();
        let [b] = holding.as_slice() else {
            return Err(TilingError::BadBlocks(i));
        };
        if b.iter().filter(|&&v| v <= n).count() != 1 {
            return Err(TilingError::BadBlocks(i));
        }
        rest[i] = b.iter().copied().filter(|&v| v != i).collect();
    }
    Ok((1..=n)
        .map(|i| {
            let bound = rest[n + 1 - i].iter().copied().min().unwrap_or(usize::MAX);
            rest[1..=n - i]
                .iter()
                .flatten()
                .filter(|&&v| v < bound)
                .count()
        })
        .collect())
}

/// `R̂SK⁻¹(p)`: the largest path whose rows from the top fit under
/// `(n − i)k − κ_i`.
pub fn rsk_hat_inverse(p: &DyckPath) -> Result<DyckPath, TilingError> {
    let s = p.slope();
    let (n, k) = (s.n() as i64, s.b() as i64);
    let kappa = kappa(p)?;
    let mut rows = Vec::with_capacity(kappa.len());
    let mut bound = i64::MAX;
    for (idx, &h) in kappa.iter().enumerate() {
        let i = idx as i64 + 1;
        bound = bound.min((n - i) * k - h as i64);
        let row = usize::try_from(bound).map_err(|_| TilingError::NegativeRow { row: idx + 1 })?;
        rows.push(row);
    }
    Ok(DyckPath::from_young_rows(s, &rows)?)
}

/// `R̂SK = ∂^{−(n−1)}∘Mat` on `(1, k)`-paths.
pub fn rsk_hat_path(p: &DyckPath) -> Result<DyckPath, TilingError> {
    let s = p.slope();
    if s.a() != 1 {
        return Err(TilingError::NotFuss(s));
    }
    let m = mat(p)?;
    Ok(promotion_power(&m, -(s.n() as i64 - 1)))
}
