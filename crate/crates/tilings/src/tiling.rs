use std::collections::{HashMap, HashSet};

use ratdyck_paths::DyckPath;
use serde::Serialize;

use crate::TilingError;

/// A cell `(x, y)` of the region between a path and the top path: the unit
/// square with lower left corner `(x, y)`.
pub type Cell = (usize, usize);

/// A Dyck tile: a ribbon of cells whose consecutive cells step up or right
/// and whose steps spell a `k`-Dyck word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyckTile {
    cells: Vec<Cell>,
    k: usize,
}

/// Serialised form of a tile: cells as `[row, column]` plus the size.
#[derive(Serialize)]
struct TileRecord {
    cells: Vec<[usize; 2]>,
    size: usize,
}

impl Serialize for DyckTile {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TileRecord {
            cells: self.cells.iter().map(|&(x, y)| [y, x]).collect(),
            size: self.size(),
        }
        .serialize(serializer)
    }
}

fn ribbon_word(cells: &[Cell]) -> Option<String> {
    cells
        .windows(2)
        .map(|w| {
            let ((x1, y1), (x2, y2)) = (w[0], w[1]);
            if (x2, y2) == (x1, y1 + 1) {
                Some('U')
            } else if (x2, y2) == (x1 + 1, y1) {
                Some('R')
            } else {
                None
            }
        })
        .collect()
}

/// Whether a word in `U`, `R` stays weakly above height zero and ends
/// there when `U` counts `k` and `R` counts `−1`.
pub fn is_k_dyck_word(k: usize, word: &str) -> bool {
    let mut h: i64 = 0;
    for c in word.chars() {
        h += if c == 'U' { k as i64 } else { -1 };
        if h < 0 {
            return false;
        }
    }
    h == 0
}

impl DyckTile {
    pub fn new(k: usize, cells: Vec<Cell>) -> Result<Self, TilingError> {
        match ribbon_word(&cells) {
            Some(w) if !cells.is_empty() && is_k_dyck_word(k, &w) => Ok(DyckTile { cells, k }),
            _ => Err(TilingError::NotATile(cells)),
        }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn first(&self) -> Cell {
        self.cells[0]
    }

    pub fn last(&self) -> Cell {
        self.cells[self.cells.len() - 1]
    }

    /// The steps between consecutive cell centres.
    pub fn word(&self) -> String {
        ribbon_word(&self.cells).expect("tiles are ribbons")
    }

    /// Number of up steps of the inner path; a size `s` tile has
    /// `s(k + 1) + 1` cells.
    pub fn size(&self) -> usize {
        self.word().chars().filter(|&c| c == 'U').count()
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// A tiling of the region between a `(1, k)`-path and the top path.
#[derive(Clone, Debug, Serialize)]
pub struct Tiling {
    #[serde(skip)]
    path: DyckPath,
    tiles: Vec<DyckTile>,
    #[serde(skip)]
    owner: HashMap<Cell, usize>,
}

/// Number of cells in row `y` (counted from the bottom) of the region
/// between `p` and the top path.
pub fn region_rows(p: &DyckPath) -> Vec<usize> {
    p.steps()
        .iter()
        .enumerate()
        .map(|(y, &s)| s - (y + 1))
        .collect()
}

fn region_cells(p: &DyckPath) -> HashSet<Cell> {
    region_rows(p)
        .iter()
        .enumerate()
        .flat_map(|(y, &len)| (0..len).map(move |x| (x, y)))
        .collect()
}

fn southeast((x, y): Cell) -> Option<Cell> {
    y.checked_sub(1).map(|y| (x + 1, y))
}

/// Splits a ribbon into the longest `k`-Dyck pieces, left to right.
fn factor_greedily(k: usize, cells: &[Cell]) -> Vec<Vec<Cell>> {
    let mut out = Vec::new();
    let mut s = 0;
    while s < cells.len() {
        let end = (s..cells.len())
            .rev()
            .find(|&e| ribbon_word(&cells[s..=e]).is_some_and(|w| is_k_dyck_word(k, &w)))
            .expect("a single cell is a tile");
        out.push(cells[s..=end].to_vec());
        s = end + 1;
    }
    out
}

impl Tiling {
    /// The maximal cover-inclusive tiling above `p`.
    ///
    /// The region is peeled layer by layer starting at the path. Each layer
    /// is the set of cells whose southeast neighbour is not left in the
    /// region. A layer is cut wherever the cells below it change tile or the
    /// layer breaks, and every piece is factored into the longest `k`-Dyck
    /// ribbons from the left.
    pub fn maximal(p: &DyckPath) -> Result<Self, TilingError> {
        let s = p.slope();
        if s.a() != 1 {
            return Err(TilingError::NotFuss(s));
        }
        let k = s.b();
        let mut remaining = region_cells(p);
        let mut owner: HashMap<Cell, usize> = HashMap::new();
        let mut tiles = Vec::new();
        while !remaining.is_empty() {
            let mut rim: Vec<Cell> = remaining
                .iter()
                .copied()
                .filter(|&c| southeast(c).is_none_or(|se| !remaining.contains(&se)))
                .collect();
            rim.sort_by_key(|&(x, y)| (x + y, x));
            let below = |c: Cell| southeast(c).and_then(|se| owner.get(&se).copied());
            let mut runs: Vec<Vec<Cell>> = Vec::new();
            for &c in &rim {
                let extend = runs.last().is_some_and(|run: &Vec<Cell>| {
                    let prev = run[run.len() - 1];
                    below(prev) == below(c) && prev.0 + prev.1 + 1 == c.0 + c.1
                });
                if extend {
                    runs.last_mut().expect("non-empty").push(c);
                } else {
                    runs.push(vec![c]);
                }
            }
            for run in runs {
                for piece in factor_greedily(k, &run) {
                    for &c in &piece {
                        owner.insert(c, tiles.len());
                    }
                    tiles.push(DyckTile::new(k, piece)?);
                }
            }
            for c in rim {
                remaining.remove(&c);
            }
        }
        Ok(Tiling {
            path: p.clone(),
            tiles,
            owner,
        })
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    /// Tiles in construction order, from the path outwards.
    pub fn tiles(&self) -> &[DyckTile] {
        &self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    /// Index of the tile holding `cell`.
    pub fn tile_at(&self, cell: Cell) -> Option<usize> {
        self.owner.get(&cell).copied()
    }

    /// Every region cell lies in exactly one tile.
    pub fn is_partition(&self) -> bool {
        let region = region_cells(&self.path);
        let count: usize = self.tiles.iter().map(|t| t.cells.len()).sum();
        count == region.len()
            && self
                .tiles
                .iter()
                .flat_map(|t| &t.cells)
                .all(|c| region.contains(c))
    }

    /// Every tile shifted one unit southeast lies either entirely below the
    /// path or entirely inside one other tile.
    pub fn is_cover_inclusive(&self) -> bool {
        self.tiles.iter().enumerate().all(|(idx, t)| {
            let shifted: Vec<Option<usize>> = t
                .cells
                .iter()
                .map(|&c| southeast(c).and_then(|se| self.tile_at(se)))
                .collect();
            if shifted.iter().all(Option::is_none) {
                return true;
            }
            let first = shifted[0];
            first.is_some_and(|o| o != idx) && shifted.iter().all(|&o| o == first)
        })
    }

    /// No two tiles adjacent along a ribbon merge into a tile while keeping
    /// the tiling cover-inclusive.
    pub fn is_maximal(&self) -> bool {
        let k = self.path.slope().b();
        for (i, t1) in self.tiles.iter().enumerate() {
            for (j, t2) in self.tiles.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut merged = t1.cells.clone();
                merged.extend_from_slice(&t2.cells);
                let Ok(tile) = DyckTile::new(k, merged) else {
                    continue;
                };
                let mut tiles: Vec<DyckTile> = self
                    .tiles
                    .iter()
                    .enumerate()
                    .filter(|&(x, _)| x != i && x != j)
                    .map(|(_, t)| t.clone())
                    .collect();
                tiles.push(tile);
                if Tiling::from_tiles(self.path.clone(), tiles).is_cover_inclusive() {
                    return false;
                }
            }
        }
        true
    }

    fn from_tiles(path: DyckPath, tiles: Vec<DyckTile>) -> Tiling {
        let owner = tiles
            .iter()
            .enumerate()
            .flat_map(|(i, t)| t.cells.iter().map(move |&c| (c, i)))
            .collect();
        Tiling { path, tiles, owner }
    }

    /// The Hermite history counts `H_1, …, H_n`. Line `i` starts at the
    /// first cell of row `n − i`. While the current cell opens its tile the
    /// line counts that tile and continues right after the tile's last cell.
    pub fn hermite_history(&self) -> Vec<usize> {
        let n = self.path.slope().n();
        (1..=n)
            .map(|i| {
                let mut cell = (0, n - i);
                let mut count = 0;
                while let Some(idx) = self.tile_at(cell) {
                    let tile = &self.tiles[idx];
                    if tile.first() != cell {
                        break;
                    }
                    count += 1;
                    let (x1, y1) = tile.last();
                    cell = (x1 + 1, y1);
                }
                count
            })
            .collect()
    }
}
