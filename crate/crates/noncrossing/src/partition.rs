use std::fmt;

use crate::NcError;

/// A non-crossing set partition of `[1, n]`. Blocks are sorted internally
/// and listed by their minima.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonCrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

fn canonical(mut blocks: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for b in blocks.iter_mut() {
        b.sort_unstable();
    }
    blocks.sort_unstable_by_key(|b| b[0]);
    blocks
}

/// Block labels of `[1, n]`, index 0 unused.
fn labels(n: usize, blocks: &[Vec<usize>]) -> Vec<usize> {
    let mut lab = vec![usize::MAX; n + 1];
    for (i, b) in blocks.iter().enumerate() {
        for &x in b {
            lab[x] = i;
        }
    }
    lab
}

fn crosses(n: usize, blocks: &[Vec<usize>]) -> bool {
    let lab = labels(n, blocks);
    // a < b < c < d with a, c in one block and b, d in another.
    for a in 1..=n {
        for b in a + 1..=n {
            if lab[b] == lab[a] {
                continue;
            }
            for c in b + 1..=n {
                if lab[c] != lab[a] {
                    continue;
                }
                if (c + 1..=n).any(|d| lab[d] == lab[b]) {
                    return true;
                }
            }
        }
    }
    false
}

/// Groups `[1, n]` by the roots of a union-find forest.
fn classes(n: usize, mut root: impl FnMut(usize) -> usize) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n + 1];
    for x in 1..=n {
        let r = root(x);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(x);
    }
    groups
}

/// A small union-find over `[0, n]`.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..=n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        self.parent[rx] = ry;
    }

    pub(crate) fn partition(&mut self, n: usize) -> NonCrossingPartition {
        let blocks = classes(n, |x| self.find(x));
        NonCrossingPartition::new(n, blocks)
            .expect("union-find classes of a non-crossing construction")
    }
}

impl NonCrossingPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, NcError> {
        if n == 0 {
            return Err(NcError::Empty);
        }
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(NcError::EmptyBlock);
            }
            for &x in b {
                if x == 0 || x > n || seen[x] {
                    return Err(NcError::NotAPartition(n));
                }
                seen[x] = true;
            }
        }
        if seen[1..].iter().any(|&s| !s) {
            return Err(NcError::NotAPartition(n));
        }
        if crosses(n, &blocks) {
            return Err(NcError::Crossing);
        }
        Ok(NonCrossingPartition {
            n,
            blocks: canonical(blocks),
        })
    }

    pub(crate) fn from_blocks_unchecked(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        NonCrossingPartition {
            n,
            blocks: canonical(blocks),
        }
    }

    /// Parses `1.2/3`: blocks separated by `/`, elements by `.`. When the
    /// text has no `.` at all, every digit is an element, so `12/3` reads
    /// the same. The ground set size is the largest element.
    pub fn parse(text: &str) -> Result<Self, NcError> {
        let text = text.trim();
        let bad = || NcError::Parse(text.to_string());
        let dotted = text.contains('.');
        let blocks = text
            .split('/')
            .map(|token| {
                if dotted {
                    token
                        .split('.')
                        .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                        .collect::<Result<Vec<_>, _>>()
                } else {
                    token
                        .trim()
                        .chars()
                        .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                        .collect::<Result<Vec<_>, _>>()
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        let n = blocks.iter().flatten().copied().max().ok_or_else(bad)?;
        NonCrossingPartition::new(n, blocks)
    }

    /// The partition into singletons.
    pub fn discrete(n: usize) -> Self {
        NonCrossingPartition {
            n,
            blocks: (1..=n).map(|x| vec![x]).collect(),
        }
    }

    /// The partition with a single block.
    pub fn full(n: usize) -> Self {
        NonCrossingPartition {
            n,
            blocks: vec![(1..=n).collect()],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// `rk(π) = n − (number of blocks)`.
    pub fn rank(&self) -> usize {
        self.n - self.blocks.len()
    }

    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.blocks.iter().any(|b| b.contains(&x) && b.contains(&y))
    }

    /// Every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &NonCrossingPartition) -> bool {
        let lab = labels(coarser.n, &coarser.blocks);
        self.n == coarser.n
            && self
                .blocks
                .iter()
                .all(|b| b.iter().all(|&x| lab[x] == lab[b[0]]))
    }

    /// Blocks written with digits run together when `n ≤ 9`, as in `12/3`.
    pub fn compact(&self) -> String {
        if self.n > 9 {
            return self.to_string();
        }
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect())
            .collect();
        parts.join("/")
    }

    fn relabel(&self, f: impl Fn(usize) -> usize) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| f(x)).collect())
            .collect();
        NonCrossingPartition::from_blocks_unchecked(self.n, blocks)
    }

    /// Rotation by one step: `i ↦ i − 1`, with `1 ↦ n`.
    pub fn rot(&self) -> Self {
        let n = self.n;
        self.relabel(|x| if x == 1 { n } else { x - 1 })
    }

    /// Inverse rotation: `i ↦ i + 1`, with `n ↦ 1`.
    pub fn rot_inverse(&self) -> Self {
        let n = self.n;
        self.relabel(|x| x % n + 1)
    }

    /// Reflection `i ↦ n + 1 − i`.
    pub fn reflect(&self) -> Self {
        let n = self.n;
        self.relabel(|x| n + 1 - x)
    }

    /// Partition of the primed points `1′, …, n′` by mutual visibility.
    ///
    /// Point `x` sits at position `2x` on a line and `i′` at
    /// `primed[i]`. Two primed points share a block unless the chord
    /// between them separates some block of `self`.
    fn primed_complement(&self, primed: impl Fn(usize) -> usize) -> Self {
        let n = self.n;
        let lab = labels(n, &self.blocks);
        let separates = |p: usize, q: usize| {
            let (lo, hi) = (p.min(q), p.max(q));
            let inside = |x: usize| lo < 2 * x && 2 * x < hi;
            (1..=n).any(|x| inside(x) && (1..=n).any(|y| !inside(y) && lab[x] == lab[y]))
        };
        let mut uf = UnionFind::new(n);
        for i in 1..=n {
            for j in i + 1..=n {
                if !separates(primed(i), primed(j)) {
                    uf.union(i, j);
                }
            }
        }
        uf.partition(n)
    }

    /// The Kreweras complement, with `i′` placed just after `i`.
    pub fn kre(&self) -> Self {
        self.primed_complement(|i| 2 * i + 1)
    }

    /// The Simion-Ullman involution, with `i′` placed just after
    /// `n + 1 − i`.
    pub fn su(&self) -> Self {
        let n = self.n;
        self.primed_complement(|i| 2 * (n + 1 - i) + 1)
    }
}

impl fmt::Display for NonCrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(".")
            })
            .collect();
        f.write_str(&parts.join("/"))
    }
}

/// All non-crossing partitions of `[1, n]`.
///
/// The block of `1` is `{1 = a_1 < … < a_r}`. Each gap between consecutive
/// elements, and the tail after `a_r`, is partitioned independently.
pub fn non_crossing_partitions(n: usize) -> Vec<NonCrossingPartition> {
    fn of_range(lo: usize, hi: usize) -> Vec<Vec<Vec<usize>>> {
        // Non-crossing partitions of the interval [lo, hi].
        if lo > hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        grow(hi, vec![lo], &mut out);
        out
    }
    fn grow(hi: usize, block: Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        let last = block[block.len() - 1];
        // Close the block: everything after `last` is free.
        for tail in of_range(last + 1, hi) {
            let mut parts = vec![block.clone()];
            parts.extend(tail);
            out.push(parts);
        }
        for next in last + 1..=hi {
            let mut extended = block.clone();
            extended.push(next);
            let mut inner_out = Vec::new();
            grow(hi, extended, &mut inner_out);
            for gap in of_range(last + 1, next - 1) {
                for parts in &inner_out {
                    let mut all = parts.clone();
                    all.extend(gap.iter().cloned());
                    out.push(all);
                }
            }
        }
    }
    if n == 0 {
        return Vec::new();
    }
    let mut all: Vec<NonCrossingPartition> = of_range(1, n)
        .into_iter()
        .map(|blocks| NonCrossingPartition::from_blocks_unchecked(n, blocks))
        .collect();
    all.sort();
    all
}
