use std::fmt;

use serde::{Deserialize, Serialize};

use crate::MatchingError;

/// A non-crossing set partition of `[1, N]` whose blocks are sorted
/// ascending and listed by increasing minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MatchingRecord", into = "MatchingRecord")]
pub struct PerfectMatching {
    ground: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct MatchingRecord {
    ground: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<MatchingRecord> for PerfectMatching {
    type Error = MatchingError;

    fn try_from(r: MatchingRecord) -> Result<Self, MatchingError> {
        PerfectMatching::new(r.ground, r.blocks)
    }
}

impl From<PerfectMatching> for MatchingRecord {
    fn from(m: PerfectMatching) -> Self {
        MatchingRecord {
            ground: m.ground,
            blocks: m.blocks,
        }
    }
}

fn canonicalize(mut blocks: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort_unstable();
    blocks
}

/// True when no two blocks interleave as `i < j < k < l` with `i, k` in one
/// block and `j, l` in the other.
pub fn blocks_are_noncrossing(ground: usize, blocks: &[Vec<usize>]) -> bool {
    let mut label = vec![usize::MAX; ground + 1];
    for (idx, b) in blocks.iter().enumerate() {
        for &x in b {
            label[x] = idx;
        }
    }
    for s in 0..blocks.len() {
        for t in s + 1..blocks.len() {
            // Restricted to two blocks, a crossing shows up as four or more
            // alternating runs.
            let mut runs = 0;
            let mut last = usize::MAX;
            for &l in &label[1..] {
                if (l == s || l == t) && l != last {
                    runs += 1;
                    last = l;
                }
            }
            if runs >= 4 {
                return false;
            }
        }
    }
    true
}

impl PerfectMatching {
    /// Validates that `blocks` partition `[1, ground]` into non-empty,
    /// pairwise non-crossing blocks, then stores them canonically.
    pub fn new(ground: usize, blocks: Vec<Vec<usize>>) -> Result<Self, MatchingError> {
        let mut seen = vec![false; ground + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(MatchingError::EmptyBlock);
            }
            for &x in b {
                if x == 0 || x > ground {
                    return Err(MatchingError::OutOfRange { value: x, ground });
                }
                if seen[x] {
                    return Err(MatchingError::Repeated(x));
                }
                seen[x] = true;
            }
        }
        if let Some(missing) = (1..=ground).find(|&x| !seen[x]) {
            return Err(MatchingError::Missing(missing));
        }
        let blocks = canonicalize(blocks);
        if !blocks_are_noncrossing(ground, &blocks) {
            return Err(MatchingError::Crossing);
        }
        Ok(PerfectMatching { ground, blocks })
    }

    /// Canonicalizes blocks already known to form a non-crossing partition.
    pub fn from_blocks_unchecked(ground: usize, blocks: Vec<Vec<usize>>) -> Self {
        PerfectMatching {
            ground,
            blocks: canonicalize(blocks),
        }
    }

    /// Parses the literal `{1,4,10},{2,3},{5,6,9},{7,8}`.
    pub fn parse(ground: usize, text: &str) -> Result<Self, MatchingError> {
        let bad = || MatchingError::Parse(text.to_string());
        let mut blocks = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('{').ok_or_else(bad)?;
            let close = body.find('}').ok_or_else(bad)?;
            let block = body[..close]
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            blocks.push(block);
            rest = body[close + 1..].trim_start();
            rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
        }
        PerfectMatching::new(ground, blocks)
    }

    /// The size `N` of the ground set `[1, N]`.
    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Vec<usize>> {
        self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_noncrossing(&self) -> bool {
        blocks_are_noncrossing(self.ground, &self.blocks)
    }

    /// True when `block` (in any order) is one of the blocks.
    pub fn contains_block(&self, block: &[usize]) -> bool {
        let mut sorted = block.to_vec();
        sorted.sort_unstable();
        self.blocks.binary_search(&sorted).is_ok()
    }

    /// The block containing `x`.
    pub fn block_of(&self, x: usize) -> Option<&[usize]> {
        self.blocks
            .iter()
            .find(|b| b.contains(&x))
            .map(|b| b.as_slice())
    }

    /// Minimum of every block, increasing.
    pub fn minima(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }

    /// Relabels `i ↦ N + 1 − i`.
    pub fn bar(&self) -> PerfectMatching {
        let n = self.ground;
        self.relabel(|i| n + 1 - i)
    }

    /// Rotates the circle one step: `i ↦ i − 1` and `1 ↦ N`.
    pub fn rotate(&self) -> PerfectMatching {
        let n = self.ground;
        self.relabel(|i| if i == 1 { n } else { i - 1 })
    }

    fn relabel(&self, f: impl Fn(usize) -> usize) -> PerfectMatching {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&i| f(i)).collect())
            .collect();
        PerfectMatching::from_blocks_unchecked(self.ground, blocks)
    }
}

impl fmt::Display for PerfectMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        f.write_str(&parts.join(","))
    }
}
