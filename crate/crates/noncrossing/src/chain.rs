use std::fmt;

use ratdyck_paths::{DyckPath, Slope};

use crate::{NcError, NonCrossingPartition};

/// A chain `(π_1, …, π_k)` of non-crossing partitions of `[1, n]`, coarsest
/// first: every layer refines the one before it. The weight of a pair is
/// the number of layers in which it shares a block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonCrossingChain {
    layers: Vec<NonCrossingPartition>,
}

impl NonCrossingChain {
    pub fn new(layers: Vec<NonCrossingPartition>) -> Result<Self, NcError> {
        let Some(first) = layers.first() else {
            return Err(NcError::NoLayers);
        };
        let n = first.n();
        for (i, pair) in layers.windows(2).enumerate() {
            if pair[1].n() != n {
                return Err(NcError::LayerSize {
                    layer: i + 2,
                    expected: n,
                    found: pair[1].n(),
                });
            }
            if !pair[1].refines(&pair[0]) {
                return Err(NcError::NotRefining { layer: i + 2 });
            }
        }
        Ok(NonCrossingChain { layers })
    }

    pub(crate) fn from_layers_unchecked(layers: Vec<NonCrossingPartition>) -> Self {
        NonCrossingChain { layers }
    }

    /// Parses `1.2.3.4;1.4/2.3;1.4/2/3`, layers coarsest first. Every layer
    /// covers `[1, n]` for the `n` of the first layer.
    pub fn parse(text: &str) -> Result<Self, NcError> {
        let layers = text
            .split(';')
            .map(NonCrossingPartition::parse)
            .collect::<Result<Vec<_>, _>>()?;
        NonCrossingChain::new(layers)
    }

    pub fn single(p: NonCrossingPartition) -> Self {
        NonCrossingChain { layers: vec![p] }
    }

    pub fn n(&self) -> usize {
        self.layers[0].n()
    }

    pub fn k(&self) -> usize {
        self.layers.len()
    }

    pub fn layers(&self) -> &[NonCrossingPartition] {
        &self.layers
    }

    /// Number of layers in which `x` and `y` share a block.
    pub fn weight(&self, x: usize, y: usize) -> usize {
        self.layers.iter().filter(|l| l.same_block(x, y)).count()
    }

    /// Layers written with [`NonCrossingPartition::compact`], joined by `;`.
    pub fn compact(&self) -> String {
        let parts: Vec<String> = self.layers.iter().map(|l| l.compact()).collect();
        parts.join(";")
    }

    fn layerwise(&self, f: impl Fn(&NonCrossingPartition) -> NonCrossingPartition) -> Self {
        NonCrossingChain {
            layers: self.layers.iter().map(f).collect(),
        }
    }

    fn layerwise_reversed(
        &self,
        f: impl Fn(&NonCrossingPartition) -> NonCrossingPartition,
    ) -> Self {
        NonCrossingChain {
            layers: self.layers.iter().rev().map(f).collect(),
        }
    }

    pub fn rot(&self) -> Self {
        self.layerwise(NonCrossingPartition::rot)
    }

    pub fn rot_inverse(&self) -> Self {
        self.layerwise(NonCrossingPartition::rot_inverse)
    }

    pub fn reflect(&self) -> Self {
        self.layerwise(NonCrossingPartition::reflect)
    }

    /// Kreweras complement of every layer, layer order reversed.
    pub fn kre(&self) -> Self {
        self.layerwise_reversed(NonCrossingPartition::kre)
    }

    /// Simion-Ullman involution of every layer, layer order reversed.
    pub fn su(&self) -> Self {
        self.layerwise_reversed(NonCrossingPartition::su)
    }

    /// The `LK` map of every layer, layer order reversed.
    pub fn lk(&self) -> Self {
        self.layerwise_reversed(crate::lk)
    }

    /// The `(1, k)`-path of the chain.
    ///
    /// Blocks of the coarsest layer are processed by their minima. A
    /// singleton contributes `UR^k`. A larger block `B` restricts the finer
    /// layers to `B`, appends the discrete partition as a last layer,
    /// encodes that chain to a word `UR w′` and contributes `U w′ R`. Each
    /// block word is inserted after the chunks of the already placed
    /// elements smaller than `min B`, a chunk being `k + 1` letters.
    pub fn to_path(&self) -> DyckPath {
        let slope = Slope::new(1, self.k(), self.n()).expect("k, n ≥ 1");
        DyckPath::from_word(slope, &encode(self)).expect("chain words are k-Dyck words")
    }

    /// Inverse of [`NonCrossingChain::to_path`].
    pub fn from_path(p: &DyckPath) -> Result<Self, NcError> {
        let s = p.slope();
        if s.a() != 1 {
            return Err(NcError::NotFuss(s));
        }
        let word: Vec<bool> = p.up_indicator();
        Ok(decode(s.b(), &word))
    }
}

impl fmt::Display for NonCrossingChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.layers.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(";"))
    }
}

/// The partition `p` restricted to `block` and relabelled `1, …, |block|`.
fn restrict(p: &NonCrossingPartition, block: &[usize]) -> NonCrossingPartition {
    let index = |x: usize| block.iter().position(|&b| b == x).map(|i| i + 1);
    let blocks: Vec<Vec<usize>> = p
        .blocks()
        .iter()
        .map(|b| b.iter().filter_map(|&x| index(x)).collect::<Vec<_>>())
        .filter(|b| !b.is_empty())
        .collect();
    NonCrossingPartition::from_blocks_unchecked(block.len(), blocks)
}

fn encode(chain: &NonCrossingChain) -> String {
    let k = chain.k();
    let mut word = String::new();
    let mut placed: Vec<usize> = Vec::new();
    for block in chain.layers()[0].blocks() {
        let piece = block_word(chain, block);
        let j = placed.iter().filter(|&&e| e < block[0]).count();
        word.insert_str((k + 1) * j, &piece);
        placed.extend_from_slice(block);
        placed.sort_unstable();
    }
    word
}

fn block_word(chain: &NonCrossingChain, block: &[usize]) -> String {
    let k = chain.k();
    if block.len() == 1 {
        return format!("U{}", "R".repeat(k));
    }
    let mut layers: Vec<NonCrossingPartition> = chain.layers()[1..]
        .iter()
        .map(|l| restrict(l, block))
        .collect();
    layers.push(NonCrossingPartition::discrete(block.len()));
    let inner = encode(&NonCrossingChain::from_layers_unchecked(layers));
    format!("U{}R", &inner[2..])
}

/// Splits a `k`-Dyck word into blocks of chunk indices.
///
/// Chunks are read left to right. A block keeps taking chunks until its
/// running height returns to zero; whenever the next letter is an up step
/// before that, a nested block starts there.
fn chunk_blocks(k: usize, word: &[bool]) -> Vec<Vec<usize>> {
    fn parse(
        k: usize,
        word: &[bool],
        pos: &mut usize,
        chunk: &mut usize,
        blocks: &mut Vec<Vec<usize>>,
    ) {
        let id = blocks.len();
        blocks.push(Vec::new());
        let mut height: i64 = 0;
        loop {
            blocks[id].push(*chunk);
            *chunk += 1;
            for t in 0..=k {
                height += if word[*pos + t] { k as i64 } else { -1 };
            }
            *pos += k + 1;
            if height == 0 {
                return;
            }
            while word[*pos] {
                parse(k, word, pos, chunk, blocks);
            }
        }
    }
    let (mut pos, mut chunk) = (0, 0);
    let mut blocks = Vec::new();
    while pos < word.len() {
        parse(k, word, &mut pos, &mut chunk, &mut blocks);
    }
    blocks
}

fn decode(k: usize, word: &[bool]) -> NonCrossingChain {
    let n = word.len() / (k + 1);
    let mut layers: Vec<Vec<Vec<usize>>> = vec![Vec::new(); k];
    for chunks in chunk_blocks(k, word) {
        let elems: Vec<usize> = chunks.iter().map(|c| c + 1).collect();
        layers[0].push(elems.clone());
        if elems.len() == 1 {
            for layer in layers.iter_mut().skip(1) {
                layer.push(elems.clone());
            }
            continue;
        }
        let letters: Vec<bool> = chunks
            .iter()
            .flat_map(|&c| word[(k + 1) * c..(k + 1) * (c + 1)].iter().copied())
            .collect();
        let mut inner = vec![true, false];
        inner.extend_from_slice(&letters[1..letters.len() - 1]);
        let sub = decode(k, &inner);
        for (j, layer) in layers.iter_mut().enumerate().skip(1) {
            for b in sub.layers()[j - 1].blocks() {
                layer.push(b.iter().map(|&i| elems[i - 1]).collect());
            }
        }
    }
    NonCrossingChain::from_layers_unchecked(
        layers
            .into_iter()
            .map(|blocks| NonCrossingPartition::from_blocks_unchecked(n, blocks))
            .collect(),
    )
}

/// All chains of `k` non-crossing partitions of `[1, n]`.
pub fn non_crossing_chains(n: usize, k: usize) -> Vec<NonCrossingChain> {
    let all = crate::non_crossing_partitions(n);
    let mut chains: Vec<Vec<NonCrossingPartition>> = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for c in &chains {
            for p in &all {
                if c.last().is_none_or(|last| p.refines(last)) {
                    let mut longer = c.clone();
                    longer.push(p.clone());
                    next.push(longer);
                }
            }
        }
        chains = next;
    }
    chains
        .into_iter()
        .map(NonCrossingChain::from_layers_unchecked)
        .collect()
}
