//! Non-crossing partitions, chains of them, and their Dyck paths.
//!
//! A chain of `k` non-crossing partitions of `[1, n]`, each refining the
//! previous one, corresponds to a `(1, k)`-path of size `n`
//! ([`NonCrossingChain::to_path`]). Under this correspondence the maps
//! rotation, reflection, Kreweras complement, Simion-Ullman involution, the
//! `LK` map and the lift become maps on paths related to promotion and
//! evacuation.
//!
//! Literals write blocks with `.` between elements and `/` between blocks,
//! and chains with `;` between layers, coarsest first.
//!
//! ```
//! use ratdyck_noncrossing::NonCrossingPartition;
//!
//! let p = NonCrossingPartition::parse("1.2/3").unwrap();
//! assert_eq!(p.kre().to_string(), "1/2.3");
//! ```

mod chain;
mod lift;
mod partition;

use ratdyck_paths::{DyckPath, Slope};
use ratdyck_perm321::{dyck2, e_p, rsk_path};
use ratdyck_tilings::dt_map;
use thiserror::Error;

pub use chain::{non_crossing_chains, NonCrossingChain};
pub use lift::lift;
pub use partition::{non_crossing_partitions, NonCrossingPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NcError {
    #[error("partitions of the empty set are not supported")]
    Empty,
    #[error("blocks must be non-empty")]
    EmptyBlock,
    #[error("blocks do not partition [1, {0}]")]
    NotAPartition(usize),
    #[error("blocks cross")]
    Crossing,
    #[error("a chain needs at least one layer")]
    NoLayers,
    #[error("layer {layer} has ground set [1, {found}], expected [1, {expected}]")]
    LayerSize {
        layer: usize,
        expected: usize,
        found: usize,
    },
    #[error("layer {layer} does not refine the layer before it")]
    NotRefining { layer: usize },
    #[error("chains correspond to slopes (1, k), found {0}")]
    NotFuss(Slope),
    #[error("cannot parse {0:?} as a non-crossing partition")]
    Parse(String),
}

/// The `(1,1)`-path `R̂SK∘E_p⁻¹` inverted through the DT map.
fn rsk_path_inverse(p: &DyckPath) -> DyckPath {
    let w = dt_map(p).expect("DT is defined on every (1,1)-path");
    e_p(&w)
}

/// `LK = NCPtoDyck⁻¹∘R̂SK∘Dyck₂∘R̂SK⁻¹∘NCPtoDyck` on a single partition.
pub fn lk(p: &NonCrossingPartition) -> NonCrossingPartition {
    let path = NonCrossingChain::single(p.clone()).to_path();
    let back = rsk_path_inverse(&path);
    let image = rsk_path(&dyck2(&back).expect("classical path")).expect("classical path");
    let chain = NonCrossingChain::from_path(&image).expect("classical path");
    chain.layers()[0].clone()
}
