//! 321-avoiding permutations and the Dyck paths read off their Rothe
//! diagrams.
//!
//! A permutation `w` draws marks `(i, w_i)` in an `n × n` grid. The marks on
//! or above the diagonal are the peaks of `E_p(w)`; the marks below it give
//! `E_q(w)`; `E_w(w) = E_p(w⁻¹)`; and the valleys of `E_p(w)` give `E_v(w)`.
//! Composing with `E_p⁻¹` yields three maps on Dyck paths, `Dyck₁`,
//! `Dyck₂` and `Dyck₃`.
//!
//! The crate also provides two-row RSK, the path `R̂SK(w)` built from the
//! first rows of the two tableaux, and the crossing resolution `PM^×`.
//!
//! ```
//! use ratdyck_perm321::{e_p, rsk_hat, Permutation321};
//!
//! let w = Permutation321::parse("13425").unwrap();
//! assert_eq!(e_p(&w).word(), "URUURURRUR");
//! let w = Permutation321::parse("13524").unwrap();
//! assert_eq!(rsk_hat(&w).to_string(), "1,2,4,6,7");
//! ```

mod extract;
mod perm;
mod rsk;

use ratdyck_paths::Slope;
use thiserror::Error;

pub use extract::{
    dyck1, dyck2, dyck3, e_p, e_p_inverse, e_q, e_v, e_v_of_path, e_w, path_from_peaks, peaks,
    valleys,
};
pub use perm::{find_321, for_each_perm321, perms321, MarkKind, Permutation321, RotheMarks};
pub use rsk::{pm_cross, rsk_hat, rsk_path, rsk_two_row, TwoRowTableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("the empty permutation is not supported")]
    Empty,
    #[error("{0:?} is not a permutation of [1, n]")]
    NotAPermutation(Vec<usize>),
    #[error("positions {i} < {j} < {k} form a 321 pattern")]
    Contains321 { i: usize, j: usize, k: usize },
    #[error("insertion of {0:?} needs a third row")]
    ThirdRow(Vec<usize>),
    #[error("expected a path of slope (1,1), found {0}")]
    NotClassical(Slope),
    #[error("peaks {0:?} do not describe a Dyck path")]
    BadPeaks(Vec<(usize, usize)>),
    #[error("cannot parse {0:?} as a permutation")]
    Parse(String),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_are_catalan() {
        let counts: Vec<usize> = (1..=8).map(|n| perms321(n).len()).collect();
        assert_eq!(counts, [1, 2, 5, 14, 42, 132, 429, 1430]);
    }

    #[test]
    fn enumeration_is_sorted_and_avoiding() {
        let all = perms321(6);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|w| find_321(w.values()).is_none()));
    }
}
