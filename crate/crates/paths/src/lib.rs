//! Rational `(a, b)`-Dyck paths.
//!
//! A path of slope `(a, b)` and size `n` is a lattice path of `an` up steps
//! and `bn` right steps from `(0, 0)` to `(bn, an)` that stays weakly above
//! the line `y = ax/b`. The canonical encoding is the step sequence, the
//! increasing list of 1-based up-step positions. Words over `{U, R}`,
//! two-row tableaux and Young-diagram rows are derived views.
//!
//! ```
//! use ratdyck_paths::{DyckPath, Slope};
//!
//! let slope = Slope::new(1, 1, 3).unwrap();
//! let p = DyckPath::new(slope, vec![1, 3, 5]).unwrap();
//! assert_eq!(p.word(), "URURUR");
//! ```

mod count;
mod enumerate;
mod error;
mod path;
mod slope;
mod tableau;

pub use count::{binomial, catalan, count_paths, count_paths_u64, fuss_catalan};
pub use enumerate::{count_by_enumeration, enumerate_paths, for_each_steps};
pub use error::PathError;
pub use path::{check_above_line, check_step_bounds, DyckPath};
pub use slope::Slope;
pub use tableau::ABTableau;
