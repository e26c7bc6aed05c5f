//! Conversions between paths and the objects they encode.

use std::fmt;
use std::str::FromStr;

use ratdyck_matchings::{dpm, pm};
use ratdyck_matmap::k_sequence;
use ratdyck_noncrossing::NonCrossingChain;
use ratdyck_paths::{DyckPath, Slope};
use ratdyck_perm321::{e_p, e_p_inverse, Permutation321};
use ratdyck_tilings::{dt_map, kappa, Tiling};

use crate::VerifyError;

/// How an input object was given, so that results can be printed back in
/// the same form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    Path,
    Chain,
    Perm,
}

/// Reads exactly one of a path literal, a chain literal or a permutation
/// literal as a path of `slope`.
pub fn read_input(
    slope: Slope,
    path: Option<&str>,
    ncp: Option<&str>,
    perm: Option<&str>,
) -> Result<(DyckPath, InputKind), VerifyError> {
    match (path, ncp, perm) {
        (Some(text), None, None) => Ok((DyckPath::parse(slope, text)?, InputKind::Path)),
        (None, Some(text), None) => {
            let chain = NonCrossingChain::parse(text)?;
            let p = chain.to_path();
            if p.slope() != slope {
                return Err(VerifyError::BadInput(format!(
                    "chain {chain} gives a path of {}, expected {slope}",
                    p.slope()
                )));
            }
            Ok((p, InputKind::Chain))
        }
        (None, None, Some(text)) => {
            let w = Permutation321::parse(text)?;
            let p = e_p(&w);
            if p.slope() != slope {
                return Err(VerifyError::BadInput(format!(
                    "permutation {w} gives a path of {}, expected {slope}",
                    p.slope()
                )));
            }
            Ok((p, InputKind::Perm))
        }
        _ => Err(VerifyError::BadInput(
            "give exactly one of --path, --ncp, --perm".to_string(),
        )),
    }
}

/// Prints a path in the form of the given input kind.
pub fn render(p: &DyckPath, kind: InputKind) -> Result<String, VerifyError> {
    Ok(match kind {
        InputKind::Path => p.to_string(),
        InputKind::Chain => NonCrossingChain::from_path(p)?.to_string(),
        InputKind::Perm => e_p_inverse(p)?.to_string(),
    })
}

/// Conversion targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Path,
    Word,
    Tableau,
    Matching,
    DualMatching,
    Ncp,
    Perm,
    Dt,
    KSequence,
    Kappa,
    YoungRows,
    Tiling,
}

impl Target {
    pub const ALL: [Target; 12] = [
        Target::Path,
        Target::Word,
        Target::Tableau,
        Target::Matching,
        Target::DualMatching,
        Target::Ncp,
        Target::Perm,
        Target::Dt,
        Target::KSequence,
        Target::Kappa,
        Target::YoungRows,
        Target::Tiling,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Path => "path",
            Target::Word => "word",
            Target::Tableau => "tableau",
            Target::Matching => "matching",
            Target::DualMatching => "dual-matching",
            Target::Ncp => "ncp",
            Target::Perm => "perm",
            Target::Dt => "dt",
            Target::KSequence => "k-sequence",
            Target::Kappa => "kappa",
            Target::YoungRows => "young-rows",
            Target::Tiling => "tiling",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, VerifyError> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| VerifyError::BadInput(format!("unknown conversion target {s:?}")))
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

/// Converts a path to the canonical literal of `target`.
pub fn convert(p: &DyckPath, target: Target) -> Result<String, VerifyError> {
    Ok(match target {
        Target::Path => p.to_string(),
        Target::Word => p.word(),
        Target::Tableau => {
            let t = p.to_tableau();
            format!("{} / {}", join(t.first_row()), join(t.second_row()))
        }
        Target::Matching => pm(p).to_string(),
        Target::DualMatching => dpm(p).to_string(),
        Target::Ncp => NonCrossingChain::from_path(p)?.to_string(),
        Target::Perm => e_p_inverse(p)?.to_string(),
        Target::Dt => dt_map(p)?.to_string(),
        Target::KSequence => k_sequence(p).to_string(),
        Target::Kappa => join(&kappa(p)?),
        Target::YoungRows => join(&p.young_rows()),
        Target::Tiling => serde_json::to_string(&Tiling::maximal(p)?)
            .map_err(|e| VerifyError::BadInput(e.to_string()))?,
    })
}
