//! Cycle decompositions of bijections on finite domains.

use std::collections::{BTreeMap, BTreeSet};

use ratdyck_paths::DyckPath;

use crate::maps::{Ctx, MapName};
use crate::VerifyError;

/// Splits a permutation of `domain` into cycles. Each cycle starts at its
/// smallest element and the cycles are sorted by that element. Fails with
/// a witness when `f` is not a bijection of the domain.
pub fn cycles<T, F>(name: &str, domain: &[T], mut f: F) -> Result<Vec<Vec<T>>, VerifyError>
where
    T: Ord + Clone + std::fmt::Display,
    F: FnMut(&T) -> Result<T, VerifyError>,
{
    let members: BTreeSet<&T> = domain.iter().collect();
    let mut image: BTreeMap<T, T> = BTreeMap::new();
    let mut preimage: BTreeMap<T, T> = BTreeMap::new();
    for x in domain {
        let y = f(x)?;
        if !members.contains(&y) {
            return Err(VerifyError::NotBijective {
                map: name.to_string(),
                witness: format!("{x} maps outside the domain to {y}"),
            });
        }
        if let Some(other) = preimage.insert(y.clone(), x.clone()) {
            return Err(VerifyError::NotBijective {
                map: name.to_string(),
                witness: format!("{other} and {x} both map to {y}"),
            });
        }
        image.insert(x.clone(), y);
    }
    let mut seen: BTreeSet<T> = BTreeSet::new();
    let mut out = Vec::new();
    for start in members {
        if seen.contains(start) {
            continue;
        }
        let mut cycle = vec![start.clone()];
        seen.insert(start.clone());
        let mut x = image[start].clone();
        while &x != start {
            seen.insert(x.clone());
            cycle.push(x.clone());
            x = image[&x].clone();
        }
        out.push(cycle);
    }
    Ok(out)
}

/// The cycles of `map` on every path of the context's slope.
pub fn orbit_table(ctx: &Ctx, map: MapName) -> Result<Vec<Vec<DyckPath>>, VerifyError> {
    cycles(map.name(), ctx.paths(), |p| ctx.apply(map, p))
}

/// Formats one cycle as `(123 147 136)` using `label` for the elements.
pub fn format_cycle<T>(cycle: &[T], label: impl Fn(&T) -> String) -> String {
    let parts: Vec<String> = cycle.iter().map(label).collect();
    format!("({})", parts.join(" "))
}

/// Formats a cycle decomposition on one line, cycles separated by spaces.
pub fn format_cycles<T>(cycles: &[Vec<T>], label: impl Fn(&T) -> String) -> String {
    let parts: Vec<String> = cycles.iter().map(|c| format_cycle(c, &label)).collect();
    parts.join(" ")
}
