use ratdyck_matchings::PerfectMatching;
use ratdyck_paths::DyckPath;

use crate::extract::{classical_slope, e_p_inverse};
use crate::{PermError, Permutation321};

/// A standard Young tableau with at most two rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoRowTableau {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

/// Row-insertion RSK restricted to shapes with at most two rows.
/// Returns `(P, Q)`, or an error if a third row would appear.
pub fn rsk_two_row(values: &[usize]) -> Result<(TwoRowTableau, TwoRowTableau), PermError> {
    let mut p = [Vec::new(), Vec::new()];
    let mut q = [Vec::new(), Vec::new()];
    for (t, &x) in values.iter().enumerate() {
        let mut cur = x;
        let mut row = 0;
        loop {
            if row == 2 {
                return Err(PermError::ThirdRow(values.to_vec()));
            }
            let r: &mut Vec<usize> = &mut p[row];
            match r.iter().position(|&v| v > cur) {
                None => {
                    r.push(cur);
                    q[row].push(t + 1);
                    break;
                }
                Some(pos) => {
                    std::mem::swap(&mut r[pos], &mut cur);
                    row += 1;
                }
            }
        }
    }
    let [p1, p2] = p;
    let [q1, q2] = q;
    Ok((
        TwoRowTableau {
            first: p1,
            second: p2,
        },
        TwoRowTableau {
            first: q1,
            second: q2,
        },
    ))
}

/// `R̂SK(w)`: step `i ≤ n` is up when `i` lies in the first row of `P`, and
/// step `2n + 1 − i` is right when `i` lies in the first row of `Q`.
pub fn rsk_hat(w: &Permutation321) -> DyckPath {
    let n = w.len();
    let (p, q) = rsk_two_row(w.values()).expect("321-avoiding permutations have two rows");
    let mut word = vec!['U'; 2 * n];
    for i in 1..=n {
        word[i - 1] = if p.first.contains(&i) { 'U' } else { 'R' };
        word[2 * n - i] = if q.first.contains(&i) { 'R' } else { 'U' };
    }
    let word: String = word.into_iter().collect();
    DyckPath::from_word(classical_slope(n), &word).expect("R̂SK produces a Dyck path")
}

/// `R̂SK∘E_p⁻¹` as a map on `(1,1)`-paths.
pub fn rsk_path(p: &DyckPath) -> Result<DyckPath, PermError> {
    Ok(rsk_hat(&e_p_inverse(p)?))
}

/// `PM^×(w)`: starts from the arcs `(w_{n+1−i}, n + i)` and resolves
/// crossings until the matching is non-crossing.
///
/// A crossing `(a, c)`, `(b, d)` with `a < b < c < d` is replaced by
/// `(a, b)`, `(c, d)`. Each round resolves the crossing with the smallest
/// gap `c − b`, breaking ties by the smaller `b`.
pub fn pm_cross(w: &Permutation321) -> PerfectMatching {
    let n = w.len();
    let mut arcs: Vec<(usize, usize)> = (1..=n)
        .map(|i| {
            let x = w.at(n + 1 - i);
            let y = n + i;
            (x.min(y), x.max(y))
        })
        .collect();
    loop {
        let mut best: Option<((usize, usize), usize, usize)> = None;
        for (s, &(a, c)) in arcs.iter().enumerate() {
            for (t, &(b, d)) in arcs.iter().enumerate() {
                if a < b && b < c && c < d {
                    let key = (c - b, b);
                    if best.is_none_or(|(k, _, _)| key < k) {
                        best = Some((key, s, t));
                    }
                }
            }
        }
        let Some((_, s, t)) = best else { break };
        let (a, c) = arcs[s];
        let (b, d) = arcs[t];
        arcs[s] = (a, b);
        arcs[t] = (c, d);
    }
    let blocks = arcs.into_iter().map(|(x, y)| vec![x, y]).collect();
    PerfectMatching::new(2 * n, blocks).expect("resolved arcs form a non-crossing matching")
}
