use ratdyck_paths::{DyckPath, Slope};

use crate::{PermError, Permutation321};

pub(crate) fn classical_slope(n: usize) -> Slope {
    Slope::new(1, 1, n).expect("n ≥ 1")
}

pub(crate) fn require_classical(p: &DyckPath) -> Result<usize, PermError> {
    let s = p.slope();
    if s.a() != 1 || s.b() != 1 {
        return Err(PermError::NotClassical(s));
    }
    Ok(s.n())
}

/// Builds the `(1,1)`-path through the given peaks. A peak `(x, y)` is
/// reached after `x` right steps and `y` up steps; peaks must be sorted.
pub fn path_from_peaks(n: usize, peaks: &[(usize, usize)]) -> Result<DyckPath, PermError> {
    let (mut x, mut y) = (0, 0);
    let mut word = String::with_capacity(2 * n);
    for &(px, py) in peaks {
        if px < x || py <= y || px > n || py > n {
            return Err(PermError::BadPeaks(peaks.to_vec()));
        }
        word.extend(std::iter::repeat_n('R', px - x));
        word.extend(std::iter::repeat_n('U', py - y));
        (x, y) = (px, py);
    }
    if y != n {
        return Err(PermError::BadPeaks(peaks.to_vec()));
    }
    word.extend(std::iter::repeat_n('R', n - x));
    DyckPath::from_word(classical_slope(n), &word).map_err(|_| PermError::BadPeaks(peaks.to_vec()))
}

/// Peaks `(x, y)` of a path: positions reached by an up step followed by a
/// right step.
pub fn peaks(p: &DyckPath) -> Vec<(usize, usize)> {
    let up = p.up_indicator();
    let (mut x, mut y) = (0, 0);
    let mut out = Vec::new();
    for (i, &u) in up.iter().enumerate() {
        if u {
            y += 1;
            if i + 1 == up.len() || !up[i + 1] {
                out.push((x, y));
            }
        } else {
            x += 1;
        }
    }
    out
}

/// Valleys `(x, y)` of a path: positions reached by a right step followed
/// by an up step.
pub fn valleys(p: &DyckPath) -> Vec<(usize, usize)> {
    let up = p.up_indicator();
    let (mut x, mut y) = (0, 0);
    let mut out = Vec::new();
    for (i, &u) in up.iter().enumerate() {
        if u {
            y += 1;
        } else {
            x += 1;
            if i + 1 < up.len() && up[i + 1] {
                out.push((x, y));
            }
        }
    }
    out
}

/// `E_p(w)`: the path whose peaks are the Rothe marks on or above the
/// diagonal, the mark `(i, w_i)` becoming the peak `(i − 1, w_i)`.
pub fn e_p(w: &Permutation321) -> DyckPath {
    let peaks: Vec<(usize, usize)> = (1..=w.len())
        .filter(|&i| w.at(i) >= i)
        .map(|i| (i - 1, w.at(i)))
        .collect();
    path_from_peaks(w.len(), &peaks).expect("marks on or above the diagonal form a Dyck path")
}

/// `E_p⁻¹(p)`: marks at the peaks, the remaining columns filled with the
/// remaining values in increasing order.
pub fn e_p_inverse(p: &DyckPath) -> Result<Permutation321, PermError> {
    let n = require_classical(p)?;
    let mut values = vec![0; n];
    for (x, y) in peaks(p) {
        values[x] = y;
    }
    let mut used = vec![false; n + 1];
    for &v in &values {
        used[v] = true;
    }
    let mut rest = (1..=n).filter(|&v| !used[v]);
    for v in values.iter_mut().filter(|v| **v == 0) {
        *v = rest.next().expect("one free value per free column");
    }
    Permutation321::new(values)
}

/// `E_w(w) = E_p(w⁻¹)`.
pub fn e_w(w: &Permutation321) -> DyckPath {
    e_p(&w.inverse())
}

/// `E_q(w)`: the path below the diagonal with corners at the marks strictly
/// below it, reflected above the diagonal by swapping the two step letters.
pub fn e_q(w: &Permutation321) -> DyckPath {
    let n = w.len();
    let mut word = String::with_capacity(2 * n);
    let (mut x, mut y) = (0, 0);
    for i in (1..=n).filter(|&i| w.at(i) < i) {
        let (cx, cy) = (i - 1, w.at(i));
        word.extend(std::iter::repeat_n('U', cx - x));
        word.extend(std::iter::repeat_n('R', cy - y));
        (x, y) = (cx, cy);
    }
    word.extend(std::iter::repeat_n('U', n - x));
    word.extend(std::iter::repeat_n('R', n - y));
    DyckPath::from_word(classical_slope(n), &word)
        .expect("marks below the diagonal reflect to a Dyck path")
}

/// `E_v` applied to the path `p = E_p(w)`.
///
/// Every valley `(x, y)` of `p` gives a peak `(x − 1, y + 1)`. Diagonal
/// peaks `(t, t + 1)` fill in wherever the next peak would otherwise leave
/// the region above the diagonal.
pub fn e_v_of_path(p: &DyckPath) -> Result<DyckPath, PermError> {
    let n = require_classical(p)?;
    let targets: Vec<(usize, usize)> = valleys(p).iter().map(|&(x, y)| (x - 1, y + 1)).collect();
    let mut out = Vec::new();
    let mut y = 0;
    for &(x, peak_y) in targets.iter().chain(std::iter::once(&(n, 0))) {
        while x > y {
            out.push((y, y + 1));
            y += 1;
        }
        if x < n {
            out.push((x, peak_y));
            y = peak_y;
        }
    }
    path_from_peaks(n, &out)
}

/// `E_v(w)`.
pub fn e_v(w: &Permutation321) -> DyckPath {
    e_v_of_path(&e_p(w)).expect("valleys of a Dyck path yield a Dyck path")
}

/// `Dyck₁ = E_v∘E_p⁻¹`.
pub fn dyck1(p: &DyckPath) -> Result<DyckPath, PermError> {
    e_v_of_path(p)
}

/// `Dyck₂ = E_q∘E_p⁻¹`.
pub fn dyck2(p: &DyckPath) -> Result<DyckPath, PermError> {
    Ok(e_q(&e_p_inverse(p)?))
}

/// `Dyck₃ = E_w∘E_p⁻¹`.
pub fn dyck3(p: &DyckPath) -> Result<DyckPath, PermError> {
    Ok(e_w(&e_p_inverse(p)?))
}
