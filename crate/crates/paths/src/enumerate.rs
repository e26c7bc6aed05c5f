use crate::{DyckPath, Slope};

/// Calls `visit` on the step sequence of every path of the slope, in
/// increasing lexicographic order, without allocating a path per visit.
pub fn for_each_steps<F: FnMut(&[usize])>(slope: Slope, mut visit: F) {
    let an = slope.ups();
    let bounds: Vec<usize> = (1..=an).map(|j| slope.step_bound(j)).collect();
    let mut steps = vec![0usize; an];
    steps[0] = 1;
    if an == 1 {
        visit(&steps);
        return;
    }
    // Iterative depth-first search; `depth` is the index being assigned.
    let mut depth = 1;
    steps[1] = steps[0];
    loop {
        steps[depth] += 1;
        if steps[depth] > bounds[depth] {
            depth -= 1;
            if depth == 0 {
                return;
            }
            continue;
        }
        if depth + 1 == an {
            visit(&steps);
        } else {
            depth += 1;
            steps[depth] = steps[depth - 1];
        }
    }
}

/// All paths of the slope in increasing lexicographic order of step
/// sequences.
pub fn enumerate_paths(slope: Slope) -> Vec<DyckPath> {
    let mut out = Vec::new();
    for_each_steps(slope, |s| {
        out.push(DyckPath::from_steps_unchecked(slope, s.to_vec()))
    });
    out
}

/// Counts the paths by visiting every one of them.
pub fn count_by_enumeration(slope: Slope) -> u64 {
    let mut count = 0u64;
    for_each_steps(slope, |_| count += 1);
    count
}
