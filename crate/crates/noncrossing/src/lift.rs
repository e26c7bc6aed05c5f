use crate::partition::UnionFind;
use crate::{NcError, NonCrossingChain};

/// The lift of a chain of `k` layers.
///
/// Every pair `{x, y}` first gets weight one more than the number of layers
/// in which it shares a block, so pairs sharing a block in every layer
/// reach the overflow weight `k + 1`. For each overflow pair and each third
/// point, if exactly one side of the triangle `p1 < p2 < p3` overflows, one
/// other side is deleted: overflow on `p1p2` deletes `p1p3`, on `p2p3`
/// deletes `p1p2`, on `p1p3` deletes `p2p3`. Pairs crossing an overflow
/// pair are deleted next, then the overflow pairs themselves. Layer `j` of
/// the result joins the pairs of remaining weight at least `j`.
pub fn lift(chain: &NonCrossingChain) -> Result<NonCrossingChain, NcError> {
    let n = chain.n();
    let k = chain.k();
    let mut weight = vec![vec![0usize; n + 1]; n + 1];
    for x in 1..=n {
        for y in x + 1..=n {
            weight[x][y] = chain.weight(x, y) + 1;
        }
    }
    let w = |x: usize, y: usize| weight[x.min(y)][x.max(y)];
    let heavy: Vec<(usize, usize)> = (1..=n)
        .flat_map(|x| (x + 1..=n).map(move |y| (x, y)))
        .filter(|&(x, y)| w(x, y) == k + 1)
        .collect();
    let mut deleted = vec![vec![false; n + 1]; n + 1];
    for &(x, y) in &heavy {
        for z in (1..=n).filter(|&z| z != x && z != y) {
            let mut tri = [x, y, z];
            tri.sort_unstable();
            let [p1, p2, p3] = tri;
            let sides = [(p1, p2), (p2, p3), (p1, p3)];
            let over: Vec<(usize, usize)> = sides
                .into_iter()
                .filter(|&(a, b)| w(a, b) == k + 1)
                .collect();
            if let [side] = over.as_slice() {
                let (a, b) = if *side == (p1, p2) {
                    (p1, p3)
                } else if *side == (p2, p3) {
                    (p1, p2)
                } else {
                    (p2, p3)
                };
                deleted[a][b] = true;
            }
        }
    }
    for &(x, y) in &heavy {
        for a in 1..=n {
            for b in a + 1..=n {
                let distinct = a != x && a != y && b != x && b != y;
                let inside = |t: usize| x < t && t < y;
                if distinct && inside(a) != inside(b) {
                    deleted[a][b] = true;
                }
            }
        }
        deleted[x][y] = true;
    }
    let layers = (1..=k)
        .map(|j| {
            let mut uf = UnionFind::new(n);
            for x in 1..=n {
                for y in x + 1..=n {
                    if !deleted[x][y] && weight[x][y] >= j {
                        uf.union(x, y);
                    }
                }
            }
            uf.partition(n)
        })
        .collect();
    NonCrossingChain::new(layers)
}
