use std::collections::HashSet;

use ratdyck_matchings::pm_inverse;
use ratdyck_paths::{enumerate_paths, DyckPath, Slope};
use ratdyck_perm321::{e_p_inverse, perms321, pm_cross, rsk_hat, rsk_path, Permutation321};
use ratdyck_promotion::dual_promotion;
use ratdyck_rowmotion::rowmotion;
use ratdyck_tilings::*;

fn slope(a: usize, b: usize, n: usize) -> Slope {
    Slope::new(a, b, n).unwrap()
}

fn path(s: Slope, text: &str) -> DyckPath {
    DyckPath::parse(s, text).unwrap()
}

/// Every `(1, k)`-path with `k ≤ 3` and `n ≤ 5`.
fn fuss_paths() -> impl Iterator<Item = DyckPath> {
    (1..=3).flat_map(|k| (1..=5).flat_map(move |n| enumerate_paths(slope(1, k, n))))
}

#[test]
fn worked_tiling_example() {
    let p = DyckPath::from_word(slope(1, 1, 5), "UURRURURUR").unwrap();
    let t = Tiling::maximal(&p).unwrap();
    assert_eq!(t.len(), 3);
    let (trans, order) = tile_transpositions(&t).unwrap();
    let pairs: Vec<(usize, usize)> = trans.iter().map(|t| (t.i, t.j)).collect();
    assert_eq!(pairs, [(4, 9), (3, 4), (4, 7)]);
    assert_eq!(order.len(), 3);
    assert_eq!(dt_map(&p).unwrap(), Permutation321::parse("31425").unwrap());
}

#[test]
fn top_path_has_no_tiles() {
    for (k, n) in [(1, 4), (2, 3), (3, 2)] {
        let top = DyckPath::top(slope(1, k, n));
        let t = Tiling::maximal(&top).unwrap();
        assert!(t.is_empty());
        assert!(tile_transpositions(&t).unwrap().0.is_empty());
        assert_eq!(kappa(&top).unwrap(), vec![0; n]);
        if k == 1 {
            assert_eq!(dt_map(&top).unwrap(), Permutation321::identity(n));
        }
    }
}

#[test]
fn kappa_examples() {
    let s = slope(1, 2, 3);
    assert_eq!(kappa(&path(s, "147")).unwrap(), [1, 2, 0]);
    assert_eq!(kappa(&path(s, "127")).unwrap(), [4, 0, 0]);
    assert_eq!(kappa_by_transpositions(&path(s, "147")).unwrap(), [1, 2, 0]);
    assert_eq!(kappa_by_transpositions(&path(s, "127")).unwrap(), [4, 0, 0]);
    assert_eq!(rsk_hat_inverse(&path(s, "147")).unwrap().compact(), "126");
    assert_eq!(rsk_hat_inverse(&path(s, "127")).unwrap().compact(), "123");
}

#[test]
fn rsk_inverse_orbits_for_2_dyck_paths_of_size_3() {
    let s = slope(1, 2, 3);
    let orbit = |start: &str| {
        let first = path(s, start);
        let mut out = vec![first.compact()];
        let mut q = rsk_hat_inverse(&first).unwrap();
        while q != first {
            out.push(q.compact());
            q = rsk_hat_inverse(&q).unwrap();
        }
        out
    };
    assert_eq!(
        orbit("147"),
        ["147", "126", "134", "136", "137", "127", "123"]
    );
    assert_eq!(orbit("146"), ["146", "124"]);
    assert_eq!(orbit("145"), ["145", "125"]);
    assert_eq!(orbit("135"), ["135"]);
}

#[test]
fn rsk_path_example() {
    let s = slope(1, 2, 3);
    assert_eq!(rsk_hat_path(&path(s, "147")).unwrap().compact(), "123");
    assert_eq!(rsk_hat_inverse(&path(s, "123")).unwrap().compact(), "147");
    for k in 1..=3 {
        for p in enumerate_paths(slope(1, k, 1)) {
            assert_eq!(rsk_hat_path(&p).unwrap(), p);
        }
    }
}

#[test]
fn maximal_tilings_are_cover_inclusive_and_maximal() {
    for p in fuss_paths() {
        let t = Tiling::maximal(&p).unwrap();
        assert!(t.is_partition(), "{p}");
        assert!(t.is_cover_inclusive(), "{p}");
        assert!(t.is_maximal(), "{p}");
        let (trans, order) = tile_transpositions(&t).unwrap();
        assert_eq!(trans.len(), t.len());
        let distinct: HashSet<usize> = order.into_iter().collect();
        assert_eq!(distinct.len(), t.len());
    }
}

#[test]
fn hermite_history_matches_transposition_count() {
    for p in fuss_paths() {
        assert_eq!(
            kappa(&p).unwrap(),
            kappa_by_transpositions(&p).unwrap(),
            "{p}"
        );
    }
}

#[test]
fn rsk_maps_are_inverse_bijections() {
    for p in fuss_paths() {
        let q = rsk_hat_inverse(&p).unwrap();
        assert_eq!(rsk_hat_path(&q).unwrap(), p, "{p}");
        assert_eq!(
            rsk_hat_inverse(&rsk_hat_path(&p).unwrap()).unwrap(),
            p,
            "{p}"
        );
    }
}

#[test]
fn rsk_inverse_conjugates_promotion_to_rowmotion() {
    for p in fuss_paths() {
        assert_eq!(
            rsk_hat_inverse(&dual_promotion(&p)).unwrap(),
            rowmotion(&rsk_hat_inverse(&p).unwrap()),
            "{p}"
        );
    }
}

#[test]
fn classical_rsk_path_agrees_with_permutations() {
    for n in 1..=6 {
        for p in enumerate_paths(slope(1, 1, n)) {
            let via_cross = pm_inverse(&pm_cross(&e_p_inverse(&p).unwrap()), p.slope()).unwrap();
            assert_eq!(rsk_hat_path(&p).unwrap(), via_cross, "{p}");
            assert_eq!(rsk_hat_path(&p).unwrap(), rsk_path(&p).unwrap(), "{p}");
        }
    }
}

#[test]
fn dt_inverts_rsk_hat() {
    for n in 1..=6 {
        for w in perms321(n) {
            assert_eq!(dt_map(&rsk_hat(&w)).unwrap(), w, "{w}");
        }
    }
}

#[test]
fn errors() {
    let p = DyckPath::top(slope(2, 3, 1));
    assert!(matches!(Tiling::maximal(&p), Err(TilingError::NotFuss(_))));
    assert!(matches!(rsk_hat_path(&p), Err(TilingError::NotFuss(_))));
    assert!(dt_map(&DyckPath::top(slope(1, 2, 2))).is_err());
    assert!(DyckTile::new(1, vec![(0, 0), (2, 0)]).is_err());
    assert!(DyckTile::new(2, vec![(0, 0), (0, 1), (1, 1)]).is_err());
    assert_eq!(
        DyckTile::new(2, vec![(0, 0), (0, 1), (1, 1), (2, 1)])
            .unwrap()
            .size(),
        1
    );
}

#[test]
fn tiling_json() {
    let p = DyckPath::from_word(slope(1, 1, 2), "URUR").unwrap();
    let t = Tiling::maximal(&p).unwrap();
    let json = serde_json::to_string(&t).unwrap();
    assert_eq!(json, r#"{"tiles":[{"cells":[[1,0]],"size":0}]}"#);
}
