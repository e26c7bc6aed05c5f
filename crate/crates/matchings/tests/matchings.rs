use ratdyck_matchings::*;
use ratdyck_paths::{enumerate_paths, DyckPath, Slope};

fn slope(a: usize, b: usize, n: usize) -> Slope {
    Slope::new(a, b, n).unwrap()
}

fn path(a: usize, b: usize, n: usize, steps: &[usize]) -> DyckPath {
    DyckPath::new(slope(a, b, n), steps.to_vec()).unwrap()
}

fn matching(ground: usize, text: &str) -> PerfectMatching {
    PerfectMatching::parse(ground, text).unwrap()
}

#[test]
fn pm_examples() {
    assert_eq!(
        pm(&path(1, 1, 3, &[1, 2, 5])),
        matching(6, "{1,4},{2,3},{5,6}")
    );
    assert_eq!(
        pm(&path(2, 3, 2, &[1, 2, 5, 7])),
        matching(10, "{1,4,10},{2,3},{5,6,9},{7,8}")
    );
    assert_eq!(
        pm(&path(1, 2, 3, &[1, 3, 5])),
        matching(9, "{1,2,9},{3,4,8},{5,6,7}")
    );
}

#[test]
fn pm_inverse_examples() {
    let s = slope(1, 2, 3);
    assert_eq!(
        pm_inverse(&matching(9, "{1,2,3},{4,5,9},{6,7,8}"), s).unwrap(),
        path(1, 2, 3, &[1, 4, 6])
    );
    assert_eq!(
        pm_inverse(&matching(6, "{1,4},{2,3},{5,6}"), slope(1, 1, 3)).unwrap(),
        path(1, 1, 3, &[1, 2, 5])
    );
    assert!(matches!(
        pm_inverse(&matching(6, "{1,2,3},{4,5,6}"), slope(1, 1, 3)),
        Err(MatchingError::Path(_))
    ));
    // The minima 1,3 form the path URUR, whose matching is {1,2},{3,4}.
    assert!(matches!(
        pm_inverse(&matching(4, "{1,2,4},{3}"), slope(1, 1, 2)),
        Err(MatchingError::NotAPathMatching(_))
    ));
}

#[test]
fn pm_round_trips_and_is_noncrossing() {
    for (a, b, n) in [
        (1, 1, 6),
        (1, 2, 4),
        (1, 3, 3),
        (2, 3, 2),
        (3, 2, 2),
        (2, 5, 2),
        (2, 1, 4),
        (3, 4, 1),
    ] {
        let s = slope(a, b, n);
        for p in enumerate_paths(s) {
            let m = try_pm(&p).unwrap();
            assert!(m.is_noncrossing(), "{p}");
            assert_eq!(m.len(), s.ups());
            assert_eq!(pm_inverse(&m, s).unwrap(), p);
            let d = dpm(&p);
            assert!(d.is_noncrossing(), "{p}");
            assert_eq!(d.ground_size(), s.len());
        }
    }
}

#[test]
fn fuss_blocks_have_k_plus_one_elements() {
    for (k, n) in [(1, 6), (2, 4), (3, 3), (4, 3)] {
        for p in enumerate_paths(slope(1, k, n)) {
            assert!(pm(&p).blocks().iter().all(|b| b.len() == k + 1));
        }
    }
}

#[test]
fn dpm_examples() {
    assert_eq!(
        dpm(&path(2, 3, 2, &[1, 2, 5, 7])),
        matching(10, "{1,10},{2,4},{3},{5,7,9},{6},{8}")
    );
    let p = path(1, 1, 3, &[1, 2, 5]);
    assert_eq!(dpm(&p), matching(6, "{1,4},{2,3},{5,6}"));
    assert_eq!(dpm(&path(1, 2, 1, &[1])), matching(3, "{1,3},{2}"));
}

#[test]
fn dpm_equals_pm_for_classical_paths() {
    for n in 1..=6 {
        for p in enumerate_paths(slope(1, 1, n)) {
            assert_eq!(dpm(&p), pm(&p));
        }
    }
}

#[test]
fn pm_has_a_singleton_when_a_exceeds_b() {
    for (a, b, n) in [
        (2, 1, 1),
        (2, 1, 3),
        (2, 1, 4),
        (3, 2, 1),
        (3, 2, 2),
        (5, 2, 1),
    ] {
        for p in enumerate_paths(slope(a, b, n)) {
            assert!(pm(&p).blocks().iter().any(|blk| blk.len() == 1), "{p}");
            // Through star the dual matching sees the (b, a) slope, so the
            // singleton shows up in dpm when a < b.
            assert!(
                dpm(&p.star()).blocks().iter().any(|blk| blk.len() == 1),
                "{p}"
            );
        }
    }
}

#[test]
fn bar_examples() {
    assert_eq!(
        matching(10, "{1,4,10},{2,3},{5,6,9},{7,8}").bar(),
        matching(10, "{1,7,10},{2,5,6},{3,4},{8,9}")
    );
    assert_eq!(matching(2, "{1,2}").bar(), matching(2, "{1,2}"));
    for p in enumerate_paths(slope(1, 2, 4)) {
        let m = pm(&p);
        assert_eq!(m.bar().bar(), m);
        assert!(m.bar().is_noncrossing());
    }
}

#[test]
fn rotate_examples() {
    assert_eq!(
        matching(6, "{1,2},{3,4},{5,6}").rotate(),
        matching(6, "{1,6},{2,3},{4,5}")
    );
    let m = pm(&path(2, 3, 2, &[1, 2, 5, 7]));
    let mut r = m.clone();
    for _ in 0..10 {
        r = r.rotate();
    }
    assert_eq!(r, m);
}

#[test]
fn json_round_trip() {
    let m = matching(6, "{1,4},{2,3},{5,6}");
    let text = serde_json::to_string(&m).unwrap();
    assert_eq!(text, r#"{"ground":6,"blocks":[[1,4],[2,3],[5,6]]}"#);
    assert_eq!(serde_json::from_str::<PerfectMatching>(&text).unwrap(), m);
}
