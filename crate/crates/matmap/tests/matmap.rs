use std::collections::HashSet;

use ratdyck_matmap::*;
use ratdyck_paths::{enumerate_paths, DyckPath, Slope};
use ratdyck_promotion::{dual_promotion, evacuation};
use ratdyck_rowmotion::{rowmotion, rowmotion_power, rowvacuation};

fn slope(a: usize, b: usize, n: usize) -> Slope {
    Slope::new(a, b, n).unwrap()
}

fn path(s: Slope, text: &str) -> DyckPath {
    DyckPath::parse(s, text).unwrap()
}

const DOMAINS: [(usize, usize, usize); 7] = [
    (1, 1, 6),
    (1, 2, 4),
    (1, 3, 3),
    (2, 3, 2),
    (3, 2, 2),
    (2, 5, 2),
    (2, 1, 3),
];

fn sizes() -> impl Iterator<Item = Slope> {
    DOMAINS
        .iter()
        .flat_map(|&(a, b, n)| (1..=n).map(move |m| slope(a, b, m)))
}

#[test]
fn k_sequence_examples() {
    let p = path(slope(1, 1, 5), "URUURURRUR");
    assert_eq!(k_sequence(&p).to_string(), "2,4,~3,5,~5");
    assert_eq!(
        k_sequence(&path(slope(1, 2, 3), "147")).to_string(),
        "3,5,~3"
    );
    assert_eq!(
        k_sequence(&path(slope(2, 3, 2), "1,3,5,6")).to_string(),
        "~1,5,6,~4"
    );
}

#[test]
fn k_sets_determine_paths() {
    for s in sizes() {
        for p in enumerate_paths(s) {
            let k = k_sequence(&p);
            let mut shuffled = k.entries().to_vec();
            shuffled.reverse();
            assert_eq!(path_from_k_set(s, &shuffled).unwrap(), p);
        }
    }
}

#[test]
fn k_set_errors() {
    let s = slope(1, 2, 3);
    let parse = |t: &str| BarSequence::parse(s, t).unwrap().entries().to_vec();
    assert!(path_from_k_set(s, &parse("3,5")).is_err());
    assert!(path_from_k_set(s, &parse("3,5,~4")).is_err());
    assert!(path_from_k_set(s, &parse("3,7,~3")).is_err());
    assert!(path_from_k_set(s, &parse("~1,~1,3")).is_err());
    assert!(BarSequence::parse(s, "3,x").is_err());
}

#[test]
fn mat_examples() {
    let s = slope(1, 1, 5);
    assert_eq!(mat(&path(s, "URUURURRUR")).unwrap().word(), "URURUURURR");

    let s = slope(1, 2, 3);
    let (blocks, image) = mat_blocks_fuss(&path(s, "147")).unwrap();
    assert_eq!(blocks, [vec![3, 2, 1], vec![5, 4, 9], vec![7, 8, 6]]);
    assert_eq!(image.compact(), "146");

    let s = slope(2, 3, 2);
    let ctx = MatContext::new(s);
    let (blocks, image) = ctx.mat_blocks(&path(s, "1,3,5,6")).unwrap();
    assert_eq!(
        blocks,
        [vec![10, 1, 2], vec![5, 4], vec![6, 3, 9], vec![7, 8]]
    );
    assert_eq!(image.to_string(), "1,3,4,7");

    let s = slope(1, 2, 2);
    assert_eq!(mat(&path(s, "14")).unwrap().compact(), "14");
    assert_eq!(mat(&path(s, "13")).unwrap().compact(), "12");
    assert_eq!(mat(&path(s, "12")).unwrap().compact(), "13");

    let s = slope(2, 1, 2);
    assert_eq!(mat(&path(s, "1245")).unwrap().compact(), "1234");
    assert_eq!(mat(&path(s, "1234")).unwrap().compact(), "1235");
    assert_eq!(mat(&path(s, "1235")).unwrap().compact(), "1245");
}

#[test]
fn mat_orbits_for_2_dyck_paths_of_size_3() {
    let s = slope(1, 2, 3);
    let orbit = |start: &str| {
        let first = path(s, start);
        let mut out = vec![first.compact()];
        let mut q = mat(&first).unwrap();
        while q != first {
            out.push(q.compact());
            q = mat(&q).unwrap();
        }
        out
    };
    assert_eq!(
        orbit("147"),
        ["147", "146", "126", "125", "123", "135", "137"]
    );
    assert_eq!(orbit("145"), ["145", "136", "127"]);
    assert_eq!(orbit("134"), ["134"]);
    assert_eq!(orbit("124"), ["124"]);
}

#[test]
fn admissibility_examples() {
    let ctx = MatContext::new(slope(2, 3, 2));
    assert!(!ctx.admissible(&[], &[10, 1]));
    assert!(ctx.admissible(&[], &[10, 1, 2]));
    assert!(!ctx.admissible(&[], &[10, 1, 2, 3]));
    let chosen = [vec![1, 2, 10]];
    assert!(ctx.admissible(&chosen, &[5, 4]));
    assert!(!ctx.admissible(&chosen, &[5, 4, 3]));
    for (a, b) in [(1, 1), (1, 2), (2, 3), (3, 5), (2, 5), (1, 4)] {
        let s = slope(a, b, 1);
        let ctx = MatContext::new(s);
        let (blocks, _) = ctx.mat_blocks(&DyckPath::top(s)).unwrap();
        assert!(blocks[0].len() > b / a, "({a},{b})");
    }
}

#[test]
fn general_construction_agrees_with_fixed_sizes_on_fuss_slopes() {
    for k in 1..=3 {
        for n in 1..=4 {
            if k * n > 10 {
                continue;
            }
            let s = slope(1, k, n);
            let ctx = MatContext::new(s);
            for p in enumerate_paths(s) {
                assert_eq!(
                    ctx.mat_blocks(&p).unwrap(),
                    mat_blocks_fuss(&p).unwrap(),
                    "{p}"
                );
            }
        }
    }
}

#[test]
fn mat_is_a_bijection_with_inverse() {
    for s in sizes() {
        let ctx = MatContext::new(s);
        let paths = enumerate_paths(s);
        let images: HashSet<DyckPath> = paths.iter().map(|p| ctx.mat(p).unwrap()).collect();
        assert_eq!(images.len(), paths.len(), "{s}");
        for p in &paths {
            let q = ctx.mat(p).unwrap();
            assert_eq!(&mat_inverse(&q).unwrap(), p, "{p}");
            assert_eq!(ctx.mat(&mat_inverse(p).unwrap()).unwrap(), *p, "{p}");
        }
    }
}

#[test]
fn mat_inverse_selection_reads_a_k_sequence() {
    let s = slope(1, 2, 3);
    let q = path(s, "146");
    let mut sel = mat_inverse_selection(&q);
    sel.sort();
    let mut k = k_sequence(&path(s, "147")).entries().to_vec();
    k.sort();
    assert_eq!(sel, k);
    assert_eq!(height(BarInt::bar(3), slope(2, 3, 2)), 5);
    assert_eq!(height(BarInt::plain(3), slope(2, 3, 2)), 3);
}

#[test]
fn mat_conjugates_rowmotion_to_inverse_promotion() {
    for s in sizes() {
        let ctx = MatContext::new(s);
        for p in enumerate_paths(s) {
            assert_eq!(
                ctx.mat(&rowmotion(&p)).unwrap(),
                dual_promotion(&ctx.mat(&p).unwrap()),
                "{p}"
            );
        }
    }
}

#[test]
fn evacuation_through_rowvacuation_on_fuss_slopes() {
    for (k, n) in [(1, 5), (2, 4), (3, 3)] {
        for m in 1..=n {
            let s = slope(1, k, m);
            for p in enumerate_paths(s) {
                let inner = rowmotion_power(&rowvacuation(&mat_inverse(&p).unwrap()), -(k as i64));
                assert_eq!(mat(&inner).unwrap(), evacuation(&p), "{p}");
            }
        }
    }
}

#[test]
fn slope_mismatch_is_rejected() {
    let ctx = MatContext::new(slope(2, 3, 2));
    assert!(matches!(
        ctx.mat(&DyckPath::top(slope(2, 3, 1))),
        Err(MatMapError::SlopeMismatch { .. })
    ));
}
