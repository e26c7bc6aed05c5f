use ratdyck_paths::{enumerate_paths, DyckPath, Slope};
use ratdyck_rowmotion::*;

fn slope(a: usize, b: usize, n: usize) -> Slope {
    Slope::new(a, b, n).unwrap()
}

fn path(s: Slope, text: &str) -> DyckPath {
    DyckPath::parse(s, text).unwrap()
}

const DOMAINS: [(usize, usize, usize); 8] = [
    (1, 1, 6),
    (1, 2, 4),
    (1, 3, 3),
    (2, 3, 2),
    (3, 2, 2),
    (2, 5, 2),
    (2, 1, 4),
    (3, 1, 3),
];

fn all_domains() -> impl Iterator<Item = DyckPath> {
    DOMAINS
        .iter()
        .flat_map(|&(a, b, n)| (1..=n).flat_map(move |m| enumerate_paths(slope(a, b, m))))
}

fn orbit(f: fn(&DyckPath) -> DyckPath, start: &DyckPath) -> Vec<String> {
    let mut out = vec![start.compact()];
    let mut q = f(start);
    while &q != start {
        out.push(q.compact());
        q = f(&q);
    }
    out
}

#[test]
fn region_ranks() {
    for k in 1..=4 {
        for n in 1..=5 {
            let region = BoxRegion::new(slope(1, k, n));
            assert_eq!(region.rmax(), ((n - 1) * k) as i64 - 1);
            if n > 1 {
                assert_eq!(region.rank(1, 1), ((n - 1) * k) as i64 - 1);
                assert_eq!(region.rmin(), 0);
            }
        }
    }
    for n in 2..=6 {
        let region = BoxRegion::new(slope(1, 1, n));
        for (i, j) in region.cells() {
            let r = region.rank(i, j);
            assert!((0..=n as i64 - 2).contains(&r));
        }
    }
    for &(a, b, n) in &DOMAINS {
        let region = BoxRegion::new(slope(a, b, n));
        for (i, j) in region.cells() {
            if region.contains(i, j + 1) {
                assert_eq!(region.rank(i, j) - region.rank(i, j + 1), 1);
            }
            if region.contains(i + 1, j) {
                assert_eq!(region.rank(i, j) - region.rank(i + 1, j), 1);
            }
        }
        let counted: usize = (region.rmin()..=region.rmax())
            .map(|r| region.cells_of_rank(r).len())
            .sum();
        assert_eq!(counted, region.cells().len());
    }
}

#[test]
fn filter_examples() {
    let s = slope(1, 3, 3);
    assert_eq!(filter_of_path(&path(s, "1,3,6")).rows(), &[3, 1, 0]);
    // The filter counts boxes above the path, so the top path has none and
    // the lowest path fills the region.
    assert!(filter_of_path(&DyckPath::top(s)).is_empty());
    let full = filter_of_path(&DyckPath::lowest(s));
    assert_eq!(full.rows(), BoxRegion::new(s).row_lengths());
}

#[test]
fn filters_and_paths_are_inverse() {
    for p in all_domains() {
        let f = filter_of_path(&p);
        assert_eq!(path_of_filter(&f), p);
        assert_eq!(OrderFilter::from_cells(p.slope(), &f.cells()).unwrap(), f);
    }
}

#[test]
fn rank_toggle_examples() {
    let s = slope(1, 3, 3);
    let p = path(s, "1,3,6");
    assert_eq!(rank_toggle(&p, 2).unwrap().to_string(), "1,3,7");
    assert_eq!(rank_toggle(&p, 3).unwrap().to_string(), "1,4,5");
    assert_eq!(rank_toggle(&p, 4).unwrap().to_string(), "1,2,6");
    for r in [0, 1, 5] {
        assert_eq!(rank_toggle(&p, r).unwrap(), p);
    }
}

#[test]
fn rank_toggles_are_involutions() {
    for p in all_domains() {
        let region = BoxRegion::new(p.slope());
        for r in region.rmin()..=region.rmax() {
            let q = rank_toggle(&p, r).unwrap();
            assert_eq!(rank_toggle(&q, r).unwrap(), p);
        }
    }
}

#[test]
fn rowmotion_orbits_for_2_dyck_paths_of_size_3() {
    let s = slope(1, 2, 3);
    assert_eq!(orbit(rowmotion, &path(s, "145")), ["145", "137", "126"]);
    assert_eq!(
        orbit(rowmotion, &path(s, "147")),
        ["147", "136", "125", "134", "127", "146", "135", "124", "123"]
    );
}

#[test]
fn rowmotion_examples() {
    let s = slope(2, 3, 2);
    assert_eq!(rowmotion(&path(s, "1,3,5,6")).to_string(), "1,2,4,8");
    assert_eq!(
        rowmotion_structural(&path(s, "1,3,5,6")).to_string(),
        "1,2,4,8"
    );
    let s = slope(1, 1, 5);
    assert_eq!(rowmotion(&path(s, "URUUURRRUR")).word(), "UURRURUURR");
    for (a, b, n) in [(1, 1, 4), (2, 3, 2), (1, 2, 3)] {
        let s = slope(a, b, n);
        assert_eq!(rowmotion(&DyckPath::top(s)), DyckPath::lowest(s));
        assert_eq!(rowmotion_structural(&DyckPath::top(s)), DyckPath::lowest(s));
    }
}

#[test]
fn toggle_and_structural_rowmotion_agree() {
    for p in all_domains() {
        assert_eq!(rowmotion(&p), rowmotion_structural(&p), "{p}");
    }
}

#[test]
fn rowmotion_inverse_and_powers() {
    for p in all_domains() {
        assert_eq!(rowmotion_inverse(&rowmotion(&p)), p);
        assert_eq!(rowmotion(&rowmotion_inverse(&p)), p);
        assert_eq!(rowmotion_power(&rowmotion_power(&p, 4), -4), p);
    }
}

#[test]
fn rowvacuation_pairs_for_2_dyck_paths_of_size_3() {
    let s = slope(1, 2, 3);
    let rvac = [
        ("147", "134"),
        ("146", "124"),
        ("145", "137"),
        ("136", "125"),
        ("135", "135"),
        ("127", "123"),
        ("126", "126"),
    ];
    for (x, y) in rvac {
        assert_eq!(rowvacuation(&path(s, x)).compact(), y);
        assert_eq!(rowvacuation(&path(s, y)).compact(), x);
    }
    let drvac = [
        ("147", "123"),
        ("146", "134"),
        ("145", "145"),
        ("137", "126"),
        ("136", "124"),
        ("135", "125"),
        ("127", "127"),
    ];
    for (x, y) in drvac {
        assert_eq!(dual_rowvacuation(&path(s, x)).compact(), y);
        assert_eq!(dual_rowvacuation(&path(s, y)).compact(), x);
    }
}

#[test]
fn rowvacuation_of_the_classical_top_path() {
    for n in 1..=6 {
        let s = slope(1, 1, n);
        let zigzag = "UR".repeat(n);
        assert_eq!(rowvacuation(&DyckPath::top(s)).word(), zigzag);
    }
}

#[test]
fn rowvacuation_relations() {
    for p in all_domains() {
        let region = BoxRegion::new(p.slope());
        let span = region.rmax() - region.rmin() + 2;
        assert_eq!(rowvacuation(&rowvacuation(&p)), p, "{p}");
        assert_eq!(dual_rowvacuation(&dual_rowvacuation(&p)), p, "{p}");
        assert_eq!(
            rowvacuation(&rowmotion(&p)),
            rowmotion_inverse(&rowvacuation(&p)),
            "{p}"
        );
        assert_eq!(
            dual_rowvacuation(&rowmotion(&p)),
            rowmotion_inverse(&dual_rowvacuation(&p)),
            "{p}"
        );
        assert_eq!(
            rowmotion_power(&p, span),
            dual_rowvacuation(&rowvacuation(&p)),
            "{p}"
        );
    }
}

#[test]
fn rowmotion_hat_is_rowvacuation_without_its_first_sweep() {
    for p in all_domains() {
        let region = BoxRegion::new(p.slope());
        let mut q = p.clone();
        for r in (region.rmin()..=region.rmax()).rev() {
            q = rank_toggle(&q, r).unwrap();
        }
        assert_eq!(rowvacuation(&p), rowmotion_hat(&q), "{p}");
    }
}
