use std::collections::HashSet;

use ratdyck_noncrossing::*;
use ratdyck_paths::{enumerate_paths, DyckPath, Slope};
use ratdyck_promotion::{dual_promotion, evacuation, promotion, promotion_power};

fn ncp(text: &str) -> NonCrossingPartition {
    NonCrossingPartition::parse(text).unwrap()
}

fn chain(text: &str) -> NonCrossingChain {
    NonCrossingChain::parse(text).unwrap()
}

fn fuss(k: usize, n: usize) -> Slope {
    Slope::new(1, k, n).unwrap()
}

/// `(k, n)` pairs for the exhaustive checks.
const SIZES: [(usize, usize); 3] = [(1, 5), (2, 4), (3, 3)];

fn all_chains() -> impl Iterator<Item = NonCrossingChain> {
    SIZES
        .iter()
        .flat_map(|&(k, n)| (1..=n).flat_map(move |m| non_crossing_chains(m, k)))
}

#[test]
fn literals_and_validation() {
    let p = ncp("1.3/2/4.5.7/6");
    assert_eq!(p.to_string(), "1.3/2/4.5.7/6");
    assert_eq!(p.compact(), "13/2/457/6");
    assert_eq!(ncp("13/2/457/6"), p);
    assert_eq!(
        NonCrossingPartition::parse("1.3/2.4"),
        Err(NcError::Crossing)
    );
    assert!(matches!(
        NonCrossingPartition::parse("1.2/2"),
        Err(NcError::NotAPartition(_))
    ));
    assert!(matches!(
        NonCrossingPartition::parse("1.x"),
        Err(NcError::Parse(_))
    ));
    assert_eq!(
        NonCrossingChain::parse("1.2/3;1.2.3"),
        Err(NcError::NotRefining { layer: 2 })
    );
    assert!(matches!(
        NonCrossingChain::parse("1.2.3;1/2"),
        Err(NcError::LayerSize { .. })
    ));
    let c = chain("1.2.3.4;1.4/2.3;1.4/2/3");
    assert_eq!(c.to_string(), "1.2.3.4;1.4/2.3;1.4/2/3");
    assert_eq!(c.compact(), "1234;14/23;14/2/3");
    assert_eq!(c.weight(1, 4), 3);
    assert_eq!(c.weight(2, 3), 2);
    assert_eq!(c.weight(1, 2), 1);
}

#[test]
fn path_examples() {
    let p = NonCrossingChain::single(ncp("13/2/457/6")).to_path();
    assert_eq!(p.word(), "UUURRRUURUURRR");
    assert_eq!(
        NonCrossingChain::from_path(&p).unwrap().layers()[0],
        ncp("13/2/457/6")
    );

    let c = chain("1234;234/1;4/23/1");
    assert_eq!(c.to_path().word(), "URRURURRRRURRRRR");
    let c = chain("1234;14/23;14/2/3");
    assert_eq!(c.to_path().to_string(), "1,2,4,7");
    assert_eq!(NonCrossingChain::from_path(&c.to_path()).unwrap(), c);

    let not_fuss = DyckPath::top(Slope::new(2, 3, 1).unwrap());
    assert!(matches!(
        NonCrossingChain::from_path(&not_fuss),
        Err(NcError::NotFuss(_))
    ));
}

#[test]
fn two_chains_of_size_three() {
    let table = [
        ("147", "1/2/3;1/2/3"),
        ("146", "1/23;1/2/3"),
        ("145", "1/23;1/23"),
        ("137", "12/3;1/2/3"),
        ("136", "123;1/2/3"),
        ("135", "123;1/23"),
        ("134", "13/2;1/2/3"),
        ("127", "12/3;12/3"),
        ("126", "123;12/3"),
        ("125", "123;123"),
        ("124", "13/2;13/2"),
        ("123", "123;13/2"),
    ];
    let s = fuss(2, 3);
    for (path, c) in table {
        let p = DyckPath::parse(s, path).unwrap();
        assert_eq!(chain(c).to_path(), p);
        assert_eq!(NonCrossingChain::from_path(&p).unwrap().compact(), c);
    }
}

#[test]
fn path_encoding_is_a_bijection() {
    for &(k, n) in &SIZES {
        for m in 1..=n {
            let chains = non_crossing_chains(m, k);
            let paths: HashSet<DyckPath> = chains.iter().map(NonCrossingChain::to_path).collect();
            assert_eq!(paths.len(), chains.len());
            assert_eq!(paths.len(), enumerate_paths(fuss(k, m)).len());
            for c in &chains {
                assert_eq!(&NonCrossingChain::from_path(&c.to_path()).unwrap(), c);
            }
        }
    }
}

#[test]
fn partition_map_examples() {
    let p = ncp("13/2/457/6");
    assert_eq!(p.rot(), ncp("1/27/346/5"));
    assert_eq!(p.reflect(), ncp("134/2/57/6"));
    assert_eq!(p.kre(), ncp("12/37/4/56"));
    assert_eq!(p.su(), ncp("15/23/4/67"));
    assert_eq!(lk(&p), ncp("12/3/47/56"));
    assert_eq!(
        NonCrossingPartition::full(5).rot(),
        NonCrossingPartition::full(5)
    );
    assert_eq!(ncp("12/3").kre(), ncp("1/23"));
    assert_eq!(
        chain("1234;14/23;14/2/3").su(),
        chain("1/234;1/24/3;1/2/3/4")
    );
}

#[test]
fn rank() {
    assert_eq!(NonCrossingPartition::full(3).rank(), 2);
    assert_eq!(NonCrossingPartition::discrete(3).rank(), 0);
    for n in 1..=6 {
        for p in non_crossing_partitions(n) {
            assert_eq!(p.rank() + p.kre().rank(), n - 1, "{p}");
            assert_eq!(p.rank() + p.su().rank(), n - 1, "{p}");
            assert_eq!(p.rank() + lk(&p).rank(), n - 1, "{p}");
        }
    }
}

#[test]
fn size_three_orbits() {
    let kre: Vec<String> = ["1/2/3", "123", "12/3", "1/23", "13/2"]
        .iter()
        .map(|t| ncp(t).kre().compact())
        .collect();
    assert_eq!(kre, ["123", "1/2/3", "1/23", "13/2", "12/3"]);
    let su: Vec<String> = ["1/2/3", "12/3", "1/23"]
        .iter()
        .map(|t| ncp(t).su().compact())
        .collect();
    assert_eq!(su, ["123", "12/3", "13/2"]);
    let lks: Vec<String> = ["1/2/3", "12/3", "1/23"]
        .iter()
        .map(|t| lk(&ncp(t)).compact())
        .collect();
    assert_eq!(lks, ["123", "13/2", "1/23"]);
}

#[test]
fn partition_relations() {
    for n in 1..=6 {
        for p in non_crossing_partitions(n) {
            let mut r = p.clone();
            for _ in 0..n {
                r = r.rot();
            }
            assert_eq!(r, p);
            assert_eq!(p.rot().rot_inverse(), p);
            assert_eq!(p.kre().kre(), p.rot(), "{p}");
            assert_eq!(p.reflect().reflect(), p);
            assert_eq!(p.su().su(), p, "{p}");
            assert_eq!(lk(&lk(&p)), p, "{p}");
            assert_eq!(p.rot().su(), p.su().rot_inverse(), "{p}");
            assert_eq!(lk(&p.rot()), lk(&p).rot_inverse(), "{p}");
            assert_eq!(lk(&p.su()), p.rot(), "{p}");
            assert_eq!(p.kre(), p.su().reflect(), "{p}");
            assert_eq!(p.kre(), lk(&p.rot()).reflect(), "{p}");
            let kre_inv = p.rot_inverse().kre();
            assert_eq!(kre_inv.kre(), p, "{p}");
            assert_eq!(p.su().kre(), kre_inv.su(), "{p}");
            assert_eq!(lk(&p).kre(), lk(&kre_inv), "{p}");
        }
    }
}

#[test]
fn kreweras_reverses_refinement() {
    for n in 1..=5 {
        let all = non_crossing_partitions(n);
        for fine in &all {
            for coarse in all.iter().filter(|c| fine.refines(c)) {
                assert!(coarse.kre().refines(&fine.kre()), "{fine} {coarse}");
                assert!(coarse.su().refines(&fine.su()), "{fine} {coarse}");
                assert!(lk(coarse).refines(&lk(fine)), "{fine} {coarse}");
            }
        }
    }
}

#[test]
fn chain_maps_are_chains() {
    for c in all_chains() {
        for image in [c.rot(), c.reflect(), c.kre(), c.su(), c.lk()] {
            assert_eq!(
                NonCrossingChain::new(image.layers().to_vec()).unwrap(),
                image
            );
        }
    }
}

#[test]
fn maps_transported_to_paths() {
    for c in all_chains() {
        let p = c.to_path();
        let k = c.k() as i64;
        let path_of = |d: NonCrossingChain| d.to_path();
        assert_eq!(path_of(c.rot()), promotion_power(&p, k + 1), "{c}");
        assert_eq!(path_of(c.su()), evacuation(&promotion(&p)), "{c}");
        assert_eq!(path_of(c.lk()), evacuation(&promotion_power(&p, -k)), "{c}");
        assert_eq!(path_of(lift(&c).unwrap()), promotion(&p), "{c}");
        if k == 1 {
            assert_eq!(path_of(c.kre()), promotion(&p), "{c}");
        }
    }
}

#[test]
fn lift_example() {
    let c = chain("1234;3/24/1");
    let lifted = lift(&c).unwrap();
    assert_eq!(lifted, chain("23/14;23/14"));
    assert_eq!(c.to_path().to_string(), "1,3,5,6");
    assert_eq!(lifted.to_path().to_string(), "1,2,4,5");
    assert_eq!(dual_promotion(&lifted.to_path()), c.to_path());
}

#[test]
fn lift_of_the_discrete_chain() {
    for n in 1..=5 {
        let c = NonCrossingChain::new(vec![NonCrossingPartition::discrete(n); 3]).unwrap();
        let lifted = lift(&c).unwrap();
        assert_eq!(lifted.layers()[0], NonCrossingPartition::full(n));
        assert_eq!(lifted.layers()[1], NonCrossingPartition::discrete(n));
    }
}
