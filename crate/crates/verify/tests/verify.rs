use std::process::Command;

use ratdyck_paths::{DyckPath, Slope};
use ratdyck_verify::convert::{convert, read_input, Target};
use ratdyck_verify::orbit::{format_cycles, orbit_table};
use ratdyck_verify::{identities, identity, verify, Ctx, Expr, MapName, Status, VerifyError};

fn slope(a: usize, b: usize, n: usize) -> Slope {
    Slope::new(a, b, n).unwrap()
}

fn ratdyck(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ratdyck"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout)
            .expect("utf-8")
            .trim_end()
            .to_string(),
    )
}

#[test]
fn cli_apply_examples() {
    let ev = ratdyck(&[
        "apply",
        "--map",
        "evacuation",
        "--a",
        "2",
        "--b",
        "3",
        "--n",
        "2",
        "--path",
        "1,2,5,7",
    ]);
    assert_eq!(ev, (0, "1,2,3,8".to_string()));
    let kre = ratdyck(&[
        "apply", "--map", "kre", "--a", "1", "--b", "1", "--n", "3", "--ncp", "1.2/3",
    ]);
    assert_eq!(kre, (0, "1/2.3".to_string()));
    // Promotion sends 146 to 135 and 127 to 146 on the (1,2)-paths of size 3.
    let forward = ratdyck(&[
        "apply",
        "--map",
        "promotion",
        "--a",
        "1",
        "--b",
        "2",
        "--n",
        "3",
        "--path",
        "1,4,6",
    ]);
    assert_eq!(forward, (0, "1,3,5".to_string()));
    let back = ratdyck(&[
        "apply",
        "--map",
        "promotion",
        "--power",
        "-1",
        "--a",
        "1",
        "--b",
        "2",
        "--n",
        "3",
        "--path",
        "1,4,6",
    ]);
    assert_eq!(back, (0, "1,2,7".to_string()));
}

#[test]
fn cli_exit_codes() {
    let (code, _) = ratdyck(&[
        "apply",
        "--map",
        "evacuation",
        "--a",
        "2",
        "--b",
        "3",
        "--n",
        "2",
        "--path",
        "1,9",
    ]);
    assert_eq!(code, 2);
    let (code, _) = ratdyck(&[
        "apply", "--map", "nope", "--a", "1", "--b", "1", "--n", "2", "--path", "1,2",
    ]);
    assert_eq!(code, 2);
    let (code, _) = ratdyck(&[
        "verify",
        "no-such-identity",
        "--a",
        "1",
        "--b",
        "1",
        "--n",
        "2",
    ]);
    assert_eq!(code, 2);
    let (code, out) = ratdyck(&["verify", "pm-rot", "--a", "2", "--b", "3", "--n", "1"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("fail pm-rot"));
    let (code, _) = ratdyck(&["golden"]);
    assert_eq!(code, 0);
}

#[test]
fn cli_count_enum_orbit_and_json() {
    assert_eq!(
        ratdyck(&["count", "--a", "2", "--b", "3", "--n", "2"]),
        (0, "23".to_string())
    );
    let (_, listing) = ratdyck(&["enum", "--a", "1", "--b", "1", "--n", "3"]);
    assert_eq!(
        listing.lines().collect::<Vec<_>>(),
        ["1,2,3", "1,2,4", "1,2,5", "1,3,4", "1,3,5"]
    );
    let (_, orbits) = ratdyck(&["orbit", "--map", "mat", "--a", "1", "--b", "2", "--n", "3"]);
    assert_eq!(orbits.lines().count(), 4);
    let (code, json) = ratdyck(&[
        "verify", "ev-star", "--a", "1", "--b", "1", "--n", "4", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value[0]["status"], "pass");
    assert_eq!(value[0]["domain_size"], 14);
    assert_eq!(value[0]["counterexamples"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_examples() {
    let r = verify("mat-rowmotion", slope(2, 3, 2)).unwrap();
    assert_eq!((r.status, r.domain_size), (Status::Pass, 23));
    let r = verify("ev-star", slope(1, 1, 4)).unwrap();
    assert_eq!(r.status, Status::Pass);
    let r = verify("pm-rot", slope(2, 3, 1)).unwrap();
    assert_eq!(
        (r.status, r.expected, r.failures),
        (Status::Fail, Status::Fail, 1)
    );
    assert!(r.counterexamples[0].starts_with("1,2:"));
    assert!(r.as_expected());
}

#[test]
fn verify_errors() {
    assert!(matches!(
        verify("nope", slope(1, 1, 2)),
        Err(VerifyError::UnknownIdentity(_))
    ));
    assert!(matches!(
        verify("lift-promotion", slope(2, 3, 2)),
        Err(VerifyError::Inapplicable { .. })
    ));
    assert!(matches!(
        verify("ev-star", slope(1, 2, 2)),
        Err(VerifyError::Inapplicable { .. })
    ));
}

#[test]
fn registry_names_are_unique_and_domains_applicable() {
    let mut names: Vec<&str> = identities().iter().map(|i| i.name).collect();
    names.sort_unstable();
    let total = names.len();
    names.dedup();
    assert_eq!(names.len(), total);
    for id in identities() {
        assert!(!id.domains().is_empty(), "{}", id.name);
        assert_eq!(identity(id.name).unwrap().name, id.name);
    }
}

#[test]
fn orbit_tables() {
    let ctx = Ctx::new(slope(1, 2, 3));
    let table = |m| format_cycles(&orbit_table(&ctx, m).unwrap(), DyckPath::compact);
    assert_eq!(
        table(MapName::Promotion),
        "(123 127 146 135 124 137 126 145 134) (125 147 136)"
    );
    assert_eq!(
        table(MapName::Rowmotion),
        "(123 147 136 125 134 127 146 135 124) (126 145 137)"
    );
    assert_eq!(
        table(MapName::Mat),
        "(123 135 137 147 146 126 125) (124) (127 145 136) (134)"
    );
}

#[test]
fn non_bijective_maps_are_rejected_with_a_witness() {
    let err = ratdyck_verify::orbit::cycles("halve", &[1, 2, 3, 4], |&x: &i32| Ok((x + 1) / 2))
        .unwrap_err();
    assert!(matches!(err, VerifyError::NotBijective { .. }));
}

#[test]
fn expressions_parse_and_evaluate() {
    let ctx = Ctx::new(slope(2, 3, 2));
    let lhs: Expr = "mat∘rowmotion".parse().unwrap();
    let rhs: Expr = "promotion^-1.mat".parse().unwrap();
    assert_eq!(rhs.to_string(), "promotion^-1 ∘ mat");
    for p in ctx.paths() {
        assert_eq!(lhs.eval(&ctx, p).unwrap(), rhs.eval(&ctx, p).unwrap());
    }
    let id: Expr = "id".parse().unwrap();
    assert!(id.terms.is_empty());
    assert!("frobnicate".parse::<Expr>().is_err());
    assert_eq!("ev".parse::<MapName>().unwrap(), MapName::Evacuation);
}

#[test]
fn inverses_through_tables() {
    let ctx = Ctx::new(slope(1, 1, 4));
    for p in ctx.paths() {
        let q = ctx.apply(MapName::Dyck1, p).unwrap();
        assert_eq!(&ctx.apply_power(MapName::Dyck1, -1, &q).unwrap(), p);
        let lifted = ctx.apply(MapName::Lift, p).unwrap();
        assert_eq!(&ctx.apply_inverse(MapName::Lift, &lifted).unwrap(), p);
    }
}

#[test]
fn conversions() {
    let s = slope(2, 3, 2);
    let (p, _) = read_input(s, Some("1,2,5,7"), None, None).unwrap();
    assert_eq!(
        convert(&p, Target::Matching).unwrap(),
        "{1,4,10},{2,3},{5,6,9},{7,8}"
    );
    assert_eq!(convert(&p, Target::Word).unwrap(), "UURRURURRR");
    assert!(convert(&p, Target::Ncp).is_err());

    let s = slope(1, 3, 4);
    let (p, _) = read_input(s, None, Some("1.2.3.4;1.4/2.3;1.4/2/3"), None).unwrap();
    assert_eq!(p.to_string(), "1,2,4,7");
    assert_eq!(convert(&p, Target::Ncp).unwrap(), "1.2.3.4;1.4/2.3;1.4/2/3");

    let s = slope(1, 1, 5);
    let (p, _) = read_input(s, None, None, Some("13425")).unwrap();
    assert_eq!(p.word(), "URUURURRUR");
    assert_eq!(convert(&p, Target::Perm).unwrap(), "13425");

    let s = slope(1, 2, 3);
    let (p, _) = read_input(s, Some("147"), None, None).unwrap();
    assert_eq!(convert(&p, Target::Kappa).unwrap(), "1,2,0");
    assert_eq!(convert(&p, Target::KSequence).unwrap(), "3,5,~3");
    assert!(read_input(s, Some("147"), Some("1/2/3"), None).is_err());
    assert!(read_input(s, None, Some("1/2/3"), None).is_err());
}
