//! Reference tables for the twelve 2-Dyck paths of size 3 and the five
//! non-crossing partitions of `[1, 3]`, compared byte for byte with the
//! computed tables.

use std::time::Instant;

use ratdyck_noncrossing::{lk, non_crossing_partitions, NonCrossingChain, NonCrossingPartition};
use ratdyck_paths::{DyckPath, Slope};

use crate::maps::{Ctx, MapName};
use crate::orbit::{cycles, format_cycles};
use crate::report::{Status, VerificationReport};
use crate::VerifyError;

/// Cycle tables of path maps on the `(1, 2)`-paths of size 3.
pub const PATH_TABLES: [(MapName, &str); 10] = [
    (
        MapName::Promotion,
        "(123 127 146 135 124 137 126 145 134) (125 147 136)",
    ),
    (
        MapName::Evacuation,
        "(123 135) (124 134) (125 136) (126) (127 146) (137 145) (147)",
    ),
    (
        MapName::Kre,
        "(123 137 135 134 126 146) (124 127 145) (125 147) (136)",
    ),
    (
        MapName::Su,
        "(123 146) (124 145) (125 147) (126 137) (127) (134 135) (136)",
    ),
    (
        MapName::Lk,
        "(123 137) (124 127) (125 147) (126 134) (135 146) (136) (145)",
    ),
    (
        MapName::Rowmotion,
        "(123 147 136 125 134 127 146 135 124) (126 145 137)",
    ),
    (
        MapName::Rowvacuation,
        "(123 127) (124 146) (125 136) (126) (134 147) (135) (137 145)",
    ),
    (
        MapName::DualRowvacuation,
        "(123 147) (124 136) (125 135) (126 137) (127) (134 146) (145)",
    ),
    (
        MapName::Mat,
        "(123 135 137 147 146 126 125) (124) (127 145 136) (134)",
    ),
    (
        MapName::RskInverse,
        "(123 147 126 134 136 137 127) (124 146) (125 145) (135)",
    ),
];

/// A map on non-crossing partitions of `[1, 3]`.
pub type PartitionMap = fn(&NonCrossingPartition) -> NonCrossingPartition;

/// Cycle tables of partition maps on the non-crossing partitions of
/// `[1, 3]`, elements in compact notation.
pub const PARTITION_TABLES: [(&str, PartitionMap, &str); 3] = [
    (
        "kre",
        NonCrossingPartition::kre,
        "(1/2/3 123) (1/23 13/2 12/3)",
    ),
    (
        "su",
        NonCrossingPartition::su,
        "(1/2/3 123) (1/23 13/2) (12/3)",
    ),
    ("lk", lk, "(1/2/3 123) (1/23) (12/3 13/2)"),
];

/// The correspondence between the `(1, 2)`-paths of size 3 and chains of
/// two non-crossing partitions of `[1, 3]`, coarsest layer first.
pub const CHAIN_TABLE: [(&str, &str); 12] = [
    ("123", "123;13/2"),
    ("124", "13/2;13/2"),
    ("125", "123;123"),
    ("126", "123;12/3"),
    ("127", "12/3;12/3"),
    ("134", "13/2;1/2/3"),
    ("135", "123;1/23"),
    ("136", "123;1/2/3"),
    ("137", "12/3;1/2/3"),
    ("145", "1/23;1/23"),
    ("146", "1/23;1/2/3"),
    ("147", "1/2/3;1/2/3"),
];

fn golden_slope() -> Slope {
    Slope::new(1, 2, 3).expect("valid slope")
}

fn report(
    name: String,
    statement: String,
    domain_size: usize,
    expected: &str,
    got: Result<String, VerifyError>,
    start: Instant,
) -> VerificationReport {
    let got = got.unwrap_or_else(|e| format!("error: {e}"));
    let ok = got == expected;
    VerificationReport {
        identity: name,
        statement,
        a: 1,
        b: 2,
        n: 3,
        domain_size,
        status: if ok { Status::Pass } else { Status::Fail },
        expected: Status::Pass,
        failures: usize::from(!ok),
        counterexamples: if ok {
            Vec::new()
        } else {
            vec![format!("expected {expected}, got {got}")]
        },
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// The computed cycle table of a path map on the `(1, 2)`-paths of size 3.
pub fn path_table(ctx: &Ctx, map: MapName) -> Result<String, VerifyError> {
    let table = cycles(map.name(), ctx.paths(), |p| ctx.apply(map, p))?;
    Ok(format_cycles(&table, DyckPath::compact))
}

/// The computed cycle table of a partition map on `[1, 3]`.
pub fn partition_table(f: PartitionMap) -> Result<String, VerifyError> {
    let mut domain: Vec<String> = non_crossing_partitions(3)
        .iter()
        .map(|p| p.compact())
        .collect();
    domain.sort();
    let table = cycles("partition map", &domain, |text| {
        Ok(f(&NonCrossingPartition::parse(text)?).compact())
    })?;
    Ok(format_cycles(&table, String::clone))
}

/// The computed path-to-chain correspondence, one `path chain` pair per
/// line.
pub fn chain_table(ctx: &Ctx) -> Result<String, VerifyError> {
    let lines = ctx
        .paths()
        .iter()
        .map(|p| {
            Ok(format!(
                "{} {}",
                p.compact(),
                NonCrossingChain::from_path(p)?.compact()
            ))
        })
        .collect::<Result<Vec<_>, VerifyError>>()?;
    Ok(lines.join("\n"))
}

/// Checks every golden table.
pub fn golden_suite() -> Vec<VerificationReport> {
    let ctx = Ctx::new(golden_slope());
    let mut out = Vec::new();
    for (map, expected) in PATH_TABLES {
        let start = Instant::now();
        out.push(report(
            format!("golden-{map}"),
            format!("cycles of {map} on the (1,2)-paths of size 3"),
            ctx.paths().len(),
            expected,
            path_table(&ctx, map),
            start,
        ));
    }
    for (name, f, expected) in PARTITION_TABLES {
        let start = Instant::now();
        out.push(report(
            format!("golden-partition-{name}"),
            format!("cycles of {name} on the non-crossing partitions of [1,3]"),
            5,
            expected,
            partition_table(f),
            start,
        ));
    }
    let start = Instant::now();
    let expected: Vec<String> = CHAIN_TABLE
        .iter()
        .map(|(p, c)| format!("{p} {c}"))
        .collect();
    out.push(report(
        "golden-chains".to_string(),
        "chains of non-crossing partitions of the (1,2)-paths of size 3".to_string(),
        ctx.paths().len(),
        &expected.join("\n"),
        chain_table(&ctx),
        start,
    ));
    out
}
