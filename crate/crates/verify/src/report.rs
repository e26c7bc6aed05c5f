use std::collections::HashMap;
use std::sync::Arc;
use std::time::Instant;

use ratdyck_paths::{DyckPath, Slope};
use rayon::prelude::*;
use serde::Serialize;

use crate::identities::{identities, identity, Check, Identity};
use crate::maps::Ctx;
use crate::VerifyError;

/// Outcome of an identity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Result of checking one identity on every path of one slope.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub statement: String,
    pub a: usize,
    pub b: usize,
    pub n: usize,
    pub domain_size: usize,
    pub status: Status,
    /// The status the registry expects; negative controls expect `Fail`.
    pub expected: Status,
    /// Number of paths violating the identity.
    pub failures: usize,
    /// The first violations in domain order, at most ten.
    pub counterexamples: Vec<String>,
    pub wall_time_ms: f64,
}

impl VerificationReport {
    pub fn as_expected(&self) -> bool {
        self.status == self.expected
    }

    /// One human-readable line.
    pub fn summary(&self) -> String {
        let mark = if self.as_expected() {
            "ok"
        } else {
            "UNEXPECTED"
        };
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
        };
        format!(
            "{mark:>10} {status} {} ({},{}) n={} over {} paths [{:.1} ms]: {}",
            self.identity,
            self.a,
            self.b,
            self.n,
            self.domain_size,
            self.wall_time_ms,
            self.statement
        )
    }
}

const MAX_COUNTEREXAMPLES: usize = 10;

fn violation(id: &Identity, ctx: &Ctx, p: &DyckPath) -> Option<String> {
    let outcome = match &id.check {
        Check::Equal(lhs, rhs) => lhs.eval(ctx, p).and_then(|l| {
            let r = rhs.eval(ctx, p)?;
            Ok((l != r).then(|| format!("lhs = {l}, rhs = {r}")))
        }),
        Check::Custom(f) => f(ctx, p),
    };
    match outcome {
        Ok(None) => None,
        Ok(Some(detail)) => Some(format!("{p}: {detail}")),
        Err(e) => Some(format!("{p}: evaluation error: {e}")),
    }
}

/// Checks `id` on every path of the context's slope.
pub fn verify_in(id: &Identity, ctx: &Ctx) -> Result<VerificationReport, VerifyError> {
    let slope = ctx.slope();
    if !id.applies(slope) {
        return Err(VerifyError::Inapplicable {
            identity: id.name.to_string(),
            slope,
        });
    }
    let start = Instant::now();
    let paths = ctx.paths();
    let violations: Vec<String> = paths
        .par_iter()
        .filter_map(|p| violation(id, ctx, p))
        .collect();
    let status = if violations.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    let expected = if (id.expect_pass)(slope) {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(VerificationReport {
        identity: id.name.to_string(),
        statement: id.statement.clone(),
        a: slope.a(),
        b: slope.b(),
        n: slope.n(),
        domain_size: paths.len(),
        status,
        expected,
        failures: violations.len(),
        counterexamples: violations.into_iter().take(MAX_COUNTEREXAMPLES).collect(),
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Checks the identity called `name` on every path of `slope`.
pub fn verify(name: &str, slope: Slope) -> Result<VerificationReport, VerifyError> {
    let id = identity(name)?;
    verify_in(id, &Ctx::new(slope))
}

/// Selection for [`run_suite`].
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Only run identities with these names; all when empty.
    pub names: Vec<String>,
    /// Cap on the size `n` of every domain.
    pub max_n: Option<usize>,
}

/// Runs the registry over its declared domains, one report per identity,
/// slope and size, in registry order.
pub fn run_suite(options: &SuiteOptions) -> Result<Vec<VerificationReport>, VerifyError> {
    for name in &options.names {
        identity(name)?;
    }
    let selected: Vec<&Identity> = identities()
        .iter()
        .filter(|id| options.names.is_empty() || options.names.iter().any(|n| n == id.name))
        .collect();
    let mut jobs: Vec<(&Identity, Slope)> = Vec::new();
    for id in &selected {
        for (a, b, max_n) in id.domains() {
            let top = options.max_n.map_or(max_n, |cap| cap.min(max_n));
            for n in 1..=top {
                jobs.push((id, Slope::new(a, b, n)?));
            }
        }
    }
    let mut contexts: HashMap<Slope, Arc<Ctx>> = HashMap::new();
    for &(_, s) in &jobs {
        contexts.entry(s).or_insert_with(|| Arc::new(Ctx::new(s)));
    }
    jobs.par_iter()
        .map(|&(id, s)| verify_in(id, &contexts[&s]))
        .collect()
}
