use std::sync::OnceLock;

use ratdyck_matchings::pm;
use ratdyck_noncrossing::{lk, NonCrossingChain};
use ratdyck_paths::{DyckPath, Slope};
use ratdyck_rowmotion::BoxRegion;
use ratdyck_tilings::{kappa, kappa_by_transpositions, Tiling};

use crate::maps::{Ctx, Expr, MapName, Power, Scope};
use crate::VerifyError;

use MapName::*;

/// The slopes and largest sizes every applicable identity is checked on.
pub const DEFAULT_DOMAINS: [(usize, usize, usize); 6] = [
    (1, 1, 6),
    (1, 2, 4),
    (1, 3, 3),
    (2, 3, 2),
    (3, 2, 2),
    (2, 5, 2),
];

/// A per-path predicate. `Ok(None)` means the path satisfies it and
/// `Ok(Some(detail))` describes the violation.
pub type Predicate = fn(&Ctx, &DyckPath) -> Result<Option<String>, VerifyError>;

/// How an identity is checked on a single path.
#[derive(Clone)]
pub enum Check {
    Equal(Expr, Expr),
    Custom(Predicate),
}

/// A registered identity.
#[derive(Clone)]
pub struct Identity {
    pub name: &'static str,
    pub statement: String,
    pub scope: Scope,
    /// Whether the identity is expected to hold on a slope. Negative
    /// controls return `false` where the identity is known to fail.
    pub expect_pass: fn(Slope) -> bool,
    pub check: Check,
    /// Domains checked in addition to [`DEFAULT_DOMAINS`], as
    /// `(a, b, largest n)`.
    pub extra_domains: &'static [(usize, usize, usize)],
}

impl Identity {
    pub fn applies(&self, s: Slope) -> bool {
        self.scope.contains(s)
            && match &self.check {
                Check::Equal(l, r) => l.scope_ok(s) && r.scope_ok(s),
                Check::Custom(_) => true,
            }
    }

    /// The slopes and largest sizes the identity is checked on.
    pub fn domains(&self) -> Vec<(usize, usize, usize)> {
        let mut out: Vec<(usize, usize, usize)> = Vec::new();
        for &(a, b, n) in DEFAULT_DOMAINS.iter().chain(self.extra_domains) {
            match out.iter_mut().find(|d| (d.0, d.1) == (a, b)) {
                Some(d) => d.2 = d.2.max(n),
                None => out.push((a, b, n)),
            }
        }
        out.retain(|&(a, b, n)| self.applies(Slope::new(a, b, n).expect("valid domain")));
        out
    }
}

fn always(_: Slope) -> bool {
    true
}

fn total(s: Slope) -> i64 {
    s.len() as i64
}

fn k(s: Slope) -> i64 {
    s.b() as i64
}

fn size(s: Slope) -> i64 {
    s.n() as i64
}

/// Number of rank sweeps after which rowmotion equals the product of the
/// two rowvacuations.
fn span(s: Slope) -> i64 {
    let region = BoxRegion::new(s);
    region.rmax() - region.rmin() + 2
}

fn neg_k(s: Slope) -> i64 {
    -k(s)
}

fn neg_k_minus_one(s: Slope) -> i64 {
    1 - k(s)
}

fn neg_two_k(s: Slope) -> i64 {
    -2 * k(s)
}

fn neg_k_plus_one(s: Slope) -> i64 {
    -(k(s) + 1)
}

fn k_plus_one(s: Slope) -> i64 {
    k(s) + 1
}

fn neg_span(s: Slope) -> i64 {
    -span(s)
}

fn neg_size_minus_one(s: Slope) -> i64 {
    1 - size(s)
}

/// Builds an expression from `(map, power)` pairs written left to right.
fn ex(terms: &[(MapName, Power)]) -> Expr {
    terms
        .iter()
        .fold(Expr::identity(), |e, &(m, p)| e.then_after(m, p))
}

const ONE: Power = Power::Fixed(1);
const INV: Power = Power::Fixed(-1);

fn m(map: MapName) -> Expr {
    Expr::map(map)
}

fn id() -> Expr {
    Expr::identity()
}

fn equal(
    name: &'static str,
    scope: Scope,
    lhs: Expr,
    rhs: Expr,
    extra_domains: &'static [(usize, usize, usize)],
) -> Identity {
    Identity {
        name,
        statement: format!("{lhs} = {rhs}"),
        scope,
        expect_pass: always,
        check: Check::Equal(lhs, rhs),
        extra_domains,
    }
}

fn custom(
    name: &'static str,
    statement: &str,
    scope: Scope,
    check: Predicate,
    extra_domains: &'static [(usize, usize, usize)],
) -> Identity {
    Identity {
        name,
        statement: statement.to_string(),
        scope,
        expect_pass: always,
        check: Check::Custom(check),
        extra_domains,
    }
}

const LIFT_DOMAINS: &[(usize, usize, usize)] = &[(1, 3, 4)];
const RSK_DOMAINS: &[(usize, usize, usize)] = &[(1, 2, 5), (1, 3, 5)];
const FUSS_N4: &[(usize, usize, usize)] = &[(1, 3, 4)];

fn pm_rotates(_: &Ctx, p: &DyckPath) -> Result<Option<String>, VerifyError> {
    let lhs = pm(&ratdyck_promotion::promotion(p));
    let rhs = pm(p).rotate();
    Ok((lhs != rhs).then(|| format!("pm(promotion) = {lhs}, rotate(pm) = {rhs}")))
}

fn pm_bars(_: &Ctx, p: &DyckPath) -> Result<Option<String>, VerifyError> {
    let lhs = pm(&ratdyck_promotion::evacuation(p));
    let rhs = pm(p).bar();
    Ok((lhs != rhs).then(|| format!("pm(evacuation) = {lhs}, bar(pm) = {rhs}")))
}

fn chain_round_trip(_: &Ctx, p: &DyckPath) -> Result<Option<String>, VerifyError> {
    let c = NonCrossingChain::from_path(p)?;
    if NonCrossingChain::new(c.layers().to_vec())? != c {
        return Ok(Some(format!("{c} is not a valid chain")));
    }
    let back = c.to_path();
    Ok((&back != p).then(|| format!("chain {c} encodes {back}")))
}

fn ranks_complement(_: &Ctx, p: &DyckPath) -> Result<Option<String>, VerifyError> {
    let c = NonCrossingChain::from_path(p)?;
    let pi = &c.layers()[0];
    let n = pi.n();
    for (name, image) in [("kre", pi.kre()), ("su", pi.su()), ("lk", lk(pi))] {
        if pi.rank() + image.rank() != n - 1 {
            return Ok(Some(format!(
                "rank {pi} + rank {name}({pi}) = rank {image} != {}",
                n - 1
            )));
        }
    }
    Ok(None)
}

fn maps_reverse_refinement(ctx: &Ctx, p: &DyckPath) -> Result<Option<String>, VerifyError> {
    let fine = NonCrossingChain::from_path(p)?.layers()[0].clone();
    for q in ctx.paths() {
        let coarse = NonCrossingChain::from_path(q)?.layers()[0].clone();
        if !fine.refines(&coarse) {
            continue;
        }
        for (name, f, c) in [
            ("kre", fine.kre(), coarse.kre()),
            ("su", fine.su(), coarse.su()),
            ("lk", lk(&fine), lk(&coarse)),
        ] {
            if !c.refines(&f) {
                return Ok(Some(format!(
                    "{fine} refines {coarse} but {name} keeps the order"
                )));
            }
        }
    }
    Ok(None)
}

fn kappa_oracle(_: &Ctx, p: &DyckPath) -> Result<Option<String>, VerifyError> {
    let hermite = kappa(p)?;
    let transpositions = kappa_by_transpositions(p)?;
    Ok((hermite != transpositions)
        .then(|| format!("hermite history {hermite:?}, transpositions {transpositions:?}")))
}

fn tiling_structure(_: &Ctx, p: &DyckPath) -> Result<Option<String>, VerifyError> {
    let t = Tiling::maximal(p)?;
    Ok(if !t.is_partition() {
        Some("tiles do not partition the region".into())
    } else if !t.is_cover_inclusive() {
        Some("tiling is not cover-inclusive".into())
    } else if !t.is_maximal() {
        Some("tiling is not maximal".into())
    } else {
        None
    })
}

fn build() -> Vec<Identity> {
    use Scope::*;
    let sym = Power::Symbolic;
    vec![
        // Promotion and evacuation.
        equal(
            "promotion-order",
            AnySlope,
            ex(&[(Promotion, sym("(a+b)n", total))]),
            ex(&[(DualEvacuation, ONE), (Evacuation, ONE)]),
            &[],
        ),
        equal(
            "evacuation-promotion",
            AnySlope,
            ex(&[(Evacuation, ONE), (Promotion, ONE)]),
            ex(&[(Promotion, INV), (Evacuation, ONE)]),
            &[],
        ),
        equal(
            "dual-evacuation-promotion",
            AnySlope,
            ex(&[(DualEvacuation, ONE), (Promotion, ONE)]),
            ex(&[(Promotion, INV), (DualEvacuation, ONE)]),
            &[],
        ),
        equal(
            "evacuation-involution",
            AnySlope,
            ex(&[(Evacuation, Power::Fixed(2))]),
            id(),
            &[],
        ),
        equal(
            "dual-evacuation-involution",
            AnySlope,
            ex(&[(DualEvacuation, Power::Fixed(2))]),
            id(),
            &[],
        ),
        equal("ev-star", Classical, m(Evacuation), m(Star), &[]),
        equal("dual-ev-star", Classical, m(DualEvacuation), m(Star), &[]),
        Identity {
            name: "pm-rot",
            statement: "pm ∘ promotion = rotate ∘ pm (fails for a ≥ 2)".into(),
            scope: AnySlope,
            expect_pass: |s| s.a() == 1,
            check: Check::Custom(pm_rotates),
            extra_domains: &[(2, 1, 2), (3, 1, 2), (3, 4, 1)],
        },
        custom(
            "pm-evacuation",
            "pm ∘ evacuation = bar ∘ pm",
            AnySlope,
            pm_bars,
            &[],
        ),
        equal(
            "evacuation-fast",
            AnySlope,
            m(Evacuation),
            m(EvacuationFast),
            &[],
        ),
        equal(
            "dual-evacuation-fast",
            AnySlope,
            m(DualEvacuation),
            m(DualEvacuationFast),
            &[],
        ),
        // Rothe diagram maps on classical paths.
        equal(
            "dyck2-involution",
            Classical,
            ex(&[(Dyck2, Power::Fixed(2))]),
            id(),
            &[],
        ),
        equal(
            "dyck3-involution",
            Classical,
            ex(&[(Dyck3, Power::Fixed(2))]),
            id(),
            &[],
        ),
        equal("dyck1-rowmotion", Classical, m(Dyck1), m(Rowmotion), &[]),
        equal(
            "dyck2-rowvacuation",
            Classical,
            m(Dyck2),
            m(Rowvacuation),
            &[],
        ),
        equal(
            "dyck2-dual-rowvacuation",
            Classical,
            m(DualRowvacuation),
            ex(&[(Evacuation, ONE), (Dyck2, ONE)]),
            &[],
        ),
        equal(
            "rowmotion-power-evacuation",
            Classical,
            ex(&[(Rowmotion, sym("n", size))]),
            m(Evacuation),
            &[],
        ),
        // Rowmotion and rowvacuation.
        equal(
            "rowvacuation-involution",
            AnySlope,
            ex(&[(Rowvacuation, Power::Fixed(2))]),
            id(),
            &[],
        ),
        equal(
            "dual-rowvacuation-involution",
            AnySlope,
            ex(&[(DualRowvacuation, Power::Fixed(2))]),
            id(),
            &[],
        ),
        equal(
            "rowvacuation-rowmotion",
            AnySlope,
            ex(&[(Rowvacuation, ONE), (Rowmotion, ONE)]),
            ex(&[(Rowmotion, INV), (Rowvacuation, ONE)]),
            &[],
        ),
        equal(
            "dual-rowvacuation-rowmotion",
            AnySlope,
            ex(&[(DualRowvacuation, ONE), (Rowmotion, ONE)]),
            ex(&[(Rowmotion, INV), (DualRowvacuation, ONE)]),
            &[],
        ),
        equal(
            "rowmotion-order",
            AnySlope,
            ex(&[(Rowmotion, sym("span", span))]),
            ex(&[(DualRowvacuation, ONE), (Rowvacuation, ONE)]),
            &[],
        ),
        equal(
            "rowmotion-structural",
            AnySlope,
            m(Rowmotion),
            m(RowmotionStructural),
            &[],
        ),
        equal(
            "rowvacuation-hat",
            AnySlope,
            m(Rowvacuation),
            ex(&[(RowmotionHat, ONE), (Rowmotion, ONE)]),
            &[],
        ),
        // RSK on classical paths.
        equal("rsk-crossings", Classical, m(Rsk321), m(PmCross), &[]),
        equal(
            "rsk-tiling-inverse",
            Classical,
            ex(&[(RskInverse, ONE), (Rsk321, ONE)]),
            id(),
            &[],
        ),
        equal(
            "rsk-mat",
            Classical,
            m(Rsk321),
            ex(&[(Promotion, ONE), (Mat, ONE), (Evacuation, ONE)]),
            &[],
        ),
        equal(
            "mat-crossings",
            Classical,
            m(Mat),
            ex(&[(Promotion, INV), (PmCross, ONE), (Evacuation, ONE)]),
            &[],
        ),
        equal(
            "rsk-rowmotion",
            Classical,
            ex(&[(Rsk321, ONE), (Rowmotion, ONE)]),
            ex(&[(DualPromotion, ONE), (Rsk321, ONE)]),
            &[],
        ),
        equal(
            "rsk-rowmotion-hat",
            Classical,
            ex(&[(Rsk321, ONE), (RowmotionHat, ONE)]),
            ex(&[(Evacuation, ONE), (Rsk321, ONE)]),
            &[],
        ),
        equal(
            "rsk-dyck3",
            Classical,
            ex(&[(Rsk321, ONE), (Dyck3, ONE)]),
            ex(&[(Evacuation, ONE), (Rsk321, ONE)]),
            &[],
        ),
        equal(
            "rsk-dyck2",
            Classical,
            ex(&[(Rsk321, ONE), (Dyck2, ONE)]),
            ex(&[(Evacuation, ONE), (DualPromotion, ONE), (Rsk321, ONE)]),
            &[],
        ),
        equal(
            "mat-dyck2",
            Classical,
            ex(&[(Mat, ONE), (Dyck2, ONE), (MatInverse, ONE)]),
            ex(&[(Evacuation, ONE), (Promotion, ONE)]),
            &[],
        ),
        equal(
            "dyck1-kreweras",
            Classical,
            m(Dyck1),
            ex(&[(RskInverse, ONE), (Kre, INV), (Rsk, ONE)]),
            &[],
        ),
        equal(
            "dyck3-simion-ullman",
            Classical,
            ex(&[(Rowmotion, ONE), (Dyck3, ONE)]),
            ex(&[(RskInverse, ONE), (Su, ONE), (Rsk, ONE)]),
            &[],
        ),
        // Non-crossing partition maps, transported to paths.
        equal(
            "kreweras-square",
            Fuss,
            ex(&[(Kre, Power::Fixed(2))]),
            m(Rot),
            &[],
        ),
        equal("rot-order", Fuss, ex(&[(Rot, sym("n", size))]), id(), &[]),
        equal(
            "ref-involution",
            Fuss,
            ex(&[(Ref, Power::Fixed(2))]),
            id(),
            &[],
        ),
        equal(
            "su-involution",
            Fuss,
            ex(&[(Su, Power::Fixed(2))]),
            id(),
            &[],
        ),
        equal(
            "lk-involution",
            Fuss,
            ex(&[(Lk, Power::Fixed(2))]),
            id(),
            &[],
        ),
        equal(
            "su-rot",
            Fuss,
            ex(&[(Su, ONE), (Rot, ONE)]),
            ex(&[(Rot, INV), (Su, ONE)]),
            &[],
        ),
        equal(
            "lk-rot",
            Fuss,
            ex(&[(Lk, ONE), (Rot, ONE)]),
            ex(&[(Rot, INV), (Lk, ONE)]),
            &[],
        ),
        equal("lk-su", Fuss, ex(&[(Lk, ONE), (Su, ONE)]), m(Rot), &[]),
        equal(
            "kre-ref-su",
            Fuss,
            m(Kre),
            ex(&[(Ref, ONE), (Su, ONE)]),
            &[],
        ),
        equal(
            "kre-ref-lk",
            Fuss,
            m(Kre),
            ex(&[(Ref, ONE), (Lk, ONE), (Rot, ONE)]),
            &[],
        ),
        equal(
            "kre-su",
            Fuss,
            ex(&[(Kre, ONE), (Su, ONE)]),
            ex(&[(Su, ONE), (Kre, INV)]),
            &[],
        ),
        equal(
            "kre-lk",
            Fuss,
            ex(&[(Kre, ONE), (Lk, ONE)]),
            ex(&[(Lk, ONE), (Kre, INV)]),
            &[],
        ),
        custom(
            "partition-ranks",
            "rank(π) + rank(X(π)) = n − 1 for X = kre, su, lk",
            Classical,
            ranks_complement,
            &[],
        ),
        custom(
            "partition-order-reversing",
            "kre, su and lk reverse refinement",
            Classical,
            maps_reverse_refinement,
            &[],
        ),
        equal("kreweras-promotion", Classical, m(Kre), m(Promotion), &[]),
        custom(
            "chain-bijection",
            "chains and (1,k)-paths correspond bijectively",
            Fuss,
            chain_round_trip,
            &[],
        ),
        equal(
            "rot-promotion",
            Fuss,
            m(Rot),
            ex(&[(Promotion, sym("k+1", k_plus_one))]),
            &[],
        ),
        equal(
            "su-promotion",
            Fuss,
            m(Su),
            ex(&[(Evacuation, ONE), (Promotion, ONE)]),
            &[],
        ),
        equal(
            "lk-promotion",
            Fuss,
            m(Lk),
            ex(&[(Evacuation, ONE), (Promotion, sym("-k", neg_k))]),
            &[],
        ),
        equal("lift-promotion", Fuss, m(Lift), m(Promotion), LIFT_DOMAINS),
        // The matching map.
        equal(
            "mat-inverse-left",
            AnySlope,
            ex(&[(MatInverse, ONE), (Mat, ONE)]),
            id(),
            &[],
        ),
        equal(
            "mat-inverse-right",
            AnySlope,
            ex(&[(Mat, ONE), (MatInverse, ONE)]),
            id(),
            &[],
        ),
        equal(
            "mat-rowmotion",
            AnySlope,
            ex(&[(Mat, ONE), (Rowmotion, ONE)]),
            ex(&[(Promotion, INV), (Mat, ONE)]),
            &[],
        ),
        equal(
            "evacuation-rowvacuation",
            Fuss,
            m(Evacuation),
            ex(&[
                (Mat, ONE),
                (Rowmotion, sym("-k", neg_k)),
                (Rowvacuation, ONE),
                (MatInverse, ONE),
            ]),
            &[],
        ),
        equal(
            "mat-rowmotion-order",
            Fuss,
            ex(&[(Promotion, sym("-span", neg_span))]),
            ex(&[
                (Mat, ONE),
                (DualRowvacuation, ONE),
                (Rowvacuation, ONE),
                (MatInverse, ONE),
            ]),
            FUSS_N4,
        ),
        equal(
            "mat-su",
            Fuss,
            m(Su),
            ex(&[
                (Mat, ONE),
                (Rowmotion, sym("1-k", neg_k_minus_one)),
                (Rowvacuation, ONE),
                (MatInverse, ONE),
            ]),
            FUSS_N4,
        ),
        equal(
            "mat-lk",
            Fuss,
            m(Lk),
            ex(&[
                (Mat, ONE),
                (Rowmotion, sym("-2k", neg_two_k)),
                (Rowvacuation, ONE),
                (MatInverse, ONE),
            ]),
            FUSS_N4,
        ),
        equal(
            "mat-kreweras-square",
            Fuss,
            ex(&[(Kre, Power::Fixed(2))]),
            ex(&[
                (Mat, ONE),
                (Rowmotion, sym("-(k+1)", neg_k_plus_one)),
                (MatInverse, ONE),
            ]),
            FUSS_N4,
        ),
        // RSK for (1,k)-paths through Dyck tilings.
        equal(
            "rsk-inverse-rowmotion",
            Fuss,
            ex(&[(RskInverse, ONE), (Promotion, INV)]),
            ex(&[(Rowmotion, ONE), (RskInverse, ONE)]),
            RSK_DOMAINS,
        ),
        equal(
            "rsk-promotion-mat",
            Fuss,
            m(Rsk),
            ex(&[(Promotion, sym("1-n", neg_size_minus_one)), (Mat, ONE)]),
            RSK_DOMAINS,
        ),
        equal(
            "rsk-inverse-left",
            Fuss,
            ex(&[(RskInverse, ONE), (Rsk, ONE)]),
            id(),
            RSK_DOMAINS,
        ),
        equal(
            "rsk-inverse-right",
            Fuss,
            ex(&[(Rsk, ONE), (RskInverse, ONE)]),
            id(),
            RSK_DOMAINS,
        ),
        equal("rsk-classical", Classical, m(Rsk), m(Rsk321), &[]),
        custom(
            "kappa-hermite",
            "κ from Hermite histories = κ from tile transpositions",
            Fuss,
            kappa_oracle,
            RSK_DOMAINS,
        ),
        custom(
            "maximal-tiling",
            "the maximal tiling is a cover-inclusive maximal partition of the region",
            Fuss,
            tiling_structure,
            RSK_DOMAINS,
        ),
    ]
}

/// The identity registry, in a fixed order.
pub fn identities() -> &'static [Identity] {
    static REGISTRY: OnceLock<Vec<Identity>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

/// Looks up a registered identity by name.
pub fn identity(name: &str) -> Result<&'static Identity, VerifyError> {
    identities()
        .iter()
        .find(|i| i.name == name)
        .ok_or_else(|| VerifyError::UnknownIdentity(name.to_string()))
}
