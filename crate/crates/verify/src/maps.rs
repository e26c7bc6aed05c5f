use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use ratdyck_matchings::pm_inverse;
use ratdyck_matmap::{mat_inverse, MatContext};
use ratdyck_noncrossing::NonCrossingChain;
use ratdyck_paths::{enumerate_paths, DyckPath, Slope};
use ratdyck_perm321::{dyck1, dyck2, dyck3, e_p_inverse, pm_cross, rsk_path};
use ratdyck_promotion::{
    dual_evacuation, dual_evacuation_fast, dual_promotion, evacuation, evacuation_fast, promotion,
};
use ratdyck_rowmotion::{
    dual_rowvacuation, rowmotion, rowmotion_hat, rowmotion_inverse, rowmotion_structural,
    rowvacuation,
};
use ratdyck_tilings::{rsk_hat_inverse, rsk_hat_path};

use crate::VerifyError;

/// A named map from the paths of a slope to themselves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MapName {
    Promotion,
    DualPromotion,
    Evacuation,
    DualEvacuation,
    EvacuationFast,
    DualEvacuationFast,
    Rowmotion,
    RowmotionStructural,
    RowmotionHat,
    Rowvacuation,
    DualRowvacuation,
    Mat,
    MatInverse,
    Rsk,
    RskInverse,
    Rsk321,
    PmCross,
    Dyck1,
    Dyck2,
    Dyck3,
    Star,
    Rot,
    Ref,
    Kre,
    Su,
    Lk,
    Lift,
}

/// Which slopes a map is defined on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    AnySlope,
    /// Slopes `(1, k)`.
    Fuss,
    /// The slope `(1, 1)`.
    Classical,
}

impl Scope {
    pub fn contains(self, s: Slope) -> bool {
        match self {
            Scope::AnySlope => true,
            Scope::Fuss => s.a() == 1,
            Scope::Classical => s.a() == 1 && s.b() == 1,
        }
    }
}

impl MapName {
    pub const ALL: [MapName; 27] = [
        MapName::Promotion,
        MapName::DualPromotion,
        MapName::Evacuation,
        MapName::DualEvacuation,
        MapName::EvacuationFast,
        MapName::DualEvacuationFast,
        MapName::Rowmotion,
        MapName::RowmotionStructural,
        MapName::RowmotionHat,
        MapName::Rowvacuation,
        MapName::DualRowvacuation,
        MapName::Mat,
        MapName::MatInverse,
        MapName::Rsk,
        MapName::RskInverse,
        MapName::Rsk321,
        MapName::PmCross,
        MapName::Dyck1,
        MapName::Dyck2,
        MapName::Dyck3,
        MapName::Star,
        MapName::Rot,
        MapName::Ref,
        MapName::Kre,
        MapName::Su,
        MapName::Lk,
        MapName::Lift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapName::Promotion => "promotion",
            MapName::DualPromotion => "dual-promotion",
            MapName::Evacuation => "evacuation",
            MapName::DualEvacuation => "dual-evacuation",
            MapName::EvacuationFast => "evacuation-fast",
            MapName::DualEvacuationFast => "dual-evacuation-fast",
            MapName::Rowmotion => "rowmotion",
            MapName::RowmotionStructural => "rowmotion-structural",
            MapName::RowmotionHat => "rowmotion-hat",
            MapName::Rowvacuation => "rowvacuation",
            MapName::DualRowvacuation => "dual-rowvacuation",
            MapName::Mat => "mat",
            MapName::MatInverse => "mat-inverse",
            MapName::Rsk => "rsk",
            MapName::RskInverse => "rsk-inverse",
            MapName::Rsk321 => "rsk-321",
            MapName::PmCross => "pm-cross",
            MapName::Dyck1 => "dyck1",
            MapName::Dyck2 => "dyck2",
            MapName::Dyck3 => "dyck3",
            MapName::Star => "star",
            MapName::Rot => "rot",
            MapName::Ref => "ref",
            MapName::Kre => "kre",
            MapName::Su => "su",
            MapName::Lk => "lk",
            MapName::Lift => "lift",
        }
    }

    /// Short names accepted besides [`MapName::name`].
    fn aliases(self) -> &'static [&'static str] {
        match self {
            MapName::Promotion => &["pro", "partial"],
            MapName::DualPromotion => &["dual-pro"],
            MapName::Evacuation => &["ev"],
            MapName::DualEvacuation => &["dual-ev"],
            MapName::Rowmotion => &["delta"],
            MapName::RowmotionHat => &["delta-hat"],
            MapName::Rowvacuation => &["rvac"],
            MapName::DualRowvacuation => &["drvac"],
            MapName::MatInverse => &["mat-inv"],
            MapName::RskInverse => &["rsk-inv"],
            _ => &[],
        }
    }

    pub fn scope(self) -> Scope {
        match self {
            MapName::Rsk
            | MapName::RskInverse
            | MapName::Rot
            | MapName::Ref
            | MapName::Kre
            | MapName::Su
            | MapName::Lk
            | MapName::Lift => Scope::Fuss,
            MapName::Rsk321
            | MapName::PmCross
            | MapName::Dyck1
            | MapName::Dyck2
            | MapName::Dyck3
            | MapName::Star => Scope::Classical,
            _ => Scope::AnySlope,
        }
    }

    /// The map is its own inverse.
    fn is_involution(self) -> bool {
        matches!(
            self,
            MapName::Evacuation
                | MapName::DualEvacuation
                | MapName::EvacuationFast
                | MapName::DualEvacuationFast
                | MapName::Rowvacuation
                | MapName::DualRowvacuation
                | MapName::Dyck2
                | MapName::Dyck3
                | MapName::Star
                | MapName::Ref
                | MapName::Su
                | MapName::Lk
        )
    }
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapName {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, VerifyError> {
        let s = s.trim();
        MapName::ALL
            .into_iter()
            .find(|m| m.name() == s || m.aliases().contains(&s))
            .ok_or_else(|| VerifyError::UnknownMap(s.to_string()))
    }
}

/// The exponent of a term: a constant, or a function of the slope.
#[derive(Clone, Copy)]
pub enum Power {
    Fixed(i64),
    Symbolic(&'static str, fn(Slope) -> i64),
}

impl Power {
    pub fn eval(self, s: Slope) -> i64 {
        match self {
            Power::Fixed(k) => k,
            Power::Symbolic(_, f) => f(s),
        }
    }
}

impl fmt::Debug for Power {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Power::Fixed(k) => write!(f, "{k}"),
            Power::Symbolic(label, _) => f.write_str(label),
        }
    }
}

/// A map raised to a power.
#[derive(Clone, Copy, Debug)]
pub struct Term {
    pub map: MapName,
    pub power: Power,
}

/// A composition of terms, applied right to left.
#[derive(Clone, Debug, Default)]
pub struct Expr {
    pub terms: Vec<Term>,
}

impl Expr {
    pub fn identity() -> Self {
        Expr { terms: Vec::new() }
    }

    pub fn map(map: MapName) -> Self {
        Expr {
            terms: vec![Term {
                map,
                power: Power::Fixed(1),
            }],
        }
    }

    /// Appends `map^power` on the right, so it is applied before the
    /// existing terms.
    pub fn then_after(mut self, map: MapName, power: Power) -> Self {
        self.terms.push(Term { map, power });
        self
    }

    pub fn scope_ok(&self, s: Slope) -> bool {
        self.terms.iter().all(|t| t.map.scope().contains(s))
    }

    pub fn eval(&self, ctx: &Ctx, p: &DyckPath) -> Result<DyckPath, VerifyError> {
        let mut q = p.clone();
        for t in self.terms.iter().rev() {
            q = ctx.apply_power(t.map, t.power.eval(ctx.slope()), &q)?;
        }
        Ok(q)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| match t.power {
                Power::Fixed(1) => t.map.name().to_string(),
                Power::Fixed(k) => format!("{}^{k}", t.map),
                Power::Symbolic(label, _) => format!("{}^({label})", t.map),
            })
            .collect();
        f.write_str(&parts.join(" ∘ "))
    }
}

impl FromStr for Expr {
    type Err = VerifyError;

    /// Parses `mat∘rowmotion^-1` or `mat.rowmotion^-1`; `id` is the empty
    /// composition.
    fn from_str(s: &str) -> Result<Self, VerifyError> {
        let s = s.trim();
        if s == "id" {
            return Ok(Expr::identity());
        }
        let terms =
            s.split(['∘', '.'])
                .map(|part| {
                    let (name, power) = match part.split_once('^') {
                        Some((name, power)) => {
                            let k = power.trim().parse::<i64>().map_err(|_| {
                                VerifyError::BadInput(format!("bad power in {part:?}"))
                            })?;
                            (name, k)
                        }
                        None => (part, 1),
                    };
                    Ok(Term {
                        map: name.parse()?,
                        power: Power::Fixed(power),
                    })
                })
                .collect::<Result<Vec<_>, VerifyError>>()?;
        Ok(Expr { terms })
    }
}

/// Per-slope evaluation context: the enumerated domain plus caches for the
/// general matching map and for inverses computed by table lookup.
pub struct Ctx {
    slope: Slope,
    paths: OnceLock<Vec<DyckPath>>,
    mat: OnceLock<MatContext>,
    inverses: Mutex<HashMap<MapName, Arc<HashMap<DyckPath, DyckPath>>>>,
}

fn chain_map(
    p: &DyckPath,
    f: impl Fn(&NonCrossingChain) -> Result<NonCrossingChain, VerifyError>,
) -> Result<DyckPath, VerifyError> {
    let c = NonCrossingChain::from_path(p)?;
    Ok(f(&c)?.to_path())
}

impl Ctx {
    pub fn new(slope: Slope) -> Self {
        Ctx {
            slope,
            paths: OnceLock::new(),
            mat: OnceLock::new(),
            inverses: Mutex::new(HashMap::new()),
        }
    }

    pub fn slope(&self) -> Slope {
        self.slope
    }

    /// Every path of the slope in increasing lexicographic order.
    pub fn paths(&self) -> &[DyckPath] {
        self.paths.get_or_init(|| enumerate_paths(self.slope))
    }

    fn mat_context(&self) -> &MatContext {
        self.mat.get_or_init(|| MatContext::new(self.slope))
    }

    fn check_scope(&self, map: MapName, p: &DyckPath) -> Result<(), VerifyError> {
        if p.slope() != self.slope {
            return Err(VerifyError::BadInput(format!(
                "path {p} has slope {}, expected {}",
                p.slope(),
                self.slope
            )));
        }
        if !map.scope().contains(self.slope) {
            return Err(VerifyError::MapInapplicable {
                map: map.name().to_string(),
                slope: self.slope,
            });
        }
        Ok(())
    }

    /// Applies `map` once.
    pub fn apply(&self, map: MapName, p: &DyckPath) -> Result<DyckPath, VerifyError> {
        self.check_scope(map, p)?;
        Ok(match map {
            MapName::Promotion => promotion(p),
            MapName::DualPromotion => dual_promotion(p),
            MapName::Evacuation => evacuation(p),
            MapName::DualEvacuation => dual_evacuation(p),
            MapName::EvacuationFast => evacuation_fast(p),
            MapName::DualEvacuationFast => dual_evacuation_fast(p),
            MapName::Rowmotion => rowmotion(p),
            MapName::RowmotionStructural => rowmotion_structural(p),
            MapName::RowmotionHat => rowmotion_hat(p),
            MapName::Rowvacuation => rowvacuation(p),
            MapName::DualRowvacuation => dual_rowvacuation(p),
            MapName::Mat => {
                if self.slope.is_fuss() {
                    ratdyck_matmap::mat(p)?
                } else {
                    self.mat_context().mat(p)?
                }
            }
            MapName::MatInverse => mat_inverse(p)?,
            MapName::Rsk => rsk_hat_path(p)?,
            MapName::RskInverse => rsk_hat_inverse(p)?,
            MapName::Rsk321 => rsk_path(p)?,
            MapName::PmCross => pm_inverse(&pm_cross(&e_p_inverse(p)?), self.slope)?,
            MapName::Dyck1 => dyck1(p)?,
            MapName::Dyck2 => dyck2(p)?,
            MapName::Dyck3 => dyck3(p)?,
            MapName::Star => p.star(),
            MapName::Rot => chain_map(p, |c| Ok(c.rot()))?,
            MapName::Ref => chain_map(p, |c| Ok(c.reflect()))?,
            MapName::Kre => chain_map(p, |c| Ok(c.kre()))?,
            MapName::Su => chain_map(p, |c| Ok(c.su()))?,
            MapName::Lk => chain_map(p, |c| Ok(c.lk()))?,
            MapName::Lift => chain_map(p, |c| Ok(ratdyck_noncrossing::lift(c)?))?,
        })
    }

    /// Applies the inverse of `map` once, directly when a formula is known
    /// and through a lookup table over the domain otherwise.
    pub fn apply_inverse(&self, map: MapName, p: &DyckPath) -> Result<DyckPath, VerifyError> {
        self.check_scope(map, p)?;
        if map.is_involution() {
            return self.apply(map, p);
        }
        Ok(match map {
            MapName::Promotion => dual_promotion(p),
            MapName::DualPromotion => promotion(p),
            MapName::Rowmotion | MapName::RowmotionStructural => rowmotion_inverse(p),
            MapName::Mat => mat_inverse(p)?,
            MapName::MatInverse => self.apply(MapName::Mat, p)?,
            MapName::Rsk => rsk_hat_inverse(p)?,
            MapName::RskInverse => rsk_hat_path(p)?,
            MapName::Rot => chain_map(p, |c| Ok(c.rot_inverse()))?,
            MapName::Kre => chain_map(p, |c| Ok(c.rot_inverse().kre()))?,
            _ => {
                let table = self.inverse_table(map)?;
                table
                    .get(p)
                    .cloned()
                    .ok_or_else(|| VerifyError::NotBijective {
                        map: map.name().to_string(),
                        witness: format!("{p} has no preimage"),
                    })?
            }
        })
    }

    fn inverse_table(&self, map: MapName) -> Result<Arc<HashMap<DyckPath, DyckPath>>, VerifyError> {
        if let Some(t) = self.inverses.lock().expect("poisoned").get(&map) {
            return Ok(Arc::clone(t));
        }
        let mut table = HashMap::with_capacity(self.paths().len());
        for p in self.paths() {
            let q = self.apply(map, p)?;
            if let Some(other) = table.insert(q.clone(), p.clone()) {
                return Err(VerifyError::NotBijective {
                    map: map.name().to_string(),
                    witness: format!("{other} and {p} both map to {q}"),
                });
            }
        }
        let table = Arc::new(table);
        self.inverses
            .lock()
            .expect("poisoned")
            .insert(map, Arc::clone(&table));
        Ok(table)
    }

    /// `map^k`, using the inverse for negative `k`.
    pub fn apply_power(&self, map: MapName, k: i64, p: &DyckPath) -> Result<DyckPath, VerifyError> {
        let mut q = p.clone();
        for _ in 0..k.unsigned_abs() {
            q = if k > 0 {
                self.apply(map, &q)?
            } else {
                self.apply_inverse(map, &q)?
            };
        }
        Ok(q)
    }
}
