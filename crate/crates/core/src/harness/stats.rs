use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{fold_ranges, Family, Group};
use crate::error::{Error, Result};
use crate::perm_a;
use crate::perm_b::{self, SignedPermutation};
use crate::perm_d::{self, DElement};
use crate::qpoly::BivariatePolynomial;
use crate::set::ValueSet;

/// Integer-valued statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statistic {
    Inv,
    Sor,
    Cyc,
    RlMin,
    LrMax,
    Nmin,
    /// `l' = n - cyc`.
    ReflectionLength,
    InvB,
    SorB,
    NminB,
    NmaxB,
    /// `l'_B = n - cyc_B`.
    ReflectionLengthB,
    CycB,
    RlMinB,
    LrMaxB,
    /// `N`, the number of minus signs.
    Negatives,
    InvD,
    SorD,
    /// The co-sorting index `sor'_D`.
    CosorD,
    NminD,
    /// `ñ'_D`.
    ReflectionLengthD,
}

impl Statistic {
    pub const ALL: [Statistic; 21] = [
        Statistic::Inv,
        Statistic::Sor,
        Statistic::Cyc,
        Statistic::RlMin,
        Statistic::LrMax,
        Statistic::Nmin,
        Statistic::ReflectionLength,
        Statistic::InvB,
        Statistic::SorB,
        Statistic::NminB,
        Statistic::NmaxB,
        Statistic::ReflectionLengthB,
        Statistic::CycB,
        Statistic::RlMinB,
        Statistic::LrMaxB,
        Statistic::Negatives,
        Statistic::InvD,
        Statistic::SorD,
        Statistic::CosorD,
        Statistic::NminD,
        Statistic::ReflectionLengthD,
    ];

    /// Canonical name, as used on the command line and in documents.
    pub fn name(self) -> &'static str {
        use Statistic::*;
        match self {
            Inv => "inv",
            Sor => "sor",
            Cyc => "cyc",
            RlMin => "rl-min",
            LrMax => "lr-max",
            Nmin => "nmin",
            ReflectionLength => "lp",
            InvB => "inv_B",
            SorB => "sor_B",
            NminB => "nmin_B",
            NmaxB => "nmax_B",
            ReflectionLengthB => "lp_B",
            CycB => "cyc_B",
            RlMinB => "rl-min_B",
            LrMaxB => "lr-max_B",
            Negatives => "N",
            InvD => "inv_D",
            SorD => "sor_D",
            CosorD => "sorp_D",
            NminD => "nmin_D",
            ReflectionLengthD => "lt_D",
        }
    }

    fn aliases(self) -> &'static [&'static str] {
        use Statistic::*;
        match self {
            ReflectionLength => &["l'"],
            ReflectionLengthB => &["l'_B"],
            Negatives => &["neg"],
            CosorD => &["sor'_D"],
            ReflectionLengthD => &["ñ'_D", "l~'_D", "ltilde_D"],
            _ => &[],
        }
    }

    /// Whether the statistic is defined on elements of `family`.
    pub fn supports(self, family: Family) -> bool {
        use Statistic::*;
        match self {
            Inv | Sor | Cyc | RlMin | LrMax | Nmin | ReflectionLength => family == Family::A,
            InvB | SorB | NminB | NmaxB | ReflectionLengthB | CycB | RlMinB | LrMaxB
            | Negatives => family != Family::A,
            InvD | SorD | CosorD | NminD | ReflectionLengthD => family == Family::D,
        }
    }

    pub fn for_family(family: Family) -> impl Iterator<Item = Statistic> {
        Self::ALL.into_iter().filter(move |s| s.supports(family))
    }

    /// Evaluates on an element already known to lie in a supported family.
    pub(crate) fn eval(self, s: &SignedPermutation) -> usize {
        use Statistic::*;
        match self {
            Inv | Sor | Cyc | RlMin | LrMax | Nmin | ReflectionLength => {
                let p = s.unsigned();
                match self {
                    Inv => p.inv(),
                    Sor => p.sor(),
                    Cyc => p.cyc(),
                    RlMin => p.rl_min(),
                    LrMax => p.lr_max(),
                    Nmin => p.nmin(),
                    _ => p.reflection_length(),
                }
            }
            InvB => s.inv_b(),
            SorB => s.sor_b(),
            NminB => s.nmin_b(),
            NmaxB => s.nmax_b(),
            ReflectionLengthB => s.reflection_length_b(),
            CycB => s.cyc_b(),
            RlMinB => s.rmil_b().len(),
            LrMaxB => s.lmap_b().len(),
            Negatives => s.negatives(),
            InvD | SorD | CosorD | NminD | ReflectionLengthD => {
                let d = DElement::new_unchecked(s.clone());
                match self {
                    InvD => d.inv_d(),
                    SorD => d.sor_d(),
                    CosorD => d.sor_d_prime(),
                    NminD => d.nmin_d(),
                    _ => d.reflection_length_d(),
                }
            }
        }
    }

    /// Validates membership in `group` and evaluates.
    pub fn evaluate(self, group: Group, s: &SignedPermutation) -> Result<usize> {
        self.require(group.family)?;
        group.check_member(s)?;
        Ok(self.eval(s))
    }

    fn require(self, family: Family) -> Result<()> {
        if self.supports(family) {
            Ok(())
        } else {
            Err(Error::StatisticFamilyMismatch {
                statistic: self.name().to_string(),
                family,
            })
        }
    }
}

fn normalize(s: &str) -> String {
    s.trim().to_lowercase().replace('-', "_")
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = normalize(s);
        Self::ALL
            .into_iter()
            .find(|stat| {
                normalize(stat.name()) == key || stat.aliases().iter().any(|a| normalize(a) == key)
            })
            .ok_or_else(|| Error::Unknown {
                kind: "statistic",
                name: s.to_string(),
            })
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Set-valued statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetStatistic {
    Cyc,
    Lmap,
    Rmil,
    CycB,
    LmapB,
    RmilB,
}

impl SetStatistic {
    pub const ALL: [SetStatistic; 6] = [
        SetStatistic::Cyc,
        SetStatistic::Lmap,
        SetStatistic::Rmil,
        SetStatistic::CycB,
        SetStatistic::LmapB,
        SetStatistic::RmilB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SetStatistic::Cyc => "Cyc",
            SetStatistic::Lmap => "Lmap",
            SetStatistic::Rmil => "Rmil",
            SetStatistic::CycB => "Cyc_B",
            SetStatistic::LmapB => "Lmap_B",
            SetStatistic::RmilB => "Rmil_B",
        }
    }

    pub fn supports(self, family: Family) -> bool {
        match self {
            SetStatistic::Cyc | SetStatistic::Lmap | SetStatistic::Rmil => family == Family::A,
            _ => family != Family::A,
        }
    }

    pub fn for_family(family: Family) -> impl Iterator<Item = SetStatistic> {
        Self::ALL.into_iter().filter(move |s| s.supports(family))
    }

    pub(crate) fn eval(self, s: &SignedPermutation) -> ValueSet {
        match self {
            SetStatistic::Cyc => s.unsigned().cycle_minima(),
            SetStatistic::Lmap => s.unsigned().lmap(),
            SetStatistic::Rmil => s.unsigned().rmil(),
            SetStatistic::CycB => s.cyc_b_set(),
            SetStatistic::LmapB => s.lmap_b(),
            SetStatistic::RmilB => s.rmil_b(),
        }
    }

    fn require(self, family: Family) -> Result<()> {
        if self.supports(family) {
            Ok(())
        } else {
            Err(Error::StatisticFamilyMismatch {
                statistic: self.name().to_string(),
                family,
            })
        }
    }
}

impl FromStr for SetStatistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = normalize(s);
        Self::ALL
            .into_iter()
            .find(|stat| normalize(stat.name()) == key)
            .ok_or_else(|| Error::Unknown {
                kind: "set statistic",
                name: s.to_string(),
            })
    }
}

impl fmt::Display for SetStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `Σ_σ q^{s1(σ)} t^{s2(σ)}` over the whole group.
pub fn joint_distribution(
    group: Group,
    s1: Statistic,
    s2: Statistic,
) -> Result<BivariatePolynomial> {
    joint_distribution_parallel(group, s1, s2, 1)
}

/// As [`joint_distribution`], with the rank range split over `workers`
/// threads. The result does not depend on `workers`.
pub fn joint_distribution_parallel(
    group: Group,
    s1: Statistic,
    s2: Statistic,
    workers: usize,
) -> Result<BivariatePolynomial> {
    s1.require(group.family)?;
    s2.require(group.family)?;
    let partial = |range| {
        let mut p = BivariatePolynomial::zero();
        for s in group.elements_in(range) {
            p.add_term(s1.eval(&s) as u32, s2.eval(&s) as u32, 1)?;
        }
        Ok(p)
    };
    fold_ranges(
        group.order(),
        workers,
        partial,
        |a: Result<_>, b: Result<_>| a?.checked_add(&b?),
    )
}

/// Multiset of `(s1 σ, s2 σ)` pairs, as multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SetPairDistribution {
    pub counts: BTreeMap<(ValueSet, ValueSet), u64>,
}

impl SetPairDistribution {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

pub fn set_pair_distribution(
    group: Group,
    s1: SetStatistic,
    s2: SetStatistic,
) -> Result<SetPairDistribution> {
    s1.require(group.family)?;
    s2.require(group.family)?;
    let mut out = SetPairDistribution::default();
    for s in group.elements() {
        *out.counts.entry((s1.eval(&s), s2.eval(&s))).or_insert(0) += 1;
    }
    Ok(out)
}

/// The three statistic-transporting bijections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Bijection {
    Phi,
    Psi,
    Rho,
}

impl Bijection {
    pub fn family(self) -> Family {
        match self {
            Bijection::Phi => Family::A,
            Bijection::Psi => Family::B,
            Bijection::Rho => Family::D,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Bijection::Phi => "phi",
            Bijection::Psi => "psi",
            Bijection::Rho => "rho",
        }
    }

    /// Source and target statistic names for the transported integer pair.
    pub fn transported_pair(self) -> ([Statistic; 2], [Statistic; 2]) {
        use Statistic::*;
        match self {
            Bijection::Phi => ([Inv, RlMin], [Sor, Cyc]),
            Bijection::Psi => ([InvB, NminB], [SorB, ReflectionLengthB]),
            Bijection::Rho => ([InvD, NminD], [SorD, ReflectionLengthD]),
        }
    }

    pub(crate) fn apply_unchecked(self, s: &SignedPermutation, inverse: bool) -> SignedPermutation {
        match (self, inverse) {
            (Bijection::Phi, false) => (&perm_a::phi(&s.unsigned())).into(),
            (Bijection::Phi, true) => (&perm_a::phi_inverse(&s.unsigned())).into(),
            (Bijection::Psi, false) => perm_b::psi(s),
            (Bijection::Psi, true) => perm_b::psi_inverse(s),
            (Bijection::Rho, false) => {
                perm_d::rho(&DElement::new_unchecked(s.clone())).into_signed()
            }
            (Bijection::Rho, true) => {
                perm_d::rho_inverse(&DElement::new_unchecked(s.clone())).into_signed()
            }
        }
    }

    /// Applies the bijection (or its inverse) to an element of `family()`.
    pub fn apply(self, s: &SignedPermutation, inverse: bool) -> Result<SignedPermutation> {
        let group = Group {
            family: self.family(),
            n: s.n(),
        };
        group.check_member(s)?;
        Ok(self.apply_unchecked(s, inverse))
    }

    /// The pointwise transport claim; `Some(description)` when it fails.
    fn check_point(self, s: &SignedPermutation, image: &SignedPermutation) -> Option<String> {
        match self {
            Bijection::Phi => {
                let (p, q) = (s.unsigned(), image.unsigned());
                let lhs = (p.inv(), p.rl_min(), p.lmap());
                let rhs = (q.sor(), q.cyc(), q.lmap());
                (lhs != rhs).then(|| {
                    format!("(inv, rl-min, Lmap)({s}) = {lhs:?} but (sor, cyc, Lmap)({image}) = {rhs:?}")
                })
            }
            Bijection::Psi => {
                let lhs = (s.inv_b(), s.lmap_b(), s.rmil_b(), s.nmin_b());
                let rhs = (
                    image.sor_b(),
                    image.lmap_b(),
                    image.cyc_b_set(),
                    image.reflection_length_b(),
                );
                (lhs != rhs).then(|| {
                    format!(
                        "(inv_B, Lmap_B, Rmil_B, nmin_B)({s}) = {lhs:?} but \
                         (sor_B, Lmap_B, Cyc_B, l'_B)({image}) = {rhs:?}"
                    )
                })
            }
            Bijection::Rho => {
                let (d, e) = (
                    DElement::new_unchecked(s.clone()),
                    DElement::new_unchecked(image.clone()),
                );
                let lhs = (d.inv_d(), d.nmin_d());
                let rhs = (e.sor_d(), e.reflection_length_d());
                (lhs != rhs).then(|| {
                    format!("(inv_D, nmin_D)({s}) = {lhs:?} but (sor_D, ñ'_D)({image}) = {rhs:?}")
                })
            }
        }
    }
}

impl FromStr for Bijection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_lowercase().as_str() {
            "phi" | "φ" => Ok(Bijection::Phi),
            "psi" | "ψ" => Ok(Bijection::Psi),
            "rho" | "ρ" => Ok(Bijection::Rho),
            _ => Err(Error::Unknown {
                kind: "bijection",
                name: s.to_string(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransportReport {
    pub bijection: Bijection,
    pub group: Group,
    pub elements_checked: u64,
    pub passed: bool,
    pub counterexample: Option<String>,
}

/// Checks the transport claim at every element and that the map is injective
/// (hence bijective) and lands in the group.
pub fn verify_transport(group: Group, bijection: Bijection) -> Result<TransportReport> {
    if group.family != bijection.family() {
        return Err(Error::Unknown {
            kind: "bijection for this family",
            name: format!("{} on {}", bijection.name(), group),
        });
    }
    let mut seen = HashSet::with_capacity(group.order() as usize);
    let mut counterexample = None;
    let mut checked = 0;
    for s in group.elements() {
        checked += 1;
        let image = bijection.apply_unchecked(&s, false);
        let failure = if !group.contains(&image) {
            Some(format!(
                "{}({s}) = {image} lies outside {group}",
                bijection.name()
            ))
        } else if !seen.insert(image.clone()) {
            Some(format!("{}({s}) = {image} is hit twice", bijection.name()))
        } else {
            bijection.check_point(&s, &image)
        };
        if failure.is_some() {
            counterexample = failure;
            break;
        }
    }
    Ok(TransportReport {
        bijection,
        group,
        elements_checked: checked,
        passed: counterexample.is_none(),
        counterexample,
    })
}
