//! The named verification suite. Every check is exhaustive over one group
//! and reports its outcome as data; callers decide what a failure means.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::stats::{Bijection, SetStatistic, Statistic};
use super::{
    code_space_a, code_space_b, code_space_d, fold_ranges, joint_distribution_parallel,
    set_pair_distribution, verify_transport, CayleyTable, Family, GeneratingSet, Group,
};
use crate::error::{Error, Result};
use crate::perm_a::{self, rmil_set};
use crate::perm_b::{self, rmil_b_set, SignedPermutation};
use crate::perm_d::{self, DElement};
use crate::qpoly::{self, BivariatePolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    TypeAGf,
    TypeATransport,
    TypeASetPairs,
    TypeAFourPairs,
    TypeACodeFormulas,
    TypeARoundtrip,
    TypeACayley,
    TypeBGf,
    TypeBTransport,
    TypeBSetPairs,
    TypeBFourPairs,
    TypeBCodeFormulas,
    TypeBRoundtrip,
    TypeBCayley,
    TypeDSorCosort,
    TypeDBivariate,
    TypeDMahonian,
    TypeDTransport,
    TypeDCodeFormulas,
    TypeDRoundtrip,
    TypeDCayley,
}

impl Check {
    pub const ALL: [Check; 21] = [
        Check::TypeAGf,
        Check::TypeATransport,
        Check::TypeASetPairs,
        Check::TypeAFourPairs,
        Check::TypeACodeFormulas,
        Check::TypeARoundtrip,
        Check::TypeACayley,
        Check::TypeBGf,
        Check::TypeBTransport,
        Check::TypeBSetPairs,
        Check::TypeBFourPairs,
        Check::TypeBCodeFormulas,
        Check::TypeBRoundtrip,
        Check::TypeBCayley,
        Check::TypeDSorCosort,
        Check::TypeDBivariate,
        Check::TypeDMahonian,
        Check::TypeDTransport,
        Check::TypeDCodeFormulas,
        Check::TypeDRoundtrip,
        Check::TypeDCayley,
    ];

    pub fn name(self) -> &'static str {
        use Check::*;
        match self {
            TypeAGf => "type-a-gf",
            TypeATransport => "type-a-transport",
            TypeASetPairs => "type-a-set-pairs",
            TypeAFourPairs => "type-a-four-pairs",
            TypeACodeFormulas => "type-a-code-formulas",
            TypeARoundtrip => "type-a-roundtrip",
            TypeACayley => "type-a-cayley",
            TypeBGf => "type-b-gf",
            TypeBTransport => "type-b-transport",
            TypeBSetPairs => "type-b-set-pairs",
            TypeBFourPairs => "type-b-four-pairs",
            TypeBCodeFormulas => "type-b-code-formulas",
            TypeBRoundtrip => "type-b-roundtrip",
            TypeBCayley => "type-b-cayley",
            TypeDSorCosort => "type-d-sor-cosort",
            TypeDBivariate => "type-d-bivariate",
            TypeDMahonian => "type-d-mahonian",
            TypeDTransport => "type-d-transport",
            TypeDCodeFormulas => "type-d-code-formulas",
            TypeDRoundtrip => "type-d-roundtrip",
            TypeDCayley => "type-d-cayley",
        }
    }

    pub fn family(self) -> Family {
        match self.name().as_bytes()[5] {
            b'a' => Family::A,
            b'b' => Family::B,
            _ => Family::D,
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_lowercase().replace('_', "-");
        Self::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| Error::Unknown {
                kind: "check",
                name: s.to_string(),
            })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A coefficient where a computed polynomial and its expected value differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualTerm {
    pub q: u32,
    pub t: u32,
    pub actual: u64,
    pub expected: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub check: String,
    pub family: Family,
    pub n: usize,
    pub elements_checked: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<BivariatePolynomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub residual: Vec<ResidualTerm>,
}

impl VerifyReport {
    fn new(check: Check, group: Group) -> Self {
        VerifyReport {
            check: check.name().to_string(),
            family: group.family,
            n: group.n,
            elements_checked: 0,
            passed: true,
            polynomial: None,
            counterexample: None,
            residual: Vec::new(),
        }
    }

    fn fail(&mut self, message: String) {
        if self.passed {
            self.passed = false;
            self.counterexample = Some(message);
        }
    }

    /// Records `actual == expected`, keeping the first mismatch.
    fn compare(
        &mut self,
        label: &str,
        actual: &BivariatePolynomial,
        expected: &BivariatePolynomial,
    ) {
        if self.passed && actual != expected {
            self.residual = actual
                .residual(expected)
                .into_iter()
                .map(|(q, t, actual, expected)| ResidualTerm {
                    q,
                    t,
                    actual,
                    expected,
                })
                .collect();
            self.fail(format!("{label}: {actual} != {expected}"));
        }
    }
}

/// Runs `check` exhaustively at degree `n`, splitting enumeration across
/// `workers` threads where the check allows it.
pub fn run_check(check: Check, n: usize, workers: usize) -> Result<VerifyReport> {
    let group = Group::new(check.family(), n)?;
    let mut report = VerifyReport::new(check, group);
    use Check::*;
    match check {
        TypeAGf => {
            use Statistic::*;
            gf_check(
                &mut report,
                group,
                &[(Inv, RlMin), (Sor, Cyc)],
                qpoly::gf_type_a(n)?,
                workers,
            )?
        }
        TypeBGf => {
            use Statistic::*;
            gf_check(
                &mut report,
                group,
                &[(InvB, NminB), (SorB, ReflectionLengthB)],
                qpoly::gf_type_b(n)?,
                workers,
            )?
        }
        TypeDBivariate => {
            use Statistic::*;
            gf_check(
                &mut report,
                group,
                &[(InvD, NminD), (SorD, ReflectionLengthD)],
                qpoly::gf_type_d_bivariate(n)?,
                workers,
            )?
        }
        TypeDMahonian => {
            let expected = qpoly::gf_type_d_univariate(n)?;
            use Statistic::*;
            for (s1, s2) in [(InvD, NminD), (SorD, ReflectionLengthD), (CosorD, NminD)] {
                let p = joint_distribution_parallel(group, s1, s2, workers)?.eval_t1();
                report.compare(&format!("{s1} at t = 1"), &p, &expected);
            }
            report.polynomial = Some(expected);
            report.elements_checked = group.order();
        }
        TypeAFourPairs => {
            use Statistic::*;
            pairs_check(
                &mut report,
                group,
                &[(Sor, Cyc), (Inv, RlMin), (Inv, LrMax), (Sor, LrMax)],
                workers,
            )?
        }
        TypeBFourPairs => {
            use Statistic::*;
            pairs_check(
                &mut report,
                group,
                &[
                    (SorB, ReflectionLengthB),
                    (InvB, NminB),
                    (InvB, NmaxB),
                    (SorB, NmaxB),
                ],
                workers,
            )?;
            if report.passed {
                // nmin_B(σ) = nmax_B(σ⁻¹)
                pointwise(&mut report, group, workers, |s| {
                    let inv = s.inverse();
                    (s.nmin_b() != inv.nmax_b()).then(|| {
                        format!(
                            "nmin_B({s}) = {} but nmax_B({inv}) = {}",
                            s.nmin_b(),
                            inv.nmax_b()
                        )
                    })
                });
            }
        }
        TypeASetPairs => {
            use SetStatistic::*;
            set_pairs_check(&mut report, group, [Cyc, Lmap, Rmil])?
        }
        TypeBSetPairs => {
            use SetStatistic::*;
            set_pairs_check(&mut report, group, [CycB, LmapB, RmilB])?
        }
        TypeATransport | TypeBTransport | TypeDTransport => {
            let bijection = match check.family() {
                Family::A => Bijection::Phi,
                Family::B => Bijection::Psi,
                Family::D => Bijection::Rho,
            };
            let t = verify_transport(group, bijection)?;
            report.elements_checked = t.elements_checked;
            if let Some(c) = t.counterexample {
                report.fail(c);
            }
        }
        TypeACodeFormulas => pointwise(&mut report, group, workers, code_formulas_a),
        TypeBCodeFormulas => pointwise(&mut report, group, workers, code_formulas_b),
        TypeDCodeFormulas => pointwise(&mut report, group, workers, code_formulas_d),
        TypeDSorCosort => pointwise(&mut report, group, workers, |s| {
            let d = DElement::new_unchecked(s.clone());
            let (a, b) = (d.sor_d(), d.sor_d_prime());
            (a != b).then(|| format!("sor_D({s}) = {a} but sor'_D = {b}"))
        }),
        TypeARoundtrip | TypeBRoundtrip | TypeDRoundtrip => {
            roundtrip_check(&mut report, group, workers)
        }
        TypeACayley => cayley_check(
            &mut report,
            group,
            &[
                (GeneratingSet::TA, Statistic::ReflectionLength),
                (GeneratingSet::TA, Statistic::Cyc),
            ],
        )?,
        TypeBCayley => cayley_check(
            &mut report,
            group,
            &[
                (GeneratingSet::TB, Statistic::ReflectionLengthB),
                (GeneratingSet::TB, Statistic::CycB),
                (GeneratingSet::SB, Statistic::InvB),
            ],
        )?,
        TypeDCayley => cayley_check(
            &mut report,
            group,
            &[
                (GeneratingSet::TD, Statistic::ReflectionLengthD),
                (GeneratingSet::SD, Statistic::InvD),
            ],
        )?,
    }
    Ok(report)
}

fn gf_check(
    report: &mut VerifyReport,
    group: Group,
    pairs: &[(Statistic, Statistic)],
    expected: BivariatePolynomial,
    workers: usize,
) -> Result<()> {
    for &(s1, s2) in pairs {
        let p = joint_distribution_parallel(group, s1, s2, workers)?;
        report.compare(&format!("({s1}, {s2})"), &p, &expected);
    }
    report.elements_checked = group.order();
    report.polynomial = Some(expected);
    Ok(())
}

fn pairs_check(
    report: &mut VerifyReport,
    group: Group,
    pairs: &[(Statistic, Statistic)],
    workers: usize,
) -> Result<()> {
    let (f1, f2) = pairs[0];
    let first = joint_distribution_parallel(group, f1, f2, workers)?;
    for &(s1, s2) in &pairs[1..] {
        let p = joint_distribution_parallel(group, s1, s2, workers)?;
        report.compare(&format!("({s1}, {s2}) against ({f1}, {f2})"), &p, &first);
    }
    report.elements_checked = group.order();
    report.polynomial = Some(first);
    Ok(())
}

/// The six ordered pairs `(x,y)` of distinct statistics drawn from
/// `[c, l, r]` whose joint distributions coincide.
fn set_pairs_check(
    report: &mut VerifyReport,
    group: Group,
    [c, l, r]: [SetStatistic; 3],
) -> Result<()> {
    let pairs = [(c, r), (c, l), (r, l), (l, r), (l, c), (r, c)];
    let first = set_pair_distribution(group, pairs[0].0, pairs[0].1)?;
    for (x, y) in &pairs[1..] {
        let d = set_pair_distribution(group, *x, *y)?;
        if d != first {
            let witness = d
                .counts
                .iter()
                .find(|(k, v)| first.counts.get(k) != Some(v))
                .or_else(|| first.counts.iter().find(|(k, _)| !d.counts.contains_key(k)))
                .map(|((a, b), _)| format!("({a}, {b})"))
                .unwrap_or_default();
            report.fail(format!(
                "({x}, {y}) differs from ({}, {}) at {witness}",
                pairs[0].0, pairs[0].1
            ));
            break;
        }
    }
    report.elements_checked = group.order();
    Ok(())
}

/// Applies `claim` to every element; the earliest failing rank wins.
fn pointwise<F>(report: &mut VerifyReport, group: Group, workers: usize, claim: F)
where
    F: Fn(&SignedPermutation) -> Option<String> + Sync,
{
    let first = fold_ranges(
        group.order(),
        workers,
        |range| group.elements_in(range).find_map(|s| claim(&s)),
        |a, b| a.or(b),
    );
    report.elements_checked = group.order();
    if let Some(c) = first {
        report.fail(c);
    }
}

fn code_formulas_a(s: &SignedPermutation) -> Option<String> {
    let p = s.unsigned();
    let a = perm_a::acode_encode(&p);
    let b = perm_a::bcode_encode(&p);
    let checks = [
        (p.rmil() == a.max_set(), "Rmil = Max(A-code)"),
        (p.lmap() == rmil_set(a.entries()), "Lmap = Rmil(A-code)"),
        (p.cycle_minima() == b.max_set(), "Cyc = Max(B-code)"),
        (p.lmap() == rmil_set(b.entries()), "Lmap = Rmil(B-code)"),
        (p.inv() == a.deficiency(), "inv = Σ(i - a_i)"),
        (p.rl_min() == a.max_set().len(), "rl-min = |Max a|"),
        (p.sor() == b.deficiency(), "sor = Σ(i - b_i)"),
        (p.cyc() == b.max_set().len(), "cyc = |Max b|"),
    ];
    checks
        .iter()
        .find(|(ok, _)| !ok)
        .map(|(_, what)| format!("{what} fails at {p} (A-code {a}, B-code {b})"))
}

fn code_formulas_b(s: &SignedPermutation) -> Option<String> {
    let n = s.n();
    let a = perm_b::acode_b_encode(s);
    let b = perm_b::bcode_b_encode(s);
    let checks = [
        (s.rmil_b() == a.max_set(), "Rmil_B = Max(A-code)"),
        (
            s.lmap_b() == rmil_b_set(a.entries()),
            "Lmap_B = Rmil_B(A-code)",
        ),
        (s.cyc_b_set() == b.max_set(), "Cyc_B = Max(B-code)"),
        (
            s.lmap_b() == rmil_b_set(b.entries()),
            "Lmap_B = Rmil_B(B-code)",
        ),
        (s.inv_b() == a.weight_b(), "inv_B = Σ(i - a_i - χ(a_i < 0))"),
        (s.nmin_b() == n - a.max_set().len(), "nmin_B = n - |Max a|"),
        (s.sor_b() == b.weight_b(), "sor_B = Σ(i - b_i - χ(b_i < 0))"),
        (
            s.reflection_length_b() == n - b.max_set().len(),
            "l'_B = n - |Max b|",
        ),
    ];
    checks
        .iter()
        .find(|(ok, _)| !ok)
        .map(|(_, what)| format!("{what} fails at {s} (A-code {a}, B-code {b})"))
}

fn code_formulas_d(s: &SignedPermutation) -> Option<String> {
    let n = s.n();
    let d = DElement::new_unchecked(s.clone());
    let e = perm_d::ecode_encode(&d);
    let f = perm_d::fcode_encode(&d);
    let checks = [
        (
            d.inv_d() == e.weight_d(),
            "inv_D = Σ(r - e_r - 2χ(e_r < 0))",
        ),
        (
            d.nmin_d() == n - e.fixed_count(),
            "nmin_D = n - #{r : e_r = r}",
        ),
        (
            d.sor_d() == f.weight_d(),
            "sor_D = Σ(r - f_r - 2χ(f_r < 0))",
        ),
        (
            d.reflection_length_d() == n - f.fixed_count(),
            "ñ'_D = n - #{r : f_r = r}",
        ),
        (
            d.cosort_factorization().product() == d,
            "cosort factorization reproduces σ",
        ),
        (
            s.selection_sort_factorization().product() == *s,
            "sort factorization reproduces σ",
        ),
    ];
    checks
        .iter()
        .find(|(ok, _)| !ok)
        .map(|(_, what)| format!("{what} fails at {s} (E-code {e}, F-code {f})"))
}

/// Group-to-code round trips pointwise, then code-to-group over the whole
/// code space. The code space has the group's order, so the two together
/// show each pair of maps is a bijection.
fn roundtrip_check(report: &mut VerifyReport, group: Group, workers: usize) {
    let n = group.n;
    match group.family {
        Family::A => {
            pointwise(report, group, workers, |s| {
                let p = s.unsigned();
                let ok = perm_a::lehmer_decode(&perm_a::lehmer_encode(&p)) == p
                    && perm_a::acode_decode(&perm_a::acode_encode(&p)) == p
                    && perm_a::bcode_decode(&perm_a::bcode_encode(&p)) == p
                    && perm_a::phi_inverse(&perm_a::phi(&p)) == p;
                (!ok).then(|| format!("round trip fails at {p}"))
            });
            if let Some(c) = code_space_a(n).find(|c| {
                perm_a::lehmer_encode(&perm_a::lehmer_decode(c)) != *c
                    || perm_a::acode_encode(&perm_a::acode_decode(c)) != *c
                    || perm_a::bcode_encode(&perm_a::bcode_decode(c)) != *c
            }) {
                report.fail(format!("code round trip fails at {c}"));
            }
        }
        Family::B => {
            pointwise(report, group, workers, |s| {
                let ok = perm_b::lehmer_b_decode(&perm_b::lehmer_b_encode(s)) == *s
                    && perm_b::acode_b_decode(&perm_b::acode_b_encode(s)) == *s
                    && perm_b::bcode_b_decode(&perm_b::bcode_b_encode(s)) == *s
                    && perm_b::psi_inverse(&perm_b::psi(s)) == *s;
                (!ok).then(|| format!("round trip fails at {s}"))
            });
            if let Some(c) = code_space_b(n).find(|c| {
                perm_b::lehmer_b_encode(&perm_b::lehmer_b_decode(c)) != *c
                    || perm_b::acode_b_encode(&perm_b::acode_b_decode(c)) != *c
                    || perm_b::bcode_b_encode(&perm_b::bcode_b_decode(c)) != *c
            }) {
                report.fail(format!("code round trip fails at {c}"));
            }
        }
        Family::D => {
            pointwise(report, group, workers, |s| {
                let d = DElement::new_unchecked(s.clone());
                let ok = perm_d::ecode_decode(&perm_d::ecode_encode(&d)) == d
                    && perm_d::fcode_decode(&perm_d::fcode_encode(&d)) == d
                    && perm_d::rho_inverse(&perm_d::rho(&d)) == d;
                (!ok).then(|| format!("round trip fails at {s}"))
            });
            if let Some(c) = code_space_d(n).find(|c| {
                perm_d::ecode_encode(&perm_d::ecode_decode(c)) != *c
                    || perm_d::fcode_encode(&perm_d::fcode_decode(c)) != *c
            }) {
                report.fail(format!("code round trip fails at {c}"));
            }
        }
    }
}

/// Compares BFS word length with a statistic. `Cyc`/`CycB` stand for
/// `n - cyc` and `n - cyc_B`, the cycle-count form of reflection length.
fn cayley_check(
    report: &mut VerifyReport,
    group: Group,
    oracles: &[(GeneratingSet, Statistic)],
) -> Result<()> {
    let n = group.n;
    for &(gens, stat) in oracles {
        let table = CayleyTable::build(group, gens)?;
        for (rank, s) in group.elements().enumerate() {
            let bfs = table.by_rank(rank as u64);
            let value = match stat {
                Statistic::Cyc | Statistic::CycB => n - stat.eval(&s),
                _ => stat.eval(&s),
            };
            if bfs != value {
                let label = match stat {
                    Statistic::Cyc | Statistic::CycB => format!("n - {stat}"),
                    _ => stat.to_string(),
                };
                report.fail(format!(
                    "{gens} distance of {s} is {bfs} but {label} = {value}"
                ));
                break;
            }
        }
    }
    report.elements_checked = group.order();
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse_and_families() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert_eq!(Check::TypeDCayley.family(), Family::D);
        assert_eq!(Check::TypeBGf.family(), Family::B);
        assert_eq!(Check::TypeARoundtrip.family(), Family::A);
        assert!("type-e-gf".parse::<Check>().is_err());
    }

    #[test]
    fn every_check_passes_small() {
        for c in Check::ALL {
            for n in c.family().min_degree()..=4 {
                let r = run_check(c, n, 2).unwrap();
                assert!(
                    r.passed,
                    "{c} at n = {n}: {:?} {:?}",
                    r.counterexample, r.residual
                );
                assert_eq!(
                    r.elements_checked,
                    Group::new(c.family(), n).unwrap().order()
                );
            }
        }
    }

    #[test]
    fn d2_anchor() {
        let r = run_check(Check::TypeDBivariate, 2, 1).unwrap();
        assert_eq!(r.polynomial.unwrap().to_string(), "1 + 2*q*t + q^2*t");
    }

    #[test]
    fn mismatch_reports_residual() {
        let mut r = VerifyReport::new(Check::TypeAGf, Group::new(Family::A, 2).unwrap());
        let p = BivariatePolynomial::monomial(1, 1, 2);
        let q = BivariatePolynomial::monomial(1, 1, 1);
        r.compare("x", &p, &q);
        assert!(!r.passed);
        assert_eq!(
            r.residual,
            vec![ResidualTerm {
                q: 1,
                t: 1,
                actual: 2,
                expected: 1
            }]
        );
    }
}
