//! Exact bivariate polynomials in `q` and `t` with nonnegative integer
//! coefficients, and the product formulas for the joint distributions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One term `count · q^q · t^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub q: u32,
    pub t: u32,
    pub count: u64,
}

/// Sparse polynomial keyed by `(t-exponent, q-exponent)`, which is also the
/// canonical output order. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), u64>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn t() -> Self {
        Self::monomial(0, 1, 1)
    }

    /// `count · q^q_exp · t^t_exp`.
    pub fn monomial(q_exp: u32, t_exp: u32, count: u64) -> Self {
        let mut p = Self::zero();
        if count != 0 {
            p.terms.insert((t_exp, q_exp), count);
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = Term>) -> Result<Self> {
        let mut p = Self::zero();
        for term in terms {
            p.add_term(term.q, term.t, term.count)?;
        }
        Ok(p)
    }

    /// Adds `count · q^q_exp · t^t_exp` in place.
    pub fn add_term(&mut self, q_exp: u32, t_exp: u32, count: u64) -> Result<()> {
        if count == 0 {
            return Ok(());
        }
        let slot = self.terms.entry((t_exp, q_exp)).or_insert(0);
        *slot = slot.checked_add(count).ok_or(Error::Overflow)?;
        Ok(())
    }

    pub fn coeff(&self, q_exp: u32, t_exp: u32) -> u64 {
        self.terms.get(&(t_exp, q_exp)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms sorted by `(t, q)`.
    pub fn terms(&self) -> impl Iterator<Item = Term> + '_ {
        self.terms
            .iter()
            .map(|(&(t, q), &count)| Term { q, t, count })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for term in other.terms() {
            out.add_term(term.q, term.t, term.count)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for a in self.terms() {
            for b in other.terms() {
                let count = a.count.checked_mul(b.count).ok_or(Error::Overflow)?;
                let q = a.q.checked_add(b.q).ok_or(Error::Overflow)?;
                let t = a.t.checked_add(b.t).ok_or(Error::Overflow)?;
                out.add_term(q, t, count)?;
            }
        }
        Ok(out)
    }

    /// Specializes `t = 1`, summing coefficients per power of `q`.
    pub fn eval_t1(&self) -> Self {
        let mut out = Self::zero();
        for term in self.terms() {
            out.add_term(term.q, 0, term.count)
                .expect("t = 1 specialization of a valid polynomial cannot exceed its total");
        }
        out
    }

    /// Value at `q = t = 1`.
    pub fn total(&self) -> Result<u64> {
        self.terms
            .values()
            .try_fold(0u64, |acc, &c| acc.checked_add(c))
            .ok_or(Error::Overflow)
    }

    /// Terms where `self` and `other` disagree, as `(q, t, self, other)`.
    pub fn residual(&self, other: &Self) -> Vec<(u32, u32, u64, u64)> {
        let mut keys: Vec<(u32, u32)> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter_map(|(t, q)| {
                let (a, b) = (self.coeff(q, t), other.coeff(q, t));
                (a != b).then_some((q, t, a, b))
            })
            .collect()
    }
}

/// Panics on coefficient overflow; use [`BivariatePolynomial::checked_add`] to handle it.
impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: Self) -> BivariatePolynomial {
        self.checked_add(rhs)
            .expect("polynomial coefficient overflow")
    }
}

impl Add for BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: Self) -> BivariatePolynomial {
        &self + &rhs
    }
}

/// Panics on coefficient overflow; use [`BivariatePolynomial::checked_mul`] to handle it.
impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: Self) -> BivariatePolynomial {
        self.checked_mul(rhs)
            .expect("polynomial coefficient overflow")
    }
}

impl Mul for BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: Self) -> BivariatePolynomial {
        &self * &rhs
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Canonical text, e.g. `1 + 2*q*t + q^2*t`.
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, term) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mut factors = Vec::with_capacity(3);
            if term.count != 1 || (term.q == 0 && term.t == 0) {
                factors.push(term.count.to_string());
            }
            for (name, exp) in [("q", term.q), ("t", term.t)] {
                match exp {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolynomialDoc {
    terms: Vec<Term>,
}

/// JSON form: `{"terms":[{"q":0,"t":0,"count":1}, …]}`, sorted by `(t, q)`.
impl Serialize for BivariatePolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolynomialDoc {
            terms: self.terms().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BivariatePolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = PolynomialDoc::deserialize(deserializer)?;
        BivariatePolynomial::from_terms(doc.terms).map_err(serde::de::Error::custom)
    }
}

/// `[m]_q = 1 + q + ⋯ + q^{m-1}`.
pub fn q_int(m: u32) -> Result<BivariatePolynomial> {
    if m == 0 {
        return Err(Error::QIntZero);
    }
    Ok(q_range(0, m - 1, 0))
}

/// `q^lo + ⋯ + q^hi`, all times `t^t_exp`.
fn q_range(lo: u32, hi: u32, t_exp: u32) -> BivariatePolynomial {
    let mut p = BivariatePolynomial::zero();
    for e in lo..=hi {
        p.add_term(e, t_exp, 1).expect("unit coefficients");
    }
    p
}

fn product(mut factors: impl Iterator<Item = BivariatePolynomial>) -> Result<BivariatePolynomial> {
    factors.try_fold(BivariatePolynomial::one(), |acc, f| acc.checked_mul(&f))
}

fn require(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::DegreeTooSmall { n, min });
    }
    Ok(())
}

/// `t (t + q) (t + q + q^2) ⋯ (t + q + ⋯ + q^{n-1})`.
pub fn gf_type_a(n: usize) -> Result<BivariatePolynomial> {
    require(n, 1)?;
    product((1..=n as u32).map(|i| {
        let mut f = BivariatePolynomial::t();
        if i > 1 {
            f = &f + &q_range(1, i - 1, 0);
        }
        f
    }))
}

/// `∏_{i=1}^n (1 + t[2i]_q - t) = ∏ (1 + t(q + ⋯ + q^{2i-1}))`.
pub fn gf_type_b(n: usize) -> Result<BivariatePolynomial> {
    require(n, 1)?;
    product((1..=n as u32).map(|i| &BivariatePolynomial::one() + &q_range(1, 2 * i - 1, 1)))
}

/// `∏_{r=1}^{n-1} (1 + q^r t + q t [2r]_q)`.
pub fn gf_type_d_bivariate(n: usize) -> Result<BivariatePolynomial> {
    require(n, 2)?;
    product((1..n as u32).map(|r| {
        let mut f = BivariatePolynomial::one();
        f.add_term(r, 1, 1).expect("small");
        &f + &q_range(1, 2 * r, 1)
    }))
}

/// `[n]_q ∏_{r=1}^{n-1} [2r]_q`.
pub fn gf_type_d_univariate(n: usize) -> Result<BivariatePolynomial> {
    require(n, 1)?;
    let head = q_int(n as u32)?;
    let tail = product((1..n as u32).map(|r| q_int(2 * r).expect("positive")))?;
    head.checked_mul(&tail)
}
