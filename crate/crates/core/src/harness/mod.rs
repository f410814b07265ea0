//! Exhaustive enumeration of `S_n`, `B_n` and `D_n`, joint distributions of
//! statistics, and the verification suite built on them.
//!
//! Elements are indexed by a mixed-radix rank: the factorial-base rank of
//! the underlying permutation followed by the sign bits. Any rank range can
//! be unranked independently, which is what the parallel reductions split on.

mod cayley;
mod checks;
mod stats;

use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::thread;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm_a::CodeA;
use crate::perm_b::{CodeB, SignedPermutation};
use crate::perm_d::CodeD;

pub use cayley::{cayley_distance, CayleyTable, GeneratingSet, MAX_SEARCH_ORDER};
pub use checks::{run_check, Check, ResidualTerm, VerifyReport};
pub use stats::{
    joint_distribution, joint_distribution_parallel, set_pair_distribution, verify_transport,
    Bijection, SetPairDistribution, SetStatistic, Statistic, TransportReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    D,
}

impl Family {
    /// Largest degree accepted for enumeration.
    pub fn max_degree(self) -> usize {
        match self {
            Family::A => 9,
            Family::B | Family::D => 8,
        }
    }

    pub fn min_degree(self) -> usize {
        match self {
            Family::A | Family::B => 1,
            Family::D => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" | "S" | "s" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Unknown {
                kind: "family",
                name: other.to_string(),
            }),
        }
    }
}

/// One of `S_n`, `B_n`, `D_n` at a supported degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Group {
    pub family: Family,
    pub n: usize,
}

impl Group {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if n < family.min_degree() {
            return Err(Error::DegreeTooSmall {
                n,
                min: family.min_degree(),
            });
        }
        if n > family.max_degree() {
            return Err(Error::UnsupportedSize {
                family,
                n,
                max: family.max_degree(),
            });
        }
        Ok(Group { family, n })
    }

    pub fn order(&self) -> u64 {
        let fact: u64 = (1..=self.n as u64).product();
        match self.family {
            Family::A => fact,
            Family::B => fact << self.n,
            Family::D => fact << (self.n - 1),
        }
    }

    fn sign_bits(&self) -> usize {
        match self.family {
            Family::A => 0,
            Family::B => self.n,
            Family::D => self.n - 1,
        }
    }

    /// The element of the given rank, `0 <= rank < order`.
    pub fn unrank(&self, rank: u64) -> SignedPermutation {
        debug_assert!(rank < self.order());
        let bits = self.sign_bits();
        let mask = rank & ((1u64 << bits) - 1);
        let mut images: Vec<i32> = unrank_permutation(self.n, rank >> bits)
            .into_iter()
            .map(|v| v as i32)
            .collect();
        for (k, v) in images.iter_mut().enumerate().take(bits) {
            if mask >> k & 1 == 1 {
                *v = -*v;
            }
        }
        if self.family == Family::D && mask.count_ones() % 2 == 1 {
            images[self.n - 1] = -images[self.n - 1];
        }
        SignedPermutation::from_images_unchecked(images)
    }

    /// Inverse of [`Self::unrank`]; `None` if `s` is not in the group.
    pub fn rank(&self, s: &SignedPermutation) -> Option<u64> {
        if !self.contains(s) {
            return None;
        }
        let bits = self.sign_bits();
        let mask = s
            .images()
            .iter()
            .take(bits)
            .enumerate()
            .filter(|(_, &v)| v < 0)
            .fold(0u64, |m, (k, _)| m | 1 << k);
        Some(rank_permutation(s.unsigned().images()) << bits | mask)
    }

    pub fn contains(&self, s: &SignedPermutation) -> bool {
        s.n() == self.n
            && match self.family {
                Family::A => s.negatives() == 0,
                Family::B => true,
                Family::D => s.negatives().is_multiple_of(2),
            }
    }

    pub(crate) fn check_member(&self, s: &SignedPermutation) -> Result<()> {
        if s.n() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: s.n(),
            });
        }
        if !self.contains(s) {
            return Err(Error::NotInGroup {
                family: self.family,
                n: self.n,
                element: s.to_string(),
            });
        }
        Ok(())
    }

    /// Every element exactly once, in rank order.
    pub fn elements(&self) -> impl Iterator<Item = SignedPermutation> + '_ {
        self.elements_in(0..self.order())
    }

    /// The elements whose ranks fall in `range`.
    pub fn elements_in(&self, range: Range<u64>) -> impl Iterator<Item = SignedPermutation> + '_ {
        assert!(range.end <= self.order());
        range.map(move |r| self.unrank(r))
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.n)
    }
}

/// The permutation of `[n]` with the given factorial-base rank (lexicographic order).
fn unrank_permutation(n: usize, mut rank: u64) -> Vec<usize> {
    let mut radix: u64 = (1..n as u64).product();
    let mut remaining: Vec<usize> = (1..=n).collect();
    let mut out = Vec::with_capacity(n);
    for k in (1..=n).rev() {
        let digit = (rank / radix) as usize;
        rank %= radix;
        out.push(remaining.remove(digit));
        if k > 1 {
            radix /= (k - 1) as u64;
        }
    }
    out
}

fn rank_permutation(images: &[usize]) -> u64 {
    let n = images.len();
    let mut rank = 0u64;
    for i in 0..n {
        let smaller_later = images[i + 1..].iter().filter(|&&x| x < images[i]).count() as u64;
        rank = rank * (n - i) as u64 + smaller_later;
    }
    rank
}

/// Splits `0..total` into at most `workers` contiguous ranges, folds each on
/// its own thread, and merges the partial results in range order.
pub fn fold_ranges<T, F, M>(total: u64, workers: usize, fold: F, merge: M) -> T
where
    T: Send,
    F: Fn(Range<u64>) -> T + Sync,
    M: Fn(T, T) -> T,
{
    let workers = workers.max(1) as u64;
    if workers == 1 || total < 2 {
        return fold(0..total);
    }
    let chunk = total.div_ceil(workers);
    let ranges: Vec<Range<u64>> = (0..workers)
        .map(|w| (w * chunk).min(total)..((w + 1) * chunk).min(total))
        .filter(|r| !r.is_empty())
        .collect();
    let fold = &fold;
    let parts: Vec<T> = thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|r| scope.spawn(move || fold(r)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    parts.into_iter().reduce(merge).expect("at least one range")
}

/// Mixed-radix enumeration of a code space with radix `radix(i)` at place `i`.
fn mixed_radix(n: usize, radix: impl Fn(usize) -> usize) -> impl Iterator<Item = Vec<usize>> {
    let radices: Vec<usize> = (1..=n).map(radix).collect();
    let total: usize = radices.iter().product();
    (0..total).map(move |mut r| {
        let mut digits = vec![0; n];
        for k in (0..n).rev() {
            digits[k] = r % radices[k];
            r /= radices[k];
        }
        digits
    })
}

/// `SE_n`: `1 <= c_i <= i`.
pub fn code_space_a(n: usize) -> impl Iterator<Item = CodeA> {
    mixed_radix(n, |i| i)
        .map(|d| CodeA::new(d.into_iter().map(|x| x + 1).collect()).expect("in range"))
}

fn signed_digit(i: usize, d: usize) -> i32 {
    if d < i {
        d as i32 + 1
    } else {
        -((d - i) as i32 + 1)
    }
}

/// `SE^B_n`: `c_i ∈ [-i, i] \ {0}`.
pub fn code_space_b(n: usize) -> impl Iterator<Item = CodeB> {
    mixed_radix(n, |i| 2 * i).map(|d| {
        CodeB::from_entries_unchecked(
            d.into_iter()
                .enumerate()
                .map(|(k, x)| signed_digit(k + 1, x))
                .collect(),
        )
    })
}

/// `c_1 = 1`, `c_i ∈ [-i, i] \ {0}` for `i >= 2`.
pub fn code_space_d(n: usize) -> impl Iterator<Item = CodeD> {
    mixed_radix(n, |i| if i == 1 { 1 } else { 2 * i }).map(|d| {
        CodeD::from_entries_unchecked(
            d.into_iter()
                .enumerate()
                .map(|(k, x)| signed_digit(k + 1, x))
                .collect(),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn orders() {
        assert_eq!(Group::new(Family::A, 3).unwrap().elements().count(), 6);
        assert_eq!(Group::new(Family::B, 2).unwrap().elements().count(), 8);
        assert_eq!(Group::new(Family::D, 3).unwrap().elements().count(), 24);
    }

    #[test]
    fn size_limits_refused() {
        assert!(matches!(
            Group::new(Family::A, 10),
            Err(Error::UnsupportedSize { max: 9, .. })
        ));
        assert!(Group::new(Family::B, 9).is_err());
        assert!(Group::new(Family::D, 1).is_err());
        assert!(Group::new(Family::A, 0).is_err());
    }

    #[test]
    fn rank_unrank_bijective() {
        for (family, n) in [
            (Family::A, 5),
            (Family::B, 4),
            (Family::D, 4),
            (Family::D, 2),
        ] {
            let g = Group::new(family, n).unwrap();
            let mut seen = HashSet::new();
            for r in 0..g.order() {
                let s = g.unrank(r);
                assert!(g.contains(&s));
                assert_eq!(g.rank(&s), Some(r));
                assert!(seen.insert(s));
            }
        }
    }

    #[test]
    fn rank_rejects_outsiders() {
        let d = Group::new(Family::D, 2).unwrap();
        let odd = SignedPermutation::new(vec![-1, 2]).unwrap();
        assert_eq!(d.rank(&odd), None);
        let a = Group::new(Family::A, 2).unwrap();
        assert_eq!(a.rank(&odd), None);
    }

    #[test]
    fn code_spaces() {
        assert_eq!(code_space_a(4).count(), 24);
        assert_eq!(code_space_b(3).count(), 48);
        assert_eq!(code_space_d(3).count(), 24);
        assert!(code_space_b(3).all(|c| CodeB::new(c.entries().to_vec()).is_ok()));
        assert!(code_space_d(4).all(|c| CodeD::new(c.entries().to_vec()).is_ok()));
        let distinct: HashSet<_> = code_space_b(3).collect();
        assert_eq!(distinct.len(), 48);
    }

    #[test]
    fn fold_ranges_matches_sequential() {
        let sum = |r: Range<u64>| r.map(|x| x * x).sum::<u64>();
        for workers in [1, 2, 3, 7, 64] {
            assert_eq!(fold_ranges(1000, workers, sum, |a, b| a + b), sum(0..1000));
        }
        assert_eq!(fold_ranges(1, 4, sum, |a, b| a + b), 0);
    }
}
