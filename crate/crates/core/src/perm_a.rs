//! Permutations of `[n]`: statistics, the Lehmer, A- and B-codes, the
//! sorting factorization, and the bijection `phi`.
//!
//! Positions and values are 1-based everywhere. Products are read right to
//! left: `(p * s)(i) = p(s(i))`.

use std::fmt;

use crate::error::{Error, Result};
use crate::set::ValueSet;

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Validates that `images` is a bijection of `[n]`, `n = images.len()`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyPermutation);
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::NotAPermutation {
                    n,
                    reason: format!("value {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation {
                    n,
                    reason: format!("value {v} repeated"),
                });
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::DegreeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation { images: inv }
    }

    /// Right multiplication by the transposition of places `i` and `j`.
    pub fn swap_places(&mut self, i: usize, j: usize) {
        self.images.swap(i - 1, j - 1);
    }

    /// Number of pairs `i < j` with `σ_i > σ_j`.
    pub fn inv(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .sum()
    }

    pub fn cycles(&self) -> CycleDecomposition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            cycles.push(cycle);
        }
        CycleDecomposition { cycles }
    }

    pub fn cyc(&self) -> usize {
        self.cycles().len()
    }

    /// `Cyc σ`, the set of cycle minima.
    pub fn cycle_minima(&self) -> ValueSet {
        self.cycles().minima()
    }

    /// Reflection length `n - cyc`.
    pub fn reflection_length(&self) -> usize {
        self.n() - self.cyc()
    }

    pub fn rmil(&self) -> ValueSet {
        rmil_set(&self.images)
    }

    pub fn lmap(&self) -> ValueSet {
        lmap_set(&self.images)
    }

    pub fn rl_min(&self) -> usize {
        self.rmil().len()
    }

    pub fn lr_max(&self) -> usize {
        self.lmap().len()
    }

    pub fn nmin(&self) -> usize {
        self.n() - self.rl_min()
    }

    /// The unique factorization `σ = (i_1,j_1)⋯(i_k,j_k)` with `i_r < j_r`
    /// and `j_1 < ⋯ < j_k`.
    pub fn sort_factorization(&self) -> SortFactorization {
        let mut w = self.clone();
        let mut inv = self.inverse();
        let mut factors = Vec::new();
        for j in (2..=self.n()).rev() {
            if w.apply(j) == j {
                continue;
            }
            let i = inv.apply(j);
            factors.push((i, j));
            // Keep the inverse in step: swapping places i, j of w swaps the
            // values w(i), w(j) in the inverse.
            let (vi, vj) = (w.apply(i), w.apply(j));
            inv.images.swap(vi - 1, vj - 1);
            w.swap_places(i, j);
        }
        factors.reverse();
        SortFactorization {
            n: self.n(),
            factors,
        }
    }

    /// The sorting index `Σ (j_r - i_r)` over [`Self::sort_factorization`].
    pub fn sor(&self) -> usize {
        self.sort_factorization().weight()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, self.images.iter())
    }
}

pub(crate) fn write_word<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    for (k, x) in items.enumerate() {
        if k > 0 {
            write!(f, " ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Canonical cycle form: each cycle starts at its minimum, cycles are
/// sorted by minimum, fixed points are kept. `(a_1 … a_k)` means
/// `σ(a_1) = a_2, …, σ(a_k) = a_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn minima(&self) -> ValueSet {
        self.cycles.iter().map(|c| c[0]).collect()
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            write!(f, "(")?;
            write_word(f, c.iter())?;
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Transpositions `(i_r, j_r)`, `i_r < j_r`, positions `j_r` strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SortFactorization {
    n: usize,
    factors: Vec<(usize, usize)>,
}

impl SortFactorization {
    pub fn factors(&self) -> &[(usize, usize)] {
        &self.factors
    }

    pub fn weight(&self) -> usize {
        self.factors.iter().map(|&(i, j)| j - i).sum()
    }

    /// Multiplies the factors back together.
    pub fn product(&self) -> Permutation {
        let mut p = Permutation::identity(self.n);
        for &(i, j) in &self.factors {
            p.swap_places(i, j);
        }
        p
    }
}

impl fmt::Display for SortFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(i, j) in &self.factors {
            write!(f, "({i},{j})")?;
        }
        Ok(())
    }
}

/// An element of `SE_n`: `1 <= c_i <= i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeA {
    entries: Vec<usize>,
}

impl CodeA {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyPermutation);
        }
        for (k, &c) in entries.iter().enumerate() {
            if c < 1 || c > k + 1 {
                return Err(Error::CodeOutOfRange {
                    position: k + 1,
                    value: c as i64,
                    range: "[1, i]",
                });
            }
        }
        Ok(CodeA { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// `Max c = {i : c_i = i}`.
    pub fn max_set(&self) -> ValueSet {
        max_set(&self.entries)
    }

    /// `Σ (i - c_i)`.
    pub fn deficiency(&self) -> usize {
        self.entries
            .iter()
            .enumerate()
            .map(|(k, &c)| k + 1 - c)
            .sum()
    }
}

impl fmt::Debug for CodeA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CodeA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_code(f, self.entries.iter())
    }
}

pub(crate) fn write_code<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    write!(f, "(")?;
    for (k, x) in items.enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// Places `i` with `x_j < x_i` for every `j < i`.
pub fn lmap_set(word: &[usize]) -> ValueSet {
    let mut out = ValueSet::empty();
    let mut max = 0;
    for (k, &x) in word.iter().enumerate() {
        if k == 0 || x > max {
            out.insert(k + 1);
        }
        max = max.max(x);
    }
    out
}

/// Letters `x_i` with `x_j > x_i` for every `j > i`.
pub fn rmil_set(word: &[usize]) -> ValueSet {
    let mut out = ValueSet::empty();
    let mut min = usize::MAX;
    for &x in word.iter().rev() {
        if x < min {
            out.insert(x);
        }
        min = min.min(x);
    }
    out
}

/// `{i : c_i = i}` for any integer word.
pub fn max_set<T: Copy + TryInto<usize>>(word: &[T]) -> ValueSet {
    word.iter()
        .enumerate()
        .filter(|&(k, &c)| c.try_into().ok() == Some(k + 1))
        .map(|(k, _)| k + 1)
        .collect()
}

/// `a_i = |{j <= i : σ_j <= σ_i}|`.
pub fn lehmer_encode(s: &Permutation) -> CodeA {
    let w = &s.images;
    let entries = (0..w.len())
        .map(|i| w[..=i].iter().filter(|&&x| x <= w[i]).count())
        .collect();
    CodeA { entries }
}

pub fn lehmer_decode(c: &CodeA) -> Permutation {
    // σ_i is the c_i-th smallest value among those not used by places > i.
    let n = c.n();
    let mut remaining: Vec<usize> = (1..=n).collect();
    let mut images = vec![0; n];
    for i in (0..n).rev() {
        images[i] = remaining.remove(c.entries[i] - 1);
    }
    Permutation { images }
}

/// `A-code σ = Leh σ⁻¹`.
pub fn acode_encode(s: &Permutation) -> CodeA {
    lehmer_encode(&s.inverse())
}

pub fn acode_decode(c: &CodeA) -> Permutation {
    lehmer_decode(c).inverse()
}

/// `b_i = σ^{-k}(i)` for the least `k >= 1` with `σ^{-k}(i) <= i`; the
/// nearest element `<= i` preceding `i` on its cycle.
pub fn bcode_encode(s: &Permutation) -> CodeA {
    let inv = s.inverse();
    let entries = (1..=s.n())
        .map(|i| {
            let mut x = inv.apply(i);
            while x > i {
                x = inv.apply(x);
            }
            x
        })
        .collect();
    CodeA { entries }
}

/// `σ = (b_1,1)(b_2,2)⋯(b_n,n)`, where `(i,i)` is the identity.
pub fn bcode_decode(c: &CodeA) -> Permutation {
    let mut p = Permutation::identity(c.n());
    for (k, &b) in c.entries.iter().enumerate() {
        p.swap_places(b, k + 1);
    }
    p
}

/// `phi = (B-code)⁻¹ ∘ A-code`; carries `(inv, rl-min, Lmap)` to `(sor, cyc, Lmap)`.
pub fn phi(s: &Permutation) -> Permutation {
    bcode_decode(&acode_encode(s))
}

pub fn phi_inverse(s: &Permutation) -> Permutation {
    acode_decode(&bcode_encode(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn code(v: &[usize]) -> CodeA {
        CodeA::new(v.to_vec()).unwrap()
    }

    #[test]
    fn compose_right_to_left() {
        assert_eq!(
            p(&[2, 1, 3]).compose(&p(&[1, 3, 2])).unwrap(),
            p(&[2, 3, 1])
        );
        let s = p(&[3, 1, 5, 2, 4]);
        assert_eq!(Permutation::identity(5).compose(&s).unwrap(), s);
        let q = p(&[2, 4, 1, 5, 3]);
        assert!(q.compose(&q.inverse()).unwrap().is_identity());
        assert_eq!(
            p(&[1, 2]).compose(&p(&[1, 2, 3])),
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
        assert_eq!(Permutation::new(vec![]), Err(Error::EmptyPermutation));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p(&[3, 1, 5, 2, 4]).inverse(), p(&[2, 4, 1, 5, 3]));
        assert!(Permutation::identity(4).inverse().is_identity());
        assert_eq!(p(&[2, 1]).inverse(), p(&[2, 1]));
    }

    #[test]
    fn inversions() {
        assert_eq!(Permutation::identity(6).inv(), 0);
        assert_eq!(p(&[3, 1, 5, 2, 4]).inv(), 4);
        for n in 1..8 {
            let rev = Permutation::new((1..=n).rev().collect()).unwrap();
            assert_eq!(rev.inv(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn cycle_examples() {
        let c = p(&[2, 4, 5, 1, 3]).cycles();
        assert_eq!(c.cycles(), &[vec![1, 2, 4], vec![3, 5]]);
        assert_eq!(c.minima().to_vec(), vec![1, 3]);
        assert_eq!(c.to_string(), "(1 2 4)(3 5)");
        assert_eq!(Permutation::identity(3).cycles().to_string(), "(1)(2)(3)");
        assert_eq!(p(&[2, 1, 4, 3]).cyc(), 2);
    }

    #[test]
    fn word_sets() {
        let w = [3, 1, 5, 2, 4];
        assert_eq!(rmil_set(&w).to_vec(), vec![1, 2, 4]);
        assert_eq!(lmap_set(&w).to_vec(), vec![1, 3]);
        let id: Vec<usize> = (1..=5).collect();
        assert_eq!(rmil_set(&id), ValueSet::full(5));
        assert_eq!(lmap_set(&id), ValueSet::full(5));
        let rev: Vec<usize> = (1..=5).rev().collect();
        assert_eq!(rmil_set(&rev).to_vec(), vec![1]);
        assert_eq!(lmap_set(&rev).to_vec(), vec![1]);
        // Repeated letters: strict comparisons.
        assert_eq!(rmil_set(&[1, 1, 3, 2, 3]).to_vec(), vec![1, 2, 3]);
        assert_eq!(lmap_set(&[1, 1, 3, 2, 3]).to_vec(), vec![1, 3]);
    }

    #[test]
    fn max_sets() {
        assert_eq!(code(&[1, 1, 3, 2, 3]).max_set().to_vec(), vec![1, 3]);
        assert_eq!(code(&[1, 2, 3, 4]).max_set(), ValueSet::full(4));
        assert_eq!(code(&[1, 1, 1, 1]).max_set().to_vec(), vec![1]);
    }

    #[test]
    fn code_validation() {
        assert!(CodeA::new(vec![1, 3]).is_err());
        assert!(CodeA::new(vec![0]).is_err());
        assert!(CodeA::new(vec![1, 2, 3]).is_ok());
    }

    #[test]
    fn lehmer_examples() {
        assert_eq!(lehmer_encode(&p(&[2, 4, 1, 5, 3])), code(&[1, 2, 1, 4, 3]));
        assert_eq!(
            lehmer_encode(&Permutation::identity(4)),
            code(&[1, 2, 3, 4])
        );
        assert_eq!(lehmer_decode(&code(&[1, 2, 1, 4, 3])), p(&[2, 4, 1, 5, 3]));
    }

    #[test]
    fn acode_examples() {
        assert_eq!(acode_encode(&p(&[3, 1, 5, 2, 4])), code(&[1, 2, 1, 4, 3]));
        assert_eq!(acode_encode(&Permutation::identity(3)), code(&[1, 2, 3]));
        assert_eq!(acode_decode(&code(&[1, 2, 1, 4, 3])), p(&[3, 1, 5, 2, 4]));
    }

    #[test]
    fn bcode_examples() {
        assert_eq!(bcode_encode(&p(&[2, 4, 5, 1, 3])), code(&[1, 1, 3, 2, 3]));
        assert_eq!(bcode_encode(&Permutation::identity(4)), code(&[1, 2, 3, 4]));
        assert_eq!(bcode_encode(&p(&[2, 1, 3])), code(&[1, 1, 3]));
        assert_eq!(bcode_decode(&code(&[1, 1, 3, 2, 3])), p(&[2, 4, 5, 1, 3]));
        assert!(bcode_decode(&code(&[1, 2, 3, 4, 5])).is_identity());
    }

    #[test]
    fn sorting_index() {
        let id = Permutation::identity(5);
        assert!(id.sort_factorization().factors().is_empty());
        assert_eq!(id.sor(), 0);
        let s = p(&[2, 4, 5, 1, 3]);
        let f = s.sort_factorization();
        assert_eq!(f.factors(), &[(1, 2), (2, 4), (3, 5)]);
        assert_eq!(f.to_string(), "(1,2)(2,4)(3,5)");
        assert_eq!(s.sor(), 5);
        assert_eq!(f.product(), s);
    }

    #[test]
    fn phi_examples() {
        assert!(phi(&Permutation::identity(4)).is_identity());
        let s = p(&[3, 1, 5, 2, 4]);
        let image = phi(&s);
        assert_eq!(image, p(&[3, 2, 5, 4, 1]));
        assert_eq!((s.inv(), s.rl_min()), (4, 3));
        assert_eq!((image.sor(), image.cyc()), (4, 3));
        assert_eq!(phi_inverse(&image), s);
    }
}
