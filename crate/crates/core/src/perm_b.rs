//! Signed permutations (the hyperoctahedral group `B_n`).
//!
//! A bar is a minus sign: `σ(-i) = -σ(i)`. The reflections `T^B` are the
//! transpositions `(i,j)`, `1 <= i < j`, and the signed transpositions
//! `(ī,j)`, `1 <= i <= j`. This module covers the selection-sort
//! factorization and `sor_B`, `inv_B`, signed cycles, the type-B set-valued
//! statistics, the signed Lehmer, A- and B-codes, and the bijection `psi`.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm_a::{write_code, write_word, Permutation};
use crate::set::ValueSet;

/// A signed permutation in one-line notation, `images[i-1] = σ(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    /// Validates that the absolute values form a permutation of `[n]`.
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyPermutation);
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n {
                return Err(Error::NotAPermutation {
                    n,
                    reason: format!("value {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[a], true) {
                return Err(Error::NotAPermutation {
                    n,
                    reason: format!("absolute value {a} repeated"),
                });
            }
        }
        Ok(SignedPermutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<i32>) -> Self {
        debug_assert!(SignedPermutation::new(images.clone()).is_ok());
        SignedPermutation { images }
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (1..=n as i32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// `σ(x)` for any `x ∈ ±[n]`.
    pub fn apply(&self, x: i32) -> i32 {
        let v = self.images[x.unsigned_abs() as usize - 1];
        if x < 0 {
            -v
        } else {
            v
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &v)| v == k as i32 + 1)
    }

    /// `N(σ)`, the number of negative entries.
    pub fn negatives(&self) -> usize {
        self.images.iter().filter(|&&v| v < 0).count()
    }

    /// The underlying unsigned permutation `|σ|`.
    pub fn unsigned(&self) -> Permutation {
        Permutation::from_images_unchecked(
            self.images
                .iter()
                .map(|v| v.unsigned_abs() as usize)
                .collect(),
        )
    }

    /// `Some` when every entry is positive.
    pub fn to_unsigned(&self) -> Option<Permutation> {
        self.images.iter().all(|&v| v > 0).then(|| self.unsigned())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        if self.n() != other.n() {
            return Err(Error::DegreeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(SignedPermutation {
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        })
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut inv = vec![0; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            let place = k as i32 + 1;
            inv[v.unsigned_abs() as usize - 1] = if v < 0 { -place } else { place };
        }
        SignedPermutation { images: inv }
    }

    /// Right multiplication `σ ← σ · t`.
    pub fn apply_transposition(&mut self, t: TranspositionB) -> Result<()> {
        t.validate(self.n())?;
        self.mul_transposition(t);
        Ok(())
    }

    pub(crate) fn mul_transposition(&mut self, t: TranspositionB) {
        let j = t.j - 1;
        match t.kind() {
            TranspositionKind::Identity => {}
            TranspositionKind::Plain(i) => self.images.swap(i - 1, j),
            TranspositionKind::Signed(i) if i == t.j => self.images[j] = -self.images[j],
            TranspositionKind::Signed(i) => {
                self.images.swap(i - 1, j);
                self.images[i - 1] = -self.images[i - 1];
                self.images[j] = -self.images[j];
            }
        }
    }

    pub(crate) fn negate_place(&mut self, place: usize) {
        self.images[place - 1] = -self.images[place - 1];
    }

    /// `|{i<j : σ_i > σ_j}| + |{i<=j : -σ_i > σ_j}|`.
    pub fn inv_b(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i..w.len() {
                if j > i && w[i] > w[j] {
                    count += 1;
                }
                if -w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// The unique `T^B` factorization with increasing positions, found by
    /// fixing `n, n-1, …, 1` in turn.
    pub fn selection_sort_factorization(&self) -> FactorizationB {
        let mut w = self.clone();
        let mut factors = Vec::new();
        for j in (1..=self.n()).rev() {
            let jj = j as i32;
            if w.apply(jj) == jj {
                continue;
            }
            let a = w.preimage(jj);
            let t = TranspositionB { a, j };
            factors.push(t);
            w.mul_transposition(t);
        }
        factors.reverse();
        FactorizationB {
            n: self.n(),
            factors,
        }
    }

    /// `σ⁻¹(x)` without building the inverse.
    pub(crate) fn preimage(&self, x: i32) -> i32 {
        let a = x.unsigned_abs() as i32;
        for (k, &v) in self.images.iter().enumerate() {
            if v.abs() == a {
                let place = k as i32 + 1;
                return if v == x { place } else { -place };
            }
        }
        unreachable!("value {x} missing from a signed permutation")
    }

    /// `Σ (j_r - i_r - χ(i_r < 0))` over the selection-sort factorization.
    pub fn sor_b(&self) -> usize {
        self.selection_sort_factorization().weight_b()
    }

    pub fn signed_cycles(&self) -> SignedCycleDecomposition {
        let cycles = self
            .unsigned()
            .cycles()
            .cycles()
            .iter()
            .map(|values| {
                let barred: ValueSet = values
                    .iter()
                    .copied()
                    .filter(|&v| self.images[self.unsigned_preimage(v) - 1] < 0)
                    .collect();
                SignedCycle {
                    values: values.clone(),
                    barred,
                }
            })
            .collect();
        SignedCycleDecomposition { cycles }
    }

    fn unsigned_preimage(&self, v: usize) -> usize {
        self.images
            .iter()
            .position(|x| x.unsigned_abs() as usize == v)
            .expect("valid signed permutation")
            + 1
    }

    /// Number of balanced cycles.
    pub fn cyc_b(&self) -> usize {
        self.signed_cycles().balanced_count()
    }

    /// `Cyc_B σ`: the least absolute value of each balanced cycle.
    pub fn cyc_b_set(&self) -> ValueSet {
        self.signed_cycles().balanced_minima()
    }

    /// `l'_B = n - cyc_B`.
    pub fn reflection_length_b(&self) -> usize {
        self.n() - self.cyc_b()
    }

    pub fn lmap_b(&self) -> ValueSet {
        lmap_b_set(&self.images)
    }

    pub fn rmil_b(&self) -> ValueSet {
        rmil_b_set(&self.images)
    }

    /// `|{i : σ_i > |σ_j| for some j > i}| + N(σ)`.
    pub fn nmin_b(&self) -> usize {
        larger_than_some_later(&self.images) + self.negatives()
    }

    /// `|{i : 0 < σ_i < |σ_j| for some j < i}| + N(σ)`.
    pub fn nmax_b(&self) -> usize {
        let w = &self.images;
        let mut max_abs = 0;
        let mut count = 0;
        for &x in w {
            if x > 0 && x < max_abs {
                count += 1;
            }
            max_abs = max_abs.max(x.abs());
        }
        count + self.negatives()
    }

    pub fn stats_b(&self) -> StatsB {
        let rl_min_b = self.rmil_b().len();
        let lr_max_b = self.lmap_b().len();
        let stats = StatsB {
            nmin_b: self.nmin_b(),
            nmax_b: self.nmax_b(),
            rl_min_b,
            lr_max_b,
            negatives: self.negatives(),
        };
        debug_assert_eq!(stats.nmin_b, self.n() - rl_min_b);
        debug_assert_eq!(stats.nmax_b, self.n() - lr_max_b);
        stats
    }
}

/// `|{i : w_i > |w_j| for some j > i}|`.
pub(crate) fn larger_than_some_later(w: &[i32]) -> usize {
    let mut min_abs = i32::MAX;
    let mut count = 0;
    for &x in w.iter().rev() {
        if x > min_abs {
            count += 1;
        }
        min_abs = min_abs.min(x.abs());
    }
    count
}

impl From<&Permutation> for SignedPermutation {
    fn from(p: &Permutation) -> Self {
        SignedPermutation {
            images: p.images().iter().map(|&v| v as i32).collect(),
        }
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, self.images.iter())
    }
}

/// The integer-valued companions of `Lmap_B` and `Rmil_B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StatsB {
    pub nmin_b: usize,
    pub nmax_b: usize,
    pub rl_min_b: usize,
    pub lr_max_b: usize,
    pub negatives: usize,
}

/// `Lmap_B ω = {i : ω_i > |ω_j| for all j < i}`.
pub fn lmap_b_set(word: &[i32]) -> ValueSet {
    let mut out = ValueSet::empty();
    let mut max_abs = 0;
    for (k, &x) in word.iter().enumerate() {
        if x > max_abs {
            out.insert(k + 1);
        }
        max_abs = max_abs.max(x.abs());
    }
    out
}

/// `Rmil_B ω = {ω_i : 0 < ω_i < |ω_j| for all j > i}`.
pub fn rmil_b_set(word: &[i32]) -> ValueSet {
    let mut out = ValueSet::empty();
    let mut min_abs = i32::MAX;
    for &x in word.iter().rev() {
        if x > 0 && x < min_abs {
            out.insert(x as usize);
        }
        min_abs = min_abs.min(x.abs());
    }
    out
}

/// A reflection of `B_n`, written with its larger position `j` second.
///
/// * `1 <= a < j`: the transposition `(a,j)`.
/// * `-j <= a <= -1`: the signed transposition `(ā,j)`; `a = -j` negates `j`.
/// * `a = j`: the identity marker `(j,j)`, accepted in products only.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct TranspositionB {
    pub a: i32,
    pub j: usize,
}

pub(crate) enum TranspositionKind {
    Identity,
    Plain(usize),
    Signed(usize),
}

impl TranspositionB {
    pub fn new(a: i32, j: usize, n: usize) -> Result<Self> {
        let t = TranspositionB { a, j };
        t.validate(n)?;
        Ok(t)
    }

    fn validate(&self, n: usize) -> Result<()> {
        let j = self.j as i64;
        let a = self.a as i64;
        let ok = self.j >= 1 && self.j <= n && a != 0 && a >= -j && a <= j;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidTransposition { a, j: self.j, n })
        }
    }

    pub(crate) fn kind(&self) -> TranspositionKind {
        if self.a == self.j as i32 {
            TranspositionKind::Identity
        } else if self.a > 0 {
            TranspositionKind::Plain(self.a as usize)
        } else {
            TranspositionKind::Signed(self.a.unsigned_abs() as usize)
        }
    }

    pub fn is_identity(&self) -> bool {
        self.a == self.j as i32
    }

    /// `j - a - χ(a < 0)`.
    pub fn weight_b(&self) -> usize {
        (self.j as i64 - self.a as i64 - (self.a < 0) as i64) as usize
    }

    /// `j - a - 2χ(a < 0)`.
    pub fn weight_d(&self) -> usize {
        (self.j as i64 - self.a as i64 - 2 * (self.a < 0) as i64) as usize
    }
}

impl fmt::Display for TranspositionB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.j)
    }
}

/// `T^B` factors with strictly increasing positions and no identity markers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationB {
    n: usize,
    factors: Vec<TranspositionB>,
}

impl FactorizationB {
    pub fn factors(&self) -> &[TranspositionB] {
        &self.factors
    }

    pub fn weight_b(&self) -> usize {
        self.factors.iter().map(TranspositionB::weight_b).sum()
    }

    pub fn weight_d(&self) -> usize {
        self.factors.iter().map(TranspositionB::weight_d).sum()
    }

    pub fn product(&self) -> SignedPermutation {
        multiply(self.n, &self.factors)
    }
}

impl fmt::Display for FactorizationB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.factors {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// `t_1 t_2 ⋯ t_k` as a signed permutation of degree `n`.
pub fn multiply(n: usize, factors: &[TranspositionB]) -> SignedPermutation {
    let mut p = SignedPermutation::identity(n);
    for &t in factors {
        p.mul_transposition(t);
    }
    p
}

/// One cycle of `|σ|` with the values that carry a bar in `σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedCycle {
    pub values: Vec<usize>,
    pub barred: ValueSet,
}

impl SignedCycle {
    /// Even number of bars.
    pub fn is_balanced(&self) -> bool {
        self.barred.len().is_multiple_of(2)
    }

    pub fn min(&self) -> usize {
        self.values[0]
    }
}

/// Canonical cycles of `|σ|` (minimum first, sorted by minimum). A value `v`
/// is barred when `-v` appears in the one-line notation of `σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedCycleDecomposition {
    cycles: Vec<SignedCycle>,
}

impl SignedCycleDecomposition {
    pub fn cycles(&self) -> &[SignedCycle] {
        &self.cycles
    }

    pub fn balanced_count(&self) -> usize {
        self.cycles.iter().filter(|c| c.is_balanced()).count()
    }

    pub fn balanced_minima(&self) -> ValueSet {
        self.cycles
            .iter()
            .filter(|c| c.is_balanced())
            .map(SignedCycle::min)
            .collect()
    }
}

impl fmt::Display for SignedCycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            let signed = c.values.iter().map(|&v| {
                if c.barred.contains(v) {
                    -(v as i64)
                } else {
                    v as i64
                }
            });
            write!(f, "(")?;
            write_word(f, signed)?;
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// An element of `SE^B_n`: `c_i ∈ [-i, i] \ {0}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeB {
    entries: Vec<i32>,
}

impl CodeB {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyPermutation);
        }
        for (k, &c) in entries.iter().enumerate() {
            let i = k as i32 + 1;
            if c == 0 || c < -i || c > i {
                return Err(Error::CodeOutOfRange {
                    position: k + 1,
                    value: c as i64,
                    range: "[-i, i] \\ {0}",
                });
            }
        }
        Ok(CodeB { entries })
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<i32>) -> Self {
        CodeB { entries }
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn max_set(&self) -> ValueSet {
        crate::perm_a::max_set(&self.entries)
    }

    pub fn rmil_b(&self) -> ValueSet {
        rmil_b_set(&self.entries)
    }

    /// `Σ (i - c_i - χ(c_i < 0))`.
    pub fn weight_b(&self) -> usize {
        self.entries
            .iter()
            .enumerate()
            .map(|(k, &c)| (k as i64 + 1 - c as i64 - (c < 0) as i64) as usize)
            .sum()
    }
}

impl fmt::Debug for CodeB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CodeB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_code(f, self.entries.iter())
    }
}

/// `a_i = sign(σ_i) · |{j <= i : |σ_j| <= |σ_i|}|`.
pub fn lehmer_b_encode(s: &SignedPermutation) -> CodeB {
    let w = &s.images;
    let entries = (0..w.len())
        .map(|i| {
            let count = w[..=i].iter().filter(|x| x.abs() <= w[i].abs()).count() as i32;
            w[i].signum() * count
        })
        .collect();
    CodeB { entries }
}

pub fn lehmer_b_decode(c: &CodeB) -> SignedPermutation {
    let n = c.n();
    let mut remaining: Vec<i32> = (1..=n as i32).collect();
    let mut images = vec![0; n];
    for i in (0..n).rev() {
        let e = c.entries[i];
        let v = remaining.remove(e.unsigned_abs() as usize - 1);
        images[i] = e.signum() * v;
    }
    SignedPermutation { images }
}

/// `A-code σ = Leh σ⁻¹`.
pub fn acode_b_encode(s: &SignedPermutation) -> CodeB {
    lehmer_b_encode(&s.inverse())
}

/// Rebuilds `σ` by inserting `±i` at place `|a_i|` of the word built from
/// `1, …, i-1`.
pub fn acode_b_decode(c: &CodeB) -> SignedPermutation {
    let mut word: Vec<i32> = Vec::with_capacity(c.n());
    for (k, &a) in c.entries.iter().enumerate() {
        let i = k as i32 + 1;
        word.insert(a.unsigned_abs() as usize - 1, a.signum() * i);
    }
    SignedPermutation { images: word }
}

/// `b_i = σ^{-k}(i)` for the least `k >= 1` with `|σ^{-k}(i)| <= i`.
pub fn bcode_b_encode(s: &SignedPermutation) -> CodeB {
    let inv = s.inverse();
    let entries = (1..=s.n() as i32)
        .map(|i| {
            let mut x = inv.apply(i);
            while x.abs() > i {
                x = inv.apply(x);
            }
            x
        })
        .collect();
    CodeB { entries }
}

/// `σ = (b_1,1)(b_2,2)⋯(b_n,n)`.
pub fn bcode_b_decode(c: &CodeB) -> SignedPermutation {
    let mut p = SignedPermutation::identity(c.n());
    for (k, &b) in c.entries.iter().enumerate() {
        p.mul_transposition(TranspositionB { a: b, j: k + 1 });
    }
    p
}

/// `psi = (B-code)⁻¹ ∘ A-code`; carries `(inv_B, Lmap_B, Rmil_B)` to
/// `(sor_B, Lmap_B, Cyc_B)`.
pub fn psi(s: &SignedPermutation) -> SignedPermutation {
    bcode_b_decode(&acode_b_encode(s))
}

pub fn psi_inverse(s: &SignedPermutation) -> SignedPermutation {
    acode_b_decode(&bcode_b_encode(s))
}
