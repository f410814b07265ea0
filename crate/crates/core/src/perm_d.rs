//! The type-D subgroup `D_n ⊂ B_n` (an even number of minus signs).
//!
//! Besides `inv_D` and Petersen's `sor_D`, elements here carry the
//! co-sorting index `sor'_D`, computed over the generating set `T^D` in which
//! `t_{j̄j} = (j̄,j)(1̄,1)` replaces the sign change `(j̄,j)`. The E-code and
//! F-code compose into the bijection `rho`.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm_a::write_code;
use crate::perm_b::{larger_than_some_later, SignedPermutation, TranspositionB};
use crate::set::ValueSet;

/// A signed permutation with an even number of negative entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DElement(SignedPermutation);

impl DElement {
    pub fn new(s: SignedPermutation) -> Result<Self> {
        match s.negatives() {
            k if k % 2 == 0 => Ok(DElement(s)),
            negatives => Err(Error::NotInD { negatives }),
        }
    }

    pub(crate) fn new_unchecked(s: SignedPermutation) -> Self {
        debug_assert!(is_d_member(&s));
        DElement(s)
    }

    pub fn identity(n: usize) -> Self {
        DElement(SignedPermutation::identity(n))
    }

    pub fn as_signed(&self) -> &SignedPermutation {
        &self.0
    }

    pub fn into_signed(self) -> SignedPermutation {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    /// `|{i<j : σ_i > σ_j}| + |{i<j : -σ_i > σ_j}|`.
    pub fn inv_d(&self) -> usize {
        let w = self.0.images();
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                count += (w[i] > w[j]) as usize + (-w[i] > w[j]) as usize;
            }
        }
        count
    }

    /// `Σ (j_r - i_r - 2χ(i_r < 0))` over the type-B selection-sort factorization.
    pub fn sor_d(&self) -> usize {
        self.0.selection_sort_factorization().weight_d()
    }

    /// The unique `T^D` factorization with increasing positions `1 < j_1 < ⋯`.
    pub fn cosort_factorization(&self) -> FactorizationD {
        let n = self.n();
        let mut w = self.0.clone();
        let mut factors = Vec::new();
        for j in (2..=n).rev() {
            let jj = j as i32;
            if w.apply(jj) == jj {
                continue;
            }
            let g = GeneratorD {
                i: w.preimage(jj),
                j,
            };
            w.mul_generator(g);
            factors.push(g);
        }
        debug_assert!(w.is_identity());
        factors.reverse();
        FactorizationD { n, factors }
    }

    /// `Σ (j_r - i_r - 2χ(i_r < 0))` over [`Self::cosort_factorization`].
    pub fn sor_d_prime(&self) -> usize {
        self.cosort_factorization().weight()
    }

    /// `|{i : σ_i > |σ_j| for some j > i}|` plus the number of barred
    /// entries other than `-1`.
    pub fn nmin_d(&self) -> usize {
        let w = self.0.images();
        larger_than_some_later(w) + w.iter().filter(|&&x| x < -1).count()
    }

    /// `ñ'_D = n - |{r : f_r = r}|` from the F-code, the least number of
    /// `T^D` factors needed to write `σ`.
    pub fn reflection_length_d(&self) -> usize {
        self.n() - fcode_encode(self).fixed_count()
    }
}

/// `N(σ)` is even.
pub fn is_d_member(s: &SignedPermutation) -> bool {
    s.negatives().is_multiple_of(2)
}

impl TryFrom<SignedPermutation> for DElement {
    type Error = Error;

    fn try_from(s: SignedPermutation) -> Result<Self> {
        DElement::new(s)
    }
}

impl fmt::Debug for DElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for DElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of `T^D` (or the identity marker `t_{jj}`).
///
/// * `1 <= |i| < j`: `t_{ij}`, the `B_n` reflection `(i,j)`.
/// * `i = -j`, `j > 1`: `t_{j̄j} = (j̄,j)(1̄,1)`, negating `j` and `1` together.
/// * `i = j`: identity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GeneratorD {
    pub i: i32,
    pub j: usize,
}

impl GeneratorD {
    pub fn new(i: i32, j: usize, n: usize) -> Result<Self> {
        let jj = j as i64;
        let ii = i as i64;
        let ok =
            j >= 1 && j <= n && (ii == jj || (ii != 0 && ii.abs() < jj) || (ii == -jj && j > 1));
        if ok {
            Ok(GeneratorD { i, j })
        } else {
            Err(Error::InvalidTransposition { a: ii, j, n })
        }
    }

    /// `j - i - 2χ(i < 0)`; shared by `sor_D` and `sor'_D`.
    pub fn weight(&self) -> usize {
        TranspositionB {
            a: self.i,
            j: self.j,
        }
        .weight_d()
    }

    pub fn is_identity(&self) -> bool {
        self.i == self.j as i32
    }
}

impl fmt::Display for GeneratorD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t({},{})", self.i, self.j)
    }
}

impl SignedPermutation {
    /// Right multiplication by a `T^D` generator.
    pub(crate) fn mul_generator(&mut self, g: GeneratorD) {
        if g.i == -(g.j as i32) {
            self.negate_place(g.j);
            self.negate_place(1);
        } else {
            self.mul_transposition(TranspositionB { a: g.i, j: g.j });
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationD {
    n: usize,
    factors: Vec<GeneratorD>,
}

impl FactorizationD {
    pub fn factors(&self) -> &[GeneratorD] {
        &self.factors
    }

    pub fn weight(&self) -> usize {
        self.factors.iter().map(GeneratorD::weight).sum()
    }

    pub fn product(&self) -> DElement {
        multiply_d(self.n, &self.factors)
    }
}

impl fmt::Display for FactorizationD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.factors {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// `g_1 g_2 ⋯ g_k`; identity markers are skipped.
pub fn multiply_d(n: usize, factors: &[GeneratorD]) -> DElement {
    let mut p = SignedPermutation::identity(n);
    for &g in factors {
        if !g.is_identity() {
            p.mul_generator(g);
        }
    }
    DElement(p)
}

/// The common value space of the E- and F-codes: `c_1 = 1` and
/// `c_i ∈ [-i, i] \ {0}` for `i >= 2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeD {
    entries: Vec<i32>,
}

impl CodeD {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        match entries.first() {
            None => return Err(Error::EmptyPermutation),
            Some(&c) if c != 1 => {
                return Err(Error::CodeOutOfRange {
                    position: 1,
                    value: c as i64,
                    range: "{1}",
                })
            }
            _ => {}
        }
        for (k, &c) in entries.iter().enumerate().skip(1) {
            let i = k as i32 + 1;
            if c == 0 || c < -i || c > i {
                return Err(Error::CodeOutOfRange {
                    position: k + 1,
                    value: c as i64,
                    range: "[-i, i] \\ {0}",
                });
            }
        }
        Ok(CodeD { entries })
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<i32>) -> Self {
        CodeD { entries }
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

    pub fn fixed_count(&self) -> usize {
        self.max_set().len()
    }

    /// `Σ (r - c_r - 2χ(c_r < 0))`.
    pub fn weight_d(&self) -> usize {
        self.entries
            .iter()
            .enumerate()
            .map(|(k, &c)| (k as i64 + 1 - c as i64 - 2 * (c < 0) as i64) as usize)
            .sum()
    }
}

impl fmt::Debug for CodeD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CodeD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_code(f, self.entries.iter())
    }
}

/// Peels `n, n-1, …, 2` off the word. A barred letter at place `p` records
/// `-p` and flips the sign of the first remaining letter.
pub fn ecode_encode(s: &DElement) -> CodeD {
    let n = s.n();
    let mut word = s.0.images().to_vec();
    let mut entries = vec![0; n];
    entries[0] = 1;
    for i in (2..=n).rev() {
        let p = word
            .iter()
            .position(|x| x.unsigned_abs() as usize == i)
            .expect("letter present");
        let negative = word[p] < 0;
        word.remove(p);
        let place = p as i32 + 1;
        if negative {
            entries[i - 1] = -place;
            word[0] = -word[0];
        } else {
            entries[i - 1] = place;
        }
    }
    debug_assert_eq!(word, vec![1]);
    CodeD { entries }
}

pub fn ecode_decode(c: &CodeD) -> DElement {
    let mut word: Vec<i32> = Vec::with_capacity(c.n());
    word.push(1);
    for (k, &e) in c.entries.iter().enumerate().skip(1) {
        let i = k as i32 + 1;
        let p = e.unsigned_abs() as usize - 1;
        if e < 0 {
            word[0] = -word[0];
            word.insert(p, -i);
        } else {
            word.insert(p, i);
        }
    }
    DElement(SignedPermutation::from_images_unchecked(word))
}

/// For `i = n, …, 2`, records the generator `t_{f_i i}` that moves `i` home,
/// so that `σ = t_{f_1 1} t_{f_2 2} ⋯ t_{f_n n}`.
pub fn fcode_encode(s: &DElement) -> CodeD {
    let n = s.n();
    let mut w = s.0.clone();
    let mut entries = vec![0; n];
    entries[0] = 1;
    for i in (2..=n).rev() {
        let ii = i as i32;
        let f = w.preimage(ii);
        entries[i - 1] = f;
        if f != ii {
            w.mul_generator(GeneratorD { i: f, j: i });
        }
    }
    debug_assert!(w.is_identity());
    CodeD { entries }
}

pub fn fcode_decode(c: &CodeD) -> DElement {
    let factors: Vec<GeneratorD> = c
        .entries
        .iter()
        .enumerate()
        .map(|(k, &f)| GeneratorD { i: f, j: k + 1 })
        .collect();
    multiply_d(c.n(), &factors)
}

/// `rho = (F-code)⁻¹ ∘ E-code`; carries `(inv_D, nmin_D)` to `(sor_D, ñ'_D)`.
pub fn rho(s: &DElement) -> DElement {
    fcode_decode(&ecode_encode(s))
}

pub fn rho_inverse(s: &DElement) -> DElement {
    ecode_decode(&fcode_encode(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: &[i32]) -> DElement {
        DElement::new(SignedPermutation::new(v.to_vec()).unwrap()).unwrap()
    }

    fn code(v: &[i32]) -> CodeD {
        CodeD::new(v.to_vec()).unwrap()
    }

    #[test]
    fn membership() {
        assert!(is_d_member(&SignedPermutation::identity(3)));
        assert!(!is_d_member(&SignedPermutation::new(vec![-1, 2]).unwrap()));
        assert!(is_d_member(
            &SignedPermutation::new(vec![-2, -4, 5, -1, -3]).unwrap()
        ));
        assert_eq!(
            DElement::new(SignedPermutation::new(vec![-1, 2]).unwrap()),
            Err(Error::NotInD { negatives: 1 })
        );
    }

    #[test]
    fn inversion_number_d() {
        assert_eq!(DElement::identity(4).inv_d(), 0);
        assert_eq!(d(&[-1, -2]).inv_d(), 2);
        assert_eq!(d(&[-2, -1]).inv_d(), 1);
        assert_eq!(d(&[2, 1]).inv_d(), 1);
        assert_eq!(d(&[2, -4, 5, 1, -3]).inv_d(), 11);
    }

    #[test]
    fn sorting_indices_d() {
        assert_eq!(DElement::identity(3).sor_d(), 0);
        let s = d(&[-2, -4, 5, -1, -3]);
        assert_eq!(s.sor_d(), 11);
        let f = s.cosort_factorization();
        assert_eq!(
            f.factors(),
            &[
                GeneratorD { i: 1, j: 2 },
                GeneratorD { i: -3, j: 3 },
                GeneratorD { i: -2, j: 4 },
                GeneratorD { i: 3, j: 5 },
            ]
        );
        assert_eq!(f.product(), s);
        assert_eq!(s.sor_d_prime(), 11);
        assert!(DElement::identity(4)
            .cosort_factorization()
            .factors()
            .is_empty());

        let mut dist = [0; 3];
        for v in [[1, 2], [2, 1], [-1, -2], [-2, -1]] {
            dist[d(&v).sor_d()] += 1;
        }
        assert_eq!(dist, [1, 2, 1]);
    }

    #[test]
    fn ecode() {
        let s = d(&[2, -4, 5, 1, -3]);
        assert_eq!(ecode_encode(&s), code(&[1, 1, -3, -2, 3]));
        assert_eq!(ecode_decode(&code(&[1, 1, -3, -2, 3])), s);
        assert_eq!(ecode_encode(&DElement::identity(4)), code(&[1, 2, 3, 4]));
    }

    #[test]
    fn fcode() {
        let s = d(&[-2, -4, 5, -1, -3]);
        assert_eq!(fcode_encode(&s), code(&[1, 1, -3, -2, 3]));
        assert_eq!(fcode_decode(&code(&[1, 1, -3, -2, 3])), s);
        assert_eq!(fcode_encode(&DElement::identity(4)), code(&[1, 2, 3, 4]));
    }

    #[test]
    fn code_d_validation() {
        assert!(CodeD::new(vec![-1, 2]).is_err());
        assert!(CodeD::new(vec![1, 3]).is_err());
        assert!(CodeD::new(vec![1, -2, 0]).is_err());
        assert!(CodeD::new(vec![1, -2, -3]).is_ok());
    }

    #[test]
    fn generator_validation() {
        assert!(GeneratorD::new(-1, 1, 3).is_err());
        assert!(GeneratorD::new(-2, 2, 3).is_ok());
        assert!(GeneratorD::new(-1, 2, 3).is_ok());
        assert!(GeneratorD::new(3, 2, 3).is_err());
    }

    #[test]
    fn minus_one_statistics() {
        assert_eq!(DElement::identity(5).nmin_d(), 0);
        assert_eq!(DElement::identity(5).reflection_length_d(), 0);
        assert_eq!(d(&[2, -4, 5, 1, -3]).nmin_d(), 4);
        assert_eq!(d(&[-2, -4, 5, -1, -3]).reflection_length_d(), 4);
    }

    #[test]
    fn rho_examples() {
        let s = d(&[2, -4, 5, 1, -3]);
        let image = rho(&s);
        assert_eq!(image, d(&[-2, -4, 5, -1, -3]));
        assert_eq!((s.inv_d(), s.nmin_d()), (11, 4));
        assert_eq!((image.sor_d(), image.reflection_length_d()), (11, 4));
        assert_eq!(rho_inverse(&image), s);
        assert!(rho(&DElement::identity(3)).is_identity());
    }
}
