//! Sorting indices, permutation codes and statistic-transporting bijections
//! on the symmetric group `S_n`, the hyperoctahedral group `B_n` and its
//! even-signed subgroup `D_n`.
//!
//! Conventions used throughout: positions and values are 1-based, bars are
//! negative integers, and products compose right to left,
//! `(σ ∘ τ)(i) = σ(τ(i))`.
//!
//! ```
//! use coxsort::{perm_a, Permutation};
//!
//! let s = Permutation::new(vec![3, 1, 5, 2, 4]).unwrap();
//! let image = perm_a::phi(&s);
//! assert_eq!((s.inv(), s.rl_min()), (image.sor(), image.cyc()));
//! ```

pub mod cli;
pub mod error;
pub mod harness;
pub mod perm_a;
pub mod perm_b;
pub mod perm_d;
pub mod qpoly;
pub mod set;

pub use error::{Error, Result};
pub use harness::{Family, Group};
pub use perm_a::{CodeA, Permutation};
pub use perm_b::{CodeB, SignedPermutation, TranspositionB};
pub use perm_d::{CodeD, DElement, GeneratorD};
pub use qpoly::BivariatePolynomial;
pub use set::ValueSet;
