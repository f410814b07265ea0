//! Breadth-first word lengths in Cayley graphs, used as an independent
//! oracle for reflection lengths and Coxeter lengths.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use super::{Family, Group};
use crate::error::{Error, Result};
use crate::perm_b::{SignedPermutation, TranspositionB};
use crate::perm_d::GeneratorD;

/// Largest group order a table will be built for.
pub const MAX_SEARCH_ORDER: u64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratingSet {
    /// All transpositions of `S_n`.
    TA,
    /// All reflections of `B_n`.
    TB,
    /// `t_{ij}` for `1 <= |i| < j`, plus `t_{j̄j} = (j̄,j)(1̄,1)`.
    TD,
    /// Simple reflections `s_0 = (1̄,1)`, `s_i = (i,i+1)`.
    SB,
    /// Simple reflections `s_0 = (1̄,2)`, `s_i = (i,i+1)`.
    SD,
}

#[derive(Clone, Copy)]
enum Move {
    B(TranspositionB),
    D(GeneratorD),
}

impl GeneratingSet {
    pub fn family(self) -> Family {
        match self {
            GeneratingSet::TA => Family::A,
            GeneratingSet::TB | GeneratingSet::SB => Family::B,
            GeneratingSet::TD | GeneratingSet::SD => Family::D,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GeneratingSet::TA => "T^A",
            GeneratingSet::TB => "T^B",
            GeneratingSet::TD => "T^D",
            GeneratingSet::SB => "S^B",
            GeneratingSet::SD => "S^D",
        }
    }

    fn moves(self, n: usize) -> Vec<Move> {
        let t = |a: i32, j: usize| Move::B(TranspositionB { a, j });
        let adjacent = (1..n).map(|i| t(i as i32, i + 1));
        match self {
            GeneratingSet::TA => (2..=n)
                .flat_map(|j| (1..j).map(move |i| t(i as i32, j)))
                .collect(),
            GeneratingSet::TB => (1..=n)
                .flat_map(|j| {
                    let j32 = j as i32;
                    (-j32..j32).filter(|&a| a != 0).map(move |a| t(a, j))
                })
                .collect(),
            GeneratingSet::TD => (2..=n)
                .flat_map(|j| {
                    let j32 = j as i32;
                    (-j32..j32)
                        .filter(|&i| i != 0)
                        .map(move |i| Move::D(GeneratorD { i, j }))
                })
                .collect(),
            GeneratingSet::SB => std::iter::once(t(-1, 1)).chain(adjacent).collect(),
            GeneratingSet::SD => std::iter::once(t(-1, 2)).chain(adjacent).collect(),
        }
    }
}

impl FromStr for GeneratingSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_uppercase().replace(['^', '_'], "");
        match key.as_str() {
            "TA" | "T" => Ok(GeneratingSet::TA),
            "TB" => Ok(GeneratingSet::TB),
            "TD" => Ok(GeneratingSet::TD),
            "SB" => Ok(GeneratingSet::SB),
            "SD" => Ok(GeneratingSet::SD),
            _ => Err(Error::Unknown {
                kind: "generating set",
                name: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for GeneratingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Distances from the identity to every element, indexed by rank.
#[derive(Clone, Debug)]
pub struct CayleyTable {
    group: Group,
    generators: GeneratingSet,
    distances: Vec<u8>,
}

const UNSEEN: u8 = u8::MAX;

impl CayleyTable {
    pub fn build(group: Group, generators: GeneratingSet) -> Result<Self> {
        if generators.family() != group.family {
            return Err(Error::Unknown {
                kind: "generating set for this family",
                name: format!("{generators} on {group}"),
            });
        }
        let order = group.order();
        if order > MAX_SEARCH_ORDER {
            return Err(Error::TooLargeForSearch {
                family: group.family,
                n: group.n,
                order,
            });
        }
        let moves = generators.moves(group.n);
        let mut distances = vec![UNSEEN; order as usize];
        let rank = |s: &SignedPermutation| group.rank(s).expect("generators preserve the group");
        let start = SignedPermutation::identity(group.n);
        distances[rank(&start) as usize] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(s) = queue.pop_front() {
            let d = distances[rank(&s) as usize];
            for &m in &moves {
                let mut next = s.clone();
                match m {
                    Move::B(t) => next.mul_transposition(t),
                    Move::D(g) => next.mul_generator(g),
                }
                let slot = &mut distances[rank(&next) as usize];
                if *slot == UNSEEN {
                    *slot = d + 1;
                    queue.push_back(next);
                }
            }
        }
        debug_assert!(
            distances.iter().all(|&d| d != UNSEEN),
            "generators do not generate"
        );
        Ok(CayleyTable {
            group,
            generators,
            distances,
        })
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn generators(&self) -> GeneratingSet {
        self.generators
    }

    /// Distance of the element of the given rank.
    pub fn by_rank(&self, rank: u64) -> usize {
        self.distances[rank as usize] as usize
    }

    pub fn distance(&self, target: &SignedPermutation) -> Result<usize> {
        self.group.check_member(target)?;
        Ok(self.by_rank(self.group.rank(target).expect("member")))
    }

    pub fn diameter(&self) -> usize {
        self.distances.iter().copied().max().unwrap_or(0) as usize
    }
}

/// Word length of `target` over `generators`, by a fresh breadth-first search.
pub fn cayley_distance(
    group: Group,
    generators: GeneratingSet,
    target: &SignedPermutation,
) -> Result<usize> {
    group.check_member(target)?;
    CayleyTable::build(group, generators)?.distance(target)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(v: &[i32]) -> SignedPermutation {
        SignedPermutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn generator_counts() {
        assert_eq!(GeneratingSet::TA.moves(4).len(), 6);
        assert_eq!(GeneratingSet::TB.moves(3).len(), 9);
        assert_eq!(GeneratingSet::TD.moves(3).len(), 3 + 5);
        assert_eq!(GeneratingSet::SB.moves(4).len(), 4);
        assert_eq!(GeneratingSet::SD.moves(4).len(), 4);
    }

    #[test]
    fn known_distances() {
        let b3 = Group::new(Family::B, 3).unwrap();
        assert_eq!(
            cayley_distance(b3, GeneratingSet::TB, &SignedPermutation::identity(3)).unwrap(),
            0
        );
        assert_eq!(
            cayley_distance(b3, GeneratingSet::TB, &sp(&[2, 1, 3])).unwrap(),
            1
        );
        let d5 = Group::new(Family::D, 5).unwrap();
        assert_eq!(
            cayley_distance(d5, GeneratingSet::TD, &sp(&[-2, -4, 5, -1, -3])).unwrap(),
            4
        );
    }

    #[test]
    fn coxeter_diameters() {
        // The longest element has length n² in B_n and n(n-1) in D_n.
        let b4 = CayleyTable::build(Group::new(Family::B, 4).unwrap(), GeneratingSet::SB).unwrap();
        assert_eq!(b4.diameter(), 16);
        let d4 = CayleyTable::build(Group::new(Family::D, 4).unwrap(), GeneratingSet::SD).unwrap();
        assert_eq!(d4.diameter(), 12);
    }

    #[test]
    fn refusals() {
        let b7 = Group::new(Family::B, 7).unwrap();
        assert!(matches!(
            CayleyTable::build(b7, GeneratingSet::TB),
            Err(Error::TooLargeForSearch { .. })
        ));
        let a3 = Group::new(Family::A, 3).unwrap();
        assert!(CayleyTable::build(a3, GeneratingSet::TB).is_err());
        assert!(cayley_distance(a3, GeneratingSet::TA, &sp(&[-1, 2, 3])).is_err());
    }
}
