// Breadth-first search in Cayley graphs as an oracle for reflection length
// and Coxeter length.
//
// cargo run --example cayley_reflection_length

use coxsort::harness::{cayley_distance, CayleyTable, GeneratingSet, Statistic};
use coxsort::{DElement, Family, Group, SignedPermutation};

fn main() -> coxsort::Result<()> {
    let d5 = Group::new(Family::D, 5)?;
    let s = SignedPermutation::new(vec![-2, -4, 5, -1, -3])?;
    let bfs = cayley_distance(d5, GeneratingSet::TD, &s)?;
    println!(
        "T^D distance of {s} is {bfs}; ñ'_D = {}",
        DElement::new(s.clone())?.reflection_length_d()
    );

    let b4 = Group::new(Family::B, 4)?;
    for (gens, stat) in [
        (GeneratingSet::TB, Statistic::ReflectionLengthB),
        (GeneratingSet::SB, Statistic::InvB),
    ] {
        let table = CayleyTable::build(b4, gens)?;
        let agree = b4
            .elements()
            .all(|x| table.distance(&x).ok() == stat.evaluate(b4, &x).ok());
        println!(
            "{b4} over {gens}: diameter {}, matches {stat}: {agree}",
            table.diameter()
        );
        assert!(agree);
    }

    let b8 = Group::new(Family::B, 8)?;
    match CayleyTable::build(b8, GeneratingSet::TB) {
        Err(e) => println!("{e}"),
        Ok(_) => unreachable!("B_8 is beyond the search limit"),
    }
    Ok(())
}
