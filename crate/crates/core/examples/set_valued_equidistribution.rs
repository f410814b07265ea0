// The six ordered pairs of set-valued statistics have one joint
// distribution, in `S_n` and in `B_n`.
//
// cargo run --example set_valued_equidistribution

use coxsort::harness::{set_pair_distribution, SetStatistic};
use coxsort::{Family, Group};

fn main() -> coxsort::Result<()> {
    use SetStatistic::*;
    for (family, n, [c, l, r]) in [
        (Family::A, 5, [Cyc, Lmap, Rmil]),
        (Family::B, 4, [CycB, LmapB, RmilB]),
    ] {
        let g = Group::new(family, n)?;
        let pairs = [(c, r), (c, l), (r, l), (l, r), (l, c), (r, c)];
        let reference = set_pair_distribution(g, c, r)?;
        for (x, y) in pairs {
            let d = set_pair_distribution(g, x, y)?;
            println!(
                "{g} ({x}, {y}): {} distinct pairs, total {}",
                d.counts.len(),
                d.total()
            );
            assert_eq!(d, reference);
        }
        let (top, count) = reference
            .counts
            .iter()
            .max_by_key(|(_, &c)| c)
            .expect("nonempty");
        println!("{g}: most frequent pair {top:?} occurs {count} times");
    }
    Ok(())
}
