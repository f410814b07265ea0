// Splitting the rank range across threads gives the same polynomial as a
// sequential run.
//
// cargo run --release --example parallel_enumeration

use std::time::Instant;

use coxsort::harness::{joint_distribution_parallel, Statistic};
use coxsort::{Family, Group};

fn main() -> coxsort::Result<()> {
    let g = Group::new(Family::B, 6)?;
    let mut reference = None;
    for workers in [1, 2, 4, 8] {
        let start = Instant::now();
        let p = joint_distribution_parallel(g, Statistic::InvB, Statistic::NmaxB, workers)?;
        println!(
            "{g}, {workers} worker(s): {} terms in {:.2?}",
            p.num_terms(),
            start.elapsed()
        );
        match &reference {
            None => reference = Some(p),
            Some(r) => assert_eq!(&p, r),
        }
    }
    let middle = g.unrank(g.order() / 2);
    println!(
        "rank {} is {middle}, which ranks back to {:?}",
        g.order() / 2,
        g.rank(&middle)
    );
    Ok(())
}
