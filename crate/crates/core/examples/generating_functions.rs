// Joint distributions by exhaustive enumeration against the product formulas.
//
// cargo run --release --example generating_functions

use coxsort::harness::{joint_distribution, Statistic};
use coxsort::qpoly::{gf_type_a, gf_type_b, gf_type_d_bivariate, gf_type_d_univariate};
use coxsort::{Family, Group};

fn main() -> coxsort::Result<()> {
    use Statistic::*;
    for n in 1..=5 {
        let g = Group::new(Family::A, n)?;
        let p = joint_distribution(g, Sor, Cyc)?;
        assert_eq!(p, gf_type_a(n)?);
        assert_eq!(p, joint_distribution(g, Inv, RlMin)?);
        println!("S_{n}: {p}");
    }
    for n in 1..=4 {
        let g = Group::new(Family::B, n)?;
        let p = joint_distribution(g, InvB, NminB)?;
        assert_eq!(p, gf_type_b(n)?);
        assert_eq!(p, joint_distribution(g, SorB, ReflectionLengthB)?);
        println!("B_{n}: {} terms, {} elements", p.num_terms(), p.total()?);
    }
    for n in 2..=5 {
        let g = Group::new(Family::D, n)?;
        let p = joint_distribution(g, SorD, ReflectionLengthD)?;
        assert_eq!(p, gf_type_d_bivariate(n)?);
        assert_eq!(p.eval_t1(), gf_type_d_univariate(n)?);
        if n == 2 {
            println!("D_2: {p}");
        }
        println!("D_{n} at t = 1: {}", p.eval_t1());
    }
    Ok(())
}
