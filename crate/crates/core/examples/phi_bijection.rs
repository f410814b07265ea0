// The bijection φ on `S_n`: A-code, then B-code decoding. It carries
// `(inv, rl-min, Lmap)` to `(sor, cyc, Lmap)`.
//
// cargo run --example phi_bijection

use coxsort::perm_a::{acode_encode, bcode_decode, phi, phi_inverse};
use coxsort::Permutation;

fn main() {
    let s = Permutation::new(vec![3, 1, 5, 2, 4]).expect("valid permutation");
    let a = acode_encode(&s);
    let image = phi(&s);
    assert_eq!(image, bcode_decode(&a));

    println!("σ        = {s}");
    println!("A-code σ = {a}");
    println!("φ(σ)     = {image}   cycles {}", image.cycles());
    println!(
        "(inv, rl-min) σ = ({}, {})   (sor, cyc) φ(σ) = ({}, {})",
        s.inv(),
        s.rl_min(),
        image.sor(),
        image.cyc()
    );
    println!("Lmap σ = {}   Lmap φ(σ) = {}", s.lmap(), image.lmap());
    println!(
        "sorting factorization of φ(σ): {}",
        image.sort_factorization()
    );
    assert_eq!(phi_inverse(&image), s);
}
