// Signed permutations: reflections, selection sort, signed cycles, and the
// bijection ψ carrying `(inv_B, nmin_B)` to `(sor_B, l'_B)`.
//
// cargo run --example signed_psi

use coxsort::perm_b::{acode_b_decode, acode_b_encode, bcode_b_encode, psi};
use coxsort::{CodeB, SignedPermutation};

fn main() {
    let s = SignedPermutation::new(vec![5, -4, -3, 1, -2]).expect("valid");
    let f = s.selection_sort_factorization();
    println!("{s} = {f}, sor_B = {}", f.weight_b());
    assert_eq!(f.product(), s);

    let t = SignedPermutation::new(vec![-6, -7, 4, -3, 5, 1, -2]).expect("valid");
    let cycles = t.signed_cycles();
    println!(
        "{t} has cycles {cycles}, {} balanced, l'_B = {}",
        cycles.balanced_count(),
        t.reflection_length_b()
    );

    let u = SignedPermutation::new(vec![3, -1, -6, -5, 4, 2]).expect("valid");
    println!("B-code of {u} is {}", bcode_b_encode(&u));

    let a = CodeB::new(vec![1, 1, -3, -2, 3]).expect("in range");
    let sigma = acode_b_decode(&a);
    assert_eq!(acode_b_encode(&sigma), a);
    let image = psi(&sigma);
    println!("A-code {a} decodes to {sigma}; ψ sends it to {image}");
    println!(
        "(inv_B, nmin_B) = ({}, {})   (sor_B, l'_B) = ({}, {})",
        sigma.inv_b(),
        sigma.nmin_b(),
        image.sor_b(),
        image.reflection_length_b()
    );
    println!(
        "(Lmap_B, Rmil_B) σ = ({}, {})   (Lmap_B, Cyc_B) ψ(σ) = ({}, {})",
        sigma.lmap_b(),
        sigma.rmil_b(),
        image.lmap_b(),
        image.cyc_b_set()
    );
}
