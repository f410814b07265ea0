// Type D: E-code and F-code, the co-sorting factorization over `T^D`, and
// ρ = F-decode ∘ E-code.
//
// cargo run --example type_d_rho

use coxsort::perm_d::{ecode_encode, fcode_decode, fcode_encode, rho, rho_inverse};
use coxsort::{DElement, SignedPermutation};

fn main() {
    let s = SignedPermutation::new(vec![2, -4, 5, 1, -3]).expect("valid");
    let d = DElement::new(s).expect("even number of bars");
    let e = ecode_encode(&d);
    let image = rho(&d);
    assert_eq!(image, fcode_decode(&e));
    assert_eq!(fcode_encode(&image), e);

    println!("σ = {d}, E-code {e}");
    println!("ρ(σ) = {image}");
    println!("co-sorting factorization: {}", image.cosort_factorization());
    println!(
        "(inv_D, nmin_D) σ = ({}, {})   (sor_D, ñ'_D) ρ(σ) = ({}, {})   sor'_D ρ(σ) = {}",
        d.inv_d(),
        d.nmin_d(),
        image.sor_d(),
        image.reflection_length_d(),
        image.sor_d_prime()
    );
    assert_eq!(rho_inverse(&image), d);

    let odd = SignedPermutation::new(vec![-1, 2, 3]).expect("valid in B_3");
    println!("{odd}: {}", DElement::new(odd.clone()).unwrap_err());
}
