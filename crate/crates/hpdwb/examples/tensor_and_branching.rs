//! Tensor products over Sp(2q), restriction from GL(2q), and the
//! Littlewood-Richardson numbers feeding both.
//!
//! Run with: cargo run --example tensor_and_branching

use hpdwb::lrcalc::{gl_to_sp_restrict, gl_to_sp_stable, ln_product, lr_coefficient, verify_ln_lemma};
use hpdwb::partition::Partition;

fn main() {
    let lam = Partition::of(&[2, 1]);
    println!(
        "N^(3,2,1)_{{(2,1),(2,1)}} = {}",
        lr_coefficient(&lam, &lam, &Partition::of(&[3, 2, 1]))
    );

    // sp_(1) ⊗ sp_(1) over Sp(4): the trivial rep appears once
    let product = ln_product(&Partition::of(&[1]), &Partition::of(&[1]), 2).unwrap();
    println!("\nsp_(1) ⊗ sp_(1) over Sp(4) (fast path: {}):", !product.oracle_only);
    for (label, mult) in &product.decomp.entries {
        println!("  {label:?} x {mult}");
    }

    println!("\ndoubled-width containment for χ = (2,1), q = 3: {}",
        verify_ln_lemma(&Partition::of(&[2, 1]), 3).unwrap());

    // GL(4) → Sp(4): both the character route and the stable rule
    let alpha = Partition::of(&[2, 2]);
    let by_character = gl_to_sp_restrict(&alpha, 2).unwrap();
    let by_rule = gl_to_sp_stable(&alpha, 2).unwrap();
    assert_eq!(by_character, by_rule);
    println!("\nS^(2,2) of GL(4) restricted to Sp(4):");
    for (label, mult) in &by_character.entries {
        println!("  {label:?} x {mult}");
    }
}
