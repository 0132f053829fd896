//! Decomposing the kernel character over Sp(2s) x Sp(2q).
//!
//! The product of the 4sq linear weight factors decomposes with every
//! summand appearing exactly once, pairing each shape in the s x q
//! rectangle with its complement-transpose. The square of the same
//! character is the full exterior algebra, whose invariant dimension is
//! the binomial count.
//!
//! Run with: cargo run --example kernel_pairing

use hpdwb::characters::{decompose_virtual, kernel_character, Group};
use hpdwb::hpd::{kernel_decomposition_check, witten_index};

fn main() {
    let (s, q) = (1usize, 2usize);
    let kernel = kernel_character(s, q);
    println!("kernel character for (s,q)=({s},{q}): {} terms", kernel.num_terms());

    let decomp = decompose_virtual(&kernel, Group::SpSp(s, q)).unwrap();
    println!("\nsummands over Sp({}) x Sp({}):", 2 * s, 2 * q);
    for (label, mult) in &decomp.entries {
        println!("  {label:?} x {mult}");
    }

    let report = kernel_decomposition_check(s, q).unwrap();
    for check in &report.checks {
        println!("[{}] {}", if check.pass { "ok" } else { "FAIL" }, check.name);
    }
    assert!(report.pass());

    println!("\ninvariant count of the exterior algebra: {}", witten_index(s, q).unwrap());
}
