//! Partitions in a rectangle and the complement-transpose bijection.
//!
//! Run with: cargo run --example duality_bijection

use hpdwb::partition::{binomial, enumerate_rect, Partition};

fn main() {
    let (s, q) = (2usize, 3u32);
    let shapes = enumerate_rect(s, q);
    println!(
        "Y_{{{s},{q}}} has {} elements (C({}, {s}) = {})",
        shapes.len(),
        s + q as usize,
        binomial((s + q as usize) as u64, s as u64)
    );

    println!("\n{:<12} {:<12}", "shape", "dual");
    for gamma in &shapes {
        let dual = gamma.hpd_dual(s, q).unwrap();
        println!("{:<12} {:<12}", format!("{:?}", gamma.parts()), format!("{:?}", dual.parts()));
        // the dual lives in the transposed rectangle and the map is an involution
        assert!(dual.fits_in(q as usize, s as u32));
        assert_eq!(dual.hpd_dual(q as usize, s as u32).unwrap(), *gamma);
    }

    let p = Partition::of(&[2, 2]);
    println!("\ncomplement of {:?} in 2x3: {:?}", p.parts(), p.complement(2, 3).unwrap().parts());
    println!("transpose of {:?}: {:?}", p.parts(), p.transpose().parts());
}
