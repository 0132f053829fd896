//! Dimension bookkeeping for the critical pairs.
//!
//! Run with: cargo run --example numerology

use hpdwb::hpd::{cy_numerology_report, CaseTag, DualityParams};

fn main() {
    for (s, q) in [(1usize, 1usize), (2, 1), (1, 2), (2, 2)] {
        let params = DualityParams::new(s, q, CaseTag::Odd);
        println!("(s,q)=({s},{q}), v={}:", params.v);
        print!("{}", cy_numerology_report(&params).unwrap().to_tsv());
        println!();
    }
}
