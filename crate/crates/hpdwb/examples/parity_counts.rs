//! The mod-2 counts behind the non-vanishing statements: zero-sum
//! parabolic pairs, and the parity of the distinguished characters'
//! multiplicities.
//!
//! Run with: cargo run --example parity_counts

use hpdwb::hpd::{CaseTag, DualityParams};
use hpdwb::vdb::{nonvanishing_parity_check, parity_count_c, Budget, NonvanishingTarget};

fn main() {
    let budget = Budget::default();
    for q in 1..=3 {
        let (count, odd) = parity_count_c(q, &budget).unwrap();
        println!("q={q}: {count} zero-sum pairs ({})", if odd { "odd" } else { "even" });
    }

    let params = DualityParams::new(1, 1, CaseTag::Even);
    for target in [NonvanishingTarget::Canonical, NonvanishingTarget::TwoS] {
        let report = nonvanishing_parity_check(&params, target, &budget).unwrap();
        println!("\ntarget {target:?}:");
        print!("{}", report.to_tsv());
    }
}
