//! Multiplicity counting in the local cohomology of the unstable strata,
//! and the exclusion test built on it.
//!
//! Run with: cargo run --example local_cohomology

use hpdwb::hpd::{CaseTag, DualityParams};
use hpdwb::vdb::{
    characters_in_h_mu, local_cohomology_multiplicity, vanishing_check, Budget, Vanishing,
    XWeightTable,
};
use hpdwb::weyl::GSpWeight;

fn main() {
    let (q, v) = (1usize, 4usize);
    let budget = Budget::default();

    let table = XWeightTable::new(v, q);
    println!(
        "weight table for v={v}, q={q}: {} weight types, {} weights with multiplicity",
        table.weights.len(),
        table.weights.iter().map(|(_, _, m)| m).sum::<usize>()
    );

    // the characters appearing for the middle cocharacter, low Δ
    println!("\ncharacters in H_mu1 with Δ < 12:");
    for (w, m) in characters_in_h_mu(1, v, q, (0, 12), 7, &budget).unwrap() {
        println!("  t={:?} Δ={} multiplicity {m}", w.t_part, w.delta_part);
    }

    let corner = GSpWeight::new(vec![v as i32], v as i32).unwrap();
    println!(
        "\ncorner character (({v}), {v}) appears {} time(s)",
        local_cohomology_multiplicity(1, &corner, v, &budget).unwrap()
    );

    // exclusion for a window Hom difference vs the canonical character
    let params = DualityParams::new(1, 1, CaseTag::Even);
    for (t, d) in [(vec![1], 3), (vec![0], 8)] {
        let chi = GSpWeight::new(t, d).unwrap();
        match vanishing_check(&chi, &params, &budget).unwrap() {
            Vanishing::Excluded => {
                println!("(t={:?}, Δ={}) excluded", chi.t_part, chi.delta_part)
            }
            Vanishing::Possible { i, chi_prime, subset } => println!(
                "(t={:?}, Δ={}) possible at i={i} via χ' = ({:?},{}) and {} roots",
                chi.t_part,
                chi.delta_part,
                chi_prime.t_part,
                chi_prime.delta_part,
                subset.len()
            ),
        }
    }
}
