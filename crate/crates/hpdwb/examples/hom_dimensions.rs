//! Graded Hom dimensions between window weights: each bundle is
//! exceptional, and Homs vanish against the Δ-order.
//!
//! Run with: cargo run --example hom_dimensions

use hpdwb::hpd::{build_window, hom_dim_graded, CaseTag, DualityParams, WindowRequest};

fn main() {
    let params = DualityParams::new(1, 1, CaseTag::Odd);
    let window = build_window(&params, WindowRequest::Easy).unwrap();
    let n = window.weights.len();

    println!("hom dimension table for (s,q)=(1,1), v=5 ({n} weights):\n");
    print!("{:>14}", "");
    for w in &window.weights {
        print!("{:>10}", format!("({:?},{})", w.t_part, w.delta_part));
    }
    println!();
    for w1 in &window.weights {
        print!("{:>14}", format!("({:?},{})", w1.t_part, w1.delta_part));
        for w2 in &window.weights {
            let d = hom_dim_graded(w1, w2, &params).unwrap();
            print!("{d:>10}");
        }
        println!();
    }

    // the diagonal is all ones; below the Δ-diagonal everything vanishes
    for w in &window.weights {
        assert_eq!(hom_dim_graded(w, w, &params).unwrap(), 1);
    }
}
