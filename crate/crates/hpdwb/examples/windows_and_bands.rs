//! Grade-restriction windows and their width-2 Lefschetz bands.
//!
//! Run with: cargo run --example windows_and_bands

use hpdwb::hpd::{build_window, lefschetz_bands, CaseTag, DualityParams, WindowRequest};

fn main() {
    // odd case, s = q = 1, v = 5
    let odd = DualityParams::new(1, 1, CaseTag::Odd);
    let window = build_window(&odd, WindowRequest::Easy).unwrap();
    println!("odd window [-{0}, {0}) holds {1} weights:", odd.q * odd.v, window.weights.len());
    for w in &window.weights {
        print!("  ({:?},{})", w.t_part, w.delta_part);
    }
    println!();

    let bands = lefschetz_bands(&odd).unwrap();
    println!("\n{} bands, each of size {}:", bands.bands.len(), bands.bands[0].weights.len());
    for band in &bands.bands {
        let labels: Vec<String> = band
            .weights
            .iter()
            .map(|w| format!("({:?},{})", w.t_part, w.delta_part))
            .collect();
        println!("  {:?} -> {}", band.kind, labels.join(" "));
    }

    // even case, s = q = 1, v = 4: the content shrinks partway through
    let even = DualityParams::new(1, 1, CaseTag::Even);
    let bands = lefschetz_bands(&even).unwrap();
    let total: usize = bands.bands.iter().map(|b| b.weights.len()).sum();
    println!(
        "\neven case v=4: {} weights across {} bands, content shrinks at band {}",
        total,
        bands.bands.len(),
        bands.shrink_index.unwrap()
    );
}
