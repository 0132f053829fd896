//! Independent oracles for the derived combinatorial rules: tableau
//! counts against polynomial products, the stable branching rule against
//! character restriction, the exterior-algebra pairing against a direct
//! two-sided decomposition, and multiplicity counting against brute-force
//! enumeration.

use hpdwb::characters::{decompose_virtual, schur_gl, Group};
use hpdwb::laurent::LaurentPoly;
use hpdwb::lrcalc::{gl_to_sp_restrict, gl_to_sp_stable, lr_coefficient, subpartitions,
    wedge_cauchy_decomposition};
use hpdwb::partition::{enumerate_rect, Partition};
use hpdwb::vdb::{local_cohomology_multiplicity, Budget};
use hpdwb::weyl::GSpWeight;

fn partitions_up_to(n: u32) -> Vec<Partition> {
    let mut out: Vec<Partition> = enumerate_rect(n as usize, n)
        .into_iter()
        .filter(|p| p.size() <= n)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// s_λ · s_μ = Σ_ν N^ν_{λμ} s_ν in GL(h(λ)+h(μ)), checked coefficientwise
/// on the full polynomial.
#[test]
fn lr_matches_schur_products() {
    let shapes = partitions_up_to(4);
    for lambda in &shapes {
        for mu in &shapes {
            let n = (lambda.height() + mu.height()).max(1);
            let product = schur_gl(lambda, n)
                .unwrap()
                .mul(schur_gl(mu, n).unwrap().as_ref())
                .unwrap();
            let mut expected = LaurentPoly::zero(LaurentPoly::x_vars(n));
            let total = lambda.size() + mu.size();
            for nu in enumerate_rect(n, total) {
                if nu.size() != total {
                    continue;
                }
                let c = lr_coefficient(lambda, mu, &nu);
                if c > 0 {
                    expected = expected
                        .add(&schur_gl(&nu, n).unwrap().scale(c as i64))
                        .unwrap();
                }
            }
            assert_eq!(product, expected, "λ={lambda:?}, μ={mu:?}");
        }
    }
}

/// A few larger spot checks at total size 10.
#[test]
fn lr_spot_checks_size_five() {
    for (lambda, mu) in [
        (Partition::of(&[3, 2]), Partition::of(&[3, 2])),
        (Partition::of(&[2, 2, 1]), Partition::of(&[3, 1, 1])),
        (Partition::of(&[4, 1]), Partition::of(&[2, 2, 1])),
    ] {
        let n = lambda.height() + mu.height();
        let product = schur_gl(&lambda, n)
            .unwrap()
            .mul(schur_gl(&mu, n).unwrap().as_ref())
            .unwrap();
        let total = lambda.size() + mu.size();
        let mut via_lr = LaurentPoly::zero(LaurentPoly::x_vars(n));
        for nu in enumerate_rect(n, total) {
            if nu.size() != total {
                continue;
            }
            let c = lr_coefficient(&lambda, &mu, &nu);
            if c > 0 {
                via_lr = via_lr
                    .add(&schur_gl(&nu, n).unwrap().scale(c as i64))
                    .unwrap();
            }
        }
        assert_eq!(product, via_lr);
    }
}

#[test]
fn stable_branching_matches_restriction_q3() {
    for alpha in enumerate_rect(3, 4) {
        if alpha.size() > 6 {
            continue;
        }
        let stable = gl_to_sp_stable(&alpha, 3).unwrap();
        let oracle = gl_to_sp_restrict(&alpha, 3).unwrap();
        assert_eq!(stable, oracle, "α={alpha:?}");
    }
}

/// The closed-form transpose pairing for Λ•(C^{2s} ⊗ C^{2q}) against a
/// direct decomposition of the product character over GL(2s)×GL(2q).
#[test]
fn wedge_pairing_matches_direct_decomposition() {
    for (s, q) in [(1usize, 1usize), (1, 2)] {
        let group = Group::GlGl(2 * s, 2 * q);
        let vars = group.vars();
        let mut wedge = LaurentPoly::one(vars.clone());
        for i in 0..2 * s {
            for j in 0..2 * q {
                let mut exp = vec![0i32; 2 * s + 2 * q];
                exp[i] = 1;
                exp[2 * s + j] = 1;
                let factor = LaurentPoly::one(vars.clone())
                    .add(&LaurentPoly::monomial(vars.clone(), exp, 1))
                    .unwrap();
                wedge = wedge.mul(&factor).unwrap();
            }
        }
        let direct = decompose_virtual(&wedge, group).unwrap();
        assert_eq!(direct, wedge_cauchy_decomposition(s, q), "(s,q)=({s},{q})");
    }
}

/// Brute force: enumerate all exponent tuples (a_j), (b_j) directly for
/// q = 1 and compare the counted solutions.
#[test]
fn multiplicity_matches_brute_force_q1() {
    let budget = Budget::unlimited();
    for v in 2..=3usize {
        for i in 0..=1usize {
            for t in -4..=(2 * v as i32 + 2) {
                for d in 0..(2 * v as i32 + 5) {
                    if (t + d).rem_euclid(2) != 0 {
                        continue;
                    }
                    let cap = (2 * v as i32 + 6) as u32;
                    let brute = brute_force_count(i, v, t, d, cap);
                    let chi = GSpWeight {
                        t_part: vec![t],
                        delta_part: d,
                    };
                    let fast = local_cohomology_multiplicity(i, &chi, v, &budget).unwrap();
                    assert_eq!(fast, brute as u128, "i={i}, v={v}, t={t}, d={d}");
                }
            }
        }
    }
}

/// Solutions of t = Σ x_j + σ Σ y_j, d = Σ x_j − σ Σ y_j with x_j ≥ 1
/// (the at-least-once side) and, for i = 1, y_j ≥ 0 with σ = −1, while for
/// i = 0 both sides are at-least-once with σ = +1 acting on (−E, Δ=1)
/// weights, i.e. t = Σ x_j − Σ y_j and d = Σ x_j + Σ y_j.
fn brute_force_count(i: usize, v: usize, t: i32, d: i32, cap: u32) -> u64 {
    let mut count = 0u64;
    let tuples = |min: u32| -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for _ in 0..v {
            let mut next = Vec::new();
            for base in &out {
                for x in min..=cap {
                    let mut b = base.clone();
                    b.push(x);
                    next.push(b);
                }
            }
            out = next;
        }
        out
    };
    let first = tuples(1);
    let second = tuples(if i == 1 { 0 } else { 1 });
    for a in &first {
        let sa: i32 = a.iter().map(|&x| x as i32).sum();
        for b in &second {
            let sb: i32 = b.iter().map(|&x| x as i32).sum();
            let (tt, dd) = if i == 1 {
                (sa + sb, sa - sb)
            } else {
                (sa - sb, sa + sb)
            };
            if tt == t && dd == d {
                count += 1;
            }
        }
    }
    count
}

/// Every subpartition list is closed under transpose-of-complement style
/// sanity: contains the empty shape and the shape itself.
#[test]
fn subpartition_sanity() {
    let shape = Partition::of(&[3, 2]);
    let subs = subpartitions(&shape);
    assert!(subs.contains(&Partition::empty()));
    assert!(subs.contains(&shape));
    assert_eq!(subs.len(), 9);
}
