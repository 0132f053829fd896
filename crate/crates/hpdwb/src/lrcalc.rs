//! Littlewood–Richardson coefficients by skew tableau enumeration, the
//! GL→Sp branching rule, the parity criterion for symplectic invariants,
//! and the Littlewood–Newell tensor product with its modification-rule
//! cases. The character engine is the source of truth; the combinatorial
//! rules here are accelerations that must agree with it.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::characters::{decompose_virtual, schur_gl, schur_sp, Group, Label, VirtualDecomp};
use crate::error::{Error, Result};
use crate::partition::Partition;

fn lr_cache() -> &'static Mutex<HashMap<(Partition, Partition, Partition), u64>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition, Partition), u64>>> =
        OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// N^ν_{λ,μ}: the number of Littlewood–Richardson skew tableaux of shape
/// ν/λ and content μ. Cells are filled in reading order (each row right to
/// left, rows top to bottom), so the lattice-word condition becomes the
/// incremental check count(k) < count(k−1).
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size()
        || !nu.contains(lambda)
        || !nu.contains(mu)
    {
        return 0;
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&hit) = lr_cache().lock().unwrap().get(&key) {
        return hit;
    }

    // cells in reading order: (row, col) with col descending within a row
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for r in 0..nu.height() {
        let lo = lambda.part(r) as usize;
        let hi = nu.part(r) as usize;
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    let rows = nu.height();
    let cols = nu.width() as usize;
    let mut grid = vec![vec![0u8; cols]; rows];
    let mut counts = vec![0u32; mu.height() + 1];

    fn rec(
        cells: &[(usize, usize)],
        pos: usize,
        grid: &mut Vec<Vec<u8>>,
        counts: &mut Vec<u32>,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        total: &mut u64,
    ) {
        if pos == cells.len() {
            *total += 1;
            return;
        }
        let (r, c) = cells[pos];
        // weakly increasing along rows: bounded above by the right neighbor
        let right = if c + 1 < nu.part(r) as usize {
            grid[r][c + 1]
        } else {
            mu.height() as u8
        };
        // strictly increasing down columns
        let above = if r > 0 && c >= lambda.part(r - 1) as usize && c < nu.part(r - 1) as usize
        {
            grid[r - 1][c]
        } else {
            0
        };
        for k in (above + 1)..=right {
            let ki = k as usize;
            if counts[ki] >= mu.part(ki - 1) {
                continue;
            }
            if ki > 1 && counts[ki] >= counts[ki - 1] {
                continue;
            }
            grid[r][c] = k;
            counts[ki] += 1;
            rec(cells, pos + 1, grid, counts, lambda, mu, nu, total);
            counts[ki] -= 1;
        }
        grid[r][c] = 0;
    }

    let mut total = 0u64;
    rec(
        &cells, 0, &mut grid, &mut counts, lambda, mu, nu, &mut total,
    );
    lr_cache().lock().unwrap().insert(key, total);
    total
}

/// All partitions fitting cellwise inside `shape`.
pub fn subpartitions(shape: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts: Vec<u32> = Vec::new();
    fn rec(shape: &Partition, row: usize, max: u32, parts: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(parts.clone()).unwrap());
        if row == shape.height() {
            return;
        }
        let cap = max.min(shape.part(row));
        for p in 1..=cap {
            parts.push(p);
            rec(shape, row + 1, p, parts, out);
            parts.pop();
        }
    }
    rec(shape, 0, shape.width(), &mut parts, &mut out);
    out.sort();
    out.dedup();
    out
}

fn cellwise_min(a: &Partition, b: &Partition) -> Partition {
    let parts = (0..a.height().min(b.height()))
        .map(|i| a.part(i).min(b.part(i)))
        .collect();
    Partition::new(parts).unwrap()
}

/// Λ•(C^{2s} ⊗ C^{2q}) over GL(2s)×GL(2q): every α in the 2s×2q rectangle
/// appears paired with its transpose, multiplicity one.
pub fn wedge_cauchy_decomposition(s: usize, q: usize) -> VirtualDecomp {
    let group = Group::GlGl(2 * s, 2 * q);
    let mut out = VirtualDecomp::empty(group);
    for alpha in crate::partition::enumerate_rect(2 * s, 2 * q as u32) {
        let t = alpha.transpose();
        out.entries.insert(Label::Two(alpha, t), 1);
    }
    out
}

/// Restriction of the GL(2q)-irrep S^α to Sp(2q), computed from the
/// character: specialize the GL variables to x_1..x_q, x_1⁻¹..x_q⁻¹ and
/// decompose over Sp(2q).
pub fn gl_to_sp_restrict(alpha: &Partition, q: usize) -> Result<VirtualDecomp> {
    if alpha.height() > 2 * q {
        return Err(Error::HeightExceedsRank(alpha.height(), 2 * q));
    }
    let gl = schur_gl(alpha, 2 * q)?;
    let restricted = gl.map_exponents(crate::laurent::LaurentPoly::x_vars(q), |e| {
        (0..q).map(|m| e[m] - e[q + m]).collect()
    });
    decompose_virtual(&restricted, Group::Sp(q))
}

/// Stable-range Littlewood rule (valid for height(α) ≤ q): the multiplicity
/// of sp_β is Σ N^α_{β,δ} over δ whose columns all have even length.
pub fn gl_to_sp_stable(alpha: &Partition, q: usize) -> Result<VirtualDecomp> {
    if alpha.height() > q {
        return Err(Error::HeightExceedsRank(alpha.height(), q));
    }
    let mut out = VirtualDecomp::empty(Group::Sp(q));
    for beta in subpartitions(alpha) {
        let rest = alpha.size() - beta.size();
        if rest % 2 != 0 {
            continue;
        }
        let mut mult = 0u64;
        for delta in subpartitions(alpha) {
            if delta.size() != rest {
                continue;
            }
            if delta.transpose().parts().iter().any(|&c| c % 2 != 0) {
                continue;
            }
            mult += lr_coefficient(&beta, &delta, alpha);
        }
        if mult > 0 {
            out.entries.insert(Label::One(beta), mult as i64);
        }
    }
    Ok(out)
}

/// 1 iff every entry of α occurs an even number of times (equivalently
/// every column length of α is attained an even... every entry of α^⊤ is
/// even), else 0. Equals the dimension of Sp(2s)-invariants in S^α(C^{2s}).
pub fn sp_invariant_dim(alpha: &Partition, s: usize) -> Result<u64> {
    if alpha.height() > 2 * s {
        return Err(Error::HeightExceedsRank(alpha.height(), 2 * s));
    }
    let even = alpha
        .transpose()
        .parts()
        .iter()
        .all(|&c| c % 2 == 0);
    Ok(u64::from(even))
}

/// Result of a symplectic tensor-product decomposition, with a flag telling
/// whether the combinatorial fast path was applicable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LnProduct {
    pub decomp: VirtualDecomp,
    pub oracle_only: bool,
}

#[derive(Serialize, Deserialize)]
struct LnProductWire {
    group: crate::characters::Group,
    entries: Vec<LnEntryWire>,
    oracle_only: bool,
}

#[derive(Serialize, Deserialize)]
struct LnEntryWire {
    label: Label,
    mult: i64,
}

impl Serialize for LnProduct {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LnProductWire {
            group: self.decomp.group,
            entries: self
                .decomp
                .entries
                .iter()
                .map(|(label, &mult)| LnEntryWire {
                    label: label.clone(),
                    mult,
                })
                .collect(),
            oracle_only: self.oracle_only,
        }
        .serialize(s)
    }
}

/// Decomposition of sp_χ ⊗ sp_ψ over Sp(2q).
///
/// The fast path is the Littlewood–Newell sum Σ_{λ,γ,θ,β} N^χ_{λ,γ}
/// N^ψ_{λ,θ} N^β_{γ,θ} with the two modification cases: β survives
/// unchanged when height(β) ≤ q and is killed when height(β) = q+1. When
/// some contributing β is taller than q+1 the general modification rules
/// would be needed, so the character oracle is used instead and the result
/// flagged.
pub fn ln_product(chi: &Partition, psi: &Partition, q: usize) -> Result<LnProduct> {
    if chi.height() > q {
        return Err(Error::HeightExceedsRank(chi.height(), q));
    }
    if psi.height() > q {
        return Err(Error::HeightExceedsRank(psi.height(), q));
    }
    match ln_fast_path(chi, psi, q) {
        Some(decomp) => Ok(LnProduct {
            decomp,
            oracle_only: false,
        }),
        None => Ok(LnProduct {
            decomp: ln_oracle(chi, psi, q)?,
            oracle_only: true,
        }),
    }
}

/// Character-oracle route: multiply the two characters and peel.
pub fn ln_oracle(chi: &Partition, psi: &Partition, q: usize) -> Result<VirtualDecomp> {
    let f = schur_sp(chi, q)?.mul(schur_sp(psi, q)?.as_ref())?;
    decompose_virtual(&f, Group::Sp(q))
}

fn ln_fast_path(chi: &Partition, psi: &Partition, q: usize) -> Option<VirtualDecomp> {
    let mut raw: HashMap<Partition, u64> = HashMap::new();
    let meet = cellwise_min(chi, psi);
    for lambda in subpartitions(&meet) {
        let gamma_size = chi.size() - lambda.size();
        let theta_size = psi.size() - lambda.size();
        let gammas: Vec<(Partition, u64)> = subpartitions(chi)
            .into_iter()
            .filter(|g| g.size() == gamma_size)
            .filter_map(|g| {
                let c = lr_coefficient(&lambda, &g, chi);
                (c > 0).then_some((g, c))
            })
            .collect();
        let thetas: Vec<(Partition, u64)> = subpartitions(psi)
            .into_iter()
            .filter(|t| t.size() == theta_size)
            .filter_map(|t| {
                let c = lr_coefficient(&lambda, &t, psi);
                (c > 0).then_some((t, c))
            })
            .collect();
        for (gamma, c1) in &gammas {
            for (theta, c2) in &thetas {
                let h = (gamma.height() + theta.height()) as u32;
                let w = gamma.width() + theta.width();
                for beta in crate::partition::enumerate_rect(h as usize, w) {
                    if beta.size() != gamma.size() + theta.size() {
                        continue;
                    }
                    let c3 = lr_coefficient(gamma, theta, &beta);
                    if c3 > 0 {
                        *raw.entry(beta).or_insert(0) += c1 * c2 * c3;
                    }
                }
            }
        }
    }
    if raw.keys().any(|b| b.height() > q + 1) {
        return None;
    }
    let mut out = VirtualDecomp::empty(Group::Sp(q));
    for (beta, mult) in raw {
        if beta.height() <= q && mult > 0 {
            out.entries.insert(Label::One(beta), mult as i64);
        }
    }
    Some(out)
}

/// Checks the doubled-width containment: sp_{(2χ₁)} occurs in sp_χ ⊗ sp_χ,
/// and sp_χ occurs in sp_{(2χ₁)} ⊗ sp_χ with multiplicity exactly one.
pub fn verify_ln_lemma(chi: &Partition, q: usize) -> Result<bool> {
    if chi.height() > q {
        return Err(Error::HeightExceedsRank(chi.height(), q));
    }
    let square = ln_product(chi, chi, q)?;
    let top = Partition::new(if chi.is_empty() {
        vec![]
    } else {
        vec![2 * chi.width()]
    })
    .unwrap();
    let contains = square.decomp.mult(&Label::One(top.clone())) >= 1;
    let back = ln_product(&top, chi, q)?;
    let mult_one = back.decomp.mult(&Label::One(chi.clone())) == 1;
    Ok(contains && mult_one)
}
