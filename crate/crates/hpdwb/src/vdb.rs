//! Weight calculus on X = Hom(V, Q): the split weight table of the
//! cocharacter fixed loci, local-cohomology multiplicity counting, box
//! enumeration of the appearing characters, the exclusion criterion for
//! window Hom differences, and the mod-2 parity counts behind the
//! non-vanishing statements.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::hpd::{CaseTag, DualityParams};
use crate::report::Report;
use crate::weyl::{bwb_dotted, parabolic_subgroups, p1_parabolic, GSpWeight, ParabolicLabel,
    RootSystemC, weyl_group_c};

/// Node budget for the enumeration loops. Exceeding it aborts with
/// RESOURCE_EXCEEDED rather than returning partial data.
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn charge(&self, n: u64) -> Result<()> {
        let prev = self.used.fetch_add(n, Ordering::Relaxed);
        if prev.saturating_add(n) > self.limit {
            return Err(Error::ResourceExceeded(format!(
                "node budget {} exhausted",
                self.limit
            )));
        }
        Ok(())
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(200_000_000)
    }
}

/// The torus weights of X = Hom(V, Q) and their split along a cocharacter:
/// 2q weight types ±E_m, Δ-weight 1, each with multiplicity v.
#[derive(Clone, Debug, Serialize)]
pub struct XWeightTable {
    pub v: usize,
    pub q: usize,
    /// (torus part, Δ part, multiplicity)
    pub weights: Vec<(Vec<i32>, i32, usize)>,
}

impl XWeightTable {
    pub fn new(v: usize, q: usize) -> Self {
        let mut weights = Vec::with_capacity(2 * q);
        for m in 0..q {
            for sign in [1i32, -1] {
                let mut e = vec![0; q];
                e[m] = sign;
                weights.push((e, 1, v));
            }
        }
        XWeightTable { v, q, weights }
    }

    /// Weights pairing ≤ 0 with μ_i.
    pub fn chars_le(&self, i: usize) -> Vec<(Vec<i32>, i32, usize)> {
        let mu = RootSystemC::new(self.q).mu(i);
        self.weights
            .iter()
            .filter(|(w, _, _)| w.iter().zip(&mu).map(|(a, b)| a * b).sum::<i32>() <= 0)
            .cloned()
            .collect()
    }

    /// Weights pairing > 0 with μ_i.
    pub fn chars_gt(&self, i: usize) -> Vec<(Vec<i32>, i32, usize)> {
        let mu = RootSystemC::new(self.q).mu(i);
        self.weights
            .iter()
            .filter(|(w, _, _)| w.iter().zip(&mu).map(|(a, b)| a * b).sum::<i32>() > 0)
            .cloned()
            .collect()
    }
}

fn binom_u128(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    crate::partition::binomial(n as u64, k as u64)
}

fn mult_cache() -> &'static Mutex<HashMap<(usize, usize, Vec<i32>, i32), u128>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize, Vec<i32>, i32), u128>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Multiplicity of the character χ in the local cohomology of the μ_i fixed
/// stratum: the number of ways to write χ = Σ (a+1)·α over Chars^{≤0} minus
/// Σ b·α over Chars^{>0} with all a, b ≥ 0.
///
/// Separates per coordinate. For m ≤ i the two weight types ±E_m split as
/// (at-least-once) and (subtracted) generators: writing A ≥ v for the first
/// group total and B ≥ 0 for the second, the coordinate contributes
/// t_m = A + B and Δ_m = A − B, with C(A−1,v−1)·C(B+v−1,v−1) choices. For
/// m > i both totals are at least v: t_m = A − A′, Δ_m = A + A′,
/// C(A−1,v−1)·C(A′−1,v−1) choices. The Δ-parts convolve to χ_Δ; lower
/// bounds on each Δ_m make the enumeration finite.
pub fn local_cohomology_multiplicity(
    i: usize,
    chi: &GSpWeight,
    v: usize,
    budget: &Budget,
) -> Result<u128> {
    let q = chi.t_part.len();
    assert!(i <= q);
    assert!(v >= 1);
    let key = (i, v, chi.t_part.clone(), chi.delta_part);
    if let Some(&hit) = mult_cache().lock().unwrap().get(&key) {
        return Ok(hit);
    }
    let d = i64::from(chi.delta_part);
    let vi = v as i64;
    let t: Vec<i64> = chi.t_part.iter().map(|&x| i64::from(x)).collect();
    for m in 0..i {
        if t[m] < vi {
            mult_cache().lock().unwrap().insert(key, 0);
            return Ok(0);
        }
    }
    let mins: Vec<i64> = (0..q)
        .map(|m| if m < i { 2 * vi - t[m] } else { 2 * vi + t[m].abs() })
        .collect();
    if d < mins.iter().sum::<i64>() {
        mult_cache().lock().unwrap().insert(key, 0);
        return Ok(0);
    }
    let overflow = || Error::ResourceExceeded("multiplicity count overflow".into());

    // dp over partial Δ sums of the processed coordinates
    let mut dp: HashMap<i64, u128> = HashMap::new();
    dp.insert(0, 1);
    for m in 0..q {
        let rem_min: i64 = mins[m + 1..].iter().sum();
        let mut next: HashMap<i64, u128> = HashMap::new();
        for (&sum, &cnt) in &dp {
            let cap = d - sum - rem_min;
            if m < i {
                for a in vi..=t[m] {
                    let delta_m = 2 * a - t[m];
                    if delta_m > cap {
                        break;
                    }
                    budget.charge(1)?;
                    let b = t[m] - a;
                    let w = binom_u128(a - 1, vi - 1)
                        .checked_mul(binom_u128(b + vi - 1, vi - 1))
                        .ok_or_else(overflow)?;
                    let slot = next.entry(sum + delta_m).or_insert(0);
                    *slot = slot
                        .checked_add(cnt.checked_mul(w).ok_or_else(overflow)?)
                        .ok_or_else(overflow)?;
                }
            } else {
                let mut a2 = vi.max(vi - t[m]);
                loop {
                    let delta_m = 2 * a2 + t[m];
                    if delta_m > cap {
                        break;
                    }
                    budget.charge(1)?;
                    let a = a2 + t[m];
                    let w = binom_u128(a - 1, vi - 1)
                        .checked_mul(binom_u128(a2 - 1, vi - 1))
                        .ok_or_else(overflow)?;
                    let slot = next.entry(sum + delta_m).or_insert(0);
                    *slot = slot
                        .checked_add(cnt.checked_mul(w).ok_or_else(overflow)?)
                        .ok_or_else(overflow)?;
                    a2 += 1;
                }
            }
        }
        dp = next;
    }
    let total = dp.get(&d).copied().unwrap_or(0);
    mult_cache().lock().unwrap().insert(key, total);
    Ok(total)
}

/// Closed-form shape constraints on the characters appearing in H_{μ_i}:
/// for i = 0 the form is ((d), 2qv + k) with k ≥ Σ|d_m|; for i ≥ 1 the
/// first i coordinates are v + c_j with c_j ≥ 0, and with k the Δ-offset
/// from 2qv − iv, both Σc + |k| ≥ Σ|d| and k + Σc ≥ 0 hold.
pub fn satisfies_closed_form(i: usize, v: usize, chi: &GSpWeight) -> bool {
    let q = chi.t_part.len();
    let vi = v as i64;
    let t: Vec<i64> = chi.t_part.iter().map(|&x| i64::from(x)).collect();
    let k = i64::from(chi.delta_part) - (2 * q as i64 * vi - i as i64 * vi);
    if i == 0 {
        let abs: i64 = t.iter().map(|x| x.abs()).sum();
        return k >= abs;
    }
    let mut c_sum = 0;
    for m in 0..i {
        let c = t[m] - vi;
        if c < 0 {
            return false;
        }
        c_sum += c;
    }
    let tail_abs: i64 = t[i..].iter().map(|x| x.abs()).sum();
    c_sum + k.abs() >= tail_abs && k + c_sum >= 0
}

/// All characters with nonzero multiplicity in H_{μ_i} inside the given
/// box: coordinates bounded by `t_bound` in absolute value, Δ in
/// `delta_range` = [lo, hi).
pub fn characters_in_h_mu(
    i: usize,
    v: usize,
    q: usize,
    delta_range: (i32, i32),
    t_bound: i32,
    budget: &Budget,
) -> Result<Vec<(GSpWeight, u128)>> {
    let mut out = Vec::new();
    let mut t = vec![-t_bound; q];
    loop {
        budget.charge(1)?;
        let t_sum: i32 = t.iter().sum();
        for d in delta_range.0..delta_range.1 {
            if (t_sum + d).rem_euclid(2) != 0 {
                continue;
            }
            let w = GSpWeight {
                t_part: t.clone(),
                delta_part: d,
            };
            let m = local_cohomology_multiplicity(i, &w, v, budget)?;
            if m > 0 {
                out.push((w, m));
            }
        }
        // odometer over the box
        let mut pos = q;
        loop {
            if pos == 0 {
                out.sort_by(|a, b| a.0.cmp(&b.0));
                return Ok(out);
            }
            pos -= 1;
            if t[pos] < t_bound {
                t[pos] += 1;
                for x in t[pos + 1..].iter_mut() {
                    *x = -t_bound;
                }
                break;
            }
        }
    }
}

/// Outcome of the exclusion test. `Possible` is only a failure to exclude,
/// not a proof of appearance; the parity computations below provide actual
/// non-vanishing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Vanishing {
    Excluded,
    Possible {
        i: usize,
        chi_prime: GSpWeight,
        subset: Vec<Vec<i32>>,
    },
}

/// Distinct values of Σ_{ρ∈S} ρ over subsets S of the given roots, each
/// with one representative subset.
fn subset_sums(roots: &[Vec<i32>], q: usize) -> Vec<(Vec<i32>, Vec<Vec<i32>>)> {
    let mut sums: HashMap<Vec<i32>, Vec<Vec<i32>>> = HashMap::new();
    sums.insert(vec![0; q], Vec::new());
    for r in roots {
        let snapshot: Vec<(Vec<i32>, Vec<Vec<i32>>)> =
            sums.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        for (sum, subset) in snapshot {
            let new_sum: Vec<i32> = sum.iter().zip(r).map(|(a, b)| a + b).collect();
            sums.entry(new_sum).or_insert_with(|| {
                let mut s = subset.clone();
                s.push(r.clone());
                s
            });
        }
    }
    let mut out: Vec<(Vec<i32>, Vec<Vec<i32>>)> = sums.into_iter().collect();
    out.sort();
    out
}

/// Necessary condition for χ to appear in the unstable-locus local
/// cohomology: some χ′ = χ − Σ_{ρ∈S} ρ with S a subset of the roots of the
/// gauge group must appear in some H_{μ_i}. Returns `Excluded` when no
/// witness exists (proving non-appearance), else one witness.
pub fn vanishing_check(
    chi: &GSpWeight,
    params: &DualityParams,
    budget: &Budget,
) -> Result<Vanishing> {
    params.validate()?;
    let q = params.q;
    if q > 3 {
        return Err(Error::ResourceExceeded(
            "subset enumeration over 2q^2 roots is restricted to q <= 3".into(),
        ));
    }
    if chi.t_part.len() != q {
        return Err(Error::InvalidParams("t-part length must be q".into()));
    }
    let roots = RootSystemC::new(q).all_roots();
    for (sum, subset) in subset_sums(&roots, q) {
        let t_prime: Vec<i32> = chi.t_part.iter().zip(&sum).map(|(a, b)| a - b).collect();
        let chi_prime = GSpWeight {
            t_part: t_prime,
            delta_part: chi.delta_part,
        };
        for i in 0..=q {
            budget.charge(1)?;
            if local_cohomology_multiplicity(i, &chi_prime, params.v, budget)? > 0 {
                return Ok(Vanishing::Possible {
                    i,
                    chi_prime,
                    subset,
                });
            }
        }
    }
    Ok(Vanishing::Excluded)
}

/// Counts pairs (R, S) with R ⊇ B parabolic and S ⊆ −Φ_{G/R} whose root sum
/// normalizes to zero under the dotted action.
pub fn parity_count_c(q: usize, budget: &Budget) -> Result<(u64, bool)> {
    if q > 4 {
        return Err(Error::ResourceExceeded(
            "parabolic subset enumeration restricted to q <= 4".into(),
        ));
    }
    let mut count = 0u64;
    for r in parabolic_subgroups(q) {
        let neg: Vec<Vec<i32>> = r
            .roots_g_mod_p()
            .iter()
            .map(|root| root.iter().map(|x| -x).collect())
            .collect();
        let n = neg.len();
        for mask in 0u64..(1 << n) {
            budget.charge(1)?;
            let mut sum = vec![0i32; q];
            for (b, root) in neg.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    for (s, x) in sum.iter_mut().zip(root) {
                        *s += x;
                    }
                }
            }
            if let Some((dom, _)) = bwb_dotted(&sum, q) {
                if dom.iter().all(|&x| x == 0) {
                    count += 1;
                }
            }
        }
    }
    Ok((count, count % 2 == 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NonvanishingTarget {
    Canonical,
    TwoS,
}

/// Mod-2 multiplicity of the target character in the unstable-locus local
/// cohomology, via the parabolic reduction: sum local-cohomology
/// multiplicities of all χ′ = w·(δ) − Σ_{ρ∈S} ρ over parabolics R in the
/// relevant branch and S ⊆ −Φ_{G/R}. The parity must come out odd.
pub fn nonvanishing_parity_check(
    params: &DualityParams,
    target: NonvanishingTarget,
    budget: &Budget,
) -> Result<Report> {
    params.validate()?;
    if params.case != CaseTag::Even {
        return Err(Error::InvalidParams(
            "parity targets are stated for the even case".into(),
        ));
    }
    let q = params.q;
    if q > 3 {
        return Err(Error::ResourceExceeded("restricted to q <= 3".into()));
    }
    let v = params.v;
    let qv = (q * v) as i32;
    let (delta_t, delta_d, i, parabolics): (Vec<i32>, i32, usize, Vec<ParabolicLabel>) =
        match target {
            NonvanishingTarget::Canonical => (
                vec![0; q],
                2 * qv,
                0,
                parabolic_subgroups(q),
            ),
            NonvanishingTarget::TwoS => {
                let mut t = vec![0; q];
                t[0] = 2 * params.s as i32;
                let p1 = p1_parabolic(q);
                let rs = parabolic_subgroups(q)
                    .into_iter()
                    .filter(|r| r.is_contained_in(&p1))
                    .collect();
                (t, 2 * qv - v as i32, 1, rs)
            }
        };
    let delta = GSpWeight::new(delta_t.clone(), delta_d)?;
    let rho = RootSystemC::new(q).rho();
    let shifted: Vec<i32> = delta_t.iter().zip(&rho).map(|(t, r)| t + r).collect();
    let weyl = weyl_group_c(q);

    let mut total: u128 = 0;
    for r in &parabolics {
        let neg: Vec<Vec<i32>> = r
            .roots_g_mod_p()
            .iter()
            .map(|root| root.iter().map(|x| -x).collect())
            .collect();
        for (sum, _) in subset_sums(&neg, q) {
            for w in weyl.iter() {
                budget.charge(1)?;
                let moved = w.apply(&shifted);
                let t_prime: Vec<i32> = moved
                    .iter()
                    .zip(&rho)
                    .zip(&sum)
                    .map(|((m, r), s)| m - r - s)
                    .collect();
                let chi_prime = GSpWeight {
                    t_part: t_prime,
                    delta_part: delta_d,
                };
                total =
                    total.wrapping_add(local_cohomology_multiplicity(i, &chi_prime, v, budget)?);
            }
        }
    }
    let odd = total % 2 == 1;
    let mut report = Report::new();
    report.push_flag(
        format!("target {:?} multiplicity parity is odd (δ = {delta:?})", target),
        odd,
        json!("odd"),
        json!(if odd { "odd" } else { "even" }),
    );
    report.push_flag(
        "mod-2 witness count",
        odd,
        json!("odd total"),
        json!(total.to_string()),
    );
    if target == NonvanishingTarget::TwoS && q >= 2 {
        let (_, reduced_odd) = parity_count_c(q - 1, budget)?;
        report.push(
            "agrees with reduced-rank zero-sum parity",
            json!(reduced_odd),
            json!(odd),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gsp(t: &[i32], d: i32) -> GSpWeight {
        GSpWeight {
            t_part: t.to_vec(),
            delta_part: d,
        }
    }

    #[test]
    fn weight_table_splits() {
        for (v, q) in [(4, 1), (5, 2), (6, 3)] {
            let table = XWeightTable::new(v, q);
            for i in 0..=q {
                let le: usize = table.chars_le(i).iter().map(|(_, _, m)| m).sum();
                let gt: usize = table.chars_gt(i).iter().map(|(_, _, m)| m).sum();
                assert_eq!(le + gt, 2 * q * v);
            }
            assert!(table.chars_gt(0).is_empty());
            let gt_q = table.chars_gt(q);
            assert_eq!(gt_q.len(), q);
            assert!(gt_q.iter().all(|(w, d, m)| {
                w.iter().sum::<i32>() == -1 && *d == 1 && *m == v
            }));
        }
    }

    #[test]
    fn mult_examples() {
        let b = Budget::unlimited();
        // the forced solution at ((v), v) for q = 1
        for v in 2..=6 {
            let chi = gsp(&[v], v);
            assert_eq!(
                local_cohomology_multiplicity(1, &chi, v as usize, &b).unwrap(),
                1
            );
        }
        // i = 0 at the canonical Δ
        for (v, q) in [(4usize, 1usize), (5, 2), (6, 2)] {
            let zero = vec![0i32; q];
            let d0 = (2 * q * v) as i32;
            assert_eq!(
                local_cohomology_multiplicity(0, &gsp(&zero, d0), v, &b).unwrap(),
                1
            );
            assert_eq!(
                local_cohomology_multiplicity(0, &gsp(&zero, d0 - 1), v, &b).unwrap(),
                0
            );
            assert_eq!(
                local_cohomology_multiplicity(0, &gsp(&zero, d0 - 2), v, &b).unwrap(),
                0
            );
        }
        // ((v·1_i, 0), 2qv − iv) appears exactly once
        for (v, q) in [(4usize, 2usize), (6, 2), (5, 3)] {
            for i in 0..=q {
                let mut t = vec![0i32; q];
                for slot in t.iter_mut().take(i) {
                    *slot = v as i32;
                }
                let d = (2 * q * v) as i32 - (i * v) as i32;
                assert_eq!(
                    local_cohomology_multiplicity(i, &gsp(&t, d), v, &b).unwrap(),
                    1,
                    "i={i}, v={v}, q={q}"
                );
            }
        }
    }

    #[test]
    fn closed_form_on_enumeration() {
        let b = Budget::unlimited();
        for i in 0..=1usize {
            let found = characters_in_h_mu(i, 4, 1, (0, 12), 6, &b).unwrap();
            assert!(!found.is_empty());
            for (w, m) in &found {
                assert!(*m > 0);
                assert!(satisfies_closed_form(i, 4, w), "{w:?}");
            }
        }
        // i = 0: nothing below Δ = 2qv
        let low = characters_in_h_mu(0, 4, 1, (0, 8), 6, &b).unwrap();
        assert!(low.is_empty());
    }

    #[test]
    fn budget_triggers() {
        let b = Budget::new(3);
        let err = characters_in_h_mu(1, 6, 2, (0, 30), 8, &b).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn vanishing_examples() {
        let b = Budget::unlimited();
        let p = DualityParams::new(1, 2, CaseTag::Even);
        assert_eq!(p.v, 6);
        // condition (2): t ∈ Y_{2,2}, Δ < 2qv − v = 18
        let out = vanishing_check(&gsp(&[1, 1], 16), &p, &b).unwrap();
        assert_eq!(out, Vanishing::Excluded);
        // canonical character is not excluded
        let out = vanishing_check(&gsp(&[0, 0], 24), &p, &b).unwrap();
        assert!(matches!(out, Vanishing::Possible { .. }));
        // the 2s character at Δ = 2qv − v
        let out = vanishing_check(&gsp(&[2, 0], 18), &p, &b).unwrap();
        assert!(matches!(out, Vanishing::Possible { .. }));
    }

    #[test]
    fn parity_count_examples() {
        let b = Budget::unlimited();
        let (count, odd) = parity_count_c(1, &b).unwrap();
        assert_eq!(count, 3);
        assert!(odd);
        let (_, odd) = parity_count_c(2, &b).unwrap();
        assert!(odd);
    }

    #[test]
    fn nonvanishing_q1() {
        let b = Budget::unlimited();
        let p = DualityParams::new(1, 1, CaseTag::Even);
        let r = nonvanishing_parity_check(&p, NonvanishingTarget::TwoS, &b).unwrap();
        assert!(r.pass(), "{}", r.to_tsv());
        let r = nonvanishing_parity_check(&p, NonvanishingTarget::Canonical, &b).unwrap();
        assert!(r.pass(), "{}", r.to_tsv());
    }
}
