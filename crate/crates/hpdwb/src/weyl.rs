//! Type-C root system data: positive roots, the hyperoctahedral Weyl group
//! as explicit signed permutations, the parabolic lattice with cocharacter
//! fixed-point labels, and the dotted Weyl action used for cohomology
//! degree shifting.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A signed permutation w acting on Z^q by (w·v)[i] = sign[i] * v[perm[i]].
#[derive(Clone, Debug)]
pub struct SignedPerm {
    pub perm: Vec<usize>,
    pub sign: Vec<i8>,
    /// Parity of the Weyl length: permutation inversions + sign flips, mod 2.
    pub odd: bool,
}

impl SignedPerm {
    pub fn apply(&self, v: &[i32]) -> Vec<i32> {
        self.perm
            .iter()
            .zip(&self.sign)
            .map(|(&p, &s)| i32::from(s) * v[p])
            .collect()
    }

    pub fn sign_char(&self) -> i64 {
        if self.odd {
            -1
        } else {
            1
        }
    }
}

fn perm_inversions(p: &[usize]) -> usize {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

/// The hyperoctahedral group of rank q: all 2^q · q! signed permutations.
/// Built once per rank and shared.
pub fn weyl_group_c(q: usize) -> Arc<Vec<SignedPerm>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<SignedPerm>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&q) {
        return hit.clone();
    }
    let mut out = Vec::with_capacity((1usize << q) * (1..=q).product::<usize>().max(1));
    for perm in permutations(q) {
        let inv = perm_inversions(&perm);
        for mask in 0u32..(1 << q) {
            let sign: Vec<i8> = (0..q)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect();
            let flips = mask.count_ones() as usize;
            out.push(SignedPerm {
                perm: perm.clone(),
                sign,
                odd: (inv + flips) % 2 == 1,
            });
        }
    }
    let arc = Arc::new(out);
    cache.lock().unwrap().insert(q, arc.clone());
    arc
}

/// Symmetric group of degree n with sign parity, for type-A alternants.
pub fn weyl_group_a(n: usize) -> Arc<Vec<SignedPerm>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<SignedPerm>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let out: Vec<SignedPerm> = permutations(n)
        .into_iter()
        .map(|perm| {
            let odd = perm_inversions(&perm) % 2 == 1;
            SignedPerm {
                perm,
                sign: vec![1; n],
                odd,
            }
        })
        .collect();
    let arc = Arc::new(out);
    cache.lock().unwrap().insert(n, arc.clone());
    arc
}

/// Rank-q root system of Sp(2q) in the standard coordinates.
#[derive(Clone, Debug)]
pub struct RootSystemC {
    pub q: usize,
}

impl RootSystemC {
    pub fn new(q: usize) -> Self {
        RootSystemC { q }
    }

    fn e(&self, i: usize) -> Vec<i32> {
        let mut v = vec![0; self.q];
        v[i] = 1;
        v
    }

    /// {E_i − E_j, E_i + E_j (i < j), 2E_i}; q² roots.
    pub fn positive_roots(&self) -> Vec<Vec<i32>> {
        let mut out = Vec::new();
        for i in 0..self.q {
            for j in i + 1..self.q {
                let mut a = self.e(i);
                a[j] = -1;
                out.push(a);
                let mut b = self.e(i);
                b[j] = 1;
                out.push(b);
            }
        }
        for i in 0..self.q {
            let mut c = self.e(i);
            c[i] = 2;
            out.push(c);
        }
        out
    }

    /// All 2q² roots.
    pub fn all_roots(&self) -> Vec<Vec<i32>> {
        let mut out = self.positive_roots();
        let neg: Vec<Vec<i32>> = out
            .iter()
            .map(|r| r.iter().map(|x| -x).collect())
            .collect();
        out.extend(neg);
        out
    }

    /// α_1..α_{q−1} = E_i − E_{i+1}, α_q = 2E_q (0-based indices here).
    pub fn simple_roots(&self) -> Vec<Vec<i32>> {
        let mut out = Vec::new();
        for i in 0..self.q.saturating_sub(1) {
            let mut a = self.e(i);
            a[i + 1] = -1;
            out.push(a);
        }
        if self.q > 0 {
            let mut c = self.e(self.q - 1);
            c[self.q - 1] = 2;
            out.push(c);
        }
        out
    }

    /// ρ = (q, q−1, …, 1), the half-sum of positive roots.
    pub fn rho(&self) -> Vec<i32> {
        (0..self.q).map(|i| (self.q - i) as i32).collect()
    }

    /// Cocharacter μ_i = (−1 repeated i times, then 0), i ∈ [0, q].
    pub fn mu(&self, i: usize) -> Vec<i32> {
        (0..self.q).map(|m| if m < i { -1 } else { 0 }).collect()
    }

    /// Coefficients of `root` in the simple-root basis; integral for every
    /// root of the system.
    pub fn simple_coords(&self, root: &[i32]) -> Vec<i32> {
        let mut c = Vec::with_capacity(self.q);
        let mut prefix = 0i32;
        for (j, &r) in root.iter().enumerate() {
            prefix += r;
            if j + 1 < self.q {
                c.push(prefix);
            } else {
                debug_assert_eq!(prefix % 2, 0);
                c.push(prefix / 2);
            }
        }
        c
    }
}

fn dot(a: &[i32], b: &[i32]) -> i32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A parabolic P ⊇ B of Sp(2q), labeled by the subset of simple roots
/// adjoined to the Borel. Φ_B is taken to be the negative roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicLabel {
    pub q: usize,
    /// Sorted 0-based indices into the simple-root list.
    pub simples: Vec<usize>,
}

impl ParabolicLabel {
    /// Φ_P = Φ_B ∪ {positive roots supported on the chosen simples}.
    pub fn roots(&self) -> Vec<Vec<i32>> {
        let rs = RootSystemC::new(self.q);
        let mut out: Vec<Vec<i32>> = rs
            .positive_roots()
            .iter()
            .map(|r| r.iter().map(|x| -x).collect())
            .collect();
        out.extend(self.levi_positive_roots());
        out
    }

    /// Positive roots lying in the span of the chosen simple roots.
    pub fn levi_positive_roots(&self) -> Vec<Vec<i32>> {
        let rs = RootSystemC::new(self.q);
        rs.positive_roots()
            .into_iter()
            .filter(|r| {
                rs.simple_coords(r)
                    .iter()
                    .enumerate()
                    .all(|(j, &c)| c == 0 || self.simples.contains(&j))
            })
            .collect()
    }

    /// Φ_{G/P} = Φ \ Φ_P = positive roots outside the Levi.
    pub fn roots_g_mod_p(&self) -> Vec<Vec<i32>> {
        let rs = RootSystemC::new(self.q);
        let levi = self.levi_positive_roots();
        rs.positive_roots()
            .into_iter()
            .filter(|r| !levi.contains(r))
            .collect()
    }

    /// Whether the cocharacter λ lies in A_P: (λ, ρ) ≥ 0 for every ρ ∈ Φ_P.
    pub fn contains_cocharacter(&self, lambda: &[i32]) -> bool {
        self.roots().iter().all(|r| dot(lambda, r) >= 0)
    }

    pub fn is_contained_in(&self, other: &ParabolicLabel) -> bool {
        self.simples.iter().all(|s| other.simples.contains(s))
    }
}

/// All 2^q parabolics containing B, ordered by their simple-root subsets.
pub fn parabolic_subgroups(q: usize) -> Vec<ParabolicLabel> {
    let mut out = Vec::with_capacity(1 << q);
    for mask in 0u32..(1 << q) {
        let simples = (0..q).filter(|i| mask >> i & 1 == 1).collect();
        out.push(ParabolicLabel { q, simples });
    }
    out.sort_by(|a, b| a.simples.cmp(&b.simples));
    out
}

/// The parabolic whose roots pair ≥ 0 with μ_1: all simples except E_1−E_2.
pub fn p1_parabolic(q: usize) -> ParabolicLabel {
    ParabolicLabel {
        q,
        simples: (1..q).collect(),
    }
}

/// Largest i ∈ [0, q] with μ_i ∈ A_P. Identifies the fixed locus X_P.
pub fn mu_fixed_label(p: &ParabolicLabel) -> usize {
    let rs = RootSystemC::new(p.q);
    (0..=p.q)
        .filter(|&i| p.contains_cocharacter(&rs.mu(i)))
        .max()
        .unwrap_or(0)
}

/// Dotted Weyl action normal form: for χ with χ+ρ regular, the unique
/// dominant w(χ+ρ)−ρ together with the parity of w. None when χ+ρ is
/// singular (a coordinate zero or two coordinates equal in absolute value).
pub fn bwb_dotted(chi: &[i32], q: usize) -> Option<(Vec<i32>, bool)> {
    assert_eq!(chi.len(), q);
    let rho = RootSystemC::new(q).rho();
    let v: Vec<i32> = chi.iter().zip(&rho).map(|(c, r)| c + r).collect();
    if v.iter().any(|&x| x == 0) {
        return None;
    }
    let mut abs: Vec<i32> = v.iter().map(|x| x.abs()).collect();
    for i in 0..q {
        for j in i + 1..q {
            if abs[i] == abs[j] {
                return None;
            }
        }
    }
    let flips = v.iter().filter(|&&x| x < 0).count();
    // inversion count of the permutation sorting |v| into descending order
    let mut inv = 0usize;
    for i in 0..q {
        for j in i + 1..q {
            if abs[i] < abs[j] {
                inv += 1;
            }
        }
    }
    abs.sort_unstable_by(|a, b| b.cmp(a));
    let dominant: Vec<i32> = abs.iter().zip(&rho).map(|(a, r)| a - r).collect();
    Some((dominant, (flips + inv) % 2 == 1))
}

/// A weight of GSp(2q): a torus part and the similitude Δ-part, subject to
/// Σ t_i + Δ ≡ 0 (mod 2).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GSpWeight {
    #[serde(rename = "t")]
    pub t_part: Vec<i32>,
    #[serde(rename = "d")]
    pub delta_part: i32,
}

impl GSpWeight {
    pub fn new(t_part: Vec<i32>, delta_part: i32) -> Result<Self> {
        let total: i32 = t_part.iter().sum::<i32>() + delta_part;
        if total.rem_euclid(2) != 0 {
            return Err(Error::ParityViolation(format!(
                "t={t_part:?}, d={delta_part}"
            )));
        }
        Ok(GSpWeight { t_part, delta_part })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts_and_rho() {
        for q in 1..=4 {
            let rs = RootSystemC::new(q);
            assert_eq!(rs.positive_roots().len(), q * q);
            assert_eq!(rs.all_roots().len(), 2 * q * q);
            assert_eq!(rs.simple_roots().len(), q);
            let mut half_sum = vec![0i32; q];
            for r in rs.positive_roots() {
                for (h, x) in half_sum.iter_mut().zip(&r) {
                    *h += x;
                }
            }
            let rho: Vec<i32> = half_sum.iter().map(|x| x / 2).collect();
            assert_eq!(rho, rs.rho());
            assert_eq!(
                weyl_group_c(q).len(),
                (1usize << q) * (1..=q).product::<usize>()
            );
        }
    }

    #[test]
    fn simple_coords_reconstruct() {
        for q in 1..=4 {
            let rs = RootSystemC::new(q);
            let simples = rs.simple_roots();
            for r in rs.all_roots() {
                let c = rs.simple_coords(&r);
                let mut acc = vec![0i32; q];
                for (coef, s) in c.iter().zip(&simples) {
                    for (a, x) in acc.iter_mut().zip(s) {
                        *a += coef * x;
                    }
                }
                assert_eq!(acc, r);
            }
        }
    }

    #[test]
    fn weyl_signs_multiply() {
        // parity is a homomorphism: check on rank 2 by composing
        let w = weyl_group_c(2);
        for a in w.iter() {
            for b in w.iter() {
                // c = a∘b acting as c(v) = a(b(v))
                let v = vec![5, 2];
                let ab = a.apply(&b.apply(&v));
                let c = w
                    .iter()
                    .find(|c| c.apply(&v) == ab && c.apply(&[9, 4]) == a.apply(&b.apply(&[9, 4])))
                    .unwrap();
                assert_eq!(c.odd, a.odd ^ b.odd);
            }
        }
    }

    #[test]
    fn parabolic_counts() {
        assert_eq!(parabolic_subgroups(1).len(), 2);
        assert_eq!(parabolic_subgroups(2).len(), 4);
        assert_eq!(parabolic_subgroups(3).len(), 8);
        // full parabolic (G itself) has empty Φ_{G/P}
        let g = ParabolicLabel {
            q: 2,
            simples: vec![0, 1],
        };
        assert!(g.roots_g_mod_p().is_empty());
        // Borel: Φ_{G/B} = Φ⁺
        let b = ParabolicLabel {
            q: 2,
            simples: vec![],
        };
        assert_eq!(b.roots_g_mod_p().len(), 4);
    }

    #[test]
    fn mu_fixed_label_examples() {
        let g1 = ParabolicLabel {
            q: 1,
            simples: vec![0],
        };
        assert_eq!(mu_fixed_label(&g1), 0);
        let b1 = ParabolicLabel {
            q: 1,
            simples: vec![],
        };
        assert_eq!(mu_fixed_label(&b1), 1);
        assert_eq!(mu_fixed_label(&p1_parabolic(2)), 1);
    }

    #[test]
    fn mu_fixed_label_monotone() {
        for q in 1..=3 {
            let ps = parabolic_subgroups(q);
            for a in &ps {
                assert!(a.contains_cocharacter(&RootSystemC::new(q).mu(0)));
                for b in &ps {
                    if a.is_contained_in(b) {
                        assert!(mu_fixed_label(a) >= mu_fixed_label(b));
                    }
                }
            }
        }
    }

    #[test]
    fn bwb_examples() {
        assert_eq!(bwb_dotted(&[0], 1), Some((vec![0], false)));
        assert_eq!(bwb_dotted(&[-2], 1), Some((vec![0], true)));
        assert_eq!(bwb_dotted(&[-1], 1), None);
        // rank 2: χ = 0 stays put
        assert_eq!(bwb_dotted(&[0, 0], 2), Some((vec![0, 0], false)));
        // χ+ρ = (1,2) needs one transposition
        assert_eq!(bwb_dotted(&[-1, 1], 2), Some((vec![0, 0], true)));
    }

    #[test]
    fn bwb_dominant_and_orbit_invariant() {
        let q = 3;
        let w = weyl_group_c(q);
        let rho = RootSystemC::new(q).rho();
        let cases = [
            vec![-2, 1, 0],
            vec![4, -3, 2],
            vec![-6, -5, -1],
            vec![0, 2, -4],
            vec![1, 1, 1],
        ];
        for chi in &cases {
            let base = bwb_dotted(chi, q);
            if let Some((dom, _)) = &base {
                let shifted: Vec<i32> = dom.iter().zip(&rho).map(|(d, r)| d + r).collect();
                assert!(shifted.windows(2).all(|s| s[0] > s[1]));
                assert!(*shifted.last().unwrap() > 0);
            }
            for elt in w.iter() {
                let moved: Vec<i32> = {
                    let v: Vec<i32> = chi.iter().zip(&rho).map(|(c, r)| c + r).collect();
                    elt.apply(&v).iter().zip(&rho).map(|(x, r)| x - r).collect()
                };
                match (&base, bwb_dotted(&moved, q)) {
                    (Some((dom, par)), Some((dom2, par2))) => {
                        assert_eq!(dom, &dom2);
                        assert_eq!(par ^ elt.odd, par2);
                    }
                    (None, None) => {}
                    _ => panic!("orbit singularity mismatch"),
                }
            }
        }
    }

    #[test]
    fn gsp_weight_parity() {
        assert!(GSpWeight::new(vec![1, 0], 2).is_err());
        assert!(GSpWeight::new(vec![1, 1], 2).is_ok());
        assert!(GSpWeight::new(vec![1], -3).is_ok());
        let w = GSpWeight::new(vec![2], 4).unwrap();
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"t":[2],"d":4}"#);
    }
}
