//! Weyl character calculus: Schur polynomials for GL(n), symplectic
//! characters for Sp(2q) via the type-C alternant, product-group characters,
//! the kernel and exterior-algebra product characters, symmetric powers,
//! and decomposition of Weyl-invariant Laurent polynomials into irreducible
//! characters.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::partition::Partition;
use crate::weyl::{weyl_group_a, weyl_group_c, RootSystemC, SignedPerm};

/// Classical group (or a two-factor product) acting through its maximal
/// torus. `Sp(q)` denotes Sp(2q), rank q. Product variables are the
/// concatenation: x-block then y-block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    Gl(usize),
    Sp(usize),
    GlGl(usize, usize),
    SpSp(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    A,
    C,
}

#[derive(Clone, Copy, Debug)]
pub struct Block {
    pub kind: BlockKind,
    pub rank: usize,
    pub offset: usize,
}

impl Group {
    pub fn blocks(&self) -> Vec<Block> {
        match *self {
            Group::Gl(n) => vec![Block {
                kind: BlockKind::A,
                rank: n,
                offset: 0,
            }],
            Group::Sp(q) => vec![Block {
                kind: BlockKind::C,
                rank: q,
                offset: 0,
            }],
            Group::GlGl(a, b) => vec![
                Block {
                    kind: BlockKind::A,
                    rank: a,
                    offset: 0,
                },
                Block {
                    kind: BlockKind::A,
                    rank: b,
                    offset: a,
                },
            ],
            Group::SpSp(a, b) => vec![
                Block {
                    kind: BlockKind::C,
                    rank: a,
                    offset: 0,
                },
                Block {
                    kind: BlockKind::C,
                    rank: b,
                    offset: a,
                },
            ],
        }
    }

    pub fn rank(&self) -> usize {
        self.blocks().iter().map(|b| b.rank).sum()
    }

    pub fn vars(&self) -> Vec<String> {
        match *self {
            Group::Gl(n) | Group::Sp(n) => LaurentPoly::x_vars(n),
            Group::GlGl(a, b) | Group::SpSp(a, b) => {
                let mut v = LaurentPoly::x_vars(a);
                v.extend(LaurentPoly::y_vars(b));
                v
            }
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Group::Gl(n) => write!(f, "GL({n})"),
            Group::Sp(q) => write!(f, "Sp({})", 2 * q),
            Group::GlGl(a, b) => write!(f, "GL({a})xGL({b})"),
            Group::SpSp(a, b) => write!(f, "Sp({})xSp({})", 2 * a, 2 * b),
        }
    }
}

impl FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        fn one(part: &str) -> Result<Group> {
            let err = || Error::InvalidParams(format!("bad group: {part}"));
            if let Some(n) = part.strip_prefix("GL(").and_then(|r| r.strip_suffix(')')) {
                return Ok(Group::Gl(n.parse().map_err(|_| err())?));
            }
            if let Some(n) = part.strip_prefix("Sp(").and_then(|r| r.strip_suffix(')')) {
                let n: usize = n.parse().map_err(|_| err())?;
                if n % 2 != 0 {
                    return Err(err());
                }
                return Ok(Group::Sp(n / 2));
            }
            Err(err())
        }
        match s.split_once('x') {
            None => one(s),
            Some((l, r)) => match (one(l)?, one(r)?) {
                (Group::Gl(a), Group::Gl(b)) => Ok(Group::GlGl(a, b)),
                (Group::Sp(a), Group::Sp(b)) => Ok(Group::SpSp(a, b)),
                _ => Err(Error::InvalidParams(format!("mixed product group: {s}"))),
            },
        }
    }
}

impl Serialize for Group {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Group {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Irrep label: one partition, or a pair for product groups.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    One(Partition),
    Two(Partition, Partition),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::One(p) => write!(f, "{p}"),
            Label::Two(p, r) => write!(f, "({p},{r})"),
        }
    }
}

/// Finite integer combination of irreducible characters of a fixed group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualDecomp {
    pub group: Group,
    pub entries: BTreeMap<Label, i64>,
}

#[derive(Serialize, Deserialize)]
struct DecompEntryWire {
    label: Label,
    mult: i64,
}

#[derive(Serialize, Deserialize)]
struct DecompWire {
    group: Group,
    entries: Vec<DecompEntryWire>,
}

impl Serialize for VirtualDecomp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DecompWire {
            group: self.group,
            entries: self
                .entries
                .iter()
                .map(|(label, &mult)| DecompEntryWire {
                    label: label.clone(),
                    mult,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for VirtualDecomp {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = DecompWire::deserialize(d)?;
        let mut entries = BTreeMap::new();
        for e in wire.entries {
            if e.mult != 0 {
                entries.insert(e.label, e.mult);
            }
        }
        Ok(VirtualDecomp {
            group: wire.group,
            entries,
        })
    }
}

impl VirtualDecomp {
    pub fn empty(group: Group) -> Self {
        VirtualDecomp {
            group,
            entries: BTreeMap::new(),
        }
    }

    pub fn mult(&self, label: &Label) -> i64 {
        self.entries.get(label).copied().unwrap_or(0)
    }

    /// Σ mult · character; inverse of decompose_virtual.
    pub fn character(&self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero(self.group.vars());
        for (label, &mult) in &self.entries {
            acc = acc.add(&irrep_character(self.group, label)?.scale(mult))?;
        }
        Ok(acc)
    }

    pub fn total_dim(&self) -> Result<BigInt> {
        let mut acc = BigInt::zero();
        for (label, &mult) in &self.entries {
            acc += irrep_character(self.group, label)?.eval_at_ones() * mult;
        }
        Ok(acc)
    }
}

#[derive(PartialEq, Eq, Hash)]
enum SchurKey {
    Gl(Partition, usize),
    Sp(Partition, usize),
}

fn schur_cache() -> &'static Mutex<HashMap<SchurKey, Arc<LaurentPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<SchurKey, Arc<LaurentPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Schur polynomial s_λ(x_1..x_n), by semistandard tableau enumeration.
pub fn schur_gl(lambda: &Partition, n: usize) -> Result<Arc<LaurentPoly>> {
    if lambda.height() > n {
        return Err(Error::HeightExceedsRank(lambda.height(), n));
    }
    let key = SchurKey::Gl(lambda.clone(), n);
    if let Some(hit) = schur_cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let mut poly = LaurentPoly::zero(LaurentPoly::x_vars(n));
    let rows = lambda.height();
    // fill row by row; prev holds the row above, entries strictly increase
    // down columns and weakly increase along rows
    fn fill(
        poly: &mut LaurentPoly,
        lambda: &Partition,
        n: usize,
        row: usize,
        prev: &[u8],
        weight: &mut Vec<i32>,
    ) {
        if row == lambda.height() {
            poly.add_term(weight.clone(), &BigInt::one());
            return;
        }
        let len = lambda.part(row) as usize;
        let mut current = vec![0u8; len];
        fn cell(
            poly: &mut LaurentPoly,
            lambda: &Partition,
            n: usize,
            row: usize,
            prev: &[u8],
            current: &mut Vec<u8>,
            col: usize,
            weight: &mut Vec<i32>,
        ) {
            let len = current.len();
            if col == len {
                let snapshot = current.clone();
                fill(poly, lambda, n, row + 1, &snapshot, weight);
                return;
            }
            let lo = {
                let above = if row == 0 { 0 } else { prev[col] };
                let left = if col == 0 { 1 } else { current[col - 1] };
                (above + 1).max(left)
            };
            for val in lo..=(n as u8) {
                current[col] = val;
                weight[(val - 1) as usize] += 1;
                cell(poly, lambda, n, row, prev, current, col + 1, weight);
                weight[(val - 1) as usize] -= 1;
            }
        }
        cell(poly, lambda, n, row, prev, &mut current, 0, weight);
    }
    let mut weight = vec![0i32; n];
    if rows == 0 {
        poly = LaurentPoly::one(LaurentPoly::x_vars(n));
    } else {
        fill(&mut poly, lambda, n, 0, &[], &mut weight);
    }
    let arc = Arc::new(poly);
    schur_cache().lock().unwrap().insert(key, arc.clone());
    Ok(arc)
}

fn alternant(weights: &[i32], group: &[SignedPerm], vars: Vec<String>) -> LaurentPoly {
    let mut p = LaurentPoly::zero(vars);
    let one = BigInt::one();
    let neg = -BigInt::one();
    for w in group {
        let c = if w.odd { &neg } else { &one };
        p.add_term(w.apply(weights), c);
    }
    p
}

/// Character of the Sp(2q)-irrep with highest weight λ, by the type-C
/// alternant: Σ_w sign(w) x^{w(λ+ρ)} divided exactly by the same sum at
/// λ = 0.
pub fn schur_sp(lambda: &Partition, q: usize) -> Result<Arc<LaurentPoly>> {
    if lambda.height() > q {
        return Err(Error::HeightExceedsRank(lambda.height(), q));
    }
    let key = SchurKey::Sp(lambda.clone(), q);
    if let Some(hit) = schur_cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let rho = RootSystemC::new(q).rho();
    let w = weyl_group_c(q);
    let vars = LaurentPoly::x_vars(q);
    let shifted: Vec<i32> = (0..q).map(|i| lambda.part(i) as i32 + rho[i]).collect();
    let num = alternant(&shifted, &w, vars.clone());
    let den = alternant(&rho, &w, vars);
    let poly = num
        .exact_div(&den)
        .expect("Weyl numerator must be divisible by the Weyl denominator");
    let arc = Arc::new(poly);
    schur_cache().lock().unwrap().insert(key, arc.clone());
    Ok(arc)
}

/// Character of the irrep of `group` labeled by `label`, in `group.vars()`.
pub fn irrep_character(group: Group, label: &Label) -> Result<LaurentPoly> {
    match (group, label) {
        (Group::Gl(n), Label::One(p)) => Ok((*schur_gl(p, n)?).clone()),
        (Group::Sp(q), Label::One(p)) => Ok((*schur_sp(p, q)?).clone()),
        (Group::GlGl(a, b), Label::Two(p, r)) => {
            let left = schur_gl(p, a)?;
            let right = schur_gl(r, b)?.with_vars(LaurentPoly::y_vars(b));
            Ok(left.tensor(&right))
        }
        (Group::SpSp(a, b), Label::Two(p, r)) => {
            let left = schur_sp(p, a)?;
            let right = schur_sp(r, b)?.with_vars(LaurentPoly::y_vars(b));
            Ok(left.tensor(&right))
        }
        _ => Err(Error::InvalidParams(format!(
            "label {label} does not match group {group}"
        ))),
    }
}

impl LaurentPoly {
    /// Same polynomial under renamed variables.
    pub fn with_vars(&self, vars: Vec<String>) -> LaurentPoly {
        assert_eq!(vars.len(), self.vars().len());
        self.map_exponents(vars, |e| e.to_vec())
    }
}

/// Product-form Weyl dimension formula.
pub fn weyl_dim(group: Group, label: &Label) -> Result<BigInt> {
    fn dim_gl(p: &Partition, n: usize) -> BigInt {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 0..n {
            for j in i + 1..n {
                let li = p.part(i) as i64 - i as i64;
                let lj = p.part(j) as i64 - j as i64;
                num *= BigInt::from(li - lj);
                den *= BigInt::from(j as i64 - i as i64);
            }
        }
        num / den
    }
    fn dim_sp(p: &Partition, q: usize) -> BigInt {
        let l: Vec<i64> = (0..q).map(|i| p.part(i) as i64 + (q - i) as i64).collect();
        let m: Vec<i64> = (0..q).map(|i| (q - i) as i64).collect();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 0..q {
            num *= BigInt::from(l[i]);
            den *= BigInt::from(m[i]);
            for j in i + 1..q {
                num *= BigInt::from(l[i] * l[i] - l[j] * l[j]);
                den *= BigInt::from(m[i] * m[i] - m[j] * m[j]);
            }
        }
        num / den
    }
    match (group, label) {
        (Group::Gl(n), Label::One(p)) => Ok(dim_gl(p, n)),
        (Group::Sp(q), Label::One(p)) => Ok(dim_sp(p, q)),
        (Group::GlGl(a, b), Label::Two(p, r)) => Ok(dim_gl(p, a) * dim_gl(r, b)),
        (Group::SpSp(a, b), Label::Two(p, r)) => Ok(dim_sp(p, a) * dim_sp(r, b)),
        _ => Err(Error::InvalidParams(format!(
            "label {label} does not match group {group}"
        ))),
    }
}

/// Irrep dimension, computed both as the character value at all-ones and by
/// the product-form dimension formula; the two must agree.
pub fn dim_irrep(group: Group, label: &Label) -> Result<BigInt> {
    let by_eval = irrep_character(group, label)?.eval_at_ones();
    let by_formula = weyl_dim(group, label)?;
    if by_eval != by_formula {
        return Err(Error::VerificationFailed(format!(
            "dimension routes disagree for {label} over {group}: {by_eval} vs {by_formula}"
        )));
    }
    Ok(by_eval)
}

/// ∏_{i≤s, j≤q} (x_i + x_i⁻¹ + y_j + y_j⁻¹) in x_1..x_s, y_1..y_q: the
/// character of the model's kernel representation over Sp(2s)×Sp(2q).
pub fn kernel_character(s: usize, q: usize) -> LaurentPoly {
    let vars = Group::SpSp(s, q).vars();
    let n = vars.len();
    let mut acc = LaurentPoly::one(vars.clone());
    for i in 0..s {
        for j in 0..q {
            let mut factor = LaurentPoly::zero(vars.clone());
            for (idx, sign) in [(i, 1), (i, -1), (s + j, 1), (s + j, -1)] {
                let mut e = vec![0; n];
                e[idx] = sign;
                factor.add_term(e, &BigInt::one());
            }
            acc = acc.mul(&factor).unwrap();
        }
    }
    acc
}

/// Character of Λ•(S⊗Q) on the product symplectic torus. Computed two ways:
/// as the square of the kernel character and as ∏ over the 4sq weights of
/// S⊗Q of (1 + monomial); both routes must agree exactly.
pub fn exterior_algebra_character(s: usize, q: usize) -> Result<LaurentPoly> {
    let squared = kernel_character(s, q).pow(2);
    let vars = Group::SpSp(s, q).vars();
    let n = vars.len();
    let mut product = LaurentPoly::one(vars.clone());
    for i in 0..s {
        for j in 0..q {
            for si in [1, -1] {
                for sj in [1, -1] {
                    let mut e = vec![0; n];
                    e[i] = si;
                    e[s + j] = sj;
                    let factor =
                        LaurentPoly::one(vars.clone()).add(&LaurentPoly::monomial(
                            vars.clone(),
                            e,
                            1,
                        ))?;
                    product = product.mul(&factor)?;
                }
            }
        }
    }
    if squared != product {
        return Err(Error::VerificationFailed(
            "exterior algebra character routes disagree".into(),
        ));
    }
    Ok(squared)
}

/// Character of Sym^d of the representation whose torus weights are the
/// given exponent vectors (with repetition), by truncated geometric-series
/// expansion of ∏ 1/(1 − t·monomial) at t^d.
pub fn sym_power_character(vars: Vec<String>, weights: &[Vec<i32>], d: u32) -> LaurentPoly {
    let d = d as usize;
    let mut by_degree: Vec<LaurentPoly> = Vec::with_capacity(d + 1);
    by_degree.push(LaurentPoly::one(vars.clone()));
    for _ in 0..d {
        by_degree.push(LaurentPoly::zero(vars.clone()));
    }
    for w in weights {
        let m = LaurentPoly::monomial(vars.clone(), w.clone(), 1);
        // in-place update in increasing degree implements 1/(1 − t·m)
        for j in 1..=d {
            let bump = by_degree[j - 1].mul(&m).unwrap();
            by_degree[j] = by_degree[j].add(&bump).unwrap();
        }
    }
    by_degree.pop().unwrap()
}

fn block_swap_indices(block: &Block, k: usize, total: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..total).collect();
    idx.swap(block.offset + k, block.offset + k + 1);
    idx
}

/// Invariance under the Weyl group, checked on generators: adjacent
/// transpositions in every block, plus inversion of the last variable for
/// symplectic blocks.
pub fn is_weyl_invariant(f: &LaurentPoly, group: Group) -> bool {
    let total = group.rank();
    for block in group.blocks() {
        for k in 0..block.rank.saturating_sub(1) {
            let idx = block_swap_indices(&block, k, total);
            let g = f.map_exponents(f.vars().to_vec(), |e| {
                idx.iter().map(|&i| e[i]).collect()
            });
            if &g != f {
                return false;
            }
        }
        if block.kind == BlockKind::C && block.rank > 0 {
            let flip = block.offset + block.rank - 1;
            let g = f.map_exponents(f.vars().to_vec(), |e| {
                let mut e = e.to_vec();
                e[flip] = -e[flip];
                e
            });
            if &g != f {
                return false;
            }
        }
    }
    true
}

fn dominant_label(group: Group, exp: &[i32]) -> Option<Result<Label>> {
    let mut parts: Vec<Partition> = Vec::new();
    for block in group.blocks() {
        let slice = &exp[block.offset..block.offset + block.rank];
        if slice.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        match block.kind {
            BlockKind::C => {
                if slice.last().is_some_and(|&x| x < 0) {
                    return None;
                }
            }
            BlockKind::A => {
                if slice.last().is_some_and(|&x| x < 0) {
                    // dominant for GL but outside the polynomial-label range
                    return Some(Err(Error::InvalidParams(format!(
                        "dominant weight {slice:?} is not a partition"
                    ))));
                }
            }
        }
        match Partition::new(slice.iter().map(|&x| x as u32).collect()) {
            Ok(p) => parts.push(p),
            Err(e) => return Some(Err(e)),
        }
    }
    Some(Ok(match group {
        Group::Gl(_) | Group::Sp(_) => Label::One(parts.pop().unwrap()),
        _ => {
            let right = parts.pop().unwrap();
            let left = parts.pop().unwrap();
            Label::Two(left, right)
        }
    }))
}

/// Decomposes a Weyl-invariant Laurent polynomial into irreducible
/// characters by highest-weight peeling: repeatedly take the maximal
/// dominant exponent (by total degree, then lexicographic order) and
/// subtract its multiple of the corresponding irreducible character.
pub fn decompose_virtual(f: &LaurentPoly, group: Group) -> Result<VirtualDecomp> {
    if f.vars() != group.vars() {
        return Err(Error::VariableMismatch(
            f.vars().to_vec(),
            group.vars(),
        ));
    }
    if !is_weyl_invariant(f, group) {
        return Err(Error::NotWeylInvariant(group.to_string()));
    }
    let mut rem = f.clone();
    let mut out = VirtualDecomp::empty(group);
    while !rem.is_zero() {
        let mut best: Option<(i32, Vec<i32>)> = None;
        for (exp, _) in rem.terms() {
            if dominant_label(group, exp).is_some() {
                let deg: i32 = exp.iter().sum();
                let key = (deg, exp.clone());
                if best.as_ref().map_or(true, |b| key > *b) {
                    best = Some(key);
                }
            }
        }
        let Some((_, exp)) = best else {
            return Err(Error::NotWeylInvariant(format!(
                "no dominant term in nonzero remainder over {group}"
            )));
        };
        let label = dominant_label(group, &exp).unwrap()?;
        let mult = &rem.coeff(&exp);
        let mult = i64::try_from(mult).map_err(|_| {
            Error::InvalidParams("multiplicity exceeds i64".into())
        })?;
        rem = rem.sub(&irrep_character(group, &label)?.scale(mult))?;
        out.entries.insert(label, mult);
    }
    out.entries.retain(|_, m| *m != 0);
    Ok(out)
}

/// Multiplicity of one irreducible in a Weyl-invariant virtual character,
/// by the alternating-sum formula m_λ = Σ_w sign(w) · f_{w(λ+ρ)−ρ}. Much
/// cheaper than full peeling when only one multiplicity is needed; agrees
/// with decompose_virtual.
pub fn multiplicity_of(f: &LaurentPoly, group: Group, label: &Label) -> Result<i64> {
    let parts: Vec<&Partition> = match label {
        Label::One(p) => vec![p],
        Label::Two(p, r) => vec![p, r],
    };
    let blocks = group.blocks();
    if parts.len() != blocks.len() {
        return Err(Error::InvalidParams(format!(
            "label {label} does not match group {group}"
        )));
    }
    // per block: list of (shifted-exponent slice, sign)
    let mut per_block: Vec<Vec<(Vec<i32>, i64)>> = Vec::new();
    for (block, p) in blocks.iter().zip(&parts) {
        if p.height() > block.rank {
            return Err(Error::HeightExceedsRank(p.height(), block.rank));
        }
        let (elems, rho): (Arc<Vec<SignedPerm>>, Vec<i32>) = match block.kind {
            BlockKind::C => (
                weyl_group_c(block.rank),
                RootSystemC::new(block.rank).rho(),
            ),
            BlockKind::A => (
                weyl_group_a(block.rank),
                (0..block.rank).map(|i| (block.rank - 1 - i) as i32).collect(),
            ),
        };
        let shifted: Vec<i32> = (0..block.rank)
            .map(|i| p.part(i) as i32 + rho[i])
            .collect();
        per_block.push(
            elems
                .iter()
                .map(|w| {
                    let moved = w.apply(&shifted);
                    let slice: Vec<i32> =
                        moved.iter().zip(&rho).map(|(m, r)| m - r).collect();
                    (slice, w.sign_char())
                })
                .collect(),
        );
    }
    let mut total = BigInt::zero();
    match per_block.len() {
        1 => {
            for (slice, sign) in &per_block[0] {
                total += f.coeff(slice) * *sign;
            }
        }
        2 => {
            for (sa, na) in &per_block[0] {
                for (sb, nb) in &per_block[1] {
                    let mut exp = sa.clone();
                    exp.extend_from_slice(sb);
                    total += f.coeff(&exp) * (*na * *nb);
                }
            }
        }
        _ => unreachable!(),
    }
    i64::try_from(&total)
        .map_err(|_| Error::InvalidParams("multiplicity exceeds i64".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_rect;

    fn p(parts: &[u32]) -> Partition {
        Partition::of(parts)
    }

    #[test]
    fn schur_gl_basics() {
        let s1 = schur_gl(&p(&[1]), 2).unwrap();
        assert_eq!(s1.coeff(&[1, 0]), BigInt::one());
        assert_eq!(s1.coeff(&[0, 1]), BigInt::one());
        assert_eq!(s1.num_terms(), 2);
        let det = schur_gl(&p(&[1, 1]), 2).unwrap();
        assert_eq!(det.coeff(&[1, 1]), BigInt::one());
        assert_eq!(det.num_terms(), 1);
        assert_eq!(
            schur_gl(&p(&[2, 1]), 3).unwrap().eval_at_ones(),
            BigInt::from(8)
        );
        assert!(schur_gl(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn schur_sp_basics() {
        let std = schur_sp(&p(&[1]), 1).unwrap();
        assert_eq!(std.coeff(&[1]), BigInt::one());
        assert_eq!(std.coeff(&[-1]), BigInt::one());
        assert_eq!(std.num_terms(), 2);
        assert_eq!(
            schur_sp(&Partition::empty(), 3).unwrap().eval_at_ones(),
            BigInt::one()
        );
        assert_eq!(
            schur_sp(&p(&[1, 1]), 2).unwrap().eval_at_ones(),
            BigInt::from(5)
        );
    }

    #[test]
    fn dims_match_formula() {
        assert_eq!(
            dim_irrep(Group::Sp(1), &Label::One(p(&[2]))).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            dim_irrep(Group::Gl(4), &Label::One(p(&[1, 1]))).unwrap(),
            BigInt::from(6)
        );
        assert_eq!(
            dim_irrep(Group::Sp(2), &Label::One(p(&[1]))).unwrap(),
            BigInt::from(4)
        );
        for q in 1..=4usize {
            for lam in enumerate_rect(q, 4) {
                dim_irrep(Group::Sp(q), &Label::One(lam.clone())).unwrap();
                dim_irrep(Group::Gl(q), &Label::One(lam)).unwrap();
            }
        }
    }

    #[test]
    fn kernel_character_shape() {
        let k = kernel_character(1, 1);
        assert_eq!(k.num_terms(), 4);
        assert_eq!(k.coeff(&[1, 0]), BigInt::one());
        assert_eq!(k.coeff(&[0, -1]), BigInt::one());
        assert_eq!(
            kernel_character(1, 2).eval_at_ones(),
            BigInt::from(16)
        );
        assert_eq!(
            kernel_character(2, 3).eval_at_ones(),
            BigInt::from(4u64.pow(6))
        );
    }

    #[test]
    fn exterior_algebra_routes_agree() {
        for (s, q) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let w = exterior_algebra_character(s, q).unwrap();
            assert_eq!(w, kernel_character(s, q).pow(2));
            assert_eq!(
                w.eval_at_ones(),
                BigInt::from(2u64).pow(4 * (s * q) as u32)
            );
        }
    }

    #[test]
    fn sym_power_basics() {
        let vars = LaurentPoly::x_vars(1);
        let weights: Vec<Vec<i32>> = vec![vec![1], vec![1], vec![-1], vec![-1]];
        assert_eq!(
            sym_power_character(vars.clone(), &weights, 0),
            LaurentPoly::one(vars.clone())
        );
        let d1 = sym_power_character(vars.clone(), &weights, 1);
        assert_eq!(d1.coeff(&[1]), BigInt::from(2));
        assert_eq!(d1.coeff(&[-1]), BigInt::from(2));
        let d2 = sym_power_character(vars, &weights, 2);
        assert_eq!(d2.eval_at_ones(), BigInt::from(10));
    }

    #[test]
    fn decompose_examples() {
        let sq = schur_sp(&p(&[1]), 1).unwrap().pow(2);
        let d = decompose_virtual(&sq, Group::Sp(1)).unwrap();
        assert_eq!(d.mult(&Label::One(p(&[2]))), 1);
        assert_eq!(d.mult(&Label::One(Partition::empty())), 1);
        assert_eq!(d.entries.len(), 2);

        for lam in enumerate_rect(2, 2) {
            let c = schur_sp(&lam, 2).unwrap();
            let d = decompose_virtual(&c, Group::Sp(2)).unwrap();
            assert_eq!(d.entries.len(), 1);
            assert_eq!(d.mult(&Label::One(lam)), 1);
        }

        let zero = LaurentPoly::zero(Group::Sp(2).vars());
        assert!(decompose_virtual(&zero, Group::Sp(2))
            .unwrap()
            .entries
            .is_empty());
    }

    #[test]
    fn decompose_rejects_asymmetric() {
        let x = LaurentPoly::monomial(LaurentPoly::x_vars(1), vec![1], 1);
        assert!(matches!(
            decompose_virtual(&x, Group::Sp(1)),
            Err(Error::NotWeylInvariant(_))
        ));
    }

    #[test]
    fn decompose_round_trip() {
        let f = kernel_character(2, 1);
        let d = decompose_virtual(&f, Group::SpSp(2, 1)).unwrap();
        assert_eq!(d.character().unwrap(), f);
    }

    #[test]
    fn tensor_products_are_actual_reps() {
        for q in 1..=2usize {
            let shapes = enumerate_rect(q, 2);
            for a in &shapes {
                for b in &shapes {
                    let f = schur_sp(a, q)
                        .unwrap()
                        .mul(&schur_sp(b, q).unwrap())
                        .unwrap();
                    let d = decompose_virtual(&f, Group::Sp(q)).unwrap();
                    assert!(d.entries.values().all(|&m| m > 0));
                    // width bound on constituents
                    for label in d.entries.keys() {
                        let Label::One(g) = label else { panic!() };
                        assert!(g.width() <= a.width() + b.width());
                    }
                    // single-multiplicity route agrees with peeling
                    for (label, &m) in &d.entries {
                        assert_eq!(multiplicity_of(&f, Group::Sp(q), label).unwrap(), m);
                    }
                    assert_eq!(
                        multiplicity_of(
                            &f,
                            Group::Sp(q),
                            &Label::One(p(&[a.width() + b.width() + 1]))
                        )
                        .unwrap(),
                        0
                    );
                }
            }
        }
    }

    #[test]
    fn group_parse_roundtrip() {
        for g in [
            Group::Gl(3),
            Group::Sp(2),
            Group::GlGl(2, 4),
            Group::SpSp(1, 3),
        ] {
            assert_eq!(g.to_string().parse::<Group>().unwrap(), g);
        }
        assert!("SO(3)".parse::<Group>().is_err());
    }

    #[test]
    fn virtual_decomp_serde() {
        let f = kernel_character(1, 1);
        let d = decompose_virtual(&f, Group::SpSp(1, 1)).unwrap();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(
            s,
            r#"{"group":"Sp(2)xSp(2)","entries":[{"label":[[],[1]],"mult":1},{"label":[[1],[]],"mult":1}]}"#
        );
        let back: VirtualDecomp = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
    }
}
