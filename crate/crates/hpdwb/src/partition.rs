//! Young diagrams: construction, transpose, rectangle complement, the
//! duality bijection `γ ↦ (γ^c)^⊤`, enumeration of `Y_{a,b}`, and
//! dominance order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition: weakly decreasing sequence of positive integers.
///
/// Stored without trailing zeros, so equality is canonical. The empty
/// partition is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. Rejects sequences that
    /// are not weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Panicking constructor for literals in tests and examples.
    pub fn of(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec()).expect("valid partition literal")
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of parts.
    pub fn height(&self) -> usize {
        self.0.len()
    }

    /// First part, 0 if empty.
    pub fn width(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The i-th part (0-based), padded with zeros.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn fits_in(&self, height: usize, width: u32) -> bool {
        self.height() <= height && self.width() <= width
    }

    /// Containment of diagrams: self_i <= other_i for all i.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.height()).all(|i| self.part(i) >= other.part(i))
    }

    /// Column lengths. Involution.
    pub fn transpose(&self) -> Partition {
        let width = self.width() as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.0 {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(cols)
    }

    /// Complement in an `a × b` rectangle: `result_i = b − p_{a+1−i}`.
    ///
    /// Requires `self ∈ Y_{a,b}`; an involution for fixed `(a, b)`.
    pub fn complement(&self, a: usize, b: u32) -> Result<Partition> {
        if !self.fits_in(a, b) {
            return Err(Error::RectangleOverflow(self.to_string(), a, b as usize));
        }
        let parts = (0..a).map(|i| b - self.part(a - 1 - i)).collect();
        Partition::new(parts)
    }

    /// The duality bijection `Y_{s,q} → Y_{q,s}`: complement in the `s × q`
    /// rectangle, then transpose.
    pub fn hpd_dual(&self, s: usize, q: u32) -> Result<Partition> {
        Ok(self.complement(s, q)?.transpose())
    }

    /// Dominance by partial sums: `Σ_{i≤k} self_i ≥ Σ_{i≤k} other_i` for all
    /// `k`. Equal total size is deliberately not required; this is the order
    /// used on weight comparisons.
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.height().max(other.height());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..n {
            a += u64::from(self.part(i));
            b += u64::from(other.part(i));
            if a < b {
                return false;
            }
        }
        true
    }
}

/// All partitions with at most `a` rows and `b` columns, in ascending
/// lexicographic order (the canonical order for all set-valued outputs).
/// Cardinality is `C(a+b, a)`.
pub fn enumerate_rect(a: usize, b: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts: Vec<u32> = Vec::new();
    fn rec(out: &mut Vec<Partition>, parts: &mut Vec<u32>, rows_left: usize, max_part: u32) {
        out.push(Partition(parts.clone()));
        if rows_left == 0 {
            return;
        }
        for p in 1..=max_part {
            parts.push(p);
            rec(out, parts, rows_left - 1, p);
            parts.pop();
        }
    }
    rec(&mut out, &mut parts, a, b);
    out.sort();
    out
}

/// `C(n, k)` as u128.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpose_examples() {
        assert_eq!(Partition::of(&[3, 1]).transpose(), Partition::of(&[2, 1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(Partition::of(&[2, 2]).transpose(), Partition::of(&[2, 2]));
    }

    #[test]
    fn transpose_is_involution() {
        for p in enumerate_rect(4, 5) {
            assert_eq!(p.transpose().transpose(), p);
            assert_eq!(p.transpose().size(), p.size());
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            Partition::of(&[3, 1]).complement(2, 3).unwrap(),
            Partition::of(&[2])
        );
        assert_eq!(Partition::empty().complement(1, 1).unwrap(), Partition::of(&[1]));
        // full rectangle complements to empty
        assert_eq!(
            Partition::of(&[3, 3]).complement(2, 3).unwrap(),
            Partition::empty()
        );
        assert!(Partition::of(&[4]).complement(2, 3).is_err());
    }

    #[test]
    fn complement_is_involution() {
        for p in enumerate_rect(3, 4) {
            let c = p.complement(3, 4).unwrap();
            assert!(c.fits_in(3, 4));
            assert_eq!(c.complement(3, 4).unwrap(), p);
        }
    }

    #[test]
    fn hpd_dual_examples() {
        assert_eq!(Partition::empty().hpd_dual(1, 1).unwrap(), Partition::of(&[1]));
        assert_eq!(Partition::of(&[1]).hpd_dual(1, 1).unwrap(), Partition::empty());
        assert_eq!(
            Partition::of(&[3, 1]).hpd_dual(2, 3).unwrap(),
            Partition::of(&[1, 1])
        );
        // complement of (2,2) in 2x3 is (1,1); transpose gives (2)
        assert_eq!(Partition::of(&[2, 2]).hpd_dual(2, 3).unwrap(), Partition::of(&[2]));
    }

    #[test]
    fn hpd_dual_is_bijection() {
        for s in 0..=4usize {
            for q in 0..=4u32 {
                let mut images: Vec<Partition> = enumerate_rect(s, q)
                    .into_iter()
                    .map(|p| {
                        let d = p.hpd_dual(s, q).unwrap();
                        assert!(d.fits_in(q as usize, s as u32));
                        assert_eq!(d.hpd_dual(q as usize, s as u32).unwrap(), p);
                        d
                    })
                    .collect();
                images.sort();
                images.dedup();
                assert_eq!(images.len(), enumerate_rect(q as usize, s as u32).len());
            }
        }
    }

    #[test]
    fn enumerate_rect_examples() {
        assert_eq!(
            enumerate_rect(1, 1),
            vec![Partition::empty(), Partition::of(&[1])]
        );
        assert_eq!(enumerate_rect(2, 2).len(), 6);
        assert_eq!(enumerate_rect(0, 5), vec![Partition::empty()]);
        for a in 0..=6usize {
            for b in 0..=6u32 {
                assert_eq!(
                    enumerate_rect(a, b).len() as u128,
                    binomial((a as u64) + u64::from(b), a as u64)
                );
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(Partition::of(&[2]).dominates(&Partition::of(&[1, 1])));
        assert!(!Partition::of(&[1, 1]).dominates(&Partition::of(&[2])));
        for p in enumerate_rect(3, 3) {
            assert!(p.dominates(&p));
        }
    }

    #[test]
    fn serde_roundtrip() {
        let p = Partition::of(&[3, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[3,1]");
        assert_eq!(
            serde_json::from_str::<Partition>("[]").unwrap(),
            Partition::empty()
        );
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
