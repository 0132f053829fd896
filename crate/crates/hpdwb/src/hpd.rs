//! Duality-facing computations: kernel decomposition check, Witten index,
//! grade-restriction windows and their Lefschetz band structure in both
//! parity cases, graded Hom dimensions on the ambient stack, and the
//! dimension numerology report.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::characters::{
    decompose_virtual, exterior_algebra_character, kernel_character, multiplicity_of, schur_sp,
    sym_power_character, Group, Label, VirtualDecomp,
};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::partition::{binomial, enumerate_rect, Partition};
use crate::report::Report;
use crate::weyl::GSpWeight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseTag {
    Odd,
    Even,
}

/// Parameters of one dual pair: sp-ranks s and q, the dimension v of the
/// ambient space, and optionally the dimensions of the linear section and
/// its annihilator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityParams {
    pub s: usize,
    pub q: usize,
    pub v: usize,
    pub case: CaseTag,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_perp: Option<u64>,
}

impl DualityParams {
    pub fn new(s: usize, q: usize, case: CaseTag) -> Self {
        let v = match case {
            CaseTag::Odd => 2 * s + 2 * q + 1,
            CaseTag::Even => 2 * s + 2 * q,
        };
        DualityParams {
            s,
            q,
            v,
            case,
            l: None,
            l_perp: None,
        }
    }

    pub fn with_section(mut self, l: u64, l_perp: u64) -> Result<Self> {
        let total = binomial(self.v as u64, 2);
        if u128::from(l) + u128::from(l_perp) != total {
            return Err(Error::InvalidParams(format!(
                "l + l' must be C({},2) = {total}, got {l} + {l_perp}",
                self.v
            )));
        }
        self.l = Some(l);
        self.l_perp = Some(l_perp);
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let expect = match self.case {
            CaseTag::Odd => 2 * self.s + 2 * self.q + 1,
            CaseTag::Even => 2 * self.s + 2 * self.q,
        };
        if self.v != expect {
            return Err(Error::InvalidParams(format!(
                "v = {} inconsistent with s={}, q={}, case {:?}",
                self.v, self.s, self.q, self.case
            )));
        }
        if let (Some(l), Some(lp)) = (self.l, self.l_perp) {
            if u128::from(l) + u128::from(lp) != binomial(self.v as u64, 2) {
                return Err(Error::InvalidParams("l + l' mismatch".into()));
            }
        }
        Ok(())
    }

    /// The critical section dimension l = s·v where both sides of the pair
    /// become Calabi-Yau.
    pub fn critical_l(&self) -> u64 {
        (self.s * self.v) as u64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WindowKind {
    /// Y_{q,s} × [lo, hi) under the parity constraint.
    Band { lo: i32, hi: i32 },
    /// The even-case projective window.
    EvenProj,
    /// One width-2 Lefschetz slice.
    LefschetzBand { index: usize, lo: i32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowSpec {
    pub kind: WindowKind,
    pub weights: Vec<GSpWeight>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WindowRequest {
    /// The [n, n+2l′) window; requires l′.
    Difficult(i32),
    /// The symmetric [−qv, qv) window.
    Easy,
    /// Even-case projective window.
    EvenProj,
}

fn band_weights(shapes: &[Partition], q: usize, lo: i32, hi: i32) -> Vec<GSpWeight> {
    let mut out = Vec::new();
    for t in shapes {
        let tv: Vec<i32> = (0..q).map(|i| t.part(i) as i32).collect();
        let sum: i32 = tv.iter().sum();
        for k in lo..hi {
            if (sum + k).rem_euclid(2) == 0 {
                out.push(GSpWeight {
                    t_part: tv.clone(),
                    delta_part: k,
                });
            }
        }
    }
    out.sort();
    out
}

pub fn build_window(params: &DualityParams, kind: WindowRequest) -> Result<WindowSpec> {
    params.validate()?;
    let q = params.q;
    let qv = (q * params.v) as i32;
    let shapes = enumerate_rect(q, params.s as u32);
    match (kind, params.case) {
        (WindowRequest::Easy, CaseTag::Odd) => Ok(WindowSpec {
            kind: WindowKind::Band { lo: -qv, hi: qv },
            weights: band_weights(&shapes, q, -qv, qv),
        }),
        (WindowRequest::Difficult(n), CaseTag::Odd) => {
            let lp = params.l_perp.ok_or_else(|| {
                Error::InvalidParams("difficult window requires l' to be set".into())
            })?;
            let hi = n + 2 * lp as i32;
            Ok(WindowSpec {
                kind: WindowKind::Band { lo: n, hi },
                weights: band_weights(&shapes, q, n, hi),
            })
        }
        (WindowRequest::EvenProj, CaseTag::Even) => {
            let v = params.v as i32;
            let split = (q as i32 - 1) * v;
            let small = enumerate_rect(q, params.s as u32 - 1);
            let mut weights = band_weights(&shapes, q, -qv, split);
            weights.extend(band_weights(&small, q, split, qv));
            weights.sort();
            Ok(WindowSpec {
                kind: WindowKind::EvenProj,
                weights,
            })
        }
        _ => Err(Error::InvalidParams(format!(
            "window kind {kind:?} does not apply to the {:?} case",
            params.case
        ))),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LefschetzBands {
    pub bands: Vec<WindowSpec>,
    /// Even case: first band index whose content is the smaller shape set.
    pub shrink_index: Option<usize>,
}

/// Splits the window into qv width-2 Δ-slices. In the odd case every slice
/// carries Y_{q,s}; in the even case the content drops to Y_{q,s−1} after
/// qv − v/2 slices. Fails with COVERAGE_FAILED if the slices do not
/// partition the window.
pub fn lefschetz_bands(params: &DualityParams) -> Result<LefschetzBands> {
    params.validate()?;
    let q = params.q;
    let qv = (q * params.v) as i32;
    let window = match params.case {
        CaseTag::Odd => build_window(params, WindowRequest::Easy)?,
        CaseTag::Even => build_window(params, WindowRequest::EvenProj)?,
    };
    let shapes = enumerate_rect(q, params.s as u32);
    let small = enumerate_rect(q, (params.s as u32).saturating_sub(1));
    let shrink_index = match params.case {
        CaseTag::Odd => None,
        CaseTag::Even => Some(q * params.v - params.v / 2),
    };
    let mut bands = Vec::new();
    for i in 0..(q * params.v) {
        let lo = -qv + 2 * i as i32;
        let content = match shrink_index {
            Some(b) if i >= b => &small,
            _ => &shapes,
        };
        bands.push(WindowSpec {
            kind: WindowKind::LefschetzBand { index: i, lo },
            weights: band_weights(content, q, lo, lo + 2),
        });
    }
    let mut covered: Vec<GSpWeight> = bands.iter().flat_map(|b| b.weights.clone()).collect();
    covered.sort();
    let before_dedup = covered.len();
    covered.dedup();
    if covered.len() != before_dedup || covered != window.weights {
        return Err(Error::CoverageFailed(format!(
            "{} band weights vs {} window weights",
            before_dedup,
            window.weights.len()
        )));
    }
    Ok(LefschetzBands {
        bands,
        shrink_index,
    })
}

fn t_partition(w: &GSpWeight) -> Result<Partition> {
    if w.t_part.iter().any(|&x| x < 0) {
        return Err(Error::InvalidParams(format!(
            "t-part {:?} is not dominant",
            w.t_part
        )));
    }
    Partition::new(w.t_part.iter().map(|&x| x as u32).collect())
}

/// Dimension of the degree-matched invariant Homs on the ambient stack.
/// Coordinate functions carry Δ-weight −1, so only the symmetric power of
/// degree d = Δ(w2) − Δ(w1) contributes; d < 0 gives 0.
pub fn hom_dim_graded(w1: &GSpWeight, w2: &GSpWeight, params: &DualityParams) -> Result<u64> {
    params.validate()?;
    let d = w2.delta_part - w1.delta_part;
    if d < 0 {
        return Ok(0);
    }
    let q = params.q;
    let t1 = t_partition(w1)?;
    let t2 = t_partition(w2)?;
    let vars = LaurentPoly::x_vars(q);
    let mut weights = Vec::with_capacity(2 * q * params.v);
    for m in 0..q {
        for sign in [1i32, -1] {
            let mut e = vec![0; q];
            e[m] = sign;
            for _ in 0..params.v {
                weights.push(e.clone());
            }
        }
    }
    let sym = sym_power_character(vars, &weights, d as u32);
    let f = schur_sp(&t1, q)?
        .mul(schur_sp(&t2, q)?.as_ref())?
        .mul(&sym)?;
    let m = multiplicity_of(&f, Group::Sp(q), &Label::One(Partition::empty()))?;
    debug_assert!(m >= 0);
    Ok(m as u64)
}

/// C(q+s, q), cross-checked against the dimension of Sp×Sp-invariants in
/// the exterior algebra character.
pub fn witten_index(s: usize, q: usize) -> Result<u64> {
    let formula = binomial((s + q) as u64, q as u64);
    let wedge = exterior_algebra_character(s, q)?;
    let invariants = multiplicity_of(
        &wedge,
        Group::SpSp(s, q),
        &Label::Two(Partition::empty(), Partition::empty()),
    )?;
    if BigInt::from(invariants) != BigInt::from(formula) {
        return Err(Error::VerificationFailed(format!(
            "Witten index routes disagree: C = {formula}, invariants = {invariants}"
        )));
    }
    u64::try_from(formula).map_err(|_| Error::InvalidParams("index overflow".into()))
}

/// Comparability in the product dominance order: e ≥ f iff e − f is a
/// nonnegative integer combination of positive roots in each symplectic
/// block (all prefix sums ≥ 0 and block sum even).
fn dominance_geq(e: &[i32], f: &[i32], s: usize) -> bool {
    for (lo, hi) in [(0, s), (s, e.len())] {
        let mut prefix = 0i32;
        for k in lo..hi {
            prefix += e[k] - f[k];
            if prefix < 0 {
                return false;
            }
        }
        if prefix % 2 != 0 {
            return false;
        }
    }
    true
}

/// Verifies that the kernel character decomposes over Sp(2s)×Sp(2q) as one
/// copy of sp_γ ⊠ sp_{dual(γ)} for each γ ∈ Y_{s,q}, plus the summand
/// count, the total dimension, and the maximal-monomial property of each
/// highest weight among degree-sq monomials.
pub fn kernel_decomposition_check(s: usize, q: usize) -> Result<Report> {
    if s < 1 || q < 1 {
        return Err(Error::InvalidParams("s, q must be positive".into()));
    }
    let mut report = Report::new();
    let kernel = kernel_character(s, q);
    let actual = decompose_virtual(&kernel, Group::SpSp(s, q))?;

    let mut expected = VirtualDecomp::empty(Group::SpSp(s, q));
    for gamma in enumerate_rect(s, q as u32) {
        let dual = gamma.hpd_dual(s, q as u32)?;
        expected.entries.insert(Label::Two(gamma, dual), 1);
    }
    report.push(
        "kernel decomposition equals duality pairing",
        serde_json::to_value(&expected)?,
        serde_json::to_value(&actual)?,
    );
    report.push(
        "summand count is |Y_{s,q}|",
        json!(binomial((s + q) as u64, s as u64).to_string()),
        json!(actual.entries.len().to_string()),
    );
    report.push(
        "total dimension is 4^{sq}",
        json!(BigInt::from(4u32).pow((s * q) as u32).to_string()),
        json!(actual.total_dim()?.to_string()),
    );

    // highest-weight monomials are maximal among the full-degree monomials
    let full_degree = (s * q) as i32;
    let full_terms: Vec<Vec<i32>> = kernel
        .terms()
        .filter(|(e, _)| e.iter().map(|x| x.abs()).sum::<i32>() == full_degree)
        .map(|(e, _)| e.clone())
        .collect();
    let mut maximal_ok = true;
    for gamma in enumerate_rect(s, q as u32) {
        let dual = gamma.hpd_dual(s, q as u32)?;
        let mut hw: Vec<i32> = (0..s).map(|i| gamma.part(i) as i32).collect();
        hw.extend((0..q).map(|j| dual.part(j) as i32));
        if kernel.coeff(&hw) < BigInt::from(1) {
            maximal_ok = false;
        }
        for other in &full_terms {
            if other != &hw && dominance_geq(other, &hw, s) {
                maximal_ok = false;
            }
        }
    }
    report.push_flag(
        "highest weights maximal among degree-sq monomials",
        maximal_ok,
        json!(true),
        json!(maximal_ok),
    );
    Ok(report)
}

/// Dimension bookkeeping for the critical odd-case pair.
pub fn cy_numerology_report(params: &DualityParams) -> Result<Report> {
    params.validate()?;
    if params.case != CaseTag::Odd {
        return Err(Error::InvalidParams(
            "numerology report applies to the odd case".into(),
        ));
    }
    let (s, q, v) = (params.s as u64, params.q as u64, params.v as u64);
    let mut r = Report::new();
    r.push("v = 2s+2q+1", json!(2 * s + 2 * q + 1), json!(v));
    r.push(
        "critical section dimension l = s*v",
        json!(2 * s * s + 2 * q * s + s),
        json!(params.critical_l()),
    );
    // slice dimension route: dim(section of the rank locus) + 2
    // = sv + 1 - C(v-2q, 2)
    let cy_via_slice = s * v + 1 - binomial(v - 2 * q, 2) as u64;
    r.push(
        "Calabi-Yau dimension 2qs+1",
        json!(2 * q * s + 1),
        json!(cy_via_slice),
    );
    r.push(
        "ambient wedge dimension C(v,2)",
        json!((v * (v - 1) / 2).to_string()),
        json!(binomial(v, 2).to_string()),
    );
    r.push(
        "rank-drop codimension C(2q+1,2) = C(v-2s,2)",
        json!(binomial(2 * q + 1, 2).to_string()),
        json!(binomial(v - 2 * s, 2).to_string()),
    );
    if s + q <= 5 {
        r.push(
            "Witten index C(q+s,q)",
            json!(binomial(q + s, q).to_string()),
            json!(witten_index(params.s, params.q)?.to_string()),
        );
    } else {
        // character route is out of reach; cross-check the count by the
        // Pascal recurrence instead
        let mut row = vec![1u128];
        for _ in 0..(q + s) {
            let mut next = vec![1u128];
            for w in row.windows(2) {
                next.push(w[0] + w[1]);
            }
            next.push(1);
            row = next;
        }
        r.push(
            "Witten index C(q+s,q)",
            json!(binomial(q + s, q).to_string()),
            json!(row[q as usize].to_string()),
        );
    }
    r.push("Lefschetz band count qv", json!(q * v), json!((params.q * params.v) as u64));
    r.push("dual band count sv", json!(s * v), json!((params.s * params.v) as u64));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gsp(t: &[i32], d: i32) -> GSpWeight {
        GSpWeight::new(t.to_vec(), d).unwrap()
    }

    #[test]
    fn params_consistency() {
        let p = DualityParams::new(1, 1, CaseTag::Odd);
        assert_eq!(p.v, 5);
        assert!(p.validate().is_ok());
        assert!(p.clone().with_section(5, 5).is_ok());
        assert!(p.with_section(5, 6).is_err());
        assert_eq!(DualityParams::new(1, 1, CaseTag::Even).v, 4);
    }

    #[test]
    fn easy_window_q1s1() {
        let p = DualityParams::new(1, 1, CaseTag::Odd);
        let w = build_window(&p, WindowRequest::Easy).unwrap();
        assert_eq!(w.weights.len(), 10);
        let empties: Vec<i32> = w
            .weights
            .iter()
            .filter(|x| x.t_part == vec![0])
            .map(|x| x.delta_part)
            .collect();
        assert_eq!(empties, vec![-4, -2, 0, 2, 4]);
        let ones: Vec<i32> = w
            .weights
            .iter()
            .filter(|x| x.t_part == vec![1])
            .map(|x| x.delta_part)
            .collect();
        assert_eq!(ones, vec![-5, -3, -1, 1, 3]);

        let p2 = p.with_section(5, 5).unwrap();
        let diff = build_window(&p2, WindowRequest::Difficult(-5)).unwrap();
        assert_eq!(diff.weights, w.weights);
    }

    #[test]
    fn even_window_q1s1() {
        let p = DualityParams::new(1, 1, CaseTag::Even);
        let w = build_window(&p, WindowRequest::EvenProj).unwrap();
        assert_eq!(w.weights.len(), 6);
        assert!(build_window(&p, WindowRequest::Easy).is_err());
        let podd = DualityParams::new(1, 1, CaseTag::Odd);
        assert!(build_window(&podd, WindowRequest::EvenProj).is_err());
    }

    #[test]
    fn lefschetz_odd_q1s1() {
        let p = DualityParams::new(1, 1, CaseTag::Odd);
        let bands = lefschetz_bands(&p).unwrap();
        assert_eq!(bands.bands.len(), 5);
        assert!(bands.bands.iter().all(|b| b.weights.len() == 2));
        assert_eq!(bands.shrink_index, None);
    }

    #[test]
    fn lefschetz_even_q1s1() {
        let p = DualityParams::new(1, 1, CaseTag::Even);
        let bands = lefschetz_bands(&p).unwrap();
        assert_eq!(bands.bands.len(), 4);
        let sizes: Vec<usize> = bands.bands.iter().map(|b| b.weights.len()).collect();
        assert_eq!(sizes, vec![2, 2, 1, 1]);
        assert_eq!(bands.shrink_index, Some(2));
    }

    #[test]
    fn hom_dims() {
        let p = DualityParams::new(1, 1, CaseTag::Odd);
        let w0 = gsp(&[0], 0);
        let w2 = gsp(&[0], 2);
        assert_eq!(hom_dim_graded(&w0, &w0, &p).unwrap(), 1);
        assert_eq!(hom_dim_graded(&w2, &w0, &p).unwrap(), 0);
        assert_eq!(hom_dim_graded(&w0, &w2, &p).unwrap(), 10);
        let w1 = gsp(&[1], 1);
        assert_eq!(hom_dim_graded(&w1, &w1, &p).unwrap(), 1);
        // equal Δ, different shapes: Schur orthogonality
        let pa = DualityParams::new(1, 2, CaseTag::Odd);
        let a = gsp(&[2], 0);
        let b = gsp(&[0], 0);
        assert_eq!(hom_dim_graded(&a, &b, &pa).unwrap(), 0);
    }

    #[test]
    fn witten_examples() {
        assert_eq!(witten_index(1, 1).unwrap(), 2);
        assert_eq!(witten_index(2, 1).unwrap(), 3);
        assert_eq!(witten_index(1, 2).unwrap(), 3);
        assert_eq!(witten_index(2, 2).unwrap(), 6);
    }

    #[test]
    fn kernel_check_small() {
        let r = kernel_decomposition_check(1, 1).unwrap();
        assert!(r.pass(), "{}", r.to_tsv());
        let r = kernel_decomposition_check(2, 1).unwrap();
        assert!(r.pass(), "{}", r.to_tsv());
        let r = kernel_decomposition_check(1, 2).unwrap();
        assert!(r.pass(), "{}", r.to_tsv());
    }

    #[test]
    fn numerology_examples() {
        let r = cy_numerology_report(&DualityParams::new(1, 1, CaseTag::Odd)).unwrap();
        assert!(r.pass());
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["checks"][0]["actual"], json!(5));
        let r = cy_numerology_report(&DualityParams::new(2, 1, CaseTag::Odd)).unwrap();
        assert!(r.pass());
        assert!(cy_numerology_report(&DualityParams::new(1, 1, CaseTag::Even)).is_err());
    }
}
