//! Sparse multivariate Laurent polynomials with exact big-integer
//! coefficients. The character ring of a maximal torus lives here; every
//! identity in the crate is checked by exact arithmetic in this type.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Terms are keyed by exponent vector (one entry per variable) in
/// lexicographic order, which is also the canonical serialization order.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exp, coef)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{coef}")?;
            for (v, e) in self.vars.iter().zip(exp) {
                if *e != 0 {
                    write!(f, "*{v}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl LaurentPoly {
    pub fn zero(vars: Vec<String>) -> Self {
        LaurentPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: Vec<String>) -> Self {
        let n = vars.len();
        let mut p = LaurentPoly::zero(vars);
        p.terms.insert(vec![0; n], BigInt::one());
        p
    }

    pub fn monomial(vars: Vec<String>, exp: Vec<i32>, coef: impl Into<BigInt>) -> Self {
        assert_eq!(vars.len(), exp.len());
        let mut p = LaurentPoly::zero(vars);
        let c = coef.into();
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// Variables named `x1..xn`.
    pub fn x_vars(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    /// Variables named `y1..yn`.
    pub fn y_vars(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("y{i}")).collect()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[i32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exp: Vec<i32>, coef: &BigInt) {
        if coef.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coef.clone());
            }
        }
    }

    fn check_vars(&self, other: &LaurentPoly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch(
                self.vars.clone(),
                other.vars.clone(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (exp, coef) in &other.terms {
            out.add_term(exp.clone(), coef);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (exp, coef) in &other.terms {
            out.add_term(exp.clone(), &(-coef));
        }
        Ok(out)
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> LaurentPoly {
        let k = k.into();
        if k.is_zero() {
            return LaurentPoly::zero(self.vars.clone());
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * &k)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        let mut out = LaurentPoly::zero(self.vars.clone());
        // iterate over the smaller factor's terms in the outer loop
        let (a, b) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let exp: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exp, &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(self.vars.clone());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).unwrap();
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).unwrap();
            }
        }
        acc
    }

    /// Componentwise min and max of exponent vectors (Newton polytope
    /// bounding box). None for the zero polynomial.
    fn exp_box(&self) -> Option<(Vec<i32>, Vec<i32>)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut lo = first.clone();
        let mut hi = first.clone();
        for exp in it {
            for (i, &e) in exp.iter().enumerate() {
                lo[i] = lo[i].min(e);
                hi[i] = hi[i].max(e);
            }
        }
        Some((lo, hi))
    }

    /// Exact division in the Laurent ring. Errors with `NonExactDivision`
    /// when the quotient does not exist.
    ///
    /// Long division by the lexicographically largest term of the divisor,
    /// with a Newton-polytope guard: for an exact quotient q = a/b the
    /// bounding box of q is the Minkowski difference of the boxes of a and
    /// b, so any quotient term escaping that box proves inexactness and
    /// bounds the number of steps.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(divisor)?;
        if divisor.is_zero() {
            return Err(Error::NonExactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.vars.clone()));
        }
        let (alo, ahi) = self.exp_box().unwrap();
        let (blo, bhi) = divisor.exp_box().unwrap();
        let qlo: Vec<i32> = alo.iter().zip(&blo).map(|(a, b)| a - b).collect();
        let qhi: Vec<i32> = ahi.iter().zip(&bhi).map(|(a, b)| a - b).collect();

        let (lead_exp, lead_coef) = divisor.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero(self.vars.clone());
        while !rem.is_zero() {
            let (rexp, rcoef) = rem.terms.iter().next_back().unwrap();
            let qexp: Vec<i32> = rexp.iter().zip(lead_exp).map(|(a, b)| a - b).collect();
            if qexp
                .iter()
                .zip(qlo.iter().zip(&qhi))
                .any(|(e, (lo, hi))| e < lo || e > hi)
            {
                return Err(Error::NonExactDivision(
                    "remainder term outside quotient support".into(),
                ));
            }
            let (qcoef, r) = num_integer::Integer::div_rem(rcoef, lead_coef);
            if !r.is_zero() {
                return Err(Error::NonExactDivision(
                    "leading coefficient does not divide".into(),
                ));
            }
            let piece = LaurentPoly::monomial(self.vars.clone(), qexp, qcoef);
            rem = rem.sub(&piece.mul(divisor)?)?;
            quot = quot.add(&piece)?;
        }
        Ok(quot)
    }

    /// Applies a map to every exponent vector, merging collisions. Used for
    /// variable specialization such as x_i ↦ x_i^{-1} or restriction of a
    /// GL character to a symplectic torus.
    pub fn map_exponents<F>(&self, new_vars: Vec<String>, f: F) -> LaurentPoly
    where
        F: Fn(&[i32]) -> Vec<i32>,
    {
        let mut out = LaurentPoly::zero(new_vars);
        for (exp, coef) in &self.terms {
            let e = f(exp);
            assert_eq!(e.len(), out.vars.len());
            out.add_term(e, coef);
        }
        out
    }

    /// Value at x_i = 1 for all i (sum of coefficients).
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Joins with a polynomial over a disjoint variable list by
    /// concatenating variables: self ⊗ other.
    pub fn tensor(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut vars = self.vars.clone();
        vars.extend(other.vars.iter().cloned());
        let mut out = LaurentPoly::zero(vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut exp = ea.clone();
                exp.extend_from_slice(eb);
                out.add_term(exp, &(ca * cb));
            }
        }
        out
    }

    /// Sum of absolute values of coefficients; cheap size proxy for budget
    /// accounting.
    pub fn coeff_mass(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    exp: Vec<i32>,
    coef: CoefWire,
}

/// Coefficients serialize as JSON numbers when they fit in i64, otherwise
/// as decimal strings.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoefWire {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for CoefWire {
    fn from(c: &BigInt) -> Self {
        match i64::try_from(c) {
            Ok(v) => CoefWire::Small(v),
            Err(_) => CoefWire::Big(c.to_string()),
        }
    }
}

impl TryFrom<CoefWire> for BigInt {
    type Error = String;
    fn try_from(w: CoefWire) -> std::result::Result<BigInt, String> {
        match w {
            CoefWire::Small(v) => Ok(BigInt::from(v)),
            CoefWire::Big(s) => s.parse().map_err(|e| format!("bad coefficient: {e}")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    vars: Vec<String>,
    terms: Vec<TermWire>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyWire {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(exp, coef)| TermWire {
                    exp: exp.clone(),
                    coef: coef.into(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = PolyWire::deserialize(d)?;
        let mut out = LaurentPoly::zero(wire.vars);
        for t in wire.terms {
            if t.exp.len() != out.vars.len() {
                return Err(D::Error::custom("exponent length does not match vars"));
            }
            let coef = BigInt::try_from(t.coef).map_err(D::Error::custom)?;
            out.add_term(t.exp, &coef);
        }
        Ok(out)
    }
}
