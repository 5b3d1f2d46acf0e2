//! Hilbert functions `t -> dim_k (R/I)_t` of monomial quotients.
//!
//! Three routes compute the same numbers:
//!
//! * [`hilbert`] enumerates the degree-`t` slice and counts standard
//!   monomials;
//! * [`hilbert_inclusion_exclusion`] evaluates the alternating sum over
//!   subsets of generators, `dim I_t = sum (-1)^{|S|+1} C(n-1+t-deg lcm S, n-1)`;
//! * [`HilbertNumerator`] collapses that sum into the numerator of the Hilbert
//!   series by pivoting on variables, which stays cheap in high degree.
//!
//! Tables derived from an ideal are enumerated up to a horizon and extended
//! through the numerator beyond it.

use std::collections::BTreeMap;

use num::{BigInt, BigUint, One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::binom::{binomial_or_zero, monomial_count};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lexmac::macaulay_growth;
use crate::monomial::{for_each_exponent, Monomial};

/// `dim_k (R/I)_t` by enumerating all degree-`t` monomials.
pub fn hilbert(ideal: &MonomialIdeal, t: u64) -> BigUint {
    let mut count = 0u64;
    for_each_exponent(ideal.n(), t, |e| {
        if !ideal.has_exponents(e) {
            count += 1;
        }
    });
    BigUint::from(count)
}

/// `dim_k (R/I)_t` by inclusion–exclusion over generator subsets.
///
/// Subsets are accumulated grouped by their lcm: adding a generator `g` to
/// every subset seen so far flips the sign and replaces the lcm `L` by
/// `lcm(L, g)`. Lcms of degree above `t` contribute nothing and only grow,
/// so they are dropped.
pub fn hilbert_inclusion_exclusion(ideal: &MonomialIdeal, t: u64) -> BigUint {
    let n = ideal.n() as i64;
    // lcm -> sum over subsets with that lcm of (-1)^{|S|+1}
    let mut signed: BTreeMap<Monomial, i64> = BTreeMap::new();
    for g in ideal.generators() {
        if g.degree() > t {
            continue;
        }
        let mut next = signed.clone();
        for (l, c) in &signed {
            let joined = l.lcm(g);
            if joined.degree() <= t {
                *next.entry(joined).or_insert(0) -= c;
            }
        }
        *next.entry(g.clone()).or_insert(0) += 1;
        next.retain(|_, c| *c != 0);
        signed = next;
    }
    let mut in_ideal = BigInt::zero();
    for (l, c) in &signed {
        let count = BigInt::from(binomial_or_zero(n - 1 + t as i64 - l.degree() as i64, n - 1));
        in_ideal += count * c;
    }
    let total = BigInt::from(monomial_count(ideal.n(), t));
    (total - in_ideal)
        .to_biguint()
        .expect("dim I_t never exceeds dim R_t")
}

/// Numerator `N(z)` of the Hilbert series `N(z) / (1 - z)^n` of `R/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertNumerator {
    n: usize,
    coeffs: Vec<BigInt>,
}

impl HilbertNumerator {
    pub fn of(ideal: &MonomialIdeal) -> Self {
        let gens: Vec<Monomial> = ideal.generators().to_vec();
        HilbertNumerator {
            n: ideal.n(),
            coeffs: trim(numerator(ideal.n(), gens)),
        }
    }

    /// Coefficients of `N(z)`, lowest degree first.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `dim_k (R/I)_t = sum_k N_k C(n - 1 + t - k, n - 1)`.
    pub fn eval(&self, t: u64) -> BigUint {
        let n = self.n as i64;
        let mut acc = BigInt::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() || k as u64 > t {
                continue;
            }
            acc += c * BigInt::from(binomial_or_zero(n - 1 + t as i64 - k as i64, n - 1));
        }
        acc.to_biguint().expect("Hilbert function is non-negative")
    }
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_add(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (k, c) in b.iter().enumerate() {
        a[k + shift] += c;
    }
}

fn minimal(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(Monomial::degree);
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

fn numerator(n: usize, gens: Vec<Monomial>) -> Vec<BigInt> {
    if gens.iter().any(Monomial::is_one) {
        return vec![BigInt::zero()];
    }
    // Pick the variable occurring in the most generators of degree >= 2.
    let mut counts = vec![0usize; n];
    for g in gens.iter().filter(|g| g.degree() >= 2) {
        for v in g.support() {
            counts[v - 1] += 1;
        }
    }
    let (pivot, &hits) = counts
        .iter()
        .enumerate()
        .max_by_key(|(_, &c)| c)
        .unwrap_or((0, &0));
    if hits < 2 || gens.iter().all(|g| gens.iter().all(|h| g == h || g.is_coprime(h))) {
        // Pairwise coprime: the series numerator factors.
        let mut acc = vec![BigInt::one()];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = acc.clone();
            let neg: Vec<BigInt> = acc.iter().map(|c| -c).collect();
            poly_add(&mut next, &neg, d);
            acc = next;
        }
        return acc;
    }
    let p = Monomial::var(n, pivot + 1);
    // 0 -> R/(I:p)(-1) -> R/I -> R/(I+p) -> 0
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| !p.divides(g)).cloned().collect();
    plus.push(p.clone());
    let colon: Vec<Monomial> = gens.iter().map(|g| g.div(&g.gcd(&p)).expect("gcd divides")).collect();
    let mut acc = numerator(n, minimal(plus));
    let shifted = numerator(n, minimal(colon));
    poly_add(&mut acc, &shifted, 1);
    acc
}

/// Where the values of a [`HilbertTable`] come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HilbertSource {
    /// Derived from a monomial ideal; extends to every degree.
    Ideal {
        ideal: MonomialIdeal,
        numerator: HilbertNumerator,
    },
    /// Supplied by a user. When `eventually_polynomial` is set, degrees past
    /// the end continue with maximal Macaulay growth `h(t+1) = h(t)^<t>`,
    /// i.e. the listed values already reach the persistence regime.
    Supplied { eventually_polynomial: bool },
}

/// The Hilbert function of a standard graded quotient as exact integers,
/// indexed from degree 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    values: Vec<BigUint>,
    source: HilbertSource,
}

/// Degree up to which ideal-derived tables are enumerated eagerly.
pub const DEFAULT_HORIZON: u64 = 12;

impl HilbertTable {
    /// Table of `R/I`, enumerated through degree `horizon`.
    pub fn from_ideal(ideal: &MonomialIdeal, horizon: u64) -> Self {
        let values = (0..=horizon).map(|t| hilbert(ideal, t)).collect();
        HilbertTable {
            values,
            source: HilbertSource::Ideal {
                ideal: ideal.clone(),
                numerator: HilbertNumerator::of(ideal),
            },
        }
    }

    pub fn from_values(values: Vec<BigUint>, eventually_polynomial: bool) -> Result<Self> {
        if values.first() != Some(&BigUint::one()) {
            return Err(Error::NotHilbertFunction(
                "the value in degree 0 must be 1".into(),
            ));
        }
        Ok(HilbertTable {
            values,
            source: HilbertSource::Supplied {
                eventually_polynomial,
            },
        })
    }

    pub fn source(&self) -> &HilbertSource {
        &self.source
    }

    /// The ideal behind the table, if any.
    pub fn ideal(&self) -> Option<&MonomialIdeal> {
        match &self.source {
            HilbertSource::Ideal { ideal, .. } => Some(ideal),
            HilbertSource::Supplied { .. } => None,
        }
    }

    /// Values stored explicitly, from degree 0.
    pub fn stored(&self) -> &[BigUint] {
        &self.values
    }

    /// Whether values exist for every degree.
    pub fn is_unbounded(&self) -> bool {
        match &self.source {
            HilbertSource::Ideal { .. } => true,
            HilbertSource::Supplied {
                eventually_polynomial,
            } => *eventually_polynomial,
        }
    }

    pub fn value(&self, t: u64) -> Result<BigUint> {
        if let Some(v) = self.values.get(t as usize) {
            return Ok(v.clone());
        }
        match &self.source {
            HilbertSource::Ideal { numerator, .. } => Ok(numerator.eval(t)),
            HilbertSource::Supplied {
                eventually_polynomial: true,
            } => {
                let last = self.values.len() as u64 - 1;
                if last == 0 {
                    // Only h(0) = 1 listed: the quotient is the field.
                    return Ok(BigUint::zero());
                }
                let mut h = self.values[last as usize].clone();
                for d in last..t {
                    h = macaulay_growth(&h, d);
                }
                Ok(h)
            }
            HilbertSource::Supplied { .. } => Err(Error::TableExhausted {
                last: self.values.len() as u64 - 1,
                requested: t,
            }),
        }
    }

    /// JSON form: `{"values": [...], "eventually_polynomial": bool}`.
    /// Values that do not fit in 64 bits are written as decimal strings.
    pub fn to_json(&self) -> Value {
        json!({
            "values": self.values.iter().map(biguint_to_json).collect::<Vec<_>>(),
            "eventually_polynomial": self.is_unbounded(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::parse(1, 1, "expected a JSON object with `values`"))?;
        let values = obj
            .get("values")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::parse(1, 1, "missing `values` array"))?;
        let values = values
            .iter()
            .enumerate()
            .map(|(k, v)| {
                biguint_from_json(v).ok_or_else(|| {
                    Error::parse(1, 1, format!("entry {k} of `values` is not a non-negative integer"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let flag = obj
            .get("eventually_polynomial")
            .and_then(Value::as_bool)
            .unwrap_or(false);
        Self::from_values(values, flag)
    }
}

pub(crate) fn biguint_to_json(v: &BigUint) -> Value {
    match v.to_u64() {
        Some(small) => json!(small),
        None => json!(v.to_string()),
    }
}

pub(crate) fn bigint_to_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(small) => json!(small),
        None => json!(v.to_string()),
    }
}

fn biguint_from_json(v: &Value) -> Option<BigUint> {
    match v {
        Value::Number(num) => num.as_u64().map(BigUint::from),
        Value::String(s) => s.parse::<BigInt>().ok().filter(|b| !b.is_negative()).and_then(|b| b.to_biguint()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{monomials_in_variables, RingContext};

    fn ctx(n: usize) -> RingContext {
        RingContext::char0(n).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn square_of_first_variables() {
        // (x1, x2)^2 in four variables: h(t) = C(d+t-1, d-1) + (n-d) C(d+t-2, d-1) = 3t + 1.
        let i = MonomialIdeal::minimalize(monomials_in_variables(4, &[1, 2], 2), ctx(4)).unwrap();
        assert_eq!(hilbert(&i, 3), big(10));
        for t in 1..15 {
            assert_eq!(hilbert(&i, t), big(3 * t + 1));
            assert_eq!(hilbert_inclusion_exclusion(&i, t), big(3 * t + 1));
        }
    }

    #[test]
    fn zero_ideal() {
        assert_eq!(hilbert(&MonomialIdeal::zero(ctx(3)), 2), big(6));
    }

    #[test]
    fn complete_intersection_in_four_variables() {
        let i = MonomialIdeal::from_exponents(ctx(4), &[&[2, 0, 0, 0], &[0, 4, 0, 0]]).unwrap();
        assert_eq!(hilbert(&i, 5), big(32));
        for t in 4..20 {
            assert_eq!(hilbert(&i, t), big(8 * t - 8));
        }
    }

    #[test]
    fn numerator_matches_enumeration() {
        let i = MonomialIdeal::from_exponents(
            ctx(3),
            &[&[2, 0, 0], &[1, 1, 0], &[0, 3, 0], &[1, 0, 2], &[0, 1, 3]],
        )
        .unwrap();
        let num = HilbertNumerator::of(&i);
        for t in 0..20 {
            assert_eq!(num.eval(t), hilbert(&i, t), "degree {t}");
        }
    }

    #[test]
    fn numerator_of_zero_ideal_is_one() {
        let num = HilbertNumerator::of(&MonomialIdeal::zero(ctx(2)));
        assert_eq!(num.coefficients(), &[BigInt::one()]);
    }

    #[test]
    fn table_extends_beyond_horizon() {
        let i = MonomialIdeal::from_exponents(ctx(4), &[&[2, 0, 0, 0], &[0, 4, 0, 0]]).unwrap();
        let table = HilbertTable::from_ideal(&i, 5);
        assert_eq!(table.value(11).unwrap(), big(80));
        assert_eq!(table.value(3).unwrap(), hilbert(&i, 3));
    }

    #[test]
    fn supplied_tables() {
        assert!(HilbertTable::from_values(vec![big(2)], false).is_err());
        let finite = HilbertTable::from_values(vec![big(1), big(2), big(3)], false).unwrap();
        assert_eq!(
            finite.value(3),
            Err(Error::TableExhausted {
                last: 2,
                requested: 3
            })
        );
        // 1, 2, 3, 3, ... (x1^3 in two variables) extended by maximal growth.
        let grown = HilbertTable::from_values(vec![big(1), big(2), big(3), big(3)], true).unwrap();
        assert_eq!(grown.value(7).unwrap(), big(3));
        let field = HilbertTable::from_values(vec![big(1)], true).unwrap();
        assert_eq!(field.value(4).unwrap(), big(0));
    }

    #[test]
    fn json_round_trip() {
        let big_value: BigUint = "123456789012345678901234567890".parse().unwrap();
        let table = HilbertTable::from_values(vec![big(1), big(3), big_value], true).unwrap();
        let back = HilbertTable::from_json(&table.to_json()).unwrap();
        assert_eq!(back, table);
    }
}
