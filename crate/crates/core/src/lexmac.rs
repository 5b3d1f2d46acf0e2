//! Macaulay expansions, lex-segment ideals with a prescribed Hilbert
//! function, and reduction-number bounds expressed through the Hilbert
//! function.

use num::{BigInt, BigUint, One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::binom::{binomial, binomial_or_zero, monomial_count};
use crate::borel::{is_borel_fixed, is_lex_segment};
use crate::error::{Error, Result};
use crate::groebner::{rs_via_gin, GinOptions};
use crate::hilbert::{bigint_to_json, biguint_to_json, hilbert, HilbertSource, HilbertTable, DEFAULT_HORIZON};
use crate::ideal::MonomialIdeal;
use crate::monomial::{for_each_exponent, Monomial, RingContext};
use crate::reduction::{colength_mod_reduction, rs_borel, Hypothesis, VariableReduction};

/// Default degree cap for lex-ideal construction.
pub const DEFAULT_LEX_CAP: u64 = 64;

/// Default cap on the degree scanned by the Hilbert-function formulas.
pub const DEFAULT_SCAN_CAP: u64 = 10_000;

/// The degree-`t` Macaulay expansion `a = C(k_t, t) + C(k_{t-1}, t-1) + ... + C(k_j, j)`
/// with `k_t > k_{t-1} > ... > k_j >= j >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayRep {
    pub value: BigUint,
    pub degree: u64,
    /// `k_t, k_{t-1}, ...`; the `m`-th entry pairs with `C(., t - m)`.
    pub terms: Vec<u64>,
}

impl MacaulayRep {
    pub fn resum(&self) -> BigUint {
        self.terms
            .iter()
            .enumerate()
            .map(|(m, &k)| binomial_or_zero(k as i64, (self.degree - m as u64) as i64))
            .sum()
    }
}

/// Greedy Macaulay expansion of `a` in degree `t >= 1`.
pub fn macaulay_rep(a: &BigUint, t: u64) -> MacaulayRep {
    assert!(t >= 1, "Macaulay expansions start in degree 1");
    let mut rest = a.clone();
    let mut terms = Vec::new();
    let mut i = t;
    while i >= 1 && !rest.is_zero() {
        // largest k with C(k, i) <= rest
        let fits = |k: u64| binomial_or_zero(k as i64, i as i64) <= rest;
        let mut lo = i;
        let mut hi = i + 1;
        while fits(hi) {
            lo = hi;
            hi *= 2;
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if fits(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        rest -= binomial_or_zero(lo as i64, i as i64);
        terms.push(lo);
        i -= 1;
    }
    MacaulayRep {
        value: a.clone(),
        degree: t,
        terms,
    }
}

/// `a^<t>`: shift every `C(k, i)` in the expansion to `C(k + 1, i + 1)`.
pub fn macaulay_growth(a: &BigUint, t: u64) -> BigUint {
    let rep = macaulay_rep(a, t);
    rep.terms
        .iter()
        .enumerate()
        .map(|(m, &k)| binomial_or_zero(k as i64 + 1, (t - m as u64) as i64 + 1))
        .sum()
}

/// Macaulay's criterion on the stored values: `h(0) = 1`, `h(1) <= n` and
/// `h(t + 1) <= h(t)^<t>` for `t >= 1`.
pub fn is_o_sequence(h: &HilbertTable, n: usize) -> bool {
    let v = h.stored();
    if v.first() != Some(&BigUint::one()) {
        return false;
    }
    if v.len() > 1 && v[1] > BigUint::from(n) {
        return false;
    }
    (1..v.len().saturating_sub(1)).all(|t| v[t + 1] <= macaulay_growth(&v[t], t as u64))
}

/// How a lex construction ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// Growth is maximal from this degree on, so no generators appear later.
    Persistent { degree: u64 },
    /// Stopped at the cap or at the end of a finite table; generators of
    /// higher degree may be missing.
    Truncated { degree: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexConstruction {
    pub source_hilbert: HilbertTable,
    pub ideal: MonomialIdeal,
    /// Slices were built for every degree up to this one.
    pub construction_cap: u64,
    pub termination: Termination,
}

impl LexConstruction {
    pub fn is_complete(&self) -> bool {
        matches!(self.termination, Termination::Persistent { .. })
    }

    pub fn to_json(&self) -> Value {
        let (kind, degree) = match self.termination {
            Termination::Persistent { degree } => ("persistent", degree),
            Termination::Truncated { degree } => ("truncated", degree),
        };
        json!({
            "n": self.ideal.n(),
            "generators": self.ideal.generators().iter().map(|g| g.exponents().to_vec()).collect::<Vec<_>>(),
            "construction_cap": self.construction_cap,
            "termination": { "kind": kind, "degree": degree },
        })
    }
}

fn tight(h: &HilbertTable, t: u64) -> Result<bool> {
    Ok(h.value(t + 1)? == macaulay_growth(&h.value(t)?, t))
}

/// Degree from which `h` is known to grow maximally forever, if reachable
/// within `cap`.
fn persistence_degree(h: &HilbertTable, cap: u64) -> Result<Option<u64>> {
    match h.source() {
        HilbertSource::Ideal { ideal, .. } => {
            // Gotzmann: tight growth at T >= the top generator degree persists.
            let mut t = ideal.max_degree().max(1);
            while t <= cap {
                if tight(h, t)? {
                    return Ok(Some(t));
                }
                t += 1;
            }
            Ok(None)
        }
        HilbertSource::Supplied {
            eventually_polynomial: true,
        } => {
            let last = h.stored().len() as u64 - 1;
            let mut t = last.max(1);
            while t > 1 && tight(h, t - 1)? {
                t -= 1;
            }
            Ok((t <= cap).then_some(t))
        }
        HilbertSource::Supplied { .. } => Ok(None),
    }
}

/// Builds the lex-segment ideal with Hilbert function `h` degree by degree,
/// reporting whether the construction provably finished.
pub fn build_lex(h: &HilbertTable, ctx: RingContext, cap: u64) -> Result<LexConstruction> {
    let n = ctx.n();
    if !is_o_sequence(h, n) {
        return Err(Error::NotHilbertFunction(
            "the values violate Macaulay's growth bound".into(),
        ));
    }
    let persistent = persistence_degree(h, cap)?;
    let top = match persistent {
        Some(t) => t + 2,
        None => match h.source() {
            HilbertSource::Supplied {
                eventually_polynomial: false,
            } => (h.stored().len() as u64 - 1).min(cap),
            _ => cap,
        },
    };
    let mut gens: Vec<Monomial> = Vec::new();
    let mut floor: Option<Monomial> = None;
    for t in 0..=top {
        let total = monomial_count(n, t);
        let ht = h.value(t)?;
        if ht > total {
            return Err(Error::NotHilbertFunction(format!(
                "h({t}) = {ht} exceeds the number of monomials {total}"
            )));
        }
        let k = (total - ht).to_usize().expect("slice size fits in memory");
        let mut slice: Vec<Monomial> = Vec::with_capacity(k);
        if k > 0 {
            for_each_exponent(n, t, |e| {
                if slice.len() < k {
                    slice.push(Monomial::new(e.to_vec()));
                }
            });
        }
        if let (Some(prev), Some(cur)) = (&floor, slice.last()) {
            let shifted = prev.mul(&Monomial::var(n, n));
            if shifted < *cur {
                return Err(Error::NotHilbertFunction(format!(
                    "degree {t} slice does not contain the multiples of degree {}",
                    t - 1
                )));
            }
        }
        for m in &slice {
            let generated = floor.as_ref().is_some_and(|f| {
                m.support()
                    .into_iter()
                    .any(|i| m.div(&Monomial::var(n, i)).expect("i in support") >= *f)
            });
            if !generated {
                if let Some(p) = persistent {
                    assert!(t <= p, "lex generator {m} in degree {t} beyond persistence degree {p}");
                }
                gens.push(m.clone());
            }
        }
        floor = slice.last().cloned();
        if floor.is_none() && t > 0 && k == 0 && !gens.is_empty() {
            // Empty slice after a non-empty one cannot happen for O-sequences.
            return Err(Error::NotHilbertFunction(format!("slice {t} shrank")));
        }
    }
    let ideal = MonomialIdeal::minimalize(gens, ctx)?;
    assert!(is_lex_segment(&ideal), "constructed ideal {ideal} is not lex-segment");
    for t in 0..=top {
        assert_eq!(hilbert(&ideal, t), h.value(t)?, "Hilbert mismatch in degree {t}");
    }
    let termination = match persistent {
        Some(degree) => Termination::Persistent { degree },
        None => Termination::Truncated { degree: top },
    };
    Ok(LexConstruction {
        source_hilbert: h.clone(),
        ideal,
        construction_cap: top,
        termination,
    })
}

/// The lex-segment ideal sharing the Hilbert function `h`; fails with
/// "cap exceeded" when the construction cannot be certified complete.
pub fn lex_ideal_from_hilbert(h: &HilbertTable, ctx: RingContext, cap: u64) -> Result<LexConstruction> {
    let built = build_lex(h, ctx, cap)?;
    match built.termination {
        Termination::Persistent { .. } => Ok(built),
        Termination::Truncated { degree } => Err(Error::CapExceeded {
            what: "maximal Macaulay growth".into(),
            cap: degree,
        }),
    }
}

/// `I^lex` for a monomial ideal.
pub fn lex_ideal(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let table = HilbertTable::from_ideal(ideal, DEFAULT_HORIZON);
    Ok(lex_ideal_from_hilbert(&table, ideal.context(), DEFAULT_LEX_CAP)?.ideal)
}

fn first_crossing(h: &HilbertTable, s: usize, cap: u64) -> Result<u64> {
    if let Some(ideal) = h.ideal() {
        let d = ideal.krull_dim();
        if s < d {
            return Err(Error::NoSReduction { s, dim: d });
        }
    }
    for t in 1..=cap {
        let bound = binomial(s as i64 + t as i64, t as i64).expect("non-negative");
        if h.value(t)? < bound {
            return Ok(t);
        }
    }
    Err(Error::CapExceeded {
        what: format!("no degree t with h(t) < C({s}+t, t); s is below the dimension"),
        cap,
    })
}

/// `r_s(R/L)` of the lex-segment ideal `L` with Hilbert function `h`:
/// `min{t : h(t) < C(s + t, t)} - 1`.
pub fn rs_lex_closed(h: &HilbertTable, s: usize) -> Result<u64> {
    Ok(first_crossing(h, s, DEFAULT_SCAN_CAP)? - 1)
}

/// Upper bound for `r_s(R/I)` of any ideal with Hilbert function `h`:
/// the first `t` with `h(t) < C(s + t, t)`, minus one.
pub fn eakin_sathaye_bound(h: &HilbertTable, s: usize) -> Result<u64> {
    Ok(first_crossing(h, s, DEFAULT_SCAN_CAP)? - 1)
}

/// `r_s(R/I)` of a monomial ideal: directly when Borel-fixed in its own
/// characteristic, through the generic initial ideal over the rationals otherwise.
pub fn rs_monomial(ideal: &MonomialIdeal, s: usize, gin: &GinOptions) -> Result<u64> {
    if is_borel_fixed(ideal) {
        Ok(rs_borel(ideal, s, Hypothesis::Trust)?.r)
    } else {
        rs_via_gin(ideal, s, gin)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcaOutcome {
    pub rs: u64,
    pub rs_lex: u64,
}

impl ConcaOutcome {
    pub fn holds(&self) -> bool {
        self.rs <= self.rs_lex
    }
}

/// Compares `r_s(R/I)` with `r_s(R/I^lex)`.
pub fn conca_check(ideal: &MonomialIdeal, s: usize, gin: &GinOptions) -> Result<ConcaOutcome> {
    let rs = rs_monomial(ideal, s, gin)?;
    let rs_lex = rs_lex_closed(&HilbertTable::from_ideal(ideal, DEFAULT_HORIZON), s)?;
    Ok(ConcaOutcome { rs, rs_lex })
}

/// `d(e - 2) + 1`.
pub fn lex_bound1(d: usize, e: &BigUint) -> BigInt {
    BigInt::from(d) * (BigInt::from(e.clone()) - 2) + 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RvvOutcome {
    pub d: usize,
    pub e: BigUint,
    pub horizon: u64,
    pub first_violation: Option<u64>,
}

impl RvvOutcome {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "d": self.d,
            "e": biguint_to_json(&self.e),
            "horizon": self.horizon,
            "holds": self.holds(),
            "first_violation": self.first_violation,
        })
    }
}

/// Right-hand side `(e - 1) C(t + d - 2, d - 1) + C(t + d - 1, d - 1)`.
pub fn rvv_bound(d: usize, e: &BigUint, t: u64) -> BigInt {
    let (d, t) = (d as i64, t as i64);
    (BigInt::from(e.clone()) - 1) * BigInt::from(binomial_or_zero(t + d - 2, d - 1))
        + BigInt::from(binomial_or_zero(t + d - 1, d - 1))
}

/// Checks `h(t) <= (e - 1) C(t + d - 2, d - 1) + C(t + d - 1, d - 1)` for
/// `t <= horizon`, with `e` the colength modulo the last `d` variables.
pub fn rvv_check(ideal: &MonomialIdeal, horizon: u64) -> Result<RvvOutcome> {
    let d = ideal.krull_dim();
    if d == 0 {
        return Err(Error::HypothesisViolated("the quotient must have positive dimension".into()));
    }
    let q = VariableReduction::last(ideal.n(), d);
    let e = colength_mod_reduction(ideal, &q)?;
    let first_violation =
        (0..=horizon).find(|&t| BigInt::from(hilbert(ideal, t)) > rvv_bound(d, &e, t));
    Ok(RvvOutcome {
        d,
        e,
        horizon,
        first_violation,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexBounds {
    pub d: usize,
    /// `r(R/I)` used in bound (i).
    pub r: u64,
    /// `d [C(r + n - d, n - d) - 2] + 1`.
    pub bound_i: BigInt,
    /// `d (a_1 ... a_{n-d} - 2) + 1` over the `n - d` largest generator degrees.
    pub bound_ii: Option<BigInt>,
}

impl LexBounds {
    pub fn to_json(&self) -> Value {
        json!({
            "d": self.d,
            "r": self.r,
            "bound_i": bigint_to_json(&self.bound_i),
            "bound_ii": self.bound_ii.as_ref().map(bigint_to_json),
        })
    }
}

/// Bounds on `r(R/I^lex)` from `r(R/I)` and from generator degrees.
pub fn lex_bound2(ideal: &MonomialIdeal, gin: &GinOptions) -> Result<LexBounds> {
    let n = ideal.n();
    let d = ideal.krull_dim();
    if d == 0 {
        return Err(Error::HypothesisViolated("the quotient must have positive dimension".into()));
    }
    let r = rs_monomial(ideal, d, gin)?;
    let c = binomial((r as usize + n - d) as i64, (n - d) as i64).expect("non-negative");
    let bound_i = BigInt::from(d) * (BigInt::from(c) - 2) + 1;
    let mut degrees: Vec<u64> = ideal.generators().iter().map(Monomial::degree).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let bound_ii = (degrees.len() >= n - d).then(|| {
        let product: BigInt = degrees[..n - d].iter().map(|&a| BigInt::from(a)).product();
        BigInt::from(d) * (product - 2) + 1
    });
    Ok(LexBounds {
        d,
        r,
        bound_i,
        bound_ii,
    })
}

/// `r(R/I^lex)` computed from the Hilbert function of `I`.
pub fn lex_reduction_number(ideal: &MonomialIdeal) -> Result<u64> {
    rs_lex_closed(&HilbertTable::from_ideal(ideal, DEFAULT_HORIZON), ideal.krull_dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::monomials_in_variables;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn ctx(n: usize) -> RingContext {
        RingContext::char0(n).unwrap()
    }

    fn table(values: &[u64], flag: bool) -> HilbertTable {
        HilbertTable::from_values(values.iter().map(|&v| big(v)).collect(), flag).unwrap()
    }

    #[test]
    fn macaulay_examples() {
        assert_eq!(macaulay_rep(&big(3), 1).terms, vec![3]);
        assert_eq!(macaulay_rep(&big(5), 2).terms, vec![3, 2]);
        assert!(macaulay_rep(&big(0), 4).terms.is_empty());
        assert_eq!(macaulay_growth(&big(3), 1), big(6));
        assert_eq!(macaulay_growth(&big(0), 3), big(0));
        assert_eq!(macaulay_growth(&big(5), 2), big(7));
    }

    #[test]
    fn o_sequences() {
        assert!(is_o_sequence(&table(&[1, 2, 3, 3, 3, 3], true), 2));
        assert!(!is_o_sequence(&table(&[1, 2, 4], false), 2));
        assert!(is_o_sequence(&table(&[1, 0, 0, 0], false), 3));
        assert!(!is_o_sequence(&table(&[1, 3], false), 2));
    }

    #[test]
    fn lex_of_pure_power_is_itself() {
        for a in 1..7 {
            let i = MonomialIdeal::from_exponents(ctx(2), &[&[a, 0]]).unwrap();
            assert_eq!(lex_ideal(&i).unwrap(), i);
        }
    }

    #[test]
    fn lex_of_square_of_first_variables() {
        let i = MonomialIdeal::minimalize(monomials_in_variables(4, &[1, 2], 2), ctx(4)).unwrap();
        let lex = lex_ideal(&i).unwrap();
        assert!(is_lex_segment(&lex));
        for t in 1..15 {
            assert_eq!(hilbert(&lex, t), big(3 * t + 1));
        }
    }

    #[test]
    fn lex_of_zero_ideal_is_zero() {
        let z = MonomialIdeal::zero(ctx(3));
        assert!(lex_ideal(&z).unwrap().is_zero());
    }

    #[test]
    fn late_generator_is_found() {
        // (x1^2, x2^5) in two variables: growth is tight at t = 2..3 but a
        // generator appears in degree 5; starting at the top source degree avoids stopping early.
        let i = MonomialIdeal::from_exponents(ctx(2), &[&[2, 0], &[0, 5]]).unwrap();
        let lex = lex_ideal(&i).unwrap();
        for t in 0..12 {
            assert_eq!(hilbert(&lex, t), hilbert(&i, t));
        }
    }

    #[test]
    fn supplied_tables() {
        let flagged = table(&[1, 2, 3, 3], true);
        let built = lex_ideal_from_hilbert(&flagged, ctx(2), DEFAULT_LEX_CAP).unwrap();
        assert_eq!(built.ideal, MonomialIdeal::from_exponents(ctx(2), &[&[3, 0]]).unwrap());
        let finite = table(&[1, 2, 3, 3], false);
        assert!(matches!(
            lex_ideal_from_hilbert(&finite, ctx(2), DEFAULT_LEX_CAP),
            Err(Error::CapExceeded { .. })
        ));
        let partial = build_lex(&finite, ctx(2), DEFAULT_LEX_CAP).unwrap();
        assert_eq!(partial.termination, Termination::Truncated { degree: 3 });
        assert!(matches!(
            lex_ideal_from_hilbert(&table(&[1, 2, 4], true), ctx(2), DEFAULT_LEX_CAP),
            Err(Error::NotHilbertFunction(_))
        ));
    }

    #[test]
    fn closed_formula_examples() {
        let i = MonomialIdeal::from_exponents(ctx(2), &[&[3, 0]]).unwrap();
        assert_eq!(rs_lex_closed(&HilbertTable::from_ideal(&i, 12), 1).unwrap(), 2);
        let sq = MonomialIdeal::minimalize(monomials_in_variables(4, &[1, 2], 2), ctx(4)).unwrap();
        assert_eq!(rs_lex_closed(&HilbertTable::from_ideal(&sq, 12), 2).unwrap(), 3);
        let ci = MonomialIdeal::from_exponents(ctx(4), &[&[2, 0, 0, 0], &[0, 4, 0, 0]]).unwrap();
        assert_eq!(rs_lex_closed(&HilbertTable::from_ideal(&ci, 12), 2).unwrap(), 11);
        assert_eq!(
            rs_lex_closed(&HilbertTable::from_ideal(&ci, 12), 1),
            Err(Error::NoSReduction { s: 1, dim: 2 })
        );
    }

    #[test]
    fn eakin_sathaye_on_field() {
        assert_eq!(eakin_sathaye_bound(&table(&[1, 0, 0], false), 1).unwrap(), 0);
        let ci = MonomialIdeal::from_exponents(ctx(4), &[&[2, 0, 0, 0], &[0, 4, 0, 0]]).unwrap();
        let b = eakin_sathaye_bound(&HilbertTable::from_ideal(&ci, 12), 3).unwrap();
        assert!(b >= 1);
    }

    #[test]
    fn bound_one_values() {
        assert_eq!(lex_bound1(2, &big(8)), BigInt::from(13));
        assert_eq!(lex_bound1(5, &big(2)), BigInt::from(1));
        assert_eq!(lex_bound1(1, &big(9)), BigInt::from(8));
    }

    #[test]
    fn rvv_examples() {
        let sq = MonomialIdeal::minimalize(monomials_in_variables(4, &[1, 2], 2), ctx(4)).unwrap();
        let out = rvv_check(&sq, 20).unwrap();
        assert_eq!(out.e, big(3));
        assert!(out.holds());
        let x1 = MonomialIdeal::from_exponents(ctx(2), &[&[1, 0]]).unwrap();
        assert!(rvv_check(&x1, 20).unwrap().holds());
        assert_eq!(rvv_bound(3, &big(5), 0), BigInt::from(1));
    }

    #[test]
    fn bound_two_examples() {
        let gin = GinOptions::default();
        let sq = MonomialIdeal::minimalize(monomials_in_variables(4, &[1, 2], 2), ctx(4)).unwrap();
        let b = lex_bound2(&sq, &gin).unwrap();
        assert_eq!(b.r, 1);
        assert_eq!(b.bound_i, BigInt::from(3));
        assert_eq!(lex_reduction_number(&sq).unwrap(), 3);
        for a in 1..7u32 {
            let i = MonomialIdeal::from_exponents(ctx(2), &[&[a, 0]]).unwrap();
            let b = lex_bound2(&i, &gin).unwrap();
            assert_eq!(b.bound_ii, Some(BigInt::from(a as i64 - 1)));
            assert_eq!(lex_reduction_number(&i).unwrap(), a as u64 - 1);
        }
        let ci = MonomialIdeal::from_exponents(RingContext::new(4, 2).unwrap(), &[&[2, 0, 0, 0], &[0, 4, 0, 0]])
            .unwrap();
        let b = lex_bound2(&ci, &gin).unwrap();
        assert_eq!(b.r, 4);
        assert_eq!(b.bound_i, BigInt::from(27));
        assert_eq!(b.bound_ii, Some(BigInt::from(13)));
        assert_eq!(lex_reduction_number(&ci).unwrap(), 11);
    }

    #[test]
    fn conca_on_lex_ideal_is_equality() {
        let gin = GinOptions::default();
        let i = MonomialIdeal::from_exponents(ctx(3), &[&[2, 0, 0], &[1, 1, 0]]).unwrap();
        let out = conca_check(&i, 2, &gin).unwrap();
        assert_eq!(out.rs, out.rs_lex);
    }

    #[test]
    fn macaulay_resum() {
        for a in 0..200u64 {
            for t in 1..6 {
                assert_eq!(macaulay_rep(&big(a), t).resum(), big(a));
            }
        }
    }
}
