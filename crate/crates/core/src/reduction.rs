//! Reductions generated by variables and their reduction numbers.
//!
//! For a monomial ideal `I`, the variables `x_V` generate a reduction of
//! `R/I` exactly when every remaining variable has a pure power in `I`.
//! The reduction number is then the least `r` such that every monomial of
//! degree `r + 1` in the remaining variables lies in `I`.
//!
//! For Borel-fixed ideals every `s`-reduction has the reduction number of a
//! variable reduction `{i_1 < ... < i_{s-d}} ∪ {n-d+1, ..., n}`, and the
//! smallest one is attained by the last `s` variables.

use std::collections::BTreeSet;
use std::fmt;

use num::BigUint;
use serde_json::{json, Value};

use crate::borel::{is_borel_fixed, is_strongly_stable};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{monomials_in_variables, Monomial};

/// Whether a shortcut's hypothesis is checked before it is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Hypothesis {
    #[default]
    Verify,
    Trust,
}

/// A set of variables `x_V` (1-based indices, ascending).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VariableReduction {
    vars: Vec<usize>,
}

impl VariableReduction {
    pub fn new(vars: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let set: BTreeSet<usize> = vars.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::Usage(format!("variable index {bad} out of range 1..={n}")));
        }
        Ok(VariableReduction {
            vars: set.into_iter().collect(),
        })
    }

    /// `{n - s + 1, ..., n}`.
    pub fn last(n: usize, s: usize) -> Self {
        VariableReduction {
            vars: (n - s + 1..=n).collect(),
        }
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn s(&self) -> usize {
        self.vars.len()
    }

    /// Variables outside the set, ascending.
    pub fn complement(&self, n: usize) -> Vec<usize> {
        (1..=n).filter(|v| !self.vars.contains(v)).collect()
    }
}

impl fmt::Display for VariableReduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.vars.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x{v}")?;
        }
        write!(f, ")")
    }
}

/// Reduction number of a variable reduction together with its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub reduction: VariableReduction,
    pub r: u64,
    /// A degree-`r` monomial in the complement variables outside the ideal,
    /// showing that `r` cannot be lowered. Absent when `r = 0`.
    pub witness: Option<Monomial>,
}

impl ReductionReport {
    pub fn to_json(&self) -> Value {
        json!({
            "reduction": self.reduction.vars(),
            "r": self.r,
            "witness": self.witness.as_ref().map(|w| w.exponents().to_vec()),
        })
    }
}

/// Whether `x_V` generates a reduction of `R/I`: every variable outside `V`
/// has a pure power in `I`.
pub fn is_variable_reduction(ideal: &MonomialIdeal, reduction: &VariableReduction) -> bool {
    let powers = ideal.pure_powers();
    let ok = reduction
        .complement(ideal.n())
        .iter()
        .all(|&j| powers[j - 1].is_some());
    if ok {
        assert!(
            reduction.s() >= ideal.krull_dim(),
            "a reduction needs at least dim R/I generators"
        );
    }
    ok
}

/// Least `r` such that all degree-`r + 1` monomials in the variables outside
/// `V` belong to `I`.
pub fn reduction_number_vars(
    ideal: &MonomialIdeal,
    reduction: &VariableReduction,
) -> Result<ReductionReport> {
    let n = ideal.n();
    let complement = reduction.complement(n);
    let powers = ideal.pure_powers();
    let mut bound = 0u64;
    for &j in &complement {
        match powers[j - 1] {
            Some(k) => bound += k as u64 - 1,
            None => return Err(Error::NotAReduction { variable: j }),
        }
    }
    if complement.is_empty() {
        return Ok(ReductionReport {
            reduction: reduction.clone(),
            r: 0,
            witness: None,
        });
    }
    for r in 0..=bound {
        let covered = monomials_in_variables(n, &complement, r + 1)
            .iter()
            .all(|m| ideal.has(m));
        if covered {
            let witness = (r > 0).then(|| {
                monomials_in_variables(n, &complement, r)
                    .into_iter()
                    .find(|m| !ideal.has(m))
                    .expect("r is minimal, so some degree-r monomial escapes")
            });
            return Ok(ReductionReport {
                reduction: reduction.clone(),
                r,
                witness,
            });
        }
    }
    unreachable!("every monomial of degree sum(k_j - 1) + 1 is divisible by some x_j^k_j")
}

/// `e = dim_k R/(I + (x_V))` for a variable reduction `x_V`.
pub fn colength_mod_reduction(ideal: &MonomialIdeal, reduction: &VariableReduction) -> Result<BigUint> {
    let report = reduction_number_vars(ideal, reduction)?;
    let complement = reduction.complement(ideal.n());
    let mut e = BigUint::from(0u32);
    for t in 0..=report.r {
        e += monomials_in_variables(ideal.n(), &complement, t)
            .iter()
            .filter(|m| !ideal.has(m))
            .count();
    }
    Ok(e)
}

pub(crate) fn require_borel_fixed(ideal: &MonomialIdeal, hypothesis: Hypothesis) -> Result<()> {
    if hypothesis == Hypothesis::Verify && !is_borel_fixed(ideal) {
        return Err(Error::HypothesisViolated(format!(
            "{ideal} is not Borel-fixed in characteristic {}",
            ideal.context().char_marker()
        )));
    }
    Ok(())
}

fn check_range(ideal: &MonomialIdeal, s: usize) -> Result<usize> {
    let n = ideal.n();
    if s > n {
        return Err(Error::TooManyForms { s, n });
    }
    let d = ideal.krull_dim();
    if s < d {
        return Err(Error::NoSReduction { s, dim: d });
    }
    Ok(d)
}

fn combinations(pool: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, pool: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=pool {
            if pool - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, pool, k, cur, out);
            cur.pop();
        }
    }
    rec(1, pool, k, &mut cur, &mut out);
    out
}

/// The `C(n - d, s - d)` variable sets `{i_1 < ... < i_{s-d} <= n - d} ∪ {n-d+1..n}`
/// that carry every reduction number of an `s`-reduction of a Borel-fixed ideal.
pub fn candidate_reductions(
    ideal: &MonomialIdeal,
    s: usize,
    hypothesis: Hypothesis,
) -> Result<Vec<VariableReduction>> {
    require_borel_fixed(ideal, hypothesis)?;
    let d = check_range(ideal, s)?;
    let n = ideal.n();
    let mut out = Vec::new();
    for head in combinations(n - d, s - d) {
        let q = VariableReduction {
            vars: head.into_iter().chain(n - d + 1..=n).collect(),
        };
        if !is_variable_reduction(ideal, &q) {
            return Err(Error::HypothesisViolated(format!(
                "{q} should generate a reduction of R/{ideal} but does not"
            )));
        }
        out.push(q);
    }
    Ok(out)
}

/// `r_s(R/I)` of a Borel-fixed ideal, read off the last `s` variables.
pub fn rs_borel(ideal: &MonomialIdeal, s: usize, hypothesis: Hypothesis) -> Result<ReductionReport> {
    require_borel_fixed(ideal, hypothesis)?;
    check_range(ideal, s)?;
    reduction_number_vars(ideal, &VariableReduction::last(ideal.n(), s))
}

/// Reduction numbers of all candidate variable `s`-reductions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub s: usize,
    pub entries: Vec<ReductionReport>,
}

impl Spectrum {
    pub fn distinct_count(&self) -> usize {
        self.entries.iter().map(|e| e.r).collect::<BTreeSet<_>>().len()
    }

    pub fn min(&self) -> Option<u64> {
        self.entries.iter().map(|e| e.r).min()
    }

    pub fn values(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.r).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "s": self.s,
            "entries": self.entries.iter().map(ReductionReport::to_json).collect::<Vec<_>>(),
            "distinct_count": self.distinct_count(),
        })
    }
}

pub fn reduction_spectrum(ideal: &MonomialIdeal, s: usize, hypothesis: Hypothesis) -> Result<Spectrum> {
    let entries = candidate_reductions(ideal, s, hypothesis)?
        .iter()
        .map(|q| reduction_number_vars(ideal, q))
        .collect::<Result<Vec<_>>>()?;
    Ok(Spectrum { s, entries })
}

fn require_strongly_stable(ideal: &MonomialIdeal) -> Result<()> {
    if !is_strongly_stable(ideal) {
        return Err(Error::HypothesisViolated(format!("{ideal} is not strongly stable")));
    }
    Ok(())
}

fn least_pure_power_exponent(ideal: &MonomialIdeal, j: usize, s: usize) -> Result<u64> {
    match ideal.pure_powers()[j - 1] {
        Some(k) => Ok(k as u64 - 1),
        None => Err(Error::NoSReduction {
            s,
            dim: ideal.krull_dim(),
        }),
    }
}

/// `r_s(R/I) = min{t : x_{n-s}^{t+1} in I}` for a strongly stable ideal.
pub fn rs_strongly_stable(ideal: &MonomialIdeal, s: usize) -> Result<u64> {
    require_strongly_stable(ideal)?;
    check_range(ideal, s)?;
    let n = ideal.n();
    if s == n {
        return Ok(0);
    }
    let r = least_pure_power_exponent(ideal, n - s, s)?;
    debug_assert_eq!(Some(r), rs_borel(ideal, s, Hypothesis::Trust).ok().map(|rep| rep.r));
    Ok(r)
}

/// For a strongly stable ideal and a candidate reduction `Q`,
/// `r_Q(R/I) = min{t : x_j^{t+1} in I}` with `j` the largest index outside `Q`.
pub fn char0_spectrum_formula(ideal: &MonomialIdeal, reduction: &VariableReduction) -> Result<u64> {
    require_strongly_stable(ideal)?;
    let n = ideal.n();
    let d = ideal.krull_dim();
    let tail_ok = (n - d + 1..=n).all(|v| reduction.vars().contains(&v));
    if !tail_ok {
        return Err(Error::HypothesisViolated(format!(
            "{reduction} does not contain the last {d} variables"
        )));
    }
    let Some(&j) = reduction.complement(n).last() else {
        return Ok(0);
    };
    least_pure_power_exponent(ideal, j, reduction.s())
}
