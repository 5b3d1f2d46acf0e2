//! Ring contexts, monomials and term orders.
//!
//! Variables are indexed `1..=n` in every public API and stored 0-based
//! internally. `x1` is the largest variable in every order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The polynomial ring `k[x1, ..., xn]` as far as this library cares:
/// the number of variables and the characteristic of `k`.
///
/// The characteristic only enters Borel-fixedness tests; every count and
/// every reduction number of a monomial ideal is characteristic free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingContext {
    n: usize,
    char_marker: u64,
}

impl RingContext {
    pub fn new(n: usize, char_marker: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidContext("need at least one variable".into()));
        }
        if char_marker != 0 && !is_prime(char_marker) {
            return Err(Error::InvalidContext(format!(
                "characteristic {char_marker} is neither 0 nor prime"
            )));
        }
        Ok(RingContext { n, char_marker })
    }

    /// Characteristic-zero ring in `n` variables.
    pub fn char0(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn char_marker(&self) -> u64 {
        self.char_marker
    }

    pub fn with_char(self, char_marker: u64) -> Result<Self> {
        Self::new(self.n, char_marker)
    }

    pub(crate) fn check(&self, m: &Monomial) -> Result<()> {
        if m.n() != self.n {
            return Err(Error::ContextMismatch {
                expected: self.n,
                found: m.n(),
            });
        }
        Ok(())
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A monomial `x^A`, stored as its exponent vector.
///
/// The derived `Ord` compares exponent vectors lexicographically, which is
/// exactly the lexicographic term order with `x1 > x2 > ... > xn`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(n: usize) -> Self {
        Monomial {
            exponents: vec![0; n],
        }
    }

    /// The variable `x_index` (1-based) in a ring with `n` variables.
    pub fn var(n: usize, index: usize) -> Self {
        Self::pure_power(n, index, 1)
    }

    /// `x_index ^ power` (1-based index).
    pub fn pure_power(n: usize, index: usize, power: u32) -> Self {
        assert!(index >= 1 && index <= n, "variable index {index} out of 1..={n}");
        let mut exponents = vec![0; n];
        exponents[index - 1] = power;
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Exponent of `x_index` (1-based).
    pub fn exponent(&self, index: usize) -> u32 {
        self.exponents[index - 1]
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// 1-based indices of the variables dividing this monomial, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// If this is `x_i^k` with `k > 0`, returns `(i, k)`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i + 1, e));
            }
        }
        found
    }

    /// Largest 1-based index in the support, `None` for the unit.
    pub fn max_variable(&self) -> Option<usize> {
        self.exponents.iter().rposition(|&e| e > 0).map(|i| i + 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    /// Moves `count` copies of `x_from` to `x_to` (1-based). Panics if fewer
    /// than `count` copies are present.
    pub fn exchange(&self, from: usize, to: usize, count: u32) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents[from - 1] -= count;
        exponents[to - 1] += count;
        Monomial { exponents }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(&a, &b)| a == 0 || b == 0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Monomial orders with `x1 > x2 > ... > xn`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    Lex,
    Grlex,
    Grevlex,
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => a.exponents.cmp(&b.exponents),
            TermOrder::Grlex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| a.exponents.cmp(&b.exponents)),
            TermOrder::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.exponents.iter().zip(&b.exponents).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    /// Sorts largest first.
    pub fn sort_descending(&self, monomials: &mut [Monomial]) {
        monomials.sort_by(|a, b| self.cmp(b, a));
    }
}

impl std::str::FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(TermOrder::Lex),
            "grlex" => Ok(TermOrder::Grlex),
            "grevlex" | "revlex" => Ok(TermOrder::Grevlex),
            other => Err(Error::Usage(format!("unknown term order `{other}`"))),
        }
    }
}

/// Calls `visit` on every exponent vector of total degree `t` in `n`
/// variables, in lex-descending order.
pub fn for_each_exponent(n: usize, t: u64, mut visit: impl FnMut(&[u32])) {
    fn rec(buf: &mut [u32], pos: usize, left: u32, visit: &mut dyn FnMut(&[u32])) {
        if pos + 1 == buf.len() {
            buf[pos] = left;
            visit(buf);
            return;
        }
        for e in (0..=left).rev() {
            buf[pos] = e;
            rec(buf, pos + 1, left - e, visit);
        }
        buf[pos] = 0;
    }
    if n == 0 {
        if t == 0 {
            visit(&[]);
        }
        return;
    }
    let mut buf = vec![0u32; n];
    rec(&mut buf, 0, t as u32, &mut visit);
}

/// All monomials of degree `t` in `n` variables, lex-descending.
pub fn monomials_of_degree(n: usize, t: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    for_each_exponent(n, t, |e| out.push(Monomial::new(e.to_vec())));
    out
}

/// All degree-`t` monomials of the `n`-variable ring supported on the given
/// 1-based variables, lex-descending.
pub fn monomials_in_variables(n: usize, vars: &[usize], t: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    for_each_exponent(vars.len(), t, |e| {
        let mut exps = vec![0u32; n];
        for (k, &v) in vars.iter().enumerate() {
            exps[v - 1] = e[k];
        }
        out.push(Monomial::new(exps));
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn context_validation() {
        assert!(RingContext::new(0, 0).is_err());
        assert!(RingContext::new(3, 4).is_err());
        assert!(RingContext::new(3, 7).is_ok());
        assert!(RingContext::new(3, 0).is_ok());
    }

    #[test]
    fn display() {
        assert_eq!(m(&[2, 0, 1]).to_string(), "x1^2*x3");
        assert_eq!(m(&[0, 0, 0]).to_string(), "1");
    }

    #[test]
    fn orders_on_degree_two() {
        // x1*x3 vs x2^2: lex and grlex say x1*x3 is larger, grevlex says x2^2.
        let a = m(&[1, 0, 1]);
        let b = m(&[0, 2, 0]);
        assert_eq!(TermOrder::Lex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(TermOrder::Grlex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(TermOrder::Grevlex.cmp(&a, &b), Ordering::Less);
    }

    #[test]
    fn lex_ignores_degree() {
        let a = m(&[1, 0]);
        let b = m(&[0, 5]);
        assert_eq!(TermOrder::Lex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(TermOrder::Grlex.cmp(&a, &b), Ordering::Less);
    }

    #[test]
    fn enumeration_is_lex_descending_and_complete() {
        let all = monomials_of_degree(3, 3);
        assert_eq!(all.len(), 10);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(all[0], m(&[3, 0, 0]));
        assert_eq!(all[9], m(&[0, 0, 3]));
    }

    #[test]
    fn restricted_enumeration() {
        let ms = monomials_in_variables(4, &[1, 2], 2);
        assert_eq!(ms, vec![m(&[2, 0, 0, 0]), m(&[1, 1, 0, 0]), m(&[0, 2, 0, 0])]);
        assert_eq!(monomials_in_variables(4, &[], 0), vec![m(&[0, 0, 0, 0])]);
        assert!(monomials_in_variables(4, &[], 1).is_empty());
    }

    #[test]
    fn arithmetic() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 3, 1]);
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 1, 0]));
        assert_eq!(a.mul(&b).div(&b), Some(a.clone()));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.exchange(2, 1, 1), m(&[3, 0, 0]));
        assert_eq!(m(&[0, 4, 0]).as_pure_power(), Some((2, 4)));
        assert_eq!(a.as_pure_power(), None);
        assert_eq!(a.max_variable(), Some(2));
    }
}
