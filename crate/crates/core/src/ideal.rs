//! Monomial ideals given by their minimal generators.

use std::collections::BTreeSet;
use std::fmt;

use num::BigUint;

use crate::error::{Error, Result};
use crate::monomial::{for_each_exponent, Monomial, RingContext, TermOrder};

/// A monomial ideal of `k[x1, ..., xn]` stored through its minimal generators.
///
/// Generators are pairwise non-divisible and kept grevlex-descending, so two
/// equal ideals always have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ctx: RingContext,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, keeping only the generators not
    /// strictly divisible by another one.
    pub fn minimalize(gens: impl IntoIterator<Item = Monomial>, ctx: RingContext) -> Result<Self> {
        let mut set = BTreeSet::new();
        for g in gens {
            ctx.check(&g)?;
            if g.is_one() {
                return Err(Error::ImproperIdeal);
            }
            set.insert(g);
        }
        // Sorting by degree first means a divisor is always seen before its multiples.
        let mut candidates: Vec<Monomial> = set.into_iter().collect();
        candidates.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        let mut kept: Vec<Monomial> = Vec::new();
        for g in candidates {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        TermOrder::Grevlex.sort_descending(&mut kept);
        Ok(MonomialIdeal { ctx, gens: kept })
    }

    pub fn zero(ctx: RingContext) -> Self {
        MonomialIdeal {
            ctx,
            gens: Vec::new(),
        }
    }

    /// Convenience constructor from raw exponent vectors.
    pub fn from_exponents(ctx: RingContext, gens: &[&[u32]]) -> Result<Self> {
        Self::minimalize(gens.iter().map(|e| Monomial::new(e.to_vec())), ctx)
    }

    /// The ideal `(x1, ..., xk)`.
    pub fn first_variables(ctx: RingContext, k: usize) -> Result<Self> {
        Self::minimalize((1..=k).map(|i| Monomial::var(ctx.n(), i)), ctx)
    }

    pub fn context(&self) -> RingContext {
        self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Same generators, different characteristic marker.
    pub fn with_char(&self, char_marker: u64) -> Result<Self> {
        Ok(MonomialIdeal {
            ctx: self.ctx.with_char(char_marker)?,
            gens: self.gens.clone(),
        })
    }

    pub fn max_degree(&self) -> u64 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Membership test: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.ctx.check(m)?;
        Ok(self.has(m))
    }

    pub(crate) fn has(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub(crate) fn has_exponents(&self, e: &[u32]) -> bool {
        self.gens
            .iter()
            .any(|g| g.exponents().iter().zip(e).all(|(a, b)| a <= b))
    }

    /// Basis of `(R/I)_t`: the degree-`t` monomials outside the ideal,
    /// lex-descending.
    pub fn standard_monomials(&self, t: u64) -> Vec<Monomial> {
        let mut out = Vec::new();
        for_each_exponent(self.n(), t, |e| {
            if !self.has_exponents(e) {
                out.push(Monomial::new(e.to_vec()));
            }
        });
        out
    }

    /// `I + (x_v : v in vars)` for 1-based variable indices.
    pub fn plus_variables(&self, vars: &[usize]) -> MonomialIdeal {
        let n = self.n();
        let extra = vars.iter().map(|&v| Monomial::var(n, v));
        Self::minimalize(self.gens.iter().cloned().chain(extra), self.ctx)
            .expect("adding variables keeps the ideal proper")
    }

    /// The colon ideal `I : m`, or `None` when it is the whole ring.
    pub fn colon(&self, m: &Monomial) -> Option<MonomialIdeal> {
        let gens: Vec<Monomial> = self
            .gens
            .iter()
            .map(|g| g.div(&g.gcd(m)).expect("gcd divides"))
            .collect();
        if gens.iter().any(Monomial::is_one) {
            return None;
        }
        Some(Self::minimalize(gens, self.ctx).expect("non-unit generators"))
    }

    /// Krull dimension of `R/I`: `n` minus the smallest set of variables
    /// meeting the support of every generator.
    pub fn krull_dim(&self) -> usize {
        let n = self.n();
        if self.gens.is_empty() {
            return n;
        }
        let supports: Vec<u64> = self
            .gens
            .iter()
            .map(|g| {
                g.exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .fold(0u64, |acc, (i, _)| acc | (1 << i))
            })
            .collect();
        let mut best = n;
        for cover in 0u64..(1u64 << n) {
            let size = cover.count_ones() as usize;
            if size < best && supports.iter().all(|s| s & cover != 0) {
                best = size;
            }
        }
        n - best
    }

    /// 1-based indices `j` such that some generator is a pure power of `xj`,
    /// paired with the smallest such power.
    pub fn pure_powers(&self) -> Vec<Option<u32>> {
        let mut out = vec![None; self.n()];
        for g in &self.gens {
            if let Some((i, k)) = g.as_pure_power() {
                let slot: &mut Option<u32> = &mut out[i - 1];
                *slot = Some(slot.map_or(k, |old| old.min(k)));
            }
        }
        out
    }

    /// `dim_k R/I` for an Artinian quotient.
    pub fn colength(&self) -> Result<BigUint> {
        let dim = self.krull_dim();
        if dim > 0 {
            return Err(Error::InfiniteColength { dim });
        }
        // Every standard monomial has degree at most sum(k_j - 1).
        let top: u64 = self
            .pure_powers()
            .iter()
            .map(|k| k.expect("Artinian ideals contain a power of every variable") as u64 - 1)
            .sum();
        let mut total = BigUint::from(0u32);
        for t in 0..=top {
            total += self.standard_monomials(t).len();
        }
        Ok(total)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize) -> RingContext {
        RingContext::char0(n).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = MonomialIdeal::from_exponents(ctx(2), &[&[2, 0], &[2, 1]]).unwrap();
        assert_eq!(i.generators(), &[m(&[2, 0])]);
    }

    #[test]
    fn minimalize_empty_is_zero_ideal() {
        let i = MonomialIdeal::minimalize(Vec::new(), ctx(3)).unwrap();
        assert!(i.is_zero());
    }

    #[test]
    fn minimalize_keeps_incomparable() {
        let i = MonomialIdeal::from_exponents(ctx(3), &[&[1, 1, 0], &[0, 1, 1], &[1, 1, 1]]).unwrap();
        assert_eq!(i.generators().len(), 2);
        assert!(i.generators().contains(&m(&[1, 1, 0])));
        assert!(i.generators().contains(&m(&[0, 1, 1])));
    }

    #[test]
    fn minimalize_errors() {
        assert_eq!(
            MonomialIdeal::from_exponents(ctx(2), &[&[0, 0]]),
            Err(Error::ImproperIdeal)
        );
        assert_eq!(
            MonomialIdeal::from_exponents(ctx(2), &[&[1, 0, 0]]),
            Err(Error::ContextMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn membership() {
        let i = MonomialIdeal::from_exponents(ctx(2), &[&[2, 0]]).unwrap();
        assert!(i.contains(&m(&[2, 1])).unwrap());
        assert!(!i.contains(&m(&[1, 3])).unwrap());
        let j = MonomialIdeal::from_exponents(ctx(3), &[&[1, 1, 0], &[0, 3, 0]]).unwrap();
        assert!(j.contains(&m(&[0, 3, 1])).unwrap());
        assert!(i.contains(&m(&[1])).is_err());
    }

    #[test]
    fn standard_monomials() {
        let i = MonomialIdeal::from_exponents(ctx(2), &[&[2, 0], &[1, 1], &[0, 3]]).unwrap();
        assert_eq!(i.standard_monomials(2), vec![m(&[0, 2])]);
        assert_eq!(i.standard_monomials(0), vec![m(&[0, 0])]);
        let z = MonomialIdeal::zero(ctx(2));
        assert_eq!(z.standard_monomials(3).len(), 4);
    }

    #[test]
    fn krull_dimension() {
        assert_eq!(MonomialIdeal::from_exponents(ctx(2), &[&[1, 1]]).unwrap().krull_dim(), 1);
        assert_eq!(
            MonomialIdeal::from_exponents(ctx(4), &[&[2, 0, 0, 0], &[0, 4, 0, 0]])
                .unwrap()
                .krull_dim(),
            2
        );
        assert_eq!(MonomialIdeal::zero(ctx(3)).krull_dim(), 3);
        // (x1, x2, x3)^2 in five variables has dimension 2.
        let sq: Vec<Monomial> = crate::monomial::monomials_in_variables(5, &[1, 2, 3], 2);
        assert_eq!(MonomialIdeal::minimalize(sq, ctx(5)).unwrap().krull_dim(), 2);
    }

    #[test]
    fn colength_values() {
        let i = MonomialIdeal::from_exponents(ctx(2), &[&[2, 0], &[1, 1], &[0, 3]]).unwrap();
        assert_eq!(i.colength().unwrap(), BigUint::from(4u32));
        let maxi = MonomialIdeal::first_variables(ctx(3), 3).unwrap();
        assert_eq!(maxi.colength().unwrap(), BigUint::from(1u32));
        for a in 1..5u32 {
            for b in 1..5u32 {
                let ci = MonomialIdeal::from_exponents(ctx(2), &[&[a, 0], &[0, b]]).unwrap();
                assert_eq!(ci.colength().unwrap(), BigUint::from(a * b));
            }
        }
        let not_artinian = MonomialIdeal::from_exponents(ctx(2), &[&[1, 1]]).unwrap();
        assert_eq!(not_artinian.colength(), Err(Error::InfiniteColength { dim: 1 }));
    }

    #[test]
    fn colon_ideal() {
        let i = MonomialIdeal::from_exponents(ctx(2), &[&[2, 0], &[0, 3]]).unwrap();
        let c = i.colon(&m(&[1, 1])).unwrap();
        assert_eq!(i.colon(&m(&[2, 0])), None);
        assert_eq!(c, MonomialIdeal::from_exponents(ctx(2), &[&[1, 0], &[0, 2]]).unwrap());
    }
}
