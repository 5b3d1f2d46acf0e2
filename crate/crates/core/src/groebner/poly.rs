//! Homogeneous polynomials with rational coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, RingContext, TermOrder};

/// A polynomial over the rationals; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    n: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl RationalPoly {
    pub fn zero(n: usize) -> Self {
        RationalPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            assert_eq!(m.n(), n, "term {m} has the wrong number of variables");
            p.add_term(m, c);
        }
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        let n = m.n();
        Self::from_terms(n, [(m, BigRational::one())])
    }

    /// `c_1 x_1 + ... + c_n x_n`.
    pub fn linear_form(coeffs: &[BigRational]) -> Self {
        let n = coeffs.len();
        Self::from_terms(
            n,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(n, i + 1), c.clone())),
        )
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Terms sorted descending under `order`.
    pub fn terms_in(&self, order: TermOrder) -> Vec<(Monomial, BigRational)> {
        let mut v: Vec<(Monomial, BigRational)> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn leading_monomial(&self, order: TermOrder) -> Option<Monomial> {
        self.terms
            .keys()
            .max_by(|a, b| order.cmp(a, b))
            .cloned()
    }

    /// The common degree of all terms, `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &RationalPoly) -> RationalPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> RationalPoly {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        RationalPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn sub(&self, other: &RationalPoly) -> RationalPoly {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn mul(&self, other: &RationalPoly) -> RationalPoly {
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> RationalPoly {
        RationalPoly {
            n: self.n,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    fn power(&self, k: u32) -> RationalPoly {
        let mut out = Self::monomial(Monomial::one(self.n));
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Substitutes `x_j -> images[j-1]` for every variable.
    pub fn substitute(&self, images: &[RationalPoly]) -> RationalPoly {
        assert_eq!(images.len(), self.n);
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let mut term = Self::monomial(Monomial::one(self.n)).scale(c);
            for (j, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[j].power(e));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: TermOrder) -> RationalPoly {
        match self.leading_monomial(order) {
            None => self.clone(),
            Some(lm) => {
                let lc = self.terms[&lm].clone();
                self.scale(&lc.recip())
            }
        }
    }
}

impl fmt::Display for RationalPoly {
    /// Grevlex-descending terms in the input syntax, e.g. `x1^2 - 3/2*x2*x3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms_in(TermOrder::Grevlex).iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

/// A homogeneous ideal of `Q[x1, ..., xn]` given by nonzero homogeneous generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolyIdeal {
    ctx: RingContext,
    gens: Vec<RationalPoly>,
}

impl RationalPolyIdeal {
    pub fn new(ctx: RingContext, gens: Vec<RationalPoly>) -> Result<Self> {
        if ctx.char_marker() != 0 {
            return Err(Error::InvalidContext(
                "polynomial computations run over the rationals (char 0)".into(),
            ));
        }
        for g in &gens {
            if g.n() != ctx.n() {
                return Err(Error::ContextMismatch {
                    expected: ctx.n(),
                    found: g.n(),
                });
            }
            if g.is_zero() {
                return Err(Error::InvalidContext("generators must be nonzero".into()));
            }
            match g.homogeneous_degree() {
                None => return Err(Error::InvalidContext(format!("{g} is not homogeneous"))),
                Some(0) => return Err(Error::ImproperIdeal),
                Some(_) => {}
            }
        }
        Ok(RationalPolyIdeal { ctx, gens })
    }

    /// The same ideal viewed as a polynomial ideal over the rationals.
    pub fn from_monomial_ideal(ideal: &MonomialIdeal) -> Self {
        let ctx = RingContext::char0(ideal.n()).expect("n >= 1");
        let gens = ideal.generators().iter().cloned().map(RationalPoly::monomial).collect();
        RationalPolyIdeal { ctx, gens }
    }

    pub fn context(&self) -> RingContext {
        self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn generators(&self) -> &[RationalPoly] {
        &self.gens
    }

    pub fn max_degree(&self) -> u64 {
        self.gens
            .iter()
            .filter_map(RationalPoly::homogeneous_degree)
            .max()
            .unwrap_or(0)
    }

    /// Adds generators, e.g. linear forms.
    pub fn with_generators(&self, extra: &[RationalPoly]) -> Result<Self> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Self::new(self.ctx, gens)
    }

    pub fn substitute(&self, images: &[RationalPoly]) -> Self {
        RationalPolyIdeal {
            ctx: self.ctx,
            gens: self.gens.iter().map(|g| g.substitute(images)).collect(),
        }
    }
}

impl fmt::Display for RationalPolyIdeal {
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
    use num::BigInt;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    fn x(n: usize, i: usize) -> RationalPoly {
        RationalPoly::monomial(Monomial::var(n, i))
    }

    #[test]
    fn arithmetic_cancels() {
        let p = x(2, 1).add(&x(2, 2));
        let d = p.sub(&x(2, 2));
        assert_eq!(d, x(2, 1));
        assert!(p.sub(&p).is_zero());
        let sq = p.mul(&p);
        assert_eq!(sq.coefficient(&Monomial::new(vec![1, 1])), q(2, 1));
        assert_eq!(sq.homogeneous_degree(), Some(2));
    }

    #[test]
    fn display_uses_input_syntax() {
        let p = RationalPoly::from_terms(
            3,
            [
                (Monomial::new(vec![2, 0, 0]), q(1, 1)),
                (Monomial::new(vec![0, 1, 1]), q(-3, 2)),
            ],
        );
        assert_eq!(p.to_string(), "x1^2 - 3/2*x2*x3");
    }

    #[test]
    fn substitution() {
        // x1*x2 with x1 -> x1 + x2, x2 -> x2
        let p = RationalPoly::monomial(Monomial::new(vec![1, 1]));
        let s = p.substitute(&[x(2, 1).add(&x(2, 2)), x(2, 2)]);
        assert_eq!(s.len(), 2);
        assert_eq!(s.coefficient(&Monomial::new(vec![0, 2])), q(1, 1));
    }

    #[test]
    fn ideal_validation() {
        let ctx = RingContext::char0(2).unwrap();
        let mixed = x(2, 1).add(&RationalPoly::monomial(Monomial::new(vec![0, 2])));
        assert!(RationalPolyIdeal::new(ctx, vec![mixed]).is_err());
        assert!(RationalPolyIdeal::new(RingContext::new(2, 3).unwrap(), vec![x(2, 1)]).is_err());
        assert!(RationalPolyIdeal::new(ctx, vec![x(2, 1)]).is_ok());
    }
}
