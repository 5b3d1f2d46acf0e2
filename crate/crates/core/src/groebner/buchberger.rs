//! Buchberger's algorithm over the rationals with the product and chain criteria.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num::{BigRational, One, Zero};

use crate::monomial::{Monomial, TermOrder};

use super::poly::{RationalPoly, RationalPolyIdeal};

/// Polynomial as a list of terms, descending in the active order.
type Terms = Vec<(Monomial, BigRational)>;

fn scaled_shift(p: &Terms, m: &Monomial, c: &BigRational) -> Terms {
    // Monomial orders are multiplicative, so the order survives the shift.
    p.iter().map(|(k, v)| (k.mul(m), v * c)).collect()
}

/// `a - b` for sorted term lists.
fn subtract(a: &Terms, b: &Terms, order: TermOrder) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0.clone(), -b[j].1.clone()));
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].1 - &b[j].1;
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), -c.clone())));
    out
}

fn make_monic(p: &mut Terms) {
    if let Some((_, lc)) = p.first() {
        let inv = lc.recip();
        for (_, c) in p.iter_mut() {
            *c *= &inv;
        }
    }
}

/// Full normal form of `f` modulo the monic polynomials `basis`.
fn normal_form(f: Terms, basis: &[Terms], order: TermOrder) -> Terms {
    let mut rest = f;
    let mut done: Terms = Vec::new();
    while let Some((lm, lc)) = rest.first().cloned() {
        let divisor = basis.iter().find(|g| g[0].0.divides(&lm));
        match divisor {
            Some(g) => {
                let shift = lm.div(&g[0].0).expect("leading monomial divides");
                rest = subtract(&rest, &scaled_shift(g, &shift, &lc), order);
            }
            None => {
                done.push(rest.remove(0));
            }
        }
    }
    done
}

fn s_polynomial(f: &Terms, g: &Terms, order: TermOrder) -> Terms {
    let l = f[0].0.lcm(&g[0].0);
    let a = scaled_shift(f, &l.div(&f[0].0).expect("lcm"), &BigRational::one());
    let b = scaled_shift(g, &l.div(&g[0].0).expect("lcm"), &BigRational::one());
    subtract(&a, &b, order)
}

/// The reduced, monic Gröbner basis of `ideal`, sorted by descending leading monomial.
pub fn buchberger(ideal: &RationalPolyIdeal, order: TermOrder) -> Vec<RationalPoly> {
    let n = ideal.n();
    let mut basis: Vec<Terms> = Vec::new();
    let mut pairs: BTreeSet<(u64, usize, usize)> = BTreeSet::new();

    let add = |p: Terms, basis: &mut Vec<Terms>, pairs: &mut BTreeSet<(u64, usize, usize)>| {
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            pairs.insert((g[0].0.lcm(&p[0].0).degree(), i, k));
        }
        basis.push(p);
    };

    let mut inputs: Vec<Terms> = ideal.generators().iter().map(|g| g.terms_in(order)).collect();
    inputs.sort_by_key(|p| p[0].0.degree());
    for g in inputs {
        let mut r = normal_form(g, &basis, order);
        if !r.is_empty() {
            make_monic(&mut r);
            add(r, &mut basis, &mut pairs);
        }
    }

    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    while let Some(&(deg, i, j)) = pairs.iter().next() {
        pairs.remove(&(deg, i, j));
        done.insert((i, j));
        let (li, lj) = (&basis[i][0].0, &basis[j][0].0);
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let handled = |a: usize, b: usize| done.contains(&(a.min(b), a.max(b)));
        let chain = (0..basis.len())
            .any(|k| k != i && k != j && basis[k][0].0.divides(&l) && handled(i, k) && handled(j, k));
        if chain {
            continue;
        }
        let mut r = normal_form(s_polynomial(&basis[i], &basis[j], order), &basis, order);
        if !r.is_empty() {
            make_monic(&mut r);
            add(r, &mut basis, &mut pairs);
        }
    }

    // minimise, then inter-reduce
    let mut minimal: Vec<Terms> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != k && h[0].0.divides(&g[0].0) && (h[0].0 != g[0].0 || j < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Terms> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let head = minimal[k][0].clone();
        let others: Vec<Terms> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, g)| g.clone())
            .collect();
        let mut tail = normal_form(minimal[k][1..].to_vec(), &others, order);
        tail.insert(0, head);
        reduced.push(tail);
    }
    reduced.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
    reduced
        .into_iter()
        .map(|t| RationalPoly::from_terms(n, t))
        .collect()
}

/// Whether every S-polynomial of `basis` reduces to zero.
pub fn is_groebner_basis(basis: &[RationalPoly], order: TermOrder) -> bool {
    let terms: Vec<Terms> = basis.iter().map(|g| g.monic(order).terms_in(order)).collect();
    for i in 0..terms.len() {
        for j in i + 1..terms.len() {
            if !normal_form(s_polynomial(&terms[i], &terms[j], order), &terms, order).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Remainder of `f` modulo a Gröbner basis.
pub fn reduce(f: &RationalPoly, basis: &[RationalPoly], order: TermOrder) -> RationalPoly {
    let terms: Vec<Terms> = basis.iter().map(|g| g.monic(order).terms_in(order)).collect();
    RationalPoly::from_terms(f.n(), normal_form(f.terms_in(order), &terms, order))
}
