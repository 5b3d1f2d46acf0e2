//! Seeded test corpora and the named example ideals.

use std::collections::BTreeSet;

use num::{BigInt, BigRational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::borel::{borel_closure, borel_fixed_closure};
use crate::error::{Error, Result};
use crate::groebner::{RationalPoly, RationalPolyIdeal};
use crate::ideal::MonomialIdeal;
use crate::monomial::{for_each_exponent, monomials_in_variables, Monomial, RingContext, TermOrder};

const CORPUS_SEED: u64 = 0x5eed_b07e1;

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max_degree: u64) -> Monomial {
    let degree = rng.gen_range(1..=max_degree);
    let mut exps = vec![0u32; n];
    for _ in 0..degree {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(exps)
}

fn seeded_closures(
    char_marker: u64,
    draws: usize,
    max_n: usize,
    max_degree: u64,
    seed: u64,
) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for n in 1..=max_n {
        let ctx = RingContext::new(n, char_marker).expect("valid context");
        for _ in 0..draws {
            let k = rng.gen_range(1..=3);
            let gens: Vec<Monomial> = (0..k).map(|_| random_monomial(&mut rng, n, max_degree)).collect();
            let ideal = if char_marker == 0 {
                borel_closure(gens, ctx)
            } else {
                borel_fixed_closure(gens, ctx)
            }
            .expect("closures of non-unit monomials are proper");
            let key = (n, ideal.generators().to_vec());
            if seen.insert(key) {
                out.push(ideal);
            }
        }
    }
    out
}

/// Strongly stable ideals with `n <= 4` and generators of degree `<= 4`,
/// obtained as Borel closures of random seed monomials, deduplicated.
pub fn strongly_stable_corpus() -> Vec<MonomialIdeal> {
    seeded_closures(0, 80, 4, 4, CORPUS_SEED)
}

/// Ideals that are Borel-fixed in characteristic 2 or 3 (closures under the
/// `p`-Borel moves), `n <= 4`, seeds of degree `<= 4`.
pub fn p_borel_corpus() -> Vec<MonomialIdeal> {
    let mut out = seeded_closures(2, 30, 4, 4, CORPUS_SEED + 2);
    out.extend(seeded_closures(3, 30, 4, 4, CORPUS_SEED + 3));
    out
}

/// `(x1^{p^a1}, ..., xk^{p^ak})` in characteristic `p`.
pub fn prime_power_instance(p: u64, a: &[u32], n: usize) -> Result<MonomialIdeal> {
    if a.len() > n {
        return Err(Error::Usage(format!("{} exponents for {n} variables", a.len())));
    }
    let ctx = RingContext::new(n, p)?;
    let gens = a.iter().enumerate().map(|(i, &ai)| {
        let power = p
            .checked_pow(ai)
            .and_then(|v| u32::try_from(v).ok())
            .expect("exponent fits in u32");
        Monomial::pure_power(n, i + 1, power)
    });
    MonomialIdeal::minimalize(gens, ctx)
}

/// The ideal generated by all monomials of degree `a_i` that are at least
/// `x_i^{a_i}` in graded lex, for each `i`; `a` strictly increasing and `> 1`.
pub fn graded_lex_instance(a: &[u32], n: usize) -> Result<MonomialIdeal> {
    if a.len() > n {
        return Err(Error::Usage(format!("{} exponents for {n} variables", a.len())));
    }
    if a.first().is_some_and(|&x| x <= 1) || a.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Usage("exponents must satisfy 1 < a1 < a2 < ...".into()));
    }
    let ctx = RingContext::char0(n)?;
    let mut gens = Vec::new();
    for (i, &ai) in a.iter().enumerate() {
        let pivot = Monomial::pure_power(n, i + 1, ai);
        for_each_exponent(n, ai as u64, |e| {
            let m = Monomial::new(e.to_vec());
            if TermOrder::Grlex.cmp(&m, &pivot).is_ge() {
                gens.push(m);
            }
        });
    }
    MonomialIdeal::minimalize(gens, ctx)
}

/// `(x1, ..., xk)^2` in `n` variables.
pub fn square_of_first(n: usize, k: usize) -> Result<MonomialIdeal> {
    let vars: Vec<usize> = (1..=k).collect();
    MonomialIdeal::minimalize(monomials_in_variables(n, &vars, 2), RingContext::char0(n)?)
}

/// `(x1^a)` in two variables.
pub fn pure_power_instance(a: u32) -> MonomialIdeal {
    MonomialIdeal::from_exponents(RingContext::char0(2).expect("n = 2"), &[&[a, 0]]).expect("a >= 1")
}

/// The named instances used throughout the examples, with short labels.
pub fn named_instances() -> Vec<(String, MonomialIdeal)> {
    let mut out = vec![
        (
            "(x1^2, x2^4) char 2, n=4".to_string(),
            prime_power_instance(2, &[1, 2], 4).expect("valid"),
        ),
        ("(x1, x2)^2, n=4".to_string(), square_of_first(4, 2).expect("valid")),
        ("(x1, x2, x3)^2, n=5".to_string(), square_of_first(5, 3).expect("valid")),
        (
            "graded-lex a=(2,3), n=3".to_string(),
            graded_lex_instance(&[2, 3], 3).expect("valid"),
        ),
        (
            "graded-lex a=(2,3), n=4".to_string(),
            graded_lex_instance(&[2, 3], 4).expect("valid"),
        ),
    ];
    for a in 1..=6 {
        out.push((format!("(x1^{a}), n=2"), pure_power_instance(a)));
    }
    out
}

/// Every Borel-fixed ideal of the desk corpus: strongly stable closures,
/// `p`-Borel closures and the named instances, without duplicates.
pub fn desk_corpus() -> Vec<MonomialIdeal> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let named = named_instances().into_iter().map(|(_, i)| i);
    for ideal in strongly_stable_corpus().into_iter().chain(p_borel_corpus()).chain(named) {
        let key = (ideal.context().char_marker(), ideal.n(), ideal.generators().to_vec());
        if seen.insert(key) {
            out.push(ideal);
        }
    }
    out
}

/// Random homogeneous ideals over the rationals with `n <= 3` and
/// generators of degree `<= 3`.
pub fn polynomial_corpus(count: usize, seed: u64) -> Vec<RationalPolyIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=3);
        let k = rng.gen_range(1..=n);
        let mut gens = Vec::with_capacity(k);
        for _ in 0..k {
            let degree = rng.gen_range(1..=3u64);
            let terms = rng.gen_range(1..=3);
            let mut poly = RationalPoly::zero(n);
            for _ in 0..terms {
                let mut exps = vec![0u32; n];
                for _ in 0..degree {
                    exps[rng.gen_range(0..n)] += 1;
                }
                let mut c = rng.gen_range(-3..=3i64);
                if c == 0 {
                    c = 1;
                }
                let term = RationalPoly::from_terms(n, [(Monomial::new(exps), BigRational::from_integer(BigInt::from(c)))]);
                poly = poly.add(&term);
            }
            if !poly.is_zero() {
                gens.push(poly);
            }
        }
        if gens.is_empty() {
            continue;
        }
        let ctx = RingContext::char0(n).expect("n >= 2");
        out.push(RationalPolyIdeal::new(ctx, gens).expect("homogeneous nonzero generators"));
    }
    out
}
