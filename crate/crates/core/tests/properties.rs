use num::{BigInt, BigRational, BigUint};
use proptest::prelude::*;

use borelred::borel::{borel_closure, is_lex_segment, pset, pset_by_enumeration};
use borelred::groebner::{buchberger, rs_linear_forms, variable_forms, RationalPoly, RationalPolyIdeal};
use borelred::hilbert::{hilbert, hilbert_inclusion_exclusion, HilbertNumerator};
use borelred::lexmac::{lex_bound1, lex_ideal, lex_reduction_number, macaulay_growth, macaulay_rep};
use borelred::monomial::{Monomial, RingContext, TermOrder};
use borelred::parse::{ideal_to_json, ideal_to_text, parse_ideal};
use borelred::reduction::{colength_mod_reduction, reduction_spectrum, Hypothesis, VariableReduction};
use borelred::MonomialIdeal;

fn exponent_vec(n: usize, max_degree: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max_degree, n).prop_filter("non-unit, bounded degree", move |e| {
        let d: u32 = e.iter().sum();
        d >= 1 && d <= max_degree
    })
}

fn ideal_in(n: usize, max_gens: usize, max_degree: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(exponent_vec(n, max_degree), 1..=max_gens).prop_map(move |gens| {
        let ctx = RingContext::char0(n).unwrap();
        MonomialIdeal::minimalize(gens.into_iter().map(Monomial::new), ctx).unwrap()
    })
}

fn monomial_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(|n| ideal_in(n, 4, 4))
}

fn strongly_stable(max_n: usize, max_degree: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(exponent_vec(n, max_degree), 1..=2).prop_map(move |gens| {
            borel_closure(gens.into_iter().map(Monomial::new), RingContext::char0(n).unwrap()).unwrap()
        })
    })
}

fn rational(c: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(c))
}

fn poly_ideal() -> impl Strategy<Value = RationalPolyIdeal> {
    // A term of degree `deg` is a multiset of `deg` variable indices.
    let poly = |n: usize| {
        (1usize..=2).prop_flat_map(move |deg| {
            prop::collection::vec((prop::collection::vec(0..n, deg), -3i64..=3), 1..=3).prop_map(move |terms| {
                let terms = terms.into_iter().map(|(vars, c)| {
                    let mut e = vec![0u32; n];
                    for v in vars {
                        e[v] += 1;
                    }
                    (Monomial::new(e), rational(if c == 0 { 1 } else { c }))
                });
                terms.fold(RationalPoly::zero(n), |acc, (m, c)| {
                    acc.add(&RationalPoly::from_terms(n, [(m, c)]))
                })
            })
        })
    };
    (2usize..=3).prop_flat_map(move |n| {
        prop::collection::vec(poly(n), 1..=3).prop_filter_map("nonzero generators", move |gens| {
            let gens: Vec<_> = gens.into_iter().filter(|p| !p.is_zero()).collect();
            if gens.is_empty() {
                return None;
            }
            RationalPolyIdeal::new(RingContext::char0(n).unwrap(), gens).ok()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn three_hilbert_routes_agree(ideal in monomial_ideal(), t in 0u64..=9) {
        let direct = hilbert(&ideal, t);
        prop_assert_eq!(&direct, &hilbert_inclusion_exclusion(&ideal, t));
        prop_assert_eq!(&direct, &HilbertNumerator::of(&ideal).eval(t));
    }

    #[test]
    fn minimalize_is_idempotent_and_keeps_membership(n in 1usize..=4, raw in prop::collection::vec(prop::collection::vec(0u32..=3, 4), 1..=6)) {
        let gens: Vec<Monomial> = raw
            .into_iter()
            .map(|e| Monomial::new(e[..n].to_vec()))
            .filter(|m| !m.is_one())
            .collect();
        prop_assume!(!gens.is_empty());
        let ctx = RingContext::char0(n).unwrap();
        let ideal = MonomialIdeal::minimalize(gens.clone(), ctx).unwrap();
        let again = MonomialIdeal::minimalize(ideal.generators().to_vec(), ctx).unwrap();
        prop_assert_eq!(&again, &ideal);
        for g in &gens {
            prop_assert!(ideal.contains(g).unwrap());
        }
        for a in ideal.generators() {
            for b in ideal.generators() {
                prop_assert!(a == b || !a.divides(b));
            }
        }
    }

    #[test]
    fn pset_matches_enumeration(e in (1usize..=3).prop_flat_map(|n| exponent_vec(n, 4))) {
        let m = Monomial::new(e);
        prop_assert_eq!(pset(&m), pset_by_enumeration(&m));
    }

    #[test]
    fn macaulay_representation_resums(a in 0u64..2_000_000, t in 1u64..=12) {
        let a = BigUint::from(a);
        let rep = macaulay_rep(&a, t);
        prop_assert_eq!(rep.resum(), a.clone());
        // Growth never shrinks a positive value.
        prop_assert!(macaulay_growth(&a, t) >= a);
    }

    #[test]
    fn lex_ideal_has_the_same_hilbert_function(ideal in strongly_stable(3, 3)) {
        let lex = lex_ideal(&ideal).unwrap();
        prop_assert!(is_lex_segment(&lex));
        for t in 0..=12 {
            prop_assert_eq!(hilbert(&lex, t), hilbert(&ideal, t));
        }
    }

    #[test]
    fn lex_bound1_holds_away_from_linear_ideals(ideal in strongly_stable(4, 3)) {
        let d = ideal.krull_dim();
        prop_assume!(d >= 1);
        let e = colength_mod_reduction(&ideal, &VariableReduction::last(ideal.n(), d)).unwrap();
        prop_assume!(d == 1 || e >= BigUint::from(2u32));
        let actual = BigInt::from(lex_reduction_number(&ideal).unwrap());
        prop_assert!(actual <= lex_bound1(d, &e), "actual {} for d={} e={}", actual, d, e);
    }

    #[test]
    fn strongly_stable_spectrum_is_small(ideal in strongly_stable(4, 4)) {
        let d = ideal.krull_dim();
        for s in d..=ideal.n() {
            let sp = reduction_spectrum(&ideal, s, Hypothesis::Verify).unwrap();
            prop_assert!(sp.distinct_count() <= s - d + 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduction_number_ignores_recombination_of_forms(
        ideal in (2usize..=3).prop_flat_map(|n| ideal_in(n, 3, 3)),
        mix in prop::collection::vec(-4i64..=4, 9),
    ) {
        let n = ideal.n();
        let d = ideal.krull_dim();
        let s = (d.max(1)).min(n);
        let poly = RationalPolyIdeal::from_monomial_ideal(&ideal);
        let vars: Vec<usize> = (n - s + 1..=n).collect();
        let forms = variable_forms(n, &vars);
        // Unipotent upper-triangular recombination of the same span.
        let mut mixed = forms.clone();
        for i in 0..s {
            for j in i + 1..s {
                mixed[i] = mixed[i].add(&forms[j].scale(&rational(mix[i * 3 + j])));
            }
        }
        let a = rs_linear_forms(&poly, &forms);
        let b = rs_linear_forms(&poly, &mixed);
        prop_assert_eq!(a.ok(), b.ok());
    }

    #[test]
    fn reduced_basis_ignores_generator_order(ideal in poly_ideal(), rotate in 0usize..3) {
        let mut gens = ideal.generators().to_vec();
        let k = rotate % gens.len();
        gens.rotate_left(k);
        gens.reverse();
        let shuffled = RationalPolyIdeal::new(ideal.context(), gens).unwrap();
        prop_assert_eq!(
            buchberger(&ideal, TermOrder::Grevlex),
            buchberger(&shuffled, TermOrder::Grevlex)
        );
    }

    #[test]
    fn ideal_formats_round_trip(ideal in monomial_ideal()) {
        prop_assert_eq!(parse_ideal(&ideal_to_text(&ideal)).unwrap(), ideal.clone());
        let json = ideal_to_json(&ideal).to_string();
        prop_assert_eq!(parse_ideal(&json).unwrap(), ideal);
    }
}

#[test]
fn cli_runs_are_deterministic() {
    let dir = std::env::temp_dir().join(format!("borelred-props-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ci.txt");
    std::fs::write(&path, "ring n=4 char=2\nideal: x1^2, x2^4\n").unwrap();
    let p = path.to_str().unwrap();
    let poly_path = dir.join("poly.txt");
    std::fs::write(&poly_path, "ring n=3 char=0\nideal: x1*x2 - x3^2, x1^2 + 2*x2*x3\n").unwrap();
    let q = poly_path.to_str().unwrap();
    for args in [
        vec!["borelred", "spectrum", p, "--s", "3"],
        vec!["borelred", "--format", "json", "bounds", p],
        vec!["borelred", "--format", "json", "gin", q, "--seed", "5"],
    ] {
        let a = borelred::cli::run(args.clone());
        let b = borelred::cli::run(args.clone());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.code, b.code);
    }
    std::fs::remove_dir_all(&dir).ok();
}
