//! Worked examples with known answers, runnable as a pass/fail table.

use num::{BigInt, BigUint};

use crate::borel::{is_borel_fixed, is_lex_segment, pset, pset_lower_bound};
use crate::corpus::{graded_lex_instance, prime_power_instance, pure_power_instance, square_of_first};
use crate::error::{Error, Result};
use crate::groebner::{gin_monomial, rs_generic, GinOptions, RationalPolyIdeal};
use crate::hilbert::{hilbert, HilbertTable, DEFAULT_HORIZON};
use crate::lexmac::{lex_bound2, lex_reduction_number, rs_lex_closed};
use crate::monomial::Monomial;
use crate::reduction::{
    reduction_number_vars, reduction_spectrum, rs_borel, rs_strongly_stable, Hypothesis, VariableReduction,
};

pub struct Scenario {
    /// Which statement or example the scenario exercises.
    pub anchor: &'static str,
    pub description: &'static str,
    run: fn() -> Result<(bool, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScenarioOutcome {
    pub anchor: &'static str,
    pub description: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Scenario {
    pub fn run(&self) -> ScenarioOutcome {
        let (passed, detail) = match (self.run)() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        ScenarioOutcome {
            anchor: self.anchor,
            description: self.description,
            passed,
            detail,
        }
    }
}

fn check<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> Result<(bool, String)> {
    Ok((got == want, format!("got {got:?}, expected {want:?}")))
}

fn ci() -> Result<crate::ideal::MonomialIdeal> {
    prime_power_instance(2, &[1, 2], 4)
}

pub fn scenarios() -> Vec<Scenario> {
    vec![
        Scenario {
            anchor: "hilbert of (x1,x2)^2",
            description: "(x1, x2)^2 in n=4 has h(3) = 3t+1 = 10",
            run: || check(hilbert(&square_of_first(4, 2)?, 3), BigUint::from(10u32)),
        },
        Scenario {
            anchor: "dimension of (x1,x2,x3)^2",
            description: "(x1, x2, x3)^2 in n=5 has Krull dimension 2",
            run: || check(square_of_first(5, 3)?.krull_dim(), 2),
        },
        Scenario {
            anchor: "P(x1x3)",
            description: "P(x1*x3) in n=3 is {x1*x3, x2*x3}",
            run: || {
                let p = pset(&Monomial::new(vec![1, 0, 1]));
                check(
                    p.members().to_vec(),
                    vec![Monomial::new(vec![1, 0, 1]), Monomial::new(vec![0, 1, 1])],
                )
            },
        },
        Scenario {
            anchor: "cardinality bound on P(x1x3)",
            description: "the lower bound for |P(x1*x3)| is 2 and is attained",
            run: || check(pset_lower_bound(&Monomial::new(vec![1, 0, 1])), BigUint::from(2u32)),
        },
        Scenario {
            anchor: "prime-power ideal is Borel-fixed",
            description: "(x1^2, x2^4) is Borel-fixed in char 2 but not in char 0",
            run: || {
                let i = ci()?;
                check((is_borel_fixed(&i), is_borel_fixed(&i.with_char(0)?)), (true, false))
            },
        },
        Scenario {
            anchor: "pure power is lex-segment",
            description: "(x1^a) in n=2 is a lex-segment ideal for a = 1..6",
            run: || check((1..=6).all(|a| is_lex_segment(&pure_power_instance(a))), true),
        },
        Scenario {
            anchor: "prime-power reduction number for V={2,3,4}",
            description: "(x1^2, x2^4), V = {x2, x3, x4}: r = 2 - 4 + 3 = 1",
            run: || {
                let v = VariableReduction::new([2, 3, 4], 4)?;
                check(reduction_number_vars(&ci()?, &v)?.r, 1)
            },
        },
        Scenario {
            anchor: "prime-power r_s formula",
            description: "(x1^2, x2^4) in char 2: r_3 = 1 and r_2 = 2 + 4 - 4 + 2 = 4",
            run: || {
                let i = ci()?;
                check(
                    (rs_borel(&i, 3, Hypothesis::Verify)?.r, rs_borel(&i, 2, Hypothesis::Verify)?.r),
                    (1, 4),
                )
            },
        },
        Scenario {
            anchor: "prime-power spectrum",
            description: "(x1^2, x2^4), s=3: reduction numbers {3, 1}, C(2,1) = 2 distinct",
            run: || {
                let sp = reduction_spectrum(&ci()?, 3, Hypothesis::Verify)?;
                check((sp.values(), sp.distinct_count()), (vec![3, 1], 2))
            },
        },
        Scenario {
            anchor: "stability shortcut needs strong stability",
            description: "the strongly stable shortcut refuses (x1^2, x2^4) at s=2",
            run: || {
                let refused = matches!(rs_strongly_stable(&ci()?, 2), Err(Error::HypothesisViolated(_)));
                check(refused, true)
            },
        },
        Scenario {
            anchor: "graded-lex spectrum",
            description: "graded-lex ideal for a=(2,3), n=3, s=2: s-d+1 = 2 distinct reduction numbers",
            run: || {
                let sp = reduction_spectrum(&graded_lex_instance(&[2, 3], 3)?, 2, Hypothesis::Verify)?;
                check(sp.distinct_count(), 2)
            },
        },
        Scenario {
            anchor: "lex reduction number of a pure power",
            description: "(x1^3) in n=2: r(R/I^lex) = a - 1 = 2",
            run: || {
                let h = HilbertTable::from_ideal(&pure_power_instance(3), DEFAULT_HORIZON);
                check(rs_lex_closed(&h, 1)?, 2)
            },
        },
        Scenario {
            anchor: "lex reduction number of (x1,x2)^2",
            description: "(x1, x2)^2 in n=4: r(R/I) = 1 and r(R/I^lex) = d(n-d-1)+1 = 3",
            run: || {
                let i = square_of_first(4, 2)?;
                check((rs_borel(&i, 2, Hypothesis::Verify)?.r, lex_reduction_number(&i)?), (1, 3))
            },
        },
        Scenario {
            anchor: "bound (i) is sharp",
            description: "(x1, x2)^2 in n=4: bound (i) = 3 = r(R/I^lex)",
            run: || {
                let b = lex_bound2(&square_of_first(4, 2)?, &GinOptions::default())?;
                check(b.bound_i, BigInt::from(3))
            },
        },
        Scenario {
            anchor: "bound (ii) is sharp",
            description: "(x1^a) in n=2: bound (ii) = a - 1 = r(R/I^lex) for a = 1..6",
            run: || {
                let mut ok = true;
                for a in 1..=6u32 {
                    let i = pure_power_instance(a);
                    let b = lex_bound2(&i, &GinOptions::default())?;
                    ok &= b.bound_ii == Some(BigInt::from(a as i64 - 1))
                        && lex_reduction_number(&i)? == a as u64 - 1;
                }
                check(ok, true)
            },
        },
        Scenario {
            anchor: "generic forms on a Borel-fixed ideal",
            description: "(x1, x2)^2 in n=4: r_s from generic forms equals r_s from variables, s = 2..4",
            run: || {
                let i = square_of_first(4, 2)?;
                let poly = RationalPolyIdeal::from_monomial_ideal(&i);
                let mut pairs = Vec::new();
                for s in 2..=4 {
                    pairs.push((rs_generic(&poly, s, &GinOptions::default())?, rs_borel(&i, s, Hypothesis::Verify)?.r));
                }
                check(pairs.iter().all(|(a, b)| a == b), true)
            },
        },
        Scenario {
            anchor: "reduction number is preserved by gin",
            description: "(x1*x2) in n=2: gin = (x1^2) and r_1 = 1 both ways",
            run: || {
                let i = crate::ideal::MonomialIdeal::from_exponents(crate::monomial::RingContext::char0(2)?, &[&[1, 1]])?;
                let opts = GinOptions::default();
                let g = gin_monomial(&i, &opts)?;
                let generic = rs_generic(&RationalPolyIdeal::from_monomial_ideal(&i), 1, &opts)?;
                check((g.to_string(), generic, rs_borel(&g, 1, Hypothesis::Verify)?.r), ("(x1^2)".to_string(), 1, 1))
            },
        },
    ]
}

pub fn run_all() -> Vec<ScenarioOutcome> {
    scenarios().iter().map(Scenario::run).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_scenario_passes() {
        for out in run_all() {
            assert!(out.passed, "{}: {}", out.anchor, out.detail);
        }
    }
}
