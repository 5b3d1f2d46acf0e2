// Borel specializations, the set P(m) of monomials specializing to `m`,
// and membership certificates from counting.

use borelred::borel::{borel_closure, membership_by_count, pset, pset_lower_bound, specializations, CountVerdict};
use borelred::monomial::{Monomial, RingContext};

pub fn run_example() -> borelred::Result<()> {
    let m = Monomial::new(vec![1, 0, 1]);
    let down: Vec<String> = specializations(&m).iter().map(ToString::to_string).collect();
    println!("specializations of {m}: {}", down.join(", "));

    let p = pset(&m);
    let up: Vec<String> = p.members().iter().map(ToString::to_string).collect();
    println!("P({m}) = {{{}}}, |P| = {}, lower bound {}", up.join(", "), p.cardinality(), pset_lower_bound(&m));

    // A monomial whose P-set cannot fit in R/I in its degree lies in I.
    let ideal = borel_closure([Monomial::new(vec![1, 1, 1])], RingContext::char0(3)?)?;
    for exps in [vec![3, 0, 0], vec![2, 1, 0], vec![1, 1, 1], vec![0, 0, 3]] {
        let m = Monomial::new(exps);
        let verdict = membership_by_count(&ideal, &m, false)?;
        let certified = verdict == CountVerdict::CertifiedIn;
        println!("{m} in {ideal}: certified by counting = {certified}, actual = {}", ideal.contains(&m)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> borelred::Result<()> {
    run_example()
}
