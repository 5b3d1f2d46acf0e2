// Macaulay representations, the lex-segment ideal with a given Hilbert
// function, and the closed formula for its reduction numbers.

use num::BigUint;

use borelred::hilbert::{HilbertTable, DEFAULT_HORIZON};
use borelred::lexmac::{
    conca_check, lex_ideal_from_hilbert, macaulay_growth, macaulay_rep, rs_lex_closed, DEFAULT_LEX_CAP,
};
use borelred::monomial::RingContext;
use borelred::corpus::square_of_first;
use borelred::groebner::GinOptions;

pub fn run_example() -> borelred::Result<()> {
    let a = BigUint::from(13u32);
    let rep = macaulay_rep(&a, 3);
    println!("13 in degree 3: {:?}, growth {}", rep.terms, macaulay_growth(&a, 3));

    let ideal = square_of_first(4, 2)?;
    let table = HilbertTable::from_ideal(&ideal, DEFAULT_HORIZON);
    let lex = lex_ideal_from_hilbert(&table, ideal.context(), DEFAULT_LEX_CAP)?;
    println!("I = {ideal}\nI^lex = {}\n{}", lex.ideal, lex.to_json());
    for s in ideal.krull_dim()..=ideal.n() {
        let conca = conca_check(&ideal, s, &GinOptions::default())?;
        println!("s = {s}: r_s(R/I) = {} <= r_s(R/I^lex) = {}", conca.rs, rs_lex_closed(&table, s)?);
    }

    // A supplied table must say whether its last value continues forever.
    let values = [1u32, 2, 2].map(BigUint::from).to_vec();
    let flagged = HilbertTable::from_values(values, true)?;
    let lex = lex_ideal_from_hilbert(&flagged, RingContext::char0(2)?, DEFAULT_LEX_CAP)?;
    println!("table 1, 2, 2, ... in two variables: {}", lex.ideal);
    Ok(())
}

#[allow(dead_code)]
fn main() -> borelred::Result<()> {
    run_example()
}
