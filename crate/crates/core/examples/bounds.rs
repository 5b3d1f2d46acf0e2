// Upper bounds for the reduction number of the lex-segment ideal, compared
// with the value itself, and the Hilbert-function inequality in terms of
// the colength `e`.

use borelred::corpus::{prime_power_instance, pure_power_instance, square_of_first};
use borelred::groebner::GinOptions;
use borelred::lexmac::{lex_bound1, lex_bound2, lex_reduction_number, rvv_check};
use borelred::reduction::{colength_mod_reduction, VariableReduction};

pub fn run_example() -> borelred::Result<()> {
    let opts = GinOptions::default();
    let ideals = [
        ("(x1^2, x2^4), char 2", prime_power_instance(2, &[1, 2], 4)?),
        ("(x1, x2)^2", square_of_first(4, 2)?),
        ("(x1^4)", pure_power_instance(4)),
    ];
    for (label, ideal) in ideals {
        let d = ideal.krull_dim();
        let e = colength_mod_reduction(&ideal, &VariableReduction::last(ideal.n(), d))?;
        let b = lex_bound2(&ideal, &opts)?;
        let rvv = rvv_check(&ideal, 20)?;
        println!(
            "{label}: r(R/I^lex) = {}, d(e-2)+1 = {}, (i) = {}, (ii) = {:?}, inequality holds to t=20: {}",
            lex_reduction_number(&ideal)?,
            lex_bound1(d, &e),
            b.bound_i,
            b.bound_ii.map(|v| v.to_string()),
            rvv.holds()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> borelred::Result<()> {
    run_example()
}
