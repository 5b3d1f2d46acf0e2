// Exact Groebner bases over the rationals, generic initial ideals, and
// reduction numbers of polynomial ideals through generic linear forms.

use borelred::groebner::{
    buchberger, gin, hilbert_by_rank, initial_ideal, rs_generic, rs_linear_forms, variable_forms, GinOptions,
};
use borelred::monomial::TermOrder;
use borelred::parse::{parse_poly_ideal, parse_polynomial};

pub fn run_example() -> borelred::Result<()> {
    let ideal = parse_poly_ideal("ring n=3 char=0\nideal: x1*x2 - x3^2, x1^2 - x2*x3\n")?;
    println!("I = {ideal}");
    for g in buchberger(&ideal, TermOrder::Grevlex) {
        println!("  basis element {g}");
    }
    println!("in_grevlex(I) = {}", initial_ideal(&ideal, TermOrder::Grevlex));
    println!("in_lex(I) = {}", initial_ideal(&ideal, TermOrder::Lex));

    let opts = GinOptions::with_seed(7);
    let g = gin(&ideal, &opts)?;
    println!("gin(I) = {g}");
    let h: Vec<String> = (0..=6).map(|t| hilbert_by_rank(&ideal, t).to_string()).collect();
    println!("h by rank: {}", h.join(" "));

    println!("r_1 from generic forms = {}", rs_generic(&ideal, 1, &opts)?);
    let x3 = variable_forms(3, &[3]);
    println!("r with respect to x3 = {:?}", rs_linear_forms(&ideal, &x3));
    let form = parse_polynomial("2*x1 - x2 + 5*x3", 3)?;
    println!("r with respect to 2*x1 - x2 + 5*x3 = {:?}", rs_linear_forms(&ideal, &[form]));
    Ok(())
}

#[allow(dead_code)]
fn main() -> borelred::Result<()> {
    run_example()
}
