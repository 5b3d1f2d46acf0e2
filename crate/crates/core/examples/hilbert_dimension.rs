// Hilbert function and Krull dimension of a monomial quotient, computed by
// enumeration, by inclusion-exclusion and from the Hilbert series numerator.

use borelred::hilbert::{hilbert, hilbert_inclusion_exclusion, HilbertNumerator, HilbertTable};
use borelred::parse::parse_ideal;

pub fn run_example() -> borelred::Result<()> {
    let ideal = parse_ideal("ring n=4 char=0\nideal: x1^2, x1*x2, x2^2\n")?;
    println!("I = {ideal}, dim R/I = {}", ideal.krull_dim());

    let numerator = HilbertNumerator::of(&ideal);
    println!("numerator of the Hilbert series: {:?}", numerator.coefficients());
    for t in 0..=6 {
        let h = hilbert(&ideal, t);
        assert_eq!(h, hilbert_inclusion_exclusion(&ideal, t));
        assert_eq!(h, numerator.eval(t));
        println!("  h({t}) = {h}");
    }

    let table = HilbertTable::from_ideal(&ideal, 8);
    println!("table: {}", table.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() -> borelred::Result<()> {
    run_example()
}
