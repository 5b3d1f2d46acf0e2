// Reduction numbers of a Borel-fixed ideal in characteristic 2: with
// respect to chosen variables, the minimum r_s, the spectrum over all
// variable reductions, and the strongly stable shortcut refusing to apply.

use borelred::borel::{is_borel_fixed, is_strongly_stable};
use borelred::corpus::prime_power_instance;
use borelred::reduction::{
    reduction_number_vars, reduction_spectrum, rs_borel, rs_strongly_stable, Hypothesis, VariableReduction,
};
use borelred::Error;

pub fn run_example() -> borelred::Result<()> {
    let ideal = prime_power_instance(2, &[1, 2], 4)?;
    println!(
        "I = {ideal}: Borel-fixed in char 2 = {}, in char 0 = {}, strongly stable = {}",
        is_borel_fixed(&ideal),
        is_borel_fixed(&ideal.with_char(0)?),
        is_strongly_stable(&ideal)
    );

    let v = VariableReduction::new([2, 3, 4], 4)?;
    println!("r with respect to (x2, x3, x4) = {}", reduction_number_vars(&ideal, &v)?.r);

    for s in ideal.krull_dim()..=ideal.n() {
        let best = rs_borel(&ideal, s, Hypothesis::Verify)?;
        let spectrum = reduction_spectrum(&ideal, s, Hypothesis::Verify)?;
        println!("s = {s}: r_s = {}, spectrum {:?}", best.r, spectrum.values());
    }

    match rs_strongly_stable(&ideal, 2) {
        Err(Error::HypothesisViolated(why)) => println!("shortcut refused: {why}"),
        other => println!("shortcut unexpectedly answered {other:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> borelred::Result<()> {
    run_example()
}
