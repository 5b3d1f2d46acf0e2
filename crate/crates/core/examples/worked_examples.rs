// Runs the built-in worked examples with known answers.

use borelred::scenarios::run_all;

pub fn run_example() -> borelred::Result<()> {
    let outcomes = run_all();
    for o in &outcomes {
        println!("[{}] {}: {}", if o.passed { "PASS" } else { "FAIL" }, o.description, o.detail);
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    if failed > 0 {
        return Err(borelred::Error::Inconclusive(format!("{failed} worked examples failed")));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> borelred::Result<()> {
    run_example()
}
