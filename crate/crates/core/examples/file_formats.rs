// The text and JSON ideal formats, and the diagnostics for bad input.

use borelred::parse::{ideal_to_json, ideal_to_text, parse_ideal};

pub fn run_example() -> borelred::Result<()> {
    let text = "# a comment\nring n=3 char=3\nideal: x1^3, x1*x2, x2^2\n";
    let ideal = parse_ideal(text)?;
    let json = ideal_to_json(&ideal).to_string();
    println!("text:\n{}json: {json}", ideal_to_text(&ideal));
    assert_eq!(parse_ideal(&json)?, ideal);

    for bad in [
        "ring n=3 char=0\nideal: x4\n",
        "ring n=3 char=4\nideal: x1\n",
        "ring n=2 char=0\nideal: x1^-2\n",
        r#"{"n":2,"char":0,"generators":[[1,0],[1]]}"#,
    ] {
        match parse_ideal(bad) {
            Ok(i) => println!("unexpectedly parsed {i}"),
            Err(e) => println!("{e}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> borelred::Result<()> {
    run_example()
}
