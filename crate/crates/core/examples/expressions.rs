//! Parse and evaluate expressions over a and A.
//!
//!     cargo run --example expressions -- "(a + A)^4"

use ordo::{parse, ParseError};

fn main() {
    let inputs: Vec<String> = match std::env::args().nth(1) {
        Some(e) => vec![e],
        None => [
            "aA - Aa",
            "(a + A)^2",
            "(a + A)^4",
            "a† a a† a",
            "2 (A a)^3 - A^3 a^3",
            "(a - A",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect(),
    };
    for input in inputs {
        match parse(&input) {
            Ok(expr) => println!("{input:<22} = {}", expr.eval()),
            Err(err) => report(&input, &err),
        }
    }
}

fn report(input: &str, err: &ParseError) {
    let column = input[..err.offset()].chars().count();
    println!("{input:<22} ! {err}");
    println!("{:<22}   {}^", "", " ".repeat(column));
}
