//! The construction language: parsing, printing and error offsets.
//!
//! cargo run --example dsl

use specrank::spectra::{analyze, parse_expr};

fn main() {
    let inputs = [
        "(lazar w+1)",
        "(tensor (taylor 2) 3)",
        "(c0sum n -> (unitize (tensor (lazar 1) 2n+1)))",
        "(lazarjump n -> (tensor (lazar 1) n))",
        "(lazarjump n -> (lazar 1))",
        "(biunitize (lazar w[n]))",
        "(tensor (lazar 1) 0)",
        "(frob 1)",
    ];
    for text in inputs {
        match parse_expr(text, false) {
            Err(e) => println!("{text:<48} rejected: {e}"),
            Ok(e) => match analyze(&e) {
                Ok(a) => match (a.pedersen_rank(), a.fell_rank()) {
                    (Ok(p), Ok(f)) => println!("{e:<48} pedersen {p}, fell {f}"),
                    _ => println!("{e:<48} {}", a.gap().map(|g| g.to_string()).unwrap_or_default()),
                },
                Err(err) => println!("{e:<48} {err}"),
            },
        }
    }
}
