//! Cantor normal form arithmetic below ε₀.
//!
//! cargo run --example ordinals

use specrank::ordinal::{ExtOrdinal, Ordinal};

fn main() {
    let a: Ordinal = "w^2*3 + w + 4".parse().expect("normal form");
    let b: Ordinal = "w^2 + 1".parse().expect("normal form");

    println!("a         = {a}");
    println!("b         = {b}");
    // Addition absorbs the lower terms of the left summand.
    println!("a + b     = {}", a.add(&b));
    println!("b + a     = {}", b.add(&a));
    println!("w * a     = {}", a.omega_times());
    println!("1 + a     = {}", a.one_plus());

    let lambda: Ordinal = "w^w".parse().expect("normal form");
    let seq: Vec<String> = (0..4).map(|n| lambda.canonical_term(n).expect("limit").to_string()).collect();
    println!("{lambda}[n]    = {}", seq.join(", "));

    // Non-normal literals need normalization.
    println!("parse '1 + w' strict     -> {:?}", Ordinal::parse_with("1 + w", false).err().map(|e| e.to_string()));
    println!("parse '1 + w' normalized -> {}", Ordinal::parse_with("1 + w", true).expect("sums"));

    let inf = ExtOrdinal::Infinity;
    println!("inf + a   = {}", inf.add(&a.into()));
}
