//! Subhomogeneity and type-I verdicts along a range of bounds.
//!
//! cargo run --example classify

use specrank::ordinal::Ordinal;
use specrank::spectra::{classify, parse_expr};

fn main() {
    let e = parse_expr("(c0sum (lazar 2) (taylor 1))", false).expect("valid expression");
    println!("{e}");
    for beta in ["w", "w+1", "w*2", "w*2+1", "w*2+2"] {
        let beta: Ordinal = beta.parse().expect("ordinal");
        let c = classify(&e, &beta).expect("ranks exist");
        println!(
            "  beta {:<8} subhomogeneous {:<5} type I {}",
            beta.to_string(),
            c.is_subhomogeneous().expect("no gap"),
            c.is_type_one().expect("no gap")
        );
    }

    // For a finite space the ideal of points of small Fell rank is explicit.
    let atom = parse_expr(r#"(atom {"points":["a","b"],"leq":[["a","b"]],"weight":{"a":1,"b":2}})"#, false)
        .expect("inline atom");
    let c = classify(&atom, &Ordinal::one()).expect("finite");
    if let Some((names, _)) = c.fell_ideal().expect("open") {
        println!("{atom}\n  Fell rank <= 1 on {names:?}");
    }
}
