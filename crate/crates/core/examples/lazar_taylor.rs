//! Pedersen and Fell ranks of the Lazar and Taylor towers.
//!
//! cargo run --example lazar_taylor

use specrank::ordinal::Ordinal;
use specrank::spectra::{analyze, build_lazar, build_taylor, SpectrumExpr};

fn show<E: std::fmt::Display>(r: Result<impl std::fmt::Display, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("gap ({e})"),
    }
}

fn main() {
    for stage in ["1", "2", "w+1", "w*2+1"] {
        let alpha: Ordinal = stage.parse().expect("ordinal");
        for (name, e) in [
            ("L", build_lazar(&alpha).expect("successor stage")),
            ("K", build_taylor(&alpha).expect("successor stage")),
        ] {
            let a = analyze(&e).expect("both evaluators agree");
            println!(
                "{name}_{alpha:<8} pedersen {:<14} fell {}",
                show(a.pedersen_rank()),
                show(a.fell_rank())
            );
        }
    }

    // Amplifying by matrices of size d adds d to the Pedersen rank.
    let l2 = build_lazar(&Ordinal::nat(2)).expect("successor");
    for d in [1, 3, 7] {
        let a = analyze(&SpectrumExpr::tensor(l2.clone(), d)).expect("agree");
        println!("L_2 x M_{d}   pedersen {}", show(a.pedersen_rank()));
    }
}
