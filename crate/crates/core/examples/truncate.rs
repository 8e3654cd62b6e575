//! Finite truncations of infinite constructions.
//!
//! cargo run --example truncate

use specrank::rank::rank_all;
use specrank::spectra::{parse_expr, truncate, Origin};
use specrank::topology::SpaceFile;

fn main() {
    let e = parse_expr("(taylorjump n -> (tensor (lazar 1) n))", false).expect("valid");
    let t = truncate(&e, 3).expect("small enough");
    let ranks = rank_all(&t.space, &t.weight);
    println!("{e} cut at 3: {} points", t.space.len());
    for (p, origin) in t.origins.iter().enumerate() {
        let kind = match origin {
            Origin::Interior { .. } => "interior",
            Origin::Adjoined { .. } => "adjoined",
        };
        let rank = ranks[p].rank.as_ref().map(ToString::to_string).unwrap_or_else(|| "gap".into());
        println!("  {:<10} w={:<3} rank {:<6} {kind}", t.space.name(p), t.weight.at(p).to_string(), rank);
    }

    // Interior ranks are exact; adjoined ones only bound the true value.
    let file = SpaceFile::from_space(&t.space, Some(&t.weight));
    println!("{}", serde_json::to_string(&file).expect("serializable"));
}
