//! Point ranks of a weighted finite T0 space.
//!
//! cargo run --example finite_ranks

use std::collections::BTreeMap;

use specrank::rank::{rank_all, space_rank};
use specrank::topology::{weight_by_name, FiniteSpace, WeightValue};

fn main() {
    let space = FiniteSpace::from_relation(
        ["bottom", "left", "right", "top"],
        [(0, 1), (0, 2), (1, 3), (2, 3)],
    )
    .expect("a partial order")
    .0;

    for (label, top) in [("bounded", WeightValue::Finite(3)), ("infinite top", WeightValue::Infinite)] {
        let table: BTreeMap<String, WeightValue> = [
            ("bottom", WeightValue::Finite(1)),
            ("left", WeightValue::Finite(2)),
            ("right", WeightValue::Finite(1)),
            ("top", top),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
        let w = weight_by_name(&space, &table).expect("monotone");
        println!("{label}:");
        for (x, r) in rank_all(&space, &w).iter().enumerate() {
            let show = |v: &Option<_>| v.as_ref().map(ToString::to_string).unwrap_or_else(|| "gap".into());
            println!("  {:<6} w={:<3} order {:<4} rank {}", space.name(x), r.weight, show(&r.order), show(&r.rank));
        }
        match space_rank(&space, &w).rank_sup() {
            Ok(r) => println!("  space rank {r}"),
            Err(g) => println!("  no space rank: {g}"),
        }
    }
}
