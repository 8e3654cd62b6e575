//! Seeded random inputs for the property and acceptance suites.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ordinal::Ordinal;
use crate::topology::{check_weight, FiniteSpace, Weight, WeightValue};

use super::expr::{Atom, AtomSource, Degree, Family, SpectrumExpr, Stage};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn point_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}

/// A random poset on `n` points, related only from lower to higher index.
pub fn random_space(rng: &mut impl Rng, n: usize, density: f64) -> FiniteSpace {
    let pairs: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let pairs: Vec<_> = pairs.into_iter().filter(|_| rng.gen_bool(density)).collect();
    FiniteSpace::from_relation(point_names(n), pairs)
        .expect("index-increasing relations are antisymmetric")
        .0
}

/// A random continuous weight with finite values in `1..=max`. With
/// `infinite`, whole connected components are set to ∞ at random.
pub fn random_weight(rng: &mut impl Rng, space: &FiniteSpace, max: u64, infinite: bool) -> Weight {
    let mut raw: Vec<WeightValue> = space.points().map(|_| WeightValue::Finite(rng.gen_range(1..=max))).collect();
    // Lower indices come first in the order, so one pass makes `raw` monotone.
    for y in space.points() {
        for &x in space.down_of(y) {
            raw[y] = raw[y].max(raw[x]);
        }
    }
    if infinite {
        for comp in components(space) {
            if rng.gen_bool(0.25) {
                for p in comp {
                    raw[p] = WeightValue::Infinite;
                }
            }
        }
    }
    check_weight(space, raw).expect("monotone by construction")
}

/// Connected components of the comparability graph.
pub fn components(space: &FiniteSpace) -> Vec<Vec<usize>> {
    let mut comp = vec![usize::MAX; space.len()];
    let mut out = Vec::new();
    for start in space.points() {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![];
        let mut stack = vec![start];
        comp[start] = id;
        while let Some(x) = stack.pop() {
            members.push(x);
            for &y in space.up_of(x).iter().chain(space.down_of(x)) {
                if comp[y] == usize::MAX {
                    comp[y] = id;
                    stack.push(y);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Every poset on `1..=max_points` points whose order is compatible with
/// the point indices. Each isomorphism class appears at least once.
pub fn poset_catalog(max_points: usize) -> Vec<FiniteSpace> {
    let mut out = Vec::new();
    for n in 1..=max_points {
        let pairs: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        for mask in 0u64..(1 << pairs.len()) {
            let chosen = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, p)| *p);
            let (space, closed) = FiniteSpace::from_relation(point_names(n), chosen).expect("antisymmetric");
            if !closed {
                out.push(space);
            }
        }
    }
    out
}

fn random_atom(rng: &mut impl Rng) -> SpectrumExpr {
    let n = rng.gen_range(1..=3);
    let space = random_space(rng, n, 0.5);
    let weight = random_weight(rng, &space, 3, false);
    SpectrumExpr::atom(Atom::new(space, weight, AtomSource::Inline).expect("weights at least 1"))
}

fn random_degree(rng: &mut impl Rng) -> Degree {
    *[Degree::index(), Degree::affine(2, 1), Degree::affine(1, 2)]
        .choose(rng)
        .expect("nonempty")
}

/// A compact expression of depth at most `depth`.
fn compact(rng: &mut impl Rng, depth: u32) -> SpectrumExpr {
    if depth == 0 {
        return random_atom(rng);
    }
    match rng.gen_range(0..9) {
        0 => random_atom(rng),
        1 => SpectrumExpr::Lazar(Stage::Fixed(Ordinal::nat(rng.gen_range(1..=2)))),
        2 => SpectrumExpr::Taylor(Stage::Fixed(Ordinal::nat(rng.gen_range(1..=2)))),
        3 => {
            let k = rng.gen_range(1..=3);
            SpectrumExpr::C0Sum((0..k).map(|_| compact(rng, depth - 1)).collect())
        }
        4 => SpectrumExpr::tensor(compact(rng, depth - 1), rng.gen_range(1..=3)),
        5 => SpectrumExpr::Unitize(Box::new(any(rng, depth - 1))),
        6 => SpectrumExpr::BiUnitize(Box::new(any(rng, depth - 1))),
        7 => SpectrumExpr::LazarJump(Box::new(Family::new(template(rng, depth - 1)))),
        _ => SpectrumExpr::TaylorJump(Box::new(Family::new(template(rng, depth - 1)))),
    }
}

/// A family body of depth at most `depth`.
fn template(rng: &mut impl Rng, depth: u32) -> SpectrumExpr {
    let inner = if depth == 0 { random_atom(rng) } else { compact(rng, depth - 1) };
    match rng.gen_range(0..4) {
        0 => inner,
        1 => SpectrumExpr::Unitize(Box::new(SpectrumExpr::Tensor(Box::new(inner), random_degree(rng)))),
        _ => SpectrumExpr::Tensor(Box::new(inner), random_degree(rng)),
    }
}

fn any(rng: &mut impl Rng, depth: u32) -> SpectrumExpr {
    if depth > 0 && rng.gen_bool(0.25) {
        SpectrumExpr::C0SumFamily(Box::new(Family::new(template(rng, depth - 1))))
    } else {
        compact(rng, depth)
    }
}

/// A random construction of depth at most `depth`, covering every node kind
/// with a closed form and small enough to truncate at fuel 6.
pub fn random_expr(rng: &mut impl Rng, depth: u32) -> SpectrumExpr {
    any(rng, depth)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes() {
        // Labeled posets with a linear extension fixed to the index order.
        let sizes: Vec<usize> = (1..=4).map(|n| poset_catalog(n).len()).collect();
        assert_eq!(sizes, [1, 3, 10, 50]);
    }

    #[test]
    fn generated_exprs_validate() {
        let mut r = rng(0);
        for _ in 0..200 {
            let e = random_expr(&mut r, 3);
            e.validate().unwrap_or_else(|err| panic!("{e}: {err}"));
        }
    }

    #[test]
    fn infinite_weights_sit_on_components() {
        let mut r = rng(7);
        for _ in 0..50 {
            let s = random_space(&mut r, 6, 0.3);
            let w = random_weight(&mut r, &s, 6, true);
            for c in components(&s) {
                let inf = c.iter().filter(|&&p| w.at(p) == WeightValue::Infinite).count();
                assert!(inf == 0 || inf == c.len());
            }
        }
    }
}
