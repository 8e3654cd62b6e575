//! Local sections on finite spaces: pairs `(v, U)` with `U` open and `v` a
//! continuous weight on `U` with `1 ≤ v ≤ w`.

use crate::ordinal::ExtOrdinal;
use crate::rank::point_rank;
use crate::topology::{check_weight, FiniteSpace, PointId, PointSet, Weight, WeightValue};

/// Values above every finite weight are capped here; a section never gains
/// anything from exceeding the largest finite weight by more than one.
fn cap(w: &Weight) -> u64 {
    w.values().iter().filter_map(|v| v.finite()).max().unwrap_or(0) + 1
}

/// Calls `f` on every continuous `v` on `space` with `lo(y) ≤ v(y) ≤ w(y)`;
/// stops early when `f` returns `false`.
fn for_each_subweight(
    space: &FiniteSpace,
    w: &Weight,
    lo: &dyn Fn(PointId) -> u64,
    f: &mut dyn FnMut(&Weight) -> bool,
) {
    let top = cap(w);
    let hi: Vec<u64> = space
        .points()
        .map(|p| w.at(p).finite().unwrap_or(top))
        .collect();
    let mut v: Vec<u64> = space.points().map(lo).collect();
    if space.points().any(|p| v[p] > hi[p]) {
        return;
    }
    loop {
        let raw: Vec<WeightValue> = v.iter().map(|&k| WeightValue::Finite(k)).collect();
        if let Ok(vw) = check_weight(space, raw) {
            if !f(&vw) {
                return;
            }
        }
        // Odometer step.
        let mut i = 0;
        loop {
            if i == v.len() {
                return;
            }
            if v[i] < hi[i] {
                v[i] += 1;
                break;
            }
            v[i] = lo(i);
            i += 1;
        }
    }
}

/// The least rank at `x` over all local sections around `x`. With
/// `early_exit`, stops at the lower bound 1 (every section has `v(x) ≥ 1`).
pub fn local_section_rank(space: &FiniteSpace, w: &Weight, x: PointId, early_exit: bool) -> ExtOrdinal {
    let floor = ExtOrdinal::Finite(1u64.into());
    let mut best = ExtOrdinal::Infinity;
    let mut opens = vec![space.minimal_neighborhood(x)];
    if !early_exit {
        opens.extend(space.open_sets().into_iter().filter(|u| u.contains(x)));
    }
    'outer: for u in opens {
        let (sub, keep) = space.subspace(&u);
        let local = keep.iter().position(|&p| p == x).expect("x in U");
        let wu = w.restrict(&keep);
        let mut found = false;
        for_each_subweight(&sub, &wu, &|_| 1, &mut |v| {
            let r = point_rank(&sub, v, local).rank.unwrap_or(ExtOrdinal::Infinity);
            if r < best {
                best = r;
            }
            found = early_exit && best == floor;
            !found
        });
        if found {
            break 'outer;
        }
    }
    best
}

/// The least rank at `x` of a globally defined continuous `v ≤ w` with
/// `v(x) ≥ 1` (zero allowed elsewhere).
pub fn global_subweight_rank(space: &FiniteSpace, w: &Weight, x: PointId) -> ExtOrdinal {
    let mut best = ExtOrdinal::Infinity;
    for_each_subweight(space, w, &|p| u64::from(p == x), &mut |v| {
        let r = point_rank(space, v, x).rank.unwrap_or(ExtOrdinal::Infinity);
        best = best.clone().min(r);
        true
    });
    best
}

/// Fell rank of every point of a finite weighted space.
pub fn fell_ranks(space: &FiniteSpace, w: &Weight) -> Vec<ExtOrdinal> {
    space
        .points()
        .map(|x| local_section_rank(space, w, x, true))
        .collect()
}

/// Points of Fell rank at most `beta`.
pub fn fell_ideal_set(space: &FiniteSpace, ranks: &[ExtOrdinal], beta: &ExtOrdinal) -> PointSet {
    PointSet::from_ids(space.len(), space.points().filter(|&p| ranks[p] <= *beta))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_section_gives_one() {
        let s = FiniteSpace::sierpinski();
        let w = check_weight(&s, vec![WeightValue::Finite(2), WeightValue::Infinite]).unwrap();
        for x in s.points() {
            assert_eq!(local_section_rank(&s, &w, x, true), ExtOrdinal::Finite(1u64.into()));
            assert_eq!(local_section_rank(&s, &w, x, false), ExtOrdinal::Finite(1u64.into()));
            assert_eq!(global_subweight_rank(&s, &w, x), ExtOrdinal::Finite(1u64.into()));
        }
        assert_eq!(fell_ranks(&s, &w).len(), 2);
    }
}
