//! Fell-convergent sequences and the Fell compactification, by exhaustive
//! enumeration on finite spaces.
//!
//! In a finite space a sequence is, up to tail equivalence, determined by
//! the set of points it visits infinitely often. It converges to `y` iff that
//! set lies inside the minimal neighborhood of `y`, and accumulates at `y`
//! iff it meets it.

use std::fmt;

use thiserror::Error;

use crate::topology::{FiniteSpace, PointSet, SpaceMap};

/// Largest space the subset enumerations accept.
pub const MAX_ENUMERATION_POINTS: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FellError {
    #[error("a sequence class needs a nonempty visit set inside the space")]
    EmptyClass,
    #[error("{0} points is too many for exhaustive enumeration (limit {MAX_ENUMERATION_POINTS})")]
    TooLarge(usize),
    #[error("Fell-continuity and continuity disagree on a finite map: {0}")]
    CharacterizationMismatch(String),
}

/// The tail class of a sequence: its infinitely-often visit set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceClass<'a> {
    space: &'a FiniteSpace,
    visits: PointSet,
}

impl<'a> SequenceClass<'a> {
    pub fn new(space: &'a FiniteSpace, visits: PointSet) -> Result<Self, FellError> {
        if visits.is_empty() || visits.universe() != space.len() {
            return Err(FellError::EmptyClass);
        }
        Ok(SequenceClass { space, visits })
    }

    pub fn constant(space: &'a FiniteSpace, x: usize) -> Self {
        SequenceClass {
            space,
            visits: PointSet::from_ids(space.len(), [x]),
        }
    }

    pub fn visits(&self) -> &PointSet {
        &self.visits
    }

    /// Every nonempty visit set.
    pub fn all(space: &'a FiniteSpace) -> Result<Vec<SequenceClass<'a>>, FellError> {
        if space.len() > MAX_ENUMERATION_POINTS {
            return Err(FellError::TooLarge(space.len()));
        }
        Ok((1u64..1 << space.len())
            .map(|m| SequenceClass {
                space,
                visits: PointSet::from_mask(space.len(), m),
            })
            .collect())
    }
}

/// `(limits, accumulation points)` of a sequence class.
pub fn limits_and_accumulation(q: &SequenceClass<'_>) -> (PointSet, PointSet) {
    let s = q.space;
    let mut limits = PointSet::empty(s.len());
    let mut acc = PointSet::empty(s.len());
    for y in s.points() {
        let u = s.minimal_neighborhood(y);
        if q.visits.is_subset(&u) {
            limits.insert(y);
        }
        if q.visits.intersects(&u) {
            acc.insert(y);
        }
    }
    (limits, acc)
}

/// The limit set, when the class is Fell-convergent.
pub fn is_fell_convergent(q: &SequenceClass<'_>) -> Option<PointSet> {
    let (limits, acc) = limits_and_accumulation(q);
    (limits == acc).then_some(limits)
}

/// A set of closed subsets of one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFamily {
    members: Vec<PointSet>,
}

impl ClosedFamily {
    fn new(space: &FiniteSpace, mut members: Vec<PointSet>) -> Self {
        debug_assert!(members.iter().all(|m| space.is_closed(m)));
        members.sort_by_key(|m| {
            let mut v: Vec<String> = space.names_of(m);
            v.sort();
            (v.len(), v)
        });
        members.dedup();
        ClosedFamily { members }
    }

    pub fn members(&self) -> &[PointSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, c: &PointSet) -> bool {
        self.members.contains(c)
    }

    /// Members as sorted name lists.
    pub fn named(&self, space: &FiniteSpace) -> Vec<Vec<String>> {
        self.members.iter().map(|m| space.names_of(m)).collect()
    }
}

/// The closure of the canonical copy `x ↦ cl{x}` inside the space of closed
/// sets, computed as the family of limit sets of Fell-convergent classes.
pub fn fell_compactification(space: &FiniteSpace) -> Result<ClosedFamily, FellError> {
    let members = SequenceClass::all(space)?
        .iter()
        .filter_map(is_fell_convergent)
        .collect();
    Ok(ClosedFamily::new(space, members))
}

/// Outcome of a Fell-continuity check, with a violating class if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FellContinuity {
    pub holds: bool,
    pub certificate: Option<PointSet>,
}

/// `f` maps every Fell-convergent class with limit set `C` to a
/// Fell-convergent class with limit set `cl f(C)`. On finite spaces this must
/// agree with continuity; a disagreement is reported as an error.
pub fn is_fell_continuous(f: &SpaceMap<'_>) -> Result<FellContinuity, FellError> {
    let mut certificate = None;
    for q in SequenceClass::all(f.source)? {
        let Some(limit) = is_fell_convergent(&q) else {
            continue;
        };
        let image = SequenceClass {
            space: f.target,
            visits: f.image(q.visits()),
        };
        let expected = f.target.closure(&f.image(&limit));
        if is_fell_convergent(&image).as_ref() != Some(&expected) {
            certificate = Some(q.visits.clone());
            break;
        }
    }
    let holds = certificate.is_none();
    if holds != f.is_continuous() {
        return Err(FellError::CharacterizationMismatch(format!(
            "fell-continuous = {holds}, continuous = {}",
            !holds
        )));
    }
    Ok(FellContinuity { holds, certificate })
}

/// A subbasic open set of the Fell topology on closed sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subbasic {
    /// `{C : C ∩ K = ∅}` for compact `K` (every subset of a finite space).
    Misses(PointSet),
    /// `{C : C ∩ U ≠ ∅}` for open `U`.
    Hits(PointSet),
}

impl Subbasic {
    pub fn contains(&self, c: &PointSet) -> bool {
        match self {
            Subbasic::Misses(k) => !c.intersects(k),
            Subbasic::Hits(u) => c.intersects(u),
        }
    }
}

impl fmt::Display for Subbasic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subbasic::Misses(k) => write!(f, "misses{k:?}"),
            Subbasic::Hits(u) => write!(f, "hits{u:?}"),
        }
    }
}

/// Finds subbasic opens `A ∋ c1`, `B ∋ c2` with no closed set in both.
pub fn separate(space: &FiniteSpace, c1: &PointSet, c2: &PointSet) -> Result<Option<(Subbasic, Subbasic)>, FellError> {
    if space.len() > MAX_ENUMERATION_POINTS {
        return Err(FellError::TooLarge(space.len()));
    }
    let subsets: Vec<PointSet> = (0u64..1 << space.len())
        .map(|m| PointSet::from_mask(space.len(), m))
        .collect();
    let closed: Vec<&PointSet> = subsets.iter().filter(|s| space.is_closed(s)).collect();
    let mut subbasics: Vec<Subbasic> = subsets.iter().cloned().map(Subbasic::Misses).collect();
    subbasics.extend(
        subsets
            .iter()
            .filter(|s| space.is_open(s))
            .cloned()
            .map(Subbasic::Hits),
    );
    for a in subbasics.iter().filter(|a| a.contains(c1) && !a.contains(c2)) {
        for b in subbasics.iter().filter(|b| b.contains(c2) && !b.contains(c1)) {
            if closed.iter().all(|c| !(a.contains(c) && b.contains(c))) {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sierpinski_sequences() {
        let s = FiniteSpace::sierpinski();
        let q = SequenceClass::new(&s, s.set_of(&["o"]).unwrap()).unwrap();
        let (l, a) = limits_and_accumulation(&q);
        assert_eq!(s.names_of(&l), ["c", "o"]);
        assert_eq!(s.names_of(&a), ["c", "o"]);
        assert_eq!(s.names_of(&is_fell_convergent(&q).unwrap()), ["c", "o"]);
    }

    #[test]
    fn discrete_alternating_sequence() {
        let d = FiniteSpace::discrete(["a", "b"]).unwrap();
        let q = SequenceClass::new(&d, PointSet::full(2)).unwrap();
        let (l, a) = limits_and_accumulation(&q);
        assert!(l.is_empty());
        assert_eq!(d.names_of(&a), ["a", "b"]);
        assert!(is_fell_convergent(&q).is_none());
    }

    #[test]
    fn constant_sequences_converge_to_point_closures() {
        let c = FiniteSpace::chain(["a", "b", "c"]).unwrap();
        for x in c.points() {
            let q = SequenceClass::constant(&c, x);
            let (l, a) = limits_and_accumulation(&q);
            assert_eq!(l, c.closure_of_point(x));
            assert_eq!(a, l);
        }
        assert!(SequenceClass::new(&c, PointSet::empty(3)).is_err());
    }

    #[test]
    fn compactification_examples() {
        let s = FiniteSpace::sierpinski();
        let phi = fell_compactification(&s).unwrap();
        assert_eq!(phi.named(&s), vec![vec!["c"], vec!["c", "o"]]);
        let d = FiniteSpace::discrete(["a", "b"]).unwrap();
        assert_eq!(fell_compactification(&d).unwrap().named(&d), vec![vec!["a"], vec!["b"]]);
        let p = FiniteSpace::discrete(["x"]).unwrap();
        assert_eq!(fell_compactification(&p).unwrap().named(&p), vec![vec!["x"]]);
    }

    #[test]
    fn fell_continuity_examples() {
        let s = FiniteSpace::sierpinski();
        let id = SpaceMap::new(&s, &s, vec![0, 1]).unwrap();
        assert!(is_fell_continuous(&id).unwrap().holds);

        let pt = FiniteSpace::discrete(["p"]).unwrap();
        let collapse = SpaceMap::new(&s, &pt, vec![0, 0]).unwrap();
        assert!(is_fell_continuous(&collapse).unwrap().holds);

        let d = FiniteSpace::discrete(["a", "b"]).unwrap();
        let f = SpaceMap::new(&d, &s, vec![0, 1]).unwrap();
        assert!(is_fell_continuous(&f).unwrap().holds);

        // o ↦ c, c ↦ o reverses the order.
        let swap = SpaceMap::new(&s, &s, vec![1, 0]).unwrap();
        let r = is_fell_continuous(&swap).unwrap();
        assert!(!r.holds);
        assert!(r.certificate.is_some());
    }

    #[test]
    fn sierpinski_members_are_separated() {
        let s = FiniteSpace::sierpinski();
        let phi = fell_compactification(&s).unwrap();
        let (a, b) = separate(&s, &phi.members()[0], &phi.members()[1]).unwrap().unwrap();
        assert!(a.contains(&phi.members()[0]) && b.contains(&phi.members()[1]));
    }
}
