//! Finite T₀ spaces presented by their specialization order.
//!
//! `a ≤ b` means `a ∈ cl{b}`. Open sets are the up-sets of this order and
//! closed sets the down-sets, so the minimal neighborhood of a point is its
//! up-closure.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type PointId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TopologyError {
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("duplicate point name `{0}`")]
    DuplicatePoint(String),
    #[error("not T0: `{0}` and `{1}` specialize to each other")]
    NotT0(String, String),
    #[error("weight is not continuous: {{w >= {bound}}} contains `{lower}` but not `{upper}` although `{lower}` <= `{upper}`")]
    Discontinuous {
        bound: u64,
        lower: String,
        upper: String,
    },
    #[error("weight has no value for point `{0}`")]
    MissingWeight(String),
    #[error("weight table has {got} entries for {expected} points")]
    WeightArity { expected: usize, got: usize },
    #[error("invalid weight value `{0}`")]
    BadWeight(String),
    #[error("space file: {0}")]
    File(String),
}

/// A set of points of one finite space.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet(FixedBitSet);

impl PointSet {
    pub fn empty(universe: usize) -> Self {
        PointSet(FixedBitSet::with_capacity(universe))
    }

    pub fn full(universe: usize) -> Self {
        let mut s = FixedBitSet::with_capacity(universe);
        s.insert_range(..);
        PointSet(s)
    }

    pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = PointId>) -> Self {
        let mut s = Self::empty(universe);
        for i in ids {
            s.insert(i);
        }
        s
    }

    /// Decodes a bitmask over the first 64 points.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        Self::from_ids(universe, (0..universe.min(64)).filter(|i| mask >> i & 1 == 1))
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, p: PointId) {
        self.0.insert(p);
    }

    pub fn remove(&mut self, p: PointId) {
        self.0.set(p, false);
    }

    pub fn contains(&self, p: PointId) -> bool {
        self.0.contains(p)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = PointId> + '_ {
        self.0.ones()
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn intersects(&self, other: &PointSet) -> bool {
        !self.0.is_disjoint(&other.0)
    }

    pub fn union_with(&mut self, other: &PointSet) {
        self.0.union_with(&other.0);
    }

    pub fn intersect_with(&mut self, other: &PointSet) {
        self.0.intersect_with(&other.0);
    }

    pub fn complement(&self) -> PointSet {
        let mut c = self.0.clone();
        c.toggle_range(..);
        PointSet(c)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Value of a weight function: a natural number or ∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeightValue {
    Finite(u64),
    Infinite,
}

impl WeightValue {
    pub fn finite(self) -> Option<u64> {
        match self {
            WeightValue::Finite(k) => Some(k),
            WeightValue::Infinite => None,
        }
    }

    pub fn scale(self, d: u64) -> WeightValue {
        match self {
            WeightValue::Finite(k) => WeightValue::Finite(k * d),
            WeightValue::Infinite => WeightValue::Infinite,
        }
    }
}

impl fmt::Display for WeightValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightValue::Finite(k) => write!(f, "{k}"),
            WeightValue::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for WeightValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            WeightValue::Finite(k) => s.serialize_u64(*k),
            WeightValue::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for WeightValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(k) => Ok(WeightValue::Finite(k)),
            Raw::Text(t) if t == "inf" || t == "∞" => Ok(WeightValue::Infinite),
            Raw::Text(t) => Err(serde::de::Error::custom(format!(
                "weight must be a natural number or \"inf\", got {t:?}"
            ))),
        }
    }
}

/// A finite T₀ space. Relations are stored as sorted up- and down-closures
/// (each including the point itself).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    names: Vec<String>,
    up: Vec<Vec<PointId>>,
    down: Vec<Vec<PointId>>,
}

impl FiniteSpace {
    pub fn empty() -> Self {
        FiniteSpace {
            names: Vec::new(),
            up: Vec::new(),
            down: Vec::new(),
        }
    }

    pub fn discrete<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, TopologyError> {
        Self::from_relation(names, std::iter::empty()).map(|(s, _)| s)
    }

    /// `c ≤ o`: the open point `o` specializes to the closed point `c`.
    pub fn sierpinski() -> Self {
        Self::from_relation(["c", "o"], [(0, 1)]).expect("valid").0
    }

    /// Points `names[0] ≤ names[1] ≤ …`.
    pub fn chain<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, TopologyError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let pairs: Vec<_> = (1..names.len()).map(|i| (i - 1, i)).collect();
        Self::from_relation(names, pairs).map(|(s, _)| s)
    }

    /// Builds a space from named points and `a ≤ b` pairs given by index.
    /// Reflexive and transitive closure is applied; the returned flag reports
    /// whether the closure added pairs beyond the reflexive ones.
    pub fn from_relation<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        pairs: impl IntoIterator<Item = (PointId, PointId)>,
    ) -> Result<(Self, bool), TopologyError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let n = names.len();
        let mut seen = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if seen.insert(name.as_str(), i).is_some() {
                return Err(TopologyError::DuplicatePoint(name.clone()));
            }
        }
        let mut succ: Vec<Vec<PointId>> = vec![Vec::new(); n];
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(TopologyError::UnknownPoint(format!("#{}", a.max(b))));
            }
            if a != b {
                succ[a].push(b);
            }
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
        }
        let distinct_given: usize = succ.iter().map(Vec::len).sum();
        let mut up = Vec::with_capacity(n);
        for x in 0..n {
            let mut mark = vec![false; n];
            let mut stack = vec![x];
            mark[x] = true;
            while let Some(y) = stack.pop() {
                for &z in &succ[y] {
                    if !mark[z] {
                        mark[z] = true;
                        stack.push(z);
                    }
                }
            }
            up.push((0..n).filter(|&z| mark[z]).collect::<Vec<_>>());
        }
        let mut down: Vec<Vec<PointId>> = vec![Vec::new(); n];
        for (x, ups) in up.iter().enumerate() {
            for &y in ups {
                down[y].push(x);
            }
        }
        for x in 0..n {
            for &y in &up[x] {
                if y != x && up[y].binary_search(&x).is_ok() {
                    return Err(TopologyError::NotT0(names[x].clone(), names[y].clone()));
                }
            }
        }
        let closed_pairs: usize = up.iter().map(|u| u.len() - 1).sum();
        let space = FiniteSpace { names, up, down };
        Ok((space, closed_pairs > distinct_given))
    }

    /// Disjoint union; point names get `prefix_i` prepended.
    pub fn disjoint_union(parts: &[(String, &FiniteSpace)]) -> FiniteSpace {
        let mut out = FiniteSpace::empty();
        for (prefix, s) in parts {
            let offset = out.names.len();
            for (i, name) in s.names.iter().enumerate() {
                out.names.push(format!("{prefix}{name}"));
                out.up.push(s.up[i].iter().map(|p| p + offset).collect());
                out.down.push(s.down[i].iter().map(|p| p + offset).collect());
            }
        }
        out
    }

    /// Adds a point related to nothing; returns its id.
    pub fn push_isolated(&mut self, name: impl Into<String>) -> PointId {
        let id = self.names.len();
        self.names.push(name.into());
        self.up.push(vec![id]);
        self.down.push(vec![id]);
        id
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn points(&self) -> std::ops::Range<PointId> {
        0..self.names.len()
    }

    pub fn name(&self, p: PointId) -> &str {
        &self.names[p]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn point(&self, name: &str) -> Result<PointId, TopologyError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| TopologyError::UnknownPoint(name.to_string()))
    }

    pub fn set_of(&self, names: &[&str]) -> Result<PointSet, TopologyError> {
        let mut s = PointSet::empty(self.len());
        for n in names {
            s.insert(self.point(n)?);
        }
        Ok(s)
    }

    pub fn names_of(&self, s: &PointSet) -> Vec<String> {
        let mut v: Vec<String> = s.iter().map(|p| self.names[p].clone()).collect();
        v.sort();
        v
    }

    /// `a ≤ b`, i.e. `a ∈ cl{b}`.
    pub fn leq(&self, a: PointId, b: PointId) -> bool {
        self.up[a].binary_search(&b).is_ok()
    }

    /// Points above `x`, including `x`.
    pub fn up_of(&self, x: PointId) -> &[PointId] {
        &self.up[x]
    }

    /// Points below `x`, including `x`.
    pub fn down_of(&self, x: PointId) -> &[PointId] {
        &self.down[x]
    }

    /// The smallest open set containing `x`.
    pub fn minimal_neighborhood(&self, x: PointId) -> PointSet {
        PointSet::from_ids(self.len(), self.up[x].iter().copied())
    }

    pub fn up_closure(&self, a: &PointSet) -> PointSet {
        let mut out = PointSet::empty(self.len());
        for x in a.iter() {
            for &y in &self.up[x] {
                out.insert(y);
            }
        }
        out
    }

    /// Smallest closed (down-closed) superset.
    pub fn closure(&self, a: &PointSet) -> PointSet {
        let mut out = PointSet::empty(self.len());
        for x in a.iter() {
            for &y in &self.down[x] {
                out.insert(y);
            }
        }
        out
    }

    pub fn closure_of_point(&self, x: PointId) -> PointSet {
        PointSet::from_ids(self.len(), self.down[x].iter().copied())
    }

    pub fn is_open(&self, a: &PointSet) -> bool {
        self.up_closure(a) == *a
    }

    pub fn is_closed(&self, a: &PointSet) -> bool {
        self.closure(a) == *a
    }

    /// Dense iff `a` meets every minimal neighborhood, i.e. every nonempty open set.
    pub fn is_dense(&self, a: &PointSet) -> bool {
        self.points()
            .all(|x| self.up[x].iter().any(|&y| a.contains(y)))
    }

    /// `a = O ∩ C` for some open `O` and closed `C`; equivalently `a` is
    /// order-convex.
    pub fn is_locally_closed(&self, a: &PointSet) -> bool {
        let mut hull = self.up_closure(a);
        hull.intersect_with(&self.closure(a));
        hull == *a
    }

    /// All open sets, by enumeration of subsets. Only for small spaces.
    pub fn open_sets(&self) -> Vec<PointSet> {
        assert!(self.len() <= 20, "open-set enumeration is exponential");
        (0u64..1 << self.len())
            .map(|m| PointSet::from_mask(self.len(), m))
            .filter(|s| self.is_open(s))
            .collect()
    }

    /// The subspace on `a`, with the map from new ids to old ids.
    pub fn subspace(&self, a: &PointSet) -> (FiniteSpace, Vec<PointId>) {
        let keep: Vec<PointId> = a.iter().collect();
        let mut index = vec![usize::MAX; self.len()];
        for (i, &p) in keep.iter().enumerate() {
            index[p] = i;
        }
        let restrict = |v: &Vec<PointId>| -> Vec<PointId> {
            v.iter()
                .filter(|&&q| index[q] != usize::MAX)
                .map(|&q| index[q])
                .collect()
        };
        let sub = FiniteSpace {
            names: keep.iter().map(|&p| self.names[p].clone()).collect(),
            up: keep.iter().map(|&p| restrict(&self.up[p])).collect(),
            down: keep.iter().map(|&p| restrict(&self.down[p])).collect(),
        };
        (sub, keep)
    }

    /// Non-reflexive `a ≤ b` pairs, sorted.
    pub fn relation_pairs(&self) -> Vec<(PointId, PointId)> {
        let mut out = Vec::new();
        for x in self.points() {
            for &y in &self.up[x] {
                if y != x {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// A validated weight function: `{w ≥ n}` is open for every `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    values: Vec<WeightValue>,
}

impl Weight {
    pub fn values(&self) -> &[WeightValue] {
        &self.values
    }

    pub fn at(&self, p: PointId) -> WeightValue {
        self.values[p]
    }

    pub fn max(&self) -> Option<WeightValue> {
        self.values.iter().copied().max()
    }

    pub fn constant(space: &FiniteSpace, k: u64) -> Weight {
        Weight {
            values: vec![WeightValue::Finite(k); space.len()],
        }
    }

    pub fn scaled(&self, d: u64) -> Weight {
        Weight {
            values: self.values.iter().map(|w| w.scale(d)).collect(),
        }
    }

    pub fn restrict(&self, keep: &[PointId]) -> Weight {
        Weight {
            values: keep.iter().map(|&p| self.values[p]).collect(),
        }
    }
}

/// Checks continuity for the Jacobson topology on ℕ ∪ {∞}: for every bound
/// `n`, `{w ≥ n}` must be up-closed. The witness reports the failing bound
/// `n = w(lower)` and a pair `lower ≤ upper` with `w(upper) < n`.
pub fn check_weight(space: &FiniteSpace, raw: Vec<WeightValue>) -> Result<Weight, TopologyError> {
    if raw.len() != space.len() {
        return Err(TopologyError::WeightArity {
            expected: space.len(),
            got: raw.len(),
        });
    }
    for x in space.points() {
        for &y in space.up_of(x) {
            if raw[y] < raw[x] {
                let bound = match raw[x] {
                    WeightValue::Finite(k) => k,
                    // {w ≥ n} for n above every finite value of w(y).
                    WeightValue::Infinite => raw[y].finite().unwrap_or(0) + 1,
                };
                return Err(TopologyError::Discontinuous {
                    bound,
                    lower: space.name(x).to_string(),
                    upper: space.name(y).to_string(),
                });
            }
        }
    }
    Ok(Weight { values: raw })
}

/// A weight table keyed by point name.
pub fn weight_by_name(
    space: &FiniteSpace,
    table: &BTreeMap<String, WeightValue>,
) -> Result<Weight, TopologyError> {
    for k in table.keys() {
        space.point(k)?;
    }
    let raw = space
        .names()
        .iter()
        .map(|n| {
            table
                .get(n)
                .copied()
                .ok_or_else(|| TopologyError::MissingWeight(n.clone()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    check_weight(space, raw)
}

/// A total map between finite spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceMap<'a> {
    pub source: &'a FiniteSpace,
    pub target: &'a FiniteSpace,
    pub assignment: Vec<PointId>,
}

impl<'a> SpaceMap<'a> {
    pub fn new(
        source: &'a FiniteSpace,
        target: &'a FiniteSpace,
        assignment: Vec<PointId>,
    ) -> Result<Self, TopologyError> {
        if assignment.len() != source.len() {
            return Err(TopologyError::File(format!(
                "map assigns {} points, source has {}",
                assignment.len(),
                source.len()
            )));
        }
        if let Some(&bad) = assignment.iter().find(|&&p| p >= target.len()) {
            return Err(TopologyError::UnknownPoint(format!("#{bad}")));
        }
        Ok(SpaceMap {
            source,
            target,
            assignment,
        })
    }

    pub fn apply(&self, x: PointId) -> PointId {
        self.assignment[x]
    }

    pub fn image(&self, a: &PointSet) -> PointSet {
        PointSet::from_ids(self.target.len(), a.iter().map(|x| self.assignment[x]))
    }

    pub fn preimage(&self, b: &PointSet) -> PointSet {
        PointSet::from_ids(
            self.source.len(),
            self.source.points().filter(|&x| b.contains(self.assignment[x])),
        )
    }

    /// Continuity for Alexandrov topologies is monotonicity of the map.
    pub fn is_continuous(&self) -> bool {
        self.source.points().all(|x| {
            self.source
                .up_of(x)
                .iter()
                .all(|&y| self.target.leq(self.apply(x), self.apply(y)))
        })
    }

    /// Every map `source → target`. Only for small spaces.
    pub fn all(source: &'a FiniteSpace, target: &'a FiniteSpace) -> Vec<SpaceMap<'a>> {
        let n = source.len();
        let m = target.len();
        if m == 0 {
            return if n == 0 {
                vec![SpaceMap {
                    source,
                    target,
                    assignment: Vec::new(),
                }]
            } else {
                Vec::new()
            };
        }
        let total = m.pow(n as u32);
        (0..total)
            .map(|mut code| {
                let assignment = (0..n)
                    .map(|_| {
                        let p = code % m;
                        code /= m;
                        p
                    })
                    .collect();
                SpaceMap {
                    source,
                    target,
                    assignment,
                }
            })
            .collect()
    }
}

/// A finite space together with a weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedSpace {
    pub space: FiniteSpace,
    pub weight: Weight,
}

/// On-disk form: `{"points": [...], "leq": [["a","b"], ...], "weight": {...}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpaceFile {
    pub points: Vec<String>,
    #[serde(default)]
    pub leq: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<BTreeMap<String, WeightValue>>,
}

/// A space read from a file, with a note when transitive closure had to be
/// applied to the relation.
#[derive(Clone, Debug)]
pub struct LoadedSpace {
    pub space: FiniteSpace,
    pub weight: Option<Weight>,
    pub closure_applied: bool,
}

impl SpaceFile {
    pub fn parse(text: &str) -> Result<LoadedSpace, TopologyError> {
        let file: SpaceFile =
            serde_json::from_str(text).map_err(|e| TopologyError::File(e.to_string()))?;
        file.load()
    }

    pub fn read(path: &Path) -> Result<LoadedSpace, TopologyError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| TopologyError::File(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn load(&self) -> Result<LoadedSpace, TopologyError> {
        let index: HashMap<&str, usize> = self
            .points
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let lookup = |n: &String| {
            index
                .get(n.as_str())
                .copied()
                .ok_or_else(|| TopologyError::UnknownPoint(n.clone()))
        };
        let pairs = self
            .leq
            .iter()
            .map(|[a, b]| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>, TopologyError>>()?;
        let (space, closure_applied) = FiniteSpace::from_relation(self.points.clone(), pairs)?;
        let weight = match &self.weight {
            Some(table) => Some(weight_by_name(&space, table)?),
            None => None,
        };
        Ok(LoadedSpace {
            space,
            weight,
            closure_applied,
        })
    }

    pub fn from_space(space: &FiniteSpace, weight: Option<&Weight>) -> SpaceFile {
        SpaceFile {
            points: space.names().to_vec(),
            leq: space
                .relation_pairs()
                .into_iter()
                .map(|(a, b)| [space.name(a).to_string(), space.name(b).to_string()])
                .collect(),
            weight: weight.map(|w| {
                space
                    .points()
                    .map(|p| (space.name(p).to_string(), w.at(p)))
                    .collect()
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(s: &FiniteSpace, set: &PointSet) -> Vec<String> {
        s.names_of(set)
    }

    #[test]
    fn closure_examples() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(names(&s, &s.closure(&s.set_of(&["o"]).unwrap())), ["c", "o"]);
        let d = FiniteSpace::discrete(["a", "b"]).unwrap();
        assert_eq!(names(&d, &d.closure(&d.set_of(&["a"]).unwrap())), ["a"]);
        let c = FiniteSpace::chain(["a", "b", "c"]).unwrap();
        assert_eq!(names(&c, &c.closure(&c.set_of(&["b"]).unwrap())), ["a", "b"]);
    }

    #[test]
    fn minimal_neighborhood_examples() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(names(&s, &s.minimal_neighborhood(0)), ["c", "o"]);
        assert_eq!(names(&s, &s.minimal_neighborhood(1)), ["o"]);
        let c = FiniteSpace::chain(["a", "b", "c"]).unwrap();
        assert_eq!(names(&c, &c.minimal_neighborhood(1)), ["b", "c"]);
        assert!(matches!(
            s.point("z"),
            Err(TopologyError::UnknownPoint(_))
        ));
    }

    #[test]
    fn weight_examples() {
        let s = FiniteSpace::sierpinski();
        let f = WeightValue::Finite;
        assert!(check_weight(&s, vec![f(1), f(2)]).is_ok());
        match check_weight(&s, vec![f(2), f(1)]) {
            Err(TopologyError::Discontinuous { bound, lower, upper }) => {
                assert_eq!((bound, lower.as_str(), upper.as_str()), (2, "c", "o"));
            }
            other => panic!("unexpected {other:?}"),
        }
        let c = FiniteSpace::chain(["a", "b", "c"]).unwrap();
        assert!(check_weight(&c, vec![f(4); 3]).is_ok());
        assert!(check_weight(&s, vec![WeightValue::Infinite, f(3)]).is_err());
    }

    #[test]
    fn density_examples() {
        let s = FiniteSpace::sierpinski();
        assert!(s.is_dense(&s.set_of(&["o"]).unwrap()));
        assert!(!s.is_dense(&s.set_of(&["c"]).unwrap()));
        assert!(s.is_dense(&PointSet::full(2)));
        let c = FiniteSpace::chain(["a", "b", "c"]).unwrap();
        assert!(c.is_locally_closed(&c.set_of(&["b"]).unwrap()));
        assert!(!c.is_locally_closed(&c.set_of(&["a", "c"]).unwrap()));
        assert!(c.is_open(&c.set_of(&["b", "c"]).unwrap()));
    }

    #[test]
    fn rejects_non_t0() {
        let r = FiniteSpace::from_relation(["a", "b"], [(0, 1), (1, 0)]);
        assert!(matches!(r, Err(TopologyError::NotT0(..))));
    }

    #[test]
    fn file_round_trip_and_closure_warning() {
        let text = r#"{"points": ["a","b","c"], "leq": [["a","b"],["b","c"]], "weight": {"a": 1, "b": 2, "c": "inf"}}"#;
        let loaded = SpaceFile::parse(text).unwrap();
        assert!(loaded.closure_applied);
        assert!(loaded.space.leq(0, 2));
        let w = loaded.weight.unwrap();
        assert_eq!(w.at(2), WeightValue::Infinite);
        let again = SpaceFile::from_space(&loaded.space, Some(&w));
        let json = serde_json::to_string(&again).unwrap();
        let reloaded = SpaceFile::parse(&json).unwrap();
        assert!(!reloaded.closure_applied);
        assert_eq!(reloaded.space, loaded.space);
    }
}
