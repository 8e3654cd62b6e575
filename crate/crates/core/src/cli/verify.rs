//! The acceptance matrix behind `specrank verify --suite paper`.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::fell::{fell_compactification, is_fell_continuous, separate};
use crate::ordinal::{ExtOrdinal, Ordinal};
use crate::rank::{derivative_sets, rank_all, space_rank};
use crate::spectra::generate::{poset_catalog, random_expr, random_space, random_weight, rng};
use crate::spectra::sections::local_section_rank;
use crate::spectra::{
    analyze, build_lazar, build_taylor, classify, truncate, Oracle, Origin, Provenance, RuleEngine, SpectraError,
    SpectrumExpr,
};
use crate::topology::{check_weight, FiniteSpace, PointSet, SpaceMap, Weight, WeightValue};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    /// Cases checked, or the first failures.
    pub detail: String,
    #[serde(serialize_with = "secs")]
    pub elapsed: Duration,
    #[serde(serialize_with = "opt_secs")]
    pub budget: Option<Duration>,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

fn opt_secs<S: serde::Serializer>(d: &Option<Duration>, s: S) -> Result<S::Ok, S::Error> {
    match d {
        Some(d) => s.serialize_f64(d.as_secs_f64()),
        None => s.serialize_none(),
    }
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "{} [{}] {} ({:.2}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

pub const CRITERIA: [(u8, &str); 8] = [
    (1, "Lazar Pedersen ranks"),
    (2, "Lazar Fell ranks"),
    (3, "Taylor ranks"),
    (4, "finite-space rank law"),
    (5, "restriction and comparison laws"),
    (6, "Fell compactification"),
    (7, "rule/oracle cross-validation"),
    (8, "ordinal kernel laws"),
];

/// Collects failures, keeping the first few for the report.
#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.cases += 1;
        self.failures.push(what);
    }

    fn finish(self) -> (bool, String) {
        if self.failures.is_empty() {
            (true, format!("{} cases", self.cases))
        } else {
            let shown: Vec<_> = self.failures.iter().take(3).cloned().collect();
            (
                false,
                format!("{} of {} cases failed; {}", self.failures.len(), self.cases, shown.join("; ")),
            )
        }
    }
}

fn o(s: &str) -> Ordinal {
    s.parse().expect("literal")
}

pub fn run_criterion(id: u8, seed: u64) -> CriterionOutcome {
    let title = CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .map(|(_, t)| *t)
        .unwrap_or("unknown");
    let budget = match id {
        1 | 8 => Some(Duration::from_secs(5)),
        4 => Some(Duration::from_secs(10)),
        6 => Some(Duration::from_secs(60)),
        _ => None,
    };
    let start = Instant::now();
    let tally = match id {
        1 => lazar_pedersen(),
        2 => lazar_fell(),
        3 => taylor(),
        4 => rank_law(seed),
        5 => restriction(seed),
        6 => fell(),
        7 => cross_validation(seed),
        8 => ordinal_laws(),
        _ => {
            let mut t = Tally::default();
            t.fail(format!("no criterion {id}"));
            t
        }
    };
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = tally.finish();
    if let Some(b) = budget {
        if elapsed > b {
            passed = false;
            detail = format!("{detail}; over the {}s budget", b.as_secs());
        }
    }
    CriterionOutcome {
        id,
        title,
        passed,
        detail,
        elapsed,
        budget,
    }
}

pub fn run_suite(seed: u64) -> Vec<CriterionOutcome> {
    CRITERIA.iter().map(|(id, _)| run_criterion(*id, seed)).collect()
}

fn lazar_pedersen() -> Tally {
    let mut t = Tally::default();
    for a in ["1", "2", "3", "w+1"] {
        for d in [1, 2, 5] {
            let e = SpectrumExpr::tensor(build_lazar(&o(a)).expect("successor"), d);
            let want: ExtOrdinal = o(a).omega_times().add_nat(d).into();
            let rule = RuleEngine::new().evaluate(&e).map(|(p, _)| p);
            let oracle = Oracle::new().pedersen(&e);
            match (rule, oracle) {
                (Ok(r), Ok(b)) => {
                    t.check(r.rank().ok() == Some(want.clone()), || format!("rules give {:?} for L_{a} x M_{d}", r.rank()));
                    t.check(b.rank().ok() == Some(want.clone()), || format!("oracle gives {:?} for L_{a} x M_{d}", b.rank()));
                    t.check(r == b, || format!("paths differ on L_{a} x M_{d}"));
                }
                (r, b) => t.fail(format!("L_{a} x M_{d}: {:?} / {:?}", r.err(), b.err())),
            }
        }
    }
    t
}

fn lazar_fell() -> Tally {
    let mut t = Tally::default();
    let one: ExtOrdinal = Ordinal::one().into();
    for a in ["1", "2", "3"] {
        let alpha = o(a);
        let e = build_lazar(&alpha).expect("successor");
        let a_w = alpha.omega_times();
        match analyze(&e) {
            Ok(an) => t.check(an.fell_rank().ok() == Some(one.clone()), || {
                format!("Fell rank of L_{a} is {:?}", an.fell_rank())
            }),
            Err(err) => t.fail(format!("L_{a}: {err}")),
        }
        let mut betas = vec![Ordinal::zero(), Ordinal::one(), Ordinal::nat(7), a_w.clone()];
        betas.push(alpha.predecessor().expect("successor").omega_times().add_nat(4));
        for beta in betas {
            match classify(&e, &beta) {
                Ok(c) => {
                    let sub = c.is_subhomogeneous();
                    t.check(sub == Ok(false), || format!("L_{a} is {beta}-subhomogeneous: {sub:?}"));
                }
                Err(err) => t.fail(format!("L_{a}: {err}")),
            }
        }
        match (classify(&e, &Ordinal::zero()), classify(&e, &a_w.add_nat(1))) {
            (Ok(c0), Ok(top)) => {
                t.check(c0.is_type_one() == Ok(true), || format!("L_{a} is not type I_0"));
                t.check(top.is_subhomogeneous() == Ok(true), || format!("L_{a} not (w*{a}+1)-subhomogeneous"));
            }
            _ => t.fail(format!("L_{a}: classification failed")),
        }
    }
    t
}

fn taylor() -> Tally {
    let mut t = Tally::default();
    for a in ["1", "2"] {
        for d in [1, 2] {
            let e = SpectrumExpr::tensor(build_taylor(&o(a)).expect("successor"), d);
            let want: ExtOrdinal = o(a).omega_times().add_nat(d).into();
            let an = match analyze(&e) {
                Ok(an) => an,
                Err(err) => {
                    t.fail(format!("K_{a} x M_{d}: {err}"));
                    continue;
                }
            };
            t.check(an.pedersen_rank().ok() == Some(want.clone()), || {
                format!("Pedersen rank of K_{a} x M_{d} is {:?}", an.pedersen_rank())
            });
            t.check(an.fell_rank().ok() == Some(want.clone()), || {
                format!("Fell rank of K_{a} x M_{d} is {:?}", an.fell_rank())
            });
            t.check(an.fell.provenance == Provenance::Axiom && an.fell.axioms_checked > 0, || {
                format!("K_{a} x M_{d}: Fell value not an axiom that passed its bounds")
            });
            // Lower bound: the best section around an outer character of a
            // finite truncation.
            match truncate(&e, 3) {
                Ok(tr) => {
                    let x = tr.space.point("inf").expect("outer character");
                    let best = local_section_rank(&tr.space, &tr.weight, x, true);
                    t.check(an.fell_rank().is_ok_and(|f| f >= best), || {
                        format!("K_{a} x M_{d}: Fell value below the section bound {best}")
                    });
                }
                Err(err) => t.fail(format!("K_{a} x M_{d}: {err}")),
            }
        }
    }
    t
}

/// The seeded corpus of criteria 4 and 5.
fn corpus(seed: u64) -> Vec<(FiniteSpace, Weight)> {
    let mut r = rng(seed);
    (0..500)
        .map(|_| {
            let n = rand::Rng::gen_range(&mut r, 1..=8);
            let s = random_space(&mut r, n, 0.3);
            let w = random_weight(&mut r, &s, 6, true);
            (s, w)
        })
        .collect()
}

fn rank_law(seed: u64) -> Tally {
    let mut t = Tally::default();
    for (i, (s, w)) in corpus(seed).iter().enumerate() {
        let ranks = rank_all(s, w);
        for x in s.points() {
            let r = &ranks[x];
            match w.at(x) {
                WeightValue::Finite(k) => t.check(
                    r.order == Some(Ordinal::zero().into()) && r.rank == Some(Ordinal::nat(k).into()),
                    || format!("space {i}, point {}: {r:?}", s.name(x)),
                ),
                WeightValue::Infinite => t.check(r.rank == Some(ExtOrdinal::Infinity), || {
                    format!("space {i}, point {}: infinite weight ranked {r:?}", s.name(x))
                }),
            }
        }
        let max = match w.max().expect("nonempty") {
            WeightValue::Finite(k) => ExtOrdinal::from(Ordinal::nat(k)),
            WeightValue::Infinite => ExtOrdinal::Infinity,
        };
        let sr = space_rank(s, w);
        t.check(sr.rank_sup().ok() == Some(max.clone()), || {
            format!("space {i}: space rank {:?}, max weight {max}", sr.rank_sup())
        });
        match derivative_sets(s, w) {
            Ok(d) => {
                for (alpha, x) in &d.stages {
                    let next = d.stage(&alpha.successor()).cloned().unwrap_or_else(|| x.clone());
                    t.check(s.is_open(x) && s.closure(x).is_subset(&next), || {
                        format!("space {i}: derivative stage {alpha}")
                    });
                }
            }
            Err(err) => t.fail(format!("space {i}: {err}")),
        }
    }
    t
}

fn restriction(seed: u64) -> Tally {
    let mut t = Tally::default();
    for (i, (s, w)) in corpus(seed).iter().enumerate() {
        let full = rank_all(s, w);
        let whole = space_rank(s, w);
        for mask in 1u64..1 << s.len() {
            let a = PointSet::from_mask(s.len(), mask);
            let open = s.is_open(&a);
            let dense = s.is_dense(&a);
            if !open && !dense {
                continue;
            }
            let (sub, keep) = s.subspace(&a);
            let wr = w.restrict(&keep);
            let ranks = rank_all(&sub, &wr);
            t.check(keep.iter().enumerate().all(|(j, &p)| ranks[j] == full[p]), || {
                format!("space {i}, subspace {:?}: point ranks change", s.names_of(&a))
            });
            if dense {
                let sr = space_rank(&sub, &wr);
                t.check(sr.rank_sup() == whole.rank_sup(), || {
                    format!("space {i}, dense {:?}: space rank changes", s.names_of(&a))
                });
            }
        }
    }
    // Comparison along continuous maps with w_X ≤ w_Y ∘ f.
    let catalog = poset_catalog(4);
    let mut r = rng(seed ^ 0x5eed);
    for x in &catalog {
        for y in &catalog {
            for f in SpaceMap::all(x, y).into_iter().filter(SpaceMap::is_continuous) {
                let wy = random_weight(&mut r, y, 4, true);
                let wx0 = random_weight(&mut r, x, 4, true);
                let raw = x.points().map(|p| wx0.at(p).min(wy.at(f.apply(p)))).collect();
                let wx = match check_weight(x, raw) {
                    Ok(w) => w,
                    Err(err) => {
                        t.fail(format!("pulled-back weight not continuous: {err}"));
                        continue;
                    }
                };
                let rx = rank_all(x, &wx);
                let ry = rank_all(y, &wy);
                t.check(
                    x.points().all(|p| match (&rx[p].rank, &ry[f.apply(p)].rank) {
                        (Some(a), Some(b)) => a <= b,
                        _ => false,
                    }),
                    || format!("comparison fails for {:?} -> {:?}", x.names(), f.assignment),
                );
            }
        }
    }
    t
}

fn fell() -> Tally {
    let mut t = Tally::default();
    let s = FiniteSpace::sierpinski();
    match fell_compactification(&s) {
        Ok(phi) => t.check(phi.named(&s) == [vec!["c"], vec!["c", "o"]], || {
            format!("Sierpinski: {:?}", phi.named(&s))
        }),
        Err(err) => t.fail(err.to_string()),
    }
    for space in poset_catalog(5) {
        let phi = match fell_compactification(&space) {
            Ok(phi) => phi,
            Err(err) => {
                t.fail(err.to_string());
                continue;
            }
        };
        let mut expected: Vec<PointSet> = space.points().map(|x| space.closure_of_point(x)).collect();
        expected.sort_by_key(|c| (c.len(), space.names_of(c)));
        t.check(phi.members() == expected.as_slice(), || {
            format!("{:?}: {:?}", space.relation_pairs(), phi.named(&space))
        });
        let m = phi.members();
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                let sep = separate(&space, &m[i], &m[j]);
                t.check(matches!(sep, Ok(Some(_))), || {
                    format!("{:?} and {:?} not separated", space.names_of(&m[i]), space.names_of(&m[j]))
                });
            }
        }
    }
    let small = poset_catalog(4);
    for x in &small {
        for y in &small {
            for f in SpaceMap::all(x, y) {
                match is_fell_continuous(&f) {
                    Ok(c) => t.check(c.holds == f.is_continuous(), || format!("map {:?}", f.assignment)),
                    Err(err) => t.fail(err.to_string()),
                }
            }
        }
    }
    t
}

fn cross_validation(seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut r = rng(seed);
    let mut rules = RuleEngine::new();
    let mut oracle = Oracle::new();
    for i in 0..100 {
        let e = random_expr(&mut r, 3);
        let a = match rules.evaluate(&e) {
            Ok((p, _)) => p,
            Err(err) => {
                t.fail(format!("#{i} {e}: {err}"));
                continue;
            }
        };
        match oracle.pedersen(&e) {
            Ok(b) => t.check(a == b, || format!("#{i} {e}: rules {:?}, oracle {:?}", a.rank(), b.rank())),
            Err(err) => t.fail(format!("#{i} {e}: {err}")),
        }
        for fuel in [3, 6] {
            match truncation_agrees(&e, fuel, &rules) {
                Ok(bad) => t.check(bad.is_empty(), || format!("#{i} {e} at fuel {fuel}: {}", bad.join(", "))),
                Err(err) => t.fail(format!("#{i} {e} at fuel {fuel}: {err}")),
            }
        }
    }
    t
}

/// Interior points whose finite rank differs from the symbolic one.
pub fn truncation_agrees(e: &SpectrumExpr, fuel: u64, rules: &RuleEngine) -> Result<Vec<String>, SpectraError> {
    let tr = truncate(e, fuel)?;
    let ranks = rank_all(&tr.space, &tr.weight);
    Ok(tr
        .origins
        .iter()
        .enumerate()
        .filter_map(|(p, origin)| match origin {
            Origin::Interior { atom, local, degree } => {
                (rules.interior_rank(atom, *local, *degree) != ranks[p]).then(|| tr.space.name(p).to_string())
            }
            Origin::Adjoined { .. } => None,
        })
        .collect())
}

/// CNF ordinals with at most three terms, exponents from `exponents`
/// (strictly decreasing) and coefficients `1..=3`.
pub fn small_ordinals(exponents: &[Ordinal]) -> Vec<Ordinal> {
    let mut exps = exponents.to_vec();
    exps.sort_by(|a, b| b.cmp(a));
    let mut out = vec![Ordinal::zero()];
    let mut partial: Vec<Vec<(Ordinal, u64)>> = vec![Vec::new()];
    for _ in 0..3 {
        let mut next = Vec::new();
        for terms in &partial {
            let start = match terms.last() {
                Some((e, _)) => exps.iter().position(|x| x == e).expect("listed") + 1,
                None => 0,
            };
            for e in &exps[start..] {
                for c in 1..=3 {
                    let mut t = terms.clone();
                    t.push((e.clone(), c));
                    out.push(Ordinal::from_terms(t.clone()).expect("decreasing exponents"));
                    next.push(t);
                }
            }
        }
        partial = next;
    }
    out
}

fn ordinal_laws() -> Tally {
    let mut t = Tally::default();
    let wide = small_ordinals(&[o("0"), o("1"), o("2"), o("w"), o("w+1"), o("w*2")]);
    let narrow = small_ordinals(&[o("0"), o("1"), o("w"), o("w*2")]);
    let mut failures = 0usize;
    let mut cases = 0usize;
    let mut record = |t: &mut Tally, what: String| {
        failures += 1;
        if failures <= 3 {
            t.failures.push(what);
        }
    };
    let omega: Vec<Ordinal> = wide.iter().map(Ordinal::omega_times).collect();
    for (i, a) in wide.iter().enumerate() {
        for (j, b) in wide.iter().enumerate() {
            cases += 1;
            let ab = a.add(b);
            let ok = omega[i].add(&omega[j]) == ab.omega_times()
                && (a < b) as u8 + (a == b) as u8 + (a > b) as u8 == 1
                && ((a <= b && b <= a) == (a == b))
                && ab >= *a;
            if !ok {
                record(&mut t, format!("pair ({a}, {b})"));
            }
        }
    }
    let n = narrow.len();
    let sums: Vec<Ordinal> = narrow
        .iter()
        .flat_map(|a| narrow.iter().map(move |b| a.add(b)))
        .collect();
    for (i, a) in narrow.iter().enumerate() {
        for (j, b) in narrow.iter().enumerate() {
            let ab = &sums[i * n + j];
            for (k, c) in narrow.iter().enumerate() {
                cases += 1;
                let ok = ab.add(c) == a.add(&sums[j * n + k])
                    && (!(a < b && b < c) || a < c)
                    && (!(b < c) || *ab < sums[i * n + k]);
                if !ok {
                    record(&mut t, format!("triple ({a}, {b}, {c})"));
                }
            }
        }
    }
    t.cases = cases;
    if failures > t.failures.len() {
        let more = failures - t.failures.len();
        t.failures.push(format!("{more} more"));
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ordinal_counts() {
        assert_eq!(small_ordinals(&[o("0"), o("1"), o("w"), o("w*2")]).len(), 175);
        let all = small_ordinals(&[o("0"), o("1"), o("2"), o("w"), o("w+1"), o("w*2")]);
        assert_eq!(all.len(), 694);
        assert!(all.contains(&o("w^(w*2)*3 + w^(w+1)*2 + w^2")));
    }
}
