//! Closed-form rules, node by node.
//!
//! Atoms of finite weight rank as their maximum weight; a Lazar or Taylor
//! stage `α ≥ 1` has its two characters at infinity on top with order `α`
//! and weight 1; matrix sizes scale weights; c0-sums take suprema. A point at
//! infinity over a family has order 0 if weights stay bounded, and otherwise
//! the order is read off the family's parameter class: a fixed top order `c`
//! gives `c + 1`, a fundamental sequence of `λ` gives `λ`, an affine stage
//! gives `ω`.

use std::collections::HashMap;

use crate::ordinal::{ExtOrdinal, Ordinal};
use crate::rank::{rank_all, space_rank, Coherence, Gap, GapKind, PointRank};
use crate::topology::{PointId, WeightValue};

use super::expr::{Atom, Degree, SpectrumExpr, Stage};
use super::sections::fell_ranks;
use super::top::Top;
use super::truncate::truncate;
use super::{Pedersen, Provenance, SpectraError};

/// Growth of a weight along a family.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Growth {
    Const(u64),
    /// Finite for each member, unbounded along the family.
    Growing,
    /// Unbounded within each member.
    Unbounded,
}

impl Growth {
    fn of(w: WeightValue) -> Growth {
        match w {
            WeightValue::Finite(k) => Growth::Const(k),
            WeightValue::Infinite => Growth::Unbounded,
        }
    }

    fn sup(&self) -> WeightValue {
        match self {
            Growth::Const(k) => WeightValue::Finite(*k),
            _ => WeightValue::Infinite,
        }
    }

    fn scaled(&self, d: Degree) -> Growth {
        match self {
            Growth::Const(k) if d.depends_on_index() && *k > 0 => Growth::Growing,
            Growth::Const(k) => Growth::Const(k * d.offset),
            g => g.clone(),
        }
    }

    /// Max with a constant, given the dependent side's first value.
    fn join(&self, first: WeightValue, c: WeightValue) -> Result<Growth, SpectraError> {
        match (self, c) {
            (Growth::Unbounded, _) | (_, WeightValue::Infinite) => Ok(Growth::Unbounded),
            (Growth::Const(k), WeightValue::Finite(m)) => Ok(Growth::Const((*k).max(m))),
            (Growth::Growing, WeightValue::Finite(m)) => {
                if first >= WeightValue::Finite(m) {
                    Ok(Growth::Growing)
                } else {
                    Err(SpectraError::Unsupported(format!(
                        "c0sum inside a family: weight bound {m} overtakes the index-dependent summand only for some n"
                    )))
                }
            }
        }
    }
}

/// The top of a family member as a function of the index.
#[derive(Clone, Debug, PartialEq, Eq)]
enum RuleTop {
    Const(Top),
    Stage { order: Stage, weight: Growth },
}

impl RuleTop {
    fn normalized(self) -> RuleTop {
        match self {
            RuleTop::Stage {
                order: Stage::Fixed(c),
                weight: Growth::Const(k),
            } => RuleTop::Const(Top::point(c, k)),
            RuleTop::Stage {
                order: Stage::Fixed(c),
                weight: Growth::Unbounded,
            } => RuleTop::Const(Top::Attained { order: c, weight: None }),
            t => t,
        }
    }

    fn scaled(&self, d: Degree) -> RuleTop {
        match self {
            RuleTop::Const(Top::Attained { order, weight: Some(k) }) if d.depends_on_index() && *k > 0 => {
                RuleTop::Stage {
                    order: Stage::Fixed(order.clone()),
                    weight: Growth::Growing,
                }
            }
            RuleTop::Const(t) => RuleTop::Const(t.scaled(d.offset.max(1))),
            RuleTop::Stage { order, weight } => RuleTop::Stage {
                order: order.clone(),
                weight: weight.scaled(d),
            }
            .normalized(),
        }
    }

    /// The top of the union of all members.
    fn sup(&self) -> Top {
        match self {
            RuleTop::Const(t) => t.clone(),
            RuleTop::Stage {
                order: Stage::Fixed(c),
                ..
            } => Top::Attained {
                order: c.clone(),
                weight: None,
            },
            RuleTop::Stage {
                order: Stage::Fundamental(l),
                ..
            } => Top::Limit(l.clone()),
            RuleTop::Stage {
                order: Stage::Affine { .. },
                ..
            } => Top::Limit(Ordinal::omega()),
        }
    }

    /// Max with a constant top, given the dependent side's first member.
    fn join(&self, first: &Top, c: &Top) -> Result<RuleTop, SpectraError> {
        if let RuleTop::Const(t) = self {
            return Ok(RuleTop::Const(t.join(c)));
        }
        let cs = c.rank_strict_sup();
        if first.rank_strict_sup() >= cs {
            Ok(self.clone())
        } else if cs >= self.sup().rank_strict_sup() {
            Ok(RuleTop::Const(c.clone()))
        } else {
            Err(SpectraError::Unsupported(format!(
                "c0sum inside a family: summand with rank strict-sup {cs} overtakes the index-dependent one only for some n"
            )))
        }
    }
}

type Axiom<T> = Result<Option<T>, Gap>;

#[derive(Clone, Debug)]
struct RuleFamily {
    top: Result<RuleTop, Gap>,
    mu: Growth,
    fell_rule: Option<Top>,
    fell_axiom: Axiom<RuleTop>,
}

impl RuleFamily {
    fn scaled(&self, d: Degree) -> RuleFamily {
        RuleFamily {
            top: self.top.as_ref().map(|t| t.scaled(d)).map_err(Clone::clone),
            mu: self.mu.scaled(d),
            fell_rule: self.fell_rule.clone(),
            fell_axiom: self
                .fell_axiom
                .as_ref()
                .map(|o| o.as_ref().map(|t| t.scaled(d)))
                .map_err(Clone::clone),
        }
    }
}

#[derive(Clone, Debug)]
struct RValue {
    top: Result<Top, Gap>,
    mu: WeightValue,
    designated: Vec<(String, PointRank)>,
    tail: Vec<RuleFamily>,
    fell_rule: Option<Top>,
    fell_axiom: Axiom<Top>,
}

fn join_result(a: &Result<Top, Gap>, b: &Result<Top, Gap>) -> Result<Top, Gap> {
    match (a, b) {
        (Err(g), _) | (_, Err(g)) => Err(g.clone()),
        (Ok(x), Ok(y)) => Ok(x.join(y)),
    }
}

fn join_opt(a: &Option<Top>, b: &Option<Top>) -> Option<Top> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.join(y)),
        (x, None) => x.clone(),
        (None, y) => y.clone(),
    }
}

fn join_axiom(a: &Axiom<Top>, b: &Axiom<Top>) -> Axiom<Top> {
    match (a, b) {
        (Err(g), _) | (_, Err(g)) => Err(g.clone()),
        (Ok(x), Ok(y)) => Ok(join_opt(x, y)),
    }
}

fn one() -> Top {
    Top::point(Ordinal::zero(), 1)
}

/// Fell rank of a construction with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FellOutcome {
    pub value: Result<ExtOrdinal, Gap>,
    pub provenance: Provenance,
    /// Axiom-tagged values that passed the bounds check.
    pub axioms_checked: usize,
}

/// The rule evaluator. Values are memoized per subexpression.
#[derive(Default)]
pub struct RuleEngine {
    memo: HashMap<SpectrumExpr, RValue>,
    axioms_checked: usize,
}

impl RuleEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn evaluate(&mut self, e: &SpectrumExpr) -> Result<(Pedersen, FellOutcome), SpectraError> {
        e.validate()?;
        let before = self.axioms_checked;
        let v = self.eval(e)?;
        let profile = match &v.top {
            Ok(t) => t.profile(v.mu),
            Err(g) => crate::rank::RankProfile::gap(g.clone(), v.mu),
        };
        let pedersen = Pedersen {
            profile,
            designated: v.designated.clone(),
        };
        let fell = match &v.fell_axiom {
            Err(g) => FellOutcome {
                value: Err(g.clone()),
                provenance: Provenance::Axiom,
                axioms_checked: self.axioms_checked - before,
            },
            Ok(axiom) => {
                let rule = v.fell_rule.clone().unwrap_or(Top::Empty);
                let (top, provenance) = match axiom {
                    Some(a) if a.rank_strict_sup() > rule.rank_strict_sup() => (a.clone(), Provenance::Axiom),
                    _ => (rule, Provenance::Rule),
                };
                FellOutcome {
                    value: Ok(top.value()),
                    provenance,
                    axioms_checked: self.axioms_checked - before,
                }
            }
        };
        Ok((pedersen, fell))
    }

    /// Rank the rules assign to point `local` of an atom under matrix size
    /// `degree`.
    pub fn interior_rank(&self, atom: &Atom, local: PointId, degree: u64) -> PointRank {
        let w = &atom.weight;
        let all_finite = w.values().iter().all(|v| v.finite().is_some());
        if all_finite {
            let k = w.at(local).finite().expect("finite");
            let peak = atom.space.up_of(local).iter().any(|&y| w.at(y) > w.at(local));
            let coherence = if peak { Coherence::WeightPeak } else { Coherence::Coherent };
            PointRank::ranked(Ordinal::zero(), k * degree, coherence)
        } else {
            rank_all(&atom.space, w).swap_remove(local).scaled(degree)
        }
    }

    /// Rank the rules assign to an adjoined point of a truncation.
    pub fn adjoined_rank(&mut self, node: &SpectrumExpr, label: &str, degree: u64) -> Result<PointRank, SpectraError> {
        if label == "glue" {
            return Ok(PointRank::ranked(Ordinal::zero(), degree, Coherence::Coherent));
        }
        let v = self.eval(node)?;
        v.designated
            .iter()
            .find(|(n, _)| n == label)
            .map(|(_, p)| p.scaled(degree))
            .ok_or_else(|| SpectraError::Internal(format!("{node} has no point `{label}`")))
    }

    fn eval(&mut self, e: &SpectrumExpr) -> Result<RValue, SpectraError> {
        if let Some(v) = self.memo.get(e) {
            return Ok(v.clone());
        }
        let v = self.eval_uncached(e)?;
        self.memo.insert(e.clone(), v.clone());
        Ok(v)
    }

    fn atom(&self, a: &Atom) -> Result<RValue, SpectraError> {
        let w = &a.weight;
        let max = w.max().unwrap_or(WeightValue::Finite(0));
        let top = match max {
            WeightValue::Finite(k) => Ok(Top::point(Ordinal::zero(), k)),
            WeightValue::Infinite => {
                let p = space_rank(&a.space, w);
                match Top::from_profile(&p)? {
                    Some(t) => Ok(t),
                    None => Err(p.gap_info().expect("gap").clone()),
                }
            }
        };
        let mut fell = None;
        for r in fell_ranks(&a.space, w) {
            let k = r
                .as_ordinal()
                .and_then(Ordinal::as_nat)
                .ok_or_else(|| SpectraError::Internal(format!("finite section rank expected, got {r}")))?;
            fell = join_opt(&fell, &Some(Top::point(Ordinal::zero(), k)));
        }
        Ok(RValue {
            top,
            mu: max,
            designated: Vec::new(),
            tail: Vec::new(),
            fell_rule: fell,
            fell_axiom: Ok(None),
        })
    }

    fn eval_uncached(&mut self, e: &SpectrumExpr) -> Result<RValue, SpectraError> {
        Ok(match e {
            SpectrumExpr::Atom(a) => self.atom(a)?,
            SpectrumExpr::C0Sum(children) => {
                let mut acc = RValue {
                    top: Ok(Top::Empty),
                    mu: WeightValue::Finite(0),
                    designated: Vec::new(),
                    tail: Vec::new(),
                    fell_rule: None,
                    fell_axiom: Ok(None),
                };
                for (i, c) in children.iter().enumerate() {
                    let v = self.eval(c)?;
                    acc.top = join_result(&acc.top, &v.top);
                    acc.mu = acc.mu.max(v.mu);
                    acc.designated
                        .extend(v.designated.into_iter().map(|(n, p)| (format!("{i}.{n}"), p)));
                    acc.tail.extend(v.tail);
                    acc.fell_rule = join_opt(&acc.fell_rule, &v.fell_rule);
                    acc.fell_axiom = join_axiom(&acc.fell_axiom, &v.fell_axiom);
                }
                acc
            }
            SpectrumExpr::C0SumFamily(f) => {
                let fam = self.family(&f.body)?;
                self.family_sum(fam)
            }
            SpectrumExpr::Tensor(inner, d) => {
                let v = self.eval(inner)?;
                let k = d.at(1);
                RValue {
                    top: v.top.map(|t| t.scaled(k)),
                    mu: v.mu.scale(k),
                    designated: v.designated.into_iter().map(|(n, p)| (n, p.scaled(k))).collect(),
                    tail: v.tail.iter().map(|f| f.scaled(*d)).collect(),
                    fell_rule: v.fell_rule,
                    fell_axiom: v.fell_axiom.map(|o| o.map(|t| t.scaled(k))),
                }
            }
            SpectrumExpr::Unitize(inner) => {
                let v = self.eval(inner)?;
                self.compactify(v, &["inf"])?
            }
            SpectrumExpr::BiUnitize(inner) => {
                let v = self.eval(inner)?;
                self.compactify(v, &["inf", "inf'"])?
            }
            SpectrumExpr::LazarJump(f) => {
                let fam = self.family(&f.body)?;
                let v = self.family_sum(fam);
                self.compactify(v, &["inf", "inf'"])?
            }
            SpectrumExpr::TaylorJump(f) => {
                let fam = self.family(&f.body)?;
                let first = if f.body.depends_on_index() {
                    Some(self.eval(&f.body.substitute(1)?)?)
                } else {
                    None
                };
                let block = self.join_family(fam, first.as_ref(), &self.adjoined_value())?;
                let v = self.family_sum(block);
                let mut v = self.compactify(v, &["inf", "inf'"])?;
                let outer = &v.designated[0].1;
                let axiom = match (&outer.coherence, &outer.order, &outer.rank) {
                    (Coherence::Gap(g), _, _) => Err(g.clone()),
                    (_, Some(ExtOrdinal::Finite(o)), Some(r)) => {
                        let value = Top::point(o.clone(), 1);
                        // Bounds: at most the Pedersen rank of the point, at
                        // least the rank 1 of the constant section.
                        if value.value() > *r || value.value() < ExtOrdinal::Finite(1u64.into()) {
                            return Err(SpectraError::Internal(format!(
                                "Taylor Fell value {} violates its bounds at {e}",
                                value.value()
                            )));
                        }
                        self.axioms_checked += 1;
                        Ok(Some(value))
                    }
                    _ => Err(Gap::unbounded()),
                };
                v.fell_axiom = join_axiom(&v.fell_axiom, &axiom);
                v
            }
            SpectrumExpr::Lazar(Stage::Fixed(a)) | SpectrumExpr::Taylor(Stage::Fixed(a)) => {
                if a.is_zero() {
                    return self.atom(&Atom::point(1));
                }
                let taylor = matches!(e, SpectrumExpr::Taylor(_));
                let point = PointRank::ranked(a.clone(), 1, Coherence::Coherent);
                if taylor {
                    self.axioms_checked += 1;
                }
                RValue {
                    top: Ok(Top::point(a.clone(), 1)),
                    mu: WeightValue::Infinite,
                    designated: vec![("inf".into(), point.clone()), ("inf'".into(), point)],
                    tail: Vec::new(),
                    fell_rule: Some(one()),
                    fell_axiom: Ok(taylor.then(|| Top::point(a.clone(), 1))),
                }
            }
            SpectrumExpr::Lazar(_) | SpectrumExpr::Taylor(_) => {
                return Err(SpectraError::Malformed("index-dependent stage outside a family".into()))
            }
            SpectrumExpr::Trunc(inner, fuel) => {
                let a = truncate(inner, *fuel)?.into_atom()?;
                self.atom(&a)?
            }
        })
    }

    /// An isolated weight-1 point, as a value.
    fn adjoined_value(&self) -> RValue {
        RValue {
            top: Ok(one()),
            mu: WeightValue::Finite(1),
            designated: Vec::new(),
            tail: Vec::new(),
            fell_rule: Some(one()),
            fell_axiom: Ok(None),
        }
    }

    fn family_sum(&self, fam: RuleFamily) -> RValue {
        RValue {
            top: fam.top.as_ref().map(RuleTop::sup).map_err(Clone::clone),
            mu: fam.mu.sup(),
            designated: Vec::new(),
            tail: vec![fam.clone()],
            fell_rule: fam.fell_rule.clone(),
            fell_axiom: fam
                .fell_axiom
                .as_ref()
                .map(|o| o.as_ref().map(RuleTop::sup))
                .map_err(Clone::clone),
        }
    }

    fn compactify(&mut self, v: RValue, names: &[&str]) -> Result<RValue, SpectraError> {
        let point = if v.tail.is_empty() {
            PointRank::ranked(Ordinal::zero(), 1, Coherence::Coherent)
        } else {
            infinity_rule(&v.tail)?
        };
        let point_top = match (&point.coherence, &point.order) {
            (Coherence::Gap(g), _) => Err(g.clone()),
            (_, Some(ExtOrdinal::Finite(o))) => Ok(Top::point(o.clone(), 1)),
            _ => Ok(Top::Infinite),
        };
        Ok(RValue {
            top: join_result(&v.top, &point_top),
            mu: v.mu.max(WeightValue::Finite(1)),
            designated: names.iter().map(|n| (n.to_string(), point.clone())).collect(),
            tail: Vec::new(),
            fell_rule: join_opt(&v.fell_rule, &Some(one())),
            fell_axiom: v.fell_axiom,
        })
    }

    /// Joins a family with a constant value, given the family's first member.
    fn join_family(&self, fam: RuleFamily, first: Option<&RValue>, c: &RValue) -> Result<RuleFamily, SpectraError> {
        let top = match (&fam.top, &c.top) {
            (Err(g), _) | (_, Err(g)) => Err(g.clone()),
            (Ok(t), Ok(ct)) => {
                let f = match first {
                    Some(v) => v.top.clone().map_err(|_| SpectraError::Internal("gap in first member".into()))?,
                    None => t.sup(),
                };
                Ok(t.join(&f, ct)?)
            }
        };
        let mu = fam.mu.join(first.map(|v| v.mu).unwrap_or(fam.mu.sup()), c.mu)?;
        let fell_axiom = match (&fam.fell_axiom, &c.fell_axiom) {
            (Err(g), _) | (_, Err(g)) => Err(g.clone()),
            (Ok(None), Ok(x)) => Ok(x.clone().map(RuleTop::Const)),
            (Ok(Some(a)), Ok(None)) => Ok(Some(a.clone())),
            (Ok(Some(a)), Ok(Some(ct))) => {
                let f = match first.map(|v| &v.fell_axiom) {
                    Some(Ok(Some(t))) => t.clone(),
                    Some(_) => return Err(SpectraError::Internal("axiom missing in first member".into())),
                    None => a.sup(),
                };
                Ok(Some(a.join(&f, ct)?))
            }
        };
        Ok(RuleFamily {
            top,
            mu,
            fell_rule: join_opt(&fam.fell_rule, &c.fell_rule),
            fell_axiom,
        })
    }

    fn family(&mut self, body: &SpectrumExpr) -> Result<RuleFamily, SpectraError> {
        if !body.depends_on_index() {
            let v = self.eval(body)?;
            return Ok(RuleFamily {
                top: v.top.map(RuleTop::Const),
                mu: Growth::of(v.mu),
                fell_rule: v.fell_rule,
                fell_axiom: v.fell_axiom.map(|o| o.map(RuleTop::Const)),
            });
        }
        match body {
            SpectrumExpr::Tensor(inner, d) => Ok(self.family(inner)?.scaled(*d)),
            SpectrumExpr::Lazar(stage) | SpectrumExpr::Taylor(stage) => {
                let top = RuleTop::Stage {
                    order: stage.clone(),
                    weight: Growth::Const(1),
                };
                Ok(RuleFamily {
                    fell_axiom: Ok(matches!(body, SpectrumExpr::Taylor(_)).then(|| top.clone())),
                    top: Ok(top),
                    mu: Growth::Unbounded,
                    fell_rule: Some(one()),
                })
            }
            SpectrumExpr::C0Sum(children) => {
                let mut constant = RValue {
                    top: Ok(Top::Empty),
                    mu: WeightValue::Finite(0),
                    designated: Vec::new(),
                    tail: Vec::new(),
                    fell_rule: None,
                    fell_axiom: Ok(None),
                };
                let mut dependent = None;
                for c in children {
                    if c.depends_on_index() {
                        let first = self.eval(&c.substitute(1)?)?;
                        dependent = Some((self.family(c)?, first));
                    } else {
                        let v = self.eval(c)?;
                        constant.top = join_result(&constant.top, &v.top);
                        constant.mu = constant.mu.max(v.mu);
                        constant.fell_rule = join_opt(&constant.fell_rule, &v.fell_rule);
                        constant.fell_axiom = join_axiom(&constant.fell_axiom, &v.fell_axiom);
                    }
                }
                let (fam, first) = dependent.expect("validated: one dependent summand");
                self.join_family(fam, Some(&first), &constant)
            }
            SpectrumExpr::Unitize(inner) | SpectrumExpr::BiUnitize(inner) => {
                let fam = self.family(inner)?;
                let first = self.eval(&inner.substitute(1)?)?;
                self.join_family(fam, Some(&first), &self.adjoined_value())
            }
            other => Err(SpectraError::Unsupported(format!(
                "no closed form for the family body {other}"
            ))),
        }
    }
}

/// Rank of a weight-1 point at infinity over the given families.
fn infinity_rule(tail: &[RuleFamily]) -> Result<PointRank, SpectraError> {
    let w = WeightValue::Finite(1);
    let mut tops = Vec::with_capacity(tail.len());
    for f in tail {
        match &f.top {
            Err(_) => return Ok(PointRank::gap(w, None, Gap::poisoned())),
            Ok(t) => tops.push(t.sup()),
        }
    }
    let bounded: Option<u64> = tail.iter().try_fold(0, |m, f| match f.mu {
        Growth::Const(k) => Some(m.max(k)),
        _ => None,
    });
    if let Some(m) = bounded {
        let coherence = if m <= 1 { Coherence::Coherent } else { Coherence::WeightPeak };
        return Ok(PointRank::ranked(Ordinal::zero(), 1, coherence));
    }
    let mut order = ExtOrdinal::Finite(Ordinal::one());
    let mut sigma = ExtOrdinal::zero();
    for t in &tops {
        order = order.max(t.order_strict_sup());
        sigma = sigma.max(t.rank_strict_sup());
    }
    let order = match order {
        ExtOrdinal::Finite(o) => o,
        ExtOrdinal::Infinity => return Ok(PointRank::gap(w, None, Gap::unbounded())),
    };
    let required = order.omega_times();
    match sigma.as_ordinal() {
        Some(s) if *s == required => Ok(PointRank::ranked(order, 1, Coherence::Coherent)),
        Some(s) if *s < required => Ok(PointRank::gap(
            w,
            Some(order.into()),
            Gap {
                kind: GapKind::RankCofinality,
                required: Some(required),
                attained: Some(sigma),
            },
        )),
        _ => Err(SpectraError::Internal(format!(
            "rank sup {sigma} above w*order = {required}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::expr::{build_lazar, build_taylor, Family};

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn closed_form_values() {
        let mut r = RuleEngine::new();
        for (a, d) in [("1", 1), ("2", 3), ("3", 5), ("w+1", 2)] {
            let e = SpectrumExpr::tensor(build_lazar(&o(a)).unwrap(), d);
            let (p, f) = r.evaluate(&e).unwrap();
            assert_eq!(p.rank().unwrap(), o(a).omega_times().add_nat(d).into());
            assert_eq!(f.value.unwrap(), o("1").into());
            assert_eq!(f.provenance, Provenance::Rule);
        }
        for (a, d) in [("1", 1), ("2", 2)] {
            let e = SpectrumExpr::tensor(build_taylor(&o(a)).unwrap(), d);
            let (p, f) = r.evaluate(&e).unwrap();
            let want: ExtOrdinal = o(a).omega_times().add_nat(d).into();
            assert_eq!(p.rank().unwrap(), want);
            assert_eq!(f.value.unwrap(), want);
            assert_eq!(f.provenance, Provenance::Axiom);
            assert!(f.axioms_checked >= 1);
        }
    }

    #[test]
    fn constant_top_order_without_growth_is_a_gap() {
        // Every member is L_1 itself: orders reach 1, ranks stay at ω + 1.
        let e = SpectrumExpr::LazarJump(Box::new(Family::new(build_lazar(&o("1")).unwrap())));
        let (p, _) = RuleEngine::new().evaluate(&e).unwrap();
        let g = p.designated[0].1.gap_info().unwrap().clone();
        assert_eq!(g.kind, GapKind::RankCofinality);
        assert_eq!(g.required, Some(o("w*2")));
        assert!(p.rank().is_err());
    }
}
