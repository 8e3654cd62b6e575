//! Definitional evaluation: finite pieces go through the finite rank
//! evaluator, points at infinity through `infinity_order` over closed-form
//! summand families, and Lazar/Taylor stages are expanded structurally.

use std::collections::HashMap;

use crate::ordinal::Ordinal;
use crate::rank::{
    infinity_order, space_rank, Coherence, Gap, NatSeq, OrdSeq, PointRank, ProfileFamily, RankProfile,
    TailDescription,
};
use crate::topology::WeightValue;

use super::expr::{Family, Stage, SpectrumExpr};
use super::top::{Top, TopSeq};
use super::truncate::truncate;
use super::{Pedersen, SpectraError};

/// A summand family seen symbolically in the index.
#[derive(Clone, Debug)]
struct SymFamily {
    top: Result<TopSeq, Gap>,
    mu: NatSeq,
}

impl SymFamily {
    fn scaled(&self, d: &NatSeq) -> SymFamily {
        SymFamily {
            top: self.top.as_ref().map(|t| t.scaled(d)).map_err(Clone::clone),
            mu: self.mu.mul(d),
        }
    }

    fn profile_family(&self) -> ProfileFamily {
        match &self.top {
            Ok(t) => ProfileFamily {
                order_strict_sup: t.order_strict_sup(),
                rank_strict_sup: t.rank_strict_sup(),
                weight_sup: self.mu.clone(),
                gap: false,
            },
            Err(_) => ProfileFamily {
                order_strict_sup: OrdSeq::constant(Ordinal::zero()),
                rank_strict_sup: OrdSeq::constant(Ordinal::zero()),
                weight_sup: self.mu.clone(),
                gap: true,
            },
        }
    }
}

#[derive(Clone, Debug)]
struct Value {
    top: Result<Top, Gap>,
    mu: WeightValue,
    designated: Vec<(String, PointRank)>,
    /// Families a point at infinity would see; empty for compact values.
    tail: Vec<SymFamily>,
}

impl Value {
    fn pedersen(&self) -> Pedersen {
        let profile = match &self.top {
            Ok(t) => t.profile(self.mu),
            Err(g) => RankProfile::gap(g.clone(), self.mu),
        };
        Pedersen {
            profile,
            designated: self.designated.clone(),
        }
    }
}

fn join_tops(a: &Result<Top, Gap>, b: &Result<Top, Gap>) -> Result<Top, Gap> {
    match (a, b) {
        (Err(g), _) | (_, Err(g)) => Err(g.clone()),
        (Ok(x), Ok(y)) => Ok(x.join(y)),
    }
}

fn point_top(p: &PointRank) -> Result<Top, Gap> {
    if let Coherence::Gap(g) = &p.coherence {
        return Err(g.clone());
    }
    match (&p.order, p.weight) {
        (Some(crate::ordinal::ExtOrdinal::Finite(o)), WeightValue::Finite(k)) => Ok(Top::point(o.clone(), k)),
        _ => Ok(Top::Infinite),
    }
}

/// The oracle evaluator. Values are memoized per subexpression.
#[derive(Default)]
pub struct Oracle {
    memo: HashMap<SpectrumExpr, Value>,
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pedersen(&mut self, e: &SpectrumExpr) -> Result<Pedersen, SpectraError> {
        e.validate()?;
        Ok(self.eval(e)?.pedersen())
    }

    fn eval(&mut self, e: &SpectrumExpr) -> Result<Value, SpectraError> {
        if let Some(v) = self.memo.get(e) {
            return Ok(v.clone());
        }
        let v = self.eval_uncached(e)?;
        self.memo.insert(e.clone(), v.clone());
        Ok(v)
    }

    fn eval_uncached(&mut self, e: &SpectrumExpr) -> Result<Value, SpectraError> {
        Ok(match e {
            SpectrumExpr::Atom(a) => {
                let p = space_rank(&a.space, &a.weight);
                let top = match Top::from_profile(&p)? {
                    Some(t) => Ok(t),
                    None => Err(p.gap_info().expect("profile without sups has a gap").clone()),
                };
                Value {
                    top,
                    mu: p.weight_sup(),
                    designated: Vec::new(),
                    tail: Vec::new(),
                }
            }
            SpectrumExpr::C0Sum(children) => {
                let mut acc = Value {
                    top: Ok(Top::Empty),
                    mu: WeightValue::Finite(0),
                    designated: Vec::new(),
                    tail: Vec::new(),
                };
                for (i, c) in children.iter().enumerate() {
                    let v = self.eval(c)?;
                    acc.top = join_tops(&acc.top, &v.top);
                    acc.mu = acc.mu.max(v.mu);
                    acc.designated
                        .extend(v.designated.into_iter().map(|(n, p)| (format!("{i}.{n}"), p)));
                    acc.tail.extend(v.tail);
                }
                acc
            }
            SpectrumExpr::C0SumFamily(f) => {
                let s = self.family(f)?;
                let top = match &s.top {
                    Ok(t) => Ok(t.sup()?),
                    Err(g) => Err(g.clone()),
                };
                let mu = match s.mu.as_constant() {
                    Some(w) => w,
                    None => WeightValue::Infinite,
                };
                Value {
                    top,
                    mu,
                    designated: Vec::new(),
                    tail: vec![s],
                }
            }
            SpectrumExpr::Tensor(inner, d) => {
                let v = self.eval(inner)?;
                let d = d.at(1);
                Value {
                    top: v.top.map(|t| t.scaled(d)),
                    mu: v.mu.scale(d),
                    designated: v.designated.into_iter().map(|(n, p)| (n, p.scaled(d))).collect(),
                    tail: v.tail.iter().map(|s| s.scaled(&NatSeq::constant(d))).collect(),
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
                let sum = SpectrumExpr::C0SumFamily(f.clone());
                let v = self.eval(&sum)?;
                self.compactify(v, &["inf", "inf'"])?
            }
            SpectrumExpr::TaylorJump(f) => {
                let s = self.family(f)?;
                // Each block also carries its isolated weight-1 characters.
                let block = SymFamily {
                    top: match s.top {
                        Ok(t) => Ok(t.join_const(&Top::point(Ordinal::zero(), 1))?),
                        Err(g) => Err(g),
                    },
                    mu: s.mu.max(&NatSeq::constant(1))?,
                };
                let top = match &block.top {
                    Ok(t) => Ok(t.sup()?),
                    Err(g) => Err(g.clone()),
                };
                let mu = block.mu.as_constant().unwrap_or(WeightValue::Infinite);
                let v = Value {
                    top,
                    mu,
                    designated: Vec::new(),
                    tail: vec![block],
                };
                self.compactify(v, &["inf", "inf'"])?
            }
            SpectrumExpr::Lazar(_) | SpectrumExpr::Taylor(_) => match e.expand_stage() {
                Some(x) => self.eval(&x)?,
                None => match e {
                    SpectrumExpr::Lazar(Stage::Fixed(_)) | SpectrumExpr::Taylor(Stage::Fixed(_)) => {
                        self.eval(&SpectrumExpr::atom(super::expr::Atom::point(1)))?
                    }
                    _ => {
                        return Err(SpectraError::Malformed(
                            "index-dependent stage outside a family".into(),
                        ))
                    }
                },
            },
            SpectrumExpr::Trunc(inner, fuel) => {
                let t = truncate(inner, *fuel)?;
                self.eval(&SpectrumExpr::atom(t.into_atom()?))?
            }
        })
    }

    /// Adjoins points at infinity, ranked over the tail when the argument
    /// is not compact and isolated otherwise.
    fn compactify(&mut self, v: Value, names: &[&str]) -> Result<Value, SpectraError> {
        let point = if v.tail.is_empty() {
            PointRank::ranked(Ordinal::zero(), 1, Coherence::Coherent)
        } else {
            let tail = TailDescription {
                explicit: Vec::new(),
                families: v.tail.iter().map(SymFamily::profile_family).collect(),
            };
            infinity_order(&tail, 1)?
        };
        let top = join_tops(&v.top, &point_top(&point));
        Ok(Value {
            top,
            mu: v.mu.max(WeightValue::Finite(1)),
            designated: names.iter().map(|n| (n.to_string(), point.clone())).collect(),
            tail: Vec::new(),
        })
    }

    fn family(&mut self, f: &Family) -> Result<SymFamily, SpectraError> {
        self.symbolic(&f.body)
    }

    /// Evaluates a compact family body as a closed form in the index.
    fn symbolic(&mut self, body: &SpectrumExpr) -> Result<SymFamily, SpectraError> {
        if !body.depends_on_index() {
            let v = self.eval(body)?;
            return Ok(SymFamily {
                top: v.top.map(TopSeq::Const),
                mu: NatSeq::from_weight(v.mu),
            });
        }
        match body {
            SpectrumExpr::Tensor(inner, d) => {
                let s = self.symbolic(inner)?;
                Ok(s.scaled(&NatSeq::affine(d.slope, d.offset)))
            }
            SpectrumExpr::Lazar(stage) | SpectrumExpr::Taylor(stage) => {
                let order = match stage {
                    Stage::Fixed(a) => OrdSeq::constant(a.clone()),
                    Stage::Fundamental(l) => OrdSeq::Fundamental(l.clone()),
                    Stage::Affine { slope, offset } => OrdSeq::Nat(NatSeq::affine(*slope, *offset)),
                };
                // Inductive hypothesis: the top of a stage-β algebra is its
                // pair of characters at infinity, of order β and weight 1.
                // Confirmed on the first members by concrete recursion.
                for n in 1..=2 {
                    let member = body.substitute(n)?;
                    let v = self.eval(&member)?;
                    let expect = Top::point(stage.at(n)?, 1);
                    if v.top.as_ref().ok() != Some(&expect) || v.mu != WeightValue::Infinite {
                        return Err(SpectraError::Internal(format!(
                            "stage hypothesis fails for {member}: top {:?}",
                            v.top
                        )));
                    }
                }
                Ok(SymFamily {
                    top: Ok(TopSeq::Attained {
                        order,
                        weight: Some(NatSeq::constant(1)),
                    }),
                    mu: NatSeq::Infinite,
                })
            }
            SpectrumExpr::C0Sum(children) => {
                let mut dependent = None;
                let mut constant: Result<Top, Gap> = Ok(Top::Empty);
                let mut mu = NatSeq::constant(0);
                for c in children {
                    if c.depends_on_index() {
                        dependent = Some(self.symbolic(c)?);
                    } else {
                        let v = self.eval(c)?;
                        constant = join_tops(&constant, &v.top);
                        mu = mu.max(&NatSeq::from_weight(v.mu))?;
                    }
                }
                let d = dependent.expect("validated: one dependent summand");
                Ok(SymFamily {
                    top: match (d.top, constant) {
                        (Err(g), _) | (_, Err(g)) => Err(g),
                        (Ok(t), Ok(c)) => Ok(t.join_const(&c)?),
                    },
                    mu: d.mu.max(&mu)?,
                })
            }
            SpectrumExpr::Unitize(inner) | SpectrumExpr::BiUnitize(inner) => {
                let s = self.symbolic(inner)?;
                Ok(SymFamily {
                    top: match s.top {
                        Ok(t) => Ok(t.join_const(&Top::point(Ordinal::zero(), 1))?),
                        Err(g) => Err(g),
                    },
                    mu: s.mu.max(&NatSeq::constant(1))?,
                })
            }
            other => Err(SpectraError::Unsupported(format!(
                "no closed form for the family body {other}"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::ExtOrdinal;
    use crate::spectra::expr::{build_lazar, build_taylor};

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    fn rank_sup(p: &Pedersen) -> ExtOrdinal {
        p.profile.rank_sup().unwrap()
    }

    #[test]
    fn lazar_ranks() {
        let mut or = Oracle::new();
        for (a, want) in [("1", "w+1"), ("2", "w*2+1"), ("3", "w*3+1"), ("w+1", "w^2+w+1")] {
            let e = build_lazar(&o(a)).unwrap();
            let p = or.pedersen(&e).unwrap();
            assert_eq!(rank_sup(&p), o(want).into(), "lazar {a}");
            assert_eq!(p.designated.len(), 2);
            assert_eq!(p.designated[0].1.coherence, Coherence::Coherent);
        }
        let e = SpectrumExpr::tensor(build_lazar(&o("2")).unwrap(), 3);
        assert_eq!(rank_sup(&or.pedersen(&e).unwrap()), o("w*2+3").into());
    }

    #[test]
    fn taylor_and_atoms() {
        let mut or = Oracle::new();
        let e = SpectrumExpr::tensor(build_taylor(&o("2")).unwrap(), 2);
        assert_eq!(rank_sup(&or.pedersen(&e).unwrap()), o("w*2+2").into());
        let a = SpectrumExpr::atom(super::super::expr::Atom::point(4));
        assert_eq!(rank_sup(&or.pedersen(&a).unwrap()), o("4").into());
    }

    #[test]
    fn bounded_family_gives_order_zero_point() {
        let body = SpectrumExpr::atom(super::super::expr::Atom::point(3));
        let e = SpectrumExpr::LazarJump(Box::new(Family::new(body)));
        let p = Oracle::new().pedersen(&e).unwrap();
        let inf = &p.designated[0].1;
        assert_eq!(inf.rank, Some(o("1").into()));
        assert_eq!(inf.coherence, Coherence::WeightPeak);
        assert_eq!(rank_sup(&p), o("3").into());
    }
}
