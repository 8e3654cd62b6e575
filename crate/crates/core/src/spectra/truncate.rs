use std::sync::Arc;

use crate::topology::{check_weight, FiniteSpace, PointId, Weight, WeightValue};

use super::expr::{Atom, AtomSource, SpectrumExpr};
use super::SpectraError;

pub const MAX_TRUNCATION_POINTS: usize = 100_000;

/// Where a point of a truncation comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    /// Point `local` of an atom, with weights multiplied by `degree`.
    Interior {
        atom: Arc<Atom>,
        local: PointId,
        degree: u64,
    },
    /// A point adjoined by a compactifying node. `label` is the node's
    /// designated point (`inf`, `inf'`) or `glue` for the isolated
    /// characters inside a Taylor chain.
    Adjoined {
        node: Arc<SpectrumExpr>,
        label: String,
        degree: u64,
    },
}

impl Origin {
    pub fn is_interior(&self) -> bool {
        matches!(self, Origin::Interior { .. })
    }
}

/// A finite weighted space cut out of an expression.
#[derive(Clone, Debug)]
pub struct Truncation {
    pub space: FiniteSpace,
    pub weight: Weight,
    pub origins: Vec<Origin>,
}

impl Truncation {
    pub fn into_atom(self) -> Result<Atom, SpectraError> {
        Atom::new(self.space, self.weight, AtomSource::Inline)
    }
}

#[derive(Default)]
struct Builder {
    names: Vec<String>,
    weights: Vec<WeightValue>,
    pairs: Vec<(PointId, PointId)>,
    origins: Vec<Origin>,
}

impl Builder {
    fn push(&mut self, name: String, w: WeightValue, origin: Origin) -> Result<PointId, SpectraError> {
        if self.names.len() >= MAX_TRUNCATION_POINTS {
            return Err(SpectraError::TooLarge(self.names.len() + 1));
        }
        self.names.push(name);
        self.weights.push(w);
        self.origins.push(origin);
        Ok(self.names.len() - 1)
    }

    fn adjoin(&mut self, name: String, node: &Arc<SpectrumExpr>, label: &str, degree: u64) -> Result<(), SpectraError> {
        self.push(
            name,
            WeightValue::Finite(degree),
            Origin::Adjoined {
                node: node.clone(),
                label: label.to_string(),
                degree,
            },
        )?;
        Ok(())
    }

    fn atom(&mut self, a: &Arc<Atom>, prefix: &str, degree: u64) -> Result<(), SpectraError> {
        let base = self.names.len();
        for p in a.space.points() {
            self.push(
                format!("{prefix}{}", a.space.name(p)),
                a.weight.at(p).scale(degree),
                Origin::Interior {
                    atom: a.clone(),
                    local: p,
                    degree,
                },
            )?;
        }
        self.pairs
            .extend(a.space.relation_pairs().into_iter().map(|(x, y)| (base + x, base + y)));
        Ok(())
    }

    fn build(&mut self, e: &SpectrumExpr, fuel: u64, degree: u64, prefix: &str) -> Result<(), SpectraError> {
        match e {
            SpectrumExpr::Atom(a) => self.atom(a, prefix, degree),
            SpectrumExpr::C0Sum(children) => children
                .iter()
                .enumerate()
                .try_for_each(|(i, c)| self.build(c, fuel, degree, &format!("{prefix}{i}."))),
            SpectrumExpr::C0SumFamily(f) => (1..=fuel)
                .try_for_each(|n| self.build(&f.at(n)?, fuel, degree, &format!("{prefix}n{n}."))),
            SpectrumExpr::Tensor(inner, d) => self.build(inner, fuel, degree * d.at(1), prefix),
            SpectrumExpr::Unitize(inner) => {
                self.build(inner, fuel, degree, &format!("{prefix}u."))?;
                self.adjoin(format!("{prefix}inf"), &Arc::new(e.clone()), "inf", degree)
            }
            SpectrumExpr::BiUnitize(inner) => {
                self.build(inner, fuel, degree, &format!("{prefix}u."))?;
                let node = Arc::new(e.clone());
                self.adjoin(format!("{prefix}inf"), &node, "inf", degree)?;
                self.adjoin(format!("{prefix}inf'"), &node, "inf'", degree)
            }
            SpectrumExpr::LazarJump(f) => {
                for n in 1..=fuel {
                    self.build(&f.at(n)?, fuel, degree, &format!("{prefix}n{n}."))?;
                }
                let node = Arc::new(e.clone());
                self.adjoin(format!("{prefix}inf"), &node, "inf", degree)?;
                self.adjoin(format!("{prefix}inf'"), &node, "inf'", degree)
            }
            SpectrumExpr::TaylorJump(f) => {
                if fuel < 2 {
                    return Err(SpectraError::Degenerate {
                        fuel,
                        reason: "a Taylor chain needs at least two blocks to glue".into(),
                    });
                }
                let node = Arc::new(e.clone());
                // g0 = ∞_1, then each block followed by g_n = ∞'_n = ∞_{n+1}.
                self.adjoin(format!("{prefix}g0"), &node, "glue", degree)?;
                for n in 1..=fuel {
                    self.build(&f.at(n)?, fuel, degree, &format!("{prefix}n{n}."))?;
                    self.adjoin(format!("{prefix}g{n}"), &node, "glue", degree)?;
                }
                self.adjoin(format!("{prefix}inf"), &node, "inf", degree)?;
                self.adjoin(format!("{prefix}inf'"), &node, "inf'", degree)
            }
            SpectrumExpr::Lazar(_) | SpectrumExpr::Taylor(_) => match e.expand_stage() {
                Some(x) => self.build(&x, fuel, degree, prefix),
                None => self.atom(&Arc::new(Atom::point(1)), prefix, degree),
            },
            SpectrumExpr::Trunc(inner, k) => {
                let a = Arc::new(truncate(inner, *k)?.into_atom()?);
                self.atom(&a, prefix, degree)
            }
        }
    }
}

/// Cuts every parametric family to indices `1..=fuel`. Adjoined points are
/// kept as isolated points of weight 1 (times the enclosing matrix sizes).
pub fn truncate(e: &SpectrumExpr, fuel: u64) -> Result<Truncation, SpectraError> {
    if fuel == 0 {
        return Err(SpectraError::Degenerate {
            fuel,
            reason: "fuel must be at least 1".into(),
        });
    }
    e.validate()?;
    let mut b = Builder::default();
    b.build(e, fuel, 1, "")?;
    let (space, _) = FiniteSpace::from_relation(b.names, b.pairs)?;
    let weight = check_weight(&space, b.weights)?;
    Ok(Truncation {
        space,
        weight,
        origins: b.origins,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::Ordinal;
    use crate::rank::space_rank;
    use crate::spectra::expr::{build_lazar, build_taylor};

    #[test]
    fn lazar_one_at_fuel_three() {
        let t = truncate(&build_lazar(&Ordinal::one()).unwrap(), 3).unwrap();
        let w: Vec<String> = t.weight.values().iter().map(ToString::to_string).collect();
        assert_eq!(w, ["1", "2", "3", "1", "1"]);
        assert_eq!(t.origins.iter().filter(|o| o.is_interior()).count(), 3);
        let p = space_rank(&t.space, &t.weight);
        assert_eq!(p.rank_sup().unwrap(), Ordinal::nat(3).into());
    }

    #[test]
    fn atoms_are_unchanged() {
        let s = FiniteSpace::sierpinski();
        let w = check_weight(&s, vec![WeightValue::Finite(1), WeightValue::Finite(2)]).unwrap();
        let a = Atom::new(s.clone(), w.clone(), AtomSource::Inline).unwrap();
        let t = truncate(&SpectrumExpr::atom(a), 5).unwrap();
        assert_eq!(t.space, s);
        assert_eq!(t.weight, w);
    }

    #[test]
    fn taylor_chain_shape() {
        let t = truncate(&build_taylor(&Ordinal::one()).unwrap(), 2).unwrap();
        assert_eq!(
            t.space.names(),
            ["g0", "n1.x", "g1", "n2.x", "g2", "inf", "inf'"]
        );
        assert!(matches!(
            truncate(&build_taylor(&Ordinal::one()).unwrap(), 1),
            Err(SpectraError::Degenerate { .. })
        ));
    }

    #[test]
    fn size_cap() {
        let e = build_lazar(&Ordinal::nat(9)).unwrap();
        assert!(matches!(truncate(&e, 6), Err(SpectraError::TooLarge(_))));
    }
}
