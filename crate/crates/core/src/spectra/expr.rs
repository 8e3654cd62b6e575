use std::fmt;
use std::sync::Arc;

use crate::ordinal::Ordinal;
use crate::topology::{FiniteSpace, SpaceFile, Weight, WeightValue};

use super::SpectraError;

/// A matrix size, possibly depending on the family index `n ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Degree {
    /// Coefficient of `n`.
    pub slope: u64,
    pub offset: u64,
}

impl Degree {
    pub fn constant(d: u64) -> Self {
        Degree { slope: 0, offset: d }
    }

    /// `n ↦ n`.
    pub fn index() -> Self {
        Degree { slope: 1, offset: 0 }
    }

    pub fn affine(slope: u64, offset: u64) -> Self {
        Degree { slope, offset }
    }

    pub fn depends_on_index(&self) -> bool {
        self.slope > 0
    }

    pub fn at(&self, n: u64) -> u64 {
        self.slope * n + self.offset
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.slope, self.offset) {
            (0, d) => write!(f, "{d}"),
            (1, 0) => write!(f, "n"),
            (a, 0) => write!(f, "{a}n"),
            (1, b) => write!(f, "n+{b}"),
            (a, b) => write!(f, "{a}n+{b}"),
        }
    }
}

/// The stage of a Lazar or Taylor algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Stage {
    Fixed(Ordinal),
    /// `λ_n`, the `n`-th term of the fundamental sequence of a limit `λ`.
    Fundamental(Ordinal),
    /// `a·n + b` with `a ≥ 1`.
    Affine { slope: u64, offset: u64 },
}

impl Stage {
    pub fn depends_on_index(&self) -> bool {
        !matches!(self, Stage::Fixed(_))
    }

    pub fn at(&self, n: u64) -> Result<Ordinal, SpectraError> {
        match self {
            Stage::Fixed(a) => Ok(a.clone()),
            Stage::Fundamental(l) => Ok(l.fundamental_successor(n)?),
            Stage::Affine { slope, offset } => Ok(Ordinal::nat(slope * n + offset)),
        }
    }

    /// `α_n` for the recursion at stage `α`: `α − 1` for successors, the
    /// fundamental sequence for limits.
    pub fn predecessor_of(alpha: &Ordinal) -> Stage {
        match alpha.predecessor() {
            Some(p) => Stage::Fixed(p),
            None => Stage::Fundamental(alpha.clone()),
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stage::Fixed(a) => write!(f, "{a}"),
            Stage::Fundamental(l) => write!(f, "{l}[n]"),
            Stage::Affine { slope, offset } => write!(f, "{}", Degree::affine(*slope, *offset)),
        }
    }
}

/// Where an atom came from, kept so expressions print back the way they
/// were written.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AtomSource {
    Inline,
    File(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    pub space: FiniteSpace,
    pub weight: Weight,
    pub source: AtomSource,
}

impl Atom {
    /// Validates the atom invariants: nonempty, weights at least 1.
    pub fn new(space: FiniteSpace, weight: Weight, source: AtomSource) -> Result<Self, SpectraError> {
        if space.is_empty() {
            return Err(SpectraError::Malformed("atoms must have at least one point".into()));
        }
        if let Some(p) = space.points().find(|&p| weight.at(p) == WeightValue::Finite(0)) {
            return Err(SpectraError::Malformed(format!(
                "atom weights must be at least 1, `{}` has 0",
                space.name(p)
            )));
        }
        Ok(Atom { space, weight, source })
    }

    /// One point of weight `k`.
    pub fn point(k: u64) -> Self {
        let space = FiniteSpace::discrete(["x"]).expect("one point");
        let weight = Weight::constant(&space, k);
        Atom {
            space,
            weight,
            source: AtomSource::Inline,
        }
    }

    pub fn inline_json(&self) -> String {
        serde_json::to_string(&SpaceFile::from_space(&self.space, Some(&self.weight)))
            .expect("space files serialize")
    }
}

/// A parametric family `n ↦ body[n]`, `n ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Family {
    pub body: SpectrumExpr,
}

impl Family {
    pub fn new(body: SpectrumExpr) -> Self {
        Family { body }
    }

    /// The `n`-th member, with the index substituted.
    pub fn at(&self, n: u64) -> Result<SpectrumExpr, SpectraError> {
        self.body.substitute(n)
    }
}

/// A construction of a weighted spectrum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpectrumExpr {
    Atom(Arc<Atom>),
    C0Sum(Vec<SpectrumExpr>),
    C0SumFamily(Box<Family>),
    Tensor(Box<SpectrumExpr>, Degree),
    Unitize(Box<SpectrumExpr>),
    BiUnitize(Box<SpectrumExpr>),
    LazarJump(Box<Family>),
    TaylorJump(Box<Family>),
    Lazar(Stage),
    Taylor(Stage),
    /// The finite truncation at the given fuel, used as an atom.
    Trunc(Box<SpectrumExpr>, u64),
}

impl SpectrumExpr {
    pub fn atom(atom: Atom) -> Self {
        SpectrumExpr::Atom(Arc::new(atom))
    }

    pub fn tensor(e: SpectrumExpr, d: u64) -> Self {
        SpectrumExpr::Tensor(Box::new(e), Degree::constant(d))
    }

    /// Whether the index `n` of an enclosing family occurs free.
    pub fn depends_on_index(&self) -> bool {
        match self {
            SpectrumExpr::Atom(_) | SpectrumExpr::C0SumFamily(_) => false,
            SpectrumExpr::LazarJump(_) | SpectrumExpr::TaylorJump(_) => false,
            SpectrumExpr::C0Sum(v) => v.iter().any(Self::depends_on_index),
            SpectrumExpr::Tensor(e, d) => d.depends_on_index() || e.depends_on_index(),
            SpectrumExpr::Unitize(e) | SpectrumExpr::BiUnitize(e) => e.depends_on_index(),
            SpectrumExpr::Trunc(e, _) => e.depends_on_index(),
            SpectrumExpr::Lazar(s) | SpectrumExpr::Taylor(s) => s.depends_on_index(),
        }
    }

    /// Replaces the free index by `n`. Nested families bind their own index.
    pub fn substitute(&self, n: u64) -> Result<SpectrumExpr, SpectraError> {
        if !self.depends_on_index() {
            return Ok(self.clone());
        }
        Ok(match self {
            SpectrumExpr::C0Sum(v) => {
                SpectrumExpr::C0Sum(v.iter().map(|e| e.substitute(n)).collect::<Result<_, _>>()?)
            }
            SpectrumExpr::Tensor(e, d) => {
                SpectrumExpr::Tensor(Box::new(e.substitute(n)?), Degree::constant(d.at(n)))
            }
            SpectrumExpr::Unitize(e) => SpectrumExpr::Unitize(Box::new(e.substitute(n)?)),
            SpectrumExpr::BiUnitize(e) => SpectrumExpr::BiUnitize(Box::new(e.substitute(n)?)),
            SpectrumExpr::Trunc(e, k) => SpectrumExpr::Trunc(Box::new(e.substitute(n)?), *k),
            SpectrumExpr::Lazar(s) => SpectrumExpr::Lazar(Stage::Fixed(s.at(n)?)),
            SpectrumExpr::Taylor(s) => SpectrumExpr::Taylor(Stage::Fixed(s.at(n)?)),
            other => other.clone(),
        })
    }

    /// Whether the denoted space is compact. Only parametric c0-sums are not,
    /// together with whatever contains one without compactifying it.
    pub fn is_compact(&self) -> bool {
        match self {
            SpectrumExpr::C0SumFamily(_) => false,
            SpectrumExpr::C0Sum(v) => v.iter().all(Self::is_compact),
            SpectrumExpr::Tensor(e, _) => e.is_compact(),
            _ => true,
        }
    }

    /// The jump this stage stands for: `L(L_{α_n} ⊗ M_n)` or
    /// `J(K_{α_n} ⊗ M_n)`. `None` at stage 0, which is a single point.
    pub fn expand_stage(&self) -> Option<SpectrumExpr> {
        let (alpha, taylor) = match self {
            SpectrumExpr::Lazar(Stage::Fixed(a)) => (a, false),
            SpectrumExpr::Taylor(Stage::Fixed(a)) => (a, true),
            _ => return None,
        };
        if alpha.is_zero() {
            return None;
        }
        let inner = Stage::predecessor_of(alpha);
        let inner = if taylor {
            SpectrumExpr::Taylor(inner)
        } else {
            SpectrumExpr::Lazar(inner)
        };
        let family = Box::new(Family::new(SpectrumExpr::Tensor(Box::new(inner), Degree::index())));
        Some(if taylor {
            SpectrumExpr::TaylorJump(family)
        } else {
            SpectrumExpr::LazarJump(family)
        })
    }

    /// Checks the structural rules: no free index at the top, compact family
    /// bodies, positive degrees, well-formed stages.
    pub fn validate(&self) -> Result<(), SpectraError> {
        if self.depends_on_index() {
            return Err(SpectraError::Malformed(
                "the family index n occurs outside any family".into(),
            ));
        }
        self.validate_inner()
    }

    fn validate_inner(&self) -> Result<(), SpectraError> {
        match self {
            SpectrumExpr::Atom(_) => Ok(()),
            SpectrumExpr::C0Sum(v) => {
                if v.is_empty() {
                    return Err(SpectraError::Malformed("c0sum needs at least one summand".into()));
                }
                if v.iter().filter(|e| e.depends_on_index()).count() > 1 {
                    return Err(SpectraError::Unsupported(
                        "a c0sum inside a family may have at most one index-dependent summand".into(),
                    ));
                }
                v.iter().try_for_each(Self::validate_inner)
            }
            SpectrumExpr::C0SumFamily(f) | SpectrumExpr::LazarJump(f) | SpectrumExpr::TaylorJump(f) => {
                if !f.body.is_compact() {
                    return Err(SpectraError::Unsupported(
                        "parametric family bodies must be compact".into(),
                    ));
                }
                if matches!(f.body, SpectrumExpr::Trunc(..)) && f.body.depends_on_index() {
                    return Err(SpectraError::Unsupported(
                        "truncation of an index-dependent body".into(),
                    ));
                }
                f.body.validate_inner()
            }
            SpectrumExpr::Tensor(e, d) => {
                if d.at(1) == 0 {
                    return Err(SpectraError::Malformed("matrix size must be positive".into()));
                }
                e.validate_inner()
            }
            SpectrumExpr::Unitize(e) | SpectrumExpr::BiUnitize(e) => e.validate_inner(),
            SpectrumExpr::Trunc(e, k) => {
                if *k == 0 {
                    return Err(SpectraError::Malformed("truncation fuel must be at least 1".into()));
                }
                if e.depends_on_index() {
                    return Err(SpectraError::Unsupported(
                        "truncation of an index-dependent body".into(),
                    ));
                }
                e.validate()
            }
            SpectrumExpr::Lazar(s) | SpectrumExpr::Taylor(s) => match s {
                Stage::Fixed(_) => Ok(()),
                Stage::Fundamental(l) if l.is_limit() => Ok(()),
                Stage::Fundamental(l) => Err(SpectraError::Malformed(format!(
                    "`{l}[n]` needs a limit ordinal"
                ))),
                Stage::Affine { slope: 0, .. } => {
                    Err(SpectraError::Malformed("affine stage without n".into()))
                }
                Stage::Affine { .. } => Ok(()),
            },
        }
    }
}

fn check_stage(alpha: &Ordinal) -> Result<(), SpectraError> {
    if alpha.is_limit() {
        return Err(SpectraError::Malformed(format!(
            "stage `{alpha}` is a limit ordinal; Lazar and Taylor algebras are built at successor stages"
        )));
    }
    Ok(())
}

/// `L_α` for a successor `α` (or 0).
pub fn build_lazar(alpha: &Ordinal) -> Result<SpectrumExpr, SpectraError> {
    check_stage(alpha)?;
    let e = SpectrumExpr::Lazar(Stage::Fixed(alpha.clone()));
    Ok(e.expand_stage().unwrap_or_else(|| SpectrumExpr::atom(Atom::point(1))))
}

/// `K_α` for a successor `α` (or 0).
pub fn build_taylor(alpha: &Ordinal) -> Result<SpectrumExpr, SpectraError> {
    check_stage(alpha)?;
    let e = SpectrumExpr::Taylor(Stage::Fixed(alpha.clone()));
    Ok(e.expand_stage().unwrap_or_else(|| SpectrumExpr::atom(Atom::point(1))))
}

pub(crate) fn check_public_stage(alpha: &Ordinal) -> Result<(), SpectraError> {
    check_stage(alpha)
}

impl fmt::Display for SpectrumExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumExpr::Atom(a) => match &a.source {
                AtomSource::File(p) => write!(f, "(atom {p})"),
                AtomSource::Inline => write!(f, "(atom {})", a.inline_json()),
            },
            SpectrumExpr::C0Sum(v) => {
                write!(f, "(c0sum")?;
                for e in v {
                    write!(f, " {e}")?;
                }
                write!(f, ")")
            }
            SpectrumExpr::C0SumFamily(fam) => write!(f, "(c0sum n -> {})", fam.body),
            SpectrumExpr::Tensor(e, d) => write!(f, "(tensor {e} {d})"),
            SpectrumExpr::Unitize(e) => write!(f, "(unitize {e})"),
            SpectrumExpr::BiUnitize(e) => write!(f, "(biunitize {e})"),
            SpectrumExpr::LazarJump(fam) => write!(f, "(lazarjump n -> {})", fam.body),
            SpectrumExpr::TaylorJump(fam) => write!(f, "(taylorjump n -> {})", fam.body),
            SpectrumExpr::Lazar(s) => write!(f, "(lazar {s})"),
            SpectrumExpr::Taylor(s) => write!(f, "(taylor {s})"),
            SpectrumExpr::Trunc(e, k) => write!(f, "(trunc {e} {k})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn builder_examples() {
        assert_eq!(build_lazar(&Ordinal::zero()).unwrap(), SpectrumExpr::atom(Atom::point(1)));
        let l1 = build_lazar(&Ordinal::one()).unwrap();
        assert_eq!(l1.to_string(), "(lazarjump n -> (tensor (lazar 0) n))");
        let k1 = build_taylor(&Ordinal::one()).unwrap();
        assert_eq!(k1.to_string(), "(taylorjump n -> (tensor (taylor 0) n))");
        assert!(build_lazar(&o("w")).is_err());
        let l = build_lazar(&o("w+1")).unwrap();
        assert_eq!(l.to_string(), "(lazarjump n -> (tensor (lazar w) n))");
        let inner = SpectrumExpr::Lazar(Stage::Fixed(o("w"))).expand_stage().unwrap();
        assert_eq!(inner.to_string(), "(lazarjump n -> (tensor (lazar w[n]) n))");
    }

    #[test]
    fn substitution_respects_scoping() {
        let body = SpectrumExpr::Tensor(
            Box::new(SpectrumExpr::Lazar(Stage::Fundamental(o("w")))),
            Degree::affine(2, 1),
        );
        let e = body.substitute(3).unwrap();
        assert_eq!(e.to_string(), "(tensor (lazar 4) 7)");
        let nested = SpectrumExpr::C0SumFamily(Box::new(Family::new(body)));
        assert!(!nested.depends_on_index());
        assert_eq!(nested.substitute(5).unwrap(), nested);
        assert!(nested.validate().is_ok());
        assert!(!nested.is_compact());
        assert!(SpectrumExpr::Unitize(Box::new(nested)).is_compact());
    }

    #[test]
    fn validation_rejects_bad_families() {
        let fam = SpectrumExpr::C0SumFamily(Box::new(Family::new(SpectrumExpr::atom(Atom::point(1)))));
        let bad = SpectrumExpr::LazarJump(Box::new(Family::new(fam)));
        assert!(matches!(bad.validate(), Err(SpectraError::Unsupported(_))));
        let free = SpectrumExpr::Lazar(Stage::Affine { slope: 1, offset: 0 });
        assert!(free.validate().is_err());
    }
}
