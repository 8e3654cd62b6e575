//! Closed-form sequences indexed by `n ≥ 1`.
//!
//! Every supported form is nondecreasing in `n`, so its lim sup over tails
//! is its limit: either an eventually constant value or the supremum of a
//! sequence that never attains it.

use std::fmt;

use crate::ordinal::{ExtOrdinal, Ordinal};
use crate::topology::WeightValue;

use super::RankError;

/// A natural-valued sequence: a polynomial in `n` with nonnegative
/// coefficients, or the constant ∞.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NatSeq {
    /// `coefficients[i]` multiplies `n^i`; trailing zeros trimmed.
    Poly(Vec<u64>),
    Infinite,
}

impl NatSeq {
    pub fn constant(c: u64) -> Self {
        NatSeq::Poly(vec![c]).trimmed()
    }

    /// `a·n + b`.
    pub fn affine(a: u64, b: u64) -> Self {
        NatSeq::Poly(vec![b, a]).trimmed()
    }

    pub fn from_weight(w: WeightValue) -> Self {
        match w {
            WeightValue::Finite(k) => NatSeq::constant(k),
            WeightValue::Infinite => NatSeq::Infinite,
        }
    }

    fn trimmed(self) -> Self {
        match self {
            NatSeq::Poly(mut c) => {
                while c.len() > 1 && *c.last().unwrap() == 0 {
                    c.pop();
                }
                if c.is_empty() {
                    c.push(0);
                }
                NatSeq::Poly(c)
            }
            inf => inf,
        }
    }

    pub fn eval(&self, n: u64) -> WeightValue {
        match self {
            NatSeq::Infinite => WeightValue::Infinite,
            NatSeq::Poly(c) => {
                let mut acc: u64 = 0;
                for &k in c.iter().rev() {
                    acc = acc.saturating_mul(n).saturating_add(k);
                }
                WeightValue::Finite(acc)
            }
        }
    }

    /// The constant value, if the sequence does not depend on `n`.
    pub fn as_constant(&self) -> Option<WeightValue> {
        match self {
            NatSeq::Infinite => Some(WeightValue::Infinite),
            NatSeq::Poly(c) if c.len() == 1 => Some(WeightValue::Finite(c[0])),
            NatSeq::Poly(_) => None,
        }
    }

    /// Bounded by a natural number.
    pub fn is_bounded(&self) -> bool {
        matches!(self.as_constant(), Some(WeightValue::Finite(_)))
    }

    pub fn mul(&self, other: &NatSeq) -> NatSeq {
        match (self, other) {
            (NatSeq::Poly(a), NatSeq::Poly(b)) => {
                let mut c = vec![0u64; a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    for (j, y) in b.iter().enumerate() {
                        c[i + j] = c[i + j].saturating_add(x.saturating_mul(*y));
                    }
                }
                NatSeq::Poly(c).trimmed()
            }
            (a, b) if a.is_zero() || b.is_zero() => NatSeq::constant(0),
            _ => NatSeq::Infinite,
        }
    }

    pub fn add(&self, other: &NatSeq) -> NatSeq {
        match (self, other) {
            (NatSeq::Poly(a), NatSeq::Poly(b)) => {
                let len = a.len().max(b.len());
                let c = (0..len)
                    .map(|i| a.get(i).unwrap_or(&0).saturating_add(*b.get(i).unwrap_or(&0)))
                    .collect();
                NatSeq::Poly(c).trimmed()
            }
            _ => NatSeq::Infinite,
        }
    }

    /// Pointwise maximum, when one side dominates for every `n ≥ 1`.
    ///
    /// Domination is decided by substituting `n = m + 1` and comparing
    /// coefficients, which is exact whenever one side is constant.
    pub fn max(&self, other: &NatSeq) -> Result<NatSeq, RankError> {
        match (self, other) {
            (NatSeq::Infinite, _) | (_, NatSeq::Infinite) => Ok(NatSeq::Infinite),
            (NatSeq::Poly(a), NatSeq::Poly(b)) => {
                if dominates(a, b) {
                    Ok(self.clone())
                } else if dominates(b, a) {
                    Ok(other.clone())
                } else {
                    Err(RankError::UnsupportedTail(format!(
                        "no closed form for max({self}, {other})"
                    )))
                }
            }
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, NatSeq::Poly(c) if c == &[0])
    }

    /// Limit as an extended ordinal: the constant, ω when unbounded, or ∞.
    pub fn limit(&self) -> Limit {
        match self.as_constant() {
            Some(WeightValue::Finite(k)) => Limit::Const(ExtOrdinal::Finite(k.into())),
            Some(WeightValue::Infinite) => Limit::Const(ExtOrdinal::Infinity),
            None => Limit::Increasing(Ordinal::omega()),
        }
    }
}

impl fmt::Display for NatSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NatSeq::Infinite => write!(f, "inf"),
            NatSeq::Poly(c) => {
                let mut first = true;
                for (i, k) in c.iter().enumerate().rev() {
                    if *k == 0 && !(i == 0 && first) {
                        continue;
                    }
                    if !first {
                        write!(f, "+")?;
                    }
                    first = false;
                    match i {
                        0 => write!(f, "{k}")?,
                        1 if *k == 1 => write!(f, "n")?,
                        1 => write!(f, "{k}n")?,
                        _ if *k == 1 => write!(f, "n^{i}")?,
                        _ => write!(f, "{k}n^{i}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

/// `p(m+1) - q(m+1)` has no negative coefficient.
fn dominates(p: &[u64], q: &[u64]) -> bool {
    let len = p.len().max(q.len());
    let d: Vec<i128> = (0..len)
        .map(|i| *p.get(i).unwrap_or(&0) as i128 - *q.get(i).unwrap_or(&0) as i128)
        .collect();
    (0..len).all(|j| {
        let mut binom: i128 = 1;
        let mut acc: i128 = 0;
        for (i, di) in d.iter().enumerate().skip(j) {
            if i > j {
                binom = binom * i as i128 / (i - j) as i128;
            }
            acc += di * binom;
        }
        acc >= 0
    })
}

/// Eventual behavior of a nondecreasing ordinal sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Limit {
    /// Eventually equal to this value.
    Const(ExtOrdinal),
    /// Increasing towards this limit ordinal without reaching it.
    Increasing(Ordinal),
}

impl Limit {
    /// The supremum (equal to the lim sup for nondecreasing sequences).
    pub fn value(&self) -> ExtOrdinal {
        match self {
            Limit::Const(c) => c.clone(),
            Limit::Increasing(s) => ExtOrdinal::Finite(s.clone()),
        }
    }

    fn join(a: Limit, b: Limit) -> Limit {
        match (a, b) {
            (Limit::Const(c), Limit::Const(d)) => Limit::Const(c.max(d)),
            (Limit::Const(c), Limit::Increasing(s)) | (Limit::Increasing(s), Limit::Const(c)) => {
                if c >= ExtOrdinal::Finite(s.clone()) {
                    Limit::Const(c)
                } else {
                    Limit::Increasing(s)
                }
            }
            (Limit::Increasing(s), Limit::Increasing(t)) => Limit::Increasing(s.max(t)),
        }
    }
}

/// An ordinal-valued closed form in the index `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrdSeq {
    Const(ExtOrdinal),
    /// `n ↦ λ_n`, the fixed successor sequence converging to λ (or λ − 1 for
    /// a successor λ).
    Fundamental(Ordinal),
    Nat(NatSeq),
    OmegaTimes(Box<OrdSeq>),
    /// `x_n + k_n` with finite `k_n`.
    PlusNat(Box<OrdSeq>, NatSeq),
    /// `c + x_n`.
    ConstPlus(Ordinal, Box<OrdSeq>),
    Max(Box<OrdSeq>, Box<OrdSeq>),
}

impl OrdSeq {
    pub fn constant(o: impl Into<ExtOrdinal>) -> Self {
        OrdSeq::Const(o.into())
    }

    pub fn omega_times(self) -> Self {
        match self {
            OrdSeq::Const(c) => OrdSeq::Const(c.omega_times()),
            s => OrdSeq::OmegaTimes(Box::new(s)),
        }
    }

    pub fn plus_nat(self, k: NatSeq) -> Self {
        match (self, k.as_constant()) {
            (OrdSeq::Const(c), Some(WeightValue::Finite(m))) => OrdSeq::Const(c.add_nat(m)),
            (s, _) => OrdSeq::PlusNat(Box::new(s), k),
        }
    }

    pub fn max(self, other: OrdSeq) -> Self {
        match (self, other) {
            (OrdSeq::Const(a), OrdSeq::Const(b)) => OrdSeq::Const(a.max(b)),
            (a, b) if a == b => a,
            (a, b) => OrdSeq::Max(Box::new(a), Box::new(b)),
        }
    }

    pub fn eval(&self, n: u64) -> Result<ExtOrdinal, RankError> {
        Ok(match self {
            OrdSeq::Const(c) => c.clone(),
            OrdSeq::Fundamental(l) => l
                .fundamental_successor(n)
                .map(ExtOrdinal::Finite)
                .map_err(|e| RankError::UnsupportedTail(e.to_string()))?,
            OrdSeq::Nat(k) => match k.eval(n) {
                WeightValue::Finite(v) => ExtOrdinal::Finite(v.into()),
                WeightValue::Infinite => ExtOrdinal::Infinity,
            },
            OrdSeq::OmegaTimes(x) => x.eval(n)?.omega_times(),
            OrdSeq::PlusNat(x, k) => match k.eval(n) {
                WeightValue::Finite(v) => x.eval(n)?.add_nat(v),
                WeightValue::Infinite => ExtOrdinal::Infinity,
            },
            OrdSeq::ConstPlus(c, x) => ExtOrdinal::Finite(c.clone()).add(&x.eval(n)?),
            OrdSeq::Max(a, b) => a.eval(n)?.max(b.eval(n)?),
        })
    }

    /// The eventual behavior, derived from the form alone.
    pub fn limit(&self) -> Result<Limit, RankError> {
        Ok(match self {
            OrdSeq::Const(c) => Limit::Const(c.clone()),
            OrdSeq::Fundamental(l) => {
                if l.is_zero() {
                    return Err(RankError::UnsupportedTail(
                        "fundamental sequence of 0".into(),
                    ));
                }
                match l.predecessor() {
                    Some(p) => Limit::Const(p.into()),
                    None => Limit::Increasing(l.clone()),
                }
            }
            OrdSeq::Nat(k) => k.limit(),
            OrdSeq::OmegaTimes(x) => match x.limit()? {
                Limit::Const(c) => Limit::Const(c.omega_times()),
                Limit::Increasing(s) => Limit::Increasing(s.omega_times()),
            },
            OrdSeq::PlusNat(x, k) => match (x.limit()?, k.limit()) {
                (_, Limit::Const(ExtOrdinal::Infinity)) => Limit::Const(ExtOrdinal::Infinity),
                (Limit::Const(c), Limit::Const(m)) => Limit::Const(c.add(&m)),
                (Limit::Const(ExtOrdinal::Infinity), _) => Limit::Const(ExtOrdinal::Infinity),
                (Limit::Const(ExtOrdinal::Finite(c)), Limit::Increasing(w)) => {
                    Limit::Increasing(c.add(&w))
                }
                // x_n < s with s a limit, so x_n + k < s for finite k.
                (Limit::Increasing(s), _) => Limit::Increasing(s),
            },
            OrdSeq::ConstPlus(c, x) => match x.limit()? {
                Limit::Const(d) => Limit::Const(ExtOrdinal::Finite(c.clone()).add(&d)),
                Limit::Increasing(s) => Limit::Increasing(c.add(&s)),
            },
            OrdSeq::Max(a, b) => Limit::join(a.limit()?, b.limit()?),
        })
    }
}

impl fmt::Display for OrdSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrdSeq::Const(c) => write!(f, "{c}"),
            OrdSeq::Fundamental(l) => write!(f, "({l})[n]"),
            OrdSeq::Nat(k) => write!(f, "{k}"),
            OrdSeq::OmegaTimes(x) => write!(f, "w*({x})"),
            OrdSeq::PlusNat(x, k) => write!(f, "({x}) + {k}"),
            OrdSeq::ConstPlus(c, x) => write!(f, "{c} + ({x})"),
            OrdSeq::Max(a, b) => write!(f, "max({a}, {b})"),
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
    fn nat_poly_arithmetic() {
        let n = NatSeq::affine(1, 0);
        let sq = n.mul(&n);
        assert_eq!(sq.eval(3), WeightValue::Finite(9));
        assert_eq!(sq.to_string(), "n^2");
        assert!(NatSeq::constant(4).is_bounded());
        assert!(!n.is_bounded());
        assert_eq!(NatSeq::affine(2, 1).add(&NatSeq::constant(3)).to_string(), "2n+4");
        assert!(NatSeq::affine(1, 0).max(&NatSeq::constant(3)).is_err());
        assert_eq!(NatSeq::affine(1, 0).max(&NatSeq::constant(1)).unwrap(), NatSeq::affine(1, 0));
        assert_eq!(n.max(&NatSeq::affine(0, 1)).unwrap(), n);
        assert_eq!(sq.max(&NatSeq::affine(2, 0)).ok(), None);
        assert_eq!(sq.max(&NatSeq::affine(1, 0)).unwrap(), sq);
    }

    #[test]
    fn limits_of_forms() {
        assert_eq!(
            OrdSeq::Fundamental(o("w*2")).limit().unwrap(),
            Limit::Increasing(o("w*2"))
        );
        assert_eq!(
            OrdSeq::Fundamental(o("w+1")).limit().unwrap(),
            Limit::Const(o("w").into())
        );
        let sigma = OrdSeq::constant(o("w*3")).plus_nat(NatSeq::affine(1, 1));
        assert_eq!(sigma.limit().unwrap(), Limit::Increasing(o("w*4")));
        assert_eq!(sigma.eval(2).unwrap(), ExtOrdinal::Finite(o("w*3+3")));
        let lam = OrdSeq::Fundamental(o("w^2")).omega_times();
        assert_eq!(lam.limit().unwrap(), Limit::Increasing(o("w^3")));
        let m = OrdSeq::constant(o("w")).max(OrdSeq::Fundamental(o("w*2")));
        assert_eq!(m.limit().unwrap(), Limit::Increasing(o("w*2")));
        let m = OrdSeq::constant(o("w*2")).max(OrdSeq::Fundamental(o("w*2")));
        assert_eq!(m.limit().unwrap(), Limit::Const(o("w*2").into()));
    }
}
