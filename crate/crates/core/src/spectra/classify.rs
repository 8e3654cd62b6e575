use crate::ordinal::{ExtOrdinal, Ordinal};
use crate::rank::Gap;
use crate::topology::PointSet;

use super::expr::SpectrumExpr;
use super::sections::{fell_ideal_set, fell_ranks};
use super::truncate::truncate;
use super::{analyze, finite_part, Analysis, SpectraError};

/// Subhomogeneity and type-I verdicts at a bound `β`.
#[derive(Clone, Debug)]
pub struct Classification {
    pub analysis: Analysis,
    pub beta: Ordinal,
}

pub fn classify(e: &SpectrumExpr, beta: &Ordinal) -> Result<Classification, SpectraError> {
    Ok(Classification {
        analysis: analyze(e)?,
        beta: beta.clone(),
    })
}

impl Classification {
    /// `β`-subhomogeneous iff the Pedersen rank is at most `β`.
    pub fn is_subhomogeneous(&self) -> Result<bool, Gap> {
        Ok(self.analysis.pedersen_rank()? <= ExtOrdinal::Finite(self.beta.clone()))
    }

    /// `β`-type I iff the Fell rank is at most `1 + β`.
    pub fn is_type_one(&self) -> Result<bool, Gap> {
        let f = self.analysis.fell_rank()?;
        Ok(finite_part(&f).is_some_and(|f| *f <= self.beta.one_plus()))
    }

    /// The open set of points of Fell rank at most `β`, for expressions
    /// that denote a finite space.
    pub fn fell_ideal(&self) -> Result<Option<(Vec<String>, PointSet)>, SpectraError> {
        let (space, weight) = match &self.analysis.expr {
            SpectrumExpr::Atom(a) => (a.space.clone(), a.weight.clone()),
            e @ SpectrumExpr::Trunc(..) => {
                let t = truncate(e, 1)?;
                (t.space, t.weight)
            }
            _ => return Ok(None),
        };
        let ranks = fell_ranks(&space, &weight);
        let beta = ExtOrdinal::Finite(self.beta.clone());
        let ideal = fell_ideal_set(&space, &ranks, &beta);
        if !space.is_open(&ideal) {
            return Err(SpectraError::Internal(format!(
                "points of Fell rank at most {beta} do not form an open set"
            )));
        }
        Ok(Some((space.names_of(&ideal), ideal)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::expr::{build_lazar, build_taylor, Atom};

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn lazar_and_taylor_verdicts() {
        let l = classify(&build_lazar(&o("2")).unwrap(), &o("w*2+1")).unwrap();
        assert!(l.is_subhomogeneous().unwrap());
        assert!(l.is_type_one().unwrap());
        let l = classify(&build_lazar(&o("2")).unwrap(), &o("w*2")).unwrap();
        assert!(!l.is_subhomogeneous().unwrap());
        let k = classify(&build_taylor(&o("1")).unwrap(), &o("w+1")).unwrap();
        assert!(k.is_type_one().unwrap());
        let k = classify(&build_taylor(&o("1")).unwrap(), &o("w")).unwrap();
        assert!(!k.is_type_one().unwrap());
    }

    #[test]
    fn ideal_of_an_atom() {
        let c = classify(&SpectrumExpr::atom(Atom::point(3)), &o("0")).unwrap();
        assert_eq!(c.fell_ideal().unwrap().unwrap().0, Vec::<String>::new());
        let c = classify(&SpectrumExpr::atom(Atom::point(3)), &o("1")).unwrap();
        assert_eq!(c.fell_ideal().unwrap().unwrap().0, ["x"]);
    }
}
