//! Countable ordinals below ε₀ in hereditary Cantor normal form.
//!
//! An [`Ordinal`] is a finite sum `ω^e₁·c₁ + … + ω^eₖ·cₖ` with strictly
//! decreasing exponents (themselves ordinals) and positive coefficients.
//! [`ExtOrdinal`] adds the distinguished symbol ∞ used for points of infinite
//! weight; it is never mixed into a normal form.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// One `ω^exponent · coefficient` summand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    exponent: Ordinal,
    coefficient: u64,
}

impl Term {
    pub fn exponent(&self) -> &Ordinal {
        &self.exponent
    }

    pub fn coefficient(&self) -> u64 {
        self.coefficient
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Ordinal {
    terms: Vec<Term>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrdinalError {
    #[error("ordinal literal: {message} at offset {offset} in `{input}`")]
    Syntax {
        input: String,
        offset: usize,
        message: String,
    },
    #[error("ordinal literal `{input}` is not in Cantor normal form ({reason}); pass --normalize to accept it")]
    NotNormal { input: String, reason: String },
    #[error("0 has no fundamental sequence")]
    Zero,
    #[error("coefficient overflow")]
    Overflow,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::nat(1)
    }

    pub fn nat(n: u64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        Ordinal {
            terms: vec![Term {
                exponent: Ordinal::zero(),
                coefficient: n,
            }],
        }
    }

    /// ω.
    pub fn omega() -> Self {
        Self::omega_pow(Ordinal::one())
    }

    /// ω^e.
    pub fn omega_pow(e: Ordinal) -> Self {
        Self::monomial(e, 1)
    }

    /// ω^e · c, or 0 when `c == 0`.
    pub fn monomial(e: Ordinal, c: u64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Ordinal {
            terms: vec![Term {
                exponent: e,
                coefficient: c,
            }],
        }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs, checking the
    /// normal-form invariants.
    pub fn from_terms(terms: Vec<(Ordinal, u64)>) -> Result<Self, String> {
        for w in terms.windows(2) {
            if w[0].0 <= w[1].0 {
                return Err(format!("exponent {} does not exceed {}", w[0].0, w[1].0));
            }
        }
        if terms.iter().any(|(_, c)| *c == 0) {
            return Err("zero coefficient".into());
        }
        Ok(Ordinal {
            terms: terms
                .into_iter()
                .map(|(exponent, coefficient)| Term {
                    exponent,
                    coefficient,
                })
                .collect(),
        })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exponent.is_zero())
    }

    pub fn as_nat(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exponent.is_zero() => Some(t.coefficient),
            _ => None,
        }
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        self.terms.last().is_some_and(|t| !t.exponent.is_zero())
    }

    pub fn successor(&self) -> Self {
        self.add(&Ordinal::one())
    }

    /// α − 1 for a successor α.
    pub fn predecessor(&self) -> Option<Self> {
        if !self.is_successor() {
            return None;
        }
        let mut out = self.clone();
        let last = out.terms.last_mut().expect("successor has a term");
        last.coefficient -= 1;
        if last.coefficient == 0 {
            out.terms.pop();
        }
        Some(out)
    }

    /// Ordinal addition; absorbs every summand of `self` below the leading
    /// exponent of `other`.
    pub fn add(&self, other: &Ordinal) -> Ordinal {
        let Some(lead) = other.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut carry = 0u64;
        for t in &self.terms {
            match t.exponent.cmp(&lead.exponent) {
                Ordering::Greater => terms.push(t.clone()),
                Ordering::Equal => carry = t.coefficient,
                Ordering::Less => break,
            }
        }
        let mut rest = other.terms.iter();
        let first = rest.next().expect("checked non-empty");
        terms.push(Term {
            exponent: first.exponent.clone(),
            coefficient: first.coefficient + carry,
        });
        terms.extend(rest.cloned());
        Ordinal { terms }
    }

    pub fn add_nat(&self, n: u64) -> Ordinal {
        self.add(&Ordinal::nat(n))
    }

    /// ω·α, by left distributivity: every `ω^e·c` becomes `ω^(1+e)·c`.
    pub fn omega_times(&self) -> Ordinal {
        let one = Ordinal::one();
        Ordinal {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exponent: one.add(&t.exponent),
                    coefficient: t.coefficient,
                })
                .collect(),
        }
    }

    /// `1 + α`, which equals α for infinite α.
    pub fn one_plus(&self) -> Ordinal {
        Ordinal::one().add(self)
    }

    /// The standard Cantor-normal-form fundamental sequence of a limit
    /// ordinal, evaluated at `n`.
    pub fn canonical_term(&self, n: u64) -> Option<Ordinal> {
        let last = self.terms.last()?;
        if last.exponent.is_zero() {
            return None;
        }
        let mut prefix = self.clone();
        {
            let l = prefix.terms.last_mut().expect("non-empty");
            l.coefficient -= 1;
            if l.coefficient == 0 {
                prefix.terms.pop();
            }
        }
        let tail = match last.exponent.predecessor() {
            Some(f) => Ordinal::monomial(f, n),
            None => Ordinal::omega_pow(last.exponent.canonical_term(n)?),
        };
        Some(prefix.add(&tail))
    }

    /// The fixed increasing sequence of successor ordinals converging to a
    /// limit ordinal (canonical term plus one); `α − 1` for a successor α.
    pub fn fundamental_successor(&self, n: u64) -> Result<Ordinal, OrdinalError> {
        if self.is_zero() {
            return Err(OrdinalError::Zero);
        }
        if let Some(p) = self.predecessor() {
            return Ok(p);
        }
        Ok(self
            .canonical_term(n)
            .expect("limit ordinal has a fundamental sequence")
            .successor())
    }

    /// Parses the ordinal literal grammar `w^E*C + ... + N`. Non-normal sums
    /// are rejected unless `normalize` is set, in which case they are summed
    /// with ordinal addition.
    pub fn parse_with(input: &str, normalize: bool) -> Result<Ordinal, OrdinalError> {
        let mut p = LiteralParser::new(input);
        let parts = p.sum()?;
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(p.error("unexpected trailing input"));
        }
        assemble(input, parts, normalize)
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let c = a
                .exponent
                .cmp(&b.exponent)
                .then(a.coefficient.cmp(&b.coefficient));
            if c != Ordering::Equal {
                return c;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::nat(n)
    }
}

impl FromStr for Ordinal {
    type Err = OrdinalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ordinal::parse_with(s, false)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coefficient)?;
                continue;
            }
            write!(f, "w")?;
            if t.exponent != Ordinal::one() {
                match t.exponent.as_nat() {
                    Some(k) => write!(f, "^{k}")?,
                    None if t.exponent.terms.len() == 1
                        && t.exponent.terms[0].coefficient == 1
                        && t.exponent.terms[0].exponent == Ordinal::one() =>
                    {
                        write!(f, "^w")?
                    }
                    None => write!(f, "^({})", t.exponent)?,
                }
            }
            if t.coefficient != 1 {
                write!(f, "*{}", t.coefficient)?;
            }
        }
        Ok(())
    }
}

/// An ordinal or the distinguished value ∞, which exceeds every ordinal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtOrdinal {
    Finite(Ordinal),
    Infinity,
}

impl ExtOrdinal {
    pub fn zero() -> Self {
        ExtOrdinal::Finite(Ordinal::zero())
    }

    pub fn as_ordinal(&self) -> Option<&Ordinal> {
        match self {
            ExtOrdinal::Finite(o) => Some(o),
            ExtOrdinal::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtOrdinal::Infinity)
    }

    pub fn add(&self, other: &ExtOrdinal) -> ExtOrdinal {
        match (self, other) {
            (ExtOrdinal::Finite(a), ExtOrdinal::Finite(b)) => ExtOrdinal::Finite(a.add(b)),
            _ => ExtOrdinal::Infinity,
        }
    }

    pub fn add_nat(&self, n: u64) -> ExtOrdinal {
        self.add(&ExtOrdinal::Finite(Ordinal::nat(n)))
    }

    pub fn omega_times(&self) -> ExtOrdinal {
        match self {
            ExtOrdinal::Finite(a) => ExtOrdinal::Finite(a.omega_times()),
            ExtOrdinal::Infinity => ExtOrdinal::Infinity,
        }
    }

    pub fn parse_with(input: &str, normalize: bool) -> Result<Self, OrdinalError> {
        let t = input.trim();
        if t == "inf" || t == "∞" {
            Ok(ExtOrdinal::Infinity)
        } else {
            Ordinal::parse_with(input, normalize).map(ExtOrdinal::Finite)
        }
    }
}

impl From<Ordinal> for ExtOrdinal {
    fn from(o: Ordinal) -> Self {
        ExtOrdinal::Finite(o)
    }
}

impl FromStr for ExtOrdinal {
    type Err = OrdinalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ExtOrdinal::parse_with(s, false)
    }
}

impl fmt::Display for ExtOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtOrdinal::Finite(o) => o.fmt(f),
            ExtOrdinal::Infinity => write!(f, "inf"),
        }
    }
}

impl serde::Serialize for Ordinal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl serde::Serialize for ExtOrdinal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

// Literal parsing. A parsed term keeps its source span so normal-form errors
// can point at it.
struct LiteralParser<'a> {
    input: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> LiteralParser<'a> {
    fn new(input: &'a str) -> Self {
        LiteralParser {
            input,
            chars: input.char_indices().collect(),
            pos: 0,
        }
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|(i, _)| *i)
            .unwrap_or(self.input.len())
    }

    fn error(&self, message: &str) -> OrdinalError {
        OrdinalError::Syntax {
            input: self.input.to_string(),
            offset: self.offset(),
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64, OrdinalError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.chars.get(self.pos).and_then(|(_, c)| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or(OrdinalError::Overflow)?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        Ok(value)
    }

    fn sum(&mut self) -> Result<Vec<(Ordinal, u64)>, OrdinalError> {
        let mut parts = vec![self.term()?];
        while self.eat('+') {
            parts.push(self.term()?);
        }
        Ok(parts)
    }

    fn term(&mut self) -> Result<(Ordinal, u64), OrdinalError> {
        match self.peek() {
            Some('w') | Some('ω') => {
                self.pos += 1;
                let exponent = if self.eat('^') {
                    self.exponent()?
                } else {
                    Ordinal::one()
                };
                let coefficient = if self.eat('*') { self.number()? } else { 1 };
                Ok((exponent, coefficient))
            }
            Some(c) if c.is_ascii_digit() => Ok((Ordinal::zero(), self.number()?)),
            _ => Err(self.error("expected `w` or a number")),
        }
    }

    fn exponent(&mut self) -> Result<Ordinal, OrdinalError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let parts = self.sum()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                assemble(self.input, parts, false)
            }
            Some('w') | Some('ω') => {
                // w^w^2 associates to the right.
                self.pos += 1;
                let inner = if self.eat('^') {
                    self.exponent()?
                } else {
                    Ordinal::one()
                };
                Ok(Ordinal::omega_pow(inner))
            }
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::nat(self.number()?)),
            _ => Err(self.error("expected an exponent")),
        }
    }
}

fn assemble(
    input: &str,
    parts: Vec<(Ordinal, u64)>,
    normalize: bool,
) -> Result<Ordinal, OrdinalError> {
    if normalize {
        return Ok(parts
            .into_iter()
            .fold(Ordinal::zero(), |acc, (e, c)| acc.add(&Ordinal::monomial(e, c))));
    }
    let not_normal = |reason: String| OrdinalError::NotNormal {
        input: input.trim().to_string(),
        reason,
    };
    if parts.len() == 1 && parts[0] == (Ordinal::zero(), 0) {
        return Ok(Ordinal::zero());
    }
    for (i, (e, c)) in parts.iter().enumerate() {
        if *c == 0 {
            return Err(not_normal(format!("term {} has coefficient 0", i + 1)));
        }
        if i + 1 < parts.len() && e.is_zero() {
            return Err(not_normal("finite part must come last".into()));
        }
    }
    Ordinal::from_terms(parts).map_err(not_normal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn compare_examples() {
        assert!(o("w+1") < o("w*2"));
        assert!(o("w^2") > o("w*5+3"));
        assert_eq!(o("0").cmp(&o("0")), Ordering::Equal);
        assert!(ExtOrdinal::Infinity > ExtOrdinal::Finite(o("w^(w^w)")));
    }

    #[test]
    fn add_examples() {
        assert_eq!(o("w").add(&o("1")), o("w+1"));
        assert_eq!(o("3").add(&o("w")), o("w"));
        assert_eq!(o("w*2+1").add(&o("w")), o("w*3"));
    }

    #[test]
    fn omega_times_examples() {
        assert_eq!(o("3").omega_times(), o("w*3"));
        assert_eq!(o("w+1").omega_times(), o("w^2+w"));
        assert_eq!(o("0").omega_times(), o("0"));
    }

    #[test]
    fn fundamental_examples() {
        for n in 0..6 {
            assert_eq!(o("w").fundamental_successor(n).unwrap(), Ordinal::nat(n + 1));
            assert_eq!(
                o("w*2").fundamental_successor(n).unwrap(),
                o("w").add_nat(n + 1)
            );
            assert_eq!(o("w+1").fundamental_successor(n).unwrap(), o("w"));
        }
        assert_eq!(o("0").fundamental_successor(3), Err(OrdinalError::Zero));
        assert_eq!(
            o("w^w").fundamental_successor(2).unwrap(),
            o("w^2+1")
        );
    }

    #[test]
    fn literal_forms() {
        assert_eq!(o("w^2*3 + w*1 + 4").to_string(), "w^2*3 + w + 4");
        assert_eq!(o("w^(w+1)*2").to_string(), "w^(w + 1)*2");
        assert_eq!(o("w^w").to_string(), "w^w");
        assert_eq!(o(" w * 2 + 3 ").to_string(), "w*2 + 3");
        assert!(matches!(
            "w + w^2".parse::<Ordinal>(),
            Err(OrdinalError::NotNormal { .. })
        ));
        assert!(matches!(
            "3 + w".parse::<Ordinal>(),
            Err(OrdinalError::NotNormal { .. })
        ));
        assert_eq!(Ordinal::parse_with("w + w^2", true).unwrap(), o("w^2"));
        assert_eq!(Ordinal::parse_with("w + w", true).unwrap(), o("w*2"));
        let err = "w^*2".parse::<Ordinal>().unwrap_err();
        assert!(matches!(err, OrdinalError::Syntax { offset: 2, .. }));
        assert_eq!("inf".parse::<ExtOrdinal>().unwrap(), ExtOrdinal::Infinity);
    }

    #[test]
    fn infinity_absorbs() {
        let inf = ExtOrdinal::Infinity;
        assert_eq!(inf.add(&ExtOrdinal::zero()), ExtOrdinal::Infinity);
        assert_eq!(ExtOrdinal::zero().add(&inf), ExtOrdinal::Infinity);
        assert_eq!(inf.omega_times(), ExtOrdinal::Infinity);
    }
}
