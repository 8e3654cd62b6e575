//! The s-expression syntax for constructions.
//!
//! ```text
//! (lazar A) (taylor A) (tensor E D) (c0sum E ...) (c0sum n -> E)
//! (unitize E) (biunitize E) (lazarjump n -> E) (taylorjump n -> E)
//! (atom FILE) (atom {json}) (trunc E N)
//! ```
//!
//! Inside a family body a stage may be `λ[n]` or affine in `n` and a matrix
//! size may be affine in `n`.

use std::path::Path;

use crate::ordinal::Ordinal;
use crate::topology::{SpaceFile, Weight};

use super::expr::{check_public_stage, Atom, AtomSource, Degree, Family, SpectrumExpr, Stage};
use super::SpectraError;

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    normalize: bool,
    /// Family bodies entered; limit stages appear there in unfolded recursions.
    bodies: usize,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, SpectraError> {
    Err(SpectraError::Parse {
        offset,
        message: message.into(),
    })
}

/// Parses and validates an expression. Atom files are resolved against the
/// working directory.
pub fn parse_expr(text: &str, normalize: bool) -> Result<SpectrumExpr, SpectraError> {
    let mut p = Parser {
        text,
        pos: 0,
        normalize,
        bodies: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return err(p.pos, "trailing input after the expression");
    }
    e.validate()?;
    Ok(e)
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    fn expect(&mut self, c: char) -> Result<(), SpectraError> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            err(self.pos, format!("expected `{c}`"))
        }
    }

    fn word(&mut self) -> (usize, &'a str) {
        self.skip_ws();
        let start = self.pos;
        let r = self.rest();
        let len = r
            .find(|c: char| c.is_whitespace() || c == '(' || c == ')')
            .unwrap_or(r.len());
        self.pos += len;
        (start, &r[..len])
    }

    /// Raw text up to the `)` closing the current form, nested parens kept.
    fn raw_arg(&mut self) -> Result<(usize, &'a str), SpectraError> {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0usize;
        for (i, c) in self.rest().char_indices() {
            match c {
                '(' => depth += 1,
                ')' if depth == 0 => {
                    self.pos = start + i;
                    let s = self.text[start..self.pos].trim_end();
                    if s.is_empty() {
                        return err(start, "missing argument");
                    }
                    return Ok((start, s));
                }
                ')' => depth -= 1,
                _ => {}
            }
        }
        err(self.text.len(), "unclosed `(`")
    }

    /// `n ->` introducing a family body, if present.
    fn binder(&mut self) -> bool {
        let save = self.pos;
        let (_, w) = self.word();
        if w == "n" {
            self.skip_ws();
            if self.rest().starts_with("->") {
                self.pos += 2;
                return true;
            }
        }
        self.pos = save;
        false
    }

    fn expr(&mut self) -> Result<SpectrumExpr, SpectraError> {
        self.expect('(')?;
        let (at, head) = self.word();
        let e = match head {
            "lazar" | "taylor" => {
                let (off, raw) = self.raw_arg()?;
                let stage = self.stage(off, raw)?;
                if head == "lazar" {
                    SpectrumExpr::Lazar(stage)
                } else {
                    SpectrumExpr::Taylor(stage)
                }
            }
            "tensor" => {
                let inner = self.expr()?;
                let (off, raw) = self.raw_arg()?;
                SpectrumExpr::Tensor(Box::new(inner), parse_degree(off, raw)?)
            }
            "c0sum" => {
                if self.binder() {
                    SpectrumExpr::C0SumFamily(Box::new(self.body()?))
                } else {
                    let mut children = Vec::new();
                    loop {
                        self.skip_ws();
                        if self.rest().starts_with(')') || self.rest().is_empty() {
                            break;
                        }
                        children.push(self.expr()?);
                    }
                    if children.is_empty() {
                        return err(self.pos, "c0sum needs at least one summand");
                    }
                    SpectrumExpr::C0Sum(children)
                }
            }
            "lazarjump" | "taylorjump" => {
                if !self.binder() {
                    return err(self.pos, format!("{head} expects `n -> BODY`"));
                }
                let fam = Box::new(self.body()?);
                if head == "lazarjump" {
                    SpectrumExpr::LazarJump(fam)
                } else {
                    SpectrumExpr::TaylorJump(fam)
                }
            }
            "unitize" => SpectrumExpr::Unitize(Box::new(self.expr()?)),
            "biunitize" => SpectrumExpr::BiUnitize(Box::new(self.expr()?)),
            "atom" => SpectrumExpr::atom(self.atom()?),
            "trunc" => {
                let inner = self.expr()?;
                let (off, raw) = self.raw_arg()?;
                let k = raw
                    .parse::<u64>()
                    .or_else(|_| err(off, format!("`{raw}` is not a fuel value")))?;
                SpectrumExpr::Trunc(Box::new(inner), k)
            }
            "" => return err(at, "expected a form name"),
            other => return err(at, format!("unknown form `{other}`")),
        };
        self.expect(')')?;
        Ok(e)
    }

    fn body(&mut self) -> Result<Family, SpectraError> {
        self.bodies += 1;
        let e = self.expr();
        self.bodies -= 1;
        Ok(Family::new(e?))
    }

    fn ordinal(&self, off: usize, raw: &str) -> Result<Ordinal, SpectraError> {
        Ordinal::parse_with(raw, self.normalize).or_else(|e| err(off, e.to_string()))
    }

    fn stage(&self, off: usize, raw: &str) -> Result<Stage, SpectraError> {
        if let Some(base) = raw.strip_suffix("[n]") {
            let base = base.trim();
            let base = base
                .strip_prefix('(')
                .and_then(|b| b.strip_suffix(')'))
                .unwrap_or(base);
            let l = self.ordinal(off, base)?;
            if !l.is_limit() {
                return err(off, format!("`{l}[n]` needs a limit ordinal"));
            }
            return Ok(Stage::Fundamental(l));
        }
        if raw.contains('n') && raw != "inf" {
            let d = parse_degree(off, raw)?;
            if !d.depends_on_index() {
                return err(off, "affine stage must mention n");
            }
            return Ok(Stage::Affine {
                slope: d.slope,
                offset: d.offset,
            });
        }
        let a = self.ordinal(off, raw)?;
        if self.bodies == 0 || !a.is_limit() {
            check_public_stage(&a).or_else(|e| err(off, e.to_string()))?;
        }
        Ok(Stage::Fixed(a))
    }

    fn atom(&mut self) -> Result<Atom, SpectraError> {
        self.skip_ws();
        let start = self.pos;
        let (loaded, source) = if self.rest().starts_with('{') {
            let len = json_object_len(self.rest()).ok_or(SpectraError::Parse {
                offset: start,
                message: "unterminated inline space".into(),
            })?;
            self.pos += len;
            let json = &self.text[start..self.pos];
            (SpaceFile::parse(json), AtomSource::Inline)
        } else {
            let (_, path) = self.word();
            if path.is_empty() {
                return err(start, "atom needs a file or an inline space");
            }
            (SpaceFile::read(Path::new(path)), AtomSource::File(path.to_string()))
        };
        let loaded = loaded.or_else(|e| err(start, e.to_string()))?;
        let weight = loaded
            .weight
            .unwrap_or_else(|| Weight::constant(&loaded.space, 1));
        Atom::new(loaded.space, weight, source).or_else(|e| err(start, e.to_string()))
    }
}

/// Byte length of the JSON object at the start of `s`.
fn json_object_len(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    let mut in_str = false;
    let mut escaped = false;
    for (i, c) in s.char_indices() {
        if in_str {
            match c {
                _ if escaped => escaped = false,
                '\\' => escaped = true,
                '"' => in_str = false,
                _ => {}
            }
            continue;
        }
        match c {
            '"' => in_str = true,
            '{' | '[' => depth += 1,
            '}' | ']' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i + 1);
                }
            }
            _ => {}
        }
    }
    None
}

/// `3`, `n`, `2n`, `2*n+1`, `n+4`.
fn parse_degree(off: usize, raw: &str) -> Result<Degree, SpectraError> {
    let compact: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
    let (mut slope, mut offset) = (0u64, 0u64);
    for term in compact.split('+') {
        let bad = || err(off, format!("`{raw}` is not a matrix size"));
        if let Some(coef) = term.strip_suffix('n') {
            let coef = coef.strip_suffix('*').unwrap_or(coef);
            slope += if coef.is_empty() {
                1
            } else {
                coef.parse::<u64>().or_else(|_| bad())?
            };
        } else {
            offset += term.parse::<u64>().or_else(|_| bad())?;
        }
    }
    if slope == 0 && offset == 0 {
        return err(off, "matrix size must be positive");
    }
    Ok(Degree::affine(slope, offset))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::expr::{build_lazar, build_taylor};

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn forms() {
        let e = parse_expr("(tensor (lazar 2) 3)", false).unwrap();
        assert_eq!(e, SpectrumExpr::tensor(SpectrumExpr::Lazar(Stage::Fixed(o("2"))), 3));
        let e = parse_expr("(lazar w^2 + 1)", false).unwrap();
        assert_eq!(e, SpectrumExpr::Lazar(Stage::Fixed(o("w^2+1"))));
        let e = parse_expr("(c0sum n -> (tensor (lazar w[n]) 2n+1))", false).unwrap();
        assert_eq!(e.to_string(), "(c0sum n -> (tensor (lazar w[n]) 2n+1))");
        let e = parse_expr(r#"(atom {"points":["a","b"],"leq":[["a","b"]],"weight":{"a":1,"b":2}})"#, false).unwrap();
        assert_eq!(parse_expr(&e.to_string(), false).unwrap(), e);
    }

    #[test]
    fn round_trip_of_builders() {
        for a in ["1", "2", "w+1", "w*2+3"] {
            for e in [build_lazar(&o(a)).unwrap(), build_taylor(&o(a)).unwrap()] {
                assert_eq!(parse_expr(&e.to_string(), false).unwrap(), e);
            }
        }
    }

    #[test]
    fn errors_carry_offsets() {
        let bad = |s: &str| match parse_expr(s, false) {
            Err(SpectraError::Parse { offset, .. }) => offset,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(bad("(lazar w)"), 7);
        assert_eq!(bad("(frob 1)"), 1);
        assert_eq!(bad("(tensor (lazar 1) 0)"), 18);
        assert_eq!(bad("(lazar 1"), 8);
        assert_eq!(bad("(lazar 1 + w + 1)"), 7);
        assert!(parse_expr("(lazar 1 + w + 1)", true).is_ok());
        assert!(matches!(
            parse_expr("(lazar w[n])", false),
            Err(SpectraError::Malformed(_))
        ));
    }
}
