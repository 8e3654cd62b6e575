//! Rank reports in text, JSON and DOT.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::ordinal::ExtOrdinal;
use crate::rank::{rank_all, Coherence, Gap, PointRank};
use crate::spectra::sections::fell_ranks;
use crate::spectra::{truncate, Analysis, Origin, Provenance, RuleEngine, SpectraError, SpectrumExpr};
use crate::topology::{FiniteSpace, WeightValue};

/// `coherent` is `true`, `false` (gap), `"weight-peak"` or `"infinite"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CoherentField {
    Flag(bool),
    Note(&'static str),
}

impl From<&Coherence> for CoherentField {
    fn from(c: &Coherence) -> Self {
        match c {
            Coherence::Coherent => CoherentField::Flag(true),
            Coherence::Gap(_) => CoherentField::Flag(false),
            Coherence::WeightPeak => CoherentField::Note("weight-peak"),
            Coherence::Infinite => CoherentField::Note("infinite"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GapReport {
    pub kind: String,
    pub required: Option<String>,
    pub attained: Option<String>,
    pub message: String,
}

impl From<&Gap> for GapReport {
    fn from(g: &Gap) -> Self {
        GapReport {
            kind: serde_json::to_value(&g.kind)
                .ok()
                .and_then(|v| v.as_str().map(str::to_string))
                .unwrap_or_default(),
            required: g.required.as_ref().map(ToString::to_string),
            attained: g.attained.as_ref().map(ToString::to_string),
            message: g.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PointReport {
    pub name: String,
    pub weight: WeightValue,
    pub order: Option<String>,
    pub rank: Option<String>,
    pub coherent: CoherentField,
    /// `interior`, `adjoined` or `glue` for truncations; `atom` otherwise.
    pub origin: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fell: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap: Option<GapReport>,
}

impl PointReport {
    fn new(name: &str, p: &PointRank, origin: &'static str, fell: Option<&ExtOrdinal>) -> Self {
        PointReport {
            name: name.to_string(),
            weight: p.weight,
            order: p.order.as_ref().map(ToString::to_string),
            rank: p.rank.as_ref().map(ToString::to_string),
            coherent: (&p.coherence).into(),
            origin,
            fell: fell.map(ToString::to_string),
            gap: p.gap_info().map(Into::into),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RankValue {
    pub value: Option<String>,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProfileReport {
    pub order_strict_sup: Option<String>,
    pub rank_strict_sup: Option<String>,
    pub weight_sup: WeightValue,
}

/// The per-point table: exact for finite spaces, a truncation otherwise.
#[derive(Clone, Debug, Serialize)]
pub struct PointTable {
    /// `None` for a finite space, the fuel for a truncation.
    pub fuel: Option<u64>,
    pub points: Vec<PointReport>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RankReport {
    pub expression: String,
    pub seed: u64,
    pub fuel: u64,
    pub pedersen: RankValue,
    pub oracle_agrees: bool,
    pub fell: RankValue,
    pub axioms_checked: usize,
    pub profile: ProfileReport,
    pub designated: Vec<PointReport>,
    pub table: Option<PointTable>,
    /// Why the table is missing, when it is.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table_note: Option<String>,
    pub gap: Option<GapReport>,
}

fn finite_table(space: &FiniteSpace, weight: &crate::topology::Weight) -> PointTable {
    let ranks = rank_all(space, weight);
    let fell = fell_ranks(space, weight);
    PointTable {
        fuel: None,
        points: space
            .points()
            .map(|p| PointReport::new(space.name(p), &ranks[p], "atom", Some(&fell[p])))
            .collect(),
        edges: edges(space),
    }
}

fn edges(space: &FiniteSpace) -> Vec<[String; 2]> {
    space
        .relation_pairs()
        .into_iter()
        .map(|(a, b)| [space.name(a).to_string(), space.name(b).to_string()])
        .collect()
}

fn truncated_table(e: &SpectrumExpr, fuel: u64) -> Result<PointTable, SpectraError> {
    let t = truncate(e, fuel)?;
    let finite = rank_all(&t.space, &t.weight);
    let mut rules = RuleEngine::new();
    let mut points = Vec::with_capacity(t.space.len());
    for (p, origin) in t.origins.iter().enumerate() {
        let name = t.space.name(p);
        points.push(match origin {
            Origin::Interior { .. } => PointReport::new(name, &finite[p], "interior", None),
            Origin::Adjoined { node, label, degree } => {
                let rank = rules.adjoined_rank(node, label, *degree)?;
                let kind = if label == "glue" { "glue" } else { "adjoined" };
                PointReport::new(name, &rank, kind, None)
            }
        });
    }
    Ok(PointTable {
        fuel: Some(fuel),
        points,
        edges: edges(&t.space),
    })
}

impl RankReport {
    pub fn build(a: &Analysis, seed: u64, fuel: u64) -> RankReport {
        let p = &a.pedersen.profile;
        let (table, table_note) = match &a.expr {
            SpectrumExpr::Atom(atom) => (Some(finite_table(&atom.space, &atom.weight)), None),
            e => match truncated_table(e, fuel) {
                Ok(t) => (Some(t), None),
                Err(err) => (None, Some(err.to_string())),
            },
        };
        RankReport {
            expression: a.expr.to_string(),
            seed,
            fuel,
            pedersen: RankValue {
                value: a.pedersen_rank().ok().map(|r| r.to_string()),
                provenance: Provenance::Rule,
            },
            oracle_agrees: true,
            fell: RankValue {
                value: a.fell_rank().ok().map(|r| r.to_string()),
                provenance: a.fell.provenance,
            },
            axioms_checked: a.fell.axioms_checked,
            profile: ProfileReport {
                order_strict_sup: p.order_strict_sup().ok().map(ToString::to_string),
                rank_strict_sup: p.rank_strict_sup().ok().map(ToString::to_string),
                weight_sup: p.weight_sup(),
            },
            designated: a
                .pedersen
                .designated
                .iter()
                .map(|(n, r)| PointReport::new(n, r, "adjoined", None))
                .collect(),
            table,
            table_note,
            gap: a.gap().as_ref().map(Into::into),
        }
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "expression  {}", self.expression);
        let _ = writeln!(
            s,
            "pedersen    {}  [rule, oracle agrees]",
            or_gap(&self.pedersen.value)
        );
        let prov = serde_json::to_value(self.fell.provenance).expect("provenance");
        let _ = writeln!(
            s,
            "fell        {}  [{}]",
            or_gap(&self.fell.value),
            prov.as_str().unwrap_or("?")
        );
        let _ = writeln!(
            s,
            "profile     order < {}, rank < {}, weight <= {}",
            or_gap(&self.profile.order_strict_sup),
            or_gap(&self.profile.rank_strict_sup),
            self.profile.weight_sup
        );
        for d in &self.designated {
            let _ = writeln!(
                s,
                "point {:<6} order {}, rank {}",
                d.name,
                or_gap(&d.order),
                or_gap(&d.rank)
            );
        }
        if let Some(g) = &self.gap {
            let _ = writeln!(s, "gap         {}", g.message);
        }
        match (&self.table, &self.table_note) {
            (Some(t), _) => {
                if let Some(fuel) = t.fuel {
                    let _ = writeln!(s, "truncation at fuel {fuel}:");
                }
                let width = t.points.iter().map(|p| p.name.len()).max().unwrap_or(0);
                for p in &t.points {
                    let _ = write!(
                        s,
                        "  {:<width$}  w={:<4} order {:<10} rank {}",
                        p.name,
                        p.weight.to_string(),
                        or_gap(&p.order),
                        or_gap(&p.rank)
                    );
                    if let Some(f) = &p.fell {
                        let _ = write!(s, "  fell {f}");
                    }
                    if p.origin != "interior" && p.origin != "atom" {
                        let _ = write!(s, "  ({})", p.origin);
                    }
                    s.push('\n');
                }
            }
            (None, Some(note)) => {
                let _ = writeln!(s, "no point table: {note}");
            }
            (None, None) => {}
        }
        s
    }

    /// Specialization edges from smaller to larger point; one color per
    /// order, rank as label.
    pub fn dot(&self) -> String {
        let mut s = String::from("digraph spectrum {\n  node [style=filled, colorscheme=set39];\n");
        if let Some(t) = &self.table {
            let mut colors: BTreeMap<String, usize> = BTreeMap::new();
            for p in &t.points {
                let order = or_gap(&p.order);
                let next = colors.len() % 9 + 1;
                let color = *colors.entry(order).or_insert(next);
                let _ = writeln!(
                    s,
                    "  \"{}\" [label=\"{}\\n{}\", fillcolor={}];",
                    p.name,
                    p.name,
                    or_gap(&p.rank),
                    color
                );
            }
            for [a, b] in &t.edges {
                let _ = writeln!(s, "  \"{a}\" -> \"{b}\";");
            }
        }
        s.push_str("}\n");
        s
    }
}

fn or_gap(v: &Option<String>) -> String {
    v.clone().unwrap_or_else(|| "gap".into())
}
