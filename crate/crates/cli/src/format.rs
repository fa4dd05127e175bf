//! Text and JSON renderings, plus parsers for the flag value syntaxes.

use std::fmt::{self, Display};

use isobaric_core::companion::CompanionWindow;
use isobaric_core::hessenberg::{Cell, HessenbergMatrix, Superdiagonal};
use isobaric_core::{ExponentVector, IsobaricPoly, Rational, WeightVector};
use serde::{Deserialize, Serialize};

/// A malformed flag value or JSON document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

/// `p/q` or an integer, optionally signed.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    s.parse::<Rational>()
        .map_err(|e| ParseError(format!("not a rational number {:?}: {}", s, e)))
}

/// Comma-separated rationals, e.g. `1,1/2,-3`.
pub fn parse_values(s: &str) -> Result<Vec<Rational>, ParseError> {
    if s.trim().is_empty() {
        return err("empty value list");
    }
    s.split(',').map(parse_rational).collect()
}

/// `id` for `w_j = j`, `ones` for `w_j = 1`, or a list extended by its last entry.
pub fn parse_weights(s: &str) -> Result<WeightVector, ParseError> {
    match s.trim() {
        "id" => Ok(WeightVector::identity()),
        "ones" => Ok(WeightVector::ones()),
        list => Ok(WeightVector::explicit(parse_values(list)?)),
    }
}

/// `a..b` with `a <= b`, either end possibly negative.
pub fn parse_row_range(s: &str) -> Result<(i64, i64), ParseError> {
    let Some((lo, hi)) = s.split_once("..") else {
        return err(format!("expected a row range like 0..5, got {:?}", s));
    };
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| ParseError(format!("bad row {:?}", lo)))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| ParseError(format!("bad row {:?}", hi)))?;
    if lo > hi {
        return err(format!("empty row range {}..{}", lo, hi));
    }
    Ok((lo, hi))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub alpha: Vec<u32>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub n: usize,
    pub k: usize,
    pub terms: Vec<TermJson>,
}

impl From<&IsobaricPoly> for PolyJson {
    fn from(p: &IsobaricPoly) -> Self {
        PolyJson {
            n: p.degree(),
            k: p.k(),
            terms: p
                .terms()
                .map(|(a, c)| TermJson {
                    alpha: a.multiplicities().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl PolyJson {
    pub fn to_poly(&self) -> Result<IsobaricPoly, ParseError> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok((
                    ExponentVector::new(t.alpha.clone()),
                    parse_rational(&t.coeff)?,
                ))
            })
            .collect::<Result<Vec<_>, ParseError>>()?;
        IsobaricPoly::from_terms(self.n, self.k, terms).map_err(|e| ParseError(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub coeff: String,
    pub t: Option<usize>,
}

impl From<&Cell> for CellJson {
    fn from(c: &Cell) -> Self {
        CellJson {
            coeff: c.coeff.to_string(),
            t: if c.is_zero() { None } else { c.part },
        }
    }
}

impl CellJson {
    /// The cell over parts `1..=k`; `t_m` with `m > k` is zero.
    pub fn to_cell(&self, k: usize) -> Result<Cell, ParseError> {
        let coeff = parse_rational(&self.coeff)?;
        match self.t {
            Some(0) => err("t index starts at 1"),
            Some(m) => Ok(Cell::monomial(coeff, m, k)),
            None => Ok(Cell::constant(coeff)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    #[serde(rename = "super")]
    pub sup: i64,
    pub cells: Vec<Vec<CellJson>>,
}

impl From<&HessenbergMatrix> for MatrixJson {
    fn from(m: &HessenbergMatrix) -> Self {
        MatrixJson {
            n: m.size(),
            sup: m.superdiagonal().value(),
            cells: m
                .dense()
                .iter()
                .map(|row| row.iter().map(CellJson::from).collect())
                .collect(),
        }
    }
}

impl MatrixJson {
    /// Rebuilds the matrix over parts `1..=k`; cells above the diagonal must
    /// match the superdiagonal and zeros.
    pub fn to_matrix(&self, k: usize) -> Result<HessenbergMatrix, ParseError> {
        let sup = match self.sup {
            1 => Superdiagonal::Plus,
            -1 => Superdiagonal::Minus,
            other => return err(format!("superdiagonal must be 1 or -1, got {}", other)),
        };
        if self.cells.len() != self.n || self.cells.iter().any(|r| r.len() != self.n) {
            return err(format!("expected a {}x{} grid", self.n, self.n));
        }
        let mut rows = Vec::with_capacity(self.n);
        for (i, row) in self.cells.iter().enumerate() {
            for (j, cell) in row.iter().enumerate().skip(i + 1) {
                let expected = if j == i + 1 {
                    self.sup.to_string()
                } else {
                    "0".into()
                };
                if cell.t.is_some() || parse_rational(&cell.coeff)?.to_string() != expected {
                    return err(format!(
                        "cell ({},{}) lies above the Hessenberg band",
                        i + 1,
                        j + 1
                    ));
                }
            }
            let lower = row[..=i]
                .iter()
                .map(|c| c.to_cell(k))
                .collect::<Result<Vec<_>, ParseError>>()?;
            rows.push(lower);
        }
        HessenbergMatrix::from_rows(rows, sup, k).map_err(|e| ParseError(e.to_string()))
    }
}

/// Window cells are either numbers or polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryJson {
    Number(CellJson),
    Poly(PolyJson),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowJson {
    pub k: usize,
    pub row_lo: i64,
    pub row_hi: i64,
    pub cells: Vec<Vec<EntryJson>>,
}

/// Anything that can sit in a window cell.
pub trait Entry: Clone + Display {
    fn to_json(&self) -> EntryJson;
}

impl Entry for Rational {
    fn to_json(&self) -> EntryJson {
        EntryJson::Number(CellJson {
            coeff: self.to_string(),
            t: None,
        })
    }
}

impl Entry for IsobaricPoly {
    fn to_json(&self) -> EntryJson {
        EntryJson::Poly(PolyJson::from(self))
    }
}

impl WindowJson {
    pub fn from_window<V: Entry>(w: &CompanionWindow<V>) -> Self {
        WindowJson {
            k: w.k(),
            row_lo: w.lo(),
            row_hi: w.hi(),
            cells: w
                .rows()
                .iter()
                .map(|r| r.iter().map(Entry::to_json).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuesJson {
    pub label: String,
    pub values: Vec<String>,
}

/// Columns padded to a common width, separated by two spaces, with optional
/// row labels right-aligned in front.
pub fn grid(labels: Option<Vec<String>>, rows: &[Vec<String>]) -> String {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|j| {
            rows.iter()
                .filter_map(|r| r.get(j))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let label_width = labels.as_ref().map_or(0, |ls| {
        ls.iter().map(|l| l.chars().count()).max().unwrap_or(0)
    });
    let mut out = String::new();
    for (i, row) in rows.iter().enumerate() {
        let mut line = String::new();
        if let Some(ls) = &labels {
            line.push_str(&format!("{:>w$} |", ls[i], w = label_width));
        }
        for (j, cell) in row.iter().enumerate() {
            if j > 0 || labels.is_some() {
                line.push_str("  ");
            }
            line.push_str(&format!("{:>w$}", cell, w = widths[j]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn matrix_text(m: &HessenbergMatrix) -> String {
    let rows: Vec<Vec<String>> = m
        .dense()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    grid(None, &rows)
}

pub fn window_text<V: Entry>(w: &CompanionWindow<V>) -> String {
    let labels = (w.lo()..=w.hi()).map(|n| n.to_string()).collect();
    let rows: Vec<Vec<String>> = w
        .rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    grid(Some(labels), &rows)
}

pub fn values_text(values: &[Rational]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
