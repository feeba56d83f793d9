//! Text and JSON encodings of tableaux.
//!
//! Text: one row per line, whitespace-separated entries, `k` / `-k` for unbarred /
//! barred letters, `.` for inner cells and `_` for a hole. A blank line ends a block.
//!
//! JSON: `{"outer":[..],"inner":[..],"rows":[[..],..]}` where `rows` holds only the skew
//! cells of each row and barred letters are negative (holes are `null`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::letter::{Letter, Word};
use crate::partition::{Partition, SkewShape};
use crate::tableau::Tableau;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub outer: Vec<u32>,
    pub inner: Vec<u32>,
    pub rows: Vec<Vec<Option<i32>>>,
}

impl From<&Tableau> for TableauJson {
    fn from(t: &Tableau) -> Self {
        TableauJson {
            outer: t.shape().outer().parts().to_vec(),
            inner: t.shape().inner().parts().to_vec(),
            rows: t.to_signed_rows(),
        }
    }
}

impl TryFrom<TableauJson> for Tableau {
    type Error = Error;
    fn try_from(j: TableauJson) -> Result<Self> {
        let shape = SkewShape::new(Partition::new(j.outer)?, Partition::new(j.inner)?)?;
        let rows = j
            .rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|v| v.map(Letter::from_signed).transpose())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::with_holes(shape, rows)
    }
}

pub fn to_json(t: &Tableau) -> String {
    serde_json::to_string(&TableauJson::from(t)).expect("plain data serializes")
}

pub fn from_json(s: &str) -> Result<Tableau> {
    let j: TableauJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    Tableau::try_from(j)
}

/// Render the text block (without the terminating blank line).
pub fn to_text(t: &Tableau) -> String {
    t.to_string()
}

/// Parse the first text block of `input`: lines up to the first blank line or end of input.
pub fn parse_text(input: &str) -> Result<Tableau> {
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    let mut rows = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            break;
        }
        let mut dots = 0u32;
        let mut entries = Vec::new();
        for tok in line.split_whitespace() {
            match tok {
                "." if entries.is_empty() => dots += 1,
                "." => {
                    return Err(Error::Parse(format!(
                        "line {}: inner cell '.' after a filled cell",
                        lineno + 1
                    )))
                }
                "_" => entries.push(None),
                _ => {
                    let v: i32 = tok.parse().map_err(|_| {
                        Error::Parse(format!("line {}: bad entry '{tok}'", lineno + 1))
                    })?;
                    entries.push(Some(Letter::from_signed(v)?));
                }
            }
        }
        outer.push(dots + entries.len() as u32);
        inner.push(dots);
        rows.push(entries);
    }
    let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
    Tableau::with_holes(shape, rows)
}

/// Parse every blank-line-separated block.
pub fn parse_text_blocks(input: &str) -> Result<Vec<Tableau>> {
    let mut out = Vec::new();
    let mut block = String::new();
    for line in input.lines() {
        if line.trim().is_empty() {
            if !block.is_empty() {
                out.push(parse_text(&block)?);
                block.clear();
            }
        } else {
            block.push_str(line);
            block.push('\n');
        }
    }
    if !block.is_empty() {
        out.push(parse_text(&block)?);
    }
    Ok(out)
}

/// A word as space-separated signed integers.
pub fn word_to_text(w: &Word) -> String {
    w.to_string()
}

/// Parse a comma-separated partition. `""` and `"0"` are the empty partition; unsorted
/// input is rejected.
pub fn parse_partition(s: &str) -> Result<Partition> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad part '{t}' in '{s}'")))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}
