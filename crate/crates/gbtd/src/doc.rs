//! Flat-file document format for matrices and designs.
//!
//! The primary format is JSON with explicit `kind`, `p` and payload keys.
//! Matrices also support a plain grid format, p² lines of p² space-separated
//! integers, for easy diffing. Emission is deterministic: sorted metadata
//! keys, sorted block points, one matrix row or design row per line.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::design::{Block, GbtdArray};
use crate::error::{Error, Result};
use crate::matrix::SymbolMatrix;
use crate::zp::PrimeModulus;

/// A serialized matrix or design with optional free-form annotations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum DesignDocument {
    Matrix {
        p: u64,
        #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
        metadata: BTreeMap<String, String>,
        entries: Vec<Vec<u64>>,
    },
    Design {
        p: u64,
        #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
        metadata: BTreeMap<String, String>,
        blocks: Vec<Vec<Vec<u64>>>,
    },
}

impl DesignDocument {
    pub fn p(&self) -> u64 {
        match self {
            DesignDocument::Matrix { p, .. } | DesignDocument::Design { p, .. } => *p,
        }
    }

    /// Schema-level validation: prime p, payload dimensions, entry ranges.
    pub fn validate(&self) -> Result<PrimeModulus> {
        let p = PrimeModulus::new(self.p())?;
        let pv = p.as_usize();
        let side = pv * pv;
        match self {
            DesignDocument::Matrix { entries, .. } => {
                if entries.len() != side {
                    return Err(Error::Dimension(format!(
                        "matrix has {} rows, expected {side}",
                        entries.len()
                    )));
                }
                for (row, r) in entries.iter().enumerate() {
                    if r.len() != side {
                        return Err(Error::Dimension(format!(
                            "matrix row {row} has {} entries, expected {side}",
                            r.len()
                        )));
                    }
                    for (column, &value) in r.iter().enumerate() {
                        if value >= p.value() {
                            return Err(Error::EntryOutOfRange {
                                value,
                                limit: p.value(),
                                row,
                                column,
                            });
                        }
                    }
                }
            }
            DesignDocument::Design { blocks, .. } => {
                if blocks.len() != pv {
                    return Err(Error::Dimension(format!(
                        "design has {} rows, expected {pv}",
                        blocks.len()
                    )));
                }
                for (row, r) in blocks.iter().enumerate() {
                    if r.len() != side - 1 {
                        return Err(Error::Dimension(format!(
                            "design row {row} has {} cells, expected {}",
                            r.len(),
                            side - 1
                        )));
                    }
                    for (column, cell) in r.iter().enumerate() {
                        if cell.len() != pv {
                            return Err(Error::Dimension(format!(
                                "cell at row {row}, column {column} has {} points, expected {pv}",
                                cell.len()
                            )));
                        }
                        for &point in cell {
                            if point as usize >= side {
                                return Err(Error::EntryOutOfRange {
                                    value: point,
                                    limit: side as u64,
                                    row,
                                    column,
                                });
                            }
                        }
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn to_matrix(&self) -> Result<SymbolMatrix> {
        let p = self.validate()?;
        match self {
            DesignDocument::Matrix { entries, .. } => {
                let rows = entries
                    .iter()
                    .map(|r| r.iter().map(|&v| p.residue(v as i64)).collect())
                    .collect();
                Ok(SymbolMatrix::from_rows(p, rows))
            }
            DesignDocument::Design { .. } => {
                Err(Error::Parse("expected a matrix document".to_string()))
            }
        }
    }

    pub fn to_design(&self) -> Result<GbtdArray> {
        let p = self.validate()?;
        match self {
            DesignDocument::Design { blocks, .. } => {
                let cells = blocks
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|cell| Block::new(cell.iter().map(|&v| v as usize).collect()))
                            .collect()
                    })
                    .collect();
                Ok(GbtdArray::from_cells(p, cells))
            }
            DesignDocument::Matrix { .. } => {
                Err(Error::Parse("expected a design document".to_string()))
            }
        }
    }

    pub fn from_matrix(m: &SymbolMatrix) -> DesignDocument {
        DesignDocument::Matrix {
            p: m.modulus().value(),
            metadata: BTreeMap::new(),
            entries: (0..m.side())
                .map(|r| m.row(r).iter().map(|x| x.value()).collect())
                .collect(),
        }
    }

    pub fn from_design(r: &GbtdArray) -> DesignDocument {
        DesignDocument::Design {
            p: r.modulus().value(),
            metadata: BTreeMap::new(),
            blocks: (0..r.rows())
                .map(|k| {
                    (0..r.columns())
                        .map(|t| r.cell(k, t).points().iter().map(|&x| x as u64).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

fn emit_metadata(out: &mut String, metadata: &BTreeMap<String, String>) {
    if metadata.is_empty() {
        return;
    }
    out.push_str("  \"metadata\": {\n");
    let last = metadata.len() - 1;
    for (idx, (key, value)) in metadata.iter().enumerate() {
        let comma = if idx == last { "" } else { "," };
        let _ = writeln!(
            out,
            "    {}: {}{comma}",
            serde_json::to_string(key).expect("string"),
            serde_json::to_string(value).expect("string")
        );
    }
    out.push_str("  },\n");
}

fn emit_int_list(values: &[u64]) -> String {
    let items: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("[{}]", items.join(", "))
}

/// Deterministic JSON emission, one matrix row or design row per line.
pub fn emit(doc: &DesignDocument) -> String {
    let mut out = String::new();
    match doc {
        DesignDocument::Matrix {
            p,
            metadata,
            entries,
        } => {
            out.push_str("{\n  \"kind\": \"matrix\",\n");
            let _ = writeln!(out, "  \"p\": {p},");
            emit_metadata(&mut out, metadata);
            out.push_str("  \"entries\": [\n");
            for (idx, row) in entries.iter().enumerate() {
                let comma = if idx == entries.len() - 1 { "" } else { "," };
                let _ = writeln!(out, "    {}{comma}", emit_int_list(row));
            }
            out.push_str("  ]\n}\n");
        }
        DesignDocument::Design {
            p,
            metadata,
            blocks,
        } => {
            out.push_str("{\n  \"kind\": \"design\",\n");
            let _ = writeln!(out, "  \"p\": {p},");
            emit_metadata(&mut out, metadata);
            out.push_str("  \"blocks\": [\n");
            for (idx, row) in blocks.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|c| emit_int_list(c)).collect();
                let comma = if idx == blocks.len() - 1 { "" } else { "," };
                let _ = writeln!(out, "    [{}]{comma}", cells.join(", "));
            }
            out.push_str("  ]\n}\n");
        }
    }
    out
}

/// Parses a JSON document and validates its schema.
pub fn parse(input: &str) -> Result<DesignDocument> {
    let doc: DesignDocument = serde_json::from_str(input)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    doc.validate()?;
    Ok(doc)
}

/// Emits a matrix as the plain grid format.
pub fn emit_grid(m: &SymbolMatrix) -> String {
    let mut out = String::new();
    for r in 0..m.side() {
        let row: Vec<String> = m.row(r).iter().map(|x| x.value().to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Parses the grid format; the side length must be p² for a prime p inferred
/// from the grid, and every entry must lie in [0, p).
pub fn parse_grid(input: &str) -> Result<SymbolMatrix> {
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row: Vec<u64> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u64>()
                    .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))
            })
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    let side = rows.len();
    let p = (side as f64).sqrt().round() as u64;
    if (p * p) as usize != side {
        return Err(Error::Dimension(format!(
            "grid has {side} rows, not a perfect square"
        )));
    }
    let p = PrimeModulus::new(p)?;
    let doc = DesignDocument::Matrix {
        p: p.value(),
        metadata: BTreeMap::new(),
        entries: rows,
    };
    doc.to_matrix()
}
