//! The p²×p² symbol matrix and its closed-form construction.
//!
//! Rows split into a head block `H*` of p rows followed by p blocks
//! `H_0..H_{p-1}` of p-1 rows each; columns split into p groups
//! `V_0..V_{p-1}` of p columns each.

use crate::error::{Error, Result};
use crate::zp::{const_vec, prog_vec, PrimeModulus, Residue};

/// Address of a matrix row in the H*/H_i layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RowAddress {
    /// Row i of the head block, flat index i.
    HStar { row: usize },
    /// Inner row l of block H_i, flat index p + i(p-1) + l. l never equals p-1.
    HBlock { block: usize, inner: usize },
}

impl RowAddress {
    pub fn flat_index(self, p: PrimeModulus) -> usize {
        let p = p.as_usize();
        match self {
            RowAddress::HStar { row } => row,
            RowAddress::HBlock { block, inner } => p + block * (p - 1) + inner,
        }
    }

    pub fn from_flat(index: usize, p: PrimeModulus) -> RowAddress {
        let p = p.as_usize();
        if index < p {
            RowAddress::HStar { row: index }
        } else {
            let off = index - p;
            RowAddress::HBlock {
                block: off / (p - 1),
                inner: off % (p - 1),
            }
        }
    }
}

/// Address of a matrix column: group j, inner column c; flat index j*p + c.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColAddress {
    pub group: usize,
    pub inner: usize,
}

impl ColAddress {
    pub fn flat_index(self, p: PrimeModulus) -> usize {
        self.group * p.as_usize() + self.inner
    }

    pub fn from_flat(index: usize, p: PrimeModulus) -> ColAddress {
        ColAddress {
            group: index / p.as_usize(),
            inner: index % p.as_usize(),
        }
    }
}

/// A square matrix of side p² over Z_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolMatrix {
    p: PrimeModulus,
    entries: Vec<Residue>,
}

impl SymbolMatrix {
    pub fn from_rows(p: PrimeModulus, rows: Vec<Vec<Residue>>) -> Self {
        let side = p.as_usize() * p.as_usize();
        assert_eq!(rows.len(), side);
        let mut entries = Vec::with_capacity(side * side);
        for row in rows {
            assert_eq!(row.len(), side);
            entries.extend(row);
        }
        SymbolMatrix { p, entries }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    /// Side length p².
    pub fn side(&self) -> usize {
        self.p.as_usize() * self.p.as_usize()
    }

    pub fn get(&self, row: usize, col: usize) -> Residue {
        self.entries[row * self.side() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Residue) {
        let side = self.side();
        self.entries[row * side + col] = value;
    }

    pub fn row(&self, row: usize) -> &[Residue] {
        let side = self.side();
        &self.entries[row * side..(row + 1) * side]
    }
}

/// Row i of H*: the concatenation of constant segments i, i+1, ..., i+p-1.
pub fn hstar_row(p: PrimeModulus, i: Residue) -> Vec<Residue> {
    let mut row = Vec::with_capacity(p.as_usize() * p.as_usize());
    for j in p.residues() {
        row.extend_from_slice(const_vec(i + j).entries());
    }
    row
}

/// Inner row l of block H_i: group j <= p-2 holds the progression starting at
/// i(j+1) + jl; group p-1 holds the progression starting at -l when l >= i and
/// -l+1 when l < i, comparing l and i as integers in [0, p).
pub fn hblock_row(p: PrimeModulus, i: Residue, l: usize) -> Result<Vec<Residue>> {
    let pv = p.as_usize();
    if l >= pv - 1 {
        return Err(Error::InnerRowOutOfRange {
            index: l,
            limit: pv - 1,
        });
    }
    let lr = p.residue(l as i64);
    let mut row = Vec::with_capacity(pv * pv);
    for j in p.residues().take(pv - 1) {
        let one = p.residue(1);
        let start = i * (j + one) + j * lr;
        row.extend_from_slice(prog_vec(start).entries());
    }
    let last = if l >= i.as_usize() {
        -lr
    } else {
        -lr + p.residue(1)
    };
    row.extend_from_slice(prog_vec(last).entries());
    Ok(row)
}

/// Builds the full matrix: H* rows first, then H_0..H_{p-1} in order.
pub fn build_mp(p: PrimeModulus) -> SymbolMatrix {
    let pv = p.as_usize();
    let mut rows = Vec::with_capacity(pv * pv);
    for i in p.residues() {
        rows.push(hstar_row(p, i));
    }
    for i in p.residues() {
        for l in 0..pv - 1 {
            rows.push(hblock_row(p, i, l).expect("l < p-1"));
        }
    }
    SymbolMatrix::from_rows(p, rows)
}
