//! Block-array representation of a GBTD(p,p) and the conversions between the
//! array and its symbol-matrix encoding.
//!
//! Matrix row t (t = 1..p²-1) encodes design column t-1: entry at column j is
//! the design row whose block there contains point j. Matrix row 0 records each
//! point's deficient row symbol.

use crate::error::{Error, Result};
use crate::matrix::SymbolMatrix;
use crate::zp::{PrimeModulus, Residue};

/// A block: p distinct points of [0, p²), kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Block {
    points: Vec<usize>,
}

impl Block {
    pub fn new(mut points: Vec<usize>) -> Self {
        points.sort_unstable();
        points.dedup();
        Block { points }
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn contains(&self, point: usize) -> bool {
        self.points.binary_search(&point).is_ok()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// The p × (p²-1) array of blocks. Columns are stored 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbtdArray {
    p: PrimeModulus,
    cells: Vec<Block>,
}

impl GbtdArray {
    pub fn from_cells(p: PrimeModulus, cells: Vec<Vec<Block>>) -> Self {
        let pv = p.as_usize();
        assert_eq!(cells.len(), pv);
        let mut flat = Vec::with_capacity(pv * (pv * pv - 1));
        for row in cells {
            assert_eq!(row.len(), pv * pv - 1);
            flat.extend(row);
        }
        GbtdArray { p, cells: flat }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.p.as_usize()
    }

    pub fn columns(&self) -> usize {
        self.p.as_usize() * self.p.as_usize() - 1
    }

    pub fn point_count(&self) -> usize {
        self.p.as_usize() * self.p.as_usize()
    }

    pub fn cell(&self, row: usize, column: usize) -> &Block {
        &self.cells[row * self.columns() + column]
    }

    fn cell_mut(&mut self, row: usize, column: usize) -> &mut Block {
        let cols = self.columns();
        &mut self.cells[row * cols + column]
    }

    pub fn blocks(&self) -> impl Iterator<Item = &Block> {
        self.cells.iter()
    }
}

/// The deficient p-tuple of each design row. Per Lemma 2 the tuples partition
/// the point set; that is checked by the verifier, not assumed here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeficiencyProfile {
    tuples: Vec<Vec<usize>>,
}

impl DeficiencyProfile {
    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn tuple(&self, row: usize) -> &[usize] {
        &self.tuples[row]
    }
}

/// Reads the deficient tuple of each row off the matrix deficiency row.
pub fn deficiency_profile(m: &SymbolMatrix) -> DeficiencyProfile {
    let p = m.modulus().as_usize();
    let mut tuples = vec![Vec::new(); p];
    for j in 0..m.side() {
        tuples[m.get(0, j).as_usize()].push(j);
    }
    DeficiencyProfile { tuples }
}

/// Decodes a symbol matrix into the block array: design cell (k, t-1) collects
/// the columns holding symbol k in matrix row t. Requires the row-0 deficiency
/// convention; any cell that does not come out at exactly p points is reported
/// with its (design column, design row) location, 1-indexed column as in the
/// matrix row it decodes.
pub fn matrix_to_gbtd(m: &SymbolMatrix) -> Result<GbtdArray> {
    let p = m.modulus();
    let pv = p.as_usize();
    let side = m.side();
    let mut cells: Vec<Vec<Block>> = vec![Vec::with_capacity(side - 1); pv];
    for t in 1..side {
        let mut per_row: Vec<Vec<usize>> = vec![Vec::with_capacity(pv); pv];
        for j in 0..side {
            per_row[m.get(t, j).as_usize()].push(j);
        }
        for (k, points) in per_row.into_iter().enumerate() {
            if points.len() != pv {
                return Err(Error::MalformedCell {
                    row: k,
                    column: t,
                    count: points.len(),
                    expected: pv,
                });
            }
            cells[k].push(Block::new(points));
        }
    }
    Ok(GbtdArray::from_cells(p, cells))
}

/// Infers the deficient symbol from the per-symbol counts of one matrix column
/// over rows 1..p²-1: the unique symbol occurring p-1 times while every other
/// occurs p times.
pub fn infer_deficient_symbol(p: PrimeModulus, counts: &[usize]) -> Result<Residue> {
    let pv = p.as_usize();
    assert_eq!(counts.len(), pv);
    let mut deficient = None;
    for (symbol, &count) in counts.iter().enumerate() {
        match count {
            c if c == pv => {}
            c if c == pv - 1 && deficient.is_none() => deficient = Some(symbol),
            _ => {
                return Err(Error::CountProfile {
                    deficient: pv - 1,
                    full: pv,
                })
            }
        }
    }
    deficient
        .map(|s| p.residue(s as i64))
        .ok_or(Error::CountProfile {
            deficient: pv - 1,
            full: pv,
        })
}

/// Encodes a block array as a symbol matrix. Row t holds design column t-1,
/// row 0 the inferred deficient symbols. Output columns stay in point order
/// (unnormalized).
pub fn gbtd_to_matrix(r: &GbtdArray) -> Result<SymbolMatrix> {
    let p = r.modulus();
    let pv = p.as_usize();
    let side = pv * pv;
    let mut rows: Vec<Vec<Residue>> = Vec::with_capacity(side);
    rows.push(vec![p.residue(0); side]); // deficiency row, filled below
    for t in 0..r.columns() {
        let mut row: Vec<Option<Residue>> = vec![None; side];
        for k in 0..r.rows() {
            for &point in r.cell(k, t).points() {
                if point >= side {
                    return Err(Error::IndexOutOfRange {
                        index: point,
                        limit: side,
                    });
                }
                if row[point].is_some() {
                    return Err(Error::ColumnCoverage {
                        point,
                        column: t,
                        count: 2,
                    });
                }
                row[point] = Some(p.residue(k as i64));
            }
        }
        let row: Vec<Residue> = row
            .into_iter()
            .enumerate()
            .map(|(point, v)| {
                v.ok_or(Error::ColumnCoverage {
                    point,
                    column: t,
                    count: 0,
                })
            })
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    for j in 0..side {
        let mut counts = vec![0usize; pv];
        for row in rows.iter().skip(1) {
            counts[row[j].as_usize()] += 1;
        }
        rows[0][j] = infer_deficient_symbol(p, &counts)?;
    }
    Ok(SymbolMatrix::from_rows(p, rows))
}

/// Stably reorders columns so row 0 reads (0,...,0,1,...,1,...). Requires each
/// symbol to appear exactly p times in row 0. Returns the normalized matrix and
/// the column permutation applied (new column c came from `perm[c]`).
pub fn normalize_columns(m: &SymbolMatrix) -> Result<(SymbolMatrix, Vec<usize>)> {
    let p = m.modulus();
    let pv = p.as_usize();
    let side = m.side();
    let mut counts = vec![0usize; pv];
    for j in 0..side {
        counts[m.get(0, j).as_usize()] += 1;
    }
    for (symbol, &count) in counts.iter().enumerate() {
        if count != pv {
            return Err(Error::NormalizationBalance {
                symbol: symbol as u64,
                count,
                expected: pv,
            });
        }
    }
    let mut perm: Vec<usize> = (0..side).collect();
    perm.sort_by_key(|&j| m.get(0, j).value());
    let rows = (0..side)
        .map(|r| perm.iter().map(|&j| m.get(r, j)).collect())
        .collect();
    Ok((SymbolMatrix::from_rows(p, rows), perm))
}

/// Interchanges two design rows.
pub fn swap_design_rows(r: &GbtdArray, a: usize, b: usize) -> Result<GbtdArray> {
    let limit = r.rows();
    for idx in [a, b] {
        if idx >= limit {
            return Err(Error::IndexOutOfRange { index: idx, limit });
        }
    }
    let mut out = r.clone();
    for t in 0..r.columns() {
        let blk_a = out.cell(a, t).clone();
        let blk_b = out.cell(b, t).clone();
        *out.cell_mut(a, t) = blk_b;
        *out.cell_mut(b, t) = blk_a;
    }
    Ok(out)
}

/// Interchanges two design columns.
pub fn swap_design_columns(r: &GbtdArray, a: usize, b: usize) -> Result<GbtdArray> {
    let limit = r.columns();
    for idx in [a, b] {
        if idx >= limit {
            return Err(Error::IndexOutOfRange { index: idx, limit });
        }
    }
    let mut out = r.clone();
    for k in 0..r.rows() {
        let blk_a = out.cell(k, a).clone();
        let blk_b = out.cell(k, b).clone();
        *out.cell_mut(k, a) = blk_b;
        *out.cell_mut(k, b) = blk_a;
    }
    Ok(out)
}

fn check_bijection(map: &[usize], limit: usize) -> Result<()> {
    if map.len() != limit {
        return Err(Error::Dimension(format!(
            "permutation has {} entries, expected {}",
            map.len(),
            limit
        )));
    }
    let mut seen = vec![0usize; limit];
    for &v in map {
        if v >= limit {
            return Err(Error::IndexOutOfRange { index: v, limit });
        }
        seen[v] += 1;
    }
    for (value, &count) in seen.iter().enumerate() {
        if count != 1 {
            return Err(Error::NotABijection { value, count });
        }
    }
    Ok(())
}

/// Renames every point x to perm[x]; perm must be a bijection on [0, p²).
pub fn permute_points(r: &GbtdArray, perm: &[usize]) -> Result<GbtdArray> {
    check_bijection(perm, r.point_count())?;
    let mut out = r.clone();
    for cell in out.cells.iter_mut() {
        *cell = Block::new(cell.points().iter().map(|&x| perm[x]).collect());
    }
    Ok(out)
}

/// Renames every matrix symbol s to map[s]; map must be a bijection on Z_p.
pub fn permute_symbols(m: &SymbolMatrix, map: &[usize]) -> Result<SymbolMatrix> {
    let p = m.modulus();
    check_bijection(map, p.as_usize())?;
    let rows = (0..m.side())
        .map(|r| {
            m.row(r)
                .iter()
                .map(|&s| p.residue(map[s.as_usize()] as i64))
                .collect()
        })
        .collect();
    Ok(SymbolMatrix::from_rows(p, rows))
}

/// Interchanges two matrix rows. Row 0 is the deficiency row and may not move.
pub fn swap_matrix_rows(m: &SymbolMatrix, a: usize, b: usize) -> Result<SymbolMatrix> {
    if a == 0 || b == 0 {
        return Err(Error::DeficiencyRowSwap);
    }
    let limit = m.side();
    for idx in [a, b] {
        if idx >= limit {
            return Err(Error::IndexOutOfRange { index: idx, limit });
        }
    }
    let mut rows: Vec<Vec<Residue>> = (0..limit).map(|r| m.row(r).to_vec()).collect();
    rows.swap(a, b);
    Ok(SymbolMatrix::from_rows(m.modulus(), rows))
}

/// Interchanges two matrix columns.
pub fn swap_matrix_columns(m: &SymbolMatrix, a: usize, b: usize) -> Result<SymbolMatrix> {
    let limit = m.side();
    for idx in [a, b] {
        if idx >= limit {
            return Err(Error::IndexOutOfRange { index: idx, limit });
        }
    }
    let mut rows: Vec<Vec<Residue>> = (0..limit).map(|r| m.row(r).to_vec()).collect();
    for row in rows.iter_mut() {
        row.swap(a, b);
    }
    Ok(SymbolMatrix::from_rows(m.modulus(), rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::build_mp;

    fn p(n: u64) -> PrimeModulus {
        PrimeModulus::new(n).unwrap()
    }

    #[test]
    fn infer_deficient_symbol_examples() {
        let p3 = p(3);
        assert_eq!(
            infer_deficient_symbol(p3, &[3, 2, 3]).unwrap(),
            p3.residue(1)
        );
        assert_eq!(
            infer_deficient_symbol(p3, &[2, 3, 3]).unwrap(),
            p3.residue(0)
        );
        assert!(infer_deficient_symbol(p3, &[4, 2, 2]).is_err());
        assert!(infer_deficient_symbol(p3, &[3, 3, 3]).is_err());
    }

    #[test]
    fn round_trip_constructed_matrices() {
        for n in [3u64, 5, 7, 11, 13] {
            let m = build_mp(p(n));
            let r = matrix_to_gbtd(&m).unwrap();
            assert_eq!(gbtd_to_matrix(&r).unwrap(), m, "p={n}");
        }
    }

    #[test]
    fn deficient_tuples_of_constructed_matrix_are_column_groups() {
        for n in [3u64, 5, 7] {
            let pm = p(n);
            let m = build_mp(pm);
            let profile = deficiency_profile(&m);
            let pv = pm.as_usize();
            for k in 0..pv {
                let expect: Vec<usize> = (k * pv..(k + 1) * pv).collect();
                assert_eq!(profile.tuple(k), expect.as_slice());
            }
        }
    }

    #[test]
    fn malformed_matrix_rejected() {
        let pm = p(3);
        let mut m = build_mp(pm);
        m.set(4, 0, m.get(4, 0) + pm.residue(1));
        assert!(matches!(
            matrix_to_gbtd(&m),
            Err(Error::MalformedCell { .. })
        ));
    }

    #[test]
    fn normalize_is_idempotent() {
        let m = build_mp(p(5));
        let (once, perm) = normalize_columns(&m).unwrap();
        // build_mp output is already normalized
        assert_eq!(once, m);
        assert_eq!(perm, (0..25).collect::<Vec<_>>());
        let (twice, _) = normalize_columns(&once).unwrap();
        assert_eq!(twice, once);
    }

    #[test]
    fn design_swaps_are_involutions() {
        let r = matrix_to_gbtd(&build_mp(p(3))).unwrap();
        let swapped = swap_design_rows(&r, 0, 1).unwrap();
        assert_ne!(swapped, r);
        assert_eq!(swap_design_rows(&swapped, 0, 1).unwrap(), r);
        let swapped = swap_design_columns(&r, 2, 5).unwrap();
        assert_eq!(swap_design_columns(&swapped, 2, 5).unwrap(), r);
    }

    #[test]
    fn matrix_swaps_are_involutions() {
        let m = build_mp(p(3));
        let swapped = swap_matrix_rows(&m, 3, 7).unwrap();
        assert_ne!(swapped, m);
        assert_eq!(swap_matrix_rows(&swapped, 3, 7).unwrap(), m);
        assert_eq!(swap_matrix_rows(&m, 0, 3), Err(Error::DeficiencyRowSwap));
    }

    #[test]
    fn identity_permutations_are_no_ops() {
        let r = matrix_to_gbtd(&build_mp(p(3))).unwrap();
        let ident: Vec<usize> = (0..9).collect();
        assert_eq!(permute_points(&r, &ident).unwrap(), r);
        let m = build_mp(p(3));
        assert_eq!(permute_symbols(&m, &[0, 1, 2]).unwrap(), m);
        assert!(matches!(
            permute_symbols(&m, &[0, 0, 2]),
            Err(Error::NotABijection { .. })
        ));
    }
}
