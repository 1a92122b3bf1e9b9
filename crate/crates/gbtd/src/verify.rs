//! Brute-force and analytic checks: symbol balance, the column-pair agreement
//! counts, BIBD pair balance, the tournament-array conditions, the per-point
//! occurrence profile, the deficient-tuple partition, and the solution-count
//! enumeration behind the cross-group agreement argument.

use std::collections::BTreeSet;

use crate::design::GbtdArray;
use crate::error::{Error, Result};
use crate::matrix::{RowAddress, SymbolMatrix};
use crate::zp::{PrimeModulus, Residue};

/// One named check with an optional first counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

/// Outcome of a verification run. Every check is recorded; a failing check
/// carries one counterexample locating the violation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn overall(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn record(&mut self, name: &str, counterexample: Option<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed: counterexample.is_none(),
            counterexample,
        });
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for check in &self.checks {
            match &check.counterexample {
                None => writeln!(f, "PASS {}", check.name)?,
                Some(cx) => writeln!(f, "FAIL {}: {}", check.name, cx)?,
            }
        }
        writeln!(f, "overall: {}", if self.overall() { "PASS" } else { "FAIL" })
    }
}

/// The rows where two distinct columns hold equal symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreementProfile {
    pub columns: (usize, usize),
    pub rows: BTreeSet<usize>,
}

impl AgreementProfile {
    pub fn count(&self) -> usize {
        self.rows.len()
    }
}

/// Enumerates the agreement rows of two columns. Self-agreement is degenerate
/// and panics.
pub fn agreement_count(m: &SymbolMatrix, c1: usize, c2: usize) -> AgreementProfile {
    assert_ne!(c1, c2, "self-agreement is degenerate");
    let rows = (0..m.side())
        .filter(|&r| m.get(r, c1) == m.get(r, c2))
        .collect();
    AgreementProfile {
        columns: (c1, c2),
        rows,
    }
}

/// Checks the three matrix properties: each symbol p times per row and per
/// column; same-group column pairs agree in exactly p rows; cross-group pairs
/// agree in exactly p-1 rows. All pair checks are exhaustive.
///
/// Two columns share a group when their row-0 entries are equal. On a
/// normalized matrix that is the positional grouping into p consecutive
/// columns, and unlike positions it is stable under the equivalence
/// operations.
pub fn verify_matrix(m: &SymbolMatrix) -> VerificationReport {
    let p = m.modulus().as_usize();
    let side = m.side();
    let mut report = VerificationReport::default();

    let mut balance_cx = None;
    'rows: for row in 0..side {
        let mut counts = vec![0usize; p];
        for col in 0..side {
            counts[m.get(row, col).as_usize()] += 1;
        }
        for (symbol, &count) in counts.iter().enumerate() {
            if count != p {
                balance_cx = Some(format!(
                    "row {row}: symbol {symbol} occurs {count} times, expected {p}"
                ));
                break 'rows;
            }
        }
    }
    if balance_cx.is_none() {
        'cols: for col in 0..side {
            let mut counts = vec![0usize; p];
            for row in 0..side {
                counts[m.get(row, col).as_usize()] += 1;
            }
            for (symbol, &count) in counts.iter().enumerate() {
                if count != p {
                    balance_cx = Some(format!(
                        "column {col}: symbol {symbol} occurs {count} times, expected {p}"
                    ));
                    break 'cols;
                }
            }
        }
    }
    report.record("symbol balance per row and column", balance_cx);

    let mut same_cx = None;
    let mut cross_cx = None;
    for c1 in 0..side {
        for c2 in c1 + 1..side {
            let count = agreement_count(m, c1, c2).count();
            let g1 = m.get(0, c1);
            let g2 = m.get(0, c2);
            if g1 == g2 {
                if count != p && same_cx.is_none() {
                    same_cx = Some(format!(
                        "columns {c1}, {c2} (group {g1}) agree in {count} rows, expected {p}"
                    ));
                }
            } else if count != p - 1 && cross_cx.is_none() {
                cross_cx = Some(format!(
                    "columns {c1} (group {g1}), {c2} (group {g2}) agree in {count} rows, expected {}",
                    p - 1
                ));
            }
        }
    }
    report.record("same-group pairs agree in exactly p rows", same_cx);
    report.record("cross-group pairs agree in exactly p-1 rows", cross_cx);
    report
}

/// Checks the underlying BIBD: block sizes, exhaustive pair balance with
/// lambda = p-1, and the block count p(p²-1).
pub fn verify_bibd(r: &GbtdArray) -> VerificationReport {
    let p = r.modulus().as_usize();
    let v = r.point_count();
    let lambda = p - 1;
    let mut report = VerificationReport::default();

    let mut size_cx = None;
    for k in 0..r.rows() {
        for t in 0..r.columns() {
            let block = r.cell(k, t);
            if block.len() != p {
                size_cx = Some(format!(
                    "block at row {k}, column {t} has {} points, expected {p}",
                    block.len()
                ));
                break;
            }
            if let Some(&max) = block.points().last() {
                if max >= v && size_cx.is_none() {
                    size_cx = Some(format!(
                        "block at row {k}, column {t} contains point {max} >= {v}"
                    ));
                }
            }
        }
    }
    report.record("every block has exactly p distinct points", size_cx);

    let mut pair_counts = vec![0usize; v * v];
    for block in r.blocks() {
        let pts = block.points();
        for (idx, &a) in pts.iter().enumerate() {
            for &b in &pts[idx + 1..] {
                if a < v && b < v {
                    pair_counts[a * v + b] += 1;
                }
            }
        }
    }
    let mut pair_cx = None;
    for a in 0..v {
        for b in a + 1..v {
            let count = pair_counts[a * v + b];
            if count != lambda {
                pair_cx = Some(format!(
                    "pair ({a}, {b}) occurs in {count} blocks, expected {lambda}"
                ));
                break;
            }
        }
        if pair_cx.is_some() {
            break;
        }
    }
    report.record("every point pair occurs in exactly p-1 blocks", pair_cx);

    let blocks = r.rows() * r.columns();
    let expected = lambda * v * (v - 1) / (p * (p - 1));
    let count_cx = if blocks == expected {
        None
    } else {
        Some(format!("{blocks} blocks, expected {expected}"))
    };
    report.record("block count is p(p^2-1)", count_cx);
    report
}

/// Full tournament-array verification: once per column, at most p cells per
/// row, the p/(p-1) occurrence profile per point, the deficient-tuple
/// partition, and the BIBD checks.
pub fn verify_gbtd(r: &GbtdArray) -> VerificationReport {
    let p = r.modulus().as_usize();
    let v = r.point_count();
    let mut report = VerificationReport::default();

    let mut column_cx = None;
    'columns: for t in 0..r.columns() {
        let mut counts = vec![0usize; v];
        for k in 0..r.rows() {
            for &point in r.cell(k, t).points() {
                if point < v {
                    counts[point] += 1;
                }
            }
        }
        for (point, &count) in counts.iter().enumerate() {
            if count != 1 {
                column_cx = Some(format!(
                    "point {point} occurs {count} times in column {t}, expected once"
                ));
                break 'columns;
            }
        }
    }
    report.record("every point occurs exactly once in each column", column_cx);

    // Per-point occurrences by row, feeding both the at-most-p check and the
    // occurrence profile.
    let mut row_counts = vec![vec![0usize; v]; r.rows()];
    for (k, counts) in row_counts.iter_mut().enumerate() {
        for t in 0..r.columns() {
            for &point in r.cell(k, t).points() {
                if point < v {
                    counts[point] += 1;
                }
            }
        }
    }

    let mut row_cx = None;
    for (k, counts) in row_counts.iter().enumerate() {
        for (point, &count) in counts.iter().enumerate() {
            if count > p && row_cx.is_none() {
                row_cx = Some(format!(
                    "point {point} occurs in {count} cells of row {k}, limit {p}"
                ));
            }
        }
    }
    report.record("every point occurs in at most p cells of each row", row_cx);

    let mut profile_cx = None;
    let mut deficient_rows = vec![None; v];
    for point in 0..v {
        let mut full = 0;
        let mut deficient = 0;
        for (k, counts) in row_counts.iter().enumerate() {
            match counts[point] {
                c if c == p => full += 1,
                c if c == p - 1 => {
                    deficient += 1;
                    deficient_rows[point] = Some(k);
                }
                c => {
                    if profile_cx.is_none() {
                        profile_cx = Some(format!(
                            "point {point} occurs {c} times in row {k}, expected {p} or {}",
                            p - 1
                        ));
                    }
                }
            }
        }
        if profile_cx.is_none() && (full != p - 1 || deficient != 1) {
            profile_cx = Some(format!(
                "point {point}: full in {full} rows, deficient in {deficient}, expected {} and 1",
                p - 1
            ));
        }
    }
    report.record(
        "each point occurs p times in p-1 rows and p-1 times in one row",
        profile_cx,
    );

    let mut partition_cx = None;
    let mut tuple_sizes = vec![0usize; r.rows()];
    for (point, row) in deficient_rows.iter().enumerate() {
        match row {
            Some(k) => tuple_sizes[*k] += 1,
            None => {
                if partition_cx.is_none() {
                    partition_cx = Some(format!("point {point} has no deficient row"));
                }
            }
        }
    }
    for (k, &size) in tuple_sizes.iter().enumerate() {
        if size != p && partition_cx.is_none() {
            partition_cx = Some(format!(
                "row {k} has {size} deficient points, expected {p}"
            ));
        }
    }
    report.record("deficient tuples partition the point set", partition_cx);

    report.checks.extend(verify_bibd(r).checks);
    report
}

/// The deficient tuple of each row as witnessed by the occurrence counts.
/// Only meaningful when `verify_gbtd` passes.
pub fn deficient_tuples(r: &GbtdArray) -> Vec<Vec<usize>> {
    let p = r.modulus().as_usize();
    let v = r.point_count();
    let mut tuples = vec![Vec::new(); r.rows()];
    for point in 0..v {
        for (k, tuple) in tuples.iter_mut().enumerate() {
            let count = (0..r.columns()).filter(|&t| r.cell(k, t).contains(point)).count();
            if count == p - 1 {
                tuple.push(point);
            }
        }
    }
    tuples
}

/// Brute-force enumeration of the solution pairs (x, y) with x + y = m over
/// Z_p and 0 <= y < p-1. Returns (total, number with y >= x), comparing
/// canonical representatives as integers.
pub fn lemma3_counts(p: PrimeModulus, m: Residue) -> (usize, usize) {
    let pv = p.as_usize();
    let mut total = 0;
    let mut y_ge_x = 0;
    for y in 0..pv - 1 {
        let x = (m - p.residue(y as i64)).as_usize();
        total += 1;
        if y >= x {
            y_ge_x += 1;
        }
    }
    (total, y_ge_x)
}

/// Analytically predicts the block rows where column m of group j1 and column
/// n of group j2 agree (j1 < j2). For j2 <= p-2 the agreements solve
/// (i+l) = (n-m)(j1-j2)^-1; for j2 = p-1 they split into the two branches
/// (i+l)(j1+1) = n-m with l >= i and (i+l)(j1+1) = n-m+1 with l < i.
pub fn solve_agreement(
    p: PrimeModulus,
    j1: Residue,
    m: Residue,
    j2: Residue,
    n: Residue,
) -> Result<BTreeSet<RowAddress>> {
    if j1.as_usize() >= j2.as_usize() {
        return Err(Error::IndexOutOfRange {
            index: j1.as_usize(),
            limit: j2.as_usize(),
        });
    }
    let pv = p.as_usize();
    let one = p.residue(1);
    let mut rows = BTreeSet::new();
    if j2.as_usize() <= pv - 2 {
        let target = (n - m) * (j1 - j2).inverse()?;
        for l in 0..pv - 1 {
            let i = target - p.residue(l as i64);
            rows.insert(RowAddress::HBlock {
                block: i.as_usize(),
                inner: l,
            });
        }
    } else {
        let inv = (j1 + one).inverse()?;
        for l in 0..pv - 1 {
            let i = (n - m) * inv - p.residue(l as i64);
            if l >= i.as_usize() {
                rows.insert(RowAddress::HBlock {
                    block: i.as_usize(),
                    inner: l,
                });
            }
            let i = (n - m + one) * inv - p.residue(l as i64);
            if l < i.as_usize() {
                rows.insert(RowAddress::HBlock {
                    block: i.as_usize(),
                    inner: l,
                });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::matrix_to_gbtd;
    use crate::matrix::build_mp;

    fn p(n: u64) -> PrimeModulus {
        PrimeModulus::new(n).unwrap()
    }

    #[test]
    fn lemma3_examples() {
        let p5 = p(5);
        assert_eq!(lemma3_counts(p5, p5.residue(4)), (4, 2));
        let p3 = p(3);
        assert_eq!(lemma3_counts(p3, p3.residue(0)), (2, 1));
        let p7 = p(7);
        for m in p7.residues() {
            assert_eq!(lemma3_counts(p7, m), (6, 3));
        }
    }

    #[test]
    fn lemma3_all_primes_to_47() {
        for n in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
            let pm = p(n);
            for m in pm.residues() {
                assert_eq!(
                    lemma3_counts(pm, m),
                    (pm.as_usize() - 1, (pm.as_usize() - 1) / 2),
                    "p={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn constructed_matrices_pass() {
        for n in [3u64, 5, 7] {
            assert!(verify_matrix(&build_mp(p(n))).overall(), "p={n}");
        }
    }

    #[test]
    fn converted_designs_pass() {
        for n in [3u64, 5, 7] {
            let r = matrix_to_gbtd(&build_mp(p(n))).unwrap();
            assert!(verify_gbtd(&r).overall(), "p={n}");
        }
    }

    #[test]
    fn agreement_rows_of_encoded_fixture() {
        let m = crate::fixtures::example2_matrix();
        let profile = agreement_count(&m, 0, 1);
        assert_eq!(profile.rows, BTreeSet::from([0, 1, 5]));
        let profile = agreement_count(&m, 3, 4);
        assert_eq!(profile.rows, BTreeSet::from([4, 6]));
    }

    #[test]
    fn same_group_agreement_sits_in_head_rows() {
        let pm = p(5);
        let m = build_mp(pm);
        let profile = agreement_count(&m, 0, 1);
        assert_eq!(profile.count(), 5);
        assert!(profile.rows.iter().all(|&r| r < 5));
    }

    #[test]
    fn mutated_matrix_fails_with_counterexample() {
        let pm = p(5);
        let mut m = build_mp(pm);
        m.set(7, 11, m.get(7, 11) + pm.residue(1));
        let report = verify_matrix(&m);
        assert!(!report.overall());
        assert!(report
            .checks
            .iter()
            .any(|c| !c.passed && c.counterexample.is_some()));
    }

    #[test]
    fn solve_agreement_hand_enumerated_p3() {
        let p3 = p(3);
        let rows = solve_agreement(p3, p3.residue(0), p3.residue(0), p3.residue(1), p3.residue(0))
            .unwrap();
        let expect: BTreeSet<RowAddress> = [
            RowAddress::HBlock { block: 0, inner: 0 },
            RowAddress::HBlock { block: 2, inner: 1 },
        ]
        .into_iter()
        .collect();
        assert_eq!(rows, expect);
    }

    #[test]
    fn solve_agreement_last_group_splits_evenly() {
        let p5 = p(5);
        for m in p5.residues() {
            let rows =
                solve_agreement(p5, p5.residue(0), m, p5.residue(4), m).unwrap();
            assert_eq!(rows.len(), 4);
            let ge_branch = rows
                .iter()
                .filter(|r| match r {
                    RowAddress::HBlock { block, inner } => inner >= block,
                    _ => false,
                })
                .count();
            assert_eq!(ge_branch, 2);
        }
    }

    #[test]
    fn solve_agreement_rejects_bad_group_order() {
        let p5 = p(5);
        assert!(
            solve_agreement(p5, p5.residue(3), p5.residue(0), p5.residue(1), p5.residue(0))
                .is_err()
        );
    }

    #[test]
    fn solve_agreement_matches_brute_force() {
        for n in [3u64, 5] {
            let pm = p(n);
            let pv = pm.as_usize();
            let mat = build_mp(pm);
            for j1 in 0..pv {
                for j2 in j1 + 1..pv {
                    for m in 0..pv {
                        for nn in 0..pv {
                            let predicted = solve_agreement(
                                pm,
                                pm.residue(j1 as i64),
                                pm.residue(m as i64),
                                pm.residue(j2 as i64),
                                pm.residue(nn as i64),
                            )
                            .unwrap();
                            let brute = agreement_count(&mat, j1 * pv + m, j2 * pv + nn);
                            assert!(brute.rows.iter().all(|&r| r >= pv));
                            let brute_addrs: BTreeSet<RowAddress> = brute
                                .rows
                                .iter()
                                .map(|&r| RowAddress::from_flat(r, pm))
                                .collect();
                            assert_eq!(predicted, brute_addrs, "p={n} j1={j1} j2={j2} m={m} n={nn}");
                        }
                    }
                }
            }
        }
    }
}
