//! Exhaustive (m,n)-refinement checking: every pair of equal-sum sequences
//! (a_1..a_m), (b_1..b_n) must admit a matrix {c_ij} whose rows sum to the
//! a's and whose columns sum to the b's, all partial sums taken in order.
//! The com-side variant additionally demands, for every i < m and j < n,
//! that the column tail below c_ij commutes with the row tail to its right.

use serde::Serialize;

use super::{com, names, Verdict};
use crate::error::{Error, Result};
use crate::pea::FinitePea;

#[derive(Clone, Debug, Serialize)]
pub struct MnReport {
    pub m: usize,
    pub n: usize,
    pub with_com: bool,
    pub verdict: Verdict,
}

/// Left-to-right sum of ids; `None` when a partial sum is undefined.
pub fn sum_ids(pea: &FinitePea, ids: &[usize]) -> Option<usize> {
    let mut acc = pea.zero();
    for &x in ids {
        acc = pea.try_add(acc, x)?;
    }
    Some(acc)
}

/// Checks that rows and columns of `matrix` reproduce the sequences, all
/// sums defined in order.
pub fn validate_matrix(
    pea: &FinitePea,
    rows: &[usize],
    cols: &[usize],
    matrix: &[Vec<usize>],
) -> Result<()> {
    if matrix.len() != rows.len() || matrix.iter().any(|r| r.len() != cols.len()) {
        return Err(Error::Precondition("matrix shape mismatch".into()));
    }
    for (i, &a) in rows.iter().enumerate() {
        match sum_ids(pea, &matrix[i]) {
            Some(s) if s == a => {}
            _ => {
                return Err(Error::Precondition(format!(
                    "row {i} does not sum to {}",
                    pea.name(a)
                )))
            }
        }
    }
    for (j, &b) in cols.iter().enumerate() {
        let col: Vec<usize> = matrix.iter().map(|r| r[j]).collect();
        match sum_ids(pea, &col) {
            Some(s) if s == b => {}
            _ => {
                return Err(Error::Precondition(format!(
                    "column {j} does not sum to {}",
                    pea.name(b)
                )))
            }
        }
    }
    Ok(())
}

/// The com side condition: for 1 <= i < m, 1 <= j < n,
/// (c_{i+1,j} + ... + c_{mj}) com (c_{i,j+1} + ... + c_{in}).
pub fn matrix_com_condition(pea: &FinitePea, matrix: &[Vec<usize>]) -> bool {
    let m = matrix.len();
    let n = matrix[0].len();
    for i in 0..m.saturating_sub(1) {
        for j in 0..n.saturating_sub(1) {
            let col_tail: Vec<usize> = (i + 1..m).map(|r| matrix[r][j]).collect();
            let row_tail: Vec<usize> = (j + 1..n).map(|c| matrix[i][c]).collect();
            let (Some(ct), Some(rt)) = (sum_ids(pea, &col_tail), sum_ids(pea, &row_tail)) else {
                return false;
            };
            if !com(pea, ct, rt) {
                return false;
            }
        }
    }
    true
}

struct Search<'a> {
    pea: &'a FinitePea,
    with_com: bool,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    /// Finds a matrix for `rows` x `cols` (already equal-sum), trying every
    /// first-row decomposition and recursing on the column remainders.
    fn run(
        &mut self,
        rows: &[usize],
        cols: &[usize],
        acc: &mut Vec<Vec<usize>>,
    ) -> Result<Option<Vec<Vec<usize>>>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(format!(
                "matrix search exceeded {} nodes",
                self.budget
            )));
        }
        if rows.len() == 1 {
            // The last row is forced to be the remaining column targets.
            if sum_ids(self.pea, cols) != Some(rows[0]) {
                return Ok(None);
            }
            acc.push(cols.to_vec());
            let done = acc.clone();
            acc.pop();
            if !self.with_com || matrix_com_condition(self.pea, &done) {
                return Ok(Some(done));
            }
            return Ok(None);
        }
        let mut first_row = vec![0usize; cols.len()];
        self.split_first_row(rows, cols, 0, rows[0], &mut first_row, acc)
    }

    /// Chooses c_{1j} left to right: each entry must split the remaining
    /// first-row target and leave a defined column remainder.
    fn split_first_row(
        &mut self,
        rows: &[usize],
        cols: &[usize],
        j: usize,
        remaining: usize,
        first_row: &mut Vec<usize>,
        acc: &mut Vec<Vec<usize>>,
    ) -> Result<Option<Vec<Vec<usize>>>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(format!(
                "matrix search exceeded {} nodes",
                self.budget
            )));
        }
        let pea = self.pea;
        if j == cols.len() - 1 {
            // Last entry of the row takes the whole remaining target.
            let c = remaining;
            let Some(tail) = pea.solve_right(c, cols[j]) else {
                return Ok(None);
            };
            first_row[j] = c;
            let mut new_cols = cols.to_vec();
            new_cols[j] = tail;
            acc.push(first_row.clone());
            let result = self.run(&rows[1..], &new_cols, acc)?;
            acc.pop();
            return Ok(result);
        }
        for c in 0..pea.len() {
            let Some(rest) = pea.solve_right(c, remaining) else { continue };
            let Some(tail) = pea.solve_right(c, cols[j]) else { continue };
            first_row[j] = c;
            let mut new_cols = cols.to_vec();
            new_cols[j] = tail;
            // Recurse over the remaining row entries with the shrunk target.
            let found =
                self.split_first_row(rows, &new_cols, j + 1, rest, first_row, acc)?;
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

/// Finds a refinement matrix for one equal-sum sequence pair, or `None`
/// when the exhaustive search proves none exists.
pub fn find_mn_matrix(
    pea: &FinitePea,
    rows: &[usize],
    cols: &[usize],
    with_com: bool,
    budget: u64,
) -> Result<Option<Vec<Vec<usize>>>> {
    let mut search = Search {
        pea,
        with_com,
        nodes: 0,
        budget,
    };
    let mut acc = Vec::new();
    search.run(rows, cols, &mut acc)
}

/// All m-tuples with a defined left-to-right sum, grouped by that sum.
fn tuples_by_sum(pea: &FinitePea, m: usize) -> Vec<Vec<Vec<usize>>> {
    let n = pea.len();
    let mut by_sum: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), pea.zero())];
    while let Some((tuple, sum)) = stack.pop() {
        if tuple.len() == m {
            by_sum[sum].push(tuple);
            continue;
        }
        for x in 0..n {
            if let Some(s) = pea.try_add(sum, x) {
                let mut t = tuple.clone();
                t.push(x);
                stack.push((t, s));
            }
        }
    }
    for group in &mut by_sum {
        group.sort();
    }
    by_sum
}

/// Exhaustive (m,n)-refinement check over all equal-sum sequence pairs.
pub fn check_mn_rdp(
    pea: &FinitePea,
    m: usize,
    n: usize,
    with_com: bool,
) -> Result<MnReport> {
    if m < 1 || n < 1 {
        return Err(Error::Precondition("m and n must be at least 1".into()));
    }
    let budget: u64 = 200_000_000;
    let rows_by_sum = tuples_by_sum(pea, m);
    let cols_by_sum = if m == n {
        rows_by_sum.clone()
    } else {
        tuples_by_sum(pea, n)
    };
    for s in 0..pea.len() {
        for rows in &rows_by_sum[s] {
            for cols in &cols_by_sum[s] {
                if find_mn_matrix(pea, rows, cols, with_com, budget)?.is_none() {
                    let mut witness = names(pea, rows);
                    witness.push("=".into());
                    witness.extend(names(pea, cols));
                    return Ok(MnReport {
                        m,
                        n,
                        with_com,
                        verdict: Verdict::Fails {
                            witness,
                            reason: None,
                        },
                    });
                }
            }
        }
    }
    Ok(MnReport {
        m,
        n,
        with_com,
        verdict: Verdict::Holds,
    })
}
