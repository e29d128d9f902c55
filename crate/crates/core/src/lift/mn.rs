//! Growing 2x2 refinements to m x n matrices over a group's positive cone:
//! the last two columns are merged, the smaller matrix is refined
//! recursively, and its final column is split by a fresh 2x2 refinement.
//! Wide-but-short instances are transposed first.

use super::{GroupQuad, RefineOracle};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::PoGroup;

/// Checks positivity of all entries and that rows/columns sum to the given
/// sequences, left to right and top to bottom.
pub fn validate_group_matrix(
    g: &PoGroup,
    rows: &[Element],
    cols: &[Element],
    matrix: &[Vec<Element>],
) -> Result<()> {
    if matrix.len() != rows.len() || matrix.iter().any(|r| r.len() != cols.len()) {
        return Err(Error::Precondition("matrix shape mismatch".into()));
    }
    for row in matrix {
        for c in row {
            if !g.in_cone(c)? {
                return Err(Error::Oracle(format!(
                    "matrix entry {} is not positive",
                    g.format_element(c)
                )));
            }
        }
    }
    for (i, want) in rows.iter().enumerate() {
        let got = g.sum(&matrix[i])?;
        if got != *want {
            return Err(Error::Oracle(format!("row {i} sums wrong")));
        }
    }
    for (j, want) in cols.iter().enumerate() {
        let col: Vec<Element> = matrix.iter().map(|r| r[j].clone()).collect();
        let got = g.sum(&col)?;
        if got != *want {
            return Err(Error::Oracle(format!("column {j} sums wrong")));
        }
    }
    Ok(())
}

fn transpose(matrix: Vec<Vec<Element>>) -> Vec<Vec<Element>> {
    if matrix.is_empty() {
        return matrix;
    }
    let n = matrix[0].len();
    (0..n)
        .map(|j| matrix.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Joint refinement of an m-term and an n-term decomposition of the same
/// positive element into an m x n matrix. The output is revalidated.
pub fn mn_refine(
    o: &RefineOracle,
    rows: &[Element],
    cols: &[Element],
) -> Result<Vec<Vec<Element>>> {
    let g = o.group().clone();
    if rows.is_empty() || cols.is_empty() {
        return Err(Error::Precondition("empty decomposition".into()));
    }
    for x in rows.iter().chain(cols) {
        if !g.in_cone(x)? {
            return Err(Error::NotPositive(g.format_element(x)));
        }
    }
    if g.sum(rows)? != g.sum(cols)? {
        return Err(Error::Precondition("decompositions have unequal sums".into()));
    }
    let matrix = mn_inner(o, &g, rows, cols)?;
    validate_group_matrix(&g, rows, cols, &matrix)?;
    Ok(matrix)
}

fn mn_inner(
    o: &RefineOracle,
    g: &PoGroup,
    rows: &[Element],
    cols: &[Element],
) -> Result<Vec<Vec<Element>>> {
    let (m, n) = (rows.len(), cols.len());
    if m == 1 {
        return Ok(vec![cols.to_vec()]);
    }
    if n == 1 {
        return Ok(rows.iter().map(|r| vec![r.clone()]).collect());
    }
    if m == 2 && n == 2 {
        let t = o.refine(&GroupQuad::new(
            rows[0].clone(),
            rows[1].clone(),
            cols[0].clone(),
            cols[1].clone(),
        ))?;
        return Ok(vec![vec![t.c11, t.c12], vec![t.c21, t.c22]]);
    }
    if n == 2 {
        // Tall case: transpose, grow columns, transpose back.
        return Ok(transpose(mn_inner(o, g, cols, rows)?));
    }
    // Merge the last two columns, refine, then split the final column.
    let merged_last = g.add(&cols[n - 2], &cols[n - 1])?;
    let mut merged: Vec<Element> = cols[..n - 2].to_vec();
    merged.push(merged_last);
    let smaller = mn_inner(o, g, rows, &merged)?;
    let last_col: Vec<Element> = smaller.iter().map(|r| r[n - 2].clone()).collect();
    let split = mn_inner(o, g, &last_col, &cols[n - 2..])?;
    let mut out = Vec::with_capacity(m);
    for (row, tail) in smaller.into_iter().zip(split) {
        let mut new_row: Vec<Element> = row[..n - 2].to_vec();
        new_row.extend(tail);
        out.push(new_row);
    }
    Ok(out)
}

/// The com side condition at matrix scale, verified by bounded sampling:
/// for every i < m, j < n the column tail below position (i, j) must
/// commute with the row tail to its right on all sampled sub-elements.
pub fn matrix_com_condition_sampled(
    g: &PoGroup,
    matrix: &[Vec<Element>],
    radius: i64,
) -> Result<bool> {
    let m = matrix.len();
    let n = matrix[0].len();
    for i in 0..m.saturating_sub(1) {
        for j in 0..n.saturating_sub(1) {
            let col_tail: Vec<Element> = (i + 1..m).map(|r| matrix[r][j].clone()).collect();
            let row_tail: Vec<Element> = (j + 1..n).map(|c| matrix[i][c].clone()).collect();
            let ct = g.sum(&col_tail)?;
            let rt = g.sum(&row_tail)?;
            if !super::com_sampled(g, &ct, &rt, radius)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
