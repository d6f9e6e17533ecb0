//! Exact rational linear algebra: sparse matrices with rank, kernel and
//! row-space membership over arbitrary-precision fractions.
//!
//! Everything downstream (ideal quotients, derivation kernels, class-span
//! ranks) reduces to the elimination in this module, so it never rounds:
//! scalars are `num`'s reduced big rationals and every pivot step is exact.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::traits::Signed;
use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

/// Exact scalar used across the crate: an arbitrary-precision fraction,
/// always reduced, denominator always positive.
pub type Rational = BigRational;

/// Fraction `num/den` as an exact scalar. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as an exact scalar.
pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// A sparse row: `(column, value)` pairs sorted by column, no zero values.
type SparseRow = Vec<(usize, Rational)>;

/// `target -= coeff * source`, both rows sorted by column.
fn row_axpy(target: &SparseRow, coeff: &Rational, source: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let mut ti = target.iter().peekable();
    let mut si = source.iter().peekable();
    loop {
        match (ti.peek(), si.peek()) {
            (Some((tc, tv)), Some((sc, sv))) => {
                if tc < sc {
                    out.push((*tc, tv.clone()));
                    ti.next();
                } else if tc > sc {
                    out.push((*sc, -(coeff * sv)));
                    si.next();
                } else {
                    let v = tv - coeff * sv;
                    if !v.is_zero() {
                        out.push((*tc, v));
                    }
                    ti.next();
                    si.next();
                }
            }
            (Some((tc, tv)), None) => {
                out.push((*tc, tv.clone()));
                ti.next();
            }
            (None, Some((sc, sv))) => {
                out.push((*sc, -(coeff * sv)));
                si.next();
            }
            (None, None) => break,
        }
    }
    out
}

/// Result of exact Gaussian elimination: pivot rows in reduced row echelon
/// form (pivot entries 1, pivot columns cleared elsewhere).
pub(crate) struct Rref {
    pub rows: Vec<SparseRow>,
    pub pivot_cols: Vec<usize>,
    pub cols: usize,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    pub fn free_cols(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &c in &self.pivot_cols {
            is_pivot[c] = true;
        }
        (0..self.cols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Eliminates the pivot coordinates of `v`, returning the canonical
    /// representative of `v` modulo the row space.
    pub fn reduce_vector(&self, v: &SparseRow) -> SparseRow {
        let mut out = v.clone();
        for (row, &pc) in self.rows.iter().zip(&self.pivot_cols) {
            if let Ok(pos) = out.binary_search_by(|(c, _)| c.cmp(&pc)) {
                let coeff = out[pos].1.clone();
                out = row_axpy(&out, &coeff, row);
            }
        }
        out
    }
}

/// Runs exact Gaussian elimination to reduced row echelon form.
///
/// Pivot rule: scanning columns left to right, pick the candidate entry of
/// smallest absolute value (ties broken by input order). Small pivots keep
/// the fraction growth manageable on the multi-thousand-column kernel
/// computations.
pub(crate) fn rref(rows: Vec<SparseRow>, cols: usize) -> Rref {
    let mut remaining: Vec<SparseRow> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut pivot_rows: Vec<SparseRow> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();

    for col in 0..cols {
        // Rows keep earlier columns eliminated, so a row touches `col`
        // exactly when its leading entry sits there.
        let mut best: Option<usize> = None;
        for (i, row) in remaining.iter().enumerate() {
            if row[0].0 == col {
                best = match best {
                    None => Some(i),
                    Some(j) => {
                        if remaining[i][0].1.abs() < remaining[j][0].1.abs() {
                            Some(i)
                        } else {
                            Some(j)
                        }
                    }
                };
            }
        }
        let Some(best) = best else { continue };
        let pivot = remaining.swap_remove(best);
        let lead = pivot[0].1.clone();
        let mut i = 0;
        while i < remaining.len() {
            if remaining[i][0].0 == col {
                let coeff = &remaining[i][0].1 / &lead;
                let reduced = row_axpy(&remaining[i], &coeff, &pivot);
                if reduced.is_empty() {
                    remaining.swap_remove(i);
                } else {
                    remaining[i] = reduced;
                    i += 1;
                }
            } else {
                i += 1;
            }
        }
        pivot_rows.push(pivot);
        pivot_cols.push(col);
    }

    // Normalize pivots to 1 and clear pivot columns above.
    for row in pivot_rows.iter_mut() {
        let lead = row[0].1.clone();
        if !lead.is_one() {
            for (_, v) in row.iter_mut() {
                *v = &*v / &lead;
            }
        }
    }
    for i in (0..pivot_rows.len()).rev() {
        let pc = pivot_cols[i];
        for j in 0..i {
            if let Ok(pos) = pivot_rows[j].binary_search_by(|(c, _)| c.cmp(&pc)) {
                let coeff = pivot_rows[j][pos].1.clone();
                pivot_rows[j] = row_axpy(&pivot_rows[j], &coeff, &pivot_rows[i]);
            }
        }
    }

    Rref {
        rows: pivot_rows,
        pivot_cols,
        cols,
    }
}

/// An immutable sparse matrix over the rationals. Zero entries are never
/// stored; dimensions are fixed at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    /// Builds a matrix from `(row, col, value)` triplets. Zero values are
    /// dropped; duplicate or out-of-range positions are rejected.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut entries = BTreeMap::new();
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::InvalidMatrix(format!(
                    "entry ({r},{c}) outside {rows}x{cols}"
                )));
            }
            if v.is_zero() {
                continue;
            }
            if entries.insert((r, c), v).is_some() {
                return Err(Error::InvalidMatrix(format!("duplicate entry ({r},{c})")));
            }
        }
        Ok(SparseMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from dense rows (test and CLI convenience).
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        SparseMatrix::from_triplets(
            nrows,
            ncols,
            rows.into_iter().enumerate().flat_map(|(r, row)| {
                row.into_iter().enumerate().map(move |(c, v)| (r, c, v))
            }),
        )
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            entries: (0..n).map(|i| ((i, i), Rational::one())).collect(),
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn sparse_rows(&self) -> Vec<SparseRow> {
        let mut rows: Vec<SparseRow> = vec![Vec::new(); self.rows];
        for (&(r, c), v) in &self.entries {
            rows[r].push((c, v.clone()));
        }
        rows
    }

    /// Rank over the rationals by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        rref(self.sparse_rows(), self.cols).rank()
    }

    /// Exact basis of the right null space. Basis size is always
    /// `cols - rank`; each vector is normalized so its first nonzero entry
    /// is positive.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let reduced = rref(self.sparse_rows(), self.cols);
        kernel_from_rref(&reduced)
    }

    /// Whether `v` is a rational combination of the rows, decided by rank
    /// comparison.
    pub fn in_row_space(&self, v: &[Rational]) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector has {} entries, matrix has {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut rows = self.sparse_rows();
        let vrow: SparseRow = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| (c, x.clone()))
            .collect();
        let base = rref(rows.clone(), self.cols).rank();
        rows.push(vrow);
        Ok(rref(rows, self.cols).rank() == base)
    }

    /// Exact matrix-vector product.
    pub fn mul_vector(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector has {} entries, matrix has {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut out = vec![Rational::zero(); self.rows];
        for (&(r, c), x) in &self.entries {
            if !v[c].is_zero() {
                out[r] += x * &v[c];
            }
        }
        Ok(out)
    }

    /// Determinant of a square matrix by exact elimination.
    pub fn determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut m: Vec<Vec<Rational>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c)).collect())
            .collect();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Ok(Rational::zero());
            };
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            det *= m[col][col].clone();
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let f = &m[r][col] / &m[col][col];
                for c in col..n {
                    let sub = &f * &m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
        Ok(det)
    }

    /// Dense CSV dump, one matrix row per line, entries as reduced fractions.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{}", self.get(r, c));
            }
            out.push('\n');
        }
        out
    }
}

fn kernel_from_rref(reduced: &Rref) -> Vec<Vec<Rational>> {
    let free = reduced.free_cols();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rational::zero(); reduced.cols];
        v[f] = Rational::one();
        for (row, &pc) in reduced.rows.iter().zip(&reduced.pivot_cols) {
            if let Ok(pos) = row.binary_search_by(|(c, _)| c.cmp(&f)) {
                v[pc] = -row[pos].1.clone();
            }
        }
        if let Some(first) = v.iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                for x in v.iter_mut() {
                    *x = -x.clone();
                }
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_identity() {
        assert_eq!(SparseMatrix::identity(3).rank(), 3);
    }

    #[test]
    fn rank_repeated_row() {
        assert_eq!(m(&[&[1, 1], &[1, 1]]).rank(), 1);
    }

    #[test]
    fn rank_proportional_rows() {
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 6]]).rank(), 1);
    }

    #[test]
    fn kernel_identity_empty() {
        assert!(SparseMatrix::identity(4).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_single_row() {
        let k = m(&[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![rat_int(1), rat_int(-1)]]);
    }

    #[test]
    fn kernel_zero_matrix() {
        let k = SparseMatrix::zero(2, 3).kernel_basis();
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(*x, rat_int((i == j) as i64));
            }
        }
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = m(&[&[2, 3, 5, 7], &[1, 0, -1, 2], &[3, 3, 4, 9]]);
        for v in a.kernel_basis() {
            assert!(a.mul_vector(&v).unwrap().iter().all(Rational::is_zero));
        }
        assert_eq!(a.rank() + a.kernel_basis().len(), a.cols());
    }

    #[test]
    fn row_space_membership() {
        assert!(m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
            .in_row_space(&[rat_int(1), rat_int(2), rat_int(3)])
            .unwrap());
        assert!(!m(&[&[1, 0]]).in_row_space(&[rat_int(0), rat_int(1)]).unwrap());
        assert!(m(&[&[1, 1]]).in_row_space(&[rat_int(2), rat_int(2)]).unwrap());
        assert!(m(&[&[1, 0]]).in_row_space(&[rat_int(1)]).is_err());
    }

    #[test]
    fn determinant_small() {
        assert_eq!(m(&[&[2, 1], &[1, 1]]).determinant().unwrap(), rat_int(1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant().unwrap(), rat_int(0));
        assert_eq!(m(&[&[0, 1], &[-1, 0]]).determinant().unwrap(), rat_int(1));
    }

    #[test]
    fn csv_fractions() {
        let a = SparseMatrix::from_rows(vec![vec![rat(1, 2), rat_int(0)]]).unwrap();
        assert_eq!(a.to_csv(), "1/2,0\n");
    }

    #[test]
    fn duplicate_entry_rejected() {
        let r = SparseMatrix::from_triplets(
            2,
            2,
            vec![(0, 0, rat_int(1)), (0, 0, rat_int(2))],
        );
        assert!(r.is_err());
    }
}
