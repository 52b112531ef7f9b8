//! Sparse matrices over a [`Field`], Kronecker products, and exact elimination.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::scalar::Field;

/// Row-major sparse matrix. Each row holds `(column, value)` pairs sorted by column,
/// with no stored zeros, so structural equality is matrix equality.
#[derive(Clone, PartialEq)]
pub struct SparseMatrix<T: Field> {
    rows: usize,
    cols: usize,
    ctx: T::Ctx,
    data: Vec<Vec<(usize, T)>>,
}

impl<T: Field> SparseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize, ctx: &T::Ctx) -> Self {
        SparseMatrix { rows, cols, ctx: ctx.clone(), data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize, ctx: &T::Ctx) -> Self {
        Self::diagonal((0..n).map(|_| T::one(ctx)).collect(), ctx)
    }

    pub fn diagonal(entries: Vec<T>, ctx: &T::Ctx) -> Self {
        let n = entries.len();
        let data = entries
            .into_iter()
            .enumerate()
            .map(|(i, x)| if x.is_zero() { Vec::new() } else { vec![(i, x)] })
            .collect();
        SparseMatrix { rows: n, cols: n, ctx: ctx.clone(), data }
    }

    /// Entries at repeated positions are summed.
    pub fn from_triplets<I>(rows: usize, cols: usize, ctx: &T::Ctx, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, T)>,
    {
        let mut acc: Vec<BTreeMap<usize, T>> = vec![BTreeMap::new(); rows];
        for (r, c, x) in triplets {
            assert!(r < rows && c < cols, "triplet ({r}, {c}) outside {rows}x{cols}");
            match acc[r].get_mut(&c) {
                Some(y) => *y = y.add(&x),
                None => {
                    acc[r].insert(c, x);
                }
            }
        }
        let data = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        SparseMatrix { rows, cols, ctx: ctx.clone(), data }
    }

    pub fn from_dense(dense: &[Vec<T>], cols: usize, ctx: &T::Ctx) -> Self {
        let data = dense
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(c, x)| (c, x.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix { rows: dense.len(), cols, ctx: ctx.clone(), data }
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        self.data
            .iter()
            .map(|row| {
                let mut out = vec![T::zero(&self.ctx); self.cols];
                for (c, x) in row {
                    out[*c] = x.clone();
                }
                out
            })
            .collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn row(&self, r: usize) -> &[(usize, T)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&T> {
        let row = &self.data[r];
        row.binary_search_by_key(&c, |e| e.0).ok().map(|i| &row[i].1)
    }

    /// Entry value, materializing zero.
    pub fn at(&self, r: usize, c: usize) -> T {
        self.get(r, c).cloned().unwrap_or_else(|| T::zero(&self.ctx))
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.data.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, x)| (r, *c, x)))
    }

    fn merge_rows(a: &[(usize, T)], b: &[(usize, T)], sign: bool) -> Vec<(usize, T)> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_a {
                out.push(a[i].clone());
                i += 1;
            } else if take_b {
                let x = if sign { b[j].1.neg() } else { b[j].1.clone() };
                out.push((b[j].0, x));
                j += 1;
            } else {
                let x = if sign { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                if !x.is_zero() {
                    out.push((a[i].0, x));
                }
                i += 1;
                j += 1;
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self
            .data
            .par_iter()
            .zip(other.data.par_iter())
            .map(|(a, b)| Self::merge_rows(a, b, sign))
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, ctx: self.ctx.clone(), data }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols, &self.ctx);
        }
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(j, x)| (*j, c.mul(x))).filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, ctx: self.ctx.clone(), data }
    }

    /// `self · diag(d)`.
    pub fn scale_columns(&self, d: &[T]) -> Self {
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(j, x)| (*j, x.mul(&d[*j]))).filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, ctx: self.ctx.clone(), data }
    }

    /// `diag(d) · self`.
    pub fn scale_rows(&self, d: &[T]) -> Self {
        let data = self
            .data
            .iter()
            .zip(d)
            .map(|(row, c)| row.iter().map(|(j, x)| (*j, c.mul(x))).filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, ctx: self.ctx.clone(), data }
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|row| row.iter().map(|(j, x)| (*j, x.neg())).collect()).collect();
        SparseMatrix { rows: self.rows, cols: self.cols, ctx: self.ctx.clone(), data }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let data = self
            .data
            .par_iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, T> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &other.data[*k] {
                        let p = a.mul(b);
                        match acc.get_mut(j) {
                            Some(y) => *y = y.add(&p),
                            None => {
                                acc.insert(*j, p);
                            }
                        }
                    }
                }
                acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: other.cols, ctx: self.ctx.clone(), data }
    }

    /// Kronecker product; row index of the result is `r1 * rows2 + r2`.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = vec![Vec::new(); rows];
        for (r1, row1) in self.data.iter().enumerate() {
            for (r2, row2) in other.data.iter().enumerate() {
                let out = &mut data[r1 * other.rows + r2];
                for (c1, a) in row1 {
                    for (c2, b) in row2 {
                        let p = a.mul(b);
                        if !p.is_zero() {
                            out.push((c1 * other.cols + c2, p));
                        }
                    }
                }
            }
        }
        SparseMatrix { rows, cols, ctx: self.ctx.clone(), data }
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, x) in row {
                data[*c].push((r, x.clone()));
            }
        }
        SparseMatrix { rows: self.cols, cols: self.rows, ctx: self.ctx.clone(), data }
    }

    /// Apply a field map entrywise (e.g. point evaluation).
    pub fn try_map<U: Field, E, F>(&self, ctx: &U::Ctx, f: F) -> Result<SparseMatrix<U>, E>
    where
        F: Fn(&T) -> Result<U, E>,
    {
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut out = Vec::with_capacity(row.len());
            for (c, x) in row {
                let y = f(x)?;
                if !y.is_zero() {
                    out.push((*c, y));
                }
            }
            data.push(out);
        }
        Ok(SparseMatrix { rows: self.rows, cols: self.cols, ctx: ctx.clone(), data })
    }

    /// Same-field entrywise map.
    pub fn map<F: Fn(&T) -> T>(&self, f: F) -> Self {
        self.try_map::<T, std::convert::Infallible, _>(&self.ctx, |x| Ok(f(x))).unwrap()
    }

    /// Reindex rows and columns: entry `(r, c)` moves to `(perm[r], perm[c])`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(self.rows, self.cols);
        Self::from_triplets(
            self.rows,
            self.cols,
            &self.ctx,
            self.triplets().map(|(r, c, x)| (perm[r], perm[c], x.clone())),
        )
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let inv = invert_dense(self.to_dense(), &self.ctx)?;
        Some(Self::from_dense(&inv, self.cols, &self.ctx))
    }
}

impl<T: Field + fmt::Display> fmt::Debug for SparseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} sparse matrix, {} nonzeros", self.rows, self.cols, self.nnz())?;
        for (r, c, x) in self.triplets() {
            writeln!(f, "  ({}, {}) = {}", r + 1, c + 1, x)?;
        }
        Ok(())
    }
}

/// Outcome of rank-revealing elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    pub rank: usize,
    /// Original row indices of the pivots, in elimination order.
    pub pivot_rows: Vec<usize>,
    /// Original column indices of the pivots, in elimination order.
    pub pivot_cols: Vec<usize>,
}

/// Fraction-free (Bareiss) elimination with full pivoting; at every step the pivot of
/// smallest [`Field::complexity`] is taken. The selected rows and columns index a
/// nonsingular `rank x rank` submatrix.
pub fn bareiss_rank<T: Field>(m: &[Vec<T>], ctx: &T::Ctx) -> RankProfile {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<T>> = m.to_vec();
    let mut row_ids: Vec<usize> = (0..nrows).collect();
    let mut col_ids: Vec<usize> = (0..ncols).collect();
    let mut prev = T::one(ctx);
    let mut rank = 0;
    for k in 0..nrows.min(ncols) {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, x) in row.iter().enumerate().skip(k) {
                if !x.is_zero() {
                    let w = x.complexity();
                    if best.is_none_or(|b| w < b.2) {
                        best = Some((i, j, w));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        a.swap(k, pi);
        row_ids.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        col_ids.swap(k, pj);
        let pivot = a[k][k].clone();
        let prev_inv = prev.inv().expect("previous pivot is nonzero");
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        bottom.par_iter_mut().for_each(|row| {
            let lead = row[k].clone();
            for j in (k + 1)..ncols {
                let x = pivot.mul(&row[j]).sub(&lead.mul(&pivot_row[j]));
                row[j] = x.mul(&prev_inv);
            }
            row[k] = T::zero(ctx);
        });
        prev = pivot;
        rank += 1;
    }
    RankProfile { rank, pivot_rows: row_ids[..rank].to_vec(), pivot_cols: col_ids[..rank].to_vec() }
}

/// Gauss–Jordan inverse; `None` if singular.
pub fn invert_dense<T: Field>(mut a: Vec<Vec<T>>, ctx: &T::Ctx) -> Option<Vec<Vec<T>>> {
    let n = a.len();
    let mut inv: Vec<Vec<T>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one(ctx) } else { T::zero(ctx) }).collect())
        .collect();
    for k in 0..n {
        let p = (k..n)
            .filter(|&i| !a[i][k].is_zero())
            .min_by_key(|&i| a[i][k].complexity())?;
        a.swap(k, p);
        inv.swap(k, p);
        let pinv = a[k][k].inv()?;
        for j in 0..n {
            a[k][j] = a[k][j].mul(&pinv);
            inv[k][j] = inv[k][j].mul(&pinv);
        }
        let (arow, irow) = (a[k].clone(), inv[k].clone());
        a.par_iter_mut().zip(inv.par_iter_mut()).enumerate().for_each(|(i, (ar, ir))| {
            if i == k || ar[k].is_zero() {
                return;
            }
            let f = ar[k].clone();
            for j in 0..n {
                if !arow[j].is_zero() {
                    ar[j] = ar[j].sub(&f.mul(&arow[j]));
                }
                if !irow[j].is_zero() {
                    ir[j] = ir[j].sub(&f.mul(&irow[j]));
                }
            }
        });
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Scalar, ScalarSpec};

    fn k() -> ScalarSpec {
        ScalarSpec::rational(1)
    }

    fn m(rows: &[&[i64]]) -> SparseMatrix<Scalar> {
        let k = k();
        let dense: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| k.from_int(x)).collect()).collect();
        SparseMatrix::from_dense(&dense, rows[0].len(), &k)
    }

    #[test]
    fn product_and_identity() {
        let a = m(&[&[1, 2], &[0, 3]]);
        let b = m(&[&[4, 0], &[1, 1]]);
        assert_eq!(a.mul(&b), m(&[&[6, 2], &[3, 3]]));
        assert_eq!(a.mul(&SparseMatrix::identity(2, &k())), a);
    }

    #[test]
    fn kron_layout() {
        let a = m(&[&[0, 1], &[0, 0]]);
        let i = SparseMatrix::identity(2, &k());
        let ai = a.kron(&i);
        // (r1, r2) -> 2 r1 + r2: entry ((0,x),(1,x))
        assert!(ai.get(0, 2).unwrap().is_one());
        assert!(ai.get(1, 3).unwrap().is_one());
        assert_eq!(ai.nnz(), 2);
        assert_eq!(ai.rows(), 4);
    }

    #[test]
    fn rank_profile_of_singular() {
        let k = k();
        let rows: Vec<Vec<Scalar>> = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| k.from_int(x)).collect())
            .collect();
        let p = bareiss_rank(&rows, &k);
        assert_eq!(p.rank, 2);
        let sub: Vec<Vec<Scalar>> =
            p.pivot_rows.iter().map(|&i| p.pivot_cols.iter().map(|&j| rows[i][j].clone()).collect()).collect();
        assert!(invert_dense(sub, &k).is_some());
    }

    #[test]
    fn inverse_round_trip() {
        let k = k();
        let v = k.v_pow(1);
        let dense = vec![vec![v.clone(), k.one()], vec![k.one(), v.inv().unwrap()]];
        let a = SparseMatrix::from_dense(&dense, 2, &k);
        // det = 1 - 1 = 0: singular
        assert!(a.inverse().is_none());
        let dense = vec![vec![v.clone(), k.one()], vec![k.zero(), v.clone()]];
        let a = SparseMatrix::from_dense(&dense, 2, &k);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), SparseMatrix::identity(2, &k));
    }
}
