//! Dense matrices over a finite field.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};

/// Row-major `rows x cols` matrix of packed field values.
#[derive(Clone)]
pub struct MatGF {
    ctx: Arc<FieldCtx>,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl PartialEq for MatGF {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.id() == other.ctx.id()
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl Eq for MatGF {}

impl fmt::Debug for MatGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatGF {}x{} over {}", self.rows, self.cols, self.ctx.id())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl MatGF {
    pub fn new(ctx: &Arc<FieldCtx>, rows: usize, cols: usize, data: Vec<u32>) -> MatGF {
        assert_eq!(data.len(), rows * cols, "data length does not match the shape");
        assert!(data.iter().all(|&c| c < ctx.order()), "entry outside the field");
        MatGF {
            ctx: Arc::clone(ctx),
            rows,
            cols,
            data,
        }
    }

    pub fn zeros(ctx: &Arc<FieldCtx>, rows: usize, cols: usize) -> MatGF {
        MatGF::new(ctx, rows, cols, vec![0; rows * cols])
    }

    pub fn identity(ctx: &Arc<FieldCtx>, n: usize) -> MatGF {
        let mut m = MatGF::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Stacks rows of equal length `cols`.
    pub fn from_rows(ctx: &Arc<FieldCtx>, cols: usize, rows: &[Vec<u32>]) -> MatGF {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        MatGF::new(ctx, rows.len(), cols, data)
    }

    pub fn from_elems(ctx: &Arc<FieldCtx>, rows: &[Vec<FieldElem>]) -> Result<MatGF> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut raw = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != cols {
                return Err(Error::ShapeMismatch("ragged rows".into()));
            }
            let mut row = Vec::with_capacity(cols);
            for e in r {
                if e.field() != ctx.id() {
                    return Err(Error::FieldMismatch {
                        left: e.field().to_string(),
                        right: ctx.id().to_string(),
                    });
                }
                row.push(e.raw());
            }
            raw.push(row);
        }
        Ok(MatGF::from_rows(ctx, cols, &raw))
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        assert!(v < self.ctx.order());
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> MatGF {
        let mut t = MatGF::zeros(&self.ctx, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    /// Submatrix on the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> MatGF {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            let row = self.row(r);
            data.extend(cols.iter().map(|&c| row[c]));
        }
        MatGF::new(&self.ctx, self.rows, cols.len(), data)
    }

    /// `M v^T`.
    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| self.ctx.add(acc, self.ctx.mul(a, b)))
            })
            .collect()
    }

    pub fn mul(&self, other: &MatGF) -> Result<MatGF> {
        if self.cols != other.rows || self.ctx.id() != other.ctx.id() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = MatGF::zeros(&self.ctx, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out.data[idx] = self.ctx.add(out.data[idx], self.ctx.mul(a, other.get(k, c)));
                }
            }
        }
        Ok(out)
    }

    /// In-place Gauss–Jordan elimination with first-nonzero pivoting. Returns the pivot
    /// columns; rows past `pivots.len()` are zero afterwards.
    fn eliminate(&mut self) -> Vec<usize> {
        let ctx = Arc::clone(&self.ctx);
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..cols {
            if next == self.rows {
                break;
            }
            let Some(p) = (next..self.rows).find(|&r| self.get(r, c) != 0) else {
                continue;
            };
            if p != next {
                for j in 0..cols {
                    self.data.swap(p * cols + j, next * cols + j);
                }
            }
            let inv = ctx.inv(self.get(next, c)).unwrap();
            for j in c..cols {
                let idx = next * cols + j;
                self.data[idx] = ctx.mul(self.data[idx], inv);
            }
            for r in 0..self.rows {
                if r == next {
                    continue;
                }
                let factor = self.get(r, c);
                if factor == 0 {
                    continue;
                }
                let f = ctx.neg(factor);
                for j in c..cols {
                    let v = self.data[next * cols + j];
                    if v != 0 {
                        let idx = r * cols + j;
                        self.data[idx] = ctx.add(self.data[idx], ctx.mul(f, v));
                    }
                }
            }
            pivots.push(c);
            next += 1;
        }
        pivots
    }

    /// Reduced row-echelon form, same shape (zero rows at the bottom).
    pub fn rref(&self) -> MatGF {
        let mut m = self.clone();
        m.eliminate();
        m
    }

    /// Reduced row-echelon basis of the row space (zero rows dropped) and its pivots.
    pub fn rref_basis_with_pivots(&self) -> (MatGF, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.eliminate();
        m.data.truncate(pivots.len() * m.cols);
        m.rows = pivots.len();
        (m, pivots)
    }

    pub fn rref_basis(&self) -> MatGF {
        self.rref_basis_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate().len()
    }

    /// Basis (as rows) of `{v : M v^T = 0}`.
    pub fn kernel(&self) -> MatGF {
        let (basis, pivots) = self.rref_basis_with_pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = MatGF::zeros(&self.ctx, free.len(), self.cols);
        for (i, &f) in free.iter().enumerate() {
            out.set(i, f, 1);
            for (r, &p) in pivots.iter().enumerate() {
                out.set(i, p, self.ctx.neg(basis.get(r, f)));
            }
        }
        out
    }

    fn check_compatible(&self, other: &MatGF) -> Result<()> {
        if self.ctx.id() != other.ctx.id() {
            return Err(Error::FieldMismatch {
                left: self.ctx.id().to_string(),
                right: other.ctx.id().to_string(),
            });
        }
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{} columns vs {} columns",
                self.cols, other.cols
            )));
        }
        Ok(())
    }

    /// True iff the two row spaces coincide.
    pub fn row_space_equal(&self, other: &MatGF) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.rref_basis() == other.rref_basis())
    }

    /// True iff every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &MatGF) -> Result<bool> {
        self.check_compatible(other)?;
        let r = self.rank();
        Ok(self.vstack(other).rank() == r)
    }

    pub fn vstack(&self, other: &MatGF) -> MatGF {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        MatGF::new(&self.ctx, self.rows + other.rows, self.cols, data)
    }
}
