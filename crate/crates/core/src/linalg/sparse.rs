use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{LinalgError, Matrix, Rational};

/// A column-major sparse matrix; each column lists `(row, value)` with
/// strictly increasing rows and no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds a matrix from unsorted column entries; repeated rows are summed
    /// and zeros dropped.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, Rational)>>) -> Result<Self, LinalgError> {
        let cols = columns.len();
        let mut out = Vec::with_capacity(cols);
        for col in columns {
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (r, v) in col {
                if r >= rows {
                    return Err(LinalgError::Shape { expected: rows, found: r + 1 });
                }
                *acc.entry(r).or_default() += v;
            }
            out.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        Ok(SparseMatrix { rows, cols, columns: out })
    }

    pub fn from_dense(m: &Matrix) -> Self {
        let columns = (0..m.cols())
            .map(|j| {
                (0..m.rows())
                    .filter(|&i| !m.get(i, j).is_zero())
                    .map(|i| (i, m.get(i, j).clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: m.rows(),
            cols: m.cols(),
            columns,
        }
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, Rational)] {
        &self.columns[j]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// The first nonzero entry in column-major order, as `(row, col, value)`.
    pub fn first_nonzero(&self) -> Option<(usize, usize, Rational)> {
        self.columns
            .iter()
            .enumerate()
            .find_map(|(j, col)| col.first().map(|(i, v)| (*i, j, v.clone())))
    }

    /// The product `self · rhs`.
    pub fn compose(&self, rhs: &SparseMatrix) -> Result<SparseMatrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::Shape {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let columns: Vec<Vec<(usize, Rational)>> = rhs
            .columns
            .par_iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (k, b) in col {
                    for (i, a) in &self.columns[*k] {
                        *acc.entry(*i).or_default() += &(a * b);
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Ok(SparseMatrix {
            rows: self.rows,
            cols: rhs.cols,
            columns,
        })
    }

    /// Exact rank. The matrix is first split into the connected components of
    /// its row/column incidence graph; each block is then eliminated densely.
    pub fn rank(&self) -> usize {
        let mut uf = UnionFind::new(self.rows + self.cols);
        for (j, col) in self.columns.iter().enumerate() {
            for (i, _) in col {
                uf.union(*i, self.rows + j);
            }
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (j, col) in self.columns.iter().enumerate() {
            if !col.is_empty() {
                blocks.entry(uf.find(self.rows + j)).or_default().push(j);
            }
        }
        let blocks: Vec<Vec<usize>> = blocks.into_values().collect();
        blocks.par_iter().map(|cols| self.block_rank(cols)).sum()
    }

    fn block_rank(&self, cols: &[usize]) -> usize {
        let mut row_ids: Vec<usize> = cols.iter().flat_map(|&j| self.columns[j].iter().map(|(i, _)| *i)).collect();
        row_ids.sort_unstable();
        row_ids.dedup();
        if cols.len() == 1 || row_ids.len() == 1 {
            return 1;
        }
        let local: BTreeMap<usize, usize> = row_ids.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        // rank is transpose-invariant; eliminate over the shorter side
        let mut m = Matrix::zeros(row_ids.len(), cols.len());
        for (b, &j) in cols.iter().enumerate() {
            for (i, v) in &self.columns[j] {
                m.set(local[i], b, v.clone());
            }
        }
        if m.rows() > m.cols() {
            m = m.transpose();
        }
        m.rank()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}
