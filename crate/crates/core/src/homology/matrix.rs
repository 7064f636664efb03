use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::snf::{self, SparseColumn};

/// Exact integer matrix stored as sparse columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: Vec<Vec<(usize, BigInt)>>,
}

/// Nonzero Smith diagonal `d_1 | d_2 | ... | d_r` and the rank `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols: vec![Vec::new(); cols],
        }
    }

    /// Builds a matrix from row vectors; all rows must have the same length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), ncols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone().into());
            }
        }
        m
    }

    pub(crate) fn from_columns(rows: usize, cols: Vec<Vec<(usize, BigInt)>>) -> Self {
        IntegerMatrix { rows, cols }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        let col = &self.cols[j];
        match col.binary_search_by_key(&i, |e| e.0) {
            Ok(p) => col[p].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        assert!(i < self.rows, "row {i} out of range");
        let col = &mut self.cols[j];
        match col.binary_search_by_key(&i, |e| e.0) {
            Ok(p) if v.is_zero() => {
                col.remove(p);
            }
            Ok(p) => col[p].1 = v,
            Err(_) if v.is_zero() => {}
            Err(p) => col.insert(p, (i, v)),
        }
    }

    /// Nonzero entries of column `j` as `(row, value)`, by increasing row.
    pub fn column(&self, j: usize) -> &[(usize, BigInt)] {
        &self.cols[j]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.cols()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                d[*i][j] = v.clone();
            }
        }
        d
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut cols = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                cols[*i].push((j, v.clone()));
            }
        }
        IntegerMatrix {
            rows: self.cols(),
            cols,
        }
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols(), other.rows, "dimension mismatch");
        let mut out = Vec::with_capacity(other.cols());
        for col in &other.cols {
            let mut acc = vec![BigInt::zero(); self.rows];
            for (k, v) in col {
                for (i, w) in &self.cols[*k] {
                    acc[*i] += v * w;
                }
            }
            out.push(
                acc.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            );
        }
        IntegerMatrix {
            rows: self.rows,
            cols: out,
        }
    }

    /// Smith normal form computed by the sparse engine.
    pub fn smith_normal_form(&self) -> SmithForm {
        let inv = match self.small_columns() {
            Some(cols) => snf::sparse_invariants(self.rows, cols),
            None => {
                let cols = self
                    .cols
                    .iter()
                    .map(|c| c.iter().map(|(i, v)| (*i as u32, v.clone())).collect())
                    .collect();
                snf::sparse_invariants_big(self.rows, cols)
            }
        };
        let units = inv.rank - inv.torsion.len();
        let mut diagonal = vec![BigInt::from(1); units];
        diagonal.extend(inv.torsion);
        SmithForm {
            diagonal,
            rank: inv.rank,
        }
    }

    fn small_columns(&self) -> Option<Vec<SparseColumn<i64>>> {
        self.cols
            .iter()
            .map(|c| c.iter().map(|(i, v)| Some((*i as u32, v.to_i64()?))).collect())
            .collect()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    m.smith_normal_form()
}
