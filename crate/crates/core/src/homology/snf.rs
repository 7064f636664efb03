//! Smith normal form engine.
//!
//! Sparse phase: eliminate ±1 pivots (each contributes an invariant factor 1)
//! choosing short columns and short rows first to keep fill-in low. Arithmetic
//! runs in checked `i64`; on overflow the whole matrix is redone over `BigInt`.
//! Whatever is left has no unit entries and goes through a dense `BigInt`
//! reduction with smallest-magnitude pivots.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type SparseColumn<C> = Vec<(u32, C)>;

pub(crate) trait Coeff: Clone + PartialEq + Send + Sync {
    fn is_null(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `self - f * b`, or `None` on overflow.
    fn sub_mul(&self, f: &Self, b: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Coeff for i64 {
    fn is_null(&self) -> bool {
        *self == 0
    }

    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }

    fn sub_mul(&self, f: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(f.checked_mul(*b)?)
    }

    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }

    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }

    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for BigInt {
    fn is_null(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }

    fn sub_mul(&self, f: &Self, b: &Self) -> Option<Self> {
        Some(self - f * b)
    }

    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }

    fn neg(&self) -> Option<Self> {
        Some(-self)
    }

    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Rank and the invariant factors greater than one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Invariants {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

/// Invariant factors of a sparse integer matrix with `nrows` rows.
pub(crate) fn sparse_invariants(nrows: usize, cols: Vec<SparseColumn<i64>>) -> Invariants {
    let backup = cols.clone();
    match eliminate_units(nrows, cols) {
        Some(r) => finish(r),
        None => {
            let big = backup
                .into_iter()
                .map(|c| c.into_iter().map(|(r, v)| (r, BigInt::from(v))).collect())
                .collect();
            sparse_invariants_big(nrows, big)
        }
    }
}

pub(crate) fn sparse_invariants_big(nrows: usize, cols: Vec<SparseColumn<BigInt>>) -> Invariants {
    finish(eliminate_units(nrows, cols).expect("BigInt arithmetic cannot overflow"))
}

fn finish<C: Coeff>(r: Eliminated<C>) -> Invariants {
    let diagonal = dense_smith_diagonal(residual_dense(&r.residual));
    let mut torsion = Vec::new();
    let mut rank = r.unit_pivots;
    for d in diagonal {
        rank += 1;
        if !d.is_one() {
            torsion.push(d);
        }
    }
    Invariants { rank, torsion }
}

struct Eliminated<C> {
    unit_pivots: usize,
    residual: Vec<SparseColumn<C>>,
}

fn eliminate_units<C: Coeff>(nrows: usize, mut cols: Vec<SparseColumn<C>>) -> Option<Eliminated<C>> {
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); nrows];
    for (j, col) in cols.iter().enumerate() {
        for &(r, _) in col {
            rows[r as usize].push(j as u32);
        }
    }
    let mut col_dead = vec![false; cols.len()];
    let mut queue: BinaryHeap<Reverse<(usize, u32)>> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| Reverse((c.len(), j as u32)))
        .collect();
    let mut unit_pivots = 0;
    let mut scratch: Vec<(u32, C)> = Vec::new();

    while let Some(Reverse((len, c))) = queue.pop() {
        let c = c as usize;
        if col_dead[c] || cols[c].len() != len {
            continue;
        }
        if len == 0 {
            col_dead[c] = true;
            continue;
        }
        let Some(&(r, ref p)) = cols[c]
            .iter()
            .filter(|(_, v)| v.is_unit())
            .min_by_key(|(r, _)| rows[*r as usize].len())
        else {
            continue;
        };
        let p = p.clone();
        let pivot_col = std::mem::take(&mut cols[c]);
        col_dead[c] = true;
        unit_pivots += 1;

        let mut others = std::mem::take(&mut rows[r as usize]);
        others.sort_unstable();
        others.dedup();
        for &c2 in &others {
            let c2 = c2 as usize;
            if col_dead[c2] {
                continue;
            }
            let Ok(pos) = cols[c2].binary_search_by_key(&r, |e| e.0) else {
                continue;
            };
            // p is its own inverse
            let f = cols[c2][pos].1.mul(&p)?;
            scratch.clear();
            let target = &cols[c2];
            let (mut i, mut k) = (0, 0);
            while i < target.len() || k < pivot_col.len() {
                let ti = target.get(i).map(|e| e.0);
                let pk = pivot_col.get(k).map(|e| e.0);
                match (ti, pk) {
                    (Some(a), Some(b)) if a == b => {
                        let v = target[i].1.sub_mul(&f, &pivot_col[k].1)?;
                        if !v.is_null() {
                            scratch.push((a, v));
                        }
                        i += 1;
                        k += 1;
                    }
                    (Some(a), Some(b)) if a < b => {
                        scratch.push(target[i].clone());
                        i += 1;
                    }
                    (Some(_), None) => {
                        scratch.push(target[i].clone());
                        i += 1;
                    }
                    (_, Some(b)) => {
                        let v = pivot_col[k].1.mul(&f)?.neg()?;
                        rows[b as usize].push(c2 as u32);
                        scratch.push((b, v));
                        k += 1;
                    }
                    (None, None) => unreachable!(),
                }
            }
            std::mem::swap(&mut cols[c2], &mut scratch);
            queue.push(Reverse((cols[c2].len(), c2 as u32)));
        }
    }

    let residual = cols
        .into_iter()
        .zip(col_dead)
        .filter(|(c, dead)| !dead && !c.is_empty())
        .map(|(c, _)| c)
        .collect();
    Some(Eliminated {
        unit_pivots,
        residual,
    })
}

fn residual_dense<C: Coeff>(cols: &[SparseColumn<C>]) -> Vec<Vec<BigInt>> {
    let mut row_ids: Vec<u32> = cols.iter().flat_map(|c| c.iter().map(|e| e.0)).collect();
    row_ids.sort_unstable();
    row_ids.dedup();
    let mut m = vec![vec![BigInt::zero(); cols.len()]; row_ids.len()];
    for (j, col) in cols.iter().enumerate() {
        for (r, v) in col {
            let i = row_ids.binary_search(r).expect("row collected above");
            m[i][j] = v.to_big();
        }
    }
    m
}

/// Nonzero diagonal of the Smith normal form of a dense matrix, positive and
/// in divisibility order.
pub(crate) fn dense_smith_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut diagonal = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_abs_entry(&a, t, t..m, t..n) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..n {
                        let d = &q * &a[t][j];
                        a[i][j] -= d;
                    }
                    dirty |= !a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let d = &q * &row[t];
                        row[j] -= d;
                    }
                    dirty |= !a[t][j].is_zero();
                }
            }
            if dirty {
                // a smaller remainder appeared in the pivot row or column
                let (pi, pj) = min_abs_cross(&a, t);
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                continue;
            }
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match offender {
                Some(i) => {
                    for j in t..n {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[t][t].abs());
    }
    diagonal
}

fn min_abs_entry(
    a: &[Vec<BigInt>],
    _t: usize,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in rows {
        for j in cols.clone() {
            let v = a[i][j].abs();
            if v.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|b| v < b.2) {
                let unit = v.is_one();
                best = Some((i, j, v));
                if unit {
                    let (i, j, _) = best.unwrap();
                    return Some((i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Smallest nonzero entry in row `t` or column `t` (at or beyond the diagonal).
fn min_abs_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t, a[t][t].abs());
    for (i, row) in a.iter().enumerate().skip(t + 1) {
        let v = row[t].abs();
        if !v.is_zero() && v < best.2 {
            best = (i, t, v);
        }
    }
    for j in t + 1..a[t].len() {
        let v = a[t][j].abs();
        if !v.is_zero() && v < best.2 {
            best = (t, j, v);
        }
    }
    (best.0, best.1)
}
