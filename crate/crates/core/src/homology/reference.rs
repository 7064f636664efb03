//! Textbook Smith normal form, kept as an independent check on the engine.
//!
//! Diagonalises with extended-gcd row and column operations on the first
//! nonzero entry, then normalises the diagonal by replacing pairs with their
//! gcd and lcm until it is a divisibility chain. No pivoting heuristics, no
//! sparse tricks, no machine integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Nonzero invariant factors of `m`, positive and in divisibility order.
pub fn reference_smith_diagonal(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = first_nonzero(&a, t) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    row_gcd_step(&mut a, t, i);
                    changed = true;
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    col_gcd_step(&mut a, t, j);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    normalise(diag)
}

fn first_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let cols = a.first().map_or(0, |r| r.len());
    for j in t..cols {
        for (i, row) in a.iter().enumerate().skip(t) {
            if !row[j].is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Unimodular combination of rows `t` and `i` that zeroes `a[i][t]`.
fn row_gcd_step(a: &mut [Vec<BigInt>], t: usize, i: usize) {
    let (x, y) = (a[t][t].clone(), a[i][t].clone());
    if y.is_multiple_of(&x) {
        let q = &y / &x;
        for j in 0..a[t].len() {
            let d = &q * &a[t][j];
            a[i][j] -= d;
        }
        return;
    }
    let e = x.extended_gcd(&y);
    let (g, s, u) = (e.gcd, e.x, e.y);
    let (xg, yg) = (&x / &g, &y / &g);
    for j in 0..a[t].len() {
        let (p, q) = (a[t][j].clone(), a[i][j].clone());
        a[t][j] = &s * &p + &u * &q;
        a[i][j] = &xg * &q - &yg * &p;
    }
}

fn col_gcd_step(a: &mut [Vec<BigInt>], t: usize, j: usize) {
    let (x, y) = (a[t][t].clone(), a[t][j].clone());
    if y.is_multiple_of(&x) {
        let q = &y / &x;
        for row in a.iter_mut() {
            let d = &q * &row[t];
            row[j] -= d;
        }
        return;
    }
    let e = x.extended_gcd(&y);
    let (g, s, u) = (e.gcd, e.x, e.y);
    let (xg, yg) = (&x / &g, &y / &g);
    for row in a.iter_mut() {
        let (p, q) = (row[t].clone(), row[j].clone());
        row[t] = &s * &p + &u * &q;
        row[j] = &xg * &q - &yg * &p;
    }
}

fn normalise(mut d: Vec<BigInt>) -> Vec<BigInt> {
    loop {
        let mut stable = true;
        for i in 0..d.len() {
            for j in i + 1..d.len() {
                if !d[j].is_multiple_of(&d[i]) {
                    let g = d[i].gcd(&d[j]);
                    let l = d[i].lcm(&d[j]);
                    d[i] = g;
                    d[j] = l;
                    stable = false;
                }
            }
        }
        if stable {
            return d;
        }
    }
}
