//! Dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use super::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !self.pivots.contains(c)) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &p) in self.pivots.iter().enumerate() {
                v[p] = -self.matrix[row][free].clone();
            }
            basis.push(v);
        }
        basis
    }
}

pub fn rref(m: &[Vec<Rational>], cols: usize) -> Rref {
    let mut a: Matrix = m.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..a.len() {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..cols {
                    let delta = &f * &a[row][c];
                    a[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    a.truncate(pivots.len());
    Rref {
        matrix: a,
        pivots,
        cols,
    }
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    rref(m, cols).rank()
}

pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        det *= &a[col][col];
        let inv = a[col][col].recip();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for c in col..n {
                let delta = &f * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    det
}

/// Solves `M x = b` for square invertible `M`; `None` if singular.
pub fn solve(m: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let aug: Matrix = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let red = rref(&aug, n + 1);
    if red.pivots.len() != n || red.pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(red.matrix.iter().map(|row| row[n].clone()).collect())
}

pub fn inverse(m: &[Vec<Rational>]) -> Option<Matrix> {
    let n = m.len();
    let aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    let red = rref(&aug, 2 * n);
    if red.pivots.len() < n || red.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(red.matrix.iter().map(|row| row[n..].to_vec()).collect())
}
