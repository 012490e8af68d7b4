//! Smith normal form of integer matrices.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::rational::Int;

/// Nonzero elementary divisors `d_1 | d_2 | ... | d_r` of an integer matrix,
/// all positive. The number of divisors is the rank.
pub fn elementary_divisors(matrix: &[Vec<Int>]) -> Vec<Int> {
    let mut a: Vec<Vec<Int>> = matrix.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut divisors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry in the remaining block becomes the pivot.
        let pivot = (t..rows)
            .flat_map(|r| (t..cols).map(move |c| (r, c)))
            .filter(|&(r, c)| !a[r][c].is_zero())
            .min_by(|&(r1, c1), &(r2, c2)| a[r1][c1].abs().cmp(&a[r2][c2].abs()));
        let Some((pr, pc)) = pivot else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                if a[r][t].is_zero() {
                    continue;
                }
                let q = a[r][t].div_floor(&a[t][t]);
                for c in t..cols {
                    let delta = &q * &a[t][c];
                    a[r][c] -= delta;
                }
                if !a[r][t].is_zero() {
                    a.swap(t, r);
                    dirty = true;
                }
            }
            for c in t + 1..cols {
                if a[t][c].is_zero() {
                    continue;
                }
                let q = a[t][c].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let delta = &q * &row[t];
                    row[c] -= delta;
                }
                if !a[t][c].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, c);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Divisibility: fold any entry not divisible by the pivot into row t.
            let offender = (t + 1..rows)
                .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
                .find(|&(r, c)| !(&a[r][c] % &a[t][t]).is_zero());
            match offender {
                Some((r, _)) => {
                    for c in t..cols {
                        let v = a[r][c].clone();
                        a[t][c] += v;
                    }
                }
                None => break,
            }
        }
        divisors.push(a[t][t].abs());
        t += 1;
    }
    divisors
}
