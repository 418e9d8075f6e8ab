//! Exact rational row reduction for small integer matrices.

use num_integer::{gcd, lcm};
use num_rational::Ratio;

type Q = Ratio<i64>;

/// Reduced row echelon form; returns the pivot columns.
fn rref(rows: &[Vec<i64>], ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&r| m[r][col] != Q::from_integer(0)) else {
            continue;
        };
        m.swap(row, p);
        let lead = m[row][col];
        for x in m[row].iter_mut() {
            *x /= lead;
        }
        let pivot = m[row].clone();
        for (r, target) in m.iter_mut().enumerate() {
            let f = target[col];
            if r != row && f != Q::from_integer(0) {
                for (x, &p) in target.iter_mut().zip(&pivot) {
                    *x -= p * f;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    (m, pivots)
}

pub fn rank(rows: &[Vec<i64>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Integer basis of `{x : rows · x = 0}`, each vector primitive.
pub fn nullspace(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let (m, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::from_integer(0); ncols];
            v[f] = Q::from_integer(1);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f];
            }
            let scale = v.iter().fold(1i64, |acc, q| lcm(acc, *q.denom()));
            let ints: Vec<i64> = v.iter().map(|q| (*q * scale).to_integer()).collect();
            let g = ints.iter().fold(0i64, |acc, &x| gcd(acc, x));
            ints.into_iter().map(|x| x / g.max(1)).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let rows = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 2, 1]];
        assert_eq!(rank(&rows, 3), 2);
        let ns = nullspace(&rows, 3);
        assert_eq!(ns, vec![vec![1, -1, 1]]);
        assert_eq!(rank(&[], 2), 0);
        assert_eq!(nullspace(&[], 2).len(), 2);
    }

    #[test]
    fn fractional_kernel_is_scaled() {
        let rows = vec![vec![2, 3]];
        assert_eq!(nullspace(&rows, 2), vec![vec![-3, 2]]);
    }
}
