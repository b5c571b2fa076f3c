//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use crate::exactnum::Rational;

/// Outcome of solving `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rational>),
    /// Consistent but rank deficient.
    Underdetermined,
    Inconsistent,
}

/// Solves `rows * x = rhs` for an arbitrary (possibly non-square) system.
pub fn solve(rows: &[Vec<Rational>], rhs: &[Rational]) -> Solution {
    assert_eq!(rows.len(), rhs.len(), "row count mismatch");
    let cols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            assert_eq!(r.len(), cols, "ragged matrix");
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[row].clone();
        for (i, target) in m.iter_mut().enumerate() {
            if i == row || target[col].is_zero() {
                continue;
            }
            let factor = target[col].clone();
            for (t, p) in target.iter_mut().zip(&pivot_row).skip(col) {
                *t -= &factor * p;
            }
        }
        pivots.push(col);
        row += 1;
    }

    if m[row..].iter().any(|r| !r[cols].is_zero()) {
        return Solution::Inconsistent;
    }
    if pivots.len() < cols {
        return Solution::Underdetermined;
    }
    Solution::Unique(m[..cols].iter().map(|r| r[cols].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn square_system() {
        // x + y = 3, x - y = 1
        let a = vec![row(&[1, 1]), row(&[1, -1])];
        assert_eq!(
            solve(&a, &row(&[3, 1])),
            Solution::Unique(vec![int(2), int(1)])
        );
    }

    #[test]
    fn vandermonde_with_fractions() {
        // interpolate X^2 + 1 through (0,1), (1,2), (2,5)
        let a = vec![row(&[1, 0, 0]), row(&[1, 1, 1]), row(&[1, 2, 4])];
        assert_eq!(
            solve(&a, &row(&[1, 2, 5])),
            Solution::Unique(vec![int(1), int(0), int(1)])
        );
        let a = vec![row(&[2, 0]), row(&[0, 3])];
        assert_eq!(
            solve(&a, &row(&[1, 1])),
            Solution::Unique(vec![rat(1, 2), rat(1, 3)])
        );
    }

    #[test]
    fn degenerate_systems() {
        let a = vec![row(&[1, 1]), row(&[2, 2])];
        assert_eq!(solve(&a, &row(&[1, 2])), Solution::Underdetermined);
        assert_eq!(solve(&a, &row(&[1, 3])), Solution::Inconsistent);
        // overdetermined but consistent
        let a = vec![row(&[1]), row(&[2]), row(&[3])];
        assert_eq!(solve(&a, &row(&[2, 4, 6])), Solution::Unique(vec![int(2)]));
        assert_eq!(solve(&[], &[]), Solution::Unique(vec![]));
    }
}
