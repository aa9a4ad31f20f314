//! Exact Gaussian elimination on small dense systems.

use crate::scalar::Field;

/// Row-reduce in place; returns pivot columns.
fn row_reduce<S: Field>(rows: &mut [Vec<S>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = S::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let v = rows[r][j].clone() * f.clone();
                    rows[i][j] = rows[i][j].clone() - v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a list of equal-length vectors.
pub fn rank<S: Field>(vectors: &[Vec<S>]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let mut rows = vectors.to_vec();
    row_reduce(&mut rows, first.len()).len()
}

/// Find `x` with `Σ x_j columns[j] = target`, if one exists.
pub fn solve<S: Field>(columns: &[Vec<S>], target: &[S]) -> Option<Vec<S>> {
    let m = target.len();
    let n = columns.len();
    let mut rows: Vec<Vec<S>> = (0..m)
        .map(|i| {
            let mut row: Vec<S> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut rows, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![S::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][n].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use crate::Rational;

    fn v(a: &[i64]) -> Vec<Rational> {
        a.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn solve_and_rank() {
        let cols = vec![v(&[1, 1, 0]), v(&[0, 1, 1])];
        assert_eq!(solve(&cols, &v(&[2, 5, 3])).unwrap(), v(&[2, 3]));
        assert!(solve(&cols, &v(&[1, 0, 0])).is_none());
        assert_eq!(rank(&[v(&[1, 2]), v(&[2, 4]), v(&[0, 1])]), 2);
        assert_eq!(rank::<Rational>(&[]), 0);
    }
}
