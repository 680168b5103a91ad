//! Dense matrices over the rationals.

use num::{One, Zero};

use crate::graded::Rational;

pub type Matrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn invert(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut a = m.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = a[col][col].recip();
        for j in 0..n {
            a[col][j] = &a[col][j] * &scale;
            inv[col][j] = &inv[col][j] * &scale;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                let t = &factor * &a[col][j];
                a[r][j] -= t;
                let t = &factor * &inv[col][j];
                inv[r][j] -= t;
            }
        }
    }
    Some(inv)
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..b.len()).fold(Rational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Principal submatrix on the given indices.
pub fn submatrix(m: &Matrix, idx: &[usize]) -> Matrix {
    idx.iter()
        .map(|&i| idx.iter().map(|&j| m[i][j].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{rat, ratio};

    #[test]
    fn inverse_roundtrip() {
        let m = vec![vec![rat(2), rat(1)], vec![rat(7), rat(4)]];
        let inv = invert(&m).unwrap();
        assert_eq!(mul(&m, &inv), identity(2));
        assert_eq!(inv[0][0], rat(4));
        let half = vec![vec![rat(0), ratio(1, 2)], vec![rat(3), rat(0)]];
        assert_eq!(mul(&invert(&half).unwrap(), &half), identity(2));
    }

    #[test]
    fn singular_detected() {
        let m = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert!(invert(&m).is_none());
        assert!(invert(&vec![]).is_some());
    }
}
