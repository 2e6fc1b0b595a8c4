//! Field-generic dense linear algebra and polynomial interpolation.
//!
//! Everything here is written against [`Scalar`], so the same code runs over
//! `BigRational` (the crate's [`Rational`](crate::Rational)), fixed-width
//! ratios such as `Ratio<i128>`, or any other exact field type from the
//! `num` ecosystem.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;

/// A field element usable by the generic routines.
pub trait Scalar: Num + Clone + Debug + Neg<Output = Self> {}

impl<T> Scalar for T where T: Num + Clone + Debug + Neg<Output = T> {}

/// Inverts a square matrix given as rows; `None` when singular.
pub fn invert<T: Scalar>(matrix: &[Vec<T>]) -> Option<Vec<Vec<T>>> {
    let n = matrix.len();
    let mut aug: Vec<Vec<T>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "invert needs a square matrix");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let lead = aug[col][col].clone();
        for v in aug[col].iter_mut() {
            *v = v.clone() / lead.clone();
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..2 * n {
                    let delta = f.clone() * aug[col][c].clone();
                    aug[r][c] = aug[r][c].clone() - delta;
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Matrix-vector product over rows.
pub fn apply<T: Scalar>(matrix: &[Vec<T>], v: &[T]) -> Vec<T> {
    matrix
        .iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
        })
        .collect()
}

/// Coefficients (lowest degree first) of the unique polynomial of degree
/// `< xs.len()` through the points `(xs[k], ys[k])`.
///
/// Newton divided differences, then expansion of the Newton form.
pub fn interpolate<T: Scalar>(xs: &[T], ys: &[T]) -> Vec<T> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut dd: Vec<T> = ys.to_vec();
    for level in 1..n {
        for k in (level..n).rev() {
            let num = dd[k].clone() - dd[k - 1].clone();
            let den = xs[k].clone() - xs[k - level].clone();
            assert!(!den.is_zero(), "interpolation nodes must be distinct");
            dd[k] = num / den;
        }
    }
    // Horner on the Newton form: c_{n-1}, then (c * (T - x_k) + dd_k).
    let mut coeffs: Vec<T> = Vec::with_capacity(n);
    for k in (0..n).rev() {
        // coeffs <- coeffs * (T - x_k) + dd[k]
        let mut next = vec![T::zero(); coeffs.len() + 1];
        for (d, c) in coeffs.iter().enumerate() {
            next[d + 1] = next[d + 1].clone() + c.clone();
            next[d] = next[d].clone() - c.clone() * xs[k].clone();
        }
        next[0] = next[0].clone() + dd[k].clone();
        coeffs = next;
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    if coeffs.len() == 1 && coeffs[0].is_zero() {
        coeffs.clear();
    }
    coeffs
}

/// Evaluates a coefficient vector (lowest degree first) at `x`.
pub fn evaluate<T: Scalar>(coeffs: &[T], x: &T) -> T {
    coeffs
        .iter()
        .rev()
        .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_bigint::BigInt;
    use num_rational::Ratio;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn invert_small() {
        let m = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv, vec![vec![q(1), q(-1)], vec![q(-1), q(2)]]);
        assert!(invert(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        // 3T^2 - T + 4
        let xs: Vec<Rational> = [2, 3, 5, 7].iter().map(|&x| q(x)).collect();
        let ys: Vec<Rational> = xs
            .iter()
            .map(|x| q(3) * x.clone() * x.clone() - x.clone() + q(4))
            .collect();
        let c = interpolate(&xs, &ys);
        assert_eq!(c, vec![q(4), q(-1), q(3)]);
        assert_eq!(evaluate(&c, &q(11)), q(3 * 121 - 11 + 4));
    }

    #[test]
    fn interpolation_of_zero_is_empty() {
        let xs = vec![q(2), q(3)];
        let ys = vec![q(0), q(0)];
        assert!(interpolate(&xs, &ys).is_empty());
    }

    #[test]
    fn works_over_fixed_width_ratios() {
        let xs: Vec<Ratio<i128>> = [1, 2, 3].iter().map(|&x| Ratio::from_integer(x)).collect();
        let ys: Vec<Ratio<i128>> = [1, 4, 9].iter().map(|&x| Ratio::from_integer(x)).collect();
        let c = interpolate(&xs, &ys);
        assert_eq!(c, vec![Ratio::from_integer(0), Ratio::from_integer(0), Ratio::from_integer(1)]);
        let inv = invert(&[vec![Ratio::<i128>::new(1, 2)]]).unwrap();
        assert_eq!(inv[0][0], Ratio::from_integer(2));
    }
}
