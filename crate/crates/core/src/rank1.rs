//! Rank-1 factorization of the right-hand side `g(x)h(y)`.
//!
//! Given any pair `F₁, F₂` the matrix `L[x][y] = F₁(x+y) + F₂(x−y)` over a
//! finite evaluation domain either has rank ≤ 1 (and then factors as an
//! outer product, recovering `g` and `h` up to the usual reciprocal-scalar
//! ambiguity) or no `g, h` can exist. The rank test is an SVD; the factors
//! themselves are read off the matrix entries directly.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::Result;
use crate::functions::GroupFunction;
use crate::group::GroupElement;
use crate::verify::Domain;

/// Ratio `σ₂/σ₁` below which the matrix is accepted as rank 1.
pub const RANK1_RATIO: f64 = 1e-8;
/// `σ₁` below which the matrix is treated as identically zero.
pub const ZERO_SIGMA: f64 = 1e-12;

#[derive(Debug, Clone)]
pub enum Rank1Outcome {
    /// The matrix vanishes: `g = h = 0` works (as does `g` arbitrary, `h = 0`).
    Zero,
    /// `L[x][y] = g[x]·h[y]` on the domain; `g` is normalized so that its
    /// first nonzero entry is 1.
    Factored {
        g: Vec<Complex64>,
        h: Vec<Complex64>,
    },
    /// Genuinely higher rank; `sigma2` is the second singular value.
    NotRank1 { sigma2: f64 },
}

/// `L[i][j] = F₁(xᵢ+xⱼ) + F₂(xᵢ−xⱼ)` over the domain's points.
pub fn build_dalem1_matrix(
    f1: &GroupFunction,
    f2: &GroupFunction,
    points: &[GroupElement],
) -> Result<DMatrix<Complex64>> {
    let spec = f1.spec().clone();
    let n = points.len();
    let mut m = DMatrix::zeros(n, n);
    for (i, x) in points.iter().enumerate() {
        for (j, y) in points.iter().enumerate() {
            m[(i, j)] = f1.eval(&spec.add(x, y)?)? + f2.eval(&spec.sub(x, y)?)?;
        }
    }
    Ok(m)
}

/// Tests whether `L` is an outer product and extracts the factors if so.
pub fn rank1_factorize(l: &DMatrix<Complex64>) -> Rank1Outcome {
    let svd = l.clone().svd(false, false);
    let mut sigmas: Vec<f64> = svd.singular_values.iter().cloned().collect();
    sigmas.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let s1 = sigmas.first().cloned().unwrap_or(0.0);
    if s1 <= ZERO_SIGMA {
        return Rank1Outcome::Zero;
    }
    let s2 = sigmas.get(1).cloned().unwrap_or(0.0);
    if s2 > RANK1_RATIO * s1 {
        return Rank1Outcome::NotRank1 { sigma2: s2 };
    }
    // first row with a nonzero entry carries h; that row's pivot column
    // normalizes g
    let (rows, cols) = l.shape();
    let mut pivot_row = None;
    for i in 0..rows {
        let norm: f64 = (0..cols).map(|j| l[(i, j)].norm()).sum();
        if norm > ZERO_SIGMA {
            pivot_row = Some(i);
            break;
        }
    }
    let r = match pivot_row {
        Some(r) => r,
        None => return Rank1Outcome::Zero,
    };
    let h: Vec<Complex64> = (0..cols).map(|j| l[(r, j)]).collect();
    let jstar = (0..cols)
        .max_by(|&a, &b| h[a].norm().partial_cmp(&h[b].norm()).unwrap())
        .unwrap();
    let g: Vec<Complex64> = (0..rows).map(|i| l[(i, jstar)] / h[jstar]).collect();
    Rank1Outcome::Factored { g, h }
}

/// Convenience wrapper combining matrix construction and factorization.
pub fn factorize_dalem1(
    f1: &GroupFunction,
    f2: &GroupFunction,
    domain: &Domain,
) -> Result<(Vec<GroupElement>, Rank1Outcome)> {
    let points = domain.points()?;
    let l = build_dalem1_matrix(f1, f2, &points)?;
    Ok((points, rank1_factorize(&l)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::{ExpPolyFunction, Exponential, TableFunction};
    use crate::group::GroupSpec;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zero_matrix() {
        let l = DMatrix::<Complex64>::zeros(4, 4);
        assert!(matches!(rank1_factorize(&l), Rank1Outcome::Zero));
    }

    #[test]
    fn outer_product_recovered() {
        let g0 = [c(2.0, 0.0), c(0.0, 1.0), c(-1.0, 3.0)];
        let h0 = [c(1.0, -1.0), c(0.5, 0.0), c(0.0, 0.0)];
        let l = DMatrix::from_fn(3, 3, |i, j| g0[i] * h0[j]);
        match rank1_factorize(&l) {
            Rank1Outcome::Factored { g, h } => {
                for i in 0..3 {
                    for j in 0..3 {
                        assert!((g[i] * h[j] - l[(i, j)]).norm() < 1e-12);
                    }
                }
                // normalization: g at the first nonzero row is 1
                assert!((g[0] - c(1.0, 0.0)).norm() < 1e-12);
            }
            other => panic!("expected factorization, got {other:?}"),
        }
    }

    #[test]
    fn rank_two_rejected() {
        let mut l = DMatrix::<Complex64>::zeros(3, 3);
        l[(0, 0)] = c(1.0, 0.0);
        l[(1, 1)] = c(1.0, 0.0);
        match rank1_factorize(&l) {
            Rank1Outcome::NotRank1 { sigma2 } => assert!((sigma2 - 1.0).abs() < 1e-12),
            other => panic!("expected rank rejection, got {other:?}"),
        }
    }

    #[test]
    fn character_pair_factors_on_z5() {
        // F1 = m, F2 = 0: L[x][y] = m(x)m(y), rank 1
        let spec = GroupSpec::cyclic(5);
        let m = Exponential::new(&spec, vec![1], vec![]).unwrap();
        let f1 = GroupFunction::ExpPoly(ExpPolyFunction::scaled_exponential(&m, c(1.0, 0.0)));
        let f2 = GroupFunction::zero(&spec);
        let d = Domain::full_group(&spec);
        let (points, outcome) = factorize_dalem1(&f1, &f2, &d).unwrap();
        match outcome {
            Rank1Outcome::Factored { g, h } => {
                for (i, x) in points.iter().enumerate() {
                    for (j, y) in points.iter().enumerate() {
                        let expect = m.eval(&spec.add(x, y).unwrap()).unwrap();
                        assert!((g[i] * h[j] - expect).norm() < 1e-12);
                    }
                }
            }
            other => panic!("expected factorization, got {other:?}"),
        }
    }

    #[test]
    fn generic_table_pair_rejected() {
        // random-looking tables do not produce a rank-1 L
        let spec = GroupSpec::cyclic(5);
        let vals: Vec<Complex64> = (0..5)
            .map(|i| c((i * i % 7) as f64, (i % 3) as f64))
            .collect();
        let f1 = GroupFunction::Table(TableFunction::new(&spec, vals.clone()).unwrap());
        let f2 = GroupFunction::Table(
            TableFunction::new(&spec, vals.iter().rev().cloned().collect()).unwrap(),
        );
        let d = Domain::full_group(&spec);
        let (_, outcome) = factorize_dalem1(&f1, &f2, &d).unwrap();
        assert!(matches!(outcome, Rank1Outcome::NotRank1 { .. }));
    }
}
