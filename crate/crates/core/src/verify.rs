//! Independent brute-force residual oracle.
//!
//! Residuals are computed by direct summation of the defining integrals over
//! every pair of the evaluation domain; none of the solver modules' algebraic
//! simplifications are reused here.

use num_complex::Complex64;

use crate::error::Result;
use crate::functions::GroupFunction;
use crate::group::{GroupElement, GroupSpec};
use crate::measure::Measure;

/// Evaluation domain: the full group when finite, otherwise a window
/// `[−W, W]` per free coordinate (torsion coordinates always range fully).
#[derive(Debug, Clone)]
pub struct Domain {
    pub spec: GroupSpec,
    pub window: i64,
}

pub const DEFAULT_WINDOW: i64 = 10;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

impl Domain {
    pub fn new(spec: &GroupSpec, window: i64) -> Self {
        Domain {
            spec: spec.clone(),
            window,
        }
    }

    pub fn full_group(spec: &GroupSpec) -> Self {
        Domain::new(spec, DEFAULT_WINDOW)
    }

    /// All evaluation points, lexicographic and deterministic.
    pub fn points(&self) -> Result<Vec<GroupElement>> {
        if self.spec.is_finite() {
            return self.spec.enumerate_elements();
        }
        let mut out = vec![vec![]];
        for _ in 0..self.spec.free_rank {
            let mut next = Vec::new();
            for prefix in &out {
                for v in -self.window..=self.window {
                    let mut p: Vec<i64> = prefix.clone();
                    p.push(v);
                    next.push(p);
                }
            }
            out = next;
        }
        for &n in &self.spec.torsion_orders {
            let mut next = Vec::new();
            for prefix in &out {
                for v in 0..n as i64 {
                    let mut p = prefix.clone();
                    p.push(v);
                    next.push(p);
                }
            }
            out = next;
        }
        out.iter().map(|c| self.spec.element(c)).collect()
    }
}

/// Outcome of a residual sweep.
#[derive(Debug, Clone)]
pub struct ResidualReport {
    pub max_residual: f64,
    pub argmax: Option<(GroupElement, GroupElement)>,
    pub pairs_checked: usize,
}

/// Sequential max-reduction over all `(x, y)` pairs. Always available; used
/// directly by the benchmark suite as the comparison baseline.
pub fn sweep_max_seq<F>(points: &[GroupElement], residual: F) -> Result<ResidualReport>
where
    F: Fn(&GroupElement, &GroupElement) -> Result<f64> + Sync,
{
    let mut max = 0.0f64;
    let mut argmax = None;
    for x in points {
        for y in points {
            let r = residual(x, y)?;
            if argmax.is_none() || r > max {
                max = r;
                argmax = Some((x.clone(), y.clone()));
            }
        }
    }
    Ok(ResidualReport {
        max_residual: max,
        argmax,
        pairs_checked: points.len() * points.len(),
    })
}

/// Max-reduction over all `(x, y)` pairs; data-parallel when the `parallel`
/// feature is enabled.
#[cfg(feature = "parallel")]
pub fn sweep_max<F>(points: &[GroupElement], residual: F) -> Result<ResidualReport>
where
    F: Fn(&GroupElement, &GroupElement) -> Result<f64> + Sync,
{
    use rayon::prelude::*;
    let n = points.len();
    let best = (0..n * n)
        .into_par_iter()
        .map(|i| {
            let x = &points[i / n];
            let y = &points[i % n];
            residual(x, y).map(|r| (r, i))
        })
        .try_reduce(
            || (f64::NEG_INFINITY, usize::MAX),
            // tie-break on the smaller pair index so the argmax matches the
            // sequential sweep regardless of rayon's reduction order
            |a, b| {
                Ok(if a.0 > b.0 || (a.0 == b.0 && a.1 <= b.1) {
                    a
                } else {
                    b
                })
            },
        )?;
    let argmax = if best.1 == usize::MAX {
        None
    } else {
        Some((points[best.1 / n].clone(), points[best.1 % n].clone()))
    };
    Ok(ResidualReport {
        max_residual: if best.0.is_finite() { best.0 } else { 0.0 },
        argmax,
        pairs_checked: n * n,
    })
}

#[cfg(not(feature = "parallel"))]
pub fn sweep_max<F>(points: &[GroupElement], residual: F) -> Result<ResidualReport>
where
    F: Fn(&GroupElement, &GroupElement) -> Result<f64> + Sync,
{
    sweep_max_seq(points, residual)
}

/// Pointwise residual of `∫[f₁(x+y−t)+f₂(x−y+t)]dμ(t) = g(x)h(y)` by direct
/// summation over the measure's atoms.
pub fn sincos_residual_at(
    f1: &GroupFunction,
    f2: &GroupFunction,
    g: &GroupFunction,
    h: &GroupFunction,
    mu: &Measure,
    x: &GroupElement,
    y: &GroupElement,
) -> Result<f64> {
    let spec = &mu.spec;
    let sum_xy = spec.add(x, y)?;
    let diff_xy = spec.sub(x, y)?;
    let mut lhs = Complex64::new(0.0, 0.0);
    for (t, w) in mu.atoms() {
        let p = spec.sub(&sum_xy, t)?;
        let q = spec.add(&diff_xy, t)?;
        lhs += (f1.eval(&p)? + f2.eval(&q)?) * w;
    }
    Ok((lhs - g.eval(x)? * h.eval(y)?).norm())
}

/// Max residual of the measure-bearing equation over the domain.
pub fn residual_sincos(
    f1: &GroupFunction,
    f2: &GroupFunction,
    g: &GroupFunction,
    h: &GroupFunction,
    mu: &Measure,
    domain: &Domain,
) -> Result<ResidualReport> {
    let points = domain.points()?;
    sweep_max(&points, |x, y| sincos_residual_at(f1, f2, g, h, mu, x, y))
}

/// Pointwise residual of the measure-free equation
/// `F₁(x+y)+F₂(x−y) = g(x)h(y)`.
pub fn dalem1_residual_at(
    f1: &GroupFunction,
    f2: &GroupFunction,
    g: &GroupFunction,
    h: &GroupFunction,
    x: &GroupElement,
    y: &GroupElement,
) -> Result<f64> {
    let spec = g.spec();
    let lhs = f1.eval(&spec.add(x, y)?)? + f2.eval(&spec.sub(x, y)?)?;
    Ok((lhs - g.eval(x)? * h.eval(y)?).norm())
}

pub fn residual_dalem1(
    f1: &GroupFunction,
    f2: &GroupFunction,
    g: &GroupFunction,
    h: &GroupFunction,
    domain: &Domain,
) -> Result<ResidualReport> {
    let points = domain.points()?;
    sweep_max(&points, |x, y| dalem1_residual_at(f1, f2, g, h, x, y))
}

/// Max residual of the even equation `F(x+y)+F(x−y) = 2g(x)h_e(y)`, with
/// `h_e` computed pointwise from `h`.
pub fn residual_even(
    big_f: &GroupFunction,
    g: &GroupFunction,
    h: &GroupFunction,
    domain: &Domain,
) -> Result<ResidualReport> {
    let points = domain.points()?;
    let spec = g.spec().clone();
    sweep_max(&points, |x, y| {
        let lhs = big_f.eval(&spec.add(x, y)?)? + big_f.eval(&spec.sub(x, y)?)?;
        let he = (h.eval(y)? + h.eval(&spec.neg(y)?)?) * 0.5;
        Ok((lhs - g.eval(x)? * he * 2.0).norm())
    })
}

/// Max residual of the odd equation `H(x+y)−H(x−y) = 2g(x)h_o(y)`.
pub fn residual_odd(
    big_h: &GroupFunction,
    g: &GroupFunction,
    h: &GroupFunction,
    domain: &Domain,
) -> Result<ResidualReport> {
    let points = domain.points()?;
    let spec = g.spec().clone();
    sweep_max(&points, |x, y| {
        let lhs = big_h.eval(&spec.add(x, y)?)? - big_h.eval(&spec.sub(x, y)?)?;
        let ho = (h.eval(y)? - h.eval(&spec.neg(y)?)?) * 0.5;
        Ok((lhs - g.eval(x)? * ho * 2.0).norm())
    })
}
