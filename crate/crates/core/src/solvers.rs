//! Complete solution-family generation and necessity checking for the
//! measure-generalized d'Alembert/Wilson equations, with reductions to the
//! classical Gajda and d'Alembert equations.
//!
//! Equations handled, all with finitely supported complex `μ`:
//!   cosine-type     `∫[f(x+y−t)+f(x−y+t)]dμ(t) = f(x)k(y)`
//!   sine-type       `∫[f(x+y−t)+f(x−y+t)]dμ(t) = k(x)f(y)`
//!   Gajda           the cosine-type equation with `k = f`
//!   d'Alembert      Gajda with `μ = ½δ₀`

use num_complex::Complex64;

use crate::error::{FeqError, Result};
use crate::functions::{AdditiveFunction, ExpPolyFunction, Exponential, MERGE_TOL};
use crate::group::GroupElement;
use crate::measure::Measure;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// `c₁·m + c₂·m̌`.
fn exp_pair(m: &Exponential, c1: Complex64, c2: Complex64) -> ExpPolyFunction {
    ExpPolyFunction::scaled_exponential(m, c1)
        .add(&ExpPolyFunction::scaled_exponential(&m.reflect(), c2))
        .expect("same group")
}

/// Free parameters the caller supplies to family construction.
#[derive(Debug, Clone)]
pub struct FechFreeParams {
    pub gamma: Complex64,
    pub delta: Complex64,
    pub beta: Complex64,
    pub a: Option<AdditiveFunction>,
}

impl FechFreeParams {
    pub fn constants(gamma: Complex64, delta: Complex64, beta: Complex64) -> Self {
        FechFreeParams {
            gamma,
            delta,
            beta,
            a: None,
        }
    }
}

/// Which closed form a family of the cosine-type equation takes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FechKind {
    /// `f = γm + δm̌`, `k = μ̂(m)m + μ̂(m̌)m̌`.
    ExpPair,
    /// `f = [a/(2μ̂(m₀)) + β]m₀`, `k = 2μ̂(m₀)m₀` with even `m₀`.
    AdditiveEven,
}

/// One solution family of the cosine-type equation with realized `f`, `k`.
#[derive(Debug, Clone)]
pub struct FechFamily {
    pub kind: FechKind,
    pub exponential: Exponential,
    pub f: ExpPolyFunction,
    pub k: ExpPolyFunction,
    /// `|μ̂(m₀)|` cleared the zero-threshold but only barely; flagged rather
    /// than silently dropped.
    pub near_threshold: bool,
}

/// Enumerates the solution families of the cosine-type equation for the
/// supplied exponential candidates (all characters of a finite group, or an
/// explicit list on infinite groups). Candidates realizing `f = 0` or
/// `k = 0` are excluded.
pub fn solve_fech(
    mu: &Measure,
    exponentials: &[Exponential],
    params: &FechFreeParams,
    tol: f64,
) -> Result<Vec<FechFamily>> {
    let mut out = Vec::new();
    for m in exponentials {
        let hat = mu.mu_hat(m)?;
        let hat_rev = mu.mu_hat(&m.reflect())?;
        // family (i); valid for even m too
        let f = exp_pair(m, params.gamma, params.delta);
        let k = exp_pair(m, hat, hat_rev);
        if !f.is_zero() && !k.is_zero() {
            out.push(FechFamily {
                kind: FechKind::ExpPair,
                exponential: m.clone(),
                f,
                k,
                near_threshold: false,
            });
        }
        // family (ii) needs an even exponential with nonvanishing transform
        if m.is_even() && hat.norm() > tol {
            let spec = m.spec.clone();
            let a = params
                .a
                .clone()
                .unwrap_or_else(|| AdditiveFunction::zero(&spec));
            let f = ExpPolyFunction::from_term(
                m.clone(),
                a.scale(one() / (hat * 2.0)),
                params.beta,
            );
            let k = ExpPolyFunction::scaled_exponential(m, hat * 2.0);
            if !f.is_zero() {
                out.push(FechFamily {
                    kind: FechKind::AdditiveEven,
                    exponential: m.clone(),
                    f,
                    k,
                    near_threshold: hat.norm() <= tol * 1e3,
                });
            }
        }
    }
    Ok(out)
}

/// Necessity system of the exponential-pair case: with `f = γm + δm̌` and
/// `k = αm + βm̌`, solving forces `γμ̂(m) = αγ`, `γμ̂(m̌) = βγ`,
/// `δμ̂(m) = αδ`, `δμ̂(m̌) = βδ`, i.e. `α = μ̂(m)` and `β = μ̂(m̌)`.
/// Returns whether all four hold within `tol`, plus the worst residual.
pub fn necessity_check_fech_case1(
    mu: &Measure,
    m: &Exponential,
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    delta: Complex64,
    tol: f64,
) -> Result<(bool, f64)> {
    if gamma.norm() < MERGE_TOL && delta.norm() < MERGE_TOL {
        return Err(FeqError::InvalidParameter(
            "at least one of gamma, delta must be nonzero".into(),
        ));
    }
    let hat = mu.mu_hat(m)?;
    let hat_rev = mu.mu_hat(&m.reflect())?;
    let residuals = [
        (gamma * hat - alpha * gamma).norm(),
        (gamma * hat_rev - beta * gamma).norm(),
        (delta * hat - alpha * delta).norm(),
        (delta * hat_rev - beta * delta).norm(),
    ];
    let worst = residuals.iter().cloned().fold(0.0f64, f64::max);
    Ok((worst <= tol, worst))
}

/// Necessity condition of the additive case: `α = 2μ̂(m₀)` with even `m₀`.
/// Also balances the two defining equations for `F₁` and `F₂`: the
/// `2G`-periodic correction they determine must agree between the two
/// (it does exactly when `α = 2μ̂(m₀)`), which is checked pointwise.
#[allow(clippy::too_many_arguments)]
pub fn necessity_check_fech_case3(
    mu: &Measure,
    m0: &Exponential,
    alpha: Complex64,
    a: &AdditiveFunction,
    beta: Complex64,
    gamma: Complex64,
    points: &[GroupElement],
    tol: f64,
) -> Result<(bool, f64)> {
    if !m0.is_even() {
        return Err(FeqError::InvalidParameter("m0 must be even".into()));
    }
    if alpha.norm() < MERGE_TOL {
        return Err(FeqError::InvalidParameter("alpha must be nonzero".into()));
    }
    let hat = mu.mu_hat(m0)?;
    let mut worst = (alpha - hat * 2.0).norm();

    // moment ∫ a(y) m0(y) dμ(y)
    let spec = &mu.spec;
    let mut moment = Complex64::new(0.0, 0.0);
    for (t, w) in mu.atoms() {
        moment += a.eval(t)? * m0.eval(t)? * w;
    }
    for x in points {
        let m0x = m0.eval(x)?;
        let ax = a.eval(x)?;
        // T forced by the F1-equation ...
        let rhs1 = ax * m0x * hat / alpha + beta * m0x * hat - m0x * moment / alpha;
        let t1 = rhs1 - (ax * 0.5 + (alpha * beta + gamma) * 0.5) * m0x;
        // ... must also satisfy the F2-equation
        let rhs2 = -ax * m0x * hat / alpha + beta * m0x * hat + m0x * moment / alpha;
        let lhs2 = (-ax * 0.5 + (alpha * beta - gamma) * 0.5) * m0x - t1;
        worst = worst.max((lhs2 - rhs2).norm());
        // and be 2G-periodic: T(x + 2y) = T(x) for sampled y
        for y in points.iter().take(4) {
            let shifted = spec.add(x, &spec.double(y)?)?;
            let m0s = m0.eval(&shifted)?;
            let as_ = a.eval(&shifted)?;
            let rhs1s =
                as_ * m0s * hat / alpha + beta * m0s * hat - m0s * moment / alpha;
            let t1s = rhs1s - (as_ * 0.5 + (alpha * beta + gamma) * 0.5) * m0s;
            worst = worst.max((t1s - t1).norm());
        }
    }
    Ok((worst <= tol, worst))
}

/// Which closed form a family of the sine-type equation takes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WilsonModKind {
    /// `f = αμ̂(m)m + αμ̂(m̌)m̌`, `k = μ̂(m)m + μ̂(m̌)m̌`, `m` non-even.
    NonEvenExp,
    /// `f = 2αμ̂(m₀)m₀`, `k = 2μ̂(m₀)m₀` with even `m₀`, `μ̂(m₀) ≠ 0`.
    EvenExp,
}

/// One solution family of the sine-type equation.
#[derive(Debug, Clone)]
pub struct WilsonModFamily {
    pub kind: WilsonModKind,
    pub exponential: Exponential,
    pub f: ExpPolyFunction,
    pub k: ExpPolyFunction,
    pub near_threshold: bool,
}

/// Enumerates the solution families of the sine-type equation. No additive
/// function ever appears in the output: `g` and `h` cannot carry the same
/// additive component simultaneously.
pub fn solve_wilson_modified(
    mu: &Measure,
    exponentials: &[Exponential],
    alpha: Complex64,
    tol: f64,
) -> Result<Vec<WilsonModFamily>> {
    if alpha.norm() < MERGE_TOL {
        return Err(FeqError::InvalidParameter("alpha must be nonzero".into()));
    }
    let mut out = Vec::new();
    for m in exponentials {
        let hat = mu.mu_hat(m)?;
        let hat_rev = mu.mu_hat(&m.reflect())?;
        if !m.is_even() {
            let k = exp_pair(m, hat, hat_rev);
            if !k.is_zero() {
                out.push(WilsonModFamily {
                    kind: WilsonModKind::NonEvenExp,
                    exponential: m.clone(),
                    f: k.scale(alpha),
                    k,
                    near_threshold: false,
                });
            }
        } else if hat.norm() > tol {
            let k = ExpPolyFunction::scaled_exponential(m, hat * 2.0);
            out.push(WilsonModFamily {
                kind: WilsonModKind::EvenExp,
                exponential: m.clone(),
                f: k.scale(alpha),
                k,
                near_threshold: hat.norm() <= tol * 1e3,
            });
        }
    }
    Ok(out)
}

/// The `f = k` solution of Gajda's equation for a given exponential:
/// `f = μ̂(m)m + μ̂(m̌)m̌`. With `μ = ½δ₀` this is the d'Alembert cosine
/// solution `½(m + m̌)`.
pub fn reduce_gajda(mu: &Measure, m: &Exponential) -> Result<ExpPolyFunction> {
    let hat = mu.mu_hat(m)?;
    let hat_rev = mu.mu_hat(&m.reflect())?;
    Ok(exp_pair(m, hat, hat_rev))
}

/// `μ = ½δ₀`, the measure reducing Gajda's equation to d'Alembert's.
pub fn dalembert_measure(spec: &crate::group::GroupSpec) -> Result<Measure> {
    Measure::dirac(spec, &spec.zero(), Complex64::new(0.5, 0.0))
}
