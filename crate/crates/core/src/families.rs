//! Constructors for the solution cases of the even, odd and combined
//! d'Alembert-type equations, the `F/H` split, and the case-pairing table
//! that assembles combined solutions from an even and an odd case.

use num_complex::Complex64;

use crate::error::{FeqError, Result};
use crate::functions::{
    AdditiveFunction, ExpPolyFunction, Exponential, GroupFunction, TwoGPeriodic, MERGE_TOL,
};
use crate::group::GroupSpec;

/// Cases of the even equation `F(x+y)+F(x−y) = 2g(x)h_e(y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvenCase {
    I,
    II,
    III,
    IV,
}

/// Cases of the odd equation `H(x+y)−H(x−y) = 2g(x)h_o(y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OddCase {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

/// Cases of the combined equation `F₁(x+y)+F₂(x−y) = g(x)h(y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CombinedCase {
    I,
    II,
    III,
    IV,
    V,
}

pub const ALL_EVEN: [EvenCase; 4] = [EvenCase::I, EvenCase::II, EvenCase::III, EvenCase::IV];
pub const ALL_ODD: [OddCase; 6] = [
    OddCase::I,
    OddCase::II,
    OddCase::III,
    OddCase::IV,
    OddCase::V,
    OddCase::VI,
];
pub const ALL_COMBINED: [CombinedCase; 5] = [
    CombinedCase::I,
    CombinedCase::II,
    CombinedCase::III,
    CombinedCase::IV,
    CombinedCase::V,
];

/// The parameter tuple `(α, β, γ, δ, b)` with the optional structural
/// ingredients `m`, `m₀`, `a`, `T` and the carriers for "arbitrary
/// function" slots.
#[derive(Debug, Clone)]
pub struct SolutionParams {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
    pub delta: Complex64,
    pub b: Complex64,
    pub m: Option<Exponential>,
    pub m0: Option<Exponential>,
    pub a: Option<AdditiveFunction>,
    pub t: Option<TwoGPeriodic>,
    pub arbitrary_g: Option<GroupFunction>,
    pub arbitrary_h: Option<GroupFunction>,
}

impl SolutionParams {
    pub fn new() -> Self {
        let z = Complex64::new(0.0, 0.0);
        SolutionParams {
            alpha: z,
            beta: z,
            gamma: z,
            delta: z,
            b: z,
            m: None,
            m0: None,
            a: None,
            t: None,
            arbitrary_g: None,
            arbitrary_h: None,
        }
    }
}

impl Default for SolutionParams {
    fn default() -> Self {
        SolutionParams::new()
    }
}

/// Realized solution of the even equation. The equation constrains only the
/// even part of `h`; `h` stores the representative (already even in cases
/// with a stated formula).
#[derive(Debug, Clone)]
pub struct EvenSolution {
    pub big_f: GroupFunction,
    pub g: GroupFunction,
    pub h: GroupFunction,
}

/// Realized solution of the odd equation; `h` stores the representative
/// whose odd part enters the equation.
#[derive(Debug, Clone)]
pub struct OddSolution {
    pub big_h: GroupFunction,
    pub g: GroupFunction,
    pub h: GroupFunction,
}

/// Realized solution of the combined equation.
#[derive(Debug, Clone)]
pub struct CombinedSolution {
    pub f1: GroupFunction,
    pub f2: GroupFunction,
    pub g: GroupFunction,
    pub h: GroupFunction,
}

/// `(F, H) = (F₁+F₂, F₁−F₂)`.
pub fn split_fh(f1: &GroupFunction, f2: &GroupFunction) -> Result<(GroupFunction, GroupFunction)> {
    Ok((f1.add(f2)?, f1.sub(f2)?))
}

/// Inverse of [`split_fh`]: `F₁ = ½(F+H)`, `F₂ = ½(F−H)`.
pub fn compose_fh(f: &GroupFunction, h: &GroupFunction) -> Result<(GroupFunction, GroupFunction)> {
    let half = Complex64::new(0.5, 0.0);
    Ok((f.add(h)?.scale(half), f.sub(h)?.scale(half)))
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn require_m(p: &SolutionParams) -> Result<&Exponential> {
    p.m.as_ref()
        .ok_or_else(|| FeqError::InvalidParameter("case requires an exponential m".into()))
}

fn require_non_even_m(p: &SolutionParams) -> Result<&Exponential> {
    let m = require_m(p)?;
    if m.is_even() {
        return Err(FeqError::InvalidParameter(
            "case requires m != m-reflected, but m is even".into(),
        ));
    }
    Ok(m)
}

fn require_even_m0(p: &SolutionParams) -> Result<&Exponential> {
    let m0 = p
        .m0
        .as_ref()
        .ok_or_else(|| FeqError::InvalidParameter("case requires an even exponential m0".into()))?;
    if !m0.is_even() {
        return Err(FeqError::InvalidParameter("m0 must be even".into()));
    }
    Ok(m0)
}

fn require_nonzero(v: Complex64, name: &str) -> Result<Complex64> {
    if v.norm() < MERGE_TOL {
        return Err(FeqError::InvalidParameter(format!("{name} must be nonzero")));
    }
    Ok(v)
}

fn require_arbitrary<'a>(
    slot: &'a Option<GroupFunction>,
    name: &str,
) -> Result<&'a GroupFunction> {
    slot.as_ref().ok_or_else(|| {
        FeqError::InvalidParameter(format!("case requires an explicit function for {name}"))
    })
}

fn check_parity(f: &GroupFunction, want_even: bool, name: &str) -> Result<()> {
    // structural for closed forms is possible but a pointwise check on the
    // finite carrier keeps arbitrary tables honest
    if let GroupFunction::Table(t) = f {
        for x in t.spec.enumerate_elements()? {
            let nx = t.spec.neg(&x)?;
            let v = f.eval(&x)?;
            let vn = f.eval(&nx)?;
            let bad = if want_even {
                (v - vn).norm() > 1e-9
            } else {
                (v + vn).norm() > 1e-9
            };
            if bad {
                return Err(FeqError::InvalidParameter(format!(
                    "{name} must be an {} function",
                    if want_even { "even" } else { "odd" }
                )));
            }
        }
    }
    Ok(())
}

/// Two-term combination `c₁·m + c₂·m̌` as a closed form.
fn exp_pair(m: &Exponential, c1: Complex64, c2: Complex64) -> ExpPolyFunction {
    ExpPolyFunction::scaled_exponential(m, c1)
        .add(&ExpPolyFunction::scaled_exponential(&m.reflect(), c2))
        .expect("same group")
}

fn periodic_or_zero(p: &SolutionParams, spec: &GroupSpec) -> TwoGPeriodic {
    p.t.clone().unwrap_or_else(|| TwoGPeriodic::zero(spec))
}

/// Builds `(F, g, h_e)` for a case of the even equation.
pub fn build_even_case(case: EvenCase, p: &SolutionParams) -> Result<EvenSolution> {
    match case {
        EvenCase::I => {
            let m = require_non_even_m(p)?;
            require_nonzero(p.gamma, "gamma")?;
            let big_f = exp_pair(m, p.gamma * p.alpha, p.gamma * p.beta);
            let g = exp_pair(m, p.alpha, p.beta);
            let h = exp_pair(m, p.gamma * 0.5, p.gamma * 0.5);
            Ok(EvenSolution {
                big_f: big_f.into(),
                g: g.into(),
                h: h.into(),
            })
        }
        EvenCase::II => {
            let m0 = require_even_m0(p)?;
            require_nonzero(p.alpha, "alpha")?;
            let spec = m0.spec.clone();
            let a = p.a.clone().unwrap_or_else(|| AdditiveFunction::zero(&spec));
            let big_f = ExpPolyFunction::from_term(m0.clone(), a.clone(), p.alpha * p.beta);
            let g = ExpPolyFunction::from_term(m0.clone(), a.scale(one() / p.alpha), p.beta);
            let h = ExpPolyFunction::scaled_exponential(m0, p.alpha);
            Ok(EvenSolution {
                big_f: big_f.into(),
                g: g.into(),
                h: h.into(),
            })
        }
        EvenCase::III => {
            let h = require_arbitrary(&p.arbitrary_h, "h")?.clone();
            let spec = h.spec().clone();
            Ok(EvenSolution {
                big_f: GroupFunction::zero(&spec),
                g: GroupFunction::zero(&spec),
                h,
            })
        }
        EvenCase::IV => {
            let g = require_arbitrary(&p.arbitrary_g, "g")?.clone();
            let h = require_arbitrary(&p.arbitrary_h, "h")?.clone();
            check_parity(&h, false, "h")?;
            let spec = g.spec().clone();
            Ok(EvenSolution {
                big_f: GroupFunction::zero(&spec),
                g,
                h,
            })
        }
    }
}

/// Builds `(H, g, h_o)` for a case of the odd equation.
pub fn build_odd_case(case: OddCase, p: &SolutionParams) -> Result<OddSolution> {
    match case {
        OddCase::I => {
            let m = require_non_even_m(p)?;
            let spec = m.spec.clone();
            let t = periodic_or_zero(p, &spec);
            let big_h =
                exp_pair(m, p.alpha * p.gamma, -(p.beta * p.gamma)).with_periodic(1, t);
            let g = exp_pair(m, p.alpha, p.beta);
            let h = exp_pair(m, p.gamma * 0.5, -(p.gamma * 0.5));
            Ok(OddSolution {
                big_h: big_h.into(),
                g: g.into(),
                h: h.into(),
            })
        }
        OddCase::II => {
            let m0 = require_even_m0(p)?;
            require_nonzero(p.alpha, "alpha")?;
            let a = p
                .a
                .clone()
                .ok_or_else(|| FeqError::InvalidParameter("case requires an additive a".into()))?;
            if a.is_zero() {
                return Err(FeqError::InvalidParameter("a must be nonzero".into()));
            }
            let spec = m0.spec.clone();
            let t = periodic_or_zero(p, &spec);
            let big_h = ExpPolyFunction::from_term(m0.clone(), a.clone(), p.b).with_periodic(1, t);
            let g = ExpPolyFunction::scaled_exponential(m0, one() / p.alpha);
            let h = ExpPolyFunction::from_term(
                m0.clone(),
                a.scale(p.alpha),
                Complex64::new(0.0, 0.0),
            );
            Ok(OddSolution {
                big_h: big_h.into(),
                g: g.into(),
                h: h.into(),
            })
        }
        OddCase::III | OddCase::IV => {
            let h = require_arbitrary(&p.arbitrary_h, "h")?.clone();
            let spec = h.spec().clone();
            let t = periodic_or_zero(p, &spec);
            let big_h: GroupFunction =
                ExpPolyFunction::zero(&spec).with_periodic(1, t).into();
            if case == OddCase::III {
                Ok(OddSolution {
                    big_h,
                    g: GroupFunction::zero(&spec),
                    h,
                })
            } else {
                let g = require_arbitrary(&p.arbitrary_g, "g")?.clone();
                check_parity(&h, true, "h")?;
                Ok(OddSolution { big_h, g, h })
            }
        }
        OddCase::V | OddCase::VI => {
            let h = require_arbitrary(&p.arbitrary_h, "h")?.clone();
            let spec = h.spec().clone();
            let big_h = GroupFunction::zero(&spec);
            if case == OddCase::V {
                Ok(OddSolution {
                    big_h,
                    g: GroupFunction::zero(&spec),
                    h,
                })
            } else {
                let g = require_arbitrary(&p.arbitrary_g, "g")?.clone();
                check_parity(&h, true, "h")?;
                Ok(OddSolution { big_h, g, h })
            }
        }
    }
}

/// Builds `(F₁, F₂, g, h)` for a case of the combined equation. `T` enters
/// `F₁` with `+` and `F₂` with `−`.
pub fn build_combined_case(case: CombinedCase, p: &SolutionParams) -> Result<CombinedSolution> {
    match case {
        CombinedCase::I => {
            let m = require_m(p)?;
            let spec = m.spec.clone();
            let t = periodic_or_zero(p, &spec);
            let f1 = exp_pair(m, p.alpha * p.gamma, p.beta * p.delta).with_periodic(1, t.clone());
            let f2 = exp_pair(m, p.alpha * p.delta, p.beta * p.gamma).with_periodic(-1, t);
            let g = exp_pair(m, p.alpha, p.beta);
            let h = exp_pair(m, p.gamma, p.delta);
            Ok(CombinedSolution {
                f1: f1.into(),
                f2: f2.into(),
                g: g.into(),
                h: h.into(),
            })
        }
        CombinedCase::II | CombinedCase::III => {
            let m0 = require_even_m0(p)?;
            require_nonzero(p.alpha, "alpha")?;
            let spec = m0.spec.clone();
            // a = 0 is a degenerate overlap with other cases; permitted
            let a = p.a.clone().unwrap_or_else(|| AdditiveFunction::zero(&spec));
            let t = periodic_or_zero(p, &spec);
            let half = Complex64::new(0.5, 0.0);
            let ab = p.alpha * p.beta;
            let f1 = ExpPolyFunction::from_term(
                m0.clone(),
                a.scale(half),
                (ab + p.gamma) * half,
            )
            .with_periodic(1, t.clone());
            let scalar = ExpPolyFunction::scaled_exponential(m0, p.alpha);
            let affine = ExpPolyFunction::from_term(m0.clone(), a.scale(one() / p.alpha), p.beta);
            if case == CombinedCase::II {
                let f2 = ExpPolyFunction::from_term(
                    m0.clone(),
                    a.scale(-half),
                    (ab - p.gamma) * half,
                )
                .with_periodic(-1, t);
                Ok(CombinedSolution {
                    f1: f1.into(),
                    f2: f2.into(),
                    g: scalar.into(),
                    h: affine.into(),
                })
            } else {
                let f2 = ExpPolyFunction::from_term(
                    m0.clone(),
                    a.scale(half),
                    (ab - p.gamma) * half,
                )
                .with_periodic(-1, t);
                Ok(CombinedSolution {
                    f1: f1.into(),
                    f2: f2.into(),
                    g: affine.into(),
                    h: scalar.into(),
                })
            }
        }
        CombinedCase::IV | CombinedCase::V => {
            let (g, h, spec) = if case == CombinedCase::IV {
                let h = require_arbitrary(&p.arbitrary_h, "h")?.clone();
                let spec = h.spec().clone();
                (GroupFunction::zero(&spec), h, spec)
            } else {
                let g = require_arbitrary(&p.arbitrary_g, "g")?.clone();
                let spec = g.spec().clone();
                (g, GroupFunction::zero(&spec), spec)
            };
            let t = periodic_or_zero(p, &spec);
            let f1: GroupFunction = ExpPolyFunction::zero(&spec).with_periodic(1, t.clone()).into();
            let f2: GroupFunction = ExpPolyFunction::zero(&spec).with_periodic(-1, t).into();
            Ok(CombinedSolution { f1, f2, g, h })
        }
    }
}

/// Case-level classification of an (even, odd) pairing, following the
/// exhaustive table in the combined-classification proof. Odd cases v/vi
/// are the `T = 0` specializations of iii/iv and classify the same way.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairingClass {
    Combined(CombinedCase),
    Incompatible,
}

pub fn classify_pairing(even: EvenCase, odd: OddCase) -> (PairingClass, &'static str) {
    use CombinedCase as C;
    use EvenCase as E;
    use OddCase as O;
    match (even, odd) {
        (E::I, O::I) => (PairingClass::Combined(C::I), "same exponential pair"),
        (E::I, O::II) => (
            PairingClass::Incompatible,
            "forces m equal to its reflection, contradicting the even case",
        ),
        (E::I, O::III) => (PairingClass::Combined(C::IV), "forces alpha = beta = 0"),
        (E::I, O::IV) => (
            PairingClass::Combined(C::I),
            "delta = gamma = half the even-case gamma",
        ),
        (E::I, O::V) => (PairingClass::Combined(C::IV), "forces alpha = beta = 0, T = 0"),
        (E::I, O::VI) => (
            PairingClass::Combined(C::I),
            "delta = gamma = half the even-case gamma, T = 0",
        ),
        (E::II, O::I) => (
            PairingClass::Incompatible,
            "forces m equal to its reflection, contradicting the odd case",
        ),
        (E::II, O::II) => (PairingClass::Combined(C::II), "additive pair"),
        (E::II, O::III) => (PairingClass::Combined(C::III), "forces g = 0 variant"),
        (E::II, O::IV) => (PairingClass::Combined(C::III), "gamma = 0"),
        (E::II, O::V) => (PairingClass::Combined(C::III), "forces g = 0 variant, T = 0"),
        (E::II, O::VI) => (PairingClass::Combined(C::III), "gamma = 0, T = 0"),
        (E::III, O::I) => (PairingClass::Combined(C::IV), "forces odd alpha = beta = 0"),
        (E::III, O::II) => (
            PairingClass::Incompatible,
            "odd case g is a nonvanishing exponential but the even case forces g = 0",
        ),
        (E::III, O::III) => (PairingClass::Combined(C::IV), ""),
        (E::III, O::IV) => (PairingClass::Combined(C::IV), "forces g = 0"),
        (E::III, O::V) => (PairingClass::Combined(C::IV), "T = 0"),
        (E::III, O::VI) => (PairingClass::Combined(C::IV), "forces g = 0, T = 0"),
        (E::IV, O::I) => (
            PairingClass::Combined(C::I),
            "gamma = -delta = half the odd-case gamma",
        ),
        (E::IV, O::II) => (PairingClass::Combined(C::II), "beta = 0, gamma = b"),
        (E::IV, O::III) => (PairingClass::Combined(C::IV), "forces g = 0"),
        (E::IV, O::IV) => (PairingClass::Combined(C::V), "h = 0"),
        (E::IV, O::V) => (PairingClass::Combined(C::IV), "forces g = 0, T = 0"),
        (E::IV, O::VI) => (PairingClass::Combined(C::V), "h = 0, T = 0"),
    }
}

/// Result of pairing concrete even and odd solutions.
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)] // params dwarf the reason string; fine for a result type
pub enum Pairing {
    Combined {
        case: CombinedCase,
        params: SolutionParams,
    },
    Incompatible {
        reason: String,
    },
}

fn incompatible(reason: &str) -> Result<Pairing> {
    Ok(Pairing::Incompatible {
        reason: reason.to_string(),
    })
}

fn half_t(p: &SolutionParams, spec: &GroupSpec) -> Option<TwoGPeriodic> {
    p.t.as_ref()
        .map(|t| t.scale(Complex64::new(0.5, 0.0)))
        .or_else(|| Some(TwoGPeriodic::zero(spec)))
}

fn near(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol
}

/// Combined `h` representative: the even part comes from the even case, the
/// odd part from the odd case.
fn combined_h(even: &EvenSolution, odd: &OddSolution) -> Result<GroupFunction> {
    even.h.even_part()?.add(&odd.h.odd_part()?)
}

/// Pairs a case of the even equation with a case of the odd equation,
/// requiring the two `g`-forms to coincide (up to the `m ↔ m̌` symmetry),
/// and emits the combined case with translated parameters — or the forcing
/// contradiction when the pairing is impossible.
pub fn pair_cases(
    even_case: EvenCase,
    odd_case: OddCase,
    even_params: &SolutionParams,
    odd_params: &SolutionParams,
    tol: f64,
) -> Result<Pairing> {
    use CombinedCase as C;
    use EvenCase as E;
    use OddCase as O;

    // validate both sides up front; structural errors are not "incompatible"
    let even_sol = build_even_case(even_case, even_params)?;
    let odd_sol = build_odd_case(odd_case, odd_params)?;
    let spec = even_sol.g.spec().clone();
    if spec != *odd_sol.g.spec() {
        return Err(FeqError::GroupMismatch);
    }

    let zero = Complex64::new(0.0, 0.0);
    let combined = |case: C, params: SolutionParams| -> Result<Pairing> {
        Ok(Pairing::Combined { case, params })
    };

    match (even_case, odd_case) {
        (E::I, O::I) => {
            let me = even_params.m.as_ref().unwrap();
            let mo = odd_params.m.as_ref().unwrap();
            // resolve the m <-> m-reflected symmetry toward the even side
            let (ao, bo, go) = if mo.same_as(me) {
                (odd_params.alpha, odd_params.beta, odd_params.gamma)
            } else if mo.same_as(&me.reflect()) {
                (odd_params.beta, odd_params.alpha, -odd_params.gamma)
            } else {
                return incompatible("the two cases use linearly independent exponentials");
            };
            if !near(even_params.alpha, ao, tol) || !near(even_params.beta, bo, tol) {
                return incompatible("g-coefficients of the two cases disagree");
            }
            let mut p = SolutionParams::new();
            p.alpha = even_params.alpha;
            p.beta = even_params.beta;
            p.gamma = (even_params.gamma + go) * 0.5;
            p.delta = (even_params.gamma - go) * 0.5;
            p.m = Some(me.clone());
            p.t = half_t(odd_params, &spec);
            combined(C::I, p)
        }
        (E::I, O::II) | (E::II, O::I) => {
            incompatible("requires m equal to its reflection, but the case demands m != m-reflected")
        }
        (E::I, O::III) | (E::I, O::V) => {
            if even_params.alpha.norm() > tol || even_params.beta.norm() > tol {
                return incompatible("odd case forces g = 0, so alpha = beta = 0");
            }
            let mut p = SolutionParams::new();
            p.t = if odd_case == O::III {
                half_t(odd_params, &spec)
            } else {
                Some(TwoGPeriodic::zero(&spec))
            };
            p.arbitrary_h = Some(combined_h(&even_sol, &odd_sol)?);
            combined(C::IV, p)
        }
        (E::I, O::IV) | (E::I, O::VI) => {
            let mut p = SolutionParams::new();
            p.alpha = even_params.alpha;
            p.beta = even_params.beta;
            p.gamma = even_params.gamma * 0.5;
            p.delta = even_params.gamma * 0.5;
            p.m = even_params.m.clone();
            p.t = if odd_case == O::IV {
                half_t(odd_params, &spec)
            } else {
                Some(TwoGPeriodic::zero(&spec))
            };
            combined(C::I, p)
        }
        (E::II, O::II) => {
            let m0e = even_params.m0.as_ref().unwrap();
            let m0o = odd_params.m0.as_ref().unwrap();
            if !m0e.same_as(m0o) {
                return incompatible("the two cases use different even exponentials");
            }
            if even_params.a.as_ref().is_some_and(|a| !a.is_zero()) {
                return incompatible(
                    "g of the odd case has no additive part, forcing the even-case a = 0",
                );
            }
            if !near(even_params.beta * odd_params.alpha, one(), tol) {
                return incompatible("g-coefficients of the two cases disagree");
            }
            let mut p = SolutionParams::new();
            p.alpha = one() / odd_params.alpha;
            p.beta = even_params.alpha;
            p.gamma = odd_params.b;
            p.a = odd_params.a.clone();
            p.m0 = Some(m0e.clone());
            p.t = half_t(odd_params, &spec);
            combined(C::II, p)
        }
        (E::II, O::III) | (E::II, O::V) => {
            if even_params.a.as_ref().is_some_and(|a| !a.is_zero())
                || even_params.beta.norm() > tol
            {
                return incompatible("odd case forces g = 0, so a = 0 and beta = 0");
            }
            let mut p = SolutionParams::new();
            p.alpha = even_params.alpha;
            p.beta = zero;
            p.gamma = zero;
            p.m0 = even_params.m0.clone();
            p.t = if odd_case == O::III {
                half_t(odd_params, &spec)
            } else {
                Some(TwoGPeriodic::zero(&spec))
            };
            combined(C::III, p)
        }
        (E::II, O::IV) | (E::II, O::VI) => {
            let mut p = SolutionParams::new();
            p.alpha = even_params.alpha;
            p.beta = even_params.beta;
            p.gamma = zero;
            p.a = even_params.a.clone();
            p.m0 = even_params.m0.clone();
            p.t = if odd_case == O::IV {
                half_t(odd_params, &spec)
            } else {
                Some(TwoGPeriodic::zero(&spec))
            };
            combined(C::III, p)
        }
        (E::III, O::II) => incompatible(
            "g of the odd case is a nonvanishing exponential, but the even case forces g = 0",
        ),
        (E::III, O::I) => {
            if odd_params.alpha.norm() > tol || odd_params.beta.norm() > tol {
                return incompatible("even case forces g = 0, so the odd alpha = beta = 0");
            }
            let mut p = SolutionParams::new();
            p.t = half_t(odd_params, &spec);
            p.arbitrary_h = Some(combined_h(&even_sol, &odd_sol)?);
            combined(C::IV, p)
        }
        (E::III, O::III) | (E::III, O::IV) | (E::III, O::V) | (E::III, O::VI) => {
            if matches!(odd_case, O::IV | O::VI) && !odd_sol.g.is_zero() {
                return incompatible("even case forces g = 0");
            }
            let mut p = SolutionParams::new();
            p.t = if matches!(odd_case, O::III | O::IV) {
                half_t(odd_params, &spec)
            } else {
                Some(TwoGPeriodic::zero(&spec))
            };
            p.arbitrary_h = Some(combined_h(&even_sol, &odd_sol)?);
            combined(C::IV, p)
        }
        (E::IV, O::I) => {
            let mut p = SolutionParams::new();
            p.alpha = odd_params.alpha;
            p.beta = odd_params.beta;
            p.gamma = odd_params.gamma * 0.5;
            p.delta = -odd_params.gamma * 0.5;
            p.m = odd_params.m.clone();
            p.t = half_t(odd_params, &spec);
            combined(C::I, p)
        }
        (E::IV, O::II) => {
            let mut p = SolutionParams::new();
            p.alpha = one() / odd_params.alpha;
            p.beta = zero;
            p.gamma = odd_params.b;
            p.a = odd_params.a.clone();
            p.m0 = odd_params.m0.clone();
            p.t = half_t(odd_params, &spec);
            combined(C::II, p)
        }
        (E::IV, O::III) | (E::IV, O::V) => {
            let mut p = SolutionParams::new();
            p.t = if odd_case == O::III {
                half_t(odd_params, &spec)
            } else {
                Some(TwoGPeriodic::zero(&spec))
            };
            p.arbitrary_h = Some(combined_h(&even_sol, &odd_sol)?);
            combined(C::IV, p)
        }
        (E::IV, O::IV) | (E::IV, O::VI) => {
            let mut p = SolutionParams::new();
            p.t = if odd_case == O::IV {
                half_t(odd_params, &spec)
            } else {
                Some(TwoGPeriodic::zero(&spec))
            };
            p.arbitrary_g = Some(even_sol.g.clone());
            combined(C::V, p)
        }
    }
}
