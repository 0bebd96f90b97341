//! Parameterized building blocks for the closed-form solutions: exponentials
//! `m(x+y) = m(x)m(y)`, additive functions `a(x+y) = a(x)+a(y)`, `2G`-periodic
//! functions, and exponential-polynomial combinations `Σ (a_k(x)+b_k)·m_k(x)`.
//!
//! Torsion coordinates of an exponential are stored as exact root-of-unity
//! indices rather than complex numbers, so character identities stay exact
//! and enumeration is canonical.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{FeqError, Result};
use crate::group::{CosetIndex2G, GroupElement, GroupSpec};

/// Tolerance below which two complex values are considered equal when
/// merging terms or testing structural properties.
pub const MERGE_TOL: f64 = 1e-12;

fn root_of_unity(num: i64, den: u64) -> Complex64 {
    let r = (num as i128).rem_euclid(den as i128) as f64;
    Complex64::from_polar(1.0, TAU * r / den as f64)
}

/// An exponential (multiplicative) function `m: G → C*`.
///
/// Torsion coordinate `j` maps the generator to `exp(2πi·k_j/n_j)`; free
/// coordinate `i` maps the generator to an arbitrary nonzero multiplier.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Exponential {
    #[serde(skip, default = "trivial_spec")]
    pub spec: GroupSpec,
    pub torsion_roots: Vec<u64>,
    pub free_multipliers: Vec<Complex64>,
}

fn trivial_spec() -> GroupSpec {
    GroupSpec::new(0, vec![]).unwrap()
}

impl Exponential {
    pub fn new(
        spec: &GroupSpec,
        torsion_roots: Vec<u64>,
        free_multipliers: Vec<Complex64>,
    ) -> Result<Self> {
        if torsion_roots.len() != spec.torsion_orders.len()
            || free_multipliers.len() != spec.free_rank
        {
            return Err(FeqError::DimensionMismatch {
                expected: spec.dim(),
                got: spec.free_rank.min(free_multipliers.len())
                    + torsion_roots.len(),
            });
        }
        for (k, n) in torsion_roots.iter().zip(&spec.torsion_orders) {
            if k >= n {
                return Err(FeqError::InvalidParameter(format!(
                    "torsion root index {k} out of range [0, {n})"
                )));
            }
        }
        if free_multipliers.iter().any(|l| l.norm() < MERGE_TOL) {
            return Err(FeqError::InvalidParameter(
                "free multipliers must be nonzero".into(),
            ));
        }
        Ok(Exponential {
            spec: spec.clone(),
            torsion_roots,
            free_multipliers,
        })
    }

    /// The trivial character `x ↦ 1`.
    pub fn trivial(spec: &GroupSpec) -> Self {
        Exponential {
            spec: spec.clone(),
            torsion_roots: vec![0; spec.torsion_orders.len()],
            free_multipliers: vec![Complex64::new(1.0, 0.0); spec.free_rank],
        }
    }

    pub fn eval(&self, x: &GroupElement) -> Result<Complex64> {
        if x.coords.len() != self.spec.dim() {
            return Err(FeqError::DimensionMismatch {
                expected: self.spec.dim(),
                got: x.coords.len(),
            });
        }
        let mut v = Complex64::new(1.0, 0.0);
        for i in 0..self.spec.free_rank {
            v *= self.free_multipliers[i].powi(x.coords[i] as i32);
        }
        for (j, &n) in self.spec.torsion_orders.iter().enumerate() {
            let c = x.coords[self.spec.free_rank + j];
            v *= root_of_unity(self.torsion_roots[j] as i64 * c, n);
        }
        Ok(v)
    }

    /// The inverted exponential `m̌(x) = m(−x)`.
    pub fn reflect(&self) -> Self {
        Exponential {
            spec: self.spec.clone(),
            torsion_roots: self
                .torsion_roots
                .iter()
                .zip(&self.spec.torsion_orders)
                .map(|(&k, &n)| (n - k) % n)
                .collect(),
            free_multipliers: self
                .free_multipliers
                .iter()
                .map(|l| Complex64::new(1.0, 0.0) / l)
                .collect(),
        }
    }

    /// Structural test for `m = m̌`: every free multiplier is `±1` and every
    /// torsion root index satisfies `2k ≡ 0 (mod n)`. Sampling is avoided on
    /// purpose: it can miss parity on torsion coordinates.
    pub fn is_even(&self) -> bool {
        self.torsion_roots
            .iter()
            .zip(&self.spec.torsion_orders)
            .all(|(&k, &n)| (2 * k) % n == 0)
            && self.free_multipliers.iter().all(|l| {
                (l - Complex64::new(1.0, 0.0)).norm() < MERGE_TOL
                    || (l + Complex64::new(1.0, 0.0)).norm() < MERGE_TOL
            })
    }

    /// Structural equality up to `MERGE_TOL` on free multipliers.
    pub fn same_as(&self, other: &Exponential) -> bool {
        self.spec == other.spec
            && self.torsion_roots == other.torsion_roots
            && self
                .free_multipliers
                .iter()
                .zip(&other.free_multipliers)
                .all(|(a, b)| (a - b).norm() < MERGE_TOL)
    }
}

/// Enumerates all exponentials (= characters) of a finite group.
pub fn enumerate_exponentials(spec: &GroupSpec) -> Result<Vec<Exponential>> {
    if !spec.is_finite() {
        return Err(FeqError::InfiniteGroup);
    }
    let k = spec.torsion_orders.len();
    let mut out = Vec::with_capacity(spec.order().unwrap() as usize);
    let mut cur = vec![0u64; k];
    loop {
        out.push(Exponential {
            spec: spec.clone(),
            torsion_roots: cur.clone(),
            free_multipliers: vec![],
        });
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < spec.torsion_orders[i] {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// Checks `|f(x+y) − f(x)f(y)| ≤ tol` over the given sample pairs for an
/// arbitrary function, reporting the maximum deviation.
pub fn check_multiplicative<F>(
    spec: &GroupSpec,
    f: F,
    samples: &[(GroupElement, GroupElement)],
    tol: f64,
) -> Result<(bool, f64)>
where
    F: Fn(&GroupElement) -> Result<Complex64>,
{
    let mut max_dev = 0.0f64;
    for (x, y) in samples {
        let s = spec.add(x, y)?;
        let dev = (f(&s)? - f(x)? * f(y)?).norm();
        max_dev = max_dev.max(dev);
    }
    Ok((max_dev <= tol, max_dev))
}

/// Checks the defining identity of an [`Exponential`] over sample pairs.
pub fn check_exponential(
    m: &Exponential,
    samples: &[(GroupElement, GroupElement)],
    tol: f64,
) -> Result<(bool, f64)> {
    check_multiplicative(&m.spec, |x| m.eval(x), samples, tol)
}

/// An additive function `a(x) = Σ c_i·x_i` over the free coordinates.
///
/// A homomorphism from a finite group into `(C, +)` is zero, so torsion
/// coordinates never contribute.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdditiveFunction {
    #[serde(skip, default = "trivial_spec")]
    pub spec: GroupSpec,
    pub free_coeffs: Vec<Complex64>,
}

impl AdditiveFunction {
    pub fn new(spec: &GroupSpec, free_coeffs: Vec<Complex64>) -> Result<Self> {
        if free_coeffs.len() != spec.free_rank {
            return Err(FeqError::DimensionMismatch {
                expected: spec.free_rank,
                got: free_coeffs.len(),
            });
        }
        Ok(AdditiveFunction {
            spec: spec.clone(),
            free_coeffs,
        })
    }

    pub fn zero(spec: &GroupSpec) -> Self {
        AdditiveFunction {
            spec: spec.clone(),
            free_coeffs: vec![Complex64::new(0.0, 0.0); spec.free_rank],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_coeffs.iter().all(|c| c.norm() < MERGE_TOL)
    }

    pub fn eval(&self, x: &GroupElement) -> Result<Complex64> {
        if x.coords.len() != self.spec.dim() {
            return Err(FeqError::DimensionMismatch {
                expected: self.spec.dim(),
                got: x.coords.len(),
            });
        }
        Ok(self
            .free_coeffs
            .iter()
            .zip(&x.coords)
            .map(|(c, &xi)| c * xi as f64)
            .sum())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        AdditiveFunction {
            spec: self.spec.clone(),
            free_coeffs: self.free_coeffs.iter().map(|k| k * c).collect(),
        }
    }

    pub fn add(&self, other: &AdditiveFunction) -> Result<Self> {
        if self.spec != other.spec {
            return Err(FeqError::GroupMismatch);
        }
        Ok(AdditiveFunction {
            spec: self.spec.clone(),
            free_coeffs: self
                .free_coeffs
                .iter()
                .zip(&other.free_coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

/// A function constant on the cosets of `2G`, given by a coset table.
/// Missing cosets evaluate to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoGPeriodic {
    pub spec: GroupSpec,
    pub table: BTreeMap<Vec<u8>, Complex64>,
}

impl TwoGPeriodic {
    pub fn new(spec: &GroupSpec, table: BTreeMap<Vec<u8>, Complex64>) -> Result<Self> {
        let nbits = spec.coset_2g_bits();
        for key in table.keys() {
            if key.len() != nbits || key.iter().any(|&b| b > 1) {
                return Err(FeqError::InvalidParameter(format!(
                    "coset key {key:?} does not match {nbits} parity bits"
                )));
            }
        }
        Ok(TwoGPeriodic {
            spec: spec.clone(),
            table,
        })
    }

    pub fn constant(spec: &GroupSpec, c: Complex64) -> Self {
        let mut table = BTreeMap::new();
        let nbits = spec.coset_2g_bits();
        for idx in 0..(1u64 << nbits) {
            let bits: Vec<u8> = (0..nbits).map(|b| ((idx >> b) & 1) as u8).collect();
            table.insert(bits, c);
        }
        TwoGPeriodic {
            spec: spec.clone(),
            table,
        }
    }

    pub fn zero(spec: &GroupSpec) -> Self {
        TwoGPeriodic {
            spec: spec.clone(),
            table: BTreeMap::new(),
        }
    }

    pub fn eval_coset(&self, coset: &CosetIndex2G) -> Complex64 {
        self.table
            .get(&coset.bits)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn eval(&self, x: &GroupElement) -> Result<Complex64> {
        Ok(self.eval_coset(&self.spec.coset_2g(x)?))
    }

    pub fn is_zero(&self) -> bool {
        self.table.values().all(|v| v.norm() < MERGE_TOL)
    }

    /// A `2G`-periodic function on a group all of whose torsion orders are
    /// odd (and free rank 0) has a single coset, hence is constant.
    pub fn is_constant(&self) -> bool {
        self.spec.coset_2g_bits() == 0 || {
            let vals: Vec<_> = self.table.values().collect();
            vals.windows(2).all(|w| (w[0] - w[1]).norm() < MERGE_TOL)
                && (self.table.len() == 1 << self.spec.coset_2g_bits() || self.is_zero())
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        TwoGPeriodic {
            spec: self.spec.clone(),
            table: self.table.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &TwoGPeriodic) -> Result<Self> {
        if self.spec != other.spec {
            return Err(FeqError::GroupMismatch);
        }
        let mut table = self.table.clone();
        for (k, v) in &other.table {
            *table.entry(k.clone()).or_insert(Complex64::new(0.0, 0.0)) += v;
        }
        Ok(TwoGPeriodic {
            spec: self.spec.clone(),
            table,
        })
    }
}

/// One term `(a(x) + b)·m(x)` of an exponential polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub exponential: Exponential,
    pub additive: AdditiveFunction,
    pub constant: Complex64,
}

/// A closed-form function `x ↦ Σ_k (a_k(x)+b_k)·m_k(x) ± T(x)`.
///
/// This representation houses every solution component appearing in the
/// classification: `F₁`, `F₂`, `F`, `H`, `g`, `h`, `f`, `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpPolyFunction {
    pub spec: GroupSpec,
    pub terms: Vec<Term>,
    /// Optional `2G`-periodic addend with its sign.
    pub periodic: Option<(i8, TwoGPeriodic)>,
}

impl ExpPolyFunction {
    pub fn zero(spec: &GroupSpec) -> Self {
        ExpPolyFunction {
            spec: spec.clone(),
            terms: vec![],
            periodic: None,
        }
    }

    pub fn constant(spec: &GroupSpec, c: Complex64) -> Self {
        ExpPolyFunction::from_term(
            Exponential::trivial(spec),
            AdditiveFunction::zero(spec),
            c,
        )
    }

    pub fn from_term(m: Exponential, a: AdditiveFunction, b: Complex64) -> Self {
        let spec = m.spec.clone();
        ExpPolyFunction {
            spec,
            terms: vec![Term {
                exponential: m,
                additive: a,
                constant: b,
            }],
            periodic: None,
        }
    }

    /// `c·m(x)`.
    pub fn scaled_exponential(m: &Exponential, c: Complex64) -> Self {
        ExpPolyFunction::from_term(m.clone(), AdditiveFunction::zero(&m.spec), c)
    }

    pub fn with_periodic(mut self, sign: i8, t: TwoGPeriodic) -> Self {
        self.periodic = Some((sign, t));
        self
    }

    pub fn eval(&self, x: &GroupElement) -> Result<Complex64> {
        let mut v = Complex64::new(0.0, 0.0);
        for term in &self.terms {
            v += (term.additive.eval(x)? + term.constant) * term.exponential.eval(x)?;
        }
        if let Some((sign, t)) = &self.periodic {
            v += t.eval(x)? * *sign as f64;
        }
        Ok(v)
    }

    pub fn is_zero(&self) -> bool {
        self.terms
            .iter()
            .all(|t| t.additive.is_zero() && t.constant.norm() < MERGE_TOL)
            && self.periodic.as_ref().is_none_or(|(_, t)| t.is_zero())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        ExpPolyFunction {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exponential: t.exponential.clone(),
                    additive: t.additive.scale(c),
                    constant: t.constant * c,
                })
                .collect(),
            periodic: self
                .periodic
                .as_ref()
                .map(|(s, t)| (1, t.scale(c * *s as f64))),
        }
    }

    /// Sum with term merging: terms sharing an exponential combine their
    /// `(a, b)` factors, keeping the distinct-exponential representation.
    pub fn add(&self, other: &ExpPolyFunction) -> Result<Self> {
        if self.spec != other.spec {
            return Err(FeqError::GroupMismatch);
        }
        let mut terms: Vec<Term> = self.terms.clone();
        for t in &other.terms {
            if let Some(existing) = terms
                .iter_mut()
                .find(|e| e.exponential.same_as(&t.exponential))
            {
                existing.additive = existing.additive.add(&t.additive)?;
                existing.constant += t.constant;
            } else {
                terms.push(t.clone());
            }
        }
        terms.retain(|t| !(t.additive.is_zero() && t.constant.norm() < MERGE_TOL));
        let periodic = match (&self.periodic, &other.periodic) {
            (None, None) => None,
            (Some((s, t)), None) | (None, Some((s, t))) => Some((*s, t.clone())),
            (Some((s1, t1)), Some((s2, t2))) => {
                let combined = t1.scale(Complex64::new(*s1 as f64, 0.0))
                    .add(&t2.scale(Complex64::new(*s2 as f64, 0.0)))?;
                if combined.is_zero() {
                    None
                } else {
                    Some((1, combined))
                }
            }
        };
        Ok(ExpPolyFunction {
            spec: self.spec.clone(),
            terms,
            periodic,
        })
    }

    pub fn sub(&self, other: &ExpPolyFunction) -> Result<Self> {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    /// `f̌(x) = f(−x)`: each term `(a+b)·m` becomes `(−a+b)·m̌`; the
    /// `2G`-periodic part is even, so it is unchanged.
    pub fn reflect(&self) -> Self {
        ExpPolyFunction {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exponential: t.exponential.reflect(),
                    additive: t.additive.scale(Complex64::new(-1.0, 0.0)),
                    constant: t.constant,
                })
                .collect(),
            periodic: self.periodic.clone(),
        }
    }

    pub fn even_part(&self) -> Result<Self> {
        Ok(self
            .add(&self.reflect())?
            .scale(Complex64::new(0.5, 0.0)))
    }

    pub fn odd_part(&self) -> Result<Self> {
        Ok(self
            .sub(&self.reflect())?
            .scale(Complex64::new(0.5, 0.0)))
    }
}

/// A dense table of values on a finite group, indexed lexicographically.
/// This is the carrier for "arbitrary function" solution slots.
#[derive(Debug, Clone, PartialEq)]
pub struct TableFunction {
    pub spec: GroupSpec,
    pub values: Vec<Complex64>,
}

impl TableFunction {
    pub fn new(spec: &GroupSpec, values: Vec<Complex64>) -> Result<Self> {
        let order = spec.order().ok_or(FeqError::InfiniteGroup)? as usize;
        if values.len() != order {
            return Err(FeqError::DimensionMismatch {
                expected: order,
                got: values.len(),
            });
        }
        Ok(TableFunction {
            spec: spec.clone(),
            values,
        })
    }

    pub fn from_fn<F>(spec: &GroupSpec, f: F) -> Result<Self>
    where
        F: Fn(&GroupElement) -> Complex64,
    {
        let els = spec.enumerate_elements()?;
        Ok(TableFunction {
            spec: spec.clone(),
            values: els.iter().map(f).collect(),
        })
    }

    pub fn eval(&self, x: &GroupElement) -> Result<Complex64> {
        Ok(self.values[self.spec.index_of(x)?])
    }

    pub fn reflect(&self) -> Result<Self> {
        let spec = self.spec.clone();
        TableFunction::from_fn(&spec, |x| {
            let nx = spec.neg(x).unwrap();
            self.values[spec.index_of(&nx).unwrap()]
        })
    }
}

/// A concrete complex-valued function on the group, either in closed form
/// or as a dense table on a finite group.
#[derive(Debug, Clone, PartialEq)]
pub enum GroupFunction {
    ExpPoly(ExpPolyFunction),
    Table(TableFunction),
}

impl From<ExpPolyFunction> for GroupFunction {
    fn from(f: ExpPolyFunction) -> Self {
        GroupFunction::ExpPoly(f)
    }
}

impl From<TableFunction> for GroupFunction {
    fn from(f: TableFunction) -> Self {
        GroupFunction::Table(f)
    }
}

impl GroupFunction {
    pub fn zero(spec: &GroupSpec) -> Self {
        GroupFunction::ExpPoly(ExpPolyFunction::zero(spec))
    }

    pub fn spec(&self) -> &GroupSpec {
        match self {
            GroupFunction::ExpPoly(f) => &f.spec,
            GroupFunction::Table(f) => &f.spec,
        }
    }

    pub fn eval(&self, x: &GroupElement) -> Result<Complex64> {
        match self {
            GroupFunction::ExpPoly(f) => f.eval(x),
            GroupFunction::Table(f) => f.eval(x),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            GroupFunction::ExpPoly(f) => f.is_zero(),
            GroupFunction::Table(f) => f.values.iter().all(|v| v.norm() < MERGE_TOL),
        }
    }

    fn to_table(&self) -> Result<TableFunction> {
        match self {
            GroupFunction::Table(f) => Ok(f.clone()),
            GroupFunction::ExpPoly(f) => {
                let spec = f.spec.clone();
                let els = spec.enumerate_elements()?;
                let values = els
                    .iter()
                    .map(|x| f.eval(x))
                    .collect::<Result<Vec<_>>>()?;
                TableFunction::new(&spec, values)
            }
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        match self {
            GroupFunction::ExpPoly(f) => GroupFunction::ExpPoly(f.scale(c)),
            GroupFunction::Table(f) => GroupFunction::Table(TableFunction {
                spec: f.spec.clone(),
                values: f.values.iter().map(|v| v * c).collect(),
            }),
        }
    }

    pub fn add(&self, other: &GroupFunction) -> Result<Self> {
        if self.spec() != other.spec() {
            return Err(FeqError::GroupMismatch);
        }
        match (self, other) {
            (GroupFunction::ExpPoly(a), GroupFunction::ExpPoly(b)) => {
                Ok(GroupFunction::ExpPoly(a.add(b)?))
            }
            _ => {
                let a = self.to_table()?;
                let b = other.to_table()?;
                Ok(GroupFunction::Table(TableFunction {
                    spec: a.spec.clone(),
                    values: a
                        .values
                        .iter()
                        .zip(&b.values)
                        .map(|(x, y)| x + y)
                        .collect(),
                }))
            }
        }
    }

    pub fn sub(&self, other: &GroupFunction) -> Result<Self> {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn reflect(&self) -> Result<Self> {
        match self {
            GroupFunction::ExpPoly(f) => Ok(GroupFunction::ExpPoly(f.reflect())),
            GroupFunction::Table(f) => Ok(GroupFunction::Table(f.reflect()?)),
        }
    }

    /// `fₑ(x) = ½(f(x) + f(−x))`.
    pub fn even_part(&self) -> Result<Self> {
        Ok(self
            .add(&self.reflect()?)?
            .scale(Complex64::new(0.5, 0.0)))
    }

    /// `f₀(x) = ½(f(x) − f(−x))`.
    pub fn odd_part(&self) -> Result<Self> {
        Ok(self
            .sub(&self.reflect()?)?
            .scale(Complex64::new(0.5, 0.0)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn trivial_character_is_one() {
        let g = GroupSpec::new(1, vec![4]).unwrap();
        let m = Exponential::trivial(&g);
        let x = g.element(&[3, 2]).unwrap();
        assert!((m.eval(&x).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn z4_i_character() {
        // m(1) = i on Z_4, so m(3) = i^3 = -i
        let g = GroupSpec::cyclic(4);
        let m = Exponential::new(&g, vec![1], vec![]).unwrap();
        let v = m.eval(&g.element(&[3]).unwrap()).unwrap();
        assert!((v - c(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn additive_on_z() {
        let g = GroupSpec::free(1);
        let a = AdditiveFunction::new(&g, vec![c(1.0, 0.0)]).unwrap();
        let f = ExpPolyFunction::from_term(Exponential::trivial(&g), a, c(0.0, 0.0));
        let v = f.eval(&g.element(&[5]).unwrap()).unwrap();
        assert!((v - c(5.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn enumerate_z2_characters() {
        let g = GroupSpec::cyclic(2);
        let chars = enumerate_exponentials(&g).unwrap();
        assert_eq!(chars.len(), 2);
        let one = g.element(&[1]).unwrap();
        let vals: Vec<_> = chars.iter().map(|m| m.eval(&one).unwrap()).collect();
        assert!((vals[0] - c(1.0, 0.0)).norm() < 1e-15);
        assert!((vals[1] + c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn enumerate_z3_characters_are_cube_roots() {
        let g = GroupSpec::cyclic(3);
        let chars = enumerate_exponentials(&g).unwrap();
        assert_eq!(chars.len(), 3);
        let one = g.element(&[1]).unwrap();
        for m in &chars {
            let v = m.eval(&one).unwrap();
            assert!((v.powi(3) - c(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn enumerate_trivial_group() {
        let g = GroupSpec::new(0, vec![1]).unwrap();
        let chars = enumerate_exponentials(&g).unwrap();
        assert_eq!(chars.len(), 1);
    }

    #[test]
    fn check_exponential_valid_and_invalid() {
        let g = GroupSpec::cyclic(4);
        let els = g.enumerate_elements().unwrap();
        let pairs: Vec<_> = els
            .iter()
            .flat_map(|x| els.iter().map(move |y| (x.clone(), y.clone())))
            .collect();
        let m = Exponential::new(&g, vec![1], vec![]).unwrap();
        let (ok, dev) = check_exponential(&m, &pairs, 1e-12).unwrap();
        assert!(ok, "deviation {dev}");

        // "m(1) = 2" table on Z_4 is not multiplicative since 2^4 != 1
        let bad = |x: &GroupElement| Ok(c(2.0f64.powi(x.coords[0] as i32), 0.0));
        let (ok, dev) = check_multiplicative(&g, bad, &pairs, 1e-9).unwrap();
        assert!(!ok);
        assert!(dev > 1.0);

        let triv = Exponential::trivial(&g);
        let (ok, dev) = check_exponential(&triv, &pairs, 0.0).unwrap();
        assert!(ok);
        assert_eq!(dev, 0.0);
    }

    #[test]
    fn evenness_is_structural() {
        let g = GroupSpec::cyclic(4);
        assert!(!Exponential::new(&g, vec![1], vec![]).unwrap().is_even()); // m(1)=i
        assert!(Exponential::new(&g, vec![2], vec![]).unwrap().is_even()); // m(1)=-1
        assert!(Exponential::trivial(&g).is_even());
    }

    #[test]
    fn even_odd_parts_of_constant() {
        let g = GroupSpec::cyclic(4);
        let f = GroupFunction::ExpPoly(ExpPolyFunction::constant(&g, c(3.0, 1.0)));
        let fe = f.even_part().unwrap();
        let fo = f.odd_part().unwrap();
        for x in g.enumerate_elements().unwrap() {
            assert!((fe.eval(&x).unwrap() - c(3.0, 1.0)).norm() < 1e-15);
            assert!(fo.eval(&x).unwrap().norm() < 1e-15);
        }
    }

    #[test]
    fn even_part_of_indicator() {
        // indicator of {1} on Z_4: even part at 1 and 3 is 1/2
        let g = GroupSpec::cyclic(4);
        let f = GroupFunction::Table(
            TableFunction::from_fn(&g, |x| {
                if x.coords[0] == 1 {
                    c(1.0, 0.0)
                } else {
                    c(0.0, 0.0)
                }
            })
            .unwrap(),
        );
        let fe = f.even_part().unwrap();
        assert!((fe.eval(&g.element(&[1]).unwrap()).unwrap() - c(0.5, 0.0)).norm() < 1e-15);
        assert!((fe.eval(&g.element(&[3]).unwrap()).unwrap() - c(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn even_plus_odd_recovers_function() {
        let g = GroupSpec::cyclic(6);
        let m = Exponential::new(&g, vec![1], vec![]).unwrap();
        let f = GroupFunction::ExpPoly(ExpPolyFunction::scaled_exponential(&m, c(2.0, -1.0)));
        let fe = f.even_part().unwrap();
        let fo = f.odd_part().unwrap();
        for x in g.enumerate_elements().unwrap() {
            let lhs = fe.eval(&x).unwrap() + fo.eval(&x).unwrap();
            assert!((lhs - f.eval(&x).unwrap()).norm() < 1e-14);
            let nx = g.neg(&x).unwrap();
            assert!((fe.eval(&nx).unwrap() - fe.eval(&x).unwrap()).norm() < 1e-14);
            assert!((fo.eval(&nx).unwrap() + fo.eval(&x).unwrap()).norm() < 1e-14);
        }
    }

    #[test]
    fn exponential_never_vanishes() {
        let g = GroupSpec::new(1, vec![5]).unwrap();
        let m = Exponential::new(&g, vec![2], vec![c(0.3, 0.4)]).unwrap();
        for i in -10..=10 {
            for j in 0..5 {
                let x = g.element(&[i, j]).unwrap();
                assert!(m.eval(&x).unwrap().norm() > 1e-12);
            }
        }
    }

    #[test]
    fn additive_vanishes_on_finite_group() {
        let g = GroupSpec::new(0, vec![4, 3]).unwrap();
        let a = AdditiveFunction::zero(&g);
        assert!(a.is_zero());
        for x in g.enumerate_elements().unwrap() {
            assert_eq!(a.eval(&x).unwrap(), c(0.0, 0.0));
        }
    }

    #[test]
    fn two_g_periodic_even_and_constant_on_odd_groups() {
        let g = GroupSpec::cyclic(4);
        let mut table = BTreeMap::new();
        table.insert(vec![0u8], c(1.0, 0.0));
        table.insert(vec![1u8], c(-2.0, 3.0));
        let t = TwoGPeriodic::new(&g, table).unwrap();
        for x in g.enumerate_elements().unwrap() {
            let nx = g.neg(&x).unwrap();
            assert_eq!(t.eval(&x).unwrap(), t.eval(&nx).unwrap());
        }
        let odd = GroupSpec::new(0, vec![3, 5]).unwrap();
        let t2 = TwoGPeriodic::constant(&odd, c(7.0, 0.0));
        assert!(t2.is_constant());
        assert_eq!(odd.coset_2g_bits(), 0);
    }

    #[test]
    fn distinct_term_lists_differ_on_window() {
        // linear independence of exponential-polynomial terms: same
        // exponentials, different (a, b) factors => functions differ
        let g = GroupSpec::free(1);
        let m = Exponential::new(&g, vec![], vec![c(0.0, 1.0)]).unwrap();
        let a1 = AdditiveFunction::new(&g, vec![c(1.0, 0.0)]).unwrap();
        let a2 = AdditiveFunction::new(&g, vec![c(1.0, 0.5)]).unwrap();
        let f1 = ExpPolyFunction::from_term(m.clone(), a1, c(2.0, 0.0));
        let f2 = ExpPolyFunction::from_term(m, a2, c(2.0, 0.0));
        let window = 2 + 1; // 2 * #terms + 1 points per free coordinate
        let differs = (-(window as i64)..=window as i64).any(|i| {
            let x = g.element(&[i]).unwrap();
            (f1.eval(&x).unwrap() - f2.eval(&x).unwrap()).norm() > 1e-9
        });
        assert!(differs);
    }
}
