//! Finitely supported complex measures: convolution against functions,
//! Fourier–Stieltjes transform, translation and inversion.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{FeqError, Result};
use crate::functions::{Exponential, GroupFunction};
use crate::group::{GroupElement, GroupSpec};

/// A finitely supported complex measure `μ = Σ w_t·δ_t`.
///
/// Atoms are keyed by canonical elements; inserting a duplicate point merges
/// the weights, so `translate` and `invert` stay closed and equality is
/// testable.
#[derive(Debug, Clone, PartialEq)]
pub struct Measure {
    pub spec: GroupSpec,
    atoms: BTreeMap<GroupElement, Complex64>,
}

impl Measure {
    pub fn new(spec: &GroupSpec, atoms: &[(GroupElement, Complex64)]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (p, w) in atoms {
            let canon = spec.element(&p.coords)?;
            *map.entry(canon).or_insert(Complex64::new(0.0, 0.0)) += w;
        }
        Ok(Measure {
            spec: spec.clone(),
            atoms: map,
        })
    }

    /// `w·δ_t`.
    pub fn dirac(spec: &GroupSpec, point: &GroupElement, weight: Complex64) -> Result<Self> {
        Measure::new(spec, &[(point.clone(), weight)])
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&GroupElement, &Complex64)> {
        self.atoms.iter()
    }

    pub fn total_weight(&self) -> Complex64 {
        self.atoms.values().sum()
    }

    /// Drops atoms of negligible weight; no integral changes.
    pub fn pruned(&self, tol: f64) -> Self {
        Measure {
            spec: self.spec.clone(),
            atoms: self
                .atoms
                .iter()
                .filter(|(_, w)| w.norm() > tol)
                .map(|(p, w)| (p.clone(), *w))
                .collect(),
        }
    }

    /// `(f * μ)(x) = ∫ f(x − t) dμ(t) = Σ_t f(x − t)·w(t)`.
    pub fn convolve(&self, f: &GroupFunction, x: &GroupElement) -> Result<Complex64> {
        let mut v = Complex64::new(0.0, 0.0);
        for (t, w) in &self.atoms {
            let arg = self.spec.sub(x, t)?;
            v += f.eval(&arg)? * w;
        }
        Ok(v)
    }

    /// Fourier–Stieltjes transform `μ̂(m) = ∫ m(−t) dμ(t)`.
    pub fn mu_hat(&self, m: &Exponential) -> Result<Complex64> {
        let mut v = Complex64::new(0.0, 0.0);
        for (t, w) in &self.atoms {
            let nt = self.spec.neg(t)?;
            v += m.eval(&nt)? * w;
        }
        Ok(v)
    }

    /// The translate `μ_y`: every atom shifted by `+y`.
    pub fn translate(&self, y: &GroupElement) -> Result<Self> {
        let atoms: Vec<_> = self
            .atoms
            .iter()
            .map(|(p, w)| Ok((self.spec.add(p, y)?, *w)))
            .collect::<Result<_>>()?;
        Measure::new(&self.spec, &atoms)
    }

    /// The inversion `μ̌`: every atom point negated.
    pub fn invert(&self) -> Result<Self> {
        let atoms: Vec<_> = self
            .atoms
            .iter()
            .map(|(p, w)| Ok((self.spec.neg(p)?, *w)))
            .collect::<Result<_>>()?;
        Measure::new(&self.spec, &atoms)
    }

    /// `μ + ν`.
    pub fn add(&self, other: &Measure) -> Result<Self> {
        if self.spec != other.spec {
            return Err(FeqError::GroupMismatch);
        }
        let atoms: Vec<_> = self
            .atoms
            .iter()
            .chain(other.atoms.iter())
            .map(|(p, w)| (p.clone(), *w))
            .collect();
        Measure::new(&self.spec, &atoms)
    }
}
