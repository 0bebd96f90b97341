//! Finitely generated abelian groups `Z^r ⊕ Z_{n1} ⊕ … ⊕ Z_{nk}`.
//!
//! Elements are dense integer vectors. Torsion coordinates are kept in
//! canonical reduced form `[0, n_j)` so equality is structural equality.

use serde::{Deserialize, Serialize};

use crate::error::{FeqError, Result};

/// A finitely generated abelian group given by its invariant-factor shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub free_rank: usize,
    #[serde(rename = "torsion")]
    pub torsion_orders: Vec<u64>,
}

/// An element of a [`GroupSpec`]: free coordinates first, then torsion.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub coords: Vec<i64>,
}

/// Identifies the coset of the subgroup `2G` an element lies in.
///
/// One parity bit per free coordinate and one per even torsion order;
/// odd torsion orders contribute no bit since `2 Z_n = Z_n` for odd `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetIndex2G {
    pub bits: Vec<u8>,
}

impl GroupSpec {
    pub fn new(free_rank: usize, torsion_orders: Vec<u64>) -> Result<Self> {
        if torsion_orders.contains(&0) {
            return Err(FeqError::InvalidParameter(
                "torsion orders must be >= 1".into(),
            ));
        }
        Ok(GroupSpec {
            free_rank,
            torsion_orders,
        })
    }

    /// `Z_n`.
    pub fn cyclic(n: u64) -> Self {
        GroupSpec::new(0, vec![n]).unwrap()
    }

    /// `Z^r`.
    pub fn free(r: usize) -> Self {
        GroupSpec::new(r, vec![]).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.free_rank + self.torsion_orders.len()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order for finite groups.
    pub fn order(&self) -> Option<u64> {
        if self.is_finite() {
            Some(self.torsion_orders.iter().product())
        } else {
            None
        }
    }

    fn check_dim(&self, x: &GroupElement) -> Result<()> {
        if x.coords.len() != self.dim() {
            return Err(FeqError::DimensionMismatch {
                expected: self.dim(),
                got: x.coords.len(),
            });
        }
        Ok(())
    }

    /// Builds an element from raw coordinates, reducing torsion coordinates.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.dim() {
            return Err(FeqError::DimensionMismatch {
                expected: self.dim(),
                got: coords.len(),
            });
        }
        let mut c = coords.to_vec();
        self.canonicalize(&mut c);
        Ok(GroupElement { coords: c })
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.dim()],
        }
    }

    fn canonicalize(&self, coords: &mut [i64]) {
        for (j, &n) in self.torsion_orders.iter().enumerate() {
            let i = self.free_rank + j;
            coords[i] = coords[i].rem_euclid(n as i64);
        }
    }

    pub fn add(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let mut c: Vec<i64> = x
            .coords
            .iter()
            .zip(&y.coords)
            .map(|(a, b)| a + b)
            .collect();
        self.canonicalize(&mut c);
        Ok(GroupElement { coords: c })
    }

    pub fn neg(&self, x: &GroupElement) -> Result<GroupElement> {
        self.check_dim(x)?;
        let mut c: Vec<i64> = x.coords.iter().map(|a| -a).collect();
        self.canonicalize(&mut c);
        Ok(GroupElement { coords: c })
    }

    pub fn sub(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        let ny = self.neg(y)?;
        self.add(x, &ny)
    }

    pub fn double(&self, x: &GroupElement) -> Result<GroupElement> {
        self.add(x, x)
    }

    /// All elements of a finite group in lexicographic order of coordinates.
    pub fn enumerate_elements(&self) -> Result<Vec<GroupElement>> {
        if !self.is_finite() {
            return Err(FeqError::InfiniteGroup);
        }
        let k = self.torsion_orders.len();
        let mut out = Vec::with_capacity(self.order().unwrap() as usize);
        let mut cur = vec![0i64; k];
        loop {
            out.push(GroupElement { coords: cur.clone() });
            // odometer increment, last coordinate fastest
            let mut i = k;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < self.torsion_orders[i] as i64 {
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    /// Lexicographic index of an element of a finite group.
    pub fn index_of(&self, x: &GroupElement) -> Result<usize> {
        if !self.is_finite() {
            return Err(FeqError::InfiniteGroup);
        }
        self.check_dim(x)?;
        let mut idx = 0usize;
        for (j, &n) in self.torsion_orders.iter().enumerate() {
            idx = idx * n as usize + x.coords[j].rem_euclid(n as i64) as usize;
        }
        Ok(idx)
    }

    /// The coset of `2G` containing `x`.
    pub fn coset_2g(&self, x: &GroupElement) -> Result<CosetIndex2G> {
        self.check_dim(x)?;
        let mut bits = Vec::new();
        for i in 0..self.free_rank {
            bits.push(x.coords[i].rem_euclid(2) as u8);
        }
        for (j, &n) in self.torsion_orders.iter().enumerate() {
            if n % 2 == 0 {
                bits.push(x.coords[self.free_rank + j].rem_euclid(2) as u8);
            }
        }
        Ok(CosetIndex2G { bits })
    }

    /// Number of parity bits in a [`CosetIndex2G`] for this group.
    pub fn coset_2g_bits(&self) -> usize {
        self.free_rank + self.torsion_orders.iter().filter(|&&n| n % 2 == 0).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_reduces_torsion() {
        let g = GroupSpec::cyclic(4);
        let x = g.element(&[3]).unwrap();
        let y = g.element(&[2]).unwrap();
        assert_eq!(g.add(&x, &y).unwrap(), g.element(&[1]).unwrap());
    }

    #[test]
    fn add_on_free_group() {
        let g = GroupSpec::free(1);
        let x = g.element(&[5]).unwrap();
        let y = g.element(&[-7]).unwrap();
        assert_eq!(g.add(&x, &y).unwrap().coords, vec![-2]);
    }

    #[test]
    fn add_identity() {
        let g = GroupSpec::new(1, vec![3, 4]).unwrap();
        let x = g.element(&[7, 2, 3]).unwrap();
        assert_eq!(g.add(&x, &g.zero()).unwrap(), x);
    }

    #[test]
    fn neg_examples() {
        let g = GroupSpec::cyclic(4);
        assert_eq!(
            g.neg(&g.element(&[1]).unwrap()).unwrap(),
            g.element(&[3]).unwrap()
        );
        assert_eq!(g.neg(&g.zero()).unwrap(), g.zero());
        let z = GroupSpec::free(1);
        assert_eq!(z.neg(&z.element(&[5]).unwrap()).unwrap().coords, vec![-5]);
    }

    #[test]
    fn dimension_mismatch_is_error() {
        let g = GroupSpec::cyclic(4);
        let h = GroupSpec::new(0, vec![2, 2]).unwrap();
        let x = h.element(&[1, 1]).unwrap();
        assert!(matches!(
            g.add(&x, &x),
            Err(FeqError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn enumerate_z2() {
        let g = GroupSpec::cyclic(2);
        let els = g.enumerate_elements().unwrap();
        assert_eq!(els, vec![g.element(&[0]).unwrap(), g.element(&[1]).unwrap()]);
    }

    #[test]
    fn enumerate_z2_z3() {
        let g = GroupSpec::new(0, vec![2, 3]).unwrap();
        let els = g.enumerate_elements().unwrap();
        assert_eq!(els.len(), 6);
        for (i, e) in els.iter().enumerate() {
            assert_eq!(g.index_of(e).unwrap(), i);
        }
    }

    #[test]
    fn enumerate_infinite_is_error() {
        let g = GroupSpec::free(1);
        assert!(matches!(g.enumerate_elements(), Err(FeqError::InfiniteGroup)));
    }

    #[test]
    fn coset_2g_z4() {
        // 2G on Z_4 is {0, 2}; 3 lies in the nontrivial coset.
        let g = GroupSpec::cyclic(4);
        let doubled: Vec<_> = g
            .enumerate_elements()
            .unwrap()
            .iter()
            .map(|x| g.double(x).unwrap())
            .collect();
        assert!(!doubled.contains(&g.element(&[3]).unwrap()));
        assert_eq!(g.coset_2g(&g.element(&[3]).unwrap()).unwrap().bits, vec![1]);
    }

    #[test]
    fn coset_2g_z3_trivial() {
        // doubling is onto Z_3, so there is a single coset
        let g = GroupSpec::cyclic(3);
        let doubled: std::collections::BTreeSet<_> = g
            .enumerate_elements()
            .unwrap()
            .iter()
            .map(|x| g.double(x).unwrap())
            .collect();
        assert_eq!(doubled.len(), 3);
        assert!(g.coset_2g(&g.element(&[2]).unwrap()).unwrap().bits.is_empty());
    }

    #[test]
    fn coset_2g_free_parity() {
        let g = GroupSpec::free(1);
        assert_eq!(g.coset_2g(&g.element(&[7]).unwrap()).unwrap().bits, vec![1]);
    }

    #[test]
    fn odd_torsion_doubling_is_bijection() {
        for n in (1..=15u64).step_by(2) {
            let g = GroupSpec::cyclic(n);
            let doubled: std::collections::BTreeSet<_> = g
                .enumerate_elements()
                .unwrap()
                .iter()
                .map(|x| g.double(x).unwrap())
                .collect();
            assert_eq!(doubled.len(), n as usize, "doubling not onto Z_{n}");
            assert_eq!(g.coset_2g_bits(), 0);
        }
    }
}
