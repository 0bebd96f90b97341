//! Randomized structural invariants: group axioms, parity decomposition,
//! transform identities, and the equivalence of the integral and
//! convolution forms of the equation.

use num_complex::Complex64;
use proptest::prelude::*;

use feq_core::functions::{enumerate_exponentials, GroupFunction, TableFunction};
use feq_core::group::GroupSpec;
use feq_core::measure::Measure;
use feq_core::verify::sincos_residual_at;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn mixed_group() -> impl Strategy<Value = GroupSpec> {
    (0usize..=2, proptest::collection::vec(2u64..=6, 0..=2))
        .prop_map(|(r, t)| GroupSpec::new(r, t).unwrap())
}

fn small_finite_group() -> impl Strategy<Value = GroupSpec> {
    proptest::collection::vec(2u64..=8, 1..=2).prop_map(|t| GroupSpec::new(0, t).unwrap())
}

fn coords(spec: &GroupSpec) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-20i64..=20, spec.dim())
}

proptest! {
    #[test]
    fn group_addition_is_abelian_and_associative(
        (spec, xs, ys, zs) in mixed_group().prop_flat_map(|s| {
            let cx = coords(&s);
            let cy = coords(&s);
            let cz = coords(&s);
            (Just(s), cx, cy, cz)
        })
    ) {
        let x = spec.element(&xs).unwrap();
        let y = spec.element(&ys).unwrap();
        let z = spec.element(&zs).unwrap();
        prop_assert_eq!(spec.add(&x, &y).unwrap(), spec.add(&y, &x).unwrap());
        let left = spec.add(&spec.add(&x, &y).unwrap(), &z).unwrap();
        let right = spec.add(&x, &spec.add(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(spec.add(&x, &spec.neg(&x).unwrap()).unwrap(), spec.zero());
        prop_assert_eq!(spec.sub(&x, &y).unwrap(), spec.add(&x, &spec.neg(&y).unwrap()).unwrap());
    }

    #[test]
    fn coset_2g_is_translation_invariant(
        (spec, xs, ys) in mixed_group().prop_flat_map(|s| {
            let cx = coords(&s);
            let cy = coords(&s);
            (Just(s), cx, cy)
        })
    ) {
        let x = spec.element(&xs).unwrap();
        let y = spec.element(&ys).unwrap();
        let shifted = spec.add(&x, &spec.double(&y).unwrap()).unwrap();
        prop_assert_eq!(spec.coset_2g(&x).unwrap(), spec.coset_2g(&shifted).unwrap());
        // cosets are even: x and -x agree
        prop_assert_eq!(
            spec.coset_2g(&x).unwrap(),
            spec.coset_2g(&spec.neg(&x).unwrap()).unwrap()
        );
    }

    #[test]
    fn parity_decomposition_reconstructs(
        (spec, vals) in small_finite_group().prop_flat_map(|s| {
            let n = s.order().unwrap() as usize;
            let vs = proptest::collection::vec((-3.0f64..3.0, -3.0f64..3.0), n);
            (Just(s), vs)
        })
    ) {
        let f = GroupFunction::Table(
            TableFunction::new(&spec, vals.iter().map(|&(re, im)| c(re, im)).collect()).unwrap(),
        );
        let fe = f.even_part().unwrap();
        let fo = f.odd_part().unwrap();
        for x in spec.enumerate_elements().unwrap() {
            let nx = spec.neg(&x).unwrap();
            let sum = fe.eval(&x).unwrap() + fo.eval(&x).unwrap();
            prop_assert!((sum - f.eval(&x).unwrap()).norm() < 1e-12);
            prop_assert!((fe.eval(&nx).unwrap() - fe.eval(&x).unwrap()).norm() < 1e-12);
            prop_assert!((fo.eval(&nx).unwrap() + fo.eval(&x).unwrap()).norm() < 1e-12);
        }
    }

    #[test]
    fn mu_hat_is_linear_and_respects_inversion(
        (spec, atoms) in small_finite_group().prop_flat_map(|s| {
            let dim = s.dim();
            let atom = (
                proptest::collection::vec(0i64..8, dim),
                (-2.0f64..2.0, -2.0f64..2.0),
            );
            (Just(s), proptest::collection::vec(atom, 1..=4))
        })
    ) {
        let atoms: Vec<_> = atoms
            .iter()
            .map(|(p, (re, im))| (spec.element(p).unwrap(), c(*re, *im)))
            .collect();
        let mu = Measure::new(&spec, &atoms).unwrap();
        let doubled = mu.add(&mu).unwrap();
        for m in enumerate_exponentials(&spec).unwrap() {
            let hat = mu.mu_hat(&m).unwrap();
            prop_assert!((doubled.mu_hat(&m).unwrap() - hat * 2.0).norm() < 1e-12);
            let inv_hat = mu.invert().unwrap().mu_hat(&m).unwrap();
            prop_assert!((inv_hat - mu.mu_hat(&m.reflect()).unwrap()).norm() < 1e-12);
        }
    }

    /// The defining integral equals the convolution form
    /// `(f₁*μ)(x+y) + (f̌₂*μ)(x−y)` with the roles of `x` and `y` swapped.
    #[test]
    fn integral_form_matches_convolution_form(
        (spec, v1, v2, atoms) in small_finite_group().prop_flat_map(|s| {
            let n = s.order().unwrap() as usize;
            let dim = s.dim();
            let vs = || proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), n);
            let atom = (
                proptest::collection::vec(0i64..8, dim),
                (-2.0f64..2.0, -2.0f64..2.0),
            );
            (Just(s), vs(), vs(), proptest::collection::vec(atom, 1..=3))
        })
    ) {
        let f1 = GroupFunction::Table(
            TableFunction::new(&spec, v1.iter().map(|&(re, im)| c(re, im)).collect()).unwrap(),
        );
        let f2 = GroupFunction::Table(
            TableFunction::new(&spec, v2.iter().map(|&(re, im)| c(re, im)).collect()).unwrap(),
        );
        let atoms: Vec<_> = atoms
            .iter()
            .map(|(p, (re, im))| (spec.element(p).unwrap(), c(*re, *im)))
            .collect();
        let mu = Measure::new(&spec, &atoms).unwrap();
        let zero = GroupFunction::zero(&spec);
        let f2_rev = f2.reflect().unwrap();
        for x in spec.enumerate_elements().unwrap() {
            for y in spec.enumerate_elements().unwrap() {
                // with g = h = 0 the residual is |LHS| itself
                let integral = sincos_residual_at(&f1, &f2, &zero, &zero, &mu, &y, &x).unwrap();
                let conv = mu.convolve(&f1, &spec.add(&x, &y).unwrap()).unwrap()
                    + mu.convolve(&f2_rev, &spec.sub(&x, &y).unwrap()).unwrap();
                prop_assert!((integral - conv.norm()).abs() <= 1e-12);
            }
        }
    }
}
