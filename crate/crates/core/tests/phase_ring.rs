use std::collections::HashMap;
use std::f64::consts::PI;

use phasespin_core::{PhaseVar, Scalar, TrigPoly};
use proptest::prelude::*;
use std::sync::OnceLock;

fn vars() -> [PhaseVar; 2] {
    static V: OnceLock<[PhaseVar; 2]> = OnceLock::new();
    *V.get_or_init(|| [PhaseVar::fresh(), PhaseVar::fresh()])
}

/// Sums of products of at most two harmonics, low degree so products stay
/// under the harmonic cap.
fn poly() -> impl Strategy<Value = TrigPoly> {
    let term = (-2.0f64..2.0, 0usize..2, 0u32..2, any::<bool>(), 0usize..2, 0u32..2, any::<bool>());
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        let v = vars();
        let basis = |i: usize, k: u32, c: bool| {
            if c {
                TrigPoly::cos(v[i], k)
            } else {
                TrigPoly::sin(v[i], k)
            }
        };
        terms.into_iter().fold(TrigPoly::zero(), |acc, (c, i, k, cs, j, l, ds)| {
            let t = basis(i, k, cs).try_mul(&basis(j, l, ds)).unwrap().scale(c);
            acc.add(&t)
        })
    })
}

fn at(a: f64, b: f64) -> HashMap<PhaseVar, f64> {
    let v = vars();
    HashMap::from([(v[0], a), (v[1], b)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        let ab = a.try_mul(&b).unwrap();
        prop_assert!(ab.approx_eq(&b.try_mul(&a).unwrap(), 1e-12));
        let l = ab.try_mul(&c).unwrap();
        let r = a.try_mul(&b.try_mul(&c).unwrap()).unwrap();
        prop_assert!(l.approx_eq(&r, 1e-12));
        let l = a.try_mul(&b.add(&c)).unwrap();
        let r = ab.add(&a.try_mul(&c).unwrap());
        prop_assert!(l.approx_eq(&r, 1e-12));
        prop_assert!(a.try_mul(&TrigPoly::one()).unwrap().approx_eq(&a, 0.0));
        prop_assert!(a.add(&a.neg()).is_zero(0.0));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), x in -PI..PI, y in -PI..PI) {
        let pt = at(x, y);
        let ab = a.try_mul(&b).unwrap().eval(&pt).unwrap();
        let want = a.eval(&pt).unwrap() * b.eval(&pt).unwrap();
        prop_assert!((ab - want).abs() < 1e-12);
        let sum = a.add(&b).eval(&pt).unwrap();
        prop_assert!((sum - a.eval(&pt).unwrap() - b.eval(&pt).unwrap()).abs() < 1e-12);
    }

    /// A 32-point uniform rule integrates every harmonic below 32 exactly,
    /// so it must agree with the symbolic average.
    #[test]
    fn expectation_matches_quadrature(a in poly(), b in poly(), y in -PI..PI) {
        let v = vars();
        let p = a.try_mul(&b).unwrap();
        let n = 32;
        let quad: f64 = (0..n)
            .map(|k| p.eval(&at(2.0 * PI * k as f64 / n as f64, y)).unwrap())
            .sum::<f64>() / n as f64;
        let sym = p.expect(&[v[0]]).eval(&at(0.0, y)).unwrap();
        prop_assert!((quad - sym).abs() < 1e-12, "quad {quad} sym {sym}");
    }

    #[test]
    fn shift_commutes_with_eval(a in poly(), x in -PI..PI, d in -PI..PI) {
        let v = vars();
        let lhs = a.shift(v[0], d).eval(&at(x, 0.3)).unwrap();
        let rhs = a.eval(&at(x + d, 0.3)).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-12);
    }
}
