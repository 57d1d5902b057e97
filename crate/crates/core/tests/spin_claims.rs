use std::f64::consts::PI;

use phasespin_core::entangle::{
    intrinsic_correlation, separable_expectation, separable_oracle, separable_pair, spinor_bell_gram, total_spin,
};
use phasespin_core::oracle::{born_probability, spin_state};
use phasespin_core::sigma::{components, from_spherical, sigma};
use phasespin_core::spin::{
    improper_map, phased_max_diff, rotate_spin, sg_measure, spin_expectation, spinor_compose,
    spinor_compose_two_sided, spinor_gram,
};
use phasespin_core::{bell_state, make_spin, BellVariant, Handedness, PhaseVar, Scalar, SeparableKind, SpinBasis};
use proptest::prelude::*;

fn direction() -> impl Strategy<Value = (f64, f64)> {
    (-1.0f64..1.0, -PI..PI).prop_map(|(z, p)| (z.acos(), p))
}

fn basis() -> impl Strategy<Value = SpinBasis> {
    prop_oneof![
        Just(SpinBasis::Up),
        Just(SpinBasis::Down),
        (1u8..=3).prop_map(SpinBasis::Frame)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn modulus_survives_rotation_and_reflection(b in basis(), (t, p) in direction(), mu in 0u8..4) {
        let s = make_spin(b, PhaseVar::fresh()).unwrap();
        let r = rotate_spin(&s, &from_spherical(t, p)).unwrap();
        prop_assert!(r.full_square().unwrap().approx_eq(&phasespin_core::TrigPoly::constant(0.75), 1e-14));
        prop_assert_eq!(r.hand(), s.hand());
        let m = improper_map(&r, mu).unwrap();
        prop_assert!(m.full_square().unwrap().approx_eq(&phasespin_core::TrigPoly::constant(0.75), 1e-14));
        prop_assert_eq!(m.hand(), s.hand().flipped());
        prop_assert!(phased_max_diff(m.mv(), &m.reassembled().unwrap()) < 1e-13);
        let twice = improper_map(&m, mu).unwrap();
        prop_assert_eq!(twice.hand(), s.hand());
        prop_assert!(phased_max_diff(twice.mv(), r.mv()) < 1e-13);
    }

    #[test]
    fn one_sided_equals_two_sided((t, p) in direction()) {
        let u = from_spherical(t, p);
        let phase = PhaseVar::fresh();
        let one = spinor_compose(&u, phase).unwrap();
        let two = spinor_compose_two_sided(&u, phase).unwrap();
        prop_assert!(phased_max_diff(one.mv(), two.mv()) < 1e-12);
        prop_assert!(spinor_gram(&u).unwrap().abs() < 1e-12);
    }

    #[test]
    fn measurement_matches_born_rule((t, p) in direction(), (dt, dp) in direction()) {
        let s = rotate_spin(&make_spin(SpinBasis::Up, PhaseVar::fresh()).unwrap(), &from_spherical(t, p)).unwrap();
        let u = from_spherical(dt, dp);
        let rec = sg_measure(&s, &u).unwrap();
        let (pp, pm) = born_probability(spin_state(t, p), components(&u));
        prop_assert!((rec.p_coincide - pp).abs() < 1e-12);
        prop_assert!((rec.p_anti - pm).abs() < 1e-12);
    }
}

#[test]
fn both_basis_spins_are_right_handed_with_half_axis_expectation() {
    for (b, sign) in [(SpinBasis::Up, 1.0), (SpinBasis::Down, -1.0)] {
        let s = make_spin(b, PhaseVar::fresh()).unwrap();
        assert_eq!(s.hand(), Handedness::Right);
        assert_eq!(spin_expectation(&s).unwrap(), sigma(3).scale(0.5 * sign));
    }
}

#[test]
fn bell_intrinsic_values() {
    let squares = [0.0, 2.0, 2.0, 2.0];
    let corr = [-1.5, 0.5, 0.5, 0.5];
    let mut closure = 0.0;
    for mu in 0..4u8 {
        let b = bell_state(mu, BellVariant::Y).unwrap();
        assert_eq!(total_spin(&b).unwrap().expected_square, squares[mu as usize]);
        let c = intrinsic_correlation(&b).unwrap();
        assert_eq!(c, corr[mu as usize]);
        closure += c;
    }
    assert_eq!(closure, 0.0);
}

#[test]
fn separable_states_match_products() {
    let u = from_spherical(1.1, 0.4);
    let v = from_spherical(0.3, 2.9);
    for kind in SeparableKind::ALL {
        let e = separable_expectation(&separable_pair(kind), &u, &v).unwrap();
        let o = separable_oracle(kind, &u, &v).unwrap();
        assert_eq!(e.bipartite, e.partials.0 * e.partials.1);
        assert_eq!(e, o);
    }
}

#[test]
fn gram_matrices_are_diagonal() {
    for full in [true, false] {
        let g = spinor_bell_gram(full).unwrap();
        for (i, row) in g.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i != j {
                    assert!(x.abs() < 1e-12);
                }
            }
        }
    }
}
