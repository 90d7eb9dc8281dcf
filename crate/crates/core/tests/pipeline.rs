//! Cross-module consistency: the two Alexander pipelines agree, the
//! numeric invariants match their closed forms, and classification is
//! exactly as sharp as the polynomials.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use platkit_core::*;

/// Even coprime residues in (0, 2p): one per equivalence class of
/// non-trivial F(p, ·), i.e. every canonical even representative but 0.
fn class_reps(p: i64) -> Vec<i64> {
    (2..2 * p).step_by(2).filter(|q| p.gcd(q) == 1).collect()
}

#[test]
fn closed_form_matches_ribbon_form() {
    for p in (1..=99).step_by(2) {
        for q in class_reps(p) {
            let closed = alexander_closed(p, q).unwrap();
            let via_ribbon = alexander_from_ribbon_type(&ribbon_type(p, q).unwrap());
            assert!(
                closed.doteq(&via_ribbon),
                "pipelines disagree at F({p}, {q}): {closed} vs {via_ribbon}"
            );
        }
    }
}

#[test]
fn determinant_and_a_equal_p() {
    for p in (1..=99).step_by(2) {
        for q in class_reps(p) {
            let delta = alexander_closed(p, q).unwrap();
            assert_eq!(determinant(&delta), BigUint::from(p as u64));
            assert_eq!(a_and_tau(&delta).unwrap().a, BigUint::from(p as u64));
        }
    }
}

#[test]
fn tau_matches_modular_inverse() {
    for p in (1..=99).step_by(2) {
        for q in class_reps(p) {
            let delta = alexander_closed(p, q).unwrap();
            let from_coeffs = a_and_tau(&delta).unwrap().tau;
            let closed = tau_closed_form(p, q).unwrap();
            assert_eq!(
                from_coeffs,
                BigUint::from(closed as u64),
                "τ at F({p}, {q})"
            );
        }
    }
}

#[test]
fn tau_matches_weighted_epsilon_sum() {
    // τ ≡ −Σ i·εᵢ (mod p)
    for p in (3..=99).step_by(2) {
        for q in class_reps(p) {
            let tau = tau_closed_form(p, q).unwrap() as i128;
            let eps = epsilon_seq(p, q).unwrap();
            let weighted: i128 = eps
                .signs()
                .iter()
                .enumerate()
                .map(|(i, &e)| (i as i128 + 1) * e as i128)
                .sum();
            assert_eq!((tau + weighted).rem_euclid(p as i128), 0, "at F({p}, {q})");
        }
    }
}

#[test]
fn mirror_inverts_the_variable() {
    for p in (1..=61).step_by(2) {
        for q in class_reps(p) {
            let plain = alexander_closed(p, q).unwrap();
            let mirrored = alexander_closed(p, -q).unwrap();
            assert!(
                mirrored.doteq(&plain.invert_var()),
                "Δ(F({p}, −{q})) should be Δ(F({p}, {q}))(t⁻¹) up to ≐"
            );
        }
    }
}

#[test]
fn trivial_knot_has_unit_polynomial() {
    for q in [-7, -1, 0, 1, 2, 9] {
        assert_eq!(alexander_closed(1, q).unwrap(), LaurentPoly::one());
    }
}

#[test]
fn bridge_oracle_reciprocal_zero_tau() {
    for p in (3..=61).step_by(2) {
        for q in (1..p).step_by(2) {
            if p.gcd(&q) != 1 {
                continue;
            }
            for q in [q, -q] {
                let f = bridge_alexander(p, q).unwrap();
                assert!(f.is_reciprocal(), "K({p}, {q})");
                assert!(a_and_tau(&f).unwrap().tau.is_zero(), "K({p}, {q})");
                assert_eq!(determinant(&f), BigUint::from(p as u64));
            }
        }
    }
}

#[test]
fn schubert_equivalent_knots_share_polynomials() {
    for p in (3..=61).step_by(2) {
        let qs: Vec<i64> = (1..p).step_by(2).filter(|q| p.gcd(q) == 1).collect();
        for &q in &qs {
            for &q2 in &qs {
                if schubert_equivalent(p, q, p, q2).unwrap() {
                    let f = bridge_alexander(p, q).unwrap();
                    let g = bridge_alexander(p, q2).unwrap();
                    assert!(f.doteq(&g), "K({p},{q}) ≅ K({p},{q2}) but Δ differs");
                }
            }
        }
    }
}

#[test]
fn classification_agrees_with_polynomials() {
    // within one determinant, distinct classes have non-≐ normalized Δ
    for p in (3..=61).step_by(2) {
        let reps = class_reps(p);
        let polys: Vec<LaurentPoly> = reps
            .iter()
            .map(|&q| alexander_closed(p, q).unwrap().normalize().unwrap())
            .collect();
        for i in 0..reps.len() {
            for j in (i + 1)..reps.len() {
                assert!(
                    !polys[i].doteq(&polys[j]),
                    "F({p}, {}) and F({p}, {}) share a polynomial",
                    reps[i],
                    reps[j]
                );
            }
        }
    }
}

#[test]
fn classification_is_sound_for_invariants() {
    // equivalent forms have equal determinant and τ
    let pairs = [(5, 2, 5, 7), (5, 2, 5, -3), (7, 4, 7, 25), (9, 4, 9, 13)];
    for (p, q, p2, q2) in pairs {
        assert!(plat_equivalent(p, q, p2, q2).unwrap());
        let a = canonical_class_rep(p, q).unwrap();
        let b = canonical_class_rep(p2, q2).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            tau_closed_form(a.p(), a.q()).unwrap(),
            tau_closed_form(b.p(), b.q()).unwrap()
        );
    }
}

#[test]
fn tau_separates_classes() {
    // q ↦ (2q)⁻¹ mod p is injective on class representatives
    for p in (3..=199).step_by(2) {
        let mut seen = std::collections::BTreeSet::new();
        for q in class_reps(p) {
            assert!(
                seen.insert(tau_closed_form(p, q).unwrap()),
                "τ collision at p = {p}, q = {q}"
            );
        }
    }
}

#[test]
fn table_rows_for_small_p() {
    // frozen normalized polynomials for every class with p ≤ 7
    let expect = [
        (1, 0, "R(0, 0)", "([1])"),
        (3, 2, "R(1, -1)", "([0], 2, -1)"),
        (5, 2, "R(1, 1, -1, -1)", "([2], -2, 1)"),
        (5, 4, "R(1, -1, 1, -1)", "([0], 0, 3, -2)"),
        (7, 2, "R(1, 1, 1, -1, -1, -1)", "([0], 2, -2, 2, -1)"),
        (7, 4, "R(1, -1, -1, 1, 1, -1)", "([-1], 4, -2)"),
        (7, 6, "R(1, -1, 1, -1, 1, -1)", "([0], 0, 0, 4, -3)"),
    ];
    for (p, q, ribbon, delta) in expect {
        assert_eq!(ribbon_type(p, q).unwrap().to_string(), ribbon);
        assert_eq!(
            alexander_closed(p, q)
                .unwrap()
                .normalize()
                .unwrap()
                .to_string(),
            delta
        );
    }
}

#[test]
fn table_rows_with_interior_constant() {
    // rows whose normalized form has negative exponents
    let expect = [
        (11, 4, "(-1, 4, [-4], 2)"),
        (13, 8, "(1, -4, [6], -2)"),
        (17, 6, "(-2, 6, -6, [3])"),
        (19, 12, "(-1, 4, [-6], 6, -2)"),
    ];
    for (p, q, delta) in expect {
        assert_eq!(
            alexander_closed(p, q)
                .unwrap()
                .normalize()
                .unwrap()
                .to_string(),
            delta,
            "Δ(F({p}, {q}))"
        );
    }
}

#[test]
fn sign_walk_parity() {
    // d(i) ≡ i (mod 2): each step moves by ±1
    for p in (3..=99).step_by(2) {
        for q in class_reps(p) {
            let mut d = 0i64;
            for (i, &e) in epsilon_seq(p, q).unwrap().signs().iter().enumerate() {
                d += e as i64;
                assert_eq!(d.rem_euclid(2), (i as i64 + 1).rem_euclid(2));
            }
        }
    }
}
