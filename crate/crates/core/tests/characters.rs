//! Truncated characters against closed power series, Weyl group symmetry
//! and deliberate corruption of claimed decompositions.

use affbranch_core::branching::{self, decompose_basic_vector, decompose_spin, weight_from_coeffs};
use affbranch_core::charoracle::{self, irreducible_character, verify_basic_vector, verify_spin, Parity};
use affbranch_core::linalg::{qi, qr, Q};
use affbranch_core::{AffineDatum, Rep, Simple, Weight};
use proptest::prelude::*;

/// Number of partitions of each integer up to `n`.
fn partitions(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            p[m] += p[m - part];
        }
    }
    p
}

/// Level one A1^(1): e^{Λ + jα − (j² + j·shift + m)δ} with multiplicity p(m).
fn a1_level_one(lam: &Weight, alpha: &Weight, delta: &Weight, shift: i64, depth: usize) -> Vec<(Weight, i64)> {
    let p = partitions(depth);
    let mut out = Vec::new();
    for j in -4i64..=4 {
        let top = j * j + j * shift;
        for m in 0..=depth as i64 {
            if top < 0 || top + m > depth as i64 {
                continue;
            }
            let mut w = lam.clone();
            w.axpy(qi(j), alpha);
            w.axpy(-qi(top + m), delta);
            out.push((w, p[m as usize]));
        }
    }
    out.sort();
    out
}

#[test]
fn a1_level_one_characters_match_the_theta_series() {
    let d = AffineDatum::complex(Simple::A(1)).unwrap();
    let ksys = &d.k_structure.system;
    let alpha = ksys.root_weight(&[0, 1]);
    let delta = ksys.root_weight(&[1, 1]);
    let depth = 5usize;
    for (coeffs, shift) in [([1, 0], 0i64), ([0, 1], 1)] {
        let lam = weight_from_coeffs(&d, &[coeffs.to_vec()], Q::from_integer(0), None).unwrap();
        let ch = irreducible_character(&d, &lam, delta.del * qi(depth as i64)).unwrap();
        let mut got: Vec<(Weight, i64)> = ch.entries.into_iter().collect();
        got.sort();
        assert_eq!(got, a1_level_one(&lam, &alpha, &delta, shift, depth), "{coeffs:?}");
    }
}

fn finite_reflections_preserve(d: &AffineDatum, lam: &Weight, depth: Q) {
    let ch = irreducible_character(d, lam, depth).unwrap();
    let ksys = &d.k_structure.system;
    for i in 0..ksys.size() {
        if !ksys.simple[i].del.is_integer() || ksys.simple[i].del != Q::from_integer(0) {
            continue;
        }
        for (w, m) in &ch.entries {
            assert_eq!(ch.get(&ksys.reflect(i, w)), *m, "reflection {i} at {w}");
        }
    }
    assert_eq!(ch.get(lam), 1);
    assert!(ch.entries.keys().all(|w| w.del <= lam.del));
}

#[test]
fn shells_are_invariant_under_the_finite_weyl_group() {
    let d = AffineDatum::parse("G2", &[0, 1, 0], 1).unwrap();
    for c in decompose_spin(&d).unwrap().iter().flat_map(|x| x.components.iter()) {
        finite_reflections_preserve(&d, &c.weight, qi(2));
    }
    let d = AffineDatum::parse("D4", &[0, 1, 0, 0], 2).unwrap();
    let b = decompose_basic_vector(&d, 0).unwrap();
    finite_reflections_preserve(&d, &b.components[1].weight, qi(1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Random dominant weights of B2^(1) at small level: Weyl invariance and
    /// a multiplicity-one highest weight.
    #[test]
    fn random_dominant_weights_give_symmetric_characters(a in 0i64..3, b in 0i64..3, c in 0i64..3) {
        let d = AffineDatum::complex(Simple::B(2)).unwrap();
        let lam = weight_from_coeffs(&d, &[vec![a, b, c]], Q::from_integer(0), None).unwrap();
        finite_reflections_preserve(&d, &lam, qi(1));
    }
}

#[test]
fn non_dominant_weights_are_rejected() {
    let d = AffineDatum::complex(Simple::A(1)).unwrap();
    let lam = weight_from_coeffs(&d, &[vec![2, 0]], Q::from_integer(0), None).unwrap();
    let bad = lam.sub(&d.k_structure.system.root_weight(&[1, 0]).scale(qi(3)));
    assert!(irreducible_character(&d, &bad, qi(1)).is_err());
}

#[test]
fn product_halves_differ_by_the_signed_product() {
    let d = AffineDatum::parse("G2", &[0, 1, 0], 1).unwrap();
    let full = charoracle::product_character(&d, Parity::Even, qi(2));
    let signed = charoracle::product_character_signed(&d, Parity::Even, qi(2), true);
    // The two products agree on the even part, so their sum is even everywhere.
    let mut sum = full.clone();
    sum.add_scaled(&signed, 1);
    assert!(sum.entries.values().all(|m| m % 2 == 0));
    assert_eq!(full.get(&d.k_structure.lambda0k), 1);
}

fn shifted(dec: &affbranch_core::Decomposition, index: usize, by: Q) -> affbranch_core::Decomposition {
    let mut out = dec.clone();
    out.components[index].weight.del += by;
    out.components[index].delta += by;
    out
}

#[test]
fn half_delta_faults_are_detected() {
    let depth = qi(2);
    let d = AffineDatum::parse("D4", &[0, 1, 0, 0], 2).unwrap();
    let b = decompose_basic_vector(&d, 0).unwrap();
    let v = decompose_basic_vector(&d, 1).unwrap();
    assert!(verify_basic_vector(&d, &b, &v, depth).unwrap().ok());
    for by in [qr(1, 2), qr(-1, 2)] {
        for j in [1, 3] {
            let r = verify_basic_vector(&d, &shifted(&b, j, by), &v, depth).unwrap();
            assert!(!r.ok(), "basic component {j} shifted by {by}");
            let r = verify_basic_vector(&d, &b, &shifted(&v, j, by), depth).unwrap();
            assert!(!r.ok(), "vector component {j} shifted by {by}");
        }
    }
    let s = decompose_spin(&d).unwrap();
    assert!(verify_spin(&d, &s, depth).unwrap().ok());
    for by in [qr(1, 2), qr(-1, 2)] {
        let mut bad = s.clone();
        bad[0] = shifted(&s[0], 0, by);
        assert!(!verify_spin(&d, &bad, depth).unwrap().ok(), "spin shifted by {by}");
    }
}

#[test]
fn dropped_or_duplicated_components_are_detected() {
    let d = AffineDatum::parse("G2", &[0, 1, 0], 1).unwrap();
    let b = decompose_basic_vector(&d, 0).unwrap();
    let v = decompose_basic_vector(&d, 1).unwrap();
    let mut fewer = b.clone();
    fewer.components.remove(1);
    assert!(-fewer.components[0].delta <= qi(2));
    assert!(!verify_basic_vector(&d, &fewer, &v, qi(2)).unwrap().ok());
    let mut more = v.clone();
    more.components[0].multiplicity = 2;
    assert!(!verify_basic_vector(&d, &b, &more, qi(2)).unwrap().ok());
}

#[test]
fn shallow_checks_carry_a_warning() {
    let d = AffineDatum::parse("G2", &[0, 1, 0], 1).unwrap();
    let r = charoracle::verify(&d, Rep::Spin, qr(1, 2)).unwrap();
    assert!(!r.warnings.is_empty());
    let r = charoracle::verify(&d, Rep::Spin, qi(2)).unwrap();
    assert!(r.warnings.is_empty());
    assert_eq!(r.status, "ok");
}

#[test]
fn hermitian_eigenspaces_pass_the_oracle() {
    for (alg, s) in [("A2", vec![1, 1, 0]), ("B2", vec![1, 1, 0])] {
        let d = AffineDatum::parse(alg, &s, 1).unwrap();
        for rep in [Rep::Basic, Rep::Vector, Rep::Spin] {
            let r = charoracle::verify_hermitian(&d, rep, &[-2, -1, 0, 1, 2], qi(2)).unwrap();
            assert!(r.ok(), "{alg} {rep}: {:?}", r.residuals.first());
        }
    }
}

#[test]
fn hermitian_charge_offsets_are_detected() {
    let d = AffineDatum::parse("A2", &[1, 1, 0], 1).unwrap();
    let good = branching::decompose_hermitian(&d, Rep::Basic, 0).unwrap();
    assert!(!good.components.is_empty());
    // Claiming the q = 0 components for q = 2 must fail.
    let full = charoracle::product_character(&d, Parity::Even, qi(2));
    let at_two = full.filter(|w| w.fin[0] == qi(2));
    let claimed = charoracle::claimed_character(
        &d,
        &good.components.iter().map(|c| (c.weight.clone(), 1)).collect::<Vec<_>>(),
        d.k_structure.lambda0k.del,
        qi(2),
    )
    .unwrap();
    assert_ne!(at_two, claimed);
}
