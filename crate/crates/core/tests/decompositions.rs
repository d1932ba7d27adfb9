//! Decompositions checked against golden tables and closed forms, plus
//! independent counting arguments.

use std::collections::BTreeMap;

use affbranch_core::branching::{self, decompose_basic_vector, decompose_hermitian, decompose_spin};
use affbranch_core::linalg::{self, qi, Q};
use affbranch_core::{weylcomb, AffineDatum, Decomposition, Label, Rep, Simple};

type Multiset = BTreeMap<Vec<Vec<i64>>, u64>;

fn multiset<'a>(decs: impl IntoIterator<Item = &'a Decomposition>) -> Multiset {
    let mut m = Multiset::new();
    for dec in decs {
        for c in &dec.components {
            *m.entry(c.ideal_coeffs.clone()).or_default() += c.multiplicity * dec.global_multiplier;
        }
    }
    m
}

fn table(rows: &[(&[i64], &[i64])]) -> Multiset {
    let mut m = Multiset::new();
    for (a, b) in rows {
        *m.entry(vec![a.to_vec(), b.to_vec()]).or_default() += 1;
    }
    m
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

#[test]
fn g2_spin_matches_golden_table() {
    let d = AffineDatum::parse("G2", &[0, 1, 0], 1).unwrap();
    assert_eq!(d.ideal_names(), ["A1", "A1"]);
    let got = multiset(&decompose_spin(&d).unwrap());
    let want = table(&[
        (&[0, 2], &[10, 0]),
        (&[1, 1], &[7, 3]),
        (&[0, 2], &[4, 6]),
        (&[2, 0], &[6, 4]),
        (&[1, 1], &[3, 7]),
        (&[2, 0], &[0, 10]),
    ]);
    assert_eq!(got, want);
}

#[test]
fn d4_twisted_basic_and_vector_match_golden_table() {
    let d = AffineDatum::parse("D4", &[0, 1, 0, 0], 2).unwrap();
    assert_eq!(d.ideal_names(), ["A1", "C2"]);
    let b = decompose_basic_vector(&d, 0).unwrap();
    let v = decompose_basic_vector(&d, 1).unwrap();
    let want = table(&[
        (&[10, 0], &[3, 0, 0]),
        (&[8, 2], &[2, 0, 1]),
        (&[6, 4], &[1, 2, 0]),
        (&[4, 6], &[1, 2, 0]),
        (&[2, 8], &[2, 0, 1]),
        (&[0, 10], &[3, 0, 0]),
        (&[10, 0], &[0, 0, 3]),
        (&[8, 2], &[1, 0, 2]),
        (&[6, 4], &[0, 2, 1]),
        (&[4, 6], &[0, 2, 1]),
        (&[2, 8], &[1, 0, 2]),
        (&[0, 10], &[0, 0, 3]),
    ]);
    assert_eq!(multiset([&b, &v]), want);
    assert_eq!(b.components.len(), 6);
    assert_eq!(v.components.len(), 6);
}

#[test]
fn d4_twisted_spin_matches_golden_table() {
    let d = AffineDatum::parse("D4", &[0, 1, 0, 0], 2).unwrap();
    let got = multiset(&decompose_spin(&d).unwrap());
    let want = table(&[
        (&[5, 5], &[2, 1, 0]),
        (&[3, 7], &[1, 1, 1]),
        (&[7, 3], &[1, 1, 1]),
        (&[5, 5], &[0, 1, 2]),
        (&[1, 9], &[0, 3, 0]),
        (&[9, 1], &[0, 3, 0]),
    ]);
    assert_eq!(got, want);
}

#[test]
fn vacuum_is_the_top_basic_component() {
    for (alg, s, k) in [("G2", vec![0, 1, 0], 1), ("D4", vec![0, 1, 0, 0], 2), ("B3", vec![0, 0, 1, 0], 1)] {
        let d = AffineDatum::parse(alg, &s, k).unwrap();
        let b = decompose_basic_vector(&d, 0).unwrap();
        let top = &b.components[0];
        assert_eq!(top.delta, Q::from_integer(0));
        assert_eq!(top.weight, d.k_structure.lambda0k);
    }
}

/// Outer involution of D_{l+1}: every module stays irreducible for B_l^(1).
#[test]
fn outer_involution_of_even_orthogonal_restricts_irreducibly() {
    let cases = [
        (AffineDatum::parse("A3", &[1, 0, 0], 2).unwrap(), "C2"),
        (AffineDatum::parse("D4", &[1, 0, 0, 0], 2).unwrap(), "B3"),
    ];
    for (d, ideal) in cases {
        assert_eq!(d.ideal_names(), [ideal]);
        let b = decompose_basic_vector(&d, 0).unwrap();
        let v = decompose_basic_vector(&d, 1).unwrap();
        let s = decompose_spin(&d).unwrap();
        assert_eq!(b.components.len(), 1);
        assert_eq!(v.components.len(), 1);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].components.len(), 1);
        assert_eq!(s[0].global_multiplier, 1);
        let level = d.k_structure.simple_ideals[0].n_s;
        for dec in [&b, &v, &s[0]] {
            assert_eq!(dec.components[0].weight.lev[0], level);
        }
        let names = [&b, &v, &s[0]].map(|dec| dec.components[0].ideal_coeffs[0].clone());
        let mut sorted = names.to_vec();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 3, "basic, vector and spin land on distinct weights");
    }
}

#[test]
fn complex_case_counts_are_powers_of_two() {
    for t in ["A1", "A2", "A3", "B2", "C2", "G2"] {
        let st: Simple = t.parse().unwrap();
        let d = AffineDatum::complex(st).unwrap();
        let b = decompose_basic_vector(&d, 0).unwrap();
        let v = decompose_basic_vector(&d, 1).unwrap();
        assert_eq!(b.components.len() + v.components.len(), 1 << st.rank(), "{t}");
        // Spin: copies of L(Λ₀ + ρ_n) totalling 2^⌊(N−n)/2⌋.
        let s = decompose_spin(&d).unwrap();
        assert_eq!(s.len(), if d.dim_p().is_multiple_of(2) { 2 } else { 1 }, "{t}");
        assert!(s.iter().all(|x| x.components.len() == 1));
        let copies: u64 = s.iter().map(|x| x.global_multiplier).sum();
        assert_eq!(copies, 1 << ((d.big_n - d.n) / 2), "{t}");
    }
}

#[test]
fn outer_counts_are_powers_of_two() {
    for (alg, s) in [("A3", vec![1, 0, 0]), ("D4", vec![1, 0, 0, 0])] {
        let d = AffineDatum::parse(alg, &s, 2).unwrap();
        let reps = weylcomb::reps_even(&d, weylcomb::DEFAULT_CAP).unwrap();
        assert_eq!(reps.len(), 1 << (d.big_n - d.n), "{alg}");
    }
}

#[test]
fn type_c_lattice_paths_agree_with_coset_route() {
    for m in 1..=3 {
        for n in 1..=3 {
            let paths = branching::typec_lattice_paths(m, n).unwrap();
            let d = branching::typec_datum(m, n).unwrap();
            let expected = binomial((n + m) as u64, n as u64);
            let b = decompose_basic_vector(&d, 0).unwrap();
            let v = decompose_basic_vector(&d, 1).unwrap();
            let spin = decompose_spin(&d).unwrap();
            assert_eq!(multiset([&paths.basic_vector[0]]), multiset([&b]), "basic m={m} n={n}");
            assert_eq!(multiset([&paths.basic_vector[1]]), multiset([&v]), "vector m={m} n={n}");
            assert_eq!(multiset(&paths.spin), multiset(&spin), "spin m={m} n={n}");
            let total: usize = paths.basic_vector.iter().map(|x| x.components.len()).sum();
            assert_eq!(total as u64, expected);
            let total: usize = paths.spin.iter().map(|x| x.components.len()).sum();
            assert_eq!(total as u64, expected);
        }
    }
}

#[test]
fn weak_compositions_are_counted_by_binomials() {
    for n in 0..6 {
        for parts in 1..5 {
            let w = branching::weak_compositions(n, parts);
            assert_eq!(w.len() as u64, binomial(n as u64 + parts as u64 - 1, parts as u64 - 1));
            assert!(w.iter().all(|c| c.iter().sum::<i64>() == n && c.len() == parts));
        }
    }
}

/// Closed form for the Hermitian eigenspaces, with the sign of the
/// translation index in the δ term as it comes out of t_{kω}·w′.
fn hermitian_closed_form(d: &AffineDatum, rep: Rep, q: i64, subspace: &[Vec<Q>], k: i64) -> affbranch_core::Weight {
    let i = d.hermitian_node.unwrap();
    let dim_p = qi(d.dim_p() as i64);
    let k = qi(k);
    let mut fin = linalg::zeros(d.n);
    for x in subspace {
        linalg::axpy(&mut fin, qi(1), x);
    }
    let size = qi(subspace.len() as i64);
    let plus = (size + fin[i - 1]) / 2;
    let minus = (size - fin[i - 1]) / 2;
    linalg::axpy(&mut fin, k * qi(d.h_dual), &weylcomb::fundamental_coweight(d, i));
    let mut w = d.k_structure.lambda0k.clone();
    let eps = qi(q.rem_euclid(2));
    let c = match rep {
        Rep::Spin => {
            linalg::axpy(&mut fin, qi(1), &d.k_structure.rho_n);
            -(k + 1) * plus + k * minus - (k * k + k) * dim_p / 4
        }
        _ => -size / 2 + k * (minus - plus) - k * k * dim_p / 4 + eps / 2,
    };
    w.fin = linalg::add(&w.fin, &fin);
    w.del += c;
    w
}

#[test]
fn hermitian_eigenspaces_follow_the_closed_form() {
    for (alg, s) in [
        ("A2", vec![1, 1, 0]),
        ("A3", vec![1, 1, 0, 0]),
        ("A3", vec![1, 0, 1, 0]),
        ("B3", vec![1, 1, 0, 0]),
        ("C3", vec![1, 0, 0, 1]),
    ] {
        let d = AffineDatum::parse(alg, &s, 1).unwrap();
        let sigma = weylcomb::hermitian_fundamental_subspaces(&d).unwrap();
        for rep in [Rep::Basic, Rep::Vector, Rep::Spin] {
            for q in -4..=4 {
                let dec = decompose_hermitian(&d, rep, q).unwrap();
                if rep.epsilon().is_some_and(|e| e as i64 != q.rem_euclid(2)) {
                    assert!(dec.components.is_empty());
                    continue;
                }
                // One component per A ∈ Σ′ whose charge lands on q.
                let dim_p = d.dim_p() as i64;
                let hits = sigma
                    .iter()
                    .filter(|(a, _, _)| {
                        let x: Q = a.weights.iter().map(|w| w[d.hermitian_node.unwrap() - 1]).sum();
                        (qi(2) * (qi(q) - x) / qi(dim_p)).is_integer()
                    })
                    .count();
                assert_eq!(dec.components.len(), hits, "{alg} {rep} q={q}");
                for c in &dec.components {
                    let Label::HermitianPair { subspace, k } = &c.label else {
                        panic!("unexpected label")
                    };
                    let x: Q = subspace.iter().map(|w| w[d.hermitian_node.unwrap() - 1]).sum();
                    assert_eq!(qi(*k), qi(2) * (qi(q) - x) / qi(dim_p), "translation index");
                    assert_eq!(c.weight, hermitian_closed_form(&d, rep, q, subspace, *k), "{alg} {rep} q={q}");
                }
            }
        }
    }
}

#[test]
fn hermitian_vacuum_sits_at_charge_zero() {
    for (alg, s) in [("A2", vec![1, 1, 0]), ("A3", vec![1, 0, 1, 0]), ("C2", vec![1, 0, 1])] {
        let d = AffineDatum::parse(alg, &s, 1).unwrap();
        let dec = decompose_hermitian(&d, Rep::Basic, 0).unwrap();
        assert_eq!(dec.components[0].weight, d.k_structure.lambda0k);
    }
}

#[test]
fn hermitian_parity_rule() {
    let d = AffineDatum::parse("A3", &[1, 1, 0, 0], 1).unwrap();
    for q in -3..=3i64 {
        let b = decompose_hermitian(&d, Rep::Basic, q).unwrap();
        let v = decompose_hermitian(&d, Rep::Vector, q).unwrap();
        assert_eq!(b.components.is_empty(), q % 2 != 0);
        assert_eq!(v.components.is_empty(), q % 2 == 0);
    }
}

#[test]
fn hermitian_routes_agree_within_a_window() {
    let depth = qi(2);
    for (alg, s) in [("A2", vec![1, 1, 0]), ("B2", vec![1, 1, 0])] {
        let d = AffineDatum::parse(alg, &s, 1).unwrap();
        let i = d.hermitian_node.unwrap();
        for rep in [Rep::Basic, Rep::Vector, Rep::Spin] {
            let generic = branching::hermitian_generic(&d, rep, depth).unwrap();
            let offset = if rep == Rep::Spin { branching::hermitian_spin_offset(&d) } else { qi(0) };
            let mut from_generic: Vec<_> = generic.iter().map(|(_, c)| (c.weight.fin[i - 1] - offset, c.weight.clone())).collect();
            let mut from_formula = Vec::new();
            for q in -6..=6 {
                for c in decompose_hermitian(&d, rep, q).unwrap().components {
                    if -c.delta <= depth {
                        from_formula.push((qi(q), c.weight));
                    }
                }
            }
            from_generic.retain(|(q, _)| *q <= qi(6) && *q >= qi(-6));
            from_generic.sort();
            from_formula.sort();
            assert_eq!(from_generic, from_formula, "{alg} {rep}");
        }
    }
}

#[test]
fn spin_multipliers_follow_rank_difference() {
    // Unequal rank, dim p odd: one module with 2^⌊(N−n)/2⌋ copies.
    let d = AffineDatum::parse("D4", &[1, 0, 0, 0], 2).unwrap();
    let s = decompose_spin(&d).unwrap();
    assert_eq!(d.dim_p() % 2, 1);
    assert_eq!(s.len(), 1);
    assert_eq!(s[0].global_multiplier, 1 << ((d.big_n - d.n) / 2));
    // Equal rank: the two halves are distinguished by parity.
    let d = AffineDatum::parse("G2", &[0, 1, 0], 1).unwrap();
    let s = decompose_spin(&d).unwrap();
    assert_eq!(s.len(), 2);
    assert!(s.iter().all(|x| x.global_multiplier == 1));
}

#[test]
fn decomposition_round_trips_through_json() {
    let d = AffineDatum::parse("D4", &[0, 1, 0, 0], 2).unwrap();
    for dec in [decompose_basic_vector(&d, 0).unwrap(), decompose_spin(&d).unwrap().remove(0)] {
        let s = serde_json::to_string(&dec).unwrap();
        let back: Decomposition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, dec);
    }
    let d = AffineDatum::parse("A2", &[1, 1, 0], 1).unwrap();
    let dec = decompose_hermitian(&d, Rep::Spin, 1).unwrap();
    let back: Decomposition = serde_json::from_str(&serde_json::to_string(&dec).unwrap()).unwrap();
    assert_eq!(back, dec);
}

#[test]
fn semisimple_entry_points_reject_a_center() {
    let d = AffineDatum::parse("A2", &[1, 1, 0], 1).unwrap();
    assert!(decompose_basic_vector(&d, 0).is_err());
    assert!(decompose_spin(&d).is_err());
    let d = AffineDatum::parse("G2", &[0, 1, 0], 1).unwrap();
    assert!(decompose_hermitian(&d, Rep::Basic, 0).is_err());
}
