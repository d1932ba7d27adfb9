//! Fixtures shared by the benchmarks.

use affbranch_core::{AffineDatum, Simple};

/// Data used across benches, by short name.
pub fn fixtures() -> Vec<(&'static str, AffineDatum)> {
    let parse = |alg: &str, s: &[i64], k| AffineDatum::parse(alg, s, k).expect("fixture builds");
    vec![
        ("g2", parse("G2", &[0, 1, 0], 1)),
        ("d4_twisted", parse("D4", &[0, 1, 0, 0], 2)),
        ("f4", parse("F4", &[0, 1, 0, 0, 0], 1)),
        ("e6", parse("E6", &[0, 0, 1, 0, 0, 0, 0], 1)),
        ("complex_b3", AffineDatum::complex(Simple::B(3)).expect("fixture builds")),
    ]
}
