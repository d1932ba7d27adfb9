//! Static Dynkin data: affine Cartan matrices in Kac's labeling and the
//! finite types used to name simple ideals.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple finite type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Simple {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl Simple {
    /// Rank of the type.
    pub fn rank(self) -> usize {
        match self {
            Simple::A(n) | Simple::B(n) | Simple::C(n) | Simple::D(n) | Simple::E(n) => n,
            Simple::F4 => 4,
            Simple::G2 => 2,
        }
    }

    /// Canonical representative under the low-rank coincidences
    /// B₁ = C₁ = A₁ and D₃ = A₃.
    pub fn normalize(self) -> Result<Simple> {
        let s = match self {
            Simple::B(1) | Simple::C(1) => Simple::A(1),
            Simple::D(3) => Simple::A(3),
            other => other,
        };
        let ok = match s {
            Simple::A(n) => n >= 1,
            Simple::B(n) => n >= 2,
            Simple::C(n) => n >= 2,
            Simple::D(n) => n >= 4,
            Simple::E(n) => (6..=8).contains(&n),
            _ => true,
        };
        if ok {
            Ok(s)
        } else {
            Err(Error::UnsupportedType(format!("{self}")))
        }
    }
}

impl fmt::Display for Simple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Simple::A(n) => write!(f, "A{n}"),
            Simple::B(n) => write!(f, "B{n}"),
            Simple::C(n) => write!(f, "C{n}"),
            Simple::D(n) => write!(f, "D{n}"),
            Simple::E(n) => write!(f, "E{n}"),
            Simple::F4 => write!(f, "F4"),
            Simple::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for Simple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unknown simple type '{s}'"));
        let (head, tail) = s.split_at(1.min(s.len()));
        let n: usize = tail.parse().map_err(|_| bad())?;
        match (head.to_ascii_uppercase().as_str(), n) {
            ("A", n) => Ok(Simple::A(n)),
            ("B", n) => Ok(Simple::B(n)),
            ("C", n) => Ok(Simple::C(n)),
            ("D", n) => Ok(Simple::D(n)),
            ("E", n) => Ok(Simple::E(n)),
            ("F", 4) => Ok(Simple::F4),
            ("G", 2) => Ok(Simple::G2),
            _ => Err(bad()),
        }
    }
}

/// The Lie algebra g: simple, or k ⊕ k with the switch involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LieType {
    Simple(Simple),
    Complex(Simple),
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieType::Simple(s) => write!(f, "{s}"),
            LieType::Complex(s) => write!(f, "complex:{s}"),
        }
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if let Some(rest) = lower.strip_prefix("complex:") {
            Ok(LieType::Complex(rest.parse()?))
        } else {
            Ok(LieType::Simple(s.parse()?))
        }
    }
}

/// Diagram given by relative squared root lengths and an edge list.
/// The bond form is `(αᵢ,αⱼ) = −max(Lᵢ,Lⱼ)/2` on each edge.
fn from_diagram(lengths: &[i64], edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let n = lengths.len();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in edges {
        // (αᵢ,αⱼ) = −m/2 with m = max length, so aᵢⱼ = −m/Lᵢ.
        let m = lengths[i].max(lengths[j]);
        a[i][j] = -m / lengths[i];
        a[j][i] = -m / lengths[j];
    }
    a
}

fn chain(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

/// Affine Cartan matrix of the untwisted diagram X^(1) in Kac's labeling.
pub fn untwisted_cartan(t: Simple) -> Vec<Vec<i64>> {
    match t {
        Simple::A(1) => vec![vec![2, -2], vec![-2, 2]],
        Simple::A(l) => {
            let mut e = chain(l + 1);
            e.push((l, 0));
            from_diagram(&vec![2; l + 1], &e)
        }
        Simple::B(l) => {
            let mut e = vec![(0, 2), (1, 2)];
            e.extend((2..l).map(|i| (i, i + 1)));
            let mut len = vec![4; l + 1];
            len[l] = 2;
            from_diagram(&len, &e)
        }
        Simple::C(l) => {
            let mut len = vec![2; l + 1];
            len[0] = 4;
            len[l] = 4;
            from_diagram(&len, &chain(l + 1))
        }
        Simple::D(l) => {
            let mut e = vec![(0, 2), (1, 2)];
            e.extend((2..l - 2).map(|i| (i, i + 1)));
            e.push((l - 2, l - 1));
            e.push((l - 2, l));
            from_diagram(&vec![2; l + 1], &e)
        }
        Simple::E(6) => from_diagram(&[2; 7], &[(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 0)]),
        Simple::E(7) => {
            let mut e = chain(7);
            e.push((3, 7));
            from_diagram(&[2; 8], &e)
        }
        Simple::E(_) => {
            let mut e: Vec<(usize, usize)> = (1..7).map(|i| (i, i + 1)).collect();
            e.push((7, 0));
            e.push((3, 8));
            from_diagram(&[2; 9], &e)
        }
        Simple::F4 => from_diagram(&[4, 4, 4, 2, 2], &chain(5)),
        Simple::G2 => from_diagram(&[6, 6, 2], &chain(3)),
    }
}

/// Twisted affine types of order two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twisted {
    /// A_{2l}^(2), l ≥ 1.
    A2l(usize),
    /// A_{2l−1}^(2), l ≥ 3.
    A2lm1(usize),
    /// D_{l+1}^(2), l ≥ 2.
    Dl1(usize),
    /// E_6^(2).
    E6,
}

impl fmt::Display for Twisted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Twisted::A2l(l) => write!(f, "A{}^(2)", 2 * l),
            Twisted::A2lm1(l) => write!(f, "A{}^(2)", 2 * l - 1),
            Twisted::Dl1(l) => write!(f, "D{}^(2)", l + 1),
            Twisted::E6 => write!(f, "E6^(2)"),
        }
    }
}

/// Twisted diagram attached to the outer involution of `t`, if any.
pub fn twisted_of(t: Simple) -> Option<Twisted> {
    match t {
        Simple::A(n) if n >= 2 && n % 2 == 0 => Some(Twisted::A2l(n / 2)),
        Simple::A(3) => Some(Twisted::Dl1(2)),
        Simple::A(n) if n >= 5 => Some(Twisted::A2lm1(n.div_ceil(2))),
        Simple::D(n) if n >= 4 => Some(Twisted::Dl1(n - 1)),
        Simple::E(6) => Some(Twisted::E6),
        _ => None,
    }
}

/// Affine Cartan matrix of a twisted diagram in Kac's labeling.
pub fn twisted_cartan(t: Twisted) -> Vec<Vec<i64>> {
    match t {
        Twisted::A2l(1) => vec![vec![2, -4], vec![-1, 2]],
        Twisted::A2l(l) => {
            let mut len = vec![2; l + 1];
            len[0] = 1;
            len[l] = 4;
            from_diagram(&len, &chain(l + 1))
        }
        Twisted::A2lm1(l) => {
            let mut e = vec![(0, 2), (1, 2)];
            e.extend((2..l).map(|i| (i, i + 1)));
            let mut len = vec![2; l + 1];
            len[l] = 4;
            from_diagram(&len, &e)
        }
        Twisted::Dl1(l) => {
            let mut len = vec![4; l + 1];
            len[0] = 2;
            len[l] = 2;
            from_diagram(&len, &chain(l + 1))
        }
        Twisted::E6 => from_diagram(&[2, 2, 2, 4, 4], &chain(5)),
    }
}

/// Finite Cartan matrix in Kac's labeling (labels 1..=rank stored at 0..rank).
pub fn finite_cartan(t: Simple) -> Vec<Vec<i64>> {
    match t {
        Simple::A(n) => from_diagram(&vec![2; n], &chain(n)),
        Simple::B(n) => {
            let mut len = vec![4; n];
            len[n - 1] = 2;
            from_diagram(&len, &chain(n))
        }
        Simple::C(n) => {
            let mut len = vec![2; n];
            len[n - 1] = 4;
            from_diagram(&len, &chain(n))
        }
        Simple::D(n) => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            from_diagram(&vec![2; n], &e)
        }
        Simple::E(n) => {
            let mut e = chain(n - 1);
            e.push((2, n - 1));
            from_diagram(&vec![2; n], &e)
        }
        Simple::F4 => from_diagram(&[4, 4, 2, 2], &chain(4)),
        Simple::G2 => from_diagram(&[6, 2], &chain(2)),
    }
}

/// Candidate names for an ideal of the given rank, in preference order.
/// The rank-two double bond is named C₂ and rank three chains A₃.
pub fn finite_candidates(rank: usize) -> Vec<Simple> {
    let mut v = vec![Simple::A(rank)];
    if rank == 2 {
        v.push(Simple::C(2));
        v.push(Simple::G2);
    }
    if rank >= 3 {
        v.push(Simple::B(rank));
        v.push(Simple::C(rank));
    }
    if rank >= 4 {
        v.push(Simple::D(rank));
    }
    if rank == 4 {
        v.push(Simple::F4);
    }
    if (6..=8).contains(&rank) {
        v.push(Simple::E(rank));
    }
    v
}

/// Finds the lexicographically least assignment `perm[label] = node` with
/// `target[perm[i]][perm[j]] == cartan(t)[i][j]`.
pub fn match_labeling(target: &[Vec<i64>], t: Simple) -> Option<Vec<usize>> {
    let c = finite_cartan(t);
    let n = c.len();
    if target.len() != n {
        return None;
    }
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        c: &[Vec<i64>],
        target: &[Vec<i64>],
        perm: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = perm.len();
        if i == c.len() {
            return true;
        }
        for node in 0..c.len() {
            if used[node] {
                continue;
            }
            let ok = (0..i).all(|j| {
                target[node][perm[j]] == c[i][j] && target[perm[j]][node] == c[j][i]
            });
            if ok {
                perm.push(node);
                used[node] = true;
                if rec(c, target, perm, used) {
                    return true;
                }
                perm.pop();
                used[node] = false;
            }
        }
        false
    }
    rec(&c, target, &mut perm, &mut used).then_some(perm)
}
