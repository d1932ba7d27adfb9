//! Affine root systems realized on an exact chart.
//!
//! A chart stores a weight as (finite part on a fixed basis of h₀*, one value
//! per central element, δ coefficient). Simple roots carry level zero.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{self, bilinear, qi, Q};

/// A weight on an affine chart.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    /// Finite part in the chart basis of h₀*.
    pub fin: Vec<Q>,
    /// Values on the central elements, one per level slot.
    pub lev: Vec<Q>,
    /// Coefficient of the null root.
    pub del: Q,
}

impl Weight {
    /// The zero weight.
    pub fn zero(n: usize, slots: usize) -> Self {
        Weight {
            fin: linalg::zeros(n),
            lev: linalg::zeros(slots),
            del: Q::zero(),
        }
    }

    /// Level-zero weight from a finite part and a δ coefficient.
    pub fn root(fin: Vec<Q>, del: Q, slots: usize) -> Self {
        Weight {
            fin,
            lev: linalg::zeros(slots),
            del,
        }
    }

    /// `self + other`.
    pub fn add(&self, o: &Weight) -> Weight {
        Weight {
            fin: linalg::add(&self.fin, &o.fin),
            lev: linalg::add(&self.lev, &o.lev),
            del: self.del + o.del,
        }
    }

    /// `self - other`.
    pub fn sub(&self, o: &Weight) -> Weight {
        Weight {
            fin: linalg::sub(&self.fin, &o.fin),
            lev: linalg::sub(&self.lev, &o.lev),
            del: self.del - o.del,
        }
    }

    /// `c * self`.
    pub fn scale(&self, c: Q) -> Weight {
        Weight {
            fin: linalg::scale(c, &self.fin),
            lev: linalg::scale(c, &self.lev),
            del: c * self.del,
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: Q, o: &Weight) {
        linalg::axpy(&mut self.fin, c, &o.fin);
        linalg::axpy(&mut self.lev, c, &o.lev);
        self.del += c * o.del;
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[Q]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "[{}; {}; {}]", j(&self.fin), j(&self.lev), self.del)
    }
}

/// A simple root: finite part, δ coefficient and the level slot its
/// coroot pairs with.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleRoot {
    pub fin: Vec<Q>,
    pub del: Q,
    pub slot: usize,
}

/// An affine (possibly decomposable) root system realized on a chart.
///
/// For a real root β = β̄ + mδ in slot s the coroot pairing is
/// `⟨λ,β∨⟩ = 2((λ̄,β̄) + τ_s·m·λ_s)/(β̄,β̄)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RootSystem {
    /// Gram matrix of the finite chart basis.
    pub gram: Vec<Vec<Q>>,
    /// Per-slot factor converting δ-pairings into the finite normalization.
    pub tau: Vec<Q>,
    /// Simple roots.
    pub simple: Vec<SimpleRoot>,
    /// Generalized Cartan matrix `a_ij = ⟨α_j, α_i∨⟩`.
    pub cartan: Vec<Vec<i64>>,
}

impl RootSystem {
    /// Builds the system and derives its Cartan matrix.
    pub fn new(gram: Vec<Vec<Q>>, tau: Vec<Q>, simple: Vec<SimpleRoot>) -> Self {
        let r = simple.len();
        let mut cartan = vec![vec![0i64; r]; r];
        for i in 0..r {
            let li = bilinear(&gram, &simple[i].fin, &simple[i].fin);
            for j in 0..r {
                let v = qi(2) * bilinear(&gram, &simple[j].fin, &simple[i].fin) / li;
                assert!(v.is_integer(), "non-integral Cartan entry");
                cartan[i][j] = v.to_integer();
            }
        }
        RootSystem {
            gram,
            tau,
            simple,
            cartan,
        }
    }

    /// Number of simple roots.
    pub fn size(&self) -> usize {
        self.simple.len()
    }

    /// Dimension of the finite chart.
    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    /// Number of level slots.
    pub fn slots(&self) -> usize {
        self.tau.len()
    }

    /// Finite form.
    pub fn form(&self, a: &[Q], b: &[Q]) -> Q {
        bilinear(&self.gram, a, b)
    }

    /// Chart image `(finite, δ)` of a root given by simple-root coordinates.
    pub fn chart(&self, m: &[i64]) -> (Vec<Q>, Q) {
        let mut fin = linalg::zeros(self.dim());
        let mut del = Q::zero();
        for (c, s) in m.iter().zip(&self.simple) {
            if *c != 0 {
                linalg::axpy(&mut fin, qi(*c), &s.fin);
                del += qi(*c) * s.del;
            }
        }
        (fin, del)
    }

    /// Chart image as a level-zero weight.
    pub fn root_weight(&self, m: &[i64]) -> Weight {
        let (fin, del) = self.chart(m);
        Weight::root(fin, del, self.slots())
    }

    /// Level slot of a real root, read off its support.
    pub fn slot_of(&self, m: &[i64]) -> usize {
        let j = m.iter().position(|c| *c != 0).expect("zero root");
        self.simple[j].slot
    }

    /// Invariant form on the full chart: the finite form plus the
    /// level/null-root pairing.
    pub fn full_form(&self, a: &Weight, b: &Weight) -> Q {
        let mut v = self.form(&a.fin, &b.fin);
        for (s, t) in self.tau.iter().enumerate() {
            v += *t * (a.lev[s] * b.del + b.lev[s] * a.del);
        }
        v
    }

    /// `⟨λ, β∨⟩` for the real root `β = fin + del·δ` in `slot`.
    pub fn coroot_pair(&self, lam: &Weight, fin: &[Q], del: Q, slot: usize) -> Q {
        let len = self.form(fin, fin);
        qi(2) * (self.form(&lam.fin, fin) + self.tau[slot] * del * lam.lev[slot]) / len
    }

    /// `⟨λ, α_i∨⟩`.
    pub fn simple_pair(&self, lam: &Weight, i: usize) -> Q {
        let s = &self.simple[i];
        self.coroot_pair(lam, &s.fin, s.del, s.slot)
    }

    /// `s_i(λ)`.
    pub fn reflect(&self, i: usize, lam: &Weight) -> Weight {
        let c = self.simple_pair(lam, i);
        let mut out = lam.clone();
        if !c.is_zero() {
            let s = &self.simple[i];
            linalg::axpy(&mut out.fin, -c, &s.fin);
            out.del -= c * s.del;
        }
        out
    }

    /// `s_i` on simple-root coordinates.
    pub fn reflect_coords(&self, i: usize, m: &[i64]) -> Vec<i64> {
        let c: i64 = m.iter().zip(&self.cartan[i]).map(|(a, b)| a * b).sum();
        let mut out = m.to_vec();
        out[i] -= c;
        out
    }

    /// Positive real roots with δ-coefficient at most `max_del`, as
    /// simple-root coordinates, generated upward from the simple roots.
    pub fn positive_real_roots(&self, max_del: Q) -> Vec<Vec<i64>> {
        let r = self.size();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        for i in 0..r {
            let mut e = vec![0i64; r];
            e[i] = 1;
            if self.simple[i].del <= max_del {
                seen.insert(e.clone());
                queue.push_back(e);
            }
        }
        while let Some(b) = queue.pop_front() {
            for i in 0..r {
                let c: i64 = b.iter().zip(&self.cartan[i]).map(|(x, y)| x * y).sum();
                if c < 0 {
                    let nb = self.reflect_coords(i, &b);
                    if self.chart(&nb).1 <= max_del && seen.insert(nb.clone()) {
                        queue.push_back(nb);
                    }
                }
            }
        }
        let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
        out.sort_by(|a, b| {
            let (fa, da) = self.chart(a);
            let (fb, db) = self.chart(b);
            (da, fa).cmp(&(db, fb))
        });
        out
    }

    /// Weyl vector solving `⟨ρ, α_i∨⟩ = 1` with zero δ coefficient, for a
    /// system with a single level slot.
    pub fn rho(&self) -> Weight {
        assert_eq!(self.slots(), 1, "rho() needs a single level slot");
        let n = self.dim();
        let rows: Vec<Vec<Q>> = self
            .simple
            .iter()
            .map(|s| {
                let len = self.form(&s.fin, &s.fin);
                let mut row: Vec<Q> = linalg::mat_vec(&self.gram, &s.fin)
                    .into_iter()
                    .map(|x| qi(2) * x / len)
                    .collect();
                row.push(qi(2) * self.tau[0] * s.del / len);
                row
            })
            .collect();
        assert_eq!(rows.len(), n + 1, "affine system must have rank+1 simple roots");
        let x = linalg::solve(&rows, &vec![Q::one(); n + 1]).expect("singular Weyl vector system");
        Weight {
            fin: x[..n].to_vec(),
            lev: vec![x[n]],
            del: Q::zero(),
        }
    }

    /// True when a root (in coordinates) is positive.
    pub fn is_positive(m: &[i64]) -> bool {
        m.iter().all(|c| *c >= 0) && m.iter().any(|c| *c > 0)
    }

    /// Finite root system generated by a subset of simple roots, as the set
    /// of finite parts of the level-zero positive roots in its span.
    pub fn finite_positive(&self, nodes: &[usize]) -> Vec<Vec<i64>> {
        let r = self.size();
        let node_set: BTreeSet<usize> = nodes.iter().copied().collect();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        for &i in nodes {
            let mut e = vec![0i64; r];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(b) = queue.pop_front() {
            for &i in &node_set {
                let c: i64 = b.iter().zip(&self.cartan[i]).map(|(x, y)| x * y).sum();
                if c < 0 {
                    let nb = self.reflect_coords(i, &b);
                    if seen.insert(nb.clone()) {
                        queue.push_back(nb);
                    }
                }
            }
        }
        let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
        out.sort_by_key(|m| (m.iter().sum::<i64>(), m.clone()));
        out
    }
}
