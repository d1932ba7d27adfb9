//! Affine Weyl group elements with inversion-set bookkeeping, bounded
//! enumeration of minimal coset representatives, σ-minuscule elements,
//! abelian subspaces, the extra element w_σ and extended translations.

use std::collections::{BTreeSet, HashSet};

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, qi, qr, Q};
use crate::rootdata::AffineDatum;
use crate::system::{RootSystem, Weight};

/// Default enumeration cap.
pub const DEFAULT_CAP: usize = 4_000_000;

/// A Weyl group element: reduced word, images of the simple roots and the
/// inversion set N(w), all in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylElement {
    /// Reduced word `s_{i1}⋯s_{ik}`.
    pub word: Vec<usize>,
    /// N(w), sorted.
    pub inversions: Vec<Vec<i64>>,
    /// `w(α_j)` for each simple root.
    images: Vec<Vec<i64>>,
}

impl WeylElement {
    /// The identity of a system with `r` simple roots.
    pub fn identity(r: usize) -> Self {
        WeylElement {
            word: vec![],
            inversions: vec![],
            images: (0..r)
                .map(|j| {
                    let mut e = vec![0; r];
                    e[j] = 1;
                    e
                })
                .collect(),
        }
    }

    /// Builds an element from any word (not necessarily reduced); the stored
    /// word is the reduced subword history.
    pub fn from_word(sys: &RootSystem, word: &[usize]) -> Self {
        let mut w = WeylElement::identity(sys.size());
        for &i in word {
            w = w.times(sys, i);
        }
        w
    }

    /// Length ℓ(w).
    pub fn len(&self) -> usize {
        self.inversions.len()
    }

    /// True for the identity.
    pub fn is_empty(&self) -> bool {
        self.inversions.is_empty()
    }

    /// `w(α_j)` in coordinates.
    pub fn image(&self, j: usize) -> &[i64] {
        &self.images[j]
    }

    /// `w · s_i`.
    pub fn times(&self, sys: &RootSystem, i: usize) -> Self {
        let wi = self.images[i].clone();
        let images: Vec<Vec<i64>> = (0..sys.size())
            .map(|j| {
                let a = sys.cartan[i][j];
                self.images[j].iter().zip(&wi).map(|(x, y)| x - a * y).collect()
            })
            .collect();
        let mut inv = self.inversions.clone();
        let mut word = self.word.clone();
        if RootSystem::is_positive(&wi) {
            let pos = inv.binary_search(&wi).unwrap_err();
            inv.insert(pos, wi);
            word.push(i);
        } else {
            let neg: Vec<i64> = wi.iter().map(|x| -x).collect();
            let pos = inv.binary_search(&neg).expect("inversion bookkeeping");
            inv.remove(pos);
            // Drop the matching letter by recomputing a reduced word lazily.
            word = reduced_word_from(sys, &images);
        }
        WeylElement {
            word,
            inversions: inv,
            images,
        }
    }

    /// `w(β)` for a root in coordinates.
    pub fn apply_root(&self, m: &[i64]) -> Vec<i64> {
        let r = m.len();
        let mut out = vec![0i64; r];
        for (j, c) in m.iter().enumerate() {
            if *c != 0 {
                for (o, x) in out.iter_mut().zip(&self.images[j]) {
                    *o += c * x;
                }
            }
        }
        out
    }

    /// `w(λ)` on the chart of `sys`.
    pub fn apply(&self, sys: &RootSystem, lam: &Weight) -> Result<Weight> {
        if lam.fin.len() != sys.dim() || lam.lev.len() != sys.slots() {
            return Err(Error::ChartMismatch);
        }
        let mut out = lam.clone();
        for &i in self.word.iter().rev() {
            out = sys.reflect(i, &out);
        }
        Ok(out)
    }

    /// `⟨N(w)⟩`, the sum of the inversions, as a chart weight.
    pub fn inversion_sum(&self, sys: &RootSystem) -> Weight {
        let mut s = Weight::zero(sys.dim(), sys.slots());
        for m in &self.inversions {
            s = s.add(&sys.root_weight(m));
        }
        s
    }

    /// Inverse element.
    pub fn inverse(&self, sys: &RootSystem) -> Self {
        let w: Vec<usize> = self.word.iter().rev().copied().collect();
        WeylElement::from_word(sys, &w)
    }

    /// Product `self · other`.
    pub fn compose(&self, sys: &RootSystem, other: &WeylElement) -> Self {
        let mut w = self.clone();
        for &i in &other.word {
            w = w.times(sys, i);
        }
        w
    }
}

/// Recovers a reduced word from the images of the simple roots by peeling
/// right descents.
fn reduced_word_from(sys: &RootSystem, images: &[Vec<i64>]) -> Vec<usize> {
    let r = sys.size();
    let mut imgs = images.to_vec();
    let mut word = Vec::new();
    while let Some(i) = (0..r).find(|&i| !RootSystem::is_positive(&imgs[i])) {
        let wi = imgs[i].clone();
        imgs = (0..r)
            .map(|j| {
                let a = sys.cartan[i][j];
                imgs[j].iter().zip(&wi).map(|(x, y)| x - a * y).collect()
            })
            .collect();
        word.push(i);
    }
    word.reverse();
    word
}

/// Breadth-first enumeration over the right weak order of
/// `{w : N(w) ⊆ allowed}`, optionally pruned, sorted by (length, word).
pub fn enumerate_with<A, P>(
    sys: &RootSystem,
    allowed: A,
    prune: P,
    cap: usize,
) -> Result<Vec<WeylElement>>
where
    A: Fn(&[i64]) -> bool + Sync,
    P: Fn(&WeylElement) -> bool + Sync,
{
    let r = sys.size();
    let mut out = vec![WeylElement::identity(r)];
    let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::new();
    seen.insert(vec![]);
    let mut frontier = out.clone();
    while !frontier.is_empty() {
        let cands: Vec<Vec<WeylElement>> = frontier
            .par_iter()
            .map(|w| {
                (0..r)
                    .filter_map(|i| {
                        let b = w.image(i);
                        if RootSystem::is_positive(b) && allowed(b) {
                            let nw = w.times(sys, i);
                            (!prune(&nw)).then_some(nw)
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for w in cands.into_iter().flatten() {
            if seen.insert(w.inversions.clone()) {
                next.push(w);
                if seen.len() > cap {
                    return Err(Error::CapExceeded(cap));
                }
            }
        }
        next.sort_by(|a, b| a.word.cmp(&b.word));
        out.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(out)
}

/// `{w : N(w) ⊆ allowed}` on the datum's own root system.
pub fn enumerate_coset_reps<A>(d: &AffineDatum, allowed: A, cap: usize) -> Result<Vec<WeylElement>>
where
    A: Fn(&[i64]) -> bool + Sync,
{
    enumerate_with(&d.system, allowed, |_| false, cap)
}

/// δ′-level of a root of L̂(g,σ) given in coordinates.
pub fn sigma_height(d: &AffineDatum, m: &[i64]) -> i64 {
    m.iter().zip(&d.sigma.s).map(|(a, b)| a * b).sum()
}

/// Predicate for W′_{σ,0}: roots of odd δ′-level.
pub fn even_predicate(d: &AffineDatum) -> impl Fn(&[i64]) -> bool + Sync + '_ {
    move |m| sigma_height(d, m).rem_euclid(2) == 1
}

/// True when the finite part and δ coefficient of an L′ root lie on the
/// line of a real root of k̂.
pub fn is_compact_line(d: &AffineDatum, fin: &[Q], del: Q) -> bool {
    d.k_structure.roots().iter().any(|a| {
        linalg::proportion(fin, a).is_some_and(|t| t.is_positive() && (del / t).is_integer())
    })
}

/// Predicate for W′_{σ,1} on the roots of L′.
pub fn spin_predicate(d: &AffineDatum) -> Result<impl Fn(&[i64]) -> bool + Sync + '_> {
    let mu = d
        .mu_structure
        .as_ref()
        .ok_or_else(|| Error::NotApplicable("no L′ in the complex case".into()))?;
    Ok(move |m: &[i64]| {
        let (fin, del) = mu.lprime.chart(m);
        !is_compact_line(d, &fin, del)
    })
}

/// W′_{σ,0}.
pub fn reps_even(d: &AffineDatum, cap: usize) -> Result<Vec<WeylElement>> {
    if d.k_structure.center_dim > 0 {
        return Err(Error::HasCenter);
    }
    enumerate_coset_reps(d, even_predicate(d), cap)
}

/// W′_{σ,1} inside the Weyl group of L′.
pub fn reps_spin(d: &AffineDatum, cap: usize) -> Result<Vec<WeylElement>> {
    if d.k_structure.center_dim > 0 {
        return Err(Error::HasCenter);
    }
    let pred = spin_predicate(d)?;
    let mu = d.mu_structure.as_ref().unwrap();
    enumerate_with(&mu.lprime, pred, |_| false, cap)
}

/// σ-minuscule elements: N(w) inside the roots of δ′-level one.
pub fn enumerate_minuscule(d: &AffineDatum) -> Result<Vec<WeylElement>> {
    enumerate_coset_reps(d, |m| sigma_height(d, m) == 1, DEFAULT_CAP)
}

/// A b₀-stable abelian subspace of p with its σ-minuscule witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianSubspace {
    /// Weights A ⊆ Δ(p), sorted.
    pub weights: Vec<Vec<Q>>,
    pub witness: WeylElement,
}

/// A = {−β̄ : β ∈ N(w)}.
pub fn subspace_of(d: &AffineDatum, w: &WeylElement) -> Vec<Vec<Q>> {
    let mut a: Vec<Vec<Q>> = w
        .inversions
        .iter()
        .map(|m| linalg::scale(-qi(1), &d.system.chart(m).0))
        .collect();
    a.sort();
    a
}

/// Σ, the b₀-stable abelian subspaces of p.
pub fn abelian_subspaces(d: &AffineDatum) -> Result<Vec<AbelianSubspace>> {
    Ok(enumerate_minuscule(d)?
        .into_iter()
        .map(|w| AbelianSubspace {
            weights: subspace_of(d, &w),
            witness: w,
        })
        .collect())
}

/// Σ′ = {A ∈ Σ : −ᾱ_i ∈ A} with (|A⁺|, |A⁻|).
pub fn hermitian_fundamental_subspaces(
    d: &AffineDatum,
) -> Result<Vec<(AbelianSubspace, usize, usize)>> {
    let i = d.hermitian_node.ok_or(Error::NotHermitian)?;
    let target = linalg::scale(-qi(1), &d.system.simple[i].fin);
    let pos: BTreeSet<Vec<Q>> = d.classification.positive_p.iter().cloned().collect();
    Ok(abelian_subspaces(d)?
        .into_iter()
        .filter(|a| a.weights.contains(&target))
        .map(|a| {
            let plus = a.weights.iter().filter(|x| pos.contains(*x)).count();
            let minus = a.weights.len() - plus;
            (a, plus, minus)
        })
        .collect())
}

/// The extra representative w_σ, present when p ≠ 0 and α_p is long.
pub fn w_sigma(d: &AffineDatum) -> Result<WeylElement> {
    let p = match d.p_index {
        Some(p) if p != 0 && !d.is_complex() => p,
        _ => return Err(Error::NotApplicable("w_σ needs p ≠ 0".into())),
    };
    if !d.alpha_long(p) {
        return Err(Error::NotApplicable("α_p is short".into()));
    }
    let reps = reps_even(d, DEFAULT_CAP)?;
    let mut extra: Vec<WeylElement> = reps
        .into_iter()
        .filter(|w| w.inversions.iter().any(|m| sigma_height(d, m) != 1))
        .collect();
    if extra.len() != 1 {
        return Err(Error::Internal(format!(
            "expected one non-minuscule representative, found {}",
            extra.len()
        )));
    }
    Ok(extra.remove(0))
}

/// Left multiplication by w_σ on W′_{σ,0}: the representatives and, for
/// each, the index of w_σ·w among them.
pub fn w_sigma_involution(d: &AffineDatum) -> Result<(Vec<WeylElement>, Vec<usize>)> {
    let ws = w_sigma(d)?;
    let reps = reps_even(d, DEFAULT_CAP)?;
    let index: std::collections::HashMap<&Vec<Vec<i64>>, usize> =
        reps.iter().enumerate().map(|(j, w)| (&w.inversions, j)).collect();
    let image = reps
        .iter()
        .map(|w| {
            let x = ws.compose(&d.system, w);
            index
                .get(&x.inversions)
                .copied()
                .ok_or_else(|| Error::Internal(format!("w_σ·{} left W′", word_string(&w.word))))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((reps, image))
}

/// True when w lies in the finite Weyl group generated by s₁,…,sₙ.
pub fn in_finite_weyl(w: &WeylElement) -> bool {
    !w.word.contains(&0)
}

/// Expected N(w_σ) = ((α_p+Δ⁺_k)∩Δ̂⁺) ∪ {α_p} ∪ {α_p+kδ}, in coordinates.
pub fn w_sigma_inversions_expected(d: &AffineDatum) -> Result<Vec<Vec<i64>>> {
    let p = d.p_index.ok_or_else(|| Error::NotApplicable("no p".into()))?;
    let sys = &d.system;
    let r = sys.size();
    let mut out = BTreeSet::new();
    let mut ap = vec![0i64; r];
    ap[p] = 1;
    out.insert(ap.clone());
    let mut top = ap.clone();
    for (t, a) in top.iter_mut().zip(&d.marks) {
        *t += d.sigma.k * a;
    }
    out.insert(top);
    let pos_k = sys.finite_positive(&d.k_structure.pi_k);
    let roots: BTreeSet<Vec<i64>> = sys.positive_real_roots(qi(2)).into_iter().collect();
    for g in pos_k {
        let s: Vec<i64> = g.iter().zip(&ap).map(|(x, y)| x + y).collect();
        if roots.contains(&s) {
            out.insert(s);
        }
    }
    Ok(out.into_iter().collect())
}

/// An element t_γ·w of the extended affine Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedElement {
    /// γ on the finite chart.
    pub translation: Vec<Q>,
    /// Finite Weyl group part (word in the nodes 1..=n).
    pub finite_part: WeylElement,
}

impl ExtendedElement {
    /// Action on a weight of ĥ*: t_γ(Λ) = Λ + Λ(K)γ − ((Λ,γ) + ½|γ|²Λ(K))δ.
    pub fn apply(&self, d: &AffineDatum, lam: &Weight) -> Result<Weight> {
        let w = self.finite_part.apply(&d.system, lam)?;
        Ok(translate(d, &self.translation, &w))
    }
}

/// Translation t_γ on the chart of `sys`, for γ in the span of the finite
/// simple roots (nodes 1..) given by its finite part; `marks` give the null
/// root. Uses t_γ(Λ) = Λ + Λ(K)γ − ((Λ,γ) + ½|γ|²Λ(K))δ with γ carrying its
/// own grading.
pub fn translate_on(sys: &RootSystem, marks: &[i64], gamma: &[Q], lam: &Weight) -> Weight {
    let mut del = Q::zero();
    for (j, s) in sys.simple.iter().enumerate().skip(1) {
        let c = gamma[j - 1] / s.fin[j - 1];
        del += c * s.del;
    }
    let g = Weight::root(gamma.to_vec(), del, sys.slots());
    let delta = sys.root_weight(marks);
    let lk = sys.full_form(lam, &delta);
    let shift = sys.full_form(lam, &g) + qr(1, 2) * sys.full_form(&g, &g) * lk;
    let mut out = lam.clone();
    out.axpy(lk, &g);
    out.axpy(-shift, &delta);
    out
}

/// Translation t_γ on the ĥ* chart of the datum.
pub fn translate(d: &AffineDatum, gamma: &[Q], lam: &Weight) -> Weight {
    translate_on(&d.system, &d.marks, gamma, lam)
}

/// t_γ with trivial finite part.
pub fn extended_translation(d: &AffineDatum, gamma: &[Q]) -> ExtendedElement {
    ExtendedElement {
        translation: gamma.to_vec(),
        finite_part: WeylElement::identity(d.system.size()),
    }
}

/// Fundamental coweight ϖ_i on the finite chart, via the form.
pub fn fundamental_coweight(d: &AffineDatum, i: usize) -> Vec<Q> {
    let inv = linalg::inverse(&d.system.gram).expect("nondegenerate form");
    linalg::mat_vec(&inv, &linalg::unit(d.n, i - 1))
}

/// True when N(w) and its complement are closed under root addition,
/// checked inside the positive roots up to `max_del`.
pub fn is_biconvex(sys: &RootSystem, inv: &[Vec<i64>], max_del: Q) -> bool {
    let roots: Vec<Vec<i64>> = sys.positive_real_roots(max_del);
    let all: HashSet<&Vec<i64>> = roots.iter().collect();
    let n: HashSet<&Vec<i64>> = inv.iter().collect();
    for a in &roots {
        for b in &roots {
            if a >= b {
                continue;
            }
            let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            if !all.contains(&s) {
                continue;
            }
            let (ia, ib, is) = (n.contains(a), n.contains(b), n.contains(&s));
            if ia && ib && !is {
                return false;
            }
            if !ia && !ib && is {
                return false;
            }
        }
    }
    true
}

/// Largest δ coefficient among the inversions of `w`.
pub fn max_level(sys: &RootSystem, w: &WeylElement) -> Q {
    w.inversions
        .iter()
        .map(|m| sys.chart(m).1)
        .max()
        .unwrap_or_else(Q::zero)
}

/// Displays a word as `s1s2s0`, or `id`.
pub fn word_string(w: &[usize]) -> String {
    if w.is_empty() {
        "id".into()
    } else {
        w.iter().map(|i| format!("s{i}")).collect()
    }
}

/// Sum of the inversions on the ĥ* chart, used by w(ρ̂) = ρ̂ − ⟨N(w)⟩.
pub fn rho_image(sys: &RootSystem, rho: &Weight, w: &WeylElement) -> Weight {
    rho.sub(&w.inversion_sum(sys))
}

/// One helper used by tests: the identity acts trivially.
pub fn is_identity(w: &WeylElement) -> bool {
    w.word.is_empty() && w.inversions.is_empty()
}
