//! Decompositions of the level-one modules of the orthogonal affine algebra
//! restricted to k̂: ψ maps, the coset-representative formulas for basic,
//! vector and spin modules, Hermitian charge eigenspaces and the type C
//! lattice-path description.

use std::cmp::Reverse;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, qi, qr, Q};
use crate::rootdata::{AffineDatum, LPrimeKind};
use crate::system::{RootSystem, Weight};
use crate::tables::{LieType, Simple};
use crate::weylcomb::{self, WeylElement, DEFAULT_CAP};

/// The three level-one module families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rep {
    Basic,
    Vector,
    Spin,
}

impl Rep {
    /// ε for basic (0) and vector (1).
    pub fn epsilon(self) -> Option<u8> {
        match self {
            Rep::Basic => Some(0),
            Rep::Vector => Some(1),
            Rep::Spin => None,
        }
    }
}

impl fmt::Display for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rep::Basic => "basic",
            Rep::Vector => "vector",
            Rep::Spin => "spin",
        })
    }
}

impl FromStr for Rep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "basic" => Ok(Rep::Basic),
            "vector" => Ok(Rep::Vector),
            "spin" => Ok(Rep::Spin),
            _ => Err(Error::Parse(format!("unknown representation '{s}'"))),
        }
    }
}

/// Combinatorial origin of a component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Label {
    /// Indexed by a b₀-stable abelian subspace A ⊆ p (weights listed).
    Abelian { subspace: Vec<Vec<Q>> },
    /// The extra representative w_σ.
    WSigma,
    /// Hermitian case: subspace I ∈ Σ′ and translation index k_I.
    HermitianPair { subspace: Vec<Vec<Q>>, k: i64 },
    /// Produced by the type C lattice-path formula.
    LatticePath { composition: Vec<i64> },
}

/// One irreducible k̂-summand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    /// Highest weight on the k̂ chart.
    pub weight: Weight,
    /// Coefficients on the fundamental weights Λ₀,…,Λ_{rank} of each ideal.
    pub ideal_coeffs: Vec<Vec<i64>>,
    /// Coefficient of δ_k.
    pub delta: Q,
    pub multiplicity: u64,
    pub label: Label,
    pub hwv: Option<String>,
    /// Eigenvalue of the central element ϖ_i in the Hermitian case.
    pub charge: Option<Q>,
}

impl Component {
    /// `a0*L0 + a1*L1` per ideal, joined by ` ⊗ `.
    pub fn weight_string(&self) -> String {
        self.ideal_coeffs
            .iter()
            .map(|c| format!("L({})", fundamental_string(c)))
            .collect::<Vec<_>>()
            .join(" ⊗ ")
    }
}

/// `2*L0 + 1*L2`, or `0`.
pub fn fundamental_string(c: &[i64]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|(_, a)| **a != 0)
        .map(|(i, a)| format!("{a}*L{i}"))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Which module a component list describes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "module", rename_all = "snake_case")]
pub enum ModuleId {
    /// L(Λ̃₀).
    Basic,
    /// L(Λ̃₁).
    Vector,
    /// L(Λ̃_m) (the whole spin module when dim p is odd).
    SpinTop,
    /// L(Λ̃_{m−1}).
    SpinSecond,
    /// An eigenspace of the center; `q` as in the charge formulas.
    HermitianCharge { rep: Rep, q: i64 },
}

impl fmt::Display for ModuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleId::Basic => write!(f, "basic"),
            ModuleId::Vector => write!(f, "vector"),
            ModuleId::SpinTop => write!(f, "spin"),
            ModuleId::SpinSecond => write!(f, "spin'"),
            ModuleId::HermitianCharge { rep, q } => write!(f, "{rep}[q={q}]"),
        }
    }
}

/// A module restricted to k̂: `global_multiplier` copies of the direct sum
/// of the components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub module_id: ModuleId,
    pub global_multiplier: u64,
    /// Ideal names in output order.
    pub ideals: Vec<String>,
    pub components: Vec<Component>,
}

impl Decomposition {
    fn finish(mut self) -> Self {
        self.components.sort_by(|a, b| {
            (Reverse(a.delta), &a.ideal_coeffs, &a.charge).cmp(&(Reverse(b.delta), &b.ideal_coeffs, &b.charge))
        });
        self
    }
}

/// ψ₀*: δ′ ↦ ½δ_k, finite parts unchanged, levels rescaled per ideal.
pub fn psi0_star(d: &AffineDatum, lam: &Weight) -> Weight {
    let ks = &d.k_structure;
    let mut lev: Vec<Q> = ks
        .simple_ideals
        .iter()
        .map(|s| qi(2) * s.c * lam.lev[0])
        .collect();
    if ks.center_dim == 1 {
        lev.push(qi(2) * lam.lev[0]);
    }
    Weight {
        fin: lam.fin.clone(),
        lev,
        del: lam.del * ks.delta_k_per_delta_prime,
    }
}

/// ψ₁*: finite parts through w₀, δ′ ↦ δ_k, Λ_μ ↦ Σ k c_S Λ₀^S.
pub fn psi1_star(d: &AffineDatum, lam: &Weight) -> Result<Weight> {
    let mu = d
        .mu_structure
        .as_ref()
        .ok_or_else(|| Error::NotApplicable("ψ₁ is not defined in the complex case".into()))?;
    let ks = &d.k_structure;
    let k = qi(d.sigma.k);
    let mut lev: Vec<Q> = ks.simple_ideals.iter().map(|s| k * s.c * lam.lev[0]).collect();
    if ks.center_dim == 1 {
        lev.push(k * lam.lev[0]);
    }
    Ok(Weight {
        fin: linalg::mat_vec(&mu.w0, &lam.fin),
        lev,
        del: lam.del,
    })
}

/// Coefficients of a k̂ weight on the fundamental weights of each ideal.
pub fn ideal_coeffs(d: &AffineDatum, lam: &Weight) -> Vec<Vec<Q>> {
    let ksys = &d.k_structure.system;
    let mut out = vec![Vec::new(); d.k_structure.simple_ideals.len()];
    for (i, s) in ksys.simple.iter().enumerate() {
        out[s.slot].push(ksys.simple_pair(lam, i));
    }
    out
}

/// Charge λ(ϖ_i) in the Hermitian case.
pub fn charge_of(d: &AffineDatum, lam: &Weight) -> Option<Q> {
    d.hermitian_node.map(|i| lam.fin[i - 1])
}

/// Wraps a k̂ weight as a component after checking dominance.
pub fn component_from_weight(
    d: &AffineDatum,
    weight: Weight,
    multiplicity: u64,
    label: Label,
    hwv: Option<String>,
) -> Result<Component> {
    let qc = ideal_coeffs(d, &weight);
    let mut coeffs = Vec::with_capacity(qc.len());
    for row in &qc {
        let mut r = Vec::with_capacity(row.len());
        for c in row {
            if !c.is_integer() || c.is_negative() {
                return Err(Error::Internal(format!("non-dominant component weight {weight}")));
            }
            r.push(c.to_integer());
        }
        coeffs.push(r);
    }
    Ok(Component {
        delta: weight.del,
        charge: charge_of(d, &weight),
        weight,
        ideal_coeffs: coeffs,
        multiplicity,
        label,
        hwv,
    })
}

/// Rebuilds a k̂ weight from ideal coefficients, δ coefficient and, in the
/// Hermitian case, the charge.
pub fn weight_from_coeffs(
    d: &AffineDatum,
    coeffs: &[Vec<i64>],
    delta: Q,
    charge: Option<Q>,
) -> Result<Weight> {
    let ks = &d.k_structure;
    let ksys = &ks.system;
    let n = d.n;
    let slots = ksys.slots();
    let unknowns = n + slots;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut seen = vec![0usize; ks.simple_ideals.len()];
    for s in &ksys.simple {
        let len = ksys.form(&s.fin, &s.fin);
        let mut row: Vec<Q> = linalg::mat_vec(&ksys.gram, &s.fin)
            .into_iter()
            .map(|x| qi(2) * x / len)
            .collect();
        row.resize(unknowns, Q::zero());
        row[n + s.slot] = qi(2) * ksys.tau[s.slot] * s.del / len;
        rows.push(row);
        let c = coeffs
            .get(s.slot)
            .and_then(|r| r.get(seen[s.slot]))
            .ok_or_else(|| Error::Parse("coefficient list does not match the ideals".into()))?;
        seen[s.slot] += 1;
        rhs.push(qi(*c));
    }
    if seen.iter().zip(coeffs).any(|(a, r)| *a != r.len()) || coeffs.len() != seen.len() {
        return Err(Error::Parse("coefficient list does not match the ideals".into()));
    }
    if let Some(cs) = ks.center_slot() {
        let i = d.hermitian_node.ok_or(Error::NotHermitian)?;
        let q = charge.ok_or_else(|| Error::Parse("Hermitian component needs a charge".into()))?;
        let mut row = linalg::zeros(unknowns);
        row[n + cs] = Q::one();
        rows.push(row);
        rhs.push(ks.lambda0k.lev[cs]);
        let mut row = linalg::zeros(unknowns);
        row[i - 1] = Q::one();
        rows.push(row);
        rhs.push(q);
    }
    let x = linalg::solve(&rows, &rhs).ok_or_else(|| Error::Internal("singular weight system".into()))?;
    Ok(Weight {
        fin: x[..n].to_vec(),
        lev: x[n..].to_vec(),
        del: delta,
    })
}

fn vec_string(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn e_factor(shift: i64, alpha: &[Q]) -> String {
    format!("(t^(-r'{shift:+}) e[{}])", vec_string(alpha))
}

fn product_string(factors: Vec<String>) -> String {
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("")
    }
}

/// Finite parts of N(w) on the datum chart.
fn inversion_fins(sys: &RootSystem, w: &WeylElement) -> Vec<(Vec<Q>, Q)> {
    w.inversions.iter().map(|m| sys.chart(m)).collect()
}

/// A = {−β̄ : β ∈ N(w)} when every inversion has σ-height one.
fn abelian_label(d: &AffineDatum, w: &WeylElement) -> Option<Vec<Vec<Q>>> {
    w.inversions
        .iter()
        .all(|m| weylcomb::sigma_height(d, m) == 1)
        .then(|| weylcomb::subspace_of(d, w))
}

fn w_sigma_hwv(d: &AffineDatum) -> Option<String> {
    let p = d.p_index?;
    let sys = &d.system;
    let ap = sys.simple[p].fin.clone();
    let mut f = Vec::new();
    let pos_k = sys.finite_positive(&d.k_structure.pi_k);
    let roots: BTreeSet<Vec<i64>> = sys.positive_real_roots(Q::one()).into_iter().collect();
    for g in pos_k {
        let mut s = g.clone();
        s[p] += 1;
        if roots.contains(&s) {
            f.push(e_factor(-2, &linalg::scale(-qi(1), &sys.chart(&s).0)));
        }
    }
    let neg = linalg::scale(-qi(1), &ap);
    f.push(e_factor(-2, &neg));
    f.push(e_factor(-3, &neg));
    Some(product_string(f))
}

/// Basic (ε = 0) or vector (ε = 1) module restricted to k̂.
pub fn decompose_basic_vector(d: &AffineDatum, eps: u8) -> Result<Decomposition> {
    decompose_basic_vector_capped(d, eps, DEFAULT_CAP)
}

/// As [`decompose_basic_vector`] with an explicit enumeration cap.
pub fn decompose_basic_vector_capped(d: &AffineDatum, eps: u8, cap: usize) -> Result<Decomposition> {
    if eps > 1 {
        return Err(Error::InvalidInvolution("ε must be 0 or 1".into()));
    }
    let reps = weylcomb::reps_even(d, cap)?;
    let rho_k = &d.k_structure.rho_k_hat;
    let mut comps = Vec::new();
    for u in reps.iter().filter(|u| u.len() % 2 == eps as usize) {
        let image = weylcomb::rho_image(&d.system, &d.rho_hat, u);
        let mut w = psi0_star(d, &image).sub(rho_k);
        w.del += qr(eps as i64, 2);
        let (label, hwv) = match abelian_label(d, u) {
            Some(a) => {
                let h = product_string(a.iter().map(|x| e_factor(-2, x)).collect());
                (Label::Abelian { subspace: a }, Some(h))
            }
            None => (Label::WSigma, w_sigma_hwv(d)),
        };
        comps.push(component_from_weight(d, w, 1, label, hwv)?);
    }
    Ok(Decomposition {
        module_id: if eps == 0 { ModuleId::Basic } else { ModuleId::Vector },
        global_multiplier: 1,
        ideals: d.ideal_names(),
        components: comps,
    }
    .finish())
}

/// Spin module(s) restricted to k̂. Returns one decomposition when dim p is
/// odd and two (L(Λ̃_m), L(Λ̃_{m−1})) when it is even.
pub fn decompose_spin(d: &AffineDatum) -> Result<Vec<Decomposition>> {
    decompose_spin_capped(d, DEFAULT_CAP)
}

/// As [`decompose_spin`] with an explicit enumeration cap.
pub fn decompose_spin_capped(d: &AffineDatum, cap: usize) -> Result<Vec<Decomposition>> {
    let ks = &d.k_structure;
    if ks.center_dim > 0 {
        return Err(Error::HasCenter);
    }
    let zero = d.classification.p_zero_mult as u32;
    let dim_even = d.dim_p().is_multiple_of(2);
    let names = d.ideal_names();
    let top = ks.lambda0k.add(&Weight {
        fin: ks.rho_n.clone(),
        lev: linalg::zeros(ks.system.slots()),
        del: Q::zero(),
    });
    let mut all = Vec::new();
    if d.is_complex() {
        let c = component_from_weight(d, top, 1, Label::Abelian { subspace: vec![] }, Some("1".into()))?;
        all.push((0u8, c));
    } else {
        let mu = d.mu_structure.as_ref().unwrap();
        let reps = weylcomb::reps_spin(d, cap)?;
        let a0 = qi(d.marks[0]);
        let pset: BTreeSet<Vec<Q>> = d.classification.p_weights.iter().cloned().collect();
        let pos: BTreeSet<Vec<Q>> = d.classification.positive_p.iter().cloned().collect();
        for u in &reps {
            let image = weylcomb::rho_image(&mu.lprime, &mu.lprime_rho, u);
            let w = psi1_star(d, &image)?.scale(a0).sub(&ks.rho_k_hat);
            let fins = inversion_fins(&mu.lprime, u);
            let (label, hwv) = spin_label(d, &fins, &pset, &pos);
            all.push(((u.len() % 2) as u8, component_from_weight(d, w, 1, label, hwv)?));
        }
    }
    let equal_rank = zero == 0 && !d.is_complex();
    let mut out = Vec::new();
    if equal_rank {
        for (eps, id) in [(0u8, ModuleId::SpinTop), (1, ModuleId::SpinSecond)] {
            let comps: Vec<Component> = all.iter().filter(|(e, _)| *e == eps).map(|(_, c)| c.clone()).collect();
            out.push(
                Decomposition {
                    module_id: id,
                    global_multiplier: 1,
                    ideals: names.clone(),
                    components: comps,
                }
                .finish(),
            );
        }
        if !dim_even {
            return Err(Error::Internal("equal rank with odd dim p".into()));
        }
    } else {
        let comps: Vec<Component> = all.into_iter().map(|(_, c)| c).collect();
        let total = zero / 2;
        if dim_even {
            let mult = 1u64 << (total.max(1) - 1);
            for id in [ModuleId::SpinTop, ModuleId::SpinSecond] {
                out.push(
                    Decomposition {
                        module_id: id,
                        global_multiplier: mult,
                        ideals: names.clone(),
                        components: comps.clone(),
                    }
                    .finish(),
                );
            }
        } else {
            out.push(
                Decomposition {
                    module_id: ModuleId::SpinTop,
                    global_multiplier: 1u64 << total,
                    ideals: names,
                    components: comps,
                }
                .finish(),
            );
        }
    }
    Ok(out)
}

/// Spin labels: A = {−w₀-preimages} normalized to weights of p; the w_σ
/// element shows up as a repeated or non-p direction.
fn spin_label(
    d: &AffineDatum,
    fins: &[(Vec<Q>, Q)],
    pset: &BTreeSet<Vec<Q>>,
    pos: &BTreeSet<Vec<Q>>,
) -> (Label, Option<String>) {
    let mu = d.mu_structure.as_ref().unwrap();
    let mut a = Vec::new();
    for (f, _) in fins {
        let neg = linalg::scale(-qi(1), f);
        let hit = pset
            .iter()
            .find(|x| linalg::proportion(&neg, x).is_some_and(|t| t.is_positive()));
        match hit {
            Some(x) => a.push(x.clone()),
            None => return (Label::WSigma, None),
        }
    }
    let uniq: BTreeSet<Vec<Q>> = a.iter().cloned().collect();
    if uniq.len() != a.len() {
        return (Label::WSigma, None);
    }
    let mut factors = Vec::new();
    for x in &uniq {
        let y = linalg::mat_vec(&mu.w0, x);
        let shift = if pos.contains(&y) { -2 } else { -1 };
        factors.push(e_factor(shift, &y));
    }
    (
        Label::Abelian {
            subspace: uniq.into_iter().collect(),
        },
        Some(product_string(factors)),
    )
}

/// Eigenvalue offset of the spin modules: ϖ_i acts by dim p/4 + q.
pub fn hermitian_spin_offset(d: &AffineDatum) -> Q {
    qr(d.dim_p() as i64, 4)
}

/// Hermitian eigenspace for charge `q`. Each A ∈ Σ′ with witness w′ gives
/// the representative t_{kω}w′ for the unique k landing in charge `q`; the
/// spin module uses g⁻¹w′g in the Weyl group of L′ instead. For the spin
/// module the eigenvalue is dim p/4 + q and the module is L(Λ̃_{m−ε}) with
/// q ≡ ε mod 2.
pub fn decompose_hermitian(d: &AffineDatum, rep: Rep, q: i64) -> Result<Decomposition> {
    let i = d.hermitian_node.ok_or(Error::NotHermitian)?;
    let ks = &d.k_structure;
    let sigma_prime = weylcomb::hermitian_fundamental_subspaces(d)?;
    let coweight = weylcomb::fundamental_coweight(d, i);
    let eps = q.rem_euclid(2);
    let mut comps = Vec::new();
    if rep.epsilon().is_none_or(|e| e as i64 == eps) {
        let target = match rep {
            Rep::Spin => hermitian_spin_offset(d) + qi(q),
            _ => qi(q),
        };
        for (a, _, _) in &sigma_prime {
            let place = |k: Q| -> Result<Weight> {
                let gamma = linalg::scale(k, &coweight);
                Ok(match rep {
                    Rep::Basic | Rep::Vector => {
                        let base = weylcomb::rho_image(&d.system, &d.rho_hat, &a.witness);
                        let t = weylcomb::translate(d, &gamma, &base);
                        let mut w = psi0_star(d, &t).sub(&ks.rho_k_hat);
                        w.del += qr(eps, 2);
                        w
                    }
                    Rep::Spin => {
                        let mu = d.mu_structure.as_ref().unwrap();
                        let u = conjugate_to_lprime(d, &a.witness)?;
                        let base = weylcomb::rho_image(&mu.lprime, &mu.lprime_rho, &u);
                        let t = weylcomb::translate_on(&mu.lprime, &d.marks, &gamma, &base);
                        psi1_star(d, &t)?.scale(qi(d.marks[0])).sub(&ks.rho_k_hat)
                    }
                })
            };
            let w0 = place(Q::zero())?;
            let w1 = place(Q::one())?;
            let c0 = w0.fin[i - 1];
            let k = (target - c0) / (w1.fin[i - 1] - c0);
            if !k.is_integer() {
                continue;
            }
            let w = place(k)?;
            let hwv = product_string(a.weights.iter().map(|x| e_factor(-2, x)).collect());
            comps.push(component_from_weight(
                d,
                w,
                1,
                Label::HermitianPair {
                    subspace: a.weights.clone(),
                    k: k.to_integer(),
                },
                Some(hwv),
            )?);
        }
    }
    Ok(Decomposition {
        module_id: ModuleId::HermitianCharge { rep, q },
        global_multiplier: 1,
        ideals: d.ideal_names(),
        components: comps,
    }
    .finish())
}

/// g⁻¹w′g for w′ ∈ W′_{σ,0}: the element of the Weyl group of L′ whose
/// inversion set is g⁻¹N(w′), where g⁻¹ keeps finite parts and sends the
/// δ′-degree m of a root with ᾱ_i-coefficient c to (m − c)/2.
fn conjugate_to_lprime(d: &AffineDatum, w: &WeylElement) -> Result<WeylElement> {
    let i = d.hermitian_node.ok_or(Error::NotHermitian)?;
    let mu = d.mu_structure.as_ref().unwrap();
    let target: BTreeSet<(Vec<Q>, Q)> = w
        .inversions
        .iter()
        .map(|m| {
            let (f, del) = d.system.chart(m);
            let c = f[i - 1];
            (f, (del - c) / 2)
        })
        .collect();
    let lp = &mu.lprime;
    let found = weylcomb::enumerate_with(lp, |m| target.contains(&lp.chart(m)), |_| false, DEFAULT_CAP)?
        .into_iter()
        .find(|u| u.len() == target.len());
    found.ok_or_else(|| Error::Internal("g⁻¹N(w′) is not an inversion set of L′".into()))
}

/// Hermitian components from the coset representatives directly, truncated
/// to δ_k-degree at most `depth` below the vacuum. Each entry carries the
/// parity ℓ(u) mod 2.
pub fn hermitian_generic(d: &AffineDatum, rep: Rep, depth: Q) -> Result<Vec<(u8, Component)>> {
    if d.hermitian_node.is_none() {
        return Err(Error::NotHermitian);
    }
    let ks = &d.k_structure;
    let mut out = Vec::new();
    match rep {
        Rep::Basic | Rep::Vector => {
            let sys = &d.system;
            let half = ks.delta_k_per_delta_prime;
            let prune = |w: &WeylElement| {
                let s: Q = w.inversions.iter().map(|m| sys.chart(m).1).sum();
                s * half > depth + Q::one()
            };
            let reps = weylcomb::enumerate_with(sys, weylcomb::even_predicate(d), prune, DEFAULT_CAP)?;
            for u in &reps {
                let eps = (u.len() % 2) as u8;
                if rep.epsilon() != Some(eps) {
                    continue;
                }
                let image = weylcomb::rho_image(sys, &d.rho_hat, u);
                let mut w = psi0_star(d, &image).sub(&ks.rho_k_hat);
                w.del += qr(eps as i64, 2);
                if -w.del > depth {
                    continue;
                }
                out.push((eps, component_from_weight(d, w, 1, Label::WSigma, None)?));
            }
        }
        Rep::Spin => {
            let mu = d.mu_structure.as_ref().unwrap();
            let lp = &mu.lprime;
            let prune = |w: &WeylElement| {
                let s: Q = w.inversions.iter().map(|m| lp.chart(m).1).sum();
                s > depth + qi(d.dim_p() as i64)
            };
            let pred = weylcomb::spin_predicate(d)?;
            let reps = weylcomb::enumerate_with(lp, pred, prune, DEFAULT_CAP)?;
            for u in &reps {
                let image = weylcomb::rho_image(lp, &mu.lprime_rho, u);
                let w = psi1_star(d, &image)?.sub(&ks.rho_k_hat);
                if -w.del > depth {
                    continue;
                }
                out.push(((u.len() % 2) as u8, component_from_weight(d, w, 1, Label::WSigma, None)?));
            }
        }
    }
    Ok(out)
}

/// Weak compositions of `n` into `parts` parts, in lexicographic order.
pub fn weak_compositions(n: i64, parts: usize) -> Vec<Vec<i64>> {
    if parts == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in weak_compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// ζ: (k₀,…,k_m) ↦ {k₀+1, k₀+k₁+2, …}.
fn zeta(k: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(k.len() - 1);
    let mut acc = 0;
    for (j, x) in k[..k.len() - 1].iter().enumerate() {
        acc += x;
        out.push(acc + j as i64 + 1);
    }
    out
}

/// Inverse of ζ for subsets of {1,…,total}.
fn zeta_inv(s: &[i64], total: i64) -> Vec<i64> {
    let mut out = Vec::with_capacity(s.len() + 1);
    let mut prev = 0;
    for x in s {
        out.push(x - prev - 1);
        prev = *x;
    }
    out.push(total - prev);
    out
}

/// Type C_{n+m} with σ of type (0,…,1,…,0;1), 1 at position m.
#[derive(Clone, Debug)]
pub struct TypeCDecomposition {
    /// L(Λ̃₀), L(Λ̃₁).
    pub basic_vector: [Decomposition; 2],
    /// L(Λ̃_l), L(Λ̃_{l−1}).
    pub spin: [Decomposition; 2],
}

/// The datum of C_{n+m} with the node-m inner involution.
pub fn typec_datum(m: usize, n: usize) -> Result<AffineDatum> {
    let l = n + m;
    let mut s = vec![0i64; l + 1];
    s[m] = 1;
    crate::rootdata::build_affine_datum(
        LieType::Simple(Simple::C(l)),
        &crate::rootdata::InvolutionSpec::new(&s, 1),
    )
}

/// Decompositions read off weak compositions and the complement bijection.
pub fn typec_lattice_paths(m: usize, n: usize) -> Result<TypeCDecomposition> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidInvolution("m and n must be positive".into()));
    }
    let d = typec_datum(m, n)?;
    let total = (n + m) as i64;
    let mut bv: [Vec<Component>; 2] = [vec![], vec![]];
    let mut sp: [Vec<Component>; 2] = [vec![], vec![]];
    for k in weak_compositions(n as i64, m + 1) {
        let z: BTreeSet<i64> = zeta(&k).into_iter().collect();
        let comp: Vec<i64> = (1..=total).filter(|x| !z.contains(x)).collect();
        let kp = zeta_inv(&comp, total);
        let kpp: Vec<i64> = kp.iter().rev().copied().collect();
        let eps = (k.iter().enumerate().map(|(i, x)| i as i64 * x).sum::<i64>() % 2) as usize;
        for (target, second) in [(&mut bv, &kpp), (&mut sp, &kp)] {
            let coeffs = vec![k.clone(), second.clone()];
            let weight = weight_from_coeffs(&d, &coeffs, Q::zero(), None)?;
            target[eps].push(Component {
                weight,
                ideal_coeffs: coeffs,
                delta: Q::zero(),
                multiplicity: 1,
                label: Label::LatticePath { composition: k.clone() },
                hwv: None,
                charge: None,
            });
        }
    }
    let names = d.ideal_names();
    let mk = |id: ModuleId, c: Vec<Component>| {
        Decomposition {
            module_id: id,
            global_multiplier: 1,
            ideals: names.clone(),
            components: c,
        }
        .finish()
    };
    let [b0, b1] = bv;
    let [s0, s1] = sp;
    Ok(TypeCDecomposition {
        basic_vector: [mk(ModuleId::Basic, b0), mk(ModuleId::Vector, b1)],
        spin: [mk(ModuleId::SpinTop, s0), mk(ModuleId::SpinSecond, s1)],
    })
}

/// Drops δ_k coefficients (the "modulo δ" view used for display).
pub fn mod_delta(dec: &Decomposition) -> Vec<Vec<Vec<i64>>> {
    let mut v: Vec<Vec<Vec<i64>>> = dec.components.iter().map(|c| c.ideal_coeffs.clone()).collect();
    v.sort();
    v
}

/// All decompositions requested by `rep` for a semisimple k.
pub fn decompose(d: &AffineDatum, rep: Rep, cap: usize) -> Result<Vec<Decomposition>> {
    match rep {
        Rep::Basic => Ok(vec![decompose_basic_vector_capped(d, 0, cap)?]),
        Rep::Vector => Ok(vec![decompose_basic_vector_capped(d, 1, cap)?]),
        Rep::Spin => decompose_spin_capped(d, cap),
    }
}

/// True for the L′ shape whose spin components come from Σ_ni directly.
pub fn is_a2n_shape(d: &AffineDatum) -> bool {
    d.mu_structure
        .as_ref()
        .is_some_and(|m| m.lprime_kind == LPrimeKind::A2nDual)
}
