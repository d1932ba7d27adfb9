//! Root datum of the twisted loop algebra L̂(g,σ), the derived k̂ datum, the
//! weights of p and the data of the auxiliary algebra L′(g,σ).
//!
//! Chart: a weight of ĥ* is (finite part on the basis ᾱ₁,…,ᾱₙ, value on K′,
//! coefficient of δ′). Weights of ĥ_k* use the same finite basis, one level
//! per simple ideal (plus one for the center), and the coefficient of δ_k.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, qi, qr, QMat, Q};
use crate::system::{RootSystem, SimpleRoot, Weight};
use crate::tables::{self, LieType, Simple};

/// Involution type (s₀,…,sₙ;k).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvolutionSpec {
    pub s: Vec<i64>,
    pub k: i64,
}

impl InvolutionSpec {
    /// Convenience constructor.
    pub fn new(s: &[i64], k: i64) -> Self {
        InvolutionSpec { s: s.to_vec(), k }
    }

    /// Single nonzero entry at `p` among `len` nodes.
    pub fn node(len: usize, p: usize, k: i64) -> Self {
        let mut s = vec![0; len];
        s[p] = 1;
        InvolutionSpec { s, k }
    }
}

/// A root with its multiplicity; `level` is the null-root coefficient of the
/// chart it lives on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineRoot {
    pub level: Q,
    pub finite: Vec<Q>,
    pub mult: u32,
}

/// One simple ideal k_S of k.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SimpleIdeal {
    /// Finite type name in the table labeling.
    pub kind: Simple,
    /// Datum node carrying table label j+1 at position j.
    pub nodes: Vec<usize>,
    /// Highest root θ_S (finite part).
    pub theta: Vec<Q>,
    /// Dual Coxeter number h∨_S.
    pub h_dual: i64,
    /// Form ratio c_S = 2/(θ_S,θ_S).
    pub c: Q,
    /// Dynkin index n_S = k c_S.
    pub n_s: Q,
    /// Level j_S = n_S h∨ − h∨_S.
    pub j: i64,
}

/// Structure of k and of k̂.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KStructure {
    pub simple_ideals: Vec<SimpleIdeal>,
    /// Datum nodes with s_i = 0.
    pub pi_k: Vec<usize>,
    /// ψ₀* sends δ′ to this multiple of δ_k.
    pub delta_k_per_delta_prime: Q,
    /// Λ_{0,k} = Σ j_S Λ₀^S.
    pub lambda0k: Weight,
    /// ρ̂_k.
    pub rho_k_hat: Weight,
    /// ρₙ, half the sum of Δ⁺(p).
    pub rho_n: Vec<Q>,
    /// 0 or 1.
    pub center_dim: usize,
    /// Δ⁺_k (finite parts).
    pub positive_roots: Vec<Vec<Q>>,
    /// The affine root system of k̂ on the k chart.
    pub system: RootSystem,
}

impl KStructure {
    /// Level slot index of the center, if any.
    pub fn center_slot(&self) -> Option<usize> {
        (self.center_dim == 1).then_some(self.simple_ideals.len())
    }

    /// Δ_k with both signs.
    pub fn roots(&self) -> Vec<Vec<Q>> {
        let mut v = self.positive_roots.clone();
        v.extend(self.positive_roots.iter().map(|r| linalg::scale(-qi(1), r)));
        v
    }
}

/// Compact, noncompact and complex roots.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RootClassification {
    pub compact: Vec<Vec<Q>>,
    pub noncompact: Vec<Vec<Q>>,
    pub complex_: Vec<Vec<Q>>,
    /// Δ(p) with multiplicity of the zero weight listed separately.
    pub p_weights: Vec<Vec<Q>>,
    pub p_zero_mult: usize,
    pub positive_p: Vec<Vec<Q>>,
}

/// The three shapes of L′(g,σ).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LPrimeKind {
    /// k = 1: the untwisted affinization of g.
    KMu,
    /// k = 2, a₀ = 1: the dual of the untwisted affinization of k_μ.
    KMuDual,
    /// A₂ₙ⁽²⁾.
    A2nDual,
}

/// Data attached to μ = σ∘exp(πi ad ω).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MuStructure {
    /// Π_f = {ᾱ₁,…,ᾱₙ} (finite parts).
    pub pi_f: Vec<Vec<Q>>,
    /// Δ_f⁺ with ⟨·,ω⟩ even.
    pub delta_f_even: Vec<Vec<Q>>,
    /// Δ_f⁺ with ⟨·,ω⟩ odd.
    pub delta_f_odd: Vec<Vec<Q>>,
    pub lprime_kind: LPrimeKind,
    /// L′ on the ĥ* chart (level slot K′, null root δ′).
    pub lprime: RootSystem,
    pub lprime_rho: Weight,
    /// w₀ as a matrix on finite parts.
    pub w0: QMat,
    /// Datum nodes of Π_k whose reflections compose w₀, rightmost applied first.
    pub w0_word: Vec<usize>,
    /// ρ_f.
    pub rho_f: Vec<Q>,
}

/// Full datum of L̂(g,σ).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AffineDatum {
    pub lie: LieType,
    pub sigma: InvolutionSpec,
    /// Affine diagram name, e.g. `D4^(2)`.
    pub table: String,
    pub cartan: Vec<Vec<i64>>,
    pub marks: Vec<i64>,
    pub comarks: Vec<i64>,
    /// (αᵢ,αⱼ) on all simple roots.
    pub gram: Vec<Vec<Q>>,
    /// δ = delta_prime_per_delta · δ′.
    pub delta_prime_per_delta: Q,
    /// The root system on the ĥ* chart.
    pub system: RootSystem,
    /// Rank n of the finite part.
    pub n: usize,
    /// N = rank of g.
    pub big_n: usize,
    pub h_dual: i64,
    pub rho_hat: Weight,
    pub p_index: Option<usize>,
    /// Node i ≠ 0 with s₀ = sᵢ = 1 in the Hermitian case.
    pub hermitian_node: Option<usize>,
    pub k_structure: KStructure,
    pub classification: RootClassification,
    pub mu_structure: Option<MuStructure>,
}

fn primitive_kernel(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    let m: QMat = a.iter().map(|r| r.iter().map(|x| qi(*x)).collect()).collect();
    let ns = linalg::nullspace(&m);
    if ns.len() != 1 {
        return Err(Error::Internal("affine Cartan matrix must have corank one".into()));
    }
    Ok(linalg::primitive_integer(&ns[0]))
}

fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    (0..a.len()).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

/// Connected components of a node subset under the Cartan adjacency.
fn components(cartan: &[Vec<i64>], nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut left: BTreeSet<usize> = nodes.iter().copied().collect();
    let mut out = Vec::new();
    while let Some(&start) = left.iter().next() {
        left.remove(&start);
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            let next: Vec<usize> = left.iter().copied().filter(|&v| cartan[u][v] != 0).collect();
            for v in next {
                left.remove(&v);
                comp.push(v);
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort_by_key(|c| c[0]);
    out
}

/// Reflection matrix of `α` on finite coordinates.
fn reflection_matrix(gram: &[Vec<Q>], alpha: &[Q]) -> QMat {
    let n = alpha.len();
    let ga = linalg::mat_vec(gram, alpha);
    let len = linalg::bilinear(gram, alpha, alpha);
    let mut m = linalg::identity(n);
    for (i, row) in m.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x -= qi(2) * alpha[i] * ga[j] / len;
        }
    }
    m
}

/// Builds the datum of L̂(g,σ).
pub fn build_affine_datum(t: LieType, sigma: &InvolutionSpec) -> Result<AffineDatum> {
    let (cartan, table, big_n, base) = match t {
        LieType::Simple(s) => {
            let s = s.normalize()?;
            match sigma.k {
                1 => (tables::untwisted_cartan(s), format!("{s}^(1)"), s.rank(), s),
                2 => {
                    let tw = tables::twisted_of(s).ok_or_else(|| {
                        Error::UnsupportedType(format!("{s} has no outer involution"))
                    })?;
                    (tables::twisted_cartan(tw), tw.to_string(), s.rank(), s)
                }
                k => return Err(Error::InvalidInvolution(format!("k must be 1 or 2, got {k}"))),
            }
        }
        LieType::Complex(s) => {
            let s = s.normalize()?;
            if sigma.k != 2 || sigma.s.first() != Some(&1) || sigma.s.iter().skip(1).any(|x| *x != 0)
            {
                return Err(Error::InvalidInvolution(
                    "the complex case requires k = 2 and s = (1,0,…,0)".into(),
                ));
            }
            (tables::untwisted_cartan(s), format!("{s}^(1)"), 2 * s.rank(), s)
        }
    };
    let _ = base;
    let r = cartan.len();
    let n = r - 1;
    if sigma.s.len() != r {
        return Err(Error::InvalidInvolution(format!(
            "expected {r} entries s₀,…,s{n}, got {}",
            sigma.s.len()
        )));
    }
    if sigma.s.iter().any(|x| *x < 0) {
        return Err(Error::InvalidInvolution("sᵢ must be non-negative".into()));
    }
    let marks = primitive_kernel(&cartan)?;
    let comarks = primitive_kernel(&transpose(&cartan))?;
    let weighted: i64 = marks.iter().zip(&sigma.s).map(|(a, s)| a * s).sum();
    if sigma.k * weighted != 2 {
        return Err(Error::InvalidInvolution(format!(
            "kΣaᵢsᵢ ≠ 2 (got {} for marks {:?})",
            sigma.k * weighted,
            marks
        )));
    }
    let k = sigma.k;
    // Normalized form (αᵢ,αⱼ) = aᵢ∨ aᵢⱼ / aᵢ.
    let gram: Vec<Vec<Q>> = (0..r)
        .map(|i| (0..r).map(|j| qr(comarks[i] * cartan[i][j], marks[i])).collect())
        .collect();
    let g: Vec<Vec<Q>> = (1..r).map(|i| gram[i][1..].to_vec()).collect();
    let mut simple = Vec::with_capacity(r);
    let mut f0 = linalg::zeros(n);
    for i in 1..r {
        f0[i - 1] = qr(-marks[i], marks[0]);
    }
    simple.push(SimpleRoot {
        fin: f0,
        del: qi(sigma.s[0]),
        slot: 0,
    });
    for i in 1..r {
        simple.push(SimpleRoot {
            fin: linalg::unit(n, i - 1),
            del: qi(sigma.s[i]),
            slot: 0,
        });
    }
    let system = RootSystem::new(g.clone(), vec![Q::one()], simple);
    if system.cartan != cartan {
        return Err(Error::Internal("chart does not reproduce the Cartan matrix".into()));
    }
    let rho_hat = system.rho();
    let h_dual: i64 = comarks.iter().sum();
    if qi(2) * rho_hat.lev[0] / qi(k) != qi(h_dual) {
        return Err(Error::Internal("ρ̂(K) ≠ h∨".into()));
    }

    // k: components of Π₀.
    let pi_k: Vec<usize> = (0..r).filter(|&i| sigma.s[i] == 0).collect();
    let center_dim = n - pi_k.len().min(n);
    let comps = components(&cartan, &pi_k);
    let mut ideals = Vec::new();
    for comp in &comps {
        let sub: Vec<Vec<i64>> = comp.iter().map(|&i| comp.iter().map(|&j| cartan[i][j]).collect()).collect();
        let (kind, perm) = tables::finite_candidates(comp.len())
            .into_iter()
            .find_map(|c| tables::match_labeling(&sub, c).map(|p| (c, p)))
            .ok_or_else(|| Error::Internal(format!("cannot name ideal {comp:?}")))?;
        let nodes: Vec<usize> = perm.iter().map(|&p| comp[p]).collect();
        let pos = system.finite_positive(&nodes);
        let top = pos.iter().max_by_key(|m| m.iter().sum::<i64>()).unwrap();
        let (theta, _) = system.chart(top);
        let tl = system.form(&theta, &theta);
        let mut rho_s = linalg::zeros(n);
        for m in &pos {
            linalg::axpy(&mut rho_s, qr(1, 2), &system.chart(m).0);
        }
        let hd = qi(2) * system.form(&rho_s, &theta) / tl + Q::one();
        if !hd.is_integer() {
            return Err(Error::Internal("non-integral dual Coxeter number".into()));
        }
        let h_s = hd.to_integer();
        let c = qi(2) / tl;
        let n_s = qi(k) * c;
        let j = n_s * qi(h_dual) - qi(h_s);
        if !j.is_integer() {
            return Err(Error::Internal("non-integral level j_S".into()));
        }
        ideals.push(SimpleIdeal {
            kind,
            nodes,
            theta,
            h_dual: h_s,
            c,
            n_s,
            j: j.to_integer(),
        });
    }
    // Order ideals by their least datum node (the α₀ side first).
    ideals.sort_by_key(|s| *s.nodes.iter().min().unwrap());

    // Δ_k⁺ and ρ_k.
    let pos_k: Vec<Vec<Q>> = system
        .finite_positive(&pi_k)
        .iter()
        .map(|m| system.chart(m).0)
        .collect();
    let mut rho_k = linalg::zeros(n);
    for a in &pos_k {
        linalg::axpy(&mut rho_k, qr(1, 2), a);
    }

    // k̂ system.
    let slots = ideals.len() + center_dim;
    let mut tau: Vec<Q> = ideals.iter().map(|s| s.c.recip()).collect();
    if center_dim == 1 {
        tau.push(Q::one());
    }
    let mut ksimple = Vec::new();
    for (si, s) in ideals.iter().enumerate() {
        ksimple.push(SimpleRoot {
            fin: linalg::scale(-qi(1), &s.theta),
            del: Q::one(),
            slot: si,
        });
        for &node in &s.nodes {
            ksimple.push(SimpleRoot {
                fin: system.simple[node].fin.clone(),
                del: Q::zero(),
                slot: si,
            });
        }
    }
    let ksys = RootSystem::new(g.clone(), tau, ksimple);
    let mut lambda0k = Weight::zero(n, slots);
    let mut rho_k_hat = Weight::zero(n, slots);
    rho_k_hat.fin = rho_k.clone();
    for (si, s) in ideals.iter().enumerate() {
        lambda0k.lev[si] = qi(s.j);
        rho_k_hat.lev[si] = qi(s.h_dual);
    }
    if center_dim == 1 {
        lambda0k.lev[slots - 1] = qi(k * h_dual);
    }

    // Δ(p): finite parts of the δ′-level-one real roots.
    let mut pw: Vec<Vec<Q>> = system
        .positive_real_roots(Q::one())
        .iter()
        .map(|m| system.chart(m))
        .filter(|(_, d)| *d == Q::one())
        .map(|(f, _)| f)
        .collect();
    pw.sort();
    pw.dedup();
    let p_zero_mult = big_n - n;

    let hermitian_node = if center_dim == 1 && sigma.s[0] == 1 && marks[0] == 1 {
        (1..r).find(|&i| sigma.s[i] == 1 && marks[i] == 1)
    } else {
        None
    };
    let p_index = if matches!(t, LieType::Complex(_)) {
        Some(0)
    } else if center_dim == 0 {
        (0..r).find(|&i| sigma.s[i] != 0)
    } else {
        None
    };

    let mut datum = AffineDatum {
        lie: t,
        sigma: sigma.clone(),
        table,
        cartan,
        marks,
        comarks,
        gram,
        delta_prime_per_delta: qr(2, k),
        system,
        n,
        big_n,
        h_dual,
        rho_hat,
        p_index,
        hermitian_node,
        k_structure: KStructure {
            simple_ideals: ideals,
            pi_k,
            delta_k_per_delta_prime: qr(1, 2),
            lambda0k,
            rho_k_hat,
            rho_n: linalg::zeros(n),
            center_dim,
            positive_roots: pos_k,
            system: ksys,
        },
        classification: RootClassification {
            compact: vec![],
            noncompact: vec![],
            complex_: vec![],
            p_weights: pw,
            p_zero_mult,
            positive_p: vec![],
        },
        mu_structure: None,
    };
    if matches!(t, LieType::Simple(_)) {
        datum.mu_structure = Some(build_lprime(&datum)?);
    }
    datum.classification = classify_roots(&datum)?;
    let mut rho_n = linalg::zeros(n);
    for a in &datum.classification.positive_p {
        linalg::axpy(&mut rho_n, qr(1, 2), a);
    }
    datum.k_structure.rho_n = rho_n;
    Ok(datum)
}

/// Builds the μ-fixed data and the auxiliary algebra L′(g,σ).
pub fn build_lprime(d: &AffineDatum) -> Result<MuStructure> {
    if matches!(d.lie, LieType::Complex(_)) {
        return Err(Error::NotApplicable("L′ is not used in the complex case".into()));
    }
    let n = d.n;
    let sys = &d.system;
    let k = d.sigma.k;
    let f_nodes: Vec<usize> = (1..=n).collect();
    let pos_f = sys.finite_positive(&f_nodes);
    let omega = |m: &[i64]| -> i64 { (1..=n).map(|j| m[j] * d.sigma.s[j]).sum() };
    let mut even = Vec::new();
    let mut odd = Vec::new();
    let mut rho_f = linalg::zeros(n);
    for m in &pos_f {
        let f = sys.chart(m).0;
        linalg::axpy(&mut rho_f, qr(1, 2), &f);
        if omega(m).rem_euclid(2) == 0 {
            even.push(f);
        } else {
            odd.push(f);
        }
    }
    let top = pos_f.iter().max_by_key(|m| m.iter().sum::<i64>()).unwrap();
    let theta_f = sys.chart(top).0;
    let tl = sys.form(&theta_f, &theta_f);
    let pi_f: Vec<Vec<Q>> = (1..=n).map(|j| linalg::unit(n, j - 1)).collect();
    let (kind, simple) = if k == 1 {
        let mut s = vec![SimpleRoot {
            fin: linalg::scale(-qi(1), &theta_f),
            del: Q::one(),
            slot: 0,
        }];
        s.extend(pi_f.iter().map(|f| SimpleRoot {
            fin: f.clone(),
            del: Q::zero(),
            slot: 0,
        }));
        (LPrimeKind::KMu, s)
    } else if d.marks[0] == 1 {
        // Coroots 2β/(β,β)^μ with (·,·)^μ = (·,·)/2.
        let c0 = qi(4) / tl;
        let mut s = vec![SimpleRoot {
            fin: linalg::scale(-c0, &theta_f),
            del: c0,
            slot: 0,
        }];
        s.extend(pi_f.iter().map(|f| SimpleRoot {
            fin: linalg::scale(qi(4) / sys.form(f, f), f),
            del: Q::zero(),
            slot: 0,
        }));
        (LPrimeKind::KMuDual, s)
    } else {
        let mut s = vec![SimpleRoot {
            fin: linalg::scale(-qr(1, 2), &theta_f),
            del: qr(1, 2),
            slot: 0,
        }];
        s.extend(pi_f.iter().map(|f| SimpleRoot {
            fin: f.clone(),
            del: Q::zero(),
            slot: 0,
        }));
        (LPrimeKind::A2nDual, s)
    };
    let lprime = RootSystem::new(sys.gram.clone(), vec![qi(k)], simple);
    let lprime_rho = lprime.rho();

    // w₀: the element of W_k carrying the Δ_f⁺ chamber into the Δ_k⁺ chamber.
    let pi_k_fin: Vec<(usize, Vec<Q>)> = d
        .k_structure
        .pi_k
        .iter()
        .map(|&i| (i, sys.simple[i].fin.clone()))
        .collect();
    let mut x = rho_f.clone();
    let mut w0 = linalg::identity(n);
    let mut word = Vec::new();
    let mut guard = 0;
    while let Some((node, a)) = pi_k_fin.iter().find(|(_, a)| sys.form(&x, a) < Q::zero()) {
        let s = reflection_matrix(&sys.gram, a);
        x = linalg::mat_vec(&s, &x);
        w0 = linalg::mat_mul(&s, &w0);
        word.insert(0, *node);
        guard += 1;
        if guard > 10_000 {
            return Err(Error::Internal("w₀ descent did not terminate".into()));
        }
    }
    if pi_k_fin.iter().any(|(_, a)| sys.form(&x, a).is_zero()) {
        return Err(Error::Internal("ρ_f is singular for Δ_k".into()));
    }
    Ok(MuStructure {
        pi_f,
        delta_f_even: even,
        delta_f_odd: odd,
        lprime_kind: kind,
        lprime,
        lprime_rho,
        w0,
        w0_word: word,
        rho_f,
    })
}

/// Splits Δ_k ∪ Δ(p) into compact, noncompact and complex roots and fixes Δ⁺(p).
pub fn classify_roots(d: &AffineDatum) -> Result<RootClassification> {
    let dk: BTreeSet<Vec<Q>> = d.k_structure.roots().into_iter().collect();
    let p = &d.classification.p_weights;
    let pset: BTreeSet<Vec<Q>> = p.iter().cloned().collect();
    let compact: Vec<Vec<Q>> = dk.iter().filter(|a| !pset.contains(*a)).cloned().collect();
    let complex_: Vec<Vec<Q>> = dk.iter().filter(|a| pset.contains(*a)).cloned().collect();
    let noncompact: Vec<Vec<Q>> = p
        .iter()
        .filter(|a| !dk.contains(*a) && a.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    // Δ⁺(p): positive against a regular element of the Δ_k⁺ chamber.
    let reg: Vec<Q> = match (&d.lie, &d.mu_structure) {
        (LieType::Simple(_), Some(mu)) => linalg::mat_vec(&mu.w0, &mu.rho_f),
        _ => {
            let mut v = linalg::zeros(d.n);
            for a in &d.k_structure.positive_roots {
                linalg::axpy(&mut v, qr(1, 2), a);
            }
            v
        }
    };
    let mut positive_p = Vec::new();
    for a in p {
        if a.iter().all(|x| x.is_zero()) {
            continue;
        }
        let v = d.system.form(a, &reg);
        if v.is_zero() {
            return Err(Error::Internal("Δ(p) weight orthogonal to the chamber element".into()));
        }
        if v.is_positive() {
            positive_p.push(a.clone());
        }
    }
    Ok(RootClassification {
        compact,
        noncompact,
        complex_,
        p_weights: p.clone(),
        p_zero_mult: d.classification.p_zero_mult,
        positive_p,
    })
}

/// Roots (m+½)δ_k + α, α ∈ Δ(p), of δ_k-degree at most `depth`, on the k chart.
pub fn positive_p_roots(d: &AffineDatum, depth: Q) -> Vec<AffineRoot> {
    let mut out = Vec::new();
    let mut m = 0i64;
    loop {
        let lvl = qi(m) + qr(1, 2);
        if lvl > depth {
            break;
        }
        for a in &d.classification.p_weights {
            out.push(AffineRoot {
                level: lvl,
                finite: a.clone(),
                mult: 1,
            });
        }
        if d.classification.p_zero_mult > 0 {
            out.push(AffineRoot {
                level: lvl,
                finite: linalg::zeros(d.n),
                mult: d.classification.p_zero_mult as u32,
            });
        }
        m += 1;
    }
    out.sort();
    out
}

/// Order-two involutions of a simple type in normal form: inner with a
/// single node of mark 2, Hermitian with s₀ = sᵢ = 1 on a node of mark 1,
/// and, when the type has an outer involution, a single node of mark 1 in
/// the twisted diagram.
pub fn involution_normal_forms(t: Simple) -> Result<Vec<InvolutionSpec>> {
    let t = t.normalize()?;
    let mut out = Vec::new();
    let r = t.rank() + 1;
    let lie = LieType::Simple(t);
    let mut push = |spec: InvolutionSpec| {
        if build_affine_datum(lie, &spec).is_ok() {
            out.push(spec);
        }
    };
    for p in 1..r {
        push(InvolutionSpec::node(r, p, 1));
    }
    for i in 1..r {
        let mut s = vec![0; r];
        s[0] = 1;
        s[i] = 1;
        push(InvolutionSpec::new(&s, 1));
    }
    if let Some(tw) = tables::twisted_of(t) {
        let rt = tables::twisted_cartan(tw).len();
        for p in 0..rt {
            push(InvolutionSpec::node(rt, p, 2));
        }
    }
    Ok(out)
}

impl AffineDatum {
    /// Convenience constructor from strings like `("D4", &[0,1,0,0], 2)`.
    pub fn parse(algebra: &str, s: &[i64], k: i64) -> Result<AffineDatum> {
        build_affine_datum(algebra.parse()?, &InvolutionSpec::new(s, k))
    }

    /// The complex case k ⊕ k for a simple `t`.
    pub fn complex(t: Simple) -> Result<AffineDatum> {
        let r = t.normalize()?.rank() + 1;
        build_affine_datum(LieType::Complex(t), &InvolutionSpec::node(r, 0, 2))
    }

    /// Whether g is k ⊕ k.
    pub fn is_complex(&self) -> bool {
        matches!(self.lie, LieType::Complex(_))
    }

    /// dim p.
    pub fn dim_p(&self) -> usize {
        self.classification.p_weights.len() + self.classification.p_zero_mult
    }

    /// Ideal display names, e.g. `["A1", "C2"]`.
    pub fn ideal_names(&self) -> Vec<String> {
        self.k_structure
            .simple_ideals
            .iter()
            .map(|s| s.kind.to_string())
            .collect()
    }

    /// Whether the simple root α_p has maximal squared length.
    pub fn alpha_long(&self, p: usize) -> bool {
        let l = |i: usize| self.gram[i][i];
        let max = (0..self.system.size()).map(l).max().unwrap();
        l(p) == max
    }

    /// `⟨λ̄, α∨⟩` on finite parts.
    pub fn finite_coroot(&self, lam: &[Q], alpha: &[Q]) -> Q {
        qi(2) * self.system.form(lam, alpha) / self.system.form(alpha, alpha)
    }
}
