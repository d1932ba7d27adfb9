//! Independent verification by truncated formal characters: the product
//! formula for the level-one modules against Weyl–Kac characters of the
//! claimed components.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::branching::{self, Component, Decomposition, Rep};
use crate::error::{Error, Result};
use crate::linalg::{self, qi, qr, Q};
use crate::rootdata::AffineDatum;
use crate::system::Weight;
use crate::weylcomb::DEFAULT_CAP;

/// A formal character truncated by δ_k-degree below `base`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedCharacter {
    pub entries: BTreeMap<Weight, i64>,
    pub depth: Q,
    pub base: Q,
}

impl TruncatedCharacter {
    /// Empty character anchored at δ_k-coefficient `base`.
    pub fn new(base: Q, depth: Q) -> Self {
        TruncatedCharacter {
            entries: BTreeMap::new(),
            depth,
            base,
        }
    }

    /// δ_k-degree of a weight relative to the base.
    pub fn degree(&self, w: &Weight) -> Q {
        self.base - w.del
    }

    fn within(&self, w: &Weight) -> bool {
        let g = self.degree(w);
        !g.is_negative() && g <= self.depth
    }

    /// Adds `c·e^w` when `w` is inside the window.
    pub fn add_term(&mut self, w: Weight, c: i64) {
        if c == 0 || !self.within(&w) {
            return;
        }
        match self.entries.get_mut(&w) {
            Some(e) => {
                *e += c;
                if *e == 0 {
                    self.entries.remove(&w);
                }
            }
            None => {
                self.entries.insert(w, c);
            }
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, other: &TruncatedCharacter, c: i64) {
        for (w, m) in &other.entries {
            self.add_term(w.clone(), c * m);
        }
    }

    /// Multiplicity of a weight.
    pub fn get(&self, w: &Weight) -> i64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    /// Multiplies by `(1 + s·e^{−β})` with `s = ±1`.
    pub fn times_binomial(&mut self, beta: &Weight, sign: i64) {
        let shifted: Vec<(Weight, i64)> = self
            .entries
            .iter()
            .map(|(w, m)| (w.sub(beta), sign * m))
            .collect();
        for (w, m) in shifted {
            self.add_term(w, m);
        }
    }

    /// Multiplies by `1/(1 − e^{−β})` for β of positive degree.
    pub fn times_geometric(&mut self, beta: &Weight) {
        let base: Vec<(Weight, i64)> = self.entries.iter().map(|(w, m)| (w.clone(), *m)).collect();
        let mut t = 1i64;
        loop {
            let shift = beta.scale(qi(t));
            if shift.del > self.depth {
                break;
            }
            for (w, m) in &base {
                self.add_term(w.sub(&shift), *m);
            }
            t += 1;
        }
    }

    /// Restricts to weights satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(&Weight) -> bool) -> TruncatedCharacter {
        TruncatedCharacter {
            entries: self
                .entries
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, m)| (w.clone(), *m))
                .collect(),
            depth: self.depth,
            base: self.base,
        }
    }

    /// Copy with a new truncation depth (only shrinks meaningfully).
    pub fn truncate(&self, depth: Q) -> TruncatedCharacter {
        let mut out = TruncatedCharacter::new(self.base, depth);
        for (w, m) in &self.entries {
            out.add_term(w.clone(), *m);
        }
        out
    }
}

/// Parity of the product formula: even for basic ⊕ vector, odd for spin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

fn k_root(d: &AffineDatum, fin: &[Q], del: Q) -> Weight {
    Weight::root(fin.to_vec(), del, d.k_structure.system.slots())
}

/// ch(X_r) truncated at `depth`. With `signed`, each factor (1+e^{−β})
/// becomes (1−e^{−β}), giving the difference of the two halves.
pub fn product_character_signed(d: &AffineDatum, parity: Parity, depth: Q, signed: bool) -> TruncatedCharacter {
    let ks = &d.k_structure;
    let cls = &d.classification;
    let s = if signed { -1 } else { 1 };
    let zero = cls.p_zero_mult;
    match parity {
        Parity::Even => {
            let mut ch = TruncatedCharacter::new(ks.lambda0k.del, depth);
            ch.add_term(ks.lambda0k.clone(), 1);
            for r in crate::rootdata::positive_p_roots(d, depth) {
                let b = k_root(d, &r.finite, r.level);
                for _ in 0..r.mult {
                    ch.times_binomial(&b, s);
                }
            }
            ch
        }
        Parity::Odd => {
            let mut top = ks.lambda0k.clone();
            linalg::axpy(&mut top.fin, Q::one(), &ks.rho_n);
            let mut ch = TruncatedCharacter::new(top.del, depth);
            ch.add_term(top, 1i64 << (zero / 2));
            for a in &cls.positive_p {
                ch.times_binomial(&k_root(d, a, Q::zero()), s);
            }
            let mut j = 1i64;
            while qi(j) <= depth {
                for a in &cls.p_weights {
                    if a.iter().all(|x| x.is_zero()) {
                        continue;
                    }
                    ch.times_binomial(&k_root(d, a, qi(j)), s);
                }
                let b = k_root(d, &linalg::zeros(d.n), qi(j));
                for _ in 0..zero {
                    ch.times_binomial(&b, s);
                }
                j += 1;
            }
            ch
        }
    }
}

/// ch(X_r) truncated at `depth`.
pub fn product_character(d: &AffineDatum, parity: Parity, depth: Q) -> TruncatedCharacter {
    product_character_signed(d, parity, depth, false)
}

/// Checks Δ̂⁺_k-dominance and integrality.
pub fn check_dominant(d: &AffineDatum, lam: &Weight) -> Result<()> {
    let ksys = &d.k_structure.system;
    for i in 0..ksys.size() {
        let c = ksys.simple_pair(lam, i);
        if !c.is_integer() || c.is_negative() {
            return Err(Error::NotDominant(format!("{lam}")));
        }
    }
    Ok(())
}

/// Weyl–Kac numerator Σ ε(w) e^{w(λ+ρ̂)−ρ̂} restricted to degree ≤ depth.
fn numerator(d: &AffineDatum, lam: &Weight, depth: Q) -> Result<TruncatedCharacter> {
    let ks = &d.k_structure;
    let ksys = &ks.system;
    let rho = &ks.rho_k_hat;
    let start = lam.add(rho);
    let mut ch = TruncatedCharacter::new(lam.del, depth);
    let mut seen: HashSet<Weight> = HashSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    let mut sign = 1i64;
    while !frontier.is_empty() {
        for mu in &frontier {
            ch.add_term(mu.sub(rho), sign);
        }
        let mut next = Vec::new();
        for mu in &frontier {
            for i in 0..ksys.size() {
                if ksys.simple_pair(mu, i).is_positive() {
                    let nu = ksys.reflect(i, mu);
                    if lam.del - nu.del <= depth && seen.insert(nu.clone()) {
                        next.push(nu);
                    }
                }
            }
        }
        if seen.len() > DEFAULT_CAP {
            return Err(Error::CapExceeded(DEFAULT_CAP));
        }
        frontier = next;
        sign = -sign;
    }
    Ok(ch)
}

/// Divides a single δ-shell by (1 − e^{−α}) for a finite root α, returning
/// None when the quotient would not be finitely supported.
fn divide_shell(shell: &HashMap<Vec<Q>, i64>, alpha: &[Q]) -> Option<HashMap<Vec<Q>, i64>> {
    let c = alpha.iter().position(|x| !x.is_zero())?;
    // Group by α-string: key = μ − tα with t = μ_c/α_c.
    let mut strings: HashMap<Vec<Q>, Vec<(Q, i64)>> = HashMap::new();
    for (mu, m) in shell {
        let t = mu[c] / alpha[c];
        let key = linalg::sub(mu, &linalg::scale(t, alpha));
        strings.entry(key).or_default().push((t, *m));
    }
    let mut out = HashMap::new();
    for (key, mut pts) in strings {
        pts.sort_by_key(|p| std::cmp::Reverse(p.0));
        // Q(μ) = Σ_{s≥0} P(μ + sα), walking down from the top.
        let top = pts[0].0;
        let bottom = pts[pts.len() - 1].0;
        let mut acc = 0i64;
        let mut idx = 0;
        let mut t = top;
        while t >= bottom {
            while idx < pts.len() && pts[idx].0 == t {
                acc += pts[idx].1;
                idx += 1;
            }
            if acc != 0 {
                out.insert(linalg::add(&key, &linalg::scale(t, alpha)), acc);
            }
            t -= Q::one();
        }
        if acc != 0 {
            return None;
        }
    }
    Some(out)
}

/// ch L(λ) truncated at `depth` via the Weyl–Kac formula.
pub fn irreducible_character(d: &AffineDatum, lam: &Weight, depth: Q) -> Result<TruncatedCharacter> {
    check_dominant(d, lam)?;
    let ks = &d.k_structure;
    let ksys = &ks.system;
    let mut ch = numerator(d, lam, depth)?;
    // Positive-degree denominator factors.
    for m in ksys.positive_real_roots(depth) {
        let (fin, del) = ksys.chart(&m);
        if del.is_positive() {
            ch.times_geometric(&k_root(d, &fin, del));
        }
    }
    let mut j = 1i64;
    while qi(j) <= depth {
        let b = k_root(d, &linalg::zeros(d.n), qi(j));
        for _ in 0..d.n {
            ch.times_geometric(&b);
        }
        j += 1;
    }
    // Finite part, shell by shell.
    let mut shells: BTreeMap<(Q, Vec<Q>), HashMap<Vec<Q>, i64>> = BTreeMap::new();
    for (w, m) in &ch.entries {
        shells
            .entry((w.del, w.lev.clone()))
            .or_default()
            .insert(w.fin.clone(), *m);
    }
    let mut out = TruncatedCharacter::new(lam.del, depth);
    for ((del, lev), mut shell) in shells {
        for a in &ks.positive_roots {
            shell = divide_shell(&shell, a)
                .ok_or_else(|| Error::Internal("Weyl denominator does not divide the numerator".into()))?;
        }
        for (fin, m) in shell {
            out.add_term(
                Weight {
                    fin,
                    lev: lev.clone(),
                    del,
                },
                m,
            );
        }
    }
    Ok(out)
}

/// One nonzero entry of product minus claimed sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Residual {
    pub check: String,
    pub weight: Weight,
    pub degree: Q,
    pub value: i64,
}

/// Outcome of [`verify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub status: String,
    pub depth: Q,
    /// Number of δ-shells compared.
    pub shells: usize,
    pub warnings: Vec<String>,
    pub residuals: Vec<Residual>,
}

impl VerifyReport {
    /// True when every compared coefficient agrees.
    pub fn ok(&self) -> bool {
        self.residuals.is_empty()
    }
}

/// Weight of a component as it appears inside the product formula.
fn raw_weight(c: &Component, rep_shift: Q) -> Weight {
    let mut w = c.weight.clone();
    w.del -= rep_shift;
    w
}

/// Σ mult·sign·ch L(λ) over a component list, truncated at `depth`.
pub fn claimed_character(
    d: &AffineDatum,
    parts: &[(Weight, i64)],
    base: Q,
    depth: Q,
) -> Result<TruncatedCharacter> {
    let mut total = TruncatedCharacter::new(base, depth);
    for (w, c) in parts {
        let off = base - w.del;
        if off > depth {
            continue;
        }
        let ch = irreducible_character(d, w, depth - off)?;
        total.add_scaled(&ch, *c);
    }
    Ok(total)
}

fn diff(check: &str, lhs: &TruncatedCharacter, rhs: &TruncatedCharacter, out: &mut Vec<Residual>) {
    let mut keys: Vec<&Weight> = lhs.entries.keys().chain(rhs.entries.keys()).collect();
    keys.sort();
    keys.dedup();
    for k in keys {
        let v = lhs.get(k) - rhs.get(k);
        if v != 0 {
            out.push(Residual {
                check: check.into(),
                weight: k.clone(),
                degree: lhs.degree(k),
                value: v,
            });
        }
    }
}

fn shell_count(depth: Q, step: Q) -> usize {
    (depth / step).floor().to_integer() as usize + 1
}

fn report(depth: Q, shells: usize, residuals: Vec<Residual>) -> VerifyReport {
    let mut warnings = Vec::new();
    if shells < 2 {
        warnings.push("depth too small: fewer than two δ-shells compared".into());
    }
    VerifyReport {
        status: if residuals.is_empty() { "ok" } else { "fail" }.into(),
        depth,
        shells,
        warnings,
        residuals,
    }
}

/// Checks claimed basic and vector decompositions against the product
/// formula: both the sum and the signed difference.
pub fn verify_basic_vector(
    d: &AffineDatum,
    basic: &Decomposition,
    vector: &Decomposition,
    depth: Q,
) -> Result<VerifyReport> {
    let base = d.k_structure.lambda0k.del;
    let mut parts = Vec::new();
    for (dec, eps) in [(basic, 0i64), (vector, 1)] {
        for c in &dec.components {
            let m = (c.multiplicity * dec.global_multiplier) as i64;
            parts.push((raw_weight(c, qr(eps, 2)), m, eps));
        }
    }
    let mut residuals = Vec::new();
    for (signed, name) in [(false, "basic+vector"), (true, "basic-vector")] {
        let lhs = product_character_signed(d, Parity::Even, depth, signed);
        let p: Vec<(Weight, i64)> = parts
            .iter()
            .map(|(w, m, e)| (w.clone(), if signed && *e == 1 { -m } else { *m }))
            .collect();
        let rhs = claimed_character(d, &p, base, depth)?;
        diff(name, &lhs, &rhs, &mut residuals);
    }
    Ok(report(depth, shell_count(depth, qr(1, 2)), residuals))
}

/// Checks claimed spin decompositions; in the equal-rank case also the
/// difference of the two halves.
pub fn verify_spin(d: &AffineDatum, decs: &[Decomposition], depth: Q) -> Result<VerifyReport> {
    let ks = &d.k_structure;
    let base = ks.lambda0k.del;
    let mut parts = Vec::new();
    for (idx, dec) in decs.iter().enumerate() {
        for c in &dec.components {
            parts.push((c.weight.clone(), (c.multiplicity * dec.global_multiplier) as i64, idx));
        }
    }
    let mut residuals = Vec::new();
    let lhs = product_character(d, Parity::Odd, depth);
    let p: Vec<(Weight, i64)> = parts.iter().map(|(w, m, _)| (w.clone(), *m)).collect();
    diff("spin", &lhs, &claimed_character(d, &p, base, depth)?, &mut residuals);
    let equal_rank = d.classification.p_zero_mult == 0 && decs.len() == 2;
    if equal_rank {
        let lhs = product_character_signed(d, Parity::Odd, depth, true);
        let p: Vec<(Weight, i64)> = parts
            .iter()
            .map(|(w, m, i)| (w.clone(), if *i == 1 { -m } else { *m }))
            .collect();
        diff("spin top-second", &lhs, &claimed_character(d, &p, base, depth)?, &mut residuals);
    }
    Ok(report(depth, shell_count(depth, Q::one()), residuals))
}

/// Hermitian check: the product formula restricted to each charge in
/// `charges` against the union of the claimed eigenspace decompositions.
pub fn verify_hermitian(d: &AffineDatum, rep: Rep, charges: &[i64], depth: Q) -> Result<VerifyReport> {
    let i = d.hermitian_node.ok_or(Error::NotHermitian)?;
    let base = d.k_structure.lambda0k.del;
    let mut residuals = Vec::new();
    let (parity, offset, eps) = match rep {
        Rep::Basic => (Parity::Even, Q::zero(), 0i64),
        Rep::Vector => (Parity::Even, Q::zero(), 1),
        Rep::Spin => (Parity::Odd, branching::hermitian_spin_offset(d), 0),
    };
    let full = product_character(d, parity, depth);
    let signed = product_character_signed(d, parity, depth, true);
    for &q in charges {
        let target = offset + qi(q);
        let at = |w: &Weight| w.fin[i - 1] == target;
        let dec = branching::decompose_hermitian(d, rep, q)?;
        let mut p = Vec::new();
        for c in &dec.components {
            p.push((raw_weight(c, qr(eps, 2)), c.multiplicity as i64));
        }
        let claimed = claimed_character(d, &p, base, depth)?;
        let want = match rep {
            // Basic and vector occupy opposite parities of the even product.
            Rep::Basic | Rep::Vector => {
                let mut w = full.filter(at);
                let s = if eps == 0 { 1 } else { -1 };
                w.add_scaled(&signed.filter(at), s);
                let mut half = TruncatedCharacter::new(w.base, w.depth);
                for (k, v) in &w.entries {
                    half.add_term(k.clone(), v / 2);
                }
                half
            }
            Rep::Spin => full.filter(at),
        };
        diff(&format!("{rep} q={q}"), &want, &claimed, &mut residuals);
    }
    let step = if rep == Rep::Spin { Q::one() } else { qr(1, 2) };
    Ok(report(depth, shell_count(depth, step), residuals))
}

/// Charges checked by [`verify`] on Hermitian data.
pub const DEFAULT_CHARGES: std::ops::RangeInclusive<i64> = -3..=3;

/// Decomposes and verifies in one call. Hermitian data are checked per
/// charge over [`DEFAULT_CHARGES`].
pub fn verify(d: &AffineDatum, rep: Rep, depth: Q) -> Result<VerifyReport> {
    if d.hermitian_node.is_some() {
        let charges: Vec<i64> = DEFAULT_CHARGES.collect();
        return verify_hermitian(d, rep, &charges, depth);
    }
    match rep {
        Rep::Basic | Rep::Vector => {
            let b = branching::decompose_basic_vector(d, 0)?;
            let v = branching::decompose_basic_vector(d, 1)?;
            verify_basic_vector(d, &b, &v, depth)
        }
        Rep::Spin => {
            let s = branching::decompose_spin(d)?;
            verify_spin(d, &s, depth)
        }
    }
}
