//! Text and JSON documents emitted by the command line front end.
//!
//! Every JSON document deserializes back into the type it was written
//! from, and re-serializing reproduces the same bytes.

use std::fmt::Write;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use affbranch_core::branching::fundamental_string;
use affbranch_core::charoracle::{Residual, VerifyReport};
use affbranch_core::weylcomb::{word_string, WeylElement};
use affbranch_core::{AffineDatum, Decomposition, InvolutionSpec, Label, Q};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// `(s₀,…,sₙ;k)`.
pub fn spec_string(s: &InvolutionSpec) -> String {
    let parts: Vec<String> = s.s.iter().map(i64::to_string).collect();
    format!("({};{})", parts.join(","), s.k)
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("documents serialize");
    s.push('\n');
    s
}

/// Header shared by the datum-bound documents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumHeader {
    pub algebra: String,
    pub sigma: Vec<i64>,
    pub k: i64,
    pub table: String,
    pub ideals: Vec<String>,
}

impl DatumHeader {
    pub fn of(d: &AffineDatum) -> Self {
        DatumHeader {
            algebra: d.lie.to_string(),
            sigma: d.sigma.s.clone(),
            k: d.sigma.k,
            table: d.table.clone(),
            ideals: d.ideal_names(),
        }
    }

    fn text(&self) -> String {
        let mut k = self.ideals.join(" ⊕ ");
        if k.is_empty() {
            k = "abelian".into();
        }
        format!(
            "# {} {} on {}, k = {}\n",
            self.algebra,
            spec_string(&InvolutionSpec::new(&self.sigma, self.k)),
            self.table,
            k
        )
    }
}

/// One component in the JSON schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDoc {
    /// Ideal names joined by ` ⊗ `.
    pub ideal: String,
    /// Fundamental-weight coefficients per ideal.
    pub coeffs: Vec<Vec<i64>>,
    /// Coefficient of δ_k as `p/q`; absent modulo δ.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<String>,
    pub mult: u64,
    pub label: Label,
    pub hwv: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub charge: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDoc {
    pub module: String,
    pub multiplier: u64,
    pub components: Vec<ComponentDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeDoc {
    #[serde(flatten)]
    pub datum: DatumHeader,
    pub modules: Vec<ModuleDoc>,
}

fn label_text(l: &Label) -> String {
    match l {
        Label::Abelian { subspace } => format!("abelian |A|={}", subspace.len()),
        Label::WSigma => "w_sigma".into(),
        Label::HermitianPair { subspace, k } => format!("hermitian |I|={} k={k}", subspace.len()),
        Label::LatticePath { composition } => format!("path {composition:?}"),
    }
}

/// Decomposition listing, one component per line in text mode.
pub fn decompositions(d: &AffineDatum, decs: &[Decomposition], mod_delta: bool, f: Format) -> String {
    let ideal = d.ideal_names().join(" ⊗ ");
    let doc = DecomposeDoc {
        datum: DatumHeader::of(d),
        modules: decs
            .iter()
            .map(|dec| ModuleDoc {
                module: dec.module_id.to_string(),
                multiplier: dec.global_multiplier,
                components: dec
                    .components
                    .iter()
                    .map(|c| ComponentDoc {
                        ideal: ideal.clone(),
                        coeffs: c.ideal_coeffs.clone(),
                        delta: (!mod_delta).then(|| c.delta.to_string()),
                        mult: c.multiplicity,
                        label: c.label.clone(),
                        hwv: c.hwv.clone(),
                        charge: c.charge.map(|q| q.to_string()),
                    })
                    .collect(),
            })
            .collect(),
    };
    match f {
        Format::Json => json(&doc),
        Format::Text => decompositions_text(&doc),
    }
}

fn weight_text(coeffs: &[Vec<i64>]) -> String {
    coeffs
        .iter()
        .map(|c| format!("L({})", fundamental_string(c)))
        .collect::<Vec<_>>()
        .join(" ⊗ ")
}

fn decompositions_text(doc: &DecomposeDoc) -> String {
    let mut out = doc.datum.text();
    for m in &doc.modules {
        let _ = writeln!(out, "[{}] x{}", m.module, m.multiplier);
        for c in &m.components {
            let mut line = format!("  {}", weight_text(&c.coeffs));
            if let Some(delta) = &c.delta {
                let _ = write!(line, "  delta {delta}");
            }
            if let Some(q) = &c.charge {
                let _ = write!(line, "  charge {q}");
            }
            if c.mult != 1 || c.delta.is_some() {
                let _ = write!(line, "  mult {}", c.mult);
            }
            if c.delta.is_some() {
                let _ = write!(line, "  {}", label_text(&c.label));
            }
            out.push_str(&line);
            out.push('\n');
        }
    }
    out
}

/// One enumerated element with its reduced word and inversion set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementDoc {
    pub word: Vec<usize>,
    pub inversions: Vec<Vec<i64>>,
    pub label: serde_json::Value,
}

/// A list of enumerated elements.
pub struct Doc(Vec<ElementDoc>);

fn weights_strings(ws: &[Vec<Q>]) -> Vec<Vec<String>> {
    ws.iter().map(|w| w.iter().map(Q::to_string).collect()).collect()
}

impl Doc {
    pub fn elements(ws: &[WeylElement], label: impl Fn(&WeylElement) -> String) -> Self {
        Doc(ws
            .iter()
            .map(|w| ElementDoc {
                word: w.word.clone(),
                inversions: w.inversions.clone(),
                label: serde_json::Value::String(label(w)),
            })
            .collect())
    }

    /// Subspaces with their witnesses; `split` carries (|A⁺|, |A⁻|).
    pub fn subspaces<'a>(items: impl Iterator<Item = (&'a WeylElement, &'a Vec<Vec<Q>>, Option<(usize, usize)>)>) -> Self {
        Doc(items
            .map(|(w, a, split)| {
                let mut label = serde_json::json!({ "kind": "abelian", "weights": weights_strings(a) });
                if let Some((p, m)) = split {
                    label["plus"] = p.into();
                    label["minus"] = m.into();
                }
                ElementDoc {
                    word: w.word.clone(),
                    inversions: w.inversions.clone(),
                    label,
                }
            })
            .collect())
    }

    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Json => json(&self.0),
            Format::Text => {
                let mut out = format!("# {} elements\n", self.0.len());
                for e in &self.0 {
                    let label = match &e.label {
                        serde_json::Value::String(s) => s.clone(),
                        v => {
                            let mut s = format!("|A|={}", v["weights"].as_array().map_or(0, Vec::len));
                            if let (Some(p), Some(m)) = (v["plus"].as_u64(), v["minus"].as_u64()) {
                                let _ = write!(s, " plus {p} minus {m}");
                            }
                            s
                        }
                    };
                    let _ = writeln!(out, "{}  len {}  {label}", word_string(&e.word), e.inversions.len());
                }
                out
            }
        }
    }
}

/// One order-two involution in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionDoc {
    pub sigma: Vec<i64>,
    pub k: i64,
    pub table: String,
    pub ideals: Vec<String>,
    pub center: usize,
    pub dim_p: usize,
    pub hermitian_node: Option<usize>,
}

pub fn involutions(data: &[AffineDatum], f: Format) -> String {
    let docs: Vec<InvolutionDoc> = data
        .iter()
        .map(|d| InvolutionDoc {
            sigma: d.sigma.s.clone(),
            k: d.sigma.k,
            table: d.table.clone(),
            ideals: d.ideal_names(),
            center: d.k_structure.center_dim,
            dim_p: d.dim_p(),
            hermitian_node: d.hermitian_node,
        })
        .collect();
    match f {
        Format::Json => json(&docs),
        Format::Text => {
            let mut out = format!("# {} involutions\n", docs.len());
            for x in &docs {
                let mut k = x.ideals.join(" ⊕ ");
                if x.center > 0 {
                    let _ = write!(k, " ⊕ C^{}", x.center);
                }
                let _ = writeln!(
                    out,
                    "{}  {}  k = {}  dim p = {}",
                    spec_string(&InvolutionSpec::new(&x.sigma, x.k)),
                    x.table,
                    k,
                    x.dim_p
                );
            }
            out
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub rep: String,
    pub status: String,
    pub shells: usize,
    pub warnings: Vec<String>,
}

/// Verification report; `residuals` collects every check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub status: String,
    pub depth: String,
    #[serde(flatten)]
    pub datum: DatumHeader,
    pub checks: Vec<CheckDoc>,
    pub residuals: Vec<Residual>,
}

pub fn verification(d: &AffineDatum, depth: Q, checks: &[(String, VerifyReport)], f: Format) -> String {
    let ok = checks.iter().all(|(_, r)| r.ok());
    let doc = VerifyDoc {
        status: if ok { "ok" } else { "fail" }.into(),
        depth: depth.to_string(),
        datum: DatumHeader::of(d),
        checks: checks
            .iter()
            .map(|(rep, r)| CheckDoc {
                rep: rep.clone(),
                status: r.status.clone(),
                shells: r.shells,
                warnings: r.warnings.clone(),
            })
            .collect(),
        residuals: checks.iter().flat_map(|(_, r)| r.residuals.iter().cloned()).collect(),
    };
    match f {
        Format::Json => json(&doc),
        Format::Text => {
            let mut out = doc.datum.text();
            let _ = writeln!(out, "status {}  depth {}", doc.status, doc.depth);
            for c in &doc.checks {
                let _ = writeln!(out, "  {}: {} over {} shells", c.rep, c.status, c.shells);
                for w in &c.warnings {
                    let _ = writeln!(out, "    warning: {w}");
                }
            }
            for r in doc.residuals.iter().take(20) {
                let _ = writeln!(out, "  residual {}: {} at degree {} -> {}", r.check, r.weight, r.degree, r.value);
            }
            if doc.residuals.len() > 20 {
                let _ = writeln!(out, "  ... {} more", doc.residuals.len() - 20);
            }
            out
        }
    }
}

/// Debug dump of the datum.
pub fn inspect(d: &AffineDatum, f: Format) -> String {
    match f {
        Format::Json => json(d),
        Format::Text => {
            let ks = &d.k_structure;
            let mut out = DatumHeader::of(d).text();
            let _ = writeln!(out, "marks {:?}  comarks {:?}", d.marks, d.comarks);
            let _ = writeln!(out, "dim p = {}  N = {}  n = {}", d.dim_p(), d.big_n, d.n);
            for s in &ks.simple_ideals {
                let _ = writeln!(out, "ideal {}  level {}", s.kind, s.n_s);
            }
            if ks.center_dim > 0 {
                let _ = writeln!(out, "center dim {}", ks.center_dim);
            }
            if let Some(i) = d.hermitian_node {
                let _ = writeln!(out, "hermitian node {i}");
            }
            if let Some(p) = d.p_index {
                let _ = writeln!(out, "p = {p}  alpha_p long: {}", d.alpha_long(p));
            }
            let _ = writeln!(out, "Lambda_0k = {}", ks.lambda0k);
            out
        }
    }
}
