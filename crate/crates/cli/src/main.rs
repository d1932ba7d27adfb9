//! `affbranch`: decompose, enumerate, verify and inspect level-one
//! branchings from the command line.

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use affbranch_core::branching::{self, decompose_hermitian};
use affbranch_core::charoracle::{self, VerifyReport, DEFAULT_CHARGES};
use affbranch_core::rootdata::involution_normal_forms;
use affbranch_core::weylcomb::{self, DEFAULT_CAP};
use affbranch_core::{build_affine_datum, tables, AffineDatum, Decomposition, InvolutionSpec, LieType, Rep, Q};

use affbranch_cli::output::{self, Doc, Format};

#[derive(Parser, Debug)]
#[command(name = "affbranch", version, about = "Branching of level-one orthogonal affine modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose basic, vector or spin modules over k̂.
    Decompose(DecomposeArgs),
    /// List Weyl group elements and subspaces of a datum, or the involutions of an algebra.
    Enumerate(EnumerateArgs),
    /// Check decompositions against truncated characters.
    Verify(VerifyArgs),
    /// Dump the affine datum of an involution.
    Inspect(InspectArgs),
}

#[derive(Args, Debug, Clone)]
struct DatumArgs {
    /// Simple type such as `D4`, or `complex:A3` for k ⊕ k.
    #[arg(long)]
    algebra: String,
    /// Comma list s₀,…,sₙ.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "node")]
    sigma: Option<Vec<i64>>,
    /// Order of the diagram automorphism.
    #[arg(long, default_value_t = 1)]
    k: i64,
    /// Shorthand for a single nonzero sₚ = 1.
    #[arg(long)]
    node: Option<usize>,
    /// Enumeration cap.
    #[arg(long, env = "AFFBRANCH_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct DecomposeArgs {
    #[command(flatten)]
    datum: DatumArgs,
    #[arg(long, value_enum, default_value_t = RepArg::All)]
    rep: RepArg,
    /// Charge or range `a..b` for Hermitian data.
    #[arg(long, allow_hyphen_values = true)]
    charge: Option<String>,
    /// Print weights modulo δ.
    #[arg(long)]
    mod_delta: bool,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[command(flatten)]
    datum: DatumArgs,
    #[arg(long, value_enum)]
    what: What,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    datum: DatumArgs,
    #[arg(long, value_enum, default_value_t = RepArg::All)]
    rep: RepArg,
    /// Truncation depth in units of δ, e.g. `2` or `5/2`.
    #[arg(long, default_value = "2")]
    depth: String,
    /// Charge or range `a..b` for Hermitian data.
    #[arg(long, allow_hyphen_values = true)]
    charge: Option<String>,
}

#[derive(Args, Debug)]
struct InspectArgs {
    #[command(flatten)]
    datum: DatumArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum RepArg {
    Basic,
    Vector,
    Spin,
    All,
}

impl RepArg {
    fn reps(self) -> Vec<Rep> {
        match self {
            RepArg::Basic => vec![Rep::Basic],
            RepArg::Vector => vec![Rep::Vector],
            RepArg::Spin => vec![Rep::Spin],
            RepArg::All => vec![Rep::Basic, Rep::Vector, Rep::Spin],
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum What {
    /// b₀-stable abelian subspaces of p.
    Abelian,
    /// Coset representatives for the basic and vector modules.
    Reps,
    /// Coset representatives for the spin module.
    SpinReps,
    /// σ-minuscule elements.
    Minuscule,
    /// Abelian subspaces containing −ᾱ_i.
    Hermitian,
    /// Normal forms of the order-two involutions of the algebra.
    Involutions,
}

/// Errors that map to exit status 2.
#[derive(Debug)]
struct VerificationFailed;

impl std::fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("verification failed")
    }
}

impl std::error::Error for VerificationFailed {}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(doc) => {
            print!("{doc}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = status_of(&e);
            if code == 1 {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(code)
        }
    }
}

/// 2 for a failed verification, 1 for anything else.
fn status_of(e: &anyhow::Error) -> u8 {
    if e.is::<VerificationFailed>() {
        2
    } else {
        1
    }
}

fn run(command: Command) -> Result<String> {
    match command {
        Command::Decompose(a) => decompose(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Verify(a) => verify(a),
        Command::Inspect(a) => {
            let d = datum(&a.datum)?;
            Ok(output::inspect(&d, a.datum.format))
        }
    }
}

fn lie_type(args: &DatumArgs) -> Result<LieType> {
    Ok(args.algebra.parse()?)
}

/// Builds the datum, filling in the complex case and `--node`.
fn datum(args: &DatumArgs) -> Result<AffineDatum> {
    let lie = lie_type(args)?;
    let spec = match (&lie, &args.sigma, args.node) {
        (LieType::Complex(t), None, None) => InvolutionSpec::node(t.normalize()?.rank() + 1, 0, 2),
        (_, Some(s), _) => InvolutionSpec::new(s, args.k),
        (LieType::Simple(t), None, Some(p)) => {
            let t = t.normalize()?;
            let len = match args.k {
                2 => tables::twisted_of(t)
                    .map(|tw| tables::twisted_cartan(tw).len())
                    .ok_or_else(|| anyhow!("{t} has no outer involution"))?,
                _ => t.rank() + 1,
            };
            if p >= len {
                bail!("--node {p} is out of range for {len} nodes");
            }
            InvolutionSpec::node(len, p, args.k)
        }
        (LieType::Complex(_), None, Some(_)) => bail!("--node does not apply to the complex case"),
        (LieType::Simple(_), None, None) => bail!("give --sigma or --node"),
    };
    build_affine_datum(lie, &spec).with_context(|| format!("{} {}", args.algebra, output::spec_string(&spec)))
}

/// `3`, `-3..3` or `-3..=3`.
fn parse_charges(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let a: i64 = a.trim().parse().with_context(|| format!("bad charge range '{s}'"))?;
        let b: i64 = b.trim().trim_start_matches('=').parse().with_context(|| format!("bad charge range '{s}'"))?;
        if a > b {
            bail!("empty charge range '{s}'");
        }
        Ok((a..=b).collect())
    } else {
        Ok(vec![s.parse().with_context(|| format!("bad charge '{s}'"))?])
    }
}

fn parse_depth(s: &str) -> Result<Q> {
    let q: Q = s.trim().parse().map_err(|_| anyhow!("bad depth '{s}'"))?;
    if q <= Q::from_integer(0) {
        bail!("depth must be positive");
    }
    Ok(q)
}

fn decompose(a: DecomposeArgs) -> Result<String> {
    let d = datum(&a.datum)?;
    let mut decs: Vec<Decomposition> = Vec::new();
    if d.hermitian_node.is_some() {
        let charges = a
            .charge
            .as_deref()
            .map(parse_charges)
            .transpose()?
            .ok_or_else(|| anyhow!("k has a center; pass --charge q or a..b"))?;
        for rep in a.rep.reps() {
            for &q in &charges {
                let dec = decompose_hermitian(&d, rep, q)?;
                if !dec.components.is_empty() {
                    decs.push(dec);
                }
            }
        }
    } else {
        if a.charge.is_some() {
            bail!("--charge applies only to Hermitian data");
        }
        for rep in a.rep.reps() {
            decs.extend(branching::decompose(&d, rep, a.datum.cap)?);
        }
    }
    Ok(output::decompositions(&d, &decs, a.mod_delta, a.datum.format))
}

fn enumerate(a: EnumerateArgs) -> Result<String> {
    let f = a.datum.format;
    if a.what == What::Involutions {
        let t = match lie_type(&a.datum)? {
            LieType::Simple(t) => t,
            LieType::Complex(_) => bail!("involutions are listed for simple algebras"),
        };
        let specs = involution_normal_forms(t)?;
        let data = specs
            .iter()
            .map(|s| build_affine_datum(LieType::Simple(t), s))
            .collect::<affbranch_core::Result<Vec<_>>>()?;
        return Ok(output::involutions(&data, f));
    }
    let d = datum(&a.datum)?;
    let cap = a.datum.cap;
    let doc = match a.what {
        What::Abelian => {
            let subs = weylcomb::abelian_subspaces(&d)?;
            Doc::subspaces(subs.iter().map(|s| (&s.witness, &s.weights, None)))
        }
        What::Hermitian => {
            let subs = weylcomb::hermitian_fundamental_subspaces(&d)?;
            Doc::subspaces(subs.iter().map(|(s, p, m)| (&s.witness, &s.weights, Some((*p, *m)))))
        }
        What::Reps => {
            let ws = weylcomb::w_sigma(&d).ok();
            Doc::elements(&weylcomb::reps_even(&d, cap)?, |w| {
                if ws.as_ref().is_some_and(|x| x.inversions == w.inversions) {
                    "w_sigma".into()
                } else {
                    "minuscule".into()
                }
            })
        }
        What::SpinReps => Doc::elements(&weylcomb::reps_spin(&d, cap)?, |_| "spin".into()),
        What::Minuscule => Doc::elements(&weylcomb::enumerate_minuscule(&d)?, |_| "minuscule".into()),
        What::Involutions => unreachable!(),
    };
    Ok(doc.render(f))
}

fn verify(a: VerifyArgs) -> Result<String> {
    let d = datum(&a.datum)?;
    let depth = parse_depth(&a.depth)?;
    let mut checks: Vec<(String, VerifyReport)> = Vec::new();
    if d.hermitian_node.is_some() {
        let charges = match a.charge.as_deref() {
            Some(s) => parse_charges(s)?,
            None => DEFAULT_CHARGES.collect(),
        };
        for rep in a.rep.reps() {
            checks.push((rep.to_string(), charoracle::verify_hermitian(&d, rep, &charges, depth)?));
        }
    } else {
        if a.charge.is_some() {
            bail!("--charge applies only to Hermitian data");
        }
        // Basic and vector share one check.
        let mut reps = a.rep.reps();
        if reps.contains(&Rep::Basic) && reps.contains(&Rep::Vector) {
            reps.retain(|r| *r != Rep::Vector);
        }
        for rep in reps {
            let name = if rep == Rep::Spin { "spin" } else { "basic+vector" };
            checks.push((name.into(), charoracle::verify(&d, rep, depth)?));
        }
    }
    let ok = checks.iter().all(|(_, r)| r.ok());
    let doc = output::verification(&d, depth, &checks, a.datum.format);
    if ok {
        Ok(doc)
    } else {
        print!("{doc}");
        Err(VerificationFailed.into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charges_parse_as_points_and_ranges() {
        assert_eq!(parse_charges("2").unwrap(), [2]);
        assert_eq!(parse_charges("-1..1").unwrap(), [-1, 0, 1]);
        assert_eq!(parse_charges("-1..=1").unwrap(), [-1, 0, 1]);
        assert!(parse_charges("3..1").is_err());
        assert!(parse_charges("x").is_err());
    }

    #[test]
    fn depth_must_be_positive() {
        assert_eq!(parse_depth("5/2").unwrap(), Q::new(5, 2));
        assert!(parse_depth("0").is_err());
        assert!(parse_depth("two").is_err());
    }

    #[test]
    fn failed_verification_exits_with_two() {
        assert_eq!(status_of(&VerificationFailed.into()), 2);
        assert_eq!(status_of(&anyhow!("bad input")), 1);
    }

    #[test]
    fn node_shorthand_fills_the_sigma_vector() {
        let cli = Cli::try_parse_from(["affbranch", "inspect", "--algebra", "D4", "--node", "1", "--k", "2"]).unwrap();
        let Command::Inspect(a) = cli.command else { panic!() };
        let d = datum(&a.datum).unwrap();
        assert_eq!(d.sigma.s, [0, 1, 0, 0]);
    }
}
