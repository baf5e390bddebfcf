//! `manset` — exact-arithmetic calculators for manifold sets.
//!
//! Subcommands map one-to-one onto the library operations: `lpoly`,
//! `divspec`, `lgroup`, `normal`, `structure`, `decide`, `theorem-b`,
//! `theorem-c`, `theorem-e` and `validate`.  Results print as aligned text
//! by default; `--format json` emits a machine-readable document carrying
//! the same numbers.  Exit codes: 0 on success, 1 on domain errors, 2 on
//! usage errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use manset_core::homology::{
    parse_builtin, validate, FgAbelianGroup, ManifoldDescriptor, Pi1, Violation,
};
use manset_core::lattice::{divisibility_spectrum, AffineSublattice, LatticeBasis};
use manset_core::lpoly::{denominator_constants, l_polynomial, LPolynomial};
use manset_core::surgery::{
    decide_simply_connected, l_group_free_abelian, l_group_z, normal_invariants_integral,
    normal_invariants_rational, structure_set, theorem_b_check, theorem_c_summary,
    theorem_e_bound, ExtensionPresentation, TheoremBCondition, Verdict, VerdictStatus,
};

#[derive(Parser)]
#[command(name = "manset", version, about = "Exact-arithmetic invariants of manifold sets")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct DescriptorInput {
    /// Path to a descriptor JSON file.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Built-in manifold, e.g. "cpn(3)", "sphere(9)", "wg(2,1)",
    /// "mrg(3,6,1)", "torus(5)".
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConditionKind {
    /// Stable tangent bundle of a homotopy-equivalent model is trivial.
    Parallelizable,
    /// A finite-index lattice pair inside the cleared FH^{4k}.
    LatticePair,
    /// Duality fundamental group with a nonzero-degree classifying map.
    PdGroup,
}

#[derive(Subcommand)]
enum Command {
    /// Print an L-polynomial with its denominator constants.
    Lpoly {
        /// Weight of the polynomial (1..=8).
        #[arg(long)]
        k: usize,
        /// Integrality parameter for the Pontryagin classes.
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
    /// Distinct divisibility values realised by a full affine sublattice.
    Divspec {
        /// Offset vector, comma-separated: "1,0".
        #[arg(long)]
        offset: String,
        /// Basis rows, semicolon-separated: "2,0;0,2".
        #[arg(long)]
        basis: String,
        /// Number of distinct values to produce.
        #[arg(long)]
        count: usize,
    },
    /// L-groups of Z, or of Z[Z^r] when --r is given.
    Lgroup {
        /// Homological degree (any integer; the groups are 4-periodic).
        #[arg(long)]
        n: i64,
        /// Rank of the free-abelian fundamental group.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Normal invariants of a manifold descriptor.
    Normal {
        #[command(flatten)]
        input: DescriptorInput,
    },
    /// Structure-set presentation of a manifold descriptor.
    Structure {
        #[command(flatten)]
        input: DescriptorInput,
    },
    /// Decide whether the structure and manifold sets are infinite
    /// (simply connected, dimension at least 5).
    Decide {
        #[command(flatten)]
        input: DescriptorInput,
    },
    /// Sufficient conditions for an infinite manifold set over a
    /// nontrivial fundamental group.
    TheoremB {
        #[command(flatten)]
        input: DescriptorInput,
        #[arg(long, value_enum)]
        condition: ConditionKind,
        /// Weight k for the lattice-pair condition.
        #[arg(long)]
        k: Option<usize>,
        /// Sub-lattice rows for the lattice-pair condition: "2,0;0,2".
        #[arg(long)]
        sub: Option<String>,
        /// Super-lattice rows for the lattice-pair condition.
        #[arg(long)]
        sup: Option<String>,
        /// Degree of the classifying map for the pd-group condition.
        #[arg(long)]
        degree: Option<i64>,
        /// Assert that the image of the normal-invariant map is infinite
        /// (used when it cannot be computed from the descriptor).
        #[arg(long)]
        eta_infinite: bool,
    },
    /// Structure set versus polarised manifold set for the boundary
    /// manifolds M_{r,g}.
    TheoremC {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        k: usize,
    },
    /// Counting bound for the polarised smooth manifold set of M_{r,g}.
    TheoremE {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        g: u64,
        #[arg(long)]
        k: u64,
        /// Orders "a,b,c" of the exotic-sphere groups in dimensions 4k+2,
        /// 4k+1 (mod bP) and 4k; required for k >= 2.
        #[arg(long)]
        orders: Option<String>,
    },
    /// Validate a descriptor and list violations.
    Validate {
        #[command(flatten)]
        input: DescriptorInput,
    },
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn domain(e: impl std::fmt::Display) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(message)) => {
            eprintln!("usage error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let (text, json) = match &cli.command {
        Command::Lpoly { k, t } => cmd_lpoly(*k, *t)?,
        Command::Divspec {
            offset,
            basis,
            count,
        } => cmd_divspec(offset, basis, *count)?,
        Command::Lgroup { n, r } => cmd_lgroup(*n, *r),
        Command::Normal { input } => cmd_normal(&load_valid(input)?)?,
        Command::Structure { input } => cmd_structure(&load_valid(input)?)?,
        Command::Decide { input } => cmd_decide(&load_valid(input)?)?,
        Command::TheoremB {
            input,
            condition,
            k,
            sub,
            sup,
            degree,
            eta_infinite,
        } => cmd_theorem_b(
            &load_valid(input)?,
            *condition,
            *k,
            sub.as_deref(),
            sup.as_deref(),
            *degree,
            *eta_infinite,
        )?,
        Command::TheoremC { r, g, k } => cmd_theorem_c(*r, *g, *k)?,
        Command::TheoremE { r, g, k, orders } => cmd_theorem_e(*r, *g, *k, orders.as_deref())?,
        Command::Validate { input } => {
            let d = load_raw(input)?;
            return cmd_validate(&d, cli.format);
        }
    };
    emit(cli.format, &text, json);
    Ok(())
}

fn emit(format: Format, text: &str, json: Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&json).expect("serializable")),
    }
}

fn load_raw(input: &DescriptorInput) -> Result<ManifoldDescriptor, CliError> {
    match (&input.file, &input.builtin) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
            ManifoldDescriptor::from_json_str(&text).map_err(CliError::domain)
        }
        (None, Some(spec)) => parse_builtin(spec).map_err(CliError::domain),
        _ => Err(CliError::Usage(
            "exactly one of --file or --builtin is required".into(),
        )),
    }
}

fn load_valid(input: &DescriptorInput) -> Result<ManifoldDescriptor, CliError> {
    let d = load_raw(input)?;
    let violations = validate(&d);
    if violations.is_empty() {
        Ok(d)
    } else {
        let mut message = String::from("invalid descriptor:");
        for v in &violations {
            let _ = write!(message, "\n  - {v}");
        }
        Err(CliError::Domain(message))
    }
}

fn parse_i64_list(text: &str, what: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Usage(format!("cannot parse {what}: {text:?}")))
}

fn parse_rows(text: &str, what: &str) -> Result<Vec<Vec<i64>>, CliError> {
    text.split(';')
        .map(|row| parse_i64_list(row, what))
        .collect()
}

fn group_json(g: &FgAbelianGroup) -> Value {
    json!({
        "display": g.to_string(),
        "free_rank": g.free_rank(),
        "torsion": g.torsion().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
    })
}

fn verdict_json(v: &Verdict) -> Value {
    json!({
        "status": v.status.to_string(),
        "theorem": v.theorem,
        "witness": v.witness.as_ref().map(|w| w.to_string()),
        "hypotheses": v
            .hypotheses
            .iter()
            .map(|h| json!({ "name": h.name, "status": h.status.to_string() }))
            .collect::<Vec<_>>(),
    })
}

fn hypothesis_lines(v: &Verdict, out: &mut String) {
    let _ = write!(out, "\nhypotheses:");
    for h in &v.hypotheses {
        let _ = write!(out, "\n  [{}] {}", h.status, h.name);
    }
}

fn presentation_json(p: &ExtensionPresentation) -> Value {
    json!({
        "display": p.to_string(),
        "sub": group_json(&p.sub),
        "quotient": group_json(&p.quotient),
        "total": p.total_if_determined().map(|g| g.to_string()),
    })
}

fn polynomial_terms_json(lp: &LPolynomial) -> Vec<Value> {
    lp.terms()
        .map(|(partition, coeff)| {
            json!({
                "partition": partition.parts(),
                "coefficient": coeff.to_string(),
            })
        })
        .collect()
}

fn cmd_lpoly(k: usize, t: u64) -> Result<(String, Value), CliError> {
    let lp = l_polynomial(k).map_err(CliError::domain)?;
    let constants = denominator_constants(k, t).map_err(CliError::domain)?;
    let text = format!(
        "L_{k} = {lp}; c_{k} = {}; r_{k} = {} (t = {})",
        constants.c_k, constants.r_k, constants.t
    );
    let json = json!({
        "k": k,
        "t": constants.t.to_string(),
        "polynomial": lp.to_string(),
        "terms": polynomial_terms_json(&lp),
        "c_k": constants.c_k.to_string(),
        "r_k": constants.r_k.to_string(),
    });
    Ok((text, json))
}

fn cmd_divspec(offset: &str, basis: &str, count: usize) -> Result<(String, Value), CliError> {
    if count == 0 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    let offset = parse_i64_list(offset, "--offset")?;
    let rows = parse_rows(basis, "--basis")?;
    let ambient = offset.len();
    let sublattice = AffineSublattice::from_i64(&offset, ambient, &rows).map_err(CliError::domain)?;
    let entries = divisibility_spectrum(&sublattice, count).map_err(CliError::domain)?;

    let mut text = format!(
        "divisibility spectrum of the coset (ambient rank {ambient}, {} values)",
        entries.len()
    );
    let width = entries
        .iter()
        .map(|e| e.value.to_string().len())
        .max()
        .unwrap_or(1)
        .max("value".len());
    let _ = write!(text, "\n  {:>width$}  element", "value");
    for e in &entries {
        let element = e
            .element
            .iter()
            .map(BigInt::to_string)
            .collect::<Vec<_>>()
            .join(", ");
        let _ = write!(text, "\n  {:>width$}  ({element})", e.value.to_string());
    }
    let json = json!({
        "ambient_rank": ambient,
        "requested": count,
        "entries": entries
            .iter()
            .map(|e| json!({
                "value": e.value.to_string(),
                "element": e.element.iter().map(BigInt::to_string).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>(),
    });
    Ok((text, json))
}

fn cmd_lgroup(n: i64, r: Option<usize>) -> (String, Value) {
    let (group, ring) = match r {
        Some(r) => (l_group_free_abelian(n, r), format!("Z[Z^{r}]")),
        None => (l_group_z(n), "Z".to_string()),
    };
    let text = format!("L_{n}({ring}) = {group}");
    let json = json!({
        "n": n,
        "r": r,
        "ring": ring,
        "group": group_json(&group),
    });
    (text, json)
}

fn cmd_normal(d: &ManifoldDescriptor) -> Result<(String, Value), CliError> {
    let mut rational = normal_invariants_rational(d).map_err(CliError::domain)?;
    rational.sort_unstable();
    let mut text = format!(
        "normal invariants of {} (dimension {})\nrational ranks in degrees n-4k:",
        d.name, d.dimension
    );
    let _ = write!(text, "\n  degree  rank");
    for (degree, rank) in &rational {
        let _ = write!(text, "\n  {degree:>6}  {rank}");
    }
    let integral = if d.flags.ahss_collapses {
        let summands = normal_invariants_integral(d, d.dimension).map_err(CliError::domain)?;
        let _ = write!(text, "\nintegral summands of H_{}(M; L-spectrum):", d.dimension);
        if summands.is_empty() {
            let _ = write!(text, "\n  (all trivial)");
        } else {
            let _ = write!(text, "\n  i  group");
            for (i, group) in &summands {
                let _ = write!(text, "\n  {i}  {group}");
            }
        }
        Some(summands)
    } else {
        let _ = write!(text, "\n(collapse flag not set: integral summands unavailable)");
        None
    };
    let json = json!({
        "name": d.name,
        "dimension": d.dimension,
        "rational": rational
            .iter()
            .map(|(degree, rank)| json!({ "degree": degree, "rank": rank }))
            .collect::<Vec<_>>(),
        "integral": integral.map(|summands| summands
            .iter()
            .map(|(i, g)| json!({ "degree": i, "group": group_json(g) }))
            .collect::<Vec<_>>()),
    });
    Ok((text, json))
}

fn cmd_structure(d: &ManifoldDescriptor) -> Result<(String, Value), CliError> {
    let presentation = structure_set(d).map_err(CliError::domain)?;
    let mut text = format!("structure set of {}: {presentation}", d.name);
    let _ = write!(text, "\n  sub (odd-degree action image): {}", presentation.sub);
    let _ = write!(text, "\n  quotient (obstruction kernel): {}", presentation.quotient);
    if let Some(total) = presentation.total_if_determined() {
        let _ = write!(text, "\n  S ≅ {total}");
    }
    let json = json!({
        "name": d.name,
        "dimension": d.dimension,
        "presentation": presentation_json(&presentation),
    });
    Ok((text, json))
}

fn cmd_decide(d: &ManifoldDescriptor) -> Result<(String, Value), CliError> {
    let verdict = decide_simply_connected(d).map_err(CliError::domain)?;
    let n = d.dimension;
    let mut text = match (&verdict.status, &verdict.witness) {
        (VerdictStatus::Infinite, Some(w)) => {
            format!("INFINITE ({}: {w}; applies to |S(M)| and |M(M)|)", verdict.theorem)
        }
        (VerdictStatus::Finite, _) => format!(
            "FINITE ({}: no nonzero rational cohomology H^4i for 0 < 4i < {n})",
            verdict.theorem
        ),
        _ => verdict.to_string(),
    };
    hypothesis_lines(&verdict, &mut text);
    let json = json!({
        "name": d.name,
        "dimension": n,
        "verdict": verdict_json(&verdict),
    });
    Ok((text, json))
}

#[allow(clippy::too_many_arguments)]
fn cmd_theorem_b(
    d: &ManifoldDescriptor,
    condition: ConditionKind,
    k: Option<usize>,
    sub: Option<&str>,
    sup: Option<&str>,
    degree: Option<i64>,
    eta_infinite: bool,
) -> Result<(String, Value), CliError> {
    let condition = match condition {
        ConditionKind::Parallelizable => TheoremBCondition::Parallelizable,
        ConditionKind::LatticePair => {
            let k = k.ok_or_else(|| CliError::Usage("--k is required for lattice-pair".into()))?;
            let sub_rows =
                parse_rows(sub.ok_or_else(|| CliError::Usage("--sub is required for lattice-pair".into()))?, "--sub")?;
            let sup_rows =
                parse_rows(sup.ok_or_else(|| CliError::Usage("--sup is required for lattice-pair".into()))?, "--sup")?;
            let ambient = d.homology.free_rank(4 * k);
            TheoremBCondition::LatticePair {
                k,
                sub: LatticeBasis::from_i64(ambient, &sub_rows).map_err(CliError::domain)?,
                sup: LatticeBasis::from_i64(ambient, &sup_rows).map_err(CliError::domain)?,
            }
        }
        ConditionKind::PdGroup => TheoremBCondition::PdGroup {
            degree_of_c: degree
                .ok_or_else(|| CliError::Usage("--degree is required for pd-group".into()))?,
        },
    };
    let verdict = theorem_b_check(d, &condition, eta_infinite).map_err(CliError::domain)?;
    let mut text = verdict.to_string();
    hypothesis_lines(&verdict, &mut text);
    let json = json!({
        "name": d.name,
        "verdict": verdict_json(&verdict),
    });
    Ok((text, json))
}

fn claim_text(v: &Verdict) -> String {
    if v.is_conclusive() {
        "true".to_string()
    } else {
        match v.failed_hypotheses().next() {
            Some(h) => format!("NOT-ESTABLISHED ({}: {})", h.name, h.status),
            None => "NOT-ESTABLISHED".to_string(),
        }
    }
}

fn cmd_theorem_c(r: usize, g: usize, k: usize) -> Result<(String, Value), CliError> {
    let summary = theorem_c_summary(r, g, k).map_err(CliError::domain)?;
    let mut text = format!(
        "M_(r={r}, g={g}) with k = {k} (dimension {}):",
        4 * k + 2
    );
    let _ = write!(text, "\n  structure set: {}", summary.presentation);
    let _ = write!(
        text,
        "\n  structure set infinite: {}",
        claim_text(&summary.structure_set_infinite)
    );
    let _ = write!(
        text,
        "\n  polarized manifold set has one element: {}",
        claim_text(&summary.polarized_set_size_one)
    );
    let json = json!({
        "r": r,
        "g": g,
        "k": k,
        "dimension": 4 * k + 2,
        "presentation": presentation_json(&summary.presentation),
        "structure_set_infinite": verdict_json(&summary.structure_set_infinite),
        "polarized_manifold_set_size_one": verdict_json(&summary.polarized_set_size_one),
    });
    Ok((text, json))
}

fn cmd_theorem_e(r: u64, g: u64, k: u64, orders: Option<&str>) -> Result<(String, Value), CliError> {
    let parsed_orders = match orders {
        Some(text) => {
            let values = parse_i64_list(text, "--orders")?;
            let positive: Option<Vec<u64>> =
                values.iter().map(|&v| u64::try_from(v).ok()).collect();
            match positive.as_deref() {
                Some([a, b, c]) => (*a, *b, *c),
                _ => {
                    return Err(CliError::Usage(
                        "--orders must be three nonnegative integers \"a,b,c\"".into(),
                    ))
                }
            }
        }
        None if k == 1 => (1, 1, 1), // ignored in the k = 1 case
        None => return Err(CliError::Usage("--orders is required for k >= 2".into())),
    };
    let bound = theorem_e_bound(r, g, k, parsed_orders).map_err(CliError::domain)?;
    let established = r >= 3 && g >= r + 3;
    let dims = (4 * k + 2, 4 * k + 1, 4 * k);
    let mut text = format!("|M_polarized| <= {bound} (r = {r}, g = {g}, k = {k})");
    if k >= 2 {
        let _ = write!(
            text,
            "\n  orders: |Theta_{}| = {}, |Theta_{}/bP_{}| = {}, |Theta_{}| = {}",
            dims.0, parsed_orders.0, dims.1, dims.0, parsed_orders.1, dims.2, parsed_orders.2
        );
    } else {
        let _ = write!(text, "\n  k = 1: the polarized smooth manifold set has one element");
    }
    if !established {
        let _ = write!(text, "\n  note: established only for r >= 3 and g >= r + 3");
    }
    let json = json!({
        "r": r,
        "g": g,
        "k": k,
        "orders": if k >= 2 {
            Some(json!([parsed_orders.0, parsed_orders.1, parsed_orders.2]))
        } else {
            None
        },
        "theta_dimensions": if k >= 2 {
            Some(json!([dims.0, dims.1, dims.2]))
        } else {
            None
        },
        "bound": bound.to_string(),
        "hypotheses_established": established,
    });
    Ok((text, json))
}

fn cmd_validate(d: &ManifoldDescriptor, format: Format) -> Result<(), CliError> {
    let violations: Vec<Violation> = validate(d);
    let pi1 = match &d.pi1 {
        Pi1::Trivial => "trivial".to_string(),
        other => other.to_string(),
    };
    let mut text = format!("descriptor {} (dimension {}, pi1 {})", d.name, d.dimension, pi1);
    if violations.is_empty() {
        let _ = write!(text, "\nvalid");
    } else {
        let _ = write!(text, "\n{} violation(s):", violations.len());
        for v in &violations {
            let _ = write!(text, "\n  - {v}");
        }
    }
    let json = json!({
        "name": d.name,
        "dimension": d.dimension,
        "pi1": pi1,
        "valid": violations.is_empty(),
        "violations": violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    });
    emit(format, &text, json);
    if violations.is_empty() {
        Ok(())
    } else {
        std::process::exit(1);
    }
}
