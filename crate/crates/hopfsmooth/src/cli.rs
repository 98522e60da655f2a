//! Command-line surface: parse inputs, dispatch to the engine, and emit
//! deterministic machine-readable reports. Identical inputs produce
//! byte-identical stdout; timing fields only appear behind --timings.

use crate::centraliser::{
    centraliser_quadruple, gl2_frobenius_twist_action, gl2_natural_action, CentraliserOptions,
    PointList,
};
use crate::error::{Error, Result};
use crate::field::{is_prime_u64, next_prime, parse_field, FieldSpec};
use crate::files::{export_catalog, load_action, load_ideal, load_quadruple};
use crate::fol::{build_with_context, print_formula, FormulaContext, FormulaKind};
use crate::groebner::{buchberger_with, dimension, eliminate_with, ElimOrder, Limits};
use crate::hopf::{
    base_change_quadruple, is_smooth, rationalize_quadruple, HopfQuadruple, SmoothnessReport,
};
use crate::idealops::saturate;
use crate::monomial::MonomialOrder;
use crate::poly::parse_poly;
use crate::primdec::{is_primary, primdec, Primality};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser, Debug)]
#[command(
    name = "hopfsmooth",
    about = "Exact commutative algebra for affine group schemes: Groebner bases, primary decomposition, Hopf quadruples, centralisers, and smoothness sweeps"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Include wall-clock timings (breaks byte-determinism of the output).
    #[arg(long, global = true)]
    timings: bool,
    /// Override the degree ceiling for basis computations.
    #[arg(long, global = true)]
    degree_limit: Option<u32>,
    /// Emit JSON reports (the default; kept for compatibility).
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args, Debug)]
struct InputArg {
    /// Input file (JSON).
    #[arg(short = 'i', long = "input")]
    input: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Groebner basis of the input ideal.
    Groebner {
        #[command(flatten)]
        input: InputArg,
        /// Monomial order: grlex, lex, or block:<r> (first r variables light).
        #[arg(long, default_value = "grlex")]
        order: String,
    },
    /// Ideal membership of a polynomial.
    Member {
        #[command(flatten)]
        input: InputArg,
        /// The polynomial to test.
        #[arg(short = 'f', long)]
        poly: String,
    },
    /// Intersection with the subring on the kept variables.
    Eliminate {
        #[command(flatten)]
        input: InputArg,
        /// Comma-separated variables to keep.
        #[arg(long)]
        keep: String,
        /// Elimination strategy: block (default) or lex.
        #[arg(long, default_value = "block")]
        order: String,
    },
    /// Krull dimension of the quotient by the input ideal.
    Dimension {
        #[command(flatten)]
        input: InputArg,
    },
    /// Saturation (I : f^infinity) with its stabilization exponent.
    Saturate {
        #[command(flatten)]
        input: InputArg,
        #[arg(short = 'f', long)]
        poly: String,
    },
    /// Primary decomposition with per-component verdicts.
    Primdec {
        #[command(flatten)]
        input: InputArg,
    },
    /// Verify the Hopf axioms of a quadruple file.
    HopfCheck {
        #[command(flatten)]
        input: InputArg,
    },
    /// Group dimension, Lie dimension, and the smoothness verdict.
    SmoothCheck {
        #[command(flatten)]
        input: InputArg,
        /// Base-change the input to this field first (Q or Fp:<p>).
        #[arg(long)]
        field: Option<String>,
    },
    /// Centraliser of the points of an action, as a Hopf quadruple.
    Centralise {
        /// Action file (group reference, chart, action polynomials, points).
        #[arg(short = 'i', long = "input")]
        input: Option<PathBuf>,
        /// Built-in example: gl2-natural or frobenius-twist.
        #[arg(long)]
        example: Option<String>,
        /// Field for built-in examples (Q or Fp:<p>).
        #[arg(long)]
        field: Option<String>,
        /// Keep the full per-point centralisers (skip identity components).
        #[arg(long)]
        full_centraliser: bool,
    },
    /// Write the ASCII rendering of a ring formula to a file.
    EmitFormula {
        /// Formula kind: initial-term, groebner, dimension, member,
        /// factors-through, hopf, lie-dimension, smooth, char, all-smooth.
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 2)]
        d: u64,
        #[arg(long, default_value_t = 1)]
        e: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long, default_value_t = 2)]
        p: u64,
        /// Ring variable count.
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Base-change a group (or centraliser pipeline) across a prime range
    /// and report where smoothness fails.
    Sweep {
        /// Quadruple file over Z or Q.
        #[arg(short = 'i', long = "input")]
        input: Option<PathBuf>,
        /// Built-in example: mu6, sl2, gl2, gl2-natural, frobenius-twist.
        #[arg(long)]
        example: Option<String>,
        /// Primes: a..b range or comma-separated list.
        #[arg(long, default_value = "2..97")]
        primes: String,
        /// Also run the characteristic-zero instance.
        #[arg(long)]
        char0: bool,
    },
    /// Write the built-in catalog files into a directory.
    ExportCatalog {
        #[arg(short = 'o', long = "output", default_value = "catalog")]
        output: PathBuf,
    },
}

// ---- reports ----

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: ErrorBody<'a>,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    stage: &'a str,
    kind: String,
    message: String,
}

#[derive(Serialize)]
struct BasisReport {
    field: String,
    vars: Vec<String>,
    order: String,
    basis: Vec<String>,
    reduced: bool,
    max_term_degree: u32,
}

#[derive(Serialize)]
struct MemberReport {
    member: bool,
}

#[derive(Serialize)]
struct DimensionReport {
    dimension: i64,
}

#[derive(Serialize)]
struct SaturateReport {
    generators: Vec<String>,
    exponent: u32,
}

#[derive(Serialize)]
struct ComponentReport {
    generators: Vec<String>,
    isolated: bool,
    primary: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_maximal_ideal: Option<Vec<String>>,
}

#[derive(Serialize)]
struct PrimdecReport {
    components: Vec<ComponentReport>,
}

#[derive(Serialize)]
struct HopfReport {
    is_hopf: bool,
    failures: Vec<String>,
    bound: u64,
}

#[derive(Serialize)]
struct CentraliseReport {
    smooth: bool,
    group_dim: i64,
    lie_dim: i64,
    characteristic: u64,
    relations: Vec<String>,
    realized_bound: u64,
}

#[derive(Serialize)]
struct FormulaReport {
    kind: String,
    free_variables: usize,
    bytes_written: usize,
    output: String,
}

#[derive(Serialize)]
struct SweepRecord {
    characteristic: u64,
    is_hopf: Option<bool>,
    group_dim: Option<i64>,
    lie_dim: Option<i64>,
    smooth: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct SweepSummary {
    records: Vec<SweepRecord>,
    nonsmooth_primes: Vec<u64>,
    /// Smallest prime above every observed non-smooth prime; an empirical
    /// candidate, never a proof.
    #[serde(skip_serializing_if = "Option::is_none")]
    observed_p0: Option<u64>,
    observed_p0_label: String,
}

#[derive(Serialize)]
struct CatalogReport {
    directory: String,
    files: Vec<String>,
}

// ---- dispatch ----

/// Run the CLI against process arguments; returns the exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    run_cli(cli)
}

pub fn run_cli(cli: Cli) -> i32 {
    let limits = match cli.degree_limit {
        Some(d) => Limits {
            max_degree: d,
            ..Limits::default()
        },
        None => Limits::from_env(),
    };
    let stage = stage_name(&cli.command);
    match execute(&cli, &limits) {
        Ok(json) => {
            println!("{}", json);
            0
        }
        Err(e) => {
            let report = ErrorReport {
                error: ErrorBody {
                    stage,
                    kind: error_kind(&e).to_string(),
                    message: e.to_string(),
                },
            };
            println!("{}", serde_json::to_string(&report).unwrap());
            e.exit_code()
        }
    }
}

fn stage_name(c: &Command) -> &'static str {
    match c {
        Command::Groebner { .. } => "groebner",
        Command::Member { .. } => "member",
        Command::Eliminate { .. } => "eliminate",
        Command::Dimension { .. } => "dimension",
        Command::Saturate { .. } => "saturate",
        Command::Primdec { .. } => "primdec",
        Command::HopfCheck { .. } => "hopf-check",
        Command::SmoothCheck { .. } => "smooth-check",
        Command::Centralise { .. } => "centralise",
        Command::EmitFormula { .. } => "emit-formula",
        Command::Sweep { .. } => "sweep",
        Command::ExportCatalog { .. } => "export-catalog",
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::UnknownVariable(_) => "unknown-variable",
        Error::FractionOutsideRationals { .. } => "fraction-outside-rationals",
        Error::NotPrime(_) => "not-prime",
        Error::ModulusTooLarge(_) => "modulus-too-large",
        Error::NotAField(_) => "not-a-field",
        Error::FieldMismatch(_, _) => "field-mismatch",
        Error::RingMismatch => "ring-mismatch",
        Error::DimensionMismatch(_, _) => "dimension-mismatch",
        Error::ZeroRank => "zero-rank",
        Error::RankOverflow => "rank-overflow",
        Error::UnboundedTerm { .. } => "unbounded-term",
        Error::BadReductionDenominator(_) => "bad-reduction-denominator",
        Error::DivisionByZero => "division-by-zero",
        Error::ZeroInput => "zero-input",
        Error::ResourceLimit(_) => "resource-limit",
        Error::UnverifiedBasis => "unverified-basis",
        Error::UnitIdeal => "unit-ideal",
        Error::BasisMismatch => "basis-mismatch",
        Error::NotZeroDimensional => "not-zero-dimensional",
        Error::NoSplittingElement => "no-splitting-element",
        Error::IdentityNotOnScheme => "identity-not-on-scheme",
        Error::AmbiguousComponent(_) => "ambiguous-component",
        Error::PointOffChart => "point-off-chart",
        Error::LocalizerVanishesAtIdentity => "localizer-vanishes-at-identity",
        Error::InvalidQuadruple(_) => "invalid-quadruple",
        Error::ParamOutOfRange(_) => "param-out-of-range",
        Error::FormulaSizeLimit(_) => "formula-size-limit",
        Error::UnsupportedQuantifierShape(_) => "unsupported-quantifier-shape",
        Error::MissingAssignment(_) => "missing-assignment",
        Error::Io(_) => "io",
        Error::BadInputFile(_) => "bad-input-file",
    }
}

fn to_json<T: Serialize>(value: &T, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).unwrap()
    } else {
        serde_json::to_string(value).unwrap()
    }
}

fn parse_order(spec: &str, nvars: usize) -> Result<MonomialOrder> {
    match spec {
        "grlex" => Ok(MonomialOrder::GradedLex),
        "lex" => Ok(MonomialOrder::lex_default(nvars)),
        s if s.starts_with("block:") => {
            let r: usize = s[6..]
                .parse()
                .map_err(|_| Error::BadInputFile(format!("bad order `{}`", s)))?;
            if r > nvars {
                return Err(Error::BadInputFile(format!(
                    "block split {} exceeds {} variables",
                    r, nvars
                )));
            }
            Ok(MonomialOrder::block((r..nvars).collect()))
        }
        s => Err(Error::BadInputFile(format!("bad order `{}`", s))),
    }
}

fn execute(cli: &Cli, limits: &Limits) -> Result<String> {
    match &cli.command {
        Command::Groebner { input, order } => {
            let file = load_ideal(&input.input)?;
            let polys = file.polynomials()?;
            let ring = file.ring()?;
            let ord = parse_order(order, ring.nvars())?;
            let gb = buchberger_with(&polys, &ord, limits)?;
            let report = BasisReport {
                field: file.field.clone(),
                vars: file.vars.clone(),
                order: order.clone(),
                basis: gb.generators().iter().map(|g| g.to_text()).collect(),
                reduced: gb.is_reduced(),
                max_term_degree: gb.max_term_degree(),
            };
            Ok(to_json(&report, cli.pretty))
        }
        Command::Member { input, poly } => {
            let file = load_ideal(&input.input)?;
            let ideal = file.ideal()?;
            let f = parse_poly(poly, ideal.ring())?;
            let report = MemberReport {
                member: ideal.member(&f)?,
            };
            Ok(to_json(&report, cli.pretty))
        }
        Command::Eliminate { input, keep, order } => {
            let file = load_ideal(&input.input)?;
            let polys = file.polynomials()?;
            let ring = file.ring()?;
            let mut keep_idx = Vec::new();
            for name in keep.split(',').map(|s| s.trim()).filter(|s| !s.is_empty()) {
                keep_idx.push(
                    ring.var_index(name)
                        .ok_or_else(|| Error::UnknownVariable(name.to_string()))?,
                );
            }
            let strategy = match order.as_str() {
                "block" => ElimOrder::Block,
                "lex" => ElimOrder::Lex,
                s => return Err(Error::BadInputFile(format!("bad order `{}`", s))),
            };
            let gb = eliminate_with(&polys, &keep_idx, strategy, limits)?;
            let kept_vars: Vec<String> = gb
                .ring()
                .map(|r| r.vars.clone())
                .unwrap_or_default();
            let report = BasisReport {
                field: file.field.clone(),
                vars: kept_vars,
                order: order.clone(),
                basis: gb.generators().iter().map(|g| g.to_text()).collect(),
                reduced: gb.is_reduced(),
                max_term_degree: gb.max_term_degree(),
            };
            Ok(to_json(&report, cli.pretty))
        }
        Command::Dimension { input } => {
            let file = load_ideal(&input.input)?;
            let ideal = file.ideal()?;
            let report = DimensionReport {
                dimension: dimension(ideal.groebner()?)?,
            };
            Ok(to_json(&report, cli.pretty))
        }
        Command::Saturate { input, poly } => {
            let file = load_ideal(&input.input)?;
            let ideal = file.ideal()?;
            let f = parse_poly(poly, ideal.ring())?;
            let (sat, s) = saturate(&ideal, &f)?;
            let report = SaturateReport {
                generators: sat.canonical_texts()?,
                exponent: s,
            };
            Ok(to_json(&report, cli.pretty))
        }
        Command::Primdec { input } => {
            let file = load_ideal(&input.input)?;
            let ideal = file.ideal()?;
            let comps = primdec(&ideal)?;
            let mut out = Vec::new();
            for c in &comps {
                let primary = match is_primary(&c.ideal)? {
                    Primality::Primary => "primary".to_string(),
                    Primality::NotPrimary { .. } => "not-primary".to_string(),
                    Primality::Unknown(_) => "unknown".to_string(),
                };
                out.push(ComponentReport {
                    generators: c.ideal.canonical_texts()?,
                    isolated: c.isolated,
                    primary,
                    witness_maximal_ideal: match &c.witness_maximal_ideal {
                        Some(w) => Some(w.canonical_texts()?),
                        None => None,
                    },
                });
            }
            Ok(to_json(&PrimdecReport { components: out }, cli.pretty))
        }
        Command::HopfCheck { input } => {
            let h = load_quadruple(&input.input)?;
            let check = h.check()?;
            let report = HopfReport {
                is_hopf: check.is_valid(),
                failures: check.failures.iter().map(|f| f.to_string()).collect(),
                bound: h.bound()?,
            };
            Ok(to_json(&report, cli.pretty))
        }
        Command::SmoothCheck { input, field } => {
            let h = load_quadruple(&input.input)?;
            let h = retarget(h, field.as_deref())?;
            let report = is_smooth(&h)?;
            Ok(to_json(&report, cli.pretty))
        }
        Command::Centralise {
            input,
            example,
            field,
            full_centraliser,
        } => {
            let (spec, points) = match (input, example) {
                (Some(path), None) => load_action(path)?,
                (None, Some(name)) => {
                    let field = parse_field(field.as_deref().unwrap_or("Q"))?;
                    built_in_action(name, field)?
                }
                _ => {
                    return Err(Error::BadInputFile(
                        "choose exactly one of --input and --example".into(),
                    ))
                }
            };
            let out = centraliser_quadruple(
                &spec,
                &points,
                CentraliserOptions {
                    skip_identity_component: *full_centraliser,
                },
            )?;
            let report = CentraliseReport {
                smooth: out.report.smooth,
                group_dim: out.report.group_dim,
                lie_dim: out.report.lie_dim,
                characteristic: out.report.characteristic,
                relations: out
                    .quadruple
                    .relations()
                    .iter()
                    .map(|g| g.to_text())
                    .collect(),
                realized_bound: out.realized_bound,
            };
            Ok(to_json(&report, cli.pretty))
        }
        Command::EmitFormula {
            kind,
            d,
            e,
            r,
            p,
            n,
            output,
            field,
        } => {
            let parsed_kind = match kind.as_str() {
                "initial-term" => FormulaKind::InitialTermIs { e: *e, d: *d },
                "groebner" => FormulaKind::IsGroebner { d: *d },
                "dimension" => FormulaKind::DimensionIs { e: *e, d: *d },
                "member" => FormulaKind::IdealMember { d: *d },
                "factors-through" => FormulaKind::FactorsThrough { d: *d, r: *r },
                "hopf" => FormulaKind::IsHopf { d: *d },
                "lie-dimension" => FormulaKind::LieDimensionIs { e: *e, d: *d },
                "smooth" => FormulaKind::IsSmooth { d: *d },
                "char" => FormulaKind::CharacteristicIs { p: *p },
                "all-smooth" => FormulaKind::AllBoundedSmooth { d: *d },
                other => {
                    return Err(Error::BadInputFile(format!("unknown kind `{}`", other)))
                }
            };
            let ctx = FormulaContext::new(parse_field(field)?);
            let formula = build_with_context(parsed_kind, *n, &ctx)?;
            let text = print_formula(&formula);
            std::fs::write(output, &text).map_err(|err| Error::Io(err.to_string()))?;
            let report = FormulaReport {
                kind: kind.clone(),
                free_variables: formula.free_variables().len(),
                bytes_written: text.len(),
                output: output.display().to_string(),
            };
            Ok(to_json(&report, cli.pretty))
        }
        Command::Sweep {
            input,
            example,
            primes,
            char0,
        } => {
            let primes = parse_primes(primes)?;
            let report = run_sweep(
                input.as_deref(),
                example.as_deref(),
                &primes,
                *char0,
                cli.timings,
            )?;
            Ok(to_json(&report, cli.pretty))
        }
        Command::ExportCatalog { output } => {
            let files = export_catalog(output)?;
            let report = CatalogReport {
                directory: output.display().to_string(),
                files,
            };
            Ok(to_json(&report, cli.pretty))
        }
    }
}

fn retarget(h: HopfQuadruple, field: Option<&str>) -> Result<HopfQuadruple> {
    let Some(field) = field else {
        return Ok(h);
    };
    match parse_field(field)? {
        FieldSpec::PrimeField(p) => base_change_quadruple(&h, p),
        FieldSpec::Rationals => {
            if *h.field() == FieldSpec::Rationals {
                Ok(h)
            } else {
                rationalize_quadruple(&h)
            }
        }
        FieldSpec::Integers => Err(Error::NotAField("Z".into())),
    }
}

fn built_in_action(
    name: &str,
    field: FieldSpec,
) -> Result<(crate::centraliser::ActionSpec, PointList)> {
    let one = field.from_i64(1);
    let zero = field.from_i64(0);
    match name {
        "gl2-natural" => {
            let spec = gl2_natural_action(field)?;
            Ok((spec, PointList::new(vec![vec![one, zero]])))
        }
        "frobenius-twist" => {
            let p = field.characteristic();
            if p == 0 {
                return Err(Error::BadInputFile(
                    "frobenius-twist needs --field Fp:<p>".into(),
                ));
            }
            let spec = gl2_frobenius_twist_action(p)?;
            Ok((spec, PointList::new(vec![vec![one, zero]])))
        }
        other => Err(Error::BadInputFile(format!("unknown example `{}`", other))),
    }
}

fn parse_primes(text: &str) -> Result<Vec<u64>> {
    let text = text.trim();
    if let Some((a, b)) = text.split_once("..") {
        let lo: u64 = a
            .trim()
            .parse()
            .map_err(|_| Error::BadInputFile(format!("bad prime range `{}`", text)))?;
        let hi: u64 = b
            .trim()
            .parse()
            .map_err(|_| Error::BadInputFile(format!("bad prime range `{}`", text)))?;
        Ok((lo..=hi).filter(|&p| is_prime_u64(p)).collect())
    } else {
        let mut out = Vec::new();
        for part in text.split(',') {
            let p: u64 = part
                .trim()
                .parse()
                .map_err(|_| Error::BadInputFile(format!("bad prime `{}`", part)))?;
            if !is_prime_u64(p) {
                return Err(Error::NotPrime(p));
            }
            out.push(p);
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

enum SweepTarget {
    Group(HopfQuadruple),
    NaturalAction,
    FrobeniusTwist,
}

fn run_sweep(
    input: Option<&std::path::Path>,
    example: Option<&str>,
    primes: &[u64],
    char0: bool,
    timings: bool,
) -> Result<SweepSummary> {
    let target = match (input, example) {
        (Some(path), None) => {
            let h = load_quadruple(path)?;
            if let FieldSpec::PrimeField(_) = h.field() {
                return Err(Error::BadInputFile(
                    "sweep input must be defined over Z or Q".into(),
                ));
            }
            SweepTarget::Group(h)
        }
        (None, Some("mu6")) => SweepTarget::Group(crate::hopf::catalog::roots_of_unity(
            6,
            FieldSpec::Rationals,
        )),
        (None, Some("sl2")) => {
            SweepTarget::Group(crate::hopf::catalog::sl2(FieldSpec::Rationals))
        }
        (None, Some("gl2")) => {
            SweepTarget::Group(crate::hopf::catalog::gl2(FieldSpec::Rationals))
        }
        (None, Some("gl2-natural")) => SweepTarget::NaturalAction,
        (None, Some("frobenius-twist")) => SweepTarget::FrobeniusTwist,
        (None, Some(other)) => {
            return Err(Error::BadInputFile(format!("unknown example `{}`", other)))
        }
        _ => {
            return Err(Error::BadInputFile(
                "choose exactly one of --input and --example".into(),
            ))
        }
    };

    let mut records = Vec::new();
    if char0 {
        records.push(sweep_record(&target, 0, timings));
    }
    for &p in primes {
        records.push(sweep_record(&target, p, timings));
    }
    records.sort_by_key(|r| r.characteristic);
    let nonsmooth: Vec<u64> = records
        .iter()
        .filter(|r| r.characteristic > 0 && r.smooth == Some(false))
        .map(|r| r.characteristic)
        .collect();
    let observed_p0 = nonsmooth.iter().max().map(|&m| next_prime(m));
    Ok(SweepSummary {
        records,
        nonsmooth_primes: nonsmooth,
        observed_p0,
        observed_p0_label: "observed".into(),
    })
}

fn sweep_record(target: &SweepTarget, p: u64, timings: bool) -> SweepRecord {
    let start = Instant::now();
    let outcome: Result<(bool, SmoothnessReport)> = (|| match target {
        SweepTarget::Group(h) => {
            let inst = if p == 0 {
                rationalize_quadruple(h)?
            } else {
                base_change_quadruple(h, p)?
            };
            let valid = inst.is_hopf()?;
            if !valid {
                return Err(Error::InvalidQuadruple(
                    inst.check()?.failures[0].to_string(),
                ));
            }
            let rep = is_smooth(&inst)?;
            Ok((valid, rep))
        }
        SweepTarget::NaturalAction => {
            let field = if p == 0 {
                FieldSpec::Rationals
            } else {
                FieldSpec::prime_field(p)?
            };
            let one = field.from_i64(1);
            let zero = field.from_i64(0);
            let spec = gl2_natural_action(field)?;
            let points = PointList::new(vec![vec![one, zero]]);
            let out = centraliser_quadruple(&spec, &points, CentraliserOptions::default())?;
            Ok((true, out.report))
        }
        SweepTarget::FrobeniusTwist => {
            if p == 0 {
                return Err(Error::BadInputFile(
                    "the twist family is defined one prime at a time".into(),
                ));
            }
            let field = FieldSpec::prime_field(p)?;
            let one = field.from_i64(1);
            let zero = field.from_i64(0);
            let spec = gl2_frobenius_twist_action(p)?;
            let points = PointList::new(vec![vec![one, zero]]);
            let out = centraliser_quadruple(&spec, &points, CentraliserOptions::default())?;
            Ok((true, out.report))
        }
    })();
    let wall_ms = timings.then(|| start.elapsed().as_millis() as u64);
    match outcome {
        Ok((is_hopf, rep)) => SweepRecord {
            characteristic: p,
            is_hopf: Some(is_hopf),
            group_dim: Some(rep.group_dim),
            lie_dim: Some(rep.lie_dim),
            smooth: Some(rep.smooth),
            wall_ms,
            error: None,
        },
        Err(e) => SweepRecord {
            characteristic: p,
            is_hopf: None,
            group_dim: None,
            lie_dim: None,
            smooth: None,
            wall_ms,
            error: Some(e.to_string()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_parsing() {
        assert_eq!(parse_primes("2..13").unwrap(), vec![2, 3, 5, 7, 11, 13]);
        assert_eq!(parse_primes("5,2,3").unwrap(), vec![2, 3, 5]);
        assert!(matches!(parse_primes("4,5"), Err(Error::NotPrime(4))));
    }

    #[test]
    fn order_parsing() {
        assert_eq!(parse_order("grlex", 3).unwrap(), MonomialOrder::GradedLex);
        assert_eq!(
            parse_order("block:1", 3).unwrap(),
            MonomialOrder::block(vec![1, 2])
        );
        assert!(parse_order("weird", 3).is_err());
    }
}
