//! Command-line front end.
//!
//! Output is either plain text or a single JSON document per invocation. The
//! JSON document is rendered from a [`serde_json::Value`], so keys come out
//! sorted and re-rendering a parsed document reproduces it byte for byte.
//! Every integer is a decimal string.
//!
//! Exit codes: `0` answered (including proven emptiness), `1` no particular
//! solution within the search bound, `2` usage or domain error.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::diffsq::SolutionPair;
use crate::error::{Error, Result};
use crate::oracle::brute_force;
use crate::pell::{cf_sqrt, pell_stream, PellSolution};
use crate::solver::{
    classify, is_diff_squares, normalize, solve, Completeness, Equation, EquationClass,
    FamilyDescriptor, SolutionSet, SolveOptions,
};
use crate::Domain;

pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNKNOWN_WITHIN_BOUND: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Serde adapter writing `BigInt` as a decimal string.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(n)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "diophant",
    version,
    about = "Solve a·x² − b·y² = c over Z or N"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DomainArg {
    Z,
    N,
}

impl From<DomainArg> for Domain {
    fn from(d: DomainArg) -> Self {
        match d {
            DomainArg::Z => Domain::Integers,
            DomainArg::N => Domain::Naturals,
        }
    }
}

fn parse_int(s: &str) -> std::result::Result<BigInt, String> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("'{s}' is not a decimal integer"));
    }
    s.parse().map_err(|e| format!("'{s}': {e}"))
}

#[derive(Debug, clap::Args)]
struct Coefficients {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
    a: BigInt,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
    b: BigInt,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
    c: BigInt,
}

impl Coefficients {
    fn equation(&self) -> Equation {
        Equation::new(self.a.clone(), self.b.clone(), self.c.clone())
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve a·x² − b·y² = c.
    Solve {
        #[command(flatten)]
        coefficients: Coefficients,
        #[arg(long, value_enum)]
        domain: DomainArg,
        /// Terms printed per infinite family.
        #[arg(long, default_value_t = 5)]
        family_terms: usize,
        /// Particular solutions are searched in [0, M]².
        #[arg(long, value_parser = parse_int, default_value = "10000")]
        search_bound: BigInt,
    },
    /// Solutions of u² − d·v² = 1, starting from (1, 0).
    Pell {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
        d: BigInt,
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Periodic continued fraction of √d.
    Cf {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
        d: BigInt,
    },
    /// Normalize and classify an equation.
    Classify {
        #[command(flatten)]
        coefficients: Coefficients,
    },
    /// Exhaustive scan of |x|, |y| ≤ bound.
    Oracle {
        #[command(flatten)]
        coefficients: Coefficients,
        #[arg(long)]
        bound: u64,
        #[arg(long, value_enum, default_value_t = DomainArg::Z)]
        domain: DomainArg,
    },
}

/// `{x, y}` with decimal-string coordinates.
pub type PairDoc = SolutionPair;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellDoc {
    pub index: String,
    pub u: String,
    pub v: String,
}

impl From<&PellSolution> for PellDoc {
    fn from(p: &PellSolution) -> Self {
        PellDoc {
            index: p.index.to_string(),
            u: p.u.to_string(),
            v: p.v.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub kind: String,
    pub seed: PairDoc,
    pub pell_modulus: String,
    pub fundamental: PellDoc,
    pub terms: Vec<PairDoc>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDoc {
    pub variant: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub solutions: Vec<PairDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub families: Vec<FamilyDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pell: Vec<PellDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub period: Vec<String>,
}

/// One machine-readable document per invocation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub result: ResultDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub completeness: Option<String>,
}

impl OutputDocument {
    /// Canonical JSON: sorted keys, two-space indent, trailing newline.
    pub fn render(&self) -> String {
        let value = serde_json::to_value(self).expect("document serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value renders");
        s.push('\n');
        s
    }

    pub fn parse(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

struct Outcome {
    document: OutputDocument,
    text: String,
    exit: i32,
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(outcome) => {
            let body = match cli.format {
                Format::Text => outcome.text,
                Format::Json => outcome.document.render(),
            };
            let _ = out.write_all(body.as_bytes());
            outcome.exit
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn document(command: &str, inputs: &[(&str, String)], result: ResultDoc) -> OutputDocument {
    OutputDocument {
        schema_version: SCHEMA_VERSION.into(),
        command: command.into(),
        inputs: inputs
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
        result,
        completeness: None,
    }
}

fn coefficient_inputs(eq: &Equation) -> Vec<(&'static str, String)> {
    vec![
        ("a", eq.a.to_string()),
        ("b", eq.b.to_string()),
        ("c", eq.c.to_string()),
    ]
}

fn verified<'a>(eq: &Equation, pairs: impl IntoIterator<Item = &'a SolutionPair>) -> Result<()> {
    for p in pairs {
        if !eq.is_satisfied_by(p) {
            return Err(Error::Verification {
                x: p.x.clone(),
                y: p.y.clone(),
                equation: eq.to_string(),
            });
        }
    }
    Ok(())
}

fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Solve {
            coefficients,
            domain,
            family_terms,
            search_bound,
        } => {
            let options = SolveOptions {
                search_bound: search_bound.clone(),
                family_terms: *family_terms,
            };
            run_solve(&coefficients.equation(), (*domain).into(), &options)
        }
        Command::Pell { d, count } => run_pell(d, *count),
        Command::Cf { d } => run_cf(d),
        Command::Classify { coefficients } => run_classify(&coefficients.equation()),
        Command::Oracle {
            coefficients,
            bound,
            domain,
        } => run_oracle(&coefficients.equation(), *bound, (*domain).into()),
    }
}

fn family_doc(family: &FamilyDescriptor, terms: &[SolutionPair]) -> FamilyDoc {
    FamilyDoc {
        kind: family.kind().as_str().into(),
        seed: family.seed(),
        pell_modulus: family.pell_modulus().to_string(),
        fundamental: family.fundamental().into(),
        terms: terms.to_vec(),
    }
}

fn run_solve(eq: &Equation, domain: Domain, options: &SolveOptions) -> Result<Outcome> {
    let set = solve(eq, domain, options)?;
    let mut inputs = coefficient_inputs(eq);
    inputs.push(("domain", domain.symbol().to_lowercase()));
    inputs.push(("family_terms", options.family_terms.to_string()));
    inputs.push(("search_bound", options.search_bound.to_string()));

    let mut result = ResultDoc {
        variant: set.variant_name().into(),
        ..ResultDoc::default()
    };
    let mut text = format!("equation: {eq} over {domain}\n");
    match &set {
        SolutionSet::Empty(reason) => {
            result.details.insert("reason".into(), reason.to_string());
            text += &format!("no solutions: {reason}\n");
        }
        SolutionSet::Finite(solutions) => {
            verified(eq, solutions)?;
            result.solutions = solutions.clone();
            text += &format!("solutions ({}):\n", solutions.len());
            for s in solutions {
                text += &format!("  {s}\n");
            }
        }
        SolutionSet::Families { families, domain } => {
            if *domain == Domain::Integers {
                text += "every sign change (±x, ±y) of a listed solution is also a solution\n";
            }
            for (i, family) in families.iter().enumerate() {
                let terms: Vec<_> = family.terms().take(options.family_terms).collect();
                verified(eq, &terms)?;
                let f = family.fundamental();
                text += &format!(
                    "family {} ({}): seed {}, pell modulus {}, fundamental (u1, v1) = ({}, {})\n",
                    i + 1,
                    family.kind().as_str(),
                    family.seed(),
                    family.pell_modulus(),
                    f.u,
                    f.v
                );
                text += &format!("  {}\n", recurrence_text(family));
                for (n, t) in terms.iter().enumerate() {
                    text += &format!("  n={n}: {t}\n");
                }
                result.families.push(family_doc(family, &terms));
            }
        }
        SolutionSet::NoSeedWithinBound { bound } => {
            result
                .details
                .insert("search_bound".into(), bound.to_string());
            text +=
                &format!("no particular solution with 0 <= x, y <= {bound}; solvability unknown\n");
        }
        SolutionSet::DegenerateLine(line) => {
            verified(eq, &line.points_within(3))?;
            result
                .details
                .insert("description".into(), line.description());
            text += &format!("solutions: {}\n", line.description());
        }
    }
    let completeness = set.completeness();
    text += &format!("completeness: {}\n", completeness.as_str());
    let mut document = document("solve", &inputs, result);
    document.completeness = Some(completeness.as_str().into());
    let exit = if completeness == Completeness::UnknownWithinBound {
        EXIT_UNKNOWN_WITHIN_BOUND
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        document,
        text,
        exit,
    })
}

fn recurrence_text(family: &FamilyDescriptor) -> String {
    let eq = family.equation();
    let (x, y) = if family.swap_xy() {
        ("y", "x")
    } else {
        ("x", "y")
    };
    format!(
        "{x}_n = {x}0*u_n + {b}*{y}0*v_n, {y}_n = {y}0*u_n + {a}*{x}0*v_n, \
         (u_n, v_n) over u^2 - {d}v^2 = 1",
        a = eq.a,
        b = eq.b,
        d = family.pell_modulus()
    )
}

fn run_pell(d: &BigInt, count: usize) -> Result<Outcome> {
    let solutions: Vec<_> = pell_stream(d)?.take(count).collect();
    let mut text = format!("u^2 - {d}v^2 = 1\n");
    for s in &solutions {
        text += &format!("  n={}: {}\n", s.index, s);
    }
    let result = ResultDoc {
        variant: "pell_solutions".into(),
        pell: solutions.iter().map(PellDoc::from).collect(),
        ..ResultDoc::default()
    };
    let inputs = [("d", d.to_string()), ("count", count.to_string())];
    Ok(Outcome {
        document: document("pell", &inputs, result),
        text,
        exit: EXIT_OK,
    })
}

fn run_cf(d: &BigInt) -> Result<Outcome> {
    let cf = cf_sqrt(d)?;
    let mut details = BTreeMap::new();
    details.insert("a0".into(), cf.a0().to_string());
    details.insert("period_length".into(), cf.period().len().to_string());
    let result = ResultDoc {
        variant: "continued_fraction".into(),
        period: cf.period().iter().map(ToString::to_string).collect(),
        details,
        ..ResultDoc::default()
    };
    Ok(Outcome {
        document: document("cf", &[("d", d.to_string())], result),
        text: format!("{cf}\nperiod length: {}\n", cf.period().len()),
        exit: EXIT_OK,
    })
}

fn run_classify(eq: &Equation) -> Result<Outcome> {
    let mut details = BTreeMap::new();
    let text = match normalize(eq) {
        Ok(normalized) => {
            let class = classify(&normalized);
            let n = normalized.equation();
            details.insert("class".into(), class.name().into());
            details.insert("normalized".into(), n.to_string());
            details.insert("swap_xy".into(), normalized.swap_xy().to_string());
            details.insert(
                "negate_applied".into(),
                normalized.negate_applied().to_string(),
            );
            let route = match &class {
                EquationClass::DegenerateZeroC => "zero_rhs".to_string(),
                EquationClass::PerfectSquareAB { k } => {
                    details.insert("k".into(), k.to_string());
                    if is_diff_squares(&normalized) {
                        "difference_of_squares".into()
                    } else {
                        "factor_pairs_of_ac".into()
                    }
                }
                EquationClass::NonSquareAB { modulus } => {
                    details.insert("pell_modulus".into(), modulus.to_string());
                    "pell_families".into()
                }
            };
            details.insert("route".into(), route);
            format!(
                "normalized: {n} (swap_xy={}, negate_applied={})\nclass: {}\n",
                normalized.swap_xy(),
                normalized.negate_applied(),
                details_summary(&details)
            )
        }
        Err(Error::NotNormalizable { reason, .. }) => {
            let class = if eq.a == BigInt::ZERO || eq.b == BigInt::ZERO {
                "single_variable"
            } else {
                "definite_form"
            };
            details.insert("class".into(), class.into());
            details.insert("reason".into(), reason.into());
            format!("class: {class} ({reason})\n")
        }
        Err(e) => return Err(e),
    };
    let result = ResultDoc {
        variant: "classification".into(),
        details,
        ..ResultDoc::default()
    };
    Ok(Outcome {
        document: document("classify", &coefficient_inputs(eq), result),
        text,
        exit: EXIT_OK,
    })
}

fn details_summary(details: &BTreeMap<String, String>) -> String {
    let mut s = details["class"].clone();
    for key in ["k", "pell_modulus", "route"] {
        if let Some(v) = details.get(key) {
            s += &format!(", {key}={v}");
        }
    }
    s
}

fn run_oracle(eq: &Equation, bound: u64, domain: Domain) -> Result<Outcome> {
    if eq.a == BigInt::ZERO && eq.b == BigInt::ZERO {
        return Err(Error::DegenerateEquation);
    }
    let solutions = brute_force(eq, bound, domain);
    verified(eq, &solutions)?;
    let mut text = format!(
        "equation: {eq} over {domain}, |x|, |y| <= {bound}\nsolutions ({}):\n",
        solutions.len()
    );
    for s in &solutions {
        text += &format!("  {s}\n");
    }
    let mut inputs = coefficient_inputs(eq);
    inputs.push(("bound", bound.to_string()));
    inputs.push(("domain", domain.symbol().to_lowercase()));
    let result = ResultDoc {
        variant: "finite".into(),
        solutions,
        ..ResultDoc::default()
    };
    Ok(Outcome {
        document: document("oracle", &inputs, result),
        text,
        exit: EXIT_OK,
    })
}
