//! `toric-bsato`: batch front end for b-functions, multiplier ideals and
//! jumping coefficients of monomial ideals on normal toric varieties.
//!
//! Reads one JSON problem document, writes a JSON report to stdout and a short
//! summary to stderr. Exit codes: 0 success, 1 malformed input, 2 structural
//! assumption violated, 3 uncertified result, 4 verification failure.

mod document;
mod report;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use toric_bsato::bsato::{bfunction, BFunctionConfig};
use toric_bsato::exactnum::int;
use toric_bsato::multiplier::{
    jumping_coefficients, lct, multiplier_ideal, multiplier_ideal_with_boundary, transport_monomials,
    transport_polynomial, verify_correspondence, SearchMode, Verdict,
};
use toric_bsato::polyhedra::Mode;
use toric_bsato::toric::{analyze, check_normality};
use toric_bsato::{Error, IntMatrix, MonomialIdeal, Rational, SemigroupData};

use document::{parse_mode, parse_schedule, Document, IdealSpec};
use report::*;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot read input: {0}")]
    Io(#[from] io::Error),
    #[error(transparent)]
    Library(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 1,
            CliError::Library(e) => match e {
                Error::DegenerateMatrix
                | Error::NotFullDimensional
                | Error::NotPointed
                | Error::NotSaturated
                | Error::NotNormal { .. } => 2,
                Error::BoxCapExhausted { .. } => 3,
                Error::Invariant(_) => 4,
                _ => 1,
            },
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "toric-bsato", version, about = "Bernstein-Sato polynomials and multiplier ideals of toric monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full dimension, pointedness, saturation and (with --check-normal) normality
    Check(Args),
    /// Primitive facet normals of the cone, in output order
    Facets(Args),
    /// F-images of the ideal generators
    Transport(Args),
    /// Bernstein-Sato polynomial of a monomial ideal
    Bfunction(Args),
    /// Log-canonical threshold
    Lct(Args),
    /// Multiplier ideal at --alpha
    Multiplier(Args),
    /// Jumping coefficients up to --max (default lct + 1)
    Jumping(Args),
    /// Check b-function roots against jumping coefficients
    Verify(Args),
}

#[derive(Debug, clap::Args)]
struct Args {
    /// Problem document; `-` reads standard input
    input: PathBuf,
    #[arg(long, value_name = "P/Q")]
    alpha: Option<String>,
    #[arg(long, value_name = "P/Q")]
    max: Option<String>,
    #[arg(long, value_name = "relint|closed")]
    mode: Option<String>,
    #[arg(long, value_name = "N")]
    box_cap: Option<u32>,
    #[arg(long, value_name = "N")]
    kappa: Option<u32>,
    /// Skip the normality check
    #[arg(long)]
    assume_normal: bool,
    #[arg(long)]
    check_normal: bool,
    #[arg(long, value_name = "B0,B1,...")]
    schedule: Option<String>,
}

/// Command-line flags merged over the document's options.
struct Settings {
    alpha: Option<Rational>,
    max: Option<Rational>,
    mode: Mode,
    config: BFunctionConfig,
    kappa: u32,
    assume_normal: bool,
    check_normal: bool,
    boundary: Option<Vec<Rational>>,
}

fn settings(doc: &Document, args: &Args) -> Result<Settings, CliError> {
    let o = &doc.options;
    let rational = |flag: &Option<String>, opt: &Option<document::RationalText>, name: &str| {
        match (flag, opt) {
            (Some(t), _) => document::RationalText::Text(t.clone()).parse(name).map(Some),
            (None, Some(r)) => r.parse(name).map(Some),
            (None, None) => Ok(None),
        }
    };
    let mut config = BFunctionConfig::default();
    if let Some(s) = args.schedule.as_deref().map(parse_schedule).transpose()?.or(o.schedule.clone()) {
        config.schedule = s;
    }
    if let Some(cap) = args.box_cap.or(o.box_cap) {
        config.cap = cap;
    }
    let boundary = o
        .boundary
        .as_ref()
        .map(|w| w.iter().map(|x| x.parse("boundary")).collect::<Result<Vec<_>, _>>())
        .transpose()?;
    Ok(Settings {
        alpha: rational(&args.alpha, &o.alpha, "alpha")?,
        max: rational(&args.max, &o.max, "max")?,
        mode: parse_mode(args.mode.as_deref().or(o.mode.as_deref()).unwrap_or("relint"))?,
        config,
        kappa: args.kappa.or(o.kappa).unwrap_or(3),
        assume_normal: args.assume_normal || o.assume_normal,
        check_normal: args.check_normal,
        boundary,
    })
}

struct Outcome {
    json: String,
    summary: String,
    code: u8,
}

fn outcome<T: Serialize>(value: &T, summary: String, code: u8) -> Result<Outcome, CliError> {
    let json = serde_json::to_string_pretty(value).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(Outcome { json, summary, code })
}

fn semigroup(doc: &Document, st: &Settings) -> Result<SemigroupData, CliError> {
    let mut s = SemigroupData::from_rows(&doc.matrix)?;
    if st.assume_normal {
        s.assume_normal();
    } else {
        let r = s.check_normal();
        if !r.normal {
            return Err(Error::NotNormal {
                witness: r.witness.unwrap_or_default(),
            }
            .into());
        }
    }
    Ok(s)
}

fn ideal(doc: &Document, s: &SemigroupData) -> Result<MonomialIdeal, CliError> {
    Ok(MonomialIdeal::new(s, doc.monomials()?)?)
}

fn run(command: &Command, doc: &Document, st: &Settings) -> Result<Outcome, CliError> {
    match command {
        Command::Check(_) => {
            let a = IntMatrix::from_rows(&doc.matrix)?;
            let r = analyze(&a)?;
            let (normal, witness) = if st.check_normal && r.full_dimensional && r.pointed {
                let n = check_normality(&a)?;
                (Some(n.normal), n.witness)
            } else {
                (None, None)
            };
            let ok = r.full_dimensional && r.pointed && r.saturated && normal != Some(false);
            let mut summary = format!(
                "full-dimensional: {}, pointed: {}, saturated: {}",
                r.full_dimensional, r.pointed, r.saturated
            );
            if let Some(n) = normal {
                summary += &format!(", normal: {n}");
            }
            if let Some(w) = &witness {
                summary += &format!(" (witness {w:?})");
            }
            let report = CheckReport {
                full_dimensional: r.full_dimensional,
                pointed: r.pointed,
                saturated: r.saturated,
                normal,
                witness,
            };
            outcome(&report, summary, if ok { 0 } else { 2 })
        }
        Command::Facets(_) => {
            let s = SemigroupData::from_rows(&doc.matrix)?;
            let report = FacetsReport {
                facets: s.facets().to_vec(),
                extreme_rays: s.extreme_rays(),
            };
            outcome(&report, format!("{} facets: {:?}", s.num_facets(), s.facets()), 0)
        }
        Command::Transport(_) => {
            let s = semigroup(doc, st)?;
            let facets = s.facets().to_vec();
            match &doc.ideal {
                Some(IdealSpec::Polynomial(polys)) => {
                    let mut generators = Vec::new();
                    for p in polys {
                        let terms = p
                            .iter()
                            .map(|t| Ok((t.coeff.parse("coeff")?, t.exp.clone())))
                            .collect::<Result<Vec<_>, CliError>>()?;
                        let image = transport_polynomial(&s, &terms)?;
                        generators.push(
                            image
                                .terms()
                                .map(|(e, c)| TermReport {
                                    coeff: c.to_string(),
                                    exp: e.clone(),
                                })
                                .collect(),
                        );
                    }
                    let n = generators.len();
                    let report = TransportReport::Polynomial {
                        facets,
                        generators,
                        note: "b-functions of non-monomial ideals need a D-module system; \
                               these generators span the transported ideal to feed it",
                    };
                    outcome(&report, format!("transported {n} polynomial generators"), 0)
                }
                _ => {
                    let generators = transport_monomials(&s, doc.monomials()?)?;
                    let summary = format!("F(I) minimal generators: {generators:?}");
                    outcome(&TransportReport::Monomial { facets, generators }, summary, 0)
                }
            }
        }
        Command::Bfunction(_) => {
            let s = semigroup(doc, st)?;
            let i = ideal(doc, &s)?;
            let r = bfunction(&s, &i, &st.config)?;
            let mut summary = format!("b(s) = {} (box {}, stabilized: {})", r.b.display_with("s"), r.box_used, r.stabilized);
            if r.unfactored_remainder.degree().unwrap_or(0) > 0 {
                summary += &format!(
                    "\nwarning: factor {} has no rational roots",
                    r.unfactored_remainder.display_with("s")
                );
            }
            outcome(&BFunctionReport::from(&r), summary, if r.stabilized { 0 } else { 3 })
        }
        Command::Lct(_) => {
            let s = semigroup(doc, st)?;
            let l = lct(&s, &ideal(doc, &s)?)?;
            outcome(&LctReport { lct: l.to_string() }, format!("lct = {l}"), 0)
        }
        Command::Multiplier(_) => {
            let s = semigroup(doc, st)?;
            let i = ideal(doc, &s)?;
            let alpha = st
                .alpha
                .clone()
                .ok_or_else(|| CliError::Input("multiplier needs --alpha or options.alpha".into()))?;
            let r = match &st.boundary {
                Some(w) => multiplier_ideal_with_boundary(&s, &i, w, &alpha)?,
                None => multiplier_ideal(&s, &i, &alpha, st.mode)?,
            };
            let summary = format!("J(X, {alpha}·I) generators: {:?} (stabilized: {})", r.generators, r.stabilized);
            let code = if r.stabilized { 0 } else { 3 };
            outcome(&MultiplierReport::new(&r, st.boundary.as_deref()), summary, code)
        }
        Command::Jumping(_) => {
            let s = semigroup(doc, st)?;
            let i = ideal(doc, &s)?;
            let max = match &st.max {
                Some(m) => m.clone(),
                None => &lct(&s, &i)? + int(1),
            };
            let r = jumping_coefficients(&s, &i, &max, st.kappa)?;
            let list: Vec<String> = r.jumping.iter().map(|j| j.alpha.to_string()).collect();
            let certified = !matches!(r.search, SearchMode::Windowed { stable: false, .. });
            let summary = format!("jumping coefficients in (0, {max}]: {}", list.join(", "));
            outcome(&JumpingOutput::from(&r), summary, if certified { 0 } else { 3 })
        }
        Command::Verify(_) => {
            let s = semigroup(doc, st)?;
            let i = ideal(doc, &s)?;
            let r = verify_correspondence(&s, &i, &st.config, st.kappa)?;
            let report = VerifyReport::from(&r);
            let summary = format!(
                "{}: b(s) = {}, lct = {}, jumping below lct + 1: {}",
                report.verdict,
                r.bfunction.b.display_with("s"),
                r.jumping.lct,
                r.jumping
                    .jumping
                    .iter()
                    .filter(|j| j.alpha < &r.jumping.lct + int(1))
                    .map(|j| j.alpha.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            let code = match r.verdict {
                Verdict::Pass => 0,
                Verdict::Inconclusive => 3,
                Verdict::Fail => 4,
            };
            outcome(&report, summary, code)
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

#[derive(Serialize)]
struct ErrorReport {
    error: String,
    exit_code: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<i64>>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let args = match &cli.command {
        Command::Check(a)
        | Command::Facets(a)
        | Command::Transport(a)
        | Command::Bfunction(a)
        | Command::Lct(a)
        | Command::Multiplier(a)
        | Command::Jumping(a)
        | Command::Verify(a) => a,
    };
    let result = read_input(&args.input)
        .and_then(|t| Document::from_json(&t))
        .and_then(|doc| {
            let st = settings(&doc, args)?;
            run(&cli.command, &doc, &st)
        });
    let (json, summary, code) = match result {
        Ok(o) => (o.json, o.summary, o.code),
        Err(e) => {
            let code = e.exit_code();
            let witness = match &e {
                CliError::Library(Error::NotNormal { witness }) => Some(witness.clone()),
                _ => None,
            };
            let report = ErrorReport {
                error: e.to_string(),
                exit_code: code,
                witness,
            };
            let json = serde_json::to_string_pretty(&report).unwrap_or_default();
            (json, format!("error: {e}"), code)
        }
    };
    let mut out = io::stdout().lock();
    let _ = writeln!(out, "{json}");
    eprintln!("{summary}");
    ExitCode::from(code)
}
