//! Serializable reports. Every rational is written as a `"p/q"` string.

use serde::Serialize;

use toric_bsato::bsato::{BFunctionResult, UniPoly};
use toric_bsato::multiplier::{
    CorrespondenceReport, JumpingReport, MultiplierIdealResult, SearchMode, Verdict,
};
use toric_bsato::polyhedra::Mode;
use toric_bsato::Rational;

fn text(r: &Rational) -> String {
    r.to_string()
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub full_dimensional: bool,
    pub pointed: bool,
    pub saturated: bool,
    pub normal: Option<bool>,
    pub witness: Option<Vec<i64>>,
}

#[derive(Debug, Serialize)]
pub struct FacetsReport {
    pub facets: Vec<Vec<i64>>,
    pub extreme_rays: Vec<Vec<i64>>,
}

#[derive(Debug, Serialize)]
pub struct TermReport {
    pub coeff: String,
    pub exp: Vec<u32>,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum TransportReport {
    Monomial {
        facets: Vec<Vec<i64>>,
        generators: Vec<Vec<i64>>,
    },
    Polynomial {
        facets: Vec<Vec<i64>>,
        generators: Vec<Vec<TermReport>>,
        note: &'static str,
    },
}

#[derive(Debug, Serialize)]
pub struct PolyReport {
    pub text: String,
    /// Coefficients from the constant term up.
    pub coefficients: Vec<String>,
}

impl From<&UniPoly> for PolyReport {
    fn from(p: &UniPoly) -> Self {
        PolyReport {
            text: p.display_with("s"),
            coefficients: p.coeffs().iter().map(text).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RootReport {
    pub root: String,
    pub multiplicity: u32,
}

fn roots(list: &[(Rational, u32)]) -> Vec<RootReport> {
    list.iter()
        .map(|(r, m)| RootReport {
            root: text(r),
            multiplicity: *m,
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct BoxReport {
    #[serde(rename = "box")]
    pub bound: u32,
    pub polynomial: Option<PolyReport>,
}

#[derive(Debug, Serialize)]
pub struct BFunctionReport {
    pub b: PolyReport,
    pub roots: Vec<RootReport>,
    pub unfactored_remainder: PolyReport,
    pub box_used: u32,
    pub stabilized: bool,
    pub generator_count: usize,
    pub history: Vec<BoxReport>,
    pub lct: String,
    pub lct_agrees: bool,
}

impl From<&BFunctionResult> for BFunctionReport {
    fn from(r: &BFunctionResult) -> Self {
        BFunctionReport {
            b: (&r.b).into(),
            roots: roots(&r.roots),
            unfactored_remainder: (&r.unfactored_remainder).into(),
            box_used: r.box_used,
            stabilized: r.stabilized,
            generator_count: r.generator_count,
            history: r
                .history
                .iter()
                .map(|(b, p)| BoxReport {
                    bound: *b,
                    polynomial: p.as_ref().map(PolyReport::from),
                })
                .collect(),
            lct: text(&r.lct),
            lct_agrees: r.lct_agrees,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LctReport {
    pub lct: String,
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Relint => "relint",
        Mode::Closed => "closed",
    }
}

#[derive(Debug, Serialize)]
pub struct MultiplierReport {
    pub alpha: String,
    pub mode: &'static str,
    pub boundary: Option<Vec<String>>,
    pub generators: Vec<Vec<i64>>,
    pub box_used: Vec<i64>,
    pub stabilized: bool,
}

impl MultiplierReport {
    pub fn new(r: &MultiplierIdealResult, boundary: Option<&[Rational]>) -> Self {
        MultiplierReport {
            alpha: text(&r.alpha),
            mode: mode_name(r.mode),
            boundary: boundary.map(|w| w.iter().map(text).collect()),
            generators: r.generators.clone(),
            box_used: r.box_used.clone(),
            stabilized: r.stabilized,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EntryReport {
    pub alpha: String,
    pub witness: Vec<i64>,
    pub facet: usize,
}

#[derive(Debug, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum SearchReport {
    Exact,
    Windowed { window: i64, kappa: u32, stable: bool },
}

fn verdict_name(v: &Verdict) -> &'static str {
    match v {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::Inconclusive => "INCONCLUSIVE",
    }
}

#[derive(Debug, Serialize)]
pub struct JumpingOutput {
    pub lct: String,
    pub max: String,
    pub jumping: Vec<EntryReport>,
    pub search: SearchReport,
    pub bfunction_check: Option<&'static str>,
}

impl From<&JumpingReport> for JumpingOutput {
    fn from(r: &JumpingReport) -> Self {
        JumpingOutput {
            lct: text(&r.lct),
            max: text(&r.max),
            jumping: r
                .jumping
                .iter()
                .map(|j| EntryReport {
                    alpha: text(&j.alpha),
                    witness: j.witness.clone(),
                    facet: j.facet,
                })
                .collect(),
            search: match &r.search {
                SearchMode::Exact => SearchReport::Exact,
                SearchMode::Windowed { window, kappa, stable } => SearchReport::Windowed {
                    window: *window,
                    kappa: *kappa,
                    stable: *stable,
                },
            },
            bfunction_check: r.bfunction_check.as_ref().map(verdict_name),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub verdict: &'static str,
    pub lct: String,
    pub lct_is_smallest_root: bool,
    /// Roots of `b(−s)`.
    pub roots: Vec<RootReport>,
    pub missing: Vec<String>,
    pub bfunction: BFunctionReport,
    pub jumping: JumpingOutput,
}

impl From<&CorrespondenceReport> for VerifyReport {
    fn from(r: &CorrespondenceReport) -> Self {
        VerifyReport {
            verdict: verdict_name(&r.verdict),
            lct: text(&r.jumping.lct),
            lct_is_smallest_root: r.lct_is_smallest_root,
            roots: roots(&r.roots),
            missing: r.missing.iter().map(text).collect(),
            bfunction: (&r.bfunction).into(),
            jumping: (&r.jumping).into(),
        }
    }
}
