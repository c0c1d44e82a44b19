//! Problem documents: the JSON input schema and its validation.

use serde::{Deserialize, Serialize};

use toric_bsato::exactnum::{parse_rational, Rational};
use toric_bsato::polyhedra::Mode;

use crate::CliError;

/// A rational as it appears in a document: an integer or a `"p/q"` string.
/// Floats fail to deserialize into either variant.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize, Serialize)]
#[serde(untagged)]
pub enum RationalText {
    Integer(i64),
    Text(String),
}

impl RationalText {
    pub fn parse(&self, field: &str) -> Result<Rational, CliError> {
        match self {
            RationalText::Integer(n) => Ok(Rational::from_integer((*n).into())),
            RationalText::Text(t) => parse_rational(t)
                .ok_or_else(|| CliError::Input(format!("{field}: `{t}` is not a rational of the form p/q"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub coeff: RationalText,
    pub exp: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum IdealSpec {
    Monomial(Vec<Vec<i64>>),
    Polynomial(Vec<Vec<Term>>),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub alpha: Option<RationalText>,
    pub max: Option<RationalText>,
    pub mode: Option<String>,
    pub box_cap: Option<u32>,
    pub schedule: Option<Vec<u32>>,
    #[serde(default)]
    pub assume_normal: bool,
    pub kappa: Option<u32>,
    /// Boundary divisor `w ∈ Q^d` for the multiplier command.
    pub boundary: Option<Vec<RationalText>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub matrix: Vec<Vec<i64>>,
    pub ideal: Option<IdealSpec>,
    #[serde(default)]
    pub options: Options,
}

impl Document {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let doc: Document = serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<(), CliError> {
        let d = self.matrix.len();
        if d == 0 || self.matrix[0].is_empty() {
            return Err(CliError::Input("matrix must be nonempty".into()));
        }
        if self.matrix.iter().any(|r| r.len() != self.matrix[0].len()) {
            return Err(CliError::Input("matrix rows have different lengths".into()));
        }
        let exps: Vec<&Vec<i64>> = match &self.ideal {
            None => Vec::new(),
            Some(IdealSpec::Monomial(g)) => g.iter().collect(),
            Some(IdealSpec::Polynomial(ps)) => ps.iter().flatten().map(|t| &t.exp).collect(),
        };
        if let Some(bad) = exps.iter().find(|e| e.len() != d) {
            return Err(CliError::Input(format!(
                "exponent {bad:?} has length {}, matrix has {d} rows",
                bad.len()
            )));
        }
        Ok(())
    }

    pub fn monomials(&self) -> Result<&[Vec<i64>], CliError> {
        match &self.ideal {
            Some(IdealSpec::Monomial(g)) => Ok(g),
            Some(IdealSpec::Polynomial(_)) => Err(CliError::Input(
                "this command needs a monomial ideal; polynomial ideals support only `transport`".into(),
            )),
            None => Err(CliError::Input("document has no ideal".into())),
        }
    }
}

pub fn parse_mode(text: &str) -> Result<Mode, CliError> {
    match text {
        "relint" => Ok(Mode::Relint),
        "closed" => Ok(Mode::Closed),
        other => Err(CliError::Input(format!("mode must be relint or closed, not `{other}`"))),
    }
}

pub fn parse_schedule(text: &str) -> Result<Vec<u32>, CliError> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| CliError::Input(format!("schedule entry `{t}` is not a nonnegative integer")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use toric_bsato::exactnum::rat;

    const PAPER: &str = r#"{
        "matrix": [[1, 1, 1, 1], [0, 1, 2, 3]],
        "ideal": {"monomial": [[1, 1], [1, 2]]},
        "options": {"alpha": "2/3", "max": 2, "mode": "closed", "kappa": 4}
    }"#;

    #[test]
    fn parses_the_paper_document() {
        let doc = Document::from_json(PAPER).unwrap();
        assert_eq!(doc.matrix, vec![vec![1, 1, 1, 1], vec![0, 1, 2, 3]]);
        assert_eq!(doc.monomials().unwrap(), &[vec![1, 1], vec![1, 2]]);
        assert_eq!(doc.options.alpha.as_ref().unwrap().parse("alpha").unwrap(), rat(2, 3));
        assert_eq!(doc.options.max.as_ref().unwrap().parse("max").unwrap(), rat(2, 1));
        assert_eq!(doc.options.kappa, Some(4));
        assert!(!doc.options.assume_normal);
    }

    #[test]
    fn polynomial_ideal() {
        let doc = Document::from_json(
            r#"{"matrix": [[1,1,1,1],[0,1,2,3]],
                "ideal": {"polynomial": [[{"coeff": "1", "exp": [1,1]}, {"coeff": "-1/2", "exp": [1,3]}]]}}"#,
        )
        .unwrap();
        let Some(IdealSpec::Polynomial(ps)) = &doc.ideal else { panic!() };
        assert_eq!(ps[0][1].coeff.parse("coeff").unwrap(), rat(-1, 2));
        assert!(doc.monomials().is_err());
    }

    #[test]
    fn rejects_floats_and_bad_shapes() {
        let float = r#"{"matrix": [[1]], "ideal": {"monomial": [[1]]}, "options": {"alpha": 0.5}}"#;
        assert!(Document::from_json(float).is_err());
        let float_text = r#"{"matrix": [[1]], "options": {"alpha": "0.5"}}"#;
        let doc = Document::from_json(float_text).unwrap();
        assert!(doc.options.alpha.unwrap().parse("alpha").is_err());
        assert!(Document::from_json(r#"{"matrix": [[1, 2], [3]]}"#).is_err());
        assert!(Document::from_json(r#"{"matrix": [[1, 0], [0, 1]], "ideal": {"monomial": [[1]]}}"#).is_err());
        assert!(Document::from_json(r#"{"matrix": [[1]], "extra": 1}"#).is_err());
        assert!(Document::from_json(r#"{"matrix": []}"#).is_err());
    }

    #[test]
    fn flags() {
        assert_eq!(parse_schedule("1, 2,5").unwrap(), vec![1, 2, 5]);
        assert!(parse_schedule("1,x").is_err());
        assert_eq!(parse_mode("relint").unwrap(), Mode::Relint);
        assert!(parse_mode("open").is_err());
    }
}
