//! Problem files: a JSON description of a presented algebra, its bracket and
//! optional normalization, derivation and candidate-ideal blocks.

use std::collections::BTreeMap;
use std::path::Path;

use poisson_norm::ideal::IdealPresentation;
use poisson_norm::normalization::{DerivationData, NormalizationPresentation};
use poisson_norm::poisson::{PoissonStructure, PresentedAlgebra};
use poisson_norm::poly::{
    parse_expression, parse_univariate, CoefficientField, MonomialOrder, Polynomial, Rational,
    RationalFunction, Ring, RingRef,
};
use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed problem file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{context}: {source}")]
    Algebra { context: String, source: poisson_norm::Error },
    #[error("{0}")]
    Invalid(String),
}

fn at(context: impl Into<String>) -> impl FnOnce(poisson_norm::Error) -> LoadError {
    let context = context.into();
    move |source| LoadError::Algebra { context, source }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub ring: RingSpec,
    #[serde(default)]
    pub ideal: Vec<String>,
    #[serde(default)]
    pub domain: bool,
    #[serde(default)]
    pub bracket: BTreeMap<String, String>,
    pub normalization: Option<NormalizationSpec>,
    pub derivation: Option<BTreeMap<String, String>>,
    #[serde(default)]
    pub candidate_ideals: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub variables: Vec<String>,
    #[serde(default)]
    pub field: FieldSpec,
    pub order: Option<String>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FieldSpec {
    #[default]
    Rationals,
    NumberField {
        generator: String,
        minimal_polynomial: String,
    },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NormalizationSpec {
    pub variables: Vec<String>,
    #[serde(default)]
    pub ideal: Vec<String>,
    #[serde(default = "yes")]
    pub domain: bool,
    pub images: BTreeMap<String, String>,
    pub fractions: BTreeMap<String, FractionSpec>,
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FractionSpec {
    pub numerator: String,
    #[serde(default = "one")]
    pub denominator: String,
}

fn one() -> String {
    "1".into()
}

/// A loaded and validated problem.
#[derive(Debug, Clone)]
pub struct Problem {
    pub ring: RingRef,
    pub algebra: PresentedAlgebra,
    pub bracket: PoissonStructure,
    pub normalization: Option<NormalizationPresentation>,
    pub derivation: Option<DerivationData>,
    pub candidate_ideals: BTreeMap<String, IdealPresentation>,
}

impl Problem {
    pub fn load(path: &Path) -> Result<Self, LoadError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| LoadError::Io { path: path.display().to_string(), message: e.to_string() })?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, LoadError> {
        let file: ProblemFile = serde_json::from_str(text)?;
        file.build()
    }

    pub fn parse(&self, expr: &str) -> Result<Polynomial, LoadError> {
        parse_expression(expr, &self.ring).map_err(at(format!("expression `{expr}`")))
    }

    /// Comma-separated generators, e.g. `x, y^2 - z`.
    pub fn parse_ideal(&self, list: &str) -> Result<IdealPresentation, LoadError> {
        let gens = list.split(',').map(|g| self.parse(g.trim())).collect::<Result<Vec<_>, _>>()?;
        IdealPresentation::new(&self.ring, gens).map_err(at("ideal"))
    }
}

pub fn parse_order(name: Option<&str>) -> Result<MonomialOrder, LoadError> {
    match name {
        None => Ok(MonomialOrder::default()),
        Some(n) => MonomialOrder::from_name(n)
            .ok_or_else(|| LoadError::Invalid(format!("unknown monomial order `{n}`"))),
    }
}

/// `QQ`, or `QQ[alpha]/(alpha^2 + 1)` as printed by the library.
pub fn parse_field(text: &str) -> Result<CoefficientField, LoadError> {
    let t = text.trim();
    if t == "QQ" || t == "Q" {
        return Ok(CoefficientField::Rationals);
    }
    let bad = || LoadError::Invalid(format!("cannot read field `{text}`; expected QQ or QQ[a]/(m(a))"));
    let rest = t.strip_prefix("QQ[").or_else(|| t.strip_prefix("Q[")).ok_or_else(bad)?;
    let (generator, rest) = rest.split_once(']').ok_or_else(bad)?;
    let modulus = rest.trim().strip_prefix("/(").and_then(|m| m.strip_suffix(')')).ok_or_else(bad)?;
    number_field(generator.trim(), modulus)
}

pub fn number_field(generator: &str, minimal_polynomial: &str) -> Result<CoefficientField, LoadError> {
    let m = parse_univariate(minimal_polynomial, generator)
        .map_err(at(format!("minimal polynomial `{minimal_polynomial}`")))?;
    CoefficientField::number_field(generator, m).map_err(at("coefficient field"))
}

/// Lowest-degree-first coefficients of a univariate polynomial over Q.
pub fn parse_rational_univariate(text: &str, var: &str) -> Result<Vec<Rational>, LoadError> {
    parse_univariate(text, var).map_err(at(format!("polynomial `{text}`")))
}

fn parse_all(ring: &RingRef, exprs: &[String], what: &str) -> Result<Vec<Polynomial>, LoadError> {
    exprs.iter().map(|e| parse_expression(e, ring).map_err(at(format!("{what} `{e}`")))).collect()
}

/// Values listed by variable name; every variable must appear exactly once.
fn by_variable<'a, T>(
    ring: &RingRef,
    map: &'a BTreeMap<String, T>,
    what: &str,
) -> Result<Vec<&'a T>, LoadError> {
    if let Some(extra) = map.keys().find(|k| ring.variable_index(k).is_none()) {
        return Err(LoadError::Invalid(format!("{what}: `{extra}` is not a declared variable")));
    }
    ring.variables()
        .iter()
        .map(|v| map.get(v).ok_or_else(|| LoadError::Invalid(format!("{what}: missing entry for `{v}`"))))
        .collect()
}

impl ProblemFile {
    pub fn build(&self) -> Result<Problem, LoadError> {
        let field = match &self.ring.field {
            FieldSpec::Rationals => CoefficientField::Rationals,
            FieldSpec::NumberField { generator, minimal_polynomial } => {
                number_field(generator, minimal_polynomial)?
            }
        };
        let order = parse_order(self.ring.order.as_deref())?;
        let ring = Ring::new(&self.ring.variables, field.clone(), order).map_err(at("ring"))?;
        let ideal = IdealPresentation::new(&ring, parse_all(&ring, &self.ideal, "ideal generator")?)
            .map_err(at("ideal"))?;
        let algebra = PresentedAlgebra::new(ideal, self.domain).map_err(at("algebra"))?;

        let mut entries = Vec::new();
        for (key, expr) in &self.bracket {
            let (a, b) = key
                .split_once(',')
                .ok_or_else(|| LoadError::Invalid(format!("bracket key `{key}` must look like \"x,y\"")))?;
            let (a, b) = (a.trim(), b.trim());
            for v in [a, b] {
                if ring.variable_index(v).is_none() {
                    return Err(LoadError::Invalid(format!(
                        "bracket key `{key}`: `{v}` is not a declared variable"
                    )));
                }
            }
            let p = parse_expression(expr, &ring).map_err(at(format!("bracket {{{key}}}")))?;
            entries.push((a.to_string(), b.to_string(), p));
        }
        let bracket = PoissonStructure::from_named(algebra.clone(), entries).map_err(at("bracket"))?;

        let normalization = match &self.normalization {
            None => None,
            Some(spec) => Some(spec.build(&algebra, field, order)?),
        };

        let derivation = match &self.derivation {
            None => None,
            Some(map) => {
                let mut values = Vec::new();
                for (name, expr) in map {
                    if ring.variable_index(name).is_none() {
                        return Err(LoadError::Invalid(format!(
                            "derivation: `{name}` is not a declared variable"
                        )));
                    }
                    let p = parse_expression(expr, &ring).map_err(at(format!("derivation of {name}")))?;
                    values.push((name.clone(), p));
                }
                Some(DerivationData::from_named(&ring, values).map_err(at("derivation"))?)
            }
        };

        let mut candidate_ideals = BTreeMap::new();
        for (name, gens) in &self.candidate_ideals {
            let gens = parse_all(&ring, gens, &format!("candidate ideal `{name}`"))?;
            let ideal =
                IdealPresentation::new(&ring, gens).map_err(at(format!("candidate ideal `{name}`")))?;
            candidate_ideals.insert(name.clone(), ideal);
        }

        Ok(Problem { ring, algebra, bracket, normalization, derivation, candidate_ideals })
    }
}

impl NormalizationSpec {
    fn build(
        &self,
        source: &PresentedAlgebra,
        field: CoefficientField,
        order: MonomialOrder,
    ) -> Result<NormalizationPresentation, LoadError> {
        let src = source.ring();
        let tgt = Ring::new(&self.variables, field, order).map_err(at("normalization ring"))?;
        let ideal =
            IdealPresentation::new(&tgt, parse_all(&tgt, &self.ideal, "normalization ideal generator")?)
                .map_err(at("normalization ideal"))?;
        let target = PresentedAlgebra::new(ideal, self.domain).map_err(at("normalization algebra"))?;
        let images = by_variable(src, &self.images, "normalization images")?
            .into_iter()
            .zip(src.variables())
            .map(|(e, v)| parse_expression(e, &tgt).map_err(at(format!("image of {v}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let fractions = by_variable(&tgt, &self.fractions, "normalization fractions")?
            .into_iter()
            .zip(tgt.variables())
            .map(|(f, v)| {
                let num = parse_expression(&f.numerator, src).map_err(at(format!("numerator for {v}")))?;
                let den =
                    parse_expression(&f.denominator, src).map_err(at(format!("denominator for {v}")))?;
                RationalFunction::new(num, den, None).map_err(at(format!("fraction for {v}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        NormalizationPresentation::new(source.clone(), target, images, fractions).map_err(at("normalization"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const UMBRELLA: &str = r#"{
        "ring": {"variables": ["x", "y", "z"]},
        "ideal": ["z^2 - x^2*y"],
        "domain": true,
        "bracket": {"x,y": "2*z", "y,z": "-2*x*y", "z,x": "-x^2"}
    }"#;

    #[test]
    fn loads_bracket_and_ideal() {
        let p = Problem::from_json(UMBRELLA).unwrap();
        assert_eq!(p.bracket.describe(), ["{x,y} = 2*z", "{x,z} = x^2", "{y,z} = -2*x*y"]);
        assert_eq!(p.algebra.ideal().to_string(), "⟨-x^2*y + z^2⟩");
        assert!(p.normalization.is_none());
    }

    #[test]
    fn rejects_unknown_bracket_variable() {
        let text = UMBRELLA.replace("\"x,y\"", "\"x,q\"");
        assert!(matches!(Problem::from_json(&text), Err(LoadError::Invalid(_))));
    }

    #[test]
    fn rejects_malformed_expression() {
        let text = UMBRELLA.replace("2*z", "2*");
        assert!(matches!(Problem::from_json(&text), Err(LoadError::Algebra { .. })));
    }

    #[test]
    fn rejects_unknown_fields() {
        let text = UMBRELLA.replace("\"domain\"", "\"domian\"");
        assert!(matches!(Problem::from_json(&text), Err(LoadError::Json(_))));
    }

    #[test]
    fn field_round_trip() {
        let f = parse_field("QQ[alpha]/(alpha^2 + 1)").unwrap();
        assert_eq!(f.to_string(), "QQ[alpha]/(alpha^2 + 1)");
        assert_eq!(parse_field(&f.to_string()).unwrap(), f);
        assert_eq!(parse_field("QQ").unwrap(), CoefficientField::Rationals);
        assert!(parse_field("RR").is_err());
        assert!(parse_field("QQ[a]/(a^2)").is_err());
    }

    #[test]
    fn number_field_ring() {
        let text = r#"{
            "ring": {"variables": ["x"], "field": {"kind": "number-field", "generator": "i", "minimal_polynomial": "i^2 + 1"}},
            "bracket": {}
        }"#;
        let p = Problem::from_json(text).unwrap();
        assert_eq!(p.parse("(i*x)^2").unwrap().to_string(), "-x^2");
    }

    #[test]
    fn normalization_block_must_cover_variables() {
        let text = r#"{
            "ring": {"variables": ["x", "y"]},
            "ideal": ["y^2 - x^3"],
            "domain": true,
            "normalization": {
                "variables": ["t"],
                "images": {"x": "t^2"},
                "fractions": {"t": {"numerator": "y", "denominator": "x"}}
            }
        }"#;
        let err = Problem::from_json(text).unwrap_err();
        assert!(err.to_string().contains("missing entry for `y`"), "{err}");
    }
}
