//! Structured (JSON) output. One self-describing document per invocation;
//! elements are lists of `[exponents, numerator, denominator]` in graded-lex
//! order, with the rationals written as decimal strings.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use flagring::algebra::{Generator, GradedElement, Monomial, RingPresentation, Role, Universe};
use flagring::verify::Report;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub type TermDoc = (Vec<u32>, String, String);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Document {
    Presentation {
        label: String,
        cutoff: Option<u32>,
        generators: Vec<(String, u32)>,
        /// Non-plain elimination roles, by generator name.
        #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
        roles: BTreeMap<String, String>,
        relations: Vec<Vec<TermDoc>>,
    },
    Series {
        label: String,
        cutoff: u32,
        coefficients: Vec<i64>,
        closed_form: Option<String>,
    },
    Basis {
        label: String,
        degree: u32,
        generators: Vec<(String, u32)>,
        monomials: Vec<Vec<u32>>,
        family: Option<String>,
        in_family: Vec<bool>,
    },
    NormalForm {
        label: String,
        generators: Vec<(String, u32)>,
        element: Vec<TermDoc>,
    },
    Report {
        passed: bool,
        checks: Vec<CheckDoc>,
    },
}

/// Degree first, then larger exponents on earlier generators first.
pub fn graded_lex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.exponents().cmp(a.exponents()))
}

pub fn generator_pairs(u: &Universe) -> Vec<(String, u32)> {
    u.generators().iter().map(|g| (g.name.clone(), g.degree)).collect()
}

pub fn element_doc(e: &GradedElement) -> Vec<TermDoc> {
    let mut terms: Vec<(&Monomial, &BigRational)> = e.terms().collect();
    terms.sort_by(|a, b| graded_lex(a.0, b.0));
    terms
        .into_iter()
        .map(|(m, c)| (m.exponents().to_vec(), c.numer().to_string(), c.denom().to_string()))
        .collect()
}

pub fn element_from_doc(u: &Universe, terms: &[TermDoc]) -> Result<GradedElement, CliError> {
    let mut out = Vec::with_capacity(terms.len());
    for (exps, num, den) in terms {
        let m = Monomial::from_exponents(u, exps.clone())
            .ok_or_else(|| CliError::Config(format!("invalid exponent vector {:?}", exps)))?;
        let parse = |s: &str| {
            s.parse::<BigInt>()
                .map_err(|_| CliError::Config(format!("invalid integer {:?}", s)))
        };
        let den = parse(den)?;
        if den == BigInt::from(0) {
            return Err(CliError::Config("zero denominator".into()));
        }
        out.push((m, BigRational::new(parse(num)?, den)));
    }
    Ok(GradedElement::from_terms(u, out))
}

pub fn presentation_doc(p: &RingPresentation, cutoff: Option<u32>) -> Document {
    let roles = p
        .generators()
        .iter()
        .filter(|g| g.role != Role::Plain)
        .map(|g| (g.name.clone(), g.role.as_str().to_string()))
        .collect();
    Document::Presentation {
        label: p.label().to_string(),
        cutoff,
        generators: generator_pairs(p.universe()),
        roles,
        relations: p.relations().iter().map(element_doc).collect(),
    }
}

/// Inverse of [`presentation_doc`].
pub fn presentation_from_doc(doc: &Document) -> Result<(RingPresentation, Option<u32>), CliError> {
    let Document::Presentation {
        label,
        cutoff,
        generators,
        roles,
        relations,
    } = doc
    else {
        return Err(CliError::Config("document is not a presentation".into()));
    };
    let mut gens = Vec::with_capacity(generators.len());
    for (name, degree) in generators {
        let mut g = Generator::new(name.clone(), *degree);
        if let Some(r) = roles.get(name) {
            g = g.with_role(Role::parse(r).ok_or_else(|| CliError::Config(format!("unknown role {:?}", r)))?);
        }
        gens.push(g);
    }
    let u = Universe::new(gens)?;
    let rels = relations
        .iter()
        .map(|r| element_from_doc(&u, r))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((RingPresentation::new(label.clone(), u, rels)?, *cutoff))
}

pub fn report_doc(r: &Report) -> Document {
    Document::Report {
        passed: r.passed(),
        checks: r
            .checks
            .iter()
            .map(|c| CheckDoc {
                name: c.name.clone(),
                passed: c.passed,
                detail: c.detail.clone(),
            })
            .collect(),
    }
}

impl Document {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }
}
