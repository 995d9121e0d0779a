use std::fmt;

use super::element::GradedElement;
use super::generator::{Generator, Universe};
use super::parse::parse_element;
use crate::error::{Error, Result};

/// Generators with degrees plus homogeneous relations of positive degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPresentation {
    label: String,
    universe: Universe,
    relations: Vec<GradedElement>,
}

impl RingPresentation {
    /// Validates and normalizes a presentation.
    ///
    /// Inhomogeneous relations (total-class equations written as `lhs - rhs`)
    /// are split into their homogeneous components; zero components are
    /// dropped. A nonzero degree-0 component makes the presentation
    /// inconsistent.
    pub fn new(
        label: impl Into<String>,
        universe: Universe,
        relations: impl IntoIterator<Item = GradedElement>,
    ) -> Result<Self> {
        let mut split = Vec::new();
        for rel in relations {
            if !rel.universe().same_as(&universe) {
                return Err(Error::UniverseMismatch);
            }
            for (degree, part) in rel.homogeneous_components() {
                if degree == 0 {
                    return Err(Error::InconsistentRelation(part.to_string()));
                }
                split.push(part);
            }
        }
        Ok(RingPresentation {
            label: label.into(),
            universe,
            relations: split,
        })
    }

    /// Builds a presentation from generator declarations and relation strings.
    pub fn parse(label: impl Into<String>, generators: Vec<Generator>, relations: &[&str]) -> Result<Self> {
        let universe = Universe::new(generators)?;
        let rels = relations
            .iter()
            .map(|r| parse_element(&universe, r))
            .collect::<Result<Vec<_>>>()?;
        RingPresentation::new(label, universe, rels)
    }

    /// The presentation of the point: no generators, no relations.
    pub fn point() -> Self {
        RingPresentation {
            label: "pt".into(),
            universe: Universe::empty(),
            relations: Vec::new(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn generators(&self) -> &[Generator] {
        self.universe.generators()
    }

    pub fn relations(&self) -> &[GradedElement] {
        &self.relations
    }

    /// Same generators, additional relations.
    pub fn with_relations(&self, extra: impl IntoIterator<Item = GradedElement>) -> Result<Self> {
        RingPresentation::new(
            self.label.clone(),
            self.universe.clone(),
            self.relations.iter().cloned().chain(extra),
        )
    }

    /// Appends generators and relations; existing relations are re-embedded.
    pub fn extend(
        &self,
        label: impl Into<String>,
        generators: Vec<Generator>,
        relations: impl FnOnce(&Universe) -> Result<Vec<GradedElement>>,
    ) -> Result<Self> {
        let universe = self.universe.extend(generators)?;
        let mut rels = self
            .relations
            .iter()
            .map(|r| r.embed(&universe))
            .collect::<Result<Vec<_>>>()?;
        rels.extend(relations(&universe)?);
        RingPresentation::new(label, universe, rels)
    }

    pub fn element(&self, expr: &str) -> Result<GradedElement> {
        parse_element(&self.universe, expr)
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {}", self.label)?;
        let gens: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        if gens.is_empty() {
            writeln!(f, "generators: none")?;
        } else {
            writeln!(f, "generators: {}", gens.join(", "))?;
        }
        writeln!(f, "relations:")?;
        for r in &self.relations {
            writeln!(f, "  {}", r)?;
        }
        Ok(())
    }
}
