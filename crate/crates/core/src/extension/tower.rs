use super::{flag_bundle_named, grassmannian_bundle_named, projectivization_named, BundleData, BundleKind};
use crate::algebra::{parse_element, GradedElement, QuotientRing, RingPresentation};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionType {
    Projectivize,
    Grassmannianize(u32),
    CompleteFlag,
}

/// One stage of a tower. `classes[j - 1]` is the expression of `c_j(V)` (or
/// `p_j(V)`) in the generators of the previous stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerStage {
    pub kind: BundleKind,
    pub rank: u32,
    pub classes: Vec<String>,
    pub euler: Option<String>,
    pub extension: ExtensionType,
}

impl TowerStage {
    pub fn new(kind: BundleKind, rank: u32, classes: Vec<String>, extension: ExtensionType) -> Self {
        TowerStage {
            kind,
            rank,
            classes,
            euler: None,
            extension,
        }
    }

    pub fn with_euler(mut self, euler: impl Into<String>) -> Self {
        self.euler = Some(euler.into());
        self
    }

    fn bundle(&self, base: &QuotientRing, index: usize) -> Result<BundleData> {
        let u = base.universe();
        let unit = self.kind.unit();
        let mut total = GradedElement::one(u);
        for (j, expr) in self.classes.iter().enumerate() {
            let class = parse_element(u, expr)?;
            let want = unit * (j as u32 + 1);
            match class.homogeneous_degree() {
                Ok(None) => {}
                Ok(Some(d)) if d == want => {}
                Ok(Some(d)) => {
                    return Err(Error::InvalidBundle(format!(
                        "stage {}: class {} = '{}' has degree {}, expected {}",
                        index,
                        j + 1,
                        expr,
                        d,
                        want
                    )))
                }
                Err(_) => {
                    return Err(Error::InvalidBundle(format!(
                        "stage {}: class {} = '{}' is not homogeneous",
                        index,
                        j + 1,
                        expr
                    )))
                }
            }
            total = &total + &class;
        }
        let euler = match &self.euler {
            Some(e) => Some(parse_element(u, e)?),
            None if self.kind == BundleKind::Oriented && self.rank.is_multiple_of(2) => Some(GradedElement::zero(u)),
            None => None,
        };
        BundleData::new(base.clone(), self.kind, self.rank, total, euler)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TowerSpec {
    pub stages: Vec<TowerStage>,
}

impl TowerSpec {
    pub fn new(stages: Vec<TowerStage>) -> Self {
        TowerSpec { stages }
    }
}

/// Builds the tower from a point; stage `i` introduces generators with
/// suffix `_i` (`x_i` for projectivizations, `c1_i`, `u1_i`, ... otherwise).
pub fn bott_tower(spec: &TowerSpec) -> Result<QuotientRing> {
    let point = QuotientRing::new(RingPresentation::point().with_label("tower"), 0);
    extend_tower(&point, &spec.stages, 1)
}

/// Appends stages to an existing ring, numbering them from `first_index`.
pub fn extend_tower(ring: &QuotientRing, stages: &[TowerStage], first_index: usize) -> Result<QuotientRing> {
    let mut current = ring.clone();
    for (offset, stage) in stages.iter().enumerate() {
        let i = first_index + offset;
        let bundle = stage.bundle(&current, i)?;
        let suffix = format!("_{}", i);
        let next = match stage.extension {
            ExtensionType::Projectivize => projectivization_named(&bundle, &format!("x{}", suffix))?,
            ExtensionType::Grassmannianize(k) => grassmannian_bundle_named(&bundle, k, &suffix)?,
            ExtensionType::CompleteFlag => flag_bundle_named(&bundle, &suffix)?,
        };
        let label = format!("{} / stage {}", ring.label(), i);
        current = QuotientRing::with_rule(
            next.presentation().clone().with_label(label),
            next.cutoff(),
            next.pivot_rule(),
        );
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp1_stage(c1: &str) -> TowerStage {
        TowerStage::new(
            BundleKind::Complex,
            2,
            vec![c1.into(), "0".into()],
            ExtensionType::Projectivize,
        )
    }

    #[test]
    fn single_stage_is_cp1() {
        let r = bott_tower(&TowerSpec::new(vec![cp1_stage("0")])).unwrap();
        assert_eq!(r.presentation().relations()[0].to_string(), "x_1^2");
        assert_eq!(r.dims(2).unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn two_stage_hirzebruch_surface() {
        let r = bott_tower(&TowerSpec::new(vec![cp1_stage("0"), cp1_stage("3*x_1")])).unwrap();
        let rels: Vec<String> = r.presentation().relations().iter().map(|e| e.to_string()).collect();
        assert_eq!(rels, vec!["x_1^2", "-3*x_1*x_2 + x_2^2"]);
        assert_eq!(r.dims(4).unwrap(), vec![1, 0, 2, 0, 1]);
    }

    #[test]
    fn malformed_stage_class() {
        let spec = TowerSpec::new(vec![cp1_stage("0"), cp1_stage("x_1^2")]);
        assert!(matches!(bott_tower(&spec), Err(Error::InvalidBundle(_))));
        let spec = TowerSpec::new(vec![cp1_stage("y")]);
        assert!(matches!(bott_tower(&spec), Err(Error::UndeclaredGenerator(_))));
    }
}
