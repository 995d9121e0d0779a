use super::{flag_bundle, grassmannian_bundle, BundleData, BundleKind};
use crate::algebra::{Generator, GradedElement, QuotientRing, RingPresentation, Universe};
use crate::catalog::SpaceDescriptor;
use crate::error::{Error, Result};
use crate::series::OrientedKind;

fn alpha(i: u32) -> String {
    format!("a{}", i)
}

/// `H_T(pt) = Q[a1, ..., an]`, all generators of degree 2.
pub fn equivariant_base(n: u32, cutoff: u32) -> Result<QuotientRing> {
    let u = Universe::new((1..=n).map(|i| Generator::new(alpha(i), 2)).collect())?;
    let p = RingPresentation::new(format!("H_T{}(pt)", n), u, [])?;
    Ok(QuotientRing::new(p, cutoff))
}

/// Rank of the maximal torus acting on the space.
pub fn torus_rank(d: &SpaceDescriptor) -> u32 {
    use SpaceDescriptor::*;
    match *d {
        ComplexGrassmannian { n, .. }
        | RealGrassmannianEven { n, .. }
        | OrientedGrassmannian { n, .. }
        | CompleteFlagComplex { n }
        | CompleteFlagReal { n, .. }
        | CompleteFlagOriented { n, .. } => n,
        _ => 0,
    }
}

/// Equivariant cohomology of a Grassmannian or flag manifold over
/// `H_T(pt)`, as the corresponding bundle with total class `Π(1 + a_i)`
/// (complex) or `Π(1 + a_i^2)` and euler class `Π a_i` (real, oriented).
pub fn equivariant_space(d: &SpaceDescriptor, cutoff: Option<u32>) -> Result<QuotientRing> {
    let cutoff = cutoff.ok_or(Error::MissingCutoff)?;
    d.validate()?;
    use SpaceDescriptor::*;
    let n = torus_rank(d);
    let base = equivariant_base(n, cutoff)?;
    let u = base.universe().clone();
    let a = |i: u32| GradedElement::generator(&u, &alpha(i));
    let (kind, odd_ambient) = match *d {
        ComplexGrassmannian { .. } | CompleteFlagComplex { .. } => (BundleKind::Complex, false),
        RealGrassmannianEven { variant, .. } => (BundleKind::Real, variant != OrientedKind::EvenEven),
        OrientedGrassmannian { kind, .. } => (BundleKind::Oriented, kind != OrientedKind::EvenEven),
        CompleteFlagReal { odd_ambient, .. } => (BundleKind::Real, odd_ambient),
        CompleteFlagOriented { odd_ambient, .. } => (BundleKind::Oriented, odd_ambient),
        _ => {
            return Err(Error::InvalidParameters(format!(
                "no equivariant model for {}",
                d.label()
            )))
        }
    };
    let mut total = GradedElement::one(&u);
    let mut euler = GradedElement::one(&u);
    for i in 1..=n {
        let ai = a(i)?;
        let factor = if kind == BundleKind::Complex {
            ai.clone()
        } else {
            ai.pow(2)
        };
        total = &total * &(&GradedElement::one(&u) + &factor);
        euler = &euler * &ai;
    }
    let rank = match kind {
        BundleKind::Complex => n,
        _ => 2 * n + odd_ambient as u32,
    };
    let euler = (kind == BundleKind::Oriented && !odd_ambient).then_some(euler);
    let bundle = BundleData::new(base, kind, rank, total, euler)?;
    let ring = match *d {
        ComplexGrassmannian { k, .. }
        | RealGrassmannianEven {
            variant: OrientedKind::EvenEven | OrientedKind::EvenOdd,
            k,
            ..
        } => grassmannian_bundle(&bundle, k)?,
        OrientedGrassmannian {
            kind: OrientedKind::EvenEven | OrientedKind::EvenOdd,
            k,
            ..
        } => grassmannian_bundle(&bundle, k)?,
        // G_{2k+1}(R^{2n+1}) is G_{2n-2k}(R^{2n+1})
        RealGrassmannianEven { k, .. } | OrientedGrassmannian { k, .. } => grassmannian_bundle(&bundle, n - k)?,
        _ => flag_bundle(&bundle)?,
    };
    let p = ring.presentation().clone().with_label(format!("H_T({})", d.label()));
    Ok(QuotientRing::with_rule(p, cutoff, ring.pivot_rule()))
}

/// Sets every torus generator `a_i` to zero.
pub fn specialize_torus(ring: &QuotientRing) -> Result<QuotientRing> {
    let u = ring.universe();
    let zeros = u
        .generators()
        .iter()
        .filter(|g| g.name.len() > 1 && g.name.starts_with('a') && g.name[1..].chars().all(|c| c.is_ascii_digit()))
        .map(|g| GradedElement::generator(u, &g.name))
        .collect::<Result<Vec<_>>>()?;
    ring.add_relations(zeros)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cutoff_is_mandatory() {
        let d = SpaceDescriptor::CompleteFlagComplex { n: 2 };
        assert_eq!(equivariant_space(&d, None).unwrap_err(), Error::MissingCutoff);
    }

    #[test]
    fn equivariant_fl_c2() {
        let d = SpaceDescriptor::CompleteFlagComplex { n: 2 };
        let r = equivariant_space(&d, Some(6)).unwrap();
        // 1/(1-t^2)^2 * (1+t^2)
        assert_eq!(r.dims(6).unwrap(), vec![1, 0, 3, 0, 5, 0, 7]);
        let s = specialize_torus(&r).unwrap();
        assert_eq!(s.dims(6).unwrap(), vec![1, 0, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn oriented_flag_relation_has_torus_euler_class() {
        let d = SpaceDescriptor::CompleteFlagOriented {
            n: 2,
            odd_ambient: false,
        };
        let r = equivariant_space(&d, Some(4)).unwrap();
        let rel = r.element("e1*e2 - a1*a2").unwrap();
        assert!(r.presentation().relations().contains(&rel));
    }
}
