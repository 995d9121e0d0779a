use super::{projectivization, BundleData, BundleKind};
use crate::algebra::{Generator, GradedElement, QuotientRing, RingPresentation, Universe};
use crate::catalog::SpaceDescriptor;
use crate::error::{Error, Result};
use crate::series::{ClosedFormSeries, TruncatedSeries};

/// Checks that `images` define a graded ring map from `source` to `target`:
/// degrees match and every relation of `source` maps to zero (tested by
/// normal form up to the target cutoff).
fn check_ring_map(source: &QuotientRing, target: &QuotientRing, images: &[GradedElement]) -> Result<()> {
    let gens = source.universe().generators();
    if images.len() != gens.len() {
        return Err(Error::InvalidParameters(format!(
            "map from {} needs {} images, got {}",
            source.label(),
            gens.len(),
            images.len()
        )));
    }
    for (g, img) in gens.iter().zip(images) {
        if !img.universe().same_as(target.universe()) {
            return Err(Error::UniverseMismatch);
        }
        match img.homogeneous_degree() {
            Ok(None) => {}
            Ok(Some(d)) if d == g.degree => {}
            Ok(Some(d)) => {
                return Err(Error::MapDegreeMismatch {
                    generator: g.name.clone(),
                    expected: g.degree,
                    found: d,
                })
            }
            Err(_) => {
                return Err(Error::MapDegreeMismatch {
                    generator: g.name.clone(),
                    expected: g.degree,
                    found: img.max_degree().unwrap_or(0),
                })
            }
        }
    }
    for rel in source.presentation().relations() {
        let image = rel.substitute(target.universe(), images)?;
        let Some(d) = image.max_degree() else { continue };
        if d > target.cutoff() {
            continue;
        }
        let nf = target.normal_form(&image)?;
        if !nf.is_zero() {
            return Err(Error::NotARingMap {
                relation: rel.to_string(),
                image: nf.to_string(),
                degree: d,
            });
        }
    }
    Ok(())
}

/// `B1 ⊗_{B0} E0`: the generators of `b1` and `e0` (clashing names of `e0`
/// get the suffix `__e0`), both relation sets, and `f1(g) - f0(g)` for
/// every generator `g` of `b0`. The cutoff is the sum of the two cutoffs.
pub fn ring_pushout(
    b0: &QuotientRing,
    b1: &QuotientRing,
    e0: &QuotientRing,
    map_b0_to_b1: &[GradedElement],
    map_b0_to_e0: &[GradedElement],
) -> Result<QuotientRing> {
    check_ring_map(b0, b1, map_b0_to_b1)?;
    check_ring_map(b0, e0, map_b0_to_e0)?;

    let renamed: Vec<Generator> = e0
        .universe()
        .generators()
        .iter()
        .map(|g| {
            let mut g = g.clone();
            if b1.universe().position(&g.name).is_some() {
                g.name = format!("{}__e0", g.name);
            }
            g
        })
        .collect();
    let mut gens = b1.universe().generators().to_vec();
    gens.extend(renamed.iter().cloned());
    let u = Universe::new(gens)?;
    let rename: Vec<GradedElement> = renamed
        .iter()
        .map(|g| GradedElement::generator(&u, &g.name))
        .collect::<Result<_>>()?;
    let from_e0 = |x: &GradedElement| x.substitute(&u, &rename);

    let mut rels = Vec::new();
    for r in b1.presentation().relations() {
        rels.push(r.embed(&u)?);
    }
    for r in e0.presentation().relations() {
        rels.push(from_e0(r)?);
    }
    for (f1, f0) in map_b0_to_b1.iter().zip(map_b0_to_e0) {
        rels.push(&f1.embed(&u)? - &from_e0(f0)?);
    }
    let label = format!("{} (x)_{} {}", b1.label(), b0.label(), e0.label());
    let p = RingPresentation::new(label, u, rels)?;
    Ok(QuotientRing::new(p, b1.cutoff() + e0.cutoff()))
}

fn identity_images(r: &QuotientRing) -> Result<Vec<GradedElement>> {
    r.universe()
        .generators()
        .iter()
        .map(|g| GradedElement::generator(r.universe(), &g.name))
        .collect()
}

/// The three reference pushouts at parameter `n >= 2`, each with its
/// expected dimension series up to the pushout's cutoff.
pub fn reference_pushouts(n: u32) -> Result<Vec<(String, QuotientRing, TruncatedSeries)>> {
    let mut out = Vec::new();
    let point = QuotientRing::new(RingPresentation::point(), 0);

    // trivial base: CP^1 ⊗ CP^{n-1}
    let cp1 = SpaceDescriptor::ProjectiveSpaceComplex { m: 1 }.ring()?;
    let cpn = SpaceDescriptor::ProjectiveSpaceComplex { m: n - 1 }.ring()?;
    let r = ring_pushout(&point, &cp1, &cpn, &[], &[])?;
    let expected =
        (&ClosedFormSeries::one_plus(2) * &ClosedFormSeries::ratio(vec![2 * n], vec![2])).truncate(r.cutoff());
    out.push((format!("pushout over a point, CP^1 and CP^{}", n - 1), r, expected));

    // identity pullback: B1 = B0 = CP^{n-1}, E0 = P(L + 1) over it
    let c = cpn.element("1 + c1")?;
    let e0 = projectivization(&BundleData::new(cpn.clone(), BundleKind::Complex, 2, c, None)?)?;
    let map_e0 = vec![e0.element("c1")?];
    let r = ring_pushout(&cpn, &cpn, &e0, &identity_images(&cpn)?, &map_e0)?;
    let expected =
        (&ClosedFormSeries::ratio(vec![2 * n], vec![2]) * &ClosedFormSeries::one_plus(2)).truncate(r.cutoff());
    out.push((format!("identity pullback of P(L+1) over CP^{}", n - 1), r, expected));

    // BU(1): E0 = P(L + C^{n-1}) over Q[h], B1 = point with h -> 0
    let bu1 = QuotientRing::new(
        RingPresentation::new("BU(1)", Universe::new(vec![Generator::new("h", 2)])?, [])?,
        2 * (n - 1),
    );
    let c = bu1.element("1 + h")?;
    let e0 = projectivization(&BundleData::new(bu1.clone(), BundleKind::Complex, n, c, None)?)?;
    let map_b1 = vec![GradedElement::zero(point.universe())];
    let map_e0 = vec![e0.element("h")?];
    let r = ring_pushout(&bu1, &point, &e0, &map_b1, &map_e0)?;
    let expected = ClosedFormSeries::ratio(vec![2 * n], vec![2]).truncate(r.cutoff());
    out.push((format!("BU(1) pushout recovering G_1(C^{})", n), r, expected));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_dimensions() {
        for (name, ring, expected) in reference_pushouts(3).unwrap() {
            let got = crate::series::series_from_ring(&ring, ring.cutoff()).unwrap();
            assert_eq!(got, expected, "{}", name);
        }
    }

    #[test]
    fn invalid_map_is_rejected() {
        let cp1 = SpaceDescriptor::ProjectiveSpaceComplex { m: 1 }.ring().unwrap();
        let cp2 = SpaceDescriptor::ProjectiveSpaceComplex { m: 2 }.ring().unwrap();
        let f = vec![cp2.element("c1").unwrap()];
        let err = ring_pushout(&cp1, &cp2, &cp2, &f, &f).unwrap_err();
        assert!(matches!(err, Error::NotARingMap { degree: 4, .. }), "{:?}", err);
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let cp1 = SpaceDescriptor::ProjectiveSpaceComplex { m: 1 }.ring().unwrap();
        let cp2 = SpaceDescriptor::ProjectiveSpaceComplex { m: 2 }.ring().unwrap();
        let f = vec![cp2.element("c1^2").unwrap()];
        let err = ring_pushout(&cp1, &cp2, &cp2, &f, &f).unwrap_err();
        assert!(matches!(
            err,
            Error::MapDegreeMismatch {
                expected: 2,
                found: 4,
                ..
            }
        ));
    }
}
