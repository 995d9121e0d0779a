//! Leray–Hirsch extensions of a presented base ring: Grassmannian,
//! projective, sphere and flag bundles, plus towers, equivariant rings and
//! pushouts built on top of them.

mod equivariant;
mod pushout;
mod tower;

pub use equivariant::{equivariant_base, equivariant_space, specialize_torus, torus_rank};
pub use pushout::{reference_pushouts, ring_pushout};
pub use tower::{bott_tower, extend_tower, ExtensionType, TowerSpec, TowerStage};

use crate::algebra::{Generator, GradedElement, QuotientRing, RingPresentation, Role, Universe};
use crate::catalog::SpaceDescriptor;
use crate::error::{Error, Result};
use crate::series::{
    complex_grassmannian_series, oriented_series, series_from_ring, substitute_t_squared, ClosedFormSeries,
    OrientedKind,
};
use crate::verify::Check;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BundleKind {
    Complex,
    Real,
    Oriented,
}

impl BundleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BundleKind::Complex => "complex",
            BundleKind::Real => "real",
            BundleKind::Oriented => "oriented",
        }
    }

    pub fn parse(s: &str) -> Option<BundleKind> {
        match s {
            "complex" => Some(BundleKind::Complex),
            "real" => Some(BundleKind::Real),
            "oriented" => Some(BundleKind::Oriented),
            _ => None,
        }
    }

    /// Degree step between consecutive characteristic classes.
    pub fn unit(self) -> u32 {
        match self {
            BundleKind::Complex => 2,
            BundleKind::Real | BundleKind::Oriented => 4,
        }
    }
}

/// A vector bundle over a presented base, described by its characteristic
/// classes.
#[derive(Debug, Clone)]
pub struct BundleData {
    base: QuotientRing,
    kind: BundleKind,
    rank: u32,
    total_class: GradedElement,
    euler_class: Option<GradedElement>,
}

impl BundleData {
    pub fn new(
        base: QuotientRing,
        kind: BundleKind,
        rank: u32,
        total_class: GradedElement,
        euler_class: Option<GradedElement>,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidBundle("rank must be positive".into()));
        }
        if !total_class.universe().same_as(base.universe()) {
            return Err(Error::UniverseMismatch);
        }
        let b = BundleData {
            base,
            kind,
            rank,
            total_class,
            euler_class,
        };
        let unit = kind.unit();
        let top = unit * b.class_count();
        for (d, part) in b.total_class.homogeneous_components() {
            if d == 0 {
                if part != GradedElement::one(part.universe()) {
                    return Err(Error::InvalidBundle(format!(
                        "degree-0 part of the total class is {}, not 1",
                        part
                    )));
                }
            } else if d % unit != 0 || d > top {
                return Err(Error::InvalidBundle(format!(
                    "total class has a component in degree {} (allowed: multiples of {} up to {})",
                    d, unit, top
                )));
            }
        }
        if b.total_class.component(0).is_zero() {
            return Err(Error::InvalidBundle("total class has no degree-0 part".into()));
        }
        let wants_euler = kind == BundleKind::Oriented && rank.is_multiple_of(2);
        match (&b.euler_class, wants_euler) {
            (Some(e), true) => {
                if !e.universe().same_as(b.base.universe()) {
                    return Err(Error::UniverseMismatch);
                }
                match e.homogeneous_degree() {
                    Ok(None) => {}
                    Ok(Some(d)) if d == rank => {}
                    _ => {
                        return Err(Error::InvalidBundle(format!(
                            "euler class {} is not homogeneous of degree {}",
                            e, rank
                        )))
                    }
                }
            }
            (Some(_), false) => {
                return Err(Error::InvalidBundle(
                    "an euler class is only accepted for oriented bundles of even rank".into(),
                ))
            }
            (None, true) => return Err(Error::MissingEulerClass),
            (None, false) => {}
        }
        Ok(b)
    }

    /// The trivial bundle: total class 1, euler class 0 when one is needed.
    pub fn trivial(base: QuotientRing, kind: BundleKind, rank: u32) -> Result<Self> {
        let u = base.universe().clone();
        let euler = (kind == BundleKind::Oriented && rank.is_multiple_of(2)).then(|| GradedElement::zero(&u));
        BundleData::new(base, kind, rank, GradedElement::one(&u), euler)
    }

    pub fn base(&self) -> &QuotientRing {
        &self.base
    }

    pub fn kind(&self) -> BundleKind {
        self.kind
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn total_class(&self) -> &GradedElement {
        &self.total_class
    }

    pub fn euler_class(&self) -> Option<&GradedElement> {
        self.euler_class.as_ref()
    }

    /// Number of Chern (complex) or Pontryagin (real) classes.
    pub fn class_count(&self) -> u32 {
        match self.kind {
            BundleKind::Complex => self.rank,
            BundleKind::Real | BundleKind::Oriented => self.rank / 2,
        }
    }

    fn odd_rank(&self) -> bool {
        self.rank % 2 == 1
    }
}

/// Complementary classes solved from the Whitney relation, and the
/// expressions that the relation forces to vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhitneyComplement {
    /// `cb_1, ..., cb_m`.
    pub complement: Vec<GradedElement>,
    /// `(-1)^j cb_j` for `j = n-k+1, ..., n`.
    pub residuals: Vec<GradedElement>,
}

/// Solves `c * cb = total_class` degree by degree:
/// `cb_j = c_j(V) - Σ_{i=1}^{min(j,k)} c_i cb_{j-i}`, where `c_j(V)` is the
/// component of `total_class` in degree `unit * j` and `k = canonical.len()`.
pub fn whitney_complement(
    total_class: &GradedElement,
    canonical: &[GradedElement],
    unit: u32,
    n: u32,
    m: u32,
) -> Result<WhitneyComplement> {
    let k = canonical.len() as u32;
    if k > n {
        return Err(Error::InvalidParameters(format!("k={} exceeds rank n={}", k, n)));
    }
    let u = total_class.universe();
    for c in canonical {
        if !c.universe().same_as(u) {
            return Err(Error::UniverseMismatch);
        }
    }
    let top = m.max(n) as usize;
    let mut cb: Vec<GradedElement> = vec![GradedElement::one(u)];
    for j in 1..=top {
        let mut next = total_class.component(unit * j as u32);
        for i in 1..=j.min(k as usize) {
            next = &next - &(&canonical[i - 1] * &cb[j - i]);
        }
        cb.push(next);
    }
    let residuals = ((n - k + 1) as usize..=n as usize)
        .map(|j| if j % 2 == 0 { cb[j].clone() } else { -&cb[j] })
        .collect();
    cb.truncate(m as usize + 1);
    cb.remove(0);
    Ok(WhitneyComplement {
        complement: cb,
        residuals,
    })
}

/// Suffix for new generator names: empty unless one of `names` is already
/// taken in the base, then `_1`, `_2`, ...
fn fresh_suffix(base: &Universe, names: &[String]) -> String {
    let mut s = String::new();
    let mut i = 0;
    while names.iter().any(|n| base.position(&format!("{}{}", n, s)).is_some()) {
        i += 1;
        s = format!("_{}", i);
    }
    s
}

struct Namer<'a> {
    suffix: &'a str,
}

impl Namer<'_> {
    fn name(&self, stem: &str) -> String {
        format!("{}{}", stem, self.suffix)
    }

    fn series(&self, prefix: &str, count: u32) -> Vec<String> {
        (1..=count).map(|i| self.name(&format!("{}{}", prefix, i))).collect()
    }

    /// Generators of degrees `unit, 2 * unit, ...`.
    fn gens(&self, prefix: &str, count: u32, unit: u32, role: Role) -> Vec<Generator> {
        self.series(prefix, count)
            .into_iter()
            .zip(1..)
            .map(|(n, i)| Generator::new(n, unit * i).with_role(role))
            .collect()
    }

    /// Generators all of the given degree.
    fn flat(&self, prefix: &str, count: u32, degree: u32, role: Role) -> Vec<Generator> {
        self.series(prefix, count)
            .into_iter()
            .map(|n| Generator::new(n, degree).with_role(role))
            .collect()
    }
}

fn gen(u: &Universe, name: &str) -> Result<GradedElement> {
    GradedElement::generator(u, name)
}

fn total(u: &Universe, names: &[String]) -> Result<GradedElement> {
    let mut out = GradedElement::one(u);
    for n in names {
        out = &out + &gen(u, n)?;
    }
    Ok(out)
}

fn finish(base: &QuotientRing, presentation: RingPresentation, fibre: &ClosedFormSeries) -> QuotientRing {
    let extra = fibre.polynomial_degree().expect("fibre series is a polynomial");
    QuotientRing::with_rule(presentation, base.cutoff() + extra, base.pivot_rule())
}

fn bundle_label(what: &str, bundle: &BundleData) -> String {
    format!("{} over {}", what, bundle.base.label())
}

/// The fibre Poincaré series of [`grassmannian_bundle`].
pub fn grassmannian_fibre_series(bundle: &BundleData, k: u32) -> Result<ClosedFormSeries> {
    let n = bundle.class_count();
    match bundle.kind {
        BundleKind::Complex => complex_grassmannian_series(k, n),
        BundleKind::Real => Ok(substitute_t_squared(&complex_grassmannian_series(k, n)?)),
        BundleKind::Oriented if bundle.odd_rank() => oriented_series(OrientedKind::EvenOdd, k, n),
        BundleKind::Oriented => oriented_series(OrientedKind::EvenEven, k, n),
    }
}

/// `G_k(V)` for complex `V`, `G_{2k}(V)` for real or oriented `V`.
/// Degenerate unoriented cases (`k = 0` or all of `V`) return the base.
pub fn grassmannian_bundle(bundle: &BundleData, k: u32) -> Result<QuotientRing> {
    let stems: Vec<String> = ["c1", "cb1", "p1", "pb1", "e", "eb"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let suffix = fresh_suffix(bundle.base.universe(), &stems);
    grassmannian_bundle_named(bundle, k, &suffix)
}

pub(crate) fn grassmannian_bundle_named(bundle: &BundleData, k: u32, suffix: &str) -> Result<QuotientRing> {
    let n = bundle.class_count();
    if k > n {
        return Err(Error::InvalidParameters(format!(
            "sub-rank {} exceeds the {} characteristic classes of the bundle",
            k, n
        )));
    }
    let namer = Namer { suffix };
    let unit = bundle.kind.unit();
    let (a, b) = match bundle.kind {
        BundleKind::Complex => ("c", "cb"),
        BundleKind::Real | BundleKind::Oriented => ("p", "pb"),
    };
    let oriented = bundle.kind == BundleKind::Oriented;
    if !oriented && (k == 0 || k == n) {
        return Ok(bundle.base.clone());
    }
    if oriented {
        let kind = if bundle.odd_rank() {
            OrientedKind::EvenOdd
        } else {
            OrientedKind::EvenEven
        };
        kind.check(k, n)?;
    }
    let fibre = grassmannian_fibre_series(bundle, k)?;
    let canonical = namer.series(a, k);
    let complement = namer.series(b, n - k);
    let mut gens = namer.gens(a, k, unit, Role::Plain);
    gens.extend(namer.gens(b, n - k, unit, Role::Complementary));
    let (e, eb) = (namer.name("e"), namer.name("eb"));
    if oriented {
        gens.push(Generator::new(e.clone(), 2 * k).with_role(Role::Euler));
        if !bundle.odd_rank() {
            gens.push(Generator::new(eb.clone(), 2 * (n - k)).with_role(Role::Euler));
        }
    }
    let label = if oriented {
        bundle_label(&format!("G~_{}(V^{})", 2 * k, bundle.rank), bundle)
    } else if bundle.kind == BundleKind::Real {
        bundle_label(&format!("G_{}(V^{})", 2 * k, bundle.rank), bundle)
    } else {
        bundle_label(&format!("G_{}(V^{})", k, bundle.rank), bundle)
    };
    let p = bundle.base.presentation().extend(label, gens, |u| {
        let whitney = &(&total(u, &canonical)? * &total(u, &complement)?) - &bundle.total_class.embed(u)?;
        let mut rels = vec![whitney];
        if oriented {
            rels.push(&gen(u, &e)?.pow(2) - &gen(u, &canonical[k as usize - 1])?);
            if !bundle.odd_rank() {
                rels.push(&gen(u, &eb)?.pow(2) - &gen(u, &complement[(n - k) as usize - 1])?);
                let euler = bundle.euler_class.as_ref().ok_or(Error::MissingEulerClass)?;
                rels.push(&(&gen(u, &e)? * &gen(u, &eb)?) - &euler.embed(u)?);
            }
        }
        Ok(rels)
    })?;
    Ok(finish(&bundle.base, p, &fibre))
}

/// Single-generator form of `P(V)` (complex), of `G_2(V)` (real), or of
/// `G~_2(V^{2n+1})` (oriented, odd rank): `x^n - c_1(V) x^{n-1} + ... = 0`.
pub fn projectivization(bundle: &BundleData) -> Result<QuotientRing> {
    let stem = match bundle.kind {
        BundleKind::Complex => "c1",
        BundleKind::Real => "p1",
        BundleKind::Oriented => "e",
    };
    let suffix = fresh_suffix(bundle.base.universe(), &[stem.to_string()]);
    projectivization_named(bundle, &format!("{}{}", stem, suffix))
}

pub(crate) fn projectivization_named(bundle: &BundleData, name: &str) -> Result<QuotientRing> {
    let n = bundle.class_count();
    if n == 0 {
        return Err(Error::KindMismatch(format!(
            "{} bundle of rank {} has no projectivization of this type",
            bundle.kind.as_str(),
            bundle.rank
        )));
    }
    let (degree, fibre, label) = match bundle.kind {
        BundleKind::Complex => (
            2,
            ClosedFormSeries::ratio(vec![2 * n], vec![2]),
            format!("P(V^{})", bundle.rank),
        ),
        BundleKind::Real => (
            4,
            ClosedFormSeries::ratio(vec![4 * n], vec![4]),
            format!("G_2(V^{})", bundle.rank),
        ),
        BundleKind::Oriented if bundle.odd_rank() => (
            2,
            ClosedFormSeries::ratio(vec![4 * n], vec![2]),
            format!("G~_2(V^{})", bundle.rank),
        ),
        BundleKind::Oriented => {
            return Err(Error::KindMismatch(
                "the oriented rank-2 Grassmannian of an even-rank bundle needs e and eb; use grassmannian_bundle"
                    .into(),
            ))
        }
    };
    let unit = bundle.kind.unit();
    let p =
        bundle
            .base
            .presentation()
            .extend(bundle_label(&label, bundle), vec![Generator::new(name, degree)], |u| {
                let x = gen(u, name)?;
                // for the oriented case x = e and the canonical class is e^2
                let canonical = if degree == unit { x } else { x.pow(2) };
                let w = whitney_complement(&bundle.total_class.embed(u)?, &[canonical], unit, n, 0)?;
                Ok(w.residuals)
            })?;
    Ok(finish(&bundle.base, p, &fibre))
}

/// `S(V^{2n+1})` for an oriented bundle of odd rank: `eb^2 = p_n(V)`.
pub fn sphere_bundle(bundle: &BundleData) -> Result<QuotientRing> {
    if bundle.kind != BundleKind::Oriented || !bundle.odd_rank() || bundle.rank < 3 {
        return Err(Error::KindMismatch(format!(
            "sphere bundles need an oriented bundle of odd rank at least 3, got {} rank {}",
            bundle.kind.as_str(),
            bundle.rank
        )));
    }
    let n = bundle.class_count();
    let name = format!("eb{}", fresh_suffix(bundle.base.universe(), &["eb".to_string()]));
    let p = bundle.base.presentation().extend(
        bundle_label(&format!("S(V^{})", bundle.rank), bundle),
        vec![Generator::new(name.clone(), 2 * n).with_role(Role::Euler)],
        |u| {
            let top = bundle.total_class.embed(u)?.component(4 * n);
            Ok(vec![&gen(u, &name)?.pow(2) - &top])
        },
    )?;
    Ok(finish(&bundle.base, p, &ClosedFormSeries::one_plus(2 * n)))
}

/// The fibre of [`flag_bundle`] as a catalog space.
pub fn flag_fibre(bundle: &BundleData) -> SpaceDescriptor {
    let n = bundle.class_count();
    let odd_ambient = bundle.odd_rank();
    match bundle.kind {
        BundleKind::Complex => SpaceDescriptor::CompleteFlagComplex { n },
        BundleKind::Real => SpaceDescriptor::CompleteFlagReal { n, odd_ambient },
        BundleKind::Oriented => SpaceDescriptor::CompleteFlagOriented { n, odd_ambient },
    }
}

/// Complete (even-rank) flag bundle: `Π(1 + x_i) = c(V)`, or
/// `Π(1 + u_i) = p(V)` with `e_i^2 = u_i` and `Π e_i = e(V)` when oriented.
pub fn flag_bundle(bundle: &BundleData) -> Result<QuotientRing> {
    let stems: Vec<String> = ["x1", "u1", "e1"].iter().map(|s| s.to_string()).collect();
    let suffix = fresh_suffix(bundle.base.universe(), &stems);
    flag_bundle_named(bundle, &suffix)
}

pub(crate) fn flag_bundle_named(bundle: &BundleData, suffix: &str) -> Result<QuotientRing> {
    let n = bundle.class_count();
    if n == 0 {
        return Err(Error::KindMismatch(format!(
            "{} bundle of rank {} has no even-rank flags",
            bundle.kind.as_str(),
            bundle.rank
        )));
    }
    let namer = Namer { suffix };
    let fibre_space = flag_fibre(bundle);
    let fibre = fibre_space.closed_form()?;
    let oriented = bundle.kind == BundleKind::Oriented;
    let (stem, unit) = match bundle.kind {
        BundleKind::Complex => ("x", 2),
        _ => ("u", 4),
    };
    let role = if oriented { Role::Complementary } else { Role::Plain };
    let mut gens = namer.flat(stem, n, unit, role);
    let lines = namer.series(stem, n);
    let eulers = namer.series("e", n);
    if oriented {
        gens.extend(
            eulers
                .iter()
                .map(|e| Generator::new(e.clone(), 2).with_role(Role::Euler)),
        );
    }
    let label = bundle_label(
        &format!("{}(V^{})", if oriented { "Fl~" } else { "Fl" }, bundle.rank),
        bundle,
    );
    let p = bundle.base.presentation().extend(label, gens, |u| {
        let mut prod = GradedElement::one(u);
        for l in &lines {
            prod = &prod * &(&GradedElement::one(u) + &gen(u, l)?);
        }
        let mut rels = vec![&prod - &bundle.total_class.embed(u)?];
        if oriented {
            for (e, l) in eulers.iter().zip(&lines) {
                rels.push(&gen(u, e)?.pow(2) - &gen(u, l)?);
            }
            if !bundle.odd_rank() {
                let euler = bundle.euler_class.as_ref().ok_or(Error::MissingEulerClass)?;
                let mut top = GradedElement::one(u);
                for e in &eulers {
                    top = &top * &gen(u, e)?;
                }
                rels.push(&top - &euler.embed(u)?);
            }
        }
        Ok(rels)
    })?;
    Ok(finish(&bundle.base, p, &fibre))
}

/// `G_{2k+1}(V^{2n+2})` over a supplied ring of `RP(V)` (real `V`) or `S(V)`
/// (oriented `V`): `p * pb = p(V)` with `k` and `n - k` Pontryagin classes.
/// The classes of `V` must be expressible in the supplied ring's generators.
pub fn odd_grassmannian_bundle(ring: &QuotientRing, bundle: &BundleData, k: u32) -> Result<QuotientRing> {
    if bundle.kind == BundleKind::Complex || bundle.rank % 2 == 1 || bundle.rank < 2 {
        return Err(Error::KindMismatch(format!(
            "odd Grassmannian bundles need a real or oriented bundle of even rank, got {} rank {}",
            bundle.kind.as_str(),
            bundle.rank
        )));
    }
    let n = bundle.rank / 2 - 1;
    if k > n {
        return Err(Error::InvalidParameters(format!("k={} exceeds n={}", k, n)));
    }
    if k == 0 {
        return Ok(ring.clone());
    }
    let stems: Vec<String> = ["p1", "pb1"].iter().map(|s| s.to_string()).collect();
    let suffix = fresh_suffix(ring.universe(), &stems);
    let namer = Namer { suffix: &suffix };
    let canonical = namer.series("p", k);
    let complement = namer.series("pb", n - k);
    let mut gens = namer.gens("p", k, 4, Role::Plain);
    gens.extend(namer.gens("pb", n - k, 4, Role::Complementary));
    let label = format!(
        "G{}_{}(V^{}) over {}",
        if bundle.kind == BundleKind::Oriented { "~" } else { "" },
        2 * k + 1,
        bundle.rank,
        ring.label()
    );
    let p = ring.presentation().extend(label, gens, |u| {
        Ok(vec![
            &(&total(u, &canonical)? * &total(u, &complement)?) - &bundle.total_class.embed(u)?,
        ])
    })?;
    let fibre = substitute_t_squared(&complex_grassmannian_series(k, n)?);
    Ok(finish(ring, p, &fibre))
}

/// Re-expansion oracle for [`whitney_complement`]: in the ring with only
/// the canonical classes and the residual relations, `c * cb - c(V)`
/// reduces to zero and the dimensions agree with the full presentation.
pub fn check_whitney_reexpansion(bundle: &BundleData, k: u32) -> Result<Check> {
    let n = bundle.class_count();
    let name = format!(
        "whitney complement {} rank {} k={} over {}",
        bundle.kind.as_str(),
        bundle.rank,
        k,
        bundle.base.label()
    );
    if bundle.kind == BundleKind::Oriented {
        return Err(Error::KindMismatch(
            "re-expansion applies to complex and real bundles".into(),
        ));
    }
    let full = grassmannian_bundle(bundle, k)?;
    let stems: Vec<String> = ["c1", "cb1", "p1", "pb1", "e", "eb"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let suffix = fresh_suffix(bundle.base.universe(), &stems);
    let namer = Namer { suffix: &suffix };
    let a = if bundle.kind == BundleKind::Complex { "c" } else { "p" };
    let unit = bundle.kind.unit();
    let names = namer.series(a, k);
    let mut complement = Vec::new();
    let reduced = bundle
        .base
        .presentation()
        .extend("reduced", namer.gens(a, k, unit, Role::Plain), |u| {
            let canonical = names.iter().map(|s| gen(u, s)).collect::<Result<Vec<_>>>()?;
            let w = whitney_complement(&bundle.total_class.embed(u)?, &canonical, unit, n, n - k)?;
            complement = w.complement;
            Ok(w.residuals)
        })?;
    let ring = QuotientRing::new(reduced, full.cutoff());
    let u = ring.universe().clone();
    let cb = complement.iter().fold(GradedElement::one(&u), |acc, c| &acc + c);
    let lhs = &(&total(&u, &names)? * &cb) - &bundle.total_class.embed(&u)?;
    let nf = ring.normal_form(&lhs)?;
    let top = full.cutoff();
    let dims_full = series_from_ring(&full, top)?;
    let dims_reduced = series_from_ring(&ring, top)?;
    let ok = nf.is_zero() && dims_full == dims_reduced;
    Ok(Check::from_bool(
        name,
        ok,
        if ok {
            format!("c*cb - c(V) reduces to 0; dims {}", dims_reduced)
        } else {
            format!("residue {}; dims {} vs full {}", nf, dims_reduced, dims_full)
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_element;

    fn point() -> QuotientRing {
        QuotientRing::new(RingPresentation::point(), 0)
    }

    #[test]
    fn complement_of_trivial_line() {
        let u = Universe::new(vec![Generator::new("c1", 2)]).unwrap();
        let c1 = gen(&u, "c1").unwrap();
        let w = whitney_complement(&GradedElement::one(&u), &[c1], 2, 3, 3).unwrap();
        let shown: Vec<String> = w.complement.iter().map(|e| e.to_string()).collect();
        assert_eq!(shown, vec!["-c1", "c1^2", "-c1^3"]);
        assert_eq!(w.residuals.len(), 1);
        assert_eq!(w.residuals[0].to_string(), "c1^3");
    }

    #[test]
    fn projectivization_residual_matches_alternating_sum() {
        let u = Universe::new(vec![
            Generator::new("a", 2),
            Generator::new("b", 4),
            Generator::new("x", 2),
        ])
        .unwrap();
        let total = parse_element(&u, "1 + a + b").unwrap();
        let x = gen(&u, "x").unwrap();
        let w = whitney_complement(&total, &[x], 2, 2, 0).unwrap();
        assert_eq!(w.residuals[0], parse_element(&u, "x^2 - a*x + b").unwrap());
    }

    #[test]
    fn complement_rejects_large_k() {
        let u = Universe::new(vec![Generator::new("c1", 2), Generator::new("c2", 4)]).unwrap();
        let cs = vec![gen(&u, "c1").unwrap(), gen(&u, "c2").unwrap()];
        assert!(whitney_complement(&GradedElement::one(&u), &cs, 2, 1, 1).is_err());
    }

    #[test]
    fn grassmannian_over_point_is_the_catalog_ring() {
        let b = BundleData::trivial(point(), BundleKind::Complex, 4).unwrap();
        let r = grassmannian_bundle(&b, 2).unwrap();
        let cat = SpaceDescriptor::ComplexGrassmannian { k: 2, n: 4 }
            .presentation()
            .unwrap();
        assert_eq!(r.presentation().relations(), cat.relations());
        assert_eq!(r.dims(8).unwrap(), vec![1, 0, 1, 0, 2, 0, 1, 0, 1]);
    }

    #[test]
    fn degenerate_subranks_return_base() {
        let b = BundleData::trivial(point(), BundleKind::Complex, 3).unwrap();
        assert_eq!(
            grassmannian_bundle(&b, 0).unwrap().presentation(),
            b.base().presentation()
        );
        assert_eq!(
            grassmannian_bundle(&b, 3).unwrap().presentation(),
            b.base().presentation()
        );
    }

    #[test]
    fn oriented_even_requires_euler() {
        let base = point();
        let u = base.universe().clone();
        let err = BundleData::new(base, BundleKind::Oriented, 4, GradedElement::one(&u), None);
        assert_eq!(err.unwrap_err(), Error::MissingEulerClass);
    }

    #[test]
    fn oriented_fibre_euler_product_vanishes() {
        let b = BundleData::trivial(point(), BundleKind::Oriented, 6).unwrap();
        let r = grassmannian_bundle(&b, 1).unwrap();
        assert!(r.is_zero(&r.element("e*eb").unwrap()).unwrap());
    }

    #[test]
    fn sphere_and_real_projectivization_over_point() {
        let s = sphere_bundle(&BundleData::trivial(point(), BundleKind::Oriented, 5).unwrap()).unwrap();
        assert_eq!(s.dims(4).unwrap(), vec![1, 0, 0, 0, 1]);
        let g = projectivization(&BundleData::trivial(point(), BundleKind::Real, 6).unwrap()).unwrap();
        assert_eq!(g.presentation().relations()[0].to_string(), "p1^3");
    }

    #[test]
    fn projectivization_over_cp_m() {
        let base = SpaceDescriptor::ProjectiveSpaceComplex { m: 2 }.ring().unwrap();
        let c = base.element("1 + c1").unwrap();
        let b = BundleData::new(base, BundleKind::Complex, 2, c, None).unwrap();
        let r = projectivization(&b).unwrap();
        let rel = r.presentation().relations().last().unwrap().clone();
        assert_eq!(rel, r.element("c1_1^2 - c1*c1_1").unwrap());
        assert_eq!(r.dims(6).unwrap(), vec![1, 0, 2, 0, 2, 0, 1]);
    }

    #[test]
    fn bundle_validation() {
        let base = SpaceDescriptor::ProjectiveSpaceComplex { m: 2 }.ring().unwrap();
        let bad = base.element("1 + c1^3").unwrap();
        assert!(BundleData::new(base.clone(), BundleKind::Complex, 2, bad, None).is_err());
        let not_unit = base.element("2 + c1").unwrap();
        assert!(BundleData::new(base, BundleKind::Complex, 2, not_unit, None).is_err());
    }
}
