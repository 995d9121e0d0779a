//! Verification reports and the named verification suites driven by the CLI.

use std::fmt;

use rayon::prelude::*;

use crate::algebra::elimination::{integer_row, rank};
use crate::algebra::{GradedElement, Monomial, QuotientRing};
use crate::catalog::SpaceDescriptor;
use crate::error::Result;
use crate::extension::{self, BundleData, BundleKind, ExtensionType, TowerSpec, TowerStage};
use crate::series::{
    complex_grassmannian_series, leray_hirsch_product, series_from_ring, substitute_t_squared, ClosedFormSeries,
    TruncatedSeries,
};

/// Outcome of a single named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            detail: detail.into(),
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: false,
            detail: detail.into(),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: ok,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "[{}] {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        )
    }
}

fn render_monomials(ring: &QuotientRing, ms: &[Monomial]) -> String {
    let parts: Vec<String> = ms.iter().map(|m| m.display(ring.universe()).to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Rank of the residues of `family` (all of degree `degree`).
pub fn family_rank(ring: &QuotientRing, degree: u32, family: &[Monomial]) -> Result<usize> {
    let basis = ring.degree_basis(degree)?;
    let position: std::collections::HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::with_capacity(family.len());
    for m in family {
        let e = GradedElement::from_monomial(ring.universe(), m.clone(), crate::algebra::scalar(1));
        let nf = ring.normal_form(&e)?;
        rows.push(integer_row(
            nf.as_element().terms().map(|(b, c)| (position[b], c.clone())),
        ));
    }
    Ok(rank(rows))
}

/// Per-degree comparison of engine dimensions against an expected series.
pub fn check_dimensions(name: &str, ring: &QuotientRing, expected: &TruncatedSeries) -> Result<Check> {
    let n = expected.cutoff();
    let got = series_from_ring(ring, n)?;
    let bad: Vec<String> = (0..=n)
        .filter(|&d| got.coeff(d) != expected.coeff(d))
        .map(|d| {
            format!(
                "degree {}: engine {} vs expected {}",
                d,
                got.coeff(d),
                expected.coeff(d)
            )
        })
        .collect();
    Ok(if bad.is_empty() {
        Check::pass(name, format!("dims {}", got))
    } else {
        Check::fail(name, bad.join("; "))
    })
}

/// Every homogeneous relation of the presentation reduces to zero.
pub fn check_relations_vanish(name: &str, ring: &QuotientRing) -> Result<Check> {
    let mut bad = Vec::new();
    for rel in ring.presentation().relations() {
        let d = rel.max_degree().unwrap_or(0);
        if d > ring.cutoff() {
            continue;
        }
        let nf = ring.normal_form(rel)?;
        if !nf.is_zero() {
            bad.push(format!("degree {}: {} -> {}", d, rel, nf));
        }
    }
    Ok(if bad.is_empty() {
        Check::pass(
            name,
            format!("{} relations reduce to 0", ring.presentation().relations().len()),
        )
    } else {
        Check::fail(name, bad.join("; "))
    })
}

/// The family is independent and spanning in every degree up to `n`.
pub fn check_family(
    name: &str,
    ring: &QuotientRing,
    n: u32,
    family: impl Fn(u32) -> Result<Vec<Monomial>> + Sync,
) -> Result<Check> {
    let results: Vec<Result<Option<String>>> = (0..=n)
        .into_par_iter()
        .map(|d| {
            let fam = family(d)?;
            let dim = ring.dim(d)?;
            let r = family_rank(ring, d, &fam)?;
            Ok(if r == fam.len() && r == dim {
                None
            } else {
                Some(format!(
                    "degree {}: family {} has rank {} of {} members, dimension {}",
                    d,
                    render_monomials(ring, &fam),
                    r,
                    fam.len(),
                    dim
                ))
            })
        })
        .collect();
    let mut bad = Vec::new();
    for r in results {
        if let Some(msg) = r? {
            bad.push(msg);
        }
    }
    Ok(if bad.is_empty() {
        Check::pass(name, format!("basis family verified in degrees 0..={}", n))
    } else {
        Check::fail(name, bad.join("; "))
    })
}

/// Which named suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Catalog,
    OddIdentity,
    Extension,
    Flags,
    Equivariant,
    Pushout,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Catalog,
        Suite::OddIdentity,
        Suite::Extension,
        Suite::Flags,
        Suite::Equivariant,
        Suite::Pushout,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Catalog => "catalog",
            Suite::OddIdentity => "odd-identity",
            Suite::Extension => "extension",
            Suite::Flags => "flags",
            Suite::Equivariant => "equivariant",
            Suite::Pushout => "pushout",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|x| x.name() == s)
    }
}

/// Runs the selected suites with the parameter bound `max_n`. An empty
/// selection is a trivial pass.
pub fn run_suites(suites: &[Suite], max_n: u32) -> Result<Report> {
    let mut report = Report::default();
    for s in suites {
        report.extend(match s {
            Suite::Catalog => catalog_suite(max_n)?,
            Suite::OddIdentity => odd_identity_suite(max_n.min(3))?,
            Suite::Extension => extension_suite(max_n.min(3))?,
            Suite::Flags => flags_suite(max_n.min(4))?,
            Suite::Equivariant => equivariant_suite(max_n.min(3))?,
            Suite::Pushout => pushout_suite(max_n.min(4))?,
        });
    }
    Ok(report)
}

/// Every catalog space with parameters up to `max_n`.
pub fn catalog_suite(max_n: u32) -> Result<Report> {
    let mut report = Report::default();
    for d in SpaceDescriptor::enumerate(max_n) {
        let top = d.top_degree();
        report.extend(crate::catalog::verify_space(&d, top)?);
    }
    Ok(report)
}

/// `P_{G_{2k+1}(R^{2n+2})} = (1 + t^{2n+1}) P_{G_{2k}(R^{2n})}`, symbolically,
/// coefficientwise, and against the explicit odd-degree presentation.
pub fn odd_identity_suite(max_n: u32) -> Result<Report> {
    let mut report = Report::default();
    for n in 0..=max_n {
        for k in 0..=n {
            for oriented in [false, true] {
                let d = if oriented {
                    SpaceDescriptor::OddOrientedGrassmannian { k, n }
                } else {
                    SpaceDescriptor::OddRealGrassmannian { k, n }
                };
                let direct = d.closed_form()?;
                let composed = leray_hirsch_product(
                    &ClosedFormSeries::one_plus(2 * n + 1),
                    &substitute_t_squared(&complex_grassmannian_series(k, n)?),
                );
                let top = d.top_degree();
                let label = d.label();
                report.push(Check::from_bool(
                    format!("{} symbolic", label),
                    direct.symbolic_eq(&composed),
                    format!("{} vs {}", direct, composed),
                ));
                report.push(Check::from_bool(
                    format!("{} coefficients", label),
                    direct.truncate(top) == composed.truncate(top),
                    format!("{}", composed.truncate(top)),
                ));
                let ring = d.ring()?;
                report.push(check_dimensions(
                    &format!("{} engine", label),
                    &ring,
                    &composed.truncate(top),
                )?);
            }
        }
    }
    Ok(report)
}

fn projective_base(m: u32) -> Result<QuotientRing> {
    SpaceDescriptor::ProjectiveSpaceComplex { m }.ring()
}

/// Synthetic total classes `1 + a_1 h + a_2 h^2 + ...` over `CP^m`.
fn synthetic_class(base: &QuotientRing, rank: u32, seed: i64) -> Result<GradedElement> {
    let mut expr = String::from("1");
    for i in 1..=rank {
        let a = ((seed * 7 + i as i64 * 3) % 5) - 2;
        expr.push_str(&format!(" + ({})*c1^{}", a, i));
    }
    base.element(&expr)
}

/// Grassmannian and projective bundles over `CP^m`: Poincaré product and
/// the Whitney-complement re-expansion.
pub fn extension_suite(max_m: u32) -> Result<Report> {
    let mut report = Report::default();
    for m in 1..=max_m {
        let base = projective_base(m)?;
        let base_series = series_from_ring(&base, base.cutoff())?;
        for rank in 1..=4u32 {
            let c = synthetic_class(&base, rank, (m * 10 + rank) as i64)?;
            let bundle = BundleData::new(base.clone(), BundleKind::Complex, rank, c, None)?;
            for k in 1..rank {
                let ring = extension::grassmannian_bundle(&bundle, k)?;
                let fibre = complex_grassmannian_series(k, rank)?;
                let n = ring.cutoff();
                let expected = base_series.truncate(n).convolve(&fibre.truncate(n));
                report.push(check_dimensions(
                    &format!("G_{}(V^{}) over CP^{} Poincare product", k, rank, m),
                    &ring,
                    &expected,
                )?);
                report.push(crate::extension::check_whitney_reexpansion(&bundle, k)?);
            }
        }
    }
    Ok(report)
}

/// Flag manifolds and CP^1 towers.
pub fn flags_suite(max_n: u32) -> Result<Report> {
    let mut report = Report::default();
    for n in 1..=max_n {
        let d = SpaceDescriptor::CompleteFlagComplex { n };
        let ring = d.ring()?;
        report.push(check_dimensions(
            &d.label(),
            &ring,
            &d.closed_form()?.truncate(d.top_degree()),
        )?);
    }
    for height in 1..=max_n {
        let stages: Vec<TowerStage> = (0..height)
            .map(|i| {
                let c1 = if i == 0 {
                    "0".to_string()
                } else {
                    format!("{}*x_{}", i as i64 - 1, i)
                };
                TowerStage::new(
                    BundleKind::Complex,
                    2,
                    vec![c1, "0".into()],
                    ExtensionType::Projectivize,
                )
            })
            .collect();
        let spec = TowerSpec::new(stages);
        let ring = extension::bott_tower(&spec)?;
        let expected = ClosedFormSeries::one_plus(2);
        let mut series = ClosedFormSeries::one();
        for _ in 0..height {
            series = &series * &expected;
        }
        report.push(check_dimensions(
            &format!("CP^1 tower of height {}", height),
            &ring,
            &series.truncate(2 * height),
        )?);
    }
    Ok(report)
}

/// Equivariant complete flag manifolds over `H_T(pt)` with cutoff 12.
pub fn equivariant_suite(max_n: u32) -> Result<Report> {
    let cutoff = 12;
    let mut report = Report::default();
    for n in 1..=max_n {
        for d in [
            SpaceDescriptor::CompleteFlagComplex { n },
            SpaceDescriptor::CompleteFlagReal { n, odd_ambient: false },
            SpaceDescriptor::CompleteFlagOriented { n, odd_ambient: true },
            SpaceDescriptor::CompleteFlagOriented { n, odd_ambient: false },
        ] {
            let ring = extension::equivariant_space(&d, Some(cutoff))?;
            let torus = ClosedFormSeries::ratio(vec![], vec![2; extension::torus_rank(&d) as usize]);
            let expected = leray_hirsch_product(&torus, &d.closed_form()?).truncate(cutoff);
            report.push(check_dimensions(&format!("H_T {}", d.label()), &ring, &expected)?);
            let specialized = extension::specialize_torus(&ring)?;
            report.push(check_dimensions(
                &format!("H_T {} at alpha = 0", d.label()),
                &specialized,
                &d.closed_form()?.truncate(cutoff),
            )?);
        }
    }
    Ok(report)
}

/// The three reference pushouts.
pub fn pushout_suite(max_n: u32) -> Result<Report> {
    let mut report = Report::default();
    for n in 2..=max_n {
        for (name, ring, expected) in extension::reference_pushouts(n)? {
            report.push(check_dimensions(&name, &ring, &expected)?);
        }
    }
    Ok(report)
}
