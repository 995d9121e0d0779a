//! Presentations, closed-form Poincaré series and characteristic basis
//! families for the classical homogeneous spaces.
//!
//! Generator names are canonical: `c1..`, `cb1..` (Chern classes of the
//! canonical and complementary bundles), `p1..`, `pb1..` (Pontryagin), `e`,
//! `eb` (Euler), `r`/`rt` (odd-degree classes), `x1..`, `u1..`, `e1..`
//! (flag manifolds).

use std::fmt;

use crate::algebra::{
    monomials_of_degree, Generator, GradedElement, Monomial, QuotientRing, RingPresentation, Role, Universe,
};
use crate::error::{Error, Result};
use crate::series::{
    complex_grassmannian_series, oriented_series, substitute_t_squared, ClosedFormSeries, OrientedKind,
};
use crate::verify::{check_dimensions, check_family, check_relations_vanish, Report};

/// A space from the catalog with its parameters.
///
/// The real even Grassmannian variants reuse [`OrientedKind`] as an ambient
/// parity tag: `EvenEven` is `G_{2k}(R^{2n})`, `EvenOdd` is `G_{2k}(R^{2n+1})`
/// and `OddOdd` is `G_{2k+1}(R^{2n+1})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceDescriptor {
    Point,
    /// `G_k(C^n)`.
    ComplexGrassmannian {
        k: u32,
        n: u32,
    },
    RealGrassmannianEven {
        variant: OrientedKind,
        k: u32,
        n: u32,
    },
    OrientedGrassmannian {
        kind: OrientedKind,
        k: u32,
        n: u32,
    },
    /// `G_{2k+1}(R^{2n+2})`.
    OddRealGrassmannian {
        k: u32,
        n: u32,
    },
    /// Oriented `G~_{2k+1}(R^{2n+2})`.
    OddOrientedGrassmannian {
        k: u32,
        n: u32,
    },
    /// `Fl(C^n)`.
    CompleteFlagComplex {
        n: u32,
    },
    /// Even-rank flags in `R^{2n}` or `R^{2n+1}`.
    CompleteFlagReal {
        n: u32,
        odd_ambient: bool,
    },
    CompleteFlagOriented {
        n: u32,
        odd_ambient: bool,
    },
    /// `CP^m`, presented as `Z[c1]/c1^{m+1}`.
    ProjectiveSpaceComplex {
        m: u32,
    },
    /// `RP^{2n}`, rationally a point.
    ProjectiveSpaceReal {
        n: u32,
    },
    /// `S^{2n}`, presented as `Q[eb]/eb^2`.
    Sphere {
        n: u32,
    },
}

/// Names accepted by [`SpaceDescriptor::from_parts`].
pub const FAMILY_NAMES: [&str; 12] = [
    "point",
    "complex-grassmannian",
    "real-grassmannian-even",
    "oriented-grassmannian",
    "odd-real-grassmannian",
    "odd-oriented-grassmannian",
    "complete-flag-complex",
    "complete-flag-real",
    "complete-flag-oriented",
    "projective-space-complex",
    "projective-space-real",
    "sphere",
];

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

impl SpaceDescriptor {
    /// Builds a descriptor from a family name and raw parameters. `k` and
    /// `n` are the family's own parameters (for the projective spaces and
    /// the sphere only `n` is read, with `CP^n`, `RP^{2n}`, `S^{2n}`);
    /// `kind` is the ambient parity tag for the real and oriented families,
    /// `odd_ambient` the ambient parity for real and oriented flags.
    pub fn from_parts(
        family: &str,
        k: Option<u32>,
        n: Option<u32>,
        kind: Option<OrientedKind>,
        odd_ambient: bool,
    ) -> Result<Self> {
        let need = |v: Option<u32>, what: &str| {
            v.ok_or_else(|| invalid(format!("family {} needs parameter {}", family, what)))
        };
        let need_kind =
            || kind.ok_or_else(|| invalid(format!("family {} needs a kind (even-even, even-odd, odd-odd)", family)));
        let d = match family {
            "point" => SpaceDescriptor::Point,
            "complex-grassmannian" => SpaceDescriptor::ComplexGrassmannian {
                k: need(k, "k")?,
                n: need(n, "n")?,
            },
            "real-grassmannian-even" => SpaceDescriptor::RealGrassmannianEven {
                variant: need_kind()?,
                k: need(k, "k")?,
                n: need(n, "n")?,
            },
            "oriented-grassmannian" => SpaceDescriptor::OrientedGrassmannian {
                kind: need_kind()?,
                k: need(k, "k")?,
                n: need(n, "n")?,
            },
            "odd-real-grassmannian" => SpaceDescriptor::OddRealGrassmannian {
                k: need(k, "k")?,
                n: need(n, "n")?,
            },
            "odd-oriented-grassmannian" => SpaceDescriptor::OddOrientedGrassmannian {
                k: need(k, "k")?,
                n: need(n, "n")?,
            },
            "complete-flag-complex" => SpaceDescriptor::CompleteFlagComplex { n: need(n, "n")? },
            "complete-flag-real" => SpaceDescriptor::CompleteFlagReal {
                n: need(n, "n")?,
                odd_ambient,
            },
            "complete-flag-oriented" => SpaceDescriptor::CompleteFlagOriented {
                n: need(n, "n")?,
                odd_ambient,
            },
            "projective-space-complex" => SpaceDescriptor::ProjectiveSpaceComplex { m: need(n, "n")? },
            "projective-space-real" => SpaceDescriptor::ProjectiveSpaceReal { n: need(n, "n")? },
            "sphere" => SpaceDescriptor::Sphere { n: need(n, "n")? },
            other => return Err(invalid(format!("unknown space family '{}'", other))),
        };
        d.validate()?;
        Ok(d)
    }

    pub fn family_name(&self) -> &'static str {
        use SpaceDescriptor::*;
        match self {
            Point => FAMILY_NAMES[0],
            ComplexGrassmannian { .. } => FAMILY_NAMES[1],
            RealGrassmannianEven { .. } => FAMILY_NAMES[2],
            OrientedGrassmannian { .. } => FAMILY_NAMES[3],
            OddRealGrassmannian { .. } => FAMILY_NAMES[4],
            OddOrientedGrassmannian { .. } => FAMILY_NAMES[5],
            CompleteFlagComplex { .. } => FAMILY_NAMES[6],
            CompleteFlagReal { .. } => FAMILY_NAMES[7],
            CompleteFlagOriented { .. } => FAMILY_NAMES[8],
            ProjectiveSpaceComplex { .. } => FAMILY_NAMES[9],
            ProjectiveSpaceReal { .. } => FAMILY_NAMES[10],
            Sphere { .. } => FAMILY_NAMES[11],
        }
    }

    pub fn validate(&self) -> Result<()> {
        use SpaceDescriptor::*;
        match *self {
            ComplexGrassmannian { k, n } | RealGrassmannianEven { k, n, .. } if k > n => {
                Err(invalid(format!("{}: k={} exceeds n={}", self.family_name(), k, n)))
            }
            OddRealGrassmannian { k, n } | OddOrientedGrassmannian { k, n } if k > n => {
                Err(invalid(format!("{}: k={} exceeds n={}", self.family_name(), k, n)))
            }
            OrientedGrassmannian { kind, k, n } => kind.check(k, n),
            CompleteFlagComplex { n } | CompleteFlagReal { n, .. } | CompleteFlagOriented { n, .. } if n == 0 => {
                Err(invalid(format!("{}: n must be positive", self.family_name())))
            }
            Sphere { n: 0 } => Err(invalid("sphere: n must be positive")),
            _ => Ok(()),
        }
    }

    pub fn label(&self) -> String {
        use OrientedKind::*;
        use SpaceDescriptor::*;
        let real = |variant: OrientedKind, k: u32, n: u32, tilde: &str| match variant {
            EvenEven => format!("G{}_{}(R^{})", tilde, 2 * k, 2 * n),
            EvenOdd => format!("G{}_{}(R^{})", tilde, 2 * k, 2 * n + 1),
            OddOdd => format!("G{}_{}(R^{})", tilde, 2 * k + 1, 2 * n + 1),
        };
        match *self {
            Point => "pt".into(),
            ComplexGrassmannian { k, n } => format!("G_{}(C^{})", k, n),
            RealGrassmannianEven { variant, k, n } => real(variant, k, n, ""),
            OrientedGrassmannian { kind, k, n } => real(kind, k, n, "~"),
            OddRealGrassmannian { k, n } => format!("G_{}(R^{})", 2 * k + 1, 2 * n + 2),
            OddOrientedGrassmannian { k, n } => format!("G~_{}(R^{})", 2 * k + 1, 2 * n + 2),
            CompleteFlagComplex { n } => format!("Fl(C^{})", n),
            CompleteFlagReal { n, odd_ambient } => {
                format!("Fl(R^{})", 2 * n + odd_ambient as u32)
            }
            CompleteFlagOriented { n, odd_ambient } => {
                format!("Fl~(R^{})", 2 * n + odd_ambient as u32)
            }
            ProjectiveSpaceComplex { m } => format!("CP^{}", m),
            ProjectiveSpaceReal { n } => format!("RP^{}", 2 * n),
            Sphere { n } => format!("S^{}", 2 * n),
        }
    }

    /// Real dimension of the manifold; the default cutoff.
    pub fn top_degree(&self) -> u32 {
        use OrientedKind::*;
        use SpaceDescriptor::*;
        let real = |variant: OrientedKind, k: u32, n: u32| match variant {
            EvenEven => 4 * k * (n - k),
            EvenOdd => 2 * k * (2 * n + 1 - 2 * k),
            OddOdd => (2 * k + 1) * (2 * n - 2 * k),
        };
        match *self {
            Point => 0,
            ComplexGrassmannian { k, n } => 2 * k * (n - k),
            RealGrassmannianEven { variant, k, n } => real(variant, k, n),
            OrientedGrassmannian { kind, k, n } => real(kind, k, n),
            OddRealGrassmannian { k, n } | OddOrientedGrassmannian { k, n } => (2 * k + 1) * (2 * n + 1 - 2 * k),
            CompleteFlagComplex { n } => n * (n - 1),
            CompleteFlagReal { n, odd_ambient } | CompleteFlagOriented { n, odd_ambient } => {
                if odd_ambient {
                    2 * n * n
                } else {
                    2 * n * (n - 1)
                }
            }
            ProjectiveSpaceComplex { m } => 2 * m,
            ProjectiveSpaceReal { n } | Sphere { n } => 2 * n,
        }
    }

    pub fn presentation(&self) -> Result<RingPresentation> {
        self.validate()?;
        use OrientedKind::*;
        use SpaceDescriptor::*;
        let label = self.label();
        match *self {
            Point => Ok(RingPresentation::point()),
            ComplexGrassmannian { k, n } => {
                let gens = [
                    series_gens("c", k, 2, Role::Plain),
                    series_gens("cb", n - k, 2, Role::Complementary),
                ]
                .concat();
                whitney_presentation(label, gens, &names("c", k), &names("cb", n - k), |_| Ok(vec![]))
            }
            RealGrassmannianEven { k, n, .. } => {
                let gens = [
                    series_gens("p", k, 4, Role::Plain),
                    series_gens("pb", n - k, 4, Role::Complementary),
                ]
                .concat();
                whitney_presentation(label, gens, &names("p", k), &names("pb", n - k), |_| Ok(vec![]))
            }
            OrientedGrassmannian { kind, k, n } => {
                let mut gens = [
                    series_gens("p", k, 4, Role::Plain),
                    series_gens("pb", n - k, 4, Role::Complementary),
                ]
                .concat();
                let has_e = matches!(kind, EvenEven | EvenOdd);
                let has_eb = matches!(kind, EvenEven | OddOdd);
                if has_e {
                    gens.push(Generator::new("e", 2 * k).with_role(Role::Euler));
                }
                if has_eb {
                    gens.push(Generator::new("eb", 2 * (n - k)).with_role(Role::Euler));
                }
                whitney_presentation(label, gens, &names("p", k), &names("pb", n - k), |u| {
                    let mut rels = Vec::new();
                    if has_e {
                        rels.push(parse(u, &format!("e^2 - p{}", k))?);
                    }
                    if has_eb {
                        rels.push(parse(u, &format!("eb^2 - pb{}", n - k))?);
                    }
                    if has_e && has_eb {
                        rels.push(parse(u, "e*eb")?);
                    }
                    Ok(rels)
                })
            }
            OddRealGrassmannian { k, n } | OddOrientedGrassmannian { k, n } => {
                let r = if matches!(self, OddRealGrassmannian { .. }) {
                    "r"
                } else {
                    "rt"
                };
                let mut gens = [
                    series_gens("p", k, 4, Role::Plain),
                    series_gens("pb", n - k, 4, Role::Complementary),
                ]
                .concat();
                gens.push(Generator::new(r, 2 * n + 1));
                whitney_presentation(label, gens, &names("p", k), &names("pb", n - k), |u| {
                    Ok(vec![parse(u, &format!("{}^2", r))?])
                })
            }
            CompleteFlagComplex { n } => {
                let u = Universe::new(flat_gens("x", n, 2, Role::Plain))?;
                let rel = &total_product(&u, &names("x", n))? - &GradedElement::one(&u);
                RingPresentation::new(label, u, [rel])
            }
            CompleteFlagReal { n, .. } => {
                let u = Universe::new(flat_gens("u", n, 4, Role::Plain))?;
                let rel = &total_product(&u, &names("u", n))? - &GradedElement::one(&u);
                RingPresentation::new(label, u, [rel])
            }
            CompleteFlagOriented { n, odd_ambient } => {
                let gens = [
                    flat_gens("u", n, 4, Role::Complementary),
                    flat_gens("e", n, 2, Role::Euler),
                ]
                .concat();
                let u = Universe::new(gens)?;
                let mut rels = vec![&total_product(&u, &names("u", n))? - &GradedElement::one(&u)];
                for i in 1..=n {
                    rels.push(parse(&u, &format!("e{}^2 - u{}", i, i))?);
                }
                if !odd_ambient {
                    rels.push(product(&u, &names("e", n))?);
                }
                RingPresentation::new(label, u, rels)
            }
            ProjectiveSpaceComplex { m } => {
                RingPresentation::parse(label, vec![Generator::new("c1", 2)], &[&format!("c1^{}", m + 1)])
            }
            ProjectiveSpaceReal { .. } => Ok(RingPresentation::point().with_label(label)),
            Sphere { n } => RingPresentation::parse(
                label,
                vec![Generator::new("eb", 2 * n).with_role(Role::Euler)],
                &["eb^2"],
            ),
        }
    }

    pub fn closed_form(&self) -> Result<ClosedFormSeries> {
        self.validate()?;
        use SpaceDescriptor::*;
        Ok(match *self {
            Point | ProjectiveSpaceReal { .. } => ClosedFormSeries::one(),
            ComplexGrassmannian { k, n } => complex_grassmannian_series(k, n)?,
            RealGrassmannianEven { k, n, .. } => substitute_t_squared(&complex_grassmannian_series(k, n)?),
            OrientedGrassmannian { kind, k, n } => oriented_series(kind, k, n)?,
            OddRealGrassmannian { k, n } | OddOrientedGrassmannian { k, n } => {
                // (1 - t^{4n+2}) / (1 - t^{2n+1}) times the t^2-substituted
                // complex quotient of products
                let mut numer = vec![4 * n + 2];
                numer.extend((1..=n).map(|i| 4 * i));
                let mut denom = vec![2 * n + 1];
                denom.extend((1..=k).map(|i| 4 * i));
                denom.extend((1..=n - k).map(|i| 4 * i));
                ClosedFormSeries::ratio(numer, denom)
            }
            CompleteFlagComplex { n } => ClosedFormSeries::ratio((1..=n).map(|i| 2 * i).collect(), vec![2; n as usize]),
            CompleteFlagReal { n, .. } => {
                ClosedFormSeries::ratio((1..=n).map(|i| 4 * i).collect(), vec![4; n as usize])
            }
            CompleteFlagOriented { n, odd_ambient: true } => {
                ClosedFormSeries::ratio((1..=n).map(|i| 4 * i).collect(), vec![2; n as usize])
            }
            CompleteFlagOriented { n, odd_ambient: false } => {
                // the i = 1 factor is G~_2(R^2), a single point of the
                // connected flag manifold, so the product starts at i = 2
                let mut s = ClosedFormSeries::one();
                for i in 2..=n {
                    let f = &ClosedFormSeries::one_plus(2 * i - 2) * &ClosedFormSeries::ratio(vec![2 * i], vec![2]);
                    s = &s * &f;
                }
                s
            }
            ProjectiveSpaceComplex { m } => ClosedFormSeries::ratio(vec![2 * m + 2], vec![2]),
            Sphere { n } => ClosedFormSeries::one_plus(2 * n),
        })
    }

    /// The characteristic basis family, where one is known.
    pub fn basis_family(&self) -> Option<BasisFamily> {
        use OrientedKind::*;
        use SpaceDescriptor::*;
        Some(match *self {
            Point | ProjectiveSpaceReal { .. } => BasisFamily::new(vec![FamilyBlock::new(None, vec![], 0)]),
            ComplexGrassmannian { k, n } => BasisFamily::new(vec![FamilyBlock::new(None, names("c", k), n - k)]),
            RealGrassmannianEven { k, n, .. } => BasisFamily::new(vec![FamilyBlock::new(None, names("p", k), n - k)]),
            OrientedGrassmannian { kind, k, n } => {
                let ps = FamilyBlock::new(None, names("p", k), n - k);
                BasisFamily::new(match kind {
                    EvenEven => vec![
                        ps,
                        FamilyBlock::new(Some("e"), names("pb", n - k - 1), k),
                        FamilyBlock::new(Some("eb"), names("p", k - 1), n - k),
                    ],
                    EvenOdd => vec![ps, FamilyBlock::new(Some("e"), names("p", k), n - k)],
                    OddOdd => vec![ps, FamilyBlock::new(Some("eb"), names("p", k), n - k)],
                })
            }
            OddRealGrassmannian { k, n } => BasisFamily::new(vec![
                FamilyBlock::new(None, names("p", k), n - k),
                FamilyBlock::new(Some("r"), names("p", k), n - k),
            ]),
            OddOrientedGrassmannian { k, n } => BasisFamily::new(vec![
                FamilyBlock::new(None, names("p", k), n - k),
                FamilyBlock::new(Some("rt"), names("p", k), n - k),
            ]),
            ProjectiveSpaceComplex { m } => BasisFamily::new(vec![FamilyBlock::new(None, names("c", 1), m)]),
            Sphere { .. } => BasisFamily::new(vec![
                FamilyBlock::new(None, vec![], 0),
                FamilyBlock::new(Some("eb"), vec![], 0),
            ]),
            CompleteFlagComplex { .. } | CompleteFlagReal { .. } | CompleteFlagOriented { .. } => return None,
        })
    }

    /// The quotient ring with the manifold dimension as cutoff.
    pub fn ring(&self) -> Result<QuotientRing> {
        Ok(QuotientRing::new(self.presentation()?, self.top_degree()))
    }

    /// Every catalog space with parameters bounded by `max_n` (flag
    /// manifolds of real type are capped at 3 to keep elimination small).
    pub fn enumerate(max_n: u32) -> Vec<SpaceDescriptor> {
        use OrientedKind::*;
        use SpaceDescriptor::*;
        let mut out = vec![Point];
        for n in 0..=max_n {
            for k in 0..=n {
                out.push(ComplexGrassmannian { k, n });
                for variant in [EvenEven, EvenOdd, OddOdd] {
                    out.push(RealGrassmannianEven { variant, k, n });
                    if variant.check(k, n).is_ok() {
                        out.push(OrientedGrassmannian { kind: variant, k, n });
                    }
                }
                if n <= 3 {
                    out.push(OddRealGrassmannian { k, n });
                    out.push(OddOrientedGrassmannian { k, n });
                }
            }
        }
        for n in 1..=max_n {
            out.push(CompleteFlagComplex { n });
            out.push(ProjectiveSpaceComplex { m: n });
            out.push(ProjectiveSpaceReal { n });
            out.push(Sphere { n });
        }
        for n in 1..=max_n.min(3) {
            for odd_ambient in [false, true] {
                out.push(CompleteFlagReal { n, odd_ambient });
                out.push(CompleteFlagOriented { n, odd_ambient });
            }
        }
        out
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn names(prefix: &str, count: u32) -> Vec<String> {
    (1..=count).map(|i| format!("{}{}", prefix, i)).collect()
}

fn series_gens(prefix: &str, count: u32, step: u32, role: Role) -> Vec<Generator> {
    (1..=count)
        .map(|i| Generator::new(format!("{}{}", prefix, i), step * i).with_role(role))
        .collect()
}

/// Generators that all share one degree.
fn flat_gens(prefix: &str, count: u32, degree: u32, role: Role) -> Vec<Generator> {
    (1..=count)
        .map(|i| Generator::new(format!("{}{}", prefix, i), degree).with_role(role))
        .collect()
}

fn parse(u: &Universe, expr: &str) -> Result<GradedElement> {
    crate::algebra::parse_element(u, expr)
}

/// `1 + g_1 + g_2 + ...` for the named generators.
fn total_class(u: &Universe, gens: &[String]) -> Result<GradedElement> {
    let mut out = GradedElement::one(u);
    for g in gens {
        out = &out + &GradedElement::generator(u, g)?;
    }
    Ok(out)
}

/// `Π (1 + g_i)` for the named generators.
fn total_product(u: &Universe, gens: &[String]) -> Result<GradedElement> {
    let mut out = GradedElement::one(u);
    for g in gens {
        out = &out * &(&GradedElement::one(u) + &GradedElement::generator(u, g)?);
    }
    Ok(out)
}

fn product(u: &Universe, gens: &[String]) -> Result<GradedElement> {
    let mut out = GradedElement::one(u);
    for g in gens {
        out = &out * &GradedElement::generator(u, g)?;
    }
    Ok(out)
}

/// `(1 + a_1 + ...)(1 + b_1 + ...) = 1` plus extra relations.
fn whitney_presentation(
    label: String,
    gens: Vec<Generator>,
    canonical: &[String],
    complement: &[String],
    extra: impl FnOnce(&Universe) -> Result<Vec<GradedElement>>,
) -> Result<RingPresentation> {
    let u = Universe::new(gens)?;
    let whitney = &(&total_class(&u, canonical)? * &total_class(&u, complement)?) - &GradedElement::one(&u);
    let mut rels = vec![whitney];
    rels.extend(extra(&u)?);
    RingPresentation::new(label, u, rels)
}

/// Monomials `prefix * v_1^{r_1} ... v_m^{r_m}` with `Σ r_i ≤ max_sum`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyBlock {
    pub prefix: Option<String>,
    pub vars: Vec<String>,
    pub max_sum: u32,
}

impl FamilyBlock {
    pub fn new(prefix: Option<&str>, vars: Vec<String>, max_sum: u32) -> Self {
        FamilyBlock {
            prefix: prefix.map(str::to_string),
            vars,
            max_sum,
        }
    }

    fn contains(&self, u: &Universe, m: &Monomial) -> bool {
        let mut exps = m.exponents().to_vec();
        if let Some(p) = &self.prefix {
            match u.position(p) {
                Some(i) if exps[i] >= 1 => exps[i] -= 1,
                _ => return false,
            }
        }
        let mut sum = 0;
        for v in &self.vars {
            match u.position(v) {
                Some(i) => {
                    sum += exps[i];
                    exps[i] = 0;
                }
                None => return false,
            }
        }
        sum <= self.max_sum && exps.iter().all(|&e| e == 0)
    }
}

/// A finite union of monomial blocks; the characteristic basis of a space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisFamily {
    pub blocks: Vec<FamilyBlock>,
}

impl BasisFamily {
    pub fn new(blocks: Vec<FamilyBlock>) -> Self {
        BasisFamily { blocks }
    }

    pub fn contains(&self, u: &Universe, m: &Monomial) -> bool {
        self.blocks.iter().any(|b| b.contains(u, m))
    }

    /// Family members of the given degree, in ascending monomial order.
    pub fn monomials(&self, u: &Universe, degree: u32) -> Vec<Monomial> {
        monomials_of_degree(u, degree)
            .into_iter()
            .filter(|m| self.contains(u, m))
            .collect()
    }
}

impl fmt::Display for BasisFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let body = if b.vars.is_empty() {
                    "1".to_string()
                } else {
                    format!("{}^* with exponent sum <= {}", b.vars.join(","), b.max_sum)
                };
                match &b.prefix {
                    Some(p) => format!("{}*{{{}}}", p, body),
                    None => format!("{{{}}}", body),
                }
            })
            .collect();
        f.write_str(&parts.join(" u "))
    }
}

/// Everything the catalog knows about one space.
#[derive(Debug, Clone)]
pub struct Space {
    pub descriptor: SpaceDescriptor,
    pub presentation: RingPresentation,
    pub series: ClosedFormSeries,
    pub family: Option<BasisFamily>,
}

pub fn build_space(d: &SpaceDescriptor) -> Result<Space> {
    Ok(Space {
        descriptor: *d,
        presentation: d.presentation()?,
        series: d.closed_form()?,
        family: d.basis_family(),
    })
}

/// Family members of a given degree; empty for spaces without a known
/// family.
pub fn characteristic_basis_monomials(d: &SpaceDescriptor, degree: u32) -> Result<Vec<Monomial>> {
    let p = d.presentation()?;
    Ok(d.basis_family()
        .map(|f| f.monomials(p.universe(), degree))
        .unwrap_or_default())
}

/// Checks dimensions against the closed form, the basis family, and the
/// vanishing of the relations, in every degree up to `n`.
pub fn verify_space(d: &SpaceDescriptor, n: u32) -> Result<Report> {
    let ring = QuotientRing::new(d.presentation()?, n);
    ring.precompute();
    let label = d.label();
    let mut report = Report::default();
    report.push(check_dimensions(
        &format!("{} dimensions", label),
        &ring,
        &d.closed_form()?.truncate(n),
    )?);
    if let Some(family) = d.basis_family() {
        let u = ring.universe().clone();
        report.push(check_family(&format!("{} basis family", label), &ring, n, |deg| {
            Ok(family.monomials(&u, deg))
        })?);
    }
    report.push(check_relations_vanish(&format!("{} relations", label), &ring)?);
    Ok(report)
}
