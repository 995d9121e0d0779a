//! Turns config sections into rings.

use flagring::algebra::{Generator, GradedElement, QuotientRing, RingPresentation, Role};
use flagring::catalog::SpaceDescriptor;
use flagring::extension::{
    bott_tower, equivariant_space, extend_tower, flag_bundle, flag_fibre, grassmannian_bundle,
    grassmannian_fibre_series, odd_grassmannian_bundle, projectivization, ring_pushout, sphere_bundle, torus_rank,
    BundleData, BundleKind, ExtensionType, TowerSpec, TowerStage,
};
use flagring::series::{ClosedFormSeries, OrientedKind};

use crate::config::{
    BundleSpec, GeneratorSpec, InlineRing, JobConfig, PushoutConfig, RingSource, SpaceSpec, StageSpec,
};
use crate::CliError;

/// A ring together with what is known about it in closed form.
pub struct Built {
    pub ring: QuotientRing,
    pub closed_form: Option<ClosedFormSeries>,
    pub descriptor: Option<SpaceDescriptor>,
}

fn config_err(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

pub fn descriptor(spec: &SpaceSpec) -> Result<SpaceDescriptor, CliError> {
    let kind = match &spec.kind {
        Some(k) => Some(
            k.parse::<OrientedKind>()
                .map_err(|_| config_err(format!("space.kind: unknown kind {:?}", k)))?,
        ),
        None => None,
    };
    let d = SpaceDescriptor::from_parts(&spec.family, spec.k, spec.n, kind, spec.odd_ambient)?;
    d.validate()?;
    Ok(d)
}

fn space(spec: &SpaceSpec, cutoff: Option<u32>) -> Result<Built, CliError> {
    let d = descriptor(spec)?;
    if spec.equivariant {
        let ring = equivariant_space(&d, cutoff)?;
        let torus = ClosedFormSeries::ratio(vec![], vec![2; torus_rank(&d) as usize]);
        return Ok(Built {
            ring,
            closed_form: Some(&torus * &d.closed_form()?),
            descriptor: None,
        });
    }
    let ring = d.ring()?;
    let ring = match cutoff {
        Some(n) if n != ring.cutoff() => ring.recut(n),
        _ => ring,
    };
    Ok(Built {
        ring,
        closed_form: Some(d.closed_form()?),
        descriptor: Some(d),
    })
}

pub fn inline_ring(spec: &InlineRing) -> Result<RingPresentation, CliError> {
    let mut gens = Vec::with_capacity(spec.generators.len());
    for g in &spec.generators {
        let (name, degree, role) = match g {
            GeneratorSpec::Plain(n, d) => (n, *d, Role::Plain),
            GeneratorSpec::WithRole(n, d, r) => (
                n,
                *d,
                Role::parse(r).ok_or_else(|| config_err(format!("ring.generators: unknown role {:?} for {}", r, n)))?,
            ),
        };
        gens.push(Generator::new(name.clone(), degree).with_role(role));
    }
    let rels: Vec<&str> = spec.relations.iter().map(String::as_str).collect();
    let label = spec.label.clone().unwrap_or_else(|| "ring".into());
    Ok(RingPresentation::parse(label, gens, &rels)?)
}

fn bundle_kind(s: &str, field: &str) -> Result<BundleKind, CliError> {
    BundleKind::parse(s).ok_or_else(|| config_err(format!("{}: unknown bundle kind {:?}", field, s)))
}

fn total_class(base: &QuotientRing, components: &[String]) -> Result<GradedElement, CliError> {
    let mut total = GradedElement::one(base.universe());
    for c in components {
        total = &total + &base.element(c)?;
    }
    Ok(total)
}

fn bundle(base: Built, spec: &BundleSpec) -> Result<Built, CliError> {
    let kind = bundle_kind(&spec.kind, "bundle.kind")?;
    let total = total_class(&base.ring, &spec.total)?;
    let euler = spec.euler.as_deref().map(|e| base.ring.element(e)).transpose()?;
    let data = BundleData::new(base.ring.clone(), kind, spec.rank, total, euler)?;
    let need_k = || {
        spec.k
            .ok_or_else(|| config_err(format!("bundle.k is required for extension {}", spec.extension)))
    };
    let (ring, fibre) = match spec.extension.as_str() {
        "grassmannian" => {
            let k = need_k()?;
            (
                grassmannian_bundle(&data, k)?,
                Some(grassmannian_fibre_series(&data, k)?),
            )
        }
        "projectivization" => {
            let fibre = match kind {
                BundleKind::Complex => Some(ClosedFormSeries::ratio(vec![2 * spec.rank], vec![2])),
                _ => None,
            };
            (projectivization(&data)?, fibre)
        }
        "sphere" => (sphere_bundle(&data)?, Some(ClosedFormSeries::one_plus(spec.rank - 1))),
        "flag" => (flag_bundle(&data)?, Some(flag_fibre(&data).closed_form()?)),
        "odd-grassmannian" => (odd_grassmannian_bundle(&base.ring, &data, need_k()?)?, None),
        other => return Err(config_err(format!("bundle.extension: unknown extension {:?}", other))),
    };
    let closed_form = match (base.closed_form, fibre) {
        (Some(b), Some(f)) => Some(&b * &f),
        _ => None,
    };
    Ok(Built {
        ring,
        closed_form,
        descriptor: None,
    })
}

pub fn source(src: &RingSource) -> Result<Built, CliError> {
    let base = match (&src.space, &src.ring) {
        (Some(_), Some(_)) => return Err(config_err("give either [space] or [ring], not both")),
        (Some(s), None) => space(s, src.cutoff)?,
        (None, Some(r)) => {
            let cutoff = src
                .cutoff
                .ok_or_else(|| config_err("an inline [ring] needs an explicit cutoff"))?;
            Built {
                ring: QuotientRing::new(inline_ring(r)?, cutoff),
                closed_form: None,
                descriptor: None,
            }
        }
        (None, None) => return Err(config_err("no ring given: add a [space] or [ring] section")),
    };
    match &src.bundle {
        Some(b) => bundle(base, b),
        None => Ok(base),
    }
}

fn stage(spec: &StageSpec, index: usize) -> Result<TowerStage, CliError> {
    let field = format!("tower.stages[{}]", index);
    let extension = match spec.extension.as_str() {
        "projectivization" | "projectivize" => ExtensionType::Projectivize,
        "grassmannian" => ExtensionType::Grassmannianize(
            spec.k
                .ok_or_else(|| config_err(format!("{}.k is required for grassmannian stages", field)))?,
        ),
        "flag" => ExtensionType::CompleteFlag,
        other => {
            return Err(config_err(format!(
                "{}.extension: unknown extension {:?}",
                field, other
            )))
        }
    };
    let kind = bundle_kind(&spec.kind, &format!("{}.kind", field))?;
    let mut s = TowerStage::new(kind, spec.rank, spec.classes.clone(), extension);
    if let Some(e) = &spec.euler {
        s = s.with_euler(e.clone());
    }
    Ok(s)
}

pub fn tower(job: &JobConfig) -> Result<Built, CliError> {
    let spec = job.tower.as_ref().ok_or_else(|| config_err("no [tower] section"))?;
    let stages = spec
        .stages
        .iter()
        .enumerate()
        .map(|(i, s)| stage(s, i))
        .collect::<Result<Vec<_>, _>>()?;
    let ring = if job.space.is_some() || job.ring.is_some() {
        extend_tower(&source(&job.source())?.ring, &stages, 1)?
    } else {
        bott_tower(&TowerSpec::new(stages))?
    };
    let ring = match job.cutoff {
        Some(n) => ring.recut(n),
        None => ring,
    };
    Ok(Built {
        ring,
        closed_form: None,
        descriptor: None,
    })
}

fn images(target: &QuotientRing, exprs: &[String]) -> Result<Vec<GradedElement>, CliError> {
    Ok(exprs.iter().map(|e| target.element(e)).collect::<Result<Vec<_>, _>>()?)
}

pub fn pushout(spec: &PushoutConfig) -> Result<Built, CliError> {
    let b0 = source(&spec.b0)?;
    let b1 = source(&spec.b1)?;
    let e0 = source(&spec.e0)?;
    let ring = ring_pushout(
        &b0.ring,
        &b1.ring,
        &e0.ring,
        &images(&b1.ring, &spec.map_b1)?,
        &images(&e0.ring, &spec.map_e0)?,
    )?;
    Ok(Built {
        ring,
        closed_form: None,
        descriptor: None,
    })
}

/// The ring a job describes: a pushout or tower when present, else the
/// plain source.
pub fn job(job: &JobConfig) -> Result<Built, CliError> {
    match (&job.tower, &job.pushout) {
        (Some(_), Some(_)) => Err(config_err("give either [tower] or [pushout], not both")),
        (Some(_), None) => tower(job),
        (None, Some(p)) => {
            let built = pushout(p)?;
            Ok(match job.cutoff {
                Some(n) => Built {
                    ring: built.ring.recut(n),
                    ..built
                },
                None => built,
            })
        }
        (None, None) => source(&job.source()),
    }
}

/// A presentation document read back as a ring.
pub fn from_presentation(
    p: RingPresentation,
    cutoff: Option<u32>,
    override_cutoff: Option<u32>,
) -> Result<Built, CliError> {
    let cutoff = override_cutoff
        .or(cutoff)
        .ok_or_else(|| config_err("the presentation document has no cutoff; pass --cutoff"))?;
    Ok(Built {
        ring: QuotientRing::new(p, cutoff),
        closed_form: None,
        descriptor: None,
    })
}
