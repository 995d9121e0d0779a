//! Command-line front end: builds rings from job files or catalog
//! shorthands and prints presentations, series, bases, products and
//! verification reports.

pub mod build;
pub mod config;
pub mod document;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use flagring::algebra::Monomial;
use flagring::series::series_from_ring;
use flagring::verify::{run_suites, Report, Suite};

use build::Built;
use config::{JobConfig, SpaceSpec};
use document::{
    element_doc, generator_pairs, graded_lex, presentation_doc, presentation_from_doc, report_doc, Document,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("config: {0}")]
    Config(String),
    #[error("{0}")]
    Library(#[from] flagring::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "flagring",
    version,
    about = "Cohomology rings of Grassmannians, flag manifolds and their bundles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Where the ring comes from: a job file or a catalog shorthand.
#[derive(Debug, Clone, Args)]
pub struct Source {
    /// TOML job file, or a JSON presentation document written by `present --format structured`.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Catalog family, e.g. complex-grassmannian, sphere, complete-flag-complex.
    #[arg(long)]
    pub space: Option<String>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
    /// even-even, even-odd or odd-odd.
    #[arg(long)]
    pub kind: Option<String>,
    #[arg(long)]
    pub odd_ambient: bool,
    /// Borel construction over the maximal torus (flag families only).
    #[arg(long)]
    pub equivariant: bool,
    /// Truncation degree N.
    #[arg(long)]
    pub cutoff: Option<u32>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Args)]
pub struct Guard {
    /// Refuse degrees above this without --force-large.
    #[arg(long, default_value_t = 64)]
    pub cap: u32,
    #[arg(long)]
    pub force_large: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print generators and relations.
    Present(Source),
    /// Print the Poincaré series up to the cutoff.
    Series {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        guard: Guard,
    },
    /// Print the additive basis in one degree.
    Basis {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        degree: u32,
        #[command(flatten)]
        guard: Guard,
    },
    /// Normal form of a product.
    Mul {
        #[command(flatten)]
        source: Source,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        /// catalog, odd-identity, extension, flags, equivariant, pushout or all; repeatable.
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Build the [tower] of a job file and print its presentation and series.
    Tower(Source),
    /// Build the [pushout] of a job file and print its presentation and series.
    Pushout(Source),
}

/// Result of a successful run: rendered output and whether every requested
/// check passed.
pub struct Outcome {
    pub output: String,
    pub passed: bool,
}

struct Loaded {
    built: Built,
    format: Format,
}

fn parse_format(s: &str) -> Result<Format, CliError> {
    Format::from_str(s, true).map_err(|_| CliError::Config(format!("format: unknown format {:?}", s)))
}

fn read_job(path: &PathBuf) -> Result<(Option<JobConfig>, Option<Document>), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {}", path.display(), e)))?;
    if path.extension().is_some_and(|e| e == "json") {
        Ok((None, Some(Document::from_json(&text)?)))
    } else {
        Ok((Some(JobConfig::parse(&text)?), None))
    }
}

fn load(src: &Source, require: Option<&str>) -> Result<Loaded, CliError> {
    let (job, doc) = match (&src.config, &src.space) {
        (Some(_), Some(_)) => return Err(CliError::Usage("give either --config or --space".into())),
        (Some(path), None) => read_job(path)?,
        (None, Some(family)) => {
            let mut job = JobConfig {
                space: Some(SpaceSpec {
                    family: family.clone(),
                    k: src.k,
                    n: src.n,
                    kind: src.kind.clone(),
                    odd_ambient: src.odd_ambient,
                    equivariant: src.equivariant,
                }),
                ..JobConfig::default()
            };
            job.cutoff = src.cutoff;
            (Some(job), None)
        }
        (None, None) => return Err(CliError::Usage("a ring is needed: pass --config or --space".into())),
    };
    let file_format = job
        .as_ref()
        .and_then(|j| j.format.as_deref())
        .map(parse_format)
        .transpose()?;
    let format = src.format.or(file_format).unwrap_or(Format::Text);
    let built = match (job.as_ref(), doc) {
        (_, Some(doc)) => {
            let (p, cutoff) = presentation_from_doc(&doc)?;
            build::from_presentation(p, cutoff, src.cutoff)?
        }
        (Some(job), None) => {
            let mut job = job.clone();
            if src.cutoff.is_some() {
                job.cutoff = src.cutoff;
            }
            match require {
                Some("tower") if job.tower.is_none() => return Err(CliError::Config("no [tower] section".into())),
                Some("pushout") if job.pushout.is_none() => {
                    return Err(CliError::Config("no [pushout] section".into()))
                }
                _ => {}
            }
            build::job(&job)?
        }
        (None, None) => unreachable!("a job or a document is always loaded"),
    };
    Ok(Loaded { built, format })
}

fn check_cap(n: u32, guard: &Guard) -> Result<(), CliError> {
    if n > guard.cap && !guard.force_large {
        return Err(CliError::Usage(format!(
            "degree {} exceeds the cap {}; pass --force-large or raise --cap",
            n, guard.cap
        )));
    }
    Ok(())
}

fn render(format: Format, doc: Document, text: String) -> String {
    match format {
        Format::Structured => doc.to_json() + "\n",
        Format::Text => text,
    }
}

fn present(l: &Loaded) -> String {
    let ring = &l.built.ring;
    let text = format!("{}cutoff: {}\n", ring.presentation(), ring.cutoff());
    render(
        l.format,
        presentation_doc(ring.presentation(), Some(ring.cutoff())),
        text,
    )
}

fn series(l: &Loaded, n: u32) -> Result<String, CliError> {
    let ring = if n > l.built.ring.cutoff() {
        l.built.ring.recut(n)
    } else {
        l.built.ring.clone()
    };
    let s = series_from_ring(&ring, n)?;
    let closed = l.built.closed_form.as_ref().map(|c| c.to_string());
    let mut text = format!("series of {} to degree {}\ncoefficients: {}\n", ring.label(), n, s);
    if let Some(c) = &closed {
        writeln!(text, "closed form: {}", c).unwrap();
    }
    let doc = Document::Series {
        label: ring.label().to_string(),
        cutoff: n,
        coefficients: s.coeffs().to_vec(),
        closed_form: closed,
    };
    Ok(render(l.format, doc, text))
}

fn basis(l: &Loaded, degree: u32) -> Result<String, CliError> {
    let ring = if degree > l.built.ring.cutoff() {
        l.built.ring.recut(degree)
    } else {
        l.built.ring.clone()
    };
    let u = ring.universe();
    let mut monos: Vec<Monomial> = ring.degree_basis(degree)?;
    monos.sort_by(graded_lex);
    let family = l.built.descriptor.and_then(|d| d.basis_family());
    let in_family: Vec<bool> = monos
        .iter()
        .map(|m| family.as_ref().is_some_and(|f| f.contains(u, m)))
        .collect();
    let mut text = format!(
        "basis of {} in degree {} (dimension {})\n",
        ring.label(),
        degree,
        monos.len()
    );
    if let Some(f) = &family {
        writeln!(text, "family: {}", f).unwrap();
    }
    for (m, inside) in monos.iter().zip(&in_family) {
        let mark = match (&family, inside) {
            (None, _) => "",
            (Some(_), true) => "  [family]",
            (Some(_), false) => "  [outside family]",
        };
        writeln!(text, "  {}{}", m.display(u), mark).unwrap();
    }
    let doc = Document::Basis {
        label: ring.label().to_string(),
        degree,
        generators: generator_pairs(u),
        monomials: monos.iter().map(|m| m.exponents().to_vec()).collect(),
        family: family.map(|f| f.to_string()),
        in_family,
    };
    Ok(render(l.format, doc, text))
}

fn mul(l: &Loaded, a: &str, b: &str) -> Result<String, CliError> {
    let ring = &l.built.ring;
    let x = ring.element(a)?;
    let y = ring.element(b)?;
    let needed = x.max_degree().unwrap_or(0) + y.max_degree().unwrap_or(0);
    let ring = if needed > ring.cutoff() {
        ring.recut(needed)
    } else {
        ring.clone()
    };
    let nf = ring.multiply(&x, &y)?;
    let doc = Document::NormalForm {
        label: ring.label().to_string(),
        generators: generator_pairs(ring.universe()),
        element: element_doc(nf.as_element()),
    };
    Ok(render(l.format, doc, format!("{}\n", nf)))
}

fn verify(suites: &[String], max_n: u32, format: Format) -> Result<Outcome, CliError> {
    let mut selected = Vec::new();
    for s in suites {
        if s == "all" {
            selected.extend(Suite::ALL);
            continue;
        }
        let suite = Suite::parse(s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
            CliError::Usage(format!(
                "unknown suite {:?}; choose from {} or all",
                s,
                names.join(", ")
            ))
        })?;
        if !selected.contains(&suite) {
            selected.push(suite);
        }
    }
    let report: Report = run_suites(&selected, max_n)?;
    let text = format!("{}\n", report);
    Ok(Outcome {
        passed: report.passed(),
        output: render(format, report_doc(&report), text),
    })
}

/// Presentation and series for towers and pushouts. Structured output is
/// the presentation alone, since each invocation emits one document.
fn built_job(l: &Loaded) -> Result<String, CliError> {
    match l.format {
        Format::Text => Ok(present(l) + &series(l, l.built.ring.cutoff())?),
        Format::Structured => Ok(present(l)),
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    let ok = |output: String| Ok(Outcome { output, passed: true });
    match &cli.command {
        Command::Present(src) => ok(present(&load(src, None)?)),
        Command::Series { source, guard } => {
            let l = load(source, None)?;
            let n = l.built.ring.cutoff();
            check_cap(n, guard)?;
            ok(series(&l, n)?)
        }
        Command::Basis { source, degree, guard } => {
            check_cap(*degree, guard)?;
            ok(basis(&load(source, None)?, *degree)?)
        }
        Command::Mul { source, a, b } => ok(mul(&load(source, None)?, a, b)?),
        Command::Verify { suites, max_n, format } => verify(suites, *max_n, format.unwrap_or(Format::Text)),
        Command::Tower(src) => ok(built_job(&load(src, Some("tower"))?)?),
        Command::Pushout(src) => ok(built_job(&load(src, Some("pushout"))?)?),
    }
}
