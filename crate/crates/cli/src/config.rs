//! TOML job files.
//!
//! A job names one ring source (a catalog `[space]`, an inline `[ring]`, or
//! either of those with a `[bundle]` on top), or a `[tower]` or `[pushout]`.
//! Every generator carries an explicit degree.

use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub cutoff: Option<u32>,
    pub format: Option<String>,
    pub space: Option<SpaceSpec>,
    pub ring: Option<InlineRing>,
    pub bundle: Option<BundleSpec>,
    pub tower: Option<TowerConfig>,
    pub pushout: Option<PushoutConfig>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceSpec {
    pub family: String,
    pub k: Option<u32>,
    pub n: Option<u32>,
    pub kind: Option<String>,
    #[serde(default)]
    pub odd_ambient: bool,
    /// Borel construction for the flag families; needs a cutoff.
    #[serde(default)]
    pub equivariant: bool,
}

/// `[name, degree]` or `[name, degree, role]`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    Plain(String, u32),
    WithRole(String, u32, String),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InlineRing {
    pub label: Option<String>,
    pub generators: Vec<GeneratorSpec>,
    #[serde(default)]
    pub relations: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleSpec {
    pub kind: String,
    pub rank: u32,
    /// Homogeneous components of the total class in degrees `unit`,
    /// `2 unit`, ...; the leading 1 is implicit. Missing entries are zero.
    #[serde(default)]
    pub total: Vec<String>,
    pub euler: Option<String>,
    pub extension: String,
    pub k: Option<u32>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StageSpec {
    pub kind: String,
    pub rank: u32,
    #[serde(default)]
    pub classes: Vec<String>,
    pub euler: Option<String>,
    pub extension: String,
    pub k: Option<u32>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TowerConfig {
    pub stages: Vec<StageSpec>,
}

/// A ring used as one corner of a pushout.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSource {
    pub cutoff: Option<u32>,
    pub space: Option<SpaceSpec>,
    pub ring: Option<InlineRing>,
    pub bundle: Option<BundleSpec>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PushoutConfig {
    pub b0: RingSource,
    pub b1: RingSource,
    pub e0: RingSource,
    /// Images in `b1` of the generators of `b0`, in order.
    #[serde(default)]
    pub map_b1: Vec<String>,
    #[serde(default)]
    pub map_e0: Vec<String>,
}

impl JobConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn source(&self) -> RingSource {
        RingSource {
            cutoff: self.cutoff,
            space: self.space.clone(),
            ring: self.ring.clone(),
            bundle: self.bundle.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_inline_ring() {
        let c = JobConfig::parse(
            r#"
            cutoff = 6
            [ring]
            generators = [["x", 2], ["e", 2, "euler"]]
            relations = ["x^2 - e^2"]
            "#,
        )
        .unwrap();
        let ring = c.ring.unwrap();
        assert_eq!(ring.generators.len(), 2);
        assert!(matches!(&ring.generators[1], GeneratorSpec::WithRole(_, 2, r) if r == "euler"));
    }

    #[test]
    fn unknown_fields_report_their_location() {
        let err = JobConfig::parse("[space]\nfamily = \"point\"\nbogus = 1\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("bogus") && msg.contains("line 3"), "{}", msg);
    }

    #[test]
    fn degrees_must_be_integers() {
        assert!(JobConfig::parse("[ring]\ngenerators = [[\"x\", \"two\"]]\n").is_err());
        assert!(JobConfig::parse("[ring]\ngenerators = [[\"x\", -2]]\n").is_err());
    }
}
