//! Declarative problem files (TOML) and their validation into core types.
// `!(x > 0)` rejects NaN in validations, which `x <= 0` would let through
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::path::Path;

use deltashell::{
    ChannelSpec, HarmonicLaw, PeriodicTail, Remainder, SampledTail, ShellConfig, TailAsserts,
    TailModel,
};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub shells: Option<ShellsSection>,
    pub channel: Option<ChannelSection>,
    pub space: Option<SpaceSection>,
    pub family: Option<FamilySection>,
    pub analysis: Option<AnalysisSection>,
    pub gershgorin: Option<GershgorinSection>,
    pub sweep: Option<SweepSection>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShellsSection {
    pub radii: Vec<f64>,
    pub strengths: Vec<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelSection {
    pub l: Option<f64>,
    pub n: Option<u32>,
    pub ell: Option<u32>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceSection {
    pub n: u32,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySection {
    pub kind: String,
    // periodic
    pub spacing_block: Option<Vec<f64>>,
    pub strength_block: Option<Vec<f64>>,
    // harmonic
    pub law: Option<String>,
    pub slope: Option<f64>,
    pub remainder: Option<String>,
    pub remainder_exponent: Option<f64>,
    pub coeff: Option<f64>,
    pub exponent: Option<f64>,
    // sampled
    pub spacings: Option<Vec<f64>>,
    pub strengths: Option<Vec<f64>>,
    pub asserts: Option<AssertsSection>,
}

#[derive(Debug, Clone, Copy, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct AssertsSection {
    pub sum_spacing_squares_diverge: Option<bool>,
    pub limit_circle_sum_finite: Option<bool>,
    pub brinck_sup_finite: Option<bool>,
    pub strengths_eventually_nonpositive: Option<bool>,
    pub windowed_strength_diverges: Option<bool>,
    pub windowed_abs_strength_vanishes: Option<bool>,
    pub spacings_tend_to_zero: Option<bool>,
}

#[derive(Debug, Clone, Copy, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct AnalysisSection {
    pub tol: Option<f64>,
    pub oracle: Option<bool>,
    pub lmax: Option<u32>,
    pub length: Option<f64>,
    pub mesh: Option<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GershgorinSection {
    pub weights: Option<Vec<f64>>,
    /// 1-based indices of the shells whose disks must sit on the positive side.
    pub positive_set: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    pub x: SweepAxis,
    pub y: Option<SweepAxis>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepAxis {
    /// "strength", "radius" or "l".
    pub param: String,
    /// 1-based shell index for strength/radius axes.
    pub index: Option<usize>,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
}

impl ProblemFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            source: e,
        })?;
        toml::from_str(&text).map_err(|e| CliError::Parse {
            path: path.display().to_string(),
            detail: e.to_string(),
        })
    }

    /// The shell configuration; errors when the section is missing or invalid.
    pub fn config(&self) -> Result<ShellConfig<f64>, CliError> {
        let section = self
            .shells
            .as_ref()
            .ok_or_else(|| CliError::invalid("this command needs a [shells] section"))?;
        if section.radii.len() != section.strengths.len() {
            return Err(CliError::invalid(format!(
                "[shells] radii ({}) and strengths ({}) differ in length",
                section.radii.len(),
                section.strengths.len()
            )));
        }
        let pairs: Vec<(f64, f64)> = section
            .radii
            .iter()
            .copied()
            .zip(section.strengths.iter().copied())
            .collect();
        ShellConfig::normalize(&pairs)
            .map_err(|e| CliError::invalid(format!("[shells] invalid: {e}")))
    }

    /// Shell configuration if present, the empty one otherwise (family-only
    /// problems).
    pub fn config_or_empty(&self) -> Result<ShellConfig<f64>, CliError> {
        if self.shells.is_some() {
            self.config()
        } else {
            Ok(ShellConfig::empty())
        }
    }

    pub fn channel(&self) -> Result<ChannelSpec<f64>, CliError> {
        let section = self
            .channel
            .as_ref()
            .ok_or_else(|| CliError::invalid("this command needs a [channel] section"))?;
        match (section.l, section.n, section.ell) {
            (Some(l), None, None) => Ok(ChannelSpec::Raw(l)),
            (None, Some(n), Some(ell)) => Ok(ChannelSpec::Angular { n, ell }),
            _ => Err(CliError::invalid(
                "[channel] needs either `l` alone or the pair `n`, `ell`",
            )),
        }
    }

    pub fn space(&self) -> Result<u32, CliError> {
        self.space
            .map(|s| s.n)
            .ok_or_else(|| CliError::invalid("this command needs a [space] section with `n`"))
    }

    pub fn tail(&self) -> Result<TailModel<f64>, CliError> {
        let Some(section) = self.family.as_ref() else {
            return Ok(TailModel::Finite);
        };
        let model = match section.kind.as_str() {
            "finite" => TailModel::Finite,
            "periodic" => {
                let spacing_block = section
                    .spacing_block
                    .clone()
                    .ok_or_else(|| CliError::invalid("[family] periodic needs `spacing_block`"))?;
                let strength_block = section
                    .strength_block
                    .clone()
                    .ok_or_else(|| CliError::invalid("[family] periodic needs `strength_block`"))?;
                TailModel::Periodic(PeriodicTail {
                    spacing_block,
                    strength_block,
                })
            }
            "harmonic" => TailModel::Harmonic(self.harmonic_law(section)?),
            "sampled" => {
                let spacings = section
                    .spacings
                    .clone()
                    .ok_or_else(|| CliError::invalid("[family] sampled needs `spacings`"))?;
                let strengths = section
                    .strengths
                    .clone()
                    .ok_or_else(|| CliError::invalid("[family] sampled needs `strengths`"))?;
                let a = section.asserts.unwrap_or_default();
                TailModel::Sampled(SampledTail {
                    spacings,
                    strengths,
                    asserts: TailAsserts {
                        sum_d_squared_diverges: a.sum_spacing_squares_diverge,
                        limit_circle_sum_finite: a.limit_circle_sum_finite,
                        brinck_sup_finite: a.brinck_sup_finite,
                        alpha_tail_nonpositive: a.strengths_eventually_nonpositive,
                        windowed_strength_diverges: a.windowed_strength_diverges,
                        windowed_abs_strength_vanishes: a.windowed_abs_strength_vanishes,
                        d_tends_to_zero: a.spacings_tend_to_zero,
                    },
                })
            }
            other => {
                return Err(CliError::invalid(format!(
                    "[family] kind must be finite, periodic, harmonic or sampled, got `{other}`"
                )))
            }
        };
        model
            .validate()
            .map_err(|e| CliError::invalid(format!("[family] invalid: {e}")))?;
        Ok(model)
    }

    fn harmonic_law(&self, section: &FamilySection) -> Result<HarmonicLaw<f64>, CliError> {
        match section.law.as_deref() {
            Some("linear") => {
                let a = section
                    .slope
                    .ok_or_else(|| CliError::invalid("[family] linear law needs `slope`"))?;
                let remainder = match section.remainder.as_deref() {
                    None | Some("zero") => Remainder::Zero,
                    Some("inverse-k") => Remainder::InverseK,
                    Some("power") => {
                        let e = section.remainder_exponent.ok_or_else(|| {
                            CliError::invalid("[family] power remainder needs `remainder_exponent`")
                        })?;
                        if !(e > 0.0) {
                            return Err(CliError::invalid(
                                "[family] `remainder_exponent` must be positive",
                            ));
                        }
                        Remainder::PowerK(e)
                    }
                    Some(other) => {
                        return Err(CliError::invalid(format!(
                            "[family] remainder must be zero, inverse-k or power, got `{other}`"
                        )))
                    }
                };
                Ok(HarmonicLaw::Linear { a, remainder })
            }
            Some("power") => {
                let coeff = section
                    .coeff
                    .ok_or_else(|| CliError::invalid("[family] power law needs `coeff`"))?;
                let exponent = section
                    .exponent
                    .ok_or_else(|| CliError::invalid("[family] power law needs `exponent`"))?;
                Ok(HarmonicLaw::Power { coeff, exponent })
            }
            Some(other) => Err(CliError::invalid(format!(
                "[family] law must be linear or power, got `{other}`"
            ))),
            None => Err(CliError::invalid("[family] harmonic needs `law`")),
        }
    }
}
