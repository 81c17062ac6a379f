//! Pipeline configuration: every tunable constant of the processing chain
//! under a named key, parsed from flat `section.key = value` text.
//!
//! The defaults ARE the reference parameter set — a config file only
//! states deviations, so the struct doubles as the ledger of all
//! operating constants. Unknown keys are rejected rather than ignored:
//! a typo in a parameter name must never silently run with defaults.
//!
//! Cross-field couplings are structural, not stored: the tracker step
//! equals the STFT hop, and window lengths in seconds turn into frame
//! counts only once the sample rate is known.

use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::frontend::{ChannelOrder, FrontendConfig, Window};
use crate::localizer::LocalizerConfig;
use crate::tracker::TrackerConfig;
use crate::vad::VadConfig;

/// Tracker tuning in file-facing units (angles in degrees, Langevin rates
/// instead of per-step coefficients). Turned into a [`TrackerConfig`] once
/// the hop duration is known.
#[derive(Debug, Clone, PartialEq)]
pub struct TrackerSettings {
    pub particles: usize,
    pub max_sources: usize,
    /// Langevin damping rate, 1/s.
    pub alpha: f64,
    /// Langevin excitation level, m/s.
    pub beta: f64,
    pub enable_threshold: f64,
    pub new_source_threshold: f64,
    pub hangover: f64,
    pub deletion_timeout: f64,
    pub merge_angle_deg: f64,
    pub merge_factor: f64,
    pub resample_fraction: f64,
    pub base_variance: f64,
    pub velocity_factor: f64,
    pub fa_prior: f64,
    pub new_prior: f64,
}

impl Default for TrackerSettings {
    fn default() -> Self {
        let reference = TrackerConfig::new(1.0);
        TrackerSettings {
            particles: reference.particles,
            max_sources: reference.s_max,
            alpha: TrackerConfig::ALPHA,
            beta: TrackerConfig::BETA,
            enable_threshold: reference.enable_threshold,
            new_source_threshold: reference.new_source_threshold,
            hangover: reference.hangover,
            deletion_timeout: reference.deletion_timeout,
            merge_angle_deg: reference.merge_angle.to_degrees(),
            merge_factor: reference.merge_factor,
            resample_fraction: reference.resample_fraction,
            base_variance: reference.base_variance,
            velocity_factor: reference.velocity_factor,
            fa_prior: reference.fa_prior,
            new_prior: reference.new_prior,
        }
    }
}

impl TrackerSettings {
    /// Builds the runtime tracker config for one hop duration; `q_max`
    /// mirrors the localizer's observation cap.
    pub fn build(&self, dt: f64, q_max: usize) -> TrackerConfig {
        let mut config = TrackerConfig::new(dt);
        config.particles = self.particles;
        config.s_max = self.max_sources;
        config.q_max = q_max;
        config.enable_threshold = self.enable_threshold;
        config.new_source_threshold = self.new_source_threshold;
        config.hangover = self.hangover;
        config.deletion_timeout = self.deletion_timeout;
        config.merge_angle = self.merge_angle_deg.to_radians();
        config.merge_factor = self.merge_factor;
        config.resample_fraction = self.resample_fraction;
        config.base_variance = self.base_variance;
        config.velocity_factor = self.velocity_factor;
        config.fa_prior = self.fa_prior;
        config.new_prior = self.new_prior;
        config.set_langevin(self.alpha, self.beta);
        config
    }
}

/// Everything the tracking pipeline needs, in one place.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PipelineConfig {
    pub frontend: FrontendConfig,
    pub vad: VadConfig,
    pub localizer: LocalizerConfig,
    pub tracker: TrackerSettings,
    /// Optional path to a whitespace-separated 4xN matrix file mapping raw
    /// input channels to W/X/Y/Z; absent means the input is already
    /// 4-channel B-format.
    pub encoding_matrix: Option<PathBuf>,
    pub seed: u64,
}

impl PipelineConfig {
    /// Parses `key = value` lines on top of the defaults. `#` starts a
    /// comment; blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut config = PipelineConfig::default();
        config.apply_text(text)?;
        Ok(config)
    }

    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::config(format!(
                    "config line {}: expected key = value, got {raw:?}",
                    lineno + 1
                )));
            };
            self.set(key.trim(), value.trim())
                .map_err(|e| Error::config(format!("config line {}: {e}", lineno + 1)))?;
        }
        Ok(())
    }

    /// Sets one dotted key. Unknown keys are errors.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let num = |v: &str| -> Result<f64> {
            v.parse::<f64>()
                .map_err(|_| Error::config(format!("{key}: invalid number {v:?}")))
        };
        let count = |v: &str| -> Result<usize> {
            v.parse::<usize>()
                .map_err(|_| Error::config(format!("{key}: invalid count {v:?}")))
        };
        match key {
            "frontend.frame_duration" => self.frontend.frame_len = num(value)?,
            "frontend.overlap" => self.frontend.overlap = num(value)?,
            "frontend.band_low" => self.frontend.f_lo = num(value)?,
            "frontend.band_high" => self.frontend.f_hi = num(value)?,
            "frontend.window" => {
                self.frontend.window = match value {
                    "hann" => Window::Hann,
                    "rectangular" => Window::Rectangular,
                    other => {
                        return Err(Error::config(format!(
                            "{key}: unknown window {other:?} (hann, rectangular)"
                        )));
                    }
                }
            }
            "frontend.channel_order" => {
                self.frontend.channel_order = match value {
                    "wxyz" => ChannelOrder::Wxyz,
                    "ambix" => ChannelOrder::Ambix,
                    other => {
                        return Err(Error::config(format!(
                            "{key}: unknown channel order {other:?} (wxyz, ambix)"
                        )));
                    }
                }
            }
            "frontend.encoding_constant" => self.frontend.encoding_constant = num(value)?,
            "frontend.encoding_matrix" => self.encoding_matrix = Some(PathBuf::from(value)),
            "vad.threshold_db" => self.vad.threshold_db = num(value)?,
            "vad.smoothing" => self.vad.smoothing = num(value)?,
            "vad.min_window" => self.vad.min_window = num(value)?,
            "vad.bias_compensation" => self.vad.bias_compensation = num(value)?,
            "localizer.window" => self.localizer.window = num(value)?,
            "localizer.select_threshold" => self.localizer.select_threshold = num(value)?,
            "localizer.filter_variance" => self.localizer.filter_variance = num(value)?,
            "localizer.filter_support" => self.localizer.filter_support = count(value)?,
            "localizer.max_observations" => self.localizer.max_observations = count(value)?,
            "tracker.particles" => self.tracker.particles = count(value)?,
            "tracker.max_sources" => self.tracker.max_sources = count(value)?,
            "tracker.alpha" => self.tracker.alpha = num(value)?,
            "tracker.beta" => self.tracker.beta = num(value)?,
            "tracker.enable_threshold" => self.tracker.enable_threshold = num(value)?,
            "tracker.new_source_threshold" => self.tracker.new_source_threshold = num(value)?,
            "tracker.hangover" => self.tracker.hangover = num(value)?,
            "tracker.deletion_timeout" => self.tracker.deletion_timeout = num(value)?,
            "tracker.merge_angle_deg" => self.tracker.merge_angle_deg = num(value)?,
            "tracker.merge_factor" => self.tracker.merge_factor = num(value)?,
            "tracker.resample_fraction" => self.tracker.resample_fraction = num(value)?,
            "tracker.base_variance" => self.tracker.base_variance = num(value)?,
            "tracker.velocity_factor" => self.tracker.velocity_factor = num(value)?,
            "tracker.fa_prior" => self.tracker.fa_prior = num(value)?,
            "tracker.new_prior" => self.tracker.new_prior = num(value)?,
            "seed" => {
                self.seed = value
                    .parse::<u64>()
                    .map_err(|_| Error::config(format!("{key}: invalid seed {value:?}")))?;
            }
            other => {
                return Err(Error::config(format!("unknown config key {other:?}")));
            }
        }
        Ok(())
    }

    /// Range checks that don't need a sample rate (the frontend validates
    /// against the rate separately once the input is open).
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.vad.smoothing) {
            return Err(Error::config(format!(
                "vad.smoothing must be in [0, 1], got {}",
                self.vad.smoothing
            )));
        }
        if !(self.vad.min_window > 0.0) {
            return Err(Error::config("vad.min_window must be positive"));
        }
        if !(self.vad.bias_compensation >= 1.0) {
            return Err(Error::config("vad.bias_compensation must be >= 1"));
        }
        if !(self.localizer.window > 0.0) {
            return Err(Error::config("localizer.window must be positive"));
        }
        if !(self.localizer.filter_variance > 0.0) {
            return Err(Error::config("localizer.filter_variance must be positive"));
        }
        if self.localizer.filter_support == 0 {
            return Err(Error::config("localizer.filter_support must be >= 1"));
        }
        if self.localizer.max_observations == 0 {
            return Err(Error::config("localizer.max_observations must be >= 1"));
        }
        if self.tracker.particles == 0 {
            return Err(Error::config("tracker.particles must be >= 1"));
        }
        if self.tracker.max_sources == 0 {
            return Err(Error::config("tracker.max_sources must be >= 1"));
        }
        if !(self.tracker.alpha > 0.0) {
            return Err(Error::config("tracker.alpha must be positive"));
        }
        if !(self.tracker.beta >= 0.0) {
            return Err(Error::config("tracker.beta must be >= 0"));
        }
        if !(0.0..=1.0).contains(&self.tracker.resample_fraction) {
            return Err(Error::config("tracker.resample_fraction must be in [0, 1]"));
        }
        if !(self.tracker.base_variance > 0.0) {
            return Err(Error::config("tracker.base_variance must be positive"));
        }
        for (name, value) in [
            ("tracker.enable_threshold", self.tracker.enable_threshold),
            (
                "tracker.new_source_threshold",
                self.tracker.new_source_threshold,
            ),
            ("tracker.merge_factor", self.tracker.merge_factor),
            ("tracker.fa_prior", self.tracker.fa_prior),
            ("tracker.new_prior", self.tracker.new_prior),
        ] {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::config(format!("{name} must be in [0, 1], got {value}")));
            }
        }
        if !(self.tracker.hangover >= 0.0) || !(self.tracker.deletion_timeout >= 0.0) {
            return Err(Error::config("tracker timers must be >= 0"));
        }
        if !(self.tracker.merge_angle_deg >= 0.0) {
            return Err(Error::config("tracker.merge_angle_deg must be >= 0"));
        }
        Ok(())
    }

    /// The runtime tracker configuration for a given hop duration.
    pub fn tracker_config(&self, hop_seconds: f64) -> TrackerConfig {
        self.tracker
            .build(hop_seconds, self.localizer.max_observations)
    }
}
