//! Multi-source acoustic localization and tracking on first-order
//! ambisonic (B-format) signals.
//!
//! The processing chain runs in five stages, each usable on its own:
//!
//! 1. [`frontend`] — encodes raw capsule channels into B-format (or accepts
//!    B-format directly) and produces band-limited STFT frames.
//! 2. [`vad`] — tracks the background-noise spectrum on the omni channel and
//!    produces per-bin SNR estimates plus a per-frame speech/activity flag.
//! 3. [`localizer`] — turns pseudointensity directions of active
//!    time-frequency bins into a sliding histogram on a spherical grid and
//!    extracts up to a handful of candidate source directions per hop.
//! 4. [`tracker`] — a bank of particle filters on the unit sphere with
//!    probabilistic observation-to-source association, source birth/death and
//!    an activity/observability model.
//! 5. [`eval`] — compares emitted trajectories against ground truth with
//!    optimal track-to-truth assignment.
//!
//! [`sim`] synthesizes B-format test scenes (moving sources, interval
//! activity, sensor and diffuse noise) and [`pipeline`] wires the stages
//! together behind a streaming, constant-memory interface driven by the
//! `ambitrack` binary.

pub mod audio;
pub mod config;
pub mod error;
pub mod eval;
pub mod frontend;
pub mod grid;
mod grid_table;
pub mod localizer;
pub mod pipeline;
pub mod sim;
pub mod tracker;
pub mod vad;
pub mod wav;

pub use error::{Error, Result};
