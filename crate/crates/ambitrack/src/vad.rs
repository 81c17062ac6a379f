//! Noise tracking and frame-level voice-activity detection on the
//! omnidirectional (W) channel.
//!
//! Noise power is estimated per retained STFT bin with a minima-controlled
//! tracker: an exponentially smoothed periodogram combined with a sliding
//! minimum over a short window, scaled by a bias-compensation factor. The
//! estimate is the smaller of the two, so it follows the noise floor during
//! speech pauses while speech bursts cannot drag it upward quickly.
//!
//! Per frame, the a-posteriori SNR `gamma = |W|^2 / noise - 1` is computed
//! per bin; the frame statistic is the band average of `max(gamma, 0)` and
//! the activity decision compares it (in dB) to a fixed threshold.

use std::collections::VecDeque;

use num_complex::Complex;

/// Floor for noise powers, divisions, and log arguments.
pub const EPS: f64 = 1e-12;

/// VAD parameters. Defaults: 7 dB activation threshold, periodogram
/// smoothing 0.8, 1.5 s minimum-tracking window, bias compensation 1.5.
#[derive(Debug, Clone, PartialEq)]
pub struct VadConfig {
    pub threshold_db: f64,
    /// Exponential smoothing factor for the per-bin periodogram (weight on
    /// the previous estimate).
    pub smoothing: f64,
    /// Length of the sliding-minimum window, seconds.
    pub min_window: f64,
    /// Multiplier compensating the downward bias of the minimum statistic.
    pub bias_compensation: f64,
}

impl Default for VadConfig {
    fn default() -> Self {
        VadConfig {
            threshold_db: 7.0,
            smoothing: 0.8,
            min_window: 1.5,
            bias_compensation: 1.5,
        }
    }
}

impl VadConfig {
    /// Sliding-minimum window length in frames for a given hop duration.
    pub fn window_frames(&self, hop_seconds: f64) -> usize {
        ((self.min_window / hop_seconds).round() as usize).max(1)
    }
}

/// Per-bin noise power tracker. Single-owner sequential state: feed frames
/// in order through [`update`](Self::update).
#[derive(Debug, Clone)]
pub struct NoiseState {
    /// Smoothed periodogram per bin.
    smoothed: Vec<f64>,
    /// Recent smoothed periodograms, newest at the back; bounded by the
    /// sliding-minimum window length.
    history: VecDeque<Vec<f64>>,
    window_frames: usize,
    /// Current noise power estimate per bin.
    noise: Vec<f64>,
    initialized: bool,
}

impl NoiseState {
    pub fn new(bins: usize, window_frames: usize) -> Self {
        NoiseState {
            smoothed: vec![EPS; bins],
            history: VecDeque::new(),
            window_frames: window_frames.max(1),
            noise: vec![EPS; bins],
            initialized: false,
        }
    }

    /// Test/diagnostic constructor with a frozen, known noise floor.
    pub fn with_noise_power(noise: Vec<f64>) -> Self {
        let floored: Vec<f64> = noise.iter().map(|&v| v.max(EPS)).collect();
        NoiseState {
            smoothed: floored.clone(),
            history: VecDeque::from([floored.clone()]),
            window_frames: 1,
            noise: floored,
            initialized: true,
        }
    }

    pub fn bins(&self) -> usize {
        self.noise.len()
    }

    /// Current per-bin noise power estimates (all >= [`EPS`]).
    pub fn noise_power(&self) -> &[f64] {
        &self.noise
    }

    /// Advances the tracker by one frame of W-channel bins.
    ///
    /// The first frame initializes the smoothed periodogram directly; later
    /// frames blend with factor `smoothing`. The estimate per bin is
    /// `min(smoothed, bias_compensation * sliding_min(smoothed))`, floored.
    ///
    /// Panics if the bin count differs from the state (caller contract: one
    /// state per frontend configuration).
    pub fn update(&mut self, w_bins: &[Complex<f64>], config: &VadConfig) {
        assert_eq!(
            w_bins.len(),
            self.noise.len(),
            "bin count changed mid-stream"
        );
        let alpha = config.smoothing;
        for (slot, w) in self.smoothed.iter_mut().zip(w_bins) {
            let power = w.norm_sqr();
            *slot = if self.initialized {
                (alpha * *slot + (1.0 - alpha) * power).max(EPS)
            } else {
                power.max(EPS)
            };
        }
        self.initialized = true;

        if self.history.len() == self.window_frames {
            self.history.pop_front();
        }
        self.history.push_back(self.smoothed.clone());

        for (bin, slot) in self.noise.iter_mut().enumerate() {
            let minimum = self
                .history
                .iter()
                .map(|frame| frame[bin])
                .fold(f64::INFINITY, f64::min);
            *slot = self.smoothed[bin]
                .min(config.bias_compensation * minimum)
                .max(EPS);
        }
    }
}

/// Per-frame VAD output.
#[derive(Debug, Clone, PartialEq)]
pub struct VadFrame {
    pub frame_index: usize,
    /// A-posteriori SNR per bin, `|W|^2 / noise - 1` (>= -1).
    pub gamma_bins: Vec<f64>,
    /// Band average of `max(gamma, 0)`; the normalization makes the dB
    /// threshold independent of the bin count and sample rate.
    pub gamma_frame: f64,
    pub active: bool,
}

/// Computes the frame SNR statistic and activity decision. The noise state
/// must already be updated for this frame.
pub fn frame_vad(
    state: &NoiseState,
    w_bins: &[Complex<f64>],
    threshold_db: f64,
    frame_index: usize,
) -> VadFrame {
    assert_eq!(w_bins.len(), state.bins(), "bin count changed mid-stream");
    let gamma_bins: Vec<f64> = w_bins
        .iter()
        .zip(state.noise_power())
        .map(|(w, &noise)| w.norm_sqr() / noise.max(EPS) - 1.0)
        .collect();
    let gamma_frame = if gamma_bins.is_empty() {
        0.0
    } else {
        gamma_bins.iter().map(|&g| g.max(0.0)).sum::<f64>() / gamma_bins.len() as f64
    };
    let active = 10.0 * (gamma_frame + EPS).log10() >= threshold_db;
    VadFrame {
        frame_index,
        gamma_bins,
        gamma_frame,
        active,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn complex_noise(rng: &mut ChaCha8Rng, bins: usize, scale: f64) -> Vec<Complex<f64>> {
        (0..bins)
            .map(|_| {
                // Two uniform draws approximate a complex Gaussian well
                // enough for these statistical checks.
                let re: f64 = rng.random_range(-1.0..1.0);
                let im: f64 = rng.random_range(-1.0..1.0);
                Complex::new(re * scale, im * scale)
            })
            .collect()
    }

    #[test]
    fn converges_near_long_run_periodogram_mean_on_stationary_noise() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let bins = 64;
        let scale = 0.1;
        let config = VadConfig::default();
        let mut state = NoiseState::new(bins, 75);

        let mut long_run = vec![0.0f64; bins];
        let frames = 100;
        for _ in 0..frames {
            let w = complex_noise(&mut rng, bins, scale);
            for (sum, value) in long_run.iter_mut().zip(&w) {
                *sum += value.norm_sqr() / frames as f64;
            }
            state.update(&w, &config);
        }
        for bin in 0..bins {
            let ratio = state.noise_power()[bin] / long_run[bin];
            assert!(
                (0.5..=2.0).contains(&ratio),
                "bin {bin}: estimate/mean = {ratio}"
            );
        }
    }

    #[test]
    fn all_zero_input_decays_to_floor() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let config = VadConfig::default();
        let mut state = NoiseState::new(16, 10);
        for _ in 0..20 {
            state.update(&complex_noise(&mut rng, 16, 0.5), &config);
        }
        let zeros = vec![Complex::new(0.0, 0.0); 16];
        for _ in 0..300 {
            state.update(&zeros, &config);
        }
        assert!(state.noise_power().iter().all(|&v| v == EPS));
    }

    #[test]
    fn short_burst_barely_moves_the_estimate() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let config = VadConfig::default();
        let bins = 32;
        let mut state = NoiseState::new(bins, 75);
        let scale = 0.05;
        for _ in 0..100 {
            state.update(&complex_noise(&mut rng, bins, scale), &config);
        }
        let before: Vec<f64> = state.noise_power().to_vec();

        // +20 dB burst for 5 frames.
        for _ in 0..5 {
            state.update(&complex_noise(&mut rng, bins, scale * 10.0), &config);
        }
        for bin in 0..bins {
            let rise_db = 10.0 * (state.noise_power()[bin] / before[bin]).log10();
            assert!(rise_db < 3.0, "bin {bin} rose {rise_db} dB during burst");
        }
    }

    #[test]
    fn gamma_zero_at_exact_noise_floor() {
        let noise = vec![0.25; 8];
        let state = NoiseState::with_noise_power(noise);
        let w: Vec<Complex<f64>> = vec![Complex::new(0.5, 0.0); 8]; // |W|^2 = 0.25
        let frame = frame_vad(&state, &w, 7.0, 0);
        for &g in &frame.gamma_bins {
            assert!(g.abs() < 1e-12);
        }
        assert_eq!(frame.gamma_frame, 0.0);
        assert!(!frame.active);
    }

    #[test]
    fn eleven_times_noise_gives_gamma_ten_and_fires() {
        let state = NoiseState::with_noise_power(vec![0.04; 10]);
        // |W|^2 = 11 * noise in every bin.
        let amp = (11.0f64 * 0.04).sqrt();
        let w: Vec<Complex<f64>> = vec![Complex::new(amp, 0.0); 10];
        let frame = frame_vad(&state, &w, 7.0, 3);
        for &g in &frame.gamma_bins {
            assert!((g - 10.0).abs() < 1e-9);
        }
        assert!((frame.gamma_frame - 10.0).abs() < 1e-9); // 10 dB >= 7 dB
        assert!(frame.active);
        assert_eq!(frame.frame_index, 3);
    }

    #[test]
    fn empty_bin_list_is_inactive() {
        let state = NoiseState::with_noise_power(vec![]);
        let frame = frame_vad(&state, &[], 7.0, 0);
        assert_eq!(frame.gamma_frame, 0.0);
        assert!(!frame.active);
    }

    #[test]
    fn gamma_bins_never_fall_below_minus_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let state = NoiseState::with_noise_power(vec![1.0; 32]);
        for _ in 0..100 {
            let w = complex_noise(&mut rng, 32, 0.3);
            let frame = frame_vad(&state, &w, 7.0, 0);
            assert!(frame.gamma_bins.iter().all(|&g| g >= -1.0));
            assert!(frame.gamma_frame >= 0.0);
        }
    }

    #[test]
    fn decision_is_monotone_in_scale_with_frozen_noise() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let state = NoiseState::with_noise_power(vec![0.01; 24]);
        for _ in 0..200 {
            let w = complex_noise(&mut rng, 24, 0.15);
            let base = frame_vad(&state, &w, 7.0, 0);
            let scaled: Vec<Complex<f64>> = w.iter().map(|&v| v * 3.0).collect();
            let louder = frame_vad(&state, &scaled, 7.0, 0);
            if base.active {
                assert!(louder.active, "scaling up flipped the decision off");
            }
        }
    }

    #[test]
    fn false_alarm_rate_is_low_on_pure_stationary_noise() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        let config = VadConfig::default();
        let bins = 64;
        let mut state = NoiseState::new(bins, 75);
        let mut activations = 0usize;
        let frames = 1500;
        for i in 0..frames {
            let w = complex_noise(&mut rng, bins, 0.2);
            state.update(&w, &config);
            if frames_settled(i) && frame_vad(&state, &w, config.threshold_db, i).active {
                activations += 1;
            }
        }
        let rate = activations as f64 / frames as f64;
        assert!(rate < 0.05, "false alarm rate {rate}");
    }

    /// Skip the warm-up frames where the minimum tracker is still filling.
    fn frames_settled(i: usize) -> bool {
        i >= 100
    }
}
