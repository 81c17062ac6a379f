//! Signal frontend: B-format encoding and the band-limited STFT.
//!
//! The rest of the pipeline consumes [`FoaSpectrum`] frames: complex spectra
//! of the four B-format channels (W, X, Y, Z), restricted to an analysis
//! band, produced every hop. Frames are windowed (Hann by default), the hop
//! is `frame_len * (1 - overlap)`, and a trailing partial frame is dropped.
//!
//! [`StftStream`] is the incremental form used by the streaming pipeline;
//! [`stft`] is the whole-buffer convenience wrapper around it.

use std::collections::VecDeque;
use std::sync::Arc;

use num_complex::Complex;
use rustfft::{Fft, FftPlanner};

use crate::audio::{AudioBuffer, EncodingMatrix};
use crate::error::{Error, Result};

/// Analysis window applied before the transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Window {
    /// Periodic Hann window; the default for 50% overlap.
    Hann,
    /// No weighting; useful for exact spectral tests.
    Rectangular,
}

/// Channel order of 4-channel input files.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChannelOrder {
    /// Native internal order (W, X, Y, Z).
    Wxyz,
    /// AmbiX file order (W, Y, Z, X), permuted to internal order on load.
    Ambix,
}

/// Frontend parameters. Defaults: 40 ms frames, 50% overlap, 400–7000 Hz
/// band, Hann window, and encoding constant C = 3 (N3D-normalized first
/// order, where the X/Y/Z components of a plane wave carry gain sqrt(3)).
#[derive(Debug, Clone, PartialEq)]
pub struct FrontendConfig {
    pub frame_len: f64,
    pub overlap: f64,
    pub f_lo: f64,
    pub f_hi: f64,
    pub window: Window,
    pub channel_order: ChannelOrder,
    /// Plane-wave directivity gain squared: for an ideal plane wave,
    /// (|X|^2 + |Y|^2 + |Z|^2) / |W|^2 equals this constant.
    pub encoding_constant: f64,
}

impl Default for FrontendConfig {
    fn default() -> Self {
        FrontendConfig {
            frame_len: 0.04,
            overlap: 0.5,
            f_lo: 400.0,
            f_hi: 7000.0,
            window: Window::Hann,
            channel_order: ChannelOrder::Wxyz,
            encoding_constant: 3.0,
        }
    }
}

impl FrontendConfig {
    /// Validates the configuration against a concrete sample rate.
    pub fn validate(&self, sample_rate: u32) -> Result<()> {
        if !(self.overlap >= 0.0 && self.overlap < 1.0) {
            return Err(Error::config(format!(
                "overlap must be in [0, 1), got {}",
                self.overlap
            )));
        }
        if !(self.f_lo > 0.0 && self.f_lo < self.f_hi) {
            return Err(Error::config(format!(
                "analysis band must satisfy 0 < f_lo < f_hi, got [{}, {}]",
                self.f_lo, self.f_hi
            )));
        }
        if self.f_hi > sample_rate as f64 / 2.0 {
            return Err(Error::config(format!(
                "f_hi = {} Hz exceeds the Nyquist frequency {} Hz",
                self.f_hi,
                sample_rate as f64 / 2.0
            )));
        }
        if self.frame_samples(sample_rate) < 16 {
            return Err(Error::config(format!(
                "frame of {} s at {} Hz is shorter than 16 samples",
                self.frame_len, sample_rate
            )));
        }
        if !(self.encoding_constant > 0.0) {
            return Err(Error::config("encoding constant must be positive"));
        }
        Ok(())
    }

    pub fn frame_samples(&self, sample_rate: u32) -> usize {
        (self.frame_len * sample_rate as f64).round() as usize
    }

    pub fn hop_samples(&self, sample_rate: u32) -> usize {
        ((self.frame_samples(sample_rate) as f64) * (1.0 - self.overlap))
            .round()
            .max(1.0) as usize
    }

    /// Hop duration in seconds (the tracker's time step).
    pub fn hop_seconds(&self, sample_rate: u32) -> f64 {
        self.hop_samples(sample_rate) as f64 / sample_rate as f64
    }
}

/// One retained STFT bin of the four B-format channels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FoaBin {
    pub frequency: f64,
    pub w: Complex<f64>,
    pub x: Complex<f64>,
    pub y: Complex<f64>,
    pub z: Complex<f64>,
}

/// One STFT frame restricted to the analysis band.
#[derive(Debug, Clone, PartialEq)]
pub struct FoaSpectrum {
    pub frame_index: usize,
    /// Frame-center time in seconds.
    pub time: f64,
    /// Bins in strictly increasing frequency order, all inside the band.
    pub bins: Vec<FoaBin>,
}

/// Applies a 4xM mixing matrix sample-wise, producing a B-format buffer.
pub fn encode_foa(buffer: &AudioBuffer, matrix: &EncodingMatrix) -> Result<AudioBuffer> {
    if matrix.cols() != buffer.channel_count() {
        return Err(Error::config(format!(
            "encoding matrix has {} columns but the buffer has {} channels",
            matrix.cols(),
            buffer.channel_count()
        )));
    }
    let len = buffer.len();
    let mut out = vec![vec![0.0f64; len]; 4];
    for (row_index, sink) in out.iter_mut().enumerate() {
        for (gain, channel) in matrix.row(row_index).iter().zip(buffer.channels()) {
            if *gain == 0.0 {
                continue;
            }
            for (acc, sample) in sink.iter_mut().zip(channel) {
                *acc += gain * sample;
            }
        }
    }
    AudioBuffer::new(buffer.sample_rate(), out)
}

/// Permutes an AmbiX-ordered (W, Y, Z, X) buffer into internal (W, X, Y, Z).
pub fn ambix_to_internal(buffer: &AudioBuffer) -> Result<AudioBuffer> {
    if buffer.channel_count() != 4 {
        return Err(Error::config(format!(
            "AmbiX input must have 4 channels, got {}",
            buffer.channel_count()
        )));
    }
    let c = buffer.channels();
    AudioBuffer::new(
        buffer.sample_rate(),
        vec![c[0].clone(), c[3].clone(), c[1].clone(), c[2].clone()],
    )
}

/// Incremental STFT over interleaved 4-channel sample frames.
///
/// Feed samples with [`push`](Self::push), then drain ready frames with
/// [`next_frame`](Self::next_frame). Holds at most one analysis frame of
/// backlog plus whatever has been pushed but not yet consumed.
pub struct StftStream {
    sample_rate: u32,
    frame_samples: usize,
    hop_samples: usize,
    window: Vec<f64>,
    fft: Arc<dyn Fft<f64>>,
    scratch: Vec<Complex<f64>>,
    /// Retained bin index range (inclusive) and per-bin frequencies.
    k_lo: usize,
    frequencies: Vec<f64>,
    /// Interleaved backlog; front() is the first sample of the next frame.
    pending: VecDeque<[f64; 4]>,
    frame_index: usize,
}

impl StftStream {
    pub fn new(sample_rate: u32, config: &FrontendConfig) -> Result<Self> {
        config.validate(sample_rate)?;
        let frame_samples = config.frame_samples(sample_rate);
        let hop_samples = config.hop_samples(sample_rate);
        let n = frame_samples as f64;
        let fs = sample_rate as f64;

        let window = match config.window {
            Window::Hann => (0..frame_samples)
                .map(|i| 0.5 * (1.0 - (2.0 * std::f64::consts::PI * i as f64 / n).cos()))
                .collect(),
            Window::Rectangular => vec![1.0; frame_samples],
        };

        // Retain bins whose center frequency k*fs/N lies in [f_lo, f_hi].
        // The tiny epsilon absorbs rounding when the band edge is an exact
        // bin frequency.
        let k_lo = ((config.f_lo * n / fs) - 1e-9).ceil().max(0.0) as usize;
        let k_hi = (((config.f_hi * n / fs) + 1e-9).floor() as usize).min(frame_samples / 2);
        let frequencies: Vec<f64> = if k_lo > k_hi {
            Vec::new()
        } else {
            (k_lo..=k_hi).map(|k| k as f64 * fs / n).collect()
        };

        let fft = FftPlanner::new().plan_fft_forward(frame_samples);
        let scratch = vec![Complex::default(); fft.get_inplace_scratch_len()];
        Ok(StftStream {
            sample_rate,
            frame_samples,
            hop_samples,
            window,
            fft,
            scratch,
            k_lo,
            frequencies,
            pending: VecDeque::new(),
            frame_index: 0,
        })
    }

    pub fn frame_samples(&self) -> usize {
        self.frame_samples
    }

    pub fn hop_samples(&self) -> usize {
        self.hop_samples
    }

    pub fn hop_seconds(&self) -> f64 {
        self.hop_samples as f64 / self.sample_rate as f64
    }

    /// Number of retained bins per frame.
    pub fn band_bins(&self) -> usize {
        self.frequencies.len()
    }

    /// Appends interleaved 4-channel samples to the backlog.
    pub fn push(&mut self, samples: &[[f64; 4]]) {
        self.pending.extend(samples.iter().copied());
    }

    /// Produces the next frame if a full analysis window is buffered.
    pub fn next_frame(&mut self) -> Option<FoaSpectrum> {
        if self.pending.len() < self.frame_samples {
            return None;
        }

        let mut bins: Vec<FoaBin> = self
            .frequencies
            .iter()
            .map(|&frequency| FoaBin {
                frequency,
                w: Complex::default(),
                x: Complex::default(),
                y: Complex::default(),
                z: Complex::default(),
            })
            .collect();

        let mut spectrum = vec![Complex::default(); self.frame_samples];
        for channel in 0..4 {
            for (i, value) in spectrum.iter_mut().enumerate() {
                *value = Complex::new(self.pending[i][channel] * self.window[i], 0.0);
            }
            self.fft
                .process_with_scratch(&mut spectrum, &mut self.scratch);
            for (bin, value) in bins.iter_mut().zip(&spectrum[self.k_lo..]) {
                match channel {
                    0 => bin.w = *value,
                    1 => bin.x = *value,
                    2 => bin.y = *value,
                    _ => bin.z = *value,
                }
            }
        }

        let start = self.frame_index * self.hop_samples;
        let time = (start as f64 + self.frame_samples as f64 / 2.0) / self.sample_rate as f64;
        let frame = FoaSpectrum {
            frame_index: self.frame_index,
            time,
            bins,
        };
        self.frame_index += 1;
        self.pending.drain(..self.hop_samples);
        Some(frame)
    }
}

/// Whole-buffer STFT. The buffer must have exactly 4 channels (internal
/// W, X, Y, Z order). A buffer shorter than one frame yields an empty
/// sequence.
pub fn stft(buffer: &AudioBuffer, config: &FrontendConfig) -> Result<Vec<FoaSpectrum>> {
    if buffer.channel_count() != 4 {
        return Err(Error::config(format!(
            "STFT input must have 4 channels, got {}",
            buffer.channel_count()
        )));
    }
    let mut stream = StftStream::new(buffer.sample_rate(), config)?;
    let interleaved: Vec<[f64; 4]> = (0..buffer.len())
        .map(|i| {
            [
                buffer.channel(0)[i],
                buffer.channel(1)[i],
                buffer.channel(2)[i],
                buffer.channel(3)[i],
            ]
        })
        .collect();
    stream.push(&interleaved);
    let mut frames = Vec::new();
    while let Some(frame) = stream.next_frame() {
        frames.push(frame);
    }
    Ok(frames)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn random_buffer(rng: &mut ChaCha8Rng, channels: usize, len: usize) -> AudioBuffer {
        let data = (0..channels)
            .map(|_| (0..len).map(|_| rng.random_range(-1.0..1.0)).collect())
            .collect();
        AudioBuffer::new(8000, data).unwrap()
    }

    #[test]
    fn encode_with_identity_matrix_is_identity() {
        let buffer = random_buffer(&mut rng(1), 4, 64);
        let out = encode_foa(&buffer, &EncodingMatrix::identity()).unwrap();
        assert_eq!(out, buffer);
    }

    #[test]
    fn encode_zero_buffer_stays_zero() {
        let buffer = AudioBuffer::silent(8000, 32, 50).unwrap();
        let rows = std::array::from_fn(|r| (0..32).map(|c| (r * 32 + c) as f64).collect());
        let matrix = EncodingMatrix::new(rows).unwrap();
        let out = encode_foa(&buffer, &matrix).unwrap();
        assert!(out.channels().iter().flatten().all(|&s| s == 0.0));
    }

    #[test]
    fn encode_matches_naive_dot_product_oracle() {
        let mut r = rng(2);
        let buffer = random_buffer(&mut r, 32, 256);
        let rows = std::array::from_fn(|_| {
            (0..32).map(|_| r.random_range(-2.0..2.0)).collect::<Vec<_>>()
        });
        let matrix = EncodingMatrix::new(rows).unwrap();
        let out = encode_foa(&buffer, &matrix).unwrap();

        // Oracle: direct per-sample row-by-column dot product.
        for row in 0..4 {
            for i in 0..buffer.len() {
                let expected: f64 = (0..32)
                    .map(|c| matrix.row(row)[c] * buffer.channel(c)[i])
                    .sum();
                assert!(
                    (out.channel(row)[i] - expected).abs() < 1e-12,
                    "row {row}, sample {i}"
                );
            }
        }
    }

    #[test]
    fn encode_rejects_column_mismatch() {
        let buffer = random_buffer(&mut rng(3), 6, 16);
        assert!(encode_foa(&buffer, &EncodingMatrix::identity()).is_err());
    }

    #[test]
    fn encode_is_linear() {
        let mut r = rng(4);
        let u = random_buffer(&mut r, 8, 100);
        let v = random_buffer(&mut r, 8, 100);
        let rows = std::array::from_fn(|_| {
            (0..8).map(|_| r.random_range(-1.0..1.0)).collect::<Vec<_>>()
        });
        let matrix = EncodingMatrix::new(rows).unwrap();
        let (a, b) = (0.7, -1.3);

        let mixed = AudioBuffer::new(
            8000,
            (0..8)
                .map(|c| {
                    u.channel(c)
                        .iter()
                        .zip(v.channel(c))
                        .map(|(x, y)| a * x + b * y)
                        .collect()
                })
                .collect(),
        )
        .unwrap();

        let enc_mixed = encode_foa(&mixed, &matrix).unwrap();
        let enc_u = encode_foa(&u, &matrix).unwrap();
        let enc_v = encode_foa(&v, &matrix).unwrap();
        for c in 0..4 {
            for i in 0..100 {
                let expected = a * enc_u.channel(c)[i] + b * enc_v.channel(c)[i];
                assert!((enc_mixed.channel(c)[i] - expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn ambix_permutation_moves_channels_into_wxyz_order() {
        let buffer = AudioBuffer::new(
            8000,
            vec![vec![1.0], vec![2.0], vec![3.0], vec![4.0]], // W,Y,Z,X on disk
        )
        .unwrap();
        let internal = ambix_to_internal(&buffer).unwrap();
        let first: Vec<f64> = internal.channels().iter().map(|c| c[0]).collect();
        assert_eq!(first, vec![1.0, 4.0, 2.0, 3.0]); // W,X,Y,Z
    }

    fn full_band_config(window: Window) -> FrontendConfig {
        FrontendConfig {
            frame_len: 0.008, // 64 samples at 8 kHz
            overlap: 0.5,
            f_lo: 1.0,
            f_hi: 4000.0,
            window,
            ..FrontendConfig::default()
        }
    }

    #[test]
    fn zero_input_produces_zero_spectra() {
        let buffer = AudioBuffer::silent(8000, 4, 512).unwrap();
        let frames = stft(&buffer, &full_band_config(Window::Hann)).unwrap();
        assert!(!frames.is_empty());
        for frame in &frames {
            for bin in &frame.bins {
                assert_eq!(bin.w, Complex::new(0.0, 0.0));
                assert_eq!(bin.x, Complex::new(0.0, 0.0));
                assert_eq!(bin.y, Complex::new(0.0, 0.0));
                assert_eq!(bin.z, Complex::new(0.0, 0.0));
            }
        }
    }

    #[test]
    fn frame_count_and_times_follow_hop_arithmetic() {
        let config = FrontendConfig {
            frame_len: 0.04,
            overlap: 0.5,
            ..FrontendConfig::default()
        };
        // 24 kHz: frame = 960, hop = 480. 10000 samples -> (10000-960)/480+1 = 19.
        let buffer = AudioBuffer::silent(24000, 4, 10_000).unwrap();
        let frames = stft(&buffer, &config).unwrap();
        assert_eq!(frames.len(), 19);
        for (k, frame) in frames.iter().enumerate() {
            assert_eq!(frame.frame_index, k);
            let expected = (k * 480 + 480) as f64 / 24000.0;
            assert!((frame.time - expected).abs() < 1e-12);
        }

        // Shorter than one frame: empty, not an error.
        let tiny = AudioBuffer::silent(24000, 4, 959).unwrap();
        assert!(stft(&tiny, &config).unwrap().is_empty());
    }

    #[test]
    fn cosine_at_bin_frequency_concentrates_in_one_bin() {
        // 8 kHz, 64-sample frames: bin spacing 125 Hz. Put a cosine at
        // 1000 Hz = bin 8, inside the retained band.
        let fs = 8000u32;
        let len = 64;
        let f = 1000.0;
        let w: Vec<f64> = (0..len)
            .map(|i| (2.0 * std::f64::consts::PI * f * i as f64 / fs as f64).cos())
            .collect();
        let buffer = AudioBuffer::new(
            fs,
            vec![w, vec![0.0; len], vec![0.0; len], vec![0.0; len]],
        )
        .unwrap();
        let config = FrontendConfig {
            f_lo: 400.0,
            f_hi: 3500.0,
            window: Window::Rectangular,
            ..full_band_config(Window::Rectangular)
        };
        let frames = stft(&buffer, &config).unwrap();
        assert_eq!(frames.len(), 1);
        let frame = &frames[0];

        let peak: f64 = frame
            .bins
            .iter()
            .map(|b| b.w.norm())
            .fold(0.0, f64::max);
        for bin in &frame.bins {
            if (bin.frequency - f).abs() < 1.0 {
                assert!((bin.w.norm() - 32.0).abs() < 1e-9, "N/2 at the tone bin");
            } else {
                assert!(
                    bin.w.norm() < 1e-9 * peak,
                    "leakage at {} Hz: {}",
                    bin.frequency,
                    bin.w.norm()
                );
            }
        }
    }

    #[test]
    fn transform_matches_naive_dft_oracle() {
        // One random 64-sample frame; compare every retained bin against a
        // direct O(N^2) Fourier sum.
        let mut r = rng(5);
        let buffer = random_buffer(&mut r, 4, 64);
        let config = full_band_config(Window::Rectangular);
        let frames = stft(&buffer, &config).unwrap();
        let frame = &frames[0];
        assert!(!frame.bins.is_empty());

        let n = 64usize;
        for bin in &frame.bins {
            let k = (bin.frequency * n as f64 / 8000.0).round() as usize;
            for (channel, value) in [bin.w, bin.x, bin.y, bin.z].iter().enumerate() {
                let mut acc = Complex::new(0.0, 0.0);
                for i in 0..n {
                    let phase = -2.0 * std::f64::consts::PI * (k * i) as f64 / n as f64;
                    acc += Complex::from_polar(buffer.channel(channel)[i], phase);
                }
                assert!(
                    (acc - value).norm() < 1e-9,
                    "bin {k} channel {channel}: {acc} vs {value}"
                );
            }
        }
    }

    #[test]
    fn hann_window_matches_naive_windowed_dft() {
        let mut r = rng(6);
        let buffer = random_buffer(&mut r, 4, 64);
        let config = full_band_config(Window::Hann);
        let frame = &stft(&buffer, &config).unwrap()[0];

        let n = 64usize;
        let hann: Vec<f64> = (0..n)
            .map(|i| 0.5 * (1.0 - (2.0 * std::f64::consts::PI * i as f64 / n as f64).cos()))
            .collect();
        for bin in frame.bins.iter().step_by(7) {
            let k = (bin.frequency * n as f64 / 8000.0).round() as usize;
            let mut acc = Complex::new(0.0, 0.0);
            for i in 0..n {
                let phase = -2.0 * std::f64::consts::PI * (k * i) as f64 / n as f64;
                acc += Complex::from_polar(buffer.channel(0)[i] * hann[i], phase);
            }
            assert!((acc - bin.w).norm() < 1e-9);
        }
    }

    #[test]
    fn parseval_holds_for_rectangular_full_band() {
        // Full-band config (f_lo at the first bin, f_hi at Nyquist) only
        // retains positive frequencies, so reconstruct total energy using
        // conjugate symmetry: |X_0|^2 + |X_N/2|^2 + 2*sum_{0<k<N/2} |X_k|^2.
        let mut r = rng(7);
        let buffer = random_buffer(&mut r, 4, 64);
        let config = FrontendConfig {
            frame_len: 0.008,
            overlap: 0.5,
            f_lo: 124.9, // first nonzero bin at 125 Hz
            f_hi: 4000.0,
            window: Window::Rectangular,
            ..FrontendConfig::default()
        };
        let frame = &stft(&buffer, &config).unwrap()[0];
        let n = 64;

        // DC bin is outside [f_lo, f_hi]; add it back by direct summation.
        let dc: f64 = buffer.channel(0)[..n].iter().sum();
        let mut spectral = dc * dc;
        for bin in &frame.bins {
            let k = (bin.frequency * n as f64 / 8000.0).round() as usize;
            let mag2 = bin.w.norm_sqr();
            spectral += if k == n / 2 { mag2 } else { 2.0 * mag2 };
        }
        let time: f64 = buffer.channel(0)[..n].iter().map(|s| s * s).sum();
        let relative = (time - spectral / n as f64).abs() / time;
        assert!(relative < 1e-6, "Parseval mismatch: {relative}");
    }

    #[test]
    fn streaming_and_batch_agree() {
        let mut r = rng(8);
        let buffer = random_buffer(&mut r, 4, 1000);
        let config = full_band_config(Window::Hann);
        let batch = stft(&buffer, &config).unwrap();

        let mut stream = StftStream::new(buffer.sample_rate(), &config).unwrap();
        let interleaved: Vec<[f64; 4]> = (0..buffer.len())
            .map(|i| std::array::from_fn(|c| buffer.channel(c)[i]))
            .collect();
        let mut streamed = Vec::new();
        // Push in ragged chunks to exercise the backlog logic.
        for chunk in interleaved.chunks(71) {
            stream.push(chunk);
            while let Some(frame) = stream.next_frame() {
                streamed.push(frame);
            }
        }
        assert_eq!(batch.len(), streamed.len());
        for (a, b) in batch.iter().zip(&streamed) {
            assert_eq!(a.frame_index, b.frame_index);
            assert_eq!(a.bins, b.bins);
        }
    }

    #[test]
    fn band_limits_are_inclusive_and_sorted() {
        let config = FrontendConfig {
            frame_len: 0.04,
            f_lo: 400.0,
            f_hi: 7000.0,
            ..FrontendConfig::default()
        };
        // 24 kHz, N = 960: bins every 25 Hz; 400 and 7000 are exact bins.
        let buffer = AudioBuffer::silent(24000, 4, 960).unwrap();
        let frame = &stft(&buffer, &config).unwrap()[0];
        assert_eq!(frame.bins.first().unwrap().frequency, 400.0);
        assert_eq!(frame.bins.last().unwrap().frequency, 7000.0);
        assert!(frame
            .bins
            .windows(2)
            .all(|p| p[0].frequency < p[1].frequency));
        assert_eq!(frame.bins.len(), (7000 - 400) / 25 + 1);
    }

    #[test]
    fn config_validation_rejects_bad_bands() {
        let mut config = FrontendConfig::default();
        config.f_hi = 13000.0;
        assert!(config.validate(24000).is_err()); // above Nyquist
        config.f_hi = 7000.0;
        config.overlap = 1.0;
        assert!(config.validate(24000).is_err());
        config.overlap = 0.5;
        config.frame_len = 0.0001;
        assert!(config.validate(24000).is_err()); // < 16 samples
    }
}
