//! The assembled tracking pipeline: STFT frontend, noise tracking and
//! activity detection, direction histogram, peak picking, and the
//! particle-filter tracker, advanced one hop at a time.
//!
//! Everything here is streaming: samples go in, finished hops come out,
//! and state is bounded by the window lengths and the source cap — peak
//! memory does not grow with input duration.

use std::io::Read;

use num_complex::Complex;

use crate::audio::EncodingMatrix;
use crate::config::PipelineConfig;
use crate::error::{Error, Result};
use crate::frontend::{ChannelOrder, FrontendConfig, StftStream};
use crate::grid::SphericalGrid;
use crate::localizer::{pick_observations, LocalizerConfig, Observation, SphericalHistogram};
use crate::tracker::{TrackFrame, Tracker};
use crate::vad::{frame_vad, NoiseState, VadConfig};
use crate::wav::WavReader;

/// Result of one pipeline hop.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineFrame {
    /// Tracker output (the frame time lives in `track.t`).
    pub track: TrackFrame,
    /// Frame-level activity decision.
    pub active: bool,
    /// Instantaneous DOA observations handed to the tracker (empty in
    /// inactive frames).
    pub observations: Vec<Observation>,
}

/// Sequential tracking pipeline; single owner feeds samples in hop order.
pub struct Pipeline {
    frontend: FrontendConfig,
    vad: VadConfig,
    localizer: LocalizerConfig,
    grid: SphericalGrid,
    stft: StftStream,
    noise: NoiseState,
    histogram: SphericalHistogram,
    tracker: Tracker,
}

impl Pipeline {
    pub fn new(config: &PipelineConfig, sample_rate: u32) -> Result<Self> {
        config.validate()?;
        config.frontend.validate(sample_rate)?;
        let stft = StftStream::new(sample_rate, &config.frontend)?;
        let hop = stft.hop_seconds();
        let grid = SphericalGrid::lebedev974_with_support(config.localizer.filter_support);
        let noise = NoiseState::new(stft.band_bins(), config.vad.window_frames(hop));
        let histogram =
            SphericalHistogram::new(grid.len(), config.localizer.window_frames(hop));
        let tracker = Tracker::new(config.tracker_config(hop), config.seed);
        Ok(Pipeline {
            frontend: config.frontend.clone(),
            vad: config.vad.clone(),
            localizer: config.localizer.clone(),
            grid,
            stft,
            noise,
            histogram,
            tracker,
        })
    }

    /// Tracker step period, seconds.
    pub fn hop_seconds(&self) -> f64 {
        self.stft.hop_seconds()
    }

    pub fn grid(&self) -> &SphericalGrid {
        &self.grid
    }

    /// Direction histogram state after the most recent hop.
    pub fn histogram(&self) -> &SphericalHistogram {
        &self.histogram
    }

    /// Tracker state after the most recent hop.
    pub fn tracker(&self) -> &Tracker {
        &self.tracker
    }

    /// Queues B-format samples (rows of W, X, Y, Z).
    pub fn push(&mut self, samples: &[[f64; 4]]) {
        self.stft.push(samples);
    }

    /// Processes one hop if enough samples are queued.
    pub fn next_frame(&mut self) -> Option<PipelineFrame> {
        let spectrum = self.stft.next_frame()?;
        let w_bins: Vec<Complex<f64>> = spectrum.bins.iter().map(|b| b.w).collect();
        self.noise.update(&w_bins, &self.vad);
        let vad = frame_vad(&self.noise, &w_bins, self.vad.threshold_db, spectrum.frame_index);
        self.histogram
            .accumulate(&spectrum, &vad, &self.grid, self.frontend.encoding_constant);
        let observations = if vad.active {
            pick_observations(&self.histogram, &self.grid, &self.localizer)
        } else {
            Vec::new()
        };
        let track = self.tracker.step(&observations, spectrum.time);
        Some(PipelineFrame {
            track,
            active: vad.active,
            observations,
        })
    }
}

/// Converts one channel-major block to B-format rows, applying either the
/// encoding matrix (raw capture) or the declared channel order.
pub fn block_to_foa(
    block: &[Vec<f64>],
    matrix: Option<&EncodingMatrix>,
    order: ChannelOrder,
) -> Result<Vec<[f64; 4]>> {
    let len = block.first().map_or(0, Vec::len);
    if let Some(matrix) = matrix {
        if block.len() != matrix.cols() {
            return Err(Error::config(format!(
                "input has {} channels but the encoding matrix expects {}",
                block.len(),
                matrix.cols()
            )));
        }
        let mut out = vec![[0.0f64; 4]; len];
        for (row_index, row) in (0..4).map(|r| (r, matrix.row(r))) {
            for (channel, &gain) in block.iter().zip(row) {
                if gain == 0.0 {
                    continue;
                }
                for (slot, &sample) in out.iter_mut().zip(channel) {
                    slot[row_index] += gain * sample;
                }
            }
        }
        return Ok(out);
    }
    if block.len() != 4 {
        return Err(Error::config(format!(
            "expected 4 B-format channels, found {} (use an encoding matrix \
             for raw multichannel input)",
            block.len()
        )));
    }
    // AmbiX files carry (W, Y, Z, X); internal order is (W, X, Y, Z).
    let order_map: [usize; 4] = match order {
        ChannelOrder::Wxyz => [0, 1, 2, 3],
        ChannelOrder::Ambix => [0, 3, 1, 2],
    };
    Ok((0..len)
        .map(|i| {
            [
                block[order_map[0]][i],
                block[order_map[1]][i],
                block[order_map[2]][i],
                block[order_map[3]][i],
            ]
        })
        .collect())
}

/// Block size of the streaming reader, in sample frames. Large enough to
/// amortize decode overhead, small enough to keep residency flat.
const READ_BLOCK: usize = 1 << 15;

/// Runs the full tracking chain over a WAV stream, calling `on_frame` for
/// every hop in order (the pipeline reference gives access to per-hop
/// debug state such as the direction histogram). Memory stays bounded by
/// the block size and the pipeline windows regardless of input length.
pub fn run_track<R: Read>(
    reader: &mut WavReader<R>,
    config: &PipelineConfig,
    matrix: Option<&EncodingMatrix>,
    mut on_frame: impl FnMut(&PipelineFrame, &Pipeline) -> Result<()>,
) -> Result<()> {
    let spec = reader.spec();
    let mut pipeline = Pipeline::new(config, spec.sample_rate)?;
    loop {
        let block = reader.read_block(READ_BLOCK)?;
        if block.first().map_or(true, Vec::is_empty) {
            break;
        }
        let foa = block_to_foa(&block, matrix, config.frontend.channel_order)?;
        pipeline.push(&foa);
        while let Some(frame) = pipeline.next_frame() {
            on_frame(&frame, &pipeline)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::audio::AudioBuffer;
    use crate::sim::{synthesize, NoiseKind, NoiseSpec, SceneSpec, SignalKind, SourceSpec};
    use crate::wav::write_wav_float32;

    fn buffer_rows(buffer: &AudioBuffer) -> Vec<[f64; 4]> {
        (0..buffer.len())
            .map(|i| {
                [
                    buffer.channel(0)[i],
                    buffer.channel(1)[i],
                    buffer.channel(2)[i],
                    buffer.channel(3)[i],
                ]
            })
            .collect()
    }

    fn sweep_scene(duration: f64, azimuth_deg: f64, elevation_deg: f64) -> SceneSpec {
        SceneSpec {
            duration,
            sample_rate: 24_000,
            sources: vec![SourceSpec {
                signal: SignalKind::SineSweep,
                level_db: 0.0,
                trajectory: vec![(
                    0.0,
                    azimuth_deg.to_radians(),
                    elevation_deg.to_radians(),
                )],
                on_off: Vec::new(),
                seed_tag: None,
            }],
            noise: NoiseSpec {
                kind: NoiseKind::White,
                snr_db: 20.0,
            },
            encoding_constant: 3.0,
        }
    }

    #[test]
    fn silence_yields_inactive_frames_and_no_sources() {
        let config = PipelineConfig::default();
        let mut pipeline = Pipeline::new(&config, 24_000).unwrap();
        pipeline.push(&vec![[0.0; 4]; 24_000]);
        let mut frames = 0;
        while let Some(frame) = pipeline.next_frame() {
            assert!(!frame.active);
            assert!(frame.observations.is_empty());
            assert!(frame.track.sources.is_empty());
            frames += 1;
        }
        assert_eq!(frames, (24_000 - 960) / 480 + 1);
    }

    #[test]
    fn finds_a_static_source_and_matches_the_batch_run() {
        let spec = sweep_scene(6.0, 40.0, 15.0);
        let frontend = FrontendConfig::default();
        let (buffer, _) = synthesize(&spec, &frontend, 21).unwrap();
        let rows = buffer_rows(&buffer);
        let config = PipelineConfig::default();

        let mut batch = Pipeline::new(&config, buffer.sample_rate()).unwrap();
        batch.push(&rows);
        let mut batch_frames = Vec::new();
        while let Some(frame) = batch.next_frame() {
            batch_frames.push(frame);
        }

        // Late frames must contain exactly one visible source near truth.
        let late: Vec<_> = batch_frames
            .iter()
            .filter(|f| f.track.t > 3.0)
            .collect();
        assert!(!late.is_empty());
        for frame in &late {
            assert_eq!(frame.track.sources.len(), 1, "at t = {}", frame.track.t);
            let estimate = &frame.track.sources[0];
            let az_err = crate::eval::azimuth_error(
                estimate.azimuth_deg.to_radians(),
                40f64.to_radians(),
            );
            assert!(az_err < 5.0, "azimuth error {az_err} at t = {}", frame.track.t);
            assert!((estimate.elevation_deg - 15.0).abs() < 5.0);
        }

        // Streaming in odd-sized chunks reproduces the batch run exactly.
        let mut streamed = Pipeline::new(&config, buffer.sample_rate()).unwrap();
        let mut stream_frames = Vec::new();
        for chunk in rows.chunks(1013) {
            streamed.push(chunk);
            while let Some(frame) = streamed.next_frame() {
                stream_frames.push(frame);
            }
        }
        assert_eq!(batch_frames, stream_frames);
    }

    #[test]
    fn run_track_streams_a_wav_end_to_end() {
        let spec = sweep_scene(4.0, -60.0, 0.0);
        let frontend = FrontendConfig::default();
        let (buffer, _) = synthesize(&spec, &frontend, 22).unwrap();
        let dir = std::env::temp_dir().join("ambitrack-pipeline-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("stream.wav");
        write_wav_float32(&path, &buffer).unwrap();

        let config = PipelineConfig::default();
        let mut reader = WavReader::open(&path).unwrap();
        let mut times = Vec::new();
        let mut last_sources = Vec::new();
        run_track(&mut reader, &config, None, |frame, _| {
            times.push(frame.track.t);
            last_sources = frame.track.sources.clone();
            Ok(())
        })
        .unwrap();

        let expected_frames = (buffer.len() - 960) / 480 + 1;
        assert_eq!(times.len(), expected_frames);
        assert!(times.windows(2).all(|w| w[1] > w[0]));
        assert_eq!(last_sources.len(), 1);
        let az_err = crate::eval::azimuth_error(
            last_sources[0].azimuth_deg.to_radians(),
            (-60f64).to_radians(),
        );
        assert!(az_err < 5.0, "final azimuth error {az_err}");
    }

    #[test]
    fn ambix_order_is_permuted_to_internal() {
        let block = vec![
            vec![1.0, 10.0], // W
            vec![2.0, 20.0], // Y (AmbiX slot 2)
            vec![3.0, 30.0], // Z (AmbiX slot 3)
            vec![4.0, 40.0], // X (AmbiX slot 4)
        ];
        let rows = block_to_foa(&block, None, ChannelOrder::Ambix).unwrap();
        assert_eq!(rows, vec![[1.0, 4.0, 2.0, 3.0], [10.0, 40.0, 20.0, 30.0]]);

        let rows = block_to_foa(&block, None, ChannelOrder::Wxyz).unwrap();
        assert_eq!(rows, vec![[1.0, 2.0, 3.0, 4.0], [10.0, 20.0, 30.0, 40.0]]);
    }

    #[test]
    fn encoding_matrix_mixes_raw_channels() {
        // 5-channel raw input; the matrix picks channels (0, 4, 1, 2) and
        // sums channel 3 into W at half gain.
        let matrix = EncodingMatrix::new([
            vec![1.0, 0.0, 0.0, 0.5, 0.0],
            vec![0.0, 0.0, 0.0, 0.0, 1.0],
            vec![0.0, 1.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 1.0, 0.0, 0.0],
        ])
        .unwrap();
        let block = vec![
            vec![1.0],
            vec![2.0],
            vec![3.0],
            vec![4.0],
            vec![5.0],
        ];
        let rows = block_to_foa(&block, Some(&matrix), ChannelOrder::Wxyz).unwrap();
        assert_eq!(rows, vec![[3.0, 5.0, 2.0, 3.0]]);

        let err = block_to_foa(&block[..3], Some(&matrix), ChannelOrder::Wxyz).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
        let err = block_to_foa(&block, None, ChannelOrder::Wxyz).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn seeded_runs_are_identical() {
        let spec = sweep_scene(3.0, 25.0, -10.0);
        let frontend = FrontendConfig::default();
        let (buffer, _) = synthesize(&spec, &frontend, 23).unwrap();
        let rows = buffer_rows(&buffer);
        let config = PipelineConfig::default();

        let run = || {
            let mut pipeline = Pipeline::new(&config, buffer.sample_rate()).unwrap();
            pipeline.push(&rows);
            let mut lines = String::new();
            while let Some(frame) = pipeline.next_frame() {
                lines.push_str(&serde_json::to_string(&frame.track).unwrap());
                lines.push('\n');
            }
            lines
        };
        assert_eq!(run(), run());
    }
}
