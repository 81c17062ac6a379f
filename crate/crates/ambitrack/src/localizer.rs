//! Instantaneous direction-of-arrival estimation: pseudointensity of each
//! time-frequency bin, quantized onto the spherical grid and accumulated in
//! a sliding histogram, from which candidate observations are extracted.
//!
//! Per bin, the pseudointensity vector `Re(W* . [X, Y, Z])` points toward
//! the dominant arrival direction. Its histogram weight combines the bin's
//! a-posteriori SNR with a plane-wave consistency score: for an ideal plane
//! wave the ratio `R = (|X|^2+|Y|^2+|Z|^2)/|W|^2` equals the encoding
//! constant C, so `1/(1 + |C - R|)^2` discounts bins corrupted by noise or
//! interference.
//!
//! Peak picking: min–max normalize the windowed histogram, keep nodes above
//! a threshold, smooth each survivor with a truncated angular Gaussian over
//! its nearest-neighbor support, and report strict local maxima. The
//! smoothed response is used directly (clamped to 1) as the observation's
//! prior-correctness score: a sharp, well-supported peak saturates the
//! score, which downstream association requires before it may spawn a new
//! source, while marginal isolated bumps score low. (Normalizing the kernel
//! to unit sum instead would cap scores of realistic peaks near 0.1 and no
//! observation could ever reach the new-source threshold.)

use std::collections::VecDeque;

use nalgebra::Vector3;

use crate::frontend::{FoaBin, FoaSpectrum};
use crate::grid::SphericalGrid;
use crate::vad::VadFrame;

/// Bins with `|W|^2` at or below this floor are skipped entirely.
pub const EPS: f64 = 1e-12;

/// Localizer parameters. Defaults: 1 s histogram window, 0.3 selection
/// threshold, angular Gaussian of variance 0.2 rad^2 over 50 neighbors,
/// at most 4 observations per frame.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalizerConfig {
    /// Histogram window length, seconds.
    pub window: f64,
    /// Threshold on min–max normalized histogram values.
    pub select_threshold: f64,
    /// Variance of the angular smoothing kernel, rad^2.
    pub filter_variance: f64,
    /// Neighbor count of the smoothing kernel (and of local-maximum tests).
    pub filter_support: usize,
    /// Cap on observations returned per frame.
    pub max_observations: usize,
}

impl Default for LocalizerConfig {
    fn default() -> Self {
        LocalizerConfig {
            window: 1.0,
            select_threshold: 0.3,
            filter_variance: 0.2,
            filter_support: 50,
            max_observations: 4,
        }
    }
}

impl LocalizerConfig {
    /// Histogram window length in frames for a given hop duration.
    pub fn window_frames(&self, hop_seconds: f64) -> usize {
        ((self.window / hop_seconds).round() as usize).max(1)
    }
}

/// Pseudointensity vector `Re(W* . [X, Y, Z])` of one bin.
pub fn pseudointensity(bin: &FoaBin) -> Vector3<f64> {
    let w = bin.w.conj();
    Vector3::new((w * bin.x).re, (w * bin.y).re, (w * bin.z).re)
}

/// Plane-wave consistency ratio `(|X|^2 + |Y|^2 + |Z|^2) / |W|^2`, or
/// `None` when the pressure power is at the floor (bin must be skipped).
pub fn plane_wave_ratio(bin: &FoaBin) -> Option<f64> {
    let w2 = bin.w.norm_sqr();
    if w2 <= EPS {
        return None;
    }
    Some((bin.x.norm_sqr() + bin.y.norm_sqr() + bin.z.norm_sqr()) / w2)
}

/// One candidate DOA: a grid node direction with a prior-correctness score.
#[derive(Debug, Clone, PartialEq)]
pub struct Observation {
    pub azimuth: f64,
    pub elevation: f64,
    /// Prior probability that this observation is not a false alarm, in
    /// [0, 1].
    pub score: f64,
    /// Grid node the direction coincides with.
    pub node: u32,
    /// Unit direction vector of that node.
    pub direction: Vector3<f64>,
}

/// Sliding-window direction histogram over the grid nodes.
///
/// Per-frame contributions live in a ring buffer of `window_frames` frames;
/// the per-node aggregate is re-summed from the ring buffer on every push,
/// so it is exactly the sum of the retained contributions (no drift).
#[derive(Debug, Clone)]
pub struct SphericalHistogram {
    frames: VecDeque<Vec<(u32, f64)>>,
    aggregate: Vec<f64>,
    window_frames: usize,
}

impl SphericalHistogram {
    pub fn new(nodes: usize, window_frames: usize) -> Self {
        SphericalHistogram {
            frames: VecDeque::new(),
            aggregate: vec![0.0; nodes],
            window_frames: window_frames.max(1),
        }
    }

    pub fn window_frames(&self) -> usize {
        self.window_frames
    }

    /// Per-node aggregate over the current window (all values >= 0).
    pub fn aggregate(&self) -> &[f64] {
        &self.aggregate
    }

    /// Min–max normalized aggregate, or `None` when the histogram is
    /// degenerate (max equals min).
    pub fn normalized(&self) -> Option<Vec<f64>> {
        let (mn, mx) = self
            .aggregate
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                (lo.min(v), hi.max(v))
            });
        if !(mx > mn) {
            return None;
        }
        Some(self.aggregate.iter().map(|&v| (v - mn) / (mx - mn)).collect())
    }

    /// Pushes one frame's raw `(node, weight)` contributions, evicting the
    /// frame that falls out of the window.
    pub fn push_frame(&mut self, entries: Vec<(u32, f64)>) {
        if self.frames.len() == self.window_frames {
            self.frames.pop_front();
        }
        self.frames.push_back(entries);

        self.aggregate.fill(0.0);
        for frame in &self.frames {
            for &(node, weight) in frame {
                self.aggregate[node as usize] += weight;
            }
        }
    }

    /// Accumulates one STFT frame: every bin with pressure above the floor
    /// and positive SNR adds weight `max(gamma, 0) / (1 + |C - R|)^2` at the
    /// grid node nearest to its pseudointensity direction.
    ///
    /// `vad` must describe the same frame (same bin layout).
    pub fn accumulate(
        &mut self,
        frame: &FoaSpectrum,
        vad: &VadFrame,
        grid: &SphericalGrid,
        encoding_constant: f64,
    ) {
        assert_eq!(
            frame.bins.len(),
            vad.gamma_bins.len(),
            "VAD frame does not match the spectrum frame"
        );
        let mut entries = Vec::new();
        for (bin, &gamma) in frame.bins.iter().zip(&vad.gamma_bins) {
            if gamma <= 0.0 {
                continue;
            }
            let Some(ratio) = plane_wave_ratio(bin) else {
                continue;
            };
            let intensity = pseudointensity(bin);
            if intensity.norm_squared() == 0.0 {
                continue;
            }
            let mismatch = 1.0 + (encoding_constant - ratio).abs();
            let weight = gamma / (mismatch * mismatch);
            entries.push((grid.nearest(&intensity) as u32, weight));
        }
        self.push_frame(entries);
    }
}

/// Extracts up to `max_observations` candidate DOAs from the histogram.
/// Returns an empty list when the histogram is degenerate.
pub fn pick_observations(
    hist: &SphericalHistogram,
    grid: &SphericalGrid,
    config: &LocalizerConfig,
) -> Vec<Observation> {
    let Some(normalized) = hist.normalized() else {
        return Vec::new();
    };
    let threshold = config.select_threshold;
    let selected: Vec<u32> = (0..grid.len() as u32)
        .filter(|&i| normalized[i as usize] > threshold)
        .collect();
    if selected.is_empty() {
        return Vec::new();
    }

    // Truncated angular Gaussian response at each selected node.
    let two_var = 2.0 * config.filter_variance;
    let mut filtered = vec![f64::NAN; grid.len()];
    for &i in &selected {
        let node = grid.node(i as usize);
        let mut acc = 0.0;
        for &j in grid.neighbors(i as usize).iter().take(config.filter_support) {
            let d = crate::grid::angular_distance(
                &node.direction,
                &grid.node(j as usize).direction,
            );
            acc += (-d * d / two_var).exp() * normalized[j as usize];
        }
        filtered[i as usize] = acc;
    }

    // Strict local maxima among selected nodes, with a lower-index
    // tie-break so flat plateaus yield a single detection.
    let mut peaks: Vec<Observation> = Vec::new();
    for &i in &selected {
        let mine = filtered[i as usize];
        let is_max = grid
            .neighbors(i as usize)
            .iter()
            .take(config.filter_support)
            .all(|&j| {
                if j == i || filtered[j as usize].is_nan() {
                    return true;
                }
                let theirs = filtered[j as usize];
                mine > theirs || (mine == theirs && i < j)
            });
        if is_max {
            let node = grid.node(i as usize);
            peaks.push(Observation {
                azimuth: node.azimuth,
                elevation: node.elevation,
                score: mine.clamp(0.0, 1.0),
                node: i,
                direction: node.direction,
            });
        }
    }

    peaks.sort_by(|a, b| {
        b.score
            .partial_cmp(&a.score)
            .expect("scores are finite")
            .then(a.node.cmp(&b.node))
    });
    peaks.truncate(config.max_observations);
    peaks
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const C: f64 = 3.0;

    /// A plane-wave bin whose pseudointensity points along `direction`.
    fn plane_wave_bin(direction: &Vector3<f64>, pressure: Complex<f64>) -> FoaBin {
        let g = C.sqrt();
        FoaBin {
            frequency: 1000.0,
            w: pressure,
            x: pressure * g * direction.x,
            y: pressure * g * direction.y,
            z: pressure * g * direction.z,
        }
    }

    fn vad_frame(gammas: Vec<f64>) -> VadFrame {
        VadFrame {
            frame_index: 0,
            gamma_frame: gammas.iter().map(|&g: &f64| g.max(0.0)).sum::<f64>()
                / gammas.len().max(1) as f64,
            gamma_bins: gammas,
            active: true,
        }
    }

    fn spectrum(bins: Vec<FoaBin>) -> FoaSpectrum {
        FoaSpectrum {
            frame_index: 0,
            time: 0.0,
            bins,
        }
    }

    #[test]
    fn pseudointensity_of_x_axis_plane_wave() {
        let bin = FoaBin {
            frequency: 500.0,
            w: Complex::new(1.0, 0.0),
            x: Complex::new(3.0f64.sqrt(), 0.0),
            y: Complex::new(0.0, 0.0),
            z: Complex::new(0.0, 0.0),
        };
        let v = pseudointensity(&bin);
        assert!((v.x - 3.0f64.sqrt()).abs() < 1e-15);
        assert_eq!(v.y, 0.0);
        assert_eq!(v.z, 0.0);
        let (az, el) = crate::grid::to_spherical(&v);
        assert_eq!((az, el), (0.0, 0.0));
    }

    #[test]
    fn pseudointensity_ignores_common_phase() {
        let j = Complex::new(0.0, 1.0);
        let bin = FoaBin {
            frequency: 500.0,
            w: j,
            x: j * 3.0f64.sqrt(),
            y: Complex::new(0.0, 0.0),
            z: Complex::new(0.0, 0.0),
        };
        let v = pseudointensity(&bin);
        assert!((v.x - 3.0f64.sqrt()).abs() < 1e-15);
        assert_eq!((v.y, v.z), (0.0, 0.0));

        // General unit-modulus factor leaves the vector unchanged.
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..50 {
            let base = FoaBin {
                frequency: 1.0,
                w: Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                x: Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                y: Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                z: Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
            };
            let phase = Complex::from_polar(1.0, rng.random_range(0.0..6.28));
            let rotated = FoaBin {
                frequency: 1.0,
                w: base.w * phase,
                x: base.x * phase,
                y: base.y * phase,
                z: base.z * phase,
            };
            assert!((pseudointensity(&base) - pseudointensity(&rotated)).norm() < 1e-12);
        }
    }

    #[test]
    fn pseudointensity_points_along_y_for_lateral_wave() {
        let dir = Vector3::new(0.0, 1.0, 0.0); // azimuth pi/2, elevation 0
        let bin = plane_wave_bin(&dir, Complex::new(0.7, 0.2));
        let v = pseudointensity(&bin);
        assert!(v.y > 0.0);
        assert!(v.x.abs() < 1e-15 && v.z.abs() < 1e-15);
    }

    #[test]
    fn plane_wave_ratio_equals_encoding_constant() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for _ in 0..50 {
            let dir = random_direction(&mut rng);
            let p = Complex::new(rng.random_range(0.1..1.0), rng.random_range(-1.0..1.0));
            let bin = plane_wave_bin(&dir, p);
            let r = plane_wave_ratio(&bin).unwrap();
            assert!((r - C).abs() < 1e-12, "R = {r}");
        }
    }

    #[test]
    fn plane_wave_ratio_edge_cases() {
        let pressure_only = FoaBin {
            frequency: 1.0,
            w: Complex::new(1.0, 0.0),
            x: Complex::new(0.0, 0.0),
            y: Complex::new(0.0, 0.0),
            z: Complex::new(0.0, 0.0),
        };
        assert_eq!(plane_wave_ratio(&pressure_only), Some(0.0));

        let silent = FoaBin {
            frequency: 1.0,
            w: Complex::new(0.0, 0.0),
            x: Complex::new(1.0, 0.0),
            y: Complex::new(0.0, 0.0),
            z: Complex::new(0.0, 0.0),
        };
        assert_eq!(plane_wave_ratio(&silent), None);
    }

    #[test]
    fn plane_wave_ratio_matches_direct_formula_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..100 {
            let mut c = || Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            let bin = FoaBin {
                frequency: 1.0,
                w: c() + Complex::new(1.5, 0.0), // keep |W|^2 above the floor
                x: c(),
                y: c(),
                z: c(),
            };
            // Oracle: expand |a+bi|^2 = a^2 + b^2 by hand.
            let sq = |v: Complex<f64>| v.re * v.re + v.im * v.im;
            let expected = (sq(bin.x) + sq(bin.y) + sq(bin.z)) / sq(bin.w);
            let got = plane_wave_ratio(&bin).unwrap();
            assert!((got - expected).abs() < 1e-12);
        }
    }

    fn random_direction(rng: &mut ChaCha8Rng) -> Vector3<f64> {
        loop {
            let v = Vector3::new(
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            );
            let n = v.norm();
            if n > 1e-3 && n <= 1.0 {
                return v / n;
            }
        }
    }

    #[test]
    fn nonpositive_gamma_contributes_nothing() {
        let grid = SphericalGrid::lebedev974();
        let mut hist = SphericalHistogram::new(grid.len(), 3);
        let dir = grid.node(100).direction;
        hist.accumulate(
            &spectrum(vec![plane_wave_bin(&dir, Complex::new(1.0, 0.0))]),
            &vad_frame(vec![2.0]),
            &grid,
            C,
        );
        let before = hist.aggregate().to_vec();

        hist.accumulate(
            &spectrum(vec![plane_wave_bin(&dir, Complex::new(1.0, 0.0))]),
            &vad_frame(vec![-0.5]),
            &grid,
            C,
        );
        // Window not yet full: nothing evicted, aggregate unchanged.
        assert_eq!(hist.aggregate(), &before[..]);
    }

    #[test]
    fn unit_weight_bin_adds_exactly_one() {
        let grid = SphericalGrid::lebedev974();
        let mut hist = SphericalHistogram::new(grid.len(), 5);
        let node = 42usize;
        let dir = grid.node(node).direction;
        hist.accumulate(
            &spectrum(vec![plane_wave_bin(&dir, Complex::new(0.3, -0.4))]),
            &vad_frame(vec![1.0]),
            &grid,
            C,
        );
        assert!((hist.aggregate()[node] - 1.0).abs() < 1e-12);
        let total: f64 = hist.aggregate().iter().sum();
        assert!((total - 1.0).abs() < 1e-12, "weight landed on other nodes");
    }

    #[test]
    fn ring_buffer_eviction_matches_resummation_oracle() {
        let grid = SphericalGrid::lebedev974();
        let window = 7usize;
        let mut hist = SphericalHistogram::new(grid.len(), window);
        let node = 13usize;
        let dir = grid.node(node).direction;

        // Push window+1 identical single-bin frames: aggregate must equal
        // window * 1.0 (the first frame fell out).
        for _ in 0..window + 1 {
            hist.accumulate(
                &spectrum(vec![plane_wave_bin(&dir, Complex::new(1.0, 0.0))]),
                &vad_frame(vec![1.0]),
                &grid,
                C,
            );
        }
        assert!((hist.aggregate()[node] - window as f64).abs() < 1e-12);

        // Randomized cross-check against an explicit re-summation oracle.
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        let mut pushed: Vec<Vec<(u32, f64)>> = Vec::new();
        let mut hist = SphericalHistogram::new(grid.len(), window);
        for _ in 0..25 {
            let entries: Vec<(u32, f64)> = (0..rng.random_range(0..6))
                .map(|_| {
                    (
                        rng.random_range(0..grid.len() as u32),
                        rng.random_range(0.0..2.0),
                    )
                })
                .collect();
            pushed.push(entries.clone());
            hist.push_frame(entries);

            let mut oracle = vec![0.0f64; grid.len()];
            for frame in pushed.iter().rev().take(window) {
                for &(n, w) in frame {
                    oracle[n as usize] += w;
                }
            }
            for (a, b) in hist.aggregate().iter().zip(&oracle) {
                assert!((a - b).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn accumulation_order_within_a_frame_is_irrelevant() {
        let grid = SphericalGrid::lebedev974();
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        let bins: Vec<FoaBin> = (0..20)
            .map(|_| plane_wave_bin(&random_direction(&mut rng), Complex::new(0.8, 0.1)))
            .collect();
        let gammas: Vec<f64> = (0..20).map(|_| rng.random_range(0.0..3.0)).collect();

        let mut forward = SphericalHistogram::new(grid.len(), 2);
        forward.accumulate(&spectrum(bins.clone()), &vad_frame(gammas.clone()), &grid, C);

        let mut reversed_bins = bins;
        reversed_bins.reverse();
        let mut reversed_gammas = gammas;
        reversed_gammas.reverse();
        let mut backward = SphericalHistogram::new(grid.len(), 2);
        backward.accumulate(
            &spectrum(reversed_bins),
            &vad_frame(reversed_gammas),
            &grid,
            C,
        );

        for (a, b) in forward.aggregate().iter().zip(backward.aggregate()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn histogram_commutes_with_axis_swap_symmetry() {
        // Swapping x and y maps the node set onto itself, so a swapped
        // scene must produce the identically permuted histogram.
        let grid = SphericalGrid::lebedev974();
        let mut rng = ChaCha8Rng::seed_from_u64(36);
        let directions: Vec<Vector3<f64>> =
            (0..40).map(|_| random_direction(&mut rng)).collect();
        let gammas: Vec<f64> = (0..40).map(|_| rng.random_range(0.1..2.0)).collect();

        let build = |dirs: &[Vector3<f64>]| {
            let bins: Vec<FoaBin> = dirs
                .iter()
                .map(|d| plane_wave_bin(d, Complex::new(1.0, 0.0)))
                .collect();
            let mut hist = SphericalHistogram::new(grid.len(), 1);
            hist.accumulate(&spectrum(bins), &vad_frame(gammas.clone()), &grid, C);
            hist
        };

        let original = build(&directions);
        let swapped_dirs: Vec<Vector3<f64>> = directions
            .iter()
            .map(|d| Vector3::new(d.y, d.x, d.z))
            .collect();
        let swapped = build(&swapped_dirs);

        for i in 0..grid.len() {
            let image_dir = Vector3::new(
                grid.node(i).direction.y,
                grid.node(i).direction.x,
                grid.node(i).direction.z,
            );
            let image = grid.nearest(&image_dir);
            assert!(
                (original.aggregate()[i] - swapped.aggregate()[image]).abs() < 1e-12,
                "node {i} vs image {image}"
            );
        }
    }

    #[test]
    fn empty_histogram_yields_no_observations() {
        let grid = SphericalGrid::lebedev974();
        let hist = SphericalHistogram::new(grid.len(), 3);
        let obs = pick_observations(&hist, &grid, &LocalizerConfig::default());
        assert!(obs.is_empty());
    }

    #[test]
    fn single_impulse_yields_one_saturated_observation() {
        let grid = SphericalGrid::lebedev974();
        let mut hist = SphericalHistogram::new(grid.len(), 3);
        hist.push_frame(vec![(500, 4.2)]);
        let obs = pick_observations(&hist, &grid, &LocalizerConfig::default());
        assert_eq!(obs.len(), 1);
        assert_eq!(obs[0].node, 500);
        // Only the impulse node itself is nonzero, so the kernel response
        // is exactly the self weight exp(0) = 1.
        assert_eq!(obs[0].score, 1.0);
        assert_eq!(obs[0].azimuth, grid.node(500).azimuth);
        assert_eq!(obs[0].elevation, grid.node(500).elevation);
    }

    /// Nodes that are pairwise > 60 degrees apart (outside each other's
    /// neighbor support).
    fn well_separated_nodes(grid: &SphericalGrid, count: usize) -> Vec<u32> {
        let mut chosen: Vec<u32> = Vec::new();
        for i in 0..grid.len() as u32 {
            let far_enough = chosen.iter().all(|&j| {
                crate::grid::angular_distance(
                    &grid.node(i as usize).direction,
                    &grid.node(j as usize).direction,
                ) > 60f64.to_radians()
            });
            if far_enough {
                chosen.push(i);
                if chosen.len() == count {
                    break;
                }
            }
        }
        assert_eq!(chosen.len(), count, "could not find {count} separated nodes");
        chosen
    }

    #[test]
    fn separated_equal_impulses_are_both_reported() {
        let grid = SphericalGrid::lebedev974();
        let nodes = well_separated_nodes(&grid, 2);
        let mut hist = SphericalHistogram::new(grid.len(), 3);
        hist.push_frame(vec![(nodes[0], 2.0), (nodes[1], 2.0)]);
        let obs = pick_observations(&hist, &grid, &LocalizerConfig::default());
        assert_eq!(obs.len(), 2);
        let mut found: Vec<u32> = obs.iter().map(|o| o.node).collect();
        found.sort_unstable();
        let mut expected = nodes.clone();
        expected.sort_unstable();
        assert_eq!(found, expected);
    }

    #[test]
    fn observation_list_caps_at_max_sorted_by_score() {
        let grid = SphericalGrid::lebedev974();
        let nodes = well_separated_nodes(&grid, 5);
        let heights = [1.0, 0.9, 0.8, 0.7, 0.6];
        let mut hist = SphericalHistogram::new(grid.len(), 3);
        hist.push_frame(
            nodes
                .iter()
                .zip(heights)
                .map(|(&n, h)| (n, h))
                .collect::<Vec<_>>(),
        );
        let obs = pick_observations(&hist, &grid, &LocalizerConfig::default());
        assert_eq!(obs.len(), 4, "capped at max_observations");
        // The weakest impulse is the one dropped.
        assert!(obs.iter().all(|o| o.node != nodes[4]));
        for pair in obs.windows(2) {
            assert!(pair[0].score >= pair[1].score);
        }
    }

    /// Independent re-implementation of the peak picker used as a fuzz
    /// oracle: recomputes normalization, selection, smoothing, and maxima
    /// with separate code, scanning all nodes.
    fn oracle_pick(
        hist: &SphericalHistogram,
        grid: &SphericalGrid,
        config: &LocalizerConfig,
    ) -> Vec<(u32, f64)> {
        let agg = hist.aggregate();
        let mx = agg.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let mn = agg.iter().cloned().fold(f64::INFINITY, f64::min);
        if mx == mn {
            return Vec::new();
        }
        let norm: Vec<f64> = agg.iter().map(|&v| (v - mn) / (mx - mn)).collect();
        let smooth = |i: usize| -> f64 {
            grid.neighbors(i)
                .iter()
                .take(config.filter_support)
                .map(|&j| {
                    let d = crate::grid::angular_distance(
                        &grid.node(i).direction,
                        &grid.node(j as usize).direction,
                    );
                    (-(d * d) / (2.0 * config.filter_variance)).exp() * norm[j as usize]
                })
                .sum()
        };
        let mut out: Vec<(u32, f64)> = (0..grid.len())
            .filter(|&i| norm[i] > config.select_threshold)
            .filter(|&i| {
                let mine = smooth(i);
                grid.neighbors(i)
                    .iter()
                    .take(config.filter_support)
                    .filter(|&&j| j as usize != i && norm[j as usize] > config.select_threshold)
                    .all(|&j| {
                        let theirs = smooth(j as usize);
                        mine > theirs || (mine == theirs && i < j as usize)
                    })
            })
            .map(|i| (i as u32, smooth(i).clamp(0.0, 1.0)))
            .collect();
        out.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
        out.truncate(config.max_observations);
        out
    }

    #[test]
    fn peak_picker_matches_brute_force_oracle_on_random_histograms() {
        let grid = SphericalGrid::lebedev974();
        let config = LocalizerConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..50 {
            let mut hist = SphericalHistogram::new(grid.len(), 1);
            let entries: Vec<(u32, f64)> = (0..rng.random_range(1..30))
                .map(|_| {
                    (
                        rng.random_range(0..grid.len() as u32),
                        rng.random_range(0.0..5.0),
                    )
                })
                .collect();
            hist.push_frame(entries);

            let got: Vec<(u32, f64)> = pick_observations(&hist, &grid, &config)
                .iter()
                .map(|o| (o.node, o.score))
                .collect();
            let expected = oracle_pick(&hist, &grid, &config);
            assert_eq!(got.len(), expected.len());
            for ((gn, gs), (en, es)) in got.iter().zip(&expected) {
                assert_eq!(gn, en);
                assert!((gs - es).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn observations_always_land_on_grid_nodes_within_cap() {
        let grid = SphericalGrid::lebedev974();
        let config = LocalizerConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(38);
        for _ in 0..20 {
            let mut hist = SphericalHistogram::new(grid.len(), 1);
            let entries: Vec<(u32, f64)> = (0..rng.random_range(1..100))
                .map(|_| {
                    (
                        rng.random_range(0..grid.len() as u32),
                        rng.random_range(0.0..1.0),
                    )
                })
                .collect();
            hist.push_frame(entries);
            let obs = pick_observations(&hist, &grid, &config);
            assert!(obs.len() <= config.max_observations);
            for o in &obs {
                assert!((0.0..=1.0).contains(&o.score));
                assert_eq!(o.direction, grid.node(o.node as usize).direction);
            }
        }
    }
}
