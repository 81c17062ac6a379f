//! Track scoring: time-averaged angular errors over truth/estimate pairs
//! selected by an optimal assignment.
//!
//! For every (ground-truth trajectory, estimated track) pair the mean
//! azimuth error over their temporally overlapping hops fills a cost
//! matrix; the Hungarian algorithm picks the one-to-one assignment with
//! minimum total cost, and the report averages the errors of the assigned
//! pairs. Pairs that never overlap in time carry a large sentinel cost and
//! are dropped from the report even when the assignment touches them.
//!
//! The time-averaged metric favors short-lived tracks (a track visible for
//! one hop near the truth scores as well as one that held on for a
//! minute), so each reported pair also carries its overlap duration to
//! keep that bias visible.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sim::GroundTruth;
use crate::tracker::TrackFrame;

/// Cost assigned to pairs with no temporal overlap; far above any real
/// angular error (max 180 degrees) so the assignment avoids such pairs
/// whenever a real pairing exists.
pub const NO_OVERLAP_COST: f64 = 1e6;

/// Azimuth distance on the circle, in degrees: `min(|d|, 2pi - |d|)` for
/// the wrapped difference. Accepts angles in radians, any range.
pub fn azimuth_error(estimate: f64, reference: f64) -> f64 {
    let tau = std::f64::consts::TAU;
    let d = (estimate - reference).rem_euclid(tau);
    d.min(tau - d).to_degrees()
}

/// Elevation distance in degrees; plain absolute difference (elevations
/// live on [-pi/2, pi/2], no wrap).
pub fn elevation_error(estimate: f64, reference: f64) -> f64 {
    (estimate - reference).abs().to_degrees()
}

/// Pairwise mean errors between ground-truth trajectories (rows) and
/// estimated tracks (columns).
#[derive(Debug, Clone)]
pub struct CostMatrix {
    rows: usize,
    cols: usize,
    /// Row-major mean azimuth error in degrees; `NO_OVERLAP_COST` where the
    /// pair shares no hop.
    azimuth: Vec<f64>,
    /// Mean elevation error per pair, same layout (0 where no overlap).
    elevation: Vec<f64>,
    /// Number of hops both members cover.
    overlap: Vec<usize>,
    /// Ground-truth labels, one per row.
    pub row_labels: Vec<usize>,
    /// Track ids, one per column.
    pub col_ids: Vec<u64>,
}

impl CostMatrix {
    /// Builds a matrix from dense azimuth costs alone (rows of equal
    /// length); overlaps are set to 1 so no entry is treated as a sentinel.
    pub fn from_dense(costs: Vec<Vec<f64>>) -> Self {
        let rows = costs.len();
        let cols = costs.first().map_or(0, Vec::len);
        assert!(costs.iter().all(|r| r.len() == cols), "ragged cost matrix");
        CostMatrix {
            rows,
            cols,
            azimuth: costs.into_iter().flatten().collect(),
            elevation: vec![0.0; rows * cols],
            overlap: vec![1; rows * cols],
            row_labels: (0..rows).collect(),
            col_ids: (0..cols as u64).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Mean azimuth error of the pair in degrees (sentinel when disjoint).
    pub fn cost(&self, row: usize, col: usize) -> f64 {
        self.azimuth[row * self.cols + col]
    }

    /// Mean elevation error of the pair in degrees.
    pub fn elevation(&self, row: usize, col: usize) -> f64 {
        self.elevation[row * self.cols + col]
    }

    /// Number of hops where both the truth trajectory and the track exist.
    pub fn overlap(&self, row: usize, col: usize) -> usize {
        self.overlap[row * self.cols + col]
    }
}

/// Minimum-total-cost one-to-one assignment on a rectangular matrix,
/// returned as (row, col) pairs sorted by row; `min(rows, cols)` pairs.
///
/// Shortest-augmenting-path formulation with row/column potentials,
/// O(n^3); the rectangle is padded square with sentinel costs, and pairs
/// involving padding are dropped from the result.
pub fn hungarian(cost: &CostMatrix) -> Vec<(usize, usize)> {
    min_cost_assignment(cost.rows, cost.cols, |r, c| cost.cost(r, c))
}

fn min_cost_assignment(
    rows: usize,
    cols: usize,
    cost_at: impl Fn(usize, usize) -> f64,
) -> Vec<(usize, usize)> {
    if rows == 0 || cols == 0 {
        return Vec::new();
    }
    let n = rows.max(cols);
    let padded = |i: usize, j: usize| -> f64 {
        if i < rows && j < cols {
            cost_at(i, j)
        } else {
            NO_OVERLAP_COST
        }
    };

    // 1-indexed potentials; p[j] is the row matched to column j.
    let mut u = vec![0.0f64; n + 1];
    let mut v = vec![0.0f64; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let reduced = padded(i0 - 1, j - 1) - u[i0] - v[j];
                if reduced < minv[j] {
                    minv[j] = reduced;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        // Walk the augmenting path backwards, flipping matches.
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut pairs = Vec::new();
    for j in 1..=n {
        let i = p[j];
        if i >= 1 && i - 1 < rows && j - 1 < cols {
            pairs.push((i - 1, j - 1));
        }
    }
    pairs.sort_unstable();
    pairs
}

/// One assigned (truth, track) pair with its time-averaged errors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairReport {
    pub truth_label: usize,
    pub track_id: u64,
    pub mean_azimuth_error_deg: f64,
    pub mean_elevation_error_deg: f64,
    /// Hops both members cover; the averaging window of this pair.
    pub overlap_hops: usize,
    pub overlap_seconds: f64,
}

/// Scores for one recording.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordingReport {
    pub truth_trajectories: usize,
    pub estimated_tracks: usize,
    pub pairs: Vec<PairReport>,
    /// Unweighted mean over assigned pairs; absent when nothing was
    /// assigned (no tracks, or no temporal overlap).
    pub mean_azimuth_error_deg: Option<f64>,
    pub mean_elevation_error_deg: Option<f64>,
}

/// Aggregate over a set of recordings (a task).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub recordings: Vec<RecordingReport>,
    /// Mean / population standard deviation over the recordings that
    /// produced errors; absent when none did.
    pub mean_azimuth_error_deg: Option<f64>,
    pub std_azimuth_error_deg: Option<f64>,
    pub mean_elevation_error_deg: Option<f64>,
    pub std_elevation_error_deg: Option<f64>,
}

/// Parses one `TrackFrame` JSON object per line; blank lines are skipped.
pub fn read_track_jsonl(text: &str) -> Result<Vec<TrackFrame>> {
    let mut frames = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let frame: TrackFrame = serde_json::from_str(line)
            .map_err(|e| Error::config(format!("track jsonl line {}: {e}", lineno + 1)))?;
        frames.push(frame);
    }
    Ok(frames)
}

/// Infers the hop duration from the spacing of consecutive frame times;
/// `None` with fewer than two frames.
pub fn infer_hop(frames: &[TrackFrame]) -> Option<f64> {
    frames
        .windows(2)
        .map(|w| w[1].t - w[0].t)
        .find(|&d| d > 0.0)
}

/// Aligns truth records to the frame grid, builds the cost matrix, and
/// returns it; fails when a truth time misses every frame center by more
/// than half a hop.
pub fn build_cost_matrix(
    frames: &[TrackFrame],
    truth: &GroundTruth,
    hop_seconds: f64,
) -> Result<CostMatrix> {
    if !(hop_seconds > 0.0) {
        return Err(Error::config("hop must be positive"));
    }
    let times: Vec<f64> = frames.iter().map(|f| f.t).collect();
    debug_assert!(times.windows(2).all(|w| w[0] < w[1]), "frames out of order");

    // truth label -> per-frame angles (radians)
    let mut truth_series: BTreeMap<usize, BTreeMap<usize, (f64, f64)>> = BTreeMap::new();
    for record in &truth.records {
        let frame = nearest_frame(&times, record.time);
        match frame {
            Some(idx) if (times[idx] - record.time).abs() <= hop_seconds / 2.0 + 1e-9 => {
                truth_series
                    .entry(record.source)
                    .or_default()
                    .insert(idx, (record.azimuth, record.elevation));
            }
            _ => {
                return Err(Error::config(format!(
                    "ground-truth record at {} s does not align with the track \
                     frame grid (hop {} s)",
                    record.time, hop_seconds
                )));
            }
        }
    }

    // track id -> per-frame angles (radians)
    let mut track_series: BTreeMap<u64, BTreeMap<usize, (f64, f64)>> = BTreeMap::new();
    for (idx, frame) in frames.iter().enumerate() {
        for estimate in &frame.sources {
            track_series.entry(estimate.id).or_default().insert(
                idx,
                (
                    estimate.azimuth_deg.to_radians(),
                    estimate.elevation_deg.to_radians(),
                ),
            );
        }
    }

    let row_labels: Vec<usize> = truth_series.keys().copied().collect();
    let col_ids: Vec<u64> = track_series.keys().copied().collect();
    let rows = row_labels.len();
    let cols = col_ids.len();
    let mut azimuth = vec![NO_OVERLAP_COST; rows * cols];
    let mut elevation = vec![0.0; rows * cols];
    let mut overlap = vec![0usize; rows * cols];

    for (r, label) in row_labels.iter().enumerate() {
        for (c, id) in col_ids.iter().enumerate() {
            let mut az_sum = 0.0;
            let mut el_sum = 0.0;
            let mut hops = 0usize;
            for (frame, &(truth_az, truth_el)) in &truth_series[label] {
                if let Some(&(est_az, est_el)) = track_series[id].get(frame) {
                    az_sum += azimuth_error(est_az, truth_az);
                    el_sum += elevation_error(est_el, truth_el);
                    hops += 1;
                }
            }
            let cell = r * cols + c;
            if hops > 0 {
                azimuth[cell] = az_sum / hops as f64;
                elevation[cell] = el_sum / hops as f64;
                overlap[cell] = hops;
            }
        }
    }

    Ok(CostMatrix {
        rows,
        cols,
        azimuth,
        elevation,
        overlap,
        row_labels,
        col_ids,
    })
}

fn nearest_frame(times: &[f64], t: f64) -> Option<usize> {
    if times.is_empty() {
        return None;
    }
    let split = times.partition_point(|&ft| ft < t);
    let mut best = None;
    for idx in [split.wrapping_sub(1), split] {
        if idx < times.len() {
            let d = (times[idx] - t).abs();
            if best.map_or(true, |(_, bd)| d < bd) {
                best = Some((idx, d));
            }
        }
    }
    best.map(|(idx, _)| idx)
}

/// Scores one recording: cost matrix, optimal assignment, unweighted mean
/// of the assigned pairs' errors. Zero-overlap pairs never enter the
/// report.
pub fn evaluate_recording(
    frames: &[TrackFrame],
    truth: &GroundTruth,
    hop_seconds: f64,
) -> Result<RecordingReport> {
    if frames.is_empty() {
        let labels: std::collections::BTreeSet<usize> =
            truth.records.iter().map(|r| r.source).collect();
        return Ok(RecordingReport {
            truth_trajectories: labels.len(),
            estimated_tracks: 0,
            pairs: Vec::new(),
            mean_azimuth_error_deg: None,
            mean_elevation_error_deg: None,
        });
    }
    let matrix = build_cost_matrix(frames, truth, hop_seconds)?;
    let assignment = hungarian(&matrix);
    let mut pairs = Vec::new();
    for (r, c) in assignment {
        let hops = matrix.overlap(r, c);
        if hops == 0 {
            continue;
        }
        pairs.push(PairReport {
            truth_label: matrix.row_labels[r],
            track_id: matrix.col_ids[c],
            mean_azimuth_error_deg: matrix.cost(r, c),
            mean_elevation_error_deg: matrix.elevation(r, c),
            overlap_hops: hops,
            overlap_seconds: hops as f64 * hop_seconds,
        });
    }
    let (mean_az, mean_el) = if pairs.is_empty() {
        (None, None)
    } else {
        let n = pairs.len() as f64;
        (
            Some(pairs.iter().map(|p| p.mean_azimuth_error_deg).sum::<f64>() / n),
            Some(pairs.iter().map(|p| p.mean_elevation_error_deg).sum::<f64>() / n),
        )
    };
    Ok(RecordingReport {
        truth_trajectories: matrix.rows(),
        estimated_tracks: matrix.cols(),
        pairs,
        mean_azimuth_error_deg: mean_az,
        mean_elevation_error_deg: mean_el,
    })
}

/// Combines per-recording scores into a task report (mean and population
/// standard deviation over recordings that produced errors).
pub fn aggregate(recordings: Vec<RecordingReport>) -> EvalReport {
    let stats = |values: Vec<f64>| -> (Option<f64>, Option<f64>) {
        if values.is_empty() {
            return (None, None);
        }
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
        (Some(mean), Some(var.sqrt()))
    };
    let (mean_az, std_az) = stats(
        recordings
            .iter()
            .filter_map(|r| r.mean_azimuth_error_deg)
            .collect(),
    );
    let (mean_el, std_el) = stats(
        recordings
            .iter()
            .filter_map(|r| r.mean_elevation_error_deg)
            .collect(),
    );
    EvalReport {
        recordings,
        mean_azimuth_error_deg: mean_az,
        std_azimuth_error_deg: std_az,
        mean_elevation_error_deg: mean_el,
        std_elevation_error_deg: std_el,
    }
}

impl EvalReport {
    /// Plain-text table for terminal output.
    pub fn render_table(&self) -> String {
        let fmt = |v: Option<f64>| match v {
            Some(x) => format!("{x:10.3}"),
            None => format!("{:>10}", "-"),
        };
        let mut out = String::new();
        out.push_str(&format!(
            "{:>4}  {:>6} {:>6}  {:>10} {:>10}  pairs\n",
            "rec", "truth", "tracks", "az (deg)", "el (deg)"
        ));
        for (i, rec) in self.recordings.iter().enumerate() {
            let pairs: Vec<String> = rec
                .pairs
                .iter()
                .map(|p| {
                    format!(
                        "{}->{} ({:.2}s)",
                        p.truth_label, p.track_id, p.overlap_seconds
                    )
                })
                .collect();
            out.push_str(&format!(
                "{:>4}  {:>6} {:>6}  {} {}  {}\n",
                i,
                rec.truth_trajectories,
                rec.estimated_tracks,
                fmt(rec.mean_azimuth_error_deg),
                fmt(rec.mean_elevation_error_deg),
                pairs.join(", ")
            ));
        }
        out.push_str(&format!(
            "{:>4}  {:>6} {:>6}  {} {}\n",
            "mean",
            "",
            "",
            fmt(self.mean_azimuth_error_deg),
            fmt(self.mean_elevation_error_deg)
        ));
        out.push_str(&format!(
            "{:>4}  {:>6} {:>6}  {} {}\n",
            "std",
            "",
            "",
            fmt(self.std_azimuth_error_deg),
            fmt(self.std_elevation_error_deg)
        ));
        out
    }
}
