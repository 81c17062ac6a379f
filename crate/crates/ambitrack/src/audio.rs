//! In-memory multichannel audio and static channel-mixing matrices.

use std::path::Path;

use crate::error::{Error, Result};

/// Multichannel audio held as one `f64` sequence per channel.
///
/// Invariants (enforced at construction): at least one channel, all channels
/// the same length, positive sample rate. Sample values are dimensionless
/// amplitudes, nominally in [-1, 1] but not clipped.
#[derive(Debug, Clone, PartialEq)]
pub struct AudioBuffer {
    sample_rate: u32,
    channels: Vec<Vec<f64>>,
}

impl AudioBuffer {
    pub fn new(sample_rate: u32, channels: Vec<Vec<f64>>) -> Result<Self> {
        if sample_rate == 0 {
            return Err(Error::config("sample rate must be positive"));
        }
        if channels.is_empty() {
            return Err(Error::config("audio buffer needs at least one channel"));
        }
        let len = channels[0].len();
        if channels.iter().any(|c| c.len() != len) {
            return Err(Error::config(format!(
                "channel lengths differ: {:?}",
                channels.iter().map(Vec::len).collect::<Vec<_>>()
            )));
        }
        Ok(AudioBuffer {
            sample_rate,
            channels,
        })
    }

    /// Zero-filled buffer of `len` samples per channel.
    pub fn silent(sample_rate: u32, channel_count: usize, len: usize) -> Result<Self> {
        AudioBuffer::new(sample_rate, vec![vec![0.0; len]; channel_count])
    }

    pub fn sample_rate(&self) -> u32 {
        self.sample_rate
    }

    pub fn channel_count(&self) -> usize {
        self.channels.len()
    }

    /// Samples per channel.
    pub fn len(&self) -> usize {
        self.channels[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn channel(&self, index: usize) -> &[f64] {
        &self.channels[index]
    }

    pub fn channels(&self) -> &[Vec<f64>] {
        &self.channels
    }

    pub fn channels_mut(&mut self) -> &mut [Vec<f64>] {
        &mut self.channels
    }

    /// Duration in seconds.
    pub fn duration(&self) -> f64 {
        self.len() as f64 / self.sample_rate as f64
    }
}

/// Static real mixing matrix taking an arbitrary channel count down to the
/// four B-format channels (W, X, Y, Z). Exactly four rows; the column count
/// must match the input buffer at application time.
#[derive(Debug, Clone, PartialEq)]
pub struct EncodingMatrix {
    /// Row-major gains, `rows[output][input]`.
    rows: [Vec<f64>; 4],
}

impl EncodingMatrix {
    pub fn new(rows: [Vec<f64>; 4]) -> Result<Self> {
        let cols = rows[0].len();
        if cols == 0 {
            return Err(Error::config("encoding matrix needs at least one column"));
        }
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::config("encoding matrix rows have unequal lengths"));
        }
        if rows.iter().flatten().any(|g| !g.is_finite()) {
            return Err(Error::config("encoding matrix entries must be finite"));
        }
        Ok(EncodingMatrix { rows })
    }

    /// 4x4 identity, for inputs that are already B-format.
    pub fn identity() -> Self {
        let mut rows = [vec![0.0; 4], vec![0.0; 4], vec![0.0; 4], vec![0.0; 4]];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        EncodingMatrix { rows }
    }

    /// Loads a matrix from a plain-text file: first line `rows cols` (rows
    /// must be 4), then row-major whitespace-separated real gains.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut numbers = text.split_whitespace();
        let bad = |what: &str| Error::config(format!("{}: {}", path.display(), what));

        let rows: usize = numbers
            .next()
            .ok_or_else(|| bad("empty matrix file"))?
            .parse()
            .map_err(|_| bad("row count is not an integer"))?;
        let cols: usize = numbers
            .next()
            .ok_or_else(|| bad("missing column count"))?
            .parse()
            .map_err(|_| bad("column count is not an integer"))?;
        if rows != 4 {
            return Err(bad(&format!("expected 4 rows, file declares {rows}")));
        }

        let mut entries = Vec::with_capacity(rows * cols);
        for token in numbers {
            let value: f64 = token
                .parse()
                .map_err(|_| bad(&format!("bad matrix entry {token:?}")))?;
            entries.push(value);
        }
        if entries.len() != rows * cols {
            return Err(bad(&format!(
                "expected {} entries, found {}",
                rows * cols,
                entries.len()
            )));
        }

        let mut iter = entries.chunks_exact(cols).map(<[f64]>::to_vec);
        let rows = [
            iter.next().unwrap(),
            iter.next().unwrap(),
            iter.next().unwrap(),
            iter.next().unwrap(),
        ];
        EncodingMatrix::new(rows)
    }

    pub fn cols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn row(&self, index: usize) -> &[f64] {
        &self.rows[index]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn buffer_rejects_unequal_channel_lengths() {
        let err = AudioBuffer::new(48000, vec![vec![0.0; 8], vec![0.0; 7]]);
        assert!(err.is_err());
    }

    #[test]
    fn buffer_rejects_zero_sample_rate_and_no_channels() {
        assert!(AudioBuffer::new(0, vec![vec![0.0]]).is_err());
        assert!(AudioBuffer::new(48000, vec![]).is_err());
    }

    #[test]
    fn matrix_from_file_round_trips() {
        let dir = std::env::temp_dir().join("ambitrack-matrix-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("m.txt");
        std::fs::write(&path, "4 2\n1 0\n0 1\n0.5 -0.5\n2 3\n").unwrap();
        let m = EncodingMatrix::from_file(&path).unwrap();
        assert_eq!(m.cols(), 2);
        assert_eq!(m.row(2), &[0.5, -0.5]);
        assert_eq!(m.row(3), &[2.0, 3.0]);
    }

    #[test]
    fn matrix_from_file_rejects_wrong_shape() {
        let dir = std::env::temp_dir().join("ambitrack-matrix-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad.txt");
        std::fs::write(&path, "3 1\n1\n2\n3\n").unwrap();
        assert!(EncodingMatrix::from_file(&path).is_err());
        std::fs::write(&path, "4 2\n1 2 3\n").unwrap();
        assert!(EncodingMatrix::from_file(&path).is_err());
    }
}
