//! Minimal streaming WAV (RIFF) reader and writer.
//!
//! Reading accepts multichannel 16-bit PCM, 24-bit PCM, and 32-bit IEEE
//! float data, including the WAVE_FORMAT_EXTENSIBLE wrapper around either.
//! Samples are converted to `f64` on the fly. Writing always produces
//! 32-bit float data (the format used for synthesized scenes).
//!
//! The reader is deliberately incremental — `read_block` hands out a bounded
//! number of sample frames per call — so the tracking pipeline can process
//! arbitrarily long recordings with constant memory.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use crate::audio::AudioBuffer;
use crate::error::{Error, Result};

/// Sample encodings the reader understands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleFormat {
    Pcm16,
    Pcm24,
    Float32,
}

impl SampleFormat {
    fn bytes_per_sample(self) -> usize {
        match self {
            SampleFormat::Pcm16 => 2,
            SampleFormat::Pcm24 => 3,
            SampleFormat::Float32 => 4,
        }
    }
}

/// Parsed format description of an open WAV file.
#[derive(Debug, Clone, Copy)]
pub struct WavSpec {
    pub sample_rate: u32,
    pub channels: u16,
    pub format: SampleFormat,
}

const WAVE_FORMAT_PCM: u16 = 0x0001;
const WAVE_FORMAT_IEEE_FLOAT: u16 = 0x0003;
const WAVE_FORMAT_EXTENSIBLE: u16 = 0xFFFE;

/// Incremental WAV reader positioned at the start of sample data.
pub struct WavReader<R: Read> {
    reader: R,
    path: PathBuf,
    spec: WavSpec,
    /// Sample frames (one sample per channel) left in the data chunk.
    frames_remaining: u64,
}

impl WavReader<BufReader<File>> {
    pub fn open(path: &Path) -> Result<Self> {
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        WavReader::new(BufReader::new(file), path)
    }
}

impl<R: Read> WavReader<R> {
    /// Parses the RIFF header and chunk list up to the `data` chunk.
    /// Non-audio chunks (`fact`, `LIST`, ...) are skipped.
    pub fn new(mut reader: R, path: &Path) -> Result<Self> {
        let bad = |reason: &str| Error::wav(path, reason);

        let mut riff = [0u8; 12];
        read_exact(&mut reader, &mut riff, path)?;
        if &riff[0..4] != b"RIFF" || &riff[8..12] != b"WAVE" {
            return Err(bad("not a RIFF/WAVE file"));
        }

        let mut spec: Option<WavSpec> = None;
        loop {
            let mut header = [0u8; 8];
            read_exact(&mut reader, &mut header, path)?;
            let id = [header[0], header[1], header[2], header[3]];
            let size = u32::from_le_bytes([header[4], header[5], header[6], header[7]]) as u64;

            match &id {
                b"fmt " => {
                    if size < 16 {
                        return Err(bad("fmt chunk too short"));
                    }
                    let mut body = vec![0u8; size as usize];
                    read_exact(&mut reader, &mut body, path)?;
                    if size % 2 == 1 {
                        skip(&mut reader, 1, path)?;
                    }
                    spec = Some(parse_fmt(&body, path)?);
                }
                b"data" => {
                    let spec = spec.ok_or_else(|| bad("data chunk before fmt chunk"))?;
                    let frame_bytes =
                        spec.format.bytes_per_sample() as u64 * spec.channels as u64;
                    return Ok(WavReader {
                        reader,
                        path: path.to_path_buf(),
                        spec,
                        frames_remaining: size / frame_bytes,
                    });
                }
                _ => {
                    // Chunks are word-aligned; odd sizes carry a pad byte.
                    skip(&mut reader, size + (size % 2), path)?;
                }
            }
        }
    }

    pub fn spec(&self) -> WavSpec {
        self.spec
    }

    /// Sample frames still unread.
    pub fn frames_remaining(&self) -> u64 {
        self.frames_remaining
    }

    /// Reads up to `max_frames` sample frames, returned channel-major.
    /// All channels come back the same length; an empty first channel
    /// signals end of data.
    pub fn read_block(&mut self, max_frames: usize) -> Result<Vec<Vec<f64>>> {
        let channels = self.spec.channels as usize;
        let take = (self.frames_remaining.min(max_frames as u64)) as usize;
        let mut out = vec![Vec::with_capacity(take); channels];
        if take == 0 {
            return Ok(out);
        }

        let bytes_per_sample = self.spec.format.bytes_per_sample();
        let mut raw = vec![0u8; take * channels * bytes_per_sample];
        read_exact(&mut self.reader, &mut raw, &self.path)?;
        self.frames_remaining -= take as u64;

        let mut cursor = 0;
        for _ in 0..take {
            for channel in out.iter_mut() {
                let bytes = &raw[cursor..cursor + bytes_per_sample];
                cursor += bytes_per_sample;
                channel.push(decode_sample(self.spec.format, bytes));
            }
        }
        Ok(out)
    }

    /// Reads the remaining data into a single buffer.
    pub fn read_all(mut self) -> Result<AudioBuffer> {
        let channels = self.spec.channels as usize;
        let mut collected = vec![Vec::new(); channels];
        loop {
            let block = self.read_block(1 << 16)?;
            if block[0].is_empty() {
                break;
            }
            for (sink, part) in collected.iter_mut().zip(block) {
                sink.extend_from_slice(&part);
            }
        }
        AudioBuffer::new(self.spec.sample_rate, collected)
    }
}

fn parse_fmt(body: &[u8], path: &Path) -> Result<WavSpec> {
    let tag = u16::from_le_bytes([body[0], body[1]]);
    let channels = u16::from_le_bytes([body[2], body[3]]);
    let sample_rate = u32::from_le_bytes([body[4], body[5], body[6], body[7]]);
    let bits = u16::from_le_bytes([body[14], body[15]]);

    let effective_tag = if tag == WAVE_FORMAT_EXTENSIBLE {
        // The extensible layout stores the real format as the first two
        // bytes of the 16-byte SubFormat GUID at offset 24.
        if body.len() < 40 {
            return Err(Error::wav(path, "extensible fmt chunk too short"));
        }
        u16::from_le_bytes([body[24], body[25]])
    } else {
        tag
    };

    let format = match (effective_tag, bits) {
        (WAVE_FORMAT_PCM, 16) => SampleFormat::Pcm16,
        (WAVE_FORMAT_PCM, 24) => SampleFormat::Pcm24,
        (WAVE_FORMAT_IEEE_FLOAT, 32) => SampleFormat::Float32,
        _ => {
            return Err(Error::wav(
                path,
                format!("unsupported format: tag 0x{effective_tag:04x}, {bits} bits"),
            ))
        }
    };
    if channels == 0 {
        return Err(Error::wav(path, "zero channels"));
    }
    if sample_rate == 0 {
        return Err(Error::wav(path, "zero sample rate"));
    }
    Ok(WavSpec {
        sample_rate,
        channels,
        format,
    })
}

fn decode_sample(format: SampleFormat, bytes: &[u8]) -> f64 {
    match format {
        SampleFormat::Pcm16 => i16::from_le_bytes([bytes[0], bytes[1]]) as f64 / 32768.0,
        SampleFormat::Pcm24 => {
            // Sign-extend the 24-bit little-endian value into an i32.
            let raw = ((bytes[2] as i32) << 24 | (bytes[1] as i32) << 16 | (bytes[0] as i32) << 8)
                >> 8;
            raw as f64 / 8_388_608.0
        }
        SampleFormat::Float32 => {
            f32::from_le_bytes([bytes[0], bytes[1], bytes[2], bytes[3]]) as f64
        }
    }
}

fn read_exact<R: Read>(reader: &mut R, buf: &mut [u8], path: &Path) -> Result<()> {
    reader.read_exact(buf).map_err(|e| Error::io(path, e))
}

fn skip<R: Read>(reader: &mut R, bytes: u64, path: &Path) -> Result<()> {
    let copied = std::io::copy(&mut reader.take(bytes), &mut std::io::sink())
        .map_err(|e| Error::io(path, e))?;
    if copied != bytes {
        return Err(Error::wav(path, "unexpected end of file inside chunk"));
    }
    Ok(())
}

/// Writes `buffer` as a 32-bit float WAV file.
pub fn write_wav_float32(path: &Path, buffer: &AudioBuffer) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    let channels = buffer.channel_count() as u32;
    let sample_rate = buffer.sample_rate();
    let data_bytes = (buffer.len() as u64 * channels as u64 * 4) as u32;
    let block_align = (channels * 4) as u16;

    // RIFF size = 4 ("WAVE") + (8+16) fmt + (8+4) fact + 8 + data.
    let riff_size = 4 + 24 + 12 + 8 + data_bytes;
    let mut header = Vec::with_capacity(60);
    header.extend_from_slice(b"RIFF");
    header.extend_from_slice(&riff_size.to_le_bytes());
    header.extend_from_slice(b"WAVE");
    header.extend_from_slice(b"fmt ");
    header.extend_from_slice(&16u32.to_le_bytes());
    header.extend_from_slice(&WAVE_FORMAT_IEEE_FLOAT.to_le_bytes());
    header.extend_from_slice(&(channels as u16).to_le_bytes());
    header.extend_from_slice(&sample_rate.to_le_bytes());
    header.extend_from_slice(&(sample_rate * channels * 4).to_le_bytes());
    header.extend_from_slice(&block_align.to_le_bytes());
    header.extend_from_slice(&32u16.to_le_bytes());
    // Non-PCM formats carry a fact chunk with the per-channel frame count.
    header.extend_from_slice(b"fact");
    header.extend_from_slice(&4u32.to_le_bytes());
    header.extend_from_slice(&(buffer.len() as u32).to_le_bytes());
    header.extend_from_slice(b"data");
    header.extend_from_slice(&data_bytes.to_le_bytes());
    w.write_all(&header).map_err(|e| Error::io(path, e))?;

    let mut row = Vec::with_capacity(channels as usize * 4);
    for i in 0..buffer.len() {
        row.clear();
        for channel in buffer.channels() {
            row.extend_from_slice(&(channel[i] as f32).to_le_bytes());
        }
        w.write_all(&row).map_err(|e| Error::io(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}
