//! `ambitrack` — track sound sources in first-order ambisonic recordings.
//!
//! Subcommands: `track` runs the full localization/tracking chain over a
//! WAV file and emits one JSON object per hop; `simulate` renders a
//! synthetic scene (WAV plus ground-truth CSV) from a JSON description;
//! `eval` scores a track file against ground truth; `dump-histogram`
//! exports the per-hop direction histogram for inspection.
//!
//! Exit codes: 0 success, 1 usage, 2 I/O or file-format problems,
//! 3 invalid configuration.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use ambitrack::audio::EncodingMatrix;
use ambitrack::config::PipelineConfig;
use ambitrack::error::{Error, Result};
use ambitrack::eval;
use ambitrack::pipeline::{run_track, Pipeline, PipelineFrame};
use ambitrack::sim::{synthesize, write_scene, GroundTruth, SceneSpec};
use ambitrack::wav::WavReader;

#[derive(Parser)]
#[command(
    name = "ambitrack",
    version,
    about = "Sound-source localization and tracking for first-order ambisonic audio"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Track sources in a B-format WAV file; writes one JSON object per hop.
    Track(TrackArgs),
    /// Render a synthetic scene description to WAV + ground-truth CSV.
    Simulate(SimulateArgs),
    /// Score a track file against ground truth.
    Eval(EvalArgs),
    /// Export the localizer's direction histogram per hop as CSV.
    DumpHistogram(DumpHistogramArgs),
}

/// Options shared by every command that runs the analysis chain.
#[derive(Args)]
struct PipelineArgs {
    /// Configuration file (key = value lines); defaults used when omitted.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Override the RNG seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Override the maximum number of simultaneous sources.
    #[arg(long)]
    max_sources: Option<usize>,
    /// Override the maximum observations consumed per hop.
    #[arg(long)]
    max_observations: Option<usize>,
    /// Treat 4-channel input as AmbiX channel order (W, Y, Z, X).
    #[arg(long)]
    ambix: bool,
}

impl PipelineArgs {
    fn resolve(&self) -> Result<PipelineConfig> {
        let mut config = match &self.config {
            Some(path) => {
                let text =
                    std::fs::read_to_string(path).map_err(|e| Error::io(path.clone(), e))?;
                PipelineConfig::parse(&text)?
            }
            None => PipelineConfig::default(),
        };
        if let Some(seed) = self.seed {
            config.seed = seed;
        }
        if let Some(max_sources) = self.max_sources {
            config.tracker.max_sources = max_sources;
        }
        if let Some(max_observations) = self.max_observations {
            config.localizer.max_observations = max_observations;
        }
        if self.ambix {
            config.frontend.channel_order = ambitrack::frontend::ChannelOrder::Ambix;
        }
        config.validate()?;
        Ok(config)
    }
}

#[derive(Args)]
struct TrackArgs {
    /// Input WAV: 4-channel B-format, or raw multichannel with an encoding
    /// matrix configured.
    input: PathBuf,
    #[command(flatten)]
    pipeline: PipelineArgs,
    /// Write the track stream here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Additionally write the per-hop direction histogram as CSV.
    #[arg(long)]
    debug_histogram: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    /// Scene description (JSON).
    scene: PathBuf,
    /// Output WAV path; the ground-truth CSV lands next to it with a .csv
    /// extension.
    #[arg(long)]
    output: PathBuf,
    #[command(flatten)]
    pipeline: PipelineArgs,
}

#[derive(Args)]
struct EvalArgs {
    /// Track stream produced by `track` (one JSON object per line).
    tracks: PathBuf,
    /// Ground-truth CSV produced by `simulate`.
    truth: PathBuf,
    #[command(flatten)]
    pipeline: PipelineArgs,
    /// Write the report as JSON here (the table always goes to stdout).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DumpHistogramArgs {
    /// Input WAV, as for `track`.
    input: PathBuf,
    #[command(flatten)]
    pipeline: PipelineArgs,
    /// Write the histogram CSV here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    if let Err(err) = run(cli.command) {
        eprintln!("error: {err}");
        let code = match err {
            Error::Io { .. } | Error::Wav { .. } => 2,
            Error::Config(_) => 3,
        };
        std::process::exit(code);
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Track(args) => track(args),
        Command::Simulate(args) => simulate(args),
        Command::Eval(args) => eval_tracks(args),
        Command::DumpHistogram(args) => dump_histogram(args),
    }
}

/// Either a file or stdout, with the path kept for error reports.
struct Sink {
    writer: Box<dyn Write>,
    path: PathBuf,
}

impl Sink {
    fn open(path: Option<&Path>) -> Result<Self> {
        match path {
            Some(path) => Ok(Sink {
                writer: Box::new(std::io::BufWriter::new(
                    std::fs::File::create(path).map_err(|e| Error::io(path, e))?,
                )),
                path: path.to_path_buf(),
            }),
            None => Ok(Sink {
                writer: Box::new(std::io::BufWriter::new(std::io::stdout())),
                path: PathBuf::from("<stdout>"),
            }),
        }
    }

    fn write_line(&mut self, line: &str) -> Result<()> {
        self.writer
            .write_all(line.as_bytes())
            .and_then(|()| self.writer.write_all(b"\n"))
            .map_err(|e| Error::io(self.path.clone(), e))
    }

    fn finish(mut self) -> Result<()> {
        self.writer.flush().map_err(|e| Error::io(self.path.clone(), e))
    }
}

fn load_matrix(config: &PipelineConfig) -> Result<Option<EncodingMatrix>> {
    config
        .encoding_matrix
        .as_deref()
        .map(EncodingMatrix::from_file)
        .transpose()
}

const HISTOGRAM_HEADER: &str = "time,node,azimuth_deg,elevation_deg,weight";

fn write_histogram_rows(
    sink: &mut Sink,
    frame: &PipelineFrame,
    pipeline: &Pipeline,
) -> Result<()> {
    let grid = pipeline.grid();
    for (index, &weight) in pipeline.histogram().aggregate().iter().enumerate() {
        if weight > 0.0 {
            let node = grid.node(index);
            sink.write_line(&format!(
                "{},{},{},{},{}",
                frame.track.t,
                index,
                node.azimuth.to_degrees(),
                node.elevation.to_degrees(),
                weight
            ))?;
        }
    }
    Ok(())
}

fn track(args: TrackArgs) -> Result<()> {
    let config = args.pipeline.resolve()?;
    let matrix = load_matrix(&config)?;
    let mut reader = WavReader::open(&args.input)?;
    let mut output = Sink::open(args.output.as_deref())?;
    let mut histogram = match &args.debug_histogram {
        Some(path) => {
            let mut sink = Sink::open(Some(path))?;
            sink.write_line(HISTOGRAM_HEADER)?;
            Some(sink)
        }
        None => None,
    };

    run_track(&mut reader, &config, matrix.as_ref(), |frame, pipeline| {
        let line = serde_json::to_string(&frame.track).expect("track frames serialize");
        output.write_line(&line)?;
        if let Some(sink) = histogram.as_mut() {
            write_histogram_rows(sink, frame, pipeline)?;
        }
        Ok(())
    })?;

    output.finish()?;
    if let Some(sink) = histogram {
        sink.finish()?;
    }
    Ok(())
}

fn simulate(args: SimulateArgs) -> Result<()> {
    let config = args.pipeline.resolve()?;
    let text =
        std::fs::read_to_string(&args.scene).map_err(|e| Error::io(args.scene.clone(), e))?;
    let spec = SceneSpec::from_json(&text)?;
    let (buffer, truth) = synthesize(&spec, &config.frontend, config.seed)?;
    let csv_path = args.output.with_extension("csv");
    write_scene(&args.output, &csv_path, &buffer, &truth)
}

fn eval_tracks(args: EvalArgs) -> Result<()> {
    let config = args.pipeline.resolve()?;
    let tracks_text =
        std::fs::read_to_string(&args.tracks).map_err(|e| Error::io(args.tracks.clone(), e))?;
    let frames = eval::read_track_jsonl(&tracks_text)?;
    let truth_text =
        std::fs::read_to_string(&args.truth).map_err(|e| Error::io(args.truth.clone(), e))?;
    let truth = GroundTruth::from_csv(&truth_text)?;

    // The hop comes from the track stream itself when possible; a stream
    // with fewer than two frames falls back to the configured frame grid.
    let hop = eval::infer_hop(&frames)
        .unwrap_or_else(|| config.frontend.frame_len * (1.0 - config.frontend.overlap));
    let recording = eval::evaluate_recording(&frames, &truth, hop)?;
    let report = eval::aggregate(vec![recording]);

    print!("{}", report.render_table());
    if let Some(path) = &args.output {
        let json = serde_json::to_string_pretty(&report).expect("reports serialize");
        let mut sink = Sink::open(Some(path))?;
        sink.write_line(&json)?;
        sink.finish()?;
    }
    Ok(())
}

fn dump_histogram(args: DumpHistogramArgs) -> Result<()> {
    let config = args.pipeline.resolve()?;
    let matrix = load_matrix(&config)?;
    let mut reader = WavReader::open(&args.input)?;
    let mut sink = Sink::open(args.output.as_deref())?;
    sink.write_line(HISTOGRAM_HEADER)?;
    run_track(&mut reader, &config, matrix.as_ref(), |frame, pipeline| {
        write_histogram_rows(&mut sink, frame, pipeline)
    })?;
    sink.finish()
}
