use std::path::PathBuf;
use std::process::ExitCode;

use bwtforge_cli::{Command, Engine, Format, JobSpec, Kind};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bwtforge", version, about = "BWT, bijective BWT and cyclic BWT in three engines")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Common {
    /// Transform kind.
    #[arg(long, value_enum, default_value = "bbwt")]
    kind: Kind,
    #[arg(long, value_enum, default_value = "inplace")]
    engine: Engine,
    /// Encoding of transform files.
    #[arg(long, value_enum, default_value = "raw")]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Text to transform.
    Transform {
        #[command(flatten)]
        common: Common,
        input: PathBuf,
        output: PathBuf,
    },
    /// Transform back to text. A bwtc input needs `<input>.start`.
    Invert {
        #[command(flatten)]
        common: Common,
        /// Invert a bwtc from row 1 when no `.start` sidecar exists.
        #[arg(long)]
        assume_lyndon_conjugate: bool,
        input: PathBuf,
        output: PathBuf,
    },
    /// Between bwt and bbwt; `--kind` is the source.
    Convert {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        to: Kind,
        input: PathBuf,
        output: PathBuf,
    },
    /// Length, Lyndon factors and run counts of a text.
    Stats {
        #[arg(long, value_enum, default_value = "rle")]
        engine: Engine,
        input: PathBuf,
    },
    /// Checks an engine against the oracle on files or generated texts.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Generate this many texts (seeded by BWTFORGE_SEED).
        #[arg(long, conflicts_with = "inputs")]
        random: Option<usize>,
        #[arg(long, default_value_t = 200)]
        max_len: usize,
        inputs: Vec<PathBuf>,
    },
    /// Median transform times over a size ladder.
    Bench {
        #[arg(long, value_enum, default_value = "bbwt")]
        kind: Kind,
        /// Engines to time; all by default.
        #[arg(long, value_enum, value_delimiter = ',')]
        engines: Vec<Engine>,
        #[arg(long, default_value_t = 16)]
        max_log: u32,
        #[arg(long, default_value_t = 5)]
        reps: usize,
    },
}

fn job(command: Command, c: Common) -> JobSpec {
    JobSpec::new(command, c.kind, c.engine).format(c.format)
}

fn main() -> ExitCode {
    let spec = match Cli::parse().command {
        Cmd::Transform { common, input, output } => job(Command::Transform, common).input(input).output(output),
        Cmd::Invert { common, assume_lyndon_conjugate, input, output } => {
            let mut spec = job(Command::Invert, common).input(input).output(output);
            spec.assume_lyndon_conjugate = assume_lyndon_conjugate;
            spec
        }
        Cmd::Convert { common, to, input, output } => {
            let mut spec = job(Command::Convert, common).input(input).output(output);
            spec.target = Some(to);
            spec
        }
        Cmd::Stats { engine, input } => JobSpec::new(Command::Stats, Kind::Bbwt, engine).input(input),
        Cmd::Verify { common, random, max_len, inputs } => {
            let mut spec = job(Command::Verify, common);
            spec.inputs = inputs;
            spec.random = random;
            spec.max_len = max_len;
            spec
        }
        Cmd::Bench { kind, engines, max_log, reps } => {
            let mut spec = JobSpec::new(Command::Bench, kind, Engine::Inplace);
            spec.engines = engines;
            spec.max_log = max_log;
            spec.reps = reps;
            spec
        }
    };
    let code = bwtforge_cli::run(&spec, &mut std::io::stdout().lock());
    ExitCode::from(code as u8)
}
