//! Command-line front end for the `bwtforge` engines.
//!
//! [`run`] executes a [`JobSpec`] and returns the process exit code:
//! `0` on success, `1` when a check fails or the job itself is invalid, `2`
//! on malformed input or I/O errors.

pub mod corpus;
pub mod engine;
pub mod format;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use bwtforge::{oracle, LyndonFactorization, RunLengthString, TransformKind};

pub use engine::{Encoded, Engine};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}", path = .0.display(), source = .1)]
    Io(PathBuf, std::io::Error),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("invalid job: {0}")]
    Invalid(String),
    #[error("verification failed: {0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Mismatch(_) => 1,
            CliError::Io(..) | CliError::Malformed(_) => 2,
        }
    }
}

fn malformed_at(path: &Path) -> impl Fn(bwtforge::Error) -> CliError + '_ {
    move |e| CliError::Malformed(format!("{}: {e}", path.display()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Transform,
    Invert,
    Convert,
    Stats,
    Verify,
    Bench,
}

/// Transform kinds as spelled on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Bwt,
    Bbwt,
    Bwtc,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::Bwt, Kind::Bbwt, Kind::Bwtc];
}

impl From<Kind> for TransformKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Bwt => TransformKind::Bwt,
            Kind::Bbwt => TransformKind::Bbwt,
            Kind::Bwtc => TransformKind::Bwtc,
        }
    }
}

/// Encoding of transform files. Text files are always raw.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Raw,
    Rle,
}

#[derive(Clone, Debug)]
pub struct JobSpec {
    pub command: Command,
    pub kind: Kind,
    /// Target kind of `convert`.
    pub target: Option<Kind>,
    pub engine: Engine,
    pub inputs: Vec<PathBuf>,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub assume_lyndon_conjugate: bool,
    /// `verify`: check this many generated texts instead of files.
    pub random: Option<usize>,
    /// `verify`: longest generated text.
    pub max_len: usize,
    /// `bench`: largest size is `2^max_log`.
    pub max_log: u32,
    pub reps: usize,
    /// `bench`: engines to time (all when empty).
    pub engines: Vec<Engine>,
    /// Overrides `BWTFORGE_SEED`.
    pub seed: Option<u64>,
}

impl JobSpec {
    pub fn new(command: Command, kind: Kind, engine: Engine) -> Self {
        JobSpec {
            command,
            kind,
            target: None,
            engine,
            inputs: Vec::new(),
            output: None,
            format: Format::Raw,
            assume_lyndon_conjugate: false,
            random: None,
            max_len: 200,
            max_log: 16,
            reps: 5,
            engines: Vec::new(),
            seed: None,
        }
    }

    pub fn input(mut self, path: impl Into<PathBuf>) -> Self {
        self.inputs.push(path.into());
        self
    }

    pub fn output(mut self, path: impl Into<PathBuf>) -> Self {
        self.output = Some(path.into());
        self
    }

    pub fn format(mut self, format: Format) -> Self {
        self.format = format;
        self
    }

    fn single_input(&self) -> Result<&Path, CliError> {
        match self.inputs.as_slice() {
            [one] => Ok(one),
            other => Err(CliError::Invalid(format!("expected one input file, got {}", other.len()))),
        }
    }

    fn output_path(&self) -> Result<&Path, CliError> {
        self.output.as_deref().ok_or_else(|| CliError::Invalid("missing output path".into()))
    }

    fn seed(&self) -> Result<u64, CliError> {
        match self.seed {
            Some(s) => Ok(s),
            None => corpus::seed_from_env().map_err(CliError::Invalid),
        }
    }
}

/// Runs `job`, writing reports to `out` and errors to stderr.
pub fn run(job: &JobSpec, out: &mut dyn Write) -> i32 {
    match execute(job, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("bwtforge: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(job: &JobSpec, out: &mut dyn Write) -> Result<(), CliError> {
    match job.command {
        Command::Transform => transform(job),
        Command::Invert => invert(job),
        Command::Convert => convert(job),
        Command::Stats => stats(job, out),
        Command::Verify => verify(job, out),
        Command::Bench => bench(job, out),
    }
}

/// Reads a text file, rejecting the sentinel byte.
pub fn read_text(path: &Path) -> Result<Vec<u8>, CliError> {
    let text = format::read_bytes(path)?;
    bwtforge::text::check_nonempty_text(&text).map_err(malformed_at(path))?;
    Ok(text)
}

pub fn read_transform(path: &Path, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Raw => format::read_bytes(path),
        Format::Rle => Ok(format::read_rle(path)?.decompress()),
    }
}

pub fn write_transform(path: &Path, format: Format, data: &[u8]) -> Result<(), CliError> {
    match format {
        Format::Raw => format::write_bytes(path, data),
        Format::Rle => format::write_rle(path, &RunLengthString::compress(data)),
    }
}

fn transform(job: &JobSpec) -> Result<(), CliError> {
    let input = job.single_input()?;
    let output = job.output_path()?;
    let text = read_text(input)?;
    let enc = engine::transform(job.engine, job.kind.into(), &text).map_err(malformed_at(input))?;
    write_transform(output, job.format, &enc.data)?;
    if let Some(row) = enc.row {
        format::write_start(output, row)?;
    }
    Ok(())
}

fn invert(job: &JobSpec) -> Result<(), CliError> {
    let input = job.single_input()?;
    let output = job.output_path()?;
    let data = read_transform(input, job.format)?;
    let row = if job.kind == Kind::Bwtc && !job.assume_lyndon_conjugate {
        let row = format::read_start(input)?.ok_or_else(|| {
            CliError::Invalid(format!(
                "{} not found; pass --assume-lyndon-conjugate to invert from row 1",
                format::start_path(input).display()
            ))
        })?;
        Some(row)
    } else {
        None
    };
    let text = engine::invert(job.engine, job.kind.into(), &data, row).map_err(malformed_at(input))?;
    format::write_bytes(output, &text)
}

fn convert(job: &JobSpec) -> Result<(), CliError> {
    let input = job.single_input()?;
    let output = job.output_path()?;
    let target = job.target.ok_or_else(|| CliError::Invalid("convert needs a target kind".into()))?;
    if target == job.kind {
        return Err(CliError::Invalid("source and target kinds are the same".into()));
    }
    let data = read_transform(input, job.format)?;
    let converted = engine::convert(job.engine, job.kind.into(), target.into(), &data)
        .ok_or_else(|| CliError::Invalid(format!("no conversion from {:?} to {:?}", job.kind, target)))?
        .map_err(malformed_at(input))?;
    write_transform(output, job.format, &converted)
}

/// Run statistics of one text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stats {
    pub n: usize,
    pub t: usize,
    pub r_text: usize,
    pub r_bwt: usize,
    pub r_bbwt: usize,
}

impl std::fmt::Display for Stats {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "n={} t={} r_T={} r_BWT={} r_BBWT={}",
            self.n, self.t, self.r_text, self.r_bwt, self.r_bbwt
        )
    }
}

pub fn text_stats(engine: Engine, text: &[u8]) -> bwtforge::Result<Stats> {
    let runs = |kind| -> bwtforge::Result<usize> {
        let enc = engine::transform(engine, kind, text)?;
        Ok(RunLengthString::compress(&enc.data).run_count())
    };
    Ok(Stats {
        n: text.len(),
        t: LyndonFactorization::of(text)?.len(),
        r_text: RunLengthString::compress(text).run_count(),
        r_bwt: runs(TransformKind::Bwt)?,
        r_bbwt: runs(TransformKind::Bbwt)?,
    })
}

fn stats(job: &JobSpec, out: &mut dyn Write) -> Result<(), CliError> {
    let input = job.single_input()?;
    let text = read_text(input)?;
    let stats = text_stats(job.engine, &text).map_err(malformed_at(input))?;
    writeln!(out, "{stats}").map_err(|e| CliError::Io(PathBuf::from("<stdout>"), e))
}

/// Checks one engine against the oracle on `text`: the transform itself,
/// inversion of the oracle's transform and, for BWT and BBWT, conversion
/// from the other kind. With `format` set to RLE the transform also goes
/// through the file encoding.
pub fn verify_text(engine: Engine, kind: Kind, format: Format, text: &[u8]) -> Result<(), String> {
    let kind: TransformKind = kind.into();
    let want = engine::transform(Engine::Oracle, kind, text).map_err(|e| format!("oracle: {e}"))?;
    let got = engine::transform(engine, kind, text).map_err(|e| format!("transform: {e}"))?;
    if got != want {
        return Err(format!("transform differs from the oracle: {got:?} vs {want:?}"));
    }
    let stored = match format {
        Format::Raw => want.data.clone(),
        Format::Rle => {
            let bytes = format::encode_rle(&RunLengthString::compress(&want.data));
            let back = format::decode_rle(&bytes).map_err(|e| e.to_string())?;
            if format::encode_rle(&back) != bytes {
                return Err("RLE file does not round trip".into());
            }
            back.decompress()
        }
    };
    let back = engine::invert(engine, kind, &stored, want.row).map_err(|e| format!("invert: {e}"))?;
    if back != text {
        return Err("inversion does not reproduce the text".into());
    }
    let other = match kind {
        TransformKind::Bwt => TransformKind::Bbwt,
        TransformKind::Bbwt => TransformKind::Bwt,
        TransformKind::Bwtc => return Ok(()),
    };
    let source = oracle::transform_bytes(other, text).map_err(|e| format!("oracle: {e}"))?;
    let converted = engine::convert(engine, other, kind, &source)
        .expect("bwt and bbwt convert")
        .map_err(|e| format!("convert: {e}"))?;
    if converted != want.data {
        return Err(format!("conversion from {other} differs from the oracle"));
    }
    Ok(())
}

/// Maps `f` over `items` on all available cores, keeping order.
pub fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let chunk = items.len().div_ceil(workers).max(1);
    std::thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| s.spawn(|| part.iter().map(&f).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn verify(job: &JobSpec, out: &mut dyn Write) -> Result<(), CliError> {
    let io = |e| CliError::Io(PathBuf::from("<stdout>"), e);
    let (names, texts): (Vec<String>, Vec<Vec<u8>>) = match job.random {
        Some(count) => {
            let seed = job.seed()?;
            writeln!(out, "seed={seed:#x}").map_err(io)?;
            corpus::random_corpus(seed, count, job.max_len)
                .into_iter()
                .enumerate()
                .map(|(i, t)| (format!("random #{i}"), t))
                .unzip()
        }
        None if job.inputs.is_empty() => return Err(CliError::Invalid("verify needs input files or --random".into())),
        None => {
            let mut names = Vec::new();
            let mut texts = Vec::new();
            for path in &job.inputs {
                texts.push(read_text(path)?);
                names.push(path.display().to_string());
            }
            (names, texts)
        }
    };
    let results = par_map(&texts, |t| verify_text(job.engine, job.kind, job.format, t));
    let failures: Vec<String> = names
        .iter()
        .zip(results)
        .filter_map(|(name, r)| r.err().map(|e| format!("{name}: {e}")))
        .collect();
    for f in &failures {
        writeln!(out, "FAIL {f}").map_err(io)?;
    }
    writeln!(
        out,
        "{} {} via {}: {}/{} ok",
        if failures.is_empty() { "PASS" } else { "FAIL" },
        TransformKind::from(job.kind),
        job.engine.name(),
        texts.len() - failures.len(),
        texts.len()
    )
    .map_err(io)?;
    match failures.first() {
        None => Ok(()),
        Some(first) => Err(CliError::Mismatch(format!("{} of {} inputs, first {first}", failures.len(), texts.len()))),
    }
}

/// Oracle sorting is too slow past this length to be worth timing.
pub const ORACLE_BENCH_LIMIT: usize = 1 << 12;

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len() % 2 == 1 {
        v[m]
    } else {
        (v[m - 1] + v[m]) / 2.0
    }
}

fn bench(job: &JobSpec, out: &mut dyn Write) -> Result<(), CliError> {
    let io = |e| CliError::Io(PathBuf::from("<stdout>"), e);
    if job.reps == 0 || job.max_log < 10 {
        return Err(CliError::Invalid("bench needs --reps >= 1 and --max-log >= 10".into()));
    }
    let seed = job.seed()?;
    let engines = if job.engines.is_empty() { Engine::ALL.to_vec() } else { job.engines.clone() };
    let kind: TransformKind = job.kind.into();
    writeln!(out, "{:<14} {:>8} {:>8} {:>12}", "family", "n", "engine", "median_ms").map_err(io)?;
    for family in corpus::Family::ALL {
        for log in 10..=job.max_log {
            let n = 1usize << log;
            let text = family.generate(n, seed);
            for &engine in &engines {
                if engine == Engine::Oracle && n > ORACLE_BENCH_LIMIT {
                    writeln!(out, "{:<14} {:>8} {:>8} {:>12}", family.name(), n, engine.name(), "skipped").map_err(io)?;
                    continue;
                }
                let mut times = Vec::with_capacity(job.reps);
                for _ in 0..job.reps {
                    let start = Instant::now();
                    let enc = engine::transform(engine, kind, &text).map_err(|e| CliError::Mismatch(e.to_string()))?;
                    times.push(start.elapsed().as_secs_f64() * 1e3);
                    std::hint::black_box(enc);
                }
                writeln!(out, "{:<14} {:>8} {:>8} {:>12.3}", family.name(), n, engine.name(), median(times)).map_err(io)?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_even_and_odd() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![4.0, 1.0, 2.0, 3.0]), 2.5);
    }

    #[test]
    fn stats_example() {
        let s = text_stats(Engine::Rle, b"bacabbabb").unwrap();
        assert_eq!(s.to_string(), "n=9 t=4 r_T=7 r_BWT=5 r_BBWT=6");
    }
}
