//! On-disk formats.
//!
//! Raw files are plain bytes. RLE files are
//!
//! ```text
//! "RLS1" | n: u64 LE | r: u64 LE | r x (symbol: u8, length: unsigned LEB128)
//! ```
//!
//! with maximal runs (positive lengths, adjacent symbols distinct) summing to
//! `n` and nothing after the last run.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use bwtforge::{Run, RunLengthString};

use crate::CliError;

pub const MAGIC: &[u8; 4] = b"RLS1";

pub fn encode_rle(s: &RunLengthString) -> Vec<u8> {
    let runs = s.runs();
    let mut out = Vec::with_capacity(20 + runs.len() * 2);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&(s.len() as u64).to_le_bytes());
    out.extend_from_slice(&(runs.len() as u64).to_le_bytes());
    for run in runs {
        out.push(run.symbol);
        leb128::write::unsigned(&mut out, run.len as u64).expect("writing to a Vec");
    }
    out
}

fn malformed(what: impl Into<String>) -> CliError {
    CliError::Malformed(what.into())
}

pub fn decode_rle(bytes: &[u8]) -> Result<RunLengthString, CliError> {
    if bytes.len() < 20 {
        return Err(malformed("RLE file truncated in header"));
    }
    if &bytes[..4] != MAGIC {
        return Err(malformed("bad RLE magic"));
    }
    let n = u64::from_le_bytes(bytes[4..12].try_into().unwrap());
    let r = u64::from_le_bytes(bytes[12..20].try_into().unwrap());
    let mut body = &bytes[20..];
    let mut runs = Vec::new();
    let mut total: u64 = 0;
    for idx in 0..r {
        let (&symbol, rest) = body
            .split_first()
            .ok_or_else(|| malformed(format!("RLE file truncated at run {idx}")))?;
        body = rest;
        let len = leb128::read::unsigned(&mut body)
            .map_err(|_| malformed(format!("RLE file truncated at run {idx}")))?;
        if len == 0 {
            return Err(malformed(format!("zero-length run {idx}")));
        }
        if runs.last().is_some_and(|prev: &Run| prev.symbol == symbol) {
            return Err(malformed(format!("runs {} and {idx} share a symbol", idx - 1)));
        }
        total = total
            .checked_add(len)
            .ok_or_else(|| malformed("run lengths overflow"))?;
        runs.push(Run::new(symbol, len as usize));
    }
    if !body.is_empty() {
        return Err(malformed(format!("{} trailing bytes after the last run", body.len())));
    }
    if total != n {
        return Err(malformed(format!("header says n={n}, runs sum to {total}")));
    }
    RunLengthString::from_runs(runs).map_err(|e| malformed(e.to_string()))
}

pub fn read_rle(path: &Path) -> Result<RunLengthString, CliError> {
    decode_rle(&read_bytes(path)?)
}

pub fn write_rle(path: &Path, s: &RunLengthString) -> Result<(), CliError> {
    write_bytes(path, &encode_rle(s))
}

pub fn read_bytes(path: &Path) -> Result<Vec<u8>, CliError> {
    let mut buf = Vec::new();
    fs::File::open(path)
        .and_then(|mut f| f.read_to_end(&mut buf))
        .map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    Ok(buf)
}

pub fn write_bytes(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

/// Sidecar holding the BWTC start row next to `output`.
pub fn start_path(output: &Path) -> PathBuf {
    let mut name = output.as_os_str().to_owned();
    name.push(".start");
    PathBuf::from(name)
}

pub fn write_start(output: &Path, row: usize) -> Result<(), CliError> {
    write_bytes(&start_path(output), format!("{row}\n").as_bytes())
}

pub fn read_start(input: &Path) -> Result<Option<usize>, CliError> {
    let path = start_path(input);
    match fs::read_to_string(&path) {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| malformed(format!("{} does not hold a row number", path.display()))),
        Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(CliError::Io(path, e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unary_file_layout() {
        let bytes = encode_rle(&RunLengthString::compress(b"aaa"));
        let mut want = b"RLS1".to_vec();
        want.extend_from_slice(&3u64.to_le_bytes());
        want.extend_from_slice(&1u64.to_le_bytes());
        want.extend_from_slice(&[0x61, 3]);
        assert_eq!(bytes, want);
    }

    fn file(runs: &[(u8, u64)], n: u64) -> Vec<u8> {
        let mut out = b"RLS1".to_vec();
        out.extend_from_slice(&n.to_le_bytes());
        out.extend_from_slice(&(runs.len() as u64).to_le_bytes());
        for &(c, len) in runs {
            out.push(c);
            leb128::write::unsigned(&mut out, len).unwrap();
        }
        out
    }

    #[test]
    fn rejects_malformed_files() {
        assert!(decode_rle(&file(&[(b'a', 2), (b'a', 1)], 3)).is_err());
        assert!(decode_rle(&file(&[(b'a', 0)], 0)).is_err());
        assert!(decode_rle(&file(&[(b'a', 2)], 3)).is_err());
        let mut bad = file(&[(b'a', 2)], 2);
        bad[0] = b'X';
        assert!(decode_rle(&bad).is_err());
        let good = file(&[(b'a', 300), (b'b', 1)], 301);
        for cut in 0..good.len() {
            assert!(decode_rle(&good[..cut]).is_err(), "prefix of {cut} bytes");
        }
        let mut trailing = good.clone();
        trailing.push(0);
        assert!(decode_rle(&trailing).is_err());
        assert_eq!(decode_rle(&good).unwrap().len(), 301);
    }

    #[test]
    fn start_sidecar_name() {
        assert_eq!(start_path(Path::new("/tmp/x.bwtc")), Path::new("/tmp/x.bwtc.start"));
    }
}
