//! Uniform entry points over the three engines.

use bwtforge::{inplace, oracle, rle, Result, RunLengthString, Transform, TransformKind, SENTINEL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Engine {
    Oracle,
    Inplace,
    Rle,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Oracle, Engine::Inplace, Engine::Rle];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Oracle => "oracle",
            Engine::Inplace => "inplace",
            Engine::Rle => "rle",
        }
    }
}

/// A transform, plus the start row when `kind` is BWTC.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Encoded {
    pub data: Vec<u8>,
    pub row: Option<usize>,
}

pub fn transform(engine: Engine, kind: TransformKind, text: &[u8]) -> Result<Encoded> {
    let mut row = None;
    let data = match (engine, kind) {
        (Engine::Oracle, TransformKind::Bwtc) => {
            row = Some(oracle::oracle_bwtc_start_row(text)?);
            oracle::oracle_bwtc(text)?.data
        }
        (Engine::Oracle, kind) => oracle::transform_bytes(kind, text)?,
        (Engine::Inplace, TransformKind::Bwt) => {
            let mut buf = Vec::with_capacity(text.len() + 1);
            buf.extend_from_slice(text);
            inplace::construct_bwt(&mut buf)?;
            buf
        }
        (Engine::Inplace, TransformKind::Bbwt) => {
            let mut buf = text.to_vec();
            inplace::construct_bbwt(&mut buf)?;
            buf
        }
        (Engine::Inplace, TransformKind::Bwtc) => {
            let mut buf = text.to_vec();
            row = Some(inplace::construct_bwtc(&mut buf)?);
            buf
        }
        (Engine::Rle, TransformKind::Bwt) => rle::rlbwt(text)?.decompress(),
        (Engine::Rle, TransformKind::Bbwt) => rle::rlbbwt(text)?.decompress(),
        (Engine::Rle, TransformKind::Bwtc) => {
            let (s, r) = rle::rlbwtc(text)?;
            row = Some(r);
            s.decompress()
        }
    };
    Ok(Encoded { data, row })
}

/// Inverts `data`. A BWTC needs its start row; `None` means the text is
/// assumed to be its own Lyndon conjugate.
pub fn invert(engine: Engine, kind: TransformKind, data: &[u8], row: Option<usize>) -> Result<Vec<u8>> {
    let t = Transform::new(kind, data.to_vec())?;
    match (engine, kind) {
        (Engine::Oracle, TransformKind::Bwt) => oracle::oracle_invert_bwt(&t),
        (Engine::Oracle, TransformKind::Bbwt) => oracle::oracle_invert_bbwt(&t),
        (Engine::Oracle, TransformKind::Bwtc) => oracle::oracle_invert_bwtc(&t, row.unwrap_or(1)),
        (Engine::Inplace, TransformKind::Bwt) => {
            let mut buf = t.into_inner();
            inplace::invert_bwt(&mut buf)?;
            Ok(buf)
        }
        (Engine::Inplace, TransformKind::Bbwt) => {
            let mut buf = t.into_inner();
            inplace::invert_bbwt(&mut buf)?;
            Ok(buf)
        }
        (Engine::Inplace, TransformKind::Bwtc) => {
            let mut buf = t.into_inner();
            match row {
                Some(row) => inplace::invert_bwtc(&mut buf, row)?,
                None => inplace::invert_bwtc_lyndon(&mut buf)?,
            }
            Ok(buf)
        }
        (Engine::Rle, kind) => {
            let s = RunLengthString::compress(&t.data);
            match kind {
                TransformKind::Bwt => rle::invert_rlbwt(&s),
                TransformKind::Bbwt => rle::invert_rlbbwt(&s),
                TransformKind::Bwtc => rle::invert_rlbwtc(&s, row.unwrap_or(1)),
            }
        }
    }
}

/// Converts between BWT and BBWT. Returns `None` for pairs no engine
/// converts directly.
pub fn convert(engine: Engine, from: TransformKind, to: TransformKind, data: &[u8]) -> Option<Result<Vec<u8>>> {
    use TransformKind::{Bbwt, Bwt};
    let run = || -> Result<Vec<u8>> {
        let t = Transform::new(from, data.to_vec())?;
        match engine {
            Engine::Oracle => {
                let text = invert(Engine::Oracle, from, &t.data, None)?;
                oracle::transform_bytes(to, &text)
            }
            Engine::Inplace if from == Bwt => {
                let mut buf = t.into_inner();
                inplace::convert_bwt_to_bbwt(&mut buf)?;
                // The sentinel's own factor leads the output.
                debug_assert_eq!(buf[0], SENTINEL);
                buf.remove(0);
                Ok(buf)
            }
            Engine::Inplace => {
                let mut buf = t.into_inner();
                buf.reserve_exact(1);
                inplace::convert_bbwt_to_bwt(&mut buf)?;
                Ok(buf)
            }
            Engine::Rle if from == Bwt => {
                Ok(rle::convert_rlbwt_to_rlbbwt(&RunLengthString::compress(&t.data))?.decompress())
            }
            Engine::Rle => Ok(rle::convert_rlbbwt_to_rlbwt(&RunLengthString::compress(&t.data))?.decompress()),
        }
    };
    match (from, to) {
        (Bwt, Bbwt) | (Bbwt, Bwt) => Some(run()),
        _ => None,
    }
}
