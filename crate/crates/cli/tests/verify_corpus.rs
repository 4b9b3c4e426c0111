//! `verify` over a 1000-file generated corpus, for every kind and engine.

use std::fs;

use bwtforge_cli::corpus::random_corpus;
use bwtforge_cli::{run, Command, Engine, Format, JobSpec, Kind};

#[test]
fn verify_passes_on_generated_files() {
    let dir = tempfile::tempdir().unwrap();
    let texts = random_corpus(0x05ee_dc11, 1000, 200);
    let paths: Vec<_> = texts
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let p = dir.path().join(format!("{i:04}.txt"));
            fs::write(&p, t).unwrap();
            p
        })
        .collect();
    for kind in Kind::ALL {
        for engine in [Engine::Oracle, Engine::Inplace, Engine::Rle] {
            for format in [Format::Raw, Format::Rle] {
                let mut spec = JobSpec::new(Command::Verify, kind, engine).format(format);
                spec.inputs = paths.clone();
                let mut out = Vec::new();
                let code = run(&spec, &mut out);
                assert_eq!(code, 0, "{kind:?} {engine:?} {format:?}:\n{}", String::from_utf8_lossy(&out));
            }
        }
    }
}
