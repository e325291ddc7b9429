#![allow(dead_code)]

pub mod oracle;

use std::path::PathBuf;

use quiver_cones::cli;

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("quiver-cones").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

/// Writes the `zoo` output for `family` into `dir` and returns its path.
pub fn zoo_file(dir: &tempfile::TempDir, name: &str, family: &[&str]) -> PathBuf {
    let mut args = vec!["zoo"];
    args.extend_from_slice(family);
    let o = run(&args);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let path = dir.path().join(name);
    std::fs::write(&path, o.stdout).unwrap();
    path
}
