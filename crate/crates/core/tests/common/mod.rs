use std::path::PathBuf;

/// Golden file name and the CLI arguments that produce it.
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("thresholds_general.json", &["--format", "json", "thresholds", "--kind", "general", "--e", "4", "--f", "5", "--r", "2", "--dimx", "12"]),
    ("thresholds_skew.json", &["--format", "json", "thresholds", "--kind", "skew", "--e", "6", "--r", "2", "--dimx", "10"]),
    ("thresholds_orthogonal.json", &["--format", "json", "thresholds", "--kind", "orthogonal", "--r", "4", "--k", "2", "--dimx", "9"]),
    ("betti_general_p12.json", &["--format", "json", "betti", "general", "--ambient", "P12", "--e", "4", "--f", "5", "--r", "2"]),
    ("betti_skew_p12.json", &["--format", "json", "betti", "skew", "--ambient", "P12", "--e", "6", "--r", "2"]),
    ("ring_g25.json", &["--format", "json", "ring", "grassmannian", "--d", "2", "--n", "5"]),
    ("ring_lg23.json", &["--format", "json", "ring", "isotropic", "--d", "2", "--r", "3"]),
    ("restriction_2_3.json", &["--format", "json", "restriction", "--d", "2", "--r", "3"]),
    ("cells_chow_5_2_2.json", &["--format", "json", "cells", "chow", "--n", "5", "--d", "2", "--r", "2"]),
    ("partitions_count.json", &["--format", "json", "partitions", "count", "--q", "6", "--max-part", "3", "--max-length", "3", "--list"]),
    ("examples_segre.json", &["--format", "json", "examples", "run", "segre"]),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// Runs the CLI in-process without a disk cache. Returns exit code and stdout.
pub fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("degloci").chain(args.iter().copied());
    let code = degloci::cli::run(argv, &mut out, &mut err);
    (code, out)
}
