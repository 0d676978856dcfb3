//! Byte-for-byte runs of the binary against stored reports, with the exit
//! code each report must carry. `UPDATE_GOLDEN=1` rewrites the files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_galcong"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data/golden")
        .join(format!("{name}.out"))
}

fn check(name: &str, args: &[&str], code: i32) {
    let out = run(args);
    let stdout = String::from_utf8(out.stdout).expect("utf-8");
    assert_eq!(
        out.status.code(),
        Some(code),
        "{name}: exit code\nstdout:\n{stdout}\nstderr:\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &stdout).unwrap();
        return;
    }
    let want =
        std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(
        stdout,
        want,
        "{name}: output differs from {}",
        path.display()
    );
}

#[test]
fn bounds() {
    check(
        "bounds_ctilde",
        &[
            "bounds", "eval", "--kind", "ctilde", "--n", "2", "--b", "11", "--e", "1", "--q", "2",
            "--ell", "16777259",
        ],
        0,
    );
    check(
        "bounds_c1_fractional",
        &[
            "bounds", "eval", "--kind", "c1", "--edeg", "3", "--f", "2", "--n", "2", "--w", "3",
            "--q", "3", "--ell", "89",
        ],
        0,
    );
}

#[test]
fn weil_and_tame() {
    check(
        "tame_digits",
        &[
            "tame", "digits", "--ell", "7", "--h", "2", "--d", "23", "--e", "2",
        ],
        0,
    );
    check(
        "weil_check_delta",
        &[
            "weil",
            "check",
            "--poly",
            "2048,24,1",
            "--q",
            "2",
            "--w",
            "11",
        ],
        0,
    );
    check(
        "weil_check_fails",
        &["weil", "check", "--poly", "1,-3,1", "--q", "2", "--w", "0"],
        3,
    );
    check(
        "weil_weights_mixed",
        &["weil", "weights", "--poly", "2,-3,1", "--q", "2"],
        0,
    );
}

#[test]
fn engine() {
    let big = "tests/data/delta_big.desc";
    check(
        "engine_t11_concluded",
        &[
            "engine", "run", "--which", "t11", "--left", big, "--right", big, "--ell", "16777259",
        ],
        0,
    );
    check(
        "engine_t12_concluded_json",
        &[
            "engine", "run", "--which", "t12", "--left", big, "--right", big, "--ell", "16777259",
            "--json",
        ],
        0,
    );
    check(
        "engine_nonintegral_contradiction",
        &[
            "engine",
            "run",
            "--which",
            "t11",
            "--left",
            big,
            "--right",
            "tests/data/nonintegral_big.desc",
            "--ell",
            "16777259",
        ],
        3,
    );
    let small = "tests/data/delta_691.desc";
    check(
        "engine_small_ell_json",
        &[
            "engine", "run", "--which", "t14", "--left", small, "--right", small, "--ell", "691",
            "--json",
        ],
        2,
    );
    check(
        "engine_unattested",
        &[
            "engine",
            "run",
            "--which",
            "t11",
            "--left",
            big,
            "--right",
            big,
            "--ell",
            "16777259",
            "--unattested",
        ],
        2,
    );
}

#[test]
fn modular_forms() {
    check("mf_eigenforms_24", &["mf", "eigenforms", "--k", "24"], 0);
    check(
        "mf_detect_12",
        &["mf", "detect", "--k", "12", "--pmax", "97"],
        0,
    );
    check(
        "mf_detect_12_mod_5",
        &["mf", "detect", "--k", "12", "--pmax", "97", "--ell", "5"],
        0,
    );
    check("mf_audit_16", &["mf", "audit", "--k", "16", "--q", "2"], 2);
    check("mf_audit_10", &["mf", "audit", "--k", "10", "--q", "2"], 0);
    check("mf_ingest_11a", &["mf", "ingest", "tests/data/11a.eig"], 2);
}

#[test]
fn errors_exit_one() {
    for args in [
        &["bogus"][..],
        &["bounds", "eval", "--kind", "c", "--n", "2"],
        &[
            "engine", "run", "--which", "t99", "--left", "x", "--right", "x", "--ell", "7",
        ],
        &[
            "engine",
            "run",
            "--which",
            "t11",
            "--left",
            "missing.desc",
            "--right",
            "missing.desc",
            "--ell",
            "7",
        ],
        &["tame", "digits", "--ell", "8", "--h", "1", "--d", "3"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?} printed a report");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn parse_errors_name_the_line() {
    let dir = std::env::temp_dir().join(format!("galcong-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.desc");
    let text = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/delta_big.desc"),
    )
    .unwrap()
    .replace("u.e = 1", "u.e = 1\ncolour = red");
    std::fs::write(&bad, text).unwrap();
    let path = bad.to_str().unwrap();
    let out = run(&[
        "engine", "run", "--which", "t11", "--left", path, "--right", path, "--ell", "16777259",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 10: unknown key \"colour\""), "{err}");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let args = ["mf", "detect", "--k", "24", "--pmax", "60", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        run(&["mf", "detect", "--k", "24", "--pmax", "60"]).stdout,
        a.stdout
    );
}
