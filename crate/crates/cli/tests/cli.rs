use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tilecode"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn compact(s: &str) -> String {
    s.chars().filter(|c| *c == 'U' || *c == 'D').collect()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn encode_helix() {
    let out = run(&["encode", path(&data("helix.cone")), "--start", "y[zxy]"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(compact(&stdout(&out)), "UUDDDDUUDDDDUUDD");
}

#[test]
fn encode_insulin_from_printed_start_reports_tile() {
    let out = run(&["encode", path(&data("insulin.cone")), "--start", "zw[xyz]"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr(&out).trim(), "error: overlap-mismatch at tile 8");
}

#[test]
fn encode_insulin_from_first_tile() {
    let out = run(&[
        "encode",
        path(&data("insulin.cone")),
        "--start",
        "x^-1[xzw]",
        "--exit",
        "d",
        "--init-letter",
        "d",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let code = compact(&stdout(&out));
    let printed = compact(&fs::read_to_string(data("insulin.code")).unwrap());
    assert_eq!(code.len(), 63);
    assert_eq!(code[2..], printed[2..]);
}

#[test]
fn empty_drawing_list_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let cones = dir.path().join("empty.cone");
    fs::write(&cones, "dim 4\n# nothing\n").unwrap();
    let out = run(&["encode", cones.to_str().unwrap(), "--start", "1[xyz]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error: empty-drawings"));
}

#[test]
fn decode_walkthroughs() {
    let out = run(&["decode", path(&data("triangle.code")), "--start", "x[yx]"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 19);
    assert_eq!(lines[1..3], ["1[xy]", "1[xz]"]);

    let out = run(&["decode", path(&data("tetra.code")), "--start", "xw2z2[xzw]"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 20);
    assert_eq!(lines[1..3], ["y^-1z[wxz]", "y^-1z[wxy]"]);
}

#[test]
fn decode_single_letter() {
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("one.code");
    fs::write(&code, "U\n").unwrap();
    let out = run(&["decode", code.to_str().unwrap(), "--start", "x[yx]"]);
    assert_eq!(stdout(&out).lines().count(), 1);
}

#[test]
fn decode_bad_code_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("bad.code");
    fs::write(&code, "UXD\n").unwrap();
    let out = run(&["decode", code.to_str().unwrap(), "--start", "x[yx]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn encode_seq_round_trips_decode() {
    let dir = tempfile::tempdir().unwrap();
    let seq = dir.path().join("tetra.seq");
    let out = run(&[
        "decode",
        path(&data("tetra.code")),
        "--start",
        "xw2z2[xzw]",
        "-o",
        seq.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    // The code ends U-D, so the last relation is a flip.
    let out = run(&[
        "encode-seq",
        seq.to_str().unwrap(),
        "--final-policy",
        "flip",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let expected = compact(&fs::read_to_string(data("tetra.code")).unwrap());
    assert_eq!(compact(&stdout(&out)), expected);
}

#[test]
fn digits_outputs() {
    let out = run(&["digits", path(&data("insulin.code"))]);
    assert_eq!(stdout(&out), "7 3 6 3 1 3 6 3 0 3 4 0 3 1 3 6 3 6 3 6 0\n");

    let dir = tempfile::tempdir().unwrap();
    let short = dir.path().join("short.code");
    fs::write(&short, "UUUDDD").unwrap();
    assert_eq!(stdout(&run(&["digits", short.to_str().unwrap()])), "7 0\n");
    fs::write(&short, "UU").unwrap();
    let out = run(&["digits", short.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error: "));
}

#[test]
fn mesh_and_svg_match_goldens() {
    for (cmd, input, golden) in [
        ("mesh", "golden/tetra.lifts", "golden/tetra.obj"),
        ("mesh", "golden/helix.lifts", "golden/helix.obj"),
        ("svg", "golden/triangle.lifts", "golden/triangle.svg"),
    ] {
        let out = run(&[cmd, path(&data(input))]);
        assert!(out.status.success(), "{}", stderr(&out));
        assert_eq!(
            stdout(&out),
            fs::read_to_string(data(golden)).unwrap(),
            "{golden}"
        );
    }
}

#[test]
fn mesh_rejects_triangles() {
    let out = run(&["mesh", path(&data("golden/triangle.lifts"))]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tables_by_dimension() {
    let out = run(&["tables", "--dim", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.ends_with(" invalid")).count(), 4);
    let out = run(&["tables", "--dim", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn trace_prints_a_sequence_file() {
    let out = run(&["trace", path(&data("helix.cone")), "--start", "y[zxy]"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 10);
    assert!(text.starts_with("y[zxy]  # e/w\n"));
    let dir = tempfile::tempdir().unwrap();
    let seq = dir.path().join("trace.seq");
    fs::write(&seq, &text).unwrap();
    let mesh = run(&["mesh", seq.to_str().unwrap()]);
    assert!(mesh.status.success());
    assert_eq!(
        stdout(&mesh)
            .lines()
            .filter(|l| l.starts_with("v "))
            .count(),
        13
    );
}

#[test]
fn outputs_are_deterministic() {
    let a = run(&["encode", path(&data("helix.cone")), "--start", "y[zxy]"]);
    let b = run(&["encode", path(&data("helix.cone")), "--start", "y[zxy]"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn unknown_flags_are_rejected() {
    let out = run(&["digits", path(&data("insulin.code")), "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
