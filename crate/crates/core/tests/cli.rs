use std::io::Write as _;
use std::process::{Command, Stdio};

use sdim::cli::{run, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn sdim(args: &[&str]) -> Outcome {
    sdim_with_stdin(args, "")
}

fn sdim_with_stdin(args: &[&str], input: &str) -> Outcome {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let argv = std::iter::once("sdim").chain(args.iter().copied());
    let code = run(argv, &mut input.as_bytes(), &mut stdout, &mut stderr);
    Outcome {
        code,
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

#[test]
fn gen_formats() {
    let out = sdim(&["gen", "cycle", "-n", "4"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(
        out.stdout,
        "{\"n\":4,\"edges\":[[0,1],[0,3],[1,2],[2,3]]}\n"
    );

    let out = sdim(&["gen", "jahangir", "-n", "2", "-m", "8", "--format", "dot"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("graph {\n  \"0\" [label=\"c\"];\n"));
    assert!(out.stdout.contains("\"16\" [label=\"u16\"];"));
    assert_eq!(out.stdout.matches(" -- ").count(), 24);
}

#[test]
fn gen_rejects_bad_params() {
    let out = sdim(&["gen", "jahangir", "-n", "1", "-m", "3"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("n >= 2"), "{}", out.stderr);
    assert_eq!(sdim(&["gen", "jahangir", "-n", "3"]).code, EXIT_USAGE);
    assert_eq!(sdim(&["gen", "cycle", "-n", "2"]).code, EXIT_USAGE);
    assert_eq!(sdim(&["gen", "hypercube", "-n", "3"]).code, EXIT_USAGE);
    assert_eq!(sdim(&["frobnicate"]).code, EXIT_USAGE);
}

#[test]
fn sdim_methods() {
    let out = sdim(&["sdim", "jahangir:6,5", "--method", "pipeline"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("sdim = 10\n"), "{}", out.stdout);

    let out = sdim(&["sdim", "jahangir:5,5", "--method", "formula"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("sdim = 12\n"));
    assert!(out
        .stdout
        .contains("basis = {u2, u3, u4, u7, u8, u9, u12, u13, u14, u17, u24, u25}"));

    let out = sdim(&["sdim", "jahangir:2,3", "--method", "brute"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("sdim = 3\n"));

    let out = sdim(&["sdim", "jahangir:7,4"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out
        .stdout
        .contains("sdim = 13\nmethod = formula (cross-checked by pipeline)\n"));

    let out = sdim(&["sdim", "jahangir:4,4"]);
    assert!(out.stdout.contains("method = pipeline\n"));
}

#[test]
fn sdim_errors() {
    assert_eq!(
        sdim(&["sdim", "jahangir:4,4", "--method", "formula"]).code,
        EXIT_USAGE
    );
    assert_eq!(
        sdim(&["sdim", "cycle:6", "--method", "formula"]).code,
        EXIT_USAGE
    );
    assert_eq!(
        sdim(&["sdim", "jahangir:6,5", "--method", "brute"]).code,
        EXIT_USAGE
    );
    let out = sdim_with_stdin(&["sdim", "-"], r#"{"n":4,"edges":[[0,1],[2,3]]}"#);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("disconnected"));
    assert_eq!(sdim(&["sdim", "/nonexistent/graph.json"]).code, EXIT_USAGE);
    assert_eq!(sdim(&["sdim", "jahangir:6"]).code, EXIT_USAGE);
}

#[test]
fn mmd_and_srg() {
    let out = sdim(&["mmd", "jahangir:3,3"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "u2 u6\nu3 u8\nu5 u9\n");

    let out = sdim(&["mmd", "cycle:4"]);
    assert_eq!(out.stdout, "0 2\n1 3\n");

    let out = sdim(&["srg", "jahangir:6,5"]);
    assert_eq!(out.code, EXIT_OK);
    let srg = sdim::io::parse_edge_json(&out.stdout).unwrap();
    assert_eq!(srg.size(), 20);
    assert_eq!(srg.name(0), "c");
}

#[test]
fn cover_modes() {
    let out = sdim(&["cover", "jahangir:6,5", "--srg"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(
        out.stdout.starts_with("size = 10\noptimal = true\n"),
        "{}",
        out.stdout
    );

    let srg = sdim(&["srg", "jahangir:5,5"]).stdout;
    let out = sdim_with_stdin(&["cover", "-"], &srg);
    assert!(out.stdout.starts_with("size = 12\n"));

    let star = r#"{"n":5,"edges":[[0,1],[0,2],[0,3],[0,4]]}"#;
    let out = sdim_with_stdin(&["cover", "-", "--mode", "greedy"], star);
    assert_eq!(out.stdout, "size = 1\noptimal = true\ncover = {0}\n");
}

#[test]
fn verify_cells() {
    let out = sdim(&["verify", "--n", "6..6", "--m", "5..5"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(
        out.stdout.lines().nth(1),
        Some("  6   5 even            ok    ok    10      10       10     -  PASS")
    );

    let out = sdim(&["verify", "--n", "5", "--m", "5", "--json"]);
    assert_eq!(out.code, EXIT_OK);
    let json: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(json[0]["pipeline_sdim"], 12);
    assert_eq!(json[0]["discrepancies"].as_array().unwrap().len(), 0);

    assert_eq!(sdim(&["verify", "--n", "9..3"]).code, EXIT_USAGE);
    assert_eq!(
        sdim(&["verify", "--n", "1..3", "--m", "3"]).code,
        EXIT_USAGE
    );
}

#[test]
fn verify_default_grid_passes() {
    let out = sdim(&["verify"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert_eq!(out.stdout.lines().count(), 1 + 8 * 5);
    assert_eq!(out.stdout.matches("PASS").count(), 40);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["verify", "--json"][..],
        &["srg", "jahangir:7,6", "--format", "dot"],
        &["sdim", "jahangir:9,5"],
    ] {
        assert_eq!(sdim(args).stdout, sdim(args).stdout);
    }
}

#[test]
fn mismatch_exit_code_is_distinct() {
    assert_ne!(EXIT_MISMATCH, EXIT_OK);
    assert_ne!(EXIT_MISMATCH, EXIT_USAGE);
}

#[test]
fn binary_end_to_end() {
    let bin = env!("CARGO_BIN_EXE_sdim");
    let out = Command::new(bin)
        .args(["sdim", "jahangir:6,5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("sdim = 10\n"));

    let out = Command::new(bin)
        .args(["gen", "jahangir", "-n", "1", "-m", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));

    let mut child = Command::new(bin)
        .args(["mmd", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"n":4,"edges":[[0,1],[1,2],[2,3],[3,0]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout), "0 2\n1 3\n");
}
