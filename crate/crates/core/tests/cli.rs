use std::path::{Path, PathBuf};

use oneplane::cli::{run, CommandResult};
use oneplane::OnePlaneDrawing;
use serde_json::Value;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).to_string_lossy().into_owned()
}

fn cli(args: &[&str]) -> CommandResult {
    run(std::iter::once("oneplane").chain(args.iter().copied()))
}

fn payload(r: &CommandResult) -> Value {
    serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", r.stdout))
}

#[test]
fn fixtures_are_construct_output() {
    for (kind, file) in [("figure1", "figure1.json"), ("g0", "g0.json"), ("cocktail8", "cocktail8.json")] {
        let r = cli(&["construct", kind]);
        assert_eq!(r.code, 0);
        assert_eq!(r.stdout, std::fs::read_to_string(fixture(file)).unwrap(), "{file}");
    }
}

#[test]
fn check_fixtures() {
    for f in ["figure1.json", "g0.json", "cocktail8.json"] {
        let r = cli(&["check", &fixture(f)]);
        assert_eq!(r.code, 0, "{}", r.stderr);
        assert_eq!(payload(&r)["valid"], true);
    }
}

#[test]
fn classify_reports_every_label() {
    let r = cli(&["classify", &fixture("figure1.json")]);
    assert_eq!(r.code, 0);
    let p = payload(&r);
    assert_eq!(p["crossings"].as_array().unwrap().len(), 6);
    for label in ["type-0", "type-1", "type-2A", "type-2 (not 2A)", "type-3", "type-4"] {
        assert!(r.stderr.lines().any(|l| l.ends_with(label)), "{label} missing from\n{}", r.stderr);
    }
}

#[test]
fn match_g0_fails_near_perfect() {
    let r = cli(&["match", &fixture("g0.json")]);
    assert_eq!(r.code, 1);
    let p = payload(&r);
    assert_eq!(p["matching_number"], 20);
    assert_eq!(p["floor_half_n"], 21);
    assert_eq!(p["near_perfect"], false);
    assert_eq!(p["deficiency_witness"]["deficiency"], 2);
}

#[test]
fn match_with_oracle() {
    let r = cli(&["match", &fixture("cocktail8.json"), "--oracle"]);
    assert_eq!(r.code, 0);
    assert_eq!(payload(&r)["oracle_matching_number"], 4);
    let r = cli(&["match", &fixture("g0.json"), "--oracle"]);
    assert_eq!(r.code, 2);
    assert_eq!(payload(&r)["error"]["guard"], "matching-oracle-size");
}

#[test]
fn certify_modes() {
    let r = cli(&["certify", &fixture("cocktail8.json"), "--all-cuts", "--max-size", "7"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let p = payload(&r);
    assert_eq!(p["cut_count"], 4);
    assert_eq!(p["all_pass"], true);

    let r = cli(&["certify", &fixture("cocktail8.json"), "--cut", "v01,v02,v03,v04,v05,v06"]);
    assert_eq!(r.code, 0);
    let p = payload(&r);
    assert_eq!(p["verdict"]["pass"], true);
    assert!(r.stdout.starts_with("{\n  \"s\": ["));
    let at = |k: &str| r.stdout.find(&format!("\n  \"{k}\":")).unwrap();
    let order = ["s", "cut_size", "claims", "b_checks", "karpov_lhs", "karpov_rhs", "conclusion", "verdict"];
    assert!(order.windows(2).all(|w| at(w[0]) < at(w[1])));

    let black: Vec<String> = (1..=20).map(|i| (2 * i).to_string()).collect();
    let r = cli(&["certify", &fixture("g0.json"), "--cut", &black.join(",")]);
    assert_eq!(r.code, 1);
    assert_eq!(payload(&r)["conclusion"]["direct_value"], 2);

    let r = cli(&["certify", &fixture("g0.json"), "--all-cuts", "--max-size", "9"]);
    assert_eq!(r.code, 2);
    assert_eq!(payload(&r)["error"]["guard"], "cut-enumeration-subsets");
    assert_eq!(cli(&["certify", &fixture("g0.json")]).code, 2);
    assert_eq!(cli(&["certify", &fixture("g0.json"), "--cut", "nope"]).code, 2);
}

#[test]
fn scatter_commands() {
    let r = cli(&["scatter", &fixture("cocktail8.json")]);
    assert_eq!(r.code, 0);
    assert_eq!(payload(&r)["scattering_number"], -4);
    let r = cli(&["scatter", &fixture("g0.json")]);
    assert_eq!((r.code, payload(&r)["error"]["guard"].as_str()), (2, Some("scattering-size")));
}

#[test]
fn construct_round_trip_is_lossless() {
    let dir = tempfile::tempdir().unwrap();
    let out: PathBuf = dir.path().join("q.json");
    let out_s = out.to_string_lossy().into_owned();
    let r = cli(&["construct", "quad-diag", "--n", "16", "--seed", "4", "-o", &out_s]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(cli(&["check", &out_s]).code, 0);
    assert_eq!(cli(&["classify", &out_s]).code, 0);
    let d = OnePlaneDrawing::from_json(&text).unwrap();
    assert_eq!(d.to_json() + "\n", text);
    let again = cli(&["construct", "quad-diag", "--n", "16", "--seed", "4"]);
    assert_eq!(again.stdout, text);
    let sparse = cli(&["construct", "quad-diag", "--n", "16", "--seed", "4", "--sparsify"]);
    assert_ne!(sparse.stdout, text);
}

#[test]
fn construct_argument_errors() {
    assert_eq!(cli(&["construct", "quad-diag"]).code, 2);
    assert_eq!(cli(&["construct", "quad-diag", "--n", "7"]).code, 2);
    assert_eq!(cli(&["construct", "figure1", "--n", "8"]).code, 2);
    assert_eq!(cli(&["construct", "petersen"]).code, 2);
}

#[test]
fn invalid_inputs_exit_two_with_pointer() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    };
    let bad_edge = write("a.json", r#"{"vertices":["a"],"edges":[["a","b"]],"crossings":[]}"#);
    let r = cli(&["check", &bad_edge]);
    assert_eq!(r.code, 2);
    assert_eq!(payload(&r)["error"]["at"], "edges[0]");

    let truncated = write("b.json", r#"{"vertices":["a""#);
    let r = cli(&["check", &truncated]);
    assert_eq!((r.code, payload(&r)["error"]["kind"].as_str()), (2, Some("json")));

    let plain = write("c.json", r#"{"vertices":["a","b"],"edges":[["a","b"]]}"#);
    assert_eq!(cli(&["check", &plain]).code, 2);
    assert_eq!(cli(&["export-dot", &plain]).code, 2);
    assert_eq!(cli(&["match", &plain]).code, 0);

    let complete = write("d.json", r#"{"vertices":["a","b","c"],"edges":[["a","b"],["a","c"],["b","c"]]}"#);
    let r = cli(&["scatter", &complete]);
    assert_eq!((r.code, payload(&r)["error"]["kind"].as_str()), (2, Some("undefined")));

    assert_eq!(cli(&["check", "/nonexistent/x.json"]).code, 2);
}

#[test]
fn violations_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    let text = r#"{"vertices":["a","b","c"],"edges":[["a","b"],["a","c"]],"crossings":[[["a","b"],["a","c"]]]}"#;
    std::fs::write(&p, text).unwrap();
    let r = cli(&["check", &p.to_string_lossy()]);
    assert_eq!(r.code, 1);
    assert_eq!(payload(&r)["valid"], false);
}

#[test]
fn export_dot() {
    let r = cli(&["export-dot", &fixture("cocktail8.json")]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("graph drawing {"));
    assert_eq!(r.stdout.matches("shape=point").count(), 6);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(cli(&["--help"]).code, 0);
    assert_eq!(cli(&["--version"]).code, 0);
    assert_eq!(cli(&[]).code, 2);
}
