use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn wordlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wordlab"))
        .args(args)
        .env_remove("WORDLAB_BUDGET")
        .output()
        .expect("binary runs")
}

fn payload(out: &Output) -> Value {
    let doc: Value = serde_json::from_slice(&out.stdout).expect("json on stdout");
    assert_eq!(doc["tool"], "wordlab");
    doc["payload"].clone()
}

fn scratch_file(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn commutator_is_rational_on_s3() {
    let out = wordlab(&["rational", "--group", "S3", "--word", "[x1,x2]", "--mode", "full"]);
    assert_eq!(out.status.code(), Some(0));
    let p = payload(&out);
    assert_eq!(p["holds"], true);
    assert_eq!(p["mode"], "full");
    assert_eq!(p["m"], 3);
}

#[test]
fn galois_check_on_a5() {
    let out = wordlab(&["verify", "ra", "--group", "A5", "--D", "5A", "--C", "5B", "--e", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let p = payload(&out);
    assert_eq!(p["d_e"], "5B");
    assert_eq!(p["c_e"], "5A");
    assert_eq!(p["n_brute"], p["n_brute_e"]);
    assert_eq!(p["formula_matches"], true);
}

#[test]
fn verify_ra_all_pairs() {
    let out = wordlab(&["verify", "ra", "--group", "SL(2,3)", "--all"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn unknown_group_is_a_usage_error() {
    let out = wordlab(&["group", "info", "NOSUCH"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NOSUCH"));
    assert!(out.stdout.is_empty());
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(wordlab(&["word", "image", "--group", "S3", "--word", "x1^0"]).status.code(), Some(2));
    assert_eq!(wordlab(&["word", "image", "--group", "S3", "--word", "[x1,"]).status.code(), Some(2));
    assert_eq!(wordlab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(wordlab(&["group", "info", "S7"]).status.code(), Some(2));
}

#[test]
fn budget_refusal_exits_3() {
    let out = wordlab(&["--budget", "10", "word", "image", "--group", "S4", "--word", "[x1,x2]"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("576"));
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let run = |jobs: &str| {
        let out = wordlab(&["--jobs", jobs, "word", "image", "--group", "A5", "--word", "[x1,x2]^2 x3"]);
        assert_eq!(out.status.code(), Some(0));
        payload(&out)
    };
    let one = run("1");
    assert_eq!(one, run("1"));
    assert_eq!(one, run("4"));
}

#[test]
fn generator_file_input() {
    let path = scratch_file("s4.gens", "# symmetric group on four points\n(0 1 2 3)\n\n(0 1)\n");
    let out = wordlab(&["group", "info", "--gens-file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let p = payload(&out);
    assert_eq!(p["order"], 24);

    let both = wordlab(&["group", "info", "S4", "--gens-file", path.to_str().unwrap()]);
    assert_eq!(both.status.code(), Some(2));

    let broken = scratch_file("broken.gens", "(0 1 1)\n");
    let out = wordlab(&["group", "info", "--gens-file", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn word_eval_with_assignments() {
    let out = wordlab(&["word", "eval", "--group", "S3", "--word", "[x1,x2]", "--assign", "x1=(0 1)", "--assign", "x2=(1 2)"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let missing = wordlab(&["word", "eval", "--group", "S3", "--word", "[x1,x2]", "--assign", "x1=(0 1)"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn table_format_is_plain_text() {
    let out = wordlab(&["--format", "table", "group", "info", "A5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(serde_json::from_str::<Value>(&text).is_err());
    assert!(text.contains("5B"));
}

#[test]
fn character_table_with_mod_p_dump() {
    let out = wordlab(&["chartab", "--group", "A5", "--mod-p"]);
    assert_eq!(out.status.code(), Some(0));
    let p = payload(&out);
    let degrees: Vec<u64> = p["degrees"].as_array().unwrap().iter().map(|d| d.as_u64().unwrap()).collect();
    assert_eq!(degrees, [1, 3, 3, 4, 5]);
    assert!(p["mod_p"]["prime"].as_u64().unwrap() > 0);

    let table = wordlab(&["--format", "table", "chartab", "--group", "S3"]);
    assert_eq!(table.status.code(), Some(0));
}

#[test]
fn concise_and_corollary_reports() {
    let out = wordlab(&["verify", "concise", "--group", "S4", "--word", "[x1,x2]"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let p = payload(&out);
    assert!(p.get("fam_bound").is_some());

    let out = wordlab(&["verify", "corollary", "--exponents", "1,2", "--groups", "S3;Q8;A4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(payload(&out)["groups"].as_array().unwrap().len(), 3);
}

#[test]
fn power_closed_verdicts() {
    let closed = wordlab(&["check", "power-closed", "--group", "A5", "--class-union", "1A,5A,5B"]);
    assert_eq!(closed.status.code(), Some(0));
    let open = wordlab(&["check", "power-closed", "--group", "A5", "--class-union", "1A,5A"]);
    assert_eq!(open.status.code(), Some(1));
    assert_eq!(payload(&open)["power_closed"], false);
}
