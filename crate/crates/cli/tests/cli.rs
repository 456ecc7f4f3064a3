use std::process::{Command, Output};

fn smoothwords(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smoothwords"))
        .args(args)
        .env_remove("SMOOTHWORDS_MAX_EXPANSION")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Output lines after the config header.
fn body(out: &Output) -> Vec<String> {
    let text = stdout(out);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# smoothwords "));
    lines.map(str::to_string).collect()
}

#[test]
fn generate_classic_prefix() {
    let out = smoothwords(&["generate", "--alphabet", "1,2", "--base-period", "1,2", "--length", "19"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(body(&out), vec!["1 2 2 1 1 2 1 2 2 1 2 2 1 1 2 1 1 2 2"]);
    let header = stdout(&out).lines().next().unwrap().to_string();
    assert!(header.contains("alphabet={1,2}"));
    assert!(header.contains("length=19"));
}

#[test]
fn expand_worked_example() {
    let out = smoothwords(&[
        "expand", "--alphabet", "2,3,4", "--order", "2,4,3", "--chain", "2,3,2", "--target", "2,4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let expected = "2 2 2 4 4 4 3 3 2 2 4 4 4 4 3 3 3 3 2 2 2 2 4 4 4 4 3 3 3 2 2 2 4 4 4 3 3 3 \
                    2 2 4 4 3 3 2 2 4 4 4 4 3 3 3 3 2 2 2 2 4 4 4 4";
    assert_eq!(body(&out), vec![expected]);
}

#[test]
fn expansion_budget_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_smoothwords"))
        .args(["expand", "--alphabet", "2,3,4", "--order", "2,4,3", "--chain", "2,3,2", "--target", "2,4"])
        .env("SMOOTHWORDS_MAX_EXPANSION", "20")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn sigma_one_fixpoint_verifies() {
    let out = smoothwords(&[
        "subst", "verify-fixpoint", "--alphabet", "2,6,10,14", "--order", "6,10,14,2", "--length", "10000",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(body(&out)[0].contains("agrees: true"));
}

#[test]
fn subst_show_prints_the_rule_table() {
    let out = smoothwords(&["subst", "show", "--alphabet", "1,5,9,13", "--order", "5,9,13,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(body(&out)[1], "B1 -> A1 B1 A2^2");
    let out = smoothwords(&["subst", "show", "--sing", "--alphabet", "3,5"]);
    assert_eq!(body(&out), vec!["A -> A B C", "B -> A B C^2", "C -> A^2 B C^2"]);
    let out = smoothwords(&["subst", "show", "--sing", "--alphabet", "1,3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(smoothwords(&["generate", "--bogus"]).status.code(), Some(1));
    assert_eq!(smoothwords(&["nonsense"]).status.code(), Some(1));
    assert_eq!(smoothwords(&["generate", "--alphabet", "1,2"]).status.code(), Some(1));
    assert_eq!(
        smoothwords(&["generate", "--alphabet", "1,2", "--base-period", "1,1", "--length", "5"])
            .status
            .code(),
        Some(1)
    );
    let help = smoothwords(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("verify-all"));
}

#[test]
fn large_outputs_need_a_file() {
    let args = ["generate", "--alphabet", "1,2", "--length", "200000"];
    assert_eq!(smoothwords(&args).status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.txt");
    let mut with_file = args.to_vec();
    with_file.extend(["--output", path.to_str().unwrap()]);
    let out = smoothwords(&with_file);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let letters = text.lines().nth(1).unwrap().split(' ').count();
    assert_eq!(letters, 200_000);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["gaps", "--alphabet", "2,4", "--length", "50000", "--lmax", "6", "--format", "csv"];
    let first = smoothwords(&args);
    let second = smoothwords(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(body(&first)[0], "L,factor,occurrences,max_gap");
}

#[test]
fn recurrence_mismatch_exits_two() {
    let out = smoothwords(&["recur", "--word", "1,2", "--lmax", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(body(&out).iter().any(|l| l.contains("factor=1 2")));
    let out = smoothwords(&["recur", "--alphabet", "1,2", "--length", "100000", "--lmax", "10"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn closure_reports() {
    let out = smoothwords(&[
        "closure", "--alphabet", "2,4", "--op", "complement", "--blocks", "--length", "300000",
        "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines = body(&out);
    assert_eq!(lines[0], "op,factor,image,verdict,position");
    assert!(lines[1..].iter().any(|l| l.ends_with("absent,")));

    let out = smoothwords(&[
        "closure", "--alphabet", "1,3", "--op", "reversal", "--length", "30000", "--lmax", "8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(body(&out)[0].ends_with("images absent: 0"));

    let out = smoothwords(&["closure", "--op", "identity", "--alphabet", "1,2", "--word", "1,2,2,1"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn frequency_csv_columns() {
    let out = smoothwords(&[
        "freq", "--alphabet", "3,6,9", "--length", "10000", "--samples", "10,10000", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines = body(&out);
    assert_eq!(lines[0], "k,letter,count,ratio,deviation");
    assert_eq!(lines.len(), 1 + 6);
}

#[test]
fn small_commands() {
    let out = smoothwords(&["encode", "--word", "1 2 2 1 1"]);
    assert_eq!(body(&out), vec!["exponents: 1 2 2", "bases: 1 2 1"]);
    let out = smoothwords(&["derive", "--alphabet", "1,2", "--word", "1,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(body(&out)[0].starts_with("D(w): undefined"));
    let out = smoothwords(&["phi-inverse", "--alphabet", "1,3", "--word", "1,3"]);
    assert_eq!(body(&out), vec!["1 1 1"]);
}

#[test]
fn verify_all_writes_to_the_output_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("verify.txt");
    let out = smoothwords(&["verify-all", "--only", "1,3,4,5", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 4);
    assert_eq!(smoothwords(&["verify-all", "--only", "99"]).status.code(), Some(1));
}
