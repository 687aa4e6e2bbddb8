use std::process::{Command, Output};

fn run_env(args: &[&str], budget_env: Option<&str>) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_mapcensus"));
    c.args(args).env_remove("MAPCENSUS_ORACLE_BUDGET");
    if let Some(v) = budget_env {
        c.env("MAPCENSUS_ORACLE_BUDGET", v);
    }
    c.output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run_env(args, None).status.code().unwrap()
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&["census", "--max", "0"]), 1);
    assert_eq!(code(&["census", "--family", "4c"]), 1);
    assert_eq!(code(&["census", "--format", "xml"]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&[]), 1);
    assert_eq!(code(&["oracle", "--budget", "8"]), 1);
    assert_eq!(code(&["oracle", "--budget", "0"]), 1);
    assert_eq!(code(&["oracle", "--max", "5", "--budget", "4"]), 1);
}

#[test]
fn help_exits_zero() {
    let out = run_env(&["--help"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("census"));
}

#[test]
fn verify_passes_and_summarizes() {
    let out = run_env(&["verify", "--max", "12", "--max2", "8"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains(" identities, 0 failed"), "{text}");
    assert!(!text.lines().any(|l| l.starts_with("FAIL")));
}

#[test]
fn verify_json_records() {
    let out = run_env(&["verify", "--max", "8", "--max2", "6", "--format", "json"], None);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let text = v.to_string();
    assert!(text.contains("kernel/beta"));
    assert!(text.contains("\"pass\":true"));
    assert!(!text.contains("\"pass\":false"));
}

#[test]
fn oracle_agrees_and_reads_budget_from_env() {
    let out = run_env(&["oracle", "--budget", "4"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("agreement"));
    assert_eq!(run_env(&["oracle"], Some("3")).status.code(), Some(0));
    assert_eq!(run_env(&["oracle"], Some("9")).status.code(), Some(1));
    assert_eq!(run_env(&["oracle"], Some("many")).status.code(), Some(1));
    assert_eq!(run_env(&["oracle", "--budget", "2"], Some("9")).status.code(), Some(0));
}

#[test]
fn output_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("mapcensus-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("maps.csv");
    let args = ["census", "--max", "6"];
    let direct = run_env(&args, None).stdout;
    let mut with_file = args.to_vec();
    let p = path.to_str().unwrap();
    with_file.extend(["--output", p]);
    assert_eq!(code(&with_file), 0);
    assert_eq!(std::fs::read(&path).unwrap(), direct);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn unwritable_output_exits_one() {
    assert_eq!(code(&["census", "--output", "/nonexistent-dir/x.csv"]), 1);
}

#[test]
fn dump_codes_writes_one_line_per_class() {
    let dir = std::env::temp_dir().join(format!("mapcensus-codes-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("codes.txt");
    let p = path.to_str().unwrap();
    assert_eq!(code(&["oracle", "--budget", "3", "--dump-codes", p]), 0);
    let codes = std::fs::read_to_string(&path).unwrap();
    // 2 + 4 + 14 unrooted maps with 1, 2, 3 edges
    assert_eq!(codes.lines().filter(|l| !l.trim().is_empty()).count(), 20);
    std::fs::remove_dir_all(&dir).unwrap();
}
