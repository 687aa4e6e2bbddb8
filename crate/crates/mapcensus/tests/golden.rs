use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mapcensus"))
        .args(args)
        .env_remove("MAPCENSUS_ORACLE_BUDGET")
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn golden(args: &[&str], expected: &str) {
    let (code, out) = run(args);
    assert_eq!(code, 0, "{args:?}");
    assert_eq!(out, expected, "{args:?}");
}

#[test]
fn three_connected_edges_csv() {
    golden(
        &["census", "--family", "3c", "--mode", "edges", "--max", "17", "--format", "csv"],
        include_str!("golden/3c_edges_17.csv"),
    );
}

#[test]
fn all_families_edges_csv() {
    golden(
        &["census", "--family", "all", "--max", "10", "--format", "csv"],
        include_str!("golden/all_edges_10.csv"),
    );
}

#[test]
fn maps_vertices_faces_json() {
    golden(
        &["census", "--family", "maps", "--mode", "vf", "--max", "5", "--format", "json"],
        include_str!("golden/maps_vf_5.json"),
    );
}

#[test]
fn two_connected_vertices_faces_text() {
    golden(
        &["census", "--family", "2c", "--mode", "vf", "--max", "6", "--format", "text"],
        include_str!("golden/2c_vf_6.txt"),
    );
}

#[test]
fn output_is_byte_stable() {
    let args = ["census", "--family", "all", "--mode", "vf", "--max", "12", "--format", "json"];
    assert_eq!(run(&args), run(&args));
}
