use std::io::Write;
use std::process::Command;

fn run(script: &str, args: &[&str]) -> (i32, String) {
    let mut file = tempfile();
    file.1.write_all(script.as_bytes()).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_affinemod"))
        .arg("run")
        .arg(&file.0)
        .args(args)
        .env_remove("AFFINEMOD_CAP_GROEBNER")
        .env_remove("AFFINEMOD_CAP_CHAIN")
        .env_remove("AFFINEMOD_SEED")
        .output()
        .unwrap();
    std::fs::remove_file(&file.0).ok();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn tempfile() -> (std::path::PathBuf, std::fs::File) {
    use std::sync::atomic::{AtomicUsize, Ordering};
    static N: AtomicUsize = AtomicUsize::new(0);
    let path = std::env::temp_dir().join(format!(
        "affinemod-{}-{}.am",
        std::process::id(),
        N.fetch_add(1, Ordering::SeqCst)
    ));
    let f = std::fs::File::create(&path).unwrap();
    (path, f)
}

#[test]
fn success() {
    let (code, out) = run(
        "ring A = Q[x,y]; ideal I = (x, y^2 - y); modify M = (I, x); davis M [z];",
        &[],
    );
    assert_eq!(code, 0);
    assert!(out.contains("-y^2 + x*z + y"));
}

#[test]
fn parse_error() {
    let (code, out) = run("ring A = Q[x,y]; ideal I = (x,,y);", &["--json"]);
    assert_eq!(code, 2);
    let json: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["schema"], 1);
    assert_eq!(json["exit_class"], "parse");
    assert_eq!(json["reports"][0]["result"]["expected"][0], "expression");
}

#[test]
fn precondition() {
    let (code, _) = run(
        "ring A = Q[x,y]; ideal I = (y); modify M = (I, x); davis M;",
        &[],
    );
    assert_eq!(code, 3);
    let (code, _) = run("ring A = Q[x,y]; ideal I = (w);", &[]);
    assert_eq!(code, 3);
}

#[test]
fn resource_cap() {
    let (code, out) = run(
        "ring X = Q[x, y, z, t] / (x*y - z*t); ideal I = (x^2, x*y, y^2, z); modify M = (I, x^2); davis M;",
        &["--cap-groebner", "3"],
    );
    assert_eq!(code, 4, "{out}");
    assert!(out.contains("budget exceeded"));
    let (code, _) = run(
        "ring S = Q[x,y,z] / (x*z - y^2 + y); derivation D = { y -> x, z -> 2y - 1 }; degree D (z);",
        &["--cap-chain", "1"],
    );
    assert_eq!(code, 4);
}

#[test]
fn timing_is_opt_in() {
    let script = "family F { k=3 l=2 n=[2] q=[0] }; graded G = F; jacobian G (y, z);";
    let (_, plain) = run(script, &["--json"]);
    assert!(!plain.contains("elapsed_ms"));
    let (_, timed) = run(script, &["--json", "--timing"]);
    assert!(timed.contains("elapsed_ms"));
}
