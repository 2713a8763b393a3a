use std::path::Path;
use std::process::{Command, Output};

use scheme_conn::catalog::{gen_cyclic, save_scheme};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scheme-conn"))
        .args(args)
        .env_remove("SCHEME_CONN_JOBS")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn pentagon(dir: &Path) -> String {
    let p = dir.join("pentagon.json");
    save_scheme(&gen_cyclic(5).unwrap(), &p).unwrap();
    p.display().to_string()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn cyclic_rows(n: usize, class: impl Fn(usize) -> usize) -> String {
    let rows: Vec<String> = (0..n)
        .map(|a| {
            let r: Vec<String> = (0..n).map(|b| class((b + n - a) % n).to_string()).collect();
            format!("[{}]", r.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let ok = run(&["verify", &pentagon(dir.path())]);
    assert_eq!(code(&ok), 0);

    // exchange the classes of {0,1} and {0,2} in both orders
    let mut rows: Vec<Vec<u32>> = gen_cyclic(5).unwrap().table().to_rows();
    rows[0][1] = 2;
    rows[1][0] = 2;
    rows[0][2] = 1;
    rows[2][0] = 1;
    let text = serde_json::json!({"name": "bent", "v": 5, "d": 2, "classes": rows}).to_string();
    let bad = run(&["verify", &write(dir.path(), "bent.json", &text)]);
    assert_eq!(code(&bad), 2);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("is not constant"));

    let full = std::fs::read_to_string(pentagon(dir.path())).unwrap();
    let cut = run(&["verify", &write(dir.path(), "cut.json", &full[..full.len() / 2])]);
    assert_eq!(code(&cut), 1);
    assert_eq!(code(&run(&["verify", "/nonexistent.json"])), 1);
    assert_eq!(code(&run(&["verify"])), 1);
}

#[test]
fn analyze_named_examples() {
    let kneser = run(&["analyze", "--family", "johnson", "5", "2", "--relation", "2"]);
    assert_eq!(code(&kneser), 0);
    let r = json(&kneser);
    assert_eq!(r["kappa"], 3);
    let t = &r["theorem1"]["result"];
    for k in [
        "exists_a_connected",
        "forall_a_connected",
        "h_prime_connected",
        "twin_free",
        "equivalent",
    ] {
        assert_eq!(t[k], true, "{k}");
    }

    let cube = run(&["analyze", "--family", "hamming", "4", "2", "--relation", "2"]);
    assert_eq!(code(&cube), 0);
    let r = json(&cube);
    assert_eq!(r["twin_pairs"], 8);
    assert_eq!(r["h_prime_connected"], false);
    assert_eq!(r["theorem1"]["status"], "skipped");

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = run(&[
        "analyze",
        &pentagon(dir.path()),
        "--relation",
        "1",
        "--report",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r["kappa"], 2);
    assert_eq!(r["small_cut"]["result"]["tcut2_ok"], true);
    assert_eq!(r["config"]["seed"], 0x5EED);
    assert!(r["version"].is_string());
}

#[test]
fn analyze_symmetrizes_directed_input() {
    let dir = tempfile::tempdir().unwrap();
    let text = format!(
        r#"{{"name": "Z5", "v": 5, "d": 4, "classes": {}}}"#,
        cyclic_rows(5, |k| k)
    );
    let o = run(&["analyze", &write(dir.path(), "z5.json", &text), "--all-relations"]);
    assert_eq!(code(&o), 0);
    let reports = json(&o);
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports.iter().all(|r| r["symmetrized"] == true && r["d"] == 2));
    assert_eq!(
        code(&run(&["analyze", "--family", "cyclic", "5", "--relation", "3"])),
        1
    );
}

#[test]
fn survey_isolates_bad_entries_and_ignores_jobs() {
    let dir = tempfile::tempdir().unwrap();
    pentagon(dir.path());
    write(dir.path(), "broken.json", "{\"name\": \"x\"");
    let manifest = write(
        dir.path(),
        "manifest.json",
        r#"{"schemes": [
            {"file": "pentagon.json"},
            {"file": "broken.json"},
            {"family": ["johnson", "5", "2"], "relations": [2]},
            {"family": ["drg", "k33"]}
        ]}"#,
    );
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    let o = run(&[
        "survey",
        "--manifest",
        &manifest,
        "--jobs",
        "1",
        "--out",
        a.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 3);
    let o = Command::new(env!("CARGO_BIN_EXE_scheme-conn"))
        .args(["survey", "--manifest", &manifest, "--out", b.to_str().unwrap()])
        .env("SCHEME_CONN_JOBS", "4")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);

    let summary: Value = serde_json::from_str(&std::fs::read_to_string(a.join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["errors"].as_array().unwrap().len(), 1);
    assert_eq!(summary["errors"][0]["entry"], 1);
    assert_eq!(summary["counterexamples"], serde_json::json!([]));
    assert_eq!(summary["reports"], 5);

    let names = |d: &Path| {
        let mut v: Vec<String> = std::fs::read_dir(d.join("reports"))
            .unwrap()
            .map(|e| e.unwrap().file_name().into_string().unwrap())
            .collect();
        v.sort();
        v
    };
    assert_eq!(names(&a), names(&b));
    assert_eq!(names(&a)[0], "0000-C5-r1.json");
    for n in names(&a) {
        let x = std::fs::read(a.join("reports").join(&n)).unwrap();
        let y = std::fs::read(b.join("reports").join(&n)).unwrap();
        assert_eq!(x, y, "{n}");
    }
    assert_eq!(
        std::fs::read(a.join("summary.json")).unwrap(),
        std::fs::read(b.join("summary.json")).unwrap()
    );

    let bad_manifest = write(dir.path(), "bad.json", r#"{"schemes": [{"family": ["nope"]}]}"#);
    let o = run(&[
        "survey",
        "--manifest",
        &bad_manifest,
        "--out",
        dir.path().join("c").to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 1);
}

#[test]
fn cuts_command() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["cuts", &pentagon(dir.path()), "--relation", "1"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["count"], 5);
    assert_eq!(r["all_neighborhoods"], true);

    let r = json(&run(&["cuts", "--family", "drg", "petersen", "--relation", "1"]));
    assert_eq!(r["count"], 10);
    assert_eq!(r["all_neighborhoods"], true);

    let r = json(&run(&["cuts", "--family", "drg", "k33", "--relation", "1"]));
    let cuts: Vec<Value> = r["cuts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["vertices"].clone())
        .collect();
    assert!(cuts.contains(&serde_json::json!([0, 1, 2])) && cuts.contains(&serde_json::json!([3, 4, 5])));
    assert_eq!(r["all_neighborhoods"], true);

    let capped = run(&["cuts", "--family", "hamming", "6", "2", "--relation", "1"]);
    assert_eq!(code(&capped), 4);
    let capped = run(&[
        "cuts",
        "--family",
        "johnson",
        "13",
        "3",
        "--relation",
        "1",
        "--max-size",
        "30",
    ]);
    assert_eq!(code(&capped), 4);
}
