use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_trialgebra"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("trialgebra-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn catalog_names() -> Vec<(String, String)> {
    let o = run(&["--json", "catalog", "list"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    v["info"].as_object().unwrap().iter().map(|(k, e)| (k.clone(), e["kind"].as_str().unwrap().to_string())).collect()
}

#[test]
fn every_catalog_entry_round_trips_through_its_checker() {
    let dir = scratch("catalog");
    let names = catalog_names();
    assert!(names.len() >= 19);
    for (i, (name, kind)) in names.iter().enumerate() {
        let f = dir.join(format!("entry{i}.json"));
        let o = run(&["catalog", "build", name, "--out", path(&f)]);
        assert_eq!(code(&o), 0, "{name}: {}", String::from_utf8_lossy(&o.stderr));
        let o = run(&["verify", kind, "--algebra", path(&f)]);
        assert_eq!(code(&o), 0, "{name}: {}", stdout(&o));
    }
}

#[test]
fn catalog_build_writes_the_algebra() {
    let dir = scratch("build");
    let f = dir.join("o.json");
    let o = run(&["catalog", "build", "para-octonion", "--out", path(&f)]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
    assert_eq!(v["dim"], 8);
    assert_eq!(v["field"]["kind"], "Q");

    let f = dir.join("c.json");
    assert_eq!(code(&run(&["--field", "Qsqrt:-1", "catalog", "build", "complex", "--out", path(&f)])), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
    assert_eq!(v["field"]["d"], -1);
    assert!(dir.join("c.delta.json").exists());
}

#[test]
fn magic_square_table_ends_with_e8() {
    let o = run(&["report", "magic-square", "--max-dim", "8"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(*rows.last().unwrap(), "8×8 → 248");
    for row in
        ["1×1 → 3", "1×2 → 8", "2×2 → 16", "1×4 → 21", "2×4 → 35", "4×4 → 66", "1×8 → 52", "2×8 → 78", "4×8 → 133"]
    {
        assert!(rows.contains(&row), "{row}");
    }
    let o = run(&["report", "magic-square", "--max-dim", "2"]);
    assert_eq!(*stdout(&o).lines().collect::<Vec<_>>().last().unwrap(), "2×2 → 16");
}

#[test]
fn broken_algebra_fails_with_witness() {
    let dir = scratch("broken");
    let f = dir.join("t.json");
    assert_eq!(code(&run(&["catalog", "build", "tensor:para-complex,para-complex", "--out", path(&f)])), 0);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
    v["mul"][0][3] = Value::String("5/1".into());
    let broken = dir.join("broken.json");
    std::fs::write(&broken, v.to_string()).unwrap();
    let o = run(&["verify", "sta", "--algebra", path(&broken), "--delta", path(&dir.join("t.delta.json"))]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("[FAIL]") && out.contains("witness ("), "{out}");

    let o = run(&["--json", "verify", "sta", "--algebra", path(&broken), "--delta", path(&dir.join("t.delta.json"))]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], false);
    let failed: Vec<&Value> =
        v["reports"][0]["results"].as_array().unwrap().iter().filter(|r| r["status"] == "fail").collect();
    assert!(failed[0]["witness"].is_array());
}

#[test]
fn input_errors_exit_2() {
    let dir = scratch("input");
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(code(&run(&["verify", "composition", "--algebra", path(&bad)])), 2);
    assert_eq!(code(&run(&["verify", "composition", "--algebra", "no-such-entry"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["catalog", "list", "--bogus"])), 2);
    assert_eq!(code(&run(&["--field", "R", "catalog", "build", "sym2"])), 2);
    // para-octonion has no δ
    assert_eq!(code(&run(&["verify", "sta", "--algebra", "para-octonion"])), 2);
    assert_eq!(code(&run(&["report", "magic-square", "--max-dim", "3"])), 2);
}

#[test]
fn construct_verify_extract_and_simplicity() {
    let dir = scratch("lie");
    let (a, g, e) = (dir.join("a.json"), dir.join("g.json"), dir.join("e.json"));
    assert_eq!(code(&run(&["catalog", "build", "sym3", "--out", path(&a)])), 0);
    let o = run(&["lie", "construct", "--algebra", path(&a), "--action", "s4", "--out", path(&g)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("dim: 21"));
    assert_eq!(code(&run(&["lie", "verify", "--lie", path(&g), "--jacobi", "full"])), 0);
    let o = run(&["lie", "verify", "--lie", path(&g), "--jacobi", "sample", "--count", "50", "--seed", "9"]);
    assert!(stdout(&o).contains("sampled, seed 9"));
    assert_eq!(code(&run(&["lie", "extract", "--lie", path(&g), "--out", path(&e)])), 0);
    let load = |p: &Path| {
        let mut v: Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("name");
        v
    };
    // the extracted algebra carries no name; everything else is identical
    assert_eq!(load(&a), load(&e));
    assert_eq!(
        std::fs::read_to_string(dir.join("a.delta.json")).unwrap(),
        std::fs::read_to_string(dir.join("e.delta.json")).unwrap()
    );
    let o = run(&["lie", "simple", "--lie", path(&g)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("verdict: simple"));

    let t = dir.join("t.json");
    let h = dir.join("h.json");
    assert_eq!(code(&run(&["catalog", "build", "tensor:para-complex,para-rational", "--out", path(&t)])), 0);
    let o = run(&["lie", "construct", "--algebra", path(&t), "--action", "a4", "--out", path(&h)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("dim: 8"));
    // an STA through the LRTA path is a kind mismatch
    assert_eq!(code(&run(&["lie", "construct", "--algebra", path(&t), "--action", "s4"])), 2);
}

#[test]
fn kantor_verbs() {
    let dir = scratch("kantor");
    for verb in ["build", "psi-check", "af", "s4"] {
        let o = run(&["kantor", verb, "--algebra", "sym3", "--alpha", "-3"]);
        assert_eq!(code(&o), 0, "{verb}: {}", stdout(&o));
    }
    let o = run(&["kantor", "af", "--algebra", "quaternion", "--gamma", "1,1,1"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let k = dir.join("k.json");
    let o = run(&["kantor", "build", "--algebra", "octonion", "--derivations", "full", "--out", path(&k)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("dim: 52"));
    let s = dir.join("s.json");
    assert_eq!(code(&run(&["kantor", "s4", "--algebra", "complex", "--out", path(&s)])), 0);
    assert_eq!(code(&run(&["lie", "verify", "--lie", path(&s)])), 0);
    assert_eq!(code(&run(&["--field", "Q", "kantor", "s4", "--algebra", "complex"])), 2);
    assert_eq!(code(&run(&["kantor", "build", "--algebra", "sym2", "--alpha", "0"])), 2);
}

#[test]
fn thread_count_does_not_change_results() {
    let args = [
        "--json",
        "verify",
        "sta",
        "--algebra",
        "tensor:para-quaternion,para-quaternion",
        "--mode",
        "sample",
        "--count",
        "300",
        "--seed",
        "4",
    ];
    let one = run(&[&["--threads", "1"], &args[..]].concat());
    let four = run(&[&["--threads", "4"], &args[..]].concat());
    assert_eq!(code(&one), 0);
    assert_eq!(stdout(&one), stdout(&four));
    assert!(stdout(&one).contains("\"seed\": 4"));
}
