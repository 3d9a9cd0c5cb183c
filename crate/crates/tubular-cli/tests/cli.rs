use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn tubular(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tubular")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json_of(args: &[&str]) -> Value {
    let o = tubular(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).expect("json output")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tubular-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn every_example_verifies() {
    let list = stdout(&tubular(&["example", "--list"]));
    let names: Vec<&str> = list.lines().collect();
    assert_eq!(names.len(), 7);
    for name in names {
        let o = tubular(&["example", name, "--verify"]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
        assert!(stdout(&o).ends_with(" failed\n"));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

#[test]
fn json_check_report() {
    let v = json_of(&["example", "canonical-333", "--verify", "--json"]);
    assert_eq!(v["status"], "pass");
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        for key in ["name", "expected", "got", "provenance"] {
            assert!(c.get(key).is_some(), "missing {key}");
        }
        assert_eq!(c["expected"], c["got"]);
    }
    let t = json_of(&["example", "trivext-333", "--verify", "--json"]);
    assert_eq!(t["status"], "pass");
}

#[test]
fn gamma_232_dot() {
    let o = tubular(&["tube", "build", "-p", "2", "-n", "3", "-m", "2", "--depth", "4", "--emit", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("\"Y1[1]\" [shape=doubleoctagon]"));
    assert!(dot.contains("\"Y2[1]\" [shape=doubleoctagon]"));
    assert!(dot.contains("\"X1[1]\" [shape=box]"));
    assert!(dot.contains("\"X0[1]\" -> \"Z2[1]\" [style=dashed, constraint=false"));
    assert_eq!(dot, stdout(&tubular(&["tube", "dot", "-p", "2", "-n", "3", "-m", "2", "--depth", "4"])));
}

#[test]
fn tube_json_and_rays() {
    let t = json_of(&["tube", "build", "-p", "2", "-n", "3", "-m", "2"]);
    assert_eq!(t["vertices"].as_array().unwrap().len(), 24);
    assert_eq!(t["projective"].as_array().unwrap().len(), 3);
    let r = json_of(&["tube", "rays", "-p", "2", "-n", "3", "-m", "2", "--depth", "8"]);
    assert_eq!(r["rays"].as_array().unwrap().len(), 6);
    assert_eq!(r["corays"].as_array().unwrap().len(), 5);
    let v = json_of(&["tube", "validate", "-p", "1", "-n", "2", "-m", "1", "--depth", "6"]);
    assert_eq!(v["status"], "ok");
}

#[test]
fn insertion_matches_build() {
    let inserted = json_of(&["tube", "insert", "-p", "1", "-n", "1", "--depth", "8", "--ray", "X1[1]"]);
    let built = json_of(&["tube", "build", "-p", "1", "-n", "2", "--depth", "7"]);
    assert_eq!(inserted, built);
    let inserted = json_of(&["tube", "insert", "-p", "1", "-n", "2", "-m", "1", "--depth", "8", "--coray", "X1[1]"]);
    let built = json_of(&["tube", "build", "-p", "1", "-n", "2", "-m", "2", "--depth", "7"]);
    assert_eq!(inserted, built);
    assert_eq!(tubular(&["tube", "insert", "-n", "2", "--depth", "8", "--ray", "X1[2]"]).status.code(), Some(2));
}

#[test]
fn ziegler_commands() {
    let c = json_of(&["zg", "closure", "-p", "2", "-n", "3", "-m", "2", "--subset", r#"{"vertices": [["X", 1, 2]]}"#]);
    assert_eq!(c["points"].as_array().unwrap().len(), 0);
    let c = json_of(&["zg", "closure", "-p", "2", "-n", "3", "-m", "2", "--subset", r#"{"ray_tails": [{"ray": 0, "from": 3}]}"#]);
    let points: Vec<&str> = c["points"].as_array().unwrap().iter().map(|p| p.as_str().unwrap()).collect();
    assert!(points.contains(&"prufer:0") && points.contains(&"generic"));
    let open = json_of(&["zg", "isclosed", "-p", "2", "-n", "3", "-m", "2", "--subset", r#"{"points": ["prufer:1"]}"#]);
    assert_eq!(open["closed"], false);
    let closed = json_of(&["zg", "isclosed", "-p", "2", "-n", "3", "-m", "2", "--subset", r#"{"points": ["prufer:1", "generic"]}"#]);
    assert_eq!(closed["closed"], true);
    assert_eq!(json_of(&["zg", "cbrank", "-p", "2", "-n", "3", "-m", "2", "--point", "generic"])["rank"], 2);
    assert_eq!(json_of(&["zg", "cbrank", "-n", "1", "--point", "adic:0"])["rank"], 1);
    assert_eq!(json_of(&["zg", "cbrank", "-n", "1", "--point", "X1[4]"])["rank"], 0);
    let summary = json_of(&["zg", "cbrank", "-p", "2", "-n", "3", "-m", "2"]);
    assert_eq!(summary["prufer"], 6);
    assert_eq!(summary["adic"], 5);
    assert_eq!(summary["space_cb_rank"], 2);
}

#[test]
fn spectrum_cover_commands() {
    let te = json_of(&["zg", "cover", "--type", "(3,3,3)"]);
    assert_eq!(te["pieces"].as_array().unwrap().len(), 6);
    let g = json_of(&["zg", "cover", "--type", "(2,3,6)", "--period", "2"]);
    assert_eq!(g["pieces"].as_array().unwrap().len(), 12);
    let subset = r#"{"Zg(D_0)": {"closed": true}, "cl(T_1)": {"ray_tails": [{"ray": 0, "from": 1}]}}"#;
    let r = json_of(&["zg", "cover", "--e", "1", "--period", "1", "--subset", subset]);
    assert_eq!(r["closed"], false);
    let subset = r#"{"cl(T_1)": {"points": ["generic"]}, "Zg(D_1)": {"closed": true}}"#;
    assert_eq!(json_of(&["zg", "cover", "--e", "1", "--period", "1", "--subset", subset])["closed"], true);
    assert_eq!(tubular(&["zg", "cover", "--type", "(2,2,3)"]).status.code(), Some(2));
}

#[test]
fn algebra_from_files() {
    let q = scratch(
        "a3.json",
        r#"{"vertices": ["1", "2", "3"], "arrows": [{"label": "a", "src": "1", "tgt": "2"}, {"label": "b", "src": "2", "tgt": "3"}]}"#,
    );
    let r = scratch("a3-rel.json", r#"[[{"coef": "1", "path": ["b", "a"]}]]"#);
    let free = json_of(&["algebra", "build", "--quiver", q.to_str().unwrap()]);
    assert_eq!(free["dim"], 6);
    let bound = json_of(&["algebra", "build", "--quiver", q.to_str().unwrap(), "--relations", r.to_str().unwrap()]);
    assert_eq!(bound["dim"], 5);
    assert_eq!(bound["nilpotency"], 2);
    assert_eq!(bound["ext_quiver"]["arrows"].as_array().unwrap().len(), 2);
    let bad = scratch("bad-rel.json", r#"[[{"coef": "1", "path": ["a"]}]]"#);
    let o = tubular(&["algebra", "build", "--quiver", q.to_str().unwrap(), "--relations", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn module_commands() {
    assert_eq!(json_of(&["rep", "hom", "--example", "kronecker", "--from", "R:2", "--to", "R:2"])["hom_dim"], 1);
    assert_eq!(json_of(&["rep", "hom", "--example", "kronecker", "--from", "R:2", "--to", "R:3"])["hom_dim"], 0);
    assert_eq!(json_of(&["rep", "hom", "--example", "kronecker", "--from", "P:c1", "--to", "P:c2"])["hom_dim"], 2);
    let tau = json_of(&["rep", "tau", "--example", "kronecker", "--module", "I:c1"]);
    assert_eq!(tau["dims"]["c1"], 3);
    assert_eq!(tau["dims"]["c2"], 4);
    let zero = json_of(&["rep", "tau", "--example", "kronecker", "--module", "P:c2"]);
    assert_eq!(zero["dims"]["c1"], 0);
    let back = json_of(&["rep", "tau", "--inverse", "--example", "kronecker", "--module", "P:c1"]);
    assert_eq!((back["dims"]["c1"].as_u64(), back["dims"]["c2"].as_u64()), (Some(3), Some(2)));
    let file = scratch("r5.json", r#"{"algebra": "kronecker", "dims": {"c1": 1, "c2": 1}, "maps": {"b1": [["5"]], "b2": [["1"]]}}"#);
    assert_eq!(json_of(&["rep", "indec", "--module", file.to_str().unwrap()])["indecomposable"], true);
    let split = r#"{"dims": {"c1": 1, "c2": 1}, "maps": {}}"#;
    assert_eq!(json_of(&["rep", "indec", "--example", "kronecker", "--module", split])["indecomposable"], false);
    let broken = r#"{"dims": {"c1": 1, "c2": 1}, "maps": {"b1": [["1", "2"]]}}"#;
    assert_eq!(tubular(&["rep", "indec", "--example", "kronecker", "--module", broken]).status.code(), Some(2));
}

#[test]
fn construction_commands() {
    let ext = json_of(&["construct", "ope", "--example", "kronecker", "--module", "R:3"]);
    assert_eq!(ext["dim"], 4 + 1 + 2);
    assert_eq!(ext["new_vertex"], "w");
    let co = json_of(&["construct", "opc", "--example", "kronecker", "--module", "R:3"]);
    assert_eq!(co["dim"], 7);
    let asnm = json_of(&["construct", "asnm", "--example", "kronecker", "--module", "R:2", "-n", "2", "-m", "2"]);
    assert_eq!(asnm["quiver"]["vertices"].as_array().unwrap().len(), 6);
    let te = json_of(&["construct", "trivext", "--example", "canonical-333"]);
    assert_eq!((te["base_dim"].as_u64(), te["dim"].as_u64()), (Some(25), Some(50)));
    assert_eq!(te["socle_dim"], 8);
    let w = json_of(&["construct", "repwindow", "--example", "kronecker", "--levels", "-1..1"]);
    assert_eq!(w["objects"].as_array().unwrap().len(), 6);
    let one_sided = tubular(&["construct", "socle", "--example", "kronecker"]);
    assert_eq!(one_sided.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&one_sided.stderr).contains("socles differ"));
}

#[test]
fn covering_commands() {
    let c = json_of(&["cover", "check", "--example", "kronecker", "--period", "2", "--levels", "-1..1"]);
    assert_eq!(c["functor"], "ok");
    assert_eq!(c["covering"], "ok");
    let l = json_of(&["cover", "lift", "--example", "kronecker", "--element", "b1@0", "--object", "c2@-1"]);
    assert_eq!(l["lift"].as_array().unwrap().len(), 1);
    let p = json_of(&["cover", "pushdown", "--example", "kronecker", "--module", "P:c2@-1"]);
    assert_eq!(p["total_dim"], 3 + 1);
    let top = tubular(&["cover", "pushdown", "--example", "kronecker", "--module", "P:c2@1"]);
    assert_eq!(top.status.code(), Some(2));
}

#[test]
fn bad_input_exits_2() {
    for args in [
        vec!["example", "nope", "--verify"],
        vec!["tube", "build", "-n", "1", "-m", "2"],
        vec!["algebra", "build", "--example", "nope"],
        vec!["--emit", "dot", "zg", "cbrank", "-n", "1"],
        vec!["zg", "closure", "-n", "1", "--subset", "{\"points\": [\"prufer:9\"]}"],
        vec!["construct", "repwindow", "--example", "kronecker", "--levels", "2..1"],
        vec!["frobnicate"],
    ] {
        let o = tubular(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["tube", "build", "-p", "2", "-n", "3", "-m", "2", "--emit", "dot"],
        vec!["example", "kronecker-S22", "--verify", "--json"],
        vec!["zg", "cover", "--type", "(2,4,4)", "--period", "2"],
        vec!["rep", "tau", "--example", "e6", "--module", "X"],
        vec!["construct", "ope", "--example", "e6", "--module", "X"],
    ] {
        assert_eq!(tubular(&args).stdout, tubular(&args).stdout, "{args:?}");
    }
}
