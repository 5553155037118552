use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use lrtwist::catalog::{Catalog, Payload};
use lrtwist::hopf::{build_lr_smash_unchecked, regular_bicomodule};
use lrtwist::io::parse_document;
use lrtwist::twisted::build_lr_product;
use serde_json::Value;
use tempfile::TempDir;

fn lrtwist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrtwist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(out)))
}

fn export(dir: &TempDir, id: &str) -> PathBuf {
    let path = dir.path().join(format!("{id}.json"));
    let out = lrtwist(&["catalog", "export", id, "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn last_algebra(path: &Path) -> lrtwist::algebra::Algebra {
    match parse_document(&fs::read_to_string(path).unwrap()).unwrap().last() {
        Some((_, Payload::Algebra(a))) => a.clone(),
        other => panic!("expected an algebra, got {:?}", other.map(|(l, p)| (l, p.kind()))),
    }
}

#[test]
fn exported_entries_check() {
    let dir = TempDir::new().unwrap();
    for id in ["kc2", "h4", "clifford", "ydl", "h4-cocycle", "triple-diagonal"] {
        let path = export(&dir, id);
        let out = lrtwist(&["check", s(&path)]);
        assert_eq!(code(&out), 0, "{id}: {}", stdout(&out));
        assert!(stdout(&out).ends_with("PASS\n"));
    }
}

#[test]
fn catalog_list_names_every_entry() {
    let out = lrtwist(&["--format", "json", "catalog", "list"]);
    assert_eq!(code(&out), 0);
    let listed: Vec<String> = json(&out)["data"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["id"].as_str().unwrap().to_string())
        .collect();
    let cat = Catalog::load().unwrap();
    let ids: Vec<String> = cat.entries().iter().map(|e| e.id.clone()).collect();
    assert_eq!(listed, ids);
}

#[test]
fn nonassociative_input_fails_with_a_witness() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.json");
    // a·a = b, a·b = a, everything else beyond the unit is zero
    fs::write(
        &path,
        r#"{"field": "Q", "dim": 3, "unit": [1, 0, 0],
            "mult": [[[1,0,0],[0,1,0],[0,0,1]], [[0,1,0],[0,0,1],[0,1,0]], [[0,0,1],[0,0,0],[0,0,0]]]}"#,
    )
    .unwrap();
    let out = lrtwist(&["--format", "json", "check", s(&path)]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["exit_code"], 1);
    let assoc = v["reports"][0]["outcomes"]
        .as_array()
        .unwrap()
        .iter()
        .find(|o| o["label"] == "assoc")
        .unwrap()
        .clone();
    // (aa)a = ba = 0 while a(aa) = ab = a
    let w = &assoc["witness"]["assignment"];
    assert_eq!(w, &serde_json::json!([["x", "e1"], ["y", "e1"], ["z", "e1"]]));
    assert_eq!(assoc["violations"], 4);
}

#[test]
fn malformed_input_is_an_error_with_a_location() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("broken.json");
    fs::write(
        &path,
        "{\"field\": \"Q\",\n \"blocks\": [{\"kind\": \"R\", \"label\": \"R\", \"a\": \"nope\"}]}",
    )
    .unwrap();
    let out = lrtwist(&["check", s(&path)]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");

    let out = lrtwist(&["check", s(&path), "--kind", "nonsense"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn field_mismatch_is_refused() {
    let dir = TempDir::new().unwrap();
    let path = export(&dir, "kc2");
    assert_eq!(code(&lrtwist(&["check", s(&path), "--field", "F3"])), 2);
    assert_eq!(code(&lrtwist(&["check", s(&path), "--field", "Q"])), 0);
}

#[test]
fn twist_data_passes_every_stage() {
    let dir = TempDir::new().unwrap();
    let path = export(&dir, "bicharacter-twist");
    let out = lrtwist(&["--format", "json", "check", s(&path), "--kind", "twistdata"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));

    let pair = dir.path().join("twisted-pair.json");
    let out = lrtwist(&["--format", "json", "invariance", s(&path), "--out", s(&pair)]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let subjects: Vec<String> = json(&out)["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["subject"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(subjects.len(), 4, "{subjects:?}");
    assert_eq!(code(&lrtwist(&["check", s(&pair)])), 0);
}

#[test]
fn cocycle_invariance_against_the_smash_pair() {
    let dir = TempDir::new().unwrap();
    let cocycle = fs::read_to_string(export(&dir, "h4-coboundary")).unwrap();
    let module = fs::read_to_string(export(&dir, "h4-bimodule")).unwrap();
    // one document holding both: the bimodule blocks, then the cocycle's
    let mut doc: Value = serde_json::from_str(&module).unwrap();
    let extra: Value = serde_json::from_str(&cocycle).unwrap();
    let blocks = doc["blocks"].as_array_mut().unwrap();
    for b in extra["blocks"].as_array().unwrap() {
        if !blocks.iter().any(|x| x["label"] == b["label"]) {
            blocks.push(b.clone());
        }
    }
    let path = dir.path().join("both.json");
    fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let out = lrtwist(&["invariance", s(&path)]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn lr_product_of_the_quantum_plane() {
    let dir = TempDir::new().unwrap();
    let path = export(&dir, "diagonal-2-2");
    let out_path = dir.path().join("product.json");
    let out = lrtwist(&["build", s(&path), "lr", "--out", s(&out_path)]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let built = last_algebra(&out_path);
    assert_eq!(built.dim(), 4);
    let cat = Catalog::load().unwrap();
    let Some(Payload::LRPair(pair)) = cat.get("diagonal-2-2").map(|e| &e.payload) else {
        panic!()
    };
    assert_eq!(built.mult(), build_lr_product(pair).unwrap().mult());

    let text = fs::read_to_string(&out_path).unwrap();
    assert!(text.contains("\"table\""));
    assert!(text.contains("e_1⊗f_0 · e_0⊗f_1"), "{text}");
    assert_eq!(code(&lrtwist(&["check", s(&out_path)])), 0);
}

#[test]
fn every_product_kind_builds_and_checks() {
    let dir = TempDir::new().unwrap();
    let cases = [
        ("clifford", "twisted"),
        ("diagonal-3-2-3", "q"),
        ("diagonal-3-2-3", "lr"),
        ("h4-bimodule", "smash"),
        ("triple-trivial", "iterated"),
        ("triple-clifford", "iterated"),
        ("bicharacter-twist", "bullet"),
        ("twistor-clifford", "twistor"),
    ];
    for (id, product) in cases {
        let path = export(&dir, id);
        let out_path = dir.path().join(format!("{id}-{product}.out.json"));
        let out = lrtwist(&["build", s(&path), product, "--out", s(&out_path)]);
        assert_eq!(code(&out), 0, "{id} {product}: {}", stdout(&out));
        assert!(stdout(&out).contains("round-trip"));
        let check = lrtwist(&["check", s(&out_path)]);
        assert_eq!(code(&check), 0, "{id} {product}: {}", stdout(&check));
    }
}

#[test]
fn smash_build_matches_the_library() {
    let dir = TempDir::new().unwrap();
    let path = export(&dir, "h4-bimodule");
    let out_path = dir.path().join("smash.json");
    assert_eq!(code(&lrtwist(&["build", s(&path), "smash", "--out", s(&out_path)])), 0);
    let cat = Catalog::load().unwrap();
    let Some(Payload::Bimodule(m)) = cat.get("h4-bimodule").map(|e| &e.payload) else {
        panic!()
    };
    let expected = build_lr_smash_unchecked(m, &regular_bicomodule(m.h()));
    assert_eq!(last_algebra(&out_path).mult(), expected.mult());

    let out = lrtwist(&["smash", s(&path)]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn precondition_failure_exits_one_unless_forced() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("tw.json");
    // R(1⊗x) = 2·x⊗1 breaks unitality
    fs::write(
        &path,
        r#"{"field": "Q", "blocks": [
            {"kind": "algebra", "label": "X", "dim": 2, "unit": [1, 0], "mult": [[[1,0],[0,1]], [[0,1],[0,0]]]},
            {"kind": "R", "label": "R", "a": "X", "b": "X",
             "matrix": [[1,0,0,0],[0,0,1,0],[0,2,0,0],[0,0,0,1]]}]}"#,
    )
    .unwrap();
    let out = lrtwist(&["build", s(&path), "twisted"]);
    assert_eq!(code(&out), 1, "{}", stdout(&out));
    assert!(stdout(&out).contains("FAIL"));
    assert!(stdout(&out).contains("precondition failed"));
    let out = lrtwist(&["build", s(&path), "twisted", "--force"]);
    assert_ne!(code(&out), 2, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn iterate_reports_both_outer_pairs() {
    let dir = TempDir::new().unwrap();
    let path = export(&dir, "triple-diagonal");
    let out = lrtwist(&["--format", "json", "iterate", s(&path)]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    // hexagons, (V1, T1), (V2, T2), the comparison, the output algebra
    assert_eq!(json(&out)["reports"].as_array().unwrap().len(), 5);

    let ydl = export(&dir, "ydl");
    let out = lrtwist(&["iterate", s(&ydl), "--module", "sign-bimodule"]);
    assert_ne!(code(&out), 0, "the ydl document carries no sign-bimodule block");
}

#[test]
fn detwist_writes_a_twisting_map() {
    let dir = TempDir::new().unwrap();
    let path = export(&dir, "diagonal-3-2-3");
    let p = dir.path().join("p.json");
    let out = lrtwist(&["detwist", s(&path), "--out", s(&p)]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let out = lrtwist(&["check", s(&p), "--kind", "R"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn exhaustive_census_finds_the_flip() {
    let out = lrtwist(&["--format", "json", "search", "--a", "kc2", "--b", "kc2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!(v["notes"]
        .as_array()
        .unwrap()
        .iter()
        .any(|n| n == "flip among the valid maps: true"));
    assert_eq!(v["data"]["field"], "F2");
}

#[test]
fn random_census_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let run = |name: &str, jobs: &str| {
        let path = dir.path().join(name);
        let out = lrtwist(&[
            "--jobs",
            jobs,
            "search",
            "--a",
            "x3",
            "--b",
            "x2",
            "--field",
            "F3",
            "--target",
            "rq",
            "--mode",
            "random",
            "--seed",
            "11",
            "--budget",
            "300",
            "--out",
            s(&path),
        ]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        assert!(stdout(&out).contains("partial"));
        fs::read(path).unwrap()
    };
    let first = run("one.json", "1");
    assert_eq!(first, run("two.json", "1"));
    assert_eq!(first, run("three.json", "2"));
}

#[test]
fn oversized_search_is_refused() {
    let dir = TempDir::new().unwrap();
    let klein = export(&dir, "klein");
    let which = format!("{}:klein", s(&klein));
    let out = lrtwist(&["search", "--a", &which, "--b", "kc2", "--field", "Q"]);
    assert_eq!(code(&out), 2);
    assert_eq!(code(&lrtwist(&["search", "--a", "nowhere", "--b", "kc2"])), 2);
}
