use serde_json::Value;
use setcat::cli::{run, EXIT_COUNTEREXAMPLE, EXIT_INVALID, EXIT_OK};

fn data() -> String {
    concat!(env!("CARGO_MANIFEST_DIR"), "/data").to_string()
}

fn setcat(args: &[&str]) -> (i32, Value) {
    let ws = data();
    let argv = ["setcat", "--workspace", ws.as_str()].into_iter().chain(args.iter().copied());
    let (code, out) = run(argv);
    let value = serde_json::from_str(&out).unwrap_or(Value::String(out));
    (code, value)
}

#[test]
fn validate_accepts_bundled_data() {
    for file in ["delta3op.json", "parallel_pair.json", "two.json", "colimit_m.json", "colimit_phi.json", "vertex_inclusion.json"] {
        let (code, v) = setcat(&["validate", file]);
        assert_eq!(code, EXIT_OK, "{file}: {v}");
    }
}

#[test]
fn invalid_input_exits_one() {
    let dir = std::env::temp_dir().join(format!("setcat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("bad.json"), r#"{"objects": ["0"], "morphisms": []}"#).unwrap();
    std::fs::write(dir.join("junk.json"), "{").unwrap();
    let ws = dir.to_string_lossy().to_string();
    for file in ["bad.json", "junk.json", "missing.json"] {
        let (code, out) = run(["setcat", "--workspace", ws.as_str(), "validate", file]);
        assert_eq!(code, EXIT_INVALID, "{file}: {out}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(v["error"].is_string());
    }
    assert_eq!(setcat(&["frobnicate"]).0, EXIT_INVALID);
    assert_eq!(setcat(&["fixtures", "nope"]).0, EXIT_INVALID);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn colimit_counterexample_verbs() {
    let (code, v) = setcat(&["in-ei", "colimit_phi.json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["in_e_i"], true, "{v}");
    let (_, v) = setcat(&["in-mi", "colimit_phi.json"]);
    assert_eq!(v["in_m_i"], false, "{v}");
    let (_, v) = setcat(&["in-m", "colimit_m.json"]);
    assert_eq!(v["in_subcategory"], false, "{v}");
    let (code, v) = setcat(&["eprime-falsify", "colimit_phi.json", "--probe", "colimit_psi.json"]);
    assert_eq!(code, EXIT_COUNTEREXAMPLE);
    assert_eq!(v["verdict"], "counterexample");
    let (code, v) = setcat(&["colimit", "--filtered", "colimit_m.json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["size"], 1, "{v}");
}

#[test]
fn kan_verbs() {
    let (code, v) = setcat(&["ran", "--along", "vertex_inclusion.json", "three_points.json"]);
    assert_eq!(code, EXIT_OK, "{v}");
    let sizes: Vec<usize> = v["sets"].as_object().unwrap().values().map(|s| s.as_array().unwrap().len()).collect();
    assert_eq!(sizes, [3, 9, 27, 81]);
    // the Lan unit lives on presheaves over the source of K, the Ran unit over its target
    assert_eq!(setcat(&["unit", "--along", "vertex_inclusion.json", "--side", "lan", "three_points.json"]).0, EXIT_OK);
    let (code, v) = setcat(&["unit", "--along", "vertex_inclusion.json", "--side", "ran", "three_points.json"]);
    assert_eq!(code, EXIT_INVALID);
    assert_eq!(v["error"], "validation");
}

#[test]
fn sketch_verbs() {
    let (code, v) = setcat(&["preorder", "parallel_pair.json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["leq"].as_array().unwrap().len(), 3, "{v}");
    let (code, v) = setcat(&["lemma51", "lemma51_pullback.json"]);
    assert_eq!(code, EXIT_COUNTEREXAMPLE);
    assert_eq!(v["holds"], false, "{v}");
    let (code, _) = setcat(&["nerve", "two.json"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn output_is_deterministic() {
    let args = ["--seed", "7", "fixtures", "mono-colim"];
    let ws = data();
    let first = run(["setcat", "--workspace", ws.as_str()].into_iter().chain(args));
    let second = run(["setcat", "--workspace", ws.as_str()].into_iter().chain(args));
    assert_eq!(first, second);
    assert_eq!(first.0, EXIT_OK);
}

#[test]
fn deterministic_fixtures_pass() {
    for name in ["categories", "examples-colimit", "cogenerating", "preorders", "lemma51-product"] {
        let (code, v) = setcat(&["fixtures", name]);
        assert_eq!(code, EXIT_OK, "{v}");
        assert_eq!(v["passed"], true);
    }
}
