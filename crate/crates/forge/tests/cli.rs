use std::path::Path;
use std::process::{Command, Output};

use hecke_forge::commands;
use hecke_forge::format::{self, DrinfeldianRepJson, ReportJson};
use serde_json::Value;

fn forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-forge"))
        .args(args)
        .env("HECKE_FORGE_THREADS", "2")
        .output()
        .unwrap()
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn verify_drinfeldian_example() {
    let out = forge(&["verify-drinfeldian", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r: ReportJson = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r.entries.len(), 10);
    assert!(r.passed && r.entries.iter().all(|e| e.status == "PASS"));
}

#[test]
fn cli_is_a_thin_shim() {
    let out = forge(&["verify-uq", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let lib = format::report_to_json(&commands::verify_uq(2).unwrap());
    assert_eq!(serde_json::to_vec_pretty(&lib).unwrap(), out.stdout.trim_ascii_end());
}

#[test]
fn output_is_deterministic() {
    let a = forge(&["verify-hecke", "--l", "3", "--seed", "0x1234"]);
    let b = forge(&["verify-hecke", "--l", "3", "--seed", "0x1234"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn build_functor_bundle_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let bundle = dir.path().join("bundle.json");
    let out = forge(&["build-functor", "--module", "trivial", "--l", "2", "--n", "2", "--out", bundle.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&bundle);
    assert_eq!(v["quotient_dim"], 6);
    assert_eq!(v["report"]["passed"], true);

    let out = forge(&["verify-drinfeldian", "--rep", bundle.to_str().unwrap(), "--hopf"]);
    assert_eq!(out.status.code(), Some(0));
    let out = forge(&["verify-yangian", "--rep", bundle.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    // the module inside the bundle rebuilds the same representation
    let module = dir.path().join("module.json");
    std::fs::write(&module, serde_json::to_string(&v["module"]).unwrap()).unwrap();
    let again = dir.path().join("again.json");
    let out = forge(&["build-functor", "--module", module.to_str().unwrap(), "--n", "2", "--out", again.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&again)["rep"], v["rep"]);
}

#[test]
fn specialized_bundles_are_rechecked() {
    let dir = tempfile::tempdir().unwrap();
    let bundle = dir.path().join("bundle.json");
    forge(&["build-functor", "--module", "sign", "--l", "2", "--n", "2", "--out", bundle.to_str().unwrap()]);
    for binds in [&["--q", "1"][..], &["--eta", "0"], &["--q", "1", "--eta", "0", "--a", "3/2"], &["--q", "2"]] {
        let out_path = dir.path().join("s.json");
        let mut args = vec!["specialize", "--in", bundle.to_str().unwrap(), "--out", out_path.to_str().unwrap()];
        args.extend_from_slice(binds);
        let out = forge(&args);
        assert_eq!(out.status.code(), Some(0), "{binds:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(json(&out_path)["report"]["passed"], true);
    }
}

#[test]
fn singular_specialization_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let elem = dir.path().join("elem.json");
    std::fs::write(
        &elem,
        r#"{"num": [{"coeff": "1", "exp": {"eta": 1}}],
            "den": [{"coeff": "1", "exp": {"q": 1}}, {"coeff": "-1", "exp": {"q": -1}}]}"#,
    )
    .unwrap();
    let out = forge(&["specialize", "--q", "1", "--in", elem.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));

    // the same coefficient inside an affine Hecke element
    let aha = dir.path().join("aha.json");
    let coeff: Value = json(&elem);
    let doc = serde_json::json!({"l": 2, "terms": [{"upows": [1, 0], "word": [1], "coeff": coeff}]});
    std::fs::write(&aha, doc.to_string()).unwrap();
    assert_eq!(forge(&["specialize", "--q", "1", "--in", aha.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(forge(&["specialize", "--q", "2", "--in", aha.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn violations_exit_1_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("rep.json");
    let out = forge(&["export", "eval-rep", "--n", "2", "--out", rep.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let mut r: DrinfeldianRepJson = serde_json::from_str(&std::fs::read_to_string(&rep).unwrap()).unwrap();
    let xi = r.generators.iter_mut().find(|g| g.label == "xi").unwrap();
    let entry = xi.rows[2][0].clone();
    xi.rows[2][0] = xi.rows[2][1].clone();
    xi.rows[2][1] = entry;
    std::fs::write(&rep, serde_json::to_string(&r).unwrap()).unwrap();
    let out = forge(&["verify-drinfeldian", "--rep", rep.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report: ReportJson = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.entries.iter().any(|e| e.status == "FAIL" && e.witness.is_some()));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(forge(&["verify-uq", "--n", "0"]).status.code(), Some(2));
    assert_eq!(forge(&["verify-drinfeldian", "--n", "1"]).status.code(), Some(2));
    assert_eq!(forge(&["verify-hecke", "--l", "1"]).status.code(), Some(2));
    assert_eq!(forge(&["verify-hecke", "--mode", "nope"]).status.code(), Some(2));
    assert_eq!(forge(&["build-functor", "--module", "trivial", "--n", "2"]).status.code(), Some(2));
    assert_eq!(forge(&["build-functor", "--module", "/nonexistent.json", "--n", "2"]).status.code(), Some(2));
    assert_eq!(forge(&["export", "nothing"]).status.code(), Some(2));
    assert_eq!(forge(&["specialize", "--q", "x", "--in", "a.json"]).status.code(), Some(2));
}

#[test]
fn exports_load_back() {
    for args in [
        &["export", "t-operator", "--n", "2"][..],
        &["export", "sigma", "--n", "1", "--l", "3", "--i", "2"],
        &["export", "module", "--module", "sign", "--l", "3", "--a", "2"],
        &["export", "aha-sigma", "--l", "3", "--i", "1"],
        &["export", "aha-u", "--l", "3", "--i", "3"],
    ] {
        let out = forge(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let doc: format::Document = serde_json::from_slice(&out.stdout).unwrap();
        commands::specialize(&doc, &hecke_forge_core::Bindings::new()).unwrap();
    }
}
