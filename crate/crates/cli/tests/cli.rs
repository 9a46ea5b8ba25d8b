use std::process::{Command, Output};

use serde_json::Value;

fn distbal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_distbal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn analyze_gp_24_4() {
    let o = distbal(&["analyze", "gp:24,4"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["db"], true);
    assert_eq!(r["sdb"], false);
    assert_eq!(r["witness"]["u_label"], "u_0");
    assert_eq!(r["witness"]["k"], 4);
}

#[test]
fn analyze_qrfolk_triples() {
    let o = distbal(&["analyze", "qrfolk:5", "--triples"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["db"], false);
    let triples = r["triples"].as_array().unwrap();
    // one triple per edge; the reverse arc swaps left and right
    assert_eq!(triples.len(), 40);
    for t in triples {
        assert_eq!(t["central"], 0);
        assert_ne!(t["left"], t["right"], "{t}");
    }
}

#[test]
fn analyze_rejects_invalid_spec() {
    let o = distbal(&["analyze", "gp:4,2"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("gp:4,2"));
    assert!(o.stdout.is_empty());
}

#[test]
fn analyze_checks_permutation() {
    let dir = tempfile::tempdir().unwrap();
    let perm = dir.path().join("rho.json");
    // rotation of GP(5,2): u_i -> u_{i+1}, v_i -> v_{i+1}
    std::fs::write(&perm, "[1,2,3,4,0,6,7,8,9,5]").unwrap();
    let o = distbal(&["analyze", "gp:5,2", "--check-perm", perm.to_str().unwrap()]);
    assert_eq!(json(&o)["automorphism"], true);
    std::fs::write(&perm, "[1,0,2,3,4,5,6,7,8,9]").unwrap();
    let o = distbal(&["analyze", "gp:5,2", "--check-perm", perm.to_str().unwrap()]);
    assert_eq!(json(&o)["automorphism"], false);
    std::fs::write(&perm, "[0,0,1]").unwrap();
    let o = distbal(&["analyze", "gp:5,2", "--check-perm", perm.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

const CENSUS: &str = "\
family,n,k,predicted_sdb,oracle_sdb,agree,vt,db,diameter
gp,24,4,,false,,false,true,6
gp,35,8,,false,,false,true,7
gp,35,13,,false,,false,true,7
gp,40,12,,false,,false,true,7
gp,44,16,,false,,false,true,8
gp,48,6,,false,,false,true,8
gp,54,10,,false,,false,true,8
gp,60,18,,false,,false,true,8
";

#[test]
fn sweep_census_golden() {
    let o = distbal(&["sweep", "gp", "--n-max", "60", "--filter", "db-not-sdb"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), CENSUS);
}

#[test]
fn sweep_qrfolk_never_balanced() {
    let o = distbal(&["sweep", "qrfolk", "--p-max", "23", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    let rows = r["rows"].as_array().unwrap();
    let ps: Vec<i64> = rows.iter().map(|r| r["n"].as_i64().unwrap()).collect();
    assert_eq!(ps, [5, 7, 11, 13, 17, 19, 23]);
    assert!(rows.iter().all(|r| r["db"] == false && r["diameter"] == 4));
    assert_eq!(r["summary"]["db"], 0);
}

#[test]
fn sweep_family_marks_out_of_domain() {
    let o = distbal(&["sweep", "3km3", "--k-min", "2", "--k-max", "5"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[1], "3km3,3,2,true,true,true,true,true,2");
    assert!(lines[2].starts_with("3km3,6,3,out-of-domain,,"), "{}", lines[2]);
    assert_eq!(lines.len(), 5);
}

#[test]
fn sweep_rejects_bad_range() {
    assert_eq!(code(&distbal(&["sweep", "gp", "--n-max", "0"])), 2);
    assert_eq!(code(&distbal(&["sweep", "5k1", "--k-min", "4", "--k-max", "2"])), 2);
    assert_eq!(code(&distbal(&["sweep", "gp", "--format", "dot"])), 2);
}

#[test]
fn verify_thm47() {
    let o = distbal(&["verify", "thm4.7", "--k-max", "16"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn verify_lemma43() {
    let o = distbal(&["verify", "lemma4.3", "--k", "13"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("ok")).count(), 9);
    assert!(text.ends_with("lemma4.3: 9/9 checks passed\n"));
}

#[test]
fn verify_reports_mismatch_with_exit_one() {
    // the k=1 closed form does not account for GP(26,5)
    let o = distbal(&["verify", "prop4.2", "--k", "5"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn verify_json_output() {
    let o = distbal(&["verify", "cor4.4", "--k", "13", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["claim"], "cor4.4");
    assert_eq!(r["passed"], true);
}

#[test]
fn verify_unknown_claim() {
    let o = distbal(&["verify", "nosuch"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("nosuch"));
}

#[test]
fn export_first_lines() {
    let o = distbal(&["export", "gp:5,2", "--format", "edgelist"]);
    assert_eq!(stdout(&o).lines().next(), Some("10 15"));
    let o = distbal(&["export", "qrfolk:5"]);
    assert_eq!(stdout(&o).lines().next(), Some("20 40"));
    let o = distbal(&["export", "gp:5,2", "--format", "dot"]);
    assert!(stdout(&o).starts_with("graph G {\n"));
}

#[test]
fn export_rejects_png() {
    assert_eq!(code(&distbal(&["export", "gp:5,2", "--format", "png"])), 2);
    assert_eq!(code(&distbal(&["export", "gp:5,2", "--format", "json"])), 2);
}

#[test]
fn export_then_analyze_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for spec in ["gp:24,4", "qrfolk:7", "gp:10,3", "tetra:5;1,4;0;0;2,3"] {
        let path = dir.path().join("g.txt");
        let o = distbal(&["export", spec, "--out", path.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
        assert!(o.stdout.is_empty());
        let mut direct = json(&distbal(&["analyze", spec, "--triples"]));
        let mut file = json(&distbal(&["analyze", path.to_str().unwrap(), "--triples"]));
        // the source string and the closed-form vt flag belong to the spec only
        for r in [&mut direct, &mut file] {
            let obj = r.as_object_mut().unwrap();
            obj.remove("spec");
            obj.remove("vt");
            // labels differ; vertex ids do not
            if let Some(w) = obj.get_mut("witness").and_then(Value::as_object_mut) {
                w.remove("u_label");
                w.remove("v_label");
            }
        }
        assert_eq!(direct, file, "{spec}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["sweep", "gp", "--n-max", "30", "--format", "json"][..],
        &["sweep", "gp", "--n-max", "30", "--jobs", "1"][..],
        &["analyze", "qrfolk:7", "--triples"][..],
        &["verify", "cor4.6"][..],
    ] {
        let a = stdout(&distbal(args));
        let b = stdout(&distbal(args));
        assert_eq!(a, b, "{args:?}");
    }
    let one = stdout(&distbal(&["sweep", "gp", "--n-max", "30", "--jobs", "1"]));
    let many = stdout(&distbal(&["sweep", "gp", "--n-max", "30", "--jobs", "4"]));
    assert_eq!(one, many);
}

#[test]
fn meta_goes_to_stderr() {
    let plain = distbal(&["analyze", "gp:10,2"]);
    let with_meta = distbal(&["analyze", "gp:10,2", "--meta"]);
    assert_eq!(plain.stdout, with_meta.stdout);
    let meta: Value = serde_json::from_slice(&with_meta.stderr).unwrap();
    assert_eq!(meta["command"], "analyze");
}

#[test]
fn analyze_table_and_disconnected_file() {
    let o = distbal(&["analyze", "gp:10,2", "--format", "table"]);
    assert!(stdout(&o).contains("sdb        true\n"));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two.txt");
    std::fs::write(&path, "4 2\n0 1\n2 3\n").unwrap();
    assert_eq!(code(&distbal(&["analyze", path.to_str().unwrap()])), 2);
}
