use std::process::{Command, Output};

fn qsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsum")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qsum(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

fn eigenvalues(v: &serde_json::Value) -> Vec<f64> {
    v[0]["eigenvalues"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect()
}

#[test]
fn star_plus_three_spectrum() {
    let v = json(&["spectrum", "--family", "star-plus:3", "--kind", "Q"]);
    let want = [4.5616, 2.0, 1.0, 0.4384];
    for (got, want) in eigenvalues(&v).iter().zip(want) {
        assert!((got - want).abs() < 1e-4, "{got} vs {want}");
    }
    assert!((v[0]["f"].as_f64().unwrap() - 0.4384).abs() < 1e-4);
    assert_eq!(v[0]["n"], 4);
    assert_eq!(v[0]["c"], 1);
}

#[test]
fn triangle_spectrum_is_exact() {
    let v = json(&["spectrum", "--g6", "Bw", "--kind", "Q", "--certify"]);
    let eig = eigenvalues(&v);
    assert!((eig[0] - 4.0).abs() < 1e-12 && (eig[1] - 1.0).abs() < 1e-12 && (eig[2] - 1.0).abs() < 1e-12);
    let f = &v[0]["certificate"]["f"];
    assert_eq!(f["lo"]["num"], "1");
    assert_eq!(f["hi"]["num"], "1");
}

#[test]
fn bipartite_double_star_has_equal_spectra() {
    let l = stdout(&["spectrum", "--family", "double-star:2,2", "--kind", "L"]);
    let q = stdout(&["spectrum", "--family", "double-star:2,2", "--kind", "Q"]);
    let strip = |s: &str| s.lines().filter(|l| !l.starts_with("matrix")).collect::<Vec<_>>().join("\n");
    assert_eq!(strip(&l), strip(&q));
}

#[test]
fn edge_list_files_are_read() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.txt");
    std::fs::write(&path, "3 2\n0 1\n1 2\n").unwrap();
    let v = json(&["spectrum", "--file", path.to_str().unwrap()]);
    assert_eq!(v[0]["e"], 2);
    assert_eq!(v[0]["graph6"], "Bg");
}

#[test]
fn parse_failures_exit_two_with_location() {
    let out = qsum(&["spectrum", "--g6", "B!"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 1"));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "3 2\n0 1\n1 7\n").unwrap();
    let out = qsum(&["spectrum", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn enumeration_line_counts() {
    assert_eq!(stdout(&["enumerate", "--edges", "3", "--no-isolated"]).lines().count(), 5);
    assert_eq!(stdout(&["enumerate", "--vertices", "4"]).lines().count(), 11);
    assert_eq!(stdout(&["enumerate", "--vertices", "5", "--trees"]).lines().count(), 3);
}

#[test]
fn enumeration_is_deterministic_across_thread_counts() {
    let one = stdout(&["--parallelism", "1", "enumerate", "--vertices", "6"]);
    let many = stdout(&["--parallelism", "4", "enumerate", "--vertices", "6"]);
    assert_eq!(one, many);
}

#[test]
fn min_f_by_four_edges_is_star_plus() {
    let v = json(&["search", "min-f-edges", "--m", "4"]);
    let k13_plus = stdout(&["--format", "json", "spectrum", "--family", "star-plus:3"]);
    let k13_plus: serde_json::Value = serde_json::from_str(&k13_plus).unwrap();
    assert_eq!(v["unique"], true);
    assert_eq!(v["argext"].as_array().unwrap().len(), 1);
    let canon = stdout(&["enumerate", "--edges", "4", "--connected"]);
    assert!(canon.lines().any(|l| v["argext"][0] == l));
    assert!((v["ext_value"]["lo_approx"].as_f64().unwrap() - k13_plus[0]["f"].as_f64().unwrap()).abs() < 1e-9);
}

#[test]
fn laplacian_equality_on_five_vertices() {
    let v = json(&["search", "laplacian-equality", "--n", "5", "--connected"]);
    assert_eq!(v["argext"].as_array().unwrap().len(), 3);
}

#[test]
fn unicyclic_maximum_on_six_vertices() {
    let v = json(&["search", "max-s2-cycledim", "--n", "6", "--c", "1"]);
    assert_eq!(v["unique"], true);
    assert_eq!(v["argext"][0], "E?Fw");
}

#[test]
fn graph6_stream_search() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.g6");
    std::fs::write(&path, "Bw\nBg\nCN\n").unwrap();
    let v = json(&["search", "stream", "--graph6", path.to_str().unwrap()]);
    assert_eq!(v["argext"][0], "CN");
}

#[test]
fn verify_interlacing_is_deterministic_and_passes() {
    let dir = tempfile::tempdir().unwrap();
    let args = |out: &str| {
        vec!["verify", "interlacing", "--trials", "1000", "--seed", "42", "--no-timing", "--out", out].into_iter().map(String::from).collect::<Vec<_>>()
    };
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    for d in [&a, &b] {
        let argv = args(d.to_str().unwrap());
        let out = qsum(&argv.iter().map(String::as_str).collect::<Vec<_>>());
        assert_eq!(out.status.code(), Some(0));
    }
    let ja = std::fs::read(a.join("reports.json")).unwrap();
    assert_eq!(ja, std::fs::read(b.join("reports.json")).unwrap());
    assert_eq!(std::fs::read(a.join("reports.csv")).unwrap(), std::fs::read(b.join("reports.csv")).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&ja).unwrap();
    assert_eq!(v[0]["status"], "PASS");
    assert_eq!(v[0]["trials"], 1000);
}

#[test]
fn verify_star_plus_bounds_to_one_hundred() {
    let out = qsum(&["verify", "star-plus-bounds", "--n", "7:100"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("star-plus-bounds  PASS"));
}

#[test]
fn failing_suite_exits_one() {
    let out = qsum(&["verify", "subgraph-lemma", "--n-max", "6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("EFz_"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qsum(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(qsum(&["--precision", "31", "enumerate", "--vertices", "3"]).status.code(), Some(2));
    assert_eq!(qsum(&["--parallelism", "0", "enumerate", "--vertices", "3"]).status.code(), Some(2));
    assert_eq!(qsum(&["enumerate", "--vertices", "11"]).status.code(), Some(2));
    assert_eq!(qsum(&["search", "min-f-edges", "--m", "2"]).status.code(), Some(2));
}

#[test]
fn csv_outputs_have_headers() {
    let s = stdout(&["--format", "csv", "verify", "star-plus-identities", "--no-timing"]);
    assert!(s.starts_with("claim_id,status,trials,runtime_ms\n"));
    let s = stdout(&["--format", "csv", "spectrum", "--g6", "Bw"]);
    assert!(s.starts_with("graph,kind,n,e,c,omega,eigenvalues,s2,f\n"));
}
