use std::path::Path;
use std::process::{Command, Output};

fn moorex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_moorex")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn generate(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let path_s = path.to_str().unwrap().to_string();
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--output", &path_s]);
    let o = moorex(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path_s
}

#[test]
fn generate_kautz_and_cycle() {
    let o = moorex(&["generate", "kautz", "--d", "2", "--k", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("graph directed 6 12\n"), "{text}");

    let o = moorex(&["generate", "cycle", "--n", "5"]);
    assert_eq!(stdout(&o), "graph undirected 5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
}

#[test]
fn generate_rejects_composite_q() {
    let o = moorex(&["generate", "polarity", "--q", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("q must be prime"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(moorex(&["generate", "moore_graph"]).status.code(), Some(2));
    assert_eq!(moorex(&["generate", "kautz", "--d", "2"]).status.code(), Some(2));
    assert_eq!(moorex(&["bounds", "--d", "3"]).status.code(), Some(2));
    assert_eq!(moorex(&["table2", "hoffman", "--d", "3"]).status.code(), Some(2));
    assert_eq!(moorex(&["analyze", "/nonexistent/graph"]).status.code(), Some(2));
    assert_eq!(moorex(&["verify", "--suite", "everything"]).status.code(), Some(2));
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.graph");
    std::fs::write(&path, "graph undirected 3 2\n0 1\n1 7\n").unwrap();
    let o = moorex(&["analyze", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn petersen_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = generate(dir.path(), "petersen.graph", &["petersen"]);
    let o = moorex(&["analyze", &path]);
    assert!(o.status.success());
    let text = stdout(&o);
    for line in [
        "  additive_gap: 0\n",
        "  diameter: 2\n",
        "  h_e: 1\n",
        "  lambda_g: 2\n",
        "  regular_degree: 3\n",
    ] {
        assert!(text.contains(line), "missing {line:?}\n{text}");
    }
    assert!(!text.contains("verdict: fail"));
    assert!(text.contains("warnings: []"));
}

#[test]
fn round_trip_matches_family_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&[&str], &str, &str, &str); 4] = [
        (&["kautz", "--d", "2", "--k", "3"], "12", "3", "true"),
        (&["debruijn_digraph", "--b", "2", "--k", "3"], "8", "3", "true"),
        (&["complete_bipartite", "--m", "3"], "6", "2", "false"),
        (&["two_cliques_bridged", "--n", "8"], "8", "3", "false"),
    ];
    for (i, (args, n, k, directed)) in cases.iter().enumerate() {
        let path = generate(dir.path(), &format!("g{i}.graph"), args);
        let o = moorex(&["analyze", &path, "--format", "structured"]);
        assert!(o.status.success());
        let j = stdout(&o);
        assert!(j.contains(&format!("\"n\": {n},")), "{args:?}");
        assert!(j.contains(&format!("\"diameter\": {k},")), "{args:?}");
        assert!(j.contains(&format!("\"directed\": {directed},")), "{args:?}");
    }
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = generate(dir.path(), "tc.graph", &["two_cliques_bridged", "--n", "12"]);
    for fmt in ["text", "structured"] {
        let a = moorex(&["analyze", &path, "--format", fmt]);
        let b = moorex(&["analyze", &path, "--format", fmt]);
        assert_eq!(a.stdout, b.stdout);
    }
    let a = generate(dir.path(), "a.graph", &["polarity", "--q", "5"]);
    let b = generate(dir.path(), "b.graph", &["polarity", "--q", "5"]);
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn two_cliques_flags_small_gap_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let path = generate(dir.path(), "tc12.graph", &["two_cliques_bridged", "--n", "12"]);
    let text = stdout(&moorex(&["analyze", &path]));
    assert!(text.contains("near-zero spectral gap"), "{text}");
    let o = moorex(&["verify", &path]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn disconnected_graph_reports_infinite_diameter() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("split.graph");
    std::fs::write(&path, "graph undirected 4 2\n0 1\n2 3\n").unwrap();
    let o = moorex(&["analyze", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("  diameter: infinite\n"));
    assert!(text.contains("  skipped: diameter is infinite\n"));
    assert!(text.contains("lambda_1: 1\n"));
}

#[test]
fn bounds_tables() {
    let text = stdout(&moorex(&["bounds", "--d", "3", "--k", "2", "--n", "10"]));
    assert!(text.contains("bound: 9/16 (0.5625)"));
    assert!(text.contains("bound: 1/3 (0.333333333333)"));
    assert!(text.contains("id: spectral_k2"));
    assert!(text.contains("bound: 2\n"));

    let text = stdout(&moorex(&["bounds", "--d", "2", "--k", "2", "--n", "7", "--directed"]));
    assert!(text.contains("id: digraph_edge") && text.contains("id: digraph_vertex"));
    assert!(!text.contains("coarse_edge") && !text.contains("refined"));

    let text = stdout(&moorex(&["bounds", "--d", "2", "--k", "3", "--n", "7"]));
    let row = text.split("    -\n").find(|r| r.contains("id: coarse_edge\n")).unwrap();
    assert!(row.contains("status: not_applicable"), "{row}");
}

#[test]
fn table2_families() {
    let text = stdout(&moorex(&["table2", "polarity", "--d", "6"]));
    assert!(text.contains("published: 2/3"));
    assert!(text.contains("flagged: true"));
    let text = stdout(&moorex(&["table2", "mms", "--d", "7"]));
    assert!(text.contains("published: 16/25"));
    let text = stdout(&moorex(&["table2", "kautz", "--d", "3", "--k", "2"]));
    assert!(text.contains("published_matches_idealized: true"));
    assert_eq!(moorex(&["table2", "kautz", "--d", "3"]).status.code(), Some(2));
    assert_eq!(moorex(&["table2", "polarity", "--d", "3", "--k", "3"]).status.code(), Some(2));
}

#[test]
fn verify_petersen_with_tightness_notes() {
    let dir = tempfile::tempdir().unwrap();
    let path = generate(dir.path(), "petersen.graph", &["petersen"]);
    let out = dir.path().join("cert.txt");
    let o = moorex(&["verify", &path, "--output", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(out).unwrap();
    assert!(text.starts_with("checked: "));
    assert!(text.contains("tight: bound equals measurement"));
}

#[test]
fn verify_fails_with_exit_one() {
    // Forcing d = 2 on K_4 understates the Moore bound: n exceeds mu, so
    // the eigenvalue certificate (rhs < 0) must fail.
    let dir = tempfile::tempdir().unwrap();
    let path = generate(dir.path(), "k4.graph", &["complete", "--m", "4"]);
    let o = moorex(&["verify", &path, "--force-d", "2"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(String::from_utf8_lossy(&o.stderr).contains("FAIL"));
}
