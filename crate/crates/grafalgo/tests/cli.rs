use std::io::Write;
use std::process::{Command, Stdio};

use grafalgo::cli;

const MST6: &str = include_str!("fixtures/mst6.txt");
const SPT6: &str = include_str!("fixtures/spt6.txt");
const FLOW10: &str = include_str!("fixtures/flow10.txt");

fn run(args: &[&str], input: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("grafalgo").chain(args.iter().copied());
    let status = cli::run(argv, &mut input.as_bytes(), &mut out, &mut err);
    (status, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str], input: &str) -> String {
    let (status, out, err) = run(args, input);
    assert_eq!(status, 0, "{args:?}: {err}");
    out
}

#[test]
fn mst_pipeline_shape() {
    let graph = ok(&["randGraph", "wgraph", "6", "8", "1", "9", "1", "0"], "");
    let out = ok(&["testMst", "kruskal", "show", "verify"], &graph);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("mst weight: "));
    let rest: Vec<&str> = lines.collect();
    let blank = rest.iter().position(|l| l.is_empty()).unwrap();
    assert_eq!(rest[..blank].join("\n"), graph.trim_end());
    let edges = rest[blank + 1..].join(" ");
    assert_eq!(edges.matches('(').count(), 5);
}

#[test]
fn mst_of_listing() {
    let out = ok(&["testmst", "prim"], MST6);
    assert_eq!(out, "mst weight: 33\n");
}

#[test]
fn spt_pipeline_shape() {
    let out = ok(&["testSpt", "dijkstra", "show", "verify"], SPT6);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "distance sum is 25");
    let blank = lines.iter().position(|l| l.is_empty()).unwrap();
    assert_eq!(lines[1..blank].join("\n"), SPT6.trim_end());
    let dist = lines[blank + 1];
    assert_eq!(dist.split_whitespace().filter(|w| w.parse::<i64>().is_ok()).count(), 6);
    assert!(lines.len() > blank + 2, "tree edges follow the distances");
}

#[test]
fn max_flow_of_listing() {
    assert!(ok(&["testMaxFlo", "dinic", "show"], FLOW10).starts_with("total flow of 17\n"));
    assert_eq!(ok(&["testmaxflo", "--given", "verify"], FLOW10).lines().next(), Some("total flow of 17"));
}

#[test]
fn corrupted_flow_fails_verification() {
    // 16 units leave i but only 15 of them enter b
    let bad = FLOW10.replace("[i->: b(16,16)", "[i->: b(16,15)");
    let (status, _, err) = run(&["testmaxflo", "--given", "verify"], &bad);
    assert_eq!(status, 1);
    assert!(err.starts_with("verification failed"), "{err}");
}

#[test]
fn usage_errors_exit_2() {
    let (status, _, err) = run(&["testmst", "boruvka"], MST6);
    assert_eq!(status, 2);
    assert!(err.contains("unknown algorithm"));

    let (status, _, err) = run(&["testmst", "prim"], "{\n[a: b(1)\n}\n");
    assert_eq!(status, 2);
    assert!(err.contains("line 2, column"), "{err}");

    assert_eq!(run(&["randgraph", "wgraph", "6", "8", "1"], "").0, 2);
    assert_eq!(run(&["randgraph", "hypergraph", "6", "8", "1", "0"], "").0, 2);
    assert_eq!(run(&["nosuch"], "").0, 2);
    assert_eq!(run(&["time", "mst", "prim", "10", "20", "0", "1"], "").0, 2);
}

#[test]
fn randgraph_is_deterministic() {
    let args = ["randgraph", "wgraph", "6", "8", "1", "9", "1", "0"];
    assert_eq!(ok(&args, ""), ok(&args, ""));
    assert_ne!(ok(&args, ""), ok(&["randgraph", "wgraph", "6", "8", "1", "9", "2", "0"], ""));
}

#[test]
fn tree_arity() {
    let out = ok(&["randgraph", "tree", "5", "4", "1", "0"], "");
    let g = grafalgo::text::graph_from_text(&out, false).unwrap();
    assert_eq!((g.n(), g.m()), (5, 4));
    assert_eq!(run(&["randgraph", "tree", "5", "6", "1", "0"], "").0, 2);
}

#[test]
fn timing_table() {
    for (reps, rows) in [(1, 1), (5, 5)] {
        let out = ok(&["time", "mst", "kruskal", "50", "200", &reps.to_string(), "7"], "");
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "rep,seed,millis");
        assert_eq!(lines.len(), rows + 2);
        for (i, row) in lines[1..=rows].iter().enumerate() {
            let cells: Vec<&str> = row.split(',').collect();
            assert_eq!(cells[..2], [(i + 1).to_string(), (7 + i).to_string()]);
            assert!(cells[2].parse::<f64>().unwrap() >= 0.0);
        }
        assert!(lines[rows + 1].starts_with("mean,,"));
    }
}

#[test]
fn every_problem_times() {
    for (problem, algo) in [
        ("mst", "primf"),
        ("spt", "bellmanmoore"),
        ("apsp", "floyd"),
        ("maxflo", "dinic"),
        ("mcf", "lc"),
        ("match", "hopcroftkarp"),
        ("match", "hungarian"),
        ("ecolor", "gabow"),
    ] {
        ok(&["time", problem, algo, "30", "90", "2", "1"], "");
    }
}

/// Each generator output is accepted by the testers of the matching problem.
#[test]
fn generator_output_feeds_every_tester() {
    let cases: &[(&[&str], &[&[&str]])] = &[
        (&["wgraph", "20", "60", "1", "50", "3", "1"], &[&["testmst", "cheritontarjan", "verify"]]),
        (
            &["wdigraph", "20", "60", "1", "50", "3", "1"],
            &[&["testspt", "bellmanmoore", "verify"], &["testapsp", "edmondskarp", "verify"]],
        ),
        (&["flograph", "20", "60", "1", "50", "4", "3", "1"], &[&["testmaxflo", "pphl", "verify"]]),
        (&["wflograph", "20", "60", "1", "50", "1", "9", "4", "3", "1"], &[&["testmcf", "scale", "verify"]]),
        (&["bigraph", "20", "40", "3", "1"], &[&["testmatch", "hopcroftkarp", "verify"], &["testecolor", "altpath", "verify"]]),
        (&["wbigraph", "20", "40", "1", "50", "3", "1"], &[&["testmatch", "hungarian", "verify"]]),
        (&["ugraph", "20", "40", "3", "1"], &[&["testmatch", "edmondsgabow", "verify"]]),
    ];
    for (gen, testers) in cases {
        let mut args = vec!["randgraph"];
        args.extend_from_slice(gen);
        let graph = ok(&args, "");
        for tester in *testers {
            ok(tester, &graph);
        }
    }
}

#[test]
fn binary_pipe() {
    let bin = env!("CARGO_BIN_EXE_grafalgo");
    let graph = Command::new(bin).args(["randGraph", "wgraph", "6", "8", "1", "9", "1", "0"]).output().unwrap();
    assert!(graph.status.success());
    let mut child = Command::new(bin)
        .args(["testMst", "kruskal", "verify"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&graph.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("mst weight: "));

    let bad = Command::new(bin).args(["testmst", "nosuch"]).stdin(Stdio::null()).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
