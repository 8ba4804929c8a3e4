use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const EDGE: &str = "p edge 2 1\ne 1 2\n";
const TRIANGLE: &str = "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n";

struct Sandbox(TempDir);

impl Sandbox {
    fn new() -> Self {
        Sandbox(TempDir::new().unwrap())
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.path().join(name);
        fs::write(&p, text).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }

    fn run(&self, args: &[&str]) -> Output {
        Command::new(env!("CARGO_BIN_EXE_kexchange"))
            .args(args)
            .current_dir(self.0.path())
            .output()
            .unwrap()
    }
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

/// Value of `key` in a `key value` report.
fn field(out: &Output, key: &str) -> Option<String> {
    String::from_utf8_lossy(&out.stdout).lines().find_map(|l| {
        let (k, v) = l.split_once(' ').unwrap_or((l, ""));
        (k == key).then(|| v.to_string())
    })
}

fn complete_graph(n: usize) -> String {
    let mut text = format!("p edge {n} {}\n", n * (n - 1) / 2);
    for u in 1..=n {
        for v in u + 1..=n {
            text.push_str(&format!("e {u} {v}\n"));
        }
    }
    text
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn strict_improves_single_edge() {
    let sb = Sandbox::new();
    sb.file("g", EDGE);
    sb.file("c", "1 2\n");
    let out = sb.run(&["solve", "--graph", "g", "--cover", "c", "-k", "1", "--engine", "strict"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(field(&out, "outcome").unwrap(), "improved");
    assert_eq!(field(&out, "final_cover_size").unwrap(), "1");
}

#[test]
fn permissive_on_optimal_triangle_cover() {
    let sb = Sandbox::new();
    sb.file("g", TRIANGLE);
    sb.file("c", "1 2\n");
    let out = sb.run(&[
        "solve",
        "--graph",
        "g",
        "--cover",
        "c",
        "-k",
        "2",
        "--engine",
        "permissive",
        "--beta",
        "2",
    ]);
    assert_eq!(code(&out), 1);
    assert_eq!(field(&out, "outcome").unwrap(), "no-improvement-within-k");
    assert_eq!(field(&out, "confidence").unwrap(), "deterministic");
    assert_eq!(field(&out, "q").unwrap(), "6");
}

#[test]
fn input_errors_exit_2() {
    let sb = Sandbox::new();
    sb.file("g", TRIANGLE);
    sb.file("one", "1\n");
    sb.file("c", "1 2\n");
    sb.file("bad", "p edge 2 1\ne 1 5\n");
    let out = sb.run(&["solve", "--graph", "g", "--cover", "one", "-k", "2"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a vertex cover"));
    assert_eq!(
        code(&sb.run(&["solve", "--graph", "bad", "--cover", "c", "-k", "1"])),
        2
    );
    assert_eq!(
        code(&sb.run(&["solve", "--graph", "missing", "--cover", "c", "-k", "1"])),
        2
    );
    let out = sb.run(&["solve", "--graph", "g", "--cover", "c", "-k", "1", "--beta", "1"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not 1-separable"));
    assert_eq!(
        code(&sb.run(&["solve", "--graph", "g", "--cover", "c", "-k", "1", "--delta", "2"])),
        2
    );
}

#[test]
fn randomized_runs_are_replayable() {
    let sb = Sandbox::new();
    let gen = sb.run(&[
        "gen",
        "subdivided",
        "--base-n",
        "30",
        "--base-m",
        "50",
        "--seed",
        "4",
        "--out",
        "inst",
    ]);
    assert_eq!(code(&gen), 0);
    let args = [
        "solve",
        "--graph",
        "inst.dimacs",
        "--cover",
        "inst.cover",
        "-k",
        "3",
        "--beta",
        "2",
        "--mode",
        "randomized",
        "--seed",
        "11",
    ];
    let a = sb.run(&args);
    let b = sb.run(&[&args[..], &["--threads", "1"]].concat());
    assert_eq!(code(&a), 0);
    assert_eq!(field(&a, "seed").unwrap(), "11");
    assert_eq!(field(&a, "mode").unwrap(), "randomized");
    assert_eq!(field(&a, "repetitions").unwrap(), "512");
    assert_eq!(field(&a, "cover"), field(&b, "cover"));
    let c = sb.run(&[&args[..], &["--delta", "0.01"]].concat());
    assert_eq!(field(&c, "repetitions").unwrap(), "2358");
}

#[test]
fn iterate_reaches_a_local_optimum() {
    let sb = Sandbox::new();
    assert_eq!(
        code(&sb.run(&["gen", "random", "--n", "14", "--p", "0.3", "--seed", "2", "--out", "r"])),
        0
    );
    let out = sb.run(&[
        "solve",
        "--graph",
        "r.dimacs",
        "--cover",
        "r.cover",
        "-k",
        "2",
        "--engine",
        "strict",
        "--iterate",
        "--output",
        "final",
    ]);
    assert_eq!(code(&out), 0);
    let final_cover = fs::read_to_string(sb.path("final")).unwrap();
    let again = sb.run(&[
        "solve", "--graph", "r.dimacs", "--cover", "final", "-k", "2", "--engine", "strict",
    ]);
    assert_eq!(code(&again), 1, "iterated cover {final_cover} still improves");
    let check = sb.run(&["check", "cover", "--graph", "r.dimacs", "--set", "final"]);
    assert_eq!(code(&check), 0);
}

#[test]
fn clique_reduction_on_k5() {
    let sb = Sandbox::new();
    sb.file("k5", &complete_graph(5));
    let out = sb.run(&[
        "reduce",
        "clique-to-hallset",
        "--graph",
        "k5",
        "-k",
        "4",
        "--out",
        "red",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(field(&out, "k_prime").unwrap(), "6");
    assert_eq!(field(&out, "t").unwrap(), "1");
    let text = fs::read_to_string(sb.path("red.dimacs")).unwrap();
    assert!(text.contains("c k_prime 6\n") && text.contains("c t 1\n"));
    assert!(text.contains("p edge 16 30\n"));
    let side = fs::read_to_string(sb.path("red.side-a")).unwrap();
    assert_eq!(side.split_whitespace().count(), 10);

    let out = sb.run(&["reduce", "clique-to-hallset", "--graph", "k5", "-k", "3", "--out", "x"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("k >= 4"));

    let out = sb.run(&[
        "reduce",
        "clique-to-hallset-2sub",
        "--graph",
        "k5",
        "-k",
        "4",
        "--out",
        "sub",
    ]);
    assert_eq!(field(&out, "k_prime").unwrap(), "24");
    let check = sb.run(&["check", "separability", "--graph", "sub.dimacs", "--beta", "2"]);
    assert_eq!(code(&check), 0);
    assert_eq!(field(&check, "result").unwrap(), "pass");
}

#[test]
fn hallset_to_lsvc_radius() {
    let sb = Sandbox::new();
    // A = {1, 2}, B = {3}: both A vertices see only vertex 3
    sb.file("bg", "p edge 3 2\ne 1 3\ne 2 3\n");
    sb.file("a", "1 2\n");
    let out = sb.run(&[
        "reduce",
        "hallset-to-lsvc",
        "--graph",
        "bg",
        "--side-a",
        "a",
        "-k",
        "2",
        "--out",
        "ls",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(field(&out, "k_prime").unwrap(), "3");
    assert_eq!(fs::read_to_string(sb.path("ls.cover")).unwrap(), "1 2\n");
    let solve = sb.run(&[
        "solve",
        "--graph",
        "ls.dimacs",
        "--cover",
        "ls.cover",
        "-k",
        "3",
        "--engine",
        "strict",
    ]);
    assert_eq!(code(&solve), 0);
    assert_eq!(field(&solve, "cover").unwrap(), "3");

    sb.file("w", "1 2\n");
    let hall = sb.run(&["check", "hall-witness", "--graph", "bg", "--side-a", "a", "--set", "w"]);
    assert_eq!(code(&hall), 0);
    sb.file("w1", "1\n");
    let hall = sb.run(&["check", "hall-witness", "--graph", "bg", "--side-a", "a", "--set", "w1"]);
    assert_eq!(code(&hall), 1);
    assert!(field(&hall, "reason").unwrap().contains("|N(W)| = 1"));

    sb.file("odd", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    let out = sb.run(&[
        "reduce",
        "hallset-to-lsvc",
        "--graph",
        "odd",
        "--side-a",
        "a",
        "-k",
        "2",
        "--out",
        "x",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn subdivide_triangle() {
    let sb = Sandbox::new();
    sb.file("tri", TRIANGLE);
    let out = sb.run(&["reduce", "subdivide", "--graph", "tri", "--out", "c9"]);
    assert_eq!(code(&out), 0);
    assert_eq!(field(&out, "n").unwrap(), "9");
    assert_eq!(field(&out, "cover_shift").unwrap(), "3");
    let text = fs::read_to_string(sb.path("c9.dimacs")).unwrap();
    assert!(text.contains("p edge 9 9\n"));
}

#[test]
fn checks_report_violations() {
    let sb = Sandbox::new();
    sb.file("tri", TRIANGLE);
    sb.file("one", "2\n");
    let out = sb.run(&["check", "cover", "--graph", "tri", "--set", "one"]);
    assert_eq!(code(&out), 1);
    assert_eq!(field(&out, "reason").unwrap(), "edge 1-3 is uncovered");

    sb.file("edge", EDGE);
    sb.file("c", "1 2\n");
    sb.file("star", "1\n");
    let args = [
        "check",
        "structural-witness",
        "--graph",
        "edge",
        "--cover",
        "c",
        "--set",
    ];
    let out = sb.run(&[&args[..], &["star", "-k", "1"]].concat());
    assert_eq!(code(&out), 0);
    let out = sb.run(&[&args[..], &["c", "-k", "2"]].concat());
    assert_eq!(code(&out), 1);
    assert_eq!(field(&out, "reason").unwrap(), "S* is not independent");

    let out = sb.run(&["check", "separability", "--graph", "tri", "--beta", "1"]);
    assert_eq!(code(&out), 1);
    let out = sb.run(&["check", "separability", "--graph", "tri", "--beta", "auto"]);
    assert_eq!(field(&out, "beta").unwrap(), "2");
}

#[test]
fn written_graphs_round_trip() {
    let sb = Sandbox::new();
    assert_eq!(
        code(&sb.run(&["gen", "random", "--n", "12", "--p", "0.4", "--seed", "8", "--out", "g"])),
        0
    );
    let first = fs::read_to_string(sb.path("g.dimacs")).unwrap();
    // a shuffled copy with extra comments parses to the same canonical text
    let mut lines: Vec<&str> = first.lines().filter(|l| l.starts_with('e')).collect();
    lines.reverse();
    let header = first.lines().find(|l| l.starts_with('p')).unwrap();
    let shuffled = format!("c seed 8\nc a free comment\n{header}\n{}\n", lines.join("\n"));
    let copy = sb.file("copy", &shuffled);
    let out = sb.run(&["reduce", "subdivide", "--graph", s(&copy), "--out", "sub_copy"]);
    let out2 = sb.run(&["reduce", "subdivide", "--graph", "g.dimacs", "--out", "sub_orig"]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&out2), 0);
    assert_eq!(
        fs::read_to_string(sb.path("sub_copy.dimacs")).unwrap(),
        fs::read_to_string(sb.path("sub_orig.dimacs")).unwrap()
    );
}
