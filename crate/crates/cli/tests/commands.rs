use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

use conjstab_cli::{ReportDocument, SubgroupFile};
use conjstab_core::{decide_stability, validate_certificate};

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        Self {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }
}

fn conjstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conjstab"))
        .args(args)
        .env_remove("CONJSTAB_MAX_BALL")
        .output()
        .unwrap()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let o = conjstab(args);
    (
        o.status.code().unwrap(),
        String::from_utf8(o.stdout).unwrap(),
        String::from_utf8(o.stderr).unwrap(),
    )
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn decide_exit_codes() {
    let f = Files::new();
    let square = f.write("square", "alphabet: ab\naa\n");
    let pair = f.write("pair", "alphabet: ab\naa\nbaaB\n");
    let trivial = f.write("trivial", "alphabet: ab\n");
    let (code, out, _) = run(&["decide", p(&square)]);
    assert_eq!(code, 0);
    assert!(out.starts_with("verdict: stable\n"));
    let (code, out, _) = run(&["decide", p(&pair), "--certificate"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("verdict: not_stable\n"));
    assert!(out.contains("certificate u=aa v=baaB g=B\n"), "{out}");
    let (code, out, _) = run(&["decide", p(&trivial)]);
    assert_eq!(code, 0);
    assert!(out.starts_with("verdict: stable\n"));
}

#[test]
fn decide_json_certificate() {
    let f = Files::new();
    let pair = f.write("pair", "alphabet: ab\naa\nbaaB\n");
    let (code, out, _) = run(&["decide", p(&pair), "--json"]);
    assert_eq!(code, 1);
    let doc = ReportDocument::from_json(&out).unwrap();
    assert_eq!(doc.verdict, "not_stable");
    assert_eq!(doc.generators, vec!["aa", "baaB"]);
    let c = doc.certificate.as_ref().unwrap();
    assert_eq!((c.u.as_str(), c.v.as_str(), c.g.as_str()), ("aa", "baaB", "B"));
    let file = SubgroupFile::read(&pair, false).unwrap();
    let h = file.subgroup().unwrap();
    assert!(validate_certificate(&h, &doc.certificate().unwrap().unwrap()));
}

#[test]
fn json_round_trip_and_byte_stability() {
    let f = Files::new();
    for (i, text) in [
        "alphabet: ab\naa\nbaaB\n",
        "alphabet: ab\naa\n",
        "alphabet: ab\n",
        "alphabet: ab\na\nb\n",
        "alphabet: abc\naab\ncbC\nabc\n",
        "alphabet: ab\nabab\nbAbA\n",
    ]
    .iter()
    .enumerate()
    {
        let path = f.write(&format!("h{i}"), text);
        let (_, first, _) = run(&["decide", p(&path), "--json"]);
        let (_, second, _) = run(&["decide", p(&path), "--json"]);
        assert_eq!(first, second);
        let doc = ReportDocument::from_json(&first).unwrap();
        assert_eq!(format!("{}\n", doc.to_json()), first);
        let file = SubgroupFile::parse(text).unwrap();
        let report = decide_stability(&file.subgroup().unwrap());
        assert!(doc.describes(&report).unwrap(), "{text}");
        // the emitted report is itself a valid subgroup input
        let again = f.write(&format!("h{i}.json"), &first);
        let (_, third, _) = run(&["decide", p(&again), "--json", "--input-json"]);
        assert_eq!(first, third);
    }
}

#[test]
fn membership_intersect_reps() {
    let f = Files::new();
    let h = f.write("h", "alphabet: ab\naa\nb\n");
    assert_eq!(run(&["membership", p(&h), "a"]), (0, "false\n".into(), String::new()));
    assert_eq!(run(&["membership", p(&h), "baaB"]).1, "true\n");
    assert_eq!(run(&["membership", p(&h), "1"]).1, "true\n");
    let a = f.write("a", "alphabet: ab\na\n");
    let aa = f.write("aa", "alphabet: ab\naa\n");
    assert_eq!(run(&["intersect", p(&a), p(&aa)]).1, "rank 1\naa\n");
    assert_eq!(run(&["reps", p(&aa)]).1, "a\trank 1\n");
    let abc = f.write("abc", "alphabet: abc\na\n");
    let (code, _, err) = run(&["intersect", p(&a), p(&abc)]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}

#[test]
fn dot_output() {
    let f = Files::new();
    let a = f.write("a", "alphabet: ab\na\n");
    let out = f.dir.path().join("a.dot");
    let (code, stdout, _) = run(&["dot", p(&a), "-o", out.to_str().unwrap()]);
    assert_eq!((code, stdout.as_str()), (0, ""));
    let expected = "digraph stallings {\n    rankdir=LR;\n    node [shape=circle];\n    0 [shape=doublecircle];\n    0 -> 0 [label=\"a\"];\n}\n";
    assert_eq!(std::fs::read_to_string(&out).unwrap(), expected);
    assert_eq!(run(&["dot", p(&a)]).1, expected);
}

#[test]
fn oracle_witness_and_guard() {
    let f = Files::new();
    let pair = f.write("pair", "alphabet: ab\naa\nbaaB\n");
    let (code, out, _) = run(&["oracle", p(&pair), "4"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("witness u=aa v=baaB g=B"), "{out}");
    let square = f.write("square", "alphabet: ab\naa\n");
    let (code, out, _) = run(&["oracle", p(&square), "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("none up to radius 3 (exact h-bound "), "{out}");
    let (code, _, err) = run(&["oracle", p(&square), "9"]);
    assert_eq!(code, 2);
    assert!(err.contains("guard"), "{err}");
    let raised = Command::new(env!("CARGO_BIN_EXE_conjstab"))
        .args(["oracle", p(&square), "9"])
        .env("CONJSTAB_MAX_BALL", "1")
        .output()
        .unwrap();
    assert_eq!(raised.status.code(), Some(2));
}

#[test]
fn corpus_single_letters() {
    let (code, out, _) = run(&["corpus", "1", "1", "3"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().skip(1).take(3).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.contains("stable     stable     yes")), "{out}");
    assert!(out.trim_end().ends_with("agreement 100%"));
}

#[test]
fn corpus_table_is_deterministic() {
    let strip = |s: String| -> Vec<String> {
        s.lines().filter(|l| !l.starts_with("subgroups")).map(String::from).collect()
    };
    assert_eq!(strip(run(&["corpus", "2", "2", "3"]).1), strip(run(&["corpus", "2", "2", "3"]).1));
}

#[test]
fn parse_errors_exit_two() {
    let f = Files::new();
    let cases = [
        f.write("no_alphabet", "aa\n"),
        f.write("bad_alphabet", "alphabet: aA\n"),
        f.write("bad_letter", "alphabet: ab\nac\n"),
    ];
    for path in &cases {
        for cmd in ["decide", "reps", "dot"] {
            let (code, out, err) = run(&[cmd, p(path)]);
            assert_eq!(code, 2, "{cmd} {path:?}");
            assert!(out.is_empty());
            assert!(err.starts_with("error:"), "{err}");
        }
    }
    let ok = f.write("ok", "alphabet: ab\na\n");
    assert_eq!(run(&["membership", p(&ok), "ax"]).0, 2);
    assert_eq!(run(&["decide", "/nonexistent/file"]).0, 2);
    assert_eq!(run(&["decide", p(&ok), "--input-json"]).0, 2);
    assert_eq!(run(&["corpus", "40", "40", "3"]).0, 2);
    assert_eq!(run(&["bogus"]).0, 2);
}
