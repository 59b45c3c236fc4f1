use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn cage8(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cage8"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// `key=value` pairs of the last line that has an `order=` field.
fn numbers(text: &str) -> Vec<(String, String)> {
    let line = text.lines().rev().find(|l| l.contains("order=")).unwrap();
    line.split_whitespace()
        .filter_map(|kv| kv.split_once('='))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn field<'a>(pairs: &'a [(String, String)], key: &str) -> &'a str {
    &pairs.iter().find(|(k, _)| k == key).unwrap().1
}

#[test]
fn construct_summaries() {
    let o = cage8(&["construct", "--q", "3", "--family", "gamma"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "order=80 degree=4 girth=8");
    let o = cage8(&["construct", "--q", "2", "--family", "h"]);
    assert_eq!(stdout(&o).trim(), "order=16 degree=2 girth=8");
    let o = cage8(&["construct", "--q", "6", "--family", "gamma"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn derive_summaries_and_errors() {
    let o = cage8(&["derive", "--q", "5", "--remove", "S"]);
    assert_eq!(stdout(&o).trim(), "removed=70 order=160 degree=4 girth=8");
    let o = cage8(&["derive", "--q", "2", "--remove", "B"]);
    assert!(stdout(&o).contains("order=8 degree=2 girth=8"));
    assert_eq!(
        cage8(&["derive", "--q", "3", "--remove", "Cprime"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        cage8(&[
            "derive",
            "--q",
            "3",
            "--remove",
            "A",
            "--beta",
            "0:(inf,inf,inf)"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        cage8(&["derive", "--q", "3", "--remove", "B", "--xi", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn derive_accepts_alpha_beta_by_id_or_label() {
    let by_label = cage8(&[
        "derive",
        "--q",
        "3",
        "--remove",
        "A",
        "--alpha",
        "1:(0,0,0)",
        "--beta",
        "0:(inf,inf,inf)",
    ]);
    assert!(
        by_label.status.success(),
        "{}",
        String::from_utf8_lossy(&by_label.stderr)
    );
    assert_eq!(
        stdout(&by_label).trim(),
        "removed=32 order=48 degree=3 girth=8"
    );
    // 1:(0,0,0) is the first line-side id, 40 for q = 3
    let by_id = cage8(&[
        "derive",
        "--q",
        "3",
        "--remove",
        "A",
        "--alpha",
        "40",
        "--beta",
        "0:(inf,inf,inf)",
    ]);
    assert_eq!(stdout(&by_id), stdout(&by_label));
}

#[test]
fn info_tables() {
    let t = stdout(&cage8(&["info", "--q", "4"]));
    for (k, v) in [
        ("|V(Gamma_q)|", "170"),
        ("|B|", "58"),
        ("order Gamma_q - A", "120"),
        ("order Gamma_q - B", "112"),
        ("order Gamma_q - C / C'", "100"),
        ("order G_q - S", "72"),
    ] {
        let line = t.lines().find(|l| l.starts_with(&format!("{k} "))).unwrap();
        assert_eq!(line.split_whitespace().last(), Some(v), "{line}");
    }
    let t = stdout(&cage8(&["info", "--q", "2"]));
    for k in ["|C|", "|C'|", "|S|"] {
        assert!(
            t.lines()
                .any(|l| l.starts_with(&format!("{k} ")) && l.contains("n/a")),
            "{k}"
        );
    }
    let t = stdout(&cage8(&["info", "--q", "9"]));
    assert!(t
        .lines()
        .any(|l| l.starts_with("|V(Gamma_q)|") && l.ends_with("1640")));
    assert!(t
        .lines()
        .any(|l| l.starts_with("excess") && l.ends_with(" 0")));
    assert_eq!(cage8(&["info", "--q", "10"]).status.code(), Some(2));
}

#[test]
fn exports_verify_to_the_printed_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["construct", "--q", "4", "--family", "gamma"],
        vec!["construct", "--q", "3", "--family", "b"],
        vec!["derive", "--q", "3", "--remove", "A"],
        vec!["derive", "--q", "4", "--remove", "Cprime"],
        vec!["derive", "--q", "4", "--remove", "S"],
    ];
    for (i, case) in cases.iter().enumerate() {
        for (fmt, ext) in [
            ("edgelist", "edges"),
            ("dimacs", "dimacs"),
            ("graph6", "g6"),
        ] {
            let out = dir.path().join(format!("g{i}.{ext}"));
            let mut args = case.clone();
            args.extend(["--format", fmt, "--out", path_str(&out)]);
            let made = cage8(&args);
            assert!(made.status.success(), "{args:?}");
            let printed = numbers(&stdout(&made));
            let degree = field(&printed, "degree");
            let girth = field(&printed, "girth");
            let checked = cage8(&[
                "verify",
                path_str(&out),
                "--girth",
                girth,
                "--regular",
                degree,
                "--bipartite",
            ]);
            assert!(checked.status.success(), "{args:?}\n{}", stdout(&checked));
            let recomputed = numbers(&stdout(&checked));
            for key in ["order", "degree", "girth"] {
                assert_eq!(
                    field(&printed, key),
                    field(&recomputed, key),
                    "{args:?} {key}"
                );
            }
            let meta: serde_json::Value = serde_json::from_str(
                &fs::read_to_string(dir.path().join(format!("g{i}.{ext}.meta.json"))).unwrap(),
            )
            .unwrap();
            assert_eq!(meta["order"].to_string(), field(&printed, "order"));
        }
    }
}

#[test]
fn verify_reports_failures() {
    let dir = tempfile::tempdir().unwrap();
    let k33 = dir.path().join("k33.edges");
    let edges: String = (0..3)
        .flat_map(|u| (3..6).map(move |v| format!("{u} {v}\n")))
        .collect();
    fs::write(&k33, edges).unwrap();
    let o = cage8(&["verify", path_str(&k33), "--girth", "8"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("FAIL girth"));

    let bad = dir.path().join("bad.edges");
    fs::write(&bad, "0 1\n1 x\n").unwrap();
    assert_eq!(cage8(&["verify", path_str(&bad)]).status.code(), Some(2));
    assert_eq!(
        cage8(&["verify", path_str(&dir.path().join("missing.edges"))])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        cage8(&["verify", path_str(&dir.path().join("x.unknown"))])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_pds_dump() {
    let dir = tempfile::tempdir().unwrap();
    let gamma = dir.path().join("gamma4.edges");
    let set = dir.path().join("b.set");
    assert!(cage8(&["construct", "--q", "4", "--out", path_str(&gamma)])
        .status
        .success());
    assert!(cage8(&[
        "derive",
        "--q",
        "4",
        "--remove",
        "B",
        "--set-out",
        path_str(&set)
    ])
    .status
    .success());
    let o = cage8(&[
        "verify",
        path_str(&gamma),
        "--girth",
        "8",
        "--regular",
        "5",
        "--pds",
        path_str(&set),
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(
        stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(),
        3
    );

    // dropping one vertex breaks domination
    let text = fs::read_to_string(&set).unwrap();
    let fewer: String = text.lines().skip(1).map(|l| format!("{l}\n")).collect();
    fs::write(&set, fewer).unwrap();
    let o = cage8(&["verify", path_str(&gamma), "--pds", path_str(&set)]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn identical_flags_give_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["construct", "--q", "5", "--family", "gamma"],
        vec!["derive", "--q", "4", "--remove", "S"],
        vec!["derive", "--q", "3", "--remove", "A"],
    ] {
        let mut outputs = Vec::new();
        for run in 0..2 {
            let out = dir.path().join(format!("run{run}.edges"));
            let set = dir.path().join(format!("run{run}.set"));
            let mut a = args.clone();
            a.extend(["--out", path_str(&out)]);
            if a[0] == "derive" {
                a.extend(["--set-out", path_str(&set)]);
            }
            let o = cage8(&a);
            assert!(o.status.success());
            let mut bytes = fs::read(&out).unwrap();
            bytes.extend(fs::read(dir.path().join(format!("run{run}.edges.meta.json"))).unwrap());
            if a[0] == "derive" {
                bytes.extend(fs::read(&set).unwrap());
            }
            outputs.push((o.stdout, bytes));
        }
        assert!(outputs[0] == outputs[1], "{args:?}");
    }
}
