use std::path::PathBuf;
use std::process::{Command, Output};

use espkit_cli::document::{emit, parse};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(name)
}

fn read(name: &str) -> String {
    std::fs::read_to_string(corpus(name)).unwrap()
}

fn espkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_espkit"))
        .args(args)
        .env_remove("ESPKIT_POSET_CAP")
        .env_remove("ESPKIT_MAX_N")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(name: &str) -> String {
    corpus(name).display().to_string()
}

/// Text of the block starting with `header`, through its `end` line.
fn block(text: &str, header: &str) -> String {
    let start = text
        .find(header)
        .unwrap_or_else(|| panic!("no block {header}"));
    let len = text[start..].find("\nend\n").unwrap() + "\nend\n".len();
    text[start..start + len].to_string()
}

#[test]
fn single_table_files_are_reproduced_byte_for_byte() {
    let cases: [(&str, &[&str]); 6] = [
        ("hexagon.sp", &["star", "--poset", "hex"]),
        ("hexagon-q.sp", &["star", "--poset", "q"]),
        (
            "hexagon-pure.sp",
            &["extend", "--poset", "hex", "--method", "pure"],
        ),
        (
            "hexagon-rp.sp",
            &["extend", "--poset", "hex", "--method", "rp"],
        ),
        (
            "hexagon-fnat.sp",
            &[
                "extend",
                "--poset",
                "hex",
                "--method",
                "i-natural",
                "--selection",
                "frink",
            ],
        ),
        (
            "split.sp",
            &["extend", "--poset", "five", "--method", "normal"],
        ),
    ];
    for (file, args) in cases {
        let file_path = path(file);
        let mut full = vec![args[0], file_path.as_str()];
        full.extend(&args[1..]);
        let out = espkit(&full);
        assert_eq!(out.status.code(), Some(0), "{file}");
        assert_eq!(stdout(&out), read(file), "{file}");
    }
}

#[test]
fn two_chain_tables() {
    let text = read("twochains.sp");
    let out = espkit(&["star", &path("twochains.sp"), "--poset", "two"]);
    assert_eq!(
        block(&stdout(&out), "optable star"),
        block(&text, "optable star")
    );

    let out = espkit(&[
        "extend",
        &path("twochains.sp"),
        "--poset",
        "two",
        "--method",
        "natural",
    ]);
    let natural = block(&stdout(&out), "optable natural");
    let arrow1 = block(&text, "optable arrow1");
    assert_eq!(natural.replacen("natural", "arrow1", 1), arrow1);

    for t in ["arrow1", "arrow2", "arrow3"] {
        let out = espkit(&[
            "check",
            &path("twochains.sp"),
            "--table",
            t,
            "--system",
            "ESP",
        ]);
        assert_eq!(out.status.code(), Some(0), "{t}");
    }
    let out = espkit(&[
        "check",
        &path("twochains.sp"),
        "--table",
        "arrow2",
        "--system",
        "NAT",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn corpus_round_trips() {
    for entry in std::fs::read_dir(corpus("")).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let doc = parse(&text).unwrap();
        assert_eq!(emit(&doc), text);
    }
}

#[test]
fn normal_extension_of_hexagon_fails_with_witness() {
    let out = espkit(&[
        "extend",
        &path("hexagon.sp"),
        "--poset",
        "hex",
        "--method",
        "normal",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(
        text.contains("undefined at (a, b): maximal candidates {c, d}"),
        "{text}"
    );
    assert!(
        text.contains("undefined at (b, a): maximal candidates {c, d}"),
        "{text}"
    );
}

#[test]
fn verify_and_hunt_exit_codes() {
    let out = espkit(&["verify", "--theorem", "T-JEXT-FIN", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verified"));

    let out = espkit(&["hunt", "--predicate", "ESP=>J", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("counterexample at n = 2"), "{text}");
    // the printed witness is itself a document
    let doc = parse(&text[text.find("poset witness").unwrap()..]).unwrap();
    assert!(doc.table("table").is_some());

    let out = espkit(&["hunt", "--predicate", "sp=>sp", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_and_input_errors_exit_2() {
    let cases: [&[&str]; 6] = [
        &["verify", "--theorem", "T-NOPE", "--max-n", "3"],
        &["verify", "--theorem", "T-JEXT-FIN", "--max-n", "9"],
        &["hunt", "--predicate", "nothing", "--max-n", "3"],
        &["star", "/nonexistent/file.sp", "--poset", "p"],
        &["frobnicate"],
        &["check"],
    ];
    for args in cases {
        let out = espkit(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = espkit(&["star", &path("hexagon.sp"), "--poset", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn empty_file_is_rejected() {
    let dir = std::env::temp_dir().join(format!("espkit-empty-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("empty.sp");
    std::fs::write(&f, "# nothing\n").unwrap();
    let out = espkit(&["validate", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no sections"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn poset_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_espkit"))
        .args(["validate", &path("hexagon.sp")])
        .env("ESPKIT_POSET_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("above the cap of 5"));
}

#[test]
fn sweep_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_espkit"))
        .args(["verify", "--theorem", "T-JEXT-FIN", "--max-n", "3"])
        .env("ESPKIT_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_and_props() {
    let out = espkit(&["analyze", &path("hexagon.sp"), "--poset", "hex"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("upper-semilattice      no   (a, b)"),
        "{text}"
    );
    assert!(text.contains("sp-poset               yes"), "{text}");

    let out = espkit(&[
        "props",
        &path("hexagon.sp"),
        "--table",
        "star",
        "--suite",
        "sp-prop",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = espkit(&[
        "props",
        &path("hexagon-rp.sp"),
        "--table",
        "rp",
        "--suite",
        "esp-prop",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("esp-prop on rp: hypothesis fails\n"));
    let out = espkit(&[
        "props",
        &path("hexagon.sp"),
        "--table",
        "star",
        "--suite",
        "esp-prop",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_reports_violations() {
    let out = espkit(&[
        "check",
        &path("hexagon-rp.sp"),
        "--table",
        "rp",
        "--system",
        "J",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = espkit(&[
        "check",
        &path("hexagon-rp.sp"),
        "--table",
        "rp",
        "--system",
        "ESP",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains(" at "));
    // the meet-based system needs a lower semilattice
    let out = espkit(&[
        "check",
        &path("hexagon-rp.sp"),
        "--table",
        "rp",
        "--system",
        "ESPW",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
