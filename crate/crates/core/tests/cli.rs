use std::path::Path;
use std::process::{Command, Output};

use frobcat::io::{read_json, write_json, FunctorFile};
use frobcat::report::Report;

fn frobcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    frobcat(args).status.code().expect("exit code")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["check-frobenius", "--builtin", "z4-identity"]), 0);
    assert_eq!(code(&["check-frobenius", "--builtin", "z4-to-z2"]), 0);
    assert_eq!(
        code(&["check-monoidal", "--builtin", "bool-relabel-bad-f2:2"]),
        1
    );
    assert_eq!(
        code(&["check-comonoidal", "--builtin", "bool-relabel-bad-f2:2"]),
        2
    );
    assert_eq!(
        code(&["check-linear", "--builtin", "bool-relabel-linear-bad-nu:2"]),
        1
    );
    assert_eq!(
        code(&["adjudicate-cor-frob", "--builtin", "z4-negation"]),
        0
    );
    assert_eq!(
        code(&["adjudicate-lin-frob", "--builtin", "posetal-nat:4:A"]),
        1
    );
    assert_eq!(
        code(&["validate", "--builtin", "bool:2", "--scope", "exhaustive"]),
        2
    );
    assert_eq!(
        code(&["validate", "--builtin", "discrete:6", "--max-objects", "3"]),
        2
    );
    assert_eq!(code(&["validate", "--builtin", "nope"]), 2);
    assert_eq!(code(&["no-such-command"]), 2);
    assert_eq!(code(&["catalog"]), 0);
}

#[test]
fn json_output_round_trips() {
    let out = frobcat(&["check-frobenius", "--builtin", "z4-negation", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    let r = Report::from_json(&s).unwrap();
    assert_eq!(r.summary.failed, 0);
    assert!(r.summary.total > 0);
    assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
}

#[test]
fn synthesize_restores_stripped_comonoidal_structure() {
    let dir = tempfile::tempdir().unwrap();
    let full = dir.path().join("z4-to-z2.json");
    let mono = dir.path().join("mono.json");
    let patched = dir.path().join("patched.json");
    assert_eq!(
        code(&["catalog", "--builtin", "z4-to-z2", "--emit", p(&full)]),
        0
    );
    let original: FunctorFile = read_json(&full).unwrap();
    assert!(original.comonoidal.is_some());
    let mut stripped = original.clone();
    stripped.comonoidal = None;
    write_json(&mono, &stripped).unwrap();
    assert_eq!(code(&["check-comonoidal", "--functor", p(&mono)]), 2);
    assert_eq!(
        code(&["synthesize", "--functor", p(&mono), "--emit", p(&patched)]),
        0
    );
    let out: FunctorFile = read_json(&patched).unwrap();
    assert_eq!(out.comonoidal, original.comonoidal);
    assert_eq!(code(&["check-frobenius", "--functor", p(&patched)]), 0);
}
