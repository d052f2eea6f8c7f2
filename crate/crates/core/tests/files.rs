use std::process::Command;

use frobcat::cat::CategoryFile;
use frobcat::instances::{self, Builtin};
use frobcat::io::{load_category, load_functor, load_linear, read_json, FunctorFile, LinearFile};
use frobcat::linear::check_linear;
use frobcat::structures::check_frobenius;

fn emit(name: &str, dir: &std::path::Path, tag: &str) -> Vec<u8> {
    let path = dir.join(format!("{tag}.json"));
    let st = Command::new(env!("CARGO_BIN_EXE_frobcat"))
        .args([
            "catalog",
            "--builtin",
            name,
            "--emit",
            path.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert!(st.success(), "{name}");
    std::fs::read(path).unwrap()
}

#[test]
fn catalog_export_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for name in instances::catalog_names() {
        assert_eq!(
            emit(&name, dir.path(), "a"),
            emit(&name, dir.path(), "b"),
            "{name}"
        );
    }
}

#[test]
fn exported_instances_load_and_keep_their_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    for name in instances::catalog_names() {
        emit(&name, dir.path(), "x");
        let path = dir.path().join("x.json");
        match instances::resolve(&name).unwrap() {
            Builtin::Category(c) => {
                let lc = load_category(&read_json::<CategoryFile>(&path).unwrap()).unwrap();
                assert_eq!(lc.view.objects().len(), c.objects().len(), "{name}");
            }
            Builtin::Functor(f) => {
                let lf = load_functor(&read_json::<FunctorFile>(&path).unwrap()).unwrap();
                let v = |f| check_frobenius(f).map(|r| r.passed()).ok();
                assert_eq!(v(&lf.functor), v(&f), "{name}");
            }
            Builtin::Linear(l) => {
                let (lf, _, _) = load_linear(&read_json::<LinearFile>(&path).unwrap()).unwrap();
                let v = |l| check_linear(l).unwrap().passed();
                assert_eq!(v(&lf), v(&l), "{name}");
            }
        }
    }
}

#[test]
fn malformed_files_are_rejected() {
    let bad: Result<CategoryFile, _> = serde_json::from_str(r#"{"objects": 3}"#);
    assert!(bad.is_err());
    let file: CategoryFile = serde_json::from_str(r#"{"builtin": "nope"}"#).unwrap();
    assert!(load_category(&file).is_err());
}
