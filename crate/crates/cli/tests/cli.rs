use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures")
}

fn modcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modcat")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn d6() -> String {
    fixtures().join("d6").display().to_string()
}

#[test]
fn stmatrices_reproduces_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = modcat(&["stmatrices", "--bundle", &d6(), "--out", out]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let got = fs::read(dir.path().join("S_tilde.csv")).unwrap();
    let want = fs::read(fixtures().join("d6/S_tilde.csv")).unwrap();
    assert_eq!(got, want);
    for f in ["S.json", "T.json", "C.json", "report.json", "S_tilde.json", "T.csv"] {
        assert!(dir.path().join(f).exists(), "{f}");
    }
    // byte-for-byte deterministic
    let again = tempfile::tempdir().unwrap();
    modcat(&["stmatrices", "--bundle", &d6(), "--out", again.path().to_str().unwrap(), "--threads", "1"]);
    for f in ["S_tilde.json", "report.json"] {
        assert_eq!(fs::read(dir.path().join(f)).unwrap(), fs::read(again.path().join(f)).unwrap());
    }
}

#[test]
fn verify_passes_on_d6() {
    let o = modcat(&["verify", "--bundle", &d6(), "--check", "relations,golden,chartables,oracle"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn corrupted_golden_exits_2_with_coordinates() {
    let dir = tempfile::tempdir().unwrap();
    let good = fs::read_to_string(fixtures().join("d6/S_tilde.csv")).unwrap();
    let bad = good.replacen("\n1_2,1,1,1,1,2", "\n1_2,1,1,1,1,7", 1);
    assert_ne!(good, bad);
    let p = dir.path().join("bad.csv");
    fs::write(&p, bad).unwrap();
    let o = modcat(&["verify", "--bundle", &d6(), "--check", "golden", "--golden", p.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("line 3, field 5"), "{}", stdout(&o));
}

#[test]
fn chartables() {
    let o = modcat(&["chartable", "--bundle", &d6(), "--subgroup", "e,a,a2,a3,a4,a5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("chi1,1,w,w^2,-1,w^4,w^5"));
    let o = modcat(&["chartable", "--bundle", &d6(), "--subgroup", "e"]);
    assert!(stdout(&o).ends_with("irrep,e\nchi0,1\n"));
}

#[test]
fn trivial_group_has_unit_matrices() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    fs::write(&g, r#"{"kind":"perms","degree":1,"generators":[[0]]}"#).unwrap();
    let out = dir.path().join("out");
    let o = modcat(&["stmatrices", "--group", g.to_str().unwrap(), "--subgroup", "e", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    for m in ["S_tilde", "S", "T", "C"] {
        let csv = fs::read_to_string(out.join(format!("{m}.csv"))).unwrap();
        assert!(csv.ends_with("\ne:0,1\n"), "{m}: {csv}");
    }
}

#[test]
fn s3_pipeline_with_oracle() {
    let s3 = fixtures().join("s3").display().to_string();
    let o = modcat(&["verify", "--bundle", &s3, "--check", "relations,oracle"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = modcat(&["factor", "--bundle", &s3]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("\"transversal\""));
}

#[test]
fn oracle_check_sample() {
    let o = modcat(&["oracle-check", "--bundle", &d6(), "--pairs", "sample:31"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("trace(Psi^2) = S~ entry: 0 failures"));
}

#[test]
fn functor_check_reports_literal_psi() {
    let o = modcat(&["verify", "--bundle", &d6(), "--check", "functor", "--pairs", "sample:101"]);
    assert_eq!(code(&o), 2);
    let s = stdout(&o);
    assert!(s.contains("FAIL intertwining (literal psi): 12 of 32 simples fail"));
    assert!(s.contains("ok   intertwining (antipode psi)"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&modcat(&["nonsense"])), 1);
    assert_eq!(code(&modcat(&["stmatrices", "--bundle", &d6()])), 1);
    assert_eq!(code(&modcat(&["oracle-check", "--bundle", &d6(), "--pairs", "some"])), 1);
    assert_eq!(code(&modcat(&["--help"])), 0);
    let o = modcat(&["factor", "--bundle", &d6(), "--transversal", "e,b"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a transversal"));
    assert_eq!(code(&modcat(&["factor", "--bundle", &d6(), "--subgroup", "e,zz"])), 3);
    assert_eq!(code(&modcat(&["chartable", "--group", "/nonexistent.json"])), 3);
}
