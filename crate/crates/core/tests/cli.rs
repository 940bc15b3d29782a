use std::path::Path;
use std::process::{Command, Output};

use crown_spectra::{ClaimId, Status, VerificationReport};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crown-spectra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn ledger(path: &Path) -> VerificationReport {
    VerificationReport::from_jsonl(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn build_crown_writes_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("crown4.txt");
    let o = run(&["build", "crown", "4", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("order=8"));
    assert!(stdout(&o).contains("regular=3"));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().next(), Some("# order 8"));
    assert_eq!(text.lines().count(), 1 + 12);
}

#[test]
fn build_line_crown_three_has_six_edges() {
    let o = run(&["build", "line-crown", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1 + 6);
}

#[test]
fn build_rejects_bad_input() {
    assert_eq!(run(&["build", "crown", "2"]).status.code(), Some(2));
    assert_eq!(run(&["build", "petersen", "5"]).status.code(), Some(2));
}

#[test]
fn spectrum_outputs() {
    let o = run(&["spectrum", "line-crown", "5", "--matrix", "distance"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "[[33,1],[1,5],[-1,6],[-2,4],[-6,4]]");

    let o = run(&["spectrum", "line-crown", "4", "--matrix", "adjacency"]);
    assert_eq!(stdout(&o).trim(), "[[4,1],[2,3],[0,3],[-2,5]]");

    let o = run(&["spectrum", "cycle", "5", "--matrix", "distance"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("NotIntegral residual-degree=4"), "{text}");
    assert!(text.contains("float"));

    let o = run(&["spectrum", "line-crown", "4", "--matrix", "distance-i", "--i", "3", "--float"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("[[1,6],[-1,6]]"), "{text}");
    assert!(text.contains("float"));
}

#[test]
fn spectrum_from_file_and_disconnected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("split.txt");
    std::fs::write(&path, "# order 4\n0 1\n2 3\n").unwrap();
    let p = path.to_str().unwrap();
    let o = run(&["spectrum", "--in", p, "--matrix", "adjacency"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "[[1,2],[-1,2]]");
    let o = run(&["spectrum", "--in", p, "--matrix", "distance"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not connected"));
}

#[test]
fn verify_range_flags_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ledger.jsonl");
    let p = path.to_str().unwrap();
    let o = run(&["verify", "--from", "4", "--to", "6", "--ledger", p, "--jobs", "2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let first = ledger(&path);
    assert_eq!(first.count(Status::Fail), 0);
    for n in 4..=6 {
        let flagged = first
            .records
            .iter()
            .filter(|r| r.n == n && r.status == Status::Flagged)
            .count();
        assert!(flagged >= 2, "n={n}: {flagged} flagged");
    }
    assert_eq!(
        first.get(ClaimId::DistanceEigenvalueSet, 4).unwrap().status,
        Status::Flagged
    );
    for r in &first.records {
        if r.status == Status::Flagged {
            assert!(r.claim_id.may_flag());
        }
    }
    // Records come out ordered by n.
    assert!(first.records.windows(2).all(|w| w[0].n <= w[1].n));

    let o = run(&["verify", "--from", "4", "--to", "6", "--ledger", p]);
    assert!(o.status.success());
    let both = ledger(&path);
    let len = first.records.len();
    assert_eq!(both.records.len(), 2 * len);
    for (a, b) in both.records[..len].iter().zip(&both.records[len..]) {
        assert_eq!(a.without_timing(), b.without_timing());
    }
}

#[test]
fn verify_single_n_corrected_record() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ledger.jsonl");
    let o = run(&["verify", "--from", "5", "--to", "5", "--ledger", path.to_str().unwrap()]);
    assert!(o.status.success());
    let rep = ledger(&path);
    let rec = rep.get(ClaimId::DistanceSpectrumCorrected, 5).unwrap();
    assert_eq!(rec.status, Status::Pass);
    assert_eq!(rec.expected, rec.computed);
}

#[test]
fn verify_rejects_bad_range_and_ledger() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ledger.jsonl");
    let p = path.to_str().unwrap();
    assert_eq!(run(&["verify", "--from", "3", "--to", "3", "--ledger", p]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--from", "6", "--to", "5", "--ledger", p]).status.code(), Some(2));
    let unwritable = dir.path().join("missing-dir").join("ledger.jsonl");
    let o = run(&["verify", "--from", "4", "--to", "4", "--ledger", unwritable.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dump_and_verify_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("d5.txt");
    let o = run(&["dump", "line-crown", "5", "--matrix", "distance", "--out", dump.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&dump).unwrap();
    assert_eq!(text.lines().next(), Some("20"));
    assert_eq!(text.lines().count(), 21);

    let ledger_path = dir.path().join("ledger.jsonl");
    let o = run(&[
        "verify",
        "--from-file",
        dump.to_str().unwrap(),
        "--ledger",
        ledger_path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    let rep = ledger(&ledger_path);
    assert_eq!(rep.get(ClaimId::DistanceSpectrumCorrected, 5).unwrap().status, Status::Pass);
    assert_eq!(rep.get(ClaimId::DistanceSpectrumPrinted, 5).unwrap().status, Status::Flagged);

    // A perturbed matrix is still symmetric but no longer matches.
    let mut rows: Vec<Vec<i64>> = text
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect();
    rows[0][1] += 1;
    rows[1][0] += 1;
    let bad = crown_spectra::IntMatrix::from_rows(rows).unwrap();
    let bad_path = dir.path().join("bad.txt");
    std::fs::write(&bad_path, bad.to_dump()).unwrap();
    let o = run(&[
        "verify",
        "--from-file",
        bad_path.to_str().unwrap(),
        "--ledger",
        ledger_path.to_str().unwrap(),
    ]);
    assert_ne!(o.status.code(), Some(0));
}
