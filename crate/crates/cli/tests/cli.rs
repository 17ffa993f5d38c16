use std::path::PathBuf;
use std::process::{Command, Output};

fn holorec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_holorec"))
        .args(args)
        .env_remove("HOLOREC_NETWORK")
        .env_remove("HOLOREC_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn operator_line(text: &str) -> String {
    text.lines().find_map(|l| l.strip_prefix("operator ")).expect("operator line").to_string()
}

#[test]
fn terms_prints_a_bfile() {
    let o = holorec(&["terms", "A187990", "--n", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1 117\n2 181\n3 260\n4 355\n");
}

#[test]
fn oracle_matches_generator() {
    let g = holorec(&["terms", "A250556", "--n", "6"]);
    let b = holorec(&["oracle", "A250556", "--n", "6"]);
    assert!(g.status.success() && b.status.success());
    assert_eq!(stdout(&g), stdout(&b));
}

#[test]
fn guess_then_verify_round_trip() {
    let o = holorec(&["guess", "A187990", "--n", "30"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("order 1 degree 3"), "{text}");
    let dir = tempfile::tempdir().unwrap();
    let op = dir.path().join("op.txt");
    std::fs::write(&op, operator_line(&text)).unwrap();
    let op = op.to_str().unwrap();

    let ok = holorec(&["verify", "A187990", "--operator", op, "--n", "50"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));

    // The original data carries a wrong a_27, which the operator rejects.
    let bad = holorec(&["verify", "A187990", "--operator", op, "--bfile", &fixture("b187990.txt")]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("annihilates 1..=50: no"));
}

#[test]
fn guess_from_bfile_with_lll() {
    let o = holorec(&["guess", "A177317", "--method", "lll", "--bfile", &fixture("b177317.txt"), "--holdout", "2",
        "--max-order", "3", "--max-degree", "14"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("order 3 degree 14"), "{}", stdout(&o));
}

#[test]
fn guess_failure_exits_one() {
    let o = holorec(&["guess", "A187990", "--n", "6", "--max-order", "1", "--max-degree", "0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn rescaled_guess() {
    // C(2n,n)·n! over C(2n,n) leaves n!.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("central.txt");
    let (mut b, mut f, mut text) = (1u128, 1u128, String::new());
    for n in 1..=14u128 {
        b = b * 2 * (2 * n - 1) / n;
        f *= n;
        text += &format!("{n} {}\n", b * f);
    }
    std::fs::write(&path, text).unwrap();
    let o = holorec(&["guess", "A000001", "--bfile", path.to_str().unwrap(), "--rescale", "binomial(2n,n)",
        "--max-order", "2", "--max-degree", "2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("order 1 degree 1"), "{}", stdout(&o));
}

#[test]
fn gf_prints_rational_function() {
    let o = holorec(&["gf", "A199250"]);
    assert!(o.status.success());
    let t = stdout(&o);
    assert!(t.starts_with("numerator ") && t.contains("\ndenominator 1 - "));
}

#[test]
fn conjectures_agree() {
    let o = holorec(&["check-conjectures", "A181198", "--n", "20"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("A181198 agrees"));
}

#[test]
fn report_single_row() {
    let o = holorec(&["report", "A187990"]);
    assert!(o.status.success());
    let t = stdout(&o);
    assert!(t.starts_with("A187990 ") && t.contains(" r=1 d=3"), "{t}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(holorec(&["terms", "A999999", "--n", "3"]).status.code(), Some(2));
    assert_eq!(holorec(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(holorec(&["gf", "A187990"]).status.code(), Some(2));
}

#[test]
fn fetch_uses_cache_and_respects_network_switch() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    std::fs::create_dir_all(&cache).unwrap();
    std::fs::write(cache.join("b237684.txt"), "1 1\n2 1\n3 1\n").unwrap();
    let cfg = dir.path().join("holorec.conf");
    std::fs::write(&cfg, format!("cache_dir = {}\nnetwork = false\n", cache.display())).unwrap();
    let cfg = cfg.to_str().unwrap();

    let hit = holorec(&["--config", cfg, "fetch", "A237684"]);
    assert!(hit.status.success());
    assert_eq!(stdout(&hit), "1 1\n2 1\n3 1\n");

    let miss = holorec(&["--config", cfg, "fetch", "A000045"]);
    assert_eq!(miss.status.code(), Some(1));
}
