//! Drives the installed binary end to end and pins the documented outputs
//! and exit codes.

use std::collections::HashSet;
use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_symchain"))
        .args(args)
        .output()
        .expect("binary should run");
    (
        out.status.code().expect("binary should not be signalled"),
        String::from_utf8(out.stdout).expect("stdout should be utf-8"),
        String::from_utf8(out.stderr).expect("stderr should be utf-8"),
    )
}

#[test]
fn prints_a_parenthesis_decomposition() {
    let (code, stdout, _) = run(&["scd", "d0", "4"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "0000 1000 1100 1110 1111\n\
         0001 1001 1101\n\
         0010 1010 1011\n\
         0011\n\
         0100 0110 0111\n\
         0101\n"
    );
}

#[test]
fn verification_failures_exit_with_one() {
    let (code, stdout, stderr) = run(&["scd", "lex:1,1,1,1,1,1,1", "7", "--verify"]);
    assert_eq!(code, 1);
    assert!(!stdout.is_empty(), "the chains should still be printed");
    assert!(
        stderr.contains("is not a symmetric chain decomposition"),
        "stderr was: {stderr}"
    );
}

#[test]
fn reports_pairwise_disjointness() {
    let (code, stdout, _) = run(&["disjoint", "6", "d0", "d0c", "d1", "d1c"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 7);
    assert_eq!(stdout.lines().last(), Some("all pairs disjoint"));
    assert!(stdout.starts_with("d0 / d0c: disjoint\n"));

    let (code, stdout, stderr) = run(&["disjoint", "4", "d0", "lex:0,0,0,0"]);
    assert_eq!(code, 1);
    assert_eq!(
        stdout,
        "d0 / lex:0,0,0,0: share the edge 0000 - 1000\n1 of 1 pairs share edges\n"
    );
    assert!(stderr.contains("1 of 1 pairs share edges"));
}

#[test]
fn census_lines_match_the_documented_examples() {
    let (code, stdout, _) = run(&["factor", "2", "--ell", "2", "--scds", "d0,d0c", "--census"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "3 cycles: 4,4,22\n");

    let (code, stdout, _) = run(&["factor", "8", "--ell", "1", "--scds", "d0,d0c", "--census"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("146 cycles: 34,34,"), "stdout was: {stdout}");

    let (code, stdout, _) = run(&["factor", "3", "--ell", "4", "--scds", "product", "--census"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "12 cycles: 4,4,4,4,4,4,4,4,12,12,36,36\n");
}

#[test]
fn factor_emit_lists_every_cycle_vertex() {
    let (code, stdout, _) = run(&["factor", "1", "--ell", "1", "--scds", "d0,d0c", "--emit"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "001 101 100 110 010 011\n");
}

#[test]
fn middle4_orbits_emit_and_check() {
    let (code, stdout, _) = run(&["middle4", "4", "--orbits"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "4 orbits: 6,6,4,12\n");

    let (code, stdout, _) = run(&["middle4", "2", "--emit"]);
    assert_eq!(code, 0);
    let cycle: Vec<&str> = stdout.lines().collect();
    assert_eq!(cycle.len(), 30);
    let distinct: HashSet<&str> = cycle.iter().copied().collect();
    assert_eq!(distinct.len(), 30);
    for (i, a) in cycle.iter().enumerate() {
        let b = cycle[(i + 1) % cycle.len()];
        let differing = a
            .bytes()
            .zip(b.bytes())
            .filter(|(x, y)| x != y)
            .count();
        assert_eq!(differing, 1, "step {i}: {a} to {b}");
        let weight = a.bytes().filter(|&c| c == b'1').count();
        assert!((1..=4).contains(&weight), "{a} is outside the four levels");
    }

    let (code, closed, _) = run(&["middle4", "2", "--emit", "--closed"]);
    assert_eq!(code, 0);
    let closed: Vec<&str> = closed.lines().collect();
    assert_eq!(closed.len(), 31);
    assert_eq!(closed.first(), closed.last());
    assert_eq!(closed[..30], cycle[..]);

    let (code, stdout, _) = run(&["middle4", "3", "--check"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 10);
    assert!(stdout.lines().all(|l| l.starts_with("pass:") || l == "all 9 checks passed"));
    assert_eq!(stdout.lines().last(), Some("all 9 checks passed"));
}

#[test]
fn necklace_search_writes_decompositions_and_lifts() {
    let dir = std::env::temp_dir().join(format!("symchain-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let out = dir.to_str().unwrap();

    let (code, stdout, _) = run(&["necklace-search", "5", "3", "--out", out]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("found 3 pairwise disjoint decompositions of N_5\n"));
    for name in ["n5_0.scd", "n5_1.scd", "n5_2.scd", "q5_0.scd", "q5_1.scd", "q5_2.scd"] {
        let path: PathBuf = dir.join(name);
        assert!(path.is_file(), "{name} should have been written");
        let written = fs::read_to_string(&path).unwrap();
        let committed: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
        assert_eq!(
            written,
            fs::read_to_string(&committed).unwrap(),
            "{name} should match the committed fixture byte for byte"
        );
    }

    let (code, _, _) = run(&["necklace-search", "4", "2", "--out", out]);
    assert_eq!(code, 0);
    assert!(dir.join("n4_0.scd").is_file());
    assert!(
        !dir.join("q4_0.scd").exists(),
        "no cube lift is defined for a composite dimension"
    );

    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn necklace_search_failure_modes() {
    let (code, stdout, stderr) = run(&["necklace-search", "5", "4"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("no 4 pairwise disjoint decompositions"));
    assert!(stderr.contains("exhaustive"));

    let (code, _, stderr) = run(&["necklace-search", "7", "4", "--budget", "10"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("budget of 10 steps exceeded"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["scd", "product:0", "4"][..],
        &["scd", "necklace:0", "9"],
        &["factor", "2", "--ell", "9", "--scds", "d0,d0c"],
        &["middle4", "4"],
        &["middle4", "2", "--closed"],
        &["factor", "2", "--ell", "2", "--scds", "d0,d0c", "--census", "--emit"],
        &["bogus"],
    ] {
        let (code, _, stderr) = run(args);
        assert_eq!(code, 2, "args {args:?} gave stderr: {stderr}");
        assert!(!stderr.is_empty());
    }
}

#[test]
fn json_output_is_deterministic() {
    let (code, first, _) = run(&["scd", "d0", "3", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(
        first,
        "{\"command\":\"scd\",\"params\":{\"kind\":\"d0\",\"n\":3,\"verify\":false},\
         \"results\":{\"chain_count\":3,\"chains\":[\"000 100 110 111\",\"001 101\",\
         \"010 011\"],\"failures\":null,\"verified\":null}}\n"
    );
    let (_, second, _) = run(&["scd", "d0", "3", "--json"]);
    assert_eq!(first, second);

    let (code, orbits, _) = run(&["middle4", "4", "--orbits", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(
        orbits,
        "{\"command\":\"middle4\",\"params\":{\"mode\":\"orbits\",\"n\":4},\
         \"results\":{\"orbit_count\":4,\"sizes\":[6,6,4,12]}}\n"
    );
}
