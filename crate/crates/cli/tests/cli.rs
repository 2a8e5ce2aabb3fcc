//! End-to-end tests of the `fb` binary: wire formats, exit codes, and
//! byte-level determinism.

use std::process::{Command, Output};

fn fb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn check_reports_violations_as_json_with_exit_1() {
    let out = fb(&["check", "0101010"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        stdout(&out),
        "{\"kind\":\"four_minus_power\",\"start\":0,\"period\":2}\n"
    );

    let out = fb(&["check", "110"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        stdout(&out),
        "{\"kind\":\"factor11\",\"start\":0,\"period\":0}\n"
    );
}

#[test]
fn check_accepts_fb_words() {
    let out = fb(&["check", "0100101001001010010100100101001001"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "fb\n");
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(fb(&["check", "012"]).status.code(), Some(2));
    assert_eq!(fb(&["parse", "110"]).status.code(), Some(2));
    assert_eq!(fb(&["parse", "00"]).status.code(), Some(2));
    assert_eq!(
        fb(&["gen", "fife", "--seed", "0110", "--ops", "a"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(fb(&["count", "-n", "99"]).status.code(), Some(2));
    // Usage errors (clap) are also 2.
    assert_eq!(fb(&["extremal", "-n", "5"]).status.code(), Some(2));
    assert_eq!(fb(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn pinned_constants_from_the_cli() {
    assert_eq!(
        stdout(&fb(&["extremal", "--greatest", "-n", "5"])),
        "10101\n"
    );
    assert_eq!(stdout(&fb(&["extremal", "--least", "-n", "2"])), "00\n");
    assert_eq!(
        stdout(&fb(&["gen", "fib", "-n", "34"])),
        "0100101001001010010100100101001001\n"
    );
    assert_eq!(
        stdout(&fb(&["gen", "fife", "--seed", "010", "--ops", "ab"])),
        "01001001010\n"
    );
}

#[test]
fn operator_aliases_accepted() {
    let ascii = fb(&["gen", "fife", "--seed", "010", "--ops", "ab"]);
    let greek = fb(&["gen", "fife", "--seed", "010", "--ops", "αβ"]);
    assert_eq!(stdout(&ascii), stdout(&greek));
}

#[test]
fn parse_emits_wire_format() {
    let out = fb(&["parse", "0101001"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["seed"], "010");
    assert_eq!(value["ops"], "b");
    assert_eq!(value["consumed"], 7);
}

#[test]
fn enumerate_and_count() {
    assert_eq!(
        stdout(&fb(&["enumerate", "-n", "3"])),
        "001\n010\n100\n101\n"
    );
    assert_eq!(
        stdout(&fb(&["enumerate", "-n", "3", "--json"])),
        "[\"001\",\"010\",\"100\",\"101\"]\n"
    );
    assert_eq!(stdout(&fb(&["count", "-n", "5"])), "7\n");
}

#[test]
fn automaton_dot_shape() {
    let out = stdout(&fb(&["automaton", "--seed", "010", "--dot"]));
    assert!(out.contains("a -> a [label=\"a\"]"));
    assert!(out.contains("c -> e [label=\"b\"]"));
    let labeled = out.matches("[label=\"a\"]").count() + out.matches("[label=\"b\"]").count();
    assert_eq!(labeled, 14);
}

#[test]
fn random_generation_is_reproducible() {
    let args = [
        "gen",
        "fife",
        "--seed",
        "0010",
        "--random",
        "8",
        "--rng-seed",
        "9",
    ];
    let first = fb(&args);
    let second = fb(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout(&first), stdout(&second));
    // The generated word avoided the sink, so it must be fb.
    let word = stdout(&first);
    let check = fb(&["check", word.trim()]);
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn random_requires_rng_seed() {
    assert_eq!(
        fb(&["gen", "fife", "--seed", "010", "--random", "5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_suites_pass_and_are_deterministic() {
    let first = fb(&["verify", "--suite", "words", "--max-len", "8"]);
    assert_eq!(first.status.code(), Some(0));
    let second = fb(&["verify", "--suite", "words", "--max-len", "8"]);
    assert_eq!(stdout(&first), stdout(&second));
    assert!(stdout(&first).contains("0 failed"));

    let extremal = fb(&["verify", "--suite", "extremal", "--max-len", "8"]);
    assert_eq!(extremal.status.code(), Some(0));
}

#[test]
fn verify_all_at_default_scale_is_fast() {
    let start = std::time::Instant::now();
    let out = fb(&["verify", "--suite", "all", "--max-len", "12"]);
    let took = start.elapsed();
    assert_eq!(out.status.code(), Some(0));
    assert!(
        took < std::time::Duration::from_secs(60),
        "verify took {took:?}"
    );
}
