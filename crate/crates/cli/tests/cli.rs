//! End-to-end tests of the command surface: pinned outputs, exit codes,
//! and the three output formats.

use std::process::Command;

fn zeno(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_zeno"))
        .args(args)
        .output()
        .expect("binary should run");
    (
        String::from_utf8(output.stdout).expect("stdout is utf-8"),
        String::from_utf8(output.stderr).expect("stderr is utf-8"),
        output.status.code().unwrap_or(-1),
    )
}

fn stdout_of(args: &[&str]) -> String {
    let (stdout, stderr, code) = zeno(args);
    assert_eq!(code, 0, "command {args:?} failed: {stderr}");
    stdout
}

#[test]
fn squaring_the_generator_gives_zero() {
    assert_eq!(
        stdout_of(&["dual", "mul", "--x", "0,1", "--y", "0,1"]),
        "0 + 0·h\n"
    );
}

#[test]
fn sequence_value_prints_the_reduced_rational() {
    assert_eq!(stdout_of(&["seq", "value", "--seq", ":(10)"]), "2/3\n");
    assert_eq!(stdout_of(&["seq", "value", "--seq", "1:(0)"]), "1/2\n");
}

#[test]
fn dichotomy_json_is_sorted_and_exact() {
    let out = stdout_of(&["paradox", "dichotomy", "--n", "3", "--format", "json"]);
    assert_eq!(
        out,
        "{\"cumulative\":\"7/8\",\"depth\":3,\"partitions\":\"3\",\"parts\":\"8\",\
         \"remaining\":\"1/8\",\"steps\":[\"1/2\",\"1/4\",\"1/8\"]}\n"
    );
}

#[test]
fn tree_commands() {
    let out = stdout_of(&["tree", "expand", "--depth", "3", "--format", "json"]);
    assert!(out.starts_with("[{\"label\":\"000\",\"lower\":\"0\",\"upper\":\"1/8\"}"));
    assert!(out.contains("{\"label\":\"111\",\"lower\":\"7/8\",\"upper\":\"1\"}"));

    let out = stdout_of(&["tree", "counts", "--depth", "20"]);
    assert_eq!(out, "depth: 20\npartitions: 1048575\nparts: 1048576\n");

    let out = stdout_of(&["tree", "interval", "--word", "101", "--format", "json"]);
    assert_eq!(
        out,
        "{\"label\":\"101\",\"lower\":\"5/8\",\"midpoint\":\"11/16\",\"upper\":\"3/4\"}\n"
    );

    // The empty word names the whole rod.
    let out = stdout_of(&["tree", "interval", "--word", ""]);
    assert_eq!(out, "label: ε\nlower: 0\nupper: 1\nmidpoint: 1/2\n");
}

#[test]
fn seq_commands() {
    assert_eq!(
        stdout_of(&["seq", "compare", "--x", "0:(1)", "--y", "1:(0)"]),
        "Less\n"
    );
    assert_eq!(stdout_of(&["seq", "canon", "--seq", "0:(1)"]), "1:(0)\n");
    assert_eq!(stdout_of(&["seq", "classify", "--seq", "0:(1)"]), "B\n");
    assert_eq!(stdout_of(&["seq", "classify", "--seq", ":(10)"]), "A\n");
    assert_eq!(
        stdout_of(&["seq", "pair", "--k", "1", "--n", "1", "--format", "json"]),
        "{\"lower\":\"0:(1)\",\"upper\":\"1:(0)\",\"value\":\"1/2\"}\n"
    );
    assert_eq!(
        stdout_of(&["seq", "witness", "--x", ":(0)", "--y", "1:(0)"]),
        "01:(0)\n"
    );
    let out = stdout_of(&[
        "seq",
        "gap",
        "--k",
        "1",
        "--n",
        "1",
        "--candidate",
        ":(10)",
        "--candidate",
        "01:(0)",
    ]);
    assert_eq!(out, "gap: true\nlower: 0:(1)\nupper: 1:(0)\n");
}

#[test]
fn poincare_formats() {
    let plain = stdout_of(&[
        "seq",
        "poincare",
        "--epsilon",
        "3/2",
        "--values",
        "10,11,12",
    ]);
    assert!(plain.contains("witnesses: (10, 11, 12)"));
    assert!(plain.ends_with("intransitive: true\n"));

    let json = stdout_of(&[
        "seq",
        "poincare",
        "--epsilon",
        "3/2",
        "--values",
        "10,11,12",
        "--format",
        "json",
    ]);
    assert_eq!(
        json,
        "{\"distinguishable\":[[0,2]],\"epsilon\":\"3/2\",\"indistinguishable\":[[0,1],[1,2]],\
         \"intransitive\":true,\"values\":[\"10\",\"11\",\"12\"],\"witnesses\":[[0,1,2]]}\n"
    );

    let csv = stdout_of(&[
        "seq",
        "poincare",
        "--epsilon",
        "3/2",
        "--values",
        "10,11,12",
        "--format",
        "csv",
    ]);
    assert_eq!(
        csv,
        "relation,a,b,c\nindistinguishable,10,11,\nindistinguishable,11,12,\n\
         distinguishable,10,12,\nwitness,10,11,12\n"
    );
}

#[test]
fn dual_commands() {
    assert_eq!(
        stdout_of(&["dual", "add", "--x", "1,2", "--y", "3,4"]),
        "4 + 6·h\n"
    );
    assert_eq!(
        stdout_of(&["dual", "div", "--x", "8,22", "--y", "4,5"]),
        "2 + 3·h\n"
    );
    assert_eq!(
        stdout_of(&["dual", "eval", "--poly", "0,-2,0,1", "--x", "2,1"]),
        "4 + 10·h\n"
    );
    assert_eq!(
        stdout_of(&["dual", "eval", "--poly", "0,0,1", "--x", "3,1", "--format", "json"]),
        "{\"a\":\"9\",\"b\":\"6\"}\n"
    );
    assert_eq!(
        stdout_of(&["dual", "boost", "--x", "3,2", "--w", "5"]),
        "3 + 7·h\n"
    );
    assert_eq!(
        stdout_of(&["dual", "worldline", "--x", "3,2", "--t", "5"]),
        "13\n"
    );
    // Negative literals pass through.
    assert_eq!(
        stdout_of(&["dual", "add", "--x", "-1/2,0", "--y", "1/2,-3"]),
        "0 + -3·h\n"
    );
}

#[test]
fn paradox_commands() {
    let out = stdout_of(&[
        "paradox",
        "achilles",
        "--ratio",
        "2",
        "--head-start",
        "1",
        "--steps",
        "1",
    ]);
    assert_eq!(out, "ratio: 2\nhead_start: 1\npoints: 1, 3/2\nlimit: 2\n");

    let out = stdout_of(&[
        "paradox", "stadium", "--bodies", "4", "--ticks", "3", "--format", "json",
    ]);
    assert_eq!(
        out,
        "{\"bodies\":4,\"offset_a\":0,\"offset_b\":3,\"offset_c\":-3,\
         \"passings_b_vs_a\":3,\"passings_b_vs_c\":6,\"ratio\":\"2\",\"ticks\":3}\n"
    );

    let out = stdout_of(&["paradox", "arrow", "--n", "40", "--format", "json"]);
    assert_eq!(
        out,
        "{\"count\":\"1099511627776\",\"depth\":40,\"product\":\"1\",\
         \"width\":\"1/1099511627776\"}\n"
    );

    let csv = stdout_of(&["paradox", "dichotomy", "--n", "3", "--format", "csv"]);
    assert_eq!(
        csv,
        "step,length,cumulative,remaining\n1,1/2,1/2,1/2\n2,1/4,3/4,1/4\n3,1/8,7/8,1/8\n"
    );
}

#[test]
fn domain_errors_exit_one_with_structured_json() {
    let (stdout, stderr, code) = zeno(&["dual", "div", "--x", "1,0", "--y", "0,1"]);
    assert_eq!(code, 1);
    assert!(stdout.is_empty());
    let err: serde_json::Value = serde_json::from_str(&stderr).expect("stderr is JSON");
    assert_eq!(err["error"]["kind"], "zero-divisor");

    let (_, stderr, code) = zeno(&[
        "paradox",
        "achilles",
        "--ratio",
        "1",
        "--head-start",
        "1",
        "--steps",
        "1",
    ]);
    assert_eq!(code, 1);
    let err: serde_json::Value = serde_json::from_str(&stderr).expect("stderr is JSON");
    assert_eq!(err["error"]["kind"], "ratio-not-greater-than-one");

    let (_, _, code) = zeno(&["paradox", "stadium", "--bodies", "4", "--ticks", "0"]);
    assert_eq!(code, 1);
    let (_, _, code) = zeno(&["paradox", "dichotomy", "--n", "0"]);
    assert_eq!(code, 1);
    let (_, _, code) = zeno(&["seq", "witness", "--x", "0:(1)", "--y", "1:(0)"]);
    assert_eq!(code, 1);
}

#[test]
fn usage_errors_exit_two() {
    let (_, stderr, code) = zeno(&["seq", "value", "--seq", "zzz"]);
    assert_eq!(code, 2);
    assert!(!stderr.is_empty());

    let (_, _, code) = zeno(&["dual", "add", "--x", "1/0,0", "--y", "0,0"]);
    assert_eq!(code, 2);

    let (_, _, code) = zeno(&["bogus"]);
    assert_eq!(code, 2);

    let (_, _, code) = zeno(&["paradox", "dichotomy", "--n", "three"]);
    assert_eq!(code, 2);
}

#[test]
fn help_exits_zero() {
    let (stdout, _, code) = zeno(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("zeno"));
}
