//! Acceptance: the invariant suite passes through the CLI, and identical
//! invocations produce byte-identical output.

use std::process::Command;

fn zeno_bytes(args: &[&str]) -> (Vec<u8>, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_zeno"))
        .args(args)
        .output()
        .expect("binary should run");
    (output.stdout, output.status.code().unwrap_or(-1))
}

#[test]
fn criterion_11_check_passes_and_output_is_byte_identical() {
    let (first, code) = zeno_bytes(&["check"]);
    assert_eq!(
        code,
        0,
        "check failed:\n{}",
        String::from_utf8_lossy(&first)
    );
    let text = String::from_utf8_lossy(&first);
    assert!(text.ends_with("10/10 checks passed\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("ok ")).count(), 10);

    let (second, code) = zeno_bytes(&["check"]);
    assert_eq!(code, 0);
    assert_eq!(first, second, "repeated check runs differ");

    // Representative commands of each module are also byte-stable.
    for args in [
        vec!["tree", "expand", "--depth", "6", "--format", "json"],
        vec![
            "seq",
            "poincare",
            "--epsilon",
            "3/2",
            "--values",
            "10,11,12",
            "--format",
            "json",
        ],
        vec![
            "dual", "eval", "--poly", "0,-2,0,1", "--x", "2,1", "--format", "json",
        ],
        vec!["paradox", "dichotomy", "--n", "64", "--format", "csv"],
    ] {
        let (first, code) = zeno_bytes(&args);
        assert_eq!(code, 0, "command {args:?} failed");
        let (second, _) = zeno_bytes(&args);
        assert_eq!(first, second, "output of {args:?} is not reproducible");
    }

    println!("PASS criterion 11 (CLI determinism): check passes twice with byte-identical output");
}
