use std::process::{Command, Output};

fn deutsch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deutsch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = deutsch(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn count_by_every_method() {
    for method in ["closed", "series", "brute", "direct"] {
        assert_eq!(stdout(&["count", "--length", "5", "--method", method]), "6\n");
    }
    assert_eq!(stdout(&["count", "--length", "12"]), "2871\n");
}

#[test]
fn list_length_four() {
    assert_eq!(
        stdout(&["list", "--length", "4"]),
        "U U U D3\nU U D1 D1\nU D1 U D1\n"
    );
    let json = stdout(&["list", "--length", "2", "--json"]);
    assert_eq!(json, "{\"steps\":[\"U\",\"D1\"]}\n");
}

#[test]
fn tree_and_back() {
    let json = stdout(&["tree", "--path", "U U D2 U D1", "--json"]);
    assert_eq!(json, "{\"backbone\":[\"d\"],\"bundles\":[[[\"s\",\"d\"]]]}\n");
    assert_eq!(stdout(&["path", "--tree", json.trim()]), "U U D2 U D1\n");
    assert_eq!(
        stdout(&["tree", "--path", "U D1 U U D2"]),
        "node 0  hangs: d\n  |s\nnode 1\n  |d\nnode 2\n"
    );
}

#[test]
fn gf_coefficients() {
    assert_eq!(
        stdout(&["gf", "--form", "with-empty", "--terms", "7"]),
        "1, 0, 1, 1, 3, 6, 15, 35\n"
    );
    assert_eq!(
        stdout(&["gf", "--form", "mountain", "--terms", "5", "--json"]),
        "{\"form\":\"mountain\",\"coeffs\":[\"0\",\"0\",\"1\",\"1\",\"2\",\"3\"]}\n"
    );
}

#[test]
fn small_sequences() {
    assert_eq!(stdout(&["mountains", "--steps", "10"]), "34\n");
    assert_eq!(stdout(&["tilings", "--length", "4"]), "5\n");
    assert_eq!(stdout(&["tilings", "--length", "4", "--first-square"]), "3\n");
    assert_eq!(
        stdout(&["sequence", "--name", "pell", "--terms", "6"]),
        "0, 1, 2, 5, 12, 29\n"
    );
}

#[test]
fn verify_passes() {
    let text = stdout(&["verify", "--max", "12"]);
    assert!(text.lines().count() >= 13);
    assert!(text.lines().all(|l| l.starts_with("PASS ")), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["tree", "--path", "U D0"][..],
        &["tree", "--path", "U D2"],
        &["tree", "--path", "U U D1 U D2 U D1"],
        &["path", "--tree", "{\"backbone\":[\"s\"],\"bundles\":[[]]}"],
        &["gf", "--form", "nonsense", "--terms", "3"],
        &["count", "--length", "x"],
        &["frobnicate"],
    ] {
        let out = deutsch(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "--max", "10", "--json"];
    assert_eq!(stdout(&args), stdout(&args));
}
