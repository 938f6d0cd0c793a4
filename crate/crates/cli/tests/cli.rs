use std::process::{Command, Output};

use framed_bps::ov::{ov_table, OVTableRecord};
use framed_bps::LinkKind;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_framed-bps"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Drops the title line of an ASCII table.
fn grid(s: &str) -> String {
    s.lines().skip(1).map(|l| format!("{}\n", l)).collect()
}

const TABLE_W22_00: &str = "\
i \\ j |  4  3  2  1  0 -1 -2 -3
------+------------------------
    4 |  0  1  0  0  0  0  0  0
    3 | -1 -2 -1 -1  0  1  0  0
    2 |  2  2  3  2 -1 -1  0  0
    1 | -1 -2 -3 -1  1  0 -1 -1
    0 |  0  1  1  0  0  0  3  2
   -1 |  0  0  0  0  1 -1 -3 -1
   -2 |  0  0  0  0 -1  1  1  0
";

const TABLE_B222_111: &str = "\
i \\ j | 15/2 13/2 11/2  9/2  7/2  5/2  3/2  1/2 -1/2 -3/2 -5/2
------+-------------------------------------------------------
    3 |    0    1    0   -2   -3   -3   -1   -1    0    0    0
    2 |   -1   -2    1    5    7    8    6    1    0   -1    0
    1 |    2    2    0   -3   -7   -9   -7   -2    0    2    1
    0 |   -1   -2   -2   -1    2    5    4    4    0    0   -1
   -1 |    0    1    1    2    2   -1   -3   -2   -2   -1    0
   -2 |    0    0    0   -1   -1    0    0    0    2    0    0
   -3 |    0    0    0    0    0    0    1    0    0    0    0
";

#[test]
fn whitehead_ascii_layout() {
    let out = stdout(&[
        "ov-table",
        "--link",
        "whitehead",
        "--colors",
        "2,2",
        "--framing",
        "0,0",
    ]);
    assert_eq!(grid(&out), TABLE_W22_00);
}

#[test]
fn borromean_ascii_layout() {
    let out = stdout(&[
        "ov-table",
        "--link",
        "borromean",
        "--colors",
        "2,2,2",
        "--framing",
        "1,1,1",
    ]);
    assert_eq!(grid(&out), TABLE_B222_111);
}

#[test]
fn ascii_is_deterministic() {
    let args = [
        "ov-table",
        "--link",
        "whitehead",
        "--colors",
        "2,3",
        "--framing",
        "1,-1",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn json_round_trips() {
    let out = stdout(&[
        "ov-table",
        "--link",
        "whitehead",
        "--colors",
        "2,3",
        "--framing",
        "0,1",
        "--format",
        "json",
    ]);
    let rec: OVTableRecord = serde_json::from_str(&out).unwrap();
    let lib = ov_table(LinkKind::Whitehead, &[2, 3], &[0, 1])
        .unwrap()
        .to_record();
    assert_eq!(rec, lib);
    assert_eq!(rec.epsilon, [1, 1]);
    let again = serde_json::to_string_pretty(&rec).unwrap() + "\n";
    assert_eq!(again, out);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for key in ["link", "framings", "colors", "epsilon", "entries"] {
        assert!(v.get(key).is_some(), "missing {}", key);
    }
    assert!(v["entries"][0].get("N").is_some());
}

#[test]
fn csv_columns() {
    let out = stdout(&[
        "ov-table",
        "--link",
        "borromean",
        "--colors",
        "1,1,2",
        "--framing",
        "0,0,0",
        "--format",
        "csv",
    ]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("i2,j2,N"));
    let lib = ov_table(LinkKind::Borromean, &[1, 1, 2], &[0, 0, 0]).unwrap();
    assert_eq!(lines.count(), lib.entries.len());
    assert!(out.contains("\n4,1,-1\n"));
}

#[test]
fn zero_colors_is_a_usage_error() {
    let out = run(&[
        "ov-table",
        "--link",
        "whitehead",
        "--colors",
        "0,0",
        "--framing",
        "0,0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("zero"));
}

#[test]
fn wrong_arity_is_a_usage_error() {
    let out = run(&[
        "ov-table",
        "--link",
        "whitehead",
        "--colors",
        "2",
        "--framing",
        "0,0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn twist_homfly_is_rejected() {
    let out = run(&[
        "homfly",
        "--link",
        "twist",
        "--p",
        "2",
        "--colors",
        "1",
        "--framing",
        "0",
    ]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsupported knot kind"));
}

#[test]
fn unknot_homfly_pair_form() {
    let out = stdout(&[
        "homfly",
        "--link",
        "unknot",
        "--colors",
        "1",
        "--framing",
        "0",
    ]);
    assert!(out.contains("H = (a^(1/2) - a^(-1/2)) / {1}"), "{}", out);
}

#[test]
fn homfly_json_terms() {
    let out = stdout(&[
        "homfly",
        "--link",
        "whitehead",
        "--colors",
        "2,2",
        "--framing",
        "0,0",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["link"], "whitehead");
    assert!(!v["numerator"].as_array().unwrap().is_empty());
    let t = &v["numerator"][0];
    assert!(t.get("q2").is_some() && t.get("a2").is_some() && t.get("c").is_some());
}

#[test]
fn unknot_bps_both_sources_match() {
    let out = stdout(&[
        "bps",
        "--knot",
        "unknot",
        "--framing",
        "0",
        "--r-max",
        "4",
        "--source",
        "both",
        "--format",
        "csv",
    ]);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 2 + 3 + 4 + 5);
    assert!(rows.iter().all(|r| r.ends_with(",true")), "{}", out);
    for tau in ["-2", "3"] {
        let out = stdout(&[
            "bps",
            "--knot",
            "unknot",
            "--framing",
            tau,
            "--r-max",
            "5",
            "--format",
            "csv",
        ]);
        assert!(!out.contains("false"));
    }
}

#[test]
fn twist_extremal_columns() {
    let out = stdout(&[
        "bps",
        "--knot",
        "twist",
        "--p",
        "-1",
        "--framing",
        "0",
        "--r-max",
        "6",
        "--format",
        "csv",
    ]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("r,sign,curve,closed,match"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 12);
    assert_eq!(rows[0], "1,+,1,1,true");
    assert_eq!(rows[1], "1,-,-1,-1,true");
}

#[test]
fn empty_bps_table() {
    let out = run(&[
        "bps",
        "--knot",
        "unknot",
        "--framing",
        "0",
        "--r-max",
        "0",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "r,m2,curve,closed,match\n"
    );
}

#[test]
fn series_first_coefficient() {
    let out = stdout(&[
        "series",
        "--knot",
        "unknot",
        "--framing",
        "0",
        "--order",
        "2",
    ]);
    assert!(out.contains("y^2 [x^1] = a^(1/2) - a^(-1/2)"), "{}", out);
}

#[test]
fn series_json_parses() {
    let out = stdout(&[
        "series", "--knot", "twist", "--p", "2", "--curve", "minus", "--order", "4", "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["y2"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_suites_pass() {
    for suite in [
        vec!["verify", "tables"],
        vec!["verify", "symmetry"],
        vec!["verify", "recursion"],
        vec![
            "verify",
            "integrality",
            "--r-max",
            "30",
            "--t-range",
            "-10:10",
        ],
    ] {
        let out = stdout(&suite);
        assert!(!out.contains("[FAIL]"), "{}", out);
        assert!(out.contains("[PASS]"));
    }
    let out = stdout(&["verify", "tables"]);
    assert!(out.ends_with("14 of 14 cases passed\n"));
}

#[test]
fn bad_range_is_a_usage_error() {
    let out = run(&["verify", "integrality", "--t-range", "3"]);
    assert_eq!(out.status.code(), Some(2));
}
