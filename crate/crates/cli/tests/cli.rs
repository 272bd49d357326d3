use std::process::{Command, Output};

use octachar::notation::{parse_bipartition, parse_partition, parse_rationals};
use octachar_core::{MnEvaluator, Partition, Rat};

fn octachar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octachar"))
        .args(args)
        .env_remove("OCTACHAR_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = octachar(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn census_line() {
    assert_eq!(
        stdout(&["census", "--m", "20"]),
        "627 total, 227 positive, 254 negative, 146 zero\n"
    );
    assert_eq!(
        stdout(&["census", "--m", "2"]),
        "2 total, 1 positive, 1 negative, 0 zero\n"
    );
}

#[test]
fn norm_halves() {
    assert_eq!(stdout(&["norm", "[8]"]), "([4]|[])\n");
    assert_eq!(stdout(&["norm", "[2^3,1]"]), "([1^3]|[])\n");
    let out = octachar(&["norm", "[3,1]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("norm undefined"));
}

#[test]
fn char_and_basechange() {
    assert_eq!(stdout(&["char", "[2^2,1^4]", "[2^4]"]), "4\n");
    assert_eq!(stdout(&["char", "[3^3]", "[2^4,1]"]), "-6\n");
    assert_eq!(
        stdout(&["basechange", "([1^3]|[1])", "--target", "odd"]),
        "[3,1^6]\n"
    );
    assert_eq!(stdout(&["basechange", "([1^3]|[1])"]), "[2^2,1^4]\n");
}

#[test]
fn schur_prints_reduced_fraction() {
    assert_eq!(stdout(&["schur", "[1,1]", "--at", "1,2,3"]), "11/1\n");
    assert_eq!(stdout(&["schur", "[2,1]", "--at", "-1/2,3"]), "-15/4\n");
    let out = octachar(&["schur", "[1]", "--at", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_errors_report_position() {
    let out = octachar(&["char", "[1,2]", "[3]"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("weakly decreasing at position 3"), "{err}");
    let out = octachar(&["char", "[0]", "[]"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("parts must be positive"));
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(octachar(&["frobnicate"]).status.code(), Some(2));
    for sub in [
        "char",
        "chartable",
        "basechange",
        "norm",
        "schur",
        "verify",
        "table",
        "census",
        "sweep",
        "dims",
    ] {
        let out = octachar(&[sub, "--help"]);
        assert!(out.status.success(), "{sub}");
        assert!(String::from_utf8_lossy(&out.stdout).contains("Usage"));
    }
}

#[test]
fn sweep_passes_and_prints_seed() {
    let out = stdout(&["sweep", "--max", "5"]);
    assert!(out.starts_with("seed 1\n"));
    assert!(out.lines().skip(1).all(|l| l.starts_with("PASS ")), "{out}");
    let seeded = stdout(&["sweep", "--max", "2", "--seed", "77"]);
    assert!(seeded.starts_with("seed 77\n"));
}

#[test]
fn verify_is_deterministic_across_job_counts() {
    let one = stdout(&[
        "--jobs",
        "1",
        "--json",
        "verify",
        "odd-fact",
        "--max-size",
        "7",
        "--seed",
        "3",
    ]);
    let four = stdout(&[
        "--jobs",
        "4",
        "--json",
        "verify",
        "odd-fact",
        "--max-size",
        "7",
        "--seed",
        "3",
    ]);
    assert_eq!(one, four);
    let env = Command::new(env!("CARGO_BIN_EXE_octachar"))
        .args([
            "--json",
            "verify",
            "odd-fact",
            "--max-size",
            "7",
            "--seed",
            "3",
        ])
        .env("OCTACHAR_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(env.stdout).unwrap(), one);
    for line in one.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["seed"], 3);
        assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    }
}

#[test]
fn verify_each_identity() {
    for id in ["frobenius", "even-fact", "odd-fact"] {
        let out = stdout(&["verify", id, "--max-size", "6", "--seed", "9"]);
        assert!(out.starts_with("seed 9\n"));
        assert!(out.contains("PASS"));
        assert!(!out.contains("FAIL"));
    }
}

#[test]
fn dims_exit_status() {
    let out = stdout(&["dims", "--n", "6", "--target", "odd"]);
    assert_eq!(
        out,
        "n = 6, odd: 65 bipartitions, dimensions match |theta(w0)|\n"
    );
}

#[test]
fn table_json_round_trips() {
    let out = stdout(&["table", "--n", "3", "--json"]);
    let mut eval = MnEvaluator::new();
    let mut rows = 0;
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        if let Some(list) = v.get("excluded") {
            for l in list.as_array().unwrap() {
                parse_partition(l.as_str().unwrap()).unwrap();
            }
            continue;
        }
        rows += 1;
        let pi = parse_bipartition(v["bipartition"].as_str().unwrap()).unwrap();
        let even = parse_partition(v["lambda_even"].as_str().unwrap()).unwrap();
        let odd = parse_partition(v["lambda_odd"].as_str().unwrap()).unwrap();
        assert_eq!(pi.to_string(), v["bipartition"].as_str().unwrap());
        let w6 = octachar_core::characters::w0_class(6);
        assert_eq!(
            eval.character(&even, &w6).unwrap(),
            v["theta_even"].as_i64().unwrap() as i128
        );
        assert_eq!(odd.size(), 7);
    }
    assert_eq!(rows, 10);
}

#[test]
fn tsv_outputs_reparse() {
    let table = stdout(&["table", "--n", "4", "--tsv"]);
    let mut lines = table.lines();
    assert_eq!(
        lines.next().unwrap(),
        "bipartition\tlambda_even\tlambda_odd\ttheta_even\ttheta_odd\tsign_even\tsign_odd\tbn_dim"
    );
    for line in lines {
        let fields: Vec<&str> = line.split('\t').collect();
        if fields[0] == "excluded" {
            fields[2..].iter().for_each(|f| {
                parse_partition(f).unwrap();
            });
        } else {
            parse_bipartition(fields[0]).unwrap();
            parse_partition(fields[1]).unwrap();
            parse_partition(fields[2]).unwrap();
            fields[3..].iter().for_each(|f| {
                f.parse::<i128>().unwrap();
            });
        }
    }

    let chartable = stdout(&["chartable", "5"]);
    let mut lines = chartable.lines();
    let header: Vec<&str> = lines.next().unwrap().split('\t').collect();
    assert_eq!(header[0], "lambda");
    let classes: Vec<Partition> = header[1..]
        .iter()
        .map(|c| parse_partition(c).unwrap())
        .collect();
    assert_eq!(classes.len(), 7);
    let rows: Vec<Partition> = lines
        .map(|l| parse_partition(l.split('\t').next().unwrap()).unwrap())
        .collect();
    assert!(rows.windows(2).all(|w| w[0] < w[1]));

    let schur = stdout(&["--tsv", "schur", "[3,1]", "--at", "1/2,-2,5/3"]);
    let value = schur.lines().nth(1).unwrap().split('\t').nth(1).unwrap();
    assert_eq!(parse_rationals(value).unwrap().len(), 1);
    let plain = stdout(&["schur", "[3,1]", "--at", "1/2,-2,5/3"]);
    assert_eq!(
        plain.trim().parse::<Rat>().unwrap(),
        parse_rationals(value).unwrap()[0]
    );
}

#[test]
fn census_and_dims_json() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["--json", "census", "--m", "21"])).unwrap();
    assert_eq!(v["total"], 792);
    assert_eq!(v["positive"], 252);
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["--json", "dims", "--n", "10"])).unwrap();
    assert_eq!(v["bipartitions"], 481);
    assert_eq!(v["matches"], true);
}
