use std::io::Cursor;
use std::process::{Command, Stdio};

use degseq::cli::run;
use serde_json::Value;

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn invoke(args: &[&str], stdin: &str) -> Outcome {
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("degseq").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = invoke(&full, "");
    assert_eq!(o.out.lines().count(), 1, "exactly one JSON document: {}", o.out);
    (o.code, serde_json::from_str(&o.out).expect("well-formed JSON"))
}

fn bound<'a>(doc: &'a Value, name: &str) -> &'a Value {
    doc["results"]["bounds"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["predicate"] == name)
        .unwrap()
}

#[test]
fn check_graphic_gap_sequence() {
    let o = invoke(&["check", "5,1^11"], "");
    assert_eq!(o.code, 0);
    assert!(o.out.contains("erdos_gallai: graphic"));
    assert!(o.out.contains("improved_floor  holds"));
    assert!(o.out.contains("zz_simplified   fails"));

    let (code, doc) = json(&["check", "5,1^11"]);
    assert_eq!(code, 0);
    assert_eq!(doc["command"], "check");
    assert_eq!(doc["input"], "5,1^11");
    assert_eq!(doc["results"]["erdos_gallai"]["graphic"], true);
    assert_eq!(bound(&doc, "improved_floor")["holds"], true);
    assert_eq!(bound(&doc, "zz_simplified")["holds"], false);
    assert_eq!(bound(&doc, "zz_simplified")["lhs"], 48);
    assert_eq!(bound(&doc, "zz_simplified")["rhs"], 49);
}

#[test]
fn check_witness_reports_violation() {
    let o = invoke(&["check", "4^3,1^4"], "");
    assert_eq!(o.code, 3);
    assert!(o.out.contains("first_violation: k=3 lhs=12 rhs=10"));

    let (code, doc) = json(&["check", "4^3,1^4"]);
    assert_eq!(code, 3);
    let v = &doc["results"]["erdos_gallai"]["first_violation"];
    assert_eq!((v["k"].as_u64(), v["lhs"].as_u64(), v["rhs"].as_u64()), (Some(3), Some(12), Some(10)));
}

#[test]
fn parse_errors_exit_two() {
    let o = invoke(&["check", "0,1"], "");
    assert_eq!(o.code, 2);
    assert!(o.out.is_empty());
    assert!(o.err.contains("zero"));
    assert_eq!(invoke(&["realize", "1,,1"], "").code, 2);
}

#[test]
fn realize_outputs() {
    let o = invoke(&["realize", "2,2,2"], "");
    assert_eq!((o.code, o.out.as_str()), (0, "0 1\n0 2\n1 2\n"));
    let o = invoke(&["realize", "1,1"], "");
    assert_eq!((o.code, o.out.as_str()), (0, "0 1\n"));
    let o = invoke(&["realize", "3,3,1,1"], "");
    assert_eq!((o.code, o.out.as_str()), (3, "NOT GRAPHIC\n"));

    let (code, doc) = json(&["realize", "3^4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn witness_and_gap() {
    let o = invoke(&["witness", "5"], "");
    assert_eq!((o.code, o.out.as_str()), (0, "5^3,1^7\n"));
    let o = invoke(&["gap", "2"], "");
    assert_eq!((o.code, o.out.as_str()), (0, "4^2,1^6\n"));
    assert_eq!(invoke(&["witness", "1"], "").code, 2);
    assert_eq!(invoke(&["gap", "0"], "").code, 2);
    assert_eq!(invoke(&["witness", "-3"], "").code, 2);

    let o = invoke(&["witness", "4", "--verify"], "");
    assert!(o.out.starts_with("4^3,1^4\n"));
    assert!(o.out.contains("erdos_gallai: not graphic"));
    assert!(o.out.contains("improved_floor  fails  lhs=7 rhs=8"));

    let (_, doc) = json(&["gap", "3", "--verify"]);
    assert_eq!(doc["results"]["sequence"], "6,1^14");
    assert_eq!(doc["results"]["erdos_gallai"]["graphic"], true);
    assert_eq!(bound(&doc, "improved_floor")["holds"], true);
    assert_eq!(bound(&doc, "zz_corollary")["holds"], false);
}

#[test]
fn sweep_and_scan() {
    let o = invoke(&["sweep", "--nmax", "8", "--dmax", "5"], "");
    assert_eq!(o.code, 0);
    assert!(o.out.contains("sequences_checked: 1286"));
    assert!(o.out.contains("violations: 0"));

    let o = invoke(&["scan", "--d1", "4"], "");
    assert_eq!(o.code, 0);
    assert!(o.out.contains("threshold: 8"));
    assert!(o.out.contains("confirmed: true"));

    let o = invoke(&["scan", "--d1", "100"], "");
    assert_eq!(o.code, 2);
    assert!(o.err.contains("--force"));
    assert_eq!(invoke(&["sweep", "--nmax", "40", "--dmax", "40"], "").code, 2);
    assert_eq!(invoke(&["scan", "--d1", "1"], "").code, 2);
}

#[test]
fn jobs_do_not_change_output() {
    for args in [
        vec!["sweep", "--nmax", "7", "--dmax", "5"],
        vec!["scan", "--d1", "5", "--extra", "1"],
    ] {
        for format in ["text", "json"] {
            let mut base = vec!["--format", format, "--jobs", "1"];
            base.extend(&args);
            let reference = invoke(&base, "").out;
            for jobs in ["2", "3", "8"] {
                let mut other = vec!["--format", format, "--jobs", jobs];
                other.extend(&args);
                assert_eq!(invoke(&other, "").out, reference, "{args:?} jobs={jobs}");
            }
        }
    }
    assert_eq!(invoke(&["--jobs", "0", "sweep"], "").code, 2);
}

#[test]
fn naive_flag_gives_same_answers() {
    for seq in ["5,1^11", "4^3,1^4", "3,2,1,1", "9^5,1^30"] {
        let a = invoke(&["--format", "json", "check", seq], "");
        let b = invoke(&["--format", "json", "--naive-eg", "check", seq], "");
        assert_eq!((a.code, a.out), (b.code, b.out));
    }
}

#[test]
fn json_contains_every_text_field() {
    let text = invoke(&["check", "3,3,2,2,2"], "").out;
    let (_, doc) = json(&["check", "3,3,2,2,2"]);
    let results = doc["results"].as_object().unwrap();
    for line in text.lines().filter(|l| !l.starts_with(' ')) {
        let key = line.split(':').next().unwrap();
        assert!(results.contains_key(key), "{key} missing from JSON");
    }
    let eg = doc["results"]["erdos_gallai"].as_object().unwrap();
    for key in ["parity_even", "first_violation", "graphic"] {
        assert!(eg.contains_key(key));
    }
    for b in doc["results"]["bounds"].as_array().unwrap() {
        for key in ["predicate", "applicable", "holds", "lhs", "rhs", "min_n"] {
            assert!(b.get(key).is_some(), "{key}");
        }
    }

    let text = invoke(&["sweep", "--nmax", "4", "--dmax", "3"], "").out;
    let (_, doc) = json(&["sweep", "--nmax", "4", "--dmax", "3"]);
    for line in text.lines().filter(|l| !l.starts_with(' ')) {
        let key = line.split(':').next().unwrap();
        assert!(doc["results"].get(key).is_some(), "{key} missing from sweep JSON");
    }

    let text = invoke(&["scan", "--d1", "3"], "").out;
    let (_, doc) = json(&["scan", "--d1", "3"]);
    for line in text.lines().filter(|l| !l.starts_with(' ') && !l.starts_with("note")) {
        let key = line.split(':').next().unwrap();
        assert!(doc["results"].get(key).is_some(), "{key} missing from scan JSON");
    }
}

#[test]
fn batch_mode_from_stdin() {
    let o = invoke(&["check"], "1,1\n\n2,2,2\n");
    assert_eq!(o.code, 0);
    assert!(o.out.contains("input: 1,1"));
    assert!(o.out.contains("input: 2,2,2"));

    let o = invoke(&["check"], "1,1\n3,3,1,1\n");
    assert_eq!(o.code, 3);

    let o = invoke(&["--format", "json", "check"], "1,1\nnope\n3,3,1,1\n");
    assert_eq!(o.code, 2);
    let doc: Value = serde_json::from_str(&o.out).unwrap();
    let items = doc["results"].as_array().unwrap();
    assert_eq!(items.len(), 3);
    assert!(items[1]["error"].is_string());
    assert_eq!(items[2]["results"]["erdos_gallai"]["graphic"], false);

    let o = invoke(&["realize"], "2,2,2\n1,1\n");
    assert_eq!(o.code, 0);
    assert!(o.out.contains("0 1\n0 2\n1 2\n"));
}

#[test]
fn usage_errors() {
    assert_eq!(invoke(&[], "").code, 2);
    assert_eq!(invoke(&["frobnicate"], "").code, 2);
    assert_eq!(invoke(&["--format", "xml", "check", "1,1"], "").code, 2);
    assert_eq!(invoke(&["--help"], "").code, 0);
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_degseq");
    let status = |args: &[&str]| {
        Command::new(exe)
            .args(args)
            .stdout(Stdio::null())
            .stderr(Stdio::null())
            .status()
            .unwrap()
            .code()
    };
    assert_eq!(status(&["check", "5,1^11"]), Some(0));
    assert_eq!(status(&["check", "4^3,1^4"]), Some(3));
    assert_eq!(status(&["check", "0,1"]), Some(2));
    assert_eq!(status(&["witness", "1"]), Some(2));

    let out = Command::new(exe).args(["witness", "5"]).output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "5^3,1^7\n");
}
