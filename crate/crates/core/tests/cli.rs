use std::process::{Command, Output};

use weightmult::rootsystem::ParsedWeight;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weightmult"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn mult_example() {
    let o = run(&["mult", "A2:1,2", "A2:1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn mult_accepts_omega_coordinates() {
    let o = run(&["mult", "F4:w:1,0,0,0", "F4:w:0,0,0,0"]);
    assert_eq!(stdout(&o), "4\n");
}

#[test]
fn roots_g2() {
    let o = run(&["roots", "G2"]);
    assert_eq!(stdout(&o), "short G2:2,1  long G2:3,2\n");
}

#[test]
fn verify_paper_reports_g2() {
    let o = run(&["verify-paper", "--cap", "6"]);
    let text = stdout(&o);
    assert!(
        text.contains(r#""nonprimg": {"pass": true, "witnesses": ["G2:4,2"]}"#),
        "{text}"
    );
    assert!(text.contains(r#""schema": 1"#));
    // The extra A_n and C_3 weights make the overall verdict fail.
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_paper_tsv_lists_every_lemma() {
    let o = run(&["verify-paper", "--cap", "4", "--tsv"]);
    let text = stdout(&o);
    let keys: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split('\t').next().unwrap())
        .collect();
    assert_eq!(
        keys,
        [
            "annonprim",
            "nonprimb",
            "nonprimc",
            "nonprimd",
            "nonprimesix",
            "nonprimeseven",
            "nonprimeeight",
            "nonprimf",
            "nonprimg",
            "theorem_main"
        ]
    );
}

#[test]
fn malformed_weight_is_usage_error_naming_token() {
    let o = run(&["mult", "A2:1,x", "A2:1,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains('x'));
}

#[test]
fn floats_are_rejected() {
    let o = run(&["mult", "A2:1.0,2", "A2:1,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1.0"));
}

#[test]
fn semantic_errors_are_usage_errors() {
    assert_eq!(run(&["mult", "A2:1,2", "B2:1,1"]).status.code(), Some(2));
    assert_eq!(run(&["pair", "A2:1,1", "A2:1"]).status.code(), Some(2));
    assert_eq!(run(&["survey", "H3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn multone_oracle_flags_contradiction() {
    let o = run(&["multone", "A3:1,2,1", "A3:1,1,1", "--oracle"]);
    assert_eq!(
        (o.status.code(), stdout(&o)),
        (Some(0), "true\t1\n".to_string())
    );
    let o = run(&["multone", "A3:3,2,1", "A3:1,1,1", "--oracle"]);
    assert_eq!(
        (o.status.code(), stdout(&o)),
        (Some(1), "false\t1\n".to_string())
    );
    let o = run(&[
        "multone",
        "A3:3,2,1",
        "A3:1,1,1",
        "--projection",
        "restrict",
        "--oracle",
    ]);
    assert_eq!(
        (o.status.code(), stdout(&o)),
        (Some(0), "true\t1\n".to_string())
    );
}

#[test]
fn pair_and_project() {
    assert_eq!(
        stdout(&run(&["pair", "A3:1,2,1", "A3:1,1,1"])),
        "nonprimitive S={2}\n"
    );
    let o = run(&["project", "F4:2,4,6,3", "F4:2,3,4,2"]);
    assert_eq!(stdout(&o), "S={2,3,4}\tC3\t4,3,2\tC3:3,6,4\tC3:2,4,3\n");
}

#[test]
fn output_is_byte_stable() {
    for args in [
        &["survey", "D5", "--all"][..],
        &["verify-paper", "--cap", "5"],
        &["diagram", "B3:1,2,3", "--json"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

fn assert_round_trip(token: &str) {
    let parsed: ParsedWeight = token.parse().unwrap_or_else(|e| panic!("{token}: {e}"));
    assert_eq!(parsed.to_string(), token);
}

#[test]
fn printed_weights_parse_back() {
    let o = run(&["survey", "B4", "--all", "--cap", "6"]);
    let text = stdout(&o);
    let mut seen = 0;
    for line in text.lines().skip(1) {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_round_trip(cols[1]);
        assert_round_trip(cols[3]);
        seen += 1;
    }
    assert!(seen > 0);

    for lambda in ["C3:2,3,2", "G2:w:1,1"] {
        let o = run(&["diagram", lambda]);
        for line in stdout(&o).lines().skip(1) {
            assert_round_trip(line.split('\t').next().unwrap());
        }
    }
    let o = run(&[
        "project",
        "E7:2,3,4,6,5,4,2",
        "E7:2,2,3,4,3,2,1",
        "--projection",
        "restrict",
    ]);
    for line in stdout(&o).lines() {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_round_trip(cols[3]);
        assert_round_trip(cols[4]);
    }
}

#[test]
fn survey_tsv_header_and_target_filter() {
    let o = run(&["survey", "G2", "--target", "long"]);
    assert_eq!(
        stdout(&o),
        "type\tzeta\ttarget\tmu\tclass\tfastpath\toracle\nG2\tG2:4,2\tlong\tG2:3,2\tnonprimitive S={1}\ttrue\t1\n"
    );
    let o = run(&["survey", "G2", "--target", "short"]);
    assert_eq!(stdout(&o).lines().count(), 1);
}
