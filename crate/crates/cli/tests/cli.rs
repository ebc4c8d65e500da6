use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn sl2q(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl2q"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn sl2q_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sl2q"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn temp_file(name: &str, content: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("sl2q-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, content).unwrap();
    p
}

#[test]
fn nf_examples_and_errors() {
    let o = sl2q(&["nf", "Xp*Xm", "--n", "5"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "C2p + q*C*X0 - q^2*X0^2\n");
    assert_eq!(stdout(&sl2q(&["nf", "C*X0 - X0*C", "--n", "5"])), "0\n");
    assert_eq!(code(&sl2q(&["nf", ""])), 2);
    assert_eq!(code(&sl2q(&["nf", "Xp*(Xm", "--n", "5"])), 2);
    assert_eq!(code(&sl2q(&["nf", "Xp^-1", "--n", "5"])), 2);
    assert_eq!(code(&sl2q(&["nf", "Xp", "--n", "2"])), 3);
    assert_eq!(code(&sl2q(&["nf", "Xp"])), 3);

    let j: Value = serde_json::from_str(&stdout(&sl2q(&[
        "nf", "Xm*Xp", "--n", "5", "--format", "json",
    ])))
    .unwrap();
    assert_eq!(
        j["normal_form"],
        "C2p + (1 + q + q^2 + q^3)*C*X0 - q^3*X0^2"
    );
    assert_eq!(j["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn centre_check_exit_codes() {
    for n in ["3", "4", "8"] {
        let o = sl2q(&["centre-check", "--n", n]);
        assert_eq!(code(&o), 0, "{}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
    assert_eq!(code(&sl2q(&["centre-check", "--n", "2"])), 3);
    let j: Value = serde_json::from_str(&stdout(&sl2q(&[
        "centre-check",
        "--n",
        "5",
        "--format",
        "json",
    ])))
    .unwrap();
    assert_eq!(j["all_passed"], true);
    assert_eq!(j["checks"].as_array().unwrap().len(), 5 + 5 + 1);
}

#[test]
fn rep_build_with_params_files() {
    let p = temp_file(
        "periodic.json",
        r#"{"c": 0, "c2p": 1, "x0": 1, "x_minus": 1}"#,
    );
    let o = sl2q(&[
        "rep-build",
        "--family",
        "periodic",
        "--n",
        "4",
        "--params",
        p.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let j: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j["dim"], 2);
    assert_eq!(j["X0"][1][1], serde_json::json!(["-1/1", "0/1"]));

    let too_big = temp_file("hw.json", r#"{"n_dim": 6, "nu": 1}"#);
    let o = sl2q(&[
        "rep-build",
        "--family",
        "highest_weight",
        "--n",
        "5",
        "--params",
        too_big.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 4);

    let half = temp_file("half.json", r#"{"n_dim": 2, "nu": "q"}"#);
    let o = sl2q(&[
        "rep-build",
        "--family",
        "highest_weight",
        "--n",
        "8",
        "--algebra",
        "A",
        "--params",
        half.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 4);
    assert!(stderr(&o).contains("l/2"), "{}", stderr(&o));

    let wrong = temp_file("wrong.json", r#"{"n_dim": 2, "nu": 1, "c": 1}"#);
    let o = sl2q(&[
        "rep-build",
        "--family",
        "highest_weight",
        "--n",
        "5",
        "--params",
        wrong.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 4);
    assert!(stderr(&o).contains("(q^2+1)c = (q^(2n)+1)nu"));

    let bad = temp_file("bad.json", "{ not json");
    let o = sl2q(&[
        "rep-build",
        "--family",
        "periodic",
        "--n",
        "5",
        "--params",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);
    assert_eq!(
        code(&sl2q(&["rep-build", "--family", "nope", "--n", "5"])),
        2
    );
    assert_eq!(
        code(&sl2q(&["rep-build", "--family", "periodic", "--n", "1"])),
        3
    );
}

fn pipe(n: &str, algebra: &str, family: &str, seed: &str) {
    let built = sl2q(&[
        "rep-build",
        "--family",
        family,
        "--n",
        n,
        "--algebra",
        algebra,
        "--seed",
        seed,
    ]);
    assert_eq!(
        code(&built),
        0,
        "{algebra} {family} n={n}: {}",
        stderr(&built)
    );
    let v = sl2q_stdin(&["rep-verify", "-", "--format", "json"], &built.stdout);
    assert_eq!(code(&v), 0, "{algebra} {family} n={n} seed={seed}");
    let j: Value = serde_json::from_str(&stdout(&v)).unwrap();
    assert_eq!(j["relations_pass"], true);
    assert_eq!(j["scalar_relation"], true);
    if family != "case4_cyclic" {
        assert_eq!(j["commutant_dimension"], 1, "{algebra} {family} n={n}");
    }
}

#[test]
fn build_then_verify_pipe() {
    let b_families = [
        "periodic",
        "semiperiodic",
        "highest_weight",
        "one_dim",
        "generic_one_dim",
        "case4_cyclic",
    ];
    for n in ["3", "4", "5", "6"] {
        for f in b_families {
            for seed in 0..20 {
                pipe(n, "B", f, &seed.to_string());
            }
        }
        for seed in 0..5 {
            for f in ["periodic", "semiperiodic", "highest_weight", "one_dim"] {
                pipe(n, "F", f, &seed.to_string());
            }
            for f in b_families {
                pipe(n, "A", f, &seed.to_string());
            }
        }
    }
}

#[test]
fn output_is_deterministic() {
    let args = [
        "rep-build",
        "--family",
        "semiperiodic",
        "--n",
        "6",
        "--seed",
        "3",
    ];
    assert_eq!(sl2q(&args).stdout, sl2q(&args).stdout);
    let c = ["classify", "--n", "6", "--algebra", "F"];
    assert_eq!(sl2q(&c).stdout, sl2q(&c).stdout);
}

#[test]
fn rep_verify_reports_corruption() {
    let built = sl2q(&["rep-build", "--family", "periodic", "--n", "5"]);
    let mut j: Value = serde_json::from_slice(&built.stdout).unwrap();
    j["Xp"][0][1][0] = Value::String("17/3".into());
    let o = sl2q_stdin(&["rep-verify", "-"], j.to_string().as_bytes());
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL R"), "{}", stdout(&o));

    let generic = temp_file(
        "generic.json",
        &serde_json::json!({
            "n": 3, "algebra": "B", "dim": 1,
            "c": ["0/1", "1/1"],
            "X0": [[["1/1", "0/1"]]], "Xp": [[["2/1", "0/1"]]], "Xm": [[["0/1", "3/1"]]],
            "family": "generic_one_dim", "params": {}
        })
        .to_string(),
    );
    // at n = 3, lambda = q - q^-1 = 1 + 2q
    let o = sl2q(&["rep-verify", generic.to_str().unwrap()]);
    assert_eq!(code(&o), 1, "c must equal lambda x0 here: {}", stdout(&o));
    let fixed = std::fs::read_to_string(&generic)
        .unwrap()
        .replace(r#""c":["0/1","1/1"]"#, r#""c":["1/1","2/1"]"#);
    let o = sl2q_stdin(&["rep-verify", "-"], fixed.as_bytes());
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("commutant dimension: 1"));

    assert_eq!(code(&sl2q_stdin(&["rep-verify", "-"], b"[1, 2")), 2);
    let bad_n = fixed.replace(r#""n":3"#, r#""n":2"#);
    assert_eq!(code(&sl2q_stdin(&["rep-verify", "-"], bad_n.as_bytes())), 3);
}

#[test]
fn classify_reports() {
    let j: Value =
        serde_json::from_str(&stdout(&sl2q(&["classify", "--n", "5", "--algebra", "B"]))).unwrap();
    let cases = j.as_array().unwrap();
    let count = |case: u64| {
        cases
            .iter()
            .find(|r| r["case"] == case)
            .map(|r| {
                (
                    r["free_params"].as_array().unwrap().len(),
                    r["relations"].as_u64().unwrap(),
                )
            })
            .unwrap()
    };
    assert_eq!(count(1), (5, 1));
    assert_eq!(count(2), (3, 0));
    assert_eq!(count(4), (3, 0));

    let f = stdout(&sl2q(&["classify", "--n", "4", "--algebra", "F"]));
    assert!(f.contains("These representations do not exist when l = 2"));
    let a = stdout(&sl2q(&[
        "classify",
        "--n",
        "4",
        "--algebra",
        "A",
        "--format",
        "text",
    ]));
    assert!(a.contains("l/2 = 1"));
    let a8 = stdout(&sl2q(&["classify", "--n", "8", "--algebra", "A"]));
    assert!(a8.contains("dimension l/2 = 2"));
    assert_eq!(code(&sl2q(&["classify", "--n", "2"])), 3);
    assert_eq!(code(&sl2q(&["classify", "--n", "5", "--algebra", "Z"])), 2);
}
