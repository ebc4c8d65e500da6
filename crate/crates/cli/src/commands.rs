use std::fmt::Write as _;
use std::io::Read;

use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Value};

use sl2q::algebra::{centre_generators, centre_relation_sides, is_central, recursion_identity};
use sl2q::cyclotomic::FieldError;
use sl2q::expr::{parse, print_canonical};
use sl2q::representations::random::random_representation;
use sl2q::representations::{
    build_from_json, central_character, check_scalar_relation, classify, commutant_dimension,
    verify_relations, AlgebraTag, Family, RepError, RepresentationJson,
};
use sl2q::RootOrder;

use crate::{Cli, Command, Failure, Format};

pub struct Output {
    pub text: String,
    /// Whether every check passed.
    pub ok: bool,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, ok: true }
    }
}

pub fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Nf { expr } => nf(cli, expr),
        Command::CentreCheck => centre_check(cli),
        Command::RepBuild { family, params } => rep_build(cli, family, params.as_deref()),
        Command::RepVerify { file } => rep_verify(cli, file),
        Command::Classify => classify_cmd(cli),
    }
}

fn order(cli: &Cli) -> Result<RootOrder, Failure> {
    let n = cli.n.ok_or_else(|| Failure::order("--n is required"))?;
    RootOrder::new(n).map_err(|e| Failure::order(e.to_string()))
}

fn algebra(cli: &Cli) -> Result<AlgebraTag, Failure> {
    AlgebraTag::parse(&cli.algebra)
        .ok_or_else(|| Failure::parse(format!("unknown algebra {:?} (B, F or A)", cli.algebra)))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn rep_failure(e: RepError) -> Failure {
    match e {
        RepError::Format(m) => Failure::parse(m),
        RepError::Field(FieldError::InvalidOrder(_)) => Failure::order(e.to_string()),
        RepError::Field(FieldError::WrongLength { .. } | FieldError::BadRational(_)) => {
            Failure::parse(e.to_string())
        }
        other => Failure::constraint(other.to_string()),
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::parse(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::parse(format!("{path}: {e}")))
    }
}

fn nf(cli: &Cli, text: &str) -> Result<Output, Failure> {
    let ast = parse(text).map_err(|e| Failure::parse(e.to_string()))?;
    let o = order(cli)?;
    let e = ast
        .evaluate(&o)
        .map_err(|e| Failure::parse(e.to_string()))?;
    let printed = print_canonical(&e);
    Ok(Output::ok(match cli.format.unwrap_or(Format::Text) {
        Format::Text => format!("{printed}\n"),
        Format::Json => {
            let terms: Vec<Value> = e
                .terms()
                .map(|(m, c)| {
                    json!({
                        "exponents": [m.a_minus(), m.a_plus(), m.a_0(), m.b_1(), m.b_2()],
                        "coeff": c.to_strings(),
                    })
                })
                .collect();
            pretty(&json!({ "n": o.n(), "normal_form": printed, "terms": terms }))
        }
    }))
}

fn centre_check(cli: &Cli) -> Result<Output, Failure> {
    let o = order(cli)?;
    let mut rows: Vec<(String, bool)> = Vec::new();
    for (name, e) in centre_generators(&o) {
        rows.push((format!("{name} is central"), is_central(&e, &o)));
    }
    for p in 1..=o.l() as i64 {
        let (l, r) = recursion_identity(p, &o).expect("p >= 1");
        rows.push((format!("Xm^{p} Xp^{p} product formula"), l == r));
    }
    let (l, r) = centre_relation_sides(&o);
    rows.push(("Xm^l Xp^l centre relation".to_string(), l == r));
    let ok = rows.iter().all(|(_, p)| *p);
    let text = match cli.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut s = format!("n = {}, l = {}\n", o.n(), o.l());
            for (name, passed) in &rows {
                let _ = writeln!(s, "{} {name}", if *passed { "PASS" } else { "FAIL" });
            }
            s
        }
        Format::Json => {
            let checks: Vec<Value> = rows
                .iter()
                .map(|(name, passed)| json!({ "identity": name, "passed": passed }))
                .collect();
            pretty(&json!({ "n": o.n(), "l": o.l(), "checks": checks, "all_passed": ok }))
        }
    };
    Ok(Output { text, ok })
}

fn rep_build(cli: &Cli, family: &str, params: Option<&str>) -> Result<Output, Failure> {
    let o = order(cli)?;
    let a = algebra(cli)?;
    let fam = Family::parse(family).ok_or_else(|| {
        let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
        Failure::parse(format!(
            "unknown family {family:?} (one of {})",
            names.join(", ")
        ))
    })?;
    let rep = match params {
        Some(path) => {
            let text = read_input(path)?;
            let v: Value =
                serde_json::from_str(&text).map_err(|e| Failure::parse(format!("params: {e}")))?;
            build_from_json(a, fam, &v, &o).map_err(rep_failure)?
        }
        None => {
            let mut rng = StdRng::seed_from_u64(cli.seed);
            random_representation(a, fam, &o, &mut rng)
                .map_err(rep_failure)?
                .1
        }
    };
    let mut text = RepresentationJson::from_representation(&rep).to_string_pretty();
    text.push('\n');
    Ok(Output::ok(text))
}

fn rep_verify(cli: &Cli, file: &str) -> Result<Output, Failure> {
    let text = read_input(file)?;
    let j = RepresentationJson::parse(&text).map_err(rep_failure)?;
    let rep = j.to_representation().map_err(rep_failure)?;
    let report = verify_relations(&rep);
    let cc = central_character(&rep);
    let scalar = cc
        .as_ref()
        .ok()
        .map(|cc| check_scalar_relation(cc, &rep.order));
    let commutant = commutant_dimension(&rep);
    let ok = report.all_passed();
    let text = match cli.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut s = format!(
                "{} representation of {} at n = {}, dim {}\n",
                rep.family.name(),
                rep.algebra,
                rep.order.n(),
                rep.dim()
            );
            s.push_str(&report.to_string());
            match &cc {
                Ok(cc) => {
                    let _ = writeln!(s, "central character:");
                    for (k, v) in [
                        ("c", &cc.c),
                        ("c2p", &cc.c2p),
                        ("xp_l", &cc.xp_l),
                        ("xm_l", &cc.xm_l),
                        ("z", &cc.z),
                        ("d2", &cc.d2),
                    ] {
                        let _ = writeln!(s, "  {k} = {}", v.to_q_string());
                    }
                }
                Err(e) => {
                    let _ = writeln!(s, "central character: {e}");
                }
            }
            if let Some(b) = scalar {
                let _ = writeln!(s, "{} scalar relation", if b { "PASS" } else { "FAIL" });
            }
            let _ = writeln!(s, "commutant dimension: {commutant}");
            s
        }
        Format::Json => {
            let relations: Vec<Value> = report
                .checks
                .iter()
                .map(|c| json!({ "name": c.name, "statement": c.statement, "passed": c.passed }))
                .collect();
            let character = match &cc {
                Ok(cc) => json!({
                    "c": cc.c.to_strings(),
                    "c2p": cc.c2p.to_strings(),
                    "xp_l": cc.xp_l.to_strings(),
                    "xm_l": cc.xm_l.to_strings(),
                    "z": cc.z.to_strings(),
                    "d2": cc.d2.to_strings(),
                }),
                Err(e) => json!({ "error": e.to_string() }),
            };
            pretty(&json!({
                "relations": relations,
                "relations_pass": ok,
                "central_character": character,
                "scalar_relation": scalar,
                "commutant_dimension": commutant,
            }))
        }
    };
    Ok(Output { text, ok })
}

fn classify_cmd(cli: &Cli) -> Result<Output, Failure> {
    let o = order(cli)?;
    let a = algebra(cli)?;
    let report = classify(&o, a);
    Ok(Output::ok(match cli.format.unwrap_or(Format::Json) {
        Format::Json => pretty(&report.to_json()),
        Format::Text => report.to_string(),
    }))
}
