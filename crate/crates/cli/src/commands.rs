use std::fmt::Write as _;

use brb_core::algebra::RotaBaxterSplit;
use brb_core::convolution::{HopfMap, UnitalLinMap};
use brb_core::diffeo::{birkhoff_factorize_via, BrbRoute, DiffeoFactorization, FormalDiffeo};
use brb_core::hopf::{render_tensor, HopfAlgebraSpec};
use brb_core::universal::{closed_brb, closed_inverse};
use brb_core::verify::{run_suite, Suite};
use serde_json::{json, Map, Value};

use crate::config::{MapInput, RunConfig, Task};

/// Result of a run: structured report, its text rendering and exit status.
pub struct Outcome {
    pub report: Value,
    pub text: String,
    pub status: u8,
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFICATION: u8 = 1;
pub const EXIT_CONFIG: u8 = 2;

pub fn execute(config: &RunConfig) -> brb_core::Result<Outcome> {
    match &config.task {
        Task::Decompose {
            input,
            split,
            check_oracle,
        } => decompose(input, *split, *check_oracle),
        Task::Inverse { input, check_oracle } => inverse(input, *check_oracle),
        Task::Diffeo {
            diffeo,
            random,
            split,
            route,
            check_oracle,
        } => factorize(diffeo, *random, *split, *route, *check_oracle),
        Task::Verify { suites, seed } => Ok(verify(suites, *seed)),
        Task::Table { spec } => Ok(table(spec)),
    }
}

fn hopf_block(spec: &HopfAlgebraSpec) -> Value {
    let mut m = Map::new();
    m.insert("instance".into(), json!(spec.name()));
    m.insert("degree".into(), json!(spec.truncation()));
    if let Some(c) = spec.convention() {
        m.insert("convention".into(), json!(c));
    }
    Value::Object(m)
}

fn oracle_block(agrees: bool, first_difference: Option<String>) -> Value {
    json!({
        "method": "recursive",
        "agrees": agrees,
        "first_difference": first_difference,
    })
}

fn first_difference(spec: &HopfAlgebraSpec, pairs: &[(&UnitalLinMap, &UnitalLinMap)]) -> Option<String> {
    pairs
        .iter()
        .filter_map(|(a, b)| a.first_difference(b))
        .min()
        .map(|m| spec.render(&m))
}

fn decompose(input: &MapInput, split: RotaBaxterSplit, check_oracle: bool) -> brb_core::Result<Outcome> {
    let spec = &input.spec;
    let phi = &input.map;
    let d = closed_brb(phi, split)?;

    let mut table = Map::new();
    let mut text = format!("{spec}, split {split}, {} input\n", input.kind.name());
    for m in spec.monomials() {
        let key = spec.render(m);
        let (x, p, n) = (phi.value(m), d.plus.value(m), d.minus.value(m));
        table.insert(
            key.clone(),
            json!({"input": x.to_string(), "plus": p.to_string(), "minus": n.to_string()}),
        );
        writeln!(text, "{key}: input {x} | plus {p} | minus {n}").unwrap();
    }
    let mut report = Map::new();
    report.insert("command".into(), json!("decompose"));
    report.insert("hopf".into(), hopf_block(spec));
    report.insert("split".into(), json!(split.name()));
    report.insert("input".into(), json!(input.kind.name()));
    report.insert("table".into(), Value::Object(table));

    let mut status = EXIT_OK;
    if check_oracle {
        let r = phi.brb_recursive(split)?;
        let diff = first_difference(spec, &[(&d.plus, &r.plus), (&d.minus, &r.minus)]);
        let agrees = diff.is_none();
        match &diff {
            None => writeln!(text, "oracle: recursive decomposition agrees").unwrap(),
            Some(m) => writeln!(text, "oracle: MISMATCH at {m}").unwrap(),
        }
        if !agrees {
            status = EXIT_VERIFICATION;
        }
        report.insert("oracle".into(), oracle_block(agrees, diff));
    }
    Ok(Outcome {
        report: Value::Object(report),
        text,
        status,
    })
}

fn inverse(input: &MapInput, check_oracle: bool) -> brb_core::Result<Outcome> {
    let spec = &input.spec;
    let phi = &input.map;
    let inv = closed_inverse(phi)?;

    let mut table = Map::new();
    let mut text = format!("{spec}, {} input\n", input.kind.name());
    for m in spec.monomials() {
        let key = spec.render(m);
        let (x, y) = (phi.value(m), inv.value(m));
        table.insert(key.clone(), json!({"input": x.to_string(), "inverse": y.to_string()}));
        writeln!(text, "{key}: input {x} | inverse {y}").unwrap();
    }
    let mut report = Map::new();
    report.insert("command".into(), json!("inverse"));
    report.insert("hopf".into(), hopf_block(spec));
    report.insert("input".into(), json!(input.kind.name()));
    report.insert("table".into(), Value::Object(table));

    let mut status = EXIT_OK;
    if check_oracle {
        let r = phi.inverse_recursive();
        let diff = first_difference(spec, &[(&inv, &r)]);
        match &diff {
            None => writeln!(text, "oracle: recursive inverse agrees").unwrap(),
            Some(m) => writeln!(text, "oracle: MISMATCH at {m}").unwrap(),
        }
        if diff.is_some() {
            status = EXIT_VERIFICATION;
        }
        report.insert("oracle".into(), oracle_block(diff.is_none(), diff));
    }
    Ok(Outcome {
        report: Value::Object(report),
        text,
        status,
    })
}

fn coefficient_block(f: &FormalDiffeo) -> Value {
    let mut m = Map::new();
    for (n, c) in f.coefficients() {
        m.insert(n.to_string(), json!(c.to_string()));
    }
    Value::Object(m)
}

fn write_series(text: &mut String, label: &str, f: &FormalDiffeo) {
    writeln!(text, "{label}:").unwrap();
    for (n, c) in f.coefficients() {
        writeln!(text, "  x^{n}: {c}").unwrap();
    }
}

fn route_name(route: BrbRoute) -> &'static str {
    match route {
        BrbRoute::Closed => "closed",
        BrbRoute::Recursive => "recursive",
    }
}

fn factorize(
    f: &FormalDiffeo,
    random: bool,
    split: RotaBaxterSplit,
    route: BrbRoute,
    check_oracle: bool,
) -> brb_core::Result<Outcome> {
    let d: DiffeoFactorization = birkhoff_factorize_via(f, split, route)?;
    let composed = d.composed_equals_plus(f)?;
    let violation = d.sector_violation(split)?;

    let mut report = Map::new();
    report.insert("command".into(), json!("diffeo"));
    report.insert("order".into(), json!(f.order()));
    report.insert("split".into(), json!(split.name()));
    report.insert("route".into(), json!(route_name(route)));
    if random {
        report.insert("random".into(), json!(true));
    }
    report.insert("input".into(), coefficient_block(f));
    report.insert("plus".into(), coefficient_block(&d.plus));
    report.insert("minus".into(), coefficient_block(&d.minus));
    report.insert(
        "verification".into(),
        json!({
            "composed_equals_plus": composed,
            "sectors_ok": violation.is_none(),
            "first_sector_violation": violation,
        }),
    );

    let mut text = format!("order {}, split {split}, route {}\n", f.order(), route_name(route));
    write_series(&mut text, "input", f);
    write_series(&mut text, "plus", &d.plus);
    write_series(&mut text, "minus", &d.minus);
    writeln!(text, "f_- o f = f_+: {}", if composed { "yes" } else { "NO" }).unwrap();
    match violation {
        None => writeln!(text, "sectors: ok").unwrap(),
        Some(n) => writeln!(text, "sectors: VIOLATED at x^{n}").unwrap(),
    }

    let mut ok = composed && violation.is_none();
    if check_oracle {
        let other = match route {
            BrbRoute::Closed => BrbRoute::Recursive,
            BrbRoute::Recursive => BrbRoute::Closed,
        };
        let agrees = birkhoff_factorize_via(f, split, other)? == d;
        writeln!(text, "oracle ({}): {}", route_name(other), if agrees { "agrees" } else { "MISMATCH" }).unwrap();
        report.insert(
            "oracle".into(),
            json!({"method": route_name(other), "agrees": agrees}),
        );
        ok &= agrees;
    }
    Ok(Outcome {
        report: Value::Object(report),
        text,
        status: if ok { EXIT_OK } else { EXIT_VERIFICATION },
    })
}

fn verify(suites: &[Suite], seed: u64) -> Outcome {
    let mut results = Map::new();
    let mut text = String::new();
    let mut all = true;
    for &s in suites {
        let r = run_suite(s, seed);
        all &= r.passed();
        match &r.failure {
            None => writeln!(text, "{s}: PASS ({} checks)", r.checks).unwrap(),
            Some(c) => writeln!(text, "{s}: FAIL after {} checks\n  {c}", r.checks).unwrap(),
        }
        results.insert(
            s.name().into(),
            json!({
                "passed": r.passed(),
                "checks": r.checks,
                "counterexample": r.failure.as_ref().map(|c| json!({"check": c.check, "detail": c.detail})),
            }),
        );
    }
    writeln!(text, "{}", if all { "all suites passed" } else { "verification FAILED" }).unwrap();
    Outcome {
        report: json!({
            "command": "verify",
            "seed": seed,
            "suites": Value::Object(results),
            "passed": all,
        }),
        text,
        status: if all { EXIT_OK } else { EXIT_VERIFICATION },
    }
}

fn table(spec: &HopfAlgebraSpec) -> Outcome {
    let mut gens = Map::new();
    let mut text = format!("{spec}\n");
    for (i, g) in spec.generators().iter().enumerate() {
        let rendered = render_tensor(spec, spec.generator_coproduct(i));
        gens.insert(
            g.name.clone(),
            json!({"degree": g.degree, "reduced_coproduct": rendered}),
        );
        writeln!(text, "D'({}) = {rendered}", g.name).unwrap();
    }
    Outcome {
        report: json!({
            "command": "table",
            "hopf": hopf_block(spec),
            "generators": Value::Object(gens),
        }),
        text,
        status: EXIT_OK,
    }
}
