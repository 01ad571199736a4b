//! The batch commands: check, nichols, verify, bosonize, eval.
//!
//! Every command is a pure function from parsed inputs to a rendered report;
//! mathematical failures are part of the report (exit code 1), input
//! problems are errors (exit code 2). Evaluation is sequential and
//! deterministic, so reports are byte-stable for a fixed spec and seed.

use serde_json::{json, Value};

use braided_forge_core::bosonization::typeone_smash_check;
use braided_forge_core::braiding::Braiding;
use braided_forge_core::cotensor::build_cotensor_bialgebra;
use braided_forge_core::dsl;
use braided_forge_core::graded::{
    check_bialgebra_compat, check_graded_algebra_axioms, check_graded_coalgebra_axioms,
    check_strongly_graded, CheckReport, GradedSide, TruncatedGradedBialgebra,
};
use braided_forge_core::hopf::{check_hopf_bimodule, check_yd, yd_to_bimodule};
use braided_forge_core::matrix::Matrix;
use braided_forge_core::scalar::FieldSpec;
use braided_forge_core::tensor::build_tensor_bialgebra;
use braided_forge_core::typeone::{
    equivalence_probe, magnum_check, symmetrizer_perm_sum, symmetrizer_recursive,
    symmetrizer_via_psi, typeone_truncation, EquivalenceProbe, MagnumVerdict,
};

use crate::spec::{load_env, load_spec, LoadedSpec};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub max_degree: usize,
    pub format: Format,
    pub seed: u64,
    pub field_override: Option<FieldSpec>,
}

/// Rendered output plus whether a mathematical check failed.
pub struct CmdOutput {
    pub stdout: String,
    pub math_failed: bool,
}

fn render(format: Format, value: &Value, text: String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serializable"),
        Format::Text => text,
    }
}

fn report_json(r: &CheckReport) -> Value {
    json!({
        "check": r.check,
        "instances": r.instances,
        "failures": r.failures.iter().map(|f| json!({
            "indices": f.indices,
            "residual_entry": [f.residual_entry.0, f.residual_entry.1],
        })).collect::<Vec<_>>(),
    })
}

fn reports_json(reports: &[CheckReport]) -> Vec<Value> {
    reports.iter().map(report_json).collect()
}

fn reports_text(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!(
            "{} {} ({} instances, {} failures)\n",
            if r.passed() { "PASS" } else { "FAIL" },
            r.check,
            r.instances,
            r.failures.len()
        ));
    }
    out
}

fn matrix_json(m: &Matrix) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
        .collect();
    json!(rows)
}

fn probe_json(p: &EquivalenceProbe) -> Value {
    json!({
        "comult_all_mono": p.comult_all_mono,
        "comult_a1_mono": p.comult_a1_mono,
        "psi_mono_upto_n": p.psi_mono_upto_n,
        "wedge_powers_are_floors": p.wedge_powers_are_floors,
        "mult_all_epi": p.mult_all_epi,
        "mult_a1_epi": p.mult_a1_epi,
        "phi_epi_upto_n": p.phi_epi_upto_n,
        "ideal_powers_are_ceilings": p.ideal_powers_are_ceilings,
        "consistent": p.consistent(),
        "psi_untruncated": "not evaluable at finite truncation",
    })
}

fn magnum_json(v: &MagnumVerdict) -> Value {
    json!({
        "ideal_square_is_ceiling": v.ideal_square_is_ceiling,
        "wedge_square_is_floor": v.wedge_square_is_floor,
        "passed": v.passed(),
    })
}

fn prefixed(prefix: &str, reports: Vec<CheckReport>) -> Vec<CheckReport> {
    reports
        .into_iter()
        .map(|mut r| {
            r.check = format!("{prefix}.{}", r.check);
            r
        })
        .collect()
}

/// Deterministic pseudo-random matrix for the seeded self-test.
fn seeded_matrix(seed: &mut u64, n: usize, field: FieldSpec) -> Matrix {
    Matrix::from_fn(n, n, field, |_, _| {
        *seed ^= *seed << 13;
        *seed ^= *seed >> 7;
        *seed ^= *seed << 17;
        field.from_i64((*seed % 13) as i64 - 6)
    })
}

/// Kronecker functoriality on seed-derived matrices: the one check whose
/// instances depend on --seed.
fn self_test(seed: u64, field: FieldSpec) -> CheckReport {
    let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
    let mut report = CheckReport {
        check: String::from("selfTest.kroneckerFunctoriality"),
        instances: 0,
        failures: Vec::new(),
    };
    for i in 0..3usize {
        let f = seeded_matrix(&mut state, 2, field);
        let g = seeded_matrix(&mut state, 3, field);
        let fp = seeded_matrix(&mut state, 2, field);
        let gp = seeded_matrix(&mut state, 3, field);
        let lhs = f.kronecker(&g).mul(&fp.kronecker(&gp));
        let rhs = f.mul(&fp).kronecker(&g.mul(&gp));
        report.instances += 1;
        if let Some(entry) = lhs.sub(&rhs).first_nonzero() {
            report.failures.push(braided_forge_core::graded::Failure {
                indices: vec![i],
                residual_entry: entry,
            });
        }
    }
    report
}

pub fn cmd_check(path: &str, cfg: &RunConfig) -> Result<CmdOutput, CliError> {
    let loaded = match load_spec(path, cfg.field_override) {
        Ok(l) => l,
        Err(CliError::Math(msg)) => {
            let value = json!({ "command": "check", "status": "failed", "reason": msg });
            return Ok(CmdOutput {
                stdout: render(cfg.format, &value, format!("FAIL {msg}\n")),
                math_failed: true,
            });
        }
        Err(e) => return Err(e),
    };
    let (reports, kind) = match &loaded {
        LoadedSpec::Braided { braiding, yd } => {
            let mut reports = vec![braid_equation_report(braiding)];
            if let Some(module) = yd {
                reports.extend(prefixed("yd", check_yd(module)));
                reports.extend(prefixed(
                    "bimodule",
                    check_hopf_bimodule(&yd_to_bimodule(module)),
                ));
            }
            (reports, if yd.is_some() { "yd" } else { "braiding" })
        }
        LoadedSpec::Bialgebra(b) => {
            let mut reports = prefixed("coalgebra", check_graded_coalgebra_axioms(b));
            reports.extend(prefixed("algebra", check_graded_algebra_axioms(b)));
            reports.extend(prefixed("compat", check_bialgebra_compat(b)));
            (reports, "bialgebra")
        }
    };
    let passed = reports.iter().all(CheckReport::passed);
    let value = json!({
        "command": "check",
        "kind": kind,
        "status": if passed { "ok" } else { "failed" },
        "checks": reports_json(&reports),
    });
    let text = format!(
        "{}{}\n",
        reports_text(&reports),
        if passed { "OK" } else { "FAILED" }
    );
    Ok(CmdOutput {
        stdout: render(cfg.format, &value, text),
        math_failed: !passed,
    })
}

fn braid_equation_report(b: &Braiding) -> CheckReport {
    // the braiding was validated at construction; re-derive the residual so
    // the report carries real instance counts
    let c1 = b
        .strand_operator(3, 1)
        .expect("strand 1 exists on V^{⊗3}");
    let c2 = b.strand_operator(3, 2).expect("strand 2 exists");
    let lhs = c1.mul(&c2).mul(&c1);
    let rhs = c2.mul(&c1).mul(&c2);
    let mut report = CheckReport {
        check: String::from("braidEquation"),
        instances: 1,
        failures: Vec::new(),
    };
    if let Some(entry) = lhs.sub(&rhs).first_nonzero() {
        report.failures.push(braided_forge_core::graded::Failure {
            indices: vec![],
            residual_entry: entry,
        });
    }
    report
}

pub fn cmd_nichols(path: &str, cfg: &RunConfig) -> Result<CmdOutput, CliError> {
    let loaded = load_spec(path, cfg.field_override)?;
    let LoadedSpec::Braided { braiding, .. } = loaded else {
        return Err(CliError::Input(String::from(
            "nichols requires a braiding spec, not a bialgebra fixture",
        )));
    };
    let result = typeone_truncation(&braiding, cfg.max_degree)
        .map_err(|e| CliError::Math(format!("{e}")))?;
    let relations: serde_json::Map<String, Value> = result
        .new_relations
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    let value = json!({
        "dims": result.dims,
        "new_relations": relations,
        "hilbert": result.hilbert_string(),
    });
    let text = format!(
        "dims: {:?}\nnew relations: {:?}\nhilbert: {}\n",
        result.dims,
        result.new_relations,
        result.hilbert_string()
    );
    Ok(CmdOutput {
        stdout: render(cfg.format, &value, text),
        math_failed: false,
    })
}

pub fn cmd_verify(path: &str, cfg: &RunConfig) -> Result<CmdOutput, CliError> {
    let loaded = load_spec(path, cfg.field_override)?;
    match loaded {
        LoadedSpec::Braided { braiding, .. } => verify_braiding(&braiding, cfg),
        LoadedSpec::Bialgebra(b) => verify_bialgebra(&b, cfg),
    }
}

fn axiom_suite(prefix: &str, b: &TruncatedGradedBialgebra) -> Vec<CheckReport> {
    let mut reports = prefixed(prefix, check_graded_coalgebra_axioms(b));
    reports.extend(prefixed(prefix, check_graded_algebra_axioms(b)));
    reports.extend(prefixed(prefix, check_bialgebra_compat(b)));
    reports
}

fn verify_braiding(braiding: &Braiding, cfg: &RunConfig) -> Result<CmdOutput, CliError> {
    let n = cfg.max_degree;
    let t = build_tensor_bialgebra(braiding, n);
    let tc = build_cotensor_bialgebra(braiding, n);

    let mut checks = Vec::new();
    checks.extend(axiom_suite("tensor", &t));
    checks.extend(axiom_suite("cotensor", &tc));
    let mut strong_t = check_strongly_graded(&t, GradedSide::Algebra);
    strong_t.check = String::from("tensor.stronglyGradedAlgebra");
    checks.push(strong_t);
    let mut strong_tc = check_strongly_graded(&tc, GradedSide::Coalgebra);
    strong_tc.check = String::from("cotensor.stronglyGradedCoalgebra");
    checks.push(strong_tc);

    let result = typeone_truncation(braiding, n).map_err(|e| CliError::Math(format!("{e}")))?;
    checks.extend(axiom_suite("typeone", &result.bialgebra));
    let mut strong = check_strongly_graded(&result.bialgebra, GradedSide::Coalgebra);
    strong.check = String::from("typeone.stronglyGradedCoalgebra");
    checks.push(strong);
    let mut strong = check_strongly_graded(&result.bialgebra, GradedSide::Algebra);
    strong.check = String::from("typeone.stronglyGradedAlgebra");
    checks.push(strong);

    // three symmetrizer routes agree degreewise
    let mut oracle = CheckReport {
        check: String::from("typeone.symmetrizerOracles"),
        instances: 0,
        failures: Vec::new(),
    };
    for degree in 0..=n {
        let reference = symmetrizer_perm_sum(braiding, degree);
        oracle.instances += 1;
        let psi = symmetrizer_via_psi(braiding, degree);
        let rec = symmetrizer_recursive(braiding, degree);
        if let Some(entry) = reference.sub(&psi).first_nonzero() {
            oracle.failures.push(braided_forge_core::graded::Failure {
                indices: vec![degree, 0],
                residual_entry: entry,
            });
        }
        if let Some(entry) = reference.sub(&rec).first_nonzero() {
            oracle.failures.push(braided_forge_core::graded::Failure {
                indices: vec![degree, 1],
                residual_entry: entry,
            });
        }
    }
    checks.push(oracle);
    checks.push(self_test(cfg.seed, braiding.field()));

    let probe_t = equivalence_probe(&t);
    let probe_tc = equivalence_probe(&tc);
    let probe_image = equivalence_probe(&result.bialgebra);
    let magnum = magnum_check(&result.bialgebra);

    let checks_ok = checks.iter().all(CheckReport::passed);
    let probes_ok = probe_t.consistent()
        && probe_tc.consistent()
        && probe_tc.coalgebra_side()
        && probe_t.algebra_side()
        && probe_image.consistent()
        && probe_image.coalgebra_side()
        && probe_image.algebra_side();
    let passed = checks_ok && probes_ok && magnum.passed();

    let value = json!({
        "command": "verify",
        "kind": "braiding",
        "max_degree": n,
        "seed": cfg.seed,
        "passed": passed,
        "typeone_dims": result.dims,
        "hilbert": result.hilbert_string(),
        "checks": reports_json(&checks),
        "equivalence_probe": {
            "tensor": probe_json(&probe_t),
            "cotensor": probe_json(&probe_tc),
            "typeone": probe_json(&probe_image),
        },
        "magnum": magnum_json(&magnum),
    });
    let text = format!(
        "{}magnum: {:?}\ndims: {:?}\n{}\n",
        reports_text(&checks),
        (magnum.ideal_square_is_ceiling, magnum.wedge_square_is_floor),
        result.dims,
        if passed { "OK" } else { "FAILED" }
    );
    Ok(CmdOutput {
        stdout: render(cfg.format, &value, text),
        math_failed: !passed,
    })
}

fn verify_bialgebra(b: &TruncatedGradedBialgebra, cfg: &RunConfig) -> Result<CmdOutput, CliError> {
    let mut checks = axiom_suite("bialgebra", b);
    let mut strong = check_strongly_graded(b, GradedSide::Coalgebra);
    strong.check = String::from("info.stronglyGradedCoalgebra");
    let strong_coalg = strong.passed();
    checks.push(strong);
    let mut strong = check_strongly_graded(b, GradedSide::Algebra);
    strong.check = String::from("info.stronglyGradedAlgebra");
    let strong_alg = strong.passed();
    checks.push(strong);

    let probe = equivalence_probe(b);
    let magnum = magnum_check(b);
    // axioms must hold; the structural checks must come out consistent and,
    // for a type-one candidate, positive
    let axioms_ok = checks
        .iter()
        .filter(|r| r.check.starts_with("bialgebra."))
        .all(CheckReport::passed);
    let passed = axioms_ok && probe.consistent() && magnum.passed();

    let value = json!({
        "command": "verify",
        "kind": "bialgebra",
        "seed": cfg.seed,
        "passed": passed,
        "strongly_graded": { "coalgebra": strong_coalg, "algebra": strong_alg },
        "checks": reports_json(&checks),
        "equivalence_probe": probe_json(&probe),
        "magnum": magnum_json(&magnum),
    });
    let text = format!(
        "{}magnum: {:?}\n{}\n",
        reports_text(&checks),
        (magnum.ideal_square_is_ceiling, magnum.wedge_square_is_floor),
        if passed { "OK" } else { "FAILED" }
    );
    Ok(CmdOutput {
        stdout: render(cfg.format, &value, text),
        math_failed: !passed,
    })
}

pub fn cmd_bosonize(path: &str, cfg: &RunConfig) -> Result<CmdOutput, CliError> {
    let loaded = load_spec(path, cfg.field_override)?;
    let LoadedSpec::Braided { yd: Some(module), .. } = loaded else {
        return Err(CliError::Input(String::from(
            "bosonize requires a Yetter-Drinfeld spec (braiding kind \"yd\")",
        )));
    };
    let verdict = typeone_smash_check(&module, cfg.max_degree)
        .map_err(|e| CliError::Math(format!("{e}")))?;

    // degree <= 2 structure constants of the bosonized pipeline
    let ydb = braided_forge_core::bosonization::typeone_yd(&module, cfg.max_degree)
        .map_err(|e| CliError::Math(format!("{e}")))?;
    let bos = braided_forge_core::bosonization::bosonize(&ydb);
    let mut structure = serde_json::Map::new();
    for a in 0..=cfg.max_degree.min(2) {
        for b in 0..=cfg.max_degree.min(2) - a {
            structure.insert(format!("mult[{a},{b}]"), matrix_json(bos.mult(a, b)));
            structure.insert(format!("comult[{a},{b}]"), matrix_json(bos.comult(a, b)));
        }
    }

    let value = json!({
        "command": "bosonize",
        "max_degree": cfg.max_degree,
        "dims_bosonized": verdict.dims_bosonized,
        "dims_relative": verdict.dims_relative,
        "dims_equal": verdict.dims_equal,
        "structure_match_low_degree": verdict.structure_match_low_degree,
        "note": "degrees above 2 are compared by dimension only",
        "passed": verdict.passed(),
        "structure": Value::Object(structure),
    });
    let text = format!(
        "bosonized dims: {:?}\nrelative dims:  {:?}\n{}\n",
        verdict.dims_bosonized,
        verdict.dims_relative,
        if verdict.passed() { "OK" } else { "FAILED" }
    );
    let failed = !verdict.passed();
    Ok(CmdOutput {
        stdout: render(cfg.format, &value, text),
        math_failed: failed,
    })
}

pub fn cmd_eval(mor_path: &str, env_path: &str, cfg: &RunConfig) -> Result<CmdOutput, CliError> {
    let src = std::fs::read_to_string(mor_path)
        .map_err(|e| CliError::Input(format!("cannot read {mor_path}: {e}")))?;
    let file = dsl::parse_mor_file(&src).map_err(|e| CliError::Input(format!("{e}")))?;
    let env = load_env(env_path, &file.signature)?;
    let mut lets = Vec::new();
    for (name, expr) in &file.lets {
        let (dom, cod) =
            dsl::typecheck(expr, &file.signature).map_err(|e| CliError::Input(format!("{e}")))?;
        let matrix = dsl::evaluate(expr, &file.signature, &env)
            .map_err(|e| CliError::Input(format!("{e}")))?;
        lets.push(json!({
            "name": name,
            "domain": dom.to_string(),
            "codomain": cod.to_string(),
            "matrix": matrix_json(&matrix),
        }));
    }
    let value = json!({ "command": "eval", "lets": lets });
    let mut text = String::new();
    for entry in &lets {
        text.push_str(&format!(
            "{}: {} -> {}\n",
            entry["name"].as_str().unwrap_or(""),
            entry["domain"].as_str().unwrap_or(""),
            entry["codomain"].as_str().unwrap_or("")
        ));
    }
    Ok(CmdOutput {
        stdout: render(cfg.format, &value, text),
        math_failed: false,
    })
}
