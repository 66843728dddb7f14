//! One PASS/FAIL line per acceptance criterion, each with its time budget.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use codegree_core::dual_degrees::{
    codegree_grassmannian, codegree_lagrangian, codegree_product_with_pk, codegree_segre_quadrics,
    codegree_spinor, katz_kleiman, orbit_crosscheck, segre_product, GrassmannianMethod,
};
use codegree_core::kac_gradings::{
    degree_table, is_exceptional_row, normalize_types, parse_types, scan_classification,
};
use codegree_core::theta_matrix_models::{verify_case, Case, DEFAULT_SEED};
use codegree_core::ChowModel;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same_types(a: &str, b: &str) -> bool {
    match (parse_types(a), parse_types(b)) {
        (Ok(x), Ok(y)) => normalize_types(&x) == normalize_types(&y),
        _ => false,
    }
}

fn classification() -> Outcome {
    let rows = scan_classification(13).map_err(|e| e.to_string())?;
    let mut exceptional = 0;
    let mut flagged = 0;
    for r in &rows {
        let tag = format!("{} node {}", r.diagram, r.chosen_node);
        let p = r.reference.as_ref().ok_or_else(|| format!("{tag}: no reference row"))?;
        let total: u64 = r
            .reflection_profile
            .as_ref()
            .map(|v| v.iter().map(|c| c.reflections).sum())
            .unwrap_or(0);
        ensure(r.m == p.m, || format!("{tag}: m = {}", r.m))?;
        ensure(r.little_weyl_name.as_deref() == Some(p.little_weyl.as_str()), || {
            format!("{tag}: little Weyl group {:?}", r.little_weyl_name)
        })?;
        ensure((r.m, total) == p.reflections, || format!("{tag}: {total} reflections"))?;
        if r.diagram == "F4^1" && r.chosen_node == 1 {
            ensure(r.g0_type == "A1xC3" && r.warnings.len() == 1, || {
                format!("{tag}: expected a discrepancy warning, got {:?}", r.warnings)
            })?;
            flagged += 1;
        } else {
            ensure(same_types(&r.g0_type, &p.g0_type) && r.warnings.is_empty(), || {
                format!("{tag}: g0 {} vs {}", r.g0_type, p.g0_type)
            })?;
        }
        exceptional += is_exceptional_row(r) as usize;
    }
    ensure(exceptional == 10 && flagged == 1, || {
        format!("{exceptional} exceptional rows, {flagged} flagged")
    })?;
    Ok(format!(
        "{} rows ({exceptional} exceptional/twisted), F4^1 node 1 flagged",
        rows.len()
    ))
}

fn degrees() -> Outcome {
    let t = degree_table(1..=6).map_err(|e| e.to_string())?;
    for e in &t {
        ensure(e.reference == e.computed, || format!("{e:?}"))?;
    }
    let find = |g: &str, c: &str, p: Option<u64>| {
        t.iter()
            .find(|e| e.group == g && e.class == c && e.parameter == p)
            .map(|e| e.computed)
    };
    ensure(find("W(B_{2p})", "alpha_l", Some(3)) == Some(60), || "B6 long".into())?;
    ensure(find("W(B_{2p})", "alpha_s", Some(3)) == Some(12), || "B6 short".into())?;
    ensure(
        find("5th", "alpha_l", None) == Some(12) && find("5th", "alpha_s", None) == Some(12),
        || "5th group split".into(),
    )?;
    Ok(format!("{} entries equal", t.len()))
}

fn orbit_codegrees() -> Outcome {
    let rows = scan_classification(13).map_err(|e| e.to_string())?;
    let checks = orbit_crosscheck(&rows).map_err(|e| e.to_string())?;
    if let Some(c) = checks.iter().find(|c| !c.agrees) {
        return Err(format!("{}: {} vs {}", c.orbit, c.reflection_count, c.katz_kleiman));
    }
    let want = [
        ("G(4,8)", 126),
        ("G(3,9)", 120),
        ("OG(8,16)_+", 240),
        ("LG(4,8)", 72),
        ("P^2 x P^2 x P^2", 36),
        ("P^4 x G(2,5)", 60),
        ("OG(3,7) x P^1", 24),
        ("v_2(P^2) x P^2", 12),
        ("v_3(P^2)", 12),
        ("v_3(P^1) x P^1", 6),
    ];
    for (orbit, v) in want {
        let c = checks
            .iter()
            .find(|c| c.orbit == orbit)
            .ok_or_else(|| format!("{orbit} missing"))?;
        ensure(c.reflection_count == v && c.katz_kleiman == v, || {
            format!("{orbit}: {} / {}", c.reflection_count, c.katz_kleiman)
        })?;
    }
    Ok(format!("{} rows agree on both routes", checks.len()))
}

fn grassmannians() -> Outcome {
    let mut n_checked = 0;
    for n in 4..=10 {
        for k in 2..=n - 2 {
            codegree_grassmannian(k, n, GrassmannianMethod::Both).map_err(|e| e.to_string())?;
            n_checked += 1;
        }
    }
    let a = codegree_grassmannian(3, 9, GrassmannianMethod::Both).map_err(|e| e.to_string())?;
    let b = codegree_grassmannian(4, 8, GrassmannianMethod::Both).map_err(|e| e.to_string())?;
    ensure(a.value == 120 && b.value == 126, || format!("{} {}", a.value, b.value))?;
    Ok(format!("{n_checked} Grassmannians, G(3,9) = 120, G(4,8) = 126"))
}

fn lagrangian_spinor() -> Outcome {
    let e = |x: codegree_core::Error| x.to_string();
    let got = (
        codegree_lagrangian(3).map_err(e)?.value,
        codegree_lagrangian(4).map_err(e)?.value,
        codegree_spinor(8).map_err(e)?.value,
        codegree_spinor(5).map_err(e)?.value,
        codegree_spinor(4).map_err(e)?.value,
    );
    ensure(got == (4, 72, 240, 0, 2), || format!("{got:?}"))?;
    Ok("LG(3,6) = 4, LG(4,8) = 72, S_16 = 240, S_10 = 0, S_8 = 2".into())
}

fn quadric_products() -> Outcome {
    for (a, b, v) in [(4, 4, 24), (4, 5, 24), (5, 5, 40), (6, 7, 60)] {
        let r = codegree_segre_quadrics(a, b).map_err(|e| e.to_string())?;
        ensure(r.result.value == v, || format!("({a},{b}) gives {}", r.result.value))?;
    }
    let mut holds = 0;
    let mut total = 0;
    for a in 3..=10 {
        for b in 3..=10 {
            let r = codegree_segre_quadrics(a, b).map_err(|e| e.to_string())?;
            holds += r.conjecture_holds as usize;
            total += 1;
        }
    }
    Ok(format!("values match; conjectured closed form holds at {holds}/{total} pairs"))
}

fn counterexamples() -> Outcome {
    let a = segre_product(&[1, 2, 5]).map_err(|e| e.to_string())?.value;
    let b = codegree_product_with_pk(&ChowModel::Spinor { n: 5 }, 3)
        .map_err(|e| e.to_string())?
        .value;
    let direct = katz_kleiman(&ChowModel::product(vec![
        ChowModel::projective(1),
        ChowModel::projective(2),
        ChowModel::projective(5),
    ]))
    .map_err(|e| e.to_string())?
    .value;
    ensure(a == 0 && b == 0 && direct == 0, || format!("{a} {b} {direct}"))?;
    Ok("P^1 x P^2 x P^5 and S_10 x P^3 are dual defective".into())
}

fn matrix_models() -> Outcome {
    let cases = Case::catalog();
    for case in &cases {
        let r = verify_case(case, DEFAULT_SEED).map_err(|e| format!("{case}: {e}"))?;
        ensure(r.passed, || format!("{case}: {r:?}"))?;
    }
    Ok(format!("{} corank-0 cases", cases.len()))
}

fn symmetric_functions() -> Outcome {
    let a = common::check_schur_round_trips()?;
    let b = common::check_lr_brute_force()?;
    let c = common::check_skew_counts(10)?;
    Ok(format!("{a} round trips, {b} LR products, {c} skew shapes"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, u64); 9] = [
        ("classification table", classification, 10),
        ("discriminant degrees", degrees, 5),
        ("closed-orbit codegrees", orbit_codegrees, 120),
        ("Grassmannian routes", grassmannians, 120),
        ("Lagrangian and spinor formulas", lagrangian_spinor, 60),
        ("quadric products", quadric_products, 10),
        ("counterexamples", counterexamples, 60),
        ("matrix-model property suite", matrix_models, 180),
        ("symmetric-function oracles", symmetric_functions, 60),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(*budget);
        let status = if outcome.is_ok() && !over { "PASS" } else { "FAIL" };
        let detail = match &outcome {
            Ok(s) if over => format!("{s}; over the {budget} s budget"),
            Ok(s) => s.clone(),
            Err(e) => e.clone(),
        };
        println!(
            "criterion {}: {status} {name} ({:.2} s, budget {budget} s): {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
        failed += (status == "FAIL") as usize;
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
