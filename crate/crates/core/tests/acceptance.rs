//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use qminor_core::flagspace::{phi_eval, FlagExpr};
use qminor_core::gammapaths::Chain;
use qminor_core::suites::{self, Check};
use qminor_core::{Engine, IndexSet, Laurent, Result};

const SEED: u64 = 20_240_601;

fn expr(terms: &[(&[usize], &[usize], i64, i32)]) -> FlagExpr {
    let mut e = FlagExpr::zero();
    for &(a, b, c, x) in terms {
        e.add_word(&[a, b], &Laurent::monomial(c, x));
    }
    e
}

fn summarize(checks: &[Check]) -> String {
    checks
        .iter()
        .map(|c| {
            let n = c.int("instances").map(|n| format!(" [{n}]")).unwrap_or_default();
            let f = c.int("failures").filter(|&f| f > 0).map(|f| format!(" {f} failed")).unwrap_or_default();
            format!("{}{}{}{}", c.name, n, f, if c.pass { "" } else { " FAIL" })
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn suite(r: Result<Vec<Check>>) -> Result<(bool, String)> {
    let checks = r?;
    Ok((suites::all_pass(&checks), summarize(&checks)))
}

fn table_one() -> Result<(bool, String)> {
    // rows as printed
    let c_ref = expr(&[(&[1], &[2, 3, 4], 1, 0), (&[2, 3, 4], &[1], -1, -1)]);
    let m_ref = expr(&[
        (&[1], &[2, 3, 4], 1, 0),
        (&[1, 2, 3], &[4], -1, 2),
        (&[1, 2, 4], &[3], 1, 1),
        (&[1, 3, 4], &[2], -1, 0),
    ]);
    let y_ref = expr(&[
        (&[1, 2, 3], &[4], 1, 0),
        (&[1, 2, 4], &[3], -1, -1),
        (&[1, 3, 4], &[2], 1, -2),
        (&[2, 3, 4], &[1], -1, -3),
    ]);
    let t = suites::table_one()?;
    let rows = t.c == c_ref && t.m == m_ref && t.y == y_ref;
    let engine = Engine::desk();
    let mut phi = true;
    for e in [&t.c, &t.m, &t.y] {
        phi &= phi_eval(&engine, e, 4)?.is_zero();
    }
    let pass = rows && t.residual.is_zero() && phi;
    Ok((pass, format!("rows match {rows}; C - M - q^2 Y = 0 {}; φ vanishes {phi}", t.residual.is_zero())))
}

fn table_two() -> Result<(bool, String)> {
    let printed = [
        ("0̂", "(1)"),
        ("(5)", "(5,15)"),
        ("(6)", "(6,16)"),
        ("(15)", "(1,15)"),
        ("(16)", "(1,16)"),
        ("(56)", "(6,56)"),
        ("(5,56)", "1̂"),
    ];
    let got = suites::table_two(&IndexSet::from([1, 5, 6]), &IndexSet::from([1]))?;
    let rendered: Vec<(String, String)> = got.iter().map(|(a, b): &(Chain, Chain)| (a.render(), b.render())).collect();
    let want: Vec<(String, String)> = printed.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    Ok((rendered == want, format!("{} pairs", rendered.len())))
}

fn lz_converse() -> Result<(bool, String)> {
    let c = suites::commute_census(4, 4, false)?;
    let pass = c.neither_fail.is_empty() && c.forward_fail.is_empty() && c.reverse_fail.is_empty();
    Ok((
        pass,
        format!(
            "neither direction surrounds: {} pairs, {} q-commute; one-sided pairs: {}; surrounding pairs: {}",
            c.neither,
            c.neither_fail.len(),
            c.reverse,
            c.forward
        ),
    ))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Result<(bool, String)>);
    let criteria: [Criterion; 12] = [
        ("table 1 reproduction", table_one),
        ("table 2 reproduction", table_two),
        ("surrounds implies q-commute, n = 5", || suite(suites::sweep_suite(5, 3))),
        ("no surrounds implies no q-commute, n = 4", lz_converse),
        ("laplace and centrality, n = 4", || suite(suites::laplace_suite(4, 3))),
        ("cleared plucker identities", || suite(suites::plucker_suite(4, 5))),
        ("homological relation, n = 4", || suite(suites::homological_suite(4))),
        ("path machinery", || suite(suites::paths_suite(5, 4, 10_000, SEED))),
        ("theta three ways", || suite(suites::theta_suite(4, 6))),
        ("commutation via young symmetry, n = 7", || suite(suites::flag_suite(7, 3, 4, true))),
        ("straightening relation implication, n = 5", || suite(suites::implication_suite(5, 3))),
        ("engine properties", || suite(suites::engine_suite(SEED, 1000, 4, 6, 5, 4))),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (pass, detail) = run().unwrap_or_else(|e| (false, format!("error: {e}")));
        let ms = start.elapsed().as_millis();
        println!("criterion {:>2} {} {name} ({ms} ms): {detail}", k + 1, if pass { "PASS" } else { "FAIL" });
        failed += usize::from(!pass);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
