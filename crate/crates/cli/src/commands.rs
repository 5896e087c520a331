use std::path::Path;

use qminor_core::flagspace::{eliminate, phi_eval, theta_closed_form, FlagContext};
use qminor_core::gammapaths::{
    enumerate_paths, is_regular, pairing_report, path_weight_exp, theta_via_paths, wp, ChainKind, GammaGraph,
};
use qminor_core::qalgebra::qcommute_exponent;
use qminor_core::suites;
use qminor_core::{indexcomb, Engine, IndexSet};
use serde_json::Value as Json;

use crate::golden;
use crate::report::{Record, Report};
use crate::{Ctx, Fail, Split, Suite};

type Outcome = Result<Report, Fail>;

const MAX_N: usize = 5;
const MAX_MINOR: usize = 3;

fn list(s: &IndexSet) -> Json {
    Json::from(s.to_vec())
}

fn opt_int(x: Option<i32>) -> Json {
    x.map_or(Json::Null, Json::from)
}

fn check_bounds(n: usize, sets: &[&IndexSet]) -> Result<(), Fail> {
    for s in sets {
        if s.is_empty() {
            return Err(Fail::Usage("index sets must be nonempty".into()));
        }
        if let Some(x) = s.last().filter(|&x| x > n) {
            return Err(Fail::Usage(format!("index {x} exceeds n = {n}")));
        }
    }
    Ok(())
}

fn engine(ctx: &Ctx) -> Engine {
    if ctx.force {
        Engine::unbounded()
    } else {
        Engine::desk()
    }
}

pub fn surrounds(j: &IndexSet, i: &IndexSet) -> Outcome {
    let mut rep = Report::new("surrounds");
    rep.input("j", list(j));
    rep.input("i", list(i));
    let w = indexcomb::surrounds(j, i);
    let mut r = Record::new("surrounds", true).with("surrounds", w.is_some());
    if let Some(w) = &w {
        r = r.with("jprime", list(&w.jprime)).with("jpp", list(&w.jprimeprime)).with("exponent", w.exponent);
    }
    rep.push(r);
    Ok(rep)
}

pub fn qcommute(ctx: &Ctx, n: usize, j: &IndexSet, i: &IndexSet) -> Outcome {
    check_bounds(n, &[j, i])?;
    ctx.guard(n <= MAX_N, format!("n = {n} exceeds {MAX_N}"))?;
    ctx.guard(j.len() <= MAX_MINOR && i.len() <= MAX_MINOR, format!("minors larger than {MAX_MINOR}"))?;
    let mut rep = Report::new("qcommute");
    rep.input("n", n);
    rep.input("j", list(j));
    rep.input("i", list(i));
    let found = qcommute_exponent(&engine(ctx), j, i, n)?;
    let forward = indexcomb::surrounds(j, i);
    let backward = indexcomb::surrounds(i, j);
    let predicted = match (&forward, &backward) {
        (Some(w), _) => Some(w.exponent),
        (None, Some(w)) => Some(-w.exponent),
        (None, None) => None,
    };
    rep.push(
        Record::new("qcommute", found == predicted)
            .with("exponent", opt_int(found))
            .with("predicted", opt_int(predicted))
            .with("surrounds", forward.is_some())
            .with("reverse_surrounds", backward.is_some())
            .with("agrees", found == predicted),
    );
    Ok(rep)
}

pub fn sweep(ctx: &Ctx, n: usize, max_size: usize) -> Outcome {
    ctx.guard(n <= MAX_N, format!("n = {n} exceeds {MAX_N}"))?;
    ctx.guard(max_size <= MAX_MINOR, format!("max size {max_size} exceeds {MAX_MINOR}"))?;
    let mut rep = Report::new("sweep");
    rep.input("n", n);
    rep.input("max_size", max_size);
    rep.extend_checks(&suites::sweep_suite(n, max_size)?);
    Ok(rep)
}

pub fn tables(which: u8, j: Option<&IndexSet>, jprime: Option<&IndexSet>, size_i: Option<usize>) -> Outcome {
    let mut rep = Report::new("tables");
    rep.input("which", which);
    match which {
        1 => table_one(&mut rep)?,
        2 | 3 => {
            let (Some(j), Some(jp)) = (j, jprime) else {
                return Err(Fail::Usage(format!("table {which} needs --j and --jprime")));
            };
            rep.input("j", list(j));
            rep.input("jprime", list(jp));
            if which == 2 {
                table_two(&mut rep, j, jp)?;
            } else {
                let s = size_i.ok_or_else(|| Fail::Usage("table 3 needs --isize".into()))?;
                rep.input("isize", s);
                table_three(&mut rep, j, jp, s)?;
            }
        }
        _ => return Err(Fail::Usage(format!("no table {which}; choose 1, 2 or 3"))),
    }
    Ok(rep)
}

fn table_one(rep: &mut Report) -> Result<(), Fail> {
    let t = suites::table_one()?;
    for ((name, expr), want) in
        [("C_{1,234}", &t.c), ("M_{1,234}", &t.m), ("Y_{1234,∅;(1)}", &t.y)].into_iter().zip(golden::table_one())
    {
        let got = expr.render();
        let ok = *expr == want;
        let mut r = Record::new(name, ok).with("row", got);
        if !ok {
            r = r.with("expected", want.render());
        }
        rep.push(r);
    }
    rep.push(Record::new("C = M + q^2 Y", t.residual.is_zero()).with("residual", t.residual.render()));
    let engine = Engine::desk();
    let mut phi = true;
    for e in [&t.c, &t.m, &t.y] {
        phi &= phi_eval(&engine, e, 4)?.is_zero();
    }
    rep.push(Record::new("φ of each row vanishes in M_q(4)", phi));
    Ok(())
}

fn table_two(rep: &mut Report, j: &IndexSet, jp: &IndexSet) -> Result<(), Fail> {
    let pairs = suites::table_two(j, jp)?;
    let got: Vec<String> = pairs.iter().map(|(a, b)| format!("{} -> {}", a.render(), b.render())).collect();
    let mut r = Record::new("pairing", true).with("pairs", got.clone());
    if let Some(want) = golden::table_two(j, jp) {
        let ok = got == want;
        r.pass = ok;
        r = r.with("golden", true);
        if !ok {
            r = r.with("expected", want);
        }
    } else {
        r = r.with("golden", false);
    }
    rep.push(r);
    Ok(())
}

fn table_three(rep: &mut Report, j: &IndexSet, jp: &IndexSet, s: usize) -> Result<(), Fail> {
    let rows = suites::table_three(j, jp, s)?;
    let got: Vec<String> = rows.iter().map(|(kp, coords)| golden::render_row(kp, coords)).collect();
    let unit = rows.iter().all(|(kp, coords)| coords.iter().any(|(k, a)| k == kp && a.is_one()));
    let upper = rows.iter().all(|(kp, coords)| coords.iter().all(|(k, _)| kp.is_subset(k)));
    let mut r = Record::new("layered matrix", unit && upper).with("rows", got.clone());
    if let Some(want) = golden::table_three(j, jp, s) {
        let ok = got == want;
        r.pass &= ok;
        r = r.with("golden", true);
        if !ok {
            r = r.with("expected", want);
        }
    } else {
        r = r.with("golden", false);
    }
    rep.push(r);
    rep.push(Record::new("unit diagonal", unit));
    rep.push(Record::new("zero below grade", upper));
    Ok(())
}

pub fn verify(ctx: &Ctx, suite: Suite, n: Option<usize>) -> Outcome {
    let mut rep = Report::new("verify");
    rep.input("suite", format!("{suite:?}").to_lowercase());
    if let Some(n) = n {
        rep.input("n", n);
    }
    let small = |default: usize| -> Result<usize, Fail> {
        let n = n.unwrap_or(default);
        ctx.guard(n <= MAX_N, format!("n = {n} exceeds {MAX_N}"))?;
        Ok(n)
    };
    let run = |s: Suite, rep: &mut Report| -> Result<(), Fail> {
        let checks = match s {
            Suite::Laplace => suites::laplace_suite(small(4)?, 3)?,
            Suite::Plucker => {
                let n1 = small(4)?;
                suites::plucker_suite(n1, n1 + 1)?
            }
            Suite::Homological => suites::homological_suite(small(4)?)?,
            Suite::Flag => {
                let m = n.unwrap_or(7);
                ctx.guard(m <= 7, format!("n = {m} exceeds 7"))?;
                suites::flag_suite(m, 3, 4, true)?
            }
            Suite::Paths => suites::paths_suite(5, 4, 10_000, ctx.seed)?,
            Suite::Theta => suites::theta_suite(4, 6)?,
            Suite::Implication => suites::implication_suite(small(5)?, 3)?,
            Suite::All => unreachable!(),
        };
        rep.extend_checks(&checks);
        Ok(())
    };
    if suite == Suite::All {
        for s in [
            Suite::Laplace,
            Suite::Plucker,
            Suite::Homological,
            Suite::Flag,
            Suite::Paths,
            Suite::Theta,
            Suite::Implication,
        ] {
            run(s, &mut rep)?;
        }
    } else {
        run(suite, &mut rep)?;
    }
    Ok(rep)
}

fn graph(split: &Split) -> Result<GammaGraph, Fail> {
    if split.j.is_empty() {
        return Err(Fail::Usage("J must be nonempty".into()));
    }
    if !split.jprime.is_subset(&split.j) {
        return Err(Fail::Usage(format!("J' = {} is not a subset of J = {}", split.jprime.label(), split.j.label())));
    }
    let s = split.isize.unwrap_or(split.j.len());
    if s < split.j.len() {
        return Err(Fail::Usage("need |I| >= |J|".into()));
    }
    Ok(GammaGraph::from_split(&split.j, &split.jprime, s)?)
}

fn split_inputs(rep: &mut Report, g: &GammaGraph) {
    rep.input("j", list(g.j()));
    rep.input("jprime", list(g.jprime()));
    rep.input("isize", g.size_i());
}

pub fn gamma(split: &Split, dot: Option<&Path>) -> Outcome {
    let g = graph(split)?;
    let mut rep = Report::new("gamma");
    split_inputs(&mut rep, &g);
    if let Some(path) = dot {
        rep.input("dot", path.display().to_string());
        std::fs::write(path, g.to_dot()).map_err(|e| Fail::Io(format!("{}: {e}", path.display())))?;
    }
    let edges: Vec<String> =
        g.edges().iter().map(|(a, b, e)| format!("{} -> {}: (-q)^{e}", a.label(), b.label())).collect();
    let count_ok = edges.len() == g.edge_count();
    rep.push(
        Record::new("graph", count_ok)
            .with("vertices", g.vertices().len())
            .with("edges", edges.len())
            .with("edge_exponents", edges),
    );
    Ok(rep)
}

pub fn paths(split: &Split) -> Outcome {
    let g = graph(split)?;
    let mut rep = Report::new("paths");
    split_inputs(&mut rep, &g);
    let (j, w) = (g.j(), g.witness());
    let mut lines = Vec::new();
    for c in enumerate_paths(j, w) {
        let status = match c.kind() {
            ChainKind::OneHat => "top".to_string(),
            _ => match is_regular(&c, j, w)? {
                Some(p) => format!("regular at {p}"),
                None => format!("irregular, ℘ = {}", wp(&c, j, w)?.render()),
            },
        };
        lines.push(format!("{}  length {}  (-q)^{}  {status}", c.render_full(), c.length(), path_weight_exp(&g, &c)?));
    }
    let p = pairing_report(&g)?;
    rep.push(Record::new("paths", true).with("count", p.paths).with("list", lines));
    rep.push(
        Record::new("pairing", p.ok())
            .with("regular", p.regular)
            .with("irregular", p.irregular)
            .with("bijective", p.bijective)
            .with("inverse", p.inverse_ok)
            .with("weight_preserved", p.weight_preserved)
            .with("length_plus_one", p.length_plus_one)
            .with("failures", p.failures),
    );
    Ok(rep)
}

pub fn theta(split: &Split) -> Outcome {
    let g = graph(split)?;
    let mut rep = Report::new("theta");
    split_inputs(&mut rep, &g);
    let r1 = g.jprime().len();
    if g.j().as_slice()[..r1] != *g.jprime().as_slice() {
        return Err(Fail::Usage("elimination needs J' to be the lowest elements of J".into()));
    }
    let ctx = FlagContext::canonical(r1, g.j().len() - r1, g.size_i())?;
    let elim = eliminate(&ctx)?.theta;
    let paths = theta_via_paths(&g)?;
    let closed = theta_closed_form(r1, g.j().len() - r1, g.size_i());
    rep.push(
        Record::new("theta", elim == closed && paths == -elim.clone())
            .with("elimination", elim.render())
            .with("closed_form", closed.render())
            .with("signed_path_sum", paths.render())
            .with("elimination_equals_closed_form", elim == closed)
            .with("path_sum_equals_minus_theta", paths == -elim.clone()),
    );
    Ok(rep)
}
