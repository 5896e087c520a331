//! Batch verification drivers. Each suite enumerates a family of instances,
//! runs the relevant checks and returns one [`Check`] per property.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::flagspace::{
    comm_expr, eliminate, expansion_coeffs, monom_straight_expr, phi_eval, reconstruction, theta_closed_form,
    young_expr, young_for, FlagContext, FlagExpr,
};
use crate::gammapaths::{
    enumerate_paths, is_regular, pairing_report, special_path_weight_check, theta_via_paired_paths, theta_via_paths,
    weight_lemma_check, wp, Chain, ChainKind, GammaGraph,
};
use crate::indexcomb::{surrounds, IndexSet, IndexTuple, SurroundsWitness};
use crate::laurent::Laurent;
use crate::qalgebra::{
    centrality_check, cleared_plucker_check, homological_check, homological_literal_residual, laplace_check,
    qcommute_exponent, Engine, Gen, PluckerVariant, Strategy,
};

const MAX_LISTED: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Text(String),
    List(Vec<String>),
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<usize> for Value {
    fn from(x: usize) -> Self {
        Value::Int(x as i64)
    }
}

impl From<i32> for Value {
    fn from(x: i32) -> Self {
        Value::Int(x as i64)
    }
}

impl From<i64> for Value {
    fn from(x: i64) -> Self {
        Value::Int(x)
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<Vec<String>> for Value {
    fn from(v: Vec<String>) -> Self {
        Value::List(v)
    }
}

/// Outcome of one property over one family of instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: BTreeMap<String, Value>,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Check { name: name.into(), pass, detail: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.detail.insert(key.to_string(), value.into());
        self
    }

    /// A check over `count` instances, failing iff `failures` is nonempty.
    pub fn tally(name: impl Into<String>, count: usize, failures: Vec<String>) -> Self {
        let pass = failures.is_empty();
        let n_fail = failures.len();
        let mut listed = failures;
        listed.truncate(MAX_LISTED);
        let mut c = Check::new(name, pass).with("instances", count).with("failures", n_fail);
        if !listed.is_empty() {
            c = c.with("failed", listed);
        }
        c
    }

    pub fn int(&self, key: &str) -> Option<i64> {
        match self.detail.get(key) {
            Some(Value::Int(x)) => Some(*x),
            _ => None,
        }
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

fn nonempty_subsets(n: usize, max_size: usize) -> Vec<IndexSet> {
    IndexSet::range(n).subsets().into_iter().filter(|s| !s.is_empty() && s.len() <= max_size).collect()
}

fn collect_failures<T, F>(items: &[T], f: F) -> Result<Vec<String>>
where
    T: Sync,
    F: Fn(&Engine, &T) -> Result<Option<String>> + Sync,
{
    let out: Vec<Result<Option<String>>> = items.par_iter().map_init(Engine::desk, |e, item| f(e, item)).collect();
    let mut failures = Vec::new();
    for r in out {
        if let Some(msg) = r? {
            failures.push(msg);
        }
    }
    Ok(failures)
}

/// Classification of pairs `(J, I)` of nonempty subsets of `[n]` by
/// `surrounds` in either direction against the straightened q-commutation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Census {
    /// `J` surrounds `I`: the exponent must be `<<J,I>>`.
    pub forward: usize,
    pub forward_fail: Vec<String>,
    /// Only `I` surrounds `J`: the exponent must be `-<<I,J>>`.
    pub reverse: usize,
    pub reverse_fail: Vec<String>,
    /// Neither surrounds the other: no exponent may exist.
    pub neither: usize,
    pub neither_fail: Vec<String>,
}

/// Straightens `[J][I]` and `[I][J]` for every pair with `|J|, |I| <=
/// max_size` (and `|J| <= |I|` when `ordered`).
pub fn commute_census(n: usize, max_size: usize, ordered: bool) -> Result<Census> {
    let sets = nonempty_subsets(n, max_size);
    let mut pairs = Vec::new();
    for j in &sets {
        for i in &sets {
            if !ordered || j.len() <= i.len() {
                pairs.push((j.clone(), i.clone()));
            }
        }
    }
    let found: Vec<Result<Option<i32>>> =
        pairs.par_iter().map_init(Engine::desk, |e, (j, i)| qcommute_exponent(e, j, i, n)).collect();
    let mut c = Census::default();
    for ((j, i), got) in pairs.iter().zip(found) {
        let got = got?;
        let tag = || format!("J={} I={} found={got:?}", j.label(), i.label());
        match (surrounds(j, i), surrounds(i, j)) {
            (Some(w), _) => {
                c.forward += 1;
                if got != Some(w.exponent) {
                    c.forward_fail.push(tag());
                }
            }
            (None, Some(w)) => {
                c.reverse += 1;
                if got != Some(-w.exponent) {
                    c.reverse_fail.push(tag());
                }
            }
            (None, None) => {
                c.neither += 1;
                if got.is_some() {
                    c.neither_fail.push(tag());
                }
            }
        }
    }
    Ok(c)
}

pub fn sweep_suite(n: usize, max_size: usize) -> Result<Vec<Check>> {
    let c = commute_census(n, max_size, true)?;
    Ok(vec![
        Check::tally("surrounds implies q-commute", c.forward, c.forward_fail),
        Check::tally("reverse surrounds gives inverse exponent", c.reverse, c.reverse_fail),
        Check::tally("no surrounds in either direction implies no q-commute", c.neither, c.neither_fail),
    ])
}

/// All square submatrices up to `max_d`: Laplace for every `(i, j)` and
/// centrality of the determinant for every entry.
pub fn laplace_suite(n: usize, max_d: usize) -> Result<Vec<Check>> {
    let sets = nonempty_subsets(n, max_d);
    let mut squares = Vec::new();
    for r in &sets {
        for c in &sets {
            if r.len() == c.len() {
                squares.push((r.clone(), c.clone()));
            }
        }
    }
    let mut lap = Vec::new();
    let mut cen = Vec::new();
    for (r, c) in &squares {
        for i in r.iter() {
            for j in r.iter() {
                lap.push((r.clone(), c.clone(), i, j));
            }
            for k in c.iter() {
                cen.push((r.clone(), c.clone(), i, k));
            }
        }
    }
    let lap_fail = collect_failures(&lap, |e, (r, c, i, j)| {
        Ok((!laplace_check(e, r, c, *i, *j, n)?).then(|| format!("rows={} cols={} i={i} j={j}", r.label(), c.label())))
    })?;
    let cen_fail = collect_failures(&cen, |e, (r, c, i, k)| {
        Ok((!centrality_check(e, r, c, *i, *k, n)?)
            .then(|| format!("rows={} cols={} entry=({i},{k})", r.label(), c.label())))
    })?;
    Ok(vec![
        Check::tally("laplace expansion", lap.len(), lap_fail).with("submatrices", squares.len()),
        Check::tally("determinant centrality", cen.len(), cen_fail),
    ])
}

/// Cleared quasi-Plücker identities: the single-index variants over `[n1]`
/// with `|I| <= 3`, the inductive ones over `[n2]` with `|J| = 2`, `|I| <= 3`.
pub fn plucker_suite(n1: usize, n2: usize) -> Result<Vec<Check>> {
    let mut single = Vec::new();
    for j in 1..=n1 {
        for i in nonempty_subsets(n1, 3) {
            let js = IndexSet::singleton(j);
            if !i.contains(j) && surrounds(&js, &i).is_some() {
                single.push((js, i));
            }
        }
    }
    let mut pairs = Vec::new();
    for j in IndexSet::range(n2).subsets_of_size(2) {
        for i in nonempty_subsets(n2, 3) {
            if j.is_disjoint(&i) && surrounds(&j, &i).is_some() {
                pairs.push((j.clone(), i));
            }
        }
    }
    let mut out = Vec::new();
    for (variants, items, n) in [
        (&[PluckerVariant::Right, PluckerVariant::Left, PluckerVariant::Base][..], &single, n1),
        (&[PluckerVariant::InductJI, PluckerVariant::InductIJ][..], &pairs, n2),
    ] {
        for &v in variants {
            let fail = collect_failures(items, |e, (j, i)| {
                Ok((!cleared_plucker_check(e, j, i, v, n)?).then(|| format!("J={} I={}", j.label(), i.label())))
            })?;
            out.push(Check::tally(format!("cleared plucker {}", v.name()), items.len(), fail).with("n", n));
        }
    }
    Ok(out)
}

fn tuples(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|t| (1..=n).filter(|x| !t.contains(x)).map(|x| [t.clone(), vec![x]].concat()).collect::<Vec<_>>())
            .collect();
    }
    out
}

/// Homological relation on the last two columns for every row list of size
/// 2 to 3 in `[n]`, every column offset and every `i != j`.
pub fn homological_suite(n: usize) -> Result<Vec<Check>> {
    let mut items = Vec::new();
    for d in 2..=3.min(n) {
        for rows in tuples(n, d) {
            for s in 0..=n - d {
                for &i in &rows {
                    for &j in &rows {
                        if i != j {
                            items.push((rows.clone(), s, i, j));
                        }
                    }
                }
            }
        }
    }
    let fail = collect_failures(&items, |e, (rows, s, i, j)| {
        let d = rows.len();
        let t = IndexTuple::new(rows.clone(), n)?;
        Ok((!homological_check(e, &t, *s, *i, *j, s + d, s + d - 1, n)?)
            .then(|| format!("rows={rows:?} s={s} i={i} j={j}")))
    })?;
    let literal = collect_failures(&items, |e, (rows, s, i, j)| {
        let d = rows.len();
        let t = IndexTuple::new(rows.clone(), n)?;
        Ok((!homological_literal_residual(e, &t, *s, *i, *j, s + d, s + d - 1, n)?.is_zero()).then(String::new))
    })?;
    Ok(vec![Check::tally("homological relation", items.len(), fail).with("positional_formula_failures", literal.len())])
}

/// Graphs `Γ(J; I)` for `J = [m]`, `m <= max_j`, every witness split and
/// `|I| ∈ {m, .., m+3}`.
fn graphs(max_j: usize, extra: usize) -> Result<Vec<GammaGraph>> {
    let mut out = Vec::new();
    for m in 1..=max_j {
        let j = IndexSet::range(m);
        for k in 0..=m {
            for size_i in m..=m + extra {
                out.push(GammaGraph::from_split(&j, &IndexSet::range(k), size_i)?);
            }
        }
    }
    Ok(out)
}

/// Path machinery: pairing census and `℘` properties, the weight lemma
/// (exhaustive up to `exhaustive_j`, `random_triples` seeded samples at
/// `max_j`), and the special path weight.
pub fn paths_suite(max_j: usize, exhaustive_j: usize, random_triples: usize, seed: u64) -> Result<Vec<Check>> {
    let gs = graphs(max_j, 3)?;
    let mut pairing_fail = Vec::new();
    let (mut regular, mut irregular) = (0, 0);
    for g in &gs {
        let rep = pairing_report(g)?;
        regular += rep.regular;
        irregular += rep.irregular;
        if !rep.ok() {
            pairing_fail.push(format!(
                "J={} J'={} |I|={}: {:?}",
                g.j().label(),
                g.jprime().label(),
                g.size_i(),
                rep.failures
            ));
        }
    }

    let mut lemma_fail = Vec::new();
    let mut lemma_count = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for g in &gs {
        let m = g.j().len();
        if m <= exhaustive_j {
            for c in g.vertices() {
                for b in c.subsets() {
                    for a in b.subsets() {
                        lemma_count += 1;
                        if !weight_lemma_check(g, &a, &b, &c)? {
                            lemma_fail.push(format!(
                                "J'={} A={} B={} C={}",
                                g.jprime().label(),
                                a.label(),
                                b.label(),
                                c.label()
                            ));
                        }
                    }
                }
            }
        }
    }
    let big: Vec<&GammaGraph> = gs.iter().filter(|g| g.j().len() == max_j && max_j > exhaustive_j).collect();
    if !big.is_empty() {
        for _ in 0..random_triples {
            let g = big[rng.gen_range(0..big.len())];
            // each element independently lands in A, B∖A, C∖B or J∖C
            let (mut a, mut b, mut c) = (IndexSet::empty(), IndexSet::empty(), IndexSet::empty());
            for x in g.j().iter() {
                match rng.gen_range(0..4) {
                    0 => {
                        a = a.with(x);
                        b = b.with(x);
                        c = c.with(x);
                    }
                    1 => {
                        b = b.with(x);
                        c = c.with(x);
                    }
                    2 => c = c.with(x),
                    _ => {}
                }
            }
            lemma_count += 1;
            if !weight_lemma_check(g, &a, &b, &c)? {
                lemma_fail.push(format!("J'={} A={} B={} C={}", g.jprime().label(), a.label(), b.label(), c.label()));
            }
        }
    }

    let mut special_fail = Vec::new();
    let specials = graphs(max_j, 0)?
        .into_iter()
        .flat_map(|g| (g.j().len()..=7).map(move |s| (g.j().clone(), g.jprime().clone(), s)))
        .collect::<Vec<_>>();
    for (j, jp, s) in &specials {
        let g = GammaGraph::from_split(j, jp, *s)?;
        if !special_path_weight_check(&g)? {
            special_fail.push(format!("J={} J'={} |I|={s}", j.label(), jp.label()));
        }
    }

    Ok(vec![
        Check::tally("regular/irregular pairing", gs.len(), pairing_fail)
            .with("regular", regular)
            .with("irregular", irregular),
        Check::tally("weight lemma", lemma_count, lemma_fail).with("seed", seed as i64),
        Check::tally("special path weight", specials.len(), special_fail),
    ])
}

/// One row of the `θ` comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaRow {
    pub r1: usize,
    pub r2: usize,
    pub s: usize,
    pub elimination: Laurent,
    pub paths: Laurent,
    pub closed: Laurent,
    pub paired_ok: bool,
    pub alpha_ok: bool,
}

impl ThetaRow {
    /// `c` with `elimination = c * closed`, when `c` is a constant.
    pub fn elim_over_closed(&self) -> Option<Laurent> {
        ratio(&self.elimination, &self.closed)
    }

    /// `c` with `paths = c * elimination`.
    pub fn paths_over_elim(&self) -> Option<Laurent> {
        ratio(&self.paths, &self.elimination)
    }
}

fn ratio(a: &Laurent, b: &Laurent) -> Option<Laurent> {
    let c = a.div_unit(b)?;
    (c.as_monomial().map(|(_, e)| e) == Some(0)).then_some(c)
}

/// Canonical contexts `J' = {1..r1}`, `I` next, `J''` last.
pub fn theta_rows(max_j: usize, max_s: usize) -> Result<Vec<ThetaRow>> {
    let mut shapes = Vec::new();
    for r in 1..=max_j {
        for r1 in 0..=r {
            for s in r..=max_s {
                shapes.push((r1, r - r1, s));
            }
        }
    }
    shapes
        .par_iter()
        .map(|&(r1, r2, s)| {
            let ctx = FlagContext::canonical(r1, r2, s)?;
            let el = eliminate(&ctx)?;
            let g = GammaGraph::new(ctx.j().clone(), ctx.witness().clone(), s)?;
            let paths = theta_via_paths(&g)?;
            let paired = theta_via_paired_paths(&g)?;
            let mut alpha_ok = true;
            for kp in ctx.j().subsets() {
                if &kp == ctx.j() {
                    continue;
                }
                let coeffs = expansion_coeffs(&ctx, &kp)?;
                for k in ctx.j().subsets() {
                    let want =
                        if kp.is_subset(&k) { Laurent::neg_q_pow(g.edge_exp(&kp, &k)?) } else { Laurent::zero() };
                    if coeffs.get(&k).cloned().unwrap_or_default() != want {
                        alpha_ok = false;
                    }
                }
            }
            Ok(ThetaRow {
                r1,
                r2,
                s,
                elimination: el.theta,
                paired_ok: paired.uncancelled.is_empty() && paired.total == paths,
                paths,
                closed: theta_closed_form(r1, r2, s),
                alpha_ok,
            })
        })
        .collect()
}

/// `θ` three ways, with the sign constants calibrated on the `J = {1}`,
/// `|I| = 3` instance.
pub fn theta_suite(max_j: usize, max_s: usize) -> Result<Vec<Check>> {
    let rows = theta_rows(max_j, max_s)?;
    let calib = FlagContext::canonical(1, 0, 3)?;
    let el = eliminate(&calib)?;
    let g = GammaGraph::new(calib.j().clone(), calib.witness().clone(), 3)?;
    let c_closed = ratio(&el.theta, &theta_closed_form(1, 0, 3));
    let c_paths = ratio(&theta_via_paths(&g)?, &el.theta);
    let tag = |r: &ThetaRow| format!("r'={} r''={} s={}", r.r1, r.r2, r.s);
    let mut closed_fail = Vec::new();
    let mut paths_fail = Vec::new();
    let mut alpha_fail = Vec::new();
    let mut paired_fail = Vec::new();
    for r in &rows {
        if c_closed.is_none() || r.elim_over_closed() != c_closed {
            closed_fail.push(format!(
                "{}: elimination {} closed {}",
                tag(r),
                r.elimination.render(),
                r.closed.render()
            ));
        }
        if c_paths.is_none() || r.paths_over_elim() != c_paths {
            paths_fail.push(format!("{}: paths {} elimination {}", tag(r), r.paths.render(), r.elimination.render()));
        }
        if !r.alpha_ok {
            alpha_fail.push(tag(r));
        }
        if !r.paired_ok {
            paired_fail.push(tag(r));
        }
    }
    let render = |c: &Option<Laurent>| c.as_ref().map_or("none".to_string(), Laurent::render);
    Ok(vec![
        Check::new("calibration at J = {1}, |I| = 3", el.theta == Laurent::q_pow(-3)).with("theta", el.theta.render()),
        Check::tally("elimination vs closed form", rows.len(), closed_fail).with("constant", render(&c_closed)),
        Check::tally("signed path sum vs elimination", rows.len(), paths_fail).with("constant", render(&c_paths)),
        Check::tally("path sum collapses in pairs", rows.len(), paired_fail),
        Check::tally("expansion coefficients equal edge weights", rows.len(), alpha_fail),
    ])
}

/// End-to-end: `C - M - Σ η Y = 0` as flag expressions for all disjoint
/// surrounding pairs in `[n]` with `|J| <= max_j`, `|I| <= max_i`, and
/// `φ(C) = φ(M) = φ(Y_K) = 0` on one order-isomorphic representative of
/// each class when `with_phi`.
pub fn flag_suite(n: usize, max_j: usize, max_i: usize, with_phi: bool) -> Result<Vec<Check>> {
    let mut pairs = Vec::new();
    for j in nonempty_subsets(n, max_j) {
        for i in nonempty_subsets(n, max_i) {
            if j.is_disjoint(&i) && surrounds(&j, &i).is_some() {
                pairs.push((j.clone(), i));
            }
        }
    }
    let expr_fail = collect_failures(&pairs, |_, (j, i)| {
        let ctx = FlagContext::new(j, i)?;
        let el = eliminate(&ctx)?;
        Ok((!reconstruction(&ctx, &el)?.is_zero()).then(|| format!("J={} I={}", j.label(), i.label())))
    })?;

    let mut shapes = Vec::new();
    for r in 1..=max_j {
        for r1 in 0..=r {
            for s in r..=max_i {
                if r + s <= n {
                    shapes.push((r1, r - r1, s));
                }
            }
        }
    }
    let mut checks = vec![Check::tally("reconstruction as flag expressions", pairs.len(), expr_fail)];
    if with_phi {
        let phi_fail = collect_failures(&shapes, |e, &(r1, r2, s)| {
            let ctx = FlagContext::canonical(r1, r2, s)?;
            let m = ctx.union().len();
            let mut exprs = vec![comm_expr(ctx.j(), ctx.i())?, monom_straight_expr(ctx.j(), ctx.i())?];
            for k in ctx.j().subsets() {
                if &k != ctx.j() {
                    exprs.push(young_for(&ctx, &k)?);
                }
            }
            for x in &exprs {
                if !phi_eval(e, x, m)?.is_zero() {
                    return Ok(Some(format!("J={} I={}: φ({}) != 0", ctx.j().label(), ctx.i().label(), x.render())));
                }
            }
            Ok(None)
        })?;
        checks.push(Check::tally("φ of C, M and every Y vanishes", shapes.len(), phi_fail));
    }
    Ok(checks)
}

/// `φ(M_{J,I}) = 0` for `J, I ⊆ [n]`, `|J| <= |I| <= max_size`,
/// `J ∖ {min J} ⊆ I`.
pub fn implication_suite(n: usize, max_size: usize) -> Result<Vec<Check>> {
    let sets = nonempty_subsets(n, max_size);
    let mut pairs = Vec::new();
    for j in &sets {
        for i in &sets {
            let head = j.first().expect("nonempty");
            if j.len() <= i.len() && j.without(head).is_subset(i) {
                pairs.push((j.clone(), i.clone()));
            }
        }
    }
    let fail = collect_failures(&pairs, |e, (j, i)| {
        let m = monom_straight_expr(j, i)?;
        Ok((!phi_eval(e, &m, n)?.is_zero()).then(|| format!("J={} I={}", j.label(), i.label())))
    })?;
    Ok(vec![Check::tally("straightening relation vanishes under φ", pairs.len(), fail)])
}

/// Confluence of the three reduction orders on random words, and the
/// row-tuple conventions of `det_q` against the column expansion.
pub fn engine_suite(
    seed: u64,
    words: usize,
    n: usize,
    max_degree: usize,
    tuple_n: usize,
    tuple_max: usize,
) -> Result<Vec<Check>> {
    let engine = Engine::desk();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut confluence_fail = Vec::new();
    for _ in 0..words {
        let len = rng.gen_range(0..=max_degree);
        let word: Vec<Gen> = (0..len).map(|_| Gen::new(rng.gen_range(1..=n), rng.gen_range(1..=n))).collect();
        let a = engine.straighten_with(&word, &Laurent::one(), n, Strategy::Insertion)?;
        let b = engine.straighten_with(&word, &Laurent::one(), n, Strategy::LeftmostRewrite)?;
        let c = engine.straighten_with(&word, &Laurent::one(), n, Strategy::RightmostRewrite)?;
        if a != b || a != c {
            confluence_fail.push(format!("{word:?}"));
        }
    }

    let mut all = Vec::new();
    for d in 1..=tuple_max {
        let mut level = vec![vec![]];
        for _ in 0..d {
            level = level
                .into_iter()
                .flat_map(|t: Vec<usize>| (1..=tuple_n).map(move |x| [t.clone(), vec![x]].concat()))
                .collect();
        }
        all.extend(level);
    }
    let (mut repeats, mut distinct) = (0, 0);
    let mut det_fail = Vec::new();
    for t in &all {
        let tuple = IndexTuple::new(t.clone(), tuple_n)?;
        let cols = IndexSet::range(t.len());
        let oracle = engine.det_column_expansion(&tuple, &cols, tuple_n)?;
        let ok = match tuple.length() {
            Err(_) => {
                repeats += 1;
                oracle.is_zero() && engine.det_tuple(&tuple, &cols, tuple_n)?.is_zero()
            }
            Ok(len) => {
                distinct += 1;
                let sorted = engine.det_sets(&tuple.to_set(), &cols, tuple_n)?;
                oracle == sorted.scale(&Laurent::neg_q_pow(-(len as i32)))
                    && engine.det_tuple(&tuple, &cols, tuple_n)? == oracle
            }
        };
        if !ok {
            det_fail.push(format!("{t:?}"));
        }
    }
    Ok(vec![
        Check::tally("reduction orders agree", words, confluence_fail).with("seed", seed as i64),
        Check::tally("det_q row-tuple conventions", all.len(), det_fail)
            .with("repeated", repeats)
            .with("distinct", distinct),
    ])
}

/// Rows `C_{1,234}`, `M_{1,234}`, `Y_{1234,∅;(1)}` and the residual
/// `C - M - q^2 Y`.
pub struct TableOne {
    pub c: FlagExpr,
    pub m: FlagExpr,
    pub y: FlagExpr,
    pub residual: FlagExpr,
}

pub fn table_one() -> Result<TableOne> {
    let j = IndexSet::singleton(1);
    let i = IndexSet::from([2, 3, 4]);
    let c = comm_expr(&j, &i)?;
    let m = monom_straight_expr(&j, &i)?;
    let y = young_expr(&IndexSet::range(4), &[], 1)?;
    let mut residual = &c - &m;
    residual.add_scaled(&y, &Laurent::monomial(-1, 2));
    Ok(TableOne { c, m, y, residual })
}

fn chain_key(c: &Chain) -> (usize, Vec<(usize, Vec<usize>)>) {
    (c.length(), c.sets().iter().map(|s| (s.len(), s.to_vec())).collect())
}

/// `(π, ℘(π))` for every irregular path, by length and then by size and
/// content of the sets.
pub fn table_two(j: &IndexSet, jprime: &IndexSet) -> Result<Vec<(Chain, Chain)>> {
    let w = SurroundsWitness::split_of(j, jprime)?;
    let mut out = Vec::new();
    for c in enumerate_paths(j, &w) {
        if c.kind() != ChainKind::OneHat && is_regular(&c, j, &w)?.is_none() {
            let image = wp(&c, j, &w)?;
            out.push((c, image));
        }
    }
    out.sort_by_key(|(c, _)| chain_key(c));
    Ok(out)
}

/// `v^{K'}` and its nonzero coordinates `(K, α_{K'}^K)`.
pub type LayeredRow = (IndexSet, Vec<(IndexSet, Laurent)>);

/// Rows `v^{K'}` of the layered matrix, `K' ⊊ J` by decreasing size, each
/// with its nonzero coordinates `α_{K'}^K`. `J'` must be an initial segment
/// of `J`; the coefficients are computed on the order-isomorphic canonical
/// context and relabelled.
pub fn table_three(j: &IndexSet, jprime: &IndexSet, size_i: usize) -> Result<Vec<LayeredRow>> {
    let r1 = jprime.len();
    if !jprime.is_subset(j) || jprime.as_slice() != &j.as_slice()[..r1] {
        return Err(Error::Precondition(format!(
            "J' = {} is not an initial segment of J = {}",
            jprime.label(),
            j.label()
        )));
    }
    if size_i < j.len() {
        return Err(Error::Precondition("need |I| >= |J|".into()));
    }
    let ctx = FlagContext::canonical(r1, j.len() - r1, size_i)?;
    let relabel = |k: &IndexSet| -> IndexSet {
        k.iter().map(|x| j.as_slice()[ctx.j().iter().position(|y| y == x).expect("k ⊆ J")]).collect()
    };
    let mut rows: Vec<IndexSet> = ctx.j().subsets().into_iter().filter(|k| k != ctx.j()).collect();
    rows.sort_by_key(|k| (std::cmp::Reverse(k.len()), relabel(k).to_vec()));
    let mut out = Vec::new();
    for kp in rows {
        let mut coords: Vec<(IndexSet, Laurent)> =
            expansion_coeffs(&ctx, &kp)?.into_iter().map(|(k, a)| (relabel(&k), a)).collect();
        coords.sort_by_key(|(k, _)| (k.len(), k.to_vec()));
        out.push((relabel(&kp), coords));
    }
    Ok(out)
}
