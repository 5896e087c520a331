//! The weighted graph `Γ(J; I)` on the Boolean lattice of `J`, its paths,
//! and the pairing `℘` of irregular with regular paths.
//!
//! Edge weights are stored as exponents `e` of `(-q)^e`. The graph depends on
//! `I` only through `|I|` and the split `J = J' ⊔ J''`, so both are explicit
//! inputs.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{precondition, Error, Result};
use crate::indexcomb::{cross_inversions, IndexSet, SurroundsWitness};
use crate::laurent::Laurent;

/// Exponent of `α_A^B` for `A ⊆ B ⊆ J`.
pub fn alpha_exponent(j: &IndexSet, jprime: &IndexSet, size_i: usize, a: &IndexSet, b: &IndexSet) -> i32 {
    let hat = b.difference(a);
    let outside = j.difference(b);
    let l1 = cross_inversions(outside.as_slice(), hat.as_slice()) as i32;
    let l2 = cross_inversions(hat.as_slice(), a.as_slice()) as i32;
    let lower = hat.intersection(jprime).len() as i32;
    -l1 - l2 + (2 * outside.len() as i32 - size_i as i32) * lower
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaGraph {
    j: IndexSet,
    witness: SurroundsWitness,
    size_i: usize,
}

impl GammaGraph {
    pub fn new(j: IndexSet, witness: SurroundsWitness, size_i: usize) -> Result<Self> {
        if j.is_empty() {
            return precondition("J must be nonempty");
        }
        if witness.jprime.union(&witness.jprimeprime) != j || !witness.jprime.is_disjoint(&witness.jprimeprime) {
            return precondition(format!(
                "witness J' = {:?}, J'' = {:?} does not split J = {j:?}",
                witness.jprime, witness.jprimeprime
            ));
        }
        Ok(Self { j, witness, size_i })
    }

    pub fn from_split(j: &IndexSet, jprime: &IndexSet, size_i: usize) -> Result<Self> {
        Self::new(j.clone(), SurroundsWitness::split_of(j, jprime)?, size_i)
    }

    pub fn j(&self) -> &IndexSet {
        &self.j
    }

    pub fn witness(&self) -> &SurroundsWitness {
        &self.witness
    }

    pub fn jprime(&self) -> &IndexSet {
        &self.witness.jprime
    }

    pub fn jprimeprime(&self) -> &IndexSet {
        &self.witness.jprimeprime
    }

    pub fn size_i(&self) -> usize {
        self.size_i
    }

    /// Exponent of `α_A^B`; `α_A^A = 1` has exponent 0.
    pub fn edge_exp(&self, a: &IndexSet, b: &IndexSet) -> Result<i32> {
        if !a.is_subset(b) || !b.is_subset(&self.j) {
            return precondition(format!("({a:?}, {b:?}) is not an edge of the lattice of {:?}", self.j));
        }
        if a == b {
            return Ok(0);
        }
        Ok(alpha_exponent(&self.j, self.jprime(), self.size_i, a, b))
    }

    pub fn vertices(&self) -> Vec<IndexSet> {
        self.j.subsets()
    }

    /// All strict inclusions with their exponents.
    pub fn edges(&self) -> Vec<(IndexSet, IndexSet, i32)> {
        let vs = self.vertices();
        let mut out = Vec::new();
        for a in &vs {
            for b in &vs {
                if a != b && a.is_subset(b) {
                    let e = alpha_exponent(&self.j, self.jprime(), self.size_i, a, b);
                    out.push((a.clone(), b.clone(), e));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        let m = self.j.len() as u32;
        3usize.pow(m) - 2usize.pow(m)
    }

    /// Graphviz description; vertices are named by subset labels.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph Gamma {\n");
        for v in self.vertices() {
            writeln!(s, "  \"{}\";", v.label()).unwrap();
        }
        for (a, b, e) in self.edges() {
            writeln!(s, "  \"{}\" -> \"{}\" [label=\"(-q)^{}\"];", a.label(), b.label(), e).unwrap();
        }
        s.push_str("}\n");
        s
    }

    /// `mM(K)`: `min(K ∩ J')` if nonempty, else `max(K ∩ J'')`.
    pub fn mm(&self, k: &IndexSet) -> Result<usize> {
        mm(k, &self.witness)
    }
}

pub fn mm(k: &IndexSet, witness: &SurroundsWitness) -> Result<usize> {
    if k.is_empty() {
        return precondition("mM of the empty set");
    }
    if let Some(x) = k.intersection(&witness.jprime).first() {
        return Ok(x);
    }
    k.intersection(&witness.jprimeprime)
        .last()
        .ok_or_else(|| Error::Precondition(format!("{k:?} is not contained in J' ∪ J''")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChainKind {
    ZeroHat,
    Interior,
    OneHat,
}

/// A path: `0̂ = (∅)`, an interior chain of nonempty proper subsets, or `1̂`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    kind: ChainKind,
    sets: Vec<IndexSet>,
}

impl Chain {
    pub fn zero_hat() -> Self {
        Chain { kind: ChainKind::ZeroHat, sets: vec![IndexSet::empty()] }
    }

    /// `J''` ascending by singletons, then `J'` adjoined in descending order.
    pub fn one_hat(witness: &SurroundsWitness) -> Self {
        let mut sets = Vec::new();
        let mut cur = IndexSet::empty();
        for x in witness.jprimeprime.iter() {
            cur = cur.with(x);
            sets.push(cur.clone());
        }
        for x in witness.jprime.iter().rev() {
            cur = cur.with(x);
            sets.push(cur.clone());
        }
        Chain { kind: ChainKind::OneHat, sets }
    }

    /// `1̂` without its final set `J`; equals `0̂` when `|J| = 1`.
    pub fn pi_one_hat(witness: &SurroundsWitness) -> Self {
        let mut sets = Self::one_hat(witness).sets;
        sets.pop();
        if sets.is_empty() {
            Self::zero_hat()
        } else {
            Chain { kind: ChainKind::Interior, sets }
        }
    }

    pub fn interior(sets: Vec<IndexSet>, j: &IndexSet) -> Result<Self> {
        for s in &sets {
            if s.is_empty() || s == j || !s.is_subset(j) {
                return precondition(format!("{s:?} is not a nonempty proper subset of {j:?}"));
            }
        }
        for w in sets.windows(2) {
            if w[0] == w[1] || !w[0].is_subset(&w[1]) {
                return precondition("chain must be strictly increasing");
            }
        }
        if sets.is_empty() {
            return precondition("interior chains are nonempty");
        }
        Ok(Chain { kind: ChainKind::Interior, sets })
    }

    pub fn kind(&self) -> ChainKind {
        self.kind
    }

    pub fn sets(&self) -> &[IndexSet] {
        &self.sets
    }

    /// Number of nonempty sets; `0̂` has length 0 and `1̂` length `|J|`.
    pub fn length(&self) -> usize {
        match self.kind {
            ChainKind::ZeroHat => 0,
            _ => self.sets.len(),
        }
    }

    /// `(5,56)` style; `0̂` and `1̂` are rendered as such.
    pub fn render(&self) -> String {
        match self.kind {
            ChainKind::ZeroHat => "0̂".to_string(),
            ChainKind::OneHat => "1̂".to_string(),
            ChainKind::Interior => {
                let parts: Vec<String> = self.sets.iter().map(IndexSet::label).collect();
                format!("({})", parts.join(","))
            }
        }
    }

    /// Like [`render`](Self::render) but spells out the sets of `1̂`.
    pub fn render_full(&self) -> String {
        match self.kind {
            ChainKind::OneHat => {
                let parts: Vec<String> = self.sets.iter().map(IndexSet::label).collect();
                format!("({})", parts.join(","))
            }
            _ => self.render(),
        }
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_full())
    }
}

/// `𝔓 = 𝔓₀ ∪ {0̂, 1̂}`, with `0̂` first and `1̂` last.
pub fn enumerate_paths(j: &IndexSet, witness: &SurroundsWitness) -> Vec<Chain> {
    fn extend(proper: &[IndexSet], prefix: &mut Vec<IndexSet>, out: &mut Vec<Chain>) {
        let last = prefix.last().cloned().unwrap_or_default();
        for b in proper {
            if b.len() > last.len() && last.is_subset(b) {
                prefix.push(b.clone());
                out.push(Chain { kind: ChainKind::Interior, sets: prefix.clone() });
                extend(proper, prefix, out);
                prefix.pop();
            }
        }
    }
    let proper: Vec<IndexSet> = j.subsets().into_iter().filter(|s| !s.is_empty() && s != j).collect();
    let mut out = vec![Chain::zero_hat()];
    extend(&proper, &mut Vec::new(), &mut out);
    out.push(Chain::one_hat(witness));
    out
}

/// Sum of edge exponents along `(∅, π, J)`.
pub fn path_weight_exp(g: &GammaGraph, c: &Chain) -> Result<i32> {
    let mut prev = IndexSet::empty();
    let mut total = 0;
    for s in c.sets.iter().chain(std::iter::once(g.j())) {
        total += g.edge_exp(&prev, s)?;
        prev = s.clone();
    }
    Ok(total)
}

/// The least regular position, if any. `0̂` is irregular; `1̂` is regular at
/// its last position.
pub fn is_regular(c: &Chain, j: &IndexSet, witness: &SurroundsWitness) -> Result<Option<usize>> {
    match c.kind {
        ChainKind::ZeroHat => return Ok(None),
        ChainKind::OneHat => return Ok(Some(c.sets.len())),
        ChainKind::Interior => {}
    }
    let p = c.sets.len();
    let at = |k: usize| -> IndexSet {
        match k {
            0 => IndexSet::empty(),
            k if k == p + 1 => j.clone(),
            k => c.sets[k - 1].clone(),
        }
    };
    for i0 in 1..=p {
        if at(i0).len() != i0 {
            break;
        }
        let added = at(i0).difference(&at(i0 - 1));
        let target = mm(&at(i0 + 1).difference(&at(i0 - 1)), witness)?;
        if added == IndexSet::singleton(target) {
            return Ok(Some(i0));
        }
    }
    Ok(None)
}

/// `℘`: inserts a set making an irregular path regular.
pub fn wp(c: &Chain, j: &IndexSet, witness: &SurroundsWitness) -> Result<Chain> {
    if is_regular(c, j, witness)?.is_some() {
        return precondition(format!("{} is regular", c.render()));
    }
    let interior: &[IndexSet] = match c.kind {
        ChainKind::ZeroHat => &[],
        _ => &c.sets,
    };
    let p = interior.len();
    let at = |k: usize| -> IndexSet {
        match k {
            0 => IndexSet::empty(),
            k if k == p + 1 => j.clone(),
            k => interior[k - 1].clone(),
        }
    };
    let mut i0 = 0;
    while i0 < p && at(i0 + 1).len() == i0 + 1 {
        i0 += 1;
    }
    let b = mm(&at(i0 + 1).difference(&at(i0)), witness)?;
    let new_set = at(i0).with(b);
    let mut sets = interior.to_vec();
    sets.insert(i0, new_set);
    if sets.last() == Some(j) {
        let one = Chain::one_hat(witness);
        if one.sets != sets {
            return Err(Error::Invariant(format!("℘({}) produced a maximal chain other than 1̂", c.render())));
        }
        return Ok(one);
    }
    Chain::interior(sets, j)
}

/// `℘⁻¹`: deletes the set at the first regular position.
pub fn wp_inverse(c: &Chain, j: &IndexSet, witness: &SurroundsWitness) -> Result<Chain> {
    let i0 = is_regular(c, j, witness)?.ok_or_else(|| Error::Precondition(format!("{} is irregular", c.render())))?;
    let mut sets = c.sets.clone();
    sets.remove(i0 - 1);
    if sets.is_empty() {
        return Ok(Chain::zero_hat());
    }
    Chain::interior(sets, j)
}

/// `exp α_A^B + exp α_B^C - exp α_A^C = 2ℓ((B∖A)∩J' | C∖B) - 2ℓ(C∖B | (B∖A)∩J'')`.
pub fn weight_lemma_check(g: &GammaGraph, a: &IndexSet, b: &IndexSet, c: &IndexSet) -> Result<bool> {
    if !a.is_subset(b) || !b.is_subset(c) || !c.is_subset(g.j()) {
        return precondition("need A ⊆ B ⊆ C ⊆ J");
    }
    let lhs = g.edge_exp(a, b)? + g.edge_exp(b, c)? - g.edge_exp(a, c)?;
    let hat = b.difference(a);
    let top = c.difference(b);
    let rhs = 2 * cross_inversions(hat.intersection(g.jprime()).as_slice(), top.as_slice()) as i32
        - 2 * cross_inversions(top.as_slice(), hat.intersection(g.jprimeprime()).as_slice()) as i32;
    Ok(lhs == rhs)
}

/// `exp α(π^1̂) = |J'|(|J'|-1) - |J''|(|J''|-1) + exp α_∅^J`.
pub fn special_path_weight_check(g: &GammaGraph) -> Result<bool> {
    let a = g.jprime().len() as i32;
    let b = g.jprimeprime().len() as i32;
    let lhs = path_weight_exp(g, &Chain::pi_one_hat(g.witness()))?;
    let rhs = a * (a - 1) - b * (b - 1) + g.edge_exp(&IndexSet::empty(), g.j())?;
    Ok(lhs == rhs)
}

fn signed_weight(g: &GammaGraph, c: &Chain) -> Result<Laurent> {
    let w = Laurent::neg_q_pow(path_weight_exp(g, c)?);
    Ok(if c.length() % 2 == 1 { -w } else { w })
}

/// `Σ_{π ∈ 𝔓 ∖ {1̂}} (-1)^{len π} α(π)`.
pub fn theta_via_paths(g: &GammaGraph) -> Result<Laurent> {
    let mut total = Laurent::zero();
    for c in enumerate_paths(g.j(), g.witness()) {
        if c.kind != ChainKind::OneHat {
            total += &signed_weight(g, &c)?;
        }
    }
    Ok(total)
}

/// The same signed sum organised by `℘`-pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedSum {
    /// Number of pairs `(π, ℘π)` with `π ≠ π^1̂` whose terms cancel.
    pub cancelled_pairs: usize,
    /// Pairs whose terms do not cancel.
    pub uncancelled: Vec<(Chain, Chain)>,
    /// The leftover `π^1̂` term.
    pub leftover: Laurent,
    /// `leftover` plus any uncancelled residue.
    pub total: Laurent,
}

pub fn theta_via_paired_paths(g: &GammaGraph) -> Result<PairedSum> {
    let special = Chain::pi_one_hat(g.witness());
    let mut out = PairedSum {
        cancelled_pairs: 0,
        uncancelled: Vec::new(),
        leftover: signed_weight(g, &special)?,
        total: Laurent::zero(),
    };
    out.total = out.leftover.clone();
    for c in enumerate_paths(g.j(), g.witness()) {
        if c == special || is_regular(&c, g.j(), g.witness())?.is_some() {
            continue;
        }
        let image = wp(&c, g.j(), g.witness())?;
        let pair = &signed_weight(g, &c)? + &signed_weight(g, &image)?;
        if pair.is_zero() {
            out.cancelled_pairs += 1;
        } else {
            out.total += &pair;
            out.uncancelled.push((c, image));
        }
    }
    Ok(out)
}

/// Regular/irregular census plus the `℘` properties for one graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairingReport {
    pub paths: usize,
    pub regular: usize,
    pub irregular: usize,
    pub bijective: bool,
    pub inverse_ok: bool,
    pub weight_preserved: bool,
    pub length_plus_one: bool,
    pub failures: Vec<String>,
}

impl PairingReport {
    pub fn ok(&self) -> bool {
        self.regular == self.irregular
            && self.bijective
            && self.inverse_ok
            && self.weight_preserved
            && self.length_plus_one
    }
}

pub fn pairing_report(g: &GammaGraph) -> Result<PairingReport> {
    let j = g.j();
    let w = g.witness();
    let paths = enumerate_paths(j, w);
    let mut rep = PairingReport {
        paths: paths.len(),
        bijective: true,
        inverse_ok: true,
        weight_preserved: true,
        length_plus_one: true,
        ..Default::default()
    };
    let mut images = std::collections::BTreeSet::new();
    for c in &paths {
        if is_regular(c, j, w)?.is_some() {
            rep.regular += 1;
            let back = wp_inverse(c, j, w)?;
            if is_regular(&back, j, w)?.is_some() || wp(&back, j, w)? != *c {
                rep.inverse_ok = false;
                rep.failures.push(format!("℘(℘⁻¹{}) != {}", c.render(), c.render()));
            }
            continue;
        }
        rep.irregular += 1;
        let image = match wp(c, j, w) {
            Ok(image) => image,
            Err(e) => {
                rep.bijective = false;
                rep.failures.push(format!("℘({}): {e}", c.render()));
                continue;
            }
        };
        if is_regular(&image, j, w)?.is_none() || !images.insert(image.clone()) {
            rep.bijective = false;
            rep.failures.push(format!("℘({}) = {} is irregular or repeated", c.render(), image.render_full()));
        }
        if wp_inverse(&image, j, w)? != *c {
            rep.inverse_ok = false;
            rep.failures.push(format!("℘⁻¹(℘{}) != {}", c.render(), c.render()));
        }
        if path_weight_exp(g, &image)? != path_weight_exp(g, c)? {
            rep.weight_preserved = false;
            rep.failures.push(format!("℘ changes the weight of {}", c.render()));
        }
        if image.length() != c.length() + 1 {
            rep.length_plus_one = false;
        }
    }
    if images.len() != rep.regular {
        rep.bijective = false;
    }
    Ok(rep)
}
