//! Expressions in the flag algebra generated by symbols `f_I`, the relations
//! among them, the graded space `V`, and the elimination that writes the
//! q-commutation relation as a combination of the other relations.
//!
//! Symbols are always stored with sorted indices: the alternating relations
//! are applied on construction, nothing else is.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{precondition, Error, Result};
use crate::indexcomb::{cross_inversions, inversions, surrounds, IndexSet, SurroundsWitness};
use crate::laurent::Laurent;
use crate::qalgebra::{Engine, QElement};

/// `f_t = c * f_{sorted t}`; `None` when `t` repeats an index.
pub fn normalize_f(t: &[usize]) -> Option<(Laurent, IndexSet)> {
    let len = inversions(t).ok()?;
    Some((Laurent::neg_q_pow(-(len as i32)), t.iter().copied().collect()))
}

pub type FlagWord = Vec<IndexSet>;

/// A linear combination of words in the symbols `f_I`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct FlagExpr {
    terms: BTreeMap<FlagWord, Laurent>,
}

impl FlagExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c * f_{t_1} ... f_{t_k}` for arbitrary tuples, normalized.
    pub fn word(tuples: &[&[usize]], c: &Laurent) -> Self {
        let mut e = Self::zero();
        e.add_word(tuples, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FlagWord, &Laurent)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &[IndexSet]) -> Laurent {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    /// Largest index appearing in any symbol.
    pub fn max_index(&self) -> usize {
        self.terms.keys().flatten().filter_map(IndexSet::last).max().unwrap_or(0)
    }

    pub fn add_sets(&mut self, word: FlagWord, c: &Laurent) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(word).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Adds `c * f_{t_1} ... f_{t_k}`, normalizing each symbol.
    pub fn add_word(&mut self, tuples: &[&[usize]], c: &Laurent) {
        let mut scalar = c.clone();
        let mut word = Vec::with_capacity(tuples.len());
        for t in tuples {
            match normalize_f(t) {
                Some((s, set)) => {
                    scalar = &scalar * &s;
                    word.push(set);
                }
                None => return,
            }
        }
        self.add_sets(word, &scalar);
    }

    pub fn scale(&self, c: &Laurent) -> Self {
        let mut out = Self::zero();
        for (w, x) in &self.terms {
            out.add_sets(w.clone(), &(x * c));
        }
        out
    }

    pub fn add_scaled(&mut self, other: &FlagExpr, c: &Laurent) {
        for (w, x) in &other.terms {
            self.add_sets(w.clone(), &(x * c));
        }
    }

    /// `q^-1 f_{234} f_{1}` style rendering of one term's coefficient and
    /// word, with the sign split off.
    pub fn render_term(word: &[IndexSet], c: &Laurent) -> (bool, String) {
        let neg = matches!(c.as_monomial(), Some((x, _)) if x < &0.into());
        let body = if neg { (-c).render() } else { c.render() };
        let symbols: Vec<String> = word.iter().map(|s| format!("f_{{{}}}", s.label())).collect();
        let symbols = symbols.join(" ");
        let text = if c.is_compound() {
            format!("({body}) {symbols}")
        } else if body == "1" {
            symbols
        } else {
            format!("{body} {symbols}")
        };
        (neg, text)
    }

    /// Renders as `f_{1} f_{234} - q^-1 f_{234} f_{1}`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let (neg, text) = Self::render_term(w, c);
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&text);
        }
        out
    }
}

impl fmt::Display for FlagExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for FlagExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FlagExpr({})", self.render())
    }
}

impl Add<&FlagExpr> for &FlagExpr {
    type Output = FlagExpr;
    fn add(self, rhs: &FlagExpr) -> FlagExpr {
        let mut out = self.clone();
        out.add_scaled(rhs, &Laurent::one());
        out
    }
}

impl Sub<&FlagExpr> for &FlagExpr {
    type Output = FlagExpr;
    fn sub(self, rhs: &FlagExpr) -> FlagExpr {
        let mut out = self.clone();
        out.add_scaled(rhs, &Laurent::from(-1));
        out
    }
}

impl Neg for &FlagExpr {
    type Output = FlagExpr;
    fn neg(self) -> FlagExpr {
        self.scale(&Laurent::from(-1))
    }
}

fn concat(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().chain(b).copied().collect()
}

/// Young symmetry `Y_{I,Jtail;(a)} = Σ_{Λ ⊆ I, |Λ| = a} (-q)^{-ℓ(I∖Λ|Λ)} f_{I∖Λ} f_{Λ|Jtail}`.
pub fn young_expr(i: &IndexSet, jtail: &[usize], a: usize) -> Result<FlagExpr> {
    if a == 0 || a > i.len() {
        return precondition(format!("need 1 <= a <= |I|, got a = {a}, |I| = {}", i.len()));
    }
    let e = i.len() - a;
    let d = a + jtail.len();
    if d > e {
        return precondition(format!("need d <= e, got d = {d}, e = {e}"));
    }
    let mut out = FlagExpr::zero();
    for lambda in i.subsets_of_size(a) {
        let rest = i.difference(&lambda);
        let c = Laurent::neg_q_pow(-(cross_inversions(rest.as_slice(), lambda.as_slice()) as i32));
        out.add_word(&[rest.as_slice(), &concat(lambda.as_slice(), jtail)], &c);
    }
    Ok(out)
}

/// `M_{J,I} = f_J f_I - Σ_{Λ ⊆ I, |Λ| = |J|} (-q)^{ℓ(Λ|I∖Λ)} f_{J|I∖Λ} f_Λ`.
pub fn monom_straight_expr(j: &IndexSet, i: &IndexSet) -> Result<FlagExpr> {
    if j.len() > i.len() {
        return precondition(format!("need |J| <= |I|, got {} > {}", j.len(), i.len()));
    }
    let mut out = FlagExpr::word(&[j.as_slice(), i.as_slice()], &Laurent::one());
    for lambda in i.subsets_of_size(j.len()) {
        let rest = i.difference(&lambda);
        let c = Laurent::neg_q_pow(cross_inversions(lambda.as_slice(), rest.as_slice()) as i32);
        out.add_word(&[&concat(j.as_slice(), rest.as_slice()), lambda.as_slice()], &-c);
    }
    Ok(out)
}

/// `C_{J,I} = f_J f_I - q^{<<J,I>>} f_I f_J`.
pub fn comm_expr(j: &IndexSet, i: &IndexSet) -> Result<FlagExpr> {
    let w = surrounds(j, i).ok_or_else(|| Error::Precondition(format!("{j:?} does not surround {i:?}")))?;
    let mut out = FlagExpr::word(&[j.as_slice(), i.as_slice()], &Laurent::one());
    out.add_word(&[i.as_slice(), j.as_slice()], &-Laurent::q_pow(w.exponent));
    Ok(out)
}

/// `φ`: replaces every `f_I` by `[I]` and multiplies in `M_q(n)`.
pub fn phi_eval(engine: &Engine, e: &FlagExpr, n: usize) -> Result<QElement> {
    let mut acc = QElement::zero(n);
    for (word, c) in e.terms() {
        let mut prod = QElement::scalar(n, c.clone());
        for s in word {
            prod = engine.mul(&prod, &engine.minor(s, n)?)?;
        }
        acc.add_scaled(&prod, &Laurent::one())?;
    }
    Ok(acc)
}

/// A pair `J, I` with `J ∩ I = ∅` and `J` surrounding `I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagContext {
    i: IndexSet,
    j: IndexSet,
    witness: SurroundsWitness,
}

impl FlagContext {
    pub fn new(j: &IndexSet, i: &IndexSet) -> Result<Self> {
        if j.is_empty() {
            return precondition("J must be nonempty");
        }
        if !j.is_disjoint(i) {
            return precondition(format!("J = {j:?} and I = {i:?} must be disjoint"));
        }
        let witness = surrounds(j, i).ok_or_else(|| Error::Precondition(format!("{j:?} does not surround {i:?}")))?;
        Ok(Self { i: i.clone(), j: j.clone(), witness })
    }

    /// The order-isomorphic representative with `J' = {1..a}`,
    /// `I = {a+1..a+s}` and `J''` above `I`.
    pub fn canonical(r1: usize, r2: usize, s: usize) -> Result<Self> {
        let j: IndexSet = (1..=r1).chain(r1 + s + 1..=r1 + s + r2).collect();
        let i: IndexSet = (r1 + 1..=r1 + s).collect();
        Self::new(&j, &i)
    }

    pub fn i(&self) -> &IndexSet {
        &self.i
    }

    pub fn j(&self) -> &IndexSet {
        &self.j
    }

    pub fn witness(&self) -> &SurroundsWitness {
        &self.witness
    }

    pub fn union(&self) -> IndexSet {
        self.i.union(&self.j)
    }

    /// `r = |J|`.
    pub fn r(&self) -> usize {
        self.j.len()
    }

    /// `s = |I|`.
    pub fn s(&self) -> usize {
        self.i.len()
    }

    /// `t = s - r`.
    pub fn t(&self) -> usize {
        self.s() - self.r()
    }

    /// `X = |J'| t + |J''| |J|`, the exponent in the prefactor of `CM`.
    pub fn cm_exponent(&self) -> i32 {
        (self.witness.jprime.len() * self.t() + self.witness.jprimeprime.len() * self.r()) as i32
    }
}

/// A vector of `V`; the basis label `(A, B)` is determined by `B` since
/// `A = (I ∪ J) ∖ B`.
#[derive(Clone, PartialEq, Eq)]
pub struct FlagVector {
    context: FlagContext,
    coords: BTreeMap<IndexSet, Laurent>,
}

impl FlagVector {
    pub fn zero(context: &FlagContext) -> Self {
        Self { context: context.clone(), coords: BTreeMap::new() }
    }

    /// The basis vector `e_{A,B}`.
    pub fn basis(context: &FlagContext, a: &IndexSet, b: &IndexSet) -> Result<Self> {
        let mut v = Self::zero(context);
        v.add_basis(a, b, &Laurent::one())?;
        Ok(v)
    }

    pub fn context(&self) -> &FlagContext {
        &self.context
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Nonzero coordinates as `((A, B), c)`.
    pub fn coords(&self) -> impl Iterator<Item = ((IndexSet, IndexSet), &Laurent)> + '_ {
        let u = self.context.union();
        self.coords.iter().map(move |(b, c)| ((u.difference(b), b.clone()), c))
    }

    pub fn coord(&self, b: &IndexSet) -> Laurent {
        self.coords.get(b).cloned().unwrap_or_default()
    }

    pub fn add_basis(&mut self, a: &IndexSet, b: &IndexSet, c: &Laurent) -> Result<()> {
        let u = self.context.union();
        if !a.is_disjoint(b) || a.union(b) != u || b.len() != self.context.r() {
            return Err(Error::Invariant(format!("({a:?}, {b:?}) is not a basis label of V")));
        }
        let slot = self.coords.entry(b.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coords.remove(b);
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &FlagVector, c: &Laurent) {
        for (b, x) in &other.coords {
            let slot = self.coords.entry(b.clone()).or_default();
            *slot += &(x * c);
            if slot.is_zero() {
                self.coords.remove(b);
            }
        }
    }

    pub fn scale(&self, c: &Laurent) -> Self {
        let mut out = Self::zero(&self.context);
        out.add_scaled(self, c);
        out
    }
}

impl fmt::Debug for FlagVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.coords().map(|((a, b), c)| format!("({}) e_{{{},{}}}", c.render(), a.label(), b.label())).collect();
        write!(f, "FlagVector[{}]", if parts.is_empty() { "0".to_string() } else { parts.join(" + ") })
    }
}

fn spread(context: &FlagContext, k: &IndexSet, pool: &IndexSet) -> Result<FlagVector> {
    let u = context.union();
    let ground = u.difference(k);
    let mut v = FlagVector::zero(context);
    for lambda in pool.subsets_of_size(context.r() - k.len()) {
        let rest = ground.difference(&lambda);
        let e = -(cross_inversions(rest.as_slice(), lambda.as_slice()) as i32)
            - cross_inversions(lambda.as_slice(), k.as_slice()) as i32;
        v.add_basis(&rest, &lambda.union(k), &Laurent::neg_q_pow(e))?;
    }
    Ok(v)
}

/// `e^K = Σ_{Λ ⊆ I, |Λ| = r-|K|} (-q)^{-ℓ((I∪J)∖(K∪Λ)|Λ) - ℓ(Λ|K)} e_{(I∪J)∖(Λ∪K), Λ∪K}`.
pub fn build_e_vec(context: &FlagContext, k: &IndexSet) -> Result<FlagVector> {
    if !k.is_subset(context.j()) {
        return precondition(format!("K = {k:?} is not a subset of J = {:?}", context.j()));
    }
    spread(context, k, context.i())
}

/// `v^K`: as `e^K` but with `Λ` ranging over `(I ∪ J) ∖ K`.
pub fn build_v_vec(context: &FlagContext, k: &IndexSet) -> Result<FlagVector> {
    if !k.is_subset(context.j()) || k == context.j() {
        return precondition(format!("K = {k:?} must be a proper subset of J = {:?}", context.j()));
    }
    spread(context, k, &context.union().difference(k))
}

/// The part of `v` in grade `K`: labels `(A, B)` with `B ∩ J = K`.
pub fn grade_component(v: &FlagVector, k: &IndexSet) -> Result<FlagVector> {
    let j = v.context.j();
    if !k.is_subset(j) {
        return precondition(format!("K = {k:?} is not a subset of J = {j:?}"));
    }
    let coords =
        v.coords.iter().filter(|(b, _)| &b.intersection(j) == k).map(|(b, c)| (b.clone(), c.clone())).collect();
    Ok(FlagVector { context: v.context.clone(), coords })
}

/// `μ(e_{A,B}) = f_A f_B`.
pub fn mu_eval(v: &FlagVector) -> FlagExpr {
    let mut out = FlagExpr::zero();
    for ((a, b), c) in v.coords() {
        out.add_sets(vec![a, b], c);
    }
    out
}

/// The scalars `α_{K'}^K` with `v^{K'} = Σ_K α_{K'}^K e^K`, read off grade by
/// grade. Zero coefficients are omitted.
pub fn expansion_coeffs(context: &FlagContext, kp: &IndexSet) -> Result<BTreeMap<IndexSet, Laurent>> {
    let v = build_v_vec(context, kp)?;
    let mut out = BTreeMap::new();
    let mut reassembled = FlagVector::zero(context);
    for k in context.j().subsets() {
        let part = grade_component(&v, &k)?;
        let e = build_e_vec(context, &k)?;
        let Some((b, ec)) = e.coords.iter().next() else {
            if !part.is_zero() {
                return Err(Error::Invariant(format!("grade {k:?} of v^{kp:?} is nonzero but e^K vanishes")));
            }
            continue;
        };
        let alpha = part.coord(b).div_unit(ec).expect("e^K coordinates are signed q-powers");
        if part != e.scale(&alpha) {
            return Err(Error::Invariant(format!("grade {k:?} of v^{kp:?} is not a multiple of e^K")));
        }
        if alpha.is_zero() {
            continue;
        }
        if alpha.as_neg_q_power().is_none() {
            return Err(Error::Invariant(format!("α_{kp:?}^{k:?} = {} is not a power of -q", alpha.render())));
        }
        reassembled.add_scaled(&e, &alpha);
        out.insert(k, alpha);
    }
    if reassembled != v {
        return Err(Error::Invariant(format!("v^{kp:?} is not spanned by the e^K")));
    }
    Ok(out)
}

/// Output of the layered elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination {
    /// `d_{K'}` with `v^∅ + Σ_{K' ≠ ∅} d_{K'} v^{K'} = e^∅ - θ e^J`.
    pub combination: BTreeMap<IndexSet, Laurent>,
    /// The final `e^J` coordinate of the reduced `v^∅`.
    pub ej_coord: Laurent,
    /// `θ = -ej_coord`.
    pub theta: Laurent,
    /// `η_K` for all `K ⊊ J`, with `C - M = Σ η_K Y_K` when `θ` agrees
    /// with the closed form.
    pub eta: BTreeMap<IndexSet, Laurent>,
}

/// Gaussian elimination on the rows `v^{K'}`, grades visited by decreasing
/// `|K'|`.
pub fn eliminate(context: &FlagContext) -> Result<Elimination> {
    let j = context.j();
    let proper: Vec<IndexSet> = j.subsets().into_iter().filter(|k| k != j).collect();
    // reduced[K] = (row over e-basis, combination of v's)
    type Row = BTreeMap<IndexSet, Laurent>;
    let mut reduced: BTreeMap<IndexSet, (Row, Row)> = BTreeMap::new();
    let mut order = proper.clone();
    order.sort_by_key(|k| std::cmp::Reverse(k.len()));
    for kp in &order {
        let mut row = expansion_coeffs(context, kp)?;
        let mut comb: Row = BTreeMap::from([(kp.clone(), Laurent::one())]);
        for k in &order {
            if k.len() <= kp.len() {
                continue;
            }
            let Some(c) = row.get(k).cloned() else { continue };
            let (rrow, rcomb) = &reduced[k];
            for (key, x) in rrow {
                let slot = row.entry(key.clone()).or_default();
                *slot -= &(x * &c);
            }
            for (key, x) in rcomb {
                let slot = comb.entry(key.clone()).or_default();
                *slot -= &(x * &c);
            }
            row.retain(|_, v| !v.is_zero());
            comb.retain(|_, v| !v.is_zero());
        }
        let stray: Vec<&IndexSet> = row.keys().filter(|k| *k != kp && *k != j).collect();
        if !stray.is_empty() || !row.get(kp).is_some_and(Laurent::is_one) {
            return Err(Error::Invariant(format!("row v^{kp:?} did not reduce to e^K' + x e^J")));
        }
        reduced.insert(kp.clone(), (row, comb));
    }
    let (row, comb) = reduced.remove(&IndexSet::empty()).expect("∅ is a proper subset of nonempty J");
    let ej_coord = row.get(j).cloned().unwrap_or_default();
    let theta = -&ej_coord;
    let prefactor = Laurent::neg_q_pow(context.cm_exponent());
    let mut eta = BTreeMap::new();
    for k in &proper {
        let d = comb.get(k).cloned().unwrap_or_default();
        eta.insert(k.clone(), &prefactor * &d);
    }
    let mut combination = comb;
    combination.remove(&IndexSet::empty());
    Ok(Elimination { combination, ej_coord, theta, eta })
}

/// `θ = q^{|J''|-|J'|} (-q)^{-|J'| t - |J''| |J|}`.
pub fn theta_closed_form(r1: usize, r2: usize, s: usize) -> Laurent {
    let r = r1 + r2;
    let t = s as i32 - r as i32;
    &Laurent::q_pow(r2 as i32 - r1 as i32) * &Laurent::neg_q_pow(-(r1 as i32) * t - (r2 * r) as i32)
}

/// `CM_{J,I}(θ) = (-q)^X (Σ_{Λ ⊆ I, |Λ| = r} (-q)^{-ℓ((J∪I)∖Λ|Λ)} f_{(J∪I)∖Λ} f_Λ - θ f_I f_J)`.
pub fn cm_expr(context: &FlagContext, theta: &Laurent) -> FlagExpr {
    let u = context.union();
    let mut out = FlagExpr::zero();
    for lambda in context.i().subsets_of_size(context.r()) {
        let rest = u.difference(&lambda);
        let c = Laurent::neg_q_pow(-(cross_inversions(rest.as_slice(), lambda.as_slice()) as i32));
        out.add_sets(vec![rest, lambda], &c);
    }
    out.add_sets(vec![context.i().clone(), context.j().clone()], &-theta);
    out.scale(&Laurent::neg_q_pow(context.cm_exponent()))
}

/// `Y_{(I∪J)∖K, K; (r-|K|)}`.
pub fn young_for(context: &FlagContext, k: &IndexSet) -> Result<FlagExpr> {
    young_expr(&context.union().difference(k), k.as_slice(), context.r() - k.len())
}

/// `C_{J,I} - M_{J,I} - Σ_K η_K Y_K`; zero when the elimination succeeds.
pub fn reconstruction(context: &FlagContext, elim: &Elimination) -> Result<FlagExpr> {
    let mut out = &comm_expr(context.j(), context.i())? - &monom_straight_expr(context.j(), context.i())?;
    for (k, eta) in &elim.eta {
        out.add_scaled(&young_for(context, k)?, &-eta);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s<const N: usize>(a: [usize; N]) -> IndexSet {
        IndexSet::from(a)
    }

    fn ctx() -> FlagContext {
        FlagContext::new(&s([1]), &s([2, 3, 4])).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_f(&[1, 2, 4]), Some((Laurent::one(), s([1, 2, 4]))));
        assert_eq!(normalize_f(&[2, 1]), Some((Laurent::neg_q_pow(-1), s([1, 2]))));
        assert_eq!(normalize_f(&[1, 1, 3]), None);
    }

    #[test]
    fn table_one_rows() {
        let c = comm_expr(&s([1]), &s([2, 3, 4])).unwrap();
        assert_eq!(c.render(), "f_{1} f_{234} - q^-1 f_{234} f_{1}");
        let m = monom_straight_expr(&s([1]), &s([2, 3, 4])).unwrap();
        assert_eq!(m.render(), "f_{1} f_{234} - q^2 f_{123} f_{4} + q f_{124} f_{3} - f_{134} f_{2}");
        let y = young_expr(&s([1, 2, 3, 4]), &[], 1).unwrap();
        assert_eq!(y.render(), "f_{123} f_{4} - q^-1 f_{124} f_{3} + q^-2 f_{134} f_{2} - q^-3 f_{234} f_{1}");
        let mut rest = &c - &m;
        rest.add_scaled(&y, &Laurent::monomial(-1, 2));
        assert!(rest.is_zero());
    }

    #[test]
    fn young_examples() {
        let y = young_expr(&s([1, 2]), &[], 1).unwrap();
        assert_eq!(y.render(), "f_{1} f_{2} - q^-1 f_{2} f_{1}");
        let y = young_expr(&s([1, 2, 3]), &[1], 1).unwrap();
        // only Λ = {2}, {3} survive; f_{21} = (-q)^-1 f_{12}, f_{31} = (-q)^-1 f_{13}
        assert_eq!(y.num_terms(), 2);
        assert_eq!(y.coeff(&[s([1, 2]), s([1, 3])]), Laurent::monomial(-1, -1));
        assert_eq!(y.coeff(&[s([1, 3]), s([1, 2])]), Laurent::monomial(1, -2));
        assert!(young_expr(&s([1, 2]), &[3], 1).is_err());
        assert!(young_expr(&s([1, 2]), &[], 0).is_err());
    }

    #[test]
    fn monom_and_comm_edge_cases() {
        assert!(monom_straight_expr(&s([1]), &s([1])).unwrap().is_zero());
        assert!(monom_straight_expr(&s([1, 2]), &s([3])).is_err());
        assert!(comm_expr(&s([2]), &s([2])).unwrap().is_zero());
        assert!(comm_expr(&s([2]), &s([1, 3])).is_err());
        let c = comm_expr(&s([1, 4]), &s([2, 3])).unwrap();
        assert_eq!(c.render(), "f_{14} f_{23} - f_{23} f_{14}");
    }

    #[test]
    fn phi_of_relations_vanishes() {
        let e = Engine::desk();
        let y2 = young_expr(&s([1, 2]), &[], 1).unwrap();
        assert!(phi_eval(&e, &y2, 2).unwrap().is_zero());
        let y = young_expr(&s([1, 2, 3, 4]), &[], 1).unwrap();
        assert!(phi_eval(&e, &y, 4).unwrap().is_zero());
        assert!(phi_eval(&e, &comm_expr(&s([1]), &s([2, 3, 4])).unwrap(), 4).unwrap().is_zero());
        assert!(phi_eval(&e, &monom_straight_expr(&s([1]), &s([2, 3, 4])).unwrap(), 4).unwrap().is_zero());
        assert!(phi_eval(&e, &y, 3).is_err());
        let not_a_relation = FlagExpr::word(&[&[1], &[2]], &Laurent::one());
        assert!(!phi_eval(&e, &not_a_relation, 2).unwrap().is_zero());
    }

    #[test]
    fn vectors_for_table_one() {
        let c = ctx();
        let ej = build_e_vec(&c, &s([1])).unwrap();
        assert_eq!(ej, FlagVector::basis(&c, &s([2, 3, 4]), &s([1])).unwrap());
        let e0 = build_e_vec(&c, &s([])).unwrap();
        assert_eq!(mu_eval(&e0).render(), "f_{123} f_{4} - q^-1 f_{124} f_{3} + q^-2 f_{134} f_{2}");
        let v0 = build_v_vec(&c, &s([])).unwrap();
        assert_eq!(mu_eval(&v0), young_expr(&s([1, 2, 3, 4]), &[], 1).unwrap());
        let mut expect = e0.clone();
        expect.add_scaled(&ej, &Laurent::neg_q_pow(-3));
        assert_eq!(v0, expect);
        assert!(build_v_vec(&c, &s([1])).is_err());
        assert!(build_e_vec(&c, &s([2])).is_err());
        assert_eq!(grade_component(&ej, &s([1])).unwrap(), ej);
        assert!(grade_component(&ej, &s([])).unwrap().is_zero());
    }

    #[test]
    fn elimination_for_table_one() {
        let c = ctx();
        let el = eliminate(&c).unwrap();
        assert_eq!(el.theta, Laurent::q_pow(-3));
        assert_eq!(el.eta[&s([])], Laurent::q_pow(2));
        assert_eq!(theta_closed_form(1, 0, 3), Laurent::q_pow(-3));
        assert!(reconstruction(&c, &el).unwrap().is_zero());
        let cm = cm_expr(&c, &el.theta);
        let diff = &comm_expr(c.j(), c.i()).unwrap() - &monom_straight_expr(c.j(), c.i()).unwrap();
        assert_eq!(cm, diff);
    }

    #[test]
    fn elimination_for_14_23() {
        let c = FlagContext::new(&s([1, 4]), &s([2, 3])).unwrap();
        let el = eliminate(&c).unwrap();
        assert_eq!(el.theta, theta_closed_form(1, 1, 2));
        assert_eq!(el.theta, Laurent::q_pow(-2));
        assert!(reconstruction(&c, &el).unwrap().is_zero());
    }

    #[test]
    fn mu_of_v_is_young() {
        for (r1, r2, sz) in [(1, 1, 2), (2, 0, 3), (0, 2, 3), (1, 2, 4), (2, 1, 3)] {
            let c = FlagContext::canonical(r1, r2, sz).unwrap();
            for k in c.j().subsets() {
                if &k == c.j() {
                    continue;
                }
                let v = build_v_vec(&c, &k).unwrap();
                assert_eq!(mu_eval(&v), young_for(&c, &k).unwrap());
            }
        }
    }

    #[test]
    fn flag_expr_rendering() {
        let mut e = FlagExpr::word(&[&[1], &[2]], &Laurent::q_minus_q_inv());
        e.add_word(&[&[3, 1]], &Laurent::from(2));
        assert_eq!(e.render(), "(q - q^-1) f_{1} f_{2} - 2*q^-1 f_{13}");
        assert_eq!(FlagExpr::zero().render(), "0");
        assert_eq!(e.max_index(), 3);
    }
}
