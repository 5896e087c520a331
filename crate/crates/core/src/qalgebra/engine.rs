use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use super::{is_normal, Gen, QElement, Word};
use crate::error::{Error, Result};
use crate::indexcomb::{inversions, IndexSet, IndexTuple};
use crate::laurent::Laurent;

/// Size limits applied before any straightening. Products of `d x d`
/// minors expand into `(d!)^2` words, so the defaults stay at desk scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_minor: usize,
    pub max_degree: usize,
}

impl Limits {
    pub const DESK: Limits = Limits { max_minor: 5, max_degree: 12 };
    pub const UNBOUNDED: Limits = Limits { max_minor: usize::MAX, max_degree: usize::MAX };
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DESK
    }
}

/// Reduction order used to bring a word into normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Multiply letters in one at a time, bubbling each new letter into the
    /// already-normal prefix. Memoised; the default.
    Insertion,
    /// Naive rewriting at the leftmost out-of-order adjacent pair.
    LeftmostRewrite,
    /// Naive rewriting at the rightmost out-of-order adjacent pair.
    RightmostRewrite,
}

/// Rewrites the out-of-order pair `y g` (`y > g`) into normal-ordered pairs.
fn exchange(y: Gen, g: Gen) -> Vec<(Laurent, Gen, Gen)> {
    debug_assert!(y > g);
    if y.row == g.row || y.col == g.col {
        // x_{il} x_{ik} = q x_{ik} x_{il}, x_{jk} x_{ik} = q x_{ik} x_{jk}
        vec![(Laurent::q(), g, y)]
    } else if y.col < g.col {
        // x_{jk} x_{il} = x_{il} x_{jk}
        vec![(Laurent::one(), g, y)]
    } else {
        // x_{jl} x_{ik} = x_{ik} x_{jl} + (q - q^-1) x_{il} x_{jk}
        vec![
            (Laurent::one(), g, y),
            (Laurent::q_minus_q_inv(), Gen { row: g.row, col: y.col }, Gen { row: y.row, col: g.col }),
        ]
    }
}

type Expansion = Rc<Vec<(Word, Laurent)>>;

#[derive(Default)]
struct Caches {
    append: HashMap<(Word, Gen), Expansion>,
    minors: HashMap<(Vec<usize>, Vec<usize>), QElement>,
}

/// Straightening engine for `M_q(n)`.
///
/// Holds only memo tables for pure functions, so results never depend on
/// call history. Not `Sync`; parallel callers build one engine per worker.
pub struct Engine {
    limits: Limits,
    caches: RefCell<Caches>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(Limits::DESK)
    }
}

const APPEND_CACHE_CAP: usize = 4_000_000;

impl Engine {
    pub fn new(limits: Limits) -> Self {
        Engine { limits, caches: RefCell::new(Caches::default()) }
    }

    pub fn desk() -> Self {
        Engine::new(Limits::DESK)
    }

    pub fn unbounded() -> Self {
        Engine::new(Limits::UNBOUNDED)
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub(crate) fn check_minor_size(&self, d: usize) -> Result<()> {
        if d > self.limits.max_minor {
            return Err(Error::Guardrail(format!("minor of size {d} exceeds the limit {}", self.limits.max_minor)));
        }
        Ok(())
    }

    fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.limits.max_degree {
            return Err(Error::Guardrail(format!("word degree {d} exceeds the limit {}", self.limits.max_degree)));
        }
        Ok(())
    }

    /// Normal form of `coeff * word` in `M_q(n)`.
    pub fn straighten(&self, word: &[Gen], coeff: &Laurent, n: usize) -> Result<QElement> {
        self.straighten_with(word, coeff, n, Strategy::Insertion)
    }

    pub fn straighten_with(&self, word: &[Gen], coeff: &Laurent, n: usize, strategy: Strategy) -> Result<QElement> {
        for g in word {
            Gen::checked(g.row as usize, g.col as usize, n)?;
        }
        self.check_degree(word.len())?;
        let terms = match strategy {
            Strategy::Insertion => self.insert_all(word, coeff),
            Strategy::LeftmostRewrite => rewrite(word, coeff, true),
            Strategy::RightmostRewrite => rewrite(word, coeff, false),
        };
        Ok(QElement::from_normal_terms(n, terms))
    }

    fn insert_all(&self, word: &[Gen], coeff: &Laurent) -> BTreeMap<Word, Laurent> {
        let mut acc: BTreeMap<Word, Laurent> = BTreeMap::new();
        if coeff.is_zero() {
            return acc;
        }
        acc.insert(Vec::new(), coeff.clone());
        for &g in word {
            acc = self.times_gen(&acc, g);
        }
        acc
    }

    fn times_gen(&self, acc: &BTreeMap<Word, Laurent>, g: Gen) -> BTreeMap<Word, Laurent> {
        let mut next: BTreeMap<Word, Laurent> = BTreeMap::new();
        for (w, c) in acc {
            let exp = self.append(w, g);
            for (w2, c2) in exp.iter() {
                accumulate(&mut next, w2.clone(), &(c * c2));
            }
        }
        next
    }

    /// Normal form of `w * g` for a normal word `w`.
    fn append(&self, w: &[Gen], g: Gen) -> Expansion {
        if w.last().is_none_or(|&y| y <= g) {
            let mut out = w.to_vec();
            out.push(g);
            return Rc::new(vec![(out, Laurent::one())]);
        }
        let key = (w.to_vec(), g);
        if let Some(hit) = self.caches.borrow().append.get(&key) {
            return hit.clone();
        }
        let (prefix, y) = (&w[..w.len() - 1], w[w.len() - 1]);
        let mut out: BTreeMap<Word, Laurent> = BTreeMap::new();
        for (c, a, b) in exchange(y, g) {
            let first = self.append(prefix, a);
            for (w1, c1) in first.iter() {
                let second = self.append(w1, b);
                let c01 = &c * c1;
                for (w2, c2) in second.iter() {
                    accumulate(&mut out, w2.clone(), &(&c01 * c2));
                }
            }
        }
        let result: Expansion = Rc::new(out.into_iter().collect());
        let mut caches = self.caches.borrow_mut();
        if caches.append.len() >= APPEND_CACHE_CAP {
            caches.append.clear();
        }
        caches.append.insert(key, result.clone());
        result
    }

    /// `a * b` in normal form.
    pub fn mul(&self, a: &QElement, b: &QElement) -> Result<QElement> {
        if a.n != b.n {
            return Err(Error::AmbientMismatch { left: a.n, right: b.n });
        }
        let max_a = a.terms.keys().map(Vec::len).max().unwrap_or(0);
        let max_b = b.terms.keys().map(Vec::len).max().unwrap_or(0);
        self.check_degree(max_a + max_b)?;
        let mut out: BTreeMap<Word, Laurent> = BTreeMap::new();
        for (wb, cb) in &b.terms {
            let mut acc: BTreeMap<Word, Laurent> = a.terms.iter().map(|(w, c)| (w.clone(), c * cb)).collect();
            for &g in wb {
                acc = self.times_gen(&acc, g);
            }
            for (w, c) in acc {
                accumulate(&mut out, w, &c);
            }
        }
        Ok(QElement::from_normal_terms(a.n, out))
    }

    /// Product of several elements, left to right.
    pub fn product(&self, factors: &[&QElement], n: usize) -> Result<QElement> {
        let mut acc = QElement::one(n);
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// `det_q X_{R,C}` for increasing row and column sets of equal size,
    /// expanded over row permutations: `Σ_σ (-q)^{-ℓ(σ)} x_{r_σ(1) c_1} ... x_{r_σ(d) c_d}`.
    pub fn det_sets(&self, rows: &IndexSet, cols: &IndexSet, n: usize) -> Result<QElement> {
        if rows.len() != cols.len() {
            return Err(Error::Precondition(format!(
                "non-square submatrix: {} rows, {} columns",
                rows.len(),
                cols.len()
            )));
        }
        self.check_minor_size(rows.len())?;
        for x in rows.iter().chain(cols.iter()) {
            if x == 0 || x > n {
                return Err(Error::OutOfRange { index: x, ambient: n });
            }
        }
        let key = (rows.to_vec(), cols.to_vec());
        // normal forms do not depend on n, so hits are re-embedded
        if let Some(hit) = self.caches.borrow().minors.get(&key) {
            return hit.embed(n);
        }
        let mut out = QElement::zero(n);
        let cols_v = cols.to_vec();
        for perm in permutations(rows.len()) {
            let sign = Laurent::neg_q_pow(-(inversions(&perm).expect("permutation") as i32));
            let word: Word = perm.iter().zip(&cols_v).map(|(&p, &c)| Gen::new(rows.as_slice()[p - 1], c)).collect();
            let nf = self.straighten(&word, &sign, n)?;
            out.add_scaled(&nf, &Laurent::one())?;
        }
        self.caches.borrow_mut().minors.insert(key, out.clone());
        Ok(out)
    }

    /// `det_q X_{I,C}` for a row tuple `I`: zero on repeated rows, otherwise
    /// `(-q)^{-ℓ(I)}` times the determinant with sorted rows.
    pub fn det_tuple(&self, rows: &IndexTuple, cols: &IndexSet, n: usize) -> Result<QElement> {
        if !rows.is_distinct() {
            if rows.len() != cols.len() {
                return Err(Error::Precondition("non-square submatrix".into()));
            }
            return Ok(QElement::zero(n));
        }
        let sorted = rows.to_set();
        let base = self.det_sets(&sorted, cols, n)?;
        let len = rows.length()? as i32;
        Ok(base.scale(&Laurent::neg_q_pow(-len)))
    }

    /// The quantum minor `[I]` with columns `1..|I|`.
    pub fn minor(&self, rows: &IndexSet, n: usize) -> Result<QElement> {
        self.det_sets(rows, &IndexSet::range(rows.len()), n)
    }

    /// The quantum minor `[I]` for a row tuple.
    pub fn minor_tuple(&self, rows: &IndexTuple, n: usize) -> Result<QElement> {
        self.det_tuple(rows, &IndexSet::range(rows.len()), n)
    }

    /// Determinant of `X_{I,C}` for a row tuple expanded over column
    /// permutations, `Σ_σ (-q)^{-ℓ(σ)} a_{1,σ(1)} ... a_{d,σ(d)}`, with no
    /// sorting or sign normalisation of the rows. Used as an independent
    /// route to the row-permutation expansion.
    pub fn det_column_expansion(&self, rows: &IndexTuple, cols: &IndexSet, n: usize) -> Result<QElement> {
        if rows.len() != cols.len() {
            return Err(Error::Precondition("non-square submatrix".into()));
        }
        self.check_minor_size(rows.len())?;
        let mut out = QElement::zero(n);
        for perm in permutations(rows.len()) {
            let sign = Laurent::neg_q_pow(-(inversions(&perm).expect("permutation") as i32));
            let word: Word = rows
                .entries()
                .iter()
                .zip(&perm)
                .map(|(&r, &p)| Gen::checked(r, cols.as_slice()[p - 1], n))
                .collect::<Result<_>>()?;
            let nf = self.straighten(&word, &sign, n)?;
            out.add_scaled(&nf, &Laurent::one())?;
        }
        Ok(out)
    }
}

fn accumulate(map: &mut BTreeMap<Word, Laurent>, w: Word, c: &Laurent) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(w) {
        Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Exhaustive rewriting at the leftmost or rightmost descent, with no memo.
fn rewrite(word: &[Gen], coeff: &Laurent, leftmost: bool) -> BTreeMap<Word, Laurent> {
    let mut done: BTreeMap<Word, Laurent> = BTreeMap::new();
    let mut pending: BTreeMap<Word, Laurent> = BTreeMap::new();
    accumulate(&mut pending, word.to_vec(), coeff);
    while let Some((w, c)) = pending.pop_first() {
        if is_normal(&w) {
            accumulate(&mut done, w, &c);
            continue;
        }
        let mut descents = (0..w.len() - 1).filter(|&k| w[k] > w[k + 1]);
        let k = if leftmost { descents.next() } else { descents.next_back() }.expect("non-normal word has a descent");
        for (x, a, b) in exchange(w[k], w[k + 1]) {
            let mut w2 = w.clone();
            w2[k] = a;
            w2[k + 1] = b;
            accumulate(&mut pending, w2, &(&c * &x));
        }
    }
    done
}

/// All permutations of `1..=d` as one-line tuples, in lexicographic order.
pub(crate) fn permutations(d: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                cur.push(k + 1);
                rec(cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(d), &mut vec![false; d], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn x(r: usize, c: usize) -> Gen {
        Gen::new(r, c)
    }

    fn single(n: usize, w: Word, c: Laurent) -> QElement {
        let mut e = QElement::zero(n);
        e.add_term(w, &c);
        e
    }

    #[test]
    fn same_row_relation() {
        let e = Engine::desk();
        let got = e.straighten(&[x(1, 2), x(1, 1)], &Laurent::one(), 2).unwrap();
        assert_eq!(got, single(2, vec![x(1, 1), x(1, 2)], Laurent::q()));
    }

    #[test]
    fn antidiagonal_commutes() {
        let e = Engine::desk();
        let got = e.straighten(&[x(2, 1), x(1, 2)], &Laurent::one(), 2).unwrap();
        assert_eq!(got, single(2, vec![x(1, 2), x(2, 1)], Laurent::one()));
    }

    #[test]
    fn diagonal_relation() {
        let e = Engine::desk();
        let got = e.straighten(&[x(2, 2), x(1, 1)], &Laurent::one(), 2).unwrap();
        let mut want = single(2, vec![x(1, 1), x(2, 2)], Laurent::one());
        want.add_term(vec![x(1, 2), x(2, 1)], &Laurent::q_minus_q_inv());
        assert_eq!(got, want);
    }

    #[test]
    fn out_of_range_generator() {
        let e = Engine::desk();
        assert!(matches!(
            e.straighten(&[x(3, 1)], &Laurent::one(), 2),
            Err(Error::OutOfRange { index: 3, ambient: 2 })
        ));
    }

    #[test]
    fn degree_guardrail() {
        let e = Engine::desk();
        let w = vec![x(1, 1); 13];
        assert!(matches!(e.straighten(&w, &Laurent::one(), 2), Err(Error::Guardrail(_))));
        assert!(Engine::unbounded().straighten(&w, &Laurent::one(), 2).is_ok());
    }

    #[test]
    fn mul_unit_and_column_relation() {
        let e = Engine::desk();
        let x11 = QElement::generator(2, 1, 1).unwrap();
        let x21 = QElement::generator(2, 2, 1).unwrap();
        assert_eq!(e.mul(&x11, &QElement::one(2)).unwrap(), x11);
        assert_eq!(e.mul(&x21, &x11).unwrap(), single(2, vec![x(1, 1), x(2, 1)], Laurent::q()));
        let other = QElement::generator(3, 1, 1).unwrap();
        assert!(matches!(e.mul(&x11, &other), Err(Error::AmbientMismatch { .. })));
    }

    #[test]
    fn determinant_is_central_in_2x2() {
        // (x11 x22 - q^-1 x12 x21) x11 == x11 (x11 x22 - q^-1 x12 x21),
        // both sides straightened by the naive rewriter.
        let n = 2;
        let lhs_words = [
            (vec![x(1, 1), x(2, 2), x(1, 1)], Laurent::one()),
            (vec![x(1, 2), x(2, 1), x(1, 1)], Laurent::monomial(-1, -1)),
        ];
        let rhs_words = [
            (vec![x(1, 1), x(1, 1), x(2, 2)], Laurent::one()),
            (vec![x(1, 1), x(1, 2), x(2, 1)], Laurent::monomial(-1, -1)),
        ];
        let sum = |ws: &[(Word, Laurent)]| {
            let mut acc = QElement::zero(n);
            for (w, c) in ws {
                let t = QElement::from_normal_terms(n, rewrite(w, c, true));
                acc = &acc + &t;
            }
            acc
        };
        assert_eq!(sum(&lhs_words), sum(&rhs_words));

        let e = Engine::desk();
        let det = e.minor(&IndexSet::from([1, 2]), n).unwrap();
        let x11 = QElement::generator(n, 1, 1).unwrap();
        assert_eq!(e.mul(&det, &x11).unwrap(), sum(&lhs_words));
        assert_eq!(e.mul(&det, &x11).unwrap(), e.mul(&x11, &det).unwrap());
    }

    #[test]
    fn reduction_orders_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let e = Engine::desk();
        for _ in 0..200 {
            let len = rng.gen_range(0..=6);
            let w: Word = (0..len).map(|_| x(rng.gen_range(1..=4), rng.gen_range(1..=4))).collect();
            let a = e.straighten_with(&w, &Laurent::one(), 4, Strategy::Insertion).unwrap();
            let b = e.straighten_with(&w, &Laurent::one(), 4, Strategy::LeftmostRewrite).unwrap();
            let c = e.straighten_with(&w, &Laurent::one(), 4, Strategy::RightmostRewrite).unwrap();
            assert_eq!(a, b, "{w:?}");
            assert_eq!(a, c, "{w:?}");
        }
    }

    #[test]
    fn mul_is_associative_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let e = Engine::desk();
        let n = 3;
        let rand_elem = |rng: &mut ChaCha8Rng| {
            let mut acc = QElement::zero(n);
            for _ in 0..3 {
                let len = rng.gen_range(0..=2);
                let w: Word = (0..len).map(|_| x(rng.gen_range(1..=n), rng.gen_range(1..=n))).collect();
                let c = Laurent::monomial(rng.gen_range(-2i64..=2), rng.gen_range(-2..=2));
                acc = &acc + &e.straighten(&w, &c, n).unwrap();
            }
            acc
        };
        for _ in 0..40 {
            let (a, b, c) = (rand_elem(&mut rng), rand_elem(&mut rng), rand_elem(&mut rng));
            let left = e.mul(&e.mul(&a, &b).unwrap(), &c).unwrap();
            let right = e.mul(&a, &e.mul(&b, &c).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn permutation_listing() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
        assert_eq!(permutations(2), vec![vec![1, 2], vec![2, 1]]);
    }
}
