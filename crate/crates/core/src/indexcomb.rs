//! Index sets and tuples over `[n] = {1, ..., n}`, inversion statistics, and
//! the `surrounds` relation between index sets.
//!
//! All indices are 1-based. Sets are stored sorted and duplicate free; tuples
//! keep their order.

use std::fmt;

use crate::error::{precondition, Error, Result};

/// A subset of `[n]`, stored as a strictly increasing sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Sorts and deduplicates.
    pub fn new(items: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = items.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    /// `[n]`.
    pub fn range(n: usize) -> Self {
        Self((1..=n).collect())
    }

    pub fn singleton(i: usize) -> Self {
        Self(vec![i])
    }

    /// Parses a comma separated list such as `"1,5,6"`; the empty string is
    /// the empty set. Repeats are rejected.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Self::empty());
        }
        let mut v = Vec::new();
        for part in t.split(',') {
            let x: usize = part.trim().parse().map_err(|_| Error::Precondition(format!("malformed index {part:?}")))?;
            if x == 0 {
                return precondition("indices are 1-based");
            }
            v.push(x);
        }
        let set = Self::new(v.iter().copied());
        if set.len() != v.len() {
            return precondition(format!("repeated index in {s:?}"));
        }
        Ok(set)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.clone()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        IndexSet::new(self.iter().chain(other.iter()))
    }

    pub fn difference(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.iter().filter(|x| !other.contains(*x)).collect())
    }

    pub fn intersection(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.iter().filter(|x| other.contains(*x)).collect())
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.iter().all(|x| !other.contains(x))
    }

    pub fn with(&self, i: usize) -> IndexSet {
        IndexSet::new(self.iter().chain(std::iter::once(i)))
    }

    pub fn without(&self, i: usize) -> IndexSet {
        IndexSet(self.iter().filter(|&x| x != i).collect())
    }

    pub fn as_tuple(&self) -> IndexTuple {
        IndexTuple::unchecked(self.0.clone())
    }

    /// All subsets, ordered by size then lexicographically.
    pub fn subsets(&self) -> Vec<IndexSet> {
        let mut out: Vec<IndexSet> = (0..=self.len()).flat_map(|k| self.subsets_of_size(k)).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// All subsets with exactly `k` elements, in lexicographic order.
    pub fn subsets_of_size(&self, k: usize) -> Vec<IndexSet> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(k);
        fn rec(items: &[usize], k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
            if current.len() == k {
                out.push(IndexSet(current.clone()));
                return;
            }
            let need = k - current.len();
            for idx in start..items.len() {
                if items.len() - idx < need {
                    break;
                }
                current.push(items[idx]);
                rec(items, k, idx + 1, current, out);
                current.pop();
            }
        }
        if k <= self.len() {
            rec(&self.0, k, 0, &mut current, &mut out);
        }
        out
    }

    /// Compact label: `"156"` for `{1,5,6}` when every entry is a single
    /// digit, `"1,12"` otherwise, and `"∅"` for the empty set.
    pub fn label(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        if self.iter().all(|x| x < 10) {
            self.iter().map(|x| x.to_string()).collect()
        } else {
            self.csv()
        }
    }

    /// `"1,5,6"`; empty string for the empty set.
    pub fn csv(&self) -> String {
        self.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.csv())
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        IndexSet::new(iter)
    }
}

impl<const N: usize> From<[usize; N]> for IndexSet {
    fn from(a: [usize; N]) -> Self {
        IndexSet::new(a)
    }
}

/// An element of `[n]^d`: an ordered tuple of indices, possibly with repeats.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexTuple {
    entries: Vec<usize>,
    ambient: usize,
    distinct: bool,
}

impl IndexTuple {
    /// Validates that every entry lies in `[ambient]`.
    pub fn new(entries: Vec<usize>, ambient: usize) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&x| x == 0 || x > ambient) {
            return Err(Error::OutOfRange { index: bad, ambient });
        }
        Ok(Self::with_ambient(entries, ambient))
    }

    /// A tuple whose ambient bound is its own largest entry.
    pub fn unchecked(entries: Vec<usize>) -> Self {
        let ambient = entries.iter().copied().max().unwrap_or(0);
        Self::with_ambient(entries, ambient)
    }

    fn with_ambient(entries: Vec<usize>, ambient: usize) -> Self {
        let distinct = first_repeat(&entries).is_none();
        Self { entries, ambient, distinct }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Membership in `[n]^d_*`.
    pub fn is_distinct(&self) -> bool {
        self.distinct
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of inversions; errors on repeated entries.
    pub fn length(&self) -> Result<usize> {
        inversions(&self.entries)
    }

    pub fn pos(&self, i: usize) -> Result<usize> {
        pos(&self.entries, i)
    }

    pub fn to_set(&self) -> IndexSet {
        IndexSet::new(self.entries.iter().copied())
    }

    /// `I^{I'}`: removes every occurrence of the entries of `removed`.
    pub fn delete(&self, removed: &IndexSet) -> Result<IndexTuple> {
        if let Some(x) = removed.iter().find(|x| !self.entries.contains(x)) {
            return Err(Error::Absent(x));
        }
        Ok(Self::with_ambient(self.entries.iter().copied().filter(|x| !removed.contains(*x)).collect(), self.ambient))
    }

    /// `I_{(Λ)}`: keeps the entries at the given 1-based positions, in order.
    pub fn keep_positions(&self, positions: &IndexSet) -> Result<IndexTuple> {
        self.check_positions(positions)?;
        Ok(Self::with_ambient(positions.iter().map(|p| self.entries[p - 1]).collect(), self.ambient))
    }

    /// `I^{(Λ)}`: drops the entries at the given 1-based positions.
    pub fn delete_positions(&self, positions: &IndexSet) -> Result<IndexTuple> {
        self.check_positions(positions)?;
        Ok(Self::with_ambient(
            self.entries.iter().enumerate().filter(|(k, _)| !positions.contains(k + 1)).map(|(_, &x)| x).collect(),
            self.ambient,
        ))
    }

    fn check_positions(&self, positions: &IndexSet) -> Result<()> {
        match positions.iter().find(|&p| p == 0 || p > self.len()) {
            Some(p) => Err(Error::PositionOutOfRange { position: p, len: self.len() }),
            None => Ok(()),
        }
    }

    /// `A|B`.
    pub fn concat(&self, other: &IndexTuple) -> IndexTuple {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Self::with_ambient(entries, self.ambient.max(other.ambient))
    }
}

impl fmt::Debug for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl From<&IndexSet> for IndexTuple {
    fn from(s: &IndexSet) -> Self {
        s.as_tuple()
    }
}

fn first_repeat(entries: &[usize]) -> Option<usize> {
    for (k, x) in entries.iter().enumerate() {
        if entries[..k].contains(x) {
            return Some(*x);
        }
    }
    None
}

/// `ℓ(I) = #{(j, k) : j < k, i_j > i_k}` for a tuple with distinct entries.
pub fn inversions(entries: &[usize]) -> Result<usize> {
    if let Some(x) = first_repeat(entries) {
        return Err(Error::RepeatedEntry(x));
    }
    let mut count = 0;
    for (k, a) in entries.iter().enumerate() {
        count += entries[k + 1..].iter().filter(|b| a > b).count();
    }
    Ok(count)
}

/// `ℓ(A|B)`-style cross count `#{(a, b) ∈ A × B : a > b}`.
pub fn cross_inversions(a: &[usize], b: &[usize]) -> usize {
    a.iter().map(|x| b.iter().filter(|y| x > y).count()).sum()
}

/// 1-based position of `i` in `entries`; `i` must occur exactly once.
pub fn pos(entries: &[usize], i: usize) -> Result<usize> {
    let mut found = None;
    for (k, &x) in entries.iter().enumerate() {
        if x == i {
            if found.is_some() {
                return Err(Error::RepeatedEntry(i));
            }
            found = Some(k + 1);
        }
    }
    found.ok_or(Error::Absent(i))
}

/// Witness that `J` surrounds `I`: `J \ I` splits into a part below every
/// element of `I \ J` and a part above.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurroundsWitness {
    pub jprime: IndexSet,
    pub jprimeprime: IndexSet,
    /// `|J''| - |J'|`.
    pub exponent: i32,
}

impl SurroundsWitness {
    /// Builds a witness from an explicit split, without reference to any `I`.
    pub fn from_split(jprime: IndexSet, jprimeprime: IndexSet) -> Result<Self> {
        if !jprime.is_disjoint(&jprimeprime) {
            return precondition("J' and J'' must be disjoint");
        }
        let exponent = jprimeprime.len() as i32 - jprime.len() as i32;
        Ok(Self { jprime, jprimeprime, exponent })
    }

    /// The split of `j` in which `jprime` is the lower part.
    pub fn split_of(j: &IndexSet, jprime: &IndexSet) -> Result<Self> {
        if !jprime.is_subset(j) {
            return precondition(format!("J' = {jprime:?} is not a subset of J = {j:?}"));
        }
        Self::from_split(jprime.clone(), j.difference(jprime))
    }
}

/// Decides whether `J` surrounds `I` and returns the (unique) witness.
pub fn surrounds(j: &IndexSet, i: &IndexSet) -> Option<SurroundsWitness> {
    if j.len() > i.len() {
        return None;
    }
    let j_minus_i = j.difference(i);
    let i_minus_j = i.difference(j);
    if j_minus_i.is_empty() {
        return Some(SurroundsWitness { jprime: IndexSet::empty(), jprimeprime: IndexSet::empty(), exponent: 0 });
    }
    // |J| <= |I| and J \ I nonempty force I \ J nonempty.
    let lo = i_minus_j.first()?;
    let hi = i_minus_j.last()?;
    let jprime: IndexSet = j_minus_i.iter().filter(|&x| x < lo).collect();
    let jprimeprime: IndexSet = j_minus_i.iter().filter(|&x| x > hi).collect();
    if jprime.len() + jprimeprime.len() != j_minus_i.len() {
        return None;
    }
    let exponent = jprimeprime.len() as i32 - jprime.len() as i32;
    Some(SurroundsWitness { jprime, jprimeprime, exponent })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s<const N: usize>(a: [usize; N]) -> IndexSet {
        IndexSet::from(a)
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(inversions(&[2, 1, 3]), Ok(1));
        assert_eq!(inversions(&[1, 2, 3, 4]), Ok(0));
        assert_eq!(inversions(&[3, 2, 1]), Ok(3));
        assert_eq!(inversions(&[1, 2, 1]), Err(Error::RepeatedEntry(1)));
    }

    #[test]
    fn cross_counts() {
        assert_eq!(cross_inversions(&[1], &[2, 3]), 0);
        assert_eq!(cross_inversions(&[5, 6], &[1]), 2);
        assert_eq!(cross_inversions(&[4], &[2, 3]), 2);
        let i = [2, 5, 7, 9];
        for (k, &x) in i.iter().enumerate() {
            let rest: Vec<usize> = i.iter().copied().filter(|&y| y != x).collect();
            assert_eq!(cross_inversions(&[x], &rest), k);
        }
    }

    #[test]
    fn positions() {
        assert_eq!(pos(&[2, 5, 7], 5), Ok(2));
        assert_eq!(pos(&[2, 5, 7], 2), Ok(1));
        assert_eq!(pos(&[2, 5, 7], 4), Err(Error::Absent(4)));
        assert_eq!(pos(&[2, 5, 2], 2), Err(Error::RepeatedEntry(2)));
    }

    #[test]
    fn tuple_operations() {
        let t = IndexTuple::new(vec![2, 5, 7], 7).unwrap();
        assert_eq!(t.delete(&s([5])).unwrap().entries(), &[2, 7]);
        assert_eq!(t.keep_positions(&s([1, 3])).unwrap().entries(), &[2, 7]);
        assert_eq!(t.delete_positions(&s([1, 3])).unwrap().entries(), &[5]);
        assert!(matches!(t.keep_positions(&s([4])), Err(Error::PositionOutOfRange { position: 4, len: 3 })));
        assert_eq!(t.delete(&s([4])), Err(Error::Absent(4)));
        let a = IndexTuple::new(vec![1], 3).unwrap();
        let b = IndexTuple::new(vec![2, 3], 3).unwrap();
        assert_eq!(a.concat(&b).entries(), &[1, 2, 3]);
        assert!(IndexTuple::new(vec![1, 4], 3).is_err());
        assert!(!IndexTuple::new(vec![1, 1], 3).unwrap().is_distinct());
    }

    #[test]
    fn surrounds_examples() {
        let w = surrounds(&s([1]), &s([2, 3, 4])).unwrap();
        assert_eq!(w.jprime, s([1]));
        assert!(w.jprimeprime.is_empty());
        assert_eq!(w.exponent, -1);

        let w = surrounds(&s([2, 4]), &s([2, 4])).unwrap();
        assert_eq!(w.exponent, 0);
        assert!(w.jprime.is_empty() && w.jprimeprime.is_empty());

        assert_eq!(surrounds(&s([2, 3]), &s([1, 4])), None);
        assert_eq!(surrounds(&s([1, 2, 3]), &s([4, 5])), None);

        let w = surrounds(&s([1, 4]), &s([2, 3])).unwrap();
        assert_eq!((w.jprime, w.jprimeprime, w.exponent), (s([1]), s([4]), 0));
    }

    /// Enumerates every partition of `J \ I` into two parts and checks the
    /// three defining conditions literally.
    fn surrounds_by_enumeration(j: &IndexSet, i: &IndexSet) -> Vec<(IndexSet, IndexSet)> {
        if j.len() > i.len() {
            return vec![];
        }
        let jm = j.difference(i);
        let im = i.difference(j);
        jm.subsets()
            .into_iter()
            .map(|jp| {
                let jpp = jm.difference(&jp);
                (jp, jpp)
            })
            .filter(|(jp, jpp)| {
                jp.iter().all(|a| im.iter().all(|x| a < x)) && jpp.iter().all(|b| im.iter().all(|x| x < b))
            })
            .collect()
    }

    #[test]
    fn forced_witness_agrees_with_enumeration() {
        let all = IndexSet::range(6).subsets();
        for j in &all {
            for i in &all {
                let brute = surrounds_by_enumeration(j, i);
                assert!(brute.len() <= 1, "witness not unique for {j:?} {i:?}");
                match surrounds(j, i) {
                    Some(w) => {
                        assert_eq!(brute, vec![(w.jprime.clone(), w.jprimeprime.clone())]);
                        assert_eq!(w.exponent, w.jprimeprime.len() as i32 - w.jprime.len() as i32);
                    }
                    None => assert!(brute.is_empty(), "{j:?} {i:?}"),
                }
            }
        }
    }

    #[test]
    fn inversion_identities() {
        let all = IndexSet::range(6).subsets();
        for a in &all {
            for b in &all {
                if !a.is_disjoint(b) {
                    continue;
                }
                let (x, y) = (a.as_slice(), b.as_slice());
                assert_eq!(cross_inversions(x, y) + cross_inversions(y, x), a.len() * b.len());
                let cat = a.as_tuple().concat(&b.as_tuple());
                assert_eq!(cat.length().unwrap(), cross_inversions(x, y));
            }
        }
    }

    #[test]
    fn parse_and_label() {
        assert_eq!(IndexSet::parse("1,5,6").unwrap(), s([1, 5, 6]));
        assert_eq!(IndexSet::parse("").unwrap(), IndexSet::empty());
        assert!(IndexSet::parse("1,,2").is_err());
        assert!(IndexSet::parse("0").is_err());
        assert!(IndexSet::parse("2,2").is_err());
        assert_eq!(s([1, 5, 6]).label(), "156");
        assert_eq!(s([1, 12]).label(), "1,12");
        assert_eq!(IndexSet::empty().label(), "∅");
    }

    #[test]
    fn subset_enumeration() {
        let j = s([1, 5, 6]);
        assert_eq!(j.subsets().len(), 8);
        assert_eq!(j.subsets_of_size(2), vec![s([1, 5]), s([1, 6]), s([5, 6])]);
        assert!(j.subsets_of_size(4).is_empty());
        assert_eq!(j.subsets_of_size(0), vec![IndexSet::empty()]);
    }
}
