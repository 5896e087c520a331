//! The quantum matrix algebra `M_q(n)`.
//!
//! Elements are kept in normal form: a linear combination of words in the
//! generators `x[a,b]` whose letters are non-decreasing in `(row, col)`
//! lexicographic order. The [`Engine`] rewrites arbitrary words into this
//! basis using the four q-generic exchange relations.

mod engine;
mod identities;
mod minors;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

pub use engine::{Engine, Limits, Strategy};
pub use identities::{
    centrality_check, cleared_plucker_check, cleared_plucker_residual, homological_check, homological_literal_residual,
    homological_residual, laplace_check, laplace_residual, qcommutator, qcommute_exponent, PluckerVariant,
};
pub use minors::{qplucker_coord, quasi_minor, MinorSpec, QuasiFraction};

use crate::error::{Error, Result};
use crate::laurent::Laurent;

/// The generator `x[row, col]` of `M_q(n)`, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    pub row: u8,
    pub col: u8,
}

impl Gen {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row <= u8::MAX as usize && col <= u8::MAX as usize);
        Gen { row: row as u8, col: col as u8 }
    }

    pub fn checked(row: usize, col: usize, n: usize) -> Result<Self> {
        for x in [row, col] {
            if x == 0 || x > n || x > u8::MAX as usize {
                return Err(Error::OutOfRange { index: x, ambient: n });
            }
        }
        Ok(Gen::new(row, col))
    }
}

impl fmt::Debug for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.row, self.col)
    }
}

pub type Word = Vec<Gen>;

pub fn is_normal(word: &[Gen]) -> bool {
    word.windows(2).all(|w| w[0] <= w[1])
}

fn render_word(word: &[Gen]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter().map(|g| format!("{g:?}")).collect()
}

/// A normal-form element of `M_q(n)`.
#[derive(Clone, PartialEq, Eq)]
pub struct QElement {
    n: usize,
    terms: BTreeMap<Word, Laurent>,
}

impl QElement {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, Laurent::one())
    }

    pub fn scalar(n: usize, c: Laurent) -> Self {
        let mut e = Self::zero(n);
        e.add_term(Vec::new(), &c);
        e
    }

    pub fn generator(n: usize, row: usize, col: usize) -> Result<Self> {
        let g = Gen::checked(row, col, n)?;
        let mut e = Self::zero(n);
        e.add_term(vec![g], &Laurent::one());
        Ok(e)
    }

    /// Builds an element from words that are already in normal order.
    pub(crate) fn from_normal_terms(n: usize, terms: BTreeMap<Word, Laurent>) -> Self {
        debug_assert!(terms.iter().all(|(w, c)| is_normal(w) && !c.is_zero()));
        Self { n, terms }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Laurent)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &[Gen]) -> Laurent {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, word: Word, c: &Laurent) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
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

    pub fn scale(&self, c: &Laurent) -> Self {
        let mut out = Self::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (w, x) in &self.terms {
            out.add_term(w.clone(), &(x * c));
        }
        out
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &QElement, c: &Laurent) -> Result<()> {
        self.check_ambient(other)?;
        for (w, x) in &other.terms {
            self.add_term(w.clone(), &(x * c));
        }
        Ok(())
    }

    fn check_ambient(&self, other: &QElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    /// Re-embeds the element into `M_q(m)` for `m >= n`.
    pub fn embed(&self, m: usize) -> Result<Self> {
        if let Some(bad) = self.terms.keys().flatten().map(|g| g.row.max(g.col) as usize).find(|&x| x > m) {
            return Err(Error::OutOfRange { index: bad, ambient: m });
        }
        Ok(Self { n: m, terms: self.terms.clone() })
    }

    /// `Some(a)` when `self == q^a * other`.
    pub fn q_proportionality(&self, other: &QElement) -> Option<i32> {
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let mut exp = None;
        for ((wa, ca), (wb, cb)) in self.terms.iter().zip(other.terms.iter()) {
            if wa != wb {
                return None;
            }
            let a = ca.q_shift_between(cb)?;
            match exp {
                None => exp = Some(a),
                Some(prev) if prev != a => return None,
                _ => {}
            }
        }
        Some(exp.unwrap_or(0))
    }

    /// Renders as e.g. `x[1,1]x[2,2] - q^-1*x[1,2]x[2,1]`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let (neg, body) = match c.as_monomial() {
                Some((x, _)) if x < &0.into() => (true, (-c).render()),
                _ => (false, c.render()),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let word = render_word(w);
            if c.is_compound() {
                out.push_str(&format!("({body})*{word}"));
            } else if body == "1" {
                out.push_str(&word);
            } else if w.is_empty() {
                out.push_str(&body);
            } else {
                out.push_str(&format!("{body}*{word}"));
            }
        }
        out
    }
}

impl fmt::Display for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QElement[n={}]({})", self.n, self.render())
    }
}

impl Add<&QElement> for &QElement {
    type Output = QElement;
    fn add(self, rhs: &QElement) -> QElement {
        assert_eq!(self.n, rhs.n, "ambient mismatch");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub<&QElement> for &QElement {
    type Output = QElement;
    fn sub(self, rhs: &QElement) -> QElement {
        assert_eq!(self.n, rhs.n, "ambient mismatch");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), &-c);
        }
        out
    }
}

impl Neg for &QElement {
    type Output = QElement;
    fn neg(self) -> QElement {
        self.scale(&Laurent::from(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        let n = 2;
        let mut e = QElement::zero(n);
        e.add_term(vec![Gen::new(1, 1), Gen::new(2, 2)], &Laurent::one());
        e.add_term(vec![Gen::new(1, 2), Gen::new(2, 1)], &Laurent::q_minus_q_inv());
        assert_eq!(e.render(), "x[1,1]x[2,2] + (q - q^-1)*x[1,2]x[2,1]");
        let mut f = QElement::zero(n);
        f.add_term(vec![Gen::new(1, 2), Gen::new(2, 1)], &Laurent::monomial(-1, -1));
        f.add_term(vec![], &Laurent::from(3));
        assert_eq!(f.render(), "3 - q^-1*x[1,2]x[2,1]");
        assert_eq!(QElement::zero(3).render(), "0");
    }

    #[test]
    fn generator_bounds() {
        assert!(QElement::generator(2, 3, 1).is_err());
        assert!(QElement::generator(2, 0, 1).is_err());
        assert!(QElement::generator(2, 2, 1).is_ok());
    }

    #[test]
    fn proportionality() {
        let x = QElement::generator(2, 1, 1).unwrap();
        let y = x.scale(&Laurent::q_pow(3));
        assert_eq!(y.q_proportionality(&x), Some(3));
        let z = &y + &QElement::generator(2, 2, 2).unwrap();
        assert_eq!(z.q_proportionality(&x), None);
        assert_eq!(x.scale(&Laurent::from(2)).q_proportionality(&x), None);
    }
}
