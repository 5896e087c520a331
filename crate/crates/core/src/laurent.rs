//! Exact arithmetic in the Laurent polynomial ring `Z[q, q^-1]`.
//!
//! A [`Laurent`] is a finite map from exponents of `q` to nonzero
//! arbitrary-precision integers. Every constructor and operation returns the
//! canonical form (no zero coefficients), so structural equality is ring
//! equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An element of `Z[q, q^-1]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: BTreeMap<i32, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * q^e`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i32) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// `q^e`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(1, exp)
    }

    /// `(-q)^e = (-1)^e q^e`.
    pub fn neg_q_pow(exp: i32) -> Self {
        let sign = if exp.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(sign, exp)
    }

    /// `q - q^-1`, the coefficient of the diagonal exchange relation.
    pub fn q_minus_q_inv() -> Self {
        Self::from_terms([(1, 1), (-1, -1)])
    }

    /// Builds a scalar from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i32, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, &c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// `Some((c, e))` when `self == c * q^e` with `c != 0`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i32)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(e, c)| (c, *e))
    }

    /// `Some((sign, e))` when `self == sign * q^e` with `sign = ±1`.
    pub fn as_signed_q_power(&self) -> Option<(i8, i32)> {
        let (c, e) = self.as_monomial()?;
        if c.is_one() {
            Some((1, e))
        } else if (-c).is_one() {
            Some((-1, e))
        } else {
            None
        }
    }

    /// `Some(e)` when `self == (-q)^e`.
    pub fn as_neg_q_power(&self) -> Option<i32> {
        let (sign, e) = self.as_signed_q_power()?;
        let expected = if e.rem_euclid(2) == 0 { 1 } else { -1 };
        (sign == expected).then_some(e)
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, exp: i32) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + exp, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Exact quotient by a unit `±q^e`; `None` if `divisor` is not a unit.
    pub fn div_unit(&self, divisor: &Laurent) -> Option<Self> {
        let (sign, e) = divisor.as_signed_q_power()?;
        let out = self.shift(-e);
        Some(if sign < 0 { -out } else { out })
    }

    /// If `self == q^a * other` for a single integer `a`, returns `a`.
    /// Zero is proportional to zero with every exponent; that case returns
    /// `Some(0)`.
    pub fn q_shift_between(&self, other: &Laurent) -> Option<i32> {
        match (self.min_exp(), other.min_exp()) {
            (None, None) => Some(0),
            (Some(a), Some(b)) => {
                let d = a - b;
                (other.shift(d) == *self).then_some(d)
            }
            _ => None,
        }
    }

    fn add_term(&mut self, exp: i32, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn sub_term(&mut self, exp: i32, coeff: &BigInt) {
        self.add_term(exp, &-coeff);
    }

    /// `self += a * b` without materialising the product.
    pub fn add_mul(&mut self, a: &Laurent, b: &Laurent) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                self.add_term(ea + eb, &(ca * cb));
            }
        }
    }

    /// Renders the polynomial in the compact form used by the CLI, e.g.
    /// `q^2 - 1`, `-q^-3`, `2*q + 1`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = abs.is_one();
            match (*e, unit) {
                (0, _) => out.push_str(&abs.to_string()),
                (1, true) => out.push('q'),
                (1, false) => out.push_str(&format!("{abs}*q")),
                (e, true) => out.push_str(&format!("q^{e}")),
                (e, false) => out.push_str(&format!("{abs}*q^{e}")),
            }
        }
        out
    }

    /// Whether rendering needs parentheses when used as a coefficient.
    pub(crate) fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({})", self.render())
    }
}

impl From<i64> for Laurent {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: &Laurent) {
        for (e, c) in &rhs.terms {
            self.sub_term(*e, c);
        }
    }
}

impl Add<&Laurent> for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Laurent> for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Laurent> for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        out.add_mul(self, rhs);
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Laurent> for Laurent {
            type Output = Laurent;
            fn $m(self, rhs: Laurent) -> Laurent {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Laurent> for Laurent {
            type Output = Laurent;
            fn $m(self, rhs: &Laurent) -> Laurent {
                (&self).$m(rhs)
            }
        }
        impl $tr<Laurent> for &Laurent {
            type Output = Laurent;
            fn $m(self, rhs: Laurent) -> Laurent {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -&self
    }
}

impl AddAssign<Laurent> for Laurent {
    fn add_assign(&mut self, rhs: Laurent) {
        *self += &rhs;
    }
}

impl SubAssign<Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: Laurent) {
        *self -= &rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> Laurent {
        Laurent::q()
    }

    #[test]
    fn distributes_over_terms() {
        let lhs = Laurent::q_minus_q_inv() * q();
        assert_eq!(lhs, Laurent::from_terms([(2, 1), (0, -1)]));
    }

    #[test]
    fn cancellation_leaves_empty_map() {
        let s = Laurent::q_pow(-1) + Laurent::monomial(-1, -1);
        assert!(s.is_zero());
        assert_eq!(s.num_terms(), 0);
    }

    #[test]
    fn difference_of_squares() {
        let a = Laurent::one() + q();
        let b = Laurent::one() - q();
        assert_eq!(a * b, Laurent::from_terms([(0, 1), (2, -1)]));
    }

    #[test]
    fn signed_powers() {
        assert_eq!(Laurent::neg_q_pow(1), Laurent::monomial(-1, 1));
        assert_eq!(Laurent::neg_q_pow(-2), Laurent::q_pow(-2));
        assert_eq!(Laurent::neg_q_pow(-3), Laurent::monomial(-1, -3));
        assert!(Laurent::neg_q_pow(0).is_one());
    }

    #[test]
    fn rendering() {
        assert_eq!(Laurent::zero().render(), "0");
        assert_eq!(Laurent::from_terms([(2, 1), (0, -1)]).render(), "q^2 - 1");
        assert_eq!(Laurent::q_minus_q_inv().render(), "q - q^-1");
        assert_eq!(Laurent::monomial(-1, -3).render(), "-q^-3");
        assert_eq!(Laurent::from_terms([(1, 2), (0, 1)]).render(), "2*q + 1");
        assert_eq!(Laurent::monomial(-5, 0).render(), "-5");
    }

    #[test]
    fn shift_detection() {
        let a = Laurent::from_terms([(3, 2), (1, -1)]);
        assert_eq!(a.shift(-4).q_shift_between(&a), Some(-4));
        assert_eq!(a.q_shift_between(&(&a + &Laurent::one())), None);
        assert_eq!(Laurent::neg_q_pow(-3).as_neg_q_power(), Some(-3));
        assert_eq!(Laurent::q_pow(-3).as_neg_q_power(), None);
    }

    #[test]
    fn coefficients_do_not_overflow() {
        // (1 + q)^200 has central binomial coefficients far above u64.
        let base = Laurent::one() + q();
        let mut acc = Laurent::one();
        for _ in 0..200 {
            acc = &acc * &base;
        }
        let mid = acc.coeff(100);
        assert!(mid.bits() > 190);
        assert_eq!(acc.num_terms(), 201);
    }

    #[test]
    fn neg_q_pow_is_a_homomorphism() {
        for a in -6..=6 {
            for b in -6..=6 {
                assert_eq!(Laurent::neg_q_pow(a) * Laurent::neg_q_pow(b), Laurent::neg_q_pow(a + b));
            }
        }
    }

    fn small_laurent() -> impl Strategy<Value = Laurent> {
        prop::collection::vec((-4i32..=4, -3i64..=3), 0..5).prop_map(Laurent::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_laurent(), b in small_laurent(), c in small_laurent()) {
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
            prop_assert!(!(&a * &b).terms().any(|(_, c)| c.is_zero()));
        }
    }
}
