use std::fmt;

use super::{Engine, QElement};
use crate::error::{precondition, Error, Result};
use crate::indexcomb::{IndexSet, IndexTuple};
use crate::laurent::Laurent;

/// The quantum minor `[I; s]`: rows `I` (a tuple), columns `s+1 ..= s+|I|`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MinorSpec {
    rows: IndexTuple,
    col_offset: usize,
    ambient: usize,
}

impl MinorSpec {
    pub fn new(rows: Vec<usize>, col_offset: usize, ambient: usize) -> Result<Self> {
        let rows = IndexTuple::new(rows, ambient)?;
        if rows.is_empty() {
            return precondition("a minor needs at least one row");
        }
        if col_offset + rows.len() > ambient {
            return precondition(format!(
                "columns {}..={} exceed n = {ambient}",
                col_offset + 1,
                col_offset + rows.len()
            ));
        }
        Ok(Self { rows, col_offset, ambient })
    }

    /// `[I]` for a set `I`.
    pub fn of_set(rows: &IndexSet, ambient: usize) -> Result<Self> {
        Self::new(rows.to_vec(), 0, ambient)
    }

    pub fn rows(&self) -> &IndexTuple {
        &self.rows
    }

    pub fn col_offset(&self) -> usize {
        self.col_offset
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> IndexSet {
        IndexSet::new(self.col_offset + 1..=self.col_offset + self.size())
    }

    /// `(c, sorted rows)` with `[I; s] = c * [sorted I; s]`, or `None` when
    /// the rows repeat (the minor vanishes).
    pub fn normalized(&self) -> Option<(Laurent, IndexSet)> {
        let len = self.rows.length().ok()? as i32;
        Some((Laurent::neg_q_pow(-len), self.rows.to_set()))
    }

    /// Expands and straightens the minor.
    pub fn value(&self, engine: &Engine) -> Result<QElement> {
        engine.det_tuple(&self.rows, &self.cols(), self.ambient)
    }

    /// Renders as `[312;1]`, omitting `;s` when `s = 0`.
    pub fn render(&self) -> String {
        let digits = self.rows.entries().iter().all(|&x| x < 10);
        let body: String = if digits {
            self.rows.entries().iter().map(|x| x.to_string()).collect()
        } else {
            self.rows.entries().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        };
        if self.col_offset == 0 {
            format!("[{body}]")
        } else {
            format!("[{body};{}]", self.col_offset)
        }
    }
}

impl fmt::Debug for MinorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `(-q)^e * num * den^{-1}` where the two minors commute. `den = None`
/// stands for the empty minor `1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuasiFraction {
    pub neg_q_exp: i32,
    pub numerator: MinorSpec,
    pub denominator: Option<MinorSpec>,
}

impl QuasiFraction {
    /// Rewrites both minors with sorted rows: returns `(c, N, D)` with the
    /// fraction equal to `c * [N; s] * [D; s]^{-1}`, or `None` if the
    /// numerator vanishes. A vanishing denominator is an error.
    pub fn normalized(&self) -> Result<Option<(Laurent, IndexSet, IndexSet)>> {
        let mut scalar = Laurent::neg_q_pow(self.neg_q_exp);
        let den_rows = match &self.denominator {
            Some(d) => {
                let (c, rows) =
                    d.normalized().ok_or_else(|| Error::Invariant(format!("denominator {} vanishes", d.render())))?;
                scalar = scalar.div_unit(&c).expect("signed q-power is a unit");
                rows
            }
            None => IndexSet::empty(),
        };
        Ok(self.numerator.normalized().map(|(c, rows)| (&scalar * &c, rows, den_rows)))
    }

    /// Whether the fraction is literally `1`.
    pub fn is_one(&self) -> bool {
        match self.normalized() {
            Ok(Some((c, num, den))) => c.is_one() && num == den,
            _ => false,
        }
    }

    pub fn render(&self) -> String {
        let den = self.denominator.as_ref().map_or("1".to_string(), MinorSpec::render);
        format!("(-q)^{} {} {}^-1", self.neg_q_exp, self.numerator.render(), den)
    }
}

/// The quasi-minor `|X_{I, s+[d]}|_{i, s+d}` as
/// `(-q)^{d - pos_I(i)} [I; s] [I^i; s]^{-1}`.
pub fn quasi_minor(rows: &IndexTuple, s: usize, i: usize, ambient: usize) -> Result<QuasiFraction> {
    if !rows.is_distinct() {
        return precondition("quasi-minor rows must be distinct");
    }
    let p = rows.pos(i)?;
    let d = rows.len();
    let numerator = MinorSpec::new(rows.entries().to_vec(), s, ambient)?;
    let rest = rows.delete(&IndexSet::singleton(i))?;
    let denominator = if rest.is_empty() { None } else { Some(MinorSpec::new(rest.entries().to_vec(), s, ambient)?) };
    Ok(QuasiFraction { neg_q_exp: d as i32 - p as i32, numerator, denominator })
}

/// The right quasi-Plücker coordinate `r_{ji}^M = [j|M] [i|M]^{-1}`; the
/// `(-q)^{d-1}` factors of the two defining quasi-minors cancel.
pub fn qplucker_coord(j: usize, i: usize, m: &IndexSet, ambient: usize) -> Result<QuasiFraction> {
    if m.contains(i) || m.contains(j) {
        return precondition(format!("{j} and {i} must lie outside M = {m:?}"));
    }
    let with = |x: usize| -> Result<QuasiFraction> {
        let tuple = IndexTuple::new(std::iter::once(x).chain(m.iter()).collect(), ambient)?;
        quasi_minor(&tuple, 0, x, ambient)
    };
    let top = with(j)?;
    let bottom = with(i)?;
    // top / bottom = (-q)^{a-b} [j|M][M]^{-1} [M][i|M]^{-1}
    Ok(QuasiFraction {
        neg_q_exp: top.neg_q_exp - bottom.neg_q_exp,
        numerator: top.numerator,
        denominator: Some(bottom.numerator),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indexcomb::inversions;

    fn t(v: &[usize]) -> IndexTuple {
        IndexTuple::new(v.to_vec(), 5).unwrap()
    }

    #[test]
    fn minor_spec_validation() {
        assert!(MinorSpec::new(vec![], 0, 3).is_err());
        assert!(MinorSpec::new(vec![1, 2], 2, 3).is_err());
        assert!(MinorSpec::new(vec![1, 4], 0, 3).is_err());
        let m = MinorSpec::new(vec![3, 1, 2], 1, 4).unwrap();
        assert_eq!(m.cols(), IndexSet::from([2, 3, 4]));
        assert_eq!(m.render(), "[312;1]");
    }

    #[test]
    fn quasi_minor_examples() {
        let f = quasi_minor(&t(&[1, 2]), 0, 2, 2).unwrap();
        assert_eq!(f.neg_q_exp, 0);
        assert_eq!(f.numerator.render(), "[12]");
        assert_eq!(f.denominator.as_ref().unwrap().render(), "[1]");

        let f = quasi_minor(&t(&[1, 2]), 0, 1, 2).unwrap();
        assert_eq!(f.neg_q_exp, 1);
        assert_eq!(f.denominator.as_ref().unwrap().render(), "[2]");

        let f = quasi_minor(&t(&[3, 1, 2]), 0, 1, 3).unwrap();
        assert_eq!(f.neg_q_exp, 1);
        assert_eq!(f.numerator.render(), "[312]");
        assert_eq!(f.denominator.as_ref().unwrap().render(), "[32]");
        // [312] = (-q)^-2 [123], [32] = (-q)^-1 [23]
        assert_eq!(inversions(&[3, 1, 2]), Ok(2));
        let (c, num, den) = f.normalized().unwrap().unwrap();
        assert_eq!(num, IndexSet::from([1, 2, 3]));
        assert_eq!(den, IndexSet::from([2, 3]));
        assert_eq!(c, Laurent::neg_q_pow(1 - 2 + 1));

        assert!(matches!(quasi_minor(&t(&[1, 2]), 0, 3, 2), Err(Error::Absent(3))));
        let single = quasi_minor(&t(&[4]), 0, 4, 4).unwrap();
        assert!(single.denominator.is_none());
    }

    #[test]
    fn plucker_coordinates() {
        let r = qplucker_coord(2, 2, &IndexSet::from([1, 3]), 4).unwrap();
        assert!(r.is_one());

        let r = qplucker_coord(3, 1, &IndexSet::empty(), 4).unwrap();
        assert_eq!(r.neg_q_exp, 0);
        assert_eq!(r.numerator.render(), "[3]");
        assert_eq!(r.denominator.as_ref().unwrap().render(), "[1]");

        let r = qplucker_coord(1, 2, &IndexSet::from([3]), 4).unwrap();
        assert_eq!(r.neg_q_exp, 0);
        assert_eq!(r.numerator.render(), "[13]");
        assert_eq!(r.denominator.as_ref().unwrap().render(), "[23]");
        assert!(!r.is_one());

        assert!(qplucker_coord(1, 2, &IndexSet::from([2]), 4).is_err());
        assert!(qplucker_coord(1, 2, &IndexSet::from([1]), 4).is_err());
    }
}
