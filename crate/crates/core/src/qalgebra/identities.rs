//! Polynomial identities among quantum minors, each presented in a
//! denominator-free form and decided by straightening the residual to zero.

use super::{Engine, Gen, QElement};
use crate::error::{precondition, Error, Result};
use crate::indexcomb::{cross_inversions, pos, surrounds, IndexSet, IndexTuple};
use crate::laurent::Laurent;

fn x(engine: &Engine, row: usize, col: usize, n: usize) -> Result<QElement> {
    let g = Gen::checked(row, col, n)?;
    engine.straighten(&[g], &Laurent::one(), n)
}

/// `Σ_c A_{jc} (-q)^{pos_R(i) - pos_C(c)} det_q A^{ic} - δ_ij det_q A` for
/// `A = X_{R,C}`.
pub fn laplace_residual(
    engine: &Engine,
    rows: &IndexSet,
    cols: &IndexSet,
    i: usize,
    j: usize,
    n: usize,
) -> Result<QElement> {
    let pi = pos(rows.as_slice(), i)?;
    pos(rows.as_slice(), j)?;
    let rest_rows = rows.without(i);
    let mut acc = QElement::zero(n);
    for (k, c) in cols.iter().enumerate() {
        let cofactor = engine.det_sets(&rest_rows, &cols.without(c), n)?;
        let term = engine.mul(&x(engine, j, c, n)?, &cofactor)?;
        acc.add_scaled(&term, &Laurent::neg_q_pow(pi as i32 - (k as i32 + 1)))?;
    }
    if i == j {
        let det = engine.det_sets(rows, cols, n)?;
        acc.add_scaled(&det, &Laurent::from(-1))?;
    }
    Ok(acc)
}

pub fn laplace_check(engine: &Engine, rows: &IndexSet, cols: &IndexSet, i: usize, j: usize, n: usize) -> Result<bool> {
    Ok(laplace_residual(engine, rows, cols, i, j, n)?.is_zero())
}

/// `[det_q X_{R,C}, x_{ik}] = 0`.
pub fn centrality_check(
    engine: &Engine,
    rows: &IndexSet,
    cols: &IndexSet,
    i: usize,
    k: usize,
    n: usize,
) -> Result<bool> {
    if !rows.contains(i) || !cols.contains(k) {
        return precondition(format!("x[{i},{k}] is not an entry of the submatrix {rows:?} x {cols:?}"));
    }
    let det = engine.det_sets(rows, cols, n)?;
    let xik = x(engine, i, k, n)?;
    Ok(engine.mul(&det, &xik)? == engine.mul(&xik, &det)?)
}

/// `[J][I] - q^exp [I][J]`.
pub fn qcommutator(engine: &Engine, j: &IndexSet, i: &IndexSet, exp: i32, n: usize) -> Result<QElement> {
    let mj = engine.minor(j, n)?;
    let mi = engine.minor(i, n)?;
    let ji = engine.mul(&mj, &mi)?;
    let ij = engine.mul(&mi, &mj)?;
    Ok(&ji - &ij.scale(&Laurent::q_pow(exp)))
}

/// The integer `a` with `[J][I] = q^a [I][J]`, if one exists.
pub fn qcommute_exponent(engine: &Engine, j: &IndexSet, i: &IndexSet, n: usize) -> Result<Option<i32>> {
    if j.is_empty() || i.is_empty() {
        return precondition("both index sets must be nonempty");
    }
    let mj = engine.minor(j, n)?;
    let mi = engine.minor(i, n)?;
    let ji = engine.mul(&mj, &mi)?;
    let ij = engine.mul(&mi, &mj)?;
    Ok(ji.q_proportionality(&ij))
}

/// Denominator-free forms of the quasi-Plücker identities used to prove
/// the q-commuting property.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PluckerVariant {
    /// `[j][I] = q^{<<j,I>>} [I][j]`.
    Base,
    /// `[I][j] = q^{-<<j,I>>} Σ_i (-q)^{ℓ(i|I^i)} [j|I^i][i]`.
    Left,
    /// `[j][I] = Σ_i (-q)^{ℓ(i|I^i)} [j|I^i][i]`.
    Right,
    /// `[j|J^j][I] = Σ_i q^{<<J^j,I^i>>} (-q)^{ℓ(i|I^i)} [j|I^i][i|J^j]`.
    InductJI,
    /// `[I][j|J^j] = Σ_i q^{-<<j,i>>} (-q)^{ℓ(i|I^i)} [j|I^i][i|J^j]`.
    InductIJ,
}

impl PluckerVariant {
    pub const ALL: [PluckerVariant; 5] = [
        PluckerVariant::Base,
        PluckerVariant::Left,
        PluckerVariant::Right,
        PluckerVariant::InductJI,
        PluckerVariant::InductIJ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PluckerVariant::Base => "base",
            PluckerVariant::Left => "left",
            PluckerVariant::Right => "right",
            PluckerVariant::InductJI => "induct-JI",
            PluckerVariant::InductIJ => "induct-IJ",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.name() == s)
    }
}

fn exponent(j: &IndexSet, i: &IndexSet) -> Result<i32> {
    surrounds(j, i).map(|w| w.exponent).ok_or_else(|| Error::Precondition(format!("{j:?} does not surround {i:?}")))
}

fn tuple(head: usize, tail: &IndexSet) -> IndexTuple {
    IndexTuple::unchecked(std::iter::once(head).chain(tail.iter()).collect())
}

/// Residual of the selected cleared identity; zero iff it holds.
///
/// For `Base`, `Left` and `Right`, `J` must be a singleton `{j}` with
/// `j ∉ I` and `{j}` surrounding `I`. For the inductive variants `J` must
/// surround `I` with `J ∩ I = ∅`, and `j = min J`.
pub fn cleared_plucker_residual(
    engine: &Engine,
    jset: &IndexSet,
    iset: &IndexSet,
    variant: PluckerVariant,
    n: usize,
) -> Result<QElement> {
    let j = jset.first().ok_or_else(|| Error::Precondition("J must be nonempty".into()))?;
    if iset.is_empty() {
        return precondition("I must be nonempty");
    }
    if !jset.is_disjoint(iset) {
        return precondition(format!("J = {jset:?} and I = {iset:?} must be disjoint"));
    }
    let jj_exp = exponent(jset, iset)?;
    let j_rest = jset.without(j);
    let single = matches!(variant, PluckerVariant::Base | PluckerVariant::Left | PluckerVariant::Right);
    if single && jset.len() != 1 {
        return precondition(format!("variant {} needs a single index j", variant.name()));
    }

    let minor_i = engine.minor(iset, n)?;
    let minor_j = engine.minor_tuple(&tuple(j, &j_rest), n)?;

    // Σ_i coeff_i (-q)^{ℓ(i|I^i)} [j|I^i][i|J^j]
    let mut sum = QElement::zero(n);
    for i in iset.iter() {
        let i_rest = iset.without(i);
        let sign = Laurent::neg_q_pow(cross_inversions(&[i], i_rest.as_slice()) as i32);
        let extra = match variant {
            PluckerVariant::InductJI => exponent(&j_rest, &i_rest)?,
            PluckerVariant::InductIJ => -exponent(&IndexSet::singleton(j), &IndexSet::singleton(i))?,
            _ => 0,
        };
        let left = engine.minor_tuple(&tuple(j, &i_rest), n)?;
        let right = engine.minor_tuple(&tuple(i, &j_rest), n)?;
        let term = engine.mul(&left, &right)?;
        sum.add_scaled(&term, &(&sign * &Laurent::q_pow(extra)))?;
    }

    let residual = match variant {
        PluckerVariant::Base => {
            let ji = engine.mul(&minor_j, &minor_i)?;
            let ij = engine.mul(&minor_i, &minor_j)?;
            &ji - &ij.scale(&Laurent::q_pow(jj_exp))
        }
        PluckerVariant::Right | PluckerVariant::InductJI => &engine.mul(&minor_j, &minor_i)? - &sum,
        PluckerVariant::Left => &engine.mul(&minor_i, &minor_j)? - &sum.scale(&Laurent::q_pow(-jj_exp)),
        PluckerVariant::InductIJ => &engine.mul(&minor_i, &minor_j)? - &sum,
    };
    Ok(residual)
}

pub fn cleared_plucker_check(
    engine: &Engine,
    jset: &IndexSet,
    iset: &IndexSet,
    variant: PluckerVariant,
    n: usize,
) -> Result<bool> {
    Ok(cleared_plucker_residual(engine, jset, iset, variant, n)?.is_zero())
}

/// Residual of the homological relation
/// `-|A^{jk}|_{il}^{-1} |A|_{ik} = |A^{ik}|_{jl}^{-1} |A|_{jk}` for
/// `A = X_{R, s+[d]}`, `k = s+d`, `l = s+d-1`.
///
/// Substituting the quasi-minor formula and cancelling the common factor
/// `[R][R^{ij}]` (using centrality of `[R]`), the relation is equivalent to
/// `(-q)^{e_i} [R^j;s][R^i;s] + (-q)^{e_j} [R^i;s][R^j;s] = 0` with
/// `e_i = (d - pos_R(i)) - (d - 1 - pos_{R^j}(i))` and `e_j` symmetric.
///
/// A quasi-minor is labelled by its row set, so `R` is taken in increasing
/// order. Applied to an unsorted tuple the positional formula is off by a
/// power of `-q`; see [`homological_literal_residual`].
#[allow(clippy::too_many_arguments)]
pub fn homological_residual(
    engine: &Engine,
    rows: &IndexTuple,
    s: usize,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
    n: usize,
) -> Result<QElement> {
    if !rows.is_distinct() {
        return precondition("rows must be distinct");
    }
    homological_literal_residual(engine, &rows.to_set().as_tuple(), s, i, j, k, l, n)
}

/// The reduced homological relation evaluated with positions taken in the
/// given row order. Agrees with [`homological_residual`] on sorted rows.
#[allow(clippy::too_many_arguments)]
pub fn homological_literal_residual(
    engine: &Engine,
    rows: &IndexTuple,
    s: usize,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
    n: usize,
) -> Result<QElement> {
    let d = rows.len();
    if !rows.is_distinct() {
        return precondition("rows must be distinct");
    }
    if i == j {
        return precondition("i and j must differ");
    }
    if d < 2 || k != s + d || l + 1 != s + d {
        return precondition(format!(
            "unsupported configuration: need k = {} and l = {} (last two columns)",
            s + d,
            (s + d).saturating_sub(1)
        ));
    }
    let r_without_i = rows.delete(&IndexSet::singleton(i))?;
    let r_without_j = rows.delete(&IndexSet::singleton(j))?;
    let e_i = (d as i32 - rows.pos(i)? as i32) - (d as i32 - 1 - r_without_j.pos(i)? as i32);
    let e_j = (d as i32 - rows.pos(j)? as i32) - (d as i32 - 1 - r_without_i.pos(j)? as i32);
    let cols = IndexSet::new(s + 1..s + d);
    let m_i = engine.det_tuple(&r_without_i, &cols, n)?;
    let m_j = engine.det_tuple(&r_without_j, &cols, n)?;
    let mut acc = engine.mul(&m_j, &m_i)?.scale(&Laurent::neg_q_pow(e_i));
    acc.add_scaled(&engine.mul(&m_i, &m_j)?, &Laurent::neg_q_pow(e_j))?;
    Ok(acc)
}

#[allow(clippy::too_many_arguments)]
pub fn homological_check(
    engine: &Engine,
    rows: &IndexTuple,
    s: usize,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
    n: usize,
) -> Result<bool> {
    Ok(homological_residual(engine, rows, s, i, j, k, l, n)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s<const N: usize>(a: [usize; N]) -> IndexSet {
        IndexSet::from(a)
    }

    #[test]
    fn laplace_examples() {
        let e = Engine::desk();
        assert!(laplace_check(&e, &s([1, 2]), &s([1, 2]), 1, 1, 2).unwrap());
        assert!(laplace_check(&e, &s([1, 2]), &s([1, 2]), 1, 2, 2).unwrap());
        assert!(laplace_check(&e, &s([1, 2, 3]), &s([1, 2, 3]), 2, 3, 3).unwrap());
        assert!(laplace_check(&e, &s([1, 3]), &s([2, 4]), 3, 3, 4).unwrap());
        assert!(matches!(laplace_check(&e, &s([1, 2]), &s([1, 2]), 3, 1, 3), Err(Error::Absent(3))));
    }

    #[test]
    fn laplace_detects_a_wrong_sign() {
        // Flipping the sign convention must break the identity.
        let e = Engine::desk();
        let rows = s([1, 2]);
        let cols = s([1, 2]);
        let mut acc = QElement::zero(2);
        for (k, c) in cols.iter().enumerate() {
            let cof = e.det_sets(&rows.without(1), &cols.without(c), 2).unwrap();
            let t = e.mul(&x(&e, 1, c, 2).unwrap(), &cof).unwrap();
            acc.add_scaled(&t, &Laurent::q_pow(1 - (k as i32 + 1))).unwrap();
        }
        let det = e.det_sets(&rows, &cols, 2).unwrap();
        assert_ne!(acc, det);
    }

    #[test]
    fn centrality_examples() {
        let e = Engine::desk();
        assert!(centrality_check(&e, &s([1, 2]), &s([1, 2]), 1, 1, 2).unwrap());
        assert!(centrality_check(&e, &s([1, 2]), &s([1, 2]), 2, 2, 2).unwrap());
        assert!(centrality_check(&e, &s([1, 2, 3]), &s([1, 2, 3]), 2, 2, 3).unwrap());
        assert!(centrality_check(&e, &s([1, 2]), &s([1, 2]), 3, 1, 3).is_err());
        // an entry outside the submatrix does not commute in general
        let det = e.det_sets(&s([1, 2]), &s([1, 2]), 3).unwrap();
        let x33 = x(&e, 1, 3, 3).unwrap();
        assert_ne!(e.mul(&det, &x33).unwrap(), e.mul(&x33, &det).unwrap());
    }

    #[test]
    fn qcommute_examples() {
        let e = Engine::desk();
        assert_eq!(qcommute_exponent(&e, &s([1]), &s([2]), 2).unwrap(), Some(-1));
        assert_eq!(qcommute_exponent(&e, &s([1]), &s([2, 3, 4]), 4).unwrap(), Some(-1));
        // {2,3} does not surround {1,4}, but {1,4} surrounds {2,3}
        assert_eq!(qcommute_exponent(&e, &s([2, 3]), &s([1, 4]), 4).unwrap(), Some(0));
        assert_eq!(qcommute_exponent(&e, &s([1, 3]), &s([2, 4]), 4).unwrap(), None);
        assert_eq!(qcommute_exponent(&e, &s([2]), &s([1, 3]), 3).unwrap(), None);
        assert_eq!(qcommute_exponent(&e, &s([1]), &s([1]), 2).unwrap(), Some(0));
        assert!(qcommutator(&e, &s([1, 4]), &s([2, 3]), 0, 4).unwrap().is_zero());
    }

    #[test]
    fn weak_qcommuting_minors() {
        // [j|M] and [i|M] q-commute with the surrounds exponent.
        let e = Engine::desk();
        let n = 4;
        for i in 1..=n {
            for j in i + 1..=n {
                let rest = IndexSet::range(n).without(i).without(j);
                for m in rest.subsets() {
                    let jm = tuple(j, &m);
                    let im = tuple(i, &m);
                    let a = e.minor_tuple(&jm, n).unwrap();
                    let b = e.minor_tuple(&im, n).unwrap();
                    let got = e.mul(&a, &b).unwrap().q_proportionality(&e.mul(&b, &a).unwrap());
                    let want = surrounds(&m.with(j), &m.with(i)).map(|w| w.exponent);
                    assert!(want.is_some());
                    assert_eq!(got, want, "j={j} i={i} M={m:?}");
                }
            }
        }
    }

    #[test]
    fn cleared_plucker_examples() {
        let e = Engine::desk();
        for v in [PluckerVariant::Right, PluckerVariant::Left, PluckerVariant::Base] {
            assert!(cleared_plucker_check(&e, &s([1]), &s([2, 3]), v, 3).unwrap(), "{v:?}");
        }
        assert!(cleared_plucker_check(&e, &s([1, 4]), &s([2, 3]), PluckerVariant::InductJI, 4).unwrap());
        assert!(cleared_plucker_check(&e, &s([1, 4]), &s([2, 3]), PluckerVariant::InductIJ, 4).unwrap());
        // precondition violations
        assert!(cleared_plucker_check(&e, &s([2]), &s([1, 3]), PluckerVariant::Right, 3).is_err());
        assert!(cleared_plucker_check(&e, &s([1, 4]), &s([2, 3]), PluckerVariant::Left, 4).is_err());
        assert!(cleared_plucker_check(&e, &s([2]), &s([2, 3]), PluckerVariant::Right, 3).is_err());
    }

    #[test]
    fn clear_left_without_the_prefactor_fails() {
        let e = Engine::desk();
        let n = 3;
        let right = cleared_plucker_residual(&e, &s([1]), &s([2, 3]), PluckerVariant::Right, n).unwrap();
        assert!(right.is_zero());
        // [I][j] equals q^{+1} times the sum, not the sum itself
        let ij = e.mul(&e.minor(&s([2, 3]), n).unwrap(), &e.minor(&s([1]), n).unwrap()).unwrap();
        let ji = e.mul(&e.minor(&s([1]), n).unwrap(), &e.minor(&s([2, 3]), n).unwrap()).unwrap();
        assert_eq!(ij.q_proportionality(&ji), Some(1));
    }

    #[test]
    fn homological_examples() {
        let e = Engine::desk();
        let t = |v: &[usize]| IndexTuple::new(v.to_vec(), 4).unwrap();
        assert!(homological_check(&e, &t(&[1, 2]), 0, 1, 2, 2, 1, 4).unwrap());
        assert!(homological_check(&e, &t(&[1, 2, 3]), 0, 1, 2, 3, 2, 4).unwrap());
        assert!(homological_check(&e, &t(&[1, 2, 3]), 1, 2, 3, 4, 3, 4).unwrap());
        assert!(homological_check(&e, &t(&[1, 2, 3]), 0, 1, 2, 3, 1, 4).is_err());
        assert!(homological_check(&e, &t(&[1, 2]), 0, 1, 1, 2, 1, 4).is_err());
    }
}
