//! Reference data for the worked tables.

use qminor_core::flagspace::FlagExpr;
use qminor_core::{IndexSet, Laurent};

/// Rows C, M, Y as printed: `(first factor, second factor, sign, power of q)`.
type Term = (&'static [usize], &'static [usize], i64, i32);

const TABLE_ONE: [&[Term]; 3] = [
    &[(&[1], &[2, 3, 4], 1, 0), (&[2, 3, 4], &[1], -1, -1)],
    &[(&[1], &[2, 3, 4], 1, 0), (&[1, 2, 3], &[4], -1, 2), (&[1, 2, 4], &[3], 1, 1), (&[1, 3, 4], &[2], -1, 0)],
    &[(&[1, 2, 3], &[4], 1, 0), (&[1, 2, 4], &[3], -1, -1), (&[1, 3, 4], &[2], 1, -2), (&[2, 3, 4], &[1], -1, -3)],
];

const TABLE_TWO: [&str; 7] =
    ["0̂ -> (1)", "(5) -> (5,15)", "(6) -> (6,16)", "(15) -> (1,15)", "(16) -> (1,16)", "(56) -> (6,56)", "(5,56) -> 1̂"];

/// Generated once for J = {1,5,6}, J' = {1}, |I| = 3.
const TABLE_THREE: [&str; 7] = [
    "v^{15}: e^{15} 1, e^{156} q^-2",
    "v^{16}: e^{16} 1, e^{156} -q^-1",
    "v^{56}: e^{56} 1, e^{156} -q^-3",
    "v^{1}: e^{1} 1, e^{15} q^-2, e^{16} -q^-1, e^{156} q^-2",
    "v^{5}: e^{5} 1, e^{15} q^-2, e^{56} -q^-1, e^{156} q^-4",
    "v^{6}: e^{6} 1, e^{16} q^-2, e^{56} 1, e^{156} -q^-3",
    "v^{∅}: e^{∅} 1, e^{1} -q^-1, e^{5} -q^-1, e^{6} 1, e^{15} -q^-3, e^{16} q^-2, e^{56} 1, e^{156} -q^-3",
];

pub fn table_one() -> [FlagExpr; 3] {
    TABLE_ONE.map(|row| {
        let mut e = FlagExpr::zero();
        for &(a, b, sign, x) in row {
            e.add_word(&[a, b], &Laurent::monomial(sign, x));
        }
        e
    })
}

fn is_reference_instance(j: &IndexSet, jp: &IndexSet) -> bool {
    j.as_slice() == [1, 5, 6] && jp.as_slice() == [1]
}

pub fn table_two(j: &IndexSet, jp: &IndexSet) -> Option<Vec<String>> {
    is_reference_instance(j, jp).then(|| TABLE_TWO.iter().map(|s| s.to_string()).collect())
}

pub fn table_three(j: &IndexSet, jp: &IndexSet, size_i: usize) -> Option<Vec<String>> {
    (is_reference_instance(j, jp) && size_i == 3).then(|| TABLE_THREE.iter().map(|s| s.to_string()).collect())
}

/// `v^{15}: e^{15} 1, e^{156} q^-2`.
pub fn render_row(kp: &IndexSet, coords: &[(IndexSet, Laurent)]) -> String {
    let terms: Vec<String> = coords.iter().map(|(k, a)| format!("e^{{{}}} {}", k.label(), a.render())).collect();
    format!("v^{{{}}}: {}", kp.label(), terms.join(", "))
}
