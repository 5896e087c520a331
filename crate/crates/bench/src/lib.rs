//! Fixed inputs shared by the benchmarks.

use qminor_core::Gen;

/// A word of `len` generators cycling through `[n] x [n]` against the normal
/// order, so straightening has work to do.
pub fn reversed_word(n: usize, len: usize) -> Vec<Gen> {
    (0..len)
        .map(|k| {
            let r = n - (k % n);
            let c = n - ((k / n + k) % n);
            Gen::new(r, c)
        })
        .collect()
}
