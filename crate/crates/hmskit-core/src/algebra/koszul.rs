//! Koszul sign bookkeeping, shared by every wedge product in the crate, plus
//! the test-only sign-flip hooks used by the mutation-sensitivity checks.
//!
//! Keeping the sign rule in one place is what makes those checks meaningful:
//! a flipped convention here must propagate to the trivial-extension
//! composition, and a surviving test suite would be vacuous.

use std::cell::Cell;

thread_local! {
    static TRIVEXT_SIGN_FLIP: Cell<bool> = const { Cell::new(false) };
}

/// Merge two strictly increasing index sets, counting the transpositions
/// needed to interleave them. Returns the merged set and the Koszul sign
/// (-1)^inversions, or None when the sets intersect (wedge vanishes).
pub fn merge_sign(a: &[u8], b: &[u8]) -> Option<(Vec<u8>, i64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else if a[i] > b[j] {
            // b[j] jumps over the remaining a-tail
            inversions += a.len() - i;
            out.push(b[j]);
            j += 1;
        } else {
            return None;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    Some((out, sign))
}

/// Whether the trivial-extension Koszul sign is currently flipped.
pub fn trivext_sign_flipped() -> bool {
    TRIVEXT_SIGN_FLIP.with(|f| f.get())
}

/// Runs `body` with the Koszul sign of the trivial-extension composition's
/// dual cross term negated. Scoped to the current thread; used only by the
/// mutation-sensitivity tests.
pub fn with_trivext_sign_flipped<T>(body: impl FnOnce() -> T) -> T {
    TRIVEXT_SIGN_FLIP.with(|f| f.set(true));
    let out = body();
    TRIVEXT_SIGN_FLIP.with(|f| f.set(false));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_sign_basics() {
        assert_eq!(merge_sign(&[1], &[2]), Some((vec![1, 2], 1)));
        assert_eq!(merge_sign(&[2], &[1]), Some((vec![1, 2], -1)));
        assert_eq!(merge_sign(&[1], &[1]), None);
        assert_eq!(merge_sign(&[], &[3, 5]), Some((vec![3, 5], 1)));
        // (1,3) against (2,4): 2 jumps over 3 only
        assert_eq!(merge_sign(&[1, 3], &[2, 4]), Some((vec![1, 2, 3, 4], -1)));
        // full reversal of 2 against 2: (3,4) then (1,2), four inversions
        assert_eq!(merge_sign(&[3, 4], &[1, 2]), Some((vec![1, 2, 3, 4], 1)));
    }

    #[test]
    fn flip_hook_is_scoped() {
        assert!(!trivext_sign_flipped());
        let seen = with_trivext_sign_flipped(trivext_sign_flipped);
        assert!(seen);
        assert!(!trivext_sign_flipped());
    }
}
