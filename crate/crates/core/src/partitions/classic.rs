//! Ordinary (one-color) partition counts used as references.

use super::LabError;

/// Calls `visit` with every partition of `n` into parts `<= max_part`, parts
/// in non-increasing order. With `distinct`, parts are pairwise different.
pub fn for_each_partition<F: FnMut(&[u32])>(n: u32, max_part: u32, distinct: bool, mut visit: F) {
    fn go<F: FnMut(&[u32])>(
        n: u32,
        max_part: u32,
        distinct: bool,
        stack: &mut Vec<u32>,
        visit: &mut F,
    ) {
        if n == 0 {
            visit(stack);
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            stack.push(p);
            let next = if distinct { p - 1 } else { p };
            go(n - p, next, distinct, stack, visit);
            stack.pop();
        }
    }
    go(n, max_part, distinct, &mut Vec::new(), &mut visit);
}

/// Overpartitions of `n`: the first occurrence of each size may be overlined,
/// so a partition with `d` distinct sizes contributes `2^d`. With `odd_only`
/// every part is odd.
pub fn count_overpartitions(n: u32, odd_only: bool) -> u64 {
    let mut total = 0u64;
    for_each_partition(n, n, false, |parts| {
        if odd_only && parts.iter().any(|p| p % 2 == 0) {
            return;
        }
        let mut sizes = parts.to_vec();
        sizes.dedup();
        total += 1u64 << sizes.len();
    });
    total
}

/// Partitions of `n` whose odd parts are all less than twice the smallest part.
///
/// With `allow_zero` (distinct parts only) a single part `0` may be added,
/// which makes the smallest part `0` and so admits only all-even partitions.
/// The empty partition itself never counts; `{0}` is the one member at `n = 0`.
pub fn count_ady(n: u32, distinct: bool, allow_zero: bool) -> Result<u64, LabError> {
    if allow_zero && !distinct {
        return Err(LabError::ZeroPartWithRepeats);
    }
    let mut total = 0u64;
    for_each_partition(n, n, distinct, |parts| {
        if let Some(&s) = parts.last() {
            if parts.iter().all(|p| p % 2 == 0 || *p < 2 * s) {
                total += 1;
            }
        }
        if allow_zero && parts.iter().all(|p| p % 2 == 0) {
            total += 1;
        }
    });
    Ok(total)
}

pub fn is_square(n: u64) -> bool {
    let r = n.isqrt();
    r * r == n
}
