//! Closed-form counters for the set and multiset families in [`crate::enumerate`].
//!
//! Every function here evaluates a binomial sum directly; none of them walks
//! the family it counts. That keeps this module an independent route to each
//! count, so the verification harness can cross-check it against actual
//! enumeration and against the recurrence-defined sequences.
//!
//! Terms whose upper binomial argument would go negative are zero by the
//! convention in [`crate::pascal::binom`] and are simply skipped.

use crate::pascal;
use crate::BigCount;
use num_traits::Zero;

/// base^exp, or None once the power leaves u128 range (in which case every
/// term using it is zero anyway for any representable n).
fn pow_checked(base: u64, exp: u64) -> Option<u128> {
    if base <= 1 {
        return Some(base as u128);
    }
    (base as u128).checked_pow(u32::try_from(exp).ok()?)
}

/// Number of multisets over {1, ..., n} that contain n, in which each of
/// 1 ..= n-1 may repeat up to s-1 times, and whose minimum is at least the
/// multiset's cardinality.
///
/// Evaluates sum over k = 0 ..= (n-1)(s-1)/s of s_binom(n-1-k, k, s-1).
pub fn count_a(s: u64, n: u64) -> BigCount {
    assert!(s >= 2, "count_a requires s >= 2, got {s}");
    assert!(n >= 1, "count_a requires n >= 1, got {n}");
    let limit = ((n - 1) as u128 * (s - 1) as u128 / s as u128) as u64;
    (0..=limit)
        .map(|k| pascal::s_binom(n - 1 - k, k as i64, s - 1))
        .sum()
}

/// Number of multisets over {1, ..., n} whose minimum exceeds u times the
/// cardinality, under any admissible multiplicity caps (the count does not
/// depend on the caps; see the multiplicity-invariance check in
/// [`crate::verify`]).
///
/// Evaluates sum over k = 0 ..= (n-1)/u of binom(k + n - uk - 1, k).
pub fn count_b(u: u64, n: u64) -> BigCount {
    assert!(u >= 2, "count_b requires u >= 2, got {u}");
    assert!(n >= 1, "count_b requires n >= 1, got {n}");
    (0..=(n - 1) / u)
        .map(|k| {
            // k(u-1) <= (n-1)(u-1)/u < n-1, so the subtraction is safe.
            let upper = (n - 1 - k * (u - 1)) as u128;
            pascal::binom_wide(upper, k as u128)
        })
        .sum()
}

/// Number of colored multisets over {1, ..., n} that contain the (uncolored)
/// maximum n, with each smaller value carrying one of s-1 colors and all
/// value/color pairs distinct, whose minimum value is at least the total
/// number of chosen pairs.
///
/// Evaluates sum over k = 1 ..= (n(s-1)+1)/s of binom(n(s-1) - ks + k, k-1).
pub fn count_c(s: u64, n: u64) -> BigCount {
    assert!(s >= 2, "count_c requires s >= 2, got {s}");
    assert!(n >= 1, "count_c requires n >= 1, got {n}");
    let m = n as u128 * (s - 1) as u128;
    let limit = (m + 1) / s as u128;
    (1..=limit)
        .map(|k| pascal::binom_wide(m - k * (s - 1) as u128, k - 1))
        .sum()
}

/// Number of compositions of n into exactly k parts, each part strictly
/// greater than k^p: binom(n - k^(p+1) - 1, k - 1).
pub fn count_k_parts(n: u64, p: u64, k: u64) -> BigCount {
    assert!(k >= 1, "count_k_parts requires k >= 1, got {k}");
    let upper = pow_checked(k, p + 1)
        .and_then(|kp| kp.checked_add(1))
        .and_then(|floor| (n as u128).checked_sub(floor));
    match upper {
        Some(upper) => pascal::binom_wide(upper, (k - 1) as u128),
        None => BigCount::zero(),
    }
}

/// Number of compositions of n (any length) whose every part is strictly
/// greater than the p-th power of the number of parts: the sum of
/// [`count_k_parts`] over k = 1 ..= n.
pub fn count_k(n: u64, p: u64) -> BigCount {
    assert!(n >= 1, "count_k requires n >= 1, got {n}");
    (1..=n).map(|k| count_k_parts(n, p, k)).sum()
}

/// Number of nonempty subsets of {1, ..., n} that contain n and whose
/// minimum strictly exceeds the p-th power of the cardinality.
///
/// Evaluates sum over k = 1 ..= n of binom(n - k^p - 1, k - 1).
pub fn count_s(p: u64, n: u64) -> BigCount {
    assert!(p >= 1, "count_s requires p >= 1, got {p}");
    assert!(n >= 1, "count_s requires n >= 1, got {n}");
    (1..=n)
        .map(|k| {
            let upper = pow_checked(k, p)
                .and_then(|kp| kp.checked_add(1))
                .and_then(|floor| (n as u128).checked_sub(floor));
            match upper {
                Some(upper) => pascal::binom_wide(upper, (k - 1) as u128),
                None => BigCount::zero(),
            }
        })
        .sum()
}

/// Number of nonempty subsets of {1, ..., n} that contain n and whose
/// minimum is at least the p-th power of the cardinality.
///
/// Evaluates sum over k = 1 ..= n of binom(n - k^p, k - 1).
pub fn count_ap(p: u64, n: u64) -> BigCount {
    assert!(p >= 1, "count_ap requires p >= 1, got {p}");
    assert!(n >= 1, "count_ap requires n >= 1, got {n}");
    (1..=n)
        .map(|k| {
            let upper =
                pow_checked(k, p).and_then(|kp| (n as u128).checked_sub(kp));
            match upper {
                Some(upper) => pascal::binom_wide(upper, (k - 1) as u128),
                None => BigCount::zero(),
            }
        })
        .sum()
}

/// Number of subsets A of {1, ..., n} (the empty set included) such that
/// max(A) - 1 is in A and the minimum is at least |A|^p.
///
/// Evaluates 1 + sum over k = 2 ..= n of binom(n - k^p, k - 1). Termwise
/// this matches [`count_ap`]: the k = 1 term there is binom(n - 1, 0) = 1.
pub fn count_bp(p: u64, n: u64) -> BigCount {
    assert!(p >= 1, "count_bp requires p >= 1, got {p}");
    assert!(n >= 1, "count_bp requires n >= 1, got {n}");
    let tail: BigCount = (2..=n)
        .map(|k| {
            let upper =
                pow_checked(k, p).and_then(|kp| (n as u128).checked_sub(kp));
            match upper {
                Some(upper) => pascal::binom_wide(upper, (k - 1) as u128),
                None => BigCount::zero(),
            }
        })
        .sum();
    tail + 1u32
}
