//! Binomial coefficients, their capped-multiplicity generalization, and the
//! small identities built from them.
//!
//! The generalized coefficient counts placements of k identical objects
//! into n boxes holding at most s each; s = 1 recovers the ordinary
//! Pascal triangle. All coefficient arguments follow the zero convention:
//! out-of-range arguments give 0, never an error.

use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, Mutex};

use num_traits::{One, Zero};

use crate::BigCount;

/// Completed triangle rows keyed by s, grown on demand. Shares the same
/// guard discipline as the sequence cache: callers never see the lock.
static ROWS: LazyLock<Mutex<HashMap<u64, Vec<Vec<BigCount>>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Zero-convention binomial on nonnegative arguments wider than i64; the
/// closed-form counters reach here after their own underflow checks.
pub(crate) fn binom_wide(n: u128, k: u128) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    num_integer::binomial(BigCount::from(n), BigCount::from(k))
}

/// binom(n, k) on full integer arguments: 0 whenever n < 0, k < 0, or
/// n < k, matching the convention the closed-form counters rely on.
pub fn binom(n: i64, k: i64) -> BigCount {
    if n < 0 || k < 0 {
        return BigCount::zero();
    }
    binom_wide(n as u128, k as u128)
}

/// Extends the cached rows for capacity `s` through row `n` and hands the
/// requested slice to `read`.
fn with_rows<R>(s: u64, n: u64, read: impl FnOnce(&[Vec<BigCount>]) -> R) -> R {
    let mut cache = ROWS.lock().expect("triangle cache poisoned");
    let rows = cache.entry(s).or_insert_with(|| vec![vec![BigCount::one()]]);
    while (rows.len() as u64) <= n {
        let prev = rows.last().expect("rows start nonempty");
        let width = s as usize * rows.len() + 1;
        let mut row = Vec::with_capacity(width);
        for k in 0..width {
            // Sum the s+1 entries above: prev[k-s ..= k], clipped to prev.
            let lo = k.saturating_sub(s as usize);
            let hi = k.min(prev.len() - 1);
            row.push(prev[lo..=hi].iter().sum());
        }
        rows.push(row);
    }
    read(rows)
}

/// Number of ways to place k identical objects into n boxes of capacity s:
/// entry k of triangle row n. Zero for k < 0 or k > s*n.
pub fn s_binom(n: u64, k: i64, s: u64) -> BigCount {
    if k < 0 || k as u128 > s as u128 * n as u128 {
        return BigCount::zero();
    }
    with_rows(s, n, |rows| rows[n as usize][k as usize].clone())
}

/// Rows 0 ..= n_max of the capacity-s triangle. Row n has s*n + 1 entries,
/// is palindromic, and sums to (s+1)^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct STriangle {
    s: u64,
    rows: Vec<Vec<BigCount>>,
}

impl STriangle {
    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn rows(&self) -> &[Vec<BigCount>] {
        &self.rows
    }

    pub fn entry(&self, n: usize, k: usize) -> Option<&BigCount> {
        self.rows.get(n).and_then(|row| row.get(k))
    }
}

impl fmt::Display for STriangle {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let mut first = true;
            for entry in row {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{entry}")?;
                first = false;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Builds triangle rows 0 ..= n_max for capacity s.
pub fn s_pascal_rows(s: u64, n_max: u64) -> STriangle {
    let rows = with_rows(s, n_max, |rows| rows[..=n_max as usize].to_vec());
    STriangle { s, rows }
}

/// Sum along the shallow diagonal: s_binom(n-k, k, s) for
/// k = 0 ..= floor(s*n / (s+1)). Equals the (s+1)-step Fibonacci number
/// at index n+1.
pub fn diagonal_sum(s: u64, n: u64) -> BigCount {
    let limit = s * n / (s + 1);
    (0..=limit).map(|k| s_binom(n - k, k as i64, s)).sum()
}

/// Number of solutions of x_1 + ... + x_p = n with x_i >= lower_bounds[i]:
/// binom(n - sum(bounds) + p - 1, p - 1). Expects at least one variable.
pub fn stars_and_bars(n: u64, lower_bounds: &[u64]) -> BigCount {
    let p = lower_bounds.len() as i128;
    let slack = n as i128 - lower_bounds.iter().map(|&c| c as i128).sum::<i128>();
    let upper = slack + p - 1;
    if upper < 0 || upper < p - 1 {
        return BigCount::zero();
    }
    binom_wide(upper as u128, (p - 1) as u128)
}

/// Confirms binom(r,r) + binom(r+1,r) + ... + binom(n,r) = binom(n+1, r+1)
/// for every n in r ..= n_max. Vacuously true when n_max < r.
pub fn hockey_stick_check(r: u64, n_max: u64) -> bool {
    let mut running = BigCount::zero();
    for n in r..=n_max {
        running += binom(n as i64, r as i64);
        if running != binom(n as i64 + 1, r as i64 + 1) {
            return false;
        }
    }
    true
}
