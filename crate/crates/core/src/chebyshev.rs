//! Integer combinatorics shared across the crate: normalized Chebyshev
//! polynomials of both kinds, binomials, connected-component statistics of
//! subsets of `[1, n]`, and the no-two-consecutive subset polynomial.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Largest ambient set size accepted by the exhaustive enumerators.
pub const MAX_ENUMERATION_N: u32 = 24;

/// `S_n(x)` from `S_{-1} = 0`, `S_0 = 1`, `S_{n+1} = x S_n - S_{n-1}`.
///
/// Every `n < 0` evaluates to zero, which also covers the `S_{-2} = 0`
/// convention used by [`cheb_p_coeffs`].
pub fn cheb_s_value(n: i64, x: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    let x = BigInt::from(x);
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &x * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Monomial-basis coefficients of `S_n`, constant term first. Empty for `n < 0`.
pub fn cheb_s_coeffs(n: i64) -> Vec<BigInt> {
    if n < 0 {
        return Vec::new();
    }
    let mut prev: Vec<BigInt> = Vec::new();
    let mut cur = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (k, c) in cur.iter().enumerate() {
            next[k + 1] += c;
        }
        for (k, c) in prev.iter().enumerate() {
            next[k] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Normalized first-kind polynomial `P_n = S_n - S_{n-2}`.
pub fn cheb_p_coeffs(n: u32) -> Vec<BigInt> {
    let mut out = cheb_s_coeffs(n as i64);
    for (k, c) in cheb_s_coeffs(n as i64 - 2).into_iter().enumerate() {
        out[k] -= c;
    }
    out
}

/// Evaluates an integer coefficient list (constant term first) at `x`.
pub fn eval_coeffs(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Binomial coefficient, zero whenever `n < 0`, `k < 0` or `k > n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetProfile {
    pub n: u32,
    pub members: Vec<u32>,
    /// Number of maximal runs of consecutive integers.
    pub c: u32,
    /// 1 iff `n` is a member.
    pub epsilon: u32,
}

pub fn subset_profile(n: u32, members: &[u32]) -> Result<SubsetProfile> {
    if n == 0 {
        return Err(Error::InvalidArgument("ambient set [1, n] needs n >= 1".into()));
    }
    let mut sorted = members.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument("repeated member".into()));
    }
    if let Some(&bad) = sorted.iter().find(|&&j| j == 0 || j > n) {
        return Err(Error::InvalidArgument(format!("{bad} is not in [1, {n}]")));
    }
    let c = sorted
        .iter()
        .enumerate()
        .filter(|&(i, &j)| i == 0 || sorted[i - 1] + 1 != j)
        .count() as u32;
    let epsilon = u32::from(sorted.last() == Some(&n));
    Ok(SubsetProfile {
        n,
        members: sorted,
        c,
        epsilon,
    })
}

/// Number of `r`-subsets of `[1, n]` with exactly `t` connected components,
/// `binom(r-1, t-1) * binom(n+1-r, t)`; the empty set is counted directly.
pub fn count_subsets_by_c(n: i64, r: i64, t: i64) -> BigInt {
    if r == 0 {
        return BigInt::from(u8::from(t == 0 && n >= 0));
    }
    binom(r - 1, t - 1) * binom(n + 1 - r, t)
}

/// Number of `r`-subsets `J` of `[1, n]` with `c(J) - eps(J) = t`,
/// `binom(r, t) * binom(n-r, t)`.
pub fn count_subsets_by_c_minus_eps(n: i64, r: i64, t: i64) -> BigInt {
    binom(r, t) * binom(n - r, t)
}

// Bit i of a mask stands for the element i + 1.
fn components(mask: u64) -> u32 {
    (mask & !(mask << 1)).count_ones()
}

fn check_enumeration_size(n: u32) -> Result<()> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::SizeLimit(format!(
            "exhaustive subset enumeration needs n <= {MAX_ENUMERATION_N}, got {n}"
        )));
    }
    Ok(())
}

/// Exhaustive table `counts[r][t]` of `r`-subsets of `[1, n]` with `c(J) = t`.
pub fn enumerate_counts_by_c(n: u32) -> Result<Vec<Vec<u64>>> {
    check_enumeration_size(n)?;
    let size = n as usize + 1;
    let mut counts = vec![vec![0u64; size]; size];
    for mask in 0u64..(1u64 << n) {
        counts[mask.count_ones() as usize][components(mask) as usize] += 1;
    }
    Ok(counts)
}

/// Exhaustive table `counts[r][t]` of `r`-subsets with `c(J) - eps(J) = t`.
pub fn enumerate_counts_by_c_minus_eps(n: u32) -> Result<Vec<Vec<u64>>> {
    check_enumeration_size(n)?;
    let size = n as usize + 1;
    let mut counts = vec![vec![0u64; size]; size];
    let top = if n == 0 { 0 } else { 1u64 << (n - 1) };
    for mask in 0u64..(1u64 << n) {
        let eps = u32::from(mask & top != 0);
        counts[mask.count_ones() as usize][(components(mask) - eps) as usize] += 1;
    }
    Ok(counts)
}

/// All subsets of `[1, n]` with no two consecutive integers, as bitmasks
/// (bit `i` is the element `i + 1`).
pub fn no_consecutive_subsets(n: u32) -> Result<Vec<u64>> {
    check_enumeration_size(n)?;
    Ok((0u64..(1u64 << n)).filter(|m| m & (m >> 1) == 0).collect())
}

/// `F(w_1, ..., w_N)` summed over subsets of `[1, N]` without two
/// consecutive integers, under `w_k -> x_{[k + phase]}^2` where `[j]` is
/// the element of `{1, 2}` congruent to `j` mod 2.
///
/// Computed with the transfer recurrence `F_N = F_{N-1} + w_N F_{N-2}`,
/// which splits the sum on whether `N` belongs to the subset.
pub fn f_poly_specialized(n: u32, phase: u32) -> Result<LaurentPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    if phase > 1 {
        return Err(Error::InvalidArgument(format!(
            "phase must be 0 or 1, got {phase}"
        )));
    }
    let weight = |k: u32| {
        if (k + phase) % 2 == 1 {
            LaurentPoly::monomial(1, 2, 0)
        } else {
            LaurentPoly::monomial(1, 0, 2)
        }
    };
    let (mut prev, mut cur) = (LaurentPoly::one(), LaurentPoly::one());
    for k in 1..=n {
        let next = &cur + &(&weight(k) * &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}
