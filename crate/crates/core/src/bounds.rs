//! Density lower bounds for two-congruence systems.
//!
//! Two size decompositions appear below and must not be confused:
//! for arbitrary collections the divisor is `m/g` (resp. `n/g`), for
//! cyclic intervals it is `g` itself. Both go through [`decompose`] with
//! the divisor spelled out at the call site.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::collections::CyclicInterval;
use crate::congruence::gcd;
use crate::error::{Error, Result};

/// `size = quotient * divisor + remainder`, `0 <= remainder < divisor`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeDecomposition {
    pub size: u64,
    pub divisor: u64,
    pub quotient: u64,
    pub remainder: u64,
}

/// Euclidean division of a collection size. `divisor` must be positive.
pub fn decompose(size: u64, divisor: u64) -> SizeDecomposition {
    assert!(divisor > 0, "decompose: divisor must be positive");
    SizeDecomposition {
        size,
        divisor,
        quotient: size / divisor,
        remainder: size % divisor,
    }
}

/// Which branch of the extremal sum applied, by comparing
/// `s = ⌊A/q_A⌋ + ⌊B/q_B⌋ + 1` against the profile length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundCase {
    /// `s < length`: the step profiles never overlap.
    Empty,
    /// `s == length`: a single remainder-times-remainder term.
    Boundary,
    /// `s > length`.
    Overlap,
}

impl fmt::Display for BoundCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundCase::Empty => "empty",
            BoundCase::Boundary => "boundary",
            BoundCase::Overlap => "overlap",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundResult {
    pub lower_bound: u64,
    pub case: BoundCase,
}

/// Returns `(Σ a_k b_{n-k+1}, Σ a_k b_{σ(k)}, Σ a_k b_k)` for sorted `a`, `b`.
///
/// `sigma` is zero-based: `sigma[k]` is the index of `b` paired with `a[k]`.
pub fn rearrangement_bounds(a: &[f64], b: &[f64], sigma: &[usize]) -> Result<(f64, f64, f64)> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if sigma.len() != a.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: sigma.len(),
        });
    }
    let sorted = |v: &[f64]| v.windows(2).all(|w| w[0] <= w[1]);
    if !sorted(a) || !sorted(b) {
        return Err(Error::Unsorted);
    }
    let mut seen = vec![false; sigma.len()];
    for &s in sigma {
        if s >= sigma.len() || std::mem::replace(&mut seen[s], true) {
            return Err(Error::InvalidPermutation(sigma.len()));
        }
    }
    let lower = a.iter().zip(b.iter().rev()).map(|(x, y)| x * y).sum();
    let permuted = a.iter().zip(sigma).map(|(x, &s)| x * b[s]).sum();
    let upper = a.iter().zip(b).map(|(x, y)| x * y).sum();
    Ok((lower, permuted, upper))
}

/// Minimum of `Σ a_k b_{τ(k)}` over all pairings: sort both ascending and
/// pair the largest of one with the smallest of the other.
pub fn rearranged_minimum(a: &[u64], b: &[u64]) -> Result<u64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a.iter()
        .zip(b.iter().rev())
        .try_fold(0u64, |acc, (&x, &y)| {
            x.checked_mul(y)
                .and_then(|p| acc.checked_add(p))
                .ok_or(Error::Overflow("rearranged sum"))
        })
}

/// Non-decreasing step sequence: zeros, then one partial term, then `cap`s.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalProfile {
    pub length: u64,
    pub cap: u64,
    pub values: Vec<u64>,
}

impl ExtremalProfile {
    pub fn sum(&self) -> u64 {
        self.values.iter().sum()
    }
}

fn check_feasible(size: u64, cap: u64, length: u64) -> Result<()> {
    let infeasible = Error::Infeasible { size, cap, length };
    if cap == 0 || length == 0 {
        return Err(infeasible);
    }
    match cap.checked_mul(length) {
        Some(total) if size > total => Err(infeasible),
        _ => Ok(()),
    }
}

/// The extremal distribution of `size` over `length` slots each at most `cap`:
/// with `j = length - ⌊size/cap⌋` (one-based), slots before `j` are 0, slot
/// `j` holds `size mod cap` and slots after `j` hold `cap`.
pub fn extremal_profile(size: u64, cap: u64, length: u64) -> Result<ExtremalProfile> {
    check_feasible(size, cap, length)?;
    let full = size / cap;
    let rem = size % cap;
    let pivot = length - full;
    let values = (1..=length)
        .map(|k| match k.cmp(&pivot) {
            std::cmp::Ordering::Less => 0,
            std::cmp::Ordering::Equal => rem,
            std::cmp::Ordering::Greater => cap,
        })
        .collect();
    Ok(ExtremalProfile {
        length,
        cap,
        values,
    })
}

fn to_u64(v: u128, what: &'static str) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Overflow(what))
}

/// Closed form of `Σ a*_k b*_{length-k+1}` for the two extremal profiles.
pub fn extremal_sum(
    size_a: u64,
    cap_a: u64,
    size_b: u64,
    cap_b: u64,
    length: u64,
) -> Result<BoundResult> {
    check_feasible(size_a, cap_a, length)?;
    check_feasible(size_b, cap_b, length)?;
    let (qa, ra) = (size_a / cap_a, size_a % cap_a);
    let (qb, rb) = (size_b / cap_b, size_b % cap_b);
    let s = qa as u128 + qb as u128 + 1;
    let n = length as u128;
    let (ca, cb) = (cap_a as u128, cap_b as u128);
    let (lower, case) = match s.cmp(&n) {
        std::cmp::Ordering::Less => (0, BoundCase::Empty),
        std::cmp::Ordering::Equal => (ra as u128 * rb as u128, BoundCase::Boundary),
        std::cmp::Ordering::Greater => (
            (s - n - 1) * ca * cb + ra as u128 * cb + rb as u128 * ca,
            BoundCase::Overlap,
        ),
    };
    Ok(BoundResult {
        lower_bound: to_u64(lower, "extremal sum")?,
        case,
    })
}

fn check_sizes(m: u64, n: u64, size_a: u64, size_b: u64) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::ZeroModulus);
    }
    if size_a > m {
        return Err(Error::SizeExceedsModulus {
            size: size_a,
            modulus: m,
        });
    }
    if size_b > n {
        return Err(Error::SizeExceedsModulus {
            size: size_b,
            modulus: n,
        });
    }
    Ok(())
}

/// Lower bound on the solution count for arbitrary collections of the given
/// sizes modulo `m` and `n`.
///
/// With `g = gcd(m, n)`, `|A| = A·(m/g) + r_A` and `|B| = B·(n/g) + r_B`:
/// 0 if `A + B < g - 1`, `r_A·r_B` if `A + B = g - 1`, and otherwise
/// `(A + B - g)·mn/g² + r_A·n/g + r_B·m/g`.
pub fn bound_arbitrary(m: u64, n: u64, size_a: u64, size_b: u64) -> Result<BoundResult> {
    check_sizes(m, n, size_a, size_b)?;
    let g = gcd(m, n);
    let (mg, ng) = (m / g, n / g);
    let da = decompose(size_a, mg);
    let db = decompose(size_b, ng);
    let total = da.quotient as u128 + db.quotient as u128;
    let g = g as u128;
    let (lower, case) = if total + 1 < g {
        (0, BoundCase::Empty)
    } else if total + 1 == g {
        (
            da.remainder as u128 * db.remainder as u128,
            BoundCase::Boundary,
        )
    } else {
        (
            (total - g) * mg as u128 * ng as u128
                + da.remainder as u128 * ng as u128
                + db.remainder as u128 * mg as u128,
            BoundCase::Overlap,
        )
    };
    Ok(BoundResult {
        lower_bound: to_u64(lower, "arbitrary bound")?,
        case,
    })
}

/// Lower bound on the solution count for single cyclic intervals of the
/// given sizes: with `|A| = A·g + r_A`, `|B| = B·g + r_B`,
/// `ABg + A·r_B + B·r_A + max(0, r_A + r_B - g)`.
pub fn bound_intervals(m: u64, n: u64, size_a: u64, size_b: u64) -> Result<u64> {
    check_sizes(m, n, size_a, size_b)?;
    let g = gcd(m, n);
    let da = decompose(size_a, g);
    let db = decompose(size_b, g);
    let (qa, ra) = (da.quotient as u128, da.remainder as u128);
    let (qb, rb) = (db.quotient as u128, db.remainder as u128);
    let g = g as u128;
    let pigeonhole = (ra + rb).saturating_sub(g);
    to_u64(
        qa * qb * g + qa * rb + qb * ra + pigeonhole,
        "interval bound",
    )
}

/// Whether two intervals of these sizes are guaranteed a common solution:
/// `m != n`, `3|A| > m` and `3|B| > n`, compared exactly.
pub fn density_guarantee(m: u64, n: u64, size_a: u64, size_b: u64) -> bool {
    m != n && 3 * size_a as u128 > m as u128 && 3 * size_b as u128 > n as u128
}

/// Intervals of density exactly one third with no common solution:
/// `A = {0..M-1}` mod `3M` and `B = {M..3M-1}` mod `6M`.
pub fn tightness_instance(big_m: u64) -> Result<(CyclicInterval, CyclicInterval)> {
    if big_m == 0 {
        return Err(Error::ZeroModulus);
    }
    let m = big_m.checked_mul(3).ok_or(Error::Overflow("3M"))?;
    let n = big_m.checked_mul(6).ok_or(Error::Overflow("6M"))?;
    m.checked_mul(n).ok_or(Error::Overflow("18M^2"))?;
    Ok((
        CyclicInterval::new(m, 0, big_m)?,
        CyclicInterval::new(n, big_m, 2 * big_m)?,
    ))
}
