//! Two runners on a unit circular track.
//!
//! A runner of speed `m` is *distant* at time `t` when `‖m t‖ ≥ 1/(k+1)`,
//! `‖x‖` being the distance from `x` to the nearest integer. Restricting
//! `t` to `a/Q` with `(k+1)m | Q` turns the distant times into one cyclic
//! interval of residues modulo `Q/m`. For two runners and `Q = 3mn` the two
//! intervals have density above one third, so they share a solution.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::bounds::density_guarantee;
use crate::collections::{smallest_interval_solution, CyclicInterval};
use crate::congruence::gcd;
use crate::error::{Error, Result};

/// Two distinct positive speeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RunnerPair {
    speed_m: u64,
    speed_n: u64,
}

impl RunnerPair {
    pub fn new(speed_m: u64, speed_n: u64) -> Result<Self> {
        if speed_m == 0 || speed_n == 0 {
            return Err(Error::ZeroSpeed);
        }
        if speed_m == speed_n {
            return Err(Error::EqualSpeeds(speed_m));
        }
        Ok(RunnerPair { speed_m, speed_n })
    }

    pub fn speed_m(&self) -> u64 {
        self.speed_m
    }

    pub fn speed_n(&self) -> u64 {
        self.speed_n
    }
}

/// A time on the track, `numerator/denominator` in lowest terms and in `[0, 1)`.
///
/// Integer speeds make every runner's position periodic with period 1, so the
/// constructor reduces the numerator modulo the denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalTime {
    numerator: u64,
    denominator: u64,
}

impl RationalTime {
    pub fn new(numerator: u64, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::ZeroModulus);
        }
        let numerator = numerator % denominator;
        let g = gcd(numerator, denominator);
        Ok(RationalTime {
            numerator: numerator / g,
            denominator: denominator / g,
        })
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn as_ratio(&self) -> Ratio<u64> {
        Ratio::new_raw(self.numerator, self.denominator)
    }

    /// `‖speed · t‖`, computed without forming `speed · numerator` in 64 bits.
    pub fn distance_at_speed(&self, speed: u64) -> Ratio<u64> {
        let scaled = (speed as u128 * self.numerator as u128) % self.denominator as u128;
        circle_distance(Ratio::new_raw(scaled as u64, self.denominator))
    }
}

impl fmt::Display for RationalTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// Distance from `x` to the nearest integer, exactly; always in `[0, 1/2]`.
pub fn circle_distance(x: Ratio<u64>) -> Ratio<u64> {
    let (num, den) = (*x.numer(), *x.denom());
    let frac = num % den;
    Ratio::new(frac.min(den - frac), den)
}

/// The distance threshold `1/(k+1)`.
pub fn distance_threshold(k: u64) -> Ratio<u64> {
    Ratio::new(1, k + 1)
}

/// Residues `r` modulo `q = Q/speed` with `‖r/q‖ ≥ 1/(k+1)`: the interval
/// starting at `q/(k+1)` of length `(k-1)q/(k+1) + 1`.
pub fn distant_interval(speed: u64, big_q: u64, k: u64) -> Result<CyclicInterval> {
    if speed == 0 {
        return Err(Error::ZeroSpeed);
    }
    if k < 2 {
        return Err(Error::TooFewRunners(k));
    }
    let required = (k + 1)
        .checked_mul(speed)
        .ok_or(Error::Overflow("(k+1)*speed"))?;
    if big_q == 0 || !big_q.is_multiple_of(required) {
        return Err(Error::Divisibility { q: big_q, required });
    }
    let q = big_q / speed;
    let start = q / (k + 1);
    CyclicInterval::new(q, start, q - 2 * start + 1)
}

/// A time at which both runners are distant, with the exact distances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistantWitness {
    pub time: RationalTime,
    /// Numerator over `big_q` before reduction to lowest terms.
    pub raw_numerator: u64,
    pub big_q: u64,
    pub distance_m: Ratio<u64>,
    pub distance_n: Ratio<u64>,
}

/// Finds the smallest `x` with both runners distant at `t = x/(3mn)`.
pub fn two_runner_witness(pair: RunnerPair) -> Result<DistantWitness> {
    let (m, n) = (pair.speed_m, pair.speed_n);
    let big_q = 3u64
        .checked_mul(m)
        .and_then(|v| v.checked_mul(n))
        .ok_or(Error::Overflow("Q = 3mn"))?;
    let a = distant_interval(m, big_q, 2)?;
    let b = distant_interval(n, big_q, 2)?;
    // |A| = n+1 > 3n/3 and |B| = m+1 > 3m/3 with 3n != 3m
    debug_assert!(density_guarantee(
        a.modulus(),
        b.modulus(),
        a.len(),
        b.len()
    ));
    let solution = smallest_interval_solution(&a, &b)?
        .expect("intervals above one third density with distinct moduli always meet");
    let x = solution.residue;
    let time = RationalTime::new(x, big_q)?;
    Ok(DistantWitness {
        time,
        raw_numerator: x,
        big_q,
        distance_m: time.distance_at_speed(m),
        distance_n: time.distance_at_speed(n),
    })
}
