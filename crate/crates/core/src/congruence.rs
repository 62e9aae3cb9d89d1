//! Exact integer primitives and the classical k-congruence solver.
//!
//! A system `x ≡ a_i (mod m_i)` is solvable iff `a_i ≡ a_j (mod gcd(m_i, m_j))`
//! for every pair. [`solve`] merges the congruences one at a time with the
//! extended Euclidean algorithm; every product that can grow is checked.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Greatest common divisor, with `gcd(0, 0) = 0`.
pub fn gcd(mut u: u64, mut v: u64) -> u64 {
    while v != 0 {
        let r = u % v;
        u = v;
        v = r;
    }
    u
}

/// Least common multiple of two positive integers, or an overflow error.
pub fn lcm(u: u64, v: u64) -> Result<u64> {
    if u == 0 || v == 0 {
        return Ok(0);
    }
    (u / gcd(u, v)).checked_mul(v).ok_or(Error::Overflow("lcm"))
}

/// Returns `(d, x, y)` with `u*x + v*y = d = gcd(u, v)`.
pub(crate) fn extended_gcd(u: i128, v: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (u, v);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_r, old_s, old_t)
}

/// A single congruence `x ≡ residue (mod modulus)`, residue kept in `[0, modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Congruence {
    residue: u64,
    modulus: u64,
}

impl Congruence {
    /// Builds a congruence, reducing `residue` into `[0, modulus)`.
    pub fn new(residue: i64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let residue = (residue as i128).rem_euclid(modulus as i128) as u64;
        Ok(Congruence { residue, modulus })
    }

    pub fn from_canonical(residue: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(Congruence {
            residue: residue % modulus,
            modulus,
        })
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Whether `x` satisfies this congruence.
    pub fn holds_for(&self, x: u64) -> bool {
        x % self.modulus == self.residue
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x ≡ {} (mod {})", self.residue, self.modulus)
    }
}

/// An ordered, non-empty list of congruences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceSystem {
    congruences: Vec<Congruence>,
}

impl CongruenceSystem {
    pub fn new(congruences: Vec<Congruence>) -> Result<Self> {
        if congruences.is_empty() {
            return Err(Error::EmptySystem);
        }
        Ok(CongruenceSystem { congruences })
    }

    pub fn congruences(&self) -> &[Congruence] {
        &self.congruences
    }

    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    /// lcm of all moduli.
    pub fn lcm(&self) -> Result<u64> {
        self.congruences
            .iter()
            .try_fold(1u64, |acc, c| lcm(acc, c.modulus))
    }
}

/// The residue class solving a system, modulo the lcm of its moduli.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SolutionClass {
    pub residue: u64,
    pub modulus: u64,
}

impl SolutionClass {
    pub fn satisfies(&self, system: &CongruenceSystem) -> bool {
        system.congruences.iter().all(|c| c.holds_for(self.residue))
    }
}

impl fmt::Display for SolutionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x ≡ {} (mod {})", self.residue, self.modulus)
    }
}

/// Pairwise gcd test: true iff every pair agrees modulo the gcd of its moduli.
pub fn is_compatible(system: &CongruenceSystem) -> Result<bool> {
    let cs = &system.congruences;
    if cs.is_empty() {
        return Err(Error::EmptySystem);
    }
    for (i, ci) in cs.iter().enumerate() {
        for cj in &cs[i + 1..] {
            let g = gcd(ci.modulus, cj.modulus);
            if ci.residue % g != cj.residue % g {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Merges two congruences into one modulo their lcm, `None` if incompatible.
fn merge(a: SolutionClass, b: Congruence) -> Result<Option<SolutionClass>> {
    let (m1, m2) = (a.modulus, b.modulus);
    let g = gcd(m1, m2);
    let (r1, r2) = (a.residue as i128, b.residue as i128);
    let diff = r2 - r1;
    if diff % g as i128 != 0 {
        return Ok(None);
    }
    let modulus = lcm(m1, m2)?;
    let step = (m2 / g) as i128;
    let (_, p, _) = extended_gcd(m1 as i128, m2 as i128);
    // m1 * p ≡ g (mod m2), so t = (diff/g) * p moves r1 onto r2.
    let t =
        ((diff / g as i128).rem_euclid(step) as u128 * p.rem_euclid(step) as u128) % step as u128;
    let residue = r1 as u128 + m1 as u128 * t;
    debug_assert!(residue < modulus as u128);
    Ok(Some(SolutionClass {
        residue: residue as u64,
        modulus,
    }))
}

/// Solves the system, returning the unique class modulo the lcm of the
/// moduli, or `Ok(None)` when the pairwise gcd condition fails.
pub fn solve(system: &CongruenceSystem) -> Result<Option<SolutionClass>> {
    let mut iter = system.congruences.iter();
    let first = iter.next().ok_or(Error::EmptySystem)?;
    let mut acc = SolutionClass {
        residue: first.residue,
        modulus: first.modulus,
    };
    for c in iter {
        match merge(acc, *c)? {
            Some(next) => acc = next,
            None => return Ok(None),
        }
    }
    Ok(Some(acc))
}

/// Convenience wrapper for the two-congruence case.
pub fn solve_pair(a: u64, m: u64, b: u64, n: u64) -> Result<Option<SolutionClass>> {
    let system = CongruenceSystem::new(vec![
        Congruence::from_canonical(a, m)?,
        Congruence::from_canonical(b, n)?,
    ])?;
    solve(&system)
}
