//! Collections of residue classes and exact solution counting.
//!
//! For collections `A` (mod `m`) and `B` (mod `n`) with `g = gcd(m, n)`, the
//! pair `(a, b)` yields a solution modulo `mn/g` exactly when `a ≡ b (mod g)`.
//! Bucketing both collections by residue mod `g` therefore gives the count
//! `h = Σ_i f(i, A) · f(i, B)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::congruence::{gcd, lcm, solve_pair, SolutionClass};
use crate::error::{Error, Result};

/// Largest `mn/g` that [`enumerate_solutions`] scans by default.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// An arbitrary set of residues modulo `modulus`, stored sorted and distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidueSet {
    modulus: u64,
    members: Vec<u64>,
}

impl ResidueSet {
    /// Builds a set from canonical residues; each must lie in `[0, modulus)`
    /// and appear once.
    pub fn new(modulus: u64, members: impl IntoIterator<Item = u64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let mut members: Vec<u64> = members.into_iter().collect();
        if let Some(&residue) = members.iter().find(|&&r| r >= modulus) {
            return Err(Error::ResidueOutOfRange { residue, modulus });
        }
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateResidue { residue: w[0] });
        }
        Ok(ResidueSet { modulus, members })
    }

    /// Like [`ResidueSet::new`] but reduces arbitrary integers mod `modulus`
    /// first. Two inputs landing on the same class are still a duplicate.
    pub fn from_integers(modulus: u64, values: impl IntoIterator<Item = i64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let m = modulus as i128;
        Self::new(
            modulus,
            values.into_iter().map(|v| (v as i128).rem_euclid(m) as u64),
        )
    }

    pub fn empty(modulus: u64) -> Result<Self> {
        Self::new(modulus, std::iter::empty())
    }

    pub fn full(modulus: u64) -> Result<Self> {
        Self::new(modulus, 0..modulus)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, residue: u64) -> bool {
        self.members.binary_search(&residue).is_ok()
    }
}

/// A contiguous arc `{start, start+1, ..., start+length-1}` of residues mod
/// `modulus`, wrapping past `modulus - 1` back to `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclicInterval {
    modulus: u64,
    start: u64,
    length: u64,
}

impl CyclicInterval {
    /// `start` is reduced mod `modulus`; `length` may be anything in `0..=modulus`.
    pub fn new(modulus: u64, start: u64, length: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if length > modulus {
            return Err(Error::IntervalTooLong { length, modulus });
        }
        Ok(CyclicInterval {
            modulus,
            start: start % modulus,
            length,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn len(&self) -> u64 {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        self.length == 0
    }

    pub fn contains(&self, residue: u64) -> bool {
        if residue >= self.modulus {
            return false;
        }
        self.offset_of(residue) < self.length
    }

    /// Steps from `start` to `residue` going forward, for `residue < modulus`.
    fn offset_of(&self, residue: u64) -> u64 {
        if residue >= self.start {
            residue - self.start
        } else {
            residue + (self.modulus - self.start)
        }
    }

    /// Members in interval order, starting at `start`.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.length).map(move |i| {
            let r = self.start as u128 + i as u128;
            (r % self.modulus as u128) as u64
        })
    }
}

impl fmt::Display for CyclicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{} (mod {})", self.start, self.length, self.modulus)
    }
}

impl fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, r) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}} (mod {})", self.modulus)
    }
}

/// Either kind of collection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ResidueCollection {
    Set(ResidueSet),
    Interval(CyclicInterval),
}

impl ResidueCollection {
    pub fn modulus(&self) -> u64 {
        match self {
            ResidueCollection::Set(s) => s.modulus(),
            ResidueCollection::Interval(iv) => iv.modulus(),
        }
    }

    pub fn len(&self) -> u64 {
        match self {
            ResidueCollection::Set(s) => s.len(),
            ResidueCollection::Interval(iv) => iv.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, residue: u64) -> bool {
        match self {
            ResidueCollection::Set(s) => s.contains(residue),
            ResidueCollection::Interval(iv) => iv.contains(residue),
        }
    }

    /// Sorted member list.
    pub fn to_set(&self) -> ResidueSet {
        match self {
            ResidueCollection::Set(s) => s.clone(),
            ResidueCollection::Interval(iv) => interval_members(iv),
        }
    }

    fn membership_table(&self) -> Vec<bool> {
        let mut table = vec![false; self.modulus() as usize];
        match self {
            ResidueCollection::Set(s) => s.members().iter().for_each(|&r| table[r as usize] = true),
            ResidueCollection::Interval(iv) => iv.iter().for_each(|r| table[r as usize] = true),
        }
        table
    }
}

impl From<ResidueSet> for ResidueCollection {
    fn from(s: ResidueSet) -> Self {
        ResidueCollection::Set(s)
    }
}

impl From<CyclicInterval> for ResidueCollection {
    fn from(iv: CyclicInterval) -> Self {
        ResidueCollection::Interval(iv)
    }
}

impl fmt::Display for ResidueCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidueCollection::Set(s) => s.fmt(f),
            ResidueCollection::Interval(iv) => iv.fmt(f),
        }
    }
}

/// The counting function `f(i, C) = |{c in C : c ≡ i (mod g)}|` for `i` in `[0, g)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResiduePartitionCount {
    pub divisor: u64,
    pub counts: Vec<u64>,
}

impl ResiduePartitionCount {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Buckets a collection by residue mod `divisor`, which must divide the modulus.
pub fn partition_counts(
    collection: &ResidueCollection,
    divisor: u64,
) -> Result<ResiduePartitionCount> {
    let modulus = collection.modulus();
    if divisor == 0 || !modulus.is_multiple_of(divisor) {
        return Err(Error::DivisorMismatch { divisor, modulus });
    }
    let counts = match collection {
        ResidueCollection::Set(s) => {
            let mut counts = vec![0u64; divisor as usize];
            for &r in s.members() {
                counts[(r % divisor) as usize] += 1;
            }
            counts
        }
        ResidueCollection::Interval(iv) => {
            // Every class gets len/g members; the len%g classes following
            // start (mod g) get one more.
            let (q, r) = (iv.len() / divisor, iv.len() % divisor);
            let base = iv.start() % divisor;
            (0..divisor)
                .map(|i| {
                    let offset = (i + divisor - base) % divisor;
                    q + u64::from(offset < r)
                })
                .collect()
        }
    };
    Ok(ResiduePartitionCount { divisor, counts })
}

/// Number of solutions modulo `mn/g` of `x ≡ a (mod m), x ≡ b (mod n)` as
/// `(a, b)` ranges over `A × B`.
pub fn exact_count(a: &ResidueCollection, b: &ResidueCollection) -> Result<u64> {
    let (m, n) = (a.modulus(), b.modulus());
    lcm(m, n)?;
    let g = gcd(m, n);
    let fa = partition_counts(a, g)?;
    let fb = partition_counts(b, g)?;
    fa.counts
        .iter()
        .zip(&fb.counts)
        .try_fold(0u64, |acc, (&x, &y)| {
            x.checked_mul(y)
                .and_then(|p| acc.checked_add(p))
                .ok_or(Error::Overflow("solution count"))
        })
}

/// Brute-force oracle: every `x` in `[0, lcm(m, n))` whose residues land in
/// both collections, scanned directly. Refuses when `lcm(m, n) > cap`.
pub fn enumerate_solutions_capped(
    a: &ResidueCollection,
    b: &ResidueCollection,
    cap: u64,
) -> Result<Vec<SolutionClass>> {
    let (m, n) = (a.modulus(), b.modulus());
    let modulus = lcm(m, n)?;
    if modulus > cap {
        return Err(Error::EnumerationCap {
            needed: modulus,
            cap,
        });
    }
    let (ta, tb) = (a.membership_table(), b.membership_table());
    Ok((0..modulus)
        .filter(|&x| ta[(x % m) as usize] && tb[(x % n) as usize])
        .map(|residue| SolutionClass { residue, modulus })
        .collect())
}

/// [`enumerate_solutions_capped`] with [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_solutions(
    a: &ResidueCollection,
    b: &ResidueCollection,
) -> Result<Vec<SolutionClass>> {
    enumerate_solutions_capped(a, b, DEFAULT_ENUMERATION_CAP)
}

/// Smallest solution over `A × B`, found by solving each compatible pair.
/// Cost is `|A|·|B|` merges rather than a scan of `[0, mn/g)`.
pub fn smallest_solution(
    a: &ResidueCollection,
    b: &ResidueCollection,
) -> Result<Option<SolutionClass>> {
    let (m, n) = (a.modulus(), b.modulus());
    let g = gcd(m, n);
    let set_b = b.to_set();
    let mut by_class: Vec<Vec<u64>> = vec![Vec::new(); g as usize];
    for &y in set_b.members() {
        by_class[(y % g) as usize].push(y);
    }
    let mut best: Option<SolutionClass> = None;
    for &x in a.to_set().members() {
        for &y in &by_class[(x % g) as usize] {
            if let Some(s) = solve_pair(x, m, y, n)? {
                if best.is_none_or(|b| s.residue < b.residue) {
                    best = Some(s);
                }
            }
        }
    }
    Ok(best)
}

/// Smallest solution for two cyclic intervals without enumerating pairs.
///
/// Walks the blocks `[t·M, (t+1)·M)` of the larger modulus `M`; inside each
/// block that interval is at most two contiguous runs, and the first point
/// of a run landing in the other interval is found in constant time.
/// Cost is `O(lcm(m, n) / max(m, n))`.
pub fn smallest_interval_solution(
    a: &CyclicInterval,
    b: &CyclicInterval,
) -> Result<Option<SolutionClass>> {
    let modulus = lcm(a.modulus(), b.modulus())?;
    if a.is_empty() || b.is_empty() {
        return Ok(None);
    }
    let (outer, inner) = if a.modulus() >= b.modulus() {
        (a, b)
    } else {
        (b, a)
    };
    let big = outer.modulus();
    // runs of the outer interval inside [0, big), in increasing order
    let end = outer.start() + outer.len();
    let runs: Vec<(u64, u64)> = if end <= big {
        vec![(outer.start(), end)]
    } else {
        vec![(0, end - big), (outer.start(), big)]
    };
    let first_in_inner = |lo: u64, hi: u64| -> Option<u64> {
        let offset = inner.offset_of(lo % inner.modulus());
        let x = if offset < inner.len() {
            lo
        } else {
            lo + (inner.modulus() - offset)
        };
        (x < hi).then_some(x)
    };
    for block in 0..modulus / big {
        let base = block * big;
        for &(lo, hi) in &runs {
            if let Some(x) = first_in_inner(base + lo, base + hi) {
                return Ok(Some(SolutionClass {
                    residue: x,
                    modulus,
                }));
            }
        }
    }
    Ok(None)
}

/// Materializes an interval as a sorted set.
pub fn interval_members(iv: &CyclicInterval) -> ResidueSet {
    let mut members: Vec<u64> = iv.iter().collect();
    members.sort_unstable();
    ResidueSet {
        modulus: iv.modulus(),
        members,
    }
}
