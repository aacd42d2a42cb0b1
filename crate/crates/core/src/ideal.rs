//! Ideals of a finite ring: generation, the full lattice, radicals and the
//! distinguished families of prime ideals.
//!
//! An [`Ideal`] is just its member mask; every operation takes the ring it
//! lives in explicitly.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{cap_check, Error, Result};
use crate::ring::{Elem, FiniteRing};

/// Default size limit for lattice enumeration.
pub const DEFAULT_IDEAL_CAP: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ideal(BitSet);

impl Ideal {
    /// Validates `members` against the ideal axioms.
    pub fn new(ring: &FiniteRing, members: BitSet) -> Result<Self> {
        if is_ideal(ring, members) {
            Ok(Ideal(members))
        } else {
            Err(Error::NotAnIdeal(format!("{members} in {}", ring.name())))
        }
    }

    pub(crate) fn from_members_unchecked(members: BitSet) -> Self {
        Ideal(members)
    }

    pub fn zero(ring: &FiniteRing) -> Self {
        Ideal(BitSet::singleton(ring.zero()))
    }

    pub fn whole(ring: &FiniteRing) -> Self {
        Ideal(ring.all())
    }

    pub fn members(self) -> BitSet {
        self.0
    }

    pub fn contains(self, a: Elem) -> bool {
        self.0.contains(a)
    }

    pub fn is_subset(self, other: Ideal) -> bool {
        self.0.is_subset(other.0)
    }

    pub fn is_proper(self, ring: &FiniteRing) -> bool {
        !self.0.contains(ring.one())
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    /// `I ∩ J`.
    pub fn meet(self, other: Ideal) -> Ideal {
        Ideal(self.0 & other.0)
    }

    /// `I + J`.
    pub fn join(self, ring: &FiniteRing, other: Ideal) -> Ideal {
        Ideal(ring.additive_closure(self.0 | other.0))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self.0)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

pub fn is_ideal(ring: &FiniteRing, set: BitSet) -> bool {
    set.is_subset(ring.all())
        && set.contains(ring.zero())
        && set.iter().all(|x| {
            set.iter().all(|y| set.contains(ring.add(x, y))) && ring.elements().all(|r| set.contains(ring.mul(r, x)))
        })
}

/// The smallest ideal containing `gens`.
pub fn ideal_generated(ring: &FiniteRing, gens: BitSet) -> Ideal {
    let mut multiples = BitSet::EMPTY;
    for g in gens.iter() {
        for r in ring.elements() {
            multiples.insert(ring.mul(r, g));
        }
    }
    Ideal(ring.additive_closure(multiples))
}

/// The complete ideal lattice, as the join-closure of the principal ideals.
/// Sorted by size, then by mask.
pub fn enumerate_ideals(ring: &FiniteRing, cap: usize) -> Result<Vec<Ideal>> {
    cap_check("ring for ideal enumeration", ring.size(), cap)?;
    let principal: BTreeSet<Ideal> = ring.elements().map(|a| ideal_generated(ring, BitSet::singleton(a))).collect();
    let mut lattice = principal.clone();
    let mut frontier: Vec<Ideal> = principal.iter().copied().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &i in &frontier {
            for &p in &principal {
                let s = i.join(ring, p);
                if lattice.insert(s) {
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<Ideal> = lattice.into_iter().collect();
    all.sort_by_key(|i| (i.len(), *i));
    Ok(all)
}

/// Whether `a^k ∈ I` for some `k >= 1`, by walking the power sequence until
/// it revisits an element.
pub fn in_radical(ring: &FiniteRing, ideal: Ideal, a: Elem) -> bool {
    let mut seen = BitSet::EMPTY;
    let mut x = a;
    loop {
        if ideal.contains(x) {
            return true;
        }
        if !seen.insert(x) {
            return false;
        }
        x = ring.mul(x, a);
    }
}

pub fn radical(ring: &FiniteRing, ideal: Ideal) -> Ideal {
    Ideal(ring.elements().filter(|&a| in_radical(ring, ideal, a)).collect())
}

pub fn is_prime(ring: &FiniteRing, ideal: Ideal) -> bool {
    ideal.is_proper(ring)
        && ring.elements().all(|a| {
            ideal.contains(a) || ring.elements().all(|b| ideal.contains(b) || !ideal.contains(ring.mul(a, b)))
        })
}

/// Proper, and adjoining any outside element generates the whole ring.
pub fn is_maximal(ring: &FiniteRing, ideal: Ideal) -> bool {
    ideal.is_proper(ring)
        && (ring.all() - ideal.members())
            .iter()
            .all(|x| ideal_generated(ring, ideal.members().with(x)).members() == ring.all())
}

/// Prime, maximal and minimal-prime ideals of a ring, read off its lattice.
#[derive(Clone, Debug)]
pub struct Spectra {
    pub ideals: Vec<Ideal>,
    pub primes: Vec<Ideal>,
    pub maximal: Vec<Ideal>,
    pub minimal: Vec<Ideal>,
}

impl Spectra {
    pub fn compute(ring: &FiniteRing, cap: usize) -> Result<Self> {
        let ideals = enumerate_ideals(ring, cap)?;
        let proper: Vec<Ideal> = ideals.iter().copied().filter(|i| i.is_proper(ring)).collect();
        let primes: Vec<Ideal> = proper.iter().copied().filter(|&i| is_prime(ring, i)).collect();
        let maximal = proper
            .iter()
            .copied()
            .filter(|&m| !proper.iter().any(|&j| m.members().is_proper_subset(j.members())))
            .collect();
        let minimal = primes
            .iter()
            .copied()
            .filter(|&p| !primes.iter().any(|&q| q.members().is_proper_subset(p.members())))
            .collect();
        Ok(Spectra { ideals, primes, maximal, minimal })
    }
}

pub fn spectrum(ring: &FiniteRing, cap: usize) -> Result<Vec<Ideal>> {
    Ok(Spectra::compute(ring, cap)?.primes)
}

pub fn maximal_spectrum(ring: &FiniteRing, cap: usize) -> Result<Vec<Ideal>> {
    Ok(Spectra::compute(ring, cap)?.maximal)
}

pub fn minimal_spectrum(ring: &FiniteRing, cap: usize) -> Result<Vec<Ideal>> {
    Ok(Spectra::compute(ring, cap)?.minimal)
}

pub fn nilradical(ring: &FiniteRing) -> Ideal {
    radical(ring, Ideal::zero(ring))
}

fn intersect_all(ring: &FiniteRing, ideals: impl IntoIterator<Item = Ideal>) -> Ideal {
    ideals.into_iter().fold(Ideal::whole(ring), Ideal::meet)
}

/// Intersection of the maximal ideals.
pub fn jacobson(ring: &FiniteRing, cap: usize) -> Result<Ideal> {
    Ok(intersect_all(ring, maximal_spectrum(ring, cap)?))
}

/// Intersection of the primes contained in `m`; `m` must be maximal.
pub fn o_m(ring: &FiniteRing, m: Ideal, cap: usize) -> Result<Ideal> {
    if !is_ideal(ring, m.members()) || !is_maximal(ring, m) {
        return Err(Error::InvalidArgument(format!("{m} is not a maximal ideal of {}", ring.name())));
    }
    let primes = spectrum(ring, cap)?;
    Ok(intersect_all(ring, primes.into_iter().filter(|p| p.is_subset(m))))
}

/// Intersection of the primes containing `ideal`.
pub fn hull_intersection(ring: &FiniteRing, ideal: Ideal, primes: &[Ideal]) -> Ideal {
    intersect_all(ring, primes.iter().copied().filter(|p| ideal.is_subset(*p)))
}
