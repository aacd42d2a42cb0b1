//! Equational test for complete normality of the spectrum: for all `s, a`
//! there are `x, x'` and `k ≥ 1` with `(s^k − xsa)(s^k − x'(s² − sa)) = 0`.
//!
//! The powers `s, s², s³, …` of an element of an `n`-element ring are
//! eventually periodic with preperiod plus period at most `n`, so every value
//! of `s^k` already occurs for some `k ≤ n`. Scanning `k = 1..=n` is
//! therefore exhaustive, and a search that fails at that bound is reported
//! rather than extended.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{cap_check, Result};
use crate::ring::{Elem, FiniteRing};

pub const DEFAULT_CRITERION_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CnWitness {
    pub s: Elem,
    pub a: Elem,
    pub x: Elem,
    pub x_prime: Elem,
    pub k: usize,
}

impl CnWitness {
    /// The left-hand side, evaluated in factored form.
    pub fn value(&self, ring: &FiniteRing) -> Elem {
        let (s, a) = (self.s, self.a);
        let sk = ring.pow(s, self.k);
        let sa = ring.mul(s, a);
        let left = ring.sub(sk, ring.mul(self.x, sa));
        let right = ring.sub(sk, ring.mul(self.x_prime, ring.sub(ring.mul(s, s), sa)));
        ring.mul(left, right)
    }
}

/// No witness with `k` up to `bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CnSearchFailure {
    pub s: Elem,
    pub a: Elem,
    pub bound: usize,
}

/// First witness in the order `k` ascending, then `x`, then `x'`.
pub fn cn_witness(ring: &FiniteRing, s: Elem, a: Elem) -> std::result::Result<CnWitness, CnSearchFailure> {
    let n = ring.size();
    let sa = ring.mul(s, a);
    let s2_sa = ring.sub(ring.mul(s, s), sa);
    let mut sk = s;
    for k in 1..=n {
        for x in ring.elements() {
            let left = ring.sub(sk, ring.mul(x, sa));
            if let Some(x_prime) = ring.elements().find(|&xp| ring.mul(left, ring.sub(sk, ring.mul(xp, s2_sa))) == ring.zero()) {
                return Ok(CnWitness { s, a, x, x_prime, k });
            }
        }
        sk = ring.mul(sk, s);
    }
    Err(CnSearchFailure { s, a, bound: n })
}

#[derive(Clone, Debug, Serialize)]
pub struct CnTable {
    pub ring: String,
    pub holds: bool,
    /// Indexed by `s·n + a`; complete when `holds`.
    pub witnesses: Vec<CnWitness>,
    pub failures: Vec<CnSearchFailure>,
}

/// Runs [`cn_witness`] on every pair `(s, a)`.
pub fn cn_equational(ring: &FiniteRing, cap: usize) -> Result<CnTable> {
    cap_check("ring for the equational criterion", ring.size(), cap)?;
    let n = ring.size();
    let results: Vec<_> = (0..n * n).into_par_iter().map(|idx| cn_witness(ring, idx / n, idx % n)).collect();
    let mut witnesses = Vec::with_capacity(n * n);
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(w) => witnesses.push(w),
            Err(f) => failures.push(f),
        }
    }
    Ok(CnTable { ring: ring.name().to_string(), holds: failures.is_empty(), witnesses, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_poly_quotient, make_product, make_zn};

    #[test]
    fn witnesses_from_examples() {
        let z4 = make_zn(4).unwrap();
        assert_eq!(cn_witness(&z4, 2, 2).unwrap(), CnWitness { s: 2, a: 2, x: 0, x_prime: 0, k: 1 });
        for r in [make_zn(5).unwrap(), make_zn(6).unwrap()] {
            assert_eq!(cn_witness(&r, 0, 3).unwrap(), CnWitness { s: 0, a: 3, x: 0, x_prime: 0, k: 1 });
            let w = cn_witness(&r, 1, 1).unwrap();
            assert_eq!((w.k, w.x), (1, 1));
        }
    }

    #[test]
    fn tables_hold() {
        let z2 = make_zn(2).unwrap();
        for r in [make_zn(6).unwrap(), make_poly_quotient(2, &[1, 1, 1]).unwrap(), make_product(&z2, &make_zn(4).unwrap()).unwrap()] {
            let t = cn_equational(&r, 16).unwrap();
            assert!(t.holds);
            assert_eq!(t.witnesses.len(), r.size() * r.size());
            assert!(t.witnesses.iter().all(|w| w.value(&r) == r.zero()));
        }
        assert!(cn_equational(&make_zn(17).unwrap(), 16).is_err());
    }
}
