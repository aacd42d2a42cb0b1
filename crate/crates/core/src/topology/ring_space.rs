//! The prime spectrum of a finite ring as a [`SpectralSpace`].

use super::{max_subspace_is_t2, SpectralSpace};
use crate::bitset::BitSet;
use crate::error::Result;
use crate::ideal::{jacobson, Ideal, Spectra};
use crate::ring::{Elem, FiniteRing};

/// `Spec R`: points are the prime ideals (in lattice order), ordered by
/// inclusion.
#[derive(Clone, Debug)]
pub struct RingSpace {
    pub primes: Vec<Ideal>,
    pub space: SpectralSpace,
}

pub fn space_from_ring(ring: &FiniteRing, cap: usize) -> Result<RingSpace> {
    let primes = Spectra::compute(ring, cap)?.primes;
    Ok(RingSpace::from_primes(ring, primes))
}

impl RingSpace {
    pub fn from_primes(ring: &FiniteRing, primes: Vec<Ideal>) -> Self {
        let up = primes
            .iter()
            .map(|p| primes.iter().enumerate().filter(|(_, q)| p.is_subset(**q)).map(|(j, _)| j).collect())
            .collect();
        let labels = primes.iter().map(|p| p.to_string()).collect();
        let space = SpectralSpace::from_up_sets(format!("Spec {}", ring.name()), labels, up)
            .expect("inclusion of ideals is a partial order");
        RingSpace { primes, space }
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn index_of(&self, ideal: Ideal) -> Option<usize> {
        self.primes.iter().position(|&p| p == ideal)
    }

    /// `X_f = {P : f ∉ P}`.
    pub fn basic_open(&self, f: Elem) -> BitSet {
        (0..self.len()).filter(|&i| !self.primes[i].contains(f)).collect()
    }

    /// `V_f = {P : f ∈ P}`.
    pub fn basic_closed(&self, f: Elem) -> BitSet {
        (0..self.len()).filter(|&i| self.primes[i].contains(f)).collect()
    }

    /// `V(I) = {P : I ⊆ P}`.
    pub fn vanishing(&self, ideal: Ideal) -> BitSet {
        (0..self.len()).filter(|&i| ideal.is_subset(self.primes[i])).collect()
    }
}

/// The maximal spectrum is Hausdorff, read off the topology of `Spec R`.
pub fn max_is_t2(ring: &FiniteRing, cap: usize) -> Result<bool> {
    Ok(max_subspace_is_t2(&space_from_ring(ring, cap)?.space))
}

/// For every pair of distinct maximal ideals `M ≠ M'` there are `a ∉ M`,
/// `a' ∉ M'` with `a·a' ∈ jac R`.
pub fn gj7m_criterion(ring: &FiniteRing, cap: usize) -> Result<bool> {
    let maximal = Spectra::compute(ring, cap)?.maximal;
    let jac = jacobson(ring, cap)?;
    Ok(maximal.iter().enumerate().all(|(i, m)| {
        maximal.iter().enumerate().all(|(j, m2)| {
            i == j
                || ring.elements().any(|a| {
                    !m.contains(a) && ring.elements().any(|a2| !m2.contains(a2) && jac.contains(ring.mul(a, a2)))
                })
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_product, make_zn};

    #[test]
    fn spaces_of_small_rings() {
        let z6 = make_zn(6).unwrap();
        let s = space_from_ring(&z6, 64).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.space.is_antichain());
        assert_eq!(space_from_ring(&make_zn(4).unwrap(), 64).unwrap().len(), 1);
        let z2 = make_zn(2).unwrap();
        let cube = make_product(&z2, &make_product(&z2, &z2).unwrap()).unwrap();
        let s = space_from_ring(&cube, 64).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.space.is_antichain());
    }

    #[test]
    fn basic_sets() {
        let z6 = make_zn(6).unwrap();
        let s = space_from_ring(&z6, 64).unwrap();
        // primes: (3) = {0,3}, (2) = {0,2,4}
        assert_eq!(s.basic_open(2).to_vec(), vec![0]);
        assert_eq!(s.basic_closed(2).to_vec(), vec![1]);
        assert_eq!(s.basic_open(1), s.space.all());
        assert_eq!(s.basic_open(0), BitSet::EMPTY);
    }

    #[test]
    fn up_sets_are_vanishing_loci_and_down_sets_unions_of_basic_opens() {
        let z2 = make_zn(2).unwrap();
        for r in [make_zn(30).unwrap(), make_product(&z2, &make_zn(6).unwrap()).unwrap(), make_zn(8).unwrap()] {
            let s = space_from_ring(&r, 64).unwrap();
            let basics: Vec<BitSet> = r.elements().map(|f| s.basic_open(f)).collect();
            for pts in s.space.all().subsets() {
                if s.space.is_closed(pts) {
                    let meet = pts.iter().fold(Ideal::whole(&r), |acc, i| acc.meet(s.primes[i]));
                    assert_eq!(s.vanishing(meet), pts);
                }
                if s.space.is_open(pts) {
                    let union = basics.iter().filter(|b| b.is_subset(pts)).fold(BitSet::EMPTY, |a, &b| a | b);
                    assert_eq!(union, pts);
                }
            }
        }
    }

    #[test]
    fn hausdorff_criteria() {
        for r in [make_zn(6).unwrap(), make_zn(4).unwrap(), make_product(&make_zn(2).unwrap(), &make_zn(2).unwrap()).unwrap()] {
            assert!(max_is_t2(&r, 64).unwrap());
            assert!(gj7m_criterion(&r, 64).unwrap());
        }
    }
}
