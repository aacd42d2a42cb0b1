use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use super::{Elem, FiniteRing, RingHom};
use crate::bitset::BitSet;
use crate::error::{cap_check, Error, Result};

/// Default size limit for [`enumerate_subrings`].
pub const DEFAULT_SUBRING_CAP: usize = 36;

/// A ring `B` together with a unital subring `A ⊆ B`, stored as a mask over
/// the elements of `B`.
#[derive(Clone, Debug)]
pub struct SubringPair {
    ambient: Arc<FiniteRing>,
    member: BitSet,
}

pub fn is_subring(r: &FiniteRing, set: BitSet) -> bool {
    if !set.is_subset(r.all()) || !set.contains(r.zero()) || !set.contains(r.one()) {
        return false;
    }
    set.iter().all(|a| {
        set.contains(r.neg(a)) && set.iter().all(|b| set.contains(r.add(a, b)) && set.contains(r.mul(a, b)))
    })
}

/// Closure of `base ∪ extra` under `+` and `·`, where `base` is already closed.
fn close_from(r: &FiniteRing, base: BitSet, extra: BitSet) -> BitSet {
    let mut closed = base | extra;
    let mut frontier = extra - base;
    while !frontier.is_empty() {
        let mut next = BitSet::EMPTY;
        for a in frontier.iter() {
            for b in closed.iter() {
                for c in [r.add(a, b), r.mul(a, b)] {
                    if !closed.contains(c) {
                        next.insert(c);
                    }
                }
            }
        }
        closed = closed | next;
        frontier = next;
    }
    closed
}

/// The smallest subring of `r` containing `gens`.
pub fn subring_generated(r: &Arc<FiniteRing>, gens: BitSet) -> SubringPair {
    let seed = gens.with(r.zero()).with(r.one());
    let member = close_from(r, BitSet::EMPTY, seed);
    SubringPair { ambient: r.clone(), member }
}

/// Every unital subring of `r`, ordered by size and then by mask.
///
/// The search climbs the subring lattice from the prime subring, adjoining
/// one element at a time. Any subring `T` is reached: starting from a chain
/// `S ⊆ T` one adjoins some `x ∈ T \ S` and the closure stays inside `T`.
/// The result is therefore complete at every size, not just for small rings.
pub fn enumerate_subrings(r: &Arc<FiniteRing>, cap: usize) -> Result<Vec<SubringPair>> {
    cap_check("ring for subring enumeration", r.size(), cap)?;
    let prime = subring_generated(r, BitSet::EMPTY).member;
    let mut seen = BTreeSet::from([prime]);
    let mut queue = VecDeque::from([prime]);
    while let Some(s) = queue.pop_front() {
        for x in (r.all() - s).iter() {
            let t = close_from(r, s, BitSet::singleton(x));
            if seen.insert(t) {
                queue.push_back(t);
            }
        }
    }
    let mut all: Vec<BitSet> = seen.into_iter().collect();
    all.sort_by_key(|m| (m.len(), *m));
    Ok(all.into_iter().map(|member| SubringPair { ambient: r.clone(), member }).collect())
}

impl SubringPair {
    pub fn new(ambient: Arc<FiniteRing>, member: BitSet) -> Result<Self> {
        if !is_subring(&ambient, member) {
            return Err(Error::NotASubring(format!("{member} in {}", ambient.name())));
        }
        Ok(SubringPair { ambient, member })
    }

    /// `A = B`.
    pub fn whole(ambient: Arc<FiniteRing>) -> Self {
        let member = ambient.all();
        SubringPair { ambient, member }
    }

    /// The pair `(inner ⊆ outer)` where `outer` is itself a subring of
    /// `ring`; the ambient of the result is `outer` relabelled as a ring.
    pub fn nested(ring: &Arc<FiniteRing>, outer: BitSet, inner: BitSet) -> Result<Self> {
        let outer_pair = SubringPair::new(ring.clone(), outer)?;
        if !inner.is_subset(outer) {
            return Err(Error::NotASubring(format!("{inner} is not inside {outer}")));
        }
        let (outer_ring, _) = outer_pair.extract();
        let member = outer_pair.to_local(inner);
        SubringPair::new(outer_ring, member)
    }

    pub fn ambient(&self) -> &Arc<FiniteRing> {
        &self.ambient
    }

    pub fn member(&self) -> BitSet {
        self.member
    }

    pub fn is_whole(&self) -> bool {
        self.member == self.ambient.all()
    }

    /// Elements of `A`, in increasing ambient order; position `i` holds the
    /// ambient index of local element `i`.
    pub fn back_map(&self) -> Vec<Elem> {
        self.member.to_vec()
    }

    /// `A` as a standalone ring, plus the local-to-ambient index map.
    pub fn extract(&self) -> (Arc<FiniteRing>, Vec<Elem>) {
        if self.is_whole() {
            return (self.ambient.clone(), self.ambient.elements().collect());
        }
        let back = self.back_map();
        let mut local = vec![usize::MAX; self.ambient.size()];
        for (i, &e) in back.iter().enumerate() {
            local[e] = i;
        }
        let r = &self.ambient;
        let name = format!("{}<{}>", r.name(), self.member);
        let ring = if back.len() == 1 {
            FiniteRing::zero_ring().with_name(name)
        } else {
            FiniteRing::from_fn(
                name,
                back.len(),
                local[r.zero()],
                local[r.one()],
                |a, b| local[r.add(back[a], back[b])],
                |a, b| local[r.mul(back[a], back[b])],
            )
            .expect("a subring of a valid ring is a valid ring")
        };
        (Arc::new(ring), back)
    }

    /// The inclusion `A → B`.
    pub fn inclusion(&self) -> RingHom {
        let (sub, back) = self.extract();
        RingHom::new(sub, self.ambient.clone(), back).expect("inclusion is a homomorphism")
    }

    /// Ambient mask (restricted to `A`) to local mask.
    pub fn to_local(&self, ambient_set: BitSet) -> BitSet {
        self.back_map()
            .iter()
            .enumerate()
            .filter(|(_, &e)| ambient_set.contains(e))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn to_ambient(&self, local_set: BitSet) -> BitSet {
        let back = self.back_map();
        local_set.iter().map(|i| back[i]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_poly_quotient, make_product, make_zn};

    fn brute_force_subrings(r: &Arc<FiniteRing>) -> BTreeSet<BitSet> {
        r.all().subsets().map(|s| subring_generated(r, s).member()).collect()
    }

    #[test]
    fn generated_subrings() {
        let z6 = Arc::new(make_zn(6).unwrap());
        assert_eq!(subring_generated(&z6, BitSet::EMPTY).member(), z6.all());
        let z2 = make_zn(2).unwrap();
        let v = Arc::new(make_product(&z2, &z2).unwrap());
        assert_eq!(subring_generated(&v, BitSet::EMPTY).member().to_vec(), vec![0, 3]);
        let f4 = Arc::new(make_poly_quotient(2, &[1, 1, 1]).unwrap());
        assert_eq!(subring_generated(&f4, BitSet::EMPTY).member().to_vec(), vec![0, 1]);
    }

    #[test]
    fn enumeration_examples() {
        for p in [2, 3, 5, 7] {
            let zp = Arc::new(make_zn(p).unwrap());
            assert_eq!(enumerate_subrings(&zp, 36).unwrap().len(), 1);
        }
        let z2 = make_zn(2).unwrap();
        let v = Arc::new(make_product(&z2, &z2).unwrap());
        let subs: Vec<Vec<usize>> = enumerate_subrings(&v, 36).unwrap().iter().map(|s| s.member().to_vec()).collect();
        assert_eq!(subs, vec![vec![0, 3], vec![0, 1, 2, 3]]);
        let f4 = Arc::new(make_poly_quotient(2, &[1, 1, 1]).unwrap());
        let subs: Vec<Vec<usize>> = enumerate_subrings(&f4, 36).unwrap().iter().map(|s| s.member().to_vec()).collect();
        assert_eq!(subs, vec![vec![0, 1], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn enumeration_matches_subset_closure() {
        let z2 = make_zn(2).unwrap();
        let z4 = make_zn(4).unwrap();
        let rings = [
            make_product(&z2, &make_product(&z2, &z2).unwrap()).unwrap(),
            make_product(&z2, &z4).unwrap(),
            make_poly_quotient(2, &[0, 0, 0, 1]).unwrap(),
            make_poly_quotient(2, &[1, 1, 0, 1]).unwrap(),
            make_product(&make_poly_quotient(2, &[1, 1, 1]).unwrap(), &z2).unwrap(),
            make_product(&z2, &make_product(&z2, &z4).unwrap()).unwrap(),
        ];
        for r in rings {
            let r = Arc::new(r);
            let fast: BTreeSet<BitSet> = enumerate_subrings(&r, 36).unwrap().iter().map(|s| s.member()).collect();
            assert_eq!(fast, brute_force_subrings(&r), "{}", r.name());
        }
    }

    #[test]
    fn cap_refuses() {
        let z40 = Arc::new(make_zn(40).unwrap());
        assert!(matches!(enumerate_subrings(&z40, 36), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn extraction_round_trip() {
        let z2 = make_zn(2).unwrap();
        let r = Arc::new(make_product(&z2, &make_zn(4).unwrap()).unwrap());
        for pair in enumerate_subrings(&r, 36).unwrap() {
            let (sub, back) = pair.extract();
            assert_eq!(sub.size(), pair.member().len());
            let inc = pair.inclusion();
            assert!(inc.is_injective());
            assert_eq!(inc.image(), pair.member());
            assert_eq!(pair.to_ambient(pair.to_local(pair.member())), pair.member());
            assert_eq!(back.len(), sub.size());
        }
    }

    #[test]
    fn nested_pairs() {
        let z2 = make_zn(2).unwrap();
        let r = Arc::new(make_product(&z2, &make_product(&z2, &z2).unwrap()).unwrap());
        let subs = enumerate_subrings(&r, 36).unwrap();
        let diag = subs[0].member();
        for outer in &subs {
            let p = SubringPair::nested(&r, outer.member(), diag).unwrap();
            assert_eq!(p.ambient().size(), outer.member().len());
            assert_eq!(p.member().len(), 2);
        }
        assert!(SubringPair::new(r.clone(), BitSet::singleton(0)).is_err());
    }
}
