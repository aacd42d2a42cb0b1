//! Finite spectral spaces as posets under specialization.
//!
//! A point `q` lies in the closure of `p` exactly when `p ≤ q` (for prime
//! ideals: `p ⊆ q`). Closed sets are the up-sets and open sets the down-sets
//! of this order.
//!
//! For the spectrum of a finite ring this Alexandrov topology is the Zariski
//! topology. Every Zariski-closed set `V(I)` is an up-set, and conversely an
//! up-set `S` of primes equals `V(∩S)`: a prime containing a finite
//! intersection of primes contains one of them, hence lies in `S`. Finite
//! unions of basic opens `X_f` therefore give every down-set, which is
//! checked directly in [`ring_space`].

mod maps;
mod posets;
mod predicates;
pub mod ring_space;
mod text;

use std::fmt;

use crate::bitset::{BitSet, MAX_BITS};
use crate::error::{Error, Result};

pub use maps::{MapProps, SpectralMap};
pub use posets::{canonical_code, enumerate_posets, LABELED_POSET_COUNTS, MAX_ENUMERATED_POSET};
pub use predicates::{
    continuous_retractions, is_cn_chain, is_completely_normal_topological, is_normal_topological, is_pm,
    is_weak_cn, maxima_have_closed_generalizations, max_subspace_is_t2, mu_retraction, pm_failure,
    weak_cn_by_maximal_points, PmFailure, DEFAULT_CN_CAP, DEFAULT_NORMAL_CAP,
};
pub use ring_space::{gj7m_criterion, max_is_t2, space_from_ring, RingSpace};
pub use text::{parse_poset, write_poset};

#[derive(Clone, PartialEq, Eq)]
pub struct SpectralSpace {
    name: String,
    labels: Vec<String>,
    // up[i] = { j : i ≤ j } = cl{i}
    up: Vec<BitSet>,
    // down[i] = { j : j ≤ i }, the smallest open set containing i
    down: Vec<BitSet>,
}

impl SpectralSpace {
    /// Builds a space from the closures `up[i] = cl{i}`, checking that they
    /// describe a partial order.
    pub fn from_up_sets(name: impl Into<String>, labels: Vec<String>, up: Vec<BitSet>) -> Result<Self> {
        let n = up.len();
        if n > MAX_BITS {
            return Err(Error::CapExceeded { what: "spectral space", size: n, cap: MAX_BITS });
        }
        if labels.len() != n {
            return Err(Error::InvalidOrder(format!("{} labels for {n} points", labels.len())));
        }
        let all = BitSet::full(n);
        for i in 0..n {
            if !up[i].is_subset(all) {
                return Err(Error::InvalidOrder(format!("point {i} relates to points outside the space")));
            }
            if !up[i].contains(i) {
                return Err(Error::InvalidOrder(format!("not reflexive at {i}")));
            }
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(Error::InvalidOrder(format!("antisymmetry fails for {i} and {j}")));
                }
                if !up[j].is_subset(up[i]) {
                    return Err(Error::InvalidOrder(format!("not transitive through {i} <= {j}")));
                }
            }
        }
        let down = (0..n).map(|j| (0..n).filter(|&i| up[i].contains(j)).collect()).collect();
        Ok(SpectralSpace { name: name.into(), labels, up, down })
    }

    /// The partial order generated by the strict relations `i < j`, closed
    /// transitively. Cycles are rejected.
    pub fn from_relations(name: impl Into<String>, n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_BITS {
            return Err(Error::CapExceeded { what: "spectral space", size: n, cap: MAX_BITS });
        }
        let mut up: Vec<BitSet> = (0..n).map(BitSet::singleton).collect();
        for &(i, j) in relations {
            if i >= n || j >= n {
                return Err(Error::InvalidOrder(format!("relation ({i},{j}) out of range for {n} points")));
            }
            if i == j {
                return Err(Error::InvalidOrder(format!("strict relation {i} < {i}")));
            }
            up[i].insert(j);
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    up[i] = up[i] | up[k];
                }
            }
        }
        for i in 0..n {
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(Error::InvalidOrder(format!("relations force {i} = {j} (antisymmetry)")));
                }
            }
        }
        Self::from_up_sets(name, default_labels(n), up)
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_relations(format!("antichain{n}"), n, &[]).expect("antichain is a partial order")
    }

    /// `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        let rel: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_relations(format!("chain{n}"), n, &rel).expect("chain is a partial order")
    }

    /// One point `b` specializing to two closed points `m1`, `m2`.
    pub fn v_poset() -> Self {
        let s = Self::from_relations("V", 3, &[(0, 1), (0, 2)]).expect("V is a partial order");
        s.with_labels(["b", "m1", "m2"])
    }

    /// Two points `m1`, `m2` with a single common specialization `t`.
    pub fn lambda_poset() -> Self {
        let s = Self::from_relations("Lambda", 3, &[(0, 2), (1, 2)]).expect("Lambda is a partial order");
        s.with_labels(["m1", "m2", "t"])
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        assert_eq!(labels.len(), self.len());
        self.labels = labels;
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn all(&self) -> BitSet {
        BitSet::full(self.len())
    }

    /// `i ≤ j`, i.e. `j ∈ cl{i}`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// `cl{i}`.
    pub fn up(&self, i: usize) -> BitSet {
        self.up[i]
    }

    /// The smallest open set containing `i`.
    pub fn down(&self, i: usize) -> BitSet {
        self.down[i]
    }

    /// Topological closure: the up-closure of `pts`.
    pub fn closure(&self, pts: BitSet) -> BitSet {
        pts.iter().fold(BitSet::EMPTY, |acc, i| acc | self.up[i])
    }

    /// The smallest open set containing `pts`: its down-closure.
    pub fn open_hull(&self, pts: BitSet) -> BitSet {
        pts.iter().fold(BitSet::EMPTY, |acc, i| acc | self.down[i])
    }

    pub fn is_closed(&self, pts: BitSet) -> bool {
        self.closure(pts) == pts
    }

    pub fn is_open(&self, pts: BitSet) -> bool {
        self.open_hull(pts) == pts
    }

    /// Closed points: the maximal elements of the order.
    pub fn maximal_points(&self) -> BitSet {
        (0..self.len()).filter(|&i| self.up[i].len() == 1).collect()
    }

    /// Generic points: the minimal elements.
    pub fn minimal_points(&self) -> BitSet {
        (0..self.len()).filter(|&i| self.down[i].len() == 1).collect()
    }

    pub fn is_antichain(&self) -> bool {
        self.up.iter().all(|u| u.len() == 1)
    }

    /// Strict relations `i < j` in lexicographic order.
    pub fn strict_relations(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.up[i].iter().filter(move |&j| j != i).map(move |j| (i, j)))
            .collect()
    }

    /// The subspace on `pts` with the restricted order, plus the map from
    /// subspace indices back to indices of `self`.
    pub fn subspace(&self, pts: BitSet, name: impl Into<String>) -> (SpectralSpace, Vec<usize>) {
        let back = pts.to_vec();
        let mut local = vec![usize::MAX; self.len()];
        for (k, &i) in back.iter().enumerate() {
            local[i] = k;
        }
        let up = back.iter().map(|&i| (self.up[i] & pts).iter().map(|j| local[j]).collect()).collect();
        let labels = back.iter().map(|&i| self.labels[i].clone()).collect();
        let sub = SpectralSpace::from_up_sets(name, labels, up).expect("restriction of a partial order");
        (sub, back)
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

impl fmt::Debug for SpectralSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpectralSpace({}, {} points, <: {:?})", self.name, self.len(), self.strict_relations())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> BitSet {
        v.iter().copied().collect()
    }

    #[test]
    fn closures() {
        let a = SpectralSpace::antichain(3);
        assert_eq!(a.closure(set(&[1])), set(&[1]));
        let c = SpectralSpace::chain(3);
        assert_eq!(c.closure(set(&[0])), set(&[0, 1, 2]));
        let l = SpectralSpace::lambda_poset();
        assert_eq!(l.closure(set(&[0])), set(&[0, 2]));
        assert_eq!(l.open_hull(set(&[2])), set(&[0, 1, 2]));
        assert!(l.is_closed(set(&[2])) && l.is_open(set(&[0])));
    }

    #[test]
    fn order_validation() {
        assert!(SpectralSpace::from_relations("cyc", 2, &[(0, 1), (1, 0)]).is_err());
        assert!(SpectralSpace::from_relations("loop", 2, &[(1, 1)]).is_err());
        let t = SpectralSpace::from_relations("t", 3, &[(0, 1), (1, 2)]).unwrap();
        assert!(t.leq(0, 2));
        let bad = vec![set(&[0, 1]), set(&[1, 2]), set(&[2])];
        assert!(SpectralSpace::from_up_sets("nt", default_labels(3), bad).is_err());
    }

    #[test]
    fn extremal_points_and_subspaces() {
        let v = SpectralSpace::v_poset();
        assert_eq!(v.maximal_points(), set(&[1, 2]));
        assert_eq!(v.minimal_points(), set(&[0]));
        let (sub, back) = v.subspace(set(&[1, 2]), "max");
        assert!(sub.is_antichain());
        assert_eq!(back, vec![1, 2]);
        assert_eq!(sub.labels(), &["m1".to_string(), "m2".to_string()]);
    }
}
