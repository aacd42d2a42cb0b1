//! Enumeration of labeled finite posets.

use super::SpectralSpace;
use crate::bitset::BitSet;
use crate::error::{cap_check, Result};

pub const MAX_ENUMERATED_POSET: usize = 6;

/// Number of partial orders on `n` labeled points, `n = 0..=6` (OEIS A001035).
pub const LABELED_POSET_COUNTS: [usize; 7] = [1, 1, 3, 19, 219, 4231, 130023];

/// Every partial order on `n` labeled points.
///
/// Point `k` is added to each order on `0..k` by choosing its strict
/// down-set `D` (a down-set) and strict up-set `U` (an up-set) with
/// `D ∩ U = ∅` and `d ≤ u` for all `d ∈ D`, `u ∈ U`. Each labeled order
/// arises exactly once this way, since restricting an order on `0..=k` to
/// `0..k` recovers the parent.
pub fn enumerate_posets(n: usize) -> Result<Vec<SpectralSpace>> {
    cap_check("labeled poset enumeration", n, MAX_ENUMERATED_POSET)?;
    let mut layer: Vec<Vec<BitSet>> = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for up in &layer {
            let old = BitSet::full(k);
            let is_down = |d: BitSet| d.iter().all(|x| (0..k).all(|y| !up[y].contains(x) || d.contains(y)));
            let is_up = |u: BitSet| u.iter().all(|x| up[x].is_subset(u));
            let downs: Vec<BitSet> = old.subsets().filter(|&d| is_down(d)).collect();
            let ups: Vec<BitSet> = old.subsets().filter(|&u| is_up(u)).collect();
            for &d in &downs {
                for &u in &ups {
                    if !d.is_disjoint(u) || !d.iter().all(|x| u.is_subset(up[x])) {
                        continue;
                    }
                    let mut extended: Vec<BitSet> =
                        (0..k).map(|x| if d.contains(x) { up[x].with(k) } else { up[x] }).collect();
                    extended.push(u.with(k));
                    next.push(extended);
                }
            }
        }
        layer = next;
    }
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    Ok(layer
        .into_iter()
        .enumerate()
        .map(|(idx, up)| {
            SpectralSpace::from_up_sets(format!("P{n}#{idx}"), labels.clone(), up).expect("enumerated orders are valid")
        })
        .collect())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// An isomorphism-invariant code: the smallest strict-relation bit pattern
/// over all relabelings. Intended for the small spaces produced by
/// [`enumerate_posets`].
pub fn canonical_code(s: &SpectralSpace) -> (usize, u128) {
    let n = s.len();
    assert!(n <= 8, "canonical codes are only computed for up to 8 points");
    let rel = s.strict_relations();
    let code = permutations(n)
        .into_iter()
        .map(|perm| rel.iter().fold(0u128, |acc, &(i, j)| acc | 1u128 << (perm[i] * n + perm[j])))
        .min()
        .unwrap_or(0);
    (n, code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Independent count: scan every relation on `n` points and keep the
    /// reflexive, antisymmetric, transitive ones.
    fn brute_force_count(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
        let mut count = 0;
        for mask in 0u64..(1u64 << pairs.len()) {
            let rel = |i: usize, j: usize| {
                i == j || pairs.iter().position(|&p| p == (i, j)).is_some_and(|k| mask >> k & 1 == 1)
            };
            let antisym = (0..n).all(|i| (0..n).all(|j| i == j || !(rel(i, j) && rel(j, i))));
            let trans = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(rel(i, j) && rel(j, k)) || rel(i, k))));
            if antisym && trans {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn counts_match_brute_force() {
        for n in 0..=4 {
            assert_eq!(brute_force_count(n), LABELED_POSET_COUNTS[n], "n = {n}");
        }
    }

    #[test]
    fn counts_match_table() {
        for n in 0..=5 {
            let all = enumerate_posets(n).unwrap();
            assert_eq!(all.len(), LABELED_POSET_COUNTS[n], "n = {n}");
            let distinct: BTreeSet<Vec<(usize, usize)>> = all.iter().map(|s| s.strict_relations()).collect();
            assert_eq!(distinct.len(), all.len());
        }
        assert_eq!(enumerate_posets(2).unwrap().len(), 3);
        assert_eq!(enumerate_posets(3).unwrap().len(), 19);
    }

    #[test]
    fn six_points() {
        assert_eq!(enumerate_posets(6).unwrap().len(), 130023);
        assert!(enumerate_posets(7).is_err());
    }

    #[test]
    fn unlabeled_classes() {
        // unlabeled posets on 3 and 4 points: 5 and 16
        for (n, expected) in [(3, 5), (4, 16)] {
            let codes: BTreeSet<_> = enumerate_posets(n).unwrap().iter().map(canonical_code).collect();
            assert_eq!(codes.len(), expected);
        }
        assert_eq!(
            canonical_code(&SpectralSpace::v_poset()),
            canonical_code(&SpectralSpace::from_relations("v'", 3, &[(2, 0), (2, 1)]).unwrap())
        );
        assert_ne!(canonical_code(&SpectralSpace::v_poset()), canonical_code(&SpectralSpace::lambda_poset()));
    }
}
