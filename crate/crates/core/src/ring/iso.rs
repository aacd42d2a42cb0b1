//! Ring isomorphism search.
//!
//! A map out of `r1` is pinned down by the images of a generating set, so the
//! search picks a greedy generating set of `r1` and backtracks over the
//! images of its members, propagating through the tables after each choice.

use super::{Elem, FiniteRing};
use crate::bitset::BitSet;

const UNSET: usize = usize::MAX;

/// Coarse per-element invariants preserved by any isomorphism.
fn signature(r: &FiniteRing, a: Elem) -> (usize, bool, bool, bool, usize) {
    let square_order = r.additive_order(r.mul(a, a));
    (r.additive_order(a), r.is_unit(a), r.is_idempotent(a), r.is_nilpotent(a), square_order)
}

fn ring_invariants(r: &FiniteRing) -> (usize, usize, Vec<(usize, bool, bool, bool, usize)>) {
    let mut sigs: Vec<_> = r.elements().map(|a| signature(r, a)).collect();
    sigs.sort();
    (r.size(), r.characteristic(), sigs)
}

/// Extends a partial map through the tables. Returns `false` on a conflict.
fn propagate(r1: &FiniteRing, r2: &FiniteRing, map: &mut [Elem], used: &mut BitSet) -> bool {
    loop {
        let known: Vec<Elem> = r1.elements().filter(|&a| map[a] != UNSET).collect();
        let mut changed = false;
        for &a in &known {
            for &b in &known {
                for (c, img) in [
                    (r1.add(a, b), r2.add(map[a], map[b])),
                    (r1.mul(a, b), r2.mul(map[a], map[b])),
                ] {
                    if map[c] == UNSET {
                        if used.contains(img) {
                            return false;
                        }
                        map[c] = img;
                        used.insert(img);
                        changed = true;
                    } else if map[c] != img {
                        return false;
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn generating_set(r: &FiniteRing) -> Vec<Elem> {
    let closure = |set: BitSet| -> BitSet {
        let mut closed = set.with(r.zero()).with(r.one());
        loop {
            let mut next = closed;
            for a in closed.iter() {
                for b in closed.iter() {
                    next.insert(r.add(a, b));
                    next.insert(r.mul(a, b));
                }
            }
            if next == closed {
                return closed;
            }
            closed = next;
        }
    };
    let mut gens = Vec::new();
    let mut span = closure(BitSet::EMPTY);
    for x in r.elements() {
        if !span.contains(x) {
            gens.push(x);
            span = closure(span.with(x));
        }
    }
    gens
}

fn search(
    r1: &FiniteRing,
    r2: &FiniteRing,
    gens: &[Elem],
    map: &mut Vec<Elem>,
    used: BitSet,
) -> Option<Vec<Elem>> {
    let Some((&g, rest)) = gens.split_first() else {
        return map.iter().all(|&e| e != UNSET).then(|| map.clone());
    };
    if map[g] != UNSET {
        return search(r1, r2, rest, map, used);
    }
    let sig = signature(r1, g);
    for h in r2.elements() {
        if used.contains(h) || signature(r2, h) != sig {
            continue;
        }
        let mut trial = map.clone();
        let mut trial_used = used;
        trial[g] = h;
        trial_used.insert(h);
        if propagate(r1, r2, &mut trial, &mut trial_used) {
            if let Some(found) = search(r1, r2, rest, &mut trial, trial_used) {
                return Some(found);
            }
        }
    }
    None
}

/// An isomorphism `r1 → r2` as a value table, if one exists.
pub fn find_isomorphism(r1: &FiniteRing, r2: &FiniteRing) -> Option<Vec<Elem>> {
    if ring_invariants(r1) != ring_invariants(r2) {
        return None;
    }
    let mut map = vec![UNSET; r1.size()];
    let mut used = BitSet::EMPTY;
    map[r1.zero()] = r2.zero();
    used.insert(r2.zero());
    if map[r1.one()] == UNSET {
        map[r1.one()] = r2.one();
        used.insert(r2.one());
    }
    if !propagate(r1, r2, &mut map, &mut used) {
        return None;
    }
    let found = search(r1, r2, &generating_set(r1), &mut map, used)?;
    debug_assert!(r1.elements().all(|a| r1.elements().all(|b| {
        found[r1.add(a, b)] == r2.add(found[a], found[b]) && found[r1.mul(a, b)] == r2.mul(found[a], found[b])
    })));
    Some(found)
}

pub fn is_isomorphic(r1: &FiniteRing, r2: &FiniteRing) -> bool {
    find_isomorphism(r1, r2).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_poly_quotient, make_product, make_zn};

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn product_of_cyclic_rings_is_cyclic_iff_coprime() {
        for m in 2..=18 {
            for n in 2..=18 {
                if m * n > 36 {
                    continue;
                }
                let p = make_product(&make_zn(m).unwrap(), &make_zn(n).unwrap()).unwrap();
                let iso = is_isomorphic(&p, &make_zn(m * n).unwrap());
                assert_eq!(iso, gcd(m, n) == 1, "Z{m} x Z{n}");
            }
        }
    }

    #[test]
    fn size_four_rings_are_pairwise_distinct() {
        let z2 = make_zn(2).unwrap();
        let rings = [
            make_zn(4).unwrap(),
            make_product(&z2, &z2).unwrap(),
            make_poly_quotient(2, &[1, 1, 1]).unwrap(),
            make_poly_quotient(2, &[0, 0, 1]).unwrap(),
        ];
        for (i, a) in rings.iter().enumerate() {
            for (j, b) in rings.iter().enumerate() {
                assert_eq!(is_isomorphic(a, b), i == j, "{} vs {}", a.name(), b.name());
            }
        }
    }

    #[test]
    fn isomorphic_field_presentations() {
        // x^3+x+1 and x^3+x^2+1 both give F_8
        let a = make_poly_quotient(2, &[1, 1, 0, 1]).unwrap();
        let b = make_poly_quotient(2, &[1, 0, 1, 1]).unwrap();
        let map = find_isomorphism(&a, &b).unwrap();
        let mut sorted = map.clone();
        sorted.sort();
        assert_eq!(sorted, (0..8).collect::<Vec<_>>());
        // x^2 and x^2+1 over F_2 (x^2+1 = (x+1)^2)
        let c = make_poly_quotient(2, &[0, 0, 1]).unwrap();
        let d = make_poly_quotient(2, &[1, 0, 1]).unwrap();
        assert!(is_isomorphic(&c, &d));
    }
}
