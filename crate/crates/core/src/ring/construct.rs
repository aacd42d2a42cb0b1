//! Standard constructions: `Z_n`, `F_p[x]/(f)`, products, quotients and
//! localizations.
//!
//! # Localization of a finite ring
//!
//! For a multiplicative set `S` of a finite commutative ring `R`, let
//! `K = {a : sa = 0 for some s ∈ S}`. `K` is an ideal (if `sa = 0` and
//! `tb = 0` then `st(a + b) = 0`), and it is exactly the kernel of
//! `R → S⁻¹R`. Every `s ∈ S` is a non-zero-divisor in `R/K`: if `sx ∈ K` then
//! `tsx = 0` for some `t ∈ S`, so `x ∈ K`. A non-zero-divisor of a finite ring
//! is a unit (multiplication by it is an injective, hence bijective, self-map),
//! so `R/K` already inverts `S` and the universal property identifies
//! `S⁻¹R` with `R/K`. [`make_localization`] therefore builds the quotient by
//! the `S`-annihilation congruence `a ~ b ⇔ s(a - b) = 0 for some s ∈ S`.

use std::sync::Arc;

use super::{Elem, FiniteRing, RingHom};
use crate::bitset::{BitSet, MAX_BITS};
use crate::error::{Error, Result};
use crate::ideal::{is_ideal, Ideal};

/// `Z/nZ`. Requires `n >= 2`.
pub fn make_zn(n: usize) -> Result<FiniteRing> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("Z_n needs n >= 2, got {n}")));
    }
    FiniteRing::from_fn(format!("Z{n}"), n, 0, 1, |a, b| (a + b) % n, |a, b| (a * b) % n)
}

fn is_prime_number(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn poly_name(p: u64, coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        terms.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}{mono}"),
        });
    }
    format!("F{p}[x]/({})", terms.join("+"))
}

/// `F_p[x]/(f)` for monic `f`, coefficients listed from the constant term up.
///
/// The element with coefficient vector `(c_0, .., c_{d-1})` has index
/// `Σ c_i p^i`.
pub fn make_poly_quotient(p: u64, coeffs: &[u64]) -> Result<FiniteRing> {
    if !is_prime_number(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let coeffs: Vec<u64> = coeffs.iter().map(|c| c % p).collect();
    let d = coeffs.len().saturating_sub(1);
    if d == 0 {
        return Err(Error::InvalidArgument("polynomial must have degree at least 1".into()));
    }
    if coeffs[d] != 1 {
        return Err(Error::InvalidArgument(format!("polynomial is not monic (leading coefficient {})", coeffs[d])));
    }
    let size = (p as usize).checked_pow(d as u32).filter(|&s| s <= MAX_BITS).ok_or(Error::CapExceeded {
        what: "polynomial quotient",
        size: usize::MAX,
        cap: MAX_BITS,
    })?;
    let p_us = p as usize;
    let digits = |mut e: usize| -> Vec<usize> {
        (0..d)
            .map(|_| {
                let c = e % p_us;
                e /= p_us;
                c
            })
            .collect()
    };
    let index = |v: &[usize]| v.iter().rev().fold(0, |acc, &c| acc * p_us + c);
    let add = |a: Elem, b: Elem| {
        let (x, y) = (digits(a), digits(b));
        let s: Vec<usize> = x.iter().zip(&y).map(|(u, v)| (u + v) % p_us).collect();
        index(&s)
    };
    let mul = |a: Elem, b: Elem| {
        let (x, y) = (digits(a), digits(b));
        let mut prod = vec![0usize; 2 * d - 1];
        for (i, u) in x.iter().enumerate() {
            for (j, v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % p_us;
            }
        }
        // x^d = -(c_0 + .. + c_{d-1} x^{d-1})
        for k in (d..prod.len()).rev() {
            let lead = prod[k];
            if lead == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &c) in coeffs[..d].iter().enumerate() {
                let sub = lead * c as usize % p_us;
                prod[k - d + i] = (prod[k - d + i] + p_us - sub) % p_us;
            }
        }
        index(&prod[..d])
    };
    FiniteRing::from_fn(poly_name(p, &coeffs), size, 0, 1, add, mul)
}

/// `r1 × r2`, with `(i, j)` stored at index `i * |r2| + j`.
pub fn make_product(r1: &FiniteRing, r2: &FiniteRing) -> Result<FiniteRing> {
    for r in [r1, r2] {
        if r.is_zero_ring() {
            return Err(Error::ZeroRing(format!("product factor {}", r.name())));
        }
    }
    let m = r2.size();
    let size = r1.size() * m;
    if size > MAX_BITS {
        return Err(Error::CapExceeded { what: "product ring", size, cap: MAX_BITS });
    }
    FiniteRing::from_fn(
        format!("{}x{}", r1.name(), r2.name()),
        size,
        r1.zero() * m + r2.zero(),
        r1.one() * m + r2.one(),
        |a, b| r1.add(a / m, b / m) * m + r2.add(a % m, b % m),
        |a, b| r1.mul(a / m, b / m) * m + r2.mul(a % m, b % m),
    )
}

/// The two coordinate projections out of `product = make_product(r1, r2)`.
pub fn product_projections(
    r1: &Arc<FiniteRing>,
    r2: &Arc<FiniteRing>,
    product: &Arc<FiniteRing>,
) -> Result<(RingHom, RingHom)> {
    let m = r2.size();
    let first = RingHom::new(product.clone(), r1.clone(), product.elements().map(|e| e / m).collect())?;
    let second = RingHom::new(product.clone(), r2.clone(), product.elements().map(|e| e % m).collect())?;
    Ok((first, second))
}

fn quotient_by(r: &Arc<FiniteRing>, kernel: BitSet, name: String, allow_zero: bool) -> Result<(Arc<FiniteRing>, RingHom)> {
    let n = r.size();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for a in r.elements() {
        if class_of[a] == usize::MAX {
            let idx = reps.len();
            reps.push(a);
            for k in kernel.iter() {
                class_of[r.add(a, k)] = idx;
            }
        }
    }
    let q = if reps.len() == 1 {
        if !allow_zero {
            return Err(Error::ZeroRing(name));
        }
        FiniteRing::zero_ring().with_name(name)
    } else {
        FiniteRing::from_fn(
            name,
            reps.len(),
            class_of[r.zero()],
            class_of[r.one()],
            |i, j| class_of[r.add(reps[i], reps[j])],
            |i, j| class_of[r.mul(reps[i], reps[j])],
        )?
    };
    let q = Arc::new(q);
    let hom = RingHom::new(r.clone(), q.clone(), class_of)?;
    Ok((q, hom))
}

/// `r / i` together with the canonical surjection. Cosets are numbered in
/// order of their smallest element.
pub fn make_quotient(r: &Arc<FiniteRing>, ideal: &Ideal) -> Result<(Arc<FiniteRing>, RingHom)> {
    let members = ideal.members();
    if !is_ideal(r, members) {
        return Err(Error::NotAnIdeal(format!("{members} in {}", r.name())));
    }
    if members == r.all() {
        return Err(Error::ZeroRing(format!("{}/{}", r.name(), r.name())));
    }
    quotient_by(r, members, format!("{}/{}", r.name(), members), false)
}

/// Closure of `gens ∪ {1}` under multiplication.
pub fn multiplicative_closure(r: &FiniteRing, gens: BitSet) -> BitSet {
    let mut closed = gens.with(r.one());
    loop {
        let mut next = closed;
        for a in closed.iter() {
            for b in closed.iter() {
                next.insert(r.mul(a, b));
            }
        }
        if next == closed {
            return closed;
        }
        closed = next;
    }
}

/// `S⁻¹r` and the map `a ↦ a/1`, realised as the quotient of `r` by the
/// `S`-annihilator (see the module docs). `allow_zero` admits `0 ∈ S`, which
/// produces the zero ring.
pub fn make_localization(r: &Arc<FiniteRing>, s: BitSet, allow_zero: bool) -> Result<(Arc<FiniteRing>, RingHom)> {
    if !s.is_subset(r.all()) {
        return Err(Error::InvalidArgument(format!("{s} is not a subset of {}", r.name())));
    }
    if !s.contains(r.one()) {
        return Err(Error::InvalidArgument(format!("multiplicative set {s} does not contain 1")));
    }
    if multiplicative_closure(r, s) != s {
        return Err(Error::InvalidArgument(format!("{s} is not multiplicatively closed")));
    }
    if s.contains(r.zero()) && !allow_zero {
        return Err(Error::ZeroRing(format!("{} localized at a set containing 0", r.name())));
    }
    let kernel: BitSet = r.elements().filter(|&a| s.iter().any(|t| r.mul(t, a) == r.zero())).collect();
    quotient_by(r, kernel, format!("{}[{}^-1]", r.name(), s), allow_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ideal_generated;
    use crate::ring::is_isomorphic;

    #[test]
    fn zn_tables() {
        let z2 = make_zn(2).unwrap();
        assert_eq!(z2.add(1, 1), 0);
        let z4 = make_zn(4).unwrap();
        assert_eq!(z4.mul(2, 2), 0);
        let z6 = make_zn(6).unwrap();
        assert_eq!(z6.add(3, 4), 1);
        assert_eq!(z6.mul(3, 4), 0);
        assert!(make_zn(1).is_err());
        assert!(make_zn(0).is_err());
    }

    #[test]
    fn poly_quotients() {
        let f4 = make_poly_quotient(2, &[1, 1, 1]).unwrap();
        assert_eq!(f4.size(), 4);
        assert_eq!(f4.name(), "F2[x]/(x^2+x+1)");
        assert!((1..4).all(|a| f4.is_unit(a)));

        let dual = make_poly_quotient(2, &[0, 0, 1]).unwrap();
        // x has index 2
        assert_eq!(dual.mul(2, 2), 0);
        assert!(dual.is_nilpotent(2));

        let split = make_poly_quotient(2, &[0, 1, 1]).unwrap();
        let idempotents = split.elements().filter(|&a| split.is_idempotent(a)).count();
        assert_eq!(idempotents, 4);
        let z2 = make_zn(2).unwrap();
        assert!(is_isomorphic(&split, &make_product(&z2, &z2).unwrap()));

        assert!(make_poly_quotient(2, &[1, 1, 0]).is_err());
        assert!(make_poly_quotient(2, &[1]).is_err());
        assert!(make_poly_quotient(4, &[1, 1]).is_err());
    }

    #[test]
    fn products() {
        let z2 = make_zn(2).unwrap();
        let z3 = make_zn(3).unwrap();
        let p = make_product(&z2, &z2).unwrap();
        assert_eq!(p.size(), 4);
        assert_eq!(p.one(), 3);
        let p23 = make_product(&z2, &z3).unwrap();
        assert!(is_isomorphic(&p23, &make_zn(6).unwrap()));
        assert!(matches!(make_product(&z2, &FiniteRing::zero_ring()), Err(Error::ZeroRing(_))));
    }

    #[test]
    fn quotients() {
        let z4 = Arc::new(make_zn(4).unwrap());
        let (q, h) = make_quotient(&z4, &ideal_generated(&z4, BitSet::singleton(2))).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(h.kernel().to_vec(), vec![0, 2]);
        assert!(h.is_surjective());

        let z6 = Arc::new(make_zn(6).unwrap());
        let (q, h) = make_quotient(&z6, &ideal_generated(&z6, BitSet::singleton(3))).unwrap();
        assert!(is_isomorphic(&q, &make_zn(3).unwrap()));
        assert_eq!(h.kernel().to_vec(), vec![0, 3]);

        let z2 = make_zn(2).unwrap();
        let v = Arc::new(make_product(&z2, &z2).unwrap());
        // {0} x Z_2 = {(0,0), (0,1)} = {0, 1}
        let (q, h) = make_quotient(&v, &ideal_generated(&v, BitSet::singleton(1))).unwrap();
        assert!(is_isomorphic(&q, &z2));
        assert_eq!(h.kernel().to_vec(), vec![0, 1]);

        let whole = ideal_generated(&z6, BitSet::singleton(1));
        assert!(matches!(make_quotient(&z6, &whole), Err(Error::ZeroRing(_))));
    }

    #[test]
    fn localizations() {
        let z6 = Arc::new(make_zn(6).unwrap());
        let (l, h) = make_localization(&z6, [1, 3].into_iter().collect(), false).unwrap();
        assert!(is_isomorphic(&l, &make_zn(2).unwrap()));
        assert_eq!(h.kernel().to_vec(), vec![0, 2, 4]);

        let z4 = Arc::new(make_zn(4).unwrap());
        let (l, h) = make_localization(&z4, [1, 3].into_iter().collect(), false).unwrap();
        assert!(is_isomorphic(&l, &z4));
        assert_eq!(h.kernel().to_vec(), vec![0]);

        let z5 = Arc::new(make_zn(5).unwrap());
        let (l, h) = make_localization(&z5, BitSet::singleton(1), false).unwrap();
        assert_eq!(l.size(), 5);
        assert_eq!(h.table(), &[0, 1, 2, 3, 4]);

        let with_zero = multiplicative_closure(&z4, BitSet::singleton(2));
        assert!(matches!(make_localization(&z4, with_zero, false), Err(Error::ZeroRing(_))));
        let (l, _) = make_localization(&z4, with_zero, true).unwrap();
        assert!(l.is_zero_ring());
        assert!(make_localization(&z6, [1, 2].into_iter().collect(), false).is_err());
        assert!(make_localization(&z6, BitSet::singleton(5), false).is_err());
    }
}
