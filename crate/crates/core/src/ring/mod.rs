//! Finite commutative rings with identity, stored as Cayley tables.
//!
//! Elements are dense indices `0..n`. A ring is immutable once built and every
//! operation is a table lookup, so rings are shared freely between worker
//! threads behind an [`Arc`].

mod construct;
mod iso;
mod subring;
mod text;

use std::fmt;
use std::sync::Arc;

use crate::bitset::{BitSet, MAX_BITS};
use crate::error::{Error, Result};

pub use construct::{
    make_localization, make_poly_quotient, make_product, make_quotient, make_zn,
    multiplicative_closure, product_projections,
};
pub use iso::{find_isomorphism, is_isomorphic};
pub use subring::{enumerate_subrings, is_subring, subring_generated, SubringPair, DEFAULT_SUBRING_CAP};
pub use text::{parse_ring, write_ring};

pub type Elem = usize;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    size: usize,
    zero: Elem,
    one: Elem,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
}

impl FiniteRing {
    /// Builds a ring from row-major `size * size` tables, checking every axiom.
    /// The one-element zero ring is rejected; use [`FiniteRing::zero_ring`].
    pub fn new(
        name: impl Into<String>,
        size: usize,
        zero: Elem,
        one: Elem,
        add: Vec<Elem>,
        mul: Vec<Elem>,
    ) -> Result<Self> {
        let name = name.into();
        if size == 1 {
            return Err(Error::ZeroRing(name));
        }
        Self::build(name, size, zero, one, add, mul)
    }

    /// The ring with a single element, where `0 = 1`.
    pub fn zero_ring() -> Self {
        Self::build("0".into(), 1, 0, 0, vec![0], vec![0]).expect("zero ring tables are valid")
    }

    pub fn from_fn(
        name: impl Into<String>,
        size: usize,
        zero: Elem,
        one: Elem,
        add: impl Fn(Elem, Elem) -> Elem,
        mul: impl Fn(Elem, Elem) -> Elem,
    ) -> Result<Self> {
        let mut at = Vec::with_capacity(size * size);
        let mut mt = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                at.push(add(a, b));
                mt.push(mul(a, b));
            }
        }
        Self::new(name, size, zero, one, at, mt)
    }

    fn build(
        name: String,
        size: usize,
        zero: Elem,
        one: Elem,
        add: Vec<Elem>,
        mul: Vec<Elem>,
    ) -> Result<Self> {
        let bad = |reason: String| Error::InvalidRing { name: name.clone(), reason };
        if size == 0 {
            return Err(bad("size must be positive".into()));
        }
        if size > MAX_BITS {
            return Err(Error::CapExceeded { what: "ring", size, cap: MAX_BITS });
        }
        if add.len() != size * size || mul.len() != size * size {
            return Err(bad(format!("tables must have {} entries", size * size)));
        }
        if zero >= size || one >= size {
            return Err(bad("zero/one out of range".into()));
        }
        if let Some(pos) = add.iter().chain(mul.iter()).position(|&e| e >= size) {
            let pos = pos % (size * size);
            return Err(bad(format!("table entry at row {}, column {} out of range", pos / size, pos % size)));
        }
        let mut ring = FiniteRing {
            name: name.clone(),
            size,
            zero,
            one,
            add: add.into_iter().map(|e| e as u8).collect(),
            mul: mul.into_iter().map(|e| e as u8).collect(),
            neg: Vec::new(),
        };
        let mut neg = vec![0u8; size];
        for a in 0..size {
            match (0..size).find(|&b| ring.add(a, b) == zero) {
                Some(b) => neg[a] = b as u8,
                None => return Err(bad(format!("element {a} has no additive inverse"))),
            }
        }
        ring.neg = neg;
        ring.check_axioms().map_err(bad)?;
        Ok(ring)
    }

    /// Full table scan of the commutative-ring-with-identity axioms.
    fn check_axioms(&self) -> std::result::Result<(), String> {
        let n = self.size;
        for a in 0..n {
            if self.add(self.zero, a) != a {
                return Err(format!("{} is not an additive identity at {a}", self.zero));
            }
            if self.mul(self.one, a) != a {
                return Err(format!("{} is not a multiplicative identity at {a}", self.one));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(format!("addition not commutative at ({a},{b})"));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(format!("multiplication not commutative at ({a},{b})"));
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(format!("addition not associative at ({a},{b},{c})"));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(format!("multiplication not associative at ({a},{b},{c})"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(format!("distributivity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn is_zero_ring(&self) -> bool {
        self.size == 1
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.size + b] as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.size + b] as Elem
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a] as Elem
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// `a^k` with `a^0 = 1`.
    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        let (mut base, mut k, mut acc) = (a, k, self.one);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    pub fn all(&self) -> BitSet {
        BitSet::full(self.size)
    }

    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        self.elements().find(|&b| self.mul(a, b) == self.one)
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.inverse(a).is_some()
    }

    pub fn units(&self) -> BitSet {
        self.elements().filter(|&a| self.is_unit(a)).collect()
    }

    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.mul(a, a) == a
    }

    pub fn is_nilpotent(&self, a: Elem) -> bool {
        let mut x = a;
        for _ in 0..self.size {
            if x == self.zero {
                return true;
            }
            x = self.mul(x, a);
        }
        x == self.zero
    }

    /// Additive order of `a`.
    pub fn additive_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.zero {
            x = self.add(x, a);
            k += 1;
        }
        k
    }

    pub fn characteristic(&self) -> usize {
        self.additive_order(self.one)
    }

    /// Closure of `set` under addition (which, in a finite ring, also gives negatives).
    pub fn additive_closure(&self, set: BitSet) -> BitSet {
        let mut closed = set.with(self.zero);
        let mut frontier = closed;
        while !frontier.is_empty() {
            let mut next = BitSet::EMPTY;
            for a in frontier.iter() {
                for b in closed.iter() {
                    let c = self.add(a, b);
                    if !closed.contains(c) {
                        next.insert(c);
                    }
                }
            }
            closed = closed | next;
            frontier = next;
        }
        closed
    }
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, size {})", self.name, self.size)
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// A unital ring homomorphism given by its value table.
#[derive(Clone, Debug)]
pub struct RingHom {
    domain: Arc<FiniteRing>,
    codomain: Arc<FiniteRing>,
    map: Vec<Elem>,
}

impl RingHom {
    pub fn new(domain: Arc<FiniteRing>, codomain: Arc<FiniteRing>, map: Vec<Elem>) -> Result<Self> {
        let bad = |m: String| Error::NotAHomomorphism(format!("{} -> {}: {m}", domain.name(), codomain.name()));
        if map.len() != domain.size() {
            return Err(bad(format!("table has {} entries, domain has {}", map.len(), domain.size())));
        }
        if let Some(&e) = map.iter().find(|&&e| e >= codomain.size()) {
            return Err(bad(format!("image {e} out of range")));
        }
        if map[domain.one()] != codomain.one() {
            return Err(bad("does not preserve 1".into()));
        }
        if map[domain.zero()] != codomain.zero() {
            return Err(bad("does not preserve 0".into()));
        }
        for a in domain.elements() {
            for b in domain.elements() {
                if map[domain.add(a, b)] != codomain.add(map[a], map[b]) {
                    return Err(bad(format!("not additive at ({a},{b})")));
                }
                if map[domain.mul(a, b)] != codomain.mul(map[a], map[b]) {
                    return Err(bad(format!("not multiplicative at ({a},{b})")));
                }
            }
        }
        Ok(RingHom { domain, codomain, map })
    }

    pub fn identity(ring: Arc<FiniteRing>) -> Self {
        let map = ring.elements().collect();
        RingHom { domain: ring.clone(), codomain: ring, map }
    }

    pub fn domain(&self) -> &Arc<FiniteRing> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteRing> {
        &self.codomain
    }

    pub fn table(&self) -> &[Elem] {
        &self.map
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a]
    }

    pub fn kernel(&self) -> BitSet {
        let z = self.codomain.zero();
        self.domain.elements().filter(|&a| self.map[a] == z).collect()
    }

    pub fn image(&self) -> BitSet {
        self.map.iter().copied().collect()
    }

    /// `f⁻¹(set)` as a subset of the domain.
    pub fn preimage(&self, set: BitSet) -> BitSet {
        self.domain.elements().filter(|&a| set.contains(self.map[a])).collect()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().len() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.codomain.size()
    }
}
