//! Dense subrings and the maps between spectra that they induce.
//!
//! `A ⊆ B` is dense when for every ideal `I` of `B` and every `b ∉ rad I`
//! there is `a ∉ rad I` with `ab ∈ A`.
//!
//! It is enough to let `I` range over prime ideals. If `b ∉ rad I`, some
//! prime `P ⊇ I` avoids `b`; an `a ∉ P` with `ab ∈ A` then also lies outside
//! `rad I ⊆ P`. Conversely primes are their own radicals. [`DensityMode`]
//! selects which quantifier is scanned and the two are compared in tests.

mod claims;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

pub(crate) use claims::{labels, C21_RING_NOTE};
pub use claims::{check_claim, evaluate, ClaimId, Evaluation, Instance, Labeled, Status, Triple, Verdict, Witness};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, is_ideal, nilradical, radical, Ideal, Spectra, DEFAULT_IDEAL_CAP};
use crate::ring::{Elem, FiniteRing, RingHom, SubringPair};
use crate::topology::{is_pm, RingSpace, SpectralMap};

/// Size limits used by claim evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub ideal: usize,
    pub cn_points: usize,
    pub normal_points: usize,
    pub retraction_points: usize,
    pub criterion: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            ideal: DEFAULT_IDEAL_CAP,
            cn_points: crate::topology::DEFAULT_CN_CAP,
            normal_points: crate::topology::DEFAULT_NORMAL_CAP,
            retraction_points: 16,
            criterion: crate::criterion::DEFAULT_CRITERION_CAP,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DensityMode {
    Definition,
    Primes,
}

impl std::str::FromStr for DensityMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "definition" => Ok(DensityMode::Definition),
            "primes" => Ok(DensityMode::Primes),
            _ => Err(Error::InvalidArgument(format!("unknown density mode {s:?}"))),
        }
    }
}

/// `(I, b, a)`: `b ∉ rad I`, `a ∉ rad I` and `ab ∈ A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DensityWitness {
    pub ideal: Ideal,
    pub b: Elem,
    pub a: Elem,
}

/// `b ∉ rad I` with no admissible `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DensityFailure {
    pub ideal: Ideal,
    pub b: Elem,
}

#[derive(Clone, Debug)]
pub struct DensityReport {
    pub pair: SubringPair,
    pub dense: bool,
    pub mode: DensityMode,
    pub witness_fail: Option<DensityFailure>,
    /// One entry per quantified `(I, b)`, in scan order; complete when dense.
    pub witness_table: Vec<DensityWitness>,
}

pub fn is_dense(pair: &SubringPair, mode: DensityMode, cap: usize) -> Result<DensityReport> {
    let ring = pair.ambient();
    let ideals: Vec<(Ideal, Ideal)> = match mode {
        DensityMode::Definition => {
            enumerate_ideals(ring, cap)?.into_iter().map(|i| (i, radical(ring, i))).collect()
        }
        DensityMode::Primes => Spectra::compute(ring, cap)?.primes.into_iter().map(|p| (p, p)).collect(),
    };
    let member = pair.member();
    let mut table = Vec::new();
    for (ideal, rad) in ideals {
        for b in ring.elements().filter(|&b| !rad.contains(b)) {
            match ring.elements().find(|&a| !rad.contains(a) && member.contains(ring.mul(a, b))) {
                Some(a) => table.push(DensityWitness { ideal, b, a }),
                None => {
                    return Ok(DensityReport {
                        pair: pair.clone(),
                        dense: false,
                        mode,
                        witness_fail: Some(DensityFailure { ideal, b }),
                        witness_table: table,
                    })
                }
            }
        }
    }
    Ok(DensityReport { pair: pair.clone(), dense: true, mode, witness_fail: None, witness_table: table })
}

/// `f*: Spec B → Spec A`, `Q ↦ f⁻¹(Q)`, for `f: A → B`.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub source: RingSpace,
    pub target: RingSpace,
    pub map: SpectralMap,
}

pub fn contraction(hom: &RingHom, cap: usize) -> Result<Contraction> {
    let target = crate::topology::space_from_ring(hom.domain(), cap)?;
    let source = crate::topology::space_from_ring(hom.codomain(), cap)?;
    Ok(contraction_between(hom, source, target))
}

fn contraction_between(hom: &RingHom, source: RingSpace, target: RingSpace) -> Contraction {
    let table = source
        .primes
        .iter()
        .map(|q| {
            let pre = Ideal::from_members_unchecked(hom.preimage(q.members()));
            target.index_of(pre).expect("the preimage of a prime is prime")
        })
        .collect();
    let map = SpectralMap::new(source.space.clone(), target.space.clone(), table).expect("indices in range");
    assert!(map.is_continuous(), "contraction maps are continuous");
    Contraction { source, target, map }
}

/// Why λ or Θ could not be formed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MapFailure {
    NotDense,
    NotPm { contraction: Ideal, candidates: Vec<Ideal> },
    OutsideTarget { point: Ideal, image: Ideal },
}

impl fmt::Display for MapFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapFailure::NotDense => f.write_str("the pair is not dense"),
            MapFailure::NotPm { contraction, candidates } => {
                write!(f, "{contraction} lies in {} maximal ideals of the subring", candidates.len())
            }
            MapFailure::OutsideTarget { point, image } => write!(f, "{point} contracts to {image}, outside the target"),
        }
    }
}

/// Spectra of both rings of a [`SubringPair`] and the contraction between
/// them, computed once.
#[derive(Clone, Debug)]
pub struct PairContext {
    pair: SubringPair,
    sub: Arc<FiniteRing>,
    back: Vec<Elem>,
    b: Spectra,
    a: Spectra,
    con: Contraction,
    dense: bool,
}

impl PairContext {
    pub fn new(pair: &SubringPair, cap: usize) -> Result<Self> {
        let (sub, back) = pair.extract();
        if sub.is_zero_ring() {
            return Err(Error::ZeroRing(sub.name().to_string()));
        }
        let b = Spectra::compute(pair.ambient(), cap)?;
        let a = Spectra::compute(&sub, cap)?;
        let inclusion = RingHom::new(sub.clone(), pair.ambient().clone(), back.clone())?;
        let con = contraction_between(
            &inclusion,
            RingSpace::from_primes(pair.ambient(), b.primes.clone()),
            RingSpace::from_primes(&sub, a.primes.clone()),
        );
        let dense = is_dense(pair, DensityMode::Primes, cap)?.dense;
        Ok(PairContext { pair: pair.clone(), sub, back, b, a, con, dense })
    }

    pub fn pair(&self) -> &SubringPair {
        &self.pair
    }

    /// `A` as a standalone ring; local index `i` is ambient element `back()[i]`.
    pub fn sub(&self) -> &Arc<FiniteRing> {
        &self.sub
    }

    pub fn back(&self) -> &[Elem] {
        &self.back
    }

    pub fn ambient_spectra(&self) -> &Spectra {
        &self.b
    }

    pub fn sub_spectra(&self) -> &Spectra {
        &self.a
    }

    pub fn spec_b(&self) -> &RingSpace {
        &self.con.source
    }

    pub fn spec_a(&self) -> &RingSpace {
        &self.con.target
    }

    /// `i*: Spec B → Spec A`.
    pub fn contraction(&self) -> &SpectralMap {
        &self.con.map
    }

    pub fn is_dense(&self) -> bool {
        self.dense
    }

    /// Ambient elements of a local ideal of `A`.
    pub fn to_ambient(&self, local: Ideal) -> Vec<Elem> {
        local.members().iter().map(|i| self.back[i]).collect()
    }

    fn indices(space: &RingSpace, ideals: &[Ideal]) -> BitSet {
        ideals.iter().map(|&i| space.index_of(i).expect("listed ideals are prime")).collect()
    }

    /// Points of `Spec B` that are maximal ideals.
    pub fn max_b(&self) -> BitSet {
        Self::indices(self.spec_b(), &self.b.maximal)
    }

    pub fn max_a(&self) -> BitSet {
        Self::indices(self.spec_a(), &self.a.maximal)
    }

    pub fn min_b(&self) -> BitSet {
        Self::indices(self.spec_b(), &self.b.minimal)
    }

    pub fn min_a(&self) -> BitSet {
        Self::indices(self.spec_a(), &self.a.minimal)
    }

    pub fn sub_is_pm(&self) -> bool {
        is_pm(&self.spec_a().space)
    }

    /// Restricts `i*` to `from → to`, failing on a point that leaves `to`.
    fn restricted(&self, from: BitSet, to: BitSet, name: &str, pick: impl Fn(usize) -> std::result::Result<usize, MapFailure>) -> std::result::Result<SpectralMap, MapFailure> {
        let (src, src_back) = self.spec_b().space.subspace(from, format!("{name} {}", self.pair.ambient().name()));
        let (dst, dst_back) = self.spec_a().space.subspace(to, format!("{name} {}", self.sub.name()));
        let table = src_back
            .iter()
            .map(|&p| {
                let q = pick(p)?;
                dst_back.iter().position(|&d| d == q).ok_or(MapFailure::OutsideTarget {
                    point: self.spec_b().primes[p],
                    image: self.spec_a().primes[q],
                })
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(SpectralMap::new(src, dst, table).expect("indices in range"))
    }

    /// `λ: max B → max A`, sending `M` to the unique maximal ideal of `A`
    /// containing `M ∩ A`.
    pub fn lambda_map(&self) -> std::result::Result<SpectralMap, MapFailure> {
        let max_a = self.max_a();
        let a_space = &self.spec_a().space;
        self.restricted(self.max_b(), max_a, "max", |m| {
            let c = self.con.map.apply(m);
            let above = a_space.up(c) & max_a;
            if above.len() == 1 {
                Ok(above.first().expect("one element"))
            } else {
                Err(MapFailure::NotPm {
                    contraction: self.spec_a().primes[c],
                    candidates: above.iter().map(|i| self.spec_a().primes[i]).collect(),
                })
            }
        })
    }

    /// `Θ: min B → min A`, `P ↦ P ∩ A`; only formed for dense pairs.
    pub fn theta_map(&self) -> std::result::Result<SpectralMap, MapFailure> {
        if !self.dense {
            return Err(MapFailure::NotDense);
        }
        self.restricted(self.min_b(), self.min_a(), "min", |p| Ok(self.con.map.apply(p)))
    }

    /// Distinct maximal ideals of `B`, as point indices.
    fn max_pairs(&self) -> Vec<(usize, usize)> {
        let max = self.max_b().to_vec();
        max.iter().enumerate().flat_map(|(k, &i)| max[k + 1..].iter().map(move |&j| (i, j))).collect()
    }

    /// Whenever `M ∩ A` and `M' ∩ A` are incomparable their closures in
    /// `Spec A` are disjoint.
    pub fn weak_cn_wrt(&self) -> bool {
        let s = &self.spec_a().space;
        self.max_pairs().into_iter().all(|(i, j)| {
            let (c, d) = (self.con.map.apply(i), self.con.map.apply(j));
            s.comparable(c, d) || s.up(c).is_disjoint(s.up(d))
        })
    }

    /// `(M ∩ A) + (M' ∩ A) = A` for distinct maximal `M, M'` of `B`.
    pub fn comaximal_contractions(&self) -> bool {
        let whole = Ideal::whole(&self.sub);
        self.max_pairs().into_iter().all(|(i, j)| {
            let (c, d) = (self.con.map.apply(i), self.con.map.apply(j));
            self.spec_a().primes[c].join(&self.sub, self.spec_a().primes[d]) == whole
        })
    }

    /// Contractions of distinct maximal ideals are incomparable.
    pub fn incomparable_contractions(&self) -> bool {
        let s = &self.spec_a().space;
        self.max_pairs().into_iter().all(|(i, j)| !s.comparable(self.con.map.apply(i), self.con.map.apply(j)))
    }
}

/// `C^v_u = {r ∈ B : rv ∈ A}` and its checked properties.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CvuReport {
    pub u: Elem,
    pub v: Elem,
    pub set: BitSet,
    pub within_a: bool,
    pub ideal_of_a: bool,
    pub nonzero: bool,
}

/// `u` must lie in `A` and `uv = 1` in `B`.
pub fn cvu_set(pair: &SubringPair, u: Elem, v: Elem) -> Result<CvuReport> {
    let r = pair.ambient();
    if u >= r.size() || v >= r.size() {
        return Err(Error::InvalidArgument(format!("element out of range for {}", r.name())));
    }
    if !pair.member().contains(u) {
        return Err(Error::InvalidArgument(format!("{u} is not in the subring")));
    }
    if r.mul(u, v) != r.one() {
        return Err(Error::InvalidArgument(format!("{u}·{v} ≠ 1 in {}", r.name())));
    }
    let set: BitSet = r.elements().filter(|&x| pair.member().contains(r.mul(x, v))).collect();
    let within_a = set.is_subset(pair.member());
    let ideal_of_a = within_a && {
        let (sub, _) = pair.extract();
        is_ideal(&sub, pair.to_local(set))
    };
    Ok(CvuReport { u, v, set, within_a, ideal_of_a, nonzero: set != BitSet::singleton(r.zero()) })
}

/// The three conditions on `f: A → B` that are claimed equivalent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HomEquivalence {
    pub kernel_in_nilradical: bool,
    pub dense_image: bool,
    pub prime_below: bool,
}

impl HomEquivalence {
    pub fn consistent(&self) -> bool {
        self.kernel_in_nilradical == self.dense_image && self.dense_image == self.prime_below
    }
}

pub fn hom_equivalence_check(hom: &RingHom, cap: usize) -> Result<HomEquivalence> {
    let a = hom.domain();
    let con = contraction(hom, cap)?;
    let kernel_in_nilradical = hom.kernel().is_subset(nilradical(a).members());
    let dense_image = con.map.props().dense_image;
    let images: Vec<Ideal> = con.map.table().iter().map(|&i| con.target.primes[i]).collect();
    let prime_below = con.target.primes.iter().all(|&p| images.iter().any(|q| q.is_subset(p)));
    Ok(HomEquivalence { kernel_in_nilradical, dense_image, prime_below })
}
