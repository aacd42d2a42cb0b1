//! Corpus generation, the claim audit and the two hunters.

mod audit;
mod hunt;

use std::sync::Arc;

use serde::Serialize;

pub use audit::{run_audit, AuditConfig, AuditReport, ErrorLine, Refutation, Skip, Summary, Tally, VerdictLine};
pub use hunt::{
    hunt_intermediate_density, hunt_wcn_vs_cn, DensityCounterexample, IntermediateDensityReport, SeparatingPoset,
    TruthRow, WcnVsCnReport,
};

use crate::dense::{Caps, ClaimId, Instance, Triple};
use crate::error::{Error, Result};
use crate::ideal::enumerate_ideals;
use crate::ring::{
    enumerate_subrings, is_isomorphic, make_localization, make_poly_quotient, make_product, make_quotient, make_zn,
    multiplicative_closure, product_projections, FiniteRing, RingHom, SubringPair,
};
use crate::topology::{enumerate_posets, SpectralSpace};
use crate::BitSet;

/// Which rings and posets to generate, and the limits applied to them.
#[derive(Clone, Debug, Serialize)]
pub struct CorpusSpec {
    /// `Z_n` for `n` in this inclusive range.
    pub zn: Option<(usize, usize)>,
    /// Field orders among 4, 8, 9, 16.
    pub fields: Vec<usize>,
    /// `F_p[x]/(f)` for monic `f` of degree 2 up to `poly_max_degree`,
    /// one representative per isomorphism class within this family.
    pub poly_primes: Vec<u64>,
    pub poly_max_degree: usize,
    /// Binary (and with `ternary`, three-fold) products of the rings above,
    /// up to this size; 0 disables products.
    pub product_max: usize,
    pub ternary: bool,
    /// Rings larger than this are dropped from every family.
    pub max_ring: usize,
    /// Labeled posets on 1..=max_poset points.
    pub max_poset: usize,
    pub subring_cap: usize,
    pub seed: u64,
    /// Tasks not started within this budget are reported as truncated.
    pub time_budget_ms: Option<u64>,
    pub caps: Caps,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            zn: Some((2, 30)),
            fields: vec![4, 8, 9, 16],
            poly_primes: vec![2, 3],
            poly_max_degree: 3,
            product_max: 36,
            ternary: true,
            max_ring: 36,
            max_poset: 5,
            subring_cap: crate::ring::DEFAULT_SUBRING_CAP,
            seed: 0,
            time_budget_ms: None,
            caps: Caps::default(),
        }
    }
}

impl CorpusSpec {
    /// The default families restricted to rings of at most `max_ring`
    /// elements and posets of at most `max_poset` points.
    pub fn bounded(max_ring: usize, max_poset: usize) -> Self {
        CorpusSpec { max_ring, max_poset, ..CorpusSpec::default() }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidArgument(format!("corpus spec: {m}")));
        if self.max_ring == 0 || self.subring_cap == 0 {
            return bad("caps must be positive");
        }
        if self.zn.is_none() && self.fields.is_empty() && self.poly_primes.is_empty() && self.max_poset == 0 {
            return bad("no families selected");
        }
        if let Some((lo, hi)) = self.zn {
            if lo < 2 || lo > hi {
                return bad("Z_n range must satisfy 2 <= lo <= hi");
            }
        }
        if self.max_ring > self.subring_cap {
            return Err(Error::CapExceeded { what: "corpus ring size", size: self.max_ring, cap: self.subring_cap });
        }
        Ok(())
    }
}

fn field(q: usize) -> Result<FiniteRing> {
    let (p, f): (u64, &[u64]) = match q {
        4 => (2, &[1, 1, 1]),
        8 => (2, &[1, 1, 0, 1]),
        9 => (3, &[1, 0, 1]),
        16 => (2, &[1, 1, 0, 0, 1]),
        _ => return Err(Error::InvalidArgument(format!("fields family: no field of order {q} available"))),
    };
    Ok(make_poly_quotient(p, f)?.with_name(format!("F{q}")))
}

/// A corpus ring; products remember their two factors.
#[derive(Clone, Debug)]
pub struct CorpusRing {
    pub ring: Arc<FiniteRing>,
    pub factors: Option<(Arc<FiniteRing>, Arc<FiniteRing>)>,
}

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub rings: Vec<CorpusRing>,
    pub posets: Vec<SpectralSpace>,
    pub subring_cap: usize,
}

pub fn build_corpus(spec: &CorpusSpec) -> Result<Corpus> {
    spec.validate()?;
    let mut base: Vec<Arc<FiniteRing>> = Vec::new();
    if let Some((lo, hi)) = spec.zn {
        for n in lo..=hi.min(spec.max_ring) {
            base.push(Arc::new(make_zn(n)?));
        }
    }
    for &q in &spec.fields {
        let f = field(q)?;
        if f.size() <= spec.max_ring {
            base.push(Arc::new(f));
        }
    }
    let mut polys: Vec<Arc<FiniteRing>> = Vec::new();
    for &p in &spec.poly_primes {
        for deg in 2..=spec.poly_max_degree {
            let size = (p as usize).pow(deg as u32);
            if size > spec.max_ring {
                continue;
            }
            for idx in 0..size {
                let mut coeffs: Vec<u64> = (0..deg).map(|i| (idx / (p as usize).pow(i as u32) % p as usize) as u64).collect();
                coeffs.push(1);
                let r = make_poly_quotient(p, &coeffs)?;
                if !polys.iter().any(|q| q.size() == r.size() && is_isomorphic(q, &r)) {
                    polys.push(Arc::new(r));
                }
            }
        }
    }
    base.extend(polys);
    let mut rings: Vec<CorpusRing> = base.iter().map(|r| CorpusRing { ring: r.clone(), factors: None }).collect();
    let product_max = spec.product_max.min(spec.max_ring);
    if product_max > 0 {
        let factors: Vec<&Arc<FiniteRing>> = base.iter().filter(|r| 2 * r.size() <= product_max).collect();
        for (i, a) in factors.iter().enumerate() {
            for b in &factors[i..] {
                if a.size() * b.size() <= product_max {
                    let ab = Arc::new(make_product(a, b)?);
                    rings.push(CorpusRing { ring: ab, factors: Some(((*a).clone(), (*b).clone())) });
                }
            }
        }
        if spec.ternary {
            for (i, a) in factors.iter().enumerate() {
                for (j, b) in factors.iter().enumerate().skip(i) {
                    for c in &factors[j..] {
                        if a.size() * b.size() * c.size() <= product_max {
                            let ab = Arc::new(make_product(a, b)?);
                            let abc = Arc::new(make_product(&ab, c)?);
                            rings.push(CorpusRing { ring: abc, factors: Some((ab, (*c).clone())) });
                        }
                    }
                }
            }
        }
    }
    rings.retain(|r| r.ring.size() <= spec.max_ring);
    let mut posets = Vec::new();
    for n in 1..=spec.max_poset {
        posets.extend(enumerate_posets(n)?);
    }
    Ok(Corpus { rings, posets, subring_cap: spec.subring_cap })
}

impl Corpus {
    pub fn ring_named(&self, name: &str) -> Option<&Arc<FiniteRing>> {
        self.rings.iter().map(|r| &r.ring).find(|r| r.name() == name)
    }

    /// Every subring of every corpus ring, the whole ring included.
    pub fn pairs(&self) -> Result<Vec<SubringPair>> {
        let mut out = Vec::new();
        for r in &self.rings {
            out.extend(enumerate_subrings(&r.ring, self.subring_cap)?);
        }
        Ok(out)
    }

    /// Chains `A ⊆ B ⊆ C` of subrings with `C` the corpus ring.
    pub fn triples(&self) -> Result<Vec<Triple>> {
        let mut out = Vec::new();
        for r in &self.rings {
            let subs: Vec<BitSet> = enumerate_subrings(&r.ring, self.subring_cap)?.iter().map(|p| p.member()).collect();
            for &a in &subs {
                for &b in subs.iter().filter(|b| a.is_subset(**b)) {
                    out.push(Triple::new(r.ring.clone(), a, b, r.ring.all())?);
                }
            }
        }
        Ok(out)
    }

    /// Quotients by every proper ideal, localizations at the multiplicative
    /// set generated by one element (when it avoids 0), product projections
    /// and subring inclusions.
    pub fn homs(&self) -> Result<Vec<RingHom>> {
        let mut out = Vec::new();
        for cr in &self.rings {
            let r = &cr.ring;
            for ideal in enumerate_ideals(r, crate::ideal::DEFAULT_IDEAL_CAP)? {
                if ideal.is_proper(r) {
                    out.push(make_quotient(r, &ideal)?.1);
                }
            }
            let mut seen: Vec<BitSet> = Vec::new();
            for s in r.elements() {
                let set = multiplicative_closure(r, BitSet::singleton(s));
                if set.contains(r.zero()) || seen.contains(&set) {
                    continue;
                }
                seen.push(set);
                out.push(make_localization(r, set, false)?.1);
            }
            if let Some((a, b)) = &cr.factors {
                let (p, q) = product_projections(a, b, r)?;
                out.push(p);
                out.push(q);
            }
            for pair in enumerate_subrings(r, self.subring_cap)? {
                out.push(pair.inclusion());
            }
        }
        Ok(out)
    }

    /// Instances of the kinds `claim` accepts, in corpus order.
    pub fn instances(&self, claim: ClaimId) -> Result<Vec<Instance>> {
        let mut out = Vec::new();
        for kind in claim.kinds() {
            match *kind {
                "ring" => out.extend(self.rings.iter().map(|r| Instance::Ring(r.ring.clone()))),
                "pair" => out.extend(self.pairs()?.into_iter().map(Instance::Pair)),
                "triple" => out.extend(self.triples()?.into_iter().map(Instance::Triple)),
                "hom" => out.extend(self.homs()?.into_iter().map(Instance::Hom)),
                "poset" => out.extend(self.posets.iter().cloned().map(Instance::Poset)),
                _ => unreachable!("known instance kinds"),
            }
        }
        Ok(out)
    }
}
