use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::{build_corpus, CorpusSpec};
use crate::dense::{is_dense, DensityMode};
use crate::error::{Error, Result};
use crate::ring::{enumerate_subrings, SubringPair};
use crate::topology::{
    canonical_code, is_cn_chain, is_completely_normal_topological, is_pm, is_weak_cn, space_from_ring, write_poset,
    SpectralSpace,
};
use crate::BitSet;

/// `A ⊆ C ⊆ B` with `A` dense in `B` but not in `C`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityCounterexample {
    pub ring: String,
    pub a: Vec<usize>,
    pub c: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntermediateDensityReport {
    pub rings: usize,
    pub subrings: usize,
    /// Chains `A ⊊ C ⊊ B` with `A` dense in `B`.
    pub chains_checked: usize,
    /// Chains discarded because `A` is not dense in `B`.
    pub chains_skipped: usize,
    pub counterexamples: Vec<DensityCounterexample>,
    pub exhaustive_none: bool,
}

/// For every corpus ring and every chain of subrings `A ⊆ C ⊆ B` with `A`
/// dense in `B`, tests whether `A` is dense in `C`.
pub fn hunt_intermediate_density(spec: &CorpusSpec) -> Result<IntermediateDensityReport> {
    let corpus = build_corpus(&CorpusSpec { max_poset: 0, ..spec.clone() })?;
    let mut report = IntermediateDensityReport {
        rings: corpus.rings.len(),
        subrings: 0,
        chains_checked: 0,
        chains_skipped: 0,
        counterexamples: Vec::new(),
        exhaustive_none: true,
    };
    for cr in &corpus.rings {
        let ring = &cr.ring;
        let subs: Vec<BitSet> = enumerate_subrings(ring, spec.subring_cap)?.iter().map(|p| p.member()).collect();
        report.subrings += subs.len();
        let mut dense: HashMap<(BitSet, BitSet), bool> = HashMap::new();
        let mut dense_in = |inner: BitSet, outer: BitSet| -> Result<bool> {
            if let Some(&d) = dense.get(&(inner, outer)) {
                return Ok(d);
            }
            let pair = SubringPair::nested(ring, outer, inner)?;
            let d = is_dense(&pair, DensityMode::Primes, spec.caps.ideal)?.dense;
            dense.insert((inner, outer), d);
            Ok(d)
        };
        for &a in &subs {
            for &b in subs.iter().filter(|&&b| a.is_subset(b) && a != b) {
                let between: Vec<BitSet> =
                    subs.iter().copied().filter(|&c| a.is_subset(c) && c.is_subset(b) && c != a && c != b).collect();
                if between.is_empty() {
                    continue;
                }
                if !dense_in(a, b)? {
                    report.chains_skipped += between.len();
                    continue;
                }
                for c in between {
                    report.chains_checked += 1;
                    if !dense_in(a, c)? {
                        if crate::oracle::is_dense(ring, a, c) {
                            return Err(Error::WitnessRejected {
                                claim: "intermediate density".into(),
                                detail: format!("{}: A={a} C={c}", ring.name()),
                            });
                        }
                        report.counterexamples.push(DensityCounterexample {
                            ring: ring.name().to_string(),
                            a: a.iter().collect(),
                            c: c.iter().collect(),
                            b: b.iter().collect(),
                        });
                    }
                }
            }
        }
    }
    report.exhaustive_none = report.counterexamples.is_empty();
    Ok(report)
}

/// Posets grouped by the values of (chain-CN, weak CN, pm).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruthRow {
    pub cn_chain: bool,
    pub weak_cn: bool,
    pub pm: bool,
    pub posets: usize,
    /// How many of them are completely normal as topological spaces.
    pub cn_topological: usize,
}

/// One representative per isomorphism class of posets on which chain-CN
/// and weak CN disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatingPoset {
    pub direction: &'static str,
    pub points: usize,
    pub relations: Vec<(usize, usize)>,
    pub text: String,
    pub cn_chain: bool,
    pub weak_cn: bool,
    pub pm: bool,
    pub cn_topological: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WcnVsCnReport {
    pub rings: usize,
    pub rings_agreeing: usize,
    pub ring_note: String,
    pub posets: usize,
    pub truth_table: Vec<TruthRow>,
    pub separating: Vec<SeparatingPoset>,
}

impl WcnVsCnReport {
    /// Whether some separating poset is isomorphic to `s`.
    pub fn separates(&self, s: &SpectralSpace) -> Option<&SeparatingPoset> {
        let code = canonical_code(s);
        self.separating.iter().find(|p| {
            SpectralSpace::from_relations("", p.points, &p.relations).map(|q| canonical_code(&q) == code).unwrap_or(false)
        })
    }
}

pub const WEAK_NOT_CHAIN: &str = "weak CN but not chain-CN";
pub const CHAIN_NOT_WEAK: &str = "chain-CN but not weak CN";

const RING_NOTE: &str = "every prime of a finite ring is maximal, so its spectrum is a discrete antichain \
on which both predicates hold trivially";

/// Compares chain-CN with weak CN on corpus ring spectra and on every
/// labeled poset up to `spec.max_poset` points.
pub fn hunt_wcn_vs_cn(spec: &CorpusSpec) -> Result<WcnVsCnReport> {
    let corpus = build_corpus(spec)?;
    let mut rings_agreeing = 0;
    for cr in &corpus.rings {
        let s = space_from_ring(&cr.ring, spec.caps.ideal)?.space;
        if is_cn_chain(&s) && is_weak_cn(&s) {
            rings_agreeing += 1;
        }
    }
    let mut table: BTreeMap<(bool, bool, bool), (usize, usize)> = BTreeMap::new();
    let mut seen: BTreeMap<(usize, u128), SeparatingPoset> = BTreeMap::new();
    for s in &corpus.posets {
        let chain = is_cn_chain(s);
        let weak = is_weak_cn(s);
        let pm = is_pm(s);
        let topo = is_completely_normal_topological(s, spec.caps.cn_points)?;
        let row = table.entry((chain, weak, pm)).or_default();
        row.0 += 1;
        row.1 += usize::from(topo);
        if chain != weak {
            seen.entry(canonical_code(s)).or_insert_with(|| SeparatingPoset {
                direction: if weak { WEAK_NOT_CHAIN } else { CHAIN_NOT_WEAK },
                points: s.len(),
                relations: s.strict_relations(),
                text: write_poset(s),
                cn_chain: chain,
                weak_cn: weak,
                pm,
                cn_topological: topo,
            });
        }
    }
    let truth_table = table
        .into_iter()
        .map(|((cn_chain, weak_cn, pm), (posets, cn_topological))| TruthRow { cn_chain, weak_cn, pm, posets, cn_topological })
        .collect();
    let mut separating: Vec<SeparatingPoset> = seen.into_values().collect();
    separating.sort_by(|x, y| (x.points, x.direction, &x.relations).cmp(&(y.points, y.direction, &y.relations)));
    Ok(WcnVsCnReport {
        rings: corpus.rings.len(),
        rings_agreeing,
        ring_note: RING_NOTE.to_string(),
        posets: corpus.posets.len(),
        truth_table,
        separating,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rings_only(max_ring: usize) -> CorpusSpec {
        CorpusSpec { max_poset: 0, ..CorpusSpec::bounded(max_ring, 0) }
    }

    #[test]
    fn intermediate_density_small() {
        let r = hunt_intermediate_density(&rings_only(8)).unwrap();
        assert!(r.exhaustive_none);
        assert!(r.rings > 0);
    }

    #[test]
    fn v_and_lambda_separate() {
        let spec = CorpusSpec { max_poset: 3, ..CorpusSpec::bounded(4, 3) };
        let r = hunt_wcn_vs_cn(&spec).unwrap();
        assert_eq!(r.rings, r.rings_agreeing);
        let v = r.separates(&SpectralSpace::v_poset()).unwrap();
        assert_eq!((v.weak_cn, v.cn_chain, v.pm), (true, false, false));
        let l = r.separates(&SpectralSpace::lambda_poset()).unwrap();
        assert_eq!((l.weak_cn, l.cn_chain, l.pm), (false, true, true));
        assert!(r.separates(&SpectralSpace::antichain(3)).is_none());
        assert_eq!(r.truth_table.iter().map(|t| t.posets).sum::<usize>(), 23);
    }
}
