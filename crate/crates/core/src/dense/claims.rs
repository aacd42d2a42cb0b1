//! The claim catalog: each claim is evaluated on an instance as a list of
//! labeled hypotheses, conclusions and equivalent conditions.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use serde::{Serialize, Serializer};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use super::{cvu_set, hom_equivalence_check, is_dense, Caps, DensityMode, PairContext};
use crate::bitset::BitSet;
use crate::criterion::cn_equational;
use crate::error::{Error, Result};
use crate::ideal::{o_m, Spectra};
use crate::ring::{write_ring, FiniteRing, RingHom, SubringPair};
use crate::topology::{
    continuous_retractions, gj7m_criterion, is_cn_chain, is_completely_normal_topological, is_normal_topological,
    is_pm, is_weak_cn, max_is_t2, max_subspace_is_t2, maxima_have_closed_generalizations, mu_retraction,
    space_from_ring, weak_cn_by_maximal_points, write_poset, SpectralSpace,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
    C12,
    C13,
    C14,
    C15,
    C16,
    C17,
    C18,
    C19,
    C20,
    C21,
    C22,
    C23,
}

use ClaimId::*;

impl ClaimId {
    pub const ALL: [ClaimId; 23] =
        [C1, C2, C3, C4, C5, C6, C7, C8, C9, C10, C11, C12, C13, C14, C15, C16, C17, C18, C19, C20, C21, C22, C23];

    pub fn number(self) -> usize {
        self as usize + 1
    }

    /// Instance kinds the claim is stated for.
    pub fn kinds(self) -> &'static [&'static str] {
        match self {
            C9 | C10 => &["triple"],
            C16 => &["hom"],
            C17 | C21 | C22 => &["ring", "poset"],
            C19 | C20 => &["ring"],
            _ => &["pair"],
        }
    }

    pub fn accepts(self, instance: &Instance) -> bool {
        self.kinds().contains(&instance.kind())
    }

    /// Whether a refutation counts as a failed theorem. `C21` compares two
    /// formulations of a definition and is reported without failing a run.
    pub fn is_theorem(self) -> bool {
        self != C21
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.number())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        t.strip_prefix(['C', 'c'])
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&k| (1..=23).contains(&k))
            .map(|k| ClaimId::ALL[k - 1])
            .ok_or_else(|| Error::UnknownClaim(t.to_string()))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A chain `A ⊆ B ⊆ C` of subrings of `ring`, as element masks.
#[derive(Clone, Debug)]
pub struct Triple {
    pub ring: Arc<FiniteRing>,
    pub a: BitSet,
    pub b: BitSet,
    pub c: BitSet,
}

impl Triple {
    pub fn new(ring: Arc<FiniteRing>, a: BitSet, b: BitSet, c: BitSet) -> Result<Self> {
        for m in [a, b, c] {
            SubringPair::new(ring.clone(), m)?;
        }
        if !a.is_subset(b) || !b.is_subset(c) {
            return Err(Error::NotASubring(format!("{a} ⊆ {b} ⊆ {c} is not a chain")));
        }
        Ok(Triple { ring, a, b, c })
    }

    pub fn a_in_b(&self) -> SubringPair {
        SubringPair::nested(&self.ring, self.b, self.a).expect("validated chain")
    }

    pub fn b_in_c(&self) -> SubringPair {
        SubringPair::nested(&self.ring, self.c, self.b).expect("validated chain")
    }

    pub fn a_in_c(&self) -> SubringPair {
        SubringPair::nested(&self.ring, self.c, self.a).expect("validated chain")
    }
}

#[derive(Clone, Debug)]
pub enum Instance {
    Ring(Arc<FiniteRing>),
    Pair(SubringPair),
    Triple(Triple),
    Hom(RingHom),
    Poset(SpectralSpace),
}

fn elems(set: BitSet) -> String {
    set.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Ring(_) => "ring",
            Instance::Pair(_) => "pair",
            Instance::Triple(_) => "triple",
            Instance::Hom(_) => "hom",
            Instance::Poset(_) => "poset",
        }
    }

    /// Text form used for digests.
    pub fn to_text(&self) -> String {
        match self {
            Instance::Ring(r) => write_ring(r),
            Instance::Pair(p) => format!("{}subring {}\n", write_ring(p.ambient()), elems(p.member())),
            Instance::Triple(t) => {
                format!("{}chain\n{}\n{}\n{}\n", write_ring(&t.ring), elems(t.a), elems(t.b), elems(t.c))
            }
            Instance::Hom(h) => {
                let map: Vec<String> = h.table().iter().map(|e| e.to_string()).collect();
                format!("hom\n{}{}map {}\n", write_ring(h.domain()), write_ring(h.codomain()), map.join(" "))
            }
            Instance::Poset(s) => write_poset(s),
        }
    }

    /// First 16 hex digits of the SHA-256 of [`Instance::to_text`].
    pub fn digest(&self) -> String {
        let mut h = hex::encode(Sha256::digest(self.to_text().as_bytes()));
        h.truncate(16);
        h
    }

    /// Short human-readable name.
    pub fn label(&self) -> String {
        match self {
            Instance::Ring(r) => r.name().to_string(),
            Instance::Pair(p) => format!("{} ⊆ {}", p.member(), p.ambient().name()),
            Instance::Triple(t) => format!("{} ⊆ {} ⊆ {} in {}", t.a, t.b, t.c, t.ring.name()),
            Instance::Hom(h) => format!("{} -> {}", h.domain().name(), h.codomain().name()),
            Instance::Poset(s) => s.name().to_string(),
        }
    }

    /// The instance as element lists, enough to rebuild it together with
    /// the ring tables.
    pub fn describe(&self) -> Value {
        match self {
            Instance::Ring(r) => json!({ "kind": "ring", "ring": r.name() }),
            Instance::Pair(p) => json!({ "kind": "pair", "ring": p.ambient().name(), "subring": p.member() }),
            Instance::Triple(t) => json!({ "kind": "triple", "ring": t.ring.name(), "a": t.a, "b": t.b, "c": t.c }),
            Instance::Hom(h) => json!({
                "kind": "hom",
                "domain": h.domain().name(),
                "codomain": h.codomain().name(),
                "map": h.table(),
            }),
            Instance::Poset(s) => json!({ "kind": "poset", "points": s.len(), "le": s.strict_relations() }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Labeled {
    pub label: &'static str,
    pub value: bool,
}

/// Hypotheses, conclusions and conditions claimed equivalent, each with its
/// computed truth value. `objects` carries supporting data for reports.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Evaluation {
    pub hypotheses: Vec<Labeled>,
    pub conclusions: Vec<Labeled>,
    pub equivalent: Vec<Labeled>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub objects: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Evaluation {
    pub fn hyp(&mut self, label: &'static str, value: bool) -> &mut Self {
        self.hypotheses.push(Labeled { label, value });
        self
    }

    pub fn concl(&mut self, label: &'static str, value: bool) -> &mut Self {
        self.conclusions.push(Labeled { label, value });
        self
    }

    pub fn equiv(&mut self, label: &'static str, value: bool) -> &mut Self {
        self.equivalent.push(Labeled { label, value });
        self
    }

    pub fn object(&mut self, name: &str, value: impl Serialize) -> &mut Self {
        self.objects.insert(name.to_string(), serde_json::to_value(value).expect("serializable"));
        self
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|h| h.value)
    }

    /// Inapplicable when a hypothesis fails or nothing was evaluated.
    pub fn status(&self) -> Status {
        if !self.hypotheses_hold() || (self.conclusions.is_empty() && self.equivalent.is_empty()) {
            return Status::Inapplicable;
        }
        let first = self.equivalent.first().map(|l| l.value);
        let agree = self.equivalent.iter().all(|l| Some(l.value) == first);
        if agree && self.conclusions.iter().all(|c| c.value) {
            Status::Verified
        } else {
            Status::Refuted
        }
    }

    /// Labeled values agree, ignoring objects and notes.
    pub fn same_values(&self, other: &Evaluation) -> bool {
        self.hypotheses == other.hypotheses && self.conclusions == other.conclusions && self.equivalent == other.equivalent
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    Inapplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::Inapplicable => "inapplicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub instance: Value,
    pub evaluation: Evaluation,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub claim: ClaimId,
    pub status: Status,
    pub witness: Option<Witness>,
    pub elapsed_ms: u64,
    #[serde(skip)]
    pub note: Option<String>,
}

/// Evaluates `claim` on `instance`. A refutation is re-derived by the
/// independent evaluator in [`crate::oracle`] and only returned if both
/// agree on every labeled value.
pub fn check_claim(claim: ClaimId, instance: &Instance, caps: &Caps) -> Result<Verdict> {
    let start = Instant::now();
    let ev = evaluate(claim, instance, caps)?;
    let status = ev.status();
    if status == Status::Refuted {
        let again = crate::oracle::evaluate_claim(claim, instance)?;
        if again.status() != Status::Refuted || !again.same_values(&ev) {
            return Err(Error::WitnessRejected {
                claim: claim.to_string(),
                detail: format!(
                    "main {} vs independent {}",
                    serde_json::to_string(&ev).unwrap_or_default(),
                    serde_json::to_string(&again).unwrap_or_default()
                ),
            });
        }
    }
    let note = ev.note.clone();
    let witness = (status == Status::Refuted).then(|| Witness { instance: instance.describe(), evaluation: ev });
    Ok(Verdict { claim, status, witness, elapsed_ms: start.elapsed().as_millis() as u64, note })
}

pub(crate) mod labels {
    pub const DENSE: &str = "A is dense in B";
    pub const INJECTIVE: &str = "i* is injective";
    pub const INCOMPARABLE_PRIMES: &str = "incomparable primes of B have incomparable contractions";
    pub const REFLECTS: &str = "P ∩ A ⊆ Q ∩ A implies P ⊆ Q";
    pub const MIN_INTO_MIN: &str = "Q ↦ Q ∩ A maps min B into min A";
    pub const MIN_BIJECTION: &str = "Q ↦ Q ∩ A is a bijection min B → min A";
    pub const B_PM: &str = "B is pm";
    pub const A_PM: &str = "A is pm";
    pub const MEET_NO_PRIME: &str = "(M ∩ A) ∩ (M' ∩ A) contains no prime of A";
    pub const INJECTIVE_OPEN: &str = "i* is injective and open";
    pub const EMBEDDING_DENSE: &str = "i* is an embedding with dense image";
    pub const NOTHING_ABOVE_MAX: &str = "no P ∩ A lies strictly above some M ∩ A";
    pub const AB_DENSE: &str = "A is dense in B";
    pub const BC_DENSE: &str = "B is dense in C";
    pub const AC_DENSE: &str = "A is dense in C";
    pub const COMAXIMAL: &str = "contracted maximal ideals are comaximal";
    pub const INCOMPARABLE_MAX: &str = "contracted maximal ideals are incomparable";
    pub const WCN_WRT: &str = "A is weak completely normal in B";
    pub const A_CN: &str = "Spec A is completely normal";
    pub const B_CN: &str = "Spec B is completely normal";
    pub const LAMBDA_HOMEO: &str = "λ is a homeomorphism";
    pub const LAMBDA_CONTINUOUS: &str = "λ is continuous";
    pub const LAMBDA_CLOSED: &str = "λ is closed";
    pub const LAMBDA_ONTO: &str = "λ is onto";
    pub const THETA_HOMEO: &str = "Θ is a homeomorphism";
    pub const KERNEL_NIL: &str = "ker f ⊆ nil A";
    pub const IMAGE_DENSE: &str = "f*(Spec B) is dense in Spec A";
    pub const PRIME_BELOW: &str = "every prime of A contains some f*(Q)";
    pub const PM: &str = "the space is pm";
    pub const MU: &str = "μ is a continuous retraction onto max";
    pub const RETRACT: &str = "max is a retract";
    pub const O_M_UNIQUE: &str = "M is the only maximal ideal containing O_M";
    pub const CLOSED_GENERALIZATIONS: &str = "each maximal point has closed generalizations";
    pub const NORMAL: &str = "the space is normal";
    pub const UNIQUE_RETRACTION: &str = "when pm, the retraction onto max is unique";
    pub const MAX_T2_WHEN_PM: &str = "when pm, max is Hausdorff";
    pub const EQUATIONAL: &str = "the equational criterion holds";
    pub const CN_TOPOLOGICAL: &str = "the space is completely normal";
    pub const MAX_T2: &str = "max is Hausdorff";
    pub const GJ7M: &str = "distinct maximal ideals admit a, a' with aa' ∈ jac";
    pub const WCN: &str = "the space is weak completely normal";
    pub const WCN_MAX: &str = "incomparable points lie below no common maximal point";
    pub const CN_CHAIN: &str = "the space is completely normal (chain form)";
    pub const CVU_IN_A: &str = "every C^v_u lies in A";
    pub const CVU_IDEAL: &str = "every C^v_u is an ideal of A";
    pub const CVU_NONZERO: &str = "every C^v_u is nonzero";
}

use labels as l;

pub(crate) const C21_RING_NOTE: &str = "weak complete normality of a ring quantifies over every ring containing it, \
which cannot be enumerated; the claim is checked on finite posets, where it compares the two intrinsic formulations";

/// Main-path evaluation, without re-validation.
pub fn evaluate(claim: ClaimId, instance: &Instance, caps: &Caps) -> Result<Evaluation> {
    if !claim.accepts(instance) {
        return Err(Error::SignatureMismatch { claim: claim.to_string(), kind: instance.kind() });
    }
    match instance {
        Instance::Pair(p) => pair_claim(claim, p, caps),
        Instance::Triple(t) => triple_claim(claim, t, caps),
        Instance::Hom(h) => {
            let e = hom_equivalence_check(h, caps.ideal)?;
            let mut ev = Evaluation::default();
            ev.equiv(l::KERNEL_NIL, e.kernel_in_nilradical)
                .equiv(l::IMAGE_DENSE, e.dense_image)
                .equiv(l::PRIME_BELOW, e.prime_below)
                .object("kernel", h.kernel());
            Ok(ev)
        }
        Instance::Ring(r) => ring_claim(claim, r, caps),
        Instance::Poset(s) => space_claim(claim, s, None, caps),
    }
}

fn ring_claim(claim: ClaimId, r: &Arc<FiniteRing>, caps: &Caps) -> Result<Evaluation> {
    let mut ev = Evaluation::default();
    match claim {
        C19 => {
            let table = cn_equational(r, caps.criterion)?;
            let space = space_from_ring(r, caps.ideal)?.space;
            ev.equiv(l::EQUATIONAL, table.holds)
                .equiv(l::CN_TOPOLOGICAL, is_completely_normal_topological(&space, caps.cn_points)?);
            if !table.failures.is_empty() {
                ev.object("failures", &table.failures);
            }
        }
        C20 => {
            ev.equiv(l::MAX_T2, max_is_t2(r, caps.ideal)?).equiv(l::GJ7M, gj7m_criterion(r, caps.ideal)?);
        }
        C21 => {
            ev.note = Some(C21_RING_NOTE.to_string());
        }
        _ => {
            let rs = space_from_ring(r, caps.ideal)?;
            return space_claim(claim, &rs.space, Some(r), caps);
        }
    }
    Ok(ev)
}

/// Claims about a spectral space; `ring` is set when the space is `Spec R`.
fn space_claim(claim: ClaimId, s: &SpectralSpace, ring: Option<&Arc<FiniteRing>>, caps: &Caps) -> Result<Evaluation> {
    let mut ev = Evaluation::default();
    match claim {
        C17 => {
            let pm = is_pm(s);
            let retractions = continuous_retractions(s, caps.retraction_points)?;
            ev.equiv(l::PM, pm).equiv(l::MU, mu_retraction(s).is_ok()).equiv(l::RETRACT, !retractions.is_empty());
            match ring {
                Some(r) => {
                    let sp = Spectra::compute(r, caps.ideal)?;
                    let mut unique = true;
                    for &m in &sp.maximal {
                        let om = o_m(r, m, caps.ideal)?;
                        unique &= sp.maximal.iter().filter(|q| om.is_subset(**q)).count() == 1;
                    }
                    ev.equiv(l::O_M_UNIQUE, unique);
                }
                None => {
                    ev.equiv(l::CLOSED_GENERALIZATIONS, maxima_have_closed_generalizations(s));
                }
            }
            ev.equiv(l::NORMAL, is_normal_topological(s, caps.normal_points)?)
                .concl(l::UNIQUE_RETRACTION, !pm || retractions.len() == 1)
                .concl(l::MAX_T2_WHEN_PM, !pm || max_subspace_is_t2(s));
        }
        C21 => {
            ev.equiv(l::WCN, is_weak_cn(s)).equiv(l::WCN_MAX, weak_cn_by_maximal_points(s));
        }
        C22 => {
            ev.hyp(l::WCN, is_weak_cn(s)).hyp(l::PM, is_pm(s)).concl(l::CN_CHAIN, is_cn_chain(s));
        }
        _ => unreachable!("signature checked"),
    }
    Ok(ev)
}

fn triple_claim(claim: ClaimId, t: &Triple, caps: &Caps) -> Result<Evaluation> {
    let dense = |p: SubringPair| -> Result<bool> { Ok(is_dense(&p, DensityMode::Primes, caps.ideal)?.dense) };
    let mut ev = Evaluation::default();
    match claim {
        C9 => {
            ev.hyp(l::AB_DENSE, dense(t.a_in_b())?).hyp(l::BC_DENSE, dense(t.b_in_c())?);
            if ev.hypotheses_hold() {
                ev.concl(l::AC_DENSE, dense(t.a_in_c())?);
            }
        }
        C10 => {
            ev.hyp(l::AC_DENSE, dense(t.a_in_c())?);
            if ev.hypotheses_hold() {
                ev.concl(l::BC_DENSE, dense(t.b_in_c())?);
            }
        }
        _ => unreachable!("signature checked"),
    }
    Ok(ev)
}

fn pair_claim(claim: ClaimId, pair: &SubringPair, caps: &Caps) -> Result<Evaluation> {
    let ctx = PairContext::new(pair, caps.ideal)?;
    let dense = ctx.is_dense();
    let con = ctx.contraction();
    let sb = &ctx.spec_b().space;
    let sa = &ctx.spec_a().space;
    let n = sb.len();
    let points = || (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)));
    let mut ev = Evaluation::default();
    ev.object("subring", pair.member());
    match claim {
        C1 => {
            ev.hyp(l::DENSE, dense).concl(l::INJECTIVE, con.is_injective());
        }
        C2 => {
            let bad = points().find(|&(i, j)| !sb.comparable(i, j) && sa.comparable(con.apply(i), con.apply(j)));
            ev.hyp(l::DENSE, dense).concl(l::INCOMPARABLE_PRIMES, bad.is_none());
            if let Some((i, j)) = bad {
                ev.object("P", ctx.spec_b().primes[i]).object("Q", ctx.spec_b().primes[j]);
            }
        }
        C3 => {
            let bad = points().find(|&(i, j)| sa.leq(con.apply(i), con.apply(j)) && !sb.leq(i, j));
            ev.hyp(l::DENSE, dense).concl(l::REFLECTS, bad.is_none());
            if let Some((i, j)) = bad {
                ev.object("P", ctx.spec_b().primes[i]).object("Q", ctx.spec_b().primes[j]);
            }
        }
        C4 => {
            let (min_b, min_a) = (ctx.min_b(), ctx.min_a());
            let image: BitSet = min_b.iter().map(|i| con.apply(i)).collect();
            let into = image.is_subset(min_a);
            ev.hyp(l::DENSE, dense)
                .concl(l::MIN_INTO_MIN, into)
                .concl(l::MIN_BIJECTION, into && image == min_a && image.len() == min_b.len());
        }
        C5 => {
            let max = ctx.max_b().to_vec();
            let primes_a = &ctx.spec_a().primes;
            let ok = max.iter().enumerate().all(|(k, &i)| {
                max[k + 1..].iter().all(|&j| {
                    let meet = primes_a[con.apply(i)].meet(primes_a[con.apply(j)]);
                    !primes_a.iter().any(|p| p.is_subset(meet))
                })
            });
            ev.hyp(l::DENSE, dense).hyp(l::B_PM, is_pm(sb)).concl(l::MEET_NO_PRIME, ok);
        }
        C6 => {
            let p = con.props();
            ev.equiv(l::DENSE, dense).equiv(l::INJECTIVE_OPEN, p.injective && p.open);
        }
        C7 => {
            let p = con.props();
            ev.equiv(l::DENSE, dense).equiv(l::EMBEDDING_DENSE, p.embedding && p.dense_image);
        }
        C8 => {
            let max = ctx.max_b();
            let bad = points().find(|&(m, p)| {
                let (c, d) = (con.apply(m), con.apply(p));
                max.contains(m) && c != d && sa.leq(c, d)
            });
            ev.hyp(l::DENSE, dense).concl(l::NOTHING_ABOVE_MAX, bad.is_none());
            if let Some((m, p)) = bad {
                ev.object("M", ctx.spec_b().primes[m]).object("P", ctx.spec_b().primes[p]);
            }
        }
        C11 => {
            ev.hyp(l::COMAXIMAL, ctx.comaximal_contractions())
                .concl(l::INCOMPARABLE_MAX, ctx.incomparable_contractions())
                .concl(l::WCN_WRT, ctx.weak_cn_wrt());
        }
        C12 => {
            ev.hyp(l::DENSE, dense).hyp(l::WCN_WRT, ctx.weak_cn_wrt()).concl(l::COMAXIMAL, ctx.comaximal_contractions());
        }
        C13 => {
            ev.hyp(l::DENSE, dense)
                .hyp(l::A_CN, is_completely_normal_topological(sa, caps.cn_points)?)
                .concl(l::B_CN, is_completely_normal_topological(sb, caps.cn_points)?)
                .concl(l::B_PM, is_pm(sb));
        }
        C14 => {
            let homeo = ctx.lambda_map().map(|m| m.props().homeomorphism).unwrap_or(false);
            ev.hyp(l::A_PM, ctx.sub_is_pm())
                .hyp(l::DENSE, dense)
                .hyp(l::WCN_WRT, ctx.weak_cn_wrt())
                .concl(l::LAMBDA_HOMEO, homeo);
        }
        C15 => {
            let homeo = ctx.theta_map().map(|m| m.props().homeomorphism).unwrap_or(false);
            ev.hyp(l::DENSE, dense).concl(l::THETA_HOMEO, homeo);
        }
        C18 => {
            ev.hyp(l::A_PM, ctx.sub_is_pm());
            match ctx.lambda_map() {
                Ok(m) => {
                    let p = m.props();
                    ev.concl(l::LAMBDA_CONTINUOUS, p.continuous)
                        .concl(l::LAMBDA_CLOSED, p.closed_into_target)
                        .concl(l::LAMBDA_ONTO, p.surjective)
                        .equiv(l::LAMBDA_HOMEO, p.homeomorphism)
                        .object("lambda", m.table());
                }
                Err(f) => {
                    ev.concl(l::LAMBDA_CONTINUOUS, false)
                        .concl(l::LAMBDA_CLOSED, false)
                        .concl(l::LAMBDA_ONTO, false)
                        .equiv(l::LAMBDA_HOMEO, false)
                        .object("lambda_failure", f);
                }
            }
            ev.equiv(l::COMAXIMAL, ctx.comaximal_contractions());
        }
        C23 => {
            let r = pair.ambient();
            let mut reports = Vec::new();
            for u in pair.member().iter() {
                if let Some(v) = r.inverse(u) {
                    reports.push(cvu_set(pair, u, v)?);
                }
            }
            ev.hyp(l::DENSE, dense)
                .concl(l::CVU_IN_A, reports.iter().all(|c| c.within_a))
                .concl(l::CVU_IDEAL, reports.iter().all(|c| c.ideal_of_a))
                .concl(l::CVU_NONZERO, reports.iter().all(|c| c.nonzero));
            if let Some(bad) = reports.iter().find(|c| !(c.within_a && c.ideal_of_a && c.nonzero)) {
                ev.object("cvu", bad);
            }
        }
        _ => unreachable!("signature checked"),
    }
    Ok(ev)
}
