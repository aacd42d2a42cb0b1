//! A second evaluator for the claim catalog that shares no algorithm with
//! the main path.
//!
//! Primes come from primitive idempotents: a finite ring is a product of
//! local rings `R·e`, and its primes are `{x : x·e nilpotent}` for the
//! primitive idempotents `e`. Topologies are explicit families of open sets
//! closed under union from a basis (`X_f` for rings, principal down-sets for
//! posets), and every predicate is read off those families. Density is
//! checked over these primes.

use std::collections::BTreeSet;

use crate::bitset::BitSet;
use crate::dense::{labels as l, ClaimId, Evaluation, Instance};
use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};
use crate::topology::SpectralSpace;

/// A finite topology as its list of open sets.
#[derive(Clone, Debug)]
pub struct Topology {
    n: usize,
    opens: Vec<BitSet>,
}

impl Topology {
    pub fn from_basis(n: usize, basis: impl IntoIterator<Item = BitSet>) -> Self {
        let basis: Vec<BitSet> = basis.into_iter().collect();
        let mut opens: BTreeSet<BitSet> = [BitSet::EMPTY, BitSet::full(n)].into_iter().collect();
        loop {
            let mut fresh = Vec::new();
            for &o in &opens {
                for &b in &basis {
                    if !opens.contains(&(o | b)) {
                        fresh.push(o | b);
                    }
                }
            }
            if fresh.is_empty() {
                break;
            }
            opens.extend(fresh);
        }
        Topology { n, opens: opens.into_iter().collect() }
    }

    pub fn of_poset(s: &SpectralSpace) -> Self {
        let n = s.len();
        Topology::from_basis(n, (0..n).map(|x| (0..n).filter(|&y| s.leq(y, x)).collect()))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    fn all(&self) -> BitSet {
        BitSet::full(self.n)
    }

    pub fn opens(&self) -> &[BitSet] {
        &self.opens
    }

    fn is_open(&self, s: BitSet) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    fn closeds(&self) -> impl Iterator<Item = BitSet> + '_ {
        self.opens.iter().map(|&o| self.all() - o)
    }

    fn is_closed(&self, s: BitSet) -> bool {
        self.is_open(self.all() - s)
    }

    pub fn closure(&self, s: BitSet) -> BitSet {
        self.closeds().filter(|c| s.is_subset(*c)).fold(self.all(), |acc, c| acc & c)
    }

    /// Smallest open set containing `s`.
    fn nbhd(&self, s: BitSet) -> BitSet {
        self.opens.iter().filter(|o| s.is_subset(**o)).fold(self.all(), |acc, &o| acc & o)
    }

    /// `y ∈ cl{x}`.
    pub fn specializes(&self, x: usize, y: usize) -> bool {
        self.closure(BitSet::singleton(x)).contains(y)
    }

    fn comparable(&self, x: usize, y: usize) -> bool {
        self.specializes(x, y) || self.specializes(y, x)
    }

    pub fn closed_points(&self) -> BitSet {
        (0..self.n).filter(|&x| self.closure(BitSet::singleton(x)) == BitSet::singleton(x)).collect()
    }

    /// Points in the closure of no other point.
    pub fn generic_points(&self) -> BitSet {
        (0..self.n).filter(|&x| (0..self.n).all(|y| y == x || !self.specializes(y, x))).collect()
    }

    /// Subspace topology on `pts`, reindexed in increasing order.
    fn subspace(&self, pts: BitSet) -> (Topology, Vec<usize>) {
        let back = pts.to_vec();
        let local = |set: BitSet| -> BitSet { back.iter().enumerate().filter(|(_, &p)| set.contains(p)).map(|(i, _)| i).collect() };
        let opens: BTreeSet<BitSet> = self.opens.iter().map(|&o| local(o)).collect();
        (Topology { n: back.len(), opens: opens.into_iter().collect() }, back)
    }

    pub fn is_hausdorff(&self) -> bool {
        (0..self.n).all(|x| {
            (0..self.n).all(|y| {
                x == y
                    || self.opens.iter().any(|u| {
                        u.contains(x) && self.opens.iter().any(|v| v.contains(y) && u.is_disjoint(*v))
                    })
            })
        })
    }

    pub fn is_normal(&self) -> bool {
        let closed: Vec<BitSet> = self.closeds().collect();
        closed.iter().all(|&f| {
            closed.iter().all(|&g| !f.is_disjoint(g) || self.nbhd(f).is_disjoint(self.nbhd(g)))
        })
    }

    pub fn is_completely_normal(&self) -> bool {
        let subsets: Vec<BitSet> = self.all().subsets().collect();
        let cl: Vec<BitSet> = subsets.iter().map(|&s| self.closure(s)).collect();
        let nb: Vec<BitSet> = subsets.iter().map(|&s| self.nbhd(s)).collect();
        for (i, &s) in subsets.iter().enumerate() {
            for (j, &t) in subsets.iter().enumerate() {
                if cl[i].is_disjoint(t) && s.is_disjoint(cl[j]) && !nb[i].is_disjoint(nb[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// The closed points below each point.
    fn closed_points_over(&self, x: usize) -> BitSet {
        self.closure(BitSet::singleton(x)) & self.closed_points()
    }

    pub fn is_pm(&self) -> bool {
        (0..self.n).all(|x| self.closed_points_over(x).len() == 1)
    }

    pub fn is_cn_chain(&self) -> bool {
        (0..self.n).all(|x| {
            let c = self.closure(BitSet::singleton(x));
            c.iter().all(|y| c.iter().all(|z| self.comparable(y, z)))
        })
    }

    pub fn is_weak_cn(&self) -> bool {
        (0..self.n).all(|x| {
            (0..self.n).all(|y| {
                self.comparable(x, y)
                    || self.closure(BitSet::singleton(x)).is_disjoint(self.closure(BitSet::singleton(y)))
            })
        })
    }

    fn weak_cn_by_closed_points(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.comparable(x, y) || self.closed_points_over(x).is_disjoint(self.closed_points_over(y))))
    }

    /// Continuous maps onto the closed points that fix them.
    fn retractions(&self) -> Vec<Vec<usize>> {
        let closed = self.closed_points();
        let (target, back) = self.subspace(closed);
        let mut out = Vec::new();
        let mut table = vec![0usize; self.n];
        fn go(t: &Topology, target: &Topology, back: &[usize], closed: BitSet, x: usize, table: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if x == t.n {
                if map_props(t, target, table).continuous {
                    out.push(table.clone());
                }
                return;
            }
            if closed.contains(x) {
                table[x] = back.iter().position(|&b| b == x).expect("closed point");
                go(t, target, back, closed, x + 1, table, out);
            } else {
                for k in 0..back.len() {
                    table[x] = k;
                    go(t, target, back, closed, x + 1, table, out);
                }
            }
        }
        go(self, &target, &back, closed, 0, &mut table, &mut out);
        out
    }
}

/// Properties of a map of finite topological spaces given by its table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NaiveMapProps {
    pub continuous: bool,
    pub open: bool,
    pub closed_into_target: bool,
    pub injective: bool,
    pub surjective: bool,
    pub dense_image: bool,
}

impl NaiveMapProps {
    pub fn embedding(&self) -> bool {
        self.injective && self.continuous && self.open
    }

    pub fn homeomorphism(&self) -> bool {
        self.embedding() && self.surjective
    }
}

pub fn map_props(src: &Topology, dst: &Topology, f: &[usize]) -> NaiveMapProps {
    let image_of = |s: BitSet| -> BitSet { s.iter().map(|x| f[x]).collect() };
    let image = image_of(src.all());
    let relative: BTreeSet<BitSet> = dst.opens.iter().map(|&w| w & image).collect();
    NaiveMapProps {
        continuous: dst.opens.iter().all(|&v| src.is_open((0..src.n).filter(|&x| v.contains(f[x])).collect())),
        open: src.opens.iter().all(|&u| relative.contains(&image_of(u))),
        closed_into_target: src.closeds().all(|c| dst.is_closed(image_of(c))),
        injective: image.len() == src.n,
        surjective: image == dst.all(),
        dense_image: dst.closure(image) == dst.all(),
    }
}

fn nilpotent(r: &FiniteRing, x: Elem) -> bool {
    let mut p = x;
    for _ in 0..=r.size() {
        if p == r.zero() {
            return true;
        }
        p = r.mul(p, x);
    }
    false
}

/// Primes of the subring `set` of `r`, as masks of `r`, one for each
/// primitive idempotent of `set`.
pub fn ring_primes(r: &FiniteRing, set: BitSet) -> Vec<BitSet> {
    let idem: Vec<Elem> = set.iter().filter(|&e| e != r.zero() && r.mul(e, e) == e).collect();
    let mut primes: Vec<BitSet> = idem
        .iter()
        .filter(|&&e| idem.iter().all(|&f| f == e || r.mul(e, f) != f))
        .map(|&e| set.iter().filter(|&x| nilpotent(r, r.mul(x, e))).collect())
        .collect();
    primes.sort();
    primes
}

fn spec_topology(set: BitSet, primes: &[BitSet]) -> Topology {
    Topology::from_basis(primes.len(), set.iter().map(|f| (0..primes.len()).filter(|&i| !primes[i].contains(f)).collect()))
}

/// `inner` dense in the subring `outer`, over the primes of `outer`.
pub fn is_dense(r: &FiniteRing, inner: BitSet, outer: BitSet) -> bool {
    ring_primes(r, outer).iter().all(|&p| {
        (outer - p).iter().all(|b| (outer - p).iter().any(|a| inner.contains(r.mul(a, b))))
    })
}

/// The criterion product `(s^k − xsa)(s^k − x'(s² − sa))` written out as a sum of monomials.
pub fn expanded_cn_value(r: &FiniteRing, s: Elem, a: Elem, x: Elem, xp: Elem, k: usize) -> Elem {
    let pow = |e: Elem, m: usize| (0..m).fold(r.one(), |acc, _| r.mul(acc, e));
    let prod = |f: &[Elem]| f.iter().fold(r.one(), |acc, &e| r.mul(acc, e));
    let terms = [
        (false, prod(&[pow(s, 2 * k)])),
        (true, prod(&[xp, pow(s, k + 2)])),
        (false, prod(&[xp, a, pow(s, k + 1)])),
        (true, prod(&[x, a, pow(s, k + 1)])),
        (false, prod(&[x, xp, a, pow(s, 3)])),
        (true, prod(&[x, xp, a, a, pow(s, 2)])),
    ];
    terms.iter().fold(r.zero(), |acc, &(neg, t)| if neg { r.sub(acc, t) } else { r.add(acc, t) })
}

pub fn cn_equational(r: &FiniteRing) -> bool {
    let n = r.size();
    (0..n).all(|s| {
        (0..n).all(|a| {
            (1..=n).any(|k| (0..n).any(|x| (0..n).any(|xp| expanded_cn_value(r, s, a, x, xp, k) == r.zero())))
        })
    })
}

struct PairData<'a> {
    r: &'a FiniteRing,
    a: BitSet,
    pb: Vec<BitSet>,
    pa: Vec<BitSet>,
    tb: Topology,
    ta: Topology,
    con: Vec<usize>,
    dense: bool,
}

impl<'a> PairData<'a> {
    fn new(r: &'a FiniteRing, a: BitSet) -> Result<Self> {
        let pb = ring_primes(r, r.all());
        let pa = ring_primes(r, a);
        let con = pb
            .iter()
            .map(|&p| pa.iter().position(|&q| q == p & a))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidArgument("contraction of a prime is not a prime".into()))?;
        Ok(PairData {
            r,
            a,
            tb: spec_topology(r.all(), &pb),
            ta: spec_topology(a, &pa),
            dense: is_dense(r, a, r.all()),
            pb,
            pa,
            con,
        })
    }

    fn con_props(&self) -> NaiveMapProps {
        map_props(&self.tb, &self.ta, &self.con)
    }

    fn max_pairs(&self) -> Vec<(usize, usize)> {
        let m = self.tb.closed_points().to_vec();
        m.iter().enumerate().flat_map(|(k, &i)| m[k + 1..].iter().map(move |&j| (i, j))).collect()
    }

    fn comaximal(&self) -> bool {
        let r = self.r;
        self.max_pairs().into_iter().all(|(i, j)| {
            let (p, q) = (self.pa[self.con[i]], self.pa[self.con[j]]);
            p.iter().any(|x| q.iter().any(|y| r.add(x, y) == r.one()))
        })
    }

    fn incomparable(&self) -> bool {
        self.max_pairs().into_iter().all(|(i, j)| !self.ta.comparable(self.con[i], self.con[j]))
    }

    fn weak_cn_wrt(&self) -> bool {
        self.max_pairs().into_iter().all(|(i, j)| {
            let (c, d) = (self.con[i], self.con[j]);
            self.ta.comparable(c, d)
                || self.ta.closure(BitSet::singleton(c)).is_disjoint(self.ta.closure(BitSet::singleton(d)))
        })
    }

    /// `λ` as a map of closed-point subspaces, if every contraction lies under
    /// exactly one closed point.
    fn lambda(&self) -> Option<NaiveMapProps> {
        let (src, sback) = self.tb.subspace(self.tb.closed_points());
        let (dst, dback) = self.ta.subspace(self.ta.closed_points());
        let table = sback
            .iter()
            .map(|&m| {
                let above = self.ta.closed_points_over(self.con[m]);
                (above.len() == 1).then(|| dback.iter().position(|&d| Some(d) == above.first()).expect("closed point"))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(map_props(&src, &dst, &table))
    }

    fn theta_homeomorphism(&self) -> bool {
        if !self.dense {
            return false;
        }
        let (src, sback) = self.tb.subspace(self.tb.generic_points());
        let (dst, dback) = self.ta.subspace(self.ta.generic_points());
        let table: Option<Vec<usize>> = sback.iter().map(|&p| dback.iter().position(|&d| d == self.con[p])).collect();
        table.is_some_and(|t| map_props(&src, &dst, &t).homeomorphism())
    }
}

/// Independent evaluation of `claim` on `instance`, with the same labels as
/// [`crate::dense::evaluate`].
pub fn evaluate_claim(claim: ClaimId, instance: &Instance) -> Result<Evaluation> {
    use ClaimId::*;
    if !claim.accepts(instance) {
        return Err(Error::SignatureMismatch { claim: claim.to_string(), kind: instance.kind() });
    }
    let mut ev = Evaluation::default();
    match instance {
        Instance::Pair(p) => pair_claim(claim, &PairData::new(p.ambient(), p.member())?, &mut ev),
        Instance::Triple(t) => {
            let r = &t.ring;
            match claim {
                C9 => {
                    ev.hyp(l::AB_DENSE, is_dense(r, t.a, t.b)).hyp(l::BC_DENSE, is_dense(r, t.b, t.c));
                    if ev.hypotheses_hold() {
                        ev.concl(l::AC_DENSE, is_dense(r, t.a, t.c));
                    }
                }
                _ => {
                    ev.hyp(l::AC_DENSE, is_dense(r, t.a, t.c));
                    if ev.hypotheses_hold() {
                        ev.concl(l::BC_DENSE, is_dense(r, t.b, t.c));
                    }
                }
            }
        }
        Instance::Hom(h) => {
            let (a, b) = (h.domain(), h.codomain());
            let pa = ring_primes(a, a.all());
            let pb = ring_primes(b, b.all());
            let ta = spec_topology(a.all(), &pa);
            let pre: Vec<BitSet> =
                pb.iter().map(|&q| a.elements().filter(|&x| q.contains(h.table()[x])).collect()).collect();
            let image: BitSet = pre
                .iter()
                .map(|q| pa.iter().position(|p| p == q).ok_or_else(|| Error::InvalidArgument("preimage is not prime".into())))
                .collect::<Result<_>>()?;
            let kernel_nil = a.elements().filter(|&x| h.table()[x] == b.zero()).all(|x| nilpotent(a, x));
            ev.equiv(l::KERNEL_NIL, kernel_nil)
                .equiv(l::IMAGE_DENSE, ta.closure(image) == BitSet::full(pa.len()))
                .equiv(l::PRIME_BELOW, pa.iter().all(|p| pre.iter().any(|q| q.is_subset(*p))));
        }
        Instance::Ring(r) => {
            let primes = ring_primes(r, r.all());
            let t = spec_topology(r.all(), &primes);
            match claim {
                C19 => {
                    ev.equiv(l::EQUATIONAL, cn_equational(r)).equiv(l::CN_TOPOLOGICAL, t.is_completely_normal());
                }
                C20 => {
                    let max: Vec<BitSet> = t.closed_points().iter().map(|i| primes[i]).collect();
                    let jac = max.iter().fold(r.all(), |acc, &m| acc & m);
                    let gj = max.iter().all(|&m| {
                        max.iter().all(|&m2| {
                            m == m2
                                || (r.all() - m).iter().any(|x| (r.all() - m2).iter().any(|y| jac.contains(r.mul(x, y))))
                        })
                    });
                    let (max_space, _) = t.subspace(t.closed_points());
                    ev.equiv(l::MAX_T2, max_space.is_hausdorff()).equiv(l::GJ7M, gj);
                }
                C21 => ev.note = Some(crate::dense::C21_RING_NOTE.to_string()),
                _ => space_claim(claim, &t, Some((r, &primes)), &mut ev),
            }
        }
        Instance::Poset(s) => space_claim(claim, &Topology::of_poset(s), None, &mut ev),
    }
    Ok(ev)
}

fn space_claim(claim: ClaimId, t: &Topology, ring: Option<(&FiniteRing, &[BitSet])>, ev: &mut Evaluation) {
    use ClaimId::*;
    match claim {
        C17 => {
            let pm = t.is_pm();
            let closed = t.closed_points();
            let (target, back) = t.subspace(closed);
            let mu_ok = pm && {
                let table: Vec<usize> = (0..t.n)
                    .map(|x| back.iter().position(|&b| Some(b) == t.closed_points_over(x).first()).expect("closed point"))
                    .collect();
                map_props(t, &target, &table).continuous
            };
            let retractions = t.retractions();
            ev.equiv(l::PM, pm).equiv(l::MU, mu_ok).equiv(l::RETRACT, !retractions.is_empty());
            match ring {
                Some((r, primes)) => {
                    let unique = closed.iter().all(|m| {
                        let om = primes.iter().filter(|p| p.is_subset(primes[m])).fold(r.all(), |acc, &p| acc & p);
                        closed.iter().filter(|&q| om.is_subset(primes[q])).count() == 1
                    });
                    ev.equiv(l::O_M_UNIQUE, unique);
                }
                None => {
                    let ok = closed.iter().all(|m| t.is_closed((0..t.n).filter(|&x| t.specializes(x, m)).collect()));
                    ev.equiv(l::CLOSED_GENERALIZATIONS, ok);
                }
            }
            ev.equiv(l::NORMAL, t.is_normal())
                .concl(l::UNIQUE_RETRACTION, !pm || retractions.len() == 1)
                .concl(l::MAX_T2_WHEN_PM, !pm || target.is_hausdorff());
        }
        C21 => {
            ev.equiv(l::WCN, t.is_weak_cn()).equiv(l::WCN_MAX, t.weak_cn_by_closed_points());
        }
        _ => {
            ev.hyp(l::WCN, t.is_weak_cn()).hyp(l::PM, t.is_pm()).concl(l::CN_CHAIN, t.is_cn_chain());
        }
    }
}

fn pair_claim(claim: ClaimId, d: &PairData, ev: &mut Evaluation) {
    use ClaimId::*;
    let n = d.pb.len();
    let pts = || (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)));
    let (ta, tb, con) = (&d.ta, &d.tb, &d.con);
    match claim {
        C1 => {
            let injective = pts().all(|(i, j)| i == j || con[i] != con[j]);
            ev.hyp(l::DENSE, d.dense).concl(l::INJECTIVE, injective);
        }
        C2 => {
            let ok = pts().all(|(i, j)| tb.comparable(i, j) || !ta.comparable(con[i], con[j]));
            ev.hyp(l::DENSE, d.dense).concl(l::INCOMPARABLE_PRIMES, ok);
        }
        C3 => {
            let ok = pts().all(|(i, j)| !d.pa[con[i]].is_subset(d.pa[con[j]]) || d.pb[i].is_subset(d.pb[j]));
            ev.hyp(l::DENSE, d.dense).concl(l::REFLECTS, ok);
        }
        C4 => {
            let (gb, ga) = (tb.generic_points(), ta.generic_points());
            let image: BitSet = gb.iter().map(|i| con[i]).collect();
            let into = image.is_subset(ga);
            ev.hyp(l::DENSE, d.dense)
                .concl(l::MIN_INTO_MIN, into)
                .concl(l::MIN_BIJECTION, into && image == ga && image.len() == gb.len());
        }
        C5 => {
            let ok = d.max_pairs().into_iter().all(|(i, j)| {
                let meet = d.pa[con[i]] & d.pa[con[j]];
                !d.pa.iter().any(|p| p.is_subset(meet))
            });
            ev.hyp(l::DENSE, d.dense).hyp(l::B_PM, tb.is_pm()).concl(l::MEET_NO_PRIME, ok);
        }
        C6 => {
            let p = d.con_props();
            ev.equiv(l::DENSE, d.dense).equiv(l::INJECTIVE_OPEN, p.injective && p.open);
        }
        C7 => {
            let p = d.con_props();
            ev.equiv(l::DENSE, d.dense).equiv(l::EMBEDDING_DENSE, p.embedding() && p.dense_image);
        }
        C8 => {
            let closed = tb.closed_points();
            let ok = pts().all(|(m, p)| !closed.contains(m) || con[m] == con[p] || !ta.specializes(con[m], con[p]));
            ev.hyp(l::DENSE, d.dense).concl(l::NOTHING_ABOVE_MAX, ok);
        }
        C11 => {
            ev.hyp(l::COMAXIMAL, d.comaximal()).concl(l::INCOMPARABLE_MAX, d.incomparable()).concl(l::WCN_WRT, d.weak_cn_wrt());
        }
        C12 => {
            ev.hyp(l::DENSE, d.dense).hyp(l::WCN_WRT, d.weak_cn_wrt()).concl(l::COMAXIMAL, d.comaximal());
        }
        C13 => {
            ev.hyp(l::DENSE, d.dense)
                .hyp(l::A_CN, ta.is_completely_normal())
                .concl(l::B_CN, tb.is_completely_normal())
                .concl(l::B_PM, tb.is_pm());
        }
        C14 => {
            let homeo = d.lambda().is_some_and(|p| p.homeomorphism());
            ev.hyp(l::A_PM, ta.is_pm()).hyp(l::DENSE, d.dense).hyp(l::WCN_WRT, d.weak_cn_wrt()).concl(l::LAMBDA_HOMEO, homeo);
        }
        C15 => {
            ev.hyp(l::DENSE, d.dense).concl(l::THETA_HOMEO, d.theta_homeomorphism());
        }
        C18 => {
            ev.hyp(l::A_PM, ta.is_pm());
            let p = d.lambda();
            ev.concl(l::LAMBDA_CONTINUOUS, p.is_some_and(|p| p.continuous))
                .concl(l::LAMBDA_CLOSED, p.is_some_and(|p| p.closed_into_target))
                .concl(l::LAMBDA_ONTO, p.is_some_and(|p| p.surjective))
                .equiv(l::LAMBDA_HOMEO, p.is_some_and(|p| p.homeomorphism()))
                .equiv(l::COMAXIMAL, d.comaximal());
        }
        C23 => {
            let r = d.r;
            let (mut within, mut ideal, mut nonzero) = (true, true, true);
            for u in d.a.iter() {
                let Some(v) = r.elements().find(|&v| r.mul(u, v) == r.one()) else { continue };
                let c: BitSet = r.elements().filter(|&x| d.a.contains(r.mul(x, v))).collect();
                let w = c.is_subset(d.a);
                within &= w;
                ideal &= w
                    && c.contains(r.zero())
                    && c.iter().all(|x| c.iter().all(|y| c.contains(r.add(x, y))))
                    && c.iter().all(|x| d.a.iter().all(|y| c.contains(r.mul(x, y))));
                nonzero &= c.iter().any(|x| x != r.zero());
            }
            ev.hyp(l::DENSE, d.dense).concl(l::CVU_IN_A, within).concl(l::CVU_IDEAL, ideal).concl(l::CVU_NONZERO, nonzero);
        }
        _ => unreachable!("signature checked"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_product, make_zn};

    #[test]
    fn primes_from_idempotents() {
        let z12 = make_zn(12).unwrap();
        let primes = ring_primes(&z12, z12.all());
        let expect: Vec<BitSet> = vec![(0..12).step_by(3).collect(), (0..12).step_by(2).collect()];
        let mut expect = expect;
        expect.sort();
        assert_eq!(primes, expect);
        let z2 = make_zn(2).unwrap();
        let cube = make_product(&z2, &make_product(&z2, &z2).unwrap()).unwrap();
        assert_eq!(ring_primes(&cube, cube.all()).len(), 3);
        // the diagonal of Z2 x Z2 is a field
        let sq = make_product(&z2, &z2).unwrap();
        assert_eq!(ring_primes(&sq, [0, 3].into_iter().collect()), vec![BitSet::singleton(0)]);
    }

    #[test]
    fn poset_topologies() {
        let v = Topology::of_poset(&SpectralSpace::v_poset());
        assert_eq!(v.opens().len(), 5);
        assert!(!v.is_pm() && !v.is_normal() && v.is_weak_cn() && !v.is_cn_chain());
        let lam = Topology::of_poset(&SpectralSpace::lambda_poset());
        assert!(lam.is_pm() && lam.is_normal() && !lam.is_weak_cn() && lam.is_cn_chain());
        assert!(lam.is_completely_normal() && !v.is_completely_normal());
        assert_eq!(lam.retractions().len(), 1);
    }

    #[test]
    fn expanded_form_matches_factored() {
        let r = make_zn(12).unwrap();
        for (s, a, x, xp, k) in [(2, 3, 5, 7, 1), (4, 4, 1, 0, 3), (11, 6, 2, 9, 2)] {
            let w = crate::criterion::CnWitness { s, a, x, x_prime: xp, k };
            assert_eq!(expanded_cn_value(&r, s, a, x, xp, k), w.value(&r));
        }
    }
}
