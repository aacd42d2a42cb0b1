//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or overruns its time limit.

use std::sync::Arc;
use std::time::{Duration, Instant};

use specwb_core::criterion::cn_equational;
use specwb_core::dense::{check_claim, evaluate, is_dense, Caps, ClaimId, DensityMode, Instance, PairContext, Status};
use specwb_core::ideal::{enumerate_ideals, radical, spectrum};
use specwb_core::oracle;
use specwb_core::ring::{make_localization, make_zn, multiplicative_closure, FiniteRing};
use specwb_core::topology::{
    continuous_retractions, enumerate_posets, is_cn_chain, is_normal_topological, is_pm, is_weak_cn, SpectralSpace,
};
use specwb_core::workbench::{build_corpus, hunt_intermediate_density, hunt_wcn_vs_cn, Corpus, CorpusSpec};
use specwb_core::BitSet;

const CAP: usize = 64;

type Outcome = Result<String, String>;

fn corpus(max_ring: usize, max_poset: usize) -> Corpus {
    build_corpus(&CorpusSpec::bounded(max_ring, max_poset)).expect("corpus")
}

fn posets_up_to(n: usize) -> Vec<SpectralSpace> {
    (1..=n).flat_map(|k| enumerate_posets(k).expect("posets")).collect()
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn spectrum_of_zn() -> Outcome {
    for n in 2..=60 {
        let r = make_zn(n).map_err(|e| e.to_string())?;
        let mut got: Vec<BitSet> = spectrum(&r, CAP).map_err(|e| e.to_string())?.iter().map(|p| p.members()).collect();
        let mut want: Vec<BitSet> =
            prime_divisors(n).into_iter().map(|p| (0..n).step_by(p).collect::<BitSet>()).collect();
        got.sort();
        want.sort();
        if got != want {
            return Err(format!("Z{n}: got {got:?}, expected {want:?}"));
        }
    }
    Ok("59 rings Z2..Z60 match factorization".into())
}

fn radical_hulls() -> Outcome {
    let c = corpus(16, 0);
    let mut ideals = 0;
    for cr in &c.rings {
        let r = &cr.ring;
        let primes = oracle::ring_primes(r, r.all());
        for i in enumerate_ideals(r, CAP).map_err(|e| e.to_string())? {
            let hull = primes.iter().filter(|p| i.members().is_subset(**p)).fold(r.all(), |acc, &p| acc & p);
            if radical(r, i).members() != hull {
                return Err(format!("{}: rad {} vs hull {hull}", r.name(), radical(r, i)));
            }
            ideals += 1;
        }
    }
    Ok(format!("{ideals} ideals over {} rings", c.rings.len()))
}

fn density_biconditional() -> Outcome {
    let c = corpus(16, 0);
    let caps = Caps::default();
    let mut pairs = 0;
    let mut diagonal = None;
    for pair in c.pairs().map_err(|e| e.to_string())? {
        let inst = Instance::Pair(pair.clone());
        let ev = evaluate(ClaimId::C6, &inst, &caps).map_err(|e| e.to_string())?;
        let naive = oracle::evaluate_claim(ClaimId::C6, &inst).map_err(|e| e.to_string())?;
        let values: Vec<bool> = ev.equivalent.iter().map(|l| l.value).collect();
        if values.len() != 2 || values[0] != values[1] || !ev.same_values(&naive) {
            return Err(format!("mismatch on {}", inst.label()));
        }
        if pair.ambient().name() == "Z2xZ2" && pair.member() == [0, 3].into_iter().collect() {
            diagonal = Some(values);
        }
        pairs += 1;
    }
    match diagonal {
        Some(v) if v == [false, false] => Ok(format!("{pairs} pairs, diagonal in Z2xZ2 false/false")),
        Some(v) => Err(format!("diagonal evaluated {v:?}")),
        None => Err("diagonal pair in Z2xZ2 missing from corpus".into()),
    }
}

fn hom_conditions() -> Outcome {
    let c = corpus(12, 0);
    let homs = c.homs().map_err(|e| e.to_string())?;
    let z6 = Arc::new(make_zn(6).unwrap());
    let s = multiplicative_closure(&z6, BitSet::singleton(3));
    if s != [1, 3].into_iter().collect() {
        return Err(format!("closure of 3 in Z6 is {s}"));
    }
    let (_, local) = make_localization(&z6, s, false).map_err(|e| e.to_string())?;
    let mut seen_local = false;
    for h in &homs {
        let inst = Instance::Hom(h.clone());
        let ev = evaluate(ClaimId::C16, &inst, &Caps::default()).map_err(|e| e.to_string())?;
        let naive = oracle::evaluate_claim(ClaimId::C16, &inst).map_err(|e| e.to_string())?;
        let values: Vec<bool> = ev.equivalent.iter().map(|l| l.value).collect();
        if values.len() != 3 || values.iter().any(|&v| v != values[0]) || !ev.same_values(&naive) {
            return Err(format!("conditions disagree on {}", inst.label()));
        }
        if h.domain().name() == "Z6" && h.table() == local.table() && h.codomain().size() == local.codomain().size() {
            if values != [false, false, false] {
                return Err(format!("Z6 at S={{1,3}} gave {values:?}"));
            }
            seen_local = true;
        }
    }
    if !seen_local {
        return Err("Z6 localized at {1,3} missing".into());
    }
    Ok(format!("{} homomorphisms, Z6 at S={{1,3}} all false", homs.len()))
}

fn equational_criterion() -> Outcome {
    let c = corpus(12, 0);
    let mut witnesses = 0;
    for cr in &c.rings {
        let r: &FiniteRing = &cr.ring;
        let table = cn_equational(r, 16).map_err(|e| e.to_string())?;
        let n = r.size();
        if !table.holds || table.witnesses.len() != n * n {
            return Err(format!("{}: criterion fails or table incomplete", r.name()));
        }
        for (idx, w) in table.witnesses.iter().enumerate() {
            if (w.s, w.a) != (idx / n, idx % n) || oracle::expanded_cn_value(r, w.s, w.a, w.x, w.x_prime, w.k) != r.zero() {
                return Err(format!("{}: witness {w:?} rejected", r.name()));
            }
            witnesses += 1;
        }
    }
    Ok(format!("{witnesses} witnesses over {} rings", c.rings.len()))
}

fn poset_pm_equivalences() -> Outcome {
    let posets = posets_up_to(5);
    for s in &posets {
        let pm = is_pm(s);
        let retract = !continuous_retractions(s, 16).map_err(|e| e.to_string())?.is_empty();
        let normal = is_normal_topological(s, 16).map_err(|e| e.to_string())?;
        let naive = oracle::Topology::of_poset(s);
        if pm != retract || pm != normal || naive.is_normal() != normal || naive.is_pm() != pm {
            return Err(format!("relations {:?}: pm {pm}, retraction {retract}, normal {normal}", s.strict_relations()));
        }
    }
    Ok(format!("{} labeled posets", posets.len()))
}

fn weak_cn_with_pm() -> Outcome {
    let posets = posets_up_to(5);
    let mut premise = 0;
    for s in &posets {
        if is_weak_cn(s) && is_pm(s) {
            premise += 1;
            if !is_cn_chain(s) {
                return Err(format!("violated on {:?}", s.strict_relations()));
            }
        }
    }
    Ok(format!("{premise} of {} posets satisfy the premise, no violations", posets.len()))
}

fn dense_pair_suite() -> Outcome {
    let c = build_corpus(&CorpusSpec::default()).map_err(|e| e.to_string())?;
    let caps = Caps::default();
    let claims = [ClaimId::C1, ClaimId::C2, ClaimId::C3, ClaimId::C4, ClaimId::C5, ClaimId::C8, ClaimId::C15];
    let mut dense = 0;
    for pair in c.pairs().map_err(|e| e.to_string())? {
        let ctx = PairContext::new(&pair, CAP).map_err(|e| e.to_string())?;
        if !ctx.is_dense() {
            continue;
        }
        dense += 1;
        let inst = Instance::Pair(pair.clone());
        for claim in claims {
            let v = check_claim(claim, &inst, &caps).map_err(|e| e.to_string())?;
            if v.status != Status::Verified {
                return Err(format!("{claim} {} on {}", v.status, inst.label()));
            }
        }
        let theta = ctx.theta_map().map_err(|e| format!("{e:?}"))?.props();
        if !(theta.injective && theta.surjective && theta.continuous && theta.open) {
            return Err(format!("Θ not a homeomorphism on {}", inst.label()));
        }
    }
    Ok(format!("{dense} dense pairs, 7 claims each, Θ bijective, continuous and open"))
}

fn triple_suite() -> Outcome {
    let c = build_corpus(&CorpusSpec::default()).map_err(|e| e.to_string())?;
    let caps = Caps::default();
    let triples = c.triples().map_err(|e| e.to_string())?;
    for t in &triples {
        let inst = Instance::Triple(t.clone());
        for claim in [ClaimId::C9, ClaimId::C10] {
            let v = check_claim(claim, &inst, &caps).map_err(|e| e.to_string())?;
            if v.status == Status::Refuted {
                return Err(format!("{claim} refuted on {}", inst.label()));
            }
        }
    }
    Ok(format!("{} triples", triples.len()))
}

fn hunters() -> Outcome {
    let spec = CorpusSpec::bounded(24, 5);
    let wcn = hunt_wcn_vs_cn(&spec).map_err(|e| e.to_string())?;
    let v = wcn.separates(&SpectralSpace::v_poset()).ok_or("V poset not reported")?;
    if (v.weak_cn, v.cn_chain, v.pm) != (true, false, false) {
        return Err(format!("V reported as {v:?}"));
    }
    let l = wcn.separates(&SpectralSpace::lambda_poset()).ok_or("Λ poset not reported")?;
    if (l.weak_cn, l.cn_chain, l.pm) != (false, true, true) {
        return Err(format!("Λ reported as {l:?}"));
    }
    let first = hunt_intermediate_density(&spec).map_err(|e| e.to_string())?;
    let second = hunt_intermediate_density(&spec).map_err(|e| e.to_string())?;
    if first != second || wcn != hunt_wcn_vs_cn(&spec).map_err(|e| e.to_string())? {
        return Err("hunter reports differ between runs".into());
    }
    let verdict = if first.exhaustive_none { "exhaustive-none".to_string() } else { format!("{} counterexamples", first.counterexamples.len()) };
    Ok(format!(
        "{} separating posets incl. V and Λ; intermediate density over {} rings: {verdict}",
        wcn.separating.len(),
        first.rings
    ))
}

fn mode_agreement() -> Outcome {
    let c = corpus(12, 0);
    let mut pairs = 0;
    for pair in c.pairs().map_err(|e| e.to_string())? {
        let d = is_dense(&pair, DensityMode::Definition, CAP).map_err(|e| e.to_string())?.dense;
        let p = is_dense(&pair, DensityMode::Primes, CAP).map_err(|e| e.to_string())?.dense;
        let naive = oracle::is_dense(pair.ambient(), pair.member(), pair.ambient().all());
        if d != p || p != naive {
            return Err(format!("{} {}: definition {d}, primes {p}", pair.ambient().name(), pair.member()));
        }
        pairs += 1;
    }
    Ok(format!("{pairs} pairs"))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 11] = [
        ("spectrum of Z_n against factorization", 5, spectrum_of_zn),
        ("radical equals intersection of primes above", 30, radical_hulls),
        ("dense iff i* injective and open onto image", 120, density_biconditional),
        ("three homomorphism conditions agree", 120, hom_conditions),
        ("equational criterion with checked witnesses", 180, equational_criterion),
        ("pm, retraction and normality agree on posets", 60, poset_pm_equivalences),
        ("weak CN and pm imply CN on posets", 30, weak_cn_with_pm),
        ("dense-pair consequences", 60, dense_pair_suite),
        ("transitivity of density", 60, triple_suite),
        ("hunter reports", 300, hunters),
        ("density modes agree", 120, mode_agreement),
    ];
    let mut failed = 0;
    for (k, (name, limit_s, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit_s);
        let line = match outcome {
            Ok(detail) if elapsed <= limit => format!("PASS {:>2} {name}: {detail} ({:.2}s)", k + 1, elapsed.as_secs_f64()),
            Ok(detail) => {
                failed += 1;
                format!("FAIL {:>2} {name}: {detail}, but took {:.2}s (limit {limit_s}s)", k + 1, elapsed.as_secs_f64())
            }
            Err(why) => {
                failed += 1;
                format!("FAIL {:>2} {name}: {why} ({:.2}s)", k + 1, elapsed.as_secs_f64())
            }
        };
        println!("{line}");
    }
    if failed > 0 {
        println!("{failed} of 11 criteria failed");
        std::process::exit(1);
    }
    println!("all 11 criteria passed");
}
