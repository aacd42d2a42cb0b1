use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{build_corpus, CorpusSpec};
use crate::dense::{check_claim, ClaimId, Instance, Status, Verdict, Witness};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct AuditConfig {
    pub claims: Vec<ClaimId>,
    pub workers: usize,
    /// Zero every `elapsed_ms` so that reports are byte-identical across runs.
    pub stable: bool,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig { claims: ClaimId::ALL.to_vec(), workers: 1, stable: false }
    }
}

/// One report line per evaluated `(claim, instance)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerdictLine {
    pub claim: ClaimId,
    pub instance_digest: String,
    pub status: Status,
    pub witness: Option<Witness>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub instances: usize,
    pub verified: usize,
    pub refuted: usize,
    pub inapplicable: usize,
    pub errors: usize,
    pub truncated: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Refutation {
    pub claim: ClaimId,
    pub instance_digest: String,
    pub instance: String,
    pub theorem: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErrorLine {
    pub claim: ClaimId,
    pub instance_digest: String,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Skip {
    pub claim: ClaimId,
    pub count: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub summary: bool,
    pub rings: usize,
    pub posets: usize,
    pub tallies: BTreeMap<ClaimId, Tally>,
    pub refutations: Vec<Refutation>,
    pub errors: Vec<ErrorLine>,
    pub skipped: Vec<Skip>,
    pub truncated: bool,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AuditReport {
    pub verdicts: Vec<VerdictLine>,
    pub summary: Summary,
}

impl AuditReport {
    /// One JSON object per verdict, then the summary object.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for v in &self.verdicts {
            out.push_str(&serde_json::to_string(v).expect("serializable"));
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&self.summary).expect("serializable"));
        out.push('\n');
        out
    }

    /// Refutations of theorems.
    pub fn theorem_refutations(&self) -> impl Iterator<Item = &Refutation> {
        self.summary.refutations.iter().filter(|r| r.theorem)
    }

    /// 1 when a theorem is refuted or an evaluation failed, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.theorem_refutations().next().is_some() || !self.summary.errors.is_empty() {
            1
        } else {
            0
        }
    }

    pub fn tally(&self, claim: ClaimId) -> Tally {
        self.summary.tallies.get(&claim).copied().unwrap_or_default()
    }
}

enum Outcome {
    Done(Verdict),
    Failed(Error),
    Truncated,
}

/// Runs every requested claim on every matching corpus instance.
pub fn run_audit(spec: &CorpusSpec, config: &AuditConfig) -> Result<AuditReport> {
    let start = Instant::now();
    let corpus = build_corpus(spec)?;
    let mut tallies: BTreeMap<ClaimId, Tally> = BTreeMap::new();
    let mut skipped = Vec::new();
    let mut notes = Vec::new();
    let mut tasks: Vec<(usize, ClaimId, Arc<Instance>, String)> = Vec::new();
    let mut claims = config.claims.clone();
    claims.sort();
    claims.dedup();
    for &claim in &claims {
        let tally = tallies.entry(claim).or_default();
        let mut over_cap = 0;
        for inst in corpus.instances(claim)? {
            if claim == ClaimId::C19 {
                if let Instance::Ring(r) = &inst {
                    if r.size() > spec.caps.criterion {
                        over_cap += 1;
                        continue;
                    }
                }
            }
            tally.instances += 1;
            let digest = inst.digest();
            tasks.push((tasks.len(), claim, Arc::new(inst), digest));
        }
        if over_cap > 0 {
            tally.skipped = over_cap;
            skipped.push(Skip {
                claim,
                count: over_cap,
                reason: format!("rings above the equational-criterion cap of {}", spec.caps.criterion),
            });
        }
        if claim == ClaimId::C21 {
            notes.push(format!("C21: {}", crate::dense::C21_RING_NOTE));
        }
    }

    let mut order: Vec<usize> = (0..tasks.len()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(spec.seed));
    let budget = spec.time_budget_ms.map(Duration::from_millis);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?;
    let caps = spec.caps;
    let mut results: Vec<(usize, Outcome)> = pool.install(|| {
        order
            .par_iter()
            .map(|&i| {
                let (idx, claim, inst, _) = &tasks[i];
                if budget.is_some_and(|b| start.elapsed() > b) {
                    return (*idx, Outcome::Truncated);
                }
                match check_claim(*claim, inst, &caps) {
                    Ok(v) => (*idx, Outcome::Done(v)),
                    Err(e) => (*idx, Outcome::Failed(e)),
                }
            })
            .collect()
    });
    results.sort_by_key(|(idx, _)| *idx);

    let mut verdicts = Vec::new();
    let mut refutations = Vec::new();
    let mut errors = Vec::new();
    let mut truncated = false;
    for (idx, outcome) in results {
        let (_, claim, inst, digest) = &tasks[idx];
        let tally = tallies.get_mut(claim).expect("tally per claim");
        match outcome {
            Outcome::Done(v) => {
                match v.status {
                    Status::Verified => tally.verified += 1,
                    Status::Refuted => {
                        tally.refuted += 1;
                        refutations.push(Refutation {
                            claim: *claim,
                            instance_digest: digest.clone(),
                            instance: inst.label(),
                            theorem: claim.is_theorem(),
                        });
                    }
                    Status::Inapplicable => tally.inapplicable += 1,
                }
                verdicts.push(VerdictLine {
                    claim: *claim,
                    instance_digest: digest.clone(),
                    status: v.status,
                    witness: v.witness,
                    elapsed_ms: if config.stable { 0 } else { v.elapsed_ms },
                });
            }
            Outcome::Failed(e) => {
                tally.errors += 1;
                errors.push(ErrorLine { claim: *claim, instance_digest: digest.clone(), error: e.to_string() });
            }
            Outcome::Truncated => {
                tally.truncated += 1;
                truncated = true;
            }
        }
    }
    let summary = Summary {
        summary: true,
        rings: corpus.rings.len(),
        posets: corpus.posets.len(),
        tallies,
        refutations,
        errors,
        skipped,
        truncated,
        notes,
        elapsed_ms: if config.stable { 0 } else { start.elapsed().as_millis() as u64 },
    };
    Ok(AuditReport { verdicts, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn_spec(hi: usize) -> CorpusSpec {
        CorpusSpec {
            zn: Some((2, hi)),
            fields: vec![],
            poly_primes: vec![],
            product_max: 0,
            max_poset: 0,
            ..CorpusSpec::default()
        }
    }

    #[test]
    fn c6_on_small_zn_is_verified() {
        let report = run_audit(&zn_spec(8), &AuditConfig { claims: vec![ClaimId::C6], workers: 2, stable: true }).unwrap();
        let t = report.tally(ClaimId::C6);
        assert_eq!(t.instances, 7);
        assert_eq!(t.verified, 7);
        assert_eq!(report.exit_code(), 0);
        let text = report.to_jsonl();
        assert_eq!(text.lines().count(), 8);
        let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        let keys: Vec<&str> = first.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        assert_eq!(keys.len(), 5);
        for k in ["claim", "instance_digest", "status", "witness", "elapsed_ms"] {
            assert!(keys.contains(&k));
        }
    }

    #[test]
    fn deterministic_across_workers_and_seeds() {
        let claims = vec![ClaimId::C1, ClaimId::C16, ClaimId::C20];
        let a = run_audit(&zn_spec(10), &AuditConfig { claims: claims.clone(), workers: 1, stable: true }).unwrap();
        let spec = CorpusSpec { seed: 99, ..zn_spec(10) };
        let b = run_audit(&spec, &AuditConfig { claims, workers: 4, stable: true }).unwrap();
        assert_eq!(a.to_jsonl(), b.to_jsonl());
    }

    #[test]
    fn c21_rings_are_inapplicable_with_a_note() {
        let report = run_audit(&zn_spec(6), &AuditConfig { claims: vec![ClaimId::C21], workers: 1, stable: true }).unwrap();
        let t = report.tally(ClaimId::C21);
        assert_eq!(t.inapplicable, t.instances);
        assert_eq!(report.summary.notes.len(), 1);
    }

    #[test]
    fn zero_budget_truncates() {
        let spec = CorpusSpec { time_budget_ms: Some(0), ..zn_spec(12) };
        std::thread::sleep(Duration::from_millis(2));
        let report = run_audit(&spec, &AuditConfig { claims: vec![ClaimId::C1], workers: 1, stable: true }).unwrap();
        assert!(report.summary.truncated);
        let t = report.tally(ClaimId::C1);
        assert_eq!(t.verified + t.refuted + t.inapplicable + t.errors + t.truncated, t.instances);
    }
}
