//! Separation-style predicates on finite spectral spaces.

use serde::Serialize;

use super::{SpectralMap, SpectralSpace};
use crate::error::{cap_check, Error, Result};

/// Point limit for the exhaustive complete-normality search.
pub const DEFAULT_CN_CAP: usize = 12;
/// Point limit for the exhaustive normality search.
pub const DEFAULT_NORMAL_CAP: usize = 16;

/// A point lying below two distinct maximal points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PmFailure {
    pub point: usize,
    pub maxima: (usize, usize),
}

pub fn pm_failure(s: &SpectralSpace) -> Option<PmFailure> {
    let max = s.maximal_points();
    (0..s.len()).find_map(|p| {
        let above: Vec<usize> = (s.up(p) & max).to_vec();
        (above.len() > 1).then(|| PmFailure { point: p, maxima: (above[0], above[1]) })
    })
}

/// Every point lies below exactly one maximal point.
pub fn is_pm(s: &SpectralSpace) -> bool {
    let max = s.maximal_points();
    (0..s.len()).all(|p| (s.up(p) & max).len() == 1)
}

/// The retraction sending each point to its unique maximal specialization,
/// as a map onto the subspace of maximal points. Checked to be a continuous
/// retraction before it is returned.
pub fn mu_retraction(s: &SpectralSpace) -> std::result::Result<SpectralMap, PmFailure> {
    if let Some(f) = pm_failure(s) {
        return Err(f);
    }
    let max = s.maximal_points();
    let (max_space, back) = s.subspace(max, format!("max {}", s.name()));
    let mut local = vec![usize::MAX; s.len()];
    for (k, &m) in back.iter().enumerate() {
        local[m] = k;
    }
    let table = (0..s.len())
        .map(|p| local[(s.up(p) & max).first().expect("pm: a maximal point above every point")])
        .collect();
    let mu = SpectralMap::new(s.clone(), max_space, table).expect("table built from the subspace");
    assert!(mu.is_continuous(), "mu is continuous on a pm space");
    assert!(back.iter().enumerate().all(|(k, &m)| mu.apply(m) == k), "mu fixes maximal points");
    Ok(mu)
}

/// Every continuous retraction onto the subspace of maximal points, found by
/// brute force over all maps that fix the maximal points.
pub fn continuous_retractions(s: &SpectralSpace, cap: usize) -> Result<Vec<Vec<usize>>> {
    cap_check("space for retraction search", s.len(), cap)?;
    let max = s.maximal_points();
    let (max_space, back) = s.subspace(max, "max");
    let free: Vec<usize> = (s.all() - max).to_vec();
    let k = back.len();
    let mut out = Vec::new();
    let mut choice = vec![0usize; free.len()];
    loop {
        let mut table = vec![0usize; s.len()];
        for (j, &m) in back.iter().enumerate() {
            table[m] = j;
        }
        for (idx, &p) in free.iter().enumerate() {
            table[p] = choice[idx];
        }
        let map = SpectralMap::new(s.clone(), max_space.clone(), table.clone())?;
        if map.is_continuous() {
            out.push(table);
        }
        // odometer over k^|free|
        let mut pos = 0;
        loop {
            if pos == free.len() {
                return Ok(out);
            }
            choice[pos] += 1;
            if choice[pos] < k {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// For each maximal point `m`, the generalizations of `m` form a closed set.
pub fn maxima_have_closed_generalizations(s: &SpectralSpace) -> bool {
    s.maximal_points().iter().all(|m| s.is_closed(s.down(m)))
}

/// `closure[S]` and `hull[S]` for every subset `S` of the points.
fn subset_tables(s: &SpectralSpace) -> (Vec<u128>, Vec<u128>) {
    let n = s.len();
    let mut cl = vec![0u128; 1 << n];
    let mut hull = vec![0u128; 1 << n];
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        cl[mask] = cl[rest] | s.up(low).bits();
        hull[mask] = hull[rest] | s.down(low).bits();
    }
    (cl, hull)
}

/// Disjoint closed sets have disjoint open neighbourhoods. Exhaustive over
/// pairs of closed sets; the smallest open neighbourhood of a set is its
/// down-closure, so it suffices to test those.
pub fn is_normal_topological(s: &SpectralSpace, cap: usize) -> Result<bool> {
    cap_check("space for the normality search", s.len(), cap)?;
    let n = s.len();
    let (cl, hull) = subset_tables(s);
    let closed: Vec<usize> = (1usize..(1 << n)).filter(|&m| cl[m] == m as u128).collect();
    for &f1 in &closed {
        let rest = !f1 & ((1usize << n) - 1);
        // closed sets disjoint from f1, each unordered pair once
        let mut f2 = rest;
        while f2 > 0 {
            if f2 > f1 && cl[f2] == f2 as u128 && hull[f1] & hull[f2] != 0 {
                return Ok(false);
            }
            f2 = (f2 - 1) & rest;
        }
    }
    Ok(true)
}

/// Separated sets (`cl S ∩ T = S ∩ cl T = ∅`) have disjoint open
/// neighbourhoods. Exhaustive over separated pairs: for each `S` only subsets
/// of the complement of `cl S` are candidates for `T`.
pub fn is_completely_normal_topological(s: &SpectralSpace, cap: usize) -> Result<bool> {
    cap_check("space for the complete-normality search", s.len(), cap)?;
    let n = s.len();
    let (cl, hull) = subset_tables(s);
    let full = (1usize << n) - 1;
    for sm in 1usize..=full {
        let candidates = full & !(cl[sm] as usize);
        let mut t = candidates;
        while t > 0 {
            if t > sm && cl[t] & sm as u128 == 0 && hull[sm] & hull[t] != 0 {
                return Ok(false);
            }
            t = (t - 1) & candidates;
        }
    }
    Ok(true)
}

/// For every point `p`, `cl{p}` is a chain.
pub fn is_cn_chain(s: &SpectralSpace) -> bool {
    (0..s.len()).all(|p| {
        let up = s.up(p);
        up.iter().all(|a| up.iter().all(|b| s.comparable(a, b)))
    })
}

/// Incomparable points have disjoint closures.
pub fn is_weak_cn(s: &SpectralSpace) -> bool {
    (0..s.len()).all(|a| (0..a).all(|b| s.comparable(a, b) || s.up(a).is_disjoint(s.up(b))))
}

/// Incomparable points never lie below a common maximal point.
pub fn weak_cn_by_maximal_points(s: &SpectralSpace) -> bool {
    let max = s.maximal_points();
    (0..s.len()).all(|a| (0..a).all(|b| s.comparable(a, b) || (s.up(a) & s.up(b) & max).is_empty()))
}

/// Whether the subspace of maximal points is Hausdorff: distinct maximal
/// points have disjoint smallest neighbourhoods in the subspace.
pub fn max_subspace_is_t2(s: &SpectralSpace) -> bool {
    let max = s.maximal_points();
    let nbhd = |m: usize| s.down(m) & max;
    max.iter().all(|a| max.iter().all(|b| a == b || nbhd(a).is_disjoint(nbhd(b))))
}

impl std::fmt::Display for PmFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "point {} lies below maximal points {} and {}", self.point, self.maxima.0, self.maxima.1)
    }
}

impl From<PmFailure> for Error {
    fn from(f: PmFailure) -> Self {
        Error::InvalidArgument(format!("space is not pm: {f}"))
    }
}
