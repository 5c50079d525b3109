//! Exhaustive check that, on an abelian `p`-group, a commuting `p`-power
//! automorphism `β` that agrees pointwise with powers of `α` is itself a
//! power of `α`.
//!
//! Pairs are reduced by simultaneous conjugation in `Aut(G)`: both the
//! hypotheses and the conclusion are invariant under `(α, β) ↦ (γ⁻¹αγ,
//! γ⁻¹βγ)`, so one `α` per orbit suffices as long as every `β` is tried.
//! `β` is found by a search whose candidate images are the `α`-orbits of the
//! generators, which is exactly the pointwise hypothesis on generators.

use std::collections::HashMap;
use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{locally_power_unchecked, power_of_unchecked};
use crate::error::{Error, Result};
use crate::group::{prime_power_base, Group};
use crate::iso::fingerprints;
use crate::maps::GroupMap;
use crate::parallel;
use crate::search::{HomSearch, SearchPlan};

/// Number of random automorphisms used to merge `α` candidates into orbits.
const CONJUGATORS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarnessGroupReport {
    pub name: String,
    pub order: usize,
    pub p: usize,
    pub automorphisms: u64,
    pub p_automorphisms: usize,
    /// `α` values tried, one per orbit under the conjugators.
    pub alpha_representatives: usize,
    /// Pairs `(α, β)` meeting every hypothesis.
    pub pairs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IspowerReport {
    pub groups: Vec<HarnessGroupReport>,
}

impl IspowerReport {
    pub fn pairs(&self) -> u64 {
        self.groups.iter().map(|g| g.pairs).sum()
    }
}

fn is_p_power(k: usize, p: usize) -> bool {
    k == 1 || prime_power_base(k) == Some(p)
}

/// Every automorphism `β` of `p`-power order that commutes with `alpha` and
/// sends each element into its `alpha`-orbit.
pub fn pointwise_power_search(g: &Group, alpha: &GroupMap, p: usize) -> Result<Vec<GroupMap>> {
    let plan = SearchPlan::new(g);
    pointwise_with_plan(g, &plan, alpha, p)
}

fn pointwise_with_plan(g: &Group, plan: &SearchPlan, alpha: &GroupMap, p: usize) -> Result<Vec<GroupMap>> {
    let candidates = plan
        .generators()
        .iter()
        .map(|&s| {
            let mut orbit = vec![s];
            let mut y = alpha.apply(s);
            while y != s {
                orbit.push(y);
                y = alpha.apply(y);
            }
            orbit
        })
        .collect();
    let mut out = Vec::new();
    HomSearch::new(plan, g, candidates).injective(true).run(|img| {
        let beta = GroupMap::from_u32(img.to_vec());
        if is_p_power(beta.order(), p) && beta.commutes_with(alpha) && locally_power_unchecked(alpha, &beta) {
            out.push(beta);
        }
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Runs the check over `groups`, each an abelian `p`-group.
///
/// Fails with [`Error::CounterexampleFound`] on the first pair violating the
/// conclusion.
pub fn ispower_harness(groups: &[(String, Group)], seed: u64) -> Result<IspowerReport> {
    let mut report = IspowerReport::default();
    for (name, g) in groups {
        report.groups.push(harness_one(name, g, seed)?);
    }
    Ok(report)
}

fn harness_one(name: &str, g: &Group, seed: u64) -> Result<HarnessGroupReport> {
    let p = prime_power_base(g.order())
        .filter(|_| g.is_abelian())
        .ok_or_else(|| Error::PreconditionFailed(format!("{name} is not an abelian p-group")))?;
    let plan = SearchPlan::new(g);
    let k = plan.generators().len();
    let fp = fingerprints(g);
    let candidates: Vec<Vec<usize>> =
        plan.generators().iter().map(|&x| (0..g.order()).filter(|&y| fp[y] == fp[x]).collect()).collect();

    // stream Aut(G), keeping the generator images of p-power elements
    let branches: Vec<Result<(Vec<u32>, u64)>> = parallel::pool().install(|| {
        candidates[0]
            .par_iter()
            .map(|&c| {
                let mut cands = candidates.clone();
                cands[0] = vec![c];
                let mut keys = Vec::new();
                let stats = HomSearch::new(&plan, g, cands).injective(true).run(|img| {
                    if is_p_power(GroupMap::from_u32(img.to_vec()).order(), p) {
                        keys.extend(plan.generators().iter().map(|&s| img[s]));
                    }
                    ControlFlow::Continue(())
                })?;
                Ok((keys, stats.leaves))
            })
            .collect()
    });
    let mut keys = Vec::new();
    let mut automorphisms = 0;
    for b in branches {
        let (part, leaves) = b?;
        keys.extend(part);
        automorphisms += leaves;
    }
    let count = keys.len() / k;
    let index: HashMap<&[u32], usize> = keys.chunks(k).enumerate().map(|(i, key)| (key, i)).collect();

    let conjugators = random_automorphisms(g, &plan, &candidates, seed);
    let mut seen = vec![false; count];
    let mut reps = Vec::new();
    for start in 0..count {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        reps.push(start);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let alpha = expand_key(g, &plan, &keys[i * k..(i + 1) * k]);
            for (gamma, gamma_inv) in &conjugators {
                let key: Vec<u32> =
                    plan.generators().iter().map(|&s| gamma.apply(alpha.apply(gamma_inv.apply(s))) as u32).collect();
                let j = *index.get(key.as_slice()).expect("conjugate of a p-element is a p-element");
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }

    let outcomes: Vec<Result<u64>> = parallel::pool().install(|| {
        reps.par_iter()
            .map(|&i| {
                let alpha = expand_key(g, &plan, &keys[i * k..(i + 1) * k]);
                let betas = pointwise_with_plan(g, &plan, &alpha, p)?;
                for beta in &betas {
                    if power_of_unchecked(&alpha, beta).is_none() {
                        return Err(Error::CounterexampleFound {
                            group: name.to_string(),
                            detail: format!("alpha = {:?}, beta = {:?}", alpha.raw(), beta.raw()),
                        });
                    }
                }
                Ok(betas.len() as u64)
            })
            .collect()
    });
    let mut pairs = 0;
    for o in outcomes {
        pairs += o?;
    }
    Ok(HarnessGroupReport {
        name: name.to_string(),
        order: g.order(),
        p,
        automorphisms,
        p_automorphisms: count,
        alpha_representatives: reps.len(),
        pairs,
    })
}

fn expand_key(g: &Group, plan: &SearchPlan, key: &[u32]) -> GroupMap {
    let imgs: Vec<usize> = key.iter().map(|&v| v as usize).collect();
    GroupMap::from_u32(plan.expand(g, &imgs))
}

/// A few automorphisms picked by searching with shuffled candidate lists;
/// returned with their inverses.
fn random_automorphisms(
    g: &Group,
    plan: &SearchPlan,
    candidates: &[Vec<usize>],
    seed: u64,
) -> Vec<(GroupMap, GroupMap)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..CONJUGATORS)
        .map(|_| {
            let shuffled = candidates
                .iter()
                .map(|c| {
                    let mut c = c.clone();
                    c.shuffle(&mut rng);
                    c
                })
                .collect();
            let mut found = None;
            HomSearch::new(plan, g, shuffled)
                .injective(true)
                .run(|img| {
                    found = Some(GroupMap::from_u32(img.to_vec()));
                    ControlFlow::Break(())
                })
                .expect("unbudgeted search cannot fail");
            let gamma = found.expect("the identity is always an automorphism");
            let inv = gamma.inverse();
            (gamma, inv)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::iso::all_automorphisms;

    /// Unreduced version: every pair of p-power automorphisms.
    fn brute_pairs(g: &Group, p: usize) -> u64 {
        let autos: Vec<GroupMap> =
            all_automorphisms(g).unwrap().into_iter().filter(|a| is_p_power(a.order(), p)).collect();
        let mut pairs = 0;
        for a in &autos {
            for b in &autos {
                if a.commutes_with(b) && locally_power_unchecked(a, b) {
                    assert!(power_of_unchecked(a, b).is_some());
                    pairs += 1;
                }
            }
        }
        pairs
    }

    #[test]
    fn search_matches_brute_force_per_alpha() {
        let g = catalog::abelian(&[4, 2]).unwrap();
        let autos: Vec<GroupMap> = all_automorphisms(&g).unwrap();
        let mut total = 0;
        for a in &autos {
            total += pointwise_power_search(&g, a, 2).unwrap().len() as u64;
        }
        assert_eq!(total, brute_pairs(&g, 2));
    }

    #[test]
    fn small_harness_runs() {
        let groups: Vec<(String, Group)> = [vec![4, 2], vec![2, 2, 2], vec![9, 3]]
            .iter()
            .map(|s| (format!("{s:?}"), catalog::abelian(s).unwrap()))
            .collect();
        let rep = ispower_harness(&groups, 1).unwrap();
        assert_eq!(rep.groups[1].automorphisms, 168);
        // unipotent elements of GL3(2): 2^3
        assert_eq!(rep.groups[1].p_automorphisms, 64);
        assert!(rep.groups.iter().all(|g| g.alpha_representatives <= g.p_automorphisms));
    }

    #[test]
    fn rejects_nonabelian() {
        let q8 = catalog::generalized_quaternion(8).unwrap();
        assert!(matches!(ispower_harness(&[("Q8".into(), q8)], 0), Err(Error::PreconditionFailed(_))));
    }
}
