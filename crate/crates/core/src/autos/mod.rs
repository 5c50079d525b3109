//! Inner and class-preserving automorphisms, power relations between
//! automorphisms, and fixed-point witnesses for coprime actions.

mod hn;
mod ispower;

use std::collections::HashSet;
use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{p_part, prime_power_base, Group};
use crate::maps::GroupMap;
use crate::parallel;
use crate::search::{HomSearch, SearchPlan};

pub use hn::{find_hn_witness, hn_instances, HnInstance};
pub use ispower::{ispower_harness, pointwise_power_search, HarnessGroupReport, IspowerReport};

/// Default node budget for [`enumerate_autc`].
pub const DEFAULT_AUTC_BUDGET: u64 = 100_000_000;
/// Default order cap for [`enumerate_autc`].
pub const DEFAULT_AUTC_CAP: usize = 4096;

/// `x ↦ g⁻¹xg`.
pub fn inner_automorphism(grp: &Group, g: usize) -> GroupMap {
    GroupMap::from_fn(grp.order(), |x| grp.conj(x, g))
}

/// True iff `f(x)` is conjugate to `x` for every `x`.
pub fn is_class_preserving(g: &Group, f: &GroupMap) -> Result<bool> {
    if !f.is_automorphism(g) {
        return Err(Error::NotAutomorphism("map is not an automorphism of the group".into()));
    }
    Ok(class_preserving_unchecked(&g.class_ids(), f.raw()))
}

fn class_preserving_unchecked(class_ids: &[usize], images: &[u32]) -> bool {
    images.iter().enumerate().all(|(x, &y)| class_ids[x] == class_ids[y as usize])
}

/// Images of `gens` under every inner automorphism.
#[derive(Debug, Clone)]
pub struct InnerIndex {
    gens: Vec<usize>,
    keys: HashSet<Vec<u32>>,
}

impl InnerIndex {
    pub fn new(g: &Group, gens: &[usize]) -> InnerIndex {
        let keys = (0..g.order()).map(|x| gens.iter().map(|&s| g.conj(s, x) as u32).collect()).collect();
        InnerIndex { gens: gens.to_vec(), keys }
    }

    /// Number of distinct inner automorphisms.
    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// Decides innerness of an automorphism from its values on the generators.
    pub fn contains(&self, images: &[u32]) -> bool {
        let key: Vec<u32> = self.gens.iter().map(|&s| images[s]).collect();
        self.keys.contains(&key)
    }
}

pub fn is_inner(g: &Group, f: &GroupMap) -> bool {
    InnerIndex::new(g, &g.generators()).contains(f.raw())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AutcOptions {
    pub budget: u64,
    pub max_order: usize,
}

impl Default for AutcOptions {
    fn default() -> Self {
        AutcOptions { budget: DEFAULT_AUTC_BUDGET, max_order: DEFAULT_AUTC_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutcReport {
    pub group_order: usize,
    pub generating_set: Vec<usize>,
    pub autc_order: usize,
    pub inn_order: usize,
    pub outc_trivial: bool,
    /// A non-inner class-preserving automorphism, when one exists.
    pub witness: Option<GroupMap>,
    pub nodes: u64,
}

/// All class-preserving automorphisms, in the order of their generator images.
pub fn enumerate_autc(g: &Group, opts: &AutcOptions) -> Result<(Vec<GroupMap>, AutcReport)> {
    let n = g.order();
    if n > opts.max_order {
        return Err(Error::OrderCap { order: n as u128, cap: opts.max_order });
    }
    let plan = SearchPlan::new(g);
    let gens = plan.generators().to_vec();
    let class_ids = g.class_ids();
    let classes = g.conjugacy_classes();
    let class_of = |x: usize| classes[class_ids[x]].clone();
    let candidates: Vec<Vec<usize>> = gens.iter().map(|&s| class_of(s)).collect();

    // split on the first generator's image; results are concatenated in
    // candidate order so the output does not depend on scheduling
    let branches: Vec<Result<(Vec<GroupMap>, u64)>> = if gens.is_empty() {
        vec![Ok((vec![GroupMap::identity(n)], 0))]
    } else {
        parallel::pool().install(|| {
            candidates[0]
                .par_iter()
                .map(|&c| {
                    let mut cands = candidates.clone();
                    cands[0] = vec![c];
                    let mut found = Vec::new();
                    let stats = HomSearch::new(&plan, g, cands).injective(true).budget(opts.budget).run(|img| {
                        if class_preserving_unchecked(&class_ids, img) {
                            found.push(GroupMap::from_u32(img.to_vec()));
                        }
                        ControlFlow::Continue(())
                    })?;
                    Ok((found, stats.nodes))
                })
                .collect()
        })
    };
    let mut maps = Vec::new();
    let mut nodes = 0u64;
    for b in branches {
        let (found, used) = b?;
        nodes += used;
        maps.extend(found);
    }
    if nodes > opts.budget {
        return Err(Error::SearchBudgetExceeded(opts.budget));
    }

    let inner = InnerIndex::new(g, &gens);
    let witness = maps.iter().find(|m| !inner.contains(m.raw())).cloned();
    let report = AutcReport {
        group_order: n,
        generating_set: gens,
        autc_order: maps.len(),
        inn_order: n / g.center().order(),
        outc_trivial: witness.is_none(),
        witness,
        nodes,
    };
    debug_assert_eq!(report.inn_order, inner.len());
    Ok((maps, report))
}

pub fn outc_trivial(g: &Group, opts: &AutcOptions) -> Result<AutcReport> {
    enumerate_autc(g, opts).map(|(_, r)| r)
}

fn check_automorphisms(g: &Group, maps: &[&GroupMap]) -> Result<()> {
    match maps.iter().position(|m| !m.is_automorphism(g)) {
        Some(i) => Err(Error::NotAutomorphism(format!("argument {} is not an automorphism", i + 1))),
        None => Ok(()),
    }
}

/// Least `n ≥ 0` with `beta = alphaⁿ`.
pub fn power_of(g: &Group, alpha: &GroupMap, beta: &GroupMap) -> Result<Option<usize>> {
    check_automorphisms(g, &[alpha, beta])?;
    Ok(power_of_unchecked(alpha, beta))
}

pub(crate) fn power_of_unchecked(alpha: &GroupMap, beta: &GroupMap) -> Option<usize> {
    let mut acc = GroupMap::identity(alpha.len());
    for k in 0..alpha.order() {
        if &acc == beta {
            return Some(k);
        }
        acc = acc.then(alpha);
    }
    None
}

/// True iff every `x` has `beta(x) = alphaⁿ(x)` for some `n`.
pub fn locally_power(g: &Group, alpha: &GroupMap, beta: &GroupMap) -> Result<bool> {
    check_automorphisms(g, &[alpha, beta])?;
    Ok(locally_power_unchecked(alpha, beta))
}

pub(crate) fn locally_power_unchecked(alpha: &GroupMap, beta: &GroupMap) -> bool {
    (0..alpha.len()).all(|x| {
        let target = beta.apply(x);
        let mut y = x;
        loop {
            if y == target {
                return true;
            }
            y = alpha.apply(y);
            if y == x {
                return false;
            }
        }
    })
}

/// Result of [`p_part_normalize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub map: GroupMap,
    /// The `p′`-part of the order of `gamma` followed by `sigma`.
    pub exponent: usize,
    pub sigma_inner: bool,
    pub result_inner: bool,
}

/// `(γσ)^r` with `r` the `p′`-part of the order of `γσ` (apply `gamma`, then
/// `sigma`). The result is checked to be class-preserving, of `p`-power
/// order, and inner exactly when `sigma` is.
pub fn p_part_normalize(g: &Group, sigma: &GroupMap, gamma: &GroupMap, p: usize) -> Result<Normalized> {
    if !crate::group::is_prime(p as u64) {
        return Err(Error::PreconditionFailed(format!("{p} is not prime")));
    }
    check_automorphisms(g, &[sigma, gamma]).map_err(|e| Error::PreconditionFailed(e.to_string()))?;
    let class_ids = g.class_ids();
    let inner = InnerIndex::new(g, &g.generators());
    let is_p_power = |k: usize| k == 1 || prime_power_base(k) == Some(p);
    if !class_preserving_unchecked(&class_ids, sigma.raw()) || !is_p_power(sigma.order()) {
        return Err(Error::PreconditionFailed("sigma must be class-preserving of p-power order".into()));
    }
    if !inner.contains(gamma.raw()) {
        return Err(Error::PreconditionFailed("gamma is not inner".into()));
    }
    let composite = gamma.then(sigma);
    let ord = composite.order();
    let r = ord / p_part(ord, p);
    let map = composite.pow(r as u64);
    if !class_preserving_unchecked(&class_ids, map.raw()) || !is_p_power(map.order()) {
        return Err(Error::ClaimFailed("normalized map is not class-preserving of p-power order".into()));
    }
    let sigma_inner = inner.contains(sigma.raw());
    let result_inner = inner.contains(map.raw());
    if sigma_inner != result_inner {
        return Err(Error::ClaimFailed("normalization changed innerness".into()));
    }
    Ok(Normalized { map, exponent: r, sigma_inner, result_inner })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, resolve};
    use crate::iso::all_automorphisms;

    #[test]
    fn inner_maps() {
        let s3 = resolve("S3").unwrap();
        assert!(inner_automorphism(&s3, 0).is_identity());
        let three_cycle = (0..6).find(|&x| s3.element_order(x) == 3).unwrap();
        let c = inner_automorphism(&s3, three_cycle);
        let transpositions: Vec<usize> = (0..6).filter(|&x| s3.element_order(x) == 2).collect();
        let t0 = transpositions[0];
        let orbit = [t0, c.apply(t0), c.apply(c.apply(t0))];
        let mut sorted = orbit.to_vec();
        sorted.sort();
        assert_eq!(sorted, transpositions);
        assert_eq!(c.apply(orbit[2]), t0);
        let q8 = resolve("Q8").unwrap();
        let central = q8.center().members()[1];
        assert!(inner_automorphism(&q8, central).is_identity());
    }

    #[test]
    fn class_preservation() {
        let c3 = catalog::cyclic(3).unwrap();
        let inversion = GroupMap::from_fn(3, |x| (3 - x) % 3);
        assert!(!is_class_preserving(&c3, &inversion).unwrap());
        let s3 = resolve("S3").unwrap();
        for x in 0..6 {
            assert!(is_class_preserving(&s3, &inner_automorphism(&s3, x)).unwrap());
        }
        let bad = GroupMap::new(vec![0, 2, 1, 3, 4, 5]);
        assert!(matches!(is_class_preserving(&s3, &bad), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn autc_small() {
        let opts = AutcOptions::default();
        let (maps, rep) = enumerate_autc(&resolve("C12").unwrap(), &opts).unwrap();
        assert_eq!(maps.len(), 1);
        assert!(rep.outc_trivial && rep.inn_order == 1);
        let (maps, rep) = enumerate_autc(&resolve("S3").unwrap(), &opts).unwrap();
        assert_eq!(maps.len(), 6);
        assert_eq!(rep.inn_order, 6);
        assert!(rep.outc_trivial);
        // brute force over every bijection of S3 fixing the identity
        let s3 = resolve("S3").unwrap();
        let mut brute = 0;
        permute(&mut vec![1, 2, 3, 4, 5], 0, &mut |rest| {
            let mut img = vec![0];
            img.extend_from_slice(rest);
            let f = GroupMap::new(img);
            if f.is_automorphism(&s3) && is_class_preserving(&s3, &f).unwrap() {
                brute += 1;
            }
        });
        assert_eq!(brute, 6);
        let d8 = outc_trivial(&resolve("D8").unwrap(), &opts).unwrap();
        assert!(d8.outc_trivial && d8.inn_order == 4);
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn autc_matches_filtered_aut() {
        for name in ["Q8", "D8", "A4", "C3:C4", "Q16", "D12"] {
            let g = resolve(name).unwrap();
            let (maps, _) = enumerate_autc(&g, &AutcOptions::default()).unwrap();
            let mut filtered: Vec<GroupMap> =
                all_automorphisms(&g).unwrap().into_iter().filter(|f| is_class_preserving(&g, f).unwrap()).collect();
            let mut maps = maps;
            maps.sort();
            filtered.sort();
            assert_eq!(maps, filtered, "{name}");
        }
    }

    #[test]
    fn caps_and_budget() {
        let g = resolve("C8").unwrap();
        let opts = AutcOptions { budget: 10, max_order: 4 };
        assert!(matches!(enumerate_autc(&g, &opts), Err(Error::OrderCap { .. })));
        let g = resolve("Q8xQ8").unwrap();
        let opts = AutcOptions { budget: 3, max_order: 4096 };
        assert_eq!(enumerate_autc(&g, &opts).unwrap_err(), Error::SearchBudgetExceeded(3));
    }

    #[test]
    fn powers() {
        let c7 = catalog::cyclic(7).unwrap();
        let alpha = GroupMap::from_fn(7, |x| (3 * x) % 7);
        let id = GroupMap::identity(7);
        assert_eq!(power_of(&c7, &alpha, &id).unwrap(), Some(0));
        assert_eq!(power_of(&c7, &alpha, &alpha).unwrap(), Some(1));
        assert_eq!(power_of(&c7, &alpha, &alpha.pow(4)).unwrap(), Some(4));
        assert!(locally_power(&c7, &alpha, &alpha).unwrap());

        let v = catalog::elementary_abelian(2, 2).unwrap();
        let swap = GroupMap::new(vec![0, 2, 1, 3]);
        assert!(swap.is_automorphism(&v));
        assert!(!locally_power(&v, &GroupMap::identity(4), &swap).unwrap());
        assert_eq!(power_of(&v, &GroupMap::identity(4), &swap).unwrap(), None);
    }

    #[test]
    fn normalization() {
        let s3 = resolve("S3").unwrap();
        let t = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let c = (0..6).find(|&x| s3.element_order(x) == 3).unwrap();
        let sigma = inner_automorphism(&s3, t);
        let gamma = inner_automorphism(&s3, c);
        let out = p_part_normalize(&s3, &sigma, &gamma, 2).unwrap();
        assert!(out.result_inner && out.sigma_inner);
        assert!(out.map.order() <= 2);

        let id = GroupMap::identity(6);
        let out = p_part_normalize(&s3, &sigma, &id, 2).unwrap();
        assert_eq!(out.map, sigma);
        assert_eq!(out.exponent, 1);
        let out = p_part_normalize(&s3, &id, &gamma, 3).unwrap();
        assert_eq!(out.map, gamma);
        assert!(matches!(p_part_normalize(&s3, &gamma, &id, 2), Err(Error::PreconditionFailed(_))));
    }
}
