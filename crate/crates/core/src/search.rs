//! Backtracking over generator images.
//!
//! A homomorphism out of a finite group is fixed by the images of a
//! generating sequence `g₁, …, g_k`. The search assigns images one generator
//! at a time. After assigning `gᵢ` it extends the partial map from
//! `⟨g₁,…,gᵢ₋₁⟩` to `⟨g₁,…,gᵢ⟩` along Cayley-graph edges `x → x·gₛ`,
//! setting `φ(x·gₛ) = φ(x)·φ(gₛ)` on first visit and checking it on every
//! later one. Each edge is checked exactly once over the whole descent, so
//! a completed assignment that survives is a homomorphism.
//!
//! The edge lists are computed once per source group ([`SearchPlan`]); a
//! search node then costs one table lookup per edge of its level.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::group::Group;

const UNSET: u32 = u32::MAX;

#[derive(Debug, Clone)]
struct Level {
    /// `(x, s, y)` with `y = x · gens[s]`.
    steps: Vec<(u32, u32, u32)>,
    /// Elements first reached at this level; `fresh[0]` is the generator.
    fresh: Vec<u32>,
}

/// Edge schedule for a fixed generating sequence of a source group.
#[derive(Debug, Clone)]
pub struct SearchPlan {
    gens: Vec<usize>,
    levels: Vec<Level>,
    order: usize,
}

impl SearchPlan {
    /// Plan over the canonical generating sequence of `g`.
    pub fn new(g: &Group) -> SearchPlan {
        Self::with_generators(g, &g.generators())
    }

    /// `gens` must be irredundant in order: no `gᵢ` lies in `⟨g₁,…,gᵢ₋₁⟩`.
    pub fn with_generators(g: &Group, gens: &[usize]) -> SearchPlan {
        let n = g.order();
        let mut inside = vec![false; n];
        inside[0] = true;
        let mut old: Vec<u32> = vec![0];
        let mut levels = Vec::with_capacity(gens.len());
        for (i, &gi) in gens.iter().enumerate() {
            assert!(!inside[gi], "generator {gi} is redundant");
            let mut steps = Vec::new();
            let mut fresh = vec![gi as u32];
            inside[gi] = true;
            for &x in &old {
                let y = g.mul(x as usize, gi);
                steps.push((x, i as u32, y as u32));
                if !inside[y] {
                    inside[y] = true;
                    fresh.push(y as u32);
                }
            }
            let mut idx = 0;
            while idx < fresh.len() {
                let x = fresh[idx] as usize;
                for (s, &gs) in gens[..=i].iter().enumerate() {
                    let y = g.mul(x, gs);
                    steps.push((x as u32, s as u32, y as u32));
                    if !inside[y] {
                        inside[y] = true;
                        fresh.push(y as u32);
                    }
                }
                idx += 1;
            }
            old.extend_from_slice(&fresh);
            levels.push(Level { steps, fresh });
        }
        SearchPlan { gens: gens.to_vec(), levels, order: n }
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// True when the generators reach the whole group.
    pub fn is_complete(&self) -> bool {
        1 + self.levels.iter().map(|l| l.fresh.len()).sum::<usize>() == self.order
    }

    /// Rebuilds the full image list of the homomorphism with the given
    /// generator images, without any consistency checks.
    pub fn expand(&self, tgt: &Group, gen_images: &[usize]) -> Vec<u32> {
        let mut image = vec![UNSET; self.order];
        image[0] = 0;
        for (level, &gi) in self.levels.iter().zip(gen_images) {
            image[level.fresh[0] as usize] = gi as u32;
            for &(x, s, y) in &level.steps {
                if image[y as usize] == UNSET {
                    let gs = self.gens[s as usize];
                    image[y as usize] = tgt.mul(image[x as usize] as usize, image[gs] as usize) as u32;
                }
            }
        }
        image
    }
}

/// Counters reported by a finished search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub leaves: u64,
}

/// One backtracking run from `src` into `tgt`.
pub struct HomSearch<'a> {
    plan: &'a SearchPlan,
    tgt: &'a Group,
    candidates: Vec<Vec<u32>>,
    injective: bool,
    budget: u64,
}

impl<'a> HomSearch<'a> {
    /// `candidates[i]` lists the allowed images of the `i`-th generator.
    pub fn new(plan: &'a SearchPlan, tgt: &'a Group, candidates: Vec<Vec<usize>>) -> Self {
        assert_eq!(candidates.len(), plan.gens.len());
        HomSearch {
            plan,
            tgt,
            candidates: candidates.into_iter().map(|c| c.into_iter().map(|v| v as u32).collect()).collect(),
            injective: false,
            budget: u64::MAX,
        }
    }

    pub fn injective(mut self, yes: bool) -> Self {
        self.injective = yes;
        self
    }

    pub fn budget(mut self, nodes: u64) -> Self {
        self.budget = nodes;
        self
    }

    /// Calls `visit` with the full image list of every homomorphism found.
    pub fn run(&self, mut visit: impl FnMut(&[u32]) -> ControlFlow<()>) -> Result<SearchStats> {
        let mut state = State {
            image: vec![UNSET; self.plan.order],
            used: vec![false; self.tgt.order()],
            stats: SearchStats::default(),
        };
        state.image[0] = 0;
        state.used[0] = true;
        let _ = self.descend(0, &mut state, &mut visit)?;
        Ok(state.stats)
    }

    fn descend(
        &self,
        depth: usize,
        st: &mut State,
        visit: &mut impl FnMut(&[u32]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        if depth == self.plan.levels.len() {
            st.stats.leaves += 1;
            return Ok(visit(&st.image));
        }
        let level = &self.plan.levels[depth];
        let gi = level.fresh[0] as usize;
        for &c in &self.candidates[depth] {
            st.stats.nodes += 1;
            if st.stats.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded(self.budget));
            }
            if self.injective && st.used[c as usize] {
                continue;
            }
            st.image[gi] = c;
            st.used[c as usize] = true;
            let ok = self.replay(level, st);
            let flow = if ok { self.descend(depth + 1, st, visit)? } else { ControlFlow::Continue(()) };
            for &y in &level.fresh {
                let v = st.image[y as usize];
                if v != UNSET {
                    st.used[v as usize] = false;
                    st.image[y as usize] = UNSET;
                }
            }
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    fn replay(&self, level: &Level, st: &mut State) -> bool {
        let gens = &self.plan.gens;
        for &(x, s, y) in &level.steps {
            let v = self.tgt.mul(st.image[x as usize] as usize, st.image[gens[s as usize]] as usize) as u32;
            let slot = &mut st.image[y as usize];
            if *slot == UNSET {
                if self.injective && st.used[v as usize] {
                    return false;
                }
                *slot = v;
                st.used[v as usize] = true;
            } else if *slot != v {
                return false;
            }
        }
        true
    }
}

struct State {
    image: Vec<u32>,
    used: Vec<bool>,
    stats: SearchStats,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::maps::GroupMap;

    #[test]
    fn counts_endomorphisms_of_cyclic() {
        // End(C_n) has exactly n elements
        let c6 = catalog::cyclic(6).unwrap();
        let plan = SearchPlan::new(&c6);
        assert!(plan.is_complete());
        let all: Vec<usize> = (0..6).collect();
        let mut count = 0;
        HomSearch::new(&plan, &c6, vec![all])
            .run(|img| {
                assert!(GroupMap::from_u32(img.to_vec()).is_homomorphism(&c6, &c6));
                count += 1;
                ControlFlow::Continue(())
            })
            .unwrap();
        assert_eq!(count, 6);
    }

    #[test]
    fn homs_agree_with_brute_force() {
        // every map S3 -> S3 fixed by generator images, checked against the
        // full multiplication table
        let s3 = catalog::symmetric(3).unwrap();
        let plan = SearchPlan::new(&s3);
        let all: Vec<usize> = (0..6).collect();
        let cands = vec![all; plan.generators().len()];
        let mut found = Vec::new();
        HomSearch::new(&plan, &s3, cands.clone())
            .run(|img| {
                found.push(img.to_vec());
                ControlFlow::Continue(())
            })
            .unwrap();
        let mut brute = 0;
        let k = plan.generators().len();
        let mut idx = vec![0usize; k];
        loop {
            let img = plan.expand(&s3, &idx);
            if GroupMap::from_u32(img.clone()).is_homomorphism(&s3, &s3) {
                brute += 1;
                assert!(found.contains(&img));
            }
            let mut i = 0;
            while i < k {
                idx[i] += 1;
                if idx[i] < 6 {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
        // 6 automorphisms, 3 maps onto order-2 subgroups, 1 trivial
        assert_eq!(brute, 10);
        assert_eq!(found.len(), 10);
    }

    #[test]
    fn budget_is_enforced() {
        let g = catalog::elementary_abelian(2, 4).unwrap();
        let plan = SearchPlan::new(&g);
        let all: Vec<usize> = (0..16).collect();
        let res = HomSearch::new(&plan, &g, vec![all; 4]).budget(100).run(|_| ControlFlow::Continue(()));
        assert_eq!(res, Err(Error::SearchBudgetExceeded(100)));
    }
}
