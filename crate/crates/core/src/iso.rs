//! Brute-force isomorphism testing and full automorphism enumeration.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::maps::GroupMap;
use crate::search::{HomSearch, SearchPlan};

/// Order of full `Aut(G)` enumeration allowed by [`all_automorphisms`].
pub const FULL_AUT_CAP: usize = 64;

/// `(element order, conjugacy class size)`, preserved by isomorphisms.
pub fn fingerprints(g: &Group) -> Vec<(usize, usize)> {
    let ids = g.class_ids();
    let mut sizes = vec![0usize; g.order()];
    for &c in &ids {
        sizes[c] += 1;
    }
    (0..g.order()).map(|x| (g.element_order(x), sizes[ids[x]])).collect()
}

fn histogram(fp: &[(usize, usize)]) -> BTreeMap<(usize, usize), usize> {
    let mut h = BTreeMap::new();
    for &k in fp {
        *h.entry(k).or_insert(0) += 1;
    }
    h
}

pub fn find_isomorphism(g: &Group, h: &Group) -> Option<GroupMap> {
    if g.order() != h.order() {
        return None;
    }
    if g.raw_table() == h.raw_table() {
        return Some(GroupMap::identity(g.order()));
    }
    let (fg, fh) = (fingerprints(g), fingerprints(h));
    if histogram(&fg) != histogram(&fh) || g.is_abelian() != h.is_abelian() {
        return None;
    }
    let plan = SearchPlan::new(g);
    let candidates = plan.generators().iter().map(|&x| (0..h.order()).filter(|&y| fh[y] == fg[x]).collect()).collect();
    let mut found = None;
    HomSearch::new(&plan, h, candidates)
        .injective(true)
        .run(|img| {
            found = Some(GroupMap::from_u32(img.to_vec()));
            ControlFlow::Break(())
        })
        .expect("unbudgeted search cannot fail");
    found
}

pub fn are_isomorphic(g: &Group, h: &Group) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Streams every automorphism of `g`; candidate images are only filtered by
/// element order and class size.
pub fn for_each_automorphism(g: &Group, budget: u64, visit: impl FnMut(&[u32]) -> ControlFlow<()>) -> Result<u64> {
    let plan = SearchPlan::new(g);
    let fp = fingerprints(g);
    let candidates = plan.generators().iter().map(|&x| (0..g.order()).filter(|&y| fp[y] == fp[x]).collect()).collect();
    let stats = HomSearch::new(&plan, g, candidates).injective(true).budget(budget).run(visit)?;
    Ok(stats.leaves)
}

/// The whole of `Aut(G)` for `|G| ≤ 64`.
pub fn all_automorphisms(g: &Group) -> Result<Vec<GroupMap>> {
    if g.order() > FULL_AUT_CAP {
        return Err(Error::OrderCap { order: g.order() as u128, cap: FULL_AUT_CAP });
    }
    let mut out = Vec::new();
    for_each_automorphism(g, u64::MAX, |img| {
        out.push(GroupMap::from_u32(img.to_vec()));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::products::direct_product;

    #[test]
    fn automorphism_group_orders() {
        let aut = |g: &Group| all_automorphisms(g).unwrap().len();
        assert_eq!(aut(&catalog::cyclic(8).unwrap()), 4);
        assert_eq!(aut(&catalog::symmetric(3).unwrap()), 6);
        assert_eq!(aut(&catalog::generalized_quaternion(8).unwrap()), 24);
        assert_eq!(aut(&catalog::elementary_abelian(2, 3).unwrap()), 168);
        assert_eq!(aut(&catalog::dihedral(8).unwrap()), 8);
    }

    #[test]
    fn non_isomorphic_same_order() {
        let d8 = catalog::dihedral(8).unwrap();
        let q8 = catalog::generalized_quaternion(8).unwrap();
        assert!(!are_isomorphic(&d8, &q8));
        let c2 = catalog::cyclic(2).unwrap();
        let c4 = catalog::cyclic(4).unwrap();
        let a = direct_product(&c2, &c4).unwrap();
        let b = direct_product(&c4, &c2).unwrap();
        let f = find_isomorphism(&a, &b).unwrap();
        assert!(f.is_homomorphism(&a, &b) && f.is_bijective());
    }
}
