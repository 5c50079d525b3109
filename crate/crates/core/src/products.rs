//! Direct and semidirect products, quotients, and group actions.

use crate::error::{Error, Result};
use crate::group::{Group, Limits};
use crate::maps::GroupMap;
use crate::subgroup::Subgroup;

/// A homomorphism from `actor` into the automorphisms of `acted`.
///
/// `images[h][x]` is the image of `x ∈ N` under the automorphism assigned to
/// `h ∈ H`. Composition is the usual one: `act(h₁h₂) = act(h₁) ∘ act(h₂)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Action {
    actor_order: usize,
    acted_order: usize,
    images: Vec<Vec<u32>>,
}

impl Action {
    pub fn trivial(actor: &Group, acted: &Group) -> Action {
        let id: Vec<u32> = (0..acted.order() as u32).collect();
        Action { actor_order: actor.order(), acted_order: acted.order(), images: vec![id; actor.order()] }
    }

    /// Checks every homomorphism condition on a full element-wise table.
    pub fn from_images(actor: &Group, acted: &Group, images: Vec<Vec<usize>>) -> Result<Action> {
        if images.len() != actor.order() || images.iter().any(|m| m.len() != acted.order()) {
            return Err(Error::InvalidAction("image table has the wrong shape".into()));
        }
        let images = images.into_iter().map(|m| m.into_iter().map(|v| v as u32).collect()).collect();
        let action = Action { actor_order: actor.order(), acted_order: acted.order(), images };
        action.validate(actor, acted)?;
        Ok(action)
    }

    /// Extends automorphisms assigned to generators of `actor` multiplicatively.
    pub fn from_generators(actor: &Group, acted: &Group, gens: &[(usize, GroupMap)]) -> Result<Action> {
        let n = acted.order();
        let mut images: Vec<Option<Vec<u32>>> = vec![None; actor.order()];
        images[0] = Some((0..n as u32).collect());
        let mut order = vec![0usize];
        let mut i = 0;
        while i < order.len() {
            let h = order[i];
            for (g, map) in gens {
                if map.len() != n {
                    return Err(Error::InvalidAction(format!("map for generator {g} has wrong length")));
                }
                let hg = actor.mul(h, *g);
                if images[hg].is_none() {
                    let base = images[h].as_ref().expect("visited");
                    // act(h g)(x) = act(h)(act(g)(x))
                    let composed = (0..n).map(|x| base[map.apply(x)]).collect();
                    images[hg] = Some(composed);
                    order.push(hg);
                }
            }
            i += 1;
        }
        if order.len() != actor.order() {
            return Err(Error::InvalidAction("generators do not generate the acting group".into()));
        }
        let action = Action {
            actor_order: actor.order(),
            acted_order: n,
            images: images.into_iter().map(|m| m.expect("all reached")).collect(),
        };
        action.validate(actor, acted)?;
        Ok(action)
    }

    fn validate(&self, actor: &Group, acted: &Group) -> Result<()> {
        let n = acted.order();
        if !(0..n).all(|x| self.images[0][x] as usize == x) {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        for (h, img) in self.images.iter().enumerate() {
            let map = GroupMap::from_u32(img.clone());
            if !map.is_automorphism(acted) {
                return Err(Error::InvalidAction(format!("element {h} does not act as an automorphism")));
            }
        }
        for h1 in 0..actor.order() {
            for h2 in 0..actor.order() {
                let h12 = actor.mul(h1, h2);
                for x in 0..n {
                    let lhs = self.images[h12][x];
                    let rhs = self.images[h1][self.images[h2][x] as usize];
                    if lhs != rhs {
                        return Err(Error::InvalidAction(format!(
                            "act({h1}*{h2}) differs from act({h1})∘act({h2}) at {x}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn apply(&self, h: usize, x: usize) -> usize {
        self.images[h][x] as usize
    }

    pub fn actor_order(&self) -> usize {
        self.actor_order
    }

    pub fn acted_order(&self) -> usize {
        self.acted_order
    }

    pub fn map_of(&self, h: usize) -> GroupMap {
        GroupMap::from_u32(self.images[h].clone())
    }

    /// Elements of the actor that act trivially.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.actor_order).filter(|&h| self.images[h].iter().enumerate().all(|(x, &y)| x == y as usize)).collect()
    }

    /// Elements of the actor fixing `x`.
    pub fn stabilizer(&self, x: usize) -> Vec<usize> {
        (0..self.actor_order).filter(|&h| self.images[h][x] as usize == x).collect()
    }
}

pub fn direct_product(g: &Group, h: &Group) -> Result<Group> {
    direct_product_with(g, h, &Limits::default())
}

/// Elements are pairs `(a, b)` stored at index `a·|H| + b`.
pub fn direct_product_with(g: &Group, h: &Group, limits: &Limits) -> Result<Group> {
    let (n, m) = (g.order(), h.order());
    let order = limits.check_order(n as u128 * m as u128)?;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (a1, a2) = (a / m, a % m);
        for b in 0..order {
            let (b1, b2) = (b / m, b % m);
            table.push((g.mul(a1, b1) * m + h.mul(a2, b2)) as u32);
        }
    }
    let names = (0..order).map(|a| format!("({},{})", g.name(a / m), h.name(a % m))).collect();
    Ok(Group::from_trusted(order, table, Some(names)))
}

pub fn semidirect_product(n_grp: &Group, h_grp: &Group, action: &Action) -> Result<Group> {
    semidirect_product_with(n_grp, h_grp, action, &Limits::default())
}

/// `N ⋊ H` with `(n₁,h₁)(n₂,h₂) = (n₁·act(h₁)(n₂), h₁h₂)`, pair `(n, h)` at
/// index `n·|H| + h`.
///
/// With this convention `h n h⁻¹ = act(h)(n)`, so `h⁻¹ n h = act(h⁻¹)(n)`.
pub fn semidirect_product_with(n_grp: &Group, h_grp: &Group, action: &Action, limits: &Limits) -> Result<Group> {
    let (n, m) = (n_grp.order(), h_grp.order());
    if action.acted_order() != n || action.actor_order() != m {
        return Err(Error::InvalidAction("action does not match the factors".into()));
    }
    let order = limits.check_order(n as u128 * m as u128)?;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (a1, a2) = (a / m, a % m);
        for b in 0..order {
            let (b1, b2) = (b / m, b % m);
            let first = n_grp.mul(a1, action.apply(a2, b1));
            table.push((first * m + h_grp.mul(a2, b2)) as u32);
        }
    }
    let names = (0..order).map(|a| format!("({},{})", n_grp.name(a / m), h_grp.name(a % m))).collect();
    Ok(Group::from_trusted(order, table, Some(names)))
}

/// `G/N` together with the canonical projection.
///
/// Cosets are numbered by their least member, so the identity coset is 0.
pub fn quotient(g: &Group, normal: &Subgroup) -> Result<(Group, GroupMap)> {
    if !normal.check_invariants(g) || !g.is_normal(normal) {
        return Err(Error::NotNormal);
    }
    let n = g.order();
    let mut coset = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &k in normal.members() {
            coset[g.mul(x, k)] = id;
        }
    }
    let q = reps.len();
    let mut table = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            table.push(coset[g.mul(a, b)] as u32);
        }
    }
    let names = reps.iter().map(|&r| format!("[{}]", g.name(r))).collect();
    let projection = GroupMap::new(coset);
    Ok((Group::from_trusted(q, table, Some(names)), projection))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::iso::are_isomorphic;

    #[test]
    fn klein_four() {
        let c2 = catalog::cyclic(2).unwrap();
        let v = direct_product(&c2, &c2).unwrap();
        assert_eq!(v.order(), 4);
        assert_eq!(v.exponent(), 2);
    }

    #[test]
    fn q8_times_c4_center() {
        let q8 = catalog::generalized_quaternion(8).unwrap();
        let c4 = catalog::cyclic(4).unwrap();
        let g = direct_product(&q8, &c4).unwrap();
        assert_eq!(g.order(), 32);
        // brute-force center
        let center = (0..32).filter(|&z| (0..32).all(|x| g.mul(z, x) == g.mul(x, z))).count();
        assert_eq!(center, 8);
        assert_eq!(g.center().order(), 8);
    }

    #[test]
    fn product_with_trivial() {
        let s3 = catalog::symmetric(3).unwrap();
        let one = catalog::cyclic(1).unwrap();
        let g = direct_product(&s3, &one).unwrap();
        assert_eq!(g.rows(), s3.rows());
    }

    #[test]
    fn order_cap() {
        let c = catalog::cyclic(300).unwrap();
        let limits = Limits { max_order: 50_000, ..Limits::default() };
        assert!(matches!(direct_product_with(&c, &c, &limits), Err(Error::OrderCap { order: 90_000, .. })));
    }

    #[test]
    fn trivial_action_is_direct() {
        let c3 = catalog::cyclic(3).unwrap();
        let c4 = catalog::cyclic(4).unwrap();
        let sd = semidirect_product(&c3, &c4, &Action::trivial(&c4, &c3)).unwrap();
        assert_eq!(sd.rows(), direct_product(&c3, &c4).unwrap().rows());
    }

    #[test]
    fn c3_by_c2_is_s3() {
        let c3 = catalog::cyclic(3).unwrap();
        let c2 = catalog::cyclic(2).unwrap();
        let inv = GroupMap::new(vec![0, 2, 1]);
        let act = Action::from_generators(&c2, &c3, &[(1, inv)]).unwrap();
        let g = semidirect_product(&c3, &c2, &act).unwrap();
        assert!(are_isomorphic(&g, &catalog::symmetric(3).unwrap()));
    }

    #[test]
    fn bad_action_rejected() {
        let c3 = catalog::cyclic(3).unwrap();
        let c3b = catalog::cyclic(3).unwrap();
        // inversion has order 2, so it cannot be the image of an order-3 generator
        let inv = GroupMap::new(vec![0, 2, 1]);
        assert!(Action::from_generators(&c3b, &c3, &[(1, inv)]).is_err());
    }

    #[test]
    fn quotients() {
        let q8 = catalog::generalized_quaternion(8).unwrap();
        let (q, proj) = quotient(&q8, &Subgroup::whole(&q8)).unwrap();
        assert_eq!(q.order(), 1);
        assert!(proj.is_homomorphism(&q8, &q));
        let (same, _) = quotient(&q8, &Subgroup::trivial()).unwrap();
        assert!(are_isomorphic(&same, &q8));
        let (v, proj) = quotient(&q8, &q8.center()).unwrap();
        assert_eq!(v.order(), 4);
        assert_eq!(v.exponent(), 2);
        assert!(proj.is_homomorphism(&q8, &v));
        let s3 = catalog::symmetric(3).unwrap();
        let t = s3.closure(&[(1..6).find(|&x| s3.element_order(x) == 2).unwrap()]);
        assert_eq!(quotient(&s3, &t).unwrap_err(), Error::NotNormal);
    }
}
