//! Subgroups and the standard subgroup-level interrogations of a [`Group`].

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{p_part, prime_divisors, Group, Limits};

/// A subgroup of some parent group, stored as its sorted member indices.
///
/// Subgroups do not borrow their parent; every query takes the parent
/// group explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub fn trivial() -> Self {
        Subgroup { members: vec![0] }
    }

    pub fn whole(g: &Group) -> Self {
        Subgroup { members: (0..g.order()).collect() }
    }

    /// Wraps a member list without checking closure.
    pub fn from_members(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subgroup { members }
    }

    pub(crate) fn from_mask(mask: &[bool]) -> Self {
        Subgroup { members: mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect() }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup { members: self.members.iter().copied().filter(|&x| other.contains(x)).collect() }
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &x in &self.members {
            m[x] = true;
        }
        m
    }

    /// Identity, product and inverse closure, and Lagrange.
    pub fn check_invariants(&self, g: &Group) -> bool {
        let mask = self.mask(g.order());
        mask[0]
            && g.order() % self.order() == 0
            && self.members.iter().all(|&a| mask[g.inv(a)] && self.members.iter().all(|&b| mask[g.mul(a, b)]))
    }

    /// The subgroup as a group in its own right, with the embedding into the parent.
    pub fn to_group(&self, g: &Group) -> (Group, Vec<usize>) {
        let m = self.order();
        let mut local = vec![usize::MAX; g.order()];
        for (i, &x) in self.members.iter().enumerate() {
            local[x] = i;
        }
        let mut table = Vec::with_capacity(m * m);
        for &a in &self.members {
            for &b in &self.members {
                table.push(local[g.mul(a, b)] as u32);
            }
        }
        let names = g.names().map(|ns| self.members.iter().map(|&x| ns[x].clone()).collect());
        (Group::from_trusted(m, table, names), self.members.clone())
    }

    pub fn is_abelian(&self, g: &Group) -> bool {
        let gens = g.generators_of(&self.members);
        gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    pub fn exponent(&self, g: &Group) -> usize {
        self.members.iter().map(|&x| g.element_order(x)).fold(1, crate::group::lcm)
    }

    pub fn is_cyclic(&self, g: &Group) -> bool {
        self.members.iter().any(|&x| g.element_order(x) == self.order())
    }
}

impl Group {
    fn closure_mask(&self, seed: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let gens: Vec<usize> = seed.iter().copied().filter(|&s| s != 0).collect();
        let mut elems = vec![0usize];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &s in &gens {
                let y = self.mul(x, s);
                if !inside[y] {
                    inside[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        inside
    }

    /// Smallest subgroup containing `seed`.
    pub fn closure(&self, seed: &[usize]) -> Subgroup {
        Subgroup::from_mask(&self.closure_mask(seed))
    }

    pub fn cyclic_subgroup(&self, x: usize) -> Subgroup {
        let mut members = vec![0];
        let mut y = x;
        while y != 0 {
            members.push(y);
            y = self.mul(y, x);
        }
        Subgroup::from_members(members)
    }

    /// Distinct cyclic subgroups, in order of their least generator index.
    pub fn cyclic_subgroups(&self) -> Vec<Subgroup> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for x in 0..self.order() {
            let c = self.cyclic_subgroup(x);
            if seen.insert(c.members.clone()) {
                out.push(c);
            }
        }
        out
    }

    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>> {
        self.all_subgroups_with(&Limits::default())
    }

    /// Every subgroup exactly once, sorted by order and then members.
    ///
    /// Grows the lattice from the trivial subgroup by joining cyclic subgroups
    /// of prime-power order, which generate every subgroup.
    pub fn all_subgroups_with(&self, limits: &Limits) -> Result<Vec<Subgroup>> {
        let n = self.order();
        if n > limits.subgroup_cap {
            return Err(Error::OrderCap { order: n as u128, cap: limits.subgroup_cap });
        }
        let orders = self.element_orders();
        let mut atoms: Vec<usize> = Vec::new();
        let mut atom_sets = HashSet::new();
        for x in 1..n {
            if prime_divisors(orders[x]).len() == 1 && atom_sets.insert(self.cyclic_subgroup(x).members) {
                atoms.push(x);
            }
        }

        let to_bits = |mask: &[bool]| {
            let mut b = FixedBitSet::with_capacity(n);
            for (i, &m) in mask.iter().enumerate() {
                b.set(i, m);
            }
            b
        };
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let trivial = to_bits(&self.closure_mask(&[]));
        seen.insert(trivial.clone());
        let mut queue: Vec<(FixedBitSet, Vec<usize>)> = vec![(trivial, Vec::new())];
        while let Some((bits, gens)) = queue.pop() {
            for &a in &atoms {
                if bits.contains(a) {
                    continue;
                }
                let mut g2 = gens.clone();
                g2.push(a);
                let joined = to_bits(&self.closure_mask(&g2));
                if seen.insert(joined.clone()) {
                    queue.push((joined, g2));
                }
            }
        }
        let mut out: Vec<Subgroup> = seen.into_iter().map(|b| Subgroup { members: b.ones().collect() }).collect();
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
        Ok(out)
    }

    /// Orbits of conjugation, each sorted, listed by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let ids = self.class_ids();
        let count = ids.iter().max().map_or(0, |m| m + 1);
        let mut classes = vec![Vec::new(); count];
        for (x, &c) in ids.iter().enumerate() {
            classes[c].push(x);
        }
        classes
    }

    /// Class index of every element; classes are numbered by least member.
    pub fn class_ids(&self) -> Vec<usize> {
        let n = self.order();
        let gens = self.generators();
        let mut ids = vec![usize::MAX; n];
        let mut next = 0;
        for x in 0..n {
            if ids[x] != usize::MAX {
                continue;
            }
            ids[x] = next;
            let mut stack = vec![x];
            while let Some(y) = stack.pop() {
                for &g in &gens {
                    let c = self.conj(y, g);
                    if ids[c] == usize::MAX {
                        ids[c] = next;
                        stack.push(c);
                    }
                }
            }
            next += 1;
        }
        ids
    }

    pub fn centralizer(&self, xs: &[usize]) -> Subgroup {
        let gens = self.generators_of(xs);
        Subgroup::from_members(
            (0..self.order()).filter(|&g| gens.iter().all(|&x| self.mul(g, x) == self.mul(x, g))).collect(),
        )
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(&self.generators())
    }

    /// `g⁻¹ H g`.
    pub fn conjugate(&self, h: &Subgroup, g: usize) -> Subgroup {
        Subgroup::from_members(h.members.iter().map(|&x| self.conj(x, g)).collect())
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let gens = self.generators_of(&h.members);
        let mask = h.mask(self.order());
        Subgroup::from_members((0..self.order()).filter(|&g| gens.iter().all(|&x| mask[self.conj(x, g)])).collect())
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        let hg = self.generators_of(&h.members);
        let mask = h.mask(self.order());
        self.generators().iter().all(|&g| hg.iter().all(|&x| mask[self.conj(x, g)]))
    }

    /// Elements whose order is a power of `p` (including the identity).
    pub fn p_elements(&self, p: usize) -> Vec<usize> {
        (0..self.order()).filter(|&x| prime_divisors(self.element_order(x)).iter().all(|&q| q == p)).collect()
    }

    /// One Sylow `p`-subgroup, grown greedily inside successive normalizers.
    pub fn sylow(&self, p: usize) -> Subgroup {
        let target = p_part(self.order(), p);
        let orders = self.element_orders();
        let is_p_elem = |x: usize| prime_divisors(orders[x]).iter().all(|&q| q == p);
        let start = (0..self.order()).filter(|&x| is_p_elem(x)).max_by_key(|&x| (orders[x], std::cmp::Reverse(x)));
        let mut current = self.cyclic_subgroup(start.unwrap_or(0));
        while current.order() < target {
            let norm = self.normalizer(&current);
            let y = norm
                .members
                .iter()
                .copied()
                .find(|&y| is_p_elem(y) && !current.contains(y))
                .expect("a non-Sylow p-subgroup has a p-element outside it in its normalizer");
            let mut seed = self.generators_of(&current.members);
            seed.push(y);
            current = self.closure(&seed);
        }
        current
    }

    /// Largest normal `p`-subgroup: the intersection of the Sylow conjugates.
    pub fn o_p(&self, p: usize) -> Subgroup {
        let sylow = self.sylow(p);
        if self.is_normal(&sylow) {
            return sylow;
        }
        let n = self.order();
        let mut mask = sylow.mask(n);
        for g in 0..n {
            let conj = self.conjugate(&sylow, g).mask(n);
            for x in 0..n {
                mask[x] &= conj[x];
            }
        }
        Subgroup::from_mask(&mask)
    }

    /// The set of `p′`-elements when it is a subgroup of index `|G|_p`.
    pub fn normal_p_complement(&self, p: usize) -> Option<Subgroup> {
        let orders = self.element_orders();
        let set: Vec<usize> = (0..self.order()).filter(|&x| orders[x] % p != 0).collect();
        if set.len() != self.order() / p_part(self.order(), p) {
            return None;
        }
        let closed = self.closure(&set);
        (closed.order() == set.len()).then(|| Subgroup::from_members(set))
    }

    pub fn commutator_subgroup(&self) -> Subgroup {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut comms = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let c = self.commutator(a, b);
                if !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        self.closure(&comms)
    }

    /// Nilpotent iff every Sylow subgroup is normal.
    pub fn is_nilpotent(&self) -> bool {
        prime_divisors(self.order()).into_iter().all(|p| self.is_normal(&self.sylow(p)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn closure_edge_cases() {
        let s3 = catalog::symmetric(3).unwrap();
        assert!(s3.closure(&[]).is_trivial());
        assert!(s3.closure(&[0]).is_trivial());
        let t = (1..6).find(|&x| s3.element_order(x) == 2).unwrap();
        assert_eq!(s3.closure(&[t]).order(), 2);
    }

    #[test]
    fn lattice_counts() {
        assert_eq!(catalog::cyclic(7).unwrap().all_subgroups().unwrap().len(), 2);
        let s3 = catalog::symmetric(3).unwrap();
        assert_eq!(s3.all_subgroups().unwrap().len(), 6);
        let q8 = catalog::generalized_quaternion(8).unwrap();
        let subs = q8.all_subgroups().unwrap();
        assert_eq!(subs.len(), 6);
        assert!(subs.iter().all(|h| q8.is_normal(h)));
    }

    #[test]
    fn lattice_cap() {
        let big = catalog::cyclic(200).unwrap();
        assert!(matches!(big.all_subgroups(), Err(Error::OrderCap { .. })));
    }

    #[test]
    fn class_sizes() {
        let sizes = |g: &Group| {
            let mut s: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
            s.sort();
            s
        };
        assert_eq!(sizes(&catalog::symmetric(3).unwrap()), vec![1, 2, 3]);
        assert_eq!(sizes(&catalog::generalized_quaternion(8).unwrap()), vec![1, 1, 2, 2, 2]);
        assert_eq!(sizes(&catalog::cyclic(6).unwrap()), vec![1; 6]);
    }

    #[test]
    fn centralizers_and_normality() {
        let q8 = catalog::generalized_quaternion(8).unwrap();
        assert_eq!(q8.centralizer(&[0]).order(), 8);
        assert_eq!(q8.center().order(), 2);
        let q16 = catalog::generalized_quaternion(16).unwrap();
        // b is the first element outside <a>
        let b = 8;
        assert_eq!(q16.element_order(b), 4);
        let hb = q16.cyclic_subgroup(b);
        assert!(!q16.is_normal(&hb));
        let outside = (0..16).map(|g| q16.conjugate(&hb, g)).find(|c| c != &hb);
        assert!(outside.is_some());
    }

    #[test]
    fn sylow_and_friends() {
        let c12 = catalog::cyclic(12).unwrap();
        assert_eq!(c12.sylow(2).order(), 4);
        let s3 = catalog::symmetric(3).unwrap();
        assert_eq!(s3.o_p(3).order(), 3);
        assert!(s3.o_p(2).is_trivial());
        assert_eq!(s3.normal_p_complement(2).unwrap().order(), 3);
        let s4 = catalog::symmetric(4).unwrap();
        assert!(s4.normal_p_complement(3).is_none());
        assert_eq!(s4.sylow(2).order(), 8);
        assert_eq!(s4.o_p(2).order(), 4);
        assert_eq!(s4.commutator_subgroup().order(), 12);
        assert!(!s4.is_nilpotent());
        assert!(catalog::generalized_quaternion(16).unwrap().is_nilpotent());
    }

    #[test]
    fn exponents() {
        assert_eq!(catalog::elementary_abelian(2, 3).unwrap().exponent(), 2);
        assert_eq!(catalog::generalized_quaternion(16).unwrap().exponent(), 8);
        let q16 = catalog::generalized_quaternion(16).unwrap();
        assert_eq!(q16.closure(&[1]).order(), 8);
    }

    #[test]
    fn to_group_roundtrip() {
        let s4 = catalog::symmetric(4).unwrap();
        let a4 = s4.commutator_subgroup();
        let (g, emb) = a4.to_group(&s4);
        assert_eq!(g.order(), 12);
        for a in 0..12 {
            for b in 0..12 {
                assert_eq!(emb[g.mul(a, b)], s4.mul(emb[a], emb[b]));
            }
        }
    }
}
