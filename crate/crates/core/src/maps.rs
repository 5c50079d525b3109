//! Maps between groups given as image lists.

use crate::group::{lcm, Group};

/// A function between groups, `images[x]` being the image of element `x`.
///
/// The map does not own its source or target; homomorphism checks take the
/// groups explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupMap {
    images: Vec<u32>,
}

impl GroupMap {
    pub fn new(images: Vec<usize>) -> Self {
        GroupMap { images: images.into_iter().map(|v| v as u32).collect() }
    }

    pub(crate) fn from_u32(images: Vec<u32>) -> Self {
        GroupMap { images }
    }

    pub fn identity(n: usize) -> Self {
        GroupMap { images: (0..n as u32).collect() }
    }

    /// Builds a map by evaluating `f` on every source element.
    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Self {
        GroupMap { images: (0..n).map(|x| f(x) as u32).collect() }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&v| v as usize)
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.images
    }

    pub fn is_homomorphism(&self, src: &Group, tgt: &Group) -> bool {
        let n = src.order();
        if self.images.len() != n || self.images.iter().any(|&v| v as usize >= tgt.order()) {
            return false;
        }
        (0..n).all(|a| (0..n).all(|b| self.apply(src.mul(a, b)) == tgt.mul(self.apply(a), self.apply(b))))
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        for &v in &self.images {
            let v = v as usize;
            if v >= seen.len() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn is_automorphism(&self, g: &Group) -> bool {
        self.images.len() == g.order() && self.is_bijective() && self.is_homomorphism(g, g)
    }

    /// `x ↦ other(self(x))`: first `self`, then `other`.
    pub fn then(&self, other: &GroupMap) -> GroupMap {
        GroupMap { images: self.images.iter().map(|&v| other.images[v as usize]).collect() }
    }

    pub fn inverse(&self) -> GroupMap {
        let mut out = vec![0u32; self.images.len()];
        for (x, &v) in self.images.iter().enumerate() {
            out[v as usize] = x as u32;
        }
        GroupMap { images: out }
    }

    pub fn pow(&self, e: u64) -> GroupMap {
        let mut acc = GroupMap::identity(self.images.len());
        let mut sq = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &v)| x == v as usize)
    }

    /// Order as a permutation: lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut ord = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    pub fn commutes_with(&self, other: &GroupMap) -> bool {
        self.then(other) == other.then(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn powers_and_order() {
        let c5 = catalog::cyclic(5).unwrap();
        let double = GroupMap::from_fn(5, |x| (2 * x) % 5);
        assert!(double.is_automorphism(&c5));
        assert_eq!(double.order(), 4);
        assert!(double.pow(4).is_identity());
        assert_eq!(double.pow(3), double.inverse());
        assert!(double.commutes_with(&double.pow(2)));
    }

    #[test]
    fn non_homomorphism_detected() {
        let c4 = catalog::cyclic(4).unwrap();
        let swap = GroupMap::new(vec![0, 2, 1, 3]);
        assert!(swap.is_bijective());
        assert!(!swap.is_automorphism(&c4));
    }
}
