//! Finite groups stored as Cayley tables.
//!
//! Every [`Group`] keeps its identity at index 0. Elements are plain
//! `usize` indices; the table is stored row-major as `u32` so that groups
//! of a few thousand elements stay cache friendly.

use std::fmt;

use crate::error::{Axis, Error, Result};

/// Default upper bound on the order of any constructed group.
pub const DEFAULT_MAX_ORDER: usize = 65_536;
/// Default upper bound for enumerating the full subgroup lattice.
pub const DEFAULT_SUBGROUP_CAP: usize = 128;
/// Loaded tables up to this order get the full cubic associativity check.
pub const FULL_ASSOCIATIVITY_MAX: usize = 512;

/// Size limits shared by the constructors and the lattice enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub subgroup_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_order: DEFAULT_MAX_ORDER, subgroup_cap: DEFAULT_SUBGROUP_CAP }
    }
}

impl Limits {
    pub(crate) fn check_order(&self, order: u128) -> Result<usize> {
        if order > self.max_order as u128 {
            Err(Error::OrderCap { order, cap: self.max_order })
        } else {
            Ok(order as usize)
        }
    }
}

/// A finite group given by its multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    n: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    names: Option<Vec<String>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group").field("order", &self.n).finish_non_exhaustive()
    }
}

impl Group {
    /// Validates a table given as rows and relabels the identity to index 0.
    pub fn from_rows(rows: &[Vec<usize>], names: Option<Vec<String>>) -> Result<Group> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::BadShape(n));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(Error::EntryOutOfRange { row, col, value });
                }
                flat.push(value as u32);
            }
        }
        Self::validate_flat(n, flat, names)
    }

    /// Validates a row-major table of order `n`.
    pub fn validate_flat(n: usize, table: Vec<u32>, names: Option<Vec<String>>) -> Result<Group> {
        if n == 0 || table.len() != n * n {
            return Err(Error::BadShape(n));
        }
        if let Some(names) = &names {
            if names.len() != n {
                return Err(Error::BadParams(format!("{} names for {} elements", names.len(), n)));
            }
        }
        for (i, &v) in table.iter().enumerate() {
            if v as usize >= n {
                return Err(Error::EntryOutOfRange { row: i / n, col: i % n, value: v as usize });
            }
        }
        check_latin(n, &table)?;
        let e = find_identity(n, &table).ok_or(Error::NoIdentity)?;
        let (table, names) = if e == 0 { (table, names) } else { swap_labels(n, &table, names, e) };

        let mut inverses = vec![0u32; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            let b = row.iter().position(|&v| v == 0).expect("latin row contains identity");
            if table[b * n + a] != 0 {
                return Err(Error::NoInverse(a));
            }
            inverses[a] = b as u32;
        }
        let group = Group { n, table, inverses, names };
        if n <= FULL_ASSOCIATIVITY_MAX {
            group.check_associative_full()?;
        } else {
            group.check_associative_light()?;
        }
        Ok(group)
    }

    /// Builds a group from a table that is known to be a group with identity 0.
    pub(crate) fn from_trusted(n: usize, table: Vec<u32>, names: Option<Vec<String>>) -> Group {
        debug_assert_eq!(table.len(), n * n);
        debug_assert!((0..n).all(|a| table[a] as usize == a && table[a * n] as usize == a));
        let mut inverses = vec![0u32; n];
        for a in 0..n {
            let b = table[a * n..(a + 1) * n].iter().position(|&v| v == 0).expect("identity in row");
            inverses[a] = b as u32;
        }
        Group { n, table, inverses, names }
    }

    fn check_associative_full(&self) -> Result<()> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// Light's test: associativity on `x * (g * y)` for generators `g` of the
    /// magma implies associativity everywhere.
    fn check_associative_light(&self) -> Result<()> {
        let n = self.n;
        let mut gens: Vec<usize> = Vec::new();
        loop {
            let reached = self.right_closure(&gens);
            match reached.iter().position(|r| !r) {
                None => break,
                Some(next) => gens.push(next),
            }
        }
        for &g in &gens {
            for a in 0..n {
                let ag = self.mul(a, g);
                for c in 0..n {
                    if self.mul(ag, c) != self.mul(a, self.mul(g, c)) {
                        return Err(Error::NotAssociative { a, b: g, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// Elements reachable from the identity by right multiplication with `gens`.
    fn right_closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut queue = vec![0usize];
        seen[0] = true;
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        seen
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `x^g = g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(a) } else { a };
        let mut e = e.unsigned_abs();
        let mut acc = 0;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.table[a * self.n..(a + 1) * self.n]
    }

    pub(crate) fn raw_table(&self) -> &[u32] {
        &self.table
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, a: usize) -> String {
        match &self.names {
            Some(names) => names[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Group> {
        if names.len() != self.n {
            return Err(Error::BadParams(format!("{} names for {} elements", names.len(), self.n)));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.n).map(|a| self.element_order(a)).collect()
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.element_orders().into_iter().fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Rows as nested vectors, in the layout accepted by [`Group::from_rows`].
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| self.row(a).iter().map(|&v| v as usize).collect()).collect()
    }

    /// Canonical generating sequence: repeatedly take the lowest index not in
    /// the subgroup generated so far.
    pub fn generators(&self) -> Vec<usize> {
        self.generators_of(&(0..self.n).collect::<Vec<_>>())
    }

    /// Canonical generating sequence of the subgroup with the given members.
    pub fn generators_of(&self, members: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut inside = vec![false; self.n];
        inside[0] = true;
        let mut elems = vec![0usize];
        for &m in members {
            if inside[m] {
                continue;
            }
            gens.push(m);
            // re-close: every known element times every generator
            let mut i = 0;
            while i < elems.len() {
                let x = elems[i];
                for &g in &gens {
                    let y = self.mul(x, g);
                    if !inside[y] {
                        inside[y] = true;
                        elems.push(y);
                    }
                }
                i += 1;
            }
        }
        gens
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut out = 1;
    while n % p == 0 {
        n /= p;
        out *= p;
    }
    out
}

/// `Some(p)` when `n` is a power of the prime `p` (and `n > 1`).
pub fn prime_power_base(n: usize) -> Option<usize> {
    let ps = prime_divisors(n);
    if ps.len() == 1 {
        Some(ps[0])
    } else {
        None
    }
}

fn check_latin(n: usize, table: &[u32]) -> Result<()> {
    let mut seen = vec![usize::MAX; n];
    for r in 0..n {
        for c in 0..n {
            let v = table[r * n + c] as usize;
            if seen[v] == r {
                return Err(Error::NotLatinSquare { axis: Axis::Row, index: r, value: v });
            }
            seen[v] = r;
        }
    }
    seen.fill(usize::MAX);
    for c in 0..n {
        for r in 0..n {
            let v = table[r * n + c] as usize;
            if seen[v] == c {
                return Err(Error::NotLatinSquare { axis: Axis::Column, index: c, value: v });
            }
            seen[v] = c;
        }
    }
    Ok(())
}

fn find_identity(n: usize, table: &[u32]) -> Option<usize> {
    (0..n).find(|&e| (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x))
}

/// Swaps the labels `0` and `e`.
fn swap_labels(n: usize, table: &[u32], names: Option<Vec<String>>, e: usize) -> (Vec<u32>, Option<Vec<String>>) {
    let relabel = |x: usize| -> usize {
        if x == 0 {
            e
        } else if x == e {
            0
        } else {
            x
        }
    };
    let mut out = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            out[relabel(a) * n + relabel(b)] = relabel(table[a * n + b] as usize) as u32;
        }
    }
    let names = names.map(|mut v| {
        v.swap(0, e);
        v
    });
    (out, names)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = Group::from_rows(&[vec![0]], None).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn c2_table() {
        let g = Group::from_rows(&[vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(g.element_orders(), vec![1, 2]);
    }

    #[test]
    fn identity_free_latin_square_rejected() {
        // x*y = -(x+y) mod 3 is a Latin square without an identity.
        let rows: Vec<Vec<usize>> = (0..3).map(|x| (0..3).map(|y| (6 - x - y) % 3).collect()).collect();
        // oracle: no row/column pair is the identity permutation
        let has_identity = (0..3).any(|e| (0..3).all(|x| rows[e][x] == x && rows[x][e] == x));
        assert!(!has_identity);
        assert_eq!(Group::from_rows(&rows, None), Err(Error::NoIdentity));
    }

    #[test]
    fn identity_is_relabelled_to_zero() {
        // C3 written with identity 2: x*y = x+y+1 mod 3
        let rows: Vec<Vec<usize>> = (0..3).map(|x| (0..3).map(|y| (x + y + 1) % 3).collect()).collect();
        let names = vec!["a".to_string(), "b".into(), "e".into()];
        let g = Group::from_rows(&rows, Some(names)).unwrap();
        assert_eq!(g.name(0), "e");
        assert_eq!(g.row(0), &[0, 1, 2]);
    }

    #[test]
    fn non_latin_rejected() {
        let rows = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            Group::from_rows(&rows, None),
            Err(Error::NotLatinSquare { axis: Axis::Row, index: 1, value: 1 })
        ));
    }

    #[test]
    fn non_associative_loop_rejected() {
        let err = Group::from_rows(&loop5(), None).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }), "{err:?}");
    }

    #[test]
    fn out_of_range_and_shape() {
        assert!(matches!(Group::from_rows(&[vec![0, 2], vec![1, 0]], None), Err(Error::EntryOutOfRange { .. })));
        assert_eq!(Group::from_rows(&[vec![0, 1], vec![1, 0], vec![0, 1]], None), Err(Error::BadShape(3)));
    }

    fn loop5() -> Vec<Vec<usize>> {
        // smallest non-associative loop; every element is self-inverse
        vec![vec![0, 1, 2, 3, 4], vec![1, 0, 3, 4, 2], vec![2, 4, 0, 1, 3], vec![3, 2, 4, 0, 1], vec![4, 3, 1, 2, 0]]
    }

    #[test]
    fn light_test_on_large_tables() {
        let n = 600;
        let cyclic: Vec<u32> = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
        let g = Group::validate_flat(n, cyclic, None).unwrap();
        assert_eq!(g.exponent(), 600);

        // loop5 x C120 is a Latin square with identity and inverses, not associative
        let l = loop5();
        let m = 120;
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let (a1, a2) = (a / m, a % m);
                let (b1, b2) = (b / m, b % m);
                table[a * n + b] = (l[a1][b1] * m + (a2 + b2) % m) as u32;
            }
        }
        assert!(matches!(Group::validate_flat(n, table, None), Err(Error::NotAssociative { .. })));
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(prime_divisors(360), vec![2, 3, 5]);
        assert_eq!(p_part(96, 2), 32);
        assert_eq!(prime_power_base(81), Some(3));
        assert_eq!(prime_power_base(12), None);
        assert!(is_prime(7) && !is_prime(9));
    }
}
