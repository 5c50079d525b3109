//! Square matrices over `ℤ/m`, acting on row vectors from the right.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatZmod {
    size: usize,
    modulus: u64,
    entries: Vec<u64>,
}

impl MatZmod {
    /// Entries are reduced modulo `modulus`; negative values wrap.
    pub fn from_rows(modulus: u64, rows: &[Vec<i64>]) -> MatZmod {
        let size = rows.len();
        assert!(rows.iter().all(|r| r.len() == size), "matrix must be square");
        let m = modulus as i64;
        let entries = rows.iter().flatten().map(|&v| v.rem_euclid(m) as u64).collect();
        MatZmod { size, modulus, entries }
    }

    pub fn identity(size: usize, modulus: u64) -> MatZmod {
        let mut entries = vec![0; size * size];
        for i in 0..size {
            entries[i * size + i] = 1 % modulus;
        }
        MatZmod { size, modulus, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.size + c]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &MatZmod) -> MatZmod {
        assert_eq!((self.size, self.modulus), (other.size, other.modulus));
        let n = self.size;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum::<u64>() % self.modulus;
            }
        }
        MatZmod { size: n, modulus: self.modulus, entries }
    }

    pub fn add(&self, other: &MatZmod) -> MatZmod {
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| (a + b) % self.modulus).collect();
        MatZmod { size: self.size, modulus: self.modulus, entries }
    }

    pub fn pow(&self, mut e: u64) -> MatZmod {
        let mut acc = MatZmod::identity(self.size, self.modulus);
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == MatZmod::identity(self.size, self.modulus)
    }

    /// `v · M` for a row vector `v`.
    pub fn apply_row(&self, v: &[u64]) -> Vec<u64> {
        (0..self.size)
            .map(|j| v.iter().enumerate().map(|(k, &a)| a * self.get(k, j)).sum::<u64>() % self.modulus)
            .collect()
    }

    /// Determinant by cofactor expansion (sizes here stay below 7).
    pub fn det(&self) -> u64 {
        let m = self.modulus as i128;
        fn rec(rows: &[Vec<i128>], m: i128) -> i128 {
            let n = rows.len();
            if n == 1 {
                return rows[0][0].rem_euclid(m);
            }
            let mut total = 0i128;
            for c in 0..n {
                if rows[0][c] == 0 {
                    continue;
                }
                let minor: Vec<Vec<i128>> = rows[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect())
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                total = (total + sign * rows[0][c] * rec(&minor, m)).rem_euclid(m);
            }
            total
        }
        let rows: Vec<Vec<i128>> =
            self.rows().into_iter().map(|r| r.into_iter().map(|v| v as i128).collect()).collect();
        rec(&rows, m) as u64
    }

    /// Multiplicative order, if at most `cap`.
    pub fn order(&self, cap: u64) -> Option<u64> {
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }
}

impl fmt::Display for MatZmod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}] mod {}", rows.join(","), self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let m = MatZmod::from_rows(9, &[vec![1, 3], vec![-1, 1]]);
        assert_eq!(m.get(1, 0), 8);
        assert_eq!(m.det(), 4);
        assert_eq!(m.apply_row(&[1, 0]), vec![1, 3]);
        assert!(m.pow(3).is_identity());
        assert_eq!(m.order(100), Some(3));
        assert_eq!(m.add(&MatZmod::identity(2, 9)).rows(), vec![vec![2, 3], vec![8, 2]]);
    }
}
