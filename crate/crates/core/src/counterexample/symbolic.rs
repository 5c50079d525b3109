//! Formula-level model of the construction: elements of `G = (A ⋊ ⟨k⟩) × ⟨h⟩`
//! as triples `(a, i, j)` standing for `a·kⁱ·hʲ`, with `a` a row vector.

use std::collections::HashSet;

use super::matrix::MatZmod;
use super::Check;

/// Largest `p - 1` handled by the fixed-size vectors below.
const MAX_DIM: usize = 6;

pub type Vector = [u64; MAX_DIM];

/// `A = ℤ/p² ⊕ (pℤ/p²)^{p-2}` with `κ` acting on the right.
#[derive(Debug, Clone)]
pub struct AModule {
    p: u64,
    dim: usize,
    kappa: MatZmod,
    /// `κ^{-i}` on `A`, realised as `κ^{(p-1)i}` (valid once `κ^p` is trivial on `A`).
    inverse_powers: Vec<MatZmod>,
}

impl AModule {
    pub fn new(p: u64, kappa: MatZmod) -> AModule {
        let dim = kappa.size();
        assert!(dim <= MAX_DIM);
        let inv = kappa.pow(p - 1);
        let inverse_powers = (0..p).map(|i| inv.pow(i)).collect();
        AModule { p, dim, kappa, inverse_powers }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn kappa(&self) -> &MatZmod {
        &self.kappa
    }

    pub fn size(&self) -> usize {
        (self.p * self.p) as usize * (self.p as usize).pow(self.dim as u32 - 1)
    }

    fn modulus(&self) -> u64 {
        self.p * self.p
    }

    /// Mixed radix: first coordinate most significant, later ones divided by `p`.
    pub fn encode(&self, v: &Vector) -> usize {
        let mut idx = v[0] as usize;
        for &c in &v[1..self.dim] {
            idx = idx * self.p as usize + (c / self.p) as usize;
        }
        idx
    }

    pub fn decode(&self, mut idx: usize) -> Vector {
        let mut v = [0u64; MAX_DIM];
        for c in (1..self.dim).rev() {
            v[c] = (idx % self.p as usize) as u64 * self.p;
            idx /= self.p as usize;
        }
        v[0] = idx as u64;
        v
    }

    pub fn contains(&self, v: &Vector) -> bool {
        v[..self.dim].iter().all(|&c| c < self.modulus()) && v[1..self.dim].iter().all(|&c| c % self.p == 0)
    }

    pub fn add(&self, a: &Vector, b: &Vector) -> Vector {
        let mut out = [0u64; MAX_DIM];
        for c in 0..self.dim {
            out[c] = (a[c] + b[c]) % self.modulus();
        }
        out
    }

    pub fn scale(&self, a: &Vector, s: u64) -> Vector {
        let mut out = [0u64; MAX_DIM];
        for c in 0..self.dim {
            out[c] = a[c] * s % self.modulus();
        }
        out
    }

    pub fn apply(&self, m: &MatZmod, a: &Vector) -> Vector {
        let row = m.apply_row(&a[..self.dim]);
        let mut out = [0u64; MAX_DIM];
        out[..self.dim].copy_from_slice(&row);
        out
    }

    /// `a·κ^{-i}`.
    pub fn act_inverse(&self, a: &Vector, i: u64) -> Vector {
        self.apply(&self.inverse_powers[(i % self.p) as usize], a)
    }

    pub fn vectors(&self) -> impl Iterator<Item = Vector> + '_ {
        (0..self.size()).map(|i| self.decode(i))
    }

    /// Generator of the first factor.
    pub fn x(&self) -> Vector {
        let mut v = [0u64; MAX_DIM];
        v[0] = 1;
        v
    }

    /// `x^p`.
    pub fn z(&self) -> Vector {
        self.scale(&self.x(), self.p)
    }

    /// `x` followed by `p·eᵢ` for the remaining coordinates.
    pub fn generators(&self) -> Vec<Vector> {
        let mut out = vec![self.x()];
        for c in 1..self.dim {
            let mut v = [0u64; MAX_DIM];
            v[c] = self.p;
            out.push(v);
        }
        out
    }

    /// Checks the properties of `κ` the construction relies on.
    pub fn module_checks(&self) -> Vec<Check> {
        let kappa = &self.kappa;
        let p = self.p;
        let mut checks = Vec::new();
        let invariant = self.vectors().all(|a| self.contains(&self.apply(kappa, &a)));
        checks.push(Check::new("kappa maps A into A", invariant, ""));
        let kp = kappa.pow(p);
        let trivial_p = self.vectors().all(|a| self.apply(&kp, &a) == a);
        let nontrivial = self.vectors().any(|a| self.apply(kappa, &a) != a);
        checks.push(Check::new("kappa acts on A with order p", trivial_p && nontrivial, ""));
        let mut sum = MatZmod::identity(kappa.size(), kappa.modulus());
        let mut power = MatZmod::identity(kappa.size(), kappa.modulus());
        for _ in 1..p {
            power = power.mul(kappa);
            sum = sum.add(&power);
        }
        let annihilates = self.vectors().all(|a| self.apply(&sum, &a).iter().all(|&c| c == 0));
        checks.push(Check::new("a(1 + kappa + ... + kappa^(p-1)) = 0 on A", annihilates, format!("sum = {sum}")));
        checks
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Elem {
    pub a: Vector,
    pub i: u64,
    pub j: u64,
}

/// Formula-based multiplication in `G` and the two automorphisms.
#[derive(Debug, Clone)]
pub struct SymbolicG {
    pub module: AModule,
}

impl SymbolicG {
    pub fn new(module: AModule) -> SymbolicG {
        SymbolicG { module }
    }

    fn p(&self) -> u64 {
        self.module.p
    }

    pub fn identity(&self) -> Elem {
        Elem { a: [0; MAX_DIM], i: 0, j: 0 }
    }

    pub fn from_a(&self, a: Vector) -> Elem {
        Elem { a, i: 0, j: 0 }
    }

    pub fn k(&self) -> Elem {
        Elem { a: [0; MAX_DIM], i: 1, j: 0 }
    }

    pub fn h(&self) -> Elem {
        Elem { a: [0; MAX_DIM], i: 0, j: 1 }
    }

    /// `(a₁kⁱ¹)(a₂kⁱ²) = (a₁ + a₂κ^{-i₁}) k^{i₁+i₂}`, so `k⁻¹ak = aκ`.
    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let p = self.p();
        Elem { a: self.module.add(&x.a, &self.module.act_inverse(&y.a, x.i)), i: (x.i + y.i) % p, j: (x.j + y.j) % p }
    }

    pub fn pow(&self, x: &Elem, e: u64) -> Elem {
        (0..e).fold(self.identity(), |acc, _| self.mul(&acc, x))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        let p = self.p();
        self.module.vectors().flat_map(move |a| (0..p).flat_map(move |i| (0..p).map(move |j| Elem { a, i, j })))
    }

    pub fn order(&self) -> usize {
        self.module.size() * (self.p() * self.p()) as usize
    }

    pub fn generators(&self) -> Vec<Elem> {
        let mut gens: Vec<Elem> = self.module.generators().into_iter().map(|a| self.from_a(a)).collect();
        gens.push(self.k());
        gens.push(self.h());
        gens
    }

    /// Fixes `A`, `k ↦ xk`, `h ↦ zh`.
    pub fn alpha(&self, g: &Elem) -> Elem {
        let xk = self.mul(&self.from_a(self.module.x()), &self.k());
        let zh = self.mul(&self.from_a(self.module.z()), &self.h());
        let left = self.mul(&self.from_a(g.a), &self.pow(&xk, g.i));
        self.mul(&left, &self.pow(&zh, g.j))
    }

    /// Fixes `K = A⟨k⟩`, `h ↦ zh`.
    pub fn beta(&self, g: &Elem) -> Elem {
        let zh = self.mul(&self.from_a(self.module.z()), &self.h());
        let left = Elem { a: g.a, i: g.i, j: 0 };
        self.mul(&left, &self.pow(&zh, g.j))
    }

    pub fn alpha_pow(&self, g: &Elem, n: u64) -> Elem {
        (0..n).fold(*g, |acc, _| self.alpha(&acc))
    }

    /// Least `n ≥ 1` with `f^n` fixing every generator.
    fn map_order(&self, f: impl Fn(&Elem) -> Elem, cap: u64) -> Option<u64> {
        let gens = self.generators();
        let mut cur = gens.clone();
        for n in 1..=cap {
            cur = cur.iter().map(&f).collect();
            if cur == gens {
                return Some(n);
            }
        }
        None
    }

    /// `f(e) = e`, `f(s·g) = f(s)·f(g)` for every generator `s` and every
    /// `g`, and `f` injective. Together these make `f` an automorphism.
    fn is_automorphism(&self, f: impl Fn(&Elem) -> Elem) -> bool {
        if f(&self.identity()) != self.identity() {
            return false;
        }
        let gens = self.generators();
        let fgens: Vec<Elem> = gens.iter().map(&f).collect();
        let mut images = HashSet::with_capacity(self.order());
        for g in self.elements() {
            let fg = f(&g);
            if gens.iter().zip(&fgens).any(|(s, fs)| f(&self.mul(s, &g)) != self.mul(fs, &fg)) {
                return false;
            }
            images.insert(fg);
        }
        images.len() == self.order()
    }

    /// Every claim that can be checked from the formulas alone.
    pub fn checks(&self) -> Vec<Check> {
        let p = self.p();
        let mut out = self.module.module_checks();
        let x = self.from_a(self.module.x());
        let z = self.from_a(self.module.z());
        let xk = self.mul(&x, &self.k());
        out.push(Check::new("xk has order p", self.pow(&xk, p) == self.identity() && xk != self.identity(), ""));
        let z_central = self.generators().iter().all(|s| self.mul(s, &z) == self.mul(&z, s));
        out.push(Check::new(
            "z = x^p is central of order p",
            z_central && z != self.identity() && self.pow(&z, p) == self.identity(),
            "",
        ));
        let orient = self.module.vectors().all(|a| {
            let kinv = self.pow(&self.k(), p - 1);
            let lhs = self.mul(&self.mul(&kinv, &self.from_a(a)), &self.k());
            lhs == self.from_a(self.module.apply(self.module.kappa(), &a))
        });
        out.push(Check::new("k^-1 a k = a kappa", orient, ""));

        out.push(Check::new("alpha is an automorphism", self.is_automorphism(|g| self.alpha(g)), ""));
        out.push(Check::new("beta is an automorphism", self.is_automorphism(|g| self.beta(g)), ""));
        let oa = self.map_order(|g| self.alpha(g), p * p * p);
        let ob = self.map_order(|g| self.beta(g), p * p * p);
        out.push(Check::new("alpha has order p^2", oa == Some(p * p), format!("order {oa:?}")));
        out.push(Check::new("beta has order p", ob == Some(p), format!("order {ob:?}")));
        let commute = self.generators().iter().all(|s| self.alpha(&self.beta(s)) == self.beta(&self.alpha(s)));
        out.push(Check::new("alpha and beta commute", commute, ""));

        let mut fixed_ok = true;
        let mut locally = true;
        let mut strat_k = true;
        let mut strat_h = true;
        let mut strat_rest = true;
        for g in self.elements() {
            let b = self.beta(&g);
            // the alpha-orbit of g, indexed by exponent
            let mut orbit = vec![g];
            let mut y = self.alpha(&g);
            while y != g {
                orbit.push(y);
                y = self.alpha(&y);
            }
            fixed_ok &= (orbit.get(p as usize % orbit.len()) == Some(&g)) == (g.i == 0);
            locally &= orbit.contains(&b);
            if g.j == 0 {
                strat_k &= b == g;
            } else if g.i == 0 {
                strat_h &= b == orbit[1 % orbit.len()];
            } else {
                let s = g.j * mod_inverse(g.i, p) % p;
                let n = (p * s) as usize % orbit.len();
                strat_rest &= b == orbit[n];
            }
        }
        out.push(Check::new("C_G(alpha^p) = A x <h>", fixed_ok, ""));
        out.push(Check::new("locally a power: every g has g beta = g alpha^n", locally, ""));
        out.push(Check::new("g in K: g beta = g", strat_k, ""));
        out.push(Check::new("g in H outside K: g beta = g alpha", strat_h, ""));
        out.push(Check::new("otherwise g beta = g alpha^(ps) with is = j mod p", strat_rest, ""));
        let gens = self.generators();
        let power = (0..p * p).find(|&n| gens.iter().all(|s| self.alpha_pow(s, n) == self.beta(s)));
        out.push(Check::new("beta is not a power of alpha", power.is_none(), format!("{power:?}")));
        out
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    (1..p).find(|&b| a * b % p == 1).expect("p is prime")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexample::build_kappa;

    fn module(p: u64) -> AModule {
        AModule::new(p, build_kappa(p as usize).unwrap())
    }

    #[test]
    fn encoding_round_trips() {
        let m = module(5);
        assert_eq!(m.size(), 3125);
        for i in [0, 1, 7, 3124] {
            assert_eq!(m.encode(&m.decode(i)), i);
        }
        assert!(m.contains(&m.decode(3124)));
    }

    #[test]
    fn kappa_orbit_at_three() {
        let m = module(3);
        let mut v = m.x();
        let mut orbit = vec![];
        for _ in 0..3 {
            v = m.apply(m.kappa(), &v);
            orbit.push([v[0], v[1]]);
        }
        // (1,0) -> (1,3) -> (-2,6) -> (1,0)
        assert_eq!(orbit, vec![[1, 3], [7, 6], [1, 0]]);
    }

    #[test]
    fn symbolic_claims_at_three() {
        let g = SymbolicG::new(module(3));
        for c in g.checks() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
