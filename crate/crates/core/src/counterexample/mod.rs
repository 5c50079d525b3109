//! A `p`-group of order `p^{p+2}` with commuting automorphisms `α`, `β` where
//! `β` agrees pointwise with powers of `α` without being one, and the
//! resulting non-inner class-preserving automorphism `σ` of `G⋊⟨α⟩`.
//!
//! Layout of the tables:
//! - `A = ℤ/p² ⊕ (pℤ/p²)^{p-2}` in the mixed radix of [`AModule::encode`];
//! - `K = A ⋊ ⟨k⟩` with `k⁻¹ak = aκ`, element `a·kⁱ` at `enc(a)·p + i`;
//! - `G = K × ⟨h⟩`, element `(c, hʲ)` at `c·p + j`;
//! - `GA = G ⋊ ⟨t⟩`, `t` of order `p²` with `t⁻¹gt = gα`, element `g·tᵐ` at
//!   `g·p² + m`.

mod matrix;
mod symbolic;

use std::fmt;

pub use matrix::MatZmod;
pub use symbolic::{AModule, Elem, SymbolicG};

use crate::autos::{locally_power_unchecked, power_of_unchecked, InnerIndex};
use crate::catalog;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::maps::GroupMap;
use crate::products::{direct_product, semidirect_product, Action};

/// Primes accepted by [`build_kappa`].
pub const KAPPA_PRIMES: [usize; 3] = [3, 5, 7];

/// One verified claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

/// The `(p-1)×(p-1)` matrix over `ℤ/p²`: ones on the diagonal and
/// superdiagonal except `(0,1) = p`, and `-1` in the bottom-left corner.
pub fn build_kappa(p: usize) -> Result<MatZmod> {
    if !KAPPA_PRIMES.contains(&p) {
        return Err(Error::BadPrime(p as u64));
    }
    let d = p - 1;
    let mut rows = vec![vec![0i64; d]; d];
    for (r, row) in rows.iter_mut().enumerate() {
        row[r] = 1;
        if r + 1 < d {
            row[r + 1] = 1;
        }
    }
    rows[0][1] = p as i64;
    rows[d - 1][0] = -1;
    Ok(MatZmod::from_rows((p * p) as u64, &rows))
}

/// `A` as a table together with `κ` as an automorphism of it. Fails with
/// [`Error::ActionPropertyFailed`] if `κ` does not act as required.
pub fn build_a(p: usize) -> Result<(Group, GroupMap, AModule)> {
    let kappa = build_kappa(p)?;
    let module = AModule::new(p as u64, kappa);
    if let Some(c) = module.module_checks().into_iter().find(|c| !c.passed) {
        return Err(Error::ActionPropertyFailed(c.name));
    }
    let n = crate::group::Limits::default().check_order(module.size() as u128)?;
    let mut table = Vec::with_capacity(n * n);
    for u in 0..n {
        let a = module.decode(u);
        for v in 0..n {
            table.push(module.encode(&module.add(&a, &module.decode(v))) as u32);
        }
    }
    let names = (0..n)
        .map(|u| {
            let v = module.decode(u);
            format!("({})", v[..p - 1].iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
        })
        .collect();
    let a = Group::validate_flat(n, table, Some(names))?;
    let kappa_map = GroupMap::from_fn(n, |u| module.encode(&module.apply(module.kappa(), &module.decode(u))));
    if !kappa_map.is_automorphism(&a) || kappa_map.order() != p {
        return Err(Error::ActionPropertyFailed("kappa is not an automorphism of order p on A".into()));
    }
    Ok((a, kappa_map, module))
}

/// Groups and maps of the construction, with tables for `p = 3`.
#[derive(Debug, Clone)]
pub struct Bundle {
    pub p: usize,
    pub kappa: MatZmod,
    pub module: AModule,
    pub a: Group,
    pub k_group: Group,
    pub g: Group,
    pub alpha: GroupMap,
    pub beta: GroupMap,
    /// Indices in `g`.
    pub x: usize,
    pub z: usize,
    pub k: usize,
    pub h: usize,
    pub ga: Option<Group>,
    pub sigma: Option<GroupMap>,
    /// Index of the generator acting as `α` in `ga`.
    pub t: Option<usize>,
}

impl Bundle {
    /// Index in `g` of `a·kⁱ·hʲ`.
    pub fn index_of(&self, a: usize, i: usize, j: usize) -> usize {
        (a * self.p + i) * self.p + j
    }

    fn index_of_elem(&self, e: &Elem) -> usize {
        self.index_of(self.module.encode(&e.a), e.i as usize, e.j as usize)
    }
}

fn claim(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ClaimFailed(what.into()))
    }
}

/// Builds `A`, `K`, `G`, `α`, `β` as tables and checks the orders of the
/// automorphisms, that they commute, and `C_G(α^p) = A × ⟨h⟩`.
pub fn build_bundle(p: usize) -> Result<Bundle> {
    if p != 3 {
        return Err(Error::BadPrime(p as u64));
    }
    let (a, kappa_map, module) = build_a(p)?;
    let kappa = module.kappa().clone();
    let cp = catalog::cyclic(p)?;
    // k acts by kappa^-1 so that k^-1 a k = a kappa
    let act_k = Action::from_generators(&cp, &a, &[(1, kappa_map.pow(p as u64 - 1))])?;
    let k_group = semidirect_product(&a, &cp, &act_k)?;
    let g = direct_product(&k_group, &cp)?;
    let x_a = module.encode(&module.x());
    let z_a = module.encode(&module.z());
    let at = |av: usize, i: usize, j: usize| (av * p + i) * p + j;
    let (x, z, k, h) = (at(x_a, 0, 0), at(z_a, 0, 0), at(0, 1, 0), at(0, 0, 1));

    claim(g.order() == p.pow(p as u32 + 2), "G has order p^(p+2)")?;
    let kinv = g.inv(k);
    claim(
        (0..a.order()).all(|u| g.mul(g.mul(kinv, at(u, 0, 0)), k) == at(kappa_map.apply(u), 0, 0)),
        "k^-1 a k = a kappa",
    )?;
    let xk = g.mul(x, k);
    let zh = g.mul(z, h);
    claim(g.element_order(xk) == p, "xk has order p")?;

    let alpha = GroupMap::from_fn(g.order(), |e| {
        let (c, j) = (e / p, e % p);
        let (u, i) = (c / p, c % p);
        g.mul(g.mul(at(u, 0, 0), g.pow(xk, i as i64)), g.pow(zh, j as i64))
    });
    let beta = GroupMap::from_fn(g.order(), |e| {
        let (c, j) = (e / p, e % p);
        g.mul(c * p, g.pow(zh, j as i64))
    });
    claim(alpha.is_automorphism(&g), "alpha is an automorphism")?;
    claim(beta.is_automorphism(&g), "beta is an automorphism")?;
    claim(alpha.order() == p * p, "alpha has order p^2")?;
    claim(beta.order() == p, "beta has order p")?;
    claim(alpha.commutes_with(&beta), "alpha and beta commute")?;
    let alpha_p = alpha.pow(p as u64);
    claim((0..g.order()).all(|e| (alpha_p.apply(e) == e) == ((e / p) % p == 0)), "C_G(alpha^p) = A x <h>")?;

    Ok(Bundle { p, kappa, module, a, k_group, g, alpha, beta, x, z, k, h, ga: None, sigma: None, t: None })
}

/// Adds `GA = G ⋊ ⟨t⟩` (`t` acting as `α`) and `σ`, which fixes `t` and
/// agrees with `β` on `G`.
pub fn extend_to_ga(bundle: &mut Bundle) -> Result<()> {
    let p = bundle.p;
    let q = p * p;
    let g = &bundle.g;
    let cq = catalog::cyclic(q)?;
    // t^-1 g t = act(t^-1)(g) = g alpha
    let act = Action::from_generators(&cq, g, &[(1, bundle.alpha.pow(q as u64 - 1))])?;
    let ga = semidirect_product(g, &cq, &act)?;
    let sigma = GroupMap::from_fn(ga.order(), |e| bundle.beta.apply(e / q) * q + e % q);
    if !sigma.is_automorphism(&ga) {
        return Err(Error::NotAutomorphism("sigma on G<alpha>".into()));
    }
    bundle.t = Some(1);
    bundle.ga = Some(ga);
    bundle.sigma = Some(sigma);
    Ok(())
}

/// Outcome of [`verify_example`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleReport {
    pub p: usize,
    /// Orders of `A`, `K`, `G`, `GA`.
    pub orders: Vec<(&'static str, u128)>,
    /// Order of `κ` as a matrix; informational only.
    pub kappa_matrix_order: Option<u64>,
    pub kappa: String,
    pub checks: Vec<Check>,
    /// `(class-preserving, inner)` for `σ`, when tables are available.
    pub sigma: Option<(bool, bool)>,
}

impl ExampleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for ExampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p: {}", self.p)?;
        writeln!(f, "kappa: {}", self.kappa)?;
        match self.kappa_matrix_order {
            Some(o) => writeln!(f, "kappa matrix order: {o}")?,
            None => writeln!(f, "kappa matrix order: not found")?,
        }
        for (name, order) in &self.orders {
            writeln!(f, "|{name}| = {order}")?;
        }
        for c in &self.checks {
            let status = if c.passed { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{status} {}", c.name)?;
            } else {
                writeln!(f, "{status} {} ({})", c.name, c.detail)?;
            }
        }
        match self.sigma {
            Some((cp, inner)) => write!(
                f,
                "sigma: {}, {}",
                if cp { "class-preserving" } else { "not class-preserving" },
                if inner { "inner" } else { "non-inner" }
            ),
            None => write!(f, "sigma: not built at this prime (formula-level claims only)"),
        }
    }
}

/// Runs every claim of the construction. `p = 3` builds all tables;
/// `p = 5` checks the formula-level claims.
pub fn verify_example(p: usize) -> Result<ExampleReport> {
    if p != 3 && p != 5 {
        return Err(Error::BadPrime(p as u64));
    }
    let kappa = build_kappa(p)?;
    let p64 = p as u64;
    let mut checks = vec![Check::new("det(kappa) is a unit", kappa.det() % p64 != 0, format!("det = {}", kappa.det()))];
    let sym = SymbolicG::new(AModule::new(p64, kappa.clone()));
    checks.extend(sym.checks());
    let pu = p as u128;
    let mut report = ExampleReport {
        p,
        orders: vec![
            ("A", pu.pow(p as u32)),
            ("K", pu.pow(p as u32 + 1)),
            ("G", pu.pow(p as u32 + 2)),
            ("GA", pu.pow(p as u32 + 4)),
        ],
        kappa_matrix_order: kappa.order(p64.pow(4)),
        kappa: kappa.to_string(),
        checks,
        sigma: None,
    };
    if p != 3 {
        return Ok(report);
    }

    let mut b = build_bundle(p)?;
    extend_to_ga(&mut b)?;
    let ga = b.ga.as_ref().expect("extended");
    let sigma = b.sigma.as_ref().expect("extended");
    let t = b.t.expect("extended");
    report.orders = vec![
        ("A", b.a.order() as u128),
        ("K", b.k_group.order() as u128),
        ("G", b.g.order() as u128),
        ("GA", ga.order() as u128),
    ];
    let c = &mut report.checks;
    c.push(Check::new(
        "table orders are p^p, p^(p+1), p^(p+2), p^(p+4)",
        report.orders.iter().zip([3, 4, 5, 7]).all(|((_, o), e)| *o == pu.pow(e)),
        "",
    ));

    // the formulas and the tables describe the same group and maps
    let elems: Vec<Elem> = sym.elements().collect();
    let idx: Vec<usize> = elems.iter().map(|e| b.index_of_elem(e)).collect();
    let same_mul = elems
        .iter()
        .zip(&idx)
        .all(|(x, &ix)| elems.iter().zip(&idx).all(|(y, &iy)| b.index_of_elem(&sym.mul(x, y)) == b.g.mul(ix, iy)));
    let same_maps = elems.iter().zip(&idx).all(|(e, &i)| {
        b.index_of_elem(&sym.alpha(e)) == b.alpha.apply(i) && b.index_of_elem(&sym.beta(e)) == b.beta.apply(i)
    });
    c.push(Check::new("tables agree with the formulas", same_mul && same_maps, ""));
    c.push(Check::new("alpha has order p^2 (table)", b.alpha.order() == p * p, format!("order {}", b.alpha.order())));
    c.push(Check::new("beta has order p (table)", b.beta.order() == p, format!("order {}", b.beta.order())));
    c.push(Check::new("alpha and beta commute (table)", b.alpha.commutes_with(&b.beta), ""));
    c.push(Check::new("locally a power (table)", locally_power_unchecked(&b.alpha, &b.beta), ""));
    let power = power_of_unchecked(&b.alpha, &b.beta);
    c.push(Check::new("beta is not a power of alpha (table)", power.is_none(), format!("{power:?}")));
    // the nonabelian G meets the hypotheses of the pointwise-power property but not its conclusion
    c.push(Check::new(
        "G is nonabelian, so the abelian hypothesis is necessary",
        !b.g.is_abelian() && power.is_none(),
        "",
    ));

    let q = p * p;
    c.push(Check::new("sigma fixes t", sigma.apply(t) == t, ""));
    c.push(Check::new(
        "sigma agrees with beta on G",
        (0..b.g.order()).all(|e| sigma.apply(e * q) == b.beta.apply(e) * q),
        "",
    ));
    let class_ids = ga.class_ids();
    let class_preserving = (0..ga.order()).all(|e| class_ids[sigma.apply(e)] == class_ids[e]);
    let inner_index = InnerIndex::new(ga, &ga.generators());
    let inner = inner_index.contains(sigma.raw());
    c.push(Check::new("sigma is class-preserving", class_preserving, ""));
    c.push(Check::new(
        "sigma differs from every conjugation",
        !inner,
        format!("{} inner automorphisms", inner_index.len()),
    ));
    let tampered = GroupMap::from_fn(ga.order(), |e| {
        let (gi, m) = (e / q, e % q);
        // h fixed instead of sent to zh: the identity on G
        let (c0, j) = (gi / p, gi % p);
        let gj = b.g.mul(c0 * p, b.g.pow(b.h, j as i64));
        gj * q + m
    });
    c.push(Check::new(
        "tampered sigma (h fixed) is inner and rejected",
        tampered.is_identity() && inner_index.contains(tampered.raw()),
        "",
    ));
    report.sigma = Some((class_preserving, inner));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_shapes() {
        let k3 = build_kappa(3).unwrap();
        assert_eq!(k3.rows(), vec![vec![1, 3], vec![8, 1]]);
        assert_eq!(k3.det(), 4);
        let k5 = build_kappa(5).unwrap();
        assert_eq!(k5.rows(), vec![vec![1, 5, 0, 0], vec![0, 1, 1, 0], vec![0, 0, 1, 1], vec![24, 0, 0, 1]]);
        for p in KAPPA_PRIMES {
            let k = build_kappa(p).unwrap();
            let d = p - 1;
            for r in 0..d {
                for c in 0..d {
                    let want = match (r, c) {
                        (0, 1) => p as u64,
                        _ if r == c || c == r + 1 => 1,
                        _ if r == d - 1 && c == 0 => (p * p - 1) as u64,
                        _ => 0,
                    };
                    assert_eq!(k.get(r, c), want, "p={p} ({r},{c})");
                }
            }
        }
        assert_eq!(build_kappa(11), Err(Error::BadPrime(11)));
        assert_eq!(build_kappa(2), Err(Error::BadPrime(2)));
    }

    #[test]
    fn kappa_module_at_seven() {
        let m = AModule::new(7, build_kappa(7).unwrap());
        let x = m.x();
        assert!(m.contains(&m.apply(m.kappa(), &x)));
        for c in m.module_checks() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
        assert!(matches!(build_a(7), Err(Error::OrderCap { .. })));
    }

    #[test]
    fn a_group_at_three() {
        let (a, kappa, _) = build_a(3).unwrap();
        assert_eq!(a.order(), 27);
        assert!(a.is_abelian());
        assert_eq!(a.exponent(), 9);
        assert_eq!(kappa.order(), 3);
    }

    #[test]
    fn bundle_at_three() {
        let mut b = build_bundle(3).unwrap();
        assert_eq!(b.g.order(), 243);
        assert_eq!(b.alpha.order(), 9);
        assert_eq!(b.beta.order(), 3);
        assert_eq!(b.g.element_order(b.z), 3);
        assert!(b.g.center().contains(b.z));
        extend_to_ga(&mut b).unwrap();
        assert_eq!(b.ga.as_ref().unwrap().order(), 2187);
    }
}
