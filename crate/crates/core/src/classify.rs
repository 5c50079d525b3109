//! Structural classifiers: Dedekind groups, Q-groups, `R(G)`, Blackburn
//! groups and the structure of their normal subgroups.

use std::fmt;

use crate::catalog;
use crate::error::{Error, Result};
use crate::group::{is_prime, prime_power_base, Group, Limits};
use crate::iso::are_isomorphic;
use crate::products::{direct_product, quotient};
use crate::subgroup::Subgroup;

/// Largest order for which [`blackburn_2group_form`] runs its isomorphism tests.
pub const FORM_ISOMORPHISM_CAP: usize = 256;

/// `R(G)`: the intersection of all non-normal subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RStatus {
    /// Every subgroup is normal.
    Undefined,
    Trivial(Subgroup),
    Nontrivial(Subgroup),
}

impl RStatus {
    fn from_intersection(r: Option<Subgroup>) -> RStatus {
        match r {
            None => RStatus::Undefined,
            Some(r) if r.is_trivial() => RStatus::Trivial(r),
            Some(r) => RStatus::Nontrivial(r),
        }
    }

    pub fn subgroup(&self) -> Option<&Subgroup> {
        match self {
            RStatus::Undefined => None,
            RStatus::Trivial(r) | RStatus::Nontrivial(r) => Some(r),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            RStatus::Undefined => "undefined",
            RStatus::Trivial(_) => "trivial",
            RStatus::Nontrivial(_) => "nontrivial",
        }
    }
}

/// True iff every subgroup is normal. Checking cyclic subgroups suffices,
/// since a subgroup generated by normal subgroups is normal.
pub fn is_dedekind(g: &Group) -> bool {
    g.cyclic_subgroups().iter().all(|c| g.is_normal(c))
}

/// `(A, b)` with `A` abelian of index 2, not elementary abelian, `b` of
/// order 4 inverting every element of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QWitness {
    pub a: Subgroup,
    pub b: usize,
}

/// Subgroups of index 2, as kernels of the homomorphisms onto `C2`.
pub fn index_two_subgroups(g: &Group) -> Vec<Subgroup> {
    let squares: Vec<usize> = (0..g.order()).map(|x| g.mul(x, x)).collect();
    let frattini2 = g.closure(&squares);
    if frattini2.order() == g.order() {
        return Vec::new();
    }
    let (v, proj) = quotient(g, &frattini2).expect("subgroup generated by squares is normal");
    let basis = v.generators();
    let r = basis.len();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << r) {
        // value of the functional on every element of the elementary abelian quotient
        let mut val = vec![u8::MAX; v.order()];
        val[0] = 0;
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for (i, &b) in basis.iter().enumerate() {
                let y = v.mul(x, b);
                if val[y] == u8::MAX {
                    val[y] = val[x] ^ ((mask >> i) & 1) as u8;
                    stack.push(y);
                }
            }
        }
        let members = (0..g.order()).filter(|&x| val[proj.apply(x)] == 0).collect();
        out.push(Subgroup::from_members(members));
    }
    out.sort();
    out
}

pub fn q_group_witness(g: &Group) -> Option<QWitness> {
    for a in index_two_subgroups(g) {
        if !a.is_abelian(g) || a.exponent(g) <= 2 {
            continue;
        }
        let gens = g.generators_of(a.members());
        let b = (0..g.order())
            .find(|&b| !a.contains(b) && g.element_order(b) == 4 && gens.iter().all(|&x| g.conj(x, b) == g.inv(x)));
        if let Some(b) = b {
            return Some(QWitness { a, b });
        }
    }
    None
}

pub fn is_q_group(g: &Group) -> bool {
    q_group_witness(g).is_some()
}

/// `R(G)` as the intersection of the non-normal cyclic subgroups.
pub fn r_of(g: &Group) -> Result<RStatus> {
    r_of_with(g, &Limits::default())
}

pub fn r_of_with(g: &Group, limits: &Limits) -> Result<RStatus> {
    limits.check_order(g.order() as u128)?;
    let non_normal = g.cyclic_subgroups().into_iter().filter(|c| !g.is_normal(c));
    Ok(RStatus::from_intersection(non_normal.reduce(|a, b| a.intersection(&b))))
}

/// `R(G)` over the full subgroup lattice; kept as an oracle for [`r_of`].
pub fn r_of_lattice(g: &Group) -> Result<RStatus> {
    let non_normal = g.all_subgroups()?.into_iter().filter(|h| !g.is_normal(h));
    Ok(RStatus::from_intersection(non_normal.reduce(|a, b| a.intersection(&b))))
}

/// `R(G)` is defined and nontrivial. Also checks that such an `R(G)` is a
/// cyclic group of prime-power order.
pub fn is_blackburn(g: &Group) -> Result<bool> {
    match r_of(g)? {
        RStatus::Nontrivial(r) => {
            if !r.is_cyclic(g) || prime_power_base(r.order()).is_none() {
                return Err(Error::ClaimFailed(format!("R(G) of order {} is not a cyclic p-group", r.order())));
            }
            Ok(true)
        }
        _ => Ok(false),
    }
}

/// Prime `p` with `R(G)` a nontrivial cyclic `p`-group.
pub fn blackburn_prime(g: &Group) -> Result<Option<usize>> {
    Ok(match r_of(g)? {
        RStatus::Nontrivial(r) => prime_power_base(r.order()),
        _ => None,
    })
}

/// The three shapes a Blackburn 2-group can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoGroupForm {
    QGroup,
    /// `Q8 × C4 × E`, `E` elementary abelian of the given rank (possibly 0).
    Q8xC4xE2(u32),
    /// `Q8 × Q8 × E`, `E` elementary abelian of the given rank (possibly 0).
    Q8xQ8xE2(u32),
}

impl fmt::Display for TwoGroupForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoGroupForm::QGroup => f.write_str("QGroup"),
            TwoGroupForm::Q8xC4xE2(_) => f.write_str("Q8xC4xE2"),
            TwoGroupForm::Q8xQ8xE2(_) => f.write_str("Q8xQ8xE2"),
        }
    }
}

pub fn blackburn_2group_form(g: &Group) -> Result<TwoGroupForm> {
    let n = g.order();
    if prime_power_base(n) != Some(2) || !is_blackburn(g)? {
        return Err(Error::NotBlackburn2Group);
    }
    if is_q_group(g) {
        return Ok(TwoGroupForm::QGroup);
    }
    if n > FORM_ISOMORPHISM_CAP {
        return Err(Error::OrderCap { order: n as u128, cap: FORM_ISOMORPHISM_CAP });
    }
    let k = n.trailing_zeros();
    let q8 = catalog::generalized_quaternion(8)?;
    if k >= 5 {
        let rank = k - 5;
        let shape = direct_product(
            &direct_product(&q8, &catalog::cyclic(4)?)?,
            &catalog::elementary_abelian(2, rank as usize)?,
        )?;
        if are_isomorphic(g, &shape) {
            return Ok(TwoGroupForm::Q8xC4xE2(rank));
        }
    }
    if k >= 6 {
        let rank = k - 6;
        let shape = direct_product(&direct_product(&q8, &q8)?, &catalog::elementary_abelian(2, rank as usize)?)?;
        if are_isomorphic(g, &shape) {
            return Ok(TwoGroupForm::Q8xQ8xE2(rank));
        }
    }
    Err(Error::NoFormMatched)
}

/// Outcome of checking the `q`-elements of a Blackburn group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QdifpReport {
    pub p: usize,
    pub q: usize,
    /// Number of `q`-elements, including the identity.
    pub t_q_size: usize,
    pub violations: Vec<String>,
}

impl QdifpReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For a prime `q` other than the prime of `R(G)`: the `q`-elements form a
/// normal subgroup all of whose subgroups are normal in `G`, abelian when
/// `q` is odd.
pub fn verify_qdifp(g: &Group, q: usize) -> Result<QdifpReport> {
    let r = match r_of(g)? {
        RStatus::Nontrivial(r) => r,
        other => {
            return Err(Error::PreconditionFailed(format!("R(G) is {}, not a nontrivial cyclic p-group", other.tag())))
        }
    };
    let p = prime_power_base(r.order())
        .filter(|_| r.is_cyclic(g))
        .ok_or_else(|| Error::PreconditionFailed("R(G) is not a cyclic p-group".into()))?;
    if !is_prime(q as u64) || q == p {
        return Err(Error::PreconditionFailed(format!("q = {q} must be a prime other than {p}")));
    }
    let t_q = g.p_elements(q);
    let mut violations = Vec::new();
    let closed = g.closure(&t_q);
    if closed.order() != t_q.len() {
        violations.push(format!("the {} {q}-elements generate a subgroup of order {}", t_q.len(), closed.order()));
    } else {
        if !g.is_normal(&closed) {
            violations.push(format!("T_{q} is not normal"));
        }
        for x in &t_q {
            let c = g.cyclic_subgroup(*x);
            if !g.is_normal(&c) {
                violations.push(format!("<{}> inside T_{q} is not normal", g.name(*x)));
                break;
            }
        }
        if q % 2 == 1 && !closed.is_abelian(g) {
            violations.push(format!("T_{q} is not abelian"));
        }
    }
    Ok(QdifpReport { p, q, t_q_size: t_q.len(), violations })
}

/// Which alternative of the normal-subgroup trichotomy applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FnsgpCase {
    /// `N` is nilpotent.
    A,
    /// `Z(S) ≤ O_p(N)`.
    B,
    /// `S = ⟨x⟩ × T` abelian with the extra conditions.
    C,
}

impl fmt::Display for FnsgpCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FnsgpCase::A => "a",
            FnsgpCase::B => "b",
            FnsgpCase::C => "c",
        })
    }
}

/// Data checked in the abelian alternative. Indices are in the parent group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseCData {
    pub x: usize,
    pub t: Subgroup,
    /// `|C_⟨x⟩(H)| == exp(O_p(N))`.
    pub exponent_check: bool,
    /// Every `g ∈ G` centralizing `C_⟨x⟩(H)` centralizes `T`.
    pub centralizing_check: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FnsgpVerdict {
    pub p: usize,
    /// The normal `p`-complement of `N`, in parent indices.
    pub p_complement: Subgroup,
    pub dedekind_complement: bool,
    pub case: FnsgpCase,
    pub case_c_data: Option<CaseCData>,
}

/// Checks the structure of a normal subgroup `N` of a Blackburn group `G`.
///
/// Returns the first alternative (in the order a, b, c) that holds with all
/// of its conditions.
pub fn verify_fnsgp(g: &Group, normal: &Subgroup) -> Result<FnsgpVerdict> {
    let p = blackburn_prime(g)?.ok_or_else(|| Error::PreconditionFailed("G is not a Blackburn group".into()))?;
    if !normal.check_invariants(g) || !g.is_normal(normal) {
        return Err(Error::PreconditionFailed("N is not a normal subgroup".into()));
    }
    let (ngrp, emb) = normal.to_group(g);
    let lift = |s: &Subgroup| Subgroup::from_members(s.members().iter().map(|&x| emb[x]).collect());

    let h_local = ngrp
        .normal_p_complement(p)
        .ok_or_else(|| Error::TrichotomyViolated(format!("N has no normal {p}-complement")))?;
    let h = lift(&h_local);
    let dedekind_complement = h.members().iter().all(|&x| g.is_normal(&g.cyclic_subgroup(x)));
    if !dedekind_complement {
        return Err(Error::TrichotomyViolated("a subgroup of the p-complement is not normal in G".into()));
    }
    let verdict =
        |case, case_c_data| FnsgpVerdict { p, p_complement: h.clone(), dedekind_complement, case, case_c_data };

    if ngrp.is_nilpotent() {
        return Ok(verdict(FnsgpCase::A, None));
    }
    let s_local = ngrp.sylow(p);
    let op_local = ngrp.o_p(p);
    let (sgrp, s_emb) = s_local.to_group(&ngrp);
    let z_s: Vec<usize> = sgrp.center().members().iter().map(|&z| s_emb[z]).collect();
    if z_s.iter().all(|&z| op_local.contains(z)) {
        return Ok(verdict(FnsgpCase::B, None));
    }
    if !s_local.is_abelian(&ngrp) {
        return Err(Error::TrichotomyViolated("S is nonabelian and Z(S) is not inside O_p(N)".into()));
    }

    let centralizes_h = |x: usize| h_local.members().iter().all(|&y| ngrp.mul(x, y) == ngrp.mul(y, x));
    let x = s_local
        .members()
        .iter()
        .copied()
        .filter(|&x| !op_local.contains(x))
        .max_by_key(|&x| (ngrp.element_order(x), std::cmp::Reverse(x)))
        .ok_or_else(|| Error::TrichotomyViolated("S lies inside O_p(N)".into()))?;
    if centralizes_h(x) {
        return Err(Error::TrichotomyViolated("[x, H] = 1 for the chosen x".into()));
    }
    let cyc_x = ngrp.cyclic_subgroup(x);
    let t_size = s_local.order() / cyc_x.order();
    let (opgrp, op_emb) = op_local.to_group(&ngrp);
    let t_local = opgrp
        .all_subgroups()?
        .into_iter()
        .map(|t| Subgroup::from_members(t.members().iter().map(|&y| op_emb[y]).collect()))
        .find(|t| t.order() == t_size && t.intersection(&cyc_x).is_trivial())
        .ok_or_else(|| Error::TrichotomyViolated("no complement T of <x> inside O_p(N)".into()))?;

    let c_x_h: Vec<usize> = cyc_x.members().iter().copied().filter(|&y| centralizes_h(y)).collect();
    let exponent_check = c_x_h.len() == op_local.exponent(&ngrp);
    let c_x_h_parent: Vec<usize> = c_x_h.iter().map(|&y| emb[y]).collect();
    let t = lift(&t_local);
    let centralizing_check = (0..g.order()).all(|gg| {
        let commutes = |y: usize| g.mul(gg, y) == g.mul(y, gg);
        !c_x_h_parent.iter().all(|&y| commutes(y)) || t.members().iter().all(|&y| commutes(y))
    });
    if !exponent_check || !centralizing_check {
        return Err(Error::TrichotomyViolated(format!(
            "abelian alternative fails (exponent check {exponent_check}, centralizing check {centralizing_check})"
        )));
    }
    Ok(verdict(FnsgpCase::C, Some(CaseCData { x: emb[x], t, exponent_check, centralizing_check })))
}

/// Every normal subgroup of `g`, via the lattice (order ≤ 128).
pub fn normal_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    Ok(g.all_subgroups()?.into_iter().filter(|h| g.is_normal(h)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::resolve;

    #[test]
    fn dedekind() {
        assert!(is_dedekind(&resolve("C12").unwrap()));
        assert!(is_dedekind(&resolve("Q8").unwrap()));
        assert!(!is_dedekind(&resolve("S3").unwrap()));
    }

    #[test]
    fn q_groups() {
        let w = q_group_witness(&resolve("Q8").unwrap()).unwrap();
        assert_eq!(w.a.order(), 4);
        let q16 = resolve("Q16").unwrap();
        let w = q_group_witness(&q16).unwrap();
        assert!(w.a.is_cyclic(&q16) && w.a.order() == 8);
        assert!(!is_q_group(&resolve("D8").unwrap()));
    }

    #[test]
    fn r_values() {
        assert_eq!(r_of(&resolve("Q8").unwrap()).unwrap(), RStatus::Undefined);
        assert!(matches!(r_of(&resolve("S3").unwrap()).unwrap(), RStatus::Trivial(_)));
        let q16 = resolve("Q16").unwrap();
        match r_of(&q16).unwrap() {
            RStatus::Nontrivial(r) => {
                assert_eq!(r.order(), 2);
                assert_eq!(q16.element_order(r.members()[1]), 2);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(r_of(&q16).unwrap(), r_of_lattice(&q16).unwrap());
    }

    #[test]
    fn blackburn_examples() {
        assert!(is_blackburn(&resolve("Q16").unwrap()).unwrap());
        assert!(!is_blackburn(&resolve("S3").unwrap()).unwrap());
        let g = resolve("C7:Q8").unwrap();
        assert!(is_blackburn(&g).unwrap());
        let r = r_of(&g).unwrap().subgroup().unwrap().clone();
        // the quaternion factor's center: elements (0, a^2)
        assert_eq!(r.members(), &[0, 2]);
    }

    #[test]
    fn two_group_forms() {
        assert_eq!(blackburn_2group_form(&resolve("Q16").unwrap()).unwrap(), TwoGroupForm::QGroup);
        let g = resolve("Q8xC4").unwrap();
        assert!(!is_q_group(&g));
        assert_eq!(blackburn_2group_form(&g).unwrap(), TwoGroupForm::Q8xC4xE2(0));
        assert_eq!(blackburn_2group_form(&resolve("Q8xQ8xC2").unwrap()).unwrap(), TwoGroupForm::Q8xQ8xE2(1));
        assert_eq!(blackburn_2group_form(&resolve("S3").unwrap()), Err(Error::NotBlackburn2Group));
    }

    #[test]
    fn qdifp_examples() {
        let g = resolve("C7:Q8").unwrap();
        let rep = verify_qdifp(&g, 7).unwrap();
        assert!(rep.holds(), "{rep:?}");
        assert_eq!(rep.t_q_size, 7);
        let rep = verify_qdifp(&resolve("Q16").unwrap(), 3).unwrap();
        assert!(rep.holds() && rep.t_q_size == 1);
        let rep = verify_qdifp(&resolve("C7:C9").unwrap(), 7).unwrap();
        assert!(rep.holds());
        assert!(matches!(verify_qdifp(&resolve("S3").unwrap(), 3), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn fnsgp_examples() {
        let q16 = resolve("Q16").unwrap();
        let v = verify_fnsgp(&q16, &Subgroup::whole(&q16)).unwrap();
        assert_eq!(v.case, FnsgpCase::A);

        let g = resolve("C7:Q8").unwrap();
        let v = verify_fnsgp(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(v.case, FnsgpCase::B);
        assert_eq!(v.p_complement.order(), 7);
        assert_eq!(g.o_p(2).order(), 4);

        let g = resolve("C7:C9").unwrap();
        let v = verify_fnsgp(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(v.case, FnsgpCase::C);
        let data = v.case_c_data.unwrap();
        assert!(data.t.is_trivial());
        assert_eq!(g.element_order(data.x), 9);
        assert_eq!(g.o_p(3).exponent(&g), 3);
    }
}
