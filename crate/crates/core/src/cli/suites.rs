//! Verification suites over the pinned catalog.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::autos::{
    enumerate_autc, find_hn_witness, hn_instances, inner_automorphism, is_class_preserving, ispower_harness,
    outc_trivial, p_part_normalize, AutcOptions, InnerIndex,
};
use crate::catalog::{abelian_p_groups, catalog_upto, CatalogGroup};
use crate::classify::{
    blackburn_2group_form, blackburn_prime, index_two_subgroups, is_blackburn, is_dedekind, is_q_group,
    normal_subgroups, r_of, r_of_lattice, verify_fnsgp, verify_qdifp, TwoGroupForm,
};
use crate::counterexample::verify_example;
use crate::error::{Error, Result};
use crate::group::{prime_divisors, prime_power_base, Group};
use crate::iso::{all_automorphisms, are_isomorphic};
use crate::maps::GroupMap;
use crate::parallel;
use crate::products::quotient;
use crate::subgroup::Subgroup;

/// Largest catalog order any suite touches.
pub const CATALOG_BOUND: usize = 128;
/// Seed for generated inputs.
pub const SUITE_SEED: u64 = 2024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl Level {
    pub fn parse(s: &str) -> Result<Level> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            other => Err(Error::BadParams(format!("unknown suite level `{other}` (quick or full)"))),
        }
    }

    /// Catalog bound for the level: 64 or 128.
    pub fn catalog_bound(self) -> usize {
        match self {
            Level::Quick => 64,
            Level::Full => CATALOG_BOUND,
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Quick => "quick",
            Level::Full => "full",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub run: usize,
    pub passed: usize,
    /// Input and violated claim of the first failing case.
    pub failure: Option<String>,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.failure.is_none() && self.passed == self.run
    }
}

fn catalog() -> &'static [CatalogGroup] {
    static CATALOG: OnceLock<Vec<CatalogGroup>> = OnceLock::new();
    CATALOG.get_or_init(|| catalog_upto(CATALOG_BOUND).expect("manifest builds"))
}

fn catalog_upto_order(max: usize) -> Vec<&'static CatalogGroup> {
    catalog().iter().filter(|c| c.group.order() <= max).collect()
}

/// Runs `check` on every case in parallel; the first failure in case order
/// is reported, so the result does not depend on scheduling.
fn run_cases<T: Sync>(
    name: &'static str,
    cases: &[T],
    label: impl Fn(&T) -> String + Sync,
    check: impl Fn(&T) -> Result<(), String> + Sync,
) -> SuiteResult {
    let outcomes: Vec<Result<(), String>> = parallel::pool().install(|| cases.par_iter().map(&check).collect());
    let passed = outcomes.iter().filter(|o| o.is_ok()).count();
    let failure = cases.iter().zip(&outcomes).find_map(|(c, o)| o.as_ref().err().map(|e| format!("{}: {e}", label(c))));
    SuiteResult { name, run: cases.len(), passed, failure }
}

fn catalog_label(c: &&CatalogGroup) -> String {
    format!("group={} expr={}", c.name, c.expr)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn blackburn_groups(max: usize) -> Vec<&'static CatalogGroup> {
    catalog_upto_order(max).into_iter().filter(|c| is_blackburn(&c.group).unwrap_or(true)).collect()
}

fn outc_is_trivial(g: &Group) -> Result<(), String> {
    let rep = lib(outc_trivial(g, &AutcOptions::default()))?;
    ensure(rep.outc_trivial, || format!("Out_c nontrivial: |Aut_c| = {}, |Inn| = {}", rep.autc_order, rep.inn_order))
}

pub fn class_equation(level: Level) -> SuiteResult {
    run_cases("class-equation", &catalog_upto_order(level.catalog_bound()), catalog_label, |c| {
        let g = &c.group;
        let classes = g.conjugacy_classes();
        let total: usize = classes.iter().map(Vec::len).sum();
        ensure(total == g.order(), || format!("class sizes sum to {total}"))?;
        ensure(classes.iter().all(|k| g.order() % k.len() == 0), || "a class size does not divide |G|".into())?;
        let singletons = classes.iter().filter(|k| k.len() == 1).count();
        ensure(singletons == g.center().order(), || "singleton classes differ from the center".into())?;
        for k in &classes {
            let x = k[0];
            let c = g.centralizer(&[x]).order();
            ensure(k.len() * c == g.order(), || format!("|class of {x}| · |C(x)| != |G|"))?;
        }
        Ok(())
    })
}

pub fn r_oracle(level: Level) -> SuiteResult {
    run_cases("r-oracle", &catalog_upto_order(level.catalog_bound()), catalog_label, |c| {
        let fast = lib(r_of(&c.group))?;
        let slow = lib(r_of_lattice(&c.group))?;
        ensure(fast == slow, || format!("cyclic-subgroup R = {fast:?}, lattice R = {slow:?}"))
    })
}

pub fn dedekind_oracle(level: Level) -> SuiteResult {
    run_cases("dedekind-oracle", &catalog_upto_order(level.catalog_bound()), catalog_label, |c| {
        let g = &c.group;
        let all_normal = lib(g.all_subgroups())?.iter().all(|h| g.is_normal(h));
        ensure(is_dedekind(g) == all_normal, || format!("is_dedekind disagrees with the lattice ({all_normal})"))
    })
}

/// Aut_c by constrained search equals all of Aut filtered by class preservation.
pub fn autc_oracle(_level: Level) -> SuiteResult {
    run_cases("autc-oracle", &catalog_upto_order(64), catalog_label, |c| {
        let g = &c.group;
        let (mut fast, _) = lib(enumerate_autc(g, &AutcOptions::default()))?;
        let mut slow = Vec::new();
        for f in lib(all_automorphisms(g))? {
            if lib(is_class_preserving(g, &f))? {
                slow.push(f);
            }
        }
        fast.sort();
        slow.sort();
        ensure(fast == slow, || format!("search found {}, filter found {}", fast.len(), slow.len()))
    })
}

fn has_abelian_index_two(g: &Group) -> bool {
    g.is_abelian() || index_two_subgroups(g).iter().any(|a| a.is_abelian(g))
}

pub fn outc_index_two(_level: Level) -> SuiteResult {
    let cases: Vec<_> = catalog_upto_order(64).into_iter().filter(|c| has_abelian_index_two(&c.group)).collect();
    run_cases("outc-abelian-index-2", &cases, catalog_label, |c| outc_is_trivial(&c.group))
}

/// Normal abelian subgroups `A` with `G/A` cyclic.
fn abelian_cyclic_quotient(g: &Group) -> Result<bool> {
    for a in normal_subgroups(g)? {
        if a.is_abelian(g) && quotient(g, &a)?.0.generators().len() <= 1 {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn outc_abelian_by_cyclic(level: Level) -> SuiteResult {
    let bound = if level == Level::Full { 100 } else { 64 };
    let cases: Vec<_> =
        catalog_upto_order(bound).into_iter().filter(|c| abelian_cyclic_quotient(&c.group).unwrap_or(false)).collect();
    run_cases("outc-abelian-by-cyclic", &cases, catalog_label, |c| outc_is_trivial(&c.group))
}

/// Primes `p` for which some normal abelian `A` leaves `G/A` with a normal
/// cyclic Sylow `p`-subgroup.
fn cyclic_sylow_primes(g: &Group) -> Result<Vec<usize>> {
    let mut primes = BTreeSet::new();
    for a in normal_subgroups(g)? {
        if !a.is_abelian(g) {
            continue;
        }
        let (q, _) = quotient(g, &a)?;
        for p in prime_divisors(g.order()) {
            let s = q.sylow(p);
            if q.is_normal(&s) && s.is_cyclic(&q) {
                primes.insert(p);
            }
        }
    }
    Ok(primes.into_iter().collect())
}

/// For such `p`, every class-preserving automorphism of `p`-power order is inner.
pub fn outc_cyclic_sylow_quotient(level: Level) -> SuiteResult {
    let bound = if level == Level::Full { 100 } else { 64 };
    let cases: Vec<(&CatalogGroup, Vec<usize>)> = catalog_upto_order(bound)
        .into_iter()
        .filter(|c| !c.group.is_abelian())
        .filter_map(|c| cyclic_sylow_primes(&c.group).ok().filter(|ps| !ps.is_empty()).map(|ps| (c, ps)))
        .collect();
    run_cases(
        "outc-cyclic-sylow-quotient",
        &cases,
        |(c, ps)| format!("group={} expr={} primes={ps:?}", c.name, c.expr),
        |(c, ps)| {
            let g = &c.group;
            let (maps, rep) = lib(enumerate_autc(g, &AutcOptions::default()))?;
            let inner = InnerIndex::new(g, &rep.generating_set);
            for f in &maps {
                let o = f.order();
                if let Some(p) = prime_power_base(o).filter(|p| ps.contains(p)) {
                    ensure(inner.contains(f.raw()), || format!("non-inner class-preserving map of {p}-power order"))?;
                }
            }
            Ok(())
        },
    )
}

/// `G = A ⋊ Q` with `A` abelian of odd order, `Q` generalized quaternion
/// acting by fixed powers, and a Sylow 2-subgroup with an abelian subgroup
/// of index 2. Returns a description of the failed hypothesis otherwise.
fn quaternion_power_hypotheses(g: &Group) -> Result<(), String> {
    let odd: Vec<usize> = (0..g.order()).filter(|&x| g.element_order(x) % 2 == 1).collect();
    let a = g.closure(&odd);
    ensure(a.order() == odd.len() && a.is_abelian(g) && g.is_normal(&a), || {
        "odd-order elements do not form a normal abelian subgroup".into()
    })?;
    let q = g.sylow(2);
    ensure(a.order() * q.order() == g.order(), || "A and Q do not fill G".into())?;
    let (qg, emb) = q.to_group(g);
    let involutions = (0..qg.order()).filter(|&x| qg.element_order(x) == 2).count();
    ensure(!qg.is_abelian() && involutions == 1 && prime_power_base(qg.order()) == Some(2), || {
        "Sylow 2-subgroup is not generalized quaternion".into()
    })?;
    for &y in &emb {
        let e = (0..a.exponent(g).max(1) as i64).find(|&e| a.members().iter().all(|&x| g.conj(x, y) == g.pow(x, e)));
        ensure(e.is_some(), || format!("element {y} of Q does not act by a fixed power"))?;
    }
    ensure(index_two_subgroups(&qg).iter().any(|s| s.is_abelian(&qg)), || "no abelian index-2 subgroup in Q".into())
}

pub fn outc_quaternion_power(level: Level) -> SuiteResult {
    let cases: Vec<_> = catalog_upto_order(level.catalog_bound())
        .into_iter()
        .filter(|c| c.expr.starts_with("power_quaternion"))
        .collect();
    let mut res = run_cases("outc-quaternion-power", &cases, catalog_label, |c| {
        quaternion_power_hypotheses(&c.group)?;
        outc_is_trivial(&c.group)
    });
    if res.run < 3 && res.failure.is_none() {
        res.failure = Some(format!("only {} instances in range", res.run));
    }
    res
}

pub fn outc_blackburn(level: Level) -> SuiteResult {
    run_cases("outc-blackburn", &blackburn_groups(level.catalog_bound()), catalog_label, |c| {
        ensure(lib(is_blackburn(&c.group))?, || "not Blackburn".into())?;
        outc_is_trivial(&c.group)
    })
}

pub fn two_group_forms(level: Level) -> SuiteResult {
    let cases: Vec<_> = blackburn_groups(level.catalog_bound())
        .into_iter()
        .filter(|c| prime_power_base(c.group.order()) == Some(2))
        .collect();
    run_cases("blackburn-2-group-forms", &cases, catalog_label, |c| {
        let g = &c.group;
        let form = lib(blackburn_2group_form(g))?;
        // count every shape that matches, not just the first
        let k = g.order().trailing_zeros() as usize;
        let q8 = lib(crate::catalog::generalized_quaternion(8))?;
        let shape = |second: &Group, rank: usize| -> Result<bool, String> {
            let e = lib(crate::catalog::elementary_abelian(2, rank))?;
            let s = lib(crate::products::direct_product(&lib(crate::products::direct_product(&q8, second))?, &e))?;
            Ok(are_isomorphic(g, &s))
        };
        let mut matches = usize::from(is_q_group(g));
        if k >= 5 && shape(&lib(crate::catalog::cyclic(4))?, k - 5)? {
            matches += 1;
        }
        if k >= 6 && shape(&q8, k - 6)? {
            matches += 1;
        }
        ensure(matches == 1, || format!("{matches} shapes match (reported {form})"))?;
        ensure(
            matches!(form, TwoGroupForm::QGroup | TwoGroupForm::Q8xC4xE2(_) | TwoGroupForm::Q8xQ8xE2(_)),
            String::new,
        )
    })
}

pub fn qdifp(level: Level) -> SuiteResult {
    let cases: Vec<(&CatalogGroup, usize)> = blackburn_groups(level.catalog_bound())
        .into_iter()
        .flat_map(|c| {
            let p = blackburn_prime(&c.group).ok().flatten();
            prime_divisors(c.group.order()).into_iter().filter(move |&q| Some(q) != p).map(move |q| (c, q))
        })
        .collect();
    run_cases(
        "q-elements",
        &cases,
        |(c, q)| format!("group={} expr={} q={q}", c.name, c.expr),
        |(c, q)| {
            let rep = lib(verify_qdifp(&c.group, *q))?;
            ensure(rep.holds(), || rep.violations.join("; "))
        },
    )
}

pub fn fnsgp(level: Level) -> SuiteResult {
    let cases: Vec<(&CatalogGroup, Subgroup)> = blackburn_groups(level.catalog_bound())
        .into_iter()
        .flat_map(|c| normal_subgroups(&c.group).unwrap_or_default().into_iter().map(move |n| (c, n)))
        .collect();
    run_cases(
        "normal-subgroup-structure",
        &cases,
        |(c, n)| format!("group={} expr={} N={:?}", c.name, c.expr, n.members()),
        |(c, n)| lib(verify_fnsgp(&c.group, n)).map(|_| ()),
    )
}

pub fn hn_witness(level: Level) -> SuiteResult {
    let count = if level == Level::Full { 50 } else { 20 };
    let cases = match hn_instances(count, SUITE_SEED) {
        Ok(c) => c,
        Err(e) => {
            return SuiteResult { name: "coprime-action-witness", run: 1, passed: 0, failure: Some(e.to_string()) }
        }
    };
    run_cases(
        "coprime-action-witness",
        &cases,
        |i| i.label.clone(),
        |i| {
            let w = lib(find_hn_witness(&i.n, &i.h, &i.action))?;
            ensure(i.action.stabilizer(w) == i.action.kernel(), || format!("stabilizer of {w} differs from the kernel"))
        },
    )
}

pub fn ispower(level: Level) -> SuiteResult {
    let (b2, b3) = if level == Level::Full { (32, 81) } else { (16, 27) };
    let groups = match abelian_p_groups(2, b2).and_then(|mut g| {
        g.extend(abelian_p_groups(3, b3)?);
        Ok(g)
    }) {
        Ok(g) => g,
        Err(e) => return SuiteResult { name: "pointwise-power", run: 1, passed: 0, failure: Some(e.to_string()) },
    };
    // each group is one case; the harness parallelizes internally
    let mut passed = 0;
    let mut failure = None;
    for (name, g) in &groups {
        match ispower_harness(std::slice::from_ref(&(name.clone(), g.clone())), SUITE_SEED) {
            Ok(_) => passed += 1,
            Err(e) if failure.is_none() => failure = Some(format!("group={name}: {e}")),
            Err(_) => {}
        }
    }
    SuiteResult { name: "pointwise-power", run: groups.len(), passed, failure }
}

pub fn normalize(level: Level) -> SuiteResult {
    let bound = if level == Level::Full { 64 } else { 32 };
    let cases: Vec<_> = catalog_upto_order(bound).into_iter().filter(|c| !c.group.is_abelian()).collect();
    run_cases("p-part-normalize", &cases, catalog_label, |c| {
        let g = &c.group;
        let (maps, _) = lib(enumerate_autc(g, &AutcOptions::default()))?;
        for p in prime_divisors(g.order()) {
            let sigmas: Vec<&GroupMap> =
                maps.iter().filter(|f| f.order() == 1 || prime_power_base(f.order()) == Some(p)).collect();
            for sigma in sigmas {
                for x in g.generators() {
                    let gamma = inner_automorphism(g, x);
                    lib(p_part_normalize(g, sigma, &gamma, p))?;
                }
            }
        }
        Ok(())
    })
}

/// Full construction at `p = 3` and formula-level checks at `p = 5`.
pub fn construction(_level: Level) -> SuiteResult {
    let cases = [3usize, 5];
    run_cases(
        "nonabelian-construction",
        &cases,
        |p| format!("p={p}"),
        |&p| {
            let rep = lib(verify_example(p))?;
            match rep.first_failure() {
                Some(c) => Err(format!("{} ({})", c.name, c.detail)),
                None if p == 3 => ensure(rep.sigma == Some((true, false)), || "sigma verdict missing".into()),
                None => Ok(()),
            }
        },
    )
}

/// Suites in run order for `level`.
pub fn suite_list(level: Level) -> Vec<fn(Level) -> SuiteResult> {
    let mut list: Vec<fn(Level) -> SuiteResult> = vec![
        class_equation,
        r_oracle,
        dedekind_oracle,
        autc_oracle,
        outc_index_two,
        outc_abelian_by_cyclic,
        outc_cyclic_sylow_quotient,
        outc_quaternion_power,
        outc_blackburn,
        two_group_forms,
        qdifp,
        fnsgp,
        hn_witness,
        ispower,
        normalize,
    ];
    if level == Level::Full {
        list.push(construction);
    }
    list
}

pub fn run_suites(level: Level) -> Vec<SuiteResult> {
    suite_list(level).into_iter().map(|s| s(level)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        for s in [class_equation, r_oracle, two_group_forms, qdifp, outc_quaternion_power] {
            let r = s(Level::Quick);
            assert!(r.ok(), "{r:?}");
            assert!(r.run > 0, "{} ran no cases", r.name);
        }
    }
}
