//! Elements whose stabilizer under a coprime abelian action equals the kernel.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::catalog;
use crate::error::{Error, Result};
use crate::group::{gcd, prime_power_base, Group};
use crate::iso::all_automorphisms;
use crate::maps::GroupMap;
use crate::products::Action;

/// `n₀ ∈ N` whose stabilizer in `H` is exactly the kernel of the action.
/// `N` must be a `p`-group and `H` an abelian group of order prime to `p`.
pub fn find_hn_witness(n_grp: &Group, h_grp: &Group, action: &Action) -> Result<usize> {
    if action.actor_order() != h_grp.order() || action.acted_order() != n_grp.order() {
        return Err(Error::PreconditionFailed("action does not match the groups".into()));
    }
    if !h_grp.is_abelian() {
        return Err(Error::PreconditionFailed("H is not abelian".into()));
    }
    if n_grp.order() > 1 {
        let p = prime_power_base(n_grp.order())
            .ok_or_else(|| Error::PreconditionFailed(format!("|N| = {} is not a prime power", n_grp.order())))?;
        if h_grp.order() % p == 0 {
            return Err(Error::PreconditionFailed(format!("|H| = {} is divisible by {p}", h_grp.order())));
        }
    }
    let kernel = action.kernel();
    (0..n_grp.order()).find(|&x| action.stabilizer(x) == kernel).ok_or(Error::NoWitness)
}

/// A generated input for [`find_hn_witness`].
#[derive(Debug, Clone)]
pub struct HnInstance {
    pub label: String,
    pub n: Group,
    pub h: Group,
    pub action: Action,
}

const N_POOL: &[&str] = &[
    "C2^2",
    "C4xC2",
    "C2^3",
    "Q8",
    "D8",
    "C2^4",
    "C4^2",
    "C3",
    "C9",
    "C3^2",
    "C9xC3",
    "C3^3",
    "C27",
    "C5",
    "abelian(5,5)",
    "C7",
    "C9:C3",
];
const H_POOL: &[&[usize]] =
    &[&[2], &[3], &[4], &[2, 2], &[5], &[6], &[7], &[8], &[3, 3], &[4, 2], &[10], &[12], &[2, 2, 2], &[14], &[15]];

/// `count` reproducible instances with `|N| ≤ 64` and `|H| ≤ 15`; the
/// action sends the generators of `H` to randomly chosen automorphisms.
pub fn hn_instances(count: usize, seed: u64) -> Result<Vec<HnInstance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pools: Vec<(String, Group, Vec<GroupMap>)> = N_POOL
        .iter()
        .map(|name| {
            let g = catalog::resolve(name)?;
            let aut = all_automorphisms(&g)?;
            Ok((name.to_string(), g, aut))
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        if attempts > 1000 * count.max(1) {
            return Err(Error::PreconditionFailed("could not generate enough actions".into()));
        }
        let (name, n_grp, aut) = pools.choose(&mut rng).expect("pool is non-empty");
        let p = prime_power_base(n_grp.order()).expect("pool holds p-groups");
        let shape = H_POOL.choose(&mut rng).expect("pool is non-empty");
        let h_grp = catalog::abelian(shape)?;
        if gcd(h_grp.order(), p) != 1 {
            continue;
        }
        let gens = h_grp.generators();
        let mut assigned: Vec<(usize, GroupMap)> = Vec::new();
        for &s in &gens {
            let m = h_grp.element_order(s);
            let choices: Vec<&GroupMap> =
                aut.iter().filter(|f| m % f.order() == 0 && assigned.iter().all(|(_, a)| a.commutes_with(f))).collect();
            let pick = (*choices.choose(&mut rng).expect("identity always qualifies")).clone();
            assigned.push((s, pick));
        }
        if let Ok(action) = Action::from_generators(&h_grp, n_grp, &assigned) {
            let label = format!("N={name} H=abelian{shape:?} #{}", out.len());
            out.push(HnInstance { label, n: n_grp.clone(), h: h_grp, action });
        }
    }
    Ok(out)
}
