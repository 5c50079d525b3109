//! Named group constructors and the pinned catalog manifest.
//!
//! Catalog entries are written as small expressions so that a manifest line
//! fully determines its group:
//!
//! ```text
//! cyclic(12)                     C12
//! abelian(4,2,2)                 C4 x C2 x C2
//! dihedral(8)                    dihedral group of order 8
//! quaternion(16)                 generalized quaternion group of order 16
//! symmetric(4), alternating(4)
//! metacyclic(m,n,r)              C_m ⋊ C_n, generator acting by x ↦ x^r
//! power_quaternion(q,ea,eb,n..)  abelian(n..) ⋊ Q_q, the two quaternion
//!                                generators acting by x ↦ x^ea, x ↦ x^eb
//! qgroup(n..)                    ⟨A, b⟩ with A = abelian(n..), b² the
//!                                involution of the first factor
//! e1 * e2                        direct product
//! ```

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::{gcd, is_prime, Group, Limits};
use crate::maps::GroupMap;
use crate::products::{direct_product_with, semidirect_product_with, Action};

/// Bumped whenever the manifest contents change.
pub const CATALOG_VERSION: u32 = 1;

/// `(name, expression)` pairs; names are unique.
pub const MANIFEST: &[(&str, &str)] = &[
    // abelian
    ("C1", "cyclic(1)"),
    ("C2", "cyclic(2)"),
    ("C3", "cyclic(3)"),
    ("C4", "cyclic(4)"),
    ("C2^2", "abelian(2,2)"),
    ("C5", "cyclic(5)"),
    ("C6", "cyclic(6)"),
    ("C7", "cyclic(7)"),
    ("C8", "cyclic(8)"),
    ("C4xC2", "abelian(4,2)"),
    ("C2^3", "abelian(2,2,2)"),
    ("C9", "cyclic(9)"),
    ("C3^2", "abelian(3,3)"),
    ("C10", "cyclic(10)"),
    ("C12", "cyclic(12)"),
    ("C6xC2", "abelian(6,2)"),
    ("C16", "cyclic(16)"),
    ("C4^2", "abelian(4,4)"),
    ("C8xC2", "abelian(8,2)"),
    ("C4xC2^2", "abelian(4,2,2)"),
    ("C2^4", "abelian(2,2,2,2)"),
    ("C18", "cyclic(18)"),
    ("C27", "cyclic(27)"),
    ("C9xC3", "abelian(9,3)"),
    ("C3^3", "abelian(3,3,3)"),
    ("C30", "cyclic(30)"),
    ("C32", "cyclic(32)"),
    ("C8xC4", "abelian(8,4)"),
    ("C60", "cyclic(60)"),
    ("C64", "cyclic(64)"),
    ("C128", "cyclic(128)"),
    // dihedral, quaternion, symmetric
    ("D6", "dihedral(6)"),
    ("D8", "dihedral(8)"),
    ("D10", "dihedral(10)"),
    ("D12", "dihedral(12)"),
    ("D14", "dihedral(14)"),
    ("D16", "dihedral(16)"),
    ("D18", "dihedral(18)"),
    ("D20", "dihedral(20)"),
    ("D24", "dihedral(24)"),
    ("D32", "dihedral(32)"),
    ("D64", "dihedral(64)"),
    ("D128", "dihedral(128)"),
    ("Q8", "quaternion(8)"),
    ("Q16", "quaternion(16)"),
    ("Q32", "quaternion(32)"),
    ("Q64", "quaternion(64)"),
    ("Q128", "quaternion(128)"),
    ("S3", "symmetric(3)"),
    ("S4", "symmetric(4)"),
    ("S5", "symmetric(5)"),
    ("A4", "alternating(4)"),
    ("A5", "alternating(5)"),
    // direct products
    ("Q8xC2", "quaternion(8)*cyclic(2)"),
    ("Q8xC3", "quaternion(8)*cyclic(3)"),
    ("Q8xC2^2", "quaternion(8)*abelian(2,2)"),
    ("Q8xC5", "quaternion(8)*cyclic(5)"),
    ("Q8xC4", "quaternion(8)*cyclic(4)"),
    ("Q8xC4xC2", "quaternion(8)*cyclic(4)*cyclic(2)"),
    ("Q8xC4xC3", "quaternion(8)*cyclic(4)*cyclic(3)"),
    ("Q8xQ8", "quaternion(8)*quaternion(8)"),
    ("Q8xQ8xC2", "quaternion(8)*quaternion(8)*cyclic(2)"),
    ("Q16xC2", "quaternion(16)*cyclic(2)"),
    ("Q16xC3", "quaternion(16)*cyclic(3)"),
    ("D8xC2", "dihedral(8)*cyclic(2)"),
    ("D8xC3", "dihedral(8)*cyclic(3)"),
    ("S3xC3", "symmetric(3)*cyclic(3)"),
    ("A4xC2", "alternating(4)*cyclic(2)"),
    ("S4xC2", "symmetric(4)*cyclic(2)"),
    // metacyclic
    ("C3:C4", "metacyclic(3,4,2)"),
    ("C4:C4", "metacyclic(4,4,3)"),
    ("C7:C3", "metacyclic(7,3,2)"),
    ("C7:C6", "metacyclic(7,6,3)"),
    ("C5:C4", "metacyclic(5,4,2)"),
    ("Dic20", "metacyclic(5,4,4)"),
    ("Dic28", "metacyclic(7,4,6)"),
    ("Dic36", "metacyclic(9,4,8)"),
    ("C9:C3", "metacyclic(9,3,4)"),
    ("C7:C9", "metacyclic(7,9,2)"),
    ("C3:C8", "metacyclic(3,8,2)"),
    ("C5:C8", "metacyclic(5,8,2)"),
    ("C7:C8", "metacyclic(7,8,6)"),
    ("C3:C16", "metacyclic(3,16,2)"),
    ("C11:C5", "metacyclic(11,5,3)"),
    ("C13:C3", "metacyclic(13,3,3)"),
    ("C13:C4", "metacyclic(13,4,5)"),
    ("C15:C4", "metacyclic(15,4,2)"),
    ("C21:C3", "metacyclic(21,3,4)"),
    ("C9:C6", "metacyclic(9,6,2)"),
    ("C8:C4", "metacyclic(8,4,3)"),
    ("M16", "metacyclic(8,2,5)"),
    ("SD16", "metacyclic(8,2,3)"),
    ("M32", "metacyclic(16,2,9)"),
    ("SD32", "metacyclic(16,2,7)"),
    ("C9:C9", "metacyclic(9,9,4)"),
    ("C25:C5", "metacyclic(25,5,6)"),
    // abelian groups extended by quaternion groups acting through power maps
    ("C3:Q8", "power_quaternion(8,1,-1,3)"),
    ("C5:Q8", "power_quaternion(8,1,-1,5)"),
    ("C5:Q8b", "power_quaternion(8,-1,-1,5)"),
    ("C7:Q8", "power_quaternion(8,1,-1,7)"),
    ("C9:Q8", "power_quaternion(8,1,-1,9)"),
    ("C3^2:Q8", "power_quaternion(8,1,-1,3,3)"),
    ("C15:Q8", "power_quaternion(8,1,-1,15)"),
    ("C3:Q16", "power_quaternion(16,1,-1,3)"),
    ("C7:Q16", "power_quaternion(16,1,-1,7)"),
    ("C3:Q32", "power_quaternion(32,1,-1,3)"),
    // Q-groups built from an abelian subgroup of index 2
    ("Q(C4xC2)", "qgroup(4,2)"),
    ("Q(C6xC2)", "qgroup(6,2)"),
    ("Q(C12)", "qgroup(12)"),
    ("Q(C4xC4)", "qgroup(4,4)"),
    ("Q(C8xC2)", "qgroup(8,2)"),
    ("Q(C4xC2^2)", "qgroup(4,2,2)"),
    ("Q(C8xC4)", "qgroup(8,4)"),
    ("Q(C16xC2)", "qgroup(16,2)"),
    ("Q(C4xC2^3)", "qgroup(4,2,2,2)"),
];

/// A manifest entry built into a group.
#[derive(Debug, Clone)]
pub struct CatalogGroup {
    pub name: &'static str,
    pub expr: &'static str,
    pub group: Group,
}

/// Builds every manifest entry with order at most `max_order`.
pub fn catalog_upto(max_order: usize) -> Result<Vec<CatalogGroup>> {
    let mut out = Vec::new();
    for &(name, expr) in MANIFEST {
        if expression_order(expr)? > max_order as u128 {
            continue;
        }
        out.push(CatalogGroup { name, expr, group: parse_expression(expr)? });
    }
    Ok(out)
}

/// Resolves a manifest name, or else parses the text as an expression.
pub fn resolve(text: &str) -> Result<Group> {
    match MANIFEST.iter().find(|(n, _)| *n == text) {
        Some((_, expr)) => parse_expression(expr),
        None => parse_expression(text),
    }
}

fn split_terms(expr: &str) -> Result<Vec<(String, Vec<i64>)>> {
    let mut terms = Vec::new();
    for raw in expr.split('*') {
        let t = raw.trim();
        let (name, args) = match t.find('(') {
            Some(i) => {
                let inner = t[i + 1..].strip_suffix(')').ok_or_else(|| Error::UnknownBuiltin(expr.to_string()))?;
                let args = inner
                    .split(',')
                    .filter(|a| !a.trim().is_empty())
                    .map(|a| a.trim().parse::<i64>().map_err(|_| Error::UnknownBuiltin(expr.to_string())))
                    .collect::<Result<Vec<_>>>()?;
                (t[..i].trim().to_string(), args)
            }
            None => (t.to_string(), Vec::new()),
        };
        if name.is_empty() {
            return Err(Error::UnknownBuiltin(expr.to_string()));
        }
        terms.push((name, args));
    }
    Ok(terms)
}

fn positive(args: &[i64], expr: &str) -> Result<Vec<usize>> {
    args.iter()
        .map(
            |&a| {
                if a > 0 {
                    Ok(a as usize)
                } else {
                    Err(Error::BadParams(format!("`{expr}` needs positive arguments")))
                }
            },
        )
        .collect()
}

fn arity(args: &[i64], want: usize, name: &str) -> Result<()> {
    if args.len() != want {
        return Err(Error::BadParams(format!("{name} takes {want} argument(s), got {}", args.len())));
    }
    Ok(())
}

/// The order an expression would produce, without building it.
pub fn expression_order(expr: &str) -> Result<u128> {
    let mut total: u128 = 1;
    for (name, args) in split_terms(expr)? {
        let a = positive(&args.iter().map(|x| x.abs()).collect::<Vec<_>>(), expr)?;
        let order: u128 = match name.as_str() {
            "cyclic" | "dihedral" | "quaternion" | "generalized_quaternion" => a.first().copied().unwrap_or(0) as u128,
            "elementary_abelian" if a.len() == 2 => (a[0] as u128).pow(a[1] as u32),
            "abelian" => a.iter().map(|&x| x as u128).product(),
            "symmetric" => (1..=a.first().copied().unwrap_or(0) as u128).product(),
            "alternating" => (1..=a.first().copied().unwrap_or(0) as u128).product::<u128>() / 2,
            "metacyclic" if a.len() == 3 => a[0] as u128 * a[1] as u128,
            "power_quaternion" if a.len() >= 3 => a[0] as u128 * a[3..].iter().map(|&x| x as u128).product::<u128>(),
            "qgroup" => 2 * a.iter().map(|&x| x as u128).product::<u128>(),
            _ => return Err(Error::UnknownBuiltin(name)),
        };
        total = total.saturating_mul(order);
    }
    Ok(total)
}

pub fn parse_expression(expr: &str) -> Result<Group> {
    parse_expression_with(expr, &Limits::default())
}

pub fn parse_expression_with(expr: &str, limits: &Limits) -> Result<Group> {
    limits.check_order(expression_order(expr)?)?;
    let mut acc: Option<Group> = None;
    for (name, args) in split_terms(expr)? {
        let g = build_term(&name, &args, expr)?;
        acc = Some(match acc {
            None => g,
            Some(prev) => direct_product_with(&prev, &g, limits)?,
        });
    }
    acc.ok_or_else(|| Error::UnknownBuiltin(expr.to_string()))
}

fn build_term(name: &str, args: &[i64], expr: &str) -> Result<Group> {
    match name {
        "cyclic" => {
            arity(args, 1, name)?;
            cyclic(positive(args, expr)?[0])
        }
        "elementary_abelian" => {
            arity(args, 2, name)?;
            let a = positive(args, expr)?;
            elementary_abelian(a[0], a[1])
        }
        "abelian" => abelian(&positive(args, expr)?),
        "dihedral" => {
            arity(args, 1, name)?;
            dihedral(positive(args, expr)?[0])
        }
        "quaternion" | "generalized_quaternion" => {
            arity(args, 1, name)?;
            generalized_quaternion(positive(args, expr)?[0])
        }
        "symmetric" => {
            arity(args, 1, name)?;
            symmetric(positive(args, expr)?[0])
        }
        "alternating" => {
            arity(args, 1, name)?;
            alternating(positive(args, expr)?[0])
        }
        "metacyclic" => {
            arity(args, 3, name)?;
            let a = positive(&args[..2], expr)?;
            metacyclic(a[0], a[1], args[2])
        }
        "power_quaternion" => {
            if args.len() < 4 {
                return Err(Error::BadParams("power_quaternion needs q, ea, eb and factor orders".into()));
            }
            let q = positive(&args[..1], expr)?[0];
            let a = abelian(&positive(&args[3..], expr)?)?;
            power_by_quaternion(&a, q, args[1], args[2])
        }
        "qgroup" => {
            let orders = positive(args, expr)?;
            if orders.is_empty() || orders[0] % 2 != 0 {
                return Err(Error::BadParams("qgroup needs an even first factor".into()));
            }
            let a = abelian(&orders)?;
            let rest: usize = orders[1..].iter().product();
            q_group(&a, orders[0] / 2 * rest)
        }
        _ => Err(Error::UnknownBuiltin(name.to_string())),
    }
}

pub fn cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::BadParams("cyclic group of order 0".into()));
    }
    Limits::default().check_order(n as u128)?;
    let table = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
    Ok(Group::from_trusted(n, table, None))
}

/// `C_{n₁} × … × C_{n_k}` in mixed radix; empty input gives the trivial group.
pub fn abelian(orders: &[usize]) -> Result<Group> {
    let mut g = cyclic(1)?;
    for &n in orders {
        g = direct_product_with(&g, &cyclic(n)?, &Limits::default())?;
    }
    if orders.len() == 1 {
        return cyclic(orders[0]);
    }
    // strip the leading trivial factor from the names
    let names = (0..g.order()).map(|x| mixed_radix_name(x, orders)).collect();
    g.with_names(names)
}

fn mixed_radix_name(mut x: usize, orders: &[usize]) -> String {
    let mut digits = vec![0; orders.len()];
    for (i, &n) in orders.iter().enumerate().rev() {
        digits[i] = x % n;
        x /= n;
    }
    format!("({})", digits.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","))
}

/// Every abelian `p`-group of order at most `max_order`, one per partition
/// of the exponent, named like `C4xC2`.
pub fn abelian_p_groups(p: usize, max_order: usize) -> Result<Vec<(String, Group)>> {
    if !is_prime(p as u64) {
        return Err(Error::BadParams(format!("{p} is not prime")));
    }
    let mut out = Vec::new();
    let mut k = 1;
    while p.pow(k) <= max_order {
        for parts in partitions(k as usize, k as usize) {
            let orders: Vec<usize> = parts.iter().map(|&e| p.pow(e as u32)).collect();
            let name = orders.iter().map(|o| format!("C{o}")).collect::<Vec<_>>().join("x");
            out.push((name, abelian(&orders)?));
        }
        k += 1;
    }
    Ok(out)
}

/// Partitions of `n` into parts of size at most `max`, largest part first.
fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn elementary_abelian(p: usize, k: usize) -> Result<Group> {
    if !is_prime(p as u64) {
        return Err(Error::BadParams(format!("{p} is not prime")));
    }
    abelian(&vec![p; k])
}

/// Dihedral group of order `n`; element `r^i s^e` sits at `i + (n/2)·e`.
pub fn dihedral(n: usize) -> Result<Group> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::BadParams(format!("dihedral order {n} must be even")));
    }
    Limits::default().check_order(n as u128)?;
    let m = n / 2;
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        let (i, e) = (a % m, a / m);
        for b in 0..n {
            let (j, f) = (b % m, b / m);
            let rot = if e == 0 { (i + j) % m } else { (i + m - j) % m };
            table.push((rot + m * ((e + f) % 2)) as u32);
        }
    }
    let names = (0..n).map(|a| format!("r{}{}", a % m, if a >= m { "s" } else { "" })).collect();
    Ok(Group::from_trusted(n, table, Some(names)))
}

/// Generalized quaternion group of order `n = 2^m`, `m ≥ 3`:
/// `⟨a, b | a^{n/2}, b² = a^{n/4}, b⁻¹ab = a⁻¹⟩`, with `a^i b^e` at `i + (n/2)·e`.
pub fn generalized_quaternion(n: usize) -> Result<Group> {
    if n < 8 || !n.is_power_of_two() {
        return Err(Error::BadParams(format!("generalized quaternion order {n} must be 2^m with m >= 3")));
    }
    Limits::default().check_order(n as u128)?;
    let m = n / 2;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (i, e) = (x % m, x / m);
        for y in 0..n {
            let (j, f) = (y % m, y / m);
            let v = match (e, f) {
                (0, _) => (i + j) % m + m * f,
                (_, 0) => (i + m - j) % m + m,
                _ => (i + m - j + m / 2) % m,
            };
            table.push(v as u32);
        }
    }
    let names = (0..n).map(|x| format!("a{}{}", x % m, if x >= m { "b" } else { "" })).collect();
    Ok(Group::from_trusted(n, table, Some(names)))
}

/// All permutations of `0..n`, lexicographic, with `a·b` meaning "apply `a`, then `b`".
pub fn symmetric(n: usize) -> Result<Group> {
    if n == 0 || n > 5 {
        return Err(Error::BadParams(format!("symmetric({n}) is outside 1..=5")));
    }
    let mut perms = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        perms.push(cur.clone());
        if !next_permutation(&mut cur) {
            break;
        }
    }
    Ok(group_from_permutations(perms))
}

pub fn alternating(n: usize) -> Result<Group> {
    if n == 0 || n > 5 {
        return Err(Error::BadParams(format!("alternating({n}) is outside 1..=5")));
    }
    let mut perms = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        if is_even(&cur) {
            perms.push(cur.clone());
        }
        if !next_permutation(&mut cur) {
            break;
        }
    }
    Ok(group_from_permutations(perms))
}

fn is_even(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Table of a closed set of permutations; the identity must come first.
pub(crate) fn group_from_permutations(perms: Vec<Vec<usize>>) -> Group {
    let n = perms.len();
    let index: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut table = Vec::with_capacity(n * n);
    let mut buf = vec![0usize; perms.first().map_or(0, Vec::len)];
    for a in &perms {
        for b in &perms {
            for (k, slot) in buf.iter_mut().enumerate() {
                *slot = b[a[k]];
            }
            table.push(index[buf.as_slice()] as u32);
        }
    }
    let names = perms.iter().map(|p| format!("{p:?}")).collect();
    Group::from_trusted(n, table, Some(names))
}

/// `⟨A, b⟩` with `[G:A] = 2`, `b² = t` and `x^b = x⁻¹` on the abelian group `A`.
pub fn q_group(a: &Group, t: usize) -> Result<Group> {
    if !a.is_abelian() {
        return Err(Error::BadParams("q_group needs an abelian group".into()));
    }
    if t >= a.order() || a.element_order(t) != 2 {
        return Err(Error::BadParams(format!("element {t} is not an involution")));
    }
    let m = a.order();
    let n = 2 * m;
    Limits::default().check_order(n as u128)?;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (xa, e) = (x % m, x / m);
        for y in 0..n {
            let (ya, f) = (y % m, y / m);
            let v = match (e, f) {
                (0, _) => a.mul(xa, ya) + m * f,
                (_, 0) => a.mul(xa, a.inv(ya)) + m,
                _ => a.mul(a.mul(xa, a.inv(ya)), t),
            };
            table.push(v as u32);
        }
    }
    let names = (0..n).map(|x| format!("{}{}", a.name(x % m), if x >= m { "b" } else { "" })).collect();
    Ok(Group::from_trusted(n, table, Some(names)))
}

/// `C_m ⋊ C_n` where the generator of `C_n` acts by `x ↦ x^r`.
pub fn metacyclic(m: usize, n: usize, r: i64) -> Result<Group> {
    let cm = cyclic(m)?;
    let cn = cyclic(n)?;
    let r = r.rem_euclid(m as i64) as usize;
    if gcd(r, m) != 1 {
        return Err(Error::BadParams(format!("x -> x^{r} is not an automorphism of C{m}")));
    }
    let map = GroupMap::from_fn(m, |x| x * r % m);
    let action = Action::from_generators(&cn, &cm, &[(1 % n, map)])
        .map_err(|_| Error::BadParams(format!("{r}^{n} is not 1 mod {m}")))?;
    semidirect_product_with(&cm, &cn, &action, &Limits::default())
}

/// `A ⋊ Q` for abelian `A` and generalized quaternion `Q` of order `q`,
/// with the generators `a`, `b` of `Q` acting as the power maps `x^ea`, `x^eb`.
pub fn power_by_quaternion(a: &Group, q: usize, ea: i64, eb: i64) -> Result<Group> {
    if !a.is_abelian() {
        return Err(Error::BadParams("power_quaternion needs an abelian group".into()));
    }
    let quat = generalized_quaternion(q)?;
    let power = |e: i64| GroupMap::from_fn(a.order(), |x| a.pow(x, e));
    for e in [ea, eb] {
        if !power(e).is_automorphism(a) {
            return Err(Error::BadParams(format!("x -> x^{e} is not an automorphism")));
        }
    }
    let action = Action::from_generators(&quat, a, &[(1, power(ea)), (q / 2, power(eb))])?;
    semidirect_product_with(a, &quat, &action, &Limits::default())
}

/// Closure of permutation generators of a common degree.
pub fn permutation_group(degree: usize, gens: &[Vec<usize>], cap: usize) -> Result<Group> {
    for (i, g) in gens.iter().enumerate() {
        let mut seen = vec![false; degree];
        if g.len() != degree || g.iter().any(|&v| v >= degree || std::mem::replace(&mut seen[v], true)) {
            return Err(Error::NotPermutation(i));
        }
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut perms = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut i = 0;
    while i < perms.len() {
        for g in gens {
            let next: Vec<usize> = (0..degree).map(|k| g[perms[i][k]]).collect();
            if !index.contains_key(&next) {
                if perms.len() >= cap {
                    return Err(Error::OrderCap { order: perms.len() as u128 + 1, cap });
                }
                index.insert(next.clone(), perms.len());
                perms.push(next);
            }
        }
        i += 1;
    }
    Ok(group_from_permutations(perms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn every_manifest_entry_builds_and_is_a_group() {
        let mut names = std::collections::HashSet::new();
        for &(name, expr) in MANIFEST {
            assert!(names.insert(name), "duplicate {name}");
            let g = parse_expression(expr).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(g.order() as u128, expression_order(expr).unwrap(), "{name}");
            if g.order() <= 64 {
                let rows = g.rows();
                Group::from_rows(&rows, None).unwrap_or_else(|e| panic!("{name}: {e}"));
            }
        }
    }

    #[test]
    fn q_group_of_c4_is_q8() {
        let c4 = cyclic(4).unwrap();
        let g = q_group(&c4, 2).unwrap();
        assert!(are_isomorphic(&g, &generalized_quaternion(8).unwrap()));
        assert!(matches!(q_group(&c4, 1), Err(Error::BadParams(_))));
    }

    #[test]
    fn small_cases() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        let q16 = generalized_quaternion(16).unwrap();
        assert_eq!(q16.order(), 16);
        assert_eq!(q16.element_orders().iter().filter(|&&o| o == 2).count(), 1);
        assert!(symmetric(6).is_err());
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert!(metacyclic(7, 4, 2).is_err());
    }

    #[test]
    fn resolve_names_and_expressions() {
        assert_eq!(resolve("Q8xC4").unwrap().order(), 32);
        let twos = abelian_p_groups(2, 32).unwrap();
        assert_eq!(twos.len(), 1 + 2 + 3 + 5 + 7);
        assert_eq!(abelian_p_groups(3, 81).unwrap().len(), 1 + 2 + 3 + 5);
        assert_eq!(resolve("cyclic(5)*dihedral(6)").unwrap().order(), 30);
        assert!(matches!(resolve("nonsense(3)"), Err(Error::UnknownBuiltin(_))));
    }

    #[test]
    fn permutation_closure() {
        let s3 = permutation_group(3, &[vec![1, 2, 0], vec![1, 0, 2]], 100).unwrap();
        assert_eq!(s3.order(), 6);
        let c4 = permutation_group(4, &[vec![1, 2, 3, 0]], 100).unwrap();
        assert!(are_isomorphic(&c4, &cyclic(4).unwrap()));
        assert_eq!(permutation_group(3, &[vec![0, 0, 1]], 100).unwrap_err(), Error::NotPermutation(0));
        assert!(matches!(
            permutation_group(5, &[vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]], 50),
            Err(Error::OrderCap { .. })
        ));
    }
}
