//! Structural invariants: centers, series, radicals, Sylow and Omega subgroups.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use serde::Serialize;

use crate::arith::{is_prime, lcm, p_part, prime_divisors, prime_power_base};
use crate::error::{Error, Result};
use crate::grp::{BitSet, Elem, Group, Subgroup};

/// Exact normal-subgroup enumeration is only attempted up to this order.
pub const NORMAL_ENUMERATION_MAX: usize = 10_000;

pub fn center(g: &Arc<Group>) -> Subgroup {
    center_of(&Subgroup::whole(g))
}

/// `Z(H)` for a subgroup `H`.
pub fn center_of(h: &Subgroup) -> Subgroup {
    centralizer_in(h, h.generators())
}

/// `C_G(S)`.
pub fn centralizer(g: &Arc<Group>, set: &[Elem]) -> Subgroup {
    centralizer_in(&Subgroup::whole(g), set)
}

/// `C_H(S)`: elements of `H` commuting with every element of `S`.
pub fn centralizer_in(h: &Subgroup, set: &[Elem]) -> Subgroup {
    let g = h.group();
    let mut members = BitSet::new(g.order());
    for &x in h.elements() {
        if set.iter().all(|&s| g.mul(x, s) == g.mul(s, x)) {
            members.insert(x);
        }
    }
    Subgroup::from_closed_set(g, members)
}

/// `N_G(H)`.
pub fn normalizer(h: &Subgroup) -> Subgroup {
    let g = h.group();
    let mut members = BitSet::new(g.order());
    for x in g.elements() {
        if h.generators().iter().all(|&y| h.contains(g.conj(y, x))) {
            members.insert(x);
        }
    }
    Subgroup::from_closed_set(g, members)
}

/// Every normal subgroup, by joining normal closures of conjugacy classes.
///
/// Sorted by order, then by element list.
pub fn normal_subgroups(g: &Arc<Group>) -> Result<Vec<Subgroup>> {
    if g.order() > NORMAL_ENUMERATION_MAX {
        return Err(Error::ElementCapExceeded { cap: NORMAL_ENUMERATION_MAX });
    }
    let classes = &g.conjugacy_classes().classes;
    let mut minimal: Vec<Subgroup> = Vec::new();
    let mut seen_min: HashSet<BitSet> = HashSet::new();
    for c in classes.iter().filter(|c| c[0] != g.identity()) {
        let n = Subgroup::closure(g, c);
        if seen_min.insert(n.members().clone()) {
            minimal.push(n);
        }
    }
    let trivial = Subgroup::trivial(g);
    let mut seen: HashSet<BitSet> = HashSet::from([trivial.members().clone()]);
    let mut all = vec![trivial];
    let mut i = 0;
    while i < all.len() {
        let n = all[i].clone();
        i += 1;
        if n.is_whole() {
            continue;
        }
        for m in &minimal {
            if m.is_subgroup_of(&n) {
                continue;
            }
            let j = n.join(m);
            if seen.insert(j.members().clone()) {
                all.push(j);
            }
        }
    }
    all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    for n in &all {
        debug_assert!(n.is_normal());
    }
    Ok(all)
}

/// Keeps the candidates that are normal, deduplicated and sorted like [`normal_subgroups`].
pub fn normal_subgroups_from_candidates(candidates: Vec<Subgroup>) -> Vec<Subgroup> {
    let mut seen = HashSet::new();
    let mut out: Vec<Subgroup> =
        candidates.into_iter().filter(|n| n.is_normal() && seen.insert(n.members().clone())).collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    out
}

/// `[H, H]` as a subgroup of the ambient group.
pub fn derived_subgroup(h: &Subgroup) -> Subgroup {
    let g = h.group();
    let gens = h.generators();
    let mut seeds = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            seeds.push(g.commutator(a, b));
        }
    }
    Subgroup::normal_closure(g, &seeds, gens)
}

/// `H, H', H'', ...` until it stabilizes.
pub fn derived_series(h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let next = derived_subgroup(series.last().unwrap());
        if next.order() == series.last().unwrap().order() {
            return series;
        }
        series.push(next);
    }
}

pub fn solvable_residual(h: &Subgroup) -> Subgroup {
    derived_series(h).pop().unwrap()
}

pub fn is_solvable(h: &Subgroup) -> bool {
    solvable_residual(h).is_trivial()
}

pub fn is_perfect(g: &Arc<Group>) -> bool {
    derived_subgroup(&Subgroup::whole(g)).is_whole()
}

/// `H = g_1 >= g_2 = [g_1, H] >= ...` until it stabilizes.
pub fn lower_central_series(h: &Subgroup) -> Vec<Subgroup> {
    let g = h.group();
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().unwrap();
        let mut seeds = Vec::new();
        for &a in last.generators() {
            for &b in h.generators() {
                seeds.push(g.commutator(a, b));
            }
        }
        let next = Subgroup::normal_closure(g, &seeds, h.generators());
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_nilpotent(h: &Subgroup) -> bool {
    lower_central_series(h).last().unwrap().is_trivial()
}

/// A Sylow `p`-subgroup of `H`, grown one factor of `p` at a time in element order.
pub fn sylow_subgroup(h: &Subgroup, p: u64) -> Subgroup {
    let g = h.group();
    let target = p_part(h.order() as u64, p) as usize;
    let mut sylow = Subgroup::trivial(g);
    while sylow.order() < target {
        let y = h
            .elements()
            .iter()
            .copied()
            .find(|&y| {
                !sylow.contains(y)
                    && sylow.contains(g.pow(y, p as i64))
                    && sylow.generators().iter().all(|&s| sylow.contains(g.conj(s, y)))
            })
            .expect("Cauchy: N_H(P)/P has an element of order p");
        let mut gens = sylow.generators().to_vec();
        gens.push(y);
        sylow = Subgroup::closure(g, &gens);
    }
    sylow
}

/// `O_p(H)`: the core in `H` of a Sylow `p`-subgroup.
pub fn p_core(h: &Subgroup, p: u64) -> Subgroup {
    let g = h.group();
    let sylow = sylow_subgroup(h, p);
    let mut current: Vec<Elem> = sylow.elements().to_vec();
    let mut set = sylow.members().clone();
    loop {
        let next: Vec<Elem> = current
            .iter()
            .copied()
            .filter(|&c| h.generators().iter().all(|&x| set.contains(g.conj(c, x))))
            .collect();
        if next.len() == current.len() {
            break;
        }
        let mut s = BitSet::new(g.order());
        for &c in &next {
            s.insert(c);
        }
        set = s;
        current = next;
    }
    Subgroup::from_closed_set(g, set)
}

/// `F(H)`: the product of the `O_p(H)`.
pub fn fitting_subgroup(h: &Subgroup) -> Subgroup {
    let mut f = Subgroup::trivial(h.group());
    for p in prime_divisors(h.order() as u64) {
        f = f.join(&p_core(h, p));
    }
    f
}

pub fn fitting_height(g: &Arc<Group>) -> Result<usize> {
    let whole = Subgroup::whole(g);
    if !is_solvable(&whole) {
        return Err(Error::NotSolvable);
    }
    let mut height = 0;
    let mut current = g.clone();
    while current.order() > 1 {
        let f = fitting_subgroup(&Subgroup::whole(&current));
        height += 1;
        current = f.quotient()?.0;
    }
    Ok(height)
}

/// Largest solvable normal subgroup, as an ascending chain of Fitting preimages.
pub fn solvable_radical(g: &Arc<Group>) -> Subgroup {
    let mut radical = Subgroup::trivial(g);
    loop {
        let (q, proj) = radical.quotient().expect("radical terms are normal");
        let f = fitting_subgroup(&Subgroup::whole(&q));
        if f.is_trivial() {
            return radical;
        }
        radical = Subgroup::preimage(g, &proj, &f);
    }
}

/// Prime of a nontrivial p-group, or `None` for the trivial group.
pub fn p_group_prime(h: &Subgroup) -> Result<Option<u64>> {
    if h.order() == 1 {
        return Ok(None);
    }
    prime_power_base(h.order() as u64).map(Some).ok_or(Error::NotAPGroup)
}

/// `Omega_i(P)`: generated by the elements with `x^(p^i) = 1`.
pub fn omega(h: &Subgroup, i: u32) -> Result<Subgroup> {
    let Some(p) = p_group_prime(h)? else { return Ok(h.clone()) };
    let g = h.group();
    let bound = p.pow(i);
    let seeds: Vec<Elem> =
        h.elements().iter().copied().filter(|&x| bound % g.element_order(x) as u64 == 0).collect();
    Ok(Subgroup::closure(g, &seeds))
}

/// `Phi(P) = P' P^p`, the normal closure of generator commutators and `p`-th powers.
pub fn frattini_of_p_group(h: &Subgroup) -> Result<Subgroup> {
    let Some(p) = p_group_prime(h)? else { return Ok(h.clone()) };
    let g = h.group();
    let gens = h.generators();
    let mut seeds: Vec<Elem> = gens.iter().map(|&x| g.pow(x, p as i64)).collect();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            seeds.push(g.commutator(a, b));
        }
    }
    Ok(Subgroup::normal_closure(g, &seeds, gens))
}

/// Generated by the elements of order divisible by `p^2`.
pub fn hughes_subgroup(h: &Subgroup) -> Result<Subgroup> {
    let Some(p) = p_group_prime(h)? else { return Ok(h.clone()) };
    let g = h.group();
    let seeds: Vec<Elem> =
        h.elements().iter().copied().filter(|&x| g.element_order(x) as u64 % (p * p) == 0).collect();
    Ok(Subgroup::closure(g, &seeds))
}

pub fn exponent_of(h: &Subgroup) -> u64 {
    let g = h.group();
    h.elements().iter().fold(1, |acc, &x| lcm(acc, g.element_order(x) as u64))
}

pub fn is_cyclic(h: &Subgroup) -> bool {
    let g = h.group();
    h.elements().iter().any(|&x| g.element_order(x) as usize == h.order())
}

/// Cyclic for odd `p`; at most one involution for `p = 2`.
pub fn is_cyclic_or_generalized_quaternion(h: &Subgroup) -> Result<bool> {
    match p_group_prime(h)? {
        None => Ok(true),
        Some(2) => {
            let g = h.group();
            Ok(h.elements().iter().filter(|&&x| g.element_order(x) == 2).count() <= 1)
        }
        Some(_) => Ok(is_cyclic(h)),
    }
}

/// Simple iff every nontrivial class has normal closure `G`.
pub fn is_simple(g: &Arc<Group>) -> bool {
    if g.order() == 1 {
        return false;
    }
    g.conjugacy_classes()
        .classes
        .iter()
        .filter(|c| c[0] != g.identity())
        .all(|c| Subgroup::normal_closure(g, &c[..1], g.generators()).is_whole())
}

/// Isomorphism invariants used in place of an isomorphism test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupFingerprint {
    pub order: usize,
    pub order_histogram: BTreeMap<u32, usize>,
    pub derived_order: usize,
    pub center_order: usize,
    /// Class size -> number of classes of that size.
    pub class_sizes: BTreeMap<usize, usize>,
    pub is_perfect: bool,
    pub is_simple: bool,
}

pub fn fingerprint(g: &Arc<Group>) -> GroupFingerprint {
    let whole = Subgroup::whole(g);
    let derived_order = derived_subgroup(&whole).order();
    let mut class_sizes = BTreeMap::new();
    for c in &g.conjugacy_classes().classes {
        *class_sizes.entry(c.len()).or_insert(0) += 1;
    }
    GroupFingerprint {
        order: g.order(),
        order_histogram: g.order_histogram(),
        derived_order,
        center_order: center(g).order(),
        class_sizes,
        is_perfect: derived_order == g.order(),
        is_simple: is_simple(g),
    }
}

/// Elements of `H` whose order is a power of `p` (including the identity).
pub fn is_p_element(g: &Group, x: Elem, p: u64) -> bool {
    p_part(g.element_order(x) as u64, p) == g.element_order(x) as u64
}

/// Prime `p` such that every listed element is a `p`-element, if one exists.
pub fn common_prime(g: &Group, elems: impl Iterator<Item = Elem>) -> Option<u64> {
    let mut prime: Option<u64> = None;
    for x in elems {
        let o = g.element_order(x) as u64;
        if o == 1 {
            continue;
        }
        let base = prime_power_base(o)?;
        match prime {
            None => prime = Some(base),
            Some(p) if p != base => return None,
            _ => {}
        }
    }
    debug_assert!(prime.is_none_or(is_prime));
    prime
}
