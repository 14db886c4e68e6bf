//! Pair predicates: equal order, Camina, AB, Frobenius kernels and
//! Frobenius-Wielandt triples, plus the module induced on `P/Phi(P)`.

use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arith::{gcd, is_prime, prime_divisors, prime_power_decompose, primes_subset};
use crate::error::{Error, Result};
use crate::grp::{AutomorphismAction, Elem, Group, Subgroup};
use crate::structure::{
    common_prime, fitting_subgroup, frattini_of_p_group, is_cyclic_or_generalized_quaternion, is_nilpotent,
    sylow_subgroup,
};

/// Rejects `N` that is trivial, the whole group, or not normal.
pub fn check_pair(n: &Subgroup) -> Result<()> {
    if n.is_trivial() || n.is_whole() {
        return Err(Error::TrivialOrImproperN);
    }
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    Ok(())
}

/// Smallest `m >= 1` with `x^m` in `N`.
pub fn order_mod(n: &Subgroup, x: Elem) -> u32 {
    let g = n.group();
    let mut y = x;
    let mut m = 1;
    while !n.contains(y) {
        y = g.mul(y, x);
        m += 1;
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetRecord {
    /// Least element of the coset.
    pub rep: Elem,
    /// Order of `xN` in `G/N`.
    pub quotient_order: u32,
    /// Element orders occurring in `xN`.
    pub orders: BTreeSet<u32>,
}

impl CosetRecord {
    pub fn is_uniform(&self, g: &Group) -> bool {
        self.orders.len() == 1 && self.orders.contains(&g.element_order(self.rep))
    }
}

/// Element orders seen in each nontrivial coset of `N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetOrderProfile {
    pub cosets: Vec<CosetRecord>,
}

impl CosetOrderProfile {
    pub fn compute(n: &Subgroup) -> CosetOrderProfile {
        let g = n.group();
        g.element_orders();
        let reps: Vec<Elem> = n.left_transversal().into_iter().filter(|&x| !n.contains(x)).collect();
        let cosets = reps
            .par_iter()
            .map(|&x| {
                let orders = n.elements().iter().map(|&m| g.element_order(g.mul(x, m))).collect();
                CosetRecord { rep: x, quotient_order: order_mod(n, x), orders }
            })
            .collect();
        CosetOrderProfile { cosets }
    }

    /// First coset holding two distinct orders.
    pub fn first_mixed(&self) -> Option<&CosetRecord> {
        self.cosets.iter().find(|c| c.orders.len() > 1)
    }

    /// The common order of all outside elements, when there is one.
    pub fn constant_order(&self) -> Option<u32> {
        let mut all = self.cosets.iter().flat_map(|c| c.orders.iter().copied());
        let first = all.next()?;
        all.all(|o| o == first).then_some(first)
    }
}

/// Equal order test with the coset profile as evidence.
pub fn is_equal_order_pair(n: &Subgroup) -> Result<(bool, CosetOrderProfile)> {
    check_pair(n)?;
    let profile = CosetOrderProfile::compute(n);
    let ok = profile.cosets.iter().all(|c| c.orders.len() == 1);
    Ok((ok, profile))
}

/// Predicate-only equal order test with early exit.
pub fn equal_order(n: &Subgroup) -> Result<bool> {
    check_pair(n)?;
    Ok(equal_order_witness(n).is_none())
}

/// A coset rep `x` and `n` in `N` with `o(xn) != o(x)`, if any.
pub fn equal_order_witness(n: &Subgroup) -> Option<(Elem, Elem)> {
    let g = n.group();
    let orders = g.element_orders();
    let reps: Vec<Elem> = n.left_transversal().into_iter().filter(|&x| !n.contains(x)).collect();
    reps.par_iter()
        .find_map_first(|&x| {
            let o = orders[x as usize];
            n.elements().iter().find(|&&m| orders[g.mul(x, m) as usize] != o).map(|&m| (x, m))
        })
}

/// Every coset `xN` lies in the class of `x`.
pub fn is_camina_pair(n: &Subgroup) -> Result<bool> {
    check_pair(n)?;
    let g = n.group();
    let class_of = &g.conjugacy_classes().class_of;
    Ok(outside_reps(n)
        .par_iter()
        .all(|&x| n.elements().iter().all(|&m| class_of[g.mul(x, m) as usize] == class_of[x as usize])))
}

/// Every coset `xN` lies in the union of the classes of `x` and `x^-1`.
pub fn is_ab_pair(n: &Subgroup) -> Result<bool> {
    check_pair(n)?;
    let g = n.group();
    let class_of = &g.conjugacy_classes().class_of;
    Ok(outside_reps(n).par_iter().all(|&x| {
        let (a, b) = (class_of[x as usize], class_of[g.inv(x) as usize]);
        n.elements().iter().all(|&m| {
            let c = class_of[g.mul(x, m) as usize];
            c == a || c == b
        })
    }))
}

fn outside_reps(n: &Subgroup) -> Vec<Elem> {
    n.left_transversal().into_iter().filter(|&x| !n.contains(x)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingleCoset {
    pub equal_order: bool,
    pub order_x: u32,
    pub order_mod_n: u32,
    /// When `equal_order`: `pi(o(x))` is inside `pi(o(xN))` and `C_N(x)`
    /// has no element of prime order outside `pi(o(xN))`.
    pub divisibility_ok: Option<bool>,
}

/// Whether all of `xN` shares the order of `x`, with the prime-divisor consequences re-checked.
pub fn single_coset_equal_order(n: &Subgroup, x: Elem) -> Result<SingleCoset> {
    if n.contains(x) {
        return Err(Error::XInsideN);
    }
    let g = n.group();
    let o = g.element_order(x);
    let m = order_mod(n, x);
    let equal = n.elements().iter().all(|&y| g.element_order(g.mul(x, y)) == o);
    let divisibility_ok = equal.then(|| {
        let pi_ok = primes_subset(o as u64, m as u64);
        let cent_ok = n.elements().iter().all(|&y| {
            let r = g.element_order(y) as u64;
            if !is_prime(r) || m as u64 % r == 0 {
                return true;
            }
            g.mul(x, y) != g.mul(y, x)
        });
        pi_ok && cent_ok
    });
    Ok(SingleCoset { equal_order: equal, order_x: o, order_mod_n: m, divisibility_ok })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrobeniusCheck {
    /// `C_N(x) = 1` for every `x` outside `N`.
    pub semiregular: bool,
    pub coprime: bool,
    pub complement_order: Option<usize>,
}

impl FrobeniusCheck {
    pub fn is_frobenius(&self) -> bool {
        self.semiregular && self.complement_order.is_some()
    }
}

/// `G` is a Frobenius group with kernel `N`.
pub fn is_frobenius_with_kernel(n: &Subgroup) -> Result<bool> {
    Ok(frobenius_check(n)?.is_frobenius())
}

pub fn frobenius_check(n: &Subgroup) -> Result<FrobeniusCheck> {
    check_pair(n)?;
    let g = n.group();
    let coprime = gcd(n.order() as u64, n.index() as u64) == 1;
    // C_N(x^g) = C_N(x)^g, so one element per class suffices
    let semiregular = g.conjugacy_classes().classes.par_iter().all(|c| {
        let x = c[0];
        n.contains(x) || n.elements().iter().all(|&y| y == g.identity() || g.mul(x, y) != g.mul(y, x))
    });
    let complement_order = if semiregular { find_complement(n).map(|h| h.order()) } else { None };
    Ok(FrobeniusCheck { semiregular, coprime, complement_order })
}

/// A complement to `N`, grown greedily in element order.
///
/// Exact when `N` is a nilpotent Hall subgroup: every subgroup meeting `N` trivially
/// then lies in some complement, so the greedy growth never gets stuck.
pub fn find_complement(n: &Subgroup) -> Option<Subgroup> {
    let g = n.group();
    let target = n.index();
    let mut h = Subgroup::trivial(g);
    for y in g.elements() {
        if h.order() == target {
            break;
        }
        if h.contains(y) || n.contains(y) {
            continue;
        }
        let mut gens = h.generators().to_vec();
        gens.push(y);
        let cand = Subgroup::closure(g, &gens);
        if cand.order() <= target && cand.elements().iter().all(|&z| z == g.identity() || !n.contains(z)) {
            h = cand;
        }
    }
    (h.order() == target).then_some(h)
}

/// `H` proper nontrivial, `L` proper normal in `H`, and `H ∩ H^g ⊆ L` for all `g` outside `H`.
pub fn is_frobenius_wielandt_triple(h: &Subgroup, l: &Subgroup) -> Result<bool> {
    if h.is_trivial() || h.is_whole() {
        return Err(Error::InvalidParameter("H must be proper and nontrivial".into()));
    }
    if !l.is_normal_in(h) {
        return Err(Error::LNotNormalInH);
    }
    if l.order() == h.order() {
        return Err(Error::LNotProper);
    }
    let g = h.group();
    let reps: Vec<Elem> = h.right_transversal().into_iter().filter(|&x| !h.contains(x)).collect();
    Ok(reps.par_iter().all(|&x| {
        let xi = g.inv(x);
        h.elements().iter().all(|&y| l.contains(y) || !h.contains(g.conj(y, xi)))
    }))
}

/// `G/N` acting by conjugation on `V = P/Phi(P)` for the Sylow `p`-subgroup `P` of `N`.
pub struct ModuleAction {
    pub quotient: Arc<Group>,
    pub module: Arc<Group>,
    pub action: Arc<AutomorphismAction>,
    pub p: u64,
}

impl std::fmt::Debug for ModuleAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ModuleAction(G/N of order {} on module of order {})", self.quotient.order(), self.module.order())
    }
}

pub fn module_action_from_pair(n: &Subgroup, p: u64) -> Result<ModuleAction> {
    if !is_nilpotent(n) {
        return Err(Error::NNotNilpotent);
    }
    if n.order() as u64 % p != 0 || !is_prime(p) {
        return Err(Error::PDoesNotDivide(p));
    }
    let g = n.group();
    let sylow = sylow_subgroup(n, p);
    let (pg, back) = sylow.as_group();
    let phi = frattini_of_p_group(&Subgroup::whole(&pg))?;
    let (v, v_proj) = phi.quotient()?;
    let (_, v_coset_of, v_reps) = v.quotient_parent().expect("quotient realization");
    debug_assert_eq!(v_coset_of, &v_proj[..]);
    let (q, _) = n.quotient()?;
    let (_, _, q_reps) = q.quotient_parent().expect("quotient realization");
    let lifts: Vec<Elem> = q.generators().iter().map(|&c| q_reps[c as usize]).collect();
    let v_reps = v_reps.to_vec();
    let action = AutomorphismAction::from_fn(q.clone(), v.clone(), |i, vv| {
        let lift = lifts[i];
        let x = back[v_reps[vv as usize] as usize];
        let y = g.conj(x, g.inv(lift));
        let pos = back.binary_search(&y).expect("P is normal in G");
        v_proj[pos]
    })?;
    Ok(ModuleAction { quotient: q, module: v, action, p })
}

/// Every nontrivial `p'`-element of the acting group fixes only the identity.
pub fn is_p_prime_semiregular(action: &AutomorphismAction, p: u64) -> Result<bool> {
    let v = action.target();
    let elementary = v.order() == 1
        || (crate::arith::is_p_power(v.order() as u64, p)
            && v.is_abelian()
            && v.element_orders().iter().all(|&o| o == 1 || o as u64 == p));
    if !elementary {
        return Err(Error::VNotElementaryAbelian);
    }
    let s = action.acting();
    Ok(s.elements().all(|h| {
        let o = s.element_order(h) as u64;
        o == 1 || o % p == 0 || action.fixed_points(h).len() == 1
    }))
}

/// A theorem-dependent value, or a marker that its hypothesis does not hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Conditional<T> {
    Value(T),
    HypothesisNotMet,
}

impl<T> Conditional<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Conditional::Value(v) => Some(v),
            Conditional::HypothesisNotMet => None,
        }
    }
}

impl<T: Serialize> Serialize for Conditional<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Conditional::Value(v) => v.serialize(s),
            Conditional::HypothesisNotMet => s.serialize_str("hypothesis_not_met"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FittingRelation {
    /// `N = F(G)`.
    Equal,
    /// `N < F(G)`.
    NInF,
    /// `F(G) < N`.
    FInN,
    Neither,
}

pub fn fitting_relation(n: &Subgroup, f: &Subgroup) -> FittingRelation {
    match (n.is_subgroup_of(f), f.is_subgroup_of(n)) {
        (true, true) => FittingRelation::Equal,
        (true, false) => FittingRelation::NInF,
        (false, true) => FittingRelation::FInN,
        (false, false) => FittingRelation::Neither,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetSummary {
    pub cosets: usize,
    pub quotient_orders: BTreeSet<u32>,
    pub outside_orders: BTreeSet<u32>,
    pub mixed_cosets: usize,
    /// Representative and two distinct orders from the first mixed coset.
    pub witness: Option<(String, u32, u32)>,
}

/// Full classification of one pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub order_g: usize,
    pub order_n: usize,
    pub index: usize,
    pub is_equal_order: bool,
    pub is_camina: bool,
    pub is_ab: bool,
    pub fitting_relation: FittingRelation,
    pub order_f: usize,
    pub nilpotent_n: bool,
    pub theorem_b_sylow_ok: Conditional<bool>,
    pub theorem_d_prime: Conditional<Option<u64>>,
    pub fw_triple_ok: Conditional<bool>,
    pub frobenius_kernel: bool,
    pub coset_profile: CosetSummary,
}

pub fn classify_pair(n: &Subgroup) -> Result<PairReport> {
    let (eq, profile) = is_equal_order_pair(n)?;
    let g = n.group();
    let f = fitting_subgroup(&Subgroup::whole(g));
    let nilpotent_n = is_nilpotent(n);
    let theorem_b_sylow_ok = if eq && nilpotent_n {
        Conditional::Value(nilpotent_pair_sylows_ok(n)?)
    } else {
        Conditional::HypothesisNotMet
    };
    let (theorem_d_prime, fw_triple_ok) = if eq && !nilpotent_n {
        let p = outside_prime(n);
        let fw = match p {
            Some(p) => Conditional::Value(frobenius_wielandt_for_prime(n, p)?),
            None => Conditional::HypothesisNotMet,
        };
        (Conditional::Value(p), fw)
    } else {
        (Conditional::HypothesisNotMet, Conditional::HypothesisNotMet)
    };
    let mixed = profile.first_mixed();
    let coset_profile = CosetSummary {
        cosets: profile.cosets.len(),
        quotient_orders: profile.cosets.iter().map(|c| c.quotient_order).collect(),
        outside_orders: profile.cosets.iter().flat_map(|c| c.orders.iter().copied()).collect(),
        mixed_cosets: profile.cosets.iter().filter(|c| c.orders.len() > 1).count(),
        witness: mixed.map(|c| {
            let mut it = c.orders.iter();
            (g.format_element(c.rep), *it.next().unwrap(), *it.next().unwrap())
        }),
    };
    Ok(PairReport {
        order_g: g.order(),
        order_n: n.order(),
        index: n.index(),
        is_equal_order: eq,
        is_camina: is_camina_pair(n)?,
        is_ab: is_ab_pair(n)?,
        fitting_relation: fitting_relation(n, &f),
        order_f: f.order(),
        nilpotent_n,
        theorem_b_sylow_ok,
        theorem_d_prime,
        fw_triple_ok,
        frobenius_kernel: is_frobenius_with_kernel(n)?,
        coset_profile,
    })
}

/// Every Sylow subgroup of `G/N` is cyclic or generalized quaternion.
pub fn quotient_sylows_cyclic_or_quaternion(n: &Subgroup) -> Result<bool> {
    let (q, _) = n.quotient()?;
    let whole = Subgroup::whole(&q);
    for p in prime_divisors(q.order() as u64) {
        if !is_cyclic_or_generalized_quaternion(&sylow_subgroup(&whole, p))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The prime `p` for which all elements outside `N` are `p`-elements.
pub fn outside_prime(n: &Subgroup) -> Option<u64> {
    let g = n.group();
    common_prime(g, g.elements().filter(|&x| !n.contains(x)))
}

/// Sylow `q`-subgroups of `G/N` are cyclic or generalized quaternion for every
/// prime `q` such that `N` is not a `q`-group.
pub fn nilpotent_pair_sylows_ok(n: &Subgroup) -> Result<bool> {
    let (q, _) = n.quotient()?;
    let whole = Subgroup::whole(&q);
    let n_prime = prime_power_decompose(n.order() as u64).map(|(p, _)| p);
    for p in prime_divisors(q.order() as u64) {
        if Some(p) == n_prime {
            continue;
        }
        if !is_cyclic_or_generalized_quaternion(&sylow_subgroup(&whole, p))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(G, P, P ∩ N)` for a Sylow `p`-subgroup `P` of `G`.
pub fn frobenius_wielandt_for_prime(n: &Subgroup, p: u64) -> Result<bool> {
    let g = n.group();
    let sylow = sylow_subgroup(&Subgroup::whole(g), p);
    let l = sylow.intersection(n);
    is_frobenius_wielandt_triple(&sylow, &l)
}
