//! Theorem harness: sweeps a catalog of `(G, N)` pairs and checks each statement
//! as an implication, recording pass / fail / hypothesis-not-met per pair.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{gcd, is_prime, prime_divisors, prime_power_decompose};
use crate::constructions::*;
use crate::error::{Error, Result};
use crate::grp::{Elem, Group, Subgroup};
use crate::pairs::*;
use crate::structure::*;

pub const SCHEMA_VERSION: u32 = 1;

/// Every statement the harness can check, in report order.
pub const THEOREM_IDS: [&str; 26] = [
    "A",
    "B.a",
    "B.b",
    "D.a",
    "D.b",
    "D.c",
    "P2.4.a",
    "P2.4.b",
    "P2.4.c",
    "P2.4.d",
    "P3.1",
    "P3.2",
    "P3.exp",
    "P3.hughes",
    "P5.1",
    "P5.3",
    "P5.5",
    "L2.1",
    "L2.2",
    "L2.5",
    "L2.6",
    "L6.1",
    "C.partial",
    "IMP.chain",
    "R2.3",
    "T2.trans",
];

/// Resolves a selection such as `["A", "B", "P2.4.c"]`; a bare prefix selects
/// every id below it. An empty selection means all ids.
pub fn select_theorems<S: AsRef<str>>(selection: &[S]) -> Result<Vec<&'static str>> {
    if selection.is_empty() {
        return Ok(THEOREM_IDS.to_vec());
    }
    let mut chosen = BTreeSet::new();
    for s in selection {
        let s = s.as_ref().trim();
        let hits: Vec<usize> = THEOREM_IDS
            .iter()
            .enumerate()
            .filter(|(_, id)| **id == s || id.starts_with(&format!("{s}.")))
            .map(|(i, _)| i)
            .collect();
        if hits.is_empty() {
            return Err(Error::UnknownTheorem { id: s.to_string(), valid: THEOREM_IDS.join(", ") });
        }
        chosen.extend(hits);
    }
    Ok(chosen.into_iter().map(|i| THEOREM_IDS[i]).collect())
}

// -------------------------------------------------------------------
// catalog
// -------------------------------------------------------------------

/// Per-group data shared by every pair of a catalog entry.
#[derive(Default)]
struct EntryCache {
    fitting: OnceLock<Subgroup>,
    solvable: OnceLock<bool>,
    nilpotent: OnceLock<bool>,
    pgroup: OnceLock<Option<u64>>,
    omegas: OnceLock<Option<(Vec<Subgroup>, Vec<Subgroup>)>>,
    center: OnceLock<Subgroup>,
    frobenius: OnceLock<Vec<(Subgroup, Subgroup)>>,
    sylow: Mutex<HashMap<u64, Subgroup>>,
}

/// A group with the normal subgroups to test.
pub struct CatalogEntry {
    pub name: String,
    pub group: Arc<Group>,
    /// Tested subgroups with their labels.
    pub pairs: Vec<(String, Subgroup)>,
    /// All normal subgroups of the group, when enumerated.
    pub lattice: Option<Vec<Subgroup>>,
    /// Theorem ids this entry takes part in; `None` means all.
    pub scope: Option<Vec<&'static str>>,
    cache: EntryCache,
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry").field("name", &self.name).field("pairs", &self.pairs.len()).finish()
    }
}

impl CatalogEntry {
    /// Every proper nontrivial normal subgroup of `group`.
    pub fn exhaustive(name: impl Into<String>, group: Arc<Group>) -> Result<CatalogEntry> {
        let lattice = normal_subgroups(&group)?;
        let pairs = lattice
            .iter()
            .enumerate()
            .filter(|(_, n)| !n.is_trivial() && !n.is_whole())
            .map(|(i, n)| (format!("normal[{i}]"), n.clone()))
            .collect();
        Ok(CatalogEntry {
            name: name.into(),
            group,
            pairs,
            lattice: Some(lattice),
            scope: None,
            cache: EntryCache::default(),
        })
    }

    /// A single designated `N`.
    pub fn designated(name: impl Into<String>, label: impl Into<String>, n: Subgroup) -> Result<CatalogEntry> {
        check_pair(&n)?;
        Ok(CatalogEntry {
            name: name.into(),
            group: n.group().clone(),
            pairs: vec![(label.into(), n)],
            lattice: None,
            scope: None,
            cache: EntryCache::default(),
        })
    }

    /// All normal subgroups when the group is small enough, else the designated `N`.
    pub fn from_pair(pair: &NamedPair) -> Result<CatalogEntry> {
        if pair.group().order() <= NORMAL_ENUMERATION_MAX {
            CatalogEntry::exhaustive(pair.name.clone(), pair.group().clone())
        } else {
            CatalogEntry::designated(pair.name.clone(), "kernel", pair.n.clone())
        }
    }

    pub fn with_scope(mut self, ids: &[&'static str]) -> CatalogEntry {
        self.scope = Some(ids.to_vec());
        self
    }

    fn in_scope(&self, id: &str) -> bool {
        self.scope.as_ref().is_none_or(|s| s.contains(&id))
    }

    fn fitting(&self) -> &Subgroup {
        self.cache.fitting.get_or_init(|| fitting_subgroup(&Subgroup::whole(&self.group)))
    }

    fn solvable(&self) -> bool {
        *self.cache.solvable.get_or_init(|| is_solvable(&Subgroup::whole(&self.group)))
    }

    fn nilpotent(&self) -> bool {
        *self.cache.nilpotent.get_or_init(|| is_nilpotent(&Subgroup::whole(&self.group)))
    }

    fn pgroup(&self) -> Option<u64> {
        *self.cache.pgroup.get_or_init(|| p_group_prime(&Subgroup::whole(&self.group)).ok().flatten())
    }

    fn center(&self) -> &Subgroup {
        self.cache.center.get_or_init(|| center(&self.group))
    }

    /// `Omega_i(G)` and `Omega_i(Z(G))` for `i = 0..=n` where `exp(G) = p^n`.
    fn omegas(&self) -> Option<&(Vec<Subgroup>, Vec<Subgroup>)> {
        self.cache
            .omegas
            .get_or_init(|| {
                self.pgroup()?;
                let whole = Subgroup::whole(&self.group);
                let (_, n) = prime_power_decompose(exponent_of(&whole))?;
                let g: Vec<Subgroup> = (0..=n).map(|i| omega(&whole, i).unwrap()).collect();
                let z: Vec<Subgroup> = (0..=n).map(|i| omega(self.center(), i).unwrap()).collect();
                Some((g, z))
            })
            .as_ref()
    }

    fn sylow(&self, p: u64) -> Subgroup {
        let mut map = self.cache.sylow.lock().unwrap();
        map.entry(p).or_insert_with(|| sylow_subgroup(&Subgroup::whole(&self.group), p)).clone()
    }

    /// Frobenius kernels among the enumerated normal subgroups, with a complement each.
    fn frobenius_kernels(&self) -> &[(Subgroup, Subgroup)] {
        self.cache.frobenius.get_or_init(|| {
            let Some(lattice) = &self.lattice else { return Vec::new() };
            lattice
                .iter()
                .filter(|k| !k.is_trivial() && !k.is_whole())
                .filter(|k| frobenius_check(k).map(|c| c.semiregular).unwrap_or(false))
                .filter_map(|k| find_complement(k).map(|h| (k.clone(), h)))
                .collect()
        })
    }
}

/// Abelian p-groups of order at most `max_order` for `p` in `primes`, one per isomorphism type.
pub fn abelian_p_groups(primes: &[u64], max_order: u64) -> Result<Vec<(String, Arc<Group>)>> {
    fn partitions(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            partitions(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for &p in primes {
        let mut e = 1;
        while p.pow(e) <= max_order {
            let mut parts = Vec::new();
            partitions(e, e, &mut Vec::new(), &mut parts);
            for part in parts {
                let orders: Vec<u64> = part.iter().map(|&k| p.pow(k)).collect();
                let name = format!("abelian({})", orders.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(","));
                out.push((name.clone(), abelian(&orders)?.with_name(&name)));
            }
            e += 1;
        }
    }
    Ok(out)
}

/// Largest order taken from each standard family in the default catalog.
pub const STANDARD_ORDER_MAX: usize = 200;
/// Elementary abelian groups of larger rank have too many subgroups to sweep pairwise.
pub const ELEMENTARY_RANK_MAX: u32 = 5;

/// The default catalog: standard groups, the named example pairs, combinator
/// products, and the abelian p-groups of order at most 81 (for the Omega check).
pub fn default_catalog() -> Result<Vec<CatalogEntry>> {
    let mut groups: Vec<(String, Arc<Group>)> = Vec::new();
    for n in 2..=STANDARD_ORDER_MAX {
        groups.push((format!("cyclic({n})"), cyclic(n)?));
    }
    for p in (2..=STANDARD_ORDER_MAX as u64).filter(|&p| is_prime(p)) {
        let mut k = 2;
        while p.pow(k) <= STANDARD_ORDER_MAX as u64 && k <= ELEMENTARY_RANK_MAX {
            groups.push((format!("elemab({p},{k})"), elementary_abelian(p, k as usize)?));
            k += 1;
        }
    }
    for n in (6..=STANDARD_ORDER_MAX).step_by(2) {
        groups.push((format!("dihedral({n})"), dihedral(n)?));
    }
    let mut n = 8;
    while n <= STANDARD_ORDER_MAX {
        groups.push((format!("genq({n})"), generalized_quaternion(n)?));
        n *= 2;
    }
    for n in [3, 4, 5] {
        groups.push((format!("sym({n})"), sym(n)?));
    }
    for n in [4, 5] {
        groups.push((format!("alt({n})"), alt(n)?));
    }
    for q in [3, 4, 5] {
        groups.push((format!("sl2({q})"), sl2(q)?));
    }
    groups.push(("extraspecial(27)".into(), extraspecial_27()?));
    for (q, d) in [(7, 3), (9, 4), (9, 8), (11, 5), (13, 4), (16, 3), (16, 15)] {
        let (g, _, _) = affine_frobenius(q, d)?;
        groups.push((format!("affine({q},{d})"), g));
    }
    let mut entries: Vec<CatalogEntry> =
        groups.into_par_iter().map(|(name, g)| CatalogEntry::exhaustive(name, g)).collect::<Result<_>>()?;

    let mut pairs: Vec<NamedPair> = vec![build_f20()?, build_frob72()?, build_s3xa4()?];
    for q in [3, 4, 5, 9] {
        pairs.push(build_natural_pair(q)?);
    }
    pairs.push(build_mixed_pair()?.pair);
    pairs.push(build_a6_c8()?.pair);
    for p in combinator_pairs()? {
        pairs.push(p);
    }
    let more: Vec<CatalogEntry> = pairs.par_iter().map(CatalogEntry::from_pair).collect::<Result<_>>()?;
    entries.extend(more);

    let abelian = abelian_p_groups(&[2, 3], 81)?;
    let more: Vec<CatalogEntry> = abelian
        .into_par_iter()
        .map(|(name, g)| CatalogEntry::exhaustive(name, g).map(|e| e.with_scope(&["P3.2"])))
        .collect::<Result<_>>()?;
    entries.extend(more);
    Ok(entries)
}

/// Pairs produced by the direct-product, Frobenius-lift and fixed-point-free builders.
pub fn combinator_pairs() -> Result<Vec<NamedPair>> {
    let mut out = Vec::new();
    let frob = |q, d, name: &str| -> Result<NamedPair> {
        let (g, k, _) = affine_frobenius(q, d)?;
        Ok(NamedPair::new(name, Subgroup::closure(&g.with_name(name), k.generators())))
    };
    out.push(combine_direct(&frob(5, 2, "affine(5,2)")?, &frob(16, 5, "affine(16,5)")?)?);
    out.push(combine_direct(&frob(25, 3, "affine(25,3)")?, &frob(81, 5, "affine(81,5)")?)?);

    let (_, k, h) = affine_frobenius(19, 9)?;
    let g = k.group().clone();
    let m = Subgroup::closure(&g, &[g.pow(h.generators()[0], 3)]);
    out.push(lift_through_frobenius(&k, &h, &m)?);

    let c7 = cyclic(7)?;
    out.push(fpf_extension(&c7, &inversion_map(&c7), 2)?);
    let sq: Vec<Elem> = c7.elements().map(|x| c7.mul(x, x)).collect();
    out.push(fpf_extension(&c7, &sq, 2)?);
    Ok(out)
}

// -------------------------------------------------------------------
// reports
// -------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    HypothesisNotMet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub group: String,
    pub n_order: usize,
    pub n_label: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub hypothesis_not_met: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub pairs: Vec<PairVerdict>,
    pub totals: Totals,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub schema_version: u32,
    pub reports: Vec<TheoremReport>,
}

impl HarnessReport {
    pub fn total_fails(&self) -> usize {
        self.reports.iter().map(|r| r.totals.fail).sum()
    }

    pub fn report(&self, id: &str) -> Option<&TheoremReport> {
        self.reports.iter().find(|r| r.theorem_id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One summary line per theorem.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("theorem_id,pass,fail,hypothesis_not_met\n");
        for r in &self.reports {
            let t = r.totals;
            s.push_str(&format!("{},{},{},{}\n", r.theorem_id, t.pass, t.fail, t.hypothesis_not_met));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Outcome {
    Pass,
    Fail(String),
    Skip,
}

impl Outcome {
    fn check(ok: bool, witness: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(witness())
        }
    }
}

/// Runs the selected checks over every pair of the catalog.
///
/// `jobs` bounds the worker pool; `None` uses rayon's global pool.
pub fn run_harness(catalog: &[CatalogEntry], theorems: &[&'static str], jobs: Option<usize>) -> Result<HarnessReport> {
    let items: Vec<(usize, usize)> =
        catalog.iter().enumerate().flat_map(|(e, entry)| (0..entry.pairs.len()).map(move |i| (e, i))).collect();
    let work = || -> Vec<Vec<Option<Outcome>>> {
        items
            .par_iter()
            .map(|&(e, i)| {
                let entry = &catalog[e];
                let ctx = PairCtx::new(entry, &entry.pairs[i].1);
                theorems.iter().map(|id| entry.in_scope(id).then(|| run_check(id, &ctx))).collect()
            })
            .collect()
    };
    let outcomes = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .install(work),
        None => work(),
    };
    let mut reports: Vec<TheoremReport> = theorems
        .iter()
        .map(|id| TheoremReport { theorem_id: id.to_string(), pairs: Vec::new(), totals: Totals::default() })
        .collect();
    for (&(e, i), row) in items.iter().zip(outcomes) {
        let (label, n) = &catalog[e].pairs[i];
        for (report, outcome) in reports.iter_mut().zip(row) {
            let Some(outcome) = outcome else { continue };
            let (verdict, witness) = match outcome {
                Outcome::Pass => {
                    report.totals.pass += 1;
                    (Verdict::Pass, None)
                }
                Outcome::Fail(w) => {
                    report.totals.fail += 1;
                    (Verdict::Fail, Some(w))
                }
                Outcome::Skip => {
                    report.totals.hypothesis_not_met += 1;
                    (Verdict::HypothesisNotMet, None)
                }
            };
            report.pairs.push(PairVerdict {
                group: catalog[e].name.clone(),
                n_order: n.order(),
                n_label: label.clone(),
                verdict,
                witness,
            });
        }
    }
    Ok(HarnessReport { schema_version: SCHEMA_VERSION, reports })
}

/// Classification of every proper nontrivial normal subgroup of `g`.
pub fn find_all_equal_order_pairs(g: &Arc<Group>) -> Result<Vec<(Subgroup, PairReport)>> {
    normal_subgroups(g)?
        .into_iter()
        .filter(|n| !n.is_trivial() && !n.is_whole())
        .map(|n| classify_pair(&n).map(|r| (n, r)))
        .collect()
}

// -------------------------------------------------------------------
// checks
// -------------------------------------------------------------------

struct PairCtx<'a> {
    entry: &'a CatalogEntry,
    n: &'a Subgroup,
    profile: OnceLock<CosetOrderProfile>,
    nilpotent: OnceLock<bool>,
    solvable: OnceLock<bool>,
    quotient: OnceLock<(Arc<Group>, Vec<Elem>)>,
}

impl<'a> PairCtx<'a> {
    fn new(entry: &'a CatalogEntry, n: &'a Subgroup) -> Self {
        PairCtx {
            entry,
            n,
            profile: OnceLock::new(),
            nilpotent: OnceLock::new(),
            solvable: OnceLock::new(),
            quotient: OnceLock::new(),
        }
    }

    fn g(&self) -> &Arc<Group> {
        &self.entry.group
    }

    fn profile(&self) -> &CosetOrderProfile {
        self.profile.get_or_init(|| CosetOrderProfile::compute(self.n))
    }

    fn eq(&self) -> bool {
        self.profile().cosets.iter().all(|c| c.orders.len() == 1)
    }

    fn nilpotent_n(&self) -> bool {
        *self.nilpotent.get_or_init(|| is_nilpotent(self.n))
    }

    fn solvable_n(&self) -> bool {
        *self.solvable.get_or_init(|| is_solvable(self.n))
    }

    fn quotient(&self) -> &(Arc<Group>, Vec<Elem>) {
        self.quotient.get_or_init(|| self.n.quotient().expect("catalog subgroups are normal"))
    }

    fn fmt(&self, x: Elem) -> String {
        self.g().format_element(x)
    }
}

fn run_check(id: &str, ctx: &PairCtx) -> Outcome {
    let r = match id {
        "A" => fitting_comparable(ctx),
        "B.a" => pgroup_kernel_sylows(ctx),
        "B.b" => nilpotent_kernel_sylows(ctx),
        "D.a" => outside_orders_single_prime(ctx),
        "D.b" => sylow_fw_triple(ctx),
        "D.c" => nonsolvable_chief_factor(ctx),
        "P2.4.a" => uniform_coset_consequences(ctx, 'a'),
        "P2.4.b" => uniform_coset_consequences(ctx, 'b'),
        "P2.4.c" => uniform_coset_consequences(ctx, 'c'),
        "P2.4.d" => uniform_coset_consequences(ctx, 'd'),
        "P3.1" => nilpotent_kernel_prime_power(ctx),
        "P3.2" => omega_sandwich(ctx),
        "P3.exp" => exponent_characterization(ctx),
        "P3.hughes" => hughes_pair(ctx),
        "P5.1" => normalizer_sylow_frobenius(ctx),
        "P5.3" => module_semiregular(ctx),
        "P5.5" => fitting_height_bound(ctx),
        "L2.1" => subgroup_inheritance(ctx),
        "L2.2" => centralized_quotient(ctx),
        "L2.5" => direct_product_factors(ctx),
        "L2.6" => frobenius_kernel_lift(ctx),
        "L6.1" => normal_sylow_quotient(ctx),
        "C.partial" => sl2_section_primes(ctx),
        "IMP.chain" => implication_chain(ctx),
        "R2.3" => coprime_frobenius(ctx),
        "T2.trans" => transitivity(ctx),
        _ => unreachable!("theorem ids are validated by select_theorems"),
    };
    r.unwrap_or_else(|e| Outcome::Fail(format!("error: {e}")))
}

/// `x` viewed inside the group realization of a subgroup `x_sub`.
fn inside(xg: &Arc<Group>, back: &[Elem], s: &Subgroup) -> Subgroup {
    let pos: Vec<Elem> = s.generators().iter().map(|x| back.binary_search(x).expect("subgroup of X") as Elem).collect();
    Subgroup::closure(xg, &pos)
}

/// `(X, X ∩ N)` is an equal order pair, evaluated inside `X`.
fn restricted_equal_order(x: &Subgroup, n: &Subgroup) -> Result<bool> {
    let (xg, back) = x.as_group();
    let m = inside(&xg, &back, &x.intersection(n));
    equal_order(&m)
}

fn is_prime_power(n: u64) -> bool {
    n > 1 && prime_power_decompose(n).is_some()
}

fn primes_of(n: u64) -> BTreeSet<u64> {
    prime_divisors(n).into_iter().collect()
}

fn fitting_comparable(ctx: &PairCtx) -> Result<Outcome> {
    if !ctx.eq() {
        return Ok(Outcome::Skip);
    }
    let f = ctx.entry.fitting();
    let n = ctx.n;
    Ok(match fitting_relation(n, f) {
        FittingRelation::Neither => {
            Outcome::Fail(format!("|F(G)| = {}, |N ∩ F(G)| = {}", f.order(), n.intersection(f).order()))
        }
        FittingRelation::NInF => {
            Outcome::check(is_prime_power(f.order() as u64), || format!("N < F(G) with |F(G)| = {}", f.order()))
        }
        _ => Outcome::Pass,
    })
}

fn pgroup_kernel_sylows(ctx: &PairCtx) -> Result<Outcome> {
    if !ctx.eq() || !ctx.nilpotent_n() {
        return Ok(Outcome::Skip);
    }
    let Some((p, _)) = prime_power_decompose(ctx.n.order() as u64) else { return Ok(Outcome::Skip) };
    let g = ctx.g();
    let n = ctx.n;
    // NH is Frobenius with kernel N for every p'-subgroup H: C_N(h) = 1 for every p'-element h
    let bad = g.elements().collect::<Vec<_>>().into_par_iter().find_first(|&h| {
        h != g.identity()
            && g.element_order(h) as u64 % p != 0
            && n.elements().iter().any(|&m| m != g.identity() && g.mul(h, m) == g.mul(m, h))
    });
    if let Some(h) = bad {
        return Ok(Outcome::Fail(format!("p'-element {} centralizes part of N", ctx.fmt(h))));
    }
    for q in prime_divisors(g.order() as u64) {
        if q != p && !is_cyclic_or_generalized_quaternion(&ctx.entry.sylow(q))? {
            return Ok(Outcome::Fail(format!("Sylow {q}-subgroup of G is not cyclic or generalized quaternion")));
        }
    }
    Ok(Outcome::Pass)
}

fn nilpotent_kernel_sylows(ctx: &PairCtx) -> Result<Outcome> {
    if !ctx.eq() || !ctx.nilpotent_n() || prime_power_decompose(ctx.n.order() as u64).is_some() {
        return Ok(Outcome::Skip);
    }
    let n = ctx.n;
    let f = ctx.entry.fitting();
    if n != f {
        return Ok(Outcome::Fail(format!("N != F(G): |F(G)| = {}", f.order())));
    }
    for q in prime_divisors(n.index() as u64) {
        let sylow = ctx.entry.sylow(q);
        let nq = n.join(&sylow);
        let (xg, back) = nq.as_group();
        let l = inside(&xg, &back, &sylow.intersection(n));
        let (xq, proj) = l.quotient()?;
        let kernel = inside(&xg, &back, n).image(&xq, &proj);
        if !is_frobenius_with_kernel(&kernel)? {
            return Ok(Outcome::Fail(format!("NQ/(N ∩ Q) is not Frobenius with kernel N/(N ∩ Q) for q = {q}")));
        }
    }
    Ok(Outcome::check(quotient_sylows_cyclic_or_quaternion(n)?, || {
        "a Sylow subgroup of G/N is neither cyclic nor generalized quaternion".into()
    }))
}

fn outside_orders_single_prime(ctx: &PairCtx) -> Result<Outcome> {
    if !ctx.eq() || ctx.nilpotent_n() {
        return Ok(Outcome::Skip);
    }
    let g = ctx.g();
    let n = ctx.n;
    Ok(match outside_prime(n) {
        Some(_) => Outcome::Pass,
        None => {
            let x = g.elements().find(|&x| !n.contains(x) && !is_prime_power(g.element_order(x) as u64));
            let first = g.elements().find(|&x| !n.contains(x)).unwrap();
            Outcome::Fail(match x {
                Some(x) => format!("{} has order {}", ctx.fmt(x), g.element_order(x)),
                None => format!("outside elements of coprime prime-power orders, e.g. {}", ctx.fmt(first)),
            })
        }
    })
}

fn sylow_fw_triple(ctx: &PairCtx) -> Result<Outcome> {
    if !ctx.eq() || ctx.nilpotent_n() {
        return Ok(Outcome::Skip);
    }
    let Some(p) = outside_prime(ctx.n) else { return Ok(Outcome::Skip) };
    let sylow = ctx.entry.sylow(p);
    let l = sylow.intersection(ctx.n);
    Ok(Outcome::check(is_frobenius_wielandt_triple(&sylow, &l)?, || {
        format!("(G, P, P ∩ N) is not a Frobenius-Wielandt triple for p = {p}")
    }))
}

fn psl2_9_fingerprint() -> &'static GroupFingerprint {
    static FP: OnceLock<GroupFingerprint> = OnceLock::new();
    FP.get_or_init(|| fingerprint(&alt(6).expect("A6 builds")))
}

/// Nonsolvable `N`: outside elements are 2-elements, and the chief factor
/// `U/V` with `U` the solvable residual of `N` and `V` the solvable radical of `U`
/// (when simple) has the fingerprint of `PSL_2(9)`.
fn nonsolvable_chief_factor(ctx: &PairCtx) -> Result<Outcome> {
    if !ctx.eq() || ctx.solvable_n() {
        return Ok(Outcome::Skip);
    }
    let p = outside_prime(ctx.n);
    if p != Some(2) {
        return Ok(Outcome::Fail(format!("outside prime is {p:?}, not 2")));
    }
    let u = solvable_residual(ctx.n);
    let (ug, _) = u.as_group();
    let v = solvable_radical(&ug);
    let (factor, _) = v.quotient()?;
    if !is_simple(&factor) {
        return Ok(Outcome::Skip);
    }
    let fp = fingerprint(&factor);
    Ok(Outcome::check(&fp == psl2_9_fingerprint(), || {
        format!("chief factor of order {} does not match PSL2(9)", factor.order())
    }))
}

fn is_abelian_subgroup(h: &Subgroup) -> bool {
    let g = h.group();
    let gens = h.generators();
    gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

fn uniform_coset_consequences(ctx: &PairCtx, part: char) -> Result<Outcome> {
    let g = ctx.g();
    let n = ctx.n;
    let profile = ctx.profile();
    // minimal element of each coset -> index in the profile
    let key = |y: Elem| n.elements().iter().map(|&m| g.mul(y, m)).min().unwrap();
    let index: OnceLock<HashMap<Elem, usize>> = OnceLock::new();
    let index = || index.get_or_init(|| profile.cosets.iter().enumerate().map(|(i, c)| (key(c.rep), i)).collect());
    let mut met = false;
    for c in profile.cosets.iter().filter(|c| c.orders.len() == 1) {
        let x = c.rep;
        let ox = g.element_order(x) as u64;
        let m = c.quotient_order as u64;
        let hyp = match part {
            'a' => ox == 2,
            'b' => is_prime(ox),
            'c' => m % 2 == 1,
            _ => {
                if m == 1 || is_prime_power(m) {
                    continue;
                }
                // (<x>N, N) equal order: every coset x^k N is uniform
                let mut y = x;
                let mut uniform = true;
                for _ in 1..m {
                    if profile.cosets[index()[&key(y)]].orders.len() != 1 {
                        uniform = false;
                        break;
                    }
                    y = g.mul(y, x);
                }
                if !uniform {
                    continue;
                }
                met = true;
                if ox != m || !ctx.nilpotent_n() {
                    return Ok(Outcome::Fail(format!(
                        "x = {}: o(x) = {ox}, o(xN) = {m}, N nilpotent = {}",
                        ctx.fmt(x),
                        ctx.nilpotent_n()
                    )));
                }
                continue;
            }
        };
        if hyp {
            met = true;
            let ok = match part {
                'a' => is_abelian_subgroup(n),
                'b' => ctx.nilpotent_n(),
                _ => ctx.solvable_n(),
            };
            if !ok {
                return Ok(Outcome::Fail(format!("x = {}: o(x) = {ox}, o(xN) = {m}", ctx.fmt(x))));
            }
        }
    }
    Ok(if met { Outcome::Pass } else { Outcome::Skip })
}

fn nilpotent_kernel_prime_power(ctx: &PairCtx) -> Result<Outcome> {
    if !ctx.eq() || !ctx.entry.nilpotent() {
        return Ok(Outcome::Skip);
    }
    Ok(Outcome::check(ctx.entry.pgroup().is_some(), || format!("nilpotent G of order {}", ctx.g().order())))
}

fn omega_sandwich(ctx: &PairCtx) -> Result<Outcome> {
    if ctx.entry.pgroup().is_none() || !ctx.n.is_subgroup_of(ctx.entry.center()) {
        return Ok(Outcome::Skip);
    }
    let (om, zom) = ctx.entry.omegas().expect("p-group");
    let sandwich = (1..om.len()).any(|i| ctx.n.is_subgroup_of(&zom[i]) && om[i - 1].is_subgroup_of(ctx.n));
    let eq = ctx.eq();
    Ok(Outcome::check(eq == sandwich, || format!("equal order = {eq}, Omega sandwich = {sandwich}")))
}

fn exponent_characterization(ctx: &PairCtx) -> Result<Outcome> {
    let Some(p) = ctx.entry.pgroup() else { return Ok(Outcome::Skip) };
    let (om, _) = ctx.entry.omegas().expect("p-group");
    let n_exp = om.len() - 1;
    let top = p.pow(n_exp as u32) as u32;
    let all_top = ctx.eq() && ctx.profile().constant_order() == Some(top);
    let contains = om[n_exp - 1].is_subgroup_of(ctx.n);
    Ok(Outcome::check(all_top == contains, || {
        format!("outside orders all {top}: {all_top}, Omega_(n-1) inside N: {contains}")
    }))
}

fn hughes_pair(ctx: &PairCtx) -> Result<Outcome> {
    let Some(p) = ctx.entry.pgroup() else { return Ok(Outcome::Skip) };
    let h = hughes_subgroup(&Subgroup::whole(ctx.g()))?;
    if &h != ctx.n {
        return Ok(Outcome::Skip);
    }
    let ok = ctx.eq() && ctx.profile().constant_order() == Some(p as u32);
    Ok(Outcome::check(ok, || "outside elements of the Hughes subgroup are not all of order p".into()))
}

fn normalizer_sylow_frobenius(ctx: &PairCtx) -> Result<Outcome> {
    if !ctx.eq() {
        return Ok(Outcome::Skip);
    }
    let n = ctx.n;
    let mut met = false;
    let (quot, _) = ctx.quotient();
    for q in prime_divisors(n.index() as u64) {
        for p in prime_divisors(n.order() as u64).into_iter().filter(|&p| p != q) {
            let big_p = sylow_subgroup(n, p);
            let norm = normalizer(&big_p);
            let q0 = sylow_subgroup(&norm, q);
            let q0n = q0.intersection(n);
            let p0 = centralizer_in(&big_p, q0n.generators());
            if p0.is_trivial() {
                continue;
            }
            met = true;
            let x = p0.join(&q0);
            let (xg, back) = x.as_group();
            let l = inside(&xg, &back, &q0n);
            let (xq, proj) = l.quotient()?;
            let kernel = inside(&xg, &back, &p0.join(&q0n)).image(&xq, &proj);
            if !is_frobenius_with_kernel(&kernel)? {
                return Ok(Outcome::Fail(format!("P0 Q0/(Q0 ∩ N) is not Frobenius for q = {q}, p = {p}")));
            }
            let sq = sylow_subgroup(&Subgroup::whole(quot), q);
            if !is_cyclic_or_generalized_quaternion(&sq)? {
                return Ok(Outcome::Fail(format!("Sylow {q}-subgroup of G/N is not cyclic or generalized quaternion")));
            }
        }
    }
    Ok(if met { Outcome::Pass } else { Outcome::Skip })
}

fn module_semiregular(ctx: &PairCtx) -> Result<Outcome> {
    if !ctx.eq() || !ctx.nilpotent_n() {
        return Ok(Outcome::Skip);
    }
    for p in prime_divisors(ctx.n.order() as u64) {
        let m = module_action_from_pair(ctx.n, p)?;
        if !is_p_prime_semiregular(&m.action, p)? {
            return Ok(Outcome::Fail(format!("G/N is not {p}'-semiregular on P/Phi(P)")));
        }
    }
    Ok(Outcome::Pass)
}

fn fitting_height_bound(ctx: &PairCtx) -> Result<Outcome> {
    if !ctx.eq() || !ctx.nilpotent_n() || !ctx.entry.solvable() {
        return Ok(Outcome::Skip);
    }
    let h = fitting_height(ctx.g())?;
    Ok(Outcome::check(h <= 4, || format!("Fitting height {h}")))
}

/// Subgroups `X` not inside `N` with `X ∩ N` nontrivial: a few cyclic and
/// two-generator subgroups through outside coset representatives, the Sylow
/// subgroups, and their normalizers.
fn sample_subgroups(ctx: &PairCtx) -> Vec<Subgroup> {
    let g = ctx.g();
    let n = ctx.n;
    let mut out: Vec<Subgroup> = Vec::new();
    let reps: Vec<Elem> = ctx.profile().cosets.iter().take(4).map(|c| c.rep).collect();
    for &x in &reps {
        out.push(Subgroup::closure(g, &[x]));
        if let Some(&y) = n.generators().first() {
            out.push(Subgroup::closure(g, &[x, y]));
        }
    }
    for p in prime_divisors(g.order() as u64) {
        let s = ctx.entry.sylow(p);
        if g.order() <= NORMAL_ENUMERATION_MAX {
            out.push(normalizer(&s));
        }
        out.push(s);
    }
    let mut seen = BTreeSet::new();
    out.into_iter()
        .filter(|x| !x.is_subgroup_of(n) && !x.intersection(n).is_trivial())
        .filter(|x| seen.insert(x.elements().to_vec()))
        .collect()
}

fn subgroup_inheritance(ctx: &PairCtx) -> Result<Outcome> {
    if !ctx.eq() {
        return Ok(Outcome::Skip);
    }
    let sample = sample_subgroups(ctx);
    if sample.is_empty() {
        return Ok(Outcome::Skip);
    }
    for x in &sample {
        if !restricted_equal_order(x, ctx.n)? {
            return Ok(Outcome::Fail(format!("(X, X ∩ N) fails for X of order {}", x.order())));
        }
    }
    Ok(Outcome::Pass)
}

fn centralized_quotient(ctx: &PairCtx) -> Result<Outcome> {
    let g = ctx.g();
    let n = ctx.n;
    let mut met = false;
    for c in ctx.profile().cosets.iter().filter(|c| c.orders.len() == 1) {
        met = true;
        let x = c.rep;
        let m = c.quotient_order as u64;
        let pm = primes_of(m);
        if !primes_of(g.element_order(x) as u64).is_subset(&pm) {
            return Ok(Outcome::Fail(format!("x = {}: o(x) = {}, o(xN) = {m}", ctx.fmt(x), g.element_order(x))));
        }
        for &y in n.elements() {
            let oy = g.element_order(y) as u64;
            if is_prime(oy) && !pm.contains(&oy) && g.mul(x, y) == g.mul(y, x) {
                return Ok(Outcome::Fail(format!("x = {} centralizes {} of order {oy}", ctx.fmt(x), ctx.fmt(y))));
            }
        }
    }
    Ok(if met { Outcome::Pass } else { Outcome::Skip })
}

fn direct_product_factors(ctx: &PairCtx) -> Result<Outcome> {
    let g = ctx.g();
    let Some((a, b)) = g.direct_factors() else { return Ok(Outcome::Skip) };
    let n = ctx.n;
    let (mut s1, mut s2) = (Vec::new(), Vec::new());
    for &x in n.elements() {
        let (u, w) = g.direct_split(x).unwrap();
        if w == b.identity() {
            s1.push(u);
        }
        if u == a.identity() {
            s2.push(w);
        }
    }
    let n1 = Subgroup::closure(a, &s1);
    let n2 = Subgroup::closure(b, &s2);
    if n1.order() * n2.order() != n.order() || n1.is_trivial() || n2.is_trivial() || n1.is_whole() || n2.is_whole() {
        return Ok(Outcome::Skip);
    }
    let (Some(m1), Some(m2)) = (constant_outside_order(&n1)?, constant_outside_order(&n2)?) else {
        return Ok(Outcome::Skip);
    };
    if m1 as u64 % exponent_of(&n2) != 0 || m2 as u64 % exponent_of(&n1) != 0 {
        return Ok(Outcome::Skip);
    }
    Ok(Outcome::check(ctx.eq(), || format!("factor pairs with outside orders {m1} and {m2}")))
}

fn frobenius_kernel_lift(ctx: &PairCtx) -> Result<Outcome> {
    let n = ctx.n;
    let Some((_, h)) = ctx
        .entry
        .frobenius_kernels()
        .iter()
        .find(|(k, _)| k.is_subgroup_of(n) && k.order() < n.order())
    else {
        return Ok(Outcome::Skip);
    };
    let inner = restricted_equal_order(h, n)?;
    let outer = ctx.eq();
    Ok(Outcome::check(inner == outer, || format!("(H, H ∩ N) equal order = {inner}, (G, N) equal order = {outer}")))
}

fn normal_sylow_quotient(ctx: &PairCtx) -> Result<Outcome> {
    if !ctx.eq() {
        return Ok(Outcome::Skip);
    }
    let (quot, _) = ctx.quotient();
    let whole = Subgroup::whole(quot);
    let hyp = prime_divisors(quot.order() as u64).into_iter().any(|q| {
        let s = sylow_subgroup(&whole, q);
        !s.is_whole() && s.is_normal()
    });
    if !hyp {
        return Ok(Outcome::Skip);
    }
    Ok(Outcome::check(ctx.nilpotent_n(), || "G/N has a proper normal Sylow subgroup but N is not nilpotent".into()))
}

/// `SL_2(p)` fingerprints for the primes of the exceptional set that fit the cap.
fn sl2_fingerprints() -> &'static Vec<(u64, GroupFingerprint)> {
    static FP: OnceLock<Vec<(u64, GroupFingerprint)>> = OnceLock::new();
    FP.get_or_init(|| [5u64, 7, 13, 17].iter().map(|&p| (p, fingerprint(&sl2(p).expect("sl2 builds")))).collect())
}

fn sl2_section_primes(ctx: &PairCtx) -> Result<Outcome> {
    if !ctx.eq() || is_prime_power(ctx.n.order() as u64) {
        return Ok(Outcome::Skip);
    }
    let (quot, _) = ctx.quotient();
    let whole = Subgroup::whole(quot);
    if is_solvable(&whole) {
        return Ok(Outcome::Skip);
    }
    let k = solvable_residual(&whole);
    let (kg, _) = k.as_group();
    let fp = fingerprint(&kg);
    let Some(&(p, _)) = sl2_fingerprints().iter().find(|(_, f)| f == &fp) else {
        return Ok(Outcome::Fail(format!("K/N of order {} matches no SL2(p)", kg.order())));
    };
    let pi = primes_of(ctx.n.order() as u64);
    let kw = Subgroup::whole(&kg);
    let normal_sylow = pi.iter().any(|&r| kg.order() as u64 % r == 0 && sylow_subgroup(&kw, r).is_normal());
    if normal_sylow && p != 5 {
        return Ok(Outcome::Fail(format!("K/N has a normal Sylow subgroup for a prime of N but p = {p}")));
    }
    let ok = if p == 5 { pi.is_subset(&[2, 3, 5].into_iter().collect()) } else { pi == [3, p].into_iter().collect() };
    Ok(Outcome::check(ok, || format!("p = {p}, pi(N) = {pi:?}")))
}

fn implication_chain(ctx: &PairCtx) -> Result<Outcome> {
    let cam = is_camina_pair(ctx.n)?;
    let ab = is_ab_pair(ctx.n)?;
    let eq = ctx.eq();
    Ok(Outcome::check((!cam || ab) && (!ab || eq), || format!("Camina = {cam}, AB = {ab}, equal order = {eq}")))
}

fn coprime_frobenius(ctx: &PairCtx) -> Result<Outcome> {
    if !ctx.eq() || gcd(ctx.n.order() as u64, ctx.n.index() as u64) != 1 {
        return Ok(Outcome::Skip);
    }
    Ok(Outcome::check(is_frobenius_with_kernel(ctx.n)?, || "coprime equal order pair is not Frobenius".into()))
}

fn transitivity(ctx: &PairCtx) -> Result<Outcome> {
    let Some(lattice) = &ctx.entry.lattice else { return Ok(Outcome::Skip) };
    if !ctx.eq() {
        return Ok(Outcome::Skip);
    }
    let n = ctx.n;
    let mut met = false;
    for m in lattice.iter().filter(|m| !m.is_trivial() && m.is_subgroup_of(n) && m.order() < n.order()) {
        if !restricted_equal_order(n, m)? {
            continue;
        }
        met = true;
        if !equal_order(m)? {
            return Ok(Outcome::Fail(format!("(G, M) fails for M of order {}", m.order())));
        }
    }
    Ok(if met { Outcome::Pass } else { Outcome::Skip })
}
