//! Builders for standard groups, the worked examples, and the pair combinators.

use std::sync::Arc;

use crate::arith::{is_prime, prime_power_decompose};
use crate::error::{Error, Result};
use crate::ff::FiniteField;
use crate::grp::{
    check_automorphism, mat_inv, try_extend_homomorphism, vec_mat, AutomorphismAction, Elem, Group, Perm,
    Subgroup,
};
use crate::pairs::{check_pair, equal_order, is_frobenius_with_kernel, CosetOrderProfile};
use crate::structure::{center, derived_subgroup, exponent_of, fingerprint, hughes_subgroup, normal_subgroups, omega};

/// A group together with a designated normal subgroup.
#[derive(Debug, Clone)]
pub struct NamedPair {
    pub name: String,
    pub n: Subgroup,
}

impl NamedPair {
    pub fn new(name: impl Into<String>, n: Subgroup) -> Self {
        NamedPair { name: name.into(), n }
    }

    pub fn group(&self) -> &Arc<Group> {
        self.n.group()
    }
}

fn perm(degree: usize, cycles: &[&[u32]]) -> Result<Perm> {
    let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
    Perm::from_cycles(degree, &cycles)
}

fn field(q: u64) -> Result<Arc<FiniteField>> {
    Ok(Arc::new(FiniteField::of_order(q)?))
}

// -------------------------------------------------------------------
// standard groups
// -------------------------------------------------------------------

pub fn cyclic(n: usize) -> Result<Arc<Group>> {
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic(0)".into()));
    }
    let cycle: Vec<u32> = (1..=n as u32).collect();
    let gens = if n > 1 { vec![Perm::from_cycles(n, &[cycle])?] } else { vec![] };
    Group::from_permutations(&format!("cyclic({n})"), n, &gens)
}

/// `C_p^k` as `k` disjoint `p`-cycles.
pub fn elementary_abelian(p: u64, k: usize) -> Result<Arc<Group>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let g = abelian(&vec![p; k])?;
    Ok(g.with_name(&format!("elemab({p},{k})")))
}

/// Direct product of cyclic groups of the given orders, as disjoint cycles.
pub fn abelian(orders: &[u64]) -> Result<Arc<Group>> {
    let degree: usize = orders.iter().map(|&o| o as usize).sum::<usize>().max(1);
    let mut gens = Vec::new();
    let mut start = 1u32;
    for &o in orders {
        if o == 0 {
            return Err(Error::InvalidParameter("cyclic factor of order 0".into()));
        }
        if o > 1 {
            let cycle: Vec<u32> = (start..start + o as u32).collect();
            gens.push(Perm::from_cycles(degree, &[cycle])?);
        }
        start += o as u32;
    }
    let parts: Vec<String> = orders.iter().map(|o| o.to_string()).collect();
    Group::from_permutations(&format!("abelian({})", parts.join(",")), degree, &gens)
}

/// Dihedral group of the given order (`2m` acting on an `m`-gon).
pub fn dihedral(order: usize) -> Result<Arc<Group>> {
    if order < 2 || order % 2 != 0 {
        return Err(Error::InvalidParameter(format!("dihedral order {order} must be even and at least 2")));
    }
    let name = format!("dihedral({order})");
    let m = order / 2;
    match m {
        1 => Ok(cyclic(2)?.with_name(&name)),
        2 => Group::from_permutations(&name, 4, &[perm(4, &[&[1, 2]])?, perm(4, &[&[3, 4]])?]),
        _ => {
            let rot: Vec<u32> = (1..=m as u32).collect();
            let refl: Vec<u32> = (0..m as u32).map(|i| (m as u32 - i) % m as u32).collect();
            Group::from_permutations(&name, m, &[Perm::from_cycles(m, &[rot])?, Perm::from_images(refl)?])
        }
    }
}

/// Generalized quaternion group of order `2^n`, `n >= 3`, in its right regular representation.
pub fn generalized_quaternion(order: usize) -> Result<Arc<Group>> {
    if order < 8 || !order.is_power_of_two() {
        return Err(Error::InvalidParameter(format!("genq order {order} must be a power of 2, at least 8")));
    }
    let m = order / 2;
    // element a^i b^j has point index i + m*j
    let mul = |(i, j): (usize, usize), (k, l): (usize, usize)| {
        let k = if j == 1 { (m - k) % m } else { k };
        let extra = if j == 1 && l == 1 { m / 2 } else { 0 };
        ((i + k + extra) % m, j ^ l)
    };
    let regular = |y: (usize, usize)| -> Result<Perm> {
        let images = (0..order)
            .map(|pt| {
                let (i, j) = mul((pt % m, pt / m), y);
                (i + m * j) as u32
            })
            .collect();
        Perm::from_images(images)
    };
    Group::from_permutations(&format!("genq({order})"), order, &[regular((1, 0))?, regular((0, 1))?])
}

pub fn sym(n: usize) -> Result<Arc<Group>> {
    if n == 0 || n > 8 {
        return Err(Error::InvalidParameter(format!("sym({n}) needs 1 <= n <= 8")));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(perm(n, &[&[1, 2]])?);
    }
    if n >= 3 {
        gens.push(Perm::from_cycles(n, &[(1..=n as u32).collect()])?);
    }
    Group::from_permutations(&format!("sym({n})"), n, &gens)
}

/// `A_n` generated by `(1,2,3)` and an `n`- or `(n-1)`-cycle.
pub fn alt(n: usize) -> Result<Arc<Group>> {
    if n == 0 || n > 8 {
        return Err(Error::InvalidParameter(format!("alt({n}) needs 1 <= n <= 8")));
    }
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(perm(n, &[&[1, 2, 3]])?);
    }
    if n >= 4 {
        let long: Vec<u32> = if n % 2 == 1 { (1..=n as u32).collect() } else { (2..=n as u32).collect() };
        gens.push(Perm::from_cycles(n, &[long])?);
    }
    Group::from_permutations(&format!("alt({n})"), n, &gens)
}

pub fn sl2(q: u64) -> Result<Arc<Group>> {
    Group::sl2(field(q)?)
}

/// The action `v -> v h^-1` of a 2x2 matrix group on row vectors.
pub fn natural_action(h: &Arc<Group>, v: &Arc<Group>) -> Result<Arc<AutomorphismAction>> {
    let f = h.field().ok_or_else(|| Error::InvalidParameter("acting group is not a matrix group".into()))?.clone();
    let inverses: Vec<[u32; 4]> =
        h.generators().iter().map(|&g| mat_inv(&f, &h.as_matrix(g).unwrap()).unwrap()).collect();
    AutomorphismAction::from_fn(h.clone(), v.clone(), |i, x| {
        let c = v.vector_coords(x).unwrap();
        let w = vec_mat(&f, &[c[0], c[1]], &inverses[i]);
        v.vector_from_coords(&w).unwrap()
    })
}

/// Heisenberg group of order 27: `GF(3)^2` extended by a unipotent matrix.
pub fn extraspecial_27() -> Result<Arc<Group>> {
    let f = field(3)?;
    let v = Group::vector_space(f.clone(), 2)?;
    let c3 = cyclic(3)?;
    let m = [1, 1, 0, 1];
    let action = AutomorphismAction::from_fn(c3, v.clone(), |_, x| {
        let c = v.vector_coords(x).unwrap();
        v.vector_from_coords(&vec_mat(&f, &[c[0], c[1]], &m)).unwrap()
    })?;
    Ok(Group::semidirect_product(action)?.with_name("extraspecial(27)"))
}

/// `GF(q) ⋊ C_d` with `C_d` acting by multiplication by an element of order `d`.
pub fn affine_frobenius(q: u64, d: u64) -> Result<(Arc<Group>, Subgroup, Subgroup)> {
    if d < 2 || (q - 1) % d != 0 {
        return Err(Error::InvalidParameter(format!("{d} does not divide {q}-1")));
    }
    let f = field(q)?;
    let k = Group::vector_space(f.clone(), 1)?;
    let h = cyclic(d as usize)?;
    let c = f.pow_code(f.primitive_element(), (q - 1) / d);
    let action = AutomorphismAction::from_fn(h.clone(), k.clone(), |_, x| f.mul_code(c, x))?;
    let g = Group::semidirect_product(action)?.with_name(&format!("affine({q},{d})"));
    let kernel = embed_kernel(&g, k.generators());
    let complement = embed_complement(&g, h.generators());
    Ok((g, kernel, complement))
}

/// Image of kernel elements `(k, 1)` in a semidirect product.
pub fn embed_kernel(g: &Arc<Group>, ks: &[Elem]) -> Subgroup {
    let act = g.semidirect_action().expect("semidirect product");
    let id = act.acting().identity();
    let seeds: Vec<Elem> = ks.iter().map(|&k| g.semidirect_pair(k, id).unwrap()).collect();
    Subgroup::closure(g, &seeds)
}

/// Image of complement elements `(1, h)` in a semidirect product.
pub fn embed_complement(g: &Arc<Group>, hs: &[Elem]) -> Subgroup {
    let act = g.semidirect_action().expect("semidirect product");
    let id = act.target().identity();
    let seeds: Vec<Elem> = hs.iter().map(|&h| g.semidirect_pair(id, h).unwrap()).collect();
    Subgroup::closure(g, &seeds)
}

/// `N1 x N2` inside a direct product.
pub fn embed_direct(g: &Arc<Group>, left: &[Elem], right: &[Elem]) -> Subgroup {
    let (a, b) = g.direct_factors().expect("direct product");
    let mut seeds: Vec<Elem> = left.iter().map(|&x| g.direct_pair(x, b.identity()).unwrap()).collect();
    seeds.extend(right.iter().map(|&y| g.direct_pair(a.identity(), y).unwrap()));
    Subgroup::closure(g, &seeds)
}

// -------------------------------------------------------------------
// worked examples
// -------------------------------------------------------------------

/// Frobenius group of order 20 with its dihedral subgroup of index 2.
pub fn build_f20() -> Result<NamedPair> {
    let a = perm(5, &[&[1, 2, 3, 4, 5]])?;
    let b = perm(5, &[&[2, 3, 5, 4]])?;
    let g = Group::from_permutations("paper.f20", 5, &[a.clone(), b.clone()])?;
    let ia = g.find_permutation(&a).unwrap();
    let ib = g.find_permutation(&b).unwrap();
    let n = Subgroup::closure(&g, &[ia, g.mul(ib, ib)]);
    Ok(NamedPair::new("paper.f20", n))
}

/// A Frobenius group with its kernel and a complement.
#[derive(Debug, Clone)]
pub struct FrobeniusData {
    pub group: Arc<Group>,
    pub kernel: Subgroup,
    pub complement: Subgroup,
}

/// `GF(3)^2 ⋊ Q_8` with `i, j` acting by fixed-point-free matrices of order 4.
pub fn frob72_data() -> Result<FrobeniusData> {
    let f = field(3)?;
    let q8 = Group::from_matrices("q8", f.clone(), &[[0, 2, 1, 0], [1, 1, 1, 2]])?;
    let v = Group::vector_space(f, 2)?;
    let involutions = q8.element_orders().iter().filter(|&&o| o == 2).count();
    if q8.order() != 8 || involutions != 1 {
        return Err(Error::SearchFailed("chosen matrices do not generate Q8".into()));
    }
    let action = natural_action(&q8, &v)?;
    let g = Group::semidirect_product(action)?.with_name("paper.frob72");
    let kernel = embed_kernel(&g, v.generators());
    let complement = embed_complement(&g, q8.generators());
    Ok(FrobeniusData { group: g, kernel, complement })
}

pub fn build_frob72() -> Result<NamedPair> {
    let d = frob72_data()?;
    let n = derived_subgroup(&Subgroup::whole(&d.group));
    Ok(NamedPair::new("paper.frob72", n))
}

/// `S_3 x A_4` with `N = A_3 x V_4`.
pub fn build_s3xa4() -> Result<NamedPair> {
    let s3 = sym(3)?;
    let a4 = alt(4)?;
    let g = Group::direct_product(&s3, &a4)?.with_name("paper.s3xa4");
    let a3 = derived_subgroup(&Subgroup::whole(&s3));
    let v4 = derived_subgroup(&Subgroup::whole(&a4));
    let n = embed_direct(&g, a3.generators(), v4.generators());
    Ok(NamedPair::new("paper.s3xa4", n))
}

/// `V ⋊ SL_2(q)` on the natural module, `N = V`.
pub fn build_natural_pair(q: u64) -> Result<NamedPair> {
    if ![3, 4, 5, 7, 8, 9].contains(&q) {
        return Err(Error::InvalidParameter(format!("natural({q}) needs q in {{3,4,5,7,8,9}}")));
    }
    let f = field(q)?;
    let h = Group::sl2(f.clone())?;
    let v = Group::vector_space(f, 2)?;
    let action = natural_action(&h, &v)?;
    let name = format!("paper.natural({q})");
    let g = Group::semidirect_product(action)?.with_name(&name);
    let n = embed_kernel(&g, v.generators());
    Ok(NamedPair::new(name, n))
}

/// The pair `((W1 + W2) ⋊ SL_2(5), W1 + W2)` and the action on `W1`.
#[derive(Debug, Clone)]
pub struct MixedPair {
    pub pair: NamedPair,
    /// `SL_2(5)` acting on `W1 = GF(3)^4`.
    pub w1_action: Arc<AutomorphismAction>,
    /// `SL_2(5)` acting on `W2 = GF(5)^2`.
    pub w2_action: Arc<AutomorphismAction>,
}

/// Locates an injective homomorphism `SL_2(5) -> SL_2(9)` by generator-image search.
pub fn embed_sl2_5_in_sl2_9() -> Result<(Arc<Group>, Arc<Group>, Vec<Elem>)> {
    let s5 = sl2(5)?;
    let s9 = sl2(9)?;
    let want: Vec<u32> = s5.generators().iter().map(|&x| s5.element_order(x)).collect();
    let candidates: Vec<Vec<Elem>> =
        want.iter().map(|&o| s9.elements().filter(|&y| s9.element_order(y) == o).collect()).collect();
    let reference = fingerprint(&s5);
    let mut images = vec![0; want.len()];
    let found = search_images(&s5, &s9, &candidates, &mut images, 0, &|map| {
        let mut seen = std::collections::HashSet::new();
        if !map.iter().all(|&y| seen.insert(y)) {
            return false;
        }
        let image = Subgroup::closure(&s9, &images_of(map, s5.generators()));
        fingerprint(&image.as_group().0) == reference
    });
    match found {
        Some(map) => Ok((s5, s9, map)),
        None => Err(Error::SearchFailed("no SL2(5) copy inside SL2(9)".into())),
    }
}

fn images_of(map: &[Elem], xs: &[Elem]) -> Vec<Elem> {
    xs.iter().map(|&x| map[x as usize]).collect()
}

/// Depth-first search over generator images in canonical order.
fn search_images(
    src: &Group,
    dst: &Group,
    candidates: &[Vec<Elem>],
    images: &mut Vec<Elem>,
    depth: usize,
    accept: &dyn Fn(&[Elem]) -> bool,
) -> Option<Vec<Elem>> {
    if depth == candidates.len() {
        let map = try_extend_homomorphism(src, dst, images)?;
        return accept(&map).then_some(map);
    }
    for &c in &candidates[depth] {
        images[depth] = c;
        if let Some(m) = search_images(src, dst, candidates, images, depth + 1, accept) {
            return Some(m);
        }
    }
    None
}

pub fn build_mixed_pair() -> Result<MixedPair> {
    let (s5, s9, phi) = embed_sl2_5_in_sl2_9()?;
    let f3 = field(3)?;
    let f5 = field(5)?;
    let f9 = s9.field().unwrap().clone();
    let w1 = Group::vector_space(f3, 4)?;
    let w2 = Group::vector_space(f5.clone(), 2)?;
    // GF(9)^2 flattened over GF(3) with basis {1, t}
    let inv9: Vec<[u32; 4]> = s5
        .generators()
        .iter()
        .map(|&h| mat_inv(&f9, &s9.as_matrix(phi[h as usize]).unwrap()).unwrap())
        .collect();
    let w1_action = AutomorphismAction::from_fn(s5.clone(), w1.clone(), |i, x| {
        let c = w1.vector_coords(x).unwrap();
        let v = [c[0] + 3 * c[1], c[2] + 3 * c[3]];
        let w = vec_mat(&f9, &v, &inv9[i]);
        w1.vector_from_coords(&[w[0] % 3, w[0] / 3, w[1] % 3, w[1] / 3]).unwrap()
    })?;
    let w2_action = natural_action(&s5, &w2)?;
    let k = Group::direct_product(&w1, &w2)?;
    let nk2 = w2.order() as Elem;
    let action = AutomorphismAction::from_fn(s5.clone(), k.clone(), |i, x| {
        let h = s5.generators()[i];
        let (a, b) = (x / nk2, x % nk2);
        w1_action.apply(h, a) * nk2 + w2_action.apply(h, b)
    })?;
    let g = Group::semidirect_product(action)?.with_name("paper.mixed");
    let n = embed_kernel(&g, k.generators());
    Ok(MixedPair { pair: NamedPair::new("paper.mixed", n), w1_action, w2_action })
}

/// Element order histogram of the Mathieu group `M10`.
pub const M10_HISTOGRAM: [(u32, usize); 6] = [(1, 1), (2, 45), (3, 80), (4, 270), (5, 144), (8, 180)];

/// `A_6 ⋊ C_8` with the pair's supporting data.
#[derive(Debug, Clone)]
pub struct A6C8 {
    pub pair: NamedPair,
    pub a6: Arc<Group>,
    /// The automorphism of `A_6` induced by the `C_8` generator, as an element map.
    pub alpha: Vec<Elem>,
    /// `A_6` inside `G`.
    pub a6_in_g: Subgroup,
    /// Element order histogram of `A_6<alpha>` inside `Aut(A_6)`.
    pub extension_histogram: std::collections::BTreeMap<u32, usize>,
    pub s6_histogram: std::collections::BTreeMap<u32, usize>,
}

/// An automorphism of `A_6` sending 3-cycles to products of two 3-cycles.
pub fn exceptional_automorphism(a6: &Arc<Group>) -> Result<Vec<Elem>> {
    let gens = a6.generators();
    let ctype = |x: Elem| a6.as_permutation(x).unwrap().cycle_type();
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&g| {
            let t = ctype(g);
            let want = if t == vec![3] { vec![3, 3] } else { t };
            a6.elements().filter(|&y| ctype(y) == want).collect()
        })
        .collect();
    let mut images = vec![0; gens.len()];
    search_images(a6, a6, &candidates, &mut images, 0, &|map| check_automorphism(a6, map).is_ok())
        .ok_or_else(|| Error::SearchFailed("no exceptional automorphism of A6".into()))
}

pub fn build_a6_c8() -> Result<A6C8> {
    let a6 = alt(6)?;
    let as_perm = |map: Vec<Elem>| Perm::from_images(map);
    let inner = |t: &Perm| -> Vec<Elem> {
        a6.elements()
            .map(|x| {
                let p = a6.as_permutation(x).unwrap();
                a6.find_permutation(&t.inverse().then(p).then(t)).unwrap()
            })
            .collect()
    };
    let mut s6_gens: Vec<Perm> = Vec::new();
    for &g in a6.generators() {
        s6_gens.push(as_perm(inner(a6.as_permutation(g).unwrap()))?);
    }
    s6_gens.push(as_perm(inner(&perm(6, &[&[1, 2]])?))?);
    let eps = as_perm(exceptional_automorphism(&a6)?)?;
    let mut aut_gens = s6_gens.clone();
    aut_gens.push(eps);
    let degree = a6.order();
    let s6_auts = Group::from_permutations("aut_s6", degree, &s6_gens)?;
    let aut = Group::from_permutations("aut(a6)", degree, &aut_gens)?;
    if s6_auts.order() != 720 || aut.order() != 1440 {
        return Err(Error::SearchFailed(format!("automorphism groups of orders {} and {}", s6_auts.order(), aut.order())));
    }
    let inner_gens: Vec<Perm> = s6_gens[..a6.generators().len()].to_vec();
    let c8 = cyclic(8)?;
    for alpha in aut.elements() {
        if aut.element_order(alpha) != 4 {
            continue;
        }
        let p = aut.as_permutation(alpha).unwrap();
        if s6_auts.find_permutation(p).is_some() {
            continue;
        }
        let map: Vec<Elem> = p.images().to_vec();
        let action = AutomorphismAction::new(c8.clone(), a6.clone(), vec![map.clone()])?;
        let g = Group::semidirect_product(action)?.with_name("paper.a6c8");
        let a6_in_g = embed_kernel(&g, a6.generators());
        let x = g.semidirect_pair(a6.identity(), c8.generators()[0]).unwrap();
        let mut seeds = a6_in_g.generators().to_vec();
        seeds.push(g.mul(x, x));
        let n = Subgroup::closure(&g, &seeds);
        if n.index() != 2 || !equal_order(&n)? {
            continue;
        }
        let mut ext_gens = inner_gens.clone();
        ext_gens.push(p.clone());
        let ext = Group::from_permutations("a6.alpha", degree, &ext_gens)?;
        return Ok(A6C8 {
            pair: NamedPair::new("paper.a6c8", n),
            a6: a6.clone(),
            alpha: map,
            a6_in_g,
            extension_histogram: ext.order_histogram(),
            s6_histogram: s6_auts.order_histogram(),
        });
    }
    Err(Error::SearchFailed("no automorphism of A6 gives an equal order pair".into()))
}

// -------------------------------------------------------------------
// combinators
// -------------------------------------------------------------------

/// Constant order of the elements outside `N`, if the pair is equal order with one.
pub fn constant_outside_order(n: &Subgroup) -> Result<Option<u32>> {
    check_pair(n)?;
    let profile = CosetOrderProfile::compute(n);
    Ok(profile.constant_order())
}

/// `(G1 x G2, N1 x N2)` under the direct-product hypotheses.
pub fn combine_direct(p1: &NamedPair, p2: &NamedPair) -> Result<NamedPair> {
    let m1 = constant_outside_order(&p1.n)?
        .ok_or_else(|| Error::HypothesisViolated(format!("{}: outside orders are not constant", p1.name)))?;
    let m2 = constant_outside_order(&p2.n)?
        .ok_or_else(|| Error::HypothesisViolated(format!("{}: outside orders are not constant", p2.name)))?;
    let e1 = exponent_of(&p1.n);
    let e2 = exponent_of(&p2.n);
    if m1 as u64 % e2 != 0 {
        return Err(Error::HypothesisViolated(format!("exp(N2) = {e2} does not divide m1 = {m1}")));
    }
    if m2 as u64 % e1 != 0 {
        return Err(Error::HypothesisViolated(format!("exp(N1) = {e1} does not divide m2 = {m2}")));
    }
    let g = Group::direct_product(p1.group(), p2.group())?;
    let name = format!("{} x {}", p1.name, p2.name);
    let g = g.with_name(&name);
    let n = embed_direct(&g, p1.n.generators(), p2.n.generators());
    Ok(NamedPair::new(name, n))
}

/// `(G, KM)` from a Frobenius group `G = K ⋊ H` and an equal order pair `(H, M)`.
pub fn lift_through_frobenius(kernel: &Subgroup, complement: &Subgroup, m: &Subgroup) -> Result<NamedPair> {
    let g = kernel.group();
    if kernel.is_trivial() || kernel.is_whole() || !kernel.is_normal() || !is_frobenius_with_kernel(kernel)? {
        return Err(Error::NotFrobenius);
    }
    if complement.order() != kernel.index() || !complement.intersection(kernel).is_trivial() {
        return Err(Error::NotFrobenius);
    }
    if !m.is_subgroup_of(complement) {
        return Err(Error::InnerPairNotEqualOrder);
    }
    let (h, back) = complement.as_group();
    let pos: Vec<Elem> = m.generators().iter().map(|x| back.binary_search(x).unwrap() as Elem).collect();
    let inner = Subgroup::closure(&h, &pos);
    match equal_order(&inner) {
        Ok(true) => {}
        _ => return Err(Error::InnerPairNotEqualOrder),
    }
    let n = kernel.join(m);
    Ok(NamedPair::new(format!("lift({}, M{})", g.name(), m.order()), n))
}

/// `(K ⋊ C_{p^k}, K·M)` for a fixed-point-free automorphism `alpha` of prime order `p`.
pub fn fpf_extension(k: &Arc<Group>, alpha: &[Elem], exp_k: u32) -> Result<NamedPair> {
    check_automorphism(k, alpha)?;
    let mut order = 1u64;
    let mut y: Vec<Elem> = alpha.to_vec();
    while y.iter().enumerate().any(|(i, &v)| v as usize != i) {
        y = y.iter().map(|&v| alpha[v as usize]).collect();
        order += 1;
    }
    if !is_prime(order) {
        return Err(Error::OrderNotPrime(order));
    }
    if k.elements().any(|x| x != k.identity() && alpha[x as usize] == x) {
        return Err(Error::NotFixedPointFree);
    }
    if exp_k < 2 {
        return Err(Error::InvalidParameter("the cyclic p-group needs order at least p^2".into()));
    }
    let p = order;
    let c = cyclic(p.pow(exp_k) as usize)?;
    let action = AutomorphismAction::new(c.clone(), k.clone(), vec![alpha.to_vec()])?;
    let name = format!("fpf({}, {})", k.name(), c.order());
    let g = Group::semidirect_product(action)?.with_name(&name);
    let kernel = embed_kernel(&g, k.generators());
    let x = g.semidirect_pair(k.identity(), c.generators()[0]).unwrap();
    let mut seeds = kernel.generators().to_vec();
    seeds.push(g.pow(x, p as i64));
    Ok(NamedPair::new(name, Subgroup::closure(&g, &seeds)))
}

/// Inversion on an abelian group, as an element map.
pub fn inversion_map(k: &Group) -> Vec<Elem> {
    k.elements().map(|x| k.inv(x)).collect()
}

/// Candidate `N` for a p-group: central Omega sandwiches, the Hughes subgroup,
/// and normal subgroups containing `Omega_{n-1}`.
pub fn build_pgroup_pairs(p: &Arc<Group>) -> Result<Vec<Subgroup>> {
    let whole = Subgroup::whole(p);
    if p.order() == 1 || prime_power_decompose(p.order() as u64).is_none() {
        return Err(Error::NotAPGroup);
    }
    let z = center(p);
    let exp = exponent_of(&whole);
    let n_exp = prime_power_decompose(exp).map(|(_, e)| e).unwrap_or(0);
    let mut omegas = Vec::new();
    let mut z_omegas = Vec::new();
    for i in 0..=n_exp {
        omegas.push(omega(&whole, i)?);
        z_omegas.push(omega(&z, i)?);
    }
    let hughes = hughes_subgroup(&whole)?;
    let top = &omegas[n_exp.saturating_sub(1) as usize];
    let mut out = Vec::new();
    for n in normal_subgroups(p)? {
        if n.is_trivial() || n.is_whole() {
            continue;
        }
        let sandwich = (1..=n_exp as usize)
            .any(|i| n.is_subgroup_of(&z_omegas[i]) && omegas[i - 1].is_subgroup_of(&n));
        let is_hughes = n == hughes;
        let above = top.is_subgroup_of(&n);
        if sandwich || is_hughes || above {
            out.push(n);
        }
    }
    Ok(out)
}
