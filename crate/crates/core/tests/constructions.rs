use std::collections::BTreeMap;
use std::sync::Arc;

use eqorder_core::constructions::*;
use eqorder_core::grp::{Group, Subgroup};
use eqorder_core::pairs::{equal_order, is_camina_pair, is_equal_order_pair, is_frobenius_with_kernel};
use eqorder_core::structure::*;
use eqorder_core::Error;
use proptest::prelude::*;

fn pair_in(g: &Arc<Group>, seeds: &[u32], name: &str) -> NamedPair {
    NamedPair::new(name, Subgroup::closure(g, seeds))
}

/// `(C_{p^k}, C_{p^j})` as a named pair.
fn cyclic_pair(n: usize, m: usize) -> NamedPair {
    let g = cyclic(n).unwrap();
    let x = g.generators()[0];
    pair_in(&g, &[g.pow(x, (n / m) as i64)], &format!("C{n}/C{m}"))
}

fn outside_orders(n: &Subgroup) -> Vec<u32> {
    let g = n.group();
    let set: std::collections::BTreeSet<u32> = g.elements().filter(|&x| !n.contains(x)).map(|x| g.element_order(x)).collect();
    set.into_iter().collect()
}

#[test]
fn standard_builders() {
    assert_eq!(cyclic(8).unwrap().order(), 8);
    assert_eq!(alt(6).unwrap().order(), 360);
    let q16 = generalized_quaternion(16).unwrap();
    assert_eq!(q16.element_orders().iter().filter(|&&o| o == 2).count(), 1);
    assert_eq!(elementary_abelian(3, 4).unwrap().exponent(), 3);
    assert_eq!(abelian(&[4, 2, 3]).unwrap().order(), 24);
    assert_eq!(dihedral(10).unwrap().order(), 10);
    assert!(matches!(sym(9), Err(Error::InvalidParameter(_))));
}

#[test]
fn f20() {
    let pair = build_f20().unwrap();
    assert_eq!((pair.group().order(), pair.n.order()), (20, 10));
    assert!(pair.n.is_normal());
    assert!(is_equal_order_pair(&pair.n).unwrap().0);
    assert!(!is_camina_pair(&pair.n).unwrap());
    assert!(!is_nilpotent(&pair.n));
}

#[test]
fn frob72() {
    let d = frob72_data().unwrap();
    assert_eq!(d.group.order(), 72);
    assert_eq!(d.kernel.order(), 9);
    assert!(d.kernel.group().elements().filter(|&x| d.kernel.contains(x)).all(|x| d.group.element_order(x) <= 3));
    let pair = build_frob72().unwrap();
    assert_eq!(pair.n.index(), 4);
    assert!(is_camina_pair(&pair.n).unwrap());
    let q0n = d.complement.intersection(&pair.n);
    assert_eq!(q0n.order(), 2);
    // C_P(Q0 ∩ N) = 1
    let c = centralizer_in(&d.kernel, q0n.generators());
    assert!(c.is_trivial());
}

#[test]
fn natural_pairs_small() {
    let p3 = build_natural_pair(3).unwrap();
    assert_eq!(p3.group().order(), 216);
    assert!(equal_order(&p3.n).unwrap());
    assert!(is_solvable(&Subgroup::whole(p3.group())));

    let p4 = build_natural_pair(4).unwrap();
    let (ok, profile) = is_equal_order_pair(&p4.n).unwrap();
    assert!(!ok);
    assert!(profile.first_mixed().unwrap().orders.len() >= 2);

    let p5 = build_natural_pair(5).unwrap();
    assert_eq!(p5.group().order(), 3000);
    assert!(equal_order(&p5.n).unwrap());
    let (q, _) = p5.n.quotient().unwrap();
    assert!(!is_solvable(&Subgroup::whole(&q)));

    assert!(matches!(build_natural_pair(6), Err(Error::InvalidParameter(_))));
}

#[test]
fn a6_c8() {
    let d = build_a6_c8().unwrap();
    let g = d.pair.group();
    assert_eq!(g.order(), 2880);
    assert_eq!(d.pair.n.index(), 2);
    let outside: Vec<u32> = g.elements().filter(|&x| !d.pair.n.contains(x)).collect();
    assert_eq!(outside.len(), 1440);
    assert!(outside.iter().all(|&x| g.element_order(x) == 8));
    let z = center(g);
    assert_eq!(z.order(), 4);
    assert!(is_cyclic(&z));
    let r = solvable_radical(g);
    assert_eq!(r, z);
    let (q, _) = r.quotient().unwrap();
    assert_eq!(q.order(), 720);
    let m10: BTreeMap<u32, usize> = M10_HISTOGRAM.iter().copied().collect();
    assert_eq!(q.order_histogram(), m10);
    assert_ne!(d.extension_histogram, d.s6_histogram);
    // N' is the simple factor A6
    let np = derived_subgroup(&d.pair.n);
    assert_eq!(np, d.a6_in_g);
    assert!(is_simple(&np.as_group().0));
}

#[test]
fn sl2_5_embedding() {
    let (s5, s9, phi) = embed_sl2_5_in_sl2_9().unwrap();
    for a in s5.elements() {
        for b in s5.elements().step_by(7) {
            assert_eq!(phi[s5.mul(a, b) as usize], s9.mul(phi[a as usize], phi[b as usize]));
        }
    }
    let mut img = phi.clone();
    img.sort_unstable();
    img.dedup();
    assert_eq!(img.len(), 120);
}

#[test]
fn combine_examples() {
    let s3 = sym(3).unwrap();
    let a3 = NamedPair::new("s3", derived_subgroup(&Subgroup::whole(&s3)));
    let a4 = alt(4).unwrap();
    let v4 = NamedPair::new("a4", derived_subgroup(&Subgroup::whole(&a4)));
    let c = combine_direct(&a3, &v4).unwrap();
    assert_eq!(c.group().order(), 72);
    assert!(equal_order(&c.n).unwrap());

    let c42 = cyclic_pair(4, 2);
    let c = combine_direct(&c42, &c42).unwrap();
    assert_eq!(c.group().order(), 16);
    assert!(equal_order(&c.n).unwrap());

    // exp(V4) = 2 does not divide the outside order 3 of (C7 ⋊ C3, C7)
    let (_, k1, _) = affine_frobenius(7, 3).unwrap();
    let (_, k2, _) = affine_frobenius(4, 3).unwrap();
    let r = combine_direct(&NamedPair::new("f21", k1), &NamedPair::new("a4", k2));
    assert!(matches!(r, Err(Error::HypothesisViolated(_))));

    // S4 / A4 has mixed outside orders
    let s4 = sym(4).unwrap();
    let a4n = NamedPair::new("s4", derived_subgroup(&Subgroup::whole(&s4)));
    assert!(matches!(combine_direct(&a4n, &c42), Err(Error::HypothesisViolated(_))));
}

#[test]
fn frobenius_pair_products() {
    // D10 has a 5-kernel with complement of order 2; C2^4 ⋊ C5 has a 2-kernel with complement of order 5
    let (_, k1, _) = affine_frobenius(5, 2).unwrap();
    let (_, k2, _) = affine_frobenius(16, 5).unwrap();
    let c = combine_direct(&NamedPair::new("d10", k1), &NamedPair::new("c2^4:c5", k2)).unwrap();
    assert_eq!(c.group().order(), 800);
    assert!(equal_order(&c.n).unwrap());
    assert_eq!(outside_orders(&c.n), vec![2, 5, 10]);
    // F20 over its kernel C5 has outside orders 2 and 4
    let (_, k1, _) = affine_frobenius(5, 4).unwrap();
    let (_, k2, _) = affine_frobenius(16, 5).unwrap();
    let r = combine_direct(&NamedPair::new("f20", k1), &NamedPair::new("c2^4:c5", k2));
    assert!(matches!(r, Err(Error::HypothesisViolated(_))));
}

#[test]
fn lift_examples() {
    let f20 = build_f20().unwrap();
    let g = f20.group();
    let c5 = derived_subgroup(&Subgroup::whole(g));
    let c4 = sylow_subgroup(&Subgroup::whole(g), 2);
    let c2 = c4.intersection(&f20.n);
    let lifted = lift_through_frobenius(&c5, &c4, &c2).unwrap();
    assert_eq!(lifted.n, f20.n);

    let d = frob72_data().unwrap();
    let z = center(&d.complement.as_group().0);
    assert_eq!(z.order(), 2);
    let gp = derived_subgroup(&Subgroup::whole(&d.group));
    let zq = d.complement.intersection(&gp);
    let lifted = lift_through_frobenius(&d.kernel, &d.complement, &zq).unwrap();
    assert_eq!(lifted.n, gp);

    // cyclic complement C9 acting on GF(19)
    let (_, k, h) = affine_frobenius(19, 9).unwrap();
    let g = k.group().clone();
    let y = h.generators()[0];
    let m = Subgroup::closure(&g, &[g.pow(y, 3)]);
    assert_eq!(m.order(), 3);
    let lifted = lift_through_frobenius(&k, &h, &m).unwrap();
    assert!(equal_order(&lifted.n).unwrap());

    // errors
    let s4 = sym(4).unwrap();
    let v4 = derived_subgroup(&derived_subgroup(&Subgroup::whole(&s4)));
    let p2 = sylow_subgroup(&Subgroup::whole(&s4), 3);
    assert!(matches!(lift_through_frobenius(&v4, &p2, &p2), Err(Error::NotFrobenius)));
    let trivial = Subgroup::trivial(&g);
    assert!(matches!(lift_through_frobenius(&k, &h, &trivial), Err(Error::InnerPairNotEqualOrder)));
}

#[test]
fn fpf_examples() {
    let c7 = cyclic(7).unwrap();
    let inv = inversion_map(&c7);
    let pair = fpf_extension(&c7, &inv, 2).unwrap();
    assert_eq!(pair.group().order(), 28);
    assert_eq!(pair.n.order(), 14);
    assert!(equal_order(&pair.n).unwrap());

    let c5 = cyclic(5).unwrap();
    let sq: Vec<u32> = c5.elements().map(|x| c5.mul(x, x)).collect();
    assert!(matches!(fpf_extension(&c5, &sq, 2), Err(Error::OrderNotPrime(4))));

    let c3sq = elementary_abelian(3, 2).unwrap();
    assert!(fpf_extension(&c3sq, &inversion_map(&c3sq), 1).is_err());
    let id: Vec<u32> = c3sq.elements().collect();
    assert!(fpf_extension(&c3sq, &id, 2).is_err());
    // x -> x^2 on C7 has order 3 and no fixed points
    let sq7: Vec<u32> = c7.elements().map(|x| c7.mul(x, x)).collect();
    let pair = fpf_extension(&c7, &sq7, 2).unwrap();
    assert_eq!(pair.group().order(), 63);
    assert!(equal_order(&pair.n).unwrap());
}

#[test]
fn pgroup_candidates() {
    let c8 = cyclic(8).unwrap();
    let mut orders: Vec<usize> = build_pgroup_pairs(&c8).unwrap().iter().map(|n| n.order()).collect();
    orders.sort_unstable();
    assert_eq!(orders, vec![2, 4]);
    let d8 = dihedral(8).unwrap();
    let hughes = hughes_subgroup(&Subgroup::whole(&d8)).unwrap();
    assert!(build_pgroup_pairs(&d8).unwrap().contains(&hughes));
    assert!(equal_order(&hughes).unwrap());
    let e27 = extraspecial_27().unwrap();
    let cands = build_pgroup_pairs(&e27).unwrap();
    let proper = normal_subgroups(&e27).unwrap().into_iter().filter(|n| !n.is_trivial() && !n.is_whole()).count();
    assert_eq!(cands.len(), proper);
    for n in cands.iter() {
        assert!(equal_order(n).unwrap());
    }
    assert!(matches!(build_pgroup_pairs(&sym(3).unwrap()), Err(Error::NotAPGroup)));
}

#[test]
fn builds_are_deterministic() {
    let a = build_a6_c8().unwrap();
    let b = build_a6_c8().unwrap();
    assert_eq!(a.alpha, b.alpha);
    assert_eq!(a.pair.n.elements(), b.pair.n.elements());
    let (_, _, p1) = embed_sl2_5_in_sl2_9().unwrap();
    let (_, _, p2) = embed_sl2_5_in_sl2_9().unwrap();
    assert_eq!(p1, p2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// `(C_{p^a}, C_{p^i})` has constant outside order exactly when `i = a - 1`.
    #[test]
    fn combined_cyclic_pairs(p in prop::sample::select(vec![2usize, 3]), a in 2u32..4, b in 2u32..4, i in 1u32..3, j in 1u32..3) {
        prop_assume!(i < a && j < b);
        let (n1, n2, m1, m2) = (p.pow(a), p.pow(b), p.pow(i), p.pow(j));
        let res = combine_direct(&cyclic_pair(n1, m1), &cyclic_pair(n2, m2));
        let ok = i + 1 == a && j + 1 == b && n1 % m2 == 0 && n2 % m1 == 0;
        prop_assert_eq!(res.is_ok(), ok);
        if let Ok(c) = res {
            prop_assert_eq!(c.group().order(), n1 * n2);
            prop_assert!(equal_order(&c.n).unwrap());
            for m in outside_orders(&c.n) {
                prop_assert!(m as usize == n1 || m as usize == n2 || m as usize == n1.max(n2));
            }
        }
    }

    /// Fixed-point-free extensions of cyclic groups are equal order pairs.
    #[test]
    fn fpf_cyclic(q in prop::sample::select(vec![3usize, 5, 7, 11, 13]), k in 2u32..4) {
        let c = cyclic(q).unwrap();
        let pair = fpf_extension(&c, &inversion_map(&c), k).unwrap();
        prop_assert_eq!(pair.group().order(), q * 2usize.pow(k));
        prop_assert!(equal_order(&pair.n).unwrap());
        prop_assert!(!is_frobenius_with_kernel(&pair.n).unwrap());
    }
}
