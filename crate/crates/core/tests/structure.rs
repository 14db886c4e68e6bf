use std::collections::BTreeMap;
use std::sync::Arc;

use eqorder_core::arith::{p_part, prime_divisors};
use eqorder_core::constructions::{
    abelian, alt, build_f20, cyclic, dihedral, elementary_abelian, extraspecial_27, generalized_quaternion, sl2, sym,
};
use eqorder_core::grp::{Group, Perm, Subgroup};
use eqorder_core::structure::*;
use eqorder_core::Error;

fn p(d: usize, cycles: &[&[u32]]) -> Perm {
    Perm::from_cycles(d, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn orders(subs: &[Subgroup]) -> Vec<usize> {
    subs.iter().map(|s| s.order()).collect()
}

fn class_sizes(g: &Arc<Group>) -> Vec<usize> {
    let mut v: Vec<usize> = g.conjugacy_classes().classes.iter().map(|c| c.len()).collect();
    v.sort_unstable();
    v
}

/// Brute-force center: elements commuting with every element.
fn center_oracle(g: &Arc<Group>) -> usize {
    g.elements().filter(|&x| g.elements().all(|y| g.mul(x, y) == g.mul(y, x))).count()
}

#[test]
fn centers() {
    let c6 = cyclic(6).unwrap();
    assert_eq!(center(&c6).order(), 6);
    let q8 = generalized_quaternion(8).unwrap();
    assert_eq!(center(&q8).order(), 2);
    for g in [sym(4).unwrap(), dihedral(12).unwrap(), sl2(3).unwrap(), extraspecial_27().unwrap()] {
        assert_eq!(center(&g).order(), center_oracle(&g), "{}", g.name());
    }
}

#[test]
fn centralizers_and_normalizers() {
    let s4 = sym(4).unwrap();
    assert!(centralizer(&s4, &[s4.identity()]).is_whole());
    let f20 = build_f20().unwrap();
    let g = f20.group();
    let c5 = derived_subgroup(&Subgroup::whole(g));
    assert_eq!(c5.order(), 5);
    for x in g.elements().filter(|&x| g.element_order(x) == 4) {
        assert!(centralizer(g, &[x]).intersection(&c5).is_trivial());
    }
    let p2 = sylow_subgroup(&Subgroup::whole(&s4), 2);
    let n = normalizer(&p2);
    assert_eq!(n, p2);
    assert_eq!(n.index(), 3);
}

#[test]
fn conjugacy_class_sizes() {
    assert_eq!(class_sizes(&cyclic(7).unwrap()), vec![1; 7]);
    assert_eq!(class_sizes(&sym(3).unwrap()), vec![1, 2, 3]);
    assert_eq!(class_sizes(&build_f20().unwrap().group().clone()), vec![1, 4, 5, 5, 5]);
    for g in [sym(5).unwrap(), sl2(5).unwrap(), alt(6).unwrap()] {
        let sizes = class_sizes(&g);
        assert_eq!(sizes.iter().sum::<usize>(), g.order());
        assert!(sizes.iter().all(|s| g.order() % s == 0));
    }
}

#[test]
fn normal_subgroup_lattices() {
    assert_eq!(orders(&normal_subgroups(&sym(4).unwrap()).unwrap()), vec![1, 4, 12, 24]);
    assert_eq!(orders(&normal_subgroups(&alt(5).unwrap()).unwrap()), vec![1, 60]);
    assert_eq!(orders(&normal_subgroups(&cyclic(8).unwrap()).unwrap()), vec![1, 2, 4, 8]);
    // all 16 subgroups of C2 x C2 x C2 are normal
    assert_eq!(normal_subgroups(&elementary_abelian(2, 3).unwrap()).unwrap().len(), 16);
    assert!(matches!(normal_subgroups(&sym(8).unwrap()), Err(Error::ElementCapExceeded { .. })));
}

#[test]
fn derived_and_lower_central_series() {
    let s4 = Subgroup::whole(&sym(4).unwrap());
    assert_eq!(orders(&derived_series(&s4)), vec![24, 12, 4, 1]);
    assert!(is_solvable(&s4));
    let sl5 = Subgroup::whole(&sl2(5).unwrap());
    assert!(solvable_residual(&sl5).is_whole());
    assert!(solvable_residual(&Subgroup::whole(&abelian(&[4, 6]).unwrap())).is_trivial());
    assert!(is_nilpotent(&Subgroup::whole(&dihedral(16).unwrap())));
    assert!(!is_nilpotent(&Subgroup::whole(&dihedral(10).unwrap())));
}

#[test]
fn fitting_and_radical() {
    let s4 = sym(4).unwrap();
    assert_eq!(fitting_subgroup(&Subgroup::whole(&s4)).order(), 4);
    assert_eq!(fitting_height(&s4).unwrap(), 3);
    let d16 = dihedral(16).unwrap();
    assert!(fitting_subgroup(&Subgroup::whole(&d16)).is_whole());
    assert_eq!(fitting_height(&d16).unwrap(), 1);
    assert!(matches!(fitting_height(&alt(5).unwrap()), Err(Error::NotSolvable)));
    let a5c6 = Group::direct_product(&alt(5).unwrap(), &cyclic(6).unwrap()).unwrap();
    assert_eq!(solvable_radical(&a5c6).order(), 6);
    assert!(solvable_radical(&s4).is_whole());
}

/// F(G) and R(G) against scans of the full normal-subgroup list.
#[test]
fn fitting_and_radical_match_lattice_scan() {
    let groups = vec![
        sym(4).unwrap(),
        sl2(3).unwrap(),
        sl2(5).unwrap(),
        Group::direct_product(&sym(3).unwrap(), &alt(4).unwrap()).unwrap(),
        Group::direct_product(&alt(5).unwrap(), &cyclic(2).unwrap()).unwrap(),
        dihedral(24).unwrap(),
        build_f20().unwrap().group().clone(),
    ];
    for g in groups {
        let normals = normal_subgroups(&g).unwrap();
        let nil: Vec<&Subgroup> = normals.iter().filter(|n| is_nilpotent(n)).collect();
        let largest_nil = nil.iter().max_by_key(|n| n.order()).unwrap();
        let f = fitting_subgroup(&Subgroup::whole(&g));
        assert_eq!(&f, *largest_nil, "{}", g.name());
        assert!(nil.iter().all(|n| n.is_subgroup_of(&f)));
        let sol: Vec<&Subgroup> = normals.iter().filter(|n| is_solvable(n)).collect();
        let r = solvable_radical(&g);
        assert_eq!(&r, *sol.iter().max_by_key(|n| n.order()).unwrap(), "{}", g.name());
        let (q, _) = r.quotient().unwrap();
        assert!(solvable_radical(&q).is_trivial());
    }
}

#[test]
fn sylow_orders() {
    for g in [sym(5).unwrap(), sl2(7).unwrap(), alt(6).unwrap(), dihedral(36).unwrap()] {
        let whole = Subgroup::whole(&g);
        for q in prime_divisors(g.order() as u64) {
            let s = sylow_subgroup(&whole, q);
            assert_eq!(s.order() as u64, p_part(g.order() as u64, q));
        }
    }
}

#[test]
fn omega_frattini_hughes() {
    let c8 = Subgroup::whole(&cyclic(8).unwrap());
    assert_eq!(omega(&c8, 2).unwrap().order(), 4);
    for i in 1..4 {
        assert!(omega(&c8, i - 1).unwrap().is_subgroup_of(&omega(&c8, i).unwrap()));
    }
    let d8 = dihedral(8).unwrap();
    let h = hughes_subgroup(&Subgroup::whole(&d8)).unwrap();
    assert_eq!(h.order(), 4);
    assert!(is_cyclic(&h) && h.is_normal());
    assert!(frattini_of_p_group(&Subgroup::whole(&elementary_abelian(3, 3).unwrap())).unwrap().is_trivial());
    assert_eq!(frattini_of_p_group(&Subgroup::whole(&generalized_quaternion(16).unwrap())).unwrap().order(), 4);
    assert!(matches!(omega(&Subgroup::whole(&sym(3).unwrap()), 1), Err(Error::NotAPGroup)));
}

/// Frattini quotient of a p-group is elementary abelian of rank d(P).
#[test]
fn frattini_quotient_is_elementary() {
    for g in [dihedral(16).unwrap(), extraspecial_27().unwrap(), abelian(&[4, 2]).unwrap(), generalized_quaternion(32).unwrap()] {
        let phi = frattini_of_p_group(&Subgroup::whole(&g)).unwrap();
        let (q, _) = phi.quotient().unwrap();
        let pr = prime_divisors(g.order() as u64)[0] as u32;
        assert!(q.is_abelian());
        assert!(q.element_orders().iter().all(|&o| o == 1 || o == pr), "{}", g.name());
    }
}

#[test]
fn cyclic_or_quaternion() {
    let t = |g: Arc<Group>| is_cyclic_or_generalized_quaternion(&Subgroup::whole(&g)).unwrap();
    assert!(t(generalized_quaternion(16).unwrap()));
    assert!(!t(abelian(&[2, 2]).unwrap()));
    assert!(t(cyclic(9).unwrap()));
    assert!(!t(extraspecial_27().unwrap()));
    assert!(!t(dihedral(8).unwrap()));
    // agrees with "cyclic, or non-cyclic of order >= 8 with a unique involution" on 2-groups up to 64
    for g in [
        cyclic(16).unwrap(),
        dihedral(16).unwrap(),
        generalized_quaternion(32).unwrap(),
        generalized_quaternion(64).unwrap(),
        abelian(&[4, 4]).unwrap(),
        abelian(&[8, 2]).unwrap(),
        Group::direct_product(&generalized_quaternion(8).unwrap(), &cyclic(2).unwrap()).unwrap(),
    ] {
        let w = Subgroup::whole(&g);
        let inv = g.element_orders().iter().filter(|&&o| o == 2).count();
        let direct = is_cyclic(&w) || (g.order() >= 8 && inv == 1);
        assert_eq!(is_cyclic_or_generalized_quaternion(&w).unwrap(), direct, "{}", g.name());
    }
    assert!(matches!(is_cyclic_or_generalized_quaternion(&Subgroup::whole(&sym(3).unwrap())), Err(Error::NotAPGroup)));
}

#[test]
fn fingerprints() {
    let f = fingerprint(&sl2(5).unwrap());
    assert_eq!((f.order, f.is_perfect, f.center_order), (120, true, 2));
    assert!(!f.is_simple);
    assert!(is_simple(&alt(5).unwrap()));
    assert!(is_simple(&alt(6).unwrap()));
    assert!(!is_simple(&sym(5).unwrap()));
    assert!(!is_perfect(&cyclic(5).unwrap()));
    // fingerprints separate SL2(5) from S5 and from A5 x C2
    let s5 = fingerprint(&sym(5).unwrap());
    let a5c2 = fingerprint(&Group::direct_product(&alt(5).unwrap(), &cyclic(2).unwrap()).unwrap());
    assert_ne!(f, s5);
    assert_ne!(f, a5c2);
    let hist: BTreeMap<u32, usize> = f.order_histogram.clone();
    assert_eq!(hist.values().sum::<usize>(), 120);
    assert_eq!(hist[&1], 1);
}

#[test]
fn exponent() {
    assert_eq!(sym(4).unwrap().exponent(), 12);
    assert_eq!(extraspecial_27().unwrap().exponent(), 3);
    let s = Subgroup::closure(&sym(4).unwrap(), &[sym(4).unwrap().find_permutation(&p(4, &[&[1, 2, 3, 4]])).unwrap()]);
    assert_eq!(exponent_of(&s), 4);
}
