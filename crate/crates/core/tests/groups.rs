use std::collections::BTreeMap;
use std::sync::Arc;

use eqorder_core::constructions::{alt, cyclic, dihedral, generalized_quaternion, sl2, sym};
use eqorder_core::ff::FiniteField;
use eqorder_core::grp::{AutomorphismAction, Group, Perm, Subgroup};
use eqorder_core::Error;

fn p(d: usize, cycles: &[&[u32]]) -> Perm {
    Perm::from_cycles(d, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn hist(pairs: &[(u32, usize)]) -> BTreeMap<u32, usize> {
    pairs.iter().copied().collect()
}

#[test]
fn permutation_closures() {
    let s3 = Group::from_permutations("s3", 3, &[p(3, &[&[1, 2]]), p(3, &[&[1, 2, 3]])]).unwrap();
    assert_eq!(s3.order(), 6);
    let f20 = Group::from_permutations("f20", 5, &[p(5, &[&[1, 2, 3, 4, 5]]), p(5, &[&[2, 3, 5, 4]])]).unwrap();
    assert_eq!(f20.order(), 20);
    let triv = Group::from_permutations("t", 2, &[Perm::identity(2)]).unwrap();
    assert_eq!(triv.order(), 1);
}

#[test]
fn non_bijection_is_rejected() {
    assert!(matches!(Perm::from_images(vec![1, 1]), Err(Error::NotABijection(_))));
}

#[test]
fn element_cap_is_enforced() {
    // sym(8) has 40320 elements; a closure that large under a tiny cap must fail
    let gens = [p(8, &[&[1, 2]]), p(8, &[&[1, 2, 3, 4, 5, 6, 7, 8]])];
    eqorder_core::grp::set_element_cap(1000);
    let r = Group::from_permutations("s8", 8, &gens);
    eqorder_core::grp::set_element_cap(eqorder_core::grp::DEFAULT_ELEMENT_CAP);
    assert!(matches!(r, Err(Error::ElementCapExceeded { cap: 1000 })));
}

#[test]
fn sl2_orders() {
    for (q, n) in [(2, 6), (3, 24), (4, 60), (5, 120), (9, 720)] {
        assert_eq!(sl2(q).unwrap().order(), n, "q = {q}");
    }
}

#[test]
fn element_orders() {
    let s5 = sym(5).unwrap();
    let x = s5.find_permutation(&p(5, &[&[1, 2, 3], &[4, 5]])).unwrap();
    assert_eq!(s5.element_order(x), 6);
    assert_eq!(s5.element_order(s5.identity()), 1);
    let sl = sl2(5).unwrap();
    // [[0,1],[-1,0]]
    let m = sl.find_matrix(&[0, 1, 4, 0]).unwrap();
    assert_eq!(sl.element_order(m), 4);
    // independent oracle: repeated multiplication
    for x in sl.elements() {
        let mut y = x;
        let mut k = 1;
        while y != sl.identity() {
            y = sl.mul(y, x);
            k += 1;
        }
        assert_eq!(sl.element_order(x), k);
    }
}

#[test]
fn direct_products() {
    let g = Group::direct_product(&sym(3).unwrap(), &alt(4).unwrap()).unwrap();
    assert_eq!(g.order(), 72);
    let c1 = cyclic(1).unwrap();
    let s4 = sym(4).unwrap();
    let h = Group::direct_product(&c1, &s4).unwrap();
    assert_eq!(h.order(), 24);
    assert_eq!(h.order_histogram(), s4.order_histogram());
    let v = Group::direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap();
    assert_eq!((v.order(), v.exponent()), (4, 2));
    // order of (a, b) is the lcm of the component orders
    let (a, b) = g.direct_factors().unwrap();
    for x in g.elements() {
        let (u, w) = g.direct_split(x).unwrap();
        let l = eqorder_core::arith::lcm(a.element_order(u) as u64, b.element_order(w) as u64);
        assert_eq!(g.element_order(x) as u64, l);
    }
}

#[test]
fn semidirect_products() {
    let c5 = cyclic(5).unwrap();
    let c4 = cyclic(4).unwrap();
    // generator of C4 acts as k -> k^2, an automorphism of order 4
    let sq: Vec<u32> = c5.elements().map(|k| c5.mul(k, k)).collect();
    let act = AutomorphismAction::new(c4.clone(), c5.clone(), vec![sq]).unwrap();
    let g = Group::semidirect_product(act).unwrap();
    assert_eq!(g.order(), 20);
    let f20 = Group::from_permutations("f20", 5, &[p(5, &[&[1, 2, 3, 4, 5]]), p(5, &[&[2, 3, 5, 4]])]).unwrap();
    assert_eq!(g.order_histogram(), f20.order_histogram());

    let triv = AutomorphismAction::trivial(c4.clone(), c5.clone()).unwrap();
    let sd = Group::semidirect_product(triv).unwrap();
    let dp = Group::direct_product(&c5, &c4).unwrap();
    assert_eq!(sd.order_histogram(), dp.order_histogram());

    let f = Arc::new(FiniteField::new(3, 1).unwrap());
    let h = Group::sl2(f.clone()).unwrap();
    let v = Group::vector_space(f, 2).unwrap();
    let nat = eqorder_core::constructions::natural_action(&h, &v).unwrap();
    assert_eq!(Group::semidirect_product(nat).unwrap().order(), 216);
}

#[test]
fn non_automorphisms_are_rejected() {
    let c5 = cyclic(5).unwrap();
    let c2 = cyclic(2).unwrap();
    // a transposition of two nonidentity elements is a bijection but not a homomorphism
    let mut map: Vec<u32> = c5.elements().collect();
    let (a, b) = (c5.generators()[0], c5.mul(c5.generators()[0], c5.generators()[0]));
    map.swap(a as usize, b as usize);
    assert!(matches!(
        AutomorphismAction::new(c2.clone(), c5.clone(), vec![map]),
        Err(Error::ActionNotAutomorphism(_))
    ));
    // k -> k^2 has order 4, so it cannot be the image of an involution
    let sq: Vec<u32> = c5.elements().map(|k| c5.mul(k, k)).collect();
    assert!(matches!(AutomorphismAction::new(c2, c5, vec![sq]), Err(Error::ActionNotAutomorphism(_))));
}

#[test]
fn quotients() {
    let s4 = sym(4).unwrap();
    let v4 = Subgroup::closure(
        &s4,
        &[
            s4.find_permutation(&p(4, &[&[1, 2], &[3, 4]])).unwrap(),
            s4.find_permutation(&p(4, &[&[1, 3], &[2, 4]])).unwrap(),
        ],
    );
    assert_eq!(v4.order(), 4);
    let (q, proj) = v4.quotient().unwrap();
    assert_eq!(q.order_histogram(), hist(&[(1, 1), (2, 3), (3, 2)]));
    for x in s4.elements() {
        for y in s4.elements() {
            assert_eq!(proj[s4.mul(x, y) as usize], q.mul(proj[x as usize], proj[y as usize]));
        }
    }
    let kernel: Vec<u32> = s4.elements().filter(|&x| proj[x as usize] == q.identity()).collect();
    assert_eq!(kernel, v4.elements());
    let (t, _) = Subgroup::whole(&s4).quotient().unwrap();
    assert_eq!(t.order(), 1);
    let t2 = Subgroup::closure(&s4, &[s4.find_permutation(&p(4, &[&[1, 2]])).unwrap()]);
    assert!(matches!(t2.quotient(), Err(Error::NotNormal)));
}

#[test]
fn closures() {
    let c8 = cyclic(8).unwrap();
    let x = c8.generators()[0];
    assert_eq!(Subgroup::closure(&c8, &[c8.identity()]).order(), 1);
    assert_eq!(Subgroup::closure(&c8, &[c8.mul(x, x)]).order(), 4);
    for g in [sym(4).unwrap(), dihedral(12).unwrap(), generalized_quaternion(16).unwrap()] {
        for a in g.elements() {
            for b in [g.identity(), g.generators()[0]] {
                let h = Subgroup::closure(&g, &[a, b]);
                assert_eq!(g.order() % h.order(), 0);
                for &u in h.elements() {
                    for &w in h.elements() {
                        assert!(h.contains(g.mul(u, w)));
                    }
                }
            }
        }
    }
}

#[test]
fn standard_groups() {
    assert_eq!(alt(6).unwrap().order(), 360);
    assert_eq!(sym(8).unwrap().order(), 40320);
    assert_eq!(alt(7).unwrap().order(), 2520);
    let q16 = generalized_quaternion(16).unwrap();
    assert_eq!(q16.order(), 16);
    assert_eq!(q16.order_histogram(), hist(&[(1, 1), (2, 1), (4, 10), (8, 4)]));
    assert_eq!(dihedral(8).unwrap().order_histogram(), hist(&[(1, 1), (2, 5), (4, 2)]));
    assert_eq!(dihedral(4).unwrap().order_histogram(), hist(&[(1, 1), (2, 3)]));
}
