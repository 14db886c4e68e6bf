use eqorder_core::constructions::*;
use eqorder_core::verify::*;
use eqorder_core::Error;

fn small_catalog() -> Vec<CatalogEntry> {
    let mut v = vec![
        CatalogEntry::exhaustive("cyclic(8)", cyclic(8).unwrap()).unwrap(),
        CatalogEntry::exhaustive("sym(4)", sym(4).unwrap()).unwrap(),
        CatalogEntry::exhaustive("genq(8)", generalized_quaternion(8).unwrap()).unwrap(),
        CatalogEntry::exhaustive("dihedral(12)", dihedral(12).unwrap()).unwrap(),
        CatalogEntry::from_pair(&build_f20().unwrap()).unwrap(),
        CatalogEntry::from_pair(&build_s3xa4().unwrap()).unwrap(),
    ];
    for (name, g) in abelian_p_groups(&[2], 16).unwrap() {
        v.push(CatalogEntry::exhaustive(name, g).unwrap().with_scope(&["P3.2"]));
    }
    v
}

#[test]
fn theorem_selection() {
    assert_eq!(select_theorems::<&str>(&[]).unwrap().len(), THEOREM_IDS.len());
    assert_eq!(select_theorems(&["B"]).unwrap(), vec!["B.a", "B.b"]);
    assert_eq!(select_theorems(&["P2.4"]).unwrap().len(), 4);
    assert_eq!(select_theorems(&["D.c", "A"]).unwrap(), vec!["A", "D.c"]);
    assert!(matches!(select_theorems(&["Z"]), Err(Error::UnknownTheorem { .. })));
    // prefixes match on a dot boundary only
    assert!(select_theorems(&["P2.4.e"]).is_err());
    assert!(select_theorems(&["P3.ex"]).is_err());
}

#[test]
fn abelian_type_counts() {
    // partitions of 1..=6 for p = 2 (order <= 64) and 1..=4 for p = 3 (order <= 81)
    assert_eq!(abelian_p_groups(&[2], 64).unwrap().len(), 1 + 2 + 3 + 5 + 7 + 11);
    assert_eq!(abelian_p_groups(&[3], 81).unwrap().len(), 1 + 2 + 3 + 5);
}

#[test]
fn small_sweep_has_no_failures() {
    let cat = small_catalog();
    let report = run_harness(&cat, &THEOREM_IDS, Some(2)).unwrap();
    for r in &report.reports {
        for p in &r.pairs {
            assert_ne!(p.verdict, Verdict::Fail, "{} on {} {}: {:?}", r.theorem_id, p.group, p.n_label, p.witness);
        }
    }
    let a = report.report("A").unwrap();
    assert!(a.totals.pass > 0);
    // scoped entries only show up under P3.2
    assert!(a.pairs.iter().all(|p| !p.group.starts_with("abelian")));
    assert!(report.report("P3.2").unwrap().pairs.iter().any(|p| p.group.starts_with("abelian")));
}

#[test]
fn non_nilpotent_checks_on_f20() {
    let cat = vec![CatalogEntry::from_pair(&build_f20().unwrap()).unwrap()];
    let report = run_harness(&cat, &["D.a", "D.b"], None).unwrap();
    for r in &report.reports {
        // the order-10 subgroup is the only non-nilpotent proper N
        let passes: Vec<_> = r.pairs.iter().filter(|p| p.verdict == Verdict::Pass).collect();
        assert_eq!(passes.len(), 1, "{}", r.theorem_id);
        assert_eq!(passes[0].n_order, 10);
    }
}

#[test]
fn equal_order_pair_search() {
    let c8 = find_all_equal_order_pairs(&cyclic(8).unwrap()).unwrap();
    assert_eq!(c8.len(), 2);
    assert!(c8.iter().all(|(_, r)| r.is_equal_order));
    let s4 = find_all_equal_order_pairs(&sym(4).unwrap()).unwrap();
    assert!(s4.iter().all(|(_, r)| !r.is_equal_order));
    let q8 = find_all_equal_order_pairs(&generalized_quaternion(8).unwrap()).unwrap();
    // the center and the three cyclic subgroups of order 4
    assert_eq!(q8.iter().filter(|(_, r)| r.is_equal_order).count(), 4);
}

#[test]
fn reports_are_deterministic() {
    let cat = small_catalog();
    let a = run_harness(&cat, &THEOREM_IDS, Some(1)).unwrap().to_json();
    let b = run_harness(&cat, &THEOREM_IDS, Some(4)).unwrap().to_json();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["reports"].as_array().unwrap().len(), THEOREM_IDS.len());
}

#[test]
fn csv_summary() {
    let cat = vec![CatalogEntry::exhaustive("cyclic(4)", cyclic(4).unwrap()).unwrap()];
    let report = run_harness(&cat, &["A", "P3.1"], None).unwrap();
    assert_eq!(report.to_csv(), "theorem_id,pass,fail,hypothesis_not_met\nA,1,0,0\nP3.1,1,0,0\n");
}

#[test]
fn nilpotent_n_skips_non_nilpotent_checks() {
    let cat = vec![
        CatalogEntry::exhaustive("cyclic(8)", cyclic(8).unwrap()).unwrap(),
        CatalogEntry::exhaustive("genq(8)", generalized_quaternion(8).unwrap()).unwrap(),
    ];
    let report = run_harness(&cat, &select_theorems(&["D"]).unwrap(), None).unwrap();
    for r in &report.reports {
        assert_eq!(r.totals.hypothesis_not_met, 6, "{}", r.theorem_id);
        assert_eq!(r.totals.pass + r.totals.fail, 0);
    }
}
