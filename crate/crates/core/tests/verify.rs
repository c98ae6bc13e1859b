use std::collections::BTreeSet;

use num_bigint::BigInt;
use quandle_core::algebra::{orbits, FiniteQuandle, Permutation, DEFAULT_GROUP_CAP};
use quandle_core::families::{
    conjugation_quandle, dihedral_quandle, dihedral_table, CayleyTable, DihedralOrder, FiniteBackend, GAlexFinite,
    LatticeGAlex, QuandleBackend, UnimodularMatrix,
};
use quandle_core::schreier::GeneratorSet;
use quandle_core::verify::{
    reports_to_json_lines, verify_dis_properties, verify_free_action_isometry, verify_free_transitive_reconstruction,
    verify_homogeneous_component_isometry, verify_inner_case_commutator, verify_p_equals_dis, TheoremReport,
};
use quandle_core::{Automorphism, Element, Error};
use serde_json::json;

const CAP: usize = DEFAULT_GROUP_CAP;

fn r(n: usize) -> FiniteQuandle {
    FiniteQuandle::from_table(dihedral_table(n)).unwrap()
}

fn all_pass(reports: &[TheoremReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

fn transposition(g: &CayleyTable) -> usize {
    (0..g.order())
        .find(|&x| x != g.identity() && g.mul(x, x) == g.identity() && g.conjugacy_class(x).len() == 3)
        .unwrap()
}

#[test]
fn dis_properties_on_small_dihedral_quandles() {
    let r4 = verify_dis_properties(&r(4), "R_4", CAP).unwrap();
    assert!(all_pass(&r4));
    assert_eq!(r4[0].details, json!({"inn": 4, "dis": 2}));
    assert_eq!(r4[1].details["index"], 2);

    let r3 = verify_dis_properties(&r(3), "R_3", CAP).unwrap();
    assert!(all_pass(&r3));
    assert_eq!(r3[0].details, json!({"inn": 6, "dis": 3}));

    let t = verify_dis_properties(&FiniteQuandle::trivial(5), "T_5", CAP).unwrap();
    assert!(all_pass(&t));
    assert_eq!(t[0].details, json!({"inn": 1, "dis": 1}));
}

#[test]
fn dis_properties_on_dihedral_and_conjugation_quandles() {
    for n in 2..=12 {
        assert!(all_pass(&verify_dis_properties(&r(n), &format!("R_{n}"), CAP).unwrap()), "R_{n}");
    }
    let groups = vec![
        ("S_3", CayleyTable::symmetric(3).unwrap().0),
        ("D_4", CayleyTable::dihedral(4).unwrap().0),
        ("Q_8", CayleyTable::quaternion()),
    ];
    for (name, g) in groups {
        let classes: BTreeSet<Vec<usize>> = (0..g.order()).map(|x| g.conjugacy_class(x)).collect();
        for class in &classes {
            let q = conjugation_quandle(&g, class).unwrap();
            assert!(all_pass(&verify_dis_properties(&q, name, CAP).unwrap()), "{name} {class:?}");
        }
        let whole: Vec<usize> = (0..g.order()).collect();
        let q = conjugation_quandle(&g, &whole).unwrap();
        assert!(all_pass(&verify_dis_properties(&q, name, CAP).unwrap()), "{name}");
    }
}

#[test]
fn reconstruction_examples() {
    let q = r(3);
    let dis = q.displacement_group(CAP).unwrap();
    let rep = verify_free_transitive_reconstruction(&q, &dis, None, 0, "R_3", CAP).unwrap();
    assert!(rep.pass, "{rep:?}");

    let one = FiniteQuandle::trivial(1);
    let g = one.inner_group(CAP).unwrap();
    assert!(verify_free_transitive_reconstruction(&one, &g, None, 0, "T_1", CAP).unwrap().pass);

    let q = r(4);
    let dis = q.displacement_group(CAP).unwrap();
    let rep = verify_free_transitive_reconstruction(&q, &dis, None, 0, "R_4", CAP).unwrap();
    assert!(!rep.pass);
    let w = rep.witness.unwrap();
    assert_eq!(w["hypothesis"], "transitive");
    // independent re-check: the group has more than one orbit
    assert!(orbits(dis.elements(), &[0, 1, 2, 3]).len() > 1);
}

#[test]
fn reconstruction_rejects_non_automorphisms() {
    let q = r(5);
    let g = quandle_core::algebra::EnumeratedGroup::generated_by(5, vec![Permutation::from_cycles(5, &[&[0, 1]]).unwrap()], CAP)
        .unwrap();
    assert!(matches!(
        verify_free_transitive_reconstruction(&q, &g, None, 0, "R_5", CAP),
        Err(Error::NotQuandleAutomorphism { .. })
    ));
}

#[test]
fn reconstruction_round_trips_galex_quandles() {
    let (s3, _) = CayleyTable::symmetric(3).unwrap();
    let (a4, _) = CayleyTable::alternating(4).unwrap();
    let z5 = CayleyTable::cyclic(5).unwrap();
    let cases = vec![
        GAlexFinite::inner(s3.clone(), transposition(&s3)).unwrap(),
        GAlexFinite::inner(a4.clone(), 1).unwrap(),
        GAlexFinite::new(z5, vec![0, 2, 4, 1, 3]).unwrap(),
    ];
    for g in cases {
        let translations: Vec<Permutation> = (0..g.group().order()).map(|x| g.right_translation(x)).collect();
        let group = quandle_core::algebra::EnumeratedGroup::generated_by(g.group().order(), translations, CAP).unwrap();
        let inn = g.quandle().inner_group(CAP).unwrap();
        let ambient = quandle_core::algebra::EnumeratedGroup::generated_by(
            g.group().order(),
            inn.elements().iter().chain(group.elements()).cloned(),
            CAP,
        )
        .unwrap();
        let rep = verify_free_transitive_reconstruction(g.quandle(), &group, Some(&ambient), 0, "galex", CAP)
            .unwrap();
        assert!(rep.pass, "{rep:?}");
    }
}

#[test]
fn p_equals_dis_examples() {
    let z3 = CayleyTable::cyclic(3).unwrap();
    let rep = verify_p_equals_dis(&GAlexFinite::new(z3.clone(), vec![0, 2, 1]).unwrap(), "Z/3 neg", CAP).unwrap();
    assert!(rep.pass);
    assert_eq!((rep.details["p_order"].clone(), rep.details["dis_order"].clone()), (json!(3), json!(3)));

    let rep = verify_p_equals_dis(&GAlexFinite::new(z3, vec![0, 1, 2]).unwrap(), "Z/3 id", CAP).unwrap();
    assert!(rep.pass);
    assert_eq!((rep.details["p_order"].clone(), rep.details["dis_order"].clone()), (json!(1), json!(1)));

    let (s3, _) = CayleyTable::symmetric(3).unwrap();
    let g = GAlexFinite::inner(s3.clone(), transposition(&s3)).unwrap();
    let rep = verify_p_equals_dis(&g, "S_3 (12)", CAP).unwrap();
    assert!(rep.pass);
    assert_eq!(rep.details["p_order"], 3);
    let p: Vec<usize> = serde_json::from_value(rep.details["p"].clone()).unwrap();
    let a3: Vec<usize> = (0..6).filter(|&x| s3.mul(s3.mul(x, x), x) == s3.identity()).collect();
    assert_eq!(p, a3);
}

#[test]
fn inner_commutator_examples() {
    let (s3, _) = CayleyTable::symmetric(3).unwrap();
    let rep = verify_inner_case_commutator(&s3, transposition(&s3), "S_3 (12)", CAP).unwrap();
    assert!(rep.pass, "{rep:?}");

    let z4 = CayleyTable::cyclic(4).unwrap();
    for g in 0..4 {
        let rep = verify_inner_case_commutator(&z4, g, "Z/4", CAP).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.details["p"], json!([0]));
    }
}

/// `P` for the double transposition in `A_4` is the Klein group, not the
/// trivial commutator subgroup of the Klein group; it is `[A_4, V_4]`.
#[test]
fn inner_commutator_in_a4_reports_the_mismatch() {
    let (a4, group) = CayleyTable::alternating(4).unwrap();
    let g = group.position(&Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()).unwrap();
    let rep = verify_inner_case_commutator(&a4, g, "A_4 (01)(23)", CAP).unwrap();
    assert!(!rep.pass);
    assert_eq!(rep.details["closure_abelianization"], json!([2, 2]));
    assert_eq!(rep.details["closure_abelianization_is_cyclic_of_order_g"], json!(false));
    assert_eq!(rep.details["p_equals_commutator_with_group"], json!(true));
    // independent re-check of the witness: P has four elements, [V_4, V_4] one
    let p: Vec<usize> = serde_json::from_value(rep.details["p"].clone()).unwrap();
    assert_eq!(p.len(), 4);
    assert_eq!(rep.details["commutator_of_closure"], json!([a4.identity()]));
    assert_eq!(rep.witness.unwrap()["in_p_only"].as_array().unwrap().len(), 3);
}

#[test]
fn p_reports_agree_between_checks() {
    let (s3, _) = CayleyTable::symmetric(3).unwrap();
    let (a4, _) = CayleyTable::alternating(4).unwrap();
    let (d4, _) = CayleyTable::dihedral(4).unwrap();
    for (table, g) in [(s3.clone(), transposition(&s3)), (a4, 1), (d4, 1)] {
        let a = verify_p_equals_dis(&GAlexFinite::inner(table.clone(), g).unwrap(), "x", CAP).unwrap();
        let b = verify_inner_case_commutator(&table, g, "x", CAP).unwrap();
        assert_eq!(a.details["p"], b.details["p"]);
        assert!(a.pass);
    }
}

#[test]
fn free_action_isometry_examples() {
    let r = dihedral_quandle(DihedralOrder::Infinite).unwrap();
    let u = r.displacement_generators().unwrap().unwrap();
    let rep = verify_free_action_isometry(r.as_ref(), &u, &Element::Int(0), 15, "R_inf", CAP).unwrap();
    assert!(rep.pass, "{rep:?}");
    assert_eq!(rep.details["vertices"], 31);

    let t = UnimodularMatrix::from_i64(&[vec![0, -1], vec![1, 0]]).unwrap();
    let lat = LatticeGAlex::new(t);
    let u = lat.displacement_generators().unwrap().unwrap();
    let rep = verify_free_action_isometry(&lat, &u, &lat.default_base(), 8, "Z^2", CAP).unwrap();
    assert!(rep.pass, "{rep:?}");

    let rep = verify_free_action_isometry(&lat, &u, &lat.default_base(), 0, "Z^2", CAP).unwrap();
    assert!(rep.pass);
}

#[test]
fn free_action_isometry_requires_freeness() {
    let b = FiniteBackend::new("dihedral(3)", r(3));
    let a = b.inner_generators().unwrap();
    let rep = verify_free_action_isometry(&b, &a, &Element::Index(0), 3, "R_3 inner", CAP).unwrap();
    assert!(!rep.pass);
    let w = rep.witness.unwrap();
    assert_eq!(w["hypothesis"], "free");
    let u = b.displacement_generators().unwrap().unwrap();
    assert!(verify_free_action_isometry(&b, &u, &Element::Index(0), 3, "R_3 dis", CAP).unwrap().pass);
}

#[test]
fn translations_of_the_lattice_form_a_free_action() {
    let lat = LatticeGAlex::new(UnimodularMatrix::from_i64(&[vec![1, 1], vec![0, 1]]).unwrap());
    let u = lat.displacement_generators().unwrap().unwrap();
    assert!(u.iter().all(|g| g.forward.is_translation()));
    let base = Element::Vector(vec![BigInt::from(3), BigInt::from(-1)]);
    assert!(verify_free_action_isometry(&lat, &u, &base, 6, "unipotent", CAP).unwrap().pass);
}

#[test]
fn homogeneous_component_examples() {
    let shift = |n: usize| Permutation::new((0..n).map(|x| (x + 1) % n).collect()).unwrap();
    let rep = verify_homogeneous_component_isometry(&r(4), &shift(4), &[0, 2], "R_4").unwrap();
    assert!(rep.pass);
    assert_eq!(rep.details["image"], json!([1, 3]));

    let rep = verify_homogeneous_component_isometry(&r(4), &Permutation::identity(4), &[1, 3], "R_4").unwrap();
    assert!(rep.pass);

    let rep = verify_homogeneous_component_isometry(&r(6), &shift(6), &[0, 2, 4], "R_6").unwrap();
    assert!(rep.pass);
    assert_eq!(rep.details["image"], json!([1, 3, 5]));

    let swap = Permutation::from_cycles(5, &[&[0, 1]]).unwrap();
    assert!(matches!(
        verify_homogeneous_component_isometry(&r(5), &swap, &[0, 1, 2, 3, 4], "R_5"),
        Err(Error::NotQuandleAutomorphism { .. })
    ));
}

#[test]
fn reports_serialize_one_per_line() {
    let reports = verify_dis_properties(&r(5), "R_5", CAP).unwrap();
    let text = reports_to_json_lines(&reports);
    assert_eq!(text.lines().count(), 4);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["instance"], "R_5");
        assert_eq!(v["pass"], true);
        assert!(v.get("witness").is_none());
    }
}

#[test]
fn generator_sets_mixing_families_are_rejected() {
    let a = Automorphism::Perm(Permutation::identity(3));
    let b = Automorphism::Signed(quandle_core::families::SignedAffine::identity());
    assert!(matches!(
        GeneratorSet::new(vec![("a".into(), a), ("b".into(), b)]),
        Err(Error::MixedRepresentation { .. })
    ));
}
