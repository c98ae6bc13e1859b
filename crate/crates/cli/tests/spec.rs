use quandle_cli::spec::{ActionTag, Family, GroupSpec, SubsetSpec, Twist};
use quandle_cli::{parse_spec, SpecErrorCode};
use quandle_core::algebra::DEFAULT_GROUP_CAP;
use quandle_core::Element;

#[test]
fn infinite_dihedral_spec() {
    let spec = parse_spec(r#"{"family":"dihedral","n":"inf"}"#).unwrap();
    assert_eq!(spec.family, Family::Dihedral(None));
    assert_eq!(spec.action, ActionTag::Inner);
    let model = spec.instantiate(DEFAULT_GROUP_CAP).unwrap();
    assert_eq!(model.backend.id(), "dihedral(inf)");
    assert_eq!(model.backend.operate(&Element::Int(3), &Element::Int(5), 1).unwrap(), Element::Int(7));
    assert!(model.finite.is_none());
}

#[test]
fn quarter_turn_is_accepted() {
    let spec = parse_spec(r#"{"family":"galex-lattice","t":[[0,-1],[1,0]]}"#).unwrap();
    let Family::GAlexLattice(t) = &spec.family else {
        panic!("wrong family")
    };
    assert_eq!(t.determinant().to_string(), "1");
    assert!(spec.instantiate(DEFAULT_GROUP_CAP).unwrap().lattice.is_some());
}

#[test]
fn determinant_two_is_rejected_with_its_line() {
    let text = "{\n  \"family\": \"galex-lattice\",\n  \"t\": [[2, 0], [0, 1]]\n}";
    let err = parse_spec(text).unwrap_err();
    assert_eq!(err.code, SpecErrorCode::NonUnimodular);
    assert_eq!(err.field.as_deref(), Some("t"));
    assert_eq!(err.line, Some(3));
}

#[test]
fn syntax_errors_carry_line_and_column() {
    let err = parse_spec("{\n\"family\": \"free\",\n\"alphabet\": ab}").unwrap_err();
    assert_eq!(err.code, SpecErrorCode::InvalidJson);
    assert_eq!(err.line, Some(3));
    assert!(err.column.is_some());
}

#[test]
fn error_codes_are_distinct() {
    let codes = [
        SpecErrorCode::InvalidJson,
        SpecErrorCode::NotAnObject,
        SpecErrorCode::UnknownFamily,
        SpecErrorCode::UnknownAction,
        SpecErrorCode::MissingField,
        SpecErrorCode::UnknownField,
        SpecErrorCode::InvalidParameter,
        SpecErrorCode::MalformedTable,
        SpecErrorCode::NonUnimodular,
        SpecErrorCode::InvalidGroup,
        SpecErrorCode::NotAutomorphism,
        SpecErrorCode::NotConjugationClosed,
        SpecErrorCode::AxiomViolation,
        SpecErrorCode::InvalidGenerators,
    ];
    let mut names: Vec<&str> = codes.iter().map(|c| c.as_str()).collect();
    names.sort_unstable();
    names.dedup();
    assert_eq!(names.len(), codes.len());
}

#[test]
fn field_validation() {
    let code = |text: &str| parse_spec(text).unwrap_err().code;
    assert_eq!(code(r#"[1, 2]"#), SpecErrorCode::NotAnObject);
    assert_eq!(code(r#"{"family":"dihedral","n":3,"t":[[1]]}"#), SpecErrorCode::UnknownField);
    assert_eq!(code(r#"{"family":"dihedral","n":0}"#), SpecErrorCode::InvalidParameter);
    assert_eq!(code(r#"{"family":"free","alphabet":"a1"}"#), SpecErrorCode::InvalidParameter);
    assert_eq!(code(r#"{"family":"galex-finite","group":"S_3"}"#), SpecErrorCode::MissingField);
    assert_eq!(code(r#"{"family":"dihedral","n":3,"generators":"s_0"}"#), SpecErrorCode::InvalidGenerators);
    assert_eq!(code(r#"{"family":"conjugation","group":{"table":[[0]],"permutations":[]}}"#), SpecErrorCode::InvalidGroup);
}

#[test]
fn group_forms() {
    let spec = parse_spec(r#"{"family":"conjugation","group":{"permutations":[[1,0,2],[0,2,1]]},"subset":{"class_of":"(0 1)"}}"#)
        .unwrap();
    assert_eq!(
        spec.family,
        Family::Conjugation {
            group: GroupSpec::Permutations(vec![vec![1, 0, 2], vec![0, 2, 1]]),
            subset: SubsetSpec::ClassOf(quandle_cli::spec::GroupRef::Label("(0 1)".into())),
        }
    );
    let model = spec.instantiate(DEFAULT_GROUP_CAP).unwrap();
    assert_eq!(model.finite.unwrap().size(), 3);

    let z5 = parse_spec(r#"{"family":"galex-finite","group":"Z/5","sigma":[0,2,4,1,3]}"#).unwrap();
    assert!(matches!(z5.family, Family::GAlexFinite { twist: Twist::Sigma(_), .. }));
    let q = z5.instantiate(DEFAULT_GROUP_CAP).unwrap().finite.unwrap();
    // x ◁ y = 2x - y over Z/5
    assert_eq!(q.op(1, 0), 2);
    assert_eq!(q.op(0, 1), 4);
}

#[test]
fn instantiation_errors() {
    let err = |text: &str| match parse_spec(text).unwrap().instantiate(DEFAULT_GROUP_CAP) {
        Err(quandle_cli::spec::InstantiateError::Spec(e)) => e.code,
        other => panic!("expected a spec error, got {:?}", other.err()),
    };
    assert_eq!(err(r#"{"family":"galex-finite","group":"Z/4","sigma":[0,2,1,3]}"#), SpecErrorCode::NotAutomorphism);
    assert_eq!(err(r#"{"family":"conjugation","group":"S_3","subset":[1]}"#), SpecErrorCode::NotConjugationClosed);
    assert_eq!(err(r#"{"family":"conjugation","group":"T_3"}"#), SpecErrorCode::InvalidGroup);
    assert_eq!(err(r#"{"family":"finite-table","table":[[1,1],[0,0]]}"#), SpecErrorCode::AxiomViolation);
    assert_eq!(err(r#"{"family":"galex-finite","group":"S_3","inner":"(0 1 2 3)"}"#), SpecErrorCode::InvalidParameter);

    let capped = parse_spec(r#"{"family":"conjugation","group":"S_6"}"#)
        .unwrap()
        .instantiate(100);
    assert!(matches!(capped, Err(quandle_cli::spec::InstantiateError::Core(quandle_core::Error::BoundExceeded { .. }))));
}

#[test]
fn explicit_generators_are_used() {
    let spec = parse_spec(r#"{"family":"dihedral","n":"inf","generators":["s_0","s_1","s_5"]}"#).unwrap();
    let model = spec.instantiate(DEFAULT_GROUP_CAP).unwrap();
    let gens = model.generators(&spec).unwrap();
    assert_eq!(gens.names(), vec!["s_0", "s_1", "s_5"]);

    let bad = parse_spec(r#"{"family":"dihedral","n":"inf","generators":["t_0"]}"#).unwrap();
    let model = bad.instantiate(DEFAULT_GROUP_CAP).unwrap();
    assert!(model.generators(&bad).is_err());
}
