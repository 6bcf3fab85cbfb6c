use wsatlas::atlas::semigroups_up_to;
use wsatlas::moduli::{
    build_record, dimension_bounds, reference_row, smoothing_component_dimension, verify_reference, CurveRecord,
    RecordOptions, ReferenceTable, RowStatus, ERRATA, LABEL_NOTES,
};
use wsatlas::{Error, Fp, NumericalSemigroup, Rational};

fn ns(s: &str) -> NumericalSemigroup {
    s.parse().unwrap()
}

fn records() -> Vec<CurveRecord> {
    let table = ReferenceTable::embedded();
    semigroups_up_to(7)
        .unwrap()
        .iter()
        .map(|s| build_record::<Fp>(s, &table, RecordOptions::default()).unwrap())
        .collect()
}

#[test]
fn bounds_and_smoothing_dimension() {
    assert_eq!(dimension_bounds(7, 4, 1).unwrap(), (15, 16));
    assert_eq!(dimension_bounds(2, 2, 0).unwrap(), (4, 4));
    assert!(matches!(dimension_bounds(0, 1, 0), Err(Error::GenusTooSmall(0))));
    assert_eq!(smoothing_component_dimension(1, 1), 2);
    assert_eq!(smoothing_component_dimension(2, 2), 5);
    assert_eq!(smoothing_component_dimension(7, 7), 20);
}

#[test]
fn embedded_table() {
    let table = ReferenceTable::embedded();
    assert_eq!(table.len(), 88);
    let row = table.by_name("N(6)_6").unwrap();
    assert_eq!(row.generators, [4, 7, 10, 13]);
    assert_eq!((row.genus, row.d, row.t), (6, 12, 3));
    assert_eq!(table.find(&[4, 7, 10, 13]), Some(row));
    assert!(table.find(&[2, 17]).is_none());
}

#[test]
fn single_records() {
    let table = ReferenceTable::embedded();
    let r = build_record::<Rational>(&ns("4,6,11,13"), &table, RecordOptions { include_t2: true }).unwrap();
    assert_eq!(r.genus, 6);
    assert_eq!((r.t, r.t_lambda), (3, 3));
    assert_eq!(r.betti, [1, 6, 8, 3]);
    assert_eq!(r.t1_plus, 2);
    assert_eq!((r.d_lower, r.d_upper), (11, 13));
    assert!(r.t2_total.is_some());

    let cusp = build_record::<Rational>(&ns("2,3"), &table, RecordOptions::default()).unwrap();
    assert_eq!(cusp.t1, [(-6, 1), (-4, 1)].into_iter().collect());
    assert_eq!((cusp.d_lower, cusp.d_upper), (1, 1));
    assert_eq!(cusp.label.as_deref(), Some("N(1)_1"));
    assert_eq!(cusp.t2_total, None);

    // Symmetric, F = 13.
    let r = build_record::<Fp>(&ns("7,8,9,10,11,12"), &table, RecordOptions::default()).unwrap();
    assert_eq!((r.genus, r.t, r.t1_plus, r.d_lower), (7, 1, 0, 13));

    assert!(matches!(
        build_record::<Fp>(&NumericalSemigroup::naturals(), &table, RecordOptions::default()),
        Err(Error::GenusTooSmall(0))
    ));
    let outside = build_record::<Fp>(&ns("2,17"), &table, RecordOptions::default()).unwrap();
    assert!(outside.label.is_none());
    assert!(matches!(reference_row(&outside, &table), Err(Error::UnknownLabel(g)) if g == "2,17"));
}

#[test]
fn full_table() {
    let table = ReferenceTable::embedded();
    let recs = records();
    assert_eq!(recs.len(), 88);
    for r in &recs {
        // Two independent routes to the type.
        assert_eq!(r.t, r.t_lambda, "{:?}", r.generators);
        assert_eq!(r.d_upper - r.d_lower, r.t1_plus as i64);
        assert!(r.label.is_some());
    }
    let report = verify_reference(&recs, &table);
    assert!(report.is_clean(), "{report}");
    assert_eq!(report.matched(), 88);
    let mut corrected: Vec<&str> = report
        .rows
        .iter()
        .filter(|r| matches!(r.status, RowStatus::Corrected { .. }))
        .map(|r| r.name.as_deref().unwrap())
        .collect();
    let mut expected: Vec<&str> = ERRATA.iter().map(|e| e.name).collect();
    expected.sort_unstable();
    corrected.sort_unstable();
    assert_eq!(corrected, expected);
    assert_eq!(report.notes.len(), LABEL_NOTES.len());
    assert!(report.to_string().starts_with("88/88 rows match\n"));

    // Tamper with one printed value.
    let mut tampered = table.clone();
    let row = tampered.rows.iter_mut().find(|r| r.name == "N(6)_6").unwrap();
    row.d += 1;
    let report = verify_reference(&recs, &tampered);
    let bad = report.mismatches();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].name.as_deref(), Some("N(6)_6"));
    assert!(matches!(&bad[0].status, RowStatus::Mismatch { field, expected, computed }
        if field == "d" && expected == "13" && computed == "12"));

    assert!(verify_reference(&[], &table).rows.is_empty());
}

#[test]
fn table_from_csv() {
    let src = "name,generators,genus,d,t,base\nN(2)_1,2 5,2,3,1,sm\n";
    let t = ReferenceTable::from_reader(src.as_bytes()).unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!(t.rows[0].generators, [2, 5]);
    assert!(ReferenceTable::from_reader("name,generators\nx,2 a\n".as_bytes()).is_err());
}
