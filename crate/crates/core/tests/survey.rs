use weightmult::bz::Projection;
use weightmult::rootsystem::{LieType, RootWeight};
use weightmult::survey::{self, Bounds, Target, TargetSelection};

fn ty(s: &str) -> LieType {
    s.parse().unwrap()
}

fn found(name: &str, cap: i64) -> Vec<String> {
    survey::find_nonprimitive_multone(ty(name), cap)
        .unwrap()
        .iter()
        .map(|r| r.zeta.to_string())
        .collect()
}

// Multiplicity-one nonprimitive weights at cap 8, frozen from the oracle.
const FROZEN: &[(&str, &[&str])] = &[
    ("A2", &["A2:1,2", "A2:2,1"]),
    ("A3", &["A3:1,2,1", "A3:1,2,3", "A3:3,2,1"]),
    ("A4", &["A4:1,2,3,4", "A4:4,3,2,1"]),
    ("B2", &["B2:2,2"]),
    ("B3", &["B3:1,2,3", "B3:2,2,2"]),
    ("B4", &["B4:1,2,3,3", "B4:2,2,2,2"]),
    ("C3", &["C3:2,3,2"]),
    ("C4", &[]),
    ("C5", &[]),
    ("D4", &["D4:1,2,1,2", "D4:1,2,2,1", "D4:2,2,1,1"]),
    ("D5", &["D5:2,2,2,1,1"]),
    ("D6", &["D6:2,2,2,2,1,1"]),
    ("E6", &[]),
    ("E7", &[]),
    ("F4", &[]),
    ("G2", &["G2:4,2"]),
];

#[test]
fn frozen_survey_at_cap_8() {
    for (name, expected) in FROZEN {
        assert_eq!(found(name, 8), *expected, "{name}");
    }
}

#[test]
fn table_reproduced_where_it_is_complete() {
    for name in [
        "A2", "B2", "B3", "B4", "B5", "B6", "C4", "C5", "D4", "D5", "D6", "E6", "E7", "F4", "G2",
    ] {
        let report = survey::verify_theorem_main(ty(name), 8).unwrap();
        assert!(
            report.table_matches(),
            "{name}: {:?} {:?}",
            report.unmatched,
            report.missed
        );
    }
}

// The symmetric-power weights (n+1)ω_n and (n+1)ω_1 of A_n, n ≥ 3, and
// ω_1 + ω_3 over 2ω_1 in C_3 have multiplicity one but are absent from the
// table.
#[test]
fn table_misses_a_and_c3_weights() {
    for n in 3..=5usize {
        let t = LieType::new(weightmult::rootsystem::Family::A, n).unwrap();
        let report = survey::verify_theorem_main(t, 8).unwrap();
        let up: Vec<i64> = (1..=n as i64).collect();
        let down: Vec<i64> = up.iter().rev().copied().collect();
        assert_eq!(
            report.unmatched,
            vec![
                RootWeight::new(t, up).unwrap(),
                RootWeight::new(t, down).unwrap()
            ]
        );
        assert!(report.missed.is_empty());
    }
    let report = survey::verify_theorem_main(ty("C3"), 8).unwrap();
    assert_eq!(
        report.unmatched,
        vec!["C3:2,3,2".parse::<RootWeight>().unwrap()]
    );
}

#[test]
fn table_members_have_multiplicity_one() {
    for name in ["A3", "B5", "D5", "D6", "G2"] {
        let report = survey::verify_theorem_main(ty(name), 8).unwrap();
        for zeta in survey::enumerate_dominant_above(ty(name), &Target::Long.root(ty(name)), 8) {
            if survey::table2_predicate(ty(name), &zeta) {
                assert_eq!(report.oracle_value(&zeta, Target::Long), Some(1), "{zeta}");
            }
        }
    }
}

#[test]
fn sublemmas_hold_at_cap_8() {
    for name in ["A3", "A4", "A5", "B3", "B4", "B5", "C4", "C5", "D5", "D6"] {
        assert!(
            survey::sublemma_violations(ty(name), 8).is_empty(),
            "{name}"
        );
    }
}

#[test]
fn e8_slice_is_unique() {
    let bounds = Bounds::cap(10).with_fixed(7, 2);
    let records =
        survey::nonprimitive_candidates(ty("E8"), &bounds, TargetSelection::Both, Projection::Drop)
            .unwrap();
    assert_eq!(records.len(), 1);
    assert_eq!(records[0].zeta.to_string(), "E8:4,5,7,10,8,6,4,2");
    assert_eq!(records[0].oracle, 7);
}

#[test]
fn restrict_fast_path_never_disagrees() {
    for name in ["A3", "A4", "A5", "B4", "C3", "C4", "D4", "D5", "F4", "G2"] {
        let report = survey::verify_in(ty(name), &Bounds::cap(8), Projection::Restrict).unwrap();
        assert!(report.disagreements.is_empty(), "{name}");
    }
}

#[test]
fn enumeration_is_lexicographic() {
    for name in ["B3", "D4", "G2"] {
        let list = survey::dominant_box(ty(name), 7);
        assert!(
            list.windows(2).all(|p| p[0].coeffs() < p[1].coeffs()),
            "{name}"
        );
    }
}
