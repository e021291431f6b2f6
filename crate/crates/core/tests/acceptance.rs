use std::io::Write;
use std::sync::OnceLock;

use gkit_core::field::FieldSpec;
use gkit_core::verify::{verify, Fault, Status, VerifyConfig, Workspace};

fn workspace() -> &'static Workspace {
    static WS: OnceLock<Workspace> = OnceLock::new();
    WS.get_or_init(|| Workspace::new(VerifyConfig::default()))
}

fn criterion(id: u8) {
    let row = workspace().run(id);
    // Written to the raw handle so the line shows without --nocapture.
    writeln!(std::io::stderr(), "{row}").unwrap();
    assert_eq!(row.status, Status::Pass, "{row}");
}

#[test]
fn criterion_1_alpha2_classification() {
    criterion(1);
}

#[test]
fn criterion_2_trianglefree_alpha3_classification() {
    criterion(2);
}

#[test]
fn criterion_3_alpha3_identities() {
    criterion(3);
}

#[test]
fn criterion_4_necessary_conditions() {
    criterion(4);
}

#[test]
fn criterion_5_route_equivalence() {
    criterion(5);
}

#[test]
fn criterion_6_w2() {
    criterion(6);
}

#[test]
fn criterion_7_homology_soundness() {
    criterion(7);
}

#[test]
fn criterion_8_brute_force_oracles() {
    criterion(8);
}

#[test]
fn dehn_sommerville_symmetry() {
    criterion(9);
}

#[test]
fn injected_h_fault_is_caught() {
    let ws = Workspace::new(VerifyConfig { fault: Some(Fault::HOffByOne), probe_max_n: 8, ..VerifyConfig::default() });
    assert_eq!(ws.run(9).status, Status::Fail);
    assert_eq!(ws.run(3).status, Status::Fail);
}

#[test]
fn injected_route_flip_is_caught() {
    let cfg = VerifyConfig { fault: Some(Fault::RouteFlip), probe_max_n: 8, corpus_size: 20, ..VerifyConfig::default() };
    let ws = Workspace::new(cfg.clone());
    assert_eq!(ws.run(5).status, Status::Fail);
    assert!(verify(cfg).route_disagreement);
}

#[test]
fn missing_field_marks_rows_conditional() {
    let ws = Workspace::new(VerifyConfig { fields: vec![FieldSpec::Q, FieldSpec::GF3], probe_max_n: 8, ..VerifyConfig::default() });
    for id in [1, 5, 7] {
        assert_eq!(ws.run(id).status, Status::Conditional, "row {id}");
    }
    assert_eq!(ws.run(2).status, Status::Pass);
}
