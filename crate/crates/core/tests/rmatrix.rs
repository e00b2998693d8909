use std::path::PathBuf;
use std::time::Instant;

use adoforge_core::ado::compare_polys;
use adoforge_core::json::PolyJson;
use adoforge_core::rmatrix::{ado_compare, normalized_nhat, num_extract, CompareTarget, PairMatrix, TorusTangle};
use adoforge_core::{Cyclotomic, HalfLaurent};

fn fixture(name: &str) -> HalfLaurent<Cyclotomic> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/rmatrix").join(format!("{name}.json"));
    let text = std::fs::read_to_string(&path).unwrap();
    serde_json::from_str::<PolyJson>(&text).unwrap().decode().unwrap()
}

#[test]
fn nhat_trefoil_displays() {
    assert_eq!(normalized_nhat(1, 3).unwrap().poly, fixture("NHAT3_T2_3"));
    assert_eq!(normalized_nhat(1, 4).unwrap().poly, fixture("NHAT4_T2_3"));
}

#[test]
fn nhat_is_odd() {
    for (s, r) in [(1, 2), (2, 3), (3, 4), (2, 5)] {
        let n = normalized_nhat(s, r).unwrap().poly;
        assert_eq!(n.invert_x(), n.neg(), "s = {s}, r = {r}");
    }
}

#[test]
fn num_displays_r3() {
    for s in 2..=8 {
        let t = Instant::now();
        let got = num_extract(s, 3).unwrap();
        let want = fixture(&format!("N3_T2_{}", 2 * s + 1));
        let c = compare_polys(&want, &got, 3, false);
        println!("r=3 s={s} {:?} {:.1?}", c.is_match(), t.elapsed());
        assert!(c.is_match(), "s = {s}: {c:?}");
    }
}

#[test]
fn num_displays_r4() {
    for s in 4..=6 {
        let t = Instant::now();
        let got = num_extract(s, 4).unwrap();
        let want = fixture(&format!("N4_T2_{}", 2 * s + 1));
        let c = compare_polys(&want, &got, 4, false);
        println!("r=4 s={s} {:?} {:.1?}", c.is_match(), t.elapsed());
        assert!(c.is_match(), "s = {s}: {c:?}");
    }
}

#[test]
fn compare_with_ado() {
    for s in 1..=8 {
        assert!(ado_compare(s, 3, CompareTarget::Closed).unwrap().is_match(), "r = 3, s = {s}");
    }
    for s in [1, 3, 4, 5, 6] {
        assert!(ado_compare(s, 4, CompareTarget::Closed).unwrap().is_match(), "r = 4, s = {s}");
    }
}

#[test]
fn uniform_z_degree() {
    for (s, r) in [(1, 3), (3, 3), (2, 4)] {
        let m = PairMatrix::crossing(r, false).power(2 * s + 1);
        assert_eq!(m.z_degrees(), vec![i64::from(2 * s + 1)]);
        let zs: Vec<i64> = TorusTangle::new(s, r).unwrap().closed().iter().map(|(e, _)| e[1]).collect();
        assert!(zs.iter().all(|&z| z == i64::from(2 * s + 1)));
    }
}
