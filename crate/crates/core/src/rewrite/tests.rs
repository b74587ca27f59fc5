use super::*;
use crate::freealg::defining_relations;
use crate::scalar::Scalar;

fn generic(bound: usize) -> RewriteSystem<Scalar> {
    let mut s = RewriteSystem::new(defining_relations(CMode::Generic).to_vec(), CMode::Generic);
    s.complete(bound).unwrap();
    s
}

fn w(s: &str) -> Word {
    Word::from_digits(s).unwrap()
}

#[test]
fn low_degree_has_only_the_relations() {
    let s = generic(4);
    let leads: Vec<String> = s.rules().iter().map(|r| r.lead.to_digits()).collect();
    assert_eq!(leads, ["0111", "0001"]);
}

#[test]
fn normal_counts_match_the_hilbert_series() {
    let s = generic(8);
    let got: Vec<usize> = (0..=8).map(|d| s.normal_count(d).unwrap()).collect();
    assert_eq!(got, [1, 2, 4, 8, 14, 24, 40, 64, 100]);
    let z = {
        let mut z = RewriteSystem::new(defining_relations(CMode::Zero).to_vec(), CMode::Zero);
        z.complete(8).unwrap();
        z
    };
    let got: Vec<usize> = (0..=8).map(|d| z.normal_count(d).unwrap()).collect();
    assert_eq!(got, [1, 2, 4, 8, 14, 24, 40, 64, 100]);
}

#[test]
fn relations_reduce_to_zero() {
    let s = generic(6);
    for r in defining_relations(CMode::Generic) {
        assert!(s.is_zero_mod_ideal(&r).unwrap());
        let wrapped = r.wrap(w("1"), w("0"));
        assert!(s.is_zero_mod_ideal(&wrapped).unwrap());
    }
    let lead = NcPoly::<Scalar>::word(w("0001"));
    let nf = s.reduce(&lead).unwrap();
    let [r0, _] = defining_relations(CMode::Generic);
    assert_eq!(nf, lead.sub(&r0));
}

#[test]
fn bound_is_enforced() {
    let s = generic(5);
    let x = NcPoly::<Scalar>::word(w("010101"));
    assert!(matches!(s.reduce(&x), Err(RewriteError::BoundExceeded { degree: 6, bound: 5 })));
}

#[test]
fn incremental_completion_agrees() {
    let mut a = generic(6);
    a.complete(8).unwrap();
    let b = generic(8);
    assert_eq!(a, b);
}

#[test]
fn certificates_replay() {
    let gens = defining_relations(CMode::Generic).to_vec();
    let mut s = RewriteSystem::with_certificates(gens.clone(), CMode::Generic);
    s.complete(8).unwrap();
    for r in s.rules() {
        let cert = s.certificate(r.lead).unwrap();
        assert_eq!(cert.expand(&gens), r.polynomial(), "rule {}", r.lead.to_digits());
    }
}

#[test]
fn reduction_trace_accounts_for_the_difference() {
    let s = generic(7);
    let x = NcPoly::<Scalar>::word(w("0001101"))
        .add(&NcPoly::word(w("000111")).scale(&Scalar::c()));
    let (nf, steps) = s.reduce_traced(&x).unwrap();
    let mut back = nf;
    for st in &steps {
        let rule = s.rules().into_iter().find(|r| r.lead == st.lead).unwrap();
        back = back.add(&rule.polynomial().wrap(st.left, st.right).scale(&st.coeff));
    }
    assert_eq!(back, x);
}

#[test]
fn cache_round_trip() {
    let s = generic(7);
    let dir = std::env::temp_dir().join(format!("qons-cache-test-{}", std::process::id()));
    let path = dir.join("generic.json");
    save_system(&s, &path).unwrap();
    let t = load_system(&path, CMode::Generic).unwrap();
    assert_eq!(s, t);
    assert!(matches!(
        load_system(&path, CMode::Zero),
        Err(RewriteError::ModeMismatch { .. })
    ));
    std::fs::write(&path, "{\"format\":\"x\"}").unwrap();
    assert!(matches!(load_system(&path, CMode::Generic), Err(RewriteError::Format(_))));
    std::fs::remove_dir_all(dir).ok();
}
