use super::relations::in_structure_ring;
use super::*;
use crate::freealg::CMode;
use crate::onsager::{c_two, verify_identity};
use crate::rewrite::shared_system;
use crate::roots::{a0, a1, d};

fn el(r: Root) -> PbwElement {
    PbwElement::root(r)
}

fn mono(rs: &[Root]) -> PbwElement {
    PbwElement::monomial(PbwMonomial::new(rs.to_vec()).unwrap())
}

fn qp(e: i64) -> Scalar {
    Scalar::q_pow(e)
}

#[test]
fn coefficients() {
    assert_eq!(coeff_a(1, 3).unwrap(), Scalar::one() + qp(-2));
    assert_eq!(coeff_a(2, 4).unwrap(), qp(-2));
    assert_eq!(coeff_a(1, 2).unwrap(), Scalar::one());
    assert!(coeff_a(2, 3).is_err());
    assert!(coeff_a(0, 3).is_err());
    assert_eq!(coeff_b(1, 1).unwrap(), c_two());
    assert_eq!(coeff_b(1, 3).unwrap(), -(qp(4) - Scalar::one()) * qp(-2));
    assert!(coeff_b(4, 3).is_err());
}

#[test]
fn printed_straightenings() {
    let s = straighten(a1(0), a1(1)).unwrap();
    assert_eq!(s, mono(&[a1(1), a1(0)]).scale(&qp(-2)).sub(&el(d(1))));
    let s = straighten(a1(0), a0(0)).unwrap();
    assert_eq!(s, mono(&[a0(0), a1(0)]).add(&el(d(1))).scale(&qp(2)));
    assert_eq!(s.to_string(), "q^2*B0*B1 + q^2*B(1,d)");
    assert_eq!(straighten(d(1), d(2)).unwrap(), mono(&[d(2), d(1)]));
    assert!(straighten(a0(0), a1(0)).is_err());
    assert_eq!(straighten(a0(0), a0(0)).unwrap(), mono(&[a0(0), a0(0)]));

    let x = pbw_multiply(&el(d(1)), &el(a0(0)));
    let expect = mono(&[a0(0), d(1)]).add(&el(a0(1)).sub(&el(a1(0))).scale(&c_two()));
    assert_eq!(x, expect);
    assert_eq!(pbw_multiply(&x, &PbwElement::one()), x);
}

#[test]
fn monomial_invariants() {
    assert!(PbwMonomial::new(vec![a1(0), a0(0)]).is_err());
    let m = PbwMonomial::from_factors(&[(a0(0), 2), (d(1), 1)]).unwrap();
    assert_eq!(m.roots(), &[a0(0), a0(0), d(1)]);
    assert_eq!(m.factors(), vec![(a0(0), 2), (d(1), 1)]);
    assert_eq!(m.height(), 4);
    assert!(PbwMonomial::from_factors(&[(d(1), 1), (a0(0), 1)]).is_err());
    assert_eq!(mono(&[a0(0), a0(0)]).to_string(), "B0^2");
}

#[test]
fn expansions() {
    let bd = expand_to_free(&el(d(1)));
    assert_eq!(bd, (*crate::onsager::root_vector(d(1))).clone());
    assert_eq!(expand_to_free(&PbwElement::one()), NcPoly::one());
    assert_eq!(expand_to_free(&mono(&[a0(0), a0(0)])), NcPoly::g0().mul(&NcPoly::g0()));
}

#[test]
fn associativity_instance() {
    let (b0, b1) = (el(a0(0)), el(a1(0)));
    let l = pbw_multiply(&b1, &pbw_multiply(&b1, &b0));
    let r = pbw_multiply(&pbw_multiply(&b1, &b1), &b0);
    assert_eq!(l, r);
    let s = shared_system(CMode::Generic, 6).unwrap();
    let free = NcPoly::g1().mul(&NcPoly::g1()).mul(&NcPoly::g0());
    assert!(verify_identity(&expand_to_free(&l), &free, &s).unwrap().passed);
}

#[test]
fn single_pairs_match_free_algebra() {
    let s = shared_system(CMode::Generic, 8).unwrap();
    let roots = Root::up_to_height(7);
    for &g in &roots {
        for &h in &roots {
            if h < g && g.height() + h.height() <= 8 {
                let lhs = expand_to_free(&straighten(g, h).unwrap());
                let rhs = expand_to_free(&el(g)).mul(&expand_to_free(&el(h)));
                let rep = verify_identity(&lhs, &rhs, &s).unwrap();
                assert!(rep.passed, "{g}*{h}");
            }
        }
    }
}

#[test]
fn corrections() {
    assert!(correction_real(0, 1).is_zero());
    let c = correction_real(0, 2);
    assert_eq!(c, crate::onsager::RootPoly::product(&[a1(1), a1(1)]).scale(&(qp(-2) - Scalar::one())));
    assert!(correction_imag(0, 1, 0).is_zero());
    assert!(correction_imag(0, 1, 1).is_zero());
    for m in 1..=4 {
        for r in 0..=3 {
            for (_, k) in correction_real(r, m).terms() {
                assert!(in_structure_ring(k), "C^re({r},{m}) {k}");
            }
            for i in 0..=1u8 {
                for (_, k) in correction_imag(r, m, i).terms() {
                    assert!(in_structure_ring(k), "C^im({r},{m},{i}) {k}");
                }
            }
        }
    }
}

#[test]
fn positive_part_and_top_components() {
    let ed = positive_root_vector(d(1));
    assert_eq!(*ed, (*crate::onsager::root_vector(d(1))).clone());
    let serre = shared_system(CMode::Zero, 7).unwrap();
    for r in Root::up_to_height(7) {
        let rep = check_top_component(r, &serre).unwrap();
        assert!(rep.c_homogeneous && rep.passed, "{r}: {:?}", rep.witness);
    }
    let generic = shared_system(CMode::Generic, 3).unwrap();
    assert!(check_top_component(a0(0), &generic).is_err());
}

#[test]
fn small_independence() {
    let s = shared_system(CMode::Generic, 4).unwrap();
    let rep = independence_check(0, &s).unwrap();
    assert_eq!((rep.monomials, rep.rank), (1, 1));
    let rep = independence_check(2, &s).unwrap();
    assert_eq!((rep.monomials, rep.rank), (7, 7));
    let rep = independence_check(4, &s).unwrap();
    assert_eq!((rep.monomials, rep.rank, rep.normal_total), (29, 29, 29));
    assert!(rep.passed);
    let counts: Vec<usize> = (0..=8).map(pbw_count).collect();
    assert_eq!(counts, vec![1, 2, 4, 8, 14, 24, 40, 64, 100]);
}

#[test]
fn structure_table() {
    let t = structure_constants(2);
    assert_eq!(t.len(), 1);
    assert_eq!((t[0].left.as_str(), t[0].right.as_str()), ("B1", "B0"));
    assert!(serde_json::to_string(&t).is_ok());
}
