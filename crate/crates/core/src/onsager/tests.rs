use super::*;
use crate::freealg::{CMode, Letter};
use crate::rewrite::shared_system;
use crate::roots::{a0, a1, d};

type P = NcPoly<Scalar>;

fn wd(s: &str) -> P {
    P::word(Word::from_digits(s).unwrap())
}

fn sys(bound: usize) -> Arc<crate::rewrite::RewriteSystem<Scalar>> {
    shared_system(CMode::Generic, bound).unwrap()
}

#[test]
fn morphism_names_parse() {
    for m in MorphismName::ALL {
        assert_eq!(m.to_string().parse::<MorphismName>().unwrap(), m);
    }
    assert!("T2".parse::<MorphismName>().is_err());
}

#[test]
fn printed_images() {
    let t0 = named_morphism(MorphismName::T0);
    assert_eq!(*t0.image(Letter::G0), P::g0());
    let pre = (Scalar::q_pow(2) * qint(2) * Scalar::c()).inv().unwrap();
    let inv = named_morphism(MorphismName::T0inv);
    let expect = wd("001")
        .sub(&wd("010").scale(&(Scalar::q() * qint(2))))
        .add(&wd("100").scale(&Scalar::q_pow(2)))
        .scale(&pre)
        .add(&P::g1());
    assert_eq!(*inv.image(Letter::G1), expect);
    assert_eq!(*named_morphism(MorphismName::T1).image(Letter::G1), P::g1());
    // T1 = Φ T0 Φ exactly
    let phi = named_morphism(MorphismName::Phi);
    assert_eq!(phi.compose(&t0).compose(&phi), named_morphism(MorphismName::T1));
    assert_eq!(phi.compose(&phi), AlgebraMorphism::identity());
}

#[test]
fn low_root_vectors() {
    assert_eq!(*root_vector(Root::Real0(0)), P::g0());
    let bd = wd("01").neg().add(&wd("10").scale(&Scalar::q_pow(-2)));
    assert_eq!(*root_vector(Root::Imag(1)), bd);
    let b2 = P::g0()
        .mul(&root_vector(Root::Real1(1)))
        .neg()
        .add(&root_vector(Root::Real1(1)).mul(&P::g0()).scale(&Scalar::q_pow(-2)))
        .add(&wd("11").scale(&(Scalar::q_pow(-2) - Scalar::one())));
    assert_eq!(*root_vector(Root::Imag(2)), b2);
    assert_eq!(*root_vector(Root::Real0(1)), t0_phi().apply(&P::g0()));
    for r in Root::up_to_height(9) {
        let v = root_vector(r);
        assert_eq!(v.degree(), Some(r.height()), "{r}");
    }
}

#[test]
fn c_d_r_f_small_cases() {
    assert!(c_element(1).is_zero());
    assert_eq!(c_element(2), wd("11"));
    assert_eq!(d_element(2), wd("00"));
    assert!(r_element(2).is_zero());
    let r3 = wd("001").scale(&Scalar::q_pow(2)).sub(&wd("100").scale(&Scalar::q_pow(-2)));
    assert_eq!(r_element(3), r3);
    // R_3 = -B_δ B0 - q² B0 B_δ exactly
    assert!(expand_roots(&r_closed_roots(3)).sub(&r3).is_zero());
    assert!(f_element(2).unwrap().is_zero());
    assert!(f_element(1).is_err());
    for n in 2..=5 {
        let deg = f_element(n).unwrap().degree().unwrap_or(0);
        assert!(deg < 2 * n as usize, "F_{n} degree {deg}");
    }
}

#[test]
fn first_commutators() {
    let s = sys(7);
    let bd = root_vector(d(1));
    let (b0, b1) = (P::g0(), P::g1());
    let ct = c_two();
    let r = verify_identity(
        &bd.commutator(&b0),
        &root_vector(a0(1)).sub(&b1).scale(&ct),
        &s,
    )
    .unwrap();
    assert!(r.passed);
    let r = verify_identity(&b1.commutator(&bd), &root_vector(a1(1)).sub(&b0).scale(&ct), &s).unwrap();
    assert!(r.passed);
    let r = verify_identity(&P::g0().mul(&P::g1()), &P::g1().mul(&P::g0()), &s).unwrap();
    assert!(!r.passed && r.witness.is_some());
}

#[test]
fn bound_error_is_explicit() {
    let s = sys(4);
    let x = root_vector(a0(2));
    let e = verify_identity(&x, &P::zero(), &s).unwrap_err();
    assert!(e.to_string().contains("increase --bound"));
}

#[test]
fn exact_free_identities() {
    for n in 1..=6 {
        let lhs = t0phi_c_roots(n).commutator(&RootPoly::atom(a0(0)));
        assert!(expand_roots(&lhs.sub(&com2_rhs_roots(n))).is_zero(), "com2 n={n}");
        assert!(expand_roots(&r_roots(n).sub(&r_closed_roots(n))).is_zero(), "R_{n}");
    }
    for m in 1..=6 {
        assert_eq!(c_roots(m).transport(m - 1), d_roots(m));
    }
}
