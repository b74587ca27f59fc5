#![allow(dead_code)]

use proptest::prelude::*;
use qonsager::freealg::{Letter, Word};
use qonsager::{Poly, Scalar};

/// Sum of `k q^a c^b` with small exponents.
pub fn laurent() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-4i64..=4, -3i64..=3, 0i64..=2), 1..4).prop_map(|terms| {
        terms.into_iter().fold(Scalar::zero(), |acc, (k, a, b)| {
            acc + Scalar::from_int(k) * Scalar::q_pow(a) * Scalar::c().pow(b).unwrap()
        })
    })
}

/// A ratio of two small Laurent polynomials.
pub fn scalar() -> impl Strategy<Value = Scalar> {
    (laurent(), laurent()).prop_map(|(n, d)| if d.is_zero() { n } else { n.div_ref(&d).unwrap() })
}

pub fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

pub fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(any::<bool>(), 0..=max_len).prop_map(|bits| {
        let letters: Vec<Letter> = bits.into_iter().map(|b| if b { Letter::G1 } else { Letter::G0 }).collect();
        Word::from_letters(&letters)
    })
}

pub fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((word(max_len), laurent()), 0..5).prop_map(Poly::from_terms)
}

use qonsager::pbw::{expand_to_free, monomials_of_height, pbw_multiply, PbwElement};
use qonsager::System;
use rand::Rng;

fn small_laurent<R: Rng>(rng: &mut R) -> Scalar {
    let mut k = Scalar::zero();
    while k.is_zero() {
        k = Scalar::from_int(rng.gen_range(-3..=3)) * Scalar::q_pow(rng.gen_range(-2..=2));
        if rng.gen_bool(0.3) {
            k = k * Scalar::c();
        }
    }
    k
}

/// A random element whose monomials have height exactly `h`, plus
/// occasionally a lower one.
pub fn random_pbw<R: Rng>(rng: &mut R, h: usize) -> PbwElement {
    let monos = monomials_of_height(h);
    let mut x = PbwElement::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let m = monos[rng.gen_range(0..monos.len())].clone();
        x = x.add(&PbwElement::term(m, small_laurent(rng)));
    }
    if h > 0 && rng.gen_bool(0.3) {
        let lower = monomials_of_height(rng.gen_range(0..h));
        let m = lower[rng.gen_range(0..lower.len())].clone();
        x = x.add(&PbwElement::term(m, small_laurent(rng)));
    }
    x
}

/// `expand(x ⋆ y) − expand(x)·expand(y)` reduced; zero when the product is right.
pub fn oracle_residue(x: &PbwElement, y: &PbwElement, sys: &System) -> Poly {
    let lhs = expand_to_free(&pbw_multiply(x, y));
    let rhs = expand_to_free(x).mul(&expand_to_free(y));
    sys.reduce(&lhs.sub(&rhs)).unwrap()
}
