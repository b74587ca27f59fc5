//! The free algebra on two generators `g0`, `g1`.

mod morphism;
mod ncpoly;
mod word;

pub use morphism::{AlgebraMorphism, MorphismPowers};
pub use ncpoly::{render_terms, NcPoly};
pub use word::{Letter, Word, MAX_WORD_LEN};
pub(crate) use word::mask as word_mask;

use crate::scalar::{qbinom, Scalar};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Whether the parameter `c` is kept generic or set to zero.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CMode {
    Generic,
    Zero,
}

impl fmt::Display for CMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CMode::Generic => write!(f, "generic"),
            CMode::Zero => write!(f, "zero"),
        }
    }
}

/// The two defining relations moved to one side. In zero mode they are the
/// q-Serre relations.
pub fn defining_relations(mode: CMode) -> [NcPoly<Scalar>; 2] {
    let one = |a: Letter, b: Letter| {
        let (x, y) = (NcPoly::generator(a), NcPoly::generator(b));
        let mut rel = NcPoly::zero();
        for i in 0..=3i64 {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let k = qbinom(3, i).unwrap().mul_ref(&Scalar::from_int(sign));
            let t = x.pow(3 - i as u32).mul(&y).mul(&x.pow(i as u32));
            rel = rel.add(&t.scale(&k));
        }
        if mode == CMode::Generic {
            let two = crate::scalar::qint(2);
            let k = Scalar::q().mul_ref(&Scalar::c()).mul_ref(&two).mul_ref(&two);
            rel = rel.add(&x.commutator(&y).scale(&k));
        }
        rel
    };
    [one(Letter::G0, Letter::G1), one(Letter::G1, Letter::G0)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qint;

    #[test]
    fn relation_coefficients() {
        let [r0, r1] = defining_relations(CMode::Generic);
        let w = |s: &str| Word::from_digits(s).unwrap();
        assert_eq!(r0.coefficient(w("0001")), Scalar::one());
        assert_eq!(r0.coefficient(w("0010")), qint(3).neg_ref());
        let k = Scalar::q() * Scalar::c() * qint(2) * qint(2);
        assert_eq!(r0.coefficient(w("01")), k);
        assert_eq!(r0.leading().unwrap().0, w("0001"));
        assert_eq!(r1.leading().unwrap().0, w("0111"));
        let [z0, z1] = defining_relations(CMode::Zero);
        assert!(z0.coefficient(w("01")).is_zero() && z1.coefficient(w("10")).is_zero());
        assert_eq!(z0.len(), 4);
    }
}
