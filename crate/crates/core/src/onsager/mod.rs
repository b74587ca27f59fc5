//! Named elements of the q-Onsager algebra: the braid automorphisms, root
//! vectors, the auxiliary sums `C_m`, `D_m`, `F_n`, `R_n`, and identity checks
//! against a completed rewrite system.

mod elements;
mod rootpoly;
mod verify;

pub use elements::*;
pub use rootpoly::RootPoly;
pub(crate) use rootpoly::render_root_word;
pub use verify::{verify_identity, IdentityReport, VerifyError};

use crate::freealg::{AlgebraMorphism, NcPoly, Word};
use crate::roots::Root;
use crate::scalar::{qint, Scalar};
use parking_lot::Mutex;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};
use thiserror::Error;

type Poly = NcPoly<Scalar>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OnsagerError {
    #[error("unknown morphism {0:?} (expected Phi, T0, T0inv, T1 or T1inv)")]
    UnknownMorphism(String),
    #[error("{what} needs n >= {min}, got {got}")]
    OutOfRange {
        what: &'static str,
        min: i64,
        got: i64,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum MorphismName {
    Phi,
    T0,
    T0inv,
    T1,
    T1inv,
}

impl MorphismName {
    pub const ALL: [MorphismName; 5] = [
        MorphismName::Phi,
        MorphismName::T0,
        MorphismName::T0inv,
        MorphismName::T1,
        MorphismName::T1inv,
    ];
}

impl FromStr for MorphismName {
    type Err = OnsagerError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "Phi" => MorphismName::Phi,
            "T0" => MorphismName::T0,
            "T0inv" => MorphismName::T0inv,
            "T1" => MorphismName::T1,
            "T1inv" => MorphismName::T1inv,
            _ => return Err(OnsagerError::UnknownMorphism(s.to_string())),
        })
    }
}

impl fmt::Display for MorphismName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MorphismName::Phi => "Phi",
            MorphismName::T0 => "T0",
            MorphismName::T0inv => "T0inv",
            MorphismName::T1 => "T1",
            MorphismName::T1inv => "T1inv",
        };
        f.write_str(s)
    }
}

fn w(s: &str) -> Word {
    Word::from_digits(s).expect("literal word")
}

/// `c [2]_q`, the constant in front of most commutators.
pub fn c_two() -> Scalar {
    Scalar::c() * qint(2)
}

/// `(1/(q^2 [2]_q c)) (x y^2 - q[2] y x y + q^2 y^2 x) + x` written on digit
/// words, where `x`,`y` are the letters in `xyy`.
fn braid_image(xyy: &str, yxy: &str, yyx: &str, x: &str) -> Poly {
    let pre = (Scalar::q_pow(2) * qint(2) * Scalar::c()).inv().expect("nonzero");
    let cubic = Poly::from_terms([
        (w(xyy), Scalar::one()),
        (w(yxy), -(Scalar::q() * qint(2))),
        (w(yyx), Scalar::q_pow(2)),
    ]);
    cubic.scale(&pre).add(&Poly::word(w(x)))
}

/// The five automorphisms with images exactly as defined.
pub fn named_morphism(name: MorphismName) -> AlgebraMorphism<Scalar> {
    let (g0, g1) = (Poly::g0(), Poly::g1());
    match name {
        MorphismName::Phi => AlgebraMorphism::new(g1, g0),
        MorphismName::T0 => AlgebraMorphism::new(g0, braid_image("100", "010", "001", "1")),
        MorphismName::T0inv => AlgebraMorphism::new(g0, braid_image("001", "010", "100", "1")),
        MorphismName::T1 => AlgebraMorphism::new(braid_image("011", "101", "110", "0"), g1),
        MorphismName::T1inv => AlgebraMorphism::new(braid_image("110", "101", "011", "0"), g1),
    }
}

/// `T0 ∘ Φ`, the translation that shifts real root labels by one.
pub fn t0_phi() -> AlgebraMorphism<Scalar> {
    named_morphism(MorphismName::T0).compose(&named_morphism(MorphismName::Phi))
}

/// `T1⁻¹ ∘ Φ`.
pub fn t1inv_phi() -> AlgebraMorphism<Scalar> {
    named_morphism(MorphismName::T1inv).compose(&named_morphism(MorphismName::Phi))
}

/// Memo table of root vector expansions.
///
/// Real root vectors are built by the three-term recursion
/// `B_{(n+1)δ+α0} = B_{(n-1)δ+α0} + [B_δ, B_{nδ+α0}]/(c[2])` (and its mirror
/// for the α1 family) starting from `B0`, `T0(B1)`, `B1`, `T1⁻¹(B0)`. These
/// agree with the braid-group definition modulo the ideal and have exactly
/// the expected degree `2n+1`.
#[derive(Default)]
pub struct QOnsager {
    memo: Mutex<HashMap<Root, Arc<Poly>>>,
}

impl QOnsager {
    pub fn new() -> Self {
        QOnsager::default()
    }

    /// Process-wide instance.
    pub fn shared() -> &'static QOnsager {
        static SHARED: OnceLock<QOnsager> = OnceLock::new();
        SHARED.get_or_init(QOnsager::new)
    }

    pub fn root_vector(&self, r: Root) -> Arc<Poly> {
        if let Some(p) = self.memo.lock().get(&r) {
            return p.clone();
        }
        // computed without holding the lock; recursion re-enters
        let p = Arc::new(self.compute(r));
        debug_assert_eq!(p.degree(), Some(r.height()));
        self.memo.lock().entry(r).or_insert(p).clone()
    }

    fn compute(&self, r: Root) -> Poly {
        let inv = c_two().inv().expect("nonzero");
        match r {
            Root::Real0(0) => Poly::g0(),
            Root::Real1(0) => Poly::g1(),
            Root::Real0(1) => named_morphism(MorphismName::T0).image(crate::freealg::Letter::G1).clone(),
            Root::Real1(1) => named_morphism(MorphismName::T1inv).image(crate::freealg::Letter::G0).clone(),
            Root::Real0(n) => {
                let d = self.root_vector(Root::Imag(1));
                let prev = self.root_vector(Root::Real0(n - 1));
                let back = self.root_vector(Root::Real0(n - 2));
                back.add(&d.commutator(&prev).scale(&inv))
            }
            Root::Real1(n) => {
                let d = self.root_vector(Root::Imag(1));
                let prev = self.root_vector(Root::Real1(n - 1));
                let back = self.root_vector(Root::Real1(n - 2));
                back.add(&prev.commutator(&d).scale(&inv))
            }
            Root::Imag(m) => {
                let b0 = Poly::g0();
                let r = self.root_vector(Root::Real1(m - 1));
                let qm2 = Scalar::q_pow(-2);
                let head = b0.mul(&r).neg().add(&r.mul(&b0).scale(&qm2));
                let c = self.expand(&c_roots(m as i64));
                head.add(&c.scale(&(qm2 - Scalar::one())))
            }
        }
    }

    /// Substitute root vector expansions into a root-label polynomial.
    pub fn expand(&self, x: &RootPoly) -> Poly {
        let mut out = Poly::zero();
        for (word, k) in x.terms() {
            let mut t = Poly::constant(k.clone());
            for r in word {
                t = t.mul(&self.root_vector(*r));
            }
            out = out.add(&t);
        }
        out
    }
}

/// Root vector expansion from the shared memo.
pub fn root_vector(r: Root) -> Arc<Poly> {
    QOnsager::shared().root_vector(r)
}

/// Expansion of a root-label polynomial from the shared memo.
pub fn expand_roots(x: &RootPoly) -> Poly {
    QOnsager::shared().expand(x)
}

#[cfg(test)]
mod tests;
