//! The Onsager Lie algebra with Gaussian-rational coefficients, used as the
//! `q → 1`, `c → 1` oracle.

use crate::pbw::{pbw_multiply, PbwElement};
use crate::roots::Root;
use crate::scalar::ScalarError;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Gaussian rationals.
pub type Gauss = Complex<BigRational>;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn real(n: i64) -> Gauss {
    Gauss::new(rat(n), BigRational::zero())
}

/// `i/2`.
fn half_i() -> Gauss {
    Gauss::new(BigRational::zero(), BigRational::new(1.into(), 2.into()))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Basis {
    A(i64),
    /// Only `m ≥ 1` is stored.
    G(i64),
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::A(n) => write!(f, "A({n})"),
            Basis::G(m) => write!(f, "G({m})"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieElement {
    terms: BTreeMap<Basis, Gauss>,
}

impl LieElement {
    pub fn zero() -> Self {
        LieElement::default()
    }

    pub fn a(n: i64) -> Self {
        LieElement::zero().plus(Basis::A(n), &Gauss::one())
    }

    /// `G_m` with `G_0 = 0` and `G_{-m} = -G_m`.
    pub fn g(m: i64) -> Self {
        LieElement::zero().plus_g(m, &Gauss::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Basis, &Gauss)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn plus(mut self, b: Basis, k: &Gauss) -> Self {
        if k.is_zero() {
            return self;
        }
        let v = self.terms.entry(b).or_insert_with(Gauss::zero);
        *v += k;
        if v.is_zero() {
            self.terms.remove(&b);
        }
        self
    }

    fn plus_g(self, m: i64, k: &Gauss) -> Self {
        match m {
            0 => self,
            m if m > 0 => self.plus(Basis::G(m), k),
            m => self.plus(Basis::G(-m), &-k),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        rhs.terms.iter().fold(self.clone(), |acc, (b, k)| acc.plus(*b, k))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&real(-1)))
    }

    pub fn scale(&self, s: &Gauss) -> Self {
        self.terms
            .iter()
            .fold(LieElement::zero(), |acc, (b, k)| acc.plus(*b, &(k * s)))
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, k)| format!("({} + {}i)*{b}", k.re, k.im))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn bracket_basis(x: Basis, y: Basis) -> LieElement {
    let z = LieElement::zero();
    match (x, y) {
        (Basis::A(n), Basis::A(m)) => z.plus_g(n - m, &real(4)),
        (Basis::G(_), Basis::G(_)) => z,
        (Basis::G(m), Basis::A(n)) => z.plus(Basis::A(n + m), &real(2)).plus(Basis::A(n - m), &real(-2)),
        (Basis::A(n), Basis::G(m)) => z.plus(Basis::A(n + m), &real(-2)).plus(Basis::A(n - m), &real(2)),
    }
}

pub fn bracket(x: &LieElement, y: &LieElement) -> LieElement {
    let mut out = LieElement::zero();
    for (bx, kx) in &x.terms {
        for (by, ky) in &y.terms {
            out = out.add(&bracket_basis(*bx, *by).scale(&(kx * ky)));
        }
    }
    out
}

/// Image of a root vector under the specialization.
pub fn specialize_root(r: Root) -> LieElement {
    let sign = |n: u32| if n.is_multiple_of(2) { real(1) } else { real(-1) };
    match r {
        Root::Real0(n) => LieElement::a(-(n as i64) - 1).scale(&(sign(n) * half_i())),
        Root::Real1(n) => LieElement::a(n as i64).scale(&(sign(n + 1) * half_i())),
        Root::Imag(m) => LieElement::g(m as i64).scale(&sign(m - 1)),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassicalCheck {
    pub name: String,
    pub passed: bool,
}

/// The Dolan–Grady relations for `A0, A1` and the `-4` form for `D0, D1`.
pub fn check_dolan_grady() -> Vec<ClassicalCheck> {
    let triple = |x: &LieElement, y: &LieElement| bracket(x, &bracket(x, &bracket(x, y)));
    let (a0, a1) = (LieElement::a(0), LieElement::a(1));
    let d0 = LieElement::a(-1).scale(&-half_i());
    let d1 = LieElement::a(0).scale(&half_i());
    let cases = [
        ("[A0,[A0,[A0,A1]]] = 16[A0,A1]", &a0, &a1, 16),
        ("[A1,[A1,[A1,A0]]] = 16[A1,A0]", &a1, &a0, 16),
        ("[D0,[D0,[D0,D1]]] = -4[D0,D1]", &d0, &d1, -4),
        ("[D1,[D1,[D1,D0]]] = -4[D1,D0]", &d1, &d0, -4),
    ];
    cases
        .into_iter()
        .map(|(name, x, y, k)| ClassicalCheck {
            name: name.to_string(),
            passed: triple(x, y) == bracket(x, y).scale(&real(k)),
        })
        .collect()
}

#[derive(Debug, Error)]
pub enum SpecializationError {
    #[error("coefficient of {monomial} has a pole at q = c = 1: {source}")]
    Pole { monomial: String, source: ScalarError },
}

#[derive(Clone, Debug, Serialize)]
pub struct SpecializationReport {
    pub left: Root,
    pub right: Root,
    pub passed: bool,
    /// Products of two or more roots with a nonzero limit.
    pub nonlinear: Vec<String>,
    pub limit: String,
    pub expected: String,
}

/// Compare the `q = c = 1` limit of `[B_γ, B_γ′]` with the Lie bracket of the
/// specialized root vectors.
pub fn specialization_check(g: Root, h: Root) -> Result<SpecializationReport, SpecializationError> {
    let (x, y) = (PbwElement::root(g), PbwElement::root(h));
    let comm = pbw_multiply(&x, &y).sub(&pbw_multiply(&y, &x));
    let one = BigRational::one();
    let mut limit = LieElement::zero();
    let mut nonlinear = Vec::new();
    for (m, k) in comm.terms() {
        let v = k.evaluate(&one, &one).map_err(|source| SpecializationError::Pole {
            monomial: m.to_string(),
            source,
        })?;
        if v.is_zero() {
            continue;
        }
        match m.roots() {
            [r] => limit = limit.add(&specialize_root(*r).scale(&Gauss::new(v, BigRational::zero()))),
            _ => nonlinear.push(m.to_string()),
        }
    }
    let expected = bracket(&specialize_root(g), &specialize_root(h));
    Ok(SpecializationReport {
        left: g,
        right: h,
        passed: nonlinear.is_empty() && limit == expected,
        nonlinear,
        limit: limit.to_string(),
        expected: expected.to_string(),
    })
}

/// Loop realization `sl2 ⊗ C[t, t⁻¹]`: keys are `(exponent, 0=e|1=f|2=h)`.
/// The central term is tracked separately.
pub mod loop_algebra {
    use super::*;

    #[derive(Clone, Debug, Default, PartialEq, Eq)]
    pub struct LoopElement {
        pub terms: BTreeMap<(i64, u8), Gauss>,
        pub central: Gauss,
    }

    impl LoopElement {
        fn plus(&mut self, key: (i64, u8), k: &Gauss) {
            let v = self.terms.entry(key).or_insert_with(Gauss::zero);
            *v += k;
            if v.is_zero() {
                self.terms.remove(&key);
            }
        }
    }

    /// `A_n = 2i(tⁿ⊗e - t⁻ⁿ⊗f)`, `G_m = t^m⊗h - t^{-m}⊗h`.
    pub fn embed(x: &LieElement) -> LoopElement {
        let two_i = Gauss::new(BigRational::zero(), rat(2));
        let mut out = LoopElement::default();
        for (b, k) in x.terms() {
            match *b {
                Basis::A(n) => {
                    out.plus((n, 0), &(k * &two_i));
                    out.plus((-n, 1), &-(k * &two_i));
                }
                Basis::G(m) => {
                    out.plus((m, 2), k);
                    out.plus((-m, 2), &-k);
                }
            }
        }
        out
    }

    /// `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`, with `(e,f) = 1`, `(h,h) = 2`.
    fn sl2(x: u8, y: u8) -> (Option<(u8, i64)>, i64) {
        match (x, y) {
            (0, 1) => (Some((2, 1)), 1),
            (1, 0) => (Some((2, -1)), 1),
            (2, 0) => (Some((0, 2)), 0),
            (0, 2) => (Some((0, -2)), 0),
            (2, 1) => (Some((1, -2)), 0),
            (1, 2) => (Some((1, 2)), 0),
            (2, 2) => (None, 2),
            _ => (None, 0),
        }
    }

    pub fn bracket(x: &LoopElement, y: &LoopElement) -> LoopElement {
        let mut out = LoopElement::default();
        for (&(m, a), kx) in &x.terms {
            for (&(n, b), ky) in &y.terms {
                let k = kx * ky;
                let (part, form) = sl2(a, b);
                if let Some((c, s)) = part {
                    out.plus((m + n, c), &(&k * real(s)));
                }
                if m == -n && form != 0 {
                    out.central += &k * real(m * form);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{a0, a1, d};

    fn gi(re: i64, im: i64) -> Gauss {
        Gauss::new(rat(re), rat(im))
    }

    #[test]
    fn printed_brackets() {
        assert_eq!(bracket(&LieElement::a(2), &LieElement::a(1)), LieElement::g(1).scale(&real(4)));
        let expect = LieElement::a(1).sub(&LieElement::a(-1)).scale(&real(2));
        assert_eq!(bracket(&LieElement::g(1), &LieElement::a(0)), expect);
        assert!(bracket(&LieElement::a(3), &LieElement::a(3)).is_zero());
        assert!(LieElement::g(0).is_zero());
        assert_eq!(LieElement::g(-2), LieElement::g(2).scale(&real(-1)));
    }

    #[test]
    fn dolan_grady() {
        for c in check_dolan_grady() {
            assert!(c.passed, "{}", c.name);
        }
    }

    #[test]
    fn specializations() {
        assert_eq!(specialize_root(a0(0)), LieElement::a(-1).scale(&gi(0, 1).scale(BigRational::new(1.into(), 2.into()))));
        assert_eq!(specialize_root(a1(0)), LieElement::a(0).scale(&-half_i()));
        assert_eq!(specialize_root(d(1)), LieElement::g(1));
        let rep = specialization_check(d(1), a0(0)).unwrap();
        assert!(rep.passed, "{rep:?}");
        assert_eq!(rep.limit, LieElement::a(0).sub(&LieElement::a(-2)).scale(&gi(0, 1)).to_string());
        assert!(specialization_check(a1(0), a1(1)).unwrap().passed);
        assert!(specialization_check(d(2), d(1)).unwrap().passed);
    }

    #[test]
    fn loop_realization() {
        let mut basis = Vec::new();
        for n in -3..=3 {
            basis.push(LieElement::a(n));
        }
        for m in 1..=3 {
            basis.push(LieElement::g(m));
        }
        for x in &basis {
            for y in &basis {
                let l = loop_algebra::bracket(&loop_algebra::embed(x), &loop_algebra::embed(y));
                assert!(l.central.is_zero());
                assert_eq!(l, loop_algebra::embed(&bracket(x, y)), "[{x}, {y}]");
            }
        }
    }
}
