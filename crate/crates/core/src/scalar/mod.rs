//! Exact scalars in Q(q, c).
//!
//! A [`Scalar`] is a reduced fraction of integer polynomials. Negative powers
//! of `q` live in the denominator. The representation is canonical, so
//! structural equality is mathematical equality.

mod int;
mod modp;
mod poly;
mod upoly;

pub use int::Int;
pub use poly::{gcd, IntPoly};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {q}, c = {c}")]
    Pole { q: String, c: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed scalar: {0}")]
    Malformed(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: IntPoly,
    den: IntPoly,
}

impl Scalar {
    /// Build `num / den` in canonical form.
    pub fn from_parts(num: IntPoly, den: IntPoly) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::canonical(num, den))
    }

    fn canonical(num: IntPoly, den: IntPoly) -> Scalar {
        if num.is_zero() {
            return Scalar::zero();
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if den.deglex_lc().is_some_and(|k| k.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Scalar { num, den }
    }

    pub fn zero() -> Scalar {
        Scalar {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Scalar {
        Scalar::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn from_int(k: i64) -> Scalar {
        Scalar {
            num: IntPoly::from(k),
            den: IntPoly::one(),
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> Result<Scalar, ScalarError> {
        Scalar::from_parts(IntPoly::from(n), IntPoly::from(d))
    }

    pub fn from_rational(r: &BigRational) -> Scalar {
        Scalar::canonical(
            IntPoly::constant(Int::from_big(r.numer().clone())),
            IntPoly::constant(Int::from_big(r.denom().clone())),
        )
    }

    pub fn q() -> Scalar {
        Scalar::q_pow(1)
    }

    pub fn c() -> Scalar {
        Scalar {
            num: IntPoly::monomial(Int::ONE, 0, 1),
            den: IntPoly::one(),
        }
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(e: i64) -> Scalar {
        let m = IntPoly::monomial(Int::ONE, e.unsigned_abs() as usize, 0);
        if e >= 0 {
            Scalar {
                num: m,
                den: IntPoly::one(),
            }
        } else {
            Scalar {
                num: IntPoly::one(),
                den: m,
            }
        }
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True if the scalar is a nonzero multiple of a single monomial
    /// `k q^a c^b` with integer exponents.
    pub fn is_monomial(&self) -> bool {
        self.num.term_count() == 1 && self.den.term_count() == 1
    }

    /// Number of monomials in numerator and denominator; a pivot heuristic.
    pub fn size(&self) -> usize {
        self.num.term_count() + self.den.term_count()
    }

    /// True if the denominator is a single monomial.
    pub fn is_laurent(&self) -> bool {
        self.den.term_count() == 1
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i64) -> Result<Scalar, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Ok(Scalar {
            num: base.num.pow(e),
            den: base.den.pow(e),
        }
        .renormalized())
    }

    fn renormalized(self) -> Scalar {
        if self.den.deglex_lc().is_some_and(|k| k.is_negative()) {
            Scalar {
                num: self.num.neg(),
                den: self.den.neg(),
            }
        } else {
            self
        }
    }

    pub fn add_ref(&self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Scalar::canonical(self.num.add(&rhs.num), self.den.clone());
        }
        if self.den.is_one() {
            return Scalar::canonical(self.num.mul(&rhs.den).add(&rhs.num), rhs.den.clone());
        }
        if rhs.den.is_one() {
            return Scalar::canonical(rhs.num.mul(&self.den).add(&self.num), self.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
            return Scalar::canonical(num, self.den.mul(&rhs.den));
        }
        let d1 = self.den.div_exact(&g).unwrap();
        let d2 = rhs.den.div_exact(&g).unwrap();
        let num = self.num.mul(&d2).add(&rhs.num.mul(&d1));
        Scalar::canonical(num, self.den.mul(&d2))
    }

    pub fn neg_ref(&self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub_ref(&self, rhs: &Scalar) -> Scalar {
        self.add_ref(&rhs.neg_ref())
    }

    pub fn mul_ref(&self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar {
                num: self.num.mul(&rhs.num),
                den: IntPoly::one(),
            };
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let div = |a: &IntPoly, g: &IntPoly| {
            if g.is_one() {
                a.clone()
            } else {
                a.div_exact(g).unwrap()
            }
        };
        let num = div(&self.num, &g1).mul(&div(&rhs.num, &g2));
        let den = div(&self.den, &g2).mul(&div(&rhs.den, &g1));
        Scalar { num, den }.renormalized()
    }

    pub fn div_ref(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul_ref(&rhs.inv()?))
    }

    /// Evaluate at rational points.
    pub fn evaluate(&self, q: &BigRational, c: &BigRational) -> Result<BigRational, ScalarError> {
        let d = self.den.eval(q, c);
        if d.is_zero() {
            return Err(ScalarError::Pole {
                q: q.to_string(),
                c: c.to_string(),
            });
        }
        Ok(self.num.eval(q, c) / d)
    }

    /// Whether the scalar vanishes identically in `c` after setting `q = 1`.
    pub fn vanishes_at_q1(&self) -> Result<bool, ScalarError> {
        let one = BigRational::one();
        if self.den.eval_q(&one).is_empty() {
            return Err(ScalarError::Pole {
                q: "1".into(),
                c: "c".into(),
            });
        }
        Ok(self.num.eval_q(&one).is_empty())
    }

    /// Split into coefficients of powers of `c`, valid when the denominator
    /// does not involve `c` beyond a monomial factor. Returns pairs
    /// `(c_exponent, coefficient free of c)`.
    pub fn c_expansion(&self) -> Option<Vec<(i64, Scalar)>> {
        if !self.den.is_c_homogeneous() {
            return None;
        }
        let (_, dc) = self.den.mono_content();
        let den_q = self.den.div_monomial(0, dc);
        let mut out = Vec::new();
        for k in 0..=self.num.c_degree() {
            let part = self.num.c_coefficient(k);
            if part.is_zero() {
                continue;
            }
            out.push((k as i64 - dc as i64, Scalar::canonical(part, den_q.clone())));
        }
        Some(out)
    }

    /// Multiply by `c^k` for any integer `k`.
    pub fn mul_c_pow(&self, k: i64) -> Scalar {
        let m = IntPoly::monomial(Int::ONE, 0, k.unsigned_abs() as usize);
        if k >= 0 {
            Scalar::canonical(self.num.mul(&m), self.den.clone())
        } else {
            Scalar::canonical(self.num.clone(), self.den.mul(&m))
        }
    }

    /// Integer value, if the scalar is an integer constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        if !self.den.is_one() {
            return None;
        }
        if self.num.is_zero() {
            return Some(BigInt::zero());
        }
        match self.num.as_monomial() {
            Some((k, 0, 0)) => Some(k.to_big()),
            _ => None,
        }
    }
}

/// q-integer `[n] = (q^n - q^-n) / (q - q^-1)`.
pub fn qint(n: i64) -> Scalar {
    if n == 0 {
        return Scalar::zero();
    }
    let m = n.unsigned_abs() as usize;
    let num = IntPoly::from_terms((0..m).map(|k| (2 * k, 0, Int::ONE)));
    let den = IntPoly::monomial(Int::ONE, m - 1, 0);
    let s = Scalar::canonical(num, den);
    if n < 0 {
        s.neg_ref()
    } else {
        s
    }
}

/// q-factorial `[n]! = [1][2]...[n]`.
pub fn qfactorial(n: u32) -> Scalar {
    (1..=n as i64).fold(Scalar::one(), |acc, k| acc.mul_ref(&qint(k)))
}

/// q-binomial `[a choose b]` for `0 <= b <= a`.
pub fn qbinom(a: i64, b: i64) -> Result<Scalar, ScalarError> {
    if a < 0 || b < 0 || b > a {
        return Err(ScalarError::InvalidArgument(format!(
            "q-binomial needs 0 <= b <= a, got a = {a}, b = {b}"
        )));
    }
    let mut acc = Scalar::one();
    for k in 0..b {
        acc = acc.mul_ref(&qint(a - k)).div_ref(&qint(k + 1))?;
    }
    Ok(acc)
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl From<i64> for Scalar {
    fn from(k: i64) -> Self {
        Scalar::from_int(k)
    }
}

macro_rules! forward_ops {
    ($tr:ident, $m:ident, $f:ident) => {
        impl std::ops::$tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$f(rhs)
            }
        }
        impl std::ops::$tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$f(&rhs)
            }
        }
        impl std::ops::$tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$f(rhs)
            }
        }
    };
}

forward_ops!(Add, add, add_ref);
forward_ops!(Sub, sub, sub_ref);
forward_ops!(Mul, mul, mul_ref);

fn checked_div(a: &Scalar, b: &Scalar) -> Scalar {
    a.div_ref(b).expect("scalar division by zero")
}

impl std::ops::Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        checked_div(self, rhs)
    }
}
impl std::ops::Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        checked_div(&self, &rhs)
    }
}
impl std::ops::Div<&Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        checked_div(&self, rhs)
    }
}

impl std::ops::Rem<Scalar> for Scalar {
    type Output = Scalar;
    /// Field remainder, always zero.
    fn rem(self, rhs: Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "remainder by zero");
        Scalar::zero()
    }
}
impl std::ops::Rem<&Scalar> for Scalar {
    type Output = Scalar;
    fn rem(self, rhs: &Scalar) -> Scalar {
        self % rhs.clone()
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}
impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl std::ops::AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(rhs);
    }
}
impl std::ops::SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.sub_ref(rhs);
    }
}
impl std::ops::MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

impl num_traits::Num for Scalar {
    type FromStrRadixErr = ScalarError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, ScalarError> {
        let v = BigInt::parse_bytes(s.as_bytes(), radix)
            .ok_or_else(|| ScalarError::Malformed(s.to_string()))?;
        Ok(Scalar {
            num: IntPoly::constant(Int::from_big(v)),
            den: IntPoly::one(),
        })
    }
}

// ---------------------------------------------------------------- display

fn fmt_monomial(out: &mut String, coeff: &BigRational, qe: i64, ce: i64) {
    let mut factors: Vec<String> = Vec::new();
    let abs = if coeff < &BigRational::zero() { -coeff.clone() } else { coeff.clone() };
    if !abs.is_one() || (qe == 0 && ce == 0) {
        if abs.is_integer() {
            factors.push(abs.numer().to_string());
        } else {
            factors.push(format!("{}/{}", abs.numer(), abs.denom()));
        }
    }
    for (name, e) in [("c", ce), ("q", qe)] {
        match e {
            0 => {}
            1 => factors.push(name.to_string()),
            _ => factors.push(format!("{name}^{e}")),
        }
    }
    out.push_str(&factors.join("*"));
}

/// Write a Laurent polynomial given as `(q_exp, c_exp, coefficient)` terms,
/// highest total degree first.
fn fmt_laurent(mut terms: Vec<(i64, i64, BigRational)>) -> String {
    terms.sort_by_key(|t| std::cmp::Reverse((t.0 + t.1, t.1)));
    let mut out = String::new();
    for (i, (qe, ce, k)) in terms.iter().enumerate() {
        let neg = k < &BigRational::zero();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        fmt_monomial(&mut out, k, *qe, *ce);
    }
    out
}

fn poly_terms(p: &IntPoly, shift_q: i64, shift_c: i64, div: &BigInt) -> Vec<(i64, i64, BigRational)> {
    p.terms()
        .map(|(qe, ce, k)| {
            (
                qe as i64 - shift_q,
                ce as i64 - shift_c,
                BigRational::new(k.to_big(), div.clone()),
            )
        })
        .collect()
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num.is_zero() {
            return write!(f, "0");
        }
        if let Some((k, qe, ce)) = self.den.as_monomial() {
            let terms = poly_terms(&self.num, qe as i64, ce as i64, &k.to_big());
            return write!(f, "{}", fmt_laurent(terms));
        }
        let one = BigInt::one();
        let n = fmt_laurent(poly_terms(&self.num, 0, 0, &one));
        let d = fmt_laurent(poly_terms(&self.den, 0, 0, &one));
        write!(f, "({n})/({d})")
    }
}

impl Scalar {
    /// True if the display form is a single signed monomial and can be
    /// printed without parentheses inside a product.
    pub fn displays_as_monomial(&self) -> bool {
        self.is_monomial()
    }

    /// Whether the canonical display starts with a minus sign.
    pub fn displays_negative(&self) -> bool {
        self.to_string().starts_with('-')
    }
}

// ---------------------------------------------------------- serialization

/// Term triple `(q_exponent, c_exponent, decimal coefficient)`.
pub type TermTriple = (u32, u32, String);

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    num: Vec<TermTriple>,
    den: Vec<TermTriple>,
}

fn to_triples(p: &IntPoly) -> Vec<TermTriple> {
    p.terms()
        .map(|(qe, ce, k)| (qe as u32, ce as u32, k.to_string()))
        .collect()
}

fn from_triples(v: &[TermTriple]) -> Result<IntPoly, ScalarError> {
    let mut terms = Vec::with_capacity(v.len());
    for (qe, ce, s) in v {
        let k: Int = s
            .parse()
            .map_err(|_| ScalarError::Malformed(format!("bad integer {s:?}")))?;
        terms.push((*qe as usize, *ce as usize, k));
    }
    Ok(IntPoly::from_terms(terms))
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ScalarRepr {
            num: to_triples(&self.num),
            den: to_triples(&self.den),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = ScalarRepr::deserialize(d)?;
        let num = from_triples(&r.num).map_err(serde::de::Error::custom)?;
        let den = from_triples(&r.den).map_err(serde::de::Error::custom)?;
        Scalar::from_parts(num, den).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::q()
    }

    #[test]
    fn qint_values() {
        assert_eq!(qint(2), q() + Scalar::q_pow(-1));
        assert_eq!(qint(3), q() * q() + Scalar::one() + Scalar::q_pow(-2));
        assert_eq!(qint(-2), -qint(2));
        let r = |v: i64| BigRational::from_integer(v.into());
        assert_eq!(qint(5).evaluate(&r(1), &r(7)).unwrap(), r(5));
    }

    #[test]
    fn qbinom_of_three() {
        assert_eq!(qbinom(3, 1).unwrap(), qint(3));
        assert_eq!(qbinom(3, 0).unwrap(), Scalar::one());
        assert!(qbinom(2, 3).is_err());
    }

    #[test]
    fn canonical_fractions() {
        let a = (q() * q() - Scalar::one()) / (q() - Scalar::one());
        assert_eq!(a, q() + Scalar::one());
        let b = Scalar::from_int(-2) / (Scalar::from_int(-4) * Scalar::c());
        assert_eq!(b.to_string(), "1/2*c^-1");
        assert!(b.denominator().deglex_lc().unwrap() > &Int::ZERO);
    }

    #[test]
    fn display_laurent() {
        let s = Scalar::q_pow(-2) - Scalar::one();
        assert_eq!(s.to_string(), "-1 + q^-2");
        assert_eq!((Scalar::c() * qint(2)).to_string(), "c*q + c*q^-1");
    }

    #[test]
    fn serde_round_trip() {
        let s = (qint(3) - Scalar::c()) / (qint(2) + Scalar::c());
        let j = serde_json::to_string(&s).unwrap();
        let back: Scalar = serde_json::from_str(&j).unwrap();
        assert_eq!(s, back);
    }

    #[test]
    fn vanishing_and_poles() {
        assert!((Scalar::q_pow(-2) - Scalar::one()).vanishes_at_q1().unwrap());
        assert!(!qint(2).vanishes_at_q1().unwrap());
        let pole = Scalar::one() / (q() - Scalar::one());
        assert!(pole.vanishes_at_q1().is_err());
    }
}
