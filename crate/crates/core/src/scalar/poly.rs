//! Integer polynomials in `q` and `c`, stored densely in `c` with dense
//! univariate coefficients in `q`.

use super::int::Int;
use super::modp;
use super::upoly::{self, UPoly};
use num_rational::BigRational;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    /// `coeffs[k]` is the coefficient of `c^k`.
    coeffs: Vec<UPoly>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(Int::ONE)
    }

    pub fn constant(k: Int) -> Self {
        IntPoly::monomial(k, 0, 0)
    }

    pub fn monomial(k: Int, qe: usize, ce: usize) -> Self {
        if k.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![UPoly::zero(); ce + 1];
        coeffs[ce] = UPoly::monomial(k, qe);
        IntPoly { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, usize, Int)>>(terms: I) -> Self {
        let mut p = IntPoly::zero();
        for (qe, ce, k) in terms {
            p = p.add(&IntPoly::monomial(k, qe, ce));
        }
        p
    }

    fn from_coeffs(mut coeffs: Vec<UPoly>) -> Self {
        while matches!(coeffs.last(), Some(u) if u.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    fn from_q(u: UPoly) -> Self {
        IntPoly::from_coeffs(vec![u])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn c_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn q_degree(&self) -> usize {
        self.coeffs
            .iter()
            .filter_map(|u| u.degree())
            .max()
            .unwrap_or(0)
    }

    /// Iterate `(q_exp, c_exp, coefficient)` over nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Int)> + '_ {
        self.coeffs.iter().enumerate().flat_map(|(ce, u)| {
            u.0.iter()
                .enumerate()
                .filter(|(_, k)| !k.is_zero())
                .map(move |(qe, k)| (qe, ce, k))
        })
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().map(|u| u.nonzero_terms()).sum()
    }

    /// The single term, if there is exactly one.
    pub fn as_monomial(&self) -> Option<(&Int, usize, usize)> {
        let mut it = self.terms();
        let first = it.next()?;
        if it.next().is_some() {
            return None;
        }
        Some((first.2, first.0, first.1))
    }

    /// True when every term has the same `c` exponent.
    pub fn is_c_homogeneous(&self) -> bool {
        self.coeffs.iter().filter(|u| !u.is_zero()).count() <= 1
    }

    pub fn add(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let empty = UPoly::zero();
        let v = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&empty);
                let b = rhs.coeffs.get(i).unwrap_or(&empty);
                a.add(b)
            })
            .collect();
        IntPoly::from_coeffs(v)
    }

    pub fn sub(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let empty = UPoly::zero();
        let v = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&empty);
                let b = rhs.coeffs.get(i).unwrap_or(&empty);
                a.sub(b)
            })
            .collect();
        IntPoly::from_coeffs(v)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|u| u.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![UPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        IntPoly::from_coeffs(v)
    }

    pub fn scale(&self, k: &Int) -> IntPoly {
        if k.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|u| u.scale(k)).collect(),
        }
    }

    pub fn div_int(&self, k: &Int) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|u| u.div_int(k)).collect(),
        }
    }

    pub fn mul_monomial(&self, qe: usize, ce: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![UPoly::zero(); ce];
        v.extend(self.coeffs.iter().map(|u| u.shift_up(qe)));
        IntPoly::from_coeffs(v)
    }

    pub fn div_monomial(&self, qe: usize, ce: usize) -> IntPoly {
        let v = self.coeffs[ce.min(self.coeffs.len())..]
            .iter()
            .map(|u| u.shift_down(qe))
            .collect();
        IntPoly::from_coeffs(v)
    }

    /// Largest monomial `q^a c^b` dividing every term.
    pub fn mono_content(&self) -> (usize, usize) {
        let ce = self.coeffs.iter().position(|u| !u.is_zero()).unwrap_or(0);
        let qe = self.coeffs.iter().filter_map(|u| u.low()).min().unwrap_or(0);
        (qe, ce)
    }

    /// Non-negative gcd of all integer coefficients.
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for u in &self.coeffs {
            if u.is_zero() {
                continue;
            }
            g = g.gcd(&u.content());
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Coefficient of the deglex-leading term, where total degree decides
    /// first and a larger `q` exponent breaks ties.
    pub fn deglex_lc(&self) -> Option<&Int> {
        let mut best: Option<((usize, usize), &Int)> = None;
        for (qe, ce, k) in self.terms() {
            let key = (qe + ce, qe);
            if best.is_none_or(|(b, _)| key > b) {
                best = Some((key, k));
            }
        }
        best.map(|(_, k)| k)
    }

    /// Exact quotient in Z[q, c], or `None` if `rhs` does not divide.
    pub fn div_exact(&self, rhs: &IntPoly) -> Option<IntPoly> {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if rhs.coeffs.len() == 1 && self.coeffs.len() == 1 {
            return self.coeffs[0].div_exact(&rhs.coeffs[0]).map(IntPoly::from_q);
        }
        let db = rhs.coeffs.len() - 1;
        if self.coeffs.len() < rhs.coeffs.len() {
            return None;
        }
        let lb = &rhs.coeffs[db];
        let mut r = self.coeffs.clone();
        let mut quot = vec![UPoly::zero(); self.coeffs.len() - db];
        for i in (0..quot.len()).rev() {
            if r[i + db].is_zero() {
                continue;
            }
            let qc = r[i + db].div_exact(lb)?;
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    r[i + j] = r[i + j].sub(&qc.mul(b));
                }
            }
            quot[i] = qc;
        }
        if r.iter().any(|u| !u.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Swap the roles of `q` and `c`.
    fn transpose(&self) -> IntPoly {
        let mut out: Vec<Vec<Int>> = Vec::new();
        for (qe, ce, k) in self.terms() {
            if out.len() <= qe {
                out.resize(qe + 1, Vec::new());
            }
            let row = &mut out[qe];
            if row.len() <= ce {
                row.resize(ce + 1, Int::ZERO);
            }
            row[ce] = k.clone();
        }
        IntPoly::from_coeffs(
            out.into_iter()
                .map(|v| {
                    let mut u = UPoly(v);
                    u.trim();
                    u
                })
                .collect(),
        )
    }

    pub fn eval(&self, q: &BigRational, c: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for u in self.coeffs.iter().rev() {
            let mut inner = BigRational::zero();
            for k in u.0.iter().rev() {
                inner = inner * q + BigRational::from_integer(k.to_big());
            }
            acc = acc * c + inner;
        }
        acc
    }

    /// Substitute `q = q0`, leaving a polynomial in `c` with rational
    /// coefficients.
    pub fn eval_q(&self, q: &BigRational) -> Vec<BigRational> {
        let mut v: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|u| {
                let mut inner = BigRational::zero();
                for k in u.0.iter().rev() {
                    inner = inner * q + BigRational::from_integer(k.to_big());
                }
                inner
            })
            .collect();
        while matches!(v.last(), Some(x) if x.is_zero()) {
            v.pop();
        }
        v
    }

    /// The coefficient of `c^k` as a polynomial in `q`.
    pub fn c_coefficient(&self, k: usize) -> IntPoly {
        match self.coeffs.get(k) {
            Some(u) => IntPoly::from_q(u.clone()),
            None => IntPoly::zero(),
        }
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Full gcd in Z[q, c] including integer and monomial content, with a
/// positive deglex-leading coefficient.
pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    let (qa, ca) = a.mono_content();
    let (qb, cb) = b.mono_content();
    let (qm, cm) = (qa.min(qb), ca.min(cb));
    let icont = a.content().gcd(&b.content());
    let a1 = a.div_monomial(qa, ca);
    let b1 = b.div_monomial(qb, cb);
    let a1 = a1.div_int(&a1.content());
    let b1 = b1.div_int(&b1.content());
    let core = gcd_primitive(&a1, &b1);
    normalize_sign(core.scale(&icont).mul_monomial(qm, cm))
}

fn normalize_sign(p: IntPoly) -> IntPoly {
    match p.deglex_lc() {
        Some(k) if k.is_negative() => p.neg(),
        _ => p,
    }
}

/// Gcd of polynomials with trivial integer and monomial content; the result
/// has trivial integer content and unspecified sign.
fn gcd_primitive(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.term_count() == 1 || b.term_count() == 1 {
        return IntPoly::one();
    }
    let (adc, bdc) = (a.c_degree(), b.c_degree());
    if adc == 0 && bdc == 0 {
        return IntPoly::from_q(upoly::gcd(&a.coeffs[0], &b.coeffs[0]));
    }
    let (adq, bdq) = (a.q_degree(), b.q_degree());
    if adq == 0 && bdq == 0 {
        return gcd_primitive(&a.transpose(), &b.transpose()).transpose();
    }
    if adc == 0 {
        return IntPoly::from_q(upoly::gcd(&a.coeffs[0], &q_content(b)));
    }
    if bdc == 0 {
        return IntPoly::from_q(upoly::gcd(&b.coeffs[0], &q_content(a)));
    }
    if adq == 0 || bdq == 0 {
        return gcd_primitive(&a.transpose(), &b.transpose()).transpose();
    }
    if coprime_certificate(a, b) {
        return IntPoly::one();
    }
    gcd_recursive(a, b)
}

/// Gcd over Z[q] of the coefficients of the powers of `c`.
fn q_content(a: &IntPoly) -> UPoly {
    let mut g = UPoly::zero();
    for u in &a.coeffs {
        if u.is_zero() {
            continue;
        }
        g = upoly::gcd(&g, u);
        if g.is_one() {
            break;
        }
    }
    g
}

const Q0: u64 = 1_000_003;
const C0: u64 = 7_654_321;

/// Specialize one variable at a time modulo a prime. If the leading
/// coefficient survives and the images are coprime, the gcd has degree zero
/// in the remaining variable. Both directions together force a constant gcd.
fn coprime_certificate(a: &IntPoly, b: &IntPoly) -> bool {
    let p = modp::P;
    // c = C0, polynomials in q
    let dq = a.q_degree();
    let lcq: Vec<u64> = a
        .coeffs
        .iter()
        .map(|u| u.0.get(dq).map_or(0, |k| k.rem_u64(p)))
        .collect();
    if eval_vec(&lcq, C0, p) == 0 {
        return false;
    }
    let spec_q = |x: &IntPoly| -> Vec<u64> {
        let n = x.q_degree() + 1;
        let mut out = vec![0u64; n];
        let mut cp = 1u64;
        for u in &x.coeffs {
            for (i, k) in u.0.iter().enumerate() {
                out[i] = modp::add(out[i], modp::mul(k.rem_u64(p), cp, p), p);
            }
            cp = modp::mul(cp, C0, p);
        }
        out
    };
    if modp::gcd(spec_q(a), spec_q(b), p).len() != 1 {
        return false;
    }
    // q = Q0, polynomials in c
    let lcc = a.coeffs.last().unwrap().eval_mod(Q0, p);
    if lcc == 0 {
        return false;
    }
    let spec_c = |x: &IntPoly| -> Vec<u64> { x.coeffs.iter().map(|u| u.eval_mod(Q0, p)).collect() };
    modp::gcd(spec_c(a), spec_c(b), p).len() == 1
}

fn eval_vec(v: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0;
    for &k in v.iter().rev() {
        acc = modp::add(modp::mul(acc, x, p), k, p);
    }
    acc
}

/// Primitive PRS in `c` over Z[q].
fn gcd_recursive(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let ca = q_content(a);
    let cb = q_content(b);
    let gc = upoly::gcd(&ca, &cb);
    let mut x = pp_c(a);
    let mut y = pp_c(b);
    if x.coeffs.len() < y.coeffs.len() {
        std::mem::swap(&mut x, &mut y);
    }
    let g = if y.coeffs.len() == 1 {
        IntPoly::one()
    } else {
        loop {
            let r = prem_c(&x, &y);
            if r.is_zero() {
                break pp_c(&y);
            }
            if r.coeffs.len() == 1 {
                break IntPoly::one();
            }
            x = y;
            y = pp_c(&r);
        }
    };
    g.mul(&IntPoly::from_q(gc))
}

fn pp_c(a: &IntPoly) -> IntPoly {
    let g = q_content(a);
    IntPoly::from_coeffs(
        a.coeffs
            .iter()
            .map(|u| u.div_exact(&g).expect("content divides"))
            .collect(),
    )
}

fn prem_c(x: &IntPoly, y: &IntPoly) -> IntPoly {
    let dy = y.coeffs.len() - 1;
    let ly = &y.coeffs[dy];
    let mut r = x.coeffs.clone();
    while r.len() > dy && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let mut next: Vec<UPoly> = r.iter().map(|u| u.mul(ly)).collect();
        for (j, u) in y.coeffs.iter().enumerate() {
            let idx = dr - dy + j;
            next[idx] = next[idx].sub(&lr.mul(u));
        }
        while matches!(next.last(), Some(u) if u.is_zero()) {
            next.pop();
        }
        r = next;
    }
    IntPoly::from_coeffs(r)
}

impl From<i64> for IntPoly {
    fn from(v: i64) -> Self {
        IntPoly::constant(Int::from(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(usize, usize, i64)]) -> IntPoly {
        IntPoly::from_terms(terms.iter().map(|&(a, b, k)| (a, b, Int::from(k))))
    }

    #[test]
    fn bivariate_gcd() {
        // (q + c)(q - 1) and (q + c)(c + 2)
        let f = poly(&[(1, 0, 1), (0, 1, 1)]);
        let a = f.mul(&poly(&[(1, 0, 1), (0, 0, -1)]));
        let b = f.mul(&poly(&[(0, 1, 1), (0, 0, 2)]));
        assert_eq!(gcd(&a, &b), f);
        let a2 = a.mul_monomial(2, 1).scale(&Int::from(6));
        let b2 = b.mul_monomial(3, 0).scale(&Int::from(-9));
        assert_eq!(gcd(&a2, &b2), f.mul_monomial(2, 0).scale(&Int::from(3)));
    }

    #[test]
    fn content_sees_every_coefficient() {
        // a constant partial gcd of 2 must still shrink to 1
        let a = poly(&[(0, 0, 2), (1, 1, 3)]);
        assert!(q_content(&a).is_one());
        assert_eq!(pp_c(&a), a);
    }

    #[test]
    fn coprime_inputs() {
        let a = poly(&[(2, 0, 1), (0, 1, 1), (0, 0, 1)]);
        let b = poly(&[(1, 1, 1), (0, 0, 3)]);
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn exact_division_and_transpose() {
        let f = poly(&[(1, 0, 1), (0, 1, 1)]);
        let g = poly(&[(2, 1, 3), (0, 0, -1)]);
        let h = f.mul(&g);
        assert_eq!(h.div_exact(&f), Some(g.clone()));
        assert_eq!(h.transpose().transpose(), h);
        assert_eq!(h.div_exact(&poly(&[(1, 0, 2), (0, 0, 1)])), None);
    }
}
