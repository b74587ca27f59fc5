//! The auxiliary sums as root-label polynomials and as free-algebra elements.
//!
//! `T0Φ` applied to a sum of real root vectors is computed on labels; that
//! matches the automorphism modulo the ideal.

use super::{expand_roots, OnsagerError, RootPoly};
use crate::freealg::NcPoly;
use crate::roots::{a0, a1, d, Root};
use crate::scalar::Scalar;

type Poly = NcPoly<Scalar>;

fn q2() -> Scalar {
    Scalar::q_pow(2)
}

fn qm2() -> Scalar {
    Scalar::q_pow(-2)
}

fn atom(r: Root) -> RootPoly {
    RootPoly::atom(r)
}

fn pair(x: Root, y: Root) -> RootPoly {
    RootPoly::product(&[x, y])
}

/// `C_m = Σ_{p=0}^{m-2} B_{pδ+α1} B_{(m-p-2)δ+α1}`.
pub fn c_roots(m: i64) -> RootPoly {
    let mut out = RootPoly::zero();
    for p in 0..=m - 2 {
        out = out.add(&pair(a1(p), a1(m - p - 2)));
    }
    out
}

/// `D_m = Σ_{p=0}^{m-2} B_{pδ+α0} B_{(m-p-2)δ+α0}`.
pub fn d_roots(m: i64) -> RootPoly {
    let mut out = RootPoly::zero();
    for p in 0..=m - 2 {
        out = out.add(&pair(a0(p), a0(m - p - 2)));
    }
    out
}

/// `T0Φ(C_k)`.
pub fn t0phi_c_roots(k: i64) -> RootPoly {
    c_roots(k).transport(1)
}

/// The defining expression of `B_{mδ}` in terms of real root vectors.
pub fn imag_def_roots(m: i64) -> RootPoly {
    let b0 = atom(a0(0));
    let r = atom(a1(m - 1));
    b0.mul(&r)
        .neg()
        .add(&r.mul(&b0).scale(&qm2()))
        .add(&c_roots(m).scale(&(qm2() - Scalar::one())))
}

/// `F_n = q⁻²[C_{n-1}, B_{δ+α0}] - [T0Φ(C_n), B0] - (q²-q⁻²) B_{δ+α0} C_{n-1}`.
pub fn f_roots(n: i64) -> Result<RootPoly, OnsagerError> {
    if n < 2 {
        return Err(OnsagerError::OutOfRange {
            what: "F_n",
            min: 2,
            got: n,
        });
    }
    let b = atom(a0(1));
    let c = c_roots(n - 1);
    Ok(c.commutator(&b)
        .scale(&qm2())
        .sub(&t0phi_c_roots(n).commutator(&atom(a0(0))))
        .sub(&b.mul(&c).scale(&(q2() - qm2()))))
}

/// `R_n = q² Σ T0Φ(C_{n-m-1}) B_{mδ+α1} - q⁻² Σ B_{mδ+α1} T0Φ(C_{n-m-1})`.
pub fn r_roots(n: i64) -> RootPoly {
    let mut out = RootPoly::zero();
    for m in 0..=n - 3 {
        let t = t0phi_c_roots(n - m - 1);
        let b = atom(a1(m));
        out = out.add(&t.mul(&b).scale(&q2())).sub(&b.mul(&t).scale(&qm2()));
    }
    out
}

/// Closed form `-Σ (B_{(n-m-2)δ} B_{(m-1)δ+α1} + q² B_{(m-1)δ+α1} B_{(n-m-2)δ})`.
pub fn r_closed_roots(n: i64) -> RootPoly {
    let mut out = RootPoly::zero();
    for m in 0..=n - 3 {
        let (x, y) = (d(n - m - 2), a1(m - 1));
        out = out.sub(&pair(x, y)).sub(&pair(y, x).scale(&q2()));
    }
    out
}

/// Right side of `[T0Φ(C_n), B0] = Σ B_{mδ+α1} T0Φ(C_{n-m-1}) - Σ T0Φ(C_{n-m-1}) B_{mδ+α1}`.
pub fn com2_rhs_roots(n: i64) -> RootPoly {
    let mut out = RootPoly::zero();
    for m in 0..=n - 3 {
        let t = t0phi_c_roots(n - m - 1);
        let b = atom(a1(m));
        out = out.add(&b.mul(&t)).sub(&t.mul(&b));
    }
    out
}

/// The alternative expression for `F_n` as a sum over imaginary root vectors.
pub fn f_alt_roots(n: i64) -> RootPoly {
    let mut out = RootPoly::zero();
    for m in 0..=n - 3 {
        let (x, y) = (a1(m), d(n - 1 - m));
        out = out.add(&pair(x, y)).add(&pair(y, x).scale(&q2()));
    }
    out.add(&r_closed_roots(n))
}

/// Right side of the `F_{n+1}` recursion:
/// `B1 B_{nδ} + q² B_{nδ} B1 - B_{(n-1)δ} B0 - q² B0 B_{(n-1)δ} + (T0Φ)⁻¹(F_n)`.
pub fn f_recursion_rhs_roots(n: i64) -> Result<RootPoly, OnsagerError> {
    let back = f_roots(n)?.transport(-1);
    let (b0, b1) = (a0(0), a1(0));
    Ok(pair(b1, d(n))
        .add(&pair(d(n), b1).scale(&q2()))
        .sub(&pair(d(n - 1), b0))
        .sub(&pair(b0, d(n - 1)).scale(&q2()))
        .add(&back))
}

pub fn c_element(m: i64) -> Poly {
    expand_roots(&c_roots(m))
}

pub fn d_element(m: i64) -> Poly {
    expand_roots(&d_roots(m))
}

pub fn f_element(n: i64) -> Result<Poly, OnsagerError> {
    Ok(expand_roots(&f_roots(n)?))
}

pub fn r_element(n: i64) -> Poly {
    expand_roots(&r_roots(n))
}

/// `imaginary(m)` as a root-label expression of degree `2m` (for tests and
/// reports); the expansion is the root vector itself.
pub fn imaginary_element(m: i64) -> Poly {
    expand_roots(&imag_def_roots(m))
}
