//! The commutation relations between root vectors, written as ordered
//! root-label polynomials, together with their structure constants.

use super::PbwError;
use crate::onsager::{c_two, RootPoly};
use crate::roots::{a0, a1, d, Root};
use crate::scalar::Scalar;

fn qp(e: i64) -> Scalar {
    Scalar::q_pow(e)
}

/// `q² - q⁻²`.
fn qq() -> Scalar {
    qp(2) - qp(-2)
}

/// `q⁻² - 1`.
fn qm() -> Scalar {
    qp(-2) - Scalar::one()
}

fn atom(r: Root) -> RootPoly {
    RootPoly::atom(r)
}

fn pair(x: Root, y: Root) -> RootPoly {
    RootPoly::product(&[x, y])
}

/// `a^m_p`, defined for `1 ≤ p ≤ m/2`.
pub fn coeff_a(p: i64, m: i64) -> Result<Scalar, PbwError> {
    if p < 1 || 2 * p > m {
        return Err(PbwError::OutOfRange(format!("a^{m}_{p} needs 1 <= p <= m/2")));
    }
    Ok(if 2 * p == m {
        qp(2 - m)
    } else {
        qp(-2 * (p - 1)) * (Scalar::one() + qp(-2))
    })
}

/// `b^{(m)}_p`, defined for `1 ≤ p ≤ m`.
pub fn coeff_b(p: i64, m: i64) -> Result<Scalar, PbwError> {
    if p < 1 || p > m {
        return Err(PbwError::OutOfRange(format!("b^({m})_{p} needs 1 <= p <= m")));
    }
    Ok(if p == m {
        c_two() * qp(-2 * (m - 1))
    } else {
        -(qp(4) - Scalar::one()) * qp(-2 * p)
    })
}

fn a(p: i64, m: i64) -> Scalar {
    coeff_a(p, m).expect("index in range")
}

fn b(p: i64, m: i64) -> Scalar {
    coeff_b(p, m).expect("index in range")
}

/// `-Σ_{p=1}^{[(m-1)/2]} q^{-2(p-1)} B_{(m-2p)δ}`.
fn imag_tail(m: i64) -> RootPoly {
    let mut out = RootPoly::zero();
    for p in 1..=(m - 1) / 2 {
        out = out.sub(&atom(d(m - 2 * p)).scale(&qp(-2 * (p - 1))));
    }
    out
}

/// Ordered closed form of `C_m`.
pub fn cm_ordered(m: i64) -> RootPoly {
    let mut out = imag_tail(m);
    for p in 1..=m / 2 {
        out = out.add(&pair(a1(m - p - 1), a1(p - 1)).scale(&a(p, m)));
    }
    out
}

/// Ordered closed form of `D_m`.
pub fn dm_ordered(m: i64) -> RootPoly {
    let mut out = imag_tail(m);
    for p in 1..=m / 2 {
        out = out.add(&pair(a0(p - 1), a0(m - p - 1)).scale(&a(p, m)));
    }
    out
}

/// Right side of `[B_{rδ+α1}, B_{(r+m)δ+α1}]_{q⁻²}`.
pub fn com_real_real1(r: i64, m: i64) -> RootPoly {
    let mut out = atom(d(m)).neg().add(&imag_tail(m).scale(&qm()));
    for p in 1..=m / 2 {
        out = out.add(&pair(a1(m - p + r), a1(p + r)).scale(&(qm() * a(p, m))));
    }
    out
}

/// Right side of `[B_{(r+m)δ+α0}, B_{rδ+α0}]_{q⁻²}`.
pub fn com_real_real0(r: i64, m: i64) -> RootPoly {
    let mut out = atom(d(m)).neg().add(&imag_tail(m).scale(&qm()));
    for p in 1..=m / 2 {
        out = out.add(&pair(a0(p + r), a0(m - p + r)).scale(&(qm() * a(p, m))));
    }
    out
}

/// Right side of `[B_{rδ+α0}, B_{sδ+α1}]_{q⁻²}`, both branches.
pub fn com_real_mixed(r: i64, s: i64) -> RootPoly {
    let k = r.min(s);
    let mut out = atom(d(r + s + 1)).neg();
    for j in 0..k {
        out = out.sub(&atom(d(r + s - 1 - 2 * j)).scale(&((qp(2) - Scalar::one()) * qp(2 * j))));
        let prod = if r <= s {
            pair(a0(j), a1(s - r + j))
        } else {
            pair(a0(r - s + j), a1(j))
        };
        out = out.sub(&prod.scale(&(qq() * qp(2 * (k - 1 - j)))));
    }
    let tail = if r <= s {
        cm_ordered(s - r + 1)
    } else {
        dm_ordered(r - s + 1)
    };
    out.add(&tail.scale(&(qm() * qp(2 * k))))
}

/// Right side of `[B_1, B_{mδ}]`.
pub fn b1_bnd(m: i64) -> RootPoly {
    let mut out = atom(a1(m)).sub(&atom(a0(m - 1))).scale(&b(m, m));
    for p in 1..m {
        let t = pair(d(m - p), a1(p)).sub(&pair(a0(p - 1), d(m - p)));
        out = out.add(&t.scale(&b(p, m)));
    }
    out
}

/// Right side of `[B_{mδ}, B_0]`.
pub fn b0_bnd(m: i64) -> RootPoly {
    b1_bnd(m).mirror()
}

/// Right side of `[B_{pδ+α1}, B_{mδ}]`, choosing the branch by `p < m`.
pub fn bnd_bp1(p: i64, m: i64) -> RootPoly {
    let ct = c_two();
    let mut out = RootPoly::zero();
    if p < m {
        let mut head = atom(a1(m + p)).scale(&qp(-2 * (m - 1)));
        for h in 0..p {
            head = head.add(&atom(a1(m - p + 2 * h)).scale(&(qq() * qp(-2 * (m - 2 * p + 2 * h)))));
        }
        head = head.sub(&atom(a0(m - p - 1)).scale(&qp(-2 * (m - 2 * p - 1))));
        out = out.add(&head.scale(&ct));
        for l in 1..=p {
            let mut inner = atom(a1(l + p)).scale(&qp(-2 * (l - 1)));
            for h in 1..l {
                inner = inner.add(&atom(a1(l + p - 2 * h)).scale(&(qq() * qp(-2 * (l - 2 * h)))));
            }
            inner = inner.sub(&atom(a1(p - l)).scale(&qp(2 * (l - 1))));
            out = out.sub(&atom(d(m - l)).mul(&inner).scale(&qq()));
        }
        for l in p + 1..m {
            let mut inner = atom(a1(l + p)).scale(&qp(-2 * (l - 1)));
            for h in 1..=p {
                inner = inner.add(&atom(a1(l + p - 2 * h)).scale(&(qq() * qp(-2 * (l - 2 * h)))));
            }
            out = out.sub(&atom(d(m - l)).mul(&inner).scale(&qq()));
            out = out.add(&pair(a0(l - p - 1), d(m - l)).scale(&(qq() * qp(-2 * (l - 2 * p - 1)))));
        }
    } else {
        let mut head = atom(a1(p + m)).scale(&qp(-2 * (m - 1)));
        for h in 0..=m - 2 {
            head = head.add(&atom(a1(p - m + 2 + 2 * h)).scale(&(qq() * qp(2 * (m - 2 - 2 * h)))));
        }
        head = head.sub(&atom(a1(p - m)).scale(&qp(2 * (m - 1))));
        out = out.add(&head.scale(&ct));
        for l in 1..m {
            let mut inner = atom(a1(p + l)).scale(&qp(-2 * (l - 1)));
            for h in 1..l {
                inner = inner.add(&atom(a1(p + l - 2 * h)).scale(&(qq() * qp(-2 * (l - 2 * h)))));
            }
            inner = inner.sub(&atom(a1(p - l)).scale(&qp(2 * (l - 1))));
            out = out.sub(&atom(d(m - l)).mul(&inner).scale(&qq()));
        }
    }
    out
}

/// Right side of `[B_{mδ}, B_{pδ+α0}]`.
pub fn bnd_bp0(p: i64, m: i64) -> RootPoly {
    bnd_bp1(p, m).mirror()
}

/// The leading part `c[2] q^{-2(m-1)} (B_{(p+m)δ+α} - q^{4 min(p,m-1)} B_{(p-m)δ+α})`
/// for the family `α = α_i`.
pub fn imag_leading(p: i64, m: i64, i: u8) -> RootPoly {
    let fam = |k: i64| if i == 0 { a0(k) } else { a1(k) };
    atom(fam(p + m))
        .sub(&atom(fam(p - m)).scale(&qp(4 * p.min(m - 1))))
        .scale(&(c_two() * qp(-2 * (m - 1))))
}

/// `C^re_{r,m}`: the α1 real-real relation minus its leading `-B_{mδ}`.
pub fn correction_real(r: i64, m: i64) -> RootPoly {
    com_real_real1(r, m).add(&atom(d(m)))
}

/// The same residual for the α0 family.
pub fn correction_real0(r: i64, m: i64) -> RootPoly {
    com_real_real0(r, m).add(&atom(d(m)))
}

/// `C^im_{p,m,i}`: `[B_{mδ}, B_{pδ+α_i}]` minus `(-1)^i` times the leading part.
pub fn correction_imag(p: i64, m: i64, i: u8) -> RootPoly {
    if i == 0 {
        bnd_bp0(p, m).sub(&imag_leading(p, m, 0))
    } else {
        bnd_bp1(p, m).neg().add(&imag_leading(p, m, 1))
    }
}

/// Whether a coefficient lies in `(q-1)(Z[q,q⁻¹] + Z[q,q⁻¹]c)`.
pub fn in_structure_ring(k: &Scalar) -> bool {
    let Some(parts) = k.c_expansion() else {
        return false;
    };
    parts.iter().all(|(e, s)| {
        let unit_den = s.denominator().as_monomial().is_some_and(|(k, _, _)| k.abs().is_one());
        (*e == 0 || *e == 1) && unit_den && s.vanishes_at_q1().unwrap_or(false)
    })
}
