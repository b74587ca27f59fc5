//! The named verification suites.
//!
//! Each suite expands into items; an item is an identity checked modulo the
//! ideal, an identity checked exactly in the free algebra, or a custom check.
//! Items that need a larger completion bound than the one requested are
//! reported as skipped with the bound they need.

use crate::classical::specialization_check;
use crate::freealg::{defining_relations, CMode, NcPoly};
use crate::onsager::*;
use crate::pbw::relations::*;
use crate::pbw::{check_top_component, independence_check, pbw_count};
use crate::rewrite::{shared_system, RewriteError, RewriteSystem};
use crate::roots::{a0, a1, d, Root};
use crate::scalar::Scalar;
use num_rational::BigRational;
use num_traits::{One, Zero};
use parking_lot::Mutex;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;
use std::sync::Arc;
use std::time::Instant;
use thiserror::Error;

type Poly = NcPoly<Scalar>;

/// Version of the JSON report layout.
pub const REPORT_VERSION: u32 = 1;

/// Enumerated instances of the commutation relations stay within this degree.
pub const INSTANCE_DEGREE_CAP: usize = 12;

pub const SUITE_NAMES: [&str; 21] = [
    "t0-automorphism",
    "t1-bdelta",
    "braid-translates",
    "bdelta-real",
    "cm-ordered",
    "dm-ordered",
    "real-real",
    "real-real-mixed",
    "b1-bndelta",
    "bnd-real-low",
    "bnd-real-high",
    "imaginary-commute",
    "fn-recursion",
    "rn-closed-form",
    "com2",
    "fn-alt",
    "lemma-ndeltadelta",
    "pbw-independence",
    "top-component",
    "theorem2-coefficients",
    "classical-limit",
];

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error("thread pool: {0}")]
    Pool(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped { needs: usize },
}

impl Serialize for Status {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Status::Pass => s.serialize_str("pass"),
            Status::Fail => s.serialize_str("fail"),
            Status::Skipped { needs } => s.serialize_str(&format!("skipped (needs bound {needs})")),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ItemReport {
    pub suite: String,
    pub identity: String,
    pub params: String,
    pub degree: usize,
    pub status: Status,
    pub millis: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub version: u32,
    pub bound: usize,
    pub items: Vec<ItemReport>,
}

impl SuiteReport {
    pub fn failed(&self) -> usize {
        self.items.iter().filter(|i| i.status == Status::Fail).count()
    }

    pub fn skipped(&self) -> usize {
        self.items
            .iter()
            .filter(|i| matches!(i.status, Status::Skipped { .. }))
            .count()
    }

    pub fn passed(&self) -> bool {
        self.failed() == 0 && self.skipped() == 0
    }

    pub fn strip_timing(&mut self) {
        for i in &mut self.items {
            i.millis = None;
        }
    }
}

/// Shared state while running: the frozen systems and the braid chains.
struct Ctx {
    bound: usize,
    sys: Arc<RewriteSystem<Scalar>>,
    chains: Mutex<HashMap<(u8, u32), Arc<Poly>>>,
}

struct Outcome {
    passed: bool,
    degree: usize,
    witness: Option<String>,
}

type PairFn = Box<dyn Fn() -> (Poly, Poly) + Send + Sync>;
type CustomFn = Box<dyn Fn(&Ctx) -> Result<Outcome, RewriteError> + Send + Sync>;

enum Kind {
    Ideal(PairFn),
    Exact(PairFn),
    Custom { needs: usize, run: CustomFn },
}

struct Item {
    suite: &'static str,
    identity: String,
    params: String,
    kind: Kind,
}

fn ideal(suite: &'static str, identity: impl Into<String>, params: String, f: impl Fn() -> (Poly, Poly) + Send + Sync + 'static) -> Item {
    Item {
        suite,
        identity: identity.into(),
        params,
        kind: Kind::Ideal(Box::new(f)),
    }
}

fn exact(suite: &'static str, identity: impl Into<String>, params: String, f: impl Fn() -> (Poly, Poly) + Send + Sync + 'static) -> Item {
    Item {
        suite,
        identity: identity.into(),
        params,
        kind: Kind::Exact(Box::new(f)),
    }
}

fn custom(
    suite: &'static str,
    identity: impl Into<String>,
    params: String,
    needs: usize,
    f: impl Fn(&Ctx) -> Result<Outcome, RewriteError> + Send + Sync + 'static,
) -> Item {
    Item {
        suite,
        identity: identity.into(),
        params,
        kind: Kind::Custom { needs, run: Box::new(f) },
    }
}

fn rv(r: Root) -> Poly {
    (*root_vector(r)).clone()
}

fn ex(x: &RootPoly) -> Poly {
    expand_roots(x)
}

fn at(r: Root) -> RootPoly {
    RootPoly::atom(r)
}

fn qm2() -> Scalar {
    Scalar::q_pow(-2)
}

fn morph(name: MorphismName) -> crate::Morphism {
    named_morphism(name)
}

fn p1(k: &str, v: i64) -> String {
    format!("{k}={v}")
}

fn p2(k: &str, v: i64, l: &str, w: i64) -> String {
    format!("{k}={v},{l}={w}")
}

fn items_for(name: &str) -> Option<Vec<Item>> {
    let s: &'static str = SUITE_NAMES.iter().find(|n| **n == name)?;
    let mut v = Vec::new();
    match name {
        "t0-automorphism" => {
            for m in [MorphismName::T0, MorphismName::T0inv] {
                for (i, rel) in defining_relations(CMode::Generic).into_iter().enumerate() {
                    v.push(ideal(s, format!("{m}(qDG relation {i}) = 0"), String::new(), move || {
                        (morph(m).apply(&rel), Poly::zero())
                    }));
                }
            }
            v.push(ideal(s, "T0(T0inv(B1)) = B1", String::new(), || {
                let inner = morph(MorphismName::T0inv).apply(&Poly::g1());
                (morph(MorphismName::T0).apply(&inner), Poly::g1())
            }));
            v.push(ideal(s, "T0inv(T0(B1)) = B1", String::new(), || {
                let inner = morph(MorphismName::T0).apply(&Poly::g1());
                (morph(MorphismName::T0inv).apply(&inner), Poly::g1())
            }));
        }
        "t1-bdelta" => {
            v.push(ideal(s, "T1(B(1,d)) = Phi(B(1,d))", String::new(), || {
                let bd = rv(d(1));
                (morph(MorphismName::T1).apply(&bd), morph(MorphismName::Phi).apply(&bd))
            }));
            v.push(ideal(s, "T0(T1(B(1,d))) = B(1,d)", String::new(), || {
                let bd = rv(d(1));
                let t1 = morph(MorphismName::T1).apply(&bd);
                (morph(MorphismName::T0).apply(&t1), bd)
            }));
            for m in 1..=3 {
                v.push(ideal(s, "T0Phi(B(m,d)) = B(m,d)", p1("m", m), move || {
                    let b = rv(d(m));
                    (t0_phi().apply(&b), b)
                }));
            }
        }
        "braid-translates" => {
            for fam in [0u8, 1] {
                let (chain, root) = if fam == 0 { ("(T0Phi)^n(B0)", "B(n,a0)") } else { ("(T1invPhi)^n(B1)", "B(n,a1)") };
                for n in 1..=3u32 {
                    v.push(custom(s, format!("{chain} = {root}"), p1("n", n as i64), chain_bound(n), move |ctx| {
                        let x = ctx.chain(fam, n)?;
                        let r = if fam == 0 { Root::Real0(n) } else { Root::Real1(n) };
                        outcome(verify_identity(&x, &rv(r), &ctx.sys))
                    }));
                }
                for n in 1..=3u32 {
                    let id = if fam == 0 {
                        "[B(1,d), X_n] = c[2](X_{n+1} - X_{n-1}), X_n = (T0Phi)^n(B0)"
                    } else {
                        "[Y_n, B(1,d)] = c[2](Y_{n+1} - Y_{n-1}), Y_n = (T1invPhi)^n(B1)"
                    };
                    v.push(custom(s, id, p1("n", n as i64), chain_bound(n + 1), move |ctx| {
                        let bd = rv(d(1));
                        let (x, up, down) = (ctx.chain(fam, n)?, ctx.chain(fam, n + 1)?, ctx.chain(fam, n - 1)?);
                        let lhs = if fam == 0 { bd.commutator(&x) } else { x.commutator(&bd) };
                        outcome(verify_identity(&lhs, &up.sub(&down).scale(&c_two()), &ctx.sys))
                    }));
                }
            }
        }
        "bdelta-real" => {
            v.push(ideal(s, "[B(1,d), B0] = c[2](B(1,a0) - B1)", String::new(), || {
                (rv(d(1)).commutator(&Poly::g0()), rv(a0(1)).sub(&Poly::g1()).scale(&c_two()))
            }));
            v.push(ideal(s, "[B1, B(1,d)] = c[2](B(1,a1) - B0)", String::new(), || {
                (Poly::g1().commutator(&rv(d(1))), rv(a1(1)).sub(&Poly::g0()).scale(&c_two()))
            }));
            for n in 1..=2 {
                v.push(ideal(s, "[B(1,d), B(n,a0)] = c[2](B(n+1,a0) - B(n-1,a0))", p1("n", n), move || {
                    let rhs = rv(a0(n + 1)).sub(&rv(a0(n - 1))).scale(&c_two());
                    (rv(d(1)).commutator(&rv(a0(n))), rhs)
                }));
                v.push(ideal(s, "[B(n,a1), B(1,d)] = c[2](B(n+1,a1) - B(n-1,a1))", p1("n", n), move || {
                    let rhs = rv(a1(n + 1)).sub(&rv(a1(n - 1))).scale(&c_two());
                    (rv(a1(n)).commutator(&rv(d(1))), rhs)
                }));
            }
        }
        "cm-ordered" => {
            for m in 1..=6 {
                v.push(ideal(s, "C_m = ordered form", p1("m", m), move || (c_element(m), ex(&cm_ordered(m)))));
            }
            for n in 2..=6 {
                v.push(exact(
                    s,
                    "C_{n+1} - (T0Phi)^-1(C_{n-1}) = B1 B(n-1,a1) + B(n-1,a1) B1",
                    p1("n", n),
                    move || {
                        let lhs = c_roots(n + 1).sub(&c_roots(n - 1).transport(-1));
                        let b = RootPoly::product(&[a1(0), a1(n - 1)]).add(&RootPoly::product(&[a1(n - 1), a1(0)]));
                        (ex(&lhs), ex(&b))
                    },
                ));
            }
        }
        "dm-ordered" => {
            for m in 1..=6 {
                v.push(ideal(s, "D_m = ordered form", p1("m", m), move || (d_element(m), ex(&dm_ordered(m)))));
            }
            for m in 1..=6 {
                v.push(exact(s, "D_m = (T0Phi)^{m-1}(C_m)", p1("m", m), move || {
                    (d_element(m), ex(&c_roots(m).transport(m - 1)))
                }));
            }
        }
        "real-real" => {
            for (r, m) in real_real_params() {
                v.push(ideal(s, "[B(r,a1), B(r+m,a1); q^-2] = relation", p2("r", r, "m", m), move || {
                    let lhs = rv(a1(r)).p_commutator(&rv(a1(r + m)), &qm2());
                    (lhs, ex(&com_real_real1(r, m)))
                }));
                v.push(ideal(s, "[B(r+m,a0), B(r,a0); q^-2] = relation", p2("r", r, "m", m), move || {
                    let lhs = rv(a0(r + m)).p_commutator(&rv(a0(r)), &qm2());
                    (lhs, ex(&com_real_real0(r, m)))
                }));
            }
        }
        "real-real-mixed" => {
            for (r, t) in mixed_params() {
                let id = if r <= t {
                    "[B(r,a0), B(s,a1); q^-2] = relation (r <= s)"
                } else {
                    "[B(r,a0), B(s,a1); q^-2] = relation (r >= s)"
                };
                v.push(ideal(s, id, p2("r", r, "s", t), move || {
                    let lhs = rv(a0(r)).p_commutator(&rv(a1(t)), &qm2());
                    (lhs, ex(&com_real_mixed(r, t)))
                }));
            }
        }
        "b1-bndelta" => {
            for m in 1..=4 {
                v.push(ideal(s, "[B(m,d), B0] = b-expansion", p1("m", m), move || {
                    (rv(d(m)).commutator(&Poly::g0()), ex(&b0_bnd(m)))
                }));
                v.push(ideal(s, "[B1, B(m,d)] = b-expansion", p1("m", m), move || {
                    (Poly::g1().commutator(&rv(d(m))), ex(&b1_bnd(m)))
                }));
            }
        }
        "bnd-real-low" | "bnd-real-high" => {
            let high = name == "bnd-real-high";
            for (p, m) in bnd_params(high) {
                v.push(ideal(s, "[B(p,a1), B(m,d)] = relation", p2("p", p, "m", m), move || {
                    (rv(a1(p)).commutator(&rv(d(m))), ex(&bnd_bp1(p, m)))
                }));
                v.push(ideal(s, "[B(m,d), B(p,a0)] = relation", p2("p", p, "m", m), move || {
                    (rv(d(m)).commutator(&rv(a0(p))), ex(&bnd_bp0(p, m)))
                }));
            }
        }
        "imaginary-commute" => {
            for (n, m) in [(2, 1), (3, 1), (4, 1), (3, 2)] {
                v.push(ideal(s, "[B(n,d), B(m,d)] = 0", p2("n", n, "m", m), move || {
                    (rv(d(n)).commutator(&rv(d(m))), Poly::zero())
                }));
            }
            for g in [a1(0), a0(0)] {
                v.push(ideal(s, format!("[[B(n,d), B(m,d)], {g}] = 0"), p2("n", 2, "m", 1), move || {
                    let inner = rv(d(2)).commutator(&rv(d(1)));
                    (inner.commutator(&rv(g)), Poly::zero())
                }));
            }
        }
        "fn-recursion" => {
            for n in 2..=5 {
                v.push(ideal(
                    s,
                    "F_{n+1} = B1 B(n,d) + q^2 B(n,d) B1 - B(n-1,d) B0 - q^2 B0 B(n-1,d) + (T0Phi)^-1(F_n)",
                    p1("n", n),
                    move || (f_element(n + 1).expect("n >= 2"), ex(&f_recursion_rhs_roots(n).expect("n >= 2"))),
                ));
            }
        }
        "rn-closed-form" => {
            for n in 1..=6 {
                v.push(exact(s, "R_n = closed form", p1("n", n), move || (r_element(n), ex(&r_closed_roots(n)))));
            }
        }
        "com2" => {
            for n in 1..=6 {
                v.push(exact(s, "[T0Phi(C_n), B0] = sum form", p1("n", n), move || {
                    (ex(&t0phi_c_roots(n).commutator(&at(a0(0)))), ex(&com2_rhs_roots(n)))
                }));
            }
        }
        "fn-alt" => {
            for n in 2..=5 {
                v.push(ideal(s, "F_n = alternative sum", p1("n", n), move || {
                    (f_element(n).expect("n >= 2"), ex(&f_alt_roots(n)))
                }));
            }
        }
        "lemma-ndeltadelta" => {
            for n in 1..=4 {
                v.push(ideal(s, "[B(n,d), B(1,d)] = c[2](id - T0Phi)(B(n+1,d))", p1("n", n), move || {
                    let transported = RootPoly::product(&[a0(1), a1(n - 1)])
                        .neg()
                        .add(&RootPoly::product(&[a1(n - 1), a0(1)]).scale(&qm2()))
                        .add(&t0phi_c_roots(n + 1).scale(&(qm2() - Scalar::one())));
                    let rhs = rv(d(n + 1)).sub(&ex(&transported)).scale(&c_two());
                    (rv(d(n)).commutator(&rv(d(1))), rhs)
                }));
            }
        }
        "pbw-independence" => {
            let gf = generating_function(8);
            for (h, &expect) in gf.iter().enumerate() {
                v.push(custom(s, "normal words of degree d = series coefficient", p1("d", h as i64), h, move |ctx| {
                    let got = ctx.sys.normal_count(h)?;
                    Ok(Outcome {
                        passed: got == expect && pbw_count(h) == expect,
                        degree: h,
                        witness: (got != expect).then(|| format!("{got} normal words, expected {expect}")),
                    })
                }));
            }
            v.push(custom(s, "ordered monomials are independent", p1("height", 8), 8, |ctx| {
                let rep = independence_check(8, &ctx.sys).map_err(pbw_to_rewrite)?;
                Ok(Outcome {
                    passed: rep.passed,
                    degree: 8,
                    witness: (!rep.passed).then(|| format!("rank {} of {} monomials", rep.rank, rep.monomials)),
                })
            }));
        }
        "top-component" => {
            for r in Root::up_to_height(7) {
                v.push(custom(s, "top component = c^-n E_gamma", r.to_string(), 7, move |_| {
                    let serre = shared_system(CMode::Zero, 7)?;
                    let rep = check_top_component(r, &serre).map_err(pbw_to_rewrite)?;
                    Ok(Outcome {
                        passed: rep.passed,
                        degree: r.height(),
                        witness: rep.witness,
                    })
                }));
            }
        }
        "theorem2-coefficients" => {
            for (r, m) in real_real_params() {
                v.push(ring_item(s, "C^re coefficients", p2("r", r, "m", m), move || correction_real(r, m)));
                v.push(ring_item(s, "C^re (a0 family) coefficients", p2("r", r, "m", m), move || {
                    correction_real0(r, m)
                }));
            }
            for high in [false, true] {
                for (p, m) in bnd_params(high) {
                    for i in 0..=1u8 {
                        v.push(ring_item(s, format!("C^im coefficients, i={i}"), p2("p", p, "m", m), move || {
                            correction_imag(p, m, i)
                        }));
                    }
                }
            }
        }
        "classical-limit" => {
            for (g, h) in classical_pairs() {
                v.push(custom(s, "q=c=1 limit of [B_g, B_h] = Onsager bracket", format!("{g},{h}"), 0, move |_| {
                    match specialization_check(g, h) {
                        Ok(rep) => Ok(Outcome {
                            passed: rep.passed,
                            degree: g.height() + h.height(),
                            witness: (!rep.passed).then(|| format!("limit {} expected {}", rep.limit, rep.expected)),
                        }),
                        Err(e) => Ok(Outcome {
                            passed: false,
                            degree: g.height() + h.height(),
                            witness: Some(e.to_string()),
                        }),
                    }
                }));
            }
            for m in 1..=4 {
                v.push(custom(s, "b^(m)_p at q=c=1 is 2 for p=m, else 0", p1("m", m), 0, move |_| {
                    let one = BigRational::one();
                    let ok = (1..=m).all(|p| {
                        let v = coeff_b(p, m).expect("in range").evaluate(&one, &one).expect("no pole");
                        if p == m {
                            v == BigRational::from_integer(2.into())
                        } else {
                            v.is_zero()
                        }
                    });
                    Ok(Outcome { passed: ok, degree: 0, witness: None })
                }));
            }
            for (r, m) in real_real_params() {
                v.push(custom(s, "C^re vanishes at q=c=1", p2("r", r, "m", m), 0, move |_| {
                    let one = BigRational::one();
                    let ok = correction_real(r, m)
                        .add(&correction_real0(r, m))
                        .terms()
                        .all(|(_, k)| k.evaluate(&one, &one).is_ok_and(|v| v.is_zero()));
                    Ok(Outcome { passed: ok, degree: 0, witness: None })
                }));
            }
        }
        _ => return None,
    }
    Some(v)
}

fn pbw_to_rewrite(e: crate::pbw::PbwError) -> RewriteError {
    match e {
        crate::pbw::PbwError::Verify(VerifyError::BoundTooLow { degree, bound }) => {
            RewriteError::BoundExceeded { degree, bound }
        }
        crate::pbw::PbwError::Verify(VerifyError::Rewrite(e)) => e,
        other => RewriteError::Capacity {
            degree: 0,
            what: other.to_string(),
        },
    }
}

fn ring_item(
    s: &'static str,
    id: impl Into<String>,
    params: String,
    f: impl Fn() -> RootPoly + Send + Sync + 'static,
) -> Item {
    custom(s, id, params, 0, move |_| {
        let x = f();
        let bad: Vec<String> = x
            .terms()
            .filter(|(_, k)| !in_structure_ring(k))
            .map(|(w, k)| format!("{k} at {}", RootPoly::term(w.clone(), Scalar::one())))
            .collect();
        Ok(Outcome {
            passed: bad.is_empty(),
            degree: x.height(),
            witness: (!bad.is_empty()).then(|| bad.join("; ")),
        })
    })
}

/// `(r, m)` with `(2r+1) + (2(r+m)+1) ≤ 12`.
fn real_real_params() -> Vec<(i64, i64)> {
    let mut v = Vec::new();
    for r in 0..=5i64 {
        for m in 1..=5i64 {
            if (4 * r + 2 * m + 2) as usize <= INSTANCE_DEGREE_CAP {
                v.push((r, m));
            }
        }
    }
    v
}

/// `(r, s)` with `r + s + 1 ≤ 4`.
fn mixed_params() -> Vec<(i64, i64)> {
    let mut v = Vec::new();
    for r in 0..=3 {
        for t in 0..=3 - r {
            v.push((r, t));
        }
    }
    v
}

/// `(p, m)`: low is `m ≤ 4, p ≤ m-1`; high is `m ≤ 3, m ≤ p ≤ 4`; both capped in degree.
fn bnd_params(high: bool) -> Vec<(i64, i64)> {
    let mut v = Vec::new();
    for m in 1..=4i64 {
        let ps: Vec<i64> = if high {
            if m > 3 {
                continue;
            }
            (m..=4).collect()
        } else {
            (0..m).collect()
        };
        for p in ps {
            if (2 * m + 2 * p + 1) as usize <= INSTANCE_DEGREE_CAP {
                v.push((p, m));
            }
        }
    }
    v
}

/// Root pairs `(γ, γ′)` covered by the commutation suites.
fn classical_pairs() -> Vec<(Root, Root)> {
    let mut v = Vec::new();
    for (r, m) in real_real_params() {
        v.push((a1(r), a1(r + m)));
        v.push((a0(r + m), a0(r)));
    }
    for (r, t) in mixed_params() {
        v.push((a0(r), a1(t)));
    }
    for m in 1..=4 {
        v.push((d(m), a0(0)));
        v.push((a1(0), d(m)));
    }
    for high in [false, true] {
        for (p, m) in bnd_params(high) {
            v.push((a1(p), d(m)));
            v.push((d(m), a0(p)));
        }
    }
    for (n, m) in [(2, 1), (3, 1), (4, 1), (3, 2)] {
        v.push((d(n), d(m)));
    }
    v.sort();
    v.dedup();
    v
}

/// Coefficients of `Π(1-t^{2k+1})^{-2} Π(1-t^{2k})^{-1}` up to `t^n`.
pub fn generating_function(n: usize) -> Vec<usize> {
    let mut c = vec![0usize; n + 1];
    c[0] = 1;
    let mut mult = |part: usize| {
        // multiply by 1/(1 - t^part)
        for i in part..=n {
            c[i] += c[i - part];
        }
    };
    for k in 1..=n {
        if k % 2 == 1 {
            mult(k);
            mult(k);
        } else {
            mult(k);
        }
    }
    c
}

/// Bound needed to build the braid chain element of index `n`.
fn chain_bound(n: u32) -> usize {
    if n == 0 {
        0
    } else {
        4 * n as usize - 1
    }
}

impl Ctx {
    /// `(T0Φ)^n(B0)` (family 0) or `(T1⁻¹Φ)^n(B1)` (family 1), reduced after every step.
    fn chain(&self, fam: u8, n: u32) -> Result<Arc<Poly>, RewriteError> {
        if let Some(p) = self.chains.lock().get(&(fam, n)) {
            return Ok(p.clone());
        }
        let p = if n == 0 {
            if fam == 0 {
                Poly::g0()
            } else {
                Poly::g1()
            }
        } else {
            let prev = self.chain(fam, n - 1)?;
            let m = if fam == 0 { t0_phi() } else { t1inv_phi() };
            self.sys.reduce(&m.apply(&prev))?
        };
        let p = Arc::new(p);
        self.chains.lock().insert((fam, n), p.clone());
        Ok(p)
    }
}

fn outcome(r: Result<IdentityReport, VerifyError>) -> Result<Outcome, RewriteError> {
    match r {
        Ok(rep) => Ok(Outcome {
            passed: rep.passed,
            degree: rep.degree,
            witness: rep.witness.map(|w| w.to_string()),
        }),
        Err(VerifyError::BoundTooLow { degree, bound }) => Err(RewriteError::BoundExceeded { degree, bound }),
        Err(VerifyError::Rewrite(e)) => Err(e),
    }
}

fn truncate(s: String) -> String {
    const MAX: usize = 2000;
    if s.len() <= MAX {
        return s;
    }
    let mut end = MAX;
    while !s.is_char_boundary(end) {
        end -= 1;
    }
    format!("{}...", &s[..end])
}

fn run_item(item: &Item, ctx: &Ctx) -> Result<ItemReport, RewriteError> {
    let start = Instant::now();
    let mut report = ItemReport {
        suite: item.suite.to_string(),
        identity: item.identity.clone(),
        params: item.params.clone(),
        degree: 0,
        status: Status::Pass,
        millis: None,
        witness: None,
    };
    let skip = |mut r: ItemReport, needs: usize| {
        r.degree = needs;
        r.status = Status::Skipped { needs };
        r
    };
    let result = match &item.kind {
        Kind::Ideal(f) | Kind::Exact(f) => {
            let (lhs, rhs) = f();
            let diff = lhs.sub(&rhs);
            let degree = diff.degree().unwrap_or(0);
            if matches!(item.kind, Kind::Exact(_)) {
                Outcome {
                    passed: diff.is_zero(),
                    degree,
                    witness: (!diff.is_zero()).then(|| diff.to_string()),
                }
            } else if degree > ctx.bound {
                return Ok(skip(report, degree));
            } else {
                outcome(verify_identity(&lhs, &rhs, &ctx.sys))?
            }
        }
        Kind::Custom { needs, run } => {
            if *needs > ctx.bound {
                return Ok(skip(report, *needs));
            }
            match run(ctx) {
                Ok(o) => o,
                Err(RewriteError::BoundExceeded { degree, .. }) => return Ok(skip(report, degree)),
                Err(e) => return Err(e),
            }
        }
    };
    report.degree = result.degree;
    report.status = if result.passed { Status::Pass } else { Status::Fail };
    report.witness = result.witness.map(truncate);
    report.millis = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

/// Expand suite names; `"all"` selects every suite.
pub fn resolve_suites(names: &[String]) -> Result<Vec<&'static str>, SuiteError> {
    let mut out = Vec::new();
    for n in names {
        if n == "all" {
            out.extend(SUITE_NAMES);
        } else {
            let s = SUITE_NAMES
                .iter()
                .find(|s| **s == n.as_str())
                .ok_or_else(|| SuiteError::UnknownSuite(n.clone()))?;
            out.push(*s);
        }
    }
    out.sort_by_key(|s| SUITE_NAMES.iter().position(|t| t == s));
    out.dedup();
    Ok(out)
}

/// Run suites against the generic system completed to `bound`. Items run in
/// parallel on `jobs` threads (all cores when `None`); the report order is
/// fixed by suite and item position.
pub fn run_suites(names: &[String], bound: usize, jobs: Option<usize>) -> Result<SuiteReport, SuiteError> {
    let suites = resolve_suites(names)?;
    let sys = shared_system(CMode::Generic, bound)?;
    let ctx = Ctx {
        bound,
        sys,
        chains: Mutex::new(HashMap::new()),
    };
    let items: Vec<Item> = suites
        .iter()
        .flat_map(|s| items_for(s).expect("known suite"))
        .collect();
    let run = || -> Result<Vec<ItemReport>, RewriteError> { items.par_iter().map(|i| run_item(i, &ctx)).collect() };
    let reports = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| SuiteError::Pool(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    Ok(SuiteReport {
        version: REPORT_VERSION,
        bound,
        items: reports,
    })
}

/// Number of items each suite expands to.
pub fn suite_size(name: &str) -> Option<usize> {
    items_for(name).map(|v| v.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_coefficients() {
        assert_eq!(generating_function(8), vec![1, 2, 4, 8, 14, 24, 40, 64, 100]);
    }

    #[test]
    fn every_suite_is_known() {
        for s in SUITE_NAMES {
            assert!(suite_size(s).unwrap() > 0, "{s}");
        }
        assert!(resolve_suites(&["nope".into()]).is_err());
        assert_eq!(resolve_suites(&["all".into()]).unwrap().len(), 21);
    }

    #[test]
    fn parameter_ranges() {
        assert!(real_real_params().contains(&(0, 5)));
        assert!(real_real_params().contains(&(2, 1)));
        assert!(!real_real_params().contains(&(2, 2)));
        assert_eq!(mixed_params().len(), 10);
        assert!(bnd_params(false).contains(&(2, 3)));
        assert!(!bnd_params(true).contains(&(4, 3)));
    }

    #[test]
    fn small_suites_pass() {
        let rep = run_suites(&["bdelta-real".into(), "rn-closed-form".into()], 7, Some(2)).unwrap();
        assert!(rep.passed(), "{rep:?}");
        let rep = run_suites(&["imaginary-commute".into()], 6, None).unwrap();
        assert!(rep.skipped() > 0 && rep.failed() == 0);
        let first = rep.items.iter().find(|i| i.params == "n=2,m=1").unwrap();
        assert_eq!(first.status, Status::Pass);
    }
}
