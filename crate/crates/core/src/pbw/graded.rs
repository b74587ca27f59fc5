//! The associated graded picture: top components of root vectors against the
//! positive-part root vectors, and linear independence of ordered monomials.

use super::{PbwError, PbwMonomial};
use crate::freealg::{CMode, NcPoly};
use crate::linalg::rank_by;
use crate::onsager::{root_vector, verify_identity, VerifyError};
use crate::rewrite::RewriteSystem;
use crate::roots::Root;
use crate::scalar::{qint, Scalar};
use parking_lot::Mutex;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

type Poly = NcPoly<Scalar>;

fn positive_memo() -> &'static Mutex<HashMap<Root, Arc<Poly>>> {
    static MEMO: OnceLock<Mutex<HashMap<Root, Arc<Poly>>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Root vector of the positive part, written in the letters `g0 = E0`,
/// `g1 = E1`.
pub fn positive_root_vector(r: Root) -> Arc<Poly> {
    if let Some(p) = positive_memo().lock().get(&r) {
        return p.clone();
    }
    let inv2 = qint(2).inv().expect("nonzero");
    let qm2 = Scalar::q_pow(-2);
    let p = match r {
        Root::Real0(0) => Poly::g0(),
        Root::Real1(0) => Poly::g1(),
        Root::Real0(n) => positive_root_vector(Root::Imag(1))
            .commutator(&positive_root_vector(Root::Real0(n - 1)))
            .scale(&inv2),
        Root::Real1(n) => positive_root_vector(Root::Real1(n - 1))
            .commutator(&positive_root_vector(Root::Imag(1)))
            .scale(&inv2),
        Root::Imag(m) => {
            let e = positive_root_vector(Root::Real1(m - 1));
            let e0 = Poly::g0();
            e0.mul(&e).neg().add(&e.mul(&e0).scale(&qm2))
        }
    };
    let p = Arc::new(p);
    positive_memo().lock().entry(r).or_insert(p).clone()
}

#[derive(Clone, Debug, Serialize)]
pub struct TopComponentReport {
    pub root: Root,
    /// `n` with top component `c^{-n} E_γ`.
    pub exponent: i64,
    /// Every coefficient of the top component is a pure power `c^{-n}` times a c-free scalar.
    pub c_homogeneous: bool,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Compare the top homogeneous component of a root vector with `c^{-n} E_γ`
/// modulo the q-Serre relations.
pub fn check_top_component(r: Root, serre: &RewriteSystem<Scalar>) -> Result<TopComponentReport, PbwError> {
    if serre.mode() != CMode::Zero {
        return Err(PbwError::OutOfRange("top components need the c = 0 system".into()));
    }
    let exponent = match r {
        Root::Real0(n) | Root::Real1(n) => n as i64,
        Root::Imag(m) => m as i64 - 1,
    };
    let top = root_vector(r).homogeneous_component(r.height());
    let c_homogeneous = top.terms().iter().all(|(_, k)| {
        k.c_expansion()
            .is_some_and(|parts| parts.len() == 1 && parts[0].0 == -exponent)
    });
    if !c_homogeneous {
        return Ok(TopComponentReport {
            root: r,
            exponent,
            c_homogeneous,
            passed: false,
            witness: Some(top.to_string()),
        });
    }
    let scaled = top.map_coeffs(|k| k.mul_c_pow(exponent));
    let rep = verify_identity(&scaled, &positive_root_vector(r), serre)?;
    Ok(TopComponentReport {
        root: r,
        exponent,
        c_homogeneous,
        passed: rep.passed,
        witness: rep.witness.map(|w| w.to_string()),
    })
}

/// All ordered monomials of height exactly `h`.
pub fn monomials_of_height(h: usize) -> Vec<PbwMonomial> {
    fn go(roots: &[Root], start: usize, left: usize, acc: &mut Vec<Root>, out: &mut Vec<PbwMonomial>) {
        if left == 0 {
            out.push(PbwMonomial { roots: acc.clone() });
            return;
        }
        for i in start..roots.len() {
            let rh = roots[i].height();
            if rh <= left {
                acc.push(roots[i]);
                go(roots, i, left - rh, acc, out);
                acc.pop();
            }
        }
    }
    let roots = Root::up_to_height(h);
    let mut out = Vec::new();
    go(&roots, 0, h, &mut Vec::new(), &mut out);
    out
}

/// Number of ordered monomials of height exactly `h`.
pub fn pbw_count(h: usize) -> usize {
    monomials_of_height(h).len()
}

#[derive(Clone, Debug, Serialize)]
pub struct HeightRow {
    pub height: usize,
    pub monomials: usize,
    pub rank: usize,
    pub normal_words: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndependenceReport {
    pub max_height: usize,
    pub monomials: usize,
    pub rank: usize,
    pub normal_total: usize,
    pub by_height: Vec<HeightRow>,
    pub passed: bool,
}

/// Exact rank of the expanded ordered monomials of height at most `max_height`.
///
/// Each expansion lies in filtration degree equal to its height, so the
/// matrix is block triangular by height; the diagonal block of height `h` is
/// the degree-`h` part of the normal forms, which splits further by the
/// letter multidegree. Full rank of every diagonal block gives full rank.
pub fn independence_check(max_height: usize, sys: &RewriteSystem<Scalar>) -> Result<IndependenceReport, PbwError> {
    let mut by_height = Vec::new();
    for h in 0..=max_height {
        let monos = monomials_of_height(h);
        let normal_words = sys.normal_count(h).map_err(VerifyError::from)?;
        let tops: Vec<Poly> = monos
            .par_iter()
            .map(|m| {
                let x = super::expand_to_free(&super::PbwElement::monomial(m.clone()));
                sys.reduce(&x).map(|nf| nf.homogeneous_component(h))
            })
            .collect::<Result<_, _>>()
            .map_err(VerifyError::from)?;
        let rank = block_rank(&tops);
        by_height.push(HeightRow {
            height: h,
            monomials: monos.len(),
            rank,
            normal_words,
        });
    }
    let monomials = by_height.iter().map(|r| r.monomials).sum();
    let rank = by_height.iter().map(|r| r.rank).sum();
    let normal_total = by_height.iter().map(|r| r.normal_words).sum();
    Ok(IndependenceReport {
        max_height,
        monomials,
        rank,
        normal_total,
        passed: rank == monomials && monomials == normal_total,
        by_height,
    })
}

/// Rank of homogeneous rows, split into blocks of rows connected through
/// shared letter multidegrees.
fn block_rank(rows: &[Poly]) -> usize {
    // union-find over rows, joined when they share a multidegree
    let mut parent: Vec<usize> = (0..rows.len()).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut i = i;
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, row) in rows.iter().enumerate() {
        for (w, _) in row.terms() {
            let md = w.multidegree();
            match owner.get(&md) {
                Some(&j) => {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
                None => {
                    owner.insert(md, i);
                }
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..rows.len() {
        let r = find(&mut parent, i);
        blocks.entry(r).or_default().push(i);
    }
    blocks
        .into_values()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|idx| {
            let mut cols: HashMap<crate::freealg::Word, usize> = HashMap::new();
            for &i in &idx {
                for (w, _) in rows[i].terms() {
                    let n = cols.len();
                    cols.entry(*w).or_insert(n);
                }
            }
            let dense: Vec<Vec<Scalar>> = idx
                .iter()
                .map(|&i| {
                    let mut v = vec![Scalar::zero(); cols.len()];
                    for (w, k) in rows[i].terms() {
                        v[cols[w]] = k.clone();
                    }
                    v
                })
                .collect();
            rank_by(dense, Scalar::size)
        })
        .sum()
}
