//! PBW monomials in root vectors and the straightening engine.
//!
//! Products of root vectors are brought into the ordered basis by applying
//! the commutation relations of [`relations`] to the leftmost out-of-order
//! adjacent pair. Both the pair table and whole-word normal forms are
//! memoized.

mod graded;
pub mod relations;

pub use graded::{
    check_top_component, positive_root_vector, independence_check, monomials_of_height, pbw_count,
    HeightRow, IndependenceReport, TopComponentReport,
};
pub use relations::{coeff_a, coeff_b, correction_imag, correction_real, correction_real0};

use crate::freealg::{render_terms, Letter, NcPoly};
use crate::onsager::{expand_roots, render_root_word, RootPoly, VerifyError};
use crate::roots::Root;
use crate::scalar::Scalar;
use parking_lot::Mutex;
use serde::Serialize;
use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};
use thiserror::Error;

type Poly = NcPoly<Scalar>;

#[derive(Debug, Error)]
pub enum PbwError {
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("{0}*{1} is already ordered")]
    InOrder(Root, Root),
    #[error("factors are not weakly increasing: {0}")]
    Unordered(String),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

/// Ordered product of root vectors, stored as a weakly increasing list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PbwMonomial {
    roots: Vec<Root>,
}

impl PbwMonomial {
    pub fn one() -> Self {
        PbwMonomial { roots: Vec::new() }
    }

    pub fn root(r: Root) -> Self {
        PbwMonomial { roots: vec![r] }
    }

    pub fn new(roots: Vec<Root>) -> Result<Self, PbwError> {
        if roots.windows(2).any(|w| w[0] > w[1]) {
            return Err(PbwError::Unordered(render_root_word(&roots)));
        }
        Ok(PbwMonomial { roots })
    }

    /// From `(root, exponent)` pairs with strictly increasing roots.
    pub fn from_factors(factors: &[(Root, u32)]) -> Result<Self, PbwError> {
        if factors.windows(2).any(|w| w[0].0 >= w[1].0) || factors.iter().any(|f| f.1 == 0) {
            return Err(PbwError::Unordered(format!("{factors:?}")));
        }
        let roots = factors
            .iter()
            .flat_map(|&(r, e)| std::iter::repeat_n(r, e as usize))
            .collect();
        Ok(PbwMonomial { roots })
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn factors(&self) -> Vec<(Root, u32)> {
        let mut out: Vec<(Root, u32)> = Vec::new();
        for &r in &self.roots {
            match out.last_mut() {
                Some((last, e)) if *last == r => *e += 1,
                _ => out.push((r, 1)),
            }
        }
        out
    }

    pub fn height(&self) -> usize {
        self.roots.iter().map(|r| r.height()).sum()
    }

    pub fn is_one(&self) -> bool {
        self.roots.is_empty()
    }

    fn key(&self) -> (Reverse<usize>, &[Root]) {
        (Reverse(self.height()), &self.roots)
    }
}

/// Height descending, then lexicographic in the root order.
impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_root_word(&self.roots))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PbwElement {
    terms: BTreeMap<PbwMonomial, Scalar>,
}

impl PbwElement {
    pub fn zero() -> Self {
        PbwElement::default()
    }

    pub fn one() -> Self {
        PbwElement::monomial(PbwMonomial::one())
    }

    pub fn constant(k: Scalar) -> Self {
        PbwElement::term(PbwMonomial::one(), k)
    }

    pub fn root(r: Root) -> Self {
        PbwElement::monomial(PbwMonomial::root(r))
    }

    pub fn monomial(m: PbwMonomial) -> Self {
        PbwElement::term(m, Scalar::one())
    }

    pub fn term(m: PbwMonomial, k: Scalar) -> Self {
        let mut out = PbwElement::zero();
        out.add_term(m, &k);
        out
    }

    /// Convert a root-label polynomial whose words are all ordered.
    pub fn from_ordered(x: &RootPoly) -> Result<Self, PbwError> {
        let mut out = PbwElement::zero();
        for (w, k) in x.terms() {
            out.add_term(PbwMonomial::new(w.clone())?, k);
        }
        Ok(out)
    }

    pub fn to_root_poly(&self) -> RootPoly {
        let mut out = RootPoly::zero();
        for (m, k) in &self.terms {
            out = out.add(&RootPoly::term(m.roots.clone(), k.clone()));
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Largest monomial height, 0 for zero.
    pub fn height(&self) -> usize {
        self.terms.keys().map(|m| m.height()).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: PbwMonomial, k: &Scalar) {
        if k.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += k;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, k.clone());
            }
        }
    }

    fn add_scaled(&mut self, rhs: &PbwElement, s: &Scalar) {
        for (m, k) in &rhs.terms {
            self.add_term(m.clone(), &(k * s));
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Scalar::one());
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = PbwElement::zero();
        out.add_scaled(self, s);
        out
    }
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        f.write_str(&render_terms(self.terms.iter().map(|(m, k)| (m.to_string(), k))))
    }
}

/// Memoized straightening.
#[derive(Default)]
pub struct PbwEngine {
    pairs: Mutex<HashMap<(Root, Root), Arc<PbwElement>>>,
    words: Mutex<HashMap<Vec<Root>, Arc<PbwElement>>>,
}

impl PbwEngine {
    pub fn new() -> Self {
        PbwEngine::default()
    }

    pub fn shared() -> &'static PbwEngine {
        static SHARED: OnceLock<PbwEngine> = OnceLock::new();
        SHARED.get_or_init(PbwEngine::new)
    }

    /// Normal form of `B_γ B_γ′` for an out-of-order or equal pair.
    pub fn straighten(&self, g: Root, h: Root) -> Result<Arc<PbwElement>, PbwError> {
        if g < h {
            return Err(PbwError::InOrder(g, h));
        }
        if let Some(v) = self.pairs.lock().get(&(g, h)) {
            return Ok(v.clone());
        }
        let v = Arc::new(straighten_pair(g, h));
        #[cfg(debug_assertions)]
        for (m, _) in v.terms() {
            debug_assert!(m.height() <= g.height() + h.height());
        }
        self.pairs.lock().insert((g, h), v.clone());
        Ok(v)
    }

    /// Normal form of an arbitrary product of root vectors.
    pub fn normalize_word(&self, w: &[Root]) -> Arc<PbwElement> {
        let Some(i) = w.windows(2).position(|p| p[0] > p[1]) else {
            return Arc::new(PbwElement::monomial(PbwMonomial { roots: w.to_vec() }));
        };
        if let Some(v) = self.words.lock().get(w) {
            return v.clone();
        }
        let pair = self.straighten(w[i], w[i + 1]).expect("out-of-order pair");
        let mut out = PbwElement::zero();
        let mut buf = Vec::with_capacity(w.len() + 2);
        for (m, k) in pair.terms() {
            buf.clear();
            buf.extend_from_slice(&w[..i]);
            buf.extend_from_slice(&m.roots);
            buf.extend_from_slice(&w[i + 2..]);
            out.add_scaled(&self.normalize_word(&buf), k);
        }
        let out = Arc::new(out);
        self.words.lock().insert(w.to_vec(), out.clone());
        out
    }

    pub fn multiply(&self, x: &PbwElement, y: &PbwElement) -> PbwElement {
        let mut out = PbwElement::zero();
        let mut buf = Vec::new();
        for (m1, k1) in x.terms() {
            for (m2, k2) in y.terms() {
                buf.clear();
                buf.extend_from_slice(&m1.roots);
                buf.extend_from_slice(&m2.roots);
                out.add_scaled(&self.normalize_word(&buf), &(k1 * k2));
            }
        }
        out
    }

    /// Normal form of a root-label polynomial in arbitrary order.
    pub fn normalize(&self, x: &RootPoly) -> PbwElement {
        let mut out = PbwElement::zero();
        for (w, k) in x.terms() {
            out.add_scaled(&self.normalize_word(w), k);
        }
        out
    }

    /// Read a free-algebra element as a polynomial in `B0 = g0`, `B1 = g1`.
    pub fn lift(&self, x: &Poly) -> PbwElement {
        let mut out = PbwElement::zero();
        for (w, k) in x.terms() {
            let roots: Vec<Root> = w
                .letters()
                .map(|l| match l {
                    Letter::G0 => Root::Real0(0),
                    Letter::G1 => Root::Real1(0),
                })
                .collect();
            out.add_scaled(&self.normalize_word(&roots), k);
        }
        out
    }
}

fn straighten_pair(g: Root, h: Root) -> PbwElement {
    use relations::*;
    let q2 = Scalar::q_pow(2);
    let qm2 = Scalar::q_pow(-2);
    let swap = RootPoly::product(&[h, g]);
    let rhs = match (g, h) {
        _ if g == h => RootPoly::product(&[g, g]),
        (Root::Real1(a), Root::Real1(b)) => {
            let (r, m) = (a as i64, (b - a) as i64);
            swap.scale(&qm2).add(&com_real_real1(r, m))
        }
        (Root::Real0(a), Root::Real0(b)) => {
            let (r, m) = (b as i64, (a - b) as i64);
            swap.scale(&qm2).add(&com_real_real0(r, m))
        }
        (Root::Real1(s), Root::Real0(r)) => swap.sub(&com_real_mixed(r as i64, s as i64)).scale(&q2),
        (Root::Real1(p), Root::Imag(m)) => swap.add(&bnd_bp1(p as i64, m as i64)),
        (Root::Imag(m), Root::Real0(p)) => swap.add(&bnd_bp0(p as i64, m as i64)),
        (Root::Imag(_), Root::Imag(_)) => swap,
        _ => unreachable!("pair {g}*{h} is ordered"),
    };
    PbwElement::from_ordered(&rhs).expect("relations produce ordered monomials")
}

/// Normal form of `B_γ B_γ′` from the shared engine.
pub fn straighten(g: Root, h: Root) -> Result<PbwElement, PbwError> {
    Ok((*PbwEngine::shared().straighten(g, h)?).clone())
}

pub fn pbw_multiply(x: &PbwElement, y: &PbwElement) -> PbwElement {
    PbwEngine::shared().multiply(x, y)
}

pub fn normalize_roots(x: &RootPoly) -> PbwElement {
    PbwEngine::shared().normalize(x)
}

pub fn lift_to_pbw(x: &Poly) -> PbwElement {
    PbwEngine::shared().lift(x)
}

pub fn expand_to_free(x: &PbwElement) -> Poly {
    expand_roots(&x.to_root_poly())
}

/// One row of the structure-constant table.
#[derive(Clone, Debug, Serialize)]
pub struct StructureConstant {
    pub left: String,
    pub right: String,
    pub terms: Vec<(String, Scalar)>,
}

/// Normal forms of all out-of-order root pairs with height sum at most `bound`.
pub fn structure_constants(bound: usize) -> Vec<StructureConstant> {
    let roots = Root::up_to_height(bound);
    let mut out = Vec::new();
    for &g in &roots {
        for &h in &roots {
            if h < g && g.height() + h.height() <= bound {
                let v = PbwEngine::shared().straighten(g, h).expect("out of order");
                out.push(StructureConstant {
                    left: g.to_string(),
                    right: h.to_string(),
                    terms: v.terms().map(|(m, k)| (m.to_string(), k.clone())).collect(),
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests;
