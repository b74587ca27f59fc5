use crate::freealg::render_terms;
use crate::roots::Root;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// A noncommutative polynomial in root-vector symbols.
///
/// Used for expressions built from named root vectors, where the action of
/// `T0Φ` is the label shift [`Root::transport`].
#[derive(Clone, Debug, PartialEq, Default)]
pub struct RootPoly {
    terms: BTreeMap<Vec<Root>, Scalar>,
}

impl RootPoly {
    pub fn zero() -> Self {
        RootPoly::default()
    }

    pub fn one() -> Self {
        RootPoly::constant(Scalar::one())
    }

    pub fn constant(k: Scalar) -> Self {
        RootPoly::term(Vec::new(), k)
    }

    pub fn atom(r: Root) -> Self {
        RootPoly::term(vec![r], Scalar::one())
    }

    pub fn term(word: Vec<Root>, k: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !k.is_zero() {
            terms.insert(word, k);
        }
        RootPoly { terms }
    }

    /// Product of atoms.
    pub fn product(roots: &[Root]) -> Self {
        RootPoly::term(roots.to_vec(), Scalar::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Root>, &Scalar)> {
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

    pub fn coefficient(&self, word: &[Root]) -> Scalar {
        self.terms.get(word).cloned().unwrap_or_else(Scalar::zero)
    }

    pub(crate) fn add_term(&mut self, word: Vec<Root>, k: &Scalar) {
        if k.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(v) => {
                *v += k;
                if v.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, k.clone());
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, k) in &rhs.terms {
            out.add_term(w.clone(), k);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return RootPoly::zero();
        }
        RootPoly {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * s)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = RootPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, &(a * b));
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// `x y - p y x`.
    pub fn p_commutator(&self, rhs: &Self, p: &Scalar) -> Self {
        self.mul(rhs).sub(&rhs.mul(self).scale(p))
    }

    /// Apply `(T0Φ)^k` on labels.
    pub fn transport(&self, k: i64) -> Self {
        let mut out = RootPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.iter().map(|r| r.transport(k)).collect(), c);
        }
        out
    }

    /// Exchange the real families and reverse every product.
    pub fn mirror(&self) -> Self {
        let mut out = RootPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.iter().rev().map(|r| r.mirror()).collect(), c);
        }
        out
    }

    /// Largest total height among the terms.
    pub fn height(&self) -> usize {
        self.terms
            .keys()
            .map(|w| w.iter().map(|r| r.height()).sum())
            .max()
            .unwrap_or(0)
    }
}

pub(crate) fn render_root_word(w: &[Root]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        if j - i == 1 {
            parts.push(w[i].to_string());
        } else {
            parts.push(format!("{}^{}", w[i], j - i));
        }
        i = j;
    }
    parts.join("*")
}

impl fmt::Display for RootPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render_terms(self.terms.iter().rev().map(|(w, k)| (render_root_word(w), k)));
        write!(f, "{s}")
    }
}
