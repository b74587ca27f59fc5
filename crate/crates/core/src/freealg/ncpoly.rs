use super::word::{Letter, Word};
use crate::coeff::Coefficient;
use crate::scalar::Scalar;
use std::collections::HashMap;
use std::fmt;

/// A finite linear combination of words.
///
/// Terms are kept sorted by increasing word under the deglex order and never
/// carry a zero coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct NcPoly<K> {
    terms: Vec<(Word, K)>,
}

impl<K: Coefficient> Default for NcPoly<K> {
    fn default() -> Self {
        NcPoly::zero()
    }
}

impl<K: Coefficient> NcPoly<K> {
    pub fn zero() -> Self {
        NcPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        NcPoly::constant(K::one())
    }

    pub fn constant(k: K) -> Self {
        NcPoly::term(Word::EMPTY, k)
    }

    pub fn term(w: Word, k: K) -> Self {
        if k.is_zero() {
            NcPoly::zero()
        } else {
            NcPoly {
                terms: vec![(w, k)],
            }
        }
    }

    pub fn word(w: Word) -> Self {
        NcPoly::term(w, K::one())
    }

    pub fn generator(l: Letter) -> Self {
        NcPoly::word(Word::letter(l))
    }

    pub fn g0() -> Self {
        NcPoly::generator(Letter::G0)
    }

    pub fn g1() -> Self {
        NcPoly::generator(Letter::G1)
    }

    /// Build from unsorted terms, merging repeated words.
    pub fn from_terms<I: IntoIterator<Item = (Word, K)>>(terms: I) -> Self {
        let mut acc: HashMap<Word, K> = HashMap::new();
        for (w, k) in terms {
            match acc.get_mut(&w) {
                Some(v) => v.add_assign_ref(&k),
                None => {
                    acc.insert(w, k);
                }
            }
        }
        NcPoly::from_map(acc)
    }

    fn from_map(acc: HashMap<Word, K>) -> Self {
        let mut terms: Vec<(Word, K)> = acc.into_iter().filter(|(_, k)| !k.is_zero()).collect();
        terms.sort_by_key(|a| a.0);
        NcPoly { terms }
    }

    /// Trusted constructor: terms strictly increasing, no zeros.
    pub(crate) fn from_sorted(terms: Vec<(Word, K)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, k)| !k.is_zero()));
        NcPoly { terms }
    }

    pub fn terms(&self) -> &[(Word, K)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Word, K)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximal word length, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().map(|(w, _)| w.len()).max()
    }

    /// Largest word and its coefficient.
    pub fn leading(&self) -> Option<&(Word, K)> {
        self.terms.last()
    }

    pub fn coefficient(&self, w: Word) -> K {
        match self.terms.binary_search_by(|(x, _)| x.cmp(&w)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => K::zero(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.merge(rhs, false)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.merge(rhs, true)
    }

    fn merge(&self, rhs: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &rhs.terms);
        let fix = |k: &K| if negate { k.neg_ref() } else { k.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, fix(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = if negate {
                        a[i].1.sub_ref(&b[j].1)
                    } else {
                        a[i].1.add_ref(&b[j].1)
                    };
                    if !s.is_zero() {
                        out.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(w, k)| (*w, fix(k))));
        NcPoly { terms: out }
    }

    pub fn neg(&self) -> Self {
        NcPoly {
            terms: self.terms.iter().map(|(w, k)| (*w, k.neg_ref())).collect(),
        }
    }

    pub fn scale(&self, s: &K) -> Self {
        if s.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, k)| (*w, k.mul_ref(s)))
                .filter(|(_, k)| !k.is_zero())
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return NcPoly::zero();
        }
        if rhs.terms.len() == 1 && rhs.terms[0].0.is_empty() {
            return self.scale(&rhs.terms[0].1);
        }
        if self.terms.len() == 1 && self.terms[0].0.is_empty() {
            return rhs.scale(&self.terms[0].1);
        }
        let mut acc: HashMap<Word, K> = HashMap::with_capacity(self.len() * rhs.len());
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                let w = u.concat(*v);
                let p = a.mul_ref(b);
                match acc.get_mut(&w) {
                    Some(x) => x.add_assign_ref(&p),
                    None => {
                        acc.insert(w, p);
                    }
                }
            }
        }
        NcPoly::from_map(acc)
    }

    /// Multiply on the left by `u` and on the right by `v`.
    pub fn wrap(&self, u: Word, v: Word) -> Self {
        let mut terms: Vec<(Word, K)> = self
            .terms
            .iter()
            .map(|(w, k)| (u.concat(*w).concat(v), k.clone()))
            .collect();
        // wrapping by fixed words preserves deglex order
        debug_assert!(terms.windows(2).all(|x| x[0].0 < x[1].0));
        terms.shrink_to_fit();
        NcPoly { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = NcPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `x y - p y x`.
    pub fn p_commutator(&self, rhs: &Self, p: &K) -> Self {
        self.mul(rhs).sub(&rhs.mul(self).scale(p))
    }

    /// `x y - y x`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// Terms whose word has length exactly `d`.
    pub fn homogeneous_component(&self, d: usize) -> Self {
        NcPoly {
            terms: self.terms.iter().filter(|(w, _)| w.len() == d).cloned().collect(),
        }
    }

    pub fn map_words<F: Fn(Word) -> Word>(&self, f: F) -> Self {
        NcPoly::from_terms(self.terms.iter().map(|(w, k)| (f(*w), k.clone())))
    }

    pub fn map_coeffs<L: Coefficient, F: Fn(&K) -> L>(&self, f: F) -> NcPoly<L> {
        NcPoly::from_terms(self.terms.iter().map(|(w, k)| (*w, f(k))))
    }

    /// Exchange the two generators in every word.
    pub fn swap_letters(&self) -> Self {
        self.map_words(Word::swapped)
    }

    /// Reverse every word (the anti-automorphism fixing both generators).
    pub fn reverse_words(&self) -> Self {
        self.map_words(Word::reversed)
    }
}

impl<K: Coefficient> std::ops::Add for &NcPoly<K> {
    type Output = NcPoly<K>;
    fn add(self, rhs: &NcPoly<K>) -> NcPoly<K> {
        NcPoly::add(self, rhs)
    }
}

impl<K: Coefficient> std::ops::Sub for &NcPoly<K> {
    type Output = NcPoly<K>;
    fn sub(self, rhs: &NcPoly<K>) -> NcPoly<K> {
        NcPoly::sub(self, rhs)
    }
}

impl<K: Coefficient> std::ops::Mul for &NcPoly<K> {
    type Output = NcPoly<K>;
    fn mul(self, rhs: &NcPoly<K>) -> NcPoly<K> {
        NcPoly::mul(self, rhs)
    }
}

impl<K: Coefficient> std::ops::Neg for &NcPoly<K> {
    type Output = NcPoly<K>;
    fn neg(self) -> NcPoly<K> {
        NcPoly::neg(self)
    }
}

/// Writes `coeff*word` terms joined by signs. Shared by the PBW renderer.
pub fn render_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (String, &'a Scalar)>,
{
    let mut out = String::new();
    for (i, (word, k)) in terms.into_iter().enumerate() {
        let mut s = k.to_string();
        let neg = k.is_monomial() && s.starts_with('-');
        if neg {
            s.remove(0);
        }
        let body = if word == "1" {
            if k.is_monomial() {
                s
            } else {
                format!("({s})")
            }
        } else if k.is_monomial() {
            if s == "1" {
                word
            } else {
                format!("{s}*{word}")
            }
        } else {
            format!("({s})*{word}")
        };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Terms are printed from the largest word down.
impl fmt::Display for NcPoly<Scalar> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render_terms(self.terms.iter().rev().map(|(w, k)| (w.to_string(), k)));
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qint;
    type P = NcPoly<Scalar>;

    #[test]
    fn arithmetic_basics() {
        let (a, b) = (P::g0(), P::g1());
        let ab = a.mul(&b);
        assert_eq!(ab.len(), 1);
        assert!(ab.sub(&ab).is_zero());
        let pc = a.p_commutator(&a, &Scalar::q_pow(-2));
        assert_eq!(pc.coefficient(Word::from_digits("00").unwrap()), Scalar::one() - Scalar::q_pow(-2));
        assert_eq!(a.commutator(&b), b.commutator(&a).neg());
    }

    #[test]
    fn rendering() {
        let bd = P::g0().mul(&P::g1()).neg().add(&P::g1().mul(&P::g0()).scale(&Scalar::q_pow(-2)));
        assert_eq!(bd.to_string(), "-B0*B1 + q^-2*B1*B0");
        let x = P::g1().scale(&qint(2)).add(&P::one());
        assert_eq!(x.to_string(), "(q + q^-1)*B1 + 1");
        assert_eq!(P::zero().to_string(), "0");
    }

    #[test]
    fn components_sum_back() {
        let x = P::g0().mul(&P::g1()).add(&P::g1()).add(&P::constant(Scalar::c()));
        let total = (0..=2).fold(P::zero(), |acc, d| acc.add(&x.homogeneous_component(d)));
        assert_eq!(total, x);
    }
}
