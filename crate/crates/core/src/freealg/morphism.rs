use super::ncpoly::NcPoly;
use super::word::{Letter, Word};
use crate::coeff::Coefficient;
use parking_lot::Mutex;
use std::collections::HashMap;
use std::sync::Arc;

/// An algebra endomorphism of the free algebra, given by the images of the
/// two generators.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraMorphism<K> {
    images: [NcPoly<K>; 2],
}

impl<K: Coefficient> AlgebraMorphism<K> {
    /// Panics if an image is zero.
    pub fn new(image_g0: NcPoly<K>, image_g1: NcPoly<K>) -> Self {
        assert!(
            !image_g0.is_zero() && !image_g1.is_zero(),
            "morphism images must be nonzero"
        );
        AlgebraMorphism {
            images: [image_g0, image_g1],
        }
    }

    pub fn identity() -> Self {
        AlgebraMorphism::new(NcPoly::g0(), NcPoly::g1())
    }

    pub fn image(&self, l: Letter) -> &NcPoly<K> {
        &self.images[l.index()]
    }

    pub fn apply(&self, x: &NcPoly<K>) -> NcPoly<K> {
        let mut memo: HashMap<Word, NcPoly<K>> = HashMap::new();
        let mut acc: HashMap<Word, K> = HashMap::new();
        for (w, k) in x.terms() {
            let img = self.word_image(*w, &mut memo);
            for (v, c) in img.terms() {
                let p = c.mul_ref(k);
                match acc.get_mut(v) {
                    Some(e) => e.add_assign_ref(&p),
                    None => {
                        acc.insert(*v, p);
                    }
                }
            }
        }
        NcPoly::from_terms(acc)
    }

    fn word_image(&self, w: Word, memo: &mut HashMap<Word, NcPoly<K>>) -> NcPoly<K> {
        if w.is_empty() {
            return NcPoly::one();
        }
        if let Some(p) = memo.get(&w) {
            return p.clone();
        }
        let n = w.len();
        let head = self.word_image(w.prefix(n - 1), memo);
        let img = head.mul(self.image(w.letter_at(n - 1)));
        memo.insert(w, img.clone());
        img
    }

    /// `self ∘ rhs`, i.e. apply `rhs` first.
    pub fn compose(&self, rhs: &Self) -> Self {
        AlgebraMorphism::new(self.apply(&rhs.images[0]), self.apply(&rhs.images[1]))
    }
}

/// Memoized powers of a fixed morphism.
pub struct MorphismPowers<K> {
    base: AlgebraMorphism<K>,
    cache: Mutex<Vec<Arc<AlgebraMorphism<K>>>>,
}

impl<K: Coefficient> MorphismPowers<K> {
    pub fn new(base: AlgebraMorphism<K>) -> Self {
        MorphismPowers {
            base,
            cache: Mutex::new(vec![Arc::new(AlgebraMorphism::identity())]),
        }
    }

    pub fn power(&self, n: usize) -> Arc<AlgebraMorphism<K>> {
        loop {
            let (have, last) = {
                let c = self.cache.lock();
                if let Some(p) = c.get(n) {
                    return p.clone();
                }
                (c.len(), c.last().unwrap().clone())
            };
            let next = Arc::new(self.base.compose(&last));
            let mut c = self.cache.lock();
            if c.len() == have {
                c.push(next);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    type P = NcPoly<Scalar>;

    #[test]
    fn swap_is_involution() {
        let phi = AlgebraMorphism::new(P::g1(), P::g0());
        assert_eq!(phi.compose(&phi), AlgebraMorphism::identity());
        let x = P::g0().mul(&P::g1());
        assert_eq!(phi.apply(&x), P::g1().mul(&P::g0()));
    }

    #[test]
    fn powers_are_cached() {
        let f = AlgebraMorphism::new(P::g0().add(&P::g1()), P::g1());
        let pw = MorphismPowers::new(f.clone());
        assert_eq!(*pw.power(0), AlgebraMorphism::identity());
        assert_eq!(*pw.power(2), f.compose(&f));
        assert_eq!(pw.power(2).apply(&P::g0()), P::g0().add(&P::g1().scale(&Scalar::from_int(2))));
    }
}
