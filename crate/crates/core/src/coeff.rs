//! Exact coefficient fields for the generic algebra layers.

use crate::scalar::Scalar;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::{Debug, Display};

/// An exact field usable as coefficients of noncommutative polynomials.
///
/// Only exact types implement this: rewriting decides ideal membership by
/// testing coefficients for zero, which floating point cannot do.
pub trait Coefficient:
    Clone + PartialEq + Debug + Display + Send + Sync + Zero + One + 'static
{
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.add_ref(rhs);
    }
}

impl Coefficient for Scalar {
    fn add_ref(&self, rhs: &Self) -> Self {
        Scalar::add_ref(self, rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Scalar::sub_ref(self, rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        Scalar::mul_ref(self, rhs)
    }
    fn neg_ref(&self) -> Self {
        Scalar::neg_ref(self)
    }
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl Coefficient for BigRational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(BigRational::one() / self)
        }
    }
}
