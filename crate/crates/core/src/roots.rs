//! Positive affine roots of the rank-two affine algebra and their order.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("imaginary roots need a positive multiple of delta, got {0}")]
    NonPositiveImaginary(i64),
    #[error("unknown root family {0:?}")]
    UnknownFamily(String),
}

/// The three root families as written in labels.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Alpha0,
    Alpha1,
    Delta,
}

impl FromStr for Family {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "a0" => Ok(Family::Alpha0),
            "a1" => Ok(Family::Alpha1),
            "d" => Ok(Family::Delta),
            _ => Err(RootError::UnknownFamily(s.to_string())),
        }
    }
}

/// `Real0(n)` is `nδ+α0`, `Imag(m)` is `mδ` with `m ≥ 1`, `Real1(n)` is `nδ+α1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Root {
    Real0(u32),
    Imag(u32),
    Real1(u32),
}

impl Root {
    /// Height: total degree in the generators.
    pub fn height(self) -> usize {
        match self {
            Root::Real0(n) | Root::Real1(n) => 2 * n as usize + 1,
            Root::Imag(m) => 2 * m as usize,
        }
    }

    pub fn is_real(self) -> bool {
        !matches!(self, Root::Imag(_))
    }

    /// Index of the classical generator `A_j` this real root specializes to.
    pub fn a_index(self) -> Option<i64> {
        match self {
            Root::Real1(n) => Some(n as i64),
            Root::Real0(n) => Some(-(n as i64) - 1),
            Root::Imag(_) => None,
        }
    }

    pub fn from_a_index(j: i64) -> Root {
        if j >= 0 {
            Root::Real1(j as u32)
        } else {
            Root::Real0((-j - 1) as u32)
        }
    }

    /// Label action of `(T0Φ)^k`: real roots move `A_j ↦ A_{j-k}`,
    /// imaginary roots stay.
    pub fn transport(self, k: i64) -> Root {
        match self.a_index() {
            Some(j) => Root::from_a_index(j - k),
            None => self,
        }
    }

    /// Exchange the two real families.
    pub fn mirror(self) -> Root {
        match self {
            Root::Real0(n) => Root::Real1(n),
            Root::Real1(n) => Root::Real0(n),
            r => r,
        }
    }

    fn key(self) -> (u8, i64) {
        match self {
            Root::Real0(n) => (0, n as i64),
            Root::Imag(m) => (1, -(m as i64)),
            Root::Real1(n) => (2, -(n as i64)),
        }
    }

    /// All roots of height at most `h`, increasing.
    pub fn up_to_height(h: usize) -> Vec<Root> {
        let mut v = Vec::new();
        let mut k = 0u32;
        while 2 * (k as usize) < h {
            v.push(Root::Real0(k));
            v.push(Root::Real1(k));
            k += 1;
        }
        let mut m = 1u32;
        while 2 * m as usize <= h {
            v.push(Root::Imag(m));
            m += 1;
        }
        v.sort();
        v
    }
}

/// Resolve a label `kδ+α` allowing negative `k` for the real families.
pub fn normalize_root(family: Family, k: i64) -> Result<Root, RootError> {
    match family {
        Family::Delta => {
            if k <= 0 {
                Err(RootError::NonPositiveImaginary(k))
            } else {
                Ok(Root::Imag(k as u32))
            }
        }
        Family::Alpha0 if k >= 0 => Ok(Root::Real0(k as u32)),
        Family::Alpha0 => Ok(Root::Real1((-k - 1) as u32)),
        Family::Alpha1 if k >= 0 => Ok(Root::Real1(k as u32)),
        Family::Alpha1 => Ok(Root::Real0((-k - 1) as u32)),
    }
}

/// `kδ+α0` with the negative-index convention.
pub fn a0(k: i64) -> Root {
    normalize_root(Family::Alpha0, k).unwrap()
}

/// `kδ+α1` with the negative-index convention.
pub fn a1(k: i64) -> Root {
    normalize_root(Family::Alpha1, k).unwrap()
}

/// `mδ`; panics unless `m ≥ 1`.
pub fn d(m: i64) -> Root {
    normalize_root(Family::Delta, m).unwrap()
}

/// The PBW order: α0 family ascending, then imaginary descending, then α1
/// family descending.
impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn root_compare(a: Root, b: Root) -> Ordering {
    a.cmp(&b)
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Root::Real0(0) => write!(f, "B0"),
            Root::Real1(0) => write!(f, "B1"),
            Root::Real0(n) => write!(f, "B({n},a0)"),
            Root::Real1(n) => write!(f, "B({n},a1)"),
            Root::Imag(m) => write!(f, "B({m},d)"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_labels() {
        assert_eq!(normalize_root(Family::Alpha0, -1), Ok(Root::Real1(0)));
        assert_eq!(normalize_root(Family::Alpha1, 3), Ok(Root::Real1(3)));
        assert_eq!(normalize_root(Family::Alpha1, -2), Ok(Root::Real0(1)));
        assert!(normalize_root(Family::Delta, 0).is_err());
    }

    #[test]
    fn order_examples() {
        assert!(Root::Real0(0) < Root::Imag(1));
        assert!(Root::Imag(3) < Root::Imag(2));
        assert!(Root::Real1(4) < Root::Real1(1));
        assert!(Root::Real0(7) < Root::Imag(9));
        assert!(Root::Imag(1) < Root::Real1(9));
    }

    #[test]
    fn transport_shifts_a_index() {
        assert_eq!(Root::Real1(0).transport(1), Root::Real0(0));
        assert_eq!(Root::Real0(0).transport(1), Root::Real0(1));
        assert_eq!(Root::Real1(1).transport(1), Root::Real1(0));
        assert_eq!(Root::Imag(2).transport(5), Root::Imag(2));
        for j in -5..5 {
            assert_eq!(Root::from_a_index(j).a_index(), Some(j));
        }
    }

    #[test]
    fn heights_and_listing() {
        let r = Root::up_to_height(4);
        assert_eq!(r.len(), 6);
        assert_eq!(r[0], Root::Real0(0));
        assert_eq!(r.iter().map(|x| x.height()).max(), Some(4));
        assert_eq!(Root::Real1(3).to_string(), "B(3,a1)");
    }
}
