//! Dense univariate integer polynomials.

use super::int::Int;
use super::modp;

/// Coefficients indexed by exponent, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly(pub Vec<Int>);

impl UPoly {
    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn constant(c: Int) -> Self {
        let mut p = UPoly(vec![c]);
        p.trim();
        p
    }

    pub fn monomial(c: Int, e: usize) -> Self {
        if c.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![Int::ZERO; e + 1];
        v[e] = c;
        UPoly(v)
    }

    pub fn trim(&mut self) {
        while matches!(self.0.last(), Some(c) if c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> &Int {
        self.0.last().expect("nonzero polynomial")
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    pub fn nonzero_terms(&self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn add(&self, rhs: &UPoly) -> UPoly {
        let n = self.0.len().max(rhs.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).unwrap_or(&Int::ZERO);
            let b = rhs.0.get(i).unwrap_or(&Int::ZERO);
            v.push(a + b);
        }
        let mut p = UPoly(v);
        p.trim();
        p
    }

    pub fn sub(&self, rhs: &UPoly) -> UPoly {
        let n = self.0.len().max(rhs.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).unwrap_or(&Int::ZERO);
            let b = rhs.0.get(i).unwrap_or(&Int::ZERO);
            v.push(a - b);
        }
        let mut p = UPoly(v);
        p.trim();
        p
    }

    pub fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![Int::ZERO; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        let mut p = UPoly(v);
        p.trim();
        p
    }

    pub fn scale(&self, k: &Int) -> UPoly {
        if k.is_zero() {
            return UPoly::zero();
        }
        UPoly(self.0.iter().map(|c| c * k).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> UPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut v = vec![Int::ZERO; k];
        v.extend(self.0.iter().cloned());
        UPoly(v)
    }

    /// Divide by `x^k`; the low coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> UPoly {
        debug_assert!(self.0.iter().take(k).all(|c| c.is_zero()));
        if k >= self.0.len() {
            return UPoly::zero();
        }
        UPoly(self.0[k..].to_vec())
    }

    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for c in &self.0 {
            if c.is_zero() {
                continue;
            }
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_int(&self, k: &Int) -> UPoly {
        if k.is_one() {
            return self.clone();
        }
        UPoly(self.0.iter().map(|c| c.div_exact(k)).collect())
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_int(&c)
    }

    /// Exact quotient over Z, or `None` when `rhs` does not divide.
    pub fn div_exact(&self, rhs: &UPoly) -> Option<UPoly> {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        let db = rhs.0.len() - 1;
        if self.0.len() < rhs.0.len() {
            return None;
        }
        let mut r = self.0.clone();
        let mut quot = vec![Int::ZERO; self.0.len() - db];
        let lb = rhs.lc();
        for i in (0..quot.len()).rev() {
            let top = &r[i + db];
            if top.is_zero() {
                continue;
            }
            if !top.is_divisible_by(lb) {
                return None;
            }
            let qc = top.div_exact(lb);
            for (j, b) in rhs.0.iter().enumerate() {
                if !b.is_zero() {
                    r[i + j] = &r[i + j] - &(&qc * b);
                }
            }
            quot[i] = qc;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut q = UPoly(quot);
        q.trim();
        Some(q)
    }

    /// `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &UPoly) -> UPoly {
        let db = b.0.len() - 1;
        let lb = b.lc().clone();
        let mut r = self.clone();
        while !r.is_zero() && r.0.len() > db {
            let dr = r.0.len() - 1;
            let lr = r.lc().clone();
            let mut next = r.scale(&lb);
            for (j, c) in b.0.iter().enumerate() {
                if !c.is_zero() {
                    let idx = dr - db + j;
                    next.0[idx] = &next.0[idx] - &(&lr * c);
                }
            }
            next.trim();
            r = next;
        }
        r
    }

    pub fn reduce_mod(&self, p: u64) -> Vec<u64> {
        modp::trimmed(self.0.iter().map(|c| c.rem_u64(p)).collect())
    }

    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        let mut acc = 0u64;
        for c in self.0.iter().rev() {
            acc = modp::add(modp::mul(acc, x, p), c.rem_u64(p), p);
        }
        acc
    }
}

/// Greatest common divisor with positive leading coefficient.
pub fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_zero() {
        return b.primitive_with_content();
    }
    if b.is_zero() {
        return a.primitive_with_content();
    }
    let la = a.low().unwrap();
    let lb = b.low().unwrap();
    let shift = la.min(lb);
    let a = a.shift_down(la);
    let b = b.shift_down(lb);
    let content = a.content().gcd(&b.content());
    let mut x = a.primitive();
    let mut y = b.primitive();
    if x.0.len() < y.0.len() {
        std::mem::swap(&mut x, &mut y);
    }
    let g = if y.0.len() == 1 || modp_coprime(&x, &y) {
        UPoly::constant(Int::ONE)
    } else {
        loop {
            let r = x.pseudo_rem(&y);
            if r.is_zero() {
                break y;
            }
            if r.0.len() == 1 {
                break UPoly::constant(Int::ONE);
            }
            x = y;
            y = r.primitive();
        }
    };
    g.scale(&content).shift_up(shift)
}

/// Certifies coprimality of primitive polynomials via a single prime that
/// does not divide the leading coefficient of `a`.
fn modp_coprime(a: &UPoly, b: &UPoly) -> bool {
    let p = modp::P;
    if a.lc().rem_u64(p) == 0 {
        return false;
    }
    let g = modp::gcd(a.reduce_mod(p), b.reduce_mod(p), p);
    g.len() == 1
}

impl UPoly {
    fn primitive_with_content(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        if self.lc().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> UPoly {
        let mut u = UPoly(v.iter().map(|&x| Int::from(x)).collect());
        u.trim();
        u
    }

    #[test]
    fn gcd_of_products() {
        // (x+1)(x-2) and (x+1)(x^2+3)
        let a = p(&[1, 1]).mul(&p(&[-2, 1]));
        let b = p(&[1, 1]).mul(&p(&[3, 0, 1]));
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
        let c = a.scale(&Int::from(6)).shift_up(2);
        let d = b.scale(&Int::from(-4)).shift_up(3);
        assert_eq!(gcd(&c, &d), p(&[0, 0, 2, 2]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 1]).mul(&p(&[-2, 1]));
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[-2, 1])));
        assert_eq!(a.div_exact(&p(&[1, 2])), None);
    }
}
