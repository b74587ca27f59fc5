//! Arithmetic modulo the Mersenne prime 2^61 - 1, used only to certify
//! coprimality before falling back to exact gcd computations.

pub const P: u64 = (1 << 61) - 1;

pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64, p: u64) -> u64 {
    pow(a, p - 2, p)
}

pub fn trimmed(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Monic gcd over F_p; an empty vector stands for zero.
pub fn gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    a = trimmed(a);
    b = trimmed(b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&l) = a.last() {
        let li = inv(l, p);
        for c in a.iter_mut() {
            *c = mul(*c, li, p);
        }
    }
    a
}

fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lbi = inv(b[db], p);
    while r.len() > db {
        let top = *r.last().unwrap();
        if top == 0 {
            r.pop();
            continue;
        }
        let f = mul(top, lbi, p);
        let off = r.len() - 1 - db;
        for (j, &c) in b.iter().enumerate() {
            r[off + j] = sub(r[off + j], mul(f, c, p), p);
        }
        r.pop();
    }
    trimmed(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_mod_p() {
        // (x+1)(x+2) and (x+1)(x+3)
        let a = vec![2, 3, 1];
        let b = vec![3, 4, 1];
        assert_eq!(gcd(a, b, P), vec![1, 1]);
        assert_eq!(gcd(vec![1, 1], vec![2, 1], P), vec![1]);
    }
}
