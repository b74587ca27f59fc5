use std::cmp::Ordering;
use std::fmt;

pub const MAX_WORD_LEN: usize = 64;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    G0,
    G1,
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::G0 => 0,
            Letter::G1 => 1,
        }
    }

    fn bit(self) -> u64 {
        match self {
            Letter::G0 => 1,
            Letter::G1 => 0,
        }
    }

    pub fn swap(self) -> Letter {
        match self {
            Letter::G0 => Letter::G1,
            Letter::G1 => Letter::G0,
        }
    }
}

/// A word of at most 64 letters packed into one machine word.
///
/// The first letter is the most significant of the `len` low bits and `g0` is
/// a set bit, so comparing `(len, bits)` numerically is exactly deglex with
/// `g0 > g1`. The packed value is its own hash key; no intern table is needed.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word {
    bits: u64,
    len: u8,
}

impl Word {
    pub const EMPTY: Word = Word { bits: 0, len: 0 };

    pub fn from_letters(letters: &[Letter]) -> Word {
        assert!(letters.len() <= MAX_WORD_LEN, "word longer than 64 letters");
        let mut bits = 0u64;
        for l in letters {
            bits = (bits << 1) | l.bit();
        }
        Word {
            bits,
            len: letters.len() as u8,
        }
    }

    pub fn letter(l: Letter) -> Word {
        Word {
            bits: l.bit(),
            len: 1,
        }
    }

    /// Parse a digit string such as `"0011"`, one digit per generator index.
    pub fn from_digits(s: &str) -> Option<Word> {
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            letters.push(match ch {
                '0' => Letter::G0,
                '1' => Letter::G1,
                _ => return None,
            });
        }
        if letters.len() > MAX_WORD_LEN {
            return None;
        }
        Some(Word::from_letters(&letters))
    }

    pub fn to_digits(self) -> String {
        self.letters().map(|l| if l == Letter::G0 { '0' } else { '1' }).collect()
    }

    pub(crate) fn raw(self) -> u64 {
        self.bits
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn letter_at(self, i: usize) -> Letter {
        debug_assert!(i < self.len());
        if (self.bits >> (self.len() - 1 - i)) & 1 == 1 {
            Letter::G0
        } else {
            Letter::G1
        }
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (0..self.len()).map(move |i| self.letter_at(i))
    }

    pub fn concat(self, rhs: Word) -> Word {
        let len = self.len() + rhs.len();
        assert!(len <= MAX_WORD_LEN, "word longer than 64 letters");
        let bits = if rhs.len == 0 {
            self.bits
        } else if rhs.len() == 64 {
            rhs.bits
        } else {
            (self.bits << rhs.len()) | rhs.bits
        };
        Word {
            bits,
            len: len as u8,
        }
    }

    /// The factor of length `k` starting at position `start`.
    pub fn subword(self, start: usize, k: usize) -> Word {
        debug_assert!(start + k <= self.len());
        if k == 0 {
            return Word::EMPTY;
        }
        let shift = self.len() - start - k;
        Word {
            bits: (self.bits >> shift) & mask(k),
            len: k as u8,
        }
    }

    pub fn prefix(self, k: usize) -> Word {
        self.subword(0, k)
    }

    pub fn suffix(self, k: usize) -> Word {
        self.subword(self.len() - k, k)
    }

    /// Number of `g0` and `g1` letters.
    pub fn multidegree(self) -> (usize, usize) {
        let ones = self.bits.count_ones() as usize;
        (ones, self.len() - ones)
    }

    /// Exchange `g0` and `g1`.
    pub fn swapped(self) -> Word {
        Word {
            bits: !self.bits & mask(self.len()),
            len: self.len,
        }
    }

    pub fn reversed(self) -> Word {
        let n = self.len();
        if n == 0 {
            return self;
        }
        Word {
            bits: self.bits.reverse_bits() >> (64 - n),
            len: self.len,
        }
    }
}

pub(crate) fn mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.len, self.bits).cmp(&(other.len, other.bits))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders as `B0*B1^2`; the empty word renders as `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let letters: Vec<Letter> = self.letters().collect();
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let mut j = i;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "B{}", letters[i].index())?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    #[test]
    fn order_is_deglex_with_g0_first() {
        let a = Word::from_letters(&[G0, G0, G0, G1]);
        let b = Word::from_letters(&[G0, G0, G1, G0]);
        let c = Word::from_letters(&[G0, G0, G0]);
        assert!(a > b);
        assert!(b > c);
        assert!(Word::letter(G0) > Word::letter(G1));
        assert!(Word::letter(G1) > Word::EMPTY);
    }

    #[test]
    fn factors_and_concat() {
        let w = Word::from_digits("0110").unwrap();
        assert_eq!(w.subword(1, 2), Word::from_digits("11").unwrap());
        assert_eq!(w.prefix(1).concat(w.suffix(3)), w);
        assert_eq!(w.to_digits(), "0110");
        assert_eq!(w.swapped().to_digits(), "1001");
        assert_eq!(Word::from_digits("001").unwrap().reversed().to_digits(), "100");
        assert_eq!(w.to_string(), "B0*B1^2*B0");
        assert_eq!(w.multidegree(), (2, 2));
    }

    #[test]
    fn full_length_words() {
        let long = Word::from_letters(&[G0; 64]);
        assert_eq!(long.len(), 64);
        assert_eq!(Word::EMPTY.concat(long), long);
        assert_eq!(long.suffix(64), long);
    }
}
