use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Bitmask over the ground set; bit `e` stands for element `e`.
pub type Mask = u64;

pub fn full_mask(n: usize) -> Mask {
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

pub fn mask_elements(m: Mask) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| m >> i & 1 == 1)
}

pub fn mask_from(elements: &[usize]) -> Mask {
    elements.iter().fold(0, |m, &e| m | 1 << e)
}

/// Formats a mask as `{1,3}` using one-based element labels.
pub fn mask_label(m: Mask) -> String {
    let parts: Vec<String> = mask_elements(m).map(|e| (e + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
    Zero,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
            Sign::Zero => 0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::Zero => '0',
        }
    }
}

/// An element of {+,−,0}^E stored as a pair of disjoint masks.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignVector {
    plus: Mask,
    minus: Mask,
    len: u8,
}

impl SignVector {
    pub fn new(len: usize, plus: Mask, minus: Mask) -> Self {
        assert!(len <= 64, "ground set too large");
        assert_eq!(plus & minus, 0, "plus and minus sets overlap");
        assert_eq!((plus | minus) & !full_mask(len), 0, "entries beyond length");
        SignVector {
            plus,
            minus,
            len: len as u8,
        }
    }

    pub fn zero(len: usize) -> Self {
        Self::new(len, 0, 0)
    }

    pub fn from_signs(signs: &[Sign]) -> Self {
        let mut plus = 0;
        let mut minus = 0;
        for (e, s) in signs.iter().enumerate() {
            match s {
                Sign::Plus => plus |= 1 << e,
                Sign::Minus => minus |= 1 << e,
                Sign::Zero => {}
            }
        }
        Self::new(signs.len(), plus, minus)
    }

    /// Parses strings like `+-0`.
    pub fn parse(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        if chars.len() > 64 {
            return Err(Error::TooLarge(chars.len()));
        }
        let mut signs = Vec::with_capacity(chars.len());
        for c in chars {
            signs.push(match c {
                '+' => Sign::Plus,
                '-' | '−' => Sign::Minus,
                '0' => Sign::Zero,
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("unexpected character {other:?} in sign vector"),
                    })
                }
            });
        }
        Ok(Self::from_signs(&signs))
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn plus(&self) -> Mask {
        self.plus
    }

    pub fn minus(&self) -> Mask {
        self.minus
    }

    pub fn support(&self) -> Mask {
        self.plus | self.minus
    }

    pub fn zero_set(&self) -> Mask {
        full_mask(self.len()) & !self.support()
    }

    pub fn is_zero(&self) -> bool {
        self.support() == 0
    }

    pub fn is_tope_shaped(&self) -> bool {
        self.zero_set() == 0
    }

    pub fn get(&self, e: usize) -> Sign {
        if self.plus >> e & 1 == 1 {
            Sign::Plus
        } else if self.minus >> e & 1 == 1 {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn neg(&self) -> Self {
        SignVector {
            plus: self.minus,
            minus: self.plus,
            len: self.len,
        }
    }

    fn check_len(&self, other: &SignVector) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(())
    }

    /// `(L∘K)_e = L_e` if nonzero, else `K_e`.
    pub fn compose(&self, other: &SignVector) -> Result<SignVector> {
        self.check_len(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &SignVector) -> SignVector {
        let free = !self.support();
        SignVector {
            plus: self.plus | (other.plus & free),
            minus: self.minus | (other.minus & free),
            len: self.len,
        }
    }

    /// Sets all coordinates in `f` to zero.
    pub fn zero_out(&self, f: Mask) -> SignVector {
        SignVector {
            plus: self.plus & !f,
            minus: self.minus & !f,
            len: self.len,
        }
    }

    /// Restriction to a subset, keeping positions.
    pub fn restrict(&self, s: Mask) -> SignVector {
        self.zero_out(!s)
    }

    /// Coordinates where both are nonzero and opposite.
    pub fn separation(&self, other: &SignVector) -> Mask {
        (self.plus & other.minus) | (self.minus & other.plus)
    }

    /// Covector order: `self ≤ other` when `other` agrees with `self` on its support.
    pub fn le(&self, other: &SignVector) -> bool {
        self.plus & !other.plus == 0 && self.minus & !other.minus == 0
    }

    pub fn lt(&self, other: &SignVector) -> bool {
        self != other && self.le(other)
    }

    /// Flips the sign of every coordinate in `m`.
    pub fn flip(&self, m: Mask) -> SignVector {
        let keep = !m;
        SignVector {
            plus: (self.plus & keep) | (self.minus & m),
            minus: (self.minus & keep) | (self.plus & m),
            len: self.len,
        }
    }

    pub fn signs(&self) -> Vec<Sign> {
        (0..self.len()).map(|e| self.get(e)).collect()
    }
}

impl PartialOrd for SignVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical total order: lexicographic on (plus mask, minus mask).
impl Ord for SignVector {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.len, self.plus, self.minus).cmp(&(other.len, other.plus, other.minus))
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.signs().into_iter().map(Sign::symbol).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(s: &str) -> SignVector {
        SignVector::parse(s).unwrap()
    }

    #[test]
    fn composition() {
        assert_eq!(sv("0+-").compose(&sv("+-+")).unwrap(), sv("++-"));
        let l = sv("+0-");
        assert_eq!(l.compose(&l).unwrap(), l);
        // β ∘ A = B in the labelled U(2,3)
        assert_eq!(sv("-0+").compose(&sv("+++")).unwrap(), sv("-++"));
        assert!(sv("+0").compose(&sv("+")).is_err());
    }

    #[test]
    fn zeroing() {
        let a = sv("+++");
        assert_eq!(a.zero_out(0b001), sv("0++"));
        assert_eq!(a.zero_out(0), a);
        assert_eq!(a.zero_out(0b111), SignVector::zero(3));
    }

    #[test]
    fn order_and_flip() {
        assert!(sv("0+0").le(&sv("++-")));
        assert!(!sv("0-0").le(&sv("++-")));
        assert_eq!(sv("+-0").flip(0b011), sv("-+0"));
        assert_eq!(sv("+-0").neg(), sv("-+0"));
        assert_eq!(sv("+-0").zero_set(), 0b100);
    }
}
