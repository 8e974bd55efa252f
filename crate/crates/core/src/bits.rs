//! Fixed-length bit strings packed into `u64` words.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    len: usize,
    words: Vec<u64>,
}

impl BitString {
    pub fn zeros(len: usize) -> Self {
        BitString { len, words: vec![0; len.div_ceil(WORD)] }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut out = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            out.set(i, b);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BitString) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Parity of the popcount of `self & other`.
    pub fn and_parity(&self, other: &BitString) -> bool {
        let ones: u32 = self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum();
        ones & 1 == 1
    }

    pub fn ones_prefix(len: usize) -> Self {
        let mut out = Self::zeros(len);
        for i in 0..len {
            out.set(i, true);
        }
        out
    }

    /// Every bit set in `self` is also set in `other`.
    pub fn is_subset_of(&self, other: &BitString) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn and_count(&self, other: &BitString) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn and_assign(&mut self, other: &BitString) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn and_not_assign(&mut self, other: &BitString) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn or_assign(&mut self, other: &BitString) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_across_word_boundary() {
        let mut b = BitString::zeros(130);
        b.set(0, true);
        b.set(64, true);
        b.set(129, true);
        assert_eq!(b.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        b.set(64, false);
        assert_eq!(b.count_ones(), 2);
    }

    #[test]
    fn and_parity_counts_overlap() {
        let a = BitString::from_bools(&[true, true, false, true]);
        let b = BitString::from_bools(&[true, false, false, true]);
        assert!(!a.and_parity(&b));
        let c = BitString::from_bools(&[true, false, false, false]);
        assert!(a.and_parity(&c));
    }
}
