//! Dense fixed-universe bit-set.
//!
//! Bits past `len` in the last word are always zero, so derived equality and
//! population counts are exact.

use alloc::vec;
use alloc::vec::Vec;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet { words: vec![0; len.div_ceil(WORD)], len }
    }

    pub fn full(len: usize) -> Self {
        let mut s = BitSet { words: vec![!0; len.div_ceil(WORD)], len };
        s.trim();
        s
    }

    /// Builds a set from indices; returns the first out-of-range index on failure.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, it: I) -> Result<Self, usize> {
        let mut s = BitSet::new(len);
        for i in it {
            if i >= len {
                return Err(i);
            }
            s.insert(i);
        }
        Ok(s)
    }

    /// Size of the universe.
    #[inline]
    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] &= !(1 << (i % WORD));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn iter(&self) -> Ones<'_> {
        Ones { words: &self.words, idx: 0, cur: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.len == other.len && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// ORs bits `src[src_off .. src_off + n]` into `self[dst_off .. dst_off + n]`.
    pub fn or_range_from(&mut self, dst_off: usize, src: &BitSet, src_off: usize, n: usize) {
        debug_assert!(dst_off + n <= self.len && src_off + n <= src.len);
        let mut done = 0;
        while done < n {
            let take = (n - done).min(WORD);
            let mut chunk = read_bits(&src.words, src_off + done);
            if take < WORD {
                chunk &= (1u64 << take) - 1;
            }
            write_or_bits(&mut self.words, dst_off + done, chunk);
            done += take;
        }
    }

    fn trim(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

// 64 bits starting at `off`; bits past the end read as zero.
#[inline]
fn read_bits(words: &[u64], off: usize) -> u64 {
    let (w, s) = (off / WORD, off % WORD);
    let lo = words.get(w).copied().unwrap_or(0);
    if s == 0 {
        lo
    } else {
        let hi = words.get(w + 1).copied().unwrap_or(0);
        (lo >> s) | (hi << (WORD - s))
    }
}

#[inline]
fn write_or_bits(words: &mut [u64], off: usize, chunk: u64) {
    let (w, s) = (off / WORD, off % WORD);
    words[w] |= chunk << s;
    if s != 0 {
        let spill = chunk >> (WORD - s);
        if spill != 0 {
            words[w + 1] |= spill;
        }
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + t);
            }
            self.idx += 1;
            self.cur = *self.words.get(self.idx)?;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_membership() {
        let mut s = BitSet::new(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert_eq!(s.count(), 3);
        s.remove(64);
        assert!(!s.contains(64));
        assert!(!s.contains(500));
        assert_eq!(BitSet::full(70).count(), 70);
        assert!(BitSet::from_indices(4, [5]).is_err());
    }

    #[test]
    fn range_copy_matches_bitwise() {
        let src = BitSet::from_indices(200, (0..200).filter(|i| i % 3 == 0 || i % 7 == 1)).unwrap();
        for &(d, s, n) in &[(0, 0, 200), (5, 17, 130), (63, 1, 64), (64, 63, 65), (130, 0, 70), (1, 199, 1)] {
            let mut dst = BitSet::new(200);
            dst.or_range_from(d, &src, s, n);
            let expect: Vec<usize> = (0..n).filter(|&i| src.contains(s + i)).map(|i| d + i).collect();
            assert_eq!(dst.to_vec(), expect, "d={d} s={s} n={n}");
        }
    }
}
