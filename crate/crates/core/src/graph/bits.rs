//! Word-level helpers for fixed-width bit rows.

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

#[inline]
pub(crate) fn test(row: &[u64], v: usize) -> bool {
    row[v >> 6] >> (v & 63) & 1 == 1
}

#[inline]
pub(crate) fn set(row: &mut [u64], v: usize) {
    row[v >> 6] |= 1 << (v & 63);
}

#[inline]
pub(crate) fn clear(row: &mut [u64], v: usize) {
    row[v >> 6] &= !(1 << (v & 63));
}

#[inline]
pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

/// Iterates the set bits of a row in increasing order.
pub(crate) struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        Ones {
            words,
            index: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}
