//! Word-level helpers for fixed-width bit rows.

#[inline]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub fn test(row: &[u64], i: usize) -> bool {
    row[i >> 6] >> (i & 63) & 1 == 1
}

#[inline]
pub fn set(row: &mut [u64], i: usize) {
    row[i >> 6] |= 1u64 << (i & 63);
}

#[inline]
pub fn clear(row: &mut [u64], i: usize) {
    row[i >> 6] &= !(1u64 << (i & 63));
}

#[inline]
pub fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub fn is_empty(row: &[u64]) -> bool {
    row.iter().all(|&w| w == 0)
}

/// `dst = a & b`.
#[inline]
pub fn and_into(dst: &mut [u64], a: &[u64], b: &[u64]) {
    for ((d, x), y) in dst.iter_mut().zip(a).zip(b) {
        *d = x & y;
    }
}

#[inline]
pub fn and_assign(dst: &mut [u64], other: &[u64]) {
    for (d, x) in dst.iter_mut().zip(other) {
        *d &= x;
    }
}

#[inline]
pub fn or_assign(dst: &mut [u64], other: &[u64]) {
    for (d, x) in dst.iter_mut().zip(other) {
        *d |= x;
    }
}

#[inline]
pub fn andnot_assign(dst: &mut [u64], other: &[u64]) {
    for (d, x) in dst.iter_mut().zip(other) {
        *d &= !x;
    }
}

/// True iff `a & b` has a set bit.
#[inline]
pub fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// Clears every bit at positions `<= i`.
#[inline]
pub fn clear_through(row: &mut [u64], i: usize) {
    let w = i >> 6;
    for x in row.iter_mut().take(w) {
        *x = 0;
    }
    let keep = if i & 63 == 63 { 0 } else { !0u64 << ((i & 63) + 1) };
    row[w] &= keep;
}

/// Row with the lowest `n` bits set.
pub fn full(n: usize) -> Vec<u64> {
    let mut row = vec![!0u64; words_for(n)];
    if !n.is_multiple_of(64) {
        if let Some(last) = row.last_mut() {
            *last = (1u64 << (n % 64)) - 1;
        }
    }
    row
}

/// Iterator over set positions, ascending.
pub struct Ones<'a> {
    row: &'a [u64],
    word: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.word * 64 + tz);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.cur = self.row[self.word];
        }
    }
}

pub fn ones(row: &[u64]) -> Ones<'_> {
    Ones {
        row,
        word: 0,
        cur: row.first().copied().unwrap_or(0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_walks_words_in_order() {
        let mut row = vec![0u64; 3];
        for i in [0, 5, 63, 64, 130] {
            set(&mut row, i);
        }
        assert_eq!(ones(&row).collect::<Vec<_>>(), vec![0, 5, 63, 64, 130]);
        assert_eq!(count(&row), 5);
    }

    #[test]
    fn clear_through_boundaries() {
        let mut row = full(130);
        clear_through(&mut row, 63);
        assert_eq!(ones(&row).next(), Some(64));
        let mut row = full(130);
        clear_through(&mut row, 64);
        assert_eq!(ones(&row).next(), Some(65));
        assert_eq!(count(&full(130)), 130);
    }
}
