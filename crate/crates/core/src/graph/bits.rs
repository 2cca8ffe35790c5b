//! Small helpers for `u64`-word bitsets.

#[inline]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub fn test(words: &[u64], i: usize) -> bool {
    words[i >> 6] >> (i & 63) & 1 == 1
}

#[inline]
pub fn set(words: &mut [u64], i: usize) {
    words[i >> 6] |= 1 << (i & 63);
}

#[inline]
pub fn clear(words: &mut [u64], i: usize) {
    words[i >> 6] &= !(1 << (i & 63));
}

pub fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

pub fn is_empty(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}

pub fn first(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Indices of set bits, increasing.
pub fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            }
        })
    })
}

/// Bitset with bits `0..n` set.
pub fn full(n: usize) -> Vec<u64> {
    let mut v = vec![u64::MAX; words_for(n)];
    if !n.is_multiple_of(64) {
        if let Some(last) = v.last_mut() {
            *last = (1u64 << (n % 64)) - 1;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_and_full() {
        let mut w = vec![0u64; 3];
        for i in [0, 5, 63, 64, 130] {
            set(&mut w, i);
        }
        assert_eq!(ones(&w).collect::<Vec<_>>(), vec![0, 5, 63, 64, 130]);
        assert_eq!(count(&w), 5);
        assert_eq!(first(&w), Some(0));
        clear(&mut w, 0);
        assert!(!test(&w, 0));
        assert_eq!(first(&w), Some(5));
        assert_eq!(count(&full(70)), 70);
        assert_eq!(count(&full(128)), 128);
        assert!(is_empty(&full(0)));
    }
}
