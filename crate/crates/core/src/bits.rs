//! Small helpers for `u64` vertex sets.

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Mask of all bits strictly above `v`.
#[inline]
pub fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !low_mask(v + 1)
    }
}

pub fn to_vec(mask: u64) -> Vec<usize> {
    Bits(mask).collect()
}

pub fn from_slice(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | bit(v))
}
