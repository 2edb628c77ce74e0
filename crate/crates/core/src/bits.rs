//! Small fixed-width bit sets for the exhaustive solvers.

pub(crate) type Mask = u128;

pub(crate) const MAX_BITS: usize = 128;

#[inline]
pub(crate) fn bit(i: usize) -> Mask {
    1u128 << i
}

pub(crate) fn iter_bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) fn count(m: Mask) -> usize {
    m.count_ones() as usize
}
