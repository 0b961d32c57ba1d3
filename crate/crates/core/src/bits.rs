//! Bitmask helpers for subsets of a ground set of at most 32 elements.

/// A subset of the ground set, bit `i` set iff element `i` is present.
pub type Mask = u32;

#[inline]
pub fn full(n: usize) -> Mask {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

#[inline]
pub fn size(m: Mask) -> usize {
    m.count_ones() as usize
}

#[inline]
pub fn contains(m: Mask, i: usize) -> bool {
    m >> i & 1 == 1
}

#[inline]
pub fn bit(i: usize) -> Mask {
    1 << i
}

/// Iterates the indices of the set bits in increasing order.
pub fn elements(mut m: Mask) -> impl Iterator<Item = usize> {
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

/// Iterates all subsets of `within` in increasing numeric order.
pub fn subsets(within: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(0u32);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == within {
            None
        } else {
            Some((cur.wrapping_sub(within)) & within)
        };
        Some(cur)
    })
}

/// Iterates all `k`-subsets of `within` in increasing numeric order.
pub fn k_subsets(within: Mask, k: usize) -> impl Iterator<Item = Mask> {
    let idx: Vec<usize> = elements(within).collect();
    let n = idx.len();
    let mut comb: Option<u64> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let c = comb?;
        // Gosper's hack over positions within `idx`
        comb = if c == 0 {
            None
        } else {
            let lo = c & c.wrapping_neg();
            let r = c + lo;
            let nxt = (((r ^ c) >> 2) / lo) | r;
            if nxt >> n != 0 {
                None
            } else {
                Some(nxt)
            }
        };
        let mut m = 0;
        let mut cc = c;
        while cc != 0 {
            let j = cc.trailing_zeros() as usize;
            m |= 1 << idx[j];
            cc &= cc - 1;
        }
        Some(m)
    })
}

/// Packs the bits of `m` selected by `positions` into a dense mask: bit `j` of the
/// result is bit `positions[j]` of `m`.
#[inline]
pub fn compress(m: Mask, positions: &[usize]) -> Mask {
    let mut out = 0;
    for (j, &p) in positions.iter().enumerate() {
        out |= (m >> p & 1) << j;
    }
    out
}

/// Inverse of [`compress`].
#[inline]
pub fn expand(m: Mask, positions: &[usize]) -> Mask {
    let mut out = 0;
    for (j, &p) in positions.iter().enumerate() {
        out |= (m >> j & 1) << p;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_cover_all() {
        let s: Vec<_> = subsets(0b1010).collect();
        assert_eq!(s, vec![0, 0b10, 0b1000, 0b1010]);
        assert_eq!(subsets(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn k_subsets_ascending() {
        let s: Vec<_> = k_subsets(0b1111, 2).collect();
        assert_eq!(s, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(k_subsets(0b1011, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(k_subsets(0b1011, 3).collect::<Vec<_>>(), vec![0b1011]);
        assert!(k_subsets(0b11, 3).next().is_none());
        let s: Vec<_> = k_subsets(0b1101, 2).collect();
        assert_eq!(s, vec![0b0101, 0b1001, 0b1100]);
    }

    #[test]
    fn compress_expand_inverse() {
        let pos = [1, 3, 4];
        for m in 0..8 {
            assert_eq!(compress(expand(m, &pos), &pos), m);
        }
    }
}
